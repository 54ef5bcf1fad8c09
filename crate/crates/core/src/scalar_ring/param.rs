use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRat;
use super::poly::{gcd, BiPoly};
use crate::error::{EngineError, Result};

/// Exact rational function in the formal parameters `a0, b0` with ℚ(i)
/// coefficients.
///
/// Always canonical: numerator and denominator are coprime, the denominator
/// is monic in lex order, and zero is `0/1`. Structural equality therefore
/// coincides with equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamScalar {
    num: BiPoly,
    den: BiPoly,
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(BiPoly::constant(GaussRat::from_int(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_gauss(GaussRat::from_frac(n, d))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_gauss(GaussRat::real(r))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self {
            num: p,
            den: BiPoly::one(),
        }
    }

    /// The imaginary unit `i = √−1`.
    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// The formal parameter `a0`.
    pub fn a0() -> Self {
        Self::from_poly(BiPoly::a0())
    }

    /// The formal parameter `b0`.
    pub fn b0() -> Self {
        Self::from_poly(BiPoly::b0())
    }

    /// `num / den` in canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(EngineError::DegenerateScalar);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an element of ℚ(i), if it does not depend on `a0, b0`.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn conj_coefficients(&self) -> Self {
        let conj = |p: &BiPoly| BiPoly::from_terms(p.terms().iter().map(|(e, c)| (*e, c.conj())));
        Self::normalize(conj(&self.num), conj(&self.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(EngineError::DegenerateScalar);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact evaluation at `a0 = a, b0 = b`.
    ///
    /// Rejects `a·b = 0` (the operator family requires `a0 b0 ≠ 0`).
    pub fn eval(&self, a: &GaussRat, b: &GaussRat) -> Result<GaussRat> {
        if a.is_zero() || b.is_zero() {
            return Err(EngineError::DegenerateParameters);
        }
        let d = self.den.eval(a, b);
        if d.is_zero() {
            return Err(EngineError::PoleAtSample);
        }
        Ok(&self.num.eval(a, b) / &d)
    }

    /// Substitutes `a0 := a, b0 := b` where `a, b` are themselves rational
    /// functions of `(a0, b0)`. `specialize(&b0, &b0)` restricts to the
    /// diagonal `a0 = b0`.
    pub fn specialize(&self, a: &ParamScalar, b: &ParamScalar) -> Result<ParamScalar> {
        let subst = |p: &BiPoly| -> ParamScalar {
            let mut acc = ParamScalar::zero();
            for ((i, j), c) in p.terms() {
                let term = &(&a.pow(*i) * &b.pow(*j)) * &ParamScalar::from_gauss(c.clone());
                acc = &acc + &term;
            }
            acc
        };
        let d = subst(&self.den);
        if d.is_zero() {
            return Err(EngineError::PoleAtSample);
        }
        subst(&self.num).checked_div(&d)
    }

    /// Canonical text form, `P` or `(P) / (Q)`, using `a0`, `b0`, `i`.
    pub fn to_text(&self) -> String {
        super::text::format_param(self)
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::text::parse_param(s)
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<GaussRat> for ParamScalar {
    fn from(c: GaussRat) -> Self {
        Self::from_gauss(c)
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return ParamScalar {
                    num,
                    den: self.den.clone(),
                };
            }
            return ParamScalar::normalize(num, self.den.clone());
        }
        // with one side polynomial the sum is already reduced
        if self.den.is_one() {
            return ParamScalar {
                num: self.num.mul(&rhs.den).add(&rhs.num),
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return ParamScalar {
                num: rhs.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &rhs.den);
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&rhs.num.mul(&d1));
        let den = self.den.mul(&d2);
        ParamScalar::normalize(num, den)
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() || rhs.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ParamScalar {
                num: self.num.mul(&rhs.num),
                den: BiPoly::one(),
            };
        }
        let cross = |n: &BiPoly, d: &BiPoly| -> (BiPoly, BiPoly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (n1, d2) = cross(&self.num, &rhs.den);
        let (n2, d1) = cross(&rhs.num, &self.den);
        // products and quotients of monic polynomials stay monic
        ParamScalar {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }
}

impl<'a> Div<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn div(self, rhs: &ParamScalar) -> ParamScalar {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for ParamScalar {
    fn sum<I: Iterator<Item = ParamScalar>>(iter: I) -> Self {
        iter.fold(ParamScalar::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ParamScalar {
        ParamScalar::a0()
    }
    fn b() -> ParamScalar {
        ParamScalar::b0()
    }

    #[test]
    fn difference_of_squares_over_difference() {
        let x = &(&a().pow(2) - &b().pow(2)) / &(&a() - &b());
        assert_eq!(x, &a() + &b());
        assert!(x.is_polynomial());
    }

    #[test]
    fn quartic_vanishes_on_diagonal() {
        let x = &a().pow(4) - &b().pow(4);
        assert!(x.specialize(&b(), &b()).unwrap().is_zero());
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        assert_eq!(&ParamScalar::i() * &ParamScalar::i(), ParamScalar::from_int(-1));
    }

    #[test]
    fn evaluation_examples() {
        let one = GaussRat::one();
        let half_sum = &(&a() + &b()) / &ParamScalar::from_int(2);
        assert_eq!(half_sum.eval(&one, &one).unwrap(), GaussRat::one());
        let q = &a().pow(4) - &b().pow(4);
        assert_eq!(q.eval(&GaussRat::from_int(2), &one).unwrap(), GaussRat::from_int(15));
        let pole = ParamScalar::one().checked_div(&(&a() - &b())).unwrap();
        assert_eq!(pole.eval(&one, &one), Err(EngineError::PoleAtSample));
        assert_eq!(
            q.eval(&GaussRat::zero(), &one),
            Err(EngineError::DegenerateParameters)
        );
    }

    #[test]
    fn division_by_zero_is_degenerate() {
        let z = &a() - &a();
        assert_eq!(a().checked_div(&z), Err(EngineError::DegenerateScalar));
        assert_eq!(
            ParamScalar::new(BiPoly::one(), BiPoly::zero()),
            Err(EngineError::DegenerateScalar)
        );
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = &ParamScalar::from_int(3) / &(&ParamScalar::from_int(2) * &(&a() + &b()));
        assert_eq!(x.denominator().leading().unwrap().1, GaussRat::one());
        let y = &ParamScalar::from_frac(3, 2) / &(&a() + &b());
        assert_eq!(x, y);
    }
}
