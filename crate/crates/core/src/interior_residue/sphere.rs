use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::scalar_ring::{GaussRat, ParamScalar};
use crate::symbol_calculus::{XiPoly, NVARS};

/// `coeff · π^pi_power`, exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereValue {
    #[serde(with = "crate::report::param_text")]
    pub coeff: ParamScalar,
    pub pi_power: u32,
}

impl SphereValue {
    pub fn new(coeff: ParamScalar, pi_power: u32) -> Self {
        Self { coeff, pi_power }
    }

    pub fn zero(pi_power: u32) -> Self {
        Self::new(ParamScalar::zero(), pi_power)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.pi_power, other.pi_power, "adding different powers of pi");
        Self::new(&self.coeff + &other.coeff, self.pi_power)
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        Self::new(&self.coeff * s, self.pi_power)
    }

    pub fn to_text(&self) -> String {
        crate::scalar_ring::text::format_with_pi(&self.coeff, self.pi_power)
    }

    pub fn eval(&self, a: &GaussRat, b: &GaussRat) -> Result<SphereValue> {
        Ok(Self::new(self.coeff.eval(a, b)?.into(), self.pi_power))
    }
}

/// `Γ(k/2)` as `(r, s)` meaning `r · √π^s`, `s ∈ {0, 1}`.
fn gamma_half(k: u32) -> (BigRational, u32) {
    assert!(k > 0);
    let (mut x, mut r, s) = if k % 2 == 0 {
        (2u32, BigRational::one(), 0)
    } else {
        (1u32, BigRational::one(), 1)
    };
    // Γ(x/2 + 1) = (x/2) Γ(x/2)
    while x < k {
        r *= BigRational::new(BigInt::from(x), BigInt::from(2));
        x += 2;
    }
    (r, s)
}

/// `∫_{S^{n-1}} ξ^α dσ = 2 ∏Γ(βᵢ) / Γ(Σβᵢ)`, `βᵢ = (αᵢ + 1)/2`; zero if any
/// exponent is odd.
pub fn monomial_sphere_integral(exps: &[u32]) -> (BigRational, u32) {
    let n = exps.len() as u32;
    let pi_power = n / 2;
    if exps.iter().any(|e| e % 2 == 1) {
        return (BigRational::from_integer(0.into()), pi_power);
    }
    let mut r = BigRational::from_integer(2.into());
    let mut sqrt_pi = 0u32;
    for &e in exps {
        let (g, s) = gamma_half(e + 1);
        r *= g;
        sqrt_pi += s;
    }
    let (g, s) = gamma_half(exps.iter().sum::<u32>() + n);
    r /= g;
    debug_assert_eq!(sqrt_pi - s, 2 * pi_power);
    (r, pi_power)
}

/// Integral over the unit sphere in the first `nvars` variables of ξ.
pub fn sphere_integrate(nvars: usize, p: &XiPoly) -> Result<SphereValue> {
    assert!((1..=NVARS).contains(&nvars));
    let pi_power = nvars as u32 / 2;
    let mut acc = ParamScalar::zero();
    for (m, c) in p.terms() {
        if m[nvars..].iter().any(|&e| e > 0) {
            return Err(EngineError::Dimension(format!(
                "polynomial depends on variables beyond the first {nvars}"
            )));
        }
        let exps: Vec<u32> = m[..nvars].iter().map(|&e| e as u32).collect();
        let (r, _) = monomial_sphere_integral(&exps);
        if r != BigRational::from_integer(0.into()) {
            acc = &acc + &(c * &ParamScalar::from_rational(r));
        }
    }
    Ok(SphereValue::new(acc, pi_power))
}

/// Integral over S³ ⊂ ℝ⁴; every monomial gives a rational multiple of π².
pub fn sphere3_integrate(p: &XiPoly) -> SphereValue {
    sphere_integrate(4, p).expect("four variables")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn volumes() {
        assert_eq!(monomial_sphere_integral(&[0, 0, 0, 0]), (rat(2, 1), 2));
        assert_eq!(monomial_sphere_integral(&[0, 0, 0]), (rat(4, 1), 1));
        assert_eq!(monomial_sphere_integral(&[0, 0]), (rat(2, 1), 1));
    }

    #[test]
    fn second_moments() {
        assert_eq!(monomial_sphere_integral(&[2, 0, 0, 0]), (rat(1, 2), 2));
        assert_eq!(monomial_sphere_integral(&[2, 0, 0]), (rat(4, 3), 1));
        assert_eq!(monomial_sphere_integral(&[1, 1, 0, 0]).0, rat(0, 1));
    }

    #[test]
    fn fourth_moments_on_s3() {
        // ∫ξ₁⁴ = 3·2π²/24, ∫ξ₁²ξ₂² = 2π²/24
        assert_eq!(monomial_sphere_integral(&[4, 0, 0, 0]).0, rat(1, 4));
        assert_eq!(monomial_sphere_integral(&[2, 2, 0, 0]).0, rat(1, 12));
    }
}
