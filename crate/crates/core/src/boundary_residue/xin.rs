use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{EngineError, Result};
use crate::fiber_algebra::FiberEndo;
use crate::scalar_ring::{GaussRat, ParamScalar};
use crate::symbol_calculus::{EndoPoly, XiPoly};

/// Coefficient types a rational function of ξₙ may carry.
pub trait XiCoeff: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn coeff_is_zero(&self) -> bool;
    fn coeff_add(&self, rhs: &Self) -> Self;
    fn coeff_scale(&self, g: &GaussRat) -> Self;
    fn coeff_mul(&self, rhs: &Self) -> Self;
}

impl XiCoeff for ParamScalar {
    fn zero_like(&self) -> Self {
        ParamScalar::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn coeff_scale(&self, g: &GaussRat) -> Self {
        self.scale(g)
    }
    fn coeff_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl XiCoeff for FiberEndo {
    fn zero_like(&self) -> Self {
        FiberEndo::zero(self.dim())
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn coeff_scale(&self, g: &GaussRat) -> Self {
        self.scale_gauss(g)
    }
    fn coeff_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl XiCoeff for EndoPoly {
    fn zero_like(&self) -> Self {
        EndoPoly::zero(self.dim())
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn coeff_scale(&self, g: &GaussRat) -> Self {
        self.map(|m| m.scale_gauss(g))
    }
    fn coeff_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl XiCoeff for XiPoly {
    fn zero_like(&self) -> Self {
        XiPoly::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn coeff_scale(&self, g: &GaussRat) -> Self {
        self.map_coeffs(|c| c.scale(g))
    }
    fn coeff_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

/// The two admissible poles `ξₙ = +i` and `ξₙ = −i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pole {
    Plus,
    Minus,
}

impl Pole {
    pub fn value(self) -> GaussRat {
        match self {
            Pole::Plus => GaussRat::i(),
            Pole::Minus => -GaussRat::i(),
        }
    }

    fn other(self) -> Pole {
        match self {
            Pole::Plus => Pole::Minus,
            Pole::Minus => Pole::Plus,
        }
    }
}

fn binom(n: u32, k: u32) -> GaussRat {
    let mut r = GaussRat::one();
    for j in 0..k {
        r = &r * &GaussRat::from_frac((n - j) as i64, (j + 1) as i64);
    }
    r
}

/// Coefficients of `(t − i)^p (t + i)^q`, constant term first.
fn denominator(p: u32, q: u32) -> Vec<GaussRat> {
    let mut d = vec![GaussRat::one()];
    let times = |root: GaussRat, d: &mut Vec<GaussRat>| {
        let mut out = vec![GaussRat::zero(); d.len() + 1];
        for (k, c) in d.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= &(c * &root);
        }
        *d = out;
    };
    for _ in 0..p {
        times(GaussRat::i(), &mut d);
    }
    for _ in 0..q {
        times(-GaussRat::i(), &mut d);
    }
    d
}

/// Rational function of `t = ξₙ` with poles only at `±i`, kept in
/// partial-fraction form:
/// `Σ poly[k] tᵏ + Σ pole[(p, k)] / (t − p)ᵏ`.
#[derive(Clone, Debug, PartialEq)]
pub struct XiNRational<C: XiCoeff> {
    zero: C,
    poly: BTreeMap<u32, C>,
    poles: BTreeMap<(Pole, u32), C>,
}

impl<C: XiCoeff> XiNRational<C> {
    pub fn zero(zero: C) -> Self {
        Self {
            zero: zero.zero_like(),
            poly: BTreeMap::new(),
            poles: BTreeMap::new(),
        }
    }

    pub fn polynomial(zero: C, coeffs: Vec<C>) -> Self {
        let mut r = Self::zero(zero);
        for (k, c) in coeffs.into_iter().enumerate() {
            r.add_poly(k as u32, c);
        }
        r
    }

    /// `c / (t − pole)^k`.
    pub fn pole_term(pole: Pole, k: u32, c: C) -> Self {
        assert!(k > 0);
        let mut r = Self::zero(c.zero_like());
        r.add_pole(pole, k, c);
        r
    }

    /// `Σ num[k] tᵏ / ((t − i)^p (t + i)^q)` in partial-fraction form.
    pub fn from_fraction(zero: C, num: &[C], p: u32, q: u32) -> Self {
        let mut r = Self::zero(zero);
        let d = denominator(p, q);
        let dd = d.len() - 1;
        // polynomial part by long division; the denominator is monic
        let mut rem: Vec<C> = num.to_vec();
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem.pop().unwrap();
            if c.coeff_is_zero() {
                continue;
            }
            let shift = top - dd;
            for (j, dj) in d.iter().enumerate().take(dd) {
                rem[shift + j] = rem[shift + j].coeff_add(&c.coeff_scale(&-dj));
            }
            r.add_poly(shift as u32, c);
        }
        for (pole, mult, other_mult) in [(Pole::Plus, p, q), (Pole::Minus, q, p)] {
            if mult == 0 {
                continue;
            }
            let z = pole.value();
            // Taylor coefficients of rem(z + s)
            let shifted: Vec<C> = (0..mult)
                .map(|m| {
                    let mut acc = r.zero.clone();
                    for (k, c) in rem.iter().enumerate().skip(m as usize) {
                        if c.coeff_is_zero() {
                            continue;
                        }
                        let w = &binom(k as u32, m) * &z.pow(k as u32 - m);
                        acc = acc.coeff_add(&c.coeff_scale(&w));
                    }
                    acc
                })
                .collect();
            // (s + z − z̄)^{−other} = Σ binom(−other, m) (z − z̄)^{−other−m} sᵐ
            let gap = &z - &pole.other().value();
            let weights: Vec<GaussRat> = (0..mult)
                .map(|m| {
                    if other_mult == 0 {
                        return if m == 0 { GaussRat::one() } else { GaussRat::zero() };
                    }
                    let b = binom(other_mult + m - 1, m);
                    let sign = if m % 2 == 0 { b } else { -b };
                    &sign * &gap.pow(other_mult + m).inv().unwrap()
                })
                .collect();
            for m in 0..mult as usize {
                let mut g = r.zero.clone();
                for a in 0..=m {
                    g = g.coeff_add(&shifted[a].coeff_scale(&weights[m - a]));
                }
                r.add_pole(pole, mult - m as u32, g);
            }
        }
        r
    }

    fn add_poly(&mut self, k: u32, c: C) {
        if c.coeff_is_zero() {
            return;
        }
        let v = match self.poly.remove(&k) {
            None => c,
            Some(old) => old.coeff_add(&c),
        };
        if !v.coeff_is_zero() {
            self.poly.insert(k, v);
        }
    }

    fn add_pole(&mut self, pole: Pole, k: u32, c: C) {
        if c.coeff_is_zero() {
            return;
        }
        let v = match self.poles.remove(&(pole, k)) {
            None => c,
            Some(old) => old.coeff_add(&c),
        };
        if !v.coeff_is_zero() {
            self.poles.insert((pole, k), v);
        }
    }

    pub fn zero_coeff(&self) -> &C {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.poles.is_empty()
    }

    pub fn poly_part(&self) -> &BTreeMap<u32, C> {
        &self.poly
    }

    pub fn pole_terms(&self) -> &BTreeMap<(Pole, u32), C> {
        &self.poles
    }

    pub fn pole_coeff(&self, pole: Pole, k: u32) -> C {
        self.poles
            .get(&(pole, k))
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn max_order(&self, pole: Pole) -> u32 {
        self.poles
            .keys()
            .filter(|(p, _)| *p == pole)
            .map(|(_, k)| *k)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.poly {
            out.add_poly(*k, c.clone());
        }
        for ((p, k), c) in &rhs.poles {
            out.add_pole(*p, *k, c.clone());
        }
        out
    }

    pub fn scale(&self, g: &GaussRat) -> Self {
        self.map(self.zero.clone(), |c| c.coeff_scale(g))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&GaussRat::from_int(-1)))
    }

    /// Applies a linear map to every coefficient.
    pub fn map<D: XiCoeff>(&self, zero: D, f: impl Fn(&C) -> D) -> XiNRational<D> {
        let mut out = XiNRational::zero(zero);
        for (k, c) in &self.poly {
            out.add_poly(*k, f(c));
        }
        for ((p, k), c) in &self.poles {
            out.add_pole(*p, *k, f(c));
        }
        out
    }

    /// `(numerator, p, q)` with the function equal to
    /// `numerator(t) / ((t − i)^p (t + i)^q)`.
    pub fn to_fraction(&self) -> (Vec<C>, u32, u32) {
        let p = self.max_order(Pole::Plus);
        let q = self.max_order(Pole::Minus);
        let d = denominator(p, q);
        let mut num: Vec<C> = Vec::new();
        let add_at = |num: &mut Vec<C>, k: usize, c: C| {
            while num.len() <= k {
                num.push(self.zero.clone());
            }
            num[k] = num[k].coeff_add(&c);
        };
        for (k, c) in &self.poly {
            for (j, dj) in d.iter().enumerate() {
                add_at(&mut num, *k as usize + j, c.coeff_scale(dj));
            }
        }
        for ((pole, k), c) in &self.poles {
            let (pp, qq) = match pole {
                Pole::Plus => (p - k, q),
                Pole::Minus => (p, q - k),
            };
            for (j, dj) in denominator(pp, qq).iter().enumerate() {
                add_at(&mut num, j, c.coeff_scale(dj));
            }
        }
        while num.last().is_some_and(|c| c.coeff_is_zero()) {
            num.pop();
        }
        (num, p, q)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (na, pa, qa) = self.to_fraction();
        let (nb, pb, qb) = rhs.to_fraction();
        let mut num: Vec<C> = vec![self.zero.clone(); (na.len() + nb.len()).max(1)];
        for (i, a) in na.iter().enumerate() {
            if a.coeff_is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if b.coeff_is_zero() {
                    continue;
                }
                num[i + j] = num[i + j].coeff_add(&a.coeff_mul(b));
            }
        }
        Self::from_fraction(self.zero.clone(), &num, pa + pb, qa + qb)
    }

    /// Termwise `d/dξₙ`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.zero.clone());
        for (k, c) in &self.poly {
            if *k > 0 {
                out.add_poly(k - 1, c.coeff_scale(&GaussRat::from_int(*k as i64)));
            }
        }
        for ((p, k), c) in &self.poles {
            out.add_pole(*p, k + 1, c.coeff_scale(&GaussRat::from_int(-(*k as i64))));
        }
        out
    }

    /// `π⁺`: the part analytic in the lower half-plane, i.e. the terms with
    /// poles at `+i`.
    pub fn pi_plus(&self) -> Self {
        let mut out = Self::zero(self.zero.clone());
        for ((p, k), c) in &self.poles {
            if *p == Pole::Plus {
                out.add_pole(*p, *k, c.clone());
            }
        }
        out
    }

    /// `∫_ℝ f(ξₙ) dξₙ / π`, closing the contour in the upper half-plane:
    /// `2i · Res_{+i}`.
    pub fn integrate_real(&self) -> Result<C> {
        if !self.poly.is_empty() {
            return Err(EngineError::NonIntegrable("nonzero polynomial part".into()));
        }
        let r_plus = self.pole_coeff(Pole::Plus, 1);
        let r_minus = self.pole_coeff(Pole::Minus, 1);
        if !r_plus.coeff_add(&r_minus).coeff_is_zero() {
            return Err(EngineError::NonIntegrable(
                "integrand decays only like 1/xi_n".into(),
            ));
        }
        Ok(r_plus.coeff_scale(&(&GaussRat::from_int(2) * &GaussRat::i())))
    }
}

impl XiNRational<ParamScalar> {
    /// Numeric value at a real point, for coefficients free of `a0, b0`.
    pub fn eval_real(&self, t: f64) -> Option<(f64, f64)> {
        let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let cinv = |a: (f64, f64)| {
            let n = a.0 * a.0 + a.1 * a.1;
            (a.0 / n, -a.1 / n)
        };
        let mut acc = (0.0, 0.0);
        for (k, c) in &self.poly {
            let v = c.as_constant()?.to_f64_pair();
            let p = t.powi(*k as i32);
            acc = (acc.0 + v.0 * p, acc.1 + v.1 * p);
        }
        for ((pole, k), c) in &self.poles {
            let v = c.as_constant()?.to_f64_pair();
            let z = match pole {
                Pole::Plus => (t, -1.0),
                Pole::Minus => (t, 1.0),
            };
            let mut d = (1.0, 0.0);
            for _ in 0..*k {
                d = cmul(d, z);
            }
            let term = cmul(v, cinv(d));
            acc = (acc.0 + term.0, acc.1 + term.1);
        }
        Some(acc)
    }

    /// Text `(N(xn)) / ((1 + xn^2)^k)` or with separate pole factors.
    pub fn to_text(&self) -> String {
        let (num, p, q) = self.to_fraction();
        let mut terms = Vec::new();
        for (k, c) in num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "xn".to_string(),
                _ => format!("xn^{k}"),
            };
            let coeff = c.to_text();
            let simple = c.is_polynomial() && c.numerator().terms().len() == 1;
            terms.push(match (var.is_empty(), c.is_one(), simple) {
                (true, _, _) => coeff,
                (false, true, _) => var,
                (false, false, true) => format!("{coeff}*{var}"),
                (false, false, false) => format!("({coeff})*{var}"),
            });
        }
        let n = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        let den = match (p, q) {
            (0, 0) => return n,
            (p, q) if p == q => {
                if p == 1 {
                    "1 + xn^2".to_string()
                } else {
                    format!("(1 + xn^2)^{p}")
                }
            }
            (p, q) => {
                let f = |s: &str, k: u32| match k {
                    0 => None,
                    1 => Some(format!("(xn {s} i)")),
                    _ => Some(format!("(xn {s} i)^{k}")),
                };
                [f("-", p), f("+", q)]
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>()
                    .join("*")
            }
        };
        format!("({n}) / ({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ParamScalar {
        ParamScalar::from_int(n)
    }

    fn one_over_1pt2() -> XiNRational<ParamScalar> {
        XiNRational::from_fraction(s(0), &[s(1)], 1, 1)
    }

    #[test]
    fn worked_projections() {
        let plus = XiNRational::pole_term(Pole::Plus, 1, s(1));
        assert_eq!(plus.pi_plus(), plus);
        let minus = XiNRational::pole_term(Pole::Minus, 1, s(1));
        assert!(minus.pi_plus().is_zero());
        let want = XiNRational::pole_term(Pole::Plus, 1, ParamScalar::from_gauss(GaussRat::i().scale(&num_rational::BigRational::new((-1).into(), 2.into()))));
        assert_eq!(one_over_1pt2().pi_plus(), want);
    }

    #[test]
    fn arctangent_integrals() {
        assert_eq!(one_over_1pt2().integrate_real().unwrap(), s(1));
        let sq = XiNRational::from_fraction(s(0), &[s(1)], 2, 2);
        assert_eq!(sq.integrate_real().unwrap(), ParamScalar::from_frac(1, 2));
        let odd = XiNRational::from_fraction(s(0), &[s(0), s(1)], 2, 2);
        assert!(odd.integrate_real().unwrap().is_zero());
    }

    #[test]
    fn slow_decay_rejected() {
        let f = XiNRational::from_fraction(s(0), &[s(0), s(1)], 1, 1);
        assert!(matches!(f.integrate_real(), Err(EngineError::NonIntegrable(_))));
        let g = XiNRational::polynomial(s(0), vec![s(1)]);
        assert!(matches!(g.integrate_real(), Err(EngineError::NonIntegrable(_))));
    }

    #[test]
    fn fraction_roundtrip_and_product() {
        let f = XiNRational::from_fraction(s(0), &[s(3), s(-1), s(0), s(0), s(2)], 2, 1);
        let (num, p, q) = f.to_fraction();
        assert_eq!(XiNRational::from_fraction(s(0), &num, p, q), f);
        let g = one_over_1pt2();
        let prod = g.mul(&g);
        assert_eq!(prod, XiNRational::from_fraction(s(0), &[s(1)], 2, 2));
    }

    #[test]
    fn derivative_of_inverse_square() {
        // d/dt (1+t²)⁻¹ = −2t (1+t²)⁻²
        let d = one_over_1pt2().derivative();
        assert_eq!(d, XiNRational::from_fraction(s(0), &[s(0), s(-2)], 2, 2));
        assert_eq!(d.to_text(), "(-2*xn) / ((1 + xn^2)^2)");
    }
}
