use std::collections::BTreeMap;

use crate::fiber_algebra::{Covector, FiberEndo};
use crate::scalar_ring::ParamScalar;

/// Number of cotangent variables ξ₁..ξ₄.
pub const NVARS: usize = 4;

/// Exponent vector of a ξ-monomial.
pub type XiMono = [u8; NVARS];

pub fn mono_degree(m: &XiMono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

pub fn mono_mul(a: &XiMono, b: &XiMono) -> XiMono {
    let mut out = [0u8; NVARS];
    for k in 0..NVARS {
        out[k] = a[k] + b[k];
    }
    out
}

pub fn unit_mono(k: usize) -> XiMono {
    let mut m = [0u8; NVARS];
    m[k] = 1;
    m
}

fn mono_eval(m: &XiMono, xi: &[ParamScalar]) -> ParamScalar {
    let mut acc = ParamScalar::one();
    for (k, &e) in m.iter().enumerate() {
        if e > 0 {
            acc = &acc * &xi[k].pow(e as u32);
        }
    }
    acc
}

/// Polynomial in ξ with [`ParamScalar`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XiPoly {
    terms: BTreeMap<XiMono, ParamScalar>,
}

impl XiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ParamScalar) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(m: XiMono, c: ParamScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `ξ(v) = Σ vₖ ξₖ`.
    pub fn linear(v: &Covector) -> Self {
        let mut p = Self::zero();
        for k in 0..NVARS {
            p.add_term(unit_mono(k), v.get(k).clone());
        }
        p
    }

    /// `|ξ|² = Σ ξₖ²`.
    pub fn norm_sqr() -> Self {
        let mut p = Self::zero();
        for k in 0..NVARS {
            let mut m = [0u8; NVARS];
            m[k] = 2;
            p.add_term(m, ParamScalar::one());
        }
        p
    }

    pub fn add_term(&mut self, m: XiMono, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XiMono, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &XiMono) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&ParamScalar::from_int(-1))
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(ParamScalar::one()), |acc, _| acc.mul(self))
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| mono_degree(m) == degree)
    }

    pub fn eval(&self, xi: &Covector) -> ParamScalar {
        self.terms
            .iter()
            .map(|(m, c)| c * &mono_eval(m, xi.components()))
            .sum()
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

/// Polynomial in ξ with [`FiberEndo`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoPoly {
    dim: usize,
    terms: BTreeMap<XiMono, FiberEndo>,
}

impl EndoPoly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: FiberEndo) -> Self {
        Self::monomial([0; NVARS], m)
    }

    pub fn monomial(mono: XiMono, m: FiberEndo) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(mono, m);
        p
    }

    /// `Σ ξₖ f(k)`, the symbol of a map linear in ξ.
    pub fn linear(dim: usize, f: impl Fn(usize) -> FiberEndo) -> Self {
        let mut p = Self::zero(dim);
        for k in 0..NVARS {
            p.add_term(unit_mono(k), f(k));
        }
        p
    }

    /// Scalar polynomial times the identity.
    pub fn from_scalar(dim: usize, s: &XiPoly) -> Self {
        let mut p = Self::zero(dim);
        for (m, c) in s.terms() {
            p.add_term(*m, FiberEndo::scalar(dim, c.clone()));
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, mono: XiMono, m: FiberEndo) {
        if m.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, m);
            }
            Some(old) => {
                let s = old.add(&m);
                if !s.is_zero() {
                    self.terms.insert(mono, s);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XiMono, &FiberEndo)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &XiMono) -> FiberEndo {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| FiberEndo::zero(self.dim))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|m| m.neg())
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        self.map(|m| m.scale(s))
    }

    pub fn map(&self, f: impl Fn(&FiberEndo) -> FiberEndo) -> Self {
        let mut out = Self::zero(self.dim);
        for (mono, m) in &self.terms {
            out.add_term(*mono, f(m));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar_poly(&self, s: &XiPoly) -> Self {
        let mut out = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in s.terms() {
                out.add_term(mono_mul(ma, mb), ca.scale(cb));
            }
        }
        out
    }

    pub fn left_mul(&self, m: &FiberEndo) -> Self {
        self.map(|c| m.mul(c))
    }

    pub fn right_mul(&self, m: &FiberEndo) -> Self {
        self.map(|c| c.mul(m))
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| mono_degree(m) == degree)
    }

    /// Common degree of all monomials, `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(mono_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn eval(&self, xi: &Covector) -> FiberEndo {
        let mut acc = FiberEndo::zero(self.dim);
        for (m, c) in &self.terms {
            acc = acc.add(&c.scale(&mono_eval(m, xi.components())));
        }
        acc
    }

    pub fn trace(&self) -> XiPoly {
        let mut out = XiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.trace());
        }
        out
    }

    /// `Tr(A · self)` for a ξ-independent `A`, without forming products.
    pub fn trace_left(&self, a: &FiberEndo) -> XiPoly {
        let mut out = XiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, a.trace_of_product(c));
        }
        out
    }

    /// `Tr(self · rhs)` as a polynomial, pairing coefficient matrices.
    pub fn trace_product(&self, rhs: &Self) -> XiPoly {
        let mut out = XiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca.trace_of_product(cb));
            }
        }
        out
    }

    /// Exact quotient by `|ξ|²`, if it divides.
    pub fn div_norm_sqr(&self) -> Option<Self> {
        // long division in ξ₁ by ξ₁² + (ξ₂² + ξ₃² + ξ₄²)
        let mut rem = self.clone();
        let mut quot = Self::zero(self.dim);
        loop {
            let top = match rem.terms.keys().map(|m| m[0]).max() {
                None => return Some(quot),
                Some(t) => t,
            };
            if top < 2 {
                return None;
            }
            let lead: Vec<(XiMono, FiberEndo)> = rem
                .terms
                .iter()
                .filter(|(m, _)| m[0] == top)
                .map(|(m, c)| {
                    let mut q = *m;
                    q[0] -= 2;
                    (q, c.clone())
                })
                .collect();
            for (q, c) in lead {
                quot.add_term(q, c.clone());
                for k in 0..NVARS {
                    let mut m = q;
                    m[k] += 2;
                    rem.add_term(m, c.neg());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber_algebra::Fiber;

    #[test]
    fn norm_sqr_division() {
        let f = Fiber::four();
        let e = EndoPoly::linear(16, |k| f.eps_basis(k));
        let i = EndoPoly::linear(16, |k| f.iota_basis(k));
        let ei = e.mul(&i);
        let n = EndoPoly::from_scalar(16, &XiPoly::norm_sqr());
        let p = ei.mul(&n).mul(&n);
        assert_eq!(p.div_norm_sqr().unwrap().div_norm_sqr().unwrap(), ei);
        assert!(ei.div_norm_sqr().is_none());
        // ει + ιε = |ξ|²
        assert_eq!(ei.add(&i.mul(&e)), n);
    }
}
