use std::collections::BTreeMap;

use super::poly::{EndoPoly, XiPoly};
use crate::error::{EngineError, Result};
use crate::fiber_algebra::{Covector, FiberEndo};
use crate::scalar_ring::ParamScalar;

/// Matrix symbol homogeneous of degree `order` in ξ:
/// `numerator(ξ) / |ξ|^{2·denom_pow}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogSymbol {
    order: i32,
    numerator: EndoPoly,
    denom_pow: u32,
}

impl HomogSymbol {
    pub fn new(order: i32, numerator: EndoPoly, denom_pow: u32) -> Result<Self> {
        let want = order + 2 * denom_pow as i32;
        if numerator.is_zero() {
            return Ok(Self {
                order,
                numerator,
                denom_pow,
            });
        }
        if want < 0 || !numerator.is_homogeneous(want as u32) {
            return Err(EngineError::Dimension(format!(
                "numerator is not homogeneous of degree {want}"
            )));
        }
        Ok(Self {
            order,
            numerator,
            denom_pow,
        })
    }

    pub fn zero(dim: usize, order: i32) -> Self {
        Self {
            order,
            numerator: EndoPoly::zero(dim),
            denom_pow: 0,
        }
    }

    /// ξ-independent matrix, order 0.
    pub fn constant(m: FiberEndo) -> Self {
        Self {
            order: 0,
            numerator: EndoPoly::constant(m),
            denom_pow: 0,
        }
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn numerator(&self) -> &EndoPoly {
        &self.numerator
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    pub fn dim(&self) -> usize {
        self.numerator.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Same symbol written over `|ξ|^{2k}`, `k ≥ denom_pow`.
    pub fn lift(&self, k: u32) -> Self {
        assert!(k >= self.denom_pow, "cannot lower the denominator by lifting");
        let extra = XiPoly::norm_sqr().pow(k - self.denom_pow);
        Self {
            order: self.order,
            numerator: self.numerator.mul_scalar_poly(&extra),
            denom_pow: k,
        }
    }

    /// Cancels common factors of `|ξ|²`, giving the unique lowest-terms form.
    pub fn reduce(&self) -> Self {
        let mut s = self.clone();
        if s.numerator.is_zero() {
            s.denom_pow = 0;
            return s;
        }
        while s.denom_pow > 0 {
            match s.numerator.div_norm_sqr() {
                Some(q) => {
                    s.numerator = q;
                    s.denom_pow -= 1;
                }
                None => break,
            }
        }
        s
    }

    /// Equality as functions of ξ ≠ 0.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.order != other.order {
            return self.is_zero() && other.is_zero();
        }
        let k = self.denom_pow.max(other.denom_pow);
        self.lift(k).numerator == other.lift(k).numerator
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if self.order != rhs.order {
            return Err(EngineError::Dimension(format!(
                "cannot add symbols of orders {} and {}",
                self.order, rhs.order
            )));
        }
        let k = self.denom_pow.max(rhs.denom_pow);
        let num = self.lift(k).numerator.add(&rhs.lift(k).numerator);
        Ok(Self {
            order: self.order,
            numerator: num,
            denom_pow: k,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            numerator: self.numerator.neg(),
            denom_pow: self.denom_pow,
        }
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        Self {
            order: self.order,
            numerator: self.numerator.scale(s),
            denom_pow: self.denom_pow,
        }
    }

    /// Pointwise matrix product of symbols.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            order: self.order + rhs.order,
            numerator: self.numerator.mul(&rhs.numerator),
            denom_pow: self.denom_pow + rhs.denom_pow,
        }
    }

    pub fn left_mul(&self, m: &FiberEndo) -> Self {
        Self {
            order: self.order,
            numerator: self.numerator.left_mul(m),
            denom_pow: self.denom_pow,
        }
    }

    /// Value at a nonzero covector.
    pub fn eval_at(&self, xi: &Covector) -> Result<FiberEndo> {
        let n2 = xi.norm_sqr();
        if n2.is_zero() {
            return Err(EngineError::PoleAtSample);
        }
        let num = self.numerator.eval(xi);
        Ok(num.scale(&n2.pow(self.denom_pow).inv()?))
    }

    /// Fiber trace; numerator polynomial over the same `|ξ|^{2k}`.
    pub fn trace(&self) -> XiPoly {
        self.numerator.trace()
    }

    /// `Tr(A · σ)` for a constant matrix `A`.
    pub fn trace_left(&self, a: &FiberEndo) -> XiPoly {
        self.numerator.trace_left(a)
    }
}

/// Finite sum of homogeneous symbols keyed by order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSymbol {
    parts: BTreeMap<i32, HomogSymbol>,
}

impl GradedSymbol {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(parts: impl IntoIterator<Item = HomogSymbol>) -> Result<Self> {
        let mut g = Self::new();
        for p in parts {
            g.insert(p)?;
        }
        Ok(g)
    }

    pub fn insert(&mut self, s: HomogSymbol) -> Result<()> {
        let o = s.order();
        let merged = match self.parts.remove(&o) {
            None => s,
            Some(old) => old.add(&s)?,
        };
        self.parts.insert(o, merged);
        Ok(())
    }

    pub fn part(&self, order: i32) -> Option<&HomogSymbol> {
        self.parts.get(&order)
    }

    pub fn parts(&self) -> impl Iterator<Item = &HomogSymbol> {
        self.parts.values()
    }

    pub fn orders(&self) -> Vec<i32> {
        self.parts.keys().copied().collect()
    }
}

impl From<HomogSymbol> for GradedSymbol {
    fn from(s: HomogSymbol) -> Self {
        let mut g = Self::new();
        g.parts.insert(s.order(), s);
        g
    }
}

/// Order-`target` part of the product `a ∘ b` at the base point.
///
/// All x-derivatives vanish there, so only the leading term of the
/// composition formula survives: `Σ_{p+q=target} a_p · b_q`.
pub fn graded_product(a: &GradedSymbol, b: &GradedSymbol, target: i32) -> Result<HomogSymbol> {
    let dim = a
        .parts()
        .chain(b.parts())
        .map(HomogSymbol::dim)
        .next()
        .unwrap_or(16);
    let mut acc = HomogSymbol::zero(dim, target);
    for (p, ap) in &a.parts {
        if let Some(bq) = b.parts.get(&(target - p)) {
            acc = acc.add(&ap.mul(bq))?;
        }
    }
    Ok(acc)
}
