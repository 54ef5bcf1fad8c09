//! The exterior algebra Λ*(ℝⁿ) at one point, with exact matrices for the
//! Clifford-type actions and the fiber trace.

mod endo;

pub use endo::FiberEndo;

use std::fmt;

use crate::error::{EngineError, Result};
use crate::scalar_ring::{GaussRat, ParamScalar};

/// The two weights of the operator `a0 d + b0 δ`. Either formal symbols or
/// numeric constants; every downstream computation is generic in this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub a0: ParamScalar,
    pub b0: ParamScalar,
}

impl Params {
    pub fn symbolic() -> Self {
        Self {
            a0: ParamScalar::a0(),
            b0: ParamScalar::b0(),
        }
    }

    pub fn numeric(a: GaussRat, b: GaussRat) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(EngineError::DegenerateParameters);
        }
        Ok(Self {
            a0: a.into(),
            b0: b.into(),
        })
    }

    pub fn is_symbolic(&self) -> bool {
        self.a0 == ParamScalar::a0() && self.b0 == ParamScalar::b0()
    }

    /// `symbolic` or `a0 = .., b0 = ..`.
    pub fn describe(&self) -> String {
        if self.is_symbolic() {
            "symbolic".to_string()
        } else {
            format!("a0 = {}, b0 = {}", self.a0, self.b0)
        }
    }
}

/// Components in an orthonormal frame, so `g(u, v) = Σ uᵢ vᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Covector(Vec<ParamScalar>);

impl Covector {
    pub fn new(components: Vec<ParamScalar>) -> Self {
        Self(components)
    }

    pub fn from_ints(components: &[i64]) -> Self {
        Self(components.iter().map(|&c| ParamScalar::from_int(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![ParamScalar::zero(); n])
    }

    /// The `k`-th frame covector (0-based).
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[k] = ParamScalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[ParamScalar] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &ParamScalar {
        &self.0[k]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(ParamScalar::is_zero)
    }

    pub fn dot(&self, other: &Covector) -> ParamScalar {
        assert_eq!(self.dim(), other.dim(), "covector dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> ParamScalar {
        self.dot(self)
    }

    pub fn scale(&self, s: &ParamScalar) -> Covector {
        Covector(self.0.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Basis of Λ*(ℝⁿ): subsets of `{0..n}` as bitmasks, ordered by size then
/// lexicographically.
#[derive(Clone, Debug)]
pub struct Fiber {
    n: usize,
    basis: Vec<u32>,
    index: Vec<usize>,
}

impl Fiber {
    pub fn new(n: usize) -> Self {
        assert!((1..=10).contains(&n), "fiber dimension out of range");
        let mut basis: Vec<u32> = (0..1u32 << n).collect();
        basis.sort_by_key(|&m| (m.count_ones(), lex_key(m, n)));
        let mut index = vec![0; basis.len()];
        for (k, &m) in basis.iter().enumerate() {
            index[m as usize] = k;
        }
        Self { n, basis, index }
    }

    /// The four-dimensional fiber used by all residue computations.
    pub fn four() -> Self {
        Self::new(4)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Subset belonging to basis position `k`, as sorted 0-based indices.
    pub fn subset(&self, k: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.basis[k] >> j & 1 == 1).collect()
    }

    pub fn position(&self, subset: &[usize]) -> usize {
        let m = subset.iter().fold(0u32, |m, &j| m | 1 << j);
        self.index[m as usize]
    }

    pub fn identity(&self) -> FiberEndo {
        FiberEndo::identity(self.dim())
    }

    pub fn zero(&self) -> FiberEndo {
        FiberEndo::zero(self.dim())
    }

    /// Exterior multiplication by the frame covector `e_j`.
    pub fn eps_basis(&self, j: usize) -> FiberEndo {
        let mut m = self.zero();
        for (col, &s) in self.basis.iter().enumerate() {
            if s >> j & 1 == 0 {
                let sign = sign_below(s, j);
                let row = self.index[(s | 1 << j) as usize];
                m.set(row, col, ParamScalar::from_int(sign));
            }
        }
        m
    }

    /// Interior multiplication by the frame vector `e_j`.
    pub fn iota_basis(&self, j: usize) -> FiberEndo {
        self.eps_basis(j).transpose()
    }

    fn combine(&self, v: &Covector, f: impl Fn(usize) -> FiberEndo) -> FiberEndo {
        assert_eq!(v.dim(), self.n, "covector dimension mismatch");
        let mut acc = self.zero();
        for (j, c) in v.components().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&f(j).scale(c));
            }
        }
        acc
    }

    pub fn eps(&self, v: &Covector) -> FiberEndo {
        self.combine(v, |j| self.eps_basis(j))
    }

    pub fn iota(&self, v: &Covector) -> FiberEndo {
        self.combine(v, |j| self.iota_basis(j))
    }

    /// `c(v) = ε(v) − ι(v)`.
    pub fn c(&self, v: &Covector) -> FiberEndo {
        self.eps(v).sub(&self.iota(v))
    }

    /// `ĉ(v) = ε(v) + ι(v)`.
    pub fn c_hat(&self, v: &Covector) -> FiberEndo {
        self.eps(v).add(&self.iota(v))
    }

    /// `c̃(v) = a0 ε(v) − b0 ι(v)`.
    pub fn c_tilde(&self, v: &Covector, p: &Params) -> FiberEndo {
        self.eps(v).scale(&p.a0).sub(&self.iota(v).scale(&p.b0))
    }

    /// `c̄(v) = b0 ε(v) − a0 ι(v)`.
    pub fn c_bar(&self, v: &Covector, p: &Params) -> FiberEndo {
        self.eps(v).scale(&p.b0).sub(&self.iota(v).scale(&p.a0))
    }
}

fn lex_key(m: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&j| m >> j & 1 == 1).collect()
}

/// `(−1)^{#{i ∈ s : i < j}}`.
fn sign_below(s: u32, j: usize) -> i64 {
    if (s & ((1u32 << j) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Tr(m)`, the trace on the fiber.
pub fn trace(m: &FiberEndo) -> ParamScalar {
    m.trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_order_is_size_then_lex() {
        let f = Fiber::four();
        assert_eq!(f.dim(), 16);
        assert_eq!(f.subset(0), Vec::<usize>::new());
        assert_eq!(f.subset(1), vec![0]);
        assert_eq!(f.subset(5), vec![0, 1]);
        assert_eq!(f.subset(10), vec![2, 3]);
        assert_eq!(f.subset(11), vec![0, 1, 2]);
        assert_eq!(f.subset(15), vec![0, 1, 2, 3]);
        for k in 0..16 {
            assert_eq!(f.position(&f.subset(k)), k);
        }
    }

    #[test]
    fn eps_and_iota_on_vacuum() {
        let f = Fiber::four();
        let e1 = Covector::basis(4, 0);
        let vac = f.position(&[]);
        let col = f.eps(&e1).column(vac);
        let one = f.position(&[0]);
        for (r, x) in col.iter().enumerate() {
            assert_eq!(x.is_one(), r == one);
            assert!(r == one || x.is_zero());
        }
        assert!(f.iota(&e1).column(vac).iter().all(ParamScalar::is_zero));
    }

    #[test]
    fn wedge_sign() {
        let f = Fiber::four();
        // e2 ∧ (e1 ∧ e3) = −e1 ∧ e2 ∧ e3
        let m = f.eps_basis(1);
        let col = f.position(&[0, 2]);
        let row = f.position(&[0, 1, 2]);
        assert_eq!(m.get(row, col), &ParamScalar::from_int(-1));
    }

    #[test]
    fn clifford_square_and_trace_of_identity() {
        let f = Fiber::four();
        let e1 = Covector::basis(4, 0);
        let c = f.c(&e1);
        assert_eq!(c.mul(&c), f.identity().scale(&ParamScalar::from_int(-1)));
        assert_eq!(trace(&f.identity()), ParamScalar::from_int(16));
    }

    #[test]
    fn tilde_specializes_to_plain_clifford() {
        let f = Fiber::four();
        let e1 = Covector::basis(4, 0);
        let p = Params::numeric(GaussRat::one(), GaussRat::one()).unwrap();
        assert_eq!(f.c_tilde(&e1, &p), f.c(&e1));
        assert_eq!(f.c_bar(&e1, &p), f.c(&e1));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert_eq!(
            Params::numeric(GaussRat::zero(), GaussRat::one()),
            Err(EngineError::DegenerateParameters)
        );
    }
}
