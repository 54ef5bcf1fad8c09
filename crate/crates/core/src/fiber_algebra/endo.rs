use crate::error::{EngineError, Result};
use crate::scalar_ring::{GaussRat, ParamScalar};

/// Dense square matrix over [`ParamScalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiberEndo {
    dim: usize,
    entries: Vec<ParamScalar>,
}

impl FiberEndo {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ParamScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ParamScalar::one())
    }

    pub fn scalar(dim: usize, s: ParamScalar) -> Self {
        let mut m = Self::zero(dim);
        if !s.is_zero() {
            for k in 0..dim {
                m.entries[k * dim + k] = s.clone();
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ParamScalar>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &ParamScalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: ParamScalar) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn column(&self, col: usize) -> Vec<ParamScalar> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn entries(&self) -> &[ParamScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ParamScalar::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// `Some(s)` when the matrix is `s·Id`.
    pub fn as_scalar(&self) -> Option<ParamScalar> {
        let s = self.get(0, 0).clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.get(r, c);
                let ok = if r == c { *e == s } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&ParamScalar, &ParamScalar) -> ParamScalar) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| {
            if b.is_zero() {
                a.clone()
            } else {
                a + b
            }
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| {
            if b.is_zero() {
                a.clone()
            } else {
                a - b
            }
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e)
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        if s.is_one() {
            return self.clone();
        }
        self.map(|e| e * s)
    }

    pub fn scale_gauss(&self, s: &GaussRat) -> Self {
        self.map(|e| e.scale(s))
    }

    /// Entrywise map; zero entries are passed through untouched.
    pub fn map(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Self {
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| if e.is_zero() { e.clone() } else { f(e) })
                .collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar>) -> Result<Self> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(if e.is_zero() { e.clone() } else { f(e)? });
        }
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zero(d);
        for r in 0..d {
            for c in 0..d {
                m.entries[c * d + r] = self.entries[r * d + c].clone();
            }
        }
        m
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut acc: Vec<Option<ParamScalar>> = vec![None; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    let slot = &mut acc[i * d + j];
                    *slot = Some(match slot.take() {
                        None => p,
                        Some(s) => &s + &p,
                    });
                }
            }
        }
        Self {
            dim: d,
            entries: acc.into_iter().map(Option::unwrap_or_default).collect(),
        }
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn trace(&self) -> ParamScalar {
        (0..self.dim)
            .map(|k| &self.entries[k * self.dim + k])
            .filter(|e| !e.is_zero())
            .cloned()
            .sum()
    }

    /// `Tr(AB)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> ParamScalar {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut acc = ParamScalar::zero();
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                let b = &rhs.entries[k * d + i];
                if !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
        }
        acc
    }

    /// Gauss–Jordan inverse over the coefficient field.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(d);
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(EngineError::SingularSymbol)?;
            if pivot != col {
                for c in 0..d {
                    a.entries.swap(pivot * d + c, col * d + c);
                    inv.entries.swap(pivot * d + c, col * d + c);
                }
            }
            let p = a.get(col, col).inv()?;
            for c in 0..d {
                if !a.entries[col * d + c].is_zero() {
                    a.entries[col * d + c] = &a.entries[col * d + c] * &p;
                }
                if !inv.entries[col * d + c].is_zero() {
                    inv.entries[col * d + c] = &inv.entries[col * d + c] * &p;
                }
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let x = &a.entries[col * d + c];
                    if !x.is_zero() {
                        let v = &a.entries[r * d + c] - &(&f * x);
                        a.entries[r * d + c] = v;
                    }
                    let y = &inv.entries[col * d + c];
                    if !y.is_zero() {
                        let v = &inv.entries[r * d + c] - &(&f * y);
                        inv.entries[r * d + c] = v;
                    }
                }
            }
        }
        Ok(inv)
    }

    /// First entry (row-major) where the matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let d = self.dim;
        (0..d * d)
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (k / d, k % d))
    }

    /// Conjugation `P⁻¹ A P` by the permutation matrix sending basis vector
    /// `k` to `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let d = self.dim;
        let mut m = Self::zero(d);
        for r in 0..d {
            for c in 0..d {
                m.entries[perm[r] * d + perm[c]] = self.entries[r * d + c].clone();
            }
        }
        m
    }

    pub fn eval(&self, a: &GaussRat, b: &GaussRat) -> Result<Self> {
        self.try_map(|e| e.eval(a, b).map(ParamScalar::from))
    }
}
