//! Exact fit of brute-force traces to O(n)-invariant polynomials.
//!
//! A multilinear O(n)-invariant of the sampled vectors is a combination of
//! products of pairings `g(p, q)`. The fit solves for the coefficients, which
//! may depend on `a0, b0`, and then requires every trial to be reproduced.

use std::collections::BTreeSet;

use super::tags::Inst;
use crate::scalar_ring::ParamScalar;

pub type Pairing = Vec<(&'static str, &'static str)>;

/// Distinct perfect matchings of the multiset.
pub fn pairings(vars: &[(&'static str, u32)]) -> Vec<Pairing> {
    let mut items: Vec<&'static str> = Vec::new();
    for &(name, k) in vars {
        items.extend(std::iter::repeat(name).take(k as usize));
    }
    let mut out = BTreeSet::new();
    if items.len() % 2 == 0 {
        extend(&items, &mut Vec::new(), &mut out);
    }
    out.into_iter().collect()
}

fn extend(rest: &[&'static str], acc: &mut Pairing, out: &mut BTreeSet<Pairing>) {
    let Some((&first, tail)) = rest.split_first() else {
        let mut p = acc.clone();
        p.sort();
        out.insert(p);
        return;
    };
    let mut seen = BTreeSet::new();
    for (k, &other) in tail.iter().enumerate() {
        if !seen.insert(other) {
            continue;
        }
        let pair = if first <= other { (first, other) } else { (other, first) };
        let remaining: Vec<_> = tail[..k].iter().chain(&tail[k + 1..]).copied().collect();
        acc.push(pair);
        extend(&remaining, acc, out);
        acc.pop();
    }
}

pub fn label(p: &Pairing) -> String {
    p.iter()
        .map(|&(a, b)| if a == b { format!("|{a}|^2") } else { format!("g({a},{b})") })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn evaluate(p: &Pairing, t: &Inst) -> ParamScalar {
    p.iter().fold(ParamScalar::one(), |acc, &(a, b)| acc * t.g(a, b))
}

#[derive(Clone, Debug)]
pub struct Fit {
    pub terms: Vec<(String, ParamScalar)>,
    /// Every trial is reproduced by the fitted form.
    pub consistent: bool,
}

impl Fit {
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| format!("({})*{l}", c.to_text()))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Fits `values[k]` as a combination of the pairings evaluated on
/// `insts[k]`. Columns that vanish or repeat on every trial are dropped, so
/// the coefficients are those of an identifiable basis.
pub fn fit(vars: &[(&'static str, u32)], insts: &[Inst], values: &[ParamScalar]) -> Fit {
    let mut cols: Vec<(Pairing, Vec<ParamScalar>)> = Vec::new();
    for p in pairings(vars) {
        let col: Vec<ParamScalar> = insts.iter().map(|t| evaluate(&p, t)).collect();
        if col.iter().all(|x| x.is_zero()) || cols.iter().any(|(_, c)| *c == col) {
            continue;
        }
        cols.push((p, col));
    }
    let k = cols.len();
    let mut rows: Vec<Vec<ParamScalar>> = (0..insts.len())
        .map(|r| {
            let mut row: Vec<ParamScalar> = cols.iter().map(|(_, c)| c[r].clone()).collect();
            row.push(values[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| r[k].is_zero());
    let mut coeffs = vec![ParamScalar::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = rows[r][k].clone();
    }
    Fit {
        terms: cols.iter().zip(coeffs).map(|((p, _), c)| (label(p), c)).collect(),
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_counts() {
        assert_eq!(pairings(&[("u", 1), ("v", 1), ("w", 1), ("X", 1)]).len(), 3);
        assert_eq!(pairings(&[("xi", 4)]).len(), 1);
        assert_eq!(pairings(&[("u", 1), ("X", 1), ("xi", 2)]).len(), 2);
        assert!(pairings(&[("u", 1), ("v", 1), ("w", 1)]).is_empty());
    }

    #[test]
    fn labels() {
        assert_eq!(label(&vec![("X", "u"), ("xi", "xi")]), "g(X,u)*|xi|^2");
    }
}
