//! Sparse polynomials in (a0, b0) over ℚ(i), with exact division and gcd.

use std::cmp::Ordering;
use std::fmt;

use super::gauss::GaussRat;

/// Exponent pair `(i, j)` of the monomial `a0^i b0^j`.
pub type Exp = (u32, u32);

/// Sparse polynomial in `a0, b0`. Terms are kept sorted by lex order
/// (`a0` before `b0`), ascending, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: Vec<(Exp, GaussRat)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn monomial(e: Exp, c: GaussRat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    pub fn a0() -> Self {
        Self::monomial((1, 0), GaussRat::one())
    }

    pub fn b0() -> Self {
        Self::monomial((0, 1), GaussRat::one())
    }

    /// Builds from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, GaussRat)>>(it: I) -> Self {
        let mut v: Vec<(Exp, GaussRat)> = it.into_iter().collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(Exp, GaussRat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        match self.terms.as_slice() {
            [] => Some(GaussRat::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Exp, GaussRat)> {
        self.terms.last()
    }

    pub fn degree_a(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.0).max().unwrap_or(0)
    }

    pub fn degree_b(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.0 + e.1).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exp {
        let mut it = self.terms.iter().map(|(e, _)| *e);
        let Some(first) = it.next() else {
            return (0, 0);
        };
        it.fold(first, |m, e| (m.0.min(e.0), m.1.min(e.1)))
    }

    pub fn shift_down(&self, by: Exp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 - by.0, e.1 - by.1), c.clone()))
                .collect(),
        }
    }

    pub fn shift_up(&self, by: Exp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 + by.0, e.1 + by.1), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, -x)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        merge(&self.terms, &rhs.terms, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        merge(&self.terms, &rhs.terms, true)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Self {
                terms: self
                    .terms
                    .iter()
                    .map(|(x, y)| ((x.0 + e.0, x.1 + e.1), y * c))
                    .collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs.mul(self);
        }
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.push(((e1.0 + e2.0, e1.1 + e2.1), c1 * c2));
            }
        }
        Self::from_terms(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            acc += &(&(c * &a.pow(e.0)) * &b.pow(e.1));
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "exact_div by zero polynomial");
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let inv = dc.inv()?;
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if e.0 < de.0 || e.1 < de.1 {
                    return None;
                }
                out.push(((e.0 - de.0, e.1 - de.1), c * &inv));
            }
            return Some(Self { terms: out });
        }
        let (lde, ldc) = d.leading().cloned().unwrap();
        let inv = ldc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.leading().cloned() {
            if re.0 < lde.0 || re.1 < lde.1 {
                return None;
            }
            let e = (re.0 - lde.0, re.1 - lde.1);
            let c = &rc * &inv;
            rem = rem.sub(&d.mul(&Self::monomial(e, c.clone())));
            quot.push((e, c));
        }
        Some(Self::from_terms(quot))
    }

    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.terms
            .iter()
            .rev()
            .map(|(e, _)| *e)
            .cmp(other.terms.iter().rev().map(|(e, _)| *e))
    }
}

fn merge(x: &[(Exp, GaussRat)], y: &[(Exp, GaussRat)], negate_y: bool) -> BiPoly {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ord = match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) => a.0.cmp(&b.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_y { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_y {
                    &x[i].1 - &y[j].1
                } else {
                    &x[i].1 + &y[j].1
                };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    BiPoly { terms: out }
}

// ---------------------------------------------------------------------------
// gcd: content/primitive-part PRS over Q(i)[b0][a0]
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in `b0`, index = degree, trimmed.
#[derive(Clone, PartialEq, Debug)]
struct Uni(Vec<GaussRat>);

impl Uni {
    fn trim(mut self) -> Self {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &GaussRat {
        self.0.last().expect("lc of zero")
    }
    fn one() -> Self {
        Uni(vec![GaussRat::one()])
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = GaussRat::zero();
        Uni((0..n)
            .map(|k| self.0.get(k).unwrap_or(&z) - o.0.get(k).unwrap_or(&z))
            .collect())
        .trim()
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Uni(Vec::new());
        }
        let mut out = vec![GaussRat::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        Uni(out).trim()
    }
    fn scale(&self, c: &GaussRat) -> Self {
        Uni(self.0.iter().map(|x| x * c).collect()).trim()
    }
    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().unwrap())
    }
    fn divrem(&self, d: &Self) -> (Self, Self) {
        let inv = d.lc().inv().unwrap();
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (Uni(Vec::new()), r);
        }
        let mut q = vec![GaussRat::zero(); r.0.len() - d.0.len() + 1];
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let k = r.0.len() - d.0.len();
            let c = r.lc() * &inv;
            for (j, dc) in d.0.iter().enumerate() {
                let t = &c * dc;
                r.0[k + j] -= &t;
            }
            q[k] = c;
            r = r.trim();
        }
        (Uni(q).trim(), r)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }
    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact univariate division");
        q
    }
}

/// Polynomial in `a0` with coefficients in `Q(i)[b0]`; index = `a0` degree.
type Rec = Vec<Uni>;

fn to_rec(p: &BiPoly) -> Rec {
    let da = p.degree_a() as usize;
    let mut out: Rec = vec![Uni(Vec::new()); da + 1];
    for ((i, j), c) in &p.terms {
        let u = &mut out[*i as usize].0;
        if u.len() <= *j as usize {
            u.resize(*j as usize + 1, GaussRat::zero());
        }
        u[*j as usize] = c.clone();
    }
    for u in out.iter_mut() {
        *u = std::mem::replace(u, Uni(Vec::new())).trim();
    }
    rec_trim(out)
}

fn from_rec(r: &Rec) -> BiPoly {
    BiPoly::from_terms(r.iter().enumerate().flat_map(|(i, u)| {
        u.0.iter()
            .enumerate()
            .map(move |(j, c)| ((i as u32, j as u32), c.clone()))
    }))
}

fn rec_trim(mut r: Rec) -> Rec {
    while matches!(r.last(), Some(u) if u.is_zero()) {
        r.pop();
    }
    r
}

fn rec_content(r: &Rec) -> Uni {
    let mut g = Uni(Vec::new());
    for u in r {
        if u.is_zero() {
            continue;
        }
        g = if g.is_zero() { u.monic() } else { Uni::gcd(&g, u) };
        if g.deg() == 0 {
            return Uni::one();
        }
    }
    g
}

fn rec_pp(r: &Rec) -> Rec {
    let c = rec_content(r);
    if c.is_zero() {
        return Vec::new();
    }
    r.iter().map(|u| if u.is_zero() { u.clone() } else { u.exact_div(&c) }).collect()
}

/// Pseudo-remainder of `a` by `b` in `R[a0]`.
fn rec_prem(a: &Rec, b: &Rec) -> Rec {
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let k = dr - db;
        let mut next: Rec = r.iter().map(|u| u.mul(&lcb)).collect();
        for (j, bu) in b.iter().enumerate() {
            next[k + j] = next[k + j].sub(&bu.mul(&lcr));
        }
        r = rec_trim(next);
    }
    r
}

/// Monic gcd over ℚ(i)[a0, b0] (leading term in lex order has coefficient 1).
pub fn gcd(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return BiPoly::one();
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mg = (mp.0.min(mq.0), mp.1.min(mq.1));
    let mono = BiPoly::monomial(mg, GaussRat::one());
    if p.is_monomial() || q.is_monomial() {
        return mono;
    }
    let p = p.shift_down(mp);
    let q = q.shift_down(mq);
    if p.is_constant() || q.is_constant() {
        return mono;
    }
    let (rp, rq) = (to_rec(&p), to_rec(&q));
    let c = Uni::gcd(&rec_content(&rp), &rec_content(&rq));
    let (mut x, mut y) = (rec_pp(&rp), rec_pp(&rq));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // primitive and constant in a0: contributes nothing beyond the content
            x = vec![Uni::one()];
            break;
        }
        let r = rec_prem(&x, &y);
        x = y;
        y = rec_pp(&r);
    }
    let g: Rec = x.iter().map(|u| u.mul(&c)).collect();
    from_rec(&g).mul(&mono).monic()
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_bipoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BiPoly {
        BiPoly::a0()
    }
    fn b() -> BiPoly {
        BiPoly::b0()
    }
    fn k(n: i64) -> BiPoly {
        BiPoly::constant(GaussRat::from_int(n))
    }

    #[test]
    fn difference_of_squares_divides() {
        let num = a().pow(2).sub(&b().pow(2));
        let den = a().sub(&b());
        assert_eq!(num.exact_div(&den).unwrap(), a().add(&b()));
        assert!(num.exact_div(&a().add(&k(2))).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = a().sub(&b()).mul(&a().add(&k(3)));
        let g = a().sub(&b()).mul(&b().add(&k(1))).mul(&a());
        assert_eq!(gcd(&f, &g), a().sub(&b()));
        let h = a().pow(4).sub(&b().pow(4));
        let h2 = a().pow(2).sub(&b().pow(2)).mul(&a().pow(3));
        assert_eq!(gcd(&h, &h2), a().pow(2).sub(&b().pow(2)));
    }

    #[test]
    fn gcd_with_gaussian_factor() {
        let i = BiPoly::constant(GaussRat::i());
        let f = a().add(&b().mul(&i)).mul(&a().sub(&k(1)));
        let g = a().add(&b().mul(&i)).mul(&b().add(&k(5)));
        assert_eq!(gcd(&f, &g), a().add(&b().mul(&i)));
        // a^2 + b^2 = (a+ib)(a-ib)
        let s = a().pow(2).add(&b().pow(2));
        assert_eq!(gcd(&s, &g), a().add(&b().mul(&i)));
    }

    #[test]
    fn coprime_gives_one() {
        let f = a().pow(2).add(&b());
        let g = b().pow(3).add(&a()).add(&k(7));
        assert!(gcd(&f, &g).is_one());
    }
}
