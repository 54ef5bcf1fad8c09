//! Interior residue densities: trace on the fiber, integrate over S³, and
//! read off the coefficients of the invariant brackets.

mod reports;
mod sphere;

pub use reports::{claimed_one_form, claimed_torsion, one_form_report, sanity_report, torsion_report};
pub use sphere::{monomial_sphere_integral, sphere3_integrate, sphere_integrate, SphereValue};

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::fiber_algebra::{Covector, FiberEndo, Params};
use crate::scalar_ring::ParamScalar;
use crate::symbol_calculus::{HomogSymbol, SymbolCalculus};

/// Coefficients of `g(u,X)g(v,w)`, `g(v,X)g(u,w)`, `g(w,X)g(u,v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionCoefficients {
    #[serde(with = "crate::report::param_text")]
    pub k1: ParamScalar,
    #[serde(with = "crate::report::param_text")]
    pub k2: ParamScalar,
    #[serde(with = "crate::report::param_text")]
    pub k3: ParamScalar,
    pub pi_power: u32,
}

impl TorsionCoefficients {
    /// `k1 g(u,X)g(v,w) + k2 g(v,X)g(u,w) + k3 g(w,X)g(u,v)`.
    pub fn evaluate(&self, u: &Covector, v: &Covector, w: &Covector, x: &Covector) -> SphereValue {
        let t1 = &u.dot(x) * &v.dot(w);
        let t2 = &v.dot(x) * &u.dot(w);
        let t3 = &w.dot(x) * &u.dot(v);
        let c = &(&(&self.k1 * &t1) + &(&self.k2 * &t2)) + &(&self.k3 * &t3);
        SphereValue::new(c, self.pi_power)
    }

    /// The single coefficient of the alternating bracket, if the pattern
    /// `k1 = −k2 = k3` holds.
    pub fn bracket_coefficient(&self) -> Result<SphereValue> {
        if self.k1 != -&self.k2 || self.k1 != self.k3 {
            return Err(EngineError::PatternBroken(format!(
                "k1 = {}, k2 = {}, k3 = {}",
                self.k1, self.k2, self.k3
            )));
        }
        Ok(SphereValue::new(self.k1.clone(), self.pi_power))
    }
}

/// Computes the interior densities for one choice of parameters.
///
/// The `X`-dependent part of the bracket is cached per vector field, since
/// every structured instantiation reuses the same few `X`.
pub struct InteriorResidue {
    sc: SymbolCalculus,
    tails: Mutex<HashMap<Covector, HomogSymbol>>,
}

impl InteriorResidue {
    pub fn new(params: Params) -> Self {
        Self {
            sc: SymbolCalculus::new(params),
            tails: Mutex::new(HashMap::new()),
        }
    }

    pub fn symbolic() -> Self {
        Self::new(Params::symbolic())
    }

    pub fn calculus(&self) -> &SymbolCalculus {
        &self.sc
    }

    pub fn params(&self) -> &Params {
        self.sc.params()
    }

    fn dim4(&self, v: &Covector) {
        assert_eq!(v.dim(), 4, "residue densities live in dimension four");
    }

    /// `σ₀(D̃)σ₋₄ + σ₁(D̃)σ₋₅ = i c(X) σ₋₄ + i c̃(ξ) σ₋₅`, the order −4 part of
    /// `D̃(D̃*D̃)⁻²` at the base point.
    pub fn operator_tail(&self, x: &Covector) -> HomogSymbol {
        self.dim4(x);
        if let Some(t) = self.tails.lock().unwrap().get(x) {
            return t.clone();
        }
        let sc = &self.sc;
        let d = sc.symbol_of_operator(x, false);
        let p0 = d.part(0).expect("order zero part");
        let p1 = d.part(1).expect("order one part");
        let h1 = p0.mul(sc.sigma_minus4_sq());
        let h2 = p1.mul(&sc.sigma_minus5_sq(x));
        let tail = h1.add(&h2).expect("both of order -4");
        self.tails.lock().unwrap().insert(x.clone(), tail.clone());
        tail
    }

    fn prefix(&self, vs: &[&Covector]) -> FiberEndo {
        let f = self.sc.fiber();
        vs.iter().fold(f.identity(), |acc, v| {
            self.dim4(v);
            acc.mul(&f.c_tilde(v, self.params()))
        })
    }

    /// `c̃(u)c̃(v)c̃(w) [i c(X) σ₋₄ + i c̃(ξ) σ₋₅]`.
    pub fn torsion_density(&self, u: &Covector, v: &Covector, w: &Covector, x: &Covector) -> HomogSymbol {
        self.operator_tail(x).left_mul(&self.prefix(&[u, v, w]))
    }

    /// `∫_{|ξ|=1} Tr` of the torsion density.
    pub fn torsion_value(&self, u: &Covector, v: &Covector, w: &Covector, x: &Covector) -> SphereValue {
        let p = self.prefix(&[u, v, w]);
        sphere3_integrate(&self.operator_tail(x).trace_left(&p))
    }

    /// `c̃(u) [i c(X) σ₋₄ + i c̃(ξ) σ₋₅]`.
    pub fn one_form_density(&self, u: &Covector, x: &Covector) -> HomogSymbol {
        self.operator_tail(x).left_mul(&self.prefix(&[u]))
    }

    pub fn one_form_value(&self, u: &Covector, x: &Covector) -> SphereValue {
        let p = self.prefix(&[u]);
        sphere3_integrate(&self.operator_tail(x).trace_left(&p))
    }

    /// Structured instantiation: `(e1,e2,e2,e1)`, `(e1,e2,e1,e2)` and
    /// `(e1,e1,e2,e2)` isolate `k1`, `k2`, `k3`.
    pub fn torsion_coefficients(&self) -> TorsionCoefficients {
        let e = |k| Covector::basis(4, k);
        let (e1, e2) = (e(0), e(1));
        let k1 = self.torsion_value(&e1, &e2, &e2, &e1);
        let k2 = self.torsion_value(&e1, &e2, &e1, &e2);
        let k3 = self.torsion_value(&e1, &e1, &e2, &e2);
        TorsionCoefficients {
            k1: k1.coeff,
            k2: k2.coeff,
            k3: k3.coeff,
            pi_power: 2,
        }
    }

    /// Coefficient of `g(u, X)` in the one-form functional.
    pub fn one_form_coefficient(&self) -> SphereValue {
        let e1 = Covector::basis(4, 0);
        self.one_form_value(&e1, &e1)
    }

    /// `∫_{|ξ|=1} Tr σ₋₄(Δ̃⁻²)`.
    pub fn wres_laplacian_sanity(&self) -> SphereValue {
        sphere3_integrate(&self.sc.sigma_minus4_sq().trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_ring::GaussRat;

    #[test]
    fn sanity_at_unit_weights() {
        let r = InteriorResidue::new(Params::numeric(GaussRat::one(), GaussRat::one()).unwrap());
        assert_eq!(r.wres_laplacian_sanity(), SphereValue::new(ParamScalar::from_int(32), 2));
    }

    #[test]
    fn zero_vector_field_kills_the_density() {
        let r = InteriorResidue::symbolic();
        let e1 = Covector::basis(4, 0);
        assert!(r.torsion_density(&e1, &e1, &e1, &Covector::zero(4)).is_zero());
    }
}
