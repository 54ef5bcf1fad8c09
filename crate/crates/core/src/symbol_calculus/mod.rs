//! Pseudodifferential symbols at the base point of normal coordinates.
//!
//! Every x-derivative of every symbol vanishes there, so composition reduces
//! to pointwise matrix products graded by order, and the order −3 part of
//! the parametrix of the Laplacian is zero.

mod poly;
mod symbol;

pub use poly::{mono_degree, mono_mul, unit_mono, EndoPoly, XiMono, XiPoly, NVARS};
pub use symbol::{graded_product, GradedSymbol, HomogSymbol};

use std::sync::OnceLock;

use crate::error::{EngineError, Result};
use crate::fiber_algebra::{Covector, Fiber, FiberEndo, Params};
use crate::scalar_ring::ParamScalar;

/// Symbol constructors for one choice of `(a0, b0)` on the 4-dimensional fiber.
pub struct SymbolCalculus {
    fiber: Fiber,
    params: Params,
    eps: Vec<FiberEndo>,
    iota: Vec<FiberEndo>,
    sigma_m2: OnceLock<HomogSymbol>,
    sigma_m4: OnceLock<HomogSymbol>,
}

impl SymbolCalculus {
    pub fn new(params: Params) -> Self {
        let fiber = Fiber::four();
        let eps = (0..NVARS).map(|k| fiber.eps_basis(k)).collect();
        let iota = (0..NVARS).map(|k| fiber.iota_basis(k)).collect();
        Self {
            fiber,
            params,
            eps,
            iota,
            sigma_m2: OnceLock::new(),
            sigma_m4: OnceLock::new(),
        }
    }

    pub fn symbolic() -> Self {
        Self::new(Params::symbolic())
    }

    pub fn fiber(&self) -> &Fiber {
        &self.fiber
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.fiber.dim()
    }

    fn a0(&self) -> &ParamScalar {
        &self.params.a0
    }

    fn b0(&self) -> &ParamScalar {
        &self.params.b0
    }

    /// `ε(ξ)`.
    pub fn eps_xi(&self) -> EndoPoly {
        EndoPoly::linear(self.dim(), |k| self.eps[k].clone())
    }

    /// `ι(ξ)`.
    pub fn iota_xi(&self) -> EndoPoly {
        EndoPoly::linear(self.dim(), |k| self.iota[k].clone())
    }

    /// `ε(ξ)ι(ξ)`.
    pub fn eps_iota_xi(&self) -> EndoPoly {
        self.eps_xi().mul(&self.iota_xi())
    }

    pub fn c_xi(&self) -> EndoPoly {
        self.eps_xi().sub(&self.iota_xi())
    }

    pub fn c_tilde_xi(&self) -> EndoPoly {
        self.eps_xi()
            .scale(self.a0())
            .sub(&self.iota_xi().scale(self.b0()))
    }

    pub fn c_bar_xi(&self) -> EndoPoly {
        self.eps_xi()
            .scale(self.b0())
            .sub(&self.iota_xi().scale(self.a0()))
    }

    fn norm_sqr_id(&self) -> EndoPoly {
        EndoPoly::from_scalar(self.dim(), &XiPoly::norm_sqr())
    }

    fn homog(&self, order: i32, num: EndoPoly, k: u32) -> HomogSymbol {
        HomogSymbol::new(order, num, k).expect("constructed symbols are homogeneous")
    }

    /// `σ(D̃) = i c̃(ξ) + i c(X)`; with `adjoint`, the symbol of `D̃*`,
    /// whose order-one part is `i c̄(ξ)`.
    pub fn symbol_of_operator(&self, x: &Covector, adjoint: bool) -> GradedSymbol {
        let i = ParamScalar::i();
        let lead = if adjoint {
            self.c_bar_xi()
        } else {
            self.c_tilde_xi()
        };
        let p1 = self.homog(1, lead.scale(&i), 0);
        // i c(X) is self-adjoint since c(X) is skew
        let p0 = HomogSymbol::constant(self.fiber.c(x).scale(&i));
        GradedSymbol::from_parts([p1, p0]).expect("distinct orders")
    }

    /// `σ₂(Δ̃) = a0²|ξ|² + (b0² − a0²) ε(ξ)ι(ξ)`.
    pub fn laplacian_leading(&self) -> HomogSymbol {
        let a2 = self.a0().pow(2);
        let b2 = self.b0().pow(2);
        let num = self
            .norm_sqr_id()
            .scale(&a2)
            .add(&self.eps_iota_xi().scale(&(&b2 - &a2)));
        self.homog(2, num, 0)
    }

    /// Inverse of a symbol of the form `(α|ξ|² + β ε(ξ)ι(ξ))·|ξ|^{2m}`.
    pub fn invert_leading(&self, s: &HomogSymbol) -> Result<HomogSymbol> {
        let k = s.denom_pow();
        let deg = s.order() + 2 * k as i32;
        if deg < 2 || deg % 2 != 0 {
            return Err(EngineError::NonInvertibleLeading(format!(
                "numerator degree {deg} is not an even number >= 2"
            )));
        }
        let j = (deg / 2) as u32;
        let mut top = [0u8; NVARS];
        top[0] = 2 * j as u8;
        let c = s.numerator().coeff(&top);
        let vac = self.fiber.position(&[]);
        let one = self.fiber.position(&[0]);
        let alpha = c.get(vac, vac).clone();
        let beta = c.get(one, one) - &alpha;
        let shape = self
            .norm_sqr_id()
            .scale(&alpha)
            .add(&self.eps_iota_xi().scale(&beta))
            .mul_scalar_poly(&XiPoly::norm_sqr().pow(j - 1));
        if shape != *s.numerator() {
            return Err(EngineError::NonInvertibleLeading(
                "not of the form alpha*|xi|^2 + beta*eps(xi)iota(xi)".into(),
            ));
        }
        let apb = &alpha + &beta;
        if alpha.is_zero() || apb.is_zero() {
            return Err(EngineError::NonInvertibleLeading(
                "alpha or alpha+beta is zero".into(),
            ));
        }
        let gamma = alpha.inv()?;
        let delta = -(&beta / &(&alpha * &apb));
        let num = self
            .norm_sqr_id()
            .scale(&gamma)
            .add(&self.eps_iota_xi().scale(&delta))
            .mul_scalar_poly(&XiPoly::norm_sqr().pow(k));
        let t = self.homog(-s.order(), num, j + 1).reduce();

        let id = HomogSymbol::constant(self.fiber.identity());
        let (gs, gt) = (GradedSymbol::from(s.clone()), GradedSymbol::from(t.clone()));
        for prod in [graded_product(&gs, &gt, 0)?, graded_product(&gt, &gs, 0)?] {
            if !prod.equivalent(&id) {
                return Err(EngineError::NonInvertibleLeading(
                    "inverse check failed".into(),
                ));
            }
        }
        Ok(t)
    }

    /// `σ₋₂(Δ̃⁻¹) = (b0²|ξ|² + (a0² − b0²) ε(ξ)ι(ξ)) / (a0² b0² |ξ|⁴)`.
    pub fn sigma_minus2(&self) -> &HomogSymbol {
        self.sigma_m2.get_or_init(|| {
            self.invert_leading(&self.laplacian_leading())
                .expect("a0 b0 != 0")
        })
    }

    /// `σ₋₄(Δ̃⁻²)`, the square of `σ₋₂`.
    pub fn sigma_minus4_sq(&self) -> &HomogSymbol {
        self.sigma_m4.get_or_init(|| {
            let s = GradedSymbol::from(self.sigma_minus2().clone());
            graded_product(&s, &s, -4).expect("orders agree")
        })
    }

    /// The closed form `(b0⁴|ξ|² + (a0⁴ − b0⁴) ε(ξ)ι(ξ)) / (a0⁴ b0⁴ |ξ|⁶)`,
    /// kept separately so it can be compared with the computed square.
    pub fn sigma_minus4_closed_form(&self) -> HomogSymbol {
        let a4 = self.a0().pow(4);
        let b4 = self.b0().pow(4);
        let inv = (&a4 * &b4).inv().expect("a0 b0 != 0");
        let num = self
            .norm_sqr_id()
            .scale(&b4)
            .add(&self.eps_iota_xi().scale(&(&a4 - &b4)))
            .scale(&inv);
        self.homog(-4, num, 3)
    }

    /// `S₁ = −(c̄(ξ)c(X) + c(X)c̃(ξ))`, the order-one part of `σ(D̃*D̃)`
    /// contributed by the vector field.
    pub fn sigma1_perturbation(&self, x: &Covector) -> HomogSymbol {
        let cx = self.fiber.c(x);
        let num = self
            .c_bar_xi()
            .right_mul(&cx)
            .add(&self.c_tilde_xi().left_mul(&cx))
            .neg();
        self.homog(1, num, 0)
    }

    /// `σ₋₅((D̃*D̃)⁻²) = −σ₋₂ S₁ σ₋₄ − σ₋₄ S₁ σ₋₂`.
    pub fn sigma_minus5_sq(&self, x: &Covector) -> HomogSymbol {
        let s1 = self.sigma1_perturbation(x);
        if s1.is_zero() {
            return HomogSymbol::zero(self.dim(), -5);
        }
        let m2 = self.sigma_minus2();
        let m4 = self.sigma_minus4_sq();
        let left = m2.mul(&s1).mul(m4);
        let right = m4.mul(&s1).mul(m2);
        left.add(&right).expect("equal orders").neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_ring::GaussRat;

    fn ones() -> SymbolCalculus {
        SymbolCalculus::new(Params::numeric(GaussRat::one(), GaussRat::one()).unwrap())
    }

    #[test]
    fn laplacian_at_unit_weights_is_minimal() {
        let sc = ones();
        let id = sc.fiber().identity();
        let want = HomogSymbol::new(2, sc.norm_sqr_id(), 0).unwrap();
        assert_eq!(sc.laplacian_leading(), want);
        let inv = sc.invert_leading(&want).unwrap();
        assert_eq!(inv, HomogSymbol::new(-2, EndoPoly::constant(id), 1).unwrap());
    }

    #[test]
    fn sigma_minus4_matches_closed_form() {
        let sc = SymbolCalculus::symbolic();
        let m4 = sc.sigma_minus4_sq();
        assert_eq!(m4.order(), -4);
        assert!(m4.equivalent(&sc.sigma_minus4_closed_form()));
    }

    #[test]
    fn double_inversion() {
        let sc = SymbolCalculus::symbolic();
        let l = sc.laplacian_leading();
        let back = sc.invert_leading(sc.sigma_minus2()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn non_invertible_shapes() {
        let sc = SymbolCalculus::symbolic();
        let s = HomogSymbol::new(1, sc.c_xi(), 0).unwrap();
        assert!(matches!(
            sc.invert_leading(&s),
            Err(EngineError::NonInvertibleLeading(_))
        ));
        let e = HomogSymbol::new(2, sc.eps_iota_xi(), 0).unwrap();
        assert!(matches!(
            sc.invert_leading(&e),
            Err(EngineError::NonInvertibleLeading(_))
        ));
    }
}
