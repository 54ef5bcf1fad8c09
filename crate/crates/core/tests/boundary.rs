use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use proptest::prelude::*;
use spectral_torsion::boundary_residue::{BoundaryDensity, BoundaryResidue, Pole, XiNRational};
use spectral_torsion::fiber_algebra::{Covector, Params};
use spectral_torsion::interior_residue::SphereValue;
use spectral_torsion::verification_oracle::full_pipeline_numeric;
use spectral_torsion::{GaussRat, ParamScalar};

type R = XiNRational<ParamScalar>;

fn int(n: i64) -> ParamScalar {
    ParamScalar::from_int(n)
}

fn frac(num: &[i64], p: u32, q: u32) -> R {
    let n: Vec<ParamScalar> = num.iter().map(|&c| int(c)).collect();
    R::from_fraction(ParamScalar::zero(), &n, p, q)
}

/// Proper rational functions with poles at `±i` only.
fn proper() -> impl Strategy<Value = R> {
    (1u32..4, 0u32..4)
        .prop_flat_map(|(p, q)| (prop::collection::vec(-5i64..=5, (p + q) as usize), Just(p), Just(q)))
        .prop_map(|(n, p, q)| frac(&n, p, q))
}

fn symbolic() -> &'static BoundaryDensity {
    static D: OnceLock<BoundaryDensity> = OnceLock::new();
    D.get_or_init(|| BoundaryResidue::symbolic().boundary_torsion().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn projection_is_idempotent(f in proper()) {
        let p = f.pi_plus();
        prop_assert_eq!(p.pi_plus(), p.clone());
        // the complement has no pole at +i
        let minus = f.sub(&p);
        prop_assert!(minus.pi_plus().is_zero());
        prop_assert_eq!(minus.add(&p), f);
    }

    #[test]
    fn projection_is_linear(f in proper(), g in proper(), c in -5i64..=5) {
        let c = GaussRat::from_int(c);
        prop_assert_eq!(f.scale(&c).add(&g).pi_plus(), f.pi_plus().scale(&c).add(&g.pi_plus()));
    }
}

#[test]
fn worked_projections() {
    let plus = frac(&[1], 1, 0);
    assert_eq!(plus.pi_plus(), plus);
    assert!(frac(&[1], 0, 1).pi_plus().is_zero());
    let half = R::pole_term(Pole::Plus, 1, ParamScalar::parse("-i/2").unwrap());
    assert_eq!(frac(&[1], 1, 1).pi_plus(), half);
}

#[test]
fn worked_integrals() {
    // ∫ dt/(1+t²)² = π/2, ∫ dt/(1+t²) = π; values are in units of π
    assert_eq!(frac(&[1], 2, 2).integrate_real().unwrap(), ParamScalar::from_frac(1, 2));
    assert_eq!(frac(&[1], 1, 1).integrate_real().unwrap(), int(1));
    assert!(frac(&[0, 1], 1, 1).integrate_real().is_err());
    assert!(R::polynomial(ParamScalar::zero(), vec![int(1)]).integrate_real().is_err());
}

/// `∫_ℝ f` through `t = tan θ` and composite Simpson on `(−π/2, π/2)`.
fn simpson(f: &R) -> f64 {
    let n = 4000;
    let h = 2.0 * FRAC_PI_2 / n as f64;
    let g = |th: f64| {
        if th.abs() >= FRAC_PI_2 {
            return 0.0;
        }
        let c = th.cos();
        f.eval_real(th.tan()).unwrap().0 / (c * c)
    };
    let mut s = g(-FRAC_PI_2) + g(FRAC_PI_2);
    for j in 1..n {
        let th = -FRAC_PI_2 + j as f64 * h;
        s += if j % 2 == 1 { 4.0 } else { 2.0 } * g(th);
    }
    s * h / 3.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn residues_agree_with_quadrature(k in 2u32..5, seed in prop::collection::vec(-5i64..=5, 8)) {
        let deg = (2 * k - 2) as usize;
        let f = frac(&seed[..deg.min(seed.len())], k, k);
        let exact = f.integrate_real().unwrap().as_constant().unwrap().to_f64_pair();
        prop_assert!(exact.1.abs() < 1e-12);
        let exact = exact.0 * std::f64::consts::PI;
        let numeric = simpson(&f);
        prop_assert!((numeric - exact).abs() <= 1e-6 * exact.abs().max(1.0), "{} vs {}", numeric, exact);
    }
}

#[test]
fn frozen_symbolic_density() {
    let d = symbolic();
    let c = ParamScalar::parse("-(a0^4 + 6*a0^2*b0^2 + b0^4)/(a0^2*b0^2)").unwrap();
    assert_eq!(d.ku, c);
    assert_eq!(d.kv, -&c);
    assert_eq!(d.kw, c);
    assert_eq!(d.bracket_coefficient().unwrap(), SphereValue::new(c, 2));
}

#[test]
fn frozen_numeric_density() {
    let (a, b) = (GaussRat::from_frac(3, 7), GaussRat::from_frac(-5, 2));
    assert_eq!(
        full_pipeline_numeric(&a, &b, "boundary").unwrap(),
        SphereValue::new(ParamScalar::parse("-1766521/44100").unwrap(), 2)
    );
    // nonzero on the diagonal
    let one = GaussRat::one();
    assert_eq!(full_pipeline_numeric(&one, &one, "boundary").unwrap(), SphereValue::new(int(-8), 2));
}

#[test]
fn basis_triples_reconstruct() {
    let r = BoundaryResidue::new(Params::numeric(GaussRat::from_int(2), GaussRat::from_frac(-1, 3)).unwrap());
    let d = r.boundary_torsion().unwrap();
    assert_eq!(r.tensor_check(&d).unwrap(), None);
    let (u, v, w) = (Covector::from_ints(&[1, 2, 0, 3]), Covector::from_ints(&[0, -1, 1, 2]), Covector::from_ints(&[2, 0, 1, -1]));
    assert_eq!(r.boundary_value(&u, &v, &w).unwrap(), d.evaluate(&u, &v, &w));
}

#[test]
fn projection_matches_the_closed_form() {
    let r = BoundaryResidue::symbolic();
    assert_eq!(r.sigma_minus1_inverse_adjoint().unwrap().pi_plus(), r.printed_pi_plus());
}
