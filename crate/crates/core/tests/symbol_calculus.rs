use proptest::prelude::*;
use spectral_torsion::fiber_algebra::{Covector, Params};
use spectral_torsion::symbol_calculus::{graded_product, GradedSymbol, HomogSymbol, SymbolCalculus};
use spectral_torsion::{GaussRat, ParamScalar};

fn numeric(a: (i64, i64), b: (i64, i64)) -> SymbolCalculus {
    SymbolCalculus::new(Params::numeric(GaussRat::from_frac(a.0, a.1), GaussRat::from_frac(b.0, b.1)).unwrap())
}

fn covector() -> impl Strategy<Value = Covector> {
    prop::collection::vec((-6i64..=6, 1i64..=5), 4).prop_filter_map("nonzero", |v| {
        let c = Covector::new(v.iter().map(|&(n, d)| ParamScalar::from_frac(n, d)).collect());
        (!c.is_zero()).then_some(c)
    })
}

fn nonzero_frac() -> impl Strategy<Value = (i64, i64)> {
    (-7i64..=7, 1i64..=5).prop_filter("nonzero", |p| p.0 != 0)
}

#[test]
fn parametrix_inverts_the_leading_symbol() {
    let sc = SymbolCalculus::symbolic();
    let id = HomogSymbol::constant(sc.fiber().identity());
    let l = GradedSymbol::from(sc.laplacian_leading());
    let r = GradedSymbol::from(sc.sigma_minus2().clone());
    assert!(graded_product(&l, &r, 0).unwrap().equivalent(&id));
    assert!(graded_product(&r, &l, 0).unwrap().equivalent(&id));
}

#[test]
fn squared_parametrix_has_the_closed_form() {
    let sc = SymbolCalculus::symbolic();
    assert!(sc.sigma_minus4_sq().equivalent(&sc.sigma_minus4_closed_form()));
    assert_eq!(sc.sigma_minus4_sq().order(), -4);
}

#[test]
fn degenerate_leading_symbol_is_rejected() {
    let sc = numeric((1, 1), (1, 1));
    let zero = HomogSymbol::zero(sc.dim(), 2);
    assert!(sc.invert_leading(&zero).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn symbols_agree_with_matrices(xi in covector(), a in nonzero_frac(), b in nonzero_frac()) {
        let sc = numeric(a, b);
        let f = sc.fiber();
        let p = sc.params();
        let ct = f.c_tilde(&xi, p);
        let cb = f.c_bar(&xi, p);
        // σ₂ = (i c̄(ξ))(i c̃(ξ))
        let lead = sc.laplacian_leading().eval_at(&xi).unwrap();
        prop_assert_eq!(&lead, &cb.mul(&ct).neg());
        let inv = sc.sigma_minus2().eval_at(&xi).unwrap();
        prop_assert_eq!(&inv, &lead.inverse().unwrap());
        prop_assert_eq!(sc.sigma_minus4_sq().eval_at(&xi).unwrap(), inv.mul(&inv));
    }

    #[test]
    fn symbols_are_homogeneous(xi in covector(), l in nonzero_frac()) {
        let sc = numeric((2, 1), (-1, 3));
        let lam = ParamScalar::from_frac(l.0, l.1);
        let scaled = xi.scale(&lam);
        for s in [sc.laplacian_leading(), sc.sigma_minus2().clone(), sc.sigma_minus4_sq().clone()] {
            let k = lam.pow(s.order().unsigned_abs());
            let k = if s.order() < 0 { k.inv().unwrap() } else { k };
            prop_assert_eq!(s.eval_at(&scaled).unwrap(), s.eval_at(&xi).unwrap().scale(&k));
        }
    }
}
