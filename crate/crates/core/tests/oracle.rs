use spectral_torsion::fiber_algebra::{Covector, Params};
use spectral_torsion::verification_oracle::{
    check_identity, registry, verify, Ctx, Inst, Side, DEFAULT_SEED,
};
use spectral_torsion::ParamScalar;

/// Tags whose statement, as printed, disagrees with the brute force.
const MISMATCHED: [&str; 10] = [
    "torsion-aux/triple-iota",
    "torsion-aux/triple-eps",
    "torsion-xi/plain",
    "torsion-xi/left",
    "one-form-xi/plain",
    "one-form-xi/right",
    "one-form-xi/left",
    "one-form-xi/both",
    "boundary-trace/eps-n-eps-iota",
    "boundary-trace/iota-eps-iota-n",
];

#[test]
fn verdicts_are_frozen() {
    let all = verify("", 12, DEFAULT_SEED).unwrap();
    assert_eq!(all.len(), registry().len());
    for s in &all {
        let expect_match = !MISMATCHED.contains(&s.tag.as_str());
        assert_eq!(s.all_match(), expect_match, "{}", s.tag);
        assert_eq!(s.first_mismatch.is_none(), expect_match, "{}", s.tag);
        if let Some(ok) = s.reconstruction_ok {
            assert!(ok, "fit of {} is inconsistent", s.tag);
        }
    }
}

#[test]
fn corrected_coefficients_are_recovered() {
    let s = &verify("torsion-aux/triple-iota", 12, DEFAULT_SEED).unwrap()[0];
    assert!(s.oracle_form.as_deref().unwrap().contains("-8*a0^2*b0"), "{:?}", s.oracle_form);
    let s = &verify("boundary-trace/eps-n-eps-iota", 12, DEFAULT_SEED).unwrap()[0];
    assert!(s.oracle_form.as_deref().unwrap().contains("-4*a0*b0^2"), "{:?}", s.oracle_form);
}

#[test]
fn runs_are_deterministic() {
    let a = verify("torsion-trace", 8, DEFAULT_SEED).unwrap();
    let b = verify("torsion-trace", 8, DEFAULT_SEED).unwrap();
    assert_eq!(a, b);
    let x = check_identity("clifford/c-hat", 4, 1).unwrap();
    let y = check_identity("clifford/c-hat", 4, 2).unwrap();
    assert_ne!(x[0].instantiation, y[0].instantiation);
}

#[test]
fn worked_boundary_trace() {
    let tag = registry().into_iter().find(|t| t.name == "boundary-trace/eps-n").unwrap();
    let ctx = Ctx::new(Params::symbolic());
    let e = |k| Covector::basis(4, k);
    let t = Inst {
        u: e(3),
        v: e(0),
        w: e(0),
        x: Covector::zero(4),
        xi: e(0),
        n: e(3),
    };
    let want = ParamScalar::parse("8*a0*b0^2").unwrap();
    for side in [(tag.brute)(&ctx, &t), (tag.closed)(&ctx, &t)] {
        match side {
            Side::Scalar(s) => assert_eq!(s, want),
            Side::Matrix(_) => panic!("scalar identity"),
        }
    }
}
