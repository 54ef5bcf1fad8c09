use proptest::prelude::*;
use spectral_torsion::fiber_algebra::{Covector, Fiber, FiberEndo, Params};
use spectral_torsion::ParamScalar;

fn covector(n: usize) -> impl Strategy<Value = Covector> {
    prop::collection::vec((-9i64..=9, 1i64..=9), n)
        .prop_map(|v| Covector::new(v.into_iter().map(|(a, b)| ParamScalar::from_frac(a, b)).collect()))
}

fn scalar_id(f: &Fiber, s: ParamScalar) -> FiberEndo {
    FiberEndo::scalar(f.dim(), s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn clifford_relations(u in covector(4), v in covector(4)) {
        let f = Fiber::four();
        let g = u.dot(&v);
        prop_assert_eq!(f.c_hat(&u).anticommutator(&f.c_hat(&v)), scalar_id(&f, ParamScalar::from_int(2) * &g));
        prop_assert_eq!(f.c(&u).anticommutator(&f.c(&v)), scalar_id(&f, ParamScalar::from_int(-2) * &g));
        prop_assert!(f.c(&u).anticommutator(&f.c_hat(&v)).is_zero());
    }

    #[test]
    fn weighted_anticommutators(u in covector(4), v in covector(4)) {
        let f = Fiber::four();
        let p = Params::symbolic();
        let (a, b) = (p.a0.clone(), p.b0.clone());
        let g = u.dot(&v);
        let ct = f.c_tilde(&u, &p);
        prop_assert_eq!(ct.anticommutator(&f.c(&v)), scalar_id(&f, -(a.clone() + &b) * &g));
        prop_assert_eq!(ct.anticommutator(&f.c_tilde(&v, &p)), scalar_id(&f, ParamScalar::from_int(-2) * &a * &b * &g));
        prop_assert_eq!(ct.anticommutator(&f.c_hat(&v)), scalar_id(&f, (a - &b) * &g));
    }

    #[test]
    fn nilpotent_actions(v in covector(4)) {
        let f = Fiber::four();
        prop_assert!(f.eps(&v).mul(&f.eps(&v)).is_zero());
        prop_assert!(f.iota(&v).mul(&f.iota(&v)).is_zero());
    }

    #[test]
    fn trace_is_cyclic(u in covector(4), v in covector(4), w in covector(4)) {
        let f = Fiber::four();
        let p = Params::symbolic();
        let x = f.c_tilde(&u, &p).mul(&f.eps(&v));
        let y = f.c_bar(&w, &p).mul(&f.iota(&u)).add(&f.c(&v));
        prop_assert_eq!(x.mul(&y).trace(), y.mul(&x).trace());
        prop_assert_eq!(x.trace_of_product(&y), x.mul(&y).trace());
    }

    #[test]
    fn trace_is_basis_independent(u in covector(4), v in covector(4), seed in 0usize..24) {
        // relabelling the frame permutes the basis of the fiber
        let perms = [[0, 1, 2, 3], [1, 0, 2, 3], [2, 3, 0, 1], [3, 2, 1, 0], [1, 2, 3, 0], [0, 2, 1, 3]];
        let perm = perms[seed % perms.len()];
        let f = Fiber::four();
        let p = Params::symbolic();
        let permute = |c: &Covector| Covector::new(perm.iter().map(|&k| c.get(k).clone()).collect());
        let t1 = f.c_tilde(&u, &p).mul(&f.c_tilde(&v, &p)).trace();
        let t2 = f.c_tilde(&permute(&u), &p).mul(&f.c_tilde(&permute(&v), &p)).trace();
        prop_assert_eq!(t1, t2);
    }

    #[test]
    fn relations_in_other_dimensions(u in covector(3), v in covector(3)) {
        let f = Fiber::new(3);
        prop_assert_eq!(f.dim(), 8);
        prop_assert_eq!(f.c(&u).anticommutator(&f.c(&v)), scalar_id(&f, ParamScalar::from_int(-2) * u.dot(&v)));
    }
}

#[test]
fn fiber_shape() {
    let f = Fiber::four();
    assert_eq!(f.dim(), 16);
    assert_eq!(f.identity().trace(), ParamScalar::from_int(16));
    assert_eq!(f.subset(0), Vec::<usize>::new());
    assert_eq!(f.subset(1), vec![0]);
    assert_eq!(f.subset(5), vec![0, 1]);
    assert_eq!(f.subset(15), vec![0, 1, 2, 3]);
}

#[test]
fn frozen_traces() {
    let f = Fiber::four();
    let p = Params::symbolic();
    let e = |k| Covector::basis(4, k);
    // Tr(c~(u)c~(v)) = -16 a0 b0 g(u,v)
    let t = f.c_tilde(&e(0), &p).mul(&f.c_tilde(&e(0), &p)).trace();
    assert_eq!(t, ParamScalar::parse("-16*a0*b0").unwrap());
    assert!(f.c_tilde(&e(0), &p).mul(&f.c_tilde(&e(1), &p)).trace().is_zero());
    // Tr(eps(e1)iota(e1)) counts forms containing e1
    assert_eq!(f.eps(&e(0)).mul(&f.iota(&e(0))).trace(), ParamScalar::from_int(8));
    // a0 = b0 = 1: c~ = c
    let one = Params::numeric(1.into(), 1.into()).unwrap();
    assert_eq!(f.c_tilde(&e(2), &one), f.c(&e(2)));
}
