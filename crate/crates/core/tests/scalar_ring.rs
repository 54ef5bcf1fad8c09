use proptest::prelude::*;
use spectral_torsion::{GaussRat, ParamScalar};

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9).prop_map(|(a, b, c, d)| {
        &GaussRat::from_frac(a, b) + &(&GaussRat::from_frac(c, d) * &GaussRat::i())
    })
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, -2i64..=2).prop_map(|(a, c)| &GaussRat::from_int(a) + &(&GaussRat::from_int(c) * &GaussRat::i()))
}

/// Small rational functions of `a0, b0`. Denominators are a monomial times a
/// short binomial, the shape the residue pipeline produces.
fn scalar() -> impl Strategy<Value = ParamScalar> {
    let num = (small_gauss(), small_gauss(), small_gauss(), 0u32..3).prop_map(|(c0, c1, c2, k)| {
        ParamScalar::from_gauss(c0)
            + ParamScalar::from_gauss(c1) * ParamScalar::a0().pow(k)
            + ParamScalar::from_gauss(c2) * ParamScalar::b0()
    });
    let den = (0u32..3, 0u32..3, -2i64..=2, 1u32..3).prop_map(|(j, k, c, e)| {
        let bin = ParamScalar::a0().pow(e) + ParamScalar::from_int(c) * ParamScalar::b0().pow(e);
        let bin = if bin.is_zero() { ParamScalar::one() } else { bin };
        ParamScalar::a0().pow(j) * ParamScalar::b0().pow(k) * bin
    });
    (num, den).prop_map(|(n, d)| n / d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gaussian_field_axioms(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        } else {
            prop_assert!(x.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_function_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!((x.clone() + &y) + &z, x.clone() + (y.clone() + &z));
        prop_assert_eq!((x.clone() * &y) * &z, x.clone() * (y.clone() * &z));
        prop_assert_eq!(x.clone() * (y.clone() + &z), x.clone() * &y + x.clone() * &z);
        if !x.is_zero() {
            prop_assert!((x.clone() * x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_decides_equality(x in scalar(), y in scalar()) {
        prop_assert_eq!(x == y, (x.clone() - &y).is_zero());
        let rebuilt = (x.clone() * &y) / if y.is_zero() { ParamScalar::one() } else { y.clone() };
        if !y.is_zero() {
            prop_assert_eq!(rebuilt, x.clone());
        }
    }

    #[test]
    fn text_round_trip(x in scalar()) {
        prop_assert_eq!(ParamScalar::parse(&x.to_text()).unwrap(), x);
    }
}

#[test]
fn parse_examples() {
    let x = ParamScalar::parse("(a0^4 - b0^4) / (a0^2 + b0^2)").unwrap();
    assert_eq!(x, ParamScalar::parse("a0^2 - b0^2").unwrap());
    assert!(ParamScalar::parse("a0 +").is_err());
    assert_eq!(ParamScalar::parse("i*i").unwrap(), ParamScalar::from_int(-1));
}

#[test]
fn evaluation_and_specialization_agree() {
    let x = ParamScalar::parse("12*i*(a0 - b0)*(a0^4 - b0^4) / (a0^3*b0^3)").unwrap();
    let (a, b) = (GaussRat::from_int(2), GaussRat::from_int(1));
    assert_eq!(x.eval(&a, &b).unwrap(), GaussRat::from_frac(45, 2) * GaussRat::i());
    let d = x.specialize(&ParamScalar::b0(), &ParamScalar::b0()).unwrap();
    assert!(d.is_zero());
    assert!(x.eval(&GaussRat::zero(), &b).is_err());
}
