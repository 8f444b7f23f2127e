use chebcurves::chebyshev::{chebyshev_t, chebyshev_u, chebyshev_u_upto};
use chebcurves::cremona::QuadMap;
use chebcurves::poly::{ratio, scalar, HomoPoly3, Monomial3, Scalar, UniPoly};
use proptest::prelude::*;

fn homo(degree: u32) -> impl Strategy<Value = HomoPoly3> {
    let mons: Vec<Monomial3> = (0..=degree)
        .flat_map(|i| (0..=degree - i).map(move |j| Monomial3::new(i, j, degree - i - j)))
        .collect();
    let n = mons.len();
    prop::collection::vec((-9i64..=9, 1i64..5), n).prop_map(move |cs| {
        let terms = mons.iter().zip(cs).map(|(m, (num, den))| (*m, ratio(num, den)));
        let f = HomoPoly3::from_terms(terms).unwrap();
        if f.is_zero() { HomoPoly3::zero(degree) } else { f }
    })
}

fn nonzero_homo(degree: u32) -> impl Strategy<Value = HomoPoly3> {
    homo(degree).prop_filter("non-zero", |f| !f.is_zero())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..9).prop_filter("non-zero", |(n, _)| *n != 0).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn canonical_is_idempotent_and_scale_free(f in nonzero_homo(3), k in nonzero_scalar()) {
        let c = f.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(f.scale(&k).canonical(), c);
    }

    #[test]
    fn division_round_trip(g in nonzero_homo(2), h in homo(3)) {
        let gh = g.mul(&h);
        prop_assert_eq!(gh.divide_exact(&g).unwrap(), h.clone());
        prop_assert_eq!(gh.divide_exact_reduction(&g).unwrap(), h);
    }

    #[test]
    fn linear_division_routes_agree(l in nonzero_homo(1), h in homo(4)) {
        let lh = l.mul(&h);
        let (q, r) = lh.div_rem_linear(&l).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(&q, &h);
        prop_assert_eq!(lh.divide_exact_reduction(&l).unwrap(), q);
    }

    #[test]
    fn heron_doubles_degree(f in nonzero_homo(4)) {
        let g = f.compose(QuadMap::heron().components()).unwrap();
        prop_assert_eq!(g.degree(), 8);
        prop_assert!(!g.is_zero());
    }

    #[test]
    fn render_parse_round_trip(f in homo(4)) {
        let text = f.to_string();
        let back: HomoPoly3 = text.parse().unwrap();
        if f.is_zero() {
            prop_assert!(back.is_zero());
        } else {
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn addition_requires_equal_degrees(f in nonzero_homo(2), g in nonzero_homo(3)) {
        prop_assert!(f.add(&g).is_err());
        prop_assert_eq!(f.add(&HomoPoly3::zero(2)).unwrap(), f);
    }

    #[test]
    fn gcd_recovers_shared_root(n in -30i64..30, d in 1i64..12) {
        // T_2 and T_3 shifted to vanish at t0 share only the factor t − t0
        let t0 = ratio(n, d);
        let f = chebyshev_t(2).sub(&UniPoly::constant(chebyshev_t(2).eval(&t0)));
        let g = chebyshev_t(3).sub(&UniPoly::constant(chebyshev_t(3).eval(&t0)));
        let h = f.gcd(&g);
        prop_assume!(h.degree() == Some(1));
        prop_assert_eq!(h, UniPoly::from_coeffs(vec![-t0, scalar(1)]));
    }
}

#[test]
fn gcd_linear_example() {
    // t0 = 1/4: T_2 − (−7/8) and T_3 − T_3(1/4)
    let t0 = ratio(1, 4);
    let f = chebyshev_t(2).sub(&UniPoly::constant(ratio(-7, 8)));
    let g = chebyshev_t(3).sub(&UniPoly::constant(chebyshev_t(3).eval(&t0)));
    assert_eq!(f.gcd(&g), UniPoly::from_coeffs(vec![ratio(-1, 4), scalar(1)]));
}

#[test]
fn chebyshev_recurrence_holds() {
    let us = chebyshev_u_upto(30);
    let two_t = UniPoly::from_ints(&[0, 2]);
    for n in 1..30 {
        assert!(us[n + 1].sub(&two_t.mul(&us[n])).add(&us[n - 1]).is_zero());
    }
}

#[test]
fn sine_square_identity_in_u() {
    // U_{p+q−1} U_{q−p−1} = U_{q−1}² − U_{p−1}² for q > p
    for p in 1..12u32 {
        for q in p + 1..=12 - p {
            let lhs = chebyshev_u(p + q - 1).mul(&chebyshev_u(q - p - 1));
            let rhs = chebyshev_u(q - 1).mul(&chebyshev_u(q - 1)).sub(&chebyshev_u(p - 1).mul(&chebyshev_u(p - 1)));
            assert_eq!(lhs, rhs, "{p}:{q}");
        }
    }
}

#[test]
fn pythagorean_identity_for_both_kinds() {
    let one_minus_t2 = UniPoly::from_ints(&[1, 0, -1]);
    for n in 1..=12 {
        let t = chebyshev_t(n);
        let u = chebyshev_u(n - 1);
        assert_eq!(t.mul(&t).add(&one_minus_t2.mul(&u).mul(&u)), UniPoly::one());
    }
}
