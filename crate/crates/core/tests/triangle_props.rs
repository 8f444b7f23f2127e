use std::f64::consts::PI;

use chebcurves::chebyshev::parametrization;
use chebcurves::poly::ratio;
use chebcurves::triangle::{discriminant, solve_sss, Classification, ComplexTriple, DEFAULT_TOLERANCE};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn sides() -> impl Strategy<Value = ComplexTriple> {
    (complex(), complex(), complex()).prop_map(|(a, b, c)| ComplexTriple::new(a, b, c))
}

fn well_posed(s: &ComplexTriple) -> bool {
    let scale = s.scale();
    s.as_array().iter().all(|z| z.norm() > 1e-3 * scale)
        && discriminant(s).factors.iter().all(|f| f.norm() > 1e-3 * scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn heron_form_matches_product(s in sides()) {
        let d = discriminant(&s);
        prop_assert!((d.delta - d.heron).norm() <= 1e-12 * d.delta.norm().max(s.scale().powi(4)));
    }

    #[test]
    fn solutions_satisfy_laws(s in sides()) {
        prop_assume!(well_posed(&s));
        let sol = solve_sss(&s, DEFAULT_TOLERANCE);
        let Classification::Unique(angles) = sol.classification else {
            return Err(TestCaseError::fail(format!("{:?}", sol.classification)));
        };
        prop_assert!(sol.residuals.unwrap().max() < 1e-9, "{:?}", sol.residuals);
        prop_assert!(angles.sum_defect() < 1e-9);
        prop_assert!(sol.diagnostic.is_none(), "{:?}", sol.diagnostic);
        prop_assert!((sol.delta - 16.0 * sol.area * sol.area).norm() <= 1e-9 * sol.delta.norm());
    }

    #[test]
    fn sign_class_is_canonical(s in sides()) {
        prop_assume!(well_posed(&s));
        let Classification::Unique(angles) = solve_sss(&s, DEFAULT_TOLERANCE).classification else { unreachable!() };
        prop_assert!(angles.negated(DEFAULT_TOLERANCE).approx_eq(&angles, 1e-9));
        // negating all sides leaves the shape and the angles unchanged
        let neg = ComplexTriple::new(-s.a, -s.b, -s.c);
        let Classification::Unique(other) = solve_sss(&neg, DEFAULT_TOLERANCE).classification else { unreachable!() };
        prop_assert!(other.approx_eq(&angles, 1e-9));
    }

    #[test]
    fn sine_square_identity(a in complex(), b in complex()) {
        let (a, b) = (a / 4.0, b / 4.0);
        let lhs = (a + b).sin() * (a - b).sin();
        let rhs = a.sin() * a.sin() - b.sin() * b.sin();
        let scale = (a.sin().norm().powi(2) + b.sin().norm().powi(2) + (a + b).sin().norm() * (a - b).sin().norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn chebyshev_triangles_have_ratio_angles(which in 0usize..5, k in 1u32..1000) {
        let (p, q) = [(1, 2), (2, 3), (1, 3), (3, 4), (2, 5)][which];
        // rational t strictly between cos(π/(p+q)) and 1
        let lo = (PI / (p + q) as f64).cos();
        let t = ratio(((lo + (1.0 - lo) * k as f64 / 1000.0) * 1e6).round() as i64, 1_000_000);
        let tf = t.to_f64().unwrap();
        prop_assume!(tf > lo && tf < 1.0);
        let v = parametrization(p, q).unwrap().evaluate_f64(tf);
        let sol = solve_sss(&ComplexTriple::real(v[0], v[1], v[2]), DEFAULT_TOLERANCE);
        let Classification::Unique(angles) = sol.classification else { unreachable!() };
        let [alpha, beta, _] = angles.angles();
        prop_assert!(alpha.im.abs() < 1e-12 && beta.im.abs() < 1e-12);
        prop_assert!((alpha.re / beta.re - p as f64 / q as f64).abs() < 1e-9);
        prop_assert!((alpha.re - p as f64 * tf.acos()).abs() < 1e-9);
    }
}
