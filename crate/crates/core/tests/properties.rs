//! Property tests for the algebraic and numerical invariants.

use std::f64::consts::TAU;

use num_complex::Complex64;
use proptest::prelude::*;

use weylcub::approx::{coeffs_u, coeffs_v, inner_k, Target};
use weylcub::cubature::{build_rule, integrate_pullback};
use weylcub::liealg::{build_algebra, enumerate_dominant, m_degree, AlgebraData, AlgebraLabel, Weight};
use weylcub::orbitfuncs::eval_c;
use weylcub::weyl::{orbit, reflect, reflect_point, stabilizer_order, TorusPoint};

fn algebra() -> impl Strategy<Value = AlgebraData> {
    prop::sample::select(AlgebraLabel::ALL.to_vec()).prop_map(build_algebra)
}

fn rank_two() -> impl Strategy<Value = AlgebraData> {
    prop::sample::select(AlgebraLabel::RANK_TWO.to_vec()).prop_map(build_algebra)
}

fn truncate(data: &AlgebraData, v: [i64; 2]) -> Weight {
    Weight::new(v[..data.rank()].to_vec())
}

fn point(data: &AlgebraData, a: [f64; 2]) -> TorusPoint {
    TorusPoint::new(a[..data.rank()].to_vec())
}

fn c(data: &AlgebraData, l: &Weight, x: &TorusPoint) -> Complex64 {
    eval_c(data, l, x).unwrap()
}

proptest! {
    #[test]
    fn m_degree_grows_along_fundamental_weights(d in algebra(), v in [0i64..20, 0i64..20], j in 0usize..2) {
        let j = j % d.rank();
        let l = truncate(&d, v);
        let mut up = l.coords().to_vec();
        up[j] += 1;
        let grown = m_degree(&d, &Weight::new(up));
        prop_assert_eq!(grown, m_degree(&d, &l) + d.dual_marks()[j]);
        prop_assert!(grown > m_degree(&d, &l));
    }

    #[test]
    fn orbits_are_closed_and_sized_by_stabilizer(d in algebra(), v in [0i64..6, 0i64..6]) {
        let l = truncate(&d, v);
        let o = orbit(&d, &l);
        for w in o.elements() {
            for i in 0..d.rank() {
                prop_assert!(o.contains(&reflect(&d, i, w)));
            }
        }
        prop_assert_eq!(o.len() as u64 * stabilizer_order(&d, &l), d.weyl_order());
        prop_assert_eq!(o.elements().iter().filter(|w| w.is_dominant()).count(), 1);
    }

    #[test]
    fn c_functions_are_invariant_and_periodic(
        d in algebra(),
        v in [0i64..6, 0i64..6],
        a in [-1.0f64..1.0, -1.0f64..1.0],
        shift in [-3i64..3, -3i64..3],
        i in 0usize..2,
    ) {
        let l = truncate(&d, v);
        let x = point(&d, a);
        let base = c(&d, &l, &x);
        let reflected = c(&d, &l, &reflect_point(&d, i % d.rank(), &x));
        prop_assert!((base - reflected).norm() < 1e-10);
        let moved: Vec<f64> = x.coords().iter().zip(shift).map(|(ai, s)| ai + s as f64).collect();
        prop_assert!((base - c(&d, &l, &TorusPoint::new(moved))).norm() < 1e-10);
    }

    #[test]
    fn a2_conjugation_swaps_labels(v in [0i64..8, 0i64..8], a in [0.0f64..1.0, 0.0f64..1.0]) {
        let d = build_algebra(AlgebraLabel::A2);
        let x = TorusPoint::new(a.to_vec());
        let l = Weight::new(v.to_vec());
        let swapped = Weight::new(vec![v[1], v[0]]);
        prop_assert!((c(&d, &l, &x).conj() - c(&d, &swapped, &x)).norm() < 1e-10);
    }

    #[test]
    fn c2_and_g2_functions_are_real(v in [0i64..8, 0i64..8], a in [0.0f64..1.0, 0.0f64..1.0], g2 in any::<bool>()) {
        let d = build_algebra(if g2 { AlgebraLabel::G2 } else { AlgebraLabel::C2 });
        let z = c(&d, &Weight::new(v.to_vec()), &TorusPoint::new(a.to_vec()));
        prop_assert!(z.im.abs() < 1e-10 * (1.0 + z.norm()));
    }

    #[test]
    fn cubature_reproduces_norms(d in algebra(), m in 2i64..12, pick in 0usize..1000) {
        // |C_lambda|^2 has m-degree 2|lambda|_m <= 2M - 1 when |lambda|_m <= M - 1
        let labels = enumerate_dominant(&d, m - 1);
        let l = &labels[pick % labels.len()];
        let rule = build_rule(&d, m).unwrap();
        let value = integrate_pullback(&rule, |a| c(&d, l, &TorusPoint::new(a.to_vec())).norm_sqr());
        let expected = d.kappa() * TAU.powi(d.rank() as i32) / stabilizer_order(&d, l) as f64;
        prop_assert!((value - expected).abs() < 1e-9 * expected, "{} vs {}", value, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn norm_of_c_functions(d in rank_two(), v in [0i64..4, 0i64..4]) {
        let l = truncate(&d, v);
        let g = |a: &[f64]| c(&d, &l, &TorusPoint::new(a.to_vec()));
        let n = inner_k(&d, Target::Pullback(&g), Target::Pullback(&g), 256).unwrap();
        let h = stabilizer_order(&d, &l) as f64;
        prop_assert!((n.re - 1.0 / h).abs() < 1e-8 && n.im.abs() < 1e-8, "{} vs 1/{}", n, h);
    }

    #[test]
    fn v_equals_u_on_low_degree(d in algebra(), m in 2i64..5, seed in prop::collection::vec(-1.0f64..1.0, 64)) {
        let basis = enumerate_dominant(&d, m - 1);
        let p = |a: &[f64]| -> Complex64 {
            let x = TorusPoint::new(a.to_vec());
            basis
                .iter()
                .enumerate()
                .map(|(k, mu)| Complex64::new(seed[2 * k % 64], seed[(2 * k + 1) % 64]) * c(&d, mu, &x))
                .sum()
        };
        let v = coeffs_v(&d, m, Target::Pullback(&p)).unwrap();
        let u = coeffs_u(&d, m, Target::Pullback(&p), 256).unwrap();
        for (l, a) in &v.coeffs {
            prop_assert!((a - u.get(l).unwrap()).norm() < 1e-8, "{}: {} vs {}", l, a, u.get(l).unwrap());
        }
    }
}
