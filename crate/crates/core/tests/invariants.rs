use dasasm::arith::{det_bareiss, det_cofactor, det_gauss, rational, Cyclotomic, Rational, Ring};
use dasasm::asm::{d4_apply, enumerate_asm, in_class, is_asm, D4Element, SymmetryClass};
use dasasm::bijection::{
    config_from_triangle, dasasm_from_triangle, enumerate_triangles, triangle_from_config, triangle_from_dasasm,
};
use dasasm::schur::{schur_bialternant, schur_ssyt, schur_tableau_sum, Partition};
use dasasm::vertex::{brute_force_eval, partition_function_cleared, Sector, WeightContext};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| rational(a, b))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !Ring::is_zero(r))
}

fn cyclotomic(conductor: u32) -> impl Strategy<Value = Cyclotomic> {
    let phi = dasasm::arith::euler_phi(conductor);
    prop::collection::vec(small_rational(), phi).prop_map(move |c| Cyclotomic::from_poly(conductor, c))
}

fn int_matrix(k: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-6i64..=6).prop_map(|a| rational(a, 1)), k), k)
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = a.len();
    (0..k)
        .map(|i| {
            (0..k).map(|j| (0..k).map(|t| a[i][t].clone() * &b[t][j]).fold(rational(0, 1), |s, x| s + x)).collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_inverse(x in cyclotomic(12)) {
        prop_assume!(!x.is_zero());
        let y = x.inverse().unwrap();
        prop_assert!((x * &y).is_one());
    }

    #[test]
    fn cyclotomic_field_laws(a in cyclotomic(8), b in cyclotomic(8), c in cyclotomic(8)) {
        prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + b.clone() * &c);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() * &b).conj(), a.conj() * &b.conj());
    }

    #[test]
    fn embedding_is_a_homomorphism(a in cyclotomic(4), b in cyclotomic(4)) {
        let e = |x: &Cyclotomic| x.embed(12).unwrap();
        prop_assert_eq!(e(&(a.clone() * &b)), e(&a) * &e(&b));
        prop_assert_eq!(e(&(a.clone() + &b)), e(&a) + e(&b));
    }

    #[test]
    fn determinant_methods_agree(m in (1usize..=5).prop_flat_map(int_matrix)) {
        let g = det_gauss(&m).unwrap();
        prop_assert_eq!(det_bareiss(&m).unwrap(), g.clone());
        prop_assert_eq!(det_cofactor(&m).unwrap(), g);
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|k| (int_matrix(k), int_matrix(k)))) {
        let ab = det_bareiss(&matmul(&a, &b)).unwrap();
        prop_assert_eq!(ab, det_bareiss(&a).unwrap() * det_bareiss(&b).unwrap());
    }

    #[test]
    fn d4_action_is_a_group_action(idx in 0usize..429, g in 0usize..8, h in 0usize..8) {
        let all = enumerate_asm(5).unwrap();
        let m = &all[idx % all.len()];
        let (g, h) = (D4Element::ALL[g], D4Element::ALL[h]);
        let moved = d4_apply(g, m);
        prop_assert!(is_asm(&moved.rows()).unwrap());
        prop_assert_eq!(d4_apply(g.inverse(), &moved), m.clone());
        prop_assert_eq!(d4_apply(h, &moved), d4_apply(h.compose(g), m));
    }

    #[test]
    fn triangle_round_trips(n in 0usize..=3, idx in 0usize..200) {
        let all = enumerate_triangles(n).unwrap();
        let t = &all[idx % all.len()];
        let a = dasasm_from_triangle(t);
        prop_assert!(in_class(&a, SymmetryClass::Dasasm));
        prop_assert_eq!(a.central_entry(), Some(t.central_entry()));
        prop_assert_eq!(&triangle_from_dasasm(&a).unwrap(), t);
        prop_assert_eq!(&triangle_from_config(&config_from_triangle(t)).unwrap(), t);
    }

    #[test]
    fn transfer_matches_brute_force(n in 0usize..=2, q in nonzero_rational(), u in prop::collection::vec(nonzero_rational(), 3)) {
        let ctx = match WeightContext::new(q) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        let u = &u[..n + 1];
        for sector in [Sector::All, Sector::Up, Sector::Down] {
            let dp = partition_function_cleared(n, u, &ctx, sector);
            let bf = brute_force_eval(n, u, &ctx, sector, 3);
            match (dp, bf) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "one side failed: {:?} {:?}", a, b),
            }
        }
    }

    #[test]
    fn schur_forms_agree(parts in prop::collection::vec(0usize..=3, 0..=3), x in prop::collection::vec(nonzero_rational(), 3)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts).unwrap();
        let s = schur_ssyt(&lambda, &x);
        prop_assert_eq!(schur_tableau_sum(&lambda, &x).unwrap(), s.clone());
        if let Ok(b) = schur_bialternant(&lambda, &x) {
            prop_assert_eq!(b, s);
        }
    }
}
