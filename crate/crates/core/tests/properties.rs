use proptest::prelude::*;

use hopf_core::catalog::{list_catalog, make_a, make_cla_35, make_cla_a, make_cla_b};
use hopf_core::cla::{cla_transform, enveloping, verify_cla, Cla};
use hopf_core::coalgebra::{verify_coassociativity, verify_compatibility};
use hopf_core::ore::verify_pbw_consistency;
use hopf_core::structure::{coradical_filtration, p2_space, primitive_space};
use hopf_core::{Element, Matrix, Monomial, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| Scalar::new(n, d))
}

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

fn sample_cla(pick: usize, p: &[Scalar]) -> Cla {
    match pick % 4 {
        0 => make_cla_a(&p[0], &p[1], &p[2]),
        1 => make_cla_b(&p[0]),
        2 => make_cla_35('c', &p[..3]).expect("arity 3"),
        _ => make_cla_35('d', &p[..3]).expect("arity 3"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let m = Matrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>());
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), 5);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn transform_and_back(pick in 0usize..4, p in prop::collection::vec(small(), 3), entries in prop::collection::vec(small(), 16)) {
        let l = sample_cla(pick, &p);
        let n = l.dim();
        let rows: Vec<Vec<Scalar>> = (0..n).map(|i| {
            (0..n).map(|j| if i == j { &entries[i * n + j] + &Scalar::from_int(7) } else { entries[i * n + j].clone() }).collect()
        }).collect();
        let m = Matrix::from_dense(&rows);
        let inv = m.inverse().expect("diagonally dominant");
        let moved = cla_transform(&l, &m).unwrap();
        prop_assert_eq!(verify_cla(&moved).passed(), verify_cla(&l).passed());
        prop_assert_eq!(cla_transform(&moved, &inv).unwrap(), l);
    }

    #[test]
    fn cla_axioms_match_the_enveloping_algebra(pick in 0usize..4, p in prop::collection::vec(small(), 3), i in 0usize..3, k in 0usize..3, c in small()) {
        let mut l = sample_cla(pick, &p);
        let j = (i + 1) % l.dim();
        let mut v = l.bracket_of(i, j).to_vec();
        v[k] += &c;
        l.set_bracket(i, j, v).unwrap();
        let axioms = verify_cla(&l).passed();
        let hopf = match enveloping(&l) {
            Ok(u) => verify_pbw_consistency(u.algebra()).passed()
                && verify_coassociativity(&u).passed()
                && verify_compatibility(&u).passed(),
            Err(_) => false,
        };
        prop_assert_eq!(axioms, hopf, "{}", l);
    }

    #[test]
    fn filtrations_are_monotone(pick in 0usize..15, d in 2u32..=4) {
        let catalog: Vec<_> = list_catalog().into_iter().filter(|s| !s.family.is_cla()).collect();
        let h = catalog[pick % catalog.len()].hopf().unwrap();
        let p = primitive_space(&h, d);
        prop_assert!(primitive_space(&h, d - 1).is_subspace_of(&p));
        prop_assert!(p.is_subspace_of(&p2_space(&h, d)));
        prop_assert!(p.is_subspace_of(&coradical_filtration(&h, 1, d)));
        prop_assert!(coradical_filtration(&h, 1, d).is_subspace_of(&coradical_filtration(&h, 2, d)));
    }

    #[test]
    fn multiplication_is_associative(p in prop::collection::vec(small(), 3), words in prop::collection::vec(prop::collection::vec(0usize..3, 0..4), 3)) {
        let h = make_a(&p[0], &p[1], &p[2]);
        let alg = h.algebra();
        let [a, b, c] = [0, 1, 2].map(|i| alg.word_product(&words[i]));
        let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn antipode_reverses_products(p in prop::collection::vec(small(), 3), e in prop::collection::vec(0u32..3, 6)) {
        let h = make_a(&p[0], &p[1], &p[2]);
        let alg = h.algebra();
        let a = Element::monomial(Monomial::from_exponents(e[..3].to_vec()), Scalar::one());
        let b = Element::monomial(Monomial::from_exponents(e[3..].to_vec()), Scalar::one());
        let s_ab = h.antipode(&alg.mul(&a, &b).unwrap()).unwrap();
        let sb_sa = alg.mul(&h.antipode(&b).unwrap(), &h.antipode(&a).unwrap()).unwrap();
        prop_assert_eq!(s_ab, sb_sa);
    }
}
