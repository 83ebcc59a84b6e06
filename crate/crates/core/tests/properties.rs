use invdeg::diagmin::{
    minimal_degree_bruteforce, minimal_degree_ip, triangular_invariant_basis, DiagonalAction,
    GeneratorRow,
};
use invdeg::exactalg::{
    has_positive_kernel_vector, mat_vec, nullspace, rank, Field, Matrix, PrimeField, Rationals,
};
use invdeg::monomial::DegreeLex;
use invdeg::poly::Polynomial;
use invdeg::superinv::{
    apply_phi, apply_pq, canonical_representative, CharacterGroup, PqKind, SuperAction, SuperPair,
    SuperPolynomial,
};
use proptest::prelude::*;

fn action() -> impl Strategy<Value = DiagonalAction> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec((2u64..=9, prop::collection::vec(0i64..9, n)), 1..=2).prop_map(
            move |rows| {
                let rows = rows
                    .into_iter()
                    .map(|(k, weights)| GeneratorRow {
                        modulus: k,
                        weights,
                    })
                    .collect();
                DiagonalAction::new(n, rows).unwrap()
            },
        )
    })
}

fn pair() -> impl Strategy<Value = SuperPair> {
    (1usize..=4).prop_flat_map(|s| {
        (
            prop::collection::vec(0u32..=3, s),
            prop::collection::vec(any::<bool>(), s),
        )
            .prop_map(|(l, bits)| {
                let odd = bits
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(j, _)| j)
                    .collect();
                SuperPair::new(l, odd)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangular_basis_spans_invariant_lattice(act in action()) {
        let tb = triangular_invariant_basis(&act).unwrap();
        for row in tb.rows() {
            let a: Vec<u32> = row.iter().map(|&v| v as u32).collect();
            prop_assert!(row.iter().all(|&v| v >= 0));
            prop_assert!(act.is_invariant_monomial(&a).unwrap());
        }
        for d in 1..=5 {
            for a in DegreeLex::new(act.n(), d) {
                if act.is_invariant_monomial(&a).unwrap() {
                    let x: Vec<i64> = a.iter().map(|&v| v as i64).collect();
                    prop_assert!(tb.coordinates(&x).is_some());
                }
            }
        }
        let brute = minimal_degree_bruteforce(&act, act.moduli_lcm()).degree();
        prop_assert_eq!(brute, Some(minimal_degree_ip(&tb)));
    }

    #[test]
    fn nullspace_is_kernel(rows in prop::collection::vec(prop::collection::vec(0u64..7, 4), 1..=4)) {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(&rows).unwrap();
        let basis = nullspace(&f, &m);
        prop_assert_eq!(basis.len() + rank(&f, &m), 4);
        for v in &basis {
            prop_assert!(mat_vec(&f, &m, v).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn fourier_motzkin_matches_search(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=2)) {
        let m = Matrix::from_rows(&rows).unwrap();
        let mut found = false;
        for a in 0..=8i64 {
            for b in 0..=8i64 {
                for c in 0..=8i64 {
                    if a + b + c > 0 && rows.iter().all(|r| r[0] * a + r[1] * b + r[2] * c == 0) {
                        found = true;
                    }
                }
            }
        }
        prop_assert_eq!(has_positive_kernel_vector(&m).unwrap(), found);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        h in prop::collection::vec(0u64..11, 4),
        x in prop::collection::vec(0u64..11, 2),
        exps in prop::collection::vec(0u32..=3, 2),
    ) {
        let f = PrimeField::new(11).unwrap();
        let h = Matrix::new(2, 2, h).unwrap();
        let mut p = Polynomial::monomial(&f, exps, 3);
        p = p.add(&Polynomial::variable(&f, 2, 1));
        let lhs = p.substitute_linear(&h).eval(&x);
        let rhs = p.eval(&mat_vec(&f, &h, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pq_inverse_pairs(pr in pair()) {
        for j in 0..pr.s() {
            if let Some(x) = apply_pq(PqKind::P, j, &pr) {
                prop_assert_eq!(apply_pq(PqKind::Q, j, &x), Some(pr.clone()));
                prop_assert_eq!(canonical_representative(&x), canonical_representative(&pr));
            }
            if let Some(x) = apply_pq(PqKind::Q, j, &pr) {
                prop_assert_eq!(apply_pq(PqKind::P, j, &x), Some(pr.clone()));
            }
        }
    }

    #[test]
    fn phi_squared_scales_monomials(pr in pair(), xi in -3i64..=3, hs in prop::collection::vec(-3i64..=3, 4)) {
        let q = Rationals;
        let s = pr.s();
        let weights: Vec<Vec<i64>> = hs[..s].iter().map(|&h| vec![h]).collect();
        let act = SuperAction::new(q, CharacterGroup::new(1, vec![]).unwrap(), vec![0], vec![q.from_i64(xi)], weights.clone()).unwrap();
        let u = SuperPolynomial::term(&q, pr.clone(), q.one());
        let twice = apply_phi(&act, &apply_phi(&act, &u));
        let c: i64 = (0..s).map(|j| (i64::from(pr.l[j]) + i64::from(pr.contains(j))) * weights[j][0] * xi).sum();
        prop_assert_eq!(twice, u.scale(&q.from_i64(c)));
    }
}
