use hsd::clifford::{clifford_matrix, CliffordKind};
use hsd::exact::{apply_derivation, gram_adjoint, q, Exponent, Matrix, Poly4, Rational, Scalar};
use hsd::su2::{cg_decompose, gram_matrix, rep_group, rep_infinitesimal, tensor_gram, GroupElement, LieVector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, d)| q(p, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

/// Mostly-zero integer matrices, so rank deficiency and block structure show up.
fn sparse_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -3i64..=3], r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(Scalar::int).collect()))
    })
}

fn positive_diag(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(1i64..=7, n).prop_map(|v| Matrix::diag(v.into_iter().map(Scalar::int).collect()))
}

fn poly(max_degree: u32) -> impl Strategy<Value = Poly4> {
    prop::collection::vec((prop::array::uniform4(0..=max_degree), -4i64..=4), 0..5).prop_map(|terms| {
        Poly4::from_terms(terms.into_iter().map(|(e, c): (Exponent, i64)| (e, Scalar::int(c))))
    })
}

fn lie_vector() -> impl Strategy<Value = LieVector> {
    (scalar(), scalar(), scalar()).prop_map(|(a, b, c)| LieVector::new(a, b, c))
}

fn group_pair() -> impl Strategy<Value = (GroupElement, GroupElement)> {
    let n = GroupElement::test_set().len();
    (0..n, 0..n).prop_map(|(i, j)| {
        let set = GroupElement::test_set();
        (set[i].clone(), set[j].clone())
    })
}

fn kind() -> impl Strategy<Value = CliffordKind> {
    prop::sample::select(CliffordKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
    }

    #[test]
    fn rational_inverse(a in nonzero_rational()) {
        prop_assert!((&a * &a.recip().unwrap()).is_one());
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).norm_sqr(), &a.norm_sqr() * &b.norm_sqr());
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, Scalar::one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn rank_plus_nullity(a in sparse_matrix(7)) {
        prop_assert_eq!(a.rank() + a.nullity(), a.cols());
        let kernel = a.nullspace();
        prop_assert_eq!(kernel.len(), a.nullity());
        for v in &kernel {
            prop_assert!((&a * v).is_zero());
        }
    }

    #[test]
    fn block_nullity_matches_dense(a in sparse_matrix(8)) {
        prop_assert_eq!(a.block_nullity(), a.nullity());
        let kernel = a.block_nullspace();
        prop_assert_eq!(kernel.len(), a.nullity());
        prop_assert!(kernel.iter().all(|v| (&a * v).is_zero()));
    }

    #[test]
    fn gram_adjoint_is_an_involution(a in sparse_matrix(5)) {
        let (r, c) = a.shape();
        let runner = |g: Matrix, h: Matrix| {
            let adj = gram_adjoint(&a, &g, &h).unwrap();
            gram_adjoint(&adj, &h, &g).unwrap()
        };
        let g = Matrix::diag((1..=c as i64).map(Scalar::int).collect());
        let h = Matrix::diag((0..r as i64).map(|i| Scalar::int(2 * i + 1)).collect());
        prop_assert_eq!(runner(g, h), a);
    }

    #[test]
    fn gram_adjoint_defining_identity(a in sparse_matrix(4).prop_filter("square", |m| m.is_square()),
                                      g in positive_diag(4)) {
        let n = a.rows();
        let g = g.submatrix(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        let adj = gram_adjoint(&a, &g, &g).unwrap();
        // ⟨A u, v⟩ = ⟨u, A* v⟩ as matrices: A^H G = G A*
        prop_assert_eq!(&a.conj_transpose() * &g, &g * &adj);
    }

    #[test]
    fn derivation_leibniz_and_linearity(p in poly(3), r in poly(3), c in prop::array::uniform4(poly(1)), k in -3i64..=3) {
        let d = |x: &Poly4| apply_derivation(&c, x);
        let lhs = d(&(&p * &r));
        let rhs = &(&d(&p) * &r) + &(&p * &d(&r));
        prop_assert_eq!(lhs, rhs);
        let ks = Scalar::int(k);
        prop_assert_eq!(d(&(&p.scale(&ks) + &r)), &d(&p).scale(&ks) + &d(&r));
    }

    #[test]
    fn representation_is_a_unitary_homomorphism((g, h) in group_pair(), m in 0u32..=8) {
        let rg = rep_group(m, &g);
        let rh = rep_group(m, &h);
        prop_assert_eq!(rep_group(m, &g.compose(&h)), &rg * &rh);
        let gram = gram_matrix(m);
        prop_assert_eq!(&(&rg.conj_transpose() * &gram) * &rg, gram);
    }

    #[test]
    fn infinitesimal_action_is_a_lie_map(x in lie_vector(), y in lie_vector(), m in 0u32..=6) {
        let rx = rep_infinitesimal(m, &x);
        let ry = rep_infinitesimal(m, &y);
        let bracket = &(&rx * &ry) - &(&ry * &rx);
        prop_assert_eq!(rep_infinitesimal(m, &x.bracket(&y)), bracket);
    }

    #[test]
    fn clifford_maps_are_linear(k in kind(), m in 0i64..=8, x in lie_vector(), y in lie_vector(), s in scalar()) {
        let lhs = clifford_matrix(k, m, &(&x.scale(&s) + &y));
        let rhs = &clifford_matrix(k, m, &x).scale(&s) + &clifford_matrix(k, m, &y);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clebsch_gordan_projectors(m in 0u32..=8, n in 0u32..=8) {
        let parts = cg_decompose(m, n);
        let dim = (m as usize + 1) * (n as usize + 1);
        let gram = tensor_gram(m, n);
        let mut total = Matrix::zeros(dim, dim);
        for c in &parts {
            let p = c.projector();
            prop_assert_eq!(&p * &p, p.clone());
            prop_assert!(c.isometry_defect(&gram).is_positive());
            total = &total + &p;
        }
        prop_assert!(total.is_identity());
        prop_assert_eq!(parts.len() as u32, m.min(n) + 1);
    }
}
