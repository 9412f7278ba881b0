use proptest::prelude::*;
use younglab::exactla::{dot, rat, Rational, RationalMatrix, Subspace};

fn matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(
            move |rows| {
                RationalMatrix::from_rows(
                    c,
                    rows.iter()
                        .map(|row| row.iter().map(|&x| rat(x)).collect())
                        .collect(),
                )
                .unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_plus_nullity(a in matrix(6)) {
        prop_assert_eq!(a.rank() + a.kernel().dim(), a.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(a in matrix(6)) {
        let r = a.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.pivots.len(), r.rank);
    }

    #[test]
    fn bareiss_agrees(a in matrix(7)) {
        prop_assert_eq!(a.bareiss_rank(), a.rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(a in matrix(6)) {
        for v in a.kernel().basis() {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(|x| *x == Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn solve_round_trip(a in matrix(5), x in proptest::collection::vec(-4i64..=4, 5)) {
        let x: Vec<Rational> = x[..a.cols()].iter().map(|&v| rat(v)).collect();
        let b = a.mul_vec(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn intersection_and_sum_dimensions(a in matrix(5), b in matrix(5)) {
        prop_assume!(a.cols() == b.cols());
        let s = Subspace::span(a.cols(), a.row_vectors()).unwrap();
        let t = Subspace::span(b.cols(), b.row_vectors()).unwrap();
        let sum = s.sum(&t).unwrap();
        let meet = s.intersect(&t).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
        prop_assert!(meet.is_subspace_of(&s).unwrap() && meet.is_subspace_of(&t).unwrap());
        for v in s.basis() {
            prop_assert!(sum.contains(v).unwrap());
        }
    }

    #[test]
    fn json_round_trip(a in matrix(4)) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalMatrix>(&text).unwrap(), a);
    }
}

#[test]
fn dot_product() {
    assert_eq!(dot(&[rat(1), rat(2)], &[rat(3), rat(-1)]), rat(1));
}
