use proptest::prelude::*;
use younglab::tableaux::{eq2_check, theorem4_bijection};
use younglab::{enumerate_partitions, enumerate_ssyt, kostka, Partition, Weight};

fn shape_and_weight(max_n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let ps = enumerate_partitions(n);
        let k = ps.len();
        (0..k, 0..k).prop_map(move |(i, j)| (ps[i].clone(), ps[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kostka_ignores_weight_order(
        (mu, lambda) in shape_and_weight(7),
        keys in proptest::collection::vec(any::<u32>(), 7),
        zeros in 0usize..3,
    ) {
        let mut counts: Vec<usize> = lambda.parts().to_vec();
        counts.extend(std::iter::repeat_n(0, zeros));
        let mut order: Vec<usize> = (0..counts.len()).collect();
        order.sort_by_key(|&i| keys[i % keys.len()] ^ i as u32);
        let permuted: Vec<usize> = order.iter().map(|&i| counts[i]).collect();
        prop_assert_eq!(
            kostka(&mu, &Weight::new(permuted)).unwrap(),
            kostka(&mu, &Weight::from(&lambda)).unwrap()
        );
    }

    #[test]
    fn removing_a_corner_keeps_semistandardness((mu, lambda) in shape_and_weight(7), pick in any::<usize>()) {
        let all = enumerate_ssyt(&mu, &Weight::from(&lambda)).unwrap();
        prop_assume!(!all.is_empty());
        let t = &all[pick % all.len()];
        for row in mu.removable_rows() {
            let smaller = t.remove_corner(row).expect("removable corner");
            prop_assert_eq!(smaller.size(), t.size() - 1);
            prop_assert!(younglab::Tableau::new(smaller.rows().to_vec()).is_ok());
        }
    }

    #[test]
    fn every_listed_tableau_is_valid((mu, lambda) in shape_and_weight(7)) {
        let w = Weight::from(&lambda);
        let all = enumerate_ssyt(&mu, &w).unwrap();
        for t in &all {
            prop_assert_eq!(t.shape(), mu.clone());
            prop_assert_eq!(t.weight(), w.clone());
        }
        let mut words: Vec<_> = all.iter().map(|t| t.reading_word()).collect();
        let sorted = { let mut s = words.clone(); s.sort(); s };
        prop_assert_eq!(&words, &sorted);
        words.dedup();
        prop_assert_eq!(words.len(), all.len());
    }
}

#[test]
fn kostka_triangularity_to_eight() {
    for n in 1..=8 {
        let ps = enumerate_partitions(n);
        for lambda in &ps {
            assert_eq!(kostka(lambda, &Weight::from(lambda)).unwrap(), 1);
            for mu in &ps {
                let k = kostka(mu, &Weight::from(lambda)).unwrap();
                assert_eq!(
                    k > 0,
                    mu.dominates(lambda).unwrap(),
                    "K({mu:?},{lambda:?}) = {k}"
                );
            }
        }
    }
}

#[test]
fn recurrence_two_to_eight() {
    for n in 1..=8 {
        for lambda in enumerate_partitions(n) {
            for rho in enumerate_partitions(n - 1) {
                let (l, r) = eq2_check(&lambda, &rho).unwrap();
                assert_eq!(l, r, "λ = {lambda:?}, ρ = {rho:?}");
            }
        }
    }
}

#[test]
fn column_weight_gives_n_times_f() {
    for n in 1..=7 {
        let col = Partition::column(n);
        for rho in enumerate_partitions(n - 1) {
            let f = n as u64 * rho.standard_count();
            assert_eq!(eq2_check(&col, &rho).unwrap(), (f, f));
        }
    }
}

#[test]
fn bijections_to_seven_are_bijective() {
    let (mut canonical, mut total) = (0, 0);
    for n in 1..=7 {
        for lambda in enumerate_partitions(n) {
            for rho in enumerate_partitions(n - 1) {
                let cert = theorem4_bijection(&lambda, &rho).unwrap();
                assert!(cert.verify(), "λ = {lambda:?}, ρ = {rho:?}");
                assert_eq!(
                    cert.pairs.len(),
                    eq2_check(&lambda, &rho).unwrap().0 as usize
                );
                total += 1;
                canonical += usize::from(cert.canonical);
            }
        }
    }
    println!("canonical rule succeeded on {canonical} of {total} instances");
    // Σ_{n≤7} p(n)·p(n−1)
    assert_eq!(total, 301);
    assert!(canonical > 0);
}
