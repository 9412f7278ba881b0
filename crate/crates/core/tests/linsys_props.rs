use num_traits::Zero;
use younglab::enumerate_partitions;
use younglab::linsys::{
    build_system3, kernel_sweep, lemma4_counterexamples, polymorphism_feasibility, FlowInstance,
};

#[test]
fn system_entries_are_covering_pairs() {
    for n in 2..=9 {
        for lambda in enumerate_partitions(n) {
            let s = build_system3(&lambda).unwrap();
            for (j, mu) in s.col_index.iter().enumerate() {
                let mut nonzero = 0;
                for (i, rho) in s.row_index.iter().enumerate() {
                    let v = s.matrix.get(i, j);
                    let is_cover = mu.predecessors().unwrap().iter().any(|(p, _)| p == rho);
                    assert_eq!(!v.is_zero(), is_cover, "μ = {mu:?}, ρ = {rho:?}");
                    nonzero += usize::from(!v.is_zero());
                }
                // bar(μ) ⊵ bar(λ), so every column meets at least one row
                assert!(nonzero > 0, "empty column μ = {mu:?} in λ = {lambda:?}");
            }
        }
    }
}

#[test]
fn bar_bijective_systems_are_unipotent_and_injective() {
    for n in 2..=10 {
        for r in kernel_sweep(n).unwrap() {
            assert!(r.implication_holds(), "{r:?}");
        }
    }
}

#[test]
fn lemma4_failures_sit_on_the_half_boundary() {
    for n in 2..=12 {
        for lambda in lemma4_counterexamples(n).unwrap() {
            assert_eq!(2 * lambda.part(0), n, "λ = {lambda:?}");
        }
    }
}

#[test]
fn flow_witnesses_verify() {
    for n in 2..=12 {
        let r = polymorphism_feasibility(n).unwrap();
        assert!(r.feasible);
        assert_eq!(r.max_flow, r.required);
        assert_eq!(r.cut_capacity, r.max_flow);
        let inst = FlowInstance::new(n).unwrap();
        assert!(inst.verify_witness(r.matrix.as_ref().unwrap()));
        let mut bad = r.matrix.unwrap();
        bad.set(0, 0, bad.get(0, 0) + younglab::exactla::rat(1));
        assert!(!inst.verify_witness(&bad));
    }
}
