mod common;

use std::ops::ControlFlow;

use common::{all_subsets, arb_graph, arb_instance};
use domset::cds::{size_lower_bound, solve_approx_with};
use domset::generate::connected_graphs_up_to_iso;
use domset::oracle::{brute_cds, brute_ir_max, brute_ir_min};
use domset::{
    enumerate_irredundant, is_irredundant, is_maximal_irredundant, solve_approx, solve_exact, solve_exact_with,
    solve_ir_max, solve_ir_min, verify_capacitated, CdsOptions, DepthBudget, Rational,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_cds_matches_oracle(inst in arb_instance(9, 3)) {
        let r = solve_exact(&inst);
        prop_assert!(r.witness.check(&inst, &r.s).is_ok());
        prop_assert_eq!(r.s.len(), brute_cds(&inst).unwrap().size);
        prop_assert!(r.s.len() >= size_lower_bound(&inst));
    }

    #[test]
    fn parallel_agrees_with_sequential(inst in arb_instance(10, 2)) {
        let seq = solve_exact(&inst);
        let par = solve_exact_with(&inst, CdsOptions { parallel: true, ..CdsOptions::default() });
        prop_assert_eq!(&seq.s, &par.s);
        let full = CdsOptions { early_exit: false, parallel: false };
        prop_assert_eq!(solve_exact_with(&inst, full).s.len(), seq.s.len());
    }

    #[test]
    fn approx_is_feasible_and_monotone(inst in arb_instance(10, 2)) {
        let exact = solve_exact(&inst).s.len();
        let mut prev = usize::MAX;
        for (p, q) in [(1, 12), (1, 6), (1, 4), (1, 3)] {
            let c = Rational::new(p, q);
            let r = if q == 3 { solve_exact(&inst) } else { solve_approx(&inst, &c).unwrap() };
            prop_assert!(verify_capacitated(&inst, &r.s).is_some());
            prop_assert!(r.s.len() >= exact);
            prop_assert!(r.s.len() <= prev);
            prev = r.s.len();
        }
        prop_assert_eq!(prev, exact);
        let opts = CdsOptions { parallel: true, ..CdsOptions::default() };
        prop_assert_eq!(
            solve_approx_with(&inst, &0.2f64, opts).unwrap().s.len(),
            solve_approx(&inst, &Rational::new(1, 5)).unwrap().s.len()
        );
    }

    #[test]
    fn ir_solvers_match_oracles(g in arb_graph(1, 10)) {
        let max = solve_ir_max(&g);
        prop_assert_eq!(max.size, brute_ir_max(&g).unwrap().size);
        prop_assert!(max.witness.check(&g, &max.set).is_ok());

        let min = solve_ir_min(&g);
        prop_assert_eq!(min.size, brute_ir_min(&g).unwrap().size);
        prop_assert!(min.witness.check(&g, &min.set).is_ok());
        prop_assert!(is_maximal_irredundant(&g, &min.set).unwrap());
        prop_assert!(min.size <= max.size);
    }

    #[test]
    fn enumeration_counts_every_irredundant_set(g in arb_graph(0, 9), k in 0usize..10) {
        let k = k.min(g.n());
        let expected = all_subsets(g.n())
            .filter(|s| s.len() <= k && is_irredundant(&g, s).is_some())
            .count() as u64;
        let mut sizes_ok = true;
        let count = enumerate_irredundant(&g, DepthBudget::new(k, g.n()).unwrap(), |v| {
            sizes_ok &= v.len() <= k && v.witness().check(&g, v.set()).is_ok();
            ControlFlow::Continue(())
        });
        prop_assert!(sizes_ok);
        prop_assert_eq!(count, expected);
    }
}

#[test]
fn ir_solvers_on_all_small_connected_graphs() {
    for n in 1..=6 {
        for g in connected_graphs_up_to_iso(n).unwrap() {
            assert_eq!(solve_ir_max(&g).size, brute_ir_max(&g).unwrap().size, "{g:?}");
            assert_eq!(solve_ir_min(&g).size, brute_ir_min(&g).unwrap().size, "{g:?}");
        }
    }
}
