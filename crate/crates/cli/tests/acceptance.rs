//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::cell::RefCell;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use domset::fixtures;
use domset::generate::{connected_graphs_up_to_iso, random_graph, random_instance};
use domset::ir_branch::max_independent_edge_set;
use domset::oracle::{brute_cds, brute_ir_max, brute_ir_min};
use domset::scds::AuxNode;
use domset::{
    approx_ratio_bound, build_aux_graph, build_doubled_graph, edge_set_to_irset, irset_to_edge_set,
    is_independent_edge_set, is_irredundant, is_maximal_irredundant, matching_to_solution, solution_to_matching,
    solve_approx, solve_exact, solve_ir_max, solve_ir_min, verify_capacitated, verify_recurrences, CapacitatedInstance,
    Graph, GraphBuilder, Matching, Rational, Rule, Scalar, ScdsInstance, ScdsSolution, VertexSet,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ac1() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC1);
    for i in 0..2000 {
        let n = rng.gen_range(1..=8);
        let inst = random_instance(n, 0.5, 2, &mut rng);
        let (got, want) = (solve_exact(&inst).s.len(), brute_cds(&inst).unwrap().size);
        ensure!(got == want, "small instance {i}: solver {got}, oracle {want}");
    }
    for i in 0..500 {
        let n = rng.gen_range(1..=13);
        let p = [0.2, 0.5][i % 2];
        let inst = random_instance(n, p, 2, &mut rng);
        let r = solve_exact(&inst);
        ensure!(
            r.witness.check(&inst, &r.s).is_ok(),
            "G(n,p) instance {i}: witness rejected"
        );
        let want = brute_cds(&inst).unwrap().size;
        ensure!(
            r.s.len() == want,
            "G(n,p) instance {i}: solver {}, oracle {want}",
            r.s.len()
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("2500 instances, 0 mismatches, {:.1}s", elapsed.as_secs_f64()))
}

fn ir_agree(g: &Graph, what: &str) -> Result<(), String> {
    let (max, min) = (solve_ir_max(g), solve_ir_min(g));
    let (omax, omin) = (brute_ir_max(g).unwrap().size, brute_ir_min(g).unwrap().size);
    ensure!(max.size == omax, "{what}: IR {} vs oracle {omax}", max.size);
    ensure!(min.size == omin, "{what}: ir {} vs oracle {omin}", min.size);
    Ok(())
}

fn ac2() -> Check {
    let mut exhaustive = 0;
    for n in 1..=7 {
        for (i, g) in connected_graphs_up_to_iso(n).unwrap().iter().enumerate() {
            ir_agree(g, &format!("connected n={n} #{i}"))?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC2);
    for i in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = [0.2, 0.5][i % 2];
        ir_agree(&random_graph(n, p, &mut rng), &format!("random #{i}"))?;
    }
    Ok(format!(
        "{exhaustive} connected graphs (n <= 7, up to isomorphism) + 500 random, 0 mismatches"
    ))
}

fn effective(si: &ScdsInstance<'_>) -> CapacitatedInstance {
    let inst = si.instance();
    let caps = (0..inst.n()).map(|v| si.effective_capacity(v)).collect();
    CapacitatedInstance::new(inst.graph().clone(), caps).unwrap()
}

fn random_subset(n: usize, p: f64, rng: &mut ChaCha8Rng) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|_| rng.gen_bool(p)))
}

fn ac3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC3);
    let mut nontrivial = 0;
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let inst = random_instance(n, 0.4, 3, &mut rng);
        let u = random_subset(n, 0.3, &mut rng);
        let si = ScdsInstance::new(&inst, &u).unwrap();
        let eff = effective(&si);
        let sol = (0..50)
            .find_map(|_| {
                let mut s = random_subset(n, 0.5, &mut rng);
                s.union_with(&u);
                verify_capacitated(&eff, &s).map(|witness| ScdsSolution { s, witness })
            })
            .unwrap_or_else(|| ScdsSolution {
                s: VertexSet::full(n),
                witness: verify_capacitated(&eff, &VertexSet::full(n)).unwrap(),
            });
        if sol.s.len() < n {
            nontrivial += 1;
        }
        let aux = build_aux_graph(&si);
        let m = solution_to_matching(&si, &aux, &sol).map_err(|e| format!("triple {i}: {e}"))?;
        ensure!(
            n - m.len() == sol.s.len(),
            "triple {i}: |V|-|phi| = {} but |S| = {}",
            n - m.len(),
            sol.s.len()
        );
    }
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let inst = random_instance(n, 0.4, 3, &mut rng);
        let u = random_subset(n, 0.3, &mut rng);
        let si = ScdsInstance::new(&inst, &u).unwrap();
        let aux = build_aux_graph(&si);
        let mut edges: Vec<(usize, usize)> = aux.graph().edges().collect();
        edges.shuffle(&mut rng);
        let mut used = vec![false; aux.graph().n()];
        let keep = rng.gen_range(0..=edges.len());
        let chosen: Vec<(usize, usize)> = edges
            .into_iter()
            .take(keep)
            .filter(|&(a, b)| {
                let free = !used[a] && !used[b];
                if free {
                    used[a] = true;
                    used[b] = true;
                }
                free
            })
            .collect();
        let m = Matching::from_edges(aux.graph(), &chosen).unwrap();
        let sol = matching_to_solution(&si, &aux, &m).map_err(|e| format!("matching {i}: {e}"))?;
        ensure!(sol.check(&si).is_ok(), "matching {i}: psi(M) infeasible");
        ensure!(
            sol.s.len() == n - m.len(),
            "matching {i}: |psi(M)| = {} but |V|-|M| = {}",
            sol.s.len(),
            n - m.len()
        );
    }
    Ok(format!(
        "1000 triples ({nontrivial} with S != V) + 1000 matchings, identities exact"
    ))
}

fn ac4() -> Check {
    let alpha = BigRational::parse_decimal("1.40202").unwrap();
    let start = Instant::now();
    let report = verify_recurrences(alpha).unwrap();
    let elapsed = start.elapsed();
    ensure!(report.all_pass(), "some case fails at 1.40202");
    ensure!(
        report.min_margin() > &BigRational::from_integer(0.into()),
        "min margin not positive"
    );
    let low = verify_recurrences(BigRational::parse_decimal("1.39").unwrap()).unwrap();
    let r6 = low
        .outcomes
        .iter()
        .find(|o| o.case.to_string() == "R6(d_u=3,d_w=3,k=0)")
        .ok_or("R6(3,3,0) case missing")?;
    ensure!(
        r6.margin < BigRational::from_integer(0.into()),
        "R6(3,3,0) holds at 1.39"
    );
    ensure!(elapsed < Duration::from_secs(1), "verification took {elapsed:?}");
    Ok(format!(
        "{} cases pass, min margin {:.4e} at {}, R6(3,3,0) margin {:.4} at 1.39, {:.0} ms",
        report.outcomes.len(),
        report.min_margin().to_f64_lossy(),
        report.binding_case(),
        r6.margin.to_f64_lossy(),
        elapsed.as_secs_f64() * 1e3
    ))
}

fn ac5() -> Check {
    let mut worst = (0.0f64, 0);
    for n in 30u32..=2000 {
        let k = n.div_ceil(3);
        let mut binom = BigUint::one();
        for i in 0..k {
            binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
        }
        let lhs = &binom * BigUint::from(100u32).pow(n);
        let rhs = BigUint::from(189u32).pow(n);
        ensure!(lhs <= rhs, "C({n},{k})^(1/n) exceeds 1.89");
        let shift = binom.bits().saturating_sub(64);
        let top = (&binom >> shift).to_u64_digits().first().copied().unwrap_or(0) as f64;
        let root = ((top.ln() + shift as f64 * 2f64.ln()) / n as f64).exp();
        if root > worst.0 {
            worst = (root, n);
        }
    }
    Ok(format!(
        "n in [30, 2000], largest root about {:.4} at n = {}",
        worst.0, worst.1
    ))
}

fn ac6() -> Check {
    let c = Rational::new(1, 6);
    let bound = approx_ratio_bound(c).unwrap();
    ensure!(
        bound.scheme_ratio == Rational::new(5, 3),
        "scheme ratio {}",
        bound.scheme_ratio
    );
    ensure!(
        bound.trivial_ratio == Rational::from_integer(5),
        "trivial ratio {}",
        bound.trivial_ratio
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC6);
    let mut slowest = Duration::ZERO;
    let mut worst = (0, 1);
    for i in 0..100 {
        let inst = random_instance(18, [0.2, 0.5][i % 2], 3, &mut rng);
        let exact = solve_exact(&inst);
        slowest = slowest.max(exact.elapsed);
        ensure!(
            exact.elapsed < Duration::from_secs(60),
            "instance {i}: exact took {:?}",
            exact.elapsed
        );
        let approx = solve_approx(&inst, &c).unwrap();
        ensure!(
            verify_capacitated(&inst, &approx.s).is_some(),
            "instance {i}: approx infeasible"
        );
        let (a, e) = (approx.s.len(), exact.s.len());
        ensure!(3 * a <= 5 * e, "instance {i}: approx {a} exceeds 5/3 of exact {e}");
        if a * worst.1 > worst.0 * e {
            worst = (a, e);
        }
    }
    Ok(format!(
        "100 instances n=18, worst approx/exact = {}/{}, bound 5/3, slowest exact {:.2}s",
        worst.0,
        worst.1,
        slowest.as_secs_f64()
    ))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn cli_size(args: &[&str]) -> Result<usize, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_domset"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "{args:?} exited with {:?}", out.status.code());
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    v["size"]
        .as_u64()
        .map(|s| s as usize)
        .ok_or_else(|| format!("{args:?}: no size"))
}

fn ac7() -> Check {
    let fig1 = fixture("fig1.cds");
    let p4 = fixture("p4.graph");
    let (fig1, p4) = (fig1.to_str().unwrap(), p4.to_str().unwrap());
    let cases = [
        (["solve", "cds", fig1], 4, brute_cds(&fixtures::figure1()).unwrap().size),
        (["solve", "ir-max", p4], 2, brute_ir_max(&fixtures::p4()).unwrap().size),
        (["solve", "ir-min", p4], 2, brute_ir_min(&fixtures::p4()).unwrap().size),
    ];
    for (args, expected, oracle) in cases {
        let got = cli_size(&args)?;
        ensure!(
            got == expected && oracle == expected,
            "{args:?}: cli {got}, oracle {oracle}, expected {expected}"
        );
    }

    let inst = fixtures::figure1();
    let u = fixtures::fig1_forced();
    let si = ScdsInstance::new(&inst, &u).unwrap();
    let aux = build_aux_graph(&si);
    let isolated_b = aux
        .nodes()
        .iter()
        .enumerate()
        .filter(|(_, n)| matches!(n, AuxNode::Copy { of, .. } if *of == fixtures::fig1_vertex("B")))
        .all(|(id, _)| aux.graph().degree(id) == 0);
    ensure!(
        aux.nodes().len() == 14 && isolated_b,
        "auxiliary graph has an unexpected shape"
    );
    let m = fixtures::fig1_reference_matching(&si, &aux).map_err(|e| e.to_string())?;
    let sol = matching_to_solution(&si, &aux, &m).map_err(|e| e.to_string())?;
    ensure!(
        sol.s == fixtures::fig1_set(&["A", "B", "C", "D", "L"]),
        "psi gave {:?}",
        sol.s
    );
    ensure!(sol.check(&si).is_ok(), "psi solution rejected");
    let max = domset::max_matching(aux.graph()).len();
    ensure!(max == 5, "maximum matching of the auxiliary graph is {max}");
    Ok("fig1 cds 4, p4 IR 2, p4 ir 2, psi(reference matching) = {A,B,C,D,L}; oracles agree".into())
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut b = GraphBuilder::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        b.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            b.build()
        })
    })
}

fn runner(seed: u8, cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn ac8() -> Check {
    let strategy = (graph_strategy(10), any::<u64>());

    runner(1, 300)
        .run(&strategy, |(g, mask)| {
            let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1));
            if is_irredundant(&g, &s).is_some() {
                for v in s.iter() {
                    let mut t = s.clone();
                    t.remove(v);
                    prop_assert!(is_irredundant(&g, &t).is_some());
                }
            }
            Ok(())
        })
        .map_err(|e| format!("subset-closedness: {e}"))?;

    runner(2, 300)
        .run(&strategy, |(g, mask)| {
            let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1));
            if let Some(w) = is_irredundant(&g, &s) {
                let h = build_doubled_graph(&g);
                let m = irset_to_edge_set(&h, &s, &w).unwrap();
                prop_assert_eq!(m.len(), s.len());
                prop_assert!(is_independent_edge_set(&h, &m.edges));
                prop_assert_eq!(edge_set_to_irset(&h, &m).unwrap(), s);
            }
            Ok(())
        })
        .map_err(|e| format!("correspondence: {e}"))?;

    let fired = RefCell::new([0u64; 8]);
    runner(3, 300)
        .run(&graph_strategy(12), |g| {
            let h = build_doubled_graph(&g);
            let outcome = panic::catch_unwind(|| max_independent_edge_set(&h));
            prop_assert!(outcome.is_ok(), "dispatcher found no rule");
            let outcome = outcome.unwrap();
            for (acc, c) in fired.borrow_mut().iter_mut().zip(outcome.rule_counts) {
                *acc += c;
            }
            prop_assert_eq!(outcome.size, brute_ir_max(&g).unwrap().size);
            Ok(())
        })
        .map_err(|e| format!("dispatcher: {e}"))?;
    let cube = Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap();
    let mut fired = fired.into_inner();
    let k9_edges: Vec<(usize, usize)> = (0..9).flat_map(|u| (u + 1..9).map(move |v| (u, v))).collect();
    for g in [cube, Graph::from_edges(9, &k9_edges).unwrap()] {
        let outcome = max_independent_edge_set(&build_doubled_graph(&g));
        for (acc, c) in fired.iter_mut().zip(outcome.rule_counts) {
            *acc += c;
        }
    }
    let silent: Vec<&str> = Rule::ALL
        .iter()
        .filter(|r| fired[**r as usize] == 0)
        .map(|r| r.label())
        .collect();
    ensure!(silent.is_empty(), "rules never fired: {silent:?}");

    runner(4, 200)
        .run(&graph_strategy(9), |g| {
            let caps: Vec<usize> = (0..g.n()).map(|v| (v * 7 + g.m()) % 3).collect();
            let inst = CapacitatedInstance::new(g.clone(), caps).unwrap();
            let cds = solve_exact(&inst);
            prop_assert!(cds.witness.check(&inst, &cds.s).is_ok());
            let max = solve_ir_max(&g);
            prop_assert!(max.witness.check(&g, &max.set).is_ok());
            let min = solve_ir_min(&g);
            prop_assert!(min.witness.check(&g, &min.set).is_ok());
            prop_assert!(is_maximal_irredundant(&g, &min.set).unwrap());
            Ok(())
        })
        .map_err(|e| format!("witness re-verification: {e}"))?;

    Ok(format!("4 seeded suites; rule firings {fired:?}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "exact CDS matches brute force", ac1),
        ("AC2", "IR and ir match brute force", ac2),
        ("AC3", "matching correspondence identities", ac3),
        ("AC4", "recurrences hold at 1.40202, fail at 1.39", ac4),
        ("AC5", "C(n, ceil(n/3))^(1/n) <= 1.89", ac5),
        ("AC6", "approximation within 5/3 at c = 1/6", ac6),
        ("AC7", "fixture regression", ac7),
        ("AC8", "seeded property suites", ac8),
    ];
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {why} ({secs:.1}s)");
            }
        }
    }
    panic::set_hook(hook);
    println!("{} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".into())
}
