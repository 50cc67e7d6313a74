//! Acceptance suite. Runs without the libtest harness and prints one
//! `PASS`/`FAIL` line per criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bipan_core::associated::{build_associated, classify_thomassen_case, CycleLabeling, ThomassenCase, Which};
use bipan_core::conditions::lemmas;
use bipan_core::cycles::{find_cycle_of_length, find_hamiltonian_cycle, Budget};
use bipan_core::lab::{audit_theorem2, run_spec, sample_seed, LabBudget, Status, Tally, VerdictReport};
use bipan_core::{
    enumerate_bipartite, random_bipartite, search_sharpness, verify_theorem2, Cycle, Digraph, Hypothesis, Mode,
    SearchSpec, VertexId,
};

use common::{all_cycles, dense_family, has_cycle_of_length, is_cycle_in, matrix, pair_condition, permutations};

type Outcome = Result<String, String>;

const LEMMA_CLAUSES: &[&str] =
    &["lemma1", "lemma2", "lemma3", "lemma4", "min_degree", "degree_transfer", "labeling", "thomassen_hypothesis"];
const RANDOM_SAMPLES: u64 = 10_000;
const SEEDS: [(usize, f64, u64); 4] =
    [(4, 0.4, 0x5eed_0404), (4, 0.6, 0x5eed_0406), (5, 0.4, 0x5eed_0504), (5, 0.6, 0x5eed_0506)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clause_count(report: &VerdictReport, clauses: &[&str]) -> usize {
    report.failures.iter().filter(|r| clauses.contains(&r.clause.as_str())).count()
}

fn exhaustive_a3() -> VerdictReport {
    verify_theorem2(&SearchSpec::exhaustive(3, Hypothesis::Theorem2)).expect("valid spec")
}

fn random_reports() -> Vec<VerdictReport> {
    SEEDS
        .iter()
        .map(|&(a, p, seed)| {
            verify_theorem2(&SearchSpec::random(a, Hypothesis::Theorem2, seed, RANDOM_SAMPLES, p)).expect("valid spec")
        })
        .collect()
}

/// Digraphs meeting the lemma hypotheses by construction: `K*_{a,a}` minus one
/// permutation matching per direction (all of them at a=4, all at a=5), plus
/// a=5 members with one further arc removed.
fn dense_population() -> Vec<bipan_core::BipartiteDigraph> {
    let mut out = Vec::new();
    for a in [4, 5] {
        let perms = permutations(a);
        for s in &perms {
            for t in &perms {
                out.push(dense_family(a, s, t, &[]));
            }
        }
    }
    let perms = permutations(5);
    for (n, s) in perms.iter().enumerate().step_by(7) {
        let t = &perms[(n * 31 + 11) % perms.len()];
        let x = n % 5;
        let y = (s[x] + 1 + n % 4) % 5;
        out.push(dense_family(5, s, t, &[(x, 5 + y)]));
        out.push(dense_family(5, s, t, &[(5 + y, (t[y] + 1 + n % 4) % 5)]));
    }
    out
}

fn criterion_1() -> Outcome {
    let report = exhaustive_a3();
    ensure(report.runtime < Duration::from_secs(60), || format!("runtime {:?}", report.runtime))?;
    ensure(report.status == Status::Completed, || "sweep did not complete".into())?;
    ensure(report.digraphs_examined == 262_144, || format!("examined {}", report.digraphs_examined))?;
    ensure(report.failures.is_empty(), || {
        format!("{} failures, first {:?}", report.failures.len(), report.failures[0])
    })?;
    let c = &report.counters;
    let certified = c.get("bipancyclic");
    let exceptional = c.get("exceptional 2a-cycles");
    ensure(certified + exceptional == report.hypothesis_passers, || {
        format!("{certified} bipancyclic + {exceptional} exceptional != {} passers", report.hypothesis_passers)
    })?;

    // Independent recount with the brute-force predicates.
    let (mut passers, mut bipancyclic, mut cycles6) = (0u64, 0u64, 0u64);
    for d in enumerate_bipartite(3) {
        let m = matrix(&d);
        if !common::strongly_connected(&m) || !pair_condition(&m, 9) {
            continue;
        }
        passers += 1;
        if [2, 4, 6].iter().all(|&l| has_cycle_of_length(&m, l)) {
            bipancyclic += 1;
        } else if d.arc_count() == 6 {
            cycles6 += 1;
        } else {
            return Err(format!("oracle finds a non-bipancyclic passer:\n{}", bipan_core::write_digraph(&d)));
        }
    }
    ensure(passers == report.hypothesis_passers && bipancyclic == certified && cycles6 == exceptional, || {
        format!("oracle counts {passers}/{bipancyclic}/{cycles6} disagree with the sweep")
    })?;
    Ok(format!(
        "{passers} passers: {certified} certified bipancyclic, {exceptional} directed 6-cycles, 0 failures in {:.2}s",
        report.runtime.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let report = exhaustive_a3();
    let hamiltonian = report.counters.get("hamiltonian") + report.counters.get("exceptional 2a-cycles");
    ensure(clause_count(&report, &["theorem1"]) == 0, || "theorem1 failures".into())?;
    ensure(report.undecided.is_empty(), || "undecided searches".into())?;
    ensure(hamiltonian == report.hypothesis_passers, || {
        format!("{hamiltonian} hamiltonian of {} passers", report.hypothesis_passers)
    })?;
    // The 2a-cycle passers are hamiltonian too; confirm with the engine directly.
    let mut checked = 0;
    for d in enumerate_bipartite(3) {
        if d.arc_count() == 6 && bipan_core::cycles::is_directed_2a_cycle(&d) {
            let c = find_hamiltonian_cycle(&d).ok_or("directed 6-cycle without hamiltonian cycle")?;
            ensure(is_cycle_in(&d, c.vertices()) && c.len() == 6, || "bad certificate".into())?;
            checked += 1;
        }
    }
    Ok(format!(
        "{hamiltonian} of {} passers hamiltonian ({checked} directed 6-cycles rechecked)",
        report.hypothesis_passers
    ))
}

fn lemma_tally(reports: &[VerdictReport]) -> (u64, usize) {
    let population = reports.iter().map(|r| r.counters.get("lemma population")).sum();
    let violations = reports.iter().map(|r| clause_count(r, LEMMA_CLAUSES)).sum();
    (population, violations)
}

fn criterion_3() -> Outcome {
    let mut reports = vec![exhaustive_a3()];
    reports.extend(random_reports());
    let (population, violations) = lemma_tally(&reports);
    ensure(violations == 0, || format!("{violations} lemma violations in the sampled population"))?;
    let per_run: Vec<String> = reports
        .iter()
        .map(|r| match r.mode {
            Mode::Random { arc_probability, .. } => {
                format!("a={} p={arc_probability}:{}", r.a, r.counters.get("lemma population"))
            }
            Mode::Exhaustive => format!("a={} all:{}", r.a, r.counters.get("lemma population")),
        })
        .collect();

    // The sampled population is close to empty, so the lemmas are also run on
    // a family meeting their hypotheses by construction.
    let dense = dense_population();
    let mut tally = Tally::default();
    for (i, d) in dense.iter().enumerate() {
        ensure(lemmas::hypotheses_hold(d), || format!("dense member {i} misses the hypotheses"))?;
        let audit = audit_theorem2(i as u64, d, Budget::UNLIMITED);
        if let Some(r) = audit.failures.first() {
            return Err(format!("dense member {i}: {} {}", r.clause, r.detail));
        }
        tally.merge(&audit.counters);
    }
    let dense_pop = tally.get("lemma population");
    ensure(dense_pop == dense.len() as u64, || format!("{dense_pop} of {} dense members audited", dense.len()))?;
    Ok(format!(
        "0 violations; sampled population {population} ({}), dense family {dense_pop} digraphs, {} associated digraphs",
        per_run.join(" "),
        tally.get("associated digraphs checked")
    ))
}

fn criterion_4() -> Outcome {
    let mut reports = vec![exhaustive_a3()];
    reports.extend(random_reports());
    let sampled = reports.iter().map(|r| clause_count(r, &["tournament"])).sum::<usize>();
    ensure(sampled == 0, || format!("{sampled} tournaments in the sampled population"))?;
    let mut cases = std::collections::BTreeMap::<&str, u64>::new();
    for d in dense_population() {
        let c = find_hamiltonian_cycle(&d).ok_or("dense member without hamiltonian cycle")?;
        let labeling = CycleLabeling::from_cycle(&d, &c).map_err(|e| e.to_string())?;
        let g1 = build_associated(&d, &labeling, Which::G1).map_err(|e| e.to_string())?;
        let case = classify_thomassen_case(&g1.graph).map_err(|e| e.to_string())?;
        ensure(!matches!(case, ThomassenCase::Tournament), || "G1 is a tournament".into())?;
        *cases.entry(case.tag()).or_default() += 1;
    }
    let summary: Vec<String> = cases.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(format!("0 tournaments; dense-family G1 cases {}", summary.join(" ")))
}

/// Lifts every cycle of `G1` (found by brute force) and checks the lift in `d`.
fn lift_all(d: &bipan_core::BipartiteDigraph, hamiltonian: &Cycle) -> Result<u64, String> {
    let labeling = CycleLabeling::from_cycle(d, hamiltonian).map_err(|e| e.to_string())?;
    let g1 = build_associated(d, &labeling, Which::G1).map_err(|e| e.to_string())?;
    let mut n = 0;
    for seq in all_cycles(&matrix(&g1.graph)) {
        let c = Cycle::from_indices(&g1.graph, &seq).map_err(|e| e.to_string())?;
        let lift = g1.lift_cycle(d, &c).map_err(|e| format!("lift of {seq:?}: {e}"))?;
        let expected: Vec<VertexId> = seq.iter().flat_map(|&i| [labeling.y(i), labeling.x(i)]).collect();
        ensure(lift.len() == 2 * seq.len() && is_cycle_in(d, lift.vertices()) && lift.vertices() == expected, || {
            format!("lift of {seq:?} is {lift}")
        })?;
        n += 1;
    }
    Ok(n)
}

fn criterion_5() -> Outcome {
    let mut sweep_lifts = 0;
    for r in std::iter::once(exhaustive_a3()).chain(random_reports()) {
        ensure(clause_count(&r, &["lift"]) == 0, || "lift failures in a sweep".into())?;
        sweep_lifts += r.counters.get("lift validations");
    }
    let mut digraphs = 0;
    let mut lifts = 0;
    for d in enumerate_bipartite(3) {
        if !d.is_strongly_connected() {
            continue;
        }
        if let Some(c) = find_hamiltonian_cycle(&d) {
            digraphs += 1;
            lifts += lift_all(&d, &c)?;
        }
    }
    for (i, d) in dense_population().iter().enumerate().step_by(3) {
        let c = find_hamiltonian_cycle(d).ok_or_else(|| format!("dense member {i} not hamiltonian"))?;
        digraphs += 1;
        lifts += lift_all(d, &c)?;
    }
    ensure(lifts + sweep_lifts >= 10_000, || format!("only {} lift validations", lifts + sweep_lifts))?;
    Ok(format!("{lifts} lifts over {digraphs} hamiltonian digraphs plus {sweep_lifts} in sweeps, 0 failures"))
}

fn engine_agrees(d: &bipan_core::BipartiteDigraph) -> Result<(), String> {
    let m = matrix(d);
    for len in (2..=d.order()).step_by(2) {
        let found = find_cycle_of_length(d, len).map_err(|e| e.to_string())?;
        let expected = has_cycle_of_length(&m, len);
        ensure(found.is_some() == expected, || {
            format!("length {len}: engine {} oracle {expected}\n{}", found.is_some(), bipan_core::write_digraph(d))
        })?;
        if let Some(c) = found {
            ensure(c.len() == len && is_cycle_in(d, c.vertices()), || format!("bad certificate {c}"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for d in enumerate_bipartite(2) {
        engine_agrees(&d)?;
        n += 1;
    }
    for i in 0..500 {
        let p = [0.3, 0.5, 0.7][i as usize % 3];
        engine_agrees(&random_bipartite(3, p, sample_seed(0xC0FFEE, i)))?;
        n += 1;
    }
    Ok(format!("{n} digraphs, every even length agrees"))
}

fn criterion_7() -> Outcome {
    let k1 = search_sharpness(&SearchSpec::exhaustive(3, Hypothesis::Sharpness { k: 1 })).map_err(|e| e.to_string())?;
    let again =
        search_sharpness(&SearchSpec::exhaustive(3, Hypothesis::Sharpness { k: 1 })).map_err(|e| e.to_string())?;
    ensure(k1.status == Status::Completed, || "k=1 search did not complete".into())?;
    ensure(k1.witnesses.len() == again.witnesses.len() && k1.machine_format() == again.machine_format(), || {
        "k=1 witness count not deterministic".into()
    })?;
    for w in &k1.witnesses {
        let d = w.digraph().map_err(|e| e.to_string())?;
        let m = matrix(&d);
        ensure(common::strongly_connected(&m) && pair_condition(&m, 8) && !has_cycle_of_length(&m, 6), || {
            format!("witness #{} fails the oracle", w.index)
        })?;
    }
    let k0 = search_sharpness(&SearchSpec::exhaustive(3, Hypothesis::Sharpness { k: 0 })).map_err(|e| e.to_string())?;
    ensure(k0.status == Status::Completed && k0.witnesses.is_empty(), || {
        format!("k=0 reports {} witnesses", k0.witnesses.len())
    })?;
    Ok(format!(
        "k=1: {} witnesses among {} passers (deterministic); k=0: 0 witnesses",
        k1.witnesses.len(),
        k1.hypothesis_passers
    ))
}

fn without_runtime(report: &VerdictReport) -> String {
    let text = report.render();
    text.lines().filter(|l| !l.starts_with("runtime:")).collect::<Vec<_>>().join("\n")
}

fn criterion_8() -> Outcome {
    let specs = [
        SearchSpec::exhaustive(3, Hypothesis::Theorem2),
        SearchSpec::exhaustive(3, Hypothesis::Sharpness { k: 1 }),
        SearchSpec::exhaustive(3, Hypothesis::OpenQuestion { k: 2, l: 2 }),
        SearchSpec::random(4, Hypothesis::Theorem2, 99, 3000, 0.6),
        SearchSpec::random(4, Hypothesis::Sharpness { k: 2 }, 7, 3000, 0.6),
        SearchSpec::random(5, Hypothesis::OpenQuestion { k: 3, l: 2 }, 11, 2000, 0.5),
    ];
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get()).max(2);
    let mut records = 0;
    for spec in specs {
        let base = run_spec(&spec.clone().with_workers(1)).map_err(|e| e.to_string())?;
        for run in [run_spec(&spec), run_spec(&spec.clone().with_workers(workers))] {
            let run = run.map_err(|e| e.to_string())?;
            ensure(run.machine_format() == base.machine_format(), || format!("machine format differs for {spec:?}"))?;
            ensure(without_runtime(&run) == without_runtime(&base), || format!("report differs for {spec:?}"))?;
        }
        records += base.machine_format().lines().count();
    }
    // A run past its deadline still stops cleanly.
    let mut limited = SearchSpec::exhaustive(3, Hypothesis::Theorem2);
    limited.budget = LabBudget { seconds: Some(1e-9), nodes: None };
    let r = run_spec(&limited).map_err(|e| e.to_string())?;
    ensure(r.status == Status::BudgetExhausted, || "a 1ns deadline did not exhaust".into())?;
    Ok(format!("6 specs byte-identical at 1, default and {workers} workers ({records} records)"))
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (1, "exhaustive bipancyclicity at a=3", criterion_1),
        (2, "hamiltonicity of every passer at a=3", criterion_2),
        (3, "lemma suite", criterion_3),
        (4, "tournament exclusion", criterion_4),
        (5, "lift soundness", criterion_5),
        (6, "cycle engine oracle equivalence", criterion_6),
        (7, "sharpness probe", criterion_7),
        (8, "determinism", criterion_8),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {n} ({name}): {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
