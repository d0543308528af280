//! End-to-end acceptance suite over the shipped fixtures.
//!
//! Runs as a plain binary (`harness = false`) so that every criterion prints
//! exactly one PASS/FAIL line. All verdicts are exact; the only tolerances are
//! the wall-clock budgets below.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use kerind::report::{Report, Status};
use kerind::run::{run, RunOptions, DEFAULT_SEED};
use kerind::scenario::{Command, Scenario};
use kerind::skew::SkewGroupRing;
use serde_json::Value;

const BUDGET_GALOIS: Duration = Duration::from_secs(60);
const BUDGET_AGREEMENT: Duration = Duration::from_secs(300);
const BUDGET_DUAL_NUMBERS: Duration = Duration::from_secs(5);
const BUDGET_MONOID: Duration = Duration::from_secs(300);
const BUDGET_UNITS: Duration = Duration::from_secs(30);
const BUDGET_RADICAL: Duration = Duration::from_secs(60);
const BUDGET_LATTICE: Duration = Duration::from_secs(30);
const BUDGET_SKEW: Duration = Duration::from_secs(10);
const BUDGET_INFLATION: Duration = Duration::from_secs(30);

const SKEW_SAMPLES: usize = 500;

const GALOIS: [&str; 4] = ["f4-frobenius", "f9-frobenius", "f2xf2-swap", "f2cubed-rotation"];
const NON_GALOIS: [&str; 7] = [
    "dual-f3-sign",
    "mixed-f3-dual",
    "mixed-f4-f3",
    "f3-trivial-z2",
    "f2-trivial-z3",
    "z9-trivial-z2",
    "mixed-f2-f4-trivial-z3",
];
const UNITS: [&str; 5] = [
    "units-z8-trivial-z2",
    "units-z8-trivial-z3",
    "units-z7-trivial-z2",
    "units-z7-trivial-z3",
    "units-z7-trivial-z5",
];
const ABSTRACT_TRIVIAL: [&str; 3] = ["abstract-s3-trivial-z2", "abstract-s3-trivial-z3", "abstract-s3-trivial-s3"];
const INFLATION: [&str; 7] = [
    "inflation-z6-f4",
    "inflation-s3-f4",
    "inflation-v4-f4",
    "inflation-v4-f3",
    "abstract-s3-trivial-z2",
    "abstract-s3-trivial-s3",
    "mixed-f2-f4-trivial-z3",
];

type Outcome = Result<String, String>;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "toml").then(|| p.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
}

fn load(name: &str) -> Result<Scenario, String> {
    Scenario::load(&fixtures_dir().join(format!("{name}.toml"))).map_err(|e| format!("{name}: {e}"))
}

fn run_command(name: &str, command: Command, levels: Option<Vec<usize>>) -> Result<Report, String> {
    let scenario = load(name)?;
    let opts = RunOptions { command: Some(command), levels, ..RunOptions::default() };
    let report = run(&scenario, &opts);
    if !report.passed {
        let failed: Vec<String> = report
            .tasks
            .iter()
            .filter(|t| t.status != Status::Pass)
            .map(|t| t.error.clone().unwrap_or_default())
            .chain(report.failed_assertions().map(|(_, a)| a.name.clone()))
            .collect();
        return Err(format!("{name} {}: {}", command.name(), failed.join("; ")));
    }
    Ok(report)
}

fn results(report: &Report) -> impl Iterator<Item = &Value> {
    report.tasks.iter().map(|t| &t.result)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// -- criteria ------------------------------------------------------------

fn galois_triviality() -> Outcome {
    let mut classes = 0;
    for name in GALOIS {
        let s = load(name)?;
        ensure(s.action().is_some_and(|a| a.is_galois()), || format!("{name} is not Galois"))?;
        let report = run_command(name, Command::H1, Some(vec![1, 2]))?;
        for r in results(&report) {
            for level in r["levels"].as_array().unwrap() {
                for c in level["classes"].as_array().unwrap() {
                    classes += 1;
                    ensure(c["neutral"] == true, || format!("{name} level {}: non-neutral class", level["level"]))?;
                }
            }
        }
    }
    Ok(format!("{} fixtures, {classes} classes, all neutral", GALOIS.len()))
}

fn three_way_agreement() -> Outcome {
    let mut classes = 0;
    let mut rejected = 0;
    for name in NON_GALOIS {
        ensure(!load(name)?.action().unwrap().is_galois(), || format!("{name} is Galois"))?;
        let report = run_command(name, Command::VerifyTheorem, Some(vec![1, 2]))?;
        for r in results(&report) {
            for level in r["levels"].as_array().unwrap() {
                for c in level["classes"].as_array().unwrap() {
                    classes += 1;
                    ensure(c["agree"] == true, || format!("{name}: disagreement at {}", c["representative"]))?;
                    let verdicts = ["congruence", "decomposition_fibers", "inertia_fibers", "subgroups", "pi_equals_p", "oracle_fibers"];
                    ensure(verdicts.iter().all(|v| c[*v] == c["congruence"]), || format!("{name}: split verdicts"))?;
                    rejected += (c["congruence"] == false) as usize;
                }
            }
        }
    }
    ensure(NON_GALOIS.len() >= 6, || "too few fixtures".into())?;
    Ok(format!("{} fixtures, {classes} classes, {rejected} outside the kernel, 0 discrepancies", NON_GALOIS.len()))
}

// (Z/3)[x]/(x²) as pairs (a, b) = a + bx, with g: x ↦ −x
mod dual {
    pub type E = (u8, u8);
    pub fn mul(p: E, q: E) -> E {
        ((p.0 * q.0) % 3, (p.0 * q.1 + p.1 * q.0) % 3)
    }
    pub fn g(p: E) -> E {
        (p.0, (3 - p.1) % 3)
    }
    pub fn units() -> Vec<E> {
        (1..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect()
    }
    pub fn inv(p: E) -> E {
        *units().iter().find(|&&q| mul(p, q) == (1, 0)).unwrap()
    }
    /// Cocycles d with d(1) = 1, determined by u = d(g) subject to u·u^g = 1.
    pub fn cocycles() -> Vec<E> {
        units().into_iter().filter(|&u| mul(u, g(u)) == (1, 0)).collect()
    }
    /// Classes under u ~ x^g·u·x⁻¹.
    pub fn classes() -> Vec<Vec<E>> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for u in cocycles() {
            if seen.contains(&u) {
                continue;
            }
            let mut orbit: Vec<E> = units().into_iter().map(|x| mul(mul(g(x), u), inv(x))).collect();
            orbit.sort();
            orbit.dedup();
            seen.extend(&orbit);
            out.push(orbit);
        }
        out
    }
}

fn dual_numbers() -> Outcome {
    // frozen by the brute-force enumeration in `dual`
    const UNITS: usize = 6;
    const COCYCLES: usize = 6;
    const CLASSES: usize = 2;
    const UNIT_CLASSES: usize = 1;
    ensure(dual::units().len() == UNITS, || "brute force: units".into())?;
    ensure(dual::cocycles().len() == COCYCLES, || "brute force: cocycles".into())?;
    ensure(dual::classes().len() == CLASSES, || "brute force: classes".into())?;

    let name = "dual-f3-sign";
    let s = load(name)?;
    ensure(s.action().unwrap().ring().size() == 9, || "ring size".into())?;
    let level = |report: &Report| results(report).next().unwrap()["levels"][0].clone();
    let h1 = level(&run_command(name, Command::H1, Some(vec![1]))?);
    ensure(h1["cocycles"] == COCYCLES, || format!("cocycles {}", h1["cocycles"]))?;
    let classes = h1["classes"].as_array().unwrap();
    ensure(classes.len() == CLASSES, || format!("{} classes", classes.len()))?;
    let mut sizes: Vec<usize> = classes.iter().map(|c| c["orbit_size"].as_u64().unwrap() as usize).collect();
    let mut brute: Vec<usize> = dual::classes().iter().map(|o| o.iter().filter(|u| dual::cocycles().contains(u)).count()).collect();
    sizes.sort();
    brute.sort();
    ensure(sizes == brute, || format!("orbit sizes {sizes:?} vs {brute:?}"))?;

    let kernel = level(&run_command(name, Command::Kernel, Some(vec![1]))?);
    ensure(kernel["units"] == UNIT_CLASSES, || format!("{} unit classes", kernel["units"]))?;
    for c in kernel["classes"].as_array().unwrap() {
        ensure(c["unit"] == c["neutral"], || "a non-neutral unit".into())?;
    }

    let oracle = level(&run_command(name, Command::Oracle, Some(vec![1]))?);
    let rejected = oracle["classes"].as_array().unwrap().iter().filter(|c| c["oracle"]["pi_equals_p"] == false).count();
    ensure(rejected == CLASSES - UNIT_CLASSES, || format!("oracle rejected {rejected}"))?;
    Ok(format!("|U| = {UNITS}, cocycles = {COCYCLES}, |H^1| = {CLASSES}, units = {UNIT_CLASSES}, oracle rejects 1"))
}

fn monoid() -> Outcome {
    let mut pairs = 0;
    let mut triples = 0;
    for name in NON_GALOIS {
        let scenario = load(name)?;
        let opts = RunOptions { command: Some(Command::Kernel), levels: Some(vec![1, 2]), ..RunOptions::default() };
        let mut tasks = kerind::run::select_tasks(&scenario, &opts);
        for t in &mut tasks {
            t.monoid = true;
        }
        let scenario = Scenario { tasks, ..scenario };
        let report = run(&scenario, &RunOptions::default());
        ensure(report.passed, || format!("{name}: {:?}", report.failed_assertions().map(|(_, a)| &a.name).collect::<Vec<_>>()))?;
        for r in results(&report) {
            let m = &r["monoid"];
            let n = m["classes"].as_u64().unwrap() as usize;
            ensure(m["failures"].as_array().unwrap().is_empty(), || format!("{name}: monoid failures"))?;
            ensure(m["associative"] == n * n * n && m["commutative"] == n * n && m["padding"] == n * n, || format!("{name}: counts"))?;
            pairs += n * n;
            triples += n * n * n;
        }
    }
    Ok(format!("{} fixtures, {pairs} pairs, {triples} triples, det additive", NON_GALOIS.len()))
}

fn units_and_coprime() -> Outcome {
    let mut checked = 0;
    for name in UNITS {
        let report = run_command(name, Command::Kernel, Some(vec![1, 2]))?;
        for r in results(&report) {
            for level in r["levels"].as_array().unwrap() {
                ensure(level["units"] == 1, || format!("{name} level {}: {} units", level["level"], level["units"]))?;
                checked += 1;
            }
        }
    }
    for name in ABSTRACT_TRIVIAL {
        let report = run_command(name, Command::H1, None)?;
        for r in results(&report) {
            let classes = r["abstract"]["classes"].as_array().unwrap();
            let units: Vec<_> = classes.iter().filter(|c| c["unit"] == true).collect();
            ensure(units.len() == 1 && units[0]["neutral"] == true, || format!("{name}: units {units:?}"))?;
            checked += 1;
        }
    }
    // coprime orders: |G| prime to |X|
    let coprime = [
        ("units-z8-trivial-z3", false),
        ("units-z7-trivial-z5", false),
        ("abstract-z3-inversion-z2", true),
        ("f4-frobenius", false), // U(F_4) has order 3
    ];
    for (name, is_abstract) in coprime {
        let report = run_command(name, Command::H1, Some(vec![1]))?;
        let r = results(&report).next().unwrap();
        let classes = if is_abstract { &r["abstract"]["classes"] } else { &r["levels"][0]["classes"] };
        let count = classes.as_array().unwrap().len();
        ensure(count == 1, || format!("{name}: {count} classes"))?;
        checked += 1;
    }
    Ok(format!("{checked} checks: trivial actions have only the neutral unit, coprime orders give one class"))
}

fn radical_reduction() -> Outcome {
    let mut covered = Vec::new();
    let mut excluded = Vec::new();
    for name in fixture_names() {
        let s = load(&name)?;
        let Some(act) = s.action() else { continue };
        if act.ring().nilradical().is_zero_ideal() {
            continue;
        }
        let scenario = load(&name)?;
        let opts = RunOptions { command: Some(Command::H1), levels: Some(vec![1, 2]), ..RunOptions::default() };
        let report = run(&scenario, &opts);
        let r = results(&report).next().unwrap();
        let kernel: Vec<usize> = r["levels"].as_array().unwrap().iter().map(|l| l["radical_kernel"].as_array().unwrap().len()).collect();
        if act.satisfies_star() {
            ensure(kernel.iter().all(|&k| k == 0), || format!("{name}: radical kernel sizes {kernel:?}"))?;
            covered.push(name);
        } else {
            excluded.push(format!("{name} (no trace-one element, kernel sizes {kernel:?})"));
        }
    }
    ensure(covered.len() >= 5, || format!("only {} fixtures", covered.len()))?;
    Ok(format!("trivial kernel on {}; excluded: {}", covered.join(", "), excluded.join(", ")))
}

fn lattice_suite() -> Outcome {
    let h1_of = |name: &str| -> Result<(Value, Value), String> {
        let report = run_command(name, Command::Pic, None)?;
        let r = results(&report).next().unwrap();
        Ok((r["h1"]["invariant_factors"].clone(), r["pic"]["invariant_factors"].clone()))
    };
    let (h, p) = h1_of("lattice-sign-z")?;
    ensure(h == serde_json::json!([2]) && p == serde_json::json!([]), || format!("sign: H^1 {h}, Pic {p}"))?;
    let (h, p) = h1_of("lattice-swap-z2")?;
    ensure(h == serde_json::json!([]) && p == serde_json::json!([]), || format!("swap: H^1 {h}, Pic {p}"))?;
    // frozen: the augmentation ideal of the Klein four-group has H^1 = Z/4, Pic = Z/2
    let (h, p) = h1_of("lattice-klein-augmentation")?;
    ensure(h == serde_json::json!([4]) && p == serde_json::json!([2]), || format!("Klein: H^1 {h}, Pic {p}"))?;

    let mut fixtures = 0;
    let mut cyclic = 0;
    for name in fixture_names().into_iter().filter(|n| n.starts_with("lattice-")) {
        let rank = load(&name)?.lattice().unwrap().rank();
        for cmd in [Command::H1, Command::Coinvariants, Command::Pic] {
            let report = run_command(&name, cmd, None)?;
            if cmd == Command::H1 {
                cyclic += results(&report).next().unwrap()["cyclic"].as_array().unwrap().len();
            }
        }
        fixtures += (rank <= 4) as usize;
    }
    ensure(fixtures >= 5, || format!("{fixtures} fixtures of rank ≤ 4"))?;
    Ok(format!("{fixtures} fixtures, {cyclic} cyclic subgroups agree and are mono; Klein Pic = Z/2"))
}

fn skew_ring() -> Outcome {
    let mut count = 0;
    for name in fixture_names() {
        let s = load(&name)?;
        let Some(act) = s.action() else { continue };
        if !act.satisfies_star() {
            continue;
        }
        let skew = SkewGroupRing::new(Arc::clone(act)).map_err(|e| format!("{name}: {e}"))?;
        if let Some(triple) = skew.check_associativity(SKEW_SAMPLES, DEFAULT_SEED) {
            return Err(format!("{name}: non-associative triple {triple:?}"));
        }
        let (t, e) = (skew.trace_element(), skew.idempotent());
        ensure(&skew.multiply(e, t) == t, || format!("{name}: txt ≠ t"))?;
        ensure(&skew.multiply(e, e) == e, || format!("{name}: e² ≠ e"))?;
        skew.check_trace_module().map_err(|err| format!("{name}: eT: {err}"))?;
        count += 1;
    }
    Ok(format!("{count} fixtures, {SKEW_SAMPLES} triples each"))
}

fn inflation_restriction() -> Outcome {
    let mut pairs = BTreeSet::new();
    let mut total = 0;
    for name in INFLATION {
        let report = run_command(name, Command::H1, None)?;
        for r in results(&report) {
            let mut rows: Vec<&Value> = Vec::new();
            if let Some(levels) = r["levels"].as_array() {
                for l in levels {
                    rows.extend(l["inflation_restriction"].as_array().unwrap());
                }
            }
            if let Some(a) = r["abstract"]["inflation_restriction"].as_array() {
                rows.extend(a);
            }
            for row in rows {
                ensure(row["exact"] == true && row["inflation_injective"] == true, || format!("{name}: N = {}", row["normal"]))?;
                total += 1;
                if row["acts_trivially"] == true {
                    pairs.insert(format!("{name}/{}", row["normal"]));
                }
            }
        }
    }
    ensure(pairs.len() >= 3, || format!("{} pairs with trivial N-action", pairs.len()))?;
    Ok(format!("{total} (G, N) checks exact, {} with trivial N-action", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("Galois actions: every class neutral", BUDGET_GALOIS, galois_triviality),
        ("congruence / fibers / oracle agree", BUDGET_AGREEMENT, three_way_agreement),
        ("dual numbers over F_3: frozen values", BUDGET_DUAL_NUMBERS, dual_numbers),
        ("block sum monoid laws and det", BUDGET_MONOID, monoid),
        ("units lemma and coprime orders", BUDGET_UNITS, units_and_coprime),
        ("reduction modulo the nilradical", BUDGET_RADICAL, radical_reduction),
        ("lattice H^1, Pic, coinvariants", BUDGET_LATTICE, lattice_suite),
        ("skew group ring algebra", BUDGET_SKEW, skew_ring),
        ("inflation-restriction", BUDGET_INFLATION, inflation_restriction),
    ];
    let mut failures = 0;
    for (i, (title, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("over budget: {detail}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failures += outcome.is_err() as usize;
        println!(
            "criterion {} {tag} [{:>7.2}s / {:>3}s] {title}: {detail}",
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failures == 0 {
        println!("acceptance: 9/9 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} failed");
        ExitCode::FAILURE
    }
}
