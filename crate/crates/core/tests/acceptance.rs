//! One PASS/FAIL line per acceptance criterion. Tolerances are exact
//! equality throughout; the runtime limits are listed next to each check.

mod common;

use std::time::{Duration, Instant};

use multgen_core::catalog::{builtin, random_algebraic, regular_pair, shipped, RandomParams};
use multgen_core::chevalley::{
    exp_nilpotent, is_nilpotent_matrix, jordan_chevalley, log_unipotent, minimal_polynomial,
};
use multgen_core::exactla::Subspace;
use multgen_core::multgen::{analyze, bracket_closure, corollary_check};
use multgen_core::structure::{decompose, weight_decomposition};
use multgen_core::{Error, LieAlgebra, Result};

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const SUITE_LIMIT: Duration = Duration::from_secs(60);
const REGULAR_LIMIT: Duration = Duration::from_secs(5);
const RANDOM_INPUTS: u64 = 250;
const JORDAN_SAMPLES: u64 = 100;
const UPPER_SAMPLES: u64 = 100;

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok: true, detail: detail.into() })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok: false, detail: detail.into() })
}

fn random_inputs() -> Vec<(String, LieAlgebra)> {
    (0..RANDOM_INPUTS)
        .map(|seed| {
            let (_, g) = random_algebraic(seed, RandomParams::default()).expect("generator");
            (format!("random seed {seed}"), g)
        })
        .collect()
}

fn all_inputs() -> Vec<(String, LieAlgebra)> {
    let mut v: Vec<(String, LieAlgebra)> = shipped().into_iter().map(|e| (e.name, e.g)).collect();
    v.extend(random_inputs());
    v
}

fn solvable_example() -> Result<Outcome> {
    let start = Instant::now();
    let g = builtin("paper-ex")?.g;
    let (_, m) = analyze(&g)?;
    let elapsed = start.elapsed();
    // basis order E22, E12, E13, E14, E24, E34
    let expected_m = Subspace::coordinate(6, [0, 1, 3, 4]);
    let center = &m.center_of_m;
    let center_nilpotent =
        center.dim() == 1 && is_nilpotent_matrix(&g.element(&center.basis()[0]))?;
    let ok = g.dim() == 6
        && m.m == expected_m
        && !m.is_mult_generated
        && center_nilpotent
        && *center == Subspace::coordinate(6, [3])
        && elapsed < EXAMPLE_LIMIT;
    let detail = format!(
        "dim g = {}, dim m = {}, m = span{{E22,E12,E24,E14}}: {}, is_mult = {}, center dim {} nilpotent {}, {:?} < {:?}",
        g.dim(),
        m.m.dim(),
        m.m == expected_m,
        m.is_mult_generated,
        center.dim(),
        center_nilpotent,
        elapsed,
        EXAMPLE_LIMIT
    );
    if ok { pass(detail) } else { fail(detail) }
}

fn closure_matches_ideal() -> Result<Outcome> {
    let start = Instant::now();
    let inputs = all_inputs();
    let mut bad = Vec::new();
    for (name, g) in &inputs {
        let r = decompose(g)?;
        let n1 = r.g.product_space(&r.reductive, &r.nil)?;
        let lhs = r.reductive.sum(&bracket_closure(g, &n1)?)?;
        if lhs != g.ideal_closure(&r.reductive)? {
            bad.push(name.clone());
        }
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "{}/{} inputs ({} random, dim ≤ 8) agree exactly, {:?} < {:?}",
        inputs.len() - bad.len(),
        inputs.len(),
        RANDOM_INPUTS,
        elapsed,
        SUITE_LIMIT
    );
    if bad.is_empty() && elapsed < SUITE_LIMIT { pass(detail) } else { fail(format!("{detail}; failing: {bad:?}")) }
}

fn condition_coherence() -> Result<Outcome> {
    let inputs = all_inputs();
    let mut bad = Vec::new();
    let mut generated = 0;
    for (name, g) in &inputs {
        match analyze(g) {
            Ok((_, m)) => {
                let c = m.prop_conditions;
                if c.iter().any(|&x| x != c[0]) || c[0] != m.is_mult_generated {
                    bad.push(name.clone());
                }
                generated += usize::from(m.is_mult_generated);
            }
            Err(Error::TheoremViolation(_)) => bad.push(name.clone()),
            Err(e) => return Err(e),
        }
    }
    let detail = format!(
        "five conditions mutually equal on {}/{} inputs ({} true, {} false)",
        inputs.len() - bad.len(),
        inputs.len(),
        generated,
        inputs.len() - generated
    );
    if bad.is_empty() { pass(detail) } else { fail(format!("{detail}; failing: {bad:?}")) }
}

fn regular_subalgebras() -> Result<Outcome> {
    let start = Instant::now();
    let mut results = Vec::new();
    for name in ["sl2-borel", "parabolic-sl3-21", "parabolic-sl4-22", "parabolic-sp4"] {
        let p = regular_pair(name)?;
        results.push((name, corollary_check(&p.f, &p.g_sub, &p.torus, p.rank)?));
    }
    let elapsed = start.elapsed();
    let ok = results.iter().all(|&(_, b)| b) && elapsed < REGULAR_LIMIT;
    let detail = format!("{results:?}, {elapsed:?} < {REGULAR_LIMIT:?}");
    if ok { pass(detail) } else { fail(detail) }
}

fn degenerate_anchors() -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 1..=4 {
        let (_, m) = analyze(&builtin(&format!("ga({n})"))?.g)?;
        ok &= m.m.is_zero();
        let (_, m) = analyze(&builtin(&format!("gm({n})"))?.g)?;
        ok &= m.m.is_full();
    }
    notes.push(format!("ga(1..4) m = 0 and gm(1..4) m = g: {ok}"));
    for n in 2..=4 {
        let (_, m) = analyze(&builtin(&format!("sl({n})"))?.g)?;
        ok &= m.m.is_full();
    }
    notes.push(format!("sl(2..4) m = g: {ok}"));
    let (_, m) = analyze(&builtin("heisenberg-torus(1,-1)")?.g)?;
    ok &= m.m.is_full();
    let (_, m) = analyze(&builtin("heisenberg-torus(1,0)")?.g)?;
    let g = builtin("heisenberg-torus(1,0)")?.g;
    let quotient_ok = m.quotient_dim == 1 && g.is_nilpotent_modulo(&m.m)?;
    ok &= quotient_ok;
    notes.push(format!("heisenberg-torus(1,-1) m = g, heisenberg-torus(1,0) dim g/m = {} nilpotent {}", m.quotient_dim, quotient_ok));
    if ok { pass(notes.join("; ")) } else { fail(notes.join("; ")) }
}

fn jordan_suite() -> Result<Outcome> {
    let mut verified = 0;
    let mut oracle_checked = 0;
    let mut bad = Vec::new();
    for seed in 0..JORDAN_SAMPLES {
        let mut rng = common::rng(seed);
        let (x, s0, n0) = common::jordan_sample(&mut rng);
        let p = jordan_chevalley(&x)?;
        let basic = &p.s + &p.n == x
            && &p.s * &p.n == &p.n * &p.s
            && minimal_polynomial(&p.s)?.is_squarefree()
            && is_nilpotent_matrix(&p.n)?
            && p.s == s0
            && p.n == n0;
        let mut oracle_ok = true;
        if common::rational_distinct(&x) {
            oracle_checked += 1;
            oracle_ok = common::diagonalization_oracle(&x).as_ref() == Some(&p.s);
        } else if let Some(s) = common::diagonalization_oracle(&x) {
            oracle_checked += 1;
            oracle_ok = s == p.s;
        }
        if basic && oracle_ok {
            verified += 1;
        } else {
            bad.push(seed);
        }
    }
    let detail = format!(
        "{verified}/{JORDAN_SAMPLES} samples satisfy x = s + n, sn = ns, squarefree minpoly(s), n nilpotent, (s, n) = (s₀, n₀); {oracle_checked} split samples match the eigenspace oracle"
    );
    if bad.is_empty() { pass(detail) } else { fail(format!("{detail}; failing seeds {bad:?}")) }
}

fn exp_log() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for entry in shipped() {
        let r = decompose(&entry.g)?;
        for v in entry.g.matrices(&r.nil) {
            checked += 1;
            let u = exp_nilpotent(&v)?;
            if log_unipotent(&u)? != v || exp_nilpotent(&log_unipotent(&u)?)? != u {
                bad.push(entry.name.clone());
            }
        }
    }
    let catalog_checked = checked;
    let mut rng = common::rng(0x5eed);
    for i in 0..UPPER_SAMPLES {
        let n = 1 + (i as usize % 5);
        let v = common::strictly_upper(&mut rng, n);
        checked += 1;
        let u = exp_nilpotent(&v)?;
        if log_unipotent(&u)? != v {
            bad.push(format!("upper sample {i}"));
        }
    }
    let detail = format!(
        "log(exp v) = v on {catalog_checked} catalog nil-radical basis elements and {UPPER_SAMPLES} strictly upper-triangular samples ({checked} total)"
    );
    if bad.is_empty() { pass(detail) } else { fail(format!("{detail}; failing: {bad:?}")) }
}

fn weight_checks() -> Result<Outcome> {
    let mut inputs: Vec<(String, LieAlgebra, Vec<Vec<multgen_core::Rat>>)> = Vec::new();
    for entry in shipped() {
        let r = decompose(&entry.g)?;
        inputs.push((entry.name, entry.g, r.torus.basis().to_vec()));
    }
    for seed in 0..RANDOM_INPUTS {
        let (spec, g) = random_algebraic(seed, RandomParams::default())?;
        inputs.push((format!("random seed {seed}"), g, spec.split_torus()));
    }
    let mut split = 0;
    let mut nonzero_spaces = 0;
    let mut bad = Vec::new();
    for (name, g, torus) in &inputs {
        let (r, m) = analyze(g)?;
        let mut ok = m.s.contains_subspace(&m.n1)?
            && m.s.contains_subspace(&g.product_space(&r.reductive, &m.s)?)?;
        match weight_decomposition(&r, torus) {
            Ok(spaces) => {
                split += 1;
                for ws in spaces.iter().filter(|w| !w.is_zero_weight()) {
                    nonzero_spaces += 1;
                    ok &= m.s.contains_subspace(&ws.space)?;
                }
            }
            Err(Error::NotSplit(_)) => {}
            Err(e) => return Err(e),
        }
        if !ok {
            bad.push(name.clone());
        }
    }
    let detail = format!(
        "{split}/{} inputs split; {nonzero_spaces} nonzero-weight spaces ⊆ s; n₁ ⊆ s and [r, s] ⊆ s on all",
        inputs.len()
    );
    if bad.is_empty() && split > 0 { pass(detail) } else { fail(format!("{detail}; failing: {bad:?}")) }
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("six-dimensional solvable example", solvable_example),
        ("r ⊕ s equals the ideal closure of r", closure_matches_ideal),
        ("equivalent conditions coherence", condition_coherence),
        ("regular subgroups are generated", regular_subalgebras),
        ("degenerate anchors", degenerate_anchors),
        ("Jordan-Chevalley suite", jordan_suite),
        ("exp/log inversion", exp_log),
        ("weight space cross-checks", weight_checks),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = match run() {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failures += usize::from(!ok);
        println!("{} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
