use std::collections::BTreeMap;

use multgen_core::catalog::{random_algebraic, shipped, AlgebraicSpec, Expected, RandomParams};
use multgen_core::multgen::mult_subalgebra;
use multgen_core::structure::{decompose, weight_decomposition};
use multgen_core::{LieAlgebra, Rat};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::InputDocument;

pub const PROPERTIES: &[&str] = &[
    "pipeline",
    "golden",
    "oracle",
    "conditions",
    "ideal",
    "quotient",
    "weights",
];

enum Source {
    Builtin { name: String, g: LieAlgebra, expected: Option<Expected> },
    Random { seed: u64, spec: AlgebraicSpec, g: LieAlgebra },
}

impl Source {
    fn label(&self) -> String {
        match self {
            Source::Builtin { name, .. } => name.clone(),
            Source::Random { seed, .. } => format!("random(seed={seed})"),
        }
    }

    fn algebra(&self) -> &LieAlgebra {
        match self {
            Source::Builtin { g, .. } | Source::Random { g, .. } => g,
        }
    }
}

/// Outcome for one input. `results` maps each evaluated property to
/// whether it held; properties that do not apply are absent.
#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub index: usize,
    pub label: String,
    pub results: BTreeMap<&'static str, bool>,
    pub error: Option<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.results.values().all(|&b| b)
    }
}

/// Violation record with the offending input, replayable through
/// `analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub label: String,
    pub failed: Vec<&'static str>,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<AlgebraicSpec>,
    pub input: InputDocument,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub cases: Vec<CaseResult>,
    pub counts: BTreeMap<&'static str, (usize, usize)>,
    pub violations: Vec<Violation>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn evaluate(index: usize, source: &Source) -> CaseResult {
    let mut results = BTreeMap::new();
    let mut error = None;
    let g = source.algebra();
    let mut run = || -> multgen_core::Result<()> {
        let r = decompose(g)?;
        let m = mult_subalgebra(&r)?;
        results.insert("pipeline", r.verified.all_passed());
        if let Source::Builtin { expected: Some(e), .. } = source {
            results.insert("golden", Expected::observed(&r, &m) == *e);
        }
        results.insert("oracle", m.m == g.ideal_closure(&r.reductive)?);
        let c = m.prop_conditions;
        results.insert("conditions", c.iter().all(|&b| b == c[0]) && c[0] == m.is_mult_generated);
        results.insert("ideal", g.is_ideal(&m.m)?);
        results.insert(
            "quotient",
            m.quotient_dim == r.nil.dim() - m.s.dim() && g.is_nilpotent_modulo(&m.m)?,
        );
        let torus: Vec<Vec<Rat>> = match source {
            Source::Random { spec, .. } => spec.split_torus(),
            Source::Builtin { .. } => r.torus.basis().to_vec(),
        };
        if let Ok(spaces) = weight_decomposition(&r, &torus) {
            let mut ok = true;
            for ws in spaces.iter().filter(|w| !w.is_zero_weight()) {
                ok &= m.s.contains_subspace(&ws.space)?;
            }
            results.insert("weights", ok);
        }
        Ok(())
    };
    if let Err(e) = run() {
        error = Some(e.to_string());
    }
    CaseResult { index, label: source.label(), results, error }
}

/// Golden checks on the shipped catalog (when `builtins`) followed by
/// `random` generated inputs with seeds `seed, seed + 1, …`. Inputs are
/// evaluated in parallel; results are reported in input order.
pub fn run_check(builtins: bool, random: u64, seed: u64) -> Summary {
    let mut sources = Vec::new();
    if builtins {
        for e in shipped() {
            sources.push(Source::Builtin { name: e.name, g: e.g, expected: e.expected });
        }
    }
    let params = RandomParams::default();
    let generated: Vec<Source> = (0..random)
        .into_par_iter()
        .map(|k| {
            let s = seed.wrapping_add(k);
            let (spec, g) = random_algebraic(s, params).expect("default parameters always generate");
            Source::Random { seed: s, spec, g }
        })
        .collect();
    sources.extend(generated);

    let cases: Vec<CaseResult> =
        sources.par_iter().enumerate().map(|(i, s)| evaluate(i, s)).collect();

    let mut counts: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
    for p in PROPERTIES {
        counts.insert(p, (0, 0));
    }
    let mut violations = Vec::new();
    for (case, source) in cases.iter().zip(&sources) {
        for (p, &ok) in &case.results {
            let c = counts.get_mut(p).expect("known property");
            c.0 += usize::from(ok);
            c.1 += 1;
        }
        if !case.passed() {
            violations.push(Violation {
                label: case.label.clone(),
                failed: case.results.iter().filter(|(_, &ok)| !ok).map(|(&p, _)| p).collect(),
                error: case.error.clone(),
                spec: match source {
                    Source::Random { spec, .. } => Some(spec.clone()),
                    Source::Builtin { .. } => None,
                },
                input: InputDocument::from_algebra(Some(case.label.clone()), source.algebra()),
            });
        }
    }
    Summary { cases, counts, violations }
}

pub fn render_summary(summary: &Summary) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} inputs checked\n", summary.cases.len()));
    for p in PROPERTIES {
        let (ok, total) = summary.counts[p];
        out.push_str(&format!("  {p:<11} {ok}/{total}\n"));
    }
    if summary.ok() {
        out.push_str("0 violations\n");
    } else {
        out.push_str(&format!("{} violations\n", summary.violations.len()));
        for v in &summary.violations {
            out.push_str(&serde_json::to_string(v).expect("violation serializes"));
            out.push('\n');
        }
    }
    out
}
