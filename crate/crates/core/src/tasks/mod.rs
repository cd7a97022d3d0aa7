//! Named verification tasks and the report they produce.
//!
//! A task reads the scenario diagram and its options, computes values and
//! compares them with expected values. Expected values come from the
//! scenario options or, for catalog diagrams, from built-in defaults.

pub mod examples;
pub mod properties;
pub mod scenario;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::diagram::catalog::{self, d1_in_e10};
use crate::diagram::{
    classify, euler_number, fibration_configs, gram_of, vinberg_check, CurveDiagram, DiagramClass, RootType,
};
use crate::fixed_locus::{
    euler_of, lemma43_verify, pictured_types, theorem44_search, valid_assignments, MISSING_TYPE, TABLE_ROWS,
};
use crate::hyperbolic::{e10_basis, e10_coordinates, e10_lattice, k_vector, standard_isotropic_sequence, z_1_10};
use crate::lattice::roots::{d4_d4, e10_split, e6_a2, e8, vectors_of, D4_D4_IN_E8, E6_A2_IN_E8};
use crate::lattice::{profile, saturation_quotient, sublattice_index, LatticeVector};
use crate::linalg::det_exact;
use crate::wild::{chi_quotient, lef_point, MonomialIdeal2};
use scenario::Scenario;

pub use properties::{DEFAULT_CASES, DEFAULT_SEED};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaskError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid scenario: {0}")]
    Schema(String),
    #[error("unknown catalog name {0:?}")]
    UnknownCatalog(String),
    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Classify,
    Fibrations,
    Vinberg,
    FixedLocus,
    Lemma43,
    LefschetzWild,
    Theorem44,
    LatticeE10,
    LatticeIsotropic,
    LatticeGlue,
    SublatticeIndex,
    Example1,
    Example2,
    Example3,
    Properties,
}

impl Task {
    pub const ALL: [Task; 15] = [
        Task::Classify,
        Task::Fibrations,
        Task::Vinberg,
        Task::FixedLocus,
        Task::Lemma43,
        Task::LefschetzWild,
        Task::Theorem44,
        Task::LatticeE10,
        Task::LatticeIsotropic,
        Task::LatticeGlue,
        Task::SublatticeIndex,
        Task::Example1,
        Task::Example2,
        Task::Example3,
        Task::Properties,
    ];

    pub fn name(self) -> String {
        match serde_json::to_value(self) {
            Ok(Value::String(s)) => s,
            _ => unreachable!("unit variants serialize as strings"),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Task {
    type Err = TaskError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(Value::String(s.to_string())).map_err(|_| TaskError::Parse(format!("unknown task {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok { Status::Pass } else { Status::Fail }
    }
}

/// One expected/computed comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl Serialize, computed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        Self { name: name.into(), pass: expected == computed, expected, computed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskReport {
    pub task: Task,
    pub status: Status,
    pub checks: Vec<Check>,
    pub values: Value,
    pub error: Option<String>,
}

impl TaskReport {
    fn finish(task: Task, checks: Vec<Check>, values: Value) -> Self {
        let status = Status::of(checks.iter().all(|c| c.pass));
        Self { task, status, checks, values, error: None }
    }

    fn failed(task: Task, error: impl fmt::Display) -> Self {
        Self { task, status: Status::Fail, checks: Vec::new(), values: Value::Null, error: Some(error.to_string()) }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u64,
    pub input: String,
    pub status: Status,
    pub tasks: Vec<TaskReport>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Sorted keys, stable array order.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable")
    }
}

/// Expected values known for catalog diagrams.
fn catalog_defaults(name: &str, task: Task) -> Map<String, Value> {
    let v = match (name, task) {
        ("e8-special", Task::Fibrations) => json!({"expected_count": 1}),
        ("e7a1-special-1", Task::Fibrations) => json!({"containing": "E~8", "expected_containing": 2}),
        ("e7a1-special-2", Task::Fibrations) => json!({"containing": "E~8", "expected_containing": 1}),
        ("e8-special" | "d8-special" | "e7a1-special-1" | "e7a1-special-2", Task::Vinberg) => {
            json!({"expected_pass": true})
        }
        ("d1", Task::SublatticeIndex) => json!({"expected_det": -4, "expected_index": 2}),
        (n, Task::FixedLocus) if n == MISSING_TYPE => json!({"expected_assignments": 0}),
        (n, Task::FixedLocus) if pictured_types().contains(&n) => json!({"nonempty": true}),
        _ => json!({}),
    };
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

struct Context<'a> {
    diagram: &'a CurveDiagram,
    options: Map<String, Value>,
}

impl Context<'_> {
    fn get(&self, key: &str) -> Option<&Value> {
        self.options.get(key)
    }

    fn affine_type(&self) -> Option<RootType> {
        classify(self.diagram).affine_type()
    }

    fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.diagram.vertices()[i].label.clone()).collect()
    }
}

/// Runs every scenario task in order.
pub fn run_scenario(s: &Scenario) -> Result<Report, TaskError> {
    let diagram = s.diagram()?;
    Ok(run_on(s.input_name(), &diagram, s.catalog.as_deref(), &s.tasks, &s.options))
}

/// Runs tasks that do not read a diagram, such as `theorem44` or `lattice-glue`.
pub fn run_standalone(tasks: &[Task], options: &BTreeMap<Task, Map<String, Value>>) -> Report {
    run_on("none".into(), &CurveDiagram::default(), None, tasks, options)
}

fn run_on(
    input: String,
    diagram: &CurveDiagram,
    catalog_name: Option<&str>,
    tasks: &[Task],
    extra: &BTreeMap<Task, Map<String, Value>>,
) -> Report {
    let tasks: Vec<TaskReport> = tasks
        .iter()
        .map(|&task| {
            let mut options = catalog_name.map(|n| catalog_defaults(n, task)).unwrap_or_default();
            if let Some(more) = extra.get(&task) {
                options.extend(more.clone());
            }
            run_task(task, &Context { diagram, options })
        })
        .collect();
    let status = Status::of(tasks.iter().all(|t| t.status == Status::Pass));
    Report { schema_version: scenario::SCHEMA_VERSION, input, status, tasks }
}

fn run_task(task: Task, ctx: &Context) -> TaskReport {
    let out = match task {
        Task::Classify => classify_task(ctx),
        Task::Fibrations => fibrations_task(ctx),
        Task::Vinberg => vinberg_task(ctx),
        Task::FixedLocus => fixed_locus_task(ctx),
        Task::Lemma43 => lemma43_task(ctx),
        Task::LefschetzWild => wild_task(ctx),
        Task::Theorem44 => Ok(theorem44_task()),
        Task::LatticeE10 => Ok(lattice_e10_task()),
        Task::LatticeIsotropic => lattice_isotropic_task(),
        Task::LatticeGlue => lattice_glue_task(),
        Task::SublatticeIndex => sublattice_index_task(ctx),
        Task::Example1 => examples::example1().map(|c| (c, Value::Null)).map_err(|e| e.to_string()),
        Task::Example2 => examples::example2().map(|c| (c, Value::Null)).map_err(|e| e.to_string()),
        Task::Example3 => examples::example3().map(|c| (c, Value::Null)).map_err(|e| e.to_string()),
        Task::Properties => Ok(properties_task(ctx)),
    };
    match out {
        Ok((checks, values)) => TaskReport::finish(task, checks, values),
        Err(e) => TaskReport::failed(task, e),
    }
}

type TaskOutput = Result<(Vec<Check>, Value), String>;

fn classify_task(ctx: &Context) -> TaskOutput {
    let class = classify(ctx.diagram);
    let gram = gram_of(ctx.diagram);
    let det = det_exact(&gram).map_err(|e| e.to_string())?;
    let sig = crate::linalg::signature(&gram).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    if let Some(exp) = ctx.get("expected") {
        checks.push(Check::new("class", exp, class.to_string()));
    }
    let values = json!({
        "class": class.to_string(),
        "determinant": det.to_string(),
        "signature": [sig.positive, sig.negative, sig.zero],
        "curves": ctx.diagram.len(),
    });
    Ok((checks, values))
}

fn fibrations_task(ctx: &Context) -> TaskOutput {
    let configs = fibration_configs(ctx.diagram).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    if let Some(exp) = ctx.get("expected_count") {
        checks.push(Check::new("configuration count", exp, configs.len()));
    }
    if let (Some(Value::String(t)), Some(exp)) = (ctx.get("containing"), ctx.get("expected_containing")) {
        let ty = RootType::parse_affine(t).ok_or_else(|| format!("unknown affine type {t:?}"))?;
        let n = configs.iter().filter(|c| c.contains_type(ty)).count();
        checks.push(Check::new(format!("configurations containing {t}"), exp, n));
    }
    let listed: Vec<Value> = configs
        .iter()
        .map(|c| {
            json!({
                "label": c.label(),
                "components": c.components.iter().map(|a| json!({
                    "type": a.kind.affine_name(),
                    "curves": ctx.labels(&a.vertices),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok((checks, json!({"count": configs.len(), "configurations": listed})))
}

fn vinberg_task(ctx: &Context) -> TaskOutput {
    let r = vinberg_check(ctx.diagram).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    if let Some(exp) = ctx.get("expected_pass") {
        checks.push(Check::new("every affine subdiagram lies in a fibration", exp, r.pass));
    }
    let witness = r.witness.as_ref().map(|w| json!({"type": w.kind.affine_name(), "curves": ctx.labels(&w.vertices)}));
    let values = json!({
        "pass": r.pass,
        "affine_subdiagrams": r.affine_subdiagrams,
        "configurations": r.configs,
        "witness": witness,
    });
    Ok((checks, values))
}

fn fixed_locus_task(ctx: &Context) -> TaskOutput {
    let d = ctx.diagram;
    let all = valid_assignments(d).map_err(|e| e.to_string())?;
    let mut listed = Vec::new();
    let mut values = BTreeSet::new();
    for a in &all {
        let e = euler_of(a, d).map_err(|e| e.to_string())?;
        values.insert(e);
        listed.push(json!({"stars": ctx.labels(&a.stars()), "free_dots": a.free_dots, "euler": e}));
    }
    let mut checks = Vec::new();
    let fiber_euler = match classify(d) {
        DiagramClass::Affine(_) => Some(euler_number(d).map_err(|e| e.to_string())?),
        _ => None,
    };
    if let Some(e) = fiber_euler {
        checks.push(Check::new("every value equals e(F)", true, values.iter().all(|&v| v == e)));
    }
    if let Some(exp) = ctx.get("expected_assignments") {
        checks.push(Check::new("assignment count", exp, all.len()));
    }
    if ctx.get("nonempty") == Some(&Value::Bool(true)) {
        checks.push(Check::new("some assignment exists", true, !all.is_empty()));
    }
    Ok((checks, json!({"assignments": listed, "values": values, "fiber_euler": fiber_euler})))
}

fn lemma43_task(ctx: &Context) -> TaskOutput {
    let fibers: Vec<String> = match ctx.get("fibers") {
        Some(Value::Array(a)) => {
            a.iter().map(|x| x.as_str().map(str::to_string).ok_or("fibers must be strings")).collect::<Result<_, _>>()?
        }
        Some(_) => return Err("fibers must be a list".into()),
        None => match ctx.affine_type() {
            Some(t) => vec![t.affine_name()],
            None => pictured_types().iter().chain([&MISSING_TYPE]).map(|s| s.to_string()).collect(),
        },
    };
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for f in &fibers {
        let r = lemma43_verify(f).map_err(|e| e.to_string())?;
        checks.push(Check::new(format!("{f}: e(F^sigma) = e(F)"), true, r.pass));
        reports.push(r);
    }
    if fibers.len() > 1 {
        let rows: Vec<i64> = TABLE_ROWS.iter().map(|&(_, v)| v).collect();
        let computed: Vec<Option<i64>> = TABLE_ROWS
            .iter()
            .map(|&(f, _)| reports.iter().find(|r| r.fiber == f).and_then(|r| single(&r.values)))
            .collect();
        if TABLE_ROWS.iter().all(|(f, _)| fibers.iter().any(|x| x == f)) {
            checks.push(Check::new("table rows", rows, computed));
        }
    }
    Ok((checks, json!({"reports": reports})))
}

fn single(s: &BTreeSet<i64>) -> Option<i64> {
    (s.len() == 1).then(|| *s.iter().next().expect("one element"))
}

fn wild_task(ctx: &Context) -> TaskOutput {
    let default_gens = json!([[2, 0], [0, 2]]);
    let gens_v = ctx.get("generators").unwrap_or(&default_gens);
    let gens: Vec<(u32, u32)> = serde_json::from_value(gens_v.clone()).map_err(|e| format!("generators: {e}"))?;
    let ideal = MonomialIdeal2::new(gens).map_err(|e| e.to_string())?;
    let r = lef_point(&ideal).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    let expected = match ctx.get("expected") {
        Some(v) => Some(v.clone()),
        None if gens_v == &default_gens => Some(json!([4, 8, 8, 4])),
        None => None,
    };
    if let Some(exp) = expected {
        checks.push(Check::new("(colength, J/J^2, omega, Lef)", exp, [
            r.colength_j as i64,
            r.dim_j_mod_j2 as i64,
            r.omega_term as i64,
            r.lefschetz,
        ]));
    }
    let mut values = json!({"ideal": ideal.to_string(), "report": r});
    if let Some(chi) = ctx.get("chi_z").and_then(Value::as_i64) {
        values["chi_quotient"] = json!(chi_quotient(chi).to_string());
    }
    Ok((checks, values))
}

fn theorem44_task() -> (Vec<Check>, Value) {
    let cands = theorem44_search();
    let mut checks: Vec<Check> =
        cands.iter().map(|c| Check::new(format!("{} + {} ruled out", c.pair.0, c.pair.1), true, c.killed_by.is_some())).collect();
    checks.push(Check::new("survivors", 0, cands.iter().filter(|c| c.killed_by.is_none()).count()));
    (checks, json!({"candidates": cands}))
}

fn lattice_e10_task() -> (Vec<Check>, Value) {
    let l = z_1_10();
    let basis = e10_basis();
    let p = profile(&e10_lattice());
    let orthogonal = basis.iter().all(|b| l.pair(b, &k_vector()).is_ok_and(|x| x.is_zero()));
    let checks = vec![
        Check::new("k10^2", -1, l.norm(&k_vector()).ok().and_then(|x| x.to_i64())),
        Check::new("basis orthogonal to k10", true, orthogonal),
        Check::new("rank", 10, basis.len()),
        Check::new("determinant", -1, p.determinant.to_i64()),
        Check::new("even", true, p.even),
        Check::new("signature", [1, 9], [p.signature.positive, p.signature.negative]),
    ];
    (checks, json!({"basis": basis}))
}

fn lattice_isotropic_task() -> TaskOutput {
    let l = z_1_10();
    let seq = standard_isotropic_sequence();
    let fs = seq.vectors();
    let norms: Vec<i64> = fs.iter().map(|f| l.norm(f).ok().and_then(|x| x.to_i64()).unwrap_or(i64::MIN)).collect();
    let pairs_one = (0..fs.len()).all(|i| (i + 1..fs.len()).all(|j| l.pair(&fs[i], &fs[j]).is_ok_and(|x| x == BigInt::from(1))));
    let gram = l.gram_of(fs).map_err(|e| e.to_string())?;
    let det = det_exact(&gram).map_err(|e| e.to_string())?;
    let coords = fs.iter().map(e10_coordinates).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let index = sublattice_index(&e10_lattice(), &coords).map_err(|e| e.to_string())?;
    let checks = vec![
        Check::new("norms", vec![0; 10], norms),
        Check::new("pairwise products 1", true, pairs_one),
        Check::new("Gram determinant", -9, det.to_i64()),
        Check::new("index in E10", 3, index.to_i64()),
    ];
    Ok((checks, json!({"vectors": fs})))
}

fn lattice_glue_task() -> TaskOutput {
    let quotient = |rows: &[[i64; 8]]| -> Result<Vec<i64>, String> {
        Ok(saturation_quotient(&e8(), &vectors_of(rows)).map_err(|e| e.to_string())?.factors_i64())
    };
    let dd = quotient(&D4_D4_IN_E8)?;
    let ea = quotient(&E6_A2_IN_E8)?;
    let gram_ok = |rows: &[[i64; 8]], target: crate::lattice::Lattice| e8().gram_of(&vectors_of(rows)).ok().as_ref() == Some(target.gram());
    let checks = vec![
        Check::new("D4+D4 roots have the D4+D4 Gram", true, gram_ok(&D4_D4_IN_E8, d4_d4())),
        Check::new("E6+A2 roots have the E6+A2 Gram", true, gram_ok(&E6_A2_IN_E8, e6_a2())),
        Check::new("E8 / sat(D4+D4) glue", [2, 2], dd.clone()),
        Check::new("E8 / sat(E6+A2) glue", [3], ea.clone()),
    ];
    Ok((checks, json!({"d4_d4": dd, "e6_a2": ea})))
}

/// Determinant of the diagram Gram and the index it implies inside a
/// lattice of discriminant `num_disc` (default `-1`, unimodular `Num(S)`).
fn sublattice_index_task(ctx: &Context) -> TaskOutput {
    let det = det_exact(&gram_of(ctx.diagram)).map_err(|e| e.to_string())?;
    let num_disc = ctx.get("num_disc").and_then(Value::as_i64).unwrap_or(-1);
    let ratio = if (&det % num_disc).is_zero() { Some(&det / num_disc) } else { None };
    let inferred = ratio.filter(|r| r.is_positive()).and_then(|r| {
        let s = r.sqrt();
        (&s * &s == r).then_some(s)
    });
    let mut checks = Vec::new();
    if let Some(exp) = ctx.get("expected_det") {
        checks.push(Check::new("Gram determinant", exp, det.to_i64()));
    }
    if let Some(exp) = ctx.get("expected_index") {
        checks.push(Check::new("index from discriminant ratio", exp, inferred.as_ref().and_then(|x| x.to_i64())));
    }
    let mut values = json!({
        "determinant": det.to_string(),
        "num_disc": num_disc,
        "inferred_index": inferred.map(|x| x.to_string()),
    });
    if *ctx.diagram == catalog::d1() {
        let vecs = d1_in_e10();
        let gram_matches = e10_split().gram_of(&vecs).ok().as_ref() == Some(&gram_of(ctx.diagram));
        let idx = sublattice_index(&e10_split(), &vecs).map_err(|e| e.to_string())?;
        values["explicit_embedding"] = json!({
            "gram_matches": gram_matches,
            "index": idx.to_string(),
            "vectors": vecs.iter().map(LatticeVector::to_i64).collect::<Vec<_>>(),
        });
    }
    Ok((checks, values))
}

fn properties_task(ctx: &Context) -> (Vec<Check>, Value) {
    let seed = ctx.get("seed").and_then(Value::as_u64).unwrap_or(DEFAULT_SEED);
    let cases = ctx.get("cases").and_then(Value::as_u64).map_or(DEFAULT_CASES, |c| c as usize);
    let outcomes = properties::run_all(seed, cases);
    let checks = outcomes.iter().map(|o| Check::new(o.name, 0, o.failures)).collect();
    (checks, json!({"seed": seed, "cases": cases, "outcomes": outcomes}))
}

/// Human-readable rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = format!("input: {}\n", r.input);
    for t in &r.tasks {
        out.push_str(&format!("{}: {}\n", t.task, if t.status == Status::Pass { "PASS" } else { "FAIL" }));
        if let Some(e) = &t.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        for c in &t.checks {
            let mark = if c.pass { "ok" } else { "MISMATCH" };
            out.push_str(&format!("  [{mark}] {}: computed {} expected {}\n", c.name, c.computed, c.expected));
        }
        if let Value::Object(m) = &t.values {
            for (k, v) in m {
                let s = v.to_string();
                if s.len() <= 100 {
                    out.push_str(&format!("  {k}: {s}\n"));
                } else {
                    out.push_str(&format!("  {k}: ({} bytes, see --format json)\n", s.len()));
                }
            }
        }
    }
    out.push_str(&format!("overall: {}\n", if r.pass() { "PASS" } else { "FAIL" }));
    out
}
