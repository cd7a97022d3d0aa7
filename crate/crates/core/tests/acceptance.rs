//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use enriques_core::blowup::{double_cover_selfint, genus_and_dim, proper_transform, self_intersection, PointTree};
use enriques_core::diagram::catalog;
use enriques_core::diagram::{euler_number, fibration_configs, gram_of, vinberg_check, RootType};
use enriques_core::fixed_locus::{ct_budget_check, euler_of, theorem44_search, valid_assignments, HalfFiber, Obstruction};
use enriques_core::hyperbolic::{
    e10_basis, e10_coordinates, e10_lattice, k_vector, standard_isotropic_sequence, z_1_10,
};
use enriques_core::lattice::roots::{e8, vectors_of, D4_D4_IN_E8, E6_A2_IN_E8};
use enriques_core::lattice::{profile, saturation_quotient, sublattice_index};
use enriques_core::linalg::det_exact;
use enriques_core::tasks::properties::run_all;
use enriques_core::tasks::DEFAULT_SEED;
use enriques_core::wild::{lef_point, MonomialIdeal2};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok { Ok(detail) } else { Err(detail) }
}

fn with_problems(detail: String, problems: &[String]) -> String {
    if problems.is_empty() { detail } else { format!("{detail}; {}", problems.join("; ")) }
}

fn e10_construction() -> Outcome {
    let l = z_1_10();
    let basis = e10_basis();
    let perp = basis.iter().all(|b| l.pair(b, &k_vector()).unwrap().is_zero());
    let p = profile(&e10_lattice());
    let sig = (p.signature.positive, p.signature.negative);
    ensure(
        perp && basis.len() == 10 && p.determinant == BigInt::from(-1) && p.even && sig == (1, 9),
        format!("rank {}, det {}, even {}, signature {:?}", basis.len(), p.determinant, p.even, sig),
    )
}

fn standard_isotropic_sequence_shape() -> Outcome {
    let l = z_1_10();
    let fs = standard_isotropic_sequence().vectors().to_vec();
    let norms_zero = fs.iter().all(|f| l.norm(f).unwrap().is_zero());
    let pairs_one = (0..10).all(|i| (0..10).all(|j| i == j || l.pair(&fs[i], &fs[j]).unwrap() == BigInt::from(1)));
    let det = det_exact(&l.gram_of(&fs).unwrap()).unwrap();
    let coords: Vec<_> = fs.iter().map(|f| e10_coordinates(f).unwrap()).collect();
    let index = sublattice_index(&e10_lattice(), &coords).unwrap();
    ensure(
        norms_zero && pairs_one && det == BigInt::from(-9) && index == BigInt::from(3),
        format!("norms 0: {norms_zero}, products 1: {pairs_one}, det {det}, index {index}"),
    )
}

fn fixed_locus_table() -> Outcome {
    let rows = [
        ("E~8", 10),
        ("D~8", 10),
        ("A~8", 9),
        ("A~8", 9),
        ("E~7", 9),
        ("D~7", 9),
        ("A~7", 8),
        ("A~7", 8),
        ("E~6", 8),
        ("D~6", 8),
        ("A~6", 7),
        ("A~6", 7),
        ("A~5", 6),
        ("A~5", 6),
        ("D~4", 6),
        ("A~4", 5),
        ("A~3", 4),
        ("A~2", 3),
        ("A~1", 2),
    ];
    let mut problems = Vec::new();
    let mut computed = Vec::new();
    let mut types = BTreeSet::new();
    for (name, expected) in rows {
        types.insert(name);
        let d = catalog::by_name(name).unwrap();
        let all = valid_assignments(&d).unwrap();
        let e = euler_number(&d).unwrap();
        let values: BTreeSet<i64> = all.iter().map(|a| euler_of(a, &d).unwrap()).collect();
        if all.is_empty() {
            problems.push(format!("{name} has no assignment"));
        }
        if values != BTreeSet::from([e]) || e != expected {
            problems.push(format!("{name}: values {values:?}, e(F) {e}, row {expected}"));
        }
        computed.push(values.into_iter().next().unwrap_or(-1));
    }
    let d5 = valid_assignments(&catalog::by_name("D~5").unwrap()).unwrap().len();
    if d5 != 0 {
        problems.push(format!("D~5 has {d5} assignments"));
    }
    if types.len() != 15 {
        problems.push(format!("{} pictured types", types.len()));
    }
    ensure(problems.is_empty(), with_problems(format!("rows {computed:?}; D~5 assignments {d5}"), &problems))
}

fn wild_lefschetz() -> Outcome {
    let r = lef_point(&MonomialIdeal2::new([(2, 0), (0, 2)]).unwrap()).unwrap();
    let got = (r.colength_j, r.dim_j_mod_j2, r.omega_term, r.lefschetz);
    ensure(got == (4, 8, 8, 4), format!("(u^2, v^2): {} + {} - {} = {}", got.0, got.1, got.2, got.3))
}

fn d1_determinant_and_index() -> Outcome {
    let det = det_exact(&gram_of(&catalog::d1())).unwrap();
    let num_disc = BigInt::from(-1);
    let ratio = (&det % &num_disc).is_zero().then(|| &det / &num_disc).filter(|r| r.is_positive());
    let index = ratio.and_then(|r| {
        let root = r.sqrt();
        (&root * &root == r).then_some(root)
    });
    ensure(
        det == BigInt::from(-4) && index == Some(BigInt::from(2)),
        format!(
            "det {det} (expected -4), index from disc ratio {} (expected 2)",
            index.map_or("none".into(), |i| i.to_string())
        ),
    )
}

fn extra_special_fibrations() -> Outcome {
    let mut problems = Vec::new();
    for n in ["e8-special", "d8-special", "e7a1-special-1", "e7a1-special-2"] {
        if !vinberg_check(&catalog::by_name(n).unwrap()).unwrap().pass {
            problems.push(format!("{n} fails the Vinberg check"));
        }
    }
    let e8t = RootType::parse_affine("E~8").unwrap();
    let count = |n: &str| fibration_configs(&catalog::by_name(n).unwrap()).unwrap();
    let e8s = count("e8-special").len();
    let v1 = count("e7a1-special-1").iter().filter(|c| c.contains_type(e8t)).count();
    let v2 = count("e7a1-special-2").iter().filter(|c| c.contains_type(e8t)).count();
    if (e8s, v1, v2) != (1, 2, 1) {
        problems.push("counts differ".into());
    }
    ensure(problems.is_empty(), with_problems(format!("E~8-special {e8s} config; configs with E~8 {v1} and {v2}"), &problems))
}

fn glue_groups() -> Outcome {
    let dd = saturation_quotient(&e8(), &vectors_of(&D4_D4_IN_E8)).unwrap().factors_i64();
    let ea = saturation_quotient(&e8(), &vectors_of(&E6_A2_IN_E8)).unwrap().factors_i64();
    ensure(dd == [2, 2] && ea == [3], format!("D4+D4 {dd:?}, E6+A2 {ea:?}"))
}

fn half_fiber_search() -> Outcome {
    let cands = theorem44_search();
    let mut problems = Vec::new();
    for c in &cands {
        let ok = match (&c.pair, &c.killed_by) {
            ((HalfFiber::Cycle(a), HalfFiber::Cycle(b)), Some(Obstruction::RankBound { rank, bound })) => {
                a + b == 12 && *rank == 11 && *bound == 9
            }
            ((HalfFiber::Smooth, HalfFiber::Cycle(8)), Some(Obstruction::QuotientEuler { total, budget, .. })) => {
                *total == 14 && *budget == 12
            }
            _ => false,
        };
        if !ok || c.fixed_locus_total != 12 {
            problems.push(format!("{} + {}", c.pair.0, c.pair.1));
        }
    }
    let smooth8 = cands.iter().any(|c| c.pair == (HalfFiber::Smooth, HalfFiber::Cycle(8)));
    ensure(
        problems.is_empty() && smooth8 && cands.len() == 7,
        with_problems(format!("{} candidates, survivors {}", cands.len(), cands.iter().filter(|c| c.killed_by.is_none()).count()), &problems),
    )
}

fn worked_examples() -> Outcome {
    let (g, dim) = genus_and_dim(3, 4).unwrap();
    let (_, dim12) = genus_and_dim(1, 2).unwrap();
    let mut t = PointTree::new();
    for i in 1..=6 {
        t.add(&format!("x{i}"), None).unwrap();
    }
    t.add("x1'", Some("x1")).unwrap();
    t.add("x2'", Some("x2")).unwrap();
    let l1 = proper_transform(&t, (1, 0), &[("x1", 1), ("x1'", 1)]).unwrap();
    let pts = ["x1", "x1'", "x2", "x2'", "x3", "x4", "x5", "x6"].map(|p| (p, 1));
    let r = proper_transform(&t, (1, 2), &pts).unwrap();
    let (l2, r2) = (self_intersection(&l1), self_intersection(&r));
    let (a, rt) = (double_cover_selfint(&l1, true).unwrap(), double_cover_selfint(&r, true).unwrap());
    let budget = ct_budget_check("E~6", "smooth").unwrap();
    ensure(
        (g, dim, dim12, l2, r2, a, rt) == (6, 19, 5, -2, -4, -1, -2) && budget.witnesses == [(8, 4)],
        format!(
            "(3,4) -> ({g}, {dim}), dim (1,2) {dim12}, L^2 {l2}, R^2 {r2}, covers {a} {rt}, budget {:?}",
            budget.witnesses
        ),
    )
}

fn property_suites() -> Outcome {
    let outcomes = run_all(DEFAULT_SEED, 1000);
    let summary: Vec<String> = outcomes.iter().map(|o| format!("{} {}/{}", o.name, o.cases - o.failures, o.cases)).collect();
    ensure(outcomes.iter().all(|o| o.pass()), summary.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("E10 as k10-perp in Z^{1,10}", e10_construction),
        ("standard isotropic sequence", standard_isotropic_sequence_shape),
        ("fixed-locus table and D~5 exclusion", fixed_locus_table),
        ("wild Lefschetz number at (u^2, v^2)", wild_lefschetz),
        ("d1 determinant and index", d1_determinant_and_index),
        ("extra-special diagrams", extra_special_fibrations),
        ("E8 glue groups", glue_groups),
        ("invariant half-fiber search", half_fiber_search),
        ("worked-example numerics", worked_examples),
        ("randomized property suites", property_suites),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let (mark, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {mark}: {name}: {detail}", k + 1);
    }
    let secs = start.elapsed().as_secs_f64();
    println!("{} of {} criteria passed in {secs:.2}s", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
