//! Numeric checks of the three worked surfaces: a double plane branched
//! along two tangent `(1,2)` curves and four rulings, a double plane with
//! an `E8` point and two tacnodes, and a rational elliptic surface with
//! fibers `IV` and `I0*`.

use serde_json::json;

use super::Check;
use crate::blowup::{
    arithmetic_genus, canonical_class, divisible_by_two, double_cover_selfint, exceptional_curve, genus_and_dim,
    half, pair, proper_transform, self_intersection, BlowupError, DivClass, PointTree,
};
use crate::fixed_locus::{ct_budget_check, FixedLocusError, PICTURES, SMOOTH_FIBER_FIXED_POINTS};

/// `x1..x6`, `x1'..x6'` with `x1' > x1`, `x2' > x2` infinitely near.
fn tangent_pair_tree() -> PointTree {
    let mut t = PointTree::new();
    for i in 1..=6 {
        t.add(&format!("x{i}"), None).expect("fresh");
    }
    for i in 1..=6 {
        let parent = format!("x{i}");
        t.add(&format!("x{i}'"), (i <= 2).then_some(parent.as_str())).expect("fresh");
    }
    t
}

/// Intersection number of the pullbacks to the double cover.
fn cover_pair(c: &DivClass, d: &DivClass) -> Result<i64, BlowupError> {
    Ok(2 * pair(c, d)?)
}

pub fn example1() -> Result<Vec<Check>, BlowupError> {
    let t = tangent_pair_tree();
    let through = |ids: &[&str]| -> Vec<(String, i64)> { ids.iter().map(|s| (s.to_string(), 1)).collect() };
    let pt = |bideg, pts: Vec<(String, i64)>| {
        let refs: Vec<(&str, i64)> = pts.iter().map(|(s, m)| (s.as_str(), *m)).collect();
        proper_transform(&t, bideg, &refs)
    };
    let r = pt((1, 2), through(&["x1", "x1'", "x2", "x2'", "x3", "x4", "x5", "x6"]))?;
    let rp = pt((1, 2), through(&["x1", "x1'", "x2", "x2'", "x3'", "x4'", "x5'", "x6'"]))?;
    let l1 = pt((1, 0), through(&["x1", "x1'"]))?;
    let l2 = pt((1, 0), through(&["x2", "x2'"]))?;
    let l3 = pt((1, 0), through(&["x3", "x4", "x3'", "x4'"]))?;
    let l4 = pt((1, 0), through(&["x5", "x6", "x5'", "x6'"]))?;
    let ex = |id: &str| exceptional_curve(&t, id);
    let (r1, r2, r1p, r2p) = (ex("x1")?, ex("x2")?, ex("x1'")?, ex("x2'")?);

    let d = [&r, &rp, &l1, &l2, &l3, &l4, &r1, &r2].iter().fold(DivClass::pullback(&t, (0, 0)), |acc, c| &acc + c);
    let mut printed = 2 * &DivClass::pullback(&t, (3, 2));
    let mut printed_k = DivClass::pullback(&t, (-2, -2));
    for i in 1..=6 {
        let pair_i = &ex(&format!("x{i}"))? + &ex(&format!("x{i}'"))?;
        printed = &printed - &(2 * &pair_i);
        printed_k = &printed_k + &pair_i;
    }
    printed = &printed - &(4 * &(&r1p + &r2p));
    printed_k = &(&printed_k + &r1p) + &r2p;

    let k = canonical_class(&t);
    let half_d = half(&d).ok_or(BlowupError::OddBranchComponent(self_intersection(&d)))?;
    let k_cover_base = &k + &half_d;
    let f1 = DivClass::f1(&t);
    let expected_k_cover = &(&f1 - &r1p) - &r2p;
    let ks_prime_sq = cover_pair(&k_cover_base, &k_cover_base)?;
    let contracted = 4;
    let elliptic_genus = |c: &DivClass| -> Result<i64, BlowupError> {
        Ok((cover_pair(&k_cover_base, c)? + cover_pair(c, c)?) / 2 + 1)
    };

    let mut checks = vec![
        Check::new("L1^2", -2, self_intersection(&l1)),
        Check::new("L2^2", -2, self_intersection(&l2)),
        Check::new("R1^2", -2, self_intersection(&r1)),
        Check::new("R2^2", -2, self_intersection(&r2)),
        Check::new("R^2", -4, self_intersection(&r)),
        Check::new("R'^2", -4, self_intersection(&rp)),
        Check::new("L3^2", -4, self_intersection(&l3)),
        Check::new("L4^2", -4, self_intersection(&l4)),
        Check::new("D matches printed class", true, d == printed),
        Check::new("D divisible by 2", true, divisible_by_two(&d)),
        Check::new("K_X' matches printed class", true, k == printed_k),
        Check::new("K_X' + D/2 = f1 - R1' - R2'", true, k_cover_base == expected_k_cover),
        Check::new("A_i^2", -1, double_cover_selfint(&l1, true)?),
        Check::new("B_i^2", -1, double_cover_selfint(&r1, true)?),
        Check::new("R~^2", -2, double_cover_selfint(&r, true)?),
        Check::new("L3~^2", -2, double_cover_selfint(&l3, true)?),
        Check::new("preimage of R3^2", -2, double_cover_selfint(&ex("x3")?, false)?),
        Check::new("preimage of R3'^2", -2, double_cover_selfint(&ex("x3'")?, false)?),
        Check::new("genus of F1'", 1, elliptic_genus(&r1p)?),
        Check::new("genus of F2'", 1, elliptic_genus(&r2p)?),
        Check::new("K_S'^2", -4, ks_prime_sq),
        Check::new("K_S^2 after contracting A1, A2, B1, B2", 0, ks_prime_sq + contracted),
        Check::new("K_S'.fiber", 0, cover_pair(&k_cover_base, &f1)?),
    ];
    for (name, c) in [("L1", &l1), ("L3", &l3), ("R", &r), ("R'", &rp), ("R1", &r1)] {
        checks.push(Check::new(format!("genus of {name}"), 0, arithmetic_genus(&t, c)?));
    }
    Ok(checks)
}

pub fn example2() -> Result<Vec<Check>, BlowupError> {
    let mut t = PointTree::new();
    for i in 1..=3 {
        let p = format!("x{i}");
        t.add(&p, None)?;
        t.add(&format!("x{i}'"), Some(&p))?;
    }
    let mults = [("x1", 2), ("x1'", 1), ("x2", 2), ("x2'", 2), ("x3", 2), ("x3'", 2)];
    let rp = proper_transform(&t, (3, 4), &mults)?;
    let (g34, dim34) = genus_and_dim(3, 4)?;
    let drop: i64 = mults.iter().map(|&(_, m)| m * (m - 1) / 2).sum();
    let through = ["x1", "x2", "x2'", "x3", "x3'"];
    let c = proper_transform(&t, (1, 2), &through.map(|p| (p, 1)))?;
    let (_, dim12) = genus_and_dim(1, 2)?;
    Ok(vec![
        Check::new("genus of (3,4)", 6, g34),
        Check::new("dim |(3,4)|", 19, dim34),
        Check::new("dim |(1,2)|", 5, dim12),
        Check::new("conditions on C", dim12, through.len() as i64),
        Check::new("genus of R' after singularities", g34 - drop, arithmetic_genus(&t, &rp)?),
        Check::new("R'^2 after singularities", 24 - 4 * 5 - 1, self_intersection(&rp)),
        Check::new("C^2", -1, self_intersection(&c)),
    ])
}

pub fn example3() -> Result<Vec<Check>, FixedLocusError> {
    let budget = ct_budget_check("E~6", "smooth")?;
    let pictured = PICTURES.iter().find(|p| p.fiber == "E~6").map(|p| p.stars.len());
    Ok(vec![
        Check::new("fixed components of E~6", json!(4), json!(pictured)),
        Check::new("fixed points on the smooth fiber", 4, SMOOTH_FIBER_FIXED_POINTS),
        Check::new("Lefschetz total 8 + 4", json!([[8, 4]]), json!(budget.witnesses)),
        Check::new("Lefschetz number 12 reached", true, budget.achievable),
    ])
}
