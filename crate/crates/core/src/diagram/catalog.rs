//! Named curve configurations: Kodaira-type fibers, the extra-special
//! crystallographic diagrams, the diagrams `d1`..`d3` and two rejected
//! Coxeter diagrams.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{CurveDiagram, RootType};
use crate::lattice::roots::{e10_split, e8, DynkinKind, E8_HIGHEST_ROOT};
use crate::lattice::LatticeVector;
use crate::linalg;

/// Named diagrams other than single fibers.
pub const SPECIAL_NAMES: [&str; 9] = [
    "e8-special",
    "d8-special",
    "e7a1-special-1",
    "e7a1-special-2",
    "d1",
    "d2",
    "d3",
    "remark-reject-1",
    "remark-reject-2",
];

/// Names whose transcription is not pinned down by the source picture.
pub const PROVISIONAL: [&str; 1] = ["d3"];

/// Affine types of rank at most 8, ordered `A`, `D`, `E` by rank.
pub fn fiber_types() -> Vec<RootType> {
    let mut out: Vec<RootType> = (1..=8).map(|n| RootType::new(DynkinKind::A, n)).collect();
    out.extend((4..=8).map(|n| RootType::new(DynkinKind::D, n)));
    out.extend((6..=8).map(|n| RootType::new(DynkinKind::E, n)));
    out
}

pub fn names() -> Vec<String> {
    let mut out: Vec<String> = SPECIAL_NAMES.iter().map(|s| s.to_string()).collect();
    out.extend(fiber_types().iter().map(|t| t.affine_name()));
    out
}

pub fn is_provisional(name: &str) -> bool {
    PROVISIONAL.contains(&name)
}

/// Looks up a catalog diagram. Fiber names `A~n`, `D~n` are accepted for any
/// valid `n`, not only those listed by [`names`].
pub fn by_name(name: &str) -> Option<CurveDiagram> {
    Some(match name {
        "e8-special" => e8_special(),
        "d8-special" => d8_special(),
        "e7a1-special-1" => e7a1_special(true),
        "e7a1-special-2" => e7a1_special(false),
        "d1" => d1(),
        "d2" => d2(),
        "d3" => d3(),
        "remark-reject-1" => remark_reject(1),
        "remark-reject-2" => remark_reject(2),
        other => fiber(RootType::parse_affine(other)?),
    })
}

fn path(n: usize) -> Vec<(usize, usize, i64)> {
    (1..n).map(|i| (i - 1, i, 1)).collect()
}

/// Affine diagram of the given type, components `R1 .. R(n+1)`.
///
/// `A~1` is a double edge; `A~n` the cycle `0..n`; `D~n` the path
/// `0..n-2` with leaves `n-1` on node 1 and `n` on node `n-3`; `E~6` the path
/// `0..4` with `5` on node 2 and `6` on `5`; `E~7` the path `0..6` with `7`
/// on node 3; `E~8` the path `0..7` with `8` on node 2.
pub fn fiber(t: RootType) -> CurveDiagram {
    let n = t.rank;
    let d = CurveDiagram::numbered("R", n + 1);
    let edges = match (t.kind, n) {
        (DynkinKind::A, 1) => vec![(0, 1, 2)],
        (DynkinKind::A, _) => {
            let mut e = path(n + 1);
            e.push((0, n, 1));
            e
        }
        (DynkinKind::D, _) => {
            let mut e = path(n - 1);
            e.push((1, n - 1, 1));
            e.push((n - 3, n, 1));
            e
        }
        (DynkinKind::E, 6) => {
            let mut e = path(5);
            e.extend([(2, 5, 1), (5, 6, 1)]);
            e
        }
        (DynkinKind::E, 7) => {
            let mut e = path(7);
            e.push((3, 7, 1));
            e
        }
        (DynkinKind::E, _) => {
            let mut e = path(8);
            e.push((2, 8, 1));
            e
        }
    };
    d.with_edges(&edges).expect("fiber edges are valid")
}

fn labelled(labels: &[&str], edges: &[(&str, &str, i64)]) -> CurveDiagram {
    let mut d = CurveDiagram::with_labels(labels.iter().copied());
    for &(a, b, m) in edges {
        let (i, j) = (d.index_of(a).expect("label"), d.index_of(b).expect("label"));
        d.add_edge(i, j, m, m).expect("catalog edge");
    }
    d
}

fn chain<'a>(names: &[&'a str]) -> Vec<(&'a str, &'a str, i64)> {
    names.windows(2).map(|w| (w[0], w[1], 1)).collect()
}

/// `R2 - R3 - ... - R9 - C` with `R1` on `R4`.
pub fn e8_special() -> CurveDiagram {
    let mut e = chain(&["R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "C"]);
    e.push(("R1", "R4", 1));
    labelled(&["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "C"], &e)
}

/// `R3 - R4 - ... - R9 - C` with `R1` on `R4` and `R2` on `R8`.
pub fn d8_special() -> CurveDiagram {
    let mut e = chain(&["R3", "R4", "R5", "R6", "R7", "R8", "R9", "C"]);
    e.extend([("R1", "R4", 1), ("R2", "R8", 1)]);
    labelled(&["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "C"], &e)
}

/// `R2 - ... - R8 - C - R9` with `R1` on `R5` and a double edge `R9 = R10`;
/// the first variant also joins `C` and `R10`.
pub fn e7a1_special(c_meets_r10: bool) -> CurveDiagram {
    let mut e = chain(&["R2", "R3", "R4", "R5", "R6", "R7", "R8", "C", "R9"]);
    e.extend([("R1", "R5", 1), ("R9", "R10", 2)]);
    if c_meets_r10 {
        e.push(("C", "R10", 1));
    }
    labelled(&["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "C"], &e)
}

const D_LABELS: [&str; 10] = ["R0", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"];

fn d1_edges() -> Vec<(&'static str, &'static str, i64)> {
    let mut e = chain(&["R4", "R3", "R2", "R0", "R8", "R7", "R6", "R5", "R4"]);
    e.extend([("R4", "R1", 1), ("R9", "R8", 1)]);
    e
}

/// The 8-cycle `R4 R3 R2 R0 R8 R7 R6 R5` with `R1` on `R4` and `R9` on `R8`.
pub fn d1() -> CurveDiagram {
    labelled(&D_LABELS, &d1_edges())
}

fn d_extended(link: bool) -> CurveDiagram {
    let mut labels = D_LABELS.to_vec();
    labels.extend(["R1'", "R9'"]);
    let mut e = d1_edges();
    e.extend([("R1", "R1'", 2), ("R9'", "R9", 2)]);
    if link {
        e.push(("R1'", "R9'", 2));
    }
    labelled(&labels, &e)
}

/// [`d1`] with `R1 = R1' = R9' = R9` (double edges).
pub fn d2() -> CurveDiagram {
    d_extended(true)
}

/// [`d1`] with `R1 = R1'` and `R9' = R9`, leaving `R1' . R9'` unset.
pub fn d3() -> CurveDiagram {
    d_extended(false)
}

/// The two Coxeter diagrams shown not to be realizable.
///
/// `1`: path `a0 .. a6` with leaves `u1, u2` on `a1` and `w1, w2` on `a5`.
/// `2`: path `c0 .. c6`, arm `c2 - d1 - d2`, triangle `c6 t1 t2`.
pub fn remark_reject(which: u8) -> CurveDiagram {
    if which == 1 {
        let mut e = chain(&["a0", "a1", "a2", "a3", "a4", "a5", "a6"]);
        e.extend([("a1", "u1", 1), ("a1", "u2", 1), ("a5", "w1", 1), ("a5", "w2", 1)]);
        labelled(&["a0", "a1", "a2", "a3", "a4", "a5", "a6", "u1", "u2", "w1", "w2"], &e)
    } else {
        let mut e = chain(&["c0", "c1", "c2", "c3", "c4", "c5", "c6"]);
        e.extend([("c2", "d1", 1), ("d1", "d2", 1), ("c6", "t1", 1), ("c6", "t2", 1), ("t1", "t2", 1)]);
        labelled(&["c0", "c1", "c2", "c3", "c4", "c5", "c6", "d1", "d2", "t1", "t2"], &e)
    }
}

/// Classes of `R0 .. R9` of [`d1`] in `E10 = U + E8`, basis `(f, g, R1..R8)`.
///
/// `R1..R8` are the simple roots of E8, `R9 = 2f - theta` closes the E~8
/// fiber `2f`, and `R0 = a f + 2g + e` where `e` in E8 pairs to 1 with `R2`,
/// `R8` and to 0 with the other simple roots.
pub fn d1_in_e10() -> Vec<LatticeVector> {
    let g = e8();
    let mut rhs = vec![BigInt::zero(); 8];
    rhs[1] = BigInt::from(1);
    rhs[7] = BigInt::from(1);
    let e: Vec<i64> = linalg::solve_rational(g.gram(), &rhs)
        .expect("E8 is unimodular")
        .iter()
        .map(|x| x.to_integer().to_i64().expect("small"))
        .collect();
    let e_norm = g.norm(&LatticeVector::from_i64(&e)).expect("rank 8").to_i64().expect("small");
    let a = (-2 - e_norm) / 4;
    debug_assert_eq!(4 * a, -2 - e_norm);
    let mut out = Vec::with_capacity(10);
    let mut r0 = vec![a, 2];
    r0.extend(&e);
    out.push(LatticeVector::from_i64(&r0));
    for i in 0..8 {
        out.push(LatticeVector::unit(10, i + 2));
    }
    let mut r9 = vec![2, 0];
    r9.extend(E8_HIGHEST_ROOT.iter().map(|x| -x));
    out.push(LatticeVector::from_i64(&r9));
    debug_assert_eq!(e10_split().rank(), 10);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{classify, enumerate_affine_subdiagrams, gram_of, multiplicities, DiagramClass};
    use crate::lattice::{profile, sublattice_index};
    use crate::linalg::{det_exact, signature};

    #[test]
    fn every_name_resolves() {
        for n in names() {
            assert!(by_name(&n).is_some(), "{n}");
        }
        assert!(by_name("A~12").is_some());
        assert!(by_name("D~3").is_none());
        assert!(by_name("E~9").is_none());
        assert!(by_name("nope").is_none());
        assert!(is_provisional("d3"));
    }

    #[test]
    fn catalog_edges_have_multiplicity_at_most_two() {
        for n in names() {
            let d = by_name(&n).unwrap();
            assert!(d.edges().iter().all(|e| (1..=2).contains(&e.intersection)), "{n}");
        }
    }

    #[test]
    fn extra_special_diagrams_are_hyperbolic_rank_ten() {
        for n in ["e8-special", "d8-special"] {
            let p = profile(&crate::lattice::Lattice::new(gram_of(&by_name(n).unwrap())).unwrap());
            assert_eq!(p.signature, crate::linalg::Signature::new(1, 9, 0), "{n}");
        }
        assert_eq!(det_exact(&gram_of(&e8_special())).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn e8_special_is_the_e10_root_basis() {
        use crate::hyperbolic::{e10_basis, z_1_10};
        // R1 -> a0, R2..R9 -> a1..a8, C -> a9
        let basis = e10_basis();
        assert_eq!(z_1_10().gram_of(&basis).unwrap(), gram_of(&e8_special()));
    }

    #[test]
    fn d1_structure() {
        let d = d1();
        let idx = |l: &str| d.index_of(l).unwrap();
        let e8t: Vec<usize> = (1..=9).map(|i| idx(&format!("R{i}"))).collect();
        assert_eq!(classify(&d.induced(&e8t)).affine_type(), Some(RootType::new(DynkinKind::E, 8)));
        let e7: Vec<usize> = (0..=7).map(|i| idx(&format!("R{i}"))).collect();
        assert_eq!(classify(&d.induced(&e7)).affine_type(), Some(RootType::new(DynkinKind::E, 7)));
        let other: Vec<usize> = ["R0", "R2", "R3", "R5", "R6", "R7", "R8", "R9"].iter().map(|l| idx(l)).collect();
        assert_eq!(classify(&d.induced(&other)).affine_type(), Some(RootType::new(DynkinKind::E, 7)));
        assert_eq!(signature(&gram_of(&d)).unwrap(), crate::linalg::Signature::new(1, 9, 0));
    }

    #[test]
    fn d1_determinant_is_minus_the_square_of_the_bisection_degree() {
        // span(R0..R9) = E8 + <F, R0> with F the E~8 fiber, so det = -(R0.F)^2
        let d = d1();
        let fiber: Vec<usize> = (1..=9).map(|i| d.index_of(&format!("R{i}")).unwrap()).collect();
        let m = multiplicities(&d.induced(&fiber)).unwrap();
        let r0 = d.index_of("R0").unwrap();
        let degree: i64 = fiber
            .iter()
            .zip(&m)
            .map(|(&v, &k)| d.edge_between(r0, v).map_or(0, |e| e.intersection) * k as i64)
            .sum();
        assert_eq!(degree, 4);
        assert_eq!(det_exact(&gram_of(&d)).unwrap(), BigInt::from(-degree * degree));
    }

    #[test]
    fn d1_embeds_in_e10_with_index_four() {
        let l = e10_split();
        let vs = d1_in_e10();
        assert_eq!(l.gram_of(&vs).unwrap(), gram_of(&d1()));
        assert_eq!(vs[0].to_i64().unwrap()[..2], [2, 2]);
        let idx = sublattice_index(&l, &vs).unwrap();
        assert_eq!(idx, BigInt::from(4));
        // disc(sub) = index^2 * disc(E10)
        assert_eq!(det_exact(&gram_of(&d1())).unwrap(), -(&idx * &idx));
    }

    #[test]
    fn d2_and_d3_ranks() {
        let rank = |d: &CurveDiagram| {
            let s = signature(&gram_of(d)).unwrap();
            s.positive + s.negative
        };
        assert_eq!(rank(&d2()), 10);
        assert_eq!(rank(&d3()), 12);
        assert!(matches!(classify(&d2()), DiagramClass::Indefinite));
    }

    #[test]
    fn remark_rejects_pass_vinberg_and_show_their_fibrations() {
        for k in [1, 2] {
            assert!(crate::diagram::vinberg_check(&remark_reject(k)).unwrap().pass);
        }
        let aff = enumerate_affine_subdiagrams(&remark_reject(1)).unwrap();
        assert_eq!(aff.iter().filter(|a| a.kind == RootType::new(DynkinKind::D, 4)).count(), 2);
    }
}
