//! Configurations of curves as weighted graphs: Gram matrices, ADE and
//! affine recognition, fiber multiplicities, affine subdiagrams and
//! Vinberg's criterion.

pub mod catalog;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::lattice::roots::DynkinKind;
use crate::linalg::{self, IntMatrix};

/// Total rank of an affine configuration defining a genus one fibration.
pub const FIBRATION_RANK: usize = 8;

/// Largest vertex count accepted by subset enumeration.
pub const MAX_ENUMERATION_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("vertex index {0} out of range")]
    BadIndex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1}: intersection number must be at least 1")]
    NonPositive(usize, usize),
    #[error("edge {0}-{1}: more distinct points than the intersection number")]
    TooManyPoints(usize, usize),
    #[error("diagram is not affine: {0}")]
    NotAffine(DiagramClass),
    #[error("diagram is not connected")]
    Disconnected,
    #[error("diagram has {0} vertices, enumeration supports at most {MAX_ENUMERATION_VERTICES}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub label: String,
    pub self_intersection: i64,
}

/// An intersection between two distinct curves: `intersection` is the
/// intersection number, `points` the number of distinct intersection points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub intersection: i64,
    pub points: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CurveDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl CurveDiagram {
    /// (-2)-curves with the given labels and no edges.
    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let vertices = labels
            .into_iter()
            .map(|l| Vertex { label: l.into(), self_intersection: -2 })
            .collect();
        Self { vertices, edges: Vec::new() }
    }

    /// Unlabelled (-2)-curves named `prefix1 .. prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::with_labels((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, self_intersection: i64) -> usize {
        self.vertices.push(Vertex { label: label.into(), self_intersection });
        self.vertices.len() - 1
    }

    /// Adds an edge; stored with `i < j` and kept sorted.
    pub fn add_edge(&mut self, i: usize, j: usize, intersection: i64, points: i64) -> Result<(), DiagramError> {
        let n = self.vertices.len();
        for &v in &[i, j] {
            if v >= n {
                return Err(DiagramError::BadIndex(v));
            }
        }
        if i == j {
            return Err(DiagramError::SelfLoop(i));
        }
        let (i, j) = (i.min(j), i.max(j));
        if intersection < 1 {
            return Err(DiagramError::NonPositive(i, j));
        }
        if points > intersection || points < 0 {
            return Err(DiagramError::TooManyPoints(i, j));
        }
        if self.edges.iter().any(|e| e.i == i && e.j == j) {
            return Err(DiagramError::DuplicateEdge(i, j));
        }
        let e = Edge { i, j, intersection, points };
        let pos = self.edges.partition_point(|x| (x.i, x.j) < (i, j));
        self.edges.insert(pos, e);
        Ok(())
    }

    /// Builder form of [`Self::add_edge`] with `points = intersection`.
    pub fn with_edges(mut self, edges: &[(usize, usize, i64)]) -> Result<Self, DiagramError> {
        for &(i, j, m) in edges {
            self.add_edge(i, j, m, m)?;
        }
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Vec<&str> {
        self.vertices.iter().map(|v| v.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&Edge> {
        let (i, j) = (a.min(b), a.max(b));
        self.edges.iter().find(|e| e.i == i && e.j == j)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.i == v {
                    Some(e.j)
                } else if e.j == v {
                    Some(e.i)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.i == v || e.j == v).count()
    }

    /// Distinct intersection points on curve `v`.
    pub fn incident_points(&self, v: usize) -> i64 {
        self.edges.iter().filter(|e| e.i == v || e.j == v).map(|e| e.points).sum()
    }

    /// Induced subdiagram on `idx`, renumbered in the given order.
    pub fn induced(&self, idx: &[usize]) -> CurveDiagram {
        let vertices = idx.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut out = CurveDiagram { vertices, edges: Vec::new() };
        for (a, &va) in idx.iter().enumerate() {
            for (b, &vb) in idx.iter().enumerate().skip(a + 1) {
                if let Some(e) = self.edge_between(va, vb) {
                    out.add_edge(a, b, e.intersection, e.points).expect("induced edge is valid");
                }
            }
        }
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.len()];
        for e in &self.edges {
            adj[e.i] |= 1 << e.j;
            adj[e.j] |= 1 << e.i;
        }
        adj
    }
}

/// Symmetric intersection matrix: self-intersections on the diagonal,
/// intersection numbers off it.
pub fn gram_of(d: &CurveDiagram) -> IntMatrix {
    let n = d.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, v) in d.vertices.iter().enumerate() {
        m.set(i, i, BigInt::from(v.self_intersection));
    }
    for e in &d.edges {
        m.set(e.i, e.j, BigInt::from(e.intersection));
        m.set(e.j, e.i, BigInt::from(e.intersection));
    }
    m
}

/// An ADE label. For affine diagrams `rank` is the rank of the finite
/// root system, one less than the number of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootType {
    pub kind: DynkinKind,
    pub rank: usize,
}

impl RootType {
    pub fn new(kind: DynkinKind, rank: usize) -> Self {
        Self { kind, rank }
    }

    fn letter(&self) -> char {
        match self.kind {
            DynkinKind::A => 'A',
            DynkinKind::D => 'D',
            DynkinKind::E => 'E',
        }
    }

    /// `A~3` style name of the affine diagram of this type.
    pub fn affine_name(&self) -> String {
        format!("{}~{}", self.letter(), self.rank)
    }

    /// Parses `A~3`, `D~4`, `E~8`.
    pub fn parse_affine(s: &str) -> Option<Self> {
        let (l, n) = s.split_once('~')?;
        let rank: usize = n.parse().ok()?;
        let kind = match l {
            "A" if rank >= 1 => DynkinKind::A,
            "D" if rank >= 4 => DynkinKind::D,
            "E" if (6..=8).contains(&rank) => DynkinKind::E,
            _ => return None,
        };
        Some(Self { kind, rank })
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank)
    }
}

impl Serialize for RootType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramClass {
    /// Negative definite, ADE shape.
    Finite(RootType),
    /// Negative semidefinite with a one-dimensional kernel spanned by a
    /// positive vector, affine ADE shape.
    Affine(RootType),
    /// Negative definite but not a (-2)-curve ADE graph.
    NegativeDefinite,
    /// Negative semidefinite, not of affine ADE type.
    Semidefinite,
    Indefinite,
    /// One verdict per connected component.
    Disjoint(Vec<(Vec<usize>, DiagramClass)>),
}

impl DiagramClass {
    pub fn affine_type(&self) -> Option<RootType> {
        match self {
            DiagramClass::Affine(t) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramClass::Finite(t) => write!(f, "finite {t}"),
            DiagramClass::Affine(t) => write!(f, "affine {}", t.affine_name()),
            DiagramClass::NegativeDefinite => f.write_str("negative definite"),
            DiagramClass::Semidefinite => f.write_str("negative semidefinite"),
            DiagramClass::Indefinite => f.write_str("indefinite"),
            DiagramClass::Disjoint(parts) => {
                f.write_str("disjoint [")?;
                for (k, (_, c)) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl Serialize for DiagramClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Finite(RootType),
    Affine(RootType),
}

/// Graph-shape recognition for connected (-2)-configurations.
fn shape(d: &CurveDiagram) -> Option<Shape> {
    let n = d.len();
    if n == 0 || d.vertices.iter().any(|v| v.self_intersection != -2) {
        return None;
    }
    if n == 2 && d.edges.len() == 1 && d.edges[0].intersection == 2 {
        return Some(Shape::Affine(RootType::new(DynkinKind::A, 1)));
    }
    if d.edges.iter().any(|e| e.intersection != 1) {
        return None;
    }
    let deg: Vec<usize> = (0..n).map(|v| d.degree(v)).collect();
    let m = d.edges.len();
    if m == n && n >= 3 && deg.iter().all(|&k| k == 2) {
        return Some(Shape::Affine(RootType::new(DynkinKind::A, n - 1)));
    }
    if m + 1 != n {
        return None;
    }
    let branches: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branches.as_slice() {
        [] => Some(Shape::Finite(RootType::new(DynkinKind::A, n))),
        [c] if deg[*c] == 4 => (n == 5).then_some(Shape::Affine(RootType::new(DynkinKind::D, 4))),
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = d.neighbors(*c).into_iter().map(|w| arm_length(d, *c, w)).collect();
            arms.sort_unstable();
            let t = |k, r| RootType::new(k, r);
            match arms.as_slice() {
                [1, 1, k] => Some(Shape::Finite(t(DynkinKind::D, k + 3))),
                [1, 2, 2] => Some(Shape::Finite(t(DynkinKind::E, 6))),
                [1, 2, 3] => Some(Shape::Finite(t(DynkinKind::E, 7))),
                [1, 2, 4] => Some(Shape::Finite(t(DynkinKind::E, 8))),
                [2, 2, 2] => Some(Shape::Affine(t(DynkinKind::E, 6))),
                [1, 3, 3] => Some(Shape::Affine(t(DynkinKind::E, 7))),
                [1, 2, 5] => Some(Shape::Affine(t(DynkinKind::E, 8))),
                _ => None,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |c: usize| d.neighbors(c).into_iter().filter(|&w| deg[w] == 1).count();
            (leaves(*a) >= 2 && leaves(*b) >= 2 && n >= 6).then_some(Shape::Affine(RootType::new(DynkinKind::D, n - 1)))
        }
        _ => None,
    }
}

/// Vertices on the arm starting at `first` away from `center`; the arm is
/// assumed to be a path.
fn arm_length(d: &CurveDiagram, center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    loop {
        let next: Vec<usize> = d.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

fn classify_connected(d: &CurveDiagram) -> DiagramClass {
    let g = gram_of(d);
    let sig = linalg::signature(&g).expect("Gram is symmetric");
    let sh = shape(d);
    if sig.is_negative_definite() {
        return match sh {
            Some(Shape::Finite(t)) => DiagramClass::Finite(t),
            _ => DiagramClass::NegativeDefinite,
        };
    }
    if sig.is_negative_semidefinite() {
        if sig.zero == 1 {
            let ker = linalg::kernel_basis(&g);
            let k = &ker[0];
            let positive = k.iter().all(|x| x.is_positive()) || k.iter().all(|x| x.is_negative());
            if let (true, Some(Shape::Affine(t))) = (positive, sh) {
                return DiagramClass::Affine(t);
            }
        }
        return DiagramClass::Semidefinite;
    }
    DiagramClass::Indefinite
}

/// Spectral verdict with ADE labels read from the graph shape. A
/// disconnected input is classified per component.
pub fn classify(d: &CurveDiagram) -> DiagramClass {
    let comps = d.components();
    if comps.len() <= 1 {
        return classify_connected(d);
    }
    DiagramClass::Disjoint(comps.into_iter().map(|c| {
        let cls = classify_connected(&d.induced(&c));
        (c, cls)
    }).collect())
}

/// Fiber multiplicities: the primitive positive kernel generator of an
/// affine diagram.
pub fn multiplicities(d: &CurveDiagram) -> Result<Vec<u64>, DiagramError> {
    let cls = classify(d);
    if cls.affine_type().is_none() {
        return Err(DiagramError::NotAffine(cls));
    }
    let k = linalg::kernel_basis(&gram_of(d)).remove(0);
    let sign = BigInt::from(if k[0].is_negative() { -1 } else { 1 });
    Ok(k.iter().map(|x| (x * &sign).to_u64().expect("positive multiplicity")).collect())
}

/// `2 * #curves - #distinct intersection points`.
pub fn euler_number(d: &CurveDiagram) -> Result<i64, DiagramError> {
    if !d.is_connected() {
        return Err(DiagramError::Disconnected);
    }
    Ok(2 * d.len() as i64 - d.edges.iter().map(|e| e.points).sum::<i64>())
}

/// A connected affine subdiagram given by sorted vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AffineSubdiagram {
    pub vertices: Vec<usize>,
    #[serde(rename = "type", serialize_with = "affine_name")]
    pub kind: RootType,
}

fn affine_name<S: Serializer>(t: &RootType, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&t.affine_name())
}

impl AffineSubdiagram {
    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | (1 << v))
    }
}

fn connected_mask(adj: &[u64], mask: u64) -> bool {
    let start = mask & mask.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Every vertex subset inducing a connected affine diagram, sorted by
/// vertex tuple.
pub fn enumerate_affine_subdiagrams(d: &CurveDiagram) -> Result<Vec<AffineSubdiagram>, DiagramError> {
    let n = d.len();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(DiagramError::TooLarge(n));
    }
    let adj = d.adjacency_masks();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() < 2 || !connected_mask(&adj, mask) {
            continue;
        }
        let vs = mask_vertices(mask);
        let sub = d.induced(&vs);
        if !matches!(shape(&sub), Some(Shape::Affine(_))) {
            continue;
        }
        if let DiagramClass::Affine(t) = classify_connected(&sub) {
            out.push(AffineSubdiagram { vertices: vs, kind: t });
        }
    }
    out.sort();
    Ok(out)
}

/// Pairwise disjoint, mutually non-adjacent connected affine subdiagrams.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FibrationConfig {
    pub components: Vec<AffineSubdiagram>,
    pub total_rank: usize,
}

impl FibrationConfig {
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.components.iter().flat_map(|c| c.vertices.iter().copied()).collect()
    }

    pub fn contains_type(&self, t: RootType) -> bool {
        self.components.iter().any(|c| c.kind == t)
    }

    /// Sum of component types, e.g. `E~7 + A~1`.
    pub fn label(&self) -> String {
        self.components.iter().map(|c| c.kind.affine_name()).collect::<Vec<_>>().join(" + ")
    }
}

/// All configurations of total rank `rank` built from `affine`.
pub fn configs_of_rank(d: &CurveDiagram, affine: &[AffineSubdiagram], rank: usize) -> Vec<FibrationConfig> {
    let adj = d.adjacency_masks();
    let closed: Vec<u64> = affine
        .iter()
        .map(|a| {
            let m = a.mask();
            mask_vertices(m).into_iter().fold(m, |acc, v| acc | adj[v])
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        start: usize,
        used: u64,
        left: usize,
        affine: &[AffineSubdiagram],
        closed: &[u64],
        chosen: &mut Vec<usize>,
        out: &mut Vec<FibrationConfig>,
    ) {
        if left == 0 {
            let components: Vec<AffineSubdiagram> = chosen.iter().map(|&k| affine[k].clone()).collect();
            let total_rank = components.iter().map(|c| c.rank()).sum();
            out.push(FibrationConfig { components, total_rank });
            return;
        }
        for k in start..affine.len() {
            let a = &affine[k];
            if a.rank() <= left && closed[k] & used == 0 {
                chosen.push(k);
                go(k + 1, used | a.mask(), left - a.rank(), affine, closed, chosen, out);
                chosen.pop();
            }
        }
    }
    go(0, 0, rank, affine, &closed, &mut chosen, &mut out);
    out
}

/// Configurations of total rank 8: the genus one fibrations of a
/// crystallographic diagram.
pub fn fibration_configs(d: &CurveDiagram) -> Result<Vec<FibrationConfig>, DiagramError> {
    let affine = enumerate_affine_subdiagrams(d)?;
    Ok(configs_of_rank(d, &affine, FIBRATION_RANK))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VinbergReport {
    pub pass: bool,
    pub affine_subdiagrams: usize,
    pub configs: usize,
    /// First affine subdiagram not contained in a component of any rank-8
    /// configuration.
    pub witness: Option<AffineSubdiagram>,
}

/// Every connected affine subdiagram must lie inside a single component of
/// some rank-8 configuration.
pub fn vinberg_check(d: &CurveDiagram) -> Result<VinbergReport, DiagramError> {
    let affine = enumerate_affine_subdiagrams(d)?;
    let configs = configs_of_rank(d, &affine, FIBRATION_RANK);
    let witness = affine
        .iter()
        .find(|a| {
            let m = a.mask();
            !configs.iter().any(|c| c.components.iter().any(|comp| m & !comp.mask() == 0))
        })
        .cloned();
    Ok(VinbergReport { pass: witness.is_none(), affine_subdiagrams: affine.len(), configs: configs.len(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::signature;
    use proptest::prelude::*;

    fn ty(k: DynkinKind, r: usize) -> RootType {
        RootType::new(k, r)
    }

    #[test]
    fn gram_examples() {
        let one = CurveDiagram::numbered("R", 1);
        assert_eq!(gram_of(&one), IntMatrix::from_i64(1, 1, &[-2]).unwrap());
        let a1 = catalog::fiber(ty(DynkinKind::A, 1));
        assert_eq!(gram_of(&a1), IntMatrix::from_i64(2, 2, &[-2, 2, 2, -2]).unwrap());
        let g = gram_of(&catalog::d1());
        assert_eq!((g.rows(), g.cols()), (10, 10));
        assert!(g.is_symmetric());
    }

    #[test]
    fn edge_validation() {
        let mut d = CurveDiagram::numbered("R", 3);
        assert_eq!(d.add_edge(0, 0, 1, 1), Err(DiagramError::SelfLoop(0)));
        assert_eq!(d.add_edge(0, 5, 1, 1), Err(DiagramError::BadIndex(5)));
        assert_eq!(d.add_edge(0, 1, 0, 0), Err(DiagramError::NonPositive(0, 1)));
        assert_eq!(d.add_edge(0, 1, 1, 2), Err(DiagramError::TooManyPoints(0, 1)));
        d.add_edge(1, 0, 1, 1).unwrap();
        assert_eq!(d.add_edge(0, 1, 1, 1), Err(DiagramError::DuplicateEdge(0, 1)));
        assert_eq!(d.edges()[0].i, 0);
    }

    #[test]
    fn classify_examples() {
        let e8t = CurveDiagram::numbered("R", 9)
            .with_edges(&[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (2, 8, 1)])
            .unwrap();
        assert_eq!(classify(&e8t), DiagramClass::Affine(ty(DynkinKind::E, 8)));
        let cyc = catalog::fiber(ty(DynkinKind::A, 8));
        assert_eq!(cyc.len(), 9);
        assert_eq!(classify(&cyc), DiagramClass::Affine(ty(DynkinKind::A, 8)));
        let p2 = CurveDiagram::numbered("R", 2).with_edges(&[(0, 1, 1)]).unwrap();
        assert_eq!(classify(&p2), DiagramClass::Finite(ty(DynkinKind::A, 2)));
        assert_eq!(classify(&catalog::d1()), DiagramClass::Indefinite);
    }

    #[test]
    fn classify_finite_families() {
        let d5 = CurveDiagram::numbered("R", 5).with_edges(&[(0, 1, 1), (1, 2, 1), (2, 3, 1), (2, 4, 1)]).unwrap();
        assert_eq!(classify(&d5), DiagramClass::Finite(ty(DynkinKind::D, 5)));
        let e6 = CurveDiagram::numbered("R", 6).with_edges(&[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1)]).unwrap();
        assert_eq!(classify(&e6), DiagramClass::Finite(ty(DynkinKind::E, 6)));
        let t245 = CurveDiagram::numbered("R", 10)
            .with_edges(&[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (7, 8, 1), (2, 9, 1)])
            .unwrap();
        assert_eq!(classify(&t245), DiagramClass::Indefinite);
    }

    #[test]
    fn classify_disjoint_and_odd_curves() {
        let d = CurveDiagram::numbered("R", 3).with_edges(&[(0, 1, 2)]).unwrap();
        match classify(&d) {
            DiagramClass::Disjoint(parts) => {
                assert_eq!(parts[0], (vec![0, 1], DiagramClass::Affine(ty(DynkinKind::A, 1))));
                assert_eq!(parts[1], (vec![2], DiagramClass::Finite(ty(DynkinKind::A, 1))));
            }
            other => panic!("{other}"),
        }
        let mut minus3 = CurveDiagram::default();
        minus3.add_vertex("X", -3);
        assert_eq!(classify(&minus3), DiagramClass::NegativeDefinite);
        let mut triple = CurveDiagram::numbered("R", 2);
        triple.add_edge(0, 1, 3, 3).unwrap();
        assert_eq!(classify(&triple), DiagramClass::Indefinite);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicities(&catalog::fiber(ty(DynkinKind::A, 5))).unwrap(), vec![1; 6]);
        let d4 = catalog::fiber(ty(DynkinKind::D, 4));
        let m = multiplicities(&d4).unwrap();
        assert_eq!(m.iter().filter(|&&x| x == 2).count(), 1);
        assert_eq!(m.iter().filter(|&&x| x == 1).count(), 4);
        let e8 = catalog::fiber(ty(DynkinKind::E, 8));
        assert_eq!(multiplicities(&e8).unwrap().into_iter().max(), Some(6));
        assert!(matches!(
            multiplicities(&CurveDiagram::numbered("R", 2).with_edges(&[(0, 1, 1)]).unwrap()),
            Err(DiagramError::NotAffine(_))
        ));
    }

    #[test]
    fn multiplicities_match_a_hand_solved_e8_kernel() {
        // chain 0..7 with the leaf 8 on node 2: the highest-root pattern
        let e8 = catalog::fiber(ty(DynkinKind::E, 8));
        assert_eq!(multiplicities(&e8).unwrap(), vec![2, 4, 6, 5, 4, 3, 2, 1, 3]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(&catalog::fiber(ty(DynkinKind::E, 8))).unwrap(), 10);
        assert_eq!(euler_number(&catalog::fiber(ty(DynkinKind::A, 1))).unwrap(), 2);
        assert_eq!(euler_number(&catalog::fiber(ty(DynkinKind::D, 4))).unwrap(), 6);
        let mut tangent = CurveDiagram::numbered("R", 2);
        tangent.add_edge(0, 1, 2, 1).unwrap();
        assert_eq!(euler_number(&tangent).unwrap(), 3);
    }

    #[test]
    fn euler_numbers_of_all_fiber_types() {
        for t in catalog::fiber_types() {
            let d = catalog::fiber(t);
            let expected = match t.kind {
                DynkinKind::A => t.rank + 1,
                DynkinKind::D => t.rank + 2,
                DynkinKind::E => t.rank + 2,
            };
            assert_eq!(euler_number(&d).unwrap(), expected as i64, "{t}");
            let cyclic = d.edges().len() == d.len() || t.rank == 1;
            assert_eq!(expected, d.len() + usize::from(!cyclic), "{t}");
        }
    }

    #[test]
    fn classify_agrees_with_spectrum_on_the_catalog() {
        for name in catalog::names() {
            let d = catalog::by_name(&name).unwrap();
            let check = |d: &CurveDiagram, cls: &DiagramClass| {
                let sig = signature(&gram_of(d)).unwrap();
                match cls {
                    DiagramClass::Finite(_) => assert!(sig.is_negative_definite(), "{name}"),
                    DiagramClass::Affine(_) => {
                        assert!(sig.is_negative_semidefinite() && sig.zero == 1, "{name}");
                        assert!(multiplicities(d).unwrap().iter().all(|&m| m > 0));
                    }
                    DiagramClass::Indefinite => assert!(sig.positive > 0, "{name}"),
                    other => panic!("{name}: unexpected {other}"),
                }
            };
            let cls = classify(&d);
            check(&d, &cls);
            if let Some(t) = RootType::parse_affine(&name) {
                assert_eq!(cls, DiagramClass::Affine(t));
            }
        }
    }

    #[test]
    fn multiplicities_are_in_the_kernel() {
        for t in catalog::fiber_types() {
            let d = catalog::fiber(t);
            let m: Vec<BigInt> = multiplicities(&d).unwrap().into_iter().map(BigInt::from).collect();
            assert!(gram_of(&d).mul_vec(&m).unwrap().iter().all(|x| x == &BigInt::from(0)));
        }
    }

    #[test]
    fn affine_subdiagrams_of_the_e8_special_diagram() {
        let d = catalog::e8_special();
        let aff = enumerate_affine_subdiagrams(&d).unwrap();
        assert_eq!(aff, vec![AffineSubdiagram { vertices: (0..9).collect(), kind: ty(DynkinKind::E, 8) }]);
        assert!(enumerate_affine_subdiagrams(&CurveDiagram::numbered("R", 1)).unwrap().is_empty());
    }

    #[test]
    fn affine_subdiagrams_of_e7a1_variant_one() {
        let d = catalog::e7a1_special(true);
        let aff = enumerate_affine_subdiagrams(&d).unwrap();
        let idx = |l: &str| d.index_of(l).unwrap();
        let mut e7: Vec<usize> = (1..=8).map(|i| idx(&format!("R{i}"))).collect();
        e7.sort();
        let mut a1 = vec![idx("R9"), idx("R10")];
        a1.sort();
        assert!(aff.contains(&AffineSubdiagram { vertices: e7, kind: ty(DynkinKind::E, 7) }));
        assert!(aff.contains(&AffineSubdiagram { vertices: a1, kind: ty(DynkinKind::A, 1) }));
        assert_eq!(aff.iter().filter(|a| a.kind == ty(DynkinKind::E, 8)).count(), 2);
    }

    #[test]
    fn fibration_counts() {
        let e8 = ty(DynkinKind::E, 8);
        assert_eq!(fibration_configs(&catalog::e8_special()).unwrap().len(), 1);
        let v1 = fibration_configs(&catalog::e7a1_special(true)).unwrap();
        assert_eq!(v1.iter().filter(|c| c.contains_type(e8)).count(), 2);
        let v2 = fibration_configs(&catalog::e7a1_special(false)).unwrap();
        assert_eq!(v2.iter().filter(|c| c.contains_type(e8)).count(), 1);
        assert!(v2.iter().any(|c| c.label() == "E~7 + A~1"));
        let r1 = fibration_configs(&catalog::remark_reject(1)).unwrap();
        assert!(r1.iter().any(|c| c.label() == "D~4 + D~4"));
        let r2 = fibration_configs(&catalog::remark_reject(2)).unwrap();
        assert!(r2.iter().any(|c| c.label() == "E~6 + A~2"));
    }

    #[test]
    fn configs_are_semidefinite_with_one_kernel_vector_per_component() {
        for name in ["e8-special", "d8-special", "e7a1-special-1", "e7a1-special-2", "d1", "d2", "remark-reject-1", "remark-reject-2"] {
            let d = catalog::by_name(name).unwrap();
            for c in fibration_configs(&d).unwrap() {
                let vs: Vec<usize> = c.vertices().into_iter().collect();
                let sig = signature(&gram_of(&d.induced(&vs))).unwrap();
                assert!(sig.is_negative_semidefinite(), "{name}");
                assert_eq!(sig.zero, c.components.len(), "{name}");
                assert_eq!(c.total_rank, FIBRATION_RANK);
            }
        }
    }

    #[test]
    fn vinberg_examples() {
        for name in ["e8-special", "d8-special", "e7a1-special-1", "e7a1-special-2"] {
            assert!(vinberg_check(&catalog::by_name(name).unwrap()).unwrap().pass, "{name}");
        }
        let lonely = CurveDiagram::numbered("R", 3).with_edges(&[(0, 1, 2)]).unwrap();
        let rep = vinberg_check(&lonely).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.witness, Some(AffineSubdiagram { vertices: vec![0, 1], kind: ty(DynkinKind::A, 1) }));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn subdiagram_enumeration_is_canonical(perm_seed in 0u64..1000) {
            // relabelling vertices permutes the result but keeps its size and types
            let d = catalog::e7a1_special(true);
            let n = d.len();
            let mut order: Vec<usize> = (0..n).collect();
            let mut s = perm_seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            let p = d.induced(&order);
            let a = enumerate_affine_subdiagrams(&d).unwrap();
            let b = enumerate_affine_subdiagrams(&p).unwrap();
            let mut ta: Vec<RootType> = a.iter().map(|x| x.kind).collect();
            let mut tb: Vec<RootType> = b.iter().map(|x| x.kind).collect();
            ta.sort();
            tb.sort();
            prop_assert_eq!(ta, tb);
            let mut sorted = b.clone();
            sorted.sort();
            prop_assert_eq!(sorted, b);
        }
    }
}
