//! Fixed loci of a tame involution preserving every component of a fiber.
//!
//! The model has three rules: fixed curves are pairwise disjoint, an
//! invariant curve that is not fixed carries exactly two fixed points, and
//! intersection points of components are fixed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::catalog::fiber;
use crate::diagram::{euler_number, CurveDiagram, DiagramError, RootType, MAX_ENUMERATION_VERTICES};
use crate::hyperbolic::e10_basis;
use crate::lattice::roots::DynkinKind;

/// Lefschetz number of a cohomologically trivial involution.
pub const CT_LEFSCHETZ: i64 = 12;

/// Fixed points of an involution on a smooth invariant fiber.
pub const SMOOTH_FIBER_FIXED_POINTS: i64 = 4;

/// Sum of Euler numbers of the singular fibers of a genus one fibration.
pub const FIBER_EULER_BUDGET: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixedLocusError {
    #[error("stars {0} and {1} meet")]
    AdjacentStars(usize, usize),
    #[error("curve {vertex} is not fixed but carries {points} intersection points")]
    Overloaded { vertex: usize, points: i64 },
    #[error("free dot count at curve {0} does not complete it to two fixed points")]
    BadDots(usize),
    #[error("assignment has {got} entries, diagram has {expected} curves")]
    WrongSize { expected: usize, got: usize },
    #[error("unknown fiber name {0:?}")]
    UnknownFiber(String),
    #[error("unknown special fiber kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Marking {
    /// The curve is pointwise fixed.
    Star,
    /// The curve is invariant with two fixed points.
    TwoPoints,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FixedLocusAssignment {
    pub marking: Vec<Marking>,
    /// Isolated fixed points away from other components; 0 on stars.
    pub free_dots: Vec<i64>,
}

impl FixedLocusAssignment {
    pub fn stars(&self) -> Vec<usize> {
        (0..self.marking.len()).filter(|&i| self.marking[i] == Marking::Star).collect()
    }

    /// The unique assignment with the given fixed curves, if legal.
    pub fn from_stars(d: &CurveDiagram, stars: &[usize]) -> Result<Self, FixedLocusError> {
        let n = d.len();
        let mut marking = vec![Marking::TwoPoints; n];
        for &s in stars {
            if s >= n {
                return Err(DiagramError::BadIndex(s).into());
            }
            marking[s] = Marking::Star;
        }
        let free_dots = (0..n)
            .map(|v| if marking[v] == Marking::Star { 0 } else { 2 - d.incident_points(v) })
            .collect();
        let a = Self { marking, free_dots };
        a.validate(d)?;
        Ok(a)
    }

    pub fn validate(&self, d: &CurveDiagram) -> Result<(), FixedLocusError> {
        let n = d.len();
        if self.marking.len() != n || self.free_dots.len() != n {
            return Err(FixedLocusError::WrongSize { expected: n, got: self.marking.len() });
        }
        for e in d.edges() {
            if self.marking[e.i] == Marking::Star && self.marking[e.j] == Marking::Star {
                return Err(FixedLocusError::AdjacentStars(e.i, e.j));
            }
        }
        for v in 0..n {
            match self.marking[v] {
                Marking::Star if self.free_dots[v] != 0 => return Err(FixedLocusError::BadDots(v)),
                Marking::Star => {}
                Marking::TwoPoints => {
                    let points = d.incident_points(v);
                    if points > 2 {
                        return Err(FixedLocusError::Overloaded { vertex: v, points });
                    }
                    if self.free_dots[v] != 2 - points {
                        return Err(FixedLocusError::BadDots(v));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All legal assignments, ordered by their star sets.
pub fn valid_assignments(d: &CurveDiagram) -> Result<Vec<FixedLocusAssignment>, FixedLocusError> {
    let n = d.len();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(DiagramError::TooLarge(n).into());
    }
    let mut out: Vec<(Vec<usize>, FixedLocusAssignment)> = (0u64..(1 << n))
        .filter_map(|mask| {
            let stars: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            FixedLocusAssignment::from_stars(d, &stars).ok().map(|a| (stars, a))
        })
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, a)| a).collect())
}

/// `2 * #stars + #points joining two non-fixed curves + #free dots`.
pub fn euler_of(a: &FixedLocusAssignment, d: &CurveDiagram) -> Result<i64, FixedLocusError> {
    a.validate(d)?;
    let stars = a.marking.iter().filter(|&&m| m == Marking::Star).count() as i64;
    let joints: i64 = d
        .edges()
        .iter()
        .filter(|e| a.marking[e.i] == Marking::TwoPoints && a.marking[e.j] == Marking::TwoPoints)
        .map(|e| e.points)
        .sum();
    Ok(2 * stars + joints + a.free_dots.iter().sum::<i64>())
}

/// A fixed-locus picture: fiber type, drawn Euler value and fixed curves in
/// the numbering of [`catalog::fiber`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Picture {
    pub fiber: &'static str,
    pub euler: i64,
    pub stars: &'static [usize],
}

const fn pic(fiber: &'static str, euler: i64, stars: &'static [usize]) -> Picture {
    Picture { fiber, euler, stars }
}

/// Every drawn fixed-locus picture.
pub const PICTURES: [Picture; 23] = [
    pic("E~8", 10, &[0, 2, 4, 6]),
    pic("D~8", 10, &[1, 3, 5]),
    pic("A~8", 9, &[1, 3, 5, 8]),
    pic("A~8", 9, &[]),
    pic("E~7", 9, &[1, 3, 5]),
    pic("D~7", 9, &[1, 4]),
    pic("A~7", 8, &[1, 3, 5, 7]),
    pic("A~7", 8, &[]),
    pic("E~6", 8, &[0, 2, 4, 6]),
    pic("D~6", 8, &[1, 3]),
    pic("A~6", 7, &[1, 4, 6]),
    pic("A~6", 7, &[]),
    pic("A~5", 6, &[1, 3, 5]),
    pic("A~5", 6, &[]),
    pic("D~4", 6, &[1]),
    pic("A~4", 5, &[1, 4]),
    pic("A~4", 5, &[]),
    pic("A~3", 4, &[1, 3]),
    pic("A~3", 4, &[]),
    pic("A~2", 3, &[0]),
    pic("A~2", 3, &[]),
    pic("A~1", 2, &[0]),
    pic("A~1", 2, &[]),
];

/// The table rows as typeset: one Euler value per row, side-by-side
/// pictures sharing a row.
pub const TABLE_ROWS: [(&str, i64); 19] = [
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

/// The fiber type with no legal fixed locus.
pub const MISSING_TYPE: &str = "D~5";

/// The fifteen pictured fiber types in table order.
pub fn pictured_types() -> Vec<&'static str> {
    let mut seen = Vec::new();
    for (f, _) in TABLE_ROWS {
        if !seen.contains(&f) {
            seen.push(f);
        }
    }
    seen
}

fn resolve_fiber(name: &str) -> Result<CurveDiagram, FixedLocusError> {
    RootType::parse_affine(name)
        .map(fiber)
        .ok_or_else(|| FixedLocusError::UnknownFiber(name.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma43Report {
    pub fiber: String,
    pub euler_number: i64,
    pub assignments: usize,
    /// Distinct `euler_of` values over all assignments.
    pub values: BTreeSet<i64>,
    /// Star counts occurring among assignments.
    pub star_counts: BTreeSet<usize>,
    pub pictured: usize,
    pub pictured_valid: bool,
    /// `true` when the type is expected to admit no assignment.
    pub expect_empty: bool,
    pub pass: bool,
}

/// Checks `e(F^sigma) = e(F)` over every legal assignment of an affine fiber
/// type; pictured types must be nonempty, with each picture legal and of
/// the drawn value, and `D~5` must be empty.
pub fn lemma43_verify(name: &str) -> Result<Lemma43Report, FixedLocusError> {
    let d = resolve_fiber(name)?;
    let e = euler_number(&d)?;
    let all = valid_assignments(&d)?;
    let mut values = BTreeSet::new();
    let mut star_counts = BTreeSet::new();
    for a in &all {
        values.insert(euler_of(a, &d)?);
        star_counts.insert(a.stars().len());
    }
    let pictures: Vec<&Picture> = PICTURES.iter().filter(|p| p.fiber == name).collect();
    let pictured_valid = pictures.iter().all(|p| {
        FixedLocusAssignment::from_stars(&d, p.stars)
            .and_then(|a| euler_of(&a, &d))
            .is_ok_and(|v| v == p.euler)
    });
    let expect_empty = name == MISSING_TYPE;
    let pass = if expect_empty {
        all.is_empty()
    } else {
        values.iter().all(|&v| v == e) && (pictures.is_empty() || (!all.is_empty() && pictured_valid))
    };
    Ok(Lemma43Report {
        fiber: name.to_string(),
        euler_number: e,
        assignments: all.len(),
        values,
        star_counts,
        pictured: pictures.len(),
        pictured_valid,
        expect_empty,
        pass,
    })
}

/// Singular fibers whose components are not all smooth rational curves
/// meeting transversally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecialFiberKind {
    IV,
    III,
    II,
    I1,
}

impl SpecialFiberKind {
    pub const ALL: [SpecialFiberKind; 4] = [Self::IV, Self::III, Self::II, Self::I1];

    pub fn fixed_points(self) -> i64 {
        match self {
            Self::IV => 4,
            Self::III => 3,
            Self::II => 2,
            Self::I1 => 1,
        }
    }

    pub fn euler(self) -> i64 {
        self.fixed_points()
    }
}

impl fmt::Display for SpecialFiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::IV => "IV",
            Self::III => "III",
            Self::II => "II",
            Self::I1 => "I1",
        })
    }
}

impl FromStr for SpecialFiberKind {
    type Err = FixedLocusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| FixedLocusError::UnknownKind(s.to_string()))
    }
}

impl Serialize for SpecialFiberKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn special_fixed_points(kind: &str) -> Result<i64, FixedLocusError> {
    Ok(kind.parse::<SpecialFiberKind>()?.fixed_points())
}

/// Possible `e(F^sigma)` values of an invariant fiber given by name:
/// `smooth`, a special kind, or an affine type.
pub fn fixed_locus_values(name: &str) -> Result<BTreeSet<i64>, FixedLocusError> {
    if name == "smooth" {
        return Ok(BTreeSet::from([SMOOTH_FIBER_FIXED_POINTS]));
    }
    if let Ok(k) = name.parse::<SpecialFiberKind>() {
        return Ok(BTreeSet::from([k.fixed_points()]));
    }
    let d = resolve_fiber(name)?;
    valid_assignments(&d)?.iter().map(|a| euler_of(a, &d)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetReport {
    pub fibers: [String; 2],
    pub values: [BTreeSet<i64>; 2],
    /// Value pairs summing to the Lefschetz number 12.
    pub witnesses: Vec<(i64, i64)>,
    pub achievable: bool,
}

/// Whether two invariant fibers can carry the whole fixed locus of a
/// cohomologically trivial involution.
pub fn ct_budget_check(first: &str, second: &str) -> Result<BudgetReport, FixedLocusError> {
    let values = [fixed_locus_values(first)?, fixed_locus_values(second)?];
    let witnesses: Vec<(i64, i64)> = values[0]
        .iter()
        .flat_map(|&a| values[1].iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a + b == CT_LEFSCHETZ)
        .collect();
    Ok(BudgetReport {
        fibers: [first.to_string(), second.to_string()],
        achievable: !witnesses.is_empty(),
        values,
        witnesses,
    })
}

/// An invariant half-fiber in characteristic not 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HalfFiber {
    Smooth,
    /// A cycle of `n` smooth rational curves (`n = 1` is a nodal curve).
    Cycle(usize),
}

impl HalfFiber {
    pub fn fixed_locus_euler(self) -> i64 {
        match self {
            HalfFiber::Smooth => SMOOTH_FIBER_FIXED_POINTS,
            HalfFiber::Cycle(n) => n as i64,
        }
    }
}

impl fmt::Display for HalfFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfFiber::Smooth => f.write_str("smooth"),
            HalfFiber::Cycle(n) => write!(f, "cycle-{n}"),
        }
    }
}

impl Serialize for HalfFiber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "constraint", rename_all = "kebab-case")]
pub enum Obstruction {
    /// Components of both half-fibers span a negative definite lattice of
    /// rank `c1 + c2 - 1`, exceeding `bound`.
    RankBound { rank: usize, bound: usize },
    /// Euler numbers of the quotient fibration's singular fibers do not add
    /// up to 12.
    QuotientEuler { fibers: Vec<String>, total: i64, budget: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub pair: (HalfFiber, HalfFiber),
    pub fixed_locus_total: i64,
    pub killed_by: Option<Obstruction>,
}

/// Candidates for the two invariant half-fibers of a cohomologically trivial
/// involution acting nontrivially on the base, `p != 2`.
///
/// Pairs with fixed-locus total 12 are annotated with the constraint that
/// rules them out; `None` would be a survivor.
pub fn theorem44_search() -> Vec<Candidate> {
    let mut sides = vec![HalfFiber::Smooth];
    sides.extend((1..=CT_LEFSCHETZ as usize).map(HalfFiber::Cycle));
    let rank_bound = e10_basis().len() - 1;
    let mut out = Vec::new();
    for (i, &a) in sides.iter().enumerate() {
        for &b in &sides[i..] {
            let total = a.fixed_locus_euler() + b.fixed_locus_euler();
            if total != CT_LEFSCHETZ {
                continue;
            }
            let killed_by = match (a, b) {
                (HalfFiber::Cycle(c1), HalfFiber::Cycle(c2)) => {
                    let rank = c1 + c2 - 1;
                    (rank > rank_bound).then_some(Obstruction::RankBound { rank, bound: rank_bound })
                }
                (HalfFiber::Smooth, HalfFiber::Cycle(c)) | (HalfFiber::Cycle(c), HalfFiber::Smooth) => {
                    quotient_obstruction(c)
                }
                (HalfFiber::Smooth, HalfFiber::Smooth) => None,
            };
            out.push(Candidate { pair: (a, b), fixed_locus_total: total, killed_by });
        }
    }
    out
}

/// On the quotient the smooth half-fiber with its four fixed points becomes
/// a `D~4` fiber and the `c`-cycle an `A~(c-1)` fiber.
fn quotient_obstruction(c: usize) -> Option<Obstruction> {
    let d4 = fiber(RootType::new(DynkinKind::D, 4));
    let cyc = fiber(RootType::new(DynkinKind::A, c.checked_sub(1).filter(|&r| r > 0)?));
    let total = euler_number(&d4).ok()? + euler_number(&cyc).ok()?;
    (total != FIBER_EULER_BUDGET).then(|| Obstruction::QuotientEuler {
        fibers: vec!["D~4".into(), RootType::new(DynkinKind::A, c - 1).affine_name()],
        total,
        budget: FIBER_EULER_BUDGET,
    })
}

/// Names accepted by [`ct_budget_check`] besides affine types.
pub fn extra_fiber_names() -> Vec<String> {
    let mut v = vec!["smooth".to_string()];
    v.extend(SpecialFiberKind::ALL.iter().map(|k| k.to_string()));
    v
}
