//! Divisor classes on blow-ups of `P1 x P1` at ordinary and infinitely near
//! points, and class-level arithmetic of double covers.
//!
//! A class is `a f1 + b f2 - sum c_p E_p` where `f1, f2` are the two rulings
//! and `E_p` is the total transform of the exceptional curve over `p`.
//! The intersection form is `f1.f2 = 1`, `f_i^2 = 0`, `E_p.E_q = -delta_pq`.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("point {0:?} already blown up")]
    DuplicatePoint(String),
    #[error("classes live on surfaces with {0} and {1} blown-up points")]
    SurfaceMismatch(usize, usize),
    #[error("negative multiplicity at {0:?}")]
    NegativeMultiplicity(String),
    #[error("branch component with odd self-intersection {0}")]
    OddBranchComponent(i64),
    #[error("bidegree ({0}, {1}) has a negative entry")]
    NegativeBidegree(i64, i64),
}

/// Blown-up points in blow-up order; a point with a parent is infinitely
/// near to it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointTree {
    ids: Vec<String>,
    parents: Vec<Option<usize>>,
    index: HashMap<String, usize>,
}

impl PointTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, id: &str, parent: Option<&str>) -> Result<usize, BlowupError> {
        if self.index.contains_key(id) {
            return Err(BlowupError::DuplicatePoint(id.to_string()));
        }
        let parent = parent.map(|p| self.position(p)).transpose()?;
        let k = self.ids.len();
        self.ids.push(id.to_string());
        self.parents.push(parent);
        self.index.insert(id.to_string(), k);
        Ok(k)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn parent(&self, k: usize) -> Option<usize> {
        self.parents[k]
    }

    pub fn position(&self, id: &str) -> Result<usize, BlowupError> {
        self.index.get(id).copied().ok_or_else(|| BlowupError::UnknownPoint(id.to_string()))
    }

    pub fn children(&self, k: usize) -> Vec<usize> {
        (0..self.len()).filter(|&q| self.parents[q] == Some(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DivClass {
    pub bidegree: (i64, i64),
    /// `c_p` in `a f1 + b f2 - sum c_p E_p`.
    pub excess: Vec<i64>,
}

impl DivClass {
    pub fn new(bidegree: (i64, i64), excess: Vec<i64>) -> Self {
        Self { bidegree, excess }
    }

    /// Pullback of a class from `P1 x P1`.
    pub fn pullback(tree: &PointTree, bidegree: (i64, i64)) -> Self {
        Self::new(bidegree, vec![0; tree.len()])
    }

    pub fn f1(tree: &PointTree) -> Self {
        Self::pullback(tree, (1, 0))
    }

    pub fn f2(tree: &PointTree) -> Self {
        Self::pullback(tree, (0, 1))
    }

    /// Total transform `E_p` of the exceptional curve over `p`.
    pub fn total_exceptional(tree: &PointTree, id: &str) -> Result<Self, BlowupError> {
        let mut excess = vec![0; tree.len()];
        excess[tree.position(id)?] = -1;
        Ok(Self::new((0, 0), excess))
    }

    /// The same class after blowing up further points it does not meet.
    pub fn extended(&self, tree: &PointTree) -> Self {
        let mut excess = self.excess.clone();
        excess.resize(tree.len(), 0);
        Self::new(self.bidegree, excess)
    }

    pub fn is_zero(&self) -> bool {
        self.bidegree == (0, 0) && self.excess.iter().all(|&c| c == 0)
    }
}

impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, o: &DivClass) -> DivClass {
        assert_eq!(self.excess.len(), o.excess.len(), "classes on different surfaces");
        DivClass::new(
            (self.bidegree.0 + o.bidegree.0, self.bidegree.1 + o.bidegree.1),
            self.excess.iter().zip(&o.excess).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        -1 * self
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, o: &DivClass) -> DivClass {
        self + &(-o)
    }
}

impl Mul<&DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, c: &DivClass) -> DivClass {
        DivClass::new((self * c.bidegree.0, self * c.bidegree.1), c.excess.iter().map(|x| self * x).collect())
    }
}

pub fn pair(c: &DivClass, d: &DivClass) -> Result<i64, BlowupError> {
    if c.excess.len() != d.excess.len() {
        return Err(BlowupError::SurfaceMismatch(c.excess.len(), d.excess.len()));
    }
    let (a1, b1) = c.bidegree;
    let (a2, b2) = d.bidegree;
    Ok(a1 * b2 + a2 * b1 - c.excess.iter().zip(&d.excess).map(|(x, y)| x * y).sum::<i64>())
}

pub fn self_intersection(c: &DivClass) -> i64 {
    pair(c, c).expect("same surface")
}

/// Proper transform of a curve of class `a f1 + b f2` with multiplicity
/// `m_p` at each listed point (at the infinitely near point itself, not
/// accumulated from its descendants).
pub fn proper_transform(
    tree: &PointTree,
    bidegree: (i64, i64),
    multiplicities: &[(&str, i64)],
) -> Result<DivClass, BlowupError> {
    let mut excess = vec![0; tree.len()];
    for &(id, m) in multiplicities {
        if m < 0 {
            return Err(BlowupError::NegativeMultiplicity(id.to_string()));
        }
        excess[tree.position(id)?] += m;
    }
    Ok(DivClass::new(bidegree, excess))
}

/// Proper transform of the exceptional curve over `p`: `E_p` minus the
/// points blown up on it afterwards.
pub fn exceptional_curve(tree: &PointTree, id: &str) -> Result<DivClass, BlowupError> {
    let k = tree.position(id)?;
    let mut excess = vec![0; tree.len()];
    excess[k] = -1;
    for q in tree.children(k) {
        excess[q] = 1;
    }
    Ok(DivClass::new((0, 0), excess))
}

pub fn canonical_class(tree: &PointTree) -> DivClass {
    DivClass::new((-2, -2), vec![-1; tree.len()])
}

/// `(K + C).C / 2 + 1`.
pub fn arithmetic_genus(tree: &PointTree, c: &DivClass) -> Result<i64, BlowupError> {
    let k = canonical_class(tree);
    Ok((pair(&(&k + c), c)?) / 2 + 1)
}

pub fn divisible_by_two(c: &DivClass) -> bool {
    c.bidegree.0 % 2 == 0 && c.bidegree.1 % 2 == 0 && c.excess.iter().all(|x| x % 2 == 0)
}

pub fn half(c: &DivClass) -> Option<DivClass> {
    divisible_by_two(c)
        .then(|| DivClass::new((c.bidegree.0 / 2, c.bidegree.1 / 2), c.excess.iter().map(|x| x / 2).collect()))
}

/// Self-intersection on a double cover: for a branch component `C` the
/// reduced preimage `C~` with `pi^* C = 2 C~` has `C~^2 = C^2 / 2`; any other
/// class pulls back to self-intersection `2 C^2`.
pub fn double_cover_selfint(c: &DivClass, in_branch: bool) -> Result<i64, BlowupError> {
    let s = self_intersection(c);
    if !in_branch {
        return Ok(2 * s);
    }
    if s % 2 != 0 {
        return Err(BlowupError::OddBranchComponent(s));
    }
    Ok(s / 2)
}

/// Arithmetic genus and linear-system dimension of bidegree `(a, b)` curves.
pub fn genus_and_dim(a: i64, b: i64) -> Result<(i64, i64), BlowupError> {
    if a < 0 || b < 0 {
        return Err(BlowupError::NegativeBidegree(a, b));
    }
    Ok(((a - 1) * (b - 1), (a + 1) * (b + 1) - 1))
}
