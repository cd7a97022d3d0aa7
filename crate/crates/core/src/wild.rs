//! Local Lefschetz numbers of wild involutions at an isolated fixed point,
//! for fixed-point ideals generated by monomials in `k[[u, v]]`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WildError {
    #[error("ideal {0} has infinite colength")]
    InfiniteColength(MonomialIdeal2),
    #[error("ideal needs at least one generator")]
    Empty,
}

/// A monomial ideal of `k[[u, v]]`, stored by its minimal generators
/// `u^a v^b` as exponent pairs `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal2 {
    generators: Vec<(u32, u32)>,
}

fn divides(g: (u32, u32), h: (u32, u32)) -> bool {
    g.0 <= h.0 && g.1 <= h.1
}

impl MonomialIdeal2 {
    pub fn new(generators: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, WildError> {
        let all: BTreeSet<(u32, u32)> = generators.into_iter().collect();
        if all.is_empty() {
            return Err(WildError::Empty);
        }
        let generators = all
            .iter()
            .copied()
            .filter(|&h| !all.iter().any(|&g| g != h && divides(g, h)))
            .collect();
        Ok(Self { generators })
    }

    pub fn unit() -> Self {
        Self { generators: vec![(0, 0)] }
    }

    /// `(u^a, v^b)`.
    pub fn pure_powers(a: u32, b: u32) -> Self {
        Self::new([(a, 0), (0, b)]).expect("nonempty")
    }

    /// Minimal generators sorted by increasing `u`-exponent.
    pub fn generators(&self) -> &[(u32, u32)] {
        &self.generators
    }

    pub fn contains(&self, m: (u32, u32)) -> bool {
        self.generators.iter().any(|&g| divides(g, m))
    }

    fn pure_power_bounds(&self) -> Option<(u32, u32)> {
        let a = self.generators.iter().filter(|g| g.1 == 0).map(|g| g.0).min()?;
        let b = self.generators.iter().filter(|g| g.0 == 0).map(|g| g.1).min()?;
        Some((a, b))
    }
}

impl fmt::Display for MonomialIdeal2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |&(a, b): &(u32, u32)| -> String {
            let part = |x: &str, e: u32| match e {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{e}"),
            };
            let s = format!("{}{}", part("u", a), part("v", b));
            if s.is_empty() { "1".into() } else { s }
        };
        let parts: Vec<String> = self.generators.iter().rev().map(mono).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for MonomialIdeal2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `dim k[[u,v]] / I`: monomials below the staircase.
pub fn colength(i: &MonomialIdeal2) -> Result<u64, WildError> {
    let (a, b) = i.pure_power_bounds().ok_or_else(|| WildError::InfiniteColength(i.clone()))?;
    Ok((0..a).flat_map(|x| (0..b).map(move |y| (x, y))).filter(|&m| !i.contains(m)).count() as u64)
}

pub fn product(i: &MonomialIdeal2, j: &MonomialIdeal2) -> MonomialIdeal2 {
    MonomialIdeal2::new(
        i.generators.iter().flat_map(|g| j.generators.iter().map(move |h| (g.0 + h.0, g.1 + h.1))),
    )
    .expect("product of nonempty ideals")
}

/// Terms of the local Lefschetz number at an isolated fixed point with
/// fixed-point ideal `J`: `dim O/J + dim J/J^2 - 2 dim O/J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WildReport {
    pub colength_j: u64,
    pub dim_j_mod_j2: u64,
    pub omega_term: u64,
    pub lefschetz: i64,
}

pub fn lef_point(j: &MonomialIdeal2) -> Result<WildReport, WildError> {
    let cj = colength(j)?;
    let cj2 = colength(&product(j, j))?;
    let report = WildReport {
        colength_j: cj,
        dim_j_mod_j2: cj2 - cj,
        omega_term: 2 * cj,
        lefschetz: cj as i64 + (cj2 - cj) as i64 - 2 * cj as i64,
    };
    debug_assert_eq!(report.lefschetz, cj2 as i64 - 2 * cj as i64);
    Ok(report)
}

/// `chi(O_Y)` for the quotient `Y` of an Enriques surface by an involution
/// whose fixed scheme `Z` has `chi(O_Z) = chi_z`.
pub fn chi_quotient(chi_z: i64) -> Ratio<i64> {
    Ratio::new(1 + chi_z, 2)
}
