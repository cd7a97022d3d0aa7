//! The odd unimodular lattice `Z^{1,10}`, the vector `k10`, its orthogonal
//! complement `E10`, isotropic sequences and (-2)-reflections.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Lattice, LatticeError, LatticeVector};
use crate::linalg::{self, IntMatrix};

/// Rank of `Z^{1,10}`.
pub const AMBIENT_RANK: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperbolicError {
    #[error("{0} is not a (-2)-vector")]
    NotRoot(LatticeVector),
    #[error("vector {0} is outside the positive cone of the reference")]
    OutsideCone(LatticeVector),
    #[error("reference vector must have positive norm")]
    BadReference,
    #[error("vector {index} of the sequence has norm {norm}, expected 0")]
    NotIsotropic { index: usize, norm: BigInt },
    #[error("vectors {i} and {j} pair to {value}, expected 1")]
    BadPairing { i: usize, j: usize, value: BigInt },
    #[error("isotropic sequences have at most 10 members, got {0}")]
    TooLong(usize),
    #[error("nef indices must be strictly increasing and in range")]
    BadNefIndices,
    #[error("reflection at step {step} did not decrease the reference pairing")]
    NotDecreasing { step: usize },
    #[error("{0} is not in k10-perp")]
    NotInE10(LatticeVector),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `Z^{1,10}` with Gram `diag(1, -1, ..., -1)`.
pub fn z_1_10() -> Lattice {
    let mut d = vec![BigInt::from(-1); AMBIENT_RANK];
    d[0] = BigInt::one();
    Lattice::new(IntMatrix::diagonal(&d)).expect("diagonal is symmetric")
}

/// Standard basis vector `e_i` of `Z^{1,10}`.
pub fn e(i: usize) -> LatticeVector {
    LatticeVector::unit(AMBIENT_RANK, i)
}

/// `k10 = -3 e_0 + e_1 + ... + e_10`.
pub fn k_vector() -> LatticeVector {
    let mut c = vec![1i64; AMBIENT_RANK];
    c[0] = -3;
    LatticeVector::from_i64(&c)
}

/// Root basis of `k10^perp`: `a_0 = e_0 - e_1 - e_2 - e_3` and
/// `a_i = e_i - e_{i+1}` for `i = 1..9`.
///
/// The Dynkin graph is `T(2,3,7)`: `a_1 .. a_9` is a chain and `a_0` hangs
/// on `a_3`.
pub fn e10_basis() -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(10);
    out.push(LatticeVector::from_i64(&[1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0]));
    for i in 1..10 {
        out.push(&e(i) - &e(i + 1));
    }
    out
}

/// `k10^perp` with the Gram matrix of [`e10_basis`].
pub fn e10_lattice() -> Lattice {
    let g = z_1_10().gram_of(&e10_basis()).expect("basis has ambient length");
    Lattice::new(g).expect("Gram is symmetric")
}

/// Coordinates of `v` in [`e10_basis`]; fails unless `v` lies in `k10^perp`.
pub fn e10_coordinates(v: &LatticeVector) -> Result<LatticeVector, HyperbolicError> {
    let l = z_1_10();
    let basis = e10_basis();
    let rhs = basis.iter().map(|b| l.pair(b, v)).collect::<Result<Vec<BigInt>, _>>()?;
    let c = linalg::solve_rational(e10_lattice().gram(), &rhs).expect("E10 is unimodular");
    let coords = LatticeVector(c.iter().map(|x| x.to_integer()).collect());
    let back = basis.iter().zip(coords.coords()).fold(LatticeVector::zero(AMBIENT_RANK), |acc, (b, x)| acc.add_scaled(b, x));
    if &back != v {
        return Err(HyperbolicError::NotInE10(v.clone()));
    }
    Ok(coords)
}

/// The vector pairing to `+1` with every element of [`e10_basis`].
///
/// Equals `(115, -39, -38, ..., -30)`, norm 1240.
pub fn weyl_vector() -> LatticeVector {
    let l = z_1_10();
    let basis = e10_basis();
    let g = l.gram_of(&basis).expect("basis has ambient length");
    let ones = vec![BigInt::one(); basis.len()];
    let coeffs = linalg::solve_rational(&g, &ones).expect("E10 Gram is unimodular");
    let mut rho = LatticeVector::zero(AMBIENT_RANK);
    for (c, b) in coeffs.iter().zip(&basis) {
        assert!(c.is_integer(), "unimodular Gram gives integral solution");
        rho = rho.add_scaled(b, &c.to_integer());
    }
    rho
}

/// Vectors pairwise pairing to 1, all of norm 0, with optional nef markers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropicSequence {
    vectors: Vec<LatticeVector>,
    nef_indices: Option<Vec<usize>>,
}

impl IsotropicSequence {
    pub fn new(
        l: &Lattice,
        vectors: Vec<LatticeVector>,
        nef_indices: Option<Vec<usize>>,
    ) -> Result<Self, HyperbolicError> {
        if vectors.len() > 10 {
            return Err(HyperbolicError::TooLong(vectors.len()));
        }
        check_isotropic(l, &vectors)?;
        if let Some(idx) = &nef_indices {
            if !indices_well_formed(idx, vectors.len()) {
                return Err(HyperbolicError::BadNefIndices);
            }
        }
        Ok(Self { vectors, nef_indices })
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }

    pub fn nef_indices(&self) -> Option<&[usize]> {
        self.nef_indices.as_deref()
    }

    pub fn with_nef_indices(self, l: &Lattice, idx: Vec<usize>) -> Result<Self, HyperbolicError> {
        Self::new(l, self.vectors, Some(idx))
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn check_isotropic(l: &Lattice, vectors: &[LatticeVector]) -> Result<(), HyperbolicError> {
    for (i, v) in vectors.iter().enumerate() {
        let n = l.norm(v)?;
        if !n.is_zero() {
            return Err(HyperbolicError::NotIsotropic { index: i, norm: n });
        }
    }
    for (i, v) in vectors.iter().enumerate() {
        for (j, w) in vectors.iter().enumerate().skip(i + 1) {
            let p = l.pair(v, w)?;
            if !p.is_one() {
                return Err(HyperbolicError::BadPairing { i, j, value: p });
            }
        }
    }
    Ok(())
}

fn indices_well_formed(idx: &[usize], len: usize) -> bool {
    idx.first() == Some(&0) && idx.windows(2).all(|w| w[0] < w[1]) && idx.iter().all(|&i| i < len)
}

/// `f_j = -k10 + e_j`, `j = 1..10`.
pub fn standard_isotropic_sequence() -> IsotropicSequence {
    let k = k_vector();
    let fs = (1..=10).map(|j| &e(j) - &k).collect();
    IsotropicSequence::new(&z_1_10(), fs, None).expect("standard sequence is isotropic")
}

/// Roots applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReflectionWord(pub Vec<LatticeVector>);

impl ReflectionWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, l: &Lattice, x: &LatticeVector) -> Result<LatticeVector, HyperbolicError> {
        self.0.iter().try_fold(x.clone(), |acc, r| reflect_in(l, &acc, r))
    }
}

fn require_root(l: &Lattice, r: &LatticeVector) -> Result<(), HyperbolicError> {
    if l.norm(r)? != BigInt::from(-2) {
        return Err(HyperbolicError::NotRoot(r.clone()));
    }
    Ok(())
}

/// `s_r(x) = x + (x.r) r` in an arbitrary lattice.
pub fn reflect_in(l: &Lattice, x: &LatticeVector, r: &LatticeVector) -> Result<LatticeVector, HyperbolicError> {
    require_root(l, r)?;
    let p = l.pair(x, r)?;
    Ok(x.add_scaled(r, &p))
}

/// [`reflect_in`] on `Z^{1,10}`.
pub fn reflect(x: &LatticeVector, r: &LatticeVector) -> Result<LatticeVector, HyperbolicError> {
    reflect_in(&z_1_10(), x, r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Descent {
    pub vector: LatticeVector,
    pub word: ReflectionWord,
}

/// A hyperbolic lattice with a positive-norm reference class fixing the
/// positive cone.
#[derive(Debug, Clone)]
pub struct HyperbolicSpace {
    lattice: Lattice,
    reference: LatticeVector,
}

impl HyperbolicSpace {
    /// `Z^{1,10}` with [`weyl_vector`] as reference.
    pub fn standard() -> Self {
        Self { lattice: z_1_10(), reference: weyl_vector() }
    }

    pub fn new(lattice: Lattice, reference: LatticeVector) -> Result<Self, HyperbolicError> {
        if !lattice.norm(&reference)?.is_positive() {
            return Err(HyperbolicError::BadReference);
        }
        Ok(Self { lattice, reference })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn reference(&self) -> &LatticeVector {
        &self.reference
    }

    pub fn pair(&self, v: &LatticeVector, w: &LatticeVector) -> Result<BigInt, HyperbolicError> {
        Ok(self.lattice.pair(v, w)?)
    }

    pub fn reflect(&self, x: &LatticeVector, r: &LatticeVector) -> Result<LatticeVector, HyperbolicError> {
        reflect_in(&self.lattice, x, r)
    }

    /// Reflect `v` until it pairs nonnegatively with every root.
    ///
    /// Each step uses the root with the most negative pairing (first in
    /// list order on ties). The pairing with the reference must drop at
    /// every step, which fails only when some used root pairs
    /// nonpositively with the reference.
    pub fn chamber_descent(
        &self,
        v: &LatticeVector,
        roots: &[LatticeVector],
    ) -> Result<Descent, HyperbolicError> {
        let l = &self.lattice;
        for r in roots {
            require_root(l, r)?;
        }
        if l.norm(v)?.is_negative() || !l.pair(v, &self.reference)?.is_positive() {
            return Err(HyperbolicError::OutsideCone(v.clone()));
        }
        let mut cur = v.clone();
        let mut height = l.pair(&cur, &self.reference)?;
        let mut word = Vec::new();
        loop {
            let mut best: Option<(BigInt, usize)> = None;
            for (i, r) in roots.iter().enumerate() {
                let p = l.pair(&cur, r)?;
                if p.is_negative() && best.as_ref().is_none_or(|(b, _)| p < *b) {
                    best = Some((p, i));
                }
            }
            let Some((p, i)) = best else { break };
            cur = cur.add_scaled(&roots[i], &p);
            let h = l.pair(&cur, &self.reference)?;
            if h >= height {
                return Err(HyperbolicError::NotDecreasing { step: word.len() });
            }
            height = h;
            word.push(roots[i].clone());
        }
        Ok(Descent { vector: cur, word: ReflectionWord(word) })
    }
}

/// The clause of the canonical-sequence definition that failed first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum CanonicalViolation {
    /// Nef indices empty, not starting at the first member, unsorted or out of range.
    NefIndices,
    /// A marked member pairs negatively with a root.
    Nef { index: usize, root: usize },
    /// The step `f_j - f_{j-1}` is not one of the supplied roots.
    ChainMembership { index: usize },
    /// Chain roots do not form an `A_s` path.
    ChainShape { index: usize },
    /// `f_{k_i} . R_{i,1} != 1`.
    ChainPairing { index: usize },
    /// Some member has nonzero norm or two members do not pair to 1.
    Isotropy { i: usize, j: usize },
}

/// One chain hanging off a nef member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub nef_index: usize,
    /// Indices into the root list, in chain order.
    pub roots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalReport {
    pub pass: bool,
    /// Number of nef members `c`.
    pub nef_count: usize,
    /// `s_j` per member (0 for nef members).
    pub chain_lengths: Vec<usize>,
    pub chains: Vec<ChainReport>,
    pub violation: Option<CanonicalViolation>,
}

/// Check that `vectors` with the given nef markers is canonical with respect
/// to `roots`: marked members are nef, and every other member is the
/// preceding marked member plus an `A`-chain of roots growing by one root
/// per step, whose first root pairs to 1 with the marked member.
///
/// Pairings between different chains are not constrained.
pub fn canonical_structure_check(
    l: &Lattice,
    vectors: &[LatticeVector],
    nef_indices: &[usize],
    roots: &[LatticeVector],
) -> Result<CanonicalReport, HyperbolicError> {
    for r in roots {
        require_root(l, r)?;
    }
    for v in vectors {
        if v.len() != l.rank() {
            return Err(LatticeError::WrongLength { expected: l.rank(), got: v.len() }.into());
        }
    }
    let mut report = CanonicalReport {
        pass: false,
        nef_count: nef_indices.len(),
        chain_lengths: vec![0; vectors.len()],
        chains: Vec::new(),
        violation: None,
    };
    let fail = |mut rep: CanonicalReport, v| {
        rep.violation = Some(v);
        Ok(rep)
    };
    if !indices_well_formed(nef_indices, vectors.len()) {
        return fail(report, CanonicalViolation::NefIndices);
    }
    for &k in nef_indices {
        for (ri, r) in roots.iter().enumerate() {
            if l.pair(&vectors[k], r)?.is_negative() {
                return fail(report, CanonicalViolation::Nef { index: k, root: ri });
            }
        }
    }
    let one = BigInt::one();
    let mut chain: Vec<usize> = Vec::new();
    let mut anchor = 0usize;
    for j in 0..vectors.len() {
        if nef_indices.contains(&j) {
            if !chain.is_empty() {
                report.chains.push(ChainReport { nef_index: anchor, roots: std::mem::take(&mut chain) });
            }
            anchor = j;
            continue;
        }
        let step = &vectors[j] - &vectors[j - 1];
        let Some(ri) = roots.iter().position(|r| *r == step) else {
            return fail(report, CanonicalViolation::ChainMembership { index: j });
        };
        if chain.contains(&ri) {
            return fail(report, CanonicalViolation::ChainShape { index: j });
        }
        for (pos, &prev) in chain.iter().enumerate() {
            let expected = if pos + 1 == chain.len() { one.clone() } else { BigInt::zero() };
            if l.pair(&roots[prev], &roots[ri])? != expected {
                return fail(report, CanonicalViolation::ChainShape { index: j });
            }
        }
        if chain.is_empty() && l.pair(&vectors[anchor], &roots[ri])? != one {
            return fail(report, CanonicalViolation::ChainPairing { index: j });
        }
        chain.push(ri);
        report.chain_lengths[j] = j - anchor;
    }
    if !chain.is_empty() {
        report.chains.push(ChainReport { nef_index: anchor, roots: chain });
    }
    for (i, v) in vectors.iter().enumerate() {
        if !l.norm(v)?.is_zero() {
            return fail(report, CanonicalViolation::Isotropy { i, j: i });
        }
        for (j, w) in vectors.iter().enumerate().skip(i + 1) {
            if !l.pair(v, w)?.is_one() {
                return fail(report, CanonicalViolation::Isotropy { i, j });
            }
        }
    }
    report.pass = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{profile, sublattice_index};
    use crate::linalg::{det_exact, Signature};
    use proptest::prelude::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    #[test]
    fn k_vector_pairings() {
        let l = z_1_10();
        let k = k_vector();
        assert_eq!(l.norm(&k).unwrap(), BigInt::from(-1));
        assert_eq!(l.pair(&k, &e(0)).unwrap(), BigInt::from(-3));
        assert_eq!(l.pair(&k, &e(1)).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn ambient_profile() {
        // (-1)^10 from the ten negative diagonal entries
        let p = profile(&z_1_10());
        assert_eq!(p.determinant, BigInt::from(1));
        assert!(!p.even && p.unimodular);
        assert_eq!(p.signature, Signature::new(1, 10, 0));
    }

    #[test]
    fn e10_basis_is_complement_of_k() {
        let l = z_1_10();
        let basis = e10_basis();
        for b in &basis {
            assert!(l.pair(b, &k_vector()).unwrap().is_zero());
            assert_eq!(l.norm(b).unwrap(), BigInt::from(-2));
        }
        assert!(basis.contains(&(&e(1) - &e(2))));
        let sub = l.sublattice(&basis).unwrap();
        let p = profile(&sub);
        assert_eq!(p.determinant, BigInt::from(-1));
        assert!(p.even && p.unimodular);
        assert_eq!(p.signature, Signature::new(1, 9, 0));
    }

    #[test]
    fn e10_basis_spans_the_whole_complement() {
        // k10^perp is cut out by 3 x0 + x1 + ... + x10 = 0 in coordinates;
        // a complement vector in the span must have integral coefficients.
        let l = z_1_10();
        let basis = e10_basis();
        let g = l.gram_of(&basis).unwrap();
        for probe in [&e(1) - &e(10), v(&[1, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1]), v(&[2, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0])] {
            assert!(l.pair(&probe, &k_vector()).unwrap().is_zero());
            let rhs: Vec<BigInt> = basis.iter().map(|b| l.pair(b, &probe).unwrap()).collect();
            let c = linalg::solve_rational(&g, &rhs).unwrap();
            assert!(c.iter().all(|x| x.is_integer()));
        }
    }

    #[test]
    fn weyl_vector_values() {
        let l = z_1_10();
        let rho = weyl_vector();
        assert_eq!(rho, v(&[115, -39, -38, -37, -36, -35, -34, -33, -32, -31, -30]));
        assert_eq!(l.norm(&rho).unwrap(), BigInt::from(1240));
        for b in e10_basis() {
            assert!(l.pair(&rho, &b).unwrap().is_one());
        }
    }

    #[test]
    fn standard_sequence() {
        let l = z_1_10();
        let s = standard_isotropic_sequence();
        let f1 = &s.vectors()[0];
        assert_eq!(*f1, v(&[3, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1]));
        assert!(l.norm(f1).unwrap().is_zero());
        assert!(l.pair(f1, &s.vectors()[1]).unwrap().is_one());
        let g = l.gram_of(s.vectors()).unwrap();
        assert_eq!(det_exact(&g).unwrap(), BigInt::from(-9));
        for f in s.vectors() {
            assert!(l.pair(f, &k_vector()).unwrap().is_zero());
        }
    }

    #[test]
    fn standard_sequence_has_index_three_in_e10() {
        let coords: Vec<LatticeVector> =
            standard_isotropic_sequence().vectors().iter().map(|f| e10_coordinates(f).unwrap()).collect();
        assert_eq!(sublattice_index(&e10_lattice(), &coords).unwrap(), BigInt::from(3));
        assert!(matches!(e10_coordinates(&e(1)), Err(HyperbolicError::NotInE10(_))));
    }

    #[test]
    fn sequence_validation() {
        let l = z_1_10();
        let s = standard_isotropic_sequence();
        let mut bad = s.vectors().to_vec();
        bad[1] = e(1);
        assert!(matches!(IsotropicSequence::new(&l, bad, None), Err(HyperbolicError::NotIsotropic { index: 1, .. })));
        let twice = vec![s.vectors()[0].clone(), s.vectors()[0].clone()];
        assert!(matches!(IsotropicSequence::new(&l, twice, None), Err(HyperbolicError::BadPairing { .. })));
        assert!(matches!(
            s.clone().with_nef_indices(&l, vec![1, 2]),
            Err(HyperbolicError::BadNefIndices)
        ));
    }

    #[test]
    fn reflection_examples() {
        let r = &e(1) - &e(2);
        assert_eq!(reflect(&r, &r).unwrap(), -&r);
        let x = &e(3) + &e(0);
        assert_eq!(reflect(&x, &r).unwrap(), x);
        let f = standard_isotropic_sequence();
        assert_eq!(reflect(&f.vectors()[0], &r).unwrap(), f.vectors()[1]);
        assert!(matches!(reflect(&x, &e(1)), Err(HyperbolicError::NotRoot(_))));
    }

    #[test]
    fn descent_on_nef_vector_is_trivial() {
        let hs = HyperbolicSpace::standard();
        let f = standard_isotropic_sequence();
        let d = hs.chamber_descent(&f.vectors()[0], &[]).unwrap();
        assert_eq!(d.vector, f.vectors()[0]);
        assert!(d.word.is_empty());
    }

    #[test]
    fn descent_along_a_chain() {
        let hs = HyperbolicSpace::standard();
        let f = standard_isotropic_sequence();
        let chain = vec![&e(1) - &e(2), &e(2) - &e(3), &e(3) - &e(4)];
        let d = hs.chamber_descent(&f.vectors()[0], &chain).unwrap();
        assert_eq!(d.vector, f.vectors()[3]);
        assert_eq!(d.word.0, chain);
        assert_eq!(d.word.apply(hs.lattice(), &f.vectors()[0]).unwrap(), d.vector);
    }

    #[test]
    fn descent_single_step() {
        let hs = HyperbolicSpace::standard();
        let f2 = standard_isotropic_sequence().vectors()[1].clone();
        let r = &e(2) - &e(3);
        assert_eq!(hs.pair(&f2, &r).unwrap(), BigInt::from(-1));
        let d = hs.chamber_descent(&f2, std::slice::from_ref(&r)).unwrap();
        assert_eq!(d.word.len(), 1);
    }

    #[test]
    fn descent_errors() {
        let hs = HyperbolicSpace::standard();
        let f1 = standard_isotropic_sequence().vectors()[0].clone();
        assert!(matches!(hs.chamber_descent(&-&f1, &[]), Err(HyperbolicError::OutsideCone(_))));
        assert!(matches!(hs.chamber_descent(&e(1), &[]), Err(HyperbolicError::OutsideCone(_))));
        assert!(matches!(hs.chamber_descent(&f1, &[e(1)]), Err(HyperbolicError::NotRoot(_))));
        // a root negative on the reference makes the height grow
        let r = -&e10_basis()[0];
        assert_eq!(hs.pair(&f1, &r).unwrap(), BigInt::from(-1));
        assert!(matches!(hs.chamber_descent(&f1, &[r]), Err(HyperbolicError::NotDecreasing { step: 0 })));
        assert!(HyperbolicSpace::new(z_1_10(), e(1)).is_err());
    }

    #[test]
    fn canonical_all_nef() {
        let l = z_1_10();
        let s = standard_isotropic_sequence();
        let rep = canonical_structure_check(&l, s.vectors(), &(0..10).collect::<Vec<_>>(), &[]).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.nef_count, 10);
    }

    #[test]
    fn canonical_pair_with_one_root() {
        let l = z_1_10();
        let f = standard_isotropic_sequence();
        let (f4, f3) = (f.vectors()[3].clone(), f.vectors()[2].clone());
        let r = &e(3) - &e(4);
        assert_eq!(&f4 + &r, f3);
        let rep = canonical_structure_check(&l, &[f4.clone(), f3], &[0], std::slice::from_ref(&r)).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.nef_count, 1);
        assert_eq!(rep.chain_lengths, vec![0, 1]);

        let r0 = &e(2) - &e(3);
        let f1 = f.vectors()[0].clone();
        assert!(l.pair(&f1, &r0).unwrap().is_zero());
        let rep = canonical_structure_check(&l, &[f1.clone(), &f1 + &r0], &[0], &[r0]).unwrap();
        assert_eq!(rep.violation, Some(CanonicalViolation::ChainPairing { index: 1 }));
    }

    #[test]
    fn canonical_longer_chain_and_failures() {
        let l = z_1_10();
        let f = standard_isotropic_sequence();
        let f10 = f.vectors()[9].clone();
        // f10 + (e9 - e10) = f9, + (e8 - e9) = f8
        let r1 = &e(9) - &e(10);
        let r2 = &e(8) - &e(9);
        let seq = vec![f10.clone(), f.vectors()[8].clone(), f.vectors()[7].clone()];
        let rep = canonical_structure_check(&l, &seq, &[0], &[r1.clone(), r2.clone()]).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.chain_lengths, vec![0, 1, 2]);
        assert_eq!(rep.chains, vec![ChainReport { nef_index: 0, roots: vec![0, 1] }]);

        let rep = canonical_structure_check(&l, &seq, &[0], std::slice::from_ref(&r1)).unwrap();
        assert_eq!(rep.violation, Some(CanonicalViolation::ChainMembership { index: 2 }));
        let rep = canonical_structure_check(&l, &seq, &[1], &[r1.clone(), r2.clone()]).unwrap();
        assert_eq!(rep.violation, Some(CanonicalViolation::NefIndices));
        let rep = canonical_structure_check(&l, &seq, &[0, 1], &[r1, r2]).unwrap();
        assert_eq!(rep.violation, Some(CanonicalViolation::Nef { index: 1, root: 0 }));
    }

    fn bounded_vec() -> impl Strategy<Value = LatticeVector> {
        prop::collection::vec(-6i64..=6, AMBIENT_RANK).prop_map(|c| LatticeVector::from_i64(&c))
    }

    proptest! {
        #[test]
        fn reflections_are_isometric_involutions(x in bounded_vec(), y in bounded_vec(), pick in 0usize..10) {
            let l = z_1_10();
            let r = &e10_basis()[pick];
            let (sx, sy) = (reflect(&x, r).unwrap(), reflect(&y, r).unwrap());
            prop_assert_eq!(l.pair(&sx, &sy).unwrap(), l.pair(&x, &y).unwrap());
            prop_assert_eq!(reflect(&sx, r).unwrap(), x);
        }

        #[test]
        fn descent_ignores_root_order(mask in 1u16..1024, j in 0usize..10, rot in 0usize..10) {
            let hs = HyperbolicSpace::standard();
            let basis = e10_basis();
            let roots: Vec<LatticeVector> = (0..10).filter(|i| mask & (1 << i) != 0).map(|i| basis[i].clone()).collect();
            let mut shuffled = roots.clone();
            let n = shuffled.len();
            shuffled.rotate_left(rot % n);
            shuffled.reverse();
            let v = standard_isotropic_sequence().vectors()[j].clone();
            let a = hs.chamber_descent(&v, &roots).unwrap();
            let b = hs.chamber_descent(&v, &shuffled).unwrap();
            prop_assert_eq!(&a.vector, &b.vector);
            for r in &roots {
                prop_assert!(!hs.pair(&a.vector, r).unwrap().is_negative());
            }
        }
    }
}
