//! Seeded randomized checks of the exact-arithmetic core.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::hyperbolic::{e10_basis, reflect, standard_isotropic_sequence, z_1_10, HyperbolicSpace, AMBIENT_RANK};
use crate::lattice::LatticeVector;
use crate::linalg::{det_exact, signature, smith_normal_form, IntMatrix};

pub const DEFAULT_SEED: u64 = 20_260_101;
pub const DEFAULT_CASES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, rendered for the report.
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    fn run(name: &'static str, cases: usize, mut case: impl FnMut() -> Result<(), String>) -> Self {
        let mut failures = 0;
        let mut counterexample = None;
        for _ in 0..cases {
            if let Err(e) = case() {
                failures += 1;
                counterexample.get_or_insert(e);
            }
        }
        Self { name, cases, failures, counterexample }
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

fn random_vector(rng: &mut ChaCha8Rng, bound: i64) -> LatticeVector {
    LatticeVector::from_i64(&(0..AMBIENT_RANK).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

/// Positive roots `a_i + ... + a_j` along the chain of the E10 basis, plus
/// the simple roots; all pair positively with the Weyl vector.
fn positive_roots() -> Vec<LatticeVector> {
    let basis = e10_basis();
    let mut out = basis.clone();
    for i in 1..basis.len() {
        let mut acc = basis[i].clone();
        for b in &basis[i + 1..] {
            acc = &acc + b;
            out.push(acc.clone());
        }
    }
    out
}

pub fn run_all(seed: u64, cases: usize) -> Vec<PropertyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = z_1_10();
    let roots = positive_roots();
    let simple = e10_basis();
    let space = HyperbolicSpace::standard();
    let isotropic = standard_isotropic_sequence().vectors().to_vec();

    let reflection = PropertyOutcome::run("reflection isometry and involution", cases, || {
        let x = random_vector(&mut rng, 20);
        let y = random_vector(&mut rng, 20);
        let r = roots.choose(&mut rng).expect("nonempty");
        let (sx, sy) = (reflect(&x, r).map_err(|e| e.to_string())?, reflect(&y, r).map_err(|e| e.to_string())?);
        let same = l.pair(&sx, &sy).ok() == l.pair(&x, &y).ok();
        let back = reflect(&sx, r).map_err(|e| e.to_string())? == x;
        (same && back).then_some(()).ok_or_else(|| format!("x = {x:?}, y = {y:?}, r = {r:?}"))
    });

    let descent = PropertyOutcome::run("chamber descent terminates in the nef cone", cases, || {
        // a nonnegative combination of isotropic members moved by a random word
        let mut v = LatticeVector::zero(AMBIENT_RANK);
        for f in &isotropic {
            v = v.add_scaled(f, &BigInt::from(rng.gen_range(0..3)));
        }
        if v.is_zero() {
            v = isotropic[0].clone();
        }
        for _ in 0..rng.gen_range(0..12) {
            v = reflect(&v, simple.choose(&mut rng).expect("nonempty")).map_err(|e| e.to_string())?;
        }
        let k = rng.gen_range(1..=roots.len().min(12));
        let subset: Vec<LatticeVector> = roots.choose_multiple(&mut rng, k).cloned().collect();
        if !space.pair(&v, space.reference()).map_err(|e| e.to_string())?.is_positive() {
            return Err(format!("sample left the positive cone: {v:?}"));
        }
        let d = space.chamber_descent(&v, &subset).map_err(|e| format!("{e} for {v:?}"))?;
        let nef = subset.iter().all(|r| !l.pair(&d.vector, r).expect("same rank").is_negative());
        let replay = d.word.apply(&l, &v).map_err(|e| e.to_string())? == d.vector;
        let norm = l.norm(&d.vector).ok() == l.norm(&v).ok();
        (nef && replay && norm).then_some(()).ok_or_else(|| format!("v = {v:?}"))
    });

    let snf = PropertyOutcome::run("SNF, determinant and signature agree", cases, || {
        let n = rng.gen_range(1..=5);
        let mut rows = vec![vec![0i64; n]; n];
        for (i, j) in (0..n).flat_map(|i| (i..n).map(move |j| (i, j))) {
            let x = rng.gen_range(-4..=4);
            rows[i][j] = x;
            rows[j][i] = x;
        }
        let m = IntMatrix::from_rows(&rows);
        let det = det_exact(&m).map_err(|e| e.to_string())?;
        let s = smith_normal_form(&m);
        let sig = signature(&m).map_err(|e| e.to_string())?;
        let diag_product: BigInt = (0..n).map(|i| s.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero)).product();
        let rank_ok = s.rank() == sig.positive + sig.negative;
        let det_ok = diag_product.abs() == det.abs();
        let sign_ok = if det.is_zero() {
            s.rank() < n
        } else {
            s.rank() == n && det.is_positive() == (sig.negative % 2 == 0)
        };
        (rank_ok && det_ok && sign_ok).then_some(()).ok_or_else(|| format!("{rows:?}"))
    });

    vec![reflection, descent, snf]
}
