//! Negative-definite ADE root lattices, the E8 root system, and explicit
//! root sublattices of E8 used for glue-group computations.
//!
//! Roots have norm -2 and adjacent simple roots pair to +1.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{Lattice, LatticeVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinKind {
    A,
    D,
    E,
}

/// Simple-root Gram of `A_n`, `D_n` (n >= 4) or `E_n` (n = 6, 7, 8).
///
/// Node layout: `A_n` is the path `0..n`; `D_n` is the path `0..n-1` with
/// node `n-1` hung on node `n-3`; `E_n` is the path `0..n-1` with node
/// `n-1` hung on node `2`.
pub fn dynkin_gram(kind: DynkinKind, n: usize) -> Lattice {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match kind {
        DynkinKind::A => edges.extend((1..n).map(|i| (i - 1, i))),
        DynkinKind::D => {
            assert!(n >= 4, "D_n needs n >= 4");
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((n - 3, n - 1));
        }
        DynkinKind::E => {
            assert!((6..=8).contains(&n), "E_n needs 6 <= n <= 8");
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((2, n - 1));
        }
    }
    gram_from_edges(n, &edges)
}

fn gram_from_edges(n: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(i, j) in edges {
        rows[i][j] = 1;
        rows[j][i] = 1;
    }
    Lattice::from_rows(&rows)
}

/// E8 in the basis `R1..R8` of an E~8 fiber: `R1` hangs on `R4`, and
/// `R2 - R3 - R4 - R5 - R6 - R7 - R8` is a chain.
pub fn e8() -> Lattice {
    gram_from_edges(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 3)])
}

/// Coefficients of the highest root of [`e8`] in its simple roots.
pub const E8_HIGHEST_ROOT: [i64; 8] = [3, 2, 4, 6, 5, 4, 3, 2];

/// `E10 = U + E8`, basis `(f, g, R1..R8)` with `f^2 = g^2 = 0`, `f.g = 1`.
pub fn e10_split() -> Lattice {
    Lattice::hyperbolic_plane().direct_sum(&e8())
}

/// All roots of a negative-definite lattice given in a simple-root basis.
///
/// Positive roots are generated by adding simple roots `a` to a root `r`
/// with `r.a = 1`, which is exactly when `r + a` is again a root in the
/// simply-laced case. The result is sorted.
pub fn root_system(l: &Lattice) -> Vec<LatticeVector> {
    let n = l.rank();
    let simple: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    let mut positive: BTreeSet<LatticeVector> = simple.iter().cloned().collect();
    let mut frontier: Vec<LatticeVector> = simple.clone();
    let one = BigInt::from(1);
    while let Some(r) = frontier.pop() {
        for a in &simple {
            if l.pair(&r, a).expect("same rank") == one {
                let s = &r + a;
                if positive.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
    }
    let mut all: Vec<LatticeVector> = positive.iter().cloned().collect();
    all.extend(positive.iter().map(|r| -r));
    all.sort();
    all
}

/// Backtracking search for roots `v_1..v_k` of `ambient` with Gram matrix
/// equal to `target`. Returns the first hit in lexicographic root order.
pub fn find_root_embedding(ambient: &Lattice, target: &Lattice) -> Option<Vec<LatticeVector>> {
    let roots = root_system(ambient);
    let m = roots.len();
    let mut table = vec![0i64; m * m];
    for i in 0..m {
        for j in i..m {
            let p = i64::try_from(ambient.pair(&roots[i], &roots[j]).ok()?).ok()?;
            table[i * m + j] = p;
            table[j * m + i] = p;
        }
    }
    let k = target.rank();
    let tg: Vec<i64> = target.gram().entries().iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect();
    if (0..k).any(|i| tg[i * k + i] != -2) {
        return None;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn go(chosen: &mut Vec<usize>, m: usize, k: usize, table: &[i64], tg: &[i64]) -> bool {
        let pos = chosen.len();
        if pos == k {
            return true;
        }
        for cand in 0..m {
            if chosen.iter().enumerate().all(|(i, &c)| table[c * m + cand] == tg[i * k + pos]) {
                chosen.push(cand);
                if go(chosen, m, k, table, tg) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(&mut chosen, m, k, &table, &tg).then(|| chosen.iter().map(|&c| roots[c].clone()).collect())
}

/// Simple roots of `D4 + D4` inside [`e8`] (coordinates in `R1..R8`),
/// as returned by [`find_root_embedding`].
///
/// Layout per block follows [`dynkin_gram`]`(D, 4)`.
pub const D4_D4_IN_E8: [[i64; 8]; 8] = [
    [-3, -2, -4, -6, -5, -4, -3, -2],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 1, 2, 2, 2, 1, 0],
    [-1, 0, -1, -2, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
];

/// Simple roots of `E6 + A2` inside [`e8`] (coordinates in `R1..R8`),
/// as returned by [`find_root_embedding`].
///
/// Layout follows [`dynkin_gram`]`(E, 6)` then `(A, 2)`.
pub const E6_A2_IN_E8: [[i64; 8]; 8] = [
    [-3, -2, -4, -6, -5, -4, -3, -2],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [1, 1, 2, 3, 2, 1, 0, 0],
    [0, -1, -1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
];

pub fn vectors_of(rows: &[[i64; 8]]) -> Vec<LatticeVector> {
    rows.iter().map(|r| LatticeVector::from_i64(r)).collect()
}

pub fn d4_d4() -> Lattice {
    dynkin_gram(DynkinKind::D, 4).direct_sum(&dynkin_gram(DynkinKind::D, 4))
}

pub fn e6_a2() -> Lattice {
    dynkin_gram(DynkinKind::E, 6).direct_sum(&dynkin_gram(DynkinKind::A, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::profile;

    #[test]
    fn e8_has_240_roots_and_the_highest_root() {
        let roots = root_system(&e8());
        assert_eq!(roots.len(), 240);
        assert!(roots.contains(&LatticeVector::from_i64(&E8_HIGHEST_ROOT)));
    }

    #[test]
    fn small_root_systems() {
        assert_eq!(root_system(&dynkin_gram(DynkinKind::A, 2)).len(), 6);
        assert_eq!(root_system(&dynkin_gram(DynkinKind::D, 4)).len(), 24);
        assert_eq!(root_system(&dynkin_gram(DynkinKind::E, 6)).len(), 72);
        assert_eq!(root_system(&dynkin_gram(DynkinKind::E, 7)).len(), 126);
    }

    #[test]
    fn shipped_embeddings_match_search() {
        for (rows, target) in [(&D4_D4_IN_E8, d4_d4()), (&E6_A2_IN_E8, e6_a2())] {
            let shipped = vectors_of(rows);
            assert_eq!(e8().gram_of(&shipped).unwrap(), *target.gram());
            assert_eq!(find_root_embedding(&e8(), &target).unwrap(), shipped);
        }
    }

    #[test]
    fn embedding_search_fails_for_impossible_targets() {
        // nine mutually orthogonal roots cannot live in rank 8
        let a1s = (0..9).fold(dynkin_gram(DynkinKind::A, 1), |acc, i| {
            if i == 0 { acc } else { acc.direct_sum(&dynkin_gram(DynkinKind::A, 1)) }
        });
        assert!(find_root_embedding(&dynkin_gram(DynkinKind::A, 3), &a1s).is_none());
    }

    #[test]
    fn dynkin_determinants() {
        // |det| of A_n, D_n, E_n Cartan matrices: n+1, 4, 9-n
        assert_eq!(profile(&dynkin_gram(DynkinKind::A, 5)).determinant, BigInt::from(-6));
        assert_eq!(profile(&dynkin_gram(DynkinKind::D, 6)).determinant, BigInt::from(4));
        assert_eq!(profile(&dynkin_gram(DynkinKind::E, 6)).determinant, BigInt::from(3));
        assert_eq!(profile(&dynkin_gram(DynkinKind::E, 7)).determinant, BigInt::from(-2));
        assert_eq!(profile(&dynkin_gram(DynkinKind::E, 8)).determinant, BigInt::from(1));
    }
}
