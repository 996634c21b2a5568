//! Exact rational linear algebra: sparse incremental echelon forms and dense inversion.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Coeff;
use crate::error::{Error, Result};

/// A sparse vector keyed by an ordered index type.
pub type SparseVec<K> = BTreeMap<K, Coeff>;

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, scale: &Coeff, row: &SparseVec<K>) {
    for (k, v) in row {
        let slot = target.entry(k.clone()).or_insert_with(Coeff::zero);
        *slot -= scale * v;
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

fn tag_axpy(target: &mut BTreeMap<usize, Coeff>, scale: &Coeff, row: &BTreeMap<usize, Coeff>) {
    for (k, v) in row {
        let slot = target.entry(*k).or_insert_with(Coeff::zero);
        *slot -= scale * v;
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

struct PivotRow<K> {
    entries: SparseVec<K>,
    /// Combination of tracked inputs producing `entries`.
    tag: BTreeMap<usize, Coeff>,
}

/// Row echelon form built one row at a time.
///
/// The pivot of a row is its smallest key, and every stored row is scaled so
/// its pivot entry is one. Rows may carry a *tag*, the combination of tracked
/// inputs they came from, which turns the structure into a linear solver.
pub struct Echelon<K> {
    rows: BTreeMap<K, PivotRow<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot from `v`, mirroring the operations on `tag`.
    fn reduce_tagged(&self, v: &mut SparseVec<K>, tag: &mut BTreeMap<usize, Coeff>) {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v
                    .range(c.clone()..)
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { return };
            let scale = v[&k].clone();
            let row = &self.rows[&k];
            axpy(v, &scale, &row.entries);
            tag_axpy(tag, &scale, &row.tag);
            cursor = Some(k);
        }
    }

    /// Reduces `v` modulo the span of the stored rows.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut tag = BTreeMap::new();
        self.reduce_tagged(&mut v, &mut tag);
        v
    }

    fn store(&mut self, mut v: SparseVec<K>, mut tag: BTreeMap<usize, Coeff>) -> bool {
        self.reduce_tagged(&mut v, &mut tag);
        let Some((pivot, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for c in v.values_mut() {
                *c *= &inv;
            }
            for c in tag.values_mut() {
                *c *= &inv;
            }
        }
        self.rows.insert(pivot, PivotRow { entries: v, tag });
        true
    }

    /// Inserts an untracked row; returns whether it raised the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        self.store(v, BTreeMap::new())
    }

    /// Inserts a row standing for tracked input number `id`.
    pub fn insert_tracked(&mut self, v: SparseVec<K>, id: usize) -> bool {
        let mut tag = BTreeMap::new();
        tag.insert(id, Coeff::one());
        self.store(v, tag)
    }

    /// Writes `v` as a combination of tracked inputs modulo the untracked rows.
    ///
    /// Returns `None` when `v` is not in the span of all stored rows.
    pub fn express(&self, mut v: SparseVec<K>) -> Option<BTreeMap<usize, Coeff>> {
        let mut tag = BTreeMap::new();
        self.reduce_tagged(&mut v, &mut tag);
        if !v.is_empty() {
            return None;
        }
        // reduce_tagged subtracts, so the combination has the opposite sign.
        for c in tag.values_mut() {
            *c = -c.clone();
        }
        Some(tag)
    }
}

/// Rank of a family of sparse rows.
pub fn rank<K: Ord + Clone, I: IntoIterator<Item = SparseVec<K>>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Dense square matrix over the rationals, row-major.
pub type DenseMatrix = Vec<Vec<Coeff>>;

/// Gauss–Jordan inverse of a square matrix.
pub fn invert(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    let mut a: DenseMatrix = m.clone();
    let mut inv: DenseMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::Singular(format!(
                "no pivot in column {col} of a {n}×{n} matrix"
            )));
        };
        a.swap(col, p);
        inv.swap(col, p);
        let lead = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &lead;
            inv[col][j] *= &lead;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] -= da;
                let di = &f * &inv[col][j];
                inv[r][j] -= di;
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn sv(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, v)| (k, int(v))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            sv(&[(0, 1), (1, 2)]),
            sv(&[(0, 2), (1, 4)]),
            sv(&[(1, 1), (2, 1)]),
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn rank_is_independent_of_row_order() {
        let rows = vec![
            sv(&[(0, 1), (2, 3)]),
            sv(&[(1, 5), (2, -1)]),
            sv(&[(0, 2), (1, 5), (2, 5)]),
            sv(&[(3, 7)]),
        ];
        let mut rev = rows.clone();
        rev.reverse();
        assert_eq!(rank(rows), rank(rev));
    }

    #[test]
    fn express_solves_modulo_untracked_rows() {
        let mut e = Echelon::new();
        e.insert(sv(&[(0, 1), (1, -1)])); // identifies e0 with e1
        assert!(e.insert_tracked(sv(&[(1, 2)]), 7));
        assert!(e.insert_tracked(sv(&[(2, 1)]), 9));
        let got = e.express(sv(&[(0, 3), (2, -1)])).unwrap();
        assert_eq!(got[&7], ratio(3, 2));
        assert_eq!(got[&9], int(-1));
        assert!(e.express(sv(&[(3, 1)])).is_none());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn inverse_round_trip() {
        let m = vec![
            vec![int(2), int(1), int(0)],
            vec![int(0), int(1), int(3)],
            vec![int(1), int(0), int(1)],
        ];
        let inv = invert(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = int(0);
                for k in 0..3 {
                    s += &m[i][k] * &inv[k][j];
                }
                assert_eq!(s, if i == j { int(1) } else { int(0) });
            }
        }
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(matches!(invert(&sing), Err(Error::Singular(_))));
    }
}
