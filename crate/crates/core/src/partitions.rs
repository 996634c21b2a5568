//! Partitions, r-tuples of partitions, tri-partitions and their enumerators.
//!
//! An [`RTuple`] indexes the canonical basis of the fixed-point ring. Components
//! `1..r` may carry parts equal to zero (they stand for the triples `(0,0,i)`),
//! component `0` may not, because `(0,0,0)` is not a legal triple.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition stored as a weakly decreasing list of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "ordinary partitions have positive parts".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    fn insert(&mut self, p: u32) {
        let pos = self.parts.partition_point(|&q| q >= p);
        self.parts.insert(pos, p);
    }

    fn remove(&mut self, p: u32) -> bool {
        match self.parts.iter().position(|&q| q == p) {
            Some(i) => {
                self.parts.remove(i);
                true
            }
            None => false,
        }
    }

    /// All partitions of `n`, largest parts first, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A partition together with a number of parts equal to zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaddedPartition {
    positive: Partition,
    zeros: u32,
}

impl PaddedPartition {
    pub fn new(positive: Partition, zeros: u32) -> Self {
        Self { positive, zeros }
    }

    /// Accepts parts in any order; entries equal to zero become zero parts.
    pub fn from_parts(parts: &[u32]) -> Self {
        let zeros = parts.iter().filter(|&&p| p == 0).count() as u32;
        let positive = Partition::new(parts.iter().copied().filter(|&p| p > 0).collect())
            .expect("zero parts filtered");
        Self { positive, zeros }
    }

    pub fn positive(&self) -> &Partition {
        &self.positive
    }

    pub fn zeros(&self) -> u32 {
        self.zeros
    }

    pub fn size(&self) -> u32 {
        self.positive.size()
    }

    /// Length, zero parts included.
    pub fn len(&self) -> u32 {
        self.positive.len() + self.zeros
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Multiplicity of the part `j`; `j = 0` reads the zero-part count.
    pub fn multiplicity(&self, j: u32) -> u32 {
        if j == 0 {
            self.zeros
        } else {
            self.positive.multiplicity(j)
        }
    }

    /// Distinct parts with their multiplicities, zero first when present.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = self.positive.multiplicities();
        if self.zeros > 0 {
            m.insert(0, self.zeros);
        }
        m
    }

    /// All parts, weakly decreasing, zeros last.
    pub fn parts(&self) -> Vec<u32> {
        let mut v = self.positive.parts().to_vec();
        v.extend(std::iter::repeat_n(0, self.zeros as usize));
        v
    }

    fn insert(&mut self, p: u32) {
        if p == 0 {
            self.zeros += 1;
        } else {
            self.positive.insert(p);
        }
    }

    fn remove(&mut self, p: u32) -> bool {
        if p == 0 {
            if self.zeros == 0 {
                return false;
            }
            self.zeros -= 1;
            true
        } else {
            self.positive.remove(p)
        }
    }
}

/// An r-tuple `(λ_0, …, λ_{r-1})`; component 0 has no zero parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RTuple {
    components: Vec<PaddedPartition>,
}

impl RTuple {
    pub fn empty(r: u32) -> Self {
        assert!(r >= 1, "r must be at least 1");
        Self {
            components: vec![PaddedPartition::default(); r as usize],
        }
    }

    /// Builds a tuple from per-component part lists. Missing trailing
    /// components are empty.
    pub fn from_parts(r: u32, components: &[Vec<u32>]) -> Result<Self> {
        if r == 0 {
            return Err(Error::Precondition("r must be at least 1".into()));
        }
        if components.len() > r as usize {
            return Err(Error::InvalidPartition(format!(
                "{} components given for r = {r}",
                components.len()
            )));
        }
        let mut t = Self::empty(r);
        for (i, parts) in components.iter().enumerate() {
            if i == 0 && parts.contains(&0) {
                return Err(Error::InvalidPartition(
                    "component 0 cannot carry zero parts".into(),
                ));
            }
            t.components[i] = PaddedPartition::from_parts(parts);
        }
        Ok(t)
    }

    pub fn r(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn component(&self, i: u32) -> &PaddedPartition {
        &self.components[i as usize]
    }

    pub fn components(&self) -> &[PaddedPartition] {
        &self.components
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.components.iter().map(PaddedPartition::size).sum()
    }

    /// `l(λ)`, zero parts counted.
    pub fn len(&self) -> u32 {
        self.components.iter().map(PaddedPartition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn multiplicity(&self, i: u32, j: u32) -> u32 {
        self.components
            .get(i as usize)
            .map_or(0, |c| c.multiplicity(j))
    }

    /// `(component, part, multiplicity)` for every distinct part.
    pub fn distinct_parts(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for (i, comp) in self.components.iter().enumerate() {
            for (j, m) in comp.multiplicities() {
                out.push((i as u32, j, m));
            }
        }
        out
    }

    /// Adds a part `j` to component `i`.
    pub fn with_part(&self, i: u32, j: u32) -> Result<Self> {
        if i >= self.r() {
            return Err(Error::InvalidPartition(format!(
                "component {i} out of range for r = {}",
                self.r()
            )));
        }
        if i == 0 && j == 0 {
            return Err(Error::InvalidPartition(
                "component 0 cannot carry zero parts".into(),
            ));
        }
        let mut t = self.clone();
        t.components[i as usize].insert(j);
        Ok(t)
    }

    /// Removes one part `j` from component `i`, if present.
    pub fn without_part(&self, i: u32, j: u32) -> Option<Self> {
        let mut t = self.clone();
        if t.components.get_mut(i as usize)?.remove(j) {
            Some(t)
        } else {
            None
        }
    }

    /// `Σ_i r|λ_i| + i·l(λ_i)`, half of the degree.
    pub fn weight(&self) -> u64 {
        let r = self.r() as u64;
        self.components
            .iter()
            .enumerate()
            .map(|(i, c)| r * c.size() as u64 + i as u64 * c.len() as u64)
            .sum()
    }

    /// `|λ| + l(λ)`, the truncation statistic.
    pub fn span(&self) -> u32 {
        self.size() + self.len()
    }

    /// The relation `self ≤ other`: every multiplicity, zero parts included, is bounded.
    pub fn dominated_by(&self, other: &RTuple) -> Result<bool> {
        if self.r() != other.r() {
            return Err(Error::RMismatch {
                left: self.r(),
                right: other.r(),
            });
        }
        Ok(self
            .distinct_parts()
            .into_iter()
            .all(|(i, j, m)| m <= other.multiplicity(i, j)))
    }

    /// All `μ` with `μ ≤ self`, in a fixed order.
    pub fn lower_set(&self) -> Vec<RTuple> {
        let cells = self.distinct_parts();
        let mut out = Vec::new();
        let mut counts = vec![0u32; cells.len()];
        loop {
            let mut mu = RTuple::empty(self.r());
            for (&(i, j, _), &m) in cells.iter().zip(&counts) {
                for _ in 0..m {
                    mu.components[i as usize].insert(j);
                }
            }
            out.push(mu);
            // odometer increment
            let mut k = 0;
            loop {
                if k == cells.len() {
                    return out;
                }
                if counts[k] < cells[k].2 {
                    counts[k] += 1;
                    break;
                }
                counts[k] = 0;
                k += 1;
            }
        }
    }

    /// `α_i^j − μ_i^j` for every distinct part of `self`.
    pub(crate) fn multiplicity_gaps<'a>(
        &'a self,
        mu: &'a RTuple,
    ) -> impl Iterator<Item = i64> + 'a {
        self.distinct_parts()
            .into_iter()
            .map(move |(i, j, m)| m as i64 - mu.multiplicity(i, j) as i64)
    }
}

impl fmt::Display for RTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(i, c)| {
                let parts: Vec<String> = c.parts().iter().map(u32::to_string).collect();
                format!("λ_{i}=({})", parts.join(","))
            })
            .collect();
        if shown.is_empty() {
            write!(f, "[∅]")
        } else {
            write!(f, "[{}]", shown.join(", "))
        }
    }
}

/// `2·(Σ_i r|λ_i| + i·l(λ_i))`.
pub fn rtuple_degree(lambda: &RTuple) -> u64 {
    2 * lambda.weight()
}

/// An exponent triple `(a, b, c)` standing for `x^a y^b z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Triple {
    pub const Y: Triple = Triple { a: 0, b: 1, c: 0 };

    /// Checked constructor: `c < r` and not `(0,0,0)`.
    pub fn new(a: u32, b: u32, c: u32, r: u32) -> Result<Self> {
        let t = Triple { a, b, c };
        t.validate(r)?;
        Ok(t)
    }

    pub fn validate(&self, r: u32) -> Result<()> {
        if self.c >= r || (self.a, self.b, self.c) == (0, 0, 0) {
            return Err(Error::InvalidTriple {
                a: self.a,
                b: self.b,
                c: self.c,
                r,
            });
        }
        Ok(())
    }

    /// `r(a+b) + 2c`.
    pub fn degree(&self, r: u32) -> u64 {
        r as u64 * (self.a + self.b) as u64 + 2 * self.c as u64
    }

    /// Torus weight `a − b`.
    pub fn torus_weight(&self) -> i64 {
        self.a as i64 - self.b as i64
    }

    pub fn is_diagonal(&self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// A finite multiset of triples; indexes the monomial symmetric function `m_Λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriPartition {
    counts: BTreeMap<Triple, u32>,
}

impl TriPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_triples<I: IntoIterator<Item = Triple>>(triples: I) -> Self {
        let mut t = Self::empty();
        for x in triples {
            t.insert(x);
        }
        t
    }

    pub fn insert(&mut self, t: Triple) {
        self.insert_many(t, 1);
    }

    pub fn insert_many(&mut self, t: Triple, m: u32) {
        if m > 0 {
            *self.counts.entry(t).or_insert(0) += m;
        }
    }

    /// Removes one copy of `t`; returns false if absent.
    pub fn remove(&mut self, t: &Triple) -> bool {
        match self.counts.get_mut(t) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(t);
                true
            }
            None => false,
        }
    }

    /// `u_t`, the multiplicity of `t`.
    pub fn multiplicity(&self, t: &Triple) -> u32 {
        self.counts.get(t).copied().unwrap_or(0)
    }

    /// Distinct triples with multiplicities, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&Triple, &u32)> {
        self.counts.iter()
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.counts
            .iter()
            .flat_map(|(t, &m)| std::iter::repeat_n(*t, m as usize))
    }

    /// `l(Λ)`.
    pub fn len(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `e(Λ)`, the multiplicity of `(0,1,0)`.
    pub fn reservoir(&self) -> u32 {
        self.multiplicity(&Triple::Y)
    }

    /// `Σ r(a+b) + 2c`.
    pub fn degree(&self, r: u32) -> u64 {
        self.counts
            .iter()
            .map(|(t, &m)| t.degree(r) * m as u64)
            .sum()
    }

    pub fn torus_weight(&self) -> i64 {
        self.counts
            .iter()
            .map(|(t, &m)| t.torus_weight() * m as i64)
            .sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.counts.keys().all(Triple::is_diagonal)
    }

    pub fn validate(&self, r: u32) -> Result<()> {
        self.counts.keys().try_for_each(|t| t.validate(r))
    }

    /// Reads the tri-partition back as an r-tuple when it has canonical shape
    /// `λ (0,1,0)^{|λ|}`.
    pub fn as_canonical(&self, r: u32) -> Option<RTuple> {
        let mut lambda = RTuple::empty(r);
        for (t, &m) in &self.counts {
            if *t == Triple::Y {
                continue;
            }
            if t.b != 0 || t.c >= r {
                return None;
            }
            for _ in 0..m {
                lambda.components[t.c as usize].insert(t.a);
            }
        }
        (lambda.size() == self.reservoir()).then_some(lambda)
    }
}

impl fmt::Display for TriPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[")?;
        for t in self.triples() {
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// `Π_i Π_j (λ_i^j, 0, i) · (0,1,0)^{|λ|}`.
pub fn canon_tripartition(lambda: &RTuple) -> TriPartition {
    let mut t = TriPartition::empty();
    for (i, comp) in lambda.components().iter().enumerate() {
        for (j, m) in comp.multiplicities() {
            t.insert_many(
                Triple {
                    a: j,
                    b: 0,
                    c: i as u32,
                },
                m,
            );
        }
    }
    t.insert_many(Triple::Y, lambda.size());
    t
}

/// Enumerates r-tuples as multisets over cells `(component, part)` with an
/// additive cost; keeps those whose cost satisfies `accept`.
fn enumerate_by_cost(
    r: u32,
    budget: u64,
    cost: impl Fn(u32, u32) -> u64,
    accept: impl Fn(u64) -> bool,
) -> Vec<RTuple> {
    let mut cells = Vec::new();
    for i in 0..r {
        let first = if i == 0 { 1 } else { 0 };
        let mut j = first;
        loop {
            let c = cost(i, j);
            if c > budget {
                break;
            }
            debug_assert!(c > 0);
            cells.push((i, j, c));
            j += 1;
        }
    }

    fn rec(
        cells: &[(u32, u32, u64)],
        idx: usize,
        spent: u64,
        budget: u64,
        cur: &mut RTuple,
        accept: &dyn Fn(u64) -> bool,
        out: &mut Vec<RTuple>,
    ) {
        if idx == cells.len() {
            if accept(spent) {
                out.push(cur.clone());
            }
            return;
        }
        let (i, j, c) = cells[idx];
        let mut taken = 0;
        let mut spent_now = spent;
        loop {
            rec(cells, idx + 1, spent_now, budget, cur, accept, out);
            if spent_now + c > budget {
                break;
            }
            spent_now += c;
            cur.components[i as usize].insert(j);
            taken += 1;
        }
        for _ in 0..taken {
            cur.components[i as usize].remove(j);
        }
    }

    let mut out = Vec::new();
    let mut cur = RTuple::empty(r);
    rec(&cells, 0, 0, budget, &mut cur, &accept, &mut out);
    out
}

/// Sorts by degree, then by the derived lexicographic order.
fn sort_by_degree(v: &mut [RTuple]) {
    v.sort_by(|x, y| x.weight().cmp(&y.weight()).then_with(|| x.cmp(y)));
}

/// Canonical basis of the truncated ring: all `λ` with `|λ| + l(λ) ≤ n`.
pub fn enumerate_fixed_basis(r: u32, n: u32) -> Vec<RTuple> {
    assert!(r >= 1);
    let mut v = enumerate_by_cost(r, n as u64, |_, j| j as u64 + 1, |_| true);
    sort_by_degree(&mut v);
    v
}

/// All `λ` with `Σ_i r|λ_i| + i·l(λ_i) = k`: the canonical basis of the
/// degree-`2k` piece of the untruncated quotient.
pub fn rtuples_of_weight(r: u32, k: u64) -> Vec<RTuple> {
    assert!(r >= 1);
    let mut v = enumerate_by_cost(r, k, |i, j| r as u64 * j as u64 + i as u64, |s| s == k);
    v.sort();
    v
}

/// An r-tuple of ordinary partitions indexing a Betti class.
pub type BettiTuple = Vec<Partition>;

/// All r-tuples of ordinary partitions with total size `n`.
pub fn enumerate_betti_tuples(r: u32, n: u32) -> Vec<BettiTuple> {
    assert!(r >= 1);
    fn rec(r: u32, rem: u32, cur: &mut BettiTuple, out: &mut Vec<BettiTuple>) {
        if cur.len() as u32 == r - 1 {
            for p in Partition::all_of(rem) {
                cur.push(p);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for s in (0..=rem).rev() {
            for p in Partition::all_of(s) {
                cur.push(p);
                rec(r, rem - s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(r, n, &mut Vec::new(), &mut out);
    out
}

/// Adds one to every part (zero parts become ones) and pads `μ_0` with ones
/// up to total size `n`.
pub fn fixed_to_betti_bijection(lambda: &RTuple, n: u32) -> Result<BettiTuple> {
    let span = lambda.span();
    if span > n {
        return Err(Error::Precondition(format!(
            "|λ| + l(λ) = {span} exceeds n = {n}"
        )));
    }
    let mut out = Vec::with_capacity(lambda.r() as usize);
    for (i, comp) in lambda.components().iter().enumerate() {
        let mut parts: Vec<u32> = comp.parts().iter().map(|p| p + 1).collect();
        if i == 0 {
            parts.extend(std::iter::repeat_n(1, (n - span) as usize));
        }
        out.push(Partition::new(parts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(r: u32, comps: &[&[u32]]) -> RTuple {
        let v: Vec<Vec<u32>> = comps.iter().map(|c| c.to_vec()).collect();
        RTuple::from_parts(r, &v).unwrap()
    }

    #[test]
    fn degrees_of_small_tuples() {
        assert_eq!(rtuple_degree(&RTuple::empty(2)), 0);
        assert_eq!(rtuple_degree(&rt(2, &[&[], &[0]])), 2);
        assert_eq!(rtuple_degree(&rt(2, &[&[1]])), 4);
    }

    #[test]
    fn component_zero_rejects_zero_parts() {
        assert!(RTuple::from_parts(2, &[vec![0]]).is_err());
        assert!(RTuple::empty(2).with_part(0, 0).is_err());
        assert!(RTuple::from_parts(1, &[vec![], vec![]]).is_err());
    }

    #[test]
    fn fixed_basis_small_cases() {
        assert_eq!(enumerate_fixed_basis(1, 1), vec![RTuple::empty(1)]);
        assert_eq!(
            enumerate_fixed_basis(2, 1),
            vec![RTuple::empty(2), rt(2, &[&[], &[0]])]
        );
        let b = enumerate_fixed_basis(2, 2);
        let degs: Vec<u64> = b.iter().map(rtuple_degree).collect();
        assert_eq!(degs, vec![0, 2, 4, 4, 6]);
    }

    #[test]
    fn betti_tuples_small_cases() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(
            enumerate_betti_tuples(1, 2),
            vec![vec![p(&[2])], vec![p(&[1, 1])]]
        );
        let two = enumerate_betti_tuples(2, 1);
        assert_eq!(two.len(), 2);
        assert!(two.contains(&vec![p(&[1]), p(&[])]));
        assert!(two.contains(&vec![p(&[]), p(&[1])]));
        assert_eq!(enumerate_betti_tuples(2, 2).len(), 5);
    }

    #[test]
    fn bijection_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(
            fixed_to_betti_bijection(&RTuple::empty(2), 1).unwrap(),
            vec![p(&[1]), p(&[])]
        );
        assert_eq!(
            fixed_to_betti_bijection(&rt(2, &[&[], &[0]]), 1).unwrap(),
            vec![p(&[]), p(&[1])]
        );
        assert_eq!(
            fixed_to_betti_bijection(&rt(1, &[&[1]]), 2).unwrap(),
            vec![p(&[2])]
        );
        assert!(fixed_to_betti_bijection(&rt(1, &[&[1]]), 1).is_err());
    }

    #[test]
    fn canonical_tripartitions() {
        assert!(canon_tripartition(&RTuple::empty(2)).is_empty());
        let z = canon_tripartition(&rt(2, &[&[], &[0]]));
        assert_eq!(z, TriPartition::from_triples([Triple { a: 0, b: 0, c: 1 }]));
        let x = canon_tripartition(&rt(2, &[&[1]]));
        assert_eq!(
            x,
            TriPartition::from_triples([Triple { a: 1, b: 0, c: 0 }, Triple::Y])
        );
        assert_eq!(x.as_canonical(2), Some(rt(2, &[&[1]])));
    }

    #[test]
    fn dominance_examples() {
        let lam = rt(2, &[&[2, 1], &[0, 3]]);
        assert!(RTuple::empty(2).dominated_by(&lam).unwrap());
        assert!(lam.dominated_by(&lam).unwrap());
        assert!(!rt(1, &[&[2]]).dominated_by(&rt(1, &[&[1, 1]])).unwrap());
        assert!(RTuple::empty(1).dominated_by(&lam).is_err());
    }

    #[test]
    fn lower_set_counts_products_of_multiplicities() {
        let lam = rt(3, &[&[2, 2, 1], &[0], &[4, 0, 0]]);
        // (2+1)(1+1) * (1+1) * (1+1)(2+1)
        assert_eq!(lam.lower_set().len(), 3 * 2 * 2 * 2 * 3);
        assert!(lam
            .lower_set()
            .iter()
            .all(|mu| mu.dominated_by(&lam).unwrap()));
    }

    #[test]
    fn weight_enumeration_matches_fixed_basis_at_large_n() {
        // For n ≥ 2k every weight-k tuple fits under the truncation.
        for r in 1..=3 {
            for k in 0..=5u64 {
                let direct = rtuples_of_weight(r, k).len();
                let via_basis = enumerate_fixed_basis(r, 2 * k as u32)
                    .iter()
                    .filter(|l| l.weight() == k)
                    .count();
                assert_eq!(direct, via_basis, "r={r} k={k}");
            }
        }
    }
}
