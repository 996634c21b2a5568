//! Reduction of symmetric functions modulo the fixed-point ideal `J`.
//!
//! `J` is generated by the `m_{(a,b,c)}` with `a ≠ b`, and `S/J` is free on the
//! classes `m̄_{(a,a,c)}`. The [`Reducer`] therefore works in two stages:
//!
//! 1. rewrite `m_Λ` into the *diagonal* basis of products `m̄_{(a_1,a_1,c_1)(a_2,a_2,c_2)…}`
//!    by repeatedly stripping the largest off-diagonal triple `g` and using
//!    `m_g · m_{Λ−g} ≡ 0`, which expresses `m_Λ` through strictly shorter keys;
//! 2. change basis, one degree at a time, from the diagonal basis to the
//!    canonical basis `m̄_{λ(0,1,0)^{|λ|}}` by exact matrix inversion.
//!
//! The closed-form expansions live next to the engine so the two can be
//! compared term by term.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, format_coeff, sign, Coeff};
use crate::coeffs::{carry_split, gap_factorials, pivot_coefficient, transfer_coefficient};
use crate::error::{Error, Result};
use crate::linalg::{invert, DenseMatrix};
use crate::partitions::{canon_tripartition, rtuples_of_weight, RTuple, TriPartition, Triple};
use crate::symfun::{generator_product, SymElement};

/// Finite rational combination of canonical basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedElement {
    r: u32,
    terms: BTreeMap<RTuple, Coeff>,
}

impl FixedElement {
    pub fn zero(r: u32) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(lambda: RTuple) -> Self {
        let mut x = Self::zero(lambda.r());
        x.terms.insert(lambda, Coeff::one());
        x
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<RTuple, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &RTuple) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, lambda: RTuple, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_scaled(&mut self, other: &FixedElement, c: &Coeff) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> FixedElement {
        let mut out = Self::zero(self.r);
        out.add_scaled(self, c);
        out
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&RTuple) -> bool) -> FixedElement {
        FixedElement {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Common degree of all keys, if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degs = self.terms.keys().map(|k| 2 * k.weight());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

impl fmt::Display for FixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let mag = format_coeff(&c.abs());
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{mag} · {k}")?,
                (0, true) => write!(f, "−{mag} · {k}")?,
                (_, false) => write!(f, " + {mag} · {k}")?,
                (_, true) => write!(f, " − {mag} · {k}")?,
            }
        }
        Ok(())
    }
}

type DiagonalCoords = BTreeMap<TriPartition, Coeff>;

/// Change of basis for one degree: diagonal coordinates to canonical ones.
struct CanonicalBlock {
    basis: Vec<RTuple>,
    diagonal_index: BTreeMap<TriPartition, usize>,
    /// `inverse[i][j]`: canonical coordinate `i` of diagonal key `j`.
    inverse: DenseMatrix,
}

/// The diagonal tri-partition `Π (p,p,i)` matching `λ` part by part.
pub fn diagonal_tripartition(lambda: &RTuple) -> TriPartition {
    let mut t = TriPartition::empty();
    for (i, j, m) in lambda.distinct_parts() {
        t.insert_many(Triple { a: j, b: j, c: i }, m);
    }
    t
}

/// Memoizing reduction engine for a fixed `r`. Safe to share across threads.
pub struct Reducer {
    r: u32,
    diagonal: DashMap<TriPartition, Arc<DiagonalCoords>>,
    blocks: DashMap<u64, Arc<CanonicalBlock>>,
}

impl Reducer {
    pub fn new(r: u32) -> Self {
        assert!(r >= 1, "r must be at least 1");
        Self {
            r,
            diagonal: DashMap::new(),
            blocks: DashMap::new(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Number of memoized diagonal expansions.
    pub fn cache_len(&self) -> usize {
        self.diagonal.len()
    }

    /// Coordinates of `m̄_Λ` in the diagonal basis.
    fn to_diagonal(&self, lambda: &TriPartition) -> Arc<DiagonalCoords> {
        if let Some(hit) = self.diagonal.get(lambda) {
            return Arc::clone(hit.value());
        }
        let result = Arc::new(self.compute_diagonal(lambda));
        self.diagonal.insert(lambda.clone(), Arc::clone(&result));
        result
    }

    fn compute_diagonal(&self, lambda: &TriPartition) -> DiagonalCoords {
        let mut out = DiagonalCoords::new();
        if lambda.torus_weight() != 0 {
            return out;
        }
        let Some(&pivot) = lambda
            .iter()
            .map(|(t, _)| t)
            .filter(|t| !t.is_diagonal())
            .max()
        else {
            out.insert(lambda.clone(), Coeff::one());
            return out;
        };
        let mut rest = lambda.clone();
        rest.remove(&pivot);
        // m_pivot lies in J, so m_pivot · m_rest vanishes; the only term of
        // that product with the full length is m_Λ itself.
        let product = generator_product(pivot, &rest, self.r);
        let u = product
            .iter()
            .find(|(k, _)| k == lambda)
            .map(|(_, u)| *u)
            .expect("the product contains m_Λ");
        let inv_u = Coeff::new(BigInt::from(-1), BigInt::from(u));
        for (key, cf) in product {
            if &key == lambda {
                continue;
            }
            let scale = &inv_u * Coeff::from_integer(cf.into());
            for (d, v) in self.to_diagonal(&key).iter() {
                let slot = out.entry(d.clone()).or_insert_with(Coeff::zero);
                *slot += &scale * v;
                if slot.is_zero() {
                    out.remove(d);
                }
            }
        }
        out
    }

    fn block(&self, k: u64) -> Result<Arc<CanonicalBlock>> {
        if let Some(hit) = self.blocks.get(&k) {
            return Ok(Arc::clone(hit.value()));
        }
        let basis = rtuples_of_weight(self.r, k);
        let diagonal_index: BTreeMap<TriPartition, usize> = basis
            .iter()
            .map(diagonal_tripartition)
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let n = basis.len();
        let mut m: DenseMatrix = vec![vec![Coeff::zero(); n]; n];
        for (col, lambda) in basis.iter().enumerate() {
            for (d, v) in self.to_diagonal(&canon_tripartition(lambda)).iter() {
                let row = *diagonal_index
                    .get(d)
                    .expect("diagonal keys of one degree are indexed");
                m[row][col] = v.clone();
            }
        }
        let inverse = invert(&m).map_err(|_| {
            Error::Singular(format!(
                "canonical family of degree {} is not a basis (r = {})",
                2 * k,
                self.r
            ))
        })?;
        let block = Arc::new(CanonicalBlock {
            basis,
            diagonal_index,
            inverse,
        });
        self.blocks.insert(k, Arc::clone(&block));
        Ok(block)
    }

    /// Image of `m_Λ` in `S/J`, in the canonical basis.
    pub fn reduce_tripartition(&self, lambda: &TriPartition) -> Result<FixedElement> {
        lambda.validate(self.r)?;
        let mut out = FixedElement::zero(self.r);
        if lambda.torus_weight() != 0 {
            return Ok(out);
        }
        let deg = lambda.degree(self.r);
        debug_assert!(deg.is_multiple_of(2), "weight-zero keys have even degree");
        let block = self.block(deg / 2)?;
        let diag = self.to_diagonal(lambda);
        for (d, v) in diag.iter() {
            let j = block.diagonal_index[d];
            for (i, row) in block.inverse.iter().enumerate() {
                if !row[j].is_zero() {
                    out.add_term(block.basis[i].clone(), v * &row[j]);
                }
            }
        }
        Ok(out)
    }

    /// Image of an arbitrary element of `S` in the canonical basis.
    pub fn reduce(&self, x: &SymElement) -> Result<FixedElement> {
        if x.r() != self.r {
            return Err(Error::RMismatch {
                left: self.r,
                right: x.r(),
            });
        }
        let mut out = FixedElement::zero(self.r);
        for (k, c) in x.terms() {
            out.add_scaled(&self.reduce_tripartition(k)?, c);
        }
        Ok(out)
    }

    /// `m̄_g · m̄_{canon(λ)}`, computed by the product rule and reduced.
    pub fn product_by_generator(&self, g: Triple, lambda: &RTuple) -> Result<FixedElement> {
        self.check_r(lambda)?;
        g.validate(self.r)?;
        let mut out = FixedElement::zero(self.r);
        for (key, u) in generator_product(g, &canon_tripartition(lambda), self.r) {
            out.add_scaled(
                &self.reduce_tripartition(&key)?,
                &Coeff::from_integer(u.into()),
            );
        }
        Ok(out)
    }

    /// `m̄_{(a,a,c)} · m̄_{canon(λ)}` through the engine.
    pub fn multiply_canonical(&self, a: u32, c: u32, lambda: &RTuple) -> Result<FixedElement> {
        self.product_by_generator(Triple { a, b: a, c }, lambda)
    }

    fn check_r(&self, lambda: &RTuple) -> Result<()> {
        if lambda.r() != self.r {
            return Err(Error::RMismatch {
                left: self.r,
                right: lambda.r(),
            });
        }
        Ok(())
    }

    /// Rank of the reduction map on all weight-zero monomials of degree `2k`,
    /// stopping early once the rank reaches the dimension of the target.
    pub fn rank_in_degree(&self, k: u64) -> Result<usize> {
        let target = rtuples_of_weight(self.r, k).len();
        let mut ech = crate::linalg::Echelon::new();
        for lambda in monomials_of_degree(self.r, 2 * k) {
            if ech.rank() == target {
                break;
            }
            let img = self.reduce_tripartition(&lambda)?;
            ech.insert(img.terms().clone());
        }
        Ok(ech.rank())
    }
}

/// All weight-zero tri-partitions of the given degree, in ascending order.
pub fn monomials_of_degree(r: u32, degree: u64) -> Vec<TriPartition> {
    let mut triples = Vec::new();
    let rr = r as u64;
    for a in 0..=degree / rr {
        for b in 0..=(degree / rr - a) {
            for c in 0..r {
                let t = Triple {
                    a: a as u32,
                    b: b as u32,
                    c,
                };
                if (t.a, t.b, t.c) == (0, 0, 0) {
                    continue;
                }
                if t.degree(r) <= degree {
                    triples.push(t);
                }
            }
        }
    }
    triples.sort();

    fn rec(
        triples: &[Triple],
        idx: usize,
        left: u64,
        weight: i64,
        r: u32,
        cur: &mut TriPartition,
        out: &mut Vec<TriPartition>,
    ) {
        // every unit of |weight| still to be cancelled costs at least r
        if weight.unsigned_abs() * r as u64 > left {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if idx == triples.len() {
            return;
        }
        let t = triples[idx];
        let cost = t.degree(r);
        let mut taken = 0;
        let mut left_now = left;
        let mut weight_now = weight;
        loop {
            rec(triples, idx + 1, left_now, weight_now, r, cur, out);
            if cost > left_now {
                break;
            }
            left_now -= cost;
            weight_now += t.torus_weight();
            cur.insert(t);
            taken += 1;
        }
        for _ in 0..taken {
            cur.remove(&t);
        }
    }

    let mut out = Vec::new();
    rec(
        &triples,
        0,
        degree,
        0,
        r,
        &mut TriPartition::empty(),
        &mut out,
    );
    out.sort();
    out
}

fn check_triple(a: u32, b: u32, c: u32, r: u32) -> Result<()> {
    Triple { a, b, c }.validate(r)
}

/// `canon(λ)·(a,b,c)·(0,1,0)^{a−b}`: the tri-partition `(a,b,c) λ (0,1,0)^{|λ|+a−b}`.
pub fn expansion_source(a: u32, b: u32, c: u32, lambda: &RTuple) -> Result<TriPartition> {
    let r = lambda.r();
    check_triple(a, b, c, r)?;
    let reservoir = lambda.size() as i64 + a as i64 - b as i64;
    if reservoir < 0 {
        return Err(Error::Precondition(format!(
            "|λ| + a − b = {reservoir} is negative"
        )));
    }
    let mut t = canon_tripartition(lambda);
    let have = t.reservoir() as i64;
    if reservoir >= have {
        t.insert_many(Triple::Y, (reservoir - have) as u32);
    } else {
        for _ in 0..(have - reservoir) {
            t.remove(&Triple::Y);
        }
    }
    t.insert(Triple { a, b, c });
    Ok(t)
}

/// Accumulates `coefficient · [μ ∪_Q j]`; a part `0` in component `0` has no
/// canonical meaning and is only tolerated with a vanishing coefficient.
fn add_key(out: &mut FixedElement, mu: &RTuple, q: u32, j: i64, value: Coeff) -> Result<()> {
    if value.is_zero() {
        return Ok(());
    }
    if j < 0 {
        return Err(Error::Precondition(format!("negative part {j}")));
    }
    out.add_term(mu.with_part(q, j as u32)?, value);
    Ok(())
}

/// Closed-form reduction of `m̄_{(a,b,c) λ (0,1,0)^{|λ|+a−b}}` for `a ≥ b > 0`,
/// summing the pivot coefficient over `μ ≤ λ` with `l(λ)−l(μ) ≤ b+P`.
pub fn pivot_expansion(a: u32, b: u32, c: u32, lambda: &RTuple) -> Result<FixedElement> {
    check_triple(a, b, c, lambda.r())?;
    if !(a >= b && b > 0) {
        return Err(Error::Precondition(format!(
            "need a ≥ b > 0, got a={a} b={b}"
        )));
    }
    let mut out = FixedElement::zero(lambda.r());
    for mu in lambda.lower_set() {
        let split = carry_split(c, lambda, &mu)?;
        let dl = lambda.len() as i64 - mu.len() as i64;
        if dl > b as i64 + split.quotient as i64 {
            continue;
        }
        let j = lambda.size() as i64 - mu.size() as i64 + a as i64 + split.quotient as i64;
        let d = pivot_coefficient(a, b, c, lambda, &mu)?;
        add_key(&mut out, &mu, split.remainder, j, d)?;
    }
    Ok(out)
}

/// Closed-form expansion of `m̄_{(a,b,c) λ (0,1,0)^{|λ|+a−b}}` as a double sum
/// over `μ ≤ λ` and `μ ≤ ν ≤ λ`.
///
/// The raw double sum counts the triple `(a,b,c)` as a marked site, which
/// produces `u · m̄` where `u` is the multiplicity of `(a,b,c)` in the source
/// tri-partition; the result is divided by `u`.
pub fn closed_form_expansion(a: u32, b: u32, c: u32, lambda: &RTuple) -> Result<FixedElement> {
    let source = expansion_source(a, b, c, lambda)?;
    let u = source.multiplicity(&Triple { a, b, c });
    let (ls, ll) = (lambda.size() as i64, lambda.len() as i64);
    let ab = a as i64 - b as i64;
    let mut out = FixedElement::zero(lambda.r());
    for mu in lambda.lower_set() {
        let split = carry_split(c, lambda, &mu)?;
        let p = split.quotient as i64;
        let j = ls - mu.size() as i64 + a as i64 + p;
        let x = a as i64 + p + ls;
        let mut inner = Coeff::zero();
        for nu in lambda.lower_set() {
            if !mu.dominated_by(&nu)? || nu.size() as i64 > ls + ab + p {
                continue;
            }
            let f = match transfer_coefficient(&mu, &nu, x) {
                Ok(f) => f,
                Err(Error::NegativeFactorial(_)) => continue,
                Err(e) => return Err(e),
            };
            let top = ll + ls - nu.len() as i64 - nu.size() as i64 + ab + p;
            let bot = ls - nu.size() as i64 + ab + p;
            if top < 0 || bot < 0 {
                continue;
            }
            let frac = Coeff::new(
                factorial(top)?,
                factorial(bot)? * gap_factorials(lambda, &nu),
            );
            inner += sign(nu.len() as i64 + ll + b as i64 + p) * f * frac;
        }
        let beta = if j >= 0 {
            mu.multiplicity(split.remainder, j as u32)
        } else {
            0
        };
        let value = inner * Coeff::from_integer(BigInt::from(beta + 1));
        add_key(&mut out, &mu, split.remainder, j, value)?;
    }
    Ok(out.scale(&Coeff::new(BigInt::one(), BigInt::from(u))))
}

/// Which reading of the closed-form product formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductReading {
    /// The linear factor `a + 1 + |λ| − |μ|`, which matches the engine on all
    /// carry-free inputs.
    #[default]
    SizeDifference,
    /// The alternative linear factor `a + 1 + |λ| + |μ|`, kept for comparison.
    SizeSum,
}

/// Closed-form product `m̄_{(a,a,c)} · m̄_{λ(0,1,0)^{|λ|}}` summed over `μ ≤ λ`
/// with no carry and `l(λ) − l(μ) ≤ a + 1`.
pub fn closed_form_product_with(
    a: u32,
    c: u32,
    lambda: &RTuple,
    reading: ProductReading,
) -> Result<FixedElement> {
    check_triple(a, a, c, lambda.r())?;
    let ls = lambda.size() as i64;
    let mut out = FixedElement::zero(lambda.r());
    for mu in lambda.lower_set() {
        let split = carry_split(c, lambda, &mu)?;
        let dl = lambda.len() as i64 - mu.len() as i64;
        if split.quotient != 0 || dl > a as i64 + 1 {
            continue;
        }
        let j = ls - mu.size() as i64 + a as i64;
        let linear = match reading {
            ProductReading::SizeDifference => a as i64 + 1 + ls - mu.size() as i64,
            ProductReading::SizeSum => a as i64 + 1 + ls + mu.size() as i64,
        };
        let beta = mu.multiplicity(split.remainder, j as u32) as i64;
        let num = factorial(a as i64)? * BigInt::from(linear * (beta + 1));
        let den = factorial(a as i64 - dl + 1)? * gap_factorials(lambda, &mu);
        add_key(
            &mut out,
            &mu,
            split.remainder,
            j,
            sign(a as i64) * Coeff::new(num, den),
        )?;
    }
    Ok(out)
}

/// [`closed_form_product_with`] under the size-difference reading.
pub fn closed_form_product(a: u32, c: u32, lambda: &RTuple) -> Result<FixedElement> {
    closed_form_product_with(a, c, lambda, ProductReading::SizeDifference)
}

/// Whether every key `ν` of `x` has `|ν| + l(ν) ≥ |λ| + l(λ)`.
pub fn respects_filtration(x: &FixedElement, lambda: &RTuple) -> bool {
    x.terms().keys().all(|nu| nu.span() >= lambda.span())
}

/// The filtration property of the closed-form product `m̄_{(a,a,c)} · m̄_{canon(λ)}`.
pub fn filtration_holds(a: u32, c: u32, lambda: &RTuple) -> Result<bool> {
    Ok(respects_filtration(
        &closed_form_product(a, c, lambda)?,
        lambda,
    ))
}

/// True when no `μ ≤ λ` produces a carry for the shift `c`, which is exactly
/// the domain on which the closed forms are exact.
pub fn is_carry_free(c: u32, lambda: &RTuple) -> bool {
    lambda
        .lower_set()
        .iter()
        .all(|mu| carry_split(c, lambda, mu).is_ok_and(|s| s.quotient == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn rt(r: u32, comps: &[&[u32]]) -> RTuple {
        let v: Vec<Vec<u32>> = comps.iter().map(|c| c.to_vec()).collect();
        RTuple::from_parts(r, &v).unwrap()
    }

    fn tp(ts: &[(u32, u32, u32)]) -> TriPartition {
        TriPartition::from_triples(ts.iter().map(|&(a, b, c)| Triple { a, b, c }))
    }

    fn single(lambda: RTuple, c: i64) -> FixedElement {
        FixedElement::basis(lambda).scale(&int(c))
    }

    #[test]
    fn off_diagonal_generators_vanish() {
        let red = Reducer::new(2);
        assert!(red
            .reduce_tripartition(&tp(&[(1, 0, 0)]))
            .unwrap()
            .is_zero());
        assert!(red
            .reduce_tripartition(&tp(&[(0, 2, 1)]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn diagonal_generator_is_a_signed_basis_vector() {
        for r in 1..=3 {
            let red = Reducer::new(r);
            for a in 0..=3u32 {
                for c in 0..r {
                    if (a, c) == (0, 0) {
                        continue;
                    }
                    let got = red.reduce_tripartition(&tp(&[(a, a, c)])).unwrap();
                    let key = RTuple::empty(r).with_part(c, a).unwrap();
                    let s = if a % 2 == 0 { 1 } else { -1 };
                    assert_eq!(got, single(key, s), "r={r} a={a} c={c}");
                }
            }
        }
    }

    #[test]
    fn canonical_keys_reduce_to_themselves() {
        for r in 1..=3 {
            let red = Reducer::new(r);
            for k in 0..=5 {
                for lambda in rtuples_of_weight(r, k) {
                    let got = red
                        .reduce_tripartition(&canon_tripartition(&lambda))
                        .unwrap();
                    assert_eq!(got, FixedElement::basis(lambda));
                }
            }
        }
    }

    #[test]
    fn square_of_z_with_carry() {
        // z^2 = xy for r = 2: the carry term contributes −[λ_0=(1)].
        let red = Reducer::new(2);
        let z = rt(2, &[&[], &[0]]);
        let got = red.multiply_canonical(0, 1, &z).unwrap();
        let mut want = single(rt(2, &[&[], &[0, 0]]), 2);
        want.add_term(rt(2, &[&[1]]), int(-1));
        assert_eq!(got, want);
        // the closed form only sees the carry-free part
        assert_eq!(
            closed_form_product(0, 1, &z).unwrap(),
            single(rt(2, &[&[], &[0, 0]]), 2)
        );
        assert!(!is_carry_free(1, &z));
    }

    #[test]
    fn rank_one_product_example() {
        let red = Reducer::new(1);
        let lam = rt(1, &[&[1]]);
        let mut want = single(rt(1, &[&[1, 1]]), -2);
        want.add_term(rt(1, &[&[2]]), int(-3));
        assert_eq!(red.multiply_canonical(1, 0, &lam).unwrap(), want);
        assert_eq!(closed_form_product(1, 0, &lam).unwrap(), want);
        let mut size_sum = single(rt(1, &[&[1, 1]]), -4);
        size_sum.add_term(rt(1, &[&[2]]), int(-3));
        assert_eq!(
            closed_form_product_with(1, 0, &lam, ProductReading::SizeSum).unwrap(),
            size_sum
        );
        assert!(filtration_holds(1, 0, &lam).unwrap());
    }

    #[test]
    fn closed_forms_base_cases() {
        for r in 1..=3 {
            for a in 0..3u32 {
                for c in 0..r {
                    if (a, c) == (0, 0) {
                        continue;
                    }
                    let key = RTuple::empty(r).with_part(c, a).unwrap();
                    let s = if a % 2 == 0 { 1 } else { -1 };
                    let got = closed_form_expansion(a, a, c, &RTuple::empty(r)).unwrap();
                    assert_eq!(got, single(key.clone(), s));
                    let prod = closed_form_product(a, c, &RTuple::empty(r)).unwrap();
                    assert_eq!(prod, single(key, s));
                }
            }
        }
    }

    #[test]
    fn closed_form_with_b_zero_is_the_source_key() {
        let lam = rt(2, &[&[2], &[1, 0]]);
        let got = closed_form_expansion(1, 0, 1, &lam).unwrap();
        assert_eq!(got, FixedElement::basis(lam.with_part(1, 1).unwrap()));
    }

    #[test]
    fn closed_form_matches_engine_on_a_zero_part() {
        let red = Reducer::new(2);
        let lam = rt(2, &[&[], &[0]]);
        let source = expansion_source(1, 1, 0, &lam).unwrap();
        assert_eq!(
            closed_form_expansion(1, 1, 0, &lam).unwrap(),
            red.reduce_tripartition(&source).unwrap()
        );
    }

    #[test]
    fn pivot_expansion_matches_engine_without_carries() {
        let red = Reducer::new(1);
        for lambda in crate::partitions::enumerate_fixed_basis(1, 4) {
            for a in 1..=2 {
                for b in 1..=a {
                    let source = expansion_source(a, b, 0, &lambda).unwrap();
                    assert_eq!(
                        pivot_expansion(a, b, 0, &lambda).unwrap(),
                        red.reduce_tripartition(&source).unwrap(),
                        "λ={lambda} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration_counts() {
        // degree 4, r = 1: weight-zero multisets of triples with a+b ≤ 4
        let m = monomials_of_degree(1, 4);
        assert!(m.iter().all(|t| t.degree(1) == 4 && t.torus_weight() == 0));
        assert!(m.contains(&tp(&[(2, 2, 0)])));
        assert!(m.contains(&tp(&[(1, 0, 0), (0, 1, 0), (0, 1, 0), (1, 0, 0)])));
        let mut sorted = m.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), m.len());
    }

    #[test]
    fn display_uses_signs_between_terms() {
        let mut x = single(rt(1, &[&[1]]), -1);
        assert_eq!(x.to_string(), "−1 · [λ_0=(1)]");
        x.add_term(rt(1, &[&[2]]), Coeff::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(x.to_string(), "−1 · [λ_0=(1)] + 3/2 · [λ_0=(2)]");
        assert_eq!(FixedElement::zero(2).to_string(), "0");
    }
}
