//! Elements of the invariant ring `S` in the monomial basis `m_Λ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{format_coeff, Coeff};
use crate::error::{Error, Result};
use crate::partitions::{TriPartition, Triple};

/// Adds two exponent triples, folding `z^r` into `xy` when the `c` part overflows.
pub fn compose(g: Triple, v: Triple, r: u32) -> Triple {
    let (a, b, c) = (g.a + v.a, g.b + v.b, g.c + v.c);
    if c >= r {
        Triple {
            a: a + 1,
            b: b + 1,
            c: c - r,
        }
    } else {
        Triple { a, b, c }
    }
}

/// `m_g · m_Λ` for a single generator and a single basis element.
///
/// Every coefficient is the multiplicity of the freshly created triple in the
/// resulting tri-partition, so all coefficients are positive integers. Terms
/// landing on the same key are merged.
pub fn generator_product(g: Triple, lambda: &TriPartition, r: u32) -> Vec<(TriPartition, u32)> {
    let mut out: BTreeMap<TriPartition, u32> = BTreeMap::new();

    let mut grown = lambda.clone();
    grown.insert(g);
    let u = grown.multiplicity(&g);
    *out.entry(grown).or_insert(0) += u;

    for (&v, _) in lambda.iter() {
        let w = compose(g, v, r);
        let mut merged = lambda.clone();
        merged.remove(&v);
        merged.insert(w);
        let u = merged.multiplicity(&w);
        *out.entry(merged).or_insert(0) += u;
    }
    out.into_iter().collect()
}

/// Finite rational combination of monomial symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymElement {
    r: u32,
    terms: BTreeMap<TriPartition, Coeff>,
}

impl SymElement {
    pub fn zero(r: u32) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `m_∅`.
    pub fn one(r: u32) -> Self {
        Self::monomial(TriPartition::empty(), r).expect("empty tri-partition is valid")
    }

    pub fn monomial(lambda: TriPartition, r: u32) -> Result<Self> {
        lambda.validate(r)?;
        let mut s = Self::zero(r);
        s.terms.insert(lambda, Coeff::one());
        Ok(s)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<TriPartition, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &TriPartition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Adds `c · m_Λ`, dropping the key if it cancels.
    pub fn add_term(&mut self, lambda: TriPartition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement> {
        if self.r != other.r {
            return Err(Error::RMismatch {
                left: self.r,
                right: other.r,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> SymElement {
        let mut out = Self::zero(self.r);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Degree of the first term, or `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degs = self.terms.keys().map(|k| k.degree(self.r));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// `m_g · x`.
    pub fn mul_generator(&self, g: Triple) -> Result<SymElement> {
        g.validate(self.r)?;
        let mut out = Self::zero(self.r);
        for (lambda, c) in &self.terms {
            for (key, u) in generator_product(g, lambda, self.r) {
                out.add_term(key, c * Coeff::from_integer(u.into()));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} · {}", format_coeff(c), k)?;
        }
        Ok(())
    }
}

/// `r(a+b) + 2c` summed over the triples of `Λ`.
pub fn tri_degree(lambda: &TriPartition, r: u32) -> u64 {
    lambda.degree(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn t(a: u32, b: u32, c: u32) -> Triple {
        Triple { a, b, c }
    }

    fn tp(ts: &[(u32, u32, u32)]) -> TriPartition {
        TriPartition::from_triples(ts.iter().map(|&(a, b, c)| t(a, b, c)))
    }

    #[test]
    fn generator_times_unit() {
        let x = SymElement::one(3).mul_generator(t(2, 1, 2)).unwrap();
        assert_eq!(x, SymElement::monomial(tp(&[(2, 1, 2)]), 3).unwrap());
    }

    #[test]
    fn z_overflow_branch() {
        let x = SymElement::monomial(tp(&[(1, 0, 1)]), 2)
            .unwrap()
            .mul_generator(t(0, 0, 1))
            .unwrap();
        let mut want = SymElement::zero(2);
        want.add_term(tp(&[(0, 0, 1), (1, 0, 1)]), int(1));
        want.add_term(tp(&[(2, 1, 0)]), int(1));
        assert_eq!(x, want);
    }

    #[test]
    fn square_of_power_sum() {
        let y = SymElement::monomial(tp(&[(0, 1, 0)]), 1).unwrap();
        let sq = y.mul_generator(Triple::Y).unwrap();
        let mut want = SymElement::zero(1);
        want.add_term(tp(&[(0, 1, 0), (0, 1, 0)]), int(2));
        want.add_term(tp(&[(0, 2, 0)]), int(1));
        assert_eq!(sq, want);
    }

    #[test]
    fn rejects_out_of_range_generator() {
        assert!(SymElement::one(2).mul_generator(t(0, 0, 2)).is_err());
        assert!(SymElement::one(2).mul_generator(t(0, 0, 0)).is_err());
    }

    #[test]
    fn diagonal_degree() {
        for r in 1..4 {
            for a in 0..3 {
                for c in 0..r {
                    if (a, c) == (0, 0) {
                        continue;
                    }
                    assert_eq!(
                        tri_degree(&tp(&[(a, a, c)]), r),
                        2 * (r as u64 * a as u64 + c as u64)
                    );
                }
            }
            assert_eq!(tri_degree(&tp(&[(0, 1, 0)]), r), r as u64);
        }
    }
}
