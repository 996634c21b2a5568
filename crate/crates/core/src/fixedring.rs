//! The finite-`n` fixed-point ring as a truncation of `S/J`.
//!
//! Keys with `|λ| + l(λ) > n` are images of `m_Λ` with `l(Λ) > n`, which vanish
//! once only `n` sites are present. Products are computed in `S/J` and then
//! truncated.

use num_traits::Zero;

use crate::arith::Coeff;
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::linalg::DenseMatrix;
use crate::partitions::{enumerate_fixed_basis, rtuple_degree, RTuple, Triple};
use crate::quotient::{closed_form_product_with, FixedElement, ProductReading, Reducer};

/// An element of the truncated ring; every key satisfies `|λ| + l(λ) ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedElement {
    element: FixedElement,
    n: u32,
}

impl TruncatedElement {
    pub fn element(&self) -> &FixedElement {
        &self.element
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn into_element(self) -> FixedElement {
        self.element
    }
}

pub fn truncate(x: &FixedElement, n: u32) -> TruncatedElement {
    TruncatedElement {
        element: x.filter(|k| k.span() <= n),
        n,
    }
}

/// Graded dimensions of the truncated ring up to degree `2·k_max`.
pub fn hilbert_series(r: u32, n: u32, k_max: u64) -> GradedDims {
    let mut g = GradedDims::new(r, n);
    for lambda in enumerate_fixed_basis(r, n) {
        let d = rtuple_degree(&lambda);
        if d <= 2 * k_max {
            g.add(d, 1);
        }
    }
    g
}

/// How products by `m̄_{(a,a,c)}` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductRule {
    /// The product rule in `S` followed by exact reduction.
    #[default]
    Engine,
    /// The closed-form product formula, which ignores carries.
    ClosedForm(ProductReading),
}

/// Matrix of multiplication by `m̄_{(a,a,c)}` on the canonical basis of the truncated ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultMatrix {
    /// Row and column labels, in [`enumerate_fixed_basis`] order.
    pub basis: Vec<RTuple>,
    /// `entries[row][col]`: coefficient of `basis[row]` in the image of `basis[col]`.
    pub entries: DenseMatrix,
}

impl MultMatrix {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// The image of basis vector `col` as an element.
    pub fn column(&self, col: usize) -> FixedElement {
        let r = self.basis.first().map_or(1, RTuple::r);
        let mut x = FixedElement::zero(r);
        for (row, label) in self.basis.iter().enumerate() {
            x.add_term(label.clone(), self.entries[row][col].clone());
        }
        x
    }
}

/// Image of `m̄_{canon(λ)}` under multiplication by `m̄_{(a,a,c)}`, truncated at `n`.
pub fn multiply_truncated(
    reducer: &Reducer,
    n: u32,
    a: u32,
    c: u32,
    lambda: &RTuple,
    rule: ProductRule,
) -> Result<TruncatedElement> {
    let full = match rule {
        ProductRule::Engine => reducer.multiply_canonical(a, c, lambda)?,
        ProductRule::ClosedForm(reading) => closed_form_product_with(a, c, lambda, reading)?,
    };
    Ok(truncate(&full, n))
}

/// [`mult_matrix`] with an explicit reducer and product rule.
pub fn mult_matrix_with(
    reducer: &Reducer,
    n: u32,
    a: u32,
    c: u32,
    rule: ProductRule,
) -> Result<MultMatrix> {
    let r = reducer.r();
    Triple { a, b: a, c }.validate(r)?;
    let basis = enumerate_fixed_basis(r, n);
    let dim = basis.len();
    let mut entries: DenseMatrix = vec![vec![Coeff::zero(); dim]; dim];
    let index: std::collections::BTreeMap<&RTuple, usize> =
        basis.iter().enumerate().map(|(i, l)| (l, i)).collect();
    for (col, lambda) in basis.iter().enumerate() {
        let image = multiply_truncated(reducer, n, a, c, lambda, rule)?;
        for (key, v) in image.element().terms() {
            let row = *index.get(key).ok_or_else(|| {
                Error::Precondition(format!("product key {key} is outside the truncated basis"))
            })?;
            entries[row][col] = v.clone();
        }
    }
    Ok(MultMatrix { basis, entries })
}

/// Multiplication by `m̄_{(a,a,c)}` on the truncated ring, via the engine.
pub fn mult_matrix(r: u32, n: u32, a: u32, c: u32) -> Result<MultMatrix> {
    mult_matrix_with(&Reducer::new(r), n, a, c, ProductRule::Engine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn rt(r: u32, comps: &[&[u32]]) -> RTuple {
        let v: Vec<Vec<u32>> = comps.iter().map(|c| c.to_vec()).collect();
        RTuple::from_parts(r, &v).unwrap()
    }

    #[test]
    fn truncation_boundary() {
        let mut x = FixedElement::basis(rt(1, &[&[1]]));
        x.add_term(rt(1, &[&[1, 1]]), int(3));
        let t = truncate(&x, 2);
        assert_eq!(t.element(), &FixedElement::basis(rt(1, &[&[1]])));
        assert!(truncate(&FixedElement::zero(1), 5).element().is_zero());
    }

    #[test]
    fn small_hilbert_series() {
        for r in 1..=4u32 {
            let g = hilbert_series(r, 1, 10);
            assert_eq!(
                g.series(),
                (0..r as u64).map(|i| (2 * i, 1)).collect::<Vec<_>>()
            );
        }
        assert_eq!(hilbert_series(1, 2, 10).series(), vec![(0, 1), (2, 1)]);
        assert_eq!(
            hilbert_series(2, 2, 10).series(),
            vec![(0, 1), (2, 1), (4, 2), (6, 1)]
        );
    }

    #[test]
    fn hilbert_scheme_matrix() {
        let m = mult_matrix(1, 2, 1, 0).unwrap();
        assert_eq!(
            m.column(0),
            FixedElement::basis(rt(1, &[&[1]])).scale(&int(-1))
        );
        assert!(m.column(1).is_zero());
    }

    #[test]
    fn multiplication_by_z() {
        let m = mult_matrix(2, 1, 0, 1).unwrap();
        assert_eq!(m.basis, vec![RTuple::empty(2), rt(2, &[&[], &[0]])]);
        assert_eq!(m.column(0), FixedElement::basis(rt(2, &[&[], &[0]])));
        assert!(m.column(1).is_zero());
    }

    #[test]
    fn high_degree_generator_acts_by_zero() {
        for (r, n) in [(1u32, 2u32), (2, 2), (3, 1)] {
            let top = 2 * (r * n - 1) as u64;
            for a in 0..=n + 1 {
                for c in 0..r {
                    if (a, c) == (0, 0) || 2 * (r * a + c) as u64 <= top {
                        continue;
                    }
                    assert!(mult_matrix(r, n, a, c).unwrap().is_zero());
                }
            }
        }
    }
}
