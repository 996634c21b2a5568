//! Exact reduction modulo `J` against the brute-force solver in `n` sites.

mod common;

use common::tripartitions_up_to;
use hikita_core::fixedring::{mult_matrix_with, ProductRule};
use hikita_core::oracle::{OracleConfig, OracleReducer};
use hikita_core::partitions::{canon_tripartition, enumerate_fixed_basis, rtuples_of_weight};
use hikita_core::quotient::monomials_of_degree;
use hikita_core::symfun::generator_product;
use hikita_core::{FixedElement, Reducer, TriPartition, Triple};
use proptest::prelude::*;

/// Enough sites that no canonical key of this degree and no monomial is truncated.
fn sites_for(r: u32, degree: u64, monomials: &[TriPartition]) -> u32 {
    let span = if degree.is_multiple_of(2) {
        rtuples_of_weight(r, degree / 2)
            .iter()
            .map(|l| l.span())
            .max()
            .unwrap_or(0)
    } else {
        0
    };
    let len = monomials.iter().map(|m| m.len()).max().unwrap_or(0);
    span.max(len).max(1)
}

fn engine_matches_oracle(r: u32, degree: u64) {
    let red = Reducer::new(r);
    let monomials = monomials_of_degree(r, degree);
    let n = sites_for(r, degree, &monomials);
    let mut oracle = OracleReducer::new(r, n, OracleConfig::default());
    for lambda in &monomials {
        let exact = red.reduce_tripartition(lambda).unwrap();
        let brute = oracle.reduce(lambda).unwrap();
        assert_eq!(exact, brute, "r={r} Λ={lambda} in {n} sites");
    }
}

#[test]
fn reductions_match_oracle_rank_one() {
    for degree in 0..=10 {
        engine_matches_oracle(1, degree);
    }
}

#[test]
#[ignore = "about a minute and a half in release mode"]
fn reductions_match_oracle_rank_one_degree_twelve() {
    engine_matches_oracle(1, 12);
}

#[test]
fn reductions_match_oracle_rank_two() {
    for degree in 0..=12 {
        engine_matches_oracle(2, degree);
    }
}

#[test]
fn off_diagonal_weight_reduces_to_zero() {
    for r in 1..=3u32 {
        let red = Reducer::new(r);
        for lambda in tripartitions_up_to(r, 8) {
            if lambda.torus_weight() != 0 {
                assert!(
                    red.reduce_tripartition(&lambda).unwrap().is_zero(),
                    "Λ={lambda}"
                );
            }
        }
    }
}

#[test]
fn multiplication_matrices_match_oracle() {
    for (r, n) in [(1u32, 2u32), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let red = Reducer::new(r);
        let mut oracle = OracleReducer::new(r, n, OracleConfig::default());
        for a in 0..=n {
            for c in 0..r {
                if (a, c) == (0, 0) {
                    continue;
                }
                let m = mult_matrix_with(&red, n, a, c, ProductRule::Engine).unwrap();
                for (col, lambda) in m.basis.iter().enumerate() {
                    let g = Triple { a, b: a, c };
                    let mut brute = FixedElement::zero(r);
                    for (key, mult) in generator_product(g, &canon_tripartition(lambda), r) {
                        let x = oracle.reduce(&key).unwrap();
                        brute.add_scaled(&x, &hikita_core::arith::int(mult as i64));
                    }
                    assert_eq!(m.column(col), brute, "r={r} n={n} a={a} c={c} λ={lambda}");
                }
            }
        }
    }
}

#[test]
fn multiplication_raises_degree_by_the_generator() {
    for (r, n) in [(1u32, 4u32), (2, 3), (3, 2)] {
        let red = Reducer::new(r);
        for a in 0..=n {
            for c in 0..r {
                if (a, c) == (0, 0) {
                    continue;
                }
                let m = mult_matrix_with(&red, n, a, c, ProductRule::Engine).unwrap();
                let shift = 2 * (r * a + c) as u64;
                for (col, lambda) in m.basis.iter().enumerate() {
                    if let Some(d) = m.column(col).homogeneous_degree() {
                        assert_eq!(d, hikita_core::partitions::rtuple_degree(lambda) + shift);
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_combinations_are_fixed() {
    for r in 1..=3u32 {
        let red = Reducer::new(r);
        for lambda in enumerate_fixed_basis(r, 4) {
            let x = red
                .reduce_tripartition(&canon_tripartition(&lambda))
                .unwrap();
            assert_eq!(x, FixedElement::basis(lambda));
        }
    }
}

fn arb_monomial() -> impl Strategy<Value = (u32, TriPartition)> {
    (1u32..=3, 0u64..=6).prop_flat_map(|(r, k)| {
        let monos = monomials_of_degree(r, 2 * k);
        (Just(r), proptest::sample::select(monos))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_preserves_degree((r, lambda) in arb_monomial()) {
        let red = Reducer::new(r);
        let x = red.reduce_tripartition(&lambda).unwrap();
        for key in x.terms().keys() {
            prop_assert_eq!(hikita_core::partitions::rtuple_degree(key), lambda.degree(r));
        }
    }

    #[test]
    fn reduction_is_idempotent((r, lambda) in arb_monomial()) {
        let red = Reducer::new(r);
        let x = red.reduce_tripartition(&lambda).unwrap();
        let mut again = FixedElement::zero(r);
        for (key, c) in x.terms() {
            again.add_scaled(&red.reduce_tripartition(&canon_tripartition(key)).unwrap(), c);
        }
        prop_assert_eq!(again, x);
    }
}
