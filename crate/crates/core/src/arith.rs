//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field of every algebraic object in the crate.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Ok(acc)
}

/// `1/n!`, with the convention `1/n! = 0` for negative `n`.
pub fn inverse_factorial(n: i64) -> Coeff {
    match factorial(n) {
        Ok(f) => BigRational::new(BigInt::one(), f),
        Err(_) => BigRational::zero(),
    }
}

pub fn sign(exponent: i64) -> Coeff {
    if exponent.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
