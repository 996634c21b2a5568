//! Closed-form coefficient functions and the combinatorial identities behind them.
//!
//! All evaluations are exact. A factorial of a negative integer is never
//! silently read as zero here; it surfaces as [`Error::NegativeFactorial`]
//! so callers can decide whether the input was admissible.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{factorial, inverse_factorial, sign, Coeff};
use crate::error::{Error, Result};
use crate::partitions::RTuple;

/// Euclidean split of `Σ_i i·(l(λ_i) − l(μ_i)) + c` by `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarrySplit {
    /// Number of times the `z`-exponent wraps around.
    pub quotient: u32,
    /// Resulting component index, in `0..r`.
    pub remainder: u32,
}

/// Splits `Σ_i i·(l(λ_i) − l(μ_i)) + c` as `quotient · r + remainder`.
pub fn carry_split(c: u32, lambda: &RTuple, mu: &RTuple) -> Result<CarrySplit> {
    let r = lambda.r();
    if mu.r() != r {
        return Err(Error::RMismatch {
            left: r,
            right: mu.r(),
        });
    }
    if c >= r {
        return Err(Error::Precondition(format!(
            "c = {c} must be below r = {r}"
        )));
    }
    let mut s = c as i64;
    for i in 0..r {
        let dl = lambda.component(i).len() as i64 - mu.component(i).len() as i64;
        s += i as i64 * dl;
    }
    if s < 0 {
        return Err(Error::Precondition(format!(
            "negative carry sum {s}: μ is not below λ"
        )));
    }
    Ok(CarrySplit {
        quotient: (s / r as i64) as u32,
        remainder: (s % r as i64) as u32,
    })
}

fn require_below(mu: &RTuple, lambda: &RTuple) -> Result<()> {
    if !mu.dominated_by(lambda)? {
        return Err(Error::Precondition(format!("{mu} is not below {lambda}")));
    }
    Ok(())
}

/// `Π_{i,j} (α_i^j − β_i^j)!` for `μ ≤ λ`.
pub(crate) fn gap_factorials(lambda: &RTuple, mu: &RTuple) -> BigInt {
    lambda
        .multiplicity_gaps(mu)
        .map(|g| factorial(g).expect("μ ≤ λ keeps gaps non-negative"))
        .product()
}

/// The coefficient with which the canonical key
/// `(|λ|−|μ|+a+P, 0, Q) μ (0,1,0)^{…}` occurs in the expansion of
/// `m̄_{(a,b,c) λ (0,1,0)^{|λ|+a−b}}` when `a ≥ b > 0`:
///
/// `(−1)^{b+P} (b+P)! (β_Q^{|λ|−|μ|+a+P} + 1) / ((b+P − (l(λ)−l(μ)))! Π(α−β)!)`.
pub fn pivot_coefficient(a: u32, b: u32, c: u32, lambda: &RTuple, mu: &RTuple) -> Result<Coeff> {
    require_below(mu, lambda)?;
    let split = carry_split(c, lambda, mu)?;
    let p = split.quotient as i64;
    let dl = lambda.len() as i64 - mu.len() as i64;
    let top = b as i64 + p;
    if top - dl < 0 {
        return Err(Error::Precondition(format!(
            "l(λ) − l(μ) = {dl} exceeds b + P = {top}"
        )));
    }
    let part = lambda.size() as i64 - mu.size() as i64 + a as i64 + p;
    let beta = mu.multiplicity(split.remainder, part as u32) as i64;
    let num = factorial(top)? * BigInt::from(beta + 1);
    let den = factorial(top - dl)? * gap_factorials(lambda, mu);
    let value = sign(top) * Coeff::new(num, den);
    assert!(
        value.is_integer(),
        "pivot coefficient {value} is not an integer"
    );
    Ok(value)
}

/// `f_ν^μ(x) = (x−|ν|)! (x−|μ|+1) / ((x−|ν|−l(ν)+l(μ)+1)! Π(γ−β)!)` for `μ ≤ ν`.
pub fn transfer_coefficient(mu: &RTuple, nu: &RTuple, x: i64) -> Result<Coeff> {
    require_below(mu, nu)?;
    let nu_size = nu.size() as i64;
    let lower = x - nu_size - nu.len() as i64 + mu.len() as i64 + 1;
    let num = factorial(x - nu_size)? * BigInt::from(x - mu.size() as i64 + 1);
    let den = factorial(lower)? * gap_factorials(nu, mu);
    Ok(Coeff::new(num, den))
}

/// Adds one part `j` to `μ_i`, for every `(i, j)` such that the result is
/// still below `ν`. Parts equal to zero are included for components `i ≥ 1`.
fn one_step_refinements(mu: &RTuple, nu: &RTuple) -> Vec<RTuple> {
    nu.distinct_parts()
        .into_iter()
        .filter(|&(i, j, m)| mu.multiplicity(i, j) < m)
        .map(|(i, j, _)| mu.with_part(i, j).expect("part exists in ν"))
        .collect()
}

/// `f_ν^μ(x+1) − f_ν^μ(x) = Σ_{i,j} f_ν^{μ ∪_i j}(x)`, evaluated on both sides.
///
/// Returns an error when some factorial in either side has a negative argument.
pub fn check_difference_identity(mu: &RTuple, nu: &RTuple, x: i64) -> Result<bool> {
    let lhs = transfer_coefficient(mu, nu, x + 1)? - transfer_coefficient(mu, nu, x)?;
    let mut rhs = Coeff::zero();
    for refined in one_step_refinements(mu, nu) {
        rhs += transfer_coefficient(&refined, nu, x)?;
    }
    Ok(lhs == rhs)
}

/// The alternating sum over `μ ≤ ν ≤ λ` of
/// `(−1)^{l(ν)+l(λ)} f_ν^μ(k+|λ|) (|λ|+l(λ)−|ν|−l(ν))! / ((|λ|−|ν|)! Π(α−γ)!)`
/// compared with `k! / ((k − l(λ) + l(μ))! Π(α−β)!)`.
pub fn check_alternating_sum_identity(lambda: &RTuple, mu: &RTuple, k: i64) -> Result<bool> {
    require_below(mu, lambda)?;
    let dl = lambda.len() as i64 - mu.len() as i64;
    if k < dl {
        return Err(Error::Precondition(format!(
            "k = {k} below l(λ) − l(μ) = {dl}"
        )));
    }
    let x = k + lambda.size() as i64;
    let span = lambda.span() as i64;
    let mut lhs = Coeff::zero();
    for nu in lambda.lower_set() {
        if !mu.dominated_by(&nu)? {
            continue;
        }
        let f = transfer_coefficient(mu, &nu, x)?;
        let num = factorial(span - nu.span() as i64)?;
        let den = factorial(lambda.size() as i64 - nu.size() as i64)? * gap_factorials(lambda, &nu);
        lhs += sign(nu.len() as i64 + lambda.len() as i64) * f * Coeff::new(num, den);
    }
    let rhs = Coeff::new(
        factorial(k)?,
        factorial(k - dl)? * gap_factorials(lambda, mu),
    );
    Ok(lhs == rhs)
}

/// `Σ_{i} (N−1)! / ((n_i−1)! Π_{j≠i} n_j!) = N! / Π n_j!` with `N = Σ n_j`.
///
/// Entries equal to zero contribute nothing to the left-hand side.
pub fn check_multinomial_identity(entries: &[u32]) -> Result<bool> {
    let total: i64 = entries.iter().map(|&e| e as i64).sum();
    if total == 0 {
        return Err(Error::Precondition(
            "at least one entry must be positive".into(),
        ));
    }
    let all: BigInt = entries
        .iter()
        .map(|&e| factorial(e as i64).expect("non-negative"))
        .product();
    let rhs = Coeff::new(factorial(total)?, all.clone());
    let mut lhs = Coeff::zero();
    for (pos, &e) in entries.iter().enumerate() {
        let mut term = inverse_factorial(e as i64 - 1) * Coeff::from_integer(factorial(total - 1)?);
        for (other, &f) in entries.iter().enumerate() {
            if other != pos {
                term *= inverse_factorial(f as i64);
            }
        }
        lhs += term;
    }
    Ok(lhs == rhs)
}

/// Ranges for the exhaustive identity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRanges {
    pub r_max: u32,
    /// Bound on `|ν|` and `|λ|`.
    pub size_max: u32,
    /// Bound on `l(ν)` and `l(λ)`; needed because zero parts do not raise size.
    pub len_max: u32,
    /// Largest `x` in the difference identity and `k` in the alternating sum.
    pub x_max: i64,
    /// Multinomial sweep: at most this many entries, each at most `entry_max`.
    pub entries_len_max: usize,
    pub entry_max: u32,
}

impl Default for IdentityRanges {
    fn default() -> Self {
        Self {
            r_max: 2,
            size_max: 3,
            len_max: 3,
            x_max: 8,
            entries_len_max: 4,
            entry_max: 4,
        }
    }
}

/// Per-identity tallies of a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityTally {
    pub checked: usize,
    pub passed: usize,
    /// Instances with an inadmissible factorial argument somewhere.
    pub skipped: usize,
    /// Human-readable description of the first few failures.
    pub failures: Vec<String>,
}

impl IdentityTally {
    fn record(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(true) => {
                self.checked += 1;
                self.passed += 1;
            }
            Ok(false) => {
                self.checked += 1;
                if self.failures.len() < 8 {
                    self.failures.push(describe());
                }
            }
            Err(_) => self.skipped += 1,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checked == self.passed
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub difference: IdentityTally,
    pub alternating_sum: IdentityTally,
    pub multinomial: IdentityTally,
}

impl IdentityReport {
    pub fn total_checked(&self) -> usize {
        self.difference.checked + self.alternating_sum.checked + self.multinomial.checked
    }

    pub fn all_pass(&self) -> bool {
        self.difference.all_pass() && self.alternating_sum.all_pass() && self.multinomial.all_pass()
    }
}

/// All r-tuples with `|λ| ≤ size_max` and `l(λ) ≤ len_max`.
pub fn bounded_rtuples(r: u32, size_max: u32, len_max: u32) -> Vec<RTuple> {
    crate::partitions::enumerate_fixed_basis(r, size_max + len_max)
        .into_iter()
        .filter(|t| t.size() <= size_max && t.len() <= len_max)
        .collect()
}

fn multinomial_inputs(len_max: usize, entry_max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(len_max: usize, entry_max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.iter().any(|&e| e > 0) {
            out.push(cur.clone());
        }
        if cur.len() == len_max {
            return;
        }
        for e in 0..=entry_max {
            cur.push(e);
            rec(len_max, entry_max, cur, out);
            cur.pop();
        }
    }
    rec(len_max, entry_max, &mut cur, &mut out);
    out
}

/// Runs the three identities over every instance in `ranges`.
pub fn identity_sweep(ranges: &IdentityRanges) -> IdentityReport {
    let mut report = IdentityReport::default();
    for r in 1..=ranges.r_max {
        let tuples = bounded_rtuples(r, ranges.size_max, ranges.len_max);
        for big_t in &tuples {
            for small in big_t.lower_set() {
                for x in 0..=ranges.x_max {
                    report
                        .difference
                        .record(check_difference_identity(&small, big_t, x), || {
                            format!("difference r={r} μ={small} ν={big_t} x={x}")
                        });
                    let dl = big_t.len() as i64 - small.len() as i64;
                    if x >= dl {
                        report
                            .alternating_sum
                            .record(check_alternating_sum_identity(big_t, &small, x), || {
                                format!("alternating r={r} λ={big_t} μ={small} k={x}")
                            });
                    }
                }
            }
        }
    }
    for entries in multinomial_inputs(ranges.entries_len_max, ranges.entry_max) {
        report
            .multinomial
            .record(check_multinomial_identity(&entries), || {
                format!("multinomial {entries:?}")
            });
    }
    report
}
