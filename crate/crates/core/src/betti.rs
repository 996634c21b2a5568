//! Betti numbers of the framed moduli space `M_{r,n}` of torsion-free sheaves
//! on the projective plane, and the comparison with the fixed-point ring.

use crate::error::{Error, Result};
use crate::fixedring::hilbert_series;
use crate::graded::GradedDims;
use crate::oracle::{oracle_hilbert, OracleConfig};
use crate::partitions::{enumerate_betti_tuples, Partition};

/// Which degree statistic to attach to an r-tuple of partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BettiStatistic {
    /// `Σ_i r(|μ_i| − l(μ_i)) + i·l(μ_i)`.
    #[default]
    Shifted,
    /// `Σ_i r|μ_i| + i·l(μ_i)`, which puts the class of `M_{1,1} = C²` in degree 2.
    Unshifted,
}

/// Half the cohomological degree of the class indexed by `μ`.
pub fn betti_statistic_with(mu: &[Partition], stat: BettiStatistic) -> u64 {
    let r = mu.len() as u64;
    mu.iter()
        .enumerate()
        .map(|(i, p)| {
            let (size, len) = (p.size() as u64, p.len() as u64);
            let base = match stat {
                BettiStatistic::Shifted => size - len,
                BettiStatistic::Unshifted => size,
            };
            r * base + i as u64 * len
        })
        .sum()
}

pub fn betti_statistic(mu: &[Partition]) -> u64 {
    betti_statistic_with(mu, BettiStatistic::Shifted)
}

/// `dim H^{2k}(M_{r,n})` for every `k`, by counting r-tuples of partitions of total size `n`.
pub fn betti_count_with(r: u32, n: u32, stat: BettiStatistic) -> GradedDims {
    let mut g = GradedDims::new(r, n);
    for mu in enumerate_betti_tuples(r, n) {
        g.add(2 * betti_statistic_with(&mu, stat), 1);
    }
    g
}

pub fn betti_count(r: u32, n: u32) -> GradedDims {
    betti_count_with(r, n, BettiStatistic::Shifted)
}

/// Expands `Π_{d≥1} Π_{i=0}^{r−1} (1 − t^{2(r(d−1)+i)} q^d)^{−1}` and returns the
/// `q^0, …, q^{n_max}` slices, truncated at `t^{2·k_max}`.
pub fn betti_gf(r: u32, n_max: u32, k_max: u64) -> Result<Vec<GradedDims>> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let (nq, nk) = (n_max as usize + 1, k_max as usize + 1);
    // coefficient of q^j t^{2k} at series[j][k]
    let mut series = vec![vec![0u128; nk]; nq];
    series[0][0] = 1;
    for d in 1..=n_max as usize {
        for i in 0..r as usize {
            let e = r as usize * (d - 1) + i;
            if e >= nk {
                continue;
            }
            // multiplying by 1/(1 − m) is the in-place prefix recurrence s += m·s
            for j in d..nq {
                for k in e..nk {
                    let add = series[j - d][k - e];
                    series[j][k] = series[j][k].checked_add(add).ok_or_else(|| {
                        Error::Precondition("generating-function coefficient overflow".into())
                    })?;
                }
            }
        }
    }
    Ok(series
        .into_iter()
        .enumerate()
        .map(|(n, row)| {
            let pairs = row.into_iter().enumerate().map(|(k, v)| {
                (
                    2 * k as u64,
                    u64::try_from(v).expect("fits after truncation"),
                )
            });
            GradedDims::from_pairs(r, n as u32, pairs)
        })
        .collect())
}

/// Outcome of one comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Not evaluated, e.g. because the oracle hit its resource cap.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Degrees at which the compared series differ.
    pub differing_degrees: Vec<u64>,
}

/// Status of the optional brute-force series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleSeries {
    NotRequested,
    Computed(GradedDims),
    Skipped(String),
}

/// Four computations of the same graded dimension and their pairwise verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HikitaReport {
    pub r: u32,
    pub n: u32,
    pub k_max: u64,
    pub engine: GradedDims,
    pub oracle: OracleSeries,
    pub betti_count: GradedDims,
    pub betti_gf: GradedDims,
    pub checks: Vec<Check>,
}

impl HikitaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn any_skipped(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Skip)
    }
}

fn compare(name: &str, a: &GradedDims, b: &GradedDims) -> Check {
    let diff = a.differing_degrees(b);
    Check {
        name: name.to_string(),
        verdict: if diff.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        differing_degrees: diff,
    }
}

fn skipped(name: &str) -> Check {
    Check {
        name: name.to_string(),
        verdict: Verdict::Skip,
        differing_degrees: Vec::new(),
    }
}

/// Compares the fixed-point Hilbert series with the Betti numbers of `M_{r,n}`
/// up to degree `2·k_max`. The oracle series is computed only when `oracle`
/// is given; a cap hit turns its checks into skips.
pub fn verify_hikita(
    r: u32,
    n: u32,
    k_max: u64,
    oracle: Option<&OracleConfig>,
) -> Result<HikitaReport> {
    let engine = hilbert_series(r, n, k_max);
    let count = betti_count(r, n).truncated(2 * k_max);
    let gf = betti_gf(r, n, k_max)?.pop().expect("slice q^n exists");
    let oracle = match oracle {
        None => OracleSeries::NotRequested,
        Some(cfg) => match oracle_hilbert(r, n, k_max, cfg) {
            Ok(g) => OracleSeries::Computed(g),
            Err(e @ Error::ResourceCap { .. }) => OracleSeries::Skipped(e.to_string()),
            Err(e) => return Err(e),
        },
    };
    let mut checks = vec![
        compare("engine=betti-count", &engine, &count),
        compare("engine=betti-gf", &engine, &gf),
        compare("betti-count=betti-gf", &count, &gf),
    ];
    match &oracle {
        OracleSeries::NotRequested => {}
        OracleSeries::Computed(o) => {
            checks.push(compare("engine=oracle", &engine, o));
            checks.push(compare("oracle=betti-count", o, &count));
        }
        OracleSeries::Skipped(_) => {
            checks.push(skipped("engine=oracle"));
            checks.push(skipped("oracle=betti-count"));
        }
    }
    Ok(HikitaReport {
        r,
        n,
        k_max,
        engine,
        oracle,
        betti_count: count,
        betti_gf: gf,
        checks,
    })
}

/// The default comparison range: one past the top degree `2(rn − 1)`.
pub fn default_k_max(r: u32, n: u32) -> u64 {
    (r as u64 * n as u64).max(1)
}
