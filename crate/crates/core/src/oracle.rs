//! Brute-force model of the fixed-point ring in `n` explicit sites.
//!
//! Each site carries variables `x, y, z` subject to `xy = z^r`; monomials are
//! kept in the normal form `min(a, b) = 0` with an unbounded `z` exponent.
//! Symmetric polynomials are combinations of orbit sums under `S_n`. An orbit
//! is stored as the sorted list of its `n` site monomials, padded with the
//! constant monomial.
//!
//! Nothing here uses the product rule or the reduction engine: the ideal is
//! generated directly by products of power sums with orbit sums, and the
//! coefficients of those products are counted site by site.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Coeff;
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::linalg::Echelon;
use crate::partitions::{canon_tripartition, rtuples_of_weight, RTuple, TriPartition, Triple};
use crate::quotient::FixedElement;

/// Default bound on the number of orbits enumerated for one block.
pub const DEFAULT_CAP: usize = 200_000;

/// `x^a y^b z^c` at a single site, in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl SiteMonomial {
    pub const ONE: SiteMonomial = SiteMonomial { a: 0, b: 0, c: 0 };

    /// Normal form of `x^a y^b z^c` using `xy = z^r`.
    pub fn normalized(a: u32, b: u32, c: u32, r: u32) -> Self {
        let m = a.min(b);
        Self {
            a: a - m,
            b: b - m,
            c: c + r * m,
        }
    }

    pub fn mul(self, other: SiteMonomial, r: u32) -> SiteMonomial {
        Self::normalized(self.a + other.a, self.b + other.b, self.c + other.c, r)
    }

    pub fn degree(&self, r: u32) -> u64 {
        r as u64 * (self.a + self.b) as u64 + 2 * self.c as u64
    }

    pub fn torus_weight(&self) -> i64 {
        self.a as i64 - self.b as i64
    }
}

impl fmt::Display for SiteMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}y^{}z^{}", self.a, self.b, self.c)
    }
}

/// Sorted site monomials of one orbit, length `n`.
pub type Orbit = Vec<SiteMonomial>;

/// Combination of orbit sums.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OraclePolynomial {
    terms: BTreeMap<Orbit, Coeff>,
}

impl OraclePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<Orbit, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, orbit: Orbit, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(orbit.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&orbit);
        }
    }
}

/// Limits for the brute-force computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of orbits enumerated for any single (degree, weight) block.
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

fn orbit_of(mut sites: Vec<SiteMonomial>, n: usize) -> Orbit {
    sites.resize(n, SiteMonomial::ONE);
    sites.sort();
    sites
}

/// `m_Λ` evaluated in `n` sites: a single orbit sum, or zero when `l(Λ) > n`.
pub fn specialize(lambda: &TriPartition, n: u32, r: u32) -> OraclePolynomial {
    let mut p = OraclePolynomial::zero();
    if lambda.len() > n {
        return p;
    }
    let sites: Vec<SiteMonomial> = lambda
        .triples()
        .map(|t| SiteMonomial::normalized(t.a, t.b, t.c, r))
        .collect();
    p.add_term(orbit_of(sites, n as usize), Coeff::one());
    p
}

/// Non-constant site monomials of degree exactly `degree`.
fn site_monomials_of_degree(r: u32, degree: u64) -> Vec<SiteMonomial> {
    let mut out = Vec::new();
    for c in 0..=(degree / 2) as u32 {
        let rest = degree - 2 * c as u64;
        if !rest.is_multiple_of(r as u64) {
            continue;
        }
        let e = (rest / r as u64) as u32;
        if e == 0 {
            if c > 0 {
                out.push(SiteMonomial { a: 0, b: 0, c });
            }
        } else {
            out.push(SiteMonomial { a: e, b: 0, c });
            out.push(SiteMonomial { a: 0, b: e, c });
        }
    }
    out.sort();
    out
}

/// Non-constant site monomials of degree at most `degree`.
fn site_monomials_up_to(r: u32, degree: u64) -> Vec<SiteMonomial> {
    let mut out: Vec<SiteMonomial> = (1..=degree)
        .flat_map(|d| site_monomials_of_degree(r, d))
        .collect();
    out.sort();
    out
}

/// All orbits in `n` sites with the given degree and torus weight.
pub fn orbits(r: u32, n: u32, degree: u64, weight: i64, cap: usize) -> Result<Vec<Orbit>> {
    let monos = site_monomials_up_to(r, degree);

    struct Ctx<'a> {
        monos: &'a [SiteMonomial],
        r: u32,
        n: usize,
        weight: i64,
        cap: usize,
        out: Vec<Orbit>,
    }

    fn rec(
        ctx: &mut Ctx,
        idx: usize,
        left: u64,
        slots: usize,
        w: i64,
        cur: &mut Vec<SiteMonomial>,
    ) -> Result<()> {
        // each unit of weight still missing costs at least r in degree
        if (ctx.weight - w).unsigned_abs() * ctx.r as u64 > left {
            return Ok(());
        }
        if left == 0 {
            if w == ctx.weight {
                if ctx.out.len() >= ctx.cap {
                    return Err(Error::ResourceCap {
                        what: "monomial orbits",
                        needed: ctx.out.len() + 1,
                        cap: ctx.cap,
                    });
                }
                ctx.out.push(orbit_of(cur.clone(), ctx.n));
            }
            return Ok(());
        }
        if idx == ctx.monos.len() || slots == 0 {
            return Ok(());
        }
        let m = ctx.monos[idx];
        let d = m.degree(ctx.r);
        let mut taken = 0;
        let (mut left_now, mut w_now) = (left, w);
        loop {
            rec(ctx, idx + 1, left_now, slots - taken, w_now, cur)?;
            if d > left_now || taken == slots {
                break;
            }
            left_now -= d;
            w_now += m.torus_weight();
            cur.push(m);
            taken += 1;
        }
        cur.truncate(cur.len() - taken);
        Ok(())
    }

    let mut ctx = Ctx {
        monos: &monos,
        r,
        n: n as usize,
        weight,
        cap,
        out: Vec::new(),
    };
    rec(&mut ctx, 0, degree, n as usize, 0, &mut Vec::new())?;
    let mut out = ctx.out;
    out.sort();
    Ok(out)
}

/// `p_g · m_orbit`, where `p_g = Σ_i g(site i)` is the power sum of `g`.
///
/// The coefficient of a target orbit `T` is the number of pairs (site `i`,
/// monomial `v`) with `g·v = T_i` such that `T` with `v` put back at site `i`
/// is a rearrangement of `orbit`.
pub fn power_sum_times_orbit(g: SiteMonomial, orbit: &Orbit, r: u32) -> OraclePolynomial {
    let mut out = OraclePolynomial::zero();
    let mut distinct = orbit.clone();
    distinct.dedup();
    let g_deg = g.degree(r);
    for v in distinct {
        let mut target = orbit.clone();
        let pos = target.iter().position(|&s| s == v).expect("v occurs");
        target[pos] = g.mul(v, r);
        target.sort();
        if out.terms.contains_key(&target) {
            continue;
        }
        let mut count: i64 = 0;
        for (i, &t_i) in target.iter().enumerate() {
            let Some(dv) = t_i.degree(r).checked_sub(g_deg) else {
                continue;
            };
            let preimages = if dv == 0 {
                vec![SiteMonomial::ONE]
            } else {
                site_monomials_of_degree(r, dv)
            };
            for pre in preimages {
                if g.mul(pre, r) != t_i {
                    continue;
                }
                let mut back = target.clone();
                back[i] = pre;
                back.sort();
                if &back == orbit {
                    count += 1;
                }
            }
        }
        out.add_term(target, Coeff::from_integer(count.into()));
    }
    out
}

/// Echelon form of the ideal in one (degree, weight) block, built from the
/// rows `p_g · m_Γ` with `a ≠ b`. Row generation stops early once the rank
/// reaches `full`, the dimension of the whole block, if one is given.
fn ideal_echelon(
    r: u32,
    n: u32,
    degree: u64,
    weight: i64,
    full: Option<usize>,
    cfg: &OracleConfig,
) -> Result<Echelon<Orbit>> {
    let mut ech = Echelon::new();
    for g in site_monomials_up_to(r, degree) {
        if g.a == g.b {
            continue;
        }
        let rest = degree - g.degree(r);
        for gamma in orbits(r, n, rest, weight - g.torus_weight(), cfg.cap)? {
            let p = power_sum_times_orbit(g, &gamma, r);
            if !p.is_zero() {
                ech.insert(p.terms);
                if Some(ech.rank()) == full {
                    return Ok(ech);
                }
            }
        }
    }
    Ok(ech)
}

/// Graded dimensions of the fixed-point ring in `n` sites, up to degree `2·k_max`.
pub fn oracle_hilbert(r: u32, n: u32, k_max: u64, cfg: &OracleConfig) -> Result<GradedDims> {
    let mut g = GradedDims::new(r, n);
    for k in 0..=k_max {
        let degree = 2 * k;
        let basis = orbits(r, n, degree, 0, cfg.cap)?;
        let ech = ideal_echelon(r, n, degree, 0, Some(basis.len()), cfg)?;
        g.add(degree, (basis.len() - ech.rank()) as u64);
    }
    Ok(g)
}

struct SolveBlock {
    echelon: Echelon<Orbit>,
    candidates: Vec<RTuple>,
}

/// Expresses elements in the images of the canonical basis, solved in `n`
/// sites. The echelon form of each (degree, weight) block is built once.
pub struct OracleReducer {
    r: u32,
    n: u32,
    cfg: OracleConfig,
    blocks: BTreeMap<(u64, i64), SolveBlock>,
}

impl OracleReducer {
    pub fn new(r: u32, n: u32, cfg: OracleConfig) -> Self {
        Self {
            r,
            n,
            cfg,
            blocks: BTreeMap::new(),
        }
    }

    fn block(&mut self, degree: u64, weight: i64) -> Result<&SolveBlock> {
        if !self.blocks.contains_key(&(degree, weight)) {
            let (r, n) = (self.r, self.n);
            let mut echelon = ideal_echelon(r, n, degree, weight, None, &self.cfg)?;
            let candidates: Vec<RTuple> = if weight == 0 && degree.is_multiple_of(2) {
                rtuples_of_weight(r, degree / 2)
                    .into_iter()
                    .filter(|l| l.span() <= n)
                    .collect()
            } else {
                Vec::new()
            };
            for (id, cand) in candidates.iter().enumerate() {
                let img = specialize(&canon_tripartition(cand), n, r);
                if !echelon.insert_tracked(img.terms, id) {
                    return Err(Error::Singular(format!(
                        "canonical image of {cand} is dependent in {n} sites"
                    )));
                }
            }
            self.blocks.insert(
                (degree, weight),
                SolveBlock {
                    echelon,
                    candidates,
                },
            );
        }
        Ok(&self.blocks[&(degree, weight)])
    }

    /// Coordinates of `m_Λ` over the canonical basis.
    ///
    /// Fails with [`Error::Singular`] if the canonical images of that degree
    /// are dependent modulo the ideal or if `m_Λ` is not in their span; both
    /// signal an `n` that is too small or a defect of the basis.
    pub fn reduce(&mut self, lambda: &TriPartition) -> Result<FixedElement> {
        lambda.validate(self.r)?;
        let (r, n) = (self.r, self.n);
        let block = self.block(lambda.degree(r), lambda.torus_weight())?;
        let target = specialize(lambda, n, r);
        let coords = block.echelon.express(target.terms).ok_or_else(|| {
            Error::Singular(format!(
                "{lambda} is outside the canonical span in {n} sites"
            ))
        })?;
        let mut out = FixedElement::zero(r);
        for (id, c) in coords {
            out.add_term(block.candidates[id].clone(), c);
        }
        Ok(out)
    }
}

/// One-shot form of [`OracleReducer::reduce`].
pub fn oracle_reduce(
    lambda: &TriPartition,
    r: u32,
    n: u32,
    cfg: &OracleConfig,
) -> Result<FixedElement> {
    OracleReducer::new(r, n, *cfg).reduce(lambda)
}

/// Convenience: the normal form of a triple as a site monomial.
pub fn site_of(t: Triple, r: u32) -> SiteMonomial {
    SiteMonomial::normalized(t.a, t.b, t.c, r)
}
