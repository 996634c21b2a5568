//! `hw`: bases, graded dimensions, reductions and verification reports for
//! the torus-fixed locus of `C^{2n}/((Z/rZ) ≀ S_n)`.

mod output;
mod parse;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hikita_core::betti::{betti_count, betti_gf, default_k_max, verify_hikita, OracleSeries};
use hikita_core::coeffs::{identity_sweep, IdentityRanges, IdentityTally};
use hikita_core::fixedring::{hilbert_series, multiply_truncated, truncate, ProductRule};
use hikita_core::oracle::{oracle_hilbert, OracleConfig, DEFAULT_CAP};
use hikita_core::partitions::{enumerate_fixed_basis, rtuple_degree};
use hikita_core::quotient::ProductReading;
use hikita_core::{GradedDims, Reducer};
use serde_json::{json, Value};
use thiserror::Error;

use output::{
    checks_table, element_csv, element_json, rtuple_json, series_csv, CheckOut, Meta, Report,
    SeriesOut, VerdictOut,
};
use parse::{parse_rtuple, parse_tripartition, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "hw",
    version,
    about = "Fixed-point rings of wreath-product quotients and their Betti numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Maximum number of monomial orbits the brute-force oracle may enumerate per block.
    #[arg(long, env = "HW_CAP_MONOMIALS", default_value_t = DEFAULT_CAP, global = true)]
    cap_monomials: usize,

    /// Report wall time (in a separate metadata field for JSON, on stderr otherwise).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Copy)]
struct RankAndSites {
    /// Order of the cyclic group.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    /// Number of points.
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the canonical basis of the fixed-point ring with degrees.
    Basis {
        #[command(flatten)]
        rn: RankAndSites,
    },
    /// Graded dimensions from one computation path.
    Series {
        #[command(flatten)]
        rn: RankAndSites,
        /// Largest cohomological degree reported (default: one step past the top degree).
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long, value_enum, default_value_t = Source::Engine)]
        source: Source,
    },
    /// Compare the fixed-point series with the Betti numbers of the moduli space.
    Verify {
        #[command(flatten)]
        rn: RankAndSites,
        #[arg(long)]
        max_degree: Option<u64>,
        /// Also compute the series by brute force in n sites.
        #[arg(long)]
        with_oracle: bool,
    },
    /// Exhaustive checks of the coefficient identities.
    Identities {
        #[arg(long, default_value_t = IdentityRanges::default().r_max)]
        r_max: u32,
        #[arg(long, default_value_t = IdentityRanges::default().size_max)]
        size_max: u32,
        #[arg(long, default_value_t = IdentityRanges::default().len_max)]
        len_max: u32,
        #[arg(long, default_value_t = IdentityRanges::default().x_max)]
        x_max: i64,
        #[arg(long, default_value_t = IdentityRanges::default().entries_len_max)]
        entries_len_max: usize,
        #[arg(long, default_value_t = IdentityRanges::default().entry_max)]
        entry_max: u32,
    },
    /// Reduce a monomial `m[(a,b,c)...]` to canonical coordinates.
    Reduce {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Drop keys that vanish with only n points.
        #[arg(long)]
        n: Option<u32>,
        expression: String,
    },
    /// Multiply the canonical element `[p0|p1|...]` by `m̄_{(a,a,c)}` in the n-point ring.
    Mul {
        #[command(flatten)]
        rn: RankAndSites,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, value_enum, default_value_t = Rule::Engine)]
        rule: Rule,
        lambda: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Engine,
    Oracle,
    BettiCount,
    BettiGf,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::Engine => "engine",
            Source::Oracle => "oracle",
            Source::BettiCount => "betti-count",
            Source::BettiGf => "betti-gf",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    /// Exact product followed by reduction.
    Engine,
    /// Closed-form product, corrected linear factor.
    ClosedForm,
    /// Closed-form product with the linear factor `a + 1 + |λ| + |μ|`.
    ClosedFormSizeSum,
}

impl From<Rule> for ProductRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Engine => ProductRule::Engine,
            Rule::ClosedForm => ProductRule::ClosedForm(ProductReading::SizeDifference),
            Rule::ClosedFormSizeSum => ProductRule::ClosedForm(ProductReading::SizeSum),
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] hikita_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use hikita_core::Error as E;
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(E::ResourceCap { .. }) => 3,
            CliError::Core(
                E::Precondition(_)
                | E::InvalidTriple { .. }
                | E::InvalidPartition(_)
                | E::RMismatch { .. },
            ) => 2,
            CliError::Core(_) => 1,
        }
    }
}

/// What a command produced, before rendering.
struct Outcome {
    json: Value,
    table: String,
    csv: String,
    failed: bool,
}

fn k_max_for(max_degree: Option<u64>, r: u32, n: u32) -> Result<u64, CliError> {
    match max_degree {
        None => Ok(default_k_max(r, n)),
        Some(d) if d % 2 == 0 => Ok(d / 2),
        Some(d) => Err(CliError::Usage(format!(
            "--max-degree must be even (all classes have even degree), got {d}"
        ))),
    }
}

fn series_table(label: &str, g: &GradedDims) -> String {
    let mut s = format!("{label} r={} n={}: {g}\n", g.r, g.n);
    s.push_str("degree  dim\n");
    for (d, m) in g.series() {
        s.push_str(&format!("{d:>6}  {m}\n"));
    }
    s
}

fn series_json(g: &GradedDims, source: &str) -> Value {
    serde_json::to_value(SeriesOut::new(g, source)).expect("plain data")
}

fn cmd_basis(rn: RankAndSites) -> Outcome {
    let basis = enumerate_fixed_basis(rn.r, rn.n);
    let mut table = format!(
        "r={} n={}: {} basis elements\ndegree  key\n",
        rn.r,
        rn.n,
        basis.len()
    );
    let mut csv = String::from("degree,key\n");
    let mut rows = Vec::new();
    for lambda in &basis {
        let d = rtuple_degree(lambda);
        table.push_str(&format!("{d:>6}  {lambda}\n"));
        csv.push_str(&format!("{d},\"{lambda}\"\n"));
        let mut row = rtuple_json(lambda);
        row["degree"] = d.into();
        rows.push(row);
    }
    let mut rep = Report::new("basis").param("r", rn.r).param("n", rn.n);
    rep.payload = json!({ "count": basis.len(), "basis": rows });
    Outcome {
        json: serde_json::to_value(rep).expect("plain data"),
        table,
        csv,
        failed: false,
    }
}

fn cmd_series(
    rn: RankAndSites,
    max_degree: Option<u64>,
    source: Source,
    cfg: &OracleConfig,
) -> Result<Outcome, CliError> {
    let k_max = k_max_for(max_degree, rn.r, rn.n)?;
    let g = match source {
        Source::Engine => hilbert_series(rn.r, rn.n, k_max),
        Source::Oracle => oracle_hilbert(rn.r, rn.n, k_max, cfg)?,
        Source::BettiCount => betti_count(rn.r, rn.n).truncated(2 * k_max),
        Source::BettiGf => betti_gf(rn.r, rn.n, k_max)?
            .pop()
            .expect("slice q^n exists"),
    };
    Ok(Outcome {
        json: series_json(&g, source.name()),
        table: series_table(source.name(), &g),
        csv: series_csv(&g.series()),
        failed: false,
    })
}

fn cmd_verify(
    rn: RankAndSites,
    max_degree: Option<u64>,
    with_oracle: bool,
    cfg: &OracleConfig,
) -> Result<Outcome, CliError> {
    let k_max = k_max_for(max_degree, rn.r, rn.n)?;
    let rep = verify_hikita(rn.r, rn.n, k_max, with_oracle.then_some(cfg))?;
    let (oracle_json, oracle_line) = match &rep.oracle {
        OracleSeries::NotRequested => (Value::Null, None),
        OracleSeries::Computed(g) => (series_json(g, "oracle"), Some(g.to_string())),
        OracleSeries::Skipped(why) => (
            json!({ "source": "oracle", "skipped": why }),
            Some(format!("skipped: {why}")),
        ),
    };
    let checks: Vec<CheckOut> = rep.checks.iter().map(CheckOut::from).collect();
    let mut table = format!("verify r={} n={} (degrees ≤ {})\n", rn.r, rn.n, 2 * k_max);
    let mut rows = vec![("engine", rep.engine.to_string())];
    if let Some(line) = oracle_line {
        rows.push(("oracle", line));
    }
    rows.push(("betti-count", rep.betti_count.to_string()));
    rows.push(("betti-gf", rep.betti_gf.to_string()));
    for (name, line) in rows {
        table.push_str(&format!("  {name:<11}  {line}\n"));
    }
    table.push_str("checks:\n");
    table.push_str(&checks_table(&checks));
    let failed = !rep.all_pass();
    table.push_str(if failed {
        "result: FAIL\n"
    } else {
        "result: pass\n"
    });

    let mut csv = String::from("check,verdict\n");
    for c in &checks {
        let v = serde_json::to_value(c.verdict).expect("plain data");
        csv.push_str(&format!(
            "{},{}\n",
            c.name,
            v.as_str().expect("string verdict")
        ));
    }

    let mut out = Report::new("verify")
        .param("r", rn.r)
        .param("n", rn.n)
        .param("max_degree", 2 * k_max)
        .param("with_oracle", with_oracle);
    if with_oracle {
        out = out.param("cap_monomials", cfg.cap);
    }
    out.checks = checks;
    out.payload = json!({
        "engine": series_json(&rep.engine, "engine"),
        "oracle": oracle_json,
        "betti_count": series_json(&rep.betti_count, "betti-count"),
        "betti_gf": series_json(&rep.betti_gf, "betti-gf"),
    });
    Ok(Outcome {
        json: serde_json::to_value(out).expect("plain data"),
        table,
        csv,
        failed,
    })
}

fn tally_check(name: &str, t: &IdentityTally) -> CheckOut {
    CheckOut {
        name: name.to_string(),
        verdict: if t.all_pass() {
            VerdictOut::Pass
        } else {
            VerdictOut::Fail
        },
        differing_degrees: Vec::new(),
    }
}

fn cmd_identities(ranges: IdentityRanges) -> Outcome {
    let rep = identity_sweep(&ranges);
    let tallies = [
        ("difference", &rep.difference),
        ("alternating-sum", &rep.alternating_sum),
        ("multinomial", &rep.multinomial),
    ];
    let mut table = String::from("identity         checked  passed  skipped\n");
    let mut csv = String::from("identity,checked,passed,skipped\n");
    let mut payload = serde_json::Map::new();
    let mut checks = Vec::new();
    for (name, t) in tallies {
        table.push_str(&format!(
            "{name:<15}  {:>7}  {:>6}  {:>7}\n",
            t.checked, t.passed, t.skipped
        ));
        for f in &t.failures {
            table.push_str(&format!("  failed: {f}\n"));
        }
        csv.push_str(&format!(
            "{name},{},{},{}\n",
            t.checked, t.passed, t.skipped
        ));
        payload.insert(
            name.to_string(),
            json!({ "checked": t.checked, "passed": t.passed, "skipped": t.skipped, "failures": t.failures }),
        );
        checks.push(tally_check(name, t));
    }
    table.push_str(&format!("total checked: {}\n", rep.total_checked()));
    payload.insert("total_checked".into(), rep.total_checked().into());
    let mut out = Report::new("identities")
        .param("r_max", ranges.r_max)
        .param("size_max", ranges.size_max)
        .param("len_max", ranges.len_max)
        .param("x_max", ranges.x_max)
        .param("entries_len_max", ranges.entries_len_max)
        .param("entry_max", ranges.entry_max);
    out.checks = checks;
    out.payload = Value::Object(payload);
    Outcome {
        failed: out.any_fail(),
        json: serde_json::to_value(out).expect("plain data"),
        table,
        csv,
    }
}

fn cmd_reduce(r: u32, n: Option<u32>, expression: &str) -> Result<Outcome, CliError> {
    let lambda = parse_tripartition(expression, r)?;
    let mut x = Reducer::new(r).reduce_tripartition(&lambda)?;
    if let Some(n) = n {
        x = truncate(&x, n).into_element();
    }
    let mut rep = Report::new("reduce")
        .param("r", r)
        .param("expression", lambda.to_string());
    if let Some(n) = n {
        rep = rep.param("n", n);
    }
    rep.payload = element_json(&x);
    Ok(Outcome {
        json: serde_json::to_value(rep).expect("plain data"),
        table: format!("{x}\n"),
        csv: element_csv(&x),
        failed: false,
    })
}

fn cmd_mul(
    rn: RankAndSites,
    a: u32,
    c: u32,
    rule: Rule,
    lambda: &str,
) -> Result<Outcome, CliError> {
    let lambda = parse_rtuple(lambda, rn.r)?;
    if lambda.span() > rn.n {
        return Err(CliError::Usage(format!(
            "{lambda} has |λ| + l(λ) = {} > n = {}, so it is zero in the {}-point ring",
            lambda.span(),
            rn.n,
            rn.n
        )));
    }
    let x =
        multiply_truncated(&Reducer::new(rn.r), rn.n, a, c, &lambda, rule.into())?.into_element();
    let rule_name = rule
        .to_possible_value()
        .expect("not skipped")
        .get_name()
        .to_string();
    let mut rep = Report::new("mul")
        .param("r", rn.r)
        .param("n", rn.n)
        .param("a", a)
        .param("c", c)
        .param("rule", rule_name)
        .param("lambda", lambda.to_string());
    rep.payload = element_json(&x);
    Ok(Outcome {
        json: serde_json::to_value(rep).expect("plain data"),
        table: format!("{x}\n"),
        csv: element_csv(&x),
        failed: false,
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = OracleConfig {
        cap: cli.cap_monomials,
    };
    match &cli.command {
        Command::Basis { rn } => Ok(cmd_basis(*rn)),
        Command::Series {
            rn,
            max_degree,
            source,
        } => cmd_series(*rn, *max_degree, *source, &cfg),
        Command::Verify {
            rn,
            max_degree,
            with_oracle,
        } => cmd_verify(*rn, *max_degree, *with_oracle, &cfg),
        Command::Identities {
            r_max,
            size_max,
            len_max,
            x_max,
            entries_len_max,
            entry_max,
        } => Ok(cmd_identities(IdentityRanges {
            r_max: *r_max,
            size_max: *size_max,
            len_max: *len_max,
            x_max: *x_max,
            entries_len_max: *entries_len_max,
            entry_max: *entry_max,
        })),
        Command::Reduce { r, n, expression } => cmd_reduce(*r, *n, expression),
        Command::Mul {
            rn,
            a,
            c,
            rule,
            lambda,
        } => cmd_mul(*rn, *a, *c, *rule, lambda),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    match cli.format {
        Format::Json => {
            let mut json = outcome.json;
            if cli.timing {
                json["meta"] = serde_json::to_value(Meta {
                    wall_time_ms: elapsed_ms,
                })
                .expect("plain data");
            }
            println!("{}", serde_json::to_string(&json).expect("plain data"));
        }
        Format::Table => print!("{}", outcome.table),
        Format::Csv => print!("{}", outcome.csv),
    }
    if cli.timing && cli.format != Format::Json {
        eprintln!("wall time: {elapsed_ms:.1} ms");
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
