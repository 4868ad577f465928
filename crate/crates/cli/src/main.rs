use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use qdissect_core::analysis::{
    certified_zero_residues, hunt, observe_residue_behavior, parity_scan, predicted_even_residues,
    predicted_signs, predicted_zero_residues, PredictedSign, ResidueReport, Verdict,
};
use qdissect_core::combinatorics::{
    distinct_counts_split, restricted_partition_product, signed_distinct_counts,
    two_part_representations, verify_quotient_identity, PartFactor, PartKind, ResidueClassSet,
};
use qdissect_core::dissection::{
    derive_params, dissect, product_series, quotient_series, rows_by_residue, verify_dissection,
    PParams,
};
use qdissect_core::expr::parse_expression;
use qdissect_core::products::QuintupleSpec;
use qdissect_core::{Error, Series};

#[derive(Parser, Debug)]
#[command(name = "qdissect", version, about = "Exact q-series dissections and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order: series are exact through q^N.
    #[arg(long = "trunc", value_name = "N", default_value_t = 2000, global = true)]
    trunc: i64,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Orientation m,n with m² + n² = p.
    #[arg(long, value_name = "m,n", value_parser = parse_pair, global = true)]
    orient: Option<(i64, i64)>,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a product expression, e.g. "Q(2,13)*Q(3,13)/P(13,13)^2".
    Expand { expr: String },
    /// List the p summands of the dissection and check their sum.
    Dissect {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Compare predicted, certified and observed zero residue classes.
    Verify {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Compare predicted eventual signs of the quotient with observed ones.
    Signs {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Scan residue classes of the product for even coefficients.
    Parity {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Empirical zero classes of ∏ Q(q^e, q^p).
    Hunt {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(required = true, allow_negative_numbers = true)]
        exponents: Vec<i64>,
    },
    /// Partition counts with parts in residue classes.
    Partitions {
        #[command(subcommand)]
        command: PartitionsCommand,
    },
}

/// Part sets are written MOD:KIND:LIST with KIND one of `pm` (±a for each a),
/// `notpm` (all classes except ±a) or `exact`, e.g. `26:pm:2,3,7,9,10,11`.
#[derive(Subcommand, Debug)]
enum PartitionsCommand {
    /// Even-length minus odd-length distinct-part partitions of K.
    Signed { set: String, k: i64 },
    /// Even-length and odd-length counts separately (K ≤ 250).
    Split { set: String, k: i64 },
    /// Tuples of partitions of total size K; factors are u:SET or d:SET.
    Product {
        k: i64,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Check product / (q^p;q^p)∞² against the signed counts through --trunc.
    Verify {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        set: String,
    },
    /// Number of ways to write K = ax + by with a, b ≥ 0.
    Rho { x: i64, y: i64, k: i64 },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected m,n, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad integer {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad integer {b:?}"))?;
    Ok((a, b))
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn parse_set(text: &str) -> Result<ResidueClassSet, Error> {
    let bad = || usage(format!("bad part set {text:?}; expected MOD:pm|notpm|exact:LIST"));
    let mut parts = text.splitn(3, ':');
    let (modulus, kind, list) = match (parts.next(), parts.next(), parts.next()) {
        (Some(m), Some(k), Some(l)) => (m, k, l),
        _ => return Err(bad()),
    };
    let modulus: i64 = modulus.trim().parse().map_err(|_| bad())?;
    let reps = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<i64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    match kind {
        "pm" => ResidueClassSet::plus_minus(modulus, &reps),
        "notpm" => ResidueClassSet::excluding_plus_minus(modulus, &reps),
        "exact" => ResidueClassSet::new(modulus, reps),
        _ => Err(bad()),
    }
}

fn parse_part_factor(text: &str) -> Result<PartFactor, Error> {
    let (kind, set) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("bad factor {text:?}; expected u:SET or d:SET")))?;
    let kind = match kind {
        "u" => PartKind::Unrestricted,
        "d" => PartKind::Distinct,
        _ => return Err(usage(format!("bad factor kind {kind:?}; expected u or d"))),
    };
    Ok(PartFactor {
        kind,
        set: parse_set(set)?,
    })
}

/// Report text and whether every check in it passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn verdict_columns(v: &Verdict) -> (String, String) {
    match v {
        Verdict::SignPattern { sign, onset } => {
            let s = if *sign > 0 { "+" } else { "-" };
            (s.to_string(), onset.to_string())
        }
        Verdict::IdenticallyZeroProved | Verdict::ZeroObserved => ("0".into(), String::new()),
        _ => (String::new(), String::new()),
    }
}

fn csv_row(out: &mut String, r: i64, verdict: &Verdict, depth: i64) {
    let (sign, onset) = verdict_columns(verdict);
    let _ = writeln!(out, "{r},{},{sign},{onset},{depth}", verdict.name());
}

const CSV_HEADER: &str = "r,verdict,sign,onset,depth";

fn header(params: &PParams, n: i64) -> String {
    let [(f1, _), (f2, _)] = params.product_factors();
    format!(
        "p={} b={} m={} n={}  product {f1}*{f2}  through q^{n}\n",
        params.p, params.b, params.m, params.n
    )
}

fn set_list(s: &BTreeSet<i64>) -> String {
    let items: Vec<String> = s.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn require_depth(n: i64, p: i64) -> Result<(), Error> {
    if n < 5 * p {
        return Err(usage(format!("--trunc must be at least 5p = {}, got {n}", 5 * p)));
    }
    Ok(())
}

fn cmd_expand(expr: &str, n: i64, format: Format) -> Result<Outcome, Error> {
    let term = parse_expression(expr)?;
    let s: Series = term.expand(n)?;
    let text = match format {
        Format::Table => s.to_text(),
        Format::Csv => {
            let mut out = String::from("t,c\n");
            for (e, c) in s.terms() {
                let _ = writeln!(out, "{e},{c}");
            }
            out
        }
    };
    Ok(Outcome { text, passed: true })
}

fn cmd_dissect(params: &PParams, n: i64, format: Format) -> Result<Outcome, Error> {
    let summands = dissect(params)?;
    let check = verify_dissection::<BigInt>(params, &summands, n)?;
    let rows = rows_by_residue(params, &summands);
    let mut out = String::new();
    match format {
        Format::Table => {
            out.push_str(&header(params, n));
            for (r, row) in &rows {
                let note = if row.zero { "  (identically zero)" } else { "" };
                let _ = writeln!(out, "r={r:<3} {row}{note}");
            }
            if let Some(t) = check.full_sum.first_mismatch {
                let _ = writeln!(out, "first mismatch at q^{t}");
            }
            if !check.misplaced.is_empty() {
                let _ = writeln!(out, "summands outside their class: {:?}", check.misplaced);
            }
            if !check.normalization_mismatches.is_empty() {
                let _ = writeln!(
                    out,
                    "normalized rows differing from summands: {:?}",
                    check.normalization_mismatches
                );
            }
            let _ = writeln!(out, "full sum through q^{n}: {}", pass_fail(check.passed()));
        }
        Format::Csv => {
            out.push_str("r,row,zero\n");
            for (r, row) in &rows {
                let _ = writeln!(out, "{r},{row},{}", row.zero);
            }
        }
    }
    Ok(Outcome {
        text: out,
        passed: check.passed(),
    })
}

fn cmd_verify(params: &PParams, n: i64, format: Format) -> Result<Outcome, Error> {
    require_depth(n, params.p)?;
    let predicted = predicted_zero_residues(params);
    let certified = certified_zero_residues(params)?;
    let product: Series = product_series(params, n);
    let reports = observe_residue_behavior(&product, params.p)?;
    let observed: BTreeSet<i64> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::ZeroObserved)
        .map(|r| r.r)
        .collect();
    let passed = predicted == certified && certified == observed;
    let verdicts: Vec<(i64, Verdict, i64)> = reports
        .iter()
        .map(|rep| {
            let v = if certified.contains(&rep.r) && rep.verdict == Verdict::ZeroObserved {
                Verdict::IdenticallyZeroProved
            } else {
                rep.verdict.clone()
            };
            (rep.r, v, rep.depth)
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Table => {
            out.push_str(&header(params, n));
            let _ = writeln!(out, "predicted zero classes: {}", set_list(&predicted));
            let _ = writeln!(out, "certified zero classes: {}", set_list(&certified));
            let _ = writeln!(out, "observed zero classes:  {} (depth {n})", set_list(&observed));
            let _ = writeln!(out, "{:>3}  {:<14} {:>5}", "r", "verdict", "depth");
            for (r, v, depth) in &verdicts {
                let _ = writeln!(out, "{r:>3}  {:<14} {depth:>5}", v.name());
            }
            let _ = writeln!(out, "{}", pass_fail(passed));
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for (r, v, depth) in &verdicts {
                csv_row(&mut out, *r, v, *depth);
            }
        }
    }
    Ok(Outcome { text: out, passed })
}

fn sign_agrees(predicted: PredictedSign, verdict: &Verdict) -> bool {
    match (predicted, verdict) {
        (PredictedSign::Zero, Verdict::ZeroObserved) => true,
        (PredictedSign::Positive, Verdict::SignPattern { sign, .. }) => *sign > 0,
        (PredictedSign::Negative, Verdict::SignPattern { sign, .. }) => *sign < 0,
        _ => false,
    }
}

fn cmd_signs(params: &PParams, n: i64, format: Format) -> Result<Outcome, Error> {
    require_depth(n, params.p)?;
    let predicted = predicted_signs(params)?;
    let quotient: Series = quotient_series(params, n);
    let reports: Vec<ResidueReport> = observe_residue_behavior(&quotient, params.p)?;
    let passed = predicted
        .iter()
        .zip(&reports)
        .all(|(s, rep)| sign_agrees(*s, &rep.verdict));
    let mut out = String::new();
    match format {
        Format::Table => {
            out.push_str(&header(params, n));
            out.push_str("eventual signs of product / (q^p;q^p)^2 by class\n");
            let _ = writeln!(
                out,
                "{:>3}  {:<9} {:<14} {:>5} {:>5}",
                "r", "predicted", "observed", "onset", "depth"
            );
            for (s, rep) in predicted.iter().zip(&reports) {
                let (sign, onset) = verdict_columns(&rep.verdict);
                let observed = match rep.verdict {
                    Verdict::SignPattern { .. } => sign,
                    _ => rep.verdict.name().to_string(),
                };
                let mark = if sign_agrees(*s, &rep.verdict) { "" } else { "  mismatch" };
                let _ = writeln!(
                    out,
                    "{:>3}  {:<9} {:<14} {:>5} {:>5}{mark}",
                    rep.r, s, observed, onset, rep.depth
                );
            }
            let row: Vec<String> = predicted.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "predicted: {}", row.join(" "));
            let _ = writeln!(out, "{}", pass_fail(passed));
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for rep in &reports {
                csv_row(&mut out, rep.r, &rep.verdict, rep.depth);
            }
        }
    }
    Ok(Outcome { text: out, passed })
}

/// How many leading quotient coefficients to list for each even class.
const PARITY_PREVIEW: usize = 11;

fn cmd_parity(params: &PParams, n: i64, format: Format) -> Result<Outcome, Error> {
    require_depth(n, params.p)?;
    let even = predicted_even_residues(params)?;
    let product: Series = product_series(params, n);
    let reports = parity_scan(&product, params.p)?;
    let passed = reports.iter().filter(|rep| even.contains(&rep.r)).all(|rep| {
        matches!(rep.verdict, Verdict::AllEven | Verdict::ZeroObserved)
    });
    let mut out = String::new();
    match format {
        Format::Table => {
            out.push_str(&header(params, n));
            let _ = writeln!(out, "predicted even classes: {}", set_list(&even));
            let _ = writeln!(
                out,
                "{:>3}  {:<14} {:>5}  first nonzero (t, c)",
                "r", "verdict", "depth"
            );
            for rep in &reports {
                let first = match &rep.first_nonzero {
                    Some((t, c)) => format!("({t}, {c})"),
                    None => "-".into(),
                };
                let _ = writeln!(
                    out,
                    "{:>3}  {:<14} {:>5}  {first}",
                    rep.r,
                    rep.verdict.name(),
                    rep.depth
                );
            }
            let quotient: Series = quotient_series(params, n);
            for r in &even {
                let values: Vec<String> = quotient
                    .progression(params.p, *r)
                    .into_iter()
                    .take(PARITY_PREVIEW)
                    .map(|(_, c)| c.to_string())
                    .collect();
                let _ = writeln!(out, "quotient class {r}: {}", values.join(","));
            }
            let _ = writeln!(out, "{}", pass_fail(passed));
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for rep in &reports {
                csv_row(&mut out, rep.r, &rep.verdict, rep.depth);
            }
        }
    }
    Ok(Outcome { text: out, passed })
}

fn cmd_hunt(p: i64, exponents: &[i64], n: i64, format: Format) -> Result<Outcome, Error> {
    let specs = exponents
        .iter()
        .map(|&e| QuintupleSpec::new(e, p))
        .collect::<Result<Vec<_>, _>>()?;
    let result = hunt(&specs, n)?;
    let text = match format {
        Format::Table => format!("{result}\n"),
        Format::Csv => {
            let mut out = format!("{CSV_HEADER}\n");
            for r in &result.zero_residues {
                csv_row(&mut out, *r, &Verdict::ZeroObserved, (n - r).div_euclid(p));
            }
            out
        }
    };
    Ok(Outcome { text, passed: true })
}

fn cmd_partitions(
    command: &PartitionsCommand,
    cli: &Cli,
) -> Result<Outcome, Error> {
    let n = cli.trunc;
    let text = match command {
        PartitionsCommand::Signed { set, k } => {
            let set = parse_set(set)?;
            let d = signed_distinct_counts(&set, *k);
            format!("D({k}) = {}\n", d.coeff(*k))
        }
        PartitionsCommand::Split { set, k } => {
            let set = parse_set(set)?;
            let (even, odd) = distinct_counts_split(&set, *k)?;
            let diff = BigInt::from(even) - BigInt::from(odd);
            format!("D({k}) = {even} - {odd} = {diff}\n")
        }
        PartitionsCommand::Product { k, factors } => {
            let factors = factors
                .iter()
                .map(|f| parse_part_factor(f))
                .collect::<Result<Vec<_>, _>>()?;
            let s = restricted_partition_product(&factors, *k);
            format!("count({k}) = {}\n", s.coeff(*k))
        }
        PartitionsCommand::Verify { p, b, set } => {
            let params = derive_params(*p, *b, cli.orient)?;
            let set = parse_set(set)?;
            let cmp = verify_quotient_identity(&params, &set, n);
            let mut out = header(&params, n);
            let _ = writeln!(out, "part set {set}");
            if let Some(t) = cmp.first_mismatch {
                let _ = writeln!(out, "first mismatch at q^{t}");
            }
            let _ = writeln!(out, "{}", pass_fail(cmp.equal));
            return Ok(Outcome {
                text: out,
                passed: cmp.equal,
            });
        }
        PartitionsCommand::Rho { x, y, k } => {
            format!("rho({x},{y};{k}) = {}\n", two_part_representations(*x, *y, *k)?)
        }
    };
    Ok(Outcome { text, passed: true })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let n = cli.trunc;
    if n < 0 {
        return Err(usage(format!("--trunc must be nonnegative, got {n}")));
    }
    let params = |p: i64, b: i64| derive_params(p, b, cli.orient);
    match &cli.command {
        Command::Expand { expr } => cmd_expand(expr, n, cli.format),
        Command::Dissect { p, b } => cmd_dissect(&params(*p, *b)?, n, cli.format),
        Command::Verify { p, b } => cmd_verify(&params(*p, *b)?, n, cli.format),
        Command::Signs { p, b } => cmd_signs(&params(*p, *b)?, n, cli.format),
        Command::Parity { p, b } => cmd_parity(&params(*p, *b)?, n, cli.format),
        Command::Hunt { p, exponents } => cmd_hunt(*p, exponents, n, cli.format),
        Command::Partitions { command } => cmd_partitions(command, cli),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qdissect: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.text) {
                eprintln!("qdissect: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.text),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
