//! Command-line surface for the elephant polynomial toolkit.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification or oracle
//! failure.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use elephant_core::elephant::{Family, PolyFamily};
use elephant_core::erw::{
    brute_force_distribution, closed_form_dist, distribution_from_charfun, exact_distribution_dp,
    simulate, ClosedFormCase, DistributionTable, ErwParams, McConfig, RNG_NAME,
};
use elephant_core::moments::{moment_table, moment_table_csv};
use elephant_core::rational::{parse_rational, rat_int, rat_string, rat_to_f64, Rational};
use elephant_core::roots::{
    check_interlacing, default_width, isolate_roots, Domain, InterlacingMode, RootList,
    RootLocation,
};
use elephant_core::verify::{self, Suite};

#[derive(Parser)]
#[command(
    name = "elephant",
    about = "Exact arithmetic for elephant-random-walk polynomials: families, certified \
             roots, combinatorics, walk distributions, and verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn family_arg(s: &str) -> Result<Family, String> {
    s.parse()
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Print one family member's exact coefficients.
    Poly {
        /// Family: R, S, T, V, or U (R and S take the memory parameter).
        #[arg(long, value_parser = family_arg)]
        family: Family,
        /// Index within the family.
        #[arg(long)]
        n: usize,
        /// Memory parameter (rational, e.g. -1/2 or 0.25).
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certified real-root isolation for R_1..R_N or S_1..S_N, with
    /// optional interlacing certification between consecutive members.
    Roots {
        /// Family: R (roots sought in (-1,1)) or S (whole line).
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        /// Largest index to certify.
        #[arg(long = "max-n")]
        max_n: usize,
        /// Isolation width (rational); default 1/2^40.
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        width: Option<Rational>,
        /// Also certify interlacing of consecutive members.
        #[arg(long, default_value_t = false)]
        check_interlacing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact distribution of the walk's position at time n.
    Dist {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        /// Construction to emit.
        #[arg(long, value_enum, default_value = "dp")]
        method: DistMethod,
        /// Skip the default cross-method comparison.
        #[arg(long, default_value_t = false)]
        no_compare: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte Carlo simulation with a reproducible seeded generator;
    /// reports the total-variation distance against the exact law.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a named verification suite (exit 3 on any failed check).
    Verify {
        /// lemma21, interlacing, special-cases, eulerian,
        /// nonorthogonality, moments, gf-numeric, or all.
        #[arg(long, value_parser = suite_arg)]
        suite: Suite,
        /// Override the suite's default depth.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Table of R_n'(1) values with growth-regime ratios.
    Moments {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistMethod {
    Dp,
    Charfun,
    Closed,
    Brute,
}

enum CliError {
    /// Bad arguments or argument combinations: exit 2.
    Usage(String),
    /// A certification or cross-method comparison failed: exit 3.
    Verification(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(output: &OutputArgs, content: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Poly { family, n, a, output } => cmd_poly(family, n, a.as_ref(), &output),
        Command::Roots {
            family,
            a,
            max_n,
            width,
            check_interlacing,
            output,
        } => cmd_roots(family, &a, max_n, width, check_interlacing, &output),
        Command::Dist {
            n,
            a,
            method,
            no_compare,
            output,
        } => cmd_dist(n, &a, method, !no_compare, &output),
        Command::Simulate {
            n,
            a,
            samples,
            seed,
            output,
        } => cmd_simulate(n, &a, samples, seed, &output),
        Command::Verify { suite, max_n, output } => cmd_verify(suite, max_n, &output),
        Command::Moments { a, max_n, output } => cmd_moments(&a, max_n, &output),
    }
}

fn cmd_poly(
    family: Family,
    n: usize,
    a: Option<&Rational>,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let record = PolyFamily::build(family, n, a).map_err(CliError::Usage)?;
    let content = match output.format {
        Format::Json => to_json(&record)?,
        Format::Csv => {
            let mut out = String::from("power,coeff\n");
            for (j, c) in record.coeffs.iter().enumerate() {
                let _ = writeln!(out, "{j},{c}");
            }
            out
        }
        Format::Text => {
            let var = if family == Family::U { "y" } else { "x" };
            format!(
                "{:?}_{}({var}) = {}\ncoeffs (lowest degree first): [{}]\n",
                record.family,
                record.n,
                record.poly,
                record.coeffs.join(", ")
            )
        }
    };
    emit(output, content)
}

#[derive(Serialize)]
struct RootEntry {
    lo: String,
    hi: String,
    mid_float: f64,
}

#[derive(Serialize)]
struct RootsRecord {
    n: usize,
    a: String,
    roots: Vec<RootEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interlaced_with_next: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vacuous_step: Option<bool>,
}

fn cmd_roots(
    family: Family,
    a: &Rational,
    max_n: usize,
    width: Option<Rational>,
    interlace: bool,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if max_n < 1 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let (domain, mode): (fn() -> Domain, _) = match family {
        Family::R => (
            || Domain::Interval(rat_int(-1), rat_int(1)),
            InterlacingMode::StrictOpenInterval,
        ),
        Family::S => (|| Domain::AllReals, InterlacingMode::WholeLine),
        other => {
            return Err(CliError::Usage(format!(
                "root certification covers families R and S (got {other:?})"
            )))
        }
    };
    let width = width.unwrap_or_else(default_width);
    let mut lists: Vec<RootList> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let record = PolyFamily::build(family, n, Some(a)).map_err(CliError::Usage)?;
        let list = isolate_roots(&record.poly, domain(), &width)
            .map_err(|e| CliError::Verification(format!("{family:?}_{n}: {e}")))?;
        lists.push(list);
    }
    let mut steps: Vec<(Option<bool>, Option<bool>)> = vec![(None, None); max_n];
    if interlace {
        for i in 0..max_n.saturating_sub(1) {
            let (left, right) = lists.split_at_mut(i + 1);
            let report = check_interlacing(&mut left[i], &mut right[0], mode)
                .map_err(|e| CliError::Verification(format!("pair ({}, {}): {e}", i + 1, i + 2)))?;
            steps[i] = (Some(true), Some(report.vacuous));
        }
    }
    let records: Vec<RootsRecord> = lists
        .iter()
        .enumerate()
        .map(|(i, list)| RootsRecord {
            n: i + 1,
            a: rat_string(a),
            roots: list
                .locations()
                .iter()
                .map(|loc| {
                    let (lo, hi) = match loc {
                        RootLocation::Exact(r) => (r, r),
                        RootLocation::Bracketed(iv) => (&iv.lo, &iv.hi),
                    };
                    RootEntry {
                        lo: rat_string(lo),
                        hi: rat_string(hi),
                        mid_float: loc.midpoint_f64(),
                    }
                })
                .collect(),
            interlaced_with_next: steps[i].0,
            vacuous_step: steps[i].1,
        })
        .collect();
    let content = match output.format {
        Format::Json => to_json(&records)?,
        Format::Csv => {
            // float midpoints for dot plots
            let mut out = String::from("n,index,mid_float\n");
            for record in &records {
                for (idx, root) in record.roots.iter().enumerate() {
                    let _ = writeln!(out, "{},{},{}", record.n, idx, root.mid_float);
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for record in &records {
                let mids: Vec<String> = record
                    .roots
                    .iter()
                    .map(|r| format!("{:.6}", r.mid_float))
                    .collect();
                let _ = write!(
                    out,
                    "{:?}_{} : {} certified roots [{}]",
                    family,
                    record.n,
                    record.roots.len(),
                    mids.join(", ")
                );
                if record.interlaced_with_next == Some(true) {
                    let _ = write!(
                        out,
                        "  (interlaces with {:?}_{}{})",
                        family,
                        record.n + 1,
                        if record.vacuous_step == Some(true) {
                            ", vacuously"
                        } else {
                            ""
                        }
                    );
                }
                out.push('\n');
            }
            out
        }
    };
    emit(output, content)
}

fn closed_table(n: usize, case: ClosedFormCase) -> DistributionTable {
    let mut probs = std::collections::BTreeMap::new();
    for k in -(n as i64)..=n as i64 {
        if k.rem_euclid(2) as usize != n % 2 {
            continue;
        }
        if let Ok(p) = closed_form_dist(n, k, case) {
            probs.insert(k, p);
        }
    }
    DistributionTable::from_probs(n, probs)
}

#[derive(Serialize)]
struct DistRecord {
    n: usize,
    a: String,
    method: &'static str,
    compared_methods: Vec<&'static str>,
    rows: Vec<elephant_core::erw::DistRow>,
}

fn cmd_dist(
    n: usize,
    a: &Rational,
    method: DistMethod,
    compare: bool,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let params = ErwParams::new(a.clone()).map_err(usage)?;
    let dp = exact_distribution_dp(n, &params);
    let mut tables: Vec<(&'static str, DistributionTable)> = vec![("dp", dp)];
    tables.push((
        "charfun",
        distribution_from_charfun(n, &params)
            .map_err(|e| CliError::Verification(e.to_string()))?,
    ));
    if n <= 14 {
        tables.push((
            "brute",
            brute_force_distribution(n, &params)
                .map_err(|e| CliError::Verification(e.to_string()))?,
        ));
    }
    if let Some(case) = ClosedFormCase::from_a(a) {
        tables.push(("closed", closed_table(n, case)));
    }

    let requested = match method {
        DistMethod::Dp => "dp",
        DistMethod::Charfun => "charfun",
        DistMethod::Closed => "closed",
        DistMethod::Brute => "brute",
    };
    if !tables.iter().any(|(name, _)| *name == requested) {
        return Err(CliError::Usage(match method {
            DistMethod::Closed => format!(
                "--method closed requires a in {{-1, -1/2, 0, 1}} (got {})",
                rat_string(a)
            ),
            DistMethod::Brute => format!("--method brute is capped at n = 14 (got n = {n})"),
            _ => unreachable!(),
        }));
    }

    let compared: Vec<&'static str> = if compare {
        for ((name_a, table_a), (name_b, table_b)) in tables.iter().zip(tables.iter().skip(1)) {
            if table_a != table_b {
                return Err(CliError::Verification(format!(
                    "methods `{name_a}` and `{name_b}` disagree at n = {n}, a = {}",
                    rat_string(a)
                )));
            }
        }
        tables.iter().map(|(name, _)| *name).collect()
    } else {
        vec![requested]
    };

    let table = &tables.iter().find(|(name, _)| *name == requested).unwrap().1;
    let content = match output.format {
        Format::Json => to_json(&DistRecord {
            n,
            a: rat_string(a),
            method: requested,
            compared_methods: compared,
            rows: table.to_json_rows(),
        })?,
        Format::Csv => table.to_csv(),
        Format::Text => {
            let mut out = format!(
                "P(S_{n} = k) for a = {} via {requested} (agreeing methods: {})\n",
                rat_string(a),
                compared.join(", ")
            );
            for (k, p) in table.iter() {
                let _ = writeln!(out, "  k = {k:>4}: {} = {:.6}", rat_string(p), rat_to_f64(p));
            }
            out
        }
    };
    emit(output, content)
}

#[derive(Serialize)]
struct SimulateRecord {
    n: usize,
    a: String,
    samples: usize,
    seed: u64,
    rng: &'static str,
    tv_vs_exact: f64,
    rows: Vec<elephant_core::erw::EmpiricalRow>,
}

fn cmd_simulate(
    n: usize,
    a: &Rational,
    samples: usize,
    seed: u64,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if n < 1 || samples < 1 {
        return Err(CliError::Usage("--n and --samples must be at least 1".into()));
    }
    let params = ErwParams::new(a.clone()).map_err(usage)?;
    let cfg = McConfig { samples, seed };
    let empirical = simulate(n, &params, &cfg);
    let exact = exact_distribution_dp(n, &params);
    let tv = exact.tv_distance_empirical(&empirical);
    let content = match output.format {
        Format::Json => to_json(&SimulateRecord {
            n,
            a: rat_string(a),
            samples,
            seed,
            rng: RNG_NAME,
            tv_vs_exact: tv,
            rows: empirical.to_json_rows(),
        })?,
        Format::Csv => {
            let mut out = empirical.to_csv();
            let _ = writeln!(out, "# tv_vs_exact,{tv}");
            out
        }
        Format::Text => {
            let mut out = format!(
                "empirical law of S_{n} (a = {}, {samples} samples, seed {seed}, rng {RNG_NAME})\n",
                rat_string(a)
            );
            for (k, c) in empirical.iter() {
                let _ = writeln!(out, "  k = {k:>4}: {c} ({:.6})", empirical.freq(k));
            }
            let _ = writeln!(out, "total variation vs exact law: {tv:.6}");
            out
        }
    };
    emit(output, content)
}

fn cmd_verify(suite: Suite, max_n: Option<usize>, output: &OutputArgs) -> Result<(), CliError> {
    let reports = verify::run(suite, max_n);
    let all_pass = reports.iter().all(|r| r.pass);
    let content = match output.format {
        Format::Json => to_json(&reports)?,
        Format::Csv => {
            let mut out = String::from("suite,check,pass,detail\n");
            for report in &reports {
                for check in &report.checks {
                    let _ = writeln!(
                        out,
                        "{},{},{},\"{}\"",
                        report.suite,
                        check.name,
                        check.pass,
                        check.detail.replace('"', "'")
                    );
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for report in &reports {
                for check in &report.checks {
                    let _ = writeln!(
                        out,
                        "[{}] {}/{} - {}",
                        if check.pass { "PASS" } else { "FAIL" },
                        report.suite,
                        check.name,
                        check.detail
                    );
                }
            }
            out
        }
    };
    emit(output, content)?;
    if all_pass {
        Ok(())
    } else {
        let first = reports
            .iter()
            .find_map(|r| {
                r.first_failure()
                    .map(|c| format!("{}/{}: {}", r.suite, c.name, c.detail))
            })
            .unwrap_or_default();
        Err(CliError::Verification(first))
    }
}

fn cmd_moments(a: &Rational, max_n: usize, output: &OutputArgs) -> Result<(), CliError> {
    if max_n < 1 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let records = moment_table(a, max_n);
    let content = match output.format {
        Format::Json => to_json(&records)?,
        Format::Csv => moment_table_csv(&records),
        Format::Text => {
            let mut out = format!(
                "R_n'(1) for a = {} (regime {:?})\n",
                rat_string(a),
                records[0].regime
            );
            for r in &records {
                let ratio = r
                    .ratio
                    .map(|x| format!("{x:.6}"))
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    out,
                    "  n = {:>4}: {}/{} = {:.6}  leading {:.6}  ratio {ratio}",
                    r.n, r.value_num, r.value_den, r.value_float, r.predicted_leading
                );
            }
            out
        }
    };
    emit(output, content)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Usage(format!("serialization failed: {e}")))
}
