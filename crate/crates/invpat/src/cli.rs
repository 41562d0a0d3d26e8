//! The `invpat` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use invpat_core::bijections::{
    inv_to_tree000, kappa, kappa_inv, mu, mu_inv, phi, phi_inv, rho, rho_inv, tau, tau_inv, theta,
    theta_inv, tree000_to_inv, NAMES,
};
use invpat_core::counting::{self, TABLE_NAMES};
use invpat_core::stats::Statistic;
use invpat_core::structures::{BwTree, IncreasingTree, Permutation, Rgf, SchroderPath};
use invpat_core::word::parse_comma_separated;
use invpat_core::{InversionSequence, Pattern};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::format::{histogram_csv, histogram_json, table_csv, table_json, to_json_string};
use crate::oeis::{self, Source};
use crate::verify::{self, VerdictReport};
use crate::{parallel, Error, Result};

/// Largest `n` enumerated without `--force`.
pub const BRUTE_CEILING: usize = 11;

#[derive(Debug, Parser)]
#[command(name = "invpat", version, about = "Counting and verification for pattern-avoiding inversion sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Formula,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Fwd,
    Inv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of inversion sequences of length n avoiding the pattern(s).
    Count {
        /// Pattern; repeat the flag to avoid several at once (brute force only).
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Allow brute force beyond the ceiling.
        #[arg(long)]
        force: bool,
    },
    /// Terms for n = 1..=n-max.
    Sequence {
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        force: bool,
    },
    /// Histogram of a statistic over the avoiders of length n.
    Dist {
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stat: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        force: bool,
    },
    /// Applies a bijection or its inverse to one object.
    Map {
        #[arg(long)]
        bijection: String,
        #[arg(long, value_enum, default_value = "fwd")]
        dir: Direction,
        #[arg(long)]
        input: String,
        /// Defaults to the bare output object.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        force: bool,
    },
    /// Tests a conjecture for n = 1..=n-max.
    Conjecture {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        force: bool,
    },
    /// Cross-checks computed terms against OEIS b-files.
    Oeis {
        /// Only this A-number.
        #[arg(long)]
        id: Option<String>,
        /// Bundled fixtures only; never touch the cache or the network.
        #[arg(long)]
        offline: bool,
        /// Download missing b-files into the cache.
        #[arg(long, conflicts_with = "offline")]
        fetch: bool,
        /// Overrides `INVPAT_CACHE`.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Writes a count table.
    DumpTable {
        #[arg(long)]
        table: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Outcome of a successful command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// A check ran and failed; exit status 1.
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

fn parse_patterns(raw: &[String]) -> Result<Vec<Pattern>> {
    raw.iter()
        .map(|p| p.parse::<Pattern>().map_err(|e| Error::Usage(format!("bad pattern {p:?}: {e}"))))
        .collect()
}

fn check_ceiling(n: usize, force: bool) -> Result<()> {
    if n > BRUTE_CEILING && !force {
        return Err(Error::Usage(format!("n = {n} exceeds the brute-force ceiling {BRUTE_CEILING}; pass --force")));
    }
    Ok(())
}

fn pattern_label(patterns: &[Pattern]) -> String {
    patterns.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Count by the chosen method; returns the method actually used.
fn count_one(patterns: &[Pattern], n: usize, method: Method, force: bool) -> Result<(BigUint, &'static str)> {
    let formula = match patterns {
        [p] => counting::formula_count(&p.to_string(), n),
        _ => None,
    };
    match (method, formula) {
        (Method::Formula | Method::Auto, Some(v)) => Ok((v, "formula")),
        (Method::Formula, None) => Err(Error::Usage(format!("no formula for {}", pattern_label(patterns)))),
        (Method::Brute | Method::Auto, _) => {
            check_ceiling(n, force)?;
            Ok((parallel::count(n, patterns), "brute"))
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("writing output", e))?;
    if !text.ends_with('\n') {
        out.write_all(b"\n").map_err(|e| Error::io("writing output", e))?;
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    emit(out, &to_json_string(v))
}

fn report_outcome(reports: &[VerdictReport]) -> Outcome {
    if reports.iter().all(VerdictReport::passed) {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    }
}

fn emit_reports(out: &mut dyn Write, reports: &[VerdictReport], format: Option<Format>) -> Result<Outcome> {
    let outcome = report_outcome(reports);
    match format.unwrap_or(Format::Json) {
        Format::Json => {
            let list: Vec<Value> = reports.iter().map(VerdictReport::to_json).collect();
            emit_json(out, &json!({ "passed": outcome == Outcome::Ok, "reports": list }))?;
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!("{verdict} {} n={}..{} ({:.1} ms)\n", r.suite, r.n_min, r.n_max, r.elapsed_ms));
                if let Some(cx) = &r.counterexample {
                    s.push_str(&format!("  counterexample: {}\n", to_json_string(cx)));
                }
            }
            emit(out, &s)?;
        }
        Format::Csv => {
            let mut s = String::from("suite,n,status,detail\n");
            for r in reports {
                for st in &r.per_n {
                    let status = if st.pass { "pass" } else { "fail" };
                    s.push_str(&format!("{},{},{status},\"{}\"\n", r.suite, st.n, st.detail.replace('"', "'")));
                }
            }
            emit(out, &s)?;
        }
    }
    Ok(outcome)
}

fn parse_input<T: std::str::FromStr<Err = invpat_core::Error>>(s: &str) -> Result<T> {
    Ok(s.trim().parse::<T>()?)
}

/// Applies a bijection by name; returns the output's text form.
pub fn apply_bijection(name: &str, dir: Direction, input: &str) -> Result<String> {
    use Direction::{Fwd, Inv};
    let seq = |s: &str| parse_input::<InversionSequence>(s);
    let out = match (name.to_ascii_lowercase().as_str(), dir) {
        ("theta", Fwd) => theta(&parse_input::<Permutation>(input)?).to_string(),
        ("theta", Inv) => {
            let e = seq(input)?;
            if !e.avoids(&"001".parse()?) {
                return Err(invpat_core::Error::ContainsPattern("001").into());
            }
            theta_inv(&e).to_string()
        }
        ("rho", Fwd) => rho(&seq(input)?)?.to_string(),
        ("rho", Inv) => rho_inv(&parse_input::<SchroderPath>(input)?).to_string(),
        ("phi", Fwd) => phi(&parse_input::<SchroderPath>(input)?).to_string(),
        ("phi", Inv) => phi_inv(&seq(input)?)?.to_string(),
        ("kappa", Fwd) => kappa(&seq(input)?)?.to_string(),
        ("kappa", Inv) => kappa_inv(&parse_input::<Rgf>(input)?).to_string(),
        ("tau", Fwd) => tau(&seq(input)?)?.to_string(),
        ("tau", Inv) => tau_inv(&parse_input::<BwTree>(input)?).to_string(),
        ("mu", Fwd) => mu(&seq(input)?)?.to_string(),
        ("mu", Inv) => mu_inv(&seq(input)?)?.to_string(),
        ("tree000", Fwd) => {
            let parents = parse_comma_separated(input.trim())?;
            tree000_to_inv(&IncreasingTree::new(parents)?).to_string()
        }
        ("tree000", Inv) => {
            let t = inv_to_tree000(&seq(input)?)?;
            t.parents().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        }
        (other, _) => return Err(Error::Usage(format!("unknown bijection {other:?}; expected one of {NAMES:?}"))),
    };
    Ok(out)
}

/// Runs a parsed command, writing its payload to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::Count { patterns, n, method, format, force } => {
            let pats = parse_patterns(&patterns)?;
            let (count, used) = count_one(&pats, n, method, force)?;
            let label = pattern_label(&pats);
            match format.unwrap_or(Format::Json) {
                Format::Json => emit_json(
                    out,
                    &json!({ "pattern": label, "n": n, "count": count.to_string(), "method": used }),
                )?,
                Format::Csv => emit(out, &format!("pattern,n,method,count\n\"{label}\",{n},{used},{count}\n"))?,
                Format::Text => emit(out, &count.to_string())?,
            }
        }
        Command::Sequence { patterns, n_max, method, format, force } => {
            let pats = parse_patterns(&patterns)?;
            let mut terms = Vec::with_capacity(n_max);
            let mut methods = Vec::with_capacity(n_max);
            for n in 1..=n_max {
                let (c, used) = count_one(&pats, n, method, force)?;
                terms.push(c);
                methods.push(used);
            }
            methods.dedup();
            let used = if methods.len() == 1 { methods[0] } else { "mixed" };
            let label = pattern_label(&pats);
            match format.unwrap_or(Format::Json) {
                Format::Json => {
                    let terms: Vec<String> = terms.iter().map(ToString::to_string).collect();
                    emit_json(out, &json!({ "pattern": label, "n_max": n_max, "method": used, "terms": terms }))?
                }
                Format::Csv => {
                    let mut s = String::from("n,count\n");
                    for (i, t) in terms.iter().enumerate() {
                        s.push_str(&format!("{},{t}\n", i + 1));
                    }
                    emit(out, &s)?
                }
                Format::Text => {
                    emit(out, &terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))?
                }
            }
        }
        Command::Dist { patterns, n, stat, format, force } => {
            let pats = parse_patterns(&patterns)?;
            let statistic: Statistic = stat.parse()?;
            check_ceiling(n, force)?;
            let h = parallel::distribution(n, &pats, statistic);
            match format.unwrap_or(Format::Json) {
                Format::Json => emit_json(out, &histogram_json(&h))?,
                Format::Csv => emit(out, &histogram_csv(&h))?,
                Format::Text => {
                    let s: Vec<String> = h.bins.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                    emit(out, &s.join("\n"))?
                }
            }
        }
        Command::Map { bijection, dir, input, format } => {
            let result = apply_bijection(&bijection, dir, &input)?;
            match format.unwrap_or(Format::Text) {
                Format::Text => emit(out, &result)?,
                Format::Json => {
                    let d = if dir == Direction::Fwd { "fwd" } else { "inv" };
                    emit_json(out, &json!({ "bijection": bijection.to_ascii_lowercase(), "dir": d, "input": input.trim(), "output": result }))?
                }
                Format::Csv => emit(out, &format!("input,output\n\"{}\",\"{result}\"\n", input.trim()))?,
            }
        }
        Command::Verify { suite, n_max, format, force } => {
            check_ceiling(n_max, force)?;
            let reports = verify::run_suite(&suite, n_max)?;
            return emit_reports(out, &reports, format);
        }
        Command::Conjecture { id, n_max, format, force } => {
            check_ceiling(n_max, force)?;
            let report = verify::run_conjecture(&id, n_max)?;
            return emit_reports(out, &[report], format);
        }
        Command::Oeis { id, offline, fetch, cache_dir, format } => {
            let source = if offline {
                Source::Offline
            } else {
                Source::Cache { dir: cache_dir.unwrap_or_else(oeis::default_cache_dir), fetch }
            };
            let reports = oeis::run_crosschecks(&source, id.as_deref())?;
            return emit_reports(out, &reports, format);
        }
        Command::DumpTable { table, n_max, format } => {
            let t = counting::table_by_name(&table, n_max)
                .ok_or_else(|| Error::Usage(format!("unknown table {table:?}; expected one of {TABLE_NAMES:?}")))?;
            match format.unwrap_or(Format::Json) {
                Format::Json => emit_json(out, &table_json(&t))?,
                Format::Csv | Format::Text => emit(out, &table_csv(&t))?,
            }
        }
    }
    Ok(Outcome::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<Outcome>, String) {
        let cli = Cli::try_parse_from(std::iter::once("invpat").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn count_payload() {
        let (r, s) = run_args(&["count", "--pattern", "021", "--n", "7", "--method", "formula"]);
        assert_eq!(r.unwrap(), Outcome::Ok);
        assert_eq!(s.trim(), r#"{"count":"1806","method":"formula","n":7,"pattern":"021"}"#);
    }

    #[test]
    fn map_rho() {
        let (r, s) = run_args(&["map", "--bijection", "rho", "--dir", "fwd", "--input", "0,1,0,1,0,2,5,7,7,7,9,0,10,11,12"]);
        r.unwrap();
        assert_eq!(s.trim(), "UUDUFUDUFDDDUUDUDDUUUFDDD");
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(run_args(&["count", "--pattern", "120", "--n", "5", "--method", "formula"]).0, Err(Error::Usage(_))));
        assert!(matches!(run_args(&["count", "--pattern", "120", "--n", "12"]).0, Err(Error::Usage(_))));
        assert!(run_args(&["count", "--pattern", "0x1", "--n", "3"]).0.is_err());
        assert!(run_args(&["map", "--bijection", "nope", "--input", "0"]).0.is_err());
        assert!(run_args(&["map", "--bijection", "rho", "--input", "0,0,2,1"]).0.is_err());
    }

    #[test]
    fn every_bijection_round_trips_through_text() {
        let inputs = [
            ("theta", "3,1,2"),
            ("rho", "0,1,0,2"),
            ("phi", "UFD"),
            ("kappa", "0,0,2,0"),
            ("tau", "0,1,0,2"),
            ("mu", "0,1,0,3,1,2"),
            ("tree000", "0,1,0,3"),
        ];
        for (name, input) in inputs {
            let there = apply_bijection(name, Direction::Fwd, input).unwrap();
            let back = apply_bijection(name, Direction::Inv, &there).unwrap();
            let norm = |s: &str| s.replace(' ', "");
            assert_eq!(norm(&back), norm(input), "{name}: {there}");
        }
    }
}
