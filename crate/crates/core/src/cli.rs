//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bijection;
use crate::census::{self, CensusConfig, DEFAULT_BUDGET};
use crate::error::Error;
use crate::field::{Field, FieldSpec};
use crate::fitting;
use crate::joyal;
use crate::json::{
    to_canonical_string, FittingPairJson, FunctionJson, MatrixJson, PairJson, PointedTreeJson,
    TreeJson,
};
use crate::linalg::Vector;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nilbij",
    version,
    about = "Pointed nilpotents vs. all operators over GF(q), and Joyal's tree bijection"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CliConfig {
    /// Field characteristic (prime).
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Extension degree; GF(p^k) uses a built-in polynomial unless --poly is given.
    #[arg(long, global = true, default_value_t = 1)]
    pub k: u32,
    /// Monic irreducible polynomial as comma-separated coefficients c_0,...,c_k.
    #[arg(long, global = true, value_delimiter = ',')]
    pub poly: Option<Vec<u32>>,
    /// Dimension (vector-space dimension, or set size for the Joyal commands).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Read the JSON input from this file instead of standard input.
    #[arg(long, global = true, conflicts_with = "data")]
    pub input: Option<PathBuf>,
    /// Inline JSON input.
    #[arg(long, global = true)]
    pub data: Option<String>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Canonical JSON output (sorted keys, no whitespace).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Human-readable output (the default).
    #[arg(long, global = true)]
    pub table: bool,
    /// Maximum number of objects an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Number of parallel shards for the census commands.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub shards: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// (T, v) JSON -> operator Q.
    Forward,
    /// Operator Q JSON -> (T, v).
    Inverse,
    /// Operator JSON -> its Fitting decomposition.
    Fitting,
    /// (T, v) JSON -> least k with T^k v = 0.
    Degree,
    /// Count nilpotent n x n operators over GF(q) (needs --p, --n).
    CountNilpotents,
    /// Exhaustively check the bijection over GF(q)^n (needs --p, --n).
    VerifyTheorem,
    /// Compare degree strata on both sides (needs --p, --n).
    VerifyDegrees,
    /// {"tree", "v", "v2"} JSON -> function JSON.
    JoyalForward,
    /// Function JSON -> {"tree", "v", "v2"}.
    JoyalInverse,
    /// Exhaustively check Joyal's bijection on n points (needs --n).
    VerifyJoyal,
}

struct Outcome {
    text: String,
    verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            verified: true,
        }
    }
}

#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl CliConfig {
    fn census(&self) -> CensusConfig {
        CensusConfig {
            budget: self.budget,
            shards: self.shards as usize,
        }
    }

    fn field(&self) -> Result<Field, UsageError> {
        let p = self.p.ok_or_else(|| UsageError("--p is required".into()))?;
        Ok(Field::new(FieldSpec::resolve(
            p,
            self.k,
            self.poly.clone(),
        )?)?)
    }

    fn dimension(&self) -> Result<usize, UsageError> {
        self.n.ok_or_else(|| UsageError("--n is required".into()))
    }

    /// When field flags are given alongside JSON input, they must agree.
    fn check_field(&self, field: &Field) -> Result<(), UsageError> {
        if self.p.is_some() && &self.field()? != field {
            return Err(Error::FieldMismatch.into());
        }
        Ok(())
    }

    fn read_input<T: DeserializeOwned>(&self, stdin: &mut dyn Read) -> Result<T, UsageError> {
        let text = match (&self.data, &self.input) {
            (Some(d), _) => d.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?,
            (None, None) => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| UsageError(format!("cannot read standard input: {e}")))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| UsageError(format!("malformed JSON input: {e}")))
    }

    fn render<T: Serialize>(&self, value: &T, table: impl FnOnce() -> String) -> String {
        if self.json {
            to_canonical_string(value) + "\n"
        } else {
            table()
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, UsageError> {
    let cfg = &cli.config;
    match cli.command {
        Command::Forward => {
            let (t, v) = cfg.read_input::<PairJson>(stdin)?.to_pair()?;
            cfg.check_field(t.field())?;
            let q = bijection::forward(&t, &v)?;
            Ok(Outcome::ok(
                cfg.render(&MatrixJson::from(&q), || q.to_string()),
            ))
        }
        Command::Inverse => {
            let q = cfg.read_input::<MatrixJson>(stdin)?.to_matrix()?;
            cfg.check_field(q.field())?;
            let (t, v) = bijection::inverse(&q)?;
            Ok(Outcome::ok(cfg.render(&PairJson::new(&t, &v), || {
                format!("T:\n{t}v: {:?}\n", v.codes())
            })))
        }
        Command::Fitting => {
            let q = cfg.read_input::<MatrixJson>(stdin)?.to_matrix()?;
            cfg.check_field(q.field())?;
            let fp = fitting::fitting_decompose(&q)?;
            Ok(Outcome::ok(cfg.render(&FittingPairJson::from(&fp), || {
                let rows = |s: &crate::subspaces::Subspace| {
                    s.basis().iter().map(Vector::codes).collect::<Vec<_>>()
                };
                format!(
                    "V (automorphism part): {:?}\nW (nilpotent part):   {:?}\nR:\n{}S:\n{}",
                    rows(&fp.v),
                    rows(&fp.w),
                    fp.r.matrix(),
                    fp.s.matrix()
                )
            })))
        }
        Command::Degree => {
            let (t, v) = cfg.read_input::<PairJson>(stdin)?.to_pair()?;
            cfg.check_field(t.field())?;
            let k = bijection::degree(&t, &v)?;
            Ok(Outcome::ok(
                cfg.render(&serde_json::json!({ "k": k }), || format!("k = {k}\n")),
            ))
        }
        Command::CountNilpotents => {
            let field = cfg.field()?;
            let n = cfg.dimension()?;
            let count = census::count_nilpotents(&field, n, &cfg.census())?;
            let expected = census::expected_nilpotents(&field, n).map(|e| e as u64);
            let total = census::operator_count(&field, n)
                .map(|t| t as u64)
                .unwrap_or(0);
            let verified = expected == Some(count);
            let value = serde_json::json!({
                "q": field.order(),
                "n": n,
                "total_operators": total,
                "nilpotent_count": count,
                "expected_nilpotents": expected,
                "success": verified,
            });
            let text = cfg.render(&value, || {
                format!(
                    "{:<24}{:>16}\n{:<24}{:>16}\n{:<24}{:>16}\n",
                    "operators",
                    total,
                    "nilpotents",
                    count,
                    "expected q^(n(n-1))",
                    expected.map_or("overflow".to_string(), |e| e.to_string())
                )
            });
            Ok(Outcome { text, verified })
        }
        Command::VerifyTheorem => {
            let report = census::verify_theorem(&cfg.field()?, cfg.dimension()?, &cfg.census())?;
            Ok(Outcome {
                text: cfg.render(&report, || report.to_string()),
                verified: report.success,
            })
        }
        Command::VerifyDegrees => {
            let table =
                census::verify_degree_refinement(&cfg.field()?, cfg.dimension()?, &cfg.census())?;
            Ok(Outcome {
                text: cfg.render(&table, || table.to_string()),
                verified: table.success,
            })
        }
        Command::JoyalForward => {
            let input = cfg.read_input::<PointedTreeJson>(stdin)?;
            let tree = input.tree.to_tree()?;
            let f = joyal::joyal_forward(&tree, input.v, input.v2)?;
            Ok(Outcome::ok(cfg.render(&FunctionJson::from(&f), || {
                format!("table: {:?}\n", f.table())
            })))
        }
        Command::JoyalInverse => {
            let f = cfg.read_input::<FunctionJson>(stdin)?.to_function()?;
            let (tree, v, v2) = joyal::joyal_inverse(&f);
            let out = PointedTreeJson {
                tree: TreeJson::from(&tree),
                v,
                v2,
            };
            Ok(Outcome::ok(cfg.render(&out, || {
                format!("edges: {:?}\nv: {v}\nv2: {v2}\n", tree.edges())
            })))
        }
        Command::VerifyJoyal => {
            let report = census::verify_joyal(cfg.dimension()?, &cfg.census())?;
            Ok(Outcome {
                text: cfg.render(&report, || report.to_string()),
                verified: report.success,
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };

    match execute(&cli, stdin) {
        Ok(outcome) => {
            let written = match &cli.config.output {
                Some(path) => fs::write(path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(outcome.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "error: {msg}");
                return EXIT_USAGE;
            }
            if outcome.verified {
                EXIT_OK
            } else {
                let _ = writeln!(stderr, "error: verification failed");
                EXIT_FAILED
            }
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["nilbij"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn forward_zero() {
        let input = r#"{"T":{"field":{"p":2,"k":1},"rows":2,"cols":2,"data":[[0,0],[0,0]]},"v":{"field":{"p":2,"k":1},"entries":[0,0]}}"#;
        let (code, out, _) = call(&["forward", "--json"], input);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"cols\":2,\"data\":[[0,0],[0,0]],\"field\":{\"k\":1,\"p\":2},\"rows\":2}\n"
        );
    }

    #[test]
    fn field_flags_must_match_input() {
        let input = r#"{"field":{"p":2,"k":1},"rows":1,"cols":1,"data":[[1]]}"#;
        let (code, _, err) = call(&["inverse", "--p", "3"], input);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        let (code, _, _) = call(&["inverse", "--p", "2", "--json"], input);
        assert_eq!(code, 0);
    }

    #[test]
    fn missing_flags() {
        assert_eq!(call(&["verify-theorem", "--n", "2"], "").0, 2);
        assert_eq!(call(&["count-nilpotents", "--p", "2"], "").0, 2);
        assert_eq!(call(&["verify-joyal"], "").0, 2);
        assert_eq!(
            call(
                &["verify-theorem", "--p", "2", "--n", "2", "--shards", "0"],
                ""
            )
            .0,
            2
        );
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        for flag in [
            "--p", "--k", "--poly", "--n", "--input", "--data", "--output", "--json", "--table",
            "--budget", "--shards",
        ] {
            assert!(out.contains(flag), "{flag} undocumented");
        }
    }
}
