//! Command-line driver.
//!
//! Exit codes: 0 success or verified, 1 mathematical failure (not a
//! Gröbner-Shirshov basis, dimension mismatch), 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::gsb::{complete, is_gsb};
use crate::lie::{bracket, LiePoly};
use crate::parse::{parse_expr, parse_rules, parse_theta};
use crate::pc::{clique_series_dims, generate_relations, irr_basis, pc_normal_form, CommGraph};
use crate::words::{enumerate_alsw, lyndon_factorize, Alphabet};

#[derive(Parser, Debug)]
#[command(
    name = "pclie",
    about = "Lyndon-Shirshov words, Groebner-Shirshov bases and free partially commutative Lie algebras",
    after_help = "Alphabets are declared in descending order, e.g. \"x > y > z\".\n\
                  Theta files: the alphabet declaration on the first line, then one edge per line.\n\
                  When a rewrite could apply at several places, the lowest rule is used at its leftmost occurrence."
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all ALSWs up to a length, deg-lex ascending.
    Alsw {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_deg: usize,
    },
    /// Non-decreasing ALSW factorization of a word.
    Factorize {
        #[arg(long)]
        alphabet: String,
        word: String,
    },
    /// Canonical bracketing of an ALSW.
    Bracket {
        #[arg(long)]
        alphabet: String,
        word: String,
    },
    /// Normal form of a Lie expression in Lie(X|theta).
    Nf {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Bounded Groebner-Shirshov check of the relation set of theta.
    Verify {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Irreducible NLSW basis of Lie(X|theta) by degree.
    Basis {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        dims_only: bool,
        /// Compare against the clique-polynomial dimensions.
        #[arg(long)]
        cross_check: bool,
    },
    /// Bounded completion of a rule file.
    Complete {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn theta(path: &Path) -> Result<CommGraph, Failure> {
    parse_theta(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn lie_json(a: &Alphabet, p: &LiePoly) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .rev()
        .map(|(w, c)| json!({"word": a.render_word(w), "coefficient": c.to_string()}))
        .collect();
    json!({"rendered": a.render_lie(p), "terms": terms})
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((code, text)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), Failure> {
    let json = cli.format == Format::Json;
    let emit = |v: Value| format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    match &cli.command {
        Command::Alsw { alphabet, max_deg } => {
            let a = Alphabet::parse(alphabet)?;
            let words: Vec<String> = enumerate_alsw(&a, *max_deg)
                .iter()
                .map(|w| a.render_word(w))
                .collect();
            Ok((
                0,
                if json {
                    emit(json!(words))
                } else {
                    lines(&words)
                },
            ))
        }
        Command::Factorize { alphabet, word } => {
            let a = Alphabet::parse(alphabet)?;
            let factors: Vec<String> = lyndon_factorize(&a.parse_word(word)?)?
                .iter()
                .map(|w| a.render_word(w))
                .collect();
            let text = if json {
                emit(json!(factors))
            } else {
                format!("{}\n", factors.join(" "))
            };
            Ok((0, text))
        }
        Command::Bracket { alphabet, word } => {
            let a = Alphabet::parse(alphabet)?;
            let t = bracket(&a.parse_word(word)?)?;
            let rendered = a.render_tree(&t);
            Ok((
                0,
                if json {
                    emit(json!({"tree": rendered}))
                } else {
                    format!("{rendered}\n")
                },
            ))
        }
        Command::Nf { theta: path, expr } => {
            let g = theta(path)?;
            let a = g.alphabet();
            let p = parse_expr(expr, a)?.to_lie()?;
            let nf = pc_normal_form(&p, &g)?;
            let text = if json {
                emit(lie_json(a, &nf))
            } else {
                format!("{}\n", a.render_lie(&nf))
            };
            Ok((0, text))
        }
        Command::Verify {
            theta: path,
            max_deg,
        } => {
            let g = theta(path)?;
            let a = g.alphabet();
            let rules = generate_relations(&g, *max_deg);
            let report = is_gsb(&rules, *max_deg)?;
            let code = if report.ok { 0 } else { 1 };
            let text = if json {
                let failures: Vec<Value> = report
                    .failures
                    .iter()
                    .map(|f| {
                        json!({
                            "kind": f.ambiguity.kind.to_string(),
                            "w": a.render_word(&f.ambiguity.w),
                            "remainder": lie_json(a, &f.remainder),
                        })
                    })
                    .collect();
                emit(json!({
                    "ok": report.ok,
                    "bounded": true,
                    "max_deg": report.max_deg,
                    "rules": report.rules,
                    "ambiguities": report.ambiguities,
                    "failures": failures,
                }))
            } else {
                report.render(a)
            };
            Ok((code, text))
        }
        Command::Basis {
            theta: path,
            max_deg,
            dims_only,
            cross_check,
        } => {
            let g = theta(path)?;
            let a = g.alphabet();
            let basis = irr_basis(&g, *max_deg);
            let dims = basis.dimensions();
            let oracle = if *cross_check {
                Some(clique_series_dims(&g, *max_deg)?)
            } else {
                None
            };
            let mismatch = oracle.as_ref().is_some_and(|o| *o != dims);
            let code = if mismatch { 1 } else { 0 };
            let text = if json {
                let degrees: Vec<Value> = (1..=*max_deg)
                    .map(|d| {
                        let mut v = json!({"degree": d, "dimension": dims[d - 1]});
                        if !dims_only {
                            let trees: Vec<String> =
                                basis.trees(d).iter().map(|t| a.render_tree(t)).collect();
                            v["basis"] = json!(trees);
                        }
                        v
                    })
                    .collect();
                let mut v = json!({"degrees": degrees});
                if let Some(o) = &oracle {
                    v["cross_check"] = json!({"ok": !mismatch, "clique_series": o});
                }
                emit(v)
            } else {
                let mut s = String::new();
                let tally: Vec<String> = dims
                    .iter()
                    .enumerate()
                    .map(|(i, d)| format!("{}:{d}", i + 1))
                    .collect();
                if *dims_only {
                    s.push_str(&tally.join(" "));
                    s.push('\n');
                } else {
                    for d in 1..=*max_deg {
                        let trees: Vec<String> =
                            basis.trees(d).iter().map(|t| a.render_tree(t)).collect();
                        s.push_str(&format!("{d}: {}\n", trees.join(", ")));
                    }
                }
                if let Some(o) = &oracle {
                    if mismatch {
                        let expected: Vec<String> = o
                            .iter()
                            .enumerate()
                            .map(|(i, d)| format!("{}:{d}", i + 1))
                            .collect();
                        s.push_str(&format!(
                            "cross-check: MISMATCH clique series {}\n",
                            expected.join(" ")
                        ));
                    } else {
                        s.push_str("cross-check: ok\n");
                    }
                }
                s
            };
            Ok((code, text))
        }
        Command::Complete { rules, max_deg } => {
            let (a, rules) = parse_rules(&read(rules)?)?;
            let done = complete(&rules, *max_deg)?;
            let rendered: Vec<String> = done.iter().map(|r| a.render_lie(r.body())).collect();
            let text = if json {
                emit(json!({"bounded": true, "max_deg": max_deg, "rules": rendered}))
            } else {
                lines(&rendered)
            };
            Ok((0, text))
        }
    }
}

fn lines(items: &[String]) -> String {
    let mut s = String::new();
    for i in items {
        s.push_str(i);
        s.push('\n');
    }
    s
}
