//! The `noether` command-line tool.
//!
//! Every subcommand prints plain text or, with `--format json`, a JSON
//! document carrying `"schema": "v1"`. Exit status is `0` on success, `1` when
//! an internal consistency check fails and `2` on malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactmat::IntMatrix;
use crate::glattice::{
    cohomology_row, flabbiness_report, flabby_resolution, verify_resolution, PiLattice,
    SubgroupCohomology,
};
use crate::json::JsonInt;
use crate::noether::{classify, in_p0, noether_lattice, NoetherParams, Outcome, Verdict};
use crate::numfield::{IntPolynomial, NumberFieldSpec};
use crate::primes::primes_up_to;
use crate::symver::cross_check;

pub const SCHEMA: &str = "v1";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "noether",
    version,
    about = "Lattices, flabby resolutions and rationality verdicts for Noether's problem over C_p"
)]
pub struct Cli {
    /// Seed for randomized factorization steps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rationality verdict for k(x_0..x_{p-1})^{C_p} over k = Q[X]/(f).
    Classify {
        /// Ascending coefficients of the monic defining polynomial; "0 1" is X, i.e. k = Q.
        #[arg(long, allow_hyphen_values = true)]
        field: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dump the lattice M for a prime p in the lattice interchange format.
    Lattice {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tate cohomology table of a lattice file.
    Cohomology {
        #[arg(long)]
        lattice: PathBuf,
        /// Restrict to the subgroup of this order.
        #[arg(long)]
        subgroup: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build and verify a flabby resolution of a lattice file.
    Resolve {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-derive the action on M from the monomial change of variables and compare.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verdicts over Q for every prime up to a bound.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug)]
enum Failure {
    /// malformed input, exit 2
    Input(String),
    /// an internal check did not hold, exit 1
    Check(String),
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// JSON payloads
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub schema: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub schema: String,
    pub n: usize,
    pub rank: usize,
    /// Rows of the generator matrix (column `j` = image of basis vector `j`).
    pub action: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<NoetherParams>,
}

impl LatticeDoc {
    pub fn new(l: &PiLattice, params: Option<NoetherParams>) -> Self {
        LatticeDoc {
            schema: SCHEMA.into(),
            n: l.group().order(),
            rank: l.rank(),
            action: matrix_rows(l.action()),
            params,
        }
    }
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(JsonInt).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRowDoc {
    pub subgroup_order: usize,
    pub h0: Vec<JsonInt>,
    pub h_minus1: Vec<JsonInt>,
    pub h1: Vec<JsonInt>,
}

impl From<&SubgroupCohomology> for CohomologyRowDoc {
    fn from(r: &SubgroupCohomology) -> Self {
        let conv =
            |g: &crate::glattice::TateGroup| g.factors().iter().cloned().map(JsonInt).collect();
        CohomologyRowDoc {
            subgroup_order: r.subgroup_order,
            h0: conv(&r.h0),
            h_minus1: conv(&r.h_minus1),
            h1: conv(&r.h1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDoc {
    pub schema: String,
    pub n: usize,
    pub rank: usize,
    pub rows: Vec<CohomologyRowDoc>,
    /// Only present for the full table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flabby: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coflabby: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub schema: String,
    pub q_shape: Vec<usize>,
    pub m: LatticeDoc,
    pub q: LatticeDoc,
    pub e: LatticeDoc,
    pub inject: Vec<Vec<JsonInt>>,
    pub project: Vec<Vec<JsonInt>>,
    pub checks: Vec<CheckDoc>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub schema: String,
    pub p: u64,
    pub t: u64,
    pub z: Vec<String>,
    pub tau_images: Vec<String>,
    pub extracted: Vec<Vec<JsonInt>>,
    pub constructed: Vec<Vec<JsonInt>>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u64,
    pub outcome: Outcome,
    pub in_p0: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub schema: String,
    pub max: u64,
    pub rows: Vec<TableRow>,
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            1
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Check(e.to_string()))
}

fn write_text(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Check(e.to_string()))
}

/// Parses "a0 a1 ... an" (spaces and/or commas) into a polynomial.
pub fn parse_field(text: &str) -> Result<NumberFieldSpec, String> {
    let coeffs = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| BigInt::from_str(t).map_err(|e| format!("bad coefficient {t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    NumberFieldSpec::new(IntPolynomial::new(coeffs)).map_err(|e| e.to_string())
}

fn read_lattice(path: &PathBuf) -> Result<PiLattice, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    PiLattice::parse_interchange(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Classify { field, p, format } => {
            let k = parse_field(field).map_err(Failure::Input)?;
            let verdict = classify(&k, *p, cli.seed).map_err(Failure::input)?;
            match format {
                Format::Json => emit_json(
                    out,
                    &VerdictDoc {
                        schema: SCHEMA.into(),
                        verdict,
                    },
                ),
                Format::Text => {
                    let mut s = format!(
                        "p = {}\nfield = {}\noutcome = {}\nretract_rational = {}\n",
                        p,
                        k.minpoly(),
                        verdict.outcome,
                        verdict.retract_rational
                    );
                    for line in &verdict.provenance {
                        s.push_str(&format!("- {line}\n"));
                    }
                    write_text(out, &s)
                }
            }
        }
        Command::Lattice { p, format } => {
            let (l, params) = noether_lattice(*p).map_err(Failure::input)?;
            match format {
                Format::Json => emit_json(out, &LatticeDoc::new(&l, Some(params))),
                Format::Text => write_text(
                    out,
                    &format!(
                        "{}# p = {}\n# t = {}\n# s = {}\n",
                        l.to_interchange(),
                        params.p,
                        params.t,
                        params.s
                    ),
                ),
            }
        }
        Command::Cohomology {
            lattice,
            subgroup,
            format,
        } => {
            let l = read_lattice(lattice)?;
            let (rows, flags) = match subgroup {
                Some(d) => {
                    let s = l.group().subgroup(*d).map_err(Failure::input)?;
                    (vec![cohomology_row(&l, s)], None)
                }
                None => {
                    let rep = flabbiness_report(&l);
                    (rep.table, Some((rep.flabby, rep.coflabby)))
                }
            };
            match format {
                Format::Json => emit_json(
                    out,
                    &CohomologyDoc {
                        schema: SCHEMA.into(),
                        n: l.group().order(),
                        rank: l.rank(),
                        rows: rows.iter().map(CohomologyRowDoc::from).collect(),
                        flabby: flags.map(|f| f.0),
                        coflabby: flags.map(|f| f.1),
                    },
                ),
                Format::Text => {
                    let mut s = format!(
                        "# C_{} lattice of rank {}\n# order  H^0  H^-1  H^1\n",
                        l.group().order(),
                        l.rank()
                    );
                    for r in &rows {
                        s.push_str(&format!(
                            "{}  {}  {}  {}\n",
                            r.subgroup_order, r.h0, r.h_minus1, r.h1
                        ));
                    }
                    if let Some((fl, cofl)) = flags {
                        s.push_str(&format!("flabby = {fl}\ncoflabby = {cofl}\n"));
                    }
                    write_text(out, &s)
                }
            }
        }
        Command::Resolve { lattice, format } => {
            let l = read_lattice(lattice)?;
            let res = flabby_resolution(&l);
            let report = verify_resolution(&res);
            let passed = report.all_passed();
            match format {
                Format::Json => emit_json(
                    out,
                    &ResolutionDoc {
                        schema: SCHEMA.into(),
                        q_shape: res.q_shape.clone(),
                        m: LatticeDoc::new(&res.m, None),
                        q: LatticeDoc::new(&res.q, None),
                        e: LatticeDoc::new(&res.e, None),
                        inject: matrix_rows(&res.inject),
                        project: matrix_rows(&res.project),
                        checks: report
                            .checks
                            .iter()
                            .map(|c| CheckDoc {
                                name: c.name.to_string(),
                                passed: c.passed,
                                detail: c.detail.clone(),
                            })
                            .collect(),
                        passed,
                    },
                )?,
                Format::Text => {
                    let mut s = format!(
                        "rank M = {}, rank Q = {}, rank E = {}\nQ = sum of Z[C_{}/C_d] for d in {:?}\n# E\n{}",
                        res.m.rank(),
                        res.q.rank(),
                        res.e.rank(),
                        l.group().order(),
                        res.q_shape,
                        res.e.to_interchange()
                    );
                    for c in &report.checks {
                        s.push_str(&format!(
                            "[{}] {} {}\n",
                            if c.passed { "ok" } else { "FAIL" },
                            c.name,
                            c.detail
                        ));
                    }
                    write_text(out, &s)?;
                }
            }
            if passed {
                Ok(())
            } else {
                Err(Failure::Check(
                    "flabby resolution failed verification".into(),
                ))
            }
        }
        Command::Verify { p, format } => {
            let check = cross_check(*p).map_err(Failure::input)?;
            let ex = &check.extraction;
            match format {
                Format::Json => emit_json(
                    out,
                    &VerifyDoc {
                        schema: SCHEMA.into(),
                        p: *p,
                        t: ex.basis.t,
                        z: ex.basis.monomials.iter().map(ToString::to_string).collect(),
                        tau_images: ex.images.iter().map(ToString::to_string).collect(),
                        extracted: matrix_rows(&ex.matrix),
                        constructed: matrix_rows(&check.lattice_action),
                        matches: check.matches,
                    },
                )?,
                Format::Text => {
                    let mut s = format!("p = {}, t = {}\n", p, ex.basis.t);
                    for (i, (z, img)) in ex.basis.monomials.iter().zip(&ex.images).enumerate() {
                        s.push_str(&format!(
                            "z{} = {}    tau(z{}) = {}\n",
                            i + 1,
                            z,
                            i + 1,
                            img
                        ));
                    }
                    s.push_str("# extracted\n");
                    s.push_str(&ex.matrix.to_interchange());
                    s.push_str("# constructed\n");
                    s.push_str(&check.lattice_action.to_interchange());
                    for (i, j, a, b) in &check.mismatches {
                        s.push_str(&format!(
                            "mismatch at ({i}, {j}): extracted {a}, constructed {b}\n"
                        ));
                    }
                    s.push_str(&format!(
                        "verdict = {}\n",
                        if check.matches { "MATCH" } else { "MISMATCH" }
                    ));
                    write_text(out, &s)?;
                }
            }
            if check.matches {
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "extracted action differs from the constructed lattice for p = {p}"
                )))
            }
        }
        Command::Table { max, format } => {
            let rows = verdict_table(*max, cli.seed).map_err(Failure::Check)?;
            match format {
                Format::Json => emit_json(
                    out,
                    &TableDoc {
                        schema: SCHEMA.into(),
                        max: *max,
                        rows,
                    },
                ),
                Format::Text => {
                    let mut s = String::from("# p  outcome  in_P0\n");
                    for r in &rows {
                        s.push_str(&format!("{} {} {}\n", r.p, r.outcome, r.in_p0));
                    }
                    write_text(out, &s)
                }
            }
        }
    }
}

/// Verdicts over `Q` for every prime `<= max`, sorted by `p`.
pub fn verdict_table(max: u64, seed: u64) -> Result<Vec<TableRow>, String> {
    let q = NumberFieldSpec::rationals();
    primes_up_to(max)
        .into_par_iter()
        .map(|p| {
            classify(&q, p, seed)
                .map(|v| TableRow {
                    p,
                    outcome: v.outcome,
                    in_p0: in_p0(p),
                })
                .map_err(|e| e.to_string())
        })
        .collect()
}
