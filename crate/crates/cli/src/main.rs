//! `arc-ic`: exact basic-function computations from the command line.
//!
//! JSON goes to stdout; a human-readable table goes to stderr when stderr is
//! a terminal. Exit codes: 0 all rows pass, 1 at least one FAIL row, 2 input
//! or usage error.

use arc_ic_core::error::{ArcError, Result};
use arc_ic_core::global_curve::{
    divisor_sum_direct, divisor_sum_via_normalization, global_euler_product, CurveData,
};
use arc_ic_core::lattice::cone_from_generators;
use arc_ic_core::report::{
    bigint_to_json, canonicalize_input, laurent_to_json, parse_cone_input, point_to_json,
    ReportRow, RowStatus, RunReport,
};
use arc_ic_core::satake::{self, Convention};
use arc_ic_core::strata::{closure_poset, is_primitive_multiset};
use arc_ic_core::suite::acceptance_suite;
use arc_ic_core::toric::SaturatedMonoid;
use arc_ic_core::{LatticePoint, Laurent};
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, Zero};
use serde_json::{json, Map, Value};
use std::io::IsTerminal;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "arc-ic", version, about = "Exact basic functions on arc spaces: toric decomposition counts, curve-level cross-checks, and the GL_N matrix-monoid family")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Plus,
    Minus,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Plus => Convention::Plus,
            ConventionArg::Minus => Convention::Minus,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decomposition-count series (or one value) for a saturated toric monoid
    Toric {
        /// Cone descriptor JSON file: {"rank": r, "generators": [[..],..]}
        #[arg(long)]
        cone: PathBuf,
        /// Grading bound for the series
        #[arg(long, default_value_t = 8)]
        bound: u64,
        /// Single point "a,b,..." instead of the whole series
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Hilbert basis of the saturation
    Hilbert {
        #[arg(long)]
        cone: PathBuf,
    },
    /// Degree fiber of multisets, its refinement poset, and primitive flags
    Strata {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long)]
        lambda: String,
    },
    /// Three-way divisor-count identity over the projective line
    Global {
        #[arg(long)]
        cone: PathBuf,
        /// Residue field size
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        bound: u64,
    },
    /// Basic-function value on a GL_N double coset of the matrix monoid
    Lmonoid {
        #[arg(long)]
        n_gl: usize,
        #[arg(long, default_value = "standard")]
        rep: String,
        /// Dominant weight "m1,m2,..."
        #[arg(long)]
        mu: String,
        /// Also render values as numbers at this q (v = sqrt(q))
        #[arg(long)]
        q_numeric: Option<u64>,
        #[arg(long, value_enum, default_value = "plus")]
        convention: ConventionArg,
    },
    /// Run the whole acceptance suite
    CheckAll {
        #[arg(long, default_value = "desk")]
        suite: String,
    },
}

fn load_monoid(path: &PathBuf) -> Result<(Value, SaturatedMonoid)> {
    let text = std::fs::read_to_string(path).map_err(|e| ArcError::InvalidInput {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let raw: Value = serde_json::from_str(&text).map_err(|e| ArcError::InvalidInput {
        path: path.display().to_string(),
        message: format!("malformed JSON: {e}"),
    })?;
    let canonical = canonicalize_input(&raw)?;
    let (rank, gens) = parse_cone_input(&canonical)?;
    let cone = cone_from_generators(rank, &gens)?;
    Ok((canonical, SaturatedMonoid::new(cone)?))
}

fn parse_point(s: &str, flag: &str) -> Result<LatticePoint> {
    let coords: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|c| c.trim().parse::<i64>()).collect();
    match coords {
        Ok(v) if !v.is_empty() => Ok(LatticePoint::from_i64s(&v)),
        _ => Err(ArcError::InvalidInput {
            path: flag.into(),
            message: format!("expected a comma-separated integer vector, got {s:?}"),
        }),
    }
}

/// Render a v-Laurent value at a numeric q (so v^2 = q). Even powers give an
/// exact rational; odd powers contribute a sqrt(q) multiple.
fn numeric_at_q(p: &Laurent, q: u64) -> String {
    let qr = BigRational::from(BigInt::from(q));
    let mut even = Laurent::zero();
    let mut odd = Laurent::zero();
    for (e, c) in p.terms() {
        if e.rem_euclid(2) == 0 {
            even.add_term(e / 2, c);
        } else {
            odd.add_term((e - 1) / 2, c);
        }
    }
    let even_val = even.eval(&qr);
    let odd_val = odd.eval(&qr);
    if odd_val.is_zero() {
        even_val.to_string()
    } else if even_val.is_zero() {
        format!("({odd_val})*sqrt({q})")
    } else {
        format!("{even_val} + ({odd_val})*sqrt({q})")
    }
}

fn multiset_json(mu: &arc_ic_core::strata::CMultiset) -> Value {
    Value::Array(
        mu.counts
            .iter()
            .map(|(p, m)| json!({"point": point_to_json(p), "multiplicity": m}))
            .collect(),
    )
}

fn run(cmd: &Cmd) -> Result<(RunReport, Map<String, Value>)> {
    let mut extra = Map::new();
    let report = match cmd {
        Cmd::Toric { cone, bound, lambda } => {
            let (inputs, m) = load_monoid(cone)?;
            let mut report = RunReport::new("toric", inputs);
            if m.enlarged_by_saturation {
                report.push(ReportRow::info(
                    "saturation",
                    json!("generators were enlarged to the full saturation"),
                ));
            }
            match lambda {
                Some(s) => {
                    let lam = parse_point(s, "--lambda")?;
                    let value = m.ic_arc_value(&lam)?;
                    report.push(ReportRow::info("m_lambda", laurent_to_json(&value)));
                    extra.insert("m_lambda".into(), laurent_to_json(&value));
                }
                None => {
                    let series = m.toric_ic_series(&BigInt::from(*bound));
                    let terms: Vec<Value> = series
                        .sorted_terms()
                        .into_iter()
                        .map(|(lam, c)| {
                            json!({"lambda": point_to_json(lam), "coeff": laurent_to_json(c)})
                        })
                        .collect();
                    report.push(ReportRow::info("terms", json!(terms.len())));
                    extra.insert("terms".into(), Value::Array(terms));
                }
            }
            report
        }
        Cmd::Hilbert { cone } => {
            let (inputs, m) = load_monoid(cone)?;
            let mut report = RunReport::new("hilbert", inputs);
            let basis: Vec<Value> = m.hilbert_basis.iter().map(point_to_json).collect();
            report.push(ReportRow::info("hilbert_basis_size", json!(basis.len())));
            extra.insert("hilbert_basis".into(), Value::Array(basis));
            report
        }
        Cmd::Strata { cone, lambda } => {
            let (inputs, m) = load_monoid(cone)?;
            let lam = parse_point(lambda, "--lambda")?;
            let mut report = RunReport::new("strata", inputs);
            let poset = closure_poset(&m, &lam)?;
            let fiber: Vec<Value> = poset.multisets.iter().map(multiset_json).collect();
            let primitive: Vec<bool> = poset
                .multisets
                .iter()
                .map(|mu| is_primitive_multiset(&m, mu))
                .collect();
            let edges: Vec<Value> = poset
                .covering_edges()
                .into_iter()
                .map(|(a, b)| json!([a, b]))
                .collect();
            report.push(ReportRow::info("fiber_size", json!(fiber.len())));
            let primitive_count = primitive.iter().filter(|&&b| b).count();
            let m_lambda = m.decomposition_count(&lam)?;
            report.push(ReportRow::checked(
                "primitive_count_equals_m_lambda",
                json!(primitive_count),
                bigint_to_json(&m_lambda),
            ));
            extra.insert("fiber".into(), Value::Array(fiber));
            extra.insert("covering_edges".into(), Value::Array(edges));
            extra.insert("primitive".into(), json!(primitive));
            report
        }
        Cmd::Global { cone, q, bound } => {
            let (inputs, m) = load_monoid(cone)?;
            if *q < 2 {
                return Err(ArcError::InvalidInput {
                    path: "--q".into(),
                    message: "need a prime power >= 2".into(),
                });
            }
            let mut report = RunReport::new("global", inputs);
            let b = BigInt::from(*bound);
            let curve = CurveData::p1(*q, *bound);
            let product = global_euler_product(&m, &curve, &b);
            for lam in m.cone.enumerate_up_to(&m.grading, &b) {
                let direct = divisor_sum_direct(&m, &curve, &lam)?;
                let via = divisor_sum_via_normalization(&m, &curve, &lam)?;
                let coeff = product.coefficient(&lam).coeff(0);
                let status = if direct == via && direct == coeff {
                    RowStatus::Pass
                } else {
                    RowStatus::Fail
                };
                report.push(ReportRow {
                    label: format!("lambda {:?}", lam.0),
                    value: json!({
                        "direct": bigint_to_json(&direct),
                        "via_normalization": bigint_to_json(&via),
                        "euler_product": bigint_to_json(&coeff),
                    }),
                    expected: None,
                    status,
                });
            }
            report
        }
        Cmd::Lmonoid {
            n_gl,
            rep,
            mu,
            q_numeric,
            convention,
        } => {
            if rep != "standard" {
                return Err(ArcError::Unsupported(format!(
                    "representation {rep:?} is not supported; use \"standard\""
                )));
            }
            let w = parse_point(mu, "--mu")?;
            let w_i64: Vec<i64> = w
                .0
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect();
            let conv: Convention = (*convention).into();
            let ic = satake::ic_lmonoid_value(*n_gl, &[1], &w_i64, conv)?;
            let n: i64 = w_i64.iter().sum();
            let psi = satake::psi_n(*n_gl, &[1], n as u64, conv)?;
            let psi_value = psi.value(&w_i64);
            let mut report = RunReport::new(
                "lmonoid",
                json!({"n_gl": n_gl, "rep": rep, "mu": w_i64}),
            );
            report.push(ReportRow::info("psi", laurent_to_json(&psi_value)));
            report.push(ReportRow::checked(
                "ic",
                laurent_to_json(&ic),
                json!({"0": 1}),
            ));
            extra.insert("psi".into(), laurent_to_json(&psi_value));
            extra.insert("ic".into(), laurent_to_json(&ic));
            if let Some(q) = q_numeric {
                extra.insert("psi_at_q".into(), json!(numeric_at_q(&psi_value, *q)));
                extra.insert("ic_at_q".into(), json!(numeric_at_q(&ic, *q)));
            }
            report
        }
        Cmd::CheckAll { suite } => {
            if suite != "desk" {
                return Err(ArcError::InvalidInput {
                    path: "--suite".into(),
                    message: format!("unknown suite {suite:?}; only \"desk\" exists"),
                });
            }
            let mut report = RunReport::new("check-all", json!({"suite": suite}));
            for r in acceptance_suite() {
                report.push(ReportRow {
                    label: r.name.to_string(),
                    value: json!(r.detail),
                    expected: None,
                    status: if r.passed { RowStatus::Pass } else { RowStatus::Fail },
                });
            }
            report
        }
    };
    Ok((report, extra))
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok((report, extra)) => {
            let mut out = report.to_json();
            if let Value::Object(map) = &mut out {
                for (k, v) in extra {
                    map.insert(k, v);
                }
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if std::io::stderr().is_terminal() {
                eprint!("{}", report.render_table());
            }
            std::process::exit(if report.passed() { 0 } else { 1 });
        }
        Err(e) => {
            let err = match &e {
                ArcError::InvalidInput { path, message } => {
                    json!({"error": {"kind": "invalid_input", "path": path, "message": message}})
                }
                other => json!({"error": {"kind": "error", "message": other.to_string()}}),
            };
            println!("{}", serde_json::to_string_pretty(&err).unwrap());
            std::process::exit(2);
        }
    }
}
