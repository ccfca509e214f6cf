//! Command-line front end for the orbifold invariant calculators.
//!
//! Output is JSON by default (`--csv` selects CSV with a header row);
//! rationals are serialized as `p/q` strings in lowest terms, never as
//! floating point. Exit codes: 0 success, 2 parse error, 3 domain error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use orbifolds::covers::{validate_action, orientation_double_cover, PermutationAction};
use orbifolds::enumerate::{enumerate_rigid, Bounds};
use orbifolds::error::Error;
use orbifolds::groups::{presentation_coxeter_triangle, presentation_fuchsian};
use orbifolds::hitchin::{hitchin_dimension_exponents, hitchin_dimension_pgl, ExponentProfile};
use orbifolds::picard::{OrbiCurve, OrbiLineBundle};
use orbifolds::riemannroch::{coarse_rr_oracle, euler_char_sheaf};
use orbifolds::signatures::{parse_signature, OrbifoldSignature};

#[derive(Parser)]
#[command(name = "orb", about = "Exact invariants of closed hyperbolic 2-orbifolds")]
struct Cli {
    /// Emit CSV (with header row) instead of JSON
    #[arg(long, global = true)]
    csv: bool,
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Read signatures from a file, one per line, instead of the argument
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbifold Euler characteristic
    Chi { signature: Option<String> },
    /// Teichmuller-space dimension
    Teich { signature: Option<String> },
    /// Hitchin-component dimension
    Hitchin {
        /// Rank of PGL(n;R)
        #[arg(long, short)]
        n: Option<u32>,
        /// Exponent profile label (A<r>, BC<r>, D<r>, G2) instead of --n
        #[arg(long, conflicts_with = "n")]
        exponents: Option<String>,
        signature: Option<String>,
    },
    /// Orbifold Riemann-Roch Euler characteristic of a line bundle
    Rr {
        /// Bundle as JSON {"coarse_degree":D, "isotropies":[..]}
        #[arg(long, conflicts_with = "canonical_power")]
        bundle: Option<String>,
        /// Use the d-th canonical power as the bundle
        #[arg(long, value_name = "D")]
        canonical_power: Option<u32>,
        signature: Option<String>,
    },
    /// Lift a signature through a permutation action and check chi multiplicativity
    Cover {
        /// JSON file {"degree":N, "a":[..], "b":[..], "c":[[..],..]}, 1-indexed
        #[arg(long)]
        action: String,
        signature: Option<String>,
    },
    /// Orientation double cover of a mirrored or non-orientable signature
    DoubleCover { signature: Option<String> },
    /// Fundamental-group presentation (Fuchsian or Coxeter triangle)
    Presentation { signature: Option<String> },
    /// Hyperbolic signatures with Hitchin dimension zero within bounds
    Rigid {
        #[arg(long, short)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        max_genus: u32,
        #[arg(long, default_value_t = 3)]
        max_cones: u32,
        #[arg(long, default_value_t = 0)]
        max_corners: u32,
        #[arg(long, default_value_t = 12)]
        max_order: u32,
        #[arg(long, default_value_t = 0)]
        max_mirrors: u32,
        #[arg(long)]
        orientable_only: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::InvalidSignature(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    if let Command::Rigid {
        n,
        max_genus,
        max_cones,
        max_corners,
        max_order,
        max_mirrors,
        orientable_only,
    } = &cli.command
    {
        return run_rigid(
            cli,
            *n,
            &Bounds {
                max_genus: *max_genus,
                max_cone_points: *max_cones,
                max_corners: *max_corners,
                max_order: *max_order,
                max_mirror_circles: *max_mirrors,
                orientable_only: *orientable_only,
            },
        );
    }

    let signatures = gather_signatures(cli)?;
    let mut rows = Vec::with_capacity(signatures.len());
    for sig in &signatures {
        rows.push(evaluate(&cli.command, sig)?);
    }

    let batch = cli.batch.is_some();
    let mut out = String::new();
    if cli.csv {
        let header: Vec<&str> = std::iter::once("signature")
            .chain(rows[0].columns.iter().map(|(k, _)| *k))
            .collect();
        writeln!(out, "{}", header.join(",")).unwrap();
        for (sig, row) in signatures.iter().zip(&rows) {
            let mut fields = vec![csv_quote(&sig.to_string())];
            fields.extend(row.columns.iter().map(|(_, v)| csv_field(v)));
            writeln!(out, "{}", fields.join(",")).unwrap();
        }
    } else {
        for (sig, row) in signatures.iter().zip(&rows) {
            let mut obj = serde_json::Map::new();
            if batch {
                obj.insert("signature".into(), json!(sig.to_string()));
            }
            for (k, v) in &row.columns {
                obj.insert((*k).into(), v.clone());
            }
            writeln!(out, "{}", Value::Object(obj)).unwrap();
        }
    }
    Ok(out)
}

/// One output record: ordered key/value columns.
struct Row {
    columns: Vec<(&'static str, Value)>,
}

fn gather_signatures(cli: &Cli) -> Result<Vec<OrbifoldSignature>, Error> {
    let texts: Vec<String> = if let Some(path) = &cli.batch {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read batch file {path}: {e}")))?;
        content
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()
    } else {
        let arg = match &cli.command {
            Command::Chi { signature }
            | Command::Teich { signature }
            | Command::Hitchin { signature, .. }
            | Command::Rr { signature, .. }
            | Command::Cover { signature, .. }
            | Command::DoubleCover { signature }
            | Command::Presentation { signature } => signature,
            Command::Rigid { .. } => &None,
        };
        vec![arg
            .clone()
            .ok_or_else(|| Error::Domain("missing signature argument".into()))?]
    };
    texts.iter().map(|t| parse_signature(t)).collect()
}

fn evaluate(command: &Command, sig: &OrbifoldSignature) -> Result<Row, Error> {
    let columns = match command {
        Command::Chi { .. } => {
            vec![("chi", json!(sig.orbifold_euler_characteristic()))]
        }
        Command::Teich { .. } => vec![("dim", json!(sig.teichmuller_dimension()?))],
        Command::Hitchin { n, exponents, .. } => {
            let dim = match (n, exponents) {
                (Some(n), None) => hitchin_dimension_pgl(sig, *n)?,
                (None, Some(label)) => {
                    hitchin_dimension_exponents(sig, &ExponentProfile::by_label(label)?)?
                }
                _ => return Err(Error::Domain("give exactly one of --n, --exponents".into())),
            };
            vec![("dim", json!(dim))]
        }
        Command::Rr {
            bundle,
            canonical_power,
            ..
        } => {
            let curve = OrbiCurve::from_signature(sig)?;
            let bundle = match (bundle, canonical_power) {
                (Some(text), None) => {
                    let raw: Value = serde_json::from_str(text)
                        .map_err(|e| Error::Domain(format!("bad bundle JSON: {e}")))?;
                    let parsed: OrbiLineBundleJson = serde_json::from_value(raw)
                        .map_err(|e| Error::Domain(format!("bad bundle JSON: {e}")))?;
                    OrbiLineBundle::new(&curve, parsed.coarse_degree, parsed.isotropies)?
                }
                (None, Some(d)) => curve.canonical_power(*d),
                _ => {
                    return Err(Error::Domain(
                        "give exactly one of --bundle, --canonical-power".into(),
                    ))
                }
            };
            let chi = euler_char_sheaf(&curve, &bundle)?;
            let oracle = coarse_rr_oracle(&curve, &bundle)?;
            vec![
                ("chi", json!(chi)),
                ("coarse_rr", json!(oracle)),
                ("degree", json!(bundle.degree(&curve)?)),
                ("coarse_degree", json!(bundle.coarse_degree())),
                ("isotropies", json!(bundle.isotropies())),
            ]
        }
        Command::Cover { action, .. } => {
            let text = std::fs::read_to_string(action)
                .map_err(|e| Error::Domain(format!("cannot read action file {action}: {e}")))?;
            let action = PermutationAction::from_json(&text)?;
            let report = validate_action(sig, &action)?.check_multiplicativity()?;
            vec![
                ("cover", json!(report.cover.to_string())),
                ("cover_chi", json!(report.cover_chi)),
                ("base_chi_times_degree", json!(report.base_chi_times_degree)),
                ("multiplicative", json!(report.multiplicative)),
            ]
        }
        Command::DoubleCover { .. } => {
            let cover = orientation_double_cover(sig)?;
            vec![
                ("double_cover", json!(cover.to_string())),
                ("chi", json!(cover.orbifold_euler_characteristic())),
            ]
        }
        Command::Presentation { .. } => {
            // triangle orbifolds get the Coxeter presentation, orientable
            // closed cone-type signatures the Fuchsian one
            let pres = if sig.is_orientable_closed() {
                presentation_fuchsian(sig)?
            } else if sig.genus() == 0
                && sig.mirror_circles() == 1
                && sig.cone_count() == 0
                && sig.corner_count() == 3
            {
                let c = sig.corner_orders();
                presentation_coxeter_triangle(c[0], c[1], c[2])?
            } else {
                return Err(Error::Domain(
                    "presentations are emitted for orientable closed cone-type \
                     signatures and triangles only"
                        .into(),
                ));
            };
            vec![
                ("presentation", json!(pres.to_string())),
                ("generators", json!(pres.generators())),
                ("relators", json!(pres.relator_strings())),
            ]
        }
        Command::Rigid { .. } => unreachable!("handled in run"),
    };
    Ok(Row { columns })
}

#[derive(serde::Deserialize)]
struct OrbiLineBundleJson {
    coarse_degree: i64,
    isotropies: Vec<u32>,
}

fn run_rigid(cli: &Cli, n: u32, bounds: &Bounds) -> Result<String, Error> {
    let rigid = enumerate_rigid(n, bounds)?;
    let mut out = String::new();
    if cli.csv {
        writeln!(out, "signature,chi,dim").unwrap();
        for sig in &rigid {
            writeln!(
                out,
                "{},{},0",
                csv_quote(&sig.to_string()),
                sig.orbifold_euler_characteristic()
            )
            .unwrap();
        }
    } else {
        for sig in &rigid {
            writeln!(
                out,
                "{}",
                json!({
                    "signature": sig.to_string(),
                    "chi": sig.orbifold_euler_characteristic(),
                    "dim": 0,
                })
            )
            .unwrap();
        }
    }
    Ok(out)
}

/// Quote a field when it contains a comma, per RFC 4180.
fn csv_quote(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::String(s) => csv_quote(s),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(csv_field).collect();
            format!("\"{}\"", inner.join(","))
        }
        other => other.to_string(),
    }
}
