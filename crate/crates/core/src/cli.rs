//! Command-line interface. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::AlgebraSpec;
use crate::error::Error;
use crate::ga::{Multivector, Signature};
use crate::isomorphism::{bullet_isomorphism, classification_row, verify_witness};
use crate::octonify::{
    associator, bullet_product, bullet_zero_divisor, classify, nonassociativity_witness, norm_diagonal,
    octonion_norm, BulletVariant,
};
use crate::sampling::{SampleConfig, DEFAULT_SEED, DEFAULT_TRIALS};
use crate::verify::{run_suite, Report, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hurwitz-ga", version, about = "Exact 3D geometric algebras and the Hurwitz algebras inside them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum WitnessKind {
    ZeroDivisor,
    NonAssoc,
    Isomorphism,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Cayley table: a class name (R C Cs H Hs O Os), ga:p,q,
    /// bullet:p,q:+|- or biq:C|Cs,H|Hs
    Table {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify G(p,q): tensor factorization, even and pseudoscalar
    /// subalgebras, and the two bullet algebras
    Classify {
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, env = "HURWITZ_GA_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Produce a verified witness for a bullet algebra
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        p: u32,
        q: u32,
        /// + or -
        #[arg(default_value = "+", allow_hyphen_values = true)]
        variant: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli.command) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn internal(e: Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn no_csv(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!("csv output is only available for tables, not {what}")));
    }
    Ok(())
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn execute(cmd: &Command) -> Result<(i32, String), Failure> {
    match cmd {
        Command::Table { spec, format } => {
            let spec: AlgebraSpec = spec.parse().map_err(usage)?;
            let table = spec.build().map_err(internal)?;
            let text = match format {
                Format::Text => table.to_text(),
                Format::Json => table.to_json(),
                Format::Csv => table.to_csv(),
            };
            Ok((EXIT_OK, with_newline(text)))
        }
        Command::Classify { p, q, format } => {
            no_csv(*format, "classify")?;
            let sig = Signature::from_pq(*p, *q).map_err(usage)?;
            let row = classification_row(sig);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "signature": sig.to_string(),
                    "tensor": row.tensor_label(),
                    "even": row.even.symbol(),
                    "pseudoscalar": row.pseudoscalar.symbol(),
                    "plus": row.plus.symbol(),
                    "minus": row.minus.symbol(),
                }))
                .expect("json"),
                _ => format!(
                    "{sig}: {}, {}, {}, {}, {}",
                    row.tensor_label(),
                    row.even.symbol(),
                    row.pseudoscalar.symbol(),
                    row.plus.symbol(),
                    row.minus.symbol()
                ),
            };
            Ok((EXIT_OK, with_newline(text)))
        }
        Command::Verify { suite, trials, seed, format } => {
            no_csv(*format, "verify")?;
            let cfg = SampleConfig::new(*trials, *seed);
            let report = Report::new(
                format!("verify {} --trials {trials} --seed {seed}", suite.name()),
                run_suite(*suite, &cfg),
            );
            let code = if report.all_passed() { EXIT_OK } else { EXIT_FAIL };
            let text = match format {
                Format::Json => report.to_json(),
                _ => report.to_text(),
            };
            Ok((code, with_newline(text)))
        }
        Command::Witness { kind, p, q, variant, format } => {
            no_csv(*format, "witness")?;
            let sig = Signature::from_pq(*p, *q).map_err(usage)?;
            let variant: BulletVariant = variant.parse().map_err(usage)?;
            let (ok, value, text) = witness(*kind, sig, variant).map_err(internal)?;
            let code = if ok { EXIT_OK } else { EXIT_FAIL };
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&value).expect("json"),
                _ => text,
            };
            Ok((code, with_newline(body)))
        }
    }
}

/// Returns (verified, json, text).
fn witness(
    kind: WitnessKind,
    sig: Signature,
    v: BulletVariant,
) -> Result<(bool, serde_json::Value, String), Error> {
    let algebra = format!("{sig} {v}");
    match kind {
        WitnessKind::ZeroDivisor => match bullet_zero_divisor(sig, v)? {
            None => {
                let reason = format!("none exists (norm positive definite, diagonal {})", norm_diagonal(sig, v));
                let value = json!({"kind": "zero-divisor", "algebra": algebra, "witness": null, "reason": reason});
                Ok((true, value, format!("{algebra}: {reason}")))
            }
            Some(zd) => {
                let product = bullet_product(&zd.x, &zd.y, v)?;
                let (nx, ny) = (octonion_norm(&zd.x, v), octonion_norm(&zd.y, v));
                let ok = product.is_zero() && nx.is_zero() && ny.is_zero();
                let value = json!({
                    "kind": "zero-divisor", "algebra": algebra,
                    "x": zd.x.to_string(), "y": zd.y.to_string(),
                    "product": product.to_string(),
                    "norm_x": nx.to_string(), "norm_y": ny.to_string(),
                    "verified": ok,
                });
                let text = format!(
                    "{algebra}\nx = {}\ny = {}\nx{v}y = {product}\nN(x) = {nx}\nN(y) = {ny}",
                    zd.x, zd.y
                );
                Ok((ok, value, text))
            }
        },
        WitnessKind::NonAssoc => {
            let [a, b, c] = nonassociativity_witness(sig, v)?;
            let [x, y, z] = [a, b, c].map(|k| Multivector::blade(sig, k));
            let left = bullet_product(&bullet_product(&x, &y, v)?, &z, v)?;
            let right = bullet_product(&x, &bullet_product(&y, &z, v)?, v)?;
            let assoc = associator(&x, &y, &z, v)?;
            let ok = !assoc.is_zero();
            let value = json!({
                "kind": "non-assoc", "algebra": algebra,
                "triple": [a.label(), b.label(), c.label()],
                "left": left.to_string(), "right": right.to_string(),
                "associator": assoc.to_string(), "verified": ok,
            });
            let text = format!(
                "{algebra}\n(x, y, z) = ({a}, {b}, {c})\n(x{v}y){v}z = {left}\nx{v}(y{v}z) = {right}\nassociator = {assoc}"
            );
            Ok((ok, value, text))
        }
        WitnessKind::Isomorphism => {
            let w = bullet_isomorphism(sig, v)?;
            let ok = verify_witness(&w);
            let mut value: serde_json::Value = serde_json::from_str(&w.to_json()).expect("witness json");
            value["verified"] = json!(ok);
            value["class"] = json!(classify(sig, v).name());
            let text = format!(
                "{algebra} ≅ {}\n{}\nverified on all {} basis pairs: {ok}",
                w.target.name(),
                w.describe().join("\n"),
                w.source.dim() * w.source.dim()
            );
            Ok((ok, value, text))
        }
    }
}
