//! `halfcanon`: construct and verify half-canonical stable curves in P^5.
//!
//! Exit codes: 0 on success (all checks pass), 1 on verification or
//! computation failure, 2 on usage, parse, or file errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use halfcanon::catalogue::{construct, CurveType};
use halfcanon::deform::family_from_seed;
use halfcanon::error::Error;
use halfcanon::ideal::Ideal;
use halfcanon::ioformat::{
    render_betti, render_report, BettiJson, BundleJson, IdealDocument, ReportJson,
};
use halfcanon::resolution::{betti_table, linear_syzygy_counts};
use halfcanon::verifier::{full_report, ideal_report};

const CHAR_ENV: &str = "HALFCANON_CHAR";
const DEFAULT_CHAR: u64 = 32003;

#[derive(Parser)]
#[command(
    name = "halfcanon",
    version,
    about = "Half-canonical stable curves in P^5: seeded construction, Betti tables, liaison, verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct one catalogue curve and emit it as a JSON bundle.
    Construct {
        /// Curve type: 2.1, 2.2, 2.3, 2.5, 2.6a, 2.6b, 2.7, 2.8
        #[arg(long = "type")]
        curve_type: String,
        #[arg(long)]
        seed: u64,
        /// Field characteristic (default 32003, or $HALFCANON_CHAR)
        #[arg(long = "char")]
        characteristic: Option<u64>,
        /// Write the bundle here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Betti table of the ideal in FILE (a .ideal document or a JSON bundle).
    Betti {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification report on FILE (JSON bundle: full report;
    /// .ideal document: the ideal-level checks).
    Verify {
        file: PathBuf,
        /// Expected curve type for .ideal inputs without metadata
        #[arg(long = "type")]
        curve_type: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Emit the deformation-family ideal I_t as a .ideal document.
    Deform {
        #[arg(long)]
        seed: u64,
        /// The deformation parameter (a field scalar)
        #[arg(long)]
        t: i64,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the colon ideal (I_BIG : I_SMALL) as a .ideal document.
    Liaison { big: PathBuf, small: PathBuf },
    /// Linear syzygy counts of a quadric ideal.
    Syzygies {
        file: PathBuf,
        /// Print the counts of linear first and second syzygies
        #[arg(long)]
        linear: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::UnknownType(_)
        | Error::NotQuadric(_)
        | Error::BadCharacteristic(_) => 2,
        _ => 1,
    }
}

fn characteristic_or_default(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var(CHAR_ENV) {
        Ok(v) => v.parse::<u64>().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("bad {CHAR_ENV} value `{v}`"),
        }),
        Err(_) => Ok(DEFAULT_CHAR),
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Reads FILE as either a JSON bundle (leading '{') or a .ideal document,
/// returning the ideal to analyze plus any type metadata.
fn load_ideal(path: &Path) -> Result<(Ideal, Option<String>), Error> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let json: BundleJson = serde_json::from_str(&text)?;
        let bundle = json.to_bundle()?;
        let tag = bundle.curve_type.tag().to_string();
        Ok((bundle.union_ideal, Some(tag)))
    } else {
        let doc = IdealDocument::parse(&text)?;
        let tag = doc.metadata.get("type").cloned();
        let (_, ideal) = doc.to_ideal()?;
        Ok((ideal, tag))
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Construct {
            curve_type,
            seed,
            characteristic,
            out,
        } => {
            let ct = CurveType::parse(&curve_type)?;
            let p = characteristic_or_default(characteristic)?;
            let bundle = construct(ct, seed, p)?;
            let json = BundleJson::from_bundle(&bundle);
            let mut text = serde_json::to_string_pretty(&json)?;
            text.push('\n');
            write_or_print(out.as_deref(), &text)?;
            eprintln!(
                "constructed type {ct} seed {seed} over GF({p}) ({} attempt(s))",
                bundle.attempts_used
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Betti { file, json } => {
            let (ideal, _) = load_ideal(&file)?;
            let table = betti_table(&ideal)?;
            if json {
                let doc = BettiJson::from_table(&table);
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                print!("{}", render_betti(&table));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            file,
            curve_type,
            json,
        } => {
            let text = std::fs::read_to_string(&file)?;
            let report = if text.trim_start().starts_with('{') {
                let parsed: BundleJson = serde_json::from_str(&text)?;
                let bundle = parsed.to_bundle()?;
                full_report(&bundle)?
            } else {
                let doc = IdealDocument::parse(&text)?;
                let tag = curve_type.or_else(|| doc.metadata.get("type").cloned());
                let ct = tag.as_deref().map(CurveType::parse).transpose()?;
                let (_, ideal) = doc.to_ideal()?;
                let seed = doc
                    .metadata
                    .get("seed")
                    .and_then(|s| s.parse().ok())
                    .unwrap_or(0);
                ideal_report(&ideal, ct, seed)?
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&ReportJson::new(report.clone()))?);
            } else {
                print!("{}", render_report(&report));
            }
            Ok(if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Deform {
            seed,
            t,
            characteristic,
            out,
        } => {
            let p = characteristic_or_default(characteristic)?;
            let family = family_from_seed(seed, p)?;
            let ideal = family.ideal_at(t)?;
            let mut meta = BTreeMap::new();
            meta.insert("family".to_string(), "deformation".to_string());
            meta.insert("seed".to_string(), seed.to_string());
            meta.insert("t".to_string(), t.to_string());
            let doc = IdealDocument::from_ideal(&ideal, meta);
            write_or_print(out.as_deref(), &doc.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Liaison { big, small } => {
            let (big_ideal, _) = load_ideal(&big)?;
            let (small_ideal, _) = load_ideal(&small)?;
            if big_ideal.ring() != small_ideal.ring() {
                return Err(Error::Other(
                    "liaison requires both ideals in the same ring".into(),
                ));
            }
            let colon = big_ideal.colon(&small_ideal);
            // print the reduced basis: canonical generators of the quotient
            let reduced = Ideal::new(big_ideal.ring(), colon.groebner().to_vec())?;
            let doc = IdealDocument::from_ideal(&reduced, BTreeMap::new());
            print!("{}", doc.render());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Syzygies { file, linear } => {
            if !linear {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: "only --linear output is supported".into(),
                });
            }
            let (ideal, _) = load_ideal(&file)?;
            let (first, second) = linear_syzygy_counts(ideal.gens())?;
            println!("linear first syzygies: {first}");
            println!("linear second syzygies: {second}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
