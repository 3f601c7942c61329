use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ew::io::{write, write_operator, MubJson};
use ew::parallel::{par_scan_slice, searcher};
use ew::report::{mirror_json, resolve_operator, span_json, witness_report_json, EVIDENCE_CAVEAT};
use ew::reproduce::{self, Scope, Settings};
use ew::slice_csv::write_slice_csv;
use ew_core::certify::{rotated_zero_family_d3, span_report, witness_report_with, zero_family_d3, SeesawConfig};
use ew_core::mub::build_mubs;
use ew_core::simplex::{GridSpec, SliceContext};
use ew_core::witnesses::{catalog, catalog_names, find_mirror_mu_with};

#[derive(Parser)]
#[command(name = "ew", version, about = "Mirrored MUB entanglement witnesses")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// See-saw seed
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// See-saw restarts
    #[arg(long, global = true, default_value_t = 64)]
    restarts: usize,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
}

impl Common {
    fn seesaw(&self) -> SeesawConfig {
        SeesawConfig {
            restarts: self.restarts,
            seed: self.seed,
            ..SeesawConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Complete MUB set for an odd prime dimension
    Mubs {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or export catalog operators
    Catalog {
        #[arg(long, conflicts_with = "name")]
        list: bool,
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest μ making μ𝟙 − W block positive, with the partner operator
    Mirror {
        /// Catalog name or operator JSON path
        #[arg(long, visible_alias = "in")]
        witness: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum, product range and detection values of a witness
    Certify {
        #[arg(long)]
        witness: String,
        #[arg(long)]
        state: Vec<String>,
    },
    /// Rank and determinant certificates of a zero family
    Span {
        #[arg(long)]
        witness: String,
        /// d3-zero or d3-rotated
        #[arg(long, default_value = "d3-zero")]
        family: String,
    },
    /// Classify an (α, β) slice and write it as CSV
    Slice {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rho_a: String,
        #[arg(long)]
        rho_b: String,
        #[arg(long)]
        witness: Vec<String>,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Relative padding around the state region
        #[arg(long, default_value_t = 0.02)]
        pad: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every registered claim
    Reproduce {
        #[arg(default_value = "all")]
        scope: Scope,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let common = cli.common;
    match cli.cmd {
        Cmd::Mubs { d, out } => {
            let m = build_mubs(d)?;
            emit(out.as_ref(), &serde_json::to_string_pretty(&MubJson::from(&m))?)?;
        }
        Cmd::Catalog { list, name, out } => {
            if list {
                for n in catalog_names() {
                    println!("{n}");
                }
            } else {
                let name = name.expect("clap enforces --name without --list");
                let e = catalog(&name)?;
                match out {
                    Some(p) => write_operator(&p, &e.operator)?,
                    None => println!("{}", ew::io::operator_to_string(&e.operator)),
                }
                eprintln!("{}: {:?}", e.name, e.status);
            }
        }
        Cmd::Mirror { witness, out } => {
            let (name, w) = resolve_operator(&witness)?;
            let m = find_mirror_mu_with(&w, searcher(common.seesaw()))?;
            if let Some(p) = &out {
                write_operator(p, &m.partner)?;
            }
            if common.json {
                println!("{}", serde_json::to_string_pretty(&mirror_json(&name, &m))?);
            } else {
                println!("{name}: μ ∈ [{:.12}, {:.12}]", m.mu_bracket.0, m.mu_bracket.1);
                println!(
                    "partner min product value {:.3e}, partner is a witness: {}",
                    m.partner_min_product_value, m.partner_is_witness
                );
                match &out {
                    Some(p) => println!("partner written to {}", p.display()),
                    None => println!("partner not written (use --out)"),
                }
                eprintln!("note: {EVIDENCE_CAVEAT}");
            }
        }
        Cmd::Certify { witness, state } => {
            let (name, w) = resolve_operator(&witness)?;
            let states = state
                .iter()
                .map(|s| resolve_operator(s))
                .collect::<Result<Vec<_>, _>>()?;
            let r = witness_report_with(&w, &states, searcher(common.seesaw()))?;
            println!("{}", serde_json::to_string_pretty(&witness_report_json(&name, &r))?);
            eprintln!("note: {EVIDENCE_CAVEAT}");
        }
        Cmd::Span { witness, family } => {
            let (name, w) = resolve_operator(&witness)?;
            let pairs = match family.as_str() {
                "d3-zero" => zero_family_d3(),
                "d3-rotated" => rotated_zero_family_d3(),
                other => bail!("unknown family `{other}` (d3-zero, d3-rotated)"),
            };
            let r = span_report(&w, &pairs)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&span_json(&name, &family, w.dim(), &r))?
            );
        }
        Cmd::Slice {
            d,
            rho_a,
            rho_b,
            witness,
            grid,
            pad,
            out,
        } => {
            let (_, ra) = resolve_operator(&rho_a)?;
            let (_, rb) = resolve_operator(&rho_b)?;
            if ra.dims() != (d, d) {
                bail!("{rho_a} acts on {:?}, not on C^{d} ⊗ C^{d}", ra.dims());
            }
            let ws = witness
                .iter()
                .map(|s| resolve_operator(s))
                .collect::<Result<Vec<_>, _>>()?;
            let ctx = SliceContext::new(&ra, &rb, &ws)?;
            let spec = GridSpec::symmetric_bounding(&ra, &rb, grid, pad)?;
            let g = par_scan_slice(&spec, &ctx)?;
            match &out {
                Some(p) => {
                    let f = File::create(p).with_context(|| p.display().to_string())?;
                    write_slice_csv(&g, BufWriter::new(f))?;
                }
                None => write_slice_csv(&g, std::io::stdout().lock())?,
            }
        }
        Cmd::Reproduce { scope } => {
            let settings = Settings {
                seesaw: common.seesaw(),
                ..Settings::default()
            };
            let records = reproduce::run(scope, &settings);
            if common.json {
                println!("{}", serde_json::to_string_pretty(&records)?);
            } else {
                print!("{}", reproduce::to_tsv(&records));
                let failed: Vec<_> = records.iter().filter(|r| !r.informational && !r.pass).collect();
                let mut err = std::io::stderr().lock();
                writeln!(err, "{} records, {} failed", records.len(), failed.len())?;
                for r in failed {
                    writeln!(err, "FAIL {} (criterion {})", r.claim_id, r.criterion)?;
                }
            }
            return Ok(reproduce::exit_code(&records) as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
