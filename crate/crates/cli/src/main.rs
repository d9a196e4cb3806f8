//! `qmds`: construct, search for and certify Hermitian dual-containing MDS
//! codes over F_{q²} and the quantum MDS codes they give.
//!
//! Results go to stdout; progress and diagnostics go to stderr.
//!
//! Exit statuses: 0 success, 1 failure or error, 2 unparsable certificate,
//! 3 certificate whose checks do not re-verify.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use qmds::cert::{
    derive_params, make_certificate, verify_certificate, witness, Certificate, Construction,
    WITNESSES,
};
use qmds::circulant::{check_candidate, CirculantCandidate};
use qmds::gf::format_vector;
use qmds::grs::{grs_construct_in, nogrs_scan_in, SCAN_BUDGET};
use qmds::search::{search, SearchConfig, DEFAULT_BUDGET};
use qmds::{Error, Field, FieldRef, Poly};

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DIVERGENCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "qmds", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct FieldArgs {
    /// q, so that codes live over F_{q²}
    #[arg(long)]
    q: u32,
    /// Field presentation overriding the default, e.g. "p=3 e=2 mod=2,2"
    #[arg(long)]
    field: Option<String>,
}

impl FieldArgs {
    fn build(&self) -> anyhow::Result<FieldRef> {
        let Some(text) = &self.field else {
            return Ok(Field::for_q(self.q)?);
        };
        let field: Field = text.parse()?;
        if field.q() != Some(self.q) {
            bail!("field {field} is not F_{{q^2}} for q = {}", self.q);
        }
        Ok(Arc::new(field))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the length q²+1 GRS code D with D ≤ D^{⊥h} and emit its certificate
    ConstructGrs {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// Multiplier polynomial h, coefficients constant term first ("e^2,0,e^0")
        #[arg(long)]
        h: Option<String>,
        /// Write the certificate here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively look for GRS codes of dimension k contained in their Hermitian dual
    NogrsScan {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// Comma-separated code lengths
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = SCAN_BUDGET)]
        budget: u128,
    },
    /// Check a circulant first row x; on success emit the certificate
    VerifyCirculant {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// First row, e.g. "e^2,e^3,e^3,e^2,e^0"
        #[arg(long)]
        x: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all normalized circulant first rows that pass the checks
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// Only rows with x_j = x_{k+2-j}
        #[arg(long)]
        symmetric: bool,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Coordinate constraint x_i = x_j (1-based), repeatable
        #[arg(long = "equal", value_parser = parse_equality)]
        equal: Vec<(usize, usize)>,
        /// Directory for one certificate file per solution
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Quantum parameters implied by shortening a certified code r times
    DeriveParams {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Re-run every check recorded in a certificate
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Certify a published circulant witness by id ("all" for every one)
    CheckExample {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_equality(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once('=')
        .ok_or_else(|| format!("expected i=j, got {s:?}"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad index {t:?}"))
    };
    Ok((parse(a)?, parse(b)?))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read_cert(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::ConstructGrs { field, k, h, out } => {
            let f = field.build()?;
            let h = h.map(|s| Poly::parse(&f, &s)).transpose()?;
            let c = grs_construct_in(&f, k, h)?;
            eprintln!(
                "D = [{}, {}] over F_{}, h = {}",
                c.code.len(),
                k,
                f.order(),
                c.spec.h.to_text()
            );
            let cert = match make_certificate(&Construction::Grs(c.spec)) {
                Ok(cert) => cert,
                Err(e @ Error::CheckFailed(_)) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(EXIT_FAIL));
                }
                Err(e) => return Err(e.into()),
            };
            eprintln!("quantum {}", cert.quantum);
            emit(&cert.to_text(), out.as_deref())?;
        }
        Command::NogrsScan {
            field,
            k,
            n,
            budget,
        } => {
            let f = field.build()?;
            let report = nogrs_scan_in(&f, k, &n, budget)?;
            println!("q: {}", report.q);
            println!("k: {}", report.k);
            for l in &report.lengths {
                print!(
                    "n={} instances={} findings={}",
                    l.n,
                    l.instances,
                    l.findings.len()
                );
                if let Some(note) = &l.note {
                    print!(" ({note})");
                }
                println!();
                for finding in &l.findings {
                    let support: Vec<String> =
                        finding.support.iter().map(|s| s.to_string()).collect();
                    println!(
                        "  support={} norms={}",
                        support.join(","),
                        format_vector(&finding.norms)
                    );
                }
            }
            println!(
                "result: {}",
                if report.is_empty() { "empty" } else { "found" }
            );
        }
        Command::VerifyCirculant { field, k, x, out } => {
            let f = field.build()?;
            let x = f.parse_vector(&x)?;
            if x.len() != k {
                bail!("--x has {} entries, --k is {k}", x.len());
            }
            let cand = CirculantCandidate::new(&f, x)?;
            let report = check_candidate(&cand);
            println!("{report}");
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_FAIL));
            }
            let cert = make_certificate(&Construction::Circulant(cand))?;
            eprintln!("quantum {}", cert.quantum);
            match out {
                Some(path) => emit(&cert.to_text(), Some(&path))?,
                None => print!("\n{}", cert.to_text()),
            }
        }
        Command::Search {
            field,
            k,
            symmetric,
            workers,
            budget,
            equal,
            out_dir,
        } => {
            let f = field.build()?;
            let mut cfg = SearchConfig::new(&f, k)
                .symmetric(symmetric)
                .workers(workers)
                .budget(budget);
            cfg.equalities = equal;
            let result = search(&cfg)?;
            println!("q: {}", field.q);
            println!("k: {k}");
            println!("symmetric: {symmetric}");
            for (i, j) in &cfg.equalities {
                println!("constraint: x_{i} = x_{j}");
            }
            println!("space: {}", result.space);
            println!("partitions: {}", result.partitions);
            println!("counts: {}", result.counts);
            println!("solutions: {}", result.solutions.len());
            for x in &result.solutions {
                println!("  {}", format_vector(x));
            }
            eprintln!("elapsed {:.3}s", result.elapsed.as_secs_f64());
            if let Some(dir) = out_dir {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                for (i, x) in result.solutions.iter().enumerate() {
                    let cand = CirculantCandidate::new(&f, x.clone())?;
                    let cert = make_certificate(&Construction::Circulant(cand))?;
                    let path = dir.join(format!("q{}-k{k}-{:04}.cert", field.q, i + 1));
                    emit(&cert.to_text(), Some(&path))?;
                }
            }
        }
        Command::DeriveParams { cert, r } => {
            let text = read_cert(&cert)?;
            let parsed = match Certificate::parse(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(EXIT_PARSE));
                }
            };
            let base = parsed.certificate.quantum;
            let t = derive_params(&parsed.certificate, r)?;
            println!("certified: {base}");
            println!("derived: {t} (r={r}, implied by shortening, not constructed)");
        }
        Command::Verify { cert } => {
            let text = read_cert(&cert)?;
            let report = match verify_certificate(&text) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(EXIT_PARSE));
                }
            };
            match &report.divergence {
                None => {
                    println!(
                        "ok: {} checks re-verified, quantum {}",
                        report.checks_rerun, report.certificate.quantum
                    );
                }
                Some(d) => {
                    println!("divergence at {}: {d}", d.name());
                    return Ok(ExitCode::from(EXIT_DIVERGENCE));
                }
            }
        }
        Command::CheckExample { name, out } => {
            let ids: Vec<&str> = if name == "all" {
                WITNESSES.iter().map(|w| w.id).collect()
            } else {
                vec![witness(&name)?.id]
            };
            if ids.len() > 1 && out.is_some() {
                bail!("--out needs a single witness");
            }
            let mut failed = false;
            for id in ids {
                match witness(id)?.certify() {
                    Ok(cert) => {
                        eprintln!("{id}: pass {}", cert.quantum);
                        emit(&cert.to_text(), out.as_deref())?;
                    }
                    Err(e) => {
                        eprintln!("{id}: fail {e}");
                        failed = true;
                    }
                }
            }
            if failed {
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            log::error!("{e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
