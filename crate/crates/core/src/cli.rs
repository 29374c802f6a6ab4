//! Argument parsing and dispatch for the `spin9` binary.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bpt;
use crate::canonical::{self, Convention, ExportFormat, TwoForms};
use crate::exterior::{wedge_into, FormAccumulator};
use crate::rational::Rational;
use crate::stabilizer;
use crate::suites::{self, RunConfig, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "spin9", version, about = "Exact checks for the Spin(9)-invariant 8-form on R^16")]
pub struct Cli {
    /// Suite to run under `verify` (all, octonion, operators, exterior, canonical, curvature, stabilizer, bpt).
    #[arg(long, global = true, default_value = "all")]
    suite: String,
    #[arg(long, global = true, default_value_t = RunConfig::default().seed)]
    seed: u64,
    /// Random inputs per identity.
    #[arg(long, global = true, default_value_t = RunConfig::default().samples)]
    samples: usize,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Destination file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an invariant suite (the default).
    Verify,
    /// Write the coefficients of a form, one record per monomial.
    Export { form: FormName },
    /// Decide whether the sigma expression equals the canonical form.
    Conjecture,
    /// Time one of the heavy kernels.
    Bench { kernel: Kernel },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormName {
    Omega8,
    #[value(name = "omega8-alt")]
    Omega8Alt,
    #[value(name = "conjecture-rhs")]
    ConjectureRhs,
    Bpt,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kernel {
    Wedge,
    #[value(name = "stabilizer-assembly")]
    StabilizerAssembly,
    #[value(name = "bpt-materialize")]
    BptMaterialize,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\n{}", <Cli as clap::CommandFactory>::command().render_usage());
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    // validate everything before any computation
    let suite: Suite = cli.suite.parse().map_err(|e: crate::Error| Failure::Usage(e.to_string()))?;
    let format: ExportFormat = cli.format.parse().map_err(|e: crate::Error| Failure::Usage(e.to_string()))?;
    let config = RunConfig::new(cli.seed, cli.samples).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure::Usage("jobs must be positive".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let (mut buf, mut notes) = (Vec::new(), Vec::new());
    let code = pool.install(|| match cli.command.as_ref().unwrap_or(&Command::Verify) {
        Command::Verify => verify(suite, &config, &mut buf),
        Command::Export { form } => export(*form, format, &mut buf, &mut notes),
        Command::Conjecture => conjecture(&mut buf),
        Command::Bench { kernel } => bench(*kernel, &mut buf),
    })?;
    match &cli.out {
        Some(path) => fs::write(path, &buf).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => stdout.write_all(&buf)?,
    }
    stderr.write_all(&notes)?;
    Ok(code)
}

fn verify(suite: Suite, config: &RunConfig, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let report = suites::run(suite, config).map_err(|e| Failure::Usage(e.to_string()))?;
    write!(out, "{report}")?;
    let failed = report.failures().count();
    writeln!(
        out,
        "summary suite={suite} seed={} samples={} checks={} passed={} failed={failed}",
        config.seed,
        config.samples,
        report.checks().len(),
        report.checks().len() - failed
    )?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn export(form: FormName, format: ExportFormat, out: &mut Vec<u8>, notes: &mut Vec<u8>) -> Result<i32, Failure> {
    let t = TwoForms::standard();
    let owned;
    let f = match form {
        FormName::Omega8 => canonical::canonical_8form(),
        FormName::Omega8Alt => {
            owned = canonical::canonical_8form_alt(t);
            &owned
        }
        FormName::ConjectureRhs => {
            owned = canonical::conjecture_8form();
            &owned
        }
        FormName::Bpt => bpt::bpt_8form(),
    };
    out.extend(canonical::export_coefficients(f, format));
    writeln!(notes, "records={}", f.len())?;
    Ok(EXIT_OK)
}

fn conjecture(out: &mut Vec<u8>) -> Result<i32, Failure> {
    for convention in [Convention::Antisymmetric, Convention::Symmetric] {
        let r = canonical::conjecture_report_with(convention);
        let verdict = if r.equal { "EQUAL" } else { "NOT-EQUAL" };
        writeln!(out, "conjecture: {verdict} (convention={convention})")?;
        let ratio = r.ratio.as_ref().map_or("none".to_string(), Rational::to_string);
        writeln!(
            out,
            "conjecture.{convention} rhs_terms={} difference_terms={} ratio={ratio} rhs_eval={}",
            r.rhs.len(),
            r.difference.len(),
            r.eval_first_block
        )?;
        if r.equal {
            break;
        }
        for (idx, c) in canonical::sample_monomials(&r.difference, 3) {
            let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
            writeln!(out, "conjecture.{convention}.differs monomial={} coefficient={c}", idx.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn bench(kernel: Kernel, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let start = Instant::now();
    match kernel {
        Kernel::Wedge => {
            // all products omega_ij ^ omega_kl of the 2-forms
            let t = TwoForms::standard();
            let forms: Vec<_> = (0..9).flat_map(|i| (i + 1..9).map(move |j| t.omega(i, j))).collect();
            let mut pairs = 0usize;
            let mut acc = FormAccumulator::new();
            for a in &forms {
                for b in &forms {
                    pairs += a.len() * b.len();
                    wedge_into(&mut acc, a, b, &Rational::one());
                }
            }
            let result = acc.into_form(4);
            let secs = start.elapsed().as_secs_f64();
            writeln!(
                out,
                "bench.wedge term_pairs={pairs} result_terms={} wall_ms={:.1} pairs_per_sec={:.0}",
                result.len(),
                secs * 1e3,
                pairs as f64 / secs.max(1e-9)
            )?;
        }
        Kernel::StabilizerAssembly => {
            let omega = canonical::canonical_8form();
            let cols = stabilizer::assemble_columns(omega, 16);
            let nnz: usize = cols.iter().map(|c| c.len()).sum();
            let mut support: Vec<_> = cols.iter().flat_map(|c| c.masks().map(|(m, _)| *m)).collect();
            support.sort_unstable();
            support.dedup();
            writeln!(
                out,
                "bench.stabilizer_assembly rows=12870 cols={} nonzero_rows={} nonzeros={nnz} wall_ms={:.1}",
                cols.len(),
                support.len(),
                start.elapsed().as_secs_f64() * 1e3
            )?;
        }
        Kernel::BptMaterialize => {
            let f = bpt::materialize_8form();
            writeln!(
                out,
                "bench.bpt_materialize evaluations=12870 terms={} wall_ms={:.1}",
                f.len(),
                start.elapsed().as_secs_f64() * 1e3
            )?;
        }
    }
    Ok(EXIT_OK)
}
