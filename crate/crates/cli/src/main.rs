mod cache;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use torus_super::invariant::{
    self, compute_unnormalized, corpus, diff_terms, generating_function, grouped, latex, specialize, InvariantError,
    KnotFixture, Specialization,
};
use torus_super::oracle::{self, OracleError};
use torus_super::{compute, KnotRequest, LaurentPolynomial, VarAlphabet};

use cache::Cache;

const EXIT_MISMATCH: u8 = 1;
const EXIT_NONPOLYNOMIAL: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_CALIBRATION: u8 = 4;

/// beta-deformed torus knot invariants P_{n,m}(a, q, t).
#[derive(Parser)]
#[command(name = "torus-super", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute P_{n,m}.
    Compute(ComputeArgs),
    /// Check the pipeline against the fixtures or the brute-force oracle.
    #[command(subcommand)]
    Verify(Verify),
    /// Generating function F_{n,r}(z) = sum_k P_{n, nk+r} z^k, as JSON.
    Genfun {
        n: u32,
        r: u32,
        /// Highest k whose series coefficient is checked against compute.
        #[arg(long, default_value_t = 3)]
        check_kmax: u32,
    },
    /// Tabulate every 2 <= n <= N, n < m <= M as CSV.
    Scan {
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        m_max: u32,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce P_{n,m} at t = -1.
    Specialize {
        n: u32,
        m: u32,
        #[arg(long, value_enum)]
        at: Target,
    },
}

#[derive(Args)]
struct ComputeArgs {
    n: u32,
    m: u32,
    #[arg(long, group = "format")]
    json: bool,
    #[arg(long, group = "format")]
    latex: bool,
    /// One line per a-degree.
    #[arg(long, group = "format")]
    grouped: bool,
    /// Keep the monomial content and print it separately.
    #[arg(long)]
    raw: bool,
}

#[derive(Subcommand)]
enum Verify {
    /// Recompute the fifteen reference knots and diff them.
    Corpus {
        /// Directory with torus_<n>_<m>.json files; defaults to the embedded copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Run the oracle suites.
    Oracle {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Homfly,
    Jones,
    Alexander,
}

impl From<Target> for Specialization {
    fn from(t: Target) -> Self {
        match t {
            Target::Homfly => Specialization::Homfly,
            Target::Jones => Specialization::Jones,
            Target::Alexander => Specialization::Alexander,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let code = match e {
            InvariantError::NonPolynomial { .. } => EXIT_NONPOLYNOMIAL,
            InvariantError::Calibration(_) => EXIT_CALIBRATION,
            InvariantError::Usage(_) => EXIT_IO,
            InvariantError::Integrity { .. } | InvariantError::Validation(_) | InvariantError::Algebra(_) => {
                EXIT_MISMATCH
            }
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = if matches!(e, OracleError::Usage(_)) { EXIT_IO } else { EXIT_MISMATCH };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn request(n: u32, m: u32) -> Result<KnotRequest, Failure> {
    Ok(KnotRequest::new(n, m)?)
}

fn render(p: &LaurentPolynomial, args: &ComputeArgs) -> String {
    if args.latex {
        latex(p)
    } else if args.grouped {
        grouped(p)
    } else {
        format!("{p}\n")
    }
}

fn cmd_compute(args: &ComputeArgs) -> CmdResult {
    let req = request(args.n, args.m)?;
    if args.raw {
        let p = compute_unnormalized(&req)?;
        if args.json {
            print!("{}", KnotFixture::from_superpolynomial(&p).to_canonical_json());
        } else {
            print!("{}", render(&p.terms, args));
        }
        eprintln!("content: {}", p.raw_content.display(&VarAlphabet::knot()));
        return Ok(());
    }
    let cache = Cache::from_env();
    let json = match cache.as_ref().and_then(|c| c.load(req.n, req.m)) {
        Some(json) => json,
        None => {
            let json = KnotFixture::from_superpolynomial(&compute(&req)?).to_canonical_json();
            if let Some(c) = &cache {
                c.store(req.n, req.m, &json);
            }
            json
        }
    };
    if args.json {
        print!("{json}");
    } else {
        let p = KnotFixture::from_json(&json)?.polynomial()?;
        print!("{}", render(&p, args));
    }
    Ok(())
}

fn print_diff(n: u32, m: u32, expected: &LaurentPolynomial, actual: &LaurentPolynomial) {
    let diff = diff_terms(expected, actual);
    println!("({n},{m}) MISMATCH: {} terms differ", diff.len());
    for d in diff.iter().take(10) {
        let (a, q, t) = d.exps;
        println!("  a^{a} q^{q} t^{t}: expected {}, got {}", d.expected, d.actual);
    }
}

fn read_fixture(dir: &Path, n: u32, m: u32) -> Result<String, Failure> {
    let path = dir.join(format!("torus_{n}_{m}.json"));
    fs::read_to_string(&path).map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display())))
}

fn cmd_verify_corpus(fixtures: Option<&Path>) -> CmdResult {
    if let Some(dir) = fixtures {
        if !dir.is_dir() {
            return Err(Failure::new(EXIT_IO, format!("fixture directory {} not found", dir.display())));
        }
    }
    let mut mismatches = 0;
    for entry in corpus() {
        let expected_json = match fixtures {
            Some(dir) => read_fixture(dir, entry.n, entry.m)?,
            None => entry.json.to_string(),
        };
        let p = compute(&request(entry.n, entry.m)?)?;
        let ours = KnotFixture::from_superpolynomial(&p).to_canonical_json();
        if ours == expected_json {
            println!("({},{}) ok", entry.n, entry.m);
            continue;
        }
        mismatches += 1;
        match KnotFixture::from_json(&expected_json).and_then(|f| f.polynomial()) {
            Ok(expected) => print_diff(entry.n, entry.m, &expected, &p.terms),
            Err(e) => println!("({},{}) MISMATCH: fixture unreadable: {e}", entry.n, entry.m),
        }
    }
    if mismatches > 0 {
        return Err(Failure::new(EXIT_MISMATCH, format!("{mismatches} of {} fixtures differ", corpus().len())));
    }
    Ok(())
}

fn cmd_verify_oracle(max_size: usize) -> CmdResult {
    let checks = oracle::run_all(max_size)?;
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} checks, {failed} failed", checks.len());
    if failed > 0 {
        return Err(Failure::new(EXIT_MISMATCH, format!("{failed} oracle checks failed")));
    }
    Ok(())
}

fn cmd_genfun(n: u32, r: u32, check_kmax: u32) -> CmdResult {
    print!("{}", generating_function(n, r, check_kmax)?.to_canonical_json());
    Ok(())
}

fn cmd_scan(n_max: u32, m_max: u32, out: Option<&Path>) -> CmdResult {
    let report = invariant::scan(n_max, m_max);
    let csv = report.to_csv();
    match out {
        Some(path) => fs::write(path, &csv)
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    let failures: Vec<_> = report.failures().collect();
    if !failures.is_empty() {
        for r in &failures {
            eprintln!("({},{}) {}", r.n, r.m, r.status.label());
        }
        return Err(Failure::new(EXIT_MISMATCH, format!("{} pairs failed", failures.len())));
    }
    Ok(())
}

fn cmd_specialize(n: u32, m: u32, at: Target) -> CmdResult {
    let p = compute(&request(n, m)?)?;
    println!("{}", specialize(&p, at.into())?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(Verify::Corpus { fixtures }) => cmd_verify_corpus(fixtures.as_deref()),
        Command::Verify(Verify::Oracle { max_size }) => cmd_verify_oracle(*max_size),
        Command::Genfun { n, r, check_kmax } => cmd_genfun(*n, *r, *check_kmax),
        Command::Scan { n_max, m_max, out } => cmd_scan(*n_max, *m_max, out.as_deref()),
        Command::Specialize { n, m, at } => cmd_specialize(*n, *m, *at),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
