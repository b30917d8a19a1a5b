use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jacring::corpus::{self, analyze_input};
use jacring::hodge::{check_middle_theorem_with, check_ncd_curve_with, check_ncd_surface_with};
use jacring::input::parse_field;
use jacring::jacobian::{gradient_ideal, LocalCohomology};
use jacring::report::{analyze_general, AnalysisOptions, HodgeReport};
use jacring::sheafdiag::{freeness_from, stability_check, syzygy_dim};
use jacring::{Error, Field, InputFile};

#[derive(Parser)]
#[command(name = "jacring", version, about = "Local cohomology of jacobian rings of projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArgs {
    /// Input file (key: value format)
    file: PathBuf,
    /// Coefficient field, overriding the file: Q or Fp=<prime>
    #[arg(long, value_parser = field_arg)]
    field: Option<Field>,
    /// Emit JSON
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the graded table as CSV
    #[arg(long)]
    csv: bool,
    /// Last degree of the emitted table
    #[arg(long)]
    degree_max: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Full battery for a hypersurface
    Analyze(FileArgs),
    /// Table and duality for an ideal of r+1 generators (or the gradient ideal of f)
    General(FileArgs),
    /// Run the golden corpus
    Corpus {
        /// Directory of *.txt inputs instead of the bundled corpus
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, value_parser = field_arg)]
        field: Option<Field>,
    },
    /// Stability of T<X> for a plane curve
    Stability(FileArgs),
    /// Freeness verdict
    Freeness(FileArgs),
    /// Normal-crossing Hodge checks (components required)
    Hodge(FileArgs),
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).map_err(|e| e.to_string())
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Engine(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(..) | Failure::Usage(_) => 2,
            Failure::Engine(e) => match e {
                Error::Poly(_)
                | Error::Input { .. }
                | Error::BadEquation
                | Error::ComponentMismatch
                | Error::MissingComponents
                | Error::GeneratorCount { .. }
                | Error::GradientVanishes => 2,
                Error::NotSquarefree => 3,
                Error::UnsupportedDimension { .. } | Error::UnsupportedDegree { .. } => 4,
                Error::HypothesisViolated { .. } => 5,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Engine(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
        }
    }
}

fn read_input(path: &Path) -> Result<InputFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(InputFile::parse(&text)?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

fn emit(a: &FileArgs, rep: &jacring::AnalysisReport) {
    if a.json {
        println!("{}", rep.to_json());
    } else if a.csv {
        print!("{}", rep.to_csv());
    } else {
        print!("{}", rep.to_text());
    }
}

fn hypersurface_only(inp: &InputFile) -> Result<(), Failure> {
    if inp.is_general() {
        return Err(Failure::Usage("this command needs an 'f' line; use 'general' for generator lists".into()));
    }
    Ok(())
}

fn cmd_analyze(a: &FileArgs) -> Result<(), Failure> {
    let inp = read_input(&a.file)?;
    hypersurface_only(&inp)?;
    emit(a, &analyze_input(&inp, a.field, a.degree_max)?);
    Ok(())
}

fn cmd_general(a: &FileArgs) -> Result<(), Failure> {
    let inp = read_input(&a.file)?;
    let opts = AnalysisOptions { degree_max: a.degree_max.or(inp.degree_max) };
    let rep = if inp.is_general() {
        let (ideal, n) = inp.general_ideal(a.field)?;
        analyze_general(&ideal, n, &opts)?
    } else {
        let h = inp.hypersurface(a.field)?;
        if !h.is_squarefree()? {
            return Err(Error::NotSquarefree.into());
        }
        let ideal = gradient_ideal(h.polynomial())?;
        analyze_general(&ideal, h.ring().nvars(), &opts)?
    };
    emit(a, &rep);
    Ok(())
}

fn cmd_stability(a: &FileArgs) -> Result<(), Failure> {
    let inp = read_input(&a.file)?;
    hypersurface_only(&inp)?;
    let h = inp.hypersurface(a.field)?;
    let stable = stability_check(&h)?;
    let k = (h.degree() - 1) / 2;
    let dim = syzygy_dim(h.polynomial(), k);
    if a.json {
        println!("{}", json(&serde_json::json!({ "stable": stable, "k": k, "syzygy_dim": dim })));
    } else {
        println!("{} (syzygies of degree {k}: {dim})", if stable { "stable" } else { "not stable" });
    }
    Ok(())
}

fn cmd_freeness(a: &FileArgs) -> Result<(), Failure> {
    let inp = read_input(&a.file)?;
    hypersurface_only(&inp)?;
    let h = inp.hypersurface(a.field)?;
    let lc = LocalCohomology::of_hypersurface(&h)?;
    let v = freeness_from(&h, &lc)?;
    if a.json {
        println!("{}", json(&v));
    } else {
        let exps = v.exponents.map(|(x, y)| format!(", exponents ({x}, {y})")).unwrap_or_default();
        println!("{}{exps} [{}]", v.status, v.certificate);
    }
    Ok(())
}

fn cmd_hodge(a: &FileArgs) -> Result<(), Failure> {
    let inp = read_input(&a.file)?;
    hypersurface_only(&inp)?;
    let h = inp.hypersurface(a.field)?;
    if h.r() > 3 || h.r() < 2 {
        return Err(Error::UnsupportedDimension { r: h.r(), what: "Hodge checks are available for r = 2, 3" }.into());
    }
    if h.components().is_empty() {
        return Err(Error::MissingComponents.into());
    }
    let lc = LocalCohomology::of_hypersurface(&h)?;
    let t = lc.table(lc.default_j_max(h.sigma()));
    let rep = HodgeReport {
        middle: Some(check_middle_theorem_with(&h, &t)?),
        curve_pair: if h.r() == 2 { Some(check_ncd_curve_with(&h, &t)?) } else { None },
        surface: if h.r() == 3 { Some(check_ncd_surface_with(&h, &t)?) } else { None },
    };
    if a.json {
        println!("{}", json(&rep));
    } else {
        for c in rep.checks() {
            let verdict = if c.matched { "matched" } else { "mismatch (identity or hypotheses fail)" };
            println!("j = {}: h0m = {} vs {} = {}: {verdict}", c.j, c.lhs, c.breakdown_text(), c.rhs);
        }
    }
    Ok(())
}

fn threads() -> Option<usize> {
    std::env::var("JACRING_THREADS").ok().and_then(|v| v.trim().parse().ok())
}

fn cmd_corpus(dir: Option<&Path>, field: Option<Field>) -> Result<bool, Failure> {
    let entries = match dir {
        Some(d) => corpus::load_dir(d).map_err(|e| Failure::Io(d.to_path_buf(), e))?,
        None => corpus::bundled(),
    };
    if entries.is_empty() {
        eprintln!("warning: nothing to run");
        return Ok(true);
    }
    let outcomes = corpus::run_all(&entries, field, threads());
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    for o in &outcomes {
        if o.passed() {
            println!("PASS {} ({} ms)", o.name, o.elapsed_ms);
        } else {
            println!("FAIL {} ({} ms)", o.name, o.elapsed_ms);
            for m in o.error.iter().chain(&o.mismatches) {
                println!("  {m}");
            }
        }
    }
    println!("{passed}/{} matched", outcomes.len());
    Ok(passed == outcomes.len())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::General(a) => cmd_general(a),
        Command::Stability(a) => cmd_stability(a),
        Command::Freeness(a) => cmd_freeness(a),
        Command::Hodge(a) => cmd_hodge(a),
        Command::Corpus { dir, field } => match cmd_corpus(dir.as_deref(), *field) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
