//! Thin command-line front end over the library.
//!
//! Exit codes: 0 on success, 1 on parse or validation errors, 2 on an
//! internal check failure.

use clap::{Parser, Subcommand, ValueEnum};
use dehn::diagram::{render_diagram, DiagramFormat};
use dehn::stokes::{
    gamma_integral_check, lower_bound_table, IntegrandVariant, NormModel, SolModel,
};
use dehn::{corpus, fileio, report};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dehn",
    version,
    about = "graded Lie algebra analysis and Dehn-function classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra file and list any violations.
    Validate { input: String },
    /// Full analysis: weights, obstructions, homology, classification.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Construct the blow-up extension and write it as an algebra file.
    Blowup {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw the weight diagram (SVG by default).
    Diagram {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        ascii: bool,
    },
    /// Exponential lower-bound certificates for a SOL-type model.
    Stokes {
        /// `real` or `padic:p,q`.
        #[arg(long)]
        model: String,
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        relator_radius: Option<usize>,
    },
    /// List built-in example algebras or print one as a file.
    Examples {
        #[command(subcommand)]
        what: ExamplesCommand,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    List,
    Show { name: String },
}

fn load(input: &str) -> Result<dehn::GradedLieAlgebra, String> {
    if let Some(name) = input.strip_prefix("example:") {
        return corpus::by_name(name).ok_or_else(|| format!("unknown example `{name}`"));
    }
    let text = std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?;
    fileio::parse_algebra(&text).map_err(|e| e.to_string())
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { input } => {
            let alg = load(&input).map_err(|e| (1, e))?;
            let violations = alg.validate();
            if violations.is_empty() {
                println!("{}: ok ({} basis elements)", alg.name, alg.dim());
                Ok(())
            } else {
                let mut msg = format!("{}: {} violation(s)\n", alg.name, violations.len());
                for v in &violations {
                    msg.push_str(&format!("  - {v}\n"));
                }
                Err((1, msg))
            }
        }
        Command::Analyze { input, format } => {
            let alg = load(&input).map_err(|e| (1, e))?;
            let rep = report::analyze(&alg).map_err(|e| match e {
                report::AnalyzeError::Validation(_) => (1, e.to_string()),
                report::AnalyzeError::Classify(_) => (1, e.to_string()),
            })?;
            match format {
                OutputFormat::Text => print!("{}", rep.to_text()),
                OutputFormat::Json => print!("{}", rep.to_json()),
            }
            Ok(())
        }
        Command::Blowup { input, output } => {
            let alg = load(&input).map_err(|e| (1, e))?;
            let violations = alg.validate();
            if !violations.is_empty() {
                return Err((1, format!("{}: input fails validation", alg.name)));
            }
            let res = dehn::blowup::blow_up(&alg);
            let check = dehn::blowup::verify_blow_up(&alg, &res);
            if !check.all_ok() {
                return Err((
                    2,
                    format!("internal check failure: {}", check.failures.join("; ")),
                ));
            }
            eprintln!(
                "blow-up of {}: dim {} with central kernel of dim {}",
                alg.name,
                res.blown_up.dim(),
                res.kernel_dim
            );
            if let Some(note) = &check.amalgam_note {
                eprintln!("note: {note}");
            }
            write_or_print(&output, &fileio::serialize_algebra(&res.blown_up)).map_err(|e| (1, e))
        }
        Command::Diagram {
            input,
            output,
            ascii,
        } => {
            let alg = load(&input).map_err(|e| (1, e))?;
            let format = if ascii {
                DiagramFormat::Ascii
            } else {
                DiagramFormat::Svg
            };
            let art = render_diagram(&alg, format).map_err(|e| (1, e.to_string()))?;
            write_or_print(&output, &art).map_err(|e| (1, e))
        }
        Command::Stokes {
            model,
            l1,
            l2,
            k,
            nmax,
            relator_radius,
        } => {
            let l1 = dehn::rat::parse_rational(&l1).map_err(|e| (1, e))?;
            let l2 = dehn::rat::parse_rational(&l2).map_err(|e| (1, e))?;
            let (n1, n2) = match model.as_str() {
                "real" => (NormModel::Archimedean, NormModel::Archimedean),
                other => match other.strip_prefix("padic:").and_then(|r| r.split_once(',')) {
                    Some((p, q)) => {
                        let p = p
                            .trim()
                            .parse()
                            .map_err(|_| (1, format!("bad prime `{p}`")))?;
                        let q = q
                            .trim()
                            .parse()
                            .map_err(|_| (1, format!("bad prime `{q}`")))?;
                        (NormModel::PAdic(p), NormModel::PAdic(q))
                    }
                    None => {
                        return Err((1, format!("unknown model `{other}`: use real or padic:p,q")))
                    }
                },
            };
            let model = SolModel::new(n1, n2, l1, l2).map_err(|e| (1, e.to_string()))?;
            let variant = if model.norm2.is_archimedean() {
                IntegrandVariant::Real
            } else {
                IntegrandVariant::Ultrametric
            };
            let table = lower_bound_table(&model, k, nmax, relator_radius);
            println!(
                "loop family commutator depth {k}; triangle constant C({}) = {}",
                table.relator_radius,
                dehn::rat::format_rational(&table.triangle_constant)
            );
            println!(
                "{:>4}  {:>24}  {:>24}  equal",
                "n", "|integral|", "area bound"
            );
            for row in &table.rows {
                let check = gamma_integral_check(&model, k, row.n, variant)
                    .map_err(|e| (2, e.to_string()))?;
                if !check.equal {
                    return Err((
                        2,
                        format!("integral at n = {} missed its closed form", row.n),
                    ));
                }
                println!(
                    "{:>4}  {:>24}  {:>24}  yes",
                    row.n,
                    dehn::rat::format_rational(&row.integral_norm),
                    dehn::rat::format_rational(&row.area_bound),
                );
            }
            if table.asymptotically_infinite_area {
                println!("both factors ultrametric: loops eventually exceed every bounded-relator bound (asymptotically infinite area)");
            }
            Ok(())
        }
        Command::Examples { what } => match what {
            ExamplesCommand::List => {
                for name in corpus::example_names() {
                    let alg = corpus::by_name(name).expect("listed");
                    println!("{name:<16} dim {:>2}  {}", alg.dim(), alg.name);
                }
                println!("parametric: sol-P-Q (lambda = P/Q), sol-padic:p,q, sol-real-padic:p");
                Ok(())
            }
            ExamplesCommand::Show { name } => {
                let alg = corpus::by_name(&name).ok_or((1, format!("unknown example `{name}`")))?;
                print!("{}", fileio::serialize_algebra(&alg));
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
