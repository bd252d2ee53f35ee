use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use argkit::error::{Error, Result};
use argkit::framework::Framework;
use argkit::graph_classes::{self, GraphClass, DEFAULT_DISTANCE_BUDGET};
use argkit::io::{self as formats, FrameworkFormat};
use argkit::logic::MinsatInstance;
use argkit::reductions::{self, Variant};
use argkit::semantics::{self, Limits, Semantics, DEFAULT_MAX_ARGS};
use argkit::validate::{self, ClaimId, FamilyParams};

#[derive(Parser)]
#[command(name = "argkit", version, about = "Abstract argumentation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all extensions, one per line
    Solve {
        #[command(flatten)]
        input: FrameworkInput,
        #[arg(short, long)]
        semantics: Semantics,
        #[arg(long, default_value_t = DEFAULT_MAX_ARGS)]
        max_args: usize,
    },
    /// Decide credulous or skeptical acceptance, printing YES or NO
    Accept {
        mode: AcceptMode,
        #[command(flatten)]
        input: FrameworkInput,
        #[arg(short, long)]
        semantics: Semantics,
        #[arg(short, long)]
        argument: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ARGS)]
        max_args: usize,
    },
    /// Report membership in ACY, NOEVEN, BIP and SYM
    Classify {
        #[command(flatten)]
        input: FrameworkInput,
    },
    /// Exact deletion distance to a graph class, or check a deletion set
    Distance {
        #[command(flatten)]
        input: FrameworkInput,
        #[arg(short = 'g', long = "class")]
        class: GraphClass,
        /// Comma-separated deletion set to check instead of searching
        #[arg(long, value_delimiter = ',')]
        verify_set: Option<Vec<String>>,
        /// Largest number of candidate subsets to test
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
    /// Build a reduction and print it as APX
    Reduce {
        /// Reduction number, 1 to 6
        #[arg(short, long, value_parser = clap::value_parser!(u8).range(1..=6))]
        reduction: u8,
        #[arg(long, default_value = "repaired")]
        variant: Variant,
        /// Target atom for reduction 5 (`k` or `x<k>`)
        #[arg(long)]
        target: Option<String>,
        /// Write the JSON sidecar here
        #[arg(long)]
        meta: Option<PathBuf>,
        /// QDIMACS file (DIMACS for reduction 5); `-` reads stdin
        input: PathBuf,
    },
    /// Check a claim over a generated family and print a report
    Verify(VerifyArgs),
    /// List supported input and output formats
    Formats,
}

#[derive(Args)]
struct FrameworkInput {
    #[arg(short, long, default_value = "apx")]
    format: FrameworkFormat,
    /// Framework file; `-` reads stdin
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AcceptMode {
    Cred,
    Skept,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: ClaimId,
    #[arg(long, default_value_t = 2)]
    max_y: usize,
    #[arg(long, default_value_t = 2)]
    max_z: usize,
    #[arg(long, default_value_t = 3)]
    max_clauses: usize,
    #[arg(long, default_value_t = 3)]
    max_width: usize,
    /// Variable bound for MINSAT claims (default: max-y + max-z, at most 3)
    #[arg(long)]
    max_vars: Option<usize>,
    /// Argument bound for framework claims
    #[arg(long, default_value_t = 3)]
    max_args: usize,
    /// Restrict QBF families to monotone matrices
    #[arg(long)]
    monotone: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw this many random instances instead of enumerating the family
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value = "repaired")]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    output: ReportFormat,
    /// Include wall time (makes the report non-reproducible)
    #[arg(long)]
    timing: bool,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load_framework(input: &FrameworkInput) -> Result<Framework> {
    input.format.parse(&read_input(&input.file)?)
}

fn run(command: Command, out: &mut String) -> Result<()> {
    match command {
        Command::Solve {
            input,
            semantics: sigma,
            max_args,
        } => {
            let f = load_framework(&input)?;
            let exts = semantics::extensions_with(&f, sigma, &Limits { max_args })?;
            for e in &exts {
                out.push_str(&f.format_set(e));
                out.push('\n');
            }
        }
        Command::Accept {
            mode,
            input,
            semantics: sigma,
            argument,
            max_args,
        } => {
            let f = load_framework(&input)?;
            let limits = Limits { max_args };
            let yes = match mode {
                AcceptMode::Cred => semantics::credulous_with(&f, sigma, &argument, &limits)?,
                AcceptMode::Skept => semantics::skeptical_with(&f, sigma, &argument, &limits)?,
            };
            out.push_str(if yes { "YES\n" } else { "NO\n" });
        }
        Command::Classify { input } => {
            let f = load_framework(&input)?;
            for class in GraphClass::ALL {
                out.push_str(&format!("{class} {}\n", graph_classes::is_member(&f, class)));
            }
        }
        Command::Distance {
            input,
            class,
            verify_set,
            budget,
        } => {
            let f = load_framework(&input)?;
            match verify_set {
                Some(names) => {
                    let set = f.set_from_names(names.iter().filter(|n| !n.is_empty()))?;
                    let ok = graph_classes::verify_deletion(&f, class, &set)?;
                    out.push_str(if ok { "YES\n" } else { "NO\n" });
                }
                None => {
                    let cert = graph_classes::distance_with_budget(&f, class, budget)?;
                    out.push_str(&format!("{}\n{}\n", cert.k, f.format_set(&cert.deletion_set)));
                }
            }
        }
        Command::Reduce {
            reduction,
            variant,
            target,
            meta,
            input,
        } => {
            let text = read_input(&input)?;
            let art = if reduction == 5 {
                let target = target.ok_or_else(|| Error::Usage("reduction 5 needs --target".into()))?;
                let phi = formats::parse_dimacs(&text)?;
                reductions::reduce5(&MinsatInstance::new(phi, &formats::dimacs_target(&target))?, variant)?
            } else {
                if target.is_some() {
                    return Err(Error::Usage("--target only applies to reduction 5".into()));
                }
                reductions::reduce_qbf(reduction, &formats::parse_qdimacs(&text)?, variant)?
            };
            if let Some(path) = meta {
                let json = serde_json::to_string_pretty(&art.sidecar()).expect("sidecars serialize");
                fs::write(path, json + "\n")?;
            }
            out.push_str(&formats::emit_apx(&art.framework));
        }
        Command::Verify(args) => {
            let params = FamilyParams {
                max_universal: args.max_y,
                max_existential: args.max_z,
                max_clauses: args.max_clauses,
                max_width: args.max_width,
                max_vars: args.max_vars.unwrap_or((args.max_y + args.max_z).min(3)),
                max_args: args.max_args,
                monotone: args.monotone,
                clause_touches_existential: false,
                seed: args.seed,
                samples: args.samples,
                variant: args.variant,
            };
            let mut report = validate::run_family(args.claim, &params)?;
            if !args.timing {
                report.wall_time_ms = None;
            }
            match args.output {
                ReportFormat::Json => {
                    out.push_str(&report.to_json());
                    out.push('\n');
                }
                ReportFormat::Table => out.push_str(&report.to_table()),
            }
        }
        Command::Formats => {
            out.push_str(concat!(
                "framework input   apx   arg(NAME). / att(A,B).   (default)\n",
                "framework input   tgf   node ids, '#', edge pairs\n",
                "framework output  apx   canonical: args in order, attacks sorted\n",
                "QBF input         qdimacs   one 'a' block then one 'e' block\n",
                "MINSAT input      dimacs    clause order = file order; --target VAR\n",
                "reports           json | table\n",
            ));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(()) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("argkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
