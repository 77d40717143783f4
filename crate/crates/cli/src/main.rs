use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use trisection_core::diagram::{builtin, builtin_names, random_composite_diagram, random_diagram, TrisectionDiagram};
use trisection_core::format::{parse_diagram, parse_dual_rep};
use trisection_core::Error;

mod report;

use report::Report;

/// Exact integral invariants of 4-manifolds from trisection diagrams.
#[derive(Parser)]
#[command(name = "trisect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the homological validity conditions.
    Validate(Input),
    /// H_0..H_4 and the three-way H_2 cross-check.
    Homology(Input),
    /// The 3x3 Čech diamond and its Serre symmetry.
    Diamond(Input),
    /// Intersection form on H^2 modulo torsion.
    Form(Input),
    /// Spin structures as quadratic enhancements.
    Spin(Input),
    /// Spin^C ledger trace under the action of H^2.
    Spinc {
        #[command(flatten)]
        input: Input,
        /// Dual-rep file {"a1": .., "a2": .., "a3": ..}; without it every basis class acts in turn.
        #[arg(long)]
        act: Option<PathBuf>,
    },
    /// Print the diagram in the file format.
    Show(Input),
    /// List catalog names.
    Builtins,
}

#[derive(Args)]
struct Input {
    /// Diagram file.
    #[arg(required_unless_present_any = ["builtin", "seed"])]
    path: Option<PathBuf>,
    /// Catalog diagram, or a `#`-joined connected sum of them.
    #[arg(long, conflicts_with_all = ["path", "seed"])]
    builtin: Option<String>,
    /// Seed for a random diagram (needs --genus).
    #[arg(long, requires = "genus", conflicts_with = "path")]
    seed: Option<u64>,
    #[arg(long, requires = "seed")]
    genus: Option<usize>,
    /// With --seed: random connected sums instead of moved standard triples.
    #[arg(long, requires = "seed")]
    composite: bool,
}

enum Failure {
    /// Input could not be read or parsed (exit 2).
    Parse(String),
    /// Well-formed input that fails a mathematical condition (exit 1).
    Invalid(String),
}

impl Input {
    fn echo(&self) -> String {
        if let Some(name) = &self.builtin {
            format!("--builtin {name}")
        } else if let (Some(seed), Some(genus)) = (self.seed, self.genus) {
            format!("--seed {seed} --genus {genus}{}", if self.composite { " --composite" } else { "" })
        } else {
            self.path.as_ref().map(|p| p.display().to_string()).unwrap_or_default()
        }
    }

    fn load(&self) -> Result<TrisectionDiagram, Failure> {
        if let Some(name) = &self.builtin {
            return builtin(name).map_err(|e| match e {
                Error::UnknownBuiltin(_) => {
                    Failure::Parse(format!("{e} (known: {})", builtin_names().join(", ")))
                }
                e => Failure::Invalid(e.to_string()),
            });
        }
        if let (Some(seed), Some(genus)) = (self.seed, self.genus) {
            let d = if self.composite { random_composite_diagram(genus, seed) } else { random_diagram(genus, seed) };
            return d.map_err(|e| Failure::Parse(e.to_string()));
        }
        let path = self.path.as_ref().expect("clap requires an input");
        let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
        parse_diagram(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
    }
}

fn run(cli: &Cli) -> Result<(Report, bool), Failure> {
    let (name, input) = match &cli.command {
        Command::Builtins => return Ok((report::builtins(), true)),
        Command::Validate(i) => ("validate", i),
        Command::Homology(i) => ("homology", i),
        Command::Diamond(i) => ("diamond", i),
        Command::Form(i) => ("form", i),
        Command::Spin(i) => ("spin", i),
        Command::Spinc { input, .. } => ("spinc", input),
        Command::Show(i) => ("show", i),
    };
    let d = input.load()?;
    let mut header = report::Header { command: name, input: input.echo(), diagram: &d };
    if let Command::Validate(_) = cli.command {
        let r = report::validate(&header);
        let ok = trisection_core::diagram::validate(&d).is_valid();
        return Ok((r, ok));
    }
    if let Command::Show(_) = cli.command {
        return Ok((report::show(&header), true));
    }
    let t = trisection_core::diagram::Trisection::new(d.clone()).map_err(|e| Failure::Invalid(e.to_string()))?;
    let r = match &cli.command {
        Command::Homology(_) => report::homology(&header, &t),
        Command::Diamond(_) => report::diamond(&header, &t),
        Command::Form(_) => report::form(&header, &t),
        Command::Spin(_) => report::spin(&header, &t),
        Command::Spinc { act, .. } => {
            let rep = match act {
                Some(path) => {
                    header.input = format!("{} --act {}", header.input, path.display());
                    let text =
                        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
                    Some(
                        parse_dual_rep(&text, t.genus())
                            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
                    )
                }
                None => None,
            };
            report::spinc(&header, &t, rep.as_ref())
        }
        _ => unreachable!("handled above"),
    };
    r.map(|r| (r, true)).map_err(|e| Failure::Invalid(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            print!("{}", if cli.json { report.json_text() } else { report.text });
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
