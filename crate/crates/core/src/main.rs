use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use knotforge::cli::{self, Format, KnotInput, TableAction};

#[derive(Parser)]
#[command(
    name = "knotforge",
    version,
    about = "Knot group and homology calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a knot complement
    Knot(KnotArgs),
    /// Invariants of a manifold given by a Heegaard diagram file
    Heegaard {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Inspect the knot table
    Table {
        #[command(subcommand)]
        action: TableCommand,
        /// Use this table instead of the bundled one
        #[arg(long, global = true)]
        table: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["name", "pd", "gauss"]))]
struct KnotArgs {
    /// Knot table name, e.g. 3_1
    name: Option<String>,
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
    #[arg(long)]
    pd: Option<String>,
    /// Signed Gauss code, e.g. O1+U2+O3+U1+O2+U3+
    #[arg(long)]
    gauss: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Moduli for Fox coloring counts
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = cli::DEFAULT_COLORINGS,
        value_parser = clap::value_parser!(u32).range(2..)
    )]
    colorings: Vec<u32>,
    /// Use this table instead of the bundled one
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Print every knot name
    List,
    /// Print the PD code of one knot
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn run(command: Command) -> Result<String, cli::InputError> {
    match command {
        Command::Knot(args) => {
            let table = cli::load_table(args.table.as_deref())?;
            let input = match (args.name, args.pd, args.gauss) {
                (Some(n), _, _) => KnotInput::Name(n),
                (_, Some(p), _) => KnotInput::Pd(p),
                (_, _, Some(g)) => KnotInput::Gauss(g),
                _ => unreachable!("clap requires one input"),
            };
            let report = cli::cmd_knot(&input, &args.colorings, &table)?;
            Ok(report.render(args.format.into()))
        }
        Command::Heegaard { file, format } => Ok(cli::cmd_heegaard(&file)?.render(format.into())),
        Command::Table { action, table } => {
            let table = cli::load_table(table.as_deref())?;
            let action = match action {
                TableCommand::List => TableAction::List,
                TableCommand::Show { name } => TableAction::Show(name),
            };
            cli::cmd_table(&action, &table)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match std::panic::catch_unwind(|| run(args.command)) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(1),
    }
}
