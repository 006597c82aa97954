use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use fusionrep::jobspec::{Job, JobSpec};
use fusionrep::run::{run, Command, Format};
use fusionrep::Error;

#[derive(Parser, Debug)]
#[command(
    name = "fusionrep",
    version,
    about = "Representation rings of fusion systems"
)]
struct Cli {
    /// chartable, fusion-classes, saturation, repring, ktheory, spectrum,
    /// twisted or adic
    command: String,
    /// Job file
    spec: PathBuf,
    #[arg(long)]
    json: bool,
    /// Graphviz output (spectrum only)
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    /// Rational primes for the spectrum, e.g. 2,3
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Power of the augmentation ideal for adic
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    cap_hilbert: Option<usize>,
    #[arg(long)]
    cap_morphisms: Option<usize>,
    #[arg(long)]
    cap_saturation: Option<usize>,
    /// Allow saturation checks above the saturation cap
    #[arg(long)]
    extended: bool,
}

fn execute(cli: &Cli) -> Result<String, Error> {
    let command: Command = cli.command.parse()?;
    let (mut spec, dir) = JobSpec::load(&cli.spec)?;
    let o = &mut spec.options;
    if let Some(p) = &cli.primes {
        o.primes = p.clone();
    }
    if cli.k.is_some() {
        o.k = cli.k;
    }
    if cli.cap_hilbert.is_some() {
        o.hilbert_cap = cli.cap_hilbert;
    }
    if cli.cap_morphisms.is_some() {
        o.morphism_cap = cli.cap_morphisms;
    }
    if cli.cap_saturation.is_some() {
        o.saturation_cap = cli.cap_saturation;
    }
    o.extended |= cli.extended;
    let job = Job::build(spec, &dir)?;
    let format = if cli.json {
        Format::Json
    } else if cli.dot {
        Format::Dot
    } else {
        Format::Text
    };
    run(command, &job)?.render(format)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("fusionrep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
