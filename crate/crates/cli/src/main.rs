use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quartic_acm::acm::{classify_numeric, is_acm_oracle, is_initialized};
use quartic_acm::cohomology::cohomology;
use quartic_acm::format::{parse_coords, LatticeFile};
use quartic_acm::harness::{enumerate_effective, verify_theorem_with, VerifyOptions};
use quartic_acm::{DivisorClass, EffectiveCone, Error};

/// Line-bundle cohomology and ACM classification on quartic K3 lattices.
#[derive(Debug, Parser)]
#[command(name = "quartic-acm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Numeric case, initializedness and oracle ACM verdict of one class.
    Classify {
        #[arg(long)]
        lattice: PathBuf,
        /// Comma-separated coordinates, e.g. `0,1`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// (h0, h1, h2) and χ of a class, optionally twisted by l·H.
    Cohomology {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Non-zero effective classes up to a degree.
    Enumerate {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_degree: i64,
    },
    /// Cross-check the numeric classification against the ACM oracle.
    Verify {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_degree: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Admissibility report for a lattice file.
    Validate {
        #[arg(long)]
        lattice: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

fn load_cone(path: &PathBuf) -> Result<EffectiveCone, Error> {
    Ok(EffectiveCone::new(LatticeFile::load(path)?.into_lattice()?))
}

fn parse_class(cone: &EffectiveCone, text: &str) -> Result<DivisorClass, Error> {
    cone.lattice().class(parse_coords(text)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Classify { lattice, class } => {
            let cone = load_cone(&lattice)?;
            let d = parse_class(&cone, &class)?;
            let lat = cone.lattice();
            println!("class: {d}");
            println!("D^2: {}", lat.square(&d));
            println!("D.H: {}", lat.degree(&d));
            println!("effective: {}", yes_no(cone.is_effective(&d)));
            println!("initialized: {}", yes_no(is_initialized(&cone, &d)));
            println!("case: {}", classify_numeric(&cone, &d));
            println!("acm: {}", yes_no(is_acm_oracle(&cone, &d)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology {
            lattice,
            class,
            twist,
        } => {
            let cone = load_cone(&lattice)?;
            let d = parse_class(&cone, &class)?;
            let twisted = &d + &cone.lattice().twist(twist);
            let sig = cohomology(&cone, &twisted);
            println!("{sig} chi={}", cone.lattice().euler_char(&twisted));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            lattice,
            max_degree,
        } => {
            let cone = load_cone(&lattice)?;
            for d in enumerate_effective(&cone, max_degree) {
                let coords: Vec<String> = d.coords().iter().map(i64::to_string).collect();
                println!("{}", coords.join(","));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            lattice,
            max_degree,
            jobs,
            format,
        } => {
            let cone = load_cone(&lattice)?;
            let options = VerifyOptions {
                jobs: usize::from(jobs),
                ..VerifyOptions::default()
            };
            let report = verify_theorem_with(&cone, max_degree, &options)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Tsv => print!("{}", report.to_tsv()),
            }
            if report.all_agree() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("verification failed: numeric and oracle routes disagree");
                Ok(ExitCode::from(1))
            }
        }
        Command::Validate { lattice } => {
            let file = LatticeFile::load(&lattice)?;
            let report = file.validate();
            println!("{report}");
            Ok(if report.is_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
