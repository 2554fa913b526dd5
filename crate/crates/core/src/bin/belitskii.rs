//! Command-line front end.
//!
//! Exit codes: 0 yes/ok, 1 no, 2 parse error or bad argument, 3 input not
//! strictly upper triangular. Failures print one line
//! `error: <kind>: <message>` on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use belitskii::coset::reduce_to_coset_rep;
use belitskii::enumerate::{
    combine, combine_census, construct_3nilpotent, enumerate_bforms, is_canonical, verify_against_table,
};
use belitskii::graph::{matrix_to_dot, type_to_dot};
use belitskii::oracle::dn_similar;
use belitskii::{canon, parse_matrix, Error, Field, GraphType, SetPartition, SquareMatrix};

#[derive(Parser)]
#[command(name = "belitskii", version, about = "Canonical forms of nilpotent upper-triangular matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a strictly upper-triangular matrix.
    Canon {
        file: PathBuf,
        /// Default field when the file has no `field=` header: `Q` or `gf:p`.
        #[arg(long, default_value = "Q")]
        field: Field,
        /// Also print the transforming matrix T.
        #[arg(long)]
        show_witness: bool,
        /// Write the canonical graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Subpermutation of the double coset and a conjugate in `QU_n`.
    Coset {
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        field: Field,
        #[arg(long)]
        show_witness: bool,
    },
    /// List canonical graph types for `n`.
    Enumerate {
        n: usize,
        #[arg(long)]
        indecomposable: bool,
        /// Worker threads; defaults to `BELITSKII_JOBS`, else all cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether a graph type is canonical.
    Check { graph_type: String },
    /// Glue two canonical types with cross arcs `h,t` (labels of the result).
    Combine {
        first: String,
        second: String,
        #[arg(long = "cross", value_parser = parse_pair)]
        cross: Vec<(usize, usize)>,
        /// List every combination instead.
        #[arg(long, conflicts_with = "cross")]
        all: bool,
        /// With `--all`, keep only connected results.
        #[arg(long, requires = "all")]
        indecomposable: bool,
    },
    /// A connected 3-nilpotent canonical type with `r` parameters.
    Construct3 { n: usize, r: usize },
    /// Whether two matrices are similar by a nonsingular diagonal matrix.
    Dsim {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "Q")]
        field: Field,
    },
    /// Compare the enumeration for `n` with the bundled table.
    VerifyTables {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// DOT for a graph type, or for a matrix file.
    Dot {
        input: String,
        #[arg(long, default_value = "Q")]
        field: Field,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `h,t`, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad label `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad label `{b}`"))?;
    Ok((a, b))
}

/// A finished command: its exit status and what it printed.
enum Outcome {
    Yes,
    No,
}

fn read_matrix(path: &Path, field: Field) -> Result<SquareMatrix, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix(&text, field)
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn default_jobs(jobs: Option<usize>) -> Result<usize, Error> {
    if let Some(j) = jobs {
        return Ok(j);
    }
    match std::env::var("BELITSKII_JOBS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("BELITSKII_JOBS must be a number, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Canon { file, field, show_witness, dot } => {
            let a = read_matrix(&file, field)?;
            let c = canon(&a)?;
            print!("{c}");
            if c.field() == Field::Prime(2) && !c.params.is_empty() {
                println!("note: over GF(2) every parameter is 1");
            }
            if show_witness {
                println!("witness:");
                print!("{}", c.witness.transform());
            }
            if let Some(path) = dot {
                write_file(&path, &type_to_dot(&c.graph_type))?;
            }
            Ok(Outcome::Yes)
        }
        Command::Coset { file, field, show_witness } => {
            let a = read_matrix(&file, field)?;
            let (rep, q, log) = reduce_to_coset_rep(&a)?;
            println!("{}", SetPartition::from_subpermutation(&q));
            print!("{rep}");
            if show_witness {
                println!("witness:");
                print!("{}", log.transform());
            }
            Ok(Outcome::Yes)
        }
        Command::Enumerate { n, indecomposable, jobs, out } => {
            let report = enumerate_bforms(n, indecomposable, default_jobs(jobs)?)?;
            match out {
                Some(path) => {
                    write_file(&path, &report.to_string())?;
                    println!("{}", report.summary());
                }
                None => print!("{report}"),
            }
            Ok(Outcome::Yes)
        }
        Command::Check { graph_type } => {
            let t: GraphType = graph_type.parse()?;
            let yes = is_canonical(&t);
            println!("{}", if yes { "yes" } else { "no" });
            Ok(if yes { Outcome::Yes } else { Outcome::No })
        }
        Command::Combine { first, second, cross, all, indecomposable } => {
            let (t1, t2): (GraphType, GraphType) = (first.parse()?, second.parse()?);
            if all {
                for t in combine_census(&t1, &t2, indecomposable)? {
                    println!("{t}");
                }
            } else {
                println!("{}", combine(&t1, &t2, &cross)?);
            }
            Ok(Outcome::Yes)
        }
        Command::Construct3 { n, r } => {
            println!("{}", construct_3nilpotent(n, r)?);
            Ok(Outcome::Yes)
        }
        Command::Dsim { first, second, field } => {
            let (a, c) = (read_matrix(&first, field)?, read_matrix(&second, field)?);
            match dn_similar(&a, &c)? {
                Some(d) => {
                    println!("yes");
                    print!("{d}");
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("no");
                    Ok(Outcome::No)
                }
            }
        }
        Command::VerifyTables { n, jobs } => {
            let diff = verify_against_table(n, default_jobs(jobs)?)?;
            print!("{diff}");
            Ok(if diff.is_match() { Outcome::Yes } else { Outcome::No })
        }
        Command::Dot { input, field } => {
            let path = Path::new(&input);
            if path.is_file() {
                let a = read_matrix(path, field)?;
                let (_, q, _) = reduce_to_coset_rep(&a)?;
                print!("{}", matrix_to_dot(&a, &q));
            } else {
                let t: GraphType = input.parse()?;
                print!("{}", type_to_dot(&t));
            }
            Ok(Outcome::Yes)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotStrictlyUpper | Error::NotUpperTriangular => 3,
        _ => 2,
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let first = e.to_string().lines().next().unwrap_or_default().to_owned();
            let msg = first.trim_start_matches("error: ");
            eprintln!("error: usage: {}", one_line(msg));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}: {}", e.kind(), one_line(&e.to_string()));
            ExitCode::from(exit_code(&e))
        }
    }
}
