//! Command line front end for the adjacent-minor toolbox: ideal
//! constructors, enumeration of the component combinatorics, seeded
//! sampling, and verification commands with pass/fail reports.
//!
//! Exit codes: 0 when the command succeeds or its verdict is pass, 1 on a
//! failing verdict, 2 on usage errors or an exceeded computation budget.

mod output;
mod run;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use run::{CharSpec, Ctx};

#[derive(Parser)]
#[command(
    name = "minorprime",
    version,
    about = "Adjacent-minor ideals of generic matrices: prime components, \
             Groebner bases, and exact verification"
)]
struct Cli {
    /// Coefficient characteristic: 0 for the rationals, a prime p for F_p.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "P")]
    characteristic: u64,

    /// Emit JSON where the default output is plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generating sets of minor ideals, as JSON or one polynomial per line.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Prime partitions of a grid and their symmetry classes.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Prime sequences of column intervals.
    #[command(subcommand)]
    Sequences(SequencesCmd),
    /// Block poset of a prime sequence: nodes, rows, and block sizes.
    Poset(PosetArgs),
    /// Seeded sampling from the component parameterization.
    #[command(subcommand)]
    Phi(PhiCmd),
    /// Algorithms on explicit matrices.
    #[command(subcommand)]
    Algo(AlgoCmd),
    /// Groebner property checks.
    #[command(subcommand)]
    Gb(GbCmd),
    /// Verification tasks emitting a report with a verdict.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Codimension and degree of the initial ideal of the maximal
    /// adjacent minors of an m x n matrix.
    Invariants(InvariantsArgs),
    /// Components of adjacent 2-minor ideals of (2,...,2,m) arrays.
    #[command(subcommand)]
    Multidim(MultidimCmd),
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Adjacent k-minors of the generic m x n matrix.
    Adjacent {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
        #[arg(short)]
        k: u16,
        /// One generator per line for import into a CAS.
        #[arg(long)]
        cas_export: bool,
    },
    /// Component ideal of a prime sequence, e.g. --gamma "0-3,3-7".
    Pgamma {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
        #[arg(long)]
        gamma: String,
        /// One generator per line for import into a CAS.
        #[arg(long)]
        cas_export: bool,
    },
    /// Adjacent 2-minors of a generic multidimensional array.
    Multidim {
        /// Axis lengths, e.g. 2,2,3.
        #[arg(long)]
        shape: String,
        /// One generator per line for import into a CAS.
        #[arg(long)]
        cas_export: bool,
    },
}

#[derive(Subcommand)]
enum PartitionsCmd {
    /// List every prime partition of the rows x cols grid.
    Enumerate {
        #[arg(long)]
        rows: u16,
        #[arg(long)]
        cols: u16,
        /// Group partitions into symmetry classes.
        #[arg(long)]
        classes: bool,
        /// Include the generators of each partition ideal.
        #[arg(long)]
        ideals: bool,
    },
}

#[derive(Subcommand)]
enum SequencesCmd {
    /// List every prime sequence for an m x n matrix.
    Enumerate {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
    },
    /// Count prime sequences via the recurrence.
    Count {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
    },
}

#[derive(Args)]
struct PosetArgs {
    #[arg(short)]
    m: u16,
    #[arg(short)]
    n: u16,
    /// Prime sequence, e.g. "0-3,3-7".
    #[arg(long)]
    gamma: String,
}

#[derive(Subcommand)]
enum PhiCmd {
    /// Sample a matrix from the parameterization of a component.
    Sample {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
        /// Prime sequence, e.g. "0-3,3-7".
        #[arg(long)]
        gamma: String,
        /// RNG seed; the same seed gives byte-identical output.
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AlgoCmd {
    /// Recover the prime sequence whose component contains a matrix.
    GammaFromMatrix {
        /// JSON file holding the matrix, either [[...]] or {"matrix": [[...]]},
        /// entries integers or rational strings like "3/7".
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum GbCmd {
    /// Check generators are a Groebner basis with squarefree initial ideal.
    Check {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
        /// Restrict to one sequence instead of sweeping all of them.
        #[arg(long)]
        gamma: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Intersection of all component ideals equals the adjacent minor ideal.
    Decomposition {
        #[arg(short)]
        m: u16,
        #[arg(short)]
        n: u16,
    },
    /// No ideal of the family is contained in another.
    Incomparable {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short)]
        m: Option<u16>,
        #[arg(short)]
        n: Option<u16>,
        /// Axis lengths for the multidim family, e.g. 2,2,3.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Saturating the adjacent 2-minors of a (2,...,2,m) array by the
    /// product of all variables adds exactly the distant level minors.
    Saturation {
        /// Axis lengths, e.g. 2,2,3.
        #[arg(long)]
        shape: String,
    },
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(short)]
    m: u16,
    #[arg(short)]
    n: u16,
    /// Print the codimension (default: both invariants).
    #[arg(long)]
    codim: bool,
    /// Print the degree (default: both invariants).
    #[arg(long)]
    degree: bool,
}

#[derive(Subcommand)]
enum MultidimCmd {
    /// Supports and generators of every component of a (2,...,2,m) array.
    Primes {
        /// Axis lengths, e.g. 2,2,5.
        #[arg(long)]
        shape: String,
    },
    /// Count the components of a d-dimensional (2,...,2,m) array.
    Count {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        m: u16,
    },
    /// Orbit of an index set under the symmetry group of the shape.
    Orbits {
        /// Axis lengths, e.g. 3,3,3.
        #[arg(long)]
        shape: String,
        /// Semicolon-separated indices, e.g. "1,2,1;1,2,2;1,2,3".
        #[arg(long)]
        set: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sequences,
    Partitions,
    Multidim,
}

impl From<FamilyArg> for run::Family {
    fn from(f: FamilyArg) -> run::Family {
        match f {
            FamilyArg::Sequences => run::Family::Sequences,
            FamilyArg::Partitions => run::Family::Partitions,
            FamilyArg::Multidim => run::Family::Multidim,
        }
    }
}

/// Dying on SIGPIPE keeps `minorprime ... | head` quiet, like other
/// line-oriented tools; Rust's default ignores it and panics on EPIPE.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32> {
    let ctx = Ctx {
        json: cli.json,
        charspec: CharSpec::from_flag(cli.characteristic),
        budget: run::pair_budget()?,
    };
    match cli.command {
        Command::Ideal(cmd) => match cmd {
            IdealCmd::Adjacent { m, n, k, cas_export } => {
                run::ideal_adjacent(ctx, m, n, k, cas_export)
            }
            IdealCmd::Pgamma { m, n, gamma, cas_export } => {
                run::ideal_pgamma(ctx, m, n, &gamma, cas_export)
            }
            IdealCmd::Multidim { shape, cas_export } => {
                run::ideal_multidim(ctx, &shape, cas_export)
            }
        },
        Command::Partitions(PartitionsCmd::Enumerate { rows, cols, classes, ideals }) => {
            run::partitions_enumerate(ctx, rows, cols, classes, ideals)
        }
        Command::Sequences(cmd) => match cmd {
            SequencesCmd::Enumerate { m, n } => run::sequences_enumerate(ctx, m, n),
            SequencesCmd::Count { m, n } => run::sequences_count(ctx, m, n),
        },
        Command::Poset(args) => run::poset_cmd(ctx, args.m, args.n, &args.gamma),
        Command::Phi(PhiCmd::Sample { m, n, gamma, seed }) => {
            run::phi_sample(ctx, m, n, &gamma, seed)
        }
        Command::Algo(AlgoCmd::GammaFromMatrix { matrix }) => {
            run::gamma_from_matrix(ctx, &matrix)
        }
        Command::Gb(GbCmd::Check { m, n, gamma }) => {
            run::gb_check(ctx, m, n, gamma.as_deref())
        }
        Command::Verify(cmd) => match cmd {
            VerifyCmd::Decomposition { m, n } => run::verify_decomposition(ctx, m, n),
            VerifyCmd::Incomparable { family, m, n, shape } => {
                run::verify_incomparable(ctx, family.into(), m, n, shape.as_deref())
            }
            VerifyCmd::Saturation { shape } => run::verify_saturation(ctx, &shape),
        },
        Command::Invariants(args) => {
            run::invariants(ctx, args.m, args.n, args.codim, args.degree)
        }
        Command::Multidim(cmd) => match cmd {
            MultidimCmd::Primes { shape } => run::multidim_primes(ctx, &shape),
            MultidimCmd::Count { d, m } => run::multidim_count(ctx, d, m),
            MultidimCmd::Orbits { shape, set } => run::multidim_orbits(ctx, &shape, &set),
        },
    }
}
