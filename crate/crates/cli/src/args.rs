use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "gassmann",
    version,
    about = "Gassmann triples, cycle-type criteria and prime decomposition types"
)]
pub struct Cli {
    /// Print the JSON payload instead of a table.
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Print an aligned table (the default).
    #[arg(long, global = true)]
    pub table: bool,
    /// Cap on enumerated group elements and intermediate subgroups.
    #[arg(long, global = true, value_name = "N")]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group construction and enumeration.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Gassmann triples and solitary G-sets.
    #[command(subcommand)]
    Gassmann(GassmannCommand),
    /// Cycle-type criteria forcing almost conjugate subgroups to be conjugate.
    #[command(subcommand)]
    Criterion(CriterionCommand),
    /// Whether a prime is 11 or (q^k - 1)/(q - 1) for a prime power q and k >= 3.
    ExcludedPrime { ell: u64 },
    /// Blocks, primitivity and normal closures of cycles.
    #[command(subcommand)]
    Structure(StructureCommand),
    /// Prime decomposition in number fields given by polynomials.
    #[command(subcommand)]
    Nf(NfCommand),
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Catalog name (sym:n, alt:n, cyclic:n, dihedral:n, frobenius20, gl3_2, psl2_11) or group file.
    #[arg(long, value_name = "NAME|FILE")]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct ActionArg {
    /// Act on the cosets of this subgroup (catalog name or file); default is the natural action.
    #[arg(long, value_name = "NAME|FILE")]
    pub h1: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, degree, generators and named subgroups.
    Info(GroupArg),
    /// Conjugacy classes.
    Classes(GroupArg),
    /// Subgroups up to conjugacy.
    Subgroups {
        #[command(flatten)]
        group: GroupArg,
        /// Only subgroups of this index.
        #[arg(long)]
        index: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GassmannCommand {
    /// Whether two subgroups are almost conjugate, and whether they are conjugate.
    Check {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_name = "NAME|FILE")]
        h1: String,
        #[arg(long, value_name = "NAME|FILE")]
        h2: String,
    },
    /// All nontrivial Gassmann triples with subgroups of the given index.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        index: usize,
    },
    /// Whether the coset action of a subgroup is Gassmann solitary.
    Solitary {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_name = "NAME|FILE")]
        h1: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CriterionCommand {
    /// Search the action for an element whose cycle type meets a criterion.
    Scan {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        action: ActionArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum StructureCommand {
    /// Primitivity and all block systems of the action.
    Blocks {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        action: ActionArg,
    },
    /// Normal closure of the ell-cycles and its orbit decomposition.
    ClosureReport {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        action: ActionArg,
        #[arg(long)]
        ell: u32,
    },
}

#[derive(Debug, Args)]
pub struct PolyArg {
    /// Polynomial such as "x^7-7*x+3", a coefficient list "[3,-7,0,0,0,0,0,1]", or @file.
    #[arg(long, value_name = "POLY|@FILE", allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Subcommand)]
pub enum NfCommand {
    /// Decomposition type of one prime.
    Decomposition {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        prime: u64,
    },
    /// Share of unramified primes below the bound that are inert.
    Density {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
    },
    /// Numbers of real and complex places.
    Signature {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Compare decomposition types of two polynomials at all common unramified primes.
    Compare {
        /// Give exactly two polynomials.
        #[arg(
            long,
            value_name = "POLY|@FILE",
            num_args = 1,
            required = true,
            allow_hyphen_values = true
        )]
        poly: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
    },
    /// Compare observed decomposition types with cycle types of an asserted Galois action.
    Chebotarev {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        action: ActionArg,
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
    },
}
