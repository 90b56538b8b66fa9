use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lsf", version, about = "Twist families, L-space Seifert manifolds, surgery homology and positive braids")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for sweeps and censuses (default: all cores).
    #[arg(long, env = "LSF_JOBS", global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Seifert fibered spaces over S².
    #[command(subcommand)]
    Seifert(SeifertCmd),
    /// Alexander polynomials of twist families.
    #[command(subcommand)]
    Alex(AlexCmd),
    /// Braid words and positive-braid censuses.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Integer matrices and surgery homology.
    #[command(subcommand)]
    Homology(HomologyCmd),
}

#[derive(Debug, Subcommand)]
pub enum SeifertCmd {
    /// Decide whether S²(b; r1,…) is an L-space.
    Lspace(FormArg),
    /// Order of H1.
    H1(FormArg),
    /// Sweep a family Y_n over a window.
    Family {
        /// "b; r1,…,r_{s-1}; t,u,v,w" or @file.
        #[arg(long, allow_hyphen_values = true)]
        family: String,
        /// Inclusive window "lo,hi".
        #[arg(long, allow_hyphen_values = true, default_value = "-50,50")]
        window: String,
        /// Omit the per-member list.
        #[arg(long)]
        summary: bool,
    },
}

#[derive(Debug, Args)]
pub struct FormArg {
    /// "b; r1,r2,…" (use inf for a degenerate fiber) or @file.
    #[arg(long, allow_hyphen_values = true)]
    pub form: String,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// Two-variable Alexander polynomial as JSON, or @file.
    #[arg(long)]
    pub poly2: String,
    /// Linking number of K and c.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: i64,
}

#[derive(Debug, Args)]
pub struct Poly1Arg {
    /// One-variable polynomial as JSON, or @file.
    #[arg(long)]
    pub poly: String,
}

#[derive(Debug, Subcommand)]
pub enum AlexCmd {
    /// Check the Torres conditions and breadth parity.
    Verify {
        #[command(flatten)]
        link: LinkArgs,
        /// Alexander polynomial of c (default 1, c unknotted).
        #[arg(long)]
        delta_c: Option<String>,
        /// Alexander polynomial of K, when known.
        #[arg(long)]
        delta_k: Option<String>,
    },
    /// Alexander polynomial of K_n.
    Twist {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Which twist-family case applies, and the breadth slope.
    Classify {
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Genus lower bound for K_n at one n or over a window.
    Bound {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "window")]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Twists n for which slope r0 + nω² may be an L-space surgery.
    Window {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        r0: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-50,50")]
        window: String,
    },
    /// L-space knot candidate test, optionally with slope–genus bounds.
    Cert {
        #[command(flatten)]
        poly: Poly1Arg,
        /// Surgery slope to test against the genus.
        #[arg(long, allow_hyphen_values = true)]
        slope: Option<String>,
    },
    /// Knot Floer homology staircase of an L-space knot polynomial.
    Staircase {
        #[command(flatten)]
        poly: Poly1Arg,
    },
    /// All candidate polynomials of a genus.
    Enumerate {
        #[arg(long)]
        genus: u64,
    },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Signed generators, e.g. "1 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Strand count (default: smallest that fits).
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Genus of a positive or negative braid knot.
    Genus(WordArgs),
    /// Destabilize generators used once; detect split closures.
    Reduce(WordArgs),
    /// Alexander polynomial of the closure.
    Alexander(WordArgs),
    /// Positive-braid knots of a genus, one JSON line per class.
    Census {
        #[arg(long)]
        genus: u64,
        /// Also list every smaller genus, in order.
        #[arg(long)]
        up_to: bool,
        /// Prefix length used to split the search into work units.
        #[arg(long, default_value_t = 3)]
        split: usize,
    },
    /// Braid of the torus knot T(p,q).
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: usize,
    },
    /// Braid of T(p,q) twisted n times along c₊.
    TwistedTorus {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Integer matrix as a JSON array of rows, or @file.
    #[arg(long)]
    pub matrix: String,
}

#[derive(Debug, Subcommand)]
pub enum HomologyCmd {
    /// Smith normal form diagonal.
    Snf(MatrixArg),
    /// Abelian group presented by the rows.
    H1(MatrixArg),
    /// H1 of rational surgery on a link of unknots.
    Surgery {
        /// {"linking":[[…]],"framings":["p/q",…]} or @file.
        #[arg(long)]
        surgery: String,
    },
    /// det M_n for the pseudo-seiferter presentation.
    FamilyDet {
        #[arg(long, allow_hyphen_values = true)]
        a11: i64,
        #[arg(long, allow_hyphen_values = true)]
        a12: i64,
        #[arg(long, allow_hyphen_values = true)]
        a21: i64,
        #[arg(long)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "window")]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}
