//! Command-line front end: parses an algebra file, runs one computation
//! and emits a canonical JSON report.

mod payload;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use quiver_tilt::algebra::{parse_presentation, Presentation, DEFAULT_NILPOTENCY_CAP};
use quiver_tilt::field::{Field, FieldConfig, PrimeField, RationalField};
use quiver_tilt::search::SearchBounds;
use quiver_tilt::Error;

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ASSERTION: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "quiver-tilt", version, about = "Exact computations with quiver algebras and perfect complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Options {
    /// Algebra file.
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    /// `F:<p>` or `Q`; overrides the field named in the file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Longest complex considered, in degrees.
    #[arg(long, global = true)]
    pub max_length: Option<usize>,
    /// Largest multiplicity of a projective in one degree.
    #[arg(long, global = true)]
    pub max_mult: Option<usize>,
    /// Rounds of the generation closure.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Seed of the differential sweep and the random probes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Total number of candidate differentials over a search.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Verb {
    /// Normal-form basis and piece dimensions.
    Basis,
    /// Socle and trace conditions at every vertex.
    Check {
        /// Resolution steps for the `fAe` modules of triangular splits.
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
    },
    /// Indecomposable exceptional complexes up to shift.
    EnumerateExceptional,
    /// Basic tilting complexes.
    EnumerateTilting,
    /// Endomorphism algebras of the tilting complexes, or of one complex.
    Endo {
        /// Complex in the report format; defaults to every tilting complex.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Presentation expected for `End(T)` or its opposite.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Exceptional pairs that would glue the homotopy category.
    Witnesses,
    /// Structural assertions at the vertices that satisfy the conditions.
    Conclusions,
    /// Search for a nonprojective module of finite projective dimension.
    ProbeFindim {
        /// Largest dimension of the submodules quotiented by.
        #[arg(long, default_value_t = 6)]
        dim_bound: usize,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        /// Random quotients tried after the systematic ones.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Corner algebra at the vertices other than `--vertex`.
    CornerDelete {
        #[arg(long)]
        vertex: String,
    },
    /// Cartan and Coxeter matrices.
    Coxeter,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    /// The report, or help text.
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message.into() }
    }
}

/// What a command produced besides its payload.
pub(crate) struct Computed {
    pub payload: Value,
    pub truncated: bool,
    pub failed: bool,
}

pub(crate) struct Context<'a> {
    pub presentation: &'a Presentation,
    pub bounds: SearchBounds,
    pub verb: &'a Verb,
}

fn bounds_for(opts: &Options, n: usize) -> SearchBounds {
    let mut b = SearchBounds::for_vertices(n);
    if let Some(l) = opts.max_length {
        b.max_length = l;
    }
    if let Some(m) = opts.max_mult {
        b.max_mult = m;
    }
    if let Some(d) = opts.depth {
        b.depth = d;
    }
    if let Some(c) = opts.cap {
        b.global_cap = c;
    }
    b.seed = opts.seed;
    b
}

fn execute<F: Field>(field: F, ctx: &Context) -> Result<Computed, Error> {
    let a = ctx.presentation.build(&field, DEFAULT_NILPOTENCY_CAP)?;
    payload::compute(&a, ctx)
}

/// Canonical rendering: sorted keys, two-space indentation, trailing newline.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
        }
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let Some(path) = &cli.opts.algebra else {
        return Outcome::usage("error: --algebra <path> is required\n");
    };
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(format!("error: cannot read {}: {e}\n", path.display())),
    };
    let text = match String::from_utf8(bytes.clone()) {
        Ok(t) => t,
        Err(_) => return Outcome::usage(format!("error: {} is not UTF-8\n", path.display())),
    };
    let presentation = match parse_presentation(&text) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: {}: {e}\n", path.display())),
    };
    let config = match &cli.opts.field {
        Some(s) => match s.parse::<FieldConfig>() {
            Ok(c) => c,
            Err(e) => return Outcome::usage(format!("error: {e}\n")),
        },
        None => presentation.field.unwrap_or_default(),
    };
    let ctx = Context { presentation: &presentation, bounds: bounds_for(&cli.opts, presentation.quiver.n_vertices()), verb: &cli.verb };
    let computed = match config {
        FieldConfig::Prime { p } => match PrimeField::new(p) {
            Ok(f) => execute(f, &ctx),
            Err(e) => Err(e),
        },
        FieldConfig::Rational => execute(RationalField, &ctx),
    };
    let computed = match computed {
        Ok(c) => c,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let report = json!({
        "schema": SCHEMA,
        "tool": "quiver-tilt",
        "version": env!("CARGO_PKG_VERSION"),
        "input_sha256": format!("{:x}", Sha256::digest(&bytes)),
        "field": config,
        "command": {
            "verb": cli.verb,
            "options": cli.opts,
            "bounds": ctx.bounds,
        },
        "truncated": computed.truncated,
        "result": computed.payload,
    });
    let code = if computed.failed {
        EXIT_ASSERTION
    } else if computed.truncated {
        EXIT_TRUNCATED
    } else {
        EXIT_OK
    };
    let body = canonical_json(&report);
    match &cli.opts.out {
        Some(out) => match std::fs::write(out, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", out.display())),
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}
