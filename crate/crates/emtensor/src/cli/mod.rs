//! The `emtensor` command line: argument parsing, JSON reports and exit codes.

mod commands;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::finset::BaseKind;
use crate::io::parse_monad;
use crate::monad::{Monad, DEFAULT_BUDGET, DEFAULT_GUARD};
use crate::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "emtensor", version, about = "Exact tensor products of algebras for monoidal monads on finite sets")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// identity, powerset, vector_space, vector_space:p or {"name":..,"p":..}
    #[arg(long, global = true, default_value = "powerset")]
    pub monad: String,
    /// cartesian or cocartesian
    #[arg(long, global = true, default_value = "cartesian")]
    pub base: String,
    /// Largest carrier that may be materialized.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard: usize,
    /// Largest number of candidates an enumeration may test.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Indentation of the JSON report; 0 prints it on one line.
    #[arg(long = "json-indent", global = true, default_value_t = 2)]
    pub json_indent: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Monad laws and the monoidal conditions on small carriers.
    Laws {
        /// |X|,|Y|,|Z| for the monoidal conditions; monad laws run at each size.
        #[arg(long, default_value = "2,2,1")]
        sizes: String,
        /// standard, or additive (the variant that is expected to fail).
        #[arg(long, default_value = "standard")]
        kappa: String,
    },
    /// The tensor product A⊠B with its quotient and universal bimorphism.
    Tensor {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        /// Use the alternative presenting pair.
        #[arg(long)]
        alt: bool,
    },
    /// All bimorphisms A⊗B -> C and the representation bijection.
    Bimorphisms {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "C")]
        c: String,
    },
    /// Coherence of the induced monoidal structure on a grid of algebras.
    Coherence {
        /// JSON object {"algebras": {name: algebra}, "pentagon": bool}; builtin grid if absent.
        #[arg(long)]
        fixtures: Option<String>,
    },
    /// Monoid axioms for a monoid object.
    MonoidCheck {
        #[arg(long)]
        monoid: String,
    },
    /// Laws of the action monad M⊠T(−) at a set X.
    ActionMonad {
        #[arg(long)]
        monoid: String,
        #[arg(long = "X", default_value_t = 1)]
        x: usize,
    },
    /// Comparison between M-actions and algebras of the action monad.
    Monadicity {
        #[arg(long)]
        monoid: String,
        #[arg(long = "max-algebra", default_value_t = 2)]
        max_algebra: usize,
        /// Also round-trip the free algebras on sets of size ≤ X.
        #[arg(long = "X")]
        x: Option<usize>,
    },
    /// Restriction of scalars along a monoid homomorphism.
    Restrict {
        #[arg(long)]
        hom: String,
        #[arg(long = "max-algebra", default_value_t = 2)]
        max_algebra: usize,
    },
    /// Kleisli tensor roundtrip and the Kleisli functor of the unit morphism.
    KleisliRoundtrip {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Laws { .. } => "laws",
            Command::Tensor { .. } => "tensor",
            Command::Bimorphisms { .. } => "bimorphisms",
            Command::Coherence { .. } => "coherence",
            Command::MonoidCheck { .. } => "monoid-check",
            Command::ActionMonad { .. } => "action-monad",
            Command::Monadicity { .. } => "monadicity",
            Command::Restrict { .. } => "restrict",
            Command::KleisliRoundtrip { .. } => "kleisli-roundtrip",
        }
    }
}

/// What a command produced besides its checks.
#[derive(Default)]
pub struct Outcome {
    pub report: Report,
    pub carriers: Map<String, Value>,
    pub tables: Map<String, Value>,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownMonad(_) => EXIT_PARSE,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Precondition(_) | Error::Invariant(_) => EXIT_FAIL,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::UnknownMonad(_) => "unknown-monad",
        Error::Resource(_) => "resource",
        Error::Precondition(_) => "precondition",
        Error::Invariant(_) => "invariant",
    }
}

fn build_monad(g: &Global) -> crate::Result<Monad> {
    let base = BaseKind::parse(&g.base)?;
    Ok(parse_monad(&g.monad, base)?.with_guard(g.guard).with_budget(g.budget))
}

/// Runs a parsed command and returns the JSON report with its exit code.
pub fn run(cli: &Cli) -> (Value, i32) {
    let mut out = Map::new();
    out.insert("command".into(), json!(cli.command.name()));
    out.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    let result = build_monad(&cli.global).and_then(|m| {
        out.insert("monad".into(), json!(m.name()));
        out.insert("base".into(), json!(m.base.name()));
        commands::dispatch(&m, &cli.command)
    });
    let code = match result {
        Ok(o) => {
            let pass = o.report.all_pass();
            let witnesses: Vec<Value> = o
                .report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| json!({"check": c.name, "witness": c.witness}))
                .collect();
            let examined: u64 = o.report.checks.iter().map(|c| c.checked).sum();
            out.insert("status".into(), json!(if pass { "pass" } else { "fail" }));
            out.insert("witnesses".into(), Value::Array(witnesses));
            out.insert("checks".into(), serde_json::to_value(&o.report.checks).expect("checks serialize"));
            out.insert("carriers".into(), Value::Object(o.carriers));
            out.insert("tables".into(), Value::Object(o.tables));
            // Work counters rather than wall-clock time, so reports are reproducible.
            out.insert("timing".into(), json!({"checks": o.report.checks.len(), "elements_examined": examined}));
            if pass { EXIT_PASS } else { EXIT_FAIL }
        }
        Err(e) => {
            let code = exit_code(&e);
            out.insert("status".into(), json!(if code == EXIT_FAIL { "fail" } else { "error" }));
            out.insert("witnesses".into(), json!([{"check": "input", "witness": e.to_string()}]));
            out.insert("error".into(), json!({"kind": error_kind(&e), "message": e.to_string()}));
            out.insert("carriers".into(), json!({}));
            out.insert("tables".into(), json!({}));
            out.insert("timing".into(), json!({"checks": 0, "elements_examined": 0}));
            code
        }
    };
    (Value::Object(out), code)
}

/// Serializes with the requested indentation.
pub fn render(v: &Value, indent: usize) -> String {
    if indent == 0 {
        return serde_json::to_string(v).expect("report serializes");
    }
    let pad = vec![b' '; indent];
    let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    serde::Serialize::serialize(v, &mut ser).expect("report serializes");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

/// Parses `args`, runs the command and returns (stdout text, exit code).
/// Argument errors exit with the parse code; `--help` and `--version` exit 0.
pub fn main_with_args<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let (v, code) = run(&cli);
            (render(&v, cli.global.json_indent), code)
        }
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            (e.to_string(), code)
        }
    }
}
