use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qid_core::detlab::DetBackend;
use serde::Serialize;

/// Identity suites the harness can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Theorem1,
    NewtonC0,
    JacksonCorollary,
    #[value(name = "jackson-8phi7")]
    #[serde(rename = "jackson-8phi7")]
    Jackson8phi7,
    Kara,
    Krattenthaler,
    Fnk,
    Lemma33,
    Cofactor,
    Lemmas2x,
    All,
}

impl Identity {
    /// Every concrete suite, in report order.
    pub const SUITES: [Identity; 10] = [
        Identity::Theorem1,
        Identity::NewtonC0,
        Identity::JacksonCorollary,
        Identity::Jackson8phi7,
        Identity::Kara,
        Identity::Krattenthaler,
        Identity::Fnk,
        Identity::Lemma33,
        Identity::Cofactor,
        Identity::Lemmas2x,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem1 => "theorem1",
            Identity::NewtonC0 => "newton-c0",
            Identity::JacksonCorollary => "jackson-corollary",
            Identity::Jackson8phi7 => "jackson-8phi7",
            Identity::Kara => "kara",
            Identity::Krattenthaler => "krattenthaler",
            Identity::Fnk => "fnk",
            Identity::Lemma33 => "lemma33",
            Identity::Cofactor => "cofactor",
            Identity::Lemmas2x => "lemmas2x",
            Identity::All => "all",
        }
    }

    /// The suites selected by this value.
    pub fn expand(self) -> Vec<Identity> {
        match self {
            Identity::All => Identity::SUITES.to_vec(),
            one => vec![one],
        }
    }

    /// Smallest `n` the suite is defined for.
    pub fn min_n(self) -> usize {
        match self {
            Identity::JacksonCorollary | Identity::Jackson8phi7 => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    #[default]
    Rational,
    FractionFree,
}

impl From<Backend> for DetBackend {
    fn from(b: Backend) -> Self {
        match b {
            Backend::Rational => DetBackend::Rational,
            Backend::FractionFree => DetBackend::FractionFree,
        }
    }
}

/// Validated harness configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub identity: Identity,
    pub n_min: usize,
    pub n_max: usize,
    pub trials: u32,
    pub seed: u64,
    pub format: Format,
    pub det_backend: Backend,
    /// Added to one designated exponent in every suite; 0 runs the real formulas.
    pub inject_mutation: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            identity: Identity::All,
            n_min: 1,
            n_max: 3,
            trials: 10,
            seed: 0,
            format: Format::Text,
            det_backend: Backend::Rational,
            inject_mutation: 0,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qid",
    version,
    about = "Exact verification of q-series interpolation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run seeded trials of the identity suites and report the verdicts.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Identity::All)]
    identity: Identity,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Backend::Rational)]
    det_backend: Backend,
    #[arg(long, default_value_t = 0, hide = true, allow_negative_numbers = true)]
    inject_mutation: i64,
}

/// Parses `argv` (program name first). Errors are clap errors with usage exit status 2,
/// or `--help`/`--version` displays.
pub fn parse_args<I, T>(argv: I) -> Result<SuiteConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let args = match cli.command {
        Some(Command::Verify(args)) => args,
        None => return Ok(SuiteConfig::default()),
    };
    if args.n_min > args.n_max {
        return Err(clap::Error::raw(
            clap::error::ErrorKind::ValueValidation,
            format!(
                "--n-min ({}) must not exceed --n-max ({})\n",
                args.n_min, args.n_max
            ),
        ));
    }
    Ok(SuiteConfig {
        identity: args.identity,
        n_min: args.n_min,
        n_max: args.n_max,
        trials: args.trials,
        seed: args.seed,
        format: args.format,
        det_backend: args.det_backend,
        inject_mutation: args.inject_mutation,
    })
}
