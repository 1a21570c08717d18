//! Command-line front end: counting, enumeration, series expansion,
//! bijection application, verification suites, OEIS checks and tiling
//! rendering.
//!
//! Exit status: 0 on success, 1 on a domain error (bad flags, malformed
//! literals, invalid inputs), 2 on a verification failure.

pub mod golden;

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use poscomp::bijections::{
    binary_to_skeleton, choose_two_to_odd, color2_to_even, comp_to_binary, even_to_color2,
    even_to_perm, even_to_ternary, odd_binary_variant, odd_tiling_form, odd_to_choose_two,
    peel_first, perm_to_even, ternary_to_even, unpeel, Peeled,
};
use poscomp::comp::{
    count_dp, enumerate, enumerate_choose_two, render_tiling, to_tiling, ChooseTwoComposition,
    ColoredComposition, ColoringScheme, SpotRule,
};
use poscomp::oeis;
use poscomp::patterns::{BinaryString, Permutation, TernaryString};
use poscomp::series::{expand, gf_even, gf_mk, gf_odd, recurrence_restricted};
use poscomp::verify::{self, Check, VerifyConfig};

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Verification,
}

impl CliError {
    fn domain(e: impl Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CmdResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "poscomp",
    version,
    about = "Positional n-color compositions: exact counts, series, bijections and checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact number of compositions of a total
    Count {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Total being composed
        #[arg(long)]
        n: u64,
    },
    /// Stream every valid composition of a total
    Enumerate {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Total being composed
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Show a generating function (or recurrence) and its coefficients
    Series {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Number of coefficients to print
        #[arg(long)]
        terms: usize,
    },
    /// Apply one of the bijections in either direction
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Composition, permutation or digit-string literal
        #[arg(long)]
        input: String,
        /// Position modulus for peel (default 2)
        #[arg(long)]
        m: Option<u64>,
        /// Scheme class of the input for peel (default 2)
        #[arg(long)]
        k: Option<u64>,
        /// For binary rev: read the string as the ODD-composition variant
        #[arg(long)]
        odd: bool,
        /// With --odd: prepend a 1 before reading runs (off by default;
        /// this reading does not reproduce the ODD counts)
        #[arg(long)]
        prepend_one: bool,
    },
    /// Run a named property suite and print a pass/fail table
    Verify {
        /// counting | oeis | recurrence | roundtrips | equinumerosity |
        /// identities | parser | golden | all
        #[arg(long)]
        suite: String,
        /// Cap the composition totals / string lengths
        #[arg(long)]
        max_n: Option<u64>,
        /// Cap the position modulus
        #[arg(long)]
        m: Option<u64>,
        /// Let the OEIS suite touch the network (fixtures otherwise)
        #[arg(long)]
        online: bool,
    },
    /// Fetch an OEIS b-file and align it with the computed sequence
    Oeis {
        /// Sequence id, e.g. A034943
        #[arg(long)]
        id: String,
        /// Skip the network and disk cache, use the bundled fixture
        #[arg(long)]
        offline: bool,
        /// How many computed terms to align (default 14)
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Render a composition as an ASCII spotted tiling
    Tiling {
        /// Composition literal (colored or choose-two)
        #[arg(long)]
        input: String,
        /// Draw uncolored parts with a spot in cell 1
        #[arg(long)]
        spot_uncolored: bool,
    },
}

#[derive(Args)]
struct SchemeArgs {
    #[arg(long, value_enum)]
    scheme: SchemeKind,
    /// Position modulus (with --scheme mk)
    #[arg(long)]
    m: Option<u64>,
    /// Colored position class (with --scheme mk)
    #[arg(long)]
    k: Option<u64>,
    /// First banned color (with --scheme restrict)
    #[arg(long)]
    lo: Option<u64>,
    /// Width of the banned band beyond --lo (with --scheme restrict)
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeKind {
    Even,
    Odd,
    Mk,
    Restrict,
    Choose2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    Color2,
    Choose2,
    Ternary,
    Binary,
    Perm,
    Peel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Fwd,
    Rev,
}

impl SchemeArgs {
    fn reject(&self, flag: &str, present: bool) -> CmdResult {
        if present {
            Err(CliError::Domain(format!(
                "--{flag} is not used with --scheme {}",
                self.kind_name()
            )))
        } else {
            Ok(())
        }
    }

    fn kind_name(&self) -> &'static str {
        match self.scheme {
            SchemeKind::Even => "even",
            SchemeKind::Odd => "odd",
            SchemeKind::Mk => "mk",
            SchemeKind::Restrict => "restrict",
            SchemeKind::Choose2 => "choose2",
        }
    }

    fn build(&self) -> Result<ColoringScheme, CliError> {
        match self.scheme {
            SchemeKind::Even | SchemeKind::Odd | SchemeKind::Choose2 => {
                self.reject("m", self.m.is_some())?;
                self.reject("k", self.k.is_some())?;
                self.reject("lo", self.lo.is_some())?;
                self.reject("d", self.d.is_some())?;
                Ok(match self.scheme {
                    SchemeKind::Even => ColoringScheme::even(),
                    SchemeKind::Odd => ColoringScheme::odd(),
                    _ => ColoringScheme::choose_two(),
                })
            }
            SchemeKind::Mk => {
                self.reject("lo", self.lo.is_some())?;
                self.reject("d", self.d.is_some())?;
                let m = self
                    .m
                    .ok_or_else(|| CliError::Domain("--scheme mk needs --m".to_string()))?;
                let k = self
                    .k
                    .ok_or_else(|| CliError::Domain("--scheme mk needs --k".to_string()))?;
                ColoringScheme::positional(m, k).map_err(CliError::domain)
            }
            SchemeKind::Restrict => {
                self.reject("m", self.m.is_some())?;
                self.reject("k", self.k.is_some())?;
                let lo = self
                    .lo
                    .ok_or_else(|| CliError::Domain("--scheme restrict needs --lo".to_string()))?;
                ColoringScheme::restrict_colors(lo, self.d.unwrap_or(0)).map_err(CliError::domain)
            }
        }
    }
}

/// Parse `args` (argv-style, program name first) and execute, writing
/// results to `out`. Returns the process exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write) -> u8 {
    let argv = args.iter().map(|s| s.as_ref().to_string());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            1
        }
        Err(CliError::Verification) => 2,
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Cmd::Count { scheme, n } => count_cmd(&scheme, n, out),
        Cmd::Enumerate {
            scheme,
            n,
            format,
            output,
        } => match output {
            None => enumerate_cmd(&scheme, n, format, out),
            Some(path) => {
                let mut file = std::fs::File::create(&path).map_err(CliError::domain)?;
                enumerate_cmd(&scheme, n, format, &mut file)
            }
        },
        Cmd::Series { scheme, terms } => series_cmd(&scheme, terms, out),
        Cmd::Map {
            bijection,
            direction,
            input,
            m,
            k,
            odd,
            prepend_one,
        } => map_cmd(bijection, direction, &input, m, k, odd, prepend_one, out),
        Cmd::Verify {
            suite,
            max_n,
            m,
            online,
        } => verify_cmd(&suite, max_n, m, online, out),
        Cmd::Oeis { id, offline, terms } => oeis_cmd(&id, offline, terms.unwrap_or(14), out),
        Cmd::Tiling {
            input,
            spot_uncolored,
        } => tiling_cmd(&input, spot_uncolored, out),
    }
}

fn emit(out: &mut dyn Write, value: impl Display) -> CmdResult {
    writeln!(out, "{value}").map_err(CliError::domain)
}

fn count_cmd(scheme: &SchemeArgs, n: u64, out: &mut dyn Write) -> CmdResult {
    let scheme = scheme.build()?;
    emit(out, count_dp(&scheme, n))
}

fn enumerate_cmd(
    scheme: &SchemeArgs,
    n: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let scheme = scheme.build()?;
    if scheme == ColoringScheme::ChooseTwo {
        for comp in enumerate_choose_two(n) {
            match format {
                OutputFormat::Text => emit(out, &comp)?,
                OutputFormat::Json => {
                    emit(out, serde_json::to_string(&comp).map_err(CliError::domain)?)?
                }
            }
        }
        return Ok(());
    }
    for comp in enumerate(&scheme, n).map_err(CliError::domain)? {
        match format {
            OutputFormat::Text => emit(out, &comp)?,
            OutputFormat::Json => {
                emit(out, serde_json::to_string(&comp).map_err(CliError::domain)?)?
            }
        }
    }
    Ok(())
}

fn series_cmd(scheme: &SchemeArgs, terms: usize, out: &mut dyn Write) -> CmdResult {
    match scheme.scheme {
        SchemeKind::Choose2 => Err(CliError::Domain(
            "no generating function for choose-two compositions; use count".to_string(),
        )),
        SchemeKind::Restrict => {
            let ColoringScheme::RestrictColors { lo, d } = scheme.build()? else {
                unreachable!()
            };
            let series = recurrence_restricted(lo, d, terms).map_err(CliError::domain)?;
            emit(
                out,
                format!(
                    "recurrence: a(n) = 3a(n-1) - a(n-2) - a(n-{lo}) + a(n-{})",
                    lo + d + 1
                ),
            )?;
            for (i, value) in series.terms().iter().enumerate() {
                emit(out, format!("{} {value}", i + 1))?;
            }
            Ok(())
        }
        _ => {
            let gf = match scheme.scheme {
                SchemeKind::Even => {
                    scheme.build()?;
                    gf_even()
                }
                SchemeKind::Odd => {
                    scheme.build()?;
                    gf_odd()
                }
                _ => {
                    let ColoringScheme::Positional { modulus, class } = scheme.build()? else {
                        unreachable!()
                    };
                    gf_mk(modulus, class).map_err(CliError::domain)?
                }
            };
            let series = expand(&gf, terms).map_err(CliError::domain)?;
            emit(out, format!("gf: {gf}"))?;
            emit(out, format!("0 {}", series.constant()))?;
            for (i, value) in series.terms().iter().enumerate() {
                emit(out, format!("{} {value}", i + 1))?;
            }
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn map_cmd(
    bijection: Bijection,
    direction: Direction,
    input: &str,
    m: Option<u64>,
    k: Option<u64>,
    odd: bool,
    prepend_one: bool,
    out: &mut dyn Write,
) -> CmdResult {
    if bijection != Bijection::Peel && (m.is_some() || k.is_some()) {
        return Err(CliError::Domain(
            "--m/--k are only used by --bijection peel".to_string(),
        ));
    }
    if bijection != Bijection::Binary && (odd || prepend_one) {
        return Err(CliError::Domain(
            "--odd/--prepend-one are only used by --bijection binary".to_string(),
        ));
    }
    let comp = |s: &str| s.parse::<ColoredComposition>().map_err(CliError::domain);
    match (bijection, direction) {
        (Bijection::Color2, Direction::Fwd) => {
            emit(out, color2_to_even(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Color2, Direction::Rev) => {
            emit(out, even_to_color2(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Choose2, Direction::Fwd) => {
            emit(out, odd_to_choose_two(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Choose2, Direction::Rev) => {
            let spotted: ChooseTwoComposition = input.parse().map_err(CliError::domain)?;
            emit(out, choose_two_to_odd(&spotted).map_err(CliError::domain)?)
        }
        (Bijection::Ternary, Direction::Fwd) => {
            emit(out, even_to_ternary(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Ternary, Direction::Rev) => {
            let s: TernaryString = input.parse().map_err(CliError::domain)?;
            emit(out, ternary_to_even(&s).map_err(CliError::domain)?)
        }
        (Bijection::Binary, Direction::Fwd) => {
            if odd || prepend_one {
                return Err(CliError::Domain(
                    "--odd/--prepend-one apply to --direction rev".to_string(),
                ));
            }
            emit(out, comp_to_binary(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Binary, Direction::Rev) => {
            let s: BinaryString = input.parse().map_err(CliError::domain)?;
            let (skeleton, multiplicity) = if odd {
                odd_binary_variant(&s, prepend_one).map_err(CliError::domain)?
            } else if prepend_one {
                return Err(CliError::Domain(
                    "--prepend-one needs --odd".to_string(),
                ));
            } else {
                binary_to_skeleton(&s)
            };
            emit(out, format!("{skeleton} {multiplicity}"))
        }
        (Bijection::Perm, Direction::Fwd) => {
            let p: Permutation = input.parse().map_err(CliError::domain)?;
            emit(out, perm_to_even(&p).map_err(CliError::domain)?)
        }
        (Bijection::Perm, Direction::Rev) => {
            emit(out, even_to_perm(&comp(input)?).map_err(CliError::domain)?)
        }
        (Bijection::Peel, Direction::Fwd) => {
            let scheme =
                ColoringScheme::positional(m.unwrap_or(2), k.unwrap_or(2)).map_err(CliError::domain)?;
            match peel_first(&comp(input)?, &scheme).map_err(CliError::domain)? {
                Peeled::Decremented(c) => emit(out, format!("decremented:{c}")),
                Peeled::Removed(c) => emit(out, format!("removed:{c}")),
            }
        }
        (Bijection::Peel, Direction::Rev) => {
            let scheme =
                ColoringScheme::positional(m.unwrap_or(2), k.unwrap_or(2)).map_err(CliError::domain)?;
            let peeled = if let Some(rest) = input.strip_prefix("decremented:") {
                Peeled::Decremented(comp(rest)?)
            } else if let Some(rest) = input.strip_prefix("removed:") {
                Peeled::Removed(comp(rest)?)
            } else {
                return Err(CliError::Domain(
                    "peel rev input must start with 'decremented:' or 'removed:'".to_string(),
                ));
            };
            emit(out, unpeel(&peeled, &scheme).map_err(CliError::domain)?)
        }
    }
}

fn parse_suite(name: &str) -> Result<Vec<&'static str>, CliError> {
    let canonical = match name {
        "counting" | "gf-vs-dp" => "counting",
        "oeis" => "oeis",
        "recurrence" => "recurrence",
        "roundtrip" | "roundtrips" => "roundtrips",
        "equinumerosity" | "equinumerous" => "equinumerosity",
        "identity" | "identities" => "identities",
        "parser" => "parser",
        "golden" => "golden",
        "all" => {
            return Ok(vec![
                "counting",
                "oeis",
                "recurrence",
                "roundtrips",
                "equinumerosity",
                "identities",
                "parser",
                "golden",
            ])
        }
        other => {
            return Err(CliError::Domain(format!(
                "unknown suite '{other}' (try counting, oeis, recurrence, roundtrips, \
                 equinumerosity, identities, parser, golden or all)"
            )))
        }
    };
    Ok(vec![canonical])
}

fn run_suite(name: &str, cfg: &VerifyConfig) -> Vec<Check> {
    match name {
        "counting" => verify::suite_counting(cfg),
        "oeis" => verify::suite_oeis(cfg),
        "recurrence" => verify::suite_recurrence(cfg),
        "roundtrips" => verify::suite_roundtrips(cfg),
        "equinumerosity" => verify::suite_equinumerosity(cfg),
        "identities" => verify::suite_identities(cfg),
        "parser" => verify::suite_parser(cfg),
        "golden" => golden::golden_checks(),
        _ => unreachable!("parse_suite only returns known names"),
    }
}

fn verify_cmd(
    suite: &str,
    max_n: Option<u64>,
    max_m: Option<u64>,
    online: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let cfg = VerifyConfig {
        max_n,
        max_m,
        offline: Some(!online),
    };
    let mut failures = 0usize;
    let mut total = 0usize;
    for name in parse_suite(suite)? {
        let checks = run_suite(name, &cfg);
        let passed = checks.iter().filter(|c| c.pass).count();
        for check in &checks {
            if check.pass {
                emit(out, format!("[PASS] {}", check.label))?;
            } else {
                emit(out, format!("[FAIL] {}: {}", check.label, check.detail))?;
            }
        }
        emit(out, format!("suite {name}: {passed}/{} passed", checks.len()))?;
        failures += checks.len() - passed;
        total += checks.len();
    }
    if failures > 0 {
        emit(out, format!("{failures}/{total} checks failed"))?;
        return Err(CliError::Verification);
    }
    Ok(())
}

fn oeis_cmd(id: &str, offline: bool, terms: u64, out: &mut dyn Write) -> CmdResult {
    let scheme = match id {
        "A034943" => ("EVEN", ColoringScheme::even()),
        "A095263" => ("ODD", ColoringScheme::odd()),
        other => {
            return Err(CliError::Domain(format!(
                "no computed sequence is associated with {other}; known ids: A034943, A095263"
            )))
        }
    };
    let record = oeis::fetch(id, offline).map_err(CliError::domain)?;
    let computed: Vec<num_bigint::BigInt> = (1..=terms)
        .map(|n| count_dp(&scheme.1, n).into())
        .collect();
    emit(out, format!("id: {}", record.id))?;
    emit(out, format!("source: {}", record.source))?;
    emit(out, format!("offset: {}", record.offset))?;
    emit(out, format!("terms: {}", record.terms.len()))?;
    emit(
        out,
        format!("computed: {} counts, n = 1..{terms}", scheme.0),
    )?;
    let alignment = oeis::align(&record, &computed).map_err(CliError::domain)?;
    emit(out, format!("shift: {}", alignment.shift))?;
    emit(out, format!("matched: {}", alignment.matched))?;
    let needed = oeis::required_matches(&record, &computed);
    if alignment.matched < needed {
        emit(
            out,
            format!("alignment too short: need {needed} matches"),
        )?;
        return Err(CliError::Verification);
    }
    Ok(())
}

fn tiling_cmd(input: &str, spot_uncolored: bool, out: &mut dyn Write) -> CmdResult {
    let rule = if spot_uncolored {
        SpotRule::UncoloredAtCellOne
    } else {
        SpotRule::ColoredOnly
    };
    let tiling = match input.parse::<ColoredComposition>() {
        Ok(comp) => to_tiling(&comp, rule),
        Err(_) => {
            let spotted: ChooseTwoComposition = input.parse().map_err(|_| {
                CliError::Domain(format!("'{input}' is not a composition literal"))
            })?;
            spotted.to_tiling()
        }
    };
    emit(out, render_tiling(&tiling).map_err(CliError::domain)?)
}
