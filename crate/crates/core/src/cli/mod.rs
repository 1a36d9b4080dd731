//! Command surface of the `fsplit` binary: a session file plus one command.
//!
//! Operands name session bindings or give inline text: a polynomial, or
//! ideal generators separated by `;`, optionally intersected with `&`.
//! Reports go to standard output and are byte-stable; generator lists are
//! sorted by the ring order and then by text.

mod session;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::frobenius::{
    bracket_power, compatible_candidates, eth_root, fedder_check, is_compatible,
    is_compatible_by_bracket, stable_closure, CartierMap, FrobeniusPower,
};
use crate::groebner::{sort_for_display, Ideal};
use crate::poly::{MonomialOrder, Polynomial};
use crate::quotient::{equal_mod, homogenizing_weights, image_mod, minimal_generators};
use crate::stanley_reisner::{
    boix_colon, complex_from_ideal, f_report, format_variable_prime, sr_compatible_primes,
    sr_primary_decomposition, sr_test_ideal, tightness_bound, TestIdealAlgorithm,
    SimplicialComplex, DEFAULT_ENUMERATION_CAP,
};

pub use session::{parse_session, Binding, ResolveError, Session, SessionError};

#[derive(Parser, Debug)]
#[command(name = "fsplit", version, about = "Frobenius splittings and test ideals over prime fields")]
pub struct Cli {
    /// Session file declaring the ring and named objects.
    pub session: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Power {
    /// Frobenius exponent: q = p^e.
    #[arg(long, default_value_t = 1)]
    pub e: u32,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Bracket power I^[q].
    Bracket {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        power: Power,
    },
    /// e-th root ideal I_e(I).
    Root {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        power: Power,
    },
    /// Trace of z^(1/q) f^(1/q) under the dual-basis projection.
    Trace {
        #[arg(long, default_value = "1")]
        z: String,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        power: Power,
    },
    /// Whether an ideal is compatible with the map given by z.
    Compatible {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        z: String,
        #[command(flatten)]
        power: Power,
        /// Decide by z J ⊆ J^[q] instead of I_e(z J) ⊆ J.
        #[arg(long)]
        bracket: bool,
    },
    /// Fedder's criterion for z on S/I.
    Fedder {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        z: String,
        #[command(flatten)]
        power: Power,
    },
    /// Smallest ideal containing c that the map given by z sends into itself.
    StableClosure {
        #[arg(long)]
        z: String,
        #[arg(long)]
        c: String,
        #[command(flatten)]
        power: Power,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long)]
        ideal: String,
        /// degrevlex, lex or elim:k.
        #[arg(long)]
        order: Option<MonomialOrder>,
    },
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership.
    Member {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Intersection of two or more ideals.
    Intersect {
        #[arg(long = "ideal", required = true, num_args = 1)]
        ideals: Vec<String>,
    },
    /// Colon ideal (I : J).
    Colon {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Test ideal of S/I from a list of candidate primes.
    TestIdeal {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        z: String,
        #[command(flatten)]
        power: Power,
        /// Candidate prime; repeat for each.
        #[arg(long = "candidate", required = true)]
        candidates: Vec<String>,
        /// Minimal primes of I; inferred from the candidates when absent.
        #[arg(long = "minimal")]
        minimal: Vec<String>,
    },
    /// Stanley-Reisner operations.
    #[command(subcommand)]
    Sr(SrCommand),
    /// Ideals of S/I.
    #[command(subcommand)]
    Mod(ModCommand),
}

#[derive(Subcommand, Debug, Clone)]
pub enum SrCommand {
    /// Facets of the complex of a square-free monomial ideal.
    Facets {
        #[arg(long)]
        ideal: String,
    },
    /// f-vector, facet count and dimension.
    Fvector {
        #[arg(long, alias = "ideal")]
        complex: String,
    },
    /// Minimal primes P_{F^c}.
    Primary {
        #[arg(long, alias = "ideal")]
        complex: String,
    },
    /// (I^[q] : I) from the primary decomposition.
    ColonBracket {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        power: Power,
    },
    /// Variable primes compatible with z = (x1⋯xn)^(q-1).
    CompatiblePrimes {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        power: Power,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Test ideal and tightness bound.
    TestIdeal {
        #[arg(long, alias = "ideal")]
        complex: String,
        /// facet or intersection.
        #[arg(long, default_value = "facet")]
        algorithm: TestIdealAlgorithm,
    },
    /// Number of facets.
    TightnessBound {
        #[arg(long, alias = "ideal")]
        complex: String,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ModCommand {
    /// The image of J in S/I.
    Image {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        of: String,
    },
    /// Minimal number of generators of the image of J in S/I.
    Mingens {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        of: String,
    },
    /// Whether J1 + I = J2 + I.
    Equal {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

/// How a command failed; selects the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Malformed input or unknown names: exit status 2.
    Usage(String),
    /// A well-formed request the mathematics refuses: exit status 1.
    Refusal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Refusal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Refusal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::NotPrime(_)
            | Error::CharacteristicTooLarge(_)
            | Error::InvalidRing(_)
            | Error::MixedRings
            | Error::NotPowerOfCharacteristic { .. }
            | Error::ZeroFrobeniusExponent
            | Error::InvalidComplex(_) => Failure::Usage(e.to_string()),
            _ => Failure::Refusal(e.to_string()),
        }
    }
}

/// Output of a successful command: the report plus warnings for stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub warnings: Vec<String>,
}

fn operand<T>(flag: &str, r: Result<T, ResolveError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("--{flag}: {}", e.message)))
}

/// Generators sorted for display, comma separated; `0` for the zero ideal.
pub fn format_generators(gens: &[Polynomial]) -> String {
    if gens.is_empty() {
        return "0".into();
    }
    let sorted = sort_for_display(gens.to_vec());
    sorted.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// A complex operand, or the complex of a square-free monomial ideal operand.
fn complex_operand(session: &Session, flag: &str, text: &str) -> Result<SimplicialComplex, Failure> {
    match session.resolve_complex(text) {
        Some(d) => operand(flag, d),
        None => {
            let i = operand(flag, session.resolve_ideal(text))?;
            Ok(complex_from_ideal(&i)?)
        }
    }
}

fn format_basis(ideal: &Ideal) -> Result<String, Failure> {
    Ok(format_generators(ideal.groebner_basis()?))
}

fn format_bool(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn cartier(session: &Session, z: &str, power: &Power) -> Result<CartierMap, Failure> {
    let z = operand("z", session.resolve_poly(z))?;
    Ok(CartierMap::new(z, power.e)?)
}

fn warn_if_inhomogeneous(j: &Ideal, i: &Ideal, report: &mut Report) -> Result<(), Failure> {
    if homogenizing_weights(j, i)?.is_none() {
        report.warnings.push(
            "input is not homogeneous for any positive weight vector; \
             generator counts need not be local minimal counts"
                .into(),
        );
    }
    Ok(())
}

/// Runs one command against a session.
pub fn execute(session: &Session, command: &Command) -> Result<Report, Failure> {
    let mut report = Report::default();
    let out = &mut report.stdout;
    let ring = session.ring();
    match command {
        Command::Bracket { ideal, power } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let q = FrobeniusPower::for_ring(ring, power.e)?;
            writeln!(out, "bracket = {}", format_basis(&bracket_power(&i, q)?)?).unwrap();
        }
        Command::Root { ideal, power } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            writeln!(out, "root = {}", format_basis(&eth_root(&i, power.e)?)?).unwrap();
        }
        Command::Trace { z, f, power } => {
            let map = cartier(session, z, power)?;
            let f = operand("f", session.resolve_poly(f))?;
            writeln!(out, "trace = {}", map.apply(&f)?).unwrap();
        }
        Command::Compatible {
            ideal,
            z,
            power,
            bracket,
        } => {
            let j = operand("ideal", session.resolve_ideal(ideal))?;
            let map = cartier(session, z, power)?;
            let ok = if *bracket {
                is_compatible_by_bracket(&j, &map)?
            } else {
                is_compatible(&j, &map)?
            };
            writeln!(out, "compatible: {}", format_bool(ok)).unwrap();
        }
        Command::Fedder { ideal, z, power } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let map = cartier(session, z, power)?;
            let r = fedder_check(&i, &map)?;
            writeln!(out, "in-colon: {}", format_bool(r.in_colon)).unwrap();
            writeln!(out, "outside-bracket-maximal: {}", format_bool(r.outside_mq)).unwrap();
            writeln!(out, "surjective: {}", format_bool(r.surjective)).unwrap();
        }
        Command::StableClosure { z, c, power } => {
            let map = cartier(session, z, power)?;
            let c = operand("c", session.resolve_poly(c))?;
            writeln!(out, "closure = {}", format_basis(&stable_closure(&map, &c)?)?).unwrap();
        }
        Command::Gb { ideal, order } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let basis = match order {
                None => i.groebner_basis()?.to_vec(),
                Some(o) => crate::groebner::buchberger(i.generators(), *o)?,
            };
            // basis order is the ring order, already descending
            let text: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
            let text = if text.is_empty() { "0".to_string() } else { text.join(", ") };
            writeln!(out, "gb = {text}").unwrap();
        }
        Command::Nf { poly, ideal } => {
            let f = operand("poly", session.resolve_poly(poly))?;
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            writeln!(out, "nf = {}", i.normal_form(&f)?).unwrap();
        }
        Command::Member { poly, ideal } => {
            let f = operand("poly", session.resolve_poly(poly))?;
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            writeln!(out, "member: {}", format_bool(i.contains(&f)?)).unwrap();
        }
        Command::Intersect { ideals } => {
            let mut acc: Option<Ideal> = None;
            for text in ideals {
                let i = operand("ideal", session.resolve_ideal(text))?;
                acc = Some(match acc {
                    None => i,
                    Some(a) => a.intersect(&i)?,
                });
            }
            let acc = acc.expect("clap requires one --ideal");
            writeln!(out, "intersection = {}", format_basis(&acc)?).unwrap();
        }
        Command::Colon { ideal, by } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let j = operand("by", session.resolve_ideal(by))?;
            writeln!(out, "colon = {}", format_basis(&i.colon(&j)?)?).unwrap();
        }
        Command::TestIdeal {
            ideal,
            z,
            power,
            candidates,
            minimal,
        } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let map = cartier(session, z, power)?;
            let cands = candidates
                .iter()
                .map(|c| operand("candidate", session.resolve_ideal(c)))
                .collect::<Result<Vec<_>, _>>()?;
            let given = minimal
                .iter()
                .map(|c| operand("minimal", session.resolve_ideal(c)))
                .collect::<Result<Vec<_>, _>>()?;
            let fedder = fedder_check(&i, &map)?;
            writeln!(out, "surjective: {}", format_bool(fedder.surjective)).unwrap();
            let rep = compatible_candidates(
                &i,
                &map,
                &cands,
                if given.is_empty() { None } else { Some(&given) },
            )?;
            for (k, c) in cands.iter().enumerate() {
                let mut verdict = if !rep.compatible[k] {
                    "not compatible".to_string()
                } else if !rep.contains_base[k] {
                    "compatible, does not contain I".to_string()
                } else if rep.minimal[k] {
                    "compatible, minimal prime".to_string()
                } else {
                    "compatible, retained".to_string()
                };
                if let Some(j) = rep.duplicate_of[k] {
                    write!(verdict, ", equal to candidate {}", j + 1).unwrap();
                }
                writeln!(out, "candidate {} {}: {}", k + 1, c, verdict).unwrap();
            }
            for (k, p) in given.iter().enumerate() {
                if !p.contains_ideal(&i)? {
                    writeln!(out, "warning: minimal prime {} {} does not contain I", k + 1, p)
                        .unwrap();
                }
            }
            let retained: Vec<String> = rep.retained.iter().map(|k| (k + 1).to_string()).collect();
            writeln!(out, "retained: {}", retained.join(", ")).unwrap();
            warn_if_inhomogeneous(&rep.intersection, &i, &mut report)?;
            let out = &mut report.stdout;
            let image = image_mod(&rep.intersection, &i)?;
            writeln!(out, "tau = {}", format_generators(image.display_gens())).unwrap();
        }
        Command::Sr(sr) => execute_sr(session, sr, out)?,
        Command::Mod(m) => execute_mod(session, m, &mut report)?,
    }
    Ok(report)
}

fn execute_sr(session: &Session, command: &SrCommand, out: &mut String) -> Result<(), Failure> {
    let ring = session.ring();
    match command {
        SrCommand::Facets { ideal } => {
            let d = complex_operand(session, "ideal", ideal)?;
            writeln!(out, "{d}").unwrap();
        }
        SrCommand::Fvector { complex } => {
            let d = complex_operand(session, "complex", complex)?;
            let r = f_report(&d);
            let f: Vec<String> = r.f_vector.iter().map(|x| x.to_string()).collect();
            writeln!(out, "f-vector = ({})", f.join(", ")).unwrap();
            writeln!(out, "f-max = {}", r.f_max).unwrap();
            writeln!(out, "dimension = {}", r.dimension).unwrap();
        }
        SrCommand::Primary { complex } => {
            let d = complex_operand(session, "complex", complex)?;
            for p in sr_primary_decomposition(&d) {
                writeln!(out, "minimal-prime {}", format_variable_prime(ring, p)).unwrap();
            }
        }
        SrCommand::ColonBracket { ideal, power } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let q = FrobeniusPower::for_ring(ring, power.e)?;
            writeln!(out, "colon = {}", format_basis(&boix_colon(&i, q)?)?).unwrap();
        }
        SrCommand::CompatiblePrimes { ideal, power, cap } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let r = sr_compatible_primes(&i, power.e, *cap)?;
            let list = |masks: &[u64]| {
                masks
                    .iter()
                    .map(|&m| format_variable_prime(ring, m))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            writeln!(out, "compatible = R, {}", list(&r.all_variable_primes)).unwrap();
            writeln!(out, "containing-I = {}", list(&r.containing_i)).unwrap();
            writeln!(out, "minimal-primes = {}", list(&r.minimal_primes)).unwrap();
            writeln!(out, "retained = {}", list(&r.retained)).unwrap();
        }
        SrCommand::TestIdeal { complex, algorithm } => {
            let d = complex_operand(session, "complex", complex)?;
            let tau = sr_test_ideal(ring, &d, *algorithm)?;
            writeln!(out, "tau = {}", format_generators(tau.generators())).unwrap();
            writeln!(out, "tightness-bound = {}", tightness_bound(&d)).unwrap();
        }
        SrCommand::TightnessBound { complex } => {
            let d = complex_operand(session, "complex", complex)?;
            writeln!(out, "tightness-bound = {}", tightness_bound(&d)).unwrap();
        }
    }
    Ok(())
}

fn execute_mod(session: &Session, command: &ModCommand, report: &mut Report) -> Result<(), Failure> {
    match command {
        ModCommand::Image { ideal, of } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let j = operand("of", session.resolve_ideal(of))?;
            warn_if_inhomogeneous(&j, &i, report)?;
            let image = image_mod(&j, &i)?;
            writeln!(report.stdout, "image = {}", format_generators(image.display_gens())).unwrap();
        }
        ModCommand::Mingens { ideal, of } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let j = operand("of", session.resolve_ideal(of))?;
            let (count, gens) = minimal_generators(&j, &i)?;
            writeln!(report.stdout, "mu = {count}").unwrap();
            writeln!(report.stdout, "generators = {}", format_generators(&gens)).unwrap();
        }
        ModCommand::Equal { ideal, left, right } => {
            let i = operand("ideal", session.resolve_ideal(ideal))?;
            let a = operand("left", session.resolve_ideal(left))?;
            let b = operand("right", session.resolve_ideal(right))?;
            writeln!(report.stdout, "equal: {}", format_bool(equal_mod(&a, &b, &i)?)).unwrap();
        }
    }
    Ok(())
}

/// Reads the session file and runs the command.
pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(&cli.session)
        .map_err(|e| Failure::Usage(format!("{}: {e}", cli.session.display())))?;
    let session = parse_session(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", cli.session.display())))?;
    let mut report = execute(&session, &cli.command)?;
    let mut warnings = session.notices().to_vec();
    warnings.append(&mut report.warnings);
    report.warnings = warnings;
    Ok(report)
}
