//! The `eqhom` command line: reads modules, complexes, moment graphs and
//! fixture bundles from JSON and writes JSON reports.

pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use eqhom::atiyah_bredon::{load_bundle, load_ses, verify_bundle, verify_duflot, AbError};
use eqhom::complexes::{ComplexError, GradedComplex, DEFAULT_SEED};
use eqhom::gkm::{contains_constants, gkm_cohomology, gkm_to_filtration, GkmError, MomentGraph};
use eqhom::invariants::{
    dimension, ext_table, is_cohen_macaulay, required_exponent, syzygy_order, verify_local_duality, HilbertSeries,
    InvariantError, local_cohomology_window,
};
use eqhom::io::{ComplexJson, IoError, ModuleJson, MomentGraphJson};
use eqhom::module::FpModule;

use report::*;

/// Environment variable holding extra directories, separated by `:`, in
/// which input files are looked up.
pub const FIXTURE_PATH_VAR: &str = "EQHOM_FIXTURE_PATH";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eqhom", version, about = "Graded modules, Ext and Atiyah-Bredon checks over Q[t1..tr]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree window [-N, N] for degreewise computations.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(i64).range(0..=200))]
    pub max_degree: i64,
    /// Power of the variables used to truncate the Čech complex.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub exponent: u32,
    /// Seed for the randomized isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub json_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Minimal free resolution of a module.
    Resolve { input: PathBuf },
    /// Ext^p(M, R) for 0 <= p <= r.
    Ext { input: PathBuf },
    /// Dimension, depth, Cohen-Macaulay test, syzygy order, Ext Hilbert series.
    Invariants { input: PathBuf },
    /// Cohomology of a complex, and of its augmentation when given.
    ComplexCohomology { input: PathBuf },
    /// Every Atiyah-Bredon check on one or more fixture bundles.
    AbVerify {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Equivariant cohomology and low strata from a moment graph.
    Gkm { input: PathBuf },
    /// Local cohomology against Ext by graded local duality.
    LocalDuality { input: PathBuf },
    /// Checks a short exact sequence.
    SesVerify { input: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Resolve { .. } => "resolve",
            Command::Ext { .. } => "ext",
            Command::Invariants { .. } => "invariants",
            Command::ComplexCohomology { .. } => "complex-cohomology",
            Command::AbVerify { .. } => "ab-verify",
            Command::Gkm { .. } => "gkm",
            Command::LocalDuality { .. } => "local-duality",
            Command::SesVerify { .. } => "ses-verify",
        }
    }

    fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Command::AbVerify { inputs } => inputs.clone(),
            Command::Resolve { input }
            | Command::Ext { input }
            | Command::Invariants { input }
            | Command::ComplexCohomology { input }
            | Command::Gkm { input }
            | Command::LocalDuality { input }
            | Command::SesVerify { input } => vec![input.clone()],
        }
    }
}

/// Why a command stopped short of a report.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Verification(_) => EXIT_FAIL,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn report(&self) -> ErrorReport {
        let (kind, message) = match self {
            Failure::Parse(m) => ("parse", m),
            Failure::Verification(m) => ("verification", m),
            Failure::Internal(m) => ("internal", m),
        };
        ErrorReport {
            kind: kind.into(),
            message: message.clone(),
        }
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn parse_failure(e: impl std::fmt::Display) -> Failure {
    Failure::Parse(e.to_string())
}

fn from_invariant(e: InvariantError) -> Failure {
    match e {
        InvariantError::ExponentTooSmall { .. } | InvariantError::NotStabilized { .. } => {
            Failure::Verification(e.to_string())
        }
        other => internal(other),
    }
}

fn from_ab(e: AbError) -> Failure {
    match e {
        AbError::Module(m) => internal(m),
        AbError::Invariant(i) => from_invariant(i),
        other => parse_failure(other),
    }
}

/// The path itself if it exists, else the first match in the fixture
/// search path.
pub fn resolve_input(path: &Path) -> Option<PathBuf> {
    if path.exists() {
        return Some(path.to_path_buf());
    }
    if path.is_absolute() {
        return None;
    }
    let dirs = std::env::var_os(FIXTURE_PATH_VAR)?;
    std::env::split_paths(&dirs).map(|d| d.join(path)).find(|p| p.exists())
}

fn read(path: &Path) -> Result<String, Failure> {
    let found = resolve_input(path).ok_or_else(|| Failure::Parse(format!("{}: file not found", path.display())))?;
    std::fs::read_to_string(&found).map_err(|e| Failure::Parse(format!("{}: {e}", found.display())))
}

fn read_module(path: &Path) -> Result<FpModule, Failure> {
    let j: ModuleJson = serde_json::from_str(&read(path)?).map_err(|e| parse_failure(IoError::from(e)))?;
    j.to_module().map_err(parse_failure)
}

/// Runs a command. Returns the exit status and the report document.
pub fn run(cli: &Cli) -> (i32, Value) {
    let options = Options {
        max_degree: cli.max_degree,
        exponent: cli.exponent,
        seed: cli.seed,
    };
    let inputs: Vec<String> = cli.command.inputs().iter().map(|p| p.display().to_string()).collect();
    let outcome = execute(&cli.command, &options);
    let envelope = |pass, result: Option<Value>, error| Report {
        schema: REPORT_SCHEMA.into(),
        command: cli.command.name().into(),
        inputs: inputs.clone(),
        options: options.clone(),
        pass,
        result,
        error,
    };
    let (code, report) = match outcome {
        Ok((pass, result)) => (if pass { EXIT_PASS } else { EXIT_FAIL }, envelope(pass, Some(result), None)),
        Err((failure, partial)) => (failure.exit_code(), envelope(false, partial, Some(failure.report()))),
    };
    (code, serde_json::to_value(report).expect("reports serialize"))
}

type Outcome = Result<(bool, Value), (Failure, Option<Value>)>;

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn execute(cmd: &Command, o: &Options) -> Outcome {
    let plain = |f: Failure| (f, None);
    match cmd {
        Command::Resolve { input } => {
            let m = read_module(input).map_err(plain)?;
            let res = m.minimal_resolution();
            let rep = ResolveReport {
                ring_rank: m.ring_rank(),
                length: res.length(),
                generator_degrees: res.modules().iter().map(|f| f.degrees().to_vec()).collect(),
                betti_numbers: res.betti(),
                minimal: res.is_minimal(),
                hilbert_numerator: HilbertSeries::of(&m).to_string(),
            };
            Ok((rep.minimal, value(&rep)))
        }
        Command::Ext { input } => {
            let m = read_module(input).map_err(plain)?;
            let ext = ext_table(&m);
            let entries = (0..=m.ring_rank())
                .map(|p| {
                    let e = ext.get(p);
                    let min = &e.minimized().module;
                    ExtEntry {
                        p,
                        zero: e.is_zero(),
                        hilbert: HilbertSeries::of(e).to_string(),
                        hilbert_shifted: HilbertSeries::of(&ext.shifted(p)).to_string(),
                        generator_degrees: min.generators().degrees().to_vec(),
                    }
                })
                .collect();
            Ok((
                true,
                value(&ExtReport {
                    ring_rank: m.ring_rank(),
                    entries,
                }),
            ))
        }
        Command::Invariants { input } => {
            let m = read_module(input).map_err(plain)?;
            let cm = is_cohen_macaulay(&m, None).map_err(|e| plain(from_invariant(e)))?;
            let ext = ext_table(&m);
            let rep = InvariantsReport {
                dim: dimension(&m),
                depth: cm.depth,
                cm: cm.cohen_macaulay,
                syzygy_order: syzygy_order(&m).to_string(),
                ext_hilbert: (0..=m.ring_rank())
                    .map(|p| (p.to_string(), HilbertSeries::of(ext.get(p)).to_string()))
                    .collect(),
            };
            Ok((true, value(&rep)))
        }
        Command::ComplexCohomology { input } => {
            let j: ComplexJson = serde_json::from_str(&read(input).map_err(plain)?)
                .map_err(|e| plain(parse_failure(IoError::from(e))))?;
            let (complex, augmented) = j.to_complex().map_err(|e| match e {
                IoError::Complex(ComplexError::Module(m)) => plain(internal(m)),
                other => plain(parse_failure(other)),
            })?;
            let rep = ComplexReport {
                complex: cohomology_report(&complex).map_err(plain)?,
                augmented: augmented.as_ref().map(cohomology_report).transpose().map_err(plain)?,
            };
            Ok((true, value(&rep)))
        }
        Command::AbVerify { inputs } => {
            let mut reports = Vec::new();
            for input in inputs {
                let bundle = load_bundle(&read(input).map_err(plain)?).map_err(|e| plain(from_ab(e)))?;
                reports.push(verify_bundle(&bundle, o.seed).map_err(|e| plain(from_ab(e)))?);
            }
            let pass = reports.iter().all(|r| r.pass);
            Ok((pass, value(&reports)))
        }
        Command::Gkm { input } => {
            let j: MomentGraphJson = serde_json::from_str(&read(input).map_err(plain)?)
                .map_err(|e| plain(parse_failure(IoError::from(e))))?;
            let g = MomentGraph::from_json(&j).map_err(|e| plain(parse_failure(e)))?;
            gkm_report(&g).map_err(plain)
        }
        Command::LocalDuality { input } => {
            let m = read_module(input).map_err(plain)?;
            let window = (-o.max_degree, o.max_degree);
            let required = required_exponent(&m, window.0);
            match verify_local_duality(&m, window, o.exponent) {
                Ok(d) => {
                    let table = local_cohomology_window(&m, window, o.exponent).map_err(|e| plain(from_invariant(e)))?;
                    let rep = LocalDualityReport {
                        window,
                        exponent: o.exponent,
                        required_exponent: required,
                        checked: d.checked,
                        mismatches: d
                            .mismatches
                            .iter()
                            .map(|x| MismatchReport {
                                j: x.j,
                                degree: x.degree,
                                local_cohomology: x.local_cohomology,
                                ext: x.ext,
                            })
                            .collect(),
                        local_cohomology: table
                            .nonzero()
                            .into_iter()
                            .map(|(j, degree, dim)| LocalEntry { j, degree, dim })
                            .collect(),
                    };
                    Ok((d.passes(), value(&rep)))
                }
                Err(e) => {
                    let partial = LocalDualityReport {
                        window,
                        exponent: o.exponent,
                        required_exponent: required,
                        checked: 0,
                        mismatches: Vec::new(),
                        local_cohomology: Vec::new(),
                    };
                    Err((from_invariant(e), Some(value(&partial))))
                }
            }
        }
        Command::SesVerify { input } => {
            let ses = load_ses(&read(input).map_err(plain)?).map_err(|e| plain(from_ab(e)))?;
            let v = verify_duflot(&ses).map_err(|e| plain(from_ab(e)))?;
            let rep = SesVerifyReport {
                tag: v.tag.clone(),
                injective: v.ses.injective,
                composite_zero: v.ses.composite_zero,
                exact_middle: v.ses.exact_middle,
                surjective: v.ses.surjective,
                hilbert_additive: v.ses.hilbert_additive,
            };
            Ok((v.passes(), value(&rep)))
        }
    }
}

fn cohomology_report(c: &GradedComplex) -> Result<CohomologyReport, Failure> {
    let mut cohomology = Vec::new();
    for i in c.start()..=c.end() {
        let h = c.cohomology_at(i).map_err(internal)?;
        cohomology.push(PositionReport {
            position: i,
            zero: h.is_zero(),
            hilbert: HilbertSeries::of(&h).to_string(),
        });
    }
    let exactness = c.exactness().map_err(internal)?;
    Ok(CohomologyReport {
        start: c.start(),
        end: c.end(),
        cohomology,
        exact_positions: exactness.exact_positions(),
        exact_through: exactness.exact_through(),
    })
}

fn gkm_report(g: &MomentGraph) -> Result<(bool, Value), Failure> {
    let gkm_err = |e: GkmError| match e {
        GkmError::Module(m) => internal(m),
        other => internal(other),
    };
    let h = gkm_cohomology(g).map_err(gkm_err)?;
    let data = gkm_to_filtration(g).map_err(gkm_err)?;
    let order = syzygy_order(&h);
    let constants = contains_constants(g).map_err(gkm_err)?;
    let exact = eqhom::atiyah_bredon::build_ab_complex(&data, true)
        .and_then(|c| c.exactness().map_err(AbError::from))
        .map_err(from_ab)?;
    let rep = GkmReport {
        rank: g.rank(),
        vertices: g.vertices().len(),
        edges: g.edges().len(),
        cohomology_hilbert: HilbertSeries::of(&h).to_string(),
        generator_degrees: h.minimized().module.generators().degrees().to_vec(),
        syzygy_order: order.to_string(),
        contains_constants: constants,
        torsion_free: order.at_least(1),
        truncated: data.is_truncated(),
        strata_hilbert: data.strata().iter().map(|m| HilbertSeries::of(m).to_string()).collect(),
        augmented_exact_positions: exact.exact_positions(),
    };
    Ok((constants && rep.torsion_free, value(&rep)))
}

/// Pretty JSON with a trailing newline.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

