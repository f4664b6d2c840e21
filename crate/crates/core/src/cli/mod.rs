//! Command-line front end: read an experts file, apply a rule, print a report.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 mathematical error (total
//! conflict), 3 complexity guard.

pub mod document;
pub mod report;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;

pub use document::{parse_experts, parse_experts_file, parse_weights, DocumentError, Expert, ExpertsDocument};
pub use report::{format_report, FusionReport, ReportFormat};

use crate::error::Error;
use crate::extended::emix_complexity_probe;
use crate::frame::Frame;
use crate::mass::World;
use crate::measures::global_conflict;
use crate::mixed::{AlphaPolicy, DissimilarityKind};
use crate::pcr::ShapingFunction;
use crate::rule::RuleConfig;
use crate::tuple::Tuples;

pub const DEFAULT_MAX_TUPLES: u128 = 100_000_000;

/// Operation-count bound above which an EMix run prints a warning.
const EMIX_WARN_OPERATIONS: u64 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(name = "belief-fuse", version, about = "Fuse expert belief functions with a chosen combination rule")]
pub struct Args {
    /// Experts file (`frame:` line followed by `expert <name>:` blocks).
    pub experts: PathBuf,

    /// conjunctive, dempster, yager, disjunctive, dubois-prade, weighted,
    /// florea, pcr, pcr6, pcr6f, pcr6g, mix, dpcr, mdpcr or emix.
    #[arg(long)]
    pub rule: String,

    /// Dissimilarity for mix/mdpcr: min, jaccard or const:<v>.
    #[arg(long)]
    pub delta: Option<String>,

    /// Discounting policy for dpcr/mdpcr: const:<v>, pairwise or per-expert.
    #[arg(long)]
    pub alpha: Option<String>,

    /// Shaping function for pcr6f/pcr6g: identity, power:<e> or table:<x>:<y>,...
    #[arg(long)]
    pub shape: Option<String>,

    /// Conflict weights file for the weighted rule.
    #[arg(long)]
    pub weights: Option<PathBuf>,

    /// Allow mass on the empty set in the inputs (conjunctive rule only).
    #[arg(long)]
    pub open_world: bool,

    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,

    /// Discount an expert before combination: <expert>=<alpha>. Repeatable;
    /// overrides the file's reliability.
    #[arg(long = "discount", value_name = "EXPERT=ALPHA")]
    pub discounts: Vec<String>,

    /// Refuse runs whose tuple count exceeds this ceiling.
    #[arg(long, default_value_t = DEFAULT_MAX_TUPLES)]
    pub max_tuples: u128,

    /// Run even when the tuple count exceeds --max-tuples.
    #[arg(long)]
    pub force: bool,

    /// Record the combination's wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

/// Everything `run_fusion` needs besides the document.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionConfig {
    pub rule: RuleConfig,
    /// Per-expert discount factors applied before combination.
    pub discounts: Vec<(String, f64)>,
    pub max_tuples: u128,
    pub force: bool,
    pub timing: bool,
}

impl FusionConfig {
    pub fn new(rule: RuleConfig) -> Self {
        Self {
            rule,
            discounts: Vec::new(),
            max_tuples: DEFAULT_MAX_TUPLES,
            force: false,
            timing: false,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Document(DocumentError),
    UnsupportedRuleParamCombination(String),
    ComplexityGuard { tuples: Option<u128>, ceiling: u128 },
    Math(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Document(_) | CliError::UnsupportedRuleParamCombination(_) => 1,
            CliError::Math(_) => 2,
            CliError::ComplexityGuard { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Document(e) => write!(f, "{e}"),
            CliError::UnsupportedRuleParamCombination(msg) => write!(f, "unsupported rule configuration: {msg}"),
            CliError::ComplexityGuard { tuples, ceiling } => match tuples {
                Some(t) => write!(f, "{t} tuples exceed the ceiling of {ceiling}; pass --force to run anyway"),
                None => write!(f, "tuple count overflows; pass --force to run anyway (ceiling {ceiling})"),
            },
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Document(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TotalConflict | Error::NormalizationDrift(_) | Error::Overflow => CliError::Math(e),
            Error::ExpertCount { .. } => CliError::UnsupportedRuleParamCombination(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn parse_number(what: &str, text: &str) -> Result<f64, CliError> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("invalid {what} `{text}`")))
}

pub fn parse_delta(text: &str) -> Result<DissimilarityKind, CliError> {
    match text {
        "min" => Ok(DissimilarityKind::MinBased),
        "jaccard" => Ok(DissimilarityKind::JaccardBased),
        _ => match text.strip_prefix("const:") {
            Some(v) => Ok(DissimilarityKind::Constant(parse_number("delta", v)?)),
            None => Err(CliError::Usage(format!("unknown delta `{text}` (min, jaccard, const:<v>)"))),
        },
    }
}

pub fn parse_alpha(text: &str) -> Result<AlphaPolicy, CliError> {
    match text {
        "pairwise" => Ok(AlphaPolicy::GlobalPairwise),
        "per-expert" => Ok(AlphaPolicy::PerExpertNormalized),
        _ => match text.strip_prefix("const:") {
            Some(v) => Ok(AlphaPolicy::Constant(parse_number("alpha", v)?)),
            None => Err(CliError::Usage(format!(
                "unknown alpha `{text}` (const:<v>, pairwise, per-expert)"
            ))),
        },
    }
}

pub fn parse_shape(text: &str) -> Result<ShapingFunction, CliError> {
    if text == "identity" {
        return Ok(ShapingFunction::Identity);
    }
    if let Some(e) = text.strip_prefix("power:") {
        return Ok(ShapingFunction::Power(parse_number("exponent", e)?));
    }
    if let Some(points) = text.strip_prefix("table:") {
        let mut table = Vec::new();
        for point in points.split(',') {
            let (x, y) = point
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("table point `{point}` must be <x>:<y>")))?;
            table.push((parse_number("table abscissa", x)?, parse_number("table value", y)?));
        }
        return Ok(ShapingFunction::Table(table));
    }
    Err(CliError::Usage(format!(
        "unknown shape `{text}` (identity, power:<e>, table:<x>:<y>,...)"
    )))
}

/// Builds the rule selector, rejecting missing or irrelevant parameters.
pub fn rule_config(args: &Args, frame: &Frame) -> Result<RuleConfig, CliError> {
    let rule = args.rule.as_str();
    let wants_delta = matches!(rule, "mix" | "mdpcr");
    let wants_alpha = matches!(rule, "dpcr" | "mdpcr");
    let wants_shape = matches!(rule, "pcr6f" | "pcr6g");
    let wants_weights = rule == "weighted";
    let unsupported = |msg: String| Err(CliError::UnsupportedRuleParamCombination(msg));

    for (given, wanted, flag) in [
        (args.delta.is_some(), wants_delta, "--delta"),
        (args.alpha.is_some(), wants_alpha, "--alpha"),
        (args.shape.is_some(), wants_shape, "--shape"),
        (args.weights.is_some(), wants_weights, "--weights"),
    ] {
        if given && !wanted {
            return unsupported(format!("{flag} does not apply to rule `{rule}`"));
        }
        if wanted && !given {
            return unsupported(format!("rule `{rule}` requires {flag}"));
        }
    }
    if args.open_world && rule != "conjunctive" {
        return unsupported(format!("--open-world only applies to the conjunctive rule, not `{rule}`"));
    }

    let delta = args.delta.as_deref().map(parse_delta).transpose()?;
    let alpha = args.alpha.as_deref().map(parse_alpha).transpose()?;
    let shape = args.shape.as_deref().map(parse_shape).transpose()?;

    let config = match rule {
        "conjunctive" => RuleConfig::Conjunctive,
        "dempster" => RuleConfig::Dempster,
        "yager" => RuleConfig::Yager,
        "disjunctive" => RuleConfig::Disjunctive,
        "dubois-prade" => RuleConfig::DuboisPrade,
        "florea" => RuleConfig::Florea,
        "pcr" => RuleConfig::Pcr,
        "pcr6" => RuleConfig::Pcr6,
        "emix" => RuleConfig::EMix,
        "pcr6f" => RuleConfig::Pcr6f(shape.expect("checked above")),
        "pcr6g" => RuleConfig::Pcr6g(shape.expect("checked above")),
        "mix" => RuleConfig::Mix(delta.expect("checked above")),
        "dpcr" => RuleConfig::Dpcr(alpha.expect("checked above")),
        "mdpcr" => RuleConfig::Mdpcr(delta.expect("checked above"), alpha.expect("checked above")),
        "weighted" => {
            let path = args.weights.as_ref().expect("checked above");
            let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
                path: path.display().to_string(),
                source,
            })?;
            RuleConfig::WeightedConflict(parse_weights(&text, frame)?)
        }
        other => return Err(CliError::Usage(format!("unknown rule `{other}`"))),
    };
    Ok(config)
}

fn parse_discounts(specs: &[String]) -> Result<Vec<(String, f64)>, CliError> {
    specs
        .iter()
        .map(|entry| {
            let (name, alpha) = entry
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--discount expects <expert>=<alpha>, got `{entry}`")))?;
            Ok((name.to_string(), parse_number("discount", alpha)?))
        })
        .collect()
}

/// Discounts the experts, applies the rule and assembles the report.
pub fn run_fusion(doc: &ExpertsDocument, config: &FusionConfig) -> Result<FusionReport, CliError> {
    let mut factors: Vec<Option<f64>> = doc.experts.iter().map(|e| e.reliability).collect();
    for (name, alpha) in &config.discounts {
        let i = doc
            .experts
            .iter()
            .position(|e| &e.name == name)
            .ok_or_else(|| CliError::Usage(format!("--discount names unknown expert `{name}`")))?;
        factors[i] = Some(*alpha);
    }
    let masses = doc
        .experts
        .iter()
        .zip(&factors)
        .map(|(e, f)| match f {
            Some(alpha) => e.masses.discount(*alpha),
            None => Ok(e.masses.clone()),
        })
        .collect::<Result<Vec<_>, _>>()?;

    match config.rule {
        RuleConfig::Florea | RuleConfig::Pcr if masses.len() != 2 => {
            return Err(CliError::UnsupportedRuleParamCombination(format!(
                "rule `{}` is defined for exactly 2 experts, got {}",
                config.rule.name(),
                masses.len()
            )));
        }
        _ if masses.len() < 2 => {
            return Err(CliError::UnsupportedRuleParamCombination(format!(
                "combination needs at least 2 experts, got {}",
                masses.len()
            )));
        }
        _ => {}
    }

    let tuples = Tuples::new(&masses)?.count();
    let over = tuples.is_none_or(|t| t > config.max_tuples);
    if over && !config.force {
        return Err(CliError::ComplexityGuard {
            tuples,
            ceiling: config.max_tuples,
        });
    }

    let start = Instant::now();
    let fused = config.rule.combine(&masses)?;
    let elapsed = start.elapsed();
    let conflict = global_conflict(&masses)?;
    let pignistic = match fused.pignistic() {
        Ok(p) => Some(p),
        Err(Error::TotalConflict) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(FusionReport {
        rule: config.rule.name().to_string(),
        params: config.rule.params(&doc.frame),
        experts: masses.len(),
        masses: fused,
        conflict,
        pignistic,
        duration: config.timing.then_some(elapsed),
    })
}

fn execute(args: &Args, stderr: &mut dyn Write) -> Result<String, CliError> {
    let world = if args.open_world { World::Open } else { World::Closed };
    let doc = parse_experts_file(&args.experts, world)?;
    let rule = rule_config(args, &doc.frame)?;
    if rule == RuleConfig::EMix {
        let p = doc.experts.iter().map(|e| e.masses.len()).max().unwrap_or(0) as u64;
        match emix_complexity_probe(doc.frame.len() as u64, doc.experts.len() as u64, p) {
            Ok(ops) if ops <= EMIX_WARN_OPERATIONS => {}
            Ok(ops) => {
                let _ = writeln!(stderr, "warning: emix may need up to {ops} operations");
            }
            Err(_) => {
                let _ = writeln!(stderr, "warning: emix operation bound exceeds 2^62");
            }
        }
    }
    let config = FusionConfig {
        rule,
        discounts: parse_discounts(&args.discounts)?,
        max_tuples: args.max_tuples,
        force: args.force,
        timing: args.timing,
    };
    let report = run_fusion(&doc, &config)?;
    Ok(format_report(&report, args.format))
}

/// Runs the CLI on `argv` and returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&args, stderr) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
