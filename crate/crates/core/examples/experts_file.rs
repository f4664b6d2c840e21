//! Parsing an experts file and producing the report the command-line tool
//! prints, in all three formats.

use belief_fusion::cli::{format_report, parse_experts, run_fusion, FusionConfig, ReportFormat};
use belief_fusion::{AlphaPolicy, DissimilarityKind, RuleConfig, World};

const EXPERTS: &str = "\
# three sensors on four hypotheses
frame: A B C D
expert e1:
  A      0.7
  THETA  0.3
expert e2 reliability 0.9:
  B      0.5
  THETA  0.5
expert e3:
  A | C  0.6
  THETA  0.4
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_experts(EXPERTS, World::Closed)?;
    let mut config = FusionConfig::new(RuleConfig::Mdpcr(DissimilarityKind::JaccardBased, AlphaPolicy::GlobalPairwise));
    config.discounts.push(("e3".into(), 0.8));
    let report = run_fusion(&doc, &config)?;

    for format in [ReportFormat::Text, ReportFormat::Csv, ReportFormat::Json] {
        println!("--- {format:?}");
        println!("{}", format_report(&report, format));
    }
    Ok(())
}
