//! A single selector over every combination rule, with its parameters.

use std::collections::BTreeMap;

use crate::classic::{self, conjunctive_split, disjunctive_split, dubois_prade_split};
use crate::error::{Error, Result};
use crate::extended::{self, emix_split};
use crate::frame::{FocalSet, Frame};
use crate::mass::MassFunction;
use crate::mixed::{self, dpcr_split, mdpcr_split, mix_split, AlphaPolicy, DissimilarityKind};
use crate::pcr::{self, pcr6_split, pcr6f_split, pcr6g_split, ShapingFunction};
use crate::tuple::{Shares, Tuple};

#[derive(Debug, Clone, PartialEq)]
pub enum RuleConfig {
    Conjunctive,
    Dempster,
    Yager,
    Disjunctive,
    DuboisPrade,
    WeightedConflict(BTreeMap<FocalSet, f64>),
    Florea,
    Pcr,
    Pcr6,
    Pcr6f(ShapingFunction),
    Pcr6g(ShapingFunction),
    Mix(DissimilarityKind),
    Dpcr(AlphaPolicy),
    Mdpcr(DissimilarityKind, AlphaPolicy),
    EMix,
}

impl RuleConfig {
    pub fn name(&self) -> &'static str {
        match self {
            RuleConfig::Conjunctive => "conjunctive",
            RuleConfig::Dempster => "dempster",
            RuleConfig::Yager => "yager",
            RuleConfig::Disjunctive => "disjunctive",
            RuleConfig::DuboisPrade => "dubois-prade",
            RuleConfig::WeightedConflict(_) => "weighted",
            RuleConfig::Florea => "florea",
            RuleConfig::Pcr => "pcr",
            RuleConfig::Pcr6 => "pcr6",
            RuleConfig::Pcr6f(_) => "pcr6f",
            RuleConfig::Pcr6g(_) => "pcr6g",
            RuleConfig::Mix(_) => "mix",
            RuleConfig::Dpcr(_) => "dpcr",
            RuleConfig::Mdpcr(..) => "mdpcr",
            RuleConfig::EMix => "emix",
        }
    }

    /// Rule parameters rendered as strings, keyed by parameter name.
    pub fn params(&self, frame: &Frame) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        match self {
            RuleConfig::WeightedConflict(w) => {
                let rendered: Vec<String> = w
                    .iter()
                    .map(|(s, v)| format!("{}={}", frame.format(*s), v))
                    .collect();
                p.insert("weights".into(), rendered.join(";"));
            }
            RuleConfig::Pcr6f(f) | RuleConfig::Pcr6g(f) => {
                p.insert("shape".into(), shape_label(f));
            }
            RuleConfig::Mix(d) => {
                p.insert("delta".into(), delta_label(*d));
            }
            RuleConfig::Dpcr(a) => {
                p.insert("alpha".into(), alpha_label(*a));
            }
            RuleConfig::Mdpcr(d, a) => {
                p.insert("delta".into(), delta_label(*d));
                p.insert("alpha".into(), alpha_label(*a));
            }
            _ => {}
        }
        p
    }

    /// Whether the rule's output lives in an open world.
    pub fn is_open_world(&self) -> bool {
        matches!(self, RuleConfig::Conjunctive)
    }

    pub fn combine(&self, ms: &[MassFunction]) -> Result<MassFunction> {
        match self {
            RuleConfig::Conjunctive => classic::conjunctive(ms),
            RuleConfig::Dempster => classic::dempster(ms),
            RuleConfig::Yager => classic::yager(ms),
            RuleConfig::Disjunctive => classic::disjunctive(ms),
            RuleConfig::DuboisPrade => classic::dubois_prade(ms),
            RuleConfig::WeightedConflict(w) => classic::weighted_conflict_repartition(ms, w),
            RuleConfig::Florea => classic::florea(ms),
            RuleConfig::Pcr => match ms {
                [m1, m2] => pcr::pcr_two(m1, m2),
                _ => Err(Error::ExpertCount {
                    rule: "pcr",
                    expected: "exactly 2",
                    got: ms.len(),
                }),
            },
            RuleConfig::Pcr6 => pcr::pcr6(ms),
            RuleConfig::Pcr6f(f) => pcr::pcr6f(ms, f),
            RuleConfig::Pcr6g(g) => pcr::pcr6g(ms, g),
            RuleConfig::Mix(d) => mixed::mix(ms, *d),
            RuleConfig::Dpcr(a) => mixed::dpcr(ms, *a),
            RuleConfig::Mdpcr(d, a) => mixed::mdpcr(ms, *d, *a),
            RuleConfig::EMix => extended::emix(ms),
        }
    }

    /// The shares a tuple-local rule assigns to one tuple, or `None` for rules
    /// that need the global conflict (Dempster, Yager, weighted repartition,
    /// Florea) or are defined pairwise (two-expert PCR).
    ///
    /// For every rule that answers, the shares of a tuple sum to its product.
    pub fn tuple_shares(&self, t: &Tuple<'_>) -> Option<Result<Shares>> {
        let mut out = Shares::new();
        let r = match self {
            RuleConfig::Conjunctive => conjunctive_split(t, &mut out),
            RuleConfig::Disjunctive => disjunctive_split(t, &mut out),
            RuleConfig::DuboisPrade => dubois_prade_split(t, &mut out),
            RuleConfig::Pcr6 => pcr6_split(t, &mut out),
            RuleConfig::Pcr6f(f) => pcr6f_split(t, f, &mut out),
            RuleConfig::Pcr6g(g) => pcr6g_split(t, g, &mut out),
            RuleConfig::Mix(d) => mix_split(t, *d, &mut out),
            RuleConfig::Dpcr(a) => dpcr_split(t, *a, &mut out),
            RuleConfig::Mdpcr(d, a) => mdpcr_split(t, *d, *a, &mut out),
            RuleConfig::EMix => emix_split(t, &mut out),
            RuleConfig::Dempster
            | RuleConfig::Yager
            | RuleConfig::WeightedConflict(_)
            | RuleConfig::Florea
            | RuleConfig::Pcr => return None,
        };
        Some(r.map(|()| out))
    }
}

fn shape_label(f: &ShapingFunction) -> String {
    match f {
        ShapingFunction::Identity => "identity".into(),
        ShapingFunction::Power(e) => format!("power:{e}"),
        ShapingFunction::Table(points) => {
            let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x}:{y}")).collect();
            format!("table:{}", pts.join(","))
        }
    }
}

fn delta_label(d: DissimilarityKind) -> String {
    match d {
        DissimilarityKind::MinBased => "min".into(),
        DissimilarityKind::JaccardBased => "jaccard".into(),
        DissimilarityKind::Constant(v) => format!("const:{v}"),
    }
}

fn alpha_label(a: AlphaPolicy) -> String {
    match a {
        AlphaPolicy::Constant(v) => format!("const:{v}"),
        AlphaPolicy::GlobalPairwise => "pairwise".into(),
        AlphaPolicy::PerExpertNormalized => "per-expert".into(),
    }
}
