//! Classic combination rules, generalized to M experts by tuple enumeration.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::FocalSet;
use crate::mass::{MassFunction, World, NORMALIZATION_TOLERANCE};
use crate::tuple::{accumulate, check_same_frame, combine, require_closed, require_experts, Shares, Tuple};

/// Total conflict is declared when `1 - k` falls below this.
pub const TOTAL_CONFLICT_TOLERANCE: f64 = 1e-12;

pub(crate) fn conjunctive_split(t: &Tuple<'_>, out: &mut Shares) -> Result<()> {
    out.push((t.intersection, t.product));
    Ok(())
}

pub(crate) fn disjunctive_split(t: &Tuple<'_>, out: &mut Shares) -> Result<()> {
    out.push((t.union, t.product));
    Ok(())
}

pub(crate) fn dubois_prade_split(t: &Tuple<'_>, out: &mut Shares) -> Result<()> {
    let target = if t.is_conflicting() { t.union } else { t.intersection };
    out.push((target, t.product));
    Ok(())
}

/// Unnormalized conjunctive rule. The output lives in an open world and keeps
/// the global conflict on ∅.
pub fn conjunctive(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "conjunctive")?;
    combine(ms, World::Open, conjunctive_split)
}

/// Dempster's rule: conjunctive combination with ∅ removed and the rest
/// scaled by `1 / (1 - k)`.
pub fn dempster(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "dempster")?;
    let frame = Arc::clone(check_same_frame(ms)?);
    let mut acc = accumulate(ms, conjunctive_split)?;
    let k = acc.remove(&FocalSet::EMPTY).unwrap_or(0.0);
    if 1.0 - k <= TOTAL_CONFLICT_TOLERANCE {
        return Err(Error::TotalConflict);
    }
    for m in acc.values_mut() {
        *m /= 1.0 - k;
    }
    MassFunction::from_accumulator(&frame, acc, World::Closed)
}

/// Yager's rule: the global conflict goes to Θ.
pub fn yager(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "yager")?;
    require_closed(ms)?;
    let full = check_same_frame(ms)?.full();
    combine(ms, World::Closed, |t, out| {
        let target = if t.is_conflicting() { full } else { t.intersection };
        out.push((target, t.product));
        Ok(())
    })
}

/// Disjunctive rule: each tuple's product goes to the union of its elements.
pub fn disjunctive(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "disjunctive")?;
    require_closed(ms)?;
    combine(ms, World::Closed, disjunctive_split)
}

/// Dubois and Prade's rule. Tuples with a non-empty intersection keep their
/// product on it; the others move it to the union of the tuple, i.e. partial
/// conflict goes to partial ignorance.
pub fn dubois_prade(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "dubois-prade")?;
    require_closed(ms)?;
    combine(ms, World::Closed, dubois_prade_split)
}

/// Generic conflict repartition `m(X) = m_conj(X) + w(X) k`.
///
/// `w` must be non-negative, zero on ∅ and sum to one.
pub fn weighted_conflict_repartition(
    ms: &[MassFunction],
    weights: &BTreeMap<FocalSet, f64>,
) -> Result<MassFunction> {
    require_experts(ms, "weighted conflict repartition")?;
    require_closed(ms)?;
    let frame = Arc::clone(check_same_frame(ms)?);
    let sum: f64 = weights.values().sum();
    let valid = weights
        .iter()
        .all(|(s, w)| *w >= 0.0 && w.is_finite() && frame.contains(*s) && (!s.is_empty() || *w == 0.0));
    if !valid || (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::WeightsNotNormalized(sum));
    }
    let mut acc = accumulate(ms, conjunctive_split)?;
    let k = acc.remove(&FocalSet::EMPTY).unwrap_or(0.0);
    for (set, w) in weights {
        if *w > 0.0 && k > 0.0 {
            *acc.entry(*set).or_insert(0.0) += w * k;
        }
    }
    MassFunction::from_accumulator(&frame, acc, World::Closed)
}

/// Florea's weighting of the disjunctive and conjunctive rules by the global
/// conflict `k`, defined for two experts only:
/// `β1(k) = k / (1 - k + k²)`, `β2(k) = (1 - k) / (1 - k + k²)`.
pub fn florea(ms: &[MassFunction]) -> Result<MassFunction> {
    if ms.len() != 2 {
        return Err(Error::ExpertCount {
            rule: "florea",
            expected: "exactly 2",
            got: ms.len(),
        });
    }
    require_closed(ms)?;
    let frame = Arc::clone(check_same_frame(ms)?);
    let mut conj = accumulate(ms, conjunctive_split)?;
    let k = conj.remove(&FocalSet::EMPTY).unwrap_or(0.0);
    let dis = accumulate(ms, disjunctive_split)?;
    let (beta_dis, beta_conj) = florea_weights(k);
    let mut acc: BTreeMap<FocalSet, f64> = BTreeMap::new();
    for (set, m) in dis {
        *acc.entry(set).or_insert(0.0) += beta_dis * m;
    }
    for (set, m) in conj {
        *acc.entry(set).or_insert(0.0) += beta_conj * m;
    }
    MassFunction::from_accumulator(&frame, acc, World::Closed)
}

/// `(β1(k), β2(k))`, the disjunctive and conjunctive weights of Florea's rule.
pub fn florea_weights(k: f64) -> (f64, f64) {
    let d = 1.0 - k + k * k;
    (k / d, (1.0 - k) / d)
}
