//! Maximal groups of non-conflicting responses and the extended mixed rule.
//!
//! For a tuple of responses `(Y_1, …, Y_M)`, `ε_k` is the family of k-subsets
//! of experts whose responses share at least one singleton, and `k̄` the
//! largest `k` for which `ε_k` is non-empty. EMix keeps the spirit of Mix but
//! works on the groups of `ε_k̄` instead of the whole tuple, so a partial
//! agreement among some of the experts survives a global conflict.

use crate::error::{Error, Result};
use crate::frame::FocalSet;
use crate::mass::{MassFunction, World};
use crate::tuple::{combine, require_closed, require_experts, Shares, Tuple};

/// Largest expert count for which subsets of experts are scanned.
pub const MAX_GROUP_EXPERTS: usize = 20;

const COMPLEXITY_LIMIT: u128 = 1 << 62;

/// A set of experts whose responses have a non-empty common part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleGroup {
    /// Expert indices, ascending.
    pub members: Vec<usize>,
    pub intersection: FocalSet,
    /// Smallest cardinality among the members' responses.
    pub min_cardinality: u32,
}

impl CompatibleGroup {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn check_responses(sets: &[FocalSet]) -> Result<()> {
    if sets.is_empty() {
        return Err(Error::ExpertCount {
            rule: "compatible groups",
            expected: "at least 1",
            got: 0,
        });
    }
    if sets.len() > MAX_GROUP_EXPERTS {
        return Err(Error::ExpertCount {
            rule: "compatible groups",
            expected: "at most 20",
            got: sets.len(),
        });
    }
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptyFocalSetInput);
    }
    Ok(())
}

fn group_of(members_mask: u32, sets: &[FocalSet]) -> Option<CompatibleGroup> {
    let mut intersection = FocalSet(u64::MAX);
    let mut members = Vec::with_capacity(members_mask.count_ones() as usize);
    let mut min_cardinality = u32::MAX;
    for (i, set) in sets.iter().enumerate() {
        if members_mask & (1 << i) != 0 {
            intersection = intersection & *set;
            if intersection.is_empty() {
                return None;
            }
            members.push(i);
            min_cardinality = min_cardinality.min(set.cardinality());
        }
    }
    Some(CompatibleGroup {
        members,
        intersection,
        min_cardinality,
    })
}

/// `ε_k`: every k-subset of experts whose responses intersect, in
/// lexicographic order of member indices.
pub fn epsilon_k(sets: &[FocalSet], k: usize) -> Result<Vec<CompatibleGroup>> {
    check_responses(sets)?;
    if k == 0 || k > sets.len() {
        return Err(Error::KOutOfRange { k, m: sets.len() });
    }
    let mut groups: Vec<CompatibleGroup> = (1u32..(1 << sets.len()))
        .filter(|mask| mask.count_ones() as usize == k)
        .filter_map(|mask| group_of(mask, sets))
        .collect();
    groups.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(groups)
}

/// `k̄`, the size of the largest group of experts whose responses intersect.
pub fn k_bar(sets: &[FocalSet]) -> Result<usize> {
    check_responses(sets)?;
    // Intersecting groups are closed under taking subsets, so search downward
    // from the full tuple.
    for k in (1..=sets.len()).rev() {
        let found = (1u32..(1 << sets.len()))
            .filter(|mask| mask.count_ones() as usize == k)
            .any(|mask| group_of(mask, sets).is_some());
        if found {
            return Ok(k);
        }
    }
    unreachable!("single non-empty responses always form a group")
}

/// `δ(Z) = 1 - |∩Z| / min |Y|` over the members of a group.
pub fn delta_group(z: &CompatibleGroup) -> f64 {
    1.0 - f64::from(z.intersection.cardinality()) / f64::from(z.min_cardinality)
}

/// `ε_k̄` for one tuple.
pub fn maximal_groups(sets: &[FocalSet]) -> Result<Vec<CompatibleGroup>> {
    let k = k_bar(sets)?;
    epsilon_k(sets, k)
}

pub(crate) fn emix_split(t: &Tuple<'_>, out: &mut Shares) -> Result<()> {
    let groups = maximal_groups(t.sets)?;
    let per_group = t.product / groups.len() as f64;
    for z in &groups {
        let d = delta_group(z);
        out.push((t.union, d * per_group));
        out.push((z.intersection, (1.0 - d) * per_group));
    }
    Ok(())
}

/// Extended mixed rule.
///
/// For each tuple, every group `Z` of `ε_k̄` receives an equal part
/// `P / |ε_k̄|` of the tuple's product, split as `(1 - δ(Z))` on the group's
/// intersection and `δ(Z)` on the union of all the responses.
///
/// When the whole tuple intersects, `ε_k̄` holds one group and the rule reduces
/// to Mix with the min-based dissimilarity.
pub fn emix(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "emix")?;
    require_closed(ms)?;
    if ms.len() > MAX_GROUP_EXPERTS {
        return Err(Error::ExpertCount {
            rule: "emix",
            expected: "at most 20",
            got: ms.len(),
        });
    }
    combine(ms, World::Closed, emix_split)
}

/// The operation-count bound `n² M² p^M` of EMix on `M` experts with `p` focal
/// elements each over a frame of `n` singletons. Errors past 2^62.
pub fn emix_complexity_probe(n: u64, experts: u64, p: u64) -> Result<u64> {
    let mut total = u128::from(n) * u128::from(n) * u128::from(experts) * u128::from(experts);
    for _ in 0..experts {
        total = total.checked_mul(u128::from(p)).ok_or(Error::Overflow)?;
        if total > COMPLEXITY_LIMIT {
            return Err(Error::Overflow);
        }
    }
    if total > COMPLEXITY_LIMIT {
        return Err(Error::Overflow);
    }
    Ok(total as u64)
}

/// The extended MDPCR (proportional redistribution over connected responses
/// followed by EMix) has no closed form yet; always returns
/// [`Error::NotSpecified`].
pub fn extended_mdpcr(_ms: &[MassFunction]) -> Result<MassFunction> {
    Err(Error::NotSpecified("extended MDPCR"))
}
