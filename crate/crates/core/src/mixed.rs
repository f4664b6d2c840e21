//! Mixed conjunctive/disjunctive rule, discounted PCR and their combination.
//!
//! All three rules look at one tuple `(Y_1, …, Y_M)` at a time:
//!
//! * **Mix** sends `δ·P` to `∪Y_j` and `(1-δ)·P` to `∩Y_j`, where `P` is the
//!   tuple's product and `δ` a dissimilarity of the responses. A tuple with an
//!   empty intersection always has `δ = 1`.
//! * **DPCR** keeps non-conflicting tuples on their intersection and splits a
//!   conflicting tuple between a PCR6 redistribution (weight `α`) and the
//!   union of the tuple (weight `1-α`).
//! * **MDPCR** applies Mix to non-conflicting tuples and DPCR to conflicting
//!   ones.

use std::ops::{Div, Mul};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frame::FocalSet;
use crate::mass::{MassFunction, World};
use crate::pcr::pcr6_conflict_shares;
use crate::tuple::{combine, require_closed, require_experts, Shares, Tuple};

/// How `δ(Y_1, …, Y_M)` is measured on a non-conflicting tuple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DissimilarityKind {
    /// `1 - |∩Y_j| / min |Y_j|`: a tuple of nested responses keeps the most
    /// precise one.
    MinBased,
    /// `1 - |∩Y_j| / |∪Y_j|`.
    JaccardBased,
    /// The same `δ` for every non-conflicting tuple; `0` gives the
    /// Dubois-Prade rule and `1` the disjunctive rule.
    Constant(f64),
}

impl DissimilarityKind {
    pub fn validate(self) -> Result<()> {
        match self {
            DissimilarityKind::Constant(v) if !(0.0..=1.0).contains(&v) => Err(Error::DeltaOutOfRange(v)),
            _ => Ok(()),
        }
    }

    pub fn evaluate(self, sets: &[FocalSet]) -> Result<f64> {
        match self {
            DissimilarityKind::MinBased => delta_min(sets),
            DissimilarityKind::JaccardBased => delta_jaccard(sets),
            DissimilarityKind::Constant(v) => {
                check_sets(sets)?;
                let (inter, _) = meet_join(sets);
                Ok(if inter.is_empty() { 1.0 } else { v })
            }
        }
    }
}

/// How the conflicting part of a tuple is split between proportional
/// redistribution and the union of the tuple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaPolicy {
    /// A fixed discounting factor in `[0, 1]`.
    Constant(f64),
    /// `α = 1 - Σ_i f_i` with `f_i` the pairwise conflict fraction.
    GlobalPairwise,
    /// One weight `α_i` per expert, rescaled by `λ` so the tuple's mass is
    /// conserved.
    PerExpertNormalized,
}

impl AlphaPolicy {
    pub fn validate(self) -> Result<()> {
        match self {
            AlphaPolicy::Constant(a) if !(0.0..=1.0).contains(&a) => Err(Error::AlphaOutOfRange(a)),
            _ => Ok(()),
        }
    }
}

fn check_sets(sets: &[FocalSet]) -> Result<()> {
    if sets.len() < 2 {
        return Err(Error::ExpertCount {
            rule: "dissimilarity",
            expected: "at least 2",
            got: sets.len(),
        });
    }
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptyFocalSetInput);
    }
    Ok(())
}

fn meet_join(sets: &[FocalSet]) -> (FocalSet, FocalSet) {
    let inter = sets.iter().skip(1).fold(sets[0], |acc, s| acc & *s);
    let union = sets.iter().fold(FocalSet::EMPTY, |acc, s| acc | *s);
    (inter, union)
}

/// `1 - |∩Y_j| / min |Y_j|`, equal to 1 on disjoint responses.
pub fn delta_min(sets: &[FocalSet]) -> Result<f64> {
    check_sets(sets)?;
    let (inter, _) = meet_join(sets);
    let smallest = sets.iter().map(|s| s.cardinality()).min().unwrap_or(1);
    Ok(1.0 - f64::from(inter.cardinality()) / f64::from(smallest))
}

/// `1 - |∩Y_j| / |∪Y_j|`, the Jaccard distance of the responses.
pub fn delta_jaccard(sets: &[FocalSet]) -> Result<f64> {
    check_sets(sets)?;
    let (inter, union) = meet_join(sets);
    Ok(1.0 - f64::from(inter.cardinality()) / f64::from(union.cardinality()))
}

fn check_index(i: usize, sets: &[FocalSet]) -> Result<()> {
    if i >= sets.len() {
        return Err(Error::IndexOutOfRange { index: i, len: sets.len() });
    }
    if sets.len() < 2 {
        return Err(Error::ExpertCount {
            rule: "pairwise conflict",
            expected: "at least 2",
            got: sets.len(),
        });
    }
    Ok(())
}

/// Number of other experts whose response is disjoint from expert `i`'s.
pub fn pairwise_conflict_count(i: usize, sets: &[FocalSet]) -> Result<usize> {
    check_index(i, sets)?;
    Ok(sets
        .iter()
        .enumerate()
        .filter(|(j, s)| *j != i && !s.intersects(sets[i]))
        .count())
}

/// `f_i = #{j : Y_j ∩ Y_i = ∅} / (M(M-1))`, in `[0, 1/M]`.
pub fn pairwise_conflict_fraction(i: usize, sets: &[FocalSet]) -> Result<f64> {
    let count = pairwise_conflict_count(i, sets)?;
    Ok(count as f64 / pair_count(sets.len()))
}

fn pair_count(m: usize) -> f64 {
    (m * (m - 1)) as f64
}

/// `α = 1 - Σ_i f_i`: one minus the fraction of ordered expert pairs in
/// conflict.
pub fn alpha_global(sets: &[FocalSet]) -> Result<f64> {
    check_index(0, sets)?;
    let mut conflicts = 0;
    for i in 0..sets.len() {
        conflicts += pairwise_conflict_count(i, sets)?;
    }
    Ok(1.0 - conflicts as f64 / pair_count(sets.len()))
}

/// `α_i = 1/M - f_i = #{j ≠ i : Y_j ∩ Y_i ≠ ∅} / (M(M-1))`.
pub fn alpha_per_expert(i: usize, sets: &[FocalSet]) -> Result<f64> {
    let conflicts = pairwise_conflict_count(i, sets)?;
    let agreeing = sets.len() - 1 - conflicts;
    Ok(agreeing as f64 / pair_count(sets.len()))
}

/// `γ_i = m_i / Σ_j m_j` for the masses of one tuple.
pub fn gammas(masses: &[f64]) -> Vec<f64> {
    let total: f64 = masses.iter().sum();
    masses.iter().map(|m| m / total).collect()
}

/// `λ = Σα_i / ⟨α, γ⟩`, the factor that makes the per-expert redistribution
/// of a tuple conserve its mass. Generic so it can be evaluated exactly on
/// rationals.
pub fn lambda_norm<T>(alphas: &[T], gammas: &[T]) -> Result<T>
where
    T: Copy + PartialEq + Zero + Mul<Output = T> + Div<Output = T>,
{
    if alphas.len() != gammas.len() {
        return Err(Error::IndexOutOfRange {
            index: gammas.len(),
            len: alphas.len(),
        });
    }
    let sum = alphas.iter().fold(T::zero(), |acc, a| acc + *a);
    if sum == T::zero() {
        return Err(Error::AllAlphasZero);
    }
    let dot = alphas
        .iter()
        .zip(gammas)
        .fold(T::zero(), |acc, (a, g)| acc + *a * *g);
    Ok(sum / dot)
}

/// Splits a conflicting tuple according to the discounting policy.
pub(crate) fn dpcr_conflict_split(t: &Tuple<'_>, policy: AlphaPolicy, out: &mut Shares) -> Result<()> {
    debug_assert!(t.is_conflicting());
    match policy {
        AlphaPolicy::Constant(alpha) => {
            pcr6_conflict_shares(t, alpha, out);
            out.push((t.union, (1.0 - alpha) * t.product));
        }
        AlphaPolicy::GlobalPairwise => {
            let alpha = alpha_global(t.sets)?;
            pcr6_conflict_shares(t, alpha, out);
            out.push((t.union, (1.0 - alpha) * t.product));
        }
        AlphaPolicy::PerExpertNormalized => {
            let alphas = (0..t.len())
                .map(|i| alpha_per_expert(i, t.sets))
                .collect::<Result<Vec<_>>>()?;
            let alpha_sum: f64 = alphas.iter().sum();
            match lambda_norm(&alphas, &gammas(t.masses)) {
                Ok(lambda) => {
                    let total = t.mass_sum();
                    for ((set, mass), alpha) in t.sets.iter().zip(t.masses).zip(&alphas) {
                        out.push((*set, alpha * lambda * t.product * mass / total));
                    }
                    out.push((t.union, (1.0 - alpha_sum) * t.product));
                }
                // Pairwise-disjoint responses: λ is undefined and the whole
                // tuple goes to the union.
                Err(Error::AllAlphasZero) => out.push((t.union, t.product)),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

pub(crate) fn mix_split(t: &Tuple<'_>, delta: DissimilarityKind, out: &mut Shares) -> Result<()> {
    if t.is_conflicting() {
        out.push((t.union, t.product));
        return Ok(());
    }
    let d = delta.evaluate(t.sets)?;
    out.push((t.union, d * t.product));
    out.push((t.intersection, (1.0 - d) * t.product));
    Ok(())
}

pub(crate) fn dpcr_split(t: &Tuple<'_>, policy: AlphaPolicy, out: &mut Shares) -> Result<()> {
    if t.is_conflicting() {
        dpcr_conflict_split(t, policy, out)
    } else {
        out.push((t.intersection, t.product));
        Ok(())
    }
}

pub(crate) fn mdpcr_split(
    t: &Tuple<'_>,
    delta: DissimilarityKind,
    policy: AlphaPolicy,
    out: &mut Shares,
) -> Result<()> {
    if t.is_conflicting() {
        dpcr_conflict_split(t, policy, out)
    } else {
        mix_split(t, delta, out)
    }
}

/// Mixed conjunctive/disjunctive rule weighted by a dissimilarity of the
/// responses.
pub fn mix(ms: &[MassFunction], delta: DissimilarityKind) -> Result<MassFunction> {
    require_experts(ms, "mix")?;
    require_closed(ms)?;
    delta.validate()?;
    combine(ms, World::Closed, |t, out| mix_split(t, delta, out))
}

/// Discounted PCR. With `Constant(1)` it is PCR6, with `Constant(0)` the
/// Dubois-Prade rule.
pub fn dpcr(ms: &[MassFunction], policy: AlphaPolicy) -> Result<MassFunction> {
    require_experts(ms, "dpcr")?;
    require_closed(ms)?;
    policy.validate()?;
    combine(ms, World::Closed, |t, out| dpcr_split(t, policy, out))
}

/// Mixed discounting conflict repartition: one pass over the tuples, Mix on
/// non-empty intersections and DPCR on empty ones.
pub fn mdpcr(ms: &[MassFunction], delta: DissimilarityKind, policy: AlphaPolicy) -> Result<MassFunction> {
    require_experts(ms, "mdpcr")?;
    require_closed(ms)?;
    delta.validate()?;
    policy.validate()?;
    combine(ms, World::Closed, |t, out| mdpcr_split(t, delta, policy, out))
}
