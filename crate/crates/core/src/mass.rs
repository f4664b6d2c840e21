//! Basic belief assignments and the transversal operations built on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};

/// Tolerance on Σ m = 1 for inputs and rule outputs.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Closed world forbids mass on ∅; an open world allows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum World {
    Closed,
    Open,
}

/// A basic belief assignment. Zero masses are never stored, so the entry
/// count is the number of focal elements.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: Arc<Frame>,
    entries: BTreeMap<FocalSet, f64>,
    world: World,
}

impl MassFunction {
    pub fn new<I>(frame: &Arc<Frame>, assignments: I, world: World) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut entries = BTreeMap::new();
        for (set, mass) in assignments {
            if !frame.contains(set) {
                return Err(Error::SetOutsideFrame(set.bits()));
            }
            if mass < 0.0 || !mass.is_finite() {
                return Err(Error::NegativeMass {
                    set: frame.format(set),
                    mass,
                });
            }
            if entries.contains_key(&set) {
                return Err(Error::DuplicateFocalSet(frame.format(set)));
            }
            if mass > 0.0 {
                entries.insert(set, mass);
            }
        }
        let sum: f64 = entries.values().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(sum));
        }
        if world == World::Closed && entries.contains_key(&FocalSet::EMPTY) {
            return Err(Error::EmptySetMassInClosedWorld);
        }
        Ok(Self {
            frame: Arc::clone(frame),
            entries,
            world,
        })
    }

    /// Builds a mass function from `(expression, mass)` pairs.
    pub fn from_exprs(frame: &Arc<Frame>, pairs: &[(&str, f64)], world: World) -> Result<Self> {
        let mut assignments = Vec::with_capacity(pairs.len());
        for (expr, mass) in pairs {
            assignments.push((frame.parse(expr)?, *mass));
        }
        Self::new(frame, assignments, world)
    }

    /// m(Θ) = 1.
    pub fn vacuous(frame: &Arc<Frame>) -> Self {
        Self {
            frame: Arc::clone(frame),
            entries: BTreeMap::from([(frame.full(), 1.0)]),
            world: World::Closed,
        }
    }

    /// Wraps a rule's accumulated output. Drift below the input tolerance is
    /// renormalized away; anything larger is a bug and reported as such.
    pub(crate) fn from_accumulator(
        frame: &Arc<Frame>,
        acc: BTreeMap<FocalSet, f64>,
        world: World,
    ) -> Result<Self> {
        let mut entries: BTreeMap<FocalSet, f64> =
            acc.into_iter().filter(|(_, m)| *m != 0.0).collect();
        if entries.values().any(|m| *m < 0.0 || !m.is_finite()) {
            let sum = entries.values().sum();
            return Err(Error::NormalizationDrift(sum));
        }
        if world == World::Closed && entries.contains_key(&FocalSet::EMPTY) {
            return Err(Error::EmptySetMassInClosedWorld);
        }
        let sum: f64 = entries.values().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NormalizationDrift(sum));
        }
        if sum != 1.0 {
            for m in entries.values_mut() {
                *m /= sum;
            }
        }
        Ok(Self {
            frame: Arc::clone(frame),
            entries,
            world,
        })
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn is_open_world(&self) -> bool {
        self.world == World::Open
    }

    /// m(X), zero for non-focal sets.
    pub fn mass(&self, set: FocalSet) -> f64 {
        self.entries.get(&set).copied().unwrap_or(0.0)
    }

    /// Mass by expression; panics on a malformed expression.
    pub fn mass_of(&self, expr: &str) -> f64 {
        let set = self
            .frame
            .parse(expr)
            .unwrap_or_else(|e| panic!("bad focal set expression `{expr}`: {e}"));
        self.mass(set)
    }

    pub fn empty_mass(&self) -> f64 {
        self.mass(FocalSet::EMPTY)
    }

    /// Focal elements with their masses in increasing bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.entries.iter().map(|(s, m)| (*s, *m))
    }

    pub fn focal_elements(&self) -> impl Iterator<Item = FocalSet> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    pub fn same_frame(&self, other: &MassFunction) -> bool {
        Arc::ptr_eq(&self.frame, &other.frame) || self.frame == other.frame
    }

    /// Largest per-entry absolute difference over the union of focal elements.
    pub fn max_abs_diff(&self, other: &MassFunction) -> f64 {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .map(|s| (self.mass(*s) - other.mass(*s)).abs())
            .fold(0.0, f64::max)
    }

    /// Weakens the assignment by a reliability factor `alpha`, moving the
    /// remaining `1 - alpha` of every focal mass onto Θ.
    pub fn discount(&self, alpha: f64) -> Result<MassFunction> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if self.is_open_world() {
            return Err(Error::OpenWorldInput);
        }
        let full = self.frame.full();
        let mut entries: BTreeMap<FocalSet, f64> = BTreeMap::new();
        for (set, mass) in self.iter() {
            if set != full {
                entries.insert(set, alpha * mass);
            }
        }
        entries.insert(full, 1.0 - alpha * (1.0 - self.mass(full)));
        entries.retain(|_, m| *m != 0.0);
        Ok(MassFunction {
            frame: Arc::clone(&self.frame),
            entries,
            world: World::Closed,
        })
    }

    /// Pignistic probability of every singleton.
    pub fn pignistic(&self) -> Result<PignisticDistribution> {
        let empty = self.empty_mass();
        if empty >= 1.0 {
            return Err(Error::TotalConflict);
        }
        let scale = 1.0 - empty;
        let mut probabilities = vec![0.0; self.frame.len()];
        for (set, mass) in self.iter().filter(|(s, _)| !s.is_empty()) {
            let share = mass / (f64::from(set.cardinality()) * scale);
            for i in set.indices() {
                probabilities[i] += share;
            }
        }
        Ok(PignisticDistribution {
            frame: Arc::clone(&self.frame),
            probabilities,
        })
    }
}

/// Probability per singleton obtained by spreading each focal mass uniformly
/// over its members.
#[derive(Debug, Clone, PartialEq)]
pub struct PignisticDistribution {
    frame: Arc<Frame>,
    probabilities: Vec<f64>,
}

impl PignisticDistribution {
    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.frame.index_of(label).map(|i| self.probabilities[i])
    }

    /// betP(X) for any X, by additivity over singletons.
    pub fn of_set(&self, set: FocalSet) -> f64 {
        set.indices().map(|i| self.probabilities[i]).sum()
    }

    /// Singleton with the largest probability; ties go to the first label.
    pub fn decision(&self) -> &str {
        let mut best = 0;
        for (i, p) in self.probabilities.iter().enumerate() {
            if *p > self.probabilities[best] {
                best = i;
            }
        }
        &self.frame.labels()[best]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.frame
            .labels()
            .iter()
            .map(String::as_str)
            .zip(self.probabilities.iter().copied())
    }
}
