//! Enumeration of the Cartesian product of focal elements.
//!
//! Every rule in this crate walks the M-tuples `(Y_1, …, Y_M)` with one focal
//! element per expert, in lexicographic order of the per-expert focal lists
//! (each list in increasing bitmask order). Shares produced for a tuple are
//! added to the output in that order, so results are reproducible bit for bit.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};
use crate::mass::{MassFunction, World};

/// One M-tuple of focal elements together with its conjunctive product.
#[derive(Debug, Clone, Copy)]
pub struct Tuple<'a> {
    pub sets: &'a [FocalSet],
    pub masses: &'a [f64],
    pub product: f64,
    pub intersection: FocalSet,
    pub union: FocalSet,
}

impl Tuple<'_> {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_conflicting(&self) -> bool {
        self.intersection.is_empty()
    }

    pub fn mass_sum(&self) -> f64 {
        self.masses.iter().sum()
    }
}

/// Lending iterator over all tuples of a list of mass functions.
pub struct Tuples {
    lists: Vec<Vec<(FocalSet, f64)>>,
    index: Vec<usize>,
    sets: Vec<FocalSet>,
    masses: Vec<f64>,
    full: FocalSet,
    started: bool,
    done: bool,
}

impl Tuples {
    pub fn new(ms: &[MassFunction]) -> Result<Self> {
        let frame = check_same_frame(ms)?;
        let lists: Vec<Vec<(FocalSet, f64)>> = ms.iter().map(|m| m.iter().collect()).collect();
        let done = lists.is_empty() || lists.iter().any(Vec::is_empty);
        Ok(Self {
            index: vec![0; lists.len()],
            sets: lists.iter().map(|l| l.first().map_or(FocalSet::EMPTY, |e| e.0)).collect(),
            masses: lists.iter().map(|l| l.first().map_or(0.0, |e| e.1)).collect(),
            lists,
            full: frame.full(),
            started: false,
            done,
        })
    }

    /// Number of tuples, `Π p_j`, or `None` when it does not fit in a u128.
    pub fn count(&self) -> Option<u128> {
        self.lists
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
    }

    pub fn next_tuple(&mut self) -> Option<Tuple<'_>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        let mut product = 1.0;
        let mut intersection = self.full;
        let mut union = FocalSet::EMPTY;
        for (set, mass) in self.sets.iter().zip(&self.masses) {
            product *= mass;
            intersection = intersection & *set;
            union = union | *set;
        }
        Some(Tuple {
            sets: &self.sets,
            masses: &self.masses,
            product,
            intersection,
            union,
        })
    }

    // Odometer step, last expert fastest.
    fn advance(&mut self) -> bool {
        for e in (0..self.lists.len()).rev() {
            self.index[e] += 1;
            if self.index[e] < self.lists[e].len() {
                let (s, m) = self.lists[e][self.index[e]];
                self.sets[e] = s;
                self.masses[e] = m;
                return true;
            }
            self.index[e] = 0;
            let (s, m) = self.lists[e][0];
            self.sets[e] = s;
            self.masses[e] = m;
        }
        false
    }
}

pub(crate) fn check_same_frame(ms: &[MassFunction]) -> Result<&Arc<Frame>> {
    let first = ms.first().ok_or(Error::ExpertCount {
        rule: "combination",
        expected: "at least 1",
        got: 0,
    })?;
    if ms.iter().any(|m| !m.same_frame(first)) {
        return Err(Error::FrameMismatch);
    }
    Ok(first.frame())
}

pub(crate) fn require_experts(ms: &[MassFunction], rule: &'static str) -> Result<()> {
    if ms.len() < 2 {
        return Err(Error::ExpertCount {
            rule,
            expected: "at least 2",
            got: ms.len(),
        });
    }
    check_same_frame(ms)?;
    Ok(())
}

pub(crate) fn require_closed(ms: &[MassFunction]) -> Result<()> {
    if ms.iter().any(MassFunction::is_open_world) {
        return Err(Error::OpenWorldInput);
    }
    Ok(())
}

/// Shares produced by a rule for one tuple.
pub type Shares = Vec<(FocalSet, f64)>;

/// Runs `split` on every tuple and accumulates the emitted shares.
pub(crate) fn accumulate<F>(ms: &[MassFunction], mut split: F) -> Result<BTreeMap<FocalSet, f64>>
where
    F: FnMut(&Tuple<'_>, &mut Shares) -> Result<()>,
{
    let mut tuples = Tuples::new(ms)?;
    let mut acc: BTreeMap<FocalSet, f64> = BTreeMap::new();
    let mut shares = Shares::new();
    while let Some(t) = tuples.next_tuple() {
        shares.clear();
        split(&t, &mut shares)?;
        for (set, share) in shares.drain(..) {
            if share != 0.0 {
                *acc.entry(set).or_insert(0.0) += share;
            }
        }
    }
    Ok(acc)
}

/// Accumulates a tuple-local rule into a validated mass function.
pub(crate) fn combine<F>(ms: &[MassFunction], world: World, split: F) -> Result<MassFunction>
where
    F: FnMut(&Tuple<'_>, &mut Shares) -> Result<()>,
{
    let frame = Arc::clone(check_same_frame(ms)?);
    let acc = accumulate(ms, split)?;
    MassFunction::from_accumulator(&frame, acc, world)
}
