//! Proportional conflict redistribution.
//!
//! For a tuple whose focal elements have an empty intersection, PCR6 hands
//! the tuple's product back to the elements that produced it, each expert's
//! element receiving a share proportional to that expert's mass on it. The
//! `f` and `g` variants reshape those proportions.

use crate::classic::conjunctive_split;
use crate::error::{Error, Result};
use crate::frame::FocalSet;
use crate::mass::{MassFunction, World};
use crate::tuple::{combine, require_closed, require_experts, Shares, Tuple};

const SHAPING_GRID: usize = 1000;

/// Non-decreasing positive function on `]0, 1]` used to reshape the
/// proportional weights.
#[derive(Debug, Clone, PartialEq)]
pub enum ShapingFunction {
    Identity,
    Power(f64),
    /// Piecewise-linear through `(x, y)` sample points sorted by `x`,
    /// constant beyond the first and last points.
    Table(Vec<(f64, f64)>),
}

impl ShapingFunction {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            ShapingFunction::Identity => x,
            ShapingFunction::Power(e) => x.powf(*e),
            ShapingFunction::Table(points) => interpolate(points, x),
        }
    }

    /// Checks positivity and monotonicity on a 1e-3 grid over `]0, 1]`.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidShapingFunction(msg));
        match self {
            ShapingFunction::Power(e) if *e <= 0.0 || !e.is_finite() => {
                return invalid(format!("exponent {e} must be positive"));
            }
            ShapingFunction::Table(points) => {
                if points.is_empty() {
                    return invalid("table has no sample points".into());
                }
                if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
                    return invalid("table contains non-finite values".into());
                }
                if points.windows(2).any(|w| w[1].0 <= w[0].0) {
                    return invalid("table abscissae must be strictly increasing".into());
                }
            }
            _ => {}
        }
        let mut previous = 0.0;
        for k in 1..=SHAPING_GRID {
            let x = k as f64 / SHAPING_GRID as f64;
            let y = self.eval(x);
            if y <= 0.0 || y.is_nan() {
                return invalid(format!("f({x}) = {y} is not positive"));
            }
            if y < previous {
                return invalid(format!("decreasing at x = {x}"));
            }
            previous = y;
        }
        Ok(())
    }
}

fn interpolate(points: &[(f64, f64)], x: f64) -> f64 {
    let first = points[0];
    let last = points[points.len() - 1];
    if x <= first.0 {
        return first.1;
    }
    if x >= last.0 {
        return last.1;
    }
    let i = points.partition_point(|p| p.0 <= x);
    let (x0, y0) = points[i - 1];
    let (x1, y1) = points[i];
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// `σ_i(j)`: the `j`-th expert other than `i` (0-based), i.e. `j` if `j < i`
/// and `j + 1` otherwise.
pub fn sigma_index(i: usize, j: usize, experts: usize) -> Result<usize> {
    if i >= experts {
        return Err(Error::IndexOutOfRange { index: i, len: experts });
    }
    if j + 1 >= experts {
        return Err(Error::IndexOutOfRange { index: j, len: experts.saturating_sub(1) });
    }
    Ok(if j < i { j } else { j + 1 })
}

/// Two-expert PCR, evaluated directly from the pairwise form: every
/// conflicting pair `(X, Y)` with `X ∩ Y = ∅` gives back
/// `m1(X)² m2(Y) / (m1(X) + m2(Y))` to `X` and `m2(Y)² m1(X) / (m1(X) + m2(Y))`
/// to `Y`.
pub fn pcr_two(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    let pair = [m1.clone(), m2.clone()];
    require_experts(&pair, "pcr")?;
    require_closed(&pair)?;
    combine(&pair, World::Closed, |t, out| {
        let (x, y) = (t.sets[0], t.sets[1]);
        let (a, b) = (t.masses[0], t.masses[1]);
        if t.is_conflicting() {
            debug_assert!(a + b > 0.0);
            out.push((x, a * a * b / (a + b)));
            out.push((y, b * b * a / (a + b)));
        } else {
            out.push((x & y, a * b));
        }
        Ok(())
    })
}

/// Share of a conflicting tuple returned to each expert's element,
/// proportional to the expert's own mass.
pub(crate) fn pcr6_conflict_shares(t: &Tuple<'_>, scale: f64, out: &mut Shares) {
    let total = t.mass_sum();
    debug_assert!(total > 0.0);
    for (set, mass) in t.sets.iter().zip(t.masses) {
        out.push((*set, scale * t.product * mass / total));
    }
}

pub(crate) fn pcr6_split(t: &Tuple<'_>, out: &mut Shares) -> Result<()> {
    if t.is_conflicting() {
        pcr6_conflict_shares(t, 1.0, out);
        Ok(())
    } else {
        conjunctive_split(t, out)
    }
}

/// PCR6 for M experts.
pub fn pcr6(ms: &[MassFunction]) -> Result<MassFunction> {
    require_experts(ms, "pcr6")?;
    require_closed(ms)?;
    combine(ms, World::Closed, pcr6_split)
}

pub(crate) fn pcr6f_split(t: &Tuple<'_>, f: &ShapingFunction, out: &mut Shares) -> Result<()> {
    if !t.is_conflicting() {
        return conjunctive_split(t, out);
    }
    let weights: Vec<f64> = t.masses.iter().map(|m| f.eval(*m)).collect();
    let total: f64 = weights.iter().sum();
    for (set, w) in t.sets.iter().zip(&weights) {
        out.push((*set, t.product * w / total));
    }
    Ok(())
}

/// PCR6 with every mass reshaped by `f` before computing proportions: a
/// conflicting tuple gives expert `i` the share `P f(m_i) / Σ_j f(m_j)`.
pub fn pcr6f(ms: &[MassFunction], f: &ShapingFunction) -> Result<MassFunction> {
    require_experts(ms, "pcr6f")?;
    require_closed(ms)?;
    f.validate()?;
    combine(ms, World::Closed, |t, out| pcr6f_split(t, f, out))
}

pub(crate) fn pcr6g_split(t: &Tuple<'_>, g: &ShapingFunction, out: &mut Shares) -> Result<()> {
    if !t.is_conflicting() {
        return conjunctive_split(t, out);
    }
    // Experts sharing a focal element form one group, represented by the
    // smallest expert index in it.
    let mut groups: Vec<(FocalSet, f64)> = Vec::with_capacity(t.len());
    for (set, mass) in t.sets.iter().zip(t.masses) {
        match groups.iter_mut().find(|(s, _)| s == set) {
            Some(group) => group.1 += mass,
            None => groups.push((*set, *mass)),
        }
    }
    let weights: Vec<f64> = groups.iter().map(|(_, sum)| g.eval(*sum)).collect();
    let total: f64 = weights.iter().sum();
    for ((set, _), w) in groups.iter().zip(&weights) {
        out.push((*set, t.product * w / total));
    }
    Ok(())
}

/// PCR6 where `g` is applied to the summed mass of each distinct focal
/// element of a conflicting tuple.
pub fn pcr6g(ms: &[MassFunction], g: &ShapingFunction) -> Result<MassFunction> {
    require_experts(ms, "pcr6g")?;
    require_closed(ms)?;
    g.validate()?;
    combine(ms, World::Closed, |t, out| pcr6g_split(t, g, out))
}
