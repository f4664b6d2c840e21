//! Conflict measures.

use crate::classic::conjunctive;
use crate::error::{Error, Result};
use crate::mass::MassFunction;
use crate::tuple::{require_experts, Tuples};

/// Global conflict `k`: the conjunctive mass on ∅ across all experts.
pub fn global_conflict(ms: &[MassFunction]) -> Result<f64> {
    require_experts(ms, "global conflict")?;
    let mut tuples = Tuples::new(ms)?;
    let mut k = 0.0;
    while let Some(t) = tuples.next_tuple() {
        if t.is_conflicting() {
            k += t.product;
        }
    }
    Ok(k)
}

/// Auto-conflict of order `order`: the conjunctive mass on ∅ obtained by
/// combining `m` with itself `order` times.
///
/// The value is non-decreasing in `order` since ∅ absorbs every intersection.
pub fn auto_conflict(m: &MassFunction, order: usize) -> Result<f64> {
    if order < 2 {
        return Err(Error::OrderTooSmall(order));
    }
    if m.is_open_world() {
        return Err(Error::OpenWorldInput);
    }
    // Pairwise fold over the associative conjunctive rule.
    let mut acc = conjunctive(&[m.clone(), m.clone()])?;
    for _ in 2..order {
        acc = conjunctive(&[acc, m.clone()])?;
    }
    Ok(acc.empty_mass())
}
