//! Shared test support: a naive dense reference implementation and random
//! mass function generators.
//!
//! The reference works on plain vectors indexed by subset bitmask and sums,
//! for each target subset `X`, over every tuple of subsets, including subsets
//! with zero mass. It shares no code with the library.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod props;

use std::collections::BTreeMap;
use std::sync::Arc;

use belief_fusion::{FocalSet, Frame, MassFunction, World};
use proptest::prelude::*;

pub type Dense = Vec<f64>;

pub fn dense(m: &MassFunction) -> Dense {
    let n = m.frame().len();
    let mut v = vec![0.0; 1 << n];
    for (s, x) in m.iter() {
        v[s.bits() as usize] = x;
    }
    v
}

pub fn dense_all(ms: &[MassFunction]) -> Vec<Dense> {
    ms.iter().map(dense).collect()
}

/// Largest absolute difference between a library result and a dense vector.
pub fn max_diff(m: &MassFunction, expected: &[f64]) -> f64 {
    let got = dense(m);
    got.iter()
        .zip(expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn card(x: usize) -> f64 {
    x.count_ones() as f64
}

/// Every tuple `(Y_1, …, Y_M)` of subsets of an `n`-element frame.
fn tuples(n: usize, experts: usize) -> impl Iterator<Item = Vec<usize>> {
    let size = 1usize << n;
    (0..size.pow(experts as u32)).map(move |mut code| {
        let mut ys = vec![0; experts];
        for y in ys.iter_mut() {
            *y = code % size;
            code /= size;
        }
        ys
    })
}

fn product(ms: &[Dense], ys: &[usize]) -> f64 {
    ms.iter().zip(ys).map(|(m, y)| m[*y]).product()
}

fn meet(ys: &[usize], full: usize) -> usize {
    ys.iter().fold(full, |a, y| a & y)
}

fn join(ys: &[usize]) -> usize {
    ys.iter().fold(0, |a, y| a | y)
}

fn frame_bits(ms: &[Dense]) -> (usize, usize) {
    let size = ms[0].len();
    (size.trailing_zeros() as usize, size - 1)
}

pub fn conjunctive(ms: &[Dense]) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 0..=full {
        out[x] = tuples(n, ms.len())
            .filter(|ys| meet(ys, full) == x)
            .map(|ys| product(ms, &ys))
            .sum();
    }
    out
}

pub fn disjunctive(ms: &[Dense]) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 0..=full {
        out[x] = tuples(n, ms.len())
            .filter(|ys| join(ys) == x)
            .map(|ys| product(ms, &ys))
            .sum();
    }
    out
}

pub fn dempster(ms: &[Dense]) -> Dense {
    let c = conjunctive(ms);
    let k = c[0];
    let mut out: Dense = c.iter().map(|v| v / (1.0 - k)).collect();
    out[0] = 0.0;
    out
}

pub fn yager(ms: &[Dense]) -> Dense {
    let mut out = conjunctive(ms);
    let full = out.len() - 1;
    out[full] += out[0];
    out[0] = 0.0;
    out
}

pub fn dubois_prade(ms: &[Dense]) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 1..=full {
        out[x] = tuples(n, ms.len())
            .map(|ys| {
                let p = product(ms, &ys);
                let i = meet(&ys, full);
                if i == x || (i == 0 && join(&ys) == x) {
                    p
                } else {
                    0.0
                }
            })
            .sum();
    }
    out
}

/// Two-expert PCR, term by term.
pub fn pcr_two(m1: &Dense, m2: &Dense) -> Dense {
    let full = m1.len() - 1;
    let mut out = conjunctive(&[m1.clone(), m2.clone()]);
    out[0] = 0.0;
    for x in 1..=full {
        for y in 0..=full {
            if x & y != 0 {
                continue;
            }
            if m1[x] + m2[y] > 0.0 {
                out[x] += m1[x] * m1[x] * m2[y] / (m1[x] + m2[y]);
            }
            if m2[x] + m1[y] > 0.0 {
                out[x] += m2[x] * m2[x] * m1[y] / (m2[x] + m1[y]);
            }
        }
    }
    out
}

/// `Σ_i Σ_{Y_σ : ∩Y_σ ∩ X = ∅} w(i, tuple) · m_i(X)² Π m_σ / (m_i(X) + Σ m_σ)`,
/// where the tuple places `X` at position `i`.
fn pcr_redistribution(ms: &[Dense], x: usize, weight: &dyn Fn(usize, &[usize]) -> f64) -> f64 {
    let (n, full) = frame_bits(ms);
    let experts = ms.len();
    let mut total = 0.0;
    for i in 0..experts {
        let mi = ms[i][x];
        if mi == 0.0 {
            continue;
        }
        for ys in tuples(n, experts) {
            if ys[i] != x {
                continue;
            }
            let others: Vec<usize> = (0..experts).filter(|&j| j != i).collect();
            let others_meet = others.iter().fold(full, |a, &j| a & ys[j]);
            if others_meet & x != 0 {
                continue;
            }
            let prod: f64 = others.iter().map(|&j| ms[j][ys[j]]).product();
            if prod == 0.0 {
                continue;
            }
            let sum: f64 = others.iter().map(|&j| ms[j][ys[j]]).sum();
            total += weight(i, &ys) * mi * mi * prod / (mi + sum);
        }
    }
    total
}

pub fn pcr6(ms: &[Dense]) -> Dense {
    let full = ms[0].len() - 1;
    let mut out = conjunctive(ms);
    out[0] = 0.0;
    for x in 1..=full {
        out[x] += pcr_redistribution(ms, x, &|_, _| 1.0);
    }
    out
}

pub fn pcr6f(ms: &[Dense], f: &dyn Fn(f64) -> f64) -> Dense {
    let (n, full) = frame_bits(ms);
    let experts = ms.len();
    let mut out = conjunctive(ms);
    out[0] = 0.0;
    for x in 1..=full {
        for i in 0..experts {
            let mi = ms[i][x];
            if mi == 0.0 {
                continue;
            }
            for ys in tuples(n, experts).filter(|ys| ys[i] == x && meet(ys, full) == 0) {
                let others: Vec<usize> = (0..experts).filter(|&j| j != i).collect();
                let prod: f64 = others.iter().map(|&j| ms[j][ys[j]]).product();
                if prod == 0.0 {
                    continue;
                }
                let denom = f(mi) + others.iter().map(|&j| f(ms[j][ys[j]])).sum::<f64>();
                out[x] += mi * f(mi) * prod / denom;
            }
        }
    }
    out
}

pub fn pcr6g(ms: &[Dense], g: &dyn Fn(f64) -> f64) -> Dense {
    let (n, full) = frame_bits(ms);
    let experts = ms.len();
    let mut out = conjunctive(ms);
    out[0] = 0.0;
    for x in 1..=full {
        for i in 0..experts {
            let mi = ms[i][x];
            if mi == 0.0 {
                continue;
            }
            for ys in tuples(n, experts).filter(|ys| ys[i] == x && meet(ys, full) == 0) {
                // Only the first expert answering X carries the group.
                if (0..i).any(|j| ys[j] == x) {
                    continue;
                }
                let prod = product(ms, &ys);
                if prod == 0.0 {
                    continue;
                }
                let group_sum = |z: usize| -> f64 { (0..experts).filter(|&j| ys[j] == z).map(|j| ms[j][z]).sum() };
                let mut distinct = ys.clone();
                distinct.sort_unstable();
                distinct.dedup();
                let denom: f64 = distinct.iter().map(|&z| g(group_sum(z))).sum();
                out[x] += prod * g(group_sum(x)) / denom;
            }
        }
    }
    out
}

pub fn delta_min(ys: &[usize], full: usize) -> f64 {
    let min = ys.iter().map(|&y| card(y)).fold(f64::INFINITY, f64::min);
    1.0 - card(meet(ys, full)) / min
}

pub fn delta_jaccard(ys: &[usize], full: usize) -> f64 {
    1.0 - card(meet(ys, full)) / card(join(ys))
}

pub type Delta = fn(&[usize], usize) -> f64;

pub fn mix(ms: &[Dense], delta: Delta) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 0..=full {
        for ys in tuples(n, ms.len()) {
            let p = product(ms, &ys);
            if p == 0.0 {
                continue;
            }
            let d = delta(&ys, full);
            if join(&ys) == x {
                out[x] += d * p;
            }
            if meet(&ys, full) == x {
                out[x] += (1.0 - d) * p;
            }
        }
    }
    out
}

/// `α(Y_1, …, Y_M) = 1 - Σ_i f_i`.
pub fn alpha_pairwise(ys: &[usize]) -> f64 {
    let m = ys.len() as f64;
    let conflicts: usize = ys
        .iter()
        .map(|&yi| ys.iter().filter(|&&yj| yj & yi == 0).count())
        .sum();
    1.0 - conflicts as f64 / (m * (m - 1.0))
}

/// `α_i(Y_1, …, Y_M)`: agreeing other experts over `M(M-1)`.
pub fn alpha_i(i: usize, ys: &[usize]) -> f64 {
    let m = ys.len() as f64;
    let agree = (0..ys.len()).filter(|&j| j != i && ys[j] & ys[i] != 0).count();
    agree as f64 / (m * (m - 1.0))
}

#[derive(Clone, Copy, Debug)]
pub enum Alpha {
    Constant(f64),
    Pairwise,
    PerExpert,
}

/// Multiplier of expert `i`'s proportional share, and the union's share.
fn discount_weights(ms: &[Dense], ys: &[usize], alpha: Alpha) -> (Vec<f64>, f64) {
    let experts = ys.len();
    match alpha {
        Alpha::Constant(a) => (vec![a; experts], 1.0 - a),
        Alpha::Pairwise => {
            let a = alpha_pairwise(ys);
            (vec![a; experts], 1.0 - a)
        }
        Alpha::PerExpert => {
            let alphas: Vec<f64> = (0..experts).map(|i| alpha_i(i, ys)).collect();
            let sum_alpha: f64 = alphas.iter().sum();
            if sum_alpha == 0.0 {
                return (vec![0.0; experts], 1.0);
            }
            let masses: Vec<f64> = (0..experts).map(|j| ms[j][ys[j]]).collect();
            let sum_mass: f64 = masses.iter().sum();
            let dot: f64 = alphas.iter().zip(&masses).map(|(a, m)| a * m / sum_mass).sum();
            let lambda = sum_alpha / dot;
            (alphas.iter().map(|a| a * lambda).collect(), 1.0 - sum_alpha)
        }
    }
}

fn discounted_conflict(ms: &[Dense], alpha: Alpha, out: &mut Dense) {
    let (n, full) = frame_bits(ms);
    for x in 1..=full {
        out[x] += pcr_redistribution(ms, x, &|i, ys| discount_weights(ms, ys, alpha).0[i]);
        for ys in tuples(n, ms.len()) {
            if join(&ys) != x || meet(&ys, full) != 0 {
                continue;
            }
            let p = product(ms, &ys);
            if p == 0.0 {
                continue;
            }
            out[x] += discount_weights(ms, &ys, alpha).1 * p;
        }
    }
}

pub fn dpcr(ms: &[Dense], alpha: Alpha) -> Dense {
    let mut out = conjunctive(ms);
    out[0] = 0.0;
    discounted_conflict(ms, alpha, &mut out);
    out
}

pub fn mdpcr(ms: &[Dense], delta: Delta, alpha: Alpha) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 1..=full {
        for ys in tuples(n, ms.len()) {
            let p = product(ms, &ys);
            if p == 0.0 || meet(&ys, full) == 0 {
                continue;
            }
            let d = delta(&ys, full);
            if join(&ys) == x {
                out[x] += d * p;
            }
            if meet(&ys, full) == x {
                out[x] += (1.0 - d) * p;
            }
        }
    }
    discounted_conflict(ms, alpha, &mut out);
    out
}

/// `ε_k̄` as lists of expert indices.
pub fn maximal_groups(ys: &[usize], full: usize) -> Vec<Vec<usize>> {
    let experts = ys.len();
    let groups: Vec<Vec<usize>> = (1usize..1 << experts)
        .map(|mask| (0..experts).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|g| g.iter().fold(full, |a, &i| a & ys[i]) != 0)
        .collect();
    let k = groups.iter().map(Vec::len).max().unwrap_or(0);
    groups.into_iter().filter(|g| g.len() == k).collect()
}

/// Extended mixed rule with the `1/|ε_k̄|` factor on both terms.
pub fn emix(ms: &[Dense]) -> Dense {
    let (n, full) = frame_bits(ms);
    let mut out = vec![0.0; 1 << n];
    for x in 1..=full {
        for ys in tuples(n, ms.len()) {
            let p = product(ms, &ys);
            if p == 0.0 {
                continue;
            }
            let eps = maximal_groups(&ys, full);
            let share = p / eps.len() as f64;
            for z in &eps {
                let sets: Vec<usize> = z.iter().map(|&i| ys[i]).collect();
                let d = delta_min(&sets, full);
                if join(&ys) == x {
                    out[x] += d * share;
                }
                if meet(&sets, full) == x {
                    out[x] += (1.0 - d) * share;
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Generators

pub fn frame(n: usize) -> Arc<Frame> {
    let labels: Vec<String> = (0..n).map(|i| ((b'A' + i as u8) as char).to_string()).collect();
    Arc::new(Frame::new(labels).unwrap())
}

/// A closed-world mass function from raw `(bitmask, weight)` draws; repeated
/// masks merge and weights are normalized.
pub fn build(frame: &Arc<Frame>, draws: &[(u64, f64)]) -> MassFunction {
    let mut merged: BTreeMap<u64, f64> = BTreeMap::new();
    for &(bits, w) in draws {
        *merged.entry(bits).or_default() += w;
    }
    let total: f64 = merged.values().sum();
    MassFunction::new(
        frame,
        merged.into_iter().map(|(b, w)| (FocalSet(b), w / total)),
        World::Closed,
    )
    .unwrap()
}

pub fn mass_strategy(frame: Arc<Frame>, max_focal: usize) -> impl Strategy<Value = MassFunction> {
    let top = 1u64 << frame.len();
    prop::collection::vec((1..top, 0.01f64..1.0), 1..=max_focal).prop_map(move |d| build(&frame, &d))
}

/// `experts` mass functions on a shared frame of `n` singletons, with `n` and
/// `experts` drawn from the given ranges.
pub fn experts_strategy(
    n: std::ops::RangeInclusive<usize>,
    experts: std::ops::RangeInclusive<usize>,
    max_focal: usize,
) -> impl Strategy<Value = Vec<MassFunction>> {
    (n, experts).prop_flat_map(move |(n, m)| {
        let f = frame(n);
        prop::collection::vec(mass_strategy(f, max_focal), m)
    })
}
