//! Invariants shared by the property suite and the acceptance runner. Each
//! check takes a random instance and fails with a `TestCaseError`.

use std::collections::BTreeMap;
use std::sync::Arc;

use belief_fusion::{
    conjunctive, dempster, disjunctive, dpcr, dubois_prade, florea, pcr6, pcr6f, pcr_two, weighted_conflict_repartition,
    yager, AlphaPolicy, DissimilarityKind, Error, MassFunction, RuleConfig, ShapingFunction, Tuples,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// Every rule whose output is a closed-world mass function and that accepts
/// any number of experts.
pub fn closed_rules() -> Vec<RuleConfig> {
    use AlphaPolicy::{Constant, GlobalPairwise, PerExpertNormalized};
    use DissimilarityKind::{JaccardBased, MinBased};
    vec![
        RuleConfig::Dempster,
        RuleConfig::Yager,
        RuleConfig::Disjunctive,
        RuleConfig::DuboisPrade,
        RuleConfig::Pcr6,
        RuleConfig::Pcr6f(ShapingFunction::Power(2.0)),
        RuleConfig::Pcr6g(ShapingFunction::Power(0.5)),
        RuleConfig::Mix(MinBased),
        RuleConfig::Mix(JaccardBased),
        RuleConfig::Dpcr(Constant(0.9)),
        RuleConfig::Dpcr(GlobalPairwise),
        RuleConfig::Dpcr(PerExpertNormalized),
        RuleConfig::Mdpcr(MinBased, GlobalPairwise),
        RuleConfig::Mdpcr(JaccardBased, PerExpertNormalized),
        RuleConfig::EMix,
    ]
}

/// Rules whose output depends on each tuple alone.
pub fn local_rules() -> Vec<RuleConfig> {
    let mut rules: Vec<RuleConfig> = closed_rules()
        .into_iter()
        .filter(|r| !matches!(r, RuleConfig::Dempster | RuleConfig::Yager))
        .collect();
    rules.push(RuleConfig::Conjunctive);
    rules
}

fn close(a: &MassFunction, b: &MassFunction, tol: f64, what: &str) -> Check {
    let d = a.max_abs_diff(b);
    prop_assert!(d <= tol, "{what}: max difference {d:e} exceeds {tol:e}");
    Ok(())
}

pub fn normalization(ms: &[MassFunction]) -> Check {
    for rule in closed_rules() {
        match rule.combine(ms) {
            Ok(out) => {
                prop_assert!((out.total() - 1.0).abs() <= 1e-9, "{}: total {}", rule.name(), out.total());
                prop_assert_eq!(out.empty_mass(), 0.0, "{} put mass on the empty set", rule.name());
            }
            Err(Error::TotalConflict) if rule == RuleConfig::Dempster => {}
            Err(e) => return Err(TestCaseError::fail(format!("{}: {e}", rule.name()))),
        }
    }
    let conj = conjunctive(ms).unwrap();
    prop_assert!((conj.total() - 1.0).abs() <= 1e-9);
    let full = ms[0].frame().full();
    let mut weights = BTreeMap::from([(full, 0.25)]);
    *weights.entry(ms[0].frame().singleton(0)).or_insert(0.0) += 0.75;
    let w = weighted_conflict_repartition(ms, &weights).unwrap();
    prop_assert!((w.total() - 1.0).abs() <= 1e-9);
    if let [m1, m2] = ms {
        prop_assert!((florea(ms).unwrap().total() - 1.0).abs() <= 1e-9);
        prop_assert!((pcr_two(m1, m2).unwrap().total() - 1.0).abs() <= 1e-9);
    }
    Ok(())
}

pub fn tuple_conservation(ms: &[MassFunction]) -> Check {
    for rule in local_rules() {
        let mut tuples = Tuples::new(ms).unwrap();
        while let Some(t) = tuples.next_tuple() {
            let shares = rule.tuple_shares(&t).expect("local rule").unwrap();
            prop_assert!(shares.iter().all(|(_, v)| *v >= 0.0), "{}: negative share", rule.name());
            let sum: f64 = shares.iter().map(|(_, v)| v).sum();
            prop_assert!(
                (sum - t.product).abs() <= 1e-12,
                "{}: tuple {:?} shares {sum} vs product {}",
                rule.name(),
                t.sets,
                t.product
            );
        }
    }
    Ok(())
}

pub fn pcr_two_is_pcr6(m1: &MassFunction, m2: &MassFunction) -> Check {
    let pair = [m1.clone(), m2.clone()];
    close(&pcr_two(m1, m2).unwrap(), &pcr6(&pair).unwrap(), 1e-12, "pcr_two vs pcr6")
}

pub fn pcr6f_identity_is_pcr6(ms: &[MassFunction]) -> Check {
    close(
        &pcr6f(ms, &ShapingFunction::Identity).unwrap(),
        &pcr6(ms).unwrap(),
        1e-12,
        "pcr6f(identity) vs pcr6",
    )
}

pub fn dpcr_limits(ms: &[MassFunction]) -> Check {
    close(&dpcr(ms, AlphaPolicy::Constant(1.0)).unwrap(), &pcr6(ms).unwrap(), 1e-12, "dpcr(1) vs pcr6")?;
    close(
        &dpcr(ms, AlphaPolicy::Constant(0.0)).unwrap(),
        &dubois_prade(ms).unwrap(),
        1e-12,
        "dpcr(0) vs dubois-prade",
    )
}

pub fn vacuous_neutrality(m: &MassFunction) -> Check {
    let pair = [m.clone(), MassFunction::vacuous(m.frame())];
    close(&conjunctive(&pair).unwrap(), m, 1e-12, "conjunctive")?;
    close(&dempster(&pair).unwrap(), m, 1e-12, "dempster")?;
    close(&pcr6(&pair).unwrap(), m, 1e-12, "pcr6")
}

pub fn commutativity(ms: &[MassFunction]) -> Check {
    let mut reversed = ms.to_vec();
    reversed.reverse();
    let mut rotated = ms.to_vec();
    rotated.rotate_left(1);
    let mut rules = closed_rules();
    rules.push(RuleConfig::Conjunctive);
    for rule in rules {
        let base = match rule.combine(ms) {
            Ok(m) => m,
            Err(Error::TotalConflict) => continue,
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for perm in [&reversed, &rotated] {
            close(&base, &rule.combine(perm).unwrap(), 1e-12, rule.name())?;
        }
    }
    Ok(())
}

pub fn associativity(a: &MassFunction, b: &MassFunction, c: &MassFunction) -> Check {
    let three = [a.clone(), b.clone(), c.clone()];
    let left = conjunctive(&[conjunctive(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
    let right = conjunctive(&[a.clone(), conjunctive(&[b.clone(), c.clone()]).unwrap()]).unwrap();
    let flat = conjunctive(&three).unwrap();
    close(&left, &flat, 1e-12, "conjunctive left fold")?;
    close(&right, &flat, 1e-12, "conjunctive right fold")?;
    let left = disjunctive(&[disjunctive(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
    let right = disjunctive(&[a.clone(), disjunctive(&[b.clone(), c.clone()]).unwrap()]).unwrap();
    let flat = disjunctive(&three).unwrap();
    close(&left, &flat, 1e-12, "disjunctive left fold")?;
    close(&right, &flat, 1e-12, "disjunctive right fold")
}

pub fn weighted_theta_is_yager(ms: &[MassFunction]) -> Check {
    let frame: &Arc<_> = ms[0].frame();
    let weights = BTreeMap::from([(frame.full(), 1.0)]);
    close(
        &weighted_conflict_repartition(ms, &weights).unwrap(),
        &yager(ms).unwrap(),
        1e-12,
        "weighted(THETA) vs yager",
    )
}
