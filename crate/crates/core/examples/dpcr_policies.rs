//! Discounted PCR: part of each partial conflict goes to the union of the
//! conflicting responses, controlled by a constant, a pairwise-conflict or a
//! per-expert policy.

use std::sync::Arc;

use belief_fusion::{
    alpha_global, alpha_per_expert, dpcr, AlphaPolicy, Frame, MassFunction, Tuples, World,
};

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["A", "B", "C", "D"])?);
    let experts = [
        MassFunction::from_exprs(&frame, &[("A", 0.7), ("THETA", 0.3)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("B", 0.5), ("THETA", 0.5)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("A|C", 0.6), ("THETA", 0.4)], World::Closed)?,
    ];

    println!("conflicting tuples:");
    let mut tuples = Tuples::new(&experts)?;
    while let Some(t) = tuples.next_tuple() {
        if !t.is_conflicting() {
            continue;
        }
        let names: Vec<String> = t.sets.iter().map(|s| frame.format(*s)).collect();
        let per_expert = (0..t.len())
            .map(|i| alpha_per_expert(i, t.sets))
            .collect::<belief_fusion::Result<Vec<_>>>()?;
        println!(
            "  {:<16} product {:.2}  alpha {:.4}  alpha_i {:?}",
            format!("({})", names.join(", ")),
            t.product,
            alpha_global(t.sets)?,
            per_expert.iter().map(|a| format!("{a:.4}")).collect::<Vec<_>>()
        );
    }

    let policies = [
        ("const 0.9", AlphaPolicy::Constant(0.9)),
        ("pairwise", AlphaPolicy::GlobalPairwise),
        ("per-expert", AlphaPolicy::PerExpertNormalized),
    ];
    println!("\n{:<12}{:>9}{:>9}{:>9}{:>9}{:>9}", "policy", "A", "B", "A|C", "A|B|C", "THETA");
    for (name, policy) in policies {
        let m = dpcr(&experts, policy)?;
        print!("{name:<12}");
        for set in ["A", "B", "A|C", "A|B|C", "THETA"] {
            print!("{:>9.4}", m.mass_of(set));
        }
        println!();
    }
    Ok(())
}
