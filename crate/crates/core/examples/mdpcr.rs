//! The mixed discounted rule: Mix on compatible tuples, DPCR on conflicting
//! ones, compared with both parents.

use std::sync::Arc;

use belief_fusion::{dpcr, mdpcr, mix, AlphaPolicy, DissimilarityKind, Frame, MassFunction, World};

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["A", "B", "C", "D"])?);
    let experts = [
        MassFunction::from_exprs(&frame, &[("A", 0.7), ("THETA", 0.3)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("B", 0.5), ("THETA", 0.5)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("A|C", 0.6), ("THETA", 0.4)], World::Closed)?,
    ];
    let alpha = AlphaPolicy::Constant(0.9);

    let results = [
        ("mix min", mix(&experts, DissimilarityKind::MinBased)?),
        ("dpcr 0.9", dpcr(&experts, alpha)?),
        ("mdpcr min", mdpcr(&experts, DissimilarityKind::MinBased, alpha)?),
        ("mdpcr jaccard", mdpcr(&experts, DissimilarityKind::JaccardBased, alpha)?),
        ("mdpcr pairwise", mdpcr(&experts, DissimilarityKind::JaccardBased, AlphaPolicy::GlobalPairwise)?),
    ];

    let mut sets: Vec<_> = results.iter().flat_map(|(_, m)| m.focal_elements()).collect();
    sets.sort();
    sets.dedup();

    print!("{:<16}", "");
    for s in &sets {
        print!("{:>9}", frame.format(*s));
    }
    println!();
    for (name, m) in &results {
        print!("{name:<16}");
        for s in &sets {
            print!("{:>9.4}", m.mass(*s));
        }
        println!();
    }
    Ok(())
}
