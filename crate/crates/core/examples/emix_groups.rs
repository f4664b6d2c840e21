//! Maximal compatible groups of experts and the extended mixed rule built on
//! them.

use std::sync::Arc;

use belief_fusion::{delta_group, emix, emix_complexity_probe, epsilon_k, k_bar, Frame, MassFunction, World};

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["A", "B", "C", "D"])?);

    for responses in [["A|B", "A|C", "D"], ["A|B", "B|C", "A|C"]] {
        let sets = responses.iter().map(|r| frame.parse(r)).collect::<belief_fusion::Result<Vec<_>>>()?;
        let kb = k_bar(&sets)?;
        println!("responses {responses:?}: largest compatible group has {kb} experts");
        for g in epsilon_k(&sets, kb)? {
            println!(
                "  experts {:?}  meet {}  delta {:.3}",
                g.members,
                frame.format(g.intersection),
                delta_group(&g)
            );
        }
    }

    let experts = [
        MassFunction::from_exprs(&frame, &[("A|B", 0.8), ("THETA", 0.2)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("B|C", 0.8), ("THETA", 0.2)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("A|C", 0.8), ("THETA", 0.2)], World::Closed)?,
    ];
    let fused = emix(&experts)?;
    println!("\nemix:");
    for (set, mass) in fused.iter() {
        println!("  {:<8}{mass:.4}", frame.format(set));
    }

    println!("\nworst-case work on 10 singletons, 5 focal sets each:");
    for m in [2, 4, 8] {
        match emix_complexity_probe(10, m, 5) {
            Ok(cost) => println!("  {m} experts: {cost}"),
            Err(e) => println!("  {m} experts: {e}"),
        }
    }
    Ok(())
}
