//! From fused masses to a decision: discounting an unreliable source,
//! measuring conflict and betting with the pignistic transform.

use std::sync::Arc;

use belief_fusion::{auto_conflict, global_conflict, pcr6, Frame, MassFunction, World};

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["friend", "neutral", "hostile"])?);
    let radar = MassFunction::from_exprs(&frame, &[("hostile", 0.6), ("neutral", 0.3), ("THETA", 0.1)], World::Closed)?;
    let transponder = MassFunction::from_exprs(&frame, &[("friend", 0.8), ("THETA", 0.2)], World::Closed)?;
    let pilot = MassFunction::from_exprs(&frame, &[("neutral|hostile", 0.7), ("THETA", 0.3)], World::Closed)?;

    println!("self-conflict of the radar:");
    for order in 2..=4 {
        println!("  order {order}: {:.4}", auto_conflict(&radar, order)?);
    }

    for reliability in [1.0, 0.5, 0.1] {
        let sources = [radar.clone(), transponder.discount(reliability)?, pilot.clone()];
        let fused = pcr6(&sources)?;
        let bet = fused.pignistic()?;
        let probs: Vec<String> = bet.iter().map(|(label, p)| format!("{label}={p:.3}")).collect();
        println!(
            "\ntransponder reliability {reliability}: conflict {:.3}\n  {}\n  decision: {}",
            global_conflict(&sources)?,
            probs.join("  "),
            bet.decision()
        );
    }
    Ok(())
}
