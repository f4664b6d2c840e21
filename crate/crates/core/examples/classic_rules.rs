//! The classic rules on two doctors who agree only on an unlikely diagnosis.
//!
//! ```text
//! cargo run --example classic_rules
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use belief_fusion::{
    conjunctive, dempster, disjunctive, dubois_prade, florea, global_conflict, weighted_conflict_repartition, yager,
    Frame, MassFunction, World,
};

fn show(name: &str, m: &MassFunction) {
    let frame = m.frame();
    let cells: Vec<String> = m.iter().map(|(s, v)| format!("{}={v:.4}", frame.format(s))).collect();
    println!("{name:<12} {}", cells.join("  "));
}

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["meningitis", "concussion", "tumor"])?);
    let doctors = [
        MassFunction::from_exprs(&frame, &[("meningitis", 0.9), ("tumor", 0.1)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("concussion", 0.9), ("tumor", 0.1)], World::Closed)?,
    ];

    println!("global conflict k = {:.2}\n", global_conflict(&doctors)?);
    show("conjunctive", &conjunctive(&doctors)?);
    show("dempster", &dempster(&doctors)?);
    show("yager", &yager(&doctors)?);
    show("disjunctive", &disjunctive(&doctors)?);
    show("dubois-prade", &dubois_prade(&doctors)?);
    show("florea", &florea(&doctors)?);

    // Half of the conflict to each of the two disputed diagnoses.
    let weights = BTreeMap::from([
        (frame.parse("meningitis")?, 0.5),
        (frame.parse("concussion")?, 0.5),
    ]);
    show("weighted", &weighted_conflict_repartition(&doctors, &weights)?);
    Ok(())
}
