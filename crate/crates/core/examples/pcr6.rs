//! Proportional conflict redistribution for three experts, its shaped
//! variants, and why it has to be computed in one M-ary pass.

use std::sync::Arc;

use belief_fusion::{pcr6, pcr6f, pcr6g, pcr_two, Frame, MassFunction, ShapingFunction, World};

fn show(name: &str, m: &MassFunction) {
    let frame = m.frame();
    let cells: Vec<String> = m.iter().map(|(s, v)| format!("{}={v:.4}", frame.format(s))).collect();
    println!("{name:<16} {}", cells.join("  "));
}

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["A", "B", "C", "D"])?);
    let experts = [
        MassFunction::from_exprs(&frame, &[("A", 0.7), ("THETA", 0.3)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("B", 0.5), ("THETA", 0.5)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("A|C", 0.6), ("THETA", 0.4)], World::Closed)?,
    ];

    show("pcr6", &pcr6(&experts)?);
    show("pcr6f x^2", &pcr6f(&experts, &ShapingFunction::Power(2.0))?);
    show("pcr6f sqrt", &pcr6f(&experts, &ShapingFunction::Power(0.5))?);
    let step = ShapingFunction::Table(vec![(0.0, 0.1), (0.5, 1.0), (1.0, 1.0)]);
    show("pcr6g table", &pcr6g(&experts, &step)?);

    println!();
    show("pcr (2 experts)", &pcr_two(&experts[0], &experts[1])?);
    show("pcr6 (2 experts)", &pcr6(&experts[..2])?);

    let folded = pcr6(&[pcr6(&experts[..2])?, experts[2].clone()])?;
    println!();
    show("pairwise fold", &folded);
    println!("fold vs M-ary: max gap {:.4}", folded.max_abs_diff(&pcr6(&experts)?));
    Ok(())
}
