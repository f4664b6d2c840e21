//! The mixed rule: each tuple is split between the intersection and the union
//! of its responses according to how dissimilar they are.

use std::sync::Arc;

use belief_fusion::{delta_jaccard, delta_min, mix, DissimilarityKind, FocalSet, Frame, MassFunction, World};

fn main() -> belief_fusion::Result<()> {
    let frame = Arc::new(Frame::new(["A", "B", "C"])?);
    let columns = ["A", "A|B", "THETA"];
    let rows = ["B", "A|C", "THETA"];

    for (title, delta) in [("min-based", delta_min as fn(&[FocalSet]) -> belief_fusion::Result<f64>), ("jaccard", delta_jaccard)] {
        println!("{title}");
        print!("{:>8}", "");
        for c in columns {
            print!("{c:>8}");
        }
        println!();
        for r in rows {
            print!("{r:>8}");
            for c in columns {
                print!("{:>8.3}", delta(&[frame.parse(c)?, frame.parse(r)?])?);
            }
            println!();
        }
        println!();
    }

    let experts = [
        MassFunction::from_exprs(&frame, &[("A", 0.3), ("A|B", 0.4), ("THETA", 0.3)], World::Closed)?,
        MassFunction::from_exprs(&frame, &[("B", 0.2), ("A|C", 0.5), ("THETA", 0.3)], World::Closed)?,
    ];
    for kind in [DissimilarityKind::MinBased, DissimilarityKind::JaccardBased, DissimilarityKind::Constant(0.5)] {
        let m = mix(&experts, kind)?;
        let cells: Vec<String> = m.iter().map(|(s, v)| format!("{}={v:.3}", frame.format(s))).collect();
        println!("{:<14} {}", format!("{kind:?}"), cells.join("  "));
    }
    Ok(())
}
