//! Runs the exhaustive minimality verification for small parameters and
//! the full lemma chain, printing one line per report.
//!
//!     cargo run --release --example minimality_sweep

use skew_energy::verify::{cmd_check_lemmas, cmd_minimality};

fn main() {
    println!("minimality of the all-evenly theta member over its diameter class:");
    for (n, d) in [(6, 3), (7, 4), (8, 4), (9, 5)] {
        let report = cmd_minimality(n, d).unwrap();
        println!(
            "  (n={n}, d={d}): {:?}, {} graphs, {} orientation classes, {} ms",
            report.status, report.graphs_examined, report.orientation_classes_examined,
            report.wall_time_ms
        );
        for w in &report.witnesses {
            let energy = w.energy.map(|e| format!(" E={e:.6}")).unwrap_or_default();
            println!("      {:<26} {} [{}]{energy}", w.note, w.graph6, w.coeffs.join(", "));
        }
    }

    println!("\ncomparison lemma chain at max order 8:");
    for report in cmd_check_lemmas(8).unwrap() {
        println!(
            "  {:<11} {:?}: {} graphs, {} cases, {} ms",
            report.claim,
            report.status,
            report.graphs_examined,
            report.orientation_classes_examined,
            report.wall_time_ms
        );
    }

    println!("\nevery report is also available as machine-readable JSON:");
    println!("{}", cmd_minimality(6, 3).unwrap().to_json_line());
}
