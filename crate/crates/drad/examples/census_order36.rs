//! Census of all 14 groups of order 36: none admits a DRAD difference
//! set, each nonexistence settled by exhaustive search or by the absence
//! of an admissible subgroup.
//!
//! ```bash
//! cargo run -p drad --example census_order36
//! ```

use drad::search::{census, SearchOptions};

fn main() -> drad::Result<()> {
    let start = std::time::Instant::now();
    let report = census(36, &SearchOptions::default())?;
    println!("order-36 census: {} groups", report.groups.len());
    for gc in &report.groups {
        let status = if let Some(cert) = &gc.no_candidate_cert {
            cert.conclusion()
        } else {
            let nodes: u64 = gc.outcomes.iter().map(|o| o.stats.nodes).sum();
            format!(
                "{} candidate H, searched {} nodes, {} witnesses",
                gc.candidates.len(),
                nodes,
                gc.outcomes.iter().map(|o| o.witnesses.len()).sum::<usize>()
            )
        };
        println!("  {:6} {:14} {}", gc.group, gc.label, status);
    }
    println!(
        "\ngroups with witnesses: {} (elapsed {:?})",
        report.groups_with_witnesses,
        start.elapsed()
    );
    Ok(())
}
