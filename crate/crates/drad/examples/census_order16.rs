//! Census of all 14 groups of order 16: which of them carry a DRAD
//! difference set, and for the one that does, what the witnesses look
//! like.
//!
//! ```bash
//! cargo run -p drad --example census_order16
//! ```

use drad::design::drad_params;
use drad::search::{census, SearchOptions};

fn main() -> drad::Result<()> {
    let report = census(16, &SearchOptions::default())?;
    println!("order-16 census: {} groups", report.groups.len());
    for gc in &report.groups {
        let status = if let Some(cert) = &gc.no_candidate_cert {
            cert.conclusion()
        } else {
            let witnesses: usize = gc.outcomes.iter().map(|o| o.witnesses.len()).sum();
            format!(
                "{} candidate H, {} witness(es)",
                gc.candidates.len(),
                witnesses
            )
        };
        println!("  {:6} {:14} {}", gc.group, gc.label, status);
        for o in &gc.outcomes {
            for w in &o.witnesses {
                println!("      H = {:?} D = {:?}", o.h, w);
            }
        }
    }
    let params = drad_params(4)?;
    println!(
        "\nexpected parameters for any witness: ({}, {}, {})",
        params.v, params.k, params.lambda
    );
    println!(
        "groups with witnesses: {}",
        report.groups_with_witnesses
    );
    Ok(())
}
