//! Witness files end to end: search for a DRAD difference set, write it
//! to the plain-text witness format, verify it back, then tamper with it
//! and watch the verifier name the violated clause.
//!
//! ```bash
//! cargo run -p drad --example verify_witness
//! ```

use drad::design::candidate_subgroups;
use drad::search::{search_drad, SearchOptions};
use drad::witness::{resolve_group, Witness};

fn main() -> drad::Result<()> {
    let g = resolve_group("16.2")?;
    let h = candidate_subgroups(&g)?
        .pop()
        .expect("16.2 has an admissible subgroup");
    let opts = SearchOptions {
        limit: Some(1),
        ..Default::default()
    };
    let (witnesses, stats) = search_drad(&g, &h, &opts)?;
    println!(
        "search over {}: first witness after {} nodes",
        g.name(),
        stats.nodes
    );

    let witness = Witness {
        order: g.order(),
        group: g.name().to_string(),
        h: h.to_indices(),
        d: witnesses[0].to_indices(),
    };
    let path = std::env::temp_dir().join("drad_example_witness.txt");
    witness.write(&path)?;
    println!("wrote {}:\n{}", path.display(), witness.to_text());

    let (_, verdict) = Witness::read(&path)?.verify()?;
    println!(
        "verify: {} (lambda = {:?}, coset intersections {:?})",
        if verdict.accepted() { "ACCEPT" } else { "REJECT" },
        verdict.lambda_found,
        verdict.coset_sizes
    );

    // Swap one element for its inverse: clause one must catch it.
    let mut tampered = witness.clone();
    tampered.d[0] = g.inv(tampered.d[1]);
    let (_, verdict) = tampered.verify()?;
    println!(
        "tampered copy: {} (first failing clause: {:?})",
        if verdict.accepted() { "ACCEPT" } else { "REJECT" },
        verdict.first_failure
    );
    std::fs::remove_file(&path).ok();
    Ok(())
}
