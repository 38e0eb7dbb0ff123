//! Run every nonexistence engine over all six families, reproducing the
//! full case analysis: G4, G13, G16 fall to the involution bound, G11 and
//! G14 to character arguments, and G15 only to the Boolean-ring replay.
//!
//! ```bash
//! cargo run -p drad --example obstruction_gallery [p]
//! ```

use drad::boolring::replay_g15;
use drad::design::candidate_subgroups;
use drad::group::{make_family, Family, FamilySpec};
use drad::obstruction::{involution_obstruction, lemma_test, parity_obstruction};

fn main() -> drad::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("p must be an integer"))
        .unwrap_or(5);

    for family in Family::ALL {
        let Ok(spec) = FamilySpec::new(family, p) else {
            println!("{family}({p}): no instance at this prime\n");
            continue;
        };
        let g = make_family(&spec)?;
        println!("{}", g.name());

        if let Some(cert) = involution_obstruction(&g)? {
            cert.revalidate(&g)?;
            println!("  involution bound: {}\n", cert.conclusion());
            continue;
        }
        println!("  involution bound: silent");

        for h in candidate_subgroups(&g)? {
            println!("  H = {:?}", h.to_indices());
            if let Some(cert) = lemma_test(&g, &h) {
                cert.revalidate(&g)?;
                println!("    character field: {}", cert.conclusion());
                continue;
            }
            println!("    character field: silent");
            if let Some(cert) = parity_obstruction(&g, &h)? {
                cert.revalidate(&g)?;
                println!("    parity system: {}", cert.conclusion());
                continue;
            }
            println!("    parity system: silent");
            if family == Family::G15 {
                let (cert, replay) = replay_g15(p)?;
                cert.revalidate(&g)?;
                println!(
                    "    boolean-ring replay: all {} identities verified -- {}",
                    replay.identities.len(),
                    cert.conclusion()
                );
            }
        }
        println!();
    }
    Ok(())
}
