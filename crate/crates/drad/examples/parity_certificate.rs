//! A close look at one parity certificate: build the GF(2) system for
//! (G11(p), <y, z^2>), run elimination, and re-check the infeasibility
//! combination by XORing the named rows.
//!
//! ```bash
//! cargo run -p drad --example parity_certificate [p]
//! ```

use drad::bits::SubsetBits;
use drad::group::{make_family, Family, FamilySpec};
use drad::obstruction::{build_parity_system, parity_obstruction, ObstructionCert};

fn main() -> drad::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("p must be an integer"))
        .unwrap_or(5);

    let g = make_family(&FamilySpec::new(Family::G11, p)?)?;
    let y = g.generator("y").unwrap();
    let z = g.generator("z").unwrap();
    let z2 = g.mul(z, z);
    let h = g.subgroup_generated(&SubsetBits::from_indices(g.order(), &[y, z2]));

    let sys = build_parity_system(&g, &h)?;
    println!(
        "system for ({}, <y,z^2>): {} variables, {} rows",
        g.name(),
        sys.vars,
        sys.rows.len()
    );

    let cert = parity_obstruction(&g, &h)?.expect("this system is infeasible");
    let ObstructionCert::ParityInfeasible { combination, .. } = &cert else {
        unreachable!()
    };
    println!("contradiction from rows {combination:?}:");
    for &i in combination {
        println!("  row {i}: {:?} (rhs {})", sys.rows[i].source, sys.rows[i].rhs as u8);
    }
    println!(
        "XOR check passes: {}",
        sys.verify_infeasibility(combination)
    );
    cert.revalidate(&g)?;
    println!("full certificate re-validation passes");
    println!("\ncertificate JSON:\n{}", serde_json::to_string_pretty(&cert).unwrap());
    Ok(())
}
