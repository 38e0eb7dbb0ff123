//! Build the six presentation families of order 4p^2 and inspect the
//! structure the rest of the toolkit relies on: generator relations,
//! involutions and what they generate, and the admissible subgroups H.
//!
//! ```bash
//! cargo run -p drad --example families_tour [p]
//! ```

use drad::design::candidate_subgroups;
use drad::group::{make_family, Family, FamilySpec};

fn main() -> drad::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("p must be an integer"))
        .unwrap_or(5);

    for family in Family::ALL {
        let spec = match FamilySpec::new(family, p) {
            Ok(s) => s,
            Err(e) => {
                println!("{family}({p}): no instance ({e})");
                continue;
            }
        };
        let g = make_family(&spec)?;
        println!("{} -- order {}", g.name(), g.order());
        if let Some(f) = spec.f {
            println!("  f = {f} (f^2 = -1 mod {})", p.pow(family.f_exponent().unwrap()));
        }
        for (name, e) in g.generators() {
            println!("  |{name}| = {}", g.element_order(*e));
        }
        // The conjugation relations, read back from the table.
        let z = g.generator("z").unwrap();
        let x = g.generator("x").unwrap();
        println!("  x^z = index {}", g.conj(x, z));
        let inv = g.involutions();
        let sub = g.subgroup_generated(&inv);
        println!(
            "  {} involutions, generating a subgroup of order {}",
            inv.count(),
            sub.count()
        );
        let candidates = candidate_subgroups(&g)?;
        match candidates.len() {
            0 => println!("  no admissible H: nonexistence is already settled"),
            n => println!("  {n} admissible subgroup(s) H of order {}", 2 * p),
        }
        println!();
    }
    Ok(())
}
