//! Walk the shipped catalog: collect every power-conjugate presentation
//! into a validated table and print the fingerprint that separates the
//! groups pairwise.
//!
//! ```bash
//! cargo run -p drad --example small_groups_catalog [order]
//! ```

use drad::group::{catalog_entries, GroupFingerprint};

fn main() -> drad::Result<()> {
    let order: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(16);

    let entries = catalog_entries(order)?;
    println!("{} groups of order {order}\n", entries.len());
    for entry in &entries {
        let g = entry.collect()?;
        let fp = GroupFingerprint::of(&g);
        println!("{}.{:<2} {}", order, entry.id, entry.name);
        println!("  relative orders {:?}", entry.gen_orders);
        let orders: Vec<String> = fp
            .element_orders
            .iter()
            .map(|(o, c)| format!("{o}^{c}"))
            .collect();
        println!("  element orders  {}", orders.join(" "));
        println!(
            "  center {}, abelianization of size {}, {} conjugacy classes",
            fp.center_size,
            fp.abelianization_orders.iter().map(|(_, c)| c).sum::<usize>(),
            fp.class_count
        );
    }
    Ok(())
}
