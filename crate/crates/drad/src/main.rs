//! Thin command-line front end; all functionality lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use drad::design::candidate_subgroups;
use drad::group::{catalog_entries, GroupFingerprint};
use drad::obstruction::{involution_obstruction, lemma_test, parity_obstruction};
use drad::pipeline::{run_pipeline, PipelineOptions, Selector};
use drad::report::RunReport;
use drad::search::{census, SearchOptions};
use drad::witness::Witness;
use drad::{Error, Family, FamilySpec, SubsetBits};

#[derive(Parser)]
#[command(
    name = "drad",
    version,
    about = "Difference sets disjoint from a subgroup: search, verification, and nonexistence certificates"
)]
struct Cli {
    /// Write the machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads for search subtrees.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Soft time budget in seconds for multi-target runs.
    #[arg(long, global = true, value_name = "SEC")]
    time_budget: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the shipped group catalog for an order.
    Catalog {
        #[arg(long)]
        order: usize,
    },
    /// Build one group and print its structure summary.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        p: u64,
        /// Override the automatically chosen f.
        #[arg(long)]
        f: Option<u64>,
    },
    /// Verify a witness file; exit 0 only if it is accepted.
    Verify { file: PathBuf },
    /// Exhaustive DRAD search over a catalog order or a family instance.
    Search {
        #[arg(long, conflicts_with_all = ["family", "p"])]
        order: Option<usize>,
        #[arg(long, requires = "p")]
        family: Option<Family>,
        #[arg(long)]
        p: Option<u64>,
        /// Stop after this many witnesses per (G, H).
        #[arg(long)]
        limit: Option<usize>,
        /// Write the first witness found to this file.
        #[arg(long, value_name = "PATH")]
        witness_out: Option<PathBuf>,
        /// Disable the coset-balance pruning rule (diagnostic).
        #[arg(long)]
        no_balance_prune: bool,
        /// Disable the lambda pruning rule (diagnostic).
        #[arg(long)]
        no_lambda_prune: bool,
    },
    /// Run the obstruction engines for one group.
    Obstruct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        p: u64,
        /// `auto` for all candidate subgroups, or explicit indices like
        /// `0,2,8,10`.
        #[arg(long, default_value = "auto")]
        subgroup: String,
    },
    /// Replay the symbolic nonexistence argument for G15(p).
    ReplayG15 {
        #[arg(long)]
        p: u64,
        /// Also confirm that the character engines stay silent here.
        #[arg(long)]
        check_lemmas: bool,
    },
    /// Full ladder: obstructions cheap-to-expensive, search as ground
    /// truth for small orders.
    Pipeline {
        #[arg(long, conflicts_with_all = ["family", "p", "witness"])]
        order: Option<usize>,
        #[arg(long, requires = "p")]
        family: Option<Family>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Run every engine even after one fires, for cross-validation.
        #[arg(long)]
        all_obstructions: bool,
        /// Search even above the default order bound.
        #[arg(long)]
        force_search: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::InternalInconsistency { group }) => {
            eprintln!("internal inconsistency: conflicting certificate and witness for {group}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Family instances larger than this would need multi-gigabyte tables.
const MAX_FAMILY_ORDER: u64 = 4 * 37 * 37;

fn check_family_size(p: u64) -> drad::Result<()> {
    if 4 * p * p > MAX_FAMILY_ORDER {
        return Err(Error::BadSubgroup(format!(
            "p = {p} gives order {} (table too large; max p is 37)",
            4 * p * p
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> drad::Result<ExitCode> {
    let json_out = cli.json.clone();
    let emit = |report: &RunReport| -> drad::Result<()> {
        print!("{}", report.render_text());
        if let Some(path) = &json_out {
            report.save(path)?;
            eprintln!("report written to {}", path.display());
        }
        Ok(())
    };

    match cli.cmd {
        Cmd::Catalog { order } => {
            let entries = catalog_entries(order)?;
            println!("{} groups of order {order}:", entries.len());
            for e in &entries {
                let table = e.collect()?;
                let fp = GroupFingerprint::of(&table);
                println!(
                    "  {order}.{:<2} {:16} generators of orders {:?}, center {}, {} classes",
                    e.id,
                    e.name,
                    e.gen_orders,
                    fp.center_size,
                    fp.class_count
                );
            }
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&entries)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { family, p, f } => {
            check_family_size(p)?;
            let spec = match f {
                Some(f) => FamilySpec::with_f(family, p, f)?,
                None => FamilySpec::new(family, p)?,
            };
            let g = drad::make_family(&spec)?;
            println!("{}: order {}", g.name(), g.order());
            for (name, e) in g.generators() {
                println!("  generator {name} = index {e}, order {}", g.element_order(*e));
            }
            let inv = g.involutions();
            let sub = g.subgroup_generated(&inv);
            println!("  involutions: {}, generating a subgroup of order {}", inv.count(), sub.count());
            println!("  center: order {}", g.center().count());
            let candidates = candidate_subgroups(&g)?;
            println!("  candidate subgroups H: {}", candidates.len());
            for c in &candidates {
                println!("    {:?}", c.to_indices());
            }
            if let Some(path) = &cli.json {
                let summary = serde_json::json!({
                    "group": g.name(),
                    "order": g.order(),
                    "generators": g.generators().iter().map(|(n, e)| (n.clone(), e)).collect::<Vec<_>>(),
                    "involutions": inv.count(),
                    "involution_subgroup_order": sub.count(),
                    "candidates": candidates.iter().map(|c| c.to_indices()).collect::<Vec<_>>(),
                });
                std::fs::write(path, serde_json::to_string_pretty(&summary)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { file } => {
            let witness = Witness::read(&file)?;
            let (g, verdict) = witness.verify()?;
            println!("group {} (order {})", witness.group, g.order());
            println!("  disjoint from inverses: {}", verdict.disjoint_inverse);
            println!("  complement is H:        {}", verdict.complement_is_h);
            println!("  coset intersections:    {:?}", verdict.coset_sizes);
            match verdict.lambda_found {
                Some(l) => println!("  difference multiset:    constant {l}"),
                None => println!("  difference multiset:    not constant"),
            }
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&verdict)?)?;
            }
            if verdict.accepted() {
                println!("verdict: ACCEPT");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verdict: REJECT ({:?})", verdict.first_failure.unwrap());
                Ok(ExitCode::FAILURE)
            }
        }
        Cmd::Search {
            order,
            family,
            p,
            limit,
            witness_out,
            no_balance_prune,
            no_lambda_prune,
        } => {
            let opts = SearchOptions {
                limit,
                threads: cli.threads,
                balance_prune: !no_balance_prune,
                lambda_prune: !no_lambda_prune,
                time_budget: cli.time_budget.map(Duration::from_secs),
            };
            let report: RunReport = match (order, family) {
                (Some(order), None) => census(order, &opts)?.into(),
                (None, Some(fam)) => {
                    let p = p.expect("clap enforces --p with --family");
                    check_family_size(p)?;
                    let g = drad::make_family(&FamilySpec::new(fam, p)?)?;
                    let gc = drad::search::census_one(&g, fam.as_str(), &opts)?;
                    let census = drad::search::CensusReport {
                        order: g.order(),
                        groups_with_witnesses: gc.has_witness() as usize,
                        groups: vec![gc],
                    };
                    census.into()
                }
                _ => {
                    return Err(Error::BadSubgroup(
                        "pass either --order or --family with --p".into(),
                    ))
                }
            };
            if let Some(path) = witness_out {
                let found = report.targets.iter().find_map(|t| {
                    t.subgroups.iter().find_map(|s| {
                        s.witnesses.first().map(|d| Witness {
                            order: t.order,
                            group: t.group.clone(),
                            h: s.h.clone(),
                            d: d.clone(),
                        })
                    })
                });
                match found {
                    Some(w) => {
                        w.write(&path)?;
                        eprintln!("witness written to {}", path.display());
                    }
                    None => eprintln!("no witness found; nothing written"),
                }
            }
            emit(&report)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Obstruct { family, p, subgroup } => {
            check_family_size(p)?;
            let g = drad::make_family(&FamilySpec::new(family, p)?)?;
            let subgroups: Vec<SubsetBits> = if subgroup == "auto" {
                candidate_subgroups(&g)?
            } else {
                let indices: Vec<usize> = subgroup
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse().map_err(|_| Error::Parse {
                            line: 0,
                            msg: format!("bad subgroup index {t:?}"),
                        })
                    })
                    .collect::<drad::Result<_>>()?;
                vec![SubsetBits::from_indices(g.order(), &indices)]
            };

            let mut certs = Vec::new();
            if let Some(cert) = involution_obstruction(&g)? {
                println!("involution: fired -- {}", cert.conclusion());
                certs.push(cert);
            } else {
                println!("involution: did not fire");
            }
            for h in &subgroups {
                println!("H = {:?}", h.to_indices());
                match lemma_test(&g, h) {
                    Some(cert) => {
                        println!("  character-field: fired -- {}", cert.conclusion());
                        certs.push(cert);
                    }
                    None => println!("  character-field: did not fire"),
                }
                match parity_obstruction(&g, h)? {
                    Some(cert) => {
                        println!("  parity: fired -- {}", cert.conclusion());
                        certs.push(cert);
                    }
                    None => println!("  parity: did not fire"),
                }
            }
            for cert in &certs {
                cert.revalidate(&g)?;
            }
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&certs)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ReplayG15 { p, check_lemmas } => {
            check_family_size(p)?;
            let (cert, replay) = drad::boolring::replay_g15(p)?;
            for (label, ok) in &replay.identities {
                println!("[{}] {label}", if *ok { "ok" } else { "FAIL" });
            }
            println!(
                "restricted sums: {:?} monomials; total {}; elapsed {} ms",
                replay.z_monomials, replay.total_monomials, replay.elapsed_ms
            );
            println!("{}", cert.conclusion());
            if check_lemmas {
                let g = drad::make_family(&FamilySpec::new(Family::G15, p)?)?;
                let h = candidate_subgroups(&g)?
                    .pop()
                    .expect("G15 has one candidate");
                let lemma = lemma_test(&g, &h);
                let parity = parity_obstruction(&g, &h)?;
                println!(
                    "character-field: {}, parity: {} (both silent is expected here)",
                    if lemma.is_some() { "fired" } else { "did not fire" },
                    if parity.is_some() { "fired" } else { "did not fire" },
                );
            }
            if let Some(path) = &cli.json {
                let out = serde_json::json!({
                    "replay": replay,
                    "certificate": cert,
                });
                std::fs::write(path, serde_json::to_string_pretty(&out)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Pipeline {
            order,
            family,
            p,
            witness,
            all_obstructions,
            force_search,
        } => {
            let selector = match (order, family, witness) {
                (Some(order), None, None) => Selector::Order(order),
                (None, Some(fam), None) => {
                    let p = p.expect("clap enforces --p with --family");
                    check_family_size(p)?;
                    Selector::Family { family: fam, p }
                }
                (None, None, Some(path)) => Selector::WitnessFile(path),
                _ => {
                    return Err(Error::BadSubgroup(
                        "pass exactly one of --order, --family with --p, or --witness".into(),
                    ))
                }
            };
            let opts = PipelineOptions {
                all_obstructions,
                force_search,
                threads: cli.threads,
                time_budget: cli.time_budget.map(Duration::from_secs),
                search_limit: None,
            };
            let report = run_pipeline(&selector, &opts)?;
            emit(&report)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
