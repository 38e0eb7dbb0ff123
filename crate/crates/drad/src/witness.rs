//! Witness files: the plain-text persistence format for a found (or
//! claimed) DRAD difference set.
//!
//! ```text
//! order 16
//! group 16.2
//! H: 0 2 8 10
//! D: 1 4 5 6 11 13
//! ```
//!
//! Group names resolve to tables: `16.2` means catalog order 16 entry 2,
//! `G15(5)` means the family instance at p = 5.

use std::path::Path;

use crate::bits::SubsetBits;
use crate::design::{is_drad, DradVerdict};
use crate::error::{Error, Result};
use crate::group::{catalog_entries, make_family, Family, FamilySpec, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub order: usize,
    pub group: String,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
}

impl Witness {
    pub fn to_text(&self) -> String {
        let fmt = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "order {}\ngroup {}\nH: {}\nD: {}\n",
            self.order,
            self.group,
            fmt(&self.h),
            fmt(&self.d)
        )
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut order = None;
        let mut group = None;
        let mut h = None;
        let mut d = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = ln + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: lineno,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("order ") {
                order = Some(rest.trim().parse::<usize>().map_err(|_| err("bad order"))?);
            } else if let Some(rest) = line.strip_prefix("group ") {
                group = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("H:") {
                h = Some(parse_indices(rest, lineno)?);
            } else if let Some(rest) = line.strip_prefix("D:") {
                d = Some(parse_indices(rest, lineno)?);
            } else {
                return Err(err("unrecognized line"));
            }
        }
        let missing = |what: &str| Error::Parse {
            line: 0,
            msg: format!("missing {what} line"),
        };
        Ok(Witness {
            order: order.ok_or_else(|| missing("order"))?,
            group: group.ok_or_else(|| missing("group"))?,
            h: h.ok_or_else(|| missing("H:"))?,
            d: d.ok_or_else(|| missing("D:"))?,
        })
    }

    /// Rebuilds the named group and runs the full DRAD verdict.
    pub fn verify(&self) -> Result<(GroupTable, DradVerdict)> {
        let g = resolve_group(&self.group)?;
        if g.order() != self.order {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "stated order {} but group {} has order {}",
                    self.order,
                    self.group,
                    g.order()
                ),
            });
        }
        for &e in self.h.iter().chain(&self.d) {
            if e >= g.order() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("element index {e} out of range"),
                });
            }
        }
        let h = SubsetBits::from_indices(g.order(), &self.h);
        let d = SubsetBits::from_indices(g.order(), &self.d);
        let verdict = is_drad(&g, &h, &d)?;
        Ok((g, verdict))
    }
}

fn parse_indices(s: &str, lineno: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad element index {tok:?}"),
            })
        })
        .collect()
}

/// Resolves a group name to a table: `<order>.<id>` from the catalog, or
/// `<family>(<p>)` for the presentation families.
pub fn resolve_group(name: &str) -> Result<GroupTable> {
    if let Some((fam, rest)) = name.split_once('(') {
        let p: u64 = rest
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::UnknownGroupName(name.to_string()))?;
        let family: Family = fam.parse()?;
        return make_family(&FamilySpec::new(family, p)?);
    }
    if let Some((order, id)) = name.split_once('.') {
        let order: usize = order
            .parse()
            .map_err(|_| Error::UnknownGroupName(name.to_string()))?;
        let id: usize = id
            .parse()
            .map_err(|_| Error::UnknownGroupName(name.to_string()))?;
        let entry = catalog_entries(order)?
            .into_iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownGroupName(name.to_string()))?;
        return entry.collect();
    }
    Err(Error::UnknownGroupName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{candidate_subgroups, DradClause};
    use crate::search::{search_drad, SearchOptions};

    fn some_witness() -> Witness {
        let g = resolve_group("16.2").unwrap();
        let h = candidate_subgroups(&g).unwrap()[0].clone();
        let (ws, _) = search_drad(&g, &h, &SearchOptions::default()).unwrap();
        assert!(!ws.is_empty());
        Witness {
            order: 16,
            group: "16.2".into(),
            h: h.to_indices(),
            d: ws[0].to_indices(),
        }
    }

    #[test]
    fn round_trip_and_verify() {
        let w = some_witness();
        let text = w.to_text();
        let back = Witness::parse(&text).unwrap();
        assert_eq!(w, back);
        let (_, verdict) = back.verify().unwrap();
        assert!(verdict.accepted());
    }

    #[test]
    fn swapped_inverse_fails_disjointness() {
        let mut w = some_witness();
        let g = resolve_group(&w.group).unwrap();
        w.d[0] = g.inv(w.d[1]);
        let (_, verdict) = w.verify().unwrap();
        assert!(!verdict.accepted());
        assert_eq!(verdict.first_failure, Some(DradClause::DisjointInverse));
    }

    #[test]
    fn non_subgroup_h_is_an_error() {
        let mut w = some_witness();
        // {1, b, b^2, a} is not multiplicatively closed.
        w.h = vec![0, 1, 2, 4];
        assert!(matches!(w.verify(), Err(Error::BadSubgroup(_)) | Err(Error::NotASubgroup)));
        // Wrong-size subgroups are rejected before anything else.
        let mut w2 = some_witness();
        w2.h = vec![0];
        assert!(matches!(w2.verify(), Err(Error::BadSubgroup(_))));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "order 16\ngroup 16.2\nH: 0 a 8 10\nD: 1\n";
        match Witness::parse(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            Witness::parse("order 16\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Witness::parse("nonsense\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn family_names_resolve() {
        let g = resolve_group("G15(5)").unwrap();
        assert_eq!(g.order(), 100);
        assert!(resolve_group("G15(7)").is_err());
        assert!(resolve_group("Q8(3)").is_err());
        assert!(resolve_group("17.1").is_err());
        assert!(resolve_group("gibberish").is_err());
    }
}
