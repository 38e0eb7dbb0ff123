//! Difference-set and DRAD verification.
//!
//! A `(v, k, lambda)` difference set is a subset `D` of a group of order
//! `v` with `|D| = k` such that every non-identity element occurs exactly
//! `lambda` times among the quotients `a b^-1` with `a, b in D`. The DRAD
//! refinement asks in addition for a normal subgroup `H` with
//! `D` disjoint from `D^-1` and `G \ (D u D^-1) = H`, which forces
//! `|G| = h^2` for `h = |H|` and pins the parameters to
//! `(h^2, h(h-1)/2, h(h-2)/4)`.

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// The parameter triple forced on a DRAD difference set by its subgroup
/// order `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DesignParams {
    pub h: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

/// Parameters for subgroup order `h`: `v = h^2`, `k = h(h-1)/2`,
/// `lambda = h(h-2)/4`. Requires `h` even and at least 4.
pub fn drad_params(h: usize) -> Result<DesignParams> {
    if h < 4 || h % 2 != 0 {
        return Err(Error::BadSubgroupOrder { h });
    }
    let params = DesignParams {
        h,
        v: h * h,
        k: h * (h - 1) / 2,
        lambda: h * (h - 2) / 4,
    };
    debug_assert_eq!(params.k - params.lambda, h * h / 4);
    // lambda = t(t-1) for t = h/2, so it is always even; the Boolean-ring
    // engine relies on this to drop lambda from its relations.
    debug_assert_eq!(params.lambda % 2, 0);
    Ok(params)
}

/// `counts[g] = #{(a, b) in D x D : a b^-1 = g}`.
///
/// `counts[0]` is `|D|` and the total off the identity is `|D|^2 - |D|`.
pub fn difference_multiset(g: &GroupTable, d: &SubsetBits) -> Vec<usize> {
    let mut counts = vec![0usize; g.order()];
    let members = d.to_indices();
    for &a in &members {
        for &b in &members {
            counts[g.mul(a, g.inv(b))] += 1;
        }
    }
    counts
}

/// Returns `lambda` when the difference multiset is constant off the
/// identity, `None` otherwise.
pub fn is_difference_set(g: &GroupTable, d: &SubsetBits) -> Option<usize> {
    let counts = difference_multiset(g, d);
    if g.order() == 1 {
        return Some(0);
    }
    let lambda = counts[1];
    if counts[1..].iter().all(|&c| c == lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// The clause that first rejected a candidate, in the fixed evaluation
/// order used by [`is_drad`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DradClause {
    DisjointInverse,
    ComplementIsH,
    CosetBalance,
    Lambda,
}

/// Full evaluation of the DRAD conditions for a triple `(G, H, D)`.
#[derive(Clone, Debug, Serialize)]
pub struct DradVerdict {
    /// `lambda` when the difference multiset is constant off the identity.
    pub lambda_found: Option<usize>,
    /// `D` and `D^-1` are disjoint.
    pub disjoint_inverse: bool,
    /// `G \ (D u D^-1)` equals `H` exactly.
    pub complement_is_h: bool,
    /// `|D n Hg|` for every coset, in coset order (`H` itself first).
    pub coset_sizes: Vec<usize>,
    /// First failing clause; `None` means the triple is accepted.
    pub first_failure: Option<DradClause>,
}

impl DradVerdict {
    pub fn accepted(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks every DRAD clause for `(G, H, D)`.
///
/// `H` must be a normal subgroup with `|H|^2 = |G|`; anything else is a
/// caller error, not a rejected candidate.
pub fn is_drad(g: &GroupTable, h: &SubsetBits, d: &SubsetBits) -> Result<DradVerdict> {
    let hsize = h.count();
    if hsize * hsize != g.order() {
        return Err(Error::BadSubgroup(format!(
            "|H| = {hsize} but |G| = {}",
            g.order()
        )));
    }
    if !g.is_normal(h) {
        return Err(Error::BadSubgroup("H is not a normal subgroup".into()));
    }

    let mut d_inv = SubsetBits::new(g.order());
    for e in d.iter() {
        d_inv.insert(g.inv(e));
    }
    let disjoint_inverse = d.intersect(&d_inv).is_empty();
    let complement_is_h = d.union(&d_inv).complement() == *h;
    let cosets = g.cosets(h)?;
    let coset_sizes: Vec<usize> = cosets.iter().map(|c| c.intersect(d).count()).collect();
    let balanced = coset_sizes[1..].iter().all(|&s| s == hsize / 2) && coset_sizes[0] == 0;
    let lambda_found = is_difference_set(g, d);
    let expected_lambda = hsize * hsize.saturating_sub(2) / 4;

    let first_failure = if !disjoint_inverse {
        Some(DradClause::DisjointInverse)
    } else if !complement_is_h {
        Some(DradClause::ComplementIsH)
    } else if !balanced {
        Some(DradClause::CosetBalance)
    } else if lambda_found != Some(expected_lambda) {
        Some(DradClause::Lambda)
    } else {
        None
    };

    Ok(DradVerdict {
        lambda_found,
        disjoint_inverse,
        complement_is_h,
        coset_sizes,
        first_failure,
    })
}

/// All normal subgroups of order `sqrt(|G|)` that contain every involution
/// of `G` (more precisely the subgroup the involutions generate). Only
/// these can serve as the subgroup of a DRAD difference set, so an empty
/// result is already a nonexistence certificate.
pub fn candidate_subgroups(g: &GroupTable) -> Result<Vec<SubsetBits>> {
    let h = isqrt(g.order()).ok_or(Error::NotSquareOrder { order: g.order() })?;
    let inv_subgroup = g.subgroup_generated(&g.involutions());
    if inv_subgroup.count() > h {
        return Ok(Vec::new());
    }
    Ok(g.normal_subgroups_of_order(h)
        .into_iter()
        .filter(|s| inv_subgroup.is_subset_of(s))
        .collect())
}

pub(crate) fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_family, Family, FamilySpec};

    #[test]
    fn params_table() {
        assert_eq!(
            drad_params(4).unwrap(),
            DesignParams { h: 4, v: 16, k: 6, lambda: 2 }
        );
        assert_eq!(
            drad_params(10).unwrap(),
            DesignParams { h: 10, v: 100, k: 45, lambda: 20 }
        );
        assert_eq!(
            drad_params(6).unwrap(),
            DesignParams { h: 6, v: 36, k: 15, lambda: 6 }
        );
        assert!(matches!(drad_params(5), Err(Error::BadSubgroupOrder { h: 5 })));
        assert!(matches!(drad_params(2), Err(Error::BadSubgroupOrder { h: 2 })));
    }

    #[test]
    fn quadratic_residue_set_in_c7() {
        // Brute-force oracle: count the 9 ordered pairs directly.
        let g = GroupTable::cyclic(7);
        let d = SubsetBits::from_indices(7, &[1, 2, 4]);
        let mut oracle = vec![0usize; 7];
        for a in [1usize, 2, 4] {
            for b in [1usize, 2, 4] {
                oracle[(a + 7 - b) % 7] += 1;
            }
        }
        assert_eq!(difference_multiset(&g, &d), oracle);
        assert_eq!(&oracle[1..], &[1, 1, 1, 1, 1, 1]);
        assert_eq!(is_difference_set(&g, &d), Some(1));
    }

    #[test]
    fn multiset_edge_cases() {
        let g = GroupTable::cyclic(5);
        let empty = SubsetBits::new(5);
        assert_eq!(difference_multiset(&g, &empty), vec![0; 5]);
        let all = SubsetBits::full(5);
        assert_eq!(difference_multiset(&g, &all), vec![5; 5]);
        let single = SubsetBits::singleton(5, 2);
        assert_eq!(is_difference_set(&g, &single), Some(0));
        // {1, x} in the cyclic group of order 4 is not a difference set.
        let g4 = GroupTable::cyclic(4);
        let d = SubsetBits::from_indices(4, &[0, 1]);
        assert_eq!(is_difference_set(&g4, &d), None);
    }

    #[test]
    fn multiset_symmetry_and_total() {
        // counts[g] = counts[g^-1] and the off-identity total is |D|^2-|D|.
        let mut state = 42u64;
        let mut next = move |n: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        let groups = [
            GroupTable::cyclic(24),
            make_family(&FamilySpec::new(Family::G13, 5).unwrap()).unwrap(),
        ];
        for g in &groups {
            for _ in 0..100 {
                let mut d = SubsetBits::new(g.order());
                for _ in 0..next(g.order()) {
                    d.insert(next(g.order()));
                }
                let counts = difference_multiset(g, &d);
                let size = d.count();
                assert_eq!(counts[0], size);
                assert_eq!(
                    counts[1..].iter().sum::<usize>(),
                    size * size - size
                );
                for e in 0..g.order() {
                    assert_eq!(counts[e], counts[g.inv(e)]);
                }
            }
        }
    }

    #[test]
    fn drad_rejects_inverse_overlap() {
        let g = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let h = &candidate_subgroups(&g).unwrap()[0];
        // Any D containing an element and its inverse fails clause one.
        let x = g.generator("x").unwrap();
        let z = g.generator("z").unwrap();
        let bad = SubsetBits::from_indices(100, &[g.mul(x, z), g.inv(g.mul(x, z))]);
        let verdict = is_drad(&g, h, &bad).unwrap();
        assert_eq!(verdict.first_failure, Some(DradClause::DisjointInverse));
    }

    #[test]
    fn drad_rejects_unbalanced_halving() {
        // Take one element from each inverse pair, but greedily in index
        // order, so the complement is H yet balance generally fails.
        let g = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let h = candidate_subgroups(&g).unwrap()[0].clone();
        let mut d = SubsetBits::new(g.order());
        let mut taken = SubsetBits::new(g.order());
        for e in 0..g.order() {
            if h.contains(e) || taken.contains(e) {
                continue;
            }
            d.insert(e);
            taken.insert(e);
            taken.insert(g.inv(e));
        }
        let verdict = is_drad(&g, &h, &d).unwrap();
        assert!(verdict.disjoint_inverse);
        assert!(verdict.complement_is_h);
        assert!(!verdict.accepted());
        assert!(matches!(
            verdict.first_failure,
            Some(DradClause::CosetBalance) | Some(DradClause::Lambda)
        ));
    }

    #[test]
    fn drad_bad_subgroup_errors() {
        let g = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let d = SubsetBits::new(100);
        let too_small = SubsetBits::singleton(100, 0);
        assert!(matches!(is_drad(&g, &too_small, &d), Err(Error::BadSubgroup(_))));
    }

    #[test]
    fn candidates_for_the_families() {
        let g11 = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let c11 = candidate_subgroups(&g11).unwrap();
        assert_eq!(c11.len(), 2);
        let x = g11.generator("x").unwrap();
        let y = g11.generator("y").unwrap();
        let z2 = g11.pow(g11.generator("z").unwrap(), 2);
        let xz2 = g11.subgroup_generated(&SubsetBits::from_indices(100, &[x, z2]));
        let yz2 = g11.subgroup_generated(&SubsetBits::from_indices(100, &[y, z2]));
        assert!(c11.contains(&xz2) && c11.contains(&yz2));

        let g15 = make_family(&FamilySpec::new(Family::G15, 5).unwrap()).unwrap();
        let c15 = candidate_subgroups(&g15).unwrap();
        assert_eq!(c15.len(), 1);
        let y = g15.generator("y").unwrap();
        let z2 = g15.pow(g15.generator("z").unwrap(), 2);
        assert_eq!(
            c15[0],
            g15.subgroup_generated(&SubsetBits::from_indices(100, &[y, z2]))
        );

        // G4: the involutions already generate half the group.
        let g4 = make_family(&FamilySpec::new(Family::G4, 5).unwrap()).unwrap();
        assert!(candidate_subgroups(&g4).unwrap().is_empty());
    }

    #[test]
    fn candidates_need_square_order() {
        let g = GroupTable::cyclic(12);
        assert!(matches!(
            candidate_subgroups(&g),
            Err(Error::NotSquareOrder { order: 12 })
        ));
    }
}
