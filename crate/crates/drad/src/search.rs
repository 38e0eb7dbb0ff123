//! Exhaustive backtracking search for DRAD difference sets.
//!
//! The disjointness conditions force exactly one element of every inverse
//! pair outside `H` into `D`, so the search space is one bit per pair. The
//! searcher walks pairs grouped by coset so the balance bound
//! `|D n Hg| = h/2` prunes as early as possible, and maintains the
//! difference multiset incrementally so any count exceeding `lambda` cuts
//! the branch. Both rules are exact: disabling them never changes the set
//! of witnesses found, only the node counts.

use serde::{Deserialize, Serialize};

use crate::bits::SubsetBits;
use crate::design::{candidate_subgroups, is_drad};
use crate::error::{Error, Result};
use crate::group::{load_catalog, Elem, GroupTable};
use crate::obstruction::ObstructionCert;

/// The inverse-pair skeleton for `(G, H)`: disjoint pairs `(g, g^-1)` with
/// `g < g^-1`, covering `G \ H` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairChoice {
    pub pairs: Vec<(Elem, Elem)>,
}

/// Counters reported by a search run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub balance_prunes: u64,
    pub lambda_prunes: u64,
    pub witnesses: usize,
    pub elapsed_ms: u64,
    /// Set when a time budget stopped the run; the witness list is then a
    /// prefix, not the complete set.
    #[serde(default)]
    pub timed_out: bool,
}

/// Search configuration. The default searches exhaustively, single
/// threaded, with both pruning rules on.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Stop after this many witnesses (deterministic: the limit cuts the
    /// fixed depth-first order, so it always keeps the same prefix).
    pub limit: Option<usize>,
    /// Worker threads for exploring disjoint subtrees. Ignored when a
    /// limit is set; bounded early exit stays sequential so that the
    /// returned prefix does not depend on scheduling.
    pub threads: usize,
    pub balance_prune: bool,
    pub lambda_prune: bool,
    /// Abandon the run after roughly this long. Family instances have
    /// search spaces like 2^45; completeness claims only hold for runs
    /// that finish without this tripping.
    pub time_budget: Option<std::time::Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            threads: 1,
            balance_prune: true,
            lambda_prune: true,
            time_budget: None,
        }
    }
}

/// Builds the inverse-pair skeleton, validating that `(G, H)` can carry a
/// DRAD difference set at all.
///
/// Errors with [`Error::InvolutionOutsideH`] when some element outside `H`
/// equals its own inverse; no choice of `D` can then satisfy the
/// disjointness conditions, so the error doubles as a nonexistence proof.
pub fn inverse_pairs(g: &GroupTable, h: &SubsetBits) -> Result<PairChoice> {
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
    let mut pairs = Vec::with_capacity((g.order() - hsize) / 2);
    for e in 0..g.order() {
        if h.contains(e) {
            continue;
        }
        let ei = g.inv(e);
        if ei == e {
            return Err(Error::InvolutionOutsideH { g: e });
        }
        if e < ei {
            pairs.push((e, ei));
        }
    }
    debug_assert_eq!(pairs.len(), (g.order() - hsize) / 2);
    Ok(PairChoice { pairs })
}

struct Searcher<'a> {
    g: &'a GroupTable,
    pairs: Vec<(Elem, Elem)>,
    coset_of: Vec<u32>,
    half: u32,
    lambda: u32,
    opts: &'a SearchOptions,
    deadline: Option<std::time::Instant>,
}

#[derive(Clone)]
struct State {
    d: Vec<Elem>,
    diff: Vec<u32>,
    coset_count: Vec<u32>,
    potential: Vec<u32>,
    forced: Vec<u32>,
    stats: SearchStats,
}

impl<'a> Searcher<'a> {
    fn new(
        g: &'a GroupTable,
        h: &SubsetBits,
        skeleton: &PairChoice,
        opts: &'a SearchOptions,
    ) -> Result<Self> {
        let cosets = g.cosets(h)?;
        let mut coset_of = vec![0u32; g.order()];
        for (ci, c) in cosets.iter().enumerate() {
            for e in c.iter() {
                coset_of[e] = ci as u32;
            }
        }
        let hsize = h.count();
        // Pairs grouped by coset, cosets in their canonical order, so the
        // per-coset balance bound closes out one coset pair at a time.
        let mut pairs = skeleton.pairs.clone();
        pairs.sort_by_key(|&(a, b)| {
            let (ca, cb) = (coset_of[a], coset_of[b]);
            (ca.min(cb), ca.max(cb), a)
        });
        Ok(Searcher {
            g,
            pairs,
            coset_of,
            half: (hsize / 2) as u32,
            lambda: (hsize * (hsize - 2) / 4) as u32,
            opts,
            deadline: opts.time_budget.map(|b| std::time::Instant::now() + b),
        })
    }

    /// Cheap deadline poll, amortized over a few thousand nodes.
    fn out_of_time(&self, st: &mut State) -> bool {
        if st.stats.timed_out {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if st.stats.nodes & 0xfff == 0 && std::time::Instant::now() > deadline {
                st.stats.timed_out = true;
                return true;
            }
        }
        false
    }

    fn initial_state(&self) -> State {
        let n_cosets = self.g.order() / (self.half as usize * 2);
        let mut potential = vec![0u32; n_cosets];
        let mut forced = vec![0u32; n_cosets];
        for &(a, b) in &self.pairs {
            let (ca, cb) = (self.coset_of[a] as usize, self.coset_of[b] as usize);
            potential[ca] += 1;
            if cb != ca {
                potential[cb] += 1;
            } else {
                forced[ca] += 1;
            }
        }
        State {
            d: Vec::with_capacity(self.pairs.len()),
            diff: vec![0u32; self.g.order()],
            coset_count: vec![0u32; n_cosets],
            potential,
            forced,
            stats: SearchStats::default(),
        }
    }

    /// Applies one pair choice; returns whether the branch stays viable.
    /// Must always be undone with `undo`, viable or not.
    fn apply(&self, st: &mut State, idx: usize, take_first: bool) -> bool {
        let (a, b) = self.pairs[idx];
        let e = if take_first { a } else { b };
        let ei = if take_first { b } else { a };

        let mut lambda_ok = true;
        for &m in &st.d {
            let d1 = self.g.mul(e, self.g.inv(m));
            let d2 = self.g.mul(m, ei);
            st.diff[d1] += 1;
            st.diff[d2] += 1;
            if st.diff[d1] > self.lambda || st.diff[d2] > self.lambda {
                lambda_ok = false;
            }
        }
        st.d.push(e);

        let (ca, cb) = (self.coset_of[a] as usize, self.coset_of[b] as usize);
        let ce = self.coset_of[e] as usize;
        st.coset_count[ce] += 1;
        st.potential[ca] -= 1;
        if cb != ca {
            st.potential[cb] -= 1;
        } else {
            st.forced[ca] -= 1;
        }

        let mut balance_ok = true;
        for c in [ca, cb] {
            if st.coset_count[c] > self.half
                || st.coset_count[c] + st.potential[c] < self.half
                || st.coset_count[c] + st.forced[c] > self.half
            {
                balance_ok = false;
            }
        }

        if !balance_ok && self.opts.balance_prune {
            st.stats.balance_prunes += 1;
            return false;
        }
        if !lambda_ok && self.opts.lambda_prune {
            st.stats.lambda_prunes += 1;
            return false;
        }
        true
    }

    fn undo(&self, st: &mut State, idx: usize, take_first: bool) {
        let (a, b) = self.pairs[idx];
        let e = st.d.pop().expect("apply pushed an element");
        let ei = if take_first { b } else { a };
        debug_assert_eq!(e, if take_first { a } else { b });
        for &m in &st.d {
            st.diff[self.g.mul(e, self.g.inv(m))] -= 1;
            st.diff[self.g.mul(m, ei)] -= 1;
        }
        let (ca, cb) = (self.coset_of[a] as usize, self.coset_of[b] as usize);
        let ce = self.coset_of[e] as usize;
        st.coset_count[ce] -= 1;
        st.potential[ca] += 1;
        if cb != ca {
            st.potential[cb] += 1;
        } else {
            st.forced[ca] += 1;
        }
    }

    fn leaf(&self, st: &mut State, h: &SubsetBits, out: &mut Vec<SubsetBits>) {
        if st.coset_count.iter().skip(1).any(|&c| c != self.half) {
            return;
        }
        if st.diff[1..].iter().any(|&c| c != self.lambda) {
            return;
        }
        let d = SubsetBits::from_indices(self.g.order(), &st.d);
        // The incremental state already implies acceptance; the final
        // word still belongs to the independent verifier.
        let verdict = is_drad(self.g, h, &d).expect("H validated before search");
        if verdict.accepted() {
            out.push(d);
        } else {
            debug_assert!(false, "incremental search state disagrees with is_drad");
        }
    }

    fn dfs(
        &self,
        st: &mut State,
        idx: usize,
        h: &SubsetBits,
        out: &mut Vec<SubsetBits>,
        limit: Option<usize>,
    ) {
        if idx == self.pairs.len() {
            self.leaf(st, h, out);
            return;
        }
        for take_first in [true, false] {
            if let Some(l) = limit {
                if out.len() >= l {
                    return;
                }
            }
            if self.out_of_time(st) {
                return;
            }
            st.stats.nodes += 1;
            if self.apply(st, idx, take_first) {
                self.dfs(st, idx + 1, h, out, limit);
            }
            self.undo(st, idx, take_first);
        }
    }

    /// Enumerates the surviving partial assignments of the first `depth`
    /// pairs, in depth-first order, for parallel subtree exploration.
    fn prefixes(&self, st: &mut State, depth: usize) -> (Vec<Vec<bool>>, SearchStats) {
        let mut acc = Vec::new();
        let mut cur = Vec::new();
        self.prefix_rec(st, depth, &mut cur, &mut acc);
        (acc, st.stats.clone())
    }

    fn prefix_rec(
        &self,
        st: &mut State,
        depth: usize,
        cur: &mut Vec<bool>,
        acc: &mut Vec<Vec<bool>>,
    ) {
        if cur.len() == depth {
            acc.push(cur.clone());
            return;
        }
        let idx = cur.len();
        for take_first in [true, false] {
            st.stats.nodes += 1;
            cur.push(take_first);
            if self.apply(st, idx, take_first) {
                self.prefix_rec(st, depth, cur, acc);
            }
            self.undo(st, idx, take_first);
            cur.pop();
        }
    }
}

/// Exhaustive search for all DRAD difference sets over `(G, H)`.
///
/// With no limit the returned list is complete; it is sorted by member
/// list, and identical for any thread count.
pub fn search_drad(
    g: &GroupTable,
    h: &SubsetBits,
    opts: &SearchOptions,
) -> Result<(Vec<SubsetBits>, SearchStats)> {
    let start = std::time::Instant::now();
    let skeleton = inverse_pairs(g, h)?;
    let searcher = Searcher::new(g, h, &skeleton, opts)?;
    let mut st = searcher.initial_state();
    let mut witnesses = Vec::new();

    let par_depth = if opts.threads > 1 && opts.limit.is_none() {
        // Enough prefixes to feed the pool a few tasks per thread.
        let want = (opts.threads * 8).next_power_of_two().trailing_zeros() as usize;
        want.min(searcher.pairs.len())
    } else {
        0
    };

    if par_depth == 0 {
        searcher.dfs(&mut st, 0, h, &mut witnesses, opts.limit);
    } else {
        let (prefixes, prefix_stats) = searcher.prefixes(&mut st, par_depth);
        st.stats = prefix_stats;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let results: Vec<(Vec<SubsetBits>, SearchStats)> = pool.install(|| {
            use rayon::prelude::*;
            prefixes
                .par_iter()
                .map(|prefix| {
                    let mut local = searcher.initial_state();
                    let mut found = Vec::new();
                    for (idx, &take) in prefix.iter().enumerate() {
                        let ok = searcher.apply(&mut local, idx, take);
                        debug_assert!(ok, "prefixes only contains viable stems");
                    }
                    searcher.dfs(&mut local, prefix.len(), h, &mut found, None);
                    (found, local.stats)
                })
                .collect()
        });
        for (found, stats) in results {
            witnesses.extend(found);
            st.stats.nodes += stats.nodes;
            st.stats.balance_prunes += stats.balance_prunes;
            st.stats.lambda_prunes += stats.lambda_prunes;
            st.stats.timed_out |= stats.timed_out;
        }
    }

    witnesses.sort();
    if let Some(l) = opts.limit {
        witnesses.truncate(l);
    }
    st.stats.witnesses = witnesses.len();
    st.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((witnesses, st.stats))
}

/// Per-subgroup outcome inside a census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusOutcome {
    pub h: Vec<usize>,
    pub witnesses: Vec<Vec<usize>>,
    pub stats: SearchStats,
    pub certificate: Option<ObstructionCert>,
}

/// Per-group census record.
#[derive(Clone, Debug, Serialize)]
pub struct GroupCensus {
    pub group: String,
    pub label: String,
    pub candidates: Vec<Vec<usize>>,
    pub outcomes: Vec<CensusOutcome>,
    pub no_candidate_cert: Option<ObstructionCert>,
}

impl GroupCensus {
    pub fn has_witness(&self) -> bool {
        self.outcomes.iter().any(|o| !o.witnesses.is_empty())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub order: usize,
    pub groups: Vec<GroupCensus>,
    pub groups_with_witnesses: usize,
}

/// Runs the exhaustive search over every catalog group of the given order.
///
/// Each group either gets a no-candidate-subgroup certificate, or one
/// outcome per candidate `H`: the complete witness list, with an
/// exhausted-search certificate when it is empty.
pub fn census(order: usize, opts: &SearchOptions) -> Result<CensusReport> {
    let tables = load_catalog(order)?;
    let entries = crate::group::catalog_entries(order)?;
    let mut groups = Vec::with_capacity(tables.len());
    for (table, entry) in tables.iter().zip(&entries) {
        groups.push(census_one(table, &entry.name, opts)?);
    }
    let groups_with_witnesses = groups.iter().filter(|g| g.has_witness()).count();
    Ok(CensusReport {
        order,
        groups,
        groups_with_witnesses,
    })
}

/// Census for a single group table (also used for family instances).
pub fn census_one(g: &GroupTable, label: &str, opts: &SearchOptions) -> Result<GroupCensus> {
    let candidates = candidate_subgroups(g)?;
    if candidates.is_empty() {
        let inv = g.subgroup_generated(&g.involutions());
        return Ok(GroupCensus {
            group: g.name().to_string(),
            label: label.to_string(),
            candidates: vec![],
            outcomes: vec![],
            no_candidate_cert: Some(ObstructionCert::NoCandidateH {
                group: g.name().to_string(),
                involution_subgroup_order: inv.count(),
            }),
        });
    }
    let mut outcomes = Vec::new();
    for h in &candidates {
        let (witnesses, stats) = search_drad(g, h, opts)?;
        // A timed-out run proves nothing; only a completed empty search
        // earns a certificate.
        let certificate = if witnesses.is_empty() && !stats.timed_out {
            Some(ObstructionCert::ExhaustedSearch {
                group: g.name().to_string(),
                h: h.to_indices(),
                nodes: stats.nodes,
            })
        } else {
            None
        };
        outcomes.push(CensusOutcome {
            h: h.to_indices(),
            witnesses: witnesses.iter().map(|w| w.to_indices()).collect(),
            stats,
            certificate,
        });
    }
    Ok(GroupCensus {
        group: g.name().to_string(),
        label: label.to_string(),
        candidates: candidates.iter().map(|c| c.to_indices()).collect(),
        outcomes,
        no_candidate_cert: None,
    })
}
