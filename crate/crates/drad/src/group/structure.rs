//! Structural queries on a [`GroupTable`]: involutions, generated
//! subgroups, conjugacy classes, normal subgroups, cosets and quotients.

use super::{Elem, GroupTable};
use crate::bits::SubsetBits;
use crate::error::{Error, Result};

impl GroupTable {
    /// All elements of order exactly 2.
    pub fn involutions(&self) -> SubsetBits {
        let mut s = SubsetBits::new(self.order());
        for g in 1..self.order() {
            if self.mul(g, g) == 0 {
                s.insert(g);
            }
        }
        s
    }

    /// Smallest subgroup containing `seed`. Idempotent and monotone.
    pub fn subgroup_generated(&self, seed: &SubsetBits) -> SubsetBits {
        let mut sub = SubsetBits::new(self.order());
        sub.insert(0);
        let mut members = vec![0];
        let mut queue: Vec<Elem> = seed.iter().collect();
        while let Some(g) = queue.pop() {
            if sub.contains(g) {
                continue;
            }
            sub.insert(g);
            queue.push(self.inv(g));
            // Close under products with everything already present.
            for i in 0..members.len() {
                let m = members[i];
                for prod in [self.mul(g, m), self.mul(m, g)] {
                    if !sub.contains(prod) {
                        queue.push(prod);
                    }
                }
            }
            let prod = self.mul(g, g);
            if !sub.contains(prod) {
                queue.push(prod);
            }
            members.push(g);
        }
        sub
    }

    pub fn is_subgroup(&self, s: &SubsetBits) -> bool {
        if s.len() != self.order() || !s.contains(0) {
            return false;
        }
        let members = s.to_indices();
        for &a in &members {
            if !s.contains(self.inv(a)) {
                return false;
            }
            for &b in &members {
                if !s.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_normal(&self, s: &SubsetBits) -> bool {
        if !self.is_subgroup(s) {
            return false;
        }
        for h in s.iter() {
            for g in 0..self.order() {
                if !s.contains(self.conj(h, g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Conjugacy classes, identity class first, the rest ordered by their
    /// minimal element.
    pub fn conjugacy_classes(&self) -> Vec<SubsetBits> {
        let n = self.order();
        let mut seen = SubsetBits::new(n);
        let mut classes = Vec::new();
        for g in 0..n {
            if seen.contains(g) {
                continue;
            }
            let mut class = SubsetBits::new(n);
            for h in 0..n {
                class.insert(self.conj(g, h));
            }
            for m in class.iter() {
                seen.insert(m);
            }
            classes.push(class);
        }
        classes
    }

    pub fn center(&self) -> SubsetBits {
        let n = self.order();
        let mut s = SubsetBits::new(n);
        for g in 0..n {
            if (0..n).all(|h| self.mul(g, h) == self.mul(h, g)) {
                s.insert(g);
            }
        }
        s
    }

    /// The derived subgroup, generated by all commutators.
    pub fn commutator_subgroup(&self) -> SubsetBits {
        let n = self.order();
        let mut comms = SubsetBits::new(n);
        for g in 0..n {
            for h in 0..n {
                comms.insert(self.commutator(g, h));
            }
        }
        self.subgroup_generated(&comms)
    }

    /// Every normal subgroup of order `m`, in member-list order.
    ///
    /// Normal subgroups are exactly the subgroup-closed unions of conjugacy
    /// classes containing the class of the identity, so the enumeration
    /// walks unions of classes, closing each candidate as it grows and
    /// pruning once the closure exceeds `m` elements.
    pub fn normal_subgroups_of_order(&self, m: usize) -> Vec<SubsetBits> {
        let n = self.order();
        if m == 0 || n % m != 0 {
            return Vec::new();
        }
        let classes: Vec<SubsetBits> = self
            .conjugacy_classes()
            .into_iter()
            .filter(|c| !c.contains(0))
            .collect();
        let mut visited = std::collections::HashSet::new();
        let mut found = Vec::new();
        let mut stack = vec![SubsetBits::singleton(n, 0)];
        while let Some(sub) = stack.pop() {
            if !visited.insert(sub.clone()) {
                continue;
            }
            let size = sub.count();
            if size == m {
                found.push(sub.clone());
            }
            if size >= m {
                continue;
            }
            for class in &classes {
                if class.is_subset_of(&sub) {
                    continue;
                }
                // Classes are disjoint from any class-closed subgroup they
                // are not inside, so the union grows by the full class size.
                if size + class.count() > m {
                    continue;
                }
                let closure = self.subgroup_generated(&sub.union(class));
                if closure.count() <= m {
                    stack.push(closure);
                }
            }
        }
        found.sort();
        found
    }

    /// Right cosets `Hg`, the subgroup itself first, the rest ordered by
    /// minimal element. Together they tile the group exactly once.
    pub fn cosets(&self, h: &SubsetBits) -> Result<Vec<SubsetBits>> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        let n = self.order();
        let members = h.to_indices();
        let mut seen = SubsetBits::new(n);
        let mut out = Vec::with_capacity(n / members.len());
        for g in 0..n {
            if seen.contains(g) {
                continue;
            }
            let mut coset = SubsetBits::new(n);
            for &m in &members {
                let e = self.mul(m, g);
                coset.insert(e);
                seen.insert(e);
            }
            out.push(coset);
        }
        Ok(out)
    }

    /// Quotient by a normal subgroup: the quotient table plus the projection
    /// from element index to coset index. Coset 0 is the image of the
    /// identity.
    pub fn quotient(&self, n_sub: &SubsetBits) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_normal(n_sub) {
            return Err(Error::BadSubgroup("quotient needs a normal subgroup".into()));
        }
        let cosets = self.cosets(n_sub)?;
        let mut proj = vec![0usize; self.order()];
        for (ci, c) in cosets.iter().enumerate() {
            for g in c.iter() {
                proj[g] = ci;
            }
        }
        let reps: Vec<Elem> = cosets
            .iter()
            .map(|c| c.min_element().expect("cosets are nonempty"))
            .collect();
        let q = GroupTable::from_fn(
            format!("{}/N{}", self.name(), n_sub.count()),
            cosets.len(),
            |a, b| proj[self.mul(reps[a], reps[b])],
            vec![],
        )?;
        Ok((q, proj))
    }
}
