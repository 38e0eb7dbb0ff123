//! Exact finite groups as full multiplication tables.
//!
//! Every group in this crate is carried as a [`GroupTable`]: a dense
//! `order x order` table of element indices together with an inverse table
//! and named generators. Construction always validates the group axioms, so
//! downstream code can treat a `GroupTable` as trusted.
//!
//! The identity element is always index 0.

mod catalog;
mod family;
mod structure;

pub use catalog::{catalog_entries, load_catalog, CatalogEntry, GroupFingerprint};
pub use family::{find_f, make_family, Family, FamilySpec};

use crate::error::{Error, Result};

/// Index of a group element in `[0, order)`.
pub type Elem = usize;

/// Exhaustive associativity checking is cubic; above this order the check
/// samples random triples instead.
const FULL_ASSOC_LIMIT: usize = 200;
const SAMPLED_TRIPLES: usize = 1_000_000;

/// An exact finite group: full multiplication and inverse tables plus
/// generator metadata. Immutable after construction.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    name: String,
    generators: Vec<(String, Elem)>,
}

impl GroupTable {
    /// Builds and validates a table from a multiplication closure.
    ///
    /// Validation: index 0 is a two-sided identity, every element has a
    /// two-sided inverse, and the operation is associative (exhaustively
    /// up to order 200, on a million sampled triples beyond that).
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        mut f: impl FnMut(Elem, Elem) -> Elem,
        generators: Vec<(String, Elem)>,
    ) -> Result<Self> {
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let c = f(a, b);
                if c >= order {
                    return Err(Error::NotAGroup(format!(
                        "product {a}*{b} = {c} out of range"
                    )));
                }
                mul[a * order + b] = c as u32;
            }
        }
        Self::from_table(name, order, mul, generators)
    }

    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mul: Vec<u32>,
        generators: Vec<(String, Elem)>,
    ) -> Result<Self> {
        assert_eq!(mul.len(), order * order);
        let name = name.into();
        // Identity at 0.
        for g in 0..order {
            if mul[g] as usize != g || mul[g * order] as usize != g {
                return Err(Error::NotAGroup(format!(
                    "index 0 is not a two-sided identity in {name}"
                )));
            }
        }
        // Two-sided inverses.
        let mut inv = vec![u32::MAX; order];
        for g in 0..order {
            let mut found = None;
            for h in 0..order {
                if mul[g * order + h] == 0 {
                    if mul[h * order + g] != 0 {
                        return Err(Error::NotAGroup(format!(
                            "one-sided inverse for element {g} in {name}"
                        )));
                    }
                    if found.is_some() {
                        return Err(Error::NotAGroup(format!(
                            "multiple inverses for element {g} in {name}"
                        )));
                    }
                    found = Some(h);
                }
            }
            match found {
                Some(h) => inv[g] = h as u32,
                None => {
                    return Err(Error::NotAGroup(format!(
                        "no inverse for element {g} in {name}"
                    )))
                }
            }
        }
        let table = GroupTable {
            order,
            mul,
            inv,
            name,
            generators,
        };
        table.check_associativity()?;
        for g in 0..order {
            if table.inv(table.inv(g)) != g {
                return Err(Error::NotAGroup(format!(
                    "inv(inv({g})) != {g} in {}",
                    table.name
                )));
            }
        }
        Ok(table)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            Err(Error::NotAGroup(format!(
                "associativity fails at ({a},{b},{c}) in {}",
                self.name
            )))
        };
        if n <= FULL_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return bad(a, b, c);
                        }
                    }
                }
            }
        } else {
            // Deterministic sampling; splitmix64 keyed on a fixed seed.
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                z ^ (z >> 31)
            };
            for _ in 0..SAMPLED_TRIPLES {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                let c = (next() % n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return bad(a, b, c);
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[(String, Elem)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<Elem> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        self.inv[g] as Elem
    }

    /// Conjugate `g` by `h`: `h^-1 g h`.
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// Commutator `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    /// `g^k` for any integer `k`, negative exponents via the inverse.
    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let (mut base, mut e) = if k < 0 {
            (self.inv(g), (-k) as u64)
        } else {
            (g, k as u64)
        };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of `g`; always divides the group order.
    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn is_involution(&self, g: Elem) -> bool {
        g != 0 && self.mul(g, g) == 0
    }

    /// Product of a word given as element list, left to right.
    pub fn word(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    /// The cyclic group of order `n` with generator index 1.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let gens = if n > 1 {
            vec![("g".to_string(), 1)]
        } else {
            vec![]
        };
        Self::from_fn(format!("C{n}"), n, |a, b| (a + b) % n, gens)
            .expect("cyclic group table is valid")
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.order)
    }
}
