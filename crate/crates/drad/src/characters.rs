//! Linear characters of a finite group.
//!
//! Every homomorphism from `G` to the roots of unity factors through the
//! abelianization `G/G'`. The enumeration here builds the derived subgroup,
//! forms the quotient, and extends characters one cyclic layer at a time:
//! if a character is known on a subgroup `S` and `q` has order `d` modulo
//! `S`, its value on `q` can be any of the `d` solutions of
//! `d * v = chi(q^d) (mod N)`, where `N` is the exponent of the quotient.
//! That yields all `|G/G'|` characters, each stored as an exponent vector
//! `e` with `chi(g) = zeta_N^(e_g)`.

use crate::bits::SubsetBits;
use crate::cyclotomic::{CycInt, CycRing};
use crate::group::GroupTable;

/// A linear character: `chi(g) = zeta_n^(exps[g])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinChar {
    /// Exponent of the abelianization; every value is an n-th root of unity.
    pub n: usize,
    /// Per-element exponents into `zeta_n`.
    pub exps: Vec<usize>,
}

impl LinChar {
    pub fn is_principal(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Order of the image subgroup of roots of unity; the character's
    /// values generate the `m`-th cyclotomic field for this `m`.
    pub fn image_conductor(&self) -> usize {
        let mut g = self.n;
        for &e in &self.exps {
            g = gcd(g, e);
        }
        self.n / g.max(1)
    }

    /// The character value at `g` inside a ring of matching conductor.
    /// The ring's conductor must be a multiple of the image conductor.
    pub fn value_in(&self, ring: &CycRing, g: usize) -> CycInt {
        let scale = ring.conductor() * gcdn(self) / self.n;
        debug_assert_eq!(ring.conductor() * gcdn(self) % self.n, 0);
        ring.zeta_pow((self.exps[g] / gcdn(self) * scale) as i64)
    }
}

fn gcdn(c: &LinChar) -> usize {
    let mut g = c.n;
    for &e in &c.exps {
        g = gcd(g, e);
    }
    g.max(1)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// All linear characters of `G`, principal character first, the rest in
/// lexicographic order of their exponent vectors.
pub fn linear_characters(g: &GroupTable) -> Vec<LinChar> {
    let derived = g.commutator_subgroup();
    let (q, proj) = g.quotient(&derived).expect("derived subgroup is normal");
    let qn = q.order();
    // Exponent of the abelian quotient.
    let mut exponent = 1;
    for e in 0..qn {
        exponent = lcm(exponent, q.element_order(e));
    }

    // Characters on a growing chain of subgroups of the quotient. Each is
    // the exponent vector over the quotient's elements, defined where the
    // chain has reached.
    let mut sub = SubsetBits::singleton(qn, 0);
    let mut chars: Vec<Vec<usize>> = vec![{
        let mut v = vec![usize::MAX; qn];
        v[0] = 0;
        v
    }];
    while sub.count() < qn {
        let next_gen = (0..qn).find(|&e| !sub.contains(e)).expect("chain not done");
        // Order of next_gen modulo the current subgroup.
        let mut d = 1;
        let mut pw = next_gen;
        while !sub.contains(pw) {
            pw = q.mul(pw, next_gen);
            d += 1;
        }
        // pw = next_gen^d is in the subgroup.
        let mut extended = Vec::with_capacity(chars.len() * d);
        for chi in &chars {
            // chi(q)^d = chi(q^d) forces d | chi(q^d) mod the exponent,
            // and every one of the d solutions extends the character.
            let c = chi[pw];
            debug_assert_eq!(c % d, 0, "character value not divisible by layer order");
            for t in 0..d {
                let v = c / d + t * (exponent / d);
                let mut ext = chi.clone();
                let mut power = 0; // next_gen^e as e walks 1..d
                for e in 1..d {
                    power = if e == 1 { next_gen } else { q.mul(power, next_gen) };
                    for s in sub.iter() {
                        ext[q.mul(s, power)] = (chi[s] + e * v) % exponent;
                    }
                }
                extended.push(ext);
            }
        }
        // Grow the subgroup by the new generator.
        let mut grown = sub.clone();
        let mut power = next_gen;
        for _ in 1..d {
            for s in sub.iter() {
                grown.insert(q.mul(s, power));
            }
            power = q.mul(power, next_gen);
        }
        sub = grown;
        chars = extended;
    }

    // Lift through the projection to per-element exponents on G.
    let mut lifted: Vec<LinChar> = chars
        .into_iter()
        .map(|chi| LinChar {
            n: exponent,
            exps: (0..g.order()).map(|e| chi[proj[e]]).collect(),
        })
        .collect();
    lifted.sort_by(|a, b| a.exps.cmp(&b.exps));
    debug_assert!(lifted[0].is_principal());
    lifted
}

/// The exact sum of character values over a subset.
pub fn char_sum(chi: &LinChar, s: &SubsetBits) -> CycInt {
    let ring = CycRing::new(chi.n);
    let mut acc = ring.zero();
    for g in s.iter() {
        ring.add_zeta_pow(&mut acc, chi.exps[g] as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_family, Family, FamilySpec};

    #[test]
    fn abelian_cyclic_has_n_characters() {
        let g = GroupTable::cyclic(12);
        let chars = linear_characters(&g);
        assert_eq!(chars.len(), 12);
        assert!(chars[0].is_principal());
    }

    #[test]
    fn character_counts_for_families() {
        // |G/G'| counted through an independent commutator-closure oracle.
        let g11 = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let derived_order = g11.commutator_subgroup().count();
        assert_eq!(derived_order, 5);
        assert_eq!(linear_characters(&g11).len(), 100 / derived_order);

        let g15 = make_family(&FamilySpec::new(Family::G15, 5).unwrap()).unwrap();
        assert_eq!(g15.commutator_subgroup().count(), 25);
        assert_eq!(linear_characters(&g15).len(), 4);
    }

    #[test]
    fn characters_are_homomorphisms() {
        let g = make_family(&FamilySpec::new(Family::G14, 5).unwrap()).unwrap();
        let chars = linear_characters(&g);
        assert_eq!(chars.len(), 20);
        let mut state = 5u64;
        let mut next = move |n: usize| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        for chi in &chars {
            for _ in 0..1000 / chars.len() + 10 {
                let a = next(g.order());
                let b = next(g.order());
                let lhs = chi.exps[g.mul(a, b)];
                let rhs = (chi.exps[a] + chi.exps[b]) % chi.n;
                assert_eq!(lhs, rhs);
            }
            // chi(g)^order(g) = 1.
            for e in 0..g.order() {
                assert_eq!(chi.exps[e] * g.element_order(e) % chi.n, 0);
            }
        }
    }

    #[test]
    fn nonprincipal_sums_vanish_on_the_group() {
        let groups = [
            GroupTable::cyclic(9),
            make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap(),
            make_family(&FamilySpec::new(Family::G15, 5).unwrap()).unwrap(),
        ];
        for g in &groups {
            let all = SubsetBits::full(g.order());
            for (i, chi) in linear_characters(g).iter().enumerate() {
                let s = char_sum(chi, &all);
                if i == 0 {
                    assert_eq!(s.coeffs()[0], g.order() as i64);
                } else {
                    assert!(s.is_zero(), "nonprincipal character sum over G");
                }
            }
        }
    }

    #[test]
    fn vanishing_subgroup_sum_in_g11() {
        // The character x -> zeta_p, y -> 1, z -> -1 sums to zero over
        // <x, z^2>.
        let g = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let x = g.generator("x").unwrap();
        let z = g.generator("z").unwrap();
        let z2 = g.mul(z, z);
        let h = g.subgroup_generated(&SubsetBits::from_indices(100, &[x, z2]));
        let chars = linear_characters(&g);
        let target = chars.iter().find(|c| {
            let n = c.n;
            c.exps[x] != 0
                && c.exps[x] * 5 % n == 0
                && c.exps[z] == n / 2
        });
        let chi = target.expect("such a character exists");
        assert!(char_sum(chi, &h).is_zero());
        assert_eq!(chi.image_conductor(), 10);
    }

    #[test]
    fn image_conductors() {
        let g = make_family(&FamilySpec::new(Family::G11, 5).unwrap()).unwrap();
        let chars = linear_characters(&g);
        assert_eq!(chars.len(), 20);
        // G/G' here is C5 x C4, exponent 20; conductors divide 20.
        for chi in &chars {
            assert_eq!(20 % chi.image_conductor(), 0);
        }
        assert_eq!(chars[0].image_conductor(), 1);
    }
}
