//! Arithmetic in the Boolean quotient ring of membership indicators, and
//! the symbolic nonexistence replay for the `G15` family.
//!
//! A hypothetical DRAD difference set `D` for `(G, H)` assigns each group
//! element an indicator `eps_g` subject to
//!
//! ```text
//! eps_g^2 = eps_g        eps_g + eps_{g^-1} = 1  (g outside H)
//! eps_g = 0 (g in H)     2 = 0
//! ```
//!
//! Working modulo these relations leaves one free variable per inverse
//! pair outside `H`, and every polynomial in the quotient has a canonical
//! normal form: a set of squarefree monomials over the canonical
//! variables, combining by XOR. Since the substitutions touch disjoint
//! variables the eager rewriting at construction time is confluent, so
//! equality in the quotient is literal set equality here.
//!
//! The coefficient of `k != 1` in `D D^-1` minus `lambda` reduces to a
//! polynomial `E_k` that must vanish for a genuine difference set
//! (`lambda` itself drops out: it is always even). Summing `E` over a
//! coset of `Y = <y>` gives `Z_k`; the replay establishes, purely
//! symbolically, that a fixed triple of these sums adds up to the ring
//! unit, so no assignment can kill every `E_k` and no DRAD difference set
//! exists.

use std::collections::HashSet;

use crate::bits::SubsetBits;
use crate::design::drad_params;
use crate::error::{Error, Result};
use crate::group::{make_family, Elem, Family, FamilySpec, GroupTable};
use crate::obstruction::ObstructionCert;

/// Hard cap on monomials per polynomial; exceeding it is a hard error
/// rather than an OOM.
const MONOMIAL_CAP: usize = 1 << 22;

/// How each element's indicator reduces in the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// `eps_g = 0` for `g` in `H`.
    Zero,
    /// `g` is the canonical (smaller-index) member of its inverse pair.
    Var(u32),
    /// `g` is the partner, so `eps_g = 1 + eps_{g^-1}`.
    OnePlusVar(u32),
}

/// The variable layout for a pair `(G, H)`: one canonical variable per
/// inverse pair outside `H`.
#[derive(Clone, Debug)]
pub struct VarMap {
    kinds: Vec<VarKind>,
    canonical: Vec<Elem>,
}

impl VarMap {
    pub fn new(g: &GroupTable, h: &SubsetBits) -> Result<Self> {
        let pairs = crate::search::inverse_pairs(g, h)?.pairs;
        let mut kinds = vec![VarKind::Zero; g.order()];
        let mut canonical = Vec::with_capacity(pairs.len());
        for (v, &(a, b)) in pairs.iter().enumerate() {
            kinds[a] = VarKind::Var(v as u32);
            kinds[b] = VarKind::OnePlusVar(v as u32);
            canonical.push(a);
        }
        Ok(VarMap { kinds, canonical })
    }

    pub fn kind(&self, g: Elem) -> VarKind {
        self.kinds[g]
    }

    pub fn num_vars(&self) -> usize {
        self.canonical.len()
    }

    /// The element whose indicator is variable `v`.
    pub fn canonical_element(&self, v: u32) -> Elem {
        self.canonical[v as usize]
    }

    /// The subset of `G \ H` selected by a 0/1 assignment to the
    /// variables: the canonical element when its bit is set, the partner
    /// otherwise.
    pub fn subset_for(&self, g: &GroupTable, assignment: &[bool]) -> SubsetBits {
        let mut d = SubsetBits::new(g.order());
        for (v, &e) in self.canonical.iter().enumerate() {
            d.insert(if assignment[v] { e } else { g.inv(e) });
        }
        d
    }
}

/// An element of the Boolean quotient ring in canonical normal form: the
/// XOR-set of its squarefree monomials. The empty monomial is the ring
/// unit; the empty set is zero.
#[derive(Clone, Debug, Default)]
pub struct BoolPoly {
    monomials: HashSet<Vec<u32>>,
}

impl PartialEq for BoolPoly {
    fn eq(&self, other: &Self) -> bool {
        self.monomials == other.monomials
    }
}
impl Eq for BoolPoly {}

impl BoolPoly {
    pub fn zero() -> Self {
        BoolPoly::default()
    }

    pub fn one() -> Self {
        let mut p = BoolPoly::default();
        p.monomials.insert(Vec::new());
        p
    }

    pub fn var(v: u32) -> Self {
        let mut p = BoolPoly::default();
        p.monomials.insert(vec![v]);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monomials.len() == 1 && self.monomials.contains(&Vec::new())
    }

    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn degree(&self) -> usize {
        self.monomials.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn toggle(&mut self, m: Vec<u32>) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    /// Characteristic-2 addition: symmetric difference of monomial sets.
    pub fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.monomials.len() >= other.monomials.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for m in &small.monomials {
            big.toggle(m.clone());
        }
        big
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        for m in &other.monomials {
            self.toggle(m.clone());
        }
        if self.monomials.len() > MONOMIAL_CAP {
            return Err(Error::PolynomialTooLarge(self.monomials.len()));
        }
        Ok(())
    }

    /// Product, with idempotency applied while merging each monomial pair.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = BoolPoly::default();
        for a in &self.monomials {
            for b in &other.monomials {
                out.toggle(merge_sorted(a, b));
            }
            if out.monomials.len() > MONOMIAL_CAP {
                return Err(Error::PolynomialTooLarge(out.monomials.len()));
            }
        }
        Ok(out)
    }

    /// Evaluation homomorphism at a 0/1 assignment.
    pub fn eval(&self, assignment: &[bool]) -> Result<bool> {
        let mut acc = false;
        for m in &self.monomials {
            let mut term = true;
            for &v in m {
                let bit = assignment
                    .get(v as usize)
                    .ok_or(Error::MissingVariable(v as usize))?;
                term &= bit;
                if !term {
                    break;
                }
            }
            acc ^= term;
        }
        Ok(acc)
    }

    /// Monomials in a deterministic order, for display and reports.
    pub fn sorted_monomials(&self) -> Vec<Vec<u32>> {
        let mut ms: Vec<Vec<u32>> = self.monomials.iter().cloned().collect();
        ms.sort();
        ms
    }
}

fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                // x * x = x
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// The indicator of one element as a ring element: `0`, `x_v`, or
/// `1 + x_v`.
pub fn eps(vm: &VarMap, g: Elem) -> BoolPoly {
    match vm.kind(g) {
        VarKind::Zero => BoolPoly::zero(),
        VarKind::Var(v) => BoolPoly::var(v),
        VarKind::OnePlusVar(v) => BoolPoly::one().add(&BoolPoly::var(v)),
    }
}

/// The reduced coefficient polynomial `E_k = sum_h eps_{kh} eps_h`
/// (`lambda` dropped: it is even). Vanishes under any assignment coming
/// from a genuine difference set.
pub fn e_poly(g: &GroupTable, vm: &VarMap, k: Elem) -> Result<BoolPoly> {
    if k == 0 {
        return Err(Error::IdentityK);
    }
    let mut acc = BoolPoly::zero();
    for h in 0..g.order() {
        let lhs = eps(vm, g.mul(k, h));
        if lhs.is_zero() {
            continue;
        }
        let rhs = eps(vm, h);
        if rhs.is_zero() {
            continue;
        }
        acc.add_assign(&lhs.mul(&rhs)?)?;
    }
    Ok(acc)
}

/// `Z_k`: the sum of `E` over the coset `Yk`.
pub fn z_poly(g: &GroupTable, vm: &VarMap, y: &SubsetBits, k: Elem) -> Result<BoolPoly> {
    let mut acc = BoolPoly::zero();
    for u in y.iter() {
        let uk = g.mul(u, k);
        acc.add_assign(&e_poly(g, vm, uk)?)?;
    }
    Ok(acc)
}

/// `Sigma_Y(g)`: the sum of the indicators over the coset `Yg`.
pub fn sigma_y(g: &GroupTable, vm: &VarMap, y: &SubsetBits, e: Elem) -> BoolPoly {
    let mut acc = BoolPoly::zero();
    for u in y.iter() {
        acc.add_assign(&eps(vm, g.mul(u, e)))
            .expect("linear sums stay under the cap");
    }
    acc
}

/// Smallest-first search for a subset of `reps` whose `Z` polynomials sum
/// to the ring unit. Returns the representatives of the first hit, or
/// `None` if no subset of size up to `limit` works.
pub fn find_unit_combination(
    g: &GroupTable,
    vm: &VarMap,
    y: &SubsetBits,
    reps: &[Elem],
    limit: usize,
) -> Result<Option<Vec<Elem>>> {
    let polys: Vec<BoolPoly> = reps
        .iter()
        .map(|&k| z_poly(g, vm, y, k))
        .collect::<Result<_>>()?;
    let mut chosen: Vec<usize> = Vec::new();
    for size in 1..=limit.min(reps.len()) {
        if let Some(found) = combo_search(&polys, &mut chosen, 0, size, &BoolPoly::zero())? {
            return Ok(Some(found.iter().map(|&i| reps[i]).collect()));
        }
    }
    Ok(None)
}

fn combo_search(
    polys: &[BoolPoly],
    chosen: &mut Vec<usize>,
    start: usize,
    size: usize,
    acc: &BoolPoly,
) -> Result<Option<Vec<usize>>> {
    if chosen.len() == size {
        return Ok(if acc.is_one() { Some(chosen.clone()) } else { None });
    }
    for i in start..polys.len() {
        chosen.push(i);
        let next = acc.add(&polys[i]);
        if let Some(found) = combo_search(polys, chosen, i + 1, size, &next)? {
            return Ok(Some(found));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Identity labels checked by [`replay_g15`], in evaluation order.
pub const G15_IDENTITIES: [&str; 8] = [
    "outer coset sums (Z1, Z2, Z3) = (1, 0, 0)",
    "indicator coset sums pair to 1 off H",
    "indicator coset sums vanish on H",
    "indicator coset sums annihilate their inverses",
    "closed form for Z4",
    "closed form for Z5",
    "closed form for Z6",
    "Z_x + Z_{x z^2} + Z_{x^((p-1)/2) z^2} = 1",
];

/// Per-identity outcome plus the sizes that make runtime intelligible.
#[derive(Clone, Debug, serde::Serialize)]
pub struct G15Replay {
    pub p: u64,
    pub identities: Vec<(String, bool)>,
    pub z_monomials: [usize; 6],
    pub total_monomials: usize,
    pub elapsed_ms: u64,
}

impl G15Replay {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|(_, ok)| *ok)
    }
}

/// Replays the symbolic nonexistence argument for `G15(p)` and returns the
/// certificate it establishes.
///
/// The subgroup is forced: `H = <y, z^2>`, the one candidate. Six
/// restricted sums split each `Z_k` along `N = <x, y, z^2>`:
/// `Z1..Z3` range over `G \ N` and must come out as `1, 0, 0`;
/// `Z4..Z6` range over `N \ H` and must match closed forms in the
/// `Sigma_Y` sums, which in turn cancel to zero. The final identity sums
/// the three full `Z` polynomials to the ring unit. Each check is exact
/// monomial-set equality; the first failure aborts with
/// [`Error::IdentityViolation`].
pub fn replay_g15(p: u64) -> Result<(ObstructionCert, G15Replay)> {
    let start = std::time::Instant::now();
    if p % 4 != 1 {
        return Err(Error::BadPrime {
            family: "G15".to_string(),
            p,
        });
    }
    let spec = FamilySpec::new(Family::G15, p)?;
    let g = make_family(&spec)?;
    let x = g.generator("x").expect("family generator");
    let y = g.generator("y").expect("family generator");
    let z = g.generator("z").expect("family generator");
    let z2 = g.mul(z, z);
    let n_elems = g.order();

    let h = g.subgroup_generated(&SubsetBits::from_indices(n_elems, &[y, z2]));
    let yset = g.subgroup_generated(&SubsetBits::singleton(n_elems, y));
    let nset = g.subgroup_generated(&SubsetBits::from_indices(n_elems, &[x, y, z2]));
    drad_params(h.count())?;
    let vm = VarMap::new(&g, &h)?;

    let p2 = ((p - 1) / 2) as i64;
    let k1 = x;
    let k2 = g.mul(x, z2);
    let k3 = g.mul(g.pow(x, p2), z2);

    // Restricted double sums over a range of h-values.
    let restricted = |k: Elem, range: &SubsetBits| -> Result<BoolPoly> {
        let mut acc = BoolPoly::zero();
        for u in yset.iter() {
            let uk = g.mul(u, k);
            for hh in range.iter() {
                let lhs = eps(&vm, g.mul(uk, hh));
                if lhs.is_zero() {
                    continue;
                }
                let rhs = eps(&vm, hh);
                if rhs.is_zero() {
                    continue;
                }
                acc.add_assign(&lhs.mul(&rhs)?)?;
            }
        }
        Ok(acc)
    };

    let outer = SubsetBits::full(n_elems).minus(&nset);
    let inner = nset.minus(&h);
    let z_split: Vec<BoolPoly> = [k1, k2, k3]
        .iter()
        .flat_map(|&k| [(k, &outer), (k, &inner)])
        .map(|(k, range)| restricted(k, range))
        .collect::<Result<_>>()?;
    let (z1, z4) = (&z_split[0], &z_split[1]);
    let (z2p, z5) = (&z_split[2], &z_split[3]);
    let (z3, z6) = (&z_split[4], &z_split[5]);

    let mut identities: Vec<(String, bool)> = Vec::new();
    let mut record = |label: &str, ok: bool| -> Result<()> {
        identities.push((label.to_string(), ok));
        if ok {
            Ok(())
        } else {
            Err(Error::IdentityViolation(label.to_string()))
        }
    };

    record(
        G15_IDENTITIES[0],
        z1.is_one() && z2p.is_zero() && z3.is_zero(),
    )?;

    // The three indicator-sum laws, swept over every group element.
    let sig = |e: Elem| sigma_y(&g, &vm, &yset, e);
    let mut pair_ok = true;
    let mut vanish_ok = true;
    let mut annihilate_ok = true;
    for e in 0..n_elems {
        let s = sig(e);
        let si = sig(g.inv(e));
        if h.contains(e) {
            vanish_ok &= s.is_zero();
        } else {
            pair_ok &= s.add(&si).is_one();
        }
        annihilate_ok &= s.mul(&si)?.is_zero();
    }
    record(G15_IDENTITIES[1], pair_ok)?;
    record(G15_IDENTITIES[2], vanish_ok)?;
    record(G15_IDENTITIES[3], annihilate_ok)?;

    // Closed forms for the inner sums.
    let xp = |a: i64| g.pow(x, a);
    let xpz2 = |a: i64| g.mul(g.pow(x, a), z2);
    let mut rhs4 = sig(xp(1));
    rhs4.add_assign(&sig(xp(p2)))?;
    rhs4.add_assign(&sig(xpz2(1)))?;
    rhs4.add_assign(&sig(xpz2(p2)))?;
    record(G15_IDENTITIES[4], z4 == &rhs4)?;

    let mut rhs5 = BoolPoly::one();
    for a in 1..=(p as i64 - 2) {
        rhs5.add_assign(&sig(xp(a)))?;
        rhs5.add_assign(&sig(xpz2(a + 1)))?;
    }
    record(G15_IDENTITIES[5], z5 == &rhs5)?;

    let mut rhs6 = BoolPoly::one();
    rhs6.add_assign(&sig(xpz2(p2)))?;
    for a in 1..=p2 {
        rhs6.add_assign(&sig(xp(a)))?;
        rhs6.add_assign(&sig(xpz2(a + p2)))?;
    }
    for a in 1..=p2 {
        rhs6.add_assign(&sig(xp(a + 1 + p2)))?;
        rhs6.add_assign(&sig(xpz2(a)))?;
    }
    record(G15_IDENTITIES[6], z6 == &rhs6)?;

    // Full coset sums; their splits must recombine, the inner three must
    // cancel, and the total must be the unit.
    let zx = z_poly(&g, &vm, &yset, k1)?;
    let zxz2 = z_poly(&g, &vm, &yset, k2)?;
    let zx3 = z_poly(&g, &vm, &yset, k3)?;
    let splits_ok =
        zx == z1.add(z4) && zxz2 == z2p.add(z5) && zx3 == z3.add(z6);
    let inner_sum = z4.add(z5).add(z6);
    let total = zx.add(&zxz2).add(&zx3);
    record(
        G15_IDENTITIES[7],
        splits_ok && inner_sum.is_zero() && total.is_one(),
    )?;

    let replay = G15Replay {
        p,
        identities,
        z_monomials: [
            z1.monomial_count(),
            z2p.monomial_count(),
            z3.monomial_count(),
            z4.monomial_count(),
            z5.monomial_count(),
            z6.monomial_count(),
        ],
        total_monomials: zx.monomial_count() + zxz2.monomial_count() + zx3.monomial_count(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let cert = ObstructionCert::BoolRingUnit {
        group: g.name().to_string(),
        h: h.to_indices(),
        y_subgroup: yset.to_indices(),
        reps: vec![k1, k2, k3],
    };
    Ok((cert, replay))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::is_drad;
    use crate::group::load_catalog;

    fn g15_setup(p: u64) -> (GroupTable, SubsetBits, SubsetBits, VarMap) {
        let g = make_family(&FamilySpec::new(Family::G15, p).unwrap()).unwrap();
        let y = g.generator("y").unwrap();
        let z = g.generator("z").unwrap();
        let z2 = g.mul(z, z);
        let h = g.subgroup_generated(&SubsetBits::from_indices(g.order(), &[y, z2]));
        let yset = g.subgroup_generated(&SubsetBits::singleton(g.order(), y));
        let vm = VarMap::new(&g, &h).unwrap();
        (g, h, yset, vm)
    }

    #[test]
    fn ring_basics() {
        let x = BoolPoly::var(3);
        assert_eq!(x.mul(&x).unwrap(), x); // x*x = x
        let one_plus_x = BoolPoly::one().add(&x);
        assert!(one_plus_x.mul(&x).unwrap().is_zero()); // (1+x)x = 0
        assert!(BoolPoly::one().add(&BoolPoly::one()).is_zero()); // 1+1 = 0
        assert!(BoolPoly::zero().is_zero());
        assert_eq!(x.degree(), 1);
    }

    #[test]
    fn idempotency_on_random_polys() {
        let mut state = 11u64;
        let mut next = move |n: u64| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        for _ in 0..1000 {
            let mut p = BoolPoly::zero();
            for _ in 0..next(6) {
                let mut m: Vec<u32> = (0..next(4)).map(|_| next(8) as u32).collect();
                m.sort_unstable();
                m.dedup();
                p.toggle(m);
            }
            assert_eq!(p.mul(&p).unwrap(), p);
        }
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let mut state = 17u64;
        let mut next = move |n: u64| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        for _ in 0..1000 {
            let rand_poly = |next: &mut dyn FnMut(u64) -> u64| {
                let mut p = BoolPoly::zero();
                for _ in 0..next(5) {
                    let mut m: Vec<u32> = (0..next(4)).map(|_| next(10) as u32).collect();
                    m.sort_unstable();
                    m.dedup();
                    p.toggle(m);
                }
                p
            };
            let p = rand_poly(&mut next);
            let q = rand_poly(&mut next);
            let assignment: Vec<bool> = (0..10).map(|_| next(2) == 1).collect();
            let ep = p.eval(&assignment).unwrap();
            let eq = q.eval(&assignment).unwrap();
            assert_eq!(p.add(&q).eval(&assignment).unwrap(), ep ^ eq);
            assert_eq!(p.mul(&q).unwrap().eval(&assignment).unwrap(), ep && eq);
        }
        assert!(BoolPoly::one().eval(&[]).unwrap());
        assert!(matches!(
            BoolPoly::var(5).eval(&[true, false]),
            Err(Error::MissingVariable(5))
        ));
    }

    #[test]
    fn eps_respects_the_relations() {
        let (g, h, _, vm) = g15_setup(5);
        for e in 0..g.order() {
            if h.contains(e) {
                assert!(eps(&vm, e).is_zero());
            } else {
                let s = eps(&vm, e).add(&eps(&vm, g.inv(e)));
                assert!(s.is_one(), "eps(g) + eps(g^-1) = 1 off H");
            }
        }
        assert_eq!(vm.num_vars(), 45);
    }

    #[test]
    fn e_poly_rejects_identity() {
        let (g, _, _, vm) = g15_setup(5);
        assert!(matches!(e_poly(&g, &vm, 0), Err(Error::IdentityK)));
    }

    #[test]
    fn e_poly_agrees_with_concrete_intersections() {
        // eval(E_k, sigma) = |D n kD| mod 2 for the subset D the
        // assignment encodes, against a brute-force set computation.
        let (g, _, _, vm) = g15_setup(5);
        let x = g.generator("x").unwrap();
        let z = g.generator("z").unwrap();
        let ks = [x, g.mul(x, g.mul(z, z)), g.mul(x, z)];
        let mut state = 23u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) & 1 == 1
        };
        for _ in 0..200 {
            let assignment: Vec<bool> = (0..vm.num_vars()).map(|_| next()).collect();
            let d = vm.subset_for(&g, &assignment);
            for &k in &ks {
                let ek = e_poly(&g, &vm, k).unwrap();
                let mut intersection = 0usize;
                for m in d.iter() {
                    if d.contains(g.mul(k, m)) {
                        intersection += 1;
                    }
                }
                assert_eq!(
                    ek.eval(&assignment).unwrap(),
                    intersection % 2 == 1,
                    "symbolic/concrete disagreement at k = {k}"
                );
            }
        }
    }

    #[test]
    fn z_poly_preconditions() {
        let (g, _, yset, vm) = g15_setup(5);
        let y = g.generator("y").unwrap();
        // Yk touches the identity when k lies in Y.
        assert!(matches!(
            z_poly(&g, &vm, &yset, g.inv(y)),
            Err(Error::IdentityK)
        ));
        let x = g.generator("x").unwrap();
        assert!(z_poly(&g, &vm, &yset, x).is_ok());
    }

    #[test]
    fn replay_at_p5() {
        let (cert, replay) = replay_g15(5).unwrap();
        assert!(replay.all_passed());
        assert_eq!(replay.identities.len(), G15_IDENTITIES.len());
        let g = make_family(&FamilySpec::new(Family::G15, 5).unwrap()).unwrap();
        cert.revalidate(&g).unwrap();
    }

    #[test]
    fn replay_rejects_bad_primes() {
        assert!(matches!(replay_g15(7), Err(Error::BadPrime { .. })));
        assert!(matches!(replay_g15(3), Err(Error::BadPrime { .. })));
    }

    #[test]
    fn unit_total_kills_every_assignment() {
        // Evaluating the certified unit at any pair-respecting assignment
        // gives 1, so some E_k is nonzero mod 2 and no assignment encodes
        // a difference set.
        let (g, _, yset, vm) = g15_setup(5);
        let x = g.generator("x").unwrap();
        let z2 = g.pow(g.generator("z").unwrap(), 2);
        let total = z_poly(&g, &vm, &yset, x)
            .unwrap()
            .add(&z_poly(&g, &vm, &yset, g.mul(x, z2)).unwrap())
            .add(&z_poly(&g, &vm, &yset, g.mul(g.pow(x, 2), z2)).unwrap());
        assert!(total.is_one());
        let mut state = 31u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) & 1 == 1
        };
        for _ in 0..100 {
            let assignment: Vec<bool> = (0..vm.num_vars()).map(|_| next()).collect();
            assert!(total.eval(&assignment).unwrap());
        }
    }

    #[test]
    fn unit_combination_search_finds_the_triple() {
        let (g, _, yset, vm) = g15_setup(5);
        let x = g.generator("x").unwrap();
        let z2 = g.pow(g.generator("z").unwrap(), 2);
        let reps = vec![x, g.mul(x, z2), g.mul(g.pow(x, 2), z2)];
        let found = find_unit_combination(&g, &vm, &yset, &reps, 3)
            .unwrap()
            .expect("the triple is a unit combination");
        assert_eq!(found, reps);
        // No subset works at all on an empty rep list.
        assert_eq!(find_unit_combination(&g, &vm, &yset, &[], 3).unwrap(), None);
    }

    #[test]
    fn no_unit_combination_where_a_witness_exists() {
        // Soundness: a group carrying an actual DRAD difference set can
        // never produce a unit combination.
        let tables = load_catalog(16).unwrap();
        for table in &tables {
            for h in crate::design::candidate_subgroups(table).unwrap() {
                let (witnesses, _) = crate::search::search_drad(
                    table,
                    &h,
                    &crate::search::SearchOptions::default(),
                )
                .unwrap();
                if witnesses.is_empty() {
                    continue;
                }
                let d = &witnesses[0];
                assert!(is_drad(table, &h, d).unwrap().accepted());
                let vm = VarMap::new(table, &h).unwrap();
                // Y := H works as a summing subgroup; representatives are
                // the nontrivial coset minima.
                let reps: Vec<Elem> = table
                    .cosets(&h)
                    .unwrap()
                    .iter()
                    .skip(1)
                    .map(|c| c.min_element().unwrap())
                    .collect();
                let combo =
                    find_unit_combination(table, &vm, &h, &reps, reps.len()).unwrap();
                assert_eq!(combo, None, "{}", table.name());
            }
        }
    }
}
