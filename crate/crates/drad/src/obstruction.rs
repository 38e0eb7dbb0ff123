//! Nonexistence engines and their machine-checkable certificates.
//!
//! Three obstructions can rule out a DRAD difference set for `(G, H)`
//! without any search:
//!
//! * **Involution index**: the subgroup generated by all involutions must
//!   fit inside `H`, so its order may not exceed `sqrt(|G|)`.
//! * **Character field**: a nonprincipal linear character with
//!   `chi(H) = 0` forces `chi(D) = +-(h/2) i`, impossible when the
//!   character's values generate a field without `i` (conductor not
//!   divisible by 4).
//! * **Parity infeasibility**: for every vanishing character whose field
//!   does contain `i`, the same identity becomes a linear equation over
//!   `Z[zeta_n]`; reducing each power-basis coordinate mod 2 kills the
//!   unknown sign, and together with the coset balance equations mod 2
//!   this yields a GF(2) system any DRAD set must satisfy. Infeasibility
//!   is certified by an explicit row combination XORing to `0 = 1`.
//!
//! Every certificate re-validates from its payload plus the group it names.

use base64::Engine as _;
use serde::{Deserialize, Serialize};

use crate::bits::SubsetBits;
use crate::characters::{char_sum, linear_characters, LinChar};
use crate::cyclotomic::{contains_i, CycRing};
use crate::design::{candidate_subgroups, isqrt};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Outcome, Gf2System, RowSource};
use crate::group::GroupTable;
use crate::search::inverse_pairs;

/// A character carried inside a certificate: `images[g]` is the exponent
/// of `zeta_n` at element `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPayload {
    pub n: usize,
    pub images: Vec<usize>,
}

/// One row of a serialized parity system; bits are the base64 of the
/// little-endian packed coefficient blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRow {
    pub bits: String,
    pub rhs: bool,
    pub source: RowSource,
}

/// Machine-checkable evidence that `(G, H)` admits no DRAD difference set
/// (or, for the search kinds, that an exhaustive search settled it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ObstructionCert {
    /// The involutions generate a subgroup too large to fit in any `H`.
    InvolutionIndex {
        group: String,
        involution_subgroup_order: usize,
        bound: usize,
        subgroup: Vec<usize>,
    },
    /// A vanishing character with values in a field not containing `i`.
    CharacterField {
        group: String,
        #[serde(rename = "H")]
        h: Vec<usize>,
        character: CharPayload,
        conductor: usize,
    },
    /// The GF(2) parity system is infeasible; `combination` XORs to 0 = 1.
    ParityInfeasible {
        group: String,
        #[serde(rename = "H")]
        h: Vec<usize>,
        vars: usize,
        rows: Vec<ParityRow>,
        combination: Vec<usize>,
    },
    /// A subset of coset representatives whose summed coefficient
    /// polynomials reduce to the unit of the Boolean quotient ring.
    BoolRingUnit {
        group: String,
        #[serde(rename = "H")]
        h: Vec<usize>,
        y_subgroup: Vec<usize>,
        reps: Vec<usize>,
    },
    /// Exhaustive search over all pair choices found nothing.
    ExhaustedSearch {
        group: String,
        #[serde(rename = "H")]
        h: Vec<usize>,
        nodes: u64,
    },
    /// No normal subgroup of order `sqrt(|G|)` contains all involutions.
    NoCandidateH {
        group: String,
        involution_subgroup_order: usize,
    },
}

impl ObstructionCert {
    pub fn kind(&self) -> &'static str {
        match self {
            ObstructionCert::InvolutionIndex { .. } => "InvolutionIndex",
            ObstructionCert::CharacterField { .. } => "CharacterField",
            ObstructionCert::ParityInfeasible { .. } => "ParityInfeasible",
            ObstructionCert::BoolRingUnit { .. } => "BoolRingUnit",
            ObstructionCert::ExhaustedSearch { .. } => "ExhaustedSearch",
            ObstructionCert::NoCandidateH { .. } => "NoCandidateH",
        }
    }

    pub fn group(&self) -> &str {
        match self {
            ObstructionCert::InvolutionIndex { group, .. }
            | ObstructionCert::CharacterField { group, .. }
            | ObstructionCert::ParityInfeasible { group, .. }
            | ObstructionCert::BoolRingUnit { group, .. }
            | ObstructionCert::ExhaustedSearch { group, .. }
            | ObstructionCert::NoCandidateH { group, .. } => group,
        }
    }

    /// One-line human statement of what the certificate proves.
    pub fn conclusion(&self) -> String {
        match self {
            ObstructionCert::InvolutionIndex {
                group,
                involution_subgroup_order,
                bound,
                ..
            } => format!(
                "{group}: involutions generate a subgroup of order {involution_subgroup_order} > {bound}, no subgroup H can contain it"
            ),
            ObstructionCert::CharacterField { group, conductor, .. } => format!(
                "{group}: a vanishing linear character takes values in the conductor-{conductor} field, which does not contain i"
            ),
            ObstructionCert::ParityInfeasible { group, combination, .. } => format!(
                "{group}: {} parity rows XOR to the contradiction 0 = 1",
                combination.len()
            ),
            ObstructionCert::BoolRingUnit { group, reps, .. } => format!(
                "{group}: coefficient polynomials over {} coset representatives sum to 1 in the Boolean quotient ring",
                reps.len()
            ),
            ObstructionCert::ExhaustedSearch { group, nodes, .. } => {
                format!("{group}: exhaustive search visited {nodes} nodes and found no witness")
            }
            ObstructionCert::NoCandidateH { group, .. } => {
                format!("{group}: no admissible subgroup H exists")
            }
        }
    }

    /// Re-derives the certified fact from the payload and the named group.
    pub fn revalidate(&self, g: &GroupTable) -> Result<()> {
        let fail = |msg: &str| -> Result<()> {
            Err(Error::IdentityViolation(format!(
                "certificate {} for {}: {msg}",
                self.kind(),
                self.group()
            )))
        };
        match self {
            ObstructionCert::InvolutionIndex {
                involution_subgroup_order,
                bound,
                subgroup,
                ..
            } => {
                let sub = g.subgroup_generated(&g.involutions());
                if sub.count() != *involution_subgroup_order
                    || &sub.to_indices() != subgroup
                    || isqrt(g.order()) != Some(*bound)
                    || sub.count() <= *bound
                {
                    return fail("involution subgroup does not match");
                }
                Ok(())
            }
            ObstructionCert::CharacterField {
                h,
                character,
                conductor,
                ..
            } => {
                if character.images.len() != g.order() {
                    return fail("character length mismatch");
                }
                let chi = LinChar {
                    n: character.n,
                    exps: character.images.clone(),
                };
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        if chi.exps[g.mul(a, b)] != (chi.exps[a] + chi.exps[b]) % chi.n {
                            return fail("not a homomorphism");
                        }
                    }
                }
                if chi.is_principal() {
                    return fail("character is principal");
                }
                let hset = SubsetBits::from_indices(g.order(), h);
                if !char_sum(&chi, &hset).is_zero() {
                    return fail("character does not vanish on H");
                }
                if chi.image_conductor() != *conductor || contains_i(*conductor) {
                    return fail("conductor admits i");
                }
                Ok(())
            }
            ObstructionCert::ParityInfeasible {
                h,
                vars,
                rows,
                combination,
                ..
            } => {
                let hset = SubsetBits::from_indices(g.order(), h);
                let sys = build_parity_system(g, &hset)?;
                if sys.vars != *vars || sys.rows.len() != rows.len() {
                    return fail("regenerated system shape differs");
                }
                for (ours, stored) in sys.rows.iter().zip(rows) {
                    let stored_bits = decode_bits(&stored.bits, sys.blocks())
                        .ok_or_else(|| Error::Parse {
                            line: 0,
                            msg: "bad base64 in certificate row".into(),
                        })?;
                    if ours.bits != stored_bits
                        || ours.rhs != stored.rhs
                        || ours.source != stored.source
                    {
                        return fail("regenerated rows differ from payload");
                    }
                }
                if !sys.verify_infeasibility(combination) {
                    return fail("combination does not XOR to 0 = 1");
                }
                Ok(())
            }
            ObstructionCert::BoolRingUnit {
                h, y_subgroup, reps, ..
            } => {
                let hset = SubsetBits::from_indices(g.order(), h);
                let yset = SubsetBits::from_indices(g.order(), y_subgroup);
                let vm = crate::boolring::VarMap::new(g, &hset)?;
                let mut total = crate::boolring::BoolPoly::zero();
                for &k in reps {
                    let zk = crate::boolring::z_poly(g, &vm, &yset, k)?;
                    total = total.add(&zk);
                }
                if !total.is_one() {
                    return fail("coefficient sum is not the unit");
                }
                Ok(())
            }
            ObstructionCert::ExhaustedSearch { h, .. } => {
                let hset = SubsetBits::from_indices(g.order(), h);
                let (witnesses, _) =
                    crate::search::search_drad(g, &hset, &crate::search::SearchOptions::default())?;
                if !witnesses.is_empty() {
                    return fail("re-search found a witness");
                }
                Ok(())
            }
            ObstructionCert::NoCandidateH {
                involution_subgroup_order,
                ..
            } => {
                let sub = g.subgroup_generated(&g.involutions());
                if sub.count() != *involution_subgroup_order {
                    return fail("involution subgroup order differs");
                }
                if !candidate_subgroups(g)?.is_empty() {
                    return fail("candidate subgroups exist");
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn encode_bits(bits: &[u64]) -> String {
    let mut bytes = Vec::with_capacity(bits.len() * 8);
    for b in bits {
        bytes.extend_from_slice(&b.to_le_bytes());
    }
    base64::engine::general_purpose::STANDARD.encode(bytes)
}

pub(crate) fn decode_bits(s: &str, blocks: usize) -> Option<Vec<u64>> {
    let bytes = base64::engine::general_purpose::STANDARD.decode(s).ok()?;
    if bytes.len() != blocks * 8 {
        return None;
    }
    Some(
        bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect(),
    )
}

/// Fires when the subgroup generated by the involutions is larger than
/// `sqrt(|G|)`, the largest subgroup any candidate `H` could be.
pub fn involution_obstruction(g: &GroupTable) -> Result<Option<ObstructionCert>> {
    let bound = isqrt(g.order()).ok_or(Error::NotSquareOrder { order: g.order() })?;
    let sub = g.subgroup_generated(&g.involutions());
    if sub.count() > bound {
        Ok(Some(ObstructionCert::InvolutionIndex {
            group: g.name().to_string(),
            involution_subgroup_order: sub.count(),
            bound,
            subgroup: sub.to_indices(),
        }))
    } else {
        Ok(None)
    }
}

/// Scans all nonprincipal linear characters vanishing on `H` for one whose
/// image conductor is not divisible by 4; such a character's field misses
/// `i` and the square identity `chi(D)^2 = -(h/2)^2` cannot hold.
///
/// When several characters qualify the certificate records the one with
/// the largest image conductor (the largest value field still missing
/// `i`), ties broken by exponent-vector order.
pub fn lemma_test(g: &GroupTable, h: &SubsetBits) -> Option<ObstructionCert> {
    let mut best: Option<(usize, &LinChar)> = None;
    let chars = linear_characters(g);
    for chi in chars.iter().skip(1) {
        if !char_sum(chi, h).is_zero() {
            continue;
        }
        let m = chi.image_conductor();
        if !contains_i(m) && best.is_none_or(|(bm, _)| m > bm) {
            best = Some((m, chi));
        }
    }
    best.map(|(m, chi)| ObstructionCert::CharacterField {
        group: g.name().to_string(),
        h: h.to_indices(),
        character: CharPayload {
            n: chi.n,
            images: chi.exps.clone(),
        },
        conductor: m,
    })
}

/// Builds the GF(2) system every DRAD difference set for `(G, H)` must
/// satisfy, in the canonical pair variables (one variable per inverse pair
/// outside `H`, representing membership of the smaller element).
///
/// Rows come from two sources:
/// * for every nonprincipal character with `chi(H) = 0` whose image field
///   contains `i` (conductor divisible by 4), the coordinates of
///   `sum_g eps_g chi(g) = +-(h/2) i` over the power basis of its image
///   field, reduced mod 2 after substituting `eps_{g^-1} = 1 - eps_g`; the
///   sign ambiguity vanishes mod 2, so one equation per character covers
///   both square roots;
/// * for every nontrivial coset, `sum_{g in Hc} eps_g = h/2 mod 2`.
pub fn build_parity_system(g: &GroupTable, h: &SubsetBits) -> Result<Gf2System> {
    let pairs = inverse_pairs(g, h)?.pairs;
    let nvars = pairs.len();
    let mut var_of = vec![usize::MAX; g.order()];
    for (v, &(a, b)) in pairs.iter().enumerate() {
        var_of[a] = v;
        var_of[b] = v;
    }
    let canonical = |e: usize| -> bool { pairs[var_of[e]].0 == e };
    let half = (h.count() / 2) as i64;

    let mut sys = Gf2System::new(nvars);
    let blocks = sys.blocks();

    let chars = linear_characters(g);
    let mut char_index = 0;
    for chi in chars.iter().skip(1) {
        if !char_sum(chi, h).is_zero() {
            continue;
        }
        let m = chi.image_conductor();
        if !contains_i(m) {
            // Field without i: lemma territory, not expressible here.
            continue;
        }
        let ring = CycRing::new(m);
        let phi = ring.phi();
        // Substitute eps_{b} = 1 - eps_{a} pair by pair:
        //   sum_v eps_v (chi(a_v) - chi(b_v)) = delta (h/2) i - sum_v chi(b_v).
        let mut rhs = ring.scalar_mul(half, &ring.zeta_pow(m as i64 / 4));
        let mut coeffs = Vec::with_capacity(nvars);
        for &(a, b) in &pairs {
            let va = chi.value_in(&ring, a);
            let vb = chi.value_in(&ring, b);
            coeffs.push(ring.sub(&va, &vb)?);
            rhs = ring.sub(&rhs, &vb)?;
        }
        for t in 0..phi {
            let mut bits = vec![0u64; blocks];
            for (v, c) in coeffs.iter().enumerate() {
                if c.coeffs()[t] & 1 != 0 {
                    bits[v / 64] ^= 1 << (v % 64);
                }
            }
            sys.add_raw_row(
                bits,
                rhs.coeffs()[t] & 1 != 0,
                RowSource::CharacterCoord {
                    char_index,
                    basis_index: t,
                },
            );
        }
        char_index += 1;
    }

    for (ci, coset) in g.cosets(h)?.iter().enumerate().skip(1) {
        let mut bits = vec![0u64; blocks];
        let mut constant = 0i64;
        for e in coset.iter() {
            let v = var_of[e];
            bits[v / 64] ^= 1 << (v % 64);
            if !canonical(e) {
                constant += 1;
            }
        }
        sys.add_raw_row(
            bits,
            (half + constant) & 1 != 0,
            RowSource::CosetBalance { coset_index: ci },
        );
    }
    Ok(sys)
}

/// The canonical pair variables of the parity system, and the GF(2)
/// assignment a concrete difference set induces on them.
pub fn parity_assignment(g: &GroupTable, h: &SubsetBits, d: &SubsetBits) -> Result<Vec<bool>> {
    let pairs = inverse_pairs(g, h)?.pairs;
    Ok(pairs.iter().map(|&(a, _)| d.contains(a)).collect())
}

/// Runs GF(2) elimination on the parity system; an inconsistency is
/// returned as a certificate naming the contradicting row combination.
pub fn parity_obstruction(g: &GroupTable, h: &SubsetBits) -> Result<Option<ObstructionCert>> {
    let sys = build_parity_system(g, h)?;
    match sys.eliminate() {
        Gf2Outcome::Infeasible { combination } => {
            debug_assert!(sys.verify_infeasibility(&combination));
            let rows = sys
                .rows
                .iter()
                .map(|r| ParityRow {
                    bits: encode_bits(&r.bits),
                    rhs: r.rhs,
                    source: r.source.clone(),
                })
                .collect();
            Ok(Some(ObstructionCert::ParityInfeasible {
                group: g.name().to_string(),
                h: h.to_indices(),
                vars: sys.vars,
                rows,
                combination,
            }))
        }
        Gf2Outcome::Satisfiable { .. } => Ok(None),
    }
}
