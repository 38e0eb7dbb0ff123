//! Dense GF(2) linear systems with infeasibility witnesses.
//!
//! Rows are packed bit vectors with a right-hand-side bit. Elimination
//! tracks, for every reduced row, the combination of original rows it came
//! from; when a row reduces to `0 = 1` that combination is an infeasibility
//! certificate checkable by XORing the named original rows.

use serde::{Deserialize, Serialize};

/// Where a row of a parity system came from; carried through into
/// certificates so a system can be regenerated and re-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowSource {
    /// Basis coordinate `basis_index` of the equation contributed by the
    /// `char_index`-th vanishing character.
    CharacterCoord { char_index: usize, basis_index: usize },
    /// The balance equation of the `coset_index`-th nontrivial coset.
    CosetBalance { coset_index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Row {
    pub bits: Vec<u64>,
    pub rhs: bool,
    pub source: RowSource,
}

/// A linear system over GF(2) in `vars` unknowns.
#[derive(Clone, Debug, Default)]
pub struct Gf2System {
    pub vars: usize,
    pub rows: Vec<Gf2Row>,
}

/// Outcome of elimination: either some solution, or the index set of
/// original rows whose XOR is the contradiction `0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gf2Outcome {
    Satisfiable { solution: Vec<bool> },
    Infeasible { combination: Vec<usize> },
}

impl Gf2System {
    pub fn new(vars: usize) -> Self {
        Gf2System {
            vars,
            rows: Vec::new(),
        }
    }

    pub fn blocks(&self) -> usize {
        self.vars.div_ceil(64)
    }

    pub fn add_row(&mut self, var_indices: &[usize], rhs: bool, source: RowSource) {
        let mut bits = vec![0u64; self.blocks()];
        for &v in var_indices {
            debug_assert!(v < self.vars);
            bits[v / 64] ^= 1 << (v % 64);
        }
        self.rows.push(Gf2Row { bits, rhs, source });
    }

    /// XOR-toggle of a single coefficient while building a row directly.
    pub fn add_raw_row(&mut self, bits: Vec<u64>, rhs: bool, source: RowSource) {
        debug_assert_eq!(bits.len(), self.blocks());
        self.rows.push(Gf2Row { bits, rhs, source });
    }

    /// Does a full assignment satisfy every row?
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assert!(assignment.len() >= self.vars);
        self.rows.iter().all(|row| {
            let mut acc = false;
            for (w, &bits) in row.bits.iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let v = w * 64 + b.trailing_zeros() as usize;
                    acc ^= assignment[v];
                    b &= b - 1;
                }
            }
            acc == row.rhs
        })
    }

    /// Gaussian elimination with deterministic pivoting: columns left to
    /// right, pivot row chosen as the first unused row with the bit set.
    pub fn eliminate(&self) -> Gf2Outcome {
        let n = self.rows.len();
        let blocks = self.blocks();
        let comb_blocks = n.div_ceil(64).max(1);
        // Working copy: coefficient bits, rhs, and combination tracker.
        let mut work: Vec<(Vec<u64>, bool, Vec<u64>)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut comb = vec![0u64; comb_blocks];
                comb[i / 64] |= 1 << (i % 64);
                (r.bits.clone(), r.rhs, comb)
            })
            .collect();

        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.vars];
        let mut next_row = 0;
        for col in 0..self.vars {
            let (w, m) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (next_row..n).find(|&r| work[r].0[w] & m != 0) else {
                continue;
            };
            work.swap(next_row, p);
            for r in 0..n {
                if r != next_row && work[r].0[w] & m != 0 {
                    let (a, b) = split_two(&mut work, r, next_row);
                    for i in 0..blocks {
                        a.0[i] ^= b.0[i];
                    }
                    a.1 ^= b.1;
                    for i in 0..comb_blocks {
                        a.2[i] ^= b.2[i];
                    }
                }
            }
            pivot_of_col[col] = Some(next_row);
            next_row += 1;
            if next_row == n {
                break;
            }
        }

        // Any zero row with rhs 1 certifies infeasibility.
        for (bits, rhs, comb) in &work {
            if *rhs && bits.iter().all(|&b| b == 0) {
                let combination = (0..n)
                    .filter(|&i| comb[i / 64] >> (i % 64) & 1 == 1)
                    .collect();
                return Gf2Outcome::Infeasible { combination };
            }
        }

        // Back-read a particular solution: free variables are zero, pivot
        // variables take their row's rhs (rows are fully reduced).
        let mut solution = vec![false; self.vars];
        for col in 0..self.vars {
            if let Some(r) = pivot_of_col[col] {
                solution[col] = work[r].1;
            }
        }
        debug_assert!(self.is_satisfied_by(&solution));
        Gf2Outcome::Satisfiable { solution }
    }

    /// Re-checks an infeasibility combination against the original rows:
    /// their XOR must have zero coefficients and rhs 1.
    pub fn verify_infeasibility(&self, combination: &[usize]) -> bool {
        let mut bits = vec![0u64; self.blocks()];
        let mut rhs = false;
        for &i in combination {
            let Some(row) = self.rows.get(i) else {
                return false;
            };
            for (a, b) in bits.iter_mut().zip(&row.bits) {
                *a ^= b;
            }
            rhs ^= row.rhs;
        }
        rhs && bits.iter().all(|&b| b == 0)
    }
}

type WorkRow = (Vec<u64>, bool, Vec<u64>);

fn split_two(v: &mut [WorkRow], a: usize, b: usize) -> (&mut WorkRow, &WorkRow) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coset(i: usize) -> RowSource {
        RowSource::CosetBalance { coset_index: i }
    }

    #[test]
    fn solvable_system() {
        let mut sys = Gf2System::new(3);
        sys.add_row(&[0, 1], true, coset(0));
        sys.add_row(&[1, 2], true, coset(1));
        sys.add_row(&[0, 2], false, coset(2));
        match sys.eliminate() {
            Gf2Outcome::Satisfiable { solution } => {
                assert!(sys.is_satisfied_by(&solution));
            }
            Gf2Outcome::Infeasible { .. } => panic!("system is satisfiable"),
        }
    }

    #[test]
    fn infeasible_system_yields_checkable_combination() {
        let mut sys = Gf2System::new(3);
        sys.add_row(&[0, 1], true, coset(0));
        sys.add_row(&[1, 2], false, coset(1));
        sys.add_row(&[0, 2], false, coset(2)); // sum of all three: 0 = 1
        match sys.eliminate() {
            Gf2Outcome::Infeasible { combination } => {
                assert!(sys.verify_infeasibility(&combination));
                assert_eq!(combination, vec![0, 1, 2]);
            }
            Gf2Outcome::Satisfiable { .. } => panic!("system is infeasible"),
        }
    }

    #[test]
    fn verify_rejects_wrong_combinations() {
        let mut sys = Gf2System::new(2);
        sys.add_row(&[0], true, coset(0));
        sys.add_row(&[0], false, coset(1));
        assert!(sys.verify_infeasibility(&[0, 1]));
        assert!(!sys.verify_infeasibility(&[0]));
        assert!(!sys.verify_infeasibility(&[7]));
        assert!(!sys.verify_infeasibility(&[]));
    }

    #[test]
    fn wide_systems_cross_block_boundaries() {
        let mut sys = Gf2System::new(130);
        sys.add_row(&[0, 129], true, coset(0));
        sys.add_row(&[129], true, coset(1));
        sys.add_row(&[0], false, coset(2));
        match sys.eliminate() {
            Gf2Outcome::Satisfiable { solution } => {
                assert!(!solution[0]);
                assert!(solution[129]);
            }
            _ => panic!("satisfiable"),
        }
        // Adding the XOR of the three rows with flipped rhs forces 0 = 1.
        sys.add_row(&[], true, coset(3));
        match sys.eliminate() {
            Gf2Outcome::Infeasible { combination } => {
                assert!(sys.verify_infeasibility(&combination));
            }
            _ => panic!("infeasible"),
        }
    }
}
