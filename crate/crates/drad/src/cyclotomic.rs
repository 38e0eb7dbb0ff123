//! Exact arithmetic in rings of cyclotomic integers.
//!
//! An element of `Z[zeta_n]` is an integer coefficient vector of length
//! `phi(n)` in the power basis `1, zeta, .., zeta^(phi(n)-1)`, reduced
//! modulo the n-th cyclotomic polynomial. All arithmetic is exact; there is
//! no floating point anywhere, so a zero test is a genuine proof that a sum
//! of roots of unity vanishes.

use crate::error::{Error, Result};

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(mut n: usize) -> usize {
    let mut phi = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division: `x^n - 1` divided by the product of all
/// `Phi_d` with `d | n`, `d < n`. The result is monic of degree `phi(n)`.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    let mut cache: Vec<Option<Vec<i64>>> = vec![None; n + 1];
    cyclotomic_rec(n, &mut cache)
}

fn cyclotomic_rec(n: usize, cache: &mut Vec<Option<Vec<i64>>>) -> Vec<i64> {
    if let Some(p) = &cache[n] {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_rec(d, cache);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    cache[n] = Some(num.clone());
    num
}

/// Exact division of integer polynomials with monic divisor; panics if the
/// division leaves a remainder, which cannot happen for cyclotomic factors.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - dd] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i - dd + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

/// A cyclotomic integer: conductor `n` plus `phi(n)` power-basis
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycInt {
    n: usize,
    coeffs: Vec<i64>,
}

/// Shared reduction data for a fixed conductor: the power-basis images of
/// `zeta^k` for `k` up to `n`, so that arbitrary exponents reduce by table
/// lookup.
pub struct CycRing {
    n: usize,
    phi: usize,
    /// `zeta^k` as a basis vector, for `0 <= k < n`.
    powers: Vec<Vec<i64>>,
    modulus: Vec<i64>,
}

impl CycRing {
    pub fn new(n: usize) -> Self {
        let modulus = cyclotomic_poly(n);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n);
        // Iteratively multiply by zeta, reducing the top coefficient with
        // the monic modulus whenever the degree reaches phi(n).
        let mut cur = vec![0i64; phi];
        if phi > 0 {
            cur[0] = 1;
        }
        for _ in 0..n {
            powers.push(cur.clone());
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * modulus[i];
                }
            }
        }
        CycRing {
            n,
            phi,
            powers,
            modulus,
        }
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: vec![0; self.phi],
        }
    }

    pub fn from_int(&self, c: i64) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    pub fn one(&self) -> CycInt {
        self.from_int(1)
    }

    /// `zeta_n^a`, exponent taken mod `n`.
    pub fn zeta_pow(&self, a: i64) -> CycInt {
        let a = a.rem_euclid(self.n as i64) as usize;
        CycInt {
            n: self.n,
            coeffs: self.powers[a].clone(),
        }
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.check(a)?;
        self.check(b)?;
        Ok(CycInt {
            n: self.n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn sub(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &CycInt) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scalar_mul(&self, c: i64, a: &CycInt) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: a.coeffs.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.check(a)?;
        self.check(b)?;
        let mut conv = vec![0i64; 2 * self.phi];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                conv[i + j] += x * y;
            }
        }
        // Reduce degrees >= phi(n) against the monic modulus.
        for i in (self.phi..conv.len()).rev() {
            let c = conv[i];
            if c == 0 {
                continue;
            }
            conv[i] = 0;
            for (j, &mc) in self.modulus.iter().enumerate().take(self.phi) {
                conv[i - self.phi + j] -= c * mc;
            }
        }
        conv.truncate(self.phi);
        Ok(CycInt {
            n: self.n,
            coeffs: conv,
        })
    }

    /// Adds `zeta^a` into `acc` in place; the workhorse for character sums.
    pub fn add_zeta_pow(&self, acc: &mut CycInt, a: i64) {
        let a = a.rem_euclid(self.n as i64) as usize;
        for (c, p) in acc.coeffs.iter_mut().zip(&self.powers[a]) {
            *c += p;
        }
    }

    fn check(&self, a: &CycInt) -> Result<()> {
        if a.n != self.n {
            return Err(Error::ConductorMismatch(self.n, a.n));
        }
        Ok(())
    }
}

impl CycInt {
    pub fn conductor(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Whether `i = sqrt(-1)` lies in the n-th cyclotomic field. The roots of
/// unity in `Q(zeta_n)` form a cyclic group of order `lcm(2, n)`, so this
/// is exactly divisibility of `n` by 4.
pub fn contains_i(n: usize) -> bool {
    n % 4 == 0
}
