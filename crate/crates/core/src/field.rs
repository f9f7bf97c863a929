//! Exact arithmetic in the prime field Z/pZ for a machine-word prime p.
//!
//! A [`PrimeField`] is the computation context: it holds the modulus and
//! performs all arithmetic. Elements ([`Fp`]) store only the canonical
//! residue, which keeps large term lists compact.

use std::cell::Cell;
use std::fmt;

use crate::error::Error;

/// Largest admissible modulus: products must fit in a `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

thread_local! {
    static OP_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Resets the per-thread field operation counter.
pub fn reset_op_count() {
    OP_COUNT.with(|c| c.set(0));
}

/// Number of field operations (add/sub/mul/inv) performed on this thread
/// since the last reset.
pub fn op_count() -> u64 {
    OP_COUNT.with(|c| c.get())
}

#[inline]
fn bump() {
    OP_COUNT.with(|c| c.set(c.get() + 1));
}

/// An element of Z/pZ, stored as the canonical residue in `[0, p)`.
///
/// The modulus lives in the [`PrimeField`] that created the element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp(u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The canonical representative in `[0, p)`.
    #[inline]
    pub fn rep(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field Z/pZ. Immutable once constructed; safe to share across
/// threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Creates the field, verifying that `p` is a prime in `(2, 2^62)`.
    pub fn new(p: u64) -> Result<PrimeField, Error> {
        if p <= 2 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical element from an arbitrary unsigned integer.
    #[inline]
    pub fn elem(&self, n: u64) -> Fp {
        Fp(n % self.p)
    }

    /// Canonical element from a signed integer.
    #[inline]
    pub fn elem_i64(&self, n: i64) -> Fp {
        let r = n.rem_euclid(self.p as i64);
        Fp(r as u64)
    }

    #[inline]
    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        bump();
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        bump();
        Fp(if a.0 >= b.0 { a.0 - b.0 } else { self.p - (b.0 - a.0) })
    }

    #[inline]
    pub fn neg(&self, a: Fp) -> Fp {
        if a.0 == 0 {
            a
        } else {
            Fp(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        bump();
        Fp(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Fp) -> Result<Fp, Error> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        bump();
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (self.p as i128, a.0 as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1, "modulus must be prime");
        Ok(Fp(t.rem_euclid(self.p as i128) as u64))
    }

    pub fn div(&self, a: Fp, b: Fp) -> Result<Fp, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, mut base: Fp, mut e: u64) -> Fp {
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin primality test, exact for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
