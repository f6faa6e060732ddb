//! Exact rational scalars and the few integer helpers the crate leans on.
//!
//! `Rat` is always reduced with a positive denominator; `num_rational`
//! maintains that invariant on every constructor and operation.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// `p/q` from machine integers. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

pub fn rat_u64(p: u64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"` with optional sign, rejecting zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidParameter(String::from("rational must be \"p/q\" or \"p\""));
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::InvalidParameter(String::from("zero denominator")));
    }
    Ok(Rat::new(numer, denom))
}

/// Non-negative integer power by repeated multiplication.
pub fn rat_powi(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Floor of a rational as a `BigInt`.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// `n choose k` in arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `n!` in arbitrary precision.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Least common multiple of the denominators of a rational vector.
pub fn denominator_lcm(v: &[Rat]) -> BigUint {
    let mut acc = BigUint::one();
    for r in v {
        acc = acc.lcm(r.denom().magnitude());
    }
    acc
}

/// Clears denominators: returns `(w, l)` with `w` integral and `w/l == v`
/// componentwise, `l > 0`, and `gcd(w_1, …, w_n, l) == 1`.
pub fn scale_to_integers(v: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let l = BigInt::from(denominator_lcm(v));
    let scaled: Vec<BigInt> = v.iter().map(|r| (r * Rat::from_integer(l.clone())).to_integer()).collect();
    let mut g = l.clone();
    for s in &scaled {
        g = g.gcd(s);
    }
    if g.is_one() || g.is_zero() {
        return (scaled, l);
    }
    (scaled.iter().map(|s| s / &g).collect(), l / &g)
}

/// Writes a rational in the canonical `p/q` (or plain `p`) form.
pub fn rat_to_string(r: &Rat) -> String {
    use alloc::string::ToString;
    r.to_string()
}
