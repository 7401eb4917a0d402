//! Independent oracles shared by the integration tests. Nothing here calls
//! into the digit machinery of the crate under test.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use redim_core::ExactRational;

/// First `len` digits of `p/q` (0 < p <= q) by schoolbook long division,
/// with a terminating expansion rewritten to end in nines.
pub fn long_division_digits(p: &BigUint, q: &BigUint, len: usize) -> Vec<u8> {
    if p == q {
        return vec![9; len];
    }
    let mut digits = Vec::with_capacity(len);
    let mut r = p.clone();
    while digits.len() < len {
        r *= 10u32;
        let (d, rem) = r.div_rem(q);
        digits.push(d.to_u8().unwrap());
        r = rem;
        if r.is_zero() {
            *digits.last_mut().unwrap() -= 1;
            digits.resize(len.max(digits.len()), 9);
            break;
        }
    }
    digits.truncate(len);
    digits
}

pub fn rational_digits(x: &ExactRational, len: usize) -> Vec<u8> {
    let p = x.numer().magnitude().clone();
    let q = x.denom().magnitude().clone();
    long_division_digits(&p, &q, len)
}

/// Split a finite digit prefix into zero-run groups, dropping a trailing
/// incomplete run of zeros.
pub fn groups(digits: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for &d in digits {
        current.push(d);
        if d != 0 {
            out.push(std::mem::take(&mut current));
        }
    }
    out
}

/// Interleave the groups of two digit prefixes and return the first `len`
/// digits of the result (inputs must be long enough).
pub fn interleave_prefix(a: &[u8], b: &[u8], len: usize) -> Vec<u8> {
    let (ga, gb) = (groups(a), groups(b));
    let mut out = Vec::new();
    for (x, y) in ga.iter().zip(&gb) {
        out.extend(x);
        out.extend(y);
        if out.len() >= len {
            break;
        }
    }
    assert!(out.len() >= len, "prefixes too short for {len} digits");
    out.truncate(len);
    out
}

/// Odd- and even-numbered groups of a digit prefix, flattened.
pub fn deinterleave_prefix(y: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, g) in groups(y).into_iter().enumerate() {
        if i % 2 == 0 {
            a.extend(g);
        } else {
            b.extend(g);
        }
    }
    (a, b)
}

pub fn q(s: &str) -> ExactRational {
    s.parse().unwrap()
}
