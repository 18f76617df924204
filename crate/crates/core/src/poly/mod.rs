//! Polynomial types and algorithms.

pub mod alpha;
pub mod gcd;
pub mod modp;
pub mod tri;
pub mod uni;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Int, IntPoly, Rat, RatPoly};

pub use gcd::{
    bitsize, content_int, gcd_int, gcd_uni, primitive_int, squarefree, squarefree_part_int, try_div_int, yun_int,
};
pub use tri::TriPoly;
pub use uni::UniPoly;

/// Polynomial product over the integers.
///
/// Large operands are multiplied by Kronecker substitution: both are packed
/// into one big integer each, multiplied once, and unpacked.
pub fn mul_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let la = a.coeffs().len();
    let lb = b.coeffs().len();
    if la.min(lb) < 24 {
        return a * b;
    }
    let ma = max_bits(a);
    let mb = max_bits(b);
    let lg = 64 - (la.min(lb) as u64).leading_zeros() as u64;
    let bits = (ma + mb + lg + 2).div_ceil(8) * 8;
    let pa = kron_pack(a.coeffs(), bits);
    let pb = kron_pack(b.coeffs(), bits);
    let prod = pa * pb;
    IntPoly::from_coeffs(kron_unpack(&prod, bits, la + lb - 1))
}

fn max_bits(p: &IntPoly) -> u64 {
    p.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn kron_pack(coeffs: &[Int], bits: u64) -> Int {
    let slot = (bits / 8) as usize;
    let mut pos = vec![0u8; slot * coeffs.len()];
    let mut neg = vec![0u8; slot * coeffs.len()];
    for (i, c) in coeffs.iter().enumerate() {
        let (sign, mag) = c.to_bytes_le();
        let dst = if sign == Sign::Minus { &mut neg } else { &mut pos };
        dst[i * slot..i * slot + mag.len()].copy_from_slice(&mag);
    }
    BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&pos))
        - BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&neg))
}

fn kron_unpack(v: &Int, bits: u64, len: usize) -> Vec<Int> {
    let slot = (bits / 8) as usize;
    let mut bytes = v.to_signed_bytes_le();
    let fill = if v.is_negative() { 0xff } else { 0 };
    bytes.resize(slot * len, fill);
    let half = BigInt::one() << (bits - 1);
    let full = BigInt::one() << bits;
    let mut carry = BigInt::zero();
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let chunk = &bytes[i * slot..(i + 1) * slot];
        let mut digit = BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(chunk)) + &carry;
        if digit >= half {
            digit -= &full;
            carry = BigInt::one();
        } else {
            carry = BigInt::zero();
        }
        out.push(digit);
    }
    out
}

/// Least common multiple of the denominators of a rational polynomial.
pub fn denominator_lcm(p: &RatPoly) -> Int {
    p.coeffs().iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()))
}

/// Integer polynomial as a rational one.
pub fn int_to_rat(p: &IntPoly) -> RatPoly {
    p.map(|c| Rat::from_integer(c.clone()))
}

/// Clears denominators and returns the primitive integer form with positive
/// leading coefficient.
pub fn rat_to_primitive_int(p: &RatPoly) -> IntPoly {
    let l = denominator_lcm(p);
    let ip = p.map(|c| (c * Rat::from_integer(l.clone())).to_integer());
    primitive_int(&ip)
}

/// Monic rational form of an integer polynomial.
pub fn int_to_monic(p: &IntPoly) -> RatPoly {
    int_to_rat(p).monic()
}
