//! Real root isolation and refinement for squarefree integer polynomials.
//!
//! Isolation uses Descartes' rule of signs with bisection on the unit
//! interval (the Vincent-Collins-Akritas scheme); a Sturm-sequence counter is
//! kept for small polynomials and as a cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{gcd_int, primitive_int, rat_to_primitive_int, UniPoly};
use crate::scalar::{rat_to_f64, OrderedScalar};
use crate::{Int, IntPoly, Rat, RatPoly};

/// An isolating interval `[lo, hi]` containing exactly one real root. When
/// the root is rational and was found exactly, `lo == hi` and `exact` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub lo: Rat,
    pub hi: Rat,
    pub exact: bool,
}

impl IsolatedRoot {
    pub fn exact(r: Rat) -> Self {
        IsolatedRoot { lo: r.clone(), hi: r, exact: true }
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn approx(&self) -> f64 {
        rat_to_f64(&self.mid())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// True when `v` lies in the closed interval.
    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }
}

/// All real roots of a squarefree polynomial, sorted increasingly.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<IsolatedRoot>,
    pub precision_bits: u32,
}

/// Decimal text of a root approximation.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RootText {
    pub lo: String,
    pub hi: String,
    pub approx: String,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn approximations(&self) -> Vec<f64> {
        self.roots.iter().map(IsolatedRoot::approx).collect()
    }

    /// Decimal approximations carrying `precision_bits` worth of digits.
    pub fn decimal(&self) -> Vec<String> {
        let digits = ((self.precision_bits as f64) * std::f64::consts::LOG10_2).ceil() as usize;
        self.roots.iter().map(|r| rat_to_decimal(&r.mid(), digits.max(1))).collect()
    }
}

/// Sign of an integer polynomial at a rational point, exactly.
pub fn sign_at(p: &IntPoly, x: &Rat) -> i8 {
    let n = p.deg();
    if p.is_zero() {
        return 0;
    }
    let (a, b) = (x.numer(), x.denom());
    // Σ c_i a^i b^(n-i), Horner in a with b-powers folded in
    let mut acc = p.lc();
    let mut bpow = Int::one();
    for i in (0..n).rev() {
        bpow *= b;
        acc = acc * a + &p.coeffs()[i] * &bpow;
    }
    acc.signum().to_i8()
}

trait SignumI8 {
    fn to_i8(&self) -> i8;
}

impl SignumI8 for Int {
    fn to_i8(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

fn sign_variations(c: &[Int]) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for x in c {
        let s = x.to_i8();
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

fn taylor_shift_one(c: &mut [Int]) {
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

/// Upper bound on the Descartes count of roots of `c` in `(0, 1)`.
fn descartes_unit(c: &[Int]) -> usize {
    let mut r: Vec<Int> = c.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// Upper bound (Descartes) on the number of roots of `p` in the open
/// interval `(lo, hi)`.
pub fn descartes_bound(p: &IntPoly, lo: &Rat, hi: &Rat) -> usize {
    if p.is_zero() {
        return usize::MAX;
    }
    let n = p.deg();
    let m = lo.denom().lcm(hi.denom());
    let a = lo.numer() * (&m / lo.denom());
    let e = hi.numer() * (&m / hi.denom()) - &a;
    // m^n p((a + e y) / m), Horner with x = a + e y
    let mut acc: Vec<Int> = vec![p.lc()];
    let mut mpow = Int::one();
    for i in (0..n).rev() {
        mpow *= &m;
        let mut next = vec![Int::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k] += c * &a;
            next[k + 1] += c * &e;
        }
        next[0] += &p.coeffs()[i] * &mpow;
        acc = next;
    }
    descartes_unit(&acc)
}

/// Exponent `k` with every root strictly inside `(-2^k, 2^k)`.
fn root_bound_exp(p: &IntPoly) -> u64 {
    let n = p.deg();
    let lb = p.lc().bits() as i64;
    let mut k: i64 = 0;
    for i in 1..=n {
        let c = &p.coeffs()[n - i];
        if c.is_zero() {
            continue;
        }
        let e = (c.bits() as i64 - lb + 1 + i as i64 - 1) / i as i64 + 1;
        k = k.max(e);
    }
    (k + 1).max(1) as u64
}

fn scale_pow2(c: &[Int], k: u64) -> Vec<Int> {
    c.iter().enumerate().map(|(i, a)| a << (k as usize * i)).collect()
}

fn strip_pow2(c: &mut [Int]) {
    let tz = c.iter().filter(|a| !a.is_zero()).map(|a| a.trailing_zeros().unwrap_or(0)).min().unwrap_or(0);
    if tz > 0 {
        for a in c.iter_mut() {
            *a >>= tz as usize;
        }
    }
}

/// `(c, j)` standing for `c/2^j`.
type Dyad = (Int, u64);

/// Open intervals `(c/2^j, (c+1)/2^j)` of `(0, 1)` isolating the roots of
/// `c`, plus exact dyadic roots.
fn isolate_unit(coeffs: Vec<Int>) -> (Vec<Dyad>, Vec<Dyad>) {
    let mut intervals = Vec::new();
    let mut exact = Vec::new();
    let mut stack = vec![(coeffs, Int::zero(), 0u64)];
    while let Some((q, c, j)) = stack.pop() {
        let v = descartes_unit(&q);
        if v == 0 {
            continue;
        }
        if v == 1 {
            intervals.push((c, j));
            continue;
        }
        let n = q.len() - 1;
        // left half: 2^n q(x/2)
        let mut left: Vec<Int> = q.iter().enumerate().map(|(i, a)| a << (n - i)).collect();
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        if right[0].is_zero() {
            exact.push((&c * 2 + 1, j + 1));
            right.remove(0);
        }
        strip_pow2(&mut left);
        strip_pow2(&mut right);
        stack.push((right, &c * 2 + 1, j + 1));
        stack.push((left, &c * 2, j + 1));
    }
    (intervals, exact)
}

fn dyadic(num: Int, den_exp: u64) -> Rat {
    Rat::new(num, Int::one() << den_exp as usize)
}

/// Isolates every real root of a squarefree integer polynomial without any
/// refinement. Intervals are open except for exact roots.
pub fn isolate_descartes(p: &IntPoly) -> Vec<IsolatedRoot> {
    let mut p = primitive_int(p);
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    if p.coeffs()[0].is_zero() {
        out.push(IsolatedRoot::exact(Rat::zero()));
        p = UniPoly::from_coeffs(p.coeffs()[1..].to_vec());
    }
    if p.is_constant() {
        return out;
    }
    let k = root_bound_exp(&p);
    for side in [1i64, -1] {
        let base = if side == 1 { p.clone() } else { p.reflect() };
        let scaled = scale_pow2(base.coeffs(), k);
        let (ivs, ex) = isolate_unit(scaled);
        for (c, j) in ivs {
            let lo = dyadic(&c << k as usize, j);
            let hi = dyadic((&c + 1) << k as usize, j);
            out.push(if side == 1 {
                IsolatedRoot { lo, hi, exact: false }
            } else {
                IsolatedRoot { lo: -hi, hi: -lo, exact: false }
            });
        }
        for (c, j) in ex {
            let v = dyadic(&c << k as usize, j);
            out.push(IsolatedRoot::exact(if side == 1 { v } else { -v }));
        }
    }
    out.sort_by_key(|r| r.mid());
    out
}

/// Bisects an isolating interval until its width is at most `2^-bits` and
/// neither endpoint is a root of `p`. An endpoint may start out as a
/// neighbouring exact root; the sign just inside is then read off `p'`.
pub fn refine(p: &IntPoly, root: &IsolatedRoot, bits: u32) -> IsolatedRoot {
    if root.exact {
        return root.clone();
    }
    let target = Rat::new(Int::one(), Int::one() << bits as usize);
    let dp = p.derivative();
    let mut lo = root.lo.clone();
    let mut hi = root.hi.clone();
    let mut slo = sign_at(p, &lo);
    let mut lo_is_root = slo == 0;
    if lo_is_root {
        slo = sign_at(&dp, &lo);
    }
    let mut hi_is_root = sign_at(p, &hi) == 0;
    while &hi - &lo > target || lo_is_root || hi_is_root {
        let mid = (&lo + &hi) / Rat::from_integer(2.into());
        let s = sign_at(p, &mid);
        if s == 0 {
            return IsolatedRoot::exact(mid);
        }
        if s == slo {
            lo = mid;
            lo_is_root = false;
        } else {
            hi = mid;
            hi_is_root = false;
        }
    }
    IsolatedRoot { lo, hi, exact: false }
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    if lo > hi {
        return simplest_between(hi, lo);
    }
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + Rat::one() <= *hi {
        return fl + Rat::one();
    }
    // lo and hi share the integer part; recurse on reciprocals of the
    // fractional parts
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    let inner = simplest_between(&frac_hi.recip(), &frac_lo.recip());
    fl + inner.recip()
}

/// Tries to pin a root to an exact rational. A rational root `a/b` of a
/// primitive integer polynomial has `b | lc`, and two such rationals differ by
/// at least `1/lc²`, so once the interval is narrower than that the simplest
/// rational inside is the only candidate.
fn try_exact(p: &IntPoly, root: &IsolatedRoot, max_bits: u64) -> Option<IsolatedRoot> {
    let need = 2 * p.lc().bits() + 2;
    if need > max_bits {
        return None;
    }
    let narrow = refine(p, root, need as u32);
    if narrow.exact {
        return Some(narrow);
    }
    let cand = simplest_between(&narrow.lo, &narrow.hi);
    if !p.lc().is_multiple_of(cand.denom()) {
        return None;
    }
    (sign_at(p, &cand) == 0).then(|| IsolatedRoot::exact(cand))
}

/// Complete real root isolation of a squarefree polynomial, each interval
/// refined to width `2^-precision_bits`; rational roots with small
/// denominators are reported exactly.
pub fn isolate_real_roots(omega: &RatPoly, precision_bits: u32) -> Result<RootSet> {
    let p = rat_to_primitive_int(omega);
    isolate_real_roots_int(&p, precision_bits)
}

pub fn isolate_real_roots_int(p: &IntPoly, precision_bits: u32) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation"));
    }
    let p = primitive_int(p);
    if !gcd_int(&p, &p.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    let mut roots: Vec<IsolatedRoot> = isolate_descartes(&p)
        .iter()
        .map(|r| {
            let r = try_exact(&p, r, 256).unwrap_or_else(|| r.clone());
            refine(&p, &r, precision_bits)
        })
        .collect();
    roots.sort_by_key(|r| r.mid());
    Ok(RootSet { roots, precision_bits })
}

/// Whether `g` (a divisor of the polynomial that `root` isolates) vanishes at
/// that root.
pub fn divisor_vanishes_at(g: &IntPoly, root: &IsolatedRoot) -> bool {
    if g.is_constant() {
        return g.is_zero();
    }
    if root.exact {
        return sign_at(g, &root.lo) == 0;
    }
    let a = sign_at(g, &root.lo);
    let b = sign_at(g, &root.hi);
    a != 0 && b != 0 && a != b
}

/// Sturm sequence of a rational polynomial.
pub fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sturm_variations(seq: &[RatPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in seq {
        let sv = s.eval(x).signum_i8();
        if sv != 0 {
            if last != 0 && sv != last {
                v += 1;
            }
            last = sv;
        }
    }
    v
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn sturm_count(p: &RatPoly, a: &Rat, b: &Rat) -> usize {
    let seq = sturm_sequence(p);
    sturm_variations(&seq, a) - sturm_variations(&seq, b)
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn sturm_total(p: &RatPoly) -> usize {
    let ip = rat_to_primitive_int(p);
    if ip.is_constant() {
        return 0;
    }
    let k = root_bound_exp(&ip);
    let b = Rat::from_integer(Int::one() << k as usize);
    sturm_count(p, &-b.clone(), &b)
}

/// Decimal string of a rational with `digits` digits after the point
/// (truncated toward zero).
pub fn rat_to_decimal(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (a.numer() * &scale) / a.denom();
    let (ip, fp) = scaled.div_rem(&scale);
    let mut s = format!("{}{}", if neg { "-" } else { "" }, ip);
    if digits > 0 {
        let f = fp.to_string();
        s.push('.');
        s.push_str(&"0".repeat(digits - f.len()));
        s.push_str(&f);
    }
    s
}
