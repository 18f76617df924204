//! Closed intervals with outward-rounded (floating) or exact (rational)
//! endpoints.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::scalar::OrderedScalar;
use crate::Rat;

/// Endpoint arithmetic with directed rounding.
pub trait Bound: Clone + PartialOrd + Debug + Send + Sync + Zero + One + Neg<Output = Self> {
    fn add_down(&self, o: &Self) -> Self;
    fn add_up(&self, o: &Self) -> Self;
    fn mul_down(&self, o: &Self) -> Self;
    fn mul_up(&self, o: &Self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Bound for f64 {
    fn add_down(&self, o: &Self) -> Self {
        (self + o).next_down()
    }
    fn add_up(&self, o: &Self) -> Self {
        (self + o).next_up()
    }
    fn mul_down(&self, o: &Self) -> Self {
        let p = self * o;
        if p == 0.0 && (*self == 0.0 || *o == 0.0) {
            0.0
        } else {
            p.next_down()
        }
    }
    fn mul_up(&self, o: &Self) -> Self {
        let p = self * o;
        if p == 0.0 && (*self == 0.0 || *o == 0.0) {
            0.0
        } else {
            p.next_up()
        }
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Bound for Rat {
    fn add_down(&self, o: &Self) -> Self {
        self + o
    }
    fn add_up(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_down(&self, o: &Self) -> Self {
        self * o
    }
    fn mul_up(&self, o: &Self) -> Self {
        self * o
    }
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(v.into())
    }
    fn to_f64(&self) -> f64 {
        self.to_f64_lossy()
    }
}

/// A rational endpoint whose directed operations round outward to
/// `DYADIC_BITS` fractional bits, keeping denominators bounded.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Dyadic(pub Rat);

pub const DYADIC_BITS: usize = 384;

impl Dyadic {
    fn floor(r: Rat) -> Self {
        if r.denom().bits() as usize <= DYADIC_BITS + 1 {
            return Dyadic(r);
        }
        let n = num_integer::Integer::div_floor(&(r.numer() << DYADIC_BITS), r.denom());
        Dyadic(Rat::new(n, BigInt::one() << DYADIC_BITS))
    }

    fn ceil(r: Rat) -> Self {
        let Dyadic(f) = Dyadic::floor(-r);
        Dyadic(-f)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, o: Dyadic) -> Dyadic {
        Dyadic(self.0 + o.0)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, o: Dyadic) -> Dyadic {
        Dyadic(self.0 * o.0)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic(-self.0)
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic(Rat::one())
    }
}

impl Bound for Dyadic {
    fn add_down(&self, o: &Self) -> Self {
        Dyadic::floor(&self.0 + &o.0)
    }
    fn add_up(&self, o: &Self) -> Self {
        Dyadic::ceil(&self.0 + &o.0)
    }
    fn mul_down(&self, o: &Self) -> Self {
        Dyadic::floor(&self.0 * &o.0)
    }
    fn mul_up(&self, o: &Self) -> Self {
        Dyadic::ceil(&self.0 * &o.0)
    }
    fn from_i64(v: i64) -> Self {
        Dyadic(Rat::from_integer(v.into()))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64_lossy()
    }
}

pub type DyadicInterval = Interval<Dyadic>;

impl From<&RatInterval> for DyadicInterval {
    fn from(r: &RatInterval) -> Self {
        Interval { lo: Dyadic::floor(r.lo.clone()), hi: Dyadic::ceil(r.hi.clone()) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Interval<B> {
    pub lo: B,
    pub hi: B,
}

pub type FloatInterval = Interval<f64>;
pub type RatInterval = Interval<Rat>;

impl<B: Bound> Interval<B> {
    pub fn new(lo: B, hi: B) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        Interval { lo, hi }
    }

    pub fn point(v: B) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= B::zero() && self.hi >= B::zero()
    }

    pub fn contains(&self, v: &B) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// Certified sign: `Some` only when the interval excludes zero, or is
    /// the single point zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo > B::zero() {
            Some(1)
        } else if self.hi < B::zero() {
            Some(-1)
        } else if self.lo == B::zero() && self.hi == B::zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn width_f64(&self) -> f64 {
        self.hi.to_f64() - self.lo.to_f64()
    }

    pub fn mid_f64(&self) -> f64 {
        0.5 * (self.hi.to_f64() + self.lo.to_f64())
    }

    pub fn hull(&self, o: &Self) -> Self {
        let lo = if self.lo <= o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi >= o.hi { self.hi.clone() } else { o.hi.clone() };
        Interval { lo, hi }
    }

    pub fn square(&self) -> Self {
        if self.lo >= B::zero() {
            Interval { lo: self.lo.mul_down(&self.lo), hi: self.hi.mul_up(&self.hi) }
        } else if self.hi <= B::zero() {
            Interval { lo: self.hi.mul_down(&self.hi), hi: self.lo.mul_up(&self.lo) }
        } else {
            let a = self.lo.mul_up(&self.lo);
            let b = self.hi.mul_up(&self.hi);
            Interval { lo: B::zero(), hi: if a >= b { a } else { b } }
        }
    }
}

impl FloatInterval {
    pub fn sqrt(&self) -> Self {
        let lo = if self.lo <= 0.0 { 0.0 } else { self.lo.sqrt().next_down().max(0.0) };
        Interval { lo, hi: self.hi.max(0.0).sqrt().next_up() }
    }

    pub fn from_rat(r: &Rat) -> Self {
        let v = r.to_f64_lossy();
        Interval { lo: v.next_down(), hi: v.next_up() }
    }
}

impl RatInterval {
    /// Enclosure of the square root with `bits` fractional bits at each end.
    pub fn sqrt(&self, bits: u32) -> Self {
        Interval { lo: sqrt_floor(&self.lo, bits), hi: sqrt_ceil(&self.hi, bits) }
    }

    pub fn to_float(&self) -> FloatInterval {
        Interval { lo: self.lo.to_f64_lossy().next_down(), hi: self.hi.to_f64_lossy().next_up() }
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    /// Quotient enclosure; `None` when the divisor contains zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let inv = Interval { lo: o.hi.recip(), hi: o.lo.recip() };
        Some(self * &inv)
    }
}

/// Largest dyadic `k / 2^bits` with square at most `a` (0 for `a <= 0`).
pub fn sqrt_floor(a: &Rat, bits: u32) -> Rat {
    if !a.is_positive() {
        return Rat::zero();
    }
    let scaled = (a.numer() << (2 * bits as usize)) / a.denom();
    let r: BigInt = num_integer::Roots::sqrt(&scaled);
    Rat::new(r, BigInt::one() << bits as usize)
}

/// Smallest dyadic `k / 2^bits` with square at least `a`.
pub fn sqrt_ceil(a: &Rat, bits: u32) -> Rat {
    if !a.is_positive() {
        return Rat::zero();
    }
    let lo = sqrt_floor(a, bits);
    if &(&lo * &lo) == a {
        lo
    } else {
        lo + Rat::new(BigInt::one(), BigInt::one() << bits as usize)
    }
}

impl<B: Bound> Zero for Interval<B> {
    fn zero() -> Self {
        Interval::point(B::zero())
    }
    fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

impl<B: Bound> One for Interval<B> {
    fn one() -> Self {
        Interval::point(B::one())
    }
}

impl<B: Bound> FromPrimitive for Interval<B> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Interval::point(B::from_i64(n)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        i64::try_from(n).ok().map(|v| Interval::point(B::from_i64(v)))
    }
}

impl<'a, B: Bound> Add<&'a Interval<B>> for &'a Interval<B> {
    type Output = Interval<B>;
    fn add(self, o: &'a Interval<B>) -> Interval<B> {
        Interval { lo: self.lo.add_down(&o.lo), hi: self.hi.add_up(&o.hi) }
    }
}

impl<'a, B: Bound> Sub<&'a Interval<B>> for &'a Interval<B> {
    type Output = Interval<B>;
    fn sub(self, o: &'a Interval<B>) -> Interval<B> {
        Interval { lo: self.lo.add_down(&-o.hi.clone()), hi: self.hi.add_up(&-o.lo.clone()) }
    }
}

impl<'a, B: Bound> Mul<&'a Interval<B>> for &'a Interval<B> {
    type Output = Interval<B>;
    fn mul(self, o: &'a Interval<B>) -> Interval<B> {
        let cands_lo =
            [self.lo.mul_down(&o.lo), self.lo.mul_down(&o.hi), self.hi.mul_down(&o.lo), self.hi.mul_down(&o.hi)];
        let cands_hi = [self.lo.mul_up(&o.lo), self.lo.mul_up(&o.hi), self.hi.mul_up(&o.lo), self.hi.mul_up(&o.hi)];
        let lo = cands_lo
            .into_iter()
            .reduce(|a, b| if b.partial_cmp(&a) == Some(Ordering::Less) { b } else { a })
            .expect("nonempty");
        let hi = cands_hi
            .into_iter()
            .reduce(|a, b| if b.partial_cmp(&a) == Some(Ordering::Greater) { b } else { a })
            .expect("nonempty");
        Interval { lo, hi }
    }
}

impl<B: Bound> Neg for Interval<B> {
    type Output = Interval<B>;
    fn neg(self) -> Interval<B> {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<B: Bound> $tr for Interval<B> {
            type Output = Interval<B>;
            fn $m(self, rhs: Interval<B>) -> Interval<B> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Lifts an exact rational into a floating interval enclosure.
pub fn lift_rat(r: &Rat) -> FloatInterval {
    FloatInterval::from_rat(r)
}

/// Lifts an integer-coefficient value into an exact rational interval.
pub fn lift_int_exact(c: &BigInt) -> RatInterval {
    Interval::point(Rat::from_integer(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;
    use crate::RatPoly;

    fn is_ring<T: Ring>() {}

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn polynomial_enclosures() {
        is_ring::<FloatInterval>();
        is_ring::<RatInterval>();
        let p = RatPoly::from_ints(&[0, 0, 1]);
        let i = RatInterval::new(r(1, 1), r(2, 1));
        let e = p.eval_in(&i, |c| Interval::point(c.clone()));
        assert!(e.lo <= r(1, 1) && e.hi >= r(4, 1));
        let f = FloatInterval::new(1.0, 2.0);
        let ef = p.eval_in(&f, lift_rat);
        assert!(ef.lo <= 1.0 && ef.hi >= 4.0);
    }

    #[test]
    fn outward_rounding_contains_exact_value() {
        let a = FloatInterval::from_rat(&r(1, 10));
        let b = FloatInterval::from_rat(&r(2, 10));
        let s = &a + &b;
        assert!(s.lo < 0.3 && s.hi > 0.3);
        let prod = &a * &FloatInterval::new(-3.0, 2.0);
        assert!(prod.lo <= -0.3 && prod.hi >= 0.2);
    }

    #[test]
    fn square_roots() {
        let two = RatInterval::point(r(2, 1));
        let s = two.sqrt(60);
        assert!(&s.lo * &s.lo <= r(2, 1));
        assert!(&s.hi * &s.hi >= r(2, 1));
        assert!((s.width_f64()) < 1e-15);
        let four = RatInterval::point(r(4, 1)).sqrt(10);
        assert_eq!(four, RatInterval::point(r(2, 1)));
        let f = FloatInterval::new(2.0, 2.0).sqrt();
        assert!(f.lo * f.lo <= 2.0 && f.hi * f.hi >= 2.0);
        assert_eq!(RatInterval::new(r(-1, 1), r(4, 1)).square(), RatInterval::new(r(0, 1), r(16, 1)));
    }

    #[test]
    fn dyadic_rounding_encloses() {
        is_ring::<DyadicInterval>();
        let tiny = Rat::new(BigInt::one(), BigInt::from(3) << 500usize);
        let d = DyadicInterval::from(&RatInterval::point(tiny.clone()));
        assert!(d.lo.0 < tiny && d.hi.0 > tiny);
        assert!(d.hi.0.denom().bits() as usize <= DYADIC_BITS + 1);
        let third = DyadicInterval::from(&RatInterval::point(r(1, 3)));
        assert_eq!(third.lo.0, r(1, 3));
        let sq = &d * &d;
        assert!(sq.lo.0 <= &tiny * &tiny && sq.hi.0 >= &tiny * &tiny);
        let p = RatPoly::from_ints(&[-1, 3]);
        let e = p.eval_in(&third, |c| DyadicInterval::from(&RatInterval::point(c.clone())));
        assert!(e.contains_zero());
        let exact = DyadicInterval::from(&RatInterval::point(r(5, 8)));
        assert_eq!(exact.lo.0, r(5, 8));
    }

    #[test]
    fn signs() {
        assert_eq!(FloatInterval::new(1.0, 2.0).sign(), Some(1));
        assert_eq!(FloatInterval::new(-1.0, 2.0).sign(), None);
        assert_eq!(RatInterval::point(Rat::zero()).sign(), Some(0));
    }
}
