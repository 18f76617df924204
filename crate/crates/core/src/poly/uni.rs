//! Dense univariate polynomials over an arbitrary [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{ExactDiv, Field, Ring};

/// Dense polynomial in one variable, coefficients in ascending degree order.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> UniPoly<S> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_ref(&T::from_int(i as i64))).collect(),
        )
    }

    /// Horner evaluation at a point of the same ring.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Horner evaluation in another ring, lifting each coefficient.
    pub fn eval_in<V: Ring>(&self, x: &V, lift: impl Fn(&T) -> V) -> V {
        let mut acc = V::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(&lift(c));
        }
        acc
    }

    /// `self(other(t))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    /// `t^deg · self(1/t)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::from_coeffs(c)
    }

    /// `self(-t)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
        )
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = d.deg();
        let lcd = d.lc();
        let mut r = self.clone();
        if r.degree().is_none_or(|rd| rd < dd) {
            return r;
        }
        let mut steps = r.deg() - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lc();
            let mut coeffs: Vec<T> = r.coeffs.iter().map(|c| c.mul_ref(&lcd)).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = rd - dd + j;
                coeffs[k] = coeffs[k].sub_ref(&lr.mul_ref(dc));
            }
            r = Self::from_coeffs(coeffs);
            steps -= 1;
        }
        let mut factor = T::one();
        for _ in 0..steps {
            factor = factor.mul_ref(&lcd);
        }
        r.scale(&factor)
    }
}

impl<T: ExactDiv> UniPoly<T> {
    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.exact_div(c)).collect())
    }

    /// Exact division in `T[t]`; `None` when `d` does not divide `self`.
    ///
    /// Over an integral domain whose `exact_div` panics on inexact input this
    /// must only be used when each leading-coefficient division is exact,
    /// which [`crate::poly::IntPoly::divides`] checks first.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.deg();
        let sd = self.deg();
        if sd < dd {
            return None;
        }
        let lcd = d.lc();
        let mut rem = self.coeffs.clone();
        let mut q = vec![T::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let qk = lead.exact_div(&lcd);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&qk.mul_ref(dc));
            }
            q[k] = qk;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }
}

impl<T: Field> UniPoly<T> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    /// Euclidean division over a field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.degree().is_none_or(|sd| sd < dd) {
            return (Self::zero(), self.clone());
        }
        let sd = self.deg();
        let inv = d.lc().inv();
        let mut rem = self.coeffs.clone();
        let mut q = vec![T::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let qk = lead.mul_ref(&inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&qk.mul_ref(dc));
            }
            q[k] = qk;
        }
        rem.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    ///
    /// Exact over rationals but subject to coefficient growth; the rational
    /// polynomial type has a modular `gcd` that should be preferred there.
    pub fn euclid_gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Ring> Zero for UniPoly<T> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for UniPoly<T> {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl<'a, T: Ring> Add<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &'a UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::from_coeffs(out)
    }
}

impl<'a, T: Ring> Sub<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &'a UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::from_coeffs(out)
    }
}

impl<'a, T: Ring> Mul<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &'a UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<T: Ring> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Ring> Neg for UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for UniPoly<T> {
            type Output = UniPoly<T>;
            fn $m(self, rhs: UniPoly<T>) -> UniPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}
