//! Polynomials in `t` and `α` reduced modulo `α² = S(t)`.

use super::UniPoly;
use crate::scalar::Ring;

/// `even(t) + odd(t)·α`, canonical modulo `α² − S(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPolyTA<T> {
    pub even: UniPoly<T>,
    pub odd: UniPoly<T>,
}

impl<T: Ring> BiPolyTA<T> {
    pub fn new(even: UniPoly<T>, odd: UniPoly<T>) -> Self {
        BiPolyTA { even, odd }
    }

    pub fn zero() -> Self {
        Self::new(UniPoly::zero(), UniPoly::zero())
    }

    pub fn from_even(even: UniPoly<T>) -> Self {
        Self::new(even, UniPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// `α^k` reduced by `α² = s`.
    pub fn alpha_pow(k: u32, s: &UniPoly<T>) -> Self {
        let half = s.pow(k / 2);
        if k.is_multiple_of(2) {
            Self::from_even(half)
        } else {
            Self::new(UniPoly::zero(), half)
        }
    }

    /// Reduces a polynomial in `α` given by its coefficients (ascending in
    /// `α`) to canonical form.
    pub fn from_alpha_coeffs(coeffs: &[UniPoly<T>], s: &UniPoly<T>) -> Self {
        let mut e = UniPoly::zero();
        let mut o = UniPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let term = c * &s.pow((k / 2) as u32);
            if k % 2 == 0 {
                e = &e + &term;
            } else {
                o = &o + &term;
            }
        }
        Self::new(e, o)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.even + &o.even, &self.odd + &o.odd)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.even - &o.even, &self.odd - &o.odd)
    }

    pub fn scale_poly(&self, c: &UniPoly<T>, mul: impl Fn(&UniPoly<T>, &UniPoly<T>) -> UniPoly<T>) -> Self {
        Self::new(mul(&self.even, c), mul(&self.odd, c))
    }

    /// Product reduced by `α² = s`, with a caller-chosen polynomial product.
    pub fn mul_with(&self, o: &Self, s: &UniPoly<T>, mul: impl Fn(&UniPoly<T>, &UniPoly<T>) -> UniPoly<T>) -> Self {
        let ee = mul(&self.even, &o.even);
        let oo = mul(&self.odd, &o.odd);
        let eo = mul(&self.even, &o.odd);
        let oe = mul(&self.odd, &o.even);
        Self::new(&ee + &mul(&oo, s), &eo + &oe)
    }

    pub fn mul(&self, o: &Self, s: &UniPoly<T>) -> Self {
        self.mul_with(o, s, |a, b| a * b)
    }

    /// Evaluation at `(t, α)` in any ring the coefficients lift into.
    pub fn eval_in<V: Ring>(&self, t: &V, alpha: &V, lift: impl Fn(&T) -> V + Copy) -> V {
        self.even.eval_in(t, lift).add_ref(&self.odd.eval_in(t, lift).mul_ref(alpha))
    }
}

/// Splits a reduced form into `(ξ₁, η₁)` = (odd part, even part).
pub fn reduce_alpha<T: Ring>(a: &BiPolyTA<T>) -> (UniPoly<T>, UniPoly<T>) {
    (a.odd.clone(), a.even.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn reduction_examples() {
        let s = ip(&[1, 0, 4]);
        let a = BiPolyTA::new(ip(&[0, 0, 1]), ip(&[0, 1]));
        assert_eq!(reduce_alpha(&a), (ip(&[0, 1]), ip(&[0, 0, 1])));
        let cube = BiPolyTA::alpha_pow(3, &s);
        assert_eq!(reduce_alpha(&cube), (s.clone(), IntPoly::zero()));
        let direct = BiPolyTA::from_alpha_coeffs(&[ip(&[2]), ip(&[0]), ip(&[0]), ip(&[1])], &s);
        assert_eq!(direct, BiPolyTA::new(ip(&[2]), s.clone()));
    }

    #[test]
    fn product_matches_alpha_arithmetic() {
        let s = ip(&[1, 2, 3]);
        let a = BiPolyTA::new(ip(&[1, 1]), ip(&[2]));
        let b = BiPolyTA::new(ip(&[0, 3]), ip(&[-1, 1]));
        let p = a.mul(&b, &s);
        let even = &(&ip(&[1, 1]) * &ip(&[0, 3])) + &(&(&ip(&[2]) * &ip(&[-1, 1])) * &s);
        let odd = &(&ip(&[1, 1]) * &ip(&[-1, 1])) + &(&ip(&[2]) * &ip(&[0, 3]));
        assert_eq!(p, BiPolyTA::new(even, odd));
    }
}
