//! Sparse polynomials in `x`, `y`, `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{FromPrimitive, One, Zero};

use super::gcd::{gcd_int, try_div_int};
use super::UniPoly;
use crate::error::Error;
use crate::scalar::{ExactDiv, Ring};
use crate::{Int, IntPoly};

/// Exponent triple `(e_x, e_y, e_t)`.
pub type Exp = [u32; 3];

pub const X: usize = 0;
pub const Y: usize = 1;
pub const T: usize = 2;

/// Sparse polynomial in `x, y, t`; lexicographic term order `x > y > t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriPoly<C> {
    terms: BTreeMap<Exp, C>,
}

impl<C: Ring> TriPoly<C> {
    pub fn zero() -> Self {
        TriPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn term(c: C, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TriPoly { terms }
    }

    pub fn x() -> Self {
        Self::term(C::one(), [1, 0, 0])
    }

    pub fn y() -> Self {
        Self::term(C::one(), [0, 1, 0])
    }

    pub fn t() -> Self {
        Self::term(C::one(), [0, 0, 1])
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Univariate polynomial in `t` lifted into the `t` slot.
    pub fn from_uni_t(p: &UniPoly<C>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| ([0, 0, k as u32], c.clone())))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exp) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Degree in one variable (`X`, `Y` or `T`), 0 for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Total degree in `x` and `y`.
    pub fn total_degree_xy(&self) -> u32 {
        self.terms.keys().map(|e| e[X] + e[Y]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e[X] + e[Y] + e[T]).max().unwrap_or(0)
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Exp, &C)> {
        self.terms.iter().next_back()
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TriPoly<D> {
        TriPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e2 = *e;
            e2[var] -= 1;
            (e2, c.mul_ref(&C::from_int(e[var] as i64)))
        }))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(C::one());
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

    /// Evaluation in any ring the coefficients lift into.
    pub fn eval_in<V: Ring>(&self, x: &V, y: &V, t: &V, lift: impl Fn(&C) -> V) -> V {
        let px = powers(x, self.degree_in(X));
        let py = powers(y, self.degree_in(Y));
        let pt = powers(t, self.degree_in(T));
        let mut acc = V::zero();
        for (e, c) in &self.terms {
            let m = px[e[X] as usize].mul_ref(&py[e[Y] as usize]).mul_ref(&pt[e[T] as usize]);
            acc = acc.add_ref(&lift(c).mul_ref(&m));
        }
        acc
    }

    pub fn eval(&self, x: &C, y: &C, t: &C) -> C {
        self.eval_in(x, y, t, C::clone)
    }

    /// Substitutes values for `x` and `y`, leaving a polynomial in `t`.
    pub fn eval_xy(&self, x: &C, y: &C) -> UniPoly<C> {
        let px = powers(x, self.degree_in(X));
        let py = powers(y, self.degree_in(Y));
        let mut out = vec![C::zero(); self.degree_in(T) as usize + 1];
        for (e, c) in &self.terms {
            let v = c.mul_ref(&px[e[X] as usize]).mul_ref(&py[e[Y] as usize]);
            let k = e[T] as usize;
            out[k] = out[k].add_ref(&v);
        }
        UniPoly::from_coeffs(out)
    }

    /// View as a polynomial in `t` with coefficients in `C[x, y]`.
    pub fn to_uni_t(&self) -> UniPoly<TriPoly<C>> {
        let n = self.degree_in(T) as usize;
        let mut out = vec![TriPoly::zero(); n + 1];
        for (e, c) in &self.terms {
            out[e[T] as usize].add_term([e[X], e[Y], 0], c.clone());
        }
        UniPoly::from_coeffs(out)
    }

    /// Inverse of [`TriPoly::to_uni_t`]; coefficient `t`-exponents are ignored.
    pub fn from_coeffs_t(p: &UniPoly<TriPoly<C>>) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            for (e, v) in &c.terms {
                out.add_term([e[X], e[Y], k as u32], v.clone());
            }
        }
        out
    }

    /// Groups terms by their `(x, y)` exponent, giving polynomials in `t`.
    pub fn xy_slices(&self) -> BTreeMap<[u32; 2], UniPoly<C>> {
        let mut raw: BTreeMap<[u32; 2], Vec<C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = raw.entry([e[X], e[Y]]).or_default();
            let k = e[T] as usize;
            if v.len() <= k {
                v.resize(k + 1, C::zero());
            }
            v[k] = c.clone();
        }
        raw.into_iter().map(|(k, v)| (k, UniPoly::from_coeffs(v))).collect()
    }

    /// Rebuilds from `(x, y)`-indexed polynomials in `t`.
    pub fn from_xy_slices(slices: &BTreeMap<[u32; 2], UniPoly<C>>) -> Self {
        let mut out = Self::zero();
        for (k, p) in slices {
            for (et, c) in p.coeffs().iter().enumerate() {
                out.add_term([k[0], k[1], et as u32], c.clone());
            }
        }
        out
    }
}

fn powers<V: Ring>(v: &V, n: u32) -> Vec<V> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(V::one());
    for i in 1..=n as usize {
        let next = out[i - 1].mul_ref(v);
        out.push(next);
    }
    out
}

impl<C: ExactDiv> TriPoly<C> {
    /// Exact multivariate division by lex-leading terms; `None` when `d`
    /// does not divide `self`.
    pub fn try_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.leading()?;
        let (de, dc) = (*de, dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((re, rc)) = r.leading() {
            if (0..3).any(|i| re[i] < de[i]) {
                return None;
            }
            let qc = rc.try_exact_div(&dc)?;
            let qe = [re[0] - de[0], re[1] - de[1], re[2] - de[2]];
            for (e, c) in &d.terms {
                let e2 = [e[0] + qe[0], e[1] + qe[1], e[2] + qe[2]];
                r.add_term(e2, -c.mul_ref(&qc));
            }
            q.add_term(qe, qc);
        }
        Some(q)
    }
}

impl TriPoly<Int> {
    /// Gcd of all integer coefficients, nonnegative.
    pub fn integer_content(&self) -> Int {
        let mut g = Int::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the integer content (sign preserved).
    pub fn primitive_integer(&self) -> Self {
        let g = self.integer_content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.map(|c| c / &g)
    }

    /// Content with respect to the variables in `vars`: the gcd, in
    /// `Z[vars]`, of the coefficients of `self` viewed as a polynomial in
    /// the remaining variables. An empty `vars` gives the integer content.
    ///
    /// Only contents in at most one variable are supported.
    pub fn content_primpart(&self, vars: &[usize]) -> Result<(Self, Self), Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content of the zero polynomial"));
        }
        match vars {
            [] => {
                let g = self.integer_content();
                Ok((Self::constant(g.clone()), self.map(|c| c / &g)))
            }
            [v] => {
                let v = *v;
                let mut groups: BTreeMap<[u32; 3], Vec<Int>> = BTreeMap::new();
                for (e, c) in &self.terms {
                    let mut key = *e;
                    key[v] = 0;
                    let slot = groups.entry(key).or_default();
                    let k = e[v] as usize;
                    if slot.len() <= k {
                        slot.resize(k + 1, Int::zero());
                    }
                    slot[k] = c.clone();
                }
                let mut g = IntPoly::zero();
                for coeffs in groups.values() {
                    g = gcd_int(&g, &IntPoly::from_coeffs(coeffs.clone()));
                }
                let mut out = Self::zero();
                for (key, coeffs) in groups {
                    let q = try_div_int(&IntPoly::from_coeffs(coeffs), &g).expect("content divides every coefficient");
                    for (k, c) in q.into_coeffs().into_iter().enumerate() {
                        let mut e = key;
                        e[v] = k as u32;
                        out.add_term(e, c);
                    }
                }
                let mut content = Self::zero();
                for (k, c) in g.coeffs().iter().enumerate() {
                    let mut e = [0, 0, 0];
                    e[v] = k as u32;
                    content.add_term(e, c.clone());
                }
                Ok((content, out))
            }
            _ => Err(Error::Unsupported("content in more than one variable")),
        }
    }

    /// Content in `t` as a univariate polynomial, primitive over `Z`.
    pub fn content_t(&self) -> IntPoly {
        let mut g = IntPoly::zero();
        for s in self.xy_slices().values() {
            g = gcd_int(&g, s);
            if g.is_constant() {
                return IntPoly::one();
            }
        }
        super::gcd::primitive_int(&g)
    }

    /// Largest coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.terms.values().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl<C: Ring> Zero for TriPoly<C> {
    fn zero() -> Self {
        TriPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for TriPoly<C> {
    fn one() -> Self {
        TriPoly::constant(C::one())
    }
}

impl<C: Ring> FromPrimitive for TriPoly<C> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(TriPoly::constant(C::from_int(n)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        i64::try_from(n).ok().map(|v| TriPoly::constant(C::from_int(v)))
    }
}

impl<'a, C: Ring> Add<&'a TriPoly<C>> for &'a TriPoly<C> {
    type Output = TriPoly<C>;
    fn add(self, rhs: &'a TriPoly<C>) -> TriPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Sub<&'a TriPoly<C>> for &'a TriPoly<C> {
    type Output = TriPoly<C>;
    fn sub(self, rhs: &'a TriPoly<C>) -> TriPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Mul<&'a TriPoly<C>> for &'a TriPoly<C> {
    type Output = TriPoly<C>;
    fn mul(self, rhs: &'a TriPoly<C>) -> TriPoly<C> {
        let mut out = TriPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Ring> Neg for TriPoly<C> {
    type Output = TriPoly<C>;
    fn neg(self) -> TriPoly<C> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for TriPoly<C> {
            type Output = TriPoly<C>;
            fn $m(self, rhs: TriPoly<C>) -> TriPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: ExactDiv> ExactDiv for TriPoly<C> {
    fn exact_div(&self, divisor: &Self) -> Self {
        self.try_div(divisor).expect("inexact polynomial division")
    }

    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        self.try_div(divisor)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TriPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (name, k) in ["x", "y", "t"].iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for TriPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntTriPoly, Rat};
    use proptest::prelude::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn content_examples() {
        let x = IntTriPoly::x();
        let y = IntTriPoly::y();
        let t = IntTriPoly::t();
        let p = &(&t.pow(2) * &x).scale(&int(6)) + &(&t * &y).scale(&int(9));
        let (c, prim) = p.content_primpart(&[T]).unwrap();
        assert_eq!(c, t.scale(&int(3)));
        assert_eq!(prim, &(&t * &x).scale(&int(2)) + &y.scale(&int(3)));
        assert_eq!(&c * &prim, p);
        let (c1, _) = prim.content_primpart(&[T]).unwrap();
        assert_eq!(c1, IntTriPoly::constant(int(1)));
        assert!(IntTriPoly::zero().content_primpart(&[]).is_err());
        assert!(p.content_primpart(&[X, Y]).is_err());
    }

    #[test]
    fn evaluation_and_views() {
        let p = &(&IntTriPoly::x() * &IntTriPoly::t()) + &IntTriPoly::y().pow(2);
        assert_eq!(p.eval(&int(2), &int(3), &int(5)), int(19));
        assert_eq!(p.eval_xy(&int(2), &int(3)), IntPoly::from_ints(&[9, 2]));
        assert_eq!(IntTriPoly::from_coeffs_t(&p.to_uni_t()), p);
        assert_eq!(IntTriPoly::from_xy_slices(&p.xy_slices()), p);
        assert_eq!(p.derivative(Y), IntTriPoly::y().scale(&int(2)));
        let r = p.eval_in(&Rat::new(1.into(), 2.into()), &Rat::zero(), &Rat::from_integer(4.into()), |c| {
            Rat::from_integer(c.clone())
        });
        assert_eq!(r, Rat::from_integer(2.into()));
    }

    #[test]
    fn exact_division() {
        let a = &IntTriPoly::x() + &IntTriPoly::y();
        let b = &IntTriPoly::x() - &IntTriPoly::t().scale(&int(3));
        let prod = &a * &b;
        assert_eq!(prod.try_div(&a), Some(b.clone()));
        assert_eq!(prod.try_div(&b), Some(a.clone()));
        assert_eq!((&prod + &IntTriPoly::constant(int(1))).try_div(&a), None);
    }

    fn tri() -> impl Strategy<Value = IntTriPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..4), -20i64..20), 1..7)
            .prop_map(|ts| IntTriPoly::from_terms(ts.into_iter().map(|((a, b, c), v)| ([a, b, c], int(v)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn content_reconstructs(p in tri()) {
            prop_assume!(!p.is_zero());
            for vars in [&[][..], &[T][..], &[X][..], &[Y][..]] {
                let (c, prim) = p.content_primpart(vars).unwrap();
                prop_assert_eq!(&c * &prim, p.clone());
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in tri(), b in tri(), x in -5i64..5, y in -5i64..5, t in -5i64..5) {
            let (x, y, t) = (int(x), int(y), int(t));
            prop_assert_eq!((&a * &b).eval(&x, &y, &t), a.eval(&x, &y, &t) * b.eval(&x, &y, &t));
            prop_assert_eq!((&a + &b).eval(&x, &y, &t), a.eval(&x, &y, &t) + b.eval(&x, &y, &t));
            prop_assert_eq!((&a - &b).eval(&x, &y, &t), a.eval(&x, &y, &t) - b.eval(&x, &y, &t));
        }
    }
}
