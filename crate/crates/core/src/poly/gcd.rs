//! Gcd, content and squarefree decomposition for univariate polynomials.
//!
//! Integer gcds use the small-prime modular algorithm with trial-division
//! verification; rational gcds reduce to it.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, Primes};
use super::{int_to_monic, rat_to_primitive_int};
use crate::{Int, IntPoly, RatPoly};

/// Gcd of the integer coefficients, nonnegative.
pub fn content_int(p: &IntPoly) -> Int {
    let mut g = Int::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive_int(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut c = content_int(p);
    if p.lc().is_negative() {
        c = -c;
    }
    if c.is_one() {
        p.clone()
    } else {
        p.map(|a| a / &c)
    }
}

/// Exact quotient `a / b` in `Z[t]`, or `None` when it does not exist.
pub fn try_div_int(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return Some(IntPoly::zero());
    }
    let (da, db) = (a.deg(), b.deg());
    if da < db {
        return None;
    }
    let bc = b.coeffs();
    let lb = b.lc();
    // a cheap necessary condition before the big-integer work
    if !(a.lc().is_multiple_of(&lb)) || !trailing_divides(a, b) {
        return None;
    }
    let mut rem: Vec<Int> = a.coeffs().to_vec();
    let mut q = vec![Int::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let lead = std::mem::take(&mut rem[k + db]);
        if lead.is_zero() {
            continue;
        }
        let (qk, r) = lead.div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in bc.iter().enumerate().take(db) {
            if !c.is_zero() {
                rem[k + j] -= &qk * c;
            }
        }
        q[k] = qk;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(IntPoly::from_coeffs(q))
    } else {
        None
    }
}

fn trailing_divides(a: &IntPoly, b: &IntPoly) -> bool {
    let lowest = |p: &IntPoly| p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let (ia, ib) = (lowest(a), lowest(b));
    ia >= ib && a.coeffs()[ia].is_multiple_of(&b.coeffs()[ib])
}

/// Gcd in `Z[t]`: primitive part times the gcd of the contents, leading
/// coefficient positive.
pub fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return primitive_int(b).scale(&content_int(b));
    }
    if b.is_zero() {
        return primitive_int(a).scale(&content_int(a));
    }
    let c = content_int(a).gcd(&content_int(b));
    let pa = primitive_int(a);
    let pb = primitive_int(b);
    if pa.is_constant() || pb.is_constant() {
        return IntPoly::constant(c);
    }
    let (pa, pb) = if pa.deg() >= pb.deg() { (pa, pb) } else { (pb, pa) };
    // cofactor check first: a frequent case is b | a
    if pb.deg() <= 64 || pa.deg() <= 64 {
        if let Some(_q) = try_div_int(&pa, &pb) {
            return pb.scale(&c);
        }
    }
    modular_primitive_gcd(&pa, &pb).scale(&c)
}

fn modular_primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lcg = a.lc().gcd(&b.lc());
    let mut acc: Option<(Vec<Int>, Int, usize)> = None;
    let mut last_lift: Option<IntPoly> = None;
    for p in Primes::new() {
        if modp::is_zero_mod(&a.lc(), p) || modp::is_zero_mod(&b.lc(), p) {
            continue;
        }
        let ap = modp::reduce_poly(a.coeffs(), p);
        let bp = modp::reduce_poly(b.coeffs(), p);
        let g = modp::gcd_modp(&ap, &bp, p);
        let dg = g.len() - 1;
        if dg == 0 {
            return IntPoly::one();
        }
        let scale = modp::reduce(&lcg, p);
        let g: Vec<u64> = g.iter().map(|&c| modp::mul_mod(c, scale, p)).collect();
        let restart = match &acc {
            None => true,
            Some((_, _, d)) => dg < *d,
        };
        if restart {
            acc = Some((g.iter().map(|&c| Int::from(c)).collect(), Int::from(p), dg));
            last_lift = None;
            continue;
        }
        let (coeffs, m, d) = acc.as_mut().expect("accumulator initialized");
        if dg > *d {
            continue;
        }
        let m_inv = modp::inv_mod(modp::reduce(m, p), p);
        for (c, &r) in coeffs.iter_mut().zip(g.iter()) {
            *c = modp::crt(c, m, r, p, m_inv);
        }
        *m *= Int::from(p);
        let lifted = IntPoly::from_coeffs(coeffs.iter().map(|c| modp::symmetric(c, m)).collect());
        if last_lift.as_ref() == Some(&lifted) {
            let cand = primitive_int(&lifted);
            if try_div_int(a, &cand).is_some() && try_div_int(b, &cand).is_some() {
                return cand;
            }
        }
        last_lift = Some(lifted);
    }
    unreachable!("prime supply exhausted")
}

/// Monic gcd over the rationals; `gcd(0, 0) = 0`.
pub fn gcd_uni(f: &RatPoly, g: &RatPoly) -> RatPoly {
    if f.is_zero() && g.is_zero() {
        return RatPoly::zero();
    }
    let fi = rat_to_primitive_int(f);
    let gi = rat_to_primitive_int(g);
    int_to_monic(&gcd_int(&fi, &gi))
}

/// Squarefree decomposition by Yun's algorithm on a primitive integer
/// polynomial. Returns `(factor, multiplicity)` pairs with nonconstant,
/// primitive, pairwise coprime factors whose product with multiplicities
/// equals `primitive_int(p)`.
pub fn yun_int(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    let a = primitive_int(p);
    if a.is_constant() {
        return Vec::new();
    }
    let da = a.derivative();
    let c = primitive_int(&gcd_int(&a, &da));
    let mut w = try_div_int(&a, &c).expect("gcd divides");
    let mut y = exact_rat_quotient(&da, &c);
    let mut z = &y - &w.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        if w.is_constant() {
            break;
        }
        let g = primitive_int(&gcd_int(&w, &z));
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = try_div_int(&w, &g).expect("gcd divides");
        y = exact_rat_quotient(&z, &g);
        z = &y - &w.derivative();
        i += 1;
    }
    out
}

// b primitive and b | a over Q implies the quotient is integral.
fn exact_rat_quotient(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return IntPoly::zero();
    }
    try_div_int(a, b).expect("exact division over Z")
}

/// Squarefree part of an integer polynomial, primitive with positive
/// leading coefficient.
pub fn squarefree_part_int(p: &IntPoly) -> IntPoly {
    let a = primitive_int(p);
    if a.is_constant() {
        return IntPoly::one();
    }
    let g = primitive_int(&gcd_int(&a, &a.derivative()));
    try_div_int(&a, &g).expect("gcd divides")
}

/// Monic squarefree part and Yun decomposition of a rational polynomial.
pub fn squarefree(p: &RatPoly) -> (RatPoly, Vec<(RatPoly, u32)>) {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let ip = rat_to_primitive_int(p);
    let dec = yun_int(&ip);
    let part = int_to_monic(&squarefree_part_int(&ip));
    (part, dec.into_iter().map(|(f, m)| (int_to_monic(&f), m)).collect())
}

/// Maximum coefficient bit length of the primitive integer form.
pub fn bitsize(p: &RatPoly) -> u64 {
    rat_to_primitive_int(p).coeffs().iter().map(|c| c.bits()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_uni(&rp(&[-1, 0, 1]), &rp(&[-1, 1])), rp(&[-1, 1]));
        assert_eq!(
            gcd_uni(&rp(&[2, 4]), &RatPoly::zero()),
            RatPoly::from_coeffs(vec![Rat::new(1.into(), 2.into()), Rat::one()])
        );
        assert_eq!(gcd_int(&ip(&[6, 12]), &ip(&[4])), ip(&[2]));
        assert_eq!(gcd_int(&ip(&[1, 0, 1]), &ip(&[1, 1])), ip(&[1]));
    }

    #[test]
    fn cardioid_normal_gcd() {
        // U = 1024t^2(16t^2-3)(16t^2+1), V = -256t(48t^2-1)(16t^2+1)
        let u = &(&ip(&[0, 0, 1024]) * &ip(&[-3, 0, 16])) * &ip(&[1, 0, 16]);
        let v = &(&ip(&[0, -256]) * &ip(&[-1, 0, 48])) * &ip(&[1, 0, 16]);
        let g = gcd_uni(&super::super::int_to_rat(&u), &super::super::int_to_rat(&v));
        let expect = RatPoly::from_coeffs(vec![Rat::zero(), Rat::new(1.into(), 16.into()), Rat::zero(), Rat::one()]);
        assert_eq!(g, expect);
    }

    #[test]
    fn squarefree_examples() {
        let p = &rp(&[-1, 1]).pow(2) * &rp(&[2, 1]);
        let (part, dec) = squarefree(&p);
        assert_eq!(part, &rp(&[-1, 1]) * &rp(&[2, 1]));
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&(rp(&[2, 1]), 1)));
        assert!(dec.contains(&(rp(&[-1, 1]), 2)));
        let (p6, dec6) = squarefree(&RatPoly::monomial(Rat::one(), 6));
        assert_eq!(p6, rp(&[0, 1]));
        assert_eq!(dec6, vec![(rp(&[0, 1]), 6)]);
        let sf = rp(&[3, 0, 6]);
        assert_eq!(squarefree(&sf).0, sf.monic());
    }

    #[test]
    fn large_modular_gcd() {
        let h = ip(&[123456789, -987654321, 55555, 1 << 40, -7]).pow(3);
        let f = &h * &ip(&[1, 2, 3, 4, 5, 6, 7, 8, 9]).pow(4);
        let g = &h * &ip(&[-9, 8, -7, 6, -5, 4, -3, 2, -1, 11]).pow(5);
        assert_eq!(gcd_int(&f, &g), primitive_int(&h));
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-9i64..10, 1..6).prop_map(|c| rp(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn gcd_is_multiplicative(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
            let lhs = gcd_uni(&(&f * &h), &(&g * &h));
            let rhs = (&h * &gcd_uni(&f, &g)).monic();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gcd_agrees_with_euclid(f in small_poly(), g in small_poly()) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            prop_assert_eq!(gcd_uni(&f, &g), f.euclid_gcd(&g));
        }

        #[test]
        fn squarefree_part_properties(f in small_poly(), g in small_poly()) {
            let p = &(&f * &f) * &g;
            prop_assume!(!p.is_zero());
            let (part, dec) = squarefree(&p);
            prop_assert!(p.div_rem(&part).1.is_zero());
            prop_assert!(gcd_uni(&part, &part.derivative()).is_constant());
            let mut prod = RatPoly::one();
            for (fac, m) in &dec {
                prod = &prod * &fac.pow(*m);
            }
            prop_assert_eq!(prod.monic(), p.monic());
        }
    }
}
