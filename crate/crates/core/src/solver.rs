//! The elimination pipeline: first subresultant of `P` and `Q` in `t`,
//! substitution of the offset map `(t, α) ↦ (x, y)`, the polynomial `ω(t)`
//! and the isolation of its real roots.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::offset::{build_offset_system, CurveSpec, OffsetSystem};
use crate::poly::alpha::{reduce_alpha, BiPolyTA};
use crate::poly::tri::{T, X, Y};
use crate::poly::{bitsize, gcd_int, int_to_monic, mul_int, primitive_int, squarefree_part_int, try_div_int, TriPoly};
use crate::roots::{isolate_real_roots_int, RootSet};
use crate::subres::{subres_xy, XyStrategy};
use crate::{Int, IntPoly, IntTriPoly, Rat, RatPoly};

/// `Subres₁(P, Q) = sres₁(x, y)·t + sr(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstSubresultant {
    pub sres1: IntTriPoly,
    pub sr: IntTriPoly,
}

impl FirstSubresultant {
    /// Total degree of `sres₁` in `x, y`.
    pub fn total_degree(&self) -> u32 {
        self.sres1.total_degree_xy()
    }

    /// The parameter of a regular offset point, `-sr/sres₁`.
    pub fn inverse(&self, x: &Rat, y: &Rat) -> Option<Rat> {
        let lift = |c: &Int| Rat::from_integer(c.clone());
        let z = Rat::zero();
        let a = self.sres1.eval_in(x, y, &z, lift);
        if a.is_zero() {
            return None;
        }
        Some(-self.sr.eval_in(x, y, &z, lift) / a)
    }
}

pub fn first_subresultant_xy(sys: &OffsetSystem, strategy: XyStrategy) -> Result<FirstSubresultant> {
    let (n, m) = (sys.deg_p_t, sys.deg_q_t);
    if n.min(m) < 2 {
        return Err(Error::Precondition(format!("deg_t P = {n}, deg_t Q = {m}: first subresultant needs both >= 2")));
    }
    let s = subres_xy(sys.p(), n, sys.q(), m, 1, strategy)?;
    let mut sres1 = TriPoly::zero();
    let mut sr = TriPoly::zero();
    for (e, c) in s.terms() {
        let target = match e[T] {
            1 => &mut sres1,
            0 => &mut sr,
            _ => return Err(Error::Internal("first subresultant has t-degree above 1".into())),
        };
        target.add_term([e[X], e[Y], 0], c.clone());
    }
    if sres1.is_zero() {
        return Err(Error::VanishingSubresultant);
    }
    let g = sres1.integer_content().gcd(&sr.integer_content());
    if !g.is_one() {
        sres1 = sres1.map(|c| c / &g);
        sr = sr.map(|c| c / &g);
    }
    Ok(FirstSubresultant { sres1, sr })
}

/// Numerator of `sres₁(x(t, α), y(t, α))` after clearing the denominator
/// `(qαW)^N`, reduced modulo `α² = Û² + V̂²`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaForm {
    pub numerator: BiPolyTA<Int>,
    /// Total degree of `sres₁`.
    pub n: u32,
}

fn bmul(a: &BiPolyTA<Int>, b: &BiPolyTA<Int>, s: &IntPoly) -> BiPolyTA<Int> {
    a.mul_with(b, s, mul_int)
}

/// Multiplication by `k·α`.
fn mul_alpha(a: &BiPolyTA<Int>, k: &IntPoly, s: &IntPoly) -> BiPolyTA<Int> {
    BiPolyTA::new(mul_int(&mul_int(&a.odd, k), s), mul_int(&a.even, k))
}

/// Expands `Σ a_ij A^i B^j C^(N-i-j)` with `A = qαX + pV̂W`,
/// `B = qαY - pÛW`, `C = qαW` for `d = p/q`, by nested homogeneous Horner.
pub fn substitute_alpha(sres1: &IntTriPoly, sys: &OffsetSystem, c: &CurveSpec) -> AlphaForm {
    let n = sres1.total_degree_xy();
    let s = &sys.s;
    let (p, q) = (c.d.numer().clone(), c.d.denom().clone());
    let qw = c.w.scale(&q);
    let a = BiPolyTA::new(mul_int(sys.vhat(), &c.w).scale(&p), c.x.scale(&q));
    let b = BiPolyTA::new(-mul_int(sys.uhat(), &c.w).scale(&p), c.y.scale(&q));
    let mut cpow = vec![BiPolyTA::from_even(IntPoly::one())];
    for k in 1..=n as usize {
        let next = mul_alpha(&cpow[k - 1], &qw, s);
        cpow.push(next);
    }
    let dx = sres1.degree_in(X) as usize;
    let mut rows: Vec<Vec<Int>> = vec![Vec::new(); dx + 1];
    for (e, v) in sres1.terms() {
        let row = &mut rows[e[X] as usize];
        let j = e[Y] as usize;
        if row.len() <= j {
            row.resize(j + 1, Int::zero());
        }
        row[j] = v.clone();
    }
    let mut acc = BiPolyTA::zero();
    for i in (0..=dx).rev() {
        let m = n as usize - i;
        let mut g = BiPolyTA::zero();
        for j in (0..=m).rev() {
            if !g.is_zero() {
                g = bmul(&g, &b, s);
            }
            if let Some(v) = rows[i].get(j).filter(|v| !v.is_zero()) {
                let term = &cpow[m - j];
                g = g.add(&BiPolyTA::new(term.even.scale(v), term.odd.scale(v)));
            }
        }
        acc = if acc.is_zero() { g } else { bmul(&acc, &a, s).add(&g) };
    }
    AlphaForm { numerator: acc, n }
}

/// The polynomials built from `ξ₁α + η₁ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaData {
    pub xi1: IntPoly,
    pub eta1: IntPoly,
    /// Common factor of `ξ₁` and `η₁` supported on the zeros of `S·W`,
    /// divided out before squaring.
    pub common: IntPoly,
    /// `ξ²S - η²` for the reduced pair.
    pub omega_tilde: IntPoly,
    pub omega_star: IntPoly,
    /// `gcd(ω*, W)`.
    pub w_factor: IntPoly,
    /// Factor shared with `S = Û² + V̂²`, removed.
    pub s_factor: IntPoly,
    /// Primitive integer form of `ω`.
    pub omega_int: IntPoly,
    /// Monic `ω`.
    pub omega: RatPoly,
    pub deg_omega: usize,
    pub tau_omega: u64,
}

fn div_or_internal(a: &IntPoly, b: &IntPoly, what: &str) -> Result<IntPoly> {
    try_div_int(a, b).ok_or_else(|| Error::Internal(format!("inexact division: {what}")))
}

pub fn build_omega(xi1: &IntPoly, eta1: &IntPoly, sys: &OffsetSystem, c: &CurveSpec) -> Result<OmegaData> {
    if xi1.is_zero() && eta1.is_zero() {
        return Err(Error::Internal("ξ₁ and η₁ both vanish".into()));
    }
    let s = &sys.s;
    let sw = mul_int(s, &c.w);
    let g = gcd_int(xi1, eta1);
    let mut common = IntPoly::one();
    loop {
        let rest = div_or_internal(&g, &common, "gcd cofactor")?;
        let f = gcd_int(&rest, &sw);
        if f.is_constant() {
            break;
        }
        common = mul_int(&common, &f);
    }
    let (xi, eta) = if common.is_constant() {
        (xi1.clone(), eta1.clone())
    } else {
        (div_or_internal(xi1, &common, "ξ₁")?, div_or_internal(eta1, &common, "η₁")?)
    };
    let omega_tilde = primitive_int(&(mul_int(&mul_int(&xi, &xi), s) - mul_int(&eta, &eta)));
    if omega_tilde.is_zero() {
        return Err(Error::Internal("ω̃ vanishes identically".into()));
    }
    let omega_star = squarefree_part_int(&omega_tilde);
    let w_factor = primitive_int(&gcd_int(&omega_star, &c.w));
    let mut omega_int = div_or_internal(&omega_star, &w_factor, "ω* by gcd(ω*, W)")?;
    let s_factor = primitive_int(&gcd_int(&omega_int, s));
    if !s_factor.is_constant() {
        omega_int = div_or_internal(&omega_int, &s_factor, "ω by gcd(ω, S)")?;
    }
    let omega_int = primitive_int(&omega_int);
    let omega = int_to_monic(&omega_int);
    let deg_omega = omega_int.deg();
    let tau_omega = bitsize(&omega);
    Ok(OmegaData {
        xi1: xi1.clone(),
        eta1: eta1.clone(),
        common,
        omega_tilde,
        omega_star,
        w_factor,
        s_factor,
        omega_int,
        omega,
        deg_omega,
        tau_omega,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    pub precision_bits: u32,
    pub strategy: XyStrategy,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { precision_bits: 53, strategy: XyStrategy::Auto }
    }
}

/// Everything the pipeline produces for one curve.
#[derive(Clone, Debug)]
pub struct OffsetSingResult {
    pub system: OffsetSystem,
    pub subresultant: FirstSubresultant,
    pub alpha: AlphaForm,
    pub omega: OmegaData,
    pub roots: RootSet,
}

impl OffsetSingResult {
    pub fn n_p(&self) -> usize {
        self.roots.len()
    }
}

pub fn run_offset_sing(c: &CurveSpec, opts: SolverOptions) -> Result<OffsetSingResult> {
    let system = build_offset_system(c)?;
    let subresultant = first_subresultant_xy(&system, opts.strategy)?;
    let alpha = substitute_alpha(&subresultant.sres1, &system, c);
    let (xi1, eta1) = reduce_alpha(&alpha.numerator);
    let omega = build_omega(&xi1, &eta1, &system, c)?;
    let roots = isolate_real_roots_int(&omega.omega_int, opts.precision_bits)?;
    Ok(OffsetSingResult { system, subresultant, alpha, omega, roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_to_rat;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn rp(c: &[Rat]) -> RatPoly {
        RatPoly::from_coeffs(c.to_vec())
    }

    fn cardioid() -> CurveSpec {
        CurveSpec::from_ints("cardioid", &[0, 0, 0, -1024], &[0, 0, 128, 0, -2048], &[1, 0, 32, 0, 256], Rat::one())
            .unwrap()
    }

    #[test]
    fn cardioid_omega() {
        let out = run_offset_sing(&cardioid(), SolverOptions::default()).unwrap();
        let z = Rat::zero();
        let f1 = rp(&[r(1, 12544), z.clone(), r(113, 9800), z.clone(), Rat::one()]);
        let f2 = rp(&[r(-9, 3952), z.clone(), Rat::one()]);
        let f3 = rp(&[r(-1, 1011712), z.clone(), r(5, 63232), z.clone(), r(-3, 3952), z.clone(), Rat::one()]);
        assert_eq!(out.omega.omega, f1 * f2 * f3);
        assert_eq!(out.omega.deg_omega, 12);
        let approx = out.roots.approximations();
        let expected = [-0.08699, -0.04772, 0.04772, 0.08699];
        assert_eq!(approx.len(), 4);
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-5, "{a} vs {e}");
        }
    }

    #[test]
    fn cardioid_sres1_matches_printed_leading_terms() {
        let c = cardioid();
        let sys = build_offset_system(&c).unwrap();
        let f = first_subresultant_xy(&sys, XyStrategy::Auto).unwrap();
        let g = first_subresultant_xy(&sys, XyStrategy::Direct).unwrap();
        assert_eq!(f, g);
        let s = &f.sres1;
        let (a, b, k) = (s.coeff(&[1, 0, 0]), s.coeff(&[7, 0, 0]), s.coeff(&[5, 0, 0]));
        let ratio = Rat::new(a.clone(), Int::from(1764));
        assert!(!ratio.is_zero());
        assert_eq!(Rat::new(b, Int::from(-5)), ratio);
        assert_eq!(Rat::new(k, Int::from(218)), ratio);
        assert_eq!(Rat::new(s.coeff(&[3, 0, 0]), Int::from(903)), ratio);
    }

    #[test]
    fn degenerate_substitutions() {
        let c = cardioid();
        let sys = build_offset_system(&c).unwrap();
        let x = TriPoly::<Int>::x();
        let a = substitute_alpha(&x, &sys, &c);
        assert_eq!(a.numerator, BiPolyTA::new(mul_int(sys.vhat(), &c.w), c.x.clone()));
        let k = TriPoly::constant(Int::from(5));
        let a = substitute_alpha(&k, &sys, &c);
        assert_eq!(a.numerator, BiPolyTA::from_even(IntPoly::from_ints(&[5])));
    }

    #[test]
    fn omega_degenerate_branch() {
        let c = CurveSpec::from_ints("p", &[0, 1], &[0, 0, 1], &[1], Rat::one()).unwrap();
        let sys = build_offset_system(&c).unwrap();
        let o = build_omega(&IntPoly::zero(), &IntPoly::from_ints(&[0, 1]), &sys, &c).unwrap();
        assert_eq!(o.omega_tilde, IntPoly::from_ints(&[0, 0, 1]));
        assert_eq!(o.omega, int_to_rat(&IntPoly::from_ints(&[0, 1])));
    }

    #[test]
    fn parabola_roots() {
        let c = CurveSpec::from_ints("parabola", &[0, 1], &[0, 0, 1], &[1], Rat::one()).unwrap();
        let out = run_offset_sing(&c, SolverOptions::default()).unwrap();
        let approx = out.roots.approximations();
        let expected = [-0.866025, -0.383220, 0.383220, 0.866025];
        assert_eq!(approx.len(), 4);
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-5, "{a} vs {e}");
        }
        assert!(out.subresultant.total_degree() <= 6);
    }
}
