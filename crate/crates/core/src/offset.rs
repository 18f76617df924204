//! The offset system of a rational curve: normals, contents, and the
//! primitive polynomials `P(x, y, t)` and `Q(x, y, t)` whose common zeros
//! describe the offset.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::poly::{content_int, gcd_int, gcd_uni, int_to_rat, primitive_int, try_div_int, yun_int, TriPoly};
use crate::{Int, IntPoly, IntTriPoly, Rat};

/// A rational parametrization `(X/W, Y/W)` with integer coefficients and an
/// offset distance `d > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub name: String,
    pub x: IntPoly,
    pub y: IntPoly,
    pub w: IntPoly,
    pub d: Rat,
}

impl CurveSpec {
    /// Builds and normalizes a spec.
    pub fn new(name: impl Into<String>, x: IntPoly, y: IntPoly, w: IntPoly, d: Rat) -> Result<Self> {
        normalize_curve(CurveSpec { name: name.into(), x, y, w, d })
    }

    pub fn from_ints(name: &str, x: &[i64], y: &[i64], w: &[i64], d: Rat) -> Result<Self> {
        Self::new(name, IntPoly::from_ints(x), IntPoly::from_ints(y), IntPoly::from_ints(w), d)
    }

    pub fn with_distance(&self, d: Rat) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::NonPositiveDistance);
        }
        Ok(CurveSpec { d, ..self.clone() })
    }

    /// Largest degree among `X`, `Y`, `W`.
    pub fn degree(&self) -> usize {
        self.x.deg().max(self.y.deg()).max(self.w.deg())
    }

    /// Curve point at a rational parameter.
    pub fn point(&self, t: &Rat) -> Result<(Rat, Rat)> {
        let w = eval_rat(&self.w, t);
        if w.is_zero() {
            return Err(Error::Pole(t.to_string()));
        }
        Ok((eval_rat(&self.x, t) / &w, eval_rat(&self.y, t) / &w))
    }
}

pub(crate) fn eval_rat(p: &IntPoly, t: &Rat) -> Rat {
    p.eval_in(t, |c| Rat::from_integer(c.clone()))
}

pub(crate) fn eval_f64(p: &IntPoly, t: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * t + crate::scalar::OrderedScalar::to_f64_lossy(c))
}

/// Divides out the common factor of `X`, `Y`, `W` (polynomial and integer)
/// and validates the spec.
pub fn normalize_curve(raw: CurveSpec) -> Result<CurveSpec> {
    if raw.w.is_zero() {
        return Err(Error::InvalidCurve("W is identically zero".into()));
    }
    if !raw.d.is_positive() {
        return Err(Error::NonPositiveDistance);
    }
    let g = gcd_int(&gcd_int(&raw.x, &raw.y), &raw.w);
    let (mut x, mut y, mut w) = (raw.x, raw.y, raw.w);
    if !g.is_constant() {
        let div = |p: &IntPoly| try_div_int(p, &g).expect("gcd divides");
        x = div(&x);
        y = div(&y);
        w = div(&w);
    }
    let c = content_int(&x).gcd(&content_int(&y)).gcd(&content_int(&w));
    if !c.is_one() {
        x = x.map(|a| a / &c);
        y = y.map(|a| a / &c);
        w = w.map(|a| a / &c);
    }
    let spec = CurveSpec { name: raw.name, x, y, w, d: raw.d };
    let u = spec.x.derivative() * spec.w.clone() - spec.x.clone() * spec.w.derivative();
    let v = spec.y.derivative() * spec.w.clone() - spec.y.clone() * spec.w.derivative();
    if u.is_zero() && v.is_zero() {
        return Err(Error::InvalidCurve("X/W and Y/W are both constant".into()));
    }
    Ok(spec)
}

/// Tangent data: `U = X'W - XW'`, `V = Y'W - YW'`, `ν = gcd(U, V)` and the
/// reduced pair `(Û, V̂)`.
///
/// `ν` is primitive with positive leading coefficient and `(Û, V̂)` is a
/// jointly primitive integer pair, so `U = c·ν·Û`, `V = c·ν·V̂` with the same
/// constant `c > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Normals {
    pub u: IntPoly,
    pub v: IntPoly,
    pub nu: IntPoly,
    pub uhat: IntPoly,
    pub vhat: IntPoly,
}

pub fn derive_normals(c: &CurveSpec) -> Result<Normals> {
    let u = c.x.derivative() * c.w.clone() - c.x.clone() * c.w.derivative();
    let v = c.y.derivative() * c.w.clone() - c.y.clone() * c.w.derivative();
    if u.is_zero() && v.is_zero() {
        return Err(Error::InvalidCurve("U and V vanish identically".into()));
    }
    let nu = gcd_int(&u, &v);
    let div = |p: &IntPoly| try_div_int(p, &nu).ok_or_else(|| Error::Internal("gcd(U, V) does not divide".into()));
    let (mut uhat, mut vhat) = (div(&u)?, div(&v)?);
    let k = content_int(&uhat).gcd(&content_int(&vhat));
    if !k.is_one() {
        uhat = uhat.map(|a| a / &k);
        vhat = vhat.map(|a| a / &k);
    }
    Ok(Normals { u, v, nu, uhat, vhat })
}

/// Whether `U² + V²` is a positive constant times a square, decided by
/// squarefree decomposition.
pub fn perfect_square_test(u: &IntPoly, v: &IntPoly) -> bool {
    let s = u.clone() * u.clone() + v.clone() * v.clone();
    if s.is_zero() {
        return false;
    }
    yun_int(&s).iter().all(|(_, m)| m % 2 == 0)
}

/// `μ = gcd(W, X² + Y²)`, `σ = gcd(W, W')`, `γ = gcd(U/σ, V/σ)` and
/// `β = σγμ`, each primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Contents {
    pub mu: IntPoly,
    pub sigma: IntPoly,
    pub gamma: IntPoly,
    pub beta: IntPoly,
}

pub fn compute_contents(c: &CurveSpec, u: &IntPoly, v: &IntPoly) -> Result<Contents> {
    let x2y2 = c.x.clone() * c.x.clone() + c.y.clone() * c.y.clone();
    let mu = primitive_int(&gcd_int(&c.w, &x2y2));
    let sigma = primitive_int(&gcd_int(&c.w, &c.w.derivative()));
    let by_sigma = |p: &IntPoly| {
        if p.is_zero() {
            Ok(IntPoly::zero())
        } else {
            try_div_int(p, &sigma).ok_or_else(|| Error::Internal("σ does not divide U, V".into()))
        }
    };
    let gamma = primitive_int(&gcd_int(&by_sigma(u)?, &by_sigma(v)?));
    let beta = primitive_int(&(sigma.clone() * gamma.clone() * mu.clone()));
    Ok(Contents { mu, sigma, gamma, beta })
}

/// `P̃`, `Q̃` and their primitive parts.
#[derive(Clone, Debug, PartialEq)]
pub struct OffsetPolys {
    pub ptilde: IntTriPoly,
    pub qtilde: IntTriPoly,
    pub p: IntTriPoly,
    pub q: IntTriPoly,
    /// Extra `t`-contents removed after dividing by `β` and `μ`; constant
    /// on every curve we know of.
    pub extra_content_p: IntPoly,
    pub extra_content_q: IntPoly,
}

fn lift_t(p: &IntPoly) -> IntTriPoly {
    TriPoly::from_uni_t(p)
}

fn div_by_t_poly(p: &IntTriPoly, d: &IntPoly, what: &str) -> Result<IntTriPoly> {
    let mut slices = p.xy_slices();
    for s in slices.values_mut() {
        *s = try_div_int(s, d).ok_or_else(|| Error::Internal(format!("inexact division of {what}")))?;
    }
    Ok(TriPoly::from_xy_slices(&slices))
}

/// Removes the integer content and any remaining `t`-content; the sign is
/// fixed by making the lex-leading coefficient positive.
fn primitive_tri(p: &IntTriPoly) -> Result<(IntTriPoly, IntPoly)> {
    let ct = p.content_t();
    let mut out = if ct.is_constant() { p.clone() } else { div_by_t_poly(p, &ct, "t-content")? };
    out = out.primitive_integer();
    if out.leading().is_some_and(|(_, c)| c.is_negative()) {
        out = -out;
    }
    Ok((out, ct))
}

pub fn build_pq(c: &CurveSpec, n: &Normals, k: &Contents) -> Result<OffsetPolys> {
    let (dn, dd) = (c.d.numer().clone(), c.d.denom().clone());
    let w = lift_t(&c.w);
    let wx = &(&w * &TriPoly::x()) - &lift_t(&c.x);
    let wy = &(&w * &TriPoly::y()) - &lift_t(&c.y);
    let ptilde = &(&lift_t(&n.u) * &wx) + &(&lift_t(&n.v) * &wy);
    let circle = &(&wx * &wx) + &(&wy * &wy);
    let qtilde = &circle.scale(&(&dd * &dd)) - &(&w * &w).scale(&(&dn * &dn));
    let p = div_by_t_poly(&ptilde, &k.beta, "P~ by beta")?;
    let q = div_by_t_poly(&qtilde, &k.mu, "Q~ by mu")?;
    let (p, extra_content_p) = primitive_tri(&p)?;
    let (q, extra_content_q) = primitive_tri(&q)?;
    Ok(OffsetPolys { ptilde, qtilde, p, q, extra_content_p, extra_content_q })
}

/// Behaviour of the curve at `t = ∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinityInfo {
    pub p_inf_affine: bool,
    pub p_inf: Option<(Rat, Rat)>,
}

pub fn infinity_info(c: &CurveSpec) -> InfinityInfo {
    let dw = c.w.deg();
    if dw < c.x.deg().max(c.y.deg()) {
        return InfinityInfo { p_inf_affine: false, p_inf: None };
    }
    let lim = |p: &IntPoly| {
        if p.deg() == dw && !p.is_zero() {
            Rat::new(p.lc(), c.w.lc())
        } else {
            Rat::zero()
        }
    };
    InfinityInfo { p_inf_affine: true, p_inf: Some((lim(&c.x), lim(&c.y))) }
}

/// Substitutes `t = (a·s + b)/(cc·s + e)` and clears denominators.
pub fn mobius_reparametrize(c: &CurveSpec, a: i64, b: i64, cc: i64, e: i64) -> Result<CurveSpec> {
    if a * e - b * cc == 0 {
        return Err(Error::SingularMobius);
    }
    let deg = c.degree();
    let num = IntPoly::from_ints(&[b, a]);
    let den = IntPoly::from_ints(&[e, cc]);
    let num_pows: Vec<IntPoly> = (0..=deg).map(|k| num.pow(k as u32)).collect();
    let den_pows: Vec<IntPoly> = (0..=deg).map(|k| den.pow(k as u32)).collect();
    let sub = |p: &IntPoly| {
        let mut acc = IntPoly::zero();
        for (k, coef) in p.coeffs().iter().enumerate() {
            let term = (num_pows[k].clone() * den_pows[deg - k].clone()).scale(coef);
            acc = acc + term;
        }
        acc
    };
    normalize_curve(CurveSpec { name: c.name.clone(), x: sub(&c.x), y: sub(&c.y), w: sub(&c.w), d: c.d.clone() })
}

/// Offset branch: `+` moves along `(V̂, -Û)/‖(Û, V̂)‖`, `-` along its opposite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// Everything derived from a curve before elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct OffsetSystem {
    pub normals: Normals,
    pub contents: Contents,
    pub polys: OffsetPolys,
    /// `Û² + V̂²`.
    pub s: IntPoly,
    pub deg_p_t: usize,
    pub deg_q_t: usize,
    pub infinity: InfinityInfo,
}

impl OffsetSystem {
    pub fn p(&self) -> &IntTriPoly {
        &self.polys.p
    }

    pub fn q(&self) -> &IntTriPoly {
        &self.polys.q
    }

    pub fn uhat(&self) -> &IntPoly {
        &self.normals.uhat
    }

    pub fn vhat(&self) -> &IntPoly {
        &self.normals.vhat
    }
}

/// Builds the offset system, rejecting reducible offsets.
pub fn build_offset_system(c: &CurveSpec) -> Result<OffsetSystem> {
    let normals = derive_normals(c)?;
    if perfect_square_test(&normals.u, &normals.v) {
        return Err(Error::ReducibleOffset);
    }
    let contents = compute_contents(c, &normals.u, &normals.v)?;
    let polys = build_pq(c, &normals, &contents)?;
    let s = normals.uhat.clone() * normals.uhat.clone() + normals.vhat.clone() * normals.vhat.clone();
    let deg_p_t = polys.p.degree_in(crate::poly::tri::T) as usize;
    let deg_q_t = polys.q.degree_in(crate::poly::tri::T) as usize;
    Ok(OffsetSystem { normals, contents, polys, s, deg_p_t, deg_q_t, infinity: infinity_info(c) })
}

/// Offset point enclosure over a parameter interval, with `bits` of
/// precision for the square root.
pub fn eval_offset_point_interval(
    c: &CurveSpec,
    sys: &OffsetSystem,
    t: &RatInterval,
    branch: Branch,
    bits: u32,
) -> Result<(RatInterval, RatInterval)> {
    let lift = |p: &IntPoly| p.eval_in(t, |k| RatInterval::point(Rat::from_integer(k.clone())));
    let w = lift(&c.w);
    let pole = || Error::Pole(format!("[{}, {}]", t.lo, t.hi));
    let px = lift(&c.x).div(&w).ok_or_else(pole)?;
    let py = lift(&c.y).div(&w).ok_or_else(pole)?;
    let uh = lift(sys.uhat());
    let vh = lift(sys.vhat());
    let norm = (&uh.square() + &vh.square()).sqrt(bits);
    let scale = RatInterval::point(c.d.clone() * Rat::from_integer(branch.sign().into()));
    let nx = (&scale * &vh).div(&norm).ok_or_else(|| Error::Internal("normal vanishes".into()))?;
    let ny = (&scale * &uh).div(&norm).ok_or_else(|| Error::Internal("normal vanishes".into()))?;
    Ok((&px + &nx, &py - &ny))
}

/// Offset point at a rational parameter: exact curve point and normal
/// direction, rounded once at the end.
pub fn eval_offset_point_rat(c: &CurveSpec, sys: &OffsetSystem, t: &Rat, branch: Branch) -> Result<(f64, f64)> {
    let (px, py) = c.point(t)?;
    let uh = eval_rat(sys.uhat(), t);
    let vh = eval_rat(sys.vhat(), t);
    let n2 = &uh * &uh + &vh * &vh;
    if n2.is_zero() {
        return Err(Error::Internal("normal vanishes".into()));
    }
    let s = crate::scalar::rat_to_f64(&n2).sqrt();
    let k = crate::scalar::rat_to_f64(&c.d) * branch.sign() as f64 / s;
    Ok((
        crate::scalar::rat_to_f64(&px) + k * crate::scalar::rat_to_f64(&vh),
        crate::scalar::rat_to_f64(&py) - k * crate::scalar::rat_to_f64(&uh),
    ))
}

/// Floating-point offset point.
pub fn eval_offset_point_f64(c: &CurveSpec, sys: &OffsetSystem, t: f64, branch: Branch) -> Option<(f64, f64)> {
    let w = eval_f64(&c.w, t);
    if w == 0.0 {
        return None;
    }
    let uh = eval_f64(sys.uhat(), t);
    let vh = eval_f64(sys.vhat(), t);
    let n = uh.hypot(vh);
    if n == 0.0 {
        return None;
    }
    let k = crate::scalar::rat_to_f64(&c.d) * branch.sign() as f64 / n;
    Some((eval_f64(&c.x, t) / w + k * vh, eval_f64(&c.y, t) / w - k * uh))
}

/// Heuristic properness check: at a sample point of the curve, the two
/// implicitizing polynomials `X - x₀W`, `Y - y₀W` should share exactly one
/// root in `t`. Returns `false` when the sample suggests a non-proper
/// parametrization.
pub fn properness_hint(c: &CurveSpec) -> bool {
    for k in 1..20i64 {
        let t0 = Rat::new(Int::from(2 * k + 1), Int::from(7));
        let Ok((x0, y0)) = c.point(&t0) else { continue };
        let xr = int_to_rat(&c.x) - int_to_rat(&c.w).scale(&x0);
        let yr = int_to_rat(&c.y) - int_to_rat(&c.w).scale(&y0);
        let g = if xr.is_zero() {
            yr.monic()
        } else if yr.is_zero() {
            xr.monic()
        } else {
            gcd_uni(&xr, &yr)
        };
        return g.deg() <= 1;
    }
    true
}
