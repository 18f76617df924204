//! Brute-force checks that do not go through the solver: an implicit offset
//! equation by fraction-free elimination, a floating-point scan for offset
//! singularities, a square-freeness probe for the implicit equation, and a
//! certified check that `sres₁` vanishes at the reported offset points.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{Kind, RootClass};
use crate::error::{Error, Result};
use crate::interval::{Dyadic, DyadicInterval, RatInterval};
use crate::offset::{eval_offset_point_interval, Branch, CurveSpec, OffsetSystem};
use crate::poly::tri::{T, X, Y};
use crate::poly::{gcd_int, primitive_int, rat_to_primitive_int, squarefree_part_int, UniPoly};
use crate::roots::{isolate_descartes, refine, IsolatedRoot};
use crate::scalar::rat_to_f64;
use crate::solver::OffsetSingResult;
use crate::{Int, IntPoly, IntTriPoly, Rat, RatPoly};

pub const DEFAULT_CAP: usize = 16;

/// `H(x, y) = Res_t(P, Q)` as the determinant of the Sylvester matrix over
/// `Z[x, y]`, by Bareiss elimination with row pivoting.
pub fn implicit_offset(sys: &OffsetSystem, cap: usize) -> Result<IntTriPoly> {
    let (n, m) = (sys.p().degree_in(T) as usize, sys.q().degree_in(T) as usize);
    if n + m > cap {
        return Err(Error::CapExceeded(n + m, cap));
    }
    let pc = t_coeffs(sys.p());
    let qc = t_coeffs(sys.q());
    let size = n + m;
    let mut a = vec![vec![IntTriPoly::zero(); size]; size];
    for i in 0..m {
        for (k, c) in pc.iter().enumerate() {
            a[i][i + n - k] = c.clone();
        }
    }
    for i in 0..n {
        for (k, c) in qc.iter().enumerate() {
            a[m + i][i + m - k] = c.clone();
        }
    }
    Ok(bareiss_det(a))
}

fn t_coeffs(p: &IntTriPoly) -> Vec<IntTriPoly> {
    let n = p.degree_in(T) as usize;
    let mut out = vec![IntTriPoly::zero(); n + 1];
    for (e, c) in p.terms() {
        out[e[T] as usize].add_term([e[X], e[Y], 0], c.clone());
    }
    out
}

fn bareiss_det(mut a: Vec<Vec<IntTriPoly>>) -> IntTriPoly {
    let size = a.len();
    let mut prev = IntTriPoly::one();
    let mut negate = false;
    for k in 0..size {
        let Some(piv) = (k..size).find(|&i| !a[i][k].is_zero()) else {
            return IntTriPoly::zero();
        };
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.try_div(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = IntTriPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Value and first two derivatives.
type Jet = (f64, f64, f64);

/// Sampled offset polyline: `(θ, side, point)`.
type Piece = Vec<(f64, f64, (f64, f64))>;

/// The curve and its first two derivatives in floating point.
#[derive(Clone, Debug)]
pub struct FloatCurve {
    x: Vec<f64>,
    y: Vec<f64>,
    w: Vec<f64>,
    d: f64,
}

/// Value and first two derivatives of a polynomial.
fn horner3(c: &[f64], t: f64) -> (f64, f64, f64) {
    let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
    for &a in c.iter().rev() {
        ddp = ddp * t + 2.0 * dp;
        dp = dp * t + p;
        p = p * t + a;
    }
    (p, dp, ddp)
}

fn quotient3(n: (f64, f64, f64), w: (f64, f64, f64)) -> (f64, f64, f64) {
    let q = n.0 / w.0;
    let dq = (n.1 - q * w.1) / w.0;
    let ddq = (n.2 - 2.0 * dq * w.1 - q * w.2) / w.0;
    (q, dq, ddq)
}

impl FloatCurve {
    pub fn new(c: &CurveSpec) -> Self {
        let f = |p: &IntPoly| p.coeffs().iter().map(|k| k.to_f64().unwrap_or(f64::NAN)).collect();
        FloatCurve { x: f(&c.x), y: f(&c.y), w: f(&c.w), d: rat_to_f64(&c.d) }
    }

    /// `((x, x', x''), (y, y', y''))`, or `None` at a pole.
    fn jet(&self, t: f64) -> Option<(Jet, Jet)> {
        let w = horner3(&self.w, t);
        if w.0 == 0.0 || !w.0.is_finite() {
            return None;
        }
        Some((quotient3(horner3(&self.x, t), w), quotient3(horner3(&self.y, t), w)))
    }

    pub fn point(&self, t: f64) -> Option<(f64, f64)> {
        self.jet(t).map(|(x, y)| (x.0, y.0))
    }

    /// Offset point on side `s = ±1` of the normal `(y', -x')`, with its
    /// derivative `φ'(1 + s·d·κ)`.
    pub fn offset(&self, t: f64, s: f64) -> Option<((f64, f64), (f64, f64))> {
        let (x, y) = self.jet(t)?;
        let sp = x.1.hypot(y.1);
        if sp == 0.0 || !sp.is_finite() {
            return None;
        }
        let k = (x.1 * y.2 - y.1 * x.2) / (sp * sp * sp);
        let f = 1.0 + s * self.d * k;
        let o = (x.0 + s * self.d * y.1 / sp, y.0 - s * self.d * x.1 / sp);
        let v = (x.1 * f, y.1 * f);
        (o.0.is_finite() && o.1.is_finite()).then_some((o, v))
    }

    /// `1 + s·d·κ(t)`, zero where the offset has a local singularity.
    fn focal(&self, t: f64, s: f64) -> Option<f64> {
        let (x, y) = self.jet(t)?;
        let sp = x.1.hypot(y.1);
        if sp == 0.0 {
            return None;
        }
        Some(1.0 + s * self.d * (x.1 * y.2 - y.1 * x.2) / (sp * sp * sp))
    }

    fn normal(&self, t: f64) -> Option<(f64, f64)> {
        let (x, y) = self.jet(t)?;
        let sp = x.1.hypot(y.1);
        (sp > 0.0).then(|| (y.1 / sp, -x.1 / sp))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    Crossing,
    Focal,
}

/// A numerically located offset singularity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanHit {
    pub kind: ScanKind,
    pub t: f64,
    /// Second parameter of a crossing; `None` for focal points and for
    /// crossings with the points generated by `t = ∞`.
    pub partner: Option<f64>,
    /// Side of the normal `(y', -x')` for `t` (`+1` or `-1`).
    pub side: f64,
    pub point: (f64, f64),
}

/// Parameters beyond this magnitude are treated as `t = ∞`.
const T_INFINITE: f64 = 1e7;

fn theta_to_t(th: f64) -> f64 {
    th.tan()
}

/// Scans both offset sides over the whole real line (`t = tan θ`). The
/// `grid` uniform samples of `θ` are subdivided until consecutive offset
/// points are close. Crossings of the sampled polylines are refined by
/// Newton's method and focal points by bisection on `1 + s·d·κ`, both to
/// about `tol` in the parameter.
pub fn numeric_singularity_scan(c: &CurveSpec, grid: usize, tol: f64) -> Vec<ScanHit> {
    let fc = FloatCurve::new(c);
    let h = std::f64::consts::PI / grid as f64;
    let base: Vec<f64> = (0..grid).map(|i| -std::f64::consts::FRAC_PI_2 + (i as f64 + 0.5) * h).collect();
    let closed = c.w.deg() >= c.x.deg().max(c.y.deg());
    let mut hits = Vec::new();
    let mut pieces: Vec<Piece> = Vec::new();

    for s in [1.0, -1.0] {
        let thetas = adaptive_thetas(&fc, s, &base);
        let vals: Vec<Option<f64>> = thetas.iter().map(|&th| fc.focal(theta_to_t(th), s)).collect();
        for i in 0..thetas.len() - 1 {
            if let (Some(a), Some(b)) = (vals[i], vals[i + 1]) {
                if a == 0.0 || a * b < 0.0 {
                    if let Some(t) = bisect_focal(&fc, thetas[i], thetas[i + 1], s, tol) {
                        let point = fc.offset(t, s).map(|p| p.0).unwrap_or((f64::NAN, f64::NAN));
                        hits.push(ScanHit { kind: ScanKind::Focal, t, partner: None, side: s, point });
                    }
                }
            }
        }

        // polylines in θ, split at poles, normal flips and far-away points
        let mut cur: Vec<(f64, f64, (f64, f64))> = Vec::new();
        let mut last_n: Option<(f64, f64)> = None;
        let idx: Vec<usize> =
            if closed { (0..thetas.len()).chain(std::iter::once(0)).collect() } else { (0..thetas.len()).collect() };
        for &i in &idx {
            let t = theta_to_t(thetas[i]);
            let p = fc.offset(t, s).map(|p| p.0).filter(|p| p.0.abs() < 1e8 && p.1.abs() < 1e8);
            let n = fc.normal(t);
            let flip = matches!((last_n, n), (Some(a), Some(b)) if a.0 * b.0 + a.1 * b.1 < 0.0);
            match p {
                Some(p) if !flip => cur.push((thetas[i], s, p)),
                _ => {
                    if cur.len() > 1 {
                        pieces.push(std::mem::take(&mut cur));
                    }
                    cur.clear();
                    if let Some(p) = p {
                        cur.push((thetas[i], s, p));
                    }
                }
            }
            last_n = n;
        }
        if cur.len() > 1 {
            pieces.push(cur);
        }
    }

    // sweep over segments sorted by their left end
    struct Seg {
        k: usize,
        i: usize,
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
    }
    let mut segs: Vec<Seg> = Vec::new();
    for (k, pc) in pieces.iter().enumerate() {
        for i in 0..pc.len() - 1 {
            let (p, q) = (pc[i].2, pc[i + 1].2);
            segs.push(Seg { k, i, x0: p.0.min(q.0), x1: p.0.max(q.0), y0: p.1.min(q.1), y1: p.1.max(q.1) });
        }
    }
    segs.sort_by(|a, b| a.x0.total_cmp(&b.x0));
    for a in 0..segs.len() {
        let sa_ = &segs[a];
        for sb_ in &segs[a + 1..] {
            if sb_.x0 > sa_.x1 {
                break;
            }
            if sb_.y0 > sa_.y1 || sb_.y1 < sa_.y0 {
                continue;
            }
            let (ka, ia, kb, ib) = (sa_.k, sa_.i, sb_.k, sb_.i);
            if ka == kb && ia.abs_diff(ib) <= 1 {
                continue;
            }
            let (p0, p1) = (pieces[ka][ia].2, pieces[ka][ia + 1].2);
            let (q0, q1) = (pieces[kb][ib].2, pieces[kb][ib + 1].2);
            let Some((u, v)) = segment_intersection(p0, p1, q0, q1) else { continue };
            let sa = pieces[ka][ia].1;
            let sb = pieces[kb][ib].1;
            let ta = lerp_theta(pieces[ka][ia].0, pieces[ka][ia + 1].0, u);
            let tb = lerp_theta(pieces[kb][ib].0, pieces[kb][ib + 1].0, v);
            if let Some((t1, t2, pt)) = newton_crossing(&fc, ta, sa, tb, sb, tol) {
                if (t1 - t2).abs() <= 1e3 * tol * (1.0 + t1.abs()) && sa == sb {
                    continue;
                }
                for (t, other, s) in [(t1, t2, sa), (t2, t1, sb)] {
                    if t.abs() > T_INFINITE {
                        continue;
                    }
                    let partner = (other.abs() <= T_INFINITE).then_some(other);
                    hits.push(ScanHit { kind: ScanKind::Crossing, t, partner, side: s, point: pt });
                }
            }
        }
    }
    dedup_hits(hits, tol)
}

/// Refines the uniform `θ` samples where consecutive offset points on side
/// `s` are far apart relative to the size of the sampled offset.
fn adaptive_thetas(fc: &FloatCurve, s: f64, base: &[f64]) -> Vec<f64> {
    let at = |th: f64| fc.offset(theta_to_t(th), s).map(|p| p.0).filter(|p| p.0.abs() < 1e8 && p.1.abs() < 1e8);
    let mut radii: Vec<f64> = base.iter().filter_map(|&th| at(th)).map(|p| p.0.hypot(p.1)).collect();
    radii.sort_by(f64::total_cmp);
    let median = radii.get(radii.len() / 2).copied().unwrap_or(1.0);
    let max_chord = 2e-3 * (median + fc.d);
    let far = 50.0 * (median + fc.d);
    let mut out = vec![base[0]];
    for w in base.windows(2) {
        let mut stack = vec![(w[0], at(w[0]), w[1], at(w[1]), 0u32)];
        let mut tail = Vec::new();
        while let Some((a, pa, b, pb, depth)) = stack.pop() {
            let long = match (pa, pb) {
                (Some(p), Some(q)) => {
                    (p.0 - q.0).hypot(p.1 - q.1) > max_chord && p.0.hypot(p.1).min(q.0.hypot(q.1)) < far
                }
                _ => false,
            };
            if long && depth < 16 {
                let m = 0.5 * (a + b);
                let pm = at(m);
                stack.push((m, pm, b, pb, depth + 1));
                stack.push((a, pa, m, pm, depth + 1));
            } else {
                tail.push(b);
            }
        }
        out.extend(tail);
    }
    out
}

fn lerp_theta(a: f64, b: f64, u: f64) -> f64 {
    // the closing segment of a closed curve wraps from +π/2 to -π/2
    let b = if b < a { b + std::f64::consts::PI } else { b };
    let th = a + u * (b - a);
    if th > std::f64::consts::FRAC_PI_2 {
        th - std::f64::consts::PI
    } else {
        th
    }
}

fn segment_intersection(p0: (f64, f64), p1: (f64, f64), q0: (f64, f64), q1: (f64, f64)) -> Option<(f64, f64)> {
    let r = (p1.0 - p0.0, p1.1 - p0.1);
    let s = (q1.0 - q0.0, q1.1 - q0.1);
    let den = r.0 * s.1 - r.1 * s.0;
    if den == 0.0 {
        return None;
    }
    let qp = (q0.0 - p0.0, q0.1 - p0.1);
    let u = (qp.0 * s.1 - qp.1 * s.0) / den;
    let v = (qp.0 * r.1 - qp.1 * r.0) / den;
    ((0.0..=1.0).contains(&u) && (0.0..=1.0).contains(&v)).then_some((u, v))
}

/// Solves `o_sa(θa) = o_sb(θb)` by Newton's method in `θ`; accepts the
/// result by its residual.
fn newton_crossing(
    fc: &FloatCurve,
    mut a: f64,
    sa: f64,
    mut b: f64,
    sb: f64,
    tol: f64,
) -> Option<(f64, f64, (f64, f64))> {
    let (a0, b0) = (a, b);
    for _ in 0..60 {
        let (ta, tb) = (theta_to_t(a), theta_to_t(b));
        let (pa, va) = fc.offset(ta, sa)?;
        let (pb, vb) = fc.offset(tb, sb)?;
        // d/dθ = (1 + t²) d/dt
        let (ja, jb) = (1.0 + ta * ta, 1.0 + tb * tb);
        let (va, vb) = ((va.0 * ja, va.1 * ja), (vb.0 * jb, vb.1 * jb));
        let f = (pa.0 - pb.0, pa.1 - pb.1);
        let det = va.0 * (-vb.1) - (-vb.0) * va.1;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let da = (f.0 * (-vb.1) - (-vb.0) * f.1) / det;
        let db = (va.0 * f.1 - va.1 * f.0) / det;
        a -= da;
        b -= db;
        if a.abs() >= std::f64::consts::FRAC_PI_2 || b.abs() >= std::f64::consts::FRAC_PI_2 {
            return None;
        }
        if (a - a0).abs() > 0.05 || (b - b0).abs() > 0.05 {
            return None;
        }
        if da.abs() < tol * 1e-3 && db.abs() < tol * 1e-3 {
            break;
        }
    }
    let (ta, tb) = (theta_to_t(a), theta_to_t(b));
    let pa = fc.offset(ta, sa)?.0;
    let pb = fc.offset(tb, sb)?.0;
    let scale = 1f64.max(pa.0.abs()).max(pa.1.abs());
    ((pa.0 - pb.0).hypot(pa.1 - pb.1) <= 1e-9 * scale).then_some((ta, tb, pa))
}

fn bisect_focal(fc: &FloatCurve, mut a: f64, mut b: f64, s: f64, tol: f64) -> Option<f64> {
    let mut fa = fc.focal(theta_to_t(a), s)?;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let fm = fc.focal(theta_to_t(m), s)?;
        if fm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (b - a) < tol * 1e-3 {
            break;
        }
    }
    let t = theta_to_t(0.5 * (a + b));
    // a pole of κ also changes the sign
    let v = fc.focal(t, s)?;
    (v.abs() < 1e-6 && t.abs() <= T_INFINITE).then_some(t)
}

fn dedup_hits(mut hits: Vec<ScanHit>, tol: f64) -> Vec<ScanHit> {
    hits.sort_by(|a, b| a.t.total_cmp(&b.t));
    let mut out: Vec<ScanHit> = Vec::new();
    for h in hits {
        let dup = out
            .iter()
            .any(|o| o.kind == h.kind && o.side == h.side && (o.t - h.t).abs() <= 1e2 * tol * (1.0 + h.t.abs()));
        if !dup {
            out.push(h);
        }
    }
    out
}

/// Whether every scan parameter lies within `tol·(1 + |t|)` of an isolating
/// interval of `roots`. Returns the parameters that do not.
pub fn superset_violations(hits: &[ScanHit], roots: &[IsolatedRoot], tol: f64) -> Vec<f64> {
    hits.iter()
        .map(|h| h.t)
        .filter(|&t| {
            let slack = tol * (1.0 + t.abs());
            !roots.iter().any(|r| rat_to_f64(&r.lo) - slack <= t && t <= rat_to_f64(&r.hi) + slack)
        })
        .collect()
}

/// Distance from `(x, y)` to the sampled offset (both sides), refined by
/// golden-section search around the best sample.
pub fn distance_to_offset(fc: &FloatCurve, x: f64, y: f64, grid: usize) -> f64 {
    let h = std::f64::consts::PI / grid as f64;
    let dist =
        |th: f64, s: f64| fc.offset(theta_to_t(th), s).map(|(p, _)| (p.0 - x).hypot(p.1 - y)).unwrap_or(f64::INFINITY);
    let mut best = f64::INFINITY;
    for s in [1.0, -1.0] {
        let samples: Vec<f64> =
            (0..grid).map(|i| dist(-std::f64::consts::FRAC_PI_2 + (i as f64 + 0.5) * h, s)).collect();
        for i in 0..grid {
            let is_min = (i == 0 || samples[i] <= samples[i - 1]) && (i + 1 == grid || samples[i] <= samples[i + 1]);
            if !is_min || !samples[i].is_finite() {
                continue;
            }
            let th = -std::f64::consts::FRAC_PI_2 + (i as f64 + 0.5) * h;
            let (mut a, mut b) =
                ((th - h).max(-std::f64::consts::FRAC_PI_2), (th + h).min(std::f64::consts::FRAC_PI_2));
            let g = (5f64.sqrt() - 1.0) / 2.0;
            for _ in 0..100 {
                let c1 = b - g * (b - a);
                let c2 = a + g * (b - a);
                if dist(c1, s) < dist(c2, s) {
                    b = c2;
                } else {
                    a = c1;
                }
            }
            best = best.min(dist(0.5 * (a + b), s)).min(samples[i]);
        }
    }
    best
}

fn h_at_y(h: &IntTriPoly, y0: &Rat) -> RatPoly {
    let n = h.degree_in(X) as usize;
    let mut out = vec![Rat::zero(); n + 1];
    for (e, c) in h.terms() {
        out[e[X] as usize] += Rat::from_integer(c.clone()) * y0.pow(e[Y] as i32);
    }
    UniPoly::from_coeffs(out)
}

/// Square-freeness of `H` along `trials` random horizontal lines through
/// sampled offset points: no real multiple root of `H(x, y₀)` may be an
/// offset point. Lines on which the leading coefficient in `x` vanishes are
/// resampled.
pub fn squarefree_offset_check(h: &IntTriPoly, c: &CurveSpec, trials: usize, seed: u64) -> bool {
    let fc = FloatCurve::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degx = h.degree_in(X) as usize;
    let mut done = 0;
    let mut attempts = 0;
    while done < trials {
        attempts += 1;
        if attempts > 50 * trials.max(1) {
            return false;
        }
        let t = rng.gen_range(-3.0..3.0);
        let s = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let Some(((_, y), _)) = fc.offset(t, s) else { continue };
        let y0 = Rat::new(Int::from((y * 65536.0).round() as i64), Int::from(65536));
        let hx = h_at_y(h, &y0);
        if hx.is_zero() || hx.deg() < degx {
            continue;
        }
        done += 1;
        let hi = rat_to_primitive_int(&hx);
        let g = gcd_int(&hi, &hi.derivative());
        if g.is_constant() {
            continue;
        }
        let yf = rat_to_f64(&y0);
        for r in isolate_descartes(&primitive_int(&squarefree_part_int(&g))) {
            let x = if r.exact { rat_to_f64(&r.lo) } else { refine(&g, &r, 60).approx() };
            let scale = 1f64.max(x.abs()).max(yf.abs());
            if distance_to_offset(&fc, x, yf, 4000) < 1e-6 * scale {
                return false;
            }
        }
    }
    true
}

/// Theorem-7 check: at each non-superfluous root, `sres₁` evaluated over the
/// offset-point enclosure of the isolating interval (refined to `bits`)
/// contains zero on every recorded branch.
pub fn verify_sres1_vanishing(res: &OffsetSingResult, c: &CurveSpec, roots: &[RootClass], bits: u32) -> bool {
    let sres1 = &res.subresultant.sres1;
    let omega = &res.omega.omega_int;
    roots.iter().filter(|r| r.kind != Kind::Superfluous).all(|r| {
        let root = if r.root.exact || omega.deg() == 0 { r.root.clone() } else { refine(omega, &r.root, bits) };
        let iv = RatInterval::new(root.lo.clone(), root.hi.clone());
        r.branches.iter().all(|&b| sres1_contains_zero(sres1, c, &res.system, &iv, b, bits))
    })
}

/// Whether `sres₁` over the offset-point enclosure at `t` on `branch`
/// contains zero.
pub fn sres1_contains_zero(
    sres1: &IntTriPoly,
    c: &CurveSpec,
    sys: &OffsetSystem,
    t: &RatInterval,
    branch: Branch,
    bits: u32,
) -> bool {
    let Ok((x, y)) = eval_offset_point_interval(c, sys, t, branch, bits) else { return true };
    let (x, y) = (DyadicInterval::from(&x), DyadicInterval::from(&y));
    let z = DyadicInterval::point(Dyadic(Rat::zero()));
    sres1.eval_in(&x, &y, &z, |k| DyadicInterval::point(Dyadic(Rat::from_integer(k.clone())))).contains_zero()
}

/// Offset points `φ_d(t)` at `count` random parameters, with enclosures of
/// `H` there; returns the number of enclosures that exclude zero.
pub fn implicit_residual_failures(h: &IntTriPoly, c: &CurveSpec, sys: &OffsetSystem, count: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lift = |k: &Int| RatInterval::point(Rat::from_integer(k.clone()));
    let z = RatInterval::point(Rat::zero());
    let mut fails = 0;
    let mut n = 0;
    while n < count {
        let t = Rat::new(Int::from(rng.gen_range(-4000i64..4000)), Int::from(1000));
        let b = if rng.gen_bool(0.5) { Branch::Plus } else { Branch::Minus };
        let Ok((x, y)) = eval_offset_point_interval(c, sys, &RatInterval::point(t), b, 200) else { continue };
        n += 1;
        if !h.eval_in(&x, &y, &z, lift).contains_zero() {
            fails += 1;
        }
    }
    fails
}

/// `H` with its integer content removed and positive lex-leading coefficient.
pub fn normalize_implicit(h: &IntTriPoly) -> IntTriPoly {
    let p = h.primitive_integer();
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}
