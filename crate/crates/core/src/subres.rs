//! Sylvester matrices, determinant polynomials and subresultant chains.
//!
//! Polynomials in `t` are [`UniPoly`] values over any [`ExactDiv`] ring; for
//! coefficients in `Z[x, y]` the chain is computed by evaluation at integer
//! points and bivariate interpolation, or directly by fraction-free
//! elimination over [`TriPoly`].

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{TriPoly, UniPoly};
use crate::scalar::{ExactDiv, Ring};
use crate::{Int, IntTriPoly, Rat};

/// Sylvester matrix of index `i` for `f` of declared degree `n` and `g` of
/// declared degree `m`: `m - i` shifted rows of `f` above `n - i` shifted
/// rows of `g`, coefficients from the highest degree down.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix<R> {
    pub entries: Vec<Vec<R>>,
    pub index: usize,
    pub n: usize,
    pub m: usize,
}

impl<R: Ring> SylvesterMatrix<R> {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }
}

pub fn sylvester<R: Ring>(f: &UniPoly<R>, n: usize, g: &UniPoly<R>, m: usize, i: usize) -> Result<SylvesterMatrix<R>> {
    if n.min(m) == 0 || i > n.min(m) - 1 {
        return Err(Error::IndexOutOfRange { index: i, n, m });
    }
    for (p, d) in [(f, n), (g, m)] {
        if p.degree().is_some_and(|k| k > d) {
            return Err(Error::DegreeMismatch { declared: d, actual: p.deg() });
        }
    }
    let cols = n + m - i;
    let mut entries = Vec::with_capacity(n + m - 2 * i);
    for (p, deg, count) in [(f, n, m - i), (g, m, n - i)] {
        for r in 0..count {
            let mut row = vec![R::zero(); cols];
            for k in 0..=deg {
                row[r + k] = p.coeff(deg - k);
            }
            entries.push(row);
        }
    }
    Ok(SylvesterMatrix { entries, index: i, n, m })
}

/// Determinant polynomial of a `rows x cols` matrix (`rows <= cols`):
/// `Σ_k det(Δ_k) t^(cols-rows-k)`, where `Δ_k` is made of the first
/// `rows - 1` columns and column `rows - 1 + k`.
///
/// One fraction-free elimination on the first `rows - 1` columns yields all
/// the minors at once: afterwards the last row holds them.
pub fn detpol<R: ExactDiv>(matrix: &[Vec<R>]) -> Result<UniPoly<R>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows > cols {
        return Err(Error::Shape { rows, cols });
    }
    if rows == 0 {
        return Ok(UniPoly::one());
    }
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut sign_neg = false;
    let mut prev = R::one();
    for k in 0..rows - 1 {
        if a[k][k].is_zero() {
            match (k + 1..rows).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_neg = !sign_neg;
                }
                None => return Ok(UniPoly::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = pivot_row[k].clone();
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..cols {
                let v = row[j].mul_ref(&pivot).sub_ref(&factor.mul_ref(&pivot_row[j]));
                row[j] = v.exact_div(&prev);
            }
            row[k] = R::zero();
        }
        prev = pivot;
    }
    let last = &a[rows - 1];
    let span = cols - rows;
    let mut coeffs = vec![R::zero(); span + 1];
    for k in 0..=span {
        let v = last[rows - 1 + k].clone();
        coeffs[span - k] = if sign_neg { -v } else { v };
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `Subres_i(f, n, g, m)`.
pub fn subres<R: ExactDiv>(f: &UniPoly<R>, n: usize, g: &UniPoly<R>, m: usize, i: usize) -> Result<UniPoly<R>> {
    detpol(&sylvester(f, n, g, m, i)?.entries)
}

/// The chain `Subres_0 .. Subres_(min(n,m)-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubresultantChain<R> {
    pub polys: Vec<UniPoly<R>>,
    pub n: usize,
    pub m: usize,
}

impl<R: Ring> SubresultantChain<R> {
    /// Principal coefficient `sres_i`.
    pub fn sres(&self, i: usize) -> R {
        self.polys[i].coeff(i)
    }

    pub fn is_defective(&self, i: usize) -> bool {
        self.sres(i).is_zero()
    }

    /// Index of the first nonzero element, scanning from `Subres_0` upward.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.polys.iter().position(|p| !p.is_zero())
    }
}

pub fn chain<R: ExactDiv>(f: &UniPoly<R>, n: usize, g: &UniPoly<R>, m: usize) -> Result<SubresultantChain<R>> {
    let k = n.min(m);
    if k == 0 {
        return Err(Error::IndexOutOfRange { index: 0, n, m });
    }
    let polys = (0..k).map(|i| subres(f, n, g, m, i)).collect::<Result<_>>()?;
    Ok(SubresultantChain { polys, n, m })
}

/// Resultant with respect to the actual degrees of `f` and `g`.
pub fn resultant<R: ExactDiv>(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    let (n, m) = (f.deg(), g.deg());
    if n == 0 {
        return Ok(pow(&f.lc(), m));
    }
    if m == 0 {
        return Ok(pow(&g.lc(), n));
    }
    let p = subres(f, n, g, m, 0)?;
    Ok(p.coeff(0))
}

fn pow<R: Ring>(v: &R, e: usize) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc.mul_ref(v);
    }
    acc
}

/// How to compute subresultants of polynomials with coefficients in `Z[x,y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XyStrategy {
    /// Evaluate on an integer grid, eliminate over `Z`, interpolate.
    Interpolate,
    /// Fraction-free elimination with polynomial entries.
    Direct,
    /// Interpolation unless the grid is trivially small.
    Auto,
}

/// `Subres_i(P, n, Q, m)` for `P, Q ∈ Z[x, y][t]`, returned as a polynomial in
/// `x, y, t`.
pub fn subres_xy(
    p: &IntTriPoly,
    n: usize,
    q: &IntTriPoly,
    m: usize,
    i: usize,
    strategy: XyStrategy,
) -> Result<IntTriPoly> {
    if n.min(m) == 0 || i > n.min(m) - 1 {
        return Err(Error::IndexOutOfRange { index: i, n, m });
    }
    let bound = |var: usize| (m - i) * p.degree_in(var) as usize + (n - i) * q.degree_in(var) as usize;
    let (dx, dy) = (bound(crate::poly::tri::X), bound(crate::poly::tri::Y));
    let grid = (dx + 1) * (dy + 1);
    let direct = match strategy {
        XyStrategy::Direct => true,
        XyStrategy::Interpolate => false,
        XyStrategy::Auto => grid <= 4,
    };
    if direct {
        let pu = p.to_uni_t();
        let qu = q.to_uni_t();
        let s = subres(&pu, n, &qu, m, i)?;
        return Ok(TriPoly::from_coeffs_t(&s));
    }
    let xs = nodes(dx);
    let ys = nodes(dy);
    let points: Vec<(usize, usize)> = (0..xs.len()).flat_map(|a| (0..ys.len()).map(move |b| (a, b))).collect();
    let values: Vec<Result<UniPoly<Int>>> = points
        .par_iter()
        .map(|&(a, b)| {
            let x0 = Int::from(xs[a]);
            let y0 = Int::from(ys[b]);
            let pf = p.eval_xy(&x0, &y0);
            let qf = q.eval_xy(&x0, &y0);
            subres(&pf, n, &qf, m, i)
        })
        .collect();
    // grid[k][a][b] = coefficient of t^k at (xs[a], ys[b])
    let mut table = vec![vec![vec![Int::from(0); ys.len()]; xs.len()]; i + 1];
    for (&(a, b), v) in points.iter().zip(values) {
        let v = v?;
        for (k, slot) in table.iter_mut().enumerate() {
            slot[a][b] = v.coeff(k);
        }
    }
    let mut out = IntTriPoly::zero();
    for (k, slab) in table.into_iter().enumerate() {
        let c = interpolate_2d(&xs, &ys, &slab)?;
        for ((ex, ey), v) in c {
            out.add_term([ex, ey, k as u32], v);
        }
    }
    Ok(out)
}

fn nodes(d: usize) -> Vec<i64> {
    let half = (d / 2) as i64;
    (0..=d as i64).map(|k| k - half).collect()
}

/// Newton interpolation through `(x_k, v_k)`, monomial coefficients.
fn interpolate_1d(xs: &[i64], vs: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    let mut dd: Vec<Rat> = vs.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let den = Rat::from_integer(Int::from(xs[k] - xs[k - level]));
            dd[k] = (&dd[k] - &dd[k - 1]) / den;
        }
    }
    // expand Σ dd[k] Π_{j<k} (x - x_j) by Horner from the top
    let mut coeffs: Vec<Rat> = vec![Rat::from_integer(0.into()); n];
    let mut len = 0usize;
    for k in (0..n).rev() {
        // coeffs <- coeffs * (x - x_k) + dd[k]
        let xk = Rat::from_integer(Int::from(xs[k]));
        let mut next = vec![Rat::from_integer(0.into()); n];
        for j in 0..len {
            next[j + 1] = &next[j + 1] + &coeffs[j];
            next[j] = &next[j] - &(&coeffs[j] * &xk);
        }
        next[0] = &next[0] + &dd[k];
        coeffs = next;
        len = (len + 1).min(n);
    }
    coeffs
}

fn interpolate_2d(xs: &[i64], ys: &[i64], vals: &[Vec<Int>]) -> Result<BTreeMap<(u32, u32), Int>> {
    // interpolate in y for each x node, then in x for each y power
    let by_x: Vec<Vec<Rat>> = vals
        .iter()
        .map(|row| {
            let r: Vec<Rat> = row.iter().map(|v| Rat::from_integer(v.clone())).collect();
            interpolate_1d(ys, &r)
        })
        .collect();
    let mut out = BTreeMap::new();
    for ey in 0..ys.len() {
        let column: Vec<Rat> = by_x.iter().map(|c| c[ey].clone()).collect();
        let cx = interpolate_1d(xs, &column);
        for (ex, v) in cx.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !v.is_integer() {
                return Err(Error::Internal("non-integral interpolated coefficient".into()));
            }
            out.insert((ex as u32, ey as u32), v.to_integer());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntPoly, RatPoly};

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn sylvester_layout() {
        let f = ip(&[0, -1, 0, 1]);
        let g = ip(&[2, -3, 1]);
        let s = sylvester(&f, 3, &g, 2, 1).unwrap();
        let expect: Vec<Vec<Int>> =
            [[1, 0, -1, 0], [1, -3, 2, 0], [0, 1, -3, 2]].iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        assert_eq!(s.entries, expect);
        let s0 = sylvester(&ip(&[-1, 1]), 1, &ip(&[-2, 1]), 1, 0).unwrap();
        assert_eq!(s0.entries, vec![vec![int(1), int(-1)], vec![int(1), int(-2)]]);
        assert!(sylvester(&f, 3, &g, 2, 2).is_err());
    }

    #[test]
    fn detpol_examples() {
        let f = ip(&[0, -1, 0, 1]);
        let g = ip(&[2, -3, 1]);
        let s = sylvester(&f, 3, &g, 2, 1).unwrap();
        assert_eq!(detpol(&s.entries).unwrap(), ip(&[-6, 6]));
        let sq = vec![vec![int(2), int(1)], vec![int(3), int(4)]];
        assert_eq!(detpol(&sq).unwrap(), ip(&[5]));
        let eq = vec![vec![int(1), int(2), int(3)], vec![int(1), int(2), int(3)]];
        assert!(detpol(&eq).unwrap().is_zero());
        let tall = vec![vec![int(1)], vec![int(2)]];
        assert!(detpol(&tall).is_err());
    }

    #[test]
    fn chain_examples() {
        let f = ip(&[0, -1, 0, 1]);
        let g = ip(&[2, -3, 1]);
        let c = chain(&f, 3, &g, 2).unwrap();
        assert!(c.polys[0].is_zero());
        assert_eq!(c.polys[1], ip(&[-6, 6]));
        assert_eq!(c.first_nonzero(), Some(1));
        assert!(!c.is_defective(1));
        assert_eq!(resultant(&ip(&[-1, 1]), &ip(&[-2, 1])).unwrap(), int(-1));
        assert_eq!(resultant(&ip(&[3, 1]), &ip(&[-1, 1])).unwrap(), int(-4));
        assert!(resultant(&f, &g).unwrap().is_zero());
        assert!(resultant(&IntPoly::zero(), &g).is_err());
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(f, g) = lc(f)^m Π g(roots of f) for f = (t-1)(t-2)(t+3)
        let f = &(&ip(&[-1, 1]) * &ip(&[-2, 1])) * &ip(&[3, 1]);
        let g = ip(&[5, 0, 1]);
        let gv: Int = [1, 2, -3].iter().map(|&r| g.eval(&int(r))).product();
        assert_eq!(resultant(&f, &g).unwrap(), gv);
        let rf = crate::poly::int_to_rat(&f);
        let rg = crate::poly::int_to_rat(&g);
        let r = resultant::<Rat>(&rf, &rg).unwrap();
        assert_eq!(r, Rat::from_integer(gv));
        let _ = RatPoly::zero();
    }

    #[test]
    fn interpolation_matches_direct() {
        let x = IntTriPoly::x();
        let y = IntTriPoly::y();
        let t = IntTriPoly::t();
        let c = |v: i64| IntTriPoly::constant(int(v));
        // P = x t^2 + (y - 2) t + 3, Q = t^3 + x y t - y^2
        let p = &(&(&x * &t.pow(2)) + &(&(&y - &c(2)) * &t)) + &c(3);
        let q = &(&t.pow(3) + &(&(&x * &y) * &t)) - &y.pow(2);
        for i in 0..2 {
            let a = subres_xy(&p, 2, &q, 3, i, XyStrategy::Interpolate).unwrap();
            let b = subres_xy(&p, 2, &q, 3, i, XyStrategy::Direct).unwrap();
            assert_eq!(a, b, "index {i}");
        }
    }

    #[test]
    fn newton_interpolation() {
        let xs = [-1, 0, 1, 2];
        let f = |x: i64| 3 * x * x * x - x + 7;
        let vs: Vec<Rat> = xs.iter().map(|&x| Rat::from_integer(f(x).into())).collect();
        let c = interpolate_1d(&xs, &vs);
        let expect: Vec<Rat> = [7, -1, 0, 3].iter().map(|&v| Rat::from_integer(v.into())).collect();
        assert_eq!(c, expect);
    }
}
