//! Classification of the roots of `ω`: self-intersections, local
//! singularities (curvature `k = -1/d`), singularities generated by cusps of
//! the curve, and superfluous values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::offset::{eval_offset_point_rat, Branch, CurveSpec, OffsetSystem};
use crate::poly::{gcd_int, mul_int, try_div_int};
use crate::roots::{descartes_bound, divisor_vanishes_at, refine, sign_at, IsolatedRoot};
use crate::scalar::rat_to_f64;
use crate::solver::OffsetSingResult;
use crate::{IntPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    SelfIntersection,
    Local,
    CuspGenerated,
    Superfluous,
    Unresolved,
}

/// One root of `ω` and what it generates.
#[derive(Clone, Debug, PartialEq)]
pub struct RootClass {
    pub root: IsolatedRoot,
    pub kind: Kind,
    /// Branches on which the root generates the reported point.
    pub branches: Vec<Branch>,
    /// Indices of the roots generating the same offset point.
    pub partners: Vec<usize>,
    /// The point coincides with one of the offset points at `t = ∞`.
    pub partner_at_infinity: bool,
    /// Offset points on `branches`; on both branches for superfluous and
    /// unresolved roots.
    pub points: Vec<(Branch, f64, f64)>,
    /// `(U, V)` vanishes at the root.
    pub nu_root: bool,
    pub curvature_test: bool,
    pub cusp_test: bool,
    /// Member of a self-intersection group whose parameters nearly coincide.
    pub tacnode: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub roots: Vec<RootClass>,
    /// Self-intersection groups as `(root index, branch)` lists.
    pub groups: Vec<Vec<(usize, Branch)>>,
    /// Roots left unresolved after refinement.
    pub unresolved: usize,
}

impl Classification {
    pub fn count(&self, kind: Kind) -> usize {
        self.roots.iter().filter(|r| r.kind == kind).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifyOptions {
    /// Point-space tolerance, scaled by the point's magnitude.
    pub tol: f64,
    /// Refinement rounds before a near-coincidence is declared unresolved.
    pub max_rounds: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { tol: 1e-9, max_rounds: 8 }
    }
}

/// Sign of `p` at the root of `omega` isolated by `root`, refining the
/// interval until `p` has no zero inside it.
pub fn certified_sign(p: &IntPoly, omega: &IntPoly, root: &mut IsolatedRoot) -> i8 {
    Probe::new(p.clone(), omega).sign(omega, root)
}

/// A polynomial tested at roots of `ω`, with its gcd with `ω`.
struct Probe {
    p: IntPoly,
    g: IntPoly,
}

impl Probe {
    fn new(p: IntPoly, omega: &IntPoly) -> Self {
        let g = if p.is_zero() { omega.clone() } else { gcd_int(omega, &p) };
        Probe { p, g }
    }

    fn vanishes(&self, root: &IsolatedRoot) -> bool {
        self.p.is_zero() || divisor_vanishes_at(&self.g, root)
    }

    fn sign(&self, omega: &IntPoly, root: &mut IsolatedRoot) -> i8 {
        if root.exact {
            return sign_at(&self.p, &root.lo);
        }
        if self.vanishes(root) {
            return 0;
        }
        let mut bits = 64;
        loop {
            if descartes_bound(&self.p, &root.lo, &root.hi) == 0 {
                return sign_at(&self.p, &root.mid());
            }
            bits += 64;
            *root = refine(omega, root, bits);
            if root.exact {
                return sign_at(&self.p, &root.lo);
            }
        }
    }
}

/// Data shared by the per-root tests.
struct Tests {
    omega: IntPoly,
    xi: Probe,
    eta: Probe,
    nu: Probe,
    jac: Probe,
    curv: Probe,
}

impl Tests {
    fn new(res: &OffsetSingResult, c: &CurveSpec) -> Result<Self> {
        let sys = &res.system;
        let om = &res.omega;
        let (xi, eta) = if om.common.is_constant() {
            (om.xi1.clone(), om.eta1.clone())
        } else {
            (
                try_div_int(&om.xi1, &om.common).unwrap_or_else(|| om.xi1.clone()),
                try_div_int(&om.eta1, &om.common).unwrap_or_else(|| om.eta1.clone()),
            )
        };
        let (uh, vh) = (sys.uhat(), sys.vhat());
        let jac = mul_int(uh, &vh.derivative()) - mul_int(vh, &uh.derivative());
        let (u, v) = (&sys.normals.u, &sys.normals.v);
        let full_jac = mul_int(u, &v.derivative()) - mul_int(v, &u.derivative());
        let w2 = mul_int(&c.w, &c.w);
        let (p, q) = (c.d.numer().clone(), c.d.denom().clone());
        let s_full = mul_int(u, u) + mul_int(v, v);
        let lhs = mul_int(&mul_int(&full_jac, &full_jac), &mul_int(&w2, &w2)).scale(&(&p * &p));
        let rhs = mul_int(&mul_int(&s_full, &s_full), &s_full).scale(&(&q * &q));
        let omega = om.omega_int.clone();
        let probe = |p: IntPoly| Probe::new(p, &omega);
        Ok(Tests {
            xi: probe(xi),
            eta: probe(eta),
            nu: probe(sys.normals.nu.clone()),
            jac: probe(jac),
            curv: probe(lhs - rhs),
            omega,
        })
    }
}

/// The branch (or both) on which `ξα + η` vanishes at the root.
fn vanishing_branches(t: &Tests, root: &mut IsolatedRoot) -> Vec<Branch> {
    let sx = t.xi.sign(&t.omega, root);
    if sx == 0 {
        return Branch::BOTH.to_vec();
    }
    let se = t.eta.sign(&t.omega, root);
    if sx * se < 0 {
        vec![Branch::Plus]
    } else {
        vec![Branch::Minus]
    }
}

fn points_at(c: &CurveSpec, sys: &OffsetSystem, root: &IsolatedRoot, branches: &[Branch]) -> Vec<(Branch, f64, f64)> {
    let t = if root.exact { root.lo.clone() } else { root.mid() };
    branches.iter().filter_map(|&b| eval_offset_point_rat(c, sys, &t, b).ok().map(|(x, y)| (b, x, y))).collect()
}

/// Offset points generated by `t = ∞` when the curve's limit point is affine.
pub fn points_at_infinity(c: &CurveSpec, sys: &OffsetSystem) -> Vec<(f64, f64)> {
    let Some((px, py)) = &sys.infinity.p_inf else { return Vec::new() };
    let (uh, vh) = (sys.uhat(), sys.vhat());
    let k = uh.deg().max(vh.deg());
    let (u, v) = (rat_to_f64(&Rat::from_integer(uh.coeff(k))), rat_to_f64(&Rat::from_integer(vh.coeff(k))));
    let n = u.hypot(v);
    if n == 0.0 {
        return Vec::new();
    }
    let d = rat_to_f64(&c.d);
    let (px, py) = (rat_to_f64(px), rat_to_f64(py));
    [1.0, -1.0].iter().map(|s| (px + s * d * v / n, py - s * d * u / n)).collect()
}

fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    let scale = 1f64.max(a.0.abs()).max(a.1.abs()).max(b.0.abs()).max(b.1.abs());
    (a.0 - b.0).hypot(a.1 - b.1) <= tol * scale
}

fn near(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    close(a, b, tol.sqrt())
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut k = i;
    while parent[k] != r {
        let next = parent[k];
        parent[k] = r;
        k = next;
    }
    r
}

pub fn classify(res: &OffsetSingResult, c: &CurveSpec, opts: ClassifyOptions) -> Result<Classification> {
    let sys = &res.system;
    let tests = Tests::new(res, c)?;
    let mut roots: Vec<IsolatedRoot> = res.roots.roots.clone();
    let n = roots.len();
    let mut records = Vec::with_capacity(n);
    for root in roots.iter_mut() {
        let nu_root = tests.nu.vanishes(root);
        let mut branches = vanishing_branches(&tests, root);
        let (mut curvature_test, mut cusp_test) = (false, false);
        if nu_root {
            cusp_test = tests.jac.vanishes(root);
        } else if tests.curv.vanishes(root) {
            curvature_test = true;
            let sj = tests.jac.sign(&tests.omega, root);
            let sn = tests.nu.sign(&tests.omega, root);
            branches = vec![if sj * sn < 0 { Branch::Plus } else { Branch::Minus }];
        }
        records.push(RootClass {
            root: root.clone(),
            kind: Kind::Unresolved,
            branches,
            partners: Vec::new(),
            partner_at_infinity: false,
            points: Vec::new(),
            nu_root,
            curvature_test,
            cusp_test,
            tacnode: false,
        });
    }

    // pairing of (root, branch) offset points
    let mut bits = res.roots.precision_bits;
    let mut ambiguous: Vec<usize> = Vec::new();
    let infinity = points_at_infinity(c, sys);
    for round in 0..=opts.max_rounds {
        for r in records.iter_mut() {
            r.points = points_at(c, sys, &r.root, &r.branches);
        }
        ambiguous.clear();
        let flat: Vec<(usize, (f64, f64))> =
            records.iter().enumerate().flat_map(|(i, r)| r.points.iter().map(move |p| (i, (p.1, p.2)))).collect();
        for a in 0..flat.len() {
            for b in a + 1..flat.len() {
                let (pa, pb) = (flat[a].1, flat[b].1);
                if flat[a].0 != flat[b].0 && near(pa, pb, opts.tol) && !close(pa, pb, opts.tol) {
                    ambiguous.extend([flat[a].0, flat[b].0]);
                }
            }
            for &q in &infinity {
                if near(flat[a].1, q, opts.tol) && !close(flat[a].1, q, opts.tol) {
                    ambiguous.push(flat[a].0);
                }
            }
        }
        if ambiguous.is_empty() || round == opts.max_rounds {
            break;
        }
        bits += 32;
        ambiguous.sort_unstable();
        ambiguous.dedup();
        for &i in &ambiguous {
            records[i].root = refine(&tests.omega, &records[i].root, bits);
        }
    }

    let flat: Vec<(usize, Branch, (f64, f64))> =
        records.iter().enumerate().flat_map(|(i, r)| r.points.iter().map(move |p| (i, p.0, (p.1, p.2)))).collect();
    let mut parent: Vec<usize> = (0..flat.len()).collect();
    for a in 0..flat.len() {
        for b in a + 1..flat.len() {
            if flat[a].0 != flat[b].0 && close(flat[a].2, flat[b].2, opts.tol) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: Vec<Vec<(usize, Branch)>> = Vec::new();
    let mut group_of: std::collections::BTreeMap<usize, usize> = Default::default();
    for (k, &(root, branch, _)) in flat.iter().enumerate() {
        let r = find(&mut parent, k);
        let g = *group_of.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push((root, branch));
    }
    groups.retain(|g| {
        let first = g[0].0;
        g.iter().any(|(i, _)| *i != first)
    });
    for g in &groups {
        for &(i, _) in g {
            let mut partners: Vec<usize> = g.iter().map(|(j, _)| *j).filter(|&j| j != i).collect();
            records[i].partners.append(&mut partners);
            records[i].partners.sort_unstable();
            records[i].partners.dedup();
        }
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                let (ta, tb) = (records[g[a].0].root.approx(), records[g[b].0].root.approx());
                if g[a].0 != g[b].0 && (ta - tb).abs() < 1e-4 * (1.0 + ta.abs()) {
                    records[g[a].0].tacnode = true;
                    records[g[b].0].tacnode = true;
                }
            }
        }
    }
    for r in records.iter_mut() {
        r.partner_at_infinity = r.points.iter().any(|p| infinity.iter().any(|q| close((p.1, p.2), *q, opts.tol)));
    }

    let mu_constant = sys.contents.mu.is_constant();
    let mut unresolved = 0;
    for (i, r) in records.iter_mut().enumerate() {
        r.kind = if r.cusp_test {
            Kind::CuspGenerated
        } else if r.curvature_test {
            Kind::Local
        } else if !r.partners.is_empty() || r.partner_at_infinity {
            Kind::SelfIntersection
        } else if ambiguous.contains(&i) || mu_constant {
            Kind::Unresolved
        } else {
            Kind::Superfluous
        };
        if r.kind == Kind::Unresolved {
            unresolved += 1;
        }
        if matches!(r.kind, Kind::Superfluous | Kind::Unresolved) {
            r.points = points_at(c, sys, &r.root, &Branch::BOTH);
        }
        if r.kind == Kind::SelfIntersection {
            let members: Vec<Branch> =
                groups.iter().flat_map(|g| g.iter().filter(|(j, _)| *j == i).map(|(_, b)| *b)).collect();
            if !members.is_empty() {
                r.branches = members;
                r.branches.sort();
                r.branches.dedup();
                r.points.retain(|p| r.branches.contains(&p.0));
            }
        }
    }
    Ok(Classification { roots: records, groups, unresolved })
}

/// Curvature test at root `index` of `ω`: the branch on which `k = -1/d`
/// makes the offset singular, or `None`. Fails when `(U, V)` vanishes there.
pub fn local_singularity_test(res: &OffsetSingResult, c: &CurveSpec, index: usize) -> Result<Option<Branch>> {
    let tests = Tests::new(res, c)?;
    let mut root = res.roots.roots[index].clone();
    if tests.nu.vanishes(&root) {
        return Err(Error::Precondition("U and V vanish at the root; use the cusp test".into()));
    }
    if !tests.curv.vanishes(&root) {
        return Ok(None);
    }
    let sj = tests.jac.sign(&tests.omega, &mut root);
    let sn = tests.nu.sign(&tests.omega, &mut root);
    Ok(Some(if sj * sn < 0 { Branch::Plus } else { Branch::Minus }))
}

/// Whether `ÛV̂' - V̂Û'` vanishes at root `index`, which must be a common
/// zero of `U` and `V`.
pub fn cusp_generated_test(res: &OffsetSingResult, c: &CurveSpec, index: usize) -> Result<bool> {
    let tests = Tests::new(res, c)?;
    let root = &res.roots.roots[index];
    if !tests.nu.vanishes(root) {
        return Err(Error::Precondition("U and V do not both vanish at the root".into()));
    }
    Ok(tests.jac.vanishes(root))
}

/// The cusp condition `ÛV̂' - V̂Û' = 0` at a rational parameter where `U`
/// and `V` both vanish.
pub fn cusp_condition_at(sys: &OffsetSystem, t0: &Rat) -> Result<bool> {
    if sign_at(&sys.normals.nu, t0) != 0 {
        return Err(Error::Precondition("U and V do not both vanish at the parameter".into()));
    }
    let (uh, vh) = (sys.uhat(), sys.vhat());
    let jac = mul_int(uh, &vh.derivative()) - mul_int(vh, &uh.derivative());
    Ok(sign_at(&jac, t0) == 0)
}
