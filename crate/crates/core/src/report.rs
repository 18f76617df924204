//! JSON reports.
//!
//! Key order is fixed by the struct layout, roots are sorted by midpoint and
//! interval endpoints are written as exact rational strings, so two runs on
//! the same input produce the same bytes (unless wall time is requested).

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Classification, ClassifyOptions, Kind};
use crate::curve_file::rational_text;
use crate::error::{Error, Result};
use crate::offset::{Branch, CurveSpec};
use crate::roots::rat_to_decimal;
use crate::solver::{run_offset_sing, OffsetSingResult, SolverOptions};

/// The JSON schema every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Digits after the decimal point in `approx`.
const APPROX_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub curve: String,
    pub d: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mobius: Option<[i64; 4]>,
    pub n_p: usize,
    pub delta_t: Option<usize>,
    pub tau: Option<u64>,
    #[serde(rename = "deg_t_P")]
    pub deg_t_p: Option<usize>,
    #[serde(rename = "deg_t_Q")]
    pub deg_t_q: Option<usize>,
    pub precision_bits: u32,
    pub roots: Vec<RootRecord>,
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    /// `[lo, hi]` as rational strings; equal for exact roots.
    pub interval: [String; 2],
    pub exact: bool,
    pub approx: String,
    pub kind: String,
    pub branch: Vec<String>,
    pub partners: Vec<usize>,
    pub partner_at_infinity: bool,
    pub tacnode: bool,
    /// `U` and `V` both vanish here; the normal is the limit direction and
    /// its orientation may flip across the root.
    pub gcd_uv_root: bool,
    pub points: Vec<PointRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub branch: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub reducible_rejected: bool,
    pub superfluous_present: bool,
    pub unresolved_present: bool,
    pub gcd_omega_w_nonconstant: bool,
    pub p_infinity_affine: bool,
}

/// Solver output, its classification and the elapsed time.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub result: OffsetSingResult,
    pub classification: Classification,
    pub elapsed_ms: u64,
}

/// Runs solver and classifier and checks the invariants relating them.
pub fn analyze(c: &CurveSpec, solver: SolverOptions, opts: ClassifyOptions) -> Result<Analysis> {
    let start = Instant::now();
    let result = run_offset_sing(c, solver)?;
    let classification = classify(&result, c, opts)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    check_invariants(&result, &classification)?;
    Ok(Analysis { result, classification, elapsed_ms })
}

fn check_invariants(res: &OffsetSingResult, cls: &Classification) -> Result<()> {
    if res.omega.omega.is_zero() {
        return Err(Error::Internal("ω vanishes identically".into()));
    }
    if cls.roots.len() != res.n_p() {
        return Err(Error::Internal(format!("{} classified roots for n_p = {}", cls.roots.len(), res.n_p())));
    }
    if res.system.contents.mu.is_constant() && cls.count(Kind::Superfluous) > 0 {
        return Err(Error::Internal("superfluous root on a curve without extraneous factors".into()));
    }
    for (i, r) in cls.roots.iter().enumerate() {
        if r.kind == Kind::SelfIntersection && r.partners.is_empty() && !r.partner_at_infinity {
            return Err(Error::Internal(format!("self-intersection root {i} has no partner")));
        }
        if r.kind == Kind::CuspGenerated && !r.nu_root {
            return Err(Error::Internal(format!("cusp-generated root {i} is not a zero of gcd(U, V)")));
        }
    }
    Ok(())
}

fn kind_text(k: Kind) -> &'static str {
    match k {
        Kind::SelfIntersection => "self_intersection",
        Kind::Local => "local",
        Kind::CuspGenerated => "cusp_generated",
        Kind::Superfluous => "superfluous",
        Kind::Unresolved => "unresolved",
    }
}

fn branch_text(b: Branch) -> String {
    b.symbol().to_string()
}

pub fn report_from(c: &CurveSpec, a: &Analysis) -> Report {
    let res = &a.result;
    let cls = &a.classification;
    let roots = cls
        .roots
        .iter()
        .map(|r| RootRecord {
            interval: [rational_text(&r.root.lo), rational_text(&r.root.hi)],
            exact: r.root.exact,
            approx: rat_to_decimal(&r.root.mid(), APPROX_DIGITS),
            kind: kind_text(r.kind).to_string(),
            branch: r.branches.iter().map(|b| branch_text(*b)).collect(),
            partners: r.partners.clone(),
            partner_at_infinity: r.partner_at_infinity,
            tacnode: r.tacnode,
            gcd_uv_root: r.nu_root,
            points: r.points.iter().map(|(b, x, y)| PointRecord { branch: branch_text(*b), x: *x, y: *y }).collect(),
        })
        .collect();
    Report {
        curve: c.name.clone(),
        d: rational_text(&c.d),
        mobius: None,
        n_p: res.n_p(),
        delta_t: Some(res.omega.deg_omega),
        tau: Some(res.omega.tau_omega),
        deg_t_p: Some(res.system.deg_p_t),
        deg_t_q: Some(res.system.deg_q_t),
        precision_bits: res.roots.precision_bits,
        roots,
        flags: Flags {
            reducible_rejected: false,
            superfluous_present: cls.count(Kind::Superfluous) > 0,
            unresolved_present: cls.count(Kind::Unresolved) > 0,
            gcd_omega_w_nonconstant: !res.omega.w_factor.is_constant(),
            p_infinity_affine: res.system.infinity.p_inf_affine,
        },
        wall_time_ms: None,
    }
}

/// The report for an input rejected because its offset is reducible.
pub fn reducible_report(c: &CurveSpec, precision_bits: u32) -> Report {
    Report {
        curve: c.name.clone(),
        d: rational_text(&c.d),
        mobius: None,
        n_p: 0,
        delta_t: None,
        tau: None,
        deg_t_p: None,
        deg_t_q: None,
        precision_bits,
        roots: Vec::new(),
        flags: Flags { reducible_rejected: true, ..Flags::default() },
        wall_time_ms: None,
    }
}

/// Pretty JSON with a trailing newline.
pub fn emit_report(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn run(key: &str) -> (CurveSpec, Report) {
        let c = corpus::get(key).unwrap().unwrap();
        let a = analyze(&c, SolverOptions::default(), ClassifyOptions::default()).unwrap();
        let r = report_from(&c, &a);
        (c, r)
    }

    #[test]
    fn cardioid_report() {
        let (_, r) = run("cardioid");
        assert_eq!(r.n_p, 4);
        assert_eq!(r.delta_t, Some(12));
        let approx: Vec<f64> = r.roots.iter().map(|x| x.approx.parse().unwrap()).collect();
        for (a, e) in approx.iter().zip([-0.08699, -0.04772, 0.04772, 0.08699]) {
            assert!((a - e).abs() < 1e-5);
        }
        let kinds: Vec<&str> = r.roots.iter().map(|x| x.kind.as_str()).collect();
        assert_eq!(kinds, ["self_intersection", "local", "local", "self_intersection"]);
        assert_eq!(r.roots[0].partners, vec![3]);
        assert!(!r.flags.reducible_rejected && !r.flags.superfluous_present);
    }

    #[test]
    fn emission_is_deterministic_and_round_trips() {
        let (_, r) = run("parabola");
        let a = emit_report(&r);
        let (_, r2) = run("parabola");
        assert_eq!(a, emit_report(&r2));
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(back, r);
        assert!(!a.contains("wall_time_ms"));
        let keys: Vec<&str> =
            ["\"curve\"", "\"d\"", "\"n_p\"", "\"delta_t\"", "\"tau\"", "\"deg_t_P\"", "\"roots\"", "\"flags\""]
                .into_iter()
                .collect();
        let pos: Vec<usize> = keys.iter().map(|k| a.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn circle_is_rejected() {
        let c = crate::curve_file::parse_curve_file(corpus::CIRCLE).unwrap();
        let err = analyze(&c, SolverOptions::default(), ClassifyOptions::default()).unwrap_err();
        assert_eq!(err, Error::ReducibleOffset);
        let r = reducible_report(&c, 53);
        assert!(r.flags.reducible_rejected);
        assert!(r.roots.is_empty());
        assert_eq!(r.n_p, 0);
    }

    #[test]
    fn reports_validate_against_schema() {
        let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
        let v = jsonschema::validator_for(&schema).unwrap();
        for key in ["cardioid", "c7"] {
            let (_, r) = run(key);
            let doc: serde_json::Value = serde_json::from_str(&emit_report(&r)).unwrap();
            assert!(v.is_valid(&doc), "{key}");
        }
        let c = crate::curve_file::parse_curve_file(corpus::CIRCLE).unwrap();
        let mut r = reducible_report(&c, 53);
        r.wall_time_ms = Some(3);
        let doc = serde_json::to_value(&r).unwrap();
        assert!(v.is_valid(&doc));
        let mut bad = doc.clone();
        bad["n_p"] = serde_json::Value::from("four");
        assert!(!v.is_valid(&bad));
    }
}
