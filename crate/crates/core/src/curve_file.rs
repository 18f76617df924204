//! JSON curve files.
//!
//! ```json
//! {"name": "cardioid", "X": [0, 0, 0, -1024], "Y": [0, 0, 128, 0, -2048],
//!  "W": [1, 0, 32, 0, 256], "d": "1"}
//! ```
//!
//! Coefficient arrays are in ascending degree; entries are JSON integers or
//! decimal strings for values beyond 64 bits. `d` is `"p/q"`, an integer or
//! a terminating decimal.

use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::offset::{normalize_curve, CurveSpec};
use crate::{Int, IntPoly, Rat};

/// Parses and normalizes a curve file.
pub fn parse_curve_file(text: &str) -> Result<CurveSpec> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = v.as_object().ok_or_else(|| Error::Parse("top level must be an object".into()))?;
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        None => "curve".to_string(),
        Some(_) => return Err(Error::Parse("field `name`: expected a string".into())),
    };
    let x = coeffs(obj.get("X"), "X")?;
    let y = coeffs(obj.get("Y"), "Y")?;
    let w = coeffs(obj.get("W"), "W")?;
    let d = match obj.get("d") {
        Some(Value::String(s)) => parse_rational(s).map_err(|m| Error::Parse(format!("field `d`: {m}")))?,
        Some(Value::Number(n)) => {
            parse_rational(&n.to_string()).map_err(|m| Error::Parse(format!("field `d`: {m}")))?
        }
        Some(_) => return Err(Error::Parse("field `d`: expected a string".into())),
        None => return Err(Error::Parse("missing field `d`".into())),
    };
    if w.is_zero() {
        return Err(Error::InvalidCurve("W is identically zero".into()));
    }
    normalize_curve(CurveSpec { name, x, y, w, d })
}

fn coeffs(v: Option<&Value>, field: &str) -> Result<IntPoly> {
    let arr = match v {
        Some(Value::Array(a)) => a,
        Some(_) => return Err(Error::Parse(format!("field `{field}`: expected an array"))),
        None => return Err(Error::Parse(format!("missing field `{field}`"))),
    };
    if arr.is_empty() {
        return Err(Error::Parse(format!("field `{field}`: empty coefficient array")));
    }
    let mut out = Vec::with_capacity(arr.len());
    for (k, c) in arr.iter().enumerate() {
        let bad = || Error::Parse(format!("field `{field}`[{k}]: expected an integer"));
        let v = match c {
            Value::Number(n) if n.is_i64() || n.is_u64() => Int::from_str(&n.to_string()).map_err(|_| bad())?,
            Value::String(s) => Int::from_str(s.trim()).map_err(|_| bad())?,
            _ => return Err(bad()),
        };
        out.push(v);
    }
    Ok(IntPoly::from_coeffs(out))
}

/// `"p/q"`, `"n"` or a terminating decimal such as `"0.3"`.
pub fn parse_rational(s: &str) -> std::result::Result<Rat, String> {
    let s = s.trim();
    let bad = || format!("cannot read `{s}` as a rational number");
    if let Some((p, q)) = s.split_once('/') {
        let p = Int::from_str(p.trim()).map_err(|_| bad())?;
        let q = Int::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((i, f)) = s.split_once('.') {
        if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = i.trim_start().starts_with('-');
        let ip = if i.is_empty() || i == "-" { Int::zero() } else { Int::from_str(i).map_err(|_| bad())? };
        let den = num_traits::pow(Int::from(10), f.len());
        let fp = Int::from_str(f).map_err(|_| bad())?;
        let mag = Rat::from_integer(ip.abs()) + Rat::new(fp, den);
        return Ok(if neg { -mag } else { mag });
    }
    Int::from_str(s).map(Rat::from_integer).map_err(|_| bad())
}

/// Canonical text of a rational: `"n"` or `"p/q"`.
pub fn rational_text(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Serialize)]
struct CanonicalFile {
    name: String,
    #[serde(rename = "X")]
    x: Vec<Value>,
    #[serde(rename = "Y")]
    y: Vec<Value>,
    #[serde(rename = "W")]
    w: Vec<Value>,
    d: String,
}

fn coeff_values(p: &IntPoly) -> Vec<Value> {
    if p.is_zero() {
        return vec![Value::from(0)];
    }
    p.coeffs().iter().map(|c| c.to_i64().map(Value::from).unwrap_or_else(|| Value::String(c.to_string()))).collect()
}

/// Canonical file text for a spec; parsing it gives the same spec back.
pub fn emit_curve_file(c: &CurveSpec) -> String {
    let f = CanonicalFile {
        name: c.name.clone(),
        x: coeff_values(&c.x),
        y: coeff_values(&c.y),
        w: coeff_values(&c.w),
        d: rational_text(&c.d),
    };
    let mut s = serde_json::to_string_pretty(&f).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const CARDIOID: &str =
        r#"{"name": "cardioid", "X": [0,0,0,-1024], "Y": [0,0,128,0,-2048], "W": [1,0,32,0,256], "d": "1"}"#;

    #[test]
    fn parses_cardioid() {
        let c = parse_curve_file(CARDIOID).unwrap();
        assert_eq!(c.x, IntPoly::from_ints(&[0, 0, 0, -1024]));
        assert_eq!(c.w, IntPoly::from_ints(&[1, 0, 32, 0, 256]));
        assert_eq!(c.d, Rat::one());
    }

    #[test]
    fn errors() {
        let zero_d = CARDIOID.replace("\"d\": \"1\"", "\"d\": \"0\"");
        let e = parse_curve_file(&zero_d).unwrap_err();
        assert_eq!(e.to_string(), "distance must be positive");
        let empty = CARDIOID.replace("[0,0,0,-1024]", "[]");
        assert!(matches!(parse_curve_file(&empty), Err(Error::Parse(_))));
        let broken = CARDIOID.replace("]", "");
        let e = parse_curve_file(&broken).unwrap_err();
        assert!(e.to_string().contains("line 1"));
        let zero_w = CARDIOID.replace("[1,0,32,0,256]", "[0, 0]");
        assert!(matches!(parse_curve_file(&zero_w), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/10").unwrap(), Rat::new(3.into(), 10.into()));
        assert_eq!(parse_rational("0.3").unwrap(), Rat::new(3.into(), 10.into()));
        assert_eq!(parse_rational("-1.25").unwrap(), Rat::new((-5).into(), 4.into()));
        assert_eq!(parse_rational("7").unwrap(), Rat::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_text(&Rat::new(4.into(), 5.into())), "4/5");
    }

    #[test]
    fn round_trip() {
        let c = parse_curve_file(CARDIOID).unwrap();
        let text = emit_curve_file(&c);
        let again = parse_curve_file(&text).unwrap();
        assert_eq!(again, c);
        assert_eq!(emit_curve_file(&again), text);
        let big = CARDIOID.replace("-1024", "\"-123456789012345678901234567890\"");
        let b = parse_curve_file(&big).unwrap();
        assert_eq!(parse_curve_file(&emit_curve_file(&b)).unwrap(), b);
    }
}
