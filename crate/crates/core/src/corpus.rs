//! The curves shipped with the crate.

use crate::curve_file::parse_curve_file;
use crate::error::Result;
use crate::offset::CurveSpec;

/// `(key, file text)` for every bundled curve file.
pub const FILES: &[(&str, &str)] = &[
    ("c1", include_str!("../corpus/c1.json")),
    ("c10", include_str!("../corpus/c10.json")),
    ("c11", include_str!("../corpus/c11.json")),
    ("c12", include_str!("../corpus/c12.json")),
    ("c13", include_str!("../corpus/c13.json")),
    ("c2", include_str!("../corpus/c2.json")),
    ("c3", include_str!("../corpus/c3.json")),
    ("c4", include_str!("../corpus/c4.json")),
    ("c5", include_str!("../corpus/c5.json")),
    ("c5_d03", include_str!("../corpus/c5_d03.json")),
    ("c6", include_str!("../corpus/c6.json")),
    ("c7", include_str!("../corpus/c7.json")),
    ("c8", include_str!("../corpus/c8.json")),
    ("c9", include_str!("../corpus/c9.json")),
    ("cardioid", include_str!("../corpus/cardioid.json")),
    ("parabola", include_str!("../corpus/parabola.json")),
];

/// The rational circle, whose offset is reducible.
pub const CIRCLE: &str = include_str!("../testdata/circle.json");

pub fn get(key: &str) -> Option<Result<CurveSpec>> {
    FILES.iter().find(|(k, _)| *k == key).map(|(_, text)| parse_curve_file(text))
}

pub fn all() -> Result<Vec<(&'static str, CurveSpec)>> {
    FILES.iter().map(|(k, text)| Ok((*k, parse_curve_file(text)?))).collect()
}
