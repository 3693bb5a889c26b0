//! Curve-family interchange format.
//!
//! ```json
//! {
//!   "strip": [[x0_num, x0_den], [x1_num, x1_den]],
//!   "curves": [
//!     {"id": "s1", "pts": [[[xn, xd], [yn, yd]], ...]},
//!     ...
//!   ]
//! }
//! ```
//!
//! `strip` is `null` for unconfined families. Every coordinate is an exact
//! integer pair (numerator, denominator); nothing is rounded on either side.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::geom::{CurveFamily, MonotoneCurve, Point};
use crate::Rat;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireFamily {
    strip: Option<[WireRat; 2]>,
    curves: Vec<WireCurve>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireCurve {
    id: String,
    pts: Vec<[WireRat; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct WireRat([Number; 2]);

fn int_to_number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal")
}

fn number_to_int(n: &Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| Error::Malformed(format!("`{n}` is not an integer")))
}

fn rat_to_wire(r: &Rat) -> WireRat {
    WireRat([int_to_number(r.numer()), int_to_number(r.denom())])
}

fn wire_to_rat(w: &WireRat) -> Result<Rat> {
    let num = number_to_int(&w.0[0])?;
    let den = number_to_int(&w.0[1])?;
    if den == BigInt::from(0) {
        return Err(Error::Malformed("zero denominator".into()));
    }
    Ok(Rat::new(num, den))
}

pub fn family_to_json(f: &CurveFamily<Rat>) -> String {
    let wire = WireFamily {
        strip: f.strip().map(|(a, b)| [rat_to_wire(a), rat_to_wire(b)]),
        curves: f
            .curves()
            .iter()
            .map(|c| WireCurve {
                id: c.id().to_string(),
                pts: c
                    .points()
                    .iter()
                    .map(|p| [rat_to_wire(&p.x), rat_to_wire(&p.y)])
                    .collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&wire).expect("serializable");
    s.push('\n');
    s
}

pub fn family_from_json(s: &str) -> Result<CurveFamily<Rat>> {
    let wire: WireFamily =
        serde_json::from_str(s).map_err(|e| Error::Malformed(format!("family JSON: {e}")))?;
    let strip = match &wire.strip {
        Some([a, b]) => Some((wire_to_rat(a)?, wire_to_rat(b)?)),
        None => None,
    };
    let mut curves = Vec::with_capacity(wire.curves.len());
    for c in &wire.curves {
        let pts = c
            .pts
            .iter()
            .map(|[x, y]| Ok(Point::new(wire_to_rat(x)?, wire_to_rat(y)?)))
            .collect::<Result<Vec<_>>>()?;
        curves.push(MonotoneCurve::new(c.id.clone(), pts)?);
    }
    CurveFamily::new(curves, strip)
}

pub fn family_from_reader(mut r: impl std::io::Read) -> Result<CurveFamily<Rat>> {
    let mut buf = String::new();
    r.read_to_string(&mut buf)?;
    family_from_json(&buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_frac;

    fn sample() -> CurveFamily<Rat> {
        let big = Rat::new(
            BigInt::from_str("123456789012345678901234567890").unwrap(),
            BigInt::from(7),
        );
        CurveFamily::new(
            vec![
                MonotoneCurve::new(
                    "a",
                    vec![
                        Point::new(s_frac(0, 1), s_frac(-1, 3)),
                        Point::new(s_frac(1, 2), big),
                        Point::new(s_frac(4, 1), s_frac(0, 1)),
                    ],
                )
                .unwrap(),
                MonotoneCurve::new(
                    "b",
                    vec![
                        Point::new(s_frac(0, 1), s_frac(5, 1)),
                        Point::new(s_frac(4, 1), s_frac(6, 1)),
                    ],
                )
                .unwrap(),
            ],
            Some((s_frac(0, 1), s_frac(4, 1))),
        )
        .unwrap()
    }

    #[test]
    fn roundtrip_preserves_exact_coordinates() {
        let fam = sample();
        let text = family_to_json(&fam);
        let back = family_from_json(&text).unwrap();
        assert_eq!(fam, back);
        // Deterministic serialization.
        assert_eq!(text, family_to_json(&back));
    }

    #[test]
    fn null_strip_roundtrips() {
        let fam = CurveFamily::new(
            vec![MonotoneCurve::new(
                "only",
                vec![
                    Point::new(s_frac(0, 1), s_frac(0, 1)),
                    Point::new(s_frac(1, 1), s_frac(1, 1)),
                ],
            )
            .unwrap()],
            None,
        )
        .unwrap();
        let text = family_to_json(&fam);
        assert!(text.contains("\"strip\": null"));
        assert_eq!(family_from_json(&text).unwrap(), fam);
    }

    #[test]
    fn rejects_bad_payloads() {
        assert!(family_from_json("{").is_err());
        assert!(family_from_json(r#"{"strip": null, "curves": [], "extra": 1}"#).is_err());
        // Fractional coordinate literal.
        let bad = r#"{"strip": null, "curves": [{"id": "a", "pts": [[[0.5, 1], [0, 1]], [[1, 1], [0, 1]]]}]}"#;
        assert!(family_from_json(bad).is_err());
        // Zero denominator.
        let zero = r#"{"strip": null, "curves": [{"id": "a", "pts": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]}]}"#;
        assert!(family_from_json(zero).is_err());
        // Non-monotone vertices.
        let flat = r#"{"strip": null, "curves": [{"id": "a", "pts": [[[1, 1], [0, 1]], [[1, 1], [2, 1]]]}]}"#;
        assert!(family_from_json(flat).is_err());
    }
}
