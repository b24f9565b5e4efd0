//! JSON-lines and CSV encodings of [`Quadrilateral`] records.
//!
//! Numbers are written as `"n"` or `"n/d"` strings so that nothing is lost
//! to floating point on the way through other tools.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::generators::ParamSet;
use crate::quad::{Family, PlacedSolution, Quadrilateral};

#[derive(Serialize, Deserialize)]
struct Placement {
    e: Rational,
    x1: Rational,
    y1: Rational,
    x2: Rational,
    y2: Rational,
}

#[derive(Serialize, Deserialize)]
struct Line {
    sides: [String; 4],
    diagonals: [String; 2],
    area: Rational,
    placement: Placement,
    family: Family,
    params: Option<ParamSet>,
    scale: Rational,
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("expected an integer, got {s:?}")))
}

/// One record as a single line of JSON (no trailing newline).
pub fn to_json_line(rec: &Quadrilateral) -> String {
    let p = &rec.placement;
    let line = Line {
        sides: rec.sides.clone().map(|v| v.to_string()),
        diagonals: rec.diagonals.clone().map(|v| v.to_string()),
        area: rec.area.clone(),
        placement: Placement {
            e: p.e.clone(),
            x1: p.x1.clone(),
            y1: p.y1.clone(),
            x2: p.x2.clone(),
            y2: p.y2.clone(),
        },
        family: rec.family,
        params: rec.params.clone(),
        scale: rec.scale.clone(),
    };
    serde_json::to_string(&line).expect("record serialization cannot fail")
}

/// Parses a line written by [`to_json_line`].
///
/// The stored fields are taken at face value; run the verifier to check them.
pub fn from_json_line(text: &str) -> Result<Quadrilateral> {
    let line: Line = serde_json::from_str(text.trim()).map_err(|e| Error::Parse(e.to_string()))?;
    let sides = [
        parse_int(&line.sides[0])?,
        parse_int(&line.sides[1])?,
        parse_int(&line.sides[2])?,
        parse_int(&line.sides[3])?,
    ];
    let diagonals = [
        parse_int(&line.diagonals[0])?,
        parse_int(&line.diagonals[1])?,
    ];
    let r = |v: &BigInt| Rational::from(v);
    let pl = line.placement;
    let placement = PlacedSolution {
        a: r(&sides[0]),
        b: r(&sides[1]),
        c: r(&sides[2]),
        d: r(&sides[3]),
        e: pl.e,
        f: r(&diagonals[1]),
        x1: pl.x1,
        y1: pl.y1,
        x2: pl.x2,
        y2: pl.y2,
    };
    Ok(Quadrilateral {
        sides,
        diagonals,
        area: line.area,
        placement,
        family: line.family,
        params: line.params,
        scale: line.scale,
    })
}

/// Parses every non-blank line; the error names the 1-based line number.
pub fn read_json_lines(text: &str) -> Result<Vec<Quadrilateral>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_json_line(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1))))
        .collect()
}

pub const CSV_HEADER: &str = "a,b,c,d,e,f,area,family";

pub fn to_csv_row(rec: &Quadrilateral) -> String {
    let [a, b, c, d] = &rec.sides;
    let [e, f] = &rec.diagonals;
    format!("{a},{b},{c},{d},{e},{f},{},{}", rec.area, rec.family)
}
