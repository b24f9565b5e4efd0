//! Brute-force enumeration of integer placements.
//!
//! This module deliberately does not call into [`crate::quad::verify`]: it
//! re-derives the distance equations and sign conditions on its own so that
//! it can serve as ground truth for the verifier and the generators.

use num_bigint::BigInt;
use num_integer::Roots;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::exact::Rational;
use crate::quad::{canonicalize, verify, Family, PlacedSolution, Quadrilateral};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBounds {
    pub e_max: u32,
    pub coord_max: u32,
}

impl LatticeBounds {
    pub fn new(e_max: u32, coord_max: u32) -> Option<Self> {
        (e_max >= 1 && coord_max >= 1).then_some(LatticeBounds { e_max, coord_max })
    }
}

/// One integer placement with all six lengths integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeHit {
    pub e: i64,
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub f: i64,
}

impl LatticeHit {
    pub fn placement(&self) -> PlacedSolution {
        let r = |v: i64| Rational::from(v);
        PlacedSolution {
            a: r(self.a),
            b: r(self.b),
            c: r(self.c),
            d: r(self.d),
            e: r(self.e),
            f: r(self.f),
            x1: r(self.x1),
            y1: r(self.y1),
            x2: r(self.x2),
            y2: r(self.y2),
        }
    }
}

pub(crate) fn int_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Sign conditions for integer coordinates, `y1 > 0 > y2` assumed.
fn convex_int(e: i64, x1: i64, y1: i64, x2: i64, y2: i64) -> bool {
    let dy = y1 - y2;
    let cross = x1 * y2 - x2 * y1;
    -y1 * y2 > 0 && -dy * cross > 0 && dy * (e * dy + cross) > 0
}

/// Points `(x, y)` with `|x| ≤ cmax`, `1 ≤ y ≤ cmax` and `x² + y²` a square.
fn pythagorean_points(cmax: i64) -> Vec<(i64, i64, i64)> {
    let mut pts = Vec::new();
    for x in -cmax..=cmax {
        for y in 1..=cmax {
            if let Some(r) = int_sqrt(x * x + y * y) {
                pts.push((x, y, r));
            }
        }
    }
    pts
}

fn hits_for_e(e: i64, pts: &[(i64, i64, i64)]) -> Vec<LatticeHit> {
    // Vertices whose distances to both O and B are integral.
    let upper: Vec<(i64, i64, i64, i64)> = pts
        .iter()
        .filter_map(|&(x, y, r)| {
            let dx = e - x;
            int_sqrt(dx * dx + y * y).map(|s| (x, y, r, s))
        })
        .collect();
    let mut hits = Vec::new();
    for &(x1, y1, a, b) in &upper {
        for &(x2, ny2, d, c) in &upper {
            let y2 = -ny2;
            if !convex_int(e, x1, y1, x2, y2) {
                continue;
            }
            let dx = x1 - x2;
            let dy = y1 - y2;
            if let Some(f) = int_sqrt(dx * dx + dy * dy) {
                hits.push(LatticeHit {
                    e,
                    x1,
                    y1,
                    x2,
                    y2,
                    a,
                    b,
                    c,
                    d,
                    f,
                });
            }
        }
    }
    hits
}

/// Every integer placement within bounds, sorted by `(e, x1, y1, x2, y2)`.
pub fn enumerate_raw(bounds: LatticeBounds) -> Vec<LatticeHit> {
    let cmax = i64::from(bounds.coord_max);
    let pts = pythagorean_points(cmax);
    let es: Vec<i64> = (1..=i64::from(bounds.e_max)).collect();
    #[cfg(feature = "parallel")]
    let per_e: Vec<Vec<LatticeHit>> = es.par_iter().map(|&e| hits_for_e(e, &pts)).collect();
    #[cfg(not(feature = "parallel"))]
    let per_e: Vec<Vec<LatticeHit>> = es.iter().map(|&e| hits_for_e(e, &pts)).collect();
    let mut all: Vec<LatticeHit> = per_e.into_iter().flatten().collect();
    all.sort();
    all
}

/// Canonical, deduplicated records of every lattice quadrilateral in bounds.
pub fn enumerate(bounds: LatticeBounds) -> Vec<Quadrilateral> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for hit in enumerate_raw(bounds) {
        let rec = canonicalize(&hit.placement(), Family::Lattice, None)
            .expect("lattice hits satisfy every condition");
        if seen.insert(rec.figure_key()) {
            out.push(rec);
        }
    }
    out
}

/// Independent recheck of the distance equations and sign conditions.
pub fn conditions_hold(s: &PlacedSolution) -> bool {
    let PlacedSolution {
        a,
        b,
        c,
        d,
        e,
        f,
        x1,
        y1,
        x2,
        y2,
    } = s;
    let sq = |v: &Rational| v * v;
    let dist2 = |px: &Rational, py: &Rational, qx: &Rational, qy: &Rational| {
        sq(&(px - qx)) + sq(&(py - qy))
    };
    let zero = Rational::zero();
    let lengths_ok = dist2(x1, y1, &zero, &zero) == sq(a)
        && dist2(x1, y1, e, &zero) == sq(b)
        && dist2(x2, y2, e, &zero) == sq(c)
        && dist2(x2, y2, &zero, &zero) == sq(d)
        && dist2(x1, y1, x2, y2) == sq(f);
    if !lengths_ok || [a, b, c, d, e, f].iter().any(|v| !v.is_positive()) {
        return false;
    }
    // A and C strictly on opposite sides of OB.
    if y1.signum() * y2.signum() != -1 {
        return false;
    }
    // The diagonals meet at (t, 0) with t = (x2·y1 − x1·y2)/(y1 − y2); need 0 < t < e.
    let Ok(t) = (x2 * y1 - x1 * y2).checked_div(&(y1 - y2)) else {
        return false;
    };
    t.is_positive() && &t < e
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub index: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CrossReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Recomputes every record from its placement and compares verdicts and stored data.
pub fn cross_validate(records: &[Quadrilateral]) -> CrossReport {
    let mut report = CrossReport {
        checked: records.len(),
        disagreements: Vec::new(),
    };
    for (index, rec) in records.iter().enumerate() {
        let mut flag = |detail: String| report.disagreements.push(Disagreement { index, detail });
        let p = &rec.placement;
        let oracle = conditions_hold(p);
        let verifier = verify(p).convex;
        if oracle != verifier {
            flag(format!("oracle says {oracle}, verifier says {verifier}"));
        }
        if !oracle {
            flag("placement is not a convex rational quadrilateral".into());
        }
        let stored: Vec<Rational> = rec
            .sides
            .iter()
            .chain(&rec.diagonals)
            .map(Rational::from)
            .collect();
        let placed: Vec<&Rational> = vec![&p.a, &p.b, &p.c, &p.d, &p.e, &p.f];
        if stored.iter().zip(placed).any(|(s, p)| s != p) {
            flag("stored lengths differ from placement".into());
        }
        let g = stored.iter().fold(BigInt::from(0), |acc, v| {
            num_integer::Integer::gcd(&acc, v.numer())
        });
        if g != BigInt::from(1) {
            flag(format!("lengths are not primitive (gcd {g})"));
        }
        // Shoelace over O, A, B, C.
        let shoelace = {
            let v = p.vertices();
            let twice: Rational = (0..4)
                .map(|i| {
                    let (x0, y0) = &v[i];
                    let (x1, y1) = &v[(i + 1) % 4];
                    x0 * y1 - x1 * y0
                })
                .sum();
            (twice * Rational::new(1, 2).expect("nonzero")).abs()
        };
        if shoelace != rec.area {
            flag(format!(
                "stored area {} but placement area {}",
                rec.area, shoelace
            ));
        }
    }
    report
}
