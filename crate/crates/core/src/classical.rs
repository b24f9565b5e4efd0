//! Brahmagupta's area and diagonal formulas, Paramesvara's circumradius, and
//! the general area relation `Δ² = (s−a)(s−b)(s−c)(s−d) − abcd·cos²u`.
//!
//! Everything is carried as squares: for a rational-sided cyclic
//! quadrilateral the area, diagonals and circumradius are in general
//! irrational, but their squares never are.

use crate::error::{Error, Result};
use crate::exact::{q, Rational};
use crate::quad::Quadrilateral;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicData {
    pub semiperimeter: Rational,
    /// `K²`.
    pub area_squared: Rational,
    /// `{e², f²}`, smaller first.
    pub diag_pair: (Rational, Rational),
    /// `R²`.
    pub circumradius_squared: Rational,
}

fn check_sides(sides: [&Rational; 4]) -> Result<Rational> {
    if sides.iter().any(|s| !s.is_positive()) {
        return Err(Error::QuadrilateralInequality);
    }
    let perimeter: Rational = sides.iter().copied().sum();
    // Each side must be shorter than the other three together.
    if sides.iter().any(|s| (*s + *s) >= perimeter) {
        return Err(Error::QuadrilateralInequality);
    }
    Ok(perimeter * Rational::new(1, 2)?)
}

fn ordered(x: Rational, y: Rational) -> (Rational, Rational) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Cyclic-quadrilateral quantities for consecutive sides `a, b, c, d`.
pub fn brahmagupta(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<CyclicData> {
    let s = check_sides([a, b, c, d])?;
    let area_squared = (&s - a) * (&s - b) * (&s - c) * (&s - d);
    let ab_cd = a * b + c * d;
    let ac_bd = a * c + b * d;
    let ad_bc = a * d + b * c;
    let e2 = (&ab_cd * &ac_bd).checked_div(&ad_bc)?;
    let f2 = (&ac_bd * &ad_bc).checked_div(&ab_cd)?;
    let circumradius_squared = (&ab_cd * &ac_bd * &ad_bc).checked_div(&(q(16) * &area_squared))?;
    Ok(CyclicData {
        semiperimeter: s,
        area_squared,
        diag_pair: ordered(e2, f2),
        circumradius_squared,
    })
}

fn sides_of(quad: &Quadrilateral) -> [Rational; 4] {
    quad.sides.clone().map(Rational::from)
}

/// `cos²u`, where `2u` is the sum of either pair of opposite angles.
pub fn cos_sq_u(quad: &Quadrilateral) -> Result<Rational> {
    let [a, b, c, d] = sides_of(quad);
    let s = check_sides([&a, &b, &c, &d])?;
    let bound = (&s - &a) * (&s - &b) * (&s - &c) * (&s - &d);
    (bound - quad.area.square()).checked_div(&(a * b * c * d))
}

/// True when the quadrilateral is inscribable in a circle.
///
/// Requires `cos²u = 0` and that the diagonals agree with Brahmagupta's as an
/// unordered pair.
pub fn classify_cyclic(quad: &Quadrilateral) -> bool {
    let Ok(cos2) = cos_sq_u(quad) else {
        return false;
    };
    if !cos2.is_zero() {
        return false;
    }
    let [a, b, c, d] = sides_of(quad);
    let Ok(data) = brahmagupta(&a, &b, &c, &d) else {
        return false;
    };
    let [e, f] = quad.diagonals.clone().map(Rational::from);
    data.diag_pair == ordered(e.square(), f.square())
}

/// `e·f = a·c + b·d`.
pub fn ptolemy_holds(quad: &Quadrilateral) -> bool {
    let [a, b, c, d] = sides_of(quad);
    let [e, f] = quad.diagonals.clone().map(Rational::from);
    e * f == a * c + b * d
}
