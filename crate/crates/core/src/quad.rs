//! Placed-coordinate model of a quadrilateral `OABC`.
//!
//! `O` sits at the origin and the diagonal `OB` lies along the positive x-axis,
//! so a quadrilateral is the ten-tuple `(a, b, c, d, e, f, x1, y1, x2, y2)`:
//!
//! ```text
//! x1² + y1²             = a²   (OA)
//! (e − x1)² + y1²       = b²   (AB)
//! (e − x2)² + y2²       = c²   (BC)
//! x2² + y2²             = d²   (CO)
//! (x1 − x2)² + (y1 − y2)² = f² (AC)
//! ```
//!
//! A solution describes a convex quadrilateral exactly when all six lengths
//! are positive, `A` and `C` lie on opposite sides of `OB`, and the diagonals
//! cross strictly between `O` and `B`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{gcd_scale, q, Rational};
use crate::generators::ParamSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlacedSolution {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub x1: Rational,
    pub y1: Rational,
    pub x2: Rational,
    pub y2: Rational,
}

/// One of the conditions a placed solution must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    PositiveA,
    PositiveB,
    PositiveC,
    PositiveD,
    PositiveE,
    PositiveF,
    /// `−y1·y2 > 0`
    OppositeSides,
    /// `−(y1 − y2)(x1·y2 − x2·y1) > 0`
    CrossingPastOrigin,
    /// `(y1 − y2)(e·y1 − e·y2 + x1·y2 − x2·y1) > 0`
    CrossingBeforeB,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Eq1 => "x1^2+y1^2=a^2",
            Condition::Eq2 => "(e-x1)^2+y1^2=b^2",
            Condition::Eq3 => "(e-x2)^2+y2^2=c^2",
            Condition::Eq4 => "x2^2+y2^2=d^2",
            Condition::Eq5 => "(x1-x2)^2+(y1-y2)^2=f^2",
            Condition::PositiveA => "a>0",
            Condition::PositiveB => "b>0",
            Condition::PositiveC => "c>0",
            Condition::PositiveD => "d>0",
            Condition::PositiveE => "e>0",
            Condition::PositiveF => "f>0",
            Condition::OppositeSides => "-y1*y2>0",
            Condition::CrossingPastOrigin => "-(y1-y2)(x1*y2-x2*y1)>0",
            Condition::CrossingBeforeB => "(y1-y2)(e*y1-e*y2+x1*y2-x2*y1)>0",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub equations_hold: bool,
    pub convex: bool,
    pub violated: Vec<Condition>,
}

impl VerifyReport {
    pub fn into_result(self) -> Result<()> {
        if self.convex {
            Ok(())
        } else {
            Err(Error::Nonconvex(self.violated))
        }
    }
}

impl PlacedSolution {
    /// The five residuals `lhs − rhs` of the distance equations.
    pub fn residuals(&self) -> [Rational; 5] {
        let ex1 = &self.e - &self.x1;
        let ex2 = &self.e - &self.x2;
        let dx = &self.x1 - &self.x2;
        let dy = &self.y1 - &self.y2;
        [
            self.x1.square() + self.y1.square() - self.a.square(),
            ex1.square() + self.y1.square() - self.b.square(),
            ex2.square() + self.y2.square() - self.c.square(),
            self.x2.square() + self.y2.square() - self.d.square(),
            dx.square() + dy.square() - self.f.square(),
        ]
    }

    pub fn equations_hold(&self) -> bool {
        self.residuals().iter().all(Rational::is_zero)
    }

    /// The three orientation expressions whose positivity makes the figure convex.
    pub fn orientation_terms(&self) -> [Rational; 3] {
        let dy = &self.y1 - &self.y2;
        let cross = &self.x1 * &self.y2 - &self.x2 * &self.y1;
        [
            -(&self.y1 * &self.y2),
            -(&dy * &cross),
            &dy * (&self.e * &dy + &cross),
        ]
    }

    pub fn lengths(&self) -> [&Rational; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn scaled(&self, k: &Rational) -> PlacedSolution {
        PlacedSolution {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
            e: &self.e * k,
            f: &self.f * k,
            x1: &self.x1 * k,
            y1: &self.y1 * k,
            x2: &self.x2 * k,
            y2: &self.y2 * k,
        }
    }

    /// Vertices `O, A, B, C` in order.
    pub fn vertices(&self) -> [(Rational, Rational); 4] {
        [
            (q(0), q(0)),
            (self.x1.clone(), self.y1.clone()),
            (self.e.clone(), q(0)),
            (self.x2.clone(), self.y2.clone()),
        ]
    }
}

/// Checks the distance equations and every convexity condition.
pub fn verify(s: &PlacedSolution) -> VerifyReport {
    const EQS: [Condition; 5] = [
        Condition::Eq1,
        Condition::Eq2,
        Condition::Eq3,
        Condition::Eq4,
        Condition::Eq5,
    ];
    const POS: [Condition; 6] = [
        Condition::PositiveA,
        Condition::PositiveB,
        Condition::PositiveC,
        Condition::PositiveD,
        Condition::PositiveE,
        Condition::PositiveF,
    ];
    const ORIENT: [Condition; 3] = [
        Condition::OppositeSides,
        Condition::CrossingPastOrigin,
        Condition::CrossingBeforeB,
    ];

    let mut violated = Vec::new();
    for (cond, r) in EQS.iter().zip(s.residuals()) {
        if !r.is_zero() {
            violated.push(*cond);
        }
    }
    let equations_hold = violated.is_empty();
    for (cond, len) in POS.iter().zip(s.lengths()) {
        if !len.is_positive() {
            violated.push(*cond);
        }
    }
    for (cond, t) in ORIENT.iter().zip(s.orientation_terms()) {
        if !t.is_positive() {
            violated.push(*cond);
        }
    }
    VerifyReport {
        equations_hold,
        convex: violated.is_empty(),
        violated,
    }
}

/// Area as the sum of triangles `OAB` and `OCB`.
pub fn area(s: &PlacedSolution) -> Result<Rational> {
    verify(s).into_result()?;
    Ok(area_unchecked(s))
}

pub(crate) fn area_unchecked(s: &PlacedSolution) -> Rational {
    &s.e * (s.y1.abs() + s.y2.abs()) * Rational::new(1, 2).expect("nonzero")
}

/// Seven independent signs acting on a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVector([i8; 7]);

impl SignVector {
    pub const IDENTITY: SignVector = SignVector([1; 7]);

    pub fn new(signs: [i8; 7]) -> Result<Self> {
        if signs.iter().all(|s| *s == 1 || *s == -1) {
            Ok(SignVector(signs))
        } else {
            Err(Error::Parse(format!(
                "sign vector entries must be ±1: {signs:?}"
            )))
        }
    }

    pub fn signs(&self) -> [i8; 7] {
        self.0
    }

    /// All 128 vectors in lexicographic order, `+1` before `−1`.
    pub fn all() -> impl Iterator<Item = SignVector> {
        (0u8..128).map(|bits| {
            let mut v = [1i8; 7];
            for (k, slot) in v.iter_mut().enumerate() {
                if bits & (1 << (6 - k)) != 0 {
                    *slot = -1;
                }
            }
            SignVector(v)
        })
    }

    fn with_last_flipped(mut self) -> Self {
        self.0[6] = -self.0[6];
        self
    }
}

fn signed(v: &Rational, s: i8) -> Rational {
    if s < 0 {
        -v
    } else {
        v.clone()
    }
}

/// Maps `(a,…,y2)` to `(ε1a, ε2b, ε3c, ε4d, ε5e, ε6f, ε5x1, ε7y1, ε5x2, ε7y2)`.
pub fn apply_signs(s: &PlacedSolution, v: SignVector) -> PlacedSolution {
    let [e1, e2, e3, e4, e5, e6, e7] = v.0;
    PlacedSolution {
        a: signed(&s.a, e1),
        b: signed(&s.b, e2),
        c: signed(&s.c, e3),
        d: signed(&s.d, e4),
        e: signed(&s.e, e5),
        f: signed(&s.f, e6),
        x1: signed(&s.x1, e5),
        y1: signed(&s.y1, e7),
        x2: signed(&s.x2, e5),
        y2: signed(&s.y2, e7),
    }
}

/// Searches the sign orbit for a convex image.
///
/// Returns the first convex image in lexicographic order, with `ε7` adjusted
/// afterwards so that `A` lies above the axis.
pub fn repair(s: &PlacedSolution) -> Option<(SignVector, PlacedSolution)> {
    let v = SignVector::all().find(|v| verify(&apply_signs(s, *v)).convex)?;
    let image = apply_signs(s, v);
    if image.y1.is_negative() {
        let v = v.with_last_flipped();
        Some((v, apply_signs(s, v)))
    } else {
        Some((v, image))
    }
}

/// Which construction produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    NoncyclicA,
    NoncyclicB,
    TwoEqualSides,
    Base,
    Lattice,
    Curve,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::NoncyclicA => "noncyclic-a",
            Family::NoncyclicB => "noncyclic-b",
            Family::TwoEqualSides => "two-equal-sides",
            Family::Base => "base",
            Family::Lattice => "lattice",
            Family::Curve => "curve",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    /// Accepts [`Family::name`] and `kite` for the two-equal-sides family.
    fn from_str(s: &str) -> Result<Self> {
        const ALL: [Family; 7] = [
            Family::Cyclic,
            Family::NoncyclicA,
            Family::NoncyclicB,
            Family::TwoEqualSides,
            Family::Base,
            Family::Lattice,
            Family::Curve,
        ];
        if s == "kite" {
            return Ok(Family::TwoEqualSides);
        }
        ALL.into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical primitive record of a rational convex quadrilateral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrilateral {
    /// `OA, AB, BC, CO` as coprime positive integers (jointly with the diagonals).
    pub sides: [BigInt; 4],
    /// `OB, AC`.
    pub diagonals: [BigInt; 2],
    pub area: Rational,
    pub placement: PlacedSolution,
    pub family: Family,
    pub params: Option<ParamSet>,
    /// Factor applied to the input solution to reach the primitive record.
    pub scale: Rational,
}

pub type FigureKey = ([BigInt; 4], [BigInt; 2]);

impl Quadrilateral {
    /// `(a, b, c, d, e, f, area)` for display and comparison against published tuples.
    pub fn tuple(&self) -> (Vec<BigInt>, Rational) {
        let mut v: Vec<BigInt> = self.sides.to_vec();
        v.extend(self.diagonals.iter().cloned());
        (v, self.area.clone())
    }

    /// Same figure (lengths, area and placement), ignoring provenance.
    pub fn same_figure(&self, other: &Quadrilateral) -> bool {
        self.sides == other.sides
            && self.diagonals == other.diagonals
            && self.area == other.area
            && self.placement == other.placement
    }

    /// Smallest labeling of the figure under the eight vertex relabelings.
    pub fn figure_key(&self) -> FigureKey {
        let [a, b, c, d] = self.sides.clone();
        let [e, f] = self.diagonals.clone();
        // Rotating the start vertex swaps the diagonals; reversing keeps them.
        let rotations = [
            (
                [a.clone(), b.clone(), c.clone(), d.clone()],
                [e.clone(), f.clone()],
            ),
            (
                [b.clone(), c.clone(), d.clone(), a.clone()],
                [f.clone(), e.clone()],
            ),
            (
                [c.clone(), d.clone(), a.clone(), b.clone()],
                [e.clone(), f.clone()],
            ),
            (
                [d.clone(), a.clone(), b.clone(), c.clone()],
                [f.clone(), e.clone()],
            ),
        ];
        rotations
            .into_iter()
            .flat_map(|(s, dg)| {
                let [s0, s1, s2, s3] = s.clone();
                [(s, dg.clone()), ([s3, s2, s1, s0], dg)]
            })
            .min()
            .expect("eight labelings")
    }

    pub fn is_equivalent(&self, other: &Quadrilateral) -> bool {
        self.figure_key() == other.figure_key()
    }
}

/// Keeps the first record of each equivalence class, preserving order.
pub fn dedup_equivalent(records: Vec<Quadrilateral>) -> Vec<Quadrilateral> {
    let mut seen = std::collections::HashSet::new();
    records
        .into_iter()
        .filter(|r| seen.insert(r.figure_key()))
        .collect()
}

/// Rescales a convex solution to its primitive integer record.
pub fn canonicalize(
    s: &PlacedSolution,
    family: Family,
    params: Option<ParamSet>,
) -> Result<Quadrilateral> {
    verify(s).into_result()?;
    let lengths: Vec<Rational> = s.lengths().into_iter().cloned().collect();
    let (scale, prim) = gcd_scale(&lengths)?;
    let mut placement = s.scaled(&scale);
    if placement.y1.is_negative() {
        placement = apply_signs(&placement, SignVector::IDENTITY.with_last_flipped());
    }
    let area = area_unchecked(&placement);
    let [a, b, c, d, e, f]: [BigInt; 6] = prim.try_into().expect("six lengths");
    Ok(Quadrilateral {
        sides: [a, b, c, d],
        diagonals: [e, f],
        area,
        placement,
        family,
        params,
        scale,
    })
}
