//! The quartic `Y² = c4·X⁴ + c3·X³ + c2·X² + c1·X + c0` obtained from the
//! quartic condition by `s1 = s2·X`, `f = s2²·Y`, its Weierstrass model, and
//! mining of new rational quadrilaterals from multiples of the point given by
//! the cyclic family.
//!
//! All arithmetic runs over ℚ at a concrete parameter instance.
//!
//! The cubic model comes from the standard square-constant-term construction
//! applied to `u = 1/X`, `v = Y/X²`, where the constant term is `c4`:
//!
//! ```text
//! v² = c0·u⁴ + c1·u³ + c2·u² + c3·u + k²,   k = √c4
//! x  = (2k(v + k) + c3·u) / u²
//! y  = (4k²(v + k) + 2k(c3·u + c2·u²) − c3²·u²/(2k)) / u³
//! y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6
//! a1 = c3/k, a2 = c2 − c3²/(4k²), a3 = 2k·c1, a4 = −4k²·c0, a6 = a2·a4
//! ```
//!
//! The quartic point at infinity with `Y/X² → +k` maps to the cubic identity,
//! which is why [`CurvePoint::Infinity`] corresponds on both models. Affine
//! points with `X = 0` and the other point at infinity are the excluded locus.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exact::{q, Rational};
use crate::generators::{base_solution, cyclic_s, quartic_condition, ParamSet};
use crate::quad::{canonicalize, repair, verify, Family, Quadrilateral};

/// Default cap on coordinate height for mined multiples.
pub const DEFAULT_HEIGHT_CAP_BITS: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    /// Bit length of the largest numerator or denominator among the coordinates.
    pub fn height_bits(&self) -> u64 {
        match self {
            CurvePoint::Infinity => 0,
            CurvePoint::Affine { x, y } => x.height_bits().max(y.height_bits()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCurve {
    /// `[c4, c3, c2, c1, c0]`.
    pub coeffs: [Rational; 5],
    pub params: ParamSet,
    lead_root: Rational,
}

impl QuarticCurve {
    pub fn from_params(ps: &ParamSet) -> Result<Self> {
        let coeffs = quartic_condition(ps)?;
        if coeffs[0].is_zero() {
            return Err(Error::Curve("leading coefficient vanishes".into()));
        }
        let lead_root = coeffs[0]
            .sqrt_exact()
            .ok_or_else(|| Error::Curve("leading coefficient is not a square".into()))?;
        let curve = QuarticCurve {
            coeffs,
            params: ParamSet {
                s1: None,
                s2: None,
                ..ps.clone()
            },
            lead_root,
        };
        if curve.cubic().discriminant().is_zero() {
            return Err(Error::Curve("singular curve".into()));
        }
        Ok(curve)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner.
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y.square() == self.eval(x),
        }
    }

    /// Weierstrass model.
    pub fn cubic(&self) -> WeierstrassCurve {
        let [_, c3, c2, c1, c0] = &self.coeffs;
        let k = &self.lead_root;
        let k2 = k.square();
        let a1 = c3.checked_div(k).expect("k is nonzero");
        let a2 = c2
            - c3.square()
                .checked_div(&(q(4) * &k2))
                .expect("k is nonzero");
        let a3 = q(2) * k * c1;
        let a4 = q(-4) * &k2 * c0;
        let a6 = &a2 * &a4;
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// Image of a quartic point on the Weierstrass model.
    pub fn to_cubic_point(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        let CurvePoint::Affine { x: big_x, y: big_y } = pt else {
            return Ok(CurvePoint::Infinity);
        };
        if !self.contains(pt) {
            return Err(Error::NotOnCurve);
        }
        if big_x.is_zero() {
            return Err(Error::ExcludedLocus);
        }
        let [_, c3, c2, _, _] = &self.coeffs;
        let k = &self.lead_root;
        let u = big_x.recip()?;
        let v = big_y * u.square();
        let v_plus = &v + k;
        let x = (q(2) * k * &v_plus + c3 * &u).checked_div(&u.square())?;
        let y = (q(4) * k.square() * &v_plus + q(2) * k * (c3 * &u + c2 * u.square())
            - (c3.square() * u.square()).checked_div(&(q(2) * k))?)
        .checked_div(&u.pow(3))?;
        Ok(CurvePoint::affine(x, y))
    }

    /// Inverse of [`QuarticCurve::to_cubic_point`].
    pub fn from_cubic_point(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        let CurvePoint::Affine { x, y } = pt else {
            return Ok(CurvePoint::Infinity);
        };
        if !self.cubic().contains(pt) {
            return Err(Error::NotOnCurve);
        }
        if y.is_zero() {
            return Err(Error::ExcludedLocus);
        }
        let [_, c3, c2, _, _] = &self.coeffs;
        let k = &self.lead_root;
        let two_k = q(2) * k;
        let u = (&two_k * (x + c2) - c3.square().checked_div(&two_k)?).checked_div(y)?;
        if u.is_zero() {
            return Err(Error::ExcludedLocus);
        }
        let v = -k + (&u * (&u * x - c3)).checked_div(&two_k)?;
        let big_x = u.recip()?;
        let big_y = v * big_x.square();
        Ok(CurvePoint::affine(big_x, big_y))
    }
}

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

impl WeierstrassCurve {
    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = y.square() + &self.a1 * x * y + &self.a3 * y;
                let rhs = x.pow(3) + &self.a2 * x.square() + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    pub fn discriminant(&self) -> Rational {
        let WeierstrassCurve { a1, a2, a3, a4, a6 } = self;
        let b2 = a1.square() + q(4) * a2;
        let b4 = q(2) * a4 + a1 * a3;
        let b6 = a3.square() + q(4) * a6;
        let b8 = a1.square() * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3.square() - a4.square();
        -(b2.square() * &b8) - q(8) * b4.pow(3) - q(27) * b6.square() + q(9) * &b2 * &b4 * &b6
    }

    pub fn neg(&self, pt: &CurvePoint) -> CurvePoint {
        match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone(), -y - &self.a1 * x - &self.a3)
            }
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &CurvePoint, r: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, r) {
            (CurvePoint::Infinity, _) => return r.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 != x2 {
            (y2 - y1).checked_div(&(x2 - x1)).expect("distinct x")
        } else {
            let denom = q(2) * y1 + &self.a1 * x1 + &self.a3;
            if (y1 + y2 + &self.a1 * x2 + &self.a3).is_zero() || denom.is_zero() {
                return CurvePoint::Infinity;
            }
            (q(3) * x1.square() + q(2) * &self.a2 * x1 + &self.a4 - &self.a1 * y1)
                .checked_div(&denom)
                .expect("nonzero tangent denominator")
        };
        let intercept = y1 - &slope * x1;
        let x3 = slope.square() + &self.a1 * &slope - &self.a2 - x1 - x2;
        let y3 = -(&slope + &self.a1) * &x3 - intercept - &self.a3;
        CurvePoint::affine(x3, y3)
    }

    /// `n·P` by double-and-add.
    pub fn mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// Cubic model and image point for a quartic point.
pub fn to_cubic(curve: &QuarticCurve, pt: &CurvePoint) -> Result<(WeierstrassCurve, CurvePoint)> {
    Ok((curve.cubic(), curve.to_cubic_point(pt)?))
}

/// Point on the quartic coming from the cyclic family's `(s1, s2)`.
pub fn base_point(ps: &ParamSet) -> Result<CurvePoint> {
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = ps;
    let (s1, s2) = cyclic_s(ps);
    if s2.is_zero() {
        return Err(Error::Degenerate(
            "(q1r1-q2r2)p1 - (q1r2+q2r1)p2 = 0".into(),
        ));
    }
    let x = s1.checked_div(&s2)?;
    let y = ((p1 * q2 + p2 * q1)
        * (p1 * q1 - p2 * q2)
        * (p1 * r2 + p2 * r1)
        * (p1 * r1 - p2 * r2)
        * (q1.square() + q2.square())
        * (r1.square() + r2.square()))
    .checked_div(&s2.square())?;
    let pt = CurvePoint::affine(x, y);
    let curve = QuarticCurve::from_params(ps)?;
    if !curve.contains(&pt) {
        return Err(Error::NotOnCurve);
    }
    Ok(pt)
}

#[derive(Clone, Debug)]
pub struct MineConfig {
    pub multiples: u32,
    pub height_cap_bits: u64,
}

impl Default for MineConfig {
    fn default() -> Self {
        MineConfig {
            multiples: 5,
            height_cap_bits: DEFAULT_HEIGHT_CAP_BITS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MineOutcome {
    /// Index into [`MineReport::records`].
    Mined(usize),
    /// Same figure as an earlier multiple.
    Duplicate,
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct MineEntry {
    pub n: u32,
    /// `n·P1` on the cubic model.
    pub cubic_point: CurvePoint,
    /// Its preimage on the quartic, when defined.
    pub quartic_point: Option<CurvePoint>,
    /// Whether quartic → cubic reproduced `cubic_point`.
    pub round_trip: bool,
    pub outcome: MineOutcome,
}

#[derive(Clone, Debug)]
pub struct MineReport {
    pub curve: QuarticCurve,
    pub cubic: WeierstrassCurve,
    pub base_point: CurvePoint,
    pub records: Vec<Quadrilateral>,
    pub entries: Vec<MineEntry>,
}

impl MineReport {
    /// True when the multiples `1..=n` seen so far are pairwise distinct and
    /// none is the identity.
    pub fn multiples_distinct(&self) -> bool {
        let mut seen = HashSet::new();
        self.entries
            .iter()
            .all(|e| !e.cubic_point.is_infinity() && seen.insert(e.cubic_point.clone()))
    }

    pub fn round_trips_hold(&self) -> bool {
        self.entries.iter().all(|e| e.round_trip)
    }
}

/// Rational quadrilateral for a quartic point `(X, Y)`, using `(s1, s2) = (X, 1)`.
fn quadrilateral_at(ps: &ParamSet, pt: &CurvePoint) -> Result<Quadrilateral> {
    let CurvePoint::Affine { x, y } = pt else {
        return Err(Error::ExcludedLocus);
    };
    let full = ParamSet {
        s1: Some(x.clone()),
        s2: Some(q(1)),
        ..ps.clone()
    };
    let sol = base_solution(&full)?;
    if sol.f_squared != y.square() {
        return Err(Error::NotOnCurve);
    }
    // f = ±Y: the sign orbit covers both roots.
    let placed = sol.placed().ok_or(Error::NotOnCurve)?;
    let (_, fixed) = repair(&placed).ok_or_else(|| Error::Nonconvex(verify(&placed).violated))?;
    canonicalize(&fixed, Family::Curve, Some(full))
}

/// Walks `n·P1` for `n = 1..=multiples` and collects the convex quadrilaterals.
pub fn mine(ps: &ParamSet, cfg: &MineConfig) -> Result<MineReport> {
    let ps = ParamSet {
        s1: None,
        s2: None,
        ..ps.clone()
    };
    ps.validate()?;
    let curve = QuarticCurve::from_params(&ps)?;
    let cubic = curve.cubic();
    let p = base_point(&ps)?;
    let p1 = curve.to_cubic_point(&p)?;

    let mut records = Vec::new();
    let mut entries = Vec::new();
    let mut current = CurvePoint::Infinity;
    for n in 1..=cfg.multiples {
        current = cubic.add(&current, &p1);
        let mut entry = MineEntry {
            n,
            cubic_point: current.clone(),
            quartic_point: None,
            round_trip: true,
            outcome: MineOutcome::Skipped(String::new()),
        };
        if current.is_infinity() {
            entry.outcome = MineOutcome::Skipped("multiple is the identity".into());
            entries.push(entry);
            continue;
        }
        if current.height_bits() > cfg.height_cap_bits {
            entry.outcome = MineOutcome::Skipped(format!(
                "height {} bits exceeds cap {}",
                current.height_bits(),
                cfg.height_cap_bits
            ));
            entries.push(entry);
            continue;
        }
        let quartic_pt = match curve.from_cubic_point(&current) {
            Ok(pt) => pt,
            Err(e) => {
                entry.outcome = MineOutcome::Skipped(e.to_string());
                entries.push(entry);
                continue;
            }
        };
        entry.round_trip = curve.to_cubic_point(&quartic_pt).ok().as_ref() == Some(&current);
        entry.outcome = match quadrilateral_at(&ps, &quartic_pt) {
            Ok(rec) => {
                if records
                    .iter()
                    .any(|r: &Quadrilateral| r.is_equivalent(&rec))
                {
                    MineOutcome::Duplicate
                } else {
                    records.push(rec);
                    MineOutcome::Mined(records.len() - 1)
                }
            }
            Err(e) => MineOutcome::Skipped(e.to_string()),
        };
        entry.quartic_point = Some(quartic_pt);
        entries.push(entry);
    }
    Ok(MineReport {
        curve,
        cubic,
        base_point: p,
        records,
        entries,
    })
}
