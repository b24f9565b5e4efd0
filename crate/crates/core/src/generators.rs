//! Closed-form parametrizations of rational quadrilaterals.
//!
//! [`base_solution`] solves the four side equations completely in terms of
//! eight parameters `(p1, p2, q1, q2, r1, r2, s1, s2)`; the remaining diagonal
//! `f` is rational exactly when a quartic form in `(s1, s2)` is a square
//! ([`quartic_condition`]). Each family below picks `(s1, s2)` (and sometimes
//! `q` or `r`) so that the quartic becomes a square identically.
//!
//! Every family generator evaluates its own closed form, then re-derives the
//! same figure through [`base_solution`] and refuses to return a record when
//! the two disagree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{q, Rational};
use crate::quad::{canonicalize, repair, verify, Family, PlacedSolution, Quadrilateral};

/// The eight generator parameters. `s` is absent until a family fixes it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub p1: Rational,
    pub p2: Rational,
    pub q1: Rational,
    pub q2: Rational,
    pub r1: Rational,
    pub r2: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s1: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s2: Option<Rational>,
}

impl ParamSet {
    pub fn new(pqr: [Rational; 6]) -> Self {
        let [p1, p2, q1, q2, r1, r2] = pqr;
        ParamSet {
            p1,
            p2,
            q1,
            q2,
            r1,
            r2,
            s1: None,
            s2: None,
        }
    }

    pub fn with_s(mut self, s1: Rational, s2: Rational) -> Self {
        self.s1 = Some(s1);
        self.s2 = Some(s2);
        self
    }

    pub fn into_pqr(self) -> [Rational; 6] {
        [self.p1, self.p2, self.q1, self.q2, self.r1, self.r2]
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        ParamSet::new(v.map(q))
    }

    /// Builds a full parameter set from eight values in `p1 … s2` order.
    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        match v {
            [p1, p2, q1, q2, r1, r2] => {
                Ok(ParamSet::new([p1, p2, q1, q2, r1, r2].map(Clone::clone)))
            }
            [p1, p2, q1, q2, r1, r2, s1, s2] => {
                Ok(ParamSet::new([p1, p2, q1, q2, r1, r2].map(Clone::clone))
                    .with_s(s1.clone(), s2.clone()))
            }
            _ => Err(Error::Parse(format!(
                "expected 6 or 8 parameters, got {}",
                v.len()
            ))),
        }
    }

    fn s(&self) -> Result<(&Rational, &Rational)> {
        match (&self.s1, &self.s2) {
            (Some(s1), Some(s2)) => Ok((s1, s2)),
            _ => Err(Error::Degenerate("s1, s2 are required".into())),
        }
    }

    /// Rejects zero entries and the four products that collapse a side or diagonal.
    pub fn validate(&self) -> Result<()> {
        let named = [
            ("p1", &self.p1),
            ("p2", &self.p2),
            ("q1", &self.q1),
            ("q2", &self.q2),
            ("r1", &self.r1),
            ("r2", &self.r2),
        ];
        for (name, v) in named {
            if v.is_zero() {
                return Err(Error::Degenerate(format!("{name} = 0")));
            }
        }
        let (p1, p2, q1, q2) = (&self.p1, &self.p2, &self.q1, &self.q2);
        if p1 * q1 == p2 * q2 {
            return Err(Error::Degenerate("p1*q1 = p2*q2".into()));
        }
        if p1 * q2 == -(p2 * q1) {
            return Err(Error::Degenerate("p1*q2 = -p2*q1".into()));
        }
        if let (Some(s1), Some(s2)) = (&self.s1, &self.s2) {
            if s1.is_zero() || s2.is_zero() {
                return Err(Error::Degenerate("s1 or s2 = 0".into()));
            }
            let (r1, r2) = (&self.r1, &self.r2);
            if r1 * s1 == r2 * s2 {
                return Err(Error::Degenerate("r1*s1 = r2*s2".into()));
            }
            if r1 * s2 == -(r2 * s1) {
                return Err(Error::Degenerate("r1*s2 = -r2*s1".into()));
            }
        }
        Ok(())
    }
}

/// Solution of the four side equations; `f` only when `f²` is a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSolution {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub x1: Rational,
    pub y1: Rational,
    pub x2: Rational,
    pub y2: Rational,
    pub f_squared: Rational,
    pub f: Option<Rational>,
    /// Signed area from the closed form, equal to `e(y1 − y2)/2`.
    pub area: Rational,
}

impl BaseSolution {
    /// False when only the sides, `OB` and the area are rational.
    pub fn is_full(&self) -> bool {
        self.f.is_some()
    }

    pub fn placed(&self) -> Option<PlacedSolution> {
        Some(PlacedSolution {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone()?,
            x1: self.x1.clone(),
            y1: self.y1.clone(),
            x2: self.x2.clone(),
            y2: self.y2.clone(),
        })
    }
}

/// Complete solution of the four side equations.
pub fn base_solution(ps: &ParamSet) -> Result<BaseSolution> {
    ps.validate()?;
    let (s1, s2) = ps.s()?;
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = ps;

    let pq_plus = p1 * q2 + p2 * q1;
    let pq_minus = p1 * q1 - p2 * q2;
    let rs_plus = r1 * s2 + r2 * s1;
    let rs_minus = r1 * s1 - r2 * s2;
    let pq = &pq_plus * &pq_minus;
    let rs = &rs_plus * &rs_minus;
    let p_sq = p1.square() + p2.square();
    let q_sq = q1.square() + q2.square();
    let r_sq = r1.square() + r2.square();
    let s_sq = s1.square() + s2.square();
    let qq = q1 * q2;
    let pp = p1 * p2;
    let rr = r1 * r2;
    let ss = s1 * s2;

    let a = &qq * &rs * &p_sq;
    let b = &pp * &rs * &q_sq;
    let c = &rr * &pq * &s_sq;
    let d = &ss * &pq * &r_sq;
    let e = &pq * &rs;
    let x1 = &qq * &rs * (p1.square() - p2.square());
    let x2 = &ss * &pq * (r1.square() - r2.square());
    let y1 = q(2) * &pp * &qq * &rs;
    let y2 = q(-2) * &rr * &ss * &pq;

    let area = &pq
        * &rs
        * (p1.square() * &qq * &rr * &ss
            + (q1.square() * &rr * &ss + &rs * &qq - q2.square() * &rr * &ss) * &pp
            - p2.square() * &qq * &rr * &ss);

    let f_squared = (&x1 - &x2).square() + (&y1 - &y2).square();
    let f = f_squared.sqrt_exact();
    let sol = BaseSolution {
        a,
        b,
        c,
        d,
        e,
        x1,
        y1,
        x2,
        y2,
        f_squared,
        f,
        area,
    };

    // The side equations hold identically; a failure here is a transcription bug.
    let res = sol.placed_unchecked().residuals();
    if !res[..4].iter().all(Rational::is_zero) {
        return Err(Error::ClosedFormMismatch("side equations".into()));
    }
    if sol.area != &sol.e * (&sol.y1 - &sol.y2) * Rational::new(1, 2)? {
        return Err(Error::ClosedFormMismatch("base area".into()));
    }
    Ok(sol)
}

impl BaseSolution {
    fn placed_unchecked(&self) -> PlacedSolution {
        PlacedSolution {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: Rational::zero(),
            x1: self.x1.clone(),
            y1: self.y1.clone(),
            x2: self.x2.clone(),
            y2: self.y2.clone(),
        }
    }
}

/// Coefficients `[c4, c3, c2, c1, c0]` of `f²` as a binary quartic form in `(s1, s2)`.
pub fn quartic_condition(ps: &ParamSet) -> Result<[Rational; 5]> {
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = ps;
    if [p1, p2, q1, q2, r1, r2].iter().any(|v| v.is_zero()) {
        return Err(Error::Degenerate("p, q, r entries must be nonzero".into()));
    }
    let sq = Rational::square;

    let lin1 =
        (q1 * r1 + q1 * r2 + q2 * r1 - q2 * r2) * p1 + (q1 * r1 - q1 * r2 - q2 * r1 - q2 * r2) * p2;
    let lin2 =
        (q1 * r1 - q1 * r2 - q2 * r1 - q2 * r2) * p1 - (q1 * r1 + q1 * r2 + q2 * r1 - q2 * r2) * p2;
    let qqrr = q1 * q2 * r1 * r2;
    let pp = p1 * p2;

    let c4 = sq(&qqrr) * sq(&(sq(p1) + sq(p2)));
    let c3 = q(-2) * &pp * &qqrr * &lin1 * &lin2;
    let cross = q(8) * &qqrr * (q1 * r2 + q2 * r1) * (q1 * r1 - q2 * r2);
    let mid = q1.pow(4) * r1.pow(4)
        + q(2) * q1.pow(4) * sq(r1) * sq(r2)
        + q1.pow(4) * r2.pow(4)
        + q(8) * q1.pow(3) * q2 * r1.pow(3) * r2
        - q(8) * q1.pow(3) * q2 * r1 * r2.pow(3)
        + q(2) * sq(q1) * sq(q2) * r1.pow(4)
        - q(24) * sq(q1) * sq(q2) * sq(r1) * sq(r2)
        + q(2) * sq(q1) * sq(q2) * r2.pow(4)
        - q(8) * q1 * q2.pow(3) * r1.pow(3) * r2
        + q(8) * q1 * q2.pow(3) * r1 * r2.pow(3)
        + q2.pow(4) * r1.pow(4)
        + q(2) * q2.pow(4) * sq(r1) * sq(r2)
        + q2.pow(4) * r2.pow(4);
    let c2 = q(2) * p1.pow(4) * sq(&qqrr) + &cross * p1.pow(3) * p2 + mid * sq(p1) * sq(p2)
        - &cross * p1 * p2.pow(3)
        + q(2) * p2.pow(4) * sq(&qqrr);
    let c1 = -c3.clone();
    let c0 = c4.clone();
    Ok([c4, c3, c2, c1, c0])
}

/// Evaluates a binary quartic form `[c4, …, c0]` at `(s1, s2)`.
pub fn eval_quartic_form(coeffs: &[Rational; 5], s1: &Rational, s2: &Rational) -> Rational {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * s1.pow(4 - k as u32) * s2.pow(k as u32))
        .sum()
}

/// `(s1, s2)` that makes the quartic a square and the figure cyclic.
pub fn cyclic_s(ps: &ParamSet) -> (Rational, Rational) {
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = ps;
    let s1 = p1 * (q1 * r2 + q2 * r1) + p2 * (q1 * r1 - q2 * r2);
    let s2 = p1 * (q1 * r1 - q2 * r2) - p2 * (q1 * r2 + q2 * r1);
    (s1, s2)
}

fn noncyclic_a_s(ps: &ParamSet) -> (Rational, Rational) {
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = ps;
    let s1 = r1 * r2 * (q(2) * p1 * q1 * q2 + (q1.square() - q2.square()) * p2);
    let s2 = q1 * q2 * ((r1.square() - r2.square()) * p1 - q(2) * p2 * r1 * r2);
    (s1, s2)
}

/// Base-path parameters for the second noncyclic family, before its sign
/// replacement `p2 → −p2`, `q2 → −q2`.
fn noncyclic_b_params(p1: &Rational, p2: &Rational, q1: &Rational, q2: &Rational) -> ParamSet {
    let s1 = (p1 + p2) * q1 + (p1 - p2) * q2;
    let s2 = (p2 - p1) * q1 + (p1 + p2) * q2;
    ParamSet::new([p1.clone(), -p2, q1.clone(), -q2, p2.clone(), p1.clone()]).with_s(s1, s2)
}

fn two_equal_sides_params(p1: &Rational, p2: &Rational, r1: &Rational, r2: &Rational) -> ParamSet {
    let s1 = (p1 - p2) * r1 - (p1 + p2) * r2;
    let s2 = -(p1 + p2) * r1 - (p1 - p2) * r2;
    ParamSet::new([
        p1.clone(),
        p2.clone(),
        -p2,
        p1.clone(),
        r1.clone(),
        r2.clone(),
    ])
    .with_s(s1, s2)
}

/// Lengths, signed area and (optionally) coordinates from a literal closed form.
struct ClosedForm {
    lengths: [Rational; 6],
    area: Rational,
    coords: Option<[Rational; 4]>,
}

/// Places `A` above the axis and `C` on whichever side makes `AC = f`.
fn place_from_lengths(lengths: &[Rational; 6]) -> Result<PlacedSolution> {
    let [a, b, c, d, e, f] = lengths.clone().map(|v| v.abs());
    let two_e = q(2) * &e;
    let x1 = (a.square() + e.square() - b.square()).checked_div(&two_e)?;
    let x2 = (d.square() + e.square() - c.square()).checked_div(&two_e)?;
    let y1 = (a.square() - x1.square())
        .sqrt_exact()
        .ok_or_else(|| Error::ClosedFormMismatch("triangle OAB has irrational height".into()))?;
    let h2 = (d.square() - x2.square())
        .sqrt_exact()
        .ok_or_else(|| Error::ClosedFormMismatch("triangle OCB has irrational height".into()))?;
    let below = PlacedSolution {
        a,
        b,
        c,
        d,
        e,
        f,
        x1,
        y1,
        x2,
        y2: -&h2,
    };
    if below.equations_hold() {
        return Ok(below);
    }
    // Same side as A: never convex, but still a solution of the equations.
    Ok(PlacedSolution { y2: h2, ..below })
}

fn check_guard(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Guard(what.into()))
    }
}

fn all_positive(vals: &[&Rational]) -> bool {
    vals.iter().all(|v| v.is_positive())
}

/// Runs one family: closed form → placement → repair → canonical record,
/// cross-checked against the base path.
fn finish(closed: ClosedForm, base: ParamSet, family: Family) -> Result<Quadrilateral> {
    let placement = match closed.coords {
        Some([x1, y1, x2, y2]) => {
            let [a, b, c, d, e, f] = closed.lengths.clone();
            PlacedSolution {
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
            }
        }
        None => place_from_lengths(&closed.lengths)?,
    };
    let report = verify(&placement);
    if !report.equations_hold {
        return Err(Error::ClosedFormMismatch(format!(
            "{family} closed form violates {:?}",
            report.violated
        )));
    }
    let (_, placement) = repair(&placement).ok_or(Error::Nonconvex(report.violated))?;
    let record = canonicalize(&placement, family, Some(base.clone()))?;
    if record.area != closed.area.abs() * record.scale.square() {
        return Err(Error::ClosedFormMismatch(format!("{family} area")));
    }

    let via_base = record_from_base(&base, family)?;
    if !via_base.same_figure(&record) {
        return Err(Error::ClosedFormMismatch(format!(
            "{family} closed form and base path disagree"
        )));
    }
    Ok(record)
}

/// Canonical record from a full parameter set: base solution, sign repair,
/// then canonicalization.
pub fn record_from_base(ps: &ParamSet, family: Family) -> Result<Quadrilateral> {
    let base = base_solution(ps)?;
    let placed = base.placed().ok_or_else(|| {
        Error::Degenerate("f² is not a rational square (only one diagonal is rational)".into())
    })?;
    let report = verify(&placed);
    let (_, fixed) = repair(&placed).ok_or(Error::Nonconvex(report.violated))?;
    canonicalize(&fixed, family, Some(ps.clone()))
}

/// Rational quadrilateral straight from eight parameters.
pub fn gen_base(ps: &ParamSet) -> Result<Quadrilateral> {
    record_from_base(ps, Family::Base)
}

/// The complete cyclic family.
pub fn gen_cyclic(pqr: [Rational; 6]) -> Result<Quadrilateral> {
    let ps = ParamSet::new(pqr);
    ps.validate()?;
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = &ps;
    check_guard(
        all_positive(&[p1, p2, q1, q2, r1, r2]),
        "all parameters must be positive",
    )?;
    let qr_minus = q1 * r1 - q2 * r2;
    let qr_plus = q1 * r2 + q2 * r1;
    check_guard(qr_minus.is_positive(), "q1 > q2*r2/r1")?;
    check_guard(
        p1 * &qr_minus > p2 * &qr_plus,
        "p1 > p2(q1r2+q2r1)/(q1r1-q2r2)",
    )?;

    let (s1, s2) = cyclic_s(&ps);
    let base = ps.clone().with_s(s1, s2);
    base.validate()?;

    let sq = Rational::square;
    let p_sq = sq(p1) + sq(p2);
    let q_sq = sq(q1) + sq(q2);
    let r_sq = sq(r1) + sq(r2);
    let d1 = p1 * q1 * r2 + p1 * q2 * r1 + p2 * q1 * r1 - p2 * q2 * r2;
    let d2 = p1 * q1 * r1 - p1 * q2 * r2 - p2 * q1 * r2 - p2 * q2 * r1;
    let pq_plus = p1 * q2 + p2 * q1;
    let pq_minus = p1 * q1 - p2 * q2;
    let pr_plus = p1 * r2 + p2 * r1;
    let pr_minus = p1 * r1 - p2 * r2;

    let lengths = [
        &p_sq * &r_sq * q1 * q2,
        &q_sq * &r_sq * p1 * p2,
        &q_sq * &p_sq * r1 * r2,
        &d1 * &d2,
        &r_sq * &pq_plus * &pq_minus,
        &q_sq * &pr_plus * &pr_minus,
    ];
    let area = &pq_minus * &pq_plus * &pr_minus * &pr_plus * &qr_minus * &qr_plus;
    let coords = [
        (p1 + p2) * (p1 - p2) * &r_sq * q1 * q2,
        q(2) * &r_sq * p1 * p2 * q1 * q2,
        ((r1 - r2) * (r1 + r2) * &d1 * &d2).checked_div(&r_sq)?,
        (q(-2) * r1 * r2 * &d1 * &d2).checked_div(&r_sq)?,
    ];
    finish(
        ClosedForm {
            lengths,
            area,
            coords: Some(coords),
        },
        base,
        Family::Cyclic,
    )
}

/// First noncyclic family. No closed-form convexity guard is known, so the
/// result is accepted only if the sign orbit contains a convex image.
pub fn gen_noncyclic_a(pqr: [Rational; 6]) -> Result<Quadrilateral> {
    let ps = ParamSet::new(pqr);
    ps.validate()?;
    let (s1, s2) = noncyclic_a_s(&ps);
    let base = ps.clone().with_s(s1, s2);
    base.validate()?;
    let ParamSet {
        p1,
        p2,
        q1,
        q2,
        r1,
        r2,
        ..
    } = &ps;

    let sq = Rational::square;
    let p_sq = sq(p1) + sq(p2);
    let q_sq = sq(q1) + sq(q2);
    let r_sq = sq(r1) + sq(r2);
    let qq = q1 * q2;
    let rr = r1 * r2;
    let pq = (p1 * q2 + p2 * q1) * (p1 * q1 - p2 * q2);
    let u = &r_sq * p1 * &qq + (sq(q1) * r2 - q(2) * &qq * r1 - sq(q2) * r2) * p2 * r2;
    let v = &r_sq * p1 * &qq + (sq(q1) * r1 + q(2) * &qq * r2 - sq(q2) * r1) * p2 * r1;
    let uv = &u * &v;

    let a = &qq * &p_sq * &uv;
    let b = p1 * p2 * &q_sq * &uv;
    let c = &pq
        * (sq(&r_sq) * sq(p1) * sq(&qq)
            + q(4) * (q1 * r1 + q2 * r2) * &qq * &rr * (q1 * r2 - q2 * r1) * p1 * p2
            + sq(&q_sq) * sq(p2) * sq(&rr));
    let d = &qq
        * &pq
        * &r_sq
        * (q(2) * p1 * &qq + (sq(q1) - sq(q2)) * p2)
        * ((sq(r1) - sq(r2)) * p1 - q(2) * p2 * &rr);
    let e = &pq * &uv;
    let f_inner = sq(&r_sq) * p1.pow(4) * sq(&qq)
        + q(2)
            * (sq(q1) * r1.pow(4) + sq(q1) * r2.pow(4) + q(2) * &qq * r1.pow(3) * r2
                - q(2) * &qq * r1 * r2.pow(3)
                - sq(q2) * r1.pow(4)
                - sq(q2) * r2.pow(4))
            * p1.pow(3)
            * p2
            * &qq
        + (q1.pow(4) * r1.pow(4) - q1.pow(4) * sq(r1) * sq(r2) + q1.pow(4) * r2.pow(4)
            - sq(q1) * sq(q2) * r1.pow(4)
            - q(8) * sq(q1) * sq(q2) * sq(r1) * sq(r2)
            - sq(q1) * sq(q2) * r2.pow(4)
            + q2.pow(4) * r1.pow(4)
            - q2.pow(4) * sq(r1) * sq(r2)
            + q2.pow(4) * r2.pow(4))
            * sq(p1)
            * sq(p2)
        - q(2)
            * (q1.pow(4) * sq(r1) - q1.pow(4) * sq(r2) + q(2) * q1.pow(3) * q2 * &rr
                - q(2) * q1 * q2.pow(3) * &rr
                + q2.pow(4) * sq(r1)
                - q2.pow(4) * sq(r2))
            * p1
            * p2.pow(3)
            * &rr
        + sq(&q_sq) * p2.pow(4) * sq(&rr);
    let f = &qq * f_inner;
    let area = &qq
        * &pq
        * &uv
        * (q(2) * sq(p1) * &qq * &rr + (q1 * r2 + q2 * r1) * (q1 * r1 - q2 * r2) * p1 * p2
            - q(2) * sq(p2) * &qq * &rr)
        * ((sq(r1) - sq(r2)) * sq(p1) * &qq + (sq(r1) - sq(r2)) * (sq(q1) - sq(q2)) * p1 * p2
            - (sq(q1) - sq(q2)) * sq(p2) * &rr);

    let closed = ClosedForm {
        lengths: [a, b, c, d, e, f],
        area,
        coords: None,
    };
    finish(closed, base, Family::NoncyclicA)
}

/// Second noncyclic family, in the sign convention where positive parameters
/// with `q2 > q1` and `p2 > p1(q1+q2)/(q2−q1)` give convex figures.
pub fn gen_noncyclic_b(pq: [Rational; 4]) -> Result<Quadrilateral> {
    let [p1, p2, q1, q2] = &pq;
    if pq.iter().any(Rational::is_zero) {
        return Err(Error::Degenerate("parameters must be nonzero".into()));
    }
    let base = noncyclic_b_params(p1, p2, q1, q2);
    base.validate()?;
    check_guard(
        all_positive(&[p1, p2, q1, q2]),
        "all parameters must be positive",
    )?;
    check_guard(q2 > q1, "q2 > q1")?;
    check_guard(p2 * (q2 - q1) > p1 * (q1 + q2), "p2 > p1(q1+q2)/(q2-q1)")?;

    let sq = Rational::square;
    let p_sq = sq(p1) + sq(p2);
    let q_sq = sq(q1) + sq(q2);
    let pp = p1 * p2;
    let qq = q1 * q2;
    let q_diff = sq(q2) - sq(q1);
    let p_diff = sq(p2) - sq(p1);
    let m1 = p1 * q2 + p2 * q1;
    let m2 = p2 * q2 - p1 * q1;
    let n1 = p1 * q1 - p1 * q2 - p2 * q1 - p2 * q2;
    let n2 = p1 * q1 + p1 * q2 + p2 * q1 - p2 * q2;

    let lengths = [
        sq(&p_sq) * &q_diff * &qq,
        &pp * &p_sq * (q2.pow(4) - q1.pow(4)),
        q(2) * &pp * &m1 * &m2 * &q_sq,
        &m1 * &m2 * &n1 * &n2,
        &p_sq * &m2 * &m1 * &q_diff,
        &pp * &p_diff * sq(&q_sq),
    ];
    let area = &pp
        * &p_diff
        * &q_diff
        * &m1
        * &m2
        * (p1 * sq(q1) - p1 * sq(q2) - q(2) * p2 * &qq)
        * (q(2) * p1 * &qq + p2 * sq(q1) - p2 * sq(q2));
    let coords = [
        (p2.pow(4) - p1.pow(4)) * &q_diff * &qq,
        q(2) * &p_sq * &q_diff * &pp * &qq,
        (&n1 * &n2 * &p_diff * &m1 * &m2).checked_div(&p_sq)?,
        (q(-2) * &pp * &n1 * &n2 * &m1 * &m2).checked_div(&p_sq)?,
    ];
    finish(
        ClosedForm {
            lengths,
            area,
            coords: Some(coords),
        },
        base,
        Family::NoncyclicB,
    )
}

/// Family with `a = b = f`.
pub fn gen_two_equal_sides(pr: [Rational; 4]) -> Result<Quadrilateral> {
    let [p1, p2, r1, r2] = &pr;
    if pr.iter().any(Rational::is_zero) {
        return Err(Error::Degenerate("parameters must be nonzero".into()));
    }
    let base = two_equal_sides_params(p1, p2, r1, r2);
    base.validate()?;
    check_guard(
        all_positive(&[p1, p2, r1, r2]),
        "all parameters must be positive",
    )?;
    check_guard(r2 > r1, "r2 > r1")?;
    check_guard(p2 * (r2 - r1) > p1 * (r1 + r2), "p2 > p1(r1+r2)/(r2-r1)")?;

    let sq = Rational::square;
    let p_sq = sq(p1) + sq(p2);
    let r_sq = sq(r1) + sq(r2);
    let ab = &p_sq * &r_sq;
    let lengths = [
        ab.clone(),
        ab.clone(),
        q(4) * &p_sq * r1 * r2,
        q(2) * (p1 * r1 + p1 * r2 + p2 * r1 - p2 * r2) * (p1 * r1 - p1 * r2 - p2 * r1 - p2 * r2),
        q(2) * &r_sq * (sq(p2) - sq(p1)),
        ab,
    ];
    let area = q(2)
        * (sq(p2) - sq(p1))
        * (q(2) * p1 * r1 * r2 + p2 * sq(r1) - p2 * sq(r2))
        * (p1 * sq(r1) - p1 * sq(r2) - q(2) * p2 * r1 * r2);
    finish(
        ClosedForm {
            lengths,
            area,
            coords: None,
        },
        base,
        Family::TwoEqualSides,
    )
}

/// Circumradius of the unscaled cyclic closed form.
pub fn cyclic_circumradius(pqr: &[Rational; 6]) -> Rational {
    let [p1, p2, q1, q2, r1, r2] = pqr;
    let sq = Rational::square;
    (sq(p1) + sq(p2))
        * (sq(q1) + sq(q2))
        * (sq(r1) + sq(r2))
        * Rational::new(1, 4).expect("nonzero")
}

/// The `(s1, s2)` each specialized family feeds into [`base_solution`],
/// together with the full parameter set.
pub fn family_base_params(family: Family, inputs: &[Rational]) -> Result<ParamSet> {
    let arity_err = |n: usize| {
        Error::Parse(format!(
            "{family} takes {n} parameters, got {}",
            inputs.len()
        ))
    };
    match family {
        Family::Cyclic | Family::NoncyclicA => {
            let pqr: [Rational; 6] = inputs.to_vec().try_into().map_err(|_| arity_err(6))?;
            let ps = ParamSet::new(pqr);
            let (s1, s2) = if family == Family::Cyclic {
                cyclic_s(&ps)
            } else {
                noncyclic_a_s(&ps)
            };
            Ok(ps.with_s(s1, s2))
        }
        Family::NoncyclicB => {
            let [p1, p2, q1, q2]: [Rational; 4] =
                inputs.to_vec().try_into().map_err(|_| arity_err(4))?;
            Ok(noncyclic_b_params(&p1, &p2, &q1, &q2))
        }
        Family::TwoEqualSides => {
            let [p1, p2, r1, r2]: [Rational; 4] =
                inputs.to_vec().try_into().map_err(|_| arity_err(4))?;
            Ok(two_equal_sides_params(&p1, &p2, &r1, &r2))
        }
        Family::Base => {
            if inputs.len() != 8 {
                return Err(arity_err(8));
            }
            ParamSet::from_slice(inputs)
        }
        Family::Lattice | Family::Curve => Err(Error::Parse(format!("{family} has no parameters"))),
    }
}

/// Dispatches to the generator for `family`.
pub fn generate(family: Family, inputs: &[Rational]) -> Result<Quadrilateral> {
    let arity = |n: usize| {
        Error::Parse(format!(
            "{family} takes {n} parameters, got {}",
            inputs.len()
        ))
    };
    match family {
        Family::Cyclic => gen_cyclic(inputs.to_vec().try_into().map_err(|_| arity(6))?),
        Family::NoncyclicA => gen_noncyclic_a(inputs.to_vec().try_into().map_err(|_| arity(6))?),
        Family::NoncyclicB => gen_noncyclic_b(inputs.to_vec().try_into().map_err(|_| arity(4))?),
        Family::TwoEqualSides => {
            gen_two_equal_sides(inputs.to_vec().try_into().map_err(|_| arity(4))?)
        }
        Family::Base => gen_base(&family_base_params(family, inputs)?),
        Family::Lattice | Family::Curve => {
            Err(Error::Parse(format!("{family} is not a parametric family")))
        }
    }
}

/// Number of parameters each parametric family takes.
pub fn arity(family: Family) -> Option<usize> {
    match family {
        Family::Cyclic | Family::NoncyclicA => Some(6),
        Family::NoncyclicB | Family::TwoEqualSides => Some(4),
        Family::Base => Some(8),
        Family::Lattice | Family::Curve => None,
    }
}

/// Outcome of [`sweep`].
#[derive(Clone, Debug)]
pub struct Sweep {
    /// Distinct records in grid order.
    pub records: Vec<Quadrilateral>,
    /// Grid points that produced a record (before deduplication).
    pub admissible: usize,
    /// Grid points refused by a guard or degeneracy check.
    pub rejected: usize,
}

/// Runs `family` over every integer tuple with entries in `min..=max`.
///
/// Grid points are visited in lexicographic order, so the output does not
/// depend on thread scheduling. A closed-form disagreement aborts the sweep.
pub fn sweep(family: Family, min: i64, max: i64) -> Result<Sweep> {
    let n = arity(family)
        .ok_or_else(|| Error::Parse(format!("{family} is not a parametric family")))?;
    if min > max {
        return Err(Error::Parse(format!("empty range {min}..{max}")));
    }
    let width = (max - min + 1) as u64;
    let total = width
        .checked_pow(n as u32)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| Error::Parse("sweep grid is too large".into()))?;
    let point = |mut idx: u64| {
        let mut v = vec![q(0); n];
        for slot in v.iter_mut().rev() {
            *slot = q(min + (idx % width) as i64);
            idx /= width;
        }
        v
    };
    let run = |idx: u64| generate(family, &point(idx));
    #[cfg(feature = "parallel")]
    let results: Vec<Result<Quadrilateral>> = {
        use rayon::prelude::*;
        (0..total).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Quadrilateral>> = (0..total).map(run).collect();

    let mut found = Vec::new();
    let mut rejected = 0;
    for r in results {
        match r {
            Ok(rec) => found.push(rec),
            Err(e @ Error::ClosedFormMismatch(_)) => return Err(e),
            Err(_) => rejected += 1,
        }
    }
    let admissible = found.len();
    Ok(Sweep {
        records: crate::quad::dedup_equivalent(found),
        admissible,
        rejected,
    })
}
