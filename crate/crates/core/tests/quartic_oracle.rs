mod common;

use rand::Rng;
use ratquad::generators::{base_solution, eval_quartic_form, quartic_condition};
use ratquad::{ParamSet, Rational};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// AC² straight from the coordinate formulas, with no validation of the parameters.
fn diagonal_sq(pqr: &[Rational; 6], s1: &Rational, s2: &Rational) -> Rational {
    let [p1, p2, q1, q2, r1, r2] = pqr;
    let big_p = p1 * q2 + p2 * q1;
    let big_q = p1 * q1 - p2 * q2;
    let big_r = r1 * s2 + r2 * s1;
    let big_s = r1 * s1 - r2 * s2;
    let pq = &big_p * &big_q;
    let rs = &big_r * &big_s;
    let x1 = q1 * q2 * &rs * (p1.square() - p2.square());
    let y1 = r(2) * p1 * p2 * q1 * q2 * &rs;
    let x2 = s1 * s2 * &pq * (r1.square() - r2.square());
    let y2 = r(-2) * r1 * r2 * s1 * s2 * &pq;
    (x1 - x2).square() + (y1 - y2).square()
}

/// Coefficients of the degree-4 polynomial through five points, highest first.
fn interpolate(xs: &[Rational; 5], ys: &[Rational; 5]) -> [Rational; 5] {
    // Gaussian elimination on the Vandermonde system.
    let mut m: Vec<Vec<Rational>> = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let mut row: Vec<Rational> = (0..5).map(|k| x.pow(4 - k)).collect();
            row.push(y.clone());
            row
        })
        .collect();
    for col in 0..5 {
        let pivot = (col..5)
            .find(|&i| !m[i][col].is_zero())
            .expect("distinct nodes");
        m.swap(col, pivot);
        let inv = m[col][col].recip().unwrap();
        let pivot_row: Vec<Rational> = m[col].iter().map(|v| v * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        m[col] = pivot_row;
    }
    std::array::from_fn(|k| m[k][5].clone())
}

#[test]
fn coefficients_match_interpolation() {
    let mut rng = common::rng(7);
    let nodes = [-2, -1, 1, 2, 3].map(r);
    for _ in 0..5 {
        let pqr: [Rational; 6] = std::array::from_fn(|_| {
            let v = rng.gen_range(1..=9);
            r(if rng.gen_bool(0.3) { -v } else { v })
        });
        let values = nodes.clone().map(|s1| diagonal_sq(&pqr, &s1, &r(1)));
        let expected = interpolate(&nodes, &values);
        let coeffs = quartic_condition(&ParamSet::new(pqr.clone())).unwrap();
        assert_eq!(coeffs, expected, "{pqr:?}");
    }
}

#[test]
fn form_is_homogeneous_and_equals_the_diagonal() {
    let mut rng = common::rng(8);
    for _ in 0..20 {
        let pqr: [Rational; 6] = std::array::from_fn(|_| common::random_rational(&mut rng));
        let ps = ParamSet::new(pqr.clone());
        let coeffs = quartic_condition(&ps).unwrap();
        let (s1, s2) = (
            common::random_rational(&mut rng),
            common::random_rational(&mut rng),
        );
        let v = eval_quartic_form(&coeffs, &s1, &s2);
        assert_eq!(v, diagonal_sq(&pqr, &s1, &s2));
        let t = r(3);
        assert_eq!(
            eval_quartic_form(&coeffs, &(&t * &s1), &(&t * &s2)),
            t.pow(4) * &v
        );
        if let Ok(sol) = base_solution(&ps.clone().with_s(s1, s2)) {
            assert_eq!(sol.f_squared, v);
        }
    }
}

#[test]
fn all_ones_example() {
    let coeffs = quartic_condition(&ParamSet::from_ints([1; 6])).unwrap();
    assert_eq!(coeffs[0], r(4));
    assert_eq!(coeffs[0], coeffs[4]);
    assert_eq!(coeffs[1], -coeffs[3].clone());
}
