use ratquad::classical::{brahmagupta, cos_sq_u};
use ratquad::generators::{cyclic_circumradius, gen_cyclic, gen_noncyclic_b};
use ratquad::{ParamSet, Quadrilateral, Rational};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// cos²u from the angles at A and C, where 2u = A + C.
fn cos_sq_from_angles(rec: &Quadrilateral) -> Rational {
    let p = &rec.placement;
    let angle =
        |px: &Rational, py: &Rational, u: (&Rational, &Rational), v: (&Rational, &Rational)| {
            // cos and sin of the angle at (px, py) between the rays to u and v.
            let (ux, uy) = (u.0 - px, u.1 - py);
            let (vx, vy) = (v.0 - px, v.1 - py);
            let len = ((ux.square() + uy.square()) * (vx.square() + vy.square()))
                .sqrt_exact()
                .unwrap();
            let cos = (&ux * &vx + &uy * &vy).checked_div(&len).unwrap();
            let sin = (&ux * &vy - &uy * &vx).abs().checked_div(&len).unwrap();
            (cos, sin)
        };
    let zero = r(0);
    let (ca, sa) = angle(&p.x1, &p.y1, (&zero, &zero), (&p.e, &zero));
    let (cc, sc) = angle(&p.x2, &p.y2, (&zero, &zero), (&p.e, &zero));
    let cos_sum = ca * cc - sa * sc;
    (r(1) + cos_sum) * Rational::new(1, 2).unwrap()
}

#[test]
fn noncyclic_b_example_has_cos_sq_one_tenth() {
    let rec = gen_noncyclic_b([1, 2, 1, 5].map(r)).unwrap();
    let expected = Rational::new(1, 10).unwrap();
    assert_eq!(cos_sq_from_angles(&rec), expected);
    assert_eq!(cos_sq_u(&rec).unwrap(), expected);
}

#[test]
fn cyclic_example_has_circumradius_85_over_2() {
    let rec = gen_cyclic(ParamSet::from_ints([4, 1, 3, 1, 2, 1]).into_pqr()).unwrap();
    let expected = Rational::new(85, 2).unwrap();
    // Circumcircle of O, A, B.
    let p = &rec.placement;
    assert_eq!(
        (&p.a * &p.b).checked_div(&(r(2) * &p.y1)).unwrap(),
        expected
    );
    let data = brahmagupta(&r(51), &r(40), &r(68), &r(75)).unwrap();
    assert_eq!(
        data.circumradius_squared.sqrt_exact(),
        Some(expected.clone())
    );
    assert_eq!(
        rec.scale.clone() * cyclic_circumradius(&[4, 1, 3, 1, 2, 1].map(r)),
        expected
    );
    assert_eq!(cos_sq_from_angles(&rec), r(0));
}
