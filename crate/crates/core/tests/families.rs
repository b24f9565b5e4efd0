mod common;

use common::{admissible, PARAMETRIC};
use num_bigint::BigInt;
use ratquad::classical::{brahmagupta, classify_cyclic, ptolemy_holds};
use ratquad::generators::{
    cyclic_s, eval_quartic_form, family_base_params, generate, quartic_condition, record_from_base,
};
use ratquad::oracle::{conditions_hold, cross_validate};
use ratquad::{Family, Rational};

const PER_FAMILY: usize = 120;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn every_generated_record_is_a_rational_convex_quadrilateral() {
    for (i, family) in PARAMETRIC.into_iter().enumerate() {
        let samples = admissible(family, PER_FAMILY, 10 + i as u64);
        let records: Vec<_> = samples.iter().map(|(_, rec)| rec.clone()).collect();
        for (params, rec) in &samples {
            assert!(conditions_hold(&rec.placement), "{family} {params:?}");
            assert!(rec.placement.equations_hold());
            assert!(rec.area.is_positive());
            assert_eq!(rec.family, family);
        }
        let report = cross_validate(&records);
        assert!(report.is_clean(), "{family}: {:?}", report.disagreements);
    }
}

/// True when the family's `(s1 : s2)` is the cyclic family's choice for the same `p, q, r`.
fn on_cyclic_locus(family: Family, params: &[Rational]) -> bool {
    let ps = family_base_params(family, params).unwrap();
    let (c1, c2) = cyclic_s(&ps);
    ps.s1.as_ref().unwrap() * &c2 == ps.s2.as_ref().unwrap() * &c1
}

#[test]
fn cyclic_family_is_cyclic_and_obeys_ptolemy() {
    for (params, rec) in admissible(Family::Cyclic, PER_FAMILY, 10) {
        assert!(classify_cyclic(&rec), "{params:?}");
        assert!(ptolemy_holds(&rec), "{params:?}");
    }
}

#[test]
fn other_families_are_cyclic_only_on_the_cyclic_locus() {
    for (i, family) in PARAMETRIC.into_iter().enumerate().skip(1) {
        for (params, rec) in admissible(family, PER_FAMILY, 10 + i as u64) {
            let cyclic = classify_cyclic(&rec);
            assert_eq!(
                cyclic,
                on_cyclic_locus(family, &params),
                "{family} {params:?}"
            );
            assert_eq!(cyclic, ptolemy_holds(&rec), "{family} {params:?}");
            if family != Family::NoncyclicA {
                assert!(!cyclic, "{family} {params:?}");
            }
        }
    }
}

#[test]
fn first_noncyclic_family_meets_the_cyclic_locus() {
    // A 3-4-5 rectangle and an isosceles trapezoid.
    let rect = generate(Family::NoncyclicA, &[3, 1, 2, 1, 2, 1].map(r)).unwrap();
    assert_eq!(rect.tuple().0, [4, 3, 4, 3, 5, 5].map(BigInt::from));
    assert!(classify_cyclic(&rect));
    let trap = generate(Family::NoncyclicA, &[4, 20, 2, 9, 4, 18].map(r)).unwrap();
    assert!(classify_cyclic(&trap));
    assert_eq!(trap.sides[0], trap.sides[2]);
    assert_eq!(trap.diagonals[0], trap.diagonals[1]);
    assert!(on_cyclic_locus(
        Family::NoncyclicA,
        &[4, 20, 2, 9, 4, 18].map(r)
    ));
    let paper = generate(Family::NoncyclicA, &[3, 1, 2, 1, 3, 1].map(r)).unwrap();
    assert!(!classify_cyclic(&paper));
    assert!(!on_cyclic_locus(
        Family::NoncyclicA,
        &[3, 1, 2, 1, 3, 1].map(r)
    ));
}

#[test]
fn cyclic_circumradius_scales_with_the_record() {
    for (params, rec) in admissible(Family::Cyclic, PER_FAMILY, 10) {
        let [p1, p2, q1, q2, r1, r2]: [Rational; 6] = params.try_into().unwrap();
        let unscaled = (p1.square() + p2.square())
            * (q1.square() + q2.square())
            * (r1.square() + r2.square())
            * Rational::new(1, 4).unwrap();
        let expected = &rec.scale * unscaled;
        // Circumcircle of the triangle O A B: R = a·b / (2·y1).
        let p = &rec.placement;
        let from_triangle = (&p.a * &p.b).checked_div(&(r(2) * &p.y1)).unwrap();
        assert_eq!(from_triangle, expected);
        let [a, b, c, d] = rec.sides.clone().map(Rational::from);
        let data = brahmagupta(&a, &b, &c, &d).unwrap();
        assert_eq!(data.circumradius_squared, expected.square());
        assert_eq!(data.area_squared, rec.area.square());
    }
}

#[test]
fn closed_forms_agree_with_the_base_parametrization() {
    for (i, family) in PARAMETRIC.into_iter().enumerate() {
        for (params, rec) in admissible(family, PER_FAMILY, 10 + i as u64) {
            let ps = family_base_params(family, &params).unwrap();
            let again = record_from_base(&ps, family).unwrap();
            assert!(again.same_figure(&rec), "{family} {params:?}");
            assert_eq!(rec.params.as_ref(), Some(&ps));
        }
    }
}

#[test]
fn each_family_makes_the_quartic_a_square() {
    for (i, family) in PARAMETRIC.into_iter().enumerate() {
        for (params, _) in admissible(family, 40, 20 + i as u64) {
            let ps = family_base_params(family, &params).unwrap();
            let coeffs = quartic_condition(&ps).unwrap();
            let v = eval_quartic_form(&coeffs, ps.s1.as_ref().unwrap(), ps.s2.as_ref().unwrap());
            assert!(v.sqrt_exact().is_some(), "{family} {params:?}: {v}");
        }
    }
}

#[test]
fn records_are_primitive() {
    for (i, family) in PARAMETRIC.into_iter().enumerate() {
        for (_, rec) in admissible(family, 30, 30 + i as u64) {
            let g = rec
                .sides
                .iter()
                .chain(&rec.diagonals)
                .fold(BigInt::from(0), |g, v| num_integer::Integer::gcd(&g, v));
            assert_eq!(g, BigInt::from(1));
            assert!(rec
                .sides
                .iter()
                .chain(&rec.diagonals)
                .all(|v| v > &BigInt::from(0)));
        }
    }
}
