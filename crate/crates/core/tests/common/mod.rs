#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ratquad::generators::{arity, generate};
use ratquad::{Error, Family, Quadrilateral, Rational};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut StdRng) -> Rational {
    let n: i64 = rng.gen_range(1..=20);
    let d: i64 = if rng.gen_bool(0.2) {
        rng.gen_range(2..=3)
    } else {
        1
    };
    Rational::new(n, d).unwrap()
}

/// `count` parameter tuples the family accepts, with their records.
pub fn admissible(family: Family, count: usize, seed: u64) -> Vec<(Vec<Rational>, Quadrilateral)> {
    let mut rng = rng(seed);
    let n = arity(family).unwrap();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 200 * count, "{family}: too few admissible tuples");
        let params: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        match generate(family, &params) {
            Ok(rec) => out.push((params, rec)),
            Err(Error::ClosedFormMismatch(m)) => panic!("{family} {params:?}: {m}"),
            Err(_) => {}
        }
    }
    out
}

pub const PARAMETRIC: [Family; 4] = [
    Family::Cyclic,
    Family::NoncyclicA,
    Family::NoncyclicB,
    Family::TwoEqualSides,
];
