//! Fixtures shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

pub mod random;

use std::sync::Arc;

use fsplit::frobenius::{compatible_candidates, CartierMap};
use fsplit::stanley_reisner::{complex_from_ideal, default_cartier};
use fsplit::{Ideal, Polynomial, RingContext};

/// `F_2[x1..x5]` modulo the 2×2 minors of `[x1 x2 x2 x5; x4 x4 x3 x1]`,
/// a two-dimensional reduced ring.
pub struct Determinantal {
    pub ring: Arc<RingContext>,
    pub i: Ideal,
}

pub const MINORS: [&str; 6] = [
    "x1*x4 + x2*x4",
    "x1*x3 + x2*x4",
    "x1^2 + x4*x5",
    "x2*x3 + x2*x4",
    "x1*x2 + x4*x5",
    "x1*x2 + x3*x5",
];

pub const Z0: &str = "x1^3*x2*x3 + x1^3*x2*x4 + x1^2*x3*x4*x5 + x1*x2*x3*x4*x5 \
    + x1*x2*x4^2*x5 + x2^2*x4^2*x5 + x3*x4^2*x5^2 + x4^3*x5^2";

pub fn z1() -> String {
    format!("x1*x2*x3^2*x5 + x1*x2*x4^2*x5 + {Z0}")
}

pub fn z2() -> String {
    format!("x1^3*x3*x4 + x1*x2^2*x3*x4 + {Z0}")
}

/// Listed candidates, retained primes and the expected test ideal for one
/// choice of `z`.
pub struct Case {
    pub z: String,
    pub listed: Vec<Vec<&'static str>>,
    pub retained: Vec<Vec<&'static str>>,
    pub tau: Vec<&'static str>,
    pub mu: usize,
}

pub fn determinantal() -> Determinantal {
    let ring = RingContext::standard(2, 5).unwrap();
    let i = Ideal::parse(&ring, &MINORS).unwrap();
    Determinantal { ring, i }
}

pub fn case_z0() -> Case {
    Case {
        z: Z0.to_string(),
        listed: vec![
            vec!["x1", "x4"],
            vec!["x1", "x4", "x5"],
            vec!["x1 + x2", "x1^2 + x4*x5"],
            vec!["x1 + x2", "x2^2 + x4*x5"],
            vec!["x3 + x4", "x1 + x2", "x2^2 + x4*x5"],
            vec!["x1", "x2", "x5", "x3 + x4"],
            vec!["x1", "x2", "x4"],
            vec!["x1", "x2", "x5"],
            vec!["x1", "x3", "x4"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x2", "x4", "x5"],
            vec!["x1", "x3", "x4", "x5"],
            vec!["x1", "x2", "x3", "x4", "x5"],
        ],
        retained: vec![
            vec!["x1", "x2", "x4", "x5"],
            vec!["x1", "x2", "x3", "x4", "x5"],
            vec!["x1", "x2", "x5", "x3 + x4"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x3", "x4", "x5"],
        ],
        tau: vec!["x1", "x2*x5", "x3*x4 + x4^2"],
        mu: 3,
    }
}

pub fn case_z1() -> Case {
    Case {
        z: z1(),
        listed: vec![
            vec!["x1 + x2", "x3 + x4", "x1^2 + x4*x5"],
            vec!["x3 + x4", "x2", "x1", "x5"],
            vec!["x1", "x2", "x5"],
            vec!["x1", "x3", "x4"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x3", "x4", "x5"],
            vec!["x1", "x2", "x3", "x5"],
            vec!["x1", "x2", "x3", "x4", "x5"],
        ],
        retained: vec![
            vec!["x3 + x4", "x2", "x1", "x5"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x2", "x3", "x4", "x5"],
            vec!["x1", "x2", "x3", "x5"],
            vec!["x1", "x3", "x4", "x5"],
        ],
        tau: vec!["x1", "x4*x5", "x3*x5", "x2*x5", "x2*x4", "x3^2 + x3*x4", "x2*x3"],
        mu: 7,
    }
}

pub fn case_z2() -> Case {
    Case {
        z: z2(),
        listed: vec![
            vec!["x1 + x2", "x3 + x4", "x2^2 + x4*x5"],
            vec!["x3 + x4", "x2", "x1", "x5"],
            vec!["x1", "x2", "x5"],
            vec!["x1", "x3", "x4"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x2", "x4", "x5"],
            vec!["x1 + x2", "x1^2 + x4*x5"],
            vec!["x1", "x2", "x3", "x4", "x5"],
            vec!["x1", "x2", "x4"],
            vec!["x1", "x4"],
            vec!["x1", "x4", "x2 + x5"],
            vec!["x1", "x3", "x4", "x2 + x5"],
        ],
        retained: vec![
            vec!["x3 + x4", "x2", "x1", "x5"],
            vec!["x1", "x2", "x3", "x4"],
            vec!["x1", "x2", "x3", "x4", "x5"],
            vec!["x1", "x2", "x4", "x5"],
            vec!["x1", "x3", "x4", "x2 + x5"],
        ],
        tau: vec!["x1", "x4*x5", "x3*x5", "x2*x3", "x2*x4", "x4^2 + x3*x4", "x2^2 + x2*x5"],
        mu: 7,
    }
}

/// Minimal primes of the determinantal ideal.
pub fn determinantal_minimal_primes() -> Vec<Vec<&'static str>> {
    vec![
        vec!["x1 + x2", "x1^2 + x4*x5"],
        vec!["x1", "x2", "x5"],
        vec!["x1", "x4", "x3"],
    ]
}

pub fn ideals(ring: &Arc<RingContext>, lists: &[Vec<&str>]) -> Vec<Ideal> {
    lists.iter().map(|g| Ideal::parse(ring, g).unwrap()).collect()
}

pub fn intersect_all(ring: &Arc<RingContext>, ideals: &[Ideal]) -> Ideal {
    ideals
        .iter()
        .fold(Ideal::unit(ring), |acc, p| acc.intersect(p).unwrap())
}

/// Test ideal of a Stanley-Reisner ring through the general engine: every
/// variable prime (and the zero ideal) is checked for compatibility by root
/// ideals, minimal primes come from inclusion among the compatible candidates
/// containing `I`, and the survivors are intersected.
pub fn general_sr_test_ideal(ring: &Arc<RingContext>, i: &Ideal) -> Ideal {
    let n = ring.nvars();
    let complex = complex_from_ideal(i).unwrap();
    let map: CartierMap = default_cartier(ring, &complex, 1).unwrap();
    let candidates: Vec<Ideal> = (0u64..1 << n).map(|m| Ideal::variables(ring, m)).collect();
    let report = compatible_candidates(i, &map, &candidates, None).unwrap();
    report.intersection
}

pub fn poly(ring: &Arc<RingContext>, text: &str) -> Polynomial {
    Polynomial::parse(ring, text).unwrap()
}
