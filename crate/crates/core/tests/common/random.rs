//! Random rings, polynomials, ideals and complexes, seeded or via proptest.

use std::sync::Arc;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use fsplit::stanley_reisner::SimplicialComplex;
use fsplit::{Ideal, Monomial, Polynomial, RingContext};

/// Raw terms: exponent vectors with integer coefficients.
pub type RawPoly = Vec<(Vec<u32>, i64)>;

pub fn build(ring: &Arc<RingContext>, raw: &RawPoly) -> Polynomial {
    let p = ring.characteristic() as i64;
    Polynomial::from_terms(
        ring,
        raw.iter()
            .map(|(e, c)| (Monomial::from_exponents(e), c.rem_euclid(p) as u32)),
    )
}

pub fn build_ideal(ring: &Arc<RingContext>, raws: &[RawPoly]) -> Ideal {
    Ideal::new(ring, raws.iter().map(|r| build(ring, r)).collect()).unwrap()
}

pub fn raw_poly(n: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -50i64..50),
        0..=max_terms,
    )
}

/// A homogeneous raw polynomial of total degree `d`.
pub fn raw_homogeneous(n: usize, d: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((exponents_of_degree(n, d), 1i64..50), 1..=max_terms)
}

fn exponents_of_degree(n: usize, d: u32) -> impl Strategy<Value = Vec<u32>> {
    // n-1 cut points in 0..=d
    prop::collection::vec(0..=d, n.saturating_sub(1)).prop_map(move |mut cuts| {
        cuts.sort_unstable();
        let mut out = Vec::with_capacity(n);
        let mut prev = 0;
        for c in cuts {
            out.push(c - prev);
            prev = c;
        }
        out.push(d - prev);
        out
    })
}

/// A monomial ideal as generator exponent vectors.
pub fn raw_monomial_ideal(
    n: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
}

pub fn monomial_ideal(ring: &Arc<RingContext>, gens: &[Vec<u32>]) -> Ideal {
    Ideal::monomial(ring, gens.iter().map(|e| Monomial::from_exponents(e)))
}

/// `p` paired with an exponent `e` so that `q = p^e` is one of 2, 3, 4.
pub fn small_q() -> impl Strategy<Value = (u64, u32)> {
    prop::sample::select(vec![(2u64, 1u32), (3, 1), (2, 2)])
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> Monomial {
    let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
    Monomial::from_exponents(&e)
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &Arc<RingContext>,
    max_terms: usize,
    max_exp: u32,
) -> Polynomial {
    let n = ring.nvars();
    let p = ring.characteristic();
    let k = rng.gen_range(1..=max_terms);
    Polynomial::from_terms(
        ring,
        (0..k).map(|_| (random_monomial(rng, n, max_exp), rng.gen_range(1..p))),
    )
}

/// A nonzero square-free monomial ideal on `n` variables.
pub fn random_square_free_ideal<R: Rng>(rng: &mut R, ring: &Arc<RingContext>) -> Ideal {
    let n = ring.nvars();
    let k = rng.gen_range(1..=4);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| {
            let mask = rng.gen_range(1u64..1 << n);
            Monomial::from_support(n, mask)
        })
        .collect();
    Ideal::monomial(ring, gens)
}

/// A random complex on `n` vertices: a few random faces, pruned.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let k = rng.gen_range(1..=6);
    let faces: Vec<u64> = (0..k).map(|_| rng.gen_range(0u64..1 << n)).collect();
    SimplicialComplex::new(n, faces).unwrap()
}

/// Every complex on `n` vertices: all antichains of subsets of `[n]`,
/// excluding the void complex.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let subsets: Vec<u64> = (0u64..1 << n).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    extend_antichains(&subsets, 0, &mut chosen, &mut |facets| {
        if !facets.is_empty() {
            out.push(SimplicialComplex::new(n, facets.iter().copied()).unwrap());
        }
    });
    out
}

fn extend_antichains(
    subsets: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    emit(chosen);
    for k in start..subsets.len() {
        let s = subsets[k];
        if chosen.iter().all(|&c| c & s != c && c & s != s) {
            chosen.push(s);
            extend_antichains(subsets, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

pub fn shuffled<T: Clone, R: Rng>(rng: &mut R, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}
