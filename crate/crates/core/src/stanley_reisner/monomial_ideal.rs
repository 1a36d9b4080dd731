//! Combinatorial arithmetic on monomial ideals given by generator lists.
//! `[]` is the zero ideal and `[1]` the unit ideal.

use crate::poly::Monomial;

/// Drops duplicates and generators divisible by another generator.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

pub(crate) fn contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// `(a) ∩ (b) = (lcm(a_i, b_j))`.
pub(crate) fn intersect(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let lcms = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| x.lcm(y)))
        .collect();
    minimalize(lcms)
}

/// Minimal transversals (minimal hitting sets) of a hypergraph on bitmasks,
/// by Berge's incremental algorithm. An empty edge cannot be hit, so its
/// presence yields no transversal at all.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &edge in edges {
        let mut next: Vec<u64> = Vec::new();
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest &= rest - 1;
                }
            }
        }
        next.sort_unstable_by_key(|t| (t.count_ones(), *t));
        next.dedup();
        let mut minimal: Vec<u64> = Vec::with_capacity(next.len());
        for t in next {
            if !minimal.iter().any(|&s| s & t == s) {
                minimal.push(t);
            }
        }
        current = minimal;
    }
    current.sort_unstable();
    current
}
