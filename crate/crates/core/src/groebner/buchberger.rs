//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of the product and chain criteria.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// Remainder of `f` modulo `basis`, fully reduced: no term of the result is
/// divisible by a leading monomial of `basis`.
///
/// The remainder is unique when `basis` is a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    reduce(f, &refs)
}

fn reduce(f: &Polynomial, basis: &[&Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let divisor = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.quotient_of(&m).map(|t| (t, *lc, *g))
        });
        match divisor {
            Some((t, lc, g)) => {
                let factor = field.neg(field.mul(c, field.inv(lc)));
                rest = rest.add_scaled_shifted(factor, &t, g)?;
            }
            None => {
                rest.pop_leading();
                remainder.push((m, c));
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(&ring, remainder))
}

/// The S-polynomial of two monic polynomials.
pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (lf, lg) = match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(Polynomial::zero(f.ring())),
    };
    let lcm = lf.lcm(lg);
    let tf = lf.quotient_of(&lcm).expect("lcm is a multiple");
    let tg = lg.quotient_of(&lcm).expect("lcm is a multiple");
    let field = *f.ring().field();
    let minus = field.neg(1);
    f.mul_monomial(field.inv(f.leading_coeff()), &tf)?
        .add_scaled_shifted(field.mul(minus, field.inv(g.leading_coeff())), &tg, g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Arc<RingContext>,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g)
            .collect()
    }

    /// Installs a new, already reduced, monic element.
    fn update(&mut self, h: Polynomial) {
        let t = self.basis.len();
        let lm_h = h.leading_monomial().expect("nonzero").clone();
        self.basis.push(h);
        self.active.push(true);

        let candidates: Vec<Pair> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| Pair {
                i,
                j: t,
                lcm: self.lm(i).lcm(&lm_h),
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs survive this step
        // and are discarded afterwards by the product criterion.
        let mut kept: Vec<Pair> = Vec::new();
        for (k, pair) in candidates.iter().enumerate() {
            let coprime = self.lm(pair.i).is_coprime(&lm_h);
            let dominated = candidates[k + 1..]
                .iter()
                .chain(kept.iter())
                .any(|other| other.lcm.divides(&pair.lcm));
            if coprime || !dominated {
                kept.push(Pair {
                    i: pair.i,
                    j: pair.j,
                    lcm: pair.lcm.clone(),
                });
            }
        }
        kept.retain(|p| !self.lm(p.i).is_coprime(&lm_h));

        // Chain criterion for the old pairs.
        let old = std::mem::take(&mut self.pairs);
        for pair in old {
            let drop = lm_h.divides(&pair.lcm)
                && self.lm(pair.i).lcm(&lm_h) != pair.lcm
                && self.lm(pair.j).lcm(&lm_h) != pair.lcm;
            if !drop {
                self.pairs.push(pair);
            }
        }
        self.pairs.extend(kept);

        for i in 0..t {
            if self.active[i] && lm_h.divides(self.lm(i)) {
                self.active[i] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .compare(&pa.lcm, &pb.lcm)
                .then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Reduces `f` against the active elements; returns `true` if the unit
    /// ideal was reached.
    fn insert(&mut self, f: &Polynomial) -> Result<bool> {
        let h = reduce(f, &self.active_refs())?;
        if h.is_zero() {
            return Ok(false);
        }
        let unit = h.is_constant();
        self.update(h.monic());
        Ok(unit)
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// The returned polynomials live in the generators' ring re-sorted by `order`,
/// are monic, and are listed by descending leading monomial. The zero ideal
/// yields an empty list and the unit ideal yields `[1]`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    if gens.iter().any(|g| !same_ring(g.ring(), first.ring())) {
        return Err(Error::MixedRings);
    }
    let ring = if first.ring().order() == order {
        first.ring().clone()
    } else {
        first.ring().reordered(order)
    };
    let mut input = Vec::with_capacity(gens.len());
    for g in gens.iter().filter(|g| !g.is_zero()) {
        input.push(g.to_ring(&ring)?);
    }
    reduced_basis(&ring, input)
}

pub(crate) fn reduced_basis(
    ring: &Arc<RingContext>,
    mut input: Vec<Polynomial>,
) -> Result<Vec<Polynomial>> {
    let one = || vec![Polynomial::one(ring)];
    if input.is_empty() {
        return Ok(Vec::new());
    }
    if input.iter().any(|g| g.is_constant()) {
        return Ok(one());
    }
    // smaller generators first keeps intermediate reductions short
    let order = ring.order();
    input.sort_by(|a, b| {
        order
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then(a.len().cmp(&b.len()))
    });
    let mut engine = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in &input {
        if engine.insert(f)? {
            return Ok(one());
        }
    }
    while let Some(pair) = engine.select() {
        let s = s_polynomial(&engine.basis[pair.i], &engine.basis[pair.j])?;
        if engine.insert(&s)? {
            return Ok(one());
        }
    }

    let minimal: Vec<Polynomial> = engine
        .basis
        .iter()
        .zip(&engine.active)
        .filter(|(_, a)| **a)
        .map(|(g, _)| g.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, h)| h)
            .collect();
        reduced.push(reduce(g, &others)?.monic());
    }
    reduced.sort_by(|a, b| {
        order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(reduced)
}

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j])?;
            if !normal_form(&s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the defining properties of a reduced basis: Gröbner, monic, and no
/// term of any element divisible by another element's leading monomial.
pub fn is_reduced_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for (i, g) in basis.iter().enumerate() {
        if g.leading_coeff() != 1 {
            return Ok(false);
        }
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let lm = h.leading_monomial().expect("nonzero");
            if g.terms().iter().any(|(m, _)| lm.divides(m)) {
                return Ok(false);
            }
        }
    }
    is_groebner_basis(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(r: &Arc<RingContext>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()
    }

    #[test]
    fn single_monic_generator() {
        let r = RingContext::new(2, &["x"]).unwrap();
        let gb = buchberger(&polys(&r, &["x"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, polys(&r, &["x"]));
    }

    #[test]
    fn inter_reduction_lex() {
        let r = RingContext::standard(2, 2).unwrap();
        let gb = buchberger(&polys(&r, &["x1^2 + x2", "x2"]), MonomialOrder::Lex).unwrap();
        let lex = r.reordered(MonomialOrder::Lex);
        assert_eq!(gb, polys(&lex, &["x1^2", "x2"]));
    }

    #[test]
    fn inter_reduction_degrevlex() {
        let r = RingContext::standard(2, 2).unwrap();
        let gb = buchberger(&polys(&r, &["x1*x2 + x2", "x1"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, polys(&r, &["x1", "x2"]));
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = RingContext::standard(5, 2).unwrap();
        assert!(buchberger(&[], MonomialOrder::DegRevLex).unwrap().is_empty());
        assert!(buchberger(&polys(&r, &["0"]), MonomialOrder::DegRevLex)
            .unwrap()
            .is_empty());
        let gb = buchberger(&polys(&r, &["x1 + 1", "x1"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, vec![Polynomial::one(&r)]);
    }

    #[test]
    fn twisted_cubic_over_f7() {
        let r = RingContext::new(7, &["x", "y", "z", "w"]).unwrap();
        let gens = polys(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        assert!(is_reduced_groebner_basis(&gb).unwrap());
        assert_eq!(gb.len(), 3);
        let lex = buchberger(&gens, MonomialOrder::Lex).unwrap();
        assert!(is_reduced_groebner_basis(&lex).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let r = RingContext::new(2, &["x"]).unwrap();
        let basis = polys(&r, &["x"]);
        assert!(normal_form(&polys(&r, &["x^2"])[0], &basis).unwrap().is_zero());
        assert_eq!(
            normal_form(&polys(&r, &["x + 1"])[0], &basis).unwrap(),
            Polynomial::one(&r)
        );
        let r5 = RingContext::standard(2, 5).unwrap();
        let basis = polys(&r5, &["x1^2 + x4*x5"]);
        let f = &polys(&r5, &["x1^2*x2 + x4*x5*x2"])[0];
        assert!(normal_form(f, &basis).unwrap().is_zero());
    }

    #[test]
    fn mixed_rings_error() {
        let a = RingContext::standard(2, 2).unwrap();
        let b = RingContext::standard(3, 2).unwrap();
        let gens = vec![polys(&a, &["x1"])[0].clone(), polys(&b, &["x2"])[0].clone()];
        assert_eq!(
            buchberger(&gens, MonomialOrder::DegRevLex),
            Err(Error::MixedRings)
        );
    }
}
