//! Ideals of `S = F_p[x_1..x_n]` backed by cached reduced Gröbner bases.

mod buchberger;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use buchberger::{buchberger, is_groebner_basis, is_reduced_groebner_basis, normal_form};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// An ideal given by generators, with its reduced Gröbner basis for the
/// ring's order computed on first use and cached.
pub struct Ideal {
    ring: Arc<RingContext>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Result<Vec<Polynomial>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Self {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis,
        }
    }
}

impl Ideal {
    /// The ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &Arc<RingContext>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::MixedRings);
        }
        Ok(Self {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    /// Parses each string as a generator.
    pub fn parse<S: AsRef<str>>(ring: &Arc<RingContext>, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    fn with_basis(ring: &Arc<RingContext>, basis: Vec<Polynomial>) -> Self {
        let cache = OnceLock::new();
        let _ = cache.set(Ok(basis.clone()));
        Self {
            ring: ring.clone(),
            gens: basis,
            basis: cache,
        }
    }

    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Self::with_basis(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<RingContext>) -> Self {
        Self::with_basis(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by the variables whose indices are set in `mask`.
    pub fn variables(ring: &Arc<RingContext>, mask: u64) -> Self {
        let n = ring.nvars();
        let gens = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| Polynomial::var(ring, i))
            .collect::<Vec<_>>();
        // variables sorted x1 > x2 > ... already form a reduced basis in every order
        let mut gens = gens;
        let order = ring.order();
        gens.sort_by(|a, b| order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        Self::with_basis(ring, gens)
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        let n = ring.nvars();
        let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::variables(ring, mask)
    }

    /// The monomial ideal generated by `monomials` (coefficient 1).
    pub fn monomial(ring: &Arc<RingContext>, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let gens = monomials
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, 1))
            .collect();
        Self {
            ring: ring.clone(),
            gens,
            basis: OnceLock::new(),
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis for the ring's order.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        self.basis
            .get_or_init(|| buchberger(&self.gens, self.ring.order()))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Generators without zeros; empty means the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(matches!(self.groebner_basis()?, [g] if g.is_constant()))
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, f.ring()) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// The unique remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        normal_form(f, self.groebner_basis()?)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// The ideal `f·I`.
    pub fn scaled_by(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_auxiliary_front(1);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in self.groebner_basis()? {
            gens.push(f.embed_front(&ext, 1).mul(&t)?);
        }
        for g in other.groebner_basis()? {
            gens.push(g.embed_front(&ext, 1).mul(&one_minus_t)?);
        }
        let basis = buchberger::reduced_basis(&ext, gens)?;
        let kept: Vec<Polynomial> = basis
            .iter()
            .filter_map(|g| g.restrict_front(&self.ring, 1))
            .collect();
        if self.ring.order() == MonomialOrder::DegRevLex {
            // the block order restricted to t-free monomials is degrevlex, so
            // the surviving elements already form the reduced basis
            Ok(Ideal::with_basis(&self.ring, kept))
        } else {
            Ideal::new(&self.ring, kept)
        }
    }

    /// `(I : f) = {g : g·f ∈ I}`.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ZeroArgument("colon divisor"));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = g.div_exact(f)?.ok_or_else(|| {
                Error::Internal(format!("{g} in the intersection is not divisible by {f}"))
            })?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J)` as the intersection of the element colons over generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroArgument("colon ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// Generators sorted for display: descending leading term, then text.
    pub fn sorted_generators(&self) -> Vec<Polynomial> {
        sort_for_display(self.gens.clone())
    }
}

/// Sorts by descending term sequence in the ring order, then by text.
pub fn sort_for_display(mut polys: Vec<Polynomial>) -> Vec<Polynomial> {
    polys.sort_by(|a, b| {
        let order = a.ring().order();
        let by_terms = b
            .terms()
            .iter()
            .zip(a.terms())
            .map(|((mb, _), (ma, _))| order.compare(mb, ma))
            .find(|o| o.is_ne())
            .unwrap_or_else(|| b.len().cmp(&a.len()));
        by_terms.then_with(|| a.to_string().cmp(&b.to_string()))
    });
    polys.dedup();
    polys
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.sorted_generators();
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
