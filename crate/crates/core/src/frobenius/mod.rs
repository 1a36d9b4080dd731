//! Frobenius powers, e-th root ideals and Cartier maps `Φ_S(z^{1/q} · −)`.
//!
//! A Cartier map on `S` is determined by its Fedder element `z`. An ideal `J`
//! is compatible with it when `Φ_S((zJ)^{1/q}) ⊆ J`; the image
//! `Φ_S((zJ)^{1/q})` is the e-th root ideal `I_e(zJ)`, so every test here
//! reduces to coefficient extraction plus ideal membership.

mod pipeline;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use pipeline::{compatible_candidates, CandidateReport};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{frobenius_exponent, same_ring, Monomial, Polynomial, RingContext};

/// Guard on the ascending chain in [`stable_closure`].
pub const STABLE_CLOSURE_CAP: usize = 1 << 16;

/// `q = p^e` with `e >= 1`, kept as the pair `(p, e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusPower {
    p: u32,
    e: u32,
    q: u32,
}

impl FrobeniusPower {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroFrobeniusExponent);
        }
        let q = (p as u64)
            .checked_pow(e)
            .and_then(|q| u32::try_from(q).ok())
            .ok_or(Error::ExponentOverflow)?;
        Ok(Self { p, e, q })
    }

    pub fn from_q(p: u32, q: u64) -> Result<Self> {
        if q == 1 {
            return Err(Error::ZeroFrobeniusExponent);
        }
        let e = frobenius_exponent(p, q).ok_or(Error::NotPowerOfCharacteristic { q, p })?;
        Self::new(p, e)
    }

    pub fn for_ring(ring: &RingContext, e: u32) -> Result<Self> {
        Self::new(ring.characteristic(), e)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn check_ring(&self, ring: &RingContext) -> Result<()> {
        if ring.characteristic() == self.p {
            Ok(())
        } else {
            Err(Error::NotPowerOfCharacteristic {
                q: self.q as u64,
                p: ring.characteristic(),
            })
        }
    }
}

impl fmt::Display for FrobeniusPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// The Frobenius (bracket) power `I^{[q]}`, generated by the q-th powers of
/// the generators of `I`.
pub fn bracket_power(ideal: &Ideal, q: FrobeniusPower) -> Result<Ideal> {
    q.check_ring(ideal.ring())?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.frobenius_power(q.q() as u64))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// Components `h_a` of the unique expansion `h = Σ_a h_a^q x^a` with
/// `0 <= a_i <= q - 1`, keyed by `a`.
///
/// Over `F_p` every scalar is its own q-th root, so `c x^{qb + a}` contributes
/// `c x^b` to `h_a`.
pub fn frobenius_components(h: &Polynomial, q: FrobeniusPower) -> BTreeMap<Monomial, Polynomial> {
    let ring = h.ring();
    let mut buckets: BTreeMap<Monomial, Vec<(Monomial, u32)>> = BTreeMap::new();
    for (m, c) in h.terms() {
        let (quot, rem) = m.div_rem_exponents(q.q());
        buckets.entry(rem).or_default().push((quot, *c));
    }
    buckets
        .into_iter()
        .map(|(a, terms)| (a, Polynomial::from_terms(ring, terms)))
        .collect()
}

/// `I_e(h)` as a list of generators.
pub fn root_generators(h: &Polynomial, q: FrobeniusPower) -> Vec<Polynomial> {
    frobenius_components(h, q)
        .into_values()
        .filter(|g| !g.is_zero())
        .collect()
}

/// The e-th root ideal `I_e(K)`: the smallest ideal whose q-th bracket power
/// contains `K`, computed generator by generator.
pub fn eth_root(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let q = FrobeniusPower::for_ring(ideal.ring(), e)?;
    eth_root_q(ideal, q)
}

fn eth_root_q(ideal: &Ideal, q: FrobeniusPower) -> Result<Ideal> {
    let gens = ideal
        .generators()
        .iter()
        .flat_map(|h| root_generators(h, q))
        .collect();
    Ideal::new(ideal.ring(), gens)
}

/// A Cartier map `Φ(s) = Φ_S(z^{1/q} s)` where `Φ_S` is the trace map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierMap {
    power: FrobeniusPower,
    z: Polynomial,
}

impl CartierMap {
    pub fn new(z: Polynomial, e: u32) -> Result<Self> {
        let power = FrobeniusPower::for_ring(z.ring(), e)?;
        Self::with_power(z, power)
    }

    pub fn with_power(z: Polynomial, power: FrobeniusPower) -> Result<Self> {
        power.check_ring(z.ring())?;
        if z.is_zero() {
            return Err(Error::ZeroArgument("Fedder element"));
        }
        Ok(Self { power, z })
    }

    /// The trace map itself (`z = 1`).
    pub fn trace(ring: &Arc<RingContext>, e: u32) -> Result<Self> {
        Self::new(Polynomial::one(ring), e)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.z.ring()
    }

    pub fn power(&self) -> FrobeniusPower {
        self.power
    }

    pub fn q(&self) -> u32 {
        self.power.q()
    }

    pub fn e(&self) -> u32 {
        self.power.e()
    }

    pub fn z(&self) -> &Polynomial {
        &self.z
    }

    fn check(&self, ring: &Arc<RingContext>) -> Result<()> {
        if same_ring(self.ring(), ring) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// `Φ_S((z f)^{1/q})`: the component of `z f` at `a = (q-1, ..., q-1)`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f.ring())?;
        let zf = self.z.mul(f)?;
        let top = Monomial::from_exponents(&vec![self.q() - 1; zf.ring().nvars()]);
        let mut parts = frobenius_components(&zf, self.power);
        Ok(parts
            .remove(&top)
            .unwrap_or_else(|| Polynomial::zero(self.ring())))
    }

    /// The image `Φ(J^{1/q}) = I_e(z J)`.
    pub fn image(&self, ideal: &Ideal) -> Result<Ideal> {
        self.check(ideal.ring())?;
        eth_root_q(&ideal.scaled_by(&self.z)?, self.power)
    }
}

impl fmt::Display for CartierMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phi_S(({})^(1/{}) * -)", self.z, self.q())
    }
}

/// Free-function form of [`CartierMap::apply`].
pub fn cartier_trace(map: &CartierMap, f: &Polynomial) -> Result<Polynomial> {
    map.apply(f)
}

/// Whether `J` is compatible with the map: `I_e(zJ) ⊆ J`.
pub fn is_compatible(ideal: &Ideal, map: &CartierMap) -> Result<bool> {
    let image = map.image(ideal)?;
    ideal.contains_ideal(&image)
}

/// The same test by the membership route `zJ ⊆ J^{[q]}`, i.e. `J ⊆ (J^{[q]} : z)`.
pub fn is_compatible_by_bracket(ideal: &Ideal, map: &CartierMap) -> Result<bool> {
    map.check(ideal.ring())?;
    let bracket = bracket_power(ideal, map.power)?;
    for g in ideal.generators() {
        if !bracket.contains(&g.mul(&map.z)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f ∈ m^{[q]}`: every term has some exponent at least `q`.
pub fn in_bracket_maximal(f: &Polynomial, q: FrobeniusPower) -> bool {
    f.terms()
        .iter()
        .all(|(m, _)| m.exponents().iter().any(|&e| e >= q.q()))
}

/// Outcome of Fedder's criterion for a map on `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FedderReport {
    /// `z ∈ (I^{[q]} : I)`, so the map descends to `S/I`.
    pub in_colon: bool,
    /// `z ∉ m^{[q]}`.
    pub outside_mq: bool,
    /// The descended map is surjective.
    pub surjective: bool,
}

pub fn fedder_check(ideal: &Ideal, map: &CartierMap) -> Result<FedderReport> {
    map.check(ideal.ring())?;
    let bracket = bracket_power(ideal, map.power)?;
    let mut in_colon = true;
    for g in ideal.generators() {
        if !bracket.contains(&map.z.mul(g)?)? {
            in_colon = false;
            break;
        }
    }
    let outside_mq = !in_bracket_maximal(&map.z, map.power);
    Ok(FedderReport {
        in_colon,
        outside_mq,
        surjective: in_colon && outside_mq,
    })
}

/// Smallest ideal containing `c` and stable under `J ↦ I_e(zJ)`.
///
/// Iterates `J_{k+1} = J_k + I_e(z J_k)` from `J_0 = (c)`. Whether the limit
/// is a test ideal depends on `c` being a valid test element, which is not
/// checked.
pub fn stable_closure(map: &CartierMap, c: &Polynomial) -> Result<Ideal> {
    map.check(c.ring())?;
    if c.is_zero() {
        return Err(Error::ZeroArgument("seed element"));
    }
    let mut current = Ideal::new(map.ring(), vec![c.clone()])?;
    for _ in 0..STABLE_CLOSURE_CAP {
        let image = map.image(&current)?;
        if current.contains_ideal(&image)? {
            let basis = current.groebner_basis()?.to_vec();
            return Ideal::new(map.ring(), basis);
        }
        current = current.sum(&image)?;
    }
    Err(Error::IterationCap(STABLE_CLOSURE_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, n: usize) -> Arc<RingContext> {
        RingContext::standard(p, n).unwrap()
    }

    fn poly(r: &Arc<RingContext>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn ideal(r: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn frobenius_power_type() {
        let q = FrobeniusPower::from_q(3, 9).unwrap();
        assert_eq!((q.p(), q.e(), q.q()), (3, 2, 9));
        assert!(FrobeniusPower::from_q(3, 6).is_err());
        assert_eq!(FrobeniusPower::new(2, 0), Err(Error::ZeroFrobeniusExponent));
        assert_eq!(FrobeniusPower::new(2, 40), Err(Error::ExponentOverflow));
    }

    #[test]
    fn bracket_power_examples() {
        let r = ring(2, 4);
        let q = FrobeniusPower::new(2, 1).unwrap();
        let i = ideal(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let b = bracket_power(&i, q).unwrap();
        assert!(b
            .equals(&ideal(&r, &["x1^2*x3^2", "x1^2*x4^2", "x2^2*x3^2", "x2^2*x4^2"]))
            .unwrap());
        assert!(bracket_power(&Ideal::zero(&r), q).unwrap().is_zero());
        let lin = bracket_power(&ideal(&r, &["x1 + x2"]), q).unwrap();
        assert!(lin.equals(&ideal(&r, &["x1^2 + x2^2"])).unwrap());
    }

    #[test]
    fn bracket_power_rejects_foreign_characteristic() {
        let r = ring(3, 1);
        let q = FrobeniusPower::new(2, 1).unwrap();
        assert!(bracket_power(&ideal(&r, &["x1"]), q).is_err());
    }

    #[test]
    fn eth_root_examples() {
        let r = ring(2, 3);
        let root = eth_root(&ideal(&r, &["x1^3*x2*x3"]), 1).unwrap();
        assert!(root.equals(&ideal(&r, &["x1"])).unwrap());
        let r1 = RingContext::new(2, &["x"]).unwrap();
        assert!(eth_root(&ideal(&r1, &["x^2"]), 1)
            .unwrap()
            .equals(&ideal(&r1, &["x"]))
            .unwrap());
        let r2 = ring(2, 2);
        let root = eth_root(&ideal(&r2, &["x1^2*x2 + x1*x2^2"]), 1).unwrap();
        assert!(root.equals(&ideal(&r2, &["x1", "x2"])).unwrap());
    }

    #[test]
    fn trace_map_examples() {
        let r = RingContext::new(2, &["x"]).unwrap();
        let tr = CartierMap::trace(&r, 1).unwrap();
        assert_eq!(tr.apply(&poly(&r, "x")).unwrap(), Polynomial::one(&r));
        assert!(tr.apply(&poly(&r, "x^2")).unwrap().is_zero());
        assert_eq!(tr.apply(&poly(&r, "x^3")).unwrap(), poly(&r, "x"));
    }

    #[test]
    fn compatibility_examples() {
        let r = ring(2, 2);
        let m = CartierMap::new(poly(&r, "x1*x2"), 1).unwrap();
        let j = ideal(&r, &["x1"]);
        assert!(is_compatible(&j, &m).unwrap());
        assert!(is_compatible_by_bracket(&j, &m).unwrap());
        let k = ideal(&r, &["x1 + x2"]);
        assert!(!is_compatible(&k, &m).unwrap());
        assert!(!is_compatible_by_bracket(&k, &m).unwrap());
    }

    #[test]
    fn fedder_examples() {
        let r = ring(2, 4);
        let i = ideal(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let m = CartierMap::new(poly(&r, "x1*x2*x3*x4"), 1).unwrap();
        let rep = fedder_check(&i, &m).unwrap();
        assert_eq!(
            rep,
            FedderReport {
                in_colon: true,
                outside_mq: true,
                surjective: true
            }
        );
        let tr = CartierMap::trace(&r, 1).unwrap();
        assert!(!fedder_check(&ideal(&r, &["x1"]), &tr).unwrap().in_colon);
        let deep = CartierMap::new(poly(&r, "x1^2*x2 + x3^3*x4"), 1).unwrap();
        assert!(!fedder_check(&i, &deep).unwrap().outside_mq);
    }

    #[test]
    fn stable_closure_examples() {
        let r = ring(2, 4);
        let m = CartierMap::new(poly(&r, "x1*x2*x3*x4"), 1).unwrap();
        let c1 = stable_closure(&m, &poly(&r, "x1")).unwrap();
        assert!(c1.equals(&ideal(&r, &["x1"])).unwrap());
        let c2 = stable_closure(&m, &poly(&r, "x1*x2")).unwrap();
        assert!(c2.equals(&ideal(&r, &["x1*x2"])).unwrap());
        let c3 = stable_closure(&m, &Polynomial::one(&r)).unwrap();
        assert!(c3.is_unit().unwrap());
        assert!(stable_closure(&m, &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn stable_closure_grows() {
        // trace map on F_2[x]: I_1(x^3) = (x), so (x^3) grows to (x) and then to (1)
        let r = RingContext::new(2, &["x"]).unwrap();
        let tr = CartierMap::trace(&r, 1).unwrap();
        let closure = stable_closure(&tr, &poly(&r, "x^3")).unwrap();
        assert!(closure.is_unit().unwrap());
    }
}
