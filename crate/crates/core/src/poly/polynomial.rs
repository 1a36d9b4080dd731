use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::frobenius_exponent;
use super::ring::same_ring;
use super::{Monomial, RingContext};

/// A sparse polynomial over `F_p`.
///
/// Terms are kept sorted in strictly descending order for the ring's monomial
/// order, with coefficients in `[1, p)`. That canonical form makes structural
/// equality coincide with polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingContext>, c: i64) -> Self {
        let c = ring.field().reduce_i64(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<RingContext>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index), 1)
    }

    pub fn monomial(ring: &Arc<RingContext>, m: Monomial, c: u32) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let c = c % ring.characteristic();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(ring: &Arc<RingContext>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let field = *ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            let c = c % field.characteristic();
            let slot = acc.entry(m).or_insert(0);
            *slot = field.add(*slot, c);
        }
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<RingContext>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == std::cmp::Ordering::Greater));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, u32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A single term (coefficient arbitrary).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |(_, c)| *c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or(0, |(_, c)| *c)
    }

    pub fn scale(&self, c: u32) -> Self {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(self.ring.field().inv(*c)),
        }
    }

    /// `self + c * m * other`, merging two sorted term lists.
    pub fn add_scaled_shifted(&self, c: u32, m: &Monomial, other: &Polynomial) -> Result<Self> {
        check_ring(self, other)?;
        let field = *self.ring.field();
        let order = self.ring.order();
        let c = c % field.characteristic();
        if c == 0 || other.is_zero() {
            return Ok(self.clone());
        }
        let mut shifted = Vec::with_capacity(other.terms.len());
        for (t, a) in &other.terms {
            shifted.push((t.mul(m)?, field.mul(*a, c)));
        }
        let mut out = Vec::with_capacity(self.terms.len() + shifted.len());
        let mut left = self.terms.iter().peekable();
        let mut right = shifted.into_iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some((ml, _)), Some((mr, _))) => match order.compare(ml, mr) {
                    std::cmp::Ordering::Greater => out.push(left.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(right.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (m, a) = left.next().unwrap();
                        let (_, b) = right.next().unwrap();
                        let s = field.add(*a, b);
                        if s != 0 {
                            out.push((m.clone(), s));
                        }
                    }
                },
                (Some(_), None) => out.push(left.next().unwrap().clone()),
                (None, Some(_)) => out.push(right.next().unwrap()),
                (None, None) => break,
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn mul_monomial(&self, c: u32, m: &Monomial) -> Result<Self> {
        Self::zero(&self.ring).add_scaled_shifted(c, m, self)
    }

    /// Product of two polynomials over the same ring.
    pub fn mul(&self, other: &Polynomial) -> Result<Self> {
        check_ring(self, other)?;
        let field = *self.ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let slot = acc.entry(ma.mul(mb)?).or_insert(0);
                *slot = field.add(*slot, field.mul(*a, *b));
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    /// Repeated multiplication; `pow(0)` is 1.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The Frobenius power `f^q` for `q = p^e`, `e >= 1`.
    ///
    /// Computed termwise: `(sum c_a x^a)^q = sum c_a^q x^{qa}` and `c^q = c` in `F_p`.
    pub fn frobenius_power(&self, q: u64) -> Result<Self> {
        let p = self.ring.characteristic();
        if q == 1 {
            return Err(Error::ZeroFrobeniusExponent);
        }
        frobenius_exponent(p, q).ok_or(Error::NotPowerOfCharacteristic { q, p })?;
        let q = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.scale(q)?, *c));
        }
        // scaling all exponents by q preserves every monomial order used here
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Self>> {
        check_ring(self, d)?;
        let Some((lm, lc)) = d.leading_term() else {
            return Err(Error::ZeroArgument("divisor"));
        };
        let field = *self.ring.field();
        let lc_inv = field.inv(*lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let Some(t) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let coeff = field.mul(c, lc_inv);
            rest = rest.add_scaled_shifted(field.neg(coeff), &t, d)?;
            quotient.push((t, coeff));
        }
        Ok(Some(Self {
            ring: self.ring.clone(),
            terms: quotient,
        }))
    }

    /// The same polynomial viewed in a ring with the same variables but
    /// possibly another order.
    pub fn to_ring(&self, ring: &Arc<RingContext>) -> Result<Self> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.ring.field() {
            return Err(Error::MixedRings);
        }
        if ring.order() == self.ring.order() {
            return Ok(Self {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Self {
            ring: ring.clone(),
            terms,
        })
    }

    /// Embeds into `ring`, whose variables are `k` new ones followed by ours.
    pub(crate) fn embed_front(&self, ring: &Arc<RingContext>, k: usize) -> Self {
        debug_assert_eq!(ring.nvars(), self.ring.nvars() + k);
        Self::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = Monomial::one(k);
                e.exponents_mut().extend_from_slice(m.exponents());
                (e, *c)
            }),
        )
    }

    /// Inverse of [`embed_front`](Self::embed_front); `None` if an auxiliary
    /// variable occurs.
    pub(crate) fn restrict_front(&self, ring: &Arc<RingContext>, k: usize) -> Option<Self> {
        if self
            .terms
            .iter()
            .any(|(m, _)| m.exponents()[..k].iter().any(|&e| e != 0))
        {
            return None;
        }
        Some(Self::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[k..]), *c)),
        ))
    }

    /// Parses the text grammar `[coeff*]var[^exp]*...` joined by `+`/`-`.
    pub fn parse(ring: &Arc<RingContext>, text: &str) -> Result<Self> {
        super::parse::parse_polynomial(ring, text)
    }
}

fn check_ring(a: &Polynomial, b: &Polynomial) -> Result<()> {
    if same_ring(&a.ring, &b.ring) {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        self.add_scaled_shifted(1, &one, rhs)
            .expect("polynomial addition across rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        let minus_one = self.ring.field().neg(1);
        self.add_scaled_shifted(minus_one, &one, rhs)
            .expect("polynomial subtraction across rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

fn write_monomial(
    f: &mut impl fmt::Write,
    names: &[String],
    m: &Monomial,
) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.var_names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if *c != 1 {
                    write!(f, "{c}*")?;
                }
                write_monomial(f, names, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
