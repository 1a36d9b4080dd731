//! Simplicial complexes and the combinatorial path for Stanley-Reisner rings.
//!
//! For a square-free monomial ideal `I = I_Δ` and the Cartier map given by
//! `z = (x_1 ⋯ x_n)^{q-1}`, the compatible primes are exactly the ideals
//! generated by variables, the minimal primes of `I` are the facet complements
//! `P_{F^c}`, and the test ideal is generated by the facet monomials `x_F`.
//! Faces are `u64` bitmasks: bit `i - 1` stands for vertex `i`.

mod monomial_ideal;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frobenius::{CartierMap, FrobeniusPower};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, RingContext};

/// Vertex-count limit of the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// Default bound on `n` for the `2^n` prime enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// A simplicial complex on `[n]`, stored as its facets.
///
/// `{∅}` (only the empty face) is allowed; the void complex is not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from any list of faces: duplicates and faces
    /// contained in other faces are dropped.
    pub fn new(n: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidComplex(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        let mut faces: Vec<u64> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(Error::InvalidComplex("no faces given".into()));
        }
        if let Some(bad) = faces.iter().find(|&&f| f & !full_mask(n) != 0) {
            return Err(Error::InvalidComplex(format!(
                "face {:?} has a vertex outside 1..={n}",
                vertices(*bad)
            )));
        }
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| g & f == f) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|&f| vertices(f));
        Ok(Self { n, facets })
    }

    /// Faces given as 1-based vertex lists.
    pub fn from_vertex_lists(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            let mut mask = 0u64;
            for &v in face {
                if v == 0 || v > n || v > MAX_VERTICES {
                    return Err(Error::InvalidComplex(format!(
                        "vertex {v} outside 1..={n}"
                    )));
                }
                mask |= 1 << (v - 1);
            }
            masks.push(mask);
        }
        Self::new(n, masks)
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, [full_mask(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices(f)).collect()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// `d - 1` where `d` is the largest facet size; `-1` for `{∅}`.
    pub fn dimension(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32)
            .max()
            .unwrap_or(0)
            - 1
    }

    /// Minimal non-faces, which generate the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let complements: Vec<u64> = self.facets.iter().map(|&f| !f & full_mask(self.n)).collect();
        monomial_ideal::minimal_transversals(&complements)
    }

    fn check_ring(&self, ring: &RingContext) -> Result<()> {
        if ring.nvars() == self.n {
            Ok(())
        } else {
            Err(Error::InvalidComplex(format!(
                "complex on {} vertices used with a ring in {} variables",
                self.n,
                ring.nvars()
            )))
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} facets=", self.n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let vs: Vec<String> = vertices(*face).iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", vs.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;

    /// Parses `n=<k> facets={1,2},{3,4}`; `facets={}` is the complex `{∅}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidComplex(msg.to_string());
        let s = s.trim();
        let rest = s.strip_prefix("n=").ok_or_else(|| bad("expected `n=<k>`"))?;
        let (n_text, rest) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| bad("expected `facets=` after the vertex count"))?;
        let n: usize = n_text
            .parse()
            .map_err(|_| bad(&format!("invalid vertex count `{n_text}`")))?;
        let body = rest
            .trim()
            .strip_prefix("facets=")
            .ok_or_else(|| bad("expected `facets=`"))?;
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut faces = Vec::new();
        let mut chunks = body.as_str();
        loop {
            let inner_start = chunks.strip_prefix('{').ok_or_else(|| bad("expected `{`"))?;
            let (inner, after) = inner_start
                .split_once('}')
                .ok_or_else(|| bad("unbalanced `{`"))?;
            let mut face = Vec::new();
            if !inner.is_empty() {
                for v in inner.split(',') {
                    face.push(
                        v.parse::<usize>()
                            .map_err(|_| bad(&format!("invalid vertex `{v}`")))?,
                    );
                }
            }
            faces.push(face);
            if after.is_empty() {
                break;
            }
            chunks = after.strip_prefix(',').ok_or_else(|| bad("expected `,` between faces"))?;
        }
        Self::from_vertex_lists(n, &faces)
    }
}

/// Face counts of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVectorReport {
    /// `(f_0, ..., f_{d-1})`; `f_{-1} = 1` is implicit.
    pub f_vector: Vec<u64>,
    pub f_max: usize,
    pub dimension: i32,
}

/// Compatible-prime bookkeeping for a square-free monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePrimesReport {
    pub q: u32,
    /// Every nonempty variable subset, in Gray-code order.
    pub all_variable_primes: Vec<u64>,
    pub containing_i: Vec<u64>,
    /// Facet complements; `0` stands for the zero ideal.
    pub minimal_primes: Vec<u64>,
    pub retained: Vec<u64>,
    /// The whole ring is compatible too; it is flagged rather than listed.
    pub includes_unit_ideal: bool,
}

/// The complex of faces `F` with `x_F ∉ I`.
pub fn complex_from_ideal(ideal: &Ideal) -> Result<SimplicialComplex> {
    let n = ideal.ring().nvars();
    let mut edges = Vec::new();
    for g in ideal.groebner_basis()? {
        match g.terms() {
            [(m, 1)] if m.is_square_free() => edges.push(m.support()),
            _ => return Err(Error::NotSquareFreeMonomial(format!("generator {g}"))),
        }
    }
    let covers = monomial_ideal::minimal_transversals(&edges);
    if covers.is_empty() {
        return Err(Error::InvalidComplex("the unit ideal has no faces".into()));
    }
    SimplicialComplex::new(n, covers.iter().map(|&c| !c & full_mask(n)))
}

/// The Stanley-Reisner ideal `(x_F : F ∉ Δ)`, generated by minimal non-faces.
pub fn ideal_from_complex(ring: &Arc<RingContext>, complex: &SimplicialComplex) -> Result<Ideal> {
    complex.check_ring(ring)?;
    let n = ring.nvars();
    let gens = monomial_ideal::minimalize(
        complex
            .minimal_nonfaces()
            .into_iter()
            .map(|m| Monomial::from_support(n, m))
            .collect(),
    );
    Ok(Ideal::monomial(ring, gens))
}

pub fn f_report(complex: &SimplicialComplex) -> FVectorReport {
    let mut faces: HashSet<u64> = HashSet::new();
    for &facet in &complex.facets {
        // every nonempty subset of the facet
        let mut sub = facet;
        while sub != 0 {
            faces.insert(sub);
            sub = (sub - 1) & facet;
        }
    }
    let d = (complex.dimension() + 1) as usize;
    let mut f_vector = vec![0u64; d];
    for face in faces {
        f_vector[face.count_ones() as usize - 1] += 1;
    }
    FVectorReport {
        f_vector,
        f_max: complex.facets.len(),
        dimension: complex.dimension(),
    }
}

/// Facet complements `F^c`, in facet order: `I_Δ = ⋂ P_{F^c}`.
pub fn sr_primary_decomposition(complex: &SimplicialComplex) -> Vec<u64> {
    let all = full_mask(complex.n);
    complex.facets.iter().map(|&f| !f & all).collect()
}

/// `(I^{[q]} : I) = ⋂_k (P_k^{[q]} + (x^{α_k})^{q-1})` over the primary
/// components `P_k` of a square-free monomial ideal.
pub fn boix_colon(ideal: &Ideal, q: FrobeniusPower) -> Result<Ideal> {
    let ring = ideal.ring();
    if ring.characteristic() != q.p() {
        return Err(Error::NotPowerOfCharacteristic {
            q: q.q() as u64,
            p: ring.characteristic(),
        });
    }
    let complex = complex_from_ideal(ideal)?;
    let n = ring.nvars();
    let mut acc: Option<Vec<Monomial>> = None;
    for alpha in sr_primary_decomposition(&complex) {
        let mut gens: Vec<Monomial> = (0..n)
            .filter(|i| alpha >> i & 1 == 1)
            .map(|i| Monomial::var(n, i).scale(q.q()))
            .collect::<Result<_>>()?;
        gens.push(Monomial::from_support(n, alpha).scale(q.q() - 1)?);
        let gens = monomial_ideal::minimalize(gens);
        acc = Some(match acc {
            None => gens,
            Some(a) => monomial_ideal::intersect(&a, &gens),
        });
    }
    let gens = acc.expect("complexes have at least one facet");
    Ok(Ideal::monomial(ring, gens))
}

/// The Cartier map with `z = (x_1 ⋯ x_n)^{q-1}`.
pub fn default_cartier(
    ring: &Arc<RingContext>,
    complex: &SimplicialComplex,
    e: u32,
) -> Result<CartierMap> {
    complex.check_ring(ring)?;
    let q = FrobeniusPower::for_ring(ring, e)?;
    let z = Monomial::from_support(ring.nvars(), full_mask(ring.nvars())).scale(q.q() - 1)?;
    CartierMap::with_power(Polynomial::monomial(ring, z, 1), q)
}

/// Enumerates the variable primes for `I_Δ` and sorts them into those
/// containing `I`, the minimal primes, and the rest.
pub fn sr_compatible_primes(ideal: &Ideal, e: u32, cap: usize) -> Result<CompatiblePrimesReport> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > cap || n >= 64 {
        return Err(Error::EnumerationCap { n, cap });
    }
    let q = FrobeniusPower::for_ring(ring, e)?;
    let complex = complex_from_ideal(ideal)?;
    let nonfaces = complex.minimal_nonfaces();
    let minimal_primes = sr_primary_decomposition(&complex);

    let all_variable_primes: Vec<u64> = (1u64..1 << n).map(|k| k ^ (k >> 1)).collect();
    let containing_i: Vec<u64> = all_variable_primes
        .iter()
        .copied()
        .filter(|&s| nonfaces.iter().all(|&g| g & s != 0))
        .collect();
    let retained = containing_i
        .iter()
        .copied()
        .filter(|s| !minimal_primes.contains(s))
        .collect();
    Ok(CompatiblePrimesReport {
        q: q.q(),
        all_variable_primes,
        containing_i,
        minimal_primes,
        retained,
        includes_unit_ideal: true,
    })
}

/// How [`sr_test_ideal`] computes its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestIdealAlgorithm {
    /// `(x_F : F a facet)` directly.
    Facet,
    /// Intersect the retained compatible primes and reduce modulo `I_Δ`.
    Intersection,
}

impl FromStr for TestIdealAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "facet" => Ok(Self::Facet),
            "intersection" => Ok(Self::Intersection),
            _ => Err(format!("unknown algorithm `{s}` (facet | intersection)")),
        }
    }
}

/// The test ideal of `(S/I_Δ, φ)` for the default Cartier map, returned as
/// monomial generators of its preimage that do not lie in `I_Δ`.
pub fn sr_test_ideal(
    ring: &Arc<RingContext>,
    complex: &SimplicialComplex,
    algorithm: TestIdealAlgorithm,
) -> Result<Ideal> {
    complex.check_ring(ring)?;
    let n = ring.nvars();
    match algorithm {
        TestIdealAlgorithm::Facet => Ok(Ideal::monomial(
            ring,
            monomial_ideal::minimalize(
                complex
                    .facets
                    .iter()
                    .map(|&f| Monomial::from_support(n, f))
                    .collect(),
            ),
        )),
        TestIdealAlgorithm::Intersection => {
            let sr = ideal_from_complex(ring, complex)?;
            let report = sr_compatible_primes(&sr, 1, DEFAULT_ENUMERATION_CAP.max(n))?;
            let mut acc = vec![Monomial::one(n)];
            for &prime in &report.retained {
                let gens: Vec<Monomial> = (0..n)
                    .filter(|i| prime >> i & 1 == 1)
                    .map(|i| Monomial::var(n, i))
                    .collect();
                acc = monomial_ideal::intersect(&acc, &gens);
            }
            let sr_gens: Vec<Monomial> = sr
                .generators()
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero").clone())
                .collect();
            let survivors: Vec<Monomial> = acc
                .into_iter()
                .filter(|m| !monomial_ideal::contains(&sr_gens, m))
                .collect();
            Ok(Ideal::monomial(ring, survivors))
        }
    }
}

/// `f_max(Δ)`: the number of facets.
pub fn tightness_bound(complex: &SimplicialComplex) -> usize {
    complex.facets.len()
}

/// Renders a variable subset as an ideal, e.g. `(x1, x3)`; `0` is `(0)`.
pub fn format_variable_prime(ring: &RingContext, mask: u64) -> String {
    if mask == 0 {
        return "(0)".into();
    }
    let names: Vec<&str> = (0..ring.nvars())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| ring.var_names()[i].as_str())
        .collect();
    format!("({})", names.join(", "))
}
