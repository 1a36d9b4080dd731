//! Test ideals from a list of candidate primes.
//!
//! For a surjective map on `R = S/I`, the compatible ideals of `R` correspond to
//! the compatible ideals of `S` containing `I`. Intersecting the compatible
//! primes that contain `I`, minus the minimal primes of `I`, gives a preimage
//! of the test ideal. Candidates are verified here, never discovered.

use crate::error::Result;
use crate::groebner::Ideal;

use super::{is_compatible, CartierMap};

/// Per-candidate verdicts of [`compatible_candidates`].
#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub compatible: Vec<bool>,
    pub contains_base: Vec<bool>,
    pub minimal: Vec<bool>,
    /// Index of an earlier candidate equal to this one, if any.
    pub duplicate_of: Vec<Option<usize>>,
    /// Indices kept for the intersection, first occurrence of each ideal only.
    pub retained: Vec<usize>,
    /// Intersection of the retained candidates; the unit ideal if none remain.
    pub intersection: Ideal,
}

/// Runs the candidate list through the compatibility filter.
///
/// When `minimal_primes` is `None` the minimal primes are taken to be the
/// inclusion-minimal compatible candidates containing `base`.
pub fn compatible_candidates(
    base: &Ideal,
    map: &CartierMap,
    candidates: &[Ideal],
    minimal_primes: Option<&[Ideal]>,
) -> Result<CandidateReport> {
    let n = candidates.len();
    let mut duplicate_of = vec![None; n];
    for i in 0..n {
        for j in 0..i {
            if duplicate_of[j].is_none() && candidates[i].equals(&candidates[j])? {
                duplicate_of[i] = Some(j);
                break;
            }
        }
    }

    let mut compatible = Vec::with_capacity(n);
    let mut contains_base = Vec::with_capacity(n);
    for c in candidates {
        compatible.push(is_compatible(c, map)?);
        contains_base.push(c.contains_ideal(base)?);
    }
    let eligible: Vec<usize> = (0..n).filter(|&i| compatible[i] && contains_base[i]).collect();

    let mut minimal = vec![false; n];
    match minimal_primes {
        Some(given) => {
            for &i in &eligible {
                for p in given {
                    if candidates[i].equals(p)? {
                        minimal[i] = true;
                        break;
                    }
                }
            }
        }
        None => {
            for &i in &eligible {
                let mut is_min = true;
                for &j in &eligible {
                    if i == j || duplicate_of[j].is_some() {
                        continue;
                    }
                    if candidates[i].contains_ideal(&candidates[j])?
                        && !candidates[j].contains_ideal(&candidates[i])?
                    {
                        is_min = false;
                        break;
                    }
                }
                minimal[i] = is_min;
            }
        }
    }

    let retained: Vec<usize> = eligible
        .into_iter()
        .filter(|&i| !minimal[i] && duplicate_of[i].is_none())
        .collect();
    let mut intersection = Ideal::unit(base.ring());
    for (k, &i) in retained.iter().enumerate() {
        intersection = if k == 0 {
            candidates[i].clone()
        } else {
            intersection.intersect(&candidates[i])?
        };
    }

    Ok(CandidateReport {
        compatible,
        contains_base,
        minimal,
        duplicate_of,
        retained,
        intersection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Polynomial, RingContext};

    #[test]
    fn two_point_example() {
        // I = (x1 x2): minimal primes (x1), (x2); retained (x1, x2)
        let r = RingContext::standard(2, 2).unwrap();
        let base = Ideal::parse(&r, &["x1*x2"]).unwrap();
        let z = Polynomial::parse(&r, "x1*x2").unwrap();
        let map = CartierMap::new(z, 1).unwrap();
        let candidates = vec![
            Ideal::variables(&r, 0b01),
            Ideal::variables(&r, 0b10),
            Ideal::variables(&r, 0b11),
            Ideal::parse(&r, &["x2", "x1"]).unwrap(),
        ];
        let report = compatible_candidates(&base, &map, &candidates, None).unwrap();
        assert_eq!(report.compatible, vec![true; 4]);
        assert_eq!(report.minimal, vec![true, true, false, false]);
        assert_eq!(report.duplicate_of, vec![None, None, None, Some(2)]);
        assert_eq!(report.retained, vec![2]);
        assert!(report.intersection.equals(&Ideal::variables(&r, 0b11)).unwrap());
    }

    #[test]
    fn empty_retained_list_gives_unit_ideal() {
        let r = RingContext::standard(2, 1).unwrap();
        let base = Ideal::parse(&r, &["x1"]).unwrap();
        let map = CartierMap::new(Polynomial::parse(&r, "1").unwrap(), 1).unwrap();
        let report = compatible_candidates(&base, &map, &[Ideal::variables(&r, 1)], None).unwrap();
        assert!(report.retained.is_empty());
        assert!(report.intersection.is_unit().unwrap());
    }
}
