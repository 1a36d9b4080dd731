//! Ideals of `R = S/I` presented by their preimages in `S`.

mod weights;

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{sort_for_display, Ideal};
use crate::poly::Polynomial;

/// An ideal of `S/I`, held as its preimage `J + I` together with a
/// minimal list of generators taken modulo `I`.
#[derive(Clone, Debug)]
pub struct QuotientIdeal {
    ambient: Ideal,
    preimage: Ideal,
    display_gens: Vec<Polynomial>,
}

impl QuotientIdeal {
    /// The ideal `I` of `S` defining the quotient.
    pub fn ambient(&self) -> &Ideal {
        &self.ambient
    }

    pub fn preimage(&self) -> &Ideal {
        &self.preimage
    }

    /// Generators not in `I`, none redundant modulo `I` and the others.
    pub fn display_gens(&self) -> &[Polynomial] {
        &self.display_gens
    }

    pub fn is_zero(&self) -> bool {
        self.display_gens.is_empty()
    }
}

impl fmt::Display for QuotientIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.display_gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.display_gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Normal forms modulo `I` of the reduced basis of `J + I`, minus those in `I`.
fn candidates(j: &Ideal, i: &Ideal) -> Result<(Ideal, Vec<Polynomial>)> {
    let sum = j.sum(i)?;
    let mut out = Vec::new();
    for g in sum.groebner_basis()? {
        let r = i.normal_form(g)?;
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    Ok((sum, sort_for_display(out)))
}

/// Greedily drops, in list order, any generator lying in the ideal of the
/// others plus `I`.
///
/// The survivors generate the same ideal modulo `I` and none is redundant.
/// For weight-homogeneous input their number is `μ`, whatever the order.
pub fn prune_generators(mut gens: Vec<Polynomial>, i: &Ideal) -> Result<Vec<Polynomial>> {
    let mut k = 0;
    while k < gens.len() {
        let mut others: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != k)
            .map(|(_, g)| g.clone())
            .collect();
        others.extend(i.generators().iter().cloned());
        let rest = Ideal::new(i.ring(), others)?;
        if rest.contains(&gens[k])? {
            gens.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(gens)
}

/// The image of `J` in `S/I`.
///
/// For weight-homogeneous input the display list has `μ` elements; otherwise
/// it is still an irredundant generating list, but its length carries no
/// local meaning.
pub fn image_mod(j: &Ideal, i: &Ideal) -> Result<QuotientIdeal> {
    let (preimage, cands) = candidates(j, i)?;
    let display_gens = prune_generators(cands, i)?;
    Ok(QuotientIdeal {
        ambient: i.clone(),
        preimage,
        display_gens,
    })
}

/// A positive weight vector for which `J + I` and `I` are homogeneous.
pub fn homogenizing_weights(j: &Ideal, i: &Ideal) -> Result<Option<Vec<u64>>> {
    let sum = j.sum(i)?;
    let polys: Vec<&Polynomial> = sum
        .groebner_basis()?
        .iter()
        .chain(i.groebner_basis()?)
        .collect();
    Ok(weights::find_weights(i.ring().nvars(), &polys))
}

/// `μ((J + I)/I)` with a minimal generating list, by Nakayama pruning.
///
/// Refuses input that is not homogeneous for any positive weight vector:
/// there, irredundance in `S` need not match minimality in the local ring.
pub fn minimal_generators(j: &Ideal, i: &Ideal) -> Result<(usize, Vec<Polynomial>)> {
    if homogenizing_weights(j, i)?.is_none() {
        return Err(Error::Inhomogeneous(format!(
            "{j} + {i} is not homogeneous for any positive weight vector"
        )));
    }
    let (_, cands) = candidates(j, i)?;
    let gens = prune_generators(cands, i)?;
    Ok((gens.len(), gens))
}

/// `J1 + I = J2 + I`.
pub fn equal_mod(j1: &Ideal, j2: &Ideal, i: &Ideal) -> Result<bool> {
    j1.sum(i)?.equals(&j2.sum(i)?)
}
