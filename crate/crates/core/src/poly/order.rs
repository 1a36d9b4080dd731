//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;

/// A monomial order tag. Variables are ranked `x_1 > x_2 > ... > x_n` in the
/// declared sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree-reverse-lexicographic.
    #[default]
    DegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Block order: degrevlex on the first `k` variables, ties broken by
    /// degrevlex on the remaining ones. Eliminates the first `k` variables.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => {
                let k = s
                    .strip_prefix("elim:")
                    .or_else(|| s.strip_prefix("elimination:"))
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1);
                k.map(MonomialOrder::Elimination)
                    .ok_or_else(|| format!("unknown monomial order `{s}`"))
            }
        }
    }
}
