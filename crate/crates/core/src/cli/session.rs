//! The line-oriented session format.
//!
//! ```text
//! # comment
//! char 2
//! vars x1 x2 x3 x4
//! ideal I = x1*x3; x1*x4; x2*x3; x2*x4
//! poly z = x1*x2*x3*x4
//! ideal T = P & Q
//! complex D n=4 facets={1,2},{3,4}
//! ```
//!
//! `&` between ideal operands denotes intersection. When `vars` is omitted
//! the ring is `x1..xn` with `n` taken from the first complex.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::groebner::Ideal;
use crate::poly::{PrimeField, Polynomial, RingContext};
use crate::stanley_reisner::{ideal_from_complex, SimplicialComplex};

/// A value bound to a session name.
#[derive(Clone, Debug)]
pub enum Binding {
    Ideal(Ideal),
    Poly(Polynomial),
    Complex(SimplicialComplex),
}

/// A session error, located at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SessionError {}

/// A ring plus named ideals, polynomials and complexes over it.
#[derive(Clone, Debug)]
pub struct Session {
    ring: Arc<RingContext>,
    bindings: BTreeMap<String, Binding>,
    notices: Vec<String>,
}

/// Why an operand could not be resolved against a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolveError {
    /// 0-based offset into the operand text.
    pub offset: usize,
    pub message: String,
}

impl From<Error> for ResolveError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { column, message } => ResolveError {
                offset: column.saturating_sub(1),
                message,
            },
            other => ResolveError {
                offset: 0,
                message: other.to_string(),
            },
        }
    }
}

impl Session {
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    /// Remarks on accepted but normalised input, such as pruned faces.
    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.keys().map(String::as_str)
    }

    /// A bound polynomial or inline polynomial text.
    pub fn resolve_poly(&self, text: &str) -> Result<Polynomial, ResolveError> {
        resolve_poly(&self.ring, &self.bindings, text)
    }

    /// A bound ideal, polynomial or complex (its Stanley-Reisner ideal),
    /// inline generators separated by `;`, or an `&`-intersection of those.
    pub fn resolve_ideal(&self, text: &str) -> Result<Ideal, ResolveError> {
        resolve_ideal(&self.ring, &self.bindings, text)
    }

    /// A bound complex or inline `n=.. facets=..` text; `None` when the
    /// text denotes something else.
    pub fn resolve_complex(&self, text: &str) -> Option<Result<SimplicialComplex, ResolveError>> {
        let t = text.trim();
        if let Some(Binding::Complex(d)) = self.bindings.get(t) {
            return Some(Ok(d.clone()));
        }
        if t.starts_with("n=") {
            return Some(t.parse().map_err(ResolveError::from));
        }
        None
    }
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn resolve_poly(
    ring: &Arc<RingContext>,
    bindings: &BTreeMap<String, Binding>,
    text: &str,
) -> Result<Polynomial, ResolveError> {
    match bindings.get(text.trim()) {
        Some(Binding::Poly(p)) => Ok(p.clone()),
        Some(_) => Err(ResolveError {
            offset: leading_ws(text),
            message: format!("`{}` is not a polynomial", text.trim()),
        }),
        None => Ok(Polynomial::parse(ring, text)?),
    }
}

fn resolve_ideal(
    ring: &Arc<RingContext>,
    bindings: &BTreeMap<String, Binding>,
    text: &str,
) -> Result<Ideal, ResolveError> {
    let shift = |mut e: ResolveError, by: usize| {
        e.offset += by;
        e
    };
    let mut acc: Option<Ideal> = None;
    let mut start = 0;
    for part in text.split('&') {
        let operand = resolve_operand(ring, bindings, part).map_err(|e| shift(e, start))?;
        acc = Some(match acc {
            None => operand,
            Some(a) => a.intersect(&operand).map_err(|e| shift(e.into(), start))?,
        });
        start += part.len() + 1;
    }
    Ok(acc.expect("split yields at least one part"))
}

fn resolve_operand(
    ring: &Arc<RingContext>,
    bindings: &BTreeMap<String, Binding>,
    text: &str,
) -> Result<Ideal, ResolveError> {
    match bindings.get(text.trim()) {
        Some(Binding::Ideal(i)) => return Ok(i.clone()),
        Some(Binding::Poly(p)) => return Ok(Ideal::new(ring, vec![p.clone()])?),
        Some(Binding::Complex(d)) => return Ok(ideal_from_complex(ring, d)?),
        None => {}
    }
    if text.trim().is_empty() {
        return Err(ResolveError {
            offset: 0,
            message: "empty ideal operand".into(),
        });
    }
    let mut gens = Vec::new();
    let mut start = 0;
    for piece in text.split(';') {
        let g = resolve_poly(ring, bindings, piece).map_err(|mut e| {
            e.offset += start;
            e
        })?;
        gens.push(g);
        start += piece.len() + 1;
    }
    Ok(Ideal::new(ring, gens)?)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses and validates a session; every polynomial is canonicalised.
pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let mut field: Option<u32> = None;
    let mut ring: Option<Arc<RingContext>> = None;
    let mut bindings: BTreeMap<String, Binding> = BTreeMap::new();
    let mut notices = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let err = |column: usize, message: String| SessionError {
            line: line_no,
            column: column + 1,
            message,
        };
        let indent = leading_ws(line);
        let body = line.trim_start();
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest_at = indent + keyword.len() + (body.len() - keyword.len() - rest.len());
        let rest_at = rest_at.min(line.len());

        match keyword {
            "char" => {
                if field.is_some() {
                    return Err(err(indent, "duplicate `char` line".into()));
                }
                let value = rest.trim();
                let p: u64 = value.parse().map_err(|_| {
                    err(rest_at + leading_ws(rest), format!("invalid characteristic `{value}`"))
                })?;
                let f = PrimeField::new(p).map_err(|e| err(rest_at + leading_ws(rest), e.to_string()))?;
                field = Some(f.characteristic());
            }
            "vars" => {
                let p = field.ok_or_else(|| err(indent, "`vars` before `char`".into()))?;
                if ring.is_some() {
                    return Err(err(indent, "the ring is already fixed".into()));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let r = RingContext::new(p as u64, &names).map_err(|e| err(rest_at, e.to_string()))?;
                ring = Some(r);
            }
            "ideal" | "poly" | "complex" => {
                let name_at = rest_at + leading_ws(rest);
                let rest = rest.trim_start();
                let (name, value, value_at) = if keyword == "complex" {
                    let (name, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    (name, value, name_at + name.len() + (rest.len() - name.len() - value.len()))
                } else {
                    let (name, value) = rest
                        .split_once('=')
                        .ok_or_else(|| err(name_at, format!("expected `{keyword} <name> = ...`")))?;
                    (name.trim(), value, name_at + rest.find('=').unwrap() + 1)
                };
                if !is_identifier(name) {
                    return Err(err(name_at, format!("invalid name `{name}`")));
                }
                if bindings.contains_key(name) {
                    return Err(err(name_at, format!("duplicate name {name}")));
                }
                let p = field.ok_or_else(|| err(indent, format!("`{keyword}` before `char`")))?;
                if keyword == "complex" {
                    let d: SimplicialComplex = value
                        .parse()
                        .map_err(|e: Error| err(value_at + leading_ws(value), e.to_string()))?;
                    if ring.is_none() {
                        ring = Some(
                            RingContext::standard(p as u64, d.n()).map_err(|e| err(value_at, e.to_string()))?,
                        );
                    }
                    let r = ring.as_ref().unwrap();
                    if r.nvars() != d.n() {
                        return Err(err(
                            value_at + leading_ws(value),
                            format!("complex on {} vertices in a ring with {} variables", d.n(), r.nvars()),
                        ));
                    }
                    if r.var_index(name).is_some() {
                        return Err(err(name_at, format!("name {name} is a variable")));
                    }
                    let given = value.matches('{').count();
                    if given != d.facets().len() {
                        notices.push(format!(
                            "line {line_no}: complex {name}: kept {} facets of {given} faces given",
                            d.facets().len()
                        ));
                    }
                    bindings.insert(name.to_string(), Binding::Complex(d));
                    continue;
                }
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err(indent, format!("`{keyword}` before `vars`")))?;
                if r.var_index(name).is_some() {
                    return Err(err(name_at, format!("name {name} is a variable")));
                }
                let locate = |e: ResolveError| err(value_at + e.offset, e.message);
                let binding = if keyword == "ideal" {
                    Binding::Ideal(resolve_ideal(r, &bindings, value).map_err(locate)?)
                } else {
                    Binding::Poly(resolve_poly(r, &bindings, value).map_err(locate)?)
                };
                bindings.insert(name.to_string(), binding);
            }
            other => return Err(err(indent, format!("unknown directive `{other}`"))),
        }
    }

    let ring = match (ring, field) {
        (Some(r), _) => r,
        (None, Some(_)) => {
            return Err(SessionError {
                line: last_line.max(1),
                column: 1,
                message: "missing `vars` line".into(),
            })
        }
        (None, None) => {
            return Err(SessionError {
                line: last_line.max(1),
                column: 1,
                message: "missing `char` line".into(),
            })
        }
    };
    Ok(Session {
        ring,
        bindings,
        notices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_EDGES: &str = "char 2\nvars x1 x2 x3 x4\nideal I = x1*x3; x1*x4; x2*x3; x2*x4\n";

    #[test]
    fn binds_ideal() {
        let s = parse_session(TWO_EDGES).unwrap();
        match s.get("I") {
            Some(Binding::Ideal(i)) => assert_eq!(i.generators().len(), 4),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(s.ring().nvars(), 4);
    }

    #[test]
    fn composite_characteristic() {
        let e = parse_session("char 4\nvars x\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert_eq!(e.message, "4 is not prime");
    }

    #[test]
    fn unknown_variable() {
        let e = parse_session("char 2\nvars x1 x2 x3 x4\nideal J = x1^2 + x9\n").unwrap_err();
        assert_eq!(e.message, "unknown variable x9");
        assert_eq!((e.line, e.column), (3, 18));
    }

    #[test]
    fn duplicate_and_reserved_names() {
        let e = parse_session("char 2\nvars x y\npoly f = x\nideal f = y\n").unwrap_err();
        assert_eq!(e.message, "duplicate name f");
        assert_eq!(e.line, 4);
        let e = parse_session("char 2\nvars x y\npoly x = y\n").unwrap_err();
        assert_eq!(e.message, "name x is a variable");
    }

    #[test]
    fn comments_names_and_intersections() {
        let text = "# ring\nchar 2\nvars x y\npoly f = x*y # product\nideal P = x\nideal Q = y\nideal T = P & Q\nideal U = f; x + y\n";
        let s = parse_session(text).unwrap();
        let t = s.resolve_ideal("T").unwrap();
        assert!(t.equals(&s.resolve_ideal("f").unwrap()).unwrap());
        assert_eq!(s.resolve_ideal("U").unwrap().generators().len(), 2);
        assert_eq!(s.resolve_ideal("x; y").unwrap().to_string(), "(x, y)");
    }

    #[test]
    fn complexes_fix_the_ring() {
        let s = parse_session("char 2\ncomplex D n=4 facets={1,2},{3,4}\n").unwrap();
        assert_eq!(s.ring().var_names().join(" "), "x1 x2 x3 x4");
        let i = s.resolve_ideal("D").unwrap();
        assert_eq!(i.generators().len(), 4);
        assert!(s.notices().is_empty());
        let pruned = parse_session("char 2\ncomplex D n=3 facets={1},{1,2},{3}\n").unwrap();
        assert_eq!(pruned.notices(), ["line 2: complex D: kept 2 facets of 3 faces given"]);
        let e = parse_session("char 2\nvars x y\ncomplex D n=3 facets={1}\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn structural_errors() {
        assert!(parse_session("vars x\n").is_err());
        assert!(parse_session("char 2\n").is_err());
        assert!(parse_session("char 2\nvars x\nideal I x\n").is_err());
        assert!(parse_session("char 2\nvars x\nfoo\n").is_err());
        assert!(parse_session("char 2\nvars x\nchar 3\n").is_err());
    }
}
