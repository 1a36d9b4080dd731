use std::sync::Arc;

use crate::error::{Error, Result};

use super::{MonomialOrder, PrimeField};

/// The ambient ring `S = F_p[x_1, ..., x_n]` together with the monomial order
/// its polynomials are sorted by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    /// A ring with the default degrevlex order.
    pub fn new<S: AsRef<str>>(p: u64, names: &[S]) -> Result<Arc<Self>> {
        Self::with_order(p, names, MonomialOrder::DegRevLex)
    }

    pub fn with_order<S: AsRef<str>>(
        p: u64,
        names: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if !valid_identifier(name) {
                return Err(Error::InvalidRing(format!("invalid variable name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k == 0 || k > names.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block {k} out of range for {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(Self { field, names, order }))
    }

    /// `n` variables named `x1, ..., xn`.
    pub fn standard(p: u64, n: usize) -> Result<Arc<Self>> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(p, &names)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same field and variables under another order.
    pub fn reordered(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Self {
            field: self.field,
            names: self.names.clone(),
            order,
        })
    }

    /// Prepends `k` fresh auxiliary variables and uses the elimination order
    /// for them.
    pub fn with_auxiliary_front(&self, k: usize) -> Arc<Self> {
        let mut names = Vec::with_capacity(self.names.len() + k);
        let mut tag = 0usize;
        while names.len() < k {
            let candidate = format!("_t{tag}");
            tag += 1;
            if !self.names.contains(&candidate) {
                names.push(candidate);
            }
        }
        names.extend(self.names.iter().cloned());
        Arc::new(Self {
            field: self.field,
            names,
            order: MonomialOrder::Elimination(k),
        })
    }
}

/// Rings are interchangeable when they agree in field, variables and order.
#[inline]
pub fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
