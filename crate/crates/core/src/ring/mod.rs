//! Polynomial rings `k[x_1, ..., x_n]`, monomial orders and Z^m-gradings.

mod grading;
mod monomial;
mod polynomial;

use std::fmt;
use std::sync::Arc;

pub use grading::{GradingMap, Homogeneity};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{write_monomial, Polynomial, Term};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// A coefficient field together with an ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: Field,
    variables: Vec<String>,
}

pub(crate) fn valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<S: Into<String>>(
        field: Field,
        variables: impl IntoIterator<Item = S>,
    ) -> Result<Arc<RingSpec>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            if !valid_variable_name(v) {
                return Err(Error::Usage(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::Usage(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingSpec { field, variables }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// A ring with `names.len()` auxiliary variables placed in front of the
    /// existing ones. Auxiliary names are made unique against the current ones.
    pub(crate) fn prepend_auxiliary(&self, names: &[&str]) -> Arc<RingSpec> {
        let mut variables: Vec<String> = Vec::with_capacity(names.len() + self.nvars());
        for base in names {
            let mut name = base.to_string();
            while self.variables.contains(&name) || variables.contains(&name) {
                name.push('_');
            }
            variables.push(name);
        }
        variables.extend(self.variables.iter().cloned());
        Arc::new(RingSpec {
            field: self.field,
            variables,
        })
    }

    /// Same field, variables permuted so that `perm[i]` names the old index of new variable `i`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Arc<RingSpec> {
        Arc::new(RingSpec {
            field: self.field,
            variables: perm.iter().map(|&i| self.variables[i].clone()).collect(),
        })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.variables.join(","))
    }
}

pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::Usage(format!("ring mismatch: {a} vs {b}")))
    }
}
