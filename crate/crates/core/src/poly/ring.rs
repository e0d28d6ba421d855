use std::sync::Arc;

use crate::error::{Error, Result};

/// An ambient polynomial ring over the rationals, identified by its ordered
/// list of variable names.
///
/// Rings are compared by value: two rings with the same variable list are the
/// same ring. All polynomial operations check ring agreement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for v in &vars {
            if !valid_var_name(v) {
                return Err(Error::BadVariables(format!("invalid variable name `{v}`")));
            }
        }
        for i in 0..vars.len() {
            if vars[i + 1..].contains(&vars[i]) {
                return Err(Error::BadVariables(format!(
                    "duplicate variable name `{}`",
                    vars[i]
                )));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with the variables permuted: `perm[k]` is the index (in `self`)
    /// of the k-th variable of the new ring.
    pub fn permuted(&self, perm: &[usize]) -> Result<Arc<Self>> {
        if perm.len() != self.vars.len() {
            return Err(Error::BadVariables("permutation length mismatch".into()));
        }
        PolyRing::new(perm.iter().map(|&i| self.vars[i].clone()).collect())
    }

    /// Ring extended by fresh variables appended after the existing ones.
    pub fn extended<S: Into<String>>(&self, extra: Vec<S>) -> Result<Arc<Self>> {
        let mut vars = self.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        PolyRing::new(vars)
    }
}

pub fn same_ring(a: &PolyRing, b: &PolyRing) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "[{}] vs [{}]",
            a.vars.join(", "),
            b.vars.join(", ")
        )))
    }
}
