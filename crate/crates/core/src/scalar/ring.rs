use std::fmt;
use std::sync::Arc;

use super::ScalarError;

/// Ordered list of parameter names of a Laurent ring `Q[x1^±1, ..., xn^±1]`.
///
/// The empty ring is the rationals. Two rings are equal when their variable
/// lists are equal, regardless of allocation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn rationals() -> Self {
        Ring(Arc::from(Vec::<String>::new()))
    }

    pub fn new<I, S>(vars: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(ScalarError::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(ScalarError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring(Arc::from(vars)))
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The common ring of two operands. The rationals embed into every ring;
    /// any other difference is a mismatch.
    pub fn unify(&self, other: &Ring) -> Result<Ring, ScalarError> {
        if self.is_empty() || Arc::ptr_eq(&self.0, &other.0) {
            return Ok(other.clone());
        }
        if other.is_empty() || self == other {
            return Ok(self.clone());
        }
        Err(ScalarError::RingMismatch {
            left: self.to_string(),
            right: other.to_string(),
        })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(", "))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{self}")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
