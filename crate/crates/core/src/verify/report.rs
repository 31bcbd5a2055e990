use std::fmt::Display;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    #[serde(serialize_with = "ordered_params")]
    pub params: Vec<(String, u32)>,
    pub passed: bool,
    /// Computed value, for reports that carry one (the table audit does).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    /// First disagreement found, with both sides rendered.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn ordered_params<S: Serializer>(params: &[(String, u32)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(params.len()))?;
    for (k, v) in params {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl IdentityReport {
    pub fn new(identity: &str, params: &[(&str, u32)]) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            passed: true,
            value: None,
            witness: None,
        }
    }

    pub fn param(&self, name: &str) -> Option<u32> {
        self.params.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.record_failure(witness.into());
        self
    }

    fn record_failure(&mut self, witness: String) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness);
        }
    }

    /// Marks the report failed unless `cond` holds. Only the first failure is kept.
    pub fn expect(&mut self, cond: bool, witness: impl FnOnce() -> String) {
        if !cond {
            self.record_failure(witness());
        }
    }

    pub fn expect_eq<T: PartialEq + Display>(&mut self, what: &str, lhs: &T, rhs: &T) {
        self.expect(lhs == rhs, || format!("{what}: lhs = {lhs}, rhs = {rhs}"));
    }

    /// Folds a fallible step into the report; an error becomes the witness.
    pub fn expect_ok<T, E: Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.record_failure(format!("{what}: {e}"));
                None
            }
        }
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_wins() {
        let mut r = IdentityReport::new("demo", &[("d", 2), ("n", 3)]);
        r.expect_eq("a", &1, &1);
        assert!(r.passed);
        r.expect_eq("b", &1, &2);
        r.expect_eq("c", &3, &4);
        assert!(!r.passed);
        assert_eq!(r.witness.as_deref(), Some("b: lhs = 1, rhs = 2"));
        assert_eq!(r.param("n"), Some(3));
        assert_eq!(r.params_string(), "d=2 n=3");
    }
}
