//! Machine-readable results of exact identity checks.

use serde::{Deserialize, Serialize};

use crate::exact::Alpha;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One identity checked at one parameter point.
///
/// Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub alpha: String,
    pub mu: Option<String>,
    pub status: Status,
    /// Number of individual equalities that were compared.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates equality checks for a single identity and parameter point,
/// keeping the first violation.
pub struct Check {
    identity: String,
    n: usize,
    alpha: String,
    mu: Option<String>,
    checked: usize,
    counterexample: Option<String>,
}

impl Check {
    pub fn new(identity: impl Into<String>, n: usize, alpha: &Alpha) -> Self {
        Check {
            identity: identity.into(),
            n,
            alpha: alpha.to_string(),
            mu: None,
            checked: 0,
            counterexample: None,
        }
    }

    pub fn with_mu(mut self, mu: &Partition) -> Self {
        self.mu = Some(mu.to_string());
        self
    }

    /// Records one comparison; `detail` is only evaluated on failure.
    pub fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(detail());
        }
    }

    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        lhs: &T,
        rhs: &T,
        context: impl FnOnce() -> String,
    ) {
        let ok = lhs == rhs;
        self.expect(ok, || format!("{}: lhs {:?} != rhs {:?}", context(), lhs, rhs));
    }

    pub fn finish(self) -> IdentityReport {
        IdentityReport {
            identity: self.identity,
            n: self.n,
            alpha: self.alpha,
            mu: self.mu,
            status: if self.counterexample.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_violation_is_kept() {
        let mut c = Check::new("demo", 3, &Alpha::one());
        c.expect_eq(&1, &1, || "a".into());
        c.expect_eq(&1, &2, || "b".into());
        c.expect_eq(&3, &4, || "c".into());
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checked, 3);
        assert!(r.counterexample.unwrap().starts_with("b:"));
    }

    #[test]
    fn json_key_order_is_stable() {
        let r = Check::new("demo", 2, &Alpha::one())
            .with_mu(&"2".parse().unwrap())
            .finish();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"identity":"demo","n":2,"alpha":"1/1","mu":"2","status":"pass","checked":0}"#
        );
    }
}
