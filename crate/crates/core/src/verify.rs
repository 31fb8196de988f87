//! The exact identity suite run by `kerov verify`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{int, Alpha, Scalar};
use crate::group::{character_table, orthogonality_check};
use crate::growth::{
    conditional_expectation_class_closed, conditional_expectation_closed,
    conditional_expectation_given_top, increment_second_moment_class,
    increment_second_moment_class_closed, increment_second_moment_closed,
    increment_second_moment_expect, kerov_constancy_check, martingale_check,
    martingale_check_class, record_statistic, record_statistic_closed, square_martingale_check,
    stationarity_check, transition_sum_check, uniform_syt_check, y_value,
};
use crate::jack::{
    stanley_branching_sum, theta_table, verify_basis_identities, verify_theta_recursions, MAX_DEGREE,
};
use crate::measures::{dim_alpha, jack_weight};
use crate::moments::{s_moment_bruteforce, s_moment_closed};
use crate::partition::{partitions_of, Partition};
use crate::report::{Check, IdentityReport};

/// Reports collected so far, plus the resource error that stopped the run
/// early, if any.
#[derive(Debug, Default)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
    pub resource_error: Option<Error>,
}

pub fn measure_checks(n: usize, alpha: &Alpha) -> Vec<IdentityReport> {
    let mut norm = Check::new("jack measure sums to one", n, alpha);
    let total: Scalar = partitions_of(n).map(|la| jack_weight(&la, alpha)).sum();
    norm.expect_eq(&total, &Scalar::one(), || "total".into());
    let mut dual = Check::new("transpose duality of jack measure", n, alpha);
    let mut stanley = Check::new("stanley branching identity", n, alpha);
    for la in partitions_of(n) {
        dual.expect_eq(
            &jack_weight(&la, alpha),
            &jack_weight(&la.conjugate(), &alpha.inverse()),
            || format!("lambda={la}"),
        );
        if n > 0 {
            let s = stanley_branching_sum(&la, alpha).expect("covers are valid");
            stanley.expect_eq(&s, &dim_alpha(&la, alpha), || format!("lambda={la}"));
        }
    }
    vec![norm.finish(), dual.finish(), stanley.finish()]
}

/// Conditional expectation of `Y_j` given the endpoint against its closed
/// form, for every endpoint and `j`.
pub fn conditional_expectation_check(mu: &Partition, alpha: &Alpha) -> Result<IdentityReport> {
    let n = mu.size();
    let mut c = Check::new("conditional expectation given endpoint", n, alpha).with_mu(mu);
    for la in partitions_of(n) {
        for j in 0..=n {
            let lhs = conditional_expectation_given_top(&la, j, mu, alpha)?;
            let rhs = conditional_expectation_closed(&la, j, mu, alpha)?;
            c.expect_eq(&lhs, &rhs, || format!("lambda={la} j={j}"));
        }
    }
    Ok(c.finish())
}

/// The `α = 1` class-size form `|C_j|/|C_n| Y_n`.
pub fn conditional_expectation_class_check(mu: &Partition) -> Result<IdentityReport> {
    let n = mu.size();
    let one = Alpha::one();
    let mut c = Check::new("conditional expectation given endpoint, class form", n, &one).with_mu(mu);
    for la in partitions_of(n) {
        for j in 1..=n {
            let lhs = conditional_expectation_given_top(&la, j, mu, &one)?;
            let rhs = conditional_expectation_class_closed(&la, j, mu)?;
            c.expect_eq(&lhs, &rhs, || format!("lambda={la} j={j}"));
        }
    }
    Ok(c.finish())
}

pub fn increment_check(mu: &Partition, alpha: &Alpha) -> Result<IdentityReport> {
    let n = mu.size();
    let mut c = Check::new("increment second moment", n, alpha).with_mu(mu);
    for j in 1..=n {
        let lhs = increment_second_moment_expect(j, mu, alpha)?;
        let rhs = increment_second_moment_closed(j, mu, alpha)?;
        c.expect_eq(&lhs, &rhs, || format!("j={j}"));
    }
    Ok(c.finish())
}

pub fn increment_class_check(mu: &Partition) -> Result<IdentityReport> {
    let n = mu.size();
    let mut c = Check::new("increment second moment, class form", n, &Alpha::one()).with_mu(mu);
    for j in 1..=n {
        let lhs = increment_second_moment_class(j, mu)?;
        let rhs = increment_second_moment_class_closed(j, mu)?;
        c.expect_eq(&lhs, &rhs, || format!("j={j}"));
    }
    Ok(c.finish())
}

/// `E(Y_j²) = |C_j|` for transpositions at `α = 1`.
pub fn transposition_square_mean_check(n: usize) -> Result<IdentityReport> {
    let one = Alpha::one();
    let mut c = Check::new("transposition second moment equals class size", n, &one);
    if n < 2 {
        return Ok(c.finish());
    }
    let mu = Partition::transposition_type(n)?;
    for j in 1..=n {
        let lhs: Scalar = partitions_of(j)
            .map(|la| {
                let y = y_value(&la, &mu, &one)?;
                Ok(jack_weight(&la, &one) * &y * &y)
            })
            .sum::<Result<Scalar>>()?;
        let rhs = int((j * j.saturating_sub(1) / 2) as i64);
        c.expect_eq(&lhs, &rhs, || format!("j={j}"));
    }
    Ok(c.finish())
}

pub fn record_check(n: usize) -> Result<IdentityReport> {
    let mut c = Check::new("mean content of the cell labelled j", n, &Alpha::one());
    for la in partitions_of(n) {
        for j in 1..=n {
            let lhs = record_statistic(&la, j)?;
            let rhs = record_statistic_closed(&la, j)?;
            c.expect_eq(&lhs, &rhs, || format!("lambda={la} j={j}"));
        }
    }
    Ok(c.finish())
}

pub fn content_moment_check(n: usize, alpha: &Alpha) -> Result<IdentityReport> {
    let mut c = Check::new("content moments closed forms", n, alpha);
    for la in partitions_of(n) {
        for r in 1..=4 {
            let lhs = s_moment_closed(&la, r, alpha)?;
            let rhs = s_moment_bruteforce(&la, r, alpha);
            c.expect_eq(&lhs, &rhs, || format!("lambda={la} r={r}"));
        }
    }
    Ok(c.finish())
}

/// `θ^λ_μ(1) = |C_μ| χ^λ(μ) / dim(λ)`.
pub fn theta_character_check(n: usize) -> Result<IdentityReport> {
    let one = Alpha::one();
    let table = theta_table(n, &one)?;
    let chars = character_table(n)?;
    let mut c = Check::new("theta at alpha one equals central character", n, &one);
    for la in table.partitions() {
        for mu in table.partitions() {
            let lhs = table.get(la, mu)?.clone();
            let rhs = chars.central_character(la, mu)?;
            c.expect_eq(&lhs, &rhs, || format!("lambda={la} mu={mu}"));
        }
    }
    Ok(c.finish())
}

/// Largest `max_n` the suite accepts; the Pieri checks need tables of degree
/// `max_n + 1`.
pub const SUITE_LIMIT: usize = MAX_DEGREE - 1;

fn degree_checks(n: usize, alpha: &Alpha, out: &mut Vec<IdentityReport>) -> Result<()> {
    out.extend(measure_checks(n, alpha));
    out.push(transition_sum_check(n, alpha)?);
    out.extend(stationarity_check(n, alpha));
    out.push(kerov_constancy_check(n, alpha));
    out.push(content_moment_check(n, alpha)?);
    out.push(square_martingale_check(n, alpha));
    for mu in partitions_of(n) {
        out.extend(verify_theta_recursions(&mu, alpha)?);
        for j in 0..n {
            out.push(martingale_check(j, &mu, alpha)?);
        }
        out.push(conditional_expectation_check(&mu, alpha)?);
        out.push(increment_check(&mu, alpha)?);
    }
    if alpha.is_one() {
        out.push(orthogonality_check(&*character_table(n)?));
        out.push(theta_character_check(n)?);
        out.push(uniform_syt_check(n));
        out.push(record_check(n)?);
        out.push(transposition_square_mean_check(n)?);
        for mu in partitions_of(n) {
            for j in 0..n {
                out.push(martingale_check_class(j, &mu)?);
            }
            out.push(conditional_expectation_class_check(&mu)?);
            out.push(increment_class_check(&mu)?);
        }
    }
    Ok(())
}

/// Every exact identity for `1 <= n <= max_n` and each `α`.
pub fn run_suite(max_n: usize, alphas: &[Alpha]) -> SuiteOutcome {
    run_suite_with_limit(max_n, alphas, SUITE_LIMIT)
}

/// As [`run_suite`], stopping with a resource error once `n` exceeds `limit`;
/// the reports gathered up to that point are kept.
pub fn run_suite_with_limit(max_n: usize, alphas: &[Alpha], limit: usize) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::default();
    let limit = limit.min(SUITE_LIMIT);
    for alpha in alphas {
        if max_n >= 1 {
            match verify_basis_identities(max_n.min(limit), alpha) {
                Ok(r) => outcome.reports.extend(r),
                Err(e) => {
                    outcome.resource_error = Some(e);
                    return outcome;
                }
            }
        }
        for n in 1..=max_n {
            if n > limit {
                outcome.resource_error = Some(Error::Resource {
                    what: "verify suite size",
                    requested: max_n,
                    limit,
                });
                return outcome;
            }
            if let Err(e) = degree_checks(n, alpha, &mut outcome.reports) {
                outcome.resource_error = Some(e);
                return outcome;
            }
        }
    }
    outcome
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        self.resource_error.is_none() && crate::report::all_pass(&self.reports)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}
