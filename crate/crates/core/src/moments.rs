//! Content power sums `d_k`, moments `s_r` of the content of the next cell,
//! and their expectations under Plancherel and Jack measure.

use rayon::prelude::*;
use serde::Serialize;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, int, pow, to_f64, uint, Alpha, Scalar};
use crate::growth::{substream, up_distribution_interlacing, FastGrowth};
use crate::measures::jack_weight;
use crate::partition::{partitions_of, Partition};

/// Largest `n` for which expectations are summed over all partitions.
pub const EXACT_SUM_BOUND: usize = 30;

/// `d_{k,α}(λ) = Σ_x c_α(x)^k`.
pub fn d_k(lambda: &Partition, k: usize, alpha: &Alpha) -> Scalar {
    lambda.cells().map(|c| pow(&c.alpha_content(alpha), k)).sum()
}

/// Content power sums of one diagram, `d_0..=d_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContentStats {
    pub lambda: Partition,
    pub alpha: Alpha,
    pub d: Vec<Scalar>,
}

impl ContentStats {
    pub fn new(lambda: &Partition, alpha: &Alpha, max_k: usize) -> Self {
        let mut d = vec![Scalar::zero(); max_k + 1];
        for cell in lambda.cells() {
            let c = cell.alpha_content(alpha);
            let mut power = Scalar::one();
            for slot in d.iter_mut() {
                *slot += &power;
                power *= &c;
            }
        }
        ContentStats {
            lambda: lambda.clone(),
            alpha: alpha.clone(),
            d,
        }
    }

    pub fn d(&self, k: usize) -> Result<&Scalar> {
        self.d.get(k).ok_or(Error::Resource {
            what: "content power sum index",
            requested: k,
            limit: self.d.len().saturating_sub(1),
        })
    }

    /// `d_ρ = Π_i d_i^{m_i(ρ)}`.
    pub fn d_rho(&self, rho: &Partition) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for &part in rho.parts() {
            acc *= self.d(part)?;
        }
        Ok(acc)
    }
}

/// `s_{r,α}(λ) = Σ_Λ p(λ→Λ) c_α(Λ/λ)^r`.
pub fn s_moment_bruteforce(lambda: &Partition, r: usize, alpha: &Alpha) -> Scalar {
    up_distribution_interlacing(lambda, alpha)
        .targets
        .iter()
        .map(|(big, p)| p * pow(&big.cover_cell(lambda).expect("cover").alpha_content(alpha), r))
        .sum()
}

/// Closed forms for `r <= 4` in terms of `d_1`, `d_2` and `|λ|`.
pub fn s_moment_closed(lambda: &Partition, r: usize, alpha: &Alpha) -> Result<Scalar> {
    let a = alpha.value();
    let n = int(lambda.size() as i64);
    let am1 = a - Scalar::one();
    Ok(match r {
        0 => Scalar::one(),
        1 => Scalar::zero(),
        2 => a * &n,
        3 => int(2) * a * d_k(lambda, 1, alpha) + a * &am1 * &n,
        4 => {
            int(3) * a * d_k(lambda, 2, alpha)
                + int(3) * a * &am1 * d_k(lambda, 1, alpha)
                + a * a * uint(&binomial(lambda.size() + 1, 2))
                + a * &am1 * &am1 * &n
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "closed form for s_{r} is only available for r <= 4"
            )))
        }
    })
}

fn check_sum_bound(n: usize) -> Result<()> {
    if n > EXACT_SUM_BOUND {
        return Err(Error::Resource {
            what: "exact summation size",
            requested: n,
            limit: EXACT_SUM_BOUND,
        });
    }
    Ok(())
}

/// `E s_{r,α}(λ)` for `λ` drawn from Jack measure on partitions of `n`.
pub fn jack_expect_s(n: usize, r: usize, alpha: &Alpha) -> Result<Scalar> {
    check_sum_bound(n)?;
    let parts: Vec<Partition> = partitions_of(n).collect();
    let terms: Vec<Scalar> = parts
        .par_iter()
        .map(|la| jack_weight(la, alpha) * s_moment_bruteforce(la, r, alpha))
        .collect();
    Ok(terms.into_iter().sum())
}

/// `E s_r(λ)` under Plancherel measure; `r` is the moment order.
pub fn plancherel_expect_s(n: usize, r: usize) -> Result<Scalar> {
    jack_expect_s(n, r, &Alpha::one())
}

/// `E d_{ρ,α}(λ)` under Jack measure on partitions of `n`.
pub fn jack_expect_d_rho(n: usize, rho: &Partition, alpha: &Alpha) -> Result<Scalar> {
    check_sum_bound(n)?;
    let max_k = rho.parts().first().copied().unwrap_or(0);
    let parts: Vec<Partition> = partitions_of(n).collect();
    let terms: Vec<Scalar> = parts
        .par_iter()
        .map(|la| {
            let stats = ContentStats::new(la, alpha, max_k);
            Ok(jack_weight(la, alpha) * stats.d_rho(rho)?)
        })
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum())
}

/// One row of a growth diagnostic: `E d_ρ` at `n` and its ratio to
/// `n^{l(ρ) + |ρ|/2}`.
#[derive(Clone, Debug, Serialize)]
pub struct DRhoGrowth {
    pub n: usize,
    pub expectation: f64,
    pub ratio: f64,
}

pub fn d_rho_growth(rho: &Partition, ns: &[usize]) -> Result<Vec<DRhoGrowth>> {
    let exponent = rho.length() as f64 + rho.size() as f64 / 2.0;
    ns.iter()
        .map(|&n| {
            let e = to_f64(&jack_expect_d_rho(n, rho, &Alpha::one())?);
            Ok(DRhoGrowth {
                n,
                expectation: e,
                ratio: e / (n as f64).powf(exponent),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentBoundRow {
    pub j: usize,
    /// `E(Y_{j+1} - Y_j)^{2r}`.
    pub estimate: f64,
    /// `estimate / j^r`.
    pub ratio: f64,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentBound {
    pub r: usize,
    pub alpha: String,
    pub rows: Vec<MomentBoundRow>,
    pub max_ratio: f64,
}

/// Float `s_{2r}` from the current corner probabilities of a sampler.
fn s_moment_f64(g: &FastGrowth, alpha: f64, order: usize) -> f64 {
    g.corner_probabilities()
        .iter()
        .map(|(c, p)| p * c.alpha_content_f64(alpha).powi(order as i32))
        .sum()
}

/// Increments of the transposition martingale satisfy
/// `E(ΔY)^{2r} = E s_{2r,α}(λ(j))`; exact for `j` within the summation bound,
/// Monte Carlo beyond it.
pub fn moment_bound_check(
    j_list: &[usize],
    r: usize,
    alpha: &Alpha,
    samples: usize,
    seed: u64,
) -> Result<MomentBound> {
    let af = alpha.to_f64();
    let rows: Vec<MomentBoundRow> = j_list
        .iter()
        .map(|&j| {
            let (estimate, exact) = if j <= EXACT_SUM_BOUND {
                (to_f64(&jack_expect_s(j, 2 * r, alpha)?), true)
            } else {
                let total: f64 = (0..samples as u64)
                    .into_par_iter()
                    .map(|s| {
                        let mut rng = substream(seed, s);
                        let mut g = FastGrowth::new(af);
                        for _ in 0..j {
                            g.step(&mut rng);
                        }
                        s_moment_f64(&g, af, 2 * r)
                    })
                    .collect::<Vec<f64>>()
                    .into_iter()
                    .sum();
                (total / samples.max(1) as f64, false)
            };
            let ratio = if j == 0 {
                f64::NAN
            } else {
                estimate / (j as f64).powi(r as i32)
            };
            Ok(MomentBoundRow {
                j,
                estimate,
                ratio,
                exact,
            })
        })
        .collect::<Result<_>>()?;
    let max_ratio = rows
        .iter()
        .map(|r| r.ratio)
        .filter(|x| x.is_finite())
        .fold(0.0, f64::max);
    Ok(MomentBound {
        r,
        alpha: alpha.to_string(),
        rows,
        max_ratio,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TailDiagnostic {
    pub n: usize,
    pub alpha: String,
    pub samples: usize,
    pub row_threshold: f64,
    pub column_threshold: f64,
    pub exceedances: usize,
    pub frequency: f64,
}

/// How often `λ_1 >= 2e√(n/α)` or `λ'_1 >= 2e√(αn)` under sampled Jack measure.
pub fn tail_diagnostic(n: usize, alpha: &Alpha, samples: usize, seed: u64) -> TailDiagnostic {
    let af = alpha.to_f64();
    let e2 = 2.0 * std::f64::consts::E;
    let row_threshold = e2 * (n as f64 / af).sqrt();
    let column_threshold = e2 * (af * n as f64).sqrt();
    let exceedances = (0..samples as u64)
        .into_par_iter()
        .filter(|&s| {
            let mut rng = substream(seed, s);
            let mut g = FastGrowth::new(af);
            for _ in 0..n {
                g.step(&mut rng);
            }
            let shape = g.shape();
            let first_row = shape.parts().first().copied().unwrap_or(0) as f64;
            let first_col = shape.length() as f64;
            first_row >= row_threshold || first_col >= column_threshold
        })
        .count();
    TailDiagnostic {
        n,
        alpha: alpha.to_string(),
        samples,
        row_threshold,
        column_threshold,
        exceedances,
        frequency: if samples == 0 {
            0.0
        } else {
            exceedances as f64 / samples as f64
        },
    }
}

/// `C(2r, r) / (r + 1)`.
pub fn catalan(r: usize) -> Scalar {
    uint(&binomial(2 * r, r)) / int(r as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::alpha_grid;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn content_stats() {
        let a = Alpha::from_ratio(5, 3).unwrap();
        let la = p("3,1");
        let st = ContentStats::new(&la, &a, 3);
        assert_eq!(st.d(0).unwrap(), &int(4));
        // α-contents 0, α, 2α, -1
        assert_eq!(st.d(1).unwrap(), &(int(3) * a.value() - int(1)));
        assert_eq!(st.d_rho(&p("1,1")).unwrap(), st.d(1).unwrap() * st.d(1).unwrap());
        assert_eq!(st.d_rho(&p("2,1")).unwrap(), st.d(2).unwrap() * st.d(1).unwrap());
        assert!(st.d_rho(&p("4")).is_err());
        assert_eq!(d_k(&la, 2, &a), st.d(2).unwrap().clone());
    }

    #[test]
    fn bruteforce_examples() {
        for alpha in alpha_grid() {
            let a = alpha.value();
            assert_eq!(s_moment_bruteforce(&p("1"), 2, &alpha), a.clone());
            let hand = a * a / (a + int(1)) + a / (a + int(1));
            assert_eq!(s_moment_bruteforce(&p("1"), 2, &alpha), hand);
            for n in 0..=6 {
                for la in partitions_of(n) {
                    assert_eq!(s_moment_bruteforce(&la, 1, &alpha), Scalar::zero());
                    assert_eq!(s_moment_bruteforce(&la, 0, &alpha), Scalar::one());
                }
            }
            // d_{1,α}((2,1)) = α - 1, so s_3 = 2α(α-1) + 3α(α-1)
            let la = p("2,1");
            assert_eq!(d_k(&la, 1, &alpha), a - int(1));
            assert_eq!(s_moment_bruteforce(&la, 3, &alpha), a * (a - int(1)) * int(5));
        }
    }

    #[test]
    fn closed_forms_match_bruteforce_to_eight() {
        for alpha in alpha_grid() {
            for n in 0..=8 {
                for la in partitions_of(n) {
                    for r in 1..=4 {
                        assert_eq!(
                            s_moment_closed(&la, r, &alpha).unwrap(),
                            s_moment_bruteforce(&la, r, &alpha),
                            "{la} r={r} alpha={alpha}"
                        );
                    }
                }
            }
        }
        assert!(matches!(
            s_moment_closed(&p("2"), 5, &Alpha::one()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn alpha_one_reductions() {
        let one = Alpha::one();
        for n in 0..=7 {
            for la in partitions_of(n) {
                let d1 = d_k(&la, 1, &one);
                let d2 = d_k(&la, 2, &one);
                assert_eq!(s_moment_closed(&la, 3, &one).unwrap(), int(2) * &d1);
                assert_eq!(
                    s_moment_closed(&la, 4, &one).unwrap(),
                    int(3) * d2 + uint(&binomial(n + 1, 2))
                );
            }
        }
    }

    #[test]
    fn expected_d2_is_binomial_to_twelve() {
        for n in 0..=12 {
            assert_eq!(
                jack_expect_d_rho(n, &p("2"), &Alpha::one()).unwrap(),
                uint(&binomial(n, 2)),
                "n={n}"
            );
        }
    }

    #[test]
    fn plancherel_moments_small() {
        for n in 1..=12 {
            let ni = int(n as i64);
            assert_eq!(plancherel_expect_s(n, 2).unwrap(), ni.clone());
            assert_eq!(plancherel_expect_s(n, 4).unwrap(), int(2) * &ni * &ni - &ni);
            assert_eq!(plancherel_expect_s(n, 3).unwrap(), Scalar::zero());
            assert_eq!(plancherel_expect_s(n, 5).unwrap(), Scalar::zero());
        }
        assert!(plancherel_expect_s(31, 2).is_err());
        assert_eq!(catalan(2), int(2));
        assert_eq!(catalan(3), int(5));
    }

    #[test]
    fn moment_bound_exact_rows() {
        let a = Alpha::from_ratio(2, 1).unwrap();
        let mb = moment_bound_check(&[3, 5, 8], 1, &a, 0, 0).unwrap();
        for row in &mb.rows {
            assert!(row.exact);
            assert!((row.ratio - 2.0).abs() < 1e-12);
        }
        let mb = moment_bound_check(&[10, 12], 2, &Alpha::one(), 0, 0).unwrap();
        for row in &mb.rows {
            let j = row.j as f64;
            assert!((row.ratio - (2.0 - 1.0 / j)).abs() < 1e-12);
        }
        assert!(moment_bound_check(&[], 2, &a, 10, 1).unwrap().rows.is_empty());
    }

    #[test]
    fn moment_bound_monte_carlo_row() {
        let mb = moment_bound_check(&[40], 1, &Alpha::one(), 200, 3).unwrap();
        assert!(!mb.rows[0].exact);
        // s_2 = j exactly for every shape, so even one sample is exact
        assert!((mb.rows[0].ratio - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tail_small_cases() {
        let t = tail_diagnostic(1, &Alpha::one(), 100, 1);
        assert_eq!(t.exceedances, 0);
        let a = Alpha::from_ratio(2, 1).unwrap();
        let t1 = tail_diagnostic(50, &a, 10, 4);
        let t2 = tail_diagnostic(50, &a.inverse(), 10, 4);
        assert_eq!(t1.row_threshold, t2.column_threshold);
        assert_eq!(t1.frequency, 0.0);
        assert_eq!(t2.frequency, 0.0);
    }

    #[test]
    fn d_rho_growth_rows() {
        let rows = d_rho_growth(&p("2"), &[10, 12]).unwrap();
        assert!((rows[0].expectation - 45.0).abs() < 1e-9);
        assert!((rows[1].ratio - 66.0 / 12f64.powi(2)).abs() < 1e-12);
    }
}
