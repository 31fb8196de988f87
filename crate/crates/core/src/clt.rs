//! Monte Carlo for the normalized transposition statistic `W_α`: Kolmogorov
//! distances to the normal law, rate fits, and the quantities `L_{n,2δ}` and
//! `N_{n,2δ}` of the martingale CLT.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, format_scalar, uint, Alpha, Scalar};
use crate::growth::{substream, FastGrowth};
use crate::jack::theta_transposition;
use crate::partition::Partition;

/// Smallest sample count accepted by [`run_clt`].
pub const MIN_SAMPLES: usize = 1000;

/// Standard normal CDF, `erfc(-x/√2)/2`.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// How the transposition character ratio is scaled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `θ / √(α C(n,2))`
    #[default]
    Canonical,
    /// `√C(n-1,2) · θ / C(n,2)` at `α = 1`, rescaled the same way for other `α`
    ShiftedBinomial,
    /// `(n-1)/√2 · θ / C(n,2)` at `α = 1`, rescaled likewise
    Linear,
}

impl Normalization {
    /// Multiplier turning the canonical `W_α` at size `n` into this one.
    pub fn factor(self, n: usize) -> f64 {
        let c = (n * (n - 1) / 2) as f64;
        match self {
            Normalization::Canonical => 1.0,
            Normalization::ShiftedBinomial => (((n - 1) * (n - 2) / 2) as f64 / c).sqrt(),
            Normalization::Linear => (n - 1) as f64 / (2.0 * c).sqrt(),
        }
    }
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(Normalization::Canonical),
            "shifted-binomial" => Ok(Normalization::ShiftedBinomial),
            "linear" => Ok(Normalization::Linear),
            _ => Err(Error::Parse(format!(
                "unknown normalization {s:?} (canonical, shifted-binomial, linear)"
            ))),
        }
    }
}

/// `W_α` as `numerator / √variance`, both exact.
#[derive(Clone, Debug, PartialEq)]
pub struct WExact {
    pub numerator: Scalar,
    pub variance: Scalar,
}

impl WExact {
    pub fn to_f64(&self) -> f64 {
        crate::exact::to_f64(&self.numerator) / crate::exact::to_f64(&self.variance).sqrt()
    }

    /// `W²` with the sign of `W`.
    pub fn signed_square(&self) -> Scalar {
        let sq = &self.numerator * &self.numerator / &self.variance;
        if self.numerator.is_negative() {
            -sq
        } else {
            sq
        }
    }
}

pub fn w_statistic_exact(lambda: &Partition, alpha: &Alpha) -> Result<WExact> {
    let n = lambda.size();
    if n < 2 {
        return domain("W needs n >= 2");
    }
    Ok(WExact {
        numerator: theta_transposition(lambda, alpha),
        variance: alpha.value() * uint(&binomial(n, 2)),
    })
}

/// `(α n(λ') - n(λ)) / √(α C(n,2))`.
pub fn w_statistic(lambda: &Partition, alpha: &Alpha) -> Result<f64> {
    Ok(w_statistic_exact(lambda, alpha)?.to_f64())
}

/// `sup_x |F̂(x) - Φ(x)|` for the empirical CDF of `samples`.
pub fn ks_normal(samples: &[f64]) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = normal_cdf(x);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Two-sample Kolmogorov–Smirnov statistic.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Asymptotic critical value of the two-sample statistic at level 1%.
pub fn ks_two_sample_critical_1pct(na: usize, nb: usize) -> f64 {
    let (na, nb) = (na as f64, nb as f64);
    1.628 * ((na + nb) / (na * nb)).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CltRow {
    pub n: usize,
    pub ks: f64,
    pub mean: f64,
    pub var: f64,
    /// Monte Carlo `L_{n,2δ}`.
    pub l_delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CltExperiment {
    pub n_grid: Vec<usize>,
    pub alpha: String,
    pub samples: usize,
    pub seed: u64,
    pub delta: f64,
    pub normalization: Normalization,
    pub results: Vec<CltRow>,
}

/// Per sample: `W` and `Σ_j |c_α(x_j)|^{2+2δ}` at every grid size, from one
/// growth path to the largest size.
fn sample_grid(
    grid: &[usize],
    alpha: f64,
    delta: f64,
    samples: usize,
    seed: u64,
) -> Vec<Vec<(f64, f64)>> {
    let max_n = grid.iter().copied().max().unwrap_or(0);
    let power = 2.0 + 2.0 * delta;
    let int_power = (power.fract() == 0.0).then_some(power as i32);
    (0..samples as u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = substream(seed, s);
            let mut g = FastGrowth::new(alpha);
            let mut theta = 0.0;
            let mut abs_sum = 0.0;
            let mut next = 0;
            let mut order: Vec<usize> = (0..grid.len()).collect();
            order.sort_by_key(|&i| grid[i]);
            let mut values = vec![(0.0, 0.0); grid.len()];
            for m in 1..=max_n {
                let cell = g.step(&mut rng);
                let c = cell.alpha_content_f64(alpha);
                theta += c;
                abs_sum += match int_power {
                    Some(k) => c.abs().powi(k),
                    None => c.abs().powf(power),
                };
                while next < order.len() && grid[order[next]] == m {
                    let w = theta / (alpha * (m * (m - 1) / 2) as f64).sqrt();
                    values[order[next]] = (w, abs_sum);
                    next += 1;
                }
            }
            values
        })
        .collect()
}

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

fn check_grid(n_grid: &[usize]) -> Result<()> {
    if n_grid.is_empty() {
        return domain("the n grid is empty");
    }
    if let Some(n) = n_grid.iter().find(|&&n| n < 2) {
        return domain(format!("W needs n >= 2, got {n}"));
    }
    Ok(())
}

/// Samples of `W_α` at each grid size, in grid order.
pub fn sample_w(
    n_grid: &[usize],
    alpha: &Alpha,
    samples: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    check_grid(n_grid)?;
    let raw = sample_grid(n_grid, alpha.to_f64(), 0.0, samples, seed);
    Ok((0..n_grid.len())
        .map(|k| raw.iter().map(|row| row[k].0).collect())
        .collect())
}

pub fn run_clt(
    n_grid: &[usize],
    alpha: &Alpha,
    samples: usize,
    seed: u64,
    delta: f64,
    normalization: Normalization,
) -> Result<CltExperiment> {
    check_grid(n_grid)?;
    if samples < MIN_SAMPLES {
        return domain(format!("need at least {MIN_SAMPLES} samples, got {samples}"));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return domain(format!("delta must lie in (0, 1], got {delta}"));
    }
    let af = alpha.to_f64();
    let raw = sample_grid(n_grid, af, delta, samples, seed);
    let results = n_grid
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let factor = normalization.factor(n);
            let ws: Vec<f64> = raw.iter().map(|row| row[k].0 * factor).collect();
            let (mean, var) = mean_var(&ws);
            let scale = (af * (n * (n - 1) / 2) as f64).powf(1.0 + delta);
            let l_delta = raw.iter().map(|row| row[k].1).sum::<f64>() / samples as f64 / scale;
            CltRow {
                n,
                ks: ks_normal(&ws),
                mean,
                var,
                l_delta,
            }
        })
        .collect();
    Ok(CltExperiment {
        n_grid: n_grid.to_vec(),
        alpha: alpha.to_string(),
        samples,
        seed,
        delta,
        normalization,
        results,
    })
}

/// Least squares of `log y` on `log n`; returns `(s_hat, intercept)` with
/// slope `-s_hat`.
pub fn rate_fit_points(points: &[(usize, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return domain("a rate fit needs at least two points");
    }
    if points.iter().any(|&(_, y)| y <= 0.0) {
        return domain("a rate fit needs positive values");
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, y)| y.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return domain("a rate fit needs at least two distinct sizes");
    }
    let slope = sxy / sxx;
    Ok((-slope, my - slope * mx))
}

pub fn rate_fit(experiment: &CltExperiment) -> Result<(f64, f64)> {
    let pts: Vec<(usize, f64)> = experiment.results.iter().map(|r| (r.n, r.ks)).collect();
    rate_fit_points(&pts)
}

/// `Σ_{j<n} s_{2,α}(λ(j))` along one path, exact; computed from the Cauchy
/// transform moments of the interlacing coordinates, independently of the
/// transition probabilities.
pub fn conditional_variance_sum(cells: &[crate::partition::Cell], alpha: &Alpha) -> Result<Scalar> {
    let to_i128 = |x: &num_bigint::BigInt| {
        x.to_i128()
            .ok_or_else(|| Error::Unsupported("alpha numerator or denominator too large".into()))
    };
    let p = to_i128(alpha.value().numer())?;
    let q = to_i128(alpha.value().denom())?;
    let mut parts: Vec<usize> = Vec::new();
    let mut total: i128 = 0;
    for cell in cells {
        // q² s_2 = (E_1² + E_2) / 2 with E_r = Σ X^r - Σ Y^r in q-scaled units
        let (mut e1, mut e2) = (0i128, 0i128);
        let len = parts.len();
        for r in 1..=len + 1 {
            let here = if r <= len { parts[r - 1] } else { 0 };
            let above = if r == 1 { usize::MAX } else { parts[r - 2] };
            if above > here {
                let x = p * here as i128 - q * (r as i128 - 1);
                e1 += x;
                e2 += x * x;
            }
            let below = parts.get(r).copied().unwrap_or(0);
            if r <= len && here > below {
                let y = p * here as i128 - q * r as i128;
                e1 -= y;
                e2 -= y * y;
            }
        }
        let twice = e1 * e1 + e2;
        if twice.is_odd() {
            return Err(Error::Internal("odd Cauchy moment sum".into()));
        }
        total += twice / 2;
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
    }
    Ok(Scalar::new(total.into(), (q * q).into()))
}

#[derive(Clone, Debug, Serialize)]
pub struct HaeuslerQuantities {
    pub n: usize,
    pub alpha: String,
    pub delta: f64,
    pub paths: usize,
    /// Monte Carlo `L_{n,2δ}`.
    pub l: f64,
    /// `N_{n,2δ}`, exact.
    #[serde(serialize_with = "serialize_scalar")]
    pub n_term: Scalar,
}

fn serialize_scalar<S: serde::Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_scalar(x))
}

/// `L_{n,2δ}` by Monte Carlo and `N_{n,2δ}` certified to be zero: along every
/// sampled path the conditional variances sum to exactly `α C(n,2)`.
pub fn haeusler_quantities(
    n: usize,
    alpha: &Alpha,
    delta: f64,
    paths: usize,
    seed: u64,
) -> Result<HaeuslerQuantities> {
    if n < 2 {
        return domain("L and N need n >= 2");
    }
    if paths == 0 {
        return domain("need at least one path");
    }
    let af = alpha.to_f64();
    let target = alpha.value() * uint(&binomial(n, 2));
    let power = 2.0 + 2.0 * delta;
    let per_path: Vec<(Scalar, f64)> = (0..paths as u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = substream(seed, s);
            let mut g = FastGrowth::new(af);
            let cells: Vec<_> = (0..n).map(|_| g.step(&mut rng)).collect();
            let l: f64 = cells
                .iter()
                .map(|c| c.alpha_content_f64(af).abs().powf(power))
                .sum();
            Ok((conditional_variance_sum(&cells, alpha)?, l))
        })
        .collect::<Result<_>>()?;
    for (k, (v, _)) in per_path.iter().enumerate() {
        if v != &target {
            return Err(Error::Hypothesis(format!(
                "path {k}: conditional variances sum to {} instead of {}",
                format_scalar(v),
                format_scalar(&target)
            )));
        }
    }
    let scale = (af * (n * (n - 1) / 2) as f64).powf(1.0 + delta);
    let l = per_path.iter().map(|(_, l)| l).sum::<f64>() / paths as f64 / scale;
    // every normalized sum equals one, so E|Σ - 1|^{1+δ} vanishes
    let n_term = Scalar::zero();
    Ok(HaeuslerQuantities {
        n,
        alpha: alpha.to_string(),
        delta,
        paths,
        l,
        n_term,
    })
}
