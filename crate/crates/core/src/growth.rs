//! Kerov's growth process: exact up/down transitions, the martingales `Y_j`,
//! and the conditional-expectation identities along growth paths.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::exact::{binomial, factorial, falling_factorial, int, pow, uint, Alpha, Scalar};
use crate::group::character_table;
use crate::jack::{psi_prime, theta_table, theta_transposition};
use crate::measures::{c_poly, c_prime_poly, jack_weight, z_stat};
use crate::partition::{partitions_of, syt_enumerate, Cell, GrowthPath, Partition};
use crate::report::{Check, IdentityReport};

/// One step of the up or down chain out of `source`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionDistribution {
    pub source: Partition,
    pub targets: Vec<(Partition, Scalar)>,
}

impl TransitionDistribution {
    pub fn probability(&self, target: &Partition) -> Scalar {
        self.targets
            .iter()
            .find(|(t, _)| t == target)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn total(&self) -> Scalar {
        self.targets.iter().map(|(_, p)| p).sum()
    }

    /// `Σ p(λ→Λ) f(Λ)`.
    pub fn expect(&self, mut f: impl FnMut(&Partition) -> Result<Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (t, p) in &self.targets {
            acc += p * f(t)?;
        }
        Ok(acc)
    }
}

/// `(c_λ / c_Λ) ψ'_{Λ/λ}` for each addable corner.
pub fn up_distribution(lambda: &Partition, alpha: &Alpha) -> TransitionDistribution {
    let c = c_poly(lambda, alpha);
    let targets = lambda
        .up_covers()
        .into_iter()
        .map(|(_, big)| {
            let p = &c / c_poly(&big, alpha) * psi_prime(&big, lambda, alpha).expect("cover");
            (big, p)
        })
        .collect();
    TransitionDistribution {
        source: lambda.clone(),
        targets,
    }
}

/// Up probabilities from the interlacing coordinates of the diagram:
/// `Π_i (x_k - y_i) / Π_{j≠k} (x_k - x_j)` where the `x` are α-contents of the
/// addable cells and the `y` are `α col - row` over the removable cells.
pub fn up_distribution_interlacing(lambda: &Partition, alpha: &Alpha) -> TransitionDistribution {
    let a = alpha.value();
    let xs: Vec<(Cell, Scalar)> = lambda
        .addable_cells()
        .into_iter()
        .map(|c| (c, c.alpha_content(alpha)))
        .collect();
    let ys: Vec<Scalar> = lambda
        .removable_cells()
        .into_iter()
        .map(|c| a * int(c.col as i64) - int(c.row as i64))
        .collect();
    let targets = xs
        .iter()
        .map(|(cell, x)| {
            let num: Scalar = ys.iter().map(|y| x - y).product();
            let den: Scalar = xs
                .iter()
                .filter(|(other, _)| other != cell)
                .map(|(_, z)| x - z)
                .product();
            (lambda.with_cell(*cell).expect("addable"), num / den)
        })
        .collect();
    TransitionDistribution {
        source: lambda.clone(),
        targets,
    }
}

/// The `α = 1` rule `dim(Λ) / ((n+1) dim(λ))`.
pub fn plancherel_up(lambda: &Partition) -> TransitionDistribution {
    let n = lambda.size() as i64;
    let d = uint(&lambda.syt_count());
    let targets = lambda
        .up_covers()
        .into_iter()
        .map(|(_, big)| {
            let p = uint(&big.syt_count()) / (int(n + 1) * &d);
            (big, p)
        })
        .collect();
    TransitionDistribution {
        source: lambda.clone(),
        targets,
    }
}

/// `ψ'_{λ/τ} c'_λ / (α n c'_τ)` for each removable corner.
pub fn down_distribution(lambda: &Partition, alpha: &Alpha) -> Result<TransitionDistribution> {
    if lambda.is_empty() {
        return domain("the empty partition has no down transitions");
    }
    let n = int(lambda.size() as i64);
    let cp = c_prime_poly(lambda, alpha);
    let targets = lambda
        .down_covers()
        .into_iter()
        .map(|(_, small)| {
            let p = psi_prime(lambda, &small, alpha).expect("cover") * &cp
                / (alpha.value() * &n * c_prime_poly(&small, alpha));
            (small, p)
        })
        .collect();
    Ok(TransitionDistribution {
        source: lambda.clone(),
        targets,
    })
}

/// Jack measure is carried to Jack measure by one up step and by one down step.
pub fn stationarity_check(n: usize, alpha: &Alpha) -> Vec<IdentityReport> {
    let mut up = Check::new("up chain preserves jack measure", n, alpha);
    let mut pushed: std::collections::HashMap<Partition, Scalar> = Default::default();
    for la in partitions_of(n) {
        let w = jack_weight(&la, alpha);
        for (big, p) in up_distribution(&la, alpha).targets {
            *pushed.entry(big).or_insert_with(Scalar::zero) += &w * p;
        }
    }
    for big in partitions_of(n + 1) {
        let got = pushed.remove(&big).unwrap_or_else(Scalar::zero);
        up.expect_eq(&got, &jack_weight(&big, alpha), || format!("Lambda={big}"));
    }
    let mut out = vec![up.finish()];
    if n >= 1 {
        let mut down = Check::new("down chain preserves jack measure", n, alpha);
        let mut pushed: std::collections::HashMap<Partition, Scalar> = Default::default();
        for la in partitions_of(n) {
            let w = jack_weight(&la, alpha);
            for (small, p) in down_distribution(&la, alpha).expect("nonempty").targets {
                *pushed.entry(small).or_insert_with(Scalar::zero) += &w * p;
            }
        }
        for small in partitions_of(n - 1) {
            let got = pushed.remove(&small).unwrap_or_else(Scalar::zero);
            down.expect_eq(&got, &jack_weight(&small, alpha), || format!("tau={small}"));
        }
        out.push(down.finish());
    }
    out
}

/// Random stream for sample `index` under base `seed`; streams for different
/// indices are disjoint, so results do not depend on how samples are split
/// across threads.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Debug)]
struct Corner {
    row: usize,
    col: usize,
    x: f64,
    p: f64,
}

/// Floating-point growth sampler.
///
/// Corner probabilities are kept in interlacing form and updated
/// multiplicatively after every step, so a step costs time linear in the
/// number of corners.
#[derive(Clone, Debug)]
pub struct FastGrowth {
    alpha: f64,
    parts: Vec<usize>,
    corners: Vec<Corner>,
    /// `(row, α col - row)` for each removable cell.
    removable: Vec<(usize, f64)>,
}

impl FastGrowth {
    pub fn new(alpha: f64) -> Self {
        Self::from_partition(&Partition::empty(), alpha)
    }

    pub fn from_partition(lambda: &Partition, alpha: f64) -> Self {
        let removable = lambda
            .removable_cells()
            .into_iter()
            .map(|c| (c.row, alpha * c.col as f64 - c.row as f64))
            .collect();
        let mut g = FastGrowth {
            alpha,
            parts: lambda.parts().to_vec(),
            corners: Vec::new(),
            removable,
        };
        g.corners = lambda
            .addable_cells()
            .into_iter()
            .map(|c| Corner {
                row: c.row,
                col: c.col,
                x: c.alpha_content_f64(alpha),
                p: 0.0,
            })
            .collect();
        for i in 0..g.corners.len() {
            g.corners[i].p = g.fresh_probability(i);
        }
        g
    }

    fn fresh_probability(&self, i: usize) -> f64 {
        let x = self.corners[i].x;
        let num: f64 = self.removable.iter().map(|(_, y)| x - y).product();
        let den: f64 = self
            .corners
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, c)| x - c.x)
            .product();
        num / den
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("valid by construction")
    }

    /// Current `(cell, probability)` pairs.
    pub fn corner_probabilities(&self) -> Vec<(Cell, f64)> {
        self.corners
            .iter()
            .map(|c| (Cell::new(c.row, c.col), c.p))
            .collect()
    }

    /// Adds one random cell and returns it.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Cell {
        let total: f64 = self.corners.iter().map(|c| c.p).sum();
        let mut u = rng.random::<f64>() * total;
        let mut pick = self.corners.len() - 1;
        for (i, c) in self.corners.iter().enumerate() {
            if u < c.p {
                pick = i;
                break;
            }
            u -= c.p;
        }
        self.add_corner(pick)
    }

    fn add_corner(&mut self, i: usize) -> Cell {
        let Corner { row: r, col: c, x: xm, .. } = self.corners.remove(i);
        let a = self.alpha;
        if r > self.parts.len() {
            self.parts.push(1);
        } else {
            self.parts[r - 1] += 1;
        }
        // Whatever the local case, the interlacing data changes by removing xm,
        // inserting xm + α - 1 as a maximum, and cancelling xm + α and xm - 1
        // against existing maxima or inserting them as new minima.
        for k in &mut self.corners {
            let d = k.x - xm;
            k.p *= d * (d - a + 1.0) / ((d - a) * (d + 1.0));
        }
        self.removable.retain(|&(row, _)| row != r && !(row + 1 == r && r > 1 && self.parts[r - 2] == c));
        let pos = self.removable.partition_point(|&(row, _)| row < r);
        self.removable.insert(pos, (r, a * c as f64 - r as f64));

        let mut fresh = Vec::new();
        if r == 1 || self.parts[r - 2] > c {
            fresh.push(Corner { row: r, col: c + 1, x: xm + a, p: 0.0 });
        }
        if self.parts.get(r).copied().unwrap_or(0) == c - 1 {
            fresh.push(Corner { row: r + 1, col: c, x: xm - 1.0, p: 0.0 });
        }
        let mut inserted = Vec::new();
        for f in fresh {
            let pos = self.corners.partition_point(|k| k.row < f.row);
            inserted.push(f.row);
            self.corners.insert(pos, f);
        }
        for i in 0..self.corners.len() {
            if inserted.contains(&self.corners[i].row) {
                self.corners[i].p = self.fresh_probability(i);
            }
        }
        Cell::new(r, c)
    }
}

/// A growth path of length `n` drawn with floating-point transition weights.
pub fn sample_path(n: usize, alpha: &Alpha, seed: u64) -> Result<GrowthPath> {
    if n == 0 {
        return domain("sample_path needs n >= 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = FastGrowth::new(alpha.to_f64());
    let cells: Vec<Cell> = (0..n).map(|_| g.step(&mut rng)).collect();
    GrowthPath::from_cells(&cells)
}

/// Which normalization of the martingale a trace uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceForm {
    /// `θ^{λ(j)}_{μ - 1^{n-j}}(α)`
    Jack,
    /// `|C_j| χ^{ρ(j)}(C_j) / dim ρ(j)`, with `C_j` the permutations of `S_j`
    /// of cycle type `μ - 1^{n-j}`
    Character,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MartingaleTrace {
    pub path: GrowthPath,
    pub mu: Partition,
    pub alpha: Alpha,
    pub form: TraceForm,
    /// `Y_1, …, Y_n`.
    pub values: Vec<Scalar>,
}

fn restricted_class(lambda: &Partition, mu: &Partition) -> Result<Option<Partition>> {
    let (j, n) = (lambda.size(), mu.size());
    if j > n {
        return domain(format!("|{lambda}| exceeds |{mu}|"));
    }
    Ok(mu.minus_ones(n - j))
}

/// `Y_j^{(α)}(λ) = θ^λ_{μ-1^{n-j}}(α)` for `j = |λ|`, `n = |μ|`; zero when μ
/// has fewer than `n - j` fixed points.
pub fn y_value(lambda: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Scalar> {
    let Some(class) = restricted_class(lambda, mu)? else {
        return Ok(Scalar::zero());
    };
    let j = lambda.size();
    // closed forms for the two classes used at sizes beyond the θ-table bound
    if class == Partition::column(j) {
        return Ok(Scalar::one());
    }
    if j >= 2 && class == Partition::transposition_type(j)? {
        return Ok(theta_transposition(lambda, alpha));
    }
    Ok(theta_table(j, alpha)?.get(lambda, &class)?.clone())
}

/// `|C_j| χ^λ(C_j) / dim(λ)` from the character table.
pub fn y_value_class(lambda: &Partition, mu: &Partition) -> Result<Scalar> {
    let Some(class) = restricted_class(lambda, mu)? else {
        return Ok(Scalar::zero());
    };
    character_table(lambda.size())?.central_character(lambda, &class)
}

pub fn y_trace(path: &GrowthPath, mu: &Partition, alpha: &Alpha) -> Result<MartingaleTrace> {
    if path.len() != mu.size() {
        return domain(format!("path length {} differs from |{mu}|", path.len()));
    }
    let values = (1..=path.len())
        .map(|j| y_value(path.shape(j), mu, alpha))
        .collect::<Result<_>>()?;
    Ok(MartingaleTrace {
        path: path.clone(),
        mu: mu.clone(),
        alpha: alpha.clone(),
        form: TraceForm::Jack,
        values,
    })
}

pub fn y_trace_class(path: &GrowthPath, mu: &Partition) -> Result<MartingaleTrace> {
    if path.len() != mu.size() {
        return domain(format!("path length {} differs from |{mu}|", path.len()));
    }
    let values = (1..=path.len())
        .map(|j| y_value_class(path.shape(j), mu))
        .collect::<Result<_>>()?;
    Ok(MartingaleTrace {
        path: path.clone(),
        mu: mu.clone(),
        alpha: Alpha::one(),
        form: TraceForm::Character,
        values,
    })
}

/// `E(Y_{j+1} | λ(j) = λ) = Y_j(λ)` for every `λ ⊢ j`.
pub fn martingale_check(j: usize, mu: &Partition, alpha: &Alpha) -> Result<IdentityReport> {
    if j >= mu.size() {
        return domain(format!("need j < |mu|, got j={j} for {mu}"));
    }
    let rows: Vec<(Partition, Scalar, Scalar)> = partitions_of(j)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|la| {
            let lhs = up_distribution(&la, alpha).expect(|big| y_value(big, mu, alpha))?;
            let rhs = y_value(&la, mu, alpha)?;
            Ok((la, lhs, rhs))
        })
        .collect::<Result<_>>()?;
    let mut c = Check::new("jack martingale", j, alpha).with_mu(mu);
    for (la, lhs, rhs) in rows {
        c.expect_eq(&lhs, &rhs, || format!("lambda={la}"));
    }
    Ok(c.finish())
}

/// The `α = 1` character form, with the Plancherel growth rule written
/// through dimensions.
pub fn martingale_check_class(j: usize, mu: &Partition) -> Result<IdentityReport> {
    if j >= mu.size() {
        return domain(format!("need j < |mu|, got j={j} for {mu}"));
    }
    let mut c = Check::new("character martingale", j, &Alpha::one()).with_mu(mu);
    for la in partitions_of(j) {
        let lhs = plancherel_up(&la).expect(|big| y_value_class(big, mu))?;
        let rhs = y_value_class(&la, mu)?;
        c.expect_eq(&lhs, &rhs, || format!("lambda={la}"));
    }
    Ok(c.finish())
}

/// `E((Y_{j+1} - Y_j)² | λ(j) = λ)`, `j = |λ| < |μ|`.
pub fn conditional_second_moment(lambda: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Scalar> {
    if lambda.size() >= mu.size() {
        return domain(format!("need |lambda| < |mu|, got {lambda} and {mu}"));
    }
    let y = y_value(lambda, mu, alpha)?;
    up_distribution(lambda, alpha).expect(|big| {
        let d = y_value(big, mu, alpha)? - &y;
        Ok(&d * &d)
    })
}

/// The same quantity at `α = 1` from characters and dimension ratios.
pub fn conditional_second_moment_class(lambda: &Partition, mu: &Partition) -> Result<Scalar> {
    if lambda.size() >= mu.size() {
        return domain(format!("need |lambda| < |mu|, got {lambda} and {mu}"));
    }
    let y = y_value_class(lambda, mu)?;
    plancherel_up(lambda).expect(|big| {
        let d = y_value_class(big, mu)? - &y;
        Ok(&d * &d)
    })
}

/// `P(λ(k) = σ and λ(n) = top)` for every `σ ⊂ top` of size `k`, as a list per
/// level `k = 0..=n`.
fn bridge_weights(top: &Partition, alpha: &Alpha) -> Vec<Vec<(Partition, Scalar)>> {
    let n = top.size();
    // h[k][σ] = P(reach top | λ(k) = σ)
    let mut levels: Vec<Vec<(Partition, Scalar)>> = vec![Vec::new(); n + 1];
    levels[n] = vec![(top.clone(), Scalar::one())];
    for k in (0..n).rev() {
        let above = &levels[k + 1];
        let mut here = Vec::new();
        for sigma in partitions_of(k).filter(|s| top.contains(s)) {
            let h = up_distribution(&sigma, alpha)
                .targets
                .iter()
                .filter_map(|(big, p)| {
                    above.iter().find(|(s, _)| s == big).map(|(_, h)| p * h)
                })
                .sum();
            here.push((sigma, h));
        }
        levels[k] = here;
    }
    for level in &mut levels {
        for (sigma, h) in level.iter_mut() {
            *h *= jack_weight(sigma, alpha);
        }
    }
    levels
}

/// `E(Y_j | λ(n) = λ)` with `n = |λ| = |μ|`, summed over all paths ending at `λ`.
pub fn conditional_expectation_given_top(
    lambda: &Partition,
    j: usize,
    mu: &Partition,
    alpha: &Alpha,
) -> Result<Scalar> {
    let n = lambda.size();
    if mu.size() != n || j > n {
        return domain(format!("need |lambda| = |mu| >= j, got {lambda}, {mu}, j={j}"));
    }
    let levels = bridge_weights(lambda, alpha);
    let mut acc = Scalar::zero();
    for (sigma, w) in &levels[j] {
        acc += w * y_value(sigma, mu, alpha)?;
    }
    Ok(acc / jack_weight(lambda, alpha))
}

/// `Y_n(λ) m_1(μ)_{↓n-j} / n_{↓n-j}`.
pub fn conditional_expectation_closed(
    lambda: &Partition,
    j: usize,
    mu: &Partition,
    alpha: &Alpha,
) -> Result<Scalar> {
    let n = lambda.size();
    if mu.size() != n || j > n {
        return domain(format!("need |lambda| = |mu| >= j, got {lambda}, {mu}, j={j}"));
    }
    Ok(y_value(lambda, mu, alpha)? * uint(&falling_factorial(mu.multiplicity(1), n - j))
        / uint(&falling_factorial(n, n - j)))
}

/// `|C_j| / |C_n| · Y_n` at `α = 1`, with `|C_j|` the size of the restricted class.
pub fn conditional_expectation_class_closed(
    lambda: &Partition,
    j: usize,
    mu: &Partition,
) -> Result<Scalar> {
    let n = lambda.size();
    if mu.size() != n || j > n {
        return domain(format!("need |lambda| = |mu| >= j, got {lambda}, {mu}, j={j}"));
    }
    let Some(class) = mu.minus_ones(n - j) else {
        return Ok(Scalar::zero());
    };
    let cj = uint(&crate::measures::class_size(&class));
    let cn = uint(&crate::measures::class_size(mu));
    Ok(cj / cn * y_value_class(lambda, mu)?)
}

/// `E(Y_j - Y_{j-1})²` under the growth process, `1 <= j <= |μ|`, with
/// `Y_0 = θ^∅_{μ-1^n}`.
pub fn increment_second_moment_expect(j: usize, mu: &Partition, alpha: &Alpha) -> Result<Scalar> {
    if j == 0 || j > mu.size() {
        return domain(format!("need 1 <= j <= |mu|, got j={j}"));
    }
    let mut acc = Scalar::zero();
    for tau in partitions_of(j - 1) {
        let w = jack_weight(&tau, alpha);
        acc += w * conditional_second_moment(&tau, mu, alpha)?;
    }
    Ok(acc)
}

/// `α^{n-l(μ)} (j-1)! (n - m_1(μ)) / z_{μ-1^{n-j}}`, and 0 when `μ - 1^{n-j}`
/// does not exist.
pub fn increment_second_moment_closed(j: usize, mu: &Partition, alpha: &Alpha) -> Result<Scalar> {
    let n = mu.size();
    if j == 0 || j > n {
        return domain(format!("need 1 <= j <= |mu|, got j={j}"));
    }
    let Some(class) = mu.minus_ones(n - j) else {
        return Ok(Scalar::zero());
    };
    Ok(alpha.powi((n - mu.length()) as i64)
        * uint(&factorial(j - 1))
        * int((n - mu.multiplicity(1)) as i64)
        / uint(&z_stat(&class)))
}

/// `|C_j| - |C_{j-1}|` for the restricted classes at `α = 1`.
pub fn increment_second_moment_class_closed(j: usize, mu: &Partition) -> Result<Scalar> {
    let n = mu.size();
    if j == 0 || j > n {
        return domain(format!("need 1 <= j <= |mu|, got j={j}"));
    }
    let size = |k: usize| -> Scalar {
        match mu.minus_ones(n - k) {
            Some(c) => uint(&crate::measures::class_size(&c)),
            None => Scalar::zero(),
        }
    };
    Ok(size(j) - size(j - 1))
}

/// `E(Y_j - Y_{j-1})²` at `α = 1` from characters.
pub fn increment_second_moment_class(j: usize, mu: &Partition) -> Result<Scalar> {
    if j == 0 || j > mu.size() {
        return domain(format!("need 1 <= j <= |mu|, got j={j}"));
    }
    let mut acc = Scalar::zero();
    for tau in partitions_of(j - 1) {
        let w = crate::measures::plancherel_weight(&tau);
        acc += w * conditional_second_moment_class(&tau, mu)?;
    }
    Ok(acc)
}

/// `Y_j² - α C(j,2)` is a martingale for the transposition class, for every
/// `λ ⊢ j < n`.
pub fn square_martingale_check(n: usize, alpha: &Alpha) -> IdentityReport {
    let mut c = Check::new("square martingale", n, alpha);
    let a = alpha.value();
    let f = |la: &Partition| -> Scalar {
        let y = theta_transposition(la, alpha);
        &y * &y - a * uint(&binomial(la.size(), 2))
    };
    for j in 0..n {
        for la in partitions_of(j) {
            let lhs = up_distribution(&la, alpha).expect(|big| Ok(f(big))).expect("infallible");
            c.expect_eq(&lhs, &f(&la), || format!("lambda={la}"));
        }
    }
    c.finish()
}

/// Mean content of the cell labelled `j` over standard tableaux of shape `λ`.
pub fn record_statistic(lambda: &Partition, j: usize) -> Result<Scalar> {
    let n = lambda.size();
    if j == 0 || j > n {
        return domain(format!("need 1 <= j <= {n}, got {j}"));
    }
    let mut total = 0i64;
    let mut count = 0i64;
    for path in syt_enumerate(lambda) {
        total += path.added_cells()[j - 1].content();
        count += 1;
    }
    Ok(int(total) / int(count))
}

/// `(j-1)/C(n,2) · Σ_x c(x)`.
pub fn record_statistic_closed(lambda: &Partition, j: usize) -> Result<Scalar> {
    let n = lambda.size();
    if j == 0 || j > n {
        return domain(format!("need 1 <= j <= {n}, got {j}"));
    }
    if n < 2 {
        return Ok(Scalar::zero());
    }
    Ok(int(j as i64 - 1) * int(lambda.content_sum()) / uint(&binomial(n, 2)))
}

/// At `α = 1`, conditioned on the endpoint, every path has probability
/// `1/syt_count`.
pub fn uniform_syt_check(n: usize) -> IdentityReport {
    let one = Alpha::one();
    let mut c = Check::new("uniform tableaux given endpoint", n, &one);
    for la in partitions_of(n) {
        let target = uint(&la.syt_count()).recip();
        let pl = jack_weight(&la, &one);
        for path in syt_enumerate(&la) {
            let mut prob = Scalar::one();
            for k in 0..n {
                prob *= up_distribution(path.shape(k), &one).probability(path.shape(k + 1));
            }
            c.expect_eq(&(prob / &pl), &target, || format!("path to {la}"));
        }
    }
    c.finish()
}

/// Mean 0 and second moment `α|λ|` of the α-content of the added cell.
pub fn kerov_constancy_check(n: usize, alpha: &Alpha) -> IdentityReport {
    let mut c = Check::new("kerov content moments", n, alpha);
    for la in partitions_of(n) {
        let dist = up_distribution(&la, alpha);
        let m1 = dist
            .expect(|big| Ok(big.cover_cell(&la).expect("cover").alpha_content(alpha)))
            .expect("infallible");
        let m2 = dist
            .expect(|big| Ok(pow(&big.cover_cell(&la).expect("cover").alpha_content(alpha), 2)))
            .expect("infallible");
        c.expect_eq(&m1, &Scalar::zero(), || format!("mean at {la}"));
        c.expect_eq(&m2, &(alpha.value() * int(n as i64)), || format!("variance at {la}"));
    }
    c.finish()
}

/// Up and down transition rows sum to one for every partition of `n`.
pub fn transition_sum_check(n: usize, alpha: &Alpha) -> Result<IdentityReport> {
    let mut c = Check::new("transition rows sum to one", n, alpha);
    for la in partitions_of(n) {
        c.expect_eq(&up_distribution(&la, alpha).total(), &Scalar::one(), || {
            format!("up from {la}")
        });
        if n > 0 {
            c.expect_eq(&down_distribution(&la, alpha)?.total(), &Scalar::one(), || {
                format!("down from {la}")
            });
        }
    }
    Ok(c.finish())
}
