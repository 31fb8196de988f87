//! Symmetric functions in the power-sum and monomial bases, the α-deformed
//! inner product, Jack polynomials `J_λ^{(α)}` and their power-sum
//! coefficients `θ^λ_μ(α)`.
//!
//! `J_λ` is produced by Gram–Schmidt on the monomial basis in lexicographic
//! order (a linear extension of dominance) and normalized so that the
//! coefficient of `m_{(1^n)}` is `n!`, equivalently `θ^λ_{(1^n)} = 1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, int, uint, Alpha, Scalar};
use crate::measures::{c_poly, c_prime_poly, z_stat};
use crate::partition::{partitions_of, Partition};
use crate::report::{Check, IdentityReport};

/// Largest degree handled by the basis-change and Jack machinery.
pub const MAX_DEGREE: usize = 10;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::Resource {
            what: "symmetric function degree",
            requested: n,
            limit: MAX_DEGREE,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Power,
    Monomial,
}

/// Dense change-of-basis matrix for degree `n`.
///
/// `entries[i][j]` is the coefficient of the `j`-th target basis element in
/// the `i`-th source basis element; both are indexed by `partitions`
/// (reverse-lexicographic).
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMatrix {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
}

impl BasisMatrix {
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row][col]
    }

    pub fn mul(&self, other: &BasisMatrix) -> BasisMatrix {
        let k = self.partitions.len();
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .filter(|&t| !self.entries[i][t].is_zero())
                            .map(|t| &self.entries[i][t] * &other.entries[t][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        BasisMatrix {
            n: self.n,
            partitions: self.partitions.clone(),
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }
}

/// Number of maps from the parts of `mu` to the rows of `lambda` whose fibres
/// sum to the row lengths; this is the coefficient of `m_λ` in `p_μ`.
fn power_monomial_coefficient(mu: &Partition, lambda: &Partition) -> u64 {
    fn go(
        parts: &[usize],
        idx: usize,
        remaining: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        if idx == parts.len() {
            return u64::from(remaining.iter().all(|&r| r == 0));
        }
        let mut key = remaining.clone();
        key.sort_unstable();
        if let Some(&v) = memo.get(&(idx, key.clone())) {
            return v;
        }
        let mut total = 0;
        for i in 0..remaining.len() {
            if remaining[i] >= parts[idx] {
                remaining[i] -= parts[idx];
                total += go(parts, idx + 1, remaining, memo);
                remaining[i] += parts[idx];
            }
        }
        memo.insert((idx, key), total);
        total
    }
    if mu.size() != lambda.size() {
        return 0;
    }
    let mut remaining = lambda.parts().to_vec();
    go(mu.parts(), 0, &mut remaining, &mut HashMap::new())
}

/// `p_μ = Σ_λ L_{μλ} m_λ`.
pub fn power_to_monomial(n: usize) -> Result<BasisMatrix> {
    check_degree(n)?;
    let partitions: Vec<Partition> = partitions_of(n).collect();
    let entries = partitions
        .iter()
        .map(|mu| {
            partitions
                .iter()
                .map(|la| int(power_monomial_coefficient(mu, la) as i64))
                .collect()
        })
        .collect();
    Ok(BasisMatrix {
        n,
        partitions,
        entries,
    })
}

/// Inverse of [`power_to_monomial`]: `m_λ` in terms of the `p_μ`.
pub fn monomial_to_power(n: usize) -> Result<BasisMatrix> {
    let p2m = power_to_monomial(n)?;
    let k = p2m.partitions.len();
    // p2m is lower triangular in reverse-lex indexing; invert by forward substitution
    let mut inv = vec![vec![Scalar::zero(); k]; k];
    for col in 0..k {
        for row in col..k {
            let mut rhs = if row == col { Scalar::one() } else { Scalar::zero() };
            for t in col..row {
                if !p2m.entries[row][t].is_zero() {
                    rhs -= &p2m.entries[row][t] * &inv[t][col];
                }
            }
            let pivot = &p2m.entries[row][row];
            if pivot.is_zero() {
                return Err(Error::Internal(format!(
                    "power/monomial matrix not triangular at {}",
                    p2m.partitions[row]
                )));
            }
            inv[row][col] = rhs / pivot;
        }
    }
    // upper part must vanish; assert triangularity of the forward matrix
    for row in 0..k {
        for col in row + 1..k {
            if !p2m.entries[row][col].is_zero() {
                return Err(Error::Internal("power/monomial matrix not triangular".into()));
            }
        }
    }
    Ok(BasisMatrix {
        n,
        partitions: p2m.partitions,
        entries: inv,
    })
}

struct BasisChange {
    index: HashMap<Partition, usize>,
    p2m: BasisMatrix,
    m2p: BasisMatrix,
}

fn basis_change(n: usize) -> Result<Arc<BasisChange>> {
    check_degree(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BasisChange>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("poisoned").get(&n) {
        return Ok(b.clone());
    }
    let p2m = power_to_monomial(n)?;
    let m2p = monomial_to_power(n)?;
    let index = p2m
        .partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let built = Arc::new(BasisChange { index, p2m, m2p });
    cache
        .lock()
        .expect("poisoned")
        .entry(n)
        .or_insert(built.clone());
    Ok(built)
}

/// `z_μ α^{l(μ)} = <p_μ, p_μ>_α`.
pub fn power_norm(mu: &Partition, alpha: &Alpha) -> Scalar {
    uint(&z_stat(mu)) * alpha.powi(mu.length() as i64)
}

/// A homogeneous symmetric function stored sparsely in one basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis element `p_μ` or `m_μ`.
    pub fn basis_element(basis: Basis, mu: &Partition) -> Self {
        let mut f = Self::zero(mu.size(), basis);
        f.coeffs.insert(mu.clone(), Scalar::one());
        f
    }

    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> Result<Self> {
        let mut f = Self::zero(degree, basis);
        for (mu, c) in terms {
            if mu.size() != degree {
                return domain(format!("term {mu} does not have degree {degree}"));
            }
            f.add_term(mu, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, mu: Partition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let mut entry = self.coeffs.remove(&mu).unwrap_or_else(Scalar::zero);
        entry += c;
        if !entry.is_zero() {
            self.coeffs.insert(mu, entry);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficient(&self, mu: &Partition) -> Scalar {
        self.coeffs.get(mu).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        let mut out = Self::zero(self.degree, self.basis);
        for (mu, v) in &self.coeffs {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return domain("cannot add symmetric functions of different degrees");
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (mu, v) in other.coeffs {
            out.add_term(mu, v);
        }
        Ok(out)
    }

    pub fn to_basis(&self, basis: Basis) -> Result<SymFunc> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let change = basis_change(self.degree)?;
        let matrix = match basis {
            Basis::Monomial => &change.p2m,
            Basis::Power => &change.m2p,
        };
        let mut out = Self::zero(self.degree, basis);
        for (mu, v) in &self.coeffs {
            let i = change.index[mu];
            for (j, x) in matrix.entries[i].iter().enumerate() {
                if !x.is_zero() {
                    out.add_term(matrix.partitions[j].clone(), v * x);
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by `p_1`.
    pub fn mul_p1(&self) -> Result<SymFunc> {
        let f = self.to_basis(Basis::Power)?;
        let mut out = Self::zero(self.degree + 1, Basis::Power);
        for (mu, v) in f.coeffs {
            out.add_term(mu.plus_ones(1), v);
        }
        Ok(out)
    }

    /// The adjoint of multiplication by `p_1` for `<,>_α`, which is
    /// `α ∂/∂p_1` in the power-sum basis. Degree 0 maps to zero.
    pub fn p1_perp(&self, alpha: &Alpha) -> Result<SymFunc> {
        let f = self.to_basis(Basis::Power)?;
        let mut out = Self::zero(self.degree.saturating_sub(1), Basis::Power);
        for (mu, v) in f.coeffs {
            let m1 = mu.multiplicity(1);
            if m1 > 0 {
                let lower = mu.minus_ones(1).expect("has a part 1");
                out.add_term(lower, v * alpha.value() * int(m1 as i64));
            }
        }
        Ok(out)
    }
}

/// `<f, g>_α`, the bilinear extension of `<p_ν, p_μ> = δ z_μ α^{l(μ)}`.
pub fn inner_product_alpha(f: &SymFunc, g: &SymFunc, alpha: &Alpha) -> Result<Scalar> {
    if f.degree != g.degree {
        return domain(format!(
            "inner product of degrees {} and {}",
            f.degree, g.degree
        ));
    }
    let f = f.to_basis(Basis::Power)?;
    let g = g.to_basis(Basis::Power)?;
    Ok(f.coeffs
        .iter()
        .filter_map(|(mu, a)| g.coeffs.get(mu).map(|b| a * b * power_norm(mu, alpha)))
        .sum())
}

/// The coefficients `θ^λ_μ(α)` of `p_μ` in `J_λ^{(α)}` for all `λ, μ ⊢ n`.
#[derive(Clone, Debug)]
pub struct ThetaTable {
    n: usize,
    alpha: Alpha,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `entries[i][j] = θ^{partitions[i]}_{partitions[j]}`
    entries: Vec<Vec<Scalar>>,
}

impl ThetaTable {
    /// Gram–Schmidt construction in exact arithmetic.
    pub fn build(n: usize, alpha: &Alpha) -> Result<ThetaTable> {
        let change = basis_change(n)?;
        let partitions = change.p2m.partitions.clone();
        let k = partitions.len();
        let norms: Vec<Scalar> = partitions.iter().map(|mu| power_norm(mu, alpha)).collect();
        let dot = |a: &[Scalar], b: &[Scalar]| -> Scalar {
            a.iter()
                .zip(b)
                .zip(&norms)
                .filter(|((x, y), _)| !x.is_zero() && !y.is_zero())
                .map(|((x, y), z)| x * y * z)
                .sum()
        };
        let mut ortho: Vec<Option<(Vec<Scalar>, Scalar)>> = vec![None; k];
        // increasing lexicographic order is the reverse of the enumeration order
        for i in (0..k).rev() {
            let mut v = change.m2p.entries[i].clone();
            for (basis_vec, norm) in ortho.iter().flatten() {
                let coef = dot(&v, basis_vec) / norm;
                if coef.is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(basis_vec) {
                    if !b.is_zero() {
                        *x -= &coef * b;
                    }
                }
            }
            let norm = dot(&v, &v);
            if norm.is_zero() {
                return Err(Error::Internal(format!(
                    "degenerate Gram–Schmidt pivot at {} for alpha {alpha}",
                    partitions[i]
                )));
            }
            ortho[i] = Some((v, norm));
        }
        let last = k - 1; // (1^n)
        let entries = ortho
            .into_iter()
            .map(|o| {
                let (v, _) = o.expect("filled");
                let lead = v[last].clone();
                if lead.is_zero() {
                    return Err(Error::Internal("vanishing p_(1^n) coefficient".into()));
                }
                Ok(v.into_iter().map(|x| x / &lead).collect())
            })
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        Ok(ThetaTable {
            n,
            alpha: alpha.clone(),
            index: change.index.clone(),
            partitions,
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<&Scalar> {
        let i = self.lookup(lambda)?;
        let j = self.lookup(mu)?;
        Ok(&self.entries[i][j])
    }

    fn lookup(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{p} is not a partition of {}", self.n)))
    }

    /// `J_λ` in the power-sum basis.
    pub fn jack(&self, lambda: &Partition) -> Result<SymFunc> {
        let i = self.lookup(lambda)?;
        SymFunc::from_terms(
            self.n,
            Basis::Power,
            self.partitions.iter().cloned().zip(self.entries[i].iter().cloned()),
        )
    }
}

type TableCache = Mutex<HashMap<(usize, Alpha), Arc<ThetaTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, immutable θ-table for `(n, α)`; built on first use.
pub fn theta_table(n: usize, alpha: &Alpha) -> Result<Arc<ThetaTable>> {
    let key = (n, alpha.clone());
    if let Some(t) = table_cache().lock().expect("poisoned").get(&key) {
        return Ok(t.clone());
    }
    let built = Arc::new(ThetaTable::build(n, alpha)?);
    Ok(table_cache()
        .lock()
        .expect("poisoned")
        .entry(key)
        .or_insert(built)
        .clone())
}

/// `J_λ^{(α)}` in the monomial basis.
pub fn jack_j(lambda: &Partition, alpha: &Alpha) -> Result<SymFunc> {
    theta_table(lambda.size(), alpha)?
        .jack(lambda)?
        .to_basis(Basis::Monomial)
}

pub fn theta(lambda: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Scalar> {
    if lambda.size() != mu.size() {
        return domain(format!("θ needs |λ| = |μ|, got {lambda} and {mu}"));
    }
    Ok(theta_table(lambda.size(), alpha)?.get(lambda, mu)?.clone())
}

/// Closed form `Σ_i (α C(λ_i, 2) - C(λ'_i, 2))` for `θ^λ_{(2,1^{n-2})}(α)`.
pub fn theta_transposition(lambda: &Partition, alpha: &Alpha) -> Scalar {
    let rows: Scalar = lambda
        .parts()
        .iter()
        .map(|&r| uint(&binomial(r, 2)))
        .sum();
    let cols: Scalar = lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&c| uint(&binomial(c, 2)))
        .sum();
    alpha.value() * rows - cols
}

/// The branching weight `ψ'_{λ/τ}(α)` for `τ ⊂ λ` differing by one cell.
///
/// The product runs over cells in the column of the added cell that are not in
/// its row, i.e. the cells strictly above it.
pub fn psi_prime(lambda: &Partition, tau: &Partition, alpha: &Alpha) -> Result<Scalar> {
    let Some(added) = lambda.cover_cell(tau) else {
        return domain(format!("{lambda} does not cover {tau}"));
    };
    let a = alpha.value();
    let mut acc = Scalar::one();
    for row in 1..added.row {
        let cell = crate::partition::Cell::new(row, added.col);
        let (al, ll) = (int(lambda.arm(cell)? as i64), int(lambda.leg(cell)? as i64));
        let (at, lt) = (int(tau.arm(cell)? as i64), int(tau.leg(cell)? as i64));
        let one = Scalar::one();
        acc *= (a * &al + &ll + &one) / (a * &al + &ll + a);
        acc *= (a * &at + &lt + a) / (a * &at + &lt + &one);
    }
    Ok(acc)
}

/// `Σ_{τ} ψ'_{λ/τ} dim_α(τ)`, to be compared with `dim_α(λ)`.
pub fn stanley_branching_sum(lambda: &Partition, alpha: &Alpha) -> Result<Scalar> {
    lambda
        .down_covers()
        .into_iter()
        .map(|(_, tau)| {
            Ok(psi_prime(lambda, &tau, alpha)? * crate::measures::dim_alpha(&tau, alpha))
        })
        .sum()
}

/// Orthogonality of the θ-rows, the Pieri rule for `p_1 J_λ`, the
/// `p_1^⊥ J_λ` expansion and the adjointness `p_1^⊥ = α ∂/∂p_1`, for every
/// degree up to `n` (the Pieri rule needs degree `n + 1` tables).
pub fn verify_basis_identities(n: usize, alpha: &Alpha) -> Result<Vec<IdentityReport>> {
    check_degree(n + 1)?;
    let mut out = Vec::new();
    for m in 1..=n {
        let table = theta_table(m, alpha)?;
        let upper = theta_table(m + 1, alpha)?;
        let lower = theta_table(m - 1, alpha)?;
        let parts = table.partitions().to_vec();

        let mut orth = Check::new("orthogonality of theta", m, alpha);
        let weights: Vec<Scalar> = parts
            .iter()
            .map(|r| (c_poly(r, alpha) * c_prime_poly(r, alpha)).recip())
            .collect();
        for mu in &parts {
            for eta in &parts {
                let lhs: Scalar = parts
                    .iter()
                    .zip(&weights)
                    .map(|(r, w)| table.get(r, mu).unwrap() * table.get(r, eta).unwrap() * w)
                    .sum();
                let rhs = if mu == eta {
                    power_norm(mu, alpha).recip()
                } else {
                    Scalar::zero()
                };
                orth.expect_eq(&lhs, &rhs, || format!("mu={mu} eta={eta}"));
            }
        }
        out.push(orth.finish());

        let mut norms = Check::new("jack dual norm", m, alpha);
        for (i, la) in parts.iter().enumerate() {
            let ji = table.jack(la)?;
            for nu in parts.iter().skip(i) {
                let ip = inner_product_alpha(&ji, &table.jack(nu)?, alpha)?;
                let rhs = if la == nu {
                    c_poly(la, alpha) * c_prime_poly(la, alpha)
                } else {
                    Scalar::zero()
                };
                norms.expect_eq(&ip, &rhs, || format!("<J_{la}, J_{nu}>"));
            }
        }
        out.push(norms.finish());

        let mut pieri = Check::new("p1 J expansion", m, alpha);
        let mut perp = Check::new("p1-perp J expansion", m, alpha);
        let mut adjoint = Check::new("p1-perp adjointness", m, alpha);
        for la in &parts {
            let j = table.jack(la)?;
            let lhs = j.mul_p1()?;
            let mut rhs = SymFunc::zero(m + 1, Basis::Power);
            for (_, big) in la.up_covers() {
                let w = c_poly(la, alpha) / c_poly(&big, alpha) * psi_prime(&big, la, alpha)?;
                rhs = rhs.add(&upper.jack(&big)?.scale(&w))?;
            }
            pieri.expect_eq(&lhs, &rhs, || format!("lambda={la}"));

            let lhs = j.p1_perp(alpha)?;
            let mut rhs = SymFunc::zero(m - 1, Basis::Power);
            for (_, small) in la.down_covers() {
                let w = c_prime_poly(la, alpha) / c_prime_poly(&small, alpha)
                    * psi_prime(la, &small, alpha)?;
                rhs = rhs.add(&lower.jack(&small)?.scale(&w))?;
            }
            perp.expect_eq(&lhs, &rhs, || format!("lambda={la}"));

            for g in lower.partitions() {
                let g = SymFunc::basis_element(Basis::Power, g);
                let l = inner_product_alpha(&g.mul_p1()?, &j, alpha)?;
                let r = inner_product_alpha(&g, &j.p1_perp(alpha)?, alpha)?;
                adjoint.expect_eq(&l, &r, || format!("h=J_{la}"));
            }
        }
        out.push(pieri.finish());
        out.push(perp.finish());
        out.push(adjoint.finish());
    }
    Ok(out)
}

/// Both θ-recursions for a fixed `μ`:
/// `θ^λ_{μ-1} = Σ_Λ (c_λ/c_Λ) ψ'_{Λ/λ} θ^Λ_μ` over `λ ⊢ |μ|-1`, and
/// `α m_1(μ) θ^λ_μ = Σ_τ (c'_λ/c'_τ) ψ'_{λ/τ} θ^τ_{μ-1}` over `λ ⊢ |μ|`.
pub fn verify_theta_recursions(mu: &Partition, alpha: &Alpha) -> Result<Vec<IdentityReport>> {
    let m = mu.size();
    check_degree(m)?;
    let mut out = Vec::new();
    if m == 0 {
        return Ok(out);
    }
    let table = theta_table(m, alpha)?;
    let lower = theta_table(m - 1, alpha)?;
    let mu_minus = mu.minus_ones(1);
    let lower_theta = |tau: &Partition| -> Result<Scalar> {
        match &mu_minus {
            Some(mm) => Ok(lower.get(tau, mm)?.clone()),
            None => Ok(Scalar::zero()),
        }
    };

    let mut up = Check::new("theta up recursion", m - 1, alpha).with_mu(mu);
    for la in lower.partitions() {
        let lhs = lower_theta(la)?;
        let mut rhs = Scalar::zero();
        for (_, big) in la.up_covers() {
            rhs += c_poly(la, alpha) / c_poly(&big, alpha)
                * psi_prime(&big, la, alpha)?
                * table.get(&big, mu)?;
        }
        up.expect_eq(&lhs, &rhs, || format!("lambda={la}"));
    }
    out.push(up.finish());

    let mut down = Check::new("theta down recursion", m, alpha).with_mu(mu);
    let m1 = int(mu.multiplicity(1) as i64);
    for la in table.partitions() {
        let lhs = alpha.value() * &m1 * table.get(la, mu)?;
        let mut rhs = Scalar::zero();
        for (_, small) in la.down_covers() {
            rhs += c_prime_poly(la, alpha) / c_prime_poly(&small, alpha)
                * psi_prime(la, &small, alpha)?
                * lower_theta(&small)?;
        }
        down.expect_eq(&lhs, &rhs, || format!("lambda={la}"));
    }
    out.push(down.finish());
    Ok(out)
}
