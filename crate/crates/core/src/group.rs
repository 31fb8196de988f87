//! Characters of the symmetric group and the tensor-product chain `L_η` on its
//! irreducible representations.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{factorial, format_scalar, int, pow, uint, Alpha, Scalar};
use crate::measures::class_size;
use crate::partition::{partitions_of, Partition};
use crate::report::{Check, IdentityReport};

/// Largest `n` for which character tables are built.
pub const MAX_CHARACTER_DEGREE: usize = 10;

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
fn murnaghan_nakayama(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.length();
    let betas: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0;
    for (i, &b) in betas.iter().enumerate() {
        if b < k || betas.contains(&(b - k)) {
            continue;
        }
        let crossed = betas.iter().filter(|&&c| b - k < c && c < b).count();
        let mut next = betas.clone();
        next[i] = b - k;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let smaller = Partition::new(parts).expect("rim hook removal keeps a partition");
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Exact character table of `S_n`; rows are irreducibles, columns are classes,
/// both in the enumeration order of [`partitions_of`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Result<CharacterTable> {
        if n > MAX_CHARACTER_DEGREE {
            return Err(Error::Resource {
                what: "character table degree",
                requested: n,
                limit: MAX_CHARACTER_DEGREE,
            });
        }
        let partitions: Vec<Partition> = partitions_of(n).collect();
        let values = partitions
            .iter()
            .map(|la| {
                let mut memo = HashMap::new();
                partitions
                    .iter()
                    .map(|mu| {
                        memo.clear();
                        murnaghan_nakayama(la, mu.parts(), &mut memo)
                    })
                    .collect()
            })
            .collect();
        let class_sizes = partitions.iter().map(|mu| class_size(mu).into()).collect();
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            partitions,
            index,
            values,
            class_sizes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{p} is not a partition of {}", self.n)))
    }

    /// `χ^λ(μ)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn dim(&self, lambda: &Partition) -> Result<i64> {
        self.value(lambda, &Partition::column(self.n))
    }

    pub fn class_size(&self, j: usize) -> &BigInt {
        &self.class_sizes[j]
    }

    /// `|C_μ| χ^λ(μ) / dim(λ)`.
    pub fn central_character(&self, lambda: &Partition, mu: &Partition) -> Result<Scalar> {
        let j = self.index_of(mu)?;
        Ok(Scalar::from_integer(self.class_sizes[j].clone()) * int(self.value(lambda, mu)?)
            / int(self.dim(lambda)?))
    }
}

/// Shared character table of `S_n`.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("poisoned").get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(CharacterTable::build(n)?);
    Ok(cache
        .lock()
        .expect("poisoned")
        .entry(n)
        .or_insert(built)
        .clone())
}

/// `χ^λ(12)/dim(λ) = Σ_i (C(λ_i,2) - C(λ'_i,2)) / C(n,2)`.
pub fn frobenius_ratio(lambda: &Partition) -> Result<Scalar> {
    let n = lambda.size();
    if n < 2 {
        return domain("the transposition class needs n >= 2");
    }
    let t = crate::jack::theta_transposition(lambda, &Alpha::one());
    Ok(t / uint(&crate::exact::binomial(n, 2)))
}

/// Row and column orthogonality of the table.
pub fn orthogonality_check(table: &CharacterTable) -> IdentityReport {
    let n = table.n();
    let mut c = Check::new("character orthogonality", n, &Alpha::one());
    let k = table.partitions.len();
    let nfact: BigInt = factorial(n).into();
    for a in 0..k {
        for b in 0..k {
            let rows: BigInt = (0..k)
                .map(|j| &table.class_sizes[j] * table.values[a][j] * table.values[b][j])
                .sum();
            let expect = if a == b { nfact.clone() } else { BigInt::zero() };
            c.expect_eq(&rows, &expect, || {
                format!("rows {} {}", table.partitions[a], table.partitions[b])
            });
            let cols: i64 = (0..k).map(|i| table.values[i][a] * table.values[i][b]).sum();
            let expect = if a == b {
                &nfact / &table.class_sizes[a]
            } else {
                BigInt::zero()
            };
            c.expect_eq(&BigInt::from(cols), &expect, || {
                format!("columns {} {}", table.partitions[a], table.partitions[b])
            });
        }
    }
    c.finish()
}

/// A rational-valued class function of `S_n`, indexed like the table columns.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<Scalar>,
}

impl ClassFunction {
    /// `Σ m_λ χ^λ`.
    pub fn from_multiplicities(n: usize, multiplicities: &[(Partition, u64)]) -> Result<Self> {
        let table = character_table(n)?;
        let mut values = vec![Scalar::zero(); table.partitions.len()];
        for (la, m) in multiplicities {
            let i = table.index_of(la)?;
            for (v, &x) in values.iter_mut().zip(table.row(i)) {
                *v += int(x) * int(*m as i64);
            }
        }
        Ok(ClassFunction { n, values })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_multiplicities(n, &[(Partition::row(n), 1)])
    }

    /// The standard character `χ^{(n-1,1)}`.
    pub fn standard(n: usize) -> Result<Self> {
        if n < 2 {
            return domain("the standard character needs n >= 2");
        }
        Self::from_multiplicities(n, &[(Partition::new(vec![n - 1, 1])?, 1)])
    }

    /// Number of fixed points, `χ^{(n)} + χ^{(n-1,1)}`.
    pub fn permutation(n: usize) -> Result<Self> {
        if n < 2 {
            return Self::trivial(n);
        }
        Self::from_multiplicities(n, &[(Partition::row(n), 1), (Partition::new(vec![n - 1, 1])?, 1)])
    }

    pub fn regular(n: usize) -> Result<Self> {
        let table = character_table(n)?;
        let m: Vec<(Partition, u64)> = table
            .partitions
            .iter()
            .map(|la| Ok((la.clone(), table.dim(la)? as u64)))
            .collect::<Result<_>>()?;
        Self::from_multiplicities(n, &m)
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Scalar {
        self.values.last().expect("at least one class")
    }

    /// `<f, χ^λ>` for every irreducible, in table order.
    pub fn multiplicities(&self) -> Result<Vec<Scalar>> {
        let table = character_table(self.n)?;
        let nfact = uint(&factorial(self.n));
        Ok((0..table.partitions.len())
            .map(|i| {
                let s: Scalar = (0..table.partitions.len())
                    .map(|j| {
                        Scalar::from_integer(table.class_sizes[j].clone())
                            * &self.values[j]
                            * int(table.values[i][j])
                    })
                    .sum();
                s / &nfact
            })
            .collect())
    }

    pub fn is_character(&self) -> Result<bool> {
        Ok(self
            .multiplicities()?
            .iter()
            .all(|m| m.is_integer() && !m.is_negative())
            && self.multiplicities()?.iter().any(|m| !m.is_zero()))
    }

    pub fn distinct_values(&self) -> BTreeSet<Scalar> {
        self.values.iter().cloned().collect()
    }

    /// Classes on which the value equals the degree; these make up the kernel.
    pub fn kernel_classes(&self) -> Result<Vec<Partition>> {
        let table = character_table(self.n)?;
        Ok(table
            .partitions
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| *v == self.degree())
            .map(|(p, _)| p.clone())
            .collect())
    }

    pub fn is_faithful(&self) -> Result<bool> {
        Ok(self.kernel_classes()?.len() == 1)
    }
}

/// The chain `L_η(λ, ρ) = dim(ρ) <χ^ρ, η χ^λ> / (η(1) dim(λ))`.
#[derive(Clone, Debug)]
pub struct IrrChain {
    pub n: usize,
    pub eta: ClassFunction,
    pub states: Vec<Partition>,
    pub matrix: Vec<Vec<Scalar>>,
    /// Plancherel measure `dim(λ)² / n!`.
    pub stationary: Vec<Scalar>,
}

pub fn chain_from_character(n: usize, eta: ClassFunction) -> Result<IrrChain> {
    if eta.n != n {
        return domain(format!("class function is on S_{}, not S_{n}", eta.n));
    }
    let table = character_table(n)?;
    if eta.values.len() != table.partitions.len() {
        return domain("class function has the wrong number of values");
    }
    if !eta.is_character()? {
        return domain("class function is not a character");
    }
    let k = table.partitions.len();
    let nfact = uint(&factorial(n));
    let dims: Vec<Scalar> = (0..k).map(|i| int(table.values[i][k - 1])).collect();
    let sizes: Vec<Scalar> = table
        .class_sizes
        .iter()
        .map(|c| Scalar::from_integer(c.clone()))
        .collect();
    let matrix = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let ip: Scalar = (0..k)
                        .map(|j| {
                            &sizes[j]
                                * &eta.values[j]
                                * int(table.values[a][j] * table.values[b][j])
                        })
                        .sum::<Scalar>()
                        / &nfact;
                    &dims[b] * ip / (eta.degree() * &dims[a])
                })
                .collect()
        })
        .collect();
    let stationary = dims.iter().map(|d| d * d / &nfact).collect();
    Ok(IrrChain {
        n,
        eta,
        states: table.partitions.clone(),
        matrix,
        stationary,
    })
}

impl IrrChain {
    /// Eigenvalues `η(C)/η(1)`, one per class in table order.
    pub fn eigenvalues(&self) -> Vec<Scalar> {
        self.eta
            .values
            .iter()
            .map(|v| v / self.eta.degree())
            .collect()
    }

    pub fn distinct_eigenvalue_count(&self) -> usize {
        self.eigenvalues().into_iter().collect::<BTreeSet<_>>().len()
    }

    fn state_index(&self, rho: &Partition) -> Result<usize> {
        self.states
            .iter()
            .position(|s| s == rho)
            .ok_or_else(|| Error::Domain(format!("{rho} is not a state of the chain")))
    }
}

/// Stochasticity, nonnegativity, reversibility, the eigenvalue equations
/// `L φ_C = (η(C)/η(1)) φ_C` with `φ_C(ρ) = χ^ρ(C)/dim(ρ)`, and orthonormality
/// of `ψ_C = |C|^{1/2} φ_C` in `L²(π)` checked through `|C| Σ π φ_C²`.
pub fn verify_dictionary(chain: &IrrChain) -> Result<Vec<IdentityReport>> {
    let n = chain.n;
    let one = Alpha::one();
    let table = character_table(n)?;
    let k = chain.states.len();
    let l = &chain.matrix;

    let mut stoch = Check::new("chain rows sum to one", n, &one);
    let mut nonneg = Check::new("chain entries nonnegative", n, &one);
    let mut rev = Check::new("chain reversible for plancherel", n, &one);
    for a in 0..k {
        let s: Scalar = l[a].iter().sum();
        stoch.expect_eq(&s, &Scalar::one(), || format!("row {}", chain.states[a]));
        for b in 0..k {
            nonneg.expect(!l[a][b].is_negative(), || {
                format!("L({}, {}) = {}", chain.states[a], chain.states[b], format_scalar(&l[a][b]))
            });
            let lhs = &chain.stationary[a] * &l[a][b];
            let rhs = &chain.stationary[b] * &l[b][a];
            rev.expect_eq(&lhs, &rhs, || format!("{} {}", chain.states[a], chain.states[b]));
        }
    }

    let phi: Vec<Vec<Scalar>> = (0..k)
        .map(|c| {
            (0..k)
                .map(|r| int(table.values[r][c]) / int(table.values[r][k - 1]))
                .collect()
        })
        .collect();
    let eig = chain.eigenvalues();
    let mut eigen = Check::new("chain eigenfunctions", n, &one);
    let mut ortho = Check::new("chain eigenfunctions orthonormal", n, &one);
    for c in 0..k {
        for a in 0..k {
            let lhs: Scalar = (0..k).map(|b| &l[a][b] * &phi[c][b]).sum();
            let rhs = &eig[c] * &phi[c][a];
            eigen.expect_eq(&lhs, &rhs, || {
                format!("class {} state {}", table.partitions[c], chain.states[a])
            });
        }
        for d in 0..k {
            let ip: Scalar = (0..k)
                .map(|r| &chain.stationary[r] * &phi[c][r] * &phi[d][r])
                .sum();
            let lhs = if c == d {
                Scalar::from_integer(table.class_sizes[c].clone()) * ip
            } else {
                ip
            };
            let rhs = if c == d { Scalar::one() } else { Scalar::zero() };
            ortho.expect_eq(&lhs, &rhs, || {
                format!("classes {} {}", table.partitions[c], table.partitions[d])
            });
        }
    }
    Ok(vec![
        stoch.finish(),
        nonneg.finish(),
        rev.finish(),
        eigen.finish(),
        ortho.finish(),
    ])
}

/// Probability of reaching `rho` from the trivial representation in `j` steps,
/// by matrix powers.
pub fn power_step_probability(chain: &IrrChain, rho: &Partition, j: usize) -> Result<Scalar> {
    let target = chain.state_index(rho)?;
    let start = chain.state_index(&Partition::row(chain.n))?;
    let k = chain.states.len();
    let mut dist = vec![Scalar::zero(); k];
    dist[start] = Scalar::one();
    for _ in 0..j {
        let mut next = vec![Scalar::zero(); k];
        for (a, p) in dist.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (b, x) in chain.matrix[a].iter().enumerate() {
                if !x.is_zero() {
                    next[b] += p * x;
                }
            }
        }
        dist = next;
    }
    Ok(dist[target].clone())
}

/// `<η^j, χ^ρ>`, the multiplicity of `ρ` in the `j`-th tensor power.
pub fn tensor_power_multiplicity(chain: &IrrChain, rho: &Partition, j: usize) -> Result<Scalar> {
    let table = character_table(chain.n)?;
    let r = table.index_of(rho)?;
    let s: Scalar = (0..table.partitions.len())
        .map(|c| {
            Scalar::from_integer(table.class_sizes[c].clone())
                * pow(&chain.eta.values[c], j)
                * int(table.values[r][c])
        })
        .sum();
    Ok(s / uint(&factorial(chain.n)))
}

/// The same probability from characters: `dim(ρ) <η^j, χ^ρ> / η(1)^j`.
pub fn power_step_probability_characters(
    chain: &IrrChain,
    rho: &Partition,
    j: usize,
) -> Result<Scalar> {
    let table = character_table(chain.n)?;
    let dim = int(table.dim(rho)?);
    Ok(dim * tensor_power_multiplicity(chain, rho, j)? / pow(chain.eta.degree(), j))
}

/// Agreement of both step-probability routes for every state and `j <= max_j`.
pub fn power_step_check(chain: &IrrChain, max_j: usize) -> Result<IdentityReport> {
    let mut c = Check::new("j-step probability from characters", chain.n, &Alpha::one());
    for j in 0..=max_j {
        for rho in &chain.states {
            let a = power_step_probability(chain, rho, j)?;
            let b = power_step_probability_characters(chain, rho, j)?;
            c.expect_eq(&a, &b, || format!("rho={rho} j={j}"));
        }
    }
    Ok(c.finish())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BurnsideBrauer {
    /// Number of distinct values of `η`.
    pub m: usize,
    pub faithful: bool,
    pub kernel: Vec<Partition>,
    /// Least `j` with `<η^j, χ^ρ> > 0`, searched up to `2m`.
    pub first_power: Vec<(Partition, Option<usize>)>,
}

impl BurnsideBrauer {
    pub fn all_covered_below_m(&self) -> bool {
        self.first_power
            .iter()
            .all(|(_, j)| matches!(j, Some(j) if *j < self.m))
    }

    pub fn to_report(&self, n: usize) -> IdentityReport {
        let mut c = Check::new("burnside-brauer coverage", n, &Alpha::one());
        if !self.faithful {
            let kernel: Vec<String> = self.kernel.iter().map(|p| p.to_string()).collect();
            c.expect(false, || {
                format!("hypothesis violated: eta is not faithful, kernel classes [{}]", kernel.join("; "))
            });
        }
        for (rho, j) in &self.first_power {
            c.expect(matches!(j, Some(j) if *j < self.m), || {
                format!("rho={rho} first power {j:?} with m={}", self.m)
            });
        }
        c.finish()
    }
}

pub fn burnside_brauer_check(chain: &IrrChain) -> Result<BurnsideBrauer> {
    let m = chain.eta.distinct_values().len();
    let kernel = chain.eta.kernel_classes()?;
    let faithful = kernel.len() == 1;
    let first_power = chain
        .states
        .iter()
        .map(|rho| {
            for j in 0..=2 * m {
                if tensor_power_multiplicity(chain, rho, j)?.is_positive() {
                    return Ok((rho.clone(), Some(j)));
                }
            }
            Ok((rho.clone(), None))
        })
        .collect::<Result<_>>()?;
    Ok(BurnsideBrauer {
        m,
        faithful,
        kernel,
        first_power,
    })
}

/// Graph diameter for edges with `π(λ)L(λ,ρ) > 0`; a disconnected graph means
/// `η` is not faithful and is reported as an error.
pub fn weighted_graph_diameter(chain: &IrrChain) -> Result<usize> {
    let k = chain.states.len();
    let mut diameter = 0;
    for s in 0..k {
        let mut dist = vec![usize::MAX; k];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in 0..k {
                if dist[b] == usize::MAX && chain.matrix[a][b].is_positive() {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        if let Some(b) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Hypothesis(format!(
                "graph of L_eta is disconnected ({} cannot reach {}); eta is not faithful",
                chain.states[s], chain.states[b]
            )));
        }
        diameter = diameter.max(*dist.iter().max().expect("nonempty"));
    }
    Ok(diameter)
}

/// Diameter at most `m - 1` and at least `diameter + 1` distinct eigenvalues.
pub fn diameter_check(chain: &IrrChain) -> Result<IdentityReport> {
    let mut c = Check::new("diameter bound", chain.n, &Alpha::one());
    let m = chain.eta.distinct_values().len();
    match weighted_graph_diameter(chain) {
        Ok(d) => {
            c.expect(d < m, || format!("diameter {d} with m={m}"));
            let e = chain.distinct_eigenvalue_count();
            c.expect(e > d, || format!("diameter {d} with {e} distinct eigenvalues"));
        }
        Err(Error::Hypothesis(msg)) => c.expect(false, || msg),
        Err(e) => return Err(e),
    }
    Ok(c.finish())
}

/// Parses the `partition multiplicity` per line format; blank lines and `#`
/// comments are skipped.
pub fn parse_eta(n: usize, text: &str) -> Result<ClassFunction> {
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(p), Some(m), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse(format!(
                "line {}: expected `partition multiplicity`",
                lineno + 1
            )));
        };
        let p: Partition = p.parse()?;
        if p.size() != n {
            return Err(Error::Parse(format!("line {}: {p} is not a partition of {n}", lineno + 1)));
        }
        let m: u64 = m
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad multiplicity {m:?}", lineno + 1)))?;
        terms.push((p, m));
    }
    ClassFunction::from_multiplicities(n, &terms)
}
