//! Plancherel and Jack_α weights, `c_λ(α)`, `c'_λ(α)`, `dim_α` and centralizer sizes.

use num_bigint::BigUint;
use num_traits::One;

use crate::exact::{factorial, int, uint, Alpha, Scalar};
use crate::partition::{partitions_of, Partition};

/// `n! / Π h(x)²`.
pub fn plancherel_weight(shape: &Partition) -> Scalar {
    let h = shape.hook_product();
    Scalar::new(factorial(shape.size()).into(), (&h * &h).into())
}

/// `c_λ(α) = Π (α a(s) + l(s) + 1)`.
pub fn c_poly(shape: &Partition, alpha: &Alpha) -> Scalar {
    shape
        .arm_legs()
        .into_iter()
        .fold(Scalar::one(), |acc, (_, a, l)| {
            acc * (alpha.value() * int(a as i64) + int(l as i64 + 1))
        })
}

/// `c'_λ(α) = Π (α a(s) + l(s) + α)`.
pub fn c_prime_poly(shape: &Partition, alpha: &Alpha) -> Scalar {
    shape
        .arm_legs()
        .into_iter()
        .fold(Scalar::one(), |acc, (_, a, l)| {
            acc * (alpha.value() * int(a as i64 + 1) + int(l as i64))
        })
}

/// `α^n n! / (c_λ(α) c'_λ(α))`.
pub fn jack_weight(shape: &Partition, alpha: &Alpha) -> Scalar {
    let n = shape.size();
    alpha.powi(n as i64) * uint(&factorial(n))
        / (c_poly(shape, alpha) * c_prime_poly(shape, alpha))
}

/// `n! α^n / c'_λ(α)`; the number of standard tableaux at `α = 1`.
pub fn dim_alpha(shape: &Partition, alpha: &Alpha) -> Scalar {
    let n = shape.size();
    alpha.powi(n as i64) * uint(&factorial(n)) / c_prime_poly(shape, alpha)
}

/// Jack_α measure on partitions of `n`, in enumeration order.
pub fn jack_distribution(n: usize, alpha: &Alpha) -> Vec<(Partition, Scalar)> {
    partitions_of(n)
        .map(|l| {
            let w = jack_weight(&l, alpha);
            (l, w)
        })
        .collect()
}

/// `z_μ = Π i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `μ`.
pub fn z_stat(cycle_type: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == k).count();
        z *= num_traits::pow(BigUint::from(k), m) * factorial(m);
        i += m;
    }
    z
}

/// `n! / z_μ`, the number of permutations of cycle type `μ`.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    factorial(cycle_type.size()) / z_stat(cycle_type)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{alpha_grid, binomial, ratio};
    use num_traits::Zero;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn plancherel_examples() {
        assert_eq!(plancherel_weight(&p("4,2,1")), ratio(35, 144));
        assert_eq!(plancherel_weight(&p("1")), Scalar::one());
        assert_eq!(plancherel_weight(&Partition::empty()), Scalar::one());
    }

    #[test]
    fn c_examples() {
        let a = Alpha::from_ratio(5, 3).unwrap();
        let av = a.value().clone();
        assert_eq!(c_poly(&p("2"), &a), &av + int(1));
        assert_eq!(c_prime_poly(&p("2"), &a), (&av + &av) * &av);
        assert_eq!(c_poly(&p("1"), &a), Scalar::one());
        assert_eq!(c_prime_poly(&p("1"), &a), av);
        let one = Alpha::one();
        assert_eq!(c_poly(&p("4,2,1"), &one), int(144));
        assert_eq!(c_prime_poly(&p("4,2,1"), &one), int(144));
    }

    #[test]
    fn jack_weight_matches_displayed_five_box_value() {
        for alpha in alpha_grid() {
            let a = alpha.value().clone();
            let one = Scalar::one();
            let two = int(2);
            let expected = int(60) * &a * &a
                / ((&two * &a + &two)
                    * (int(3) * &a + &one)
                    * (&a + &two)
                    * (&two * &a + &one)
                    * (&a + &one));
            assert_eq!(jack_weight(&p("3,2"), &alpha), expected);
        }
        assert_eq!(jack_weight(&p("3,2"), &Alpha::one()), ratio(5, 24));
        assert_eq!(plancherel_weight(&p("3,2")), ratio(5, 24));
    }

    #[test]
    fn normalization_to_ten() {
        for n in 0..=10 {
            let s: Scalar = partitions_of(n).map(|l| plancherel_weight(&l)).sum();
            assert_eq!(s, Scalar::one(), "plancherel n = {n}");
        }
        for alpha in alpha_grid() {
            for n in 0..=10 {
                let s: Scalar = jack_distribution(n, &alpha).into_iter().map(|(_, w)| w).sum();
                assert_eq!(s, Scalar::one(), "jack n = {n} alpha = {alpha}");
            }
        }
    }

    #[test]
    fn transpose_duality_and_reductions() {
        for alpha in alpha_grid() {
            for n in 0..=8 {
                for l in partitions_of(n) {
                    assert_eq!(jack_weight(&l, &alpha), jack_weight(&l.conjugate(), &alpha.inverse()));
                }
            }
        }
        let one = Alpha::one();
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert_eq!(jack_weight(&l, &one), plancherel_weight(&l));
                let h = uint(&l.hook_product());
                assert_eq!(c_poly(&l, &one) * c_prime_poly(&l, &one), &h * &h);
                assert_eq!(dim_alpha(&l, &one), uint(&l.syt_count()));
            }
        }
        assert_eq!(dim_alpha(&p("2,1"), &one), int(2));
        assert_eq!(dim_alpha(&p("1"), &Alpha::from_ratio(7, 2).unwrap()), Scalar::one());
    }

    #[test]
    fn centralizers() {
        for n in 2..=9 {
            let t = Partition::transposition_type(n).unwrap();
            assert_eq!(z_stat(&t), BigUint::from(2u32) * factorial(n - 2));
            assert_eq!(class_size(&t), binomial(n, 2));
            assert_eq!(z_stat(&Partition::column(n)), factorial(n));
            assert_eq!(class_size(&Partition::column(n)), BigUint::one());
        }
        assert_eq!(class_size(&p("3")), BigUint::from(2u32));
        for n in 0..=10 {
            let total: BigUint = partitions_of(n).map(|m| class_size(&m)).sum();
            assert_eq!(total, factorial(n));
        }
        assert!(!z_stat(&p("2,2,1")).is_zero());
        assert_eq!(z_stat(&p("2,2,1")), BigUint::from(8u32));
    }
}
