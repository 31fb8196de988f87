//! Exact rational scalars and the Jack parameter.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; every identity in the crate is checked in it.
pub type Scalar = BigRational;

/// Factorials up to this bound are computed once and shared.
pub const FACTORIAL_CACHE_BOUND: usize = 128;

fn factorial_cache() -> &'static [BigUint] {
    static CACHE: OnceLock<Vec<BigUint>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::with_capacity(FACTORIAL_CACHE_BOUND + 1);
        let mut acc = BigUint::one();
        out.push(acc.clone());
        for k in 1..=FACTORIAL_CACHE_BOUND {
            acc *= BigUint::from(k);
            out.push(acc.clone());
        }
        out
    })
}

pub fn factorial(n: usize) -> BigUint {
    if n <= FACTORIAL_CACHE_BOUND {
        return factorial_cache()[n].clone();
    }
    let mut acc = factorial_cache()[FACTORIAL_CACHE_BOUND].clone();
    for k in FACTORIAL_CACHE_BOUND + 1..=n {
        acc *= BigUint::from(k);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `x (x-1) ... (x-i+1)`, and 1 for `i = 0`.
pub fn falling_factorial(x: usize, i: usize) -> BigUint {
    if i > x {
        return BigUint::zero();
    }
    (0..i).fold(BigUint::one(), |acc, t| acc * BigUint::from(x - t))
}

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn uint(v: &BigUint) -> Scalar {
    Scalar::from_integer(BigInt::from(v.clone()))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    num_traits::pow(base.clone(), exp)
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Canonical `"p/q"` form (denominator always written, reduced, positive).
pub fn format_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// The Jack parameter: an exact rational strictly greater than zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alpha(Scalar);

impl Alpha {
    pub fn new(value: Scalar) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::Domain(format!(
                "alpha must be positive, got {}",
                format_scalar(&value)
            )));
        }
        Ok(Alpha(value))
    }

    pub fn one() -> Self {
        Alpha(Scalar::one())
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("alpha denominator is zero".into()));
        }
        Self::new(ratio(num, den))
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Alpha(self.0.recip())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }

    /// `alpha^k` for a signed exponent.
    pub fn powi(&self, k: i64) -> Scalar {
        let p = pow(&self.0, k.unsigned_abs() as usize);
        if k < 0 {
            p.recip()
        } else {
            p
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Alpha::new(parse_scalar(s)?)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(&self.0))
    }
}

/// The α values used throughout the exhaustive test grids.
pub fn alpha_grid() -> Vec<Alpha> {
    [(1, 2), (1, 1), (2, 1), (5, 3)]
        .iter()
        .map(|&(p, q)| Alpha::from_ratio(p, q).expect("positive"))
        .collect()
}
