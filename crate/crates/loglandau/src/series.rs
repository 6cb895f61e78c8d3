//! Truncated complex power-series arithmetic.
//!
//! A [`TruncatedSeries`] is the Taylor polynomial `c_0 + c_1 z + … + c_N z^N`
//! of an analytic function about the origin. Every analytic factor in this
//! crate (`h`, `g`, `h2`, `g2`) is one of these. Values are immutable and all
//! operations are pure, so series can be shared freely across threads.
//!
//! Multiplication truncates at the *minimum* of the input orders unless the
//! caller names a higher target explicitly; silent order inflation would hide
//! precision loss.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default truncation order. Verification happens at radii below 1 where
/// tail terms decay geometrically, so 64 terms leave tails far below every
/// tolerance in the crate.
pub const DEFAULT_ORDER: usize = 64;

/// Finite sequence of complex coefficients `c_0 … c_N`, index = power of z.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from coefficients (index = power). Rejects empty
    /// input and non-finite entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFiniteCoefficient { index });
            }
        }
        Ok(Self { coeffs })
    }

    /// Series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    /// The constant series `c` of order 0.
    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// Truncation order N (degree of the polynomial).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Largest coefficient modulus.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation of the polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Termwise derivative; order drops by one.
    ///
    /// An order-0 input is rejected: its derivative would have no
    /// representable truncation, and constants that should differentiate to
    /// zero must be padded to order >= 1 first.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::ConstantTruncation);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, &c)| c * ((k + 1) as f64))
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at `min(N_a, N_b)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_to_order(other, self.order().min(other.order()))
    }

    /// Cauchy product truncated at an explicit target order.
    ///
    /// Coefficient n is `sum_{j<=n} a_j b_{n-j}`, accumulated in symmetric
    /// (j, n-j) pairs so that `a.mul(b)` and `b.mul(a)` are bit-identical.
    pub fn mul_to_order(&self, other: &Self, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        for (n, out) in coeffs.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            let (mut j, mut k) = (0usize, n);
            while j < k {
                acc += self.coeff(j) * other.coeff(k) + self.coeff(k) * other.coeff(j);
                j += 1;
                k -= 1;
            }
            if j == k {
                acc += self.coeff(j) * other.coeff(j);
            }
            *out = acc;
        }
        Self { coeffs }
    }

    /// Coefficient-wise sum; order is the max of the input orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        let coeffs = (0..=order).map(|n| self.coeff(n) + other.coeff(n)).collect();
        Self { coeffs }
    }

    /// Scales every coefficient by `k`.
    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Extends with zero coefficients up to `order` (no-op if already there).
    pub fn pad_to(&self, order: usize) -> Self {
        if order <= self.order() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        Self { coeffs }
    }
}

// JSON form: array of [re, im] pairs, index = power.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| [c.re, c.im]))
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(deserializer)?;
        TruncatedSeries::new(
            pairs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        )
        .map_err(D::Error::custom)
    }
}
