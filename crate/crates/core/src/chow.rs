//! The Chow ring `A*(P^n) = Z[h]/(h^(n+1))` with exact integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of `Z[h]/(h^(n+1))`; `coeffs[i]` multiplies `h^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        ChowClass {
            coeffs: vec![BigInt::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 1)
    }

    /// `c * h^k` (zero when `k > n`).
    pub fn monomial(n: usize, k: usize, c: i64) -> Self {
        let mut out = Self::zero(n);
        if k <= n {
            out.coeffs[k] = BigInt::from(c);
        }
        out
    }

    /// Builds a class from coefficients in ascending powers of `h`, truncating
    /// or zero-padding to length `n + 1`.
    pub fn from_coeffs<T: Into<BigInt>>(n: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut out = Self::zero(n);
        for (slot, c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        out
    }

    /// `1 + d h`.
    pub fn linear(n: usize, d: i64) -> Self {
        &Self::one(n) + &Self::monomial(n, 1, d)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &ChowClass) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.n(), other.n()))
        }
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        Ok(ChowClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        Ok(ChowClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Product truncated at `h^(n+1)`.
    pub fn checked_mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        let n = self.n();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> ChowClass {
        ChowClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        (0..e).fold(Self::one(self.n()), |acc, _| &acc * self)
    }

    /// Inverse of a class whose constant coefficient is `±1`.
    pub fn invert_unit(&self) -> Result<ChowClass> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(Error::NotAUnit(a0.to_string()));
        }
        let n = self.n();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = a0.clone();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -(a0 * s);
        }
        Ok(inv)
    }

    /// Sign flip on odd codimension pieces.
    pub fn dual(&self) -> ChowClass {
        ChowClass {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        }
    }

    /// `sum_i a_i h^i / (1 + d h)^i`.
    pub fn tensor_line_bundle(&self, d: i64) -> ChowClass {
        let n = self.n();
        let inv = Self::linear(n, d).invert_unit().expect("1 + dh is a unit");
        let mut power = Self::one(n);
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = &power * &inv;
            }
            if !a.is_zero() {
                out = &out + &(&Self::monomial(n, i, 1) * &power).scale(a);
            }
        }
        out
    }

    /// Degree of the zero-dimensional part.
    pub fn degree_zero_part(&self) -> &BigInt {
        &self.coeffs[self.n()]
    }

    /// Lowest codimension with a nonzero coefficient.
    pub fn codimension(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Euler characteristics of generic linear sections of a scheme of
    /// dimension `dim` with this CSM class.
    pub fn euler_profile(&self, dim: usize) -> Result<EulerProfile> {
        let n = self.n();
        if dim > n {
            return Err(Error::Precondition(format!(
                "dimension {dim} exceeds ambient {n}"
            )));
        }
        // p(t) = sum_k a_k t^k where a_k multiplies the class of a P^k, i.e. h^(n-k)
        let p: Vec<BigInt> = (0..=dim).map(|k| self.coeffs[n - k].clone()).collect();
        let ip = aluffi_involution(&p)?;
        let values = ip
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Ok(EulerProfile { values })
    }
}

/// `p(t) -> (t p(-t-1) + p(0)) / (t + 1)` on coefficient vectors in ascending `t`.
pub fn aluffi_involution(p: &[BigInt]) -> Result<Vec<BigInt>> {
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let deg = p.len() - 1;
    // q(t) = p(-t-1), expanded with binomials
    let mut q = vec![BigInt::zero(); deg + 1];
    for (k, a) in p.iter().enumerate() {
        let sign = if k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut binom = BigInt::one();
        for j in 0..=k {
            q[j] += &sign * a * &binom;
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    // numerator = t q(t) + p(0)
    let mut num = vec![BigInt::zero(); deg + 2];
    num[0] = p[0].clone();
    for (j, c) in q.into_iter().enumerate() {
        num[j + 1] += c;
    }
    // synthetic division by (t + 1), from the top coefficient down
    let mut quot = vec![BigInt::zero(); deg + 1];
    let mut carry = BigInt::zero();
    for j in (1..num.len()).rev() {
        let c = &num[j] - &carry;
        carry = c.clone();
        quot[j - 1] = c;
    }
    if num[0] != carry {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

/// `chi(V), chi(V ∩ L_1), ..., chi(V ∩ L_1 ∩ ... ∩ L_dim)` for general hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerProfile {
    pub values: Vec<BigInt>,
}

impl EulerProfile {
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.values.iter().map(ToPrimitive::to_i64).collect()
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr for &ChowClass {
            type Output = ChowClass;
            fn $method(self, rhs: &ChowClass) -> ChowClass {
                self.$checked(rhs).expect("ambient dimension mismatch")
            }
        }
    };
}
forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl std::ops::Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let shown = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{shown}h")?,
                _ => write!(f, "{shown}h^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}
