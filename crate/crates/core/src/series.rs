//! Exact rational power series in t = φ², used to tabulate the Taylor
//! expansions of every scalar kernel and the Bernoulli numbers.

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn ratio(num: i64, den: BigInt) -> BigRational {
    BigRational::new(BigInt::from(num), den)
}

impl RationalSeries {
    pub fn from_fn(len: usize, f: impl Fn(u32) -> BigRational) -> Self {
        Self {
            coeffs: (0..len as u32).map(f).collect(),
        }
    }

    pub fn constant(len: usize, c: BigRational) -> Self {
        Self::from_fn(len, |n| {
            if n == 0 {
                c.clone()
            } else {
                BigRational::zero()
            }
        })
    }

    /// sinc φ
    pub fn sinc(len: usize) -> Self {
        Self::from_fn(len, |n| {
            ratio(if n % 2 == 0 { 1 } else { -1 }, factorial(2 * n + 1))
        })
    }

    /// sinc²(φ/2) = 2(1 − cos φ)/φ²
    pub fn half_sinc_sq(len: usize) -> Self {
        Self::from_fn(len, |n| {
            ratio(if n % 2 == 0 { 2 } else { -2 }, factorial(2 * n + 2))
        })
    }

    /// (1 − sinc φ)/φ²
    pub fn one_minus_sinc_over_sq(len: usize) -> Self {
        Self::from_fn(len, |n| {
            ratio(if n % 2 == 0 { 1 } else { -1 }, factorial(2 * n + 3))
        })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        Self::from_fn(len, |n| {
            &self.coeffs[n as usize] + &other.coeffs[n as usize]
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_int(-1))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, num: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(num)))
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn add_const(&self, c: BigRational) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        Self::from_fn(len, |n| {
            let n = n as usize;
            (0..=n).fold(BigRational::zero(), |acc, k| {
                acc + &self.coeffs[k] * &other.coeffs[n - k]
            })
        })
    }

    pub fn recip(&self) -> Self {
        let c0 = self.coeffs[0].clone();
        assert!(
            !c0.is_zero(),
            "reciprocal of a series with zero constant term"
        );
        let mut out: Vec<BigRational> = Vec::with_capacity(self.len());
        out.push(c0.recip());
        for n in 1..self.len() {
            let s = (1..=n).fold(BigRational::zero(), |acc, k| {
                acc + &self.coeffs[k] * &out[n - k]
            });
            out.push(-s / &c0);
        }
        Self { coeffs: out }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// Division by t^k. The dropped leading coefficients must vanish exactly.
    pub fn shift_down(&self, k: usize) -> Self {
        for c in &self.coeffs[..k] {
            assert!(c.is_zero(), "series is not divisible by t^{k}");
        }
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// 2 d/dt. For f(φ²) this is f′(φ)/φ, the multiplier of (xᵀu) in D_x f(u).
    pub fn derivative_multiplier(&self) -> Self {
        Self::from_fn(self.len() - 1, |n| {
            &self.coeffs[n as usize + 1] * BigRational::from_integer(BigInt::from(2 * (n + 1)))
        })
    }

    pub fn to_f64(&self, terms: usize) -> Vec<f64> {
        assert!(
            terms <= self.len(),
            "requested {terms} terms of a {}-term series",
            self.len()
        );
        self.coeffs[..terms]
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Horner evaluation of Σ c_n t^n.
pub fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Bernoulli numbers B_0..B_n with the B_1 = −1/2 convention.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let mut binom = BigInt::one();
        let mut s = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn factorial_ratio(num: &BigRational, n: u32) -> f64 {
    (num / BigRational::from_integer(factorial(n)))
        .to_f64()
        .unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_numbers() {
        let b = bernoulli(8);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], q(0, 1));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
    }

    #[test]
    fn reciprocal_roundtrip() {
        let s = RationalSeries::half_sinc_sq(20);
        let one = s.mul(&s.recip());
        assert_eq!(*one.coeff(0), q(1, 1));
        for n in 1..20 {
            assert!(one.coeff(n).is_zero());
        }
    }

    #[test]
    fn derivative_multiplier_of_t_squared() {
        let s = RationalSeries::from_fn(4, |n| if n == 2 { q(1, 1) } else { q(0, 1) });
        let d = s.derivative_multiplier();
        assert_eq!(*d.coeff(1), q(4, 1));
        assert!(d.coeff(0).is_zero() && d.coeff(2).is_zero());
    }

    #[test]
    #[should_panic]
    fn shift_rejects_nonzero_head() {
        RationalSeries::sinc(8).shift_down(1);
    }
}
