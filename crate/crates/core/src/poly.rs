//! Univariate polynomials in `q`: integer coefficients for the boundary
//! entries `W_σ(q)/W_τ(q)`, rational coefficients for Smith normal form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coxeter::CyclotomicVector;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn constant(c: i128) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `[m]_q = 1 + q + … + q^{m-1}`.
    pub fn q_integer(m: usize) -> Self {
        IntPoly(vec![1; m])
    }

    /// Exact division by a monic polynomial; `None` when the remainder is
    /// nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert_eq!(divisor.0[dd], 1, "divisor must be monic");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let mut rem = self.0.clone();
        let mut quot = vec![0i128; n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &b) in divisor.0.iter().enumerate() {
                    rem[i + j] -= c * b;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::from_coeffs(self.0.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }
}

/// The `d`-th cyclotomic polynomial, computed as `(q^d - 1) / ∏_{e | d, e < d} φ_e`.
pub fn cyclotomic(d: u32) -> IntPoly {
    assert!(d >= 1);
    let mut num = vec![0i128; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    let mut p = IntPoly::from_coeffs(num);
    for e in 1..d {
        if d % e == 0 {
            p = p.div_exact(&cyclotomic(e)).expect("cyclotomic divisibility");
        }
    }
    p
}

impl CyclotomicVector {
    /// Expands `∏ φ_d^{k_d}` into an integer polynomial.
    pub fn to_poly(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for (d, k) in self.iter() {
            let phi = cyclotomic(d);
            for _ in 0..k {
                acc = &acc * &phi;
            }
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let c = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + rhs.0.get(i).copied().unwrap_or(0))
            .collect();
        IntPoly::from_coeffs(c)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly(self.0.iter().map(|&c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i128; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if i == 0 || mag != 1 {
                write!(f, "{sign}{mag}{mono}")?;
            } else {
                write!(f, "{sign}{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Polynomial over ℚ, coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![BigRational::one()])
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        QPoly::from_coeffs(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn is_unit_constant(&self) -> bool {
        self.0.len() == 1
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly(self.0.iter().map(|x| x * c).collect())
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Removes factors of `q` (units in the Laurent ring).
    pub fn strip_q(&self) -> QPoly {
        let k = self.0.iter().take_while(|c| c.is_zero()).count();
        QPoly(self.0[k..].to_vec())
    }

    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.0[dd].recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.0.iter().enumerate() {
                    let t = &c * b;
                    rem[i + j] -= t;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Exact integer coefficients, if every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            if !c.is_integer() {
                return None;
            }
            let v: i128 = c.to_integer().try_into().ok()?;
            out.push(v);
        }
        Some(IntPoly::from_coeffs(out))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        let zero = BigRational::zero();
        let c = (0..n)
            .map(|i| self.0.get(i).unwrap_or(&zero) + rhs.0.get(i).unwrap_or(&zero))
            .collect();
        QPoly::from_coeffs(c)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if i == 0 || !mag.is_one() {
                write!(f, "{sign}{mag}{mono}")?;
            } else {
                write!(f, "{sign}{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}
