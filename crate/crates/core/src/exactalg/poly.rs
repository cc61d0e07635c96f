//! Dense univariate polynomials in `t` over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending order of exponent with no trailing
//! zeros, so two polynomials are equal iff their coefficient vectors are.
//! The only nontrivial algorithm here is the fraction-free primitive
//! Euclidean gcd, which [`crate::exactalg::RationalFunction`] uses to keep
//! numerator/denominator pairs in reduced form without ever leaving `Z[t]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in one variable `t` with `BigInt` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    /// Coefficients, ascending by exponent; `coeffs.last()` is nonzero.
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Polynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `1 - t`, the denominator atom of most Hilbert series here.
    pub fn one_minus_t() -> Self {
        Polynomial::from_coeffs(vec![BigInt::one(), -BigInt::one()])
    }

    /// `1 + t`, the numerator atom of most Poincare series here.
    pub fn one_plus_t() -> Self {
        Polynomial::from_coeffs(vec![BigInt::one(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent and value of the lowest-order nonzero coefficient.
    pub fn lowest_nonzero(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        // Horner, highest coefficient first.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// The substitution `t -> -t` (alternates coefficient signs).
    pub fn at_neg_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Gcd of the coefficients, nonnegative; zero only for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content(self)`; the zero polynomial is its own primitive part.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division: `Some(q)` with `self = q * d` when `d` divides
    /// `self` in `Z[t]`, `None` otherwise (including `d = 0`).
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                let upd = &rem[k + i] - dc * &q;
                rem[k + i] = upd;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::from_coeffs(quot))
    }

    /// Pseudo-remainder `prem(a, b)`: the remainder of `lc(b)^k * a` by `b`,
    /// where `k = deg a - deg b + 1`.  Stays in `Z[t]`; both inputs nonzero
    /// with `deg a >= deg b`.
    fn pseudo_rem(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut r = a.coeffs.clone();
        let db = b.degree().unwrap();
        let lb = b.leading().unwrap();
        while r.len() > db {
            let top = r.pop().unwrap();
            for c in r.iter_mut() {
                *c *= lb;
            }
            if !top.is_zero() {
                let off = r.len() - db;
                for (i, bc) in b.coeffs.iter().enumerate().take(db) {
                    let upd = &r[off + i] - bc * &top;
                    r[off + i] = upd;
                }
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Polynomial::from_coeffs(r)
    }

    /// Greatest common divisor in `Z[t]` via the fraction-free primitive
    /// Euclidean scheme: take primitive parts, iterate pseudo-remainders,
    /// and restore the integer content gcd at the end.  The result has a
    /// positive leading coefficient (and is zero only if both inputs are).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.abs_normalized();
        }
        if b.is_zero() {
            return a.abs_normalized();
        }
        let content_gcd = a.content().gcd(&b.content());
        let mut r0 = a.primitive_part();
        let mut r1 = b.primitive_part();
        if r0.degree() < r1.degree() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let r = Polynomial::pseudo_rem(&r0, &r1).primitive_part();
            r0 = std::mem::replace(&mut r1, r);
        }
        r0.abs_normalized().mul_scalar(&content_gcd)
    }

    /// Flips the overall sign if the leading coefficient is negative.
    fn abs_normalized(&self) -> Polynomial {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Ascending order with explicit signs, e.g. `1 + 2t - t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
