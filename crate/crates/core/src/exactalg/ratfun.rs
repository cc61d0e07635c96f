//! Rational functions in `t` over the integers, kept in a canonical reduced
//! form so that structural equality coincides with mathematical equality.
//!
//! Canonical form: numerator and denominator share no polynomial factor and
//! no integer content, and the lowest-order nonzero coefficient of the
//! denominator is positive.  The zero function is `0 / 1`.  With that
//! normalization each rational function has exactly one representation, so
//! the derived `PartialEq` is decision procedure enough for all the series
//! identities in this crate.

use super::poly::Polynomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Exact rational number; reduced, with positive denominator.
pub type Rational = BigRational;

/// A quotient of integer polynomials in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Normalizes `num / den` into canonical form.
    ///
    /// Divides out the polynomial gcd (taken over `Z[t]`, integer content
    /// included) and flips signs so the lowest-order nonzero denominator
    /// coefficient is positive.  A zero numerator collapses to `0 / 1`.
    /// Errors on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput(
                "rational function with zero denominator".into(),
            ));
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let (_, low) = den.lowest_nonzero().expect("nonzero denominator");
        if low.is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// `t / (1 - t)`, the face-weight atom used throughout.
    pub fn t_over_one_minus_t() -> Self {
        RationalFunction {
            num: Polynomial::t(),
            den: Polynomial::one_minus_t(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominator product is nonzero")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominator product is nonzero")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }

    /// Errors on division by the zero function.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InvalidInput("division by the zero function".into()));
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Errors on the zero function.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("reciprocal of the zero function".into()));
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        RationalFunction::new(&self.num * p, self.den.clone()).expect("denominator unchanged")
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// The substitution `t -> -t`, renormalized (the sign convention on the
    /// denominator may flip).
    pub fn at_neg_t(&self) -> Self {
        RationalFunction::new(self.num.at_neg_t(), self.den.at_neg_t())
            .expect("substitution preserves nonzero denominator")
    }

    /// Exact evaluation; errors at a pole (a zero of the canonical
    /// denominator).
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(self.num.eval(x) / den)
    }

    /// Power-series coefficients `c_0, ..., c_order` as exact rationals.
    ///
    /// Long division: `c_k = (n_k - sum_{j=1..k} d_j c_{k-j}) / d_0`.
    /// Errors if the denominator has zero constant term.
    pub fn series_rational(&self, order: usize) -> Result<Vec<Rational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotAPowerSeries(format!(
                "denominator {} has zero constant term",
                self.den
            )));
        }
        let d0 = BigRational::from_integer(d0);
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for j in 1..=k {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    acc -= BigRational::from_integer(dj) * &out[k - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Power-series coefficients `c_0, ..., c_order` as integers.
    ///
    /// All the series this crate produces have integer coefficients; if a
    /// fraction survives (the denominator's constant term is not a unit and
    /// does not divide out), that is reported as an error rather than
    /// silently truncated.
    pub fn series(&self, order: usize) -> Result<Vec<BigInt>> {
        self.series_rational(order)?
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegralSeries(format!(
                        "coefficient of t^{k} is {c}"
                    )))
                }
            })
            .collect()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.degree().unwrap_or(0) == 0 {
                write!(f, "{}", self.num)
            } else {
                write!(f, "({})", self.num)
            }
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Truncated Cauchy product of two coefficient lists (same length, which is
/// also the length of the result).
pub fn cauchy_product(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

// --- JSON encoding -------------------------------------------------------
//
// {"num": ["1", "2"], "den": ["1"]} with decimal-string coefficients in
// ascending order, so consumers never need a big-integer JSON extension.

#[derive(Serialize, Deserialize)]
struct RatFunDto {
    num: Vec<String>,
    den: Vec<String>,
}

pub(crate) fn poly_to_strings(p: &Polynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(BigInt::to_string).collect()
}

pub(crate) fn poly_from_strings(coeffs: &[String]) -> std::result::Result<Polynomial, String> {
    let parsed: std::result::Result<Vec<BigInt>, _> = coeffs
        .iter()
        .map(|s| BigInt::from_str(s).map_err(|e| format!("bad coefficient {s:?}: {e}")))
        .collect();
    Ok(Polynomial::from_coeffs(parsed?))
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunDto {
            num: poly_to_strings(&self.num),
            den: poly_to_strings(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = RatFunDto::deserialize(deserializer)?;
        let num = poly_from_strings(&dto.num).map_err(D::Error::custom)?;
        let den = poly_from_strings(&dto.den).map_err(D::Error::custom)?;
        RationalFunction::new(num, den).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn normalization_reduces_and_fixes_signs() {
        // (2 + 2t) / 2 -> (1 + t) / 1
        assert_eq!(rf(&[2, 2], &[2]), rf(&[1, 1], &[1]));
        // (1 - t^2) / (1 - t) -> (1 + t) / 1
        assert_eq!(rf(&[1, 0, -1], &[1, -1]), rf(&[1, 1], &[1]));
        // Denominator sign convention: lowest nonzero coefficient positive.
        assert_eq!(rf(&[1], &[-1, 1]), rf(&[-1], &[1, -1]));
        let f = rf(&[1, 1], &[0, -2, 2]);
        assert!(f.den().coeff(0).is_zero());
        assert!(f.den().coeff(1) > BigInt::zero());
        // Zero numerator collapses to 0/1 regardless of denominator.
        assert_eq!(rf(&[0], &[5, 7]), RationalFunction::zero());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(RationalFunction::new(p(&[1]), Polynomial::zero()).is_err());
    }

    #[test]
    fn division_cancels_shared_factors() {
        // ((1+t)^4 / (1-t-t^2))  divided by  ((1+t)^2 (1-2t-t^2) / (1-t-t^2))
        // must come out as (1+t)^2 / (1-2t-t^2).
        let a = RationalFunction::new(p(&[1, 1]).pow(4), p(&[1, -1, -1])).unwrap();
        let b = RationalFunction::new(&p(&[1, 1]).pow(2) * &p(&[1, -2, -1]), p(&[1, -1, -1]))
            .unwrap();
        let q = a.div(&b).unwrap();
        let expected = rf(&[1, 2, 1], &[1, -2, -1]);
        assert_eq!(q, expected);
        // Independent route: cross-multiplication in plain polynomial
        // arithmetic, no gcd involved.
        assert_eq!(
            q.num() * expected.den(),
            q.den() * expected.num(),
            "cross-multiplication disagrees with normal form"
        );
    }

    #[test]
    fn arithmetic_identities() {
        let f = rf(&[1, 1], &[1, -2]);
        let g = rf(&[0, 1], &[1, -1]);
        assert_eq!(f.sub(&f), RationalFunction::zero());
        assert_eq!(f.mul(&f.recip().unwrap()), RationalFunction::one());
        assert_eq!(f.add(&g).sub(&g), f);
        assert_eq!(f.div(&g).unwrap().mul(&g), f);
        assert!(RationalFunction::zero().recip().is_err());
        assert!(f.div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn neg_t_substitution_round_trips() {
        let f = rf(&[1, 3, 1], &[1, -2, 0, 7]);
        assert_eq!(f.at_neg_t().at_neg_t(), f);
        // 1/(1-t) at -t is 1/(1+t).
        assert_eq!(rf(&[1], &[1, -1]).at_neg_t(), rf(&[1], &[1, 1]));
    }

    #[test]
    fn series_expansion_matches_hand_values() {
        // Geometric series.
        let geo = rf(&[1], &[1, -1]);
        assert_eq!(geo.series(4).unwrap(), vec![BigInt::from(1); 5]);
        // (1+t)/(1-2t): 1, 3, 6, 12.
        let f = rf(&[1, 1], &[1, -2]);
        let c: Vec<i64> = [1i64, 3, 6, 12].into();
        assert_eq!(
            f.series(3).unwrap(),
            c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
        // (1+t-t^2)/(1-t)^2: 1, 3, 4, 5.
        let h = rf(&[1, 1, -1], &[1, -2, 1]);
        assert_eq!(
            h.series(3).unwrap(),
            [1i64, 3, 4, 5].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn series_expansion_validates_its_input() {
        // t in the denominator: not a power series.
        let f = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(matches!(f.series(3), Err(Error::NotAPowerSeries(_))));
        // 1/(2-t) has non-integer coefficients but a perfectly good
        // rational expansion.
        let g = rf(&[1], &[2, -1]);
        assert!(matches!(g.series(3), Err(Error::NonIntegralSeries(_))));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(g.series_rational(1).unwrap()[0], half);
    }

    #[test]
    fn series_multiplicativity_spot_check() {
        let f = rf(&[1, 1], &[1, -2]);
        let g = rf(&[1], &[1, -1, -1]);
        let order = 12;
        let lhs = f.mul(&g).series(order).unwrap();
        let rhs = cauchy_product(
            &f.series(order).unwrap(),
            &g.series(order).unwrap(),
            order,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_reports_poles() {
        let f = rf(&[1, 1], &[1, -2]); // pole at 1/2
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(matches!(f.eval(&half), Err(Error::Pole(_))));
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(f.eval(&two).unwrap(), BigRational::from_integer(BigInt::from(-1)));
        // Canonical form can cancel an apparent pole: (1-t^2)/(1-t) at 1.
        let g = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(g.eval(&BigRational::one()).unwrap(), BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn hilbert_series_value_at_one_half() {
        // H = (1 + t - t^2) / (1-t)^2 evaluates to 5 at t = 1/2.
        let h = rf(&[1, 1, -1], &[1, -2, 1]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(h.eval(&half).unwrap(), BigRational::from_integer(BigInt::from(5)));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let f = rf(&[1, 2, 1], &[1, -2, -1]);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"num":["1","2","1"],"den":["1","-2","-1"]}"#);
        let back: RationalFunction = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        // Non-canonical input is normalized on the way in.
        let raw: RationalFunction =
            serde_json::from_str(r#"{"num":["2","2"],"den":["2"]}"#).unwrap();
        assert_eq!(raw, rf(&[1, 1], &[1]));
        // Zero function round-trips as 0/1.
        let z: RationalFunction = serde_json::from_str(r#"{"num":["0"],"den":["3"]}"#).unwrap();
        assert_eq!(serde_json::to_string(&z).unwrap(), r#"{"num":["0"],"den":["1"]}"#);
    }
}
