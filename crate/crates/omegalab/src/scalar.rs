//! Exact scalar arithmetic: arbitrary-precision rationals and the ring of
//! sums `q_1 + q_m sqrt(m) + ...` over squarefree radicands.
//!
//! Radicands never leave the small range produced by the normalization
//! factors `1/sqrt(1 - 1/d^2)`, so squarefree reduction by trial division
//! is all that is ever needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::integer::gcd;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{domain, usage, Result};

pub type Rational = BigRational;

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Splits `v` into `(s, m)` with `v = s^2 * m` and `m` squarefree.
fn split_square(v: u64) -> (u64, u64) {
    assert!(v > 0, "split_square expects a positive integer");
    let mut v = v;
    let mut s = 1u64;
    let mut m = 1u64;
    let mut p = 2u64;
    while p * p <= v {
        if v % p == 0 {
            let mut e = 0u32;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                m *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever is left is prime
    m *= v;
    (s, m)
}

/// Element of the radical extension: a finite sum `sum_m q_m sqrt(m)` with
/// every radicand `m` squarefree and positive. Radicand 1 is the rational
/// part. The map never stores zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct RadicalRational {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// Builds `q * sqrt(m)`, reducing `m` to its squarefree part.
    pub fn radical_term(q: Rational, m: u64) -> Self {
        assert!(m >= 1, "radicand must be positive");
        let (s, m) = split_square(m);
        let coeff = q * rat_int(s as i64);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|q| q.is_one()).unwrap_or(false)
    }

    /// The coefficient of `sqrt(m)`; zero if absent.
    pub fn coeff(&self, m: u64) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` when the value is plain rational (possibly zero).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// `Some((m, q))` when the value is a single term `q sqrt(m)`.
    pub fn single_term(&self) -> Option<(u64, Rational)> {
        if self.terms.len() == 1 {
            let (m, q) = self.terms.iter().next().unwrap();
            Some((*m, q.clone()))
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u64, &Rational)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, m: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += q;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, q);
            }
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c * q))
            .collect();
        Self { terms }
    }

    /// Exact square root of a positive rational, as `(s/d) sqrt(m)`.
    pub fn sqrt_of_positive_rational(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(domain(format!("sqrt of non-positive rational {q}")));
        }
        let numer = q.numer();
        let denom = q.denom();
        let v = (numer * denom)
            .to_u64()
            .ok_or_else(|| domain(format!("radicand {numer}*{denom} too large to factor")))?;
        let (s, m) = split_square(v);
        let coeff = Rational::new(BigInt::from(s), denom.clone());
        Ok(Self::radical_term(coeff, m))
    }

    /// Inverse of a single-term value `q sqrt(m)`: `(1/(q m)) sqrt(m)`.
    /// Multi-term inversion is deliberately unsupported.
    pub fn invert(&self) -> Result<Self> {
        match self.single_term() {
            Some((m, q)) => {
                let coeff = (q * rat_int(m as i64)).recip();
                Ok(Self::radical_term(coeff, m))
            }
            None => Err(usage(format!(
                "cannot invert '{self}': only nonzero single-term radicals are invertible"
            ))),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.invert()?)
    }
}

impl Add for &RadicalRational {
    type Output = RadicalRational;
    fn add(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert_add(*m, q.clone());
        }
        out
    }
}

impl Sub for &RadicalRational {
    type Output = RadicalRational;
    fn sub(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert_add(*m, -q.clone());
        }
        out
    }
}

impl Mul for &RadicalRational {
    type Output = RadicalRational;
    fn mul(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = RadicalRational::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                let g = gcd(*m1, *m2);
                let m = (m1 / g) * (m2 / g);
                let q = q1 * q2 * rat_int(g as i64);
                out.insert_add(m, q);
            }
        }
        out
    }
}

impl Neg for &RadicalRational {
    type Output = RadicalRational;
    fn neg(self) -> RadicalRational {
        let terms = self.terms.iter().map(|(m, q)| (*m, -q.clone())).collect();
        RadicalRational { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RadicalRational {
            type Output = RadicalRational;
            fn $method(self, rhs: RadicalRational) -> RadicalRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RadicalRational> for RadicalRational {
            type Output = RadicalRational;
            fn $method(self, rhs: &RadicalRational) -> RadicalRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RadicalRational {
    type Output = RadicalRational;
    fn neg(self) -> RadicalRational {
        -&self
    }
}

impl AddAssign<&RadicalRational> for RadicalRational {
    fn add_assign(&mut self, rhs: &RadicalRational) {
        for (m, q) in &rhs.terms {
            self.insert_add(*m, q.clone());
        }
    }
}

impl SubAssign<&RadicalRational> for RadicalRational {
    fn sub_assign(&mut self, rhs: &RadicalRational) {
        for (m, q) in &rhs.terms {
            self.insert_add(*m, -q.clone());
        }
    }
}

impl MulAssign<&RadicalRational> for RadicalRational {
    fn mul_assign(&mut self, rhs: &RadicalRational) {
        *self = &*self * rhs;
    }
}

/// Canonical rendering: terms by ascending radicand, joined sign-aware,
/// e.g. `1/2 - 2/3*sqrt(3)`. Coefficients `±1` of a radical drop the `1*`.
impl fmt::Display for RadicalRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, q)) in self.terms.iter().enumerate() {
            let negative = q.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = q.abs();
            if *m == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({m})")?;
            } else {
                write!(f, "{mag}*sqrt({m})")?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical rendering produced by `Display`.
impl std::str::FromStr for RadicalRational {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(usage("empty scalar"));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        // split on " + " / " - " while keeping a possible leading "-"
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(stripped) = rest.strip_prefix('-') {
            sign = -1;
            rest = stripped.trim_start();
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let split = match (plus, minus) {
                (Some(p), Some(m)) => Some(if p < m { (p, 1) } else { (m, -1) }),
                (Some(p), None) => Some((p, 1)),
                (None, Some(m)) => Some((m, -1)),
                (None, None) => None,
            };
            match split {
                Some((pos, next_sign)) => {
                    out += &parse_term(rest[..pos].trim(), sign)?;
                    rest = &rest[pos + 3..];
                    sign = next_sign;
                }
                None => {
                    out += &parse_term(rest.trim(), sign)?;
                    break;
                }
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str, sign: i64) -> Result<RadicalRational> {
    let bad = || usage(format!("malformed scalar term '{term}'"));
    let (coeff_str, rad_str) = match term.find("sqrt(") {
        Some(pos) => {
            let coeff = term[..pos].trim_end_matches('*').trim();
            let inner = term[pos + 5..].strip_suffix(')').ok_or_else(bad)?;
            (coeff, Some(inner))
        }
        None => (term, None),
    };
    let coeff: Rational = if coeff_str.is_empty() {
        Rational::one()
    } else {
        coeff_str.parse().map_err(|_| bad())?
    };
    let coeff = coeff * rat_int(sign);
    match rad_str {
        Some(inner) => {
            let m: u64 = inner.trim().parse().map_err(|_| bad())?;
            Ok(RadicalRational::radical_term(coeff, m))
        }
        None => Ok(RadicalRational::from_rational(coeff)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sqrt_int(m: u64) -> RadicalRational {
        RadicalRational::radical_term(Rational::one(), m)
    }

    #[test]
    fn split_square_examples() {
        assert_eq!(split_square(1), (1, 1));
        assert_eq!(split_square(12), (2, 3));
        assert_eq!(split_square(72), (6, 2));
        assert_eq!(split_square(97), (1, 97));
    }

    #[test]
    fn radical_products() {
        // sqrt(2) * sqrt(2) = 2
        assert_eq!(&sqrt_int(2) * &sqrt_int(2), RadicalRational::from_int(2));
        // sqrt(2) * sqrt(6) = 2 sqrt(3)
        assert_eq!(
            &sqrt_int(2) * &sqrt_int(6),
            RadicalRational::radical_term(rat_int(2), 3)
        );
        // (1 + sqrt(3))(1 - sqrt(3)) = -2
        let a = &RadicalRational::one() + &sqrt_int(3);
        let b = &RadicalRational::one() - &sqrt_int(3);
        assert_eq!(&a * &b, RadicalRational::from_int(-2));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            RadicalRational::sqrt_of_positive_rational(&rat_int(1)).unwrap(),
            RadicalRational::one()
        );
        // sqrt(3/4) = 1/2 sqrt(3)
        assert_eq!(
            RadicalRational::sqrt_of_positive_rational(&rat(3, 4)).unwrap(),
            RadicalRational::radical_term(rat(1, 2), 3)
        );
        // sqrt(8/9) = 2/3 sqrt(2)
        assert_eq!(
            RadicalRational::sqrt_of_positive_rational(&rat(8, 9)).unwrap(),
            RadicalRational::radical_term(rat(2, 3), 2)
        );
        assert!(RadicalRational::sqrt_of_positive_rational(&rat_int(0)).is_err());
        assert!(RadicalRational::sqrt_of_positive_rational(&rat(-3, 4)).is_err());
    }

    #[test]
    fn sqrt_squares_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10_000i64);
            let d = rng.gen_range(1..=10_000i64);
            let q = rat(n, d);
            let r = RadicalRational::sqrt_of_positive_rational(&q).unwrap();
            assert_eq!(&r * &r, RadicalRational::from_rational(q));
        }
    }

    fn random_radical(rng: &mut ChaCha8Rng) -> RadicalRational {
        let mut out = RadicalRational::zero();
        for _ in 0..rng.gen_range(0..4) {
            let m = rng.gen_range(1..=30u64);
            let n = rng.gen_range(-20..=20i64);
            let d = rng.gen_range(1..=9i64);
            out += &RadicalRational::radical_term(rat(n, d), m);
        }
        out
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = random_radical(&mut rng);
            let b = random_radical(&mut rng);
            let c = random_radical(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }

    #[test]
    fn single_term_inversion() {
        let x = RadicalRational::radical_term(rat(-3, 5), 6);
        let inv = x.invert().unwrap();
        assert_eq!(&x * &inv, RadicalRational::one());

        let multi = &RadicalRational::one() + &sqrt_int(2);
        assert!(multi.invert().is_err());
        assert!(RadicalRational::zero().invert().is_err());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (RadicalRational::zero(), "0"),
            (RadicalRational::from_rational(rat(1, 2)), "1/2"),
            (RadicalRational::from_int(-3), "-3"),
            (sqrt_int(2), "sqrt(2)"),
            (
                &RadicalRational::from_rational(rat(1, 2))
                    - &RadicalRational::radical_term(rat(2, 3), 3),
                "1/2 - 2/3*sqrt(3)",
            ),
            (
                &(-&sqrt_int(5)) + &RadicalRational::radical_term(rat_int(4), 7),
                "-sqrt(5) + 4*sqrt(7)",
            ),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            let parsed: RadicalRational = text.parse().unwrap();
            assert_eq!(parsed, value);
        }
    }
}
