//! Sparse multivariate polynomials over the radical scalars, in a fixed
//! number of variables `x1..xn` (or `y1..yn` for code polynomials).

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed};

use crate::error::{usage, Result};
use crate::perm::Permutation;
use crate::scalar::{rat_int, Rational, RadicalRational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VarFamily {
    X,
    Y,
}

impl fmt::Display for VarFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarFamily::X => write!(f, "x"),
            VarFamily::Y => write!(f, "y"),
        }
    }
}

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The monomial `x_i` (1-based variable index).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n, "variable index out of range");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len(), "monomial arity mismatch");
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise quotient; caller checks `divides` first.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Image under `x_i -> x_{sigma(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> Monomial {
        assert_eq!(self.0.len(), sigma.n(), "monomial/permutation size mismatch");
        let mut e = vec![0; self.0.len()];
        for (i, &exp) in self.0.iter().enumerate() {
            e[sigma.map(i + 1) - 1] = exp;
        }
        Monomial(e)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Polynomial {
    family: VarFamily,
    n: usize,
    terms: BTreeMap<Monomial, RadicalRational>,
}

impl Polynomial {
    pub fn zero(family: VarFamily, n: usize) -> Self {
        Polynomial {
            family,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(family: VarFamily, n: usize, value: RadicalRational) -> Self {
        let mut p = Self::zero(family, n);
        p.add_term(Monomial::constant(n), value);
        p
    }

    pub fn one(family: VarFamily, n: usize) -> Self {
        Self::constant(family, n, RadicalRational::one())
    }

    pub fn rational(family: VarFamily, n: usize, q: Rational) -> Self {
        Self::constant(family, n, RadicalRational::from_rational(q))
    }

    /// The variable `x_i` (or `y_i`), 1-based.
    pub fn variable(family: VarFamily, n: usize, i: usize) -> Self {
        let mut p = Self::zero(family, n);
        p.add_term(Monomial::var(n, i), RadicalRational::one());
        p
    }

    pub fn family(&self) -> VarFamily {
        self.family
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RadicalRational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// `Some(c)` when the polynomial is a constant (zero counts).
    pub fn as_constant(&self) -> Option<RadicalRational> {
        match self.terms.len() {
            0 => Some(RadicalRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: RadicalRational) {
        assert_eq!(m.0.len(), self.n, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.family != other.family {
            return Err(usage(format!(
                "polynomial family mismatch: {} vs {}",
                self.family, other.family
            )));
        }
        if self.n != other.n {
            return Err(usage(format!(
                "polynomial arity mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other).expect("polynomial add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        self.check_compatible(other).expect("polynomial add");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c))
            .collect();
        Polynomial {
            family: self.family,
            n: self.n,
            terms,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other).expect("polynomial mul");
        let mut out = Polynomial::zero(self.family, self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, s: &RadicalRational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.family, self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * s))
            .collect();
        Polynomial {
            family: self.family,
            n: self.n,
            terms,
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Polynomial {
        self.mul_scalar(&RadicalRational::from_rational(q.clone()))
    }

    pub fn scale_int(&self, k: i64) -> Polynomial {
        self.mul_rational(&rat_int(k))
    }

    /// Image under `x_i -> x_{sigma(i)}`.
    pub fn permute_vars(&self, sigma: &Permutation) -> Polynomial {
        assert_eq!(self.n, sigma.n(), "polynomial/permutation size mismatch");
        let mut out = Polynomial::zero(self.family, self.n);
        for (m, c) in &self.terms {
            out.add_term(m.permute(sigma), c.clone());
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, values: &[Rational]) -> Result<RadicalRational> {
        if values.len() != self.n {
            return Err(usage(format!(
                "substitution expects {} values, got {}",
                self.n,
                values.len()
            )));
        }
        let mut acc = RadicalRational::zero();
        for (m, c) in &self.terms {
            let mut factor = Rational::one();
            for (v, &e) in values.iter().zip(&m.0) {
                for _ in 0..e {
                    factor *= v;
                }
            }
            acc += &c.mul_rational(&factor);
        }
        Ok(acc)
    }

    /// Full substitution of all variables; the result is a constant
    /// polynomial in the same ambient ring.
    pub fn substitute(&self, values: &[Rational]) -> Result<Polynomial> {
        if self.family != VarFamily::X {
            return Err(usage("substitution is defined on the x family"));
        }
        Ok(Polynomial::constant(
            self.family,
            self.n,
            self.eval(values)?,
        ))
    }

    /// Leading term in descending lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &RadicalRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when `rhs` does not divide `self` (or a
    /// coefficient quotient leaves the supported radical divisors).
    pub fn div_exact(&self, rhs: &Polynomial) -> Option<Polynomial> {
        self.check_compatible(rhs).ok()?;
        if rhs.is_zero() {
            return None;
        }
        let (lead_m, lead_c) = rhs.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.family, self.n);
        while let Some((m, c)) = rem.leading_term() {
            if !lead_m.divides(m) {
                return None;
            }
            let qm = m.div(lead_m);
            let qc = c.div(lead_c).ok()?;
            let mut t = Polynomial::zero(self.family, self.n);
            t.add_term(qm, qc);
            rem = rem.sub(&t.mul(rhs));
            quot.add_assign(&t);
        }
        Some(quot)
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn gcd_monomial(&self) -> Monomial {
        let mut out = match self.terms.keys().next() {
            Some(m) => m.clone(),
            None => return Monomial::constant(self.n),
        };
        for m in self.terms.keys() {
            for (o, e) in out.0.iter_mut().zip(&m.0) {
                *o = (*o).min(*e);
            }
        }
        out
    }

    /// Divides out the common monomial factor, then the coefficient of the
    /// lexicographically least remaining monomial. Used to compare products
    /// that are only pinned up to `monomial * scalar`.
    pub fn normalized_shape(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd_monomial();
        let mut shifted = Polynomial::zero(self.family, self.n);
        for (m, c) in &self.terms {
            shifted.add_term(m.div(&g), c.clone());
        }
        let lead = shifted.terms.iter().next().unwrap().1.clone();
        let inv = lead.invert().expect("leading coefficient not invertible");
        shifted.mul_scalar(&inv)
    }
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    family: VarFamily,
    m: &Monomial,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{family}{}", i + 1)?;
        } else {
            write!(f, "{family}{}^{e}", i + 1)?;
        }
    }
    Ok(())
}

/// Canonical rendering: terms in descending lexicographic monomial order,
/// sign-aware joining, `1*` elided, multi-term radical coefficients
/// parenthesized: `x1^2 - 2*x1*x2 + x2^2`, `(1 + sqrt(3))*x1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            // sign handling: single-term coefficients carry their sign into
            // the joiner, multi-term ones are parenthesized verbatim
            let (joiner_neg, body): (bool, RadicalRational) = match c.single_term() {
                Some((rad, q)) => {
                    let neg = q.is_negative();
                    (
                        neg,
                        RadicalRational::radical_term(q.abs(), rad),
                    )
                }
                None => (false, c.clone()),
            };
            if idx == 0 {
                if joiner_neg {
                    write!(f, "-")?;
                }
            } else if joiner_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let multi = body.single_term().is_none();
            if m.is_constant() {
                if multi && self.terms.len() > 1 {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else {
                let parens = multi;
                if parens {
                    write!(f, "({body})*")?;
                } else if !body.is_one() {
                    write!(f, "{body}*")?;
                }
                write_monomial(f, self.family, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(VarFamily::X, n, i)
    }

    #[test]
    fn product_examples() {
        let n = 2;
        let d = x(n, 1).sub(&x(n, 2));
        assert_eq!(d.mul(&Polynomial::one(VarFamily::X, n)), d);

        let s = x(n, 1).add(&x(n, 2));
        let mut expect = Polynomial::zero(VarFamily::X, n);
        expect.add_term(Monomial(vec![2, 0]), RadicalRational::one());
        expect.add_term(Monomial(vec![0, 2]), RadicalRational::from_int(-1));
        assert_eq!(d.mul(&s), expect);

        let mut sq = Polynomial::zero(VarFamily::X, n);
        sq.add_term(Monomial(vec![2, 0]), RadicalRational::one());
        sq.add_term(Monomial(vec![1, 1]), RadicalRational::from_int(-2));
        sq.add_term(Monomial(vec![0, 2]), RadicalRational::one());
        assert_eq!(d.mul(&d), sq);
    }

    #[test]
    fn family_mismatch_rejected() {
        let p = Polynomial::one(VarFamily::X, 2);
        let q = Polynomial::one(VarFamily::Y, 2);
        assert!(p.check_compatible(&q).is_err());
    }

    #[test]
    fn substitution_examples() {
        let n = 2;
        let d = x(n, 1).sub(&x(n, 2));
        let v = [rat_int(0), rat_int(1)];
        assert_eq!(d.eval(&v).unwrap(), RadicalRational::from_int(-1));

        // (x1-x2)(x1-x3)(x2-x3)(x4-x5) at (0,0,1,1,2) -> 0
        let n = 5;
        let p = x(n, 1)
            .sub(&x(n, 2))
            .mul(&x(n, 1).sub(&x(n, 3)))
            .mul(&x(n, 2).sub(&x(n, 3)))
            .mul(&x(n, 4).sub(&x(n, 5)));
        let staircase = [rat_int(0), rat_int(0), rat_int(1), rat_int(1), rat_int(2)];
        assert!(p.eval(&staircase).unwrap().is_zero());

        // (x1-x3)(x1-x5)(x3-x5)(x2-x4) at (0,0,1,1,2) -> 2
        let q = x(n, 1)
            .sub(&x(n, 3))
            .mul(&x(n, 1).sub(&x(n, 5)))
            .mul(&x(n, 3).sub(&x(n, 5)))
            .mul(&x(n, 2).sub(&x(n, 4)));
        assert_eq!(q.eval(&staircase).unwrap(), RadicalRational::from_int(2));
    }

    fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
        let mut p = Polynomial::zero(VarFamily::X, n);
        for _ in 0..rng.gen_range(0..5) {
            let m = Monomial((0..n).map(|_| rng.gen_range(0..3u16)).collect());
            let c = RadicalRational::from_rational(rat(
                rng.gen_range(-6..=6),
                rng.gen_range(1..=4),
            ));
            p.add_term(m, c);
        }
        p
    }

    #[test]
    fn substitution_is_ring_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let p = random_poly(&mut rng, n);
            let q = random_poly(&mut rng, n);
            let vals: Vec<Rational> = (0..n)
                .map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
                .collect();
            assert_eq!(
                p.mul(&q).eval(&vals).unwrap(),
                &p.eval(&vals).unwrap() * &q.eval(&vals).unwrap()
            );
            assert_eq!(
                p.add(&q).eval(&vals).unwrap(),
                &p.eval(&vals).unwrap() + &q.eval(&vals).unwrap()
            );
        }
    }

    #[test]
    fn product_degree_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let p = random_poly(&mut rng, n);
            let q = random_poly(&mut rng, n);
            if p.is_zero() || q.is_zero() {
                assert!(p.mul(&q).is_zero());
            } else {
                assert_eq!(p.mul(&q).degree(), p.degree() + q.degree());
            }
        }
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let d = x(n, 1).sub(&x(n, 2));
        let s = x(n, 1).add(&x(n, 2));
        let prod = d.mul(&s);
        assert_eq!(prod.div_exact(&d).unwrap(), s);
        assert_eq!(prod.div_exact(&s).unwrap(), d);
        // x1^2 - x2^2 is not divisible by x1 + 2 x2
        let other = x(n, 1).add(&x(n, 2).scale_int(2));
        assert!(prod.div_exact(&other).is_none());
    }

    #[test]
    fn display_goldens() {
        let n = 2;
        let d = x(n, 1).sub(&x(n, 2));
        assert_eq!(d.to_string(), "x1 - x2");
        assert_eq!(d.neg().to_string(), "-x1 + x2");
        assert_eq!(d.mul(&d).to_string(), "x1^2 - 2*x1*x2 + x2^2");
        assert_eq!(Polynomial::zero(VarFamily::X, 2).to_string(), "0");
        assert_eq!(
            Polynomial::rational(VarFamily::X, 2, rat(1, 2)).to_string(),
            "1/2"
        );
    }

    #[test]
    fn normalized_shape_strips_monomial_and_scalar() {
        let n = 2;
        // -3 * x1*x2 * (x1^2 - x2)  vs  (x1^2 - x2)
        let base = x(n, 1).mul(&x(n, 1)).sub(&x(n, 2));
        let mut shifted = Polynomial::zero(VarFamily::X, n);
        for (m, c) in base.terms() {
            shifted.add_term(m.mul(&Monomial(vec![1, 1])), c.mul_rational(&rat_int(-3)));
        }
        assert_eq!(shifted.normalized_shape(), base.normalized_shape());
    }
}
