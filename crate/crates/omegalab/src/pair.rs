//! Sums over two commuting copies of the symmetric group, used for the
//! diagonal symmetrizer and its decomposition into matrix-unit pairs.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::AlgebraElement;
use crate::poly::Polynomial;
use crate::error::{usage, Result};
use crate::perm::Permutation;
use crate::scalar::{rat, RadicalRational};

/// `sum c_{sigma,tau} sigma (x) tau` with exact scalar coefficients and the
/// componentwise product `(sigma (x) tau)(sigma' (x) tau') =
/// (sigma sigma') (x) (tau tau')`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairAlgebraElement {
    n: usize,
    terms: BTreeMap<(Permutation, Permutation), RadicalRational>,
}

impl PairAlgebraElement {
    pub fn zero(n: usize) -> Self {
        PairAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let id = Permutation::identity(n);
        let mut out = Self::zero(n);
        out.insert_add(id.clone(), id, RadicalRational::one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(Permutation, Permutation), &RadicalRational)> {
        self.terms.iter()
    }

    pub fn insert_add(&mut self, sigma: Permutation, tau: Permutation, c: RadicalRational) {
        assert_eq!(sigma.n(), self.n);
        assert_eq!(tau.n(), self.n);
        if c.is_zero() {
            return;
        }
        let key = (sigma, tau);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for ((s, t), c) in &other.terms {
            out.insert_add(s.clone(), t.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n);
        for ((s, t), c) in &other.terms {
            self.insert_add(s.clone(), t.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.mul_scalar(&RadicalRational::from_int(-1)))
    }

    pub fn mul_scalar(&self, c: &RadicalRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, q)| (k.clone(), q * c))
            .collect();
        PairAlgebraElement { n: self.n, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "pair algebra size mismatch");
        let mut out = Self::zero(self.n);
        for ((s1, t1), c1) in &self.terms {
            for ((s2, t2), c2) in &other.terms {
                out.insert_add(s1.compose(s2), t1.compose(t2), c1 * c2);
            }
        }
        out
    }

    /// `a (x) b` for elements with constant coefficients.
    pub fn tensor(a: &AlgebraElement, b: &AlgebraElement) -> Result<Self> {
        if a.n() != b.n() {
            return Err(usage("tensor factors must share n"));
        }
        let mut out = Self::zero(a.n());
        for (sigma, p) in a.terms() {
            let cp = p
                .as_constant()
                .ok_or_else(|| usage("tensor factors must have constant coefficients"))?;
            for (tau, q) in b.terms() {
                let cq = q
                    .as_constant()
                    .ok_or_else(|| usage("tensor factors must have constant coefficients"))?;
                out.insert_add(sigma.clone(), tau.clone(), &cp * &cq);
            }
        }
        Ok(out)
    }

    /// Embeds `a` into the first copy: `sum a_sigma (sigma (x) id)`.
    pub fn embed_first(a: &AlgebraElement) -> Result<Self> {
        Self::tensor(a, &AlgebraElement::one(a.n()))
    }

    /// Embeds `a` into the second copy: `sum a_sigma (id (x) sigma)`.
    pub fn embed_second(a: &AlgebraElement) -> Result<Self> {
        Self::tensor(&AlgebraElement::one(a.n()), a)
    }

    /// Measures `c` with `self = c * other`; `None` when no exact single
    /// scalar works.
    pub fn proportionality_scalar(&self, other: &Self) -> Option<RadicalRational> {
        if self.n != other.n || self.terms.len() != other.terms.len() {
            return None;
        }
        let (key, q) = other.terms.iter().next()?;
        let p = self.terms.get(key)?;
        let c = p.div(q).ok()?;
        if self == &other.mul_scalar(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Applies the element to the group ring with polynomial coefficients:
    /// the first copy multiplies on the left, the second acts on the
    /// coefficients by variable substitution.
    pub fn apply(&self, b: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, b.n(), "pair/element size mismatch");
        let mut out = AlgebraElement::zero(self.n);
        let mut twisted: BTreeMap<&Permutation, Vec<(Permutation, Polynomial)>> = BTreeMap::new();
        for ((sigma, tau), c) in &self.terms {
            let terms = twisted.entry(tau).or_insert_with(|| {
                b.terms()
                    .map(|(pi, p)| (pi.clone(), p.permute_vars(tau)))
                    .collect()
            });
            for (pi, p) in terms.iter() {
                out.insert_add(sigma.compose(pi), p.mul_scalar(c));
            }
        }
        out
    }
}

/// `(n!)^{-1} sum_sigma sigma (x) sigma`.
pub fn diagonal_symmetrizer(n: usize) -> PairAlgebraElement {
    let fact: i64 = (1..=n as i64).product();
    let c = RadicalRational::from_rational(rat(1, fact));
    let mut out = PairAlgebraElement::zero(n);
    for sigma in Permutation::all(n) {
        out.insert_add(sigma.clone(), sigma, c.clone());
    }
    out
}

impl fmt::Display for PairAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((sigma, tau), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) * {sigma}x{tau}")?;
        }
        Ok(())
    }
}
