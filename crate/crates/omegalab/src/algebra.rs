//! The group ring with polynomial coefficients.
//!
//! Multiplication uses the PLAIN group-ring convention: polynomial
//! coefficients are central, `(p sigma)(q tau) = (pq)(sigma tau)`. The
//! twisted action where a permutation also moves the variables is exposed
//! separately as [`AlgebraElement::act_on_poly`] and
//! [`AlgebraElement::diagonal_left_apply`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{usage, Result};
use crate::perm::Permutation;
use crate::poly::{Polynomial, VarFamily};
use crate::scalar::{rat, rat_int, Rational, RadicalRational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Polynomial>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The identity of the algebra.
    pub fn one(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_perm(sigma: Permutation) -> Self {
        let n = sigma.n();
        let mut out = Self::zero(n);
        out.insert_add(sigma, Polynomial::one(VarFamily::X, n));
        out
    }

    pub fn scalar(n: usize, c: RadicalRational) -> Self {
        let mut out = Self::zero(n);
        out.insert_add(
            Permutation::identity(n),
            Polynomial::constant(VarFamily::X, n, c),
        );
        out
    }

    pub fn from_scalar_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (Permutation, RadicalRational)>,
    ) -> Self {
        let mut out = Self::zero(n);
        for (sigma, c) in pairs {
            out.insert_add(sigma, Polynomial::constant(VarFamily::X, n, c));
        }
        out
    }

    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (Permutation, Polynomial)>,
    ) -> Self {
        let mut out = Self::zero(n);
        for (sigma, p) in pairs {
            out.insert_add(sigma, p);
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, sigma: &Permutation) -> Option<&Polynomial> {
        self.terms.get(sigma)
    }

    /// Constant coefficient of `sigma`; zero polynomial counts as `Some(0)`
    /// only when the term is absent.
    pub fn scalar_coeff(&self, sigma: &Permutation) -> Option<RadicalRational> {
        self.terms.get(sigma).and_then(|p| p.as_constant())
    }

    /// True when every coefficient is a constant polynomial.
    pub fn is_scalar(&self) -> bool {
        self.terms.values().all(|p| p.is_constant())
    }

    pub fn insert_add(&mut self, sigma: Permutation, p: Polynomial) {
        assert_eq!(sigma.n(), self.n, "permutation size mismatch");
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&sigma) {
            Some(existing) => {
                existing.add_assign(&p);
                if existing.is_zero() {
                    self.terms.remove(&sigma);
                }
            }
            None => {
                self.terms.insert(sigma, p);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "algebra size mismatch");
        let mut out = self.clone();
        for (sigma, p) in &other.terms {
            out.insert_add(sigma.clone(), p.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "algebra size mismatch");
        for (sigma, p) in &other.terms {
            self.insert_add(sigma.clone(), p.clone());
        }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(s, p)| (s.clone(), p.neg()))
            .collect();
        AlgebraElement { n: self.n, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: &RadicalRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(s, p)| (s.clone(), p.mul_scalar(c)))
            .collect();
        AlgebraElement { n: self.n, terms }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.mul_scalar(&RadicalRational::from_rational(q.clone()))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul_rational(&rat_int(k))
    }

    /// Multiplies every coefficient by a fixed polynomial (coefficients are
    /// central, so side is irrelevant).
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        if p.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (sigma, q) in &self.terms {
            out.insert_add(sigma.clone(), q.mul(p));
        }
        out
    }

    pub fn left_mul_perm(&self, sigma: &Permutation) -> Self {
        let mut out = Self::zero(self.n);
        for (tau, p) in &self.terms {
            out.insert_add(sigma.compose(tau), p.clone());
        }
        out
    }

    pub fn right_mul_perm(&self, sigma: &Permutation) -> Self {
        let mut out = Self::zero(self.n);
        for (tau, p) in &self.terms {
            out.insert_add(tau.compose(sigma), p.clone());
        }
        out
    }

    /// Applies `x_i -> x_{sigma(i)}` to every coefficient, leaving the
    /// group part alone.
    pub fn permute_coeff_vars(&self, sigma: &Permutation) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(tau, p)| (tau.clone(), p.permute_vars(sigma)))
            .collect();
        AlgebraElement { n: self.n, terms }
    }

    /// Product in the plain group ring. Terms are grouped by equal
    /// coefficient polynomials so that each distinct polynomial product is
    /// computed once; the convolution itself is integer bookkeeping.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "algebra size mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let ga = group_by_coeff(self);
        let gb = group_by_coeff(other);

        // all distinct coefficient products, in parallel
        let pair_indices: Vec<(usize, usize)> = (0..ga.len())
            .flat_map(|i| (0..gb.len()).map(move |j| (i, j)))
            .collect();
        let products: Vec<Polynomial> = pair_indices
            .par_iter()
            .map(|&(i, j)| ga[i].0.mul(gb[j].0))
            .collect();

        // convolution counts per (result permutation, product index)
        let mut counts: HashMap<Permutation, HashMap<u32, i64>> = HashMap::new();
        for (i, (_, perms_a)) in ga.iter().enumerate() {
            for (j, (_, perms_b)) in gb.iter().enumerate() {
                let idx = (i * gb.len() + j) as u32;
                for sigma in perms_a {
                    for tau in perms_b {
                        let pi = sigma.compose(tau);
                        *counts.entry(pi).or_default().entry(idx).or_insert(0) += 1;
                    }
                }
            }
        }

        // assemble exact coefficients per permutation
        let mut entries: Vec<(Permutation, HashMap<u32, i64>)> = counts.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let assembled: Vec<(Permutation, Polynomial)> = entries
            .into_par_iter()
            .map(|(pi, mult)| {
                let mut acc = Polynomial::zero(VarFamily::X, self.n);
                for (idx, count) in mult {
                    acc.add_assign(&products[idx as usize].scale_int(count));
                }
                (pi, acc)
            })
            .collect();

        let mut out = Self::zero(self.n);
        for (pi, p) in assembled {
            out.insert_add(pi, p);
        }
        out
    }

    /// The twisted polynomial action `sum_sigma p_sigma . sigma^x(p)` where
    /// `sigma^x` substitutes `x_i -> x_{sigma(i)}`.
    pub fn act_on_poly(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.n, "polynomial arity mismatch");
        let mut out = Polynomial::zero(p.family(), p.nvars());
        for (sigma, c) in &self.terms {
            out.add_assign(&c.mul(&p.permute_vars(sigma)));
        }
        out
    }

    /// Left action of the diagonal group: for scalar `a = sum c_sigma sigma`,
    /// returns `sum_sigma c_sigma . sigma . b^(sigma)` where `b^(sigma)`
    /// substitutes the coefficients of `b` through `sigma^x`.
    pub fn diagonal_left_apply(&self, b: &Self) -> Self {
        assert_eq!(self.n, b.n, "algebra size mismatch");
        assert!(
            self.is_scalar(),
            "diagonal application needs scalar coefficients"
        );
        let mut out = Self::zero(self.n);
        for (sigma, c) in &self.terms {
            let c = c.as_constant().unwrap();
            for (tau, p) in &b.terms {
                out.insert_add(
                    sigma.compose(tau),
                    p.permute_vars(sigma).mul_scalar(&c),
                );
            }
        }
        out
    }

    /// Checked constructor used by user-facing entry points.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(usage(format!(
                "algebra size mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(self.mul(other))
    }

    /// Measures `c` with `self = c * other` term by term; `None` when the
    /// supports differ or no single exact ratio works.
    pub fn proportionality_scalar(&self, other: &Self) -> Option<RadicalRational> {
        if self.n != other.n || self.terms.len() != other.terms.len() {
            return None;
        }
        let (sigma, q) = other.terms.iter().next()?;
        let p = self.terms.get(sigma)?;
        let q_const = q.as_constant()?;
        let p_const = p.as_constant()?;
        let c = p_const.div(&q_const).ok()?;
        if self == &other.mul_scalar(&c) {
            Some(c)
        } else {
            None
        }
    }
}

fn group_by_coeff(a: &AlgebraElement) -> Vec<(&Polynomial, Vec<&Permutation>)> {
    let mut index: HashMap<&Polynomial, usize> = HashMap::new();
    let mut groups: Vec<(&Polynomial, Vec<&Permutation>)> = Vec::new();
    for (sigma, p) in &a.terms {
        match index.get(p) {
            Some(&g) => groups[g].1.push(sigma),
            None => {
                index.insert(p, groups.len());
                groups.push((p, vec![sigma]));
            }
        }
    }
    groups
}

/// `(n!)^{-1} sum_sigma sigma`.
pub fn trivial_idempotent(n: usize) -> AlgebraElement {
    let fact: i64 = (1..=n as i64).product();
    let c = RadicalRational::from_rational(rat(1, fact));
    AlgebraElement::from_scalar_pairs(
        n,
        Permutation::all(n).into_iter().map(|s| (s, c.clone())),
    )
}

/// Canonical rendering: `(<polynomial>) * [sigma]` terms joined by ` + `,
/// sorted by one-line lexicographic order.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (sigma, p)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p}) * {sigma}")?;
        }
        Ok(())
    }
}

/// Parses the canonical rendering of an element with constant coefficients.
pub fn parse_scalar_element(s: &str) -> Result<AlgebraElement> {
    let s = s.trim();
    if s == "0" {
        return Err(usage("cannot infer the size of a zero element"));
    }
    let mut pairs = Vec::new();
    for chunk in split_top_level(s) {
        let chunk = chunk.trim();
        let pos = chunk
            .rfind(" * [")
            .ok_or_else(|| usage(format!("malformed element term '{chunk}'")))?;
        let coeff_part = chunk[..pos].trim();
        let perm_part = chunk[pos + 3..].trim();
        let inner = coeff_part
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| usage(format!("coefficient '{coeff_part}' must be parenthesized")))?;
        let c: RadicalRational = inner.parse()?;
        let sigma: Permutation = perm_part.parse()?;
        pairs.push((sigma, c));
    }
    let n = pairs
        .first()
        .map(|(s, _)| s.n())
        .ok_or_else(|| usage("empty element"))?;
    if pairs.iter().any(|(s, _)| s.n() != n) {
        return Err(usage("element mixes permutation sizes"));
    }
    Ok(AlgebraElement::from_scalar_pairs(n, pairs))
}

/// Splits on ` + ` at parenthesis depth zero.
fn split_top_level(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0
                && i >= 1
                && bytes[i - 1] == b' '
                && i + 1 < bytes.len()
                && bytes[i + 1] == b' ' =>
            {
                out.push(&s[start..i - 1]);
                start = i + 2;
            }
            _ => {}
        }
        i += 1;
    }
    out.push(&s[start..]);
    out
}
