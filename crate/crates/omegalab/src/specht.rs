//! Vandermonde block products, Specht and Young polynomial bases,
//! isotype measurement, and staircase specialization.

use crate::algebra::AlgebraElement;
use crate::error::{usage, Result};
use crate::perm::Permutation;
use crate::poly::{Polynomial, VarFamily};
use crate::scalar::{rat_int, RadicalRational, Rational};
use crate::tableau::{first_tableau, word_between, Partition, StandardTableau};
use crate::units::{central_idempotent, zeta_chain};

/// `prod_{i<j} (x_{a_i} - x_{a_j})` over distinct variable indices; empty
/// and singleton lists give 1.
pub fn vandermonde(n: usize, indices: &[u8]) -> Result<Polynomial> {
    let mut seen = vec![false; n];
    for &a in indices {
        if a == 0 || a as usize > n {
            return Err(usage(format!("variable index {a} out of range 1..{n}")));
        }
        if seen[a as usize - 1] {
            return Err(usage(format!("repeated variable index {a}")));
        }
        seen[a as usize - 1] = true;
    }
    let mut out = Polynomial::one(VarFamily::X, n);
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            let diff = Polynomial::variable(VarFamily::X, n, indices[i] as usize).sub(
                &Polynomial::variable(VarFamily::X, n, indices[j] as usize),
            );
            out = out.mul(&diff);
        }
    }
    Ok(out)
}

/// Product of Vandermondes over consecutive blocks of the one-line word of
/// `sigma`, of sizes `lambda_1, lambda_2, ...`.
pub fn delta_lambda(lambda: &Partition, sigma: &Permutation) -> Result<Polynomial> {
    let n = lambda.weight();
    if sigma.n() != n {
        return Err(usage(format!(
            "permutation size {} does not match |lambda| = {n}",
            sigma.n()
        )));
    }
    let word = sigma.one_line();
    let mut out = Polynomial::one(VarFamily::X, n);
    for block in lambda.blocks() {
        out = out.mul(&vandermonde(n, &word[block])?);
    }
    Ok(out)
}

/// The Specht generator `Y_tc = Delta_lambda(identity)`: the product of
/// column Vandermondes of the first tableau.
pub fn specht_generator(lambda: &Partition) -> Polynomial {
    delta_lambda(lambda, &Permutation::identity(lambda.weight()))
        .expect("identity always matches the weight")
}

/// The tableau read as a product of Vandermonde factors of its columns.
pub fn column_vandermonde(t: &StandardTableau) -> Polynomial {
    let n = t.n();
    let mut out = Polynomial::one(VarFamily::X, n);
    for col in t.columns() {
        out = out.mul(&vandermonde(n, col).expect("tableau columns are distinct"));
    }
    out
}

/// Specht basis vector `sigma_{t,tc}^x Y_tc`. Equals [`column_vandermonde`]
/// of `t`; both routes are exercised in tests.
pub fn specht_polynomial(t: &StandardTableau) -> Result<Polynomial> {
    let lambda = t.shape();
    let tc = first_tableau(&lambda);
    let word = word_between(t, &tc)?;
    let sigma = Permutation::of_word(t.n(), &word);
    Ok(specht_generator(&lambda).permute_vars(&sigma))
}

/// Young basis vector `Y_t = zeta(t,tc) Y_tc`, with the zeta chain acting
/// through variable substitution.
pub fn young_polynomial(t: &StandardTableau) -> Result<Polynomial> {
    let lambda = t.shape();
    let tc = first_tableau(&lambda);
    let chain = zeta_chain(&tc, t)?;
    Ok(chain.act_on_poly(&specht_generator(&lambda)))
}

/// The unique partition `nu` whose central idempotent fixes `Y_tc` under
/// the x-action; every other central idempotent must annihilate it.
pub fn isotype_of(lambda: &Partition) -> Result<Partition> {
    let n = lambda.weight();
    let y = specht_generator(lambda);
    let mut survivor = None;
    for nu in Partition::all_of(n) {
        let image = central_idempotent(&nu)?.act_on_poly(&y);
        if image == y {
            if let Some(prev) = &survivor {
                return Err(usage(format!(
                    "isotype of {lambda} is not unique: both {prev} and {nu} fix Y_tc"
                )));
            }
            survivor = Some(nu);
        } else if !image.is_zero() {
            return Err(usage(format!(
                "central idempotent of {nu} neither fixes nor annihilates Y_tc of {lambda}"
            )));
        }
    }
    survivor.ok_or_else(|| usage(format!("no central idempotent fixes Y_tc of {lambda}")))
}

/// The staircase `[0^{mu_1}, 1^{mu_2}, 2^{mu_3}, ...]`.
pub fn staircase_values(mu: &Partition) -> Vec<Rational> {
    let mut out = Vec::with_capacity(mu.weight());
    for (level, &count) in mu.parts().iter().enumerate() {
        for _ in 0..count {
            out.push(rat_int(level as i64));
        }
    }
    out
}

/// Substitutes the staircase of `mu` into every coefficient, dropping the
/// terms that vanish.
pub fn specialize_element(a: &AlgebraElement, mu: &Partition) -> Result<AlgebraElement> {
    if mu.weight() != a.n() {
        return Err(usage(format!(
            "specialization weight {} does not match n = {}",
            mu.weight(),
            a.n()
        )));
    }
    let values = staircase_values(mu);
    let mut out = AlgebraElement::zero(a.n());
    for (sigma, p) in a.terms() {
        let c = p.eval(&values)?;
        if !c.is_zero() {
            out.insert_add(
                sigma.clone(),
                Polynomial::constant(VarFamily::X, a.n(), c),
            );
        }
    }
    Ok(out)
}

/// Rank of a matrix over the radical scalars by fraction-free elimination
/// (cross-multiplication only; the scalars form an integral domain).
pub fn radical_rank(mut rows: Vec<Vec<RadicalRational>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        let pivot_tail = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                row[c] = &(&pivot * &row[c]) - &(&factor * &pivot_tail[c]);
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficient rows of the polynomials over the union of their monomials.
pub fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<RadicalRational>> {
    let mut support = std::collections::BTreeSet::new();
    for p in polys {
        for (m, _) in p.terms() {
            support.insert(m.clone());
        }
    }
    let support: Vec<_> = support.into_iter().collect();
    polys
        .iter()
        .map(|p| {
            support
                .iter()
                .map(|m| {
                    p.terms()
                        .find(|(pm, _)| *pm == m)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(RadicalRational::zero)
                })
                .collect()
        })
        .collect()
}

/// Dimension of the span of `{sigma^x Y_tc : sigma in S_n}`.
pub fn specht_span_rank(lambda: &Partition) -> usize {
    let y = specht_generator(lambda);
    let polys: Vec<Polynomial> = Permutation::all(lambda.weight())
        .iter()
        .map(|sigma| y.permute_vars(sigma))
        .collect();
    radical_rank(coefficient_rows(&polys))
}
