//! The quasi-idempotents with polynomial coefficients: construction of
//! `Omega_lambda = sum_sigma Delta_lambda(sigma) sigma`, its decomposition
//! over matrix units, the staircase specialization `g_lambda`, and the code
//! polynomial transform with the two factorized reference products.

use crate::algebra::AlgebraElement;
use crate::error::{usage, Result};
use crate::pair::PairAlgebraElement;
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial, VarFamily};
use crate::scalar::{rat, RadicalRational};
use crate::specht::{delta_lambda, specht_generator, specialize_element, young_polynomial};
use crate::tableau::{word_between, Partition};
use crate::units::{young_subgroup_alternant, zeta_chain, ShapeUnits};

/// `Omega_lambda = sum_{sigma in S_n} Delta_lambda(sigma) sigma`.
pub fn omega(lambda: &Partition) -> Result<AlgebraElement> {
    let n = lambda.weight();
    if n > 8 {
        return Err(usage(format!(
            "weight {n} exceeds the desk-scale guard (n <= 8)"
        )));
    }
    let mut out = AlgebraElement::zero(n);
    for sigma in Permutation::all(n) {
        let coeff = delta_lambda(lambda, &sigma)?;
        out.insert_add(sigma, coeff);
    }
    Ok(out)
}

/// Independent route: `Omega_lambda = (sum_sigma sigma sigma^x) Y_tc`,
/// i.e. the coefficient of `sigma` is `sigma^x(Y_tc)`.
pub fn omega_via_action(lambda: &Partition) -> Result<AlgebraElement> {
    let n = lambda.weight();
    if n > 8 {
        return Err(usage(format!(
            "weight {n} exceeds the desk-scale guard (n <= 8)"
        )));
    }
    let y = specht_generator(lambda);
    let mut out = AlgebraElement::zero(n);
    for sigma in Permutation::all(n) {
        out.insert_add(sigma.clone(), y.permute_vars(&sigma));
    }
    Ok(out)
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Result of checking `Omega^2 = (n!/f) Y_tc Omega`.
pub struct QuasiReport {
    pub lambda: Partition,
    pub routes_agree: bool,
    pub ok: bool,
    /// the measured proportionality, zero polynomial when no scale exists
    pub scale: Polynomial,
    pub expected_scale: Polynomial,
    pub failure: Option<String>,
}

pub fn verify_quasi_idempotent(lambda: &Partition) -> Result<QuasiReport> {
    let n = lambda.weight();
    let om = omega(lambda)?;
    let routes_agree = om == omega_via_action(lambda)?;
    let square = om.mul(&om);

    let f = crate::tableau::count_tableaux(lambda) as i64;
    let expected_scale = specht_generator(lambda).mul_rational(&rat(factorial(n), f));

    // measure the scale on the least common support permutation, then
    // verify the proportionality globally
    let mut scale = Polynomial::zero(VarFamily::X, n);
    let mut failure = None;
    let reference = om
        .terms()
        .find(|(sigma, _)| square.coeff(sigma).is_some())
        .map(|(sigma, p)| (sigma.clone(), p.clone()));
    match reference {
        Some((sigma, p)) => match square.coeff(&sigma).unwrap().div_exact(&p) {
            Some(measured) => {
                scale = measured;
            }
            None => {
                failure = Some(format!(
                    "coefficient of {sigma} in the square is not a multiple of the one in omega"
                ));
            }
        },
        None => {
            failure = Some("square and omega have disjoint supports".into());
        }
    }

    let mut ok = failure.is_none() && routes_agree;
    if ok && scale != expected_scale {
        ok = false;
        failure = Some(format!(
            "measured scale {scale} differs from (n!/f) Y_tc = {expected_scale}"
        ));
    }
    if ok {
        let rebuilt = om.mul_poly(&scale);
        if rebuilt != square {
            ok = false;
            let bad = square
                .terms()
                .find(|(s, p)| rebuilt.coeff(s) != Some(p))
                .or_else(|| rebuilt.terms().find(|(s, p)| square.coeff(s) != Some(p)))
                .map(|(s, _)| s.clone());
            failure = Some(format!(
                "square differs from scale * omega, first differing term {}",
                bad.map(|s| s.to_string()).unwrap_or_default()
            ));
        }
    }
    if !routes_agree {
        failure
            .get_or_insert_with(|| "block-product and action routes disagree".to_string());
    }

    Ok(QuasiReport {
        lambda: lambda.clone(),
        routes_agree,
        ok,
        scale,
        expected_scale,
        failure,
    })
}

/// Result of checking `(f/n!) Omega = sum_t Y_t e_{t,tc}` in both displayed
/// assemblies.
pub struct DecompositionReport {
    pub lambda: Partition,
    pub unit_form_ok: bool,
    pub chain_form_ok: bool,
    pub failure: Option<String>,
}

impl DecompositionReport {
    pub fn ok(&self) -> bool {
        self.unit_form_ok && self.chain_form_ok
    }
}

pub fn verify_decomposition(lambda: &Partition) -> Result<DecompositionReport> {
    let n = lambda.weight();
    let f = crate::tableau::count_tableaux(lambda) as i64;
    let lhs = omega(lambda)?.mul_rational(&rat(f, factorial(n)));

    let su = ShapeUnits::new(lambda.clone());
    let tc = su.tc();

    // first form: sum_t Y_t e_{t,tc}
    let mut unit_form = AlgebraElement::zero(n);
    for t in su.tableaux() {
        let y_t = young_polynomial(t)?;
        unit_form.add_assign(&su.unit(t, &tc)?.mul_poly(&y_t));
    }
    let unit_form_ok = unit_form == lhs;

    // second form: (sum_t zeta^x(t,tc) zeta(t,tc)) Y_tc e_{tc,tc}
    let y = specht_generator(lambda);
    let diag = su.diagonal_unit(&tc)?;
    let mut chain_form = AlgebraElement::zero(n);
    for t in su.tableaux() {
        let z = zeta_chain(&tc, t)?;
        chain_form.add_assign(&z.mul(&diag).mul_poly(&z.act_on_poly(&y)));
    }
    let chain_form_ok = chain_form == lhs;

    let failure = (!unit_form_ok || !chain_form_ok).then(|| {
        format!(
            "decomposition mismatch for {lambda}: unit form {unit_form_ok}, chain form {chain_form_ok}"
        )
    });

    Ok(DecompositionReport {
        lambda: lambda.clone(),
        unit_form_ok,
        chain_form_ok,
        failure,
    })
}

/// Result of the symmetry battery: left diagonal invariance, right
/// alternation under the Young subgroup, and absorption by the measured
/// isotype component of the diagonal symmetrizer.
pub struct SymmetryReport {
    pub lambda: Partition,
    pub invariance: bool,
    pub alternation: bool,
    pub isotype: Option<Partition>,
    pub absorption: Option<bool>,
    pub failure: Option<String>,
}

impl SymmetryReport {
    pub fn ok(&self) -> bool {
        self.invariance && self.alternation && self.absorption.unwrap_or(true)
    }
}

pub fn verify_symmetries(lambda: &Partition, with_absorption: bool) -> Result<SymmetryReport> {
    let n = lambda.weight();
    let om = omega(lambda)?;

    let mut invariance = true;
    let mut failure = None;
    for i in 1..n {
        let s = AlgebraElement::from_perm(Permutation::simple(n, i));
        if s.diagonal_left_apply(&om) != om {
            invariance = false;
            failure = Some(format!("diagonal invariance fails at s{i}"));
            break;
        }
    }

    let mut alternation = true;
    for i in lambda.young_subgroup_generators() {
        if om.right_mul_perm(&Permutation::simple(n, i)) != om.neg() {
            alternation = false;
            failure.get_or_insert_with(|| format!("right alternation fails at s{i}"));
            break;
        }
    }

    let (isotype, absorption) = if with_absorption {
        let nu = crate::specht::isotype_of(lambda)?;
        let component = ShapeUnits::new(nu.clone()).pair_component()?;
        let absorbed = component.apply(&om) == om;
        if !absorbed {
            failure.get_or_insert_with(|| {
                format!("isotype component {nu} does not absorb omega")
            });
        }
        (Some(nu), Some(absorbed))
    } else {
        (None, None)
    };

    Ok(SymmetryReport {
        lambda: lambda.clone(),
        invariance,
        alternation,
        isotype,
        absorption,
        failure,
    })
}

/// The staircase specialization of `Omega_lambda` and its behaviour as a
/// multiple of `e_{tr,tc}`.
pub struct SpecializedG {
    pub lambda: Partition,
    pub g: AlgebraElement,
    /// measured scalar with `g = kappa e_{tr,tc}`
    pub kappa: RadicalRational,
    pub proportional: bool,
    /// `None` for single-tableau shapes where tr = tc
    pub square_is_zero: Option<bool>,
    /// word taking tr to tc; its permutation `w` makes `w g` quasi-idempotent
    pub word: Vec<usize>,
    pub quasi_constant: RadicalRational,
    pub quasi_ok: bool,
    pub failure: Option<String>,
}

impl SpecializedG {
    pub fn ok(&self) -> bool {
        self.proportional && self.square_is_zero.unwrap_or(true) && self.quasi_ok
    }
}

pub fn specialized_g(lambda: &Partition) -> Result<SpecializedG> {
    let n = lambda.weight();
    if n > 7 {
        return Err(usage("specialization is desk-scale, |lambda| <= 7"));
    }
    let mu = lambda.conjugate();
    let om = omega(lambda)?;
    let g = specialize_element(&om, &mu)?;

    let su = ShapeUnits::new(lambda.clone());
    let tc = su.tc();
    let tr = su.tr();
    let unit = su.unit(&tr, &tc)?;

    let mut failure = None;
    let kappa = match g.proportionality_scalar(&unit) {
        Some(c) => c,
        None => {
            failure = Some(format!(
                "specialized omega of {lambda} is not proportional to the (tr, tc) unit"
            ));
            RadicalRational::zero()
        }
    };
    let proportional = failure.is_none();

    let square_is_zero = if tr == tc {
        None
    } else {
        let z = g.mul(&g).is_zero();
        if !z {
            failure.get_or_insert_with(|| "g * g is not zero".to_string());
        }
        Some(z)
    };

    let word = word_between(&tc, &tr)?;
    let w = Permutation::of_word(n, &word);
    let e = AlgebraElement::from_perm(w).mul(&g);
    let square = e.mul(&e);
    let (quasi_constant, quasi_ok) = match square.proportionality_scalar(&e) {
        Some(c) if !c.is_zero() => {
            // the normalized element is a true idempotent
            let normalized = e.mul_scalar(&c.invert()?);
            (c, normalized.mul(&normalized) == normalized)
        }
        _ => {
            failure.get_or_insert_with(|| "w g is not quasi-idempotent".to_string());
            (RadicalRational::zero(), false)
        }
    };
    if !quasi_ok {
        failure.get_or_insert_with(|| "normalized w g is not idempotent".to_string());
    }

    Ok(SpecializedG {
        lambda: lambda.clone(),
        g,
        kappa,
        proportional,
        square_is_zero,
        word,
        quasi_constant,
        quasi_ok,
        failure,
    })
}

/// Result of expanding the displayed 48-term word expression against the
/// specialized element of the (3,2)-column shape.
pub struct WordFormulaReport {
    pub ok: bool,
    pub scalar: Option<RadicalRational>,
    pub support: usize,
    pub signs_ok: bool,
    pub right_annihilated: bool,
    pub failure: Option<String>,
}

/// Expands `s2 s4 s3 (1 + s1 s2 s3 + s2 s4 s3 + s2 s3 s4 s1 s2 s3)` times the
/// signed Young subgroup sum of blocks (3,2) and compares with the
/// specialized element up to one measured scalar.
pub fn verify_g32_word_formula() -> Result<WordFormulaReport> {
    let n = 5;
    let lambda = Partition::new(vec![3, 2])?;
    let prefix = AlgebraElement::from_perm(Permutation::of_word(n, &[2, 4, 3]));
    let mut cosets = AlgebraElement::one(n);
    for word in [&[1usize, 2, 3][..], &[2, 4, 3], &[2, 3, 4, 1, 2, 3]] {
        cosets.add_assign(&AlgebraElement::from_perm(Permutation::of_word(n, word)));
    }
    let alternant = young_subgroup_alternant(&lambda);
    let expansion = prefix.mul(&cosets).mul(&alternant);

    let g = specialize_element(&omega(&lambda)?, &lambda.conjugate())?;
    let scalar = g.proportionality_scalar(&expansion);

    let support = expansion.support_size();
    let signs_ok = expansion.terms().all(|(_, p)| {
        p.as_constant()
            .and_then(|c| c.as_rational())
            .map(|q| q == rat(1, 1) || q == rat(-1, 1))
            .unwrap_or(false)
    });
    let right_annihilated = expansion
        .mul(&AlgebraElement::one(n).add(&AlgebraElement::from_perm(Permutation::simple(n, 1))))
        .is_zero();

    let ok = scalar.as_ref().map(|c| !c.is_zero()).unwrap_or(false)
        && support == 48
        && signs_ok
        && right_annihilated;
    let failure = (!ok).then(|| {
        format!(
            "word formula mismatch: scalar {:?}, support {support}, signs {signs_ok}, right annihilation {right_annihilated}",
            scalar.as_ref().map(|c| c.to_string())
        )
    });

    Ok(WordFormulaReport {
        ok,
        scalar,
        support,
        signs_ok,
        right_annihilated,
        failure,
    })
}

/// `sum_sigma c_sigma y^{code(sigma)}` for an element with constant
/// coefficients. The code is injective, so the transform is support
/// faithful.
pub fn code_polynomial(a: &AlgebraElement) -> Result<Polynomial> {
    let n = a.n();
    let mut out = Polynomial::zero(VarFamily::Y, n);
    for (sigma, p) in a.terms() {
        let c = p.as_constant().ok_or_else(|| {
            usage(format!(
                "code polynomial needs constant coefficients, got {p} at {sigma}"
            ))
        })?;
        let exponents: Vec<u16> = sigma.code().iter().map(|&e| e as u16).collect();
        out.add_term(Monomial(exponents), c);
    }
    Ok(out)
}

/// The code polynomial of `omega g_lambda omega` with `omega = [n, ..., 1]`.
pub fn conjugated_g_code(lambda: &Partition) -> Result<Polynomial> {
    let n = lambda.weight();
    let g = specialize_element(&omega(lambda)?, &lambda.conjugate())?;
    let w = AlgebraElement::from_perm(Permutation::longest(n));
    code_polynomial(&w.mul(&g).mul(&w))
}

fn y(n: usize, i: usize) -> Polynomial {
    Polynomial::variable(VarFamily::Y, n, i)
}

fn y_one(n: usize) -> Polynomial {
    Polynomial::one(VarFamily::Y, n)
}

/// `y1 y2 (1+y1)(1+y2)(y1^2-y2)(1-y3+y3^2)(y4-1)` in 5 variables.
pub fn reference_product_32() -> Polynomial {
    let n = 5;
    y(n, 1)
        .mul(&y(n, 2))
        .mul(&y_one(n).add(&y(n, 1)))
        .mul(&y_one(n).add(&y(n, 2)))
        .mul(&y(n, 1).mul(&y(n, 1)).sub(&y(n, 2)))
        .mul(&y_one(n).sub(&y(n, 3)).add(&y(n, 3).mul(&y(n, 3))))
        .mul(&y(n, 4).sub(&y_one(n)))
}

/// `y1^4 y2^2 y3^2 (1+y1+y1^2)(1+y2)(1+y3)(y2^2-y3)(1-y4+y4^2-y4^3)
/// (1-y5+y5^2)(1-y6)` in 7 variables.
pub fn reference_product_421() -> Polynomial {
    let n = 7;
    let mut monomial = Polynomial::zero(VarFamily::Y, n);
    monomial.add_term(
        Monomial(vec![4, 2, 2, 0, 0, 0, 0]),
        RadicalRational::one(),
    );
    let y4 = y(n, 4);
    let y5 = y(n, 5);
    monomial
        .mul(&y_one(n).add(&y(n, 1)).add(&y(n, 1).mul(&y(n, 1))))
        .mul(&y_one(n).add(&y(n, 2)))
        .mul(&y_one(n).add(&y(n, 3)))
        .mul(&y(n, 2).mul(&y(n, 2)).sub(&y(n, 3)))
        .mul(
            &y_one(n)
                .sub(&y4)
                .add(&y4.mul(&y4))
                .sub(&y4.mul(&y4).mul(&y4)),
        )
        .mul(&y_one(n).sub(&y5).add(&y5.mul(&y5)))
        .mul(&y_one(n).sub(&y(n, 6)))
}

/// Result of matching a code polynomial against a displayed factorized
/// product, up to a common monomial factor and one scalar.
pub struct CodeFactorizationReport {
    pub lambda: Partition,
    pub ok: bool,
    pub support: usize,
    pub expected_support: usize,
    pub signs_ok: bool,
    pub failure: Option<String>,
}

pub fn verify_factorized_example(lambda: &Partition) -> Result<CodeFactorizationReport> {
    let (reference, expected_support) = match lambda.parts() {
        [3, 2] => (reference_product_32(), 48),
        [4, 2, 1] => (reference_product_421(), 576),
        _ => {
            return Err(usage(format!(
                "no displayed factorization for column lengths {lambda}"
            )))
        }
    };
    let code = conjugated_g_code(lambda)?;
    let normalized = code.normalized_shape();
    let ok_match = normalized == reference.normalized_shape();
    let support = code.num_terms();
    let signs_ok = normalized.terms().all(|(_, c)| {
        c.as_rational()
            .map(|q| q == rat(1, 1) || q == rat(-1, 1))
            .unwrap_or(false)
    });
    let ok = ok_match && support == expected_support && signs_ok;
    let failure = (!ok).then(|| {
        let mut missing: Vec<String> = Vec::new();
        let reference_norm = reference.normalized_shape();
        for (m, _) in reference_norm.terms() {
            if !normalized.terms().any(|(pm, _)| pm == m) {
                missing.push(format!("{m:?}"));
            }
        }
        format!(
            "factorized product mismatch for {lambda}: match {ok_match}, support {support} (expected {expected_support}), signs {signs_ok}, missing monomials {missing:?}"
        )
    });
    Ok(CodeFactorizationReport {
        lambda: lambda.clone(),
        ok,
        support,
        expected_support,
        signs_ok,
        failure,
    })
}

/// Aggregated report for the CLI `omega` subcommand.
pub struct OmegaReport {
    pub lambda: Partition,
    pub quasi_idempotent: Option<bool>,
    pub scale: Option<Polynomial>,
    pub decomposition_ok: Option<bool>,
    pub invariance_ok: Option<bool>,
    pub alternation_ok: Option<bool>,
}

/// `sum_t tensor(e_{t,u}, e_{t,u})`-style absorption helper used by the
/// symmetry battery; exposed for the checks module.
pub fn shape_component(lambda: &Partition) -> Result<PairAlgebraElement> {
    ShapeUnits::new(lambda.clone()).pair_component()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn p(parts: &[u8]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(VarFamily::X, n, i)
    }

    #[test]
    fn omega_small_shapes() {
        // two columns of one cell: empty Vandermonde blocks
        let om = omega(&p(&[1, 1])).unwrap();
        let expect = AlgebraElement::one(2).add(&AlgebraElement::from_perm(
            Permutation::simple(2, 1),
        ));
        assert_eq!(om, expect);

        // one column of two cells: (x1 - x2)(1 - s1)
        let om = omega(&p(&[2])).unwrap();
        let d = x(2, 1).sub(&x(2, 2));
        let expect = AlgebraElement::one(2)
            .sub(&AlgebraElement::from_perm(Permutation::simple(2, 1)))
            .mul_poly(&d);
        assert_eq!(om, expect);

        // columns (2,1): coefficient of sigma is x_{sigma_1} - x_{sigma_2}
        let om = omega(&p(&[2, 1])).unwrap();
        assert_eq!(om.support_size(), 6);
        for sigma in Permutation::all(3) {
            let expect = x(3, sigma.map(1)).sub(&x(3, sigma.map(2)));
            assert_eq!(om.coeff(&sigma), Some(&expect));
        }
    }

    #[test]
    fn omega_routes_agree() {
        for n in 1..=4usize {
            for lam in Partition::all_of(n) {
                assert_eq!(omega(&lam).unwrap(), omega_via_action(&lam).unwrap());
            }
        }
    }

    #[test]
    fn quasi_idempotency_small() {
        // single column of 2: scale is 2 (x1 - x2)
        let report = verify_quasi_idempotent(&p(&[2])).unwrap();
        assert!(report.ok, "{:?}", report.failure);
        assert_eq!(report.scale, x(2, 1).sub(&x(2, 2)).scale_int(2));

        // all singleton columns: scale n! with Y_tc = 1
        let report = verify_quasi_idempotent(&p(&[1, 1, 1])).unwrap();
        assert!(report.ok);
        assert_eq!(
            report.scale,
            Polynomial::one(VarFamily::X, 3).scale_int(6)
        );

        // columns (2,2): scale 12 (x1 - x2)(x3 - x4)
        let report = verify_quasi_idempotent(&p(&[2, 2])).unwrap();
        assert!(report.ok, "{:?}", report.failure);
        assert_eq!(
            report.scale,
            x(4, 1)
                .sub(&x(4, 2))
                .mul(&x(4, 3).sub(&x(4, 4)))
                .scale_int(12)
        );
    }

    #[test]
    fn decomposition_small() {
        for lam in [p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])] {
            let report = verify_decomposition(&lam).unwrap();
            assert!(report.ok(), "{:?}", report.failure);
        }
    }

    #[test]
    fn symmetries_small() {
        for lam in [p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1])] {
            let report = verify_symmetries(&lam, true).unwrap();
            assert!(report.ok(), "{:?}", report.failure);
            assert_eq!(report.isotype.as_ref(), Some(&lam));
        }
    }

    #[test]
    fn specialization_examples() {
        // single column of 2, staircase (0,1): s1 - 1
        let om = omega(&p(&[2])).unwrap();
        let g = specialize_element(&om, &p(&[1, 1])).unwrap();
        let expect = AlgebraElement::from_perm(Permutation::simple(2, 1))
            .sub(&AlgebraElement::one(2));
        assert_eq!(g, expect);

        // two singleton columns, staircase (0,0): 1 + s1
        let om = omega(&p(&[1, 1])).unwrap();
        let g = specialize_element(&om, &p(&[2])).unwrap();
        let expect = AlgebraElement::one(2)
            .add(&AlgebraElement::from_perm(Permutation::simple(2, 1)));
        assert_eq!(g, expect);
    }

    #[test]
    fn specialized_g_single_tableau_shape() {
        // columns (2): tr = tc, g = -2 e_{tc,tc}, quasi constant -2
        let report = specialized_g(&p(&[2])).unwrap();
        assert!(report.ok(), "{:?}", report.failure);
        assert!(report.square_is_zero.is_none());
        assert!(report.word.is_empty());
        assert_eq!(report.kappa, RadicalRational::from_int(-2));
        assert_eq!(report.quasi_constant, RadicalRational::from_int(-2));
    }

    #[test]
    fn specialized_g_32() {
        let report = specialized_g(&p(&[3, 2])).unwrap();
        assert!(report.ok(), "{:?}", report.failure);
        assert_eq!(report.g.support_size(), 48);
        assert_eq!(report.square_is_zero, Some(true));
        // w = product of the word from tr to tc is s3 s2 s4
        let w = Permutation::of_word(5, &report.word);
        assert_eq!(w, Permutation::of_word(5, &[3, 2, 4]));
    }

    #[test]
    fn word_formula_for_32() {
        let report = verify_g32_word_formula().unwrap();
        assert!(report.ok, "{:?}", report.failure);
        assert_eq!(report.support, 48);
    }

    #[test]
    fn code_polynomial_examples() {
        // identity maps to y1 y2 ... yn
        let e = AlgebraElement::one(3);
        let c = code_polynomial(&e).unwrap();
        let expect = y(3, 1).mul(&y(3, 2)).mul(&y(3, 3));
        assert_eq!(c, expect);

        // 1 + s1 in S_2: y1 y2 + y1^2 y2
        let e = AlgebraElement::one(2)
            .add(&AlgebraElement::from_perm(Permutation::simple(2, 1)));
        let c = code_polynomial(&e).unwrap();
        let mut expect = Polynomial::zero(VarFamily::Y, 2);
        expect.add_term(Monomial(vec![1, 1]), RadicalRational::one());
        expect.add_term(Monomial(vec![2, 1]), RadicalRational::one());
        assert_eq!(c, expect);

        // support faithfulness on a non-trivial element
        let alt = young_subgroup_alternant(&p(&[3, 2]));
        assert_eq!(
            code_polynomial(&alt).unwrap().num_terms(),
            alt.support_size()
        );

        // non-constant coefficients are rejected
        let bad = AlgebraElement::one(2).mul_poly(&x(2, 1));
        assert!(code_polynomial(&bad).is_err());
    }

    #[test]
    fn factorized_example_32() {
        let report = verify_factorized_example(&p(&[3, 2])).unwrap();
        assert!(report.ok, "{:?}", report.failure);
        assert_eq!(report.support, 48);
    }

    #[test]
    fn reference_products_expand_fully() {
        assert_eq!(reference_product_32().num_terms(), 48);
        assert_eq!(reference_product_421().num_terms(), 576);
        assert_eq!(
            reference_product_32()
                .normalized_shape()
                .terms()
                .filter(|(_, c)| {
                    let q = c.as_rational().unwrap();
                    q == rat_int(1) || q == rat_int(-1)
                })
                .count(),
            48
        );
    }
}
