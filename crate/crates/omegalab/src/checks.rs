//! Verification battery behind a common interface.
//!
//! Every identity check is a [`Check`] registered by name; the CLI selects
//! them at runtime (`--verify quasi,decomp`, `selftest`). Checks cap their
//! own problem sizes: the context only says how far to push and whether the
//! slow paths are wanted.

use std::time::Instant;

use crate::algebra::AlgebraElement;
use crate::error::Result;
use crate::omega;
use crate::pair::PairAlgebraElement;
use crate::perm::Permutation;
use crate::scalar::{rat, RadicalRational};
use crate::specht;
use crate::tableau::{
    count_tableaux, enumerate_tableaux, first_tableau, hook_length_count, last_tableau,
    moves_between, Partition,
};
use crate::units::{
    diagonal_symmetrizer, jucys_murphy, trivial_idempotent, verify_pair_decomposition,
    young_subgroup_alternant, zeta_step, ShapeUnits, Side,
};

pub struct CheckContext {
    /// largest group size the battery may touch
    pub max_n: usize,
    /// enables the expensive paths (|lambda| = 6 identities, n = 7 code
    /// polynomial)
    pub slow: bool,
    /// restricts shape-indexed checks to a single shape
    pub shape: Option<Partition>,
}

impl CheckContext {
    pub fn battery(max_n: usize, slow: bool) -> Self {
        CheckContext {
            max_n,
            slow,
            shape: None,
        }
    }

    pub fn single_shape(shape: Partition, slow: bool) -> Self {
        CheckContext {
            max_n: shape.weight(),
            slow,
            shape: Some(shape),
        }
    }

    /// Shapes to test, capped at weight `cap`.
    fn shapes(&self, cap: usize) -> Vec<Partition> {
        match &self.shape {
            Some(s) => {
                if s.weight() <= cap.min(self.max_n) {
                    vec![s.clone()]
                } else {
                    Vec::new()
                }
            }
            None => (1..=cap.min(self.max_n))
                .flat_map(Partition::all_of)
                .collect(),
        }
    }

    fn sizes(&self, cap: usize) -> Vec<usize> {
        match &self.shape {
            Some(s) => {
                if s.weight() <= cap.min(self.max_n) {
                    vec![s.weight()]
                } else {
                    Vec::new()
                }
            }
            None => (1..=cap.min(self.max_n)).collect(),
        }
    }

    fn includes(&self, lambda: &Partition) -> bool {
        match &self.shape {
            Some(s) => s == lambda,
            None => lambda.weight() <= self.max_n,
        }
    }
}

pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub millis: u128,
}

impl CheckReport {
    pub fn print(&self) {
        let status = if self.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {} ({} ms)", self.name, self.millis);
        for line in &self.details {
            println!("    {line}");
        }
    }
}

/// One verification strategy, selectable by name.
pub trait Check: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, ctx: &CheckContext) -> CheckReport;
}

struct Outcome {
    passed: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: true,
            details: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn ensure(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        if ok {
            self.details.push(format!("ok: {line}"));
        } else {
            self.passed = false;
            self.details.push(format!("FAILED: {line}"));
        }
    }
}

fn timed(
    name: &'static str,
    body: impl FnOnce(&mut Outcome) -> Result<()>,
) -> CheckReport {
    let start = Instant::now();
    let mut outcome = Outcome::new();
    if let Err(e) = body(&mut outcome) {
        outcome.passed = false;
        outcome.details.push(format!("error: {e}"));
    }
    CheckReport {
        name,
        passed: outcome.passed,
        details: outcome.details,
        millis: start.elapsed().as_millis(),
    }
}

// ---------------------------------------------------------------------------

struct TableauCheck;

impl Check for TableauCheck {
    fn name(&self) -> &'static str {
        "tabs"
    }

    fn summary(&self) -> &'static str {
        "tableau enumeration vs hook lengths, sum of squares, graph connectivity"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("tabs", |out| {
            for lambda in ctx.shapes(8) {
                let by_enum = count_tableaux(&lambda) as u64;
                let by_hooks = hook_length_count(&lambda);
                out.ensure(
                    by_enum == by_hooks,
                    format!("f({lambda}) = {by_enum} matches hook formula"),
                );
            }
            if ctx.shape.is_none() {
                for n in ctx.sizes(8) {
                    let total: u64 = Partition::all_of(n)
                        .iter()
                        .map(|lam| {
                            let f = count_tableaux(lam) as u64;
                            f * f
                        })
                        .sum();
                    let fact: u64 = (1..=n as u64).product();
                    out.ensure(total == fact, format!("sum of f^2 over |lambda|={n} is {n}!"));
                }
            }
            for lambda in ctx.shapes(7) {
                let tabs = enumerate_tableaux(&lambda);
                let tc = first_tableau(&lambda);
                let mut connected = true;
                let mut axial_ok = true;
                for t in &tabs {
                    connected &= moves_between(&tc, t).is_ok();
                    for i in 1..lambda.weight() {
                        if t.apply_transposition(i).is_some() {
                            let d = t.content(i)? - t.content(i + 1)?;
                            axial_ok &= d.abs() >= 2;
                        }
                    }
                }
                out.ensure(connected, format!("graph of {lambda} reachable from tc"));
                out.ensure(axial_ok, format!("axial distances >= 2 on {lambda}"));
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct UnitsCheck;

impl Check for UnitsCheck {
    fn name(&self) -> &'static str {
        "units"
    }

    fn summary(&self) -> &'static str {
        "matrix unit relations, JM eigenvalues, central idempotents"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("units", |out| {
            if ctx.max_n >= 2 && ctx.shape.is_none() {
                // the displayed unit decomposition at n = 2
                let s1 = AlgebraElement::from_perm(Permutation::simple(2, 1));
                let plus = AlgebraElement::one(2).add(&s1).mul_rational(&rat(1, 2));
                let minus = AlgebraElement::one(2).sub(&s1).mul_rational(&rat(1, 2));
                out.ensure(
                    plus.add(&minus) == AlgebraElement::one(2)
                        && plus.mul(&plus) == plus
                        && minus.mul(&minus) == minus
                        && plus.mul(&minus).is_zero(),
                    "n=2 unit decomposition (1+s1)/2 + (1-s1)/2",
                );
            }

            // full unit relations on quadruples
            for lambda in ctx.shapes(4) {
                let su = ShapeUnits::new(lambda.clone());
                let tabs = su.tableaux().to_vec();
                let mut ok = true;
                for t in &tabs {
                    for u in &tabs {
                        for v in &tabs {
                            for w in &tabs {
                                let right = su.unit(v, w)?;
                                let prod = su.unit(t, u)?.mul(&right);
                                let expect_zero = u != v;
                                if expect_zero {
                                    ok &= prod.is_zero();
                                } else {
                                    ok &= prod == *su.unit(t, w)?;
                                }
                            }
                        }
                    }
                }
                out.ensure(ok, format!("unit relations on all quadruples of {lambda}"));

                // chain-built diagonal units agree with the Murphy recursion
                let consistent = tabs
                    .iter()
                    .try_fold(true, |acc, t| -> Result<bool> {
                        Ok(acc && *su.unit(t, t)? == *su.diagonal_unit(t)?)
                    })?;
                out.ensure(
                    consistent,
                    format!("chain and Murphy diagonal units agree on {lambda}"),
                );
            }

            // two-sided JM eigenvalues
            for lambda in ctx.shapes(5) {
                let n = lambda.weight();
                let su = ShapeUnits::new(lambda.clone());
                let tabs = su.tableaux().to_vec();
                let mut ok = true;
                for t in &tabs {
                    for u in &tabs {
                        let e = su.unit(t, u)?;
                        for k in 1..=n {
                            let x = jucys_murphy(n, k)?;
                            ok &= x.mul(&e)
                                == e.mul_scalar(&RadicalRational::from_int(t.content(k)?));
                            ok &= e.mul(&x)
                                == e.mul_scalar(&RadicalRational::from_int(u.content(k)?));
                        }
                    }
                }
                out.ensure(ok, format!("two-sided JM eigenvalues on {lambda}"));
            }

            // central idempotents: completeness, orthogonality, centrality
            if ctx.shape.is_none() {
                for n in ctx.sizes(5) {
                    let shapes = Partition::all_of(n);
                    let centrals: Vec<AlgebraElement> = shapes
                        .iter()
                        .map(|lam| ShapeUnits::new(lam.clone()).central())
                        .collect::<Result<_>>()?;
                    let mut total = AlgebraElement::zero(n);
                    let mut ok = true;
                    for (i, e) in centrals.iter().enumerate() {
                        total.add_assign(e);
                        ok &= e.mul(e) == *e;
                        for (j, other) in centrals.iter().enumerate() {
                            if i != j {
                                ok &= e.mul(other).is_zero();
                            }
                        }
                        for k in 1..n {
                            let s = AlgebraElement::from_perm(Permutation::simple(n, k));
                            ok &= s.mul(e) == e.mul(&s);
                        }
                    }
                    ok &= total == AlgebraElement::one(n);
                    out.ensure(ok, format!("central idempotents at n={n}"));

                    let e_triv = trivial_idempotent(n);
                    let absorb = Permutation::all(n)
                        .into_iter()
                        .all(|s| AlgebraElement::from_perm(s).mul(&e_triv) == e_triv);
                    out.ensure(
                        e_triv.mul(&e_triv) == e_triv && absorb,
                        format!("trivial idempotent at n={n}"),
                    );
                }
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct UnitGraphCheck;

impl Check for UnitGraphCheck {
    fn name(&self) -> &'static str {
        "unitgraph"
    }

    fn summary(&self) -> &'static str {
        "the five idempotents of the (3,2)-column conjugation graph"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("unitgraph", |out| {
            let lambda = Partition::new(vec![3, 2])?;
            if !ctx.includes(&lambda) {
                out.note("skipped: needs n = 5");
                return Ok(());
            }
            let n = 5;
            let su = ShapeUnits::new(lambda);
            let tc = su.tc();
            let e_tc = su.diagonal_unit(&tc)?;
            let s = |i: usize| AlgebraElement::from_perm(Permutation::simple(n, i));
            let f3 = s(3).sub(&AlgebraElement::one(n).mul_rational(&rat(1, 3)));
            let f2 = s(2).sub(&AlgebraElement::one(n).mul_rational(&rat(1, 2)));
            let f4 = s(4).sub(&AlgebraElement::one(n).mul_rational(&rat(1, 2)));
            let norm9 = rat(9, 8); // 1/(1 - 1/9)
            let norm4 = rat(4, 3); // 1/(1 - 1/4)

            // node s3 tc: (s3-1/3) e (s3-1/3) / (1-1/9)
            let t1 = tc.apply_transposition(3).unwrap();
            let built = f3.mul(&e_tc).mul(&f3).mul_rational(&norm9);
            out.ensure(
                built == *su.diagonal_unit(&t1)?,
                "graph node s3.tc from (s3 - 1/3) factors",
            );

            // node s2 s3 tc: (s2-1/2)(s3-1/3) e (s3-1/3)(s2-1/2) / ((1-1/9)(1-1/4))
            let t2 = t1.apply_transposition(2).unwrap();
            let built = f2
                .mul(&f3)
                .mul(&e_tc)
                .mul(&f3)
                .mul(&f2)
                .mul_rational(&(&norm9 * &norm4));
            out.ensure(
                built == *su.diagonal_unit(&t2)?,
                "graph node s2.s3.tc from (s2 - 1/2)(s3 - 1/3) factors",
            );

            // node s4 s3 tc: (s4-1/2)(s3-1/3) e (s3-1/3)(s4-1/2) / ((1-1/9)(1-1/4))
            let t3 = t1.apply_transposition(4).unwrap();
            let built = f4
                .mul(&f3)
                .mul(&e_tc)
                .mul(&f3)
                .mul(&f4)
                .mul_rational(&(&norm9 * &norm4));
            out.ensure(
                built == *su.diagonal_unit(&t3)?,
                "graph node s4.s3.tc from (s4 - 1/2)(s3 - 1/3) factors",
            );

            // bottom node tr, displayed formula
            let tr = su.tr();
            let built = f2
                .mul(&f4)
                .mul(&f3)
                .mul(&e_tc)
                .mul(&f3)
                .mul(&f4)
                .mul(&f2)
                .mul_rational(&(&(&norm9 * &norm4) * &norm4));
            out.ensure(
                built == *su.diagonal_unit(&tr)?,
                "bottom node tr from the displayed factor word",
            );

            // both conjugation paths to tr agree exactly
            let via = |moves: [usize; 3]| -> Result<AlgebraElement> {
                let mut e = (*e_tc).clone();
                let mut w = tc.clone();
                for i in moves {
                    let left = zeta_step(&w, i, Side::Left)?;
                    let right = zeta_step(&w, i, Side::Right)?;
                    e = left.factor.mul(&e).mul(&right.factor);
                    w = left.image;
                }
                Ok(e)
            };
            let path_a = via([3, 2, 4])?;
            let path_b = via([3, 4, 2])?;
            out.ensure(
                path_a == path_b && path_a == *su.diagonal_unit(&tr)?,
                "both graph paths to the bottom node agree",
            );
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct PairDecompositionCheck;

impl Check for PairDecompositionCheck {
    fn name(&self) -> &'static str {
        "eq1"
    }

    fn summary(&self) -> &'static str {
        "diagonal symmetrizer as a sum of matrix-unit pairs, with sandwich constants"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("eq1", |out| {
            for n in ctx.sizes(4) {
                let report = verify_pair_decomposition(n)?;
                out.ensure(
                    report.decomposition_ok,
                    format!("symmetrizer decomposition at n={n}"),
                );
                out.ensure(
                    report.sandwich_ok,
                    format!("sandwich constants 1/f at n={n}"),
                );
                for (lam, c) in &report.constants {
                    out.note(format!("measured sandwich constant for {lam}: {c}"));
                }
                for failure in &report.failures {
                    out.note(failure.clone());
                }
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct QuasiCheck;

impl Check for QuasiCheck {
    fn name(&self) -> &'static str {
        "quasi"
    }

    fn summary(&self) -> &'static str {
        "Omega^2 = (n!/f) Y_tc Omega, with both construction routes"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("quasi", |out| {
            let cap = if ctx.slow { 6 } else { 5 };
            for lambda in ctx.shapes(cap) {
                let report = omega::verify_quasi_idempotent(&lambda)?;
                out.ensure(
                    report.routes_agree,
                    format!("construction routes agree for {lambda}"),
                );
                out.ensure(
                    report.ok,
                    format!(
                        "quasi-idempotency of {lambda}{}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct DecompositionCheck;

impl Check for DecompositionCheck {
    fn name(&self) -> &'static str {
        "decomp"
    }

    fn summary(&self) -> &'static str {
        "(f/n!) Omega = sum_t Y_t e_{t,tc} in both displayed assemblies"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("decomp", |out| {
            for lambda in ctx.shapes(5) {
                let report = omega::verify_decomposition(&lambda)?;
                out.ensure(
                    report.ok(),
                    format!(
                        "decomposition of {lambda}{}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
            }

            // the displayed (2,2) reconstruction with its factor pair
            let lambda = Partition::new(vec![2, 2])?;
            if ctx.includes(&lambda) {
                let n = 4;
                let su = ShapeUnits::new(lambda.clone());
                let tc = su.tc();
                let y = specht::specht_generator(&lambda);
                let e_tc = su.diagonal_unit(&tc)?;
                let s2 = AlgebraElement::from_perm(Permutation::simple(n, 2));
                let factor = s2.sub(&AlgebraElement::one(n).mul_rational(&rat(1, 2)));
                let norm = RadicalRational::sqrt_of_positive_rational(&rat(4, 3))?;
                // 12 ((s2^x - 1/2)/sqrt(3/4) (s2 - 1/2)/sqrt(3/4) + 1) Y e_{tc,tc}
                let twisted = factor
                    .mul_scalar(&norm)
                    .act_on_poly(&y);
                let inner = factor
                    .mul_scalar(&norm)
                    .mul(&e_tc)
                    .mul_poly(&twisted)
                    .add(&e_tc.mul_poly(&y));
                let rebuilt = inner.scale_int(12);
                out.ensure(
                    rebuilt == omega::omega(&lambda)?,
                    "displayed (2,2) reconstruction with the (s2 - 1/2) factor pair",
                );
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct SymmetryCheck;

impl Check for SymmetryCheck {
    fn name(&self) -> &'static str {
        "symmetry"
    }

    fn summary(&self) -> &'static str {
        "left diagonal invariance, right alternation, isotype absorption"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("symmetry", |out| {
            let cap = if ctx.slow { 6 } else { 5 };
            for lambda in ctx.shapes(cap) {
                // the absorption identity is desk-scale
                let with_absorption = lambda.weight() <= 5;
                let report = omega::verify_symmetries(&lambda, with_absorption)?;
                out.ensure(report.invariance, format!("diagonal invariance of {lambda}"));
                out.ensure(report.alternation, format!("right alternation of {lambda}"));
                if let (Some(nu), Some(ok)) = (&report.isotype, report.absorption) {
                    out.ensure(
                        ok,
                        format!("absorption by the measured isotype {nu} of {lambda}"),
                    );
                }
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct SpechtCheck;

impl Check for SpechtCheck {
    fn name(&self) -> &'static str {
        "specht"
    }

    fn summary(&self) -> &'static str {
        "Specht spans, Young basis membership, isotype measurement, specializations"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("specht", |out| {
            for lambda in ctx.shapes(5) {
                let n = lambda.weight();
                let f = count_tableaux(&lambda);
                out.ensure(
                    specht::specht_span_rank(&lambda) == f,
                    format!("Specht span of {lambda} has dimension {f}"),
                );

                let y = specht::specht_generator(&lambda);
                let mut polys: Vec<_> = Permutation::all(n)
                    .iter()
                    .map(|s| y.permute_vars(s))
                    .collect();
                let base = specht::radical_rank(specht::coefficient_rows(&polys));
                let mut young = Vec::new();
                for t in enumerate_tableaux(&lambda) {
                    let yt = specht::young_polynomial(&t)?;
                    polys.push(yt.clone());
                    young.push(yt);
                }
                let membership =
                    specht::radical_rank(specht::coefficient_rows(&polys)) == base;
                let independent =
                    specht::radical_rank(specht::coefficient_rows(&young)) == f;
                out.ensure(membership, format!("Young vectors lie in the span of {lambda}"));
                out.ensure(independent, format!("Young vectors of {lambda} independent"));

                let nu = specht::isotype_of(&lambda)?;
                out.ensure(
                    nu == lambda,
                    format!("measured isotype of {lambda} is {nu} (row shape {})", nu.conjugate()),
                );

                // block alternation of the coefficients
                let mut alternating = true;
                for i in lambda.young_subgroup_generators() {
                    let si = Permutation::simple(n, i);
                    for sigma in Permutation::all(n) {
                        let a = specht::delta_lambda(&lambda, &sigma.compose(&si))?;
                        let b = specht::delta_lambda(&lambda, &sigma)?;
                        alternating &= a == b.neg();
                    }
                }
                out.ensure(alternating, format!("block alternation of {lambda}"));
            }

            // the five displayed specializations of the (3,2) shape
            let lambda = Partition::new(vec![3, 2])?;
            if ctx.includes(&lambda) {
                let values = specht::staircase_values(&lambda.conjugate());
                let tr = last_tableau(&lambda);
                let mut ok = true;
                for t in enumerate_tableaux(&lambda) {
                    let v = specht::column_vandermonde(&t).eval(&values)?;
                    if t == tr {
                        ok &= v == RadicalRational::from_int(2);
                    } else {
                        ok &= v.is_zero();
                    }
                }
                out.ensure(ok, "staircase kills all (3,2) Specht polynomials except tr");
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct SpecializationCheck;

impl Check for SpecializationCheck {
    fn name(&self) -> &'static str {
        "g"
    }

    fn summary(&self) -> &'static str {
        "staircase specialization: proportionality to e_{tr,tc}, nilpotency, w g quasi-idempotent"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("g", |out| {
            for lambda in ctx.shapes(5) {
                let report = omega::specialized_g(&lambda)?;
                out.ensure(
                    report.ok(),
                    format!(
                        "specialization battery for {lambda}{}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
                out.note(format!(
                    "measured kappa for {lambda}: {} (quasi constant {})",
                    report.kappa, report.quasi_constant
                ));
                if lambda.parts() == [3, 2] {
                    out.ensure(report.g.support_size() == 48, "g of (3,2) has 48 terms");
                    let w = Permutation::of_word(5, &report.word);
                    out.ensure(
                        w == Permutation::of_word(5, &[3, 2, 4]),
                        "connecting word multiplies to s3 s2 s4",
                    );
                }
            }

            let lambda = Partition::new(vec![3, 2])?;
            if ctx.includes(&lambda) {
                let report = omega::verify_g32_word_formula()?;
                out.ensure(
                    report.ok,
                    format!(
                        "48-term word formula for (3,2){}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
                if let Some(scalar) = &report.scalar {
                    out.note(format!("word formula scalar: {scalar}"));
                }
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct CodePolynomialCheck;

impl Check for CodePolynomialCheck {
    fn name(&self) -> &'static str {
        "codepoly"
    }

    fn summary(&self) -> &'static str {
        "code polynomial transform and the displayed factorized products"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("codepoly", |out| {
            // support faithfulness on a few exactly known elements
            for n in ctx.sizes(4) {
                let e = trivial_idempotent(n);
                out.ensure(
                    omega::code_polynomial(&e)?.num_terms() == e.support_size(),
                    format!("code transform is support-faithful on the symmetrizer, n={n}"),
                );
            }
            if ctx.shape.is_none() && ctx.max_n >= 4 {
                let alt = young_subgroup_alternant(&Partition::new(vec![2, 2])?);
                out.ensure(
                    omega::code_polynomial(&alt)?.num_terms() == alt.support_size(),
                    "code transform is support-faithful on a signed subgroup sum",
                );
            }

            let lambda32 = Partition::new(vec![3, 2])?;
            if ctx.includes(&lambda32) {
                let report = omega::verify_factorized_example(&lambda32)?;
                out.ensure(
                    report.ok,
                    format!(
                        "48-term factorized product for (3,2){}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
            }

            let lambda421 = Partition::new(vec![4, 2, 1])?;
            if ctx.slow && ctx.includes(&lambda421) {
                let report = omega::verify_factorized_example(&lambda421)?;
                out.ensure(
                    report.ok,
                    format!(
                        "576-term factorized product for (4,2,1){}",
                        report
                            .failure
                            .as_ref()
                            .map(|f| format!(" ({f})"))
                            .unwrap_or_default()
                    ),
                );
            } else if ctx.shape.is_none() {
                out.note("n = 7 factorized product runs with --slow --max-n 7");
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

struct DiagonalGroupCheck;

impl Check for DiagonalGroupCheck {
    fn name(&self) -> &'static str {
        "diagonal"
    }

    fn summary(&self) -> &'static str {
        "diagonal symmetrizer copy-swallowing identities"
    }

    fn run(&self, ctx: &CheckContext) -> CheckReport {
        timed("diagonal", |out| {
            for n in ctx.sizes(4) {
                let e = diagonal_symmetrizer(n);
                out.ensure(e.mul(&e) == e, format!("diagonal symmetrizer idempotent, n={n}"));
                let mut ok = true;
                for sigma in Permutation::all(n) {
                    let first =
                        PairAlgebraElement::embed_first(&AlgebraElement::from_perm(sigma.clone()))?;
                    let second = PairAlgebraElement::embed_second(&AlgebraElement::from_perm(
                        sigma.inverse(),
                    ))?;
                    ok &= e.mul(&first) == e.mul(&second);
                    ok &= first.mul(&e) == second.mul(&e);
                }
                out.ensure(ok, format!("sigma^1 e = (sigma^2)^-1 e and mirror, n={n}"));
            }
            Ok(())
        })
    }
}

// ---------------------------------------------------------------------------

/// All registered checks, in battery order.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(TableauCheck),
        Box::new(UnitsCheck),
        Box::new(UnitGraphCheck),
        Box::new(DiagonalGroupCheck),
        Box::new(PairDecompositionCheck),
        Box::new(QuasiCheck),
        Box::new(DecompositionCheck),
        Box::new(SymmetryCheck),
        Box::new(SpechtCheck),
        Box::new(SpecializationCheck),
        Box::new(CodePolynomialCheck),
    ]
}

/// Looks up one check by its registered name.
pub fn find(name: &str) -> Option<Box<dyn Check>> {
    registry().into_iter().find(|c| c.name() == name)
}

pub fn run_battery(ctx: &CheckContext) -> Vec<CheckReport> {
    registry().iter().map(|c| c.run(ctx)).collect()
}
