//! Verification suites and the report they produce.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    build_biquaternion, build_table, check_properties_with, conjugate, norm, table_product, AlgebraTable,
    HurwitzClass, PropertyConfig,
};
use crate::ga::{Blade, Involution, Multivector, Signature, BASIS_ORDER};
use crate::isomorphism::{
    bullet_isomorphism, classification_row, cross_check, even_class, even_subalgebra_table, factorization_mismatch,
    find_isomorphism, involution_dictionary, pseudoscalar_class, pseudoscalar_table, transported_table,
    verify_witness,
};
use crate::octonify::{
    bullet_product, cayley_table_bullet, check_alternativity, check_composition, classify, nonassociativity_witness,
    norm_diagonal, norm_via_bullet, octonion_conjugate, octonion_norm, parity_norm_decomposition, BulletVariant,
};
use crate::sampling::SampleConfig;
use crate::scalar::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    /// Passes when `failure` is `None`.
    pub fn new(name: impl Into<String>, failure: Option<String>) -> Check {
        let status = if failure.is_none() { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, counterexample: failure }
    }

    pub fn expect(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Check {
        Check::new(name, (!ok).then(detail))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>, checks: Vec<Check>) -> Report {
        let pass = checks.iter().filter(|c| c.passed()).count();
        let summary = Summary { pass, fail: checks.len() - pass };
        Report { command: command.into(), checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match (&c.status, &c.counterexample) {
                (Status::Pass, _) => writeln!(out, "PASS  {}", c.name),
                (Status::Fail, Some(ce)) => writeln!(out, "FAIL  {}\n      counterexample: {ce}", c.name),
                (Status::Fail, None) => writeln!(out, "FAIL  {}", c.name),
            }
            .expect("write to string");
        }
        writeln!(out, "{} passed, {} failed", self.summary.pass, self.summary.fail).expect("write to string");
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    GaAxioms,
    Involutions,
    HurwitzProperties,
    Composition,
    NormLemma,
    Isomorphisms,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::GaAxioms,
        Suite::Involutions,
        Suite::HurwitzProperties,
        Suite::Composition,
        Suite::NormLemma,
        Suite::Isomorphisms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GaAxioms => "ga-axioms",
            Suite::Involutions => "involutions",
            Suite::HurwitzProperties => "hurwitz-properties",
            Suite::Composition => "composition",
            Suite::NormLemma => "norm-lemma",
            Suite::Isomorphisms => "isomorphisms",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SampleConfig) -> Vec<Check> {
    match suite {
        Suite::GaAxioms => ga_axioms(cfg),
        Suite::Involutions => involutions(),
        Suite::HurwitzProperties => hurwitz_properties(cfg),
        Suite::Composition => composition(cfg),
        Suite::NormLemma => norm_lemma(cfg),
        Suite::Isomorphisms => isomorphisms(),
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
    }
}

/// First random sample (in generation order) for which `check` reports a failure.
fn first_failure<T, F>(samples: &[T], check: F) -> Option<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    samples.par_iter().find_map_first(check)
}

fn blades(sig: Signature) -> Vec<Multivector> {
    BASIS_ORDER.iter().map(|&b| Multivector::blade(sig, b)).collect()
}

fn ga_axioms(cfg: &SampleConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for (n, sig) in Signature::canonical().into_iter().enumerate() {
        let cfg = cfg.derive(n as u64);
        let mut sampler = cfg.sampler();
        let triples = sampler.triples(sig, cfg.trials);
        let singles: Vec<Multivector> = triples.iter().map(|t| t[0].clone()).collect();

        checks.push(Check::new(
            format!("{sig} associativity"),
            first_failure(&triples, |[x, y, z]| {
                let l = x.gp(y).and_then(|p| p.gp(z)).expect("same signature");
                let r = y.gp(z).and_then(|p| x.gp(&p)).expect("same signature");
                (l != r).then(|| format!("x = {x}, y = {y}, z = {z}"))
            }),
        ));

        let vectors: Vec<(Multivector, Multivector)> = triples
            .iter()
            .map(|[x, y, _]| (x.grade_select(1).expect("grade 1"), y.grade_select(1).expect("grade 1")))
            .collect();
        checks.push(Check::new(
            format!("{sig} fundamental relation"),
            first_failure(&vectors, |(x, y)| {
                let sym = x.gp(y).and_then(|a| a.try_add(&y.gp(x)?)).expect("same signature");
                let metric: Rational = [Blade::E1, Blade::E2, Blade::E3]
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (x.coeff(b) * y.coeff(b)).signed(sig.lambda(i)))
                    .sum();
                let two = Rational::from_integer(2);
                let inner = x.inner(y).expect("same signature");
                (sym != Multivector::scalar(sig, &metric * &two) || inner.scale(&two) != sym)
                    .then(|| format!("x = {x}, y = {y}: xy + yx = {sym}"))
            }),
        ));

        checks.push(Check::new(
            format!("{sig} reversion anti-automorphism, inversion automorphism"),
            first_failure(&triples, |[x, y, _]| {
                let xy = x.gp(y).expect("same signature");
                let rev = y.reversion().gp(&x.reversion()).expect("same signature");
                let inv = x.inversion().gp(&y.inversion()).expect("same signature");
                (xy.reversion() != rev || xy.inversion() != inv).then(|| format!("x = {x}, y = {y}"))
            }),
        ));

        checks.push(Check::new(
            format!("{sig} involution composition"),
            first_failure(&singles, |x| {
                let cc = x.clifford_conjugation();
                let ok = cc == x.reversion().inversion()
                    && cc == x.inversion().reversion()
                    && Involution::ALL.iter().all(|i| i.apply(&i.apply(x)) == *x)
                    && x.full_grade_inversion() == x.grade_select(0).expect("grade 0").scale(&Rational::from_integer(2)).try_sub(x).expect("same signature");
                (!ok).then(|| format!("x = {x}"))
            }),
        ));

        checks.push(Check::new(
            format!("{sig} grade partition"),
            first_failure(&singles, |x| {
                let parts = (0..=3).map(|k| x.grade_select(k).expect("valid grade"));
                let sum = parts.fold(Multivector::zero(sig), |acc, p| &acc + &p);
                let split = x.parity_split();
                (sum != *x || split.recombine() != *x).then(|| format!("x = {x}"))
            }),
        ));

        let ps = Multivector::blade(sig, Blade::E123);
        checks.push(Check::new(
            format!("{sig} pseudoscalar centrality"),
            blades(sig).iter().find_map(|b| {
                (ps.gp(b).ok() != b.gp(&ps).ok()).then(|| format!("e123 does not commute with {b}"))
            }),
        ));

        checks.push(Check::new(format!("{sig} squared relations"), squared_relations(sig)));

        checks.push(Check::new(
            format!("{sig} x x† is scalar plus vector, (x x†)₊ = (x† x)₊"),
            first_failure(&singles, |x| {
                let a = x.gp(&x.reversion()).expect("same signature");
                let b = x.reversion().gp(x).expect("same signature");
                (!a.has_grades_only(&[0, 1]) || a.even_part() != b.even_part())
                    .then(|| format!("x = {x}: x x† = {a}"))
            }),
        ));
    }
    checks
}

fn squared_relations(sig: Signature) -> Option<String> {
    let l = |i: usize| sig.lambda(i);
    let mut expected = vec![
        (Blade::E1, l(0)),
        (Blade::E2, l(1)),
        (Blade::E3, l(2)),
        (Blade::E12, -l(0) * l(1)),
        (Blade::E23, -l(1) * l(2)),
        (Blade::E13, -l(0) * l(2)),
        (Blade::E123, -l(0) * l(1) * l(2)),
    ];
    expected.push((Blade::SCALAR, 1));
    expected.into_iter().find_map(|(b, s)| {
        let x = Multivector::blade(sig, b);
        let sq = x.gp(&x).expect("same signature");
        (sq != Multivector::scalar(sig, Rational::from_integer(s as i64))).then(|| format!("{b}² = {sq}, expected {s}"))
    })
}

fn involutions() -> Vec<Check> {
    let mut checks = Vec::new();
    for sig in Signature::canonical() {
        for c in involution_dictionary(sig) {
            checks.push(Check::expect(
                format!("{sig} {} ~ {} on {}", c.involution.name(), c.conjugation.name(), c.element),
                c.passed,
                || "transported involution differs from the conjugation".into(),
            ));
        }
    }
    checks
}

/// Commutative, associative, alternative, flexible.
pub fn expected_property_matrix(class: HurwitzClass) -> [bool; 4] {
    match class {
        HurwitzClass::R | HurwitzClass::C | HurwitzClass::Cs => [true, true, true, true],
        HurwitzClass::H | HurwitzClass::Hs => [false, true, true, true],
        HurwitzClass::O | HurwitzClass::Os => [false, false, true, true],
    }
}

fn property_config(cfg: &SampleConfig) -> PropertyConfig {
    PropertyConfig { identity_trials: cfg.trials.div_ceil(10), composition_trials: cfg.trials, seed: cfg.seed }
}

fn hurwitz_properties(cfg: &SampleConfig) -> Vec<Check> {
    let pcfg = property_config(cfg);
    let mut checks = Vec::new();
    for class in HurwitzClass::ALL {
        let table = build_table(class);
        let p = check_properties_with(&table, &pcfg);
        let got = [p.commutative, p.associative, p.alternative, p.flexible];
        checks.push(Check::expect(format!("{class} property matrix"), got == expected_property_matrix(class), || {
            format!("commutative, associative, alternative, flexible = {got:?}")
        }));
        checks.push(Check::expect(format!("{class} composition"), p.composition, || "n(xy) != n(x)n(y)".into()));
        let status = if class.is_division() {
            Check::expect(
                format!("{class} division: positive-definite norm, no zero divisor"),
                p.positive_definite && p.zero_divisor.is_none(),
                || "norm is indefinite or a zero divisor exists".into(),
            )
        } else {
            let verified = p.zero_divisor.as_ref().is_some_and(|zd| {
                let (x, y) = (table.element(zd.left.clone()), table.element(zd.right.clone()));
                matches!((x, y), (Ok(x), Ok(y)) if !x.is_zero() && !y.is_zero()
                    && table_product(&x, &y).is_ok_and(|z| z.is_zero()))
            });
            let detail = p
                .zero_divisor
                .as_ref()
                .map(|zd| {
                    let x = table.element(zd.left.clone()).expect("dim").render();
                    let y = table.element(zd.right.clone()).expect("dim").render();
                    format!(": ({x})({y}) = 0")
                })
                .unwrap_or_default();
            Check::expect(format!("{class} split: zero divisor verified{detail}"), verified, || "no zero divisor".into())
        };
        checks.push(status);
        checks.push(Check::new(format!("{class} conjugation anti-automorphism"), conjugation_failure(&table)));
        checks.push(Check::new(format!("{class} x conj(x) = n(x)"), norm_failure(&table, cfg)));
    }
    checks.push(Check::expect(
        "R totally ordered (annotation)",
        check_properties_with(&build_table(HurwitzClass::R), &pcfg).totally_ordered == Some(true),
        || "annotation missing".into(),
    ));
    for c in [HurwitzClass::C, HurwitzClass::Cs] {
        for h in [HurwitzClass::H, HurwitzClass::Hs] {
            let t = build_biquaternion(c, h).expect("valid factors");
            let p = check_properties_with(&t, &pcfg);
            checks.push(Check::expect(
                format!("{} is not a composition algebra under the diagonal form", t.name()),
                !p.composition,
                || "composition held on every sample".into(),
            ));
        }
    }
    checks
}

fn conjugation_failure(t: &AlgebraTable) -> Option<String> {
    (0..t.dim()).flat_map(|i| (0..t.dim()).map(move |j| (i, j))).find_map(|(i, j)| {
        let lhs = conjugate(&table_product(&t.basis(i), &t.basis(j)).ok()?);
        let rhs = table_product(&conjugate(&t.basis(j)), &conjugate(&t.basis(i))).ok()?;
        (lhs != rhs).then(|| format!("e_{i}, e_{j}"))
    })
}

fn norm_failure(t: &AlgebraTable, cfg: &SampleConfig) -> Option<String> {
    let mut s = cfg.derive(t.dim() as u64).sampler();
    let samples: Vec<Vec<Rational>> = (0..cfg.trials.div_ceil(10)).map(|_| s.coords(t.dim())).collect();
    first_failure(&samples, |c| {
        let x = t.element(c.clone()).expect("dim");
        match norm(&x) {
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        }
    })
}

fn composition(cfg: &SampleConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for (n, sig) in Signature::canonical().into_iter().enumerate() {
        for v in BulletVariant::ALL {
            let cfg = cfg.derive(2 * n as u64 + (v == BulletVariant::Minus) as u64);
            checks.push(Check::new(
                format!("{sig} {v} composition N(x{v}y) = N(x)N(y)"),
                check_composition(sig, v, &cfg).map(|c| c.to_string()),
            ));
            checks.push(Check::new(
                format!("{sig} {v} alternativity"),
                check_alternativity(sig, v, &cfg.derive(7)).map(|c| c.to_string()),
            ));
            checks.push(Check::new(
                format!("{sig} {v} non-associativity witness"),
                match nonassociativity_witness(sig, v) {
                    Ok(_) => None,
                    Err(e) => Some(e.to_string()),
                },
            ));
            let samples: Vec<Multivector> =
                cfg.derive(11).sampler().pairs(sig, cfg.trials.div_ceil(10)).into_iter().map(|p| p.0).collect();
            let one = Multivector::one(sig);
            checks.push(Check::new(
                format!("{sig} {v} unit and x{v}x* = N(x)"),
                first_failure(&samples, |x| {
                    let unit_ok = bullet_product(&one, x, v).ok() == Some(x.clone())
                        && bullet_product(x, &one, v).ok() == Some(x.clone());
                    let norm_ok = norm_via_bullet(x, v) == Some(octonion_norm(x, v));
                    (!unit_ok || !norm_ok).then(|| format!("x = {x}"))
                }),
            ));
        }
    }
    checks
}

fn norm_lemma(cfg: &SampleConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for (n, sig) in Signature::canonical().into_iter().enumerate() {
        let samples: Vec<Multivector> =
            cfg.derive(100 + n as u64).sampler().pairs(sig, cfg.trials).into_iter().map(|p| p.0).collect();
        checks.push(Check::new(
            format!("{sig} lemma ⟨x x†⟩₀ = N(x)"),
            first_failure(&samples, |x| {
                let lemma = x.gp(&x.reversion()).expect("same signature").scalar_part();
                let via_bullet = norm_via_bullet(x, BulletVariant::Plus);
                let diag = norm_diagonal(sig, BulletVariant::Plus).evaluate(x);
                (via_bullet.as_ref() != Some(&lemma) || diag != lemma).then(|| format!("x = {x}"))
            }),
        ));
        checks.push(Check::new(
            format!("{sig} corollary N(x) = N(x₊) + N(x₋)"),
            first_failure(&samples, |x| {
                let (a, b) = parity_norm_decomposition(x);
                (&a + &b != octonion_norm(x, BulletVariant::Plus)).then(|| format!("x = {x}"))
            }),
        ));
        checks.push(Check::new(
            format!("{sig} conjugation (x̃₊, -x₋) = 2⟨x⟩₀ - x"),
            first_failure(&samples, |x| {
                let two_scalar = Multivector::scalar(sig, &x.scalar_part() * &Rational::from_integer(2));
                (octonion_conjugate(x) != two_scalar.try_sub(x).expect("same signature")).then(|| format!("x = {x}"))
            }),
        ));
        checks.push(Check::new(
            format!("{sig} {} diagonal norm = x{}x*", BulletVariant::Minus, BulletVariant::Minus),
            first_failure(&samples, |x| {
                (norm_via_bullet(x, BulletVariant::Minus) != Some(octonion_norm(x, BulletVariant::Minus)))
                    .then(|| format!("x = {x}"))
            }),
        ));
        for v in BulletVariant::ALL {
            let d = norm_diagonal(sig, v);
            checks.push(Check::expect(
                format!("{sig} {v} norm diagonal {d} on blades"),
                BASIS_ORDER.iter().all(|&b| {
                    let x = Multivector::blade(sig, b);
                    octonion_norm(&x, v) == Rational::from_integer(d.signs[b.coeff_position()] as i64)
                }),
                || "blade norms disagree with the diagonal".into(),
            ));
        }
    }
    checks
}

/// `(Ps class, even class, • class, •₋ class)` for each signature in
/// [`crate::ga::CANONICAL_PQ`] order.
pub const REFERENCE_ROWS: [(HurwitzClass, HurwitzClass, HurwitzClass, HurwitzClass); 4] = [
    (HurwitzClass::C, HurwitzClass::H, HurwitzClass::O, HurwitzClass::Os),
    (HurwitzClass::Cs, HurwitzClass::Hs, HurwitzClass::Os, HurwitzClass::Os),
    (HurwitzClass::C, HurwitzClass::Hs, HurwitzClass::Os, HurwitzClass::Os),
    (HurwitzClass::Cs, HurwitzClass::H, HurwitzClass::Os, HurwitzClass::O),
];

fn isomorphisms() -> Vec<Check> {
    let mut checks = Vec::new();
    for (sig, expected) in Signature::canonical().into_iter().zip(REFERENCE_ROWS) {
        let row = classification_row(sig);
        let got = (row.pseudoscalar, row.even, row.plus, row.minus);
        checks.push(Check::expect(format!("{sig} classification {}", row.tensor_label()), got == expected, || {
            format!("got {got:?}, expected {expected:?}")
        }));
        checks.push(Check::new(
            format!("{sig} ≅ Ps ⊗ even (entry-wise)"),
            match factorization_mismatch(sig) {
                Ok(None) => None,
                Ok(Some((i, j))) => Some(format!("entry ({i}, {j}) differs")),
                Err(e) => Some(e.to_string()),
            },
        ));
        checks.push(Check::expect(
            format!("{sig} ι central in the transported table"),
            transported_table(sig).is_ok_and(|t| (0..8).all(|i| t.entry(1, i) == t.entry(i, 1))),
            || "ι does not commute with every basis element".into(),
        ));
        for (label, table, class) in [
            ("even subalgebra", even_subalgebra_table(sig), even_class(sig)),
            ("pseudoscalar subalgebra", Ok(pseudoscalar_table(sig)), pseudoscalar_class(sig)),
        ] {
            let result = table.and_then(|t| cross_check(&t, class));
            checks.push(Check::expect(
                format!("{sig} {label} ≅ {class}, not {}", class.partner()),
                result.as_ref().is_ok_and(|c| c.partner_rejected && c.witness.as_ref().is_some_and(verify_witness)),
                || format!("{result:?}"),
            ));
        }
        for v in BulletVariant::ALL {
            let class = classify(sig, v);
            checks.push(match bullet_isomorphism(sig, v) {
                Ok(w) => Check::expect(
                    format!("{sig} {v} ≅ {class} via {}", w.describe().join(", ")),
                    verify_witness(&w),
                    || "witness fails re-verification".into(),
                ),
                Err(e) => Check::new(format!("{sig} {v} ≅ {class}"), Some(e.to_string())),
            });
            let other = class.partner();
            let absent = cayley_table_bullet(sig, v)
                .and_then(|t| find_isomorphism(&t, &build_table(other)))
                .map(|w| w.is_none());
            checks.push(Check::expect(format!("{sig} {v} not ≅ {other}"), absent == Ok(true), || {
                format!("{absent:?}")
            }));
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_counts_and_json() {
        let r = Report::new("verify x", vec![Check::new("a", None), Check::new("b", Some("boom".into()))]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 1 });
        assert!(!r.all_passed());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0], serde_json::json!({"name": "a", "status": "pass"}));
        assert_eq!(v["checks"][1]["counterexample"], "boom");
        assert_eq!(v["summary"], serde_json::json!({"pass": 1, "fail": 1}));
        assert!(r.to_text().contains("FAIL  b"));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SampleConfig::new(30, 5);
        for suite in Suite::EACH {
            let checks = run_suite(suite, &cfg);
            assert!(!checks.is_empty());
            let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
            assert!(failed.is_empty(), "{}: {failed:?}", suite.name());
        }
        assert_eq!(run_suite(Suite::Involutions, &cfg).len(), 96);
    }

    #[test]
    fn reference_rows_match_signature_order() {
        for (n, (p, q)) in crate::ga::CANONICAL_PQ.iter().enumerate() {
            assert_eq!(Signature::canonical()[n], Signature::from_pq(*p, *q).unwrap());
        }
    }
}
