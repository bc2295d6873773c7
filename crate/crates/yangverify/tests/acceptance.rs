mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use yangverify::{
    normalize, parse_expression, pretty, run_suite, ParseError, ReportDocument, RunConfig, Suite,
};
use yangverify_core::drinfeld_tower::drinfeld_checks;
use yangverify_core::free_superalgebra::{GeneratorSymbol as G, SuperPolynomial, Word};
use yangverify_core::hopf_structure::{levendorskii_generators, rho};
use yangverify_core::lie_core::{
    antisymmetry_failures, is_pbw_monomial, jacobi_failures, lie_normal_form, Letter, LetterPoly,
    LieBasisElement,
};
use yangverify_core::reduction_engine::{Status, TruncationParams};

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        note: note.into(),
    }
}

fn seeded_runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn within(elapsed: Duration, budget: Duration) -> bool {
    elapsed <= budget
}

fn suite(s: Suite, level: Option<u32>) -> ReportDocument {
    let mut c = RunConfig::new(s);
    c.level_bound = level;
    c.jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    run_suite(&c).expect("valid configuration")
}

fn entries<'a>(
    doc: &'a ReportDocument,
    prefix: &'a str,
) -> impl Iterator<Item = &'a yangverify::report::Entry> + 'a {
    doc.checks.iter().filter(move |e| e.id.starts_with(prefix))
}

fn all_zero(doc: &ReportDocument, prefix: &str) -> (bool, usize) {
    let n = entries(doc, prefix).count();
    (n > 0 && entries(doc, prefix).all(|e| e.status == "zero"), n)
}

fn lie_closure() -> Outcome {
    let t = Instant::now();
    let doc = suite(Suite::Lie, None);
    let el = t.elapsed();
    let n = doc.checks.len();
    let ok = doc.summary.zero == n && (40..=90).contains(&n) && within(el, Duration::from_secs(1));
    outcome(
        ok,
        format!(
            "{n} checks, {} zero, {:.2} s",
            doc.summary.zero,
            el.as_secs_f64()
        ),
    )
}

fn structure_table() -> Outcome {
    let t = Instant::now();
    let anti = antisymmetry_failures();
    let jac = jacobi_failures();
    let el = t.elapsed();
    let ok = anti.is_empty() && jac.is_empty() && within(el, Duration::from_secs(5));
    outcome(
        ok,
        format!(
            "17^2 pairs: {} failures, 17^3 triples: {} failures, {:.2} s",
            anti.len(),
            jac.len(),
            el.as_secs_f64()
        ),
    )
}

fn hopf_homomorphism(doc: &ReportDocument, el: Duration) -> Outcome {
    let (ok, n) = all_zero(doc, "hopf/delta/");
    let quadratic = entries(doc, "hopf/delta/levendorskii/ht-ht").count();
    let cubic = entries(doc, "hopf/delta/levendorskii/cubic").count();
    let ok = ok && quadratic >= 3 && cubic == 3 && within(el, Duration::from_secs(300));
    outcome(
        ok,
        format!(
            "{n} relation images zero ({quadratic} [D(ht),D(ht)], {cubic} cubic), suite {:.2} s",
            el.as_secs_f64()
        ),
    )
}

fn antipode_axiom(doc: &ReportDocument, el: Duration) -> Outcome {
    let (l, nl) = all_zero(doc, "hopf/antipode-left/");
    let (r, nr) = all_zero(doc, "hopf/antipode-right/");
    let ok = l && r && nl == 22 && nr == 22 && within(el, Duration::from_secs(300));
    outcome(ok, format!("{nl} left and {nr} right convolutions zero"))
}

fn automorphism(doc: &ReportDocument) -> Outcome {
    let gens = levendorskii_generators();
    let on_generators = gens.iter().all(|&s| {
        let x = SuperPolynomial::from_symbol(s);
        rho(&rho(&x)) == x
    });
    let mut runner = seeded_runner(256);
    let words = prop::collection::vec(prop::sample::select(gens.clone()), 1..=6);
    let mut random_ok = 0;
    for _ in 0..100 {
        let w: Vec<G> = words.new_tree(&mut runner).expect("strategy").current();
        let x = SuperPolynomial::from_word(Word::from_symbols(w), 1.into());
        if rho(&rho(&x)) == x {
            random_ok += 1;
        }
    }
    let (rel, nrel) = all_zero(doc, "hopf/rho-relation/");
    let (delta, ndelta) = all_zero(doc, "hopf/rho-delta/");
    let cov = suite(Suite::Rho, Some(3));
    let cov_ok = cov.summary.zero == cov.checks.len();
    let ok = on_generators && random_ok == 100 && rel && delta && ndelta == 22 && cov_ok;
    outcome(
        ok,
        format!(
            "rho^2 = id on {} generators and {random_ok}/100 words; {nrel} relation images, {ndelta} coproduct checks, {} Drinfeld covariance instances",
            gens.len(),
            cov.checks.len()
        ),
    )
}

fn drinfeld_tower() -> Outcome {
    let t = Instant::now();
    let doc = suite(Suite::Drinfeld, Some(3));
    let el = t.elapsed();
    let families = [
        "drinfeld/h-shift-unified",
        "drinfeld/deg2/",
        "drinfeld/raising/B",
        "drinfeld/raising/ht2",
        "drinfeld/x1-x3",
        "drinfeld/z-shift",
        "drinfeld/centrality",
    ];
    let present = families.iter().all(|f| entries(&doc, f).count() > 0);
    let x1x3 = entries(&doc, "drinfeld/x1-x3").count();
    let ok = doc.summary.zero == doc.checks.len()
        && present
        && x1x3 == 20
        && within(el, Duration::from_secs(1800));
    outcome(
        ok,
        format!(
            "{} checks at D = 3, {} zero, {} inconclusive, {:.2} s",
            doc.checks.len(),
            doc.summary.zero,
            doc.summary.inconclusive,
            el.as_secs_f64()
        ),
    )
}

fn psi_embedding() -> Outcome {
    let doc = suite(Suite::Psi, None);
    let (rel, nrel) = all_zero(&doc, "psi/levendorskii/");
    let (phi_psi, n1) = all_zero(&doc, "psi/phi-after-psi/");
    let (psi_phi, n2) = all_zero(&doc, "psi/psi-after-phi/");
    let ok = rel && phi_psi && psi_phi && n1 == 22 && doc.summary.zero == doc.checks.len();
    outcome(
        ok,
        format!("{nrel} relation images, {n1} phi.psi and {n2} psi.phi round trips zero"),
    )
}

fn hatted_generators() -> Outcome {
    let t = Instant::now();
    let doc = suite(Suite::First, None);
    let el = t.elapsed();
    let relations = doc
        .checks
        .iter()
        .filter(|e| !e.id.starts_with("first/antipode/"))
        .count();
    let negations = entries(&doc, "first/antipode/")
        .filter(|e| e.id.contains("hat"))
        .count();
    let ok = doc.summary.zero == doc.checks.len()
        && negations == 11
        && within(el, Duration::from_secs(60));
    outcome(
        ok,
        format!(
            "{relations} relation instances and {negations} antipode negations zero, {:.2} s",
            el.as_secs_f64()
        ),
    )
}

fn probe_set() -> Vec<yangverify_core::reduction_engine::Check> {
    let all = drinfeld_checks(3);
    let stride = all.len() / 20;
    all.into_iter().step_by(stride).take(20).collect()
}

fn engine_properties() -> Outcome {
    let mut c = RunConfig::new(Suite::Drinfeld);
    c.level_bound = Some(2);
    let a = run_suite(&c).expect("config");
    let b = run_suite(&c).expect("config");
    let deterministic = a.body() == b.body() && a.checksum == b.checksum;

    let small = TruncationParams {
        max_word_length: 4,
        max_filtration_degree: 4,
        max_rounds: 25,
    };
    let large = TruncationParams {
        max_word_length: 10,
        max_filtration_degree: 5,
        max_rounds: 50_000,
    };
    let probes = probe_set();
    let mut small_zero = 0;
    let mut monotone = large.dominates(&small) && probes.len() == 20;
    for p in &probes {
        let s = p.run(&small).map(|r| r.status);
        let l = p.run(&large).map(|r| r.status);
        if s == Ok(Status::Zero) {
            small_zero += 1;
            monotone &= l == Ok(Status::Zero);
        }
    }

    let mut runner = seeded_runner(256);
    let letters = prop::collection::vec(
        (0..LieBasisElement::COUNT).prop_map(|k| Letter::new(LieBasisElement::from_index(k), 0)),
        0..=6,
    );
    let mut pbw_ok = 0;
    for _ in 0..200 {
        let w = letters.new_tree(&mut runner).expect("strategy").current();
        let p = LetterPoly::monomial(w);
        let nf = lie_normal_form(&p);
        if nf.terms().all(|(w, _)| is_pbw_monomial(w)) && lie_normal_form(&nf) == nf {
            pbw_ok += 1;
        }
    }
    let ok = deterministic && monotone && pbw_ok == 200;
    outcome(
        ok,
        format!(
            "identical reports: {deterministic}; {} probes, {small_zero} zero at small truncation and kept at large; {pbw_ok}/200 words ordered and idempotent",
            probes.len()
        ),
    )
}

fn parser() -> Outcome {
    let mut runner = seeded_runner(200);
    let round_trip = runner
        .run(&common::expr_strategy(), |e| {
            let printed = pretty(&e);
            let parsed =
                parse_expression(&printed).map_err(|err| TestCaseError::fail(err.to_string()))?;
            prop_assert_eq!(&parsed, &normalize(&e));
            prop_assert_eq!(pretty(&parsed), printed);
            Ok(())
        })
        .is_ok();
    let errors = [
        parse_expression("[x+[1, -1], h[1,0]]"),
        parse_expression("[x+[1,0], x-[1,0]"),
        parse_expression("[y[1,0], h[1,0]]"),
    ];
    let positions: Vec<Option<usize>> = errors
        .iter()
        .map(|r| r.as_ref().err().map(ParseError::position))
        .collect();
    let ok = round_trip && positions == [Some(7), Some(17), Some(1)];
    outcome(
        ok,
        format!("200 round trips: {round_trip}; error positions {positions:?}"),
    )
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let t = Instant::now();
    let hopf = suite(Suite::Hopf, None);
    let hopf_time = t.elapsed();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("Lie closure", Box::new(lie_closure)),
        ("structure-table soundness", Box::new(structure_table)),
        (
            "Hopf homomorphism",
            Box::new(|| hopf_homomorphism(&hopf, hopf_time)),
        ),
        (
            "antipode axiom",
            Box::new(|| antipode_axiom(&hopf, hopf_time)),
        ),
        ("automorphism suite", Box::new(|| automorphism(&hopf))),
        ("Drinfeld tower at D = 3", Box::new(drinfeld_tower)),
        ("psi-embedding", Box::new(psi_embedding)),
        ("hatted generators", Box::new(hatted_generators)),
        ("engine properties", Box::new(engine_properties)),
        ("parser", Box::new(parser)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {name}: {} ({})",
            k + 1,
            if o.ok { "PASS" } else { "FAIL" },
            o.note
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
