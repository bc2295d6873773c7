use std::collections::BTreeSet;

use yangverify_core::drinfeld_tower::{
    build, build_generator, drinfeld_checks, expand, family_residual, generator_expr, psi_checks,
    psi_expr, raising_operator, rho_covariance, verify_drinfeld_suite, FamilyIndex, RaisingKind,
    DEFAULT_LEVEL_BOUND,
};
use yangverify_core::free_superalgebra::{
    Degree, Expr, Family, GeneratorSymbol as G, Scalar, SuperPolynomial,
};
use yangverify_core::reduction_engine::{
    check_identity_expr, reduce, reduce_expr, run_checks, CheckResult, Status, Task,
    TruncationParams,
};
use yangverify_core::yangian_presentation::{enumerate_relations, PresentationKind};

const YL: PresentationKind = PresentationKind::Levendorskii;
const YD: PresentationKind = PresentationKind::Drinfeld;

fn params() -> TruncationParams {
    TruncationParams::default()
}

fn sym(s: G) -> Expr {
    Expr::sym(s)
}

fn poly(e: &Expr) -> SuperPolynomial {
    e.to_poly().unwrap()
}

fn status_in(kind: PresentationKind, e: &Expr) -> Status {
    reduce_expr(e, kind, &params()).unwrap().status
}

fn failures(results: &[CheckResult]) -> Vec<String> {
    results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {:?}", r.id, r.status()))
        .collect()
}

#[test]
fn level_two_x_is_half_bracket_with_tilde_h() {
    let d = build_generator(G::x_plus(1, 2)).unwrap();
    let expect = Expr::scale(
        Scalar::new(1, 2),
        Expr::bracket(sym(G::tilde_cartan(1, 1)), sym(G::x_plus(1, 1))),
    );
    assert_eq!(d.expr, expect);
    assert_eq!(d.definition, poly(&expect));
}

#[test]
fn inductive_signs_for_every_node() {
    let ht = |i| sym(G::tilde_cartan(i, 1));
    let cases = [
        (G::x_minus(1, 2), Scalar::new(-1, 2), 1, G::x_minus(1, 1)),
        (G::x_plus(2, 2), Scalar::from_int(-1), 1, G::x_plus(2, 1)),
        (G::x_minus(2, 2), Scalar::from_int(1), 1, G::x_minus(2, 1)),
        (G::x_plus(3, 2), Scalar::new(-1, 2), 3, G::x_plus(3, 1)),
        (G::x_minus(3, 2), Scalar::new(1, 2), 3, G::x_minus(3, 1)),
    ];
    for (s, c, i, prev) in cases {
        let expect = Expr::scale(c, Expr::bracket(ht(i), sym(prev)));
        assert_eq!(build_generator(s).unwrap().expr, expect, "{s}");
    }
}

#[test]
fn cartan_and_central_definitions() {
    let h23 = build_generator(G::cartan(2, 3)).unwrap();
    let expect = Expr::bracket(
        generator_expr(G::x_plus(2, 3)).unwrap(),
        sym(G::x_minus(2, 0)),
    );
    assert_eq!(h23.expr, expect);
    let p2 = build_generator(G::p_plus(2)).unwrap();
    let x = |i, r| generator_expr(G::x_plus(i, r)).unwrap();
    let expect = Expr::bracket(
        Expr::bracket(x(1, 2), x(2, 0)),
        Expr::bracket(x(3, 0), x(2, 0)),
    );
    assert_eq!(p2.expr, expect);
    assert!(build(Family::CentralPMinus, 0, 3).is_ok());
}

#[test]
fn definitions_have_level_degree_and_symbol_parity() {
    for r in 0..=4 {
        for i in 1..=3 {
            for s in [G::x_plus(i, r), G::x_minus(i, r), G::cartan(i, r)] {
                let d = build_generator(s).unwrap();
                assert_eq!(d.definition.degree(), Degree::Finite(r), "{s}");
                assert_eq!(d.definition.parity().unwrap(), Some(s.parity()), "{s}");
                assert!(d.definition.symbols().iter().all(|t| t.level() <= 1), "{s}");
            }
        }
        for s in [G::p_plus(r), G::p_minus(r)] {
            assert_eq!(
                build_generator(s).unwrap().definition.degree(),
                Degree::Finite(r),
                "{s}"
            );
        }
        for sg in [1, -1] {
            assert_eq!(build_generator(G::x(sg, 2, r)).unwrap().parity(), 1);
        }
    }
}

#[test]
fn raising_operator_b12() {
    let b = raising_operator(RaisingKind::Bij, 1, Some(2)).unwrap();
    let h10 = || sym(G::cartan(1, 0));
    let expect = Expr::sum([
        generator_expr(G::cartan(1, 2)).unwrap(),
        Expr::neg(Expr::product([h10(), sym(G::tilde_cartan(1, 1))])),
        Expr::scale(Scalar::new(-1, 6), Expr::product([h10(), h10(), h10()])),
        Expr::scale(Scalar::new(-1, 12), h10()),
    ]);
    assert_eq!(b.expression, poly(&expect));
    let t = raising_operator(RaisingKind::TildeH2, 1, None).unwrap();
    assert_eq!(
        b.expression.sub(&t.expression),
        poly(&Expr::scale(Scalar::new(-1, 12), h10()))
    );
}

#[test]
fn raising_operators_raise_by_two() {
    let b12 = raising_operator(RaisingKind::Bij, 1, Some(2)).unwrap().expr;
    let ht12 = raising_operator(RaisingKind::TildeH2, 1, None)
        .unwrap()
        .expr;
    for r in 0..=1 {
        let lhs = expand(&Expr::bracket(b12.clone(), sym(G::x_plus(2, r)))).unwrap();
        let rhs = expand(&Expr::neg(sym(G::x_plus(2, r + 2)))).unwrap();
        assert_eq!(
            check_identity_expr(&lhs, &rhs, YL, &params())
                .unwrap()
                .status,
            Status::Zero,
            "r={r}"
        );
        let lhs = expand(&Expr::bracket(ht12.clone(), sym(G::x_plus(1, r)))).unwrap();
        let rhs = expand(&Expr::sum([
            Expr::scale_int(2, sym(G::x_plus(1, r + 2))),
            Expr::scale(Scalar::new(2, 3), sym(G::x_plus(1, r))),
        ]))
        .unwrap();
        assert_eq!(
            check_identity_expr(&lhs, &rhs, YL, &params())
                .unwrap()
                .status,
            Status::Zero,
            "r={r}"
        );
    }
}

#[test]
fn raising_operator_wrong_constant_is_detected() {
    let ht12 = raising_operator(RaisingKind::TildeH2, 1, None)
        .unwrap()
        .expr;
    let lhs = expand(&Expr::bracket(ht12, sym(G::x_plus(1, 0)))).unwrap();
    let rhs = expand(&Expr::scale_int(2, sym(G::x_plus(1, 2)))).unwrap();
    assert_eq!(
        check_identity_expr(&lhs, &rhs, YL, &params())
            .unwrap()
            .status,
        Status::NonzeroNormalForm
    );
}

#[test]
fn family_examples() {
    let r = family_residual(FamilyIndex::R {
        sign: 1,
        i: 1,
        j: 2,
        r: 0,
        s: 0,
    })
    .unwrap();
    let rel = enumerate_relations(YL, 1)
        .into_iter()
        .find(|rel| rel.id == "levendorskii/x-shift[+,i=1,j=2]")
        .unwrap();
    assert_eq!(r.residual, rel.residual);
    assert_eq!(
        reduce(&r.residual, YL, &params()).unwrap().status,
        Status::Zero
    );

    let q = family_residual(FamilyIndex::Q {
        sign: 1,
        r: 1,
        s: 1,
    })
    .unwrap();
    assert_eq!(
        reduce(&q.residual, YL, &params()).unwrap().status,
        Status::Zero
    );

    let z = family_residual(FamilyIndex::Z {
        sign: 1,
        k: 1,
        l: 0,
        m: 0,
        n: 0,
    })
    .unwrap();
    let diff = z.residual.sub(&SuperPolynomial::from_symbol(G::p_plus(1)));
    assert_eq!(reduce(&diff, YL, &params()).unwrap().status, Status::Zero);
}

#[test]
fn families_at_level_two_and_three() {
    let idx = [
        FamilyIndex::S {
            sign: -1,
            i: 2,
            j: 1,
            r: 1,
            s: 0,
        },
        FamilyIndex::X {
            sign: 1,
            j: 3,
            r: 1,
            s: 0,
            t: 1,
        },
        FamilyIndex::Q {
            sign: -1,
            r: 2,
            s: 1,
        },
        FamilyIndex::Z {
            sign: -1,
            k: 1,
            l: 0,
            m: 2,
            n: 0,
        },
    ];
    for i in idx {
        let e = expand(&yangverify_core::drinfeld_tower::family_expr(i).unwrap()).unwrap();
        let z = if let FamilyIndex::Z { sign, k, l, m, n } = i {
            Expr::sub(e, expand(&sym(G::p(sign, k + l + m + n))).unwrap())
        } else {
            e
        };
        assert_eq!(status_in(YL, &z), Status::Zero, "{i}");
    }
}

#[test]
fn level_zero_suite_is_the_lie_suite() {
    let checks = drinfeld_checks(0);
    let lie = enumerate_relations(PresentationKind::Lie, 0);
    let key = |p: &SuperPolynomial| match p.sorted_terms().first() {
        Some((_, c)) => p.scale(&c.recip()).to_string(),
        None => "0".to_string(),
    };
    let drinfeld: BTreeSet<String> = checks
        .iter()
        .map(|c| match &c.task {
            Task::Expr(e) => key(&poly(e)),
            _ => unreachable!(),
        })
        .collect();
    let lie_keys: BTreeSet<String> = lie.iter().map(|r| key(&r.residual)).collect();
    assert_eq!(checks.len(), lie.len());
    assert_eq!(drinfeld, lie_keys);
    let results = verify_drinfeld_suite(0, &params());
    assert!(failures(&results).is_empty(), "{:?}", failures(&results));
}

#[test]
fn commuting_cartans_at_level_two() {
    let e = expand(&Expr::bracket(sym(G::cartan(1, 1)), sym(G::cartan(2, 1)))).unwrap();
    assert_eq!(status_in(YL, &e), Status::Zero);
    assert!(drinfeld_checks(2)
        .iter()
        .any(|c| c.id == "drinfeld/hh[i=1,j=2,r=1,s=1]"));
}

#[test]
fn x1_commutes_with_x3_at_level_three() {
    let e = expand(&Expr::bracket(sym(G::x_plus(1, 2)), sym(G::x_plus(3, 1)))).unwrap();
    assert_eq!(status_in(YL, &e), Status::Zero);
}

#[test]
fn corrupted_definition_is_detected() {
    let x12 = Expr::scale(
        Scalar::new(1, 3),
        Expr::bracket(sym(G::tilde_cartan(1, 1)), sym(G::x_plus(1, 1))),
    );
    let e = Expr::sub(
        Expr::bracket(x12, sym(G::x_minus(1, 0))),
        expand(&sym(G::cartan(1, 2))).unwrap(),
    );
    assert_eq!(status_in(YL, &e), Status::NonzeroNormalForm);
}

#[test]
fn psi_examples() {
    let rel = enumerate_relations(YL, 1)
        .into_iter()
        .find(|rel| rel.id == "levendorskii/ht-x[+,i=1,j=2]")
        .unwrap();
    assert_eq!(status_in(YD, &psi_expr(&rel.expr)), Status::Zero);
    let e = psi_expr(&Expr::bracket(
        sym(G::tilde_cartan(1, 1)),
        sym(G::cartan(2, 2)),
    ));
    assert_eq!(status_in(YD, &e), Status::Zero);
    let e = psi_expr(&Expr::bracket(
        sym(G::tilde_cartan(3, 1)),
        sym(G::cartan(3, 2)),
    ));
    assert_eq!(status_in(YD, &e), Status::Zero);
    let results = run_checks(&psi_checks(), &params());
    assert!(failures(&results).is_empty(), "{:?}", failures(&results));
    assert!(
        results
            .iter()
            .filter(|r| r.id.starts_with("psi/phi-after-psi/"))
            .count()
            == 22
    );
}

#[test]
fn rho_maps_instances_to_instances() {
    let results = rho_covariance(DEFAULT_LEVEL_BOUND);
    assert!(failures(&results).is_empty(), "{:?}", failures(&results));
    assert_eq!(
        results.len(),
        enumerate_relations(YD, DEFAULT_LEVEL_BOUND).len()
    );
}

#[test]
fn full_suite_at_default_bound() {
    let checks = drinfeld_checks(DEFAULT_LEVEL_BOUND);
    for id in [
        "drinfeld/x1-x3[+,r=2,s=1]",
        "drinfeld/z-shift[-,K=3,l=2]",
        "drinfeld/centrality[+,K=3,with=x+[1,1]]",
        "drinfeld/deg2/h2-ht[i=2,j=1]",
        "drinfeld/raising/B[+,i=1,j=2,r=1]",
    ] {
        assert!(checks.iter().any(|c| c.id == id), "{id}");
    }
    let results = run_checks(&checks, &params());
    assert!(failures(&results).is_empty(), "{:?}", failures(&results));
}
