use yangverify_core::free_superalgebra::{Expr, GeneratorSymbol as G, Scalar, SuperPolynomial};
use yangverify_core::lie_core::{LetterPoly, LieBasisElement};
use yangverify_core::reduction_engine::letters::h;
use yangverify_core::reduction_engine::{
    check_identity, check_identity_expr, ideal_membership_fallback, letter_expr, reduce,
    reduce_expr, rewrite_rules, EngineError, NormalForm, Status, TruncationParams,
};
use yangverify_core::yangian_presentation::{enumerate_relations, h_from_tilde, PresentationKind};

use PresentationKind::{Drinfeld, Levendorskii, Lie};

fn sym(s: G) -> SuperPolynomial {
    SuperPolynomial::from_symbol(s)
}

fn br(a: &SuperPolynomial, b: &SuperPolynomial) -> SuperPolynomial {
    a.super_bracket(b).unwrap()
}

fn defaults() -> TruncationParams {
    TruncationParams::default()
}

#[test]
fn tilde_cartan_acts_on_simple_root_vector() {
    let p = br(&sym(G::tilde_cartan(1, 1)), &sym(G::x_plus(1, 0)))
        .sub(&sym(G::x_plus(1, 1)).scale(&Scalar::from_int(2)));
    let r = reduce(&p, Levendorskii, &defaults()).unwrap();
    assert_eq!(r.status, Status::Zero);
    assert!(r.normal_form.is_zero());
    assert!(r.truncation_used.is_some());
}

fn shifted_cartan_identity() -> SuperPolynomial {
    let (h0, h1) = (sym(G::cartan(1, 0)), sym(G::cartan(1, 1)));
    let (x0, x1) = (sym(G::x_plus(1, 0)), sym(G::x_plus(1, 1)));
    br(&h1, &x0)
        .sub(&br(&h0, &x1))
        .sub(&h0.anti_bracket(&x0).unwrap())
}

#[test]
fn shifted_cartan_relation_holds_in_both_presentations() {
    for kind in [Levendorskii, Drinfeld] {
        let r = reduce(&shifted_cartan_identity(), kind, &defaults()).unwrap();
        assert_eq!(r.status, Status::Zero, "{kind}: {}", r.normal_form);
    }
}

#[test]
fn false_identity_leaves_minus_h() {
    let p = br(&sym(G::x_plus(1, 0)), &sym(G::x_minus(2, 0))).sub(&sym(G::cartan(1, 0)));
    for kind in [Lie, Levendorskii, Drinfeld] {
        let r = reduce(&p, kind, &defaults()).unwrap();
        assert_eq!(r.status, Status::NonzeroNormalForm);
        let expect = LetterPoly::from_symbol(h(1, 0)).neg();
        assert_eq!(r.normal_form, NormalForm::Letters(expect));
    }
}

#[test]
fn homogeneous_false_identity_is_nonzero() {
    let p = br(&sym(G::x_plus(1, 0)), &sym(G::x_minus(3, 0))).sub(&sym(G::cartan(1, 0)));
    let r = reduce(&p, Levendorskii, &defaults()).unwrap();
    assert_eq!(r.status, Status::NonzeroNormalForm);
    assert_eq!(
        r.normal_form,
        NormalForm::Letters(LetterPoly::from_symbol(h(1, 0)).neg())
    );
}

#[test]
fn illegal_symbols_are_rejected() {
    let p = sym(G::tilde_cartan(1, 1));
    assert!(matches!(
        reduce(&p, Drinfeld, &defaults()),
        Err(EngineError::IllegalSymbol(..))
    ));
    assert!(matches!(
        reduce(&sym(G::x_plus(1, 1)), Lie, &defaults()),
        Err(EngineError::IllegalSymbol(..))
    ));
}

#[test]
fn check_identity_examples() {
    let lhs = br(&sym(G::x_plus(1, 1)), &sym(G::x_minus(1, 0)));
    let r = check_identity(&lhs, &h_from_tilde(1).unwrap(), Levendorskii, &defaults()).unwrap();
    assert_eq!(r.status, Status::Zero);

    let p = br(&sym(G::x_plus(2, 1)), &sym(G::x_minus(3, 0))).multiply(&sym(G::cartan(2, 0)));
    for kind in [Levendorskii, Drinfeld] {
        assert_eq!(
            check_identity(&p, &p, kind, &defaults()).unwrap().status,
            Status::Zero
        );
    }

    let odd = br(&sym(G::x_plus(2, 0)), &sym(G::x_plus(2, 0)));
    assert_eq!(
        check_identity(&odd, &SuperPolynomial::zero(), Lie, &defaults())
            .unwrap()
            .status,
        Status::Zero
    );

    let err = check_identity(
        &sym(G::x_plus(2, 0)),
        &sym(G::x_plus(1, 0)),
        Lie,
        &defaults(),
    );
    assert_eq!(err, Err(EngineError::ParityMismatch));
    let err = check_identity_expr(
        &Expr::sym(G::x_plus(2, 0)),
        &Expr::sym(G::cartan(1, 0)),
        Lie,
        &defaults(),
    );
    assert_eq!(err, Err(EngineError::ParityMismatch));
}

#[test]
fn every_lie_relation_reduces_to_zero() {
    for rel in enumerate_relations(Lie, 0) {
        let r = reduce(&rel.residual, Lie, &defaults()).unwrap();
        assert_eq!(r.status, Status::Zero, "{}", rel.id);
        assert!(r.truncation_used.is_none());
    }
}

#[test]
fn every_yangian_relation_reduces_to_zero() {
    for kind in [Levendorskii, Drinfeld] {
        for rel in enumerate_relations(kind, 3) {
            let r = reduce_expr(&rel.expr, kind, &defaults()).unwrap();
            assert_eq!(r.status, Status::Zero, "{}: {}", rel.id, r.normal_form);
        }
    }
}

#[test]
fn reduction_is_deterministic() {
    let p = shifted_cartan_identity().multiply(&sym(G::x_minus(2, 1)));
    let a = reduce(&p, Levendorskii, &defaults()).unwrap();
    let b = reduce(&p, Levendorskii, &defaults()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn larger_truncation_never_loses_a_zero() {
    let small = TruncationParams {
        max_word_length: 4,
        max_filtration_degree: 2,
        max_rounds: 2000,
    };
    let large = TruncationParams {
        max_word_length: 10,
        max_filtration_degree: 5,
        max_rounds: 50_000,
    };
    assert!(large.dominates(&small));
    let samples = [
        shifted_cartan_identity(),
        br(&sym(G::x_plus(1, 1)), &sym(G::x_minus(1, 0))).sub(&h_from_tilde(1).unwrap()),
        br(&sym(G::x_plus(1, 0)), &sym(G::x_minus(2, 0))).sub(&sym(G::cartan(1, 0))),
        br(&sym(G::x_plus(2, 1)), &sym(G::x_plus(2, 0))),
    ];
    for p in &samples {
        let a = reduce(p, Levendorskii, &small).unwrap();
        let b = reduce(p, Levendorskii, &large).unwrap();
        if a.status == Status::Zero {
            assert_eq!(b.status, Status::Zero);
        }
    }
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let p = shifted_cartan_identity().multiply(&sym(G::x_minus(1, 1)));
    let tight = TruncationParams {
        max_rounds: 1,
        ..defaults()
    };
    let r = reduce(&p, Levendorskii, &tight).unwrap();
    assert_eq!(r.status, Status::Inconclusive);
    assert!(r.reason.is_some());
    let r = reduce(&p, Levendorskii, &defaults()).unwrap();
    assert_eq!(r.status, Status::Zero);
}

#[test]
fn overlong_words_are_inconclusive() {
    let x = Expr::sym(G::x_plus(1, 0));
    let quartic = Expr::product([x.clone(), x.clone(), x.clone(), x]);
    let tight = TruncationParams {
        max_word_length: 3,
        ..defaults()
    };
    assert_eq!(
        reduce_expr(&quartic, Lie, &tight).unwrap().status,
        Status::Inconclusive
    );
    assert_eq!(
        reduce_expr(&quartic, Lie, &defaults()).unwrap().status,
        Status::NonzeroNormalForm
    );
}

#[test]
fn fallback_examples() {
    let small = TruncationParams {
        max_word_length: 5,
        max_filtration_degree: 1,
        max_rounds: 10_000,
    };
    for rel in enumerate_relations(Lie, 0)
        .iter()
        .filter(|r| !r.residual.is_zero())
    {
        let r = ideal_membership_fallback(&rel.residual, Lie, &small).unwrap();
        assert_eq!(r.status, Status::Zero, "{}", rel.id);
    }
    let zero = ideal_membership_fallback(&SuperPolynomial::zero(), Lie, &small).unwrap();
    assert_eq!(zero.status, Status::Zero);
    let x = sym(G::x_plus(1, 0));
    let r = ideal_membership_fallback(&x, Levendorskii, &small).unwrap();
    assert_eq!(r.status, Status::NonzeroNormalForm);
    assert_eq!(r.normal_form, NormalForm::Free(x));
}

#[test]
fn level_zero_rules_are_sound() {
    let small = TruncationParams {
        max_word_length: 5,
        max_filtration_degree: 0,
        max_rounds: 20_000,
    };
    let mut checked = 0;
    for rule in rewrite_rules(Lie, 0) {
        if rule.pattern.symbols().iter().all(|l| l.base().is_central()) {
            continue;
        }
        let in_symbols = |p: &LetterPoly| -> Option<Expr> {
            let mut terms = Vec::new();
            for (w, c) in p.sorted_terms() {
                let mut f = Vec::new();
                for &l in w.symbols() {
                    f.push(letter_expr(Lie, l)?);
                }
                terms.push(Expr::scale(c.clone(), Expr::product(f)));
            }
            Some(Expr::sum(terms))
        };
        let pattern = LetterPoly::from_word(rule.pattern.clone(), Scalar::one());
        let diff = Expr::sub(
            in_symbols(&pattern).unwrap(),
            in_symbols(&rule.replacement).unwrap(),
        );
        let p = diff.to_poly().unwrap();
        if p.max_word_len() > 3 {
            continue;
        }
        let r = ideal_membership_fallback(&p, Lie, &small).unwrap();
        assert_eq!(r.status, Status::Zero, "{:?}", rule.pattern);
        checked += 1;
    }
    assert!(checked >= 30, "only {checked} rules checked");
}

#[test]
fn rule_table_covers_all_pairs() {
    let n = LieBasisElement::COUNT;
    let odd = LieBasisElement::all().filter(|b| b.parity() == 1).count();
    assert_eq!(rewrite_rules(Lie, 0).len(), n * (n - 1) / 2 + odd);
    assert_eq!(rewrite_rules(Levendorskii, 1).len(), n * n);
}
