use yangverify_core::first_realization::{
    first_realization_checks, hatted, hatted_symbols, verify_first_realization, HattedSymbol,
};
use yangverify_core::free_superalgebra::{
    Degree, Expr, GeneratorSymbol as G, Scalar, SuperPolynomial,
};
use yangverify_core::hopf_structure::antipode;
use yangverify_core::reduction_engine::{reduce, reduce_expr, Status, TruncationParams};
use yangverify_core::yangian_presentation::PresentationKind;

const YL: PresentationKind = PresentationKind::Levendorskii;

fn sym(s: G) -> SuperPolynomial {
    SuperPolynomial::from_symbol(s)
}

fn e(i: u8, j: u8) -> SuperPolynomial {
    sym(G::matrix_unit(i, j))
}

fn half() -> Scalar {
    Scalar::new(1, 2)
}

#[test]
fn h2_hat_expression() {
    let mut inner = e(1, 2).multiply(&e(2, 1));
    inner = inner.sub(&e(1, 3).multiply(&e(3, 1)));
    inner = inner.add(&e(3, 4).multiply(&e(4, 3)));
    inner = inner.add(&e(2, 4).multiply(&e(4, 2)));
    inner = inner.sub(&sym(G::p_minus(0)).multiply(&sym(G::p_plus(0))));
    let expect = sym(G::tilde_cartan(2, 1)).sub(&inner.scale(&half()));
    assert_eq!(hatted(HattedSymbol::H { i: 2 }).unwrap().expression, expect);
}

#[test]
fn p_hat_expression() {
    let c0 = Expr::c0_expansion().to_poly().unwrap();
    let expect = sym(G::p_plus(1)).add(&c0.multiply(&sym(G::p_plus(0))));
    assert_eq!(
        hatted(HattedSymbol::P { sign: 1 }).unwrap().expression,
        expect
    );
    let expect = sym(G::p_minus(1)).add(&sym(G::p_minus(0)).multiply(&c0));
    assert_eq!(
        hatted(HattedSymbol::P { sign: -1 }).unwrap().expression,
        expect
    );
}

#[test]
fn x1_hat_expression() {
    let sum = e(2, 3).multiply(&e(3, 1)).add(&e(2, 4).multiply(&e(4, 1)));
    let inner = sym(G::cartan(1, 0))
        .multiply(&sym(G::x_plus(1, 0)))
        .sub(&sum);
    let expect = sym(G::x_plus(1, 1)).sub(&inner.scale(&half()));
    assert_eq!(
        hatted(HattedSymbol::X { sign: 1, i: 1 })
            .unwrap()
            .expression,
        expect
    );
}

#[test]
fn table_shape() {
    let syms = hatted_symbols();
    assert_eq!(syms.len(), 14);
    for s in syms {
        let g = hatted(s).unwrap();
        let expect = if matches!(s, HattedSymbol::Cartan { .. }) {
            0
        } else {
            1
        };
        assert_eq!(g.expression.degree(), Degree::Finite(expect), "{s}");
        assert_eq!(g.expression.parity().unwrap(), Some(g.parity()), "{s}");
    }
    assert!(hatted(HattedSymbol::X { sign: 1, i: 4 }).is_err());
    assert!(hatted(HattedSymbol::P { sign: 0 }).is_err());
}

#[test]
fn hats_are_half_of_generator_minus_antipode() {
    let bases = [
        (HattedSymbol::X { sign: 1, i: 1 }, G::x_plus(1, 1)),
        (HattedSymbol::X { sign: 1, i: 2 }, G::x_plus(2, 1)),
        (HattedSymbol::X { sign: 1, i: 3 }, G::x_plus(3, 1)),
        (HattedSymbol::X { sign: -1, i: 1 }, G::x_minus(1, 1)),
        (HattedSymbol::X { sign: -1, i: 2 }, G::x_minus(2, 1)),
        (HattedSymbol::X { sign: -1, i: 3 }, G::x_minus(3, 1)),
        (HattedSymbol::H { i: 1 }, G::tilde_cartan(1, 1)),
        (HattedSymbol::H { i: 2 }, G::tilde_cartan(2, 1)),
        (HattedSymbol::H { i: 3 }, G::tilde_cartan(3, 1)),
        (HattedSymbol::P { sign: 1 }, G::p_plus(1)),
        (HattedSymbol::P { sign: -1 }, G::p_minus(1)),
    ];
    for (h, g) in bases {
        let j = sym(g);
        let expect = j.sub(&antipode(&j).unwrap()).scale(&half());
        assert_eq!(hatted(h).unwrap().expression, expect, "{h}");
    }
}

#[test]
fn prop_examples() {
    let p = TruncationParams::default();
    let e = Expr::sub(
        Expr::bracket(
            hatted(HattedSymbol::X { sign: 1, i: 1 }).unwrap().expr,
            Expr::sym(G::x_minus(1, 0)),
        ),
        hatted(HattedSymbol::H { i: 1 }).unwrap().expr,
    );
    assert_eq!(reduce_expr(&e, YL, &p).unwrap().status, Status::Zero);
    let ph = hatted(HattedSymbol::P { sign: 1 }).unwrap().expression;
    assert_eq!(
        reduce(&antipode(&ph).unwrap().add(&ph), YL, &p)
            .unwrap()
            .status,
        Status::Zero
    );
    let e = Expr::bracket(
        hatted(HattedSymbol::H { i: 2 }).unwrap().expr,
        Expr::sym(G::x_plus(2, 0)),
    );
    assert_eq!(reduce_expr(&e, YL, &p).unwrap().status, Status::Zero);
}

#[test]
fn wrong_hat_fails() {
    let p = TruncationParams::default();
    let e = Expr::sub(
        Expr::bracket(Expr::sym(G::x_plus(1, 1)), Expr::sym(G::x_minus(1, 0))),
        hatted(HattedSymbol::H { i: 1 }).unwrap().expr,
    );
    assert_eq!(
        reduce_expr(&e, YL, &p).unwrap().status,
        Status::NonzeroNormalForm
    );
}

#[test]
fn whole_proposition_and_antipode_remark() {
    let checks = first_realization_checks();
    assert_eq!(checks.len(), 36 + 18 + 18 + 2 + 14);
    let results = verify_first_realization(&TruncationParams::default());
    let bad: Vec<_> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| (&r.id, r.status()))
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}
