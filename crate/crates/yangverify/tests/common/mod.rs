use proptest::prelude::*;
use yangverify_core::free_superalgebra::{Expr, GeneratorSymbol as G, Scalar};

fn generator() -> impl Strategy<Value = Expr> {
    let node = 1u8..=3;
    let level = 0u32..=5;
    prop_oneof![
        (node.clone(), level.clone()).prop_map(|(i, r)| Expr::sym(G::x_plus(i, r))),
        (node.clone(), level.clone()).prop_map(|(i, r)| Expr::sym(G::x_minus(i, r))),
        (node.clone(), level.clone()).prop_map(|(i, r)| Expr::sym(G::cartan(i, r))),
        node.prop_map(|i| Expr::sym(G::tilde_cartan(i, 1))),
        level.clone().prop_map(|r| Expr::sym(G::p_plus(r))),
        level.prop_map(|r| Expr::sym(G::p_minus(r))),
        (1u8..=4, 1u8..=4)
            .prop_filter("off-diagonal", |(i, j)| i != j)
            .prop_map(|(i, j)| Expr::sym(G::matrix_unit(i, j))),
        Just(Expr::C0),
    ]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Scalar::new(p, q))
}

/// Random expression trees, including degenerate sums and products.
pub fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![3 => generator(), 1 => scalar().prop_map(Expr::Scalar)];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..=4).prop_map(Expr::Add),
            prop::collection::vec(inner.clone(), 0..=3).prop_map(Expr::Mul),
            (scalar(), inner.clone()).prop_map(|(c, e)| Expr::scale(c, e)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bracket(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::anti(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::tensor(a, b)),
        ]
    })
}
