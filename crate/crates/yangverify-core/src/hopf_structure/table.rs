//! Coproduct and antipode of the level-zero and level-one generators.

use crate::free_superalgebra::{
    Expr, Family, GeneratorSymbol as G, Scalar, SuperPolynomial, TensorPolynomial, Word,
};

fn sym(s: G) -> SuperPolynomial {
    SuperPolynomial::from_symbol(s)
}

fn e(i: u8, j: u8) -> SuperPolynomial {
    sym(G::matrix_unit(i, j))
}

fn c0() -> SuperPolynomial {
    Expr::c0_expansion().to_poly().expect("C0 is even")
}

fn t(a: &SuperPolynomial, b: &SuperPolynomial) -> TensorPolynomial {
    TensorPolynomial::pure([a, b])
}

fn one() -> SuperPolynomial {
    SuperPolynomial::one()
}

fn primitive(s: G) -> TensorPolynomial {
    let x = sym(s);
    t(&x, &one()).add(&t(&one(), &x))
}

fn int(k: i64) -> Scalar {
    Scalar::from_int(k)
}

/// The generators of the level-one presentation: `x^±_{i,r}`, `h_{i,0}`, `h̃_{i,1}`, `P^±_r` for `r = 0, 1`.
pub fn levendorskii_generators() -> Vec<G> {
    let mut out = Vec::new();
    for r in 0..=1 {
        for i in 1..=3 {
            out.push(G::x_plus(i, r));
            out.push(G::x_minus(i, r));
        }
        for i in 1..=3 {
            out.push(if r == 0 {
                G::cartan(i, 0)
            } else {
                G::tilde_cartan(i, 1)
            });
        }
        out.push(G::p_plus(r));
        out.push(G::p_minus(r));
    }
    out
}

/// The non-primitive part of the coproduct of a level-one generator, as a list of
/// `(coefficient, left, right)` terms.
fn tail(s: G) -> Option<Vec<(Scalar, SuperPolynomial, SuperPolynomial)>> {
    if s.level() != 1 {
        return None;
    }
    let i = s.node();
    let h0 = || sym(G::cartan(i, 0));
    let x0 = |sign: i8| sym(G::x(sign, i, 0));
    let mut v = Vec::new();
    match (s.family(), i) {
        (Family::XPlus, 1) => {
            v.push((int(1), h0(), x0(1)));
            for m in [3, 4] {
                v.push((int(-1), e(2, m), e(m, 1)));
            }
        }
        (Family::XPlus, 2) => {
            v.push((int(1), h0(), x0(1)));
            v.push((int(1), e(1, 2), e(3, 1)));
            v.push((int(1), e(3, 4), e(4, 2)));
            v.push((int(-1), e(1, 4), sym(G::p_plus(0))));
        }
        (Family::XPlus, 3) => {
            v.push((int(1), h0(), x0(1)));
            for l in [1, 2] {
                v.push((int(-1), e(l, 3), e(4, l)));
            }
        }
        (Family::TildeCartan, 1) => {
            v.push((int(-2), x0(-1), x0(1)));
            for m in [3, 4] {
                v.push((int(1), e(1, m), e(m, 1)));
                v.push((int(-1), e(2, m), e(m, 2)));
            }
        }
        (Family::TildeCartan, 2) => {
            v.push((int(1), e(1, 2), e(2, 1)));
            v.push((int(-1), e(1, 3), e(3, 1)));
            v.push((int(1), e(3, 4), e(4, 3)));
            v.push((int(1), e(2, 4), e(4, 2)));
            v.push((int(-1), sym(G::p_minus(0)), sym(G::p_plus(0))));
        }
        (Family::TildeCartan, 3) => {
            v.push((int(2), x0(-1), x0(1)));
            for l in [1, 2] {
                v.push((int(1), e(l, 3), e(3, l)));
                v.push((int(-1), e(l, 4), e(4, l)));
            }
        }
        (Family::XMinus, 1) => {
            v.push((int(1), x0(-1), h0()));
            for m in [3, 4] {
                v.push((int(-1), e(1, m), e(m, 2)));
            }
        }
        (Family::XMinus, 2) => {
            v.push((int(1), x0(-1), h0()));
            v.push((int(-1), e(1, 3), e(2, 1)));
            v.push((int(-1), e(2, 4), e(4, 3)));
            v.push((int(-1), sym(G::p_minus(0)), e(4, 1)));
        }
        (Family::XMinus, 3) => {
            v.push((int(1), x0(-1), h0()));
            for l in [1, 2] {
                v.push((int(1), e(l, 4), e(3, l)));
            }
        }
        (Family::CentralPPlus, _) => v.push((int(-2), c0(), sym(G::p_plus(0)))),
        (Family::CentralPMinus, _) => v.push((int(-2), sym(G::p_minus(0)), c0())),
        _ => return None,
    }
    Some(v)
}

/// Coproduct of a single symbol, or `None` outside the table. Matrix units and every
/// level-zero generator are primitive; `h_{i,1}` is `h̃_{i,1} + ½h_{i,0}²`.
pub fn coproduct_symbol(s: G) -> Option<TensorPolynomial> {
    if s.level() == 0 && s.family() != Family::TildeCartan {
        return Some(primitive(s));
    }
    if s.family() == Family::Cartan && s.level() == 1 {
        let mut d = coproduct_symbol(G::tilde_cartan(s.node(), 1))?;
        let h = primitive(G::cartan(s.node(), 0));
        d.add_scaled(&h.multiply(&h), &Scalar::new(1, 2));
        return Some(d);
    }
    let mut d = primitive(s);
    for (c, a, b) in tail(s)? {
        d.add_scaled(&t(&a, &b), &c);
    }
    Some(d)
}

/// Antipode of a single symbol, or `None` outside the table.
pub fn antipode_symbol(s: G) -> Option<SuperPolynomial> {
    if s.level() == 0 && s.family() != Family::TildeCartan {
        return Some(sym(s).neg());
    }
    let i = s.node();
    let h0 = || sym(G::cartan(i, 0));
    let x0 = |sign: i8| sym(G::x(sign, i, 0));
    let mut p = sym(s).neg();
    let mut add =
        |c: i64, a: SuperPolynomial, b: SuperPolynomial| p.add_scaled(&a.multiply(&b), &int(c));
    match (s.family(), s.level(), i) {
        (Family::Cartan, 1, _) => {
            let mut q = antipode_symbol(G::tilde_cartan(i, 1))?;
            q.add_scaled(&h0().multiply(&h0()), &Scalar::new(1, 2));
            return Some(q);
        }
        (Family::XPlus, 1, 1) => {
            add(1, h0(), x0(1));
            add(-1, e(2, 3), e(3, 1));
            add(-1, e(2, 4), e(4, 1));
        }
        (Family::XPlus, 1, 2) => {
            add(1, h0(), x0(1));
            add(1, e(1, 2), e(3, 1));
            add(1, e(3, 4), e(4, 2));
            add(-1, e(1, 4), sym(G::p_plus(0)));
        }
        (Family::XPlus, 1, 3) => {
            add(1, h0(), x0(1));
            add(-1, e(1, 3), e(4, 1));
            add(-1, e(2, 3), e(4, 2));
        }
        (Family::TildeCartan, 1, 1) => {
            add(-2, x0(-1), x0(1));
            add(1, e(1, 3), e(3, 1));
            add(1, e(1, 4), e(4, 1));
            add(-1, e(2, 3), e(3, 2));
            add(-1, e(2, 4), e(4, 2));
        }
        (Family::TildeCartan, 1, 2) => {
            add(1, e(1, 2), e(2, 1));
            add(-1, e(1, 3), e(3, 1));
            add(1, e(3, 4), e(4, 3));
            add(1, e(2, 4), e(4, 2));
            add(-1, sym(G::p_minus(0)), sym(G::p_plus(0)));
        }
        (Family::TildeCartan, 1, 3) => {
            add(2, x0(-1), x0(1));
            add(1, e(1, 3), e(3, 1));
            add(1, e(2, 3), e(3, 2));
            add(-1, e(1, 4), e(4, 1));
            add(-1, e(2, 4), e(4, 2));
        }
        (Family::XMinus, 1, 1) => {
            add(1, x0(-1), h0());
            add(-1, e(1, 3), e(3, 2));
            add(-1, e(1, 4), e(4, 2));
        }
        (Family::XMinus, 1, 2) => {
            add(1, x0(-1), h0());
            add(-1, e(1, 3), e(2, 1));
            add(-1, e(2, 4), e(4, 3));
            add(-1, sym(G::p_minus(0)), e(4, 1));
        }
        (Family::XMinus, 1, 3) => {
            add(1, x0(-1), h0());
            add(1, e(1, 4), e(3, 1));
            add(1, e(2, 4), e(3, 2));
        }
        (Family::CentralPPlus, 1, _) => add(-2, c0(), sym(G::p_plus(0))),
        (Family::CentralPMinus, 1, _) => add(-2, sym(G::p_minus(0)), c0()),
        _ => return None,
    }
    Some(p)
}

/// Whether a word uses only symbols with a coproduct.
pub fn in_table(w: &Word<G>) -> bool {
    w.symbols().iter().all(|s| coproduct_symbol(*s).is_some())
}
