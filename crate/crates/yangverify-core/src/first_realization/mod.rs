//! Hatted degree-one generators and the relations they satisfy with the generators of g.

use std::fmt;

use crate::free_superalgebra::{Expr, GeneratorSymbol as G, Parity, Scalar, SuperPolynomial};
use crate::hopf_structure::antipode;
use crate::reduction_engine::{run_checks, Check, CheckResult, Task, TruncationParams};
use crate::yangian_presentation::{a, PresentationKind};

const KIND: PresentationKind = PresentationKind::Levendorskii;
const SIGNS: [i8; 2] = [1, -1];
const NODES: [u8; 3] = [1, 2, 3];

/// Errors of the hatted table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FirstRealizationError {
    #[error("unknown hatted generator {0}")]
    UnknownGenerator(String),
}

/// An entry of the hatted table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HattedSymbol {
    /// `x̂^±_i`.
    X { sign: i8, i: u8 },
    /// `ĥ_i`.
    H { i: u8 },
    /// `P̂^±`.
    P { sign: i8 },
    /// The Cartan generator `h_i = h_{i,0}` of g.
    Cartan { i: u8 },
}

impl fmt::Display for HattedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pm = |s: i8| if s > 0 { "+" } else { "-" };
        match *self {
            HattedSymbol::X { sign, i } => write!(f, "xhat{}[{i}]", pm(sign)),
            HattedSymbol::H { i } => write!(f, "hhat[{i}]"),
            HattedSymbol::P { sign } => write!(f, "Phat{}", pm(sign)),
            HattedSymbol::Cartan { i } => write!(f, "h[{i}]"),
        }
    }
}

/// The fourteen table entries: `x̂^±_i`, `ĥ_i`, `P̂^±` and the Cartan generators `h_i`.
pub fn hatted_symbols() -> Vec<HattedSymbol> {
    let mut out = Vec::new();
    for sign in SIGNS {
        for i in NODES {
            out.push(HattedSymbol::X { sign, i });
        }
    }
    out.extend(NODES.iter().map(|&i| HattedSymbol::H { i }));
    out.extend(SIGNS.iter().map(|&sign| HattedSymbol::P { sign }));
    out.extend(NODES.iter().map(|&i| HattedSymbol::Cartan { i }));
    out
}

/// A table entry written in the generators of the level-one presentation.
#[derive(Clone, Debug)]
pub struct HattedGenerator {
    pub symbol: HattedSymbol,
    pub expr: Expr,
    pub expression: SuperPolynomial,
}

impl HattedGenerator {
    pub fn parity(&self) -> Parity {
        match self.symbol {
            HattedSymbol::X { i: 2, .. } => 1,
            _ => 0,
        }
    }
}

fn e(i: u8, j: u8) -> Expr {
    Expr::sym(G::matrix_unit(i, j))
}

fn ee(a: (u8, u8), b: (u8, u8)) -> Expr {
    Expr::product([e(a.0, a.1), e(b.0, b.1)])
}

fn sym(s: G) -> Expr {
    Expr::sym(s)
}

fn half_of(x: Expr) -> Expr {
    Expr::scale(Scalar::new(-1, 2), x)
}

fn hatted_expr(s: HattedSymbol) -> Result<Expr, FirstRealizationError> {
    let unknown = || FirstRealizationError::UnknownGenerator(s.to_string());
    let good_node = |i: u8| (1..=3).contains(&i);
    let good_sign = |sg: i8| sg == 1 || sg == -1;
    Ok(match s {
        HattedSymbol::X { sign, i } if good_sign(sign) && good_node(i) => {
            let x1 = sym(G::x(sign, i, 1));
            let x0 = sym(G::x(sign, i, 0));
            let h0 = sym(G::cartan(i, 0));
            let lead = if sign > 0 {
                Expr::product([h0, x0])
            } else {
                Expr::product([x0, h0])
            };
            let rest = match (sign > 0, i) {
                (true, 1) => vec![Expr::neg(ee((2, 3), (3, 1))), Expr::neg(ee((2, 4), (4, 1)))],
                (true, 2) => vec![
                    ee((1, 2), (3, 1)),
                    ee((3, 4), (4, 2)),
                    Expr::neg(Expr::product([e(1, 4), sym(G::p_plus(0))])),
                ],
                (true, _) => vec![Expr::neg(ee((1, 3), (4, 1))), Expr::neg(ee((2, 3), (4, 2)))],
                (false, 1) => vec![Expr::neg(ee((1, 3), (3, 2))), Expr::neg(ee((1, 4), (4, 2)))],
                (false, 2) => vec![
                    Expr::neg(ee((1, 3), (2, 1))),
                    Expr::neg(ee((2, 4), (4, 3))),
                    Expr::neg(Expr::product([sym(G::p_minus(0)), e(4, 1)])),
                ],
                (false, _) => vec![ee((1, 4), (3, 1)), ee((2, 4), (3, 2))],
            };
            let mut inner = vec![lead];
            inner.extend(rest);
            Expr::sum([x1, half_of(Expr::sum(inner))])
        }
        HattedSymbol::H { i } if good_node(i) => {
            let ht = sym(G::tilde_cartan(i, 1));
            let xx = Expr::product([sym(G::x_minus(i, 0)), sym(G::x_plus(i, 0))]);
            let inner = match i {
                1 => vec![
                    ee((1, 3), (3, 1)),
                    ee((1, 4), (4, 1)),
                    Expr::neg(ee((2, 3), (3, 2))),
                    Expr::neg(ee((2, 4), (4, 2))),
                ],
                2 => vec![
                    ee((1, 2), (2, 1)),
                    Expr::neg(ee((1, 3), (3, 1))),
                    ee((3, 4), (4, 3)),
                    ee((2, 4), (4, 2)),
                    Expr::neg(Expr::product([sym(G::p_minus(0)), sym(G::p_plus(0))])),
                ],
                _ => vec![
                    ee((1, 3), (3, 1)),
                    ee((2, 3), (3, 2)),
                    Expr::neg(ee((1, 4), (4, 1))),
                    Expr::neg(ee((2, 4), (4, 2))),
                ],
            };
            let mut terms = vec![ht];
            match i {
                1 => terms.push(xx),
                3 => terms.push(Expr::neg(xx)),
                _ => {}
            }
            terms.push(half_of(Expr::sum(inner)));
            Expr::sum(terms)
        }
        HattedSymbol::P { sign } if good_sign(sign) => {
            let p0 = sym(G::p(sign, 0));
            let c0p0 = if sign > 0 {
                Expr::product([Expr::C0, p0])
            } else {
                Expr::product([p0, Expr::C0])
            };
            Expr::sum([sym(G::p(sign, 1)), c0p0])
        }
        HattedSymbol::Cartan { i } if good_node(i) => sym(G::cartan(i, 0)),
        _ => return Err(unknown()),
    })
}

/// The expression of a table entry.
pub fn hatted(s: HattedSymbol) -> Result<HattedGenerator, FirstRealizationError> {
    let expr = hatted_expr(s)?;
    let expression = expr.to_poly().expect("table entries are homogeneous");
    Ok(HattedGenerator {
        symbol: s,
        expr,
        expression,
    })
}

fn hat(s: HattedSymbol) -> Expr {
    hatted_expr(s).expect("table entry")
}

fn xhat(sign: i8, i: u8) -> Expr {
    hat(HattedSymbol::X { sign, i })
}

fn x0(sign: i8, i: u8) -> Expr {
    sym(G::x(sign, i, 0))
}

fn pm(sg: i8) -> &'static str {
    if sg > 0 {
        "+"
    } else {
        "-"
    }
}

/// The relations between the hatted generators and the generators of g, followed by the
/// antipode checks `S(Ĵ) + Ĵ` for every table entry.
pub fn first_realization_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |id: String, e: Expr| out.push(Check::new(id, KIND, Task::Expr(e)));
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let rhs = || Expr::scale_int(i64::from(sg) * a(i, j), xhat(sg, j));
                let lhs = Expr::bracket(hat(HattedSymbol::H { i }), x0(sg, j));
                push(
                    format!("first/hhat-x[{},i={i},j={j}]", pm(sg)),
                    Expr::sub(lhs, rhs()),
                );
                let lhs = Expr::bracket(sym(G::cartan(i, 0)), xhat(sg, j));
                push(
                    format!("first/h-xhat[{},i={i},j={j}]", pm(sg)),
                    Expr::sub(lhs, rhs()),
                );
            }
        }
    }
    for i in NODES {
        for j in NODES {
            let residual = |lhs: Expr| {
                if i == j {
                    Expr::sub(lhs, hat(HattedSymbol::H { i }))
                } else {
                    lhs
                }
            };
            let lhs = Expr::bracket(xhat(1, i), x0(-1, j));
            push(format!("first/xhat-x[i={i},j={j}]"), residual(lhs));
            let lhs = Expr::bracket(x0(1, i), xhat(-1, j));
            push(format!("first/x-xhat[i={i},j={j}]"), residual(lhs));
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let e = Expr::sub(
                    Expr::bracket(xhat(sg, i), x0(sg, j)),
                    Expr::bracket(x0(sg, i), xhat(sg, j)),
                );
                push(format!("first/xhat-shift[{},i={i},j={j}]", pm(sg)), e);
            }
        }
    }
    for sg in SIGNS {
        let e = Expr::sub(
            Expr::bracket(
                Expr::bracket(xhat(sg, 1), x0(sg, 2)),
                Expr::bracket(x0(sg, 3), x0(sg, 2)),
            ),
            hat(HattedSymbol::P { sign: sg }),
        );
        push(format!("first/extended-serre[{}]", pm(sg)), e);
    }
    for s in hatted_symbols() {
        let g = hatted(s).expect("table entry");
        let p = antipode(&g.expression)
            .expect("table entries use tabulated generators")
            .add(&g.expression);
        out.push(Check::new(
            format!("first/antipode/{s}"),
            KIND,
            Task::Poly(p),
        ));
    }
    out
}

/// Runs [`first_realization_checks`].
pub fn verify_first_realization(params: &TruncationParams) -> Vec<CheckResult> {
    run_checks(&first_realization_checks(), params)
}
