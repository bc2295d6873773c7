//! The Drinfeld generators of every level built inside the level-one presentation, the
//! raising operators, the check families and the suite verifying the Drinfeld relations.

pub mod suite;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::free_superalgebra::{
    Expr, Family, GeneratorSymbol as G, Parity, Scalar, SuperPolynomial,
};
use crate::yangian_presentation::a;

pub use suite::{
    drinfeld_checks, psi_checks, psi_embedding_check, psi_expr, rho_covariance,
    verify_drinfeld_suite, DEFAULT_LEVEL_BOUND,
};

/// Errors of the tower constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("bad index: {0}")]
    BadIndex(String),
}

fn bad(msg: impl Into<String>) -> TowerError {
    TowerError::BadIndex(msg.into())
}

fn check_node(i: u8) -> Result<(), TowerError> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(bad(format!("node {i} is outside 1..=3")))
    }
}

fn check_sign(sg: i8) -> Result<(), TowerError> {
    if sg == 1 || sg == -1 {
        Ok(())
    } else {
        Err(bad(format!("sign {sg} is not ±1")))
    }
}

/// A Drinfeld generator written in the generators of the level-one presentation.
#[derive(Clone, Debug)]
pub struct DefinedGenerator {
    pub symbol: G,
    /// The defining expression over level-zero and level-one symbols.
    pub expr: Expr,
    /// The expression multiplied out in the free algebra.
    pub definition: SuperPolynomial,
}

impl DefinedGenerator {
    pub fn parity(&self) -> Parity {
        self.symbol.parity()
    }
}

type Memo = RwLock<HashMap<G, Arc<DefinedGenerator>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn sym(s: G) -> Expr {
    Expr::sym(s)
}

fn tilde(i: u8) -> Expr {
    Expr::sym(G::tilde_cartan(i, 1))
}

fn defining_expr(s: G) -> Result<Expr, TowerError> {
    let r = s.level();
    if r <= 1 {
        return Ok(sym(s));
    }
    Ok(match s.family() {
        Family::XPlus | Family::XMinus => {
            let sg: i64 = if s.family() == Family::XPlus { 1 } else { -1 };
            let i = s.node();
            let prev = generator_expr(G::x(sg as i8, i, r - 1))?;
            let (raiser, c) = match i {
                1 => (tilde(1), Scalar::new(sg, 2)),
                2 => (tilde(1), Scalar::from_int(-sg)),
                _ => (tilde(3), Scalar::new(-sg, 2)),
            };
            Expr::scale(c, Expr::bracket(raiser, prev))
        }
        Family::Cartan => {
            let i = s.node();
            Expr::bracket(generator_expr(G::x_plus(i, r))?, sym(G::x_minus(i, 0)))
        }
        Family::CentralPPlus => z_expr(1, r, 0, 0, 0)?,
        Family::CentralPMinus => z_expr(-1, r, 0, 0, 0)?,
        Family::TildeCartan | Family::MatrixUnit => {
            return Err(bad(format!("{s} is not a Drinfeld generator")));
        }
    })
}

/// The memoized definition of a Drinfeld generator. Levels zero and one are the symbols
/// themselves; higher levels follow the inductive definitions through `h̃_{1,1}` and `h̃_{3,1}`.
pub fn build_generator(s: G) -> Result<Arc<DefinedGenerator>, TowerError> {
    if let Some(d) = memo().read().expect("memo lock").get(&s) {
        return Ok(d.clone());
    }
    let expr = defining_expr(s)?;
    let definition = expr.to_poly().expect("definitions are homogeneous");
    let d = Arc::new(DefinedGenerator {
        symbol: s,
        expr,
        definition,
    });
    Ok(memo()
        .write()
        .expect("memo lock")
        .entry(s)
        .or_insert(d)
        .clone())
}

/// [`build_generator`] from family, node and level.
pub fn build(family: Family, node: u8, level: u32) -> Result<Arc<DefinedGenerator>, TowerError> {
    let s = match family {
        Family::XPlus => G::try_x_plus(node, level),
        Family::XMinus => G::try_x_minus(node, level),
        Family::Cartan => G::try_cartan(node, level),
        Family::CentralPPlus => Ok(G::p_plus(level)),
        Family::CentralPMinus => Ok(G::p_minus(level)),
        Family::TildeCartan | Family::MatrixUnit => {
            return Err(bad(format!("{family:?} is not a Drinfeld family")));
        }
    }
    .map_err(|e| bad(e.to_string()))?;
    build_generator(s)
}

/// The defining expression of a Drinfeld generator.
pub fn generator_expr(s: G) -> Result<Expr, TowerError> {
    Ok(build_generator(s)?.expr.clone())
}

/// Replaces every Drinfeld symbol of an expression by its definition.
pub fn expand(e: &Expr) -> Result<Expr, TowerError> {
    for s in e.symbols() {
        build_generator(s)?;
    }
    Ok(e.map_symbols(|s| generator_expr(s).expect("built above")))
}

/// Which raising operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RaisingKind {
    /// `B_{ij}`, raising `x^±_{j,r}` by two levels exactly.
    Bij,
    /// `h̃_{i,2}`.
    TildeH2,
}

/// A degree-two operator built from `h_{i,2}`, `h_{i,0}` and `h̃_{i,1}`.
#[derive(Clone, Debug)]
pub struct RaisingOperator {
    pub kind: RaisingKind,
    pub i: u8,
    pub j: Option<u8>,
    /// The operator over Drinfeld and level-one symbols.
    pub expr: Expr,
    /// The operator over level-one symbols, multiplied out.
    pub expression: SuperPolynomial,
}

/// `B_{ij} = h_{i,2} − h_{i,0}h̃_{i,1} − (1/6)h_{i,0}³ − (1/12)a_{ij}² h_{i,0}` for `Bij` with
/// `j = Some(_)`, and `h̃_{i,2} = h_{i,2} − h_{i,0}h̃_{i,1} − (1/6)h_{i,0}³` for `TildeH2`.
pub fn raising_operator(
    kind: RaisingKind,
    i: u8,
    j: Option<u8>,
) -> Result<RaisingOperator, TowerError> {
    check_node(i)?;
    let h0 = || sym(G::cartan(i, 0));
    let mut terms = vec![
        sym(G::cartan(i, 2)),
        Expr::neg(Expr::product([h0(), tilde(i)])),
        Expr::scale(Scalar::new(-1, 6), Expr::product([h0(), h0(), h0()])),
    ];
    let j = match (kind, j) {
        (RaisingKind::Bij, Some(j)) => {
            check_node(j)?;
            let aij = a(i, j);
            terms.push(Expr::scale(Scalar::new(-aij * aij, 12), h0()));
            Some(j)
        }
        (RaisingKind::Bij, None) => return Err(bad("B_ij needs a second index")),
        (RaisingKind::TildeH2, None) => None,
        (RaisingKind::TildeH2, Some(_)) => return Err(bad("h̃_{i,2} takes one index")),
    };
    let expr = Expr::sum(terms);
    let expression = expand(&expr)?.to_poly().expect("operator is even");
    Ok(RaisingOperator {
        kind,
        i,
        j,
        expr,
        expression,
    })
}

/// Index data of a check family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyIndex {
    /// `R_{ij}(r,s) = [x_{i,r+1},x_{j,s}] − [x_{i,r},x_{j,s+1}] ∓ ½a_{ij}{x_{i,r},x_{j,s}}`.
    R {
        sign: i8,
        i: u8,
        j: u8,
        r: u32,
        s: u32,
    },
    /// `Q(r,s) = [x_{2,r}, x_{2,s}]`.
    Q { sign: i8, r: u32, s: u32 },
    /// `S_{ij}(r,s) = [h_{i,r+1},x_{j,s}] − [h_{i,r},x_{j,s+1}] ∓ ½a_{ij}{h_{i,r},x_{j,s}}`.
    S {
        sign: i8,
        i: u8,
        j: u8,
        r: u32,
        s: u32,
    },
    /// `X(r,s;t) = [x_{j,r},[x_{j,s},x_{2,t}]] + [x_{j,s},[x_{j,r},x_{2,t}]]` for `j = 1, 3`.
    X {
        sign: i8,
        j: u8,
        r: u32,
        s: u32,
        t: u32,
    },
    /// `Z_{(k,l,m,n)} = [[x_{1,k},x_{2,l}],[x_{3,m},x_{2,n}]]`.
    Z {
        sign: i8,
        k: u32,
        l: u32,
        m: u32,
        n: u32,
    },
}

fn sign_str(sg: i8) -> &'static str {
    if sg > 0 {
        "+"
    } else {
        "-"
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyIndex::R { sign, i, j, r, s } => {
                write!(f, "R{}[{i},{j}]({r},{s})", sign_str(sign))
            }
            FamilyIndex::Q { sign, r, s } => write!(f, "Q{}({r},{s})", sign_str(sign)),
            FamilyIndex::S { sign, i, j, r, s } => {
                write!(f, "S{}[{i},{j}]({r},{s})", sign_str(sign))
            }
            FamilyIndex::X { sign, j, r, s, t } => {
                write!(f, "X{}[{j}]({r},{s};{t})", sign_str(sign))
            }
            FamilyIndex::Z { sign, k, l, m, n } => {
                write!(f, "Z{}({k},{l},{m},{n})", sign_str(sign))
            }
        }
    }
}

/// A check-family residual.
#[derive(Clone, Debug)]
pub struct CheckFamily {
    pub index: FamilyIndex,
    /// The residual over Drinfeld symbols.
    pub expr: Expr,
    /// The residual with every generator expanded, multiplied out.
    pub residual: SuperPolynomial,
}

fn xs(sg: i8, i: u8, r: u32) -> Expr {
    sym(G::x(sg, i, r))
}

fn hs(i: u8, r: u32) -> Expr {
    sym(G::cartan(i, r))
}

fn shift(sg: i8, i: u8, j: u8, left: impl Fn(u32) -> Expr, r: u32, s: u32) -> Expr {
    Expr::sum([
        Expr::bracket(left(r + 1), xs(sg, j, s)),
        Expr::neg(Expr::bracket(left(r), xs(sg, j, s + 1))),
        Expr::scale(
            Scalar::new(-i64::from(sg) * a(i, j), 2),
            Expr::anti(left(r), xs(sg, j, s)),
        ),
    ])
}

fn z_expr(sg: i8, k: u32, l: u32, m: u32, n: u32) -> Result<Expr, TowerError> {
    let x = |i: u8, r: u32| generator_expr(G::x(sg, i, r));
    Ok(Expr::bracket(
        Expr::bracket(x(1, k)?, x(2, l)?),
        Expr::bracket(x(3, m)?, x(2, n)?),
    ))
}

/// The residual of a check family over Drinfeld symbols.
pub fn family_expr(index: FamilyIndex) -> Result<Expr, TowerError> {
    Ok(match index {
        FamilyIndex::R { sign, i, j, r, s } => {
            check_sign(sign)?;
            check_node(i)?;
            check_node(j)?;
            shift(sign, i, j, |k| xs(sign, i, k), r, s)
        }
        FamilyIndex::Q { sign, r, s } => {
            check_sign(sign)?;
            Expr::bracket(xs(sign, 2, r), xs(sign, 2, s))
        }
        FamilyIndex::S { sign, i, j, r, s } => {
            check_sign(sign)?;
            check_node(i)?;
            check_node(j)?;
            shift(sign, i, j, |k| hs(i, k), r, s)
        }
        FamilyIndex::X { sign, j, r, s, t } => {
            check_sign(sign)?;
            if j != 1 && j != 3 {
                return Err(bad(format!("X family needs j = 1 or 3, got {j}")));
            }
            Expr::sum([
                Expr::bracket(
                    xs(sign, j, r),
                    Expr::bracket(xs(sign, j, s), xs(sign, 2, t)),
                ),
                Expr::bracket(
                    xs(sign, j, s),
                    Expr::bracket(xs(sign, j, r), xs(sign, 2, t)),
                ),
            ])
        }
        FamilyIndex::Z { sign, k, l, m, n } => {
            check_sign(sign)?;
            Expr::bracket(
                Expr::bracket(xs(sign, 1, k), xs(sign, 2, l)),
                Expr::bracket(xs(sign, 3, m), xs(sign, 2, n)),
            )
        }
    })
}

/// A check-family residual with its expansion into the level-one presentation.
pub fn family_residual(index: FamilyIndex) -> Result<CheckFamily, TowerError> {
    let expr = family_expr(index)?;
    let residual = expand(&expr)?
        .to_poly()
        .expect("family residuals are homogeneous");
    Ok(CheckFamily {
        index,
        expr,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_levels_are_identities() {
        for s in [
            G::x_plus(2, 0),
            G::x_minus(3, 1),
            G::cartan(1, 1),
            G::p_plus(1),
        ] {
            assert_eq!(build_generator(s).unwrap().expr, Expr::sym(s));
        }
    }

    #[test]
    fn bad_indices() {
        assert!(build(Family::TildeCartan, 1, 1).is_err());
        assert!(build(Family::XPlus, 4, 2).is_err());
        assert!(raising_operator(RaisingKind::Bij, 1, None).is_err());
        assert!(family_expr(FamilyIndex::X {
            sign: 1,
            j: 2,
            r: 0,
            s: 0,
            t: 0
        })
        .is_err());
    }

    #[test]
    fn memo_returns_shared_definitions() {
        let a = build_generator(G::x_plus(1, 3)).unwrap();
        let b = build_generator(G::x_plus(1, 3)).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
