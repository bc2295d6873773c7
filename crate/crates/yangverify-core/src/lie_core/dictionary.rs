//! Chevalley generators of g written in the matrix basis, and the automorphism ρ.

use crate::free_superalgebra::{Expr, Family, GeneratorSymbol, Scalar, SuperPolynomial, Word};

use super::basis::{Letter, LetterPoly, LieBasisElement};
use super::pbw::lie_normal_form;
use super::table::LieVector;

/// Errors raised when a polynomial leaves the level-0 subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("symbol {0} is not a level-0 generator of g")]
    NotLieLevel(GeneratorSymbol),
}

/// Image of a level-0 generator symbol in the matrix basis.
pub fn chevalley_to_matrix(s: GeneratorSymbol) -> Result<LieVector, LieError> {
    if s.level() != 0 {
        return Err(LieError::NotLieLevel(s));
    }
    let one = Scalar::one();
    let minus = Scalar::from_int(-1);
    Ok(match s.family() {
        Family::XPlus => match s.node() {
            1 => vec![(LieBasisElement::e(2, 1), one)],
            2 => vec![(LieBasisElement::e(3, 2), minus)],
            _ => vec![(LieBasisElement::e(4, 3), minus)],
        },
        Family::XMinus => match s.node() {
            1 => vec![(LieBasisElement::e(1, 2), one)],
            2 => vec![(LieBasisElement::e(2, 3), one)],
            _ => vec![(LieBasisElement::e(3, 4), one)],
        },
        Family::Cartan => vec![(LieBasisElement::h(s.node()), one)],
        Family::CentralPPlus => vec![(LieBasisElement::P, one)],
        Family::CentralPMinus => vec![(LieBasisElement::K, minus)],
        Family::MatrixUnit => {
            let (i, j) = s.matrix_indices().expect("matrix unit has indices");
            vec![(LieBasisElement::e(i, j), one)]
        }
        Family::TildeCartan => return Err(LieError::NotLieLevel(s)),
    })
}

fn vector_to_letters(v: &LieVector) -> LetterPoly {
    let mut p = LetterPoly::zero();
    for (b, c) in v {
        p.add_term(Word::single(Letter::new(*b, 0)), c.clone());
    }
    p
}

/// Normal form in U(g) of a polynomial in level-0 symbols.
pub fn pbw_normal_form(p: &SuperPolynomial) -> Result<LetterPoly, LieError> {
    let mut image = LetterPoly::zero();
    for (w, c) in p.terms() {
        let mut t = LetterPoly::constant(c.clone());
        for &s in w.symbols() {
            t = t.multiply(&vector_to_letters(&chevalley_to_matrix(s)?));
        }
        image.add_assign(&t);
    }
    Ok(lie_normal_form(&image))
}

/// The six non-simple root vectors as nested brackets of Chevalley generators.
pub fn non_simple_roots() -> Vec<(LieBasisElement, Expr)> {
    let x = |sign: i8, i: u8| Expr::sym(GeneratorSymbol::x(sign, i, 0));
    let e31 = Expr::bracket(x(1, 1), x(1, 2));
    let e13 = Expr::bracket(x(-1, 1), x(-1, 2));
    vec![
        (LieBasisElement::e(3, 1), e31.clone()),
        (
            LieBasisElement::e(4, 2),
            Expr::neg(Expr::bracket(x(1, 2), x(1, 3))),
        ),
        (LieBasisElement::e(4, 1), Expr::bracket(e31, x(1, 3))),
        (LieBasisElement::e(1, 3), e13.clone()),
        (LieBasisElement::e(2, 4), Expr::bracket(x(-1, 2), x(-1, 3))),
        (LieBasisElement::e(1, 4), Expr::bracket(e13, x(-1, 3))),
    ]
}

/// `C₀ = −½h₁ − h₂ − ½h₃`, which acts as half the identity matrix.
pub fn c0() -> LieVector {
    vec![
        (LieBasisElement::h(1), Scalar::new(-1, 2)),
        (LieBasisElement::h(2), Scalar::from_int(-1)),
        (LieBasisElement::h(3), Scalar::new(-1, 2)),
    ]
}

/// ρ on the basis: `E_ij ↦ E_{5−i,5−j}`, `P ↔ K`, `h₁ ↔ h₃`, `h₂` fixed.
pub fn rho_basis(b: LieBasisElement) -> LieBasisElement {
    if let Some((i, j)) = b.matrix_indices() {
        LieBasisElement::e(5 - i, 5 - j)
    } else if let Some(n) = b.cartan_node() {
        LieBasisElement::h(4 - n)
    } else if b == LieBasisElement::P {
        LieBasisElement::K
    } else {
        LieBasisElement::P
    }
}

/// ρ on level-0 symbols, written back in symbols.
pub fn rho_symbol(s: GeneratorSymbol) -> Result<SuperPolynomial, LieError> {
    let mut out = SuperPolynomial::zero();
    for (b, c) in chevalley_to_matrix(s)? {
        out.add_scaled(&rho_basis(b).to_symbol_poly(), &c);
    }
    Ok(out)
}
