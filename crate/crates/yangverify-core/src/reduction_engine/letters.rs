//! Images of generator symbols as polynomials in PBW letters.

use crate::free_superalgebra::{Family, GeneratorSymbol, Scalar, Word};
use crate::lie_core::{Letter, LetterPoly, LieBasisElement};
use crate::yangian_presentation::PresentationKind;

/// The letter `E_{ij}` at level `r`.
pub fn e(i: u8, j: u8, r: u32) -> Letter {
    Letter::new(LieBasisElement::e(i, j), r)
}

/// The Cartan letter `h_i` at level `r`.
pub fn h(i: u8, r: u32) -> Letter {
    Letter::new(LieBasisElement::h(i), r)
}

pub fn central_p(r: u32) -> Letter {
    Letter::new(LieBasisElement::P, r)
}

pub fn central_k(r: u32) -> Letter {
    Letter::new(LieBasisElement::K, r)
}

fn one(l: Letter) -> LetterPoly {
    LetterPoly::from_symbol(l)
}

fn scaled(l: Letter, c: i64) -> LetterPoly {
    LetterPoly::from_word(Word::single(l), Scalar::from_int(c))
}

/// The letter carrying `x^±_{i,r}` and the sign relating the two.
pub fn x_letter(sign: i8, i: u8, r: u32) -> (Letter, i64) {
    match (sign > 0, i) {
        (true, 1) => (e(2, 1, r), 1),
        (true, 2) => (e(3, 2, r), -1),
        (true, _) => (e(4, 3, r), -1),
        (false, 1) => (e(1, 2, r), 1),
        (false, 2) => (e(2, 3, r), 1),
        (false, _) => (e(3, 4, r), 1),
    }
}

/// `h̃_{i,2}` in letters: `h_{i,2} − h_{i,0}h̃_{i,1} − (1/6)h_{i,0}³`.
fn tilde_h2(i: u8) -> LetterPoly {
    let mut p = one(h(i, 2));
    p.add_term(Word::from_symbols([h(i, 0), h(i, 1)]), Scalar::from_int(-1));
    p.add_term(
        Word::from_symbols([h(i, 0), h(i, 0), h(i, 0)]),
        Scalar::new(-1, 6),
    );
    p
}

/// Image of a symbol in the letter algebra of `kind`, or `None` if the symbol is not legal there.
pub fn symbol_value(kind: PresentationKind, s: GeneratorSymbol) -> Option<LetterPoly> {
    if !kind.allows(s) {
        return None;
    }
    let r = s.level();
    Some(match s.family() {
        Family::XPlus | Family::XMinus => {
            let sign = if s.family() == Family::XPlus { 1 } else { -1 };
            let (l, c) = x_letter(sign, s.node(), r);
            scaled(l, c)
        }
        Family::Cartan => {
            let i = s.node();
            if r == 1 && kind == PresentationKind::Levendorskii {
                let mut p = one(h(i, 1));
                p.add_term(Word::from_symbols([h(i, 0), h(i, 0)]), Scalar::new(1, 2));
                p
            } else {
                one(h(i, r))
            }
        }
        Family::TildeCartan => {
            if r == 1 {
                one(h(s.node(), 1))
            } else {
                tilde_h2(s.node())
            }
        }
        Family::CentralPPlus => one(central_p(r)),
        Family::CentralPMinus => scaled(central_k(r), -1),
        Family::MatrixUnit => {
            let (i, j) = s.matrix_indices().expect("matrix unit has indices");
            one(e(i, j, 0))
        }
    })
}

/// A defining bracket `[a, b] = value` among letters.
#[derive(Clone, Debug)]
pub struct Seed {
    pub a: Letter,
    pub b: Letter,
    pub value: LetterPoly,
}

fn seed(a: Letter, b: Letter, value: LetterPoly) -> Seed {
    Seed { a, b, value }
}

/// Brackets defining the letters of total level `n` that are not generators.
pub fn seeds(kind: PresentationKind, n: u32) -> Vec<Seed> {
    let mut out = Vec::new();
    if kind == PresentationKind::Levendorskii && n >= 2 {
        let r = n - 1;
        let (h1, h3) = (h(1, 1), h(3, 1));
        out.push(seed(h1, e(2, 1, r), scaled(e(2, 1, n), 2)));
        out.push(seed(h1, e(1, 2, r), scaled(e(1, 2, n), -2)));
        out.push(seed(h1, e(3, 2, r), scaled(e(3, 2, n), -1)));
        out.push(seed(h1, e(2, 3, r), scaled(e(2, 3, n), 1)));
        out.push(seed(h3, e(4, 3, r), scaled(e(4, 3, n), -2)));
        out.push(seed(h3, e(3, 4, r), scaled(e(3, 4, n), 2)));
        out.push(seed(e(1, 2, 0), e(2, 1, n), scaled(h(1, n), -1)));
        out.push(seed(e(2, 3, 0), e(3, 2, n), scaled(h(2, n), -1)));
        out.push(seed(e(3, 4, 0), e(4, 3, n), scaled(h(3, n), 1)));
    }
    out.push(seed(e(3, 2, 0), e(2, 1, n), one(e(3, 1, n))));
    out.push(seed(e(4, 3, 0), e(3, 2, n), one(e(4, 2, n))));
    out.push(seed(e(4, 3, 0), e(3, 1, n), one(e(4, 1, n))));
    out.push(seed(e(2, 3, 0), e(1, 2, n), scaled(e(1, 3, n), -1)));
    out.push(seed(e(3, 4, 0), e(2, 3, n), scaled(e(2, 4, n), -1)));
    out.push(seed(e(3, 4, 0), e(1, 3, n), scaled(e(1, 4, n), -1)));
    out.push(seed(e(4, 2, 0), e(3, 1, n), one(central_p(n))));
    out.push(seed(e(2, 4, 0), e(1, 3, n), one(central_k(n))));
    out
}
