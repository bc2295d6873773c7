//! The bracket table read as oriented rewrite rules on pairs of letters, and letters written
//! back in generator symbols.

use crate::free_superalgebra::{Expr, Generator, GeneratorSymbol, Scalar, Word};
use crate::lie_core::{BracketSource, Entry, Letter, LetterPoly, LieBasisElement};
use crate::yangian_presentation::PresentationKind;

use super::engine::Source;
use super::letters::{seeds, x_letter};

/// `pattern → replacement`, where `pattern` is an out-of-order pair of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub pattern: Word<Letter>,
    pub replacement: LetterPoly,
    /// Where the bracket in the replacement comes from.
    pub certificate: String,
    /// Change of filtration degree from the pattern to the leading word of the replacement.
    pub degree_delta: i32,
}

/// All rules for pairs of letters whose levels sum to `level`.
pub fn rewrite_rules(kind: PresentationKind, level: u32) -> Vec<RewriteRule> {
    let source = Source::for_kind(kind, level);
    let letters: Vec<Letter> = (0..=level)
        .flat_map(|r| LieBasisElement::all().map(move |b| Letter::new(b, r)))
        .collect();
    let mut out = Vec::new();
    for &a in &letters {
        for &b in &letters {
            if a > b || a.level() + b.level() != level || (a == b && a.parity() == 0) {
                continue;
            }
            let Entry::Known(br) = source.entry(a, b) else {
                continue;
            };
            let koszul = Scalar::sign(u32::from(a.parity() * b.parity()));
            let mut replacement = LetterPoly::zero();
            if a == b {
                replacement.add_scaled(br, &Scalar::new(1, 2));
            } else {
                replacement.add_term(Word::from_symbols([a, b]), koszul.clone());
                replacement.add_scaled(br, &-koszul);
            }
            let pattern = Word::from_symbols([b, a]);
            let top = replacement
                .terms()
                .map(|(w, _)| w.degree())
                .max()
                .unwrap_or(0);
            out.push(RewriteRule {
                degree_delta: top as i32 - pattern.degree() as i32,
                pattern,
                replacement,
                certificate: format!("{}/bracket-table[{}]", kind.name(), level),
            });
        }
    }
    out
}

/// A letter written in generator symbols of `kind`, or `None` if its level is not reachable.
pub fn letter_expr(kind: PresentationKind, l: Letter) -> Option<Expr> {
    let r = l.level();
    let allowed = |s: GeneratorSymbol| kind.allows(s).then(|| Expr::sym(s));
    for sign in [1i8, -1] {
        for i in 1..=3u8 {
            let (x, c) = x_letter(sign, i, r);
            if x == l {
                return allowed(GeneratorSymbol::x(sign, i, r)).map(|e| Expr::scale_int(c, e));
            }
        }
    }
    let base = l.base();
    if let Some(i) = base.cartan_node() {
        let direct = match (kind, r) {
            (PresentationKind::Levendorskii, 1) => allowed(GeneratorSymbol::tilde_cartan(i, 1)),
            (PresentationKind::Levendorskii, 0)
            | (PresentationKind::Lie, 0)
            | (PresentationKind::Drinfeld, _) => allowed(GeneratorSymbol::cartan(i, r)),
            _ => None,
        };
        if direct.is_some() {
            return direct;
        }
    }
    if base == LieBasisElement::P {
        if let Some(e) = allowed(GeneratorSymbol::p_plus(r)) {
            return Some(e);
        }
    }
    if base == LieBasisElement::K {
        if let Some(e) = allowed(GeneratorSymbol::p_minus(r)) {
            return Some(Expr::neg(e));
        }
    }
    for s in seeds(kind, r) {
        let mut terms = s.value.terms();
        let (Some((w, c)), None) = (terms.next(), terms.next()) else {
            continue;
        };
        if w.symbols() != [l] {
            continue;
        }
        let a = letter_expr(kind, s.a)?;
        let b = letter_expr(kind, s.b)?;
        return Some(Expr::scale(c.recip(), Expr::bracket(a, b)));
    }
    None
}
