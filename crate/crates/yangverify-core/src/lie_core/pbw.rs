//! PBW straightening of words in ordered letters against a bracket table.

use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::free_superalgebra::{Generator, Scalar, Word};

use super::basis::{Letter, LetterPoly};
use super::table::StructureTable;

/// A table lookup for `[a,b]` with `a ≤ b` in letter order.
pub enum Entry<'a> {
    Known(&'a LetterPoly),
    /// A bracket still being solved for, identified by an unknown id.
    Unknown(u32),
    Missing,
}

/// Source of brackets `[a,b]` for letters `a ≤ b`.
pub trait BracketSource {
    fn entry(&self, a: Letter, b: Letter) -> Entry<'_>;
}

/// The level-0 structure table viewed as a bracket source.
pub struct LieTable;

impl BracketSource for LieTable {
    fn entry(&self, a: Letter, b: Letter) -> Entry<'_> {
        if a.level() != 0 || b.level() != 0 {
            return Entry::Missing;
        }
        Entry::Known(StructureTable::get().bracket_letters(a.base(), b.base()))
    }
}

/// Reasons straightening can stop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum StraightenError {
    #[error("bracket entry {0} is needed before this product can be ordered")]
    NeedsEntry(u32),
    #[error("no bracket available for {0} and {1}")]
    Missing(Letter, Letter),
    #[error("straightening budget exhausted")]
    Budget,
}

/// A normal-ordered polynomial plus a scalar-linear combination of unknown brackets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinPoly {
    pub known: LetterPoly,
    pub lin: BTreeMap<u32, Scalar>,
}

impl LinPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn known(p: LetterPoly) -> Self {
        Self {
            known: p,
            lin: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::known(LetterPoly::constant(c))
    }

    pub fn letter(l: Letter) -> Self {
        Self::known(LetterPoly::from_symbol(l))
    }

    pub fn unknown(id: u32, c: Scalar) -> Self {
        let mut r = Self::zero();
        r.add_unknown(id, c);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.known.is_zero() && self.lin.is_empty()
    }

    pub fn add_unknown(&mut self, id: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.lin.entry(id).or_default();
        *e += &c;
        if e.is_zero() {
            self.lin.remove(&id);
        }
    }

    pub fn add_scaled(&mut self, other: &LinPoly, c: &Scalar) {
        self.known.add_scaled(&other.known, c);
        for (id, d) in &other.lin {
            self.add_unknown(*id, d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    /// The scalar value if the polynomial is a constant with no unknowns.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.lin.is_empty() || self.known.max_word_len() > 0 {
            return None;
        }
        Some(self.known.coefficient(&Word::unit()))
    }

    fn first_unknown(&self) -> Option<u32> {
        self.lin.keys().next().copied()
    }
}

impl fmt::Display for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.known)?;
        for (id, c) in &self.lin {
            write!(f, " + ({c})*U{id}")?;
        }
        Ok(())
    }
}

/// Whether a word is an ordered PBW monomial with no repeated odd letter.
pub fn is_pbw_monomial(w: &Word<Letter>) -> bool {
    w.symbols()
        .windows(2)
        .all(|p| p[0] < p[1] || (p[0] == p[1] && p[0].parity() == 0))
}

fn koszul(a: Letter, b: Letter) -> Scalar {
    Scalar::sign(u32::from(a.parity() * b.parity()))
}

type MemoKey = (Word<Letter>, Letter);

/// Memoizing normal-orderer. The bracket source is passed to every call, so the source may
/// gain entries between calls.
#[derive(Default)]
pub struct Straightener {
    memo: FxHashMap<MemoKey, Rc<LinPoly>>,
    with_unknowns: Vec<MemoKey>,
    swaps: u64,
    budget: Option<u64>,
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    /// A straightener that fails with [`StraightenError::Budget`] after `budget` swaps.
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }

    /// Number of straightening steps performed so far (each memo miss that swapped letters).
    pub fn swaps(&self) -> u64 {
        self.swaps
    }

    /// Drops cached products that still mention unknown entries.
    pub fn forget_unknowns(&mut self) {
        for k in self.with_unknowns.drain(..) {
            self.memo.remove(&k);
        }
    }

    /// `m · x` for an ordered word `m`, in normal order.
    pub fn insert<T: BracketSource>(
        &mut self,
        src: &T,
        m: &Word<Letter>,
        x: Letter,
    ) -> Result<Rc<LinPoly>, StraightenError> {
        let key = (m.clone(), x);
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.clone());
        }
        let r = Rc::new(self.insert_uncached(src, m, x)?);
        if !r.lin.is_empty() {
            self.with_unknowns.push(key.clone());
        }
        self.memo.insert(key, r.clone());
        Ok(r)
    }

    fn insert_uncached<T: BracketSource>(
        &mut self,
        src: &T,
        m: &Word<Letter>,
        x: Letter,
    ) -> Result<LinPoly, StraightenError> {
        let Some(&y) = m.last() else {
            return Ok(LinPoly::letter(x));
        };
        if y < x || (y == x && x.parity() == 0) {
            let mut w = m.clone();
            w.push(x);
            return Ok(LinPoly::known(LetterPoly::from_word(w, Scalar::one())));
        }
        self.swaps += 1;
        if self.budget.is_some_and(|b| self.swaps > b) {
            return Err(StraightenError::Budget);
        }
        let mut prefix = m.clone();
        prefix.pop();
        if y == x {
            return self.prefix_times_entry(src, &prefix, x, x, &Scalar::new(1, 2));
        }
        let s = koszul(x, y);
        let head = self.insert(src, &prefix, x)?;
        if let Some(id) = head.first_unknown() {
            return Err(StraightenError::NeedsEntry(id));
        }
        let mut out = LinPoly::zero();
        for (w, c) in head.known.terms() {
            let t = self.insert(src, w, y)?;
            out.add_scaled(&t, &(c * &s));
        }
        let tail = self.prefix_times_entry(src, &prefix, x, y, &-s)?;
        out.add_scaled(&tail, &Scalar::one());
        Ok(out)
    }

    fn prefix_times_entry<T: BracketSource>(
        &mut self,
        src: &T,
        prefix: &Word<Letter>,
        a: Letter,
        b: Letter,
        c: &Scalar,
    ) -> Result<LinPoly, StraightenError> {
        match src.entry(a, b) {
            Entry::Known(p) => {
                let p = p.clone();
                let mut out = LinPoly::zero();
                for (w, d) in p.terms() {
                    let t = self.mul_word_letters(src, prefix, w.symbols())?;
                    out.add_scaled(&t, &(c * d));
                }
                Ok(out)
            }
            Entry::Unknown(id) if prefix.is_empty() => Ok(LinPoly::unknown(id, c.clone())),
            Entry::Unknown(id) => Err(StraightenError::NeedsEntry(id)),
            Entry::Missing => Err(StraightenError::Missing(a, b)),
        }
    }

    /// `m · q₁ ⋯ q_k` for an ordered word `m`.
    pub fn mul_word_letters<T: BracketSource>(
        &mut self,
        src: &T,
        m: &Word<Letter>,
        q: &[Letter],
    ) -> Result<LinPoly, StraightenError> {
        let mut cur = LinPoly::known(LetterPoly::from_word(m.clone(), Scalar::one()));
        for &x in q {
            if let Some(id) = cur.first_unknown() {
                return Err(StraightenError::NeedsEntry(id));
            }
            let mut next = LinPoly::zero();
            for (w, c) in cur.known.terms() {
                let t = self.insert(src, w, x)?;
                next.add_scaled(&t, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Normal form of an arbitrary letter polynomial.
    pub fn normal_order<T: BracketSource>(
        &mut self,
        src: &T,
        p: &LetterPoly,
    ) -> Result<LinPoly, StraightenError> {
        let mut out = LinPoly::zero();
        for (w, c) in p.terms() {
            let t = self.mul_word_letters(src, &Word::unit(), w.symbols())?;
            out.add_scaled(&t, c);
        }
        Ok(out)
    }

    /// Product of two normal-ordered values. Unknowns may only be scaled by constants.
    pub fn multiply<T: BracketSource>(
        &mut self,
        src: &T,
        a: &LinPoly,
        b: &LinPoly,
    ) -> Result<LinPoly, StraightenError> {
        let mut out = LinPoly::zero();
        if !a.lin.is_empty() {
            let s = b
                .as_scalar()
                .ok_or(StraightenError::NeedsEntry(a.first_unknown().unwrap_or(0)))?;
            for (id, c) in &a.lin {
                out.add_unknown(*id, c * &s);
            }
        }
        if !b.lin.is_empty() {
            let s = LinPoly::known(a.known.clone())
                .as_scalar()
                .ok_or(StraightenError::NeedsEntry(b.first_unknown().unwrap_or(0)))?;
            for (id, c) in &b.lin {
                out.add_unknown(*id, c * &s);
            }
        }
        for (wa, ca) in a.known.terms() {
            for (wb, cb) in b.known.terms() {
                let t = self.mul_word_letters(src, wa, wb.symbols())?;
                out.add_scaled(&t, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Super bracket of two normal-ordered values of the given parities.
    pub fn bracket<T: BracketSource>(
        &mut self,
        src: &T,
        a: &LinPoly,
        pa: u8,
        b: &LinPoly,
        pb: u8,
        anti: bool,
    ) -> Result<LinPoly, StraightenError> {
        let mut s = Scalar::sign(u32::from(pa * pb));
        if !anti {
            s = -s;
        }
        let mut r = self.multiply(src, a, b)?;
        let ba = self.multiply(src, b, a)?;
        r.add_scaled(&ba, &s);
        Ok(r)
    }
}

/// Normal form of a level-0 letter polynomial in U(g).
pub fn lie_normal_form(p: &LetterPoly) -> LetterPoly {
    let mut s = Straightener::new();
    s.normal_order(&LieTable, p)
        .expect("level-0 table is total")
        .known
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::basis::LieBasisElement;

    fn l(i: u8, j: u8) -> Letter {
        Letter::new(LieBasisElement::e(i, j), 0)
    }

    #[test]
    fn one_straightening_step() {
        let w = LetterPoly::monomial([l(2, 1), l(1, 2)]);
        let nf = lie_normal_form(&w);
        let expect = LetterPoly::monomial([l(1, 2), l(2, 1)]).add(&LetterPoly::from_symbol(
            Letter::new(LieBasisElement::h(1), 0),
        ));
        assert_eq!(nf, expect);
    }

    #[test]
    fn odd_square_of_e32_vanishes() {
        let w = LetterPoly::monomial([l(3, 2), l(3, 2)]);
        assert!(lie_normal_form(&w).is_zero());
    }

    #[test]
    fn ordered_monomials_are_fixed() {
        let w = LetterPoly::monomial([
            l(1, 2),
            l(1, 3),
            Letter::new(LieBasisElement::h(2), 0),
            l(4, 3),
        ]);
        assert!(is_pbw_monomial(w.terms().next().unwrap().0));
        assert_eq!(lie_normal_form(&w), w);
    }
}
