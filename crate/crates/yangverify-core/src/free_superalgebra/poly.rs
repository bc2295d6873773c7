//! Sparse polynomials in the free Z2-graded associative algebra.

use std::fmt;

use rustc_hash::FxHashMap;

use super::scalar::Scalar;
use super::symbol::{Degree, GeneratorSymbol, Parity};
use super::word::{Generator, Word};
use super::AlgebraError;

/// A finite rational linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePolynomial<G: Generator> {
    terms: FxHashMap<Word<G>, Scalar>,
}

/// Polynomials over the generator symbols of the Yangian presentations.
pub type SuperPolynomial = FreePolynomial<GeneratorSymbol>;

impl<G: Generator> Default for FreePolynomial<G> {
    fn default() -> Self {
        Self {
            terms: FxHashMap::default(),
        }
    }
}

impl<G: Generator> FreePolynomial<G> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_word(Word::unit(), c)
    }

    pub fn from_word(w: Word<G>, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_symbol(s: G) -> Self {
        Self::from_word(Word::single(s), Scalar::one())
    }

    /// Product of symbols with coefficient one.
    pub fn monomial<I: IntoIterator<Item = G>>(symbols: I) -> Self {
        Self::from_word(Word::from_symbols(symbols), Scalar::one())
    }

    pub fn add_term(&mut self, w: Word<G>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word<G>) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<G>, &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted by (length, word) for stable output.
    pub fn sorted_terms(&self) -> Vec<(&Word<G>, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * k);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::from_int(-1));
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Free associative product: concatenation of words, no signs.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                r.add_term(w1.concat(w2), c1 * c2);
            }
        }
        r
    }

    /// Parity of a homogeneous polynomial; `None` for zero.
    pub fn parity(&self) -> Result<Option<Parity>, AlgebraError> {
        let mut it = self.terms.keys().map(|w| w.parity());
        let Some(p) = it.next() else { return Ok(None) };
        if it.all(|q| q == p) {
            Ok(Some(p))
        } else {
            Err(AlgebraError::MixedParity)
        }
    }

    /// Maximum word degree; minus infinity for zero.
    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|w| Degree::Finite(w.degree()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Length of the longest word (0 for zero).
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn bracket_sign(p: &Self, q: &Self) -> Result<Scalar, AlgebraError> {
        let a = p.parity()?.unwrap_or(0);
        let b = q.parity()?.unwrap_or(0);
        Ok(Scalar::sign(u32::from(a * b)))
    }

    /// `[p,q] = pq − (−1)^{|p||q|} qp`.
    pub fn super_bracket(&self, other: &Self) -> Result<Self, AlgebraError> {
        let s = Self::bracket_sign(self, other)?;
        let mut r = self.multiply(other);
        r.add_scaled(&other.multiply(self), &-s);
        Ok(r)
    }

    /// `{p,q} = pq + (−1)^{|p||q|} qp`.
    pub fn anti_bracket(&self, other: &Self) -> Result<Self, AlgebraError> {
        let s = Self::bracket_sign(self, other)?;
        let mut r = self.multiply(other);
        r.add_scaled(&other.multiply(self), &s);
        Ok(r)
    }

    /// Extends a map on generators to an algebra homomorphism into another free algebra.
    pub fn substitute<H, F>(&self, mut f: F) -> FreePolynomial<H>
    where
        H: Generator,
        F: FnMut(&G) -> FreePolynomial<H>,
    {
        let mut cache: FxHashMap<G, FreePolynomial<H>> = FxHashMap::default();
        let mut r = FreePolynomial::zero();
        for (w, c) in &self.terms {
            let mut acc = FreePolynomial::constant(c.clone());
            for s in w.symbols() {
                let img = cache.entry(*s).or_insert_with(|| f(s));
                acc = acc.multiply(img);
                if acc.is_zero() {
                    break;
                }
            }
            r.add_assign(&acc);
        }
        r
    }

    /// Applies a linear map word by word.
    pub fn map_words<H, F>(&self, mut f: F) -> FreePolynomial<H>
    where
        H: Generator,
        F: FnMut(&Word<G>) -> FreePolynomial<H>,
    {
        let mut r = FreePolynomial::zero();
        for (w, c) in &self.terms {
            r.add_scaled(&f(w), c);
        }
        r
    }

    /// Keeps only the words of the given filtration degree.
    pub fn degree_component(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Symbols occurring anywhere in the polynomial.
    pub fn symbols(&self) -> Vec<G> {
        let mut v: Vec<_> = self
            .terms
            .keys()
            .flat_map(|w| w.symbols().iter().copied())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Writes `coef*body` terms joined by signs, as accepted by the expression grammar.
pub(crate) fn write_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, Scalar, bool)>,
) -> fmt::Result {
    let mut first = true;
    for (body, c, is_unit) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if is_unit {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{a}*{body}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<G: Generator> fmt::Display for FreePolynomial<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| (w, c.clone(), w.is_empty())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type G = GeneratorSymbol;

    fn s(x: G) -> SuperPolynomial {
        SuperPolynomial::from_symbol(x)
    }

    #[test]
    fn concatenation_product() {
        let p = s(G::x_plus(1, 0)).multiply(&s(G::x_minus(1, 0)));
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "x+[1,0]*x-[1,0]");
        let a = s(G::x_plus(1, 0)).scale(&Scalar::new(2, 3));
        let b = s(G::cartan(1, 0)).scale(&Scalar::new(3, 2));
        assert_eq!(
            a.multiply(&b),
            SuperPolynomial::monomial([G::x_plus(1, 0), G::cartan(1, 0)])
        );
    }

    #[test]
    fn brackets_follow_parity() {
        let ee = s(G::x_plus(1, 0))
            .super_bracket(&s(G::x_minus(1, 0)))
            .unwrap();
        assert_eq!(ee.to_string(), "-x-[1,0]*x+[1,0] + x+[1,0]*x-[1,0]");
        let oo = s(G::x_plus(2, 0))
            .super_bracket(&s(G::x_minus(2, 0)))
            .unwrap();
        assert_eq!(oo.to_string(), "x-[2,0]*x+[2,0] + x+[2,0]*x-[2,0]");
        let mixed = s(G::x_plus(1, 0)).add(&s(G::x_plus(2, 0)));
        assert_eq!(
            mixed.super_bracket(&s(G::cartan(1, 0))),
            Err(AlgebraError::MixedParity)
        );
        let anti = s(G::x_plus(2, 0))
            .anti_bracket(&s(G::x_plus(2, 0)))
            .unwrap();
        assert!(anti.is_zero());
        let hx = s(G::cartan(1, 0))
            .anti_bracket(&s(G::x_plus(1, 0)))
            .unwrap();
        assert_eq!(hx.to_string(), "h[1,0]*x+[1,0] + x+[1,0]*h[1,0]");
    }

    #[test]
    fn substitution_is_multiplicative() {
        let p = s(G::x_plus(1, 0))
            .multiply(&s(G::x_minus(1, 0)))
            .add(&SuperPolynomial::constant(Scalar::from_int(3)));
        let img = p.substitute(|g| s(*g).scale(&Scalar::from_int(2)));
        assert_eq!(img.to_string(), "3 + 4*x+[1,0]*x-[1,0]");
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(SuperPolynomial::zero().degree(), Degree::NegInfinity);
        assert_eq!(s(G::tilde_cartan(1, 1)).degree(), Degree::Finite(1));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }
}
