//! Koszul-signed tensor powers of the free algebra.

use std::fmt;

use rustc_hash::FxHashMap;

use super::poly::{write_terms, FreePolynomial};
use super::scalar::Scalar;
use super::symbol::{Degree, GeneratorSymbol, Parity};
use super::word::{Generator, Word};
use super::AlgebraError;

/// A finite rational linear combination of `N`-tuples of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeTensor<G: Generator, const N: usize> {
    terms: FxHashMap<[Word<G>; N], Scalar>,
}

/// Elements of the tensor square of the free algebra on generator symbols.
pub type TensorPolynomial = FreeTensor<GeneratorSymbol, 2>;

impl<G: Generator, const N: usize> Default for FreeTensor<G, N> {
    fn default() -> Self {
        Self {
            terms: FxHashMap::default(),
        }
    }
}

fn key_parity<G: Generator, const N: usize>(key: &[Word<G>; N]) -> Parity {
    key.iter().map(|w| w.parity()).sum::<u8>() % 2
}

/// Sign from moving the factors of `b` past the later factors of `a`.
fn koszul_sign<G: Generator, const N: usize>(a: &[Word<G>; N], b: &[Word<G>; N]) -> bool {
    let mut odd = 0u8;
    let mut later = 0u8;
    for k in (0..N).rev() {
        odd ^= later & b[k].parity();
        later ^= a[k].parity();
    }
    odd == 1
}

impl<G: Generator, const N: usize> FreeTensor<G, N> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ ⋯ ⊗ 1`.
    pub fn one() -> Self {
        Self::from_key(std::array::from_fn(|_| Word::unit()), Scalar::one())
    }

    pub fn from_key(key: [Word<G>; N], c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(key, c);
        t
    }

    /// Tensor product of `N` polynomials.
    pub fn pure(factors: [&FreePolynomial<G>; N]) -> Self {
        let mut acc: Vec<(Vec<Word<G>>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * d));
                }
            }
            acc = next;
        }
        let mut t = Self::zero();
        for (ws, c) in acc {
            let key: [Word<G>; N] = ws.try_into().unwrap_or_else(|_| unreachable!());
            t.add_term(key, c);
        }
        t
    }

    /// The polynomial `p` placed in slot `k`, with units elsewhere.
    pub fn in_slot(p: &FreePolynomial<G>, k: usize) -> Self {
        let mut t = Self::zero();
        for (w, c) in p.terms() {
            let key = std::array::from_fn(|i| if i == k { w.clone() } else { Word::unit() });
            t.add_term(key, c.clone());
        }
        t
    }

    pub fn add_term(&mut self, key: [Word<G>; N], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn coefficient(&self, key: &[Word<G>; N]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Word<G>; N], &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted by total length, then lexicographically.
    pub fn sorted_terms(&self) -> Vec<(&[Word<G>; N], &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let la: usize = a.0.iter().map(|w| w.len()).sum();
            let lb: usize = b.0.iter().map(|w| w.len()).sum();
            (la, a.0).cmp(&(lb, b.0))
        });
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * s);
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

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// `(a₁⊗⋯⊗a_N)(b₁⊗⋯⊗b_N) = ±a₁b₁⊗⋯⊗a_Nb_N` with the Koszul sign.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = std::array::from_fn(|i| ka[i].concat(&kb[i]));
                let c = ca * cb;
                r.add_term(key, if koszul_sign(ka, kb) { -c } else { c });
            }
        }
        r
    }

    /// Koszul-signed product where each slot's product of words is computed by `f`.
    pub fn multiply_with<E, F>(&self, other: &Self, mut f: F) -> Result<Self, E>
    where
        F: FnMut(&Word<G>, &Word<G>) -> Result<FreePolynomial<G>, E>,
    {
        let mut r = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut images = Vec::with_capacity(N);
                for i in 0..N {
                    images.push(f(&ka[i], &kb[i])?);
                }
                let refs: [&FreePolynomial<G>; N] = std::array::from_fn(|i| &images[i]);
                let c = ca * cb;
                r.add_scaled(&Self::pure(refs), &if koszul_sign(ka, kb) { -c } else { c });
            }
        }
        Ok(r)
    }

    /// Longest word in any slot.
    pub fn max_word_len(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|k| k.iter().map(Word::len))
            .max()
            .unwrap_or(0)
    }

    /// Total parity of a homogeneous element; `None` for zero.
    pub fn parity(&self) -> Result<Option<Parity>, AlgebraError> {
        let mut it = self.terms.keys().map(key_parity);
        let Some(p) = it.next() else { return Ok(None) };
        if it.all(|q| q == p) {
            Ok(Some(p))
        } else {
            Err(AlgebraError::MixedParity)
        }
    }

    fn bracket_with(&self, other: &Self, anti: bool) -> Result<Self, AlgebraError> {
        let a = self.parity()?.unwrap_or(0);
        let b = other.parity()?.unwrap_or(0);
        let mut s = Scalar::sign(u32::from(a * b));
        if !anti {
            s = -s;
        }
        let mut r = self.multiply(other);
        r.add_scaled(&other.multiply(self), &s);
        Ok(r)
    }

    /// Graded commutator under the Koszul product.
    pub fn bracket(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.bracket_with(other, false)
    }

    /// Graded anticommutator under the Koszul product.
    pub fn anti_bracket(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.bracket_with(other, true)
    }

    /// Maximum total degree of a key; minus infinity for zero.
    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|k| Degree::Finite(k.iter().map(|w| w.degree()).sum()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// All keys of total degree `k`.
    pub fn degree_component(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.iter().map(|w| w.degree()).sum::<u32>() == k)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map to each factor independently. The maps must preserve parity.
    pub fn map_factors<H, F>(&self, mut f: F) -> FreeTensor<H, N>
    where
        H: Generator,
        F: FnMut(usize, &Word<G>) -> FreePolynomial<H>,
    {
        let mut r = FreeTensor::zero();
        for (key, c) in &self.terms {
            let images: Vec<FreePolynomial<H>> = (0..N).map(|i| f(i, &key[i])).collect();
            let refs: [&FreePolynomial<H>; N] = std::array::from_fn(|i| &images[i]);
            r.add_scaled(&FreeTensor::pure(refs), c);
        }
        r
    }
}

impl<G: Generator> FreeTensor<G, 2> {
    /// Graded flip `σ(x⊗y) = (−1)^{|x||y|} y⊗x`.
    pub fn graded_flip(&self) -> Self {
        let mut r = Self::zero();
        for ([a, b], c) in &self.terms {
            let c = if a.parity() * b.parity() == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            r.add_term([b.clone(), a.clone()], c);
        }
        r
    }

    /// Multiplication map `μ(x⊗y) = xy`.
    pub fn contract(&self) -> FreePolynomial<G> {
        let mut r = FreePolynomial::zero();
        for ([a, b], c) in &self.terms {
            r.add_term(a.concat(b), c.clone());
        }
        r
    }
}

struct TensorKey<'a, G: Generator, const N: usize>(&'a [Word<G>; N]);

impl<G: Generator, const N: usize> fmt::Display for TensorKey<'_, G, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " (x) ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl<G: Generator, const N: usize> fmt::Display for FreeTensor<G, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.sorted_terms()
                .into_iter()
                .map(|(k, c)| (TensorKey(k), c.clone(), false)),
        )
    }
}
