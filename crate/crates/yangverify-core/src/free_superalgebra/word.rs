//! Words over an arbitrary graded, leveled alphabet.

use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

use super::symbol::{GeneratorSymbol, Parity};

/// A letter of a free Z2-graded algebra carrying a filtration level.
pub trait Generator:
    Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn parity(&self) -> Parity;
    fn level(&self) -> u32;
}

/// A finite ordered sequence of generators. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<G = GeneratorSymbol>(SmallVec<[G; 6]>);

impl<G> Default for Word<G> {
    fn default() -> Self {
        Word(SmallVec::new())
    }
}

impl<G: Generator> Word<G> {
    pub fn unit() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_symbols<I: IntoIterator<Item = G>>(it: I) -> Self {
        Word(it.into_iter().collect())
    }

    pub fn single(s: G) -> Self {
        Word(smallvec::smallvec![s])
    }

    pub fn symbols(&self) -> &[G] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        self.0.iter().map(|s| s.parity()).sum::<u8>() % 2
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|s| s.level()).sum()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, s: G) {
        self.0.push(s);
    }

    pub fn pop(&mut self) -> Option<G> {
        self.0.pop()
    }

    pub fn last(&self) -> Option<&G> {
        self.0.last()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl<G: Generator> fmt::Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
