//! The 17 basis elements of g and their leveled lifts used as PBW letters.

use std::fmt;

use crate::free_superalgebra::{
    index_parity, Family, FreePolynomial, Generator, GeneratorSymbol, Parity, Scalar,
    SuperPolynomial,
};

/// Off-diagonal matrix units in PBW order: negative roots, then positive roots.
const NEGATIVE: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
const POSITIVE: [(u8, u8); 6] = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)];

/// One of the 17 chosen basis elements of g, indexed by its PBW position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieBasisElement(u8);

impl LieBasisElement {
    pub const COUNT: usize = 17;
    pub const P: Self = Self(15);
    pub const K: Self = Self(16);

    pub fn from_index(i: usize) -> Self {
        assert!(i < Self::COUNT, "basis index out of range");
        Self(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (0..Self::COUNT as u8).map(Self)
    }

    /// `E_{ij}` for `i ≠ j`.
    pub fn e(i: u8, j: u8) -> Self {
        if let Some(k) = NEGATIVE.iter().position(|&p| p == (i, j)) {
            Self(k as u8)
        } else if let Some(k) = POSITIVE.iter().position(|&p| p == (i, j)) {
            Self(9 + k as u8)
        } else {
            panic!("E[{i},{j}] is not an off-diagonal matrix unit")
        }
    }

    /// Cartan element `h_i`.
    pub fn h(i: u8) -> Self {
        assert!((1..=3).contains(&i), "Cartan node out of range");
        Self(5 + i)
    }

    pub fn matrix_indices(self) -> Option<(u8, u8)> {
        match self.0 {
            0..=5 => Some(NEGATIVE[self.0 as usize]),
            9..=14 => Some(POSITIVE[self.0 as usize - 9]),
            _ => None,
        }
    }

    pub fn cartan_node(self) -> Option<u8> {
        (6..=8).contains(&self.0).then(|| self.0 - 5)
    }

    /// Weight as a vector in the weight lattice of the diagonal, `E_ij ↦ ε_i − ε_j`.
    pub fn weight(self) -> [i8; 4] {
        let mut w = [0i8; 4];
        match self.matrix_indices() {
            Some((i, j)) => {
                w[usize::from(i) - 1] += 1;
                w[usize::from(j) - 1] -= 1;
            }
            None if self == Self::P => w = [-1, -1, 1, 1],
            None if self == Self::K => w = [1, 1, -1, -1],
            None => {}
        }
        w
    }

    pub fn is_central(self) -> bool {
        self.0 >= 15
    }

    pub fn parity(self) -> Parity {
        match self.matrix_indices() {
            Some((i, j)) => (index_parity(i) + index_parity(j)) % 2,
            None => 0,
        }
    }

    /// The element written in generator symbols; `K` is `−P⁻₀`.
    pub fn to_symbol_poly(self) -> SuperPolynomial {
        if let Some((i, j)) = self.matrix_indices() {
            SuperPolynomial::from_symbol(GeneratorSymbol::matrix_unit(i, j))
        } else if let Some(i) = self.cartan_node() {
            SuperPolynomial::from_symbol(GeneratorSymbol::cartan(i, 0))
        } else if self == Self::P {
            SuperPolynomial::from_symbol(GeneratorSymbol::p_plus(0))
        } else {
            SuperPolynomial::from_symbol(GeneratorSymbol::p_minus(0)).neg()
        }
    }

    /// Inverse of [`Self::to_symbol_poly`] on single symbols.
    pub fn from_symbol(s: GeneratorSymbol) -> Option<(Self, Scalar)> {
        if s.level() != 0 {
            return None;
        }
        match s.family() {
            Family::MatrixUnit => {
                let (i, j) = s.matrix_indices()?;
                Some((Self::e(i, j), Scalar::one()))
            }
            Family::Cartan => Some((Self::h(s.node()), Scalar::one())),
            Family::CentralPPlus => Some((Self::P, Scalar::one())),
            Family::CentralPMinus => Some((Self::K, Scalar::from_int(-1))),
            _ => None,
        }
    }
}

impl fmt::Display for LieBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((i, j)) = self.matrix_indices() {
            write!(f, "E[{i},{j}]")
        } else if let Some(i) = self.cartan_node() {
            write!(f, "h[{i},0]")
        } else if *self == Self::P {
            write!(f, "P")
        } else {
            write!(f, "K")
        }
    }
}

/// A basis element lifted to a filtration level. Ordered by level, then basis position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    level: u8,
    base: LieBasisElement,
}

impl Letter {
    pub fn new(base: LieBasisElement, level: u32) -> Self {
        Self {
            level: u8::try_from(level).expect("letter level fits in u8"),
            base,
        }
    }

    pub fn base(self) -> LieBasisElement {
        self.base
    }

    /// Dense index `level·17 + base`.
    pub fn code(self) -> usize {
        self.level as usize * LieBasisElement::COUNT + self.base.index()
    }

    pub fn from_code(code: usize) -> Self {
        Self::new(
            LieBasisElement::from_index(code % LieBasisElement::COUNT),
            (code / LieBasisElement::COUNT) as u32,
        )
    }
}

impl Generator for Letter {
    fn parity(&self) -> Parity {
        self.base.parity()
    }

    fn level(&self) -> u32 {
        u32::from(self.level)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.level;
        if let Some((i, j)) = self.base.matrix_indices() {
            write!(f, "E[{i},{j};{r}]")
        } else if let Some(i) = self.base.cartan_node() {
            write!(f, "h[{i};{r}]")
        } else if self.base == LieBasisElement::P {
            write!(f, "P[{r}]")
        } else {
            write!(f, "K[{r}]")
        }
    }
}

/// Polynomials over PBW letters.
pub type LetterPoly = FreePolynomial<Letter>;

/// Level-0 letter polynomial rewritten in generator symbols.
pub fn level0_to_symbols(p: &LetterPoly) -> SuperPolynomial {
    p.substitute(|l| {
        assert_eq!(
            Generator::level(l),
            0,
            "only level-0 letters are Lie basis elements"
        );
        l.base().to_symbol_poly()
    })
}
