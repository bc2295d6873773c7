//! Generator symbols and words of the free Z2-graded algebra.

use std::fmt;

use super::word::Generator;

/// Z2 parity: 0 even, 1 odd.
pub type Parity = u8;

/// Index parity of a matrix row/column: p(1)=p(2)=0, p(3)=p(4)=1.
pub fn index_parity(i: u8) -> Parity {
    if i >= 3 {
        1
    } else {
        0
    }
}

/// Families of generator symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    XMinus,
    Cartan,
    TildeCartan,
    XPlus,
    CentralPPlus,
    CentralPMinus,
    MatrixUnit,
}

/// Error raised when a symbol violates its family's invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("node {0} is outside 1..=3")]
    BadNode(u8),
    #[error("matrix unit indices ({0},{1}) must be distinct and within 1..=4")]
    BadMatrixIndex(u8, u8),
    #[error("tilde Cartan symbols exist only at levels 1 and 2, got {0}")]
    BadTildeLevel(u32),
}

/// A graded, leveled generator of the free algebra.
///
/// Parity is a function of the family and node, so it is never stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    family: Family,
    a: u8,
    b: u8,
    level: u32,
}

fn check_node(i: u8) -> Result<(), SymbolError> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(SymbolError::BadNode(i))
    }
}

impl GeneratorSymbol {
    pub fn try_x_plus(i: u8, level: u32) -> Result<Self, SymbolError> {
        check_node(i)?;
        Ok(Self {
            family: Family::XPlus,
            a: i,
            b: 0,
            level,
        })
    }

    pub fn try_x_minus(i: u8, level: u32) -> Result<Self, SymbolError> {
        check_node(i)?;
        Ok(Self {
            family: Family::XMinus,
            a: i,
            b: 0,
            level,
        })
    }

    pub fn try_cartan(i: u8, level: u32) -> Result<Self, SymbolError> {
        check_node(i)?;
        Ok(Self {
            family: Family::Cartan,
            a: i,
            b: 0,
            level,
        })
    }

    pub fn try_tilde_cartan(i: u8, level: u32) -> Result<Self, SymbolError> {
        check_node(i)?;
        if !(1..=2).contains(&level) {
            return Err(SymbolError::BadTildeLevel(level));
        }
        Ok(Self {
            family: Family::TildeCartan,
            a: i,
            b: 0,
            level,
        })
    }

    pub fn try_matrix_unit(i: u8, j: u8) -> Result<Self, SymbolError> {
        if i == j || !(1..=4).contains(&i) || !(1..=4).contains(&j) {
            return Err(SymbolError::BadMatrixIndex(i, j));
        }
        Ok(Self {
            family: Family::MatrixUnit,
            a: i,
            b: j,
            level: 0,
        })
    }

    /// `x⁺_{i,r}`. Panics on a node outside 1..=3.
    pub fn x_plus(i: u8, level: u32) -> Self {
        Self::try_x_plus(i, level).expect("valid node")
    }

    /// `x⁻_{i,r}`. Panics on a node outside 1..=3.
    pub fn x_minus(i: u8, level: u32) -> Self {
        Self::try_x_minus(i, level).expect("valid node")
    }

    /// `x^±_{i,r}` with the sign given as `+1` or `-1`.
    pub fn x(sign: i8, i: u8, level: u32) -> Self {
        if sign > 0 {
            Self::x_plus(i, level)
        } else {
            Self::x_minus(i, level)
        }
    }

    /// `h_{i,r}`. Panics on a node outside 1..=3.
    pub fn cartan(i: u8, level: u32) -> Self {
        Self::try_cartan(i, level).expect("valid node")
    }

    /// `h̃_{i,r}` for r in {1,2}. Panics otherwise.
    pub fn tilde_cartan(i: u8, level: u32) -> Self {
        Self::try_tilde_cartan(i, level).expect("valid tilde Cartan")
    }

    pub fn p_plus(level: u32) -> Self {
        Self {
            family: Family::CentralPPlus,
            a: 0,
            b: 0,
            level,
        }
    }

    pub fn p_minus(level: u32) -> Self {
        Self {
            family: Family::CentralPMinus,
            a: 0,
            b: 0,
            level,
        }
    }

    /// `P^±_r` with the sign given as `+1` or `-1`.
    pub fn p(sign: i8, level: u32) -> Self {
        if sign > 0 {
            Self::p_plus(level)
        } else {
            Self::p_minus(level)
        }
    }

    /// `E_{ij}`. Panics on invalid indices.
    pub fn matrix_unit(i: u8, j: u8) -> Self {
        Self::try_matrix_unit(i, j).expect("valid matrix unit")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Node index for Chevalley families (0 for centrals and matrix units).
    pub fn node(&self) -> u8 {
        match self.family {
            Family::MatrixUnit | Family::CentralPPlus | Family::CentralPMinus => 0,
            _ => self.a,
        }
    }

    /// Row and column of a matrix unit.
    pub fn matrix_indices(&self) -> Option<(u8, u8)> {
        (self.family == Family::MatrixUnit).then_some((self.a, self.b))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn parity(&self) -> Parity {
        Generator::parity(self)
    }

    /// The same symbol at another level (matrix units and tilde Cartans excluded).
    pub fn with_level(&self, level: u32) -> Option<Self> {
        match self.family {
            Family::MatrixUnit => None,
            Family::TildeCartan => Self::try_tilde_cartan(self.a, level).ok(),
            _ => Some(Self { level, ..*self }),
        }
    }
}

impl Generator for GeneratorSymbol {
    fn parity(&self) -> Parity {
        match self.family {
            Family::XPlus | Family::XMinus => u8::from(self.a == 2),
            Family::MatrixUnit => (index_parity(self.a) + index_parity(self.b)) % 2,
            _ => 0,
        }
    }

    fn level(&self) -> u32 {
        self.level
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::XPlus => write!(f, "x+[{},{}]", self.a, self.level),
            Family::XMinus => write!(f, "x-[{},{}]", self.a, self.level),
            Family::Cartan => write!(f, "h[{},{}]", self.a, self.level),
            Family::TildeCartan => write!(f, "ht[{},{}]", self.a, self.level),
            Family::CentralPPlus => write!(f, "P+[{}]", self.level),
            Family::CentralPMinus => write!(f, "P-[{}]", self.level),
            Family::MatrixUnit => write!(f, "E[{},{}]", self.a, self.b),
        }
    }
}

/// Filtration degree, with the zero polynomial sitting at minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::word::Word;
    use super::*;

    #[test]
    fn forced_parities() {
        for r in 0..4 {
            assert_eq!(GeneratorSymbol::x_plus(2, r).parity(), 1);
            assert_eq!(GeneratorSymbol::x_minus(2, r).parity(), 1);
            assert_eq!(GeneratorSymbol::x_plus(1, r).parity(), 0);
            assert_eq!(GeneratorSymbol::p_plus(r).parity(), 0);
        }
        assert_eq!(GeneratorSymbol::matrix_unit(1, 3).parity(), 1);
        assert_eq!(GeneratorSymbol::matrix_unit(3, 4).parity(), 0);
        assert_eq!(GeneratorSymbol::matrix_unit(2, 1).parity(), 0);
    }

    #[test]
    fn invalid_symbols_rejected() {
        assert!(GeneratorSymbol::try_matrix_unit(2, 2).is_err());
        assert!(GeneratorSymbol::try_matrix_unit(0, 2).is_err());
        assert!(GeneratorSymbol::try_tilde_cartan(1, 3).is_err());
        assert!(GeneratorSymbol::try_x_plus(4, 0).is_err());
    }

    #[test]
    fn word_degree_and_parity() {
        let w = Word::from_symbols([
            GeneratorSymbol::x_plus(2, 1),
            GeneratorSymbol::tilde_cartan(1, 1),
            GeneratorSymbol::matrix_unit(1, 3),
        ]);
        assert_eq!(w.degree(), 2);
        assert_eq!(w.parity(), 0);
        assert_eq!(Word::<GeneratorSymbol>::unit().degree(), 0);
        assert_eq!(w.to_string(), "x+[2,1]*ht[1,1]*E[1,3]");
    }
}
