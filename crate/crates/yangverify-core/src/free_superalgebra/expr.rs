//! Unexpanded expression trees and their evaluation into concrete algebras.

use std::fmt;

use super::poly::SuperPolynomial;
use super::scalar::Scalar;
use super::symbol::{GeneratorSymbol, Parity};
use super::tensor::TensorPolynomial;
use super::AlgebraError;

/// An expression built from generator symbols by sums, products and brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Scalar),
    Sym(GeneratorSymbol),
    /// The central element `C₀ = −½h₁,₀ − h₂,₀ − ½h₃,₀`.
    C0,
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Scale(Scalar, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    AntiBracket(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn sym(s: GeneratorSymbol) -> Self {
        Expr::Sym(s)
    }

    pub fn int(k: i64) -> Self {
        Expr::Scalar(Scalar::from_int(k))
    }

    pub fn zero() -> Self {
        Expr::int(0)
    }

    pub fn bracket(a: Expr, b: Expr) -> Self {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn anti(a: Expr, b: Expr) -> Self {
        Expr::AntiBracket(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Expr, b: Expr) -> Self {
        Expr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Scalar, e: Expr) -> Self {
        Expr::Scale(c, Box::new(e))
    }

    pub fn scale_int(k: i64, e: Expr) -> Self {
        Expr::scale(Scalar::from_int(k), e)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Expr) -> Self {
        Expr::scale_int(-1, e)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Add(vec![a, Expr::neg(b)])
    }

    pub fn sum<I: IntoIterator<Item = Expr>>(it: I) -> Self {
        Expr::Add(it.into_iter().collect())
    }

    pub fn product<I: IntoIterator<Item = Expr>>(it: I) -> Self {
        Expr::Mul(it.into_iter().collect())
    }

    /// The expansion of `C₀` in Cartan generators.
    pub fn c0_expansion() -> Self {
        let half = Scalar::new(-1, 2);
        Expr::sum([
            Expr::scale(half.clone(), Expr::sym(GeneratorSymbol::cartan(1, 0))),
            Expr::neg(Expr::sym(GeneratorSymbol::cartan(2, 0))),
            Expr::scale(half, Expr::sym(GeneratorSymbol::cartan(3, 0))),
        ])
    }

    /// Static parity of the tree. Sums must be homogeneous.
    pub fn parity(&self) -> Result<Parity, AlgebraError> {
        Ok(match self {
            Expr::Scalar(_) | Expr::C0 => 0,
            Expr::Sym(s) => s.parity(),
            Expr::Add(v) => {
                let mut p = None;
                for e in v {
                    if matches!(e, Expr::Scalar(c) if c.is_zero()) {
                        continue;
                    }
                    let q = e.parity()?;
                    match p {
                        None => p = Some(q),
                        Some(pp) if pp != q => return Err(AlgebraError::MixedParity),
                        _ => {}
                    }
                }
                p.unwrap_or(0)
            }
            Expr::Mul(v) => {
                let mut p = 0;
                for e in v {
                    p ^= e.parity()?;
                }
                p
            }
            Expr::Scale(_, e) => e.parity()?,
            Expr::Bracket(a, b) | Expr::AntiBracket(a, b) | Expr::Tensor(a, b) => {
                a.parity()? ^ b.parity()?
            }
        })
    }

    /// Whether a tensor node occurs anywhere.
    pub fn has_tensor(&self) -> bool {
        match self {
            Expr::Tensor(..) => true,
            Expr::Add(v) | Expr::Mul(v) => v.iter().any(Expr::has_tensor),
            Expr::Scale(_, e) => e.has_tensor(),
            Expr::Bracket(a, b) | Expr::AntiBracket(a, b) => a.has_tensor() || b.has_tensor(),
            _ => false,
        }
    }

    /// Every generator symbol in the tree, in order of appearance.
    pub fn symbols(&self) -> Vec<GeneratorSymbol> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<GeneratorSymbol>) {
        match self {
            Expr::Sym(s) => out.push(*s),
            Expr::C0 => out.extend((1..=3).map(|i| GeneratorSymbol::cartan(i, 0))),
            Expr::Add(v) | Expr::Mul(v) => v.iter().for_each(|e| e.collect_symbols(out)),
            Expr::Scale(_, e) => e.collect_symbols(out),
            Expr::Bracket(a, b) | Expr::AntiBracket(a, b) | Expr::Tensor(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Expr::Scalar(_) => {}
        }
    }

    /// Replaces every symbol by an expression.
    pub fn map_symbols<F: FnMut(GeneratorSymbol) -> Expr + Copy>(&self, f: F) -> Expr {
        let mut g = f;
        match self {
            Expr::Sym(s) => g(*s),
            Expr::Scalar(_) | Expr::C0 => self.clone(),
            Expr::Add(v) => Expr::Add(v.iter().map(|e| e.map_symbols(f)).collect()),
            Expr::Mul(v) => Expr::Mul(v.iter().map(|e| e.map_symbols(f)).collect()),
            Expr::Scale(c, e) => Expr::Scale(c.clone(), Box::new(e.map_symbols(f))),
            Expr::Bracket(a, b) => Expr::bracket(a.map_symbols(f), b.map_symbols(f)),
            Expr::AntiBracket(a, b) => Expr::anti(a.map_symbols(f), b.map_symbols(f)),
            Expr::Tensor(a, b) => Expr::tensor(a.map_symbols(f), b.map_symbols(f)),
        }
    }

    /// Evaluates the tree bottom-up in the given algebra.
    pub fn eval<A: ExprAlgebra>(&self, alg: &mut A) -> Result<A::Value, A::Error> {
        match self {
            Expr::Scalar(c) => alg.scalar(c),
            Expr::Sym(s) => alg.symbol(*s),
            Expr::C0 => Expr::c0_expansion().eval(alg),
            Expr::Add(v) => {
                let mut acc = alg.scalar(&Scalar::zero())?;
                for e in v {
                    let x = e.eval(alg)?;
                    acc = alg.add(acc, &x)?;
                }
                Ok(acc)
            }
            Expr::Mul(v) => {
                let mut acc = alg.scalar(&Scalar::one())?;
                for e in v {
                    let x = e.eval(alg)?;
                    acc = alg.mul(&acc, &x)?;
                }
                Ok(acc)
            }
            Expr::Scale(c, e) => {
                let x = e.eval(alg)?;
                alg.scale(x, c)
            }
            Expr::Bracket(a, b) | Expr::AntiBracket(a, b) => {
                let pa = a.parity().map_err(A::Error::from)?;
                let pb = b.parity().map_err(A::Error::from)?;
                let x = a.eval(alg)?;
                let y = b.eval(alg)?;
                alg.bracket(&x, pa, &y, pb, matches!(self, Expr::AntiBracket(..)))
            }
            Expr::Tensor(a, b) => {
                let x = a.eval(alg)?;
                let y = b.eval(alg)?;
                alg.tensor(&x, &y)
            }
        }
    }

    /// Eager expansion into the free algebra.
    pub fn to_poly(&self) -> Result<SuperPolynomial, AlgebraError> {
        self.eval(&mut FreeEval)
    }

    /// Eager expansion into the free tensor square.
    pub fn to_tensor(&self) -> Result<TensorPolynomial, AlgebraError> {
        self.eval(&mut TensorEval)?.into_tensor()
    }
}

/// A target algebra for [`Expr::eval`].
pub trait ExprAlgebra {
    type Value: Clone;
    type Error: From<AlgebraError>;

    fn scalar(&mut self, c: &Scalar) -> Result<Self::Value, Self::Error>;
    fn symbol(&mut self, s: GeneratorSymbol) -> Result<Self::Value, Self::Error>;
    fn add(&mut self, a: Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;
    fn scale(&mut self, a: Self::Value, c: &Scalar) -> Result<Self::Value, Self::Error>;
    fn mul(&mut self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;

    /// `[a,b]` or `{a,b}` for values of the given parities.
    fn bracket(
        &mut self,
        a: &Self::Value,
        pa: Parity,
        b: &Self::Value,
        pb: Parity,
        anti: bool,
    ) -> Result<Self::Value, Self::Error> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        let mut s = Scalar::sign(u32::from(pa * pb));
        if !anti {
            s = -s;
        }
        let ba = self.scale(ba, &s)?;
        self.add(ab, &ba)
    }

    fn tensor(&mut self, _a: &Self::Value, _b: &Self::Value) -> Result<Self::Value, Self::Error> {
        Err(AlgebraError::TensorNotAllowed.into())
    }
}

/// Evaluation into the free algebra.
pub struct FreeEval;

impl ExprAlgebra for FreeEval {
    type Value = SuperPolynomial;
    type Error = AlgebraError;

    fn scalar(&mut self, c: &Scalar) -> Result<SuperPolynomial, AlgebraError> {
        Ok(SuperPolynomial::constant(c.clone()))
    }
    fn symbol(&mut self, s: GeneratorSymbol) -> Result<SuperPolynomial, AlgebraError> {
        Ok(SuperPolynomial::from_symbol(s))
    }
    fn add(
        &mut self,
        mut a: SuperPolynomial,
        b: &SuperPolynomial,
    ) -> Result<SuperPolynomial, AlgebraError> {
        a.add_assign(b);
        Ok(a)
    }
    fn scale(&mut self, a: SuperPolynomial, c: &Scalar) -> Result<SuperPolynomial, AlgebraError> {
        Ok(a.scale(c))
    }
    fn mul(
        &mut self,
        a: &SuperPolynomial,
        b: &SuperPolynomial,
    ) -> Result<SuperPolynomial, AlgebraError> {
        Ok(a.multiply(b))
    }
}

#[derive(Clone)]
enum Value2 {
    Poly(SuperPolynomial),
    Tensor(TensorPolynomial),
}

impl Value2 {
    fn into_tensor(self) -> Result<TensorPolynomial, AlgebraError> {
        match self {
            Value2::Poly(p) if p.max_word_len() == 0 => {
                Ok(TensorPolynomial::one().scale(&p.coefficient(&Default::default())))
            }
            Value2::Poly(_) => Err(AlgebraError::TensorMismatch),
            Value2::Tensor(t) => Ok(t),
        }
    }
}

struct TensorEval;

impl ExprAlgebra for TensorEval {
    type Value = Value2;
    type Error = AlgebraError;

    fn scalar(&mut self, c: &Scalar) -> Result<Value2, AlgebraError> {
        Ok(Value2::Poly(SuperPolynomial::constant(c.clone())))
    }
    fn symbol(&mut self, s: GeneratorSymbol) -> Result<Value2, AlgebraError> {
        Ok(Value2::Poly(SuperPolynomial::from_symbol(s)))
    }
    fn add(&mut self, a: Value2, b: &Value2) -> Result<Value2, AlgebraError> {
        Ok(match (a, b) {
            (Value2::Poly(mut x), Value2::Poly(y)) => {
                x.add_assign(y);
                Value2::Poly(x)
            }
            (a, b) => {
                let mut x = a.into_tensor()?;
                x.add_assign(&b.clone().into_tensor()?);
                Value2::Tensor(x)
            }
        })
    }
    fn scale(&mut self, a: Value2, c: &Scalar) -> Result<Value2, AlgebraError> {
        Ok(match a {
            Value2::Poly(p) => Value2::Poly(p.scale(c)),
            Value2::Tensor(t) => Value2::Tensor(t.scale(c)),
        })
    }
    fn mul(&mut self, a: &Value2, b: &Value2) -> Result<Value2, AlgebraError> {
        Ok(match (a, b) {
            (Value2::Poly(x), Value2::Poly(y)) => Value2::Poly(x.multiply(y)),
            (a, b) => Value2::Tensor(a.clone().into_tensor()?.multiply(&b.clone().into_tensor()?)),
        })
    }
    fn tensor(&mut self, a: &Value2, b: &Value2) -> Result<Value2, AlgebraError> {
        match (a, b) {
            (Value2::Poly(x), Value2::Poly(y)) => {
                Ok(Value2::Tensor(TensorPolynomial::pure([x, y])))
            }
            _ => Err(AlgebraError::NestedTensor),
        }
    }
}

fn needs_parens_in_product(e: &Expr) -> bool {
    matches!(e, Expr::Add(v) if v.len() != 1) || matches!(e, Expr::Tensor(..))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => {
                if c.is_negative() {
                    write!(f, "({c})")
                } else {
                    write!(f, "{c}")
                }
            }
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::C0 => write!(f, "C0"),
            Expr::Add(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    if matches!(e, Expr::Tensor(..)) && v.len() > 1 {
                        write!(f, "{e}")?;
                    } else if matches!(e, Expr::Add(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            Expr::Mul(v) => {
                if v.is_empty() {
                    return write!(f, "1");
                }
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    if needs_parens_in_product(e) || matches!(e, Expr::Scale(..)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            Expr::Scale(c, e) => {
                let inner = if needs_parens_in_product(e) || matches!(&**e, Expr::Scale(..)) {
                    format!("({e})")
                } else {
                    e.to_string()
                };
                if c.is_negative() {
                    write!(f, "-{}*{inner}", c.abs())
                } else {
                    write!(f, "{c}*{inner}")
                }
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            Expr::AntiBracket(a, b) => write!(f, "{{{a}, {b}}}"),
            Expr::Tensor(a, b) => {
                let side = |e: &Expr| {
                    if matches!(e, Expr::Add(v) if v.len() != 1) || matches!(e, Expr::Tensor(..)) {
                        format!("({e})")
                    } else {
                        e.to_string()
                    }
                };
                write!(f, "{} (x) {}", side(a), side(b))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type G = GeneratorSymbol;

    #[test]
    fn bracket_expansion_matches_flat_bracket() {
        let e = Expr::bracket(Expr::sym(G::x_plus(2, 0)), Expr::sym(G::x_minus(2, 0)));
        let flat = SuperPolynomial::from_symbol(G::x_plus(2, 0))
            .super_bracket(&SuperPolynomial::from_symbol(G::x_minus(2, 0)))
            .unwrap();
        assert_eq!(e.to_poly().unwrap(), flat);
        assert_eq!(e.parity().unwrap(), 0);
    }

    #[test]
    fn mixed_sums_rejected_inside_brackets() {
        let mixed = Expr::sum([Expr::sym(G::x_plus(1, 0)), Expr::sym(G::x_plus(2, 0))]);
        let e = Expr::bracket(mixed, Expr::sym(G::cartan(1, 0)));
        assert_eq!(e.to_poly(), Err(AlgebraError::MixedParity));
    }

    #[test]
    fn tensor_nodes_evaluate_with_koszul_signs() {
        let one = Expr::int(1);
        let a = Expr::tensor(one.clone(), Expr::sym(G::x_plus(2, 0)));
        let b = Expr::tensor(Expr::sym(G::x_minus(2, 0)), one);
        let t = Expr::product([a, b]).to_tensor().unwrap();
        let expect = TensorPolynomial::pure([
            &SuperPolynomial::from_symbol(G::x_minus(2, 0)),
            &SuperPolynomial::from_symbol(G::x_plus(2, 0)),
        ])
        .neg();
        assert_eq!(t, expect);
    }
}
