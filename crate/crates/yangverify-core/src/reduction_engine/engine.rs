//! Evaluation of expressions, polynomials and tensors into normal-ordered letter form.

use crate::free_superalgebra::{
    AlgebraError, Expr, ExprAlgebra, FreeTensor, GeneratorSymbol, Parity, Scalar, SuperPolynomial,
    TensorPolynomial, Word,
};
use crate::lie_core::{
    BracketSource, Entry, Letter, LetterPoly, LieTable, LinPoly, StraightenError, Straightener,
};
use crate::yangian_presentation::PresentationKind;

use super::closure::{closure, ClosureTable, EvalError};
use super::letters::symbol_value;
use super::TruncationParams;

/// Tensor square over PBW letters.
pub type LetterTensor = FreeTensor<Letter, 2>;

/// Bracket source for a presentation.
#[derive(Clone)]
pub enum Source {
    Lie,
    Closure(ClosureTable),
}

impl Source {
    pub fn for_kind(kind: PresentationKind, max_level: u32) -> Self {
        match kind {
            PresentationKind::Lie => Source::Lie,
            _ => Source::Closure(closure(kind, max_level)),
        }
    }
}

impl BracketSource for Source {
    fn entry(&self, a: Letter, b: Letter) -> Entry<'_> {
        match self {
            Source::Lie => LieTable.entry(a, b),
            Source::Closure(t) => t.entry(a, b),
        }
    }
}

/// A value of the engine: an element of the algebra or of its tensor square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Alg(LetterPoly),
    Ten(LetterTensor),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Alg(p) => p.is_zero(),
            Value::Ten(t) => t.is_zero(),
        }
    }

    fn into_tensor(self) -> Result<LetterTensor, EvalError> {
        match self {
            Value::Ten(t) => Ok(t),
            Value::Alg(p) if p.max_word_len() == 0 => {
                Ok(LetterTensor::one().scale(&p.coefficient(&Word::unit())))
            }
            Value::Alg(_) => Err(AlgebraError::TensorMismatch.into()),
        }
    }

    fn max_word_len(&self) -> usize {
        match self {
            Value::Alg(p) => p.max_word_len(),
            Value::Ten(t) => t.max_word_len(),
        }
    }
}

/// Normal-ordering evaluator bound to one presentation and one set of limits.
pub struct Engine {
    kind: PresentationKind,
    source: Source,
    st: Straightener,
    max_word_length: usize,
}

fn known(v: LinPoly) -> Result<LetterPoly, EvalError> {
    match v.lin.keys().next() {
        Some(&id) => Err(StraightenError::NeedsEntry(id).into()),
        None => Ok(v.known),
    }
}

impl Engine {
    pub fn new(kind: PresentationKind, params: &TruncationParams) -> Self {
        Self::with_source(
            kind,
            Source::for_kind(kind, params.max_filtration_degree),
            params,
        )
    }

    pub fn with_source(kind: PresentationKind, source: Source, params: &TruncationParams) -> Self {
        Self {
            kind,
            source,
            st: Straightener::with_budget(params.max_rounds),
            max_word_length: params.max_word_length,
        }
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    /// Straightening steps spent so far.
    pub fn rule_applications(&self) -> u64 {
        self.st.swaps()
    }

    fn check_len(&self, v: Value) -> Result<Value, EvalError> {
        if v.max_word_len() > self.max_word_length {
            return Err(EvalError::WordTooLong(v.max_word_len()));
        }
        Ok(v)
    }

    /// Image of one symbol.
    pub fn symbol(&self, s: GeneratorSymbol) -> Result<LetterPoly, EvalError> {
        symbol_value(self.kind, s).ok_or(EvalError::IllegalSymbol(s))
    }

    /// Normal-ordered product of two letter polynomials.
    pub fn mul(&mut self, a: &LetterPoly, b: &LetterPoly) -> Result<LetterPoly, EvalError> {
        known(self.st.multiply(
            &self.source,
            &LinPoly::known(a.clone()),
            &LinPoly::known(b.clone()),
        )?)
    }

    /// Normal form of a letter polynomial.
    pub fn normal_letters(&mut self, p: &LetterPoly) -> Result<LetterPoly, EvalError> {
        known(self.st.normal_order(&self.source, p)?)
    }

    fn mul_words(&mut self, a: &Word<Letter>, b: &Word<Letter>) -> Result<LetterPoly, EvalError> {
        known(self.st.mul_word_letters(&self.source, a, b.symbols())?)
    }

    /// Normal form of a polynomial in generator symbols.
    pub fn normal_poly(&mut self, p: &SuperPolynomial) -> Result<LetterPoly, EvalError> {
        let mut out = LetterPoly::zero();
        for (w, c) in p.sorted_terms() {
            let mut acc = LetterPoly::constant(c.clone());
            for &s in w.symbols() {
                let v = Engine::symbol(self, s)?;
                acc = Engine::mul(self, &acc, &v)?;
            }
            out.add_assign(&acc);
        }
        match self.check_len(Value::Alg(out))? {
            Value::Alg(p) => Ok(p),
            Value::Ten(_) => unreachable!(),
        }
    }

    /// Normal form of a tensor, factor by factor.
    pub fn normal_tensor(&mut self, t: &TensorPolynomial) -> Result<LetterTensor, EvalError> {
        let mut out = LetterTensor::zero();
        for (key, c) in t.sorted_terms() {
            let l = self.normal_poly(&SuperPolynomial::from_word(key[0].clone(), Scalar::one()))?;
            let r = self.normal_poly(&SuperPolynomial::from_word(key[1].clone(), Scalar::one()))?;
            out.add_scaled(&LetterTensor::pure([&l, &r]), c);
        }
        Ok(out)
    }

    /// Evaluates an expression, normal-ordering after every node.
    pub fn eval(&mut self, e: &Expr) -> Result<Value, EvalError> {
        e.eval(self)
    }

    /// Product of two tensors of normal-ordered factors.
    pub fn mul_tensors(
        &mut self,
        a: &LetterTensor,
        b: &LetterTensor,
    ) -> Result<LetterTensor, EvalError> {
        a.multiply_with(b, |x, y| self.mul_words(x, y))
    }
}

impl ExprAlgebra for Engine {
    type Value = Value;
    type Error = EvalError;

    fn scalar(&mut self, c: &Scalar) -> Result<Value, EvalError> {
        Ok(Value::Alg(LetterPoly::constant(c.clone())))
    }

    fn symbol(&mut self, s: GeneratorSymbol) -> Result<Value, EvalError> {
        Ok(Value::Alg(Engine::symbol(self, s)?))
    }

    fn add(&mut self, a: Value, b: &Value) -> Result<Value, EvalError> {
        Ok(match (a, b) {
            (Value::Alg(mut x), Value::Alg(y)) => {
                x.add_assign(y);
                Value::Alg(x)
            }
            (a, b) => {
                let mut x = a.into_tensor()?;
                x.add_assign(&b.clone().into_tensor()?);
                Value::Ten(x)
            }
        })
    }

    fn scale(&mut self, a: Value, c: &Scalar) -> Result<Value, EvalError> {
        Ok(match a {
            Value::Alg(p) => Value::Alg(p.scale(c)),
            Value::Ten(t) => Value::Ten(t.scale(c)),
        })
    }

    fn mul(&mut self, a: &Value, b: &Value) -> Result<Value, EvalError> {
        let v = match (a, b) {
            (Value::Alg(x), Value::Alg(y)) => Value::Alg(Engine::mul(self, x, y)?),
            (a, b) => {
                let x = a.clone().into_tensor()?;
                let y = b.clone().into_tensor()?;
                Value::Ten(self.mul_tensors(&x, &y)?)
            }
        };
        self.check_len(v)
    }

    fn bracket(
        &mut self,
        a: &Value,
        pa: Parity,
        b: &Value,
        pb: Parity,
        anti: bool,
    ) -> Result<Value, EvalError> {
        let ab = ExprAlgebra::mul(self, a, b)?;
        let ba = ExprAlgebra::mul(self, b, a)?;
        let mut s = Scalar::sign(u32::from(pa * pb));
        if !anti {
            s = -s;
        }
        let ba = self.scale(ba, &s)?;
        self.add(ab, &ba)
    }

    fn tensor(&mut self, a: &Value, b: &Value) -> Result<Value, EvalError> {
        match (a, b) {
            (Value::Alg(x), Value::Alg(y)) => Ok(Value::Ten(LetterTensor::pure([x, y]))),
            _ => Err(AlgebraError::NestedTensor.into()),
        }
    }
}
