//! Normal forms modulo the defining relations.
//!
//! Elements are rewritten in ordered monomials of PBW letters `E[i,j;r]`, `h[i;r]`, `P[r]`,
//! `K[r]` using a bracket table solved from the defining relations. A zero normal form is a
//! proof that the input lies in the ideal of relations.

pub mod check;
pub mod closure;
pub mod engine;
pub mod fallback;
pub mod letters;
pub mod rules;

use std::fmt;

use crate::free_superalgebra::{AlgebraError, Expr, SuperPolynomial, TensorPolynomial};
use crate::lie_core::{LetterPoly, StraightenError};
use crate::yangian_presentation::PresentationKind;

pub use check::{reduce_cube, run_checks, Check, CheckResult, LetterCube, Task, TensorCube};
pub use closure::{closure, closure_stats, ClosureTable, EvalError, LetterEval, LevelStats};
pub use engine::{Engine, LetterTensor, Source, Value};
pub use fallback::ideal_membership_fallback;
pub use rules::{letter_expr, rewrite_rules, RewriteRule};

/// Limits of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncationParams {
    /// Longest word allowed in any tensor factor of an intermediate normal form.
    pub max_word_length: usize,
    /// Highest letter level, and so the highest filtration degree, the bracket table covers.
    pub max_filtration_degree: u32,
    /// Budget of straightening steps for one reduction.
    pub max_rounds: u64,
}

impl Default for TruncationParams {
    fn default() -> Self {
        Self {
            max_word_length: 8,
            max_filtration_degree: 4,
            max_rounds: 10_000,
        }
    }
}

impl TruncationParams {
    /// Whether every limit of `self` is at least the corresponding limit of `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.max_word_length >= other.max_word_length
            && self.max_filtration_degree >= other.max_filtration_degree
            && self.max_rounds >= other.max_rounds
    }
}

/// Outcome of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Zero,
    NonzeroNormalForm,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Zero => "zero",
            Status::NonzeroNormalForm => "nonzero",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// The normal form carried by a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Letters(LetterPoly),
    LetterTensor(LetterTensor),
    LetterCube(LetterCube),
    Free(SuperPolynomial),
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        match self {
            NormalForm::Letters(p) => p.is_zero(),
            NormalForm::LetterTensor(t) => t.is_zero(),
            NormalForm::LetterCube(t) => t.is_zero(),
            NormalForm::Free(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Letters(p) => write!(f, "{p}"),
            NormalForm::LetterTensor(t) => write!(f, "{t}"),
            NormalForm::LetterCube(t) => write!(f, "{t}"),
            NormalForm::Free(p) => write!(f, "{p}"),
        }
    }
}

/// Result of reducing one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub status: Status,
    pub normal_form: NormalForm,
    pub rule_applications: u64,
    pub truncation_used: Option<TruncationParams>,
    /// Why the reduction was inconclusive, when it was.
    pub reason: Option<String>,
}

impl ReductionReport {
    pub fn is_zero(&self) -> bool {
        self.status == Status::Zero
    }

    fn inconclusive(reason: String, rule_applications: u64, params: TruncationParams) -> Self {
        Self {
            status: Status::Inconclusive,
            normal_form: NormalForm::Letters(LetterPoly::zero()),
            rule_applications,
            truncation_used: Some(params),
            reason: Some(reason),
        }
    }
}

/// Errors that are not reduction outcomes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("symbol {0} is not legal in the {1} presentation")]
    IllegalSymbol(crate::free_superalgebra::GeneratorSymbol, PresentationKind),
    #[error("left and right sides have different parities")]
    ParityMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn truncation_for(kind: PresentationKind, params: TruncationParams) -> Option<TruncationParams> {
    (kind != PresentationKind::Lie).then_some(params)
}

/// Turns an evaluation outcome into a report.
pub fn report_from(
    kind: PresentationKind,
    params: TruncationParams,
    result: Result<Value, EvalError>,
    rule_applications: u64,
) -> Result<ReductionReport, EngineError> {
    match result {
        Ok(v) => {
            let status = if v.is_zero() {
                Status::Zero
            } else {
                Status::NonzeroNormalForm
            };
            let normal_form = match v {
                Value::Alg(p) => NormalForm::Letters(p),
                Value::Ten(t) => NormalForm::LetterTensor(t),
            };
            Ok(ReductionReport {
                status,
                normal_form,
                rule_applications,
                truncation_used: truncation_for(kind, params),
                reason: None,
            })
        }
        Err(EvalError::IllegalSymbol(s)) => Err(EngineError::IllegalSymbol(s, kind)),
        Err(EvalError::Algebra(e)) => Err(e.into()),
        Err(e @ EvalError::Straighten(StraightenError::Budget)) => {
            Ok(ReductionReport::inconclusive(
                format!("budget exceeded: {e}"),
                rule_applications,
                params,
            ))
        }
        Err(e) => Ok(ReductionReport::inconclusive(
            e.to_string(),
            rule_applications,
            params,
        )),
    }
}

/// Reduces a polynomial modulo the relations of `kind`. The relations are parity-homogeneous,
/// so a polynomial of mixed parity is reduced component by component.
pub fn reduce(
    p: &SuperPolynomial,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    let mut eng = Engine::new(kind, params);
    let r = eng.normal_poly(p).map(Value::Alg);
    let report = report_from(kind, *params, r, eng.rule_applications())?;
    if report.status != Status::Inconclusive {
        return Ok(report);
    }
    let fb = ideal_membership_fallback(p, kind, params)?;
    if fb.status == Status::Zero {
        return Ok(ReductionReport {
            rule_applications: report.rule_applications + fb.rule_applications,
            ..fb
        });
    }
    Ok(ReductionReport {
        reason: Some(format!(
            "{}; fallback: {}",
            report.reason.unwrap_or_default(),
            fb.reason.unwrap_or_default()
        )),
        rule_applications: report.rule_applications + fb.rule_applications,
        ..fb
    })
}

/// Reduces a tensor modulo the relations of `kind` in each factor.
pub fn reduce_tensor(
    t: &TensorPolynomial,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    t.parity()?;
    let mut eng = Engine::new(kind, params);
    let r = eng.normal_tensor(t).map(Value::Ten);
    report_from(kind, *params, r, eng.rule_applications())
}

/// Reduces an expression, normal-ordering every intermediate value.
pub fn reduce_expr(
    e: &Expr,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    e.parity()?;
    let mut eng = Engine::new(kind, params);
    let r = eng.eval(e);
    report_from(kind, *params, r, eng.rule_applications())
}

/// Reduces `lhs − rhs`.
pub fn check_identity(
    lhs: &SuperPolynomial,
    rhs: &SuperPolynomial,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    let (pl, pr) = (lhs.parity()?, rhs.parity()?);
    if let (Some(a), Some(b)) = (pl, pr) {
        if a != b {
            return Err(EngineError::ParityMismatch);
        }
    }
    reduce(&lhs.sub(rhs), kind, params)
}

/// Reduces `lhs − rhs` for expressions.
pub fn check_identity_expr(
    lhs: &Expr,
    rhs: &Expr,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    let is_zero_scalar = |e: &Expr| matches!(e, Expr::Scalar(c) if c.is_zero());
    if !is_zero_scalar(lhs) && !is_zero_scalar(rhs) && lhs.parity()? != rhs.parity()? {
        return Err(EngineError::ParityMismatch);
    }
    reduce_expr(&Expr::sub(lhs.clone(), rhs.clone()), kind, params)
}
