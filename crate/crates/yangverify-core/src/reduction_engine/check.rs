//! Named verification checks shared by the verification suites.

use crate::free_superalgebra::{
    Expr, FreeTensor, GeneratorSymbol, Scalar, SuperPolynomial, TensorPolynomial,
};
use crate::lie_core::Letter;
use crate::yangian_presentation::PresentationKind;

use super::{
    reduce, reduce_expr, reduce_tensor, report_from, Engine, EngineError, NormalForm,
    ReductionReport, Status, TruncationParams,
};

/// Tensor cube over generator symbols.
pub type TensorCube = FreeTensor<GeneratorSymbol, 3>;

/// Tensor cube over PBW letters.
pub type LetterCube = FreeTensor<Letter, 3>;

/// What a check reduces.
#[derive(Clone, Debug)]
pub enum Task {
    /// An expression, normal-ordered node by node.
    Expr(Expr),
    /// A polynomial in generator symbols.
    Poly(SuperPolynomial),
    /// A tensor square in generator symbols.
    Tensor(TensorPolynomial),
    /// A tensor cube in generator symbols.
    Cube(TensorCube),
}

/// One named identity to verify.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub kind: PresentationKind,
    pub task: Task,
    /// A check whose failure is recorded rather than treated as a defect.
    pub probe: bool,
}

impl Check {
    pub fn new(id: impl Into<String>, kind: PresentationKind, task: Task) -> Self {
        Self {
            id: id.into(),
            kind,
            task,
            probe: false,
        }
    }

    pub fn probe(mut self) -> Self {
        self.probe = true;
        self
    }

    /// Reduces the task.
    pub fn run(&self, params: &TruncationParams) -> Result<ReductionReport, EngineError> {
        match &self.task {
            Task::Expr(e) => reduce_expr(e, self.kind, params),
            Task::Poly(p) => reduce(p, self.kind, params),
            Task::Tensor(t) => reduce_tensor(t, self.kind, params),
            Task::Cube(t) => reduce_cube(t, self.kind, params),
        }
    }
}

/// Result of running one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub probe: bool,
    pub outcome: Result<ReductionReport, EngineError>,
}

impl CheckResult {
    pub fn status(&self) -> Option<Status> {
        self.outcome.as_ref().ok().map(|r| r.status)
    }

    pub fn passed(&self) -> bool {
        self.status() == Some(Status::Zero)
    }
}

/// Runs every check in order.
pub fn run_checks(checks: &[Check], params: &TruncationParams) -> Vec<CheckResult> {
    checks
        .iter()
        .map(|c| CheckResult {
            id: c.id.clone(),
            probe: c.probe,
            outcome: c.run(params),
        })
        .collect()
}

/// Reduces a tensor cube factor by factor.
pub fn reduce_cube(
    t: &TensorCube,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    t.parity()?;
    let mut eng = Engine::new(kind, params);
    let mut out = LetterCube::zero();
    let mut failure = None;
    for (key, c) in t.sorted_terms() {
        let mut slots = Vec::with_capacity(3);
        for w in key.iter() {
            match eng.normal_poly(&SuperPolynomial::from_word(w.clone(), Scalar::one())) {
                Ok(p) => slots.push(p),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
        if failure.is_some() {
            break;
        }
        out.add_scaled(&LetterCube::pure([&slots[0], &slots[1], &slots[2]]), c);
    }
    let applications = eng.rule_applications();
    if let Some(e) = failure {
        return report_from(kind, *params, Err(e), applications);
    }
    let status = if out.is_zero() {
        Status::Zero
    } else {
        Status::NonzeroNormalForm
    };
    Ok(ReductionReport {
        status,
        normal_form: NormalForm::LetterCube(out),
        rule_applications: applications,
        truncation_used: (kind != PresentationKind::Lie).then_some(*params),
        reason: None,
    })
}
