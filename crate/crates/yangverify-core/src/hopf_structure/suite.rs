//! The Hopf verification suite.

use crate::free_superalgebra::SuperPolynomial;
use crate::reduction_engine::{run_checks, Check, CheckResult, Task, TruncationParams};
use crate::yangian_presentation::{enumerate_relations, PresentationKind};

use super::{
    antipode_convolution, coassociator, coproduct, coproduct_expr, counit_contraction,
    levendorskii_generators, opposite_coproduct, rho_expr, rho_generator, rho_tensor,
};

const KIND: PresentationKind = PresentationKind::Levendorskii;

/// Highest relation level whose coproduct image is checked.
pub const RELATION_LEVEL: u32 = 3;

/// Every check of the suite, in a fixed order.
pub fn hopf_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let relations = enumerate_relations(KIND, RELATION_LEVEL);
    for rel in &relations {
        let e = coproduct_expr(&rel.expr).expect("relations use tabulated generators");
        out.push(Check::new(
            format!("hopf/delta/{}", rel.id),
            KIND,
            Task::Expr(e),
        ));
    }
    for s in levendorskii_generators() {
        let x = SuperPolynomial::from_symbol(s);
        for (side, left) in [("left", true), ("right", false)] {
            let p = antipode_convolution(&x, left).expect("tabulated generator");
            out.push(Check::new(
                format!("hopf/antipode-{side}/{s}"),
                KIND,
                Task::Poly(p),
            ));
        }
    }
    for s in levendorskii_generators() {
        let x = SuperPolynomial::from_symbol(s);
        let lhs = rho_tensor(&opposite_coproduct(&x).expect("tabulated generator"));
        let rhs = coproduct(&rho_generator(s)).expect("tabulated generator");
        out.push(Check::new(
            format!("hopf/rho-delta/{s}"),
            KIND,
            Task::Tensor(lhs.sub(&rhs)),
        ));
    }
    for s in levendorskii_generators() {
        let x = SuperPolynomial::from_symbol(s);
        for (side, left) in [("left", true), ("right", false)] {
            let p = counit_contraction(&x, left)
                .expect("tabulated generator")
                .sub(&x);
            out.push(Check::new(
                format!("hopf/counit-{side}/{s}"),
                KIND,
                Task::Poly(p),
            ));
        }
    }
    for rel in &relations {
        out.push(Check::new(
            format!("hopf/rho-relation/{}", rel.id),
            KIND,
            Task::Expr(rho_expr(&rel.expr)),
        ));
    }
    for s in levendorskii_generators() {
        let cube = coassociator(&SuperPolynomial::from_symbol(s)).expect("tabulated generator");
        out.push(Check::new(format!("hopf/coassociativity/{s}"), KIND, Task::Cube(cube)).probe());
    }
    out
}

/// Runs [`hopf_checks`].
pub fn verify_hopf_suite(params: &TruncationParams) -> Vec<CheckResult> {
    run_checks(&hopf_checks(), params)
}
