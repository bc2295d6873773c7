//! The Lie verification suite and exhaustive checks of the structure table.

use crate::free_superalgebra::Scalar;
use crate::reduction_engine::{run_checks, Check, CheckResult, Task, TruncationParams};
use crate::yangian_presentation::{enumerate_relations, PresentationKind};

use super::{LieBasisElement as B, StructureTable};

/// Every relation of g, including the centrality of `P^±`, as checks in the Lie presentation.
pub fn lie_checks() -> Vec<Check> {
    enumerate_relations(PresentationKind::Lie, 0)
        .into_iter()
        .map(|rel| Check::new(rel.id, PresentationKind::Lie, Task::Expr(rel.expr)))
        .collect()
}

/// Runs [`lie_checks`].
pub fn verify_lie_suite(params: &TruncationParams) -> Vec<CheckResult> {
    run_checks(&lie_checks(), params)
}

type Dense = [Scalar; B::COUNT];

fn dense_zero() -> Dense {
    std::array::from_fn(|_| Scalar::zero())
}

fn bracket_with(v: &Dense, b: B, left: bool) -> Dense {
    let t = StructureTable::get();
    let mut out = dense_zero();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = B::from_index(k);
        let entry = if left {
            t.bracket(e, b)
        } else {
            t.bracket(b, e)
        };
        for (f, d) in entry {
            out[f.index()] = &out[f.index()] + &(c * d);
        }
    }
    out
}

fn basis_dense(a: B) -> Dense {
    let mut v = dense_zero();
    v[a.index()] = Scalar::one();
    v
}

fn koszul(a: B, b: B) -> Scalar {
    if a.parity() * b.parity() == 1 {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

/// Pairs `(a, b)` violating `[a,b] = −(−1)^{p(a)p(b)}[b,a]`.
pub fn antisymmetry_failures() -> Vec<(B, B)> {
    let mut out = Vec::new();
    for a in B::all() {
        for b in B::all() {
            let ab = bracket_with(&basis_dense(a), b, true);
            let ba = bracket_with(&basis_dense(b), a, true);
            let s = koszul(a, b);
            if (0..B::COUNT).any(|k| !(&ab[k] + &(&s * &ba[k])).is_zero()) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Triples violating `[a,[b,c]] = [[a,b],c] + (−1)^{p(a)p(b)}[b,[a,c]]`.
pub fn jacobi_failures() -> Vec<(B, B, B)> {
    let mut out = Vec::new();
    for a in B::all() {
        for b in B::all() {
            let ab = bracket_with(&basis_dense(a), b, true);
            let s = koszul(a, b);
            for c in B::all() {
                let bc = bracket_with(&basis_dense(b), c, true);
                let ac = bracket_with(&basis_dense(a), c, true);
                let lhs = bracket_with(&bc, a, false);
                let first = bracket_with(&ab, c, true);
                let second = bracket_with(&ac, b, false);
                if (0..B::COUNT).any(|k| !(&(&lhs[k] - &first[k]) - &(&s * &second[k])).is_zero()) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}
