//! The Drinfeld verification suite, the embedding of the level-one presentation into the
//! Drinfeld presentation, and the syntactic ρ-covariance of the Drinfeld relations.

use std::collections::{BTreeMap, BTreeSet};

use crate::free_superalgebra::{Expr, Family, GeneratorSymbol as G, Scalar, SuperPolynomial};
use crate::hopf_structure::{levendorskii_generators, rho, suite::RELATION_LEVEL};
use crate::reduction_engine::{
    run_checks, Check, CheckResult, NormalForm, ReductionReport, Status, Task, TruncationParams,
};
use crate::yangian_presentation::{a, enumerate_relations, PresentationKind};

use super::{expand, family_expr, raising_operator, FamilyIndex, RaisingKind};

const KIND: PresentationKind = PresentationKind::Levendorskii;
const SIGNS: [i8; 2] = [1, -1];
const NODES: [u8; 3] = [1, 2, 3];

/// Level bound used when none is given.
pub const DEFAULT_LEVEL_BOUND: u32 = 3;

fn xs(sg: i8, i: u8, r: u32) -> Expr {
    Expr::sym(G::x(sg, i, r))
}

fn hs(i: u8, r: u32) -> Expr {
    Expr::sym(G::cartan(i, r))
}

fn pm(sg: i8) -> &'static str {
    if sg > 0 {
        "+"
    } else {
        "-"
    }
}

/// The residual scaled so that its first term has coefficient one, as a comparison key.
fn normalized_key(p: &SuperPolynomial) -> String {
    match p.sorted_terms().first() {
        Some((_, c)) => p.scale(&c.recip()).to_string(),
        None => "0".to_string(),
    }
}

struct Builder {
    out: Vec<Check>,
    seen: BTreeSet<String>,
}

impl Builder {
    fn push(&mut self, id: String, e: Expr) {
        self.push_with(id, e, false);
    }

    fn push_with(&mut self, id: String, e: Expr, keep: bool) {
        let key = normalized_key(&e.to_poly().expect("residuals are homogeneous"));
        if self.seen.insert(key) || keep {
            let expanded = expand(&e).expect("residuals use Drinfeld generators");
            self.out.push(Check::new(id, KIND, Task::Expr(expanded)));
        }
    }
}

fn z(sg: i8, k: u32, l: u32, m: u32, n: u32) -> Expr {
    family_expr(FamilyIndex::Z {
        sign: sg,
        k,
        l,
        m,
        n,
    })
    .expect("valid indices")
}

fn degree_two_lemma(d: u32, b: &mut Builder) {
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                for r in 0..d {
                    let e = Expr::sub(
                        Expr::bracket(Expr::sym(G::tilde_cartan(i, 1)), xs(sg, j, r)),
                        Expr::scale_int(i64::from(sg) * a(i, j), xs(sg, j, r + 1)),
                    );
                    b.push(
                        format!("drinfeld/deg2/ht-x[{},i={i},j={j},r={r}]", pm(sg)),
                        e,
                    );
                }
            }
        }
    }
    if d < 2 {
        return;
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let e = family_expr(FamilyIndex::R {
                    sign: sg,
                    i,
                    j,
                    r: 1,
                    s: 0,
                })
                .expect("valid indices");
                b.push(format!("drinfeld/deg2/x2-x0[{},i={i},j={j}]", pm(sg)), e);
            }
        }
    }
    for i in NODES {
        for (k, l) in [(2, 0), (1, 1), (0, 2)] {
            let e = Expr::sub(hs(i, 2), Expr::bracket(xs(1, i, k), xs(-1, i, l)));
            b.push(format!("drinfeld/deg2/h2-alternate[i={i},r={k},s={l}]"), e);
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                for r in 0..=d - 2 {
                    let e = family_expr(FamilyIndex::S {
                        sign: sg,
                        i,
                        j,
                        r: 1,
                        s: r,
                    })
                    .expect("valid indices");
                    b.push(
                        format!("drinfeld/deg2/h2-x[{},i={i},j={j},r={r}]", pm(sg)),
                        e,
                    );
                }
            }
        }
    }
    if d < 3 {
        return;
    }
    for i in NODES {
        for j in NODES {
            let e = Expr::bracket(hs(i, 2), Expr::sym(G::tilde_cartan(j, 1)));
            b.push(format!("drinfeld/deg2/h2-ht[i={i},j={j}]"), e);
        }
    }
}

fn raising_checks(d: u32, b: &mut Builder) {
    if d < 2 {
        return;
    }
    for i in NODES {
        for j in NODES {
            let bij = raising_operator(RaisingKind::Bij, i, Some(j))
                .expect("valid indices")
                .expr;
            let ht2 = raising_operator(RaisingKind::TildeH2, i, None)
                .expect("valid indices")
                .expr;
            let aij = a(i, j);
            for sg in SIGNS {
                let s = i64::from(sg);
                for r in 0..=d - 2 {
                    let e = Expr::sub(
                        Expr::bracket(bij.clone(), xs(sg, j, r)),
                        Expr::scale_int(s * aij, xs(sg, j, r + 2)),
                    );
                    b.push(
                        format!("drinfeld/raising/B[{},i={i},j={j},r={r}]", pm(sg)),
                        e,
                    );
                    let e = Expr::sum([
                        Expr::bracket(ht2.clone(), xs(sg, j, r)),
                        Expr::scale_int(-s * aij, xs(sg, j, r + 2)),
                        Expr::scale(Scalar::new(-s * aij * aij * aij, 12), xs(sg, j, r)),
                    ]);
                    b.push(
                        format!("drinfeld/raising/ht2[{},i={i},j={j},r={r}]", pm(sg)),
                        e,
                    );
                }
            }
        }
    }
}

fn hh_recursion(d: u32, b: &mut Builder) {
    for k in 1..d {
        for l in 1..=k {
            for i in NODES {
                for j in NODES {
                    let e = Expr::sum([
                        Expr::bracket(hs(i, l + 1), hs(j, k - l)),
                        Expr::scale_int(-2, Expr::bracket(hs(i, l), hs(j, k - l + 1))),
                        Expr::bracket(hs(i, l - 1), hs(j, k - l + 2)),
                    ]);
                    b.push(format!("drinfeld/hh-recursion[i={i},j={j},K={k},l={l}]"), e);
                }
            }
        }
    }
}

fn x1_x3(d: u32, b: &mut Builder) {
    for sg in SIGNS {
        for r in 0..=d {
            for s in 0..=d - r {
                let e = Expr::bracket(xs(sg, 1, r), xs(sg, 3, s));
                b.push(format!("drinfeld/x1-x3[{},r={r},s={s}]", pm(sg)), e);
            }
        }
    }
}

fn odd_square_lemma(d: u32, b: &mut Builder) {
    for sg in SIGNS {
        for r in 0..=d / 2 {
            let f = xs(sg, 2, r);
            for s in 0..=d - 2 * r {
                for j in NODES {
                    for g in [G::x_plus(j, s), G::x_minus(j, s), G::cartan(j, s)] {
                        let e = Expr::bracket(f.clone(), Expr::bracket(f.clone(), Expr::sym(g)));
                        b.push(format!("drinfeld/odd-square[{},r={r},with={g}]", pm(sg)), e);
                    }
                }
            }
        }
    }
}

fn z_shift(d: u32, b: &mut Builder) {
    for sg in SIGNS {
        for k in 1..=d {
            for l in 1..=k {
                let e = Expr::sub(z(sg, k, 0, 0, 0), z(sg, k - l, 0, l, 0));
                b.push(format!("drinfeld/z-shift[{},K={k},l={l}]", pm(sg)), e);
            }
        }
    }
}

fn centrality(d: u32, b: &mut Builder) {
    let mut probes: Vec<G> = NODES
        .iter()
        .flat_map(|&j| [G::x_plus(j, 0), G::x_minus(j, 0)])
        .collect();
    probes.push(G::x_plus(1, 1));
    for sg in SIGNS {
        for k in 1..=d {
            for &g in &probes {
                let e = Expr::bracket(z(sg, k, 0, 0, 0), Expr::sym(g));
                b.push(format!("drinfeld/centrality[{},K={k},with={g}]", pm(sg)), e);
            }
        }
    }
}

/// Every check of the Drinfeld suite with total level at most `d`, in a fixed order: the
/// defining relations, then the auxiliary identities used to prove them. Generators of level
/// two and higher are replaced by their definitions and the checks are reduced in the
/// level-one presentation. The relations of g are always emitted; any other instance whose
/// residual repeats an earlier one up to a scalar is skipped.
pub fn drinfeld_checks(d: u32) -> Vec<Check> {
    let mut b = Builder {
        out: Vec::new(),
        seen: BTreeSet::new(),
    };
    for rel in enumerate_relations(PresentationKind::Drinfeld, d) {
        let from_lie = rel.params.r.is_none();
        b.push_with(rel.id.clone(), rel.expr.clone(), from_lie);
    }
    if d >= 1 {
        degree_two_lemma(d, &mut b);
        raising_checks(d, &mut b);
        hh_recursion(d, &mut b);
        x1_x3(d, &mut b);
        odd_square_lemma(d, &mut b);
        z_shift(d, &mut b);
        centrality(d, &mut b);
    }
    b.out
}

/// Runs [`drinfeld_checks`].
pub fn verify_drinfeld_suite(d: u32, params: &TruncationParams) -> Vec<CheckResult> {
    run_checks(&drinfeld_checks(d), params)
}

fn psi_symbol(s: G) -> Expr {
    let i = s.node();
    let h0 = || hs(i, 0);
    match (s.family(), s.level()) {
        (Family::TildeCartan, 1) => Expr::sub(
            hs(i, 1),
            Expr::scale(Scalar::new(1, 2), Expr::product([h0(), h0()])),
        ),
        (Family::TildeCartan, _) => Expr::sum([
            hs(i, 2),
            Expr::neg(Expr::product([h0(), psi_symbol(G::tilde_cartan(i, 1))])),
            Expr::scale(Scalar::new(-1, 6), Expr::product([h0(), h0(), h0()])),
        ]),
        _ => Expr::sym(s),
    }
}

/// The map from the level-one presentation to the Drinfeld presentation:
/// `h̃_{i,1} ↦ h_{i,1} − ½h_{i,0}²` and every other generator to itself.
pub fn psi_expr(e: &Expr) -> Expr {
    e.map_symbols(psi_symbol)
}

fn drinfeld_low_generators() -> Vec<G> {
    let mut g = Vec::new();
    for r in 0..=1 {
        for i in NODES {
            g.extend([G::x_plus(i, r), G::x_minus(i, r), G::cartan(i, r)]);
        }
        g.extend([G::p_plus(r), G::p_minus(r)]);
    }
    g
}

/// Checks that the images under ψ of the level-one relations lie in the Drinfeld ideal, and
/// that ψ and the tower map compose to the identity on the generators of level at most one.
pub fn psi_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for rel in enumerate_relations(KIND, RELATION_LEVEL) {
        out.push(Check::new(
            format!("psi/{}", rel.id),
            PresentationKind::Drinfeld,
            Task::Expr(psi_expr(&rel.expr)),
        ));
    }
    for s in levendorskii_generators() {
        let image = expand(&psi_expr(&Expr::sym(s))).expect("level-one image");
        out.push(Check::new(
            format!("psi/phi-after-psi/{s}"),
            KIND,
            Task::Expr(Expr::sub(image, Expr::sym(s))),
        ));
    }
    for s in drinfeld_low_generators() {
        let image = psi_expr(&expand(&Expr::sym(s)).expect("Drinfeld generator"));
        out.push(Check::new(
            format!("psi/psi-after-phi/{s}"),
            PresentationKind::Drinfeld,
            Task::Expr(Expr::sub(image, Expr::sym(s))),
        ));
    }
    out
}

/// Runs [`psi_checks`].
pub fn psi_embedding_check(params: &TruncationParams) -> Vec<CheckResult> {
    run_checks(&psi_checks(), params)
}

/// For every Drinfeld relation instance with total level at most `d`, looks for an instance
/// of the same family whose residual is a nonzero multiple of the ρ-image. A report is Zero
/// when one is found; its reason names the image instance.
pub fn rho_covariance(d: u32) -> Vec<CheckResult> {
    let rels = enumerate_relations(PresentationKind::Drinfeld, d);
    let mut index = BTreeMap::new();
    for rel in &rels {
        index
            .entry((rel.family, normalized_key(&rel.residual)))
            .or_insert_with(|| rel.id.clone());
    }
    rels.iter()
        .map(|rel| {
            let image = rho(&rel.residual);
            let found = index.get(&(rel.family, normalized_key(&image)));
            let (status, normal_form, reason) = match found {
                Some(id) => (
                    Status::Zero,
                    SuperPolynomial::zero(),
                    format!("image is {id}"),
                ),
                None => (
                    Status::NonzeroNormalForm,
                    image,
                    "no instance matches the image".to_string(),
                ),
            };
            CheckResult {
                id: format!("rho-covariance/{}", rel.id),
                probe: false,
                outcome: Ok(ReductionReport {
                    status,
                    normal_form: NormalForm::Free(normal_form),
                    rule_applications: 0,
                    truncation_used: None,
                    reason: Some(reason),
                }),
            }
        })
        .collect()
}
