//! Generators and defining relations of g, of the Yangian in its finite realization, and of
//! the Yangian in its current realization, instantiated over level indices.

use std::fmt;
use std::str::FromStr;

use crate::free_superalgebra::{
    AlgebraError, Expr, Family, GeneratorSymbol, Scalar, SuperPolynomial,
};

/// The symmetrized Cartan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanMatrix(pub [[i64; 3]; 3]);

impl CartanMatrix {
    pub const STANDARD: CartanMatrix = CartanMatrix([[2, -1, 0], [-1, 0, 1], [0, 1, -2]]);

    /// `a_{ij}` for nodes in 1..=3.
    pub fn entry(&self, i: u8, j: u8) -> i64 {
        self.0[i as usize - 1][j as usize - 1]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.0[i][j] == self.0[j][i]))
    }
}

/// `a_{ij}` of the standard Cartan matrix.
pub fn a(i: u8, j: u8) -> i64 {
    CartanMatrix::STANDARD.entry(i, j)
}

/// Which presentation a relation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresentationKind {
    Lie,
    Levendorskii,
    Drinfeld,
}

impl PresentationKind {
    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Lie => "lie",
            PresentationKind::Levendorskii => "levendorskii",
            PresentationKind::Drinfeld => "drinfeld",
        }
    }

    /// Whether a symbol may appear in this presentation.
    pub fn allows(self, s: GeneratorSymbol) -> bool {
        match (self, s.family()) {
            (PresentationKind::Lie, Family::TildeCartan) => false,
            (PresentationKind::Lie, _) => s.level() == 0,
            (PresentationKind::Drinfeld, Family::TildeCartan) => false,
            _ => true,
        }
    }
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors raised while building presentation data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("unknown presentation kind `{0}`")]
    UnknownKind(String),
    #[error("node {0} is outside 1..=3")]
    BadNode(u8),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl FromStr for PresentationKind {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lie" => Ok(PresentationKind::Lie),
            "levendorskii" => Ok(PresentationKind::Levendorskii),
            "drinfeld" => Ok(PresentationKind::Drinfeld),
            other => Err(PresentationError::UnknownKind(other.to_string())),
        }
    }
}

/// The index instantiation of a relation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexParams {
    pub sign: Option<i8>,
    pub i: Option<u8>,
    pub j: Option<u8>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub t: Option<u32>,
}

impl fmt::Display for IndexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(sg) = self.sign {
            parts.push(if sg > 0 {
                "+".to_string()
            } else {
                "-".to_string()
            });
        }
        for (name, v) in [
            ("i", self.i.map(u32::from)),
            ("j", self.j.map(u32::from)),
            ("r", self.r),
            ("s", self.s),
            ("t", self.t),
        ] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        f.write_str(&parts.join(","))
    }
}

/// One instance of a defining relation, stored as the residual `lhs − rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    pub kind: PresentationKind,
    pub family: &'static str,
    pub params: IndexParams,
    /// Sum of the level indices of the instance.
    pub level: u32,
    pub expr: Expr,
    pub residual: SuperPolynomial,
}

impl Relation {
    fn new(
        kind: PresentationKind,
        family: &'static str,
        params: IndexParams,
        level: u32,
        expr: Expr,
    ) -> Self {
        let residual = expr.to_poly().expect("relation residuals are homogeneous");
        Self {
            id: format!("{}/{}[{}]", kind.name(), family, params),
            kind,
            family,
            params,
            level,
            expr,
            residual,
        }
    }
}

fn xs(sign: i8, i: u8, r: u32) -> Expr {
    Expr::sym(GeneratorSymbol::x(sign, i, r))
}

fn hs(i: u8, r: u32) -> Expr {
    Expr::sym(GeneratorSymbol::cartan(i, r))
}

fn hts(i: u8) -> Expr {
    Expr::sym(GeneratorSymbol::tilde_cartan(i, 1))
}

fn ps(sign: i8, r: u32) -> Expr {
    Expr::sym(GeneratorSymbol::p(sign, r))
}

fn half(k: i64) -> Scalar {
    Scalar::new(k, 2)
}

const SIGNS: [i8; 2] = [1, -1];
const NODES: [u8; 3] = [1, 2, 3];

/// `h_{i,1} = h̃_{i,1} + ½(h_{i,0})²` as an expression.
pub fn h1_from_tilde_expr(i: u8) -> Expr {
    Expr::sum([
        hts(i),
        Expr::scale(half(1), Expr::product([hs(i, 0), hs(i, 0)])),
    ])
}

/// `h_{i,1} = h̃_{i,1} + ½(h_{i,0})²`.
pub fn h_from_tilde(i: u8) -> Result<SuperPolynomial, PresentationError> {
    if !(1..=3).contains(&i) {
        return Err(PresentationError::BadNode(i));
    }
    Ok(h1_from_tilde_expr(i).to_poly()?)
}

fn p(
    sign: Option<i8>,
    i: Option<u8>,
    j: Option<u8>,
    r: Option<u32>,
    s: Option<u32>,
    t: Option<u32>,
) -> IndexParams {
    IndexParams {
        sign,
        i,
        j,
        r,
        s,
        t,
    }
}

fn lie_relations(kind: PresentationKind, out: &mut Vec<Relation>) {
    let mut push = |family, params, expr| out.push(Relation::new(kind, family, params, 0, expr));
    for i in NODES {
        for j in NODES {
            push(
                "hh",
                p(None, Some(i), Some(j), None, None, None),
                Expr::bracket(hs(i, 0), hs(j, 0)),
            );
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let e = Expr::sub(
                    Expr::bracket(hs(i, 0), xs(sg, j, 0)),
                    Expr::scale_int(i64::from(sg) * a(i, j), xs(sg, j, 0)),
                );
                push("hx", p(Some(sg), Some(i), Some(j), None, None, None), e);
            }
        }
    }
    for i in NODES {
        for j in NODES {
            let mut e = Expr::bracket(xs(1, i, 0), xs(-1, j, 0));
            if i == j {
                e = Expr::sub(e, hs(i, 0));
            }
            push("xx-cross", p(None, Some(i), Some(j), None, None, None), e);
        }
    }
    for sg in SIGNS {
        push(
            "odd-square",
            p(Some(sg), None, None, None, None, None),
            Expr::bracket(xs(sg, 2, 0), xs(sg, 2, 0)),
        );
        push(
            "x1-x3",
            p(Some(sg), None, None, None, None, None),
            Expr::bracket(xs(sg, 1, 0), xs(sg, 3, 0)),
        );
    }
    for sg in SIGNS {
        for i in [1, 3] {
            let e = Expr::bracket(xs(sg, i, 0), Expr::bracket(xs(sg, i, 0), xs(sg, 2, 0)));
            push("serre", p(Some(sg), Some(i), None, None, None, None), e);
        }
    }
    for sg in SIGNS {
        let e = Expr::sub(
            Expr::bracket(
                Expr::bracket(xs(sg, 1, 0), xs(sg, 2, 0)),
                Expr::bracket(xs(sg, 3, 0), xs(sg, 2, 0)),
            ),
            ps(sg, 0),
        );
        push(
            "extended-serre",
            p(Some(sg), None, None, None, None, None),
            e,
        );
    }
}

/// Generators of the finite Yangian presentation with total level at most `bound`.
fn levendorskii_generators(bound: u32) -> Vec<GeneratorSymbol> {
    let mut g = Vec::new();
    for r in 0..=bound.min(1) {
        for i in NODES {
            g.push(GeneratorSymbol::x_plus(i, r));
            g.push(GeneratorSymbol::x_minus(i, r));
            g.push(if r == 0 {
                GeneratorSymbol::cartan(i, 0)
            } else {
                GeneratorSymbol::tilde_cartan(i, 1)
            });
        }
        g.push(GeneratorSymbol::p_plus(r));
        g.push(GeneratorSymbol::p_minus(r));
    }
    g
}

fn drinfeld_generators(bound: u32) -> Vec<GeneratorSymbol> {
    let mut g = Vec::new();
    for r in 0..=bound {
        for i in NODES {
            g.push(GeneratorSymbol::x_plus(i, r));
            g.push(GeneratorSymbol::x_minus(i, r));
            g.push(GeneratorSymbol::cartan(i, r));
        }
        g.push(GeneratorSymbol::p_plus(r));
        g.push(GeneratorSymbol::p_minus(r));
    }
    g
}

fn central_relations(
    kind: PresentationKind,
    gens: &[GeneratorSymbol],
    bound: u32,
    out: &mut Vec<Relation>,
) {
    for &c in gens
        .iter()
        .filter(|s| matches!(s.family(), Family::CentralPPlus | Family::CentralPMinus))
    {
        for &g in gens {
            if matches!(g.family(), Family::CentralPPlus | Family::CentralPMinus)
                || c.level() + g.level() > bound
            {
                continue;
            }
            let sg = if c.family() == Family::CentralPPlus {
                1
            } else {
                -1
            };
            let params = IndexParams {
                sign: Some(sg),
                r: Some(c.level()),
                ..Default::default()
            };
            let id_params = format!("{params},with={g}");
            let mut rel = Relation::new(
                kind,
                "central",
                params,
                c.level() + g.level(),
                Expr::bracket(Expr::sym(c), Expr::sym(g)),
            );
            rel.id = format!("{}/central[{}]", kind.name(), id_params);
            out.push(rel);
        }
    }
}

fn levendorskii_relations(bound: u32, out: &mut Vec<Relation>) {
    let kind = PresentationKind::Levendorskii;
    let mut push = |family, params, level: u32, expr| {
        if level <= bound {
            out.push(Relation::new(kind, family, params, level, expr));
        }
    };
    for i in NODES {
        for j in NODES {
            push(
                "ht-h",
                p(None, Some(i), Some(j), None, None, None),
                1,
                Expr::bracket(hts(i), hs(j, 0)),
            );
        }
    }
    for i in NODES {
        for j in NODES {
            push(
                "ht-ht",
                p(None, Some(i), Some(j), None, None, None),
                2,
                Expr::bracket(hts(i), hts(j)),
            );
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let e = Expr::sub(
                    Expr::bracket(hts(i), xs(sg, j, 0)),
                    Expr::scale_int(i64::from(sg) * a(i, j), xs(sg, j, 1)),
                );
                push(
                    "ht-x",
                    p(Some(sg), Some(i), Some(j), None, None, None),
                    1,
                    e,
                );
            }
        }
    }
    for i in NODES {
        for j in NODES {
            let mut e = Expr::bracket(xs(1, i, 1), xs(-1, j, 0));
            if i == j {
                e = Expr::sub(e, h1_from_tilde_expr(i));
            }
            push(
                "xx-cross",
                p(None, Some(i), Some(j), None, None, None),
                1,
                e,
            );
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                let e = Expr::sum([
                    Expr::bracket(xs(sg, i, 1), xs(sg, j, 0)),
                    Expr::neg(Expr::bracket(xs(sg, i, 0), xs(sg, j, 1))),
                    Expr::scale(
                        half(-i64::from(sg) * a(i, j)),
                        Expr::anti(xs(sg, i, 0), xs(sg, j, 0)),
                    ),
                ]);
                push(
                    "x-shift",
                    p(Some(sg), Some(i), Some(j), None, None, None),
                    1,
                    e,
                );
            }
        }
    }
    for sg in SIGNS {
        push(
            "odd-square",
            p(Some(sg), None, None, None, None, None),
            1,
            Expr::bracket(xs(sg, 2, 1), xs(sg, 2, 0)),
        );
    }
    for j in [1, 3] {
        let e = Expr::bracket(hts(j), Expr::bracket(xs(1, j, 1), xs(-1, j, 1)));
        push("cubic", p(None, Some(j), Some(j), None, None, None), 3, e);
    }
    let e = Expr::bracket(hts(1), Expr::bracket(xs(1, 2, 1), xs(-1, 2, 1)));
    push("cubic", p(None, Some(1), Some(2), None, None, None), 3, e);
    for sg in SIGNS {
        let e = Expr::sub(
            Expr::bracket(
                Expr::bracket(xs(sg, 1, 1), xs(sg, 2, 0)),
                Expr::bracket(xs(sg, 3, 0), xs(sg, 2, 0)),
            ),
            ps(sg, 1),
        );
        push(
            "extended-serre",
            p(Some(sg), None, None, None, None, None),
            1,
            e,
        );
    }
}

/// Pairs `(r, s)` with `r + s ≤ bound`, in lexicographic order.
fn pairs(bound: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=bound).flat_map(move |r| (0..=bound - r).map(move |s| (r, s)))
}

/// The shifted `[h,x]` relation, valid for every pair of nodes.
pub fn h_shift_expr(sg: i8, i: u8, j: u8, r: u32, s: u32) -> Expr {
    Expr::sum([
        Expr::bracket(hs(i, r + 1), xs(sg, j, s)),
        Expr::neg(Expr::bracket(hs(i, r), xs(sg, j, s + 1))),
        Expr::scale(
            half(-i64::from(sg) * a(i, j)),
            Expr::anti(hs(i, r), xs(sg, j, s)),
        ),
    ])
}

/// The shifted `[x,x]` relation.
pub fn x_shift_expr(sg: i8, i: u8, j: u8, r: u32, s: u32) -> Expr {
    Expr::sum([
        Expr::bracket(xs(sg, i, r + 1), xs(sg, j, s)),
        Expr::neg(Expr::bracket(xs(sg, i, r), xs(sg, j, s + 1))),
        Expr::scale(
            half(-i64::from(sg) * a(i, j)),
            Expr::anti(xs(sg, i, r), xs(sg, j, s)),
        ),
    ])
}

/// `[[x_{1,r},x_{2,0}],[x_{3,s},x_{2,0}]] − P_{r+s}`.
pub fn extended_serre_expr(sg: i8, r: u32, s: u32) -> Expr {
    Expr::sub(
        Expr::bracket(
            Expr::bracket(xs(sg, 1, r), xs(sg, 2, 0)),
            Expr::bracket(xs(sg, 3, s), xs(sg, 2, 0)),
        ),
        ps(sg, r + s),
    )
}

fn drinfeld_relations(bound: u32, out: &mut Vec<Relation>) {
    let kind = PresentationKind::Drinfeld;
    let mut push = |family, params, level: u32, expr| {
        out.push(Relation::new(kind, family, params, level, expr))
    };
    for (r, s) in pairs(bound) {
        for i in NODES {
            for j in NODES {
                push(
                    "hh",
                    p(None, Some(i), Some(j), Some(r), Some(s), None),
                    r + s,
                    Expr::bracket(hs(i, r), hs(j, s)),
                );
            }
        }
    }
    for (r, s) in pairs(bound) {
        for i in NODES {
            for j in NODES {
                let mut e = Expr::bracket(xs(1, i, r), xs(-1, j, s));
                if i == j {
                    e = Expr::sub(e, hs(i, r + s));
                }
                push(
                    "xx-cross",
                    p(None, Some(i), Some(j), Some(r), Some(s), None),
                    r + s,
                    e,
                );
            }
        }
    }
    for sg in SIGNS {
        for i in NODES {
            for j in NODES {
                for r in 0..=bound {
                    let e = Expr::sub(
                        Expr::bracket(hs(i, 0), xs(sg, j, r)),
                        Expr::scale_int(i64::from(sg) * a(i, j), xs(sg, j, r)),
                    );
                    push(
                        "h0-x",
                        p(Some(sg), Some(i), Some(j), Some(r), None, None),
                        r,
                        e,
                    );
                }
            }
        }
    }
    if bound >= 1 {
        for sg in SIGNS {
            for i in NODES {
                for j in NODES {
                    for (r, s) in pairs(bound - 1) {
                        let params = p(Some(sg), Some(i), Some(j), Some(r), Some(s), None);
                        if (i, j) != (2, 2) {
                            push(
                                "h-shift",
                                params.clone(),
                                r + s + 1,
                                h_shift_expr(sg, i, j, r, s),
                            );
                        }
                        push(
                            "h-shift-unified",
                            params,
                            r + s + 1,
                            h_shift_expr(sg, i, j, r, s),
                        );
                    }
                }
            }
        }
    }
    for sg in SIGNS {
        for (r, s) in pairs(bound) {
            push(
                "h2-x2",
                p(Some(sg), None, None, Some(r), Some(s), None),
                r + s,
                Expr::bracket(hs(2, r), xs(sg, 2, s)),
            );
        }
    }
    if bound >= 1 {
        for sg in SIGNS {
            for i in NODES {
                for j in NODES {
                    if (i, j) == (2, 2) {
                        continue;
                    }
                    for (r, s) in pairs(bound - 1) {
                        let params = p(Some(sg), Some(i), Some(j), Some(r), Some(s), None);
                        push("x-shift", params, r + s + 1, x_shift_expr(sg, i, j, r, s));
                    }
                }
            }
        }
    }
    for sg in SIGNS {
        for (r, s) in pairs(bound) {
            push(
                "x2-x2",
                p(Some(sg), None, None, Some(r), Some(s), None),
                r + s,
                Expr::bracket(xs(sg, 2, r), xs(sg, 2, s)),
            );
        }
    }
    for sg in SIGNS {
        for j in [1, 3] {
            for (r, s) in pairs(bound) {
                for t in 0..=bound - r - s {
                    let e = Expr::sum([
                        Expr::bracket(xs(sg, j, r), Expr::bracket(xs(sg, j, s), xs(sg, 2, t))),
                        Expr::bracket(xs(sg, j, s), Expr::bracket(xs(sg, j, r), xs(sg, 2, t))),
                    ]);
                    push(
                        "serre",
                        p(Some(sg), None, Some(j), Some(r), Some(s), Some(t)),
                        r + s + t,
                        e,
                    );
                }
            }
        }
    }
    for sg in SIGNS {
        for (r, s) in pairs(bound) {
            push(
                "extended-serre",
                p(Some(sg), None, None, Some(r), Some(s), None),
                r + s,
                extended_serre_expr(sg, r, s),
            );
        }
    }
}

/// Every relation instance of the given presentation with total level at most `level_bound`.
///
/// The two Yangian presentations also contain the relations of g and make the central
/// generators commute with every generator.
pub fn enumerate_relations(kind: PresentationKind, level_bound: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    lie_relations(kind, &mut out);
    match kind {
        PresentationKind::Lie => central_relations(kind, &levendorskii_generators(0), 0, &mut out),
        PresentationKind::Levendorskii => {
            levendorskii_relations(level_bound, &mut out);
            central_relations(
                kind,
                &levendorskii_generators(level_bound),
                level_bound,
                &mut out,
            );
        }
        PresentationKind::Drinfeld => {
            drinfeld_relations(level_bound, &mut out);
            central_relations(
                kind,
                &drinfeld_generators(level_bound),
                level_bound,
                &mut out,
            );
        }
    }
    out
}

/// Parses a kind name and enumerates its relations.
pub fn enumerate_relations_named(
    kind: &str,
    level_bound: u32,
) -> Result<Vec<Relation>, PresentationError> {
    Ok(enumerate_relations(kind.parse()?, level_bound))
}
