//! Level-by-level solution of the bracket table of PBW letters.
//!
//! At total level `n` every bracket `[A,B]` of letters with `level(A)+level(B) = n` is an
//! unknown. Equations come from the letter-defining brackets, the defining relations of
//! level `n`, and the super-Jacobi identity on letter triples of total level `n`. Each
//! equation is evaluated in normal order and is linear in the unknowns; equations that need
//! an unsolved entry in a non-linear position wait until that entry is solved.

use std::collections::{BTreeMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::{FxHashMap, FxHashSet};

use crate::free_superalgebra::{
    AlgebraError, Expr, ExprAlgebra, Generator, GeneratorSymbol, Parity, Scalar,
};
use crate::lie_core::{
    BracketSource, Entry, Letter, LetterPoly, LieBasisElement, LinPoly, StraightenError,
    Straightener,
};
use crate::yangian_presentation::{enumerate_relations, PresentationKind, Relation};

use super::letters::{seeds, symbol_value, Seed};

/// Slot of a bracket table entry.
#[derive(Clone, Debug)]
pub enum Slot {
    Known(LetterPoly),
    Unknown(u32),
}

type LevelMap = FxHashMap<(Letter, Letter), Slot>;

/// Brackets of letters, stored per total level.
#[derive(Clone, Default)]
pub struct ClosureTable {
    levels: Vec<Arc<LevelMap>>,
}

impl ClosureTable {
    /// Highest total level covered, if any.
    pub fn max_level(&self) -> Option<u32> {
        self.levels.len().checked_sub(1).map(|n| n as u32)
    }

    /// Number of unsolved entries at level `n`.
    pub fn unsolved(&self, n: u32) -> usize {
        self.levels.get(n as usize).map_or(0, |m| {
            m.values().filter(|s| matches!(s, Slot::Unknown(_))).count()
        })
    }

    /// The solved bracket `[a,b]` for `a ≤ b`.
    pub fn get(&self, a: Letter, b: Letter) -> Option<&LetterPoly> {
        let n = (a.level() + b.level()) as usize;
        match self.levels.get(n)?.get(&(a, b))? {
            Slot::Known(p) => Some(p),
            Slot::Unknown(_) => None,
        }
    }
}

impl BracketSource for ClosureTable {
    fn entry(&self, a: Letter, b: Letter) -> Entry<'_> {
        let n = (a.level() + b.level()) as usize;
        match self.levels.get(n).and_then(|m| m.get(&(a, b))) {
            Some(Slot::Known(p)) => Entry::Known(p),
            Some(Slot::Unknown(id)) => Entry::Unknown(*id),
            None => Entry::Missing,
        }
    }
}

/// Errors of evaluation into the letter algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Straighten(#[from] StraightenError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("symbol {0} is not legal in this presentation")]
    IllegalSymbol(GeneratorSymbol),
    #[error("intermediate word of length {0} exceeds the word-length limit")]
    WordTooLong(usize),
}

/// Evaluation of expressions into normal-ordered letter polynomials.
pub struct LetterEval<'a, T: BracketSource> {
    pub kind: PresentationKind,
    pub table: &'a T,
    pub st: &'a mut Straightener,
}

impl<T: BracketSource> ExprAlgebra for LetterEval<'_, T> {
    type Value = LinPoly;
    type Error = EvalError;

    fn scalar(&mut self, c: &Scalar) -> Result<LinPoly, EvalError> {
        Ok(LinPoly::constant(c.clone()))
    }

    fn symbol(&mut self, s: GeneratorSymbol) -> Result<LinPoly, EvalError> {
        let p = symbol_value(self.kind, s).ok_or(EvalError::IllegalSymbol(s))?;
        Ok(LinPoly::known(p))
    }

    fn add(&mut self, mut a: LinPoly, b: &LinPoly) -> Result<LinPoly, EvalError> {
        a.add_scaled(b, &Scalar::one());
        Ok(a)
    }

    fn scale(&mut self, a: LinPoly, c: &Scalar) -> Result<LinPoly, EvalError> {
        Ok(a.scale(c))
    }

    fn mul(&mut self, a: &LinPoly, b: &LinPoly) -> Result<LinPoly, EvalError> {
        Ok(self.st.multiply(self.table, a, b)?)
    }

    fn bracket(
        &mut self,
        a: &LinPoly,
        pa: Parity,
        b: &LinPoly,
        pb: Parity,
        anti: bool,
    ) -> Result<LinPoly, EvalError> {
        Ok(self.st.bracket(self.table, a, pa, b, pb, anti)?)
    }
}

#[derive(Clone, Copy, Debug)]
enum Source {
    Seed(usize),
    Relation(usize),
    Jacobi(Letter, Letter, Letter),
}

/// Reduced equation row `U_pivot + Σ c_k U_k + known = 0`.
#[derive(Clone, Debug)]
struct Row {
    others: BTreeMap<u32, Scalar>,
    known: LetterPoly,
}

/// Statistics of one solved level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub unknowns: usize,
    pub equations: usize,
    pub unsolved: usize,
    pub anomalies: usize,
    pub stalled: usize,
    pub filtration_violations: usize,
}

/// Incremental solver for one presentation.
pub struct ClosureSolver {
    kind: PresentationKind,
    relations: Vec<Relation>,
    table: ClosureTable,
    stats: Vec<LevelStats>,
}

fn letters_at(level: u32) -> impl Iterator<Item = Letter> {
    LieBasisElement::all().map(move |b| Letter::new(b, level))
}

fn koszul(a: Letter, b: Letter) -> Scalar {
    Scalar::sign(u32::from(a.parity() * b.parity()))
}

impl ClosureSolver {
    pub fn new(kind: PresentationKind) -> Self {
        assert!(
            kind != PresentationKind::Lie,
            "the Lie presentation uses the structure table"
        );
        Self {
            kind,
            relations: Vec::new(),
            table: ClosureTable::default(),
            stats: Vec::new(),
        }
    }

    pub fn table(&self) -> &ClosureTable {
        &self.table
    }

    pub fn stats(&self) -> &[LevelStats] {
        &self.stats
    }

    /// Solves every level up to and including `n`.
    pub fn extend_to(&mut self, n: u32) {
        if self.table.max_level().is_some_and(|m| m >= n) {
            return;
        }
        self.relations = enumerate_relations(self.kind, n);
        while self.table.max_level().is_none_or(|m| m < n) {
            let next = self.table.max_level().map_or(0, |m| m + 1);
            self.solve_level(next);
        }
    }

    fn solve_level(&mut self, n: u32) {
        let mut current = LevelMap::default();
        let mut pairs = Vec::new();
        for la in 0..=n / 2 {
            let lb = n - la;
            for a in letters_at(la) {
                for b in letters_at(lb) {
                    if a < b || (a == b && a.parity() == 1) {
                        current.insert((a, b), Slot::Unknown(pairs.len() as u32));
                        pairs.push((a, b));
                    }
                }
            }
        }
        self.table.levels.push(Arc::new(current));
        let mut stats = LevelStats {
            unknowns: pairs.len(),
            ..Default::default()
        };

        let seed_list: Vec<Seed> = seeds(self.kind, n);
        let rel_idx: Vec<usize> = (0..self.relations.len())
            .filter(|&i| self.relations[i].level == n)
            .collect();
        let mut queue: VecDeque<Source> = VecDeque::new();
        queue.extend((0..seed_list.len()).map(Source::Seed));
        queue.extend(rel_idx.iter().map(|&i| Source::Relation(i)));
        for t in jacobi_triples(n) {
            queue.push_back(Source::Jacobi(t.0, t.1, t.2));
        }

        let mut st = Straightener::new();
        let mut rows: FxHashMap<u32, Row> = FxHashMap::default();
        let mut occurs: FxHashMap<u32, FxHashSet<u32>> = FxHashMap::default();
        let mut waiting: FxHashMap<u32, Vec<Source>> = FxHashMap::default();
        let mut solved: FxHashSet<u32> = FxHashSet::default();

        while let Some(src) = queue.pop_front() {
            let value = self.evaluate(&mut st, &seed_list, src);
            let eq = match value {
                Ok(v) => v,
                Err(EvalError::Straighten(StraightenError::NeedsEntry(id))) => {
                    waiting.entry(id).or_default().push(src);
                    continue;
                }
                Err(e) => panic!("closure equation {src:?} at level {n} failed: {e}"),
            };
            stats.equations += 1;
            let newly = add_equation(eq, &mut rows, &mut occurs, &mut stats);
            if newly.is_empty() {
                continue;
            }
            let level = Arc::get_mut(self.table.levels.last_mut().expect("current level"))
                .expect("unshared level");
            for id in newly {
                if !solved.insert(id) {
                    continue;
                }
                let row = &rows[&id];
                level.insert(pairs[id as usize], Slot::Known(row.known.neg()));
                if let Some(w) = waiting.remove(&id) {
                    queue.extend(w);
                }
            }
            st.forget_unknowns();
        }
        stats.stalled = waiting.values().map(Vec::len).sum();
        stats.unsolved = pairs.len() - solved.len();
        for id in &solved {
            let known = &rows[id].known;
            if known.terms().any(|(w, _)| w.len() > 1 && w.degree() >= n) {
                stats.filtration_violations += 1;
            }
        }
        self.stats.push(stats);
    }

    fn evaluate(
        &self,
        st: &mut Straightener,
        seed_list: &[Seed],
        src: Source,
    ) -> Result<LinPoly, EvalError> {
        match src {
            Source::Seed(i) => {
                let s = &seed_list[i];
                let mut v = letter_bracket(st, &self.table, s.a, s.b)?;
                v.add_scaled(&LinPoly::known(s.value.clone()), &Scalar::from_int(-1));
                Ok(v)
            }
            Source::Relation(i) => {
                let mut ev = LetterEval {
                    kind: self.kind,
                    table: &self.table,
                    st,
                };
                self.relations[i].expr.eval(&mut ev)
            }
            Source::Jacobi(x, y, z) => {
                let t = &self.table;
                let lx = LinPoly::letter(x);
                let ly = LinPoly::letter(y);
                let lz = LinPoly::letter(z);
                let yz = letter_bracket(st, t, y, z)?;
                let xy = letter_bracket(st, t, x, y)?;
                let xz = letter_bracket(st, t, x, z)?;
                let (px, py, pz) = (x.parity(), y.parity(), z.parity());
                let mut j = st.bracket(t, &lx, px, &yz, py ^ pz, false)?;
                let b = st.bracket(t, &xy, px ^ py, &lz, pz, false)?;
                j.add_scaled(&b, &Scalar::from_int(-1));
                let c = st.bracket(t, &ly, py, &xz, px ^ pz, false)?;
                j.add_scaled(&c, &-koszul(x, y));
                Ok(j)
            }
        }
    }
}

/// `[a,b]` of two letters in normal order.
pub fn letter_bracket<T: BracketSource>(
    st: &mut Straightener,
    t: &T,
    a: Letter,
    b: Letter,
) -> Result<LinPoly, StraightenError> {
    st.bracket(
        t,
        &LinPoly::letter(a),
        a.parity(),
        &LinPoly::letter(b),
        b.parity(),
        false,
    )
}

/// Multisets `x ≤ y ≤ z` of letters with total level `n`, skipping repeated even letters.
fn jacobi_triples(n: u32) -> Vec<(Letter, Letter, Letter)> {
    let all: Vec<Letter> = (0..=n).flat_map(letters_at).collect();
    let mut out = Vec::new();
    for (ix, &x) in all.iter().enumerate() {
        for (iy, &y) in all.iter().enumerate().skip(ix) {
            if x.level() + y.level() > n {
                continue;
            }
            for &z in all.iter().skip(iy) {
                if x.level() + y.level() + z.level() != n {
                    continue;
                }
                let repeats_even = (x == y && x.parity() == 0) || (y == z && y.parity() == 0);
                if !repeats_even {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Adds `eq = 0` to the reduced system and returns the pivots that became fully solved.
fn add_equation(
    mut eq: LinPoly,
    rows: &mut FxHashMap<u32, Row>,
    occurs: &mut FxHashMap<u32, FxHashSet<u32>>,
    stats: &mut LevelStats,
) -> Vec<u32> {
    let pivots: Vec<(u32, Scalar)> = eq
        .lin
        .iter()
        .filter(|(id, _)| rows.contains_key(id))
        .map(|(id, c)| (*id, c.clone()))
        .collect();
    for (p, c) in pivots {
        let row = &rows[&p];
        eq.lin.remove(&p);
        for (k, d) in &row.others {
            eq.add_unknown(*k, -(&c * d));
        }
        eq.known.add_scaled(&row.known, &-c);
    }
    let Some((&q, cq)) = eq.lin.iter().next_back() else {
        if !eq.known.is_zero() {
            stats.anomalies += 1;
        }
        return Vec::new();
    };
    let inv = cq.recip();
    let mut others = BTreeMap::new();
    for (k, c) in &eq.lin {
        if *k != q {
            others.insert(*k, c * &inv);
        }
    }
    let known = eq.known.scale(&inv);
    let mut newly = Vec::new();
    if let Some(holders) = occurs.remove(&q) {
        let mut holders: Vec<u32> = holders.into_iter().collect();
        holders.sort_unstable();
        for h in holders {
            let row = rows.get_mut(&h).expect("holder row");
            let d = row.others.remove(&q).expect("holder mentions pivot");
            for (k, c) in &others {
                let e = row.others.entry(*k).or_default();
                *e -= &(&d * c);
                if e.is_zero() {
                    row.others.remove(k);
                    if let Some(s) = occurs.get_mut(k) {
                        s.remove(&h);
                    }
                } else {
                    occurs.entry(*k).or_default().insert(h);
                }
            }
            row.known.add_scaled(&known, &-d);
            if row.others.is_empty() {
                newly.push(h);
            }
        }
    }
    for k in others.keys() {
        occurs.entry(*k).or_default().insert(q);
    }
    if others.is_empty() {
        newly.push(q);
    }
    rows.insert(q, Row { others, known });
    newly
}

/// Shared solvers, one per Yangian presentation.
fn solver(kind: PresentationKind) -> &'static Mutex<ClosureSolver> {
    static YL: OnceLock<Mutex<ClosureSolver>> = OnceLock::new();
    static YD: OnceLock<Mutex<ClosureSolver>> = OnceLock::new();
    match kind {
        PresentationKind::Levendorskii => YL.get_or_init(|| Mutex::new(ClosureSolver::new(kind))),
        PresentationKind::Drinfeld => YD.get_or_init(|| Mutex::new(ClosureSolver::new(kind))),
        PresentationKind::Lie => panic!("the Lie presentation uses the structure table"),
    }
}

/// The bracket table of a Yangian presentation solved through level `n`.
pub fn closure(kind: PresentationKind, n: u32) -> ClosureTable {
    let mut s = solver(kind).lock().unwrap_or_else(|e| e.into_inner());
    s.extend_to(n);
    let mut t = s.table.clone();
    t.levels.truncate(n as usize + 1);
    t
}

/// Statistics of the shared solver for `kind` through level `n`.
pub fn closure_stats(kind: PresentationKind, n: u32) -> Vec<LevelStats> {
    let mut s = solver(kind).lock().unwrap_or_else(|e| e.into_inner());
    s.extend_to(n);
    s.stats[..=n as usize].to_vec()
}

/// Evaluates a relation-free expression into the letter algebra of `kind`.
pub fn eval_expr<T: BracketSource>(
    kind: PresentationKind,
    table: &T,
    st: &mut Straightener,
    e: &Expr,
) -> Result<LinPoly, EvalError> {
    e.eval(&mut LetterEval { kind, table, st })
}
