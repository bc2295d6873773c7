//! Structure constants of g from the 4×4 matrix super-commutator.

use std::sync::OnceLock;

use crate::free_superalgebra::{index_parity, Scalar, SuperPolynomial, Word};

use super::basis::{Letter, LetterPoly, LieBasisElement};

/// Sparse linear combination of basis elements.
pub type LieVector = Vec<(LieBasisElement, Scalar)>;

/// Element of gl(2|2) ⊕ C² with diagonal entries kept explicitly.
#[derive(Clone, Debug, Default)]
struct GlElement {
    m: [[Scalar; 4]; 4],
    p: Scalar,
    k: Scalar,
}

fn eps(i: u8, j: u8) -> i64 {
    match (i, j) {
        (1, 2) => 1,
        (2, 1) => -1,
        _ => 0,
    }
}

fn eps_bar(i: u8, j: u8) -> i64 {
    match (i, j) {
        (3, 4) => 1,
        (4, 3) => -1,
        _ => 0,
    }
}

fn embed(b: LieBasisElement) -> GlElement {
    let mut g = GlElement::default();
    let one = Scalar::one();
    if let Some((i, j)) = b.matrix_indices() {
        g.m[i as usize - 1][j as usize - 1] = one;
    } else if let Some(n) = b.cartan_node() {
        let diag: [i64; 4] = match n {
            1 => [-1, 1, 0, 0],
            2 => [0, -1, -1, 0],
            _ => [0, 0, 1, -1],
        };
        for (k, d) in diag.iter().enumerate() {
            g.m[k][k] = Scalar::from_int(*d);
        }
    } else if b == LieBasisElement::P {
        g.p = one;
    } else {
        g.k = one;
    }
    g
}

/// `[E_ij, E_kl]` for 1-based indices, accumulated into `out` with weight `c`.
fn unit_bracket(i: u8, j: u8, k: u8, l: u8, c: &Scalar, out: &mut GlElement) {
    if k == j {
        out.m[i as usize - 1][l as usize - 1] += c;
    }
    if i == l {
        let odd =
            (index_parity(i) + index_parity(j)) % 2 * ((index_parity(k) + index_parity(l)) % 2);
        let s = if odd == 1 {
            -Scalar::one()
        } else {
            Scalar::one()
        };
        out.m[k as usize - 1][j as usize - 1] -= &(c * &s);
    }
    let cp = eps_bar(i, k) * eps(j, l);
    if cp != 0 {
        out.p += &(c * &Scalar::from_int(cp));
    }
    let ck = eps(i, k) * eps_bar(j, l);
    if ck != 0 {
        out.k += &(c * &Scalar::from_int(ck));
    }
}

fn gl_bracket(x: &GlElement, y: &GlElement) -> GlElement {
    let mut out = GlElement::default();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            let a = &x.m[i as usize - 1][j as usize - 1];
            if a.is_zero() {
                continue;
            }
            for k in 1..=4u8 {
                for l in 1..=4u8 {
                    let b = &y.m[k as usize - 1][l as usize - 1];
                    if b.is_zero() {
                        continue;
                    }
                    unit_bracket(i, j, k, l, &(a * b), &mut out);
                }
            }
        }
    }
    out
}

/// Rewrites a diagonal with vanishing supertrace in the Cartan basis `h₁, h₂, h₃`.
pub fn diagonal_to_cartan(d: &[Scalar; 4]) -> Option<LieVector> {
    let st = &(&d[0] + &d[1]) - &(&d[2] + &d[3]);
    if !st.is_zero() {
        return None;
    }
    let a = -d[0].clone();
    let b = -(&d[0] + &d[1]);
    let c = -d[3].clone();
    Some(
        [(1, a), (2, b), (3, c)]
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(n, s)| (LieBasisElement::h(n), s))
            .collect(),
    )
}

fn project(g: &GlElement) -> LieVector {
    let mut v = LieVector::new();
    for b in LieBasisElement::all() {
        if let Some((i, j)) = b.matrix_indices() {
            let c = &g.m[i as usize - 1][j as usize - 1];
            if !c.is_zero() {
                v.push((b, c.clone()));
            }
        }
    }
    let diag: [Scalar; 4] = std::array::from_fn(|k| g.m[k][k].clone());
    v.extend(diagonal_to_cartan(&diag).expect("bracket output has vanishing supertrace"));
    if !g.p.is_zero() {
        v.push((LieBasisElement::P, g.p.clone()));
    }
    if !g.k.is_zero() {
        v.push((LieBasisElement::K, g.k.clone()));
    }
    v.sort_by_key(|(b, _)| *b);
    v
}

/// The full 17×17 bracket table of g.
pub struct StructureTable {
    entries: Vec<LieVector>,
    letters: Vec<LetterPoly>,
}

impl StructureTable {
    fn build() -> Self {
        let n = LieBasisElement::COUNT;
        let mut entries = Vec::with_capacity(n * n);
        let mut letters = Vec::with_capacity(n * n);
        for a in LieBasisElement::all() {
            for b in LieBasisElement::all() {
                let v = project(&gl_bracket(&embed(a), &embed(b)));
                let mut p = LetterPoly::zero();
                for (e, c) in &v {
                    p.add_term(Word::single(Letter::new(*e, 0)), c.clone());
                }
                entries.push(v);
                letters.push(p);
            }
        }
        Self { entries, letters }
    }

    /// The shared table.
    pub fn get() -> &'static StructureTable {
        static TABLE: OnceLock<StructureTable> = OnceLock::new();
        TABLE.get_or_init(Self::build)
    }

    pub fn bracket(&self, a: LieBasisElement, b: LieBasisElement) -> &LieVector {
        &self.entries[a.index() * LieBasisElement::COUNT + b.index()]
    }

    /// The bracket as a polynomial in level-0 letters.
    pub fn bracket_letters(&self, a: LieBasisElement, b: LieBasisElement) -> &LetterPoly {
        &self.letters[a.index() * LieBasisElement::COUNT + b.index()]
    }
}

/// `[a,b]` written in generator symbols.
pub fn structure_bracket(a: LieBasisElement, b: LieBasisElement) -> SuperPolynomial {
    let mut r = SuperPolynomial::zero();
    for (e, c) in StructureTable::get().bracket(a, b) {
        r.add_scaled(&e.to_symbol_poly(), c);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(v: &LieVector) -> Vec<(String, String)> {
        v.iter()
            .map(|(b, c)| (b.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn extended_serre_images() {
        let t = StructureTable::get();
        assert_eq!(
            vec_of(t.bracket(LieBasisElement::e(1, 3), LieBasisElement::e(2, 4))),
            [("K".into(), "1".into())]
        );
        assert_eq!(
            vec_of(t.bracket(LieBasisElement::e(3, 1), LieBasisElement::e(4, 2))),
            [("P".into(), "1".into())]
        );
    }

    #[test]
    fn e12_e21_is_minus_h1() {
        let t = StructureTable::get();
        assert_eq!(
            vec_of(t.bracket(LieBasisElement::e(1, 2), LieBasisElement::e(2, 1))),
            [("h[1,0]".into(), "-1".into())]
        );
    }

    #[test]
    fn diagonal_conversion_rejects_supertrace() {
        let one = Scalar::one();
        let z = Scalar::zero();
        assert!(diagonal_to_cartan(&[one.clone(), z.clone(), z.clone(), z.clone()]).is_none());
        let half = Scalar::new(1, 2);
        let c0 = diagonal_to_cartan(&[half.clone(), half.clone(), half.clone(), half]).unwrap();
        assert_eq!(
            vec_of(&c0),
            [
                ("h[1,0]".into(), "-1/2".into()),
                ("h[2,0]".into(), "-1".into()),
                ("h[3,0]".into(), "-1/2".into())
            ]
        );
    }
}
