//! Coproduct, counit, antipode and the involution ρ of the level-one presentation, and the
//! suite checking that they define a Hopf superalgebra compatible with ρ.

pub mod suite;
pub mod table;

use crate::free_superalgebra::{
    AlgebraError, Expr, Family, GeneratorSymbol as G, Scalar, SuperPolynomial, TensorPolynomial,
    Word,
};
use crate::reduction_engine::TensorCube;

pub use suite::{hopf_checks, verify_hopf_suite};
pub use table::{antipode_symbol, coproduct_symbol, levendorskii_generators};

/// Errors of the Hopf structure maps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("no Hopf structure data for generator {0}")]
    UnknownGenerator(G),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn first_unknown<'a>(
    mut it: impl Iterator<Item = &'a G>,
    known: impl Fn(G) -> bool,
) -> Result<(), HopfError> {
    match it.find(|s| !known(**s)) {
        Some(s) => Err(HopfError::UnknownGenerator(*s)),
        None => Ok(()),
    }
}

/// Coproduct of a word, multiplied out in the free tensor square.
pub fn coproduct_word(w: &Word<G>) -> Result<TensorPolynomial, HopfError> {
    let mut acc = TensorPolynomial::one();
    for &s in w.symbols() {
        let d = coproduct_symbol(s).ok_or(HopfError::UnknownGenerator(s))?;
        acc = acc.multiply(&d);
    }
    Ok(acc)
}

/// The coproduct, extended from the generator table as an algebra homomorphism.
pub fn coproduct(p: &SuperPolynomial) -> Result<TensorPolynomial, HopfError> {
    let mut out = TensorPolynomial::zero();
    for (w, c) in p.sorted_terms() {
        out.add_scaled(&coproduct_word(w)?, c);
    }
    Ok(out)
}

/// The counit: zero on every generator, multiplicative, with `ε(1) = 1`.
pub fn counit(p: &SuperPolynomial) -> Result<Scalar, HopfError> {
    first_unknown(p.symbols().iter(), |s| coproduct_symbol(s).is_some())?;
    Ok(p.coefficient(&Word::unit()))
}

/// Antipode of a word: `S(ab) = (−1)^{|a||b|} S(b) S(a)`.
pub fn antipode_word(w: &Word<G>) -> Result<SuperPolynomial, HopfError> {
    let syms = w.symbols();
    let mut sign = 0u32;
    for (k, a) in syms.iter().enumerate() {
        for b in &syms[k + 1..] {
            sign += u32::from(a.parity() * b.parity());
        }
    }
    let mut acc = SuperPolynomial::constant(Scalar::sign(sign));
    for &s in syms.iter().rev() {
        let img = antipode_symbol(s).ok_or(HopfError::UnknownGenerator(s))?;
        acc = acc.multiply(&img);
    }
    Ok(acc)
}

/// The antipode, extended as a parity-signed anti-homomorphism.
pub fn antipode(p: &SuperPolynomial) -> Result<SuperPolynomial, HopfError> {
    let mut out = SuperPolynomial::zero();
    for (w, c) in p.sorted_terms() {
        out.add_scaled(&antipode_word(w)?, c);
    }
    Ok(out)
}

/// The part of a tensor whose keys have total degree `k`.
pub fn delta_component(t: &TensorPolynomial, k: u32) -> TensorPolynomial {
    let mut out = TensorPolynomial::zero();
    for (key, c) in t.terms() {
        if key[0].degree() + key[1].degree() == k {
            out.add_term(key.clone(), c.clone());
        }
    }
    out
}

/// ρ on one generator at any level: `x⁺₁ ↦ x⁻₃`, `x⁻₁ ↦ −x⁺₃`, `x^±₂ ↦ −x^∓₂`, `x⁺₃ ↦ −x⁻₁`,
/// `x⁻₃ ↦ x⁺₁`, `h₁ ↔ h₃`, `P^± ↦ −P^∓`, `E_ij ↦ E_{5−i,5−j}`.
pub fn rho_generator(s: G) -> SuperPolynomial {
    let r = s.level();
    let (img, c) = match s.family() {
        Family::XPlus => match s.node() {
            1 => (G::x_minus(3, r), 1),
            2 => (G::x_minus(2, r), -1),
            _ => (G::x_minus(1, r), -1),
        },
        Family::XMinus => match s.node() {
            1 => (G::x_plus(3, r), -1),
            2 => (G::x_plus(2, r), -1),
            _ => (G::x_plus(1, r), 1),
        },
        Family::Cartan => (G::cartan(4 - s.node(), r), 1),
        Family::TildeCartan => (G::tilde_cartan(4 - s.node(), r), 1),
        Family::CentralPPlus => (G::p_minus(r), -1),
        Family::CentralPMinus => (G::p_plus(r), -1),
        Family::MatrixUnit => {
            let (i, j) = s.matrix_indices().expect("matrix unit has indices");
            (G::matrix_unit(5 - i, 5 - j), 1)
        }
    };
    SuperPolynomial::from_word(Word::single(img), Scalar::from_int(c))
}

/// ρ extended multiplicatively.
pub fn rho(p: &SuperPolynomial) -> SuperPolynomial {
    p.substitute(|s| rho_generator(*s))
}

/// ρ on an expression.
pub fn rho_expr(e: &Expr) -> Expr {
    map_expr(e, &|s| poly_expr(&rho_generator(s)))
}

/// `ρ ⊗ ρ`.
pub fn rho_tensor(t: &TensorPolynomial) -> TensorPolynomial {
    let mut out = TensorPolynomial::zero();
    for (key, c) in t.sorted_terms() {
        let a = rho(&SuperPolynomial::from_word(key[0].clone(), Scalar::one()));
        let b = rho(&SuperPolynomial::from_word(key[1].clone(), Scalar::one()));
        out.add_scaled(&TensorPolynomial::pure([&a, &b]), c);
    }
    out
}

/// The graded flip `σ(x ⊗ y) = (−1)^{|x||y|} y ⊗ x`.
pub fn sigma(t: &TensorPolynomial) -> TensorPolynomial {
    let mut out = TensorPolynomial::zero();
    for (key, c) in t.terms() {
        let s = Scalar::sign(u32::from(key[0].parity() * key[1].parity()));
        out.add_term([key[1].clone(), key[0].clone()], c * &s);
    }
    out
}

/// `σ ∘ Δ`.
pub fn opposite_coproduct(p: &SuperPolynomial) -> Result<TensorPolynomial, HopfError> {
    Ok(sigma(&coproduct(p)?))
}

/// `μ ∘ (S ⊗ 1) ∘ Δ` when `left`, otherwise `μ ∘ (1 ⊗ S) ∘ Δ`.
pub fn antipode_convolution(p: &SuperPolynomial, left: bool) -> Result<SuperPolynomial, HopfError> {
    let mut out = SuperPolynomial::zero();
    for (key, c) in coproduct(p)?.sorted_terms() {
        let a = SuperPolynomial::from_word(key[0].clone(), Scalar::one());
        let b = SuperPolynomial::from_word(key[1].clone(), Scalar::one());
        let prod = if left {
            antipode(&a)?.multiply(&b)
        } else {
            a.multiply(&antipode(&b)?)
        };
        out.add_scaled(&prod, c);
    }
    Ok(out)
}

/// `(ε ⊗ id) ∘ Δ` when `left`, otherwise `(id ⊗ ε) ∘ Δ`.
pub fn counit_contraction(p: &SuperPolynomial, left: bool) -> Result<SuperPolynomial, HopfError> {
    let mut out = SuperPolynomial::zero();
    for (key, c) in coproduct(p)?.terms() {
        let (kill, keep) = if left {
            (&key[0], &key[1])
        } else {
            (&key[1], &key[0])
        };
        if kill.is_empty() {
            out.add_term(keep.clone(), c.clone());
        }
    }
    Ok(out)
}

/// `(Δ ⊗ id)Δ(p) − (id ⊗ Δ)Δ(p)`.
pub fn coassociator(p: &SuperPolynomial) -> Result<TensorCube, HopfError> {
    let mut out = TensorCube::zero();
    for (key, c) in coproduct(p)?.sorted_terms() {
        for (k, d) in coproduct_word(&key[0])?.terms() {
            out.add_term([k[0].clone(), k[1].clone(), key[1].clone()], c * d);
        }
        for (k, d) in coproduct_word(&key[1])?.terms() {
            out.add_term([key[0].clone(), k[0].clone(), k[1].clone()], -(c * d));
        }
    }
    Ok(out)
}

fn word_expr(w: &Word<G>) -> Expr {
    match w.symbols() {
        [] => Expr::int(1),
        [s] => Expr::sym(*s),
        ss => Expr::product(ss.iter().map(|s| Expr::sym(*s))),
    }
}

/// A polynomial as an expression.
pub fn poly_expr(p: &SuperPolynomial) -> Expr {
    Expr::sum(
        p.sorted_terms()
            .into_iter()
            .map(|(w, c)| Expr::scale(c.clone(), word_expr(w))),
    )
}

/// A tensor as an expression with tensor nodes.
pub fn tensor_expr(t: &TensorPolynomial) -> Expr {
    Expr::sum(
        t.sorted_terms()
            .into_iter()
            .map(|(k, c)| Expr::scale(c.clone(), Expr::tensor(word_expr(&k[0]), word_expr(&k[1])))),
    )
}

fn map_expr(e: &Expr, f: &dyn Fn(G) -> Expr) -> Expr {
    match e {
        Expr::Sym(s) => f(*s),
        Expr::C0 => map_expr(&Expr::c0_expansion(), f),
        Expr::Scalar(_) => e.clone(),
        Expr::Add(v) => Expr::Add(v.iter().map(|x| map_expr(x, f)).collect()),
        Expr::Mul(v) => Expr::Mul(v.iter().map(|x| map_expr(x, f)).collect()),
        Expr::Scale(c, x) => Expr::scale(c.clone(), map_expr(x, f)),
        Expr::Bracket(a, b) => Expr::bracket(map_expr(a, f), map_expr(b, f)),
        Expr::AntiBracket(a, b) => Expr::anti(map_expr(a, f), map_expr(b, f)),
        Expr::Tensor(a, b) => Expr::tensor(map_expr(a, f), map_expr(b, f)),
    }
}

/// Replaces every symbol of an expression by its coproduct, so that evaluating the result
/// computes `Δ` of the expression node by node.
pub fn coproduct_expr(e: &Expr) -> Result<Expr, HopfError> {
    if e.has_tensor() {
        return Err(AlgebraError::NestedTensor.into());
    }
    first_unknown(e.symbols().iter(), |s| coproduct_symbol(s).is_some())?;
    Ok(map_expr(e, &|s| {
        tensor_expr(&coproduct_symbol(s).expect("checked above"))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: G) -> SuperPolynomial {
        SuperPolynomial::from_symbol(s)
    }

    #[test]
    fn level_zero_is_primitive() {
        let h = sym(G::cartan(1, 0));
        let one = SuperPolynomial::one();
        let expect = TensorPolynomial::pure([&h, &one]).add(&TensorPolynomial::pure([&one, &h]));
        assert_eq!(coproduct(&h).unwrap(), expect);
        assert_eq!(coproduct(&one).unwrap(), TensorPolynomial::one());
    }

    #[test]
    fn higher_symbols_have_no_coproduct() {
        let p = sym(G::x_plus(1, 2));
        assert_eq!(
            coproduct(&p),
            Err(HopfError::UnknownGenerator(G::x_plus(1, 2)))
        );
    }

    #[test]
    fn counit_examples() {
        let p = sym(G::cartan(1, 0)).multiply(&sym(G::x_plus(1, 0)));
        assert!(counit(&p).unwrap().is_zero());
        assert!(counit(&SuperPolynomial::one()).unwrap().is_one());
    }

    #[test]
    fn rho_is_an_involution_on_generators() {
        for s in levendorskii_generators() {
            assert_eq!(rho(&rho_generator(s)), sym(s), "{s}");
            assert_eq!(rho_generator(s).parity().unwrap(), Some(s.parity()));
        }
    }

    #[test]
    fn sigma_signs() {
        let a = sym(G::x_minus(1, 0));
        let b = sym(G::x_plus(1, 0));
        assert_eq!(
            sigma(&TensorPolynomial::pure([&a, &b])),
            TensorPolynomial::pure([&b, &a])
        );
        let a = sym(G::x_plus(2, 0));
        let b = sym(G::x_minus(2, 0));
        assert_eq!(
            sigma(&TensorPolynomial::pure([&a, &b])),
            TensorPolynomial::pure([&b, &a]).neg()
        );
    }
}
