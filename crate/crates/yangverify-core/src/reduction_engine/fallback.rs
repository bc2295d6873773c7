//! Bounded ideal membership by linear algebra in the free algebra.

use std::collections::BTreeMap;

use crate::free_superalgebra::{Family, GeneratorSymbol, Scalar, SuperPolynomial, Word};
use crate::lie_core::LieBasisElement;
use crate::yangian_presentation::{enumerate_relations, PresentationKind};

use super::letters::x_letter;
use super::{EngineError, NormalForm, ReductionReport, Status, TruncationParams};

type Key = (usize, u32, Word<GeneratorSymbol>);

fn key(w: &Word<GeneratorSymbol>) -> Key {
    (w.len(), w.degree(), w.clone())
}

type Weight = [i8; 4];

fn symbol_weight(s: GeneratorSymbol) -> Weight {
    match s.family() {
        Family::XPlus => x_letter(1, s.node(), 0).0.base().weight(),
        Family::XMinus => x_letter(-1, s.node(), 0).0.base().weight(),
        Family::Cartan | Family::TildeCartan => [0; 4],
        Family::CentralPPlus => LieBasisElement::P.weight(),
        Family::CentralPMinus => LieBasisElement::K.weight(),
        Family::MatrixUnit => LieBasisElement::from_symbol(s)
            .map(|(b, _)| b.weight())
            .unwrap_or_default(),
    }
}

fn word_weight(w: &Word<GeneratorSymbol>) -> Weight {
    let mut out = [0i8; 4];
    for &s in w.symbols() {
        for (o, d) in out.iter_mut().zip(symbol_weight(s)) {
            *o += d;
        }
    }
    out
}

fn add_weights(a: Weight, b: Weight) -> Weight {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Key, SuperPolynomial>,
}

impl Echelon {
    fn reduce(&self, p: &SuperPolynomial) -> SuperPolynomial {
        let mut p = p.clone();
        loop {
            let top = p
                .terms()
                .map(|(w, _)| key(w))
                .filter(|k| self.rows.contains_key(k))
                .max();
            let Some(k) = top else { return p };
            let c = p.coefficient(&k.2);
            p.add_scaled(&self.rows[&k], &-c);
        }
    }

    fn insert(&mut self, r: &SuperPolynomial) {
        let r = self.reduce(r);
        let Some(k) = r.terms().map(|(w, _)| key(w)).max() else {
            return;
        };
        let c = r.coefficient(&k.2).recip();
        self.rows.insert(k, r.scale(&c));
    }
}

fn words_up_to(alphabet: &[GeneratorSymbol], len: usize) -> Vec<Word<GeneratorSymbol>> {
    let mut out = vec![Word::unit()];
    let mut frontier = vec![Word::unit()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for &s in alphabet {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Decides whether `p` lies in the span of `u·r·v` for defining relations `r` written in the
/// symbols of `p` and the Cartan generators up to the highest level in `p`, with every word no longer than `max_word_length` and of degree at most
/// `max(deg p, max_filtration_degree)`. At most `max_rounds` spanning elements are used.
pub fn ideal_membership_fallback(
    p: &SuperPolynomial,
    kind: PresentationKind,
    params: &TruncationParams,
) -> Result<ReductionReport, EngineError> {
    let mut alphabet = p.symbols();
    if let Some(&s) = alphabet.iter().find(|s| !kind.allows(**s)) {
        return Err(EngineError::IllegalSymbol(s, kind));
    }
    let max_len = params.max_word_length;
    let max_deg = p
        .degree()
        .finite()
        .unwrap_or(0)
        .max(params.max_filtration_degree);
    let level_bound = alphabet.iter().map(|s| s.level()).max().unwrap_or(0);
    for r in 0..=level_bound {
        for i in 1..=3 {
            alphabet.extend([
                GeneratorSymbol::cartan(i, r),
                GeneratorSymbol::tilde_cartan(i, r.max(1)),
            ]);
        }
    }
    alphabet.retain(|s| kind.allows(*s) && s.level() <= level_bound);
    alphabet.sort();
    alphabet.dedup();
    let relations: Vec<SuperPolynomial> = enumerate_relations(kind, level_bound)
        .into_iter()
        .map(|r| r.residual)
        .filter(|r| {
            !r.is_zero()
                && r.symbols()
                    .iter()
                    .all(|s| alphabet.binary_search(s).is_ok())
        })
        .collect();

    let targets: Vec<Weight> = {
        let mut v: Vec<Weight> = p.terms().map(|(w, _)| word_weight(w)).collect();
        v.sort();
        v.dedup();
        v
    };

    let mut ech = Echelon::default();
    let mut rows = 0u64;
    let mut exhausted = false;
    let spare = max_len.saturating_sub(
        relations
            .iter()
            .map(|r| r.max_word_len())
            .min()
            .unwrap_or(max_len),
    );
    let pads = words_up_to(&alphabet, spare);
    let mut by_weight: BTreeMap<Weight, Vec<&Word<GeneratorSymbol>>> = BTreeMap::new();
    for w in &pads {
        by_weight.entry(word_weight(w)).or_default().push(w);
    }
    'outer: for r in &relations {
        let (rl, rd) = (r.max_word_len(), r.degree().finite().unwrap_or(0));
        let rw = r
            .terms()
            .next()
            .map(|(w, _)| word_weight(w))
            .unwrap_or_default();
        for u in &pads {
            if u.len() + rl > max_len || u.degree() + rd > max_deg {
                continue;
            }
            let uw = add_weights(word_weight(u), rw);
            for t in &targets {
                let need = [t[0] - uw[0], t[1] - uw[1], t[2] - uw[2], t[3] - uw[3]];
                for v in by_weight.get(&need).into_iter().flatten() {
                    if u.len() + rl + v.len() > max_len || u.degree() + rd + v.degree() > max_deg {
                        continue;
                    }
                    rows += 1;
                    if rows > params.max_rounds {
                        exhausted = true;
                        break 'outer;
                    }
                    let pu = SuperPolynomial::from_word(u.clone(), Scalar::one());
                    let pv = SuperPolynomial::from_word((*v).clone(), Scalar::one());
                    ech.insert(&pu.multiply(r).multiply(&pv));
                }
            }
        }
    }

    let rest = ech.reduce(p);
    let truncation_used = Some(*params);
    if rest.is_zero() {
        return Ok(ReductionReport {
            status: Status::Zero,
            normal_form: NormalForm::Free(rest),
            rule_applications: rows.min(params.max_rounds),
            truncation_used,
            reason: None,
        });
    }
    let reason = if exhausted {
        Some("row budget exhausted".to_string())
    } else if p.max_word_len() + 2 > max_len {
        Some("word length bound leaves no room for relation multiples".to_string())
    } else {
        None
    };
    Ok(ReductionReport {
        status: if reason.is_some() {
            Status::Inconclusive
        } else {
            Status::NonzeroNormalForm
        },
        normal_form: NormalForm::Free(rest),
        rule_applications: rows.min(params.max_rounds),
        truncation_used,
        reason,
    })
}
