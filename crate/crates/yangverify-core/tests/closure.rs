use yangverify_core::lie_core::{BracketSource, Entry, Letter, LieBasisElement, StructureTable};
use yangverify_core::reduction_engine::{closure, closure_stats};
use yangverify_core::yangian_presentation::PresentationKind;

const KINDS: [PresentationKind; 2] = [PresentationKind::Levendorskii, PresentationKind::Drinfeld];

#[test]
fn bracket_table_is_determined_through_level_four() {
    for kind in KINDS {
        for (n, s) in closure_stats(kind, 4).iter().enumerate() {
            assert_eq!(s.unsolved, 0, "{kind} level {n}: {s:?}");
            assert_eq!(s.anomalies, 0, "{kind} level {n}: {s:?}");
            assert_eq!(s.filtration_violations, 0, "{kind} level {n}: {s:?}");
        }
    }
}

#[test]
fn unknown_counts_per_level() {
    let expect = [144, 289, 433, 578, 722];
    for kind in KINDS {
        let got: Vec<usize> = closure_stats(kind, 4).iter().map(|s| s.unknowns).collect();
        assert_eq!(got, expect, "{kind}");
    }
}

#[test]
fn level_zero_table_is_the_lie_superalgebra() {
    let lie = StructureTable::get();
    for kind in KINDS {
        let t = closure(kind, 0);
        for a in LieBasisElement::all() {
            for b in LieBasisElement::all() {
                let (la, lb) = (Letter::new(a, 0), Letter::new(b, 0));
                if la > lb || (la == lb && a.parity() == 0) {
                    continue;
                }
                let Entry::Known(p) = t.entry(la, lb) else {
                    panic!("{kind}: [{a},{b}] unsolved")
                };
                assert_eq!(p, lie.bracket_letters(a, b), "{kind}: [{a},{b}]");
            }
        }
    }
}
