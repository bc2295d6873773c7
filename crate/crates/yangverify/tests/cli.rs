mod common;

use std::io::Cursor;
use std::process::Command;
use std::time::Duration;

use proptest::prelude::*;
use yangverify::repl::run_repl;
use yangverify::{
    normalize, parse_expression, pretty, run_suite, ParseError, ReportDocument, RunConfig, Suite,
    Verdict,
};
use yangverify_core::free_superalgebra::{Expr, GeneratorSymbol as G, Scalar, SuperPolynomial};
use yangverify_core::reduction_engine::{
    CheckResult, NormalForm, ReductionReport, Status, TruncationParams,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_yangverify"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printing_then_parsing_gives_the_normal_form(e in common::expr_strategy()) {
        let printed = pretty(&e);
        let parsed = parse_expression(&printed).map_err(|err| TestCaseError::fail(err.render(&printed)))?;
        prop_assert_eq!(&parsed, &normalize(&e));
        prop_assert_eq!(pretty(&parsed), printed);
    }
}

#[test]
fn grammar_examples() {
    let e = parse_expression("[x+[1,0], x-[1,0]]").unwrap();
    assert_eq!(
        e,
        Expr::bracket(Expr::sym(G::x_plus(1, 0)), Expr::sym(G::x_minus(1, 0)))
    );
    let e = parse_expression("1/2 * {h[1,0], x+[1,0]}").unwrap();
    assert!(
        matches!(e, Expr::Scale(ref c, ref inner) if *c == Scalar::new(1, 2) && matches!(**inner, Expr::AntiBracket(..)))
    );
    let e = parse_expression("x+[1,1] (x) 1 + P-[2] * C0").unwrap();
    assert!(matches!(e, Expr::Tensor(..)));
}

#[test]
fn grammar_errors_carry_positions() {
    let cases: [(&str, usize, bool); 3] = [
        ("[x+[1, -1], h[1,0]]", 7, true),
        ("[x+[1,0], x-[1,0]", 17, true),
        ("[y[1,0], h[1,0]]", 1, false),
    ];
    for (text, pos, syntax) in cases {
        let err = parse_expression(text).unwrap_err();
        assert_eq!(err.position(), pos, "{text}: {err}");
        assert_eq!(
            matches!(err, ParseError::Syntax { .. }),
            syntax,
            "{text}: {err}"
        );
        assert!(err.render(text).lines().nth(1).unwrap().ends_with('^'));
    }
}

fn fake(id: &str, status: Status, probe: bool) -> (CheckResult, Duration) {
    let report = ReductionReport {
        status,
        normal_form: NormalForm::Free(SuperPolynomial::zero()),
        rule_applications: 3,
        truncation_used: None,
        reason: None,
    };
    (
        CheckResult {
            id: id.into(),
            probe,
            outcome: Ok(report),
        },
        Duration::from_millis(2),
    )
}

#[test]
fn verdict_and_summary_follow_the_entries() {
    let p = TruncationParams::default();
    let assemble =
        |rs: &[(CheckResult, Duration)]| ReportDocument::assemble("t", None, p, rs, Duration::ZERO);
    let zero = assemble(&[
        fake("a", Status::Zero, false),
        fake("b", Status::Inconclusive, true),
    ]);
    assert_eq!((zero.verdict, zero.exit_code()), (Verdict::AllZero, 0));
    assert_eq!(zero.summary.failed_probes, 1);
    let nonzero = assemble(&[
        fake("a", Status::Inconclusive, false),
        fake("b", Status::NonzeroNormalForm, false),
    ]);
    assert_eq!(
        (nonzero.verdict, nonzero.exit_code()),
        (Verdict::Nonzero, 1)
    );
    let inconclusive = assemble(&[
        fake("a", Status::Zero, false),
        fake("b", Status::Inconclusive, false),
    ]);
    assert_eq!(
        (inconclusive.verdict, inconclusive.exit_code()),
        (Verdict::Inconclusive, 2)
    );
    let s = &nonzero.summary;
    assert_eq!(s.total, s.zero + s.nonzero + s.inconclusive + s.error);
}

#[test]
fn reports_are_byte_stable_and_timings_stay_outside_the_checksum() {
    let mut one = RunConfig::new(Suite::Drinfeld);
    one.level_bound = Some(2);
    let mut many = one.clone();
    many.jobs = 4;
    let a = run_suite(&one).unwrap();
    let b = run_suite(&many).unwrap();
    assert_eq!(a.body(), b.body());
    assert_eq!(a.checksum, b.checksum);
    assert!(a.body().starts_with("schema: yangverify/1\n"));
    assert!(!a.body().contains("wall_ms"));
    assert!(a.to_text().contains("wall_ms"));
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["schema"], "yangverify/1");
    assert_eq!(
        json["checksum"],
        serde_json::Value::String(a.checksum.clone())
    );
    assert_eq!(json["summary"]["total"], a.checks.len());
}

#[test]
fn configuration_errors() {
    let mut c = RunConfig::new(Suite::Lie);
    c.jobs = 0;
    assert!(run_suite(&c).is_err());
    let mut c = RunConfig::new(Suite::Hopf);
    c.level_bound = Some(2);
    assert!(run_suite(&c).is_err());
    let mut c = RunConfig::new(Suite::Drinfeld);
    c.level_bound = Some(4);
    c.max_degree = Some(3);
    assert!(run_suite(&c).is_err());
    c.max_degree = None;
    assert_eq!(c.resolve().unwrap().1.max_filtration_degree, 5);
}

#[test]
fn binary_exit_codes() {
    let out = bin()
        .args(["verify", "lie", "--jobs", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("schema: yangverify/1\nsuite: lie\n"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("64 checks"));

    let out = bin()
        .args(["verify", "first", "--max-rounds", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "lie", "--format", "json-like"])
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verdict"], "all-zero");

    let out = bin()
        .args(["verify", "lie", "--jobs", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().args(["verify", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn eval_subcommand() {
    let out = bin()
        .args(["eval", "[x+[1,0], x-[1,0]] - h[1,0]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("status: zero"));
}

#[test]
fn repl_session() {
    let input = "\
[x+[1,0], x-[1,0]]
:kind drinfeld
[h[1,1], h[2,1]]
:print 1/2*{h[1,0],x+[1,0]}
[x+[1, -1], h[1,0]]
:set max-rounds 50
:show
:quit
[h[1,0], h[2,0]]
";
    let mut out = Vec::new();
    let mut err = Vec::new();
    run_repl(Cursor::new(input), &mut out, &mut err, false).unwrap();
    let out = String::from_utf8(out).unwrap();
    let err = String::from_utf8(err).unwrap();
    let expect = "\
status: nonzero
normal form: h[1;0]
kind: drinfeld
status: zero
normal form: 0
1/2 * {h[1,0], x+[1,0]}
max-rounds: 50
kind: drinfeld
max-word-len: 8
max-degree: 4
max-rounds: 50
";
    assert_eq!(out, expect);
    assert!(err.contains("column 8"), "{err}");
    assert_eq!(err.lines().filter(|l| l.starts_with("error:")).count(), 1);
}
