//! Line-oriented interactive evaluator.

use std::io::{self, BufRead, Write};

use yangverify_core::drinfeld_tower::expand;
use yangverify_core::free_superalgebra::Expr;
use yangverify_core::hopf_structure::{antipode, coproduct_expr, poly_expr, rho_expr};
use yangverify_core::reduction_engine::{reduce_expr, ReductionReport, TruncationParams};
use yangverify_core::yangian_presentation::PresentationKind;

use crate::parser::{parse_expression, pretty};

const HELP: &str = "\
<expr>               reduce an expression in the current presentation
:print <expr>        echo the parsed expression
:expand <expr>       rewrite higher-level Drinfeld generators in level-0 and level-1 ones
:delta <expr>        reduce the coproduct image
:antipode <expr>     reduce the antipode image
:rho <expr>          reduce the image under rho
:kind lie|levendorskii|drinfeld
:set max-word-len|max-degree|max-rounds <n>
:show                print the presentation and truncation parameters
:help                this text
:quit                leave";

/// Session state.
pub struct Session {
    pub kind: PresentationKind,
    pub params: TruncationParams,
}

impl Default for Session {
    fn default() -> Self {
        Self {
            kind: PresentationKind::Levendorskii,
            params: TruncationParams::default(),
        }
    }
}

fn describe(r: &ReductionReport) -> String {
    let mut s = format!("status: {}\nnormal form: {}", r.status, r.normal_form);
    if let Some(reason) = &r.reason {
        s.push_str(&format!("\nreason: {reason}"));
    }
    s
}

impl Session {
    fn parse(&self, text: &str) -> Result<Expr, String> {
        parse_expression(text).map_err(|e| e.render(text))
    }

    fn reduce(&self, e: &Expr) -> Result<String, String> {
        reduce_expr(e, self.kind, &self.params)
            .map(|r| describe(&r))
            .map_err(|e| e.to_string())
    }

    /// Handles one input line. `None` ends the session.
    pub fn handle(&mut self, line: &str) -> Option<Result<String, String>> {
        let line = line.trim();
        if line.is_empty() {
            return Some(Ok(String::new()));
        }
        let (cmd, rest) = match line.strip_prefix(':') {
            Some(c) => c
                .split_once(char::is_whitespace)
                .map_or((c, ""), |(a, b)| (a, b.trim())),
            None => return Some(self.parse(line).and_then(|e| self.reduce(&e))),
        };
        Some(match cmd {
            "quit" | "q" => return None,
            "help" => Ok(HELP.into()),
            "show" => Ok(format!(
                "kind: {}\nmax-word-len: {}\nmax-degree: {}\nmax-rounds: {}",
                self.kind.name(),
                self.params.max_word_length,
                self.params.max_filtration_degree,
                self.params.max_rounds
            )),
            "print" => self.parse(rest).map(|e| pretty(&e)),
            "expand" => self
                .parse(rest)
                .and_then(|e| expand(&e).map(|x| pretty(&x)).map_err(|e| e.to_string())),
            "delta" => self
                .parse(rest)
                .and_then(|e| coproduct_expr(&e).map_err(|e| e.to_string()))
                .and_then(|e| self.reduce(&e)),
            "antipode" => self
                .parse(rest)
                .and_then(|e| e.to_poly().map_err(|e| e.to_string()))
                .and_then(|p| antipode(&p).map_err(|e| e.to_string()))
                .and_then(|p| self.reduce(&poly_expr(&p))),
            "rho" => self.parse(rest).and_then(|e| self.reduce(&rho_expr(&e))),
            "kind" => match rest {
                "lie" => Ok(self.set_kind(PresentationKind::Lie)),
                "levendorskii" => Ok(self.set_kind(PresentationKind::Levendorskii)),
                "drinfeld" => Ok(self.set_kind(PresentationKind::Drinfeld)),
                other => Err(format!("unknown presentation `{other}`")),
            },
            "set" => self.set(rest),
            other => Err(format!("unknown command `:{other}`; try :help")),
        })
    }

    fn set_kind(&mut self, k: PresentationKind) -> String {
        self.kind = k;
        format!("kind: {}", k.name())
    }

    fn set(&mut self, rest: &str) -> Result<String, String> {
        let (key, value) = rest
            .split_once(char::is_whitespace)
            .ok_or("usage: :set <key> <n>")?;
        let n: u64 = value
            .trim()
            .parse()
            .map_err(|_| format!("`{}` is not a non-negative integer", value.trim()))?;
        match key {
            "max-word-len" => self.params.max_word_length = n as usize,
            "max-degree" => {
                self.params.max_filtration_degree = u32::try_from(n).map_err(|e| e.to_string())?
            }
            "max-rounds" => self.params.max_rounds = n,
            other => return Err(format!("unknown parameter `{other}`")),
        }
        Ok(format!("{key}: {n}"))
    }
}

/// Reads lines from `input` until end of input or `:quit`. Results go to `output`, errors to `errors`.
pub fn run_repl<R: BufRead, W: Write, E: Write>(
    input: R,
    mut output: W,
    mut errors: E,
    prompt: bool,
) -> io::Result<()> {
    let mut session = Session::default();
    let mut lines = input.lines();
    loop {
        if prompt {
            write!(output, "yv> ")?;
            output.flush()?;
        }
        let Some(line) = lines.next() else { break };
        match session.handle(&line?) {
            None => break,
            Some(Ok(s)) if s.is_empty() => {}
            Some(Ok(s)) => writeln!(output, "{s}")?,
            Some(Err(s)) => writeln!(errors, "error: {s}")?,
        }
    }
    Ok(())
}
