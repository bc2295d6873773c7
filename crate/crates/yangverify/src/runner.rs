//! Suite selection, configuration and parallel dispatch of checks.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use yangverify_core::drinfeld_tower::{
    drinfeld_checks, psi_checks, rho_covariance, DEFAULT_LEVEL_BOUND,
};
use yangverify_core::first_realization::first_realization_checks;
use yangverify_core::hopf_structure::hopf_checks;
use yangverify_core::lie_core::lie_checks;
use yangverify_core::reduction_engine::{Check, CheckResult, TruncationParams};

use crate::report::ReportDocument;

/// The suites `verify` can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Relations of g through the matrix dictionary.
    Lie,
    /// Coproduct images of the relations, antipode, counit, ρ and coassociativity.
    Hopf,
    /// The Drinfeld relations and tower identities up to a total level.
    Drinfeld,
    /// The embedding ψ and the round trips φ∘ψ, ψ∘φ.
    Psi,
    /// ρ-covariance of the Drinfeld relation families.
    Rho,
    /// The hatted generators and their relations with g.
    First,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lie => "lie",
            Suite::Hopf => "hopf",
            Suite::Drinfeld => "drinfeld",
            Suite::Psi => "psi",
            Suite::Rho => "rho",
            Suite::First => "first",
        }
    }

    pub fn uses_level_bound(self) -> bool {
        matches!(self, Suite::Drinfeld | Suite::Rho)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Invalid run configurations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("--jobs must be at least 1")]
    NoWorkers,
    #[error("--level-bound applies only to the drinfeld and rho suites, not {0}")]
    LevelBoundUnused(Suite),
    #[error("--max-degree {max_degree} is below the level bound {level_bound}")]
    DegreeBelowLevel { max_degree: u32, level_bound: u32 },
    #[error("could not start the worker pool: {0}")]
    Pool(String),
}

/// Options of one suite run. `None` fields take the suite defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub suite: Suite,
    pub level_bound: Option<u32>,
    pub max_word_length: Option<usize>,
    pub max_degree: Option<u32>,
    pub max_rounds: Option<u64>,
    pub jobs: usize,
}

impl RunConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            level_bound: None,
            max_word_length: None,
            max_degree: None,
            max_rounds: None,
            jobs: 1,
        }
    }

    /// The level bound and truncation parameters the run uses.
    pub fn resolve(&self) -> Result<(Option<u32>, TruncationParams), ConfigError> {
        if self.jobs == 0 {
            return Err(ConfigError::NoWorkers);
        }
        if self.level_bound.is_some() && !self.suite.uses_level_bound() {
            return Err(ConfigError::LevelBoundUnused(self.suite));
        }
        let level = self
            .suite
            .uses_level_bound()
            .then(|| self.level_bound.unwrap_or(DEFAULT_LEVEL_BOUND));
        let defaults = TruncationParams::default();
        let degree = match (self.max_degree, level) {
            (Some(m), Some(d)) if m < d => {
                return Err(ConfigError::DegreeBelowLevel {
                    max_degree: m,
                    level_bound: d,
                })
            }
            (Some(m), _) => m,
            (None, Some(d)) => defaults.max_filtration_degree.max(d + 1),
            (None, None) => defaults.max_filtration_degree,
        };
        let params = TruncationParams {
            max_word_length: self.max_word_length.unwrap_or(defaults.max_word_length),
            max_filtration_degree: degree,
            max_rounds: self.max_rounds.unwrap_or(defaults.max_rounds),
        };
        Ok((level, params))
    }
}

/// The checks of a suite, for suites that are reductions.
pub fn suite_checks(suite: Suite, level: Option<u32>) -> Option<Vec<Check>> {
    match suite {
        Suite::Lie => Some(lie_checks()),
        Suite::Hopf => Some(hopf_checks()),
        Suite::Drinfeld => Some(drinfeld_checks(level.unwrap_or(DEFAULT_LEVEL_BOUND))),
        Suite::Psi => Some(psi_checks()),
        Suite::First => Some(first_realization_checks()),
        Suite::Rho => None,
    }
}

/// One result with the wall time it took.
pub type TimedResult = (CheckResult, Duration);

fn run_timed(
    checks: &[Check],
    params: &TruncationParams,
    jobs: usize,
) -> Result<Vec<TimedResult>, ConfigError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ConfigError::Pool(e.to_string()))?;
    Ok(pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let outcome = c.run(params);
                (
                    CheckResult {
                        id: c.id.clone(),
                        probe: c.probe,
                        outcome,
                    },
                    start.elapsed(),
                )
            })
            .collect()
    }))
}

/// Runs a suite and assembles its report.
pub fn run_suite(config: &RunConfig) -> Result<ReportDocument, ConfigError> {
    let (level, params) = config.resolve()?;
    let start = Instant::now();
    let results = match suite_checks(config.suite, level) {
        Some(checks) => run_timed(&checks, &params, config.jobs)?,
        None => {
            let d = level.unwrap_or(DEFAULT_LEVEL_BOUND);
            let t = Instant::now();
            let rs = rho_covariance(d);
            let each = t.elapsed() / u32::try_from(rs.len().max(1)).unwrap_or(u32::MAX);
            rs.into_iter().map(|r| (r, each)).collect()
        }
    };
    Ok(ReportDocument::assemble(
        config.suite.name(),
        level,
        params,
        &results,
        start.elapsed(),
    ))
}
