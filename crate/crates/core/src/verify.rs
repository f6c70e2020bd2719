//! Named verification suites, as exposed by the command-line `verify`
//! subcommand.

use crate::calculus;
use crate::cartan;
use crate::config::ParamConfig;
use crate::error::AlgebraError;
use crate::hopf::{self, TensorMode};
use crate::logext;
use crate::report::CheckReport;

pub const SUITES: &[&str] = &[
    "hopf",
    "weyl",
    "bicovariance",
    "cartan",
    "m-hopf",
    "m-calculus",
    "theta",
    "m-vf",
    "log-truncation",
    "classical",
    "all",
];

/// Run one named suite. `order` bounds the truncated-logarithm check.
pub fn run_suite(
    name: &str,
    cfg: &ParamConfig,
    samples: usize,
    order: usize,
    seed: u64,
) -> Result<Vec<CheckReport>, AlgebraError> {
    let reports = match name {
        "hopf" => vec![hopf_suite(cfg, samples, seed)],
        "weyl" => vec![calculus::verify_weyl(cfg, samples, seed)],
        "bicovariance" => vec![calculus::verify_bicovariance(cfg, samples, seed)],
        "cartan" => vec![
            cartan::verify_mc_relations(cfg, samples, seed),
            cartan::verify_t_hopf(cfg, samples, seed),
        ],
        "m-hopf" => vec![logext::verify_hopf_m(cfg, samples, seed)],
        "m-calculus" => vec![logext::verify_m_calculus(cfg, samples, seed)],
        "theta" => vec![logext::verify_theta(cfg, samples, seed)],
        "m-vf" => vec![logext::verify_m_vf(cfg, samples, seed)],
        "log-truncation" => {
            let mut out = Vec::new();
            for n in 1..=order.max(1) {
                out.push(logext::log_truncation_check(cfg, n)?);
            }
            out
        }
        "classical" => vec![
            calculus::verify_classical_calculus(cfg, samples, seed),
            logext::calculus::verify_classical_m(cfg, samples, seed),
        ],
        "all" => {
            let mut out = Vec::new();
            for suite in SUITES.iter().filter(|s| **s != "all") {
                out.extend(run_suite(suite, cfg, samples, order, seed)?);
            }
            out
        }
        other => {
            return Err(AlgebraError::InvalidConfig(format!(
                "unknown suite '{other}', expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(reports)
}

/// The Hopf suite bundles the axiom checks with the tensor-mode search:
/// the Koszul-sign multiplication admits no residual, while the
/// bicharacter multiplication always leaves one on the grouplike/deformed
/// pairs once a second generator exists.
fn hopf_suite(cfg: &ParamConfig, samples: usize, seed: u64) -> CheckReport {
    let mut report = hopf::verify_hopf(cfg, samples, 2, seed);

    let bichar = hopf::relation_residuals(cfg, TensorMode::Bicharacter);
    if cfg.total() > 1 {
        report.record(
            "bicharacter multiplication breaks the coproduct",
            !bichar.is_empty(),
            || "no residual found".into(),
        );
        if let Some(first) = bichar.first() {
            let classical = first.residual.map_coeffs(|c| {
                crate::coeff::ParamCoeff::from_rational(c.nsyms(), c.classical_limit())
            });
            report.record(
                "bicharacter residual vanishes classically",
                classical.is_zero(),
                || format!("({}, {}): {}", first.i, first.j, first.residual),
            );
        }
    }
    report
}

/// Every suite on one configuration; stops collecting on nothing, the
/// caller inspects pass/fail per report.
pub fn run_all(
    cfg: &ParamConfig,
    samples: usize,
    order: usize,
    seed: u64,
) -> Result<Vec<CheckReport>, AlgebraError> {
    run_suite("all", cfg, samples, order, seed)
}
