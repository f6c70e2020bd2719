//! Verification suites across the reference and randomized configurations.

use qsuperspace::sample::{random_config, Rng};
use qsuperspace::verify::run_suite;
use qsuperspace::ParamConfig;

#[test]
fn all_suites_pass_on_reference_configs() {
    let c0 = ParamConfig::new(1, 1, vec![1, 2]).unwrap();
    let c1 = ParamConfig::new(2, 2, vec![1, 2, 3, -1]).unwrap();
    for (name, cfg) in [("C0", &c0), ("C1", &c1)] {
        for report in run_suite("all", cfg, 25, 4, 41).unwrap() {
            assert!(report.passed(), "{name}: {report}");
        }
    }
}

#[test]
fn all_suites_pass_on_random_configs() {
    let mut rng = Rng::new(20240817);
    for round in 0..6 {
        let cfg = random_config(&mut rng, 5, 3);
        for report in run_suite("all", &cfg, 10, 3, 1000 + round).unwrap() {
            assert!(
                report.passed(),
                "config m={} n={} z={:?}: {report}",
                cfg.even_count(),
                cfg.odd_count(),
                cfg.weights()
            );
        }
    }
}
