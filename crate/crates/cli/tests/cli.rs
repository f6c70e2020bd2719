//! End-to-end command tests: golden outputs, exit codes, config handling,
//! and print/parse round trips.

use qsuperspace_cli::{run_str, CmdOutput};

fn ok(argv: &[&str]) -> String {
    let out = run_str(argv);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    out.stdout
}

fn usage_error(argv: &[&str]) -> CmdOutput {
    let out = run_str(argv);
    assert_eq!(out.code, 2, "stdout: {}", out.stdout);
    out
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a2*a1"],
            include_str!("golden/normalize_swap.txt"),
        ),
        (
            &["normalize", "--m", "2", "--n", "1", "--z", "1,2,3", "a3*a2"],
            include_str!("golden/normalize_mixed_parity.txt"),
        ),
        (
            &["antipode", "--m", "1", "--n", "1", "--z", "1,2", "a2"],
            include_str!("golden/antipode_a2.txt"),
        ),
        (
            &["coproduct", "--m", "1", "--n", "1", "--z", "1,2", "a1*a2"],
            include_str!("golden/coproduct_a1a2.txt"),
        ),
        (
            &["d", "--m", "1", "--n", "1", "--z", "1,2", "a1*a2"],
            include_str!("golden/d_a1a2.txt"),
        ),
        (
            &["omega", "--m", "1", "--n", "1", "--z", "1,2", "2"],
            include_str!("golden/omega_a2.txt"),
        ),
        (
            &[
                "normalize",
                "--algebra",
                "M",
                "--m",
                "1",
                "--n",
                "1",
                "--z",
                "1,2",
                "x2*x1",
            ],
            include_str!("golden/normalize_m_swap.txt"),
        ),
        (
            &[
                "omega",
                "--algebra",
                "M",
                "--m",
                "1",
                "--n",
                "1",
                "--z",
                "1,2",
                "2",
            ],
            include_str!("golden/omega_x2.txt"),
        ),
        (
            &[
                "normalize",
                "--m",
                "1",
                "--n",
                "1",
                "--z",
                "1,2",
                "--format",
                "json",
                "a2*a1",
            ],
            include_str!("golden/normalize_swap.json"),
        ),
    ];
    for (argv, expected) in cases {
        assert_eq!(&ok(argv), expected, "command: {argv:?}");
    }
}

#[test]
fn worked_examples() {
    assert_eq!(
        ok(&["counit", "--m", "1", "--n", "1", "--z", "1,2", "5 + a1*a2"]),
        "5\n"
    );
    assert_eq!(
        ok(&["counit", "--m", "1", "--n", "1", "--z", "1,2", "a1^-3"]),
        "1\n"
    );
    assert_eq!(
        ok(&["partial", "--m", "1", "--n", "1", "--z", "1,2", "2", "a1*a2"]),
        "p2 * a1\n"
    );
    assert_eq!(
        ok(&["vf", "--m", "1", "--n", "1", "--z", "1,2", "1", "a1^2*a2"]),
        "4 * a1^2*a2\n"
    );
    assert_eq!(
        ok(&["vf", "--m", "1", "--n", "1", "--z", "1,2", "2", "a1*a2"]),
        "p2 * a1^3\n"
    );
    assert_eq!(
        ok(&[
            "limit",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            "p2^-1*a1*a2 + h2*a2"
        ]),
        "a1*a2\n"
    );
    assert_eq!(
        ok(&[
            "antipode",
            "--algebra",
            "M",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            "x2"
        ]),
        "-p2 * g^-2*x2\n"
    );
    assert_eq!(
        ok(&[
            "normalize",
            "--algebra",
            "M",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            "g*x2*g^-1"
        ]),
        "p2 * x2\n"
    );
    assert_eq!(
        ok(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a2*a2"]),
        "0\n"
    );
    assert_eq!(
        ok(&["coproduct", "--m", "1", "--n", "1", "--z", "1,2", "a1"]),
        "a1 (x) a1\n"
    );
    assert_eq!(
        ok(&[
            "coproduct",
            "--algebra",
            "M",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            "x1"
        ]),
        "1 (x) x1 + x1 (x) 1\n"
    );
    // A trailing pure-scalar term with several monomials parenthesizes so
    // the output stays inside the grammar.
    assert_eq!(
        ok(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a1^-1 + 1 - p2"]),
        "a1^-1 + (1 - p2)\n"
    );
    assert_eq!(
        ok(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a1^-1 + (1 - p2)"]),
        "a1^-1 + (1 - p2)\n"
    );
    assert_eq!(
        ok(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "1 - p2 + a1"]),
        "1 - p2 + a1\n"
    );
}

#[test]
fn exit_codes() {
    // Config validation: z_1 != 1 is rejected.
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "2,1", "a2*a1"]);
    assert!(out.stderr.contains("z_1 must be 1"), "{}", out.stderr);

    // Unknown symbols and bad indices.
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a0"]);
    assert!(out.stderr.contains("out of range"), "{}", out.stderr);
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "b2"]);
    assert!(out.stderr.contains("unknown symbol"), "{}", out.stderr);
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "x2"]);
    assert!(out.stderr.contains("unknown symbol"), "{}", out.stderr);

    // Illegal negative powers.
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a2^-1"]);
    assert!(
        out.stderr.contains("illegal negative power"),
        "{}",
        out.stderr
    );

    // Syntax error carries a position.
    let out = usage_error(&["normalize", "--m", "1", "--n", "1", "--z", "1,2", "a1 *"]);
    assert!(out.stderr.contains("syntax error at 1:5"), "{}", out.stderr);

    // Bad flags produce usage text.
    let out = usage_error(&["normalize", "--bogus", "a1"]);
    assert!(!out.stderr.is_empty());

    // Unknown suite.
    let out = usage_error(&["verify", "nonsense"]);
    assert!(out.stderr.contains("unknown suite"), "{}", out.stderr);

    // Verification success is exit 0.
    let out = run_str(&[
        "verify",
        "hopf",
        "--m",
        "1",
        "--n",
        "1",
        "--z",
        "1,2",
        "--samples",
        "30",
        "--seed",
        "7",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("verification: PASS"));
}

#[test]
fn config_file_layering() {
    let dir = std::env::temp_dir().join(format!("qss-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("session.conf");
    std::fs::write(
        &path,
        "m = 2\nn = 1\nz = 1,2,3\nalgebra = A\n# comment\nseed = 5\n",
    )
    .unwrap();
    let path_str = path.to_str().unwrap();

    let from_file = ok(&["normalize", "--config", path_str, "a3*a2"]);
    assert_eq!(from_file, include_str!("golden/normalize_mixed_parity.txt"));

    // Flags override the file.
    let overridden = ok(&[
        "normalize",
        "--config",
        path_str,
        "--m",
        "1",
        "--z",
        "1,2",
        "a2*a1",
    ]);
    assert_eq!(overridden, include_str!("golden/normalize_swap.txt"));

    let out = run_str(&["normalize", "--config", "/nonexistent/qss.conf", "a1"]);
    assert_eq!(out.code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_stable_across_runs() {
    let argv = &[
        "verify",
        "cartan",
        "--m",
        "1",
        "--n",
        "1",
        "--z",
        "1,2",
        "--samples",
        "15",
        "--seed",
        "3",
    ];
    let a = run_str(argv);
    let b = run_str(argv);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn print_parse_round_trip() {
    // Printing an evaluated element and evaluating the printed text again
    // is the identity.
    let a_cases = [
        "a2*a1",
        "a1^-2*a2 + 3/2*a1",
        "p2^-1*a1*a2 - h2^2*a2 + 7",
        "d(a1*a2)",
        "omega(2)",
        "Delta(a1*a2)",
        "S(a2) + a1",
        "d(a1)*d(a2)",
    ];
    for expr in a_cases {
        let argv = ["normalize", "--m", "1", "--n", "1", "--z", "1,2", expr];
        let printed = ok(&argv);
        let reprinted = ok(&[
            "normalize",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            printed.trim_end(),
        ]);
        assert_eq!(printed, reprinted, "expression: {expr}");
    }
    let m_cases = [
        "x2*x1",
        "g^-2*x1^2*x2 + h2*x2",
        "d(x1*x2)",
        "omega(2)",
        "Delta(x1*x2)",
        "S(x2)*g",
    ];
    for expr in m_cases {
        let argv = [
            "normalize",
            "--algebra",
            "M",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            expr,
        ];
        let printed = ok(&argv);
        let reprinted = ok(&[
            "normalize",
            "--algebra",
            "M",
            "--m",
            "1",
            "--n",
            "1",
            "--z",
            "1,2",
            printed.trim_end(),
        ]);
        assert_eq!(printed, reprinted, "expression: {expr}");
    }
}

#[test]
fn random_elements_round_trip() {
    use qsuperspace::sample::{random_element, Rng};
    use qsuperspace::logext::algebra::random_m_element;
    use qsuperspace_cli::eval::{Evaluator, Value};
    use qsuperspace_cli::parser::parse;
    use qsuperspace_cli::session::{Algebra, Format, Options};

    let base = Options {
        m: Some(2),
        n: Some(1),
        z: Some(vec![1, -2, 3]),
        ..Options::default()
    };
    let mut rng = Rng::new(99);

    let mut session = base.clone().into_session().unwrap();
    session.format = Format::Text;
    for _ in 0..100 {
        let e = random_element(&mut rng, &session.param, 3);
        let printed = Value::A(e.clone()).to_string();
        let ast = parse(&printed, Algebra::A, session.param.total())
            .unwrap_or_else(|err| panic!("reparse of '{printed}': {err}"));
        let value = Evaluator::new(&session).eval(&ast).unwrap();
        match value {
            Value::A(back) => assert_eq!(back, e, "text: {printed}"),
            Value::Scalar(c) => {
                assert_eq!(
                    Value::A(qsuperspace::superalgebra::scalar_elem(c)).to_string(),
                    printed
                );
            }
            other => panic!("unexpected kind for {printed}: {other:?}"),
        }
    }

    let mut m_session = base.into_session().unwrap();
    m_session.algebra = Algebra::M;
    for _ in 0..100 {
        let e = random_m_element(&mut rng, &m_session.param, 3);
        let printed = Value::M(e.clone()).to_string();
        let ast = parse(&printed, Algebra::M, m_session.param.total())
            .unwrap_or_else(|err| panic!("reparse of '{printed}': {err}"));
        let value = Evaluator::new(&m_session).eval(&ast).unwrap();
        match value {
            Value::M(back) => assert_eq!(back, e, "text: {printed}"),
            Value::Scalar(c) => {
                assert_eq!(
                    Value::M(qsuperspace::logext::algebra::scalar_elem_m(c)).to_string(),
                    printed
                );
            }
            other => panic!("unexpected kind for {printed}: {other:?}"),
        }
    }
}
