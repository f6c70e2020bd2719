//! Property tests for the algebraic laws: ring axioms of the coefficient
//! ring, homomorphism property of specialization, confluence of the
//! normal-ordering rewrite systems, and the structural identities of the
//! superspace product.

use num_traits::{One, Zero};
use proptest::prelude::*;

use qsuperspace::coeff::{rat, rat_int, ParamCoeff, Rational};
use qsuperspace::logext::{self, MFactor};
use qsuperspace::sample::Rng;
use qsuperspace::superalgebra::{self, commute_series, mul, normal_form, AElement, SuperMonomial};
use qsuperspace::ParamConfig;

// ---------------------------------------------------------------------------
// Strategies.

fn arb_config() -> impl Strategy<Value = ParamConfig> {
    (1usize..=3, 0usize..=2).prop_flat_map(|(m, n)| {
        proptest::collection::vec(-3i64..=3, m + n - 1).prop_map(move |ztail| {
            let mut z = vec![1i64];
            z.extend(ztail);
            ParamConfig::new(m, n, z).expect("valid configuration")
        })
    })
}

fn arb_coeff(nsyms: usize) -> impl Strategy<Value = ParamCoeff> {
    proptest::collection::vec(
        (
            proptest::collection::vec(-2i64..=2, nsyms),
            proptest::collection::vec(0u32..=2, nsyms),
            -4i64..=4,
            1i64..=3,
        ),
        0..3,
    )
    .prop_map(move |terms| {
        let mut c = ParamCoeff::zero(nsyms);
        for (p, h, num, den) in terms {
            c = &c + &ParamCoeff::monomial(nsyms, p, h, rat(num, den));
        }
        c
    })
}

fn arb_word(cfg: &ParamConfig) -> impl Strategy<Value = Vec<(usize, i64)>> {
    let total = cfg.total();
    let odd_start = cfg.even_count() + 1;
    proptest::collection::vec(
        (1usize..=total).prop_flat_map(move |idx| {
            let lo = if idx == 1 { -2 } else { 0 };
            let hi = if idx >= odd_start { 1 } else { 2 };
            (Just(idx), lo..=hi as i64)
        }),
        0..6,
    )
}

// ---------------------------------------------------------------------------
// Independent rewriting oracle: random adjacent unit swaps.

/// Normal-order a word by swapping adjacent out-of-order unit factors in a
/// random (seeded) order, instead of folding products left to right.
fn bubble_normal_form(cfg: &ParamConfig, word: &[(usize, i64)], seed: u64) -> AElement {
    let n = cfg.total();
    let mut units: Vec<(usize, i64)> = Vec::new();
    for &(idx, pow) in word {
        let step = if pow >= 0 { 1 } else { -1 };
        for _ in 0..pow.abs() {
            units.push((idx, step));
        }
    }

    let mut rng = Rng::new(seed);
    let mut coeff = ParamCoeff::one(n);
    loop {
        let candidates: Vec<usize> = (0..units.len().saturating_sub(1))
            .filter(|&k| units[k].0 > units[k + 1].0)
            .collect();
        if candidates.is_empty() {
            break;
        }
        let k = candidates[rng.below(candidates.len() as u64) as usize];
        let (j, ej) = units[k];
        let (i, ei) = units[k + 1];
        // a_j a_i -> (-1)^{î ĵ} p_i^{z_j} p_j^{-z_i} a_i a_j, per unit pair.
        let cross = ej * ei;
        let mut p = vec![0i64; n];
        p[i - 1] += cfg.z(j) * cross;
        p[j - 1] -= cfg.z(i) * cross;
        let sign = cfg.parity(i) * cfg.parity(j) * cross;
        let r = if sign & 1 == 1 {
            rat_int(-1)
        } else {
            rat_int(1)
        };
        coeff = &coeff * &ParamCoeff::monomial(n, p, vec![0; n], r);
        units.swap(k, k + 1);
    }

    let mut exps = vec![0i64; n];
    for (idx, e) in units {
        exps[idx - 1] += e;
    }
    #[allow(clippy::needless_range_loop)] // parity and weight lookups need the index
    for i in 1..n {
        if cfg.is_odd(i + 1) && exps[i] > 1 {
            return AElement::zero();
        }
    }
    AElement::from_term(
        SuperMonomial::new(cfg, exps).expect("valid exponents"),
        coeff,
    )
}

// ---------------------------------------------------------------------------
// Coefficient-ring laws.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coeff_ring_axioms(
        a in arb_coeff(3),
        b in arb_coeff(3),
        c in arb_coeff(3),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &ParamCoeff::zero(3), a.clone());
        prop_assert_eq!(&a * &ParamCoeff::one(3), a.clone());
        prop_assert_eq!(&a - &a, ParamCoeff::zero(3));
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(
        a in arb_coeff(3),
        b in arb_coeff(3),
        pv in proptest::collection::vec((1i64..=4, 1i64..=3), 3),
        hv in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let p_vals: Vec<Rational> = pv.iter().map(|&(n, d)| rat(n, d)).collect();
        let h_vals: Vec<Rational> = hv.iter().map(|&n| rat_int(n)).collect();
        let sum = (&a + &b).specialize(&p_vals, &h_vals).unwrap();
        let prod = (&a * &b).specialize(&p_vals, &h_vals).unwrap();
        let sa = a.specialize(&p_vals, &h_vals).unwrap();
        let sb = b.specialize(&p_vals, &h_vals).unwrap();
        prop_assert_eq!(sum, &sa + &sb);
        prop_assert_eq!(prod, sa * sb);
    }

    #[test]
    fn classical_limit_of_parameter_powers(
        idx in 2usize..=3,
        k in -4i64..=4,
        f in 1u32..=3,
    ) {
        let p = ParamCoeff::p_pow(3, idx, k);
        prop_assert!(p.classical_limit().is_one());
        let h = ParamCoeff::h_sym(3, idx).pow(f);
        prop_assert!(h.classical_limit().is_zero());
    }
}

// ---------------------------------------------------------------------------
// Superspace rewriting laws.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_confluent(
        (cfg, word, seed) in arb_config().prop_flat_map(|cfg| {
            let w = arb_word(&cfg);
            (Just(cfg), w, proptest::num::u64::ANY)
        }),
    ) {
        let n = cfg.total();
        let direct = normal_form(&cfg, ParamCoeff::one(n), &word).unwrap();
        let bubbled = bubble_normal_form(&cfg, &word, seed);
        prop_assert_eq!(direct, bubbled);
    }

    #[test]
    fn normal_form_is_idempotent(
        (cfg, word) in arb_config().prop_flat_map(|cfg| {
            let w = arb_word(&cfg);
            (Just(cfg), w)
        }),
    ) {
        let n = cfg.total();
        let e = normal_form(&cfg, ParamCoeff::one(n), &word).unwrap();
        // Re-normalizing every monomial of the normal form is the identity.
        let mut again = AElement::zero();
        for (m, c) in e.terms() {
            let back: Vec<(usize, i64)> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, k)| **k != 0)
                .map(|(i, k)| (i + 1, *k))
                .collect();
            again = again.add(&normal_form(&cfg, c.clone(), &back).unwrap());
        }
        prop_assert_eq!(e, again);
    }

    #[test]
    fn multiplication_is_associative_with_unit(
        (cfg, w1, w2, w3) in arb_config().prop_flat_map(|cfg| {
            let ws = (arb_word(&cfg), arb_word(&cfg), arb_word(&cfg));
            (Just(cfg), ws.0, ws.1, ws.2)
        }),
    ) {
        let n = cfg.total();
        let u = normal_form(&cfg, ParamCoeff::one(n), &w1).unwrap();
        let v = normal_form(&cfg, ParamCoeff::one(n), &w2).unwrap();
        let w = normal_form(&cfg, ParamCoeff::one(n), &w3).unwrap();
        prop_assert_eq!(
            mul(&cfg, &mul(&cfg, &u, &v), &w),
            mul(&cfg, &u, &mul(&cfg, &v, &w))
        );
        let one = superalgebra::one_elem(&cfg);
        prop_assert_eq!(mul(&cfg, &one, &u), u.clone());
        prop_assert_eq!(mul(&cfg, &u, &one), u);
    }

    #[test]
    fn parity_is_multiplicative(
        (cfg, w1, w2) in arb_config().prop_flat_map(|cfg| {
            let ws = (arb_word(&cfg), arb_word(&cfg));
            (Just(cfg), ws.0, ws.1)
        }),
    ) {
        let n = cfg.total();
        let u = normal_form(&cfg, ParamCoeff::one(n), &w1).unwrap();
        let v = normal_form(&cfg, ParamCoeff::one(n), &w2).unwrap();
        let (pu, pv) = (
            superalgebra::parity_of(&cfg, &u),
            superalgebra::parity_of(&cfg, &v),
        );
        // Words produce homogeneous elements: single monomial in, one out.
        if let (Some(pu), Some(pv)) = (pu, pv) {
            let prod = mul(&cfg, &u, &v);
            if !prod.is_zero() {
                prop_assert_eq!(
                    superalgebra::parity_of(&cfg, &prod),
                    Some((pu + pv) & 1)
                );
            }
        }
    }

    #[test]
    fn grouplike_conjugation_weight(
        (cfg, word) in arb_config().prop_flat_map(|cfg| {
            let w = arb_word(&cfg);
            (Just(cfg), w)
        }),
    ) {
        // a_1 u = p(u) u a_1 with p(u) = prod p_l^{k_l} on monomials.
        let n = cfg.total();
        let u = normal_form(&cfg, ParamCoeff::one(n), &word).unwrap();
        for (m, _) in u.terms() {
            let mono = AElement::from_term(m.clone(), ParamCoeff::one(n));
            let a1 = superalgebra::generator_elem(&cfg, 1, 1).unwrap();
            let mut p = vec![0i64; n];
            for (i, &k) in m.exps().iter().enumerate() {
                p[i] = k;
            }
            let weight = ParamCoeff::monomial(n, p, vec![0; n], rat_int(1));
            let lhs = mul(&cfg, &a1, &mono);
            let rhs = mul(&cfg, &mono, &a1).scale(&weight);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn series_commutation_rule(
        (cfg, coeffs, j) in (1usize..=3, 1usize..=2).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-3i64..=3, m + n - 1).prop_flat_map(move |ztail| {
                let mut z = vec![1i64];
                z.extend(ztail);
                let cfg = ParamConfig::new(m, n, z).expect("valid configuration");
                let total = cfg.total();
                (
                    Just(cfg),
                    proptest::collection::vec((-3i64..=3, 1i64..=2), 1..5),
                    2usize..=total,
                )
            })
        }),
    ) {
        let c: Vec<Rational> = coeffs.iter().map(|&(n, d)| rat(n, d)).collect();
        let (lhs, rhs) = commute_series(&cfg, &c, j).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// ---------------------------------------------------------------------------
// Logarithmic extension rewriting laws.

fn arb_m_word(cfg: &ParamConfig) -> impl Strategy<Value = Vec<MFactor>> {
    let total = cfg.total();
    let odd_start = cfg.even_count() + 1;
    proptest::collection::vec(
        prop_oneof![
            (-2i64..=2).prop_map(MFactor::G),
            (1usize..=total).prop_flat_map(move |idx| {
                let hi = if idx >= odd_start { 1 } else { 2 };
                (Just(idx), 0..=hi as i64).prop_map(|(i, p)| MFactor::X(i, p))
            }),
        ],
        0..5,
    )
}

/// Pairwise rewriting oracle for the extension: normalize a word by
/// multiplying a random adjacent pair at each step instead of folding
/// left to right.
fn random_association_m(cfg: &ParamConfig, word: &[MFactor], seed: u64) -> logext::MElement {
    use qsuperspace::logext::algebra::{grouplike_elem, mul_m, one_elem_m, x_elem};
    let mut rng = Rng::new(seed);
    let mut parts: Vec<logext::MElement> = word
        .iter()
        .map(|f| match *f {
            MFactor::G(pow) => grouplike_elem(cfg, pow),
            MFactor::X(idx, pow) => x_elem(cfg, idx, pow).unwrap(),
        })
        .collect();
    if parts.is_empty() {
        return one_elem_m(cfg);
    }
    while parts.len() > 1 {
        let k = rng.below(parts.len() as u64 - 1) as usize;
        let merged = mul_m(cfg, &parts[k], &parts[k + 1]);
        parts[k] = merged;
        parts.remove(k + 1);
    }
    parts.pop().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extension_normal_form_is_association_independent(
        (cfg, word, seed) in arb_config().prop_flat_map(|cfg| {
            let w = arb_m_word(&cfg);
            (Just(cfg), w, proptest::num::u64::ANY)
        }),
    ) {
        let n = cfg.total();
        let direct = logext::normal_form_m(&cfg, ParamCoeff::one(n), &word).unwrap();
        let random = random_association_m(&cfg, &word, seed);
        prop_assert_eq!(direct, random);
    }

    #[test]
    fn extension_grouplike_conjugation(
        (cfg, idx, s) in (1usize..=3, 1usize..=2).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-3i64..=3, m + n - 1).prop_flat_map(move |ztail| {
                let mut z = vec![1i64];
                z.extend(ztail);
                let cfg = ParamConfig::new(m, n, z).expect("valid configuration");
                let total = cfg.total();
                (Just(cfg), 2usize..=total, -3i64..=3)
            })
        }),
    ) {
        // g^s x_i g^{-s} = p_i^s x_i
        let n = cfg.total();
        let got = logext::normal_form_m(
            &cfg,
            ParamCoeff::one(n),
            &[MFactor::G(s), MFactor::X(idx, 1), MFactor::G(-s)],
        )
        .unwrap();
        let expected = logext::algebra::x_elem(&cfg, idx, 1)
            .unwrap()
            .scale(&ParamCoeff::p_pow(n, idx, s));
        prop_assert_eq!(got, expected);
    }
}

// ---------------------------------------------------------------------------
// Form algebras: association independence of the products.

fn arb_form_word(cfg: &ParamConfig) -> impl Strategy<Value = Vec<(usize, i64, bool)>> {
    let total = cfg.total();
    let odd_start = cfg.even_count() + 1;
    proptest::collection::vec(
        (1usize..=total, proptest::bool::ANY).prop_flat_map(move |(idx, diff)| {
            let lo = if idx == 1 && !diff { -2 } else { 0 };
            let hi = if idx >= odd_start {
                if diff {
                    2
                } else {
                    1
                }
            } else if diff {
                1
            } else {
                2
            };
            (Just(idx), lo..=hi as i64, Just(diff))
        }),
        0..5,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_normal_form_is_association_independent(
        (cfg, word, seed) in arb_config().prop_flat_map(|cfg| {
            let w = arb_form_word(&cfg);
            (Just(cfg), w, proptest::num::u64::ANY)
        }),
    ) {
        use qsuperspace::calculus::{embed, form_mul, form_normal_form, wedge_gen, FormElement};
        use qsuperspace::superalgebra::generator_elem;

        let n = cfg.total();
        let direct = form_normal_form(&cfg, ParamCoeff::one(n), &word).unwrap();

        // Multiply the factors pairwise in a random association order.
        let mut rng = Rng::new(seed);
        let mut parts: Vec<FormElement> = word
            .iter()
            .map(|&(idx, pow, diff)| {
                if diff {
                    let mut acc = embed(&cfg, &qsuperspace::superalgebra::one_elem(&cfg));
                    for _ in 0..pow {
                        acc = form_mul(&cfg, &acc, &wedge_gen(&cfg, idx).unwrap());
                    }
                    acc
                } else {
                    embed(&cfg, &generator_elem(&cfg, idx, pow).unwrap())
                }
            })
            .collect();
        let random = if parts.is_empty() {
            embed(&cfg, &qsuperspace::superalgebra::one_elem(&cfg))
        } else {
            while parts.len() > 1 {
                let k = rng.below(parts.len() as u64 - 1) as usize;
                let merged = form_mul(&cfg, &parts[k], &parts[k + 1]);
                parts[k] = merged;
                parts.remove(k + 1);
            }
            parts.pop().unwrap()
        };
        prop_assert_eq!(direct, random);
    }

    #[test]
    fn extension_normal_form_is_idempotent(
        (cfg, word) in arb_config().prop_flat_map(|cfg| {
            let w = arb_m_word(&cfg);
            (Just(cfg), w)
        }),
    ) {
        use qsuperspace::logext::MMonomial;

        let n = cfg.total();
        let e = logext::normal_form_m(&cfg, ParamCoeff::one(n), &word).unwrap();
        let mut again = logext::MElement::zero();
        for (m, c) in e.terms() {
            let mut back = vec![MFactor::G(m.g)];
            for (i, &k) in m.exps().iter().enumerate() {
                if k != 0 {
                    back.push(MFactor::X(i + 1, k));
                }
            }
            again = again.add(&logext::normal_form_m(&cfg, c.clone(), &back).unwrap());
        }
        prop_assert_eq!(e, again);
        let _ = MMonomial::one(n);
    }

    #[test]
    fn extension_form_product_is_association_independent(
        (cfg, word, seed) in arb_config().prop_flat_map(|cfg| {
            let w = arb_m_form_word(&cfg);
            (Just(cfg), w, proptest::num::u64::ANY)
        }),
    ) {
        use qsuperspace::logext::calculus::{
            m_embed, m_form_mul, m_form_normal_form, m_wedge_gen, MFormElement, MFormFactor,
        };
        use qsuperspace::logext::algebra::{grouplike_elem, one_elem_m, x_elem};

        let n = cfg.total();
        let factors: Vec<MFormFactor> = word.clone();
        let direct = m_form_normal_form(&cfg, ParamCoeff::one(n), &factors).unwrap();

        let mut rng = Rng::new(seed);
        let mut parts: Vec<MFormElement> = factors
            .iter()
            .map(|f| match *f {
                MFormFactor::G(pow) => m_embed(&cfg, &grouplike_elem(&cfg, pow)),
                MFormFactor::X(idx, pow) => m_embed(&cfg, &x_elem(&cfg, idx, pow).unwrap()),
                MFormFactor::D(idx, pow) => {
                    let mut acc = m_embed(&cfg, &one_elem_m(&cfg));
                    for _ in 0..pow {
                        acc = m_form_mul(&cfg, &acc, &m_wedge_gen(&cfg, idx).unwrap());
                    }
                    acc
                }
            })
            .collect();
        let random = if parts.is_empty() {
            m_embed(&cfg, &one_elem_m(&cfg))
        } else {
            while parts.len() > 1 {
                let k = rng.below(parts.len() as u64 - 1) as usize;
                let merged = m_form_mul(&cfg, &parts[k], &parts[k + 1]);
                parts[k] = merged;
                parts.remove(k + 1);
            }
            parts.pop().unwrap()
        };
        prop_assert_eq!(direct, random);
    }
}

fn arb_m_form_word(
    cfg: &ParamConfig,
) -> impl Strategy<Value = Vec<qsuperspace::logext::calculus::MFormFactor>> {
    use qsuperspace::logext::calculus::MFormFactor;
    let total = cfg.total();
    let odd_start = cfg.even_count() + 1;
    proptest::collection::vec(
        prop_oneof![
            (-2i64..=2).prop_map(MFormFactor::G),
            (1usize..=total).prop_flat_map(move |idx| {
                let hi = if idx >= odd_start { 1 } else { 2 };
                (Just(idx), 0..=hi as i64).prop_map(|(i, p)| MFormFactor::X(i, p))
            }),
            (1usize..=total).prop_flat_map(move |idx| {
                let hi = if idx >= odd_start { 2 } else { 1 };
                (Just(idx), 0..=hi as i64).prop_map(|(i, p)| MFormFactor::D(i, p))
            }),
        ],
        0..4,
    )
}
