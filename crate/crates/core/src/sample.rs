//! Seeded sampling of random configurations, coefficients, and elements.
//!
//! The verification suites must be reproducible byte for byte given a seed,
//! so randomness comes from a small self-contained generator rather than an
//! external crate whose stream might change between releases.

use crate::coeff::{rat, ParamCoeff, Rational};
use crate::config::ParamConfig;
use crate::superalgebra::{AElement, SuperMonomial};

/// SplitMix64: tiny, fast, and stable across platforms.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: seed.wrapping_add(0x9e3779b97f4a7c15),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// A random configuration with `m + n <= max_total` and `|z_i| <= z_bound`.
pub fn random_config(rng: &mut Rng, max_total: usize, z_bound: i64) -> ParamConfig {
    let total = rng.range(1, max_total as i64) as usize;
    let m = rng.range(1, total as i64) as usize;
    let n = total - m;
    let mut z = vec![1i64];
    for _ in 1..total {
        z.push(rng.range(-z_bound, z_bound));
    }
    ParamConfig::new(m, n, z).expect("generated configuration is valid")
}

/// A small random rational, occasionally with denominator 2 or 3.
pub fn random_rational(rng: &mut Rng) -> Rational {
    let n = rng.range(-3, 3);
    let n = if n == 0 { 1 } else { n };
    let d = [1, 1, 2, 3][rng.below(4) as usize];
    rat(n, d)
}

/// A random coefficient: one or two scalar monomials with small `p` and
/// `h` exponents, never zero.
pub fn random_coeff(rng: &mut Rng, cfg: &ParamConfig) -> ParamCoeff {
    let n = cfg.total();
    let mut out = ParamCoeff::zero(n);
    let terms = 1 + rng.below(2);
    for _ in 0..terms {
        let mut p = vec![0i64; n];
        let mut h = vec![0u32; n];
        for slot in 1..n {
            if rng.chance(1, 4) {
                p[slot] = rng.range(-2, 2);
            }
            if rng.chance(1, 6) {
                h[slot] = rng.below(2) as u32 + 1;
            }
        }
        out = &out + &ParamCoeff::monomial(n, p, h, random_rational(rng));
    }
    if out.is_zero() {
        ParamCoeff::one(n)
    } else {
        out
    }
}

/// A random ordered monomial with `k_1` in `-2..=2`, even exponents up to
/// `max_even`, odd exponents in {0, 1}.
pub fn random_monomial(rng: &mut Rng, cfg: &ParamConfig, max_even: i64) -> SuperMonomial {
    let n = cfg.total();
    let mut exps = vec![0i64; n];
    exps[0] = rng.range(-2, 2);
    #[allow(clippy::needless_range_loop)] // parity and weight lookups need the index
    for i in 1..n {
        if cfg.is_odd(i + 1) {
            exps[i] = rng.range(0, 1);
        } else {
            exps[i] = rng.range(0, max_even);
        }
    }
    SuperMonomial::from_exps_unchecked(exps)
}

/// A random monomial of prescribed parity.
pub fn random_monomial_with_parity(
    rng: &mut Rng,
    cfg: &ParamConfig,
    parity: i64,
    max_even: i64,
) -> SuperMonomial {
    loop {
        let m = random_monomial(rng, cfg, max_even);
        if m.parity(cfg) == parity {
            return m;
        }
        // A config with no odd generators only produces even monomials.
        if cfg.odd_count() == 0 && parity == 1 {
            return SuperMonomial::one(cfg.total());
        }
    }
}

/// A random element with up to `max_terms` terms.
pub fn random_element(rng: &mut Rng, cfg: &ParamConfig, max_terms: usize) -> AElement {
    let mut out = AElement::zero();
    let terms = 1 + rng.below(max_terms as u64);
    for _ in 0..terms {
        out.add_term(random_monomial(rng, cfg, 2), random_coeff(rng, cfg));
    }
    out
}

/// A random parity-homogeneous element.
pub fn random_homogeneous_element(
    rng: &mut Rng,
    cfg: &ParamConfig,
    parity: i64,
    max_terms: usize,
) -> AElement {
    let mut out = AElement::zero();
    let terms = 1 + rng.below(max_terms as u64);
    for _ in 0..terms {
        out.add_term(
            random_monomial_with_parity(rng, cfg, parity, 2),
            random_coeff(rng, cfg),
        );
    }
    out
}
