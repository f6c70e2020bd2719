//! The logarithmic extension as an algebra: normal ordering with
//! nonhomogeneous relations, Hopf structure, and the truncated-logarithm
//! consistency check.
//!
//! Canonical monomials are `g^s x_1^{k_1} x_2^{k_2} ... x_{m+n}^{k}` with
//! `s` in Z and `k_1` in N. Rewrite rules:
//!
//! ```text
//! x_j x_1 = (x_1 - h_j) x_j                            (j >= 2)
//! x_i x_j = (-1)^{î ĵ} p_i^{1-z_j} p_j^{z_i-1} x_j x_i (i > j >= 2)
//! g x_i   = p_i x_i g,   g x_1 = x_1 g
//! ```
//!
//! where integer powers of `e^{h_i}` arising from conjugation by `g` are
//! normalized to `p_i` powers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::ToPrimitive;

use crate::calculus::partial_elem;
use crate::coeff::{rat, ParamCoeff, Rational};
use crate::config::ParamConfig;
use crate::error::AlgebraError;
use crate::linear::{BasisMonomial, LinComb};
use crate::report::CheckReport;
use crate::sample::{random_coeff, Rng};
use crate::superalgebra::{self, commute_series, generator_elem};

/// Canonical monomial `g^s x_1^{k_1} x_2^{k_2} ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MMonomial {
    /// Power of the grouplike `g = e^{x_1}` (any integer).
    pub g: i64,
    exps: Vec<i64>,
}

impl MMonomial {
    pub fn one(nsyms: usize) -> Self {
        MMonomial {
            g: 0,
            exps: vec![0; nsyms],
        }
    }

    pub fn new(cfg: &ParamConfig, g: i64, exps: Vec<i64>) -> Result<Self, AlgebraError> {
        if exps.len() != cfg.total() {
            return Err(AlgebraError::ConfigMismatch {
                expected: cfg.total(),
                found: exps.len(),
            });
        }
        for (i, &k) in exps.iter().enumerate() {
            if k < 0 {
                return Err(AlgebraError::NegativePower {
                    name: format!("x{}", i + 1),
                    power: k,
                });
            }
            if cfg.is_odd(i + 1) && k > 1 {
                return Err(AlgebraError::InvalidConfig(format!(
                    "odd generator x{} has exponent {k}, expected 0 or 1",
                    i + 1
                )));
            }
        }
        Ok(MMonomial { g, exps })
    }

    pub(crate) fn from_parts_unchecked(g: i64, exps: Vec<i64>) -> Self {
        MMonomial { g, exps }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// Exponent of `x_idx` (1-based).
    pub fn exp(&self, idx: usize) -> i64 {
        self.exps[idx - 1]
    }

    pub fn parity(&self, cfg: &ParamConfig) -> i64 {
        let mut p = 0;
        for i in cfg.even_count()..cfg.total() {
            p += self.exps[i];
        }
        p & 1
    }

    /// `sum_{i >= 2} k_i h_i`, the shift `x_1` picks up crossing the tail.
    fn tail_h_weight(&self, n: usize) -> ParamCoeff {
        let mut h = ParamCoeff::zero(n);
        for (slot, &k) in self.exps.iter().enumerate().skip(1) {
            if k != 0 {
                h = &h + &ParamCoeff::h_sym(n, slot + 1).scale(&rat(k, 1));
            }
        }
        h
    }
}

impl BasisMonomial for MMonomial {
    fn is_unit(&self) -> bool {
        self.g == 0 && self.exps.iter().all(|&k| k == 0)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        if self.g != 0 {
            if self.g == 1 {
                write!(f, "g")?;
            } else {
                write!(f, "g^{}", self.g)?;
            }
            first = false;
        }
        for (i, &k) in self.exps.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, k)?;
            }
        }
        Ok(())
    }
}

pub type MElement = LinComb<MMonomial>;

pub fn scalar_elem_m(c: ParamCoeff) -> MElement {
    let n = c.nsyms();
    MElement::from_term(MMonomial::one(n), c)
}

pub fn one_elem_m(cfg: &ParamConfig) -> MElement {
    scalar_elem_m(ParamCoeff::one(cfg.total()))
}

pub fn grouplike_elem(cfg: &ParamConfig, s: i64) -> MElement {
    MElement::from_term(
        MMonomial::from_parts_unchecked(s, vec![0; cfg.total()]),
        ParamCoeff::one(cfg.total()),
    )
}

/// `x_idx^pow` as an element (zero for odd generators past nilpotency).
pub fn x_elem(cfg: &ParamConfig, idx: usize, pow: i64) -> Result<MElement, AlgebraError> {
    cfg.check_index(idx)?;
    if pow < 0 {
        return Err(AlgebraError::NegativePower {
            name: format!("x{idx}"),
            power: pow,
        });
    }
    if cfg.is_odd(idx) && pow > 1 {
        return Ok(MElement::zero());
    }
    let mut exps = vec![0; cfg.total()];
    exps[idx - 1] = pow;
    Ok(MElement::from_term(
        MMonomial::from_parts_unchecked(0, exps),
        ParamCoeff::one(cfg.total()),
    ))
}

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Product of two canonical monomials. The `x_1` power of the right factor
/// crosses the left tail picking up the shift `x_1 -> x_1 - sum k_i h_i`,
/// so the result is in general a sum.
pub fn mono_mul_m(cfg: &ParamConfig, a: &MMonomial, b: &MMonomial) -> MElement {
    let n = cfg.total();

    let mut sign = 0i64;
    let mut p = vec![0i64; n];

    // Left tail crossing g^t: x_i g^t = p_i^{-t} g^t x_i.
    if b.g != 0 {
        for (slot, &k) in a.exps.iter().enumerate().skip(1) {
            if k != 0 {
                p[slot] -= b.g * k;
            }
        }
    }

    // Tails cross with the homogeneous coefficient
    // x_j x_i -> (-1)^{î ĵ} p_j^{1-z_i} p_i^{z_j-1} x_i x_j for j > i >= 2.
    for j in 1..n {
        let kj = a.exps[j];
        if kj == 0 {
            continue;
        }
        for i in 1..j {
            let li = b.exps[i];
            if li == 0 {
                continue;
            }
            let cross = kj * li;
            sign += cfg.parity(j + 1) * cfg.parity(i + 1) * cross;
            p[j] += (1 - cfg.z(i + 1)) * cross;
            p[i] += (cfg.z(j + 1) - 1) * cross;
        }
    }

    // Merge tails, applying nilpotency.
    let mut exps = vec![0i64; n];
    #[allow(clippy::needless_range_loop)] // parity and weight lookups need the index
    for i in 1..n {
        let k = a.exps[i] + b.exps[i];
        if cfg.is_odd(i + 1) && k > 1 {
            return MElement::zero();
        }
        exps[i] = k;
    }

    let r = if sign & 1 == 1 { rat(-1, 1) } else { rat(1, 1) };
    let cross_coeff = ParamCoeff::monomial(n, p, vec![0; n], r);

    // b's x_1^{kb} crosses a's tail: (x_1 - H)^{kb} with H = tail h-weight.
    let ka = a.exps[0];
    let kb = b.exps[0];
    if kb == 0 {
        exps[0] = ka;
        return MElement::from_term(
            MMonomial::from_parts_unchecked(a.g + b.g, exps),
            cross_coeff,
        );
    }
    let neg_h = a.tail_h_weight(n).negate();

    let mut out = MElement::zero();
    for r_pow in 0..=kb {
        let coeff = &cross_coeff.scale(&binom(kb, r_pow)) * &neg_h.pow((kb - r_pow) as u32);
        if coeff.is_zero() {
            continue;
        }
        let mut e = exps.clone();
        e[0] = ka + r_pow;
        out.add_term(MMonomial::from_parts_unchecked(a.g + b.g, e), coeff);
    }
    out
}

pub fn mul_m(cfg: &ParamConfig, u: &MElement, v: &MElement) -> MElement {
    let mut out = MElement::zero();
    for (ma, ca) in u.terms() {
        for (mb, cb) in v.terms() {
            out = out.add(&mono_mul_m(cfg, ma, mb).scale(&(ca * cb)));
        }
    }
    out
}

pub fn pow_m(cfg: &ParamConfig, u: &MElement, e: u32) -> MElement {
    let mut out = one_elem_m(cfg);
    for _ in 0..e {
        out = mul_m(cfg, &out, u);
    }
    out
}

/// One factor of an input word over the extension's generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MFactor {
    /// `g^pow`, any integer power.
    G(i64),
    /// `x_idx^pow`, nonnegative power (1-based index).
    X(usize, i64),
}

/// Normal form of an arbitrary word times a scalar.
pub fn normal_form_m(
    cfg: &ParamConfig,
    coeff: ParamCoeff,
    word: &[MFactor],
) -> Result<MElement, AlgebraError> {
    let mut acc = scalar_elem_m(coeff);
    for factor in word {
        let f = match *factor {
            MFactor::G(pow) => grouplike_elem(cfg, pow),
            MFactor::X(idx, pow) => x_elem(cfg, idx, pow)?,
        };
        acc = mul_m(cfg, &acc, &f);
    }
    Ok(acc)
}

pub fn classical_limit_m(u: &MElement) -> MElement {
    u.map_coeffs(|c| ParamCoeff::from_rational(c.nsyms(), c.classical_limit()))
}

pub fn parity_of_m(cfg: &ParamConfig, u: &MElement) -> Option<i64> {
    let mut parity = None;
    for (m, _) in u.terms() {
        let p = m.parity(cfg);
        match parity {
            None => parity = Some(p),
            Some(q) if q != p => return None,
            _ => {}
        }
    }
    Some(parity.unwrap_or(0))
}

// ---------------------------------------------------------------------------
// Hopf structure.

pub type MTensorTerms = LinComb<(MMonomial, MMonomial)>;

/// Tensor square of the extension; multiplication always carries the
/// Koszul sign.
pub type MTensorElement = MTensorTerms;

pub fn m_tensor_mul(cfg: &ParamConfig, a: &MTensorElement, b: &MTensorElement) -> MTensorElement {
    let mut out = MTensorElement::zero();
    for ((f, u), ca) in a.terms() {
        for ((v, g), cb) in b.terms() {
            let sign = u.parity(cfg) * v.parity(cfg);
            let left = mono_mul_m(cfg, f, v);
            let right = mono_mul_m(cfg, u, g);
            let mut c = ca * cb;
            if sign & 1 == 1 {
                c = c.negate();
            }
            for (lm, lc) in left.terms() {
                for (rm, rc) in right.terms() {
                    out.add_term((lm.clone(), rm.clone()), &(&c * lc) * rc);
                }
            }
        }
    }
    out
}

fn delta_g_power(cfg: &ParamConfig, s: i64) -> MTensorElement {
    let m = MMonomial::from_parts_unchecked(s, vec![0; cfg.total()]);
    MTensorElement::from_term((m.clone(), m), ParamCoeff::one(cfg.total()))
}

/// Coproduct on a generator: `Delta(x_i) = g^{z_i - 1} (x) x_i +
/// x_i (x) g^{z_i - 1}` (primitive for `x_1` since `z_1 = 1`),
/// `Delta(g) = g (x) g`.
pub fn delta_gen_m(cfg: &ParamConfig, idx: usize) -> Result<MTensorElement, AlgebraError> {
    cfg.check_index(idx)?;
    let n = cfg.total();
    let s = cfg.z(idx) - 1;
    let gl = MMonomial::from_parts_unchecked(s, vec![0; n]);
    let mut exps = vec![0; n];
    exps[idx - 1] = 1;
    let x = MMonomial::from_parts_unchecked(0, exps);
    let mut t = MTensorElement::from_term((gl.clone(), x.clone()), ParamCoeff::one(n));
    t.add_term((x, gl), ParamCoeff::one(n));
    Ok(t)
}

fn delta_monomial_m(cfg: &ParamConfig, m: &MMonomial) -> MTensorElement {
    let mut t = delta_g_power(cfg, m.g);
    for idx in 1..=cfg.total() {
        let k = m.exp(idx);
        if k == 0 {
            continue;
        }
        let dg = delta_gen_m(cfg, idx).expect("index in range");
        for _ in 0..k {
            t = m_tensor_mul(cfg, &t, &dg);
        }
    }
    t
}

pub fn coproduct_m(cfg: &ParamConfig, u: &MElement) -> MTensorElement {
    let mut out = MTensorElement::zero();
    for (m, c) in u.terms() {
        out = out.add(&delta_monomial_m(cfg, m).scale(c));
    }
    out
}

/// Counit: `eps(g) = 1`, `eps(x_i) = 0`.
pub fn counit_m(cfg: &ParamConfig, u: &MElement) -> ParamCoeff {
    let n = cfg.total();
    let mut out = ParamCoeff::zero(n);
    for (m, c) in u.terms() {
        if m.exps().iter().all(|&k| k == 0) {
            out = &out + c;
        }
    }
    out
}

fn antipode_factor_m(cfg: &ParamConfig, idx: usize, k: i64) -> MElement {
    if idx == 1 {
        // S(x_1) = -x_1, so S(x_1^k) = (-1)^k x_1^k.
        let e = x_elem(cfg, 1, k).expect("x_1");
        return if k & 1 == 1 { e.neg() } else { e };
    }
    let s = 1 - cfg.z(idx);
    let word = [MFactor::G(s), MFactor::X(idx, 1), MFactor::G(s)];
    let s_gen = normal_form_m(cfg, ParamCoeff::from_integer(cfg.total(), -1), &word)
        .expect("antipode word");
    pow_m(cfg, &s_gen, k as u32)
}

fn antipode_monomial_m(cfg: &ParamConfig, m: &MMonomial) -> MElement {
    let mut odd_count = 0i64;
    let mut out = one_elem_m(cfg);
    for idx in (1..=cfg.total()).rev() {
        let k = m.exp(idx);
        if k == 0 {
            continue;
        }
        if cfg.is_odd(idx) {
            odd_count += 1;
        }
        out = mul_m(cfg, &out, &antipode_factor_m(cfg, idx, k));
    }
    // S(g^s) = g^{-s} commutes to the end of the reversed product.
    out = mul_m(cfg, &out, &grouplike_elem(cfg, -m.g));
    if (odd_count * (odd_count - 1) / 2) & 1 == 1 {
        out = out.neg();
    }
    out
}

/// Antipode: `S(g) = g^{-1}`, `S(x_i) = -g^{1-z_i} x_i g^{1-z_i}`,
/// extended as a graded anti-homomorphism.
pub fn antipode_m(cfg: &ParamConfig, u: &MElement) -> MElement {
    let mut out = MElement::zero();
    for (m, c) in u.terms() {
        out = out.add(&antipode_monomial_m(cfg, m).scale(c));
    }
    out
}

pub type MTensor3 = LinComb<(MMonomial, MMonomial, MMonomial)>;

fn delta_slot1_m(cfg: &ParamConfig, t: &MTensorElement) -> MTensor3 {
    let mut out = MTensor3::zero();
    for ((u, v), c) in t.terms() {
        for ((u1, u2), cu) in delta_monomial_m(cfg, u).terms() {
            out.add_term((u1.clone(), u2.clone(), v.clone()), c * cu);
        }
    }
    out
}

fn delta_slot2_m(cfg: &ParamConfig, t: &MTensorElement) -> MTensor3 {
    let mut out = MTensor3::zero();
    for ((u, v), c) in t.terms() {
        for ((v1, v2), cv) in delta_monomial_m(cfg, v).terms() {
            out.add_term((u.clone(), v1.clone(), v2.clone()), c * cv);
        }
    }
    out
}

fn counit_slot1_m(t: &MTensorElement) -> MElement {
    let mut out = MElement::zero();
    for ((u, v), c) in t.terms() {
        if u.exps().iter().all(|&k| k == 0) {
            out.add_term(v.clone(), c.clone());
        }
    }
    out
}

fn counit_slot2_m(t: &MTensorElement) -> MElement {
    let mut out = MElement::zero();
    for ((u, v), c) in t.terms() {
        if v.exps().iter().all(|&k| k == 0) {
            out.add_term(u.clone(), c.clone());
        }
    }
    out
}

fn mu_antipode_slot1_m(cfg: &ParamConfig, t: &MTensorElement) -> MElement {
    let mut out = MElement::zero();
    for ((u, v), c) in t.terms() {
        let su = antipode_monomial_m(cfg, u);
        let v_elem = MElement::from_term(v.clone(), ParamCoeff::one(cfg.total()));
        out = out.add(&mul_m(cfg, &su, &v_elem).scale(c));
    }
    out
}

fn mu_antipode_slot2_m(cfg: &ParamConfig, t: &MTensorElement) -> MElement {
    let mut out = MElement::zero();
    for ((u, v), c) in t.terms() {
        let sv = antipode_monomial_m(cfg, v);
        let u_elem = MElement::from_term(u.clone(), ParamCoeff::one(cfg.total()));
        out = out.add(&mul_m(cfg, &u_elem, &sv).scale(c));
    }
    out
}

// ---------------------------------------------------------------------------
// Sampling.

pub fn random_m_monomial(rng: &mut Rng, cfg: &ParamConfig, max_even: i64) -> MMonomial {
    let n = cfg.total();
    let g = rng.range(-2, 2);
    let mut exps = vec![0i64; n];
    exps[0] = rng.range(0, 2);
    #[allow(clippy::needless_range_loop)] // parity and weight lookups need the index
    for i in 1..n {
        if cfg.is_odd(i + 1) {
            exps[i] = rng.range(0, 1);
        } else {
            exps[i] = rng.range(0, max_even);
        }
    }
    MMonomial::from_parts_unchecked(g, exps)
}

pub fn random_m_element(rng: &mut Rng, cfg: &ParamConfig, max_terms: usize) -> MElement {
    let mut out = MElement::zero();
    for _ in 0..1 + rng.below(max_terms as u64) {
        out.add_term(random_m_monomial(rng, cfg, 2), random_coeff(rng, cfg));
    }
    out
}

pub fn random_m_homogeneous(
    rng: &mut Rng,
    cfg: &ParamConfig,
    parity: i64,
    max_terms: usize,
) -> MElement {
    let mut out = MElement::zero();
    for _ in 0..1 + rng.below(max_terms as u64) {
        let m = loop {
            let m = random_m_monomial(rng, cfg, 2);
            if m.parity(cfg) == parity {
                break m;
            }
            if cfg.odd_count() == 0 && parity == 1 {
                break MMonomial::one(cfg.total());
            }
        };
        out.add_term(m, random_coeff(rng, cfg));
    }
    out
}

// ---------------------------------------------------------------------------
// Verification.

/// Hopf-axiom suite for the extension, plus compatibility of the comaps
/// with the nonhomogeneous relations.
pub fn verify_hopf_m(cfg: &ParamConfig, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("m-hopf");
    let mut rng = Rng::new(seed);
    let n = cfg.total();

    let mut pool: Vec<MElement> = Vec::new();
    for idx in 1..=n {
        pool.push(x_elem(cfg, idx, 1).expect("generator"));
    }
    pool.push(grouplike_elem(cfg, 1));
    pool.push(grouplike_elem(cfg, -1));
    for _ in 0..samples {
        pool.push(random_m_element(&mut rng, cfg, 2));
    }

    let mut coassoc: Option<String> = None;
    let mut counit_ok: Option<String> = None;
    let mut antipode_ok: Option<String> = None;
    let mut classical_ok: Option<String> = None;
    for u in &pool {
        let d = coproduct_m(cfg, u);
        if coassoc.is_none() && delta_slot1_m(cfg, &d) != delta_slot2_m(cfg, &d) {
            coassoc = Some(format!("element {u}"));
        }
        if counit_ok.is_none() && (counit_slot1_m(&d) != *u || counit_slot2_m(&d) != *u) {
            counit_ok = Some(format!("element {u}"));
        }
        if antipode_ok.is_none() {
            let target = scalar_elem_m(counit_m(cfg, u));
            if mu_antipode_slot1_m(cfg, &d) != target || mu_antipode_slot2_m(cfg, &d) != target {
                antipode_ok = Some(format!("element {u}"));
            }
        }
        if classical_ok.is_none() {
            // The Hopf maps descend to the classical quotient.
            let lim = classical_limit_m(u);
            let to_classical = |t: &MTensorElement| {
                t.map_coeffs(|c| ParamCoeff::from_rational(c.nsyms(), c.classical_limit()))
            };
            let delta_bad =
                to_classical(&coproduct_m(cfg, u)) != to_classical(&coproduct_m(cfg, &lim));
            let eps_bad = ParamCoeff::from_rational(n, counit_m(cfg, &lim).classical_limit())
                != ParamCoeff::from_rational(n, counit_m(cfg, u).classical_limit());
            let s_bad =
                classical_limit_m(&antipode_m(cfg, &lim)) != classical_limit_m(&antipode_m(cfg, u));
            if delta_bad || eps_bad || s_bad {
                classical_ok = Some(format!("element {u}"));
            }
        }
    }
    report.record("coassociativity", coassoc.is_none(), || {
        coassoc.clone().unwrap()
    });
    report.record("counit identities", counit_ok.is_none(), || {
        counit_ok.clone().unwrap()
    });
    report.record("antipode identities", antipode_ok.is_none(), || {
        antipode_ok.clone().unwrap()
    });
    report.record(
        "classical limit commutes with Delta, eps, S",
        classical_ok.is_none(),
        || classical_ok.clone().unwrap(),
    );

    // Homomorphism / anti-homomorphism properties on random pairs.
    let mut hom: Option<String> = None;
    let mut antihom: Option<String> = None;
    let mut supercomm: Option<String> = None;
    for _ in 0..samples {
        let u = random_m_element(&mut rng, cfg, 2);
        let v = random_m_element(&mut rng, cfg, 2);
        if hom.is_none() {
            let prod = mul_m(cfg, &u, &v);
            let lhs = coproduct_m(cfg, &prod);
            let rhs = m_tensor_mul(cfg, &coproduct_m(cfg, &u), &coproduct_m(cfg, &v));
            let eps_ok = counit_m(cfg, &prod) == &counit_m(cfg, &u) * &counit_m(cfg, &v);
            if lhs != rhs || !eps_ok {
                hom = Some(format!("u = {u}, v = {v}"));
            }
        }
        if antihom.is_none() {
            let hu_parity = rng.below(2) as i64;
            let hu = random_m_homogeneous(&mut rng, cfg, hu_parity, 2);
            let hv_parity = rng.below(2) as i64;
            let hv = random_m_homogeneous(&mut rng, cfg, hv_parity, 2);
            let pu = parity_of_m(cfg, &hu).expect("homogeneous sample");
            let pv = parity_of_m(cfg, &hv).expect("homogeneous sample");
            let lhs = antipode_m(cfg, &mul_m(cfg, &hu, &hv));
            let mut rhs = mul_m(cfg, &antipode_m(cfg, &hv), &antipode_m(cfg, &hu));
            if (pu * pv) & 1 == 1 {
                rhs = rhs.neg();
            }
            if lhs != rhs {
                antihom = Some(format!("u = {hu}, v = {hv}"));
            }
        }
        if supercomm.is_none() {
            let hu_parity = rng.below(2) as i64;
            let hu = random_m_homogeneous(&mut rng, cfg, hu_parity, 2);
            let hv_parity = rng.below(2) as i64;
            let hv = random_m_homogeneous(&mut rng, cfg, hv_parity, 2);
            let pu = parity_of_m(cfg, &hu).expect("homogeneous sample");
            let pv = parity_of_m(cfg, &hv).expect("homogeneous sample");
            let mut comm = mul_m(cfg, &hu, &hv);
            let vu = mul_m(cfg, &hv, &hu);
            comm = if (pu * pv) & 1 == 1 {
                comm.add(&vu)
            } else {
                comm.sub(&vu)
            };
            if !classical_limit_m(&comm).is_zero() {
                supercomm = Some(format!("u = {hu}, v = {hv}"));
            }
        }
    }
    report.record(
        "coproduct and counit are algebra maps",
        hom.is_none(),
        || hom.clone().unwrap(),
    );
    report.record(
        "antipode is a graded anti-homomorphism",
        antihom.is_none(),
        || antihom.clone().unwrap(),
    );
    report.record(
        "classical limit is supercommutative",
        supercomm.is_none(),
        || supercomm.clone().unwrap(),
    );

    // Relation preservation in the tensor square.
    let mut rel: Option<String> = None;
    let x1 = delta_gen_m(cfg, 1).expect("x_1");
    let dg = delta_g_power(cfg, 1);
    'rel: for i in 2..=n {
        let xi = delta_gen_m(cfg, i).expect("index");
        // [Delta(x_1), Delta(x_i)] = h_i Delta(x_i)
        let comm = m_tensor_mul(cfg, &x1, &xi).sub(&m_tensor_mul(cfg, &xi, &x1));
        if comm != xi.scale(&ParamCoeff::h_sym(n, i)) {
            rel = Some(format!("grouplike-log relation at i = {i}"));
            break 'rel;
        }
        // Delta(g) Delta(x_i) = p_i Delta(x_i) Delta(g)
        let lhs = m_tensor_mul(cfg, &dg, &xi);
        let rhs = m_tensor_mul(cfg, &xi, &dg).scale(&ParamCoeff::p_pow(n, i, 1));
        if lhs != rhs {
            rel = Some(format!("grouplike conjugation at i = {i}"));
            break 'rel;
        }
        if cfg.is_odd(i) && !m_tensor_mul(cfg, &xi, &xi).is_zero() {
            rel = Some(format!("odd square at i = {i}"));
            break 'rel;
        }
        for j in 2..i {
            let xj = delta_gen_m(cfg, j).expect("index");
            let mut c =
                &ParamCoeff::p_pow(n, i, 1 - cfg.z(j)) * &ParamCoeff::p_pow(n, j, cfg.z(i) - 1);
            if (cfg.parity(i) * cfg.parity(j)) & 1 == 1 {
                c = c.negate();
            }
            let lhs = m_tensor_mul(cfg, &xi, &xj);
            let rhs = m_tensor_mul(cfg, &xj, &xi).scale(&c);
            if lhs != rhs {
                rel = Some(format!("homogeneous relation at ({i}, {j})"));
                break 'rel;
            }
        }
    }
    report.record(
        "Delta preserves the nonhomogeneous relations",
        rel.is_none(),
        || rel.clone().unwrap(),
    );

    report
}

/// Consistency of the truncated logarithm of the grouplike generator with
/// the calculus on the original superspace: differentiating the order-N
/// truncation of `ln a_1 = sum (-1)^{k+1}/k (a_1 - 1)^k` yields the
/// order-(N-1) truncation of the geometric series for `a_1^{-1}`, and the
/// truncation commutes through the series rule of the algebra.
pub fn log_truncation_check(
    cfg: &ParamConfig,
    order: usize,
) -> Result<CheckReport, AlgebraError> {
    if order == 0 {
        return Err(AlgebraError::ZeroOrder);
    }
    let n = cfg.total();
    let mut report = CheckReport::new("log-truncation");

    let a1_minus_1 = generator_elem(cfg, 1, 1)?.sub(&superalgebra::one_elem(cfg));
    let mut log_series = superalgebra::AElement::zero();
    for k in 1..=order {
        let c = rat(if k % 2 == 1 { 1 } else { -1 }, k as i64);
        log_series =
            log_series.add(&superalgebra::pow(cfg, &a1_minus_1, k as u32).scale_rational(&c));
    }

    let mut geometric = superalgebra::AElement::zero();
    for k in 0..order {
        let c = rat(if k % 2 == 0 { 1 } else { -1 }, 1);
        geometric =
            geometric.add(&superalgebra::pow(cfg, &a1_minus_1, k as u32).scale_rational(&c));
    }

    let derivative = partial_elem(cfg, 1, &log_series);
    report.record(
        format!("d_1(log truncation at N = {order}) equals the geometric truncation"),
        derivative == geometric,
        || format!("got {derivative}, expected {geometric}"),
    );

    // Series commutation: extract the a_1-power coefficients and push the
    // truncation through the series rule for every j >= 2.
    let mut coeffs = vec![Rational::from_integer(0.into()); order + 1];
    for (m, c) in log_series.terms() {
        let k = m.exp(1);
        let val = c
            .as_rational()
            .expect("log truncation has rational coefficients");
        let k = k.to_usize().expect("nonnegative power");
        coeffs[k] = val;
    }
    let mut commute_ok: Option<String> = None;
    for j in 2..=n {
        let (lhs, rhs) = commute_series(cfg, &coeffs, j)?;
        if lhs != rhs {
            commute_ok = Some(format!("series rule fails at j = {j}"));
            break;
        }
    }
    report.record(
        format!("log truncation at N = {order} respects the series rule"),
        commute_ok.is_none(),
        || commute_ok.clone().unwrap(),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn c0() -> ParamConfig {
        ParamConfig::new(1, 1, vec![1, 2]).unwrap()
    }

    #[test]
    fn nonhomogeneous_swap() {
        let cfg = c0();
        // x_2 x_1 = x_1 x_2 - h_2 x_2
        let got = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(2, 1), MFactor::X(1, 1)],
        )
        .unwrap();
        let x1x2 = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(1, 1), MFactor::X(2, 1)],
        )
        .unwrap();
        let h2x2 = x_elem(&cfg, 2, 1).unwrap().scale(&ParamCoeff::h_sym(2, 2));
        assert_eq!(got, x1x2.sub(&h2x2));
    }

    #[test]
    fn shifted_square_crossing() {
        let cfg = c0();
        // x_2 x_1^2 = (x_1 - h_2)^2 x_2
        let got = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(2, 1), MFactor::X(1, 2)],
        )
        .unwrap();
        let h2 = ParamCoeff::h_sym(2, 2);
        let x2 = x_elem(&cfg, 2, 1).unwrap();
        let x1x2 = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(1, 1), MFactor::X(2, 1)],
        )
        .unwrap();
        let x1sq_x2 = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(1, 2), MFactor::X(2, 1)],
        )
        .unwrap();
        let expected = x1sq_x2
            .sub(&x1x2.scale(&h2.scale(&rat_int(2))))
            .add(&x2.scale(&h2.pow(2)));
        assert_eq!(got, expected);
        // And x_1^2 x_2 is already canonical.
        let canon = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::X(1, 2), MFactor::X(2, 1)],
        )
        .unwrap();
        assert_eq!(canon.to_string(), "x1^2*x2");
    }

    #[test]
    fn grouplike_conjugation() {
        let cfg = c0();
        // g x_2 g^{-1} = p_2 x_2
        let got = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::G(1), MFactor::X(2, 1), MFactor::G(-1)],
        )
        .unwrap();
        let expected = x_elem(&cfg, 2, 1)
            .unwrap()
            .scale(&ParamCoeff::p_pow(2, 2, 1));
        assert_eq!(got, expected);

        // g^s x_2 g^{-s} = p_2^s x_2 for a few integers s.
        for s in [-3i64, -1, 2, 4] {
            let got = normal_form_m(
                &cfg,
                ParamCoeff::one(2),
                &[MFactor::G(s), MFactor::X(2, 1), MFactor::G(-s)],
            )
            .unwrap();
            let expected = x_elem(&cfg, 2, 1)
                .unwrap()
                .scale(&ParamCoeff::p_pow(2, 2, s));
            assert_eq!(got, expected, "s = {s}");
        }
    }

    #[test]
    fn negative_x_power_rejected() {
        let cfg = c0();
        assert!(matches!(
            normal_form_m(&cfg, ParamCoeff::one(2), &[MFactor::X(1, -1)]),
            Err(AlgebraError::NegativePower { .. })
        ));
    }

    #[test]
    fn coproduct_examples() {
        let cfg = c0();
        // Delta(x_1) = x_1 (x) 1 + 1 (x) x_1
        let d = coproduct_m(&cfg, &x_elem(&cfg, 1, 1).unwrap());
        let x1 = MMonomial::from_parts_unchecked(0, vec![1, 0]);
        let one = MMonomial::one(2);
        let mut expected = MTensorElement::from_term((x1.clone(), one.clone()), ParamCoeff::one(2));
        expected.add_term((one, x1), ParamCoeff::one(2));
        assert_eq!(d, expected);

        // eps(g^3 x_1 x_2) = 0
        let u = normal_form_m(
            &cfg,
            ParamCoeff::one(2),
            &[MFactor::G(3), MFactor::X(1, 1), MFactor::X(2, 1)],
        )
        .unwrap();
        assert!(counit_m(&cfg, &u).is_zero());
    }

    #[test]
    fn antipode_examples() {
        let cfg = c0();
        // S(x_2) = -p_2 g^{-2} x_2 for z_2 = 2
        let s = antipode_m(&cfg, &x_elem(&cfg, 2, 1).unwrap());
        let expected = MElement::from_term(
            MMonomial::from_parts_unchecked(-2, vec![0, 1]),
            ParamCoeff::p_pow(2, 2, 1).negate(),
        );
        assert_eq!(s, expected);
        // mu(S (x) id) Delta(x_2) = 0 = eps(x_2)
        let d = coproduct_m(&cfg, &x_elem(&cfg, 2, 1).unwrap());
        assert!(mu_antipode_slot1_m(&cfg, &d).is_zero());
        assert!(mu_antipode_slot2_m(&cfg, &d).is_zero());
    }

    #[test]
    fn hopf_suite_passes() {
        let cfg = c0();
        let report = verify_hopf_m(&cfg, 25, 13);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn log_truncation_small_orders() {
        let cfg = c0();
        for order in 1..=5 {
            let report = log_truncation_check(&cfg, order).unwrap();
            assert!(report.passed(), "N = {order}: {report}");
        }
        assert!(matches!(
            log_truncation_check(&cfg, 0),
            Err(AlgebraError::ZeroOrder)
        ));
    }
}
