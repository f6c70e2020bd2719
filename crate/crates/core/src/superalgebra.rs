//! The quantum (m+n)-superspace: ordered monomials, normal-ordering
//! rewriting, and multiplication.
//!
//! Generators `a_1 < a_2 < ... < a_{m+n}` obey
//!
//! ```text
//! a_i a_j = (-1)^{î ĵ} p_j^{z_i} p_i^{-z_j} a_j a_i
//! ```
//!
//! so every word rewrites to a unique linear combination of ordered
//! monomials `a_1^{k_1} ... a_{m+n}^{k_{m+n}}`. Only `a_1` is invertible
//! (`k_1` ranges over Z); odd generators square to zero.

use std::fmt;

use num_traits::Signed;

use crate::coeff::{ParamCoeff, Rational};
use crate::config::ParamConfig;
use crate::error::AlgebraError;
use crate::linear::{BasisMonomial, LinComb};

/// An ordered monomial `a_1^{k_1} a_2^{k_2} ... a_{m+n}^{k_{m+n}}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMonomial {
    exps: Vec<i64>,
}

impl SuperMonomial {
    pub fn one(nsyms: usize) -> Self {
        SuperMonomial {
            exps: vec![0; nsyms],
        }
    }

    /// Validated constructor: exponent vector length `m+n`, `k_1` in Z,
    /// even exponents nonnegative, odd exponents in {0, 1}.
    pub fn new(cfg: &ParamConfig, exps: Vec<i64>) -> Result<Self, AlgebraError> {
        if exps.len() != cfg.total() {
            return Err(AlgebraError::ConfigMismatch {
                expected: cfg.total(),
                found: exps.len(),
            });
        }
        for (i, &k) in exps.iter().enumerate().skip(1) {
            if k < 0 {
                return Err(AlgebraError::NegativePower {
                    name: format!("a{}", i + 1),
                    power: k,
                });
            }
            if cfg.is_odd(i + 1) && k > 1 {
                return Err(AlgebraError::InvalidConfig(format!(
                    "odd generator a{} has exponent {k}, expected 0 or 1",
                    i + 1
                )));
            }
        }
        Ok(SuperMonomial { exps })
    }

    pub(crate) fn from_exps_unchecked(exps: Vec<i64>) -> Self {
        SuperMonomial { exps }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// Exponent of `a_idx` (1-based).
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

    /// The weighted degree `sum z_l k_l`.
    pub fn deg_z(&self, cfg: &ParamConfig) -> i64 {
        self.exps
            .iter()
            .zip(cfg.weights())
            .map(|(k, z)| k * z)
            .sum()
    }

    /// Total size `sum |k_i|`, used to bound random sampling.
    pub fn size(&self) -> i64 {
        self.exps.iter().map(|k| k.abs()).sum()
    }
}

impl BasisMonomial for SuperMonomial {
    fn is_unit(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &k) in self.exps.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "a{}^{}", i + 1, k)?;
            }
        }
        Ok(())
    }
}

/// An element of the quantum superspace.
pub type AElement = LinComb<SuperMonomial>;

/// The scalar `c * 1`.
pub fn scalar_elem(c: ParamCoeff) -> AElement {
    let n = c.nsyms();
    AElement::from_term(SuperMonomial::one(n), c)
}

pub fn one_elem(cfg: &ParamConfig) -> AElement {
    scalar_elem(ParamCoeff::one(cfg.total()))
}

/// `a_idx^pow` as an element. An odd generator to a power >= 2 is zero;
/// negative powers are rejected except on the invertible `a_1`.
pub fn generator_elem(cfg: &ParamConfig, idx: usize, pow: i64) -> Result<AElement, AlgebraError> {
    cfg.check_index(idx)?;
    if pow < 0 && idx != 1 {
        return Err(AlgebraError::NegativePower {
            name: format!("a{idx}"),
            power: pow,
        });
    }
    if cfg.is_odd(idx) && pow > 1 {
        return Ok(AElement::zero());
    }
    let mut exps = vec![0; cfg.total()];
    exps[idx - 1] = pow;
    Ok(AElement::from_term(
        SuperMonomial::from_exps_unchecked(exps),
        ParamCoeff::one(cfg.total()),
    ))
}

/// Product of two ordered monomials: a single coefficient-monomial pair,
/// or `None` when an odd generator squares to zero.
///
/// Reordering `a_j a_i` with `j > i` emits `(-1)^{î ĵ} p_i^{z_j} p_j^{-z_i}`
/// per adjacent swap; the closed form below accumulates all swaps at once.
pub fn mono_mul(
    cfg: &ParamConfig,
    a: &SuperMonomial,
    b: &SuperMonomial,
) -> Option<(ParamCoeff, SuperMonomial)> {
    let n = cfg.total();
    debug_assert_eq!(a.exps.len(), n);
    debug_assert_eq!(b.exps.len(), n);

    let mut sign: i64 = 0;
    let mut p_exps = vec![0i64; n];
    for j in 1..n {
        let kj = a.exps[j];
        if kj == 0 {
            continue;
        }
        for i in 0..j {
            let li = b.exps[i];
            if li == 0 {
                continue;
            }
            let cross = kj * li;
            sign += cfg.parity(j + 1) * cfg.parity(i + 1) * cross;
            p_exps[i] += cfg.z(j + 1) * cross;
            p_exps[j] -= cfg.z(i + 1) * cross;
        }
    }

    let mut exps = Vec::with_capacity(n);
    for i in 0..n {
        let k = a.exps[i] + b.exps[i];
        if cfg.is_odd(i + 1) && k > 1 {
            return None;
        }
        exps.push(k);
    }

    let r = if sign & 1 == 1 {
        -Rational::from_integer(1.into())
    } else {
        Rational::from_integer(1.into())
    };
    let coeff = ParamCoeff::monomial(n, p_exps, vec![0; n], r);
    Some((coeff, SuperMonomial::from_exps_unchecked(exps)))
}

/// Bilinear product of two elements, output in normal form.
pub fn mul(cfg: &ParamConfig, u: &AElement, v: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (ma, ca) in u.terms() {
        for (mb, cb) in v.terms() {
            if let Some((swap, m)) = mono_mul(cfg, ma, mb) {
                out.add_term(m, &(ca * cb) * &swap);
            }
        }
    }
    out
}

pub fn pow(cfg: &ParamConfig, u: &AElement, e: u32) -> AElement {
    let mut out = one_elem(cfg);
    for _ in 0..e {
        out = mul(cfg, &out, u);
    }
    out
}

/// Normal form of an arbitrary word `prod a_{idx}^{pow}` times a scalar.
///
/// The word may list generators in any order with repeated indices; odd
/// generators may carry any nonnegative power (nilpotency zeroes the term
/// during rewriting). Negative powers are only accepted on `a_1`.
pub fn normal_form(
    cfg: &ParamConfig,
    coeff: ParamCoeff,
    word: &[(usize, i64)],
) -> Result<AElement, AlgebraError> {
    let mut acc = scalar_elem(coeff);
    for &(idx, pow) in word {
        let factor = generator_elem(cfg, idx, pow)?;
        acc = mul(cfg, &acc, &factor);
    }
    Ok(acc)
}

/// Both sides of the series commutation rule
/// `(sum_k c_k a_1^k) a_j = a_j sum_k c_k (p_j a_1)^k`, normal ordered.
pub fn commute_series(
    cfg: &ParamConfig,
    coeffs: &[Rational],
    j: usize,
) -> Result<(AElement, AElement), AlgebraError> {
    cfg.check_index(j)?;
    if j == 1 {
        return Err(AlgebraError::IndexOutOfRange {
            index: 1,
            max: cfg.total(),
        });
    }
    let n = cfg.total();
    let aj = generator_elem(cfg, j, 1)?;

    let mut series = AElement::zero();
    let mut scaled = AElement::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let mut exps = vec![0; n];
        exps[0] = k as i64;
        let mono = SuperMonomial::from_exps_unchecked(exps);
        series.add_term(mono.clone(), ParamCoeff::from_rational(n, c.clone()));
        // (p_j a_1)^k = p_j^k a_1^k
        let pk = ParamCoeff::p_pow(n, j, k as i64).scale(c);
        scaled.add_term(mono, pk);
    }

    let lhs = mul(cfg, &series, &aj);
    let rhs = mul(cfg, &aj, &scaled);
    debug_assert_eq!(lhs, rhs, "series commutation rule violated");
    Ok((lhs, rhs))
}

/// Map every coefficient to its value at the classical point `p = 1`,
/// `h = 0`. In the image the algebra is supercommutative.
pub fn classical_limit(u: &AElement) -> AElement {
    u.map_coeffs(|c| ParamCoeff::from_rational(c.nsyms(), c.classical_limit()))
}

/// Parity of a homogeneous element; `None` when terms of both parities
/// are present (the zero element reports even).
pub fn parity_of(cfg: &ParamConfig, u: &AElement) -> Option<i64> {
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
