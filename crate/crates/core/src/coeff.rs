//! Exact scalar coefficients: rational linear combinations of monomials
//! `prod p_i^{e_i} * prod h_i^{f_i}` with `e_i` in Z and `f_i` in N.
//!
//! The symbols `p_i` are the invertible deformation parameters and the `h_i`
//! are their formal logarithms. They are kept independent; the only analytic
//! fact the engine ever uses is the normalization of integer powers of
//! `e^{h_i}` to `p_i`, and that normalization happens at the rewrite-rule
//! level, never inside this ring. Index 1 is special: `p_1 = 1` and
//! `h_1 = 0`, so exponents on slot 1 are normalized away (for `p`) or kill
//! the term (for `h`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

pub use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `r^e` for integer `e`, exact. Fails on `0^e` with `e < 0`.
pub fn rat_pow(r: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mag = e.unsigned_abs() as u32;
    let num = r.numer().pow(mag);
    let den = r.denom().pow(mag);
    if e > 0 {
        Rational::new(num, den)
    } else {
        assert!(!r.is_zero(), "zero has no negative powers");
        Rational::new(den, num)
    }
}

/// Exponent key of a single scalar monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct CoeffKey {
    p: Vec<i64>,
    h: Vec<u32>,
}

impl CoeffKey {
    fn unit(nsyms: usize) -> Self {
        CoeffKey {
            p: vec![0; nsyms],
            h: vec![0; nsyms],
        }
    }

    fn is_unit(&self) -> bool {
        self.p.iter().all(|&e| e == 0) && self.h.iter().all(|&f| f == 0)
    }

    fn mul(&self, other: &CoeffKey) -> CoeffKey {
        CoeffKey {
            p: self.p.iter().zip(&other.p).map(|(a, b)| a + b).collect(),
            h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect(),
        }
    }
}

/// An element of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamCoeff {
    nsyms: usize,
    terms: BTreeMap<CoeffKey, Rational>,
}

impl ParamCoeff {
    pub fn zero(nsyms: usize) -> Self {
        ParamCoeff {
            nsyms,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nsyms: usize) -> Self {
        Self::from_rational(nsyms, Rational::one())
    }

    pub fn from_rational(nsyms: usize, r: Rational) -> Self {
        let mut c = Self::zero(nsyms);
        if !r.is_zero() {
            c.terms.insert(CoeffKey::unit(nsyms), r);
        }
        c
    }

    pub fn from_integer(nsyms: usize, n: i64) -> Self {
        Self::from_rational(nsyms, rat_int(n))
    }

    /// `p_idx^exp` (1-based index; `p_1 = 1` collapses to the unit).
    pub fn p_pow(nsyms: usize, idx: usize, exp: i64) -> Self {
        let mut p = vec![0i64; nsyms];
        if idx > 1 {
            p[idx - 1] = exp;
        }
        Self::monomial(nsyms, p, vec![0; nsyms], Rational::one())
    }

    /// `h_idx` (1-based; `h_1 = 0` collapses to zero).
    pub fn h_sym(nsyms: usize, idx: usize) -> Self {
        if idx == 1 {
            return Self::zero(nsyms);
        }
        let mut h = vec![0u32; nsyms];
        h[idx - 1] = 1;
        Self::monomial(nsyms, vec![0; nsyms], h, Rational::one())
    }

    /// A single scalar monomial `r * prod p_i^{p[i]} * prod h_i^{h[i]}`,
    /// normalized: `p_1` exponents are dropped, an `h_1` factor kills the
    /// term, zero rationals give the zero element.
    pub fn monomial(nsyms: usize, mut p: Vec<i64>, h: Vec<u32>, r: Rational) -> Self {
        assert_eq!(p.len(), nsyms);
        assert_eq!(h.len(), nsyms);
        if r.is_zero() || h[0] > 0 {
            return Self::zero(nsyms);
        }
        p[0] = 0;
        let mut c = Self::zero(nsyms);
        c.terms.insert(CoeffKey { p, h }, r);
        c
    }

    pub fn nsyms(&self) -> usize {
        self.nsyms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(k, v)| k.is_unit() && v.is_one())
                .unwrap_or(false)
    }

    /// Number of scalar monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True when the coefficient is a single scalar monomial; such
    /// coefficients print without parentheses.
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// Iterate `(p_exps, h_exps, rational)` in canonical order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&[i64], &[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (&k.p[..], &k.h[..], v))
    }

    /// The purely rational part, if the coefficient is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (k, v) = self.terms.iter().next().unwrap();
            if k.is_unit() {
                return Some(v.clone());
            }
        }
        None
    }

    fn check_compat(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.nsyms != other.nsyms {
            Err(AlgebraError::ConfigMismatch {
                expected: self.nsyms,
                found: other.nsyms,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compat(other)?;
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let entry = terms.entry(k.clone()).or_insert_with(Rational::zero);
            *entry += v;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        Ok(ParamCoeff {
            nsyms: self.nsyms,
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compat(other)?;
        let mut out: BTreeMap<CoeffKey, Rational> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let k = ka.mul(kb);
                let v = va * vb;
                let entry = out.entry(k.clone()).or_insert_with(Rational::zero);
                *entry += v;
                if entry.is_zero() {
                    out.remove(&k);
                }
            }
        }
        Ok(ParamCoeff {
            nsyms: self.nsyms,
            terms: out,
        })
    }

    pub fn negate(&self) -> Self {
        ParamCoeff {
            nsyms: self.nsyms,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.nsyms);
        }
        ParamCoeff {
            nsyms: self.nsyms,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * r)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nsyms);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact evaluation at `p_i := p_vals[i-1]`, `h_i := h_vals[i-1]`.
    ///
    /// The assignment must cover every symbol (slot 1 is forced to `p_1 = 1`,
    /// `h_1 = 0` regardless of input) and the `p` values must be nonzero.
    pub fn specialize(
        &self,
        p_vals: &[Rational],
        h_vals: &[Rational],
    ) -> Result<Rational, AlgebraError> {
        if p_vals.len() != self.nsyms {
            return Err(AlgebraError::MissingAssignment(format!(
                "expected {} p-values, found {}",
                self.nsyms,
                p_vals.len()
            )));
        }
        if h_vals.len() != self.nsyms {
            return Err(AlgebraError::MissingAssignment(format!(
                "expected {} h-values, found {}",
                self.nsyms,
                h_vals.len()
            )));
        }
        for (i, v) in p_vals.iter().enumerate().skip(1) {
            if v.is_zero() {
                return Err(AlgebraError::ZeroAssignment(format!("p{}", i + 1)));
            }
        }
        let mut total = Rational::zero();
        for (k, v) in &self.terms {
            let mut term = v.clone();
            for (i, &e) in k.p.iter().enumerate().skip(1) {
                if e != 0 {
                    term *= rat_pow(&p_vals[i], e);
                }
            }
            for (i, &f) in k.h.iter().enumerate().skip(1) {
                if f != 0 {
                    term *= rat_pow(&h_vals[i], f as i64);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation at the classical point `p_i = 1`, `h_i = 0`.
    pub fn classical_limit(&self) -> Rational {
        let mut total = Rational::zero();
        for (k, v) in &self.terms {
            if k.h.iter().all(|&f| f == 0) {
                total += v;
            }
        }
        total
    }

    /// Leading rational, used to decide the printed sign of a term.
    pub fn leading_sign_negative(&self) -> bool {
        self.terms
            .iter()
            .next()
            .map(|(_, v)| v.is_negative())
            .unwrap_or(false)
    }
}

impl Add for &ParamCoeff {
    type Output = ParamCoeff;
    fn add(self, rhs: &ParamCoeff) -> ParamCoeff {
        self.checked_add(rhs).expect("coefficient arity mismatch")
    }
}

impl Sub for &ParamCoeff {
    type Output = ParamCoeff;
    fn sub(self, rhs: &ParamCoeff) -> ParamCoeff {
        self.checked_add(&rhs.negate())
            .expect("coefficient arity mismatch")
    }
}

impl Mul for &ParamCoeff {
    type Output = ParamCoeff;
    fn mul(self, rhs: &ParamCoeff) -> ParamCoeff {
        self.checked_mul(rhs).expect("coefficient arity mismatch")
    }
}

impl Neg for &ParamCoeff {
    type Output = ParamCoeff;
    fn neg(self) -> ParamCoeff {
        self.negate()
    }
}

fn fmt_key_factors(key: &CoeffKey, out: &mut Vec<String>) {
    for (i, &e) in key.p.iter().enumerate() {
        if e == 1 {
            out.push(format!("p{}", i + 1));
        } else if e != 0 {
            out.push(format!("p{}^{}", i + 1, e));
        }
    }
    for (i, &f) in key.h.iter().enumerate() {
        if f == 1 {
            out.push(format!("h{}", i + 1));
        } else if f != 0 {
            out.push(format!("h{}^{}", i + 1, f));
        }
    }
}

/// One scalar monomial, sign included.
fn fmt_term(key: &CoeffKey, r: &Rational) -> String {
    let mut factors = Vec::new();
    fmt_key_factors(key, &mut factors);
    if factors.is_empty() {
        return r.to_string();
    }
    let body = factors.join("*");
    if r.is_one() {
        body
    } else if (-r).is_one() {
        format!("-{body}")
    } else {
        format!("{r}*{body}")
    }
}

impl fmt::Display for ParamCoeff {
    /// Canonical text: terms in key order, joined sign-aware, e.g.
    /// `1 - p2^-1`, `3/2*h2^2`, `-p2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{}", fmt_term(k, v))?;
            } else if v.is_negative() {
                write!(f, " - {}", fmt_term(k, &-v))?;
            } else {
                write!(f, " + {}", fmt_term(k, v))?;
            }
        }
        Ok(())
    }
}
