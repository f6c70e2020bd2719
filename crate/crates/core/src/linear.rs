//! Linear combinations over an ordered monomial basis, shared by every
//! algebra in the engine (superspace monomials, differential forms, tensor
//! legs, and the logarithmic extension).

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{ParamCoeff, Rational};

/// A basis monomial: printable, with a distinguished unit element.
pub trait BasisMonomial: Ord + Clone {
    fn is_unit(&self) -> bool;
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl<A: BasisMonomial, B: BasisMonomial> BasisMonomial for (A, B) {
    fn is_unit(&self) -> bool {
        self.0.is_unit() && self.1.is_unit()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f)?;
        write!(f, " (x) ")?;
        self.1.write(f)
    }
}

impl<A: BasisMonomial, B: BasisMonomial, C: BasisMonomial> BasisMonomial for (A, B, C) {
    fn is_unit(&self) -> bool {
        self.0.is_unit() && self.1.is_unit() && self.2.is_unit()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f)?;
        write!(f, " (x) ")?;
        self.1.write(f)?;
        write!(f, " (x) ")?;
        self.2.write(f)
    }
}

/// Adapter that renders a bare monomial through its [`BasisMonomial`]
/// implementation.
pub struct ShowMono<'a, M: BasisMonomial>(pub &'a M);

impl<M: BasisMonomial> fmt::Display for ShowMono<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f)
    }
}

/// A finite linear combination of basis monomials with `ParamCoeff`
/// coefficients. Zero coefficients are never stored, so equality of the
/// term maps is equality of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<M: BasisMonomial> {
    terms: BTreeMap<M, ParamCoeff>,
}

impl<M: BasisMonomial> Default for LinComb<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: BasisMonomial> LinComb<M> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(mono: M, coeff: ParamCoeff) -> Self {
        let mut e = Self::zero();
        e.add_term(mono, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &ParamCoeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, ParamCoeff)> {
        self.terms.into_iter()
    }

    pub fn coeff_of(&self, mono: &M) -> Option<&ParamCoeff> {
        self.terms.get(mono)
    }

    /// Merge a term in, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, mono: M, coeff: ParamCoeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let merged = &*existing + &coeff;
                if merged.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = merged;
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.negate()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &ParamCoeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.scale(r));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamCoeff) -> ParamCoeff) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    /// Map the basis monomials themselves; used by embeddings between
    /// algebras (for example a degree-0 element into the form algebra).
    pub fn map_monomials<N: BasisMonomial>(&self, f: impl Fn(&M) -> N) -> LinComb<N> {
        let mut out = LinComb::zero();
        for (m, v) in &self.terms {
            out.add_term(f(m), v.clone());
        }
        out
    }
}

impl<M: BasisMonomial> fmt::Display for LinComb<M> {
    /// Canonical text form. A term prints as `coeff * monomial` with the
    /// coefficient omitted when it is 1, negated inline when it is a single
    /// negative scalar monomial, and parenthesized when it is a sum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (lead, body) = term_text(m, c, i == 0);
            if i == 0 {
                if lead {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if lead {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        return Ok(());

        /// Text of a single term together with a flag saying the sign was
        /// factored out. Multi-term coefficients keep their sign inside
        /// parentheses, except for a leading pure-scalar term where the
        /// sign can head the whole expression.
        fn term_text<M: BasisMonomial>(m: &M, c: &ParamCoeff, first: bool) -> (bool, String) {
            let mono = {
                struct W<'a, M: BasisMonomial>(&'a M);
                impl<M: BasisMonomial> fmt::Display for W<'_, M> {
                    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                        self.0.write(f)
                    }
                }
                W(m).to_string()
            };
            if m.is_unit() {
                if c.is_single_term() && c.leading_sign_negative() {
                    return (true, c.negate().to_string());
                }
                if c.is_single_term() || first {
                    return (false, c.to_string());
                }
                return (false, format!("({c})"));
            }
            if c.is_one() {
                return (false, mono);
            }
            if c.negate().is_one() {
                return (true, mono);
            }
            if c.is_single_term() {
                if c.leading_sign_negative() {
                    return (true, format!("{} * {}", c.negate(), mono));
                }
                return (false, format!("{c} * {mono}"));
            }
            (false, format!("({c}) * {mono}"))
        }
    }
}
