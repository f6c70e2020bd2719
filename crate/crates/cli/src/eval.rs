//! Evaluation of parsed expressions into normal-ordered elements.

use std::fmt;

use qsuperspace::calculus::{self, FormElement};
use qsuperspace::cartan;
use qsuperspace::hopf::{self, TensorElement, TensorMode};
use qsuperspace::logext::calculus as mcalc;
use qsuperspace::logext::{self, MElement, MTensorElement};
use qsuperspace::superalgebra;
use qsuperspace::{AlgebraError, ParamCoeff};

use crate::ast::Expr;
use crate::session::{Algebra, SessionConfig};

use mcalc::MFormElement;

/// A fully normal-ordered result.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(ParamCoeff),
    A(superalgebra::AElement),
    AForm(FormElement),
    ATensor(TensorElement),
    M(MElement),
    MForm(MFormElement),
    MTensor(MTensorElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::A(e) => write!(f, "{e}"),
            Value::AForm(e) => write!(f, "{e}"),
            Value::ATensor(e) => write!(f, "{e}"),
            Value::M(e) => write!(f, "{e}"),
            Value::MForm(e) => write!(f, "{e}"),
            Value::MTensor(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evaluation error: {}", self.0)
    }
}

impl std::error::Error for EvalError {}

impl From<AlgebraError> for EvalError {
    fn from(e: AlgebraError) -> Self {
        EvalError(e.to_string())
    }
}

fn kind_name(v: &Value) -> &'static str {
    match v {
        Value::Scalar(_) => "scalar",
        Value::A(_) => "algebra element",
        Value::AForm(_) => "differential form",
        Value::ATensor(_) => "tensor",
        Value::M(_) => "algebra element",
        Value::MForm(_) => "differential form",
        Value::MTensor(_) => "tensor",
    }
}

pub struct Evaluator<'a> {
    pub session: &'a SessionConfig,
}

impl<'a> Evaluator<'a> {
    pub fn new(session: &'a SessionConfig) -> Self {
        Evaluator { session }
    }

    fn nsyms(&self) -> usize {
        self.session.param.total()
    }

    fn scalar_to_algebra(&self, c: ParamCoeff) -> Value {
        match self.session.algebra {
            Algebra::A => Value::A(superalgebra::scalar_elem(c)),
            Algebra::M => Value::M(logext::algebra::scalar_elem_m(c)),
        }
    }

    pub fn eval(&self, expr: &Expr) -> Result<Value, EvalError> {
        let cfg = &self.session.param;
        match expr {
            Expr::Rational(r) => Ok(Value::Scalar(ParamCoeff::from_rational(
                self.nsyms(),
                r.clone(),
            ))),
            Expr::Param { hlog, index, power } => {
                let c = if *hlog {
                    ParamCoeff::h_sym(self.nsyms(), *index).pow(*power as u32)
                } else {
                    ParamCoeff::p_pow(self.nsyms(), *index, *power)
                };
                Ok(Value::Scalar(c))
            }
            Expr::Gen { index, power } => match self.session.algebra {
                Algebra::A => Ok(Value::A(superalgebra::generator_elem(cfg, *index, *power)?)),
                Algebra::M => Ok(Value::M(logext::algebra::x_elem(cfg, *index, *power)?)),
            },
            Expr::Grouplike { power } => Ok(Value::M(logext::algebra::grouplike_elem(cfg, *power))),
            Expr::Sum(terms) => {
                let mut acc: Option<Value> = None;
                for (neg, term) in terms {
                    let mut v = self.eval(term)?;
                    if *neg {
                        v = self.negate(v);
                    }
                    acc = Some(match acc {
                        None => v,
                        Some(a) => self.add(a, v)?,
                    });
                }
                Ok(acc.expect("sums are nonempty"))
            }
            Expr::Product(factors) => {
                let mut acc: Option<Value> = None;
                for factor in factors {
                    let v = self.eval(factor)?;
                    acc = Some(match acc {
                        None => v,
                        Some(a) => self.multiply(a, v)?,
                    });
                }
                Ok(acc.expect("products are nonempty"))
            }
            Expr::Power(base, e) => {
                let v = self.eval(base)?;
                let mut acc = match &v {
                    Value::Scalar(_) => Value::Scalar(ParamCoeff::one(self.nsyms())),
                    Value::A(_) | Value::AForm(_) | Value::ATensor(_) => {
                        if matches!(v, Value::ATensor(_)) {
                            Value::ATensor(TensorElement::from_term(
                                TensorMode::SignOnly,
                                qsuperspace::SuperMonomial::one(self.nsyms()),
                                qsuperspace::SuperMonomial::one(self.nsyms()),
                                ParamCoeff::one(self.nsyms()),
                            ))
                        } else {
                            Value::A(superalgebra::one_elem(cfg))
                        }
                    }
                    Value::M(_) | Value::MForm(_) | Value::MTensor(_) => {
                        if matches!(v, Value::MTensor(_)) {
                            Value::MTensor(MTensorElement::from_term(
                                (
                                    logext::MMonomial::one(self.nsyms()),
                                    logext::MMonomial::one(self.nsyms()),
                                ),
                                ParamCoeff::one(self.nsyms()),
                            ))
                        } else {
                            Value::M(logext::algebra::one_elem_m(cfg))
                        }
                    }
                };
                for _ in 0..*e {
                    acc = self.multiply(acc, v.clone())?;
                }
                Ok(acc)
            }
            Expr::Tensor(a, b) => {
                let va = self.eval(a)?;
                let vb = self.eval(b)?;
                self.tensor(va, vb)
            }
            Expr::Diff(e) => match self.eval(e)? {
                Value::Scalar(_) => match self.session.algebra {
                    Algebra::A => Ok(Value::AForm(FormElement::zero())),
                    Algebra::M => Ok(Value::MForm(MFormElement::zero())),
                },
                Value::A(u) => Ok(Value::AForm(calculus::exterior_d(
                    cfg,
                    &calculus::embed(cfg, &u),
                ))),
                Value::AForm(w) => Ok(Value::AForm(calculus::exterior_d(cfg, &w))),
                Value::M(u) => Ok(Value::MForm(mcalc::m_exterior_d(
                    cfg,
                    &mcalc::m_embed(cfg, &u),
                ))),
                Value::MForm(w) => Ok(Value::MForm(mcalc::m_exterior_d(cfg, &w))),
                other => Err(EvalError(format!(
                    "d is not defined on a {}",
                    kind_name(&other)
                ))),
            },
            Expr::Partial { index, arg } => match self.eval(arg)? {
                Value::Scalar(_) => Ok(self.scalar_to_algebra(ParamCoeff::zero(self.nsyms()))),
                Value::A(u) => Ok(Value::A(calculus::partial_elem(cfg, *index, &u))),
                Value::M(u) => Ok(Value::M(mcalc::m_partial(cfg, *index, &u)?)),
                other => Err(EvalError(format!(
                    "partial derivatives act on algebra elements, not on a {}",
                    kind_name(&other)
                ))),
            },
            Expr::VectorField { index, arg } => match self.eval(arg)? {
                Value::Scalar(c) => {
                    let promoted = self.scalar_to_algebra(c);
                    self.eval_vf(*index, promoted)
                }
                v => self.eval_vf(*index, v),
            },
            Expr::Antipode(e) => match self.eval(e)? {
                Value::Scalar(c) => Ok(Value::Scalar(c)),
                Value::A(u) => Ok(Value::A(hopf::antipode(cfg, &u))),
                Value::M(u) => Ok(Value::M(logext::antipode_m(cfg, &u))),
                other => Err(EvalError(format!(
                    "the antipode acts on algebra elements, not on a {}",
                    kind_name(&other)
                ))),
            },
            Expr::Coproduct(e) => match self.eval(e)? {
                Value::Scalar(c) => match self.session.algebra {
                    Algebra::A => Ok(Value::ATensor(hopf::coproduct(
                        cfg,
                        &superalgebra::scalar_elem(c),
                    ))),
                    Algebra::M => Ok(Value::MTensor(logext::coproduct_m(
                        cfg,
                        &logext::algebra::scalar_elem_m(c),
                    ))),
                },
                Value::A(u) => Ok(Value::ATensor(hopf::coproduct(cfg, &u))),
                Value::M(u) => Ok(Value::MTensor(logext::coproduct_m(cfg, &u))),
                other => Err(EvalError(format!(
                    "the coproduct acts on algebra elements, not on a {}",
                    kind_name(&other)
                ))),
            },
            Expr::Counit(e) => match self.eval(e)? {
                Value::Scalar(c) => Ok(Value::Scalar(c)),
                Value::A(u) => Ok(Value::Scalar(hopf::counit(cfg, &u))),
                Value::M(u) => Ok(Value::Scalar(logext::counit_m(cfg, &u))),
                other => Err(EvalError(format!(
                    "the counit acts on algebra elements, not on a {}",
                    kind_name(&other)
                ))),
            },
            Expr::Omega { index } => match self.session.algebra {
                Algebra::A => Ok(Value::AForm(cartan::mc_form(cfg, *index)?.expansion)),
                Algebra::M => Ok(Value::MForm(mcalc::theta_form(cfg, *index)?)),
            },
        }
    }

    fn eval_vf(&self, index: usize, v: Value) -> Result<Value, EvalError> {
        let cfg = &self.session.param;
        match v {
            Value::A(u) => Ok(Value::A(cartan::vf_apply(cfg, index, &u)?)),
            Value::M(u) => Ok(Value::M(mcalc::m_vf_apply(cfg, index, &u)?)),
            other => Err(EvalError(format!(
                "vector fields act on algebra elements, not on a {}",
                kind_name(&other)
            ))),
        }
    }

    fn negate(&self, v: Value) -> Value {
        match v {
            Value::Scalar(c) => Value::Scalar(c.negate()),
            Value::A(e) => Value::A(e.neg()),
            Value::AForm(e) => Value::AForm(e.neg()),
            Value::ATensor(e) => {
                Value::ATensor(e.scale(&ParamCoeff::from_integer(self.nsyms(), -1)))
            }
            Value::M(e) => Value::M(e.neg()),
            Value::MForm(e) => Value::MForm(e.neg()),
            Value::MTensor(e) => Value::MTensor(e.neg()),
        }
    }

    fn add(&self, a: Value, b: Value) -> Result<Value, EvalError> {
        let cfg = &self.session.param;
        use Value::*;
        Ok(match (a, b) {
            (Scalar(x), Scalar(y)) => Scalar(&x + &y),
            // Scalars embed as multiples of the unit.
            (Scalar(x), other) => return self.add(self.scalar_to_algebra(x), other),
            (other, Scalar(y)) => return self.add(other, self.scalar_to_algebra(y)),
            (A(x), A(y)) => A(x.add(&y)),
            (A(x), AForm(y)) => AForm(calculus::embed(cfg, &x).add(&y)),
            (AForm(x), A(y)) => AForm(x.add(&calculus::embed(cfg, &y))),
            (AForm(x), AForm(y)) => AForm(x.add(&y)),
            (ATensor(x), ATensor(y)) => ATensor(x.add(&y)),
            (M(x), M(y)) => M(x.add(&y)),
            (M(x), MForm(y)) => MForm(mcalc::m_embed(cfg, &x).add(&y)),
            (MForm(x), M(y)) => MForm(x.add(&mcalc::m_embed(cfg, &y))),
            (MForm(x), MForm(y)) => MForm(x.add(&y)),
            (MTensor(x), MTensor(y)) => MTensor(x.add(&y)),
            (a, b) => {
                return Err(EvalError(format!(
                    "cannot add a {} and a {}",
                    kind_name(&a),
                    kind_name(&b)
                )))
            }
        })
    }

    fn multiply(&self, a: Value, b: Value) -> Result<Value, EvalError> {
        let cfg = &self.session.param;
        use Value::*;
        Ok(match (a, b) {
            (Scalar(x), Scalar(y)) => Scalar(&x * &y),
            (Scalar(x), A(e)) | (A(e), Scalar(x)) => A(e.scale(&x)),
            (Scalar(x), AForm(e)) | (AForm(e), Scalar(x)) => AForm(e.scale(&x)),
            (Scalar(x), ATensor(e)) | (ATensor(e), Scalar(x)) => ATensor(e.scale(&x)),
            (Scalar(x), M(e)) | (M(e), Scalar(x)) => M(e.scale(&x)),
            (Scalar(x), MForm(e)) | (MForm(e), Scalar(x)) => MForm(e.scale(&x)),
            (Scalar(x), MTensor(e)) | (MTensor(e), Scalar(x)) => MTensor(e.scale(&x)),
            (A(x), A(y)) => A(superalgebra::mul(cfg, &x, &y)),
            (A(x), AForm(y)) => AForm(calculus::form_mul(cfg, &calculus::embed(cfg, &x), &y)),
            (AForm(x), A(y)) => AForm(calculus::form_mul(cfg, &x, &calculus::embed(cfg, &y))),
            (AForm(x), AForm(y)) => AForm(calculus::form_mul(cfg, &x, &y)),
            (ATensor(x), ATensor(y)) => ATensor(x.mul(cfg, &y)),
            (M(x), M(y)) => M(logext::mul_m(cfg, &x, &y)),
            (M(x), MForm(y)) => MForm(mcalc::m_form_mul(cfg, &mcalc::m_embed(cfg, &x), &y)),
            (MForm(x), M(y)) => MForm(mcalc::m_form_mul(cfg, &x, &mcalc::m_embed(cfg, &y))),
            (MForm(x), MForm(y)) => MForm(mcalc::m_form_mul(cfg, &x, &y)),
            (MTensor(x), MTensor(y)) => MTensor(logext::algebra::m_tensor_mul(cfg, &x, &y)),
            (a, b) => {
                return Err(EvalError(format!(
                    "cannot multiply a {} by a {}",
                    kind_name(&a),
                    kind_name(&b)
                )))
            }
        })
    }

    fn tensor(&self, a: Value, b: Value) -> Result<Value, EvalError> {
        use Value::*;
        let promote = |v: Value| -> Value {
            match v {
                Scalar(c) => self.scalar_to_algebra(c),
                other => other,
            }
        };
        match (promote(a), promote(b)) {
            (A(x), A(y)) => {
                let mut t = TensorElement::zero(TensorMode::SignOnly);
                for (mx, cx) in x.terms() {
                    for (my, cy) in y.terms() {
                        t = t.add(&TensorElement::from_term(
                            TensorMode::SignOnly,
                            mx.clone(),
                            my.clone(),
                            cx * cy,
                        ));
                    }
                }
                Ok(ATensor(t))
            }
            (M(x), M(y)) => {
                let mut t = MTensorElement::zero();
                for (mx, cx) in x.terms() {
                    for (my, cy) in y.terms() {
                        t.add_term((mx.clone(), my.clone()), cx * cy);
                    }
                }
                Ok(MTensor(t))
            }
            (a, b) => Err(EvalError(format!(
                "the tensor product takes algebra elements, found a {} and a {}",
                kind_name(&a),
                kind_name(&b)
            ))),
        }
    }

    /// Classical limit of any result kind.
    pub fn classical(&self, v: Value) -> Value {
        let limit = |c: &ParamCoeff| ParamCoeff::from_rational(c.nsyms(), c.classical_limit());
        match v {
            Value::Scalar(c) => Value::Scalar(limit(&c)),
            Value::A(e) => Value::A(e.map_coeffs(limit)),
            Value::AForm(e) => Value::AForm(e.map_coeffs(limit)),
            Value::ATensor(e) => Value::ATensor(e.map_coeffs(limit)),
            Value::M(e) => Value::M(e.map_coeffs(limit)),
            Value::MForm(e) => Value::MForm(e.map_coeffs(limit)),
            Value::MTensor(e) => Value::MTensor(e.map_coeffs(limit)),
        }
    }
}
