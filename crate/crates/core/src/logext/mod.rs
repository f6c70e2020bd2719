//! The logarithmic extension of the quantum superspace: new generators
//! `x_1` (the formal logarithm of the grouplike `a_1`, kept alongside the
//! grouplike `g = e^{x_1}` itself) and `x_i = a_1^{-1} a_i`, with
//! nonhomogeneous commutation relations `[x_1, x_i] = h_i x_i`.

pub mod algebra;
pub mod calculus;

pub use algebra::{
    antipode_m, coproduct_m, counit_m, log_truncation_check, mul_m, normal_form_m, verify_hopf_m,
    MElement, MFactor, MMonomial, MTensorElement,
};
pub use calculus::{
    m_exterior_d, m_form_mul, m_form_normal_form, m_partial, m_vf_apply, theta_form,
    verify_m_calculus, verify_m_vf, verify_theta, MFormElement, MFormMonomial,
};
