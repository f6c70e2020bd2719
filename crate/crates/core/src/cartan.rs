//! Maurer-Cartan 1-forms on the quantum superspace and the quantum Lie
//! superalgebra of vector fields dual to them.
//!
//! The right-invariant form attached to `f` is `w_f = mu((d (x) S) Delta(f))`;
//! on generators this closes to
//!
//! ```text
//! w_{a_1} = d(a_1) a_1^{-1}
//! w_{a_i} = d(a_i) a_1^{-z_i} - z_i d(a_1) a_1^{-1} a_i a_1^{-z_i}
//! ```
//!
//! The vector fields decomposing `d = sum_i w_{a_i} T_{a_i}` are
//! `T_{a_1} = sum_l z_l a_l d_l` (diagonal with eigenvalue `deg_z` on
//! monomials) and `T_{a_i} = a_1^{z_i} d_i`.

use crate::calculus::{
    d_zero, embed, form_mul, form_normal_form, partial_elem, wedge_gen, FormElement,
};
use crate::coeff::ParamCoeff;
use crate::config::ParamConfig;
use crate::error::AlgebraError;
use crate::hopf::{antipode, coproduct};
use crate::report::CheckReport;
use crate::sample::{random_coeff, random_element, random_monomial, Rng};
use crate::superalgebra::{generator_elem, mul, AElement};

/// A Maurer-Cartan form, stored normal ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCForm {
    pub index: usize,
    pub expansion: FormElement,
}

/// The closed-form expansion of `w_{a_i}`.
pub fn mc_form_closed(cfg: &ParamConfig, i: usize) -> Result<FormElement, AlgebraError> {
    cfg.check_index(i)?;
    let n = cfg.total();
    if i == 1 {
        return form_normal_form(cfg, ParamCoeff::one(n), &[(1, 1, true), (1, -1, false)]);
    }
    let zi = cfg.z(i);
    let lead = form_normal_form(cfg, ParamCoeff::one(n), &[(i, 1, true), (1, -zi, false)])?;
    let tail = form_normal_form(
        cfg,
        ParamCoeff::from_integer(n, -zi),
        &[(1, 1, true), (1, -1, false), (i, 1, false), (1, -zi, false)],
    )?;
    Ok(lead.add(&tail))
}

/// `w_{a_i}` computed through the Hopf pipeline `mu((d (x) S) Delta(a_i))`;
/// the result is checked against the closed form before returning.
pub fn mc_form(cfg: &ParamConfig, i: usize) -> Result<MCForm, AlgebraError> {
    cfg.check_index(i)?;
    let n = cfg.total();
    let gen = generator_elem(cfg, i, 1)?;
    let mut out = FormElement::zero();
    for ((u, v), c) in coproduct(cfg, &gen).terms().terms() {
        let du = d_zero(cfg, &AElement::from_term(u.clone(), ParamCoeff::one(n)));
        let sv = antipode(cfg, &AElement::from_term(v.clone(), ParamCoeff::one(n)));
        out = out.add(&form_mul(cfg, &du, &embed(cfg, &sv)).scale(c));
    }
    let closed = mc_form_closed(cfg, i)?;
    assert_eq!(
        out, closed,
        "Maurer-Cartan pipeline disagrees with the closed form"
    );
    Ok(MCForm {
        index: i,
        expansion: out,
    })
}

/// Action of the vector field `T_{a_i}`.
pub fn vf_apply(cfg: &ParamConfig, i: usize, u: &AElement) -> Result<AElement, AlgebraError> {
    cfg.check_index(i)?;
    if i == 1 {
        let mut out = AElement::zero();
        for l in 1..=cfg.total() {
            let zl = cfg.z(l);
            if zl == 0 {
                continue;
            }
            let al = generator_elem(cfg, l, 1)?;
            out = out.add(
                &mul(cfg, &al, &partial_elem(cfg, l, u))
                    .scale(&ParamCoeff::from_integer(cfg.total(), zl)),
            );
        }
        Ok(out)
    } else {
        let lead = generator_elem(cfg, 1, cfg.z(i))?;
        Ok(mul(cfg, &lead, &partial_elem(cfg, i, u)))
    }
}

/// The diagonal operator `p_i^{sign * T_{a_1}}`: scales each monomial by
/// `p_i^{sign * deg_z}`.
pub fn grouplike_weight(cfg: &ParamConfig, i: usize, sign: i64, u: &AElement) -> AElement {
    let n = cfg.total();
    let mut out = AElement::zero();
    for (m, c) in u.terms() {
        let w = ParamCoeff::p_pow(n, i, sign * m.deg_z(cfg));
        out.add_term(m.clone(), c * &w);
    }
    out
}

fn koszul_sign(e: i64) -> bool {
    e & 1 == 1
}

/// Commutation of generators with the Maurer-Cartan forms:
/// `a_i w_{a_j} = (-1)^{î(ĵ+1)} p_j^{z_i} w_{a_j} a_i` for every pair, and
/// the monomial version `f w_{a_i} = (-1)^{f̂(î+1)} p_i^{deg_z f} w_{a_i} f`
/// (the weight is carried by `p_i`, the form's own index, as the pairwise
/// relation forces).
pub fn verify_mc_relations(cfg: &ParamConfig, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("cartan-forms");
    let mut rng = Rng::new(seed);
    let n = cfg.total();

    let forms: Vec<FormElement> = (1..=n)
        .map(|i| mc_form(cfg, i).expect("pipeline agrees").expansion)
        .collect();
    report.record_ok("pipeline construction matches the closed form");

    let mut rel: Option<String> = None;
    'rel: for i in 1..=n {
        for j in 1..=n {
            let ai = embed(cfg, &generator_elem(cfg, i, 1).expect("index"));
            let lhs = form_mul(cfg, &ai, &forms[j - 1]);
            let mut c = ParamCoeff::p_pow(n, j, cfg.z(i));
            if koszul_sign(cfg.parity(i) * (cfg.parity(j) + 1)) {
                c = c.negate();
            }
            let rhs = form_mul(cfg, &forms[j - 1], &ai).scale(&c);
            if lhs != rhs {
                rel = Some(format!("pair ({i}, {j})"));
                break 'rel;
            }
        }
    }
    report.record(
        "generator/form commutation for all pairs",
        rel.is_none(),
        || rel.clone().unwrap(),
    );

    let mut cart: Option<String> = None;
    'cart: for _ in 0..samples {
        let m = random_monomial(&mut rng, cfg, 2);
        let f = AElement::from_term(m.clone(), random_coeff(&mut rng, cfg));
        let fp = m.parity(cfg);
        let w = m.deg_z(cfg);
        for i in 1..=n {
            let lhs = form_mul(cfg, &embed(cfg, &f), &forms[i - 1]);
            let mut c = ParamCoeff::p_pow(n, i, w);
            if koszul_sign(fp * (cfg.parity(i) + 1)) {
                c = c.negate();
            }
            let rhs = form_mul(cfg, &forms[i - 1], &embed(cfg, &f)).scale(&c);
            if lhs != rhs {
                cart = Some(format!("f = {f}, i = {i}"));
                break 'cart;
            }
        }
    }
    report.record(
        "monomial/form commutation with weight p_i^(deg_z f)",
        cart.is_none(),
        || cart.clone().unwrap(),
    );

    report
}

/// Vector-field suite: the diagonal action of `T_{a_1}`, the Leibniz rules
/// matching the deformed coproducts, supercommutativity, the decomposition
/// `d = sum_i w_{a_i} T_{a_i}`, and the Hopf data as operator identities.
pub fn verify_t_hopf(cfg: &ParamConfig, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("cartan-vector-fields");
    let mut rng = Rng::new(seed);
    let n = cfg.total();

    let forms: Vec<FormElement> = (1..=n)
        .map(|i| mc_form_closed(cfg, i).expect("index"))
        .collect();

    // T_{a_1} is diagonal with eigenvalue deg_z.
    let mut diag: Option<String> = None;
    for _ in 0..samples {
        let m = random_monomial(&mut rng, cfg, 2);
        let u = AElement::from_term(m.clone(), ParamCoeff::one(n));
        let got = vf_apply(cfg, 1, &u).expect("index");
        let expected = u.scale(&ParamCoeff::from_integer(n, m.deg_z(cfg)));
        if got != expected {
            diag = Some(format!("monomial {u}"));
            break;
        }
    }
    report.record(
        "T_{a_1} acts by the weighted degree",
        diag.is_none(),
        || diag.clone().unwrap(),
    );

    // Leibniz rules = evaluating the deformed coproducts on f (x) g.
    let mut leibniz: Option<String> = None;
    'leib: for _ in 0..samples {
        let m = random_monomial(&mut rng, cfg, 2);
        let f = AElement::from_term(m.clone(), random_coeff(&mut rng, cfg));
        let g = random_element(&mut rng, cfg, 2);
        let fg = mul(cfg, &f, &g);
        let t1 = vf_apply(cfg, 1, &fg).expect("index");
        let t1_leib = mul(cfg, &vf_apply(cfg, 1, &f).expect("index"), &g).add(&mul(
            cfg,
            &f,
            &vf_apply(cfg, 1, &g).expect("index"),
        ));
        if t1 != t1_leib {
            leibniz = Some(format!("i = 1, f = {f}, g = {g}"));
            break 'leib;
        }
        for i in 2..=n {
            let lhs = vf_apply(cfg, i, &fg).expect("index");
            let weighted = grouplike_weight(cfg, i, 1, &f);
            let mut second = mul(cfg, &weighted, &vf_apply(cfg, i, &g).expect("index"));
            if koszul_sign(m.parity(cfg) * cfg.parity(i)) {
                second = second.neg();
            }
            let rhs = mul(cfg, &vf_apply(cfg, i, &f).expect("index"), &g).add(&second);
            if lhs != rhs {
                leibniz = Some(format!("i = {i}, f = {f}, g = {g}"));
                break 'leib;
            }
        }
    }
    report.record(
        "Leibniz rules match the deformed coproducts",
        leibniz.is_none(),
        || leibniz.clone().unwrap(),
    );

    // T_{a_i} T_{a_j} = (-1)^{î ĵ} T_{a_j} T_{a_i} as actions.
    let mut comm: Option<String> = None;
    'comm: for _ in 0..samples.min(40) {
        let u = random_element(&mut rng, cfg, 2);
        for i in 1..=n {
            for j in 1..=n {
                let lhs = vf_apply(cfg, i, &vf_apply(cfg, j, &u).expect("index")).expect("index");
                let mut rhs =
                    vf_apply(cfg, j, &vf_apply(cfg, i, &u).expect("index")).expect("index");
                if koszul_sign(cfg.parity(i) * cfg.parity(j)) {
                    rhs = rhs.neg();
                }
                if lhs != rhs {
                    comm = Some(format!("pair ({i}, {j}) on {u}"));
                    break 'comm;
                }
            }
        }
    }
    report.record("vector fields supercommute", comm.is_none(), || {
        comm.clone().unwrap()
    });

    // sum_i w_{a_i} T_{a_i}(f) = sum_i d(a_i) d_i(f) = d(f).
    let mut decomp: Option<String> = None;
    for _ in 0..samples {
        let f = random_element(&mut rng, cfg, 2);
        let mut via_mc = FormElement::zero();
        let mut via_diff = FormElement::zero();
        for i in 1..=n {
            via_mc = via_mc.add(&form_mul(
                cfg,
                &forms[i - 1],
                &embed(cfg, &vf_apply(cfg, i, &f).expect("index")),
            ));
            via_diff = via_diff.add(&form_mul(
                cfg,
                &wedge_gen(cfg, i).expect("index"),
                &embed(cfg, &partial_elem(cfg, i, &f)),
            ));
        }
        let df = d_zero(cfg, &f);
        if via_mc != df || via_diff != df {
            decomp = Some(format!("f = {f}"));
            break;
        }
    }
    report.record(
        "d decomposes through the Maurer-Cartan forms",
        decomp.is_none(),
        || decomp.clone().unwrap(),
    );

    // Hopf data for the vector fields, as operator identities:
    // counit eps(T) = 0 and antipode S(T_{a_1}) = -T_{a_1},
    // S(T_{a_i}) = -p_i^{-T_{a_1}} T_{a_i} satisfy mu(S (x) id) Delta = 0.
    let mut hopf_ops: Option<String> = None;
    for _ in 0..samples.min(40) {
        let u = random_element(&mut rng, cfg, 2);
        // i = 1: S(T_1) + T_1 = 0 against eps(T_1) = 0.
        let t1u = vf_apply(cfg, 1, &u).expect("index");
        if t1u.neg().add(&t1u).is_zero() {
            // i >= 2: -p_i^{-T_1}(T_i(u)) + p_i^{-T_1}(T_i(u)) = 0 and
            // the right-handed version T_i(u) - p_i^{T_1} p_i^{-T_1} T_i(u) = 0.
            let mut ok = true;
            for i in 2..=n {
                let tiu = vf_apply(cfg, i, &u).expect("index");
                let left = grouplike_weight(cfg, i, -1, &tiu)
                    .neg()
                    .add(&grouplike_weight(cfg, i, -1, &tiu));
                let right = tiu.sub(&grouplike_weight(
                    cfg,
                    i,
                    1,
                    &grouplike_weight(cfg, i, -1, &tiu),
                ));
                if !left.is_zero() || !right.is_zero() {
                    ok = false;
                }
            }
            if ok {
                continue;
            }
        }
        hopf_ops = Some(format!("u = {u}"));
        break;
    }
    report.record(
        "vector-field antipode identities as operators",
        hopf_ops.is_none(),
        || hopf_ops.clone().unwrap(),
    );

    report
}

/// A vector field bundled with its index; `apply` dispatches to
/// [`vf_apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorField {
    pub index: usize,
}

impl VectorField {
    pub fn new(cfg: &ParamConfig, index: usize) -> Result<Self, AlgebraError> {
        cfg.check_index(index)?;
        Ok(VectorField { index })
    }

    pub fn apply(&self, cfg: &ParamConfig, u: &AElement) -> AElement {
        vf_apply(cfg, self.index, u).expect("validated index")
    }

    pub fn parity(&self, cfg: &ParamConfig) -> i64 {
        cfg.parity(self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::normal_form;

    fn c0() -> ParamConfig {
        ParamConfig::new(1, 1, vec![1, 2]).unwrap()
    }

    #[test]
    fn mc_form_grouplike() {
        let cfg = c0();
        let w = mc_form(&cfg, 1).unwrap().expansion;
        // d(a_1) a_1^{-1} = a_1^{-1} d(a_1)
        let expected =
            form_normal_form(&cfg, ParamCoeff::one(2), &[(1, -1, false), (1, 1, true)]).unwrap();
        assert_eq!(w, expected);
    }

    #[test]
    fn mc_form_deformed_generator() {
        let cfg = c0();
        // Pipeline vs closed form is asserted inside mc_form.
        let w = mc_form(&cfg, 2).unwrap().expansion;
        assert!(!w.is_zero());
    }

    #[test]
    fn vector_field_actions() {
        let cfg = c0();
        // T_{a_1}(a_1^2 a_2) = (2 z_1 + z_2) a_1^2 a_2 = 4 a_1^2 a_2
        let u = normal_form(&cfg, ParamCoeff::one(2), &[(1, 2), (2, 1)]).unwrap();
        let got = vf_apply(&cfg, 1, &u).unwrap();
        assert_eq!(got, u.scale(&ParamCoeff::from_integer(2, 4)));

        // T_{a_2}(a_2) = a_1^{z_2} = a_1^2
        let a2 = generator_elem(&cfg, 2, 1).unwrap();
        assert_eq!(
            vf_apply(&cfg, 2, &a2).unwrap(),
            generator_elem(&cfg, 1, 2).unwrap()
        );

        // T_{a_2}(a_1 a_2) = p_2 a_1^3
        let u = normal_form(&cfg, ParamCoeff::one(2), &[(1, 1), (2, 1)]).unwrap();
        let got = vf_apply(&cfg, 2, &u).unwrap();
        let expected = generator_elem(&cfg, 1, 3)
            .unwrap()
            .scale(&ParamCoeff::p_pow(2, 2, 1));
        assert_eq!(got, expected);
    }

    #[test]
    fn mc_form_collapses_at_zero_weight() {
        // z_2 = 0 removes both the grouplike tail and the correction term.
        let cfg = ParamConfig::new(1, 1, vec![1, 0]).unwrap();
        let w = mc_form(&cfg, 2).unwrap().expansion;
        let expected = form_normal_form(&cfg, ParamCoeff::one(2), &[(2, 1, true)]).unwrap();
        assert_eq!(w, expected);
    }

    #[test]
    fn relation_suite_passes() {
        let cfg = c0();
        let report = verify_mc_relations(&cfg, 25, 3);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn vector_field_suite_passes() {
        let cfg = c0();
        let report = verify_t_hopf(&cfg, 25, 9);
        assert!(report.passed(), "{report}");
    }
}
