//! Abstract syntax for the expression language.

use qsuperspace::Rational;

/// Which generator namespace an expression lives in is decided by the
/// session's algebra selector; the parser rejects symbols from the other
/// namespace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    /// `p_i` or, with `hlog = true`, `h_i`; `power` collects an attached
    /// integer exponent (`p2^-1`).
    Param {
        hlog: bool,
        index: usize,
        power: i64,
    },
    /// `a_i` / `x_i` with an attached exponent; negative only for index 1
    /// in the original superspace (`a1^-2`).
    Gen {
        index: usize,
        power: i64,
    },
    /// `g^s`, the grouplike of the logarithmic extension.
    Grouplike {
        power: i64,
    },
    /// `d(e)`.
    Diff(Box<Expr>),
    /// `e1 (x) e2`.
    Tensor(Box<Expr>, Box<Expr>),
    Product(Vec<Expr>),
    /// Terms with explicit signs.
    Sum(Vec<(bool, Expr)>),
    /// General power of a parenthesized expression (nonnegative).
    Power(Box<Expr>, u32),
    Partial {
        index: usize,
        arg: Box<Expr>,
    },
    VectorField {
        index: usize,
        arg: Box<Expr>,
    },
    Antipode(Box<Expr>),
    Coproduct(Box<Expr>),
    Counit(Box<Expr>),
    Omega {
        index: usize,
    },
}
