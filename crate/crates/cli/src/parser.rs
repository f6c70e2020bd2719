//! Lexer and recursive-descent parser for the expression language.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := ['-'] tensor (('+' | '-') tensor)*
//! tensor  := term ('(x)' term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' int)?
//! atom    := rational | symbol | call | '(' expr ')'
//! call    := name '(' ... ')'      d, S, Delta, eps, partial, T, omega
//! ```
//!
//! `(x)` is the tensor product and binds looser than `*`. Whitespace is
//! insignificant. Negative exponents are legal only on the invertible
//! atoms `a1`, `g`, and the parameters `p_i`.

use std::fmt;

use qsuperspace::coeff::BigInt;
use qsuperspace::Rational;

use crate::ast::Expr;
use crate::session::Algebra;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: {}",
            self.line, self.col, self.msg
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    TensorOp,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let mut push = |tok: Tok| {
            out.push(Spanned {
                tok,
                line: tline,
                col: tcol,
            })
        };
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '+' => push(Tok::Plus),
            '-' => push(Tok::Minus),
            '*' => push(Tok::Star),
            '^' => push(Tok::Caret),
            '/' => push(Tok::Slash),
            ',' => push(Tok::Comma),
            ')' => push(Tok::RParen),
            '(' => {
                // "(x)" is the tensor operator; "(x1..." is a parenthesis.
                if i + 2 < chars.len() && chars[i + 1] == 'x' && chars[i + 2] == ')' {
                    push(Tok::TensorOp);
                    i += 3;
                    col += 3;
                    continue;
                }
                push(Tok::LParen);
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                    col += 1;
                }
                out.push(Spanned {
                    tok: Tok::Int(chars[start..i].iter().collect()),
                    line: tline,
                    col: tcol,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                    col += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: tline,
                    col: tcol,
                });
                continue;
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
        col += 1;
    }
    Ok(out)
}

pub struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    algebra: Algebra,
    max_index: usize,
    input_end: (usize, usize),
    _marker: std::marker::PhantomData<&'a ()>,
}

impl<'a> Parser<'a> {
    pub fn new(input: &'a str, algebra: Algebra, max_index: usize) -> Result<Self, ParseError> {
        if input.trim().is_empty() {
            return Err(ParseError {
                line: 1,
                col: 1,
                msg: "empty expression".into(),
            });
        }
        let toks = lex(input)?;
        let input_end = toks.last().map(|t| (t.line, t.col + 1)).unwrap_or((1, 1));
        Ok(Parser {
            toks,
            pos: 0,
            algebra,
            max_index,
            input_end,
            _marker: std::marker::PhantomData,
        })
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.input_end)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    pub fn parse(mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        terms.push((neg, self.tensor()?));
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.tensor()?;
                    terms.push((false, t));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.tensor()?;
                    terms.push((true, t));
                }
                _ => break,
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        while self.peek() == Some(&Tok::TensorOp) {
            self.pos += 1;
            let rhs = self.term()?;
            e = Expr::Tensor(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(Expr::Product(factors))
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(s)) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| self.err(format!("integer '{s}' out of range")))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(atom);
        }
        self.pos += 1;
        let e = self.signed_int()?;
        self.apply_power(atom, e)
    }

    fn apply_power(&self, atom: Expr, e: i64) -> Result<Expr, ParseError> {
        match atom {
            Expr::Gen { index, power } => {
                let power = power * e;
                if power < 0 && index != 1 {
                    return Err(self.err(format!(
                        "illegal negative power on non-invertible generator index {index}"
                    )));
                }
                if power < 0 && self.algebra == Algebra::M {
                    return Err(self.err("illegal negative power: x generators are not invertible"));
                }
                Ok(Expr::Gen { index, power })
            }
            Expr::Grouplike { power } => Ok(Expr::Grouplike { power: power * e }),
            Expr::Param { hlog, index, power } => {
                if hlog && e < 0 {
                    return Err(self.err("illegal negative power on h symbols"));
                }
                Ok(Expr::Param {
                    hlog,
                    index,
                    power: power * e,
                })
            }
            other => {
                if e < 0 {
                    Err(self.err("illegal negative power on a compound expression"))
                } else {
                    Ok(Expr::Power(Box::new(other), e as u32))
                }
            }
        }
    }

    fn index_arg(&mut self) -> Result<usize, ParseError> {
        match self.bump() {
            Some(Tok::Int(s)) => {
                let idx: usize = s
                    .parse()
                    .map_err(|_| self.err(format!("index '{s}' out of range")))?;
                if idx == 0 || idx > self.max_index {
                    return Err(
                        self.err(format!("index {idx} out of range 1..={}", self.max_index))
                    );
                }
                Ok(idx)
            }
            _ => Err(self.err("expected a generator index")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            Some(Tok::Int(s)) => {
                let num: BigInt = s.parse().expect("lexed digits");
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            let den: BigInt = d.parse().expect("lexed digits");
                            if den == BigInt::from(0) {
                                return Err(self.err("zero denominator"));
                            }
                            Ok(Expr::Rational(Rational::new(num, den)))
                        }
                        _ => Err(self.err("expected a denominator")),
                    }
                } else {
                    Ok(Expr::Rational(Rational::from_integer(num)))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => self.ident(name),
            Some(other) => Err(ParseError {
                line: self.toks[self.pos - 1].line,
                col: self.toks[self.pos - 1].col,
                msg: format!("unexpected token {other:?}"),
            }),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ident(&mut self, name: String) -> Result<Expr, ParseError> {
        // Calls first.
        match name.as_str() {
            "d" | "S" | "Delta" | "eps" => {
                self.expect(Tok::LParen, "'('")?;
                let arg = Box::new(self.expr()?);
                self.expect(Tok::RParen, "')'")?;
                return Ok(match name.as_str() {
                    "d" => Expr::Diff(arg),
                    "S" => Expr::Antipode(arg),
                    "Delta" => Expr::Coproduct(arg),
                    _ => Expr::Counit(arg),
                });
            }
            "partial" | "T" => {
                self.expect(Tok::LParen, "'('")?;
                let index = self.index_arg()?;
                self.expect(Tok::Comma, "','")?;
                let arg = Box::new(self.expr()?);
                self.expect(Tok::RParen, "')'")?;
                return Ok(if name == "partial" {
                    Expr::Partial { index, arg }
                } else {
                    Expr::VectorField { index, arg }
                });
            }
            "omega" => {
                self.expect(Tok::LParen, "'('")?;
                let index = self.index_arg()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Expr::Omega { index });
            }
            "g" => {
                if self.algebra != Algebra::M {
                    return Err(self.prev_err(
                        "unknown symbol 'g' (the grouplike g lives in the logarithmic extension; pass --algebra M)",
                    ));
                }
                return Ok(Expr::Grouplike { power: 1 });
            }
            _ => {}
        }

        // Indexed symbols: a<i>, x<i>, p<i>, h<i>.
        let (head, digits) = name.split_at(1);
        if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
            let index: usize = digits
                .parse()
                .map_err(|_| self.prev_err(format!("index '{digits}' out of range")))?;
            let check_index = |p: &Self| -> Result<(), ParseError> {
                if index == 0 || index > p.max_index {
                    Err(p.prev_err(format!("index {index} out of range 1..={}", p.max_index)))
                } else {
                    Ok(())
                }
            };
            match head {
                "a" if self.algebra == Algebra::A => {
                    check_index(self)?;
                    return Ok(Expr::Gen { index, power: 1 });
                }
                "x" if self.algebra == Algebra::M => {
                    check_index(self)?;
                    return Ok(Expr::Gen { index, power: 1 });
                }
                "a" | "x" => {
                    return Err(self.prev_err(format!(
                        "unknown symbol '{name}' in algebra {} (did you mean the other --algebra?)",
                        self.algebra
                    )))
                }
                "p" => {
                    check_index(self)?;
                    return Ok(Expr::Param {
                        hlog: false,
                        index,
                        power: 1,
                    });
                }
                "h" => {
                    check_index(self)?;
                    return Ok(Expr::Param {
                        hlog: true,
                        index,
                        power: 1,
                    });
                }
                _ => {}
            }
        }
        Err(self.prev_err(format!("unknown symbol '{name}'")))
    }

    fn prev_err(&self, msg: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos - 1];
        ParseError {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        }
    }
}

pub fn parse(input: &str, algebra: Algebra, max_index: usize) -> Result<Expr, ParseError> {
    Parser::new(input, algebra, max_index)?.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_three_factors() {
        let e = parse("p2^-1 * a1 * a2", Algebra::A, 2).unwrap();
        match e {
            Expr::Product(fs) => assert_eq!(fs.len(), 3),
            other => panic!("unexpected AST {other:?}"),
        }
    }

    #[test]
    fn differential_wrapper() {
        let e = parse("d(a1*a2)", Algebra::A, 2).unwrap();
        assert!(matches!(e, Expr::Diff(_)));
    }

    #[test]
    fn unknown_symbol_is_rejected() {
        let err = parse("a0", Algebra::A, 2).unwrap_err();
        assert!(err.msg.contains("out of range"), "{err}");
        let err = parse("b1", Algebra::A, 2).unwrap_err();
        assert!(err.msg.contains("unknown symbol"), "{err}");
        let err = parse("x1", Algebra::A, 2).unwrap_err();
        assert!(err.msg.contains("unknown symbol"), "{err}");
    }

    #[test]
    fn negative_powers_restricted() {
        assert!(parse("a1^-2", Algebra::A, 2).is_ok());
        let err = parse("a2^-1", Algebra::A, 2).unwrap_err();
        assert!(err.msg.contains("illegal negative power"), "{err}");
        assert!(parse("g^-3", Algebra::M, 2).is_ok());
        let err = parse("x1^-1", Algebra::M, 2).unwrap_err();
        assert!(err.msg.contains("illegal negative power"), "{err}");
    }

    #[test]
    fn tensor_binds_looser_than_star() {
        let e = parse("a1*a2 (x) a1 + a2 (x) a1", Algebra::A, 2).unwrap();
        match e {
            Expr::Sum(terms) => {
                assert_eq!(terms.len(), 2);
                assert!(matches!(terms[0].1, Expr::Tensor(_, _)));
            }
            other => panic!("unexpected AST {other:?}"),
        }
    }

    #[test]
    fn error_positions_are_reported() {
        let err = parse("a1 *", Algebra::A, 2).unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
    }
}
