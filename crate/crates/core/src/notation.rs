//! Text notation for tangles.
//!
//! ```text
//! (3/7)  (5)  (inf)                       rational tangles
//! (1/2, 2/3, -1)                          Montesinos tuple
//! A + B   A *v (1/m)   -A   ( A )         sum, vertical twist, mirror, grouping
//! ```

use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Result, TangleError};
use crate::fraction::{add_horizontal, star_vertical, TangleFraction};
use crate::montesinos::{MontesinosExpr, TrailOp};
use crate::tangle::Tangle;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    Frac(TangleFraction, usize),
    Tuple(Vec<Ast>, usize),
    Sum(Box<Ast>, Box<Ast>, usize),
    Star(Box<Ast>, Box<Ast>, usize),
    Neg(Box<Ast>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub tangle: Tangle,
    pub warnings: Vec<String>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    warnings: Vec<String>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(TangleError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            self.skip_ws();
            let at = self.pos;
            if self.eat("+") {
                lhs = Ast::Sum(Box::new(lhs), Box::new(self.unary()?), at);
            } else if self.eat("*v") {
                lhs = Ast::Star(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat("-") {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.skip_ws();
        if !self.rest().starts_with('(') {
            return self.err("expected '('");
        }
        self.group()
    }

    fn at_number(&mut self) -> bool {
        self.skip_ws();
        let r = self.rest();
        let r = r.strip_prefix('-').unwrap_or(r).trim_start();
        r.starts_with(|c: char| c.is_ascii_digit()) || r.starts_with("inf") || r.starts_with('∞')
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat("-");
        self.skip_ws();
        let digits: &str = {
            let r = self.rest();
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            &r[..end]
        };
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        let Ok(v) = digits.parse::<i64>() else {
            return self.err("integer out of range");
        };
        self.pos += digits.len();
        Ok(if neg { -v } else { v })
    }

    fn number(&mut self) -> Result<TangleFraction> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("inf") || self.eat("∞") {
            return Ok(TangleFraction::INFINITY);
        }
        let n = self.integer()?;
        if !self.eat("/") {
            return Ok(TangleFraction::integer(n));
        }
        let d = self.integer()?;
        if d == 0 {
            self.pos = start;
            return self.err("zero denominator; write (inf) for the infinity tangle");
        }
        if n.gcd(&d) != 1 {
            let f = TangleFraction::new(n, d)?;
            self.warnings
                .push(format!("reduced {n}/{d} to {}", f.to_string().trim_matches(['(', ')'])));
        }
        TangleFraction::new(n, d)
    }

    fn group(&mut self) -> Result<Ast> {
        let open = self.pos;
        self.eat("(");
        let mut items = Vec::new();
        loop {
            let at = self.pos;
            let item = if self.at_number() {
                Ast::Frac(self.number()?, at)
            } else {
                self.expr()?
            };
            items.push(item);
            if self.eat(",") {
                continue;
            }
            if self.eat(")") {
                break;
            }
            return self.err("expected ',' or ')'");
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Ast::Tuple(items, open)
        })
    }
}

fn fail<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(TangleError::Parse {
        pos,
        msg: msg.into(),
    })
}

fn eval(ast: &Ast) -> Result<Tangle> {
    match ast {
        Ast::Frac(f, _) => Ok(Tangle::Rational(*f)),
        Ast::Neg(inner) => Ok(eval(inner)?.mirror()),
        Ast::Tuple(items, pos) => {
            let summands = items
                .iter()
                .map(|a| match eval(a)? {
                    Tangle::Rational(f) => Ok(f),
                    Tangle::Montesinos(_) => fail(*pos, "tuple entries must be rational"),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Tangle::Montesinos(MontesinosExpr::new(summands)))
        }
        Ast::Star(lhs, rhs, pos) => {
            let m = match eval(rhs)? {
                Tangle::Rational(f) if f.num().abs() == 1 && f.den() != 0 => f.num() * f.den(),
                _ => return fail(*pos, "vertical twisting needs a tangle (1/m)"),
            };
            Ok(match eval(lhs)? {
                Tangle::Rational(f) => Tangle::Rational(star_vertical(f, m)),
                Tangle::Montesinos(e) => Tangle::Montesinos(e.star(m)),
            })
        }
        Ast::Sum(lhs, rhs, pos) => match (eval(lhs)?, eval(rhs)?) {
            (Tangle::Rational(a), Tangle::Rational(b)) => Ok(match (a.as_integer(), b.as_integer()) {
                (_, Some(n)) => Tangle::Rational(add_horizontal(a, n)),
                (Some(n), _) => Tangle::Rational(add_horizontal(b, n)),
                _ => Tangle::Montesinos(MontesinosExpr::new(vec![a, b])),
            }),
            (Tangle::Montesinos(e), Tangle::Rational(b)) => match b.as_integer() {
                Some(n) => Ok(Tangle::Montesinos(e.add_twists(n))),
                None if e.trail.is_empty() => {
                    let mut e = e;
                    e.summands.push(b);
                    Ok(Tangle::Montesinos(e))
                }
                None => fail(*pos, "cannot add a rational summand after a trail"),
            },
            (Tangle::Rational(a), Tangle::Montesinos(mut e)) if e.trail.is_empty() => {
                e.summands.insert(0, a);
                Ok(Tangle::Montesinos(e))
            }
            (Tangle::Montesinos(mut a), Tangle::Montesinos(b))
                if a.trail.is_empty() && b.trail.is_empty() =>
            {
                a.summands.extend(b.summands);
                Ok(Tangle::Montesinos(a))
            }
            _ => fail(*pos, "sum is not a generalized Montesinos tangle"),
        },
    }
}

pub fn parse_tangle(src: &str) -> Result<Parsed> {
    let mut p = Parser {
        src,
        pos: 0,
        warnings: Vec::new(),
    };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(Parsed {
        tangle: eval(&ast)?,
        warnings: p.warnings,
    })
}

impl FromStr for Tangle {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self> {
        parse_tangle(s).map(|p| p.tangle)
    }
}

/// Trail op as it is printed, for callers building expressions by hand.
pub fn trail_op_text(op: TrailOp) -> String {
    match op {
        TrailOp::Star(m) => format!("*v (1/{m})"),
        TrailOp::Add(m) => format!("+ ({m})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(n: i64, d: i64) -> TangleFraction {
        TangleFraction::new(n, d).unwrap()
    }

    fn t(s: &str) -> Tangle {
        s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn rationals() {
        assert_eq!(t("(3/7)"), Tangle::Rational(fr(3, 7)));
        assert_eq!(t("(-5)"), Tangle::integer(-5));
        assert_eq!(t("(inf)"), Tangle::Rational(TangleFraction::INFINITY));
        assert_eq!(t("(1/-2)"), Tangle::Rational(fr(-1, 2)));
        assert_eq!(t("(2/3) + (-1)"), Tangle::Rational(fr(-1, 3)));
        assert_eq!(t("(inf) *v (1/5)"), Tangle::Rational(fr(1, 5)));
        assert_eq!(t("-(3/7)"), Tangle::Rational(fr(-3, 7)));
        assert_eq!(t("((3/7))"), Tangle::Rational(fr(3, 7)));
    }

    #[test]
    fn montesinos() {
        let e = MontesinosExpr::new(vec![fr(1, 2), fr(2, 3), fr(-1, 1)]);
        assert_eq!(t("(1/2, 2/3, -1)"), Tangle::Montesinos(e));
        let e = MontesinosExpr::new(vec![fr(1, 2), fr(2, 3)]).star(-2);
        assert_eq!(t("(1/2, 2/3) *v (1/-2)"), Tangle::Montesinos(e.clone()));
        assert_eq!(t("(1/2) + (2/3) *v (1/-2)"), Tangle::Montesinos(e.clone()));
        assert_eq!(t("-((1/2, 2/3) *v (1/-2))"), Tangle::Montesinos(e.mirror()));
        let m = MontesinosExpr::new(vec![fr(-1, 2), fr(-2, 3)]).star(-2);
        assert_eq!(t("-(1/2, 2/3) *v (1/-2)"), Tangle::Montesinos(m));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "(3/7)",
            "(-4)",
            "(inf)",
            "(1/2, 2/3, -1)",
            "(1/2, -1/3) *v (1/-2)",
            "((1/2, 2/3) *v (1/-2)) + (3)",
            "(((1/2, 2/3) + (-1)) *v (1/3)) + (2)",
        ] {
            let x = t(s);
            assert_eq!(x.to_string(), s);
            assert_eq!(t(&x.to_string()), x);
        }
    }

    #[test]
    fn reduction_warns() {
        let p = parse_tangle("(2/4)").unwrap();
        assert_eq!(p.tangle, Tangle::Rational(fr(1, 2)));
        assert_eq!(p.warnings, vec!["reduced 2/4 to 1/2".to_string()]);
        assert!(parse_tangle("(1/2)").unwrap().warnings.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_tangle("(1/0)"), Err(TangleError::Parse { pos: 1, .. })));
        assert!(matches!(parse_tangle("(1/2"), Err(TangleError::Parse { pos: 4, .. })));
        assert!(matches!(parse_tangle("3/7"), Err(TangleError::Parse { pos: 0, .. })));
        assert!(matches!(parse_tangle("(1/2) junk"), Err(TangleError::Parse { pos: 6, .. })));
        assert!(parse_tangle("(1/2) *v (2/3)").is_err());
        assert!(parse_tangle("((1/2, 1/3) *v (1/2), 1/5)").is_err());
    }
}
