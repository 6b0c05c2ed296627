//! Concrete syntax for linear forms `a_1 x1 + ... + a_5 x5` with Eisenstein
//! integer coefficients, where `w` stands for the cube root of unity.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?        -- only `w` may be raised to a power
//! atom   := digits | 'w' | 'x' digit | '(' expr ')'
//! ```

use crate::arith::{EisensteinInt, DIM};
use crate::error::{Error, Result};

use super::LinearForm;

/// Affine combination `c + sum a_i x_i` built up while parsing.
#[derive(Clone)]
struct Affine {
    constant: EisensteinInt,
    coeffs: [EisensteinInt; DIM],
}

impl Affine {
    fn constant(c: EisensteinInt) -> Self {
        Self {
            constant: c,
            coeffs: std::array::from_fn(|_| EisensteinInt::zero()),
        }
    }

    fn variable(k: usize) -> Self {
        let mut a = Self::constant(EisensteinInt::zero());
        a.coeffs[k] = EisensteinInt::one();
        a
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(EisensteinInt::is_zero)
    }

    fn add(&self, o: &Self, sign: i64) -> Self {
        let s = EisensteinInt::from(sign);
        Self {
            constant: &self.constant + &(&s * &o.constant),
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &(&s * &o.coeffs[k])),
        }
    }

    fn scale(&self, c: &EisensteinInt) -> Self {
        Self {
            constant: c * &self.constant,
            coeffs: std::array::from_fn(|k| c * &self.coeffs[k]),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("nonempty digit string"))
    }

    fn expr(&mut self) -> Result<Affine> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, if c == b'+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Affine> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            acc = match (acc.is_constant(), rhs.is_constant()) {
                (true, _) => rhs.scale(&acc.constant),
                (false, true) => acc.scale(&rhs.constant),
                (false, false) => {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "product of two variables".into(),
                    })
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Affine> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.scale(&EisensteinInt::from(-1)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Affine> {
        let is_w = self.peek() == Some(b'w');
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        if !is_w {
            return self.err("only w may be raised to a power");
        }
        self.pos += 1;
        let e = self.digits()?;
        let k = (e % 3u32).to_string().parse::<i64>().expect("residue");
        Ok(Affine::constant(EisensteinInt::alpha_pow(k)))
    }

    fn atom(&mut self) -> Result<Affine> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Affine::constant(EisensteinInt::alpha()))
            }
            Some(b'x') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(d @ b'1'..=b'5') => {
                        self.pos += 1;
                        if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                            return self.err("variables are x1..x5");
                        }
                        Ok(Affine::variable((d - b'1') as usize))
                    }
                    _ => self.err("variables are x1..x5"),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Affine::constant(EisensteinInt::from(self.digits()?))),
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a linear form such as `x4 - (w^2)*x5` or `(1-w)*x1`.
pub fn parse_linear_form(text: &str) -> Result<LinearForm> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    if !value.constant.is_zero() {
        return Err(Error::Parse {
            pos: 0,
            msg: "form has a nonzero constant term".into(),
        });
    }
    Ok(LinearForm::new(value.coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn examples() {
        let f = parse_linear_form("(1-w)*x1").unwrap();
        assert_eq!(f.coeffs, [e(1, -1), e(0, 0), e(0, 0), e(0, 0), e(0, 0)]);
        let f = parse_linear_form("x4 - (w^2)*x5").unwrap();
        assert_eq!(f.coeffs[3], e(1, 0));
        assert_eq!(f.coeffs[4], e(1, 1));
        let f = parse_linear_form("x1 - (1+(1-w)*2)*x2").unwrap();
        assert_eq!(f.coeffs[1], -e(3, -2));
        let f = parse_linear_form(" 2 * x3*w^4 + -x3 ").unwrap();
        assert_eq!(f.coeffs[2], e(-1, 2));
    }

    #[test]
    fn errors() {
        for bad in ["x6", "x1*x2", "x1 + 1", "2^3*x1", "(x1", "x1 )", "x1 + y", "", "x12"] {
            assert!(matches!(parse_linear_form(bad), Err(Error::Parse { .. })), "{bad}");
        }
        match parse_linear_form("x1 + x7") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "(1-w)*x1",
            "x4 - (w^2)*x5",
            "x1 - (1+(1-w)*2)*x2",
            "-x2 + 3*w*x5",
            "0",
            "-w*x1 - x3",
        ] {
            let f = parse_linear_form(s).unwrap();
            assert_eq!(parse_linear_form(&f.to_string()).unwrap(), f, "{s} -> {f}");
        }
    }
}
