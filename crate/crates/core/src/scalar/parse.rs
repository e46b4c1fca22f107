//! Literal grammar:
//!
//! ```text
//! scalar := sint | sint "/" uint | "(" sint (("+"|"-") uint "*" "sqrt(" uint ")")? ")" "/" uint
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{QuadScalar, ScalarError};

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ScalarError {
        ScalarError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn eat(&mut self, token: &str) -> Result<(), ScalarError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn uint(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits parse"))
    }

    fn sint(&mut self) -> Result<BigInt, ScalarError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.uint()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.uint()
            }
            _ => self.uint(),
        }
    }

    fn denominator(&mut self) -> Result<BigInt, ScalarError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let d = self.uint()?;
        if d.is_zero() {
            return Err(ScalarError::ZeroDenominator { position: at });
        }
        Ok(d)
    }
}

/// Parses a scalar literal. When `field_radicand` is given and the literal
/// carries a square root, the (square-free reduced) radicands must agree.
pub fn parse_scalar(text: &str, field_radicand: Option<u64>) -> Result<QuadScalar, ScalarError> {
    let mut cur = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let value = if cur.peek() == Some(b'(') {
        cur.pos += 1;
        let a = cur.sint()?;
        let mut b = BigInt::zero();
        let mut radicand = 0u64;
        if let Some(op @ (b'+' | b'-')) = cur.peek() {
            cur.pos += 1;
            let coeff = cur.uint()?;
            cur.eat("*")?;
            cur.eat("sqrt(")?;
            let at = cur.pos;
            radicand = cur.uint()?.to_u64().ok_or(ScalarError::Syntax {
                position: at,
                message: "radicand too large".into(),
            })?;
            cur.eat(")")?;
            b = if op == b'-' { -coeff } else { coeff };
        }
        cur.eat(")")?;
        cur.eat("/")?;
        let den = cur.denominator()?;
        let q = QuadScalar::new(
            BigRational::new(a, den.clone()),
            BigRational::new(b, den),
            radicand,
        );
        if let Some(expected) = field_radicand {
            let found = super::rational::split_square(radicand).1;
            if radicand != 0 && found != 1 && found != super::rational::split_square(expected).1 {
                return Err(ScalarError::RadicandMismatch { found, expected });
            }
        }
        q
    } else {
        let num = cur.sint()?;
        if cur.peek() == Some(b'/') {
            cur.pos += 1;
            let den = cur.denominator()?;
            QuadScalar::rational(BigRational::new(num, den))
        } else {
            QuadScalar::rational(BigRational::from_integer(num))
        }
    };
    cur.skip_ws();
    if cur.pos != cur.text.len() {
        return Err(cur.error("trailing input"));
    }
    Ok(value)
}

impl std::str::FromStr for QuadScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn golden_literal() {
        let x = parse_scalar("(3+1*sqrt(5))/2", None).unwrap();
        assert_eq!(x.a(), &r(3, 2));
        assert_eq!(x.b(), &r(1, 2));
        assert_eq!(x.radicand(), 5);
    }

    #[test]
    fn zero_literal() {
        let x = parse_scalar("0", None).unwrap();
        assert!(x.is_rational());
        assert_eq!(x.a(), &r(0, 1));
    }

    #[test]
    fn reduced_by_gcd() {
        let x = parse_scalar("(4-2*sqrt(3))/2", Some(3)).unwrap();
        assert_eq!(x.a(), &r(2, 1));
        assert_eq!(x.b(), &r(-1, 1));
        assert_eq!(x.radicand(), 3);
        assert_eq!(x.to_string(), "(2-1*sqrt(3))/1");
    }

    #[test]
    fn whitespace_tolerated() {
        let x = parse_scalar("  ( 1 + 3 * sqrt( 13 ) ) / 2 ", None).unwrap();
        assert_eq!(x, parse_scalar("(1+3*sqrt(13))/2", None).unwrap());
        assert_eq!(parse_scalar(" -3 / 4 ", None).unwrap().to_string(), "-3/4");
    }

    #[test]
    fn errors_report_position() {
        match parse_scalar("(1+2*sqr(5))/2", None) {
            Err(ScalarError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_scalar("3/0", None),
            Err(ScalarError::ZeroDenominator { position: 2 })
        ));
        assert!(matches!(
            parse_scalar("(1+1*sqrt(5))/2", Some(3)),
            Err(ScalarError::RadicandMismatch { found: 5, expected: 3 })
        ));
        assert!(matches!(parse_scalar("1 2", None), Err(ScalarError::Syntax { .. })));
        assert!(matches!(parse_scalar("", None), Err(ScalarError::Syntax { .. })));
    }

    #[test]
    fn non_square_free_radicand_matches_its_field() {
        let x = parse_scalar("(0+1*sqrt(12))/1", Some(3)).unwrap();
        assert_eq!(x, QuadScalar::sqrt_int(12));
        assert_eq!(x.radicand(), 3);
    }
}
