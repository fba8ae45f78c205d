use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Parses `text` as a polynomial in `vars`.
///
/// ```text
/// poly   := term (("+" | "-") term)*
/// term   := [sign] [integer] factor*      (factors joined by "*" or juxtaposed)
/// factor := var ["^" integer]
/// ```
pub fn parse_poly(vars: &[String], text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        vars,
        src: text,
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let mut out = Polynomial::zero(vars.len());
    let (c, m) = p.term()?;
    out.add_term(&c, &m);
    loop {
        p.skip_ws();
        let neg = match p.peek() {
            None => break,
            Some('+') => false,
            Some('-') => true,
            Some(_) => return Err(p.error("expected `+` or `-`")),
        };
        p.bump();
        let (c, m) = p.term()?;
        out.add_term(&if neg { -c } else { c }, &m);
    }
    Ok(out)
}

/// Parses a power product such as `x^2y` or `1`.
pub fn parse_monomial(vars: &[String], text: &str) -> Result<Monomial> {
    let f = parse_poly(vars, text)?;
    let mut terms = f.terms();
    match (terms.next(), terms.next()) {
        (Some(t), None) if t.coeff == BigInt::from(1) => Ok(t.monomial),
        _ => Err(Error::Syntax {
            position: 0,
            message: format!("`{text}` is not a monomial"),
        }),
    }
}

struct Parser<'a> {
    vars: &'a [String],
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        self.skip_ws();
        let mut coeff = BigInt::from(1);
        while let Some(s @ ('+' | '-')) = self.peek() {
            if s == '-' {
                coeff = -coeff;
            }
            self.bump();
            self.skip_ws();
        }
        let start = self.pos;
        let mut seen_any = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let d = self.digits();
            coeff *= d.parse::<BigInt>().expect("digits");
            seen_any = true;
        }
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            self.skip_ws();
            let save = self.pos;
            if self.peek() == Some('*') {
                if !seen_any {
                    return Err(self.error("`*` without a left operand"));
                }
                self.bump();
                self.skip_ws();
                if !self.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
                    return Err(self.error("expected a variable after `*`"));
                }
            }
            match self.peek() {
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let (i, e) = self.factor()?;
                    exps[i] = exps[i]
                        .checked_add(e)
                        .ok_or(Error::ExponentOverflow { position: save })?;
                    seen_any = true;
                }
                Some(c) if c.is_ascii_digit() => {
                    return Err(self.error("integer must come first in a term"));
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if !seen_any {
            return Err(Error::Syntax {
                position: start,
                message: "expected a term".into(),
            });
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let at = self.pos;
        let rest = self.rest();
        let best = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty() && rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len());
        let Some((i, v)) = best else {
            let name: String = rest
                .chars()
                .take_while(|c| c.is_alphanumeric() || *c == '_')
                .collect();
            return Err(Error::UnknownVariable { name, position: at });
        };
        self.pos += v.len();
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok((i, 1));
        }
        self.bump();
        self.skip_ws();
        let epos = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error("expected an exponent after `^`"));
        }
        let e: BigInt = d.parse().expect("digits");
        let e = u32::try_from(e).map_err(|_| Error::ExponentOverflow { position: epos })?;
        Ok((i, e))
    }
}

/// Integer literal with optional sign.
pub fn parse_integer(text: &str) -> Result<BigInt> {
    let t = text.trim();
    t.parse::<BigInt>().map_err(|_| Error::Syntax {
        position: 0,
        message: format!("`{t}` is not an integer"),
    })
}
