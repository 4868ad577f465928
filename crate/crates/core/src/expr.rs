//! Text form of product expressions, e.g. `q^5*Q(2,13)*Q(3,13)/P(13,13)^2`.
//!
//! ```text
//! expr    := ['-'] factor (('*' | '/') factor)*
//! factor  := atom ['^' int]
//! atom    := uint | 'q' ['^' int]
//!          | 'T(' sign ',' int ',' int ')'      ⟨±q^x; q^y⟩
//!          | 'Q(' int ',' int ')'               Q(q^x, q^y)
//!          | 'P(' [sign ','] int ',' int ')'    (±q^a; q^b)∞
//!          | 'W(' mono ',' mono ',' int ')'     W(±q^x, ±q^y; q^z)
//! mono    := [sign] (int | 'q' ['^' int])
//! ```
//!
//! Positions in errors are 0-based character offsets.

use crate::error::{Error, Result};
use crate::products::{Monomial, PochhammerSpec, QuintupleSpec, Sign, TripleSpec, WinquistSpec};
use crate::term::{Factor, Term};

pub fn parse_expression(input: &str) -> Result<Term> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let term = p.expression()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(term)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

/// One parsed atom before it is folded into the term.
enum Atom {
    Coeff(i64),
    Shift(i64),
    Factor(Factor),
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            })
        }
    }

    fn sign(&mut self) -> Option<Sign> {
        if self.eat('+') {
            Some(Sign::Plus)
        } else if self.eat('-') {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("integer {text} out of range"),
        })
    }

    fn int(&mut self) -> Result<i64> {
        match self.sign() {
            Some(Sign::Minus) => Ok(-self.uint()?),
            _ => self.uint(),
        }
    }

    /// `q` already consumed; reads an optional `^int`.
    fn q_exponent(&mut self) -> Result<i64> {
        if self.eat('^') {
            self.int()
        } else {
            Ok(1)
        }
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let sign = self.sign().unwrap_or(Sign::Plus);
        let exp = if self.eat('q') {
            self.q_exponent()?
        } else {
            self.int()?
        };
        Ok(Monomial::new(sign, exp))
    }

    fn sign_arg(&mut self) -> Result<Sign> {
        self.sign().ok_or_else(|| self.error("expected '+' or '-'"))
    }

    fn expression(&mut self) -> Result<Term> {
        let mut term = Term::new(1, 0, Vec::new());
        if self.eat('-') {
            term.coeff = -1;
        }
        let mut divide = false;
        loop {
            let at = self.pos;
            let atom = self.atom()?;
            let power = if self.eat('^') { self.int()? } else { 1 };
            let power = if divide { -power } else { power };
            self.fold(&mut term, atom, power, at)?;
            if self.eat('*') {
                divide = false;
            } else if self.eat('/') {
                divide = true;
            } else {
                return Ok(term);
            }
        }
    }

    fn fold(&self, term: &mut Term, atom: Atom, power: i64, at: usize) -> Result<()> {
        let overflow = || Error::Parse {
            pos: at,
            msg: "exponent out of range".into(),
        };
        match atom {
            Atom::Shift(e) => {
                let s = e.checked_mul(power).ok_or_else(overflow)?;
                term.shift = term.shift.checked_add(s).ok_or_else(overflow)?;
            }
            Atom::Coeff(c) => {
                if power < 0 && c != 1 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("cannot divide by the integer {c}"),
                    });
                }
                let k = u32::try_from(power.max(0)).map_err(|_| overflow())?;
                let v = c.checked_pow(k).ok_or_else(overflow)?;
                term.coeff = term.coeff.checked_mul(v).ok_or_else(overflow)?;
            }
            Atom::Factor(f) => {
                let k = i32::try_from(power).map_err(|_| overflow())?;
                term.factors.push((f, k));
            }
        }
        Ok(())
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = self.pos;
        let at_spec = |r: Result<Factor>| {
            r.map(Atom::Factor).map_err(|e| match e {
                Error::Usage(msg) => Error::Parse { pos: start, msg },
                other => other,
            })
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Atom::Coeff(self.uint()?)),
            Some('q') => {
                self.pos += 1;
                Ok(Atom::Shift(self.q_exponent()?))
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let sign = self.sign_arg()?;
                self.expect(',')?;
                let x = self.int()?;
                self.expect(',')?;
                let y = self.int()?;
                self.expect(')')?;
                at_spec(TripleSpec::new(sign, x, y).map(Factor::Triple))
            }
            Some('Q') => {
                self.pos += 1;
                self.expect('(')?;
                let x = self.int()?;
                self.expect(',')?;
                let y = self.int()?;
                self.expect(')')?;
                at_spec(QuintupleSpec::new(x, y).map(Factor::Quintuple))
            }
            Some('P') => {
                self.pos += 1;
                self.expect('(')?;
                // `P(-,a,b)` versus `P(-3,b)`.
                let save = self.pos;
                let sign = match self.sign() {
                    Some(s) if self.eat(',') => s,
                    _ => {
                        self.pos = save;
                        Sign::Plus
                    }
                };
                let a = self.int()?;
                self.expect(',')?;
                let b = self.int()?;
                self.expect(')')?;
                at_spec(PochhammerSpec::new(sign, a, b).map(Factor::Pochhammer))
            }
            Some('W') => {
                self.pos += 1;
                self.expect('(')?;
                let a = self.monomial()?;
                self.expect(',')?;
                let b = self.monomial()?;
                self.expect(',')?;
                let y = self.int()?;
                self.expect(')')?;
                at_spec(WinquistSpec::new(a, b, y).map(Factor::Winquist))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
