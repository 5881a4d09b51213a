//! Text forms of ideals and substitutions accepted on the command line.
//!
//! ```text
//! ideal   := "gens:" mono ("," mono)*  |  power ("*" power)*
//! power   := "I(" [uint ("," uint)*] ")" ["^" uint]
//! mono    := factor ("*"? factor)*          factor := ("x" | "y") ["^" uint]
//! subst   := ("x" | "y") "->" poly           e.g. x->x+t*y^2
//! ```

use crate::error::{Error, Result};
use crate::kernel::{Characteristic, MultiPoly, Var};
use crate::staircase::{Staircase, StepSeq};

const MAX_EXPONENT: u32 = 4096;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { src: s.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<u32>() {
            Ok(v) if v <= MAX_EXPONENT => Ok(v),
            _ => Err(Error::Parse { pos: start, msg: format!("integer {text} is larger than {MAX_EXPONENT}") }),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }
}

/// Parses an ideal in step form, as a product of powers, or by monomial generators.
pub fn parse_ideal(s: &str) -> Result<Staircase> {
    let mut c = Cursor::new(s);
    let out = if c.keyword("gens:") { gens(&mut c)? } else { product(&mut c)? };
    if !c.at_end() {
        return Err(c.err("unexpected trailing input"));
    }
    Ok(out)
}

fn product(c: &mut Cursor) -> Result<Staircase> {
    let mut acc = power(c)?;
    while c.eat(b'*') {
        let rhs = power(c)?;
        check_size(c, acc.colength().saturating_mul(4).saturating_add(rhs.colength()))?;
        acc = acc.multiply(&rhs);
    }
    Ok(acc)
}

/// Keeps products and powers small enough to expand.
fn check_size(c: &Cursor, estimate: u64) -> Result<()> {
    if estimate > 1 << 20 {
        return Err(c.err("ideal is too large to expand"));
    }
    Ok(())
}

fn power(c: &mut Cursor) -> Result<Staircase> {
    let start = {
        c.skip_ws();
        c.pos
    };
    if !c.keyword("I") {
        return Err(c.err("expected 'I(' or 'gens:'"));
    }
    c.expect(b'(')?;
    let mut steps = Vec::new();
    if c.peek() != Some(b')') {
        steps.push(c.uint()?);
        while c.eat(b',') {
            steps.push(c.uint()?);
        }
    }
    c.expect(b')')?;
    if steps.iter().all(|&v| v == 0) {
        return Err(Error::Parse { pos: start, msg: "the unit ideal is not allowed".into() });
    }
    let base = Staircase::from_steps(&StepSeq(steps));
    if c.eat(b'^') {
        let e = c.uint()?;
        if e == 0 {
            return Err(c.err("zeroth power is the unit ideal"));
        }
        check_size(c, base.colength().saturating_mul(e as u64).saturating_mul(e as u64))?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn monomial(c: &mut Cursor) -> Result<(u32, u32)> {
    let mut e = (0u32, 0u32);
    let mut any = false;
    loop {
        let v = match c.peek() {
            Some(b'x') => 0,
            Some(b'y') => 1,
            Some(b'1') if !any => {
                return Err(c.err("the unit ideal is not allowed"));
            }
            _ if any => break,
            _ => return Err(c.err("expected a monomial in x and y")),
        };
        c.pos += 1;
        let k = if c.eat(b'^') { c.uint()? } else { 1 };
        let slot = if v == 0 { &mut e.0 } else { &mut e.1 };
        *slot = slot.saturating_add(k);
        if *slot > MAX_EXPONENT {
            return Err(c.err("exponent too large"));
        }
        any = true;
        let save = c.pos;
        if c.eat(b'*') && !matches!(c.peek(), Some(b'x' | b'y')) {
            c.pos = save;
            break;
        }
    }
    if e == (0, 0) {
        return Err(c.err("the unit ideal is not allowed"));
    }
    Ok(e)
}

fn gens(c: &mut Cursor) -> Result<Staircase> {
    let mut ms = vec![monomial(c)?];
    while c.eat(b',') {
        ms.push(monomial(c)?);
    }
    Staircase::from_monomials(&ms).map_err(|e| match e {
        Error::Domain(msg) => c.err(msg),
        other => other,
    })
}

/// An elementary substitution `x_var ↦ x_var + t·h`, with `h` a monomial in the other variable
/// or in both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    /// 0 for `x`, 1 for `y`.
    pub var: usize,
    /// Exponents of `h` in `(x, y)`.
    pub h: [u32; 2],
}

pub fn parse_substitution(s: &str, ch: Characteristic) -> Result<Substitution> {
    let mut c = Cursor::new(s);
    let var = match c.peek() {
        Some(b'x') => 0,
        Some(b'y') => 1,
        _ => return Err(c.err("expected 'x' or 'y' before '->'")),
    };
    c.pos += 1;
    if !c.keyword("->") {
        return Err(c.err("expected '->'"));
    }
    let offset = c.pos;
    let rhs = MultiPoly::parse(ch, &s[offset..]).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
        other => other,
    })?;
    let moving = if var == 0 { Var::X } else { Var::Y };
    let rest = &rhs - &MultiPoly::var(ch, moving);
    let bad = || Error::Parse { pos: offset, msg: "right-hand side must be the variable plus t times a monomial".into() };
    if rest.num_terms() != 1 {
        return Err(bad());
    }
    let (e, coeff) = rest.terms().next().expect("one term");
    let only_xyt = [Var::A, Var::B, Var::C].iter().all(|v| e[v.index()] == 0);
    if !only_xyt || e[Var::T.index()] != 1 || !coeff.is_one() {
        return Err(bad());
    }
    let h = [e[Var::X.index()] as u32, e[Var::Y.index()] as u32];
    if h[var] != 0 || h == [0, 0] {
        return Err(Error::Parse { pos: offset, msg: "h must be a non-constant monomial free of the moving variable".into() });
    }
    Ok(Substitution { var, h })
}

/// A direction `m,n`.
pub fn parse_direction(s: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = |pos: usize| Error::Parse { pos, msg: "expected a direction m,n of integers".into() };
    if parts.len() != 2 {
        return Err(bad(0));
    }
    let m = parts[0].trim().parse::<i64>().map_err(|_| bad(0))?;
    let n = parts[1].trim().parse::<i64>().map_err(|_| bad(parts[0].len() + 1))?;
    if (m, n) == (0, 0) {
        return Err(Error::Domain("direction must be nonzero".into()));
    }
    if m.unsigned_abs() > 1 << 20 || n.unsigned_abs() > 1 << 20 {
        return Err(bad(0));
    }
    Ok((m, n))
}
