//! Sparse multivariate polynomials over a [`Scalar`] field in the fixed variables
//! `t, a, b, c, x, y`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors in that variable order, so the
//! derived ordering on keys is lexicographic on `(t, a, b, c, x, y)` and equality is structural.
//! Only `t` may carry a negative exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{Characteristic, Scalar};
use crate::error::{Error, KernelError};

pub const NVARS: usize = 6;

/// Exponent vector in the order `(t, a, b, c, x, y)`.
pub type Exps = [i32; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T = 0,
    A = 1,
    B = 2,
    C = 3,
    X = 4,
    Y = 5,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::A, Var::B, Var::C, Var::X, Var::Y];
    pub const PARAMS: [Var; 3] = [Var::A, Var::B, Var::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['t', 'a', 'b', 'c', 'x', 'y'][self as usize]
    }

    pub fn from_char(c: char) -> Option<Var> {
        Some(match c {
            't' => Var::T,
            'a' => Var::A,
            'b' => Var::B,
            'c' => Var::C,
            'x' => Var::X,
            'y' => Var::Y,
            _ => return None,
        })
    }
}

pub fn exps_of(pairs: &[(Var, i32)]) -> Exps {
    let mut e = [0; NVARS];
    for &(v, k) in pairs {
        e[v.index()] += k;
    }
    e
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut r = [0; NVARS];
    for i in 0..NVARS {
        r[i] = a[i] + b[i];
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ch: Characteristic,
    terms: BTreeMap<Exps, Scalar>,
}

impl MultiPoly {
    pub fn zero(ch: Characteristic) -> Self {
        MultiPoly {
            ch,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, [0; NVARS])
    }

    pub fn from_i64(ch: Characteristic, v: i64) -> Self {
        Self::constant(Scalar::from_i64(ch, v))
    }

    pub fn one(ch: Characteristic) -> Self {
        Self::from_i64(ch, 1)
    }

    pub fn var(ch: Characteristic, v: Var) -> Self {
        Self::term(Scalar::one(ch), exps_of(&[(v, 1)]))
    }

    pub fn monomial(ch: Characteristic, pairs: &[(Var, i32)]) -> Self {
        Self::term(Scalar::one(ch), exps_of(pairs))
    }

    pub fn term(c: Scalar, e: Exps) -> Self {
        debug_assert!(e[1..].iter().all(|&k| k >= 0), "negative exponent outside t");
        let ch = c.characteristic();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { ch, terms }
    }

    pub fn from_terms(ch: Characteristic, it: impl IntoIterator<Item = (Exps, Scalar)>) -> Self {
        let mut p = MultiPoly::zero(ch);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// The constant value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .get(&[0; NVARS])
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.ch)),
        )
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: &Exps) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| Scalar::zero(self.ch))
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exps, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: Exps, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] != 0)
    }

    pub fn degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).min()
    }

    /// Total degree in the given variables.
    pub fn total_degree(&self, vars: &[Var]) -> Option<i32> {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|v| e[v.index()]).sum())
            .max()
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.ch);
        }
        MultiPoly {
            ch: self.ch,
            terms: self.terms.iter().map(|(e, k)| (*e, k.mul(c))).collect(),
        }
    }

    /// Multiplies by a monomial given by its exponent vector.
    pub fn shift(&self, e: &Exps) -> MultiPoly {
        MultiPoly {
            ch: self.ch,
            terms: self.terms.iter().map(|(k, c)| (add_exps(k, e), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.ch);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Splits by the exponent of `v`: `self = Σ_k v^k · part_k`, parts free of `v`.
    pub fn split_by(&self, v: Var) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            let mut f = *e;
            f[v.index()] = 0;
            out.entry(k)
                .or_insert_with(|| MultiPoly::zero(self.ch))
                .terms
                .insert(f, c.clone());
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_of(&self, v: Var, k: i32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ch);
        for (e, c) in &self.terms {
            if e[v.index()] == k {
                let mut f = *e;
                f[v.index()] = 0;
                out.terms.insert(f, c.clone());
            }
        }
        out
    }

    /// Replaces the variable `v` (non-negative exponents only) by `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let parts = self.split_by(v);
        let mut out = MultiPoly::zero(self.ch);
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(self.ch)];
        for (k, part) in parts {
            assert!(k >= 0, "cannot substitute into a negative power");
            while powers.len() <= k as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out = &out + &(&part * &powers[k as usize]);
        }
        out
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ch);
        let mut cache: Vec<Vec<MultiPoly>> = subs.iter().map(|_| vec![MultiPoly::one(self.ch)]).collect();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let mut acc = MultiPoly::one(self.ch);
            for (i, (v, value)) in subs.iter().enumerate() {
                let k = rest[v.index()];
                assert!(k >= 0, "cannot substitute into a negative power");
                rest[v.index()] = 0;
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * value;
                    cache[i].push(next);
                }
                acc = &acc * &cache[i][k as usize];
            }
            out = &out + &acc.shift(&rest).scale(c);
        }
        out
    }

    /// Evaluates the variable `v` at a scalar value.
    pub fn evaluate(&self, v: Var, value: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ch);
        for (e, c) in &self.terms {
            let k = e[v.index()];
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else {
                value.inv().pow((-k) as u32)
            };
            let mut f = *e;
            f[v.index()] = 0;
            out.add_term(f, &c.mul(&factor));
        }
        out
    }

    /// Sends each variable in `vars` to 1.
    pub fn evaluate_at_one(&self, vars: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ch);
        for (e, c) in &self.terms {
            let mut f = *e;
            for v in vars {
                f[v.index()] = 0;
            }
            out.add_term(f, c);
        }
        out
    }

    /// Exact division; fails when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, KernelError> {
        let (de, dc) = match divisor.leading_term() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(KernelError::DivisionByZero),
        };
        let dinv = dc.inv();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.ch);
        while let Some((re, rc)) = rem.leading_term() {
            let mut qe = [0; NVARS];
            for i in 0..NVARS {
                qe[i] = re[i] - de[i];
                if i > 0 && qe[i] < 0 {
                    return Err(KernelError::InexactDivision);
                }
            }
            let qc = rc.mul(&dinv);
            let t = MultiPoly::term(qc.clone(), qe);
            quot.add_term(qe, &qc);
            rem = &rem - &(&t * divisor);
        }
        Ok(quot)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn monomial_content(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |mut acc, e| {
            for i in 0..NVARS {
                acc[i] = acc[i].min(e[i]);
            }
            acc
        }))
    }

    /// Canonical associate: in char 0 coprime integer coefficients with positive leading
    /// coefficient; in char p a monic leading coefficient. Returns the scalar divided out.
    pub fn make_primitive(&mut self) -> Scalar {
        let factor = scalar_content(self.terms.values(), self.ch);
        if factor.is_zero() {
            return factor;
        }
        let inv = factor.inv();
        for c in self.terms.values_mut() {
            *c = c.mul(&inv);
        }
        factor
    }

    pub fn parse(ch: Characteristic, s: &str) -> Result<MultiPoly, Error> {
        parse::parse_poly(ch, s)
    }
}

/// Rational (or modular) content of a family of coefficients, signed so that the
/// last (lexicographically leading) coefficient becomes positive after division.
pub fn scalar_content<'a>(coeffs: impl DoubleEndedIterator<Item = &'a Scalar> + Clone, ch: Characteristic) -> Scalar {
    let last = match coeffs.clone().next_back() {
        Some(c) => c.clone(),
        None => return Scalar::zero(ch),
    };
    if !ch.is_zero() {
        return last;
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in coeffs {
        let q = c.as_rational().expect("char 0 coefficient");
        num_gcd = num_gcd.gcd(q.numer());
        den_lcm = den_lcm.lcm(q.denom());
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    if last.is_negative() {
        content = -content;
    }
    Scalar::Rational(content)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ch: self.ch,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ch);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exps(e1, e2), &c1.mul(c2));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // x,y-degree ascending reads naturally for ideal generators such as x + a*y^2 + b*y^3
        let mut order: Vec<(&Exps, &Scalar)> = self.terms.iter().rev().collect();
        order.sort_by_key(|(e, _)| {
            let (x, y) = (e[Var::X.index()], e[Var::Y.index()]);
            (x + y, -x)
        });
        let mut first = true;
        for (e, c) in order {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.index()] != 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

pub mod parse {
    //! Recursive-descent reader for polynomial expressions such as `x + t*y^2 - 3*a^2*b`.

    use super::*;

    struct Parser<'a> {
        src: &'a [u8],
        pos: usize,
        ch: Characteristic,
    }

    const MAX_POWER: u32 = 64;

    pub fn parse_poly(ch: Characteristic, s: &str) -> Result<MultiPoly, Error> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            ch,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    impl<'a> Parser<'a> {
        fn err(&self, msg: &str) -> Error {
            Error::Parse {
                pos: self.pos,
                msg: msg.to_string(),
            }
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

        fn expr(&mut self) -> Result<MultiPoly, Error> {
            let mut acc = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    -&self.product()?
                }
                Some(b'+') => {
                    self.pos += 1;
                    self.product()?
                }
                _ => self.product()?,
            };
            loop {
                match self.peek() {
                    Some(b'+') => {
                        self.pos += 1;
                        acc = &acc + &self.product()?;
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        acc = &acc - &self.product()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        fn product(&mut self) -> Result<MultiPoly, Error> {
            let mut acc = self.power()?;
            loop {
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        acc = &acc * &self.power()?;
                    }
                    Some(b'(') | Some(b'a'..=b'z') | Some(b'0'..=b'9') => {
                        acc = &acc * &self.power()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        fn power(&mut self) -> Result<MultiPoly, Error> {
            let base = self.atom()?;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let neg = if self.src.get(self.pos) == Some(&b'-') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let k = self.integer()?;
                let k: u32 = k
                    .try_into()
                    .ok()
                    .filter(|k| *k <= MAX_POWER)
                    .ok_or_else(|| self.err("exponent too large"))?;
                if neg {
                    // only a bare t may be inverted
                    if base.num_terms() == 1 {
                        let (e, c) = base.leading_term().unwrap();
                        if c.is_one() && *e == exps_of(&[(Var::T, 1)]) {
                            return Ok(MultiPoly::monomial(self.ch, &[(Var::T, -(k as i32))]));
                        }
                    }
                    return Err(self.err("negative exponents are only allowed on t"));
                }
                return Ok(base.pow(k));
            }
            Ok(base)
        }

        fn integer(&mut self) -> Result<BigInt, Error> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected integer"));
            }
            if self.pos - start > 40 {
                return Err(self.err("integer literal too long"));
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            Ok(digits.parse().unwrap())
        }

        fn atom(&mut self) -> Result<MultiPoly, Error> {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    self.pos += 1;
                    Ok(inner)
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    Ok(MultiPoly::constant(Scalar::from_bigint(self.ch, &n)))
                }
                Some(c) if c.is_ascii_alphabetic() => match Var::from_char(c as char) {
                    Some(v) => {
                        self.pos += 1;
                        Ok(MultiPoly::var(self.ch, v))
                    }
                    None => Err(self.err("unknown variable")),
                },
                _ => Err(self.err("expected term")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Characteristic {
        Characteristic::ZERO
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(q(), s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("x + t*y^2").to_string(), "x + t*y^2");
        assert_eq!(p("(x+y)^2"), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("2a b"), p("2*a*b"));
        assert!(MultiPoly::parse(q(), "x^-1").is_err());
        assert!(MultiPoly::parse(q(), "t^-2").is_ok());
        assert!(MultiPoly::parse(q(), "x +").is_err());
    }

    #[test]
    fn exact_division() {
        let f = p("(a*c - b^2)*(a*c - 2*b^2)");
        let g = p("a*c - b^2");
        assert_eq!(f.div_exact(&g).unwrap(), p("a*c - 2*b^2"));
        assert_eq!(p("x + 1").div_exact(&p("x - 1")), Err(KernelError::InexactDivision));
    }

    #[test]
    fn substitution_matches_expansion() {
        let g = p("x + a*y^2 + b*y^3");
        let f = p("x^2*y");
        assert_eq!(f.substitute(Var::X, &g), &g.pow(2) * &p("y"));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let two = Characteristic::new(2).unwrap();
        let f = MultiPoly::parse(two, "(x + t)^2").unwrap();
        assert_eq!(f, MultiPoly::parse(two, "x^2 + t^2").unwrap());
    }

    #[test]
    fn primitive_part() {
        let mut f = p("-4*a + 6*b");
        f.make_primitive();
        assert_eq!(f, p("2*a - 3*b"));
    }
}
