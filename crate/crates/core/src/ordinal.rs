//! Exact ordinal arithmetic in Cantor normal form.
//!
//! Ordinals are the value domain for poset deviation and Krull dimension.
//! An [`Ordinal`] is a finite sum `w^e1*c1 + ... + w^ek*ck` with strictly
//! decreasing exponents (themselves ordinals) and positive integer
//! coefficients; the empty sum is `0`.

use num::BigUint;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An ordinal below ε₀ in Cantor normal form.
///
/// Invariants: exponents strictly decreasing, all coefficients ≥ 1.
/// Values are immutable; comparison is the usual ordinal order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<(Ordinal, BigUint)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1u32)
    }

    pub fn omega() -> Self {
        Ordinal::term(Ordinal::one(), 1u32)
    }

    pub fn from_nat(n: impl Into<BigUint>) -> Self {
        Ordinal::term(Ordinal::zero(), n)
    }

    /// The single-term ordinal `w^exponent * coefficient`; zero coefficient
    /// gives `0`.
    pub fn term(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        let c: BigUint = coefficient.into();
        if c == BigUint::ZERO {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![(exponent, c)],
        }
    }

    /// Builds an ordinal from CNF terms, validating strict exponent descent
    /// and positive coefficients.
    pub fn from_terms(terms: Vec<(Ordinal, BigUint)>) -> Result<Self, OrdinalFormError> {
        for window in terms.windows(2) {
            if window[0].0 <= window[1].0 {
                return Err(OrdinalFormError::ExponentsNotDecreasing);
            }
        }
        if terms.iter().any(|(_, c)| *c == BigUint::ZERO) {
            return Err(OrdinalFormError::ZeroCoefficient);
        }
        Ok(Ordinal { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` for natural numbers (including 0).
    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, _)] => e.is_zero(),
            _ => false,
        }
    }

    /// The natural-number value, when finite.
    pub fn as_nat(&self) -> Option<&BigUint> {
        match self.terms.as_slice() {
            [(e, c)] if e.is_zero() => Some(c),
            [] => None, // zero has no stored coefficient
            _ => None,
        }
    }

    pub fn terms(&self) -> &[(Ordinal, BigUint)] {
        &self.terms
    }

    /// Exponent of the leading CNF term; `None` for 0.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|(e, _)| e)
    }

    /// Ordinal sum. Non-commutative: terms of `self` with exponent below the
    /// leading exponent of `rhs` are absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some((lead_exp, lead_coeff)) = rhs.terms.first() else {
            return self.clone();
        };
        let mut out: Vec<(Ordinal, BigUint)> = self
            .terms
            .iter()
            .take_while(|(e, _)| e > lead_exp)
            .cloned()
            .collect();
        let keep = out.len();
        let mut rest = rhs.terms.clone();
        if let Some((e, c)) = self.terms.get(keep) {
            if e == lead_exp {
                rest[0].1 = c + lead_coeff;
            }
        }
        out.extend(rest);
        Ordinal { terms: out }
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Total order comparison; alias of the `Ord` impl under its spec name.
    pub fn compare(&self, other: &Ordinal) -> Ordering {
        self.cmp(other)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        // CNF order is lexicographic on the term lists, each term compared
        // by (exponent, coefficient).
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::from_nat(n)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_nat(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalFormError {
    #[error("CNF exponents must be strictly decreasing")]
    ExponentsNotDecreasing,
    #[error("CNF coefficients must be positive")]
    ZeroCoefficient,
}

/// Rendering: `w^{e}*c` terms joined by ` + `, with `w` for ω. Finite
/// exponents print without braces (`w^2*3`), exponent 1 prints as `w*c`,
/// exponent 0 prints the bare coefficient.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = BigUint::from(1u32);
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else if e.as_nat() == Some(&one) {
                write!(f, "w*{c}")?;
            } else if e.is_finite() {
                write!(f, "w^{}*{c}", e.as_nat().unwrap())?;
            } else {
                write!(f, "w^{{{e}}}*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ordinal parse error at byte {pos}: {msg}")]
pub struct OrdinalParseError {
    pub pos: usize,
    pub msg: String,
}

/// Parses the rendering grammar. Terms are summed left-to-right with
/// ordinal addition, so non-canonical inputs such as `1 + w` normalise
/// (to `w` in that case), and canonical CNF strings round-trip exactly.
impl FromStr for Ordinal {
    type Err = OrdinalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = OrdParser {
            text: s.as_bytes(),
            pos: 0,
        };
        let v = p.ordinal()?;
        p.skip_ws();
        if p.pos != p.text.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct OrdParser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> OrdParser<'a> {
    fn err(&self, msg: &str) -> OrdinalParseError {
        OrdinalParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigUint, OrdinalParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(BigUint::from_str(digits).unwrap())
    }

    fn ordinal(&mut self) -> Result<Ordinal, OrdinalParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let t = self.term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, OrdinalParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let exponent = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Ordinal::one()
                };
                let coeff = if self.eat(b'*') {
                    self.nat()?
                } else {
                    BigUint::from(1u32)
                };
                Ok(Ordinal::term(exponent, coeff))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_nat(self.nat()?)),
            _ => Err(self.err("expected `w` or a natural number")),
        }
    }

    fn exponent(&mut self) -> Result<Ordinal, OrdinalParseError> {
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                let inner = self.ordinal()?;
                if !self.eat(b'}') {
                    return Err(self.err("expected `}`"));
                }
                Ok(inner)
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_nat(self.nat()?)),
            _ => Err(self.err("expected an exponent")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(ord("w").cmp(&ord("1")), Ordering::Greater);
        assert_eq!(ord("0").cmp(&ord("0")), Ordering::Equal);
        // w+1 < w*2: same leading exponent, coefficient 1 < 2.
        assert_eq!(ord("w + 1").cmp(&ord("w*2")), Ordering::Less);
        assert_eq!(ord("w^2").cmp(&ord("w*5 + 3")), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(Ordinal::one().add(&Ordinal::omega()), Ordinal::omega());
        assert_eq!(Ordinal::omega().add(&Ordinal::one()), ord("w + 1"));
        assert_eq!(ord("w*2 + 3").add(&ord("w")), ord("w*3"));
        assert_eq!(ord("w^2").add(&ord("w + 4")), ord("w^2 + w + 4"));
    }

    #[test]
    fn succ_examples() {
        assert_eq!(Ordinal::zero().succ(), Ordinal::one());
        assert_eq!(Ordinal::omega().succ(), ord("w + 1"));
        assert_eq!(ord("w^2*2").succ(), ord("w^2*2 + 1"));
    }

    #[test]
    fn render_round_trip() {
        for s in ["0", "1", "w*1", "w^2*3 + w*1 + 4", "w^{w*1}*2 + 5"] {
            let o = ord(s);
            assert_eq!(ord(&o.to_string()), o);
        }
        assert_eq!(ord("w^2*3 + w*1 + 4").to_string(), "w^2*3 + w*1 + 4");
    }

    #[test]
    fn normalising_parse() {
        assert_eq!(ord("1 + w"), ord("w"));
        assert_eq!(ord("w + w"), ord("w*2"));
    }

    #[test]
    fn from_terms_validation() {
        let bad = Ordinal::from_terms(vec![
            (Ordinal::zero(), BigUint::from(1u32)),
            (Ordinal::one(), BigUint::from(1u32)),
        ]);
        assert_eq!(bad, Err(OrdinalFormError::ExponentsNotDecreasing));
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "w^".parse::<Ordinal>().unwrap_err();
        assert_eq!(e.pos, 2);
        assert!("x".parse::<Ordinal>().is_err());
    }
}
