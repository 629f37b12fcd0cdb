//! Sparse exact-rational multivariate polynomials.
//!
//! Coefficients are big rationals throughout; there is no floating point
//! anywhere in the crate. A polynomial is bound to a [`PolyRing`] context
//! (variable list plus monomial order) and its term list is kept sorted in
//! strictly descending monomial order with no zero coefficients.

pub mod groebner;
pub mod ideal;
pub mod parse;
pub mod univariate;

pub use ideal::{IdealDim, PolyIdeal};
pub use parse::{parse_polynomial, PolyParseError};

use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Monomial comparison rule a ring uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; the default.
    DegRevLex,
    Lex,
    /// Two-block elimination order: the first variable dominates, ties are
    /// broken by degrevlex on the remaining variables. Used to eliminate
    /// the auxiliary variable in ideal intersections.
    FirstVarElim,
}

impl MonomialOrder {
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::FirstVarElim => match a[0].cmp(&b[0]) {
                Ordering::Equal => degrevlex(&a[1..], &b[1..]),
                ord => ord,
            },
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // smaller exponent in the last differing position wins
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// A polynomial ring context: named variables and a monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { vars, order })
    }

    pub fn degrevlex(vars: &[&str]) -> Arc<Self> {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with one fresh variable prepended under the elimination order.
    /// The fresh name is chosen to avoid the existing ones.
    pub fn with_elimination_var(self: &Arc<Self>) -> (Arc<PolyRing>, String) {
        let mut name = "t".to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name.clone());
        vars.extend(self.vars.iter().cloned());
        (PolyRing::new(vars, MonomialOrder::FirstVarElim), name)
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self == other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials belong to different ring contexts")]
    MixedRings,
    #[error("generator is not a monomial: {0}")]
    NotMonomial(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

/// A sparse multivariate polynomial over ℚ.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    /// Sorted strictly descending by the ring's monomial order; no zeros.
    terms: Vec<(Vec<u32>, BigRational)>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        let mono = vec![0u32; ring.num_vars()];
        MultiPoly::from_terms(ring, vec![(mono, c)])
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        MultiPoly::constant(ring, BigRational::one())
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        let mut mono = vec![0u32; ring.num_vars()];
        mono[index] = 1;
        MultiPoly::from_terms(ring, vec![(mono, BigRational::one())])
    }

    /// Normalises an arbitrary term list: merges equal monomials, drops
    /// zeros, sorts descending.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Vec<u32>, BigRational)>) -> Self {
        let mut terms: Vec<(Vec<u32>, BigRational)> = terms
            .into_iter()
            .inspect(|(m, _)| assert_eq!(m.len(), ring.num_vars(), "monomial arity mismatch"))
            .collect();
        terms.sort_by(|a, b| ring.order.cmp_monomials(&b.0, &a.0));
        let mut merged: Vec<(Vec<u32>, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
            if let Some((_, lc)) = merged.last() {
                if lc.is_zero() {
                    merged.pop();
                }
            }
        }
        MultiPoly {
            ring: ring.clone(),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Vec<u32>, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && deg(&self.terms[0].0) == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&[u32]> {
        self.terms.first().map(|(m, _)| m.as_slice())
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| deg(m)).max()
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert!(
            self.ring.same_ring(&other.ring),
            "operands from different ring contexts"
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the term `c * x^mono`.
    pub fn mul_term(&self, mono: &[u32], c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (mono_mul(m, mono), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((mono_mul(m, n), c * d));
            }
        }
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn monic(&self) -> MultiPoly {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => {
                let inv = BigRational::one() / lc;
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Remainder of multivariate division by `divisors`, in term order.
    /// The remainder has no term divisible by any divisor's leading
    /// monomial; against a reduced Gröbner basis this is the normal form.
    pub fn reduce(&self, divisors: &[MultiPoly]) -> MultiPoly {
        let mut rem_terms: Vec<(Vec<u32>, BigRational)> = Vec::new();
        let mut h = self.clone();
        'outer: while let Some((lm, lc)) = h.terms.first().cloned() {
            for d in divisors {
                if let Some(dm) = d.leading_monomial() {
                    if let Some(q) = mono_div(&lm, dm) {
                        let factor = &lc / d.leading_coefficient().unwrap();
                        h = h.sub(&d.mul_term(&q, &factor));
                        continue 'outer;
                    }
                }
            }
            rem_terms.push((lm, lc));
            h.terms.remove(0);
        }
        // Terms were moved out in descending order already.
        MultiPoly {
            ring: self.ring.clone(),
            terms: rem_terms,
        }
    }

    /// Substitutes rational values for all variables.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.ring.num_vars());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.iter().zip(values) {
                for _ in 0..*e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-reads the polynomial in another ring with the same variable list
    /// (e.g. a different monomial order).
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> MultiPoly {
        assert_eq!(self.ring.vars(), ring.vars());
        MultiPoly::from_terms(ring, self.terms.clone())
    }

    /// Lifts into a ring with one extra leading variable (exponent 0).
    pub fn lift_prepend(&self, target: &Arc<PolyRing>) -> MultiPoly {
        assert_eq!(&target.vars()[1..], self.ring.vars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = Vec::with_capacity(m.len() + 1);
                n.push(0);
                n.extend_from_slice(m);
                (n, c.clone())
            })
            .collect();
        MultiPoly::from_terms(target, terms)
    }

    /// Drops the leading variable; `None` when it occurs.
    pub fn drop_first_var(&self, target: &Arc<PolyRing>) -> Option<MultiPoly> {
        assert_eq!(&self.ring.vars()[1..], target.vars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m[0] != 0 {
                return None;
            }
            terms.push((m[1..].to_vec(), c.clone()));
        }
        Some(MultiPoly::from_terms(target, terms))
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

pub(crate) fn deg(m: &[u32]) -> u64 {
    m.iter().map(|&e| e as u64).sum()
}

pub(crate) fn mono_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a / b` when `b` divides `a` componentwise.
pub(crate) fn mono_div(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub(crate) fn mono_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.ring.vars()[v].clone()
                    } else {
                        format!("{}^{}", self.ring.vars()[v], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::degrevlex(&["x", "y"])
    }

    fn p(ring: &Arc<PolyRing>, s: &str) -> MultiPoly {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn degrevlex_orders_by_degree_then_revlex() {
        let r = ring2();
        // x^2 > x*y > y^2 > x > y > 1 under degrevlex with x before y
        let f = p(&r, "x^2 + x*y + y^2 + x + y + 1");
        let ms: Vec<&[u32]> = f.terms().iter().map(|(m, _)| m.as_slice()).collect();
        assert_eq!(
            ms,
            vec![
                &[2, 0][..],
                &[1, 1][..],
                &[0, 2][..],
                &[1, 0][..],
                &[0, 1][..],
                &[0, 0][..]
            ]
        );
    }

    #[test]
    fn arithmetic_and_normalisation() {
        let r = ring2();
        let f = p(&r, "x + y");
        let g = p(&r, "x - y");
        assert_eq!(f.mul(&g), p(&r, "x^2 - y^2"));
        assert!(f.sub(&f).is_zero());
        assert_eq!(
            p(&r, "2*x + 3*x"),
            p(&r, "5*x"),
        );
    }

    #[test]
    fn reduction_examples() {
        let r = ring2();
        let f = p(&r, "x^2");
        let g = p(&r, "x^2 - y");
        assert_eq!(f.reduce(&[g]), p(&r, "y"));
        assert_eq!(p(&r, "y").reduce(&[p(&r, "x")]), p(&r, "y"));
    }

    #[test]
    fn eval_is_exact() {
        let r = ring2();
        let f = p(&r, "3/2*x^2*y - y + 1");
        let x = BigRational::from_str("2").unwrap();
        let y = BigRational::from_str("1/3").unwrap();
        assert_eq!(f.eval(&[x, y]), BigRational::from_str("8/3").unwrap());
    }

    #[test]
    fn display_round_trips() {
        let r = ring2();
        for s in ["3/2*x^2*y - y + 1", "-x + 1/4", "0", "x*y"] {
            let f = p(&r, s);
            assert_eq!(p(&r, &f.to_string()), f);
        }
    }
}
