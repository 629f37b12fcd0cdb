//! Ideals with cached reduced Gröbner bases: membership, containment,
//! intersection, dimension, and minimal primes of monomial ideals.

use super::groebner::reduced_groebner_basis;
use super::{deg, MultiPoly, PolyError, PolyRing};
use num::{BigRational, One};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Krull dimension of a quotient by an ideal; the unit ideal has empty
/// vanishing locus and dimension `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealDim {
    NegInfinity,
    Dim(usize),
}

impl fmt::Display for IdealDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDim::NegInfinity => write!(f, "-inf"),
            IdealDim::Dim(d) => write!(f, "{d}"),
        }
    }
}

/// An ideal of a polynomial ring, with its reduced Gröbner basis computed
/// on first use and cached; values are immutable afterwards and safe to
/// share across threads.
pub struct PolyIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<MultiPoly>,
    gb: OnceLock<Vec<MultiPoly>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        PolyIdeal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl PolyIdeal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<MultiPoly>) -> Result<Self, PolyError> {
        if gens.iter().any(|g| !g.ring().same_ring(ring)) {
            return Err(PolyError::MixedRings);
        }
        Ok(PolyIdeal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    fn with_basis(ring: &Arc<PolyRing>, basis: Vec<MultiPoly>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        PolyIdeal {
            ring: ring.clone(),
            gens: basis,
            gb,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    /// The unique reduced monic Gröbner basis for the ring's order.
    pub fn groebner_basis(&self) -> &[MultiPoly] {
        self.gb.get_or_init(|| reduced_groebner_basis(&self.gens))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        match self.groebner_basis() {
            [g] => g.is_constant() && !g.is_zero(),
            _ => false,
        }
    }

    /// Normal form of `f` modulo the ideal; zero exactly for members.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if !f.ring().same_ring(&self.ring) {
            return Err(PolyError::MixedRings);
        }
        Ok(f.reduce(self.groebner_basis()))
    }

    pub fn contains_poly(&self, f: &MultiPoly) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &PolyIdeal) -> Result<bool, PolyError> {
        if !other.ring.same_ring(&self.ring) {
            return Err(PolyError::MixedRings);
        }
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: identical reduced Gröbner bases.
    pub fn same_ideal(&self, other: &PolyIdeal) -> bool {
        self.ring.same_ring(&other.ring) && self.groebner_basis() == other.groebner_basis()
    }

    /// Intersection via the one-variable elimination construction:
    /// eliminate `t` from `t·I + (1−t)·J` using a block order in which the
    /// auxiliary variable dominates.
    pub fn intersect(&self, other: &PolyIdeal) -> Result<PolyIdeal, PolyError> {
        if !other.ring.same_ring(&self.ring) {
            return Err(PolyError::MixedRings);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(PolyIdeal::zero(&self.ring));
        }
        let (elim_ring, _) = self.ring.with_elimination_var();
        let t = MultiPoly::var(&elim_ring, 0);
        let one_minus_t = MultiPoly::one(&elim_ring).sub(&t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(t.mul(&f.lift_prepend(&elim_ring)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.lift_prepend(&elim_ring)));
        }
        let gb = reduced_groebner_basis(&gens);
        // Basis elements free of t form a Gröbner basis of the
        // intersection for the order induced on the remaining variables.
        let eliminated: Vec<MultiPoly> = gb
            .iter()
            .filter_map(|g| g.drop_first_var(&self.ring))
            .collect();
        Ok(PolyIdeal::with_basis(&self.ring, eliminated))
    }

    /// Dimension of the quotient ring, computed combinatorially: largest
    /// variable subset none of whose monomials appear among the leading
    /// terms of the reduced basis.
    pub fn dimension(&self) -> IdealDim {
        if self.is_unit_ideal() {
            return IdealDim::NegInfinity;
        }
        let n = self.ring.num_vars();
        let leading: Vec<&[u32]> = self
            .groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap())
            .collect();
        let mut best = 0usize;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leading.iter().all(|m| {
                m.iter()
                    .enumerate()
                    .any(|(v, &e)| e > 0 && mask & (1 << v) == 0)
            });
            if independent {
                best = size;
            }
        }
        IdealDim::Dim(best)
    }

    /// Minimal primes of an ideal with monomial generators. Each is
    /// generated by a subset of the variables; the result is duplicate-free
    /// and pairwise incomparable. Errors when a generator has several
    /// terms.
    pub fn minimal_primes_monomial(&self) -> Result<Vec<PolyIdeal>, PolyError> {
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for g in &self.gens {
            if g.is_zero() {
                continue;
            }
            if !g.is_monomial() {
                return Err(PolyError::NotMonomial(g.to_string()));
            }
            let m = g.leading_monomial().unwrap();
            if deg(m) == 0 {
                // A unit among the generators: empty vanishing locus.
                return Ok(Vec::new());
            }
            supports.push(
                m.iter()
                    .enumerate()
                    .filter_map(|(v, &e)| (e > 0).then_some(v))
                    .collect(),
            );
        }

        let n = self.ring.num_vars();
        let mut covers: Vec<u64> = Vec::new();
        let mut masks: Vec<u64> = (0u64..(1u64 << n)).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let hits_all = supports
                .iter()
                .all(|s| s.iter().any(|&v| mask & (1 << v) != 0));
            if hits_all && !covers.iter().any(|c| c & mask == *c) {
                covers.push(mask);
            }
        }

        let mut out = Vec::new();
        for mask in covers {
            let gens: Vec<MultiPoly> = (0..n)
                .filter(|v| mask & (1 << v) != 0)
                .map(|v| MultiPoly::var(&self.ring, v))
                .collect();
            out.push(PolyIdeal::new(&self.ring, gens)?);
        }
        Ok(out)
    }

    /// `true` when the reduced basis consists of polynomials of total
    /// degree ≤ 1 and the ideal is proper; such ideals are prime (the
    /// quotient is a polynomial ring over ℚ). Covers variable-generated
    /// ideals, in particular the minimal primes of monomial ideals.
    pub fn is_certified_prime(&self) -> bool {
        if self.is_unit_ideal() {
            return false;
        }
        self.groebner_basis()
            .iter()
            .all(|g| g.total_degree().unwrap_or(0) <= 1)
    }

    /// Canonical rendering `(g1, g2, ...)` from the reduced basis.
    pub fn render(&self) -> String {
        let gb = self.groebner_basis();
        if gb.is_empty() {
            return "(0)".to_string();
        }
        let mut parts: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        // Descending leading monomials read more naturally: (x, y) not (y, x).
        parts.reverse();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[allow(unused)]
fn monic_check(p: &MultiPoly) -> bool {
    p.leading_coefficient()
        .map(BigRational::is_one)
        .unwrap_or(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::degrevlex(&["x", "y"])
    }

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> PolyIdeal {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        PolyIdeal::new(ring, gens).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = PolyRing::degrevlex(&["x", "y"]);
        let i = ideal(&r, &["x"]);
        assert!(i.normal_form(&parse_polynomial(&r, "x").unwrap()).unwrap().is_zero());
        assert_eq!(
            i.normal_form(&parse_polynomial(&r, "y").unwrap()).unwrap(),
            parse_polynomial(&r, "y").unwrap()
        );
        let j = ideal(&r, &["x^2 - y"]);
        assert_eq!(
            j.normal_form(&parse_polynomial(&r, "x^2").unwrap()).unwrap(),
            parse_polynomial(&r, "y").unwrap()
        );
    }

    #[test]
    fn containment_examples() {
        let r = ring2();
        assert!(ideal(&r, &["x", "y"]).contains_ideal(&ideal(&r, &["x"])).unwrap());
        assert!(ideal(&r, &["x", "y"]).contains_ideal(&PolyIdeal::zero(&r)).unwrap());
        let r1 = PolyRing::degrevlex(&["x"]);
        assert!(!ideal(&r1, &["x - 1"]).contains_ideal(&ideal(&r1, &["x - 2"])).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring2();
        let xy = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(xy.same_ideal(&ideal(&r, &["x*y"])));
        let xx = ideal(&r, &["x"]).intersect(&ideal(&r, &["x"])).unwrap();
        assert!(xx.same_ideal(&ideal(&r, &["x"])));
        let zero = PolyIdeal::zero(&r).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(zero.is_zero_ideal());
    }

    #[test]
    fn nontrivial_intersection() {
        let r = ring2();
        // (x) ∩ (x - y) via two-way containment
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["x - y"]);
        let c = a.intersect(&b).unwrap();
        assert!(a.contains_ideal(&c).unwrap());
        assert!(b.contains_ideal(&c).unwrap());
        assert!(c.contains_ideal(&ideal(&r, &["x^2 - x*y"])).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring2();
        assert_eq!(PolyIdeal::zero(&r).dimension(), IdealDim::Dim(2));
        assert_eq!(ideal(&r, &["x", "y"]).dimension(), IdealDim::Dim(0));
        assert_eq!(ideal(&r, &["x"]).dimension(), IdealDim::Dim(1));
        assert_eq!(ideal(&r, &["1"]).dimension(), IdealDim::NegInfinity);
    }

    #[test]
    fn minimal_primes_examples() {
        let r = ring2();
        let mp = ideal(&r, &["x*y"]).minimal_primes_monomial().unwrap();
        let rendered: Vec<String> = mp.iter().map(|p| p.render()).collect();
        assert_eq!(rendered.len(), 2);
        assert!(rendered.contains(&"(x)".to_string()));
        assert!(rendered.contains(&"(y)".to_string()));

        let mp = ideal(&r, &["x"]).minimal_primes_monomial().unwrap();
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].render(), "(x)");

        let mp = ideal(&r, &["x^2", "x*y"]).minimal_primes_monomial().unwrap();
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].render(), "(x)");

        assert!(ideal(&r, &["x + y"]).minimal_primes_monomial().is_err());
        assert_eq!(PolyIdeal::zero(&r).minimal_primes_monomial().unwrap().len(), 1);
    }

    #[test]
    fn certified_primality_is_linear_only() {
        let r = ring2();
        assert!(PolyIdeal::zero(&r).is_certified_prime());
        assert!(ideal(&r, &["x"]).is_certified_prime());
        assert!(ideal(&r, &["x - 1", "y - 7"]).is_certified_prime());
        assert!(!ideal(&r, &["x*y"]).is_certified_prime());
        assert!(!ideal(&r, &["1"]).is_certified_prime());
    }
}
