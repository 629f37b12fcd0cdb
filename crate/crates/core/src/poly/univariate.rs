//! Helpers for polynomials in a single-variable ring, used by the
//! Heisenberg backend for the rational-function parameters f/g in ℚ[z].

use super::{MultiPoly, PolyError};
use num::{BigRational, Zero};

fn check_univariate(f: &MultiPoly) -> Result<(), PolyError> {
    if f.ring().num_vars() != 1 {
        return Err(PolyError::Unsupported(
            "operation requires a one-variable ring".into(),
        ));
    }
    Ok(())
}

pub fn degree(f: &MultiPoly) -> Option<u32> {
    f.leading_monomial().map(|m| m[0])
}

pub fn eval_at(f: &MultiPoly, x: &BigRational) -> Result<BigRational, PolyError> {
    check_univariate(f)?;
    Ok(f.eval(std::slice::from_ref(x)))
}

/// Euclidean division `f = q·g + r` with `deg r < deg g`.
pub fn div_rem(f: &MultiPoly, g: &MultiPoly) -> Result<(MultiPoly, MultiPoly), PolyError> {
    check_univariate(f)?;
    check_univariate(g)?;
    assert!(!g.is_zero(), "division by the zero polynomial");
    let ring = f.ring().clone();
    let mut q = MultiPoly::zero(&ring);
    let mut r = f.clone();
    let dg = degree(g).unwrap();
    let lc = g.leading_coefficient().unwrap().clone();
    while let Some(dr) = degree(&r) {
        if r.is_zero() || dr < dg {
            break;
        }
        let c = r.leading_coefficient().unwrap() / &lc;
        let m = vec![dr - dg];
        let t = MultiPoly::from_terms(&ring, vec![(m.clone(), c.clone())]);
        q = q.add(&t);
        r = r.sub(&g.mul_term(&m, &c));
    }
    Ok((q, r))
}

/// Monic greatest common divisor in ℚ[z].
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
    check_univariate(f)?;
    check_univariate(g)?;
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

pub fn is_zero_poly(f: &MultiPoly) -> bool {
    f.terms().iter().all(|(_, c)| c.is_zero())
}
