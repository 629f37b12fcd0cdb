//! Buchberger's algorithm with the product and chain criteria, plus
//! inter-reduction to the unique reduced monic Gröbner basis.

use super::{deg, mono_div, mono_lcm, mono_mul, MultiPoly};
use num::One;

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// with respect to the generators' ring order.
///
/// The output is auto-reduced, monic, sorted ascending by leading
/// monomial, and unique for the ideal and order; the zero ideal gives the
/// empty basis.
pub fn reduced_groebner_basis(gens: &[MultiPoly]) -> Vec<MultiPoly> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let order = ring.order();

    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        assert!(g.ring().same_ring(&ring), "generators from mixed rings");
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    if basis.is_empty() {
        return Vec::new();
    }

    // Pending S-pairs, kept as index pairs i < j.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: Vec<(usize, usize)> = Vec::new();

    let lcm_of = |basis: &[MultiPoly], i: usize, j: usize| {
        mono_lcm(
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        )
    };

    while !pairs.is_empty() {
        // Normal selection: smallest lcm by degree, then by the ring order.
        let mut best = 0;
        let mut best_lcm = lcm_of(&basis, pairs[0].0, pairs[0].1);
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lcm_of(&basis, i, j);
            let better = match deg(&l).cmp(&deg(&best_lcm)) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    order.cmp_monomials(&l, &best_lcm) == std::cmp::Ordering::Less
                }
            };
            if better {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        done.push((i, j));

        let lti = basis[i].leading_monomial().unwrap();
        let ltj = basis[j].leading_monomial().unwrap();
        let l = mono_lcm(lti, ltj);

        // Product criterion: coprime leading monomials reduce to zero.
        if l == mono_mul(lti, ltj) {
            continue;
        }
        // Chain criterion: some k with lt(k) | lcm(i,j) whose pairs with i
        // and j were both already treated.
        let processed = |a: usize, b: usize, done: &[(usize, usize)]| {
            let key = (a.min(b), a.max(b));
            done.contains(&key)
        };
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if mono_div(&l, basis[k].leading_monomial().unwrap()).is_some()
                && processed(i, k, &done)
                && processed(j, k, &done)
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], &l);
        let r = s.reduce(&basis);
        if !r.is_zero() {
            let r = r.monic();
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }

    interreduce(basis)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, lcm: &[u32]) -> MultiPoly {
    let qf = mono_div(lcm, f.leading_monomial().unwrap()).unwrap();
    let qg = mono_div(lcm, g.leading_monomial().unwrap()).unwrap();
    let cf = num::BigRational::one() / f.leading_coefficient().unwrap();
    let cg = num::BigRational::one() / g.leading_coefficient().unwrap();
    f.mul_term(&qf, &cf).sub(&g.mul_term(&qg, &cg))
}

/// Minimalises and fully reduces a Gröbner basis; output sorted ascending
/// by leading monomial.
fn interreduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    // Minimalise: drop elements whose leading monomial is divisible by
    // another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = basis[i].leading_monomial().unwrap();
            let lj = basis[j].leading_monomial().unwrap();
            if mono_div(li, lj).is_some() && (li != lj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<MultiPoly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Reduce each element against the others until stable.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<MultiPoly> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let reduced = minimal[i].reduce(&others).monic();
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    let order = if let Some(f) = minimal.first() {
        f.ring().order()
    } else {
        return minimal;
    };
    minimal.sort_by(|a, b| {
        order.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PolyRing};
    use std::sync::Arc;

    fn p(ring: &Arc<PolyRing>, s: &str) -> MultiPoly {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn already_reduced_inputs_pass_through() {
        let r = PolyRing::degrevlex(&["x", "y"]);
        let gb = reduced_groebner_basis(&[p(&r, "x"), p(&r, "y")]);
        assert_eq!(gb, vec![p(&r, "y"), p(&r, "x")]);
        assert!(reduced_groebner_basis(&[]).is_empty());
    }

    #[test]
    fn collapses_to_principal_generator() {
        let r = PolyRing::degrevlex(&["x"]);
        // (x^2 - 1, x - 1) = (x - 1)
        let gb = reduced_groebner_basis(&[p(&r, "x^2 - 1"), p(&r, "x - 1")]);
        assert_eq!(gb, vec![p(&r, "x - 1")]);
    }

    #[test]
    fn textbook_lex_like_example() {
        let r = PolyRing::degrevlex(&["x", "y"]);
        let gb = reduced_groebner_basis(&[p(&r, "x^2 + y"), p(&r, "x*y + x")]);
        // x*(x^2+y) - x*(xy+x) relations close up; membership checks:
        for g in &gb {
            assert!(g.leading_coefficient().map(num::BigRational::is_one) == Some(true));
        }
        // x^2 + y and x*y + x must reduce to zero against the basis.
        assert!(p(&r, "x^2 + y").reduce(&gb).is_zero());
        assert!(p(&r, "x*y + x").reduce(&gb).is_zero());
    }

    #[test]
    fn unit_ideal_normalises_to_one() {
        let r = PolyRing::degrevlex(&["x"]);
        let gb = reduced_groebner_basis(&[p(&r, "x"), p(&r, "x - 1")]);
        assert_eq!(gb, vec![p(&r, "1")]);
    }
}
