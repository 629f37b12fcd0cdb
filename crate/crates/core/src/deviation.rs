//! Deviation of symbolically presented posets.
//!
//! Deviation measures how badly a poset fails the descending chain
//! condition: `-1` for posets with no two comparable elements, `0` for
//! nontrivial posets with DCC, larger ordinals when descending chains with
//! complicated factors exist, and undefined when a dense linear order
//! embeds. Applied to the submodule lattice of a module it computes the
//! Krull dimension in the Gabriel–Rentschler sense.

use crate::ordinal::Ordinal;

/// A symbolic poset presentation.
///
/// Supported shapes are the ones with a decidable closed form: finite
/// posets given by covering pairs, well-ordered and reverse well-ordered
/// chains of a given ordinal length, the dense interval as the standard
/// non-example, plus disjoint sums and order duals of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetDescriptor {
    Finite {
        elements: Vec<String>,
        covers: Vec<(String, String)>,
    },
    OrdinalChain(Ordinal),
    ReversedOrdinalChain(Ordinal),
    DenseInterval,
    DisjointSum(Vec<PosetDescriptor>),
    OrderDual(Box<PosetDescriptor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeviationResult {
    /// No two distinct comparable elements.
    MinusOne,
    Value(Ordinal),
    /// The descriptor contains a dense linear order.
    Undefined,
}

impl DeviationResult {
    /// Order used when combining disjoint-sum parts: a descending chain
    /// lives inside one part, so the sum takes the maximum; `Undefined`
    /// absorbs, since a dense suborder of a part is one of the sum.
    pub fn max(self, other: DeviationResult) -> DeviationResult {
        use DeviationResult::*;
        match (self, other) {
            (Undefined, _) | (_, Undefined) => Undefined,
            (MinusOne, x) | (x, MinusOne) => x,
            (Value(a), Value(b)) => Value(a.max(b)),
        }
    }
}

impl std::fmt::Display for DeviationResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DeviationResult::MinusOne => write!(f, "-1"),
            DeviationResult::Value(a) => write!(f, "{a}"),
            DeviationResult::Undefined => write!(f, "undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeviationError {
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
}

/// Computes the deviation of a poset descriptor.
///
/// Finite posets always satisfy DCC, so they yield `-1` or `0`. A
/// well-ordered chain satisfies DCC. For a reverse well-ordered chain of
/// infinite length β the deviation is the leading exponent of the Cantor
/// normal form of β; the definition-unrolling justification lives in the
/// test oracles.
pub fn deviation(p: &PosetDescriptor) -> Result<DeviationResult, DeviationError> {
    use DeviationResult::*;
    match p {
        PosetDescriptor::Finite { elements, covers } => finite_deviation(elements, covers),
        PosetDescriptor::OrdinalChain(beta) => {
            if *beta <= Ordinal::one() {
                Ok(MinusOne)
            } else {
                Ok(Value(Ordinal::zero()))
            }
        }
        PosetDescriptor::ReversedOrdinalChain(beta) => {
            if *beta <= Ordinal::one() {
                Ok(MinusOne)
            } else if beta.is_finite() {
                Ok(Value(Ordinal::zero()))
            } else {
                Ok(Value(beta.leading_exponent().unwrap().clone()))
            }
        }
        PosetDescriptor::DenseInterval => Ok(Undefined),
        PosetDescriptor::DisjointSum(parts) => {
            if parts.is_empty() {
                return Err(DeviationError::InvalidPoset(
                    "disjoint sum needs at least one part".into(),
                ));
            }
            let mut acc = MinusOne;
            for part in parts {
                acc = acc.max(deviation(part)?);
            }
            Ok(acc)
        }
        PosetDescriptor::OrderDual(inner) => deviation(&order_dual(inner)),
    }
}

/// Alias of [`deviation`] for submodule-lattice inputs: the result is the
/// Krull dimension of the module whose lattice of submodules is described.
pub fn submodule_lattice_krull(l: &PosetDescriptor) -> Result<DeviationResult, DeviationError> {
    deviation(l)
}

/// Pushes an order dual one level into the descriptor.
pub fn order_dual(p: &PosetDescriptor) -> PosetDescriptor {
    match p {
        PosetDescriptor::Finite { elements, covers } => PosetDescriptor::Finite {
            elements: elements.clone(),
            covers: covers.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        },
        PosetDescriptor::OrdinalChain(b) => PosetDescriptor::ReversedOrdinalChain(b.clone()),
        PosetDescriptor::ReversedOrdinalChain(b) => PosetDescriptor::OrdinalChain(b.clone()),
        PosetDescriptor::DenseInterval => PosetDescriptor::DenseInterval,
        PosetDescriptor::DisjointSum(parts) => {
            PosetDescriptor::DisjointSum(parts.iter().map(order_dual).collect())
        }
        PosetDescriptor::OrderDual(inner) => (**inner).clone(),
    }
}

fn finite_deviation(
    elements: &[String],
    covers: &[(String, String)],
) -> Result<DeviationResult, DeviationError> {
    let n = elements.len();
    let index = |label: &str| -> Result<usize, DeviationError> {
        elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| DeviationError::InvalidPoset(format!("unknown element `{label}`")))
    };
    for (i, e) in elements.iter().enumerate() {
        if elements[i + 1..].contains(e) {
            return Err(DeviationError::InvalidPoset(format!(
                "duplicate element `{e}`"
            )));
        }
    }

    // Reflexive-transitive closure of the covering relation.
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in covers {
        let (i, j) = (index(a)?, index(b)?);
        reach[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            if i != j && reach[i][j] && reach[j][i] {
                return Err(DeviationError::InvalidPoset(format!(
                    "not antisymmetric: `{}` and `{}` are mutually comparable",
                    elements[i], elements[j]
                )));
            }
        }
    }

    let comparable_pair = (0..n).any(|i| (0..n).any(|j| i != j && reach[i][j]));
    if comparable_pair {
        Ok(DeviationResult::Value(Ordinal::zero()))
    } else {
        Ok(DeviationResult::MinusOne)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn finite(elements: &[&str], covers: &[(&str, &str)]) -> PosetDescriptor {
        PosetDescriptor::Finite {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            covers: covers
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    #[test]
    fn antichain_is_trivial() {
        let p = finite(&["a", "b"], &[]);
        assert_eq!(deviation(&p), Ok(DeviationResult::MinusOne));
    }

    #[test]
    fn chains_satisfy_dcc() {
        assert_eq!(
            deviation(&PosetDescriptor::OrdinalChain(ord("5"))),
            Ok(DeviationResult::Value(Ordinal::zero()))
        );
        let chain4 = finite(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]);
        assert_eq!(
            submodule_lattice_krull(&chain4),
            Ok(DeviationResult::Value(Ordinal::zero()))
        );
        let singleton = finite(&["0"], &[]);
        assert_eq!(
            submodule_lattice_krull(&singleton),
            Ok(DeviationResult::MinusOne)
        );
    }

    #[test]
    fn dense_is_undefined() {
        assert_eq!(
            deviation(&PosetDescriptor::DenseInterval),
            Ok(DeviationResult::Undefined)
        );
    }

    #[test]
    fn reversed_chains() {
        for (beta, expect) in [("w", "1"), ("w^2", "2"), ("w + 1", "1"), ("w^2 + w", "2")] {
            assert_eq!(
                deviation(&PosetDescriptor::ReversedOrdinalChain(ord(beta))),
                Ok(DeviationResult::Value(ord(expect))),
                "beta = {beta}"
            );
        }
        assert_eq!(
            deviation(&PosetDescriptor::ReversedOrdinalChain(ord("1"))),
            Ok(DeviationResult::MinusOne)
        );
        assert_eq!(
            deviation(&PosetDescriptor::ReversedOrdinalChain(ord("4"))),
            Ok(DeviationResult::Value(Ordinal::zero()))
        );
    }

    #[test]
    fn submodule_lattice_of_uniserial_weight_module() {
        // Lattice of a module whose proper submodules form one descending
        // chain of type ω plus the bottom: deviation 1.
        assert_eq!(
            submodule_lattice_krull(&PosetDescriptor::ReversedOrdinalChain(ord("w + 1"))),
            Ok(DeviationResult::Value(ord("1")))
        );
    }

    #[test]
    fn disjoint_sum_takes_max() {
        let p = PosetDescriptor::DisjointSum(vec![
            PosetDescriptor::ReversedOrdinalChain(ord("w")),
            PosetDescriptor::OrdinalChain(ord("w")),
            finite(&["x"], &[]),
        ]);
        assert_eq!(deviation(&p), Ok(DeviationResult::Value(ord("1"))));
        assert!(matches!(
            deviation(&PosetDescriptor::DisjointSum(vec![])),
            Err(DeviationError::InvalidPoset(_))
        ));
        let with_dense = PosetDescriptor::DisjointSum(vec![
            PosetDescriptor::DenseInterval,
            PosetDescriptor::OrdinalChain(ord("w")),
        ]);
        assert_eq!(deviation(&with_dense), Ok(DeviationResult::Undefined));
    }

    #[test]
    fn order_dual_swaps_chains() {
        let p = PosetDescriptor::OrderDual(Box::new(PosetDescriptor::OrdinalChain(ord("w^2"))));
        assert_eq!(deviation(&p), Ok(DeviationResult::Value(ord("2"))));
        let q = PosetDescriptor::OrderDual(Box::new(p.clone()));
        assert_eq!(deviation(&q), deviation(&PosetDescriptor::OrdinalChain(ord("w^2"))));
    }

    #[test]
    fn rejects_non_antisymmetric_covers() {
        let p = finite(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert!(matches!(deviation(&p), Err(DeviationError::InvalidPoset(_))));
    }
}
