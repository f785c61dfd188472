use std::collections::BTreeSet;

use super::structure::GammaSemiring;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::Label;

/// Default bound on `|S|` for subset enumeration.
pub const DEFAULT_MAX_CARRIER: usize = 12;

/// Environment variable overriding [`DEFAULT_MAX_CARRIER`].
pub const MAX_CARRIER_ENV: &str = "SOFTGAMMA_MAX_CARRIER";

pub fn max_carrier() -> usize {
    std::env::var(MAX_CARRIER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CARRIER)
}

/// Why a subset fails to be a sub-Γ-semiring. Positions refer to `S`/`Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureFailure {
    Empty,
    Additive { a: usize, b: usize, sum: usize },
    Product { a: usize, gamma: usize, b: usize, result: usize },
}

impl ClosureFailure {
    pub fn kind(&self) -> &'static str {
        match self {
            ClosureFailure::Empty => "empty",
            ClosureFailure::Additive { .. } => "additive",
            ClosureFailure::Product { .. } => "product",
        }
    }

    /// Witness labels: `(a, b, a+b)` or `(a, α, b, aαb)`.
    pub fn witness(&self, gs: &GammaSemiring) -> Vec<Label> {
        let s = |p: usize| gs.elements().label(p).clone();
        match *self {
            ClosureFailure::Empty => vec![],
            ClosureFailure::Additive { a, b, sum } => vec![s(a), s(b), s(sum)],
            ClosureFailure::Product { a, gamma, b, result } => {
                vec![s(a), gs.gamma().label(gamma).clone(), s(b), s(result)]
            }
        }
    }
}

/// First closure failure of `t`, scanning sums before products, each in
/// lexicographic order.
pub fn closure_failure(gs: &GammaSemiring, t: &ElemSet) -> Option<ClosureFailure> {
    if t.is_empty() {
        return Some(ClosureFailure::Empty);
    }
    let members: Vec<usize> = t.iter().collect();
    for &a in &members {
        for &b in &members {
            let sum = gs.add(a, b);
            if !t.contains(sum) {
                return Some(ClosureFailure::Additive { a, b, sum });
            }
        }
    }
    for &a in &members {
        for gamma in 0..gs.gamma_len() {
            for &b in &members {
                let result = gs.product(a, gamma, b);
                if !t.contains(result) {
                    return Some(ClosureFailure::Product { a, gamma, b, result });
                }
            }
        }
    }
    None
}

/// Nonempty, closed under `+`, and closed under `aαb` for every `α ∈ Γ`.
/// The empty set is never a sub-Γ-semiring.
pub fn is_sub_gamma_semiring(gs: &GammaSemiring, t: &ElemSet) -> bool {
    t.domain() == gs.len() && closure_failure(gs, t).is_none()
}

pub fn is_sub_gamma_semiring_labels(gs: &GammaSemiring, labels: &[Label]) -> Result<bool> {
    let set = subset_from_labels(gs, labels)?;
    Ok(is_sub_gamma_semiring(gs, &set))
}

pub fn subset_from_labels(gs: &GammaSemiring, labels: &[Label]) -> Result<ElemSet> {
    let mut set = ElemSet::empty(gs.len());
    for l in labels {
        set.insert(gs.elements().require(l, "S")?);
    }
    Ok(set)
}

/// Smallest sub-Γ-semiring containing `seed` (or the empty set for an empty seed).
pub fn generated_by(gs: &GammaSemiring, seed: &ElemSet) -> ElemSet {
    let mut set = seed.clone();
    let mut members: Vec<usize> = set.iter().collect();
    let mut frontier = 0;
    // Every new element is combined with all earlier ones exactly once.
    while frontier < members.len() {
        let x = members[frontier];
        frontier += 1;
        let mut i = 0;
        while i < frontier {
            let y = members[i];
            i += 1;
            let mut candidates = vec![gs.add(x, y)];
            for gamma in 0..gs.gamma_len() {
                candidates.push(gs.product(x, gamma, y));
                candidates.push(gs.product(y, gamma, x));
            }
            for c in candidates {
                if set.insert(c) {
                    members.push(c);
                }
            }
        }
    }
    set
}

/// All sub-Γ-semirings in sorted-bitmask order, refusing carriers larger
/// than [`max_carrier`].
pub fn enumerate_sub_gamma_semirings(gs: &GammaSemiring) -> Result<Vec<ElemSet>> {
    enumerate_sub_gamma_semirings_bounded(gs, max_carrier())
}

/// Builds the lattice of sub-Γ-semirings by repeatedly adjoining one element
/// to a known subalgebra and closing, starting from the singly generated ones.
pub fn enumerate_sub_gamma_semirings_bounded(
    gs: &GammaSemiring,
    bound: usize,
) -> Result<Vec<ElemSet>> {
    let n = gs.len();
    if n > bound {
        return Err(Error::CarrierTooLarge { size: n, bound });
    }
    let mut found = BTreeSet::new();
    let mut queue = Vec::new();
    for x in 0..n {
        let c = generated_by(gs, &ElemSet::singleton(n, x));
        if found.insert(c.clone()) {
            queue.push(c);
        }
    }
    while let Some(t) = queue.pop() {
        for x in 0..n {
            if t.contains(x) {
                continue;
            }
            let mut seed = t.clone();
            seed.insert(x);
            let c = generated_by(gs, &seed);
            if found.insert(c.clone()) {
                queue.push(c);
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generators::make_zn_gamma;

    #[test]
    fn generated_closure_in_z8() {
        let z8 = make_zn_gamma(8, &[2, 4, 6], false).unwrap();
        let c = generated_by(&z8, &ElemSet::singleton(8, 2));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 2, 4, 6]);
        let c = generated_by(&z8, &ElemSet::singleton(8, 1));
        assert!(c.is_full());
        assert!(generated_by(&z8, &ElemSet::empty(8)).is_empty());
    }

    #[test]
    fn closure_failure_witnesses() {
        let z8 = make_zn_gamma(8, &[2, 4, 6], false).unwrap();
        let t = ElemSet::from_positions(8, [0, 3]);
        assert_eq!(
            closure_failure(&z8, &t),
            Some(ClosureFailure::Additive { a: 3, b: 3, sum: 6 })
        );
        assert_eq!(closure_failure(&z8, &ElemSet::empty(8)), Some(ClosureFailure::Empty));
    }

    #[test]
    fn size_bound_refuses() {
        let z13 = make_zn_gamma(13, &[1], false).unwrap();
        assert!(matches!(
            enumerate_sub_gamma_semirings_bounded(&z13, 12),
            Err(Error::CarrierTooLarge { size: 13, bound: 12 })
        ));
        assert_eq!(enumerate_sub_gamma_semirings_bounded(&z13, 13).unwrap().len(), 2);
    }
}
