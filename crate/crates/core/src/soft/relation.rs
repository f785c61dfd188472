use super::set::SoftSet;
use crate::algebra::GammaSemiring;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::{Label, Universe};

/// A membership table over `N × Γ × S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryRelation {
    params: Universe,
    gamma: Universe,
    elements: Universe,
    table: ElemSet,
}

impl TernaryRelation {
    pub fn empty(params: Universe, gamma: Universe, elements: Universe) -> Self {
        let size = params.len() * gamma.len() * elements.len();
        TernaryRelation {
            params,
            gamma,
            elements,
            table: ElemSet::empty(size),
        }
    }

    pub fn full(params: Universe, gamma: Universe, elements: Universe) -> Self {
        let mut rel = Self::empty(params, gamma, elements);
        rel.table = ElemSet::full(rel.table.domain());
        rel
    }

    /// The relation `{(y, α, s) : pred(y, α, s)}` on positions.
    pub fn from_fn(
        params: Universe,
        gamma: Universe,
        elements: Universe,
        pred: impl Fn(usize, usize, usize) -> bool,
    ) -> Self {
        let mut rel = Self::empty(params, gamma, elements);
        for y in 0..rel.params.len() {
            for al in 0..rel.gamma.len() {
                for s in 0..rel.elements.len() {
                    if pred(y, al, s) {
                        let i = rel.index(y, al, s);
                        rel.table.insert(i);
                    }
                }
            }
        }
        rel
    }

    /// Builds the relation from label triples; unknown labels are errors.
    pub fn from_triples<'a>(
        params: Universe,
        gamma: Universe,
        elements: Universe,
        triples: impl IntoIterator<Item = &'a (Label, Label, Label)>,
    ) -> Result<Self> {
        let mut rel = Self::empty(params, gamma, elements);
        for (y, al, s) in triples {
            let i = rel.index(
                rel.params.require(y, "relation parameter")?,
                rel.gamma.require(al, "gamma")?,
                rel.elements.require(s, "element")?,
            );
            rel.table.insert(i);
        }
        Ok(rel)
    }

    fn index(&self, y: usize, al: usize, s: usize) -> usize {
        (y * self.gamma.len() + al) * self.elements.len() + s
    }

    pub fn params(&self) -> &Universe {
        &self.params
    }

    pub fn gamma(&self) -> &Universe {
        &self.gamma
    }

    pub fn elements(&self) -> &Universe {
        &self.elements
    }

    pub fn contains(&self, y: usize, al: usize, s: usize) -> bool {
        self.table.contains(self.index(y, al, s))
    }

    /// Member triples as labels, ordered by `(y, α, s)` positions.
    pub fn triples(&self) -> Vec<(Label, Label, Label)> {
        let per_y = self.gamma.len() * self.elements.len();
        self.table
            .iter()
            .map(|i| {
                let (y, rest) = (i / per_y, i % per_y);
                let (al, s) = (rest / self.elements.len(), rest % self.elements.len());
                (
                    self.params.label(y).clone(),
                    self.gamma.label(al).clone(),
                    self.elements.label(s).clone(),
                )
            })
            .collect()
    }
}

/// `ψ(y) = {s ∈ S : (y, α, s) ∈ R for every α ∈ Γ}` over the parameters `N`.
pub fn soft_set_from_relation(rel: &TernaryRelation, gs: &GammaSemiring) -> Result<SoftSet> {
    if rel.gamma != *gs.gamma() {
        return Err(Error::GammaMismatch);
    }
    if rel.elements != *gs.elements() {
        return Err(Error::UniverseMismatch);
    }
    let n = gs.len();
    let entries = (0..rel.params.len()).map(|y| {
        let value = ElemSet::from_positions(
            n,
            (0..n).filter(|&s| (0..rel.gamma.len()).all(|al| rel.contains(y, al, s))),
        );
        (rel.params.label(y).clone(), value)
    });
    SoftSet::new(gs.elements().clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zn_gamma;

    #[test]
    fn universal_not_existential() {
        let z4 = make_zn_gamma(4, &[1, 2], false).unwrap();
        let n = Universe::from_strs(["y"]).unwrap();
        // s = 1 is related under α = 1 only.
        let rel = TernaryRelation::from_fn(n, z4.gamma().clone(), z4.elements().clone(), |_, al, s| {
            s == 0 || (s == 1 && al == 0)
        });
        let ss = soft_set_from_relation(&rel, &z4).unwrap();
        assert_eq!(ss.value_at(0).1.iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn full_and_empty() {
        let z4 = make_zn_gamma(4, &[1, 2], false).unwrap();
        let n = Universe::from_strs(["a", "b"]).unwrap();
        let full = TernaryRelation::full(n.clone(), z4.gamma().clone(), z4.elements().clone());
        assert!(soft_set_from_relation(&full, &z4).unwrap().iter().all(|(_, v)| v.is_full()));
        let empty = TernaryRelation::empty(n, z4.gamma().clone(), z4.elements().clone());
        assert!(soft_set_from_relation(&empty, &z4).unwrap().is_null());
    }

    #[test]
    fn dimension_mismatch() {
        let z4 = make_zn_gamma(4, &[1, 2], false).unwrap();
        let z5 = make_zn_gamma(5, &[1, 2], false).unwrap();
        let n = Universe::from_strs(["a"]).unwrap();
        let rel = TernaryRelation::full(n, z5.gamma().clone(), z5.elements().clone());
        assert!(matches!(soft_set_from_relation(&rel, &z4), Err(Error::UniverseMismatch)));
    }

    #[test]
    fn triples_round_trip() {
        let z4 = make_zn_gamma(4, &[1, 2], false).unwrap();
        let n = Universe::from_strs(["a", "b"]).unwrap();
        let rel = TernaryRelation::from_fn(n.clone(), z4.gamma().clone(), z4.elements().clone(), |y, al, s| {
            (y + al + s) % 3 == 0
        });
        let triples = rel.triples();
        let again =
            TernaryRelation::from_triples(n, z4.gamma().clone(), z4.elements().clone(), &triples).unwrap();
        assert_eq!(rel, again);
    }
}
