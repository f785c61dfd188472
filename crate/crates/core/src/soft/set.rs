use indexmap::IndexMap;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::{Label, Universe};

/// A soft set `(ρ, W)` over a finite universe `V`: each parameter in `W`
/// is assigned a subset of `V`. Parameters keep their insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftSet {
    universe: Universe,
    values: IndexMap<Label, ElemSet>,
}

impl SoftSet {
    pub fn new(universe: Universe, entries: impl IntoIterator<Item = (Label, ElemSet)>) -> Result<Self> {
        let mut values = IndexMap::new();
        for (param, set) in entries {
            if set.domain() != universe.len() {
                return Err(Error::UniverseMismatch);
            }
            if values.contains_key(&param) {
                return Err(Error::DuplicateLabel {
                    kind: "parameter",
                    label: param,
                });
            }
            values.insert(param, set);
        }
        Ok(SoftSet { universe, values })
    }

    /// Builds a soft set from element labels.
    pub fn from_labels<P, E>(universe: &Universe, entries: impl IntoIterator<Item = (P, E)>) -> Result<Self>
    where
        P: Into<Label>,
        E: IntoIterator,
        E::Item: Into<Label>,
    {
        let mut out = Vec::new();
        for (p, elems) in entries {
            let mut set = ElemSet::empty(universe.len());
            for e in elems {
                set.insert(universe.require(&e.into(), "universe")?);
            }
            out.push((p.into(), set));
        }
        Self::new(universe.clone(), out)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> impl Iterator<Item = &Label> {
        self.values.keys()
    }

    pub fn parameter_list(&self) -> Vec<Label> {
        self.values.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &ElemSet)> {
        self.values.iter()
    }

    pub fn value(&self, param: &Label) -> Option<&ElemSet> {
        self.values.get(param)
    }

    pub fn has_parameter(&self, param: &Label) -> bool {
        self.values.contains_key(param)
    }

    pub fn parameter_index(&self, param: &Label) -> Option<usize> {
        self.values.get_index_of(param)
    }

    pub fn value_at(&self, index: usize) -> (&Label, &ElemSet) {
        self.values.get_index(index).expect("parameter index in range")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Universe labels of `ρ(param)`, in universe order.
    pub fn value_labels(&self, param: &Label) -> Option<Vec<Label>> {
        self.value(param)
            .map(|s| s.iter().map(|p| self.universe.label(p).clone()).collect())
    }

    /// No parameter has a nonempty value.
    pub fn is_null(&self) -> bool {
        self.values.values().all(ElemSet::is_empty)
    }

    /// The same assignment restricted to `params` (in the order given).
    pub fn restrict(&self, params: &[Label]) -> Result<SoftSet> {
        let entries = params
            .iter()
            .map(|p| {
                self.value(p)
                    .cloned()
                    .map(|v| (p.clone(), v))
                    .ok_or_else(|| Error::UnknownLabel {
                        kind: "parameter",
                        label: p.clone(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        SoftSet::new(self.universe.clone(), entries)
    }
}

/// Nonempty ordered family of soft sets over one universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedFamily {
    members: Vec<SoftSet>,
}

impl IndexedFamily {
    pub fn new(members: Vec<SoftSet>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyFamily)?;
        if members.iter().any(|m| m.universe() != first.universe()) {
            return Err(Error::UniverseMismatch);
        }
        Ok(IndexedFamily { members })
    }

    pub fn pair(a: &SoftSet, b: &SoftSet) -> Result<Self> {
        Self::new(vec![a.clone(), b.clone()])
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    pub fn universe(&self) -> &Universe {
        self.members[0].universe()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `{y ∈ W : ρ(y) ≠ ∅}`, in parameter order.
pub fn support(ss: &SoftSet) -> Vec<Label> {
    ss.iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(p, _)| p.clone())
        .collect()
}

/// `W_A ⊆ W_B` and `ρ_A(ω) ⊆ ρ_B(ω)` for every `ω ∈ W_A`.
pub fn is_soft_subset(a: &SoftSet, b: &SoftSet) -> Result<bool> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(a
        .iter()
        .all(|(p, v)| b.value(p).is_some_and(|w| v.is_subset(w))))
}

pub fn soft_equal(a: &SoftSet, b: &SoftSet) -> Result<bool> {
    Ok(is_soft_subset(a, b)? && is_soft_subset(b, a)?)
}

/// `N_W`: every value empty.
pub fn relative_null(universe: &Universe, params: &[Label]) -> Result<SoftSet> {
    SoftSet::new(
        universe.clone(),
        params.iter().map(|p| (p.clone(), ElemSet::empty(universe.len()))),
    )
}

/// `𝒲_W`: every value the whole universe.
pub fn relative_whole(universe: &Universe, params: &[Label]) -> Result<SoftSet> {
    SoftSet::new(
        universe.clone(),
        params.iter().map(|p| (p.clone(), ElemSet::full(universe.len()))),
    )
}
