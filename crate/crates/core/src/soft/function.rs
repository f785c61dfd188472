use super::set::SoftSet;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::{Label, Universe};

/// A pair `(f, g)` with `f: V₁ → V₂`, `g: W → Y` and `f(ρ(ω)) = σ(g(ω))`
/// for every `ω ∈ W`. Maps are stored as position tables: `g` maps source
/// parameter indices to target parameter indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftFunction {
    carrier_map: Vec<usize>,
    parameter_map: Vec<usize>,
    source: SoftSet,
    target: SoftSet,
}

fn image_set(f: &[usize], codomain: usize, set: &ElemSet) -> ElemSet {
    ElemSet::from_positions(codomain, set.iter().map(|x| f[x]))
}

fn preimage_set(f: &[usize], set: &ElemSet) -> ElemSet {
    ElemSet::from_positions(f.len(), (0..f.len()).filter(|&x| set.contains(f[x])))
}

fn check_carrier_map(f: &[usize], from: &Universe, to: &Universe) -> Result<()> {
    if f.len() != from.len() {
        return Err(Error::InvalidArgument(format!(
            "carrier map covers {} of {} universe elements",
            f.len(),
            from.len()
        )));
    }
    if f.iter().any(|&y| y >= to.len()) {
        return Err(Error::InvalidArgument("carrier map leaves the target universe".into()));
    }
    Ok(())
}

fn is_injective(map: &[usize], codomain: usize) -> bool {
    ElemSet::from_positions(codomain, map.iter().copied()).count() == map.len()
}

fn is_surjective(map: &[usize], codomain: usize) -> bool {
    ElemSet::from_positions(codomain, map.iter().copied()).count() == codomain
}

/// Verifies `f(ρ(ω)) = σ(g(ω))` for every parameter and builds the soft
/// function, or reports the first parameter where it fails.
pub fn make_soft_function(
    carrier_map: Vec<usize>,
    parameter_map: Vec<usize>,
    source: SoftSet,
    target: SoftSet,
) -> Result<SoftFunction> {
    check_carrier_map(&carrier_map, source.universe(), target.universe())?;
    if parameter_map.len() != source.len() || parameter_map.iter().any(|&y| y >= target.len()) {
        return Err(Error::InvalidArgument(
            "parameter map must send every source parameter to a target parameter".into(),
        ));
    }
    for (i, (param, value)) in source.iter().enumerate() {
        let mapped = image_set(&carrier_map, target.universe().len(), value);
        if &mapped != target.value_at(parameter_map[i]).1 {
            return Err(Error::IncompatibleSoftFunction {
                parameter: param.clone(),
            });
        }
    }
    Ok(SoftFunction {
        carrier_map,
        parameter_map,
        source,
        target,
    })
}

/// Label-keyed variant of [`make_soft_function`].
pub fn make_soft_function_by_labels(
    carrier_map: &[(Label, Label)],
    parameter_map: &[(Label, Label)],
    source: SoftSet,
    target: SoftSet,
) -> Result<SoftFunction> {
    let mut f = vec![None; source.universe().len()];
    for (x, y) in carrier_map {
        let xi = source.universe().require(x, "source universe")?;
        f[xi] = Some(target.universe().require(y, "target universe")?);
    }
    let f = f
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidArgument("carrier map is not total".into()))?;
    let mut g = vec![None; source.len()];
    for (w, y) in parameter_map {
        let wi = source.parameter_index(w).ok_or_else(|| Error::UnknownLabel {
            kind: "parameter",
            label: w.clone(),
        })?;
        g[wi] = Some(target.parameter_index(y).ok_or_else(|| Error::UnknownLabel {
            kind: "parameter",
            label: y.clone(),
        })?);
    }
    let g = g
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidArgument("parameter map is not total".into()))?;
    make_soft_function(f, g, source, target)
}

impl SoftFunction {
    pub fn identity(ss: &SoftSet) -> Self {
        SoftFunction {
            carrier_map: (0..ss.universe().len()).collect(),
            parameter_map: (0..ss.len()).collect(),
            source: ss.clone(),
            target: ss.clone(),
        }
    }

    pub fn source(&self) -> &SoftSet {
        &self.source
    }

    pub fn target(&self) -> &SoftSet {
        &self.target
    }

    pub fn carrier_map(&self) -> &[usize] {
        &self.carrier_map
    }

    pub fn parameter_map(&self) -> &[usize] {
        &self.parameter_map
    }

    /// `g(ω)` as a target parameter label.
    pub fn map_parameter(&self, index: usize) -> &Label {
        self.target.value_at(self.parameter_map[index]).0
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.carrier_map, self.target.universe().len())
            && is_injective(&self.parameter_map, self.target.len())
    }

    pub fn is_surjective(&self) -> bool {
        is_surjective(&self.carrier_map, self.target.universe().len())
            && is_surjective(&self.parameter_map, self.target.len())
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Image of a soft subset of the source along `(f, g)`, over the target's
    /// parameters.
    pub fn image_of(&self, subset: &SoftSet) -> Result<SoftSet> {
        if subset.universe() != self.source.universe() {
            return Err(Error::UniverseMismatch);
        }
        let codomain = self.target.universe().len();
        let mut values: Vec<ElemSet> = vec![ElemSet::empty(codomain); self.target.len()];
        for (param, value) in subset.iter() {
            let i = self
                .source
                .parameter_index(param)
                .ok_or_else(|| Error::UnknownLabel {
                    kind: "parameter",
                    label: param.clone(),
                })?;
            values[self.parameter_map[i]].union_with(&image_set(&self.carrier_map, codomain, value));
        }
        SoftSet::new(
            self.target.universe().clone(),
            self.target.parameters().cloned().zip(values).collect::<Vec<_>>(),
        )
    }

    /// Pre-image of a soft set over the target universe with the target's
    /// parameters, over the source parameters.
    pub fn preimage_of(&self, sigma: &SoftSet) -> Result<SoftSet> {
        let g: Vec<Label> = (0..self.source.len())
            .map(|i| self.map_parameter(i).clone())
            .collect();
        soft_preimage(
            self.source.universe(),
            &self.carrier_map,
            &self.source.parameter_list(),
            &g,
            sigma,
        )
    }
}

/// `(f′∘f, g′∘g)`. The middle soft sets must coincide.
pub fn compose_soft_functions(first: &SoftFunction, second: &SoftFunction) -> Result<SoftFunction> {
    if first.target != second.source {
        return Err(Error::SoftFunctionChainMismatch);
    }
    let f = first
        .carrier_map
        .iter()
        .map(|&y| second.carrier_map[y])
        .collect();
    let g = (0..first.source.len())
        .map(|i| {
            let mid = second
                .source
                .parameter_index(first.map_parameter(i))
                .expect("equal soft sets share parameters");
            second.parameter_map[mid]
        })
        .collect();
    make_soft_function(f, g, first.source.clone(), second.target.clone())
}

/// Over `Y`: at `y` in the image of `g`, the union of `f(ρ(ω))` over the
/// fiber `g(ω) = y`; empty elsewhere.
pub fn soft_image(fg: &SoftFunction) -> SoftSet {
    fg.image_of(&fg.source).expect("source is a soft subset of itself")
}

/// Over `W`: the value at `ω` is `f⁻¹(σ(g(ω)))`.
pub fn soft_preimage(
    source_universe: &Universe,
    carrier_map: &[usize],
    params: &[Label],
    parameter_map: &[Label],
    target: &SoftSet,
) -> Result<SoftSet> {
    check_carrier_map(carrier_map, source_universe, target.universe())?;
    if parameter_map.len() != params.len() {
        return Err(Error::InvalidArgument("parameter map is not total".into()));
    }
    let entries = params
        .iter()
        .zip(parameter_map)
        .map(|(w, y)| {
            let sigma = target.value(y).ok_or_else(|| Error::UnknownLabel {
                kind: "parameter",
                label: y.clone(),
            })?;
            Ok((w.clone(), preimage_set(carrier_map, sigma)))
        })
        .collect::<Result<Vec<_>>>()?;
    SoftSet::new(source_universe.clone(), entries)
}
