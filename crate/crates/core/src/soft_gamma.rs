//! Soft Γ-semirings: the defining predicate, trivial and whole soft
//! Γ-semirings, homomorphic images and pre-images, soft sub-Γ-semirings and
//! soft Γ-semiring homomorphisms.

use serde::Serialize;

use crate::algebra::{closure_failure, is_gamma_homomorphism, GammaHom, GammaSemiring};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::soft::SoftSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// The soft set has empty support.
    Null,
    /// A support value is not closed; `closure` is `additive` or `product`.
    Closure { closure: String, witness: Vec<Label> },
    /// A parameter of the inner soft set is missing from the outer one.
    ParameterNotContained,
    /// An element of the inner value is missing from the outer value.
    ValueNotContained { element: Label },
}

/// Verdict of a soft Γ-semiring style predicate plus the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubGammaWitness {
    pub verdict: bool,
    pub failing_parameter: Option<Label>,
    pub failing_reason: Option<FailureReason>,
}

impl SubGammaWitness {
    fn pass() -> Self {
        SubGammaWitness {
            verdict: true,
            failing_parameter: None,
            failing_reason: None,
        }
    }

    fn fail(parameter: Option<Label>, reason: FailureReason) -> Self {
        SubGammaWitness {
            verdict: false,
            failing_parameter: parameter,
            failing_reason: Some(reason),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

fn require_universe(gs: &GammaSemiring, ss: &SoftSet) -> Result<()> {
    if ss.universe() != gs.elements() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

/// Non-null, and every support value is a sub-Γ-semiring of `gs`.
pub fn is_soft_gamma_semiring(gs: &GammaSemiring, ss: &SoftSet) -> Result<SubGammaWitness> {
    require_universe(gs, ss)?;
    if ss.is_null() {
        return Ok(SubGammaWitness::fail(None, FailureReason::Null));
    }
    for (param, value) in ss.iter().filter(|(_, v)| !v.is_empty()) {
        if let Some(failure) = closure_failure(gs, value) {
            return Ok(SubGammaWitness::fail(
                Some(param.clone()),
                FailureReason::Closure {
                    closure: failure.kind().to_string(),
                    witness: failure.witness(gs),
                },
            ));
        }
    }
    Ok(SubGammaWitness::pass())
}

/// A soft set over `S` known to be a soft Γ-semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftGammaSemiring {
    base: GammaSemiring,
    soft: SoftSet,
}

impl SoftGammaSemiring {
    pub fn new(base: GammaSemiring, soft: SoftSet) -> Result<Self> {
        let witness = is_soft_gamma_semiring(&base, &soft)?;
        if !witness.verdict {
            return Err(Error::NotSoftGammaSemiring(witness.to_json()));
        }
        Ok(SoftGammaSemiring { base, soft })
    }

    pub fn base(&self) -> &GammaSemiring {
        &self.base
    }

    pub fn soft(&self) -> &SoftSet {
        &self.soft
    }
}

/// Every value is `{0}`.
pub fn is_trivial_soft(gs: &GammaSemiring, ss: &SoftSet) -> Result<bool> {
    require_universe(gs, ss)?;
    let zero = gs.zero().ok_or(Error::MissingZero)?;
    let trivial = ElemSet::singleton(gs.len(), zero);
    Ok(ss.iter().all(|(_, v)| *v == trivial))
}

/// Every value is `S`.
pub fn is_whole_soft(gs: &GammaSemiring, ss: &SoftSet) -> Result<bool> {
    require_universe(gs, ss)?;
    Ok(ss.iter().all(|(_, v)| v.is_full()))
}

/// `f(ρ)(ω) = f(ρ(ω))` over the same parameters. With `onto` set the map
/// must be surjective.
pub fn soft_image_under_hom(hom: &GammaHom, ss: &SoftSet, onto: bool) -> Result<SoftSet> {
    require_universe(hom.source(), ss)?;
    if onto && !hom.is_surjective() {
        return Err(Error::NotOnto);
    }
    SoftSet::new(
        hom.target().elements().clone(),
        ss.iter().map(|(p, v)| (p.clone(), hom.image(v))),
    )
}

/// `f⁻¹(σ)(y) = f⁻¹(σ(y))` over the same parameters.
pub fn soft_preimage_under_hom(hom: &GammaHom, ss: &SoftSet) -> Result<SoftSet> {
    require_universe(hom.target(), ss)?;
    SoftSet::new(
        hom.source().elements().clone(),
        ss.iter().map(|(p, v)| (p.clone(), hom.preimage(v))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

/// The four trivial/whole cases for homomorphic images and pre-images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrivialWholeCase {
    /// `ρ(ω) = ker f` for all ω ⇒ `f(ρ)` trivial over `S′`.
    KernelImage,
    /// `f` onto and `ρ` whole ⇒ `f(ρ)` whole over `S′`.
    OntoWholeImage,
    /// `σ(y) = f(S)` for all y ⇒ `f⁻¹(σ)` whole over `S`.
    ImagePreimage,
    /// `f` injective and `σ` trivial ⇒ `f⁻¹(σ)` trivial over `S`.
    InjectiveTrivialPreimage,
}

/// `ss` lives over the source for the two image cases and over the target
/// for the two pre-image cases. Unmet hypotheses give [`Verdict::Vacuous`].
pub fn check_trivial_whole_theorem(
    hom: &GammaHom,
    ss: &SoftSet,
    case: TrivialWholeCase,
) -> Result<Verdict> {
    check_trivial_whole_theorem_with(hom, ss, case, true)
}

/// As [`check_trivial_whole_theorem`]; with `enforce_case` false only the
/// soft Γ-semiring hypothesis is checked and the case's own hypothesis is
/// ignored.
pub fn check_trivial_whole_theorem_with(
    hom: &GammaHom,
    ss: &SoftSet,
    case: TrivialWholeCase,
    enforce_case: bool,
) -> Result<Verdict> {
    use TrivialWholeCase::*;
    let (base, image_side) = match case {
        KernelImage | OntoWholeImage => (hom.source(), true),
        ImagePreimage | InjectiveTrivialPreimage => (hom.target(), false),
    };
    if !is_soft_gamma_semiring(base, ss)?.verdict {
        return Ok(Verdict::Vacuous);
    }
    let hypothesis = !enforce_case || match case {
        KernelImage => match hom.kernel() {
            Ok(ker) => ss.iter().all(|(_, v)| *v == ker),
            Err(_) => false,
        },
        OntoWholeImage => hom.is_surjective() && is_whole_soft(base, ss)?,
        ImagePreimage => {
            let fs = hom.carrier_image();
            ss.iter().all(|(_, v)| *v == fs)
        }
        // f⁻¹({0′}) is empty unless 0′ ∈ f(S)
        InjectiveTrivialPreimage => {
            hom.is_injective()
                && base.zero().is_some_and(|z| hom.carrier_image().contains(z))
                && is_trivial_soft(base, ss)?
        }
    };
    if enforce_case && !hypothesis {
        return Ok(Verdict::Vacuous);
    }
    let (result, over) = if image_side {
        (soft_image_under_hom(hom, ss, false)?, hom.target())
    } else {
        (soft_preimage_under_hom(hom, ss)?, hom.source())
    };
    let shape = match case {
        KernelImage | InjectiveTrivialPreimage => {
            over.zero().is_some() && is_trivial_soft(over, &result)?
        }
        OntoWholeImage | ImagePreimage => is_whole_soft(over, &result)?,
    };
    let holds = shape && is_soft_gamma_semiring(over, &result)?.verdict;
    Ok(if holds { Verdict::Pass } else { Verdict::Fail })
}

/// Conditions (i) `Y ⊆ W` and (ii) for the inner soft set, without asking
/// the outer soft set to be a soft Γ-semiring. The inner one must be.
pub fn soft_sub_conditions(gs: &GammaSemiring, inner: &SoftSet, outer: &SoftSet) -> Result<SubGammaWitness> {
    require_universe(gs, outer)?;
    let own = is_soft_gamma_semiring(gs, inner)?;
    if !own.verdict {
        return Ok(own);
    }
    if let Some(p) = inner.parameters().find(|p| !outer.has_parameter(p)) {
        return Ok(SubGammaWitness::fail(
            Some(p.clone()),
            FailureReason::ParameterNotContained,
        ));
    }
    for (param, value) in inner.iter().filter(|(_, v)| !v.is_empty()) {
        let host = outer.value(param).expect("checked above");
        if let Some(x) = value.iter().find(|&x| !host.contains(x)) {
            return Ok(SubGammaWitness::fail(
                Some(param.clone()),
                FailureReason::ValueNotContained {
                    element: gs.elements().label(x).clone(),
                },
            ));
        }
    }
    Ok(SubGammaWitness::pass())
}

/// `inner ⊂_Γs outer`. Both arguments must be soft Γ-semirings; otherwise
/// the error carries the failing witness.
///
/// A value closed in `S` and contained in `ρ(y)` is closed in `ρ(y)`, so
/// condition (ii) reduces to containment plus closure in `S`.
pub fn is_soft_sub_gamma_semiring(
    gs: &GammaSemiring,
    inner: &SoftSet,
    outer: &SoftSet,
) -> Result<SubGammaWitness> {
    for (role, ss) in [("inner", inner), ("outer", outer)] {
        let w = is_soft_gamma_semiring(gs, ss)?;
        if !w.verdict {
            return Err(Error::NotSoftGammaSemiring(format!("{role}: {}", w.to_json())));
        }
    }
    soft_sub_conditions(gs, inner, outer)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomCondition {
    /// `f` is not a surjective Γ-homomorphism between the carriers.
    Epimorphism,
    /// `g` is not onto the target parameters.
    ParameterSurjection,
    /// `f(ρ(y)) ≠ σ(g(y))` at some parameter.
    Compatibility,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoftHomReport {
    pub verdict: bool,
    pub failing_condition: Option<HomCondition>,
    pub failing_parameter: Option<Label>,
}

/// `(f, g)` with `f` an epimorphism of the carriers, `g: W → Y` onto, and
/// `f(ρ(y)) = σ(g(y))` for every `y ∈ W`. `g` maps source parameter
/// indices to target parameter indices.
pub fn is_soft_gamma_homomorphism(
    f: &[usize],
    g: &[usize],
    source: &SoftGammaSemiring,
    target: &SoftGammaSemiring,
) -> SoftHomReport {
    let fail = |c, p: Option<&Label>| SoftHomReport {
        verdict: false,
        failing_condition: Some(c),
        failing_parameter: p.cloned(),
    };
    let (s, t) = (source.base(), target.base());
    let is_hom = is_gamma_homomorphism(f, s, t).unwrap_or(false);
    if !is_hom || !ElemSet::from_positions(t.len(), f.iter().copied()).is_full() {
        return fail(HomCondition::Epimorphism, None);
    }
    let (rho, sigma) = (source.soft(), target.soft());
    if g.len() != rho.len() || g.iter().any(|&y| y >= sigma.len()) {
        return fail(HomCondition::ParameterSurjection, None);
    }
    if ElemSet::from_positions(sigma.len(), g.iter().copied()).count() != sigma.len() {
        return fail(HomCondition::ParameterSurjection, None);
    }
    for (i, (param, value)) in rho.iter().enumerate() {
        let image = ElemSet::from_positions(t.len(), value.iter().map(|x| f[x]));
        if &image != sigma.value_at(g[i]).1 {
            return fail(HomCondition::Compatibility, Some(param));
        }
    }
    SoftHomReport {
        verdict: true,
        failing_condition: None,
        failing_parameter: None,
    }
}
