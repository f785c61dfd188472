use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::spec::{BaseDescriptor, CaseShape, HomPolicy, InstanceSpec, Layout, ParameterPolicy, ValuePolicy};
use crate::algebra::{
    enumerate_sub_gamma_semirings, find_homomorphisms, make_zn_gamma, GammaHom, GammaSemiring,
};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::soft::SoftSet;

/// Cap on endomorphisms collected per base.
pub const HOM_SEARCH_LIMIT: usize = 64;

/// A generated trial: the base structure and the soft sets a theorem talks
/// about. Which fields are populated depends on the layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub descriptor: BaseDescriptor,
    pub base: GammaSemiring,
    pub family: Vec<SoftSet>,
    pub outer: Option<SoftSet>,
    pub hom: Option<GammaHom>,
    pub factors: Vec<GammaSemiring>,
}

fn generation(msg: impl Into<String>) -> Error {
    Error::Generation(msg.into())
}

/// Candidate homomorphisms out of `base`: its endomorphisms, the map onto
/// the one-element structure, and reductions `ℤₙ → ℤₘ` for `m | n` when Γ
/// fits inside `ℤₘ`.
pub fn hom_candidates(desc: &BaseDescriptor, base: &GammaSemiring) -> Result<Vec<GammaHom>> {
    let mut out = Vec::new();
    for map in find_homomorphisms(base, base, HOM_SEARCH_LIMIT)? {
        out.push(GammaHom::new(base.clone(), base.clone(), map)?);
    }
    out.push(GammaHom::new(
        base.clone(),
        GammaSemiring::trivial(base.gamma()),
        vec![0; base.len()],
    )?);
    if let BaseDescriptor::Zn { n, gamma, strict } = desc {
        let top = gamma.iter().max().copied().unwrap_or(0);
        for m in (2..*n).filter(|m| n % m == 0 && top < *m) {
            let target = make_zn_gamma(m, gamma, *strict)?.with_name(
                BaseDescriptor::Zn {
                    n: m,
                    gamma: gamma.clone(),
                    strict: *strict,
                }
                .to_string(),
            );
            out.push(GammaHom::new(base.clone(), target, (0..*n).map(|x| x % m).collect())?);
        }
    }
    Ok(out)
}

fn draw_hom(
    rng: &mut ChaCha8Rng,
    desc: &BaseDescriptor,
    base: &GammaSemiring,
    policy: HomPolicy,
) -> Result<GammaHom> {
    let candidates: Vec<GammaHom> = hom_candidates(desc, base)?
        .into_iter()
        .filter(|h| match policy {
            HomPolicy::Any => true,
            HomPolicy::Onto => h.is_surjective(),
            HomPolicy::Injective => h.is_injective(),
        })
        .collect();
    candidates
        .choose(rng)
        .cloned()
        .ok_or_else(|| generation(format!("no {policy:?} homomorphism out of {}", base.name())))
}

/// One random maximal ⊆-chain among `subs`.
fn random_chain(rng: &mut ChaCha8Rng, subs: &[ElemSet]) -> Vec<ElemSet> {
    let mut chain: Vec<ElemSet> = Vec::new();
    loop {
        let open: Vec<&ElemSet> = subs
            .iter()
            .filter(|t| {
                !chain.contains(t) && chain.iter().all(|c| c.is_subset(t) || t.is_subset(c))
            })
            .collect();
        match open.choose(rng) {
            Some(t) => chain.push((*t).clone()),
            None => break,
        }
    }
    chain.sort_by_key(ElemSet::count);
    chain
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, n: usize) -> ElemSet {
    loop {
        let set = ElemSet::from_positions(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        if !set.is_empty() {
            return set;
        }
    }
}

/// Source of values for one carrier.
struct ValueSource {
    n: usize,
    policy: ValuePolicy,
    /// Sub-Γ-semirings, or the chain under [`ValuePolicy::Chain`].
    choices: Vec<ElemSet>,
}

impl ValueSource {
    fn new(rng: &mut ChaCha8Rng, gs: &GammaSemiring, policy: ValuePolicy) -> Result<Self> {
        let subs = match policy {
            ValuePolicy::Arbitrary => Vec::new(),
            _ => enumerate_sub_gamma_semirings(gs)?,
        };
        let choices = match policy {
            ValuePolicy::Chain => random_chain(rng, &subs),
            _ => subs,
        };
        if policy != ValuePolicy::Arbitrary && choices.is_empty() {
            return Err(generation(format!("{} has no sub-Γ-semirings", gs.name())));
        }
        Ok(ValueSource {
            n: gs.len(),
            policy,
            choices,
        })
    }

    /// A nonempty value inside `within`, if one exists.
    fn nonempty(&self, rng: &mut ChaCha8Rng, within: Option<&ElemSet>) -> Option<ElemSet> {
        match (self.policy, within) {
            (ValuePolicy::Arbitrary, None) => Some(random_nonempty_subset(rng, self.n)),
            (ValuePolicy::Arbitrary, Some(host)) if host.is_empty() => None,
            (ValuePolicy::Arbitrary, Some(host)) => loop {
                let set = ElemSet::from_positions(self.n, host.iter().filter(|_| rng.gen_bool(0.5)));
                if !set.is_empty() {
                    break Some(set);
                }
            },
            (_, within) => {
                let fits: Vec<&ElemSet> = self
                    .choices
                    .iter()
                    .filter(|t| within.is_none_or(|h| t.is_subset(h)))
                    .collect();
                fits.choose(rng).map(|t| (*t).clone())
            }
        }
    }

    fn value(&self, rng: &mut ChaCha8Rng, within: Option<&ElemSet>, empty_p: f64) -> ElemSet {
        if rng.gen_bool(empty_p) {
            return ElemSet::empty(self.n);
        }
        self.nonempty(rng, within).unwrap_or_else(|| ElemSet::empty(self.n))
    }
}

/// Draws values for `params`; if every value came out empty, one parameter
/// (where a host value allows it) gets a nonempty value.
fn draw_soft(
    rng: &mut ChaCha8Rng,
    gs: &GammaSemiring,
    source: &ValueSource,
    params: &[Label],
    host: Option<&SoftSet>,
    empty_p: f64,
) -> Result<SoftSet> {
    let within = |p: &Label| host.and_then(|h| h.value(p));
    let mut values: Vec<ElemSet> = params
        .iter()
        .map(|p| source.value(rng, within(p), empty_p))
        .collect();
    if values.iter().all(ElemSet::is_empty) {
        let mut order: Vec<usize> = (0..params.len()).collect();
        order.shuffle(rng);
        for i in order {
            if let Some(v) = source.nonempty(rng, within(&params[i])) {
                values[i] = v;
                break;
            }
        }
    }
    if values.iter().all(ElemSet::is_empty) {
        return Err(generation("no parameter admits a non-empty value"));
    }
    SoftSet::new(gs.elements().clone(), params.iter().cloned().zip(values))
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[Label], max: usize) -> Vec<Label> {
    let mut idx: Vec<usize> = (0..pool.len()).collect();
    idx.shuffle(rng);
    let size = rng.gen_range(1..=max.min(pool.len()).max(1));
    let mut chosen = idx[..size].to_vec();
    chosen.sort_unstable();
    chosen.into_iter().map(|i| pool[i].clone()).collect()
}

fn in_pool_order(pool: &[Label], set: &[Label]) -> Vec<Label> {
    pool.iter().filter(|p| set.contains(p)).cloned().collect()
}

/// Parameter sets for `k` members drawn from `pool`. `pivot_from` restricts
/// where a shared pivot may come from.
fn family_parameters(
    rng: &mut ChaCha8Rng,
    pool: &[Label],
    max: usize,
    k: usize,
    policy: ParameterPolicy,
    pivot_from: &[Label],
) -> Result<Vec<Vec<Label>>> {
    match policy {
        ParameterPolicy::Random => Ok((0..k).map(|_| random_subset(rng, pool, max)).collect()),
        ParameterPolicy::Common => {
            let w = random_subset(rng, pool, max);
            Ok(vec![w; k])
        }
        ParameterPolicy::SharedOne => {
            let from = if pivot_from.is_empty() { pool } else { pivot_from };
            let pivot = from
                .choose(rng)
                .cloned()
                .ok_or_else(|| generation("empty parameter pool"))?;
            Ok((0..k)
                .map(|_| {
                    let mut w = random_subset(rng, pool, max);
                    if !w.contains(&pivot) {
                        w.push(pivot.clone());
                    }
                    in_pool_order(pool, &w)
                })
                .collect())
        }
        ParameterPolicy::Disjoint => {
            if pool.len() < k {
                return Err(generation(format!(
                    "{k} pairwise disjoint parameter sets need a pool of at least {k}"
                )));
            }
            let mut idx: Vec<usize> = (0..pool.len()).collect();
            idx.shuffle(rng);
            let mut sets: Vec<Vec<Label>> = idx[..k].iter().map(|&i| vec![pool[i].clone()]).collect();
            for &i in &idx[k..] {
                let owner = rng.gen_range(0..=k);
                if owner < k && sets[owner].len() < max.max(1) {
                    sets[owner].push(pool[i].clone());
                }
            }
            Ok(sets.iter().map(|s| in_pool_order(pool, s)).collect())
        }
    }
}

fn shaped_value(hom: &GammaHom, shape: CaseShape) -> Result<ElemSet> {
    let value = match shape {
        CaseShape::Kernel => hom.kernel()?,
        CaseShape::Whole => ElemSet::full(hom.source().len()),
        CaseShape::CarrierImage => hom.carrier_image(),
        CaseShape::Trivial => {
            let zero = hom.target().zero().ok_or(Error::MissingZero)?;
            ElemSet::singleton(hom.target().len(), zero)
        }
    };
    if value.is_empty() {
        return Err(generation(format!("{shape:?} value is empty for this homomorphism")));
    }
    Ok(value)
}

/// Builds the instance determined by `spec`. The same spec always yields
/// the same instance.
pub fn generate_instance(spec: &InstanceSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let rng = &mut rng;
    let descriptor = spec.base.resolve(rng);
    let base = descriptor.build()?;
    let pool: Vec<Label> = (0..spec.parameter_pool.max(1))
        .map(|i| Label::atom(format!("w{i}")))
        .collect();
    let max = spec.max_parameters.max(1);
    let k = spec.family_size.max(1);
    let p = spec.empty_probability;
    let policy = spec.policy;
    let hom_policy = policy.hom.unwrap_or(HomPolicy::Any);

    let mut instance = Instance {
        descriptor: descriptor.clone(),
        base: base.clone(),
        family: Vec::new(),
        outer: None,
        hom: None,
        factors: Vec::new(),
    };

    match policy.layout {
        Layout::Family => {
            let source = ValueSource::new(rng, &base, policy.values)?;
            for w in family_parameters(rng, &pool, max, k, policy.parameters, &[])? {
                instance.family.push(draw_soft(rng, &base, &source, &w, None, p)?);
            }
        }
        Layout::Product => {
            let other = descriptor.sibling(rng).build()?;
            let factors = [base.clone(), other];
            let params = family_parameters(rng, &pool, max, factors.len(), policy.parameters, &[])?;
            for (gs, w) in factors.iter().zip(&params) {
                let source = ValueSource::new(rng, gs, policy.values)?;
                instance.family.push(draw_soft(rng, gs, &source, w, None, p)?);
            }
            instance.factors = factors.to_vec();
        }
        Layout::Outer { nested, over_target } => {
            let carrier = if over_target {
                let hom = draw_hom(rng, &descriptor, &base, hom_policy)?;
                let target = hom.target().clone();
                instance.hom = Some(hom);
                target
            } else {
                if policy.hom.is_some() {
                    instance.hom = Some(draw_hom(rng, &descriptor, &base, hom_policy)?);
                }
                base.clone()
            };
            let subs = ValueSource::new(rng, &carrier, ValuePolicy::SubSemirings)?;
            let w = random_subset(rng, &pool, max);
            let outer = draw_soft(rng, &carrier, &subs, &w, None, p)?;
            let source = ValueSource::new(rng, &carrier, policy.values)?;
            if nested {
                let support = crate::soft::support(&outer);
                let inner_pool = outer.parameter_list();
                for mut wi in family_parameters(rng, &inner_pool, max, k, policy.parameters, &support)? {
                    if policy.parameters != ParameterPolicy::Disjoint && !wi.iter().any(|y| support.contains(y)) {
                        wi.push(support.choose(rng).cloned().ok_or_else(|| generation("null outer soft set"))?);
                        wi = in_pool_order(&inner_pool, &wi);
                    }
                    instance
                        .family
                        .push(draw_soft(rng, &carrier, &source, &wi, Some(&outer), p)?);
                }
            } else {
                for wi in family_parameters(rng, &pool, max, k, policy.parameters, &[])? {
                    instance.family.push(draw_soft(rng, &carrier, &source, &wi, None, p)?);
                }
            }
            instance.outer = Some(outer);
        }
        Layout::HomPair => {
            let hom = draw_hom(rng, &descriptor, &base, hom_policy)?;
            let target = hom.target().clone();
            for gs in [&base, &target] {
                let source = ValueSource::new(rng, gs, policy.values)?;
                let w = random_subset(rng, &pool, max);
                instance.family.push(draw_soft(rng, gs, &source, &w, None, p)?);
            }
            instance.hom = Some(hom);
        }
        Layout::HomCase { shape, over_target } => {
            let hom = draw_hom(rng, &descriptor, &base, hom_policy)?;
            let carrier = if over_target { hom.target().clone() } else { base.clone() };
            let w = random_subset(rng, &pool, max);
            let ss = match shape {
                Some(shape) => {
                    let value = shaped_value(&hom, shape)?;
                    SoftSet::new(carrier.elements().clone(), w.into_iter().map(|p| (p, value.clone())))?
                }
                None => {
                    let source = ValueSource::new(rng, &carrier, policy.values)?;
                    draw_soft(rng, &carrier, &source, &w, None, p)?
                }
            };
            instance.family.push(ss);
            instance.hom = Some(hom);
        }
    }
    Ok(instance)
}
