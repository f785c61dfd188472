//! Seeded instance generation and mechanical checking of the closure
//! statements, with counterexample search when a hypothesis is dropped.
//!
//! Trial `t` of a run with template seed `s` uses `ChaCha8Rng` seeded with
//! `s + t` (wrapping); the instance depends on nothing else.

mod generate;
mod spec;
mod theorems;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use generate::{generate_instance, hom_candidates, Instance, HOM_SEARCH_LIMIT};
pub use spec::{
    BaseDescriptor, CaseShape, HomPolicy, InstanceSpec, Layout, ParameterPolicy, Policy, ValuePolicy,
    DEFAULT_FAMILY_SIZE, DEFAULT_MAX_PARAMETERS, DEFAULT_PARAMETER_POOL, EMPTY_VALUE_PROBABILITY,
};
pub use theorems::{check_theorem, Outcome, TheoremId};

use crate::error::{Error, Result};
use crate::io::{HomDoc, SoftSetDoc, StructureDoc};
use crate::soft_gamma::Verdict;

/// Replayable dump of an [`Instance`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub descriptor: BaseDescriptor,
    pub base: StructureDoc,
    pub family: Vec<SoftSetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<SoftSetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<HomDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<StructureDoc>,
}

impl InstanceDoc {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceDoc {
            descriptor: inst.descriptor.clone(),
            base: StructureDoc::from_structure(&inst.base),
            family: inst.family.iter().map(SoftSetDoc::from_soft_set).collect(),
            outer: inst.outer.as_ref().map(SoftSetDoc::from_soft_set),
            hom: inst.hom.as_ref().map(HomDoc::from_hom),
            factors: inst.factors.iter().map(StructureDoc::from_structure).collect(),
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        Ok(Instance {
            descriptor: self.descriptor,
            base: self.base.into_structure()?,
            family: self
                .family
                .into_iter()
                .map(SoftSetDoc::into_soft_set)
                .collect::<Result<_>>()?,
            outer: self.outer.map(SoftSetDoc::into_soft_set).transpose()?,
            hom: self.hom.map(HomDoc::into_hom).transpose()?,
            factors: self
                .factors
                .into_iter()
                .map(StructureDoc::into_structure)
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub seed: u64,
    pub instance: InstanceDoc,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub trials: usize,
    pub seed: u64,
    pub family: String,
    pub drop_hypothesis: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dropped: Option<String>,
    pub passes: usize,
    pub vacuous: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Spec for trial `t`: the template with the statement's policy, family
/// size and the derived seed.
pub fn trial_spec(id: TheoremId, template: &InstanceSpec, trial: usize, drop_hypothesis: bool) -> InstanceSpec {
    InstanceSpec {
        family_size: id.family_size(template.family_size),
        policy: id.policy(drop_hypothesis),
        seed: template.seed.wrapping_add(trial as u64),
        ..template.clone()
    }
}

enum TrialResult {
    Pass,
    Vacuous,
    Fail(Box<Counterexample>),
}

fn run_trial(id: TheoremId, template: &InstanceSpec, trial: usize, drop: bool) -> Result<TrialResult> {
    let spec = trial_spec(id, template, trial, drop);
    let inst = match generate_instance(&spec) {
        Ok(inst) => inst,
        // Unsatisfiable policy on this trial's base.
        Err(Error::Generation(_)) | Err(Error::CarrierTooLarge { .. }) => return Ok(TrialResult::Vacuous),
        Err(e) => return Err(e),
    };
    let outcome = check_theorem(id, &inst, drop)?;
    Ok(match outcome.verdict {
        Verdict::Pass => TrialResult::Pass,
        Verdict::Vacuous => TrialResult::Vacuous,
        Verdict::Fail => TrialResult::Fail(Box::new(Counterexample {
            trial,
            seed: spec.seed,
            instance: InstanceDoc::from_instance(&inst),
            detail: outcome.detail.unwrap_or(Value::Null),
        })),
    })
}

/// Runs trials `0..trials` in parallel. Counts do not depend on scheduling
/// and the reported counterexample is the one with the smallest index.
pub fn fuzz_theorem(
    id: TheoremId,
    trials: usize,
    template: &InstanceSpec,
    drop_hypothesis: bool,
) -> Result<TheoremVerdict> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let results: Vec<Result<TrialResult>> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(id, template, t, drop_hypothesis))
        .collect();
    let mut verdict = TheoremVerdict {
        theorem: id,
        trials,
        seed: template.seed,
        family: template.base.to_string(),
        drop_hypothesis,
        dropped: drop_hypothesis.then(|| id.dropped_hypothesis().to_string()),
        passes: 0,
        vacuous: 0,
        failures: 0,
        counterexample: None,
    };
    for r in results {
        match r? {
            TrialResult::Pass => verdict.passes += 1,
            TrialResult::Vacuous => verdict.vacuous += 1,
            TrialResult::Fail(cx) => {
                verdict.failures += 1;
                if verdict.counterexample.is_none() {
                    verdict.counterexample = Some(*cx);
                }
            }
        }
    }
    Ok(verdict)
}

/// Re-checks a dumped instance. Accepts a verdict with a counterexample, a
/// bare counterexample, or an instance document.
pub fn replay(id: TheoremId, document: &Value, drop_hypothesis: bool) -> Result<Outcome> {
    let instance = if let Some(cx) = document.get("counterexample") {
        cx.get("instance").cloned().ok_or_else(|| {
            Error::InvalidArgument("verdict carries no counterexample instance".into())
        })?
    } else if let Some(inst) = document.get("instance") {
        inst.clone()
    } else {
        document.clone()
    };
    let inst: InstanceDoc = serde_json::from_value(instance)?;
    check_theorem(id, &inst.into_instance()?, drop_hypothesis)
}
