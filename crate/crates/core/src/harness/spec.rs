use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{make_matrix_gamma, make_minmax_gamma, make_zn_gamma, GammaSemiring};
use crate::error::{Error, Result};

/// Which Γ-semiring a trial is built over. The `Random*` and `Mixed`
/// descriptors are resolved per trial from the trial's generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum BaseDescriptor {
    Zn { n: usize, gamma: Vec<usize>, strict: bool },
    MinMax { n: usize, gamma: Vec<usize> },
    Matrix { p: usize, rows: usize, cols: usize },
    RandomZn,
    RandomMinMax,
    RandomMatrix,
    Mixed,
}

pub const ZN_MAX: usize = 8;
pub const MINMAX_MAX: usize = 5;

fn random_gamma(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let k = rng.gen_range(1..=n.min(3));
    let mut g = all[..k].to_vec();
    g.sort_unstable();
    g
}

impl BaseDescriptor {
    pub fn is_concrete(&self) -> bool {
        matches!(
            self,
            BaseDescriptor::Zn { .. } | BaseDescriptor::MinMax { .. } | BaseDescriptor::Matrix { .. }
        )
    }

    /// Draws a concrete descriptor; concrete ones are returned unchanged.
    pub fn resolve(&self, rng: &mut impl Rng) -> BaseDescriptor {
        match self {
            BaseDescriptor::RandomZn => {
                let n = rng.gen_range(2..=ZN_MAX);
                BaseDescriptor::Zn {
                    n,
                    gamma: random_gamma(rng, n),
                    strict: false,
                }
            }
            BaseDescriptor::RandomMinMax => {
                let n = rng.gen_range(2..=MINMAX_MAX);
                BaseDescriptor::MinMax {
                    n,
                    gamma: random_gamma(rng, n),
                }
            }
            BaseDescriptor::RandomMatrix => BaseDescriptor::Matrix { p: 2, rows: 1, cols: 2 },
            BaseDescriptor::Mixed => {
                let pick = [
                    BaseDescriptor::RandomZn,
                    BaseDescriptor::RandomMinMax,
                    BaseDescriptor::RandomMatrix,
                ][rng.gen_range(0..3)]
                .clone();
                pick.resolve(rng)
            }
            concrete => concrete.clone(),
        }
    }

    /// A structure of the same family over the same Γ, for products.
    pub fn sibling(&self, rng: &mut impl Rng) -> BaseDescriptor {
        match self {
            BaseDescriptor::Zn { gamma, strict, .. } => {
                let lo = (gamma.iter().max().copied().unwrap_or(0) + 1).max(2);
                BaseDescriptor::Zn {
                    n: rng.gen_range(lo..=ZN_MAX.max(lo)),
                    gamma: gamma.clone(),
                    strict: *strict,
                }
            }
            BaseDescriptor::MinMax { gamma, .. } => {
                let lo = (gamma.iter().max().copied().unwrap_or(0) + 1).max(2);
                BaseDescriptor::MinMax {
                    n: rng.gen_range(lo..=MINMAX_MAX.max(lo)),
                    gamma: gamma.clone(),
                }
            }
            other => other.clone(),
        }
    }

    pub fn build(&self) -> Result<GammaSemiring> {
        match self {
            BaseDescriptor::Zn { n, gamma, strict } => {
                Ok(make_zn_gamma(*n, gamma, *strict)?.with_name(self.to_string()))
            }
            BaseDescriptor::MinMax { n, gamma } => {
                Ok(make_minmax_gamma(*n, gamma)?.with_name(self.to_string()))
            }
            BaseDescriptor::Matrix { p, rows, cols } => {
                Ok(make_matrix_gamma(*p, *rows, *cols)?.with_name(self.to_string()))
            }
            other => Err(Error::InvalidArgument(format!(
                "descriptor {other} must be resolved before building"
            ))),
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for BaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseDescriptor::Zn { n, gamma, strict } => {
                write!(f, "zn:{n}:{}", join(gamma))?;
                if *strict {
                    write!(f, ":strict")?;
                }
                Ok(())
            }
            BaseDescriptor::MinMax { n, gamma } => write!(f, "minmax:{n}:{}", join(gamma)),
            BaseDescriptor::Matrix { p, rows, cols } => write!(f, "matrix:{p}:{rows}:{cols}"),
            BaseDescriptor::RandomZn => write!(f, "zn"),
            BaseDescriptor::RandomMinMax => write!(f, "minmax"),
            BaseDescriptor::RandomMatrix => write!(f, "matrix"),
            BaseDescriptor::Mixed => write!(f, "mixed"),
        }
    }
}

/// Accepts `zn`, `minmax`, `matrix`, `mixed`, the named examples `z8`,
/// `minmax5`, `matrix2x1x2`, and explicit forms `zn:N:g,g[:strict]`,
/// `minmax:N:g,g`, `matrix:P:R:C`.
impl FromStr for BaseDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unrecognised family {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let list = |t: &str| -> Result<Vec<usize>> {
            if t.trim().is_empty() {
                return Ok(vec![]);
            }
            t.split(',').map(num).collect()
        };
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["zn"] => Ok(BaseDescriptor::RandomZn),
            ["minmax"] => Ok(BaseDescriptor::RandomMinMax),
            ["matrix"] => Ok(BaseDescriptor::RandomMatrix),
            ["mixed"] => Ok(BaseDescriptor::Mixed),
            ["z8"] => Ok(BaseDescriptor::Zn {
                n: 8,
                gamma: vec![2, 4, 6],
                strict: false,
            }),
            ["minmax5"] => Ok(BaseDescriptor::MinMax {
                n: 5,
                gamma: vec![1, 2, 3],
            }),
            ["matrix2x1x2"] => Ok(BaseDescriptor::Matrix { p: 2, rows: 1, cols: 2 }),
            ["zn", n, g] => Ok(BaseDescriptor::Zn {
                n: num(n)?,
                gamma: list(g)?,
                strict: false,
            }),
            ["zn", n, g, "strict"] => Ok(BaseDescriptor::Zn {
                n: num(n)?,
                gamma: list(g)?,
                strict: true,
            }),
            ["minmax", n, g] => Ok(BaseDescriptor::MinMax {
                n: num(n)?,
                gamma: list(g)?,
            }),
            ["matrix", p, r, c] => Ok(BaseDescriptor::Matrix {
                p: num(p)?,
                rows: num(r)?,
                cols: num(c)?,
            }),
            _ => Err(bad()),
        }
    }
}

/// How values are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValuePolicy {
    /// Enumerated sub-Γ-semirings, or ∅.
    SubSemirings,
    /// Any subset of the carrier.
    Arbitrary,
    /// Members of one random maximal ⊆-chain of sub-Γ-semirings, or ∅.
    Chain,
}

/// How parameter sets are drawn from the pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterPolicy {
    Random,
    /// Independent sets that all contain one shared pivot parameter.
    SharedOne,
    /// One parameter set for every member.
    Common,
    /// Pairwise disjoint sets.
    Disjoint,
}

/// Which homomorphisms may be drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomPolicy {
    Any,
    Onto,
    Injective,
}

/// Value shapes for the trivial/whole image and pre-image cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseShape {
    /// Every value is `ker f`.
    Kernel,
    /// Every value is `S`.
    Whole,
    /// Every value (over the target) is `f(S)`.
    CarrierImage,
    /// Every value (over the target) is `{0′}`.
    Trivial,
}

/// What a trial consists of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Layout {
    /// `family_size` soft sets over the base.
    Family,
    /// `family_size` soft sets over sibling structures sharing Γ.
    Product,
    /// An outer soft Γ-semiring plus `family_size` members; with `nested`
    /// the members are drawn inside the outer one. `over_target` places
    /// everything over the codomain of a drawn homomorphism.
    Outer { nested: bool, over_target: bool },
    /// One soft set over the domain and one over the codomain of a
    /// homomorphism.
    HomPair,
    /// One soft set over the domain (`over_target = false`) or codomain of a
    /// homomorphism, shaped by `shape` when given.
    HomCase { shape: Option<CaseShape>, over_target: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Policy {
    pub layout: Layout,
    pub values: ValuePolicy,
    pub parameters: ParameterPolicy,
    pub hom: Option<HomPolicy>,
}

/// Everything needed to regenerate one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub base: BaseDescriptor,
    pub family_size: usize,
    pub parameter_pool: usize,
    pub max_parameters: usize,
    pub empty_probability: f64,
    pub policy: Policy,
    pub seed: u64,
}

pub const DEFAULT_FAMILY_SIZE: usize = 3;
pub const DEFAULT_PARAMETER_POOL: usize = 4;
pub const DEFAULT_MAX_PARAMETERS: usize = 3;
pub const EMPTY_VALUE_PROBABILITY: f64 = 0.2;

impl InstanceSpec {
    pub fn new(base: BaseDescriptor, policy: Policy, seed: u64) -> Self {
        InstanceSpec {
            base,
            family_size: DEFAULT_FAMILY_SIZE,
            parameter_pool: DEFAULT_PARAMETER_POOL,
            max_parameters: DEFAULT_MAX_PARAMETERS,
            empty_probability: EMPTY_VALUE_PROBABILITY,
            policy,
            seed,
        }
    }
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            layout: Layout::Family,
            values: ValuePolicy::SubSemirings,
            parameters: ParameterPolicy::Random,
            hom: None,
        }
    }
}
