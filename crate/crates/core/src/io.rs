//! JSON documents for structures, soft sets, relations, soft functions and
//! homomorphisms, plus the canonical output formatting.

use std::fmt::Write as _;
use std::path::Path;

use indexmap::IndexMap;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{FiniteCommutativeSemigroup, GammaHom, GammaSemiring};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::{Label, Universe};
use crate::soft::{make_soft_function_by_labels, SoftFunction, SoftSet, TernaryRelation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub name: String,
    pub s_elements: Vec<Label>,
    pub s_add: Vec<Vec<usize>>,
    pub gamma_elements: Vec<Label>,
    #[serde(default)]
    pub gamma_add: Option<Vec<Vec<Option<usize>>>>,
    pub product: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub zero: Option<usize>,
}

impl StructureDoc {
    pub fn from_structure(gs: &GammaSemiring) -> Self {
        StructureDoc {
            name: gs.name().to_string(),
            s_elements: gs.elements().labels().to_vec(),
            s_add: gs.semigroup().rows(),
            gamma_elements: gs.gamma().labels().to_vec(),
            gamma_add: gs.gamma_add_rows(),
            product: gs.product_planes(),
            zero: gs.zero(),
        }
    }

    pub fn into_structure(self) -> Result<GammaSemiring> {
        let s = FiniteCommutativeSemigroup::new(self.s_elements, self.s_add)?;
        GammaSemiring::new(
            self.name,
            s,
            self.gamma_elements,
            self.gamma_add,
            self.product,
            self.zero,
        )
    }
}

/// Values are keyed by [`Label::key`]: atoms as themselves, tuples as their
/// compact JSON text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftSetDoc {
    pub universe: Vec<Label>,
    pub parameters: Vec<Label>,
    pub values: IndexMap<String, Vec<Label>>,
}

impl SoftSetDoc {
    pub fn from_soft_set(ss: &SoftSet) -> Self {
        SoftSetDoc {
            universe: ss.universe().labels().to_vec(),
            parameters: ss.parameter_list(),
            values: ss
                .iter()
                .map(|(p, v)| {
                    let labels = v.iter().map(|x| ss.universe().label(x).clone()).collect();
                    (p.key(), labels)
                })
                .collect(),
        }
    }

    pub fn into_soft_set(self) -> Result<SoftSet> {
        self.into_soft_set_over(None)
    }

    /// Reuses `universe` when the document lists the same labels, so the
    /// result compares cheaply against structures read elsewhere.
    pub fn into_soft_set_over(self, universe: Option<&Universe>) -> Result<SoftSet> {
        let universe = match universe {
            Some(u) if u.labels() == self.universe.as_slice() => u.clone(),
            _ => Universe::new(self.universe)?,
        };
        let mut values = self.values;
        let mut entries = Vec::with_capacity(self.parameters.len());
        for p in self.parameters {
            let labels = values.shift_remove(&p.key()).ok_or_else(|| {
                Error::MalformedTable(format!("no value given for parameter {p}"))
            })?;
            let mut set = ElemSet::empty(universe.len());
            for l in &labels {
                set.insert(universe.require(l, "universe")?);
            }
            entries.push((p, set));
        }
        if let Some(extra) = values.keys().next() {
            return Err(Error::MalformedTable(format!(
                "value given for unlisted parameter {extra}"
            )));
        }
        SoftSet::new(universe, entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub n_params: Vec<Label>,
    pub gamma: Vec<Label>,
    pub triples: Vec<(Label, Label, Label)>,
}

impl RelationDoc {
    pub fn from_relation(rel: &TernaryRelation) -> Self {
        RelationDoc {
            n_params: rel.params().labels().to_vec(),
            gamma: rel.gamma().labels().to_vec(),
            triples: rel.triples(),
        }
    }

    /// The relation over `N × Γ × S` with `S` taken from `gs`.
    pub fn into_relation(self, gs: &GammaSemiring) -> Result<TernaryRelation> {
        let gamma = if self.gamma.as_slice() == gs.gamma().labels() {
            gs.gamma().clone()
        } else {
            return Err(Error::GammaMismatch);
        };
        TernaryRelation::from_triples(
            Universe::new(self.n_params)?,
            gamma,
            gs.elements().clone(),
            &self.triples,
        )
    }
}

/// A soft function as `[from, to]` pairs for the carrier and parameter maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftFunctionDoc {
    pub carrier_map: Vec<(Label, Label)>,
    pub parameter_map: Vec<(Label, Label)>,
}

impl SoftFunctionDoc {
    pub fn from_soft_function(fg: &SoftFunction) -> Self {
        let (src, tgt) = (fg.source(), fg.target());
        SoftFunctionDoc {
            carrier_map: fg
                .carrier_map()
                .iter()
                .enumerate()
                .map(|(x, &y)| (src.universe().label(x).clone(), tgt.universe().label(y).clone()))
                .collect(),
            parameter_map: (0..src.len())
                .map(|i| (src.value_at(i).0.clone(), fg.map_parameter(i).clone()))
                .collect(),
        }
    }

    pub fn bind(&self, source: SoftSet, target: SoftSet) -> Result<SoftFunction> {
        make_soft_function_by_labels(&self.carrier_map, &self.parameter_map, source, target)
    }
}

/// A Γ-homomorphism as the image of each source element, in source order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub source: StructureDoc,
    pub target: StructureDoc,
    pub map: Vec<Label>,
}

impl HomDoc {
    pub fn from_hom(hom: &GammaHom) -> Self {
        HomDoc {
            source: StructureDoc::from_structure(hom.source()),
            target: StructureDoc::from_structure(hom.target()),
            map: hom
                .map()
                .iter()
                .map(|&y| hom.target().elements().label(y).clone())
                .collect(),
        }
    }

    pub fn into_hom(self) -> Result<GammaHom> {
        let source = self.source.into_structure()?;
        let target = self.target.into_structure()?;
        let map = self
            .map
            .iter()
            .map(|l| target.elements().require(l, "target element"))
            .collect::<Result<Vec<_>>>()?;
        GammaHom::new(source, target, map)
    }
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn read_structure(path: &Path) -> Result<GammaSemiring> {
    read::<StructureDoc>(path)?.into_structure()
}

pub fn read_soft_set(path: &Path) -> Result<SoftSet> {
    read::<SoftSetDoc>(path)?.into_soft_set()
}

/// Canonical text: two-space indentation, arrays of scalars on one line,
/// trailing newline.
pub fn to_json_text<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
