//! Opaque element and parameter labels, and ordered universes of labels.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element or parameter name. Products of soft sets produce tuple labels,
/// which serialize as nested JSON arrays.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Atom(String),
    Tuple(Vec<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Self {
        Label::Atom(s.into())
    }

    pub fn tuple(parts: impl IntoIterator<Item = Label>) -> Self {
        Label::Tuple(parts.into_iter().collect())
    }

    /// Key used for this label inside JSON objects: the atom itself, or the
    /// compact JSON text of a tuple.
    pub fn key(&self) -> String {
        match self {
            Label::Atom(s) => s.clone(),
            Label::Tuple(_) => serde_json::to_string(self).expect("labels always serialize"),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Tuple(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Atom(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Atom(s)
    }
}

impl From<usize> for Label {
    fn from(n: usize) -> Self {
        Label::Atom(n.to_string())
    }
}

#[derive(Debug)]
struct UniverseInner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

/// An ordered finite set of labels. Cheap to clone; positions are stable.
#[derive(Clone, Debug)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel {
                    kind: "universe",
                    label: l.clone(),
                });
            }
        }
        Ok(Universe(Arc::new(UniverseInner { labels, index })))
    }

    pub fn from_strs<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(labels.into_iter().map(|s| Label::Atom(s.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn label(&self, pos: usize) -> &Label {
        &self.0.labels[pos]
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn require(&self, label: &Label, kind: &'static str) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::UnknownLabel {
            kind,
            label: label.clone(),
        })
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Universe {}
