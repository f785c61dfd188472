//! Axiom scans for commutative semigroups and Γ-semirings.
//!
//! Every scan walks its witness tuple in lexicographic position order and
//! keeps only the first violation of each axiom, so reports are
//! deterministic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::structure::GammaSemiring;
use crate::error::{Error, Result};
use crate::label::Label;

/// Whether Γ must itself be an additive commutative semigroup.
///
/// `Weak` treats Γ as a bare set and checks only the distributive laws over
/// `S` and ternary associativity; `Strict` also requires Γ to be closed,
/// commutative and associative under its addition and the Γ-distributive law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Weak,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "weak" => Ok(Mode::Weak),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Weak => "weak",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `x + y` lies in the carrier. Witness `(x, y)`.
    Closure,
    /// Witness `(x, y)`.
    Commutativity,
    /// Witness `(x, y, z)`.
    Associativity,
    GammaClosure,
    GammaCommutativity,
    GammaAssociativity,
    /// `(a+b)αc = aαc + bαc`, witness `(a, b, α, c)`.
    DistributiveLeft,
    /// `aα(b+c) = aαb + aαc`, witness `(a, α, b, c)`.
    DistributiveRight,
    /// `a(α+β)b = aαb + aβb`, witness `(a, α, β, b)`.
    DistributiveGamma,
    /// `aα(bβc) = (aαb)βc`, witness `(a, α, b, β, c)`.
    TernaryAssociativity,
    /// `0 + x = x`, witness `(x)`.
    ZeroIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// `None` for bare semigroup checks.
    pub mode: Option<Mode>,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn from_violations(mode: Option<Mode>, violations: Vec<Violation>) -> Self {
        AxiomReport {
            mode,
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

struct SemigroupAxioms {
    closure: Axiom,
    commutativity: Axiom,
    associativity: Axiom,
}

const CARRIER: SemigroupAxioms = SemigroupAxioms {
    closure: Axiom::Closure,
    commutativity: Axiom::Commutativity,
    associativity: Axiom::Associativity,
};

const GAMMA: SemigroupAxioms = SemigroupAxioms {
    closure: Axiom::GammaClosure,
    commutativity: Axiom::GammaCommutativity,
    associativity: Axiom::GammaAssociativity,
};

/// Checks closure, commutativity and associativity of a raw addition table.
///
/// `None` entries mean the sum is not an element of the carrier. Tables of
/// the wrong shape or with out-of-range positions are input errors, never
/// axiom violations.
pub fn check_commutative_semigroup(
    elements: &[Label],
    add_table: &[Vec<Option<usize>>],
) -> Result<AxiomReport> {
    let n = elements.len();
    if add_table.len() != n {
        return Err(Error::MalformedTable(format!(
            "addition table has {} rows for {n} elements",
            add_table.len()
        )));
    }
    for (i, row) in add_table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "addition row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((j, v)) = row
            .iter()
            .enumerate()
            .find_map(|(j, v)| v.filter(|&v| v >= n).map(|v| (j, v)))
        {
            return Err(Error::MalformedTable(format!(
                "addition entry ({i},{j}) = {v} is out of range"
            )));
        }
    }
    let violations = scan_semigroup(elements, |x, y| add_table[x][y], &CARRIER);
    Ok(AxiomReport::from_violations(None, violations))
}

fn scan_semigroup(
    elements: &[Label],
    add: impl Fn(usize, usize) -> Option<usize>,
    ids: &SemigroupAxioms,
) -> Vec<Violation> {
    let n = elements.len();
    let witness = |ps: &[usize]| ps.iter().map(|&p| elements[p].clone()).collect();
    let mut out = Vec::new();

    if let Some((x, y)) = pairs(n).find(|&(x, y)| add(x, y).is_none()) {
        out.push(Violation {
            axiom: ids.closure,
            witness: witness(&[x, y]),
        });
    }
    if let Some((x, y)) = pairs(n).find(|&(x, y)| match (add(x, y), add(y, x)) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    }) {
        out.push(Violation {
            axiom: ids.commutativity,
            witness: witness(&[x, y]),
        });
    }
    let assoc_fails = |x: usize, y: usize, z: usize| {
        let left = add(x, y).and_then(|xy| add(xy, z));
        let right = add(y, z).and_then(|yz| add(x, yz));
        matches!((left, right), (Some(l), Some(r)) if l != r)
    };
    if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| assoc_fails(x, y, z)) {
        out.push(Violation {
            axiom: ids.associativity,
            witness: witness(&[x, y, z]),
        });
    }
    out
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| pairs(n).map(move |(y, z)| (x, y, z)))
}

/// Checks the Γ-semiring axioms in the requested mode.
///
/// Both modes scan `(S,+)` and the distributive laws over `S` and ternary
/// associativity; the designated zero, if any, must be an additive identity.
/// Strict mode additionally checks `(Γ,+)` and `a(α+β)b = aαb + aβb`.
pub fn check_gamma_semiring(gs: &GammaSemiring, mode: Mode) -> Result<AxiomReport> {
    if mode == Mode::Strict && !gs.has_gamma_add() {
        return Err(Error::StrictModeRequiresGammaAdd);
    }
    let n = gs.len();
    let g = gs.gamma_len();
    let s_labels = gs.elements().labels();
    let g_labels = gs.gamma().labels();
    let s = |p: usize| s_labels[p].clone();
    let gm = |p: usize| g_labels[p].clone();

    let mut violations = scan_semigroup(s_labels, |x, y| Some(gs.add(x, y)), &CARRIER);

    if mode == Mode::Strict {
        violations.extend(scan_semigroup(g_labels, |x, y| gs.gamma_add(x, y), &GAMMA));
    }

    // (a+b)αc = aαc + bαc
    'left: for a in 0..n {
        for b in 0..n {
            for al in 0..g {
                for c in 0..n {
                    let lhs = gs.product(gs.add(a, b), al, c);
                    let rhs = gs.add(gs.product(a, al, c), gs.product(b, al, c));
                    if lhs != rhs {
                        violations.push(Violation {
                            axiom: Axiom::DistributiveLeft,
                            witness: vec![s(a), s(b), gm(al), s(c)],
                        });
                        break 'left;
                    }
                }
            }
        }
    }

    // aα(b+c) = aαb + aαc
    'right: for a in 0..n {
        for al in 0..g {
            for b in 0..n {
                for c in 0..n {
                    let lhs = gs.product(a, al, gs.add(b, c));
                    let rhs = gs.add(gs.product(a, al, b), gs.product(a, al, c));
                    if lhs != rhs {
                        violations.push(Violation {
                            axiom: Axiom::DistributiveRight,
                            witness: vec![s(a), gm(al), s(b), s(c)],
                        });
                        break 'right;
                    }
                }
            }
        }
    }

    // a(α+β)b = aαb + aβb; sums leaving Γ are already reported as closure
    // failures and are skipped here.
    if mode == Mode::Strict {
        'gamma: for a in 0..n {
            for al in 0..g {
                for be in 0..g {
                    let Some(sum) = gs.gamma_add(al, be) else {
                        continue;
                    };
                    for b in 0..n {
                        let lhs = gs.product(a, sum, b);
                        let rhs = gs.add(gs.product(a, al, b), gs.product(a, be, b));
                        if lhs != rhs {
                            violations.push(Violation {
                                axiom: Axiom::DistributiveGamma,
                                witness: vec![s(a), gm(al), gm(be), s(b)],
                            });
                            break 'gamma;
                        }
                    }
                }
            }
        }
    }

    // aα(bβc) = (aαb)βc
    'assoc: for a in 0..n {
        for al in 0..g {
            for b in 0..n {
                for be in 0..g {
                    for c in 0..n {
                        let lhs = gs.product(a, al, gs.product(b, be, c));
                        let rhs = gs.product(gs.product(a, al, b), be, c);
                        if lhs != rhs {
                            violations.push(Violation {
                                axiom: Axiom::TernaryAssociativity,
                                witness: vec![s(a), gm(al), s(b), gm(be), s(c)],
                            });
                            break 'assoc;
                        }
                    }
                }
            }
        }
    }

    if let Some(z) = gs.zero() {
        if let Some(x) = (0..n).find(|&x| gs.add(z, x) != x) {
            violations.push(Violation {
                axiom: Axiom::ZeroIdentity,
                witness: vec![s(x)],
            });
        }
    }

    Ok(AxiomReport::from_violations(Some(mode), violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<Label> {
        (0..n).map(Label::from).collect()
    }

    fn total(rows: Vec<Vec<usize>>) -> Vec<Vec<Option<usize>>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(Some).collect())
            .collect()
    }

    #[test]
    fn addition_mod_8_is_a_commutative_semigroup() {
        let t = (0..8).map(|x| (0..8).map(|y| (x + y) % 8).collect()).collect();
        let r = check_commutative_semigroup(&labels(8), &total(t)).unwrap();
        assert!(r.passed);
        assert_eq!(r.mode, None);
    }

    #[test]
    fn one_element_semigroup() {
        let r = check_commutative_semigroup(&[Label::atom("e")], &total(vec![vec![0]])).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn left_projection_is_not_commutative() {
        // x + y = x: associative, closed, but 0+1=0 and 1+0=1.
        let r = check_commutative_semigroup(&labels(2), &total(vec![vec![0, 0], vec![1, 1]]))
            .unwrap();
        assert!(!r.passed);
        assert_eq!(
            r.violations,
            vec![Violation {
                axiom: Axiom::Commutativity,
                witness: labels(2)
            }]
        );
    }

    #[test]
    fn undefined_sum_is_a_closure_violation() {
        let t = vec![vec![Some(0), None], vec![None, Some(1)]];
        let r = check_commutative_semigroup(&labels(2), &t).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].axiom, Axiom::Closure);
        assert_eq!(r.violations[0].witness, labels(2));
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        assert!(check_commutative_semigroup(&labels(2), &total(vec![vec![0, 1]])).is_err());
        assert!(check_commutative_semigroup(&labels(2), &total(vec![vec![0, 1], vec![0]])).is_err());
        assert!(
            check_commutative_semigroup(&labels(2), &total(vec![vec![0, 5], vec![0, 0]])).is_err()
        );
    }

    #[test]
    fn mode_parses() {
        assert_eq!("strict".parse::<Mode>().unwrap(), Mode::Strict);
        assert_eq!("weak".parse::<Mode>().unwrap(), Mode::Weak);
        assert!("lax".parse::<Mode>().is_err());
    }
}
