//! Intersections, unions, ∧/∨ forms and cartesian products of soft sets.
//!
//! Parameter orders are canonical: restricted forms keep the order of the
//! first member, extended forms list parameters by first appearance, and
//! tuple-indexed forms enumerate `∏ Wᵢ` lexicographically with the first
//! factor slowest.

use indexmap::IndexSet;

use super::set::{IndexedFamily, SoftSet};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::label::{Label, Universe};

/// All index tuples of a mixed-radix counter, first coordinate slowest.
pub(crate) fn index_tuples(radices: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &r in radices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..r).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn common_parameters(family: &IndexedFamily) -> Vec<Label> {
    let members = family.members();
    members[0]
        .parameters()
        .filter(|p| members[1..].iter().all(|m| m.has_parameter(p)))
        .cloned()
        .collect()
}

fn all_parameters(family: &IndexedFamily) -> Vec<Label> {
    let mut seen = IndexSet::new();
    for m in family.members() {
        for p in m.parameters() {
            seen.insert(p.clone());
        }
    }
    seen.into_iter().collect()
}

fn restricted(family: &IndexedFamily, combine: fn(&mut ElemSet, &ElemSet)) -> Result<SoftSet> {
    let params = common_parameters(family);
    if params.is_empty() {
        return Err(Error::EmptyParameterIntersection);
    }
    let members = family.members();
    let entries = params.into_iter().map(|p| {
        let mut acc = members[0].value(&p).expect("common parameter").clone();
        for m in &members[1..] {
            combine(&mut acc, m.value(&p).expect("common parameter"));
        }
        (p, acc)
    });
    SoftSet::new(family.universe().clone(), entries.collect::<Vec<_>>())
}

fn extended(family: &IndexedFamily, combine: fn(&mut ElemSet, &ElemSet)) -> Result<SoftSet> {
    let entries = all_parameters(family).into_iter().map(|p| {
        let mut values = family.members().iter().filter_map(|m| m.value(&p));
        let mut acc = values.next().expect("parameter from some member").clone();
        for v in values {
            combine(&mut acc, v);
        }
        (p, acc)
    });
    SoftSet::new(family.universe().clone(), entries.collect::<Vec<_>>())
}

/// Parameters `⋂ Wᵢ`, values `⋂ ρᵢ(y)`. Fails when `⋂ Wᵢ = ∅`.
pub fn restricted_intersect(family: &IndexedFamily) -> Result<SoftSet> {
    restricted(family, ElemSet::intersect_with)
}

/// Parameters `⋂ Wᵢ`, values `⋃ ρᵢ(y)`. Fails when `⋂ Wᵢ = ∅`.
pub fn restricted_union(family: &IndexedFamily) -> Result<SoftSet> {
    restricted(family, ElemSet::union_with)
}

/// Parameters `⋃ Wᵢ`; at `z`, the intersection over exactly the members
/// whose parameter set contains `z`.
pub fn extended_intersect(family: &IndexedFamily) -> Result<SoftSet> {
    extended(family, ElemSet::intersect_with)
}

/// Parameters `⋃ Wᵢ`; at `z`, the union over the members containing `z`.
pub fn extended_union(family: &IndexedFamily) -> Result<SoftSet> {
    extended(family, ElemSet::union_with)
}

fn tuple_indexed(family: &IndexedFamily, combine: fn(&mut ElemSet, &ElemSet)) -> Result<SoftSet> {
    let members = family.members();
    let radices: Vec<usize> = members.iter().map(SoftSet::len).collect();
    let entries = index_tuples(&radices).into_iter().map(|idx| {
        let mut label = Vec::with_capacity(idx.len());
        let mut acc: Option<ElemSet> = None;
        for (m, &i) in members.iter().zip(&idx) {
            let (p, v) = m.value_at(i);
            label.push(p.clone());
            match acc.as_mut() {
                None => acc = Some(v.clone()),
                Some(a) => combine(a, v),
            }
        }
        (Label::Tuple(label), acc.expect("nonempty family"))
    });
    SoftSet::new(family.universe().clone(), entries.collect::<Vec<_>>())
}

/// ∧-intersection: parameters `∏ Wᵢ`, value at `(y₁,…,y_k)` is `⋂ ρᵢ(yᵢ)`.
pub fn and_intersect(family: &IndexedFamily) -> Result<SoftSet> {
    tuple_indexed(family, ElemSet::intersect_with)
}

/// ∨-union: parameters `∏ Wᵢ`, value at `(y₁,…,y_k)` is `⋃ ρᵢ(yᵢ)`.
pub fn or_union(family: &IndexedFamily) -> Result<SoftSet> {
    tuple_indexed(family, ElemSet::union_with)
}

/// Universe `∏ Vᵢ` of tuple labels, first factor slowest.
pub fn product_universe(universes: &[&Universe]) -> Result<Universe> {
    let radices: Vec<usize> = universes.iter().map(|u| u.len()).collect();
    let labels = index_tuples(&radices)
        .into_iter()
        .map(|idx| {
            Label::Tuple(
                idx.iter()
                    .zip(universes)
                    .map(|(&i, u)| u.label(i).clone())
                    .collect(),
            )
        })
        .collect();
    Universe::new(labels)
}

/// Cartesian product of soft sets over possibly different universes:
/// parameters `∏ Wᵢ`, value at `(yᵢ)` the set of tuples `∏ ρᵢ(yᵢ)`.
pub fn cartesian_product(members: &[SoftSet]) -> Result<SoftSet> {
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let universes: Vec<&Universe> = members.iter().map(SoftSet::universe).collect();
    let universe = product_universe(&universes)?;
    let param_radices: Vec<usize> = members.iter().map(SoftSet::len).collect();

    let entries = index_tuples(&param_radices).into_iter().map(|idx| {
        let picked: Vec<(&Label, &ElemSet)> =
            members.iter().zip(&idx).map(|(m, &i)| m.value_at(i)).collect();
        let label = Label::Tuple(picked.iter().map(|(p, _)| (*p).clone()).collect());
        // Encode each tuple of element positions in the mixed radix of the
        // product universe.
        let mut codes = vec![0usize];
        for ((_, v), u) in picked.iter().zip(&universes) {
            codes = codes
                .into_iter()
                .flat_map(|c| v.iter().map(move |e| c * u.len() + e))
                .collect();
        }
        (label, ElemSet::from_positions(universe.len(), codes))
    });
    SoftSet::new(universe.clone(), entries.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::soft::set::{relative_null, relative_whole, soft_equal, support};

    fn v() -> Universe {
        Universe::from_strs(["0", "1", "2", "3"]).unwrap()
    }

    fn labels(ss: &SoftSet, p: &Label) -> Vec<String> {
        ss.value_labels(p).unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn restricted_intersection_by_hand() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0"]), ("b", vec!["0", "1"])]).unwrap();
        let b = SoftSet::from_labels(&v(), [("b", vec!["1", "2"]), ("c", vec!["3"])]).unwrap();
        let r = restricted_intersect(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        assert_eq!(r.parameter_list(), vec![Label::atom("b")]);
        assert_eq!(labels(&r, &"b".into()), ["1"]);
    }

    #[test]
    fn restricted_forms_refuse_disjoint_parameters() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0"])]).unwrap();
        let b = SoftSet::from_labels(&v(), [("b", vec!["1"])]).unwrap();
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        assert!(matches!(restricted_intersect(&fam), Err(Error::EmptyParameterIntersection)));
        assert!(matches!(restricted_union(&fam), Err(Error::EmptyParameterIntersection)));
    }

    #[test]
    fn restricted_intersection_is_idempotent() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0", "2"]), ("b", vec![])]).unwrap();
        let r = restricted_intersect(&IndexedFamily::pair(&a, &a).unwrap()).unwrap();
        assert_eq!(r, a);
    }

    #[test]
    fn restricted_union_by_hand_and_null_identity() {
        let a = SoftSet::from_labels(&v(), [("b", vec!["0"])]).unwrap();
        let b = SoftSet::from_labels(&v(), [("b", vec!["1"])]).unwrap();
        let r = restricted_union(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        assert_eq!(labels(&r, &"b".into()), ["0", "1"]);

        let null = relative_null(&v(), &a.parameter_list()).unwrap();
        let r = restricted_union(&IndexedFamily::pair(&a, &null).unwrap()).unwrap();
        assert!(soft_equal(&r, &a).unwrap());
    }

    #[test]
    fn extended_forms_on_disjoint_parameters_copy_both() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0"])]).unwrap();
        let b = SoftSet::from_labels(&v(), [("b", vec!["1", "2"])]).unwrap();
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        for r in [extended_intersect(&fam).unwrap(), extended_union(&fam).unwrap()] {
            assert_eq!(r.parameter_list(), vec![Label::atom("a"), Label::atom("b")]);
            assert_eq!(labels(&r, &"a".into()), ["0"]);
            assert_eq!(labels(&r, &"b".into()), ["1", "2"]);
        }
    }

    #[test]
    fn extended_intersection_three_cases() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0", "1"]), ("s", vec!["0", "1"])]).unwrap();
        let b = SoftSet::from_labels(&v(), [("s", vec!["1", "2"]), ("b", vec!["3"])]).unwrap();
        let r = extended_intersect(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        assert_eq!(r.parameter_list(), ["a", "s", "b"].map(Label::atom).to_vec());
        assert_eq!(labels(&r, &"a".into()), ["0", "1"]);
        assert_eq!(labels(&r, &"s".into()), ["1"]);
        assert_eq!(labels(&r, &"b".into()), ["3"]);
    }

    #[test]
    fn singleton_family_extended_union_is_identity() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0"]), ("b", vec![])]).unwrap();
        let r = extended_union(&IndexedFamily::new(vec![a.clone()]).unwrap()).unwrap();
        assert_eq!(r, a);
    }

    #[test]
    fn and_or_by_hand() {
        let a = SoftSet::from_labels(&v(), [("a", vec!["0", "1"]), ("b", vec!["3"])]).unwrap();
        let b = SoftSet::from_labels(
            &v(),
            [("c", vec!["1", "2"]), ("d", vec!["2"]), ("e", vec![])],
        )
        .unwrap();
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        let and = and_intersect(&fam).unwrap();
        let or = or_union(&fam).unwrap();
        assert_eq!(and.len(), 6);
        let ac = Label::tuple(["a".into(), "c".into()]);
        assert_eq!(labels(&and, &ac), ["1"]);
        assert_eq!(labels(&or, &ac), ["0", "1", "2"]);
        assert_eq!(and.parameter_list()[1], Label::tuple(["a".into(), "d".into()]));

        let whole = relative_whole(&v(), &["w".into()]).unwrap();
        let and_whole = and_intersect(&IndexedFamily::pair(&whole, &b).unwrap()).unwrap();
        for (p, val) in b.iter() {
            let key = Label::tuple(["w".into(), p.clone()]);
            assert_eq!(and_whole.value(&key).unwrap(), val);
        }
    }

    #[test]
    fn or_union_with_null_factor() {
        let null = relative_null(&v(), &["n".into()]).unwrap();
        let b = SoftSet::from_labels(&v(), [("c", vec!["2"])]).unwrap();
        let or = or_union(&IndexedFamily::pair(&null, &b).unwrap()).unwrap();
        let key = Label::tuple(["n".into(), "c".into()]);
        assert_eq!(labels(&or, &key), ["2"]);
        let a = SoftSet::from_labels(&v(), [("a", vec!["0"])]).unwrap();
        let or = or_union(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        assert_eq!(labels(&or, &Label::tuple(["a".into(), "c".into()])), ["0", "2"]);
    }

    #[test]
    fn cartesian_product_by_hand() {
        let u1 = Universe::from_strs(["0", "1"]).unwrap();
        let u2 = Universe::from_strs(["0", "1", "2"]).unwrap();
        let a = SoftSet::from_labels(&u1, [("a", vec!["0"]), ("z", vec![])]).unwrap();
        let b = SoftSet::from_labels(&u2, [("b", vec!["1", "2"])]).unwrap();
        let p = cartesian_product(&[a, b]).unwrap();
        assert_eq!(p.universe().len(), 6);
        let ab = Label::tuple(["a".into(), "b".into()]);
        let expected = vec![
            Label::tuple(["0".into(), "1".into()]),
            Label::tuple(["0".into(), "2".into()]),
        ];
        assert_eq!(p.value_labels(&ab).unwrap(), expected);
        let zb = Label::tuple(["z".into(), "b".into()]);
        assert!(p.value(&zb).unwrap().is_empty());
        assert_eq!(support(&p), vec![ab]);
    }

    #[test]
    fn cartesian_product_cardinality() {
        let u = Universe::from_strs(["0", "1", "2"]).unwrap();
        let a = SoftSet::from_labels(&u, [("a", vec!["0", "1"])]).unwrap();
        let b = SoftSet::from_labels(&u, [("b", vec!["0", "1", "2"])]).unwrap();
        let p = cartesian_product(&[a, b]).unwrap();
        assert_eq!(p.value(&Label::tuple(["a".into(), "b".into()])).unwrap().count(), 6);
        assert!(matches!(cartesian_product(&[]), Err(Error::EmptyFamily)));
    }
}
