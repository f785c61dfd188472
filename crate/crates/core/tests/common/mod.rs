#![allow(dead_code)]

//! Test-only generators and naive reference implementations. Nothing here
//! calls the library's own closure or operation code.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use softgamma::algebra::{make_matrix_gamma, make_minmax_gamma, make_zn_gamma, GammaSemiring};
use softgamma::soft::SoftSet;
use softgamma::{ElemSet, Label, Universe};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn small_gammas(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .filter(|m| m.count_ones() <= 3)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Every structure the enumeration oracle is compared on: ℤₙ for
/// n ∈ {2,4,6,8} and min/max for n ≤ 5, each with every Γ of size ≤ 3, plus
/// the 2×1×2 and 2×2×1 matrix structures over ℤ₂.
pub fn oracle_structures() -> Vec<GammaSemiring> {
    let mut out = Vec::new();
    for n in [2, 4, 6, 8] {
        for g in small_gammas(n) {
            out.push(make_zn_gamma(n, &g, false).unwrap());
        }
    }
    for n in 1..=5 {
        for g in small_gammas(n) {
            out.push(make_minmax_gamma(n, &g).unwrap());
        }
    }
    out.push(make_matrix_gamma(2, 1, 2).unwrap());
    out.push(make_matrix_gamma(2, 2, 1).unwrap());
    out
}

pub fn mask(t: &ElemSet) -> u64 {
    t.iter().fold(0, |m, i| m | 1 << i)
}

/// Closure of `t` checked straight from the tables.
pub fn naive_closed(gs: &GammaSemiring, t: u64) -> bool {
    let n = gs.len();
    let inside = |x: usize| t >> x & 1 == 1;
    if t == 0 {
        return false;
    }
    for a in (0..n).filter(|&a| inside(a)) {
        for b in (0..n).filter(|&b| inside(b)) {
            if !inside(gs.add(a, b)) {
                return false;
            }
            for al in 0..gs.gamma_len() {
                if !inside(gs.product(a, al, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All nonempty subsets closed under + and every aαb.
pub fn naive_subsemirings(gs: &GammaSemiring) -> BTreeSet<u64> {
    (1u64..(1 << gs.len())).filter(|&t| naive_closed(gs, t)).collect()
}

/// Plain map view of a soft set: parameter → set of element labels.
pub type Plain = BTreeMap<Label, BTreeSet<Label>>;

pub fn plain(ss: &SoftSet) -> Plain {
    ss.iter()
        .map(|(p, v)| {
            let elems = v.iter().map(|i| ss.universe().label(i).clone()).collect();
            (p.clone(), elems)
        })
        .collect()
}

pub fn plain_subset(a: &Plain, b: &Plain) -> bool {
    a.iter().all(|(p, v)| b.get(p).is_some_and(|w| v.is_subset(w)))
}

pub fn universe(n: usize) -> Universe {
    Universe::new((0..n).map(Label::from).collect()).unwrap()
}

pub const POOL: [&str; 5] = ["a", "b", "c", "d", "e"];

pub fn random_params(rng: &mut ChaCha8Rng, pool: &[&str]) -> Vec<Label> {
    let k = rng.gen_range(1..=pool.len());
    let mut chosen: Vec<&str> = pool.choose_multiple(rng, k).copied().collect();
    chosen.sort_unstable();
    chosen.into_iter().map(Label::from).collect()
}

pub fn random_elems(rng: &mut ChaCha8Rng, n: usize) -> ElemSet {
    if rng.gen_bool(0.2) {
        return ElemSet::empty(n);
    }
    ElemSet::from_positions(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

pub fn random_soft_set(rng: &mut ChaCha8Rng, u: &Universe, params: &[Label]) -> SoftSet {
    let entries: Vec<_> = params.iter().map(|p| (p.clone(), random_elems(rng, u.len()))).collect();
    SoftSet::new(u.clone(), entries).unwrap()
}

/// A soft subset of `ss`: some of its parameters, each value shrunk.
pub fn random_soft_subset(rng: &mut ChaCha8Rng, ss: &SoftSet) -> SoftSet {
    let all = ss.parameter_list();
    let k = rng.gen_range(1..=all.len());
    let mut idx: Vec<usize> = (0..all.len()).collect();
    idx.shuffle(rng);
    let mut keep: Vec<usize> = idx[..k].to_vec();
    keep.sort_unstable();
    let entries: Vec<_> = keep
        .into_iter()
        .map(|i| {
            let (p, v) = ss.value_at(i);
            let sub = ElemSet::from_positions(v.domain(), v.iter().filter(|_| rng.gen_bool(0.6)));
            (p.clone(), sub)
        })
        .collect();
    SoftSet::new(ss.universe().clone(), entries).unwrap()
}

/// A random soft function instance: carrier map `f`, parameter map `g` as
/// indices, and source/target soft sets satisfying `f(ρ(ω)) = σ(g(ω))`.
pub struct RandomSoftFunction {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub source: SoftSet,
    pub target: SoftSet,
}

pub fn random_soft_function(rng: &mut ChaCha8Rng) -> RandomSoftFunction {
    let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=5));
    let (u1, u2) = (universe(n1), universe(n2));
    let f: Vec<usize> = (0..n1).map(|_| rng.gen_range(0..n2)).collect();
    let w: Vec<Label> = (0..rng.gen_range(1..=4)).map(|i| Label::from(format!("w{i}"))).collect();
    let y: Vec<Label> = (0..rng.gen_range(1..=4)).map(|i| Label::from(format!("y{i}"))).collect();
    let g: Vec<usize> = w.iter().map(|_| rng.gen_range(0..y.len())).collect();
    let image = |s: &ElemSet| ElemSet::from_positions(n2, s.iter().map(|x| f[x]));

    let mut rho: Vec<Option<ElemSet>> = vec![None; w.len()];
    let mut sigma: Vec<ElemSet> = (0..y.len()).map(|_| random_elems(rng, n2)).collect();
    for (j, slot) in sigma.iter_mut().enumerate() {
        let fiber: Vec<usize> = (0..w.len()).filter(|&i| g[i] == j).collect();
        let Some(&first) = fiber.first() else { continue };
        let base = random_elems(rng, n1);
        let img = image(&base);
        *slot = img.clone();
        rho[first] = Some(base.clone());
        // later fiber members: same image, different pre-image choice
        let reach: Vec<usize> = (0..n1).filter(|&x| img.contains(f[x])).collect();
        for &i in &fiber[1..] {
            let mut v = base.clone();
            for &x in &reach {
                if rng.gen_bool(0.5) {
                    v.insert(x);
                }
            }
            rho[i] = Some(v);
        }
    }
    let source = SoftSet::new(u1, w.into_iter().zip(rho.into_iter().map(Option::unwrap))).unwrap();
    let target = SoftSet::new(u2, y.into_iter().zip(sigma)).unwrap();
    RandomSoftFunction { f, g, source, target }
}

/// Reference for the indexed-family operations over plain maps. `kind` is
/// one of `rint`, `eint`, `runion`, `eunion`, `and`, `or`.
pub fn naive_op(kind: &str, family: &[Plain]) -> Plain {
    if kind == "and" || kind == "or" {
        let mut acc: Vec<(Vec<Label>, Option<BTreeSet<Label>>)> = vec![(vec![], None)];
        for m in family {
            acc = acc
                .into_iter()
                .flat_map(|(ps, v)| {
                    m.iter().map(move |(p, x)| {
                        let mut ps = ps.clone();
                        ps.push(p.clone());
                        let v = match &v {
                            None => x.clone(),
                            Some(v) if kind == "and" => v.intersection(x).cloned().collect(),
                            Some(v) => v.union(x).cloned().collect(),
                        };
                        (ps, Some(v))
                    })
                })
                .collect();
        }
        return acc.into_iter().map(|(ps, v)| (Label::tuple(ps), v.unwrap())).collect();
    }
    let keys: BTreeSet<&Label> = family.iter().flat_map(|m| m.keys()).collect();
    let restricted = kind.starts_with('r');
    let intersect = kind.ends_with("int");
    let mut out = Plain::new();
    for k in keys {
        let vals: Vec<&BTreeSet<Label>> = family.iter().filter_map(|m| m.get(k)).collect();
        if restricted && vals.len() < family.len() {
            continue;
        }
        let mut v = vals[0].clone();
        for w in &vals[1..] {
            v = if intersect { v.intersection(w).cloned().collect() } else { v.union(w).cloned().collect() };
        }
        out.insert(k.clone(), v);
    }
    out
}
