use super::structure::GammaSemiring;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};

/// A map `f: S → S′` between Γ-semirings over the same Γ with
/// `f(a+b) = f(a)+f(b)` and `f(aαb) = f(a)αf(b)`.
///
/// Γ is fixed and shared: the map acts on carriers only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaHom {
    source: GammaSemiring,
    target: GammaSemiring,
    map: Vec<usize>,
}

fn check_shape(map: &[usize], source: &GammaSemiring, target: &GammaSemiring) -> Result<()> {
    if source.gamma() != target.gamma() {
        return Err(Error::GammaMismatch);
    }
    if map.len() != source.len() {
        return Err(Error::MalformedTable(format!(
            "map has {} entries for a carrier of {}",
            map.len(),
            source.len()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
        return Err(Error::MalformedTable(format!(
            "map value {bad} is outside the target carrier"
        )));
    }
    Ok(())
}

fn preserves(map: &[usize], source: &GammaSemiring, target: &GammaSemiring) -> bool {
    let n = source.len();
    for a in 0..n {
        for b in 0..n {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return false;
            }
            for al in 0..source.gamma_len() {
                if map[source.product(a, al, b)] != target.product(map[a], al, map[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exhaustively checks additive and ternary-product preservation. Errors
/// when the two structures do not share an identically ordered Γ.
pub fn is_gamma_homomorphism(
    map: &[usize],
    source: &GammaSemiring,
    target: &GammaSemiring,
) -> Result<bool> {
    check_shape(map, source, target)?;
    Ok(preserves(map, source, target))
}

impl GammaHom {
    pub fn new(source: GammaSemiring, target: GammaSemiring, map: Vec<usize>) -> Result<Self> {
        if !is_gamma_homomorphism(&map, &source, &target)? {
            return Err(Error::NotAHomomorphism);
        }
        Ok(GammaHom { source, target, map })
    }

    pub fn identity(gs: &GammaSemiring) -> Self {
        GammaHom {
            source: gs.clone(),
            target: gs.clone(),
            map: (0..gs.len()).collect(),
        }
    }

    pub fn source(&self) -> &GammaSemiring {
        &self.source
    }

    pub fn target(&self) -> &GammaSemiring {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_positions(self.target.len(), set.iter().map(|x| self.map[x]))
    }

    pub fn preimage(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_positions(
            self.source.len(),
            (0..self.source.len()).filter(|&x| set.contains(self.map[x])),
        )
    }

    /// `f(S)`.
    pub fn carrier_image(&self) -> ElemSet {
        self.image(&ElemSet::full(self.source.len()))
    }

    pub fn is_surjective(&self) -> bool {
        self.carrier_image().is_full()
    }

    pub fn is_injective(&self) -> bool {
        self.carrier_image().count() == self.source.len()
    }

    pub fn kernel(&self) -> Result<ElemSet> {
        kernel(self)
    }
}

/// `{s : f(s) = 0′}`; possibly empty.
pub fn kernel(hom: &GammaHom) -> Result<ElemSet> {
    let zero = hom.target.zero().ok_or(Error::MissingZero)?;
    Ok(hom.preimage(&ElemSet::singleton(hom.target.len(), zero)))
}

/// Every homomorphism `source → target`, up to `limit` of them, in
/// lexicographic order of their value tables.
///
/// Backtracking assigns images position by position and rejects a partial
/// map as soon as a sum or product among assigned positions disagrees.
pub fn find_homomorphisms(
    source: &GammaSemiring,
    target: &GammaSemiring,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    if source.gamma() != target.gamma() {
        return Err(Error::GammaMismatch);
    }
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(source.len());
    search(source, target, &mut partial, &mut out, limit);
    Ok(out)
}

fn consistent(source: &GammaSemiring, target: &GammaSemiring, f: &[usize]) -> bool {
    // Only constraints touching the newest position `i` can have changed.
    let i = f.len() - 1;
    let fresh = |a: usize, b: usize, r: usize| r <= i && (a == i || b == i || r == i);
    for a in 0..=i {
        for b in 0..=i {
            let s = source.add(a, b);
            if fresh(a, b, s) && f[s] != target.add(f[a], f[b]) {
                return false;
            }
            for al in 0..source.gamma_len() {
                let p = source.product(a, al, b);
                if fresh(a, b, p) && f[p] != target.product(f[a], al, f[b]) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    source: &GammaSemiring,
    target: &GammaSemiring,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if partial.len() == source.len() {
        out.push(partial.clone());
        return;
    }
    for v in 0..target.len() {
        partial.push(v);
        if consistent(source, target, partial) {
            search(source, target, partial, out, limit);
        }
        partial.pop();
        if out.len() >= limit {
            return;
        }
    }
}
