//! Desk-scale Γ-semiring families: residues mod n, min/max chains, and small
//! matrices over a prime field.

use super::structure::{FiniteCommutativeSemigroup, GammaSemiring};
use crate::error::{Error, Result};
use crate::label::Label;

/// Largest carrier the matrix family will build.
pub const MATRIX_MAX_CARRIER: usize = 16;

fn numeric_labels(values: impl IntoIterator<Item = usize>) -> Vec<Label> {
    values.into_iter().map(Label::from).collect()
}

fn normalized_subset(n: usize, subset: &[usize]) -> Result<Vec<usize>> {
    if let Some(&bad) = subset.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidArgument(format!(
            "Γ element {bad} is outside 0..{n}"
        )));
    }
    let mut v = subset.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// `S = ℤₙ` under addition, `Γ ⊆ ℤₙ`, `aαb = a·α·b mod n`, zero `0`.
///
/// With `strict`, Γ gets addition mod n; sums that leave Γ are recorded as
/// undefined, so the strict check can fail on Γ-closure.
pub fn make_zn_gamma(n: usize, gamma_subset: &[usize], strict: bool) -> Result<GammaSemiring> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let gamma = normalized_subset(n, gamma_subset)?;
    if gamma.is_empty() {
        return Err(Error::InvalidArgument("Γ subset must be nonempty".into()));
    }
    let s = FiniteCommutativeSemigroup::from_fn(numeric_labels(0..n), |x, y| (x + y) % n)?;
    let gamma_add = |a: usize, b: usize| {
        let sum = (gamma[a] + gamma[b]) % n;
        gamma.iter().position(|&g| g == sum)
    };
    let name = format!(
        "Z{n} Γ={{{}}}",
        gamma.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    );
    GammaSemiring::from_fns(
        name,
        s,
        numeric_labels(gamma.iter().copied()),
        strict.then_some(&gamma_add as &dyn Fn(usize, usize) -> Option<usize>),
        |a, al, b| a * gamma[al] % n * b % n,
        Some(0),
    )
}

/// `S = {0..n-1}` with `x + y = max(x, y)`, Γ a subset with `max`, and
/// `aαb = min(a, α, b)`, zero `0`.
pub fn make_minmax_gamma(n: usize, gamma_subset: &[usize]) -> Result<GammaSemiring> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let gamma = normalized_subset(n, gamma_subset)?;
    let s = FiniteCommutativeSemigroup::from_fn(numeric_labels(0..n), usize::max)?;
    let gamma_add = |a: usize, b: usize| Some(a.max(b));
    let name = format!(
        "minmax{n} Γ={{{}}}",
        gamma.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    );
    GammaSemiring::from_fns(
        name,
        s,
        numeric_labels(gamma.iter().copied()),
        Some(&gamma_add as &dyn Fn(usize, usize) -> Option<usize>),
        |a, al, b| a.min(gamma[al]).min(b),
        Some(0),
    )
}

/// Dense `rows × cols` matrix over `ℤ_p`, entries row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl Matrix {
    fn decode(mut code: usize, rows: usize, cols: usize, p: usize) -> Self {
        let mut entries = vec![0; rows * cols];
        for e in entries.iter_mut().rev() {
            *e = code % p;
            code /= p;
        }
        Matrix { rows, cols, entries }
    }

    fn encode(&self, p: usize) -> usize {
        self.entries.iter().fold(0, |acc, e| acc * p + e)
    }

    fn at(&self, r: usize, c: usize) -> usize {
        self.entries[r * self.cols + c]
    }

    fn add(&self, other: &Matrix, p: usize) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        }
    }

    fn mul(&self, other: &Matrix, p: usize) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                entries.push((0..self.cols).map(|k| self.at(r, k) * other.at(k, c)).sum::<usize>() % p);
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        }
    }

    fn label(&self) -> Label {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        Label::Atom(format!("[{}]", rows.join(",")))
    }
}

/// `S` = all `rows × cols` matrices over `ℤ_p`, `Γ` = all `cols × rows`
/// matrices, `WαY` the matrix product. Both additions are entrywise.
pub fn make_matrix_gamma(p: usize, rows: usize, cols: usize) -> Result<GammaSemiring> {
    if !matches!(p, 2 | 3) {
        return Err(Error::InvalidArgument(format!("p = {p} must be a prime ≤ 3")));
    }
    if rows == 0 || cols == 0 || rows * cols > 4 {
        return Err(Error::InvalidArgument(format!(
            "{rows}×{cols} matrices exceed the rows·cols ≤ 4 bound"
        )));
    }
    let size = p.pow((rows * cols) as u32);
    if size > MATRIX_MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size,
            bound: MATRIX_MAX_CARRIER,
        });
    }
    let carrier: Vec<Matrix> = (0..size).map(|c| Matrix::decode(c, rows, cols, p)).collect();
    let gamma: Vec<Matrix> = (0..size).map(|c| Matrix::decode(c, cols, rows, p)).collect();
    let s = FiniteCommutativeSemigroup::from_fn(
        carrier.iter().map(Matrix::label).collect(),
        |x, y| carrier[x].add(&carrier[y], p).encode(p),
    )?;
    let gamma_add = |a: usize, b: usize| Some(gamma[a].add(&gamma[b], p).encode(p));
    GammaSemiring::from_fns(
        format!("M{rows}x{cols}(Z{p})"),
        s,
        gamma.iter().map(Matrix::label).collect(),
        Some(&gamma_add as &dyn Fn(usize, usize) -> Option<usize>),
        |a, al, b| carrier[a].mul(&gamma[al], p).mul(&carrier[b], p).encode(p),
        Some(0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_gamma_semiring, Mode};

    #[test]
    fn zn_rejects_bad_arguments() {
        assert!(make_zn_gamma(0, &[0], false).is_err());
        assert!(make_zn_gamma(4, &[], false).is_err());
        assert!(make_zn_gamma(4, &[4], false).is_err());
    }

    #[test]
    fn zn_strict_gamma_table_marks_escaping_sums() {
        let z8 = make_zn_gamma(8, &[6, 2, 4, 2], true).unwrap();
        let g: Vec<String> = z8.gamma().labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(g, ["2", "4", "6"]);
        assert_eq!(z8.gamma_add(0, 0), Some(1)); // 2+2=4
        assert_eq!(z8.gamma_add(0, 2), None); // 2+6=0
    }

    #[test]
    fn ternary_product_examples() {
        let z8 = make_zn_gamma(8, &[2, 4, 6], false).unwrap();
        let l = |s: &str| Label::atom(s);
        assert_eq!(z8.ternary_product(&l("1"), &l("2"), &l("2")).unwrap(), l("4"));
        for al in ["2", "4", "6"] {
            for s in 0..8 {
                assert_eq!(
                    z8.ternary_product(&l("0"), &l(al), &Label::from(s)).unwrap(),
                    l("0")
                );
            }
        }
        assert!(z8.ternary_product(&l("9"), &l("2"), &l("1")).is_err());
        assert!(z8.ternary_product(&l("1"), &l("3"), &l("1")).is_err());

        let mm = make_minmax_gamma(5, &[1, 2, 3]).unwrap();
        assert_eq!(mm.ternary_product(&l("3"), &l("1"), &l("2")).unwrap(), l("1"));
        assert_eq!(mm.ternary_product(&l("4"), &l("2"), &l("3")).unwrap(), l("2"));
    }

    #[test]
    fn minmax_family_is_strict_valid() {
        for n in 1..=5 {
            for mask in 0u32..(1 << n) {
                let gamma: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let mm = make_minmax_gamma(n, &gamma).unwrap();
                assert!(check_gamma_semiring(&mm, Mode::Strict).unwrap().passed, "{}", mm.name());
            }
        }
        assert!(make_minmax_gamma(5, &[5]).is_err());
    }

    #[test]
    fn matrix_sizes_and_bounds() {
        let m = make_matrix_gamma(2, 1, 2).unwrap();
        assert_eq!((m.len(), m.gamma_len()), (4, 4));
        assert_eq!(m.elements().label(1), &Label::atom("[[0,1]]"));
        assert_eq!(m.gamma().label(1), &Label::atom("[[0],[1]]"));
        assert_eq!(make_matrix_gamma(3, 1, 2).unwrap().len(), 9);
        assert_eq!(make_matrix_gamma(2, 2, 2).unwrap().len(), 16);
        assert!(matches!(make_matrix_gamma(3, 2, 2), Err(Error::CarrierTooLarge { .. })));
        assert!(make_matrix_gamma(5, 1, 1).is_err());
        assert!(make_matrix_gamma(2, 1, 5).is_err());
    }

    #[test]
    fn one_by_one_matrices_are_z2() {
        let m = make_matrix_gamma(2, 1, 1).unwrap();
        let z2 = make_zn_gamma(2, &[0, 1], true).unwrap();
        assert_eq!(m.product_planes(), z2.product_planes());
        assert_eq!(m.semigroup().rows(), z2.semigroup().rows());
    }
}
