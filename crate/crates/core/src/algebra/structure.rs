use crate::error::{Error, Result};
use crate::label::{Label, Universe};

/// A finite carrier with a total binary operation `+`, given as a Cayley
/// table of positions.
///
/// Only the shape is enforced on construction; commutativity and
/// associativity are checked by [`check_commutative_semigroup`].
///
/// [`check_commutative_semigroup`]: super::check_commutative_semigroup
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCommutativeSemigroup {
    elements: Universe,
    table: Vec<usize>,
}

impl FiniteCommutativeSemigroup {
    pub fn new(elements: Vec<Label>, add_table: Vec<Vec<usize>>) -> Result<Self> {
        let elements = Universe::new(elements)?;
        let n = elements.len();
        if add_table.len() != n {
            return Err(Error::MalformedTable(format!(
                "addition table has {} rows for {} elements",
                add_table.len(),
                n
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in add_table.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "addition row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "addition entry ({i},{j}) = {v} is out of range"
                    )));
                }
                table.push(v);
            }
        }
        Ok(FiniteCommutativeSemigroup { elements, table })
    }

    pub fn from_fn(elements: Vec<Label>, add: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.len();
        let rows = (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect();
        Self::new(elements, rows)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &Universe {
        &self.elements
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.table[x * self.len() + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        self.table.chunks(n.max(1)).take(n).map(<[usize]>::to_vec).collect()
    }

    pub fn rows_optional(&self) -> Vec<Vec<Option<usize>>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(Some).collect())
            .collect()
    }
}

/// Finite Γ-semiring: a carrier `S` with `+`, a parameter set `Γ`, and a
/// ternary product `S × Γ × S → S` stored as a dense table.
///
/// `gamma_add` is optional. When present, an entry of `None` means the sum
/// of the two Γ elements falls outside Γ; the strict axiom check reports it
/// as a Γ-closure violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSemiring {
    name: String,
    s: FiniteCommutativeSemigroup,
    gamma: Universe,
    gamma_add: Option<Vec<Option<usize>>>,
    product: Vec<usize>,
    zero: Option<usize>,
}

impl GammaSemiring {
    pub fn new(
        name: impl Into<String>,
        s: FiniteCommutativeSemigroup,
        gamma_elements: Vec<Label>,
        gamma_add: Option<Vec<Vec<Option<usize>>>>,
        product: Vec<Vec<Vec<usize>>>,
        zero: Option<usize>,
    ) -> Result<Self> {
        let gamma = Universe::new(gamma_elements)?;
        let n = s.len();
        let g = gamma.len();

        let gamma_add = match gamma_add {
            None => None,
            Some(rows) => {
                if rows.len() != g {
                    return Err(Error::MalformedTable(format!(
                        "Γ addition table has {} rows for {g} elements",
                        rows.len()
                    )));
                }
                let mut flat = Vec::with_capacity(g * g);
                for (i, row) in rows.into_iter().enumerate() {
                    if row.len() != g {
                        return Err(Error::MalformedTable(format!(
                            "Γ addition row {i} has {} entries, expected {g}",
                            row.len()
                        )));
                    }
                    for (j, v) in row.into_iter().enumerate() {
                        if matches!(v, Some(v) if v >= g) {
                            return Err(Error::MalformedTable(format!(
                                "Γ addition entry ({i},{j}) is out of range"
                            )));
                        }
                        flat.push(v);
                    }
                }
                Some(flat)
            }
        };

        if product.len() != n {
            return Err(Error::MalformedTable(format!(
                "product table has {} planes for {n} elements",
                product.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * g * n);
        for (a, plane) in product.into_iter().enumerate() {
            if plane.len() != g {
                return Err(Error::MalformedTable(format!(
                    "product plane {a} has {} rows for {g} Γ elements",
                    plane.len()
                )));
            }
            for (al, row) in plane.into_iter().enumerate() {
                if row.len() != n {
                    return Err(Error::MalformedTable(format!(
                        "product row ({a},{al}) has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (b, v) in row.into_iter().enumerate() {
                    if v >= n {
                        return Err(Error::MalformedTable(format!(
                            "product entry ({a},{al},{b}) = {v} is out of range"
                        )));
                    }
                    flat.push(v);
                }
            }
        }

        if let Some(z) = zero {
            if z >= n {
                return Err(Error::MalformedTable(format!("zero index {z} is out of range")));
            }
        }

        Ok(GammaSemiring {
            name: name.into(),
            s,
            gamma,
            gamma_add,
            product: flat,
            zero,
        })
    }

    /// Builds all tables from closures over positions.
    pub fn from_fns(
        name: impl Into<String>,
        s: FiniteCommutativeSemigroup,
        gamma_elements: Vec<Label>,
        gamma_add: Option<&dyn Fn(usize, usize) -> Option<usize>>,
        product: impl Fn(usize, usize, usize) -> usize,
        zero: Option<usize>,
    ) -> Result<Self> {
        let n = s.len();
        let g = gamma_elements.len();
        let gamma_add =
            gamma_add.map(|f| (0..g).map(|x| (0..g).map(|y| f(x, y)).collect()).collect());
        let product = (0..n)
            .map(|a| {
                (0..g)
                    .map(|al| (0..n).map(|b| product(a, al, b)).collect())
                    .collect()
            })
            .collect();
        Self::new(name, s, gamma_elements, gamma_add, product, zero)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn semigroup(&self) -> &FiniteCommutativeSemigroup {
        &self.s
    }

    pub fn elements(&self) -> &Universe {
        self.s.elements()
    }

    pub fn gamma(&self) -> &Universe {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn gamma_len(&self) -> usize {
        self.gamma.len()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn has_gamma_add(&self) -> bool {
        self.gamma_add.is_some()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.s.add(x, y)
    }

    #[inline]
    pub fn product(&self, a: usize, alpha: usize, b: usize) -> usize {
        let n = self.len();
        self.product[(a * self.gamma_len() + alpha) * n + b]
    }

    /// `None` when Γ carries no addition or the sum leaves Γ.
    pub fn gamma_add(&self, alpha: usize, beta: usize) -> Option<usize> {
        self.gamma_add
            .as_ref()
            .and_then(|t| t[alpha * self.gamma_len() + beta])
    }

    pub fn gamma_add_rows(&self) -> Option<Vec<Vec<Option<usize>>>> {
        let g = self.gamma_len();
        self.gamma_add
            .as_ref()
            .map(|t| (0..g).map(|i| t[i * g..(i + 1) * g].to_vec()).collect())
    }

    pub fn product_planes(&self) -> Vec<Vec<Vec<usize>>> {
        let (n, g) = (self.len(), self.gamma_len());
        (0..n)
            .map(|a| {
                (0..g)
                    .map(|al| (0..n).map(|b| self.product(a, al, b)).collect())
                    .collect()
            })
            .collect()
    }

    /// `a α b` by label.
    pub fn ternary_product(&self, a: &Label, alpha: &Label, b: &Label) -> Result<Label> {
        let a = self.elements().require(a, "S")?;
        let alpha = self.gamma.require(alpha, "Γ")?;
        let b = self.elements().require(b, "S")?;
        Ok(self.elements().label(self.product(a, alpha, b)).clone())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with one product entry replaced.
    pub fn with_product_entry(&self, a: usize, alpha: usize, b: usize, value: usize) -> Result<Self> {
        let (n, g) = (self.len(), self.gamma_len());
        if a >= n || b >= n || value >= n || alpha >= g {
            return Err(Error::MalformedTable("product mutation out of range".into()));
        }
        let mut out = self.clone();
        out.product[(a * g + alpha) * n + b] = value;
        Ok(out)
    }

    /// One-element Γ-semiring `{0}` over the given Γ; the terminal object for
    /// homomorphisms sharing that Γ.
    pub fn trivial(gamma: &Universe) -> Self {
        let s = FiniteCommutativeSemigroup::new(vec![Label::atom("0")], vec![vec![0]])
            .expect("one-element table");
        let g = gamma.len();
        GammaSemiring {
            name: "trivial".into(),
            s,
            gamma: gamma.clone(),
            gamma_add: None,
            product: vec![0; g],
            zero: Some(0),
        }
    }

    /// Direct product of Γ-semirings over one shared Γ, with coordinatewise
    /// operations. Elements are tuple labels in lexicographic order (first
    /// factor slowest), matching the universe order of soft cartesian products.
    pub fn product_of(factors: &[&GammaSemiring]) -> Result<Self> {
        let first = factors.first().ok_or(Error::EmptyFamily)?;
        if factors.iter().any(|f| f.gamma != first.gamma) {
            return Err(Error::GammaMismatch);
        }
        let radices: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let total: usize = radices.iter().product();
        let decode = |mut code: usize| -> Vec<usize> {
            let mut digits = vec![0; radices.len()];
            for i in (0..radices.len()).rev() {
                digits[i] = code % radices[i];
                code /= radices[i];
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize {
            digits
                .iter()
                .zip(&radices)
                .fold(0, |acc, (d, r)| acc * r + d)
        };
        let coords: Vec<Vec<usize>> = (0..total).map(decode).collect();
        let labels = coords
            .iter()
            .map(|c| {
                Label::tuple(
                    c.iter()
                        .zip(factors)
                        .map(|(&p, f)| f.elements().label(p).clone()),
                )
            })
            .collect();
        let s = FiniteCommutativeSemigroup::from_fn(labels, |x, y| {
            let d: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.add(coords[x][i], coords[y][i]))
                .collect();
            encode(&d)
        })?;
        let all_have_gamma_add = factors.iter().all(|f| f.has_gamma_add());
        let gamma_add_fn = |a: usize, b: usize| first.gamma_add(a, b);
        let zero = factors
            .iter()
            .map(|f| f.zero)
            .collect::<Option<Vec<usize>>>()
            .map(|z| encode(&z));
        let name = factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join(" x ");
        GammaSemiring::from_fns(
            name,
            s,
            first.gamma.labels().to_vec(),
            all_have_gamma_add.then_some(&gamma_add_fn as &dyn Fn(usize, usize) -> Option<usize>),
            |a, al, b| {
                let d: Vec<usize> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.product(coords[a][i], al, coords[b][i]))
                    .collect();
                encode(&d)
            },
            zero,
        )
    }
}
