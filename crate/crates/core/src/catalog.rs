//! Named example structures.

use crate::algebra::{make_matrix_gamma, make_minmax_gamma, make_zn_gamma, GammaSemiring};
use crate::error::{Error, Result};
use crate::soft::{soft_set_from_relation, SoftSet, TernaryRelation};

pub const EXAMPLE_NAMES: [&str; 3] = ["z8", "minmax5", "matrix2x1x2"];

#[derive(Clone, Debug)]
pub struct Example {
    pub structure: GammaSemiring,
    pub relation: Option<TernaryRelation>,
    pub soft_set: Option<SoftSet>,
}

/// ℤ₈ with Γ = {2,4,6}. The Γ addition table is attached; sums leaving Γ
/// are recorded as undefined.
pub fn z8() -> GammaSemiring {
    make_zn_gamma(8, &[2, 4, 6], true)
        .expect("valid parameters")
        .with_name("z8")
}

/// `(y, α, s) ∈ R` iff `yαs mod 8 ∈ {0, 4, 6}`, with `N = ℤ₈`.
pub fn z8_relation(gs: &GammaSemiring) -> TernaryRelation {
    TernaryRelation::from_fn(
        gs.elements().clone(),
        gs.gamma().clone(),
        gs.elements().clone(),
        |y, al, s| matches!(gs.product(y, al, s), 0 | 4 | 6),
    )
}

pub fn example(name: &str) -> Result<Example> {
    match name {
        "z8" => {
            let gs = z8();
            let rel = z8_relation(&gs);
            let ss = soft_set_from_relation(&rel, &gs)?;
            Ok(Example {
                structure: gs,
                relation: Some(rel),
                soft_set: Some(ss),
            })
        }
        "minmax5" => Ok(Example {
            structure: make_minmax_gamma(5, &[1, 2, 3])?.with_name("minmax5"),
            relation: None,
            soft_set: None,
        }),
        "matrix2x1x2" => Ok(Example {
            structure: make_matrix_gamma(2, 1, 2)?.with_name("matrix2x1x2"),
            relation: None,
            soft_set: None,
        }),
        other => Err(Error::InvalidArgument(format!(
            "unknown example {other:?}; expected one of {}",
            EXAMPLE_NAMES.join(", ")
        ))),
    }
}
