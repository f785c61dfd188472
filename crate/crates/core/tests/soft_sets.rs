mod common;

use std::collections::BTreeSet;

use common::{
    naive_op, plain, plain_subset, random_params, random_soft_function, random_soft_set, random_soft_subset, rng, universe,
    Plain, POOL,
};
use proptest::prelude::*;
use rand::Rng;
use softgamma::soft::{
    and_intersect, cartesian_product, extended_intersect, extended_union, is_soft_subset, make_soft_function,
    or_union, relative_null, restricted_intersect, restricted_union, soft_equal, soft_image, soft_preimage, support,
    IndexedFamily, SoftSet,
};
use softgamma::{Error, Label};

fn pair(seed: u64, same_params: bool) -> (SoftSet, SoftSet) {
    let mut r = rng(seed);
    let u = universe(r.gen_range(1..=6));
    let w = random_params(&mut r, &POOL);
    let y = if same_params { w.clone() } else { random_params(&mut r, &POOL) };
    (random_soft_set(&mut r, &u, &w), random_soft_set(&mut r, &u, &y))
}

fn params(ss: &SoftSet) -> BTreeSet<Label> {
    ss.parameter_list().into_iter().collect()
}

fn naive(kind: &str, a: &Plain, b: &Plain) -> Plain {
    naive_op(kind, &[a.clone(), b.clone()])
}

fn swap(p: &Plain) -> Plain {
    p.iter()
        .map(|(k, v)| match k {
            Label::Tuple(parts) => (Label::tuple(parts.iter().rev().cloned()), v.clone()),
            atom => (atom.clone(), v.clone()),
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_match_reference(seed in any::<u64>()) {
        let (a, b) = pair(seed, false);
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        let (pa, pb) = (plain(&a), plain(&b));
        let overlap = params(&a).intersection(&params(&b)).count() > 0;
        if overlap {
            prop_assert_eq!(plain(&restricted_intersect(&fam).unwrap()), naive("rint", &pa, &pb));
            prop_assert_eq!(plain(&restricted_union(&fam).unwrap()), naive("runion", &pa, &pb));
        } else {
            prop_assert!(matches!(restricted_intersect(&fam), Err(Error::EmptyParameterIntersection)));
            prop_assert!(matches!(restricted_union(&fam), Err(Error::EmptyParameterIntersection)));
        }
        prop_assert_eq!(plain(&extended_intersect(&fam).unwrap()), naive("eint", &pa, &pb));
        prop_assert_eq!(plain(&extended_union(&fam).unwrap()), naive("eunion", &pa, &pb));
        prop_assert_eq!(plain(&and_intersect(&fam).unwrap()), naive("and", &pa, &pb));
        prop_assert_eq!(plain(&or_union(&fam).unwrap()), naive("or", &pa, &pb));
    }

    #[test]
    fn parameter_set_laws(seed in any::<u64>()) {
        let (a, b) = pair(seed, false);
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        let (w, y) = (params(&a), params(&b));
        if let Ok(r) = restricted_intersect(&fam) {
            prop_assert_eq!(params(&r), w.intersection(&y).cloned().collect::<BTreeSet<_>>());
        }
        prop_assert_eq!(params(&extended_union(&fam).unwrap()), w.union(&y).cloned().collect::<BTreeSet<_>>());
        prop_assert_eq!(params(&extended_intersect(&fam).unwrap()), w.union(&y).cloned().collect::<BTreeSet<_>>());
        let and = and_intersect(&fam).unwrap();
        prop_assert_eq!(and.len(), w.len() * y.len());
        let prod = cartesian_product(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(prod.len(), w.len() * y.len());
        prop_assert_eq!(prod.universe().len(), a.universe().len() * b.universe().len());
    }

    #[test]
    fn monotonicity(seed in any::<u64>()) {
        let (a, b) = pair(seed, false);
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        if let Ok(r) = restricted_intersect(&fam) {
            prop_assert!(is_soft_subset(&r, &a).unwrap());
            prop_assert!(is_soft_subset(&r, &b).unwrap());
        }
        let u = extended_union(&fam).unwrap();
        prop_assert!(is_soft_subset(&a, &u).unwrap());
        prop_assert!(is_soft_subset(&b, &u).unwrap());
    }

    #[test]
    fn extended_and_restricted_agree_on_equal_parameters(seed in any::<u64>()) {
        let (a, b) = pair(seed, true);
        let fam = IndexedFamily::pair(&a, &b).unwrap();
        prop_assert!(soft_equal(&extended_intersect(&fam).unwrap(), &restricted_intersect(&fam).unwrap()).unwrap());
        prop_assert!(soft_equal(&extended_union(&fam).unwrap(), &restricted_union(&fam).unwrap()).unwrap());
    }

    #[test]
    fn restricted_ops_commute_and_associate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = universe(r.gen_range(1..=6));
        let w = random_params(&mut r, &POOL);
        let (a, b, c) = (random_soft_set(&mut r, &u, &w), random_soft_set(&mut r, &u, &w), random_soft_set(&mut r, &u, &w));
        for op in [restricted_intersect, restricted_union] {
            let ab = op(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
            let ba = op(&IndexedFamily::pair(&b, &a).unwrap()).unwrap();
            prop_assert!(soft_equal(&ab, &ba).unwrap());
            let left = op(&IndexedFamily::pair(&ab, &c).unwrap()).unwrap();
            let bc = op(&IndexedFamily::pair(&b, &c).unwrap()).unwrap();
            let right = op(&IndexedFamily::pair(&a, &bc).unwrap()).unwrap();
            prop_assert!(soft_equal(&left, &right).unwrap());
        }
    }

    #[test]
    fn tuple_operations_are_symmetric_up_to_swap(seed in any::<u64>()) {
        let (a, b) = pair(seed, false);
        let ab = and_intersect(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        let ba = and_intersect(&IndexedFamily::pair(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(plain(&ab), swap(&plain(&ba)));
        let ab = or_union(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        let ba = or_union(&IndexedFamily::pair(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(plain(&ab), swap(&plain(&ba)));
    }

    #[test]
    fn support_of_extended_union(seed in any::<u64>()) {
        let (a, b) = pair(seed, false);
        let u = extended_union(&IndexedFamily::pair(&a, &b).unwrap()).unwrap();
        let expected: BTreeSet<Label> = support(&a).into_iter().chain(support(&b)).collect();
        prop_assert_eq!(support(&u).into_iter().collect::<BTreeSet<_>>(), expected);
        prop_assert!(support(&relative_null(a.universe(), &a.parameter_list()).unwrap()).is_empty());
    }

    #[test]
    fn soft_function_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = random_soft_function(&mut r);
        let fg = make_soft_function(inst.f.clone(), inst.g.clone(), inst.source.clone(), inst.target.clone()).unwrap();
        let image = soft_image(&fg);
        let y_labels: Vec<Label> = inst.g.iter().map(|&j| inst.target.value_at(j).0.clone()).collect();
        let back = soft_preimage(
            inst.source.universe(),
            &inst.f,
            &inst.source.parameter_list(),
            &y_labels,
            &image,
        )
        .unwrap();
        prop_assert!(is_soft_subset(&inst.source, &back).unwrap());
        let sub = random_soft_subset(&mut r, &inst.source);
        let img = fg.image_of(&sub).unwrap();
        prop_assert!(is_soft_subset(&img, &inst.target).unwrap());
        // reference: the image value at y is the union of f(ρ(ω)) over the fiber
        let naive: Plain = inst.target.parameter_list().iter().enumerate().map(|(j, y)| {
            let vals = inst.g.iter().enumerate().filter(|(_, &gj)| gj == j)
                .flat_map(|(i, _)| inst.source.value_at(i).1.iter().map(|x| inst.target.universe().label(inst.f[x]).clone()).collect::<Vec<_>>())
                .collect();
            (y.clone(), vals)
        }).collect();
        prop_assert!(plain_subset(&plain(&image), &naive) && plain_subset(&naive, &plain(&image)));
    }
}
