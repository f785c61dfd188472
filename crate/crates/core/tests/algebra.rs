mod common;

use common::{mask, naive_closed, naive_subsemirings, oracle_structures};
use proptest::prelude::*;
use softgamma::algebra::{
    check_gamma_semiring, enumerate_sub_gamma_semirings, find_homomorphisms, is_sub_gamma_semiring, make_zn_gamma,
    GammaSemiring, Mode,
};
use softgamma::soft::product_universe;
use softgamma::ElemSet;
use std::collections::BTreeSet;

#[test]
fn enumeration_matches_power_set_filter() {
    for gs in oracle_structures() {
        let got: BTreeSet<u64> = enumerate_sub_gamma_semirings(&gs).unwrap().iter().map(mask).collect();
        assert_eq!(got, naive_subsemirings(&gs), "{}", gs.name());
    }
}

#[test]
fn predicate_matches_naive_closure() {
    for gs in oracle_structures().into_iter().filter(|g| g.len() <= 6) {
        for t in 0u64..(1 << gs.len()) {
            let set = ElemSet::from_mask(gs.len(), t);
            assert_eq!(is_sub_gamma_semiring(&gs, &set), naive_closed(&gs, t), "{} {t:b}", gs.name());
        }
    }
}

#[test]
fn carrier_is_closed_and_empty_is_not() {
    for gs in oracle_structures() {
        assert!(is_sub_gamma_semiring(&gs, &ElemSet::full(gs.len())));
        assert!(!is_sub_gamma_semiring(&gs, &ElemSet::empty(gs.len())));
    }
}

#[test]
fn nonempty_intersections_stay_closed() {
    for gs in oracle_structures() {
        let subs = enumerate_sub_gamma_semirings(&gs).unwrap();
        for a in &subs {
            for b in &subs {
                let c = a.intersection(b);
                if !c.is_empty() {
                    assert!(is_sub_gamma_semiring(&gs, &c), "{}", gs.name());
                }
            }
        }
    }
}

#[test]
fn homomorphic_images_of_subsemirings_are_closed() {
    for gs in oracle_structures().into_iter().filter(|g| g.len() <= 6) {
        let subs = enumerate_sub_gamma_semirings(&gs).unwrap();
        for map in find_homomorphisms(&gs, &gs, 16).unwrap() {
            for t in &subs {
                let img = ElemSet::from_positions(gs.len(), t.iter().map(|x| map[x]));
                assert!(naive_closed(&gs, mask(&img)), "{}", gs.name());
            }
        }
    }
}

#[test]
fn single_product_mutations_are_detected() {
    let gs = make_zn_gamma(4, &[0, 1, 2, 3], true).unwrap();
    assert!(check_gamma_semiring(&gs, Mode::Strict).unwrap().passed);
    let subs: Vec<ElemSet> = enumerate_sub_gamma_semirings(&gs).unwrap();
    let mut mutations = 0;
    for a in 0..4 {
        for al in 0..4 {
            for b in 0..4 {
                for v in (0..4).filter(|&v| v != gs.product(a, al, b)) {
                    let m = gs.with_product_entry(a, al, b, v).unwrap();
                    let broken = !check_gamma_semiring(&m, Mode::Strict).unwrap().passed;
                    let moved = enumerate_sub_gamma_semirings(&m).unwrap() != subs;
                    assert!(broken || moved, "undetected mutation {a}·{al}·{b} → {v}");
                    mutations += 1;
                }
            }
        }
    }
    assert_eq!(mutations, 4 * 4 * 4 * 3);
}

#[test]
fn product_structure_uses_cartesian_ordering() {
    let a = make_zn_gamma(2, &[1], false).unwrap();
    let b = make_zn_gamma(3, &[1], false).unwrap();
    let p = GammaSemiring::product_of(&[&a, &b]).unwrap();
    let u = product_universe(&[a.elements(), b.elements()]).unwrap();
    assert_eq!(p.elements().labels(), u.labels());
    assert!(check_gamma_semiring(&p, Mode::Weak).unwrap().passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zn_structures_are_weak_valid(n in 1usize..=16, bits in any::<u16>()) {
        let gamma: Vec<usize> = (0..n).filter(|i| bits >> i & 1 == 1).collect();
        let gamma = if gamma.is_empty() { vec![bits as usize % n] } else { gamma };
        let gs = make_zn_gamma(n, &gamma, false).unwrap();
        prop_assert!(check_gamma_semiring(&gs, Mode::Weak).unwrap().passed);
    }
}
