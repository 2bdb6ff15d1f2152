use proptest::prelude::*;

use tvartop_core::chow::{hilbert_function, is_shellable_divfan};
use tvartop_core::complexes::verify_shelling;
use tvartop_core::invariants::{betti_numbers, grothendieck_class, grothendieck_class_resolution};
use tvartop_core::polyhedron::mu;
use tvartop_core::random::{complete_complex, complete_tail_fan, product_with_line, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn h_numbers_sum_to_top_f(seed in any::<u64>()) {
        let t = complete_complex(&mut rng(seed));
        let n = t.ambient();
        let sum: i64 = t.h_vector().iter().sum();
        prop_assert_eq!(sum, t.f_vector()[n] as i64);
    }

    #[test]
    fn shellings_verify(seed in any::<u64>()) {
        let t = complete_complex(&mut rng(seed));
        let data = t.find_shelling().unwrap();
        prop_assert!(verify_shelling(&t, &data).is_ok());
    }

    #[test]
    fn bouquet_has_one_component_per_vertex(seed in any::<u64>()) {
        let t = complete_complex(&mut rng(seed));
        prop_assert_eq!(t.bouquet_components().len(), t.vertices().len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn product_fans_satisfy_duality(seed in any::<u64>()) {
        let tail = complete_tail_fan(&mut rng(seed));
        let s = product_with_line(&tail).unwrap();
        let n1 = s.rank() + 1;
        let hilb = hilbert_function(&s, n1).unwrap();
        for d in 0..=n1 {
            prop_assert_eq!(hilb[d], hilb[n1 - d]);
        }
        let res = grothendieck_class_resolution(&s).unwrap();
        for (d, &h) in hilb.iter().enumerate() {
            prop_assert_eq!(h as i64, res.l_coefficient((n1 - d) as u32));
        }
        let class = grothendieck_class(&s).unwrap();
        let betti = betti_numbers(&s).unwrap();
        for (k, &b) in betti.iter().enumerate() {
            prop_assert_eq!(class.l_coefficient(k as u32), b);
        }
    }

    #[test]
    fn product_fans_are_shellable(seed in any::<u64>()) {
        let s = product_with_line(&complete_tail_fan(&mut rng(seed))).unwrap();
        let r = is_shellable_divfan(&s);
        prop_assert!(r.shellable, "{:?}", r.reasons);
    }
}

#[test]
fn specialization_entries_are_multiplicities() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/fans/f2.json")).unwrap();
    let s = tvartop_core::document::parse::<tvartop_core::FanDocument>(&text).unwrap().to_fan().unwrap();
    for m in is_shellable_divfan(&s).maps {
        for (row, g) in m.matrix.iter().zip(&m.target) {
            for x in row {
                assert!(*x >= 0.into());
                if *x != 0.into() {
                    let lattice = mu(&g.vertices()[0]) == 1.into();
                    assert_eq!(*x == 1.into(), lattice, "entry {x} at {g}");
                }
            }
        }
    }
}
