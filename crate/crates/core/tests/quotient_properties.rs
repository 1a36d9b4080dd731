mod common;

use common::random::{build, raw_homogeneous, shuffled, RawPoly};
use fsplit::quotient::{equal_mod, image_mod, minimal_generators, prune_generators};
use fsplit::{Ideal, Polynomial, RingContext};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Homogeneous J and I in a small standard-graded ring.
fn graded_pair() -> impl Strategy<Value = (u64, usize, Vec<RawPoly>, Vec<RawPoly>)> {
    (prop::sample::select(vec![2u64, 3, 5]), 2usize..=4).prop_flat_map(|(p, n)| {
        let gen = (1u32..=3).prop_flat_map(move |d| raw_homogeneous(n, d, 3));
        (
            Just(p),
            Just(n),
            prop::collection::vec(gen.clone(), 1..=4),
            prop::collection::vec(gen, 0..=3),
        )
    })
}

fn ideal(ring: &std::sync::Arc<RingContext>, raws: &[RawPoly]) -> Ideal {
    Ideal::new(ring, raws.iter().map(|r| build(ring, r)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pruning_order_does_not_change_the_count((p, n, j, i) in graded_pair(), seed in any::<u64>()) {
        let ring = RingContext::standard(p, n).unwrap();
        let (j, i) = (ideal(&ring, &j), ideal(&ring, &i));
        let (mu, _) = minimal_generators(&j, &i).unwrap();
        // a redundant homogeneous generating list: generators, their pairwise
        // sums in equal degree, and multiples by x1
        let gens: Vec<Polynomial> = j.generators().to_vec();
        let mut list = gens.clone();
        for a in &gens {
            list.push(a.mul(&Polynomial::var(&ring, 0)).unwrap());
            for b in &gens {
                if a.total_degree() == b.total_degree() && a != b {
                    list.push(a + b);
                }
            }
        }
        list.retain(|g| !g.is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let order = shuffled(&mut rng, &list);
            prop_assert_eq!(prune_generators(order, &i).unwrap().len(), mu);
        }
    }

    #[test]
    fn count_zero_iff_contained((p, n, j, i) in graded_pair()) {
        let ring = RingContext::standard(p, n).unwrap();
        let (j, i) = (ideal(&ring, &j), ideal(&ring, &i));
        let (mu, gens) = minimal_generators(&j, &i).unwrap();
        prop_assert_eq!(mu == 0, i.contains_ideal(&j).unwrap());
        if mu == 1 {
            let single = Ideal::new(&ring, gens.clone()).unwrap();
            prop_assert!(equal_mod(&j, &single, &i).unwrap());
        }
        // I itself always has count zero
        prop_assert_eq!(minimal_generators(&i, &i).unwrap().0, 0);
    }

    #[test]
    fn display_generators_regenerate((p, n, j, i) in graded_pair()) {
        let ring = RingContext::standard(p, n).unwrap();
        let (j, i) = (ideal(&ring, &j), ideal(&ring, &i));
        let image = image_mod(&j, &i).unwrap();
        let regenerated = Ideal::new(&ring, image.display_gens().to_vec()).unwrap();
        prop_assert!(equal_mod(&regenerated, &j, &i).unwrap());
        prop_assert!(image.preimage().equals(&j.sum(&i).unwrap()).unwrap());
        for g in image.display_gens() {
            prop_assert!(!i.contains(g).unwrap());
        }
    }
}
