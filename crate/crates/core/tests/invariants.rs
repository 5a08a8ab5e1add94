//! Structural invariants over random dominant weights of small algebras.

use layerlie::charcalc::{
    character_in_orbit_basis, dominant_weights_below, freudenthal_multiplicities, layer_decomposition, ordered_upto,
    OrderedWeightList, Tables,
};
use layerlie::layercalc::{count_weights_bruteforce, dim_at};
use layerlie::weylgroup::orbit_size;
use layerlie::{Algebra, Rational, Weight};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TYPES: [(&str, i64); 6] = [("A2", 4), ("B2", 4), ("G2", 3), ("A3", 2), ("B3", 2), ("C3", 2)];

fn algebra_and_weight() -> impl Strategy<Value = (&'static str, Weight)> {
    (0..TYPES.len()).prop_flat_map(|i| {
        let (t, max) = TYPES[i];
        let rank = t[1..].parse::<usize>().unwrap();
        proptest::collection::vec(0..=max, rank).prop_map(move |l| (t, Weight::new(l)))
    })
}

fn tables(alg: &Algebra, order: &OrderedWeightList) -> Tables {
    Tables::build(alg, order).unwrap().unwrap()
}

/// Shuffle each run of equal `R` values.
fn shuffle_ties(order: &OrderedWeightList, seed: u64) -> OrderedWeightList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = order.r_values();
    let mut perm: Vec<usize> = Vec::with_capacity(r.len());
    let mut start = 0;
    while start < r.len() {
        let end = (start..r.len()).find(|&j| r[j] != r[start]).unwrap_or(r.len());
        let mut block: Vec<usize> = (start..end).collect();
        block.shuffle(&mut rng);
        perm.extend(block);
        start = end;
    }
    order.permuted(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn layer_sums_are_dominance_times_orbit_sums((t, lambda) in algebra_and_weight()) {
        let alg = Algebra::from_token(t).unwrap();
        let tb = tables(&alg, &ordered_upto(&alg, &lambda).unwrap());
        prop_assert_eq!(tb.dominance.matrix.mul(&tb.orbit_sums.matrix), tb.layer_sums.matrix.clone());
        prop_assert_eq!(tb.layer_decompositions.matrix.mul(&tb.dominance.matrix), tb.characters.matrix.clone());
    }

    #[test]
    fn r_is_strictly_monotone_under_dominance((t, lambda) in algebra_and_weight()) {
        let alg = Algebra::from_token(t).unwrap();
        let r = &alg.layer_polynomial().unwrap().poly;
        let top = r.eval_int(lambda.labels());
        for mu in dominant_weights_below(alg.root_system(), &lambda) {
            if mu != lambda {
                prop_assert!(r.eval_int(mu.labels()) < top, "R({}) >= R({})", mu, lambda);
            }
        }
    }

    #[test]
    fn r_counts_weights((t, lambda) in algebra_and_weight()) {
        let alg = Algebra::from_token(t).unwrap();
        let r = alg.layer_polynomial().unwrap().poly.eval_int(lambda.labels());
        let n = count_weights_bruteforce(alg.root_system(), &lambda);
        prop_assert_eq!(r, Rational::from_integer(n.into()));
    }

    #[test]
    fn ties_do_not_change_expansions((t, lambda) in algebra_and_weight(), seed in any::<u64>()) {
        let alg = Algebra::from_token(t).unwrap();
        let order = ordered_upto(&alg, &lambda).unwrap();
        let a = tables(&alg, &order);
        let b = tables(&alg, &shuffle_ties(&order, seed));
        for w in order.weights() {
            let (i, j) = (a.order.position(w).unwrap(), b.order.position(w).unwrap());
            prop_assert_eq!(a.character(i), b.character(j));
            prop_assert_eq!(a.layer_decomposition(i), b.layer_decomposition(j));
        }
    }

    #[test]
    fn characters_match_freudenthal_and_dimension((t, lambda) in algebra_and_weight()) {
        let alg = Algebra::from_token(t).unwrap();
        let rs = alg.root_system();
        let ch = character_in_orbit_basis(&alg, &lambda).unwrap();
        prop_assert_eq!(&ch, &freudenthal_multiplicities(rs, &lambda));
        let total: i64 = ch.iter().map(|(mu, &m)| m * orbit_size(rs, mu) as i64).sum();
        prop_assert_eq!(Rational::from_integer(total.into()), dim_at(rs, &lambda));
    }

    #[test]
    fn layer_decomposition_is_nonnegative_and_sums_to_dimension((t, lambda) in algebra_and_weight()) {
        let alg = Algebra::from_token(t).unwrap();
        let rs = alg.root_system();
        let dec = layer_decomposition(&alg, &lambda).unwrap();
        prop_assert_eq!(dec.coeff(&lambda), 1);
        let mut total = 0i64;
        for (mu, &c) in dec.iter() {
            prop_assert!(c >= 0, "negative coefficient {} at {}", c, mu);
            let layer: i64 = dominant_weights_below(rs, mu).iter().map(|nu| orbit_size(rs, nu) as i64).sum();
            total += c * layer;
        }
        prop_assert_eq!(Rational::from_integer(total.into()), dim_at(rs, &lambda));
    }
}
