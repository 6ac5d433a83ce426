//! Randomized laws for permutations, generated groups, lattices, and the
//! group-file format.

use proptest::prelude::*;

use grouplab::{parse_group_file, write_group_file, FiniteGroup, GroupConfig, Permutation};

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<prop::sample::Index>(), n).prop_map(move |picks| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = picks[i].index(i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

fn perm_any() -> impl Strategy<Value = Permutation> {
    (1usize..=10).prop_flat_map(perm_of)
}

fn perm_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..=10).prop_flat_map(|n| (perm_of(n), perm_of(n)))
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..=10).prop_flat_map(|n| (perm_of(n), perm_of(n), perm_of(n)))
}

/// A handful of generators over a small degree; the resulting group orders
/// range from 1 to |S_5| = 120.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=5)
        .prop_flat_map(|n| prop::collection::vec(perm_of(n), 1..=3).prop_map(move |gens| (n, gens)))
        .prop_map(|(n, gens)| FiniteGroup::generate(n, gens, 120).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cycle_text_round_trips(p in perm_any()) {
        let text = p.cycle_string();
        let back = Permutation::parse_cycles(&text, p.degree()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn composition_applies_left_then_right((p, q) in perm_pair()) {
        let pq = p.compose(&q).unwrap();
        for x in 0..p.degree() {
            prop_assert_eq!(pq.apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn composition_is_associative((p, q, r) in perm_triple()) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in perm_any()) {
        let id = Permutation::identity(p.degree()).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
    }

    #[test]
    fn identity_is_neutral(p in perm_any()) {
        let id = Permutation::identity(p.degree()).unwrap();
        prop_assert_eq!(id.compose(&p).unwrap(), p.clone());
        prop_assert_eq!(p.compose(&id).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn regenerating_from_the_same_generators_is_deterministic(g in small_group()) {
        let gens: Vec<Permutation> = g.generators().to_vec();
        let again = FiniteGroup::generate(g.degree(), gens, g.order()).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn group_files_round_trip(g in small_group()) {
        let text = write_group_file("random", &g);
        let (name, back) = parse_group_file(&text, &GroupConfig::default()).unwrap();
        prop_assert_eq!(name, "random");
        prop_assert_eq!(back, g);
    }

    #[test]
    fn element_orders_divide_the_group_order(g in small_group()) {
        for i in 0..g.order() {
            prop_assert_eq!(g.order() % g.element_order(i), 0);
        }
    }

    #[test]
    fn lattice_laws_on_random_groups(g in small_group()) {
        let lat = g.lattice().unwrap();
        // Lagrange, plus closure of the subgroup set under conjugation.
        for idx in 0..lat.len() {
            prop_assert_eq!(g.order() % lat.order_of(idx), 0);
            let h = lat.subgroup(idx);
            for c in 0..g.order() {
                let conj = h.conjugated(c);
                prop_assert!(lat.position(conj.members()).is_some());
            }
        }
        // Product sets in both orders have the same size.
        if lat.len() >= 2 {
            let h = lat.subgroup(1);
            let k = lat.subgroup(lat.len() - 1);
            let hk = g.product_set(&h, &k).unwrap();
            let kh = g.product_set(&k, &h).unwrap();
            prop_assert_eq!(hk.size(), kh.size());
            prop_assert_eq!(hk.size() * h.intersection(&k).unwrap().order(), h.order() * k.order());
        }
    }

    #[test]
    fn quotients_divide_out_exactly(g in small_group()) {
        let lat = g.lattice().unwrap();
        let normals: Vec<usize> = lat.normal_indices().collect();
        for idx in normals {
            let n = lat.subgroup(idx);
            let quo = g.quotient(&n).unwrap();
            prop_assert_eq!(quo.group().order() * n.order(), g.order());
            // The projection is a homomorphism.
            for a in 0..g.order().min(12) {
                for b in 0..g.order().min(12) {
                    let qa = quo.element_image(&g, a);
                    let qb = quo.element_image(&g, b);
                    let qab = quo.element_image(&g, g.mul(a, b));
                    prop_assert_eq!(quo.group().mul(qa, qb), qab);
                }
            }
        }
    }
}
