//! Invariants of the constructions, checked on randomly drawn small inputs.

use emtensor::algebra::{enumerate_algebras, Algebra};
use emtensor::bimorphism::is_bimorphism;
use emtensor::finset::BaseKind;
use emtensor::monad::Monad;
use emtensor::monoidal::{compose, identity, Monoidal};
use emtensor::tensor::{tensor_product, tensor_product_alt};
use proptest::prelude::*;

fn monads() -> Vec<Monad> {
    vec![
        Monad::identity(BaseKind::Cartesian),
        Monad::identity(BaseKind::Cocartesian),
        Monad::powerset(BaseKind::Cartesian),
        Monad::powerset(BaseKind::Cocartesian),
        Monad::vector_space(2, BaseKind::Cartesian).unwrap(),
        Monad::vector_space(3, BaseKind::Cartesian).unwrap(),
    ]
}

/// Every labelled algebra of size 1..=3 whose census fits the default budget,
/// plus the free ones on ≤ 2 generators, keeping carriers of at most 4 elements.
fn small_algebras(m: &Monad) -> Vec<Algebra> {
    let mut v: Vec<Algebra> = (1..=3).flat_map(|n| enumerate_algebras(m, n).unwrap_or_default()).collect();
    v.extend((0..=2).map(|n| emtensor::fixtures::free_on(m, n).unwrap()));
    v.retain(|a| a.size() <= 4);
    v
}

fn canonical(p: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    p.iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monoidal_conditions_hold(mi in 0usize..6, nx in 0usize..3, ny in 0usize..3, nz in 0usize..3) {
        let m = &monads()[mi];
        // F₃ at two points already has 3^9 elements in TTX; keep it to one point.
        let (nx, ny, nz) = if mi == 5 { (nx.min(1), ny.min(1), nz.min(1)) } else { (nx, ny, nz) };
        let r = m.check_monoidal_laws((nx, ny, nz)).unwrap();
        prop_assert!(r.all_pass(), "{}: {:?}", m.name(), r.first_failure());
        let r = m.check_monad_laws(nx).unwrap();
        prop_assert!(r.all_pass(), "{}: {:?}", m.name(), r.first_failure());
    }

    #[test]
    fn tensor_is_a_quotient_with_universal_bimorphism(mi in 0usize..6, i in 0usize..64, k in 0usize..64) {
        let m = &monads()[mi];
        let algs = small_algebras(m);
        let (a, b) = (&algs[i % algs.len()], &algs[k % algs.len()]);
        let t = tensor_product(m, a, b).unwrap();
        prop_assert!(is_bimorphism(m, a, b, &t.alg, &t.j).unwrap());
        prop_assert!(t.alg.check(m).unwrap().all_pass());
        if let Ok(q) = t.q_table(m) {
            let mut hit = vec![false; t.alg.size()];
            q.iter().for_each(|&c| hit[c] = true);
            prop_assert!(hit.iter().all(|&h| h), "q is not surjective");
            let alt = tensor_product_alt(m, a, b).unwrap();
            prop_assert_eq!(canonical(&q), canonical(&alt.q_table(m).unwrap()));
        }
    }

    #[test]
    fn tensor_is_symmetric_and_unital(mi in 0usize..6, i in 0usize..64, k in 0usize..64) {
        let m = &monads()[mi];
        let algs = small_algebras(m);
        let (a, b) = (&algs[i % algs.len()], &algs[k % algs.len()]);
        let mon = Monoidal::new(m).unwrap();
        let s = mon.braiding(a, b).unwrap();
        let s2 = mon.braiding(b, a).unwrap();
        prop_assert_eq!(compose(&s2.map, &s.map), identity(s.map.len()));
        let (l, linv) = mon.left_unitor(a).unwrap();
        prop_assert_eq!(compose(&l.map, &linv), identity(a.size()));
        prop_assert_eq!(mon.tensor(&mon.unit().clone(), a).unwrap().alg.size(), a.size());
    }

    #[test]
    fn tensor_of_homs_is_functorial(i in 0usize..64, k in 0usize..64, pick in 0usize..1000) {
        let m = Monad::powerset(BaseKind::Cartesian);
        let algs = small_algebras(&m);
        let (a, b) = (&algs[i % algs.len()], &algs[k % algs.len()]);
        let mon = Monoidal::new(&m).unwrap();
        let ends = a.enumerate_homs(&m, a).unwrap();
        let f = &ends[pick % ends.len()];
        let g = &ends[(pick / 7) % ends.len()];
        let ib = identity(b.size());
        let fg = mon.tensor_homs((a, a, &compose(f, g)), (b, b, &ib)).unwrap();
        let f1 = mon.tensor_homs((a, a, f), (b, b, &ib)).unwrap();
        let g1 = mon.tensor_homs((a, a, g), (b, b, &ib)).unwrap();
        prop_assert_eq!(fg, compose(&f1, &g1));
        let id = mon.tensor_homs((a, a, &identity(a.size())), (b, b, &ib)).unwrap();
        prop_assert_eq!(id, identity(f1.len()));
    }

    #[test]
    fn vector_tensor_dimension_multiplies(p in prop::sample::select(vec![2u32, 3]), da in 0usize..3, db in 0usize..3) {
        let m = Monad::vector_space(p, BaseKind::Cartesian).unwrap();
        let (a, b) = (emtensor::fixtures::free_on(&m, da).unwrap(), emtensor::fixtures::free_on(&m, db).unwrap());
        prop_assume!((p as usize).pow((da * db) as u32) <= 729);
        let t = tensor_product(&m, &a, &b).unwrap();
        prop_assert_eq!(t.alg.size(), (p as usize).pow((da * db) as u32));
    }
}
