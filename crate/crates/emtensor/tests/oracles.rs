//! Brute-force oracles, written without the library's closure or enumeration code,
//! compared against the engine on small sup-lattices and F₂-spaces.

use emtensor::algebra::Algebra;
use emtensor::bimorphism::enumerate_bimorphisms;
use emtensor::finset::BaseKind;
use emtensor::fixtures::{chain, d4, free_on};
use emtensor::monad::Monad;
use emtensor::tensor::{tensor_product, tensor_product_alt};

fn sup() -> Monad {
    Monad::powerset(BaseKind::Cartesian)
}

fn sup_fixtures(m: &Monad) -> Vec<(&'static str, Algebra)> {
    vec![("C2", chain(m, 2).unwrap()), ("C3", chain(m, 3).unwrap()), ("D4", d4(m).unwrap())]
}

/// Join of a set of elements, read off the structure map on its bitmask.
fn join(m: &Monad, a: &Algebra, elems: &[usize]) -> usize {
    a.act(m, elems.iter().fold(0, |acc, &x| acc | (1 << x)))
}

/// Preserves the empty join and all binary joins.
fn preserves_joins(m: &Monad, a: &Algebra, c: &Algebra, h: &dyn Fn(usize) -> usize) -> bool {
    if h(join(m, a, &[])) != join(m, c, &[]) {
        return false;
    }
    (0..a.size()).all(|x| (0..a.size()).all(|y| h(join(m, a, &[x, y])) == join(m, c, &[h(x), h(y)])))
}

fn all_functions(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % k as u64) as usize;
                code /= k as u64;
                d
            })
            .collect()
    })
}

/// The sup-lattice tensor as P(A×B) modulo the congruence generated by
/// {(∨S, b)} ~ {(s, b) : s ∈ S} and its mirror, closed by naive relabelling.
fn naive_tensor_partition(m: &Monad, a: &Algebra, b: &Algebra) -> Vec<usize> {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let size = 1usize << n;
    let pt = |x: usize, y: usize| 1usize << (x * nb + y);
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for s in 0..1usize << na {
        let xs: Vec<usize> = (0..na).filter(|i| s >> i & 1 == 1).collect();
        for y in 0..nb {
            pending.push((pt(join(m, a, &xs), y), xs.iter().map(|&x| pt(x, y)).sum()));
        }
    }
    for s in 0..1usize << nb {
        let ys: Vec<usize> = (0..nb).filter(|i| s >> i & 1 == 1).collect();
        for x in 0..na {
            pending.push((pt(x, join(m, b, &ys)), ys.iter().map(|&y| pt(x, y)).sum()));
        }
    }
    let mut label: Vec<usize> = (0..size).collect();
    let mut seen = std::collections::HashSet::new();
    while let Some((u, v)) = pending.pop() {
        if !seen.insert((u.min(v), u.max(v))) {
            continue;
        }
        let (lu, lv) = (label[u], label[v]);
        if lu != lv {
            label.iter_mut().filter(|l| **l == lv).for_each(|l| *l = lu);
        }
        for k in 0..n {
            pending.push((u | 1 << k, v | 1 << k));
        }
    }
    label
}

/// Relabels a partition by first occurrence, so two partitions compare with `==`.
fn canonical(p: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    p.iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

#[test]
fn sup_tensor_matches_naive_congruence() {
    let m = sup();
    let fx = sup_fixtures(&m);
    for (na, a) in &fx {
        for (nb, b) in &fx {
            if a.size() * b.size() > 9 {
                continue;
            }
            let naive = canonical(&naive_tensor_partition(&m, a, b));
            for t in [tensor_product(&m, a, b).unwrap(), tensor_product_alt(&m, a, b).unwrap()] {
                let q = canonical(&t.q_table(&m).unwrap());
                assert_eq!(q, naive, "{na}⊠{nb}");
            }
        }
    }
}

#[test]
fn known_sup_tensor_sizes() {
    let m = sup();
    let size = |a: &Algebra, b: &Algebra| tensor_product(&m, a, b).unwrap().alg.size();
    let c = |n| chain(&m, n).unwrap();
    // C2 is the unit; Cm⊠Cn is the lattice of down-sets of an (m-1)×(n-1) grid.
    assert_eq!(size(&c(2), &c(3)), 3);
    assert_eq!(size(&c(3), &c(3)), 6);
    assert_eq!(size(&c(3), &c(4)), 10);
    assert_eq!(size(&d4(&m).unwrap(), &d4(&m).unwrap()), 16);
}

fn brute_bimorphisms(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra) -> Vec<Vec<usize>> {
    let (na, nb) = (a.size(), b.size());
    let mut out: Vec<Vec<usize>> = all_functions(na * nb, c.size())
        .filter(|f| {
            (0..nb).all(|y| preserves_joins(m, a, c, &|x| f[x * nb + y]))
                && (0..na).all(|x| preserves_joins(m, b, c, &|y| f[x * nb + y]))
        })
        .collect();
    out.sort();
    out
}

#[test]
fn bimorphisms_match_brute_force() {
    let m = sup();
    let fx = sup_fixtures(&m);
    for (na, a) in &fx {
        for (nb, b) in &fx {
            for (nc, c) in &fx {
                if (c.size() as f64).powi((a.size() * b.size()) as i32) > 3e5 {
                    continue;
                }
                let engine = enumerate_bimorphisms(&m, a, b, c).unwrap();
                assert_eq!(engine, brute_bimorphisms(&m, a, b, c), "Bim({na},{nb};{nc})");
                let t = tensor_product(&m, a, b).unwrap();
                assert_eq!(engine.len(), t.alg.enumerate_homs(&m, c).unwrap().len(), "{na}⊠{nb} -> {nc}");
            }
        }
    }
}

#[test]
fn homomorphisms_match_brute_force() {
    let m = sup();
    let mut algs: Vec<Algebra> = (1..=3).flat_map(|n| emtensor::algebra::enumerate_algebras(&m, n).unwrap()).collect();
    algs.push(d4(&m).unwrap());
    for a in &algs {
        for c in &algs {
            let brute: Vec<Vec<usize>> = all_functions(a.size(), c.size()).filter(|h| preserves_joins(&m, a, c, &|x| h[x])).collect();
            let mut brute = brute;
            brute.sort();
            assert_eq!(a.enumerate_homs(&m, c).unwrap(), brute, "{a:?} -> {c:?}");
        }
    }
}

#[test]
fn sup_algebra_census_counts_labelled_lattices() {
    // Complete lattices on labelled 1-, 2- and 3-element sets: 1, 2 and 6 (chains only).
    let m = sup();
    let counts: Vec<usize> = (1..=3).map(|n| emtensor::algebra::enumerate_algebras(&m, n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 6]);
}

/// Bilinear forms F₂^a × F₂^b -> F₂ by exhaustive search, with vectors as bitmasks.
fn bilinear_form_count(da: usize, db: usize) -> usize {
    let (na, nb) = (1usize << da, 1usize << db);
    all_functions(na * nb, 2)
        .filter(|f| {
            (0..na).all(|x| (0..nb).all(|y| (0..nb).all(|y2| f[x * nb + (y ^ y2)] == f[x * nb + y] ^ f[x * nb + y2])))
                && (0..nb).all(|y| (0..na).all(|x| (0..na).all(|x2| f[(x ^ x2) * nb + y] == f[x * nb + y] ^ f[x2 * nb + y])))
        })
        .count()
}

#[test]
fn f2_tensor_dimensions_match_linear_algebra() {
    let m = Monad::vector_space(2, BaseKind::Cartesian).unwrap();
    for da in 0..=2 {
        for db in 0..=2 {
            let (a, b) = (free_on(&m, da).unwrap(), free_on(&m, db).unwrap());
            let t = tensor_product(&m, &a, &b).unwrap();
            // A⊠B is finite-dimensional, so it has as many elements as its dual.
            assert_eq!(t.alg.size(), bilinear_form_count(da, db), "F^{da}⊠F^{db}");
            assert_eq!(t.alg.size(), 1 << (da * db));
            let f2 = free_on(&m, 1).unwrap();
            assert_eq!(enumerate_bimorphisms(&m, &a, &b, &f2).unwrap().len(), bilinear_form_count(da, db));
        }
    }
}
