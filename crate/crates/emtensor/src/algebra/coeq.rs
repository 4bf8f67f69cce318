//! Congruence closure, quotients, and coequalizers in the category of algebras.

use super::Algebra;
use crate::congruence::{closure, UnionFind};
use crate::error::{invariant, precondition, Result};
use crate::finset::FinSet;
use crate::monad::Monad;
use crate::report::{Check, Report};

/// Which pairs seed the coequalizer congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorPairs {
    /// Generator pairs (f(ηz), g(ηz)) when the domain is free, all pairs otherwise.
    Auto,
    /// (f(x), g(x)) for every element x of the domain.
    All,
}

/// Smallest congruence of `a` containing `pairs`.
pub fn congruence_closure(m: &Monad, a: &Algebra, pairs: impl IntoIterator<Item = (usize, usize)>) -> UnionFind {
    if let Some(n) = a.free {
        let polys = m.free_polys(n);
        let fs: Vec<Box<dyn Fn(usize) -> usize + '_>> =
            polys.iter().map(|&p| Box::new(move |x| m.apply_poly(n, p, x)) as Box<dyn Fn(usize) -> usize>).collect();
        let refs: Vec<&dyn Fn(usize) -> usize> = fs.iter().map(|b| b.as_ref()).collect();
        return closure(a.size(), pairs, &refs);
    }
    let polys = a.polys(m);
    let refs: Vec<&dyn Fn(usize) -> usize> = polys.iter().map(|b| b.as_ref()).collect();
    closure(a.size(), pairs, &refs)
}

/// The quotient of `a` by a congruence, with its projection. Classes are labelled by
/// their least element; the projection is re-verified to be a homomorphism.
pub fn quotient_algebra(m: &Monad, a: &Algebra, uf: &mut UnionFind) -> Result<(Algebra, Vec<usize>)> {
    let (cls, count) = uf.classes();
    let mut least = vec![usize::MAX; count];
    for (x, &c) in cls.iter().enumerate().rev() {
        least[c] = x;
    }
    let carrier = FinSet::subset(&a.carrier, least.iter().map(|&x| x as u64).collect());
    let class_of: Vec<u32> = a.class_of.iter().map(|&c| cls[c as usize] as u32).collect();
    let reps = least.iter().map(|&x| a.reps[x]).collect();
    let candidates = a.gens.iter().map(|&g| cls[g]).collect();
    let q = Algebra::assemble(m, carrier, a.pres, class_of, reps, None, candidates);
    if let Some(w) = a.hom_witness(m, &q, &cls) {
        return Err(invariant(format!("quotient projection is not a homomorphism ({w}); the signature is inadequate")));
    }
    Ok((q, cls))
}

/// Coequalizer of homomorphisms f, g: P -> B, as the quotient of B.
pub fn coequalizer_em(
    m: &Monad,
    p: &Algebra,
    b: &Algebra,
    f: &[usize],
    g: &[usize],
    mode: GeneratorPairs,
) -> Result<(Algebra, Vec<usize>)> {
    for (name, h) in [("f", f), ("g", g)] {
        if let Some(w) = p.hom_witness(m, b, h) {
            return Err(precondition(format!("{name} is not a homomorphism: {w}")));
        }
    }
    let pairs: Vec<(usize, usize)> = match (mode, p.free) {
        (GeneratorPairs::Auto, Some(n)) => (0..n).map(|z| (f[m.eta(n, z)], g[m.eta(n, z)])).collect(),
        _ => (0..p.size()).map(|x| (f[x], g[x])).collect(),
    };
    let mut uf = congruence_closure(m, b, pairs);
    quotient_algebra(m, b, &mut uf)
}

/// Every homomorphism h: B -> C with h·f = h·g factors uniquely through q, for each codomain C.
pub fn verify_coequalizer_universal(
    m: &Monad,
    b: &Algebra,
    q_alg: &Algebra,
    q: &[usize],
    f: &[usize],
    g: &[usize],
    codomains: &[Algebra],
) -> Result<Report> {
    let mut r = Report::new();
    r.elementwise("q·f = q·g", f.len() as u64, |x| {
        let x = x as usize;
        (q[f[x]] != q[g[x]]).then(|| format!("element {x} of the domain"))
    });
    let mut hit = vec![false; q_alg.size()];
    q.iter().for_each(|&c| hit[c] = true);
    r.push(match hit.iter().position(|&h| !h) {
        None => Check::pass("q surjective", q_alg.size() as u64),
        Some(c) => Check::fail("q surjective", q_alg.size() as u64, format!("class {c} not hit")),
    });
    r.push(match b.hom_witness(m, q_alg, q) {
        None => Check::pass("q homomorphism", b.size() as u64),
        Some(w) => Check::fail("q homomorphism", b.size() as u64, w),
    });
    for (i, c) in codomains.iter().enumerate() {
        let coequalizing: Vec<Vec<usize>> = b
            .enumerate_homs(m, c)?
            .into_iter()
            .filter(|h| f.iter().zip(g).all(|(&x, &y)| h[x] == h[y]))
            .collect();
        let mut factored: Vec<Vec<usize>> =
            q_alg.enumerate_homs(m, c)?.iter().map(|h| q.iter().map(|&x| h[x]).collect()).collect();
        let produced = factored.len();
        factored.sort();
        factored.dedup();
        let name = format!("universal property against codomain {i} (|C| = {})", c.size());
        r.push(if produced != factored.len() {
            Check::fail(name, produced as u64, "two factorizations give the same composite")
        } else if factored != coequalizing {
            Check::fail(
                name,
                coequalizing.len() as u64,
                format!("{} coequalizing homomorphisms, {} factor through q", coequalizing.len(), factored.len()),
            )
        } else {
            Check::pass(name, coequalizing.len() as u64)
        });
    }
    Ok(r)
}
