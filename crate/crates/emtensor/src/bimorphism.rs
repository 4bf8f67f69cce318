//! Bimorphisms A⊗B -> C: maps that are homomorphisms in each variable.

use crate::algebra::Algebra;
use crate::error::{precondition, resource, Result};
use crate::finset::map_part;
use crate::monad::{all_maps, Monad};

fn dims(m: &Monad, a: &Algebra, b: &Algebra) -> (usize, usize, usize) {
    (a.size(), b.size(), m.base.size(a.size(), b.size()))
}

/// c·T(f)·κ = f·(a⊗b) elementwise on TA⊗TB when that is within the guard,
/// otherwise through the equivalent one-variable homomorphism conditions.
pub fn bimorphism_witness(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra, f: &[usize]) -> Result<Option<String>> {
    let base = m.base;
    let (na, nb, nab) = dims(m, a, b);
    if f.len() != nab || f.iter().any(|&v| v >= c.size()) {
        return Err(precondition("candidate is not a total map A⊗B -> C"));
    }
    let literal = match (m.t_size(na), m.t_size(nb)) {
        (Some(ta), Some(tb)) => base.size(ta, tb) <= m.guard && m.t_encodable(nab),
        _ => false,
    };
    if !literal {
        return Ok(one_variable_homs(m, a, b, c, f));
    }
    let (ta, tb) = (m.t_count(na)?, m.t_count(nb)?);
    for w in 0..base.size(ta, tb) {
        let part = base.split(ta, tb, w);
        let lhs = f[base.join(na, nb, map_part(part, |u| a.act(m, u), |v| b.act(m, v)))];
        let rhs = c.eval(m, nab, m.kappa_part(na, nb, part), |z| f[z]);
        if lhs != rhs {
            return Ok(Some(format!("element {part:?} of TA⊗TB: f·(a⊗b) = {lhs}, c·Tf·κ = {rhs}")));
        }
    }
    Ok(None)
}

pub fn is_bimorphism(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra, f: &[usize]) -> Result<bool> {
    Ok(bimorphism_witness(m, a, b, c, f)?.is_none())
}

/// Each partial map f(−, y) and f(x, −) is a homomorphism.
fn one_variable_homs(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra, f: &[usize]) -> Option<String> {
    let base = m.base;
    let (na, nb, _) = dims(m, a, b);
    match base {
        crate::finset::BaseKind::Cartesian => {
            for y in 0..nb {
                let h: Vec<usize> = (0..na).map(|x| f[x * nb + y]).collect();
                if let Some(w) = a.hom_witness(m, c, &h) {
                    return Some(format!("f(−, {y}) is not a homomorphism: {w}"));
                }
            }
            for x in 0..na {
                if let Some(w) = b.hom_witness(m, c, &f[x * nb..(x + 1) * nb]) {
                    return Some(format!("f({x}, −) is not a homomorphism: {w}"));
                }
            }
        }
        crate::finset::BaseKind::Cocartesian => {
            if let Some(w) = a.hom_witness(m, c, &f[..na]) {
                return Some(format!("f·inl is not a homomorphism: {w}"));
            }
            if let Some(w) = b.hom_witness(m, c, &f[na..]) {
                return Some(format!("f·inr is not a homomorphism: {w}"));
            }
        }
    }
    None
}

/// The two one-variable squares c·Tf·κ·(1⊗η) = f·(a⊗1) and c·Tf·κ·(η⊗1) = f·(1⊗b), elementwise.
pub fn is_bimorphism_componentwise(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra, f: &[usize]) -> Result<bool> {
    let base = m.base;
    let (na, nb, nab) = dims(m, a, b);
    let (ta, tb) = (m.t_count(na)?, m.t_count(nb)?);
    for (left, cnt) in [(true, base.size(ta, nb)), (false, base.size(na, tb))] {
        if cnt > m.guard {
            return Err(resource(format!("one-variable domain has {cnt} elements, above the guard")));
        }
        for w in 0..cnt {
            let (part, lhs_part) = if left {
                let p = base.split(ta, nb, w);
                (map_part(p, |u| u, |y| m.eta(nb, y)), map_part(p, |u| a.act(m, u), |y| y))
            } else {
                let p = base.split(na, tb, w);
                (map_part(p, |x| m.eta(na, x), |v| v), map_part(p, |x| x, |v| b.act(m, v)))
            };
            let lhs = f[base.join(na, nb, lhs_part)];
            let rhs = c.eval(m, nab, m.kappa_part(na, nb, part), |z| f[z]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The map A⊗B -> C determined by values on G_A⊗G_B, via the generator decompositions.
pub fn extend_bilinear(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra, vals: &[usize]) -> Vec<usize> {
    let base = m.base;
    let (na, nb, nab) = dims(m, a, b);
    let (ga, gb) = (a.gens.len(), b.gens.len());
    let ngg = base.size(ga, gb);
    (0..nab)
        .map(|z| {
            let part = map_part(base.split(na, nb, z), |x| a.decomp[x], |y| b.decomp[y]);
            c.eval(m, ngg, m.kappa_part(ga, gb, part), |i| vals[i])
        })
        .collect()
}

/// All bimorphisms A⊗B -> C in lexicographic table order, by extension from generator values.
pub fn enumerate_bimorphisms(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Vec<Vec<usize>>> {
    let ngg = m.base.size(a.gens.len(), b.gens.len());
    let count = (c.size() as f64).powi(ngg as i32);
    if count > m.budget as f64 {
        return Err(resource(format!("{count} generator assignments exceed the budget {}", m.budget)));
    }
    let mut out = Vec::new();
    for vals in all_maps(ngg, c.size()) {
        let f = extend_bilinear(m, a, b, c, &vals);
        if is_bimorphism(m, a, b, c, &f)? {
            out.push(f);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All bimorphisms by testing every map A⊗B -> C; an oracle for `enumerate_bimorphisms`.
pub fn enumerate_bimorphisms_brute(m: &Monad, a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Vec<Vec<usize>>> {
    let nab = m.base.size(a.size(), b.size());
    let count = (c.size() as f64).powi(nab as i32);
    if count > m.budget as f64 {
        return Err(resource(format!("{count} candidate maps exceed the budget {}", m.budget)));
    }
    let mut out = Vec::new();
    for f in all_maps(nab, c.size()) {
        if is_bimorphism(m, a, b, c, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// k·f·(g⊗h) for homomorphisms g: A' -> A, h: B' -> B, k: C -> C'; the result is re-verified.
#[allow(clippy::too_many_arguments)]
pub fn transform_bimorphism(
    m: &Monad,
    (a, b, c): (&Algebra, &Algebra, &Algebra),
    f: &[usize],
    (a2, g): (&Algebra, &[usize]),
    (b2, h): (&Algebra, &[usize]),
    (c2, k): (&Algebra, &[usize]),
) -> Result<Vec<usize>> {
    if let Some(w) = bimorphism_witness(m, a, b, c, f)? {
        return Err(precondition(format!("input is not a bimorphism: {w}")));
    }
    for (name, src, dst, map) in [("g", a2, a, g), ("h", b2, b, h), ("k", c, c2, k)] {
        if let Some(w) = src.hom_witness(m, dst, map) {
            return Err(precondition(format!("{name} is not a homomorphism: {w}")));
        }
    }
    let base = m.base;
    let (na, nb) = (a.size(), b.size());
    let out: Vec<usize> = (0..base.size(a2.size(), b2.size()))
        .map(|z| k[f[base.map_elem((a2.size(), b2.size()), (na, nb), |x| g[x], |y| h[y], z)]])
        .collect();
    if let Some(w) = bimorphism_witness(m, a2, b2, c2, &out)? {
        return Err(crate::error::invariant(format!("transported map is not a bimorphism: {w}")));
    }
    Ok(out)
}
