//! The tensor product A⊠B of algebras as a coequalizer, maps induced on it, and
//! the representation of bimorphisms.
//!
//! When T(A⊗B) is within the guard the coequalizer is taken literally on the free
//! algebra T(A⊗B), seeded with the pairs (κ(w), η((a⊗b)(w))) for w in TA⊗TB.
//! Otherwise A⊠B is presented on T(G_A⊗G_B) for generating sets G_A, G_B, with the
//! relations of A (resp. B) imposed in the first (resp. second) variable; the
//! universal map is then re-verified to be a bimorphism.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{congruence_closure, quotient_algebra, Algebra};
use crate::bimorphism::bimorphism_witness;
use crate::error::{invariant, precondition, resource, Result};
use crate::finset::{map_part, FinSet, Part};
use crate::monad::{Monad, TElem};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// The pair (μ·Tκ, T(a⊗b)).
    Standard,
    /// The pair (μ·T(κ·(η·a⊗1)), μ·T(κ·(1⊗η·b))).
    OneSided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorMode {
    /// Quotient of T(A⊗B).
    Literal,
    /// Quotient of T(G_A⊗G_B).
    Presented,
}

#[derive(Clone, Debug)]
pub struct Tensor {
    pub left: Algebra,
    pub right: Algebra,
    /// A⊠B with structure a⋈b.
    pub alg: Algebra,
    pub mode: TensorMode,
    pub presentation: Presentation,
    /// The universal bimorphism j = q·η: A⊗B -> A⊠B.
    pub j: Vec<usize>,
}

impl Tensor {
    pub fn na(&self) -> usize {
        self.left.size()
    }

    pub fn nb(&self) -> usize {
        self.right.size()
    }

    /// q: T(A⊗B) -> A⊠B at t.
    pub fn q(&self, m: &Monad, t: TElem) -> usize {
        match self.mode {
            TensorMode::Literal => self.alg.class_of[t] as usize,
            TensorMode::Presented => self.alg.eval(m, self.j.len(), t, |z| self.j[z]),
        }
    }

    /// The full table of q, when T(A⊗B) is within the guard.
    pub fn q_table(&self, m: &Monad) -> Result<Vec<usize>> {
        let n = m.t_count(self.j.len())?;
        Ok((0..n).map(|t| self.q(m, t)).collect())
    }

    /// The element of A⊗B named by an element y of the presenting set.
    pub fn pres_elem(&self, m: &Monad, y: usize) -> usize {
        match self.mode {
            TensorMode::Literal => y,
            TensorMode::Presented => {
                let base = m.base;
                let (ga, gb) = (self.left.gens.len(), self.right.gens.len());
                let part = map_part(base.split(ga, gb, y), |i| self.left.gens[i], |i| self.right.gens[i]);
                base.join(self.na(), self.nb(), part)
            }
        }
    }

    /// j(x, y) for a split element of A⊗B.
    pub fn j_part(&self, m: &Monad, part: Part) -> usize {
        self.j[m.base.join(self.na(), self.nb(), part)]
    }
}

fn literal_fits(m: &Monad, a: &Algebra, b: &Algebra) -> bool {
    let nab = m.base.size(a.size(), b.size());
    let rel = match (m.t_size(a.size()), m.t_size(b.size())) {
        (Some(ta), Some(tb)) => ta.checked_mul(tb).is_some_and(|s| s <= m.guard),
        _ => false,
    };
    rel && m.t_size(nab).is_some_and(|s| s <= m.guard)
}

pub fn tensor_product(m: &Monad, a: &Algebra, b: &Algebra) -> Result<Tensor> {
    tensor_with(m, a, b, Presentation::Standard)
}

pub fn tensor_product_alt(m: &Monad, a: &Algebra, b: &Algebra) -> Result<Tensor> {
    tensor_with(m, a, b, Presentation::OneSided)
}

pub fn tensor_with(m: &Monad, a: &Algebra, b: &Algebra, pres: Presentation) -> Result<Tensor> {
    if literal_fits(m, a, b) {
        literal_tensor(m, a, b, pres)
    } else {
        presented_tensor(m, a, b, pres)
    }
}

fn literal_tensor(m: &Monad, a: &Algebra, b: &Algebra, pres: Presentation) -> Result<Tensor> {
    let base = m.base;
    let (na, nb) = (a.size(), b.size());
    let (ta, tb) = (m.t_count(na)?, m.t_count(nb)?);
    let y = base.tensor(&a.carrier, &b.carrier);
    let free = Algebra::free(m, &y)?;
    let nab = y.size();
    let pairs = (0..base.size(ta, tb)).map(|w| {
        let part = base.split(ta, tb, w);
        match pres {
            Presentation::Standard => {
                let ab = base.join(na, nb, map_part(part, |u| a.act(m, u), |v| b.act(m, v)));
                (m.kappa_part(na, nb, part), m.eta(nab, ab))
            }
            Presentation::OneSided => (
                m.kappa_part(na, nb, map_part(part, |u| m.eta(na, a.act(m, u)), |v| v)),
                m.kappa_part(na, nb, map_part(part, |u| u, |v| m.eta(nb, b.act(m, v)))),
            ),
        }
    });
    let mut uf = congruence_closure(m, &free, pairs);
    let (alg, _) = quotient_algebra(m, &free, &mut uf)?;
    let j = (0..nab).map(|z| alg.class_of[m.eta(nab, z)] as usize).collect();
    finish(m, a, b, alg, TensorMode::Literal, pres, j)
}

fn presented_tensor(m: &Monad, a: &Algebra, b: &Algebra, pres: Presentation) -> Result<Tensor> {
    let base = m.base;
    let (na, nb) = (a.size(), b.size());
    let (ga, gb) = (a.gens.len(), b.gens.len());
    let y = base.tensor(
        &FinSet::subset(&a.carrier, a.gens.iter().map(|&g| g as u64).collect()),
        &FinSet::subset(&b.carrier, b.gens.iter().map(|&g| g as u64).collect()),
    );
    let ngg = y.size();
    if !m.t_size(ngg).is_some_and(|s| s <= m.guard) {
        return Err(resource(format!(
            "tensor of algebras of sizes {na} and {nb}: T over {ngg} generator pairs exceeds the guard {}",
            m.guard
        )));
    }
    let free = Algebra::free(m, &y)?;
    let (tga, tgb) = (m.t_count(ga)?, m.t_count(gb)?);
    // Terms over generators, evaluated and re-decomposed.
    let norm_a = |s: TElem| a.decomp[a.eval(m, ga, s, |i| a.gens[i])];
    let norm_b = |s: TElem| b.decomp[b.eval(m, gb, s, |i| b.gens[i])];
    let mut pairs: Vec<(TElem, TElem)> = Vec::new();
    match pres {
        Presentation::Standard => {
            let cart = base == crate::finset::BaseKind::Cartesian;
            if a.free.is_none() {
                for s in 0..tga {
                    let s2 = norm_a(s);
                    if cart {
                        for h in 0..gb {
                            let g = m.eta(gb, h);
                            pairs.push((m.kappa_part(ga, gb, Part::Pair(s, g)), m.kappa_part(ga, gb, Part::Pair(s2, g))));
                        }
                    } else {
                        pairs.push((m.kappa_part(ga, gb, Part::Inl(s)), m.kappa_part(ga, gb, Part::Inl(s2))));
                    }
                }
            }
            if b.free.is_none() {
                for s in 0..tgb {
                    let s2 = norm_b(s);
                    if cart {
                        for h in 0..ga {
                            let g = m.eta(ga, h);
                            pairs.push((m.kappa_part(ga, gb, Part::Pair(g, s)), m.kappa_part(ga, gb, Part::Pair(g, s2))));
                        }
                    } else {
                        pairs.push((m.kappa_part(ga, gb, Part::Inr(s)), m.kappa_part(ga, gb, Part::Inr(s2))));
                    }
                }
            }
        }
        Presentation::OneSided => {
            let (ta, tb) = (m.t_count(na)?, m.t_count(nb)?);
            if ta.checked_mul(tb).is_none_or(|s| s > m.guard) {
                return Err(resource("the alternative pair needs TA⊗TB within the guard"));
            }
            // Both legs pushed along μ·T(κ·(d_A⊗d_B)): T(A⊗B) -> T(G_A⊗G_B).
            let lift_a = |u: TElem| m.bind(na, u, |x| a.decomp[x], ga);
            let lift_b = |v: TElem| m.bind(nb, v, |y| b.decomp[y], gb);
            for w in 0..base.size(ta, tb) {
                let part = base.split(ta, tb, w);
                let l = map_part(part, |u| a.decomp[a.act(m, u)], lift_b);
                let r = map_part(part, lift_a, |v| b.decomp[b.act(m, v)]);
                pairs.push((m.kappa_part(ga, gb, l), m.kappa_part(ga, gb, r)));
            }
        }
    }
    let mut uf = congruence_closure(m, &free, pairs);
    let (alg, _) = quotient_algebra(m, &free, &mut uf)?;
    let nab = base.size(na, nb);
    let j = (0..nab)
        .map(|z| {
            let part = map_part(base.split(na, nb, z), |x| a.decomp[x], |y| b.decomp[y]);
            alg.class_of[m.kappa_part(ga, gb, part)] as usize
        })
        .collect();
    let t = finish(m, a, b, alg, TensorMode::Presented, pres, j)?;
    if let Some(w) = bimorphism_witness(m, a, b, &t.alg, &t.j)? {
        return Err(invariant(format!("presented tensor: universal map is not a bimorphism ({w})")));
    }
    Ok(t)
}

fn finish(
    _m: &Monad,
    a: &Algebra,
    b: &Algebra,
    alg: Algebra,
    mode: TensorMode,
    presentation: Presentation,
    j: Vec<usize>,
) -> Result<Tensor> {
    Ok(Tensor { left: a.clone(), right: b.clone(), alg, mode, presentation, j })
}

/// Memoized tensor products keyed by algebra fingerprints.
#[derive(Default)]
pub struct TensorCache {
    map: Mutex<HashMap<(u64, u64, Presentation), Arc<Tensor>>>,
}

impl TensorCache {
    pub fn new() -> TensorCache {
        TensorCache::default()
    }

    pub fn get(&self, m: &Monad, a: &Algebra, b: &Algebra) -> Result<Arc<Tensor>> {
        self.get_with(m, a, b, Presentation::Standard)
    }

    pub fn get_with(&self, m: &Monad, a: &Algebra, b: &Algebra, p: Presentation) -> Result<Arc<Tensor>> {
        let key = (a.fingerprint, b.fingerprint, p);
        if let Some(t) = self.map.lock().unwrap().get(&key) {
            if t.left == *a && t.right == *b {
                return Ok(t.clone());
            }
        }
        let t = Arc::new(tensor_with(m, a, b, p)?);
        self.map.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }
}

/// The elements of each factor used to build an induction domain: all of them when T of
/// the full domain is within the guard, the generators otherwise.
pub fn picks(m: &Monad, algs: &[&Algebra]) -> Vec<Vec<usize>> {
    let base = m.base;
    let full = algs.iter().skip(1).fold(algs[0].size(), |acc, a| base.size(acc, a.size()));
    if m.t_size(full).is_some_and(|s| s <= m.guard) {
        algs.iter().map(|a| (0..a.size()).collect()).collect()
    } else {
        algs.iter().map(|a| a.gens.clone()).collect()
    }
}

/// The map S -> target with map(src(t)) = tgt(t) for every t in T(W), |W| = w.
/// `src` must be surjective; disagreement between preimages is an invariant violation.
pub fn induce(
    m: &Monad,
    w: usize,
    src_size: usize,
    src: &dyn Fn(TElem) -> usize,
    tgt: &dyn Fn(TElem) -> usize,
    what: &str,
) -> Result<Vec<usize>> {
    let tw = m.t_count(w)?;
    let mut map = vec![usize::MAX; src_size];
    for t in 0..tw {
        let (s, v) = (src(t), tgt(t));
        if map[s] == usize::MAX {
            map[s] = v;
        } else if map[s] != v {
            return Err(invariant(format!("{what} is not well defined: class {s} has images {} and {v}", map[s])));
        }
    }
    if let Some(s) = map.iter().position(|&v| v == usize::MAX) {
        return Err(invariant(format!("{what}: element {s} has no preimage")));
    }
    Ok(map)
}

/// Generator-driven induction out of a tensor: f̄·j = f on the picked elements of A⊗B,
/// where `f` gives target values on A⊗B and `tgt_eval` evaluates terms in the target.
fn induce_from_tensor(
    m: &Monad,
    t: &Tensor,
    f: &dyn Fn(usize) -> usize,
    target: &Algebra,
    what: &str,
) -> Result<Vec<usize>> {
    let base = m.base;
    let p = picks(m, &[&t.left, &t.right]);
    let (wa, wb) = (p[0].len(), p[1].len());
    let w = base.size(wa, wb);
    let elem = |z: usize| base.join(t.na(), t.nb(), map_part(base.split(wa, wb, z), |i| p[0][i], |i| p[1][i]));
    let src = |s: TElem| t.alg.eval(m, w, s, |z| t.j[elem(z)]);
    let tgt = |s: TElem| target.eval(m, w, s, |z| f(elem(z)));
    let map = induce(m, w, t.alg.size(), &src, &tgt, what)?;
    if let Some(wit) = t.alg.hom_witness(m, target, &map) {
        return Err(invariant(format!("{what} is not a homomorphism: {wit}")));
    }
    Ok(map)
}

/// g⊠h: A⊠B -> A'⊠B' with (g⊠h)·q = q'·T(g⊗h).
pub fn tensor_of_homs(m: &Monad, t: &Tensor, t2: &Tensor, g: &[usize], h: &[usize]) -> Result<Vec<usize>> {
    for (name, src, dst, map) in [("g", &t.left, &t2.left, g), ("h", &t.right, &t2.right, h)] {
        if let Some(w) = src.hom_witness(m, dst, map) {
            return Err(precondition(format!("{name} is not a homomorphism: {w}")));
        }
    }
    let base = m.base;
    let (na, nb) = (t.na(), t.nb());
    let f = |z: usize| t2.j[base.map_elem((na, nb), (t2.na(), t2.nb()), |x| g[x], |y| h[y], z)];
    induce_from_tensor(m, t, &f, &t2.alg, "g⊠h")
}

/// f̄: A⊠B -> C with f̄·q = c·T(f), for a bimorphism f.
pub fn classify_bimorphism(m: &Monad, t: &Tensor, c: &Algebra, f: &[usize]) -> Result<Vec<usize>> {
    if let Some(w) = bimorphism_witness(m, &t.left, &t.right, c, f)? {
        return Err(precondition(format!("not a bimorphism: {w}")));
    }
    induce_from_tensor(m, t, &|z| f[z], c, "classified map")
}

/// g·q·η: A⊗B -> C for a homomorphism g: A⊠B -> C.
pub fn bimorphism_of_hom(m: &Monad, t: &Tensor, c: &Algebra, g: &[usize]) -> Result<Vec<usize>> {
    if let Some(w) = t.alg.hom_witness(m, c, g) {
        return Err(precondition(format!("not a homomorphism: {w}")));
    }
    Ok(t.j.iter().map(|&x| g[x]).collect())
}

/// An explicit isomorphism between TX⊠TY and (T(X⊗Y), μ) under which q is μ·Tκ.
pub struct FreeIdentification {
    pub tensor: Tensor,
    /// κ̄: TX⊠TY -> T(X⊗Y).
    pub forward: Vec<usize>,
    /// T(X⊗Y) -> TX⊠TY.
    pub backward: Vec<usize>,
    pub report: Report,
}

pub fn free_tensor_identification(m: &Monad, x: &FinSet, y: &FinSet) -> Result<FreeIdentification> {
    let base = m.base;
    let (nx, ny) = (x.size(), y.size());
    let a = Algebra::free(m, x)?;
    let b = Algebra::free(m, y)?;
    let txy = Algebra::free(m, &base.tensor(x, y))?;
    let t = tensor_product(m, &a, &b)?;
    let mut r = Report::new();
    let (tx, ty) = (a.size(), b.size());
    let (ttx, tty) = (m.t_count(tx)?, m.t_count(ty)?);
    let nxy = base.size(nx, ny);
    // μ·Tκ coequalizes (μ·Tκ, T(μ⊗μ)) out of T(TTX⊗TTY); both legs are homomorphisms
    // out of a free algebra, so generators suffice.
    let dom = base.size(ttx, tty);
    if dom > m.guard {
        return Err(resource("TTX⊗TTY exceeds the guard"));
    }
    r.elementwise("μ·Tκ coequalizes (μ·Tκ, T(μ⊗μ))", dom as u64, |w| {
        let w = w as usize;
        let part = base.split(ttx, tty, w);
        let inner = match part {
            Part::Pair(u, v) => {
                m.bind(tx, u, |s| m.bind(ty, v, |t2| m.kappa_part(nx, ny, Part::Pair(s, t2)), nxy), nxy)
            }
            Part::Inl(u) => m.bind(tx, u, |s| m.kappa_part(nx, ny, Part::Inl(s)), nxy),
            Part::Inr(v) => m.bind(ty, v, |s| m.kappa_part(nx, ny, Part::Inr(s)), nxy),
        };
        let other = m.kappa_part(nx, ny, map_part(part, |u| m.mu(nx, u), |v| m.mu(ny, v)));
        (inner != other).then(|| format!("generator {part:?}: {inner} vs {other}"))
    });
    let kappa_on = |z: usize| m.kappa(nx, ny, z);
    let forward = induce_from_tensor(m, &t, &kappa_on, &txy, "κ̄")?;
    // Inverse: s ↦ q(T(η⊗η)(s)).
    let backward: Vec<usize> = (0..txy.size())
        .map(|s| {
            t.alg.eval(m, nxy, s, |z| {
                t.j_part(m, map_part(base.split(nx, ny, z), |i| m.eta(nx, i), |i| m.eta(ny, i)))
            })
        })
        .collect();
    r.push(match txy.hom_witness(m, &t.alg, &backward) {
        None => Check::pass("inverse is a homomorphism", txy.size() as u64),
        Some(w) => Check::fail("inverse is a homomorphism", txy.size() as u64, w),
    });
    r.elementwise("κ̄ after inverse = 1", txy.size() as u64, |s| {
        let s = s as usize;
        (forward[backward[s]] != s).then(|| format!("element {s} of T(X⊗Y)"))
    });
    r.elementwise("inverse after κ̄ = 1", t.alg.size() as u64, |c| {
        let c = c as usize;
        (backward[forward[c]] != c).then(|| format!("class {c}"))
    });
    if let Ok(tn) = m.t_count(t.j.len()) {
        r.elementwise("κ̄·q = μ·Tκ", tn as u64, |s| {
            let s = s as usize;
            let lhs = forward[t.q(m, s)];
            let rhs = m.bind(t.j.len(), s, kappa_on, nxy);
            (lhs != rhs).then(|| format!("element {s} of T(TX⊗TY): {lhs} vs {rhs}"))
        });
    }
    Ok(FreeIdentification { tensor: t, forward, backward, report: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::BaseKind;
    use crate::fixtures::{chain, d4, free_on};

    #[test]
    fn boolean_square_has_sixteen_elements() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let a = d4(&m).unwrap();
        let t = tensor_product(&m, &a, &a).unwrap();
        assert_eq!(t.mode, TensorMode::Literal);
        assert_eq!(t.alg.size(), 16);
    }

    #[test]
    fn two_chain_is_unit() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let c2 = chain(&m, 2).unwrap();
        for n in 1..=3 {
            let a = chain(&m, n).unwrap();
            assert_eq!(tensor_product(&m, &c2, &a).unwrap().alg.size(), n);
        }
    }

    #[test]
    fn vector_dimensions_multiply() {
        let m = Monad::vector_space(2, BaseKind::Cartesian).unwrap();
        for (d1, d2) in [(1, 1), (1, 2), (2, 2)] {
            let t = tensor_product(&m, &free_on(&m, d1).unwrap(), &free_on(&m, d2).unwrap()).unwrap();
            assert_eq!(t.alg.size(), 1 << (d1 * d2));
        }
    }

    #[test]
    fn presentations_agree() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let (c3, a) = (chain(&m, 3).unwrap(), d4(&m).unwrap());
        let s = tensor_product(&m, &c3, &a).unwrap();
        let l = tensor_product_alt(&m, &c3, &a).unwrap();
        assert_eq!(s.alg.class_of, l.alg.class_of);
    }

    #[test]
    fn presented_mode_matches_literal() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let c3 = chain(&m, 3).unwrap();
        let lit = tensor_product(&m, &c3, &c3).unwrap();
        let small = Monad::powerset(BaseKind::Cartesian).with_guard(64);
        let pres = tensor_product(&small, &c3, &c3).unwrap();
        assert_eq!(pres.mode, TensorMode::Presented);
        assert_eq!(pres.alg.size(), lit.alg.size());
        // j induces the same partition of A⊗B.
        let same = |x: usize, y: usize| lit.j[x] == lit.j[y];
        let same2 = |x: usize, y: usize| pres.j[x] == pres.j[y];
        for x in 0..9 {
            for y in 0..9 {
                assert_eq!(same(x, y), same2(x, y));
            }
        }
    }

    #[test]
    fn free_identification_holds() {
        for m in [Monad::powerset(BaseKind::Cartesian), Monad::vector_space(2, BaseKind::Cartesian).unwrap()] {
            for (nx, ny) in [(1, 1), (1, 2), (2, 2)] {
                let x = FinSet::range(nx);
                let y = FinSet::range(ny);
                let id = free_tensor_identification(&m, &x, &y).unwrap();
                assert!(id.report.all_pass(), "{:?}", id.report.first_failure());
            }
        }
    }

    #[test]
    fn classify_and_back() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let c3 = chain(&m, 3).unwrap();
        let t = tensor_product(&m, &c3, &c3).unwrap();
        let min: Vec<usize> = (0..9).map(|z| (z / 3).min(z % 3)).collect();
        let g = classify_bimorphism(&m, &t, &c3, &min).unwrap();
        assert_eq!(bimorphism_of_hom(&m, &t, &c3, &g).unwrap(), min);
    }
}
