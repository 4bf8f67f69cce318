//! The iterated tensors (A⊠B)⊠C and A⊠(B⊠C) as coequalizers out of T((A⊗B)⊗C) and
//! T(A⊗(B⊗C)), and surjectivity of the four-fold presentation map.

use super::{Monoidal, Tree};
use crate::algebra::{congruence_closure, Algebra};
use crate::error::{resource, Result};
use crate::finset::{map_part, FinSet};
use crate::monad::{all_maps, TElem};
use crate::report::{Check, Report};

/// The two legs out of T(W3) on a generator w of the bracketed TA⊗TB⊗TC, as
/// (element of T(X3), element of X3), with X3 the same bracketing of A, B, C.
struct Legs<'a> {
    mon: &'a Monoidal<'a>,
    algs: [&'a Algebra; 3],
    left_assoc: bool,
}

impl Legs<'_> {
    fn sizes(&self) -> [usize; 3] {
        self.algs.map(|a| a.size())
    }

    fn count(&self) -> Result<usize> {
        let m = self.mon.m;
        let t = [m.t_count(self.sizes()[0])?, m.t_count(self.sizes()[1])?, m.t_count(self.sizes()[2])?];
        let n = bracket(m.base, self.left_assoc, t);
        if n > m.guard {
            return Err(resource(format!("{n} pair generators exceed the guard")));
        }
        Ok(n)
    }

    fn x_size(&self) -> usize {
        bracket(self.mon.m.base, self.left_assoc, self.sizes())
    }

    /// (μ·T(κ·(κ⊗1))(ηw), (a⊗b)⊗c (w)) or the right-bracketed analogue.
    fn at(&self, w: usize) -> (TElem, usize) {
        let m = self.mon.m;
        let base = m.base;
        let [na, nb, nc] = self.sizes();
        let [a, b, c] = self.algs;
        let (ta, tb, tc) = (m.t_size(na).unwrap(), m.t_size(nb).unwrap(), m.t_size(nc).unwrap());
        if self.left_assoc {
            let (tab, nab) = (base.size(ta, tb), base.size(na, nb));
            let outer = base.split(tab, tc, w);
            let k = m.kappa_part(nab, nc, map_part(outer, |uv| m.kappa(na, nb, uv), |z| z));
            let x = map_part(outer, |uv| base.map_elem((ta, tb), (na, nb), |u| a.act(m, u), |v| b.act(m, v), uv), |z| c.act(m, z));
            (k, base.join(nab, nc, x))
        } else {
            let (tbc, nbc) = (base.size(tb, tc), base.size(nb, nc));
            let outer = base.split(ta, tbc, w);
            let k = m.kappa_part(na, nbc, map_part(outer, |z| z, |vw| m.kappa(nb, nc, vw)));
            let x = map_part(outer, |u| a.act(m, u), |vw| base.map_elem((tb, tc), (nb, nc), |v| b.act(m, v), |z| c.act(m, z), vw));
            (k, base.join(na, nbc, x))
        }
    }
}

fn bracket(base: crate::finset::BaseKind, left: bool, [a, b, c]: [usize; 3]) -> usize {
    if left {
        base.size(base.size(a, b), c)
    } else {
        base.size(a, base.size(b, c))
    }
}

/// Kernel of a map as least-element class labels.
fn kernel(map: &[usize]) -> Vec<usize> {
    let mut first = std::collections::HashMap::new();
    map.iter().enumerate().map(|(i, &v)| *first.entry(v).or_insert(i)).collect()
}

/// Trilinear maps X3 -> D out of the generator values, filtered by the coequalizing condition.
fn coequalizing_maps(mon: &Monoidal, legs: &Legs, d: &Algebra) -> Result<Vec<Vec<usize>>> {
    let m = mon.m;
    let base = m.base;
    let [a, b, c] = legs.algs;
    let g = [a.gens.len(), b.gens.len(), c.gens.len()];
    let ng = bracket(base, legs.left_assoc, g);
    let count = (d.size() as f64).powi(ng as i32);
    if count > m.budget as f64 {
        return Err(resource(format!("{count} generator assignments exceed the budget")));
    }
    let [na, nb, nc] = legs.sizes();
    // Each element of X3 as a term over the generator product.
    let terms: Vec<TElem> = (0..legs.x_size())
        .map(|z| {
            if legs.left_assoc {
                let outer = base.split(base.size(na, nb), nc, z);
                let p = map_part(outer, |xy| m.kappa_part(g[0], g[1], map_part(base.split(na, nb, xy), |x| a.decomp[x], |y| b.decomp[y])), |w| c.decomp[w]);
                m.kappa_part(base.size(g[0], g[1]), g[2], p)
            } else {
                let outer = base.split(na, base.size(nb, nc), z);
                let p = map_part(outer, |x| a.decomp[x], |yw| m.kappa_part(g[1], g[2], map_part(base.split(nb, nc, yw), |y| b.decomp[y], |w| c.decomp[w])));
                m.kappa_part(g[0], base.size(g[1], g[2]), p)
            }
        })
        .collect();
    let n_legs = legs.count()?;
    let legs_at: Vec<(TElem, usize)> = (0..n_legs).map(|w| legs.at(w)).collect();
    let nx = legs.x_size();
    let mut out = Vec::new();
    for vals in all_maps(ng, d.size()) {
        let f: Vec<usize> = terms.iter().map(|&t| d.eval(m, ng, t, |i| vals[i])).collect();
        if legs_at.iter().all(|&(k, x)| d.eval(m, nx, k, |z| f[z]) == f[x]) {
            out.push(f);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn carrier_tree(mon: &Monoidal, left: bool, [a, b, c]: [&Algebra; 3]) -> FinSet {
    let base = mon.m.base;
    if left {
        base.tensor(&base.tensor(&a.carrier, &b.carrier), &c.carrier)
    } else {
        base.tensor(&a.carrier, &base.tensor(&b.carrier, &c.carrier))
    }
}

/// Checks that the bracketed triple tensors are the coequalizers of the associated
/// pairs (both bracketings), against every codomain in `codomains`, and that the
/// four-fold map T((A⊗B)⊗(C⊗D)) -> (A⊠B)⊠(C⊠D) is surjective.
pub fn verify_induced_presentations(
    mon: &Monoidal,
    [a, b, c, d]: [&Algebra; 4],
    codomains: &[Algebra],
) -> Result<Report> {
    let m = mon.m;
    let mut r = Report::new();
    for left in [true, false] {
        let side = if left { "left" } else { "right" };
        let tree = if left {
            Tree::node(Tree::node(Tree::leaf(a), Tree::leaf(b)), Tree::leaf(c))
        } else {
            Tree::node(Tree::leaf(a), Tree::node(Tree::leaf(b), Tree::leaf(c)))
        };
        let obj = mon.obj(&tree)?;
        let full: Vec<Vec<usize>> = [a, b, c].iter().map(|x| (0..x.size()).collect()).collect();
        let vals = mon.values(&tree, &full)?;
        let nx = vals.len();
        let legs = Legs { mon, algs: [a, b, c], left_assoc: left };
        let n = legs.count()?;
        r.elementwise(format!("{side}: presentation map coequalizes the pair"), n as u64, |w| {
            let (k, x) = legs.at(w as usize);
            let (lhs, rhs) = (obj.eval(m, nx, k, |z| vals[z]), vals[x]);
            (lhs != rhs).then(|| format!("pair generator {w}: {lhs} vs {rhs}"))
        });
        let mut hit = vec![false; obj.size()];
        for t in obj.closure_terms(m, &vals).iter().enumerate().filter(|(_, t)| t.is_some()) {
            hit[t.0] = true;
        }
        r.push(match hit.iter().position(|&h| !h) {
            None => Check::pass(format!("{side}: presentation map surjective"), obj.size() as u64),
            Some(x) => Check::fail(format!("{side}: presentation map surjective"), obj.size() as u64, format!("class {x} not reached")),
        });
        // Literal coequalizer on T(X3), when it fits.
        if m.t_size(nx).is_some_and(|s| s <= m.guard) {
            let free = Algebra::free(m, &carrier_tree(mon, left, [a, b, c]))?;
            let pairs: Vec<(usize, usize)> = (0..n).map(|w| legs.at(w)).map(|(k, x)| (k, m.eta(nx, x))).collect();
            let mut uf = congruence_closure(m, &free, pairs);
            let (cls, _) = uf.classes();
            let p: Vec<usize> = (0..free.size()).map(|t| obj.eval(m, nx, t, |z| vals[z])).collect();
            r.push(if kernel(&cls) == kernel(&p) {
                Check::pass(format!("{side}: kernel equals the congruence generated by the pair"), free.size() as u64)
            } else {
                let t = kernel(&cls).iter().zip(kernel(&p)).position(|(x, y)| *x != y).unwrap();
                Check::fail(format!("{side}: kernel equals the congruence generated by the pair"), free.size() as u64, format!("element {t} of T(X3)"))
            });
        }
        for (i, dd) in codomains.iter().enumerate() {
            let name = format!("{side}: universal property against codomain {i} (|D| = {})", dd.size());
            let expected = coequalizing_maps(mon, &legs, dd)?;
            let homs = obj.enumerate_homs(m, dd)?;
            let mut factored: Vec<Vec<usize>> = homs.iter().map(|h| vals.iter().map(|&x| h[x]).collect()).collect();
            factored.sort();
            factored.dedup();
            r.push(if factored.len() != homs.len() {
                Check::fail(name, homs.len() as u64, "two homomorphisms agree after the presentation map")
            } else if factored != expected {
                Check::fail(name, expected.len() as u64, format!("{} coequalizing maps, {} factor", expected.len(), factored.len()))
            } else {
                Check::pass(name, expected.len() as u64)
            });
        }
    }
    // Four-fold: image of T((A⊗B)⊗(C⊗D)) is generated by j(j(a,b), j(c,d)).
    let tree = Tree::node(Tree::node(Tree::leaf(a), Tree::leaf(b)), Tree::node(Tree::leaf(c), Tree::leaf(d)));
    let obj = mon.obj(&tree)?;
    let full: Vec<Vec<usize>> = [a, b, c, d].iter().map(|x| (0..x.size()).collect()).collect();
    let vals = mon.values(&tree, &full)?;
    let reached = obj.closure_terms(m, &vals).iter().filter(|t| t.is_some()).count();
    let name = format!("four-fold presentation map surjective ({reached} of {} classes)", obj.size());
    r.push(if reached == obj.size() {
        Check::pass(name, reached as u64)
    } else {
        Check::fail(name, obj.size() as u64, format!("only {reached} classes reached"))
    });
    Ok(r)
}
