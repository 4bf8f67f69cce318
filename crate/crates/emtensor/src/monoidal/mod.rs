//! The monoidal structure (C^T, ⊠, TE) induced by a monoidal monad: associator, unitors
//! and braiding as maps induced on tensor quotients, and their coherence.
//!
//! Every cell is induced from a commuting square out of a free algebra T(W), where W is
//! an iterated base tensor of chosen elements of the factors: all elements when T(W) is
//! within the guard, the factors' generators otherwise. The cell is read off from the
//! images of every t in T(W), so well-definedness is checked over all of T(W).

mod coherence;
mod functor;
mod presentations;

pub use coherence::{check_coherence, CoherenceGrid};
pub use functor::{algebraic_functor_monoidal, restrict_algebra, FunctorData};
pub use presentations::verify_induced_presentations;

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{invariant, Result};
use crate::finset::{map_part, Part};
use crate::monad::{Monad, TElem};
use crate::report::{Check, Report};
use crate::tensor::{classify_bimorphism, induce, tensor_of_homs, Tensor, TensorCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Associator,
    AssociatorInverse,
    LeftUnitor,
    RightUnitor,
    Braiding,
    FunctorComparison,
    FreeComparison,
}

/// An induced structure map with the checks performed while building it.
#[derive(Clone, Debug)]
pub struct Cell {
    pub kind: CellKind,
    pub map: Vec<usize>,
    pub report: Report,
}

/// A bracketing of tensor factors.
#[derive(Clone, Debug)]
pub enum Tree {
    Leaf(Algebra),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(a: &Algebra) -> Tree {
        Tree::Leaf(a.clone())
    }

    pub fn node(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> Vec<&Algebra> {
        match self {
            Tree::Leaf(a) => vec![a],
            Tree::Node(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }
}

/// The monoidal category of algebras for one monad, with tensors memoized.
pub struct Monoidal<'m> {
    pub m: &'m Monad,
    cache: TensorCache,
    unit: Algebra,
}

fn bijective(map: &[usize], n: usize) -> Option<String> {
    let mut seen = vec![false; n];
    for (x, &y) in map.iter().enumerate() {
        if y >= n || seen[y] {
            return Some(format!("element {x} collides at {y}"));
        }
        seen[y] = true;
    }
    (map.len() != n).then(|| format!("{} elements map onto {n}", map.len()))
}

impl<'m> Monoidal<'m> {
    pub fn new(m: &'m Monad) -> Result<Monoidal<'m>> {
        let unit = Algebra::free(m, &m.base.unit())?;
        Ok(Monoidal { m, cache: TensorCache::new(), unit })
    }

    /// The unit object TE.
    pub fn unit(&self) -> &Algebra {
        &self.unit
    }

    pub fn tensor(&self, a: &Algebra, b: &Algebra) -> Result<Arc<Tensor>> {
        self.cache.get(self.m, a, b)
    }

    pub fn obj(&self, tree: &Tree) -> Result<Algebra> {
        match tree {
            Tree::Leaf(a) => Ok(a.clone()),
            Tree::Node(l, r) => Ok(self.tensor(&self.obj(l)?, &self.obj(r)?)?.alg.clone()),
        }
    }

    /// f⊠g between the tensors of the given domains and codomains.
    pub fn tensor_homs(&self, (a, a2, f): (&Algebra, &Algebra, &[usize]), (b, b2, g): (&Algebra, &Algebra, &[usize])) -> Result<Vec<usize>> {
        tensor_of_homs(self.m, &*self.tensor(a, b)?, &*self.tensor(a2, b2)?, f, g)
    }

    /// For each z in W (bracketed like `tree`, leaf i ranging over picks[i]) the element
    /// j(…j(x1, x2)…) of the iterated tensor.
    pub fn values(&self, tree: &Tree, picks: &[Vec<usize>]) -> Result<Vec<usize>> {
        let mut next = 0;
        self.values_at(tree, picks, &mut next)
    }

    fn values_at(&self, tree: &Tree, picks: &[Vec<usize>], next: &mut usize) -> Result<Vec<usize>> {
        match tree {
            Tree::Leaf(_) => {
                *next += 1;
                Ok(picks[*next - 1].clone())
            }
            Tree::Node(l, r) => {
                let lv = self.values_at(l, picks, next)?;
                let rv = self.values_at(r, picks, next)?;
                let t = self.tensor(&self.obj(l)?, &self.obj(r)?)?;
                let base = self.m.base;
                Ok((0..base.size(lv.len(), rv.len()))
                    .map(|z| t.j_part(self.m, map_part(base.split(lv.len(), rv.len(), z), |x| lv[x], |y| rv[y])))
                    .collect())
            }
        }
    }

    /// Induces S -> target with S = obj(src_tree), from the generating values of `src_tree`
    /// and target values given per element of W.
    fn induce_cell(&self, kind: CellKind, src_tree: &Tree, target: &Algebra, tgt: &[usize], picks: &[Vec<usize>]) -> Result<Cell> {
        let m = self.m;
        let src = self.obj(src_tree)?;
        let sv = self.values(src_tree, picks)?;
        let w = sv.len();
        let map = induce(
            m,
            w,
            src.size(),
            &|t: TElem| src.eval(m, w, t, |z| sv[z]),
            &|t: TElem| target.eval(m, w, t, |z| tgt[z]),
            &format!("{kind:?}"),
        )?;
        let mut report = Report::new();
        report.push(match src.hom_witness(m, target, &map) {
            None => Check::pass("homomorphism", src.size() as u64),
            Some(wit) => return Err(invariant(format!("{kind:?} is not a homomorphism: {wit}"))),
        });
        report.push(Check::pass("defining square", m.t_count(w)? as u64));
        Ok(Cell { kind, map, report })
    }

    fn with_bijection(mut cell: Cell, n: usize) -> Cell {
        cell.report.push(match bijective(&cell.map, n) {
            None => Check::pass("bijective", n as u64),
            Some(w) => Check::fail("bijective", n as u64, w),
        });
        cell
    }

    fn three(a: &Algebra, b: &Algebra, c: &Algebra) -> (Tree, Tree) {
        let (la, lb, lc) = (Tree::leaf(a), Tree::leaf(b), Tree::leaf(c));
        (Tree::node(Tree::node(la.clone(), lb.clone()), lc.clone()), Tree::node(la, Tree::node(lb, lc)))
    }

    /// ᾱ: (A⊠B)⊠C -> A⊠(B⊠C), induced by Tα.
    pub fn associator(&self, a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Cell> {
        let (left, right) = Self::three(a, b, c);
        let picks = crate::tensor::picks(self.m, &[a, b, c]);
        let (wa, wb, wc) = (picks[0].len(), picks[1].len(), picks[2].len());
        let rv = self.values(&right, &picks)?;
        let w = self.m.base.size(self.m.base.size(wa, wb), wc);
        let tgt: Vec<usize> = (0..w).map(|z| rv[self.m.base.alpha_elem(wa, wb, wc, z)]).collect();
        let target = self.obj(&right)?;
        let cell = self.induce_cell(CellKind::Associator, &left, &target, &tgt, &picks)?;
        Ok(Self::with_bijection(cell, target.size()))
    }

    /// ᾱ⁻¹: A⊠(B⊠C) -> (A⊠B)⊠C, induced by Tα⁻¹.
    pub fn associator_inv(&self, a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Cell> {
        let (left, right) = Self::three(a, b, c);
        let picks = crate::tensor::picks(self.m, &[a, b, c]);
        let (wa, wb, wc) = (picks[0].len(), picks[1].len(), picks[2].len());
        let lv = self.values(&left, &picks)?;
        let w = self.m.base.size(wa, self.m.base.size(wb, wc));
        let tgt: Vec<usize> = (0..w).map(|z| lv[self.m.base.alpha_inv_elem(wa, wb, wc, z)]).collect();
        let target = self.obj(&left)?;
        let cell = self.induce_cell(CellKind::AssociatorInverse, &right, &target, &tgt, &picks)?;
        Ok(Self::with_bijection(cell, target.size()))
    }

    /// λ̄: TE⊠A -> A classified from a·Tλ·κ·(1⊗η), with its inverse l·η: x ↦ j(λ⁻¹x).
    pub fn left_unitor(&self, a: &Algebra) -> Result<(Cell, Vec<usize>)> {
        let m = self.m;
        let (ne, na) = (m.e_size(), a.size());
        let te = self.unit.size();
        let literal = m.t_encodable(m.base.size(ne, na));
        let f: Vec<usize> = (0..m.base.size(te, na))
            .map(|z| {
                let part = m.base.split(te, na, z);
                if literal {
                    let k = m.kappa_part(ne, na, map_part(part, |e| e, |x| m.eta(na, x)));
                    a.eval(m, m.base.size(ne, na), k, |w| m.base.lambda_elem(na, w))
                } else {
                    unit_value(m, a, part, true)
                }
            })
            .collect();
        self.unitor(CellKind::LeftUnitor, &self.unit, a, &f, |x| {
            map_part(m.base.split(ne, na, m.base.lambda_inv_elem(na, x)), |e| m.eta(ne, e), |y| y)
        })
    }

    /// ρ̄: A⊠TE -> A classified from a·Tρ·κ·(η⊗1), with its inverse.
    pub fn right_unitor(&self, a: &Algebra) -> Result<(Cell, Vec<usize>)> {
        let m = self.m;
        let (ne, na) = (m.e_size(), a.size());
        let te = self.unit.size();
        let literal = m.t_encodable(m.base.size(na, ne));
        let f: Vec<usize> = (0..m.base.size(na, te))
            .map(|z| {
                let part = m.base.split(na, te, z);
                if literal {
                    let k = m.kappa_part(na, ne, map_part(part, |x| m.eta(na, x), |e| e));
                    a.eval(m, m.base.size(na, ne), k, |w| m.base.rho_elem(na, w))
                } else {
                    unit_value(m, a, part, false)
                }
            })
            .collect();
        self.unitor(CellKind::RightUnitor, a, &self.unit, &f, |x| {
            map_part(m.base.split(na, ne, m.base.rho_inv_elem(na, x)), |y| y, |e| m.eta(ne, e))
        })
    }

    fn unitor(&self, kind: CellKind, l: &Algebra, r: &Algebra, f: &[usize], inv_part: impl Fn(usize) -> Part) -> Result<(Cell, Vec<usize>)> {
        let m = self.m;
        let t = self.tensor(l, r)?;
        let a = if kind == CellKind::LeftUnitor { r } else { l };
        let map = classify_bimorphism(m, &t, a, f)?;
        let inv: Vec<usize> = (0..a.size()).map(|x| t.j_part(m, inv_part(x))).collect();
        let mut report = Report::new();
        report.push(Check::pass("homomorphism", t.alg.size() as u64));
        report.push(match a.hom_witness(m, &t.alg, &inv) {
            None => Check::pass("inverse is a homomorphism", a.size() as u64),
            Some(w) => Check::fail("inverse is a homomorphism", a.size() as u64, w),
        });
        report.elementwise("cell after inverse = 1", a.size() as u64, |x| {
            (map[inv[x as usize]] != x as usize).then(|| format!("element {x}"))
        });
        report.elementwise("inverse after cell = 1", t.alg.size() as u64, |c| {
            (inv[map[c as usize]] != c as usize).then(|| format!("class {c}"))
        });
        Ok((Cell { kind, map, report }, inv))
    }

    /// σ̄: A⊠B -> B⊠A classified from j'·σ.
    pub fn braiding(&self, a: &Algebra, b: &Algebra) -> Result<Cell> {
        let m = self.m;
        let (t, t2) = (self.tensor(a, b)?, self.tensor(b, a)?);
        let (na, nb) = (a.size(), b.size());
        let f: Vec<usize> = (0..m.base.size(na, nb)).map(|z| t2.j[m.base.sigma_elem(na, nb, z)]).collect();
        let map = classify_bimorphism(m, &t, &t2.alg, &f).map_err(|e| match e {
            crate::Error::Precondition(w) => crate::error::precondition(format!("monad is not symmetric here: {w}")),
            other => other,
        })?;
        let mut report = Report::new();
        report.push(Check::pass("homomorphism", t.alg.size() as u64));
        Ok(Self::with_bijection(Cell { kind: CellKind::Braiding, map, report }, t2.alg.size()))
    }
}

/// a·Tλ·κ·(1⊗η) at (e, x) when T over E⊗A cannot be encoded: κ(e, ηx) = T(−, x)(e),
/// so the value is a·T(const x)(e). The mirrored form serves ρ̄.
fn unit_value(m: &Monad, a: &Algebra, part: Part, left: bool) -> usize {
    let ne = m.e_size();
    match (part, left) {
        (Part::Pair(e, x), true) | (Part::Pair(x, e), false) => a.eval(m, ne, e, |_| x),
        (Part::Inl(e), true) | (Part::Inr(e), false) => a.eval(m, ne, e, |_| unreachable!("E is empty")),
        (Part::Inr(x), true) | (Part::Inl(x), false) => x,
    }
}

/// g·f as tables.
pub fn compose(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Elementwise equality of two maps, as a check.
pub fn same_map(name: impl Into<String>, lhs: &[usize], rhs: &[usize]) -> Check {
    let name = name.into();
    match lhs.iter().zip(rhs).position(|(x, y)| x != y) {
        _ if lhs.len() != rhs.len() => Check::fail(name, 0, format!("domains differ: {} vs {}", lhs.len(), rhs.len())),
        None => Check::pass(name, lhs.len() as u64),
        Some(c) => Check::fail(name, c as u64 + 1, format!("class {c}: {} vs {}", lhs[c], rhs[c])),
    }
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}
