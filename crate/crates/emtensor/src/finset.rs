//! Finite labelled sets, total maps between them, and the cartesian and
//! cocartesian monoidal structures on finite sets.
//!
//! Elements are addressed by index; labels are derived from the structure
//! of the set on demand. Composite sets are ordered structurally: pairs are
//! left-factor major, sums list the left summand first, subsets and vectors
//! follow their integer encoding.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

#[derive(Clone)]
pub struct FinSet(Arc<Node>);

struct Node {
    shape: Shape,
    size: usize,
}

#[derive(PartialEq, Eq, Hash)]
enum Shape {
    Atoms(Vec<String>),
    Unit,
    Empty,
    Product(FinSet, FinSet),
    Sum(FinSet, FinSet),
    Power(FinSet),
    Vectors(FinSet, u32),
    Subset(FinSet, Vec<u64>),
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.size == other.0.size && self.0.shape == other.0.shape)
    }
}

impl Eq for FinSet {}

impl std::hash::Hash for FinSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.size.hash(state);
        self.0.shape.hash(state);
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 8 {
            f.debug_set().entries(self.labels()).finish()
        } else {
            write!(f, "FinSet(size {})", self.size())
        }
    }
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

impl FinSet {
    fn new(shape: Shape, size: usize) -> FinSet {
        FinSet(Arc::new(Node { shape, size }))
    }

    /// A set of opaque labels, sorted into canonical order.
    pub fn atoms<S: AsRef<str>>(labels: &[S]) -> Result<FinSet> {
        let mut v: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        v.sort();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(precondition(format!("duplicate label {:?}", w[0])));
            }
        }
        if v.is_empty() {
            return Ok(FinSet::empty());
        }
        let n = v.len();
        Ok(FinSet::new(Shape::Atoms(v), n))
    }

    /// The set {0, 1, ..., n-1} with decimal labels, ordered numerically.
    ///
    /// Numeric order agrees with lexicographic order only for n <= 10, so
    /// larger sets keep their construction order as the canonical one.
    pub fn range(n: usize) -> FinSet {
        if n == 0 {
            return FinSet::empty();
        }
        let v: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FinSet::new(Shape::Atoms(v), n)
    }

    pub fn unit() -> FinSet {
        FinSet::new(Shape::Unit, 1)
    }

    pub fn empty() -> FinSet {
        FinSet::new(Shape::Empty, 0)
    }

    pub fn product(a: &FinSet, b: &FinSet) -> FinSet {
        FinSet::new(Shape::Product(a.clone(), b.clone()), a.size() * b.size())
    }

    pub fn sum(a: &FinSet, b: &FinSet) -> FinSet {
        FinSet::new(Shape::Sum(a.clone(), b.clone()), a.size() + b.size())
    }

    /// The set of all subsets, encoded as bitmasks. `None` if the size does not fit.
    pub fn power(base: &FinSet) -> Option<FinSet> {
        if base.size() >= usize::BITS as usize {
            return None;
        }
        Some(FinSet::new(Shape::Power(base.clone()), 1usize << base.size()))
    }

    /// The set of all functions base -> F_p, encoded base-p with the first element least significant.
    pub fn vectors(base: &FinSet, p: u32) -> Option<FinSet> {
        let n = checked_pow(p as u128, base.size())?;
        if n > usize::MAX as u128 {
            return None;
        }
        Some(FinSet::new(Shape::Vectors(base.clone(), p), n as usize))
    }

    /// The subset of `parent` given by the listed element indices, in that order.
    pub fn subset(parent: &FinSet, elems: Vec<u64>) -> FinSet {
        let n = elems.len();
        FinSet::new(Shape::Subset(parent.clone(), elems), n)
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn is_empty(&self) -> bool {
        self.0.size == 0
    }

    /// Label of the element at `i`. Works for parents too large to enumerate.
    pub fn label_of(&self, i: u64) -> String {
        match &self.0.shape {
            Shape::Atoms(v) => v[i as usize].clone(),
            Shape::Unit => "★".to_string(),
            Shape::Empty => unreachable!("empty set has no elements"),
            Shape::Product(a, b) => {
                let nb = b.size() as u64;
                format!("({},{})", a.label_of(i / nb), b.label_of(i % nb))
            }
            Shape::Sum(a, b) => {
                let na = a.size() as u64;
                if i < na {
                    format!("inl:{}", a.label_of(i))
                } else {
                    format!("inr:{}", b.label_of(i - na))
                }
            }
            Shape::Power(b) => {
                let parts: Vec<String> = (0..b.size())
                    .filter(|&k| (i >> k) & 1 == 1)
                    .map(|k| b.label_of(k as u64))
                    .collect();
                format!("{{{}}}", parts.join(","))
            }
            Shape::Vectors(b, p) => {
                let mut rest = i;
                let mut parts = Vec::with_capacity(b.size());
                for k in 0..b.size() {
                    parts.push(format!("{}:{}", b.label_of(k as u64), rest % *p as u64));
                    rest /= *p as u64;
                }
                format!("<{}>", parts.join(","))
            }
            Shape::Subset(parent, elems) => parent.label_of(elems[i as usize]),
        }
    }

    pub fn label(&self, i: usize) -> String {
        self.label_of(i as u64)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }

    pub fn index_map(&self) -> HashMap<String, usize> {
        (0..self.size()).map(|i| (self.label(i), i)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.size()).find(|&i| self.label(i) == label)
    }
}

/// A total function between finite sets, stored as a table of codomain indices.
#[derive(Clone, PartialEq, Eq)]
pub struct FinMap {
    pub dom: FinSet,
    pub cod: FinSet,
    pub table: Vec<u32>,
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinMap{:?}", self.table)
    }
}

impl FinMap {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<u32>) -> Result<FinMap> {
        if table.len() != dom.size() {
            return Err(precondition(format!(
                "table has {} entries for a domain of size {}",
                table.len(),
                dom.size()
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= cod.size()) {
            return Err(precondition(format!("table value {} outside codomain of size {}", bad, cod.size())));
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn from_fn(dom: &FinSet, cod: &FinSet, f: impl Fn(usize) -> usize) -> FinMap {
        let table = (0..dom.size()).map(|i| f(i) as u32).collect();
        FinMap { dom: dom.clone(), cod: cod.clone(), table }
    }

    pub fn identity(x: &FinSet) -> FinMap {
        FinMap::from_fn(x, x, |i| i)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i] as usize
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &FinMap) -> Result<FinMap> {
        if first.cod != self.dom {
            return Err(precondition("composing maps with mismatched intermediate sets"));
        }
        Ok(FinMap::from_fn(&first.dom, &self.cod, |i| self.apply(first.apply(i))))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.table {
            if std::mem::replace(&mut seen[v as usize], true) {
                return false;
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.table {
            seen[v as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijection(&self) -> bool {
        self.dom.size() == self.cod.size() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<FinMap> {
        if !self.is_bijection() {
            return Err(precondition("map is not a bijection"));
        }
        let mut inv = vec![0u32; self.cod.size()];
        for (i, &v) in self.table.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Ok(FinMap { dom: self.cod.clone(), cod: self.dom.clone(), table: inv })
    }

    /// Table as label pairs, for reports.
    pub fn label_table(&self) -> Vec<(String, String)> {
        (0..self.dom.size()).map(|i| (self.dom.label(i), self.cod.label(self.apply(i)))).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Cartesian,
    Cocartesian,
}

/// An element of X⊗Y, split into its components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Pair(usize, usize),
    Inl(usize),
    Inr(usize),
}

/// Applies f to the left component and g to the right one.
pub fn map_part(part: Part, f: impl Fn(usize) -> usize, g: impl Fn(usize) -> usize) -> Part {
    match part {
        Part::Pair(x, y) => Part::Pair(f(x), g(y)),
        Part::Inl(x) => Part::Inl(f(x)),
        Part::Inr(y) => Part::Inr(g(y)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureIso {
    Alpha,
    Lambda,
    Rho,
    Sigma,
}

impl BaseKind {
    pub fn parse(s: &str) -> Result<BaseKind> {
        match s {
            "cartesian" => Ok(BaseKind::Cartesian),
            "cocartesian" => Ok(BaseKind::Cocartesian),
            other => Err(Error::Parse(format!("unknown base {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Cartesian => "cartesian",
            BaseKind::Cocartesian => "cocartesian",
        }
    }

    pub fn unit_size(self) -> usize {
        match self {
            BaseKind::Cartesian => 1,
            BaseKind::Cocartesian => 0,
        }
    }

    pub fn size(self, nx: usize, ny: usize) -> usize {
        match self {
            BaseKind::Cartesian => nx * ny,
            BaseKind::Cocartesian => nx + ny,
        }
    }

    pub fn split(self, nx: usize, ny: usize, z: usize) -> Part {
        match self {
            BaseKind::Cartesian => Part::Pair(z / ny, z % ny),
            BaseKind::Cocartesian => {
                if z < nx {
                    Part::Inl(z)
                } else {
                    Part::Inr(z - nx)
                }
            }
        }
    }

    pub fn join(self, nx: usize, ny: usize, part: Part) -> usize {
        match (self, part) {
            (BaseKind::Cartesian, Part::Pair(x, y)) => x * ny + y,
            (BaseKind::Cocartesian, Part::Inl(x)) => x,
            (BaseKind::Cocartesian, Part::Inr(y)) => nx + y,
            (kind, part) => panic!("part {part:?} does not belong to the {} base", kind.name()),
        }
    }

    /// (f⊗g)(z) for f: X -> X', g: Y -> Y' given as closures.
    pub fn map_elem(
        self,
        (nx, ny): (usize, usize),
        (mx, my): (usize, usize),
        f: impl Fn(usize) -> usize,
        g: impl Fn(usize) -> usize,
        z: usize,
    ) -> usize {
        match self.split(nx, ny, z) {
            Part::Pair(x, y) => self.join(mx, my, Part::Pair(f(x), g(y))),
            Part::Inl(x) => self.join(mx, my, Part::Inl(f(x))),
            Part::Inr(y) => self.join(mx, my, Part::Inr(g(y))),
        }
    }

    /// α: (X⊗Y)⊗Z -> X⊗(Y⊗Z).
    pub fn alpha_elem(self, nx: usize, ny: usize, nz: usize, z: usize) -> usize {
        let nxy = self.size(nx, ny);
        let nyz = self.size(ny, nz);
        match self.split(nxy, nz, z) {
            Part::Pair(xy, c) => {
                let (a, b) = (xy / ny, xy % ny);
                a * nyz + (b * nz + c)
            }
            Part::Inl(xy) => match self.split(nx, ny, xy) {
                Part::Inl(a) => a,
                Part::Inr(b) => nx + b,
                Part::Pair(..) => unreachable!(),
            },
            Part::Inr(c) => nx + ny + c,
        }
    }

    /// α⁻¹: X⊗(Y⊗Z) -> (X⊗Y)⊗Z.
    pub fn alpha_inv_elem(self, _nx: usize, ny: usize, nz: usize, z: usize) -> usize {
        match self {
            BaseKind::Cartesian => {
                let nyz = ny * nz;
                let (a, bc) = (z / nyz, z % nyz);
                let (b, c) = (bc / nz, bc % nz);
                (a * ny + b) * nz + c
            }
            // (X+Y)+Z and X+(Y+Z) share the same flat index.
            BaseKind::Cocartesian => z,
        }
    }

    /// λ: E⊗X -> X. With E a singleton (cartesian) or empty (cocartesian)
    /// the element of E⊗X over x has index x in both cases.
    pub fn lambda_elem(self, _nx: usize, z: usize) -> usize {
        z
    }

    pub fn lambda_inv_elem(self, _nx: usize, x: usize) -> usize {
        x
    }

    /// ρ: X⊗E -> X, again index-preserving for both bases.
    pub fn rho_elem(self, _nx: usize, z: usize) -> usize {
        z
    }

    pub fn rho_inv_elem(self, _nx: usize, x: usize) -> usize {
        x
    }

    /// σ: X⊗Y -> Y⊗X.
    pub fn sigma_elem(self, nx: usize, ny: usize, z: usize) -> usize {
        match self.split(nx, ny, z) {
            Part::Pair(x, y) => self.join(ny, nx, Part::Pair(y, x)),
            Part::Inl(x) => self.join(ny, nx, Part::Inr(x)),
            Part::Inr(y) => self.join(ny, nx, Part::Inl(y)),
        }
    }

    pub fn tensor(self, x: &FinSet, y: &FinSet) -> FinSet {
        match self {
            BaseKind::Cartesian => FinSet::product(x, y),
            BaseKind::Cocartesian => FinSet::sum(x, y),
        }
    }

    pub fn unit(self) -> FinSet {
        match self {
            BaseKind::Cartesian => FinSet::unit(),
            BaseKind::Cocartesian => FinSet::empty(),
        }
    }

    pub fn tensor_map(self, f: &FinMap, g: &FinMap) -> FinMap {
        let dom = self.tensor(&f.dom, &g.dom);
        let cod = self.tensor(&f.cod, &g.cod);
        let sizes = (f.dom.size(), g.dom.size());
        let csizes = (f.cod.size(), g.cod.size());
        FinMap::from_fn(&dom, &cod, |z| self.map_elem(sizes, csizes, |x| f.apply(x), |y| g.apply(y), z))
    }

    /// The structure isomorphism `which` at the given objects.
    pub fn structure_iso(self, which: StructureIso, objects: &[FinSet]) -> Result<FinMap> {
        let arity = match which {
            StructureIso::Alpha => 3,
            StructureIso::Lambda | StructureIso::Rho => 1,
            StructureIso::Sigma => 2,
        };
        if objects.len() != arity {
            return Err(precondition(format!("{which:?} takes {arity} objects, got {}", objects.len())));
        }
        let e = self.unit();
        Ok(match which {
            StructureIso::Alpha => {
                let (x, y, z) = (&objects[0], &objects[1], &objects[2]);
                let dom = self.tensor(&self.tensor(x, y), z);
                let cod = self.tensor(x, &self.tensor(y, z));
                FinMap::from_fn(&dom, &cod, |w| self.alpha_elem(x.size(), y.size(), z.size(), w))
            }
            StructureIso::Lambda => {
                let x = &objects[0];
                FinMap::from_fn(&self.tensor(&e, x), x, |w| self.lambda_elem(x.size(), w))
            }
            StructureIso::Rho => {
                let x = &objects[0];
                FinMap::from_fn(&self.tensor(x, &e), x, |w| self.rho_elem(x.size(), w))
            }
            StructureIso::Sigma => {
                let (x, y) = (&objects[0], &objects[1]);
                FinMap::from_fn(&self.tensor(x, y), &self.tensor(y, x), |w| self.sigma_elem(x.size(), y.size(), w))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize) -> FinSet {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        FinSet::atoms(&labels).unwrap()
    }

    #[test]
    fn atoms_are_sorted_and_distinct() {
        let s = FinSet::atoms(&["b", "a", "c"]).unwrap();
        assert_eq!(s.labels(), vec!["a", "b", "c"]);
        assert!(FinSet::atoms(&["a", "a"]).is_err());
        assert_eq!(s, FinSet::atoms(&["c", "b", "a"]).unwrap());
    }

    #[test]
    fn unit_objects_and_sizes() {
        let x = set(3);
        let y = set(2);
        assert_eq!(BaseKind::Cartesian.unit().labels(), vec!["★"]);
        assert!(BaseKind::Cocartesian.unit().is_empty());
        assert_eq!(BaseKind::Cartesian.tensor(&x, &y).size(), 6);
        assert_eq!(BaseKind::Cocartesian.tensor(&x, &y).size(), 5);
    }

    #[test]
    fn labels_of_composites() {
        let x = set(2);
        let p = FinSet::product(&x, &x);
        assert_eq!(p.labels(), vec!["(a,a)", "(a,b)", "(b,a)", "(b,b)"]);
        let s = FinSet::sum(&x, &x);
        assert_eq!(s.labels(), vec!["inl:a", "inl:b", "inr:a", "inr:b"]);
        let pw = FinSet::power(&x).unwrap();
        assert_eq!(pw.labels(), vec!["{}", "{a}", "{b}", "{a,b}"]);
        let v = FinSet::vectors(&x, 3).unwrap();
        assert_eq!(v.size(), 9);
        assert_eq!(v.label(5), "<a:2,b:1>");
    }

    #[test]
    fn cartesian_lambda_is_projection() {
        let x = set(3);
        let l = BaseKind::Cartesian.structure_iso(StructureIso::Lambda, &[x.clone()]).unwrap();
        for i in 0..3 {
            assert_eq!(l.dom.label(i), format!("(★,{})", x.label(l.apply(i))));
        }
        assert!(l.is_bijection());
    }

    #[test]
    fn tensor_map_acts_componentwise() {
        let x = set(2);
        let f = FinMap::new(x.clone(), x.clone(), vec![1, 1]).unwrap();
        let g = FinMap::identity(&x);
        let fg = BaseKind::Cartesian.tensor_map(&f, &g);
        assert_eq!(fg.label_table()[0], ("(a,a)".to_string(), "(b,a)".to_string()));
        let h = BaseKind::Cocartesian.tensor_map(&f, &g);
        assert_eq!(h.table, vec![1, 1, 2, 3]);
        let id = BaseKind::Cartesian.tensor_map(&FinMap::identity(&x), &FinMap::identity(&x));
        assert_eq!(id, FinMap::identity(&FinSet::product(&x, &x)));
    }

    #[test]
    fn cocartesian_alpha_matches_concatenation() {
        let x = set(2);
        let a = BaseKind::Cocartesian
            .structure_iso(StructureIso::Alpha, &[x.clone(), x.clone(), x.clone()])
            .unwrap();
        assert_eq!(a.dom.size(), 6);
        for i in 0..6 {
            let dl = a.dom.label(i);
            let cl = a.cod.label(a.apply(i));
            // Flatten both nested tags to a position in the concatenated list.
            let flat = |s: &str| -> usize {
                let leaf = s.rsplit(':').next().unwrap();
                let off = if s.starts_with("inl:inl:") {
                    0
                } else if s.starts_with("inl:inr:") || s.starts_with("inr:inl:") {
                    2
                } else if s.starts_with("inr:inr:") {
                    4
                } else if s.starts_with("inl:") {
                    0
                } else {
                    4
                };
                off + if leaf == "a" { 0 } else { 1 }
            };
            assert_eq!(flat(&dl), flat(&cl), "{dl} vs {cl}");
        }
    }

    #[test]
    fn singleton_alpha_is_unique_bijection() {
        let a = FinSet::atoms(&["a"]).unwrap();
        let b = FinSet::atoms(&["b"]).unwrap();
        let c = FinSet::atoms(&["c"]).unwrap();
        let m = BaseKind::Cartesian.structure_iso(StructureIso::Alpha, &[a, b, c]).unwrap();
        assert_eq!(m.label_table(), vec![("((a,b),c)".to_string(), "(a,(b,c))".to_string())]);
    }
}
