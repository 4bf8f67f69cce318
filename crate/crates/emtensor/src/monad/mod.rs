//! Finitary monoidal monads on finite sets.
//!
//! A monad acts on sizes: `T(n)` is the set of T-elements over an n-element
//! set, and every component is computed elementwise on integer encodings.
//! Powerset elements are bitmasks; vectors over F_p are base-p numerals with
//! the first coordinate least significant.

mod kleisli;
mod laws;

pub use kleisli::{all_maps, KleisliMap, MonadMorphism, MorphismKind};
pub use laws::{Fork, KappaFn, MuFn};

use crate::error::{precondition, resource, Error, Result};
use crate::finset::{BaseKind, FinSet, Part};

/// Encoding of an element of T(X).
pub type TElem = usize;

pub const DEFAULT_GUARD: usize = 1 << 20;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonadKind {
    Identity,
    Powerset,
    VectorSpace { p: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Constant,
    Unary,
    /// Associative and commutative with the signature's constant as unit.
    Binary,
}

/// A generating operation: an element of T(arity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    pub name: String,
    pub arity: usize,
    pub elem: TElem,
    pub kind: OpKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monad {
    pub kind: MonadKind,
    pub base: BaseKind,
    pub guard: usize,
    pub budget: u64,
}

/// A unary polynomial of the free algebra T(n), used by congruence closure.
#[derive(Clone, Copy, Debug)]
pub enum Poly {
    Unary(TElem),
    Translate(TElem, TElem),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Monad {
    pub fn new(kind: MonadKind, base: BaseKind) -> Result<Monad> {
        if let MonadKind::VectorSpace { p } = kind {
            if !is_prime(p) {
                return Err(precondition(format!("vector_space needs a prime, got {p}")));
            }
        }
        Ok(Monad { kind, base, guard: DEFAULT_GUARD, budget: DEFAULT_BUDGET })
    }

    pub fn identity(base: BaseKind) -> Monad {
        Monad::new(MonadKind::Identity, base).unwrap()
    }

    pub fn powerset(base: BaseKind) -> Monad {
        Monad::new(MonadKind::Powerset, base).unwrap()
    }

    pub fn vector_space(p: u32, base: BaseKind) -> Result<Monad> {
        Monad::new(MonadKind::VectorSpace { p }, base)
    }

    pub fn from_name(name: &str, p: Option<u32>, base: BaseKind) -> Result<Monad> {
        match name {
            "identity" => Ok(Monad::identity(base)),
            "powerset" => Ok(Monad::powerset(base)),
            "vector_space" => Monad::vector_space(p.unwrap_or(2), base),
            other => Err(Error::UnknownMonad(other.to_string())),
        }
    }

    pub fn with_guard(mut self, guard: usize) -> Monad {
        self.guard = guard;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Monad {
        self.budget = budget;
        self
    }

    pub fn name(&self) -> String {
        match self.kind {
            MonadKind::Identity => "identity".into(),
            MonadKind::Powerset => "powerset".into(),
            MonadKind::VectorSpace { p } => format!("vector_space({p})"),
        }
    }

    /// |T(n)|, or `None` when it does not fit a machine word.
    pub fn t_size(&self, n: usize) -> Option<usize> {
        match self.kind {
            MonadKind::Identity => Some(n),
            MonadKind::Powerset => (n < usize::BITS as usize).then(|| 1usize << n),
            MonadKind::VectorSpace { p } => {
                let mut acc: usize = 1;
                for _ in 0..n {
                    acc = acc.checked_mul(p as usize)?;
                }
                Some(acc)
            }
        }
    }

    /// |T(n)| if it is within the guard, else a resource error.
    pub fn t_count(&self, n: usize) -> Result<usize> {
        match self.t_size(n) {
            Some(s) if s <= self.guard => Ok(s),
            Some(s) => Err(resource(format!(
                "carrier T(X) with |X| = {n} has {s} elements, above the guard {}",
                self.guard
            ))),
            None => Err(resource(format!("carrier T(X) with |X| = {n} is too large to encode"))),
        }
    }

    /// Whether T-elements over n generators can be encoded at all.
    pub fn t_encodable(&self, n: usize) -> bool {
        match self.kind {
            MonadKind::Identity => true,
            MonadKind::Powerset => n < usize::BITS as usize,
            MonadKind::VectorSpace { .. } => self.t_size(n).is_some(),
        }
    }

    /// The labelled set T(X).
    pub fn t_set(&self, x: &FinSet) -> Result<FinSet> {
        let out = match self.kind {
            MonadKind::Identity => Some(x.clone()),
            MonadKind::Powerset => FinSet::power(x),
            MonadKind::VectorSpace { p } => FinSet::vectors(x, p),
        };
        out.ok_or_else(|| resource(format!("T(X) with |X| = {} is too large to encode", x.size())))
    }

    /// Size of the unit object E of the base.
    pub fn e_size(&self) -> usize {
        self.base.unit_size()
    }

    fn p(&self) -> usize {
        match self.kind {
            MonadKind::VectorSpace { p } => p as usize,
            _ => unreachable!(),
        }
    }

    // Vector helpers over F_p on base-p numerals of length m.

    fn vdigits(&self, mut v: TElem, m: usize) -> impl Iterator<Item = (usize, usize)> {
        let p = self.p();
        (0..m).map(move |i| {
            let d = v % p;
            v /= p;
            (i, d)
        })
    }

    pub(crate) fn vadd(&self, a: TElem, b: TElem, m: usize) -> TElem {
        let p = self.p();
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut w = 1;
        for _ in 0..m {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
            w *= p;
        }
        out
    }

    pub(crate) fn vscale(&self, c: usize, a: TElem, m: usize) -> TElem {
        let p = self.p();
        match c % p {
            0 => 0,
            1 => a,
            c => {
                let mut a = a;
                let mut out = 0;
                let mut w = 1;
                for _ in 0..m {
                    out += ((a % p) * c % p) * w;
                    a /= p;
                    w *= p;
                }
                out
            }
        }
    }

    /// The vector with coefficient c at coordinate i.
    pub(crate) fn vbasis(&self, i: usize, c: usize) -> TElem {
        let p = self.p();
        (c % p) * p.pow(i as u32)
    }

    /// η_X(x).
    pub fn eta(&self, _n: usize, x: usize) -> TElem {
        match self.kind {
            MonadKind::Identity => x,
            MonadKind::Powerset => 1usize << x,
            MonadKind::VectorSpace { .. } => self.vbasis(x, 1),
        }
    }

    /// The empty join / zero vector of T(n); for the identity monad there is none.
    pub fn zero(&self) -> Option<TElem> {
        match self.kind {
            MonadKind::Identity => None,
            _ => Some(0),
        }
    }

    /// T(f)(t) for f: n -> m.
    pub fn t_map(&self, n: usize, t: TElem, f: impl Fn(usize) -> usize, m: usize) -> TElem {
        match self.kind {
            MonadKind::Identity => f(t),
            MonadKind::Powerset => {
                let mut out = 0usize;
                let mut rest = t;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1usize << f(i);
                }
                out
            }
            MonadKind::VectorSpace { .. } => {
                let mut out = 0;
                for (i, c) in self.vdigits(t, n) {
                    if c != 0 {
                        out = self.vadd(out, self.vbasis(f(i), c), m);
                    }
                }
                out
            }
        }
    }

    /// μ·T(f)(t) for a Kleisli map f: n -> T(m).
    pub fn bind(&self, n: usize, t: TElem, f: impl Fn(usize) -> TElem, m: usize) -> TElem {
        match self.kind {
            MonadKind::Identity => f(t),
            MonadKind::Powerset => {
                let mut out = 0usize;
                let mut rest = t;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= f(i);
                }
                out
            }
            MonadKind::VectorSpace { .. } => {
                let mut out = 0;
                for (i, c) in self.vdigits(t, n) {
                    if c != 0 {
                        out = self.vadd(out, self.vscale(c, f(i), m), m);
                    }
                }
                out
            }
        }
    }

    /// μ_X on an element of T(T(X)).
    pub fn mu(&self, n: usize, tt: TElem) -> TElem {
        let tn = self.t_size(n).expect("T(X) must be encodable to apply μ_X");
        self.bind(tn, tt, |t| t, n)
    }

    /// κ_{X,Y} on a split element of TX⊗TY.
    pub fn kappa_part(&self, nx: usize, ny: usize, part: Part) -> TElem {
        let base = self.base;
        match part {
            Part::Inl(u) => self.t_map(nx, u, |x| base.join(nx, ny, Part::Inl(x)), nx + ny),
            Part::Inr(v) => self.t_map(ny, v, |y| base.join(nx, ny, Part::Inr(y)), nx + ny),
            Part::Pair(u, v) => match self.kind {
                MonadKind::Identity => u * ny + v,
                MonadKind::Powerset => {
                    let mut out = 0usize;
                    let mut rest = u;
                    while rest != 0 {
                        let i = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        out |= v << (i * ny);
                    }
                    out
                }
                MonadKind::VectorSpace { .. } => {
                    let m = nx * ny;
                    let mut out = 0;
                    for (i, a) in self.vdigits(u, nx) {
                        if a == 0 {
                            continue;
                        }
                        for (j, b) in self.vdigits(v, ny) {
                            if b != 0 {
                                out = self.vadd(out, self.vbasis(i * ny + j, a * b), m);
                            }
                        }
                    }
                    out
                }
            },
        }
    }

    /// κ_{X,Y}(w) for w an encoded element of TX⊗TY.
    pub fn kappa(&self, nx: usize, ny: usize, w: usize) -> TElem {
        let tx = self.t_size(nx).expect("T(X) must be encodable");
        let ty = self.t_size(ny).expect("T(Y) must be encodable");
        self.kappa_part(nx, ny, self.base.split(tx, ty, w))
    }

    /// The additive variant (u,v) ↦ Σ (u(x)+v(y))·(x,y) of the vector-space κ.
    /// Kept only to test it against the monoidal monad conditions.
    pub fn kappa_additive(&self, nx: usize, ny: usize, part: Part) -> TElem {
        match (self.kind, part) {
            (MonadKind::VectorSpace { .. }, Part::Pair(u, v)) => {
                let du: Vec<usize> = self.vdigits(u, nx).map(|(_, c)| c).collect();
                let dv: Vec<usize> = self.vdigits(v, ny).map(|(_, c)| c).collect();
                let mut out = 0;
                for i in 0..nx {
                    for j in 0..ny {
                        out = self.vadd(out, self.vbasis(i * ny + j, du[i] + dv[j]), nx * ny);
                    }
                }
                out
            }
            _ => self.kappa_part(nx, ny, part),
        }
    }

    /// The generating operations, each an element of T(arity).
    pub fn signature(&self) -> Vec<Operation> {
        let op = |name: &str, arity, elem, kind| Operation { name: name.to_string(), arity, elem, kind };
        match self.kind {
            MonadKind::Identity => vec![],
            MonadKind::Powerset => vec![
                op("bot", 0, 0, OpKind::Constant),
                op("join", 2, 0b11, OpKind::Binary),
            ],
            MonadKind::VectorSpace { p } => {
                let mut v = vec![
                    op("zero", 0, 0, OpKind::Constant),
                    op("add", 2, self.vadd(self.vbasis(0, 1), self.vbasis(1, 1), 2), OpKind::Binary),
                ];
                for c in 0..p as usize {
                    v.push(op(&format!("scale{c}"), 1, self.vbasis(0, c), OpKind::Unary));
                }
                v
            }
        }
    }

    /// Unary polynomials whose closure yields congruences of the free algebra T(n):
    /// unary operations, and translations by the generators η(y) for binary ones.
    pub fn free_polys(&self, n: usize) -> Vec<Poly> {
        let mut out = Vec::new();
        for op in self.signature() {
            match op.kind {
                OpKind::Constant => {}
                OpKind::Unary => out.push(Poly::Unary(op.elem)),
                OpKind::Binary => {
                    for y in 0..n {
                        out.push(Poly::Translate(op.elem, self.eta(n, y)));
                    }
                }
            }
        }
        out
    }

    pub fn apply_poly(&self, n: usize, poly: Poly, x: TElem) -> TElem {
        match poly {
            Poly::Unary(op) => self.bind(1, op, |_| x, n),
            Poly::Translate(op, g) => self.bind(2, op, |i| if i == 0 { x } else { g }, n),
        }
    }

    /// Iterates the set bits / nonzero coordinates of t as (index, coefficient).
    pub fn support(&self, n: usize, t: TElem) -> Vec<(usize, usize)> {
        match self.kind {
            MonadKind::Identity => vec![(t, 1)],
            MonadKind::Powerset => (0..n).filter(|&i| (t >> i) & 1 == 1).map(|i| (i, 1)).collect(),
            MonadKind::VectorSpace { .. } => self.vdigits(t, n).filter(|&(_, c)| c != 0).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_kappa_is_product() {
        let t = Monad::powerset(BaseKind::Cartesian);
        // {a} x {b} over singletons.
        assert_eq!(t.kappa_part(1, 1, Part::Pair(1, 1)), 1);
        // {0,1} x {0} over 2x1 → {(0,0),(1,0)}.
        assert_eq!(t.kappa_part(2, 1, Part::Pair(0b11, 0b1)), 0b11);
        assert_eq!(t.kappa_part(2, 2, Part::Pair(0b10, 0b11)), 0b1100);
    }

    #[test]
    fn vector_eta_is_indicator() {
        let t = Monad::vector_space(2, BaseKind::Cartesian).unwrap();
        assert_eq!(t.t_size(2), Some(4));
        assert_eq!(t.eta(2, 0), 1);
        assert_eq!(t.eta(2, 1), 2);
        let t3 = Monad::vector_space(3, BaseKind::Cartesian).unwrap();
        assert_eq!(t3.eta(2, 1), 3);
        assert_eq!(t3.vadd(5, 5, 2), 7); // (2,1)+(2,1) = (1,2) = 1 + 2*3
    }

    #[test]
    fn non_prime_rejected() {
        assert!(Monad::vector_space(4, BaseKind::Cartesian).is_err());
        assert!(Monad::from_name("multiset", None, BaseKind::Cartesian).is_err());
    }

    #[test]
    fn cocartesian_kappa_is_copairing() {
        let t = Monad::powerset(BaseKind::Cocartesian);
        // TX + TY with |X| = 2, |Y| = 1: the element inr({y}) has index 4 + 1.
        assert_eq!(t.kappa(2, 1, 5), 0b100);
        assert_eq!(t.kappa(2, 1, 3), 0b011);
    }

    #[test]
    fn bind_matches_mu_after_map() {
        let t = Monad::vector_space(3, BaseKind::Cartesian).unwrap();
        let f = |i: usize| [4usize, 2][i]; // Kleisli map 2 -> T(2)
        for v in 0..9 {
            let tf = t.t_map(2, v, |i| f(i), 9);
            assert_eq!(t.bind(2, v, f, 2), t.mu(2, tf));
        }
    }
}
