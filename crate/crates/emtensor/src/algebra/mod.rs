//! Eilenberg–Moore algebras over a builtin monad.
//!
//! Every algebra is stored through a presentation: a set Y, a surjective
//! homomorphism `class_of: T(Y) -> A` from the free algebra, and a chosen
//! preimage for each element. The structure map is then
//! `a(t) = class_of(μ·T(reps)(t))`. Algebras given by a table T(A) -> A use
//! Y = A and `reps = η`. Free algebras use the identity presentation, and
//! quotients (coequalizers, tensor products) keep the presentation of the
//! algebra they were cut out of, so carriers far larger than the guard on
//! T(carrier) stay usable.

mod checks;
mod coeq;

pub use checks::{enumerate_algebras, CheckMode};
pub use coeq::{coequalizer_em, congruence_closure, quotient_algebra, verify_coequalizer_universal, GeneratorPairs};

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{precondition, Result};
use crate::finset::FinSet;
use crate::monad::{Monad, OpKind, Operation, TElem};

#[derive(Clone)]
pub struct Algebra {
    pub carrier: FinSet,
    /// Size of the presenting set Y.
    pub pres: usize,
    /// T(Y) -> carrier.
    pub class_of: Arc<Vec<u32>>,
    /// carrier -> T(Y), a preimage of each element.
    pub reps: Arc<Vec<TElem>>,
    /// A generating set of carrier elements.
    pub gens: Vec<usize>,
    /// carrier -> T(gens): each element as a term in the generators.
    pub decomp: Arc<Vec<TElem>>,
    /// `Some(n)` for the free algebra (T(n), μ_n) with its identity presentation.
    pub free: Option<usize>,
    pub fingerprint: u64,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(|A| = {}, |Y| = {}, gens = {:?})", self.size(), self.pres, self.gens)
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.carrier == other.carrier && self.pres == other.pres && self.class_of == other.class_of
    }
}

/// Carriers above this size keep their presenting generators rather than a minimized set.
const MINIMIZE_LIMIT: usize = 256;

fn fingerprint(n: usize, pres: usize, class_of: &[u32]) -> u64 {
    let mut h = DefaultHasher::new();
    (n, pres, class_of).hash(&mut h);
    h.finish()
}

impl Algebra {
    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// The algebra with structure table T(A) -> A.
    pub fn from_table(m: &Monad, carrier: FinSet, table: Vec<usize>) -> Result<Algebra> {
        let n = carrier.size();
        let tn = m.t_count(n)?;
        if table.len() != tn {
            return Err(precondition(format!("structure table has {} entries, T(A) has {tn}", table.len())));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= n) {
            return Err(precondition(format!("structure value {bad} is outside the carrier")));
        }
        let class_of: Vec<u32> = table.iter().map(|&v| v as u32).collect();
        let reps: Vec<TElem> = (0..n).map(|x| m.eta(n, x)).collect();
        Ok(Algebra::assemble(m, carrier, n, class_of, reps, None, (0..n).collect()))
    }

    /// The free algebra (T(X), μ_X).
    pub fn free(m: &Monad, x: &FinSet) -> Result<Algebra> {
        let n = x.size();
        let tn = m.t_count(n)?;
        let carrier = m.t_set(x)?;
        let class_of: Vec<u32> = (0..tn as u32).collect();
        let gens: Vec<usize> = (0..n).map(|i| m.eta(n, i)).collect();
        Ok(Algebra {
            carrier,
            pres: n,
            fingerprint: fingerprint(tn, n, &class_of),
            class_of: Arc::new(class_of),
            reps: Arc::new((0..tn).collect()),
            gens,
            decomp: Arc::new((0..tn).collect()),
            free: Some(n),
        })
    }

    /// The algebra presented by `class_of: T(Y) -> 0..count`, carrier labelled by least representatives.
    pub fn from_presentation(m: &Monad, y: &FinSet, class_of: Vec<u32>, count: usize) -> Result<Algebra> {
        let mut reps = vec![usize::MAX; count];
        for (t, &c) in class_of.iter().enumerate().rev() {
            reps[c as usize] = t;
        }
        let carrier = FinSet::subset(&m.t_set(y)?, reps.iter().map(|&t| t as u64).collect());
        let candidates: Vec<usize> = (0..y.size()).map(|i| class_of[m.eta(y.size(), i)] as usize).collect();
        Ok(Algebra::assemble(m, carrier, y.size(), class_of, reps, None, candidates))
    }

    /// Builds the algebra and its generator system from candidate generators.
    pub(crate) fn assemble(
        m: &Monad,
        carrier: FinSet,
        pres: usize,
        class_of: Vec<u32>,
        reps: Vec<TElem>,
        free: Option<usize>,
        mut candidates: Vec<usize>,
    ) -> Algebra {
        candidates.sort_unstable();
        candidates.dedup();
        let n = carrier.size();
        let mut alg = Algebra {
            fingerprint: fingerprint(n, pres, &class_of),
            carrier,
            pres,
            class_of: Arc::new(class_of),
            reps: Arc::new(reps),
            gens: vec![],
            decomp: Arc::new(vec![]),
            free,
        };
        let (gens, decomp) = alg.generator_system(m, candidates);
        alg.gens = gens;
        alg.decomp = Arc::new(decomp);
        alg
    }

    /// `t` over an n-element set evaluated at `f`: the structure applied to T(f)(t).
    pub fn eval(&self, m: &Monad, n: usize, t: TElem, f: impl Fn(usize) -> usize) -> usize {
        self.class_of[m.bind(n, t, |i| self.reps[f(i)], self.pres)] as usize
    }

    /// The structure map a: T(A) -> A at t.
    pub fn act(&self, m: &Monad, t: TElem) -> usize {
        self.eval(m, self.size(), t, |x| x)
    }

    pub fn apply_op(&self, m: &Monad, op: &Operation, args: &[usize]) -> usize {
        self.eval(m, op.arity, op.elem, |i| args[i])
    }

    /// Unary polynomials whose closure gives congruences: unary operations and
    /// translations by generators under the binary ones.
    pub fn polys(&self, m: &Monad) -> Vec<Box<dyn Fn(usize) -> usize + '_>> {
        let mut out: Vec<Box<dyn Fn(usize) -> usize + '_>> = Vec::new();
        for op in m.signature() {
            match op.kind {
                OpKind::Constant => {}
                OpKind::Unary => {
                    let m = m.clone();
                    out.push(Box::new(move |x| self.apply_op(&m, &op, &[x])));
                }
                OpKind::Binary => {
                    for &g in &self.gens {
                        let (m, op) = (m.clone(), op.clone());
                        out.push(Box::new(move |x| self.apply_op(&m, &op, &[x, g])));
                    }
                }
            }
        }
        out
    }

    /// Subalgebra generated by `gens`, with each reached element's term over T(gens).
    pub fn closure_terms(&self, m: &Monad, gens: &[usize]) -> Vec<Option<TElem>> {
        let k = gens.len();
        let mut term: Vec<Option<TElem>> = vec![None; self.size()];
        let mut order: Vec<usize> = Vec::new();
        let push = |x: usize, t: TElem, term: &mut Vec<Option<TElem>>, order: &mut Vec<usize>| {
            if term[x].is_none() {
                term[x] = Some(t);
                order.push(x);
            }
        };
        for (i, &g) in gens.iter().enumerate() {
            push(g, m.eta(k, i), &mut term, &mut order);
        }
        let sig = m.signature();
        for op in sig.iter().filter(|o| o.kind == OpKind::Constant) {
            let x = self.apply_op(m, op, &[]);
            push(x, m.bind(0, op.elem, |_| 0, k), &mut term, &mut order);
        }
        let mut next = 0;
        while next < order.len() {
            let x = order[next];
            let tx = term[x].unwrap();
            next += 1;
            for op in &sig {
                match op.kind {
                    OpKind::Constant => {}
                    OpKind::Unary => {
                        let y = self.apply_op(m, op, &[x]);
                        push(y, m.bind(1, op.elem, |_| tx, k), &mut term, &mut order);
                    }
                    // The binary operations are associative and commutative, so translating
                    // by generators reaches the same subalgebra as all pairs.
                    OpKind::Binary => {
                        for (j, &z) in gens.iter().enumerate() {
                            let tz = m.eta(k, j);
                            let y = self.apply_op(m, op, &[x, z]);
                            push(y, m.bind(2, op.elem, |i| if i == 0 { tx } else { tz }, k), &mut term, &mut order);
                        }
                    }
                }
            }
        }
        term
    }

    /// Greedy irredundant generating subset of the candidates, with decompositions.
    /// Falls back to all elements with decomposition η if the terms do not evaluate back.
    fn generator_system(&self, m: &Monad, candidates: Vec<usize>) -> (Vec<usize>, Vec<TElem>) {
        let n = self.size();
        let generates = |gens: &[usize]| -> Option<Vec<TElem>> {
            if !m.t_encodable(gens.len()) {
                return None;
            }
            self.closure_terms(m, gens).into_iter().collect()
        };
        let mut gens = candidates;
        let mut decomp = match generates(&gens) {
            Some(d) => d,
            None => return self.trivial_system(m),
        };
        if n <= MINIMIZE_LIMIT {
            let mut i = 0;
            while i < gens.len() {
                let mut trial = gens.clone();
                trial.remove(i);
                match generates(&trial) {
                    Some(d) => {
                        gens = trial;
                        decomp = d;
                    }
                    None => i += 1,
                }
            }
        }
        let k = gens.len();
        let sound = (0..n).all(|x| self.eval(m, k, decomp[x], |i| gens[i]) == x);
        if sound {
            (gens, decomp)
        } else {
            self.trivial_system(m)
        }
    }

    fn trivial_system(&self, m: &Monad) -> (Vec<usize>, Vec<TElem>) {
        let n = self.size();
        ((0..n).collect(), (0..n).map(|x| m.eta(n, x)).collect())
    }

    /// The structure table T(A) -> A, if T(A) is within the guard.
    pub fn table(&self, m: &Monad) -> Result<Vec<usize>> {
        let tn = m.t_count(self.size())?;
        Ok((0..tn).map(|t| self.act(m, t)).collect())
    }

    /// Whether h: self -> b is a homomorphism; the witness names the first failure.
    pub fn hom_witness(&self, m: &Monad, b: &Algebra, h: &[usize]) -> Option<String> {
        if h.len() != self.size() || h.iter().any(|&v| v >= b.size()) {
            return Some("map is not a total function into the codomain".into());
        }
        let sig = m.signature();
        let sig_cost: usize = sig.iter().map(|op| self.size().saturating_pow(op.arity as u32)).sum();
        let t_cost = m.t_size(self.pres).unwrap_or(usize::MAX);
        if t_cost <= m.guard && (t_cost <= 4096 || t_cost <= sig_cost) {
            // h·class_of = b·T(h·class_of·η) on the presenting free algebra.
            let on_y: Vec<usize> = (0..self.pres).map(|y| h[self.class_of[m.eta(self.pres, y)] as usize]).collect();
            for t in 0..t_cost {
                let lhs = h[self.class_of[t] as usize];
                let rhs = b.eval(m, self.pres, t, |y| on_y[y]);
                if lhs != rhs {
                    return Some(format!("presenting element {t}: h(a(t)) = {lhs}, b(Th(t)) = {rhs}"));
                }
            }
            return None;
        }
        for op in &sig {
            let n = self.size();
            let tuples = n.pow(op.arity as u32);
            for code in 0..tuples {
                let args: Vec<usize> = (0..op.arity).map(|i| code / n.pow(i as u32) % n).collect();
                let lhs = h[self.apply_op(m, op, &args)];
                let himg: Vec<usize> = args.iter().map(|&x| h[x]).collect();
                let rhs = b.apply_op(m, op, &himg);
                if lhs != rhs {
                    return Some(format!("{}{:?}: {lhs} vs {rhs}", op.name, args));
                }
            }
        }
        None
    }

    pub fn is_hom(&self, m: &Monad, b: &Algebra, h: &[usize]) -> bool {
        self.hom_witness(m, b, h).is_none()
    }

    /// The map determined by values on the generators.
    pub fn extend(&self, m: &Monad, b: &Algebra, vals: &[usize]) -> Vec<usize> {
        let k = self.gens.len();
        (0..self.size()).map(|x| b.eval(m, k, self.decomp[x], |i| vals[i])).collect()
    }

    /// All homomorphisms self -> b, by extension from the generators, in lexicographic table order.
    pub fn enumerate_homs(&self, m: &Monad, b: &Algebra) -> Result<Vec<Vec<usize>>> {
        let k = self.gens.len();
        let count = (b.size() as f64).powi(k as i32);
        if count > m.budget as f64 {
            return Err(crate::error::resource(format!(
                "{} candidate assignments on {k} generators exceed the budget {}",
                count, m.budget
            )));
        }
        let mut out = Vec::new();
        for vals in crate::monad::all_maps(k, b.size()) {
            let h = self.extend(m, b, &vals);
            if self.is_hom(m, b, &h) {
                out.push(h);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// All homomorphisms by testing every map carrier -> carrier; an oracle for `enumerate_homs`.
    pub fn enumerate_homs_brute(&self, m: &Monad, b: &Algebra) -> Result<Vec<Vec<usize>>> {
        let count = (b.size() as f64).powi(self.size() as i32);
        if count > m.budget as f64 {
            return Err(crate::error::resource(format!("{count} candidate maps exceed the budget {}", m.budget)));
        }
        Ok(crate::monad::all_maps(self.size(), b.size()).into_iter().filter(|h| self.is_hom(m, b, h)).collect())
    }

    /// Carrier labels; convenient for reports.
    pub fn labels(&self) -> Vec<String> {
        self.carrier.labels()
    }
}
