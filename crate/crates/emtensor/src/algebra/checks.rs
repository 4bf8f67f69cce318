//! Algebra law checks and brute-force enumeration of small algebras.

use super::Algebra;
use crate::error::{resource, Result};
use crate::finset::FinSet;
use crate::monad::{all_maps, Monad, MonadKind, TElem};
use crate::report::Report;

/// How `check_algebra` verified the laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Unit and associativity laws elementwise on A and T(T(A)).
    Literal,
    /// Table algebra too large for T(T(A)): the signature axioms plus a = fold.
    Presentation,
    /// Presented algebra: the kernel of T(Y) -> A is a congruence.
    QuotientSoundness,
}

impl Algebra {
    fn is_table(&self, m: &Monad) -> bool {
        self.pres == self.size() && (0..self.size()).all(|x| self.reps[x] == m.eta(self.pres, x))
    }

    pub fn check_mode(&self, m: &Monad) -> CheckMode {
        let n = self.size();
        let literal = m.t_size(n).and_then(|tn| m.t_size(tn)).is_some_and(|s| s <= m.guard);
        if literal {
            CheckMode::Literal
        } else if self.is_table(m) {
            CheckMode::Presentation
        } else {
            CheckMode::QuotientSoundness
        }
    }

    /// Verifies the algebra laws, choosing the mode from the carrier size.
    pub fn check(&self, m: &Monad) -> Result<Report> {
        let mut r = Report::new();
        let n = self.size();
        match self.check_mode(m) {
            CheckMode::Literal => {
                let tn = m.t_count(n)?;
                let ttn = m.t_count(tn)?;
                let table = self.table(m)?;
                r.elementwise("a·η = 1", n as u64, |x| {
                    let x = x as usize;
                    let v = table[m.eta(n, x)];
                    (v != x).then(|| format!("a(η({})) = {}", self.carrier.label(x), self.carrier.label(v)))
                });
                r.elementwise("a·Ta = a·μ", ttn as u64, |w| {
                    let w = w as usize;
                    let lhs = table[m.t_map(tn, w, |t| table[t], n)];
                    let rhs = table[m.mu(n, w)];
                    (lhs != rhs).then(|| format!("element {w} of TTA: {lhs} vs {rhs}"))
                });
            }
            CheckMode::Presentation => self.check_presentation(m, &mut r)?,
            CheckMode::QuotientSoundness => {
                let ty = m.t_count(self.pres)?;
                r.elementwise("representatives map to their class", n as u64, |x| {
                    let x = x as usize;
                    (self.class_of[self.reps[x]] as usize != x).then(|| format!("element {x}"))
                });
                let polys = m.free_polys(self.pres);
                r.elementwise("kernel of T(Y) -> A is a congruence", ty as u64, |t| {
                    let t = t as usize;
                    let rep = self.reps[self.class_of[t] as usize];
                    for &p in &polys {
                        let (a, b) = (m.apply_poly(self.pres, p, t), m.apply_poly(self.pres, p, rep));
                        if self.class_of[a] != self.class_of[b] {
                            return Some(format!("T(Y) elements {t} ~ {rep} separated by {p:?}"));
                        }
                    }
                    None
                });
            }
        }
        Ok(r)
    }

    /// Operation axioms of the signature and agreement of the table with iterated operations.
    fn check_presentation(&self, m: &Monad, r: &mut Report) -> Result<()> {
        let n = self.size();
        let tn = m.t_count(n)?;
        let table = self.table(m)?;
        let a = |t: TElem| table[t];
        match m.kind {
            MonadKind::Identity => {
                r.elementwise("a = 1", n as u64, |x| (a(x as usize) != x as usize).then(|| format!("element {x}")));
            }
            MonadKind::Powerset => {
                let bot = a(0);
                let join = |x: usize, y: usize| a((1 << x) | (1 << y));
                triples(r, "join associative", n, |x, y, z| join(join(x, y), z) == join(x, join(y, z)));
                triples(r, "join commutative, idempotent, unit ⊥", n, |x, y, _| {
                    join(x, y) == join(y, x) && join(x, x) == x && join(bot, x) == x
                });
                r.elementwise("a(S) = ⋁S", tn as u64, |t| {
                    let t = t as usize;
                    let fold = (0..n).filter(|&i| (t >> i) & 1 == 1).fold(bot, join);
                    (fold != a(t)).then(|| format!("S = {t}: a(S) = {}, fold = {fold}", a(t)))
                });
            }
            MonadKind::VectorSpace { p } => {
                let p = p as usize;
                let zero = a(0);
                let scale = |c: usize, x: usize| a(m.vbasis(x, c % p));
                let add = |x: usize, y: usize| a(m.vadd(m.vbasis(x, 1), m.vbasis(y, 1), n));
                triples(r, "addition associative", n, |x, y, z| add(add(x, y), z) == add(x, add(y, z)));
                triples(r, "abelian group with inverses", n, |x, y, _| {
                    add(x, y) == add(y, x) && add(zero, x) == x && add(x, scale(p - 1, x)) == zero
                });
                triples(r, "scalar axioms", n, |x, y, _| {
                    (0..p).all(|c| {
                        (0..p).all(|d| {
                            scale(c, add(x, y)) == add(scale(c, x), scale(c, y))
                                && scale(c + d, x) == add(scale(c, x), scale(d, x))
                                && scale(c * d, x) == scale(c, scale(d, x))
                        })
                    }) && scale(1, x) == x
                });
                r.elementwise("a(v) = Σ v_i·i", tn as u64, |t| {
                    let t = t as usize;
                    let fold = m.support(n, t).into_iter().fold(zero, |acc, (i, c)| add(acc, scale(c, i)));
                    (fold != a(t)).then(|| format!("v = {t}: a(v) = {}, sum = {fold}", a(t)))
                });
            }
        }
        Ok(())
    }
}

fn triples(r: &mut Report, name: &str, n: usize, ok: impl Fn(usize, usize, usize) -> bool) {
    r.elementwise(name, (n * n * n) as u64, |c| {
        let c = c as usize;
        let (x, y, z) = (c / (n * n), c / n % n, c % n);
        (!ok(x, y, z)).then(|| format!("({x},{y},{z})"))
    });
}

/// Every algebra structure on {0,...,n-1}, by testing all tables with a·η = 1.
pub fn enumerate_algebras(m: &Monad, n: usize) -> Result<Vec<Algebra>> {
    let tn = m.t_count(n)?;
    let etas: Vec<TElem> = (0..n).map(|x| m.eta(n, x)).collect();
    let free: Vec<TElem> = (0..tn).filter(|t| !etas.contains(t)).collect();
    let count = (n as f64).powi(free.len() as i32);
    if count > m.budget as f64 {
        return Err(resource(format!("{count} candidate tables exceed the budget {}", m.budget)));
    }
    let carrier = FinSet::range(n);
    let mut out = Vec::new();
    for vals in all_maps(free.len(), n) {
        let mut table = vec![0; tn];
        for (x, &e) in etas.iter().enumerate() {
            table[e] = x;
        }
        for (i, &t) in free.iter().enumerate() {
            table[t] = vals[i];
        }
        let alg = Algebra::from_table(m, carrier.clone(), table)?;
        if alg.check(m)?.all_pass() {
            out.push(alg);
        }
    }
    Ok(out)
}
