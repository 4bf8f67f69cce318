//! Monad laws, the monoidal conditions (1)–(5), and preservation of reflexive coequalizers.

use super::{Monad, MonadKind, TElem};
use crate::congruence::UnionFind;
use crate::error::{precondition, resource, Result};
use crate::finset::{map_part, Part};
use crate::report::{Check, Report};

/// Replacement for μ_X, as (|X|, element of TTX) -> element of TX.
pub type MuFn<'a> = &'a dyn Fn(usize, TElem) -> TElem;
/// Replacement for κ_{X,Y}, as (|X|, |Y|, split element of TX⊗TY) -> element of T(X⊗Y).
pub type KappaFn<'a> = &'a dyn Fn(usize, usize, Part) -> TElem;

/// A parallel pair f, g: P -> B of finite maps.
#[derive(Clone, Debug)]
pub struct Fork {
    pub p: usize,
    pub b: usize,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

impl Fork {
    /// A common section s: B -> P with f·s = g·s = 1, if one exists.
    pub fn section(&self) -> Option<Vec<usize>> {
        (0..self.b)
            .map(|b| (0..self.p).find(|&p| self.f[p] == b && self.g[p] == b))
            .collect()
    }

    /// The set coequalizer B -> Q as (class table, |Q|).
    pub fn coequalizer(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.b);
        for p in 0..self.p {
            uf.union(self.f[p], self.g[p]);
        }
        uf.classes()
    }
}

impl Monad {
    /// Σ c_i·e_i in T(k), the element with the given coefficients.
    pub(crate) fn from_coeffs(&self, coeffs: &[usize]) -> TElem {
        match self.kind {
            MonadKind::Identity => coeffs.iter().position(|&c| c != 0).expect("identity monad needs one point"),
            MonadKind::Powerset => coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| 1usize << i).sum(),
            MonadKind::VectorSpace { .. } => {
                let k = coeffs.len();
                coeffs.iter().enumerate().fold(0, |acc, (i, &c)| self.vadd(acc, self.vbasis(i, c), k))
            }
        }
    }

    /// Σ c_i·t_i in T(m).
    pub(crate) fn combine(&self, m: usize, terms: &[(TElem, usize)]) -> TElem {
        let coeffs: Vec<usize> = terms.iter().map(|&(_, c)| c).collect();
        let t = self.from_coeffs(&coeffs);
        self.bind(terms.len(), t, |i| terms[i].0, m)
    }

    fn nonzero_coeffs(&self) -> Vec<usize> {
        match self.kind {
            MonadKind::VectorSpace { p } => (1..p as usize).collect(),
            _ => vec![1],
        }
    }

    /// Small deterministic family of endomaps of an n-element set used for naturality checks.
    fn sample_maps(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        vec![vec![0; n], (0..n).map(|i| (i + 1) % n).collect(), (0..n).map(|i| i / 2).collect()]
    }

    pub fn check_monad_laws(&self, n: usize) -> Result<Report> {
        self.check_monad_laws_with(n, &|n, tt| self.mu(n, tt))
    }

    /// Unit and associativity laws at a carrier of size n, with μ replaced by `mu`.
    pub fn check_monad_laws_with(&self, n: usize, mu: MuFn) -> Result<Report> {
        let tn = self.t_count(n)?;
        let ttn = self.t_count(tn)?;
        let mut r = Report::new();
        r.elementwise("μ·Tη = 1", tn as u64, |t| {
            let t = t as usize;
            let lhs = mu(n, self.t_map(n, t, |x| self.eta(n, x), tn));
            (lhs != t).then(|| format!("t = {t}: μ·Tη(t) = {lhs}"))
        });
        r.elementwise("μ·ηT = 1", tn as u64, |t| {
            let t = t as usize;
            let lhs = mu(n, self.eta(tn, t));
            (lhs != t).then(|| format!("t = {t}: μ·η(t) = {lhs}"))
        });
        match self.t_size(ttn).filter(|&s| s <= self.guard) {
            Some(tttn) => r.elementwise("μ·Tμ = μ·μT", tttn as u64, |w| {
                let w = w as usize;
                let lhs = mu(n, self.t_map(ttn, w, |v| mu(n, v), tn));
                let rhs = mu(n, mu(tn, w));
                (lhs != rhs).then(|| format!("ω = {w}: {lhs} vs {rhs}"))
            }),
            None => {
                // TTTX is beyond the guard: check the elements supported on at most two points.
                let coeffs = self.nonzero_coeffs();
                let work = (ttn as u64) * (ttn as u64 + 1) / 2 * (coeffs.len() * coeffs.len()) as u64;
                if work > self.budget {
                    return Err(resource(format!("{work} two-point elements of TTTX exceed the budget {}", self.budget)));
                }
                let mut checked = 0u64;
                let mut failure = None;
                'outer: for w1 in 0..ttn {
                    for w2 in w1..ttn {
                        for &c1 in &coeffs {
                            for &c2 in &coeffs {
                                let terms: Vec<(TElem, usize)> =
                                    if w1 == w2 { vec![(w1, c1)] } else { vec![(w1, c1), (w2, c2)] };
                                let lifted: Vec<(TElem, usize)> =
                                    terms.iter().map(|&(w, c)| (self.eta(tn, mu(n, w)), c)).collect();
                                let lhs = mu(n, self.combine(tn, &lifted));
                                let rhs = mu(n, self.combine(tn, &terms));
                                checked += 1;
                                if lhs != rhs {
                                    failure = Some(format!("ω = {terms:?}: {lhs} vs {rhs}"));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                let name = "μ·Tμ = μ·μT (TTTX elements supported on ≤ 2 points)";
                r.push(match failure {
                    None => Check::pass(name, checked),
                    Some(w) => Check::fail(name, checked, w),
                });
            }
        }
        for f in Self::sample_maps(n) {
            r.elementwise(format!("η natural along {f:?}"), n as u64, |x| {
                let x = x as usize;
                let lhs = self.t_map(n, self.eta(n, x), |i| f[i], n);
                (lhs != self.eta(n, f[x])).then(|| format!("x = {x}"))
            });
            r.elementwise(format!("μ natural along {f:?}"), ttn as u64, |w| {
                let w = w as usize;
                let lhs = self.t_map(n, mu(n, w), |i| f[i], n);
                let rhs = mu(n, self.t_map(tn, w, |t| self.t_map(n, t, |i| f[i], n), tn));
                (lhs != rhs).then(|| format!("ω = {w}: {lhs} vs {rhs}"))
            });
        }
        Ok(r)
    }

    pub fn check_monoidal_laws(&self, sizes: (usize, usize, usize)) -> Result<Report> {
        self.check_monoidal_laws_with(sizes, &|nx, ny, part| self.kappa_part(nx, ny, part))
    }

    /// Conditions (1)–(5) and naturality of κ at |X|, |Y|, |Z|, with κ replaced by `kappa`.
    pub fn check_monoidal_laws_with(&self, (nx, ny, nz): (usize, usize, usize), kappa: KappaFn) -> Result<Report> {
        let base = self.base;
        let (tx, ty, tz) = (self.t_count(nx)?, self.t_count(ny)?, self.t_count(nz)?);
        let ne = self.e_size();
        let kw = |nx: usize, ny: usize, w: usize| {
            let (tx, ty) = (self.t_size(nx).unwrap(), self.t_size(ny).unwrap());
            kappa(nx, ny, base.split(tx, ty, w))
        };
        let within = |what: &str, s: usize| {
            if s <= self.guard {
                Ok(s)
            } else {
                Err(resource(format!("{what} has {s} elements, above the guard {}", self.guard)))
            }
        };
        let mut r = Report::new();

        // (1) associativity
        let (nxy, nyz) = (base.size(nx, ny), base.size(ny, nz));
        let nxyz = base.size(nxy, nz);
        let (txy, tyz) = (base.size(tx, ty), base.size(ty, tz));
        let dom1 = within("(TX⊗TY)⊗TZ", base.size(txy, tz))?;
        r.elementwise("(1) Tα·κ·(κ⊗1) = κ·(1⊗κ)·α", dom1 as u64, |z| {
            let z = z as usize;
            let left = map_part(base.split(txy, tz, z), |w| kw(nx, ny, w), |c| c);
            let lhs = self.t_map(nxyz, kappa(nxy, nz, left), |v| base.alpha_elem(nx, ny, nz, v), nxyz);
            let za = base.alpha_elem(tx, ty, tz, z);
            let right = map_part(base.split(tx, tyz, za), |a| a, |w| kw(ny, nz, w));
            let rhs = kappa(nx, nyz, right);
            (lhs != rhs).then(|| format!("element {z} of (TX⊗TY)⊗TZ: {lhs} vs {rhs}"))
        });

        // (2) unit compatibility
        r.elementwise("(2) Tλ·κ·(η⊗1) = λ", base.size(ne, tx) as u64, |z| {
            let z = z as usize;
            let part = map_part(base.split(ne, tx, z), |e| self.eta(ne, e), |t| t);
            let lhs = self.t_map(base.size(ne, nx), kappa(ne, nx, part), |v| base.lambda_elem(nx, v), nx);
            let rhs = base.lambda_elem(tx, z);
            (lhs != rhs).then(|| format!("element {z} of E⊗TX: {lhs} vs {rhs}"))
        });
        r.elementwise("(2) Tρ·κ·(1⊗η) = ρ", base.size(tx, ne) as u64, |z| {
            let z = z as usize;
            let part = map_part(base.split(tx, ne, z), |t| t, |e| self.eta(ne, e));
            let lhs = self.t_map(base.size(nx, ne), kappa(nx, ne, part), |v| base.rho_elem(nx, v), nx);
            let rhs = base.rho_elem(tx, z);
            (lhs != rhs).then(|| format!("element {z} of TX⊗E: {lhs} vs {rhs}"))
        });

        // (3) multiplication compatibility
        let (ttx, tty) = (self.t_count(tx)?, self.t_count(ty)?);
        let dom3 = within("TTX⊗TTY", base.size(ttx, tty))?;
        let wide = self.t_encodable(txy);
        r.elementwise("(3) μ·Tκ·κ = κ·(μ⊗μ)", dom3 as u64, |z| {
            let z = z as usize;
            let part = base.split(ttx, tty, z);
            let lhs = if wide {
                let inner = kappa(tx, ty, part);
                self.bind(txy, inner, |w| kw(nx, ny, w), nxy)
            } else {
                match part {
                    Part::Pair(u, v) => self.bind(
                        tx,
                        u,
                        |a| self.bind(ty, v, |b| kappa(nx, ny, Part::Pair(a, b)), nxy),
                        nxy,
                    ),
                    Part::Inl(u) => self.bind(tx, u, |a| kappa(nx, ny, Part::Inl(a)), nxy),
                    Part::Inr(v) => self.bind(ty, v, |b| kappa(nx, ny, Part::Inr(b)), nxy),
                }
            };
            let rhs = kappa(nx, ny, map_part(part, |u| self.mu(nx, u), |v| self.mu(ny, v)));
            (lhs != rhs).then(|| format!("element {z} of TTX⊗TTY: {lhs} vs {rhs}"))
        });

        // (4) unit of the monad
        r.elementwise("(4) κ·(η⊗η) = η", nxy as u64, |z| {
            let z = z as usize;
            let lhs = kappa(nx, ny, map_part(base.split(nx, ny, z), |x| self.eta(nx, x), |y| self.eta(ny, y)));
            let rhs = self.eta(nxy, z);
            (lhs != rhs).then(|| format!("element {z} of X⊗Y: {lhs} vs {rhs}"))
        });

        // (5) symmetry
        r.elementwise("(5) κ·σ = Tσ·κ", txy as u64, |w| {
            let w = w as usize;
            let lhs = kw(ny, nx, base.sigma_elem(tx, ty, w));
            let rhs = self.t_map(nxy, kw(nx, ny, w), |v| base.sigma_elem(nx, ny, v), base.size(ny, nx));
            (lhs != rhs).then(|| format!("element {w} of TX⊗TY: {lhs} vs {rhs}"))
        });

        for f in Self::sample_maps(nx) {
            for g in Self::sample_maps(ny) {
                r.elementwise(format!("κ natural along {f:?} ⊗ {g:?}"), txy as u64, |w| {
                    let w = w as usize;
                    let lhs = self.t_map(nxy, kw(nx, ny, w), |v| base.map_elem((nx, ny), (nx, ny), |i| f[i], |j| g[j], v), nxy);
                    let part = map_part(
                        base.split(tx, ty, w),
                        |u| self.t_map(nx, u, |i| f[i], nx),
                        |v| self.t_map(ny, v, |j| g[j], ny),
                    );
                    let rhs = kappa(nx, ny, part);
                    (lhs != rhs).then(|| format!("element {w} of TX⊗TY: {lhs} vs {rhs}"))
                });
            }
        }
        Ok(r)
    }

    /// Applies T(X⊗−) to a fork and checks the image is a coequalizer of finite sets.
    pub fn check_preserves_reflexive_coeq(&self, nx: usize, fork: &Fork, require_reflexive: bool) -> Result<Report> {
        if fork.f.len() != fork.p || fork.g.len() != fork.p || fork.f.iter().chain(&fork.g).any(|&b| b >= fork.b) {
            return Err(precondition("fork maps must be total functions P -> B"));
        }
        if require_reflexive && fork.section().is_none() {
            return Err(precondition("the pair is not reflexive: no common section B -> P"));
        }
        let base = self.base;
        let (cls, nq) = fork.coequalizer();
        let (nxp, nxb, nxq) = (base.size(nx, fork.p), base.size(nx, fork.b), base.size(nx, nq));
        let (tp, tb, tq) = (self.t_count(nxp)?, self.t_count(nxb)?, self.t_count(nxq)?);
        let lift = |h: &dyn Fn(usize) -> usize, src: usize, dst: usize, t: TElem, n: usize| {
            self.t_map(n, t, |z| base.map_elem((nx, src), (nx, dst), |x| x, h, z), base.size(nx, dst))
        };
        let mut uf = UnionFind::new(tb);
        for t in 0..tp {
            let a = lift(&|p| fork.f[p], fork.p, fork.b, t, nxp);
            let b = lift(&|p| fork.g[p], fork.p, fork.b, t, nxp);
            uf.union(a, b);
        }
        let image: Vec<usize> = (0..tb).map(|t| lift(&|b| cls[b], fork.b, nq, t, nxb)).collect();
        let mut r = Report::new();
        let mut hit = vec![false; tq];
        image.iter().for_each(|&i| hit[i] = true);
        r.push(match hit.iter().position(|&h| !h) {
            None => Check::pass("T(X⊗c) surjective", tq as u64),
            Some(i) => Check::fail("T(X⊗c) surjective", tq as u64, format!("element {i} of T(X⊗Q) not hit")),
        });
        let mut root_of_image = vec![usize::MAX; tq];
        let mut failure = None;
        for t in 0..tb {
            let root = uf.find(t);
            let slot = &mut root_of_image[image[t]];
            if *slot == usize::MAX {
                *slot = root;
            } else if *slot != root {
                failure = Some(format!(
                    "elements {} and {t} of T(X⊗B) have equal images but are not identified by the fork",
                    *slot
                ));
                break;
            }
        }
        // Identified elements always share an image because c coequalizes f and g.
        r.push(match failure {
            None => Check::pass("T(X⊗−) image is a coequalizer", tb as u64),
            Some(w) => Check::fail("T(X⊗−) image is a coequalizer", tb as u64, format!("not a coequalizer: {w}")),
        });
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::BaseKind;

    #[test]
    fn corrupted_mu_is_caught() {
        let t = Monad::powerset(BaseKind::Cartesian);
        let bad = |n: usize, tt: TElem| if n == 2 && tt == 0b0110 { 0b01 } else { t.mu(n, tt) };
        let r = t.check_monad_laws_with(2, &bad).unwrap();
        let f = r.first_failure().expect("corruption must be detected");
        assert!(f.witness.is_some());
    }

    #[test]
    fn reflexive_quotient_preserved_by_powerset() {
        let t = Monad::powerset(BaseKind::Cartesian);
        // B = {0,1,2}, P = B + {p}, f(p) = 0, g(p) = 1, identity on B.
        let fork = Fork { p: 4, b: 3, f: vec![0, 1, 2, 0], g: vec![0, 1, 2, 1] };
        let r = t.check_preserves_reflexive_coeq(1, &fork, true).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn non_reflexive_fork_is_not_preserved() {
        let t = Monad::powerset(BaseKind::Cartesian);
        let fork = Fork { p: 1, b: 2, f: vec![0], g: vec![1] };
        assert!(t.check_preserves_reflexive_coeq(1, &fork, true).is_err());
        let r = t.check_preserves_reflexive_coeq(1, &fork, false).unwrap();
        let f = r.first_failure().unwrap();
        assert!(f.witness.as_ref().unwrap().contains("not a coequalizer"));
    }
}
