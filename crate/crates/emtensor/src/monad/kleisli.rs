//! Kleisli maps, the Kleisli tensor, monad morphisms and their Kleisli functors.

use super::{Monad, MonadKind, TElem};
use crate::error::{precondition, Result};
use crate::finset::{map_part, Part};
use crate::report::Report;

/// A Kleisli map X -> T(Z), as a table of T-element encodings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleisliMap {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<TElem>,
}

/// All maps n -> m as tables, in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..m).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    if m == 0 && n > 0 {
        return vec![];
    }
    out
}

impl Monad {
    pub fn kleisli_unit(&self, n: usize) -> KleisliMap {
        KleisliMap { dom: n, cod: n, table: (0..n).map(|x| self.eta(n, x)).collect() }
    }

    /// The pure Kleisli map η·u.
    pub fn kleisli_pure(&self, u: &[usize], cod: usize) -> KleisliMap {
        KleisliMap { dom: u.len(), cod, table: u.iter().map(|&y| self.eta(cod, y)).collect() }
    }

    /// 1_{TX} read as a Kleisli map TX -> T(X).
    pub fn kleisli_counit(&self, n: usize) -> Result<KleisliMap> {
        let tn = self.t_count(n)?;
        Ok(KleisliMap { dom: tn, cod: n, table: (0..tn).collect() })
    }

    /// g ∘ f in the Kleisli category.
    pub fn kleisli_compose(&self, g: &KleisliMap, f: &KleisliMap) -> KleisliMap {
        KleisliMap {
            dom: f.dom,
            cod: g.cod,
            table: f.table.iter().map(|&t| self.bind(f.cod, t, |y| g.table[y], g.cod)).collect(),
        }
    }

    pub fn kleisli_tensor(&self, f: &KleisliMap, g: &KleisliMap) -> KleisliMap {
        self.kleisli_tensor_with(f, g, &|nx, ny, part| self.kappa_part(nx, ny, part))
    }

    /// κ_{Z,W}·(f⊗g) with a supplied κ.
    pub fn kleisli_tensor_with(&self, f: &KleisliMap, g: &KleisliMap, kappa: &dyn Fn(usize, usize, Part) -> TElem) -> KleisliMap {
        let base = self.base;
        let dom = base.size(f.dom, g.dom);
        let table = (0..dom)
            .map(|z| kappa(f.cod, g.cod, map_part(base.split(f.dom, g.dom, z), |x| f.table[x], |y| g.table[y])))
            .collect();
        KleisliMap { dom, cod: base.size(f.cod, g.cod), table }
    }

    /// κ_{X,Y} recovered as 1_{TX} ⊗_T 1_{TY}.
    pub fn kappa_from_kleisli(&self, nx: usize, ny: usize) -> Result<Vec<TElem>> {
        Ok(self.kleisli_tensor(&self.kleisli_counit(nx)?, &self.kleisli_counit(ny)?).table)
    }

    /// κ ↦ ⊗_T ↦ κ and ⊗_T ↦ κ ↦ ⊗_T on all sizes up to `max`.
    pub fn check_kleisli_roundtrip(&self, max: usize) -> Result<Report> {
        let base = self.base;
        let mut r = Report::new();
        for nx in 0..=max {
            for ny in 0..=max {
                let (tx, ty) = (self.t_count(nx)?, self.t_count(ny)?);
                let rebuilt = self.kappa_from_kleisli(nx, ny)?;
                r.elementwise(format!("κ rebuilt from ⊗_T at ({nx},{ny})"), rebuilt.len() as u64, |w| {
                    let w = w as usize;
                    let direct = self.kappa(nx, ny, w);
                    (rebuilt[w] != direct).then(|| format!("element {w}: {} vs {direct}", rebuilt[w]))
                });
                let table_kappa = |a: usize, b: usize, part: Part| {
                    if (a, b) == (nx, ny) {
                        rebuilt[base.join(tx, ty, part)]
                    } else {
                        self.kappa_part(a, b, part)
                    }
                };
                // ⊗_T rebuilt from the recovered κ agrees with the original on all small Kleisli maps.
                let fs: Vec<KleisliMap> = self.small_kleisli_maps(nx, nx)?;
                let gs: Vec<KleisliMap> = self.small_kleisli_maps(ny, ny)?;
                let mut checked = 0u64;
                let mut witness = None;
                'outer: for f in &fs {
                    for g in &gs {
                        checked += 1;
                        if self.kleisli_tensor(f, g) != self.kleisli_tensor_with(f, g, &table_kappa) {
                            witness = Some(format!("f = {:?}, g = {:?}", f.table, g.table));
                            break 'outer;
                        }
                    }
                }
                r.push(match witness {
                    None => crate::report::Check::pass(format!("⊗_T rebuilt at ({nx},{ny})"), checked),
                    Some(w) => crate::report::Check::fail(format!("⊗_T rebuilt at ({nx},{ny})"), checked, w),
                });
                // F_T is strict monoidal: η·u ⊗_T η·v = η·(u⊗v).
                let mut witness = None;
                let mut checked = 0u64;
                for u in all_maps(nx, nx) {
                    for v in all_maps(ny, ny) {
                        checked += 1;
                        let lhs = self.kleisli_tensor(&self.kleisli_pure(&u, nx), &self.kleisli_pure(&v, ny));
                        let uv: Vec<usize> = (0..base.size(nx, ny))
                            .map(|z| base.map_elem((nx, ny), (nx, ny), |x| u[x], |y| v[y], z))
                            .collect();
                        if lhs != self.kleisli_pure(&uv, base.size(nx, ny)) && witness.is_none() {
                            witness = Some(format!("u = {u:?}, v = {v:?}"));
                        }
                    }
                }
                let name = format!("F_T strict monoidal at ({nx},{ny})");
                r.push(match witness {
                    None => crate::report::Check::pass(name, checked),
                    Some(w) => crate::report::Check::fail(name, checked, w),
                });
            }
        }
        Ok(r)
    }

    /// Every Kleisli map n -> T(m) when there are at most 256 of them, else a fixed sample.
    fn small_kleisli_maps(&self, n: usize, m: usize) -> Result<Vec<KleisliMap>> {
        let tm = self.t_count(m)?;
        let tables = if (tm as f64).powi(n as i32) <= 256.0 {
            all_maps(n, tm)
        } else {
            (0..16).map(|s| (0..n).map(|x| (s * 7 + x * 13) % tm).collect()).collect()
        };
        Ok(tables.into_iter().map(|table| KleisliMap { dom: n, cod: m, table }).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    /// 1_T.
    Identity,
    /// η: Id -> T.
    Unit,
}

/// A monad morphism φ: S -> T between builtin monads over the same base.
#[derive(Clone, Debug)]
pub struct MonadMorphism {
    pub source: Monad,
    pub target: Monad,
    pub kind: MorphismKind,
    /// (|X|, element of SX, replacement value): a deliberately wrong component entry.
    pub corruption: Option<(usize, TElem, TElem)>,
}

impl MonadMorphism {
    pub fn identity(t: &Monad) -> MonadMorphism {
        MonadMorphism { source: t.clone(), target: t.clone(), kind: MorphismKind::Identity, corruption: None }
    }

    pub fn unit(t: &Monad) -> MonadMorphism {
        let source = Monad { kind: MonadKind::Identity, ..t.clone() };
        MonadMorphism { source, target: t.clone(), kind: MorphismKind::Unit, corruption: None }
    }

    pub fn corrupted(mut self, n: usize, at: TElem, value: TElem) -> MonadMorphism {
        self.corruption = Some((n, at, value));
        self
    }

    pub fn name(&self) -> String {
        match self.kind {
            MorphismKind::Identity => format!("1_{}", self.target.name()),
            MorphismKind::Unit => format!("η: identity -> {}", self.target.name()),
        }
    }

    /// φ_X(s) for s in S(X), |X| = n.
    pub fn apply(&self, n: usize, s: TElem) -> TElem {
        if let Some((cn, at, v)) = self.corruption {
            if cn == n && at == s {
                return v;
            }
        }
        match self.kind {
            MorphismKind::Identity => s,
            MorphismKind::Unit => self.target.eta(n, s),
        }
    }

    /// Naturality, unit and multiplication laws, and optionally the κ-square, on sizes up to `max`.
    pub fn check(&self, monoidal: bool, max: usize) -> Result<Report> {
        let (s, t) = (&self.source, &self.target);
        if s.base != t.base {
            return Err(precondition("monad morphism source and target must share the base"));
        }
        let base = s.base;
        let mut r = Report::new();
        for n in 0..=max {
            let sn = s.t_count(n)?;
            let tn = t.t_count(n)?;
            for m in 0..=max {
                for f in all_maps(n, m) {
                    r.elementwise(format!("φ natural along {f:?}: {n} -> {m}"), sn as u64, |x| {
                        let x = x as usize;
                        let lhs = self.apply(m, s.t_map(n, x, |i| f[i], m));
                        let rhs = t.t_map(n, self.apply(n, x), |i| f[i], m);
                        (lhs != rhs).then(|| format!("|X| = {n}, s = {x}: {lhs} vs {rhs}"))
                    });
                }
            }
            r.elementwise(format!("φ·η = η at |X| = {n}"), n as u64, |x| {
                let x = x as usize;
                let lhs = self.apply(n, s.eta(n, x));
                (lhs != t.eta(n, x)).then(|| format!("|X| = {n}, x = {x}: {lhs}"))
            });
            let ssn = s.t_count(sn)?;
            r.elementwise(format!("φ·ν = μ·φT·Sφ at |X| = {n}"), ssn as u64, |w| {
                let w = w as usize;
                let lhs = self.apply(n, s.mu(n, w));
                let sphi = s.t_map(sn, w, |x| self.apply(n, x), tn);
                let rhs = t.mu(n, self.apply(tn, sphi));
                (lhs != rhs).then(|| format!("|X| = {n}, ω = {w}: {lhs} vs {rhs}"))
            });
            if monoidal {
                for m in 0..=max {
                    let sm = s.t_count(m)?;
                    let nm = base.size(n, m);
                    r.elementwise(format!("φ·ι = κ·(φ⊗φ) at ({n},{m})"), base.size(sn, sm) as u64, |w| {
                        let w = w as usize;
                        let part = base.split(sn, sm, w);
                        let lhs = self.apply(nm, s.kappa_part(n, m, part));
                        let rhs = t.kappa_part(n, m, map_part(part, |x| self.apply(n, x), |y| self.apply(m, y)));
                        (lhs != rhs).then(|| format!("({n},{m}), element {w}: {lhs} vs {rhs}"))
                    });
                }
            }
        }
        Ok(r)
    }

    /// The Kleisli functor L: f ↦ φ·f.
    pub fn kleisli_functor(&self, f: &KleisliMap) -> KleisliMap {
        KleisliMap { dom: f.dom, cod: f.cod, table: f.table.iter().map(|&s| self.apply(f.cod, s)).collect() }
    }

    /// φ_X = L(1_{SX}), L preserves identities and composition, and L is strict monoidal.
    pub fn check_kleisli_functor(&self, max: usize) -> Result<Report> {
        let (s, t) = (&self.source, &self.target);
        let mut r = Report::new();
        for n in 0..=max {
            let sn = s.t_count(n)?;
            let l = self.kleisli_functor(&s.kleisli_counit(n)?);
            r.elementwise(format!("φ = L(1_SX) at |X| = {n}"), sn as u64, |x| {
                let x = x as usize;
                (l.table[x] != self.apply(n, x)).then(|| format!("s = {x}"))
            });
            let unit = self.kleisli_functor(&s.kleisli_unit(n));
            r.push(if unit == t.kleisli_unit(n) {
                crate::report::Check::pass(format!("L(η) = η at |X| = {n}"), n as u64)
            } else {
                crate::report::Check::fail(format!("L(η) = η at |X| = {n}"), n as u64, format!("{:?}", unit.table))
            });
        }
        let maps = |n: usize, m: usize| -> Result<Vec<KleisliMap>> {
            let sm = s.t_count(m)?;
            Ok(all_maps(n, sm).into_iter().take(64).map(|table| KleisliMap { dom: n, cod: m, table }).collect())
        };
        let (mut comp_checked, mut comp_fail) = (0u64, None);
        let (mut tens_checked, mut tens_fail) = (0u64, None);
        for n in 1..=max {
            for m in 1..=max {
                for f in maps(n, m)? {
                    for g in maps(m, n)? {
                        comp_checked += 1;
                        let lhs = self.kleisli_functor(&s.kleisli_compose(&g, &f));
                        let rhs = t.kleisli_compose(&self.kleisli_functor(&g), &self.kleisli_functor(&f));
                        if lhs != rhs && comp_fail.is_none() {
                            comp_fail = Some(format!("f = {:?}, g = {:?}", f.table, g.table));
                        }
                        tens_checked += 1;
                        let lhs = self.kleisli_functor(&s.kleisli_tensor(&f, &g));
                        let rhs = t.kleisli_tensor(&self.kleisli_functor(&f), &self.kleisli_functor(&g));
                        if lhs != rhs && tens_fail.is_none() {
                            tens_fail = Some(format!("f = {:?}, g = {:?}", f.table, g.table));
                        }
                    }
                }
            }
        }
        for (name, checked, fail) in
            [("L preserves composition", comp_checked, comp_fail), ("L(f ⊗_S g) = L(f) ⊗_T L(g)", tens_checked, tens_fail)]
        {
            r.push(match fail {
                None => crate::report::Check::pass(name, checked),
                Some(w) => crate::report::Check::fail(name, checked, w),
            });
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::BaseKind;

    #[test]
    fn powerset_constant_kleisli_tensor_is_product() {
        let t = Monad::powerset(BaseKind::Cartesian);
        let f = KleisliMap { dom: 1, cod: 2, table: vec![0b11] };
        let g = KleisliMap { dom: 1, cod: 1, table: vec![0b1] };
        // {z1,z2} x {w} over Z⊗W = 2x1.
        assert_eq!(t.kleisli_tensor(&f, &g).table, vec![0b11]);
    }

    #[test]
    fn unit_morphism_sends_kleisli_maps_to_singletons() {
        let t = Monad::powerset(BaseKind::Cartesian);
        let phi = MonadMorphism::unit(&t);
        let f = KleisliMap { dom: 3, cod: 2, table: vec![1, 0, 1] };
        assert_eq!(phi.kleisli_functor(&f).table, vec![0b10, 0b01, 0b10]);
    }

    #[test]
    fn corrupted_component_fails() {
        let t = Monad::powerset(BaseKind::Cartesian);
        let phi = MonadMorphism::identity(&t).corrupted(1, 1, 0);
        let r = phi.check(true, 2).unwrap();
        assert!(!r.all_pass());
        assert!(MonadMorphism::identity(&t).check(true, 2).unwrap().all_pass());
    }

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(2, 3).len(), 9);
        assert_eq!(all_maps(0, 0).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }
}
