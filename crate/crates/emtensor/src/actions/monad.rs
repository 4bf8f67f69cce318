//! The action monad F = M⊠T(−), the monad morphism τ: T -> F, and the comparison
//! K between M-actions and F-algebras.

use std::sync::Arc;

use super::{check_action, check_monoid, Action, MonoidObject};
use crate::algebra::Algebra;
use crate::error::{invariant, precondition, Result};
use crate::finset::{BaseKind, FinSet, Part};
use crate::monad::{all_maps, TElem};
use crate::monoidal::{compose, identity, Monoidal};
use crate::report::{Check, Report};
use crate::tensor::{induce, picks, Tensor};

/// M⊠T(−) for a monoid M, on the cartesian base.
pub struct ActionMonad<'a> {
    pub mon: &'a Monoidal<'a>,
    pub monoid: MonoidObject,
    unit_elem: usize,
}

/// An algebra for the action monad: a set A with a: M⊠TA -> A.
#[derive(Clone, Debug)]
pub struct FAlgebra {
    pub carrier: FinSet,
    /// M⊠TA.
    pub fa: Arc<Tensor>,
    pub structure: Vec<usize>,
}

impl<'a> ActionMonad<'a> {
    pub fn new(mon: &'a Monoidal<'a>, monoid: MonoidObject) -> Result<ActionMonad<'a>> {
        if mon.m.base != BaseKind::Cartesian {
            return Err(precondition("the action monad is built on the cartesian base"));
        }
        let r = check_monoid(mon, &monoid)?;
        if let Some(c) = r.first_failure() {
            return Err(precondition(format!("not a monoid: {}: {}", c.name, c.witness.clone().unwrap_or_default())));
        }
        let unit_elem = monoid.unit_elem(mon.m).expect("cartesian unit is a singleton");
        Ok(ActionMonad { mon, monoid, unit_elem })
    }

    fn mul(&self, x: usize, y: usize) -> Result<usize> {
        self.monoid.times(self.mon, x, y)
    }

    /// F(X) = M⊠T(X) for a set X.
    pub fn f_set(&self, x: &FinSet) -> Result<Arc<Tensor>> {
        self.mon.tensor(&self.monoid.alg, &Algebra::free(self.mon.m, x)?)
    }

    pub fn f(&self, n: usize) -> Result<Arc<Tensor>> {
        self.f_set(&FinSet::range(n))
    }

    /// τ_X = (e⊠1)·λ̄⁻¹: TX -> M⊠TX.
    pub fn tau(&self, x: &FinSet) -> Result<Vec<usize>> {
        let mon = self.mon;
        let tx = Algebra::free(mon.m, x)?;
        let te = mon.unit().clone();
        let (_, linv) = mon.left_unitor(&tx)?;
        let e_one = mon.tensor_homs((&te, &self.monoid.alg, &self.monoid.unit), (&tx, &tx, &identity(tx.size())))?;
        Ok(compose(&e_one, &linv))
    }

    /// η̃_X = τ_X·η_X.
    pub fn eta(&self, x: &FinSet) -> Result<Vec<usize>> {
        let tau = self.tau(x)?;
        Ok((0..x.size()).map(|i| tau[self.mon.m.eta(x.size(), i)]).collect())
    }

    /// μ̃ on the generators j(m, ηw) of F(A), for w in FA = M⊠TA: indexed m·|FA| + w.
    /// z ↦ μ̃(j(m, ηz)) = (m̄⊠1)·ᾱ⁻¹·j(m, z) is a homomorphism sending j(n, y) to j(mn, y),
    /// so it is evaluated on the presentation of w.
    pub fn mu_gen(&self, fa: &Tensor) -> Result<Vec<usize>> {
        let m = self.mon.m;
        let k = self.monoid.alg.size();
        let n = fa.alg.size();
        let pres = fa.alg.pres;
        let pairs: Vec<(usize, usize)> = (0..pres)
            .map(|y| match m.base.split(fa.na(), fa.nb(), fa.pres_elem(m, y)) {
                Part::Pair(a, b) => (a, b),
                _ => unreachable!(),
            })
            .collect();
        let mut out = Vec::with_capacity(k * n);
        for mm in 0..k {
            let prods: Vec<usize> = (0..k).map(|x| self.mul(mm, x)).collect::<Result<_>>()?;
            for w in 0..n {
                let v = fa.alg.eval(m, pres, fa.alg.reps[w], |y| {
                    let (a, b) = pairs[y];
                    fa.j_part(m, Part::Pair(prods[a], b))
                });
                out.push(v);
            }
        }
        Ok(out)
    }

    /// The generator formula for μ̃_X agrees with the composite (m̄⊠1)·ᾱ⁻¹ on M⊠FX.
    pub fn check_mu_formula(&self, x: &FinSet) -> Result<Check> {
        let mon = self.mon;
        let fx = self.f_set(x)?;
        let mo = &self.monoid;
        let tx = fx.right.clone();
        let gen = self.mu_gen(&fx)?;
        let ainv = mon.associator_inv(&mo.alg, &mo.alg, &tx)?;
        let mm = mon.tensor(&mo.alg, &mo.alg)?.alg.clone();
        let m_one = mon.tensor_homs((&mm, &mo.alg, &mo.mul), (&tx, &tx, &identity(tx.size())))?;
        let outer = mon.tensor(&mo.alg, &fx.alg)?;
        let n = fx.alg.size();
        let name = format!("μ̃ generator formula = (m̄⊠1)·ᾱ⁻¹ at |X| = {}", x.size());
        for mm in 0..mo.alg.size() {
            for w in 0..n {
                let composite = m_one[ainv.map[outer.j_part(mon.m, Part::Pair(mm, w))]];
                if composite != gen[mm * n + w] {
                    return Ok(Check::fail(name, (mm * n + w + 1) as u64, format!("generator j({mm}, η{w})")));
                }
            }
        }
        Ok(Check::pass(name, (mo.alg.size() * n) as u64))
    }

    /// μ̃_X on all of F(FX), induced from its values on generators.
    pub fn mu(&self, x: &FinSet) -> Result<(Arc<Tensor>, Vec<usize>)> {
        let m = self.mon.m;
        let fx = self.f_set(x)?;
        let ffx = self.f_set(&fx.alg.carrier)?;
        let gen = self.mu_gen(&fx)?;
        let n = fx.alg.size();
        let pk = picks(m, &[&ffx.left, &ffx.right]);
        let (wa, wb) = (pk[0].len(), pk[1].len());
        let w = wa * wb;
        // Picked elements of T(FX) that are not generators η(v) are evaluated through FX.
        let second = |u: TElem, mm: usize| fx.alg.eval(m, n, u, |v| gen[mm * n + v]);
        let map = induce(
            m,
            w,
            ffx.alg.size(),
            &|t: TElem| ffx.alg.eval(m, w, t, |z| ffx.j_part(m, Part::Pair(pk[0][z / wb], pk[1][z % wb]))),
            &|t: TElem| fx.alg.eval(m, w, t, |z| second(pk[1][z % wb], pk[0][z / wb])),
            "μ̃",
        )?;
        if let Some(wit) = ffx.alg.hom_witness(m, &fx.alg, &map) {
            return Err(invariant(format!("μ̃ is not a homomorphism: {wit}")));
        }
        Ok((ffx, map))
    }

    /// Unit and associativity laws of (F, μ̃, η̃) at X, on generators.
    pub fn check_laws(&self, x: &FinSet) -> Result<Report> {
        let m = self.mon.m;
        let mut r = Report::new();
        let fx = self.f_set(x)?;
        let n = fx.alg.size();
        let k = self.monoid.alg.size();
        let gen = self.mu_gen(&fx)?;
        let eta = self.eta(x)?;
        let e = self.unit_elem;
        r.elementwise("μ̃·η̃F = 1", n as u64, |w| {
            let w = w as usize;
            (gen[e * n + w] != w).then(|| format!("element {w} of FX"))
        });
        r.elementwise("μ̃·Fη̃ = 1 on generators j(m, ηx)", (k * x.size()) as u64, |i| {
            let (mm, xi) = (i as usize / x.size(), i as usize % x.size());
            let g = fx.j_part(m, Part::Pair(mm, m.eta(x.size(), xi)));
            (gen[mm * n + eta[xi]] != g).then(|| format!("j({mm}, η{xi})"))
        });
        r.elementwise("μ̃·μ̃F = μ̃·Fμ̃ on generators j(m, η j(n, ηv))", (k * k * n) as u64, |i| {
            let i = i as usize;
            let (m1, m2, v) = (i / (k * n), i / n % k, i % n);
            let lhs = gen[self.mul(m1, m2).unwrap() * n + v];
            let rhs = gen[m1 * n + gen[m2 * n + v]];
            (lhs != rhs).then(|| format!("m = {m1}, n = {m2}, v = {v}"))
        });
        r.push(self.check_mu_formula(x)?);
        Ok(r)
    }

    /// Naturality, τ·η = η̃ and τ·μ = μ̃·τF·Tτ at X, with naturality along all maps
    /// from X into sets of size ≤ |X|.
    pub fn check_tau(&self, x: &FinSet) -> Result<Report> {
        let m = self.mon.m;
        let mut r = Report::new();
        let nx = x.size();
        let fx = self.f_set(x)?;
        let tau = self.tau(x)?;
        let eta = self.eta(x)?;
        r.elementwise("τ·η = η̃", nx as u64, |i| {
            let i = i as usize;
            (tau[m.eta(nx, i)] != eta[i]).then(|| format!("{i}"))
        });
        let tx = m.t_count(nx)?;
        let ttx = m.t_count(tx)?;
        let gen = self.mu_gen(&fx)?;
        let n = fx.alg.size();
        let e = self.unit_elem;
        r.elementwise("τ·μ = μ̃·τF·Tτ", ttx as u64, |tt| {
            let tt = tt as usize;
            let lhs = tau[m.mu(nx, tt)];
            let rhs = fx.alg.eval(m, tx, tt, |s| gen[e * n + tau[s]]);
            (lhs != rhs).then(|| format!("element {tt} of TTX"))
        });
        for c in 0..=nx {
            let y = FinSet::range(c);
            let fy = self.f_set(&y)?;
            let tau_y = self.tau(&y)?;
            for f in all_maps(nx, c) {
                let tf: Vec<usize> = (0..tx).map(|t| m.t_map(nx, t, |i| f[i], c)).collect();
                let ff = self.mon.tensor_homs((&fx.left, &fy.left, &identity(fx.na())), (&fx.right, &fy.right, &tf))?;
                r.push(crate::monoidal::same_map(format!("τ natural along {f:?}"), &compose(&ff, &tau), &compose(&tau_y, &tf)));
            }
        }
        Ok(r)
    }

    /// K: the F-algebra (A, a₂·(1⊠a₁)).
    pub fn comparison(&self, action: &Action) -> Result<FAlgebra> {
        let m = self.mon.m;
        let a = &action.alg;
        let fa = self.f_set(&a.carrier)?;
        let a1: Vec<usize> = (0..fa.nb()).map(|t| a.act(m, t)).collect();
        let ma = &self.monoid.alg;
        let one_a1 = self.mon.tensor_homs((ma, ma, &identity(ma.size())), (&fa.right, a, &a1))?;
        Ok(FAlgebra { carrier: a.carrier.clone(), fa, structure: compose(&action.act, &one_a1) })
    }

    /// K⁻¹: a₁ = a·τ_A and a₂ with a₂(j(m, x)) = a(j(m, ηx)), induced and re-verified.
    pub fn comparison_inverse(&self, fa: &FAlgebra) -> Result<Action> {
        let m = self.mon.m;
        let tau = self.tau(&fa.carrier)?;
        let a1: Vec<usize> = tau.iter().map(|&z| fa.structure[z]).collect();
        let a = Algebra::from_table(m, fa.carrier.clone(), a1)?;
        let ma = &self.monoid.alg;
        let mxa = self.mon.tensor(ma, &a)?;
        let pk = picks(m, &[ma, &a]);
        let (wa, wb) = (pk[0].len(), pk[1].len());
        let w = wa * wb;
        let na = a.size();
        let act = induce(
            m,
            w,
            mxa.alg.size(),
            &|t: TElem| mxa.alg.eval(m, w, t, |z| mxa.j_part(m, Part::Pair(pk[0][z / wb], pk[1][z % wb]))),
            &|t: TElem| {
                a.eval(m, w, t, |z| fa.structure[fa.fa.j_part(m, Part::Pair(pk[0][z / wb], m.eta(na, pk[1][z % wb])))])
            },
            "a₂",
        )?;
        let action = Action { alg: a, act };
        let r = check_action(self.mon, &self.monoid, &action)?;
        if let Some(c) = r.first_failure() {
            return Err(invariant(format!("recovered action fails {}: {}", c.name, c.witness.clone().unwrap_or_default())));
        }
        Ok(action)
    }

    /// a·η̃ = 1, (A, a·τ) is a T-algebra, a is a homomorphism into it, and the
    /// associativity law on the generators j(m, ηw) of F(FA).
    pub fn check_algebra(&self, fa: &FAlgebra) -> Result<Report> {
        let m = self.mon.m;
        let mut r = Report::new();
        let n = fa.carrier.size();
        let eta = self.eta(&fa.carrier)?;
        let a = &fa.structure;
        r.elementwise("a·η̃ = 1", n as u64, |x| {
            let x = x as usize;
            (a[eta[x]] != x).then(|| format!("element {x}"))
        });
        let tau = self.tau(&fa.carrier)?;
        let a1 = Algebra::from_table(m, fa.carrier.clone(), tau.iter().map(|&z| a[z]).collect())?;
        let r1 = a1.check(m)?;
        r.push(match r1.first_failure() {
            None => Check::pass("a·τ is an algebra", n as u64),
            Some(c) => Check::fail("a·τ is an algebra", n as u64, c.witness.clone().unwrap_or_default()),
        });
        r.push(match fa.fa.alg.hom_witness(m, &a1, a) {
            None => Check::pass("a is a homomorphism", fa.fa.alg.size() as u64),
            Some(w) => Check::fail("a is a homomorphism", fa.fa.alg.size() as u64, w),
        });
        let gen = self.mu_gen(&fa.fa)?;
        let nf = fa.fa.alg.size();
        let k = self.monoid.alg.size();
        r.elementwise("a·μ̃ = a·Fa on generators", (k * nf) as u64, |i| {
            let (mm, w) = (i as usize / nf, i as usize % nf);
            let lhs = a[gen[mm * nf + w]];
            let rhs = a[fa.fa.j_part(m, Part::Pair(mm, m.eta(n, a[w])))];
            (lhs != rhs).then(|| format!("j({mm}, η{w})"))
        });
        Ok(r)
    }

    /// The free F-algebra (FX, μ̃_X).
    pub fn free_algebra(&self, x: &FinSet) -> Result<FAlgebra> {
        let (ffx, mu) = self.mu(x)?;
        let fx = self.f_set(x)?;
        Ok(FAlgebra { carrier: fx.alg.carrier.clone(), fa: ffx, structure: mu })
    }
}

/// K(K⁻¹(A, a)) = (A, a) and K⁻¹(K(action)) = action, as tables.
pub fn roundtrip_algebra(am: &ActionMonad, fa: &FAlgebra) -> Result<Check> {
    let back = am.comparison(&am.comparison_inverse(fa)?)?;
    Ok(if back.structure == fa.structure {
        Check::pass("K·K⁻¹ = 1", fa.structure.len() as u64)
    } else {
        let i = back.structure.iter().zip(&fa.structure).position(|(x, y)| x != y).unwrap_or(0);
        Check::fail("K·K⁻¹ = 1", fa.structure.len() as u64, format!("class {i} of M⊠TA"))
    })
}

pub fn roundtrip_action(am: &ActionMonad, action: &Action) -> Result<Check> {
    let m = am.mon.m;
    let back = am.comparison_inverse(&am.comparison(action)?)?;
    let same = back.act == action.act && back.alg.table(m)? == action.alg.table(m)?;
    Ok(if same {
        Check::pass("K⁻¹·K = 1", action.act.len() as u64)
    } else {
        Check::fail("K⁻¹·K = 1", action.act.len() as u64, "recovered action differs")
    })
}
