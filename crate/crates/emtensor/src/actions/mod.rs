//! Monoids in (C^T, ⊠, TE), their actions, the action monad M⊠T(−), the comparison
//! between actions and algebras of that monad, and change of monoid.

mod base;
mod monad;
mod transport;

pub use base::BaseMonoidMonad;
pub use monad::{roundtrip_action, roundtrip_algebra, ActionMonad, FAlgebra};
pub use transport::{induced_monad_morphism, transport_monoid, InducedMorphism};

use crate::algebra::{enumerate_algebras, Algebra};
use crate::error::{precondition, Result};
use crate::fixtures::chain;
use crate::monad::{Monad, MonadKind};
use crate::monoidal::{compose, identity, same_map, Monoidal};
use crate::report::{Check, Report};
use crate::tensor::classify_bimorphism;

/// An algebra M with m̄: M⊠M -> M and e: TE -> M.
#[derive(Clone, Debug)]
pub struct MonoidObject {
    pub alg: Algebra,
    pub mul: Vec<usize>,
    pub unit: Vec<usize>,
}

impl MonoidObject {
    /// From a multiplication given as a bimorphism M⊗M -> M and a unit element e(η★).
    /// With the cocartesian base the unit object is initial and `unit_elem` is ignored.
    pub fn from_bimorphism(mon: &Monoidal, alg: &Algebra, mul: &[usize], unit_elem: usize) -> Result<MonoidObject> {
        let m = mon.m;
        let t = mon.tensor(alg, alg)?;
        let mbar = classify_bimorphism(m, &t, alg, mul)?;
        let ne = m.e_size();
        let unit = (0..mon.unit().size()).map(|u| alg.eval(m, ne, u, |_| unit_elem)).collect();
        Ok(MonoidObject { alg: alg.clone(), mul: mbar, unit })
    }

    /// The unit object TE with m̄ = λ̄ and e = 1.
    pub fn trivial(mon: &Monoidal) -> Result<MonoidObject> {
        let te = mon.unit().clone();
        let (l, _) = mon.left_unitor(&te)?;
        Ok(MonoidObject { unit: identity(te.size()), mul: l.map, alg: te })
    }

    /// The element e(η★), when the unit object is a singleton's free algebra.
    pub fn unit_elem(&self, m: &Monad) -> Option<usize> {
        (m.e_size() == 1).then(|| self.unit[m.eta(1, 0)])
    }

    /// x·y through the universal bimorphism.
    pub fn times(&self, mon: &Monoidal, x: usize, y: usize) -> Result<usize> {
        let t = mon.tensor(&self.alg, &self.alg)?;
        Ok(self.mul[t.j[mon.m.base.join(self.alg.size(), self.alg.size(), crate::finset::Part::Pair(x, y))]])
    }
}

/// The 3-chain with min, unit 2: a quantale.
pub fn v3(mon: &Monoidal) -> Result<MonoidObject> {
    let c3 = chain(mon.m, 3)?;
    let mul: Vec<usize> = (0..9).map(|z| (z / 3).min(z % 3)).collect();
    MonoidObject::from_bimorphism(mon, &c3, &mul, 2)
}

/// The 2-chain with min, unit 1.
pub fn c2_monoid(mon: &Monoidal) -> Result<MonoidObject> {
    let c2 = chain(mon.m, 2)?;
    MonoidObject::from_bimorphism(mon, &c2, &[0, 0, 0, 1], 1)
}

/// F_p × F_p with componentwise multiplication, unit (1, 1).
pub fn fp_squared(mon: &Monoidal) -> Result<MonoidObject> {
    let m = mon.m;
    let MonadKind::VectorSpace { p } = m.kind else {
        return Err(precondition("F_p × F_p needs a vector space monad"));
    };
    let p = p as usize;
    let a = crate::fixtures::free_on(m, 2)?;
    let n = p * p;
    let mul: Vec<usize> = (0..n * n)
        .map(|z| {
            let (x, y) = (z / n, z % n);
            (x % p) * (y % p) % p + p * ((x / p) * (y / p) % p)
        })
        .collect();
    MonoidObject::from_bimorphism(mon, &a, &mul, 1 + p)
}

/// Associativity m̄·(m̄⊠1) = m̄·(1⊠m̄)·ᾱ and the unit laws m̄·(e⊠1) = λ̄, m̄·(1⊠e) = ρ̄.
pub fn check_monoid(mon: &Monoidal, mo: &MonoidObject) -> Result<Report> {
    let m = mon.m;
    let mut r = Report::new();
    let a = &mo.alg;
    let aa = mon.tensor(a, a)?.alg.clone();
    let te = mon.unit().clone();
    r.push(hom_check("m̄ homomorphism", m, &aa, a, &mo.mul));
    r.push(hom_check("e homomorphism", m, &te, a, &mo.unit));
    if !r.all_pass() {
        return Ok(r);
    }
    let one = identity(a.size());
    let m_one = mon.tensor_homs((&aa, a, &mo.mul), (a, a, &one))?;
    let one_m = mon.tensor_homs((a, a, &one), (&aa, a, &mo.mul))?;
    let alpha = mon.associator(a, a, a)?;
    r.push(same_map("associativity", &compose(&mo.mul, &m_one), &compose(&mo.mul, &compose(&one_m, &alpha.map))));
    let e_one = mon.tensor_homs((&te, a, &mo.unit), (a, a, &one))?;
    let one_e = mon.tensor_homs((a, a, &one), (&te, a, &mo.unit))?;
    r.push(same_map("left unit", &compose(&mo.mul, &e_one), &mon.left_unitor(a)?.0.map));
    r.push(same_map("right unit", &compose(&mo.mul, &one_e), &mon.right_unitor(a)?.0.map));
    Ok(r)
}

fn hom_check(name: &str, m: &Monad, a: &Algebra, b: &Algebra, h: &[usize]) -> Check {
    if h.len() != a.size() || h.iter().any(|&x| x >= b.size()) {
        return Check::fail(name, 0, "not a total map between the carriers");
    }
    match a.hom_witness(m, b, h) {
        None => Check::pass(name, a.size() as u64),
        Some(w) => Check::fail(name, a.size() as u64, w),
    }
}

/// f: N -> M preserves multiplication and unit.
pub fn check_monoid_hom(mon: &Monoidal, n: &MonoidObject, mo: &MonoidObject, f: &[usize]) -> Result<Report> {
    let mut r = Report::new();
    r.push(hom_check("f homomorphism", mon.m, &n.alg, &mo.alg, f));
    if !r.all_pass() {
        return Ok(r);
    }
    let ff = mon.tensor_homs((&n.alg, &mo.alg, f), (&n.alg, &mo.alg, f))?;
    r.push(same_map("f preserves multiplication", &compose(f, &n.mul), &compose(&mo.mul, &ff)));
    r.push(same_map("f preserves unit", &compose(f, &n.unit), &mo.unit));
    Ok(r)
}

/// An algebra A with a₂: M⊠A -> A.
#[derive(Clone, Debug, PartialEq)]
pub struct Action {
    pub alg: Algebra,
    pub act: Vec<usize>,
}

impl Action {
    /// M acting on itself by m̄.
    pub fn regular(mo: &MonoidObject) -> Action {
        Action { alg: mo.alg.clone(), act: mo.mul.clone() }
    }
}

/// a₂·(1⊠a₂) = a₂·(m̄⊠1)·ᾱ⁻¹ and a₂·(e⊠1)·λ̄⁻¹ = 1.
pub fn check_action(mon: &Monoidal, mo: &MonoidObject, action: &Action) -> Result<Report> {
    let m = mon.m;
    let (ma, a) = (&mo.alg, &action.alg);
    let mut r = Report::new();
    let mxa = mon.tensor(ma, a)?.alg.clone();
    r.push(hom_check("a₂ homomorphism", m, &mxa, a, &action.act));
    if !r.all_pass() {
        return Ok(r);
    }
    let mm = mon.tensor(ma, ma)?.alg.clone();
    let one_a2 = mon.tensor_homs((ma, ma, &identity(ma.size())), (&mxa, a, &action.act))?;
    let m_one = mon.tensor_homs((&mm, ma, &mo.mul), (a, a, &identity(a.size())))?;
    let ainv = mon.associator_inv(ma, ma, a)?;
    r.push(same_map(
        "action associativity",
        &compose(&action.act, &one_a2),
        &compose(&action.act, &compose(&m_one, &ainv.map)),
    ));
    let te = mon.unit().clone();
    let e_one = mon.tensor_homs((&te, ma, &mo.unit), (a, a, &identity(a.size())))?;
    let (_, linv) = mon.left_unitor(a)?;
    r.push(same_map("action unit", &compose(&action.act, &compose(&e_one, &linv)), &identity(a.size())));
    Ok(r)
}

/// Every action of M on every labelled algebra of size ≤ max_size, by exhaustive search
/// over homomorphisms M⊠A -> A.
pub fn action_census(mon: &Monoidal, mo: &MonoidObject, max_size: usize) -> Result<Vec<Action>> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for a in enumerate_algebras(mon.m, n)? {
            let mxa = mon.tensor(&mo.alg, &a)?.alg.clone();
            for h in mxa.enumerate_homs(mon.m, &a)? {
                let act = Action { alg: a.clone(), act: h };
                if check_action(mon, mo, &act)?.all_pass() {
                    out.push(act);
                }
            }
        }
    }
    Ok(out)
}

/// h: A -> B is a homomorphism with h·a₂ = b₂·(1⊠h).
pub fn is_equivariant(mon: &Monoidal, mo: &MonoidObject, x: &Action, y: &Action, h: &[usize]) -> Result<bool> {
    if !x.alg.is_hom(mon.m, &y.alg, h) {
        return Ok(false);
    }
    let ma = &mo.alg;
    let one_h = mon.tensor_homs((ma, ma, &identity(ma.size())), (&x.alg, &y.alg, h))?;
    Ok(compose(h, &x.act) == compose(&y.act, &one_h))
}

/// The N-action a₂·(f⊠1) along a monoid homomorphism f: N -> M.
pub fn restrict_scalars(mon: &Monoidal, n: &MonoidObject, mo: &MonoidObject, f: &[usize], action: &Action) -> Result<Action> {
    let hom = check_monoid_hom(mon, n, mo, f)?;
    if let Some(c) = hom.first_failure() {
        return Err(precondition(format!("not a monoid homomorphism: {}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let a = &action.alg;
    let f_one = mon.tensor_homs((&n.alg, &mo.alg, f), (a, a, &identity(a.size())))?;
    Ok(Action { alg: a.clone(), act: compose(&action.act, &f_one) })
}

/// Every M-equivariant map between the given actions stays N-equivariant after restriction;
/// `restricted[i]` is the restriction of `census[i]`.
pub fn restriction_preserves_equivariance(
    mon: &Monoidal,
    target: &MonoidObject,
    source: &MonoidObject,
    census: &[Action],
    restricted: &[Action],
) -> Result<Report> {
    let mut examined = 0u64;
    for (i, x) in census.iter().enumerate() {
        for (k, y) in census.iter().enumerate() {
            for h in x.alg.enumerate_homs(mon.m, &y.alg)? {
                if !is_equivariant(mon, target, x, y, &h)? {
                    continue;
                }
                examined += 1;
                if !is_equivariant(mon, source, &restricted[i], &restricted[k], &h)? {
                    let mut r = Report::new();
                    r.push(Check::fail("restriction preserves equivariant maps", examined, format!("{h:?}: action {i} -> action {k}")));
                    return Ok(r);
                }
            }
        }
    }
    let mut r = Report::new();
    r.push(Check::pass("restriction preserves equivariant maps", examined));
    Ok(r)
}

/// The inclusion C2 -> V3 sending ⊥ to 0 and ⊤ to 2.
pub fn chain_inclusion() -> Vec<usize> {
    vec![0, 2]
}

/// An action with a corrupted unit: x ↦ a₂(e, x) is no longer the identity.
pub fn corrupt_unit(mon: &Monoidal, mo: &MonoidObject, action: &Action) -> Result<Option<Action>> {
    let m = mon.m;
    let Some(e) = mo.unit_elem(m) else { return Ok(None) };
    let t = mon.tensor(&mo.alg, &action.alg)?;
    let na = action.alg.size();
    let mxa = &t.alg;
    for h in mxa.enumerate_homs(m, &action.alg)? {
        let shifted = (0..na).any(|x| h[t.j_part(m, crate::finset::Part::Pair(e, x))] != x);
        if shifted {
            return Ok(Some(Action { alg: action.alg.clone(), act: h }));
        }
    }
    Ok(None)
}

/// The power V^X of a sup-lattice with the pointwise structure; functions are indexed
/// by their values in base |V|, least significant digit at x = 0.
pub fn power_algebra(m: &Monad, v: &Algebra, n: usize) -> Result<Algebra> {
    let k = v.size();
    let size = k.pow(n as u32);
    let labels: Vec<String> = (0..size)
        .map(|f| {
            let vals: Vec<String> = (0..n).map(|x| v.carrier.label(f / k.pow(x as u32) % k)).collect();
            format!("({})", vals.join(","))
        })
        .collect();
    let carrier = crate::finset::FinSet::atoms(&labels)?;
    let table = (0..m.t_count(size)?)
        .map(|t| {
            (0..n).fold(0, |acc, x| {
                let vt = m.t_map(size, t, |f| f / k.pow(x as u32) % k, k);
                acc + v.act(m, vt) * k.pow(x as u32)
            })
        })
        .collect();
    Algebra::from_table(m, carrier, table)
}

/// V⊠P(X) ≅ V^X via j(v, S) ↦ (x ↦ v if x ∈ S else ⊥), exhibited as a classified
/// bijective homomorphism. Returns the map and its checks.
pub fn quantale_power_iso(mon: &Monoidal, v: &Algebra, n: usize) -> Result<(Vec<usize>, Report)> {
    let m = mon.m;
    if m.kind != MonadKind::Powerset || m.base != crate::finset::BaseKind::Cartesian {
        return Err(precondition("the power identification is for sup-lattices"));
    }
    let px = Algebra::free(m, &crate::finset::FinSet::range(n))?;
    let t = mon.tensor(v, &px)?;
    let vx = power_algebra(m, v, n)?;
    let k = v.size();
    let bottom = v.act(m, 0);
    let f: Vec<usize> = (0..k * px.size())
        .map(|z| {
            let (val, s) = (z / px.size(), z % px.size());
            (0..n).map(|x| if s >> x & 1 == 1 { val } else { bottom } * k.pow(x as u32)).sum()
        })
        .collect();
    let map = classify_bimorphism(m, &t, &vx, &f)?;
    let mut r = Report::new();
    r.push(Check::pass(format!("|V⊠P({n})| = {}", t.alg.size()), t.alg.size() as u64));
    let mut seen = vec![false; vx.size()];
    map.iter().for_each(|&y| seen[y] = true);
    r.push(if map.len() == vx.size() && seen.iter().all(|&b| b) {
        Check::pass("V⊠P(X) -> V^X bijective", vx.size() as u64)
    } else {
        Check::fail("V⊠P(X) -> V^X bijective", vx.size() as u64, format!("{} classes onto {} functions", map.len(), vx.size()))
    });
    Ok((map, r))
}

#[cfg(test)]
mod tests;
