//! Transport of monoids along a monoidal monad morphism φ: S -> T, and the monad
//! morphism N⊛S(−) -> M⊠T(−) induced by a monoid homomorphism f: N -> M.

use super::{check_monoid, check_monoid_hom, ActionMonad, MonoidObject};
use crate::algebra::Algebra;
use crate::error::{precondition, Result};
use crate::finset::{FinSet, Part};
use crate::monoidal::{compose, same_map, FunctorData};
use crate::report::Report;

/// (N, ζ·φ_N) with multiplication n̄·φ̄_{N,N} and unit d·φ_E, checked as a monoid for S.
pub fn transport_monoid(fd: &FunctorData, n: &MonoidObject) -> Result<(MonoidObject, Report)> {
    let alg = fd.restrict(&n.alg)?;
    let phi_bar = fd.comparison(&n.alg, &n.alg)?;
    let ne = fd.phi.source.e_size();
    let phi_e: Vec<usize> = (0..fd.source.unit().size()).map(|x| fd.phi.apply(ne, x)).collect();
    let out = MonoidObject { alg, mul: compose(&n.mul, &phi_bar.map), unit: compose(&n.unit, &phi_e) };
    let r = check_monoid(&fd.source, &out)?;
    Ok((out, r))
}

pub struct InducedMorphism {
    /// ψ_X: N⊛SX -> M⊠TX.
    pub components: Vec<usize>,
    pub report: Report,
}

/// ψ_X = φ̄_{M,TX}·(f⊛φ_X) with its unit law, τ-compatibility and multiplication square at X.
pub fn induced_monad_morphism(
    fd: &FunctorData,
    n: &MonoidObject,
    mo: &MonoidObject,
    f: &[usize],
    x: &FinSet,
) -> Result<InducedMorphism> {
    let hom = check_monoid_hom(&fd.target, n, mo, f)?;
    if let Some(c) = hom.first_failure() {
        return Err(precondition(format!("not a monoid homomorphism: {}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let (s, t) = (&fd.phi.source, &fd.phi.target);
    let (n_s, _) = transport_monoid(fd, n)?;
    let g_mon = ActionMonad::new(&fd.source, n_s)?;
    let f_mon = ActionMonad::new(&fd.target, mo.clone())?;
    let psi = |z: &FinSet| -> Result<Vec<usize>> {
        let sz = Algebra::free(s, z)?;
        let tz = Algebra::free(t, z)?;
        let phi_z: Vec<usize> = (0..sz.size()).map(|u| fd.phi.apply(z.size(), u)).collect();
        let (rn, rm, rtz) = (fd.restrict(&n.alg)?, fd.restrict(&mo.alg)?, fd.restrict(&tz)?);
        let f_phi = fd.source.tensor_homs((&rn, &rm, f), (&sz, &rtz, &phi_z))?;
        Ok(compose(&fd.comparison(&mo.alg, &tz)?.map, &f_phi))
    };
    let psi_x = psi(x)?;
    let mut r = Report::new();
    let eta_g = g_mon.eta(x)?;
    let eta_f = f_mon.eta(x)?;
    r.push(same_map("ψ·η̃ = η̃", &compose(&psi_x, &eta_g), &eta_f));
    let sx = s.t_count(x.size())?;
    let phi_x: Vec<usize> = (0..sx).map(|u| fd.phi.apply(x.size(), u)).collect();
    r.push(same_map("ψ·τ = τ·φ", &compose(&psi_x, &g_mon.tau(x)?), &compose(&f_mon.tau(x)?, &phi_x)));
    // ψ·μ̃ = μ̃·ψF·G(ψ), elementwise on G(GX).
    let gx = g_mon.f_set(x)?;
    let fx = f_mon.f_set(x)?;
    let (_, mu_g) = g_mon.mu(x)?;
    let (ffx, mu_f) = f_mon.mu(x)?;
    let psi_fx = psi(&fx.alg.carrier)?;
    let sgx = Algebra::free(s, &gx.alg.carrier)?;
    let sfx = Algebra::free(s, &fx.alg.carrier)?;
    let s_psi: Vec<usize> = (0..sgx.size()).map(|u| s.t_map(gx.alg.size(), u, |v| psi_x[v], fx.alg.size())).collect();
    let rn = fd.restrict(&n.alg)?;
    let g_psi = fd.source.tensor_homs((&rn, &rn, &crate::monoidal::identity(rn.size())), (&sgx, &sfx, &s_psi))?;
    r.push(same_map("ψ·μ̃ = μ̃·ψF·Gψ", &compose(&psi_x, &mu_g), &compose(&mu_f, &compose(&psi_fx, &g_psi))));
    let sfx_t = fd.source.tensor(&rn, &sfx)?;
    let nfx = fx.alg.size();
    r.elementwise("ψF(j(n, ηv)) = j(fn, ηv)", (rn.size() * nfx) as u64, |i| {
        let (a, v) = (i as usize / nfx, i as usize % nfx);
        let lhs = psi_fx[sfx_t.j_part(s, Part::Pair(a, s.eta(nfx, v)))];
        (lhs != ffx.j_part(t, Part::Pair(f[a], t.eta(nfx, v)))).then(|| format!("n = {a}, v = {v}"))
    });
    Ok(InducedMorphism { components: psi_x, report: r })
}
