//! The algebraic functor C^φ: C^T -> C^S of a monoidal monad morphism φ: S -> T and its
//! comparison maps φ̄_{A,B}: C^φA ⊛ C^φB -> C^φ(A⊠B).

use std::sync::Arc;

use super::{compose, identity, same_map, Cell, CellKind, Monoidal};
use crate::algebra::Algebra;
use crate::error::{invariant, precondition, Result};
use crate::finset::map_part;
use crate::monad::{MonadMorphism, MorphismKind, TElem};
use crate::report::{Check, Report};
use crate::tensor::{induce, picks, Tensor};

/// (A, a·φ_A) as an algebra for the source monad.
pub fn restrict_algebra(phi: &MonadMorphism, a: &Algebra) -> Result<Algebra> {
    if phi.kind == MorphismKind::Identity && phi.corruption.is_none() {
        return Ok(a.clone());
    }
    let (s, t) = (&phi.source, &phi.target);
    let n = a.size();
    let table = (0..s.t_count(n)?).map(|x| a.act(t, phi.apply(n, x))).collect();
    Algebra::from_table(s, a.carrier.clone(), table)
}

/// Source and target monoidal categories of a monad morphism.
pub struct FunctorData<'p> {
    pub phi: &'p MonadMorphism,
    pub source: Monoidal<'p>,
    pub target: Monoidal<'p>,
}

impl<'p> FunctorData<'p> {
    /// Checks that φ is a monoidal monad morphism on small carriers before building anything.
    pub fn new(phi: &'p MonadMorphism) -> Result<FunctorData<'p>> {
        let r = phi.check(true, 2)?;
        if let Some(c) = r.first_failure() {
            return Err(precondition(format!("{} is not a monoidal monad morphism: {}: {}", phi.name(), c.name, c.witness.clone().unwrap_or_default())));
        }
        Ok(FunctorData { phi, source: Monoidal::new(&phi.source)?, target: Monoidal::new(&phi.target)? })
    }

    pub fn restrict(&self, a: &Algebra) -> Result<Algebra> {
        restrict_algebra(self.phi, a)
    }

    /// The source tensor C^φA ⊛ C^φB.
    pub fn source_tensor(&self, a: &Algebra, b: &Algebra) -> Result<Arc<Tensor>> {
        self.source.tensor(&self.restrict(a)?, &self.restrict(b)?)
    }

    /// φ̄_{A,B} with φ̄·p = q·φ, read off over every element of S(W).
    pub fn comparison(&self, a: &Algebra, b: &Algebra) -> Result<Cell> {
        let (sm, tm) = (&self.phi.source, &self.phi.target);
        let base = sm.base;
        let p = self.source_tensor(a, b)?;
        let q = self.target.tensor(a, b)?;
        let pk = picks(sm, &[&p.left, &p.right]);
        let (wa, wb) = (pk[0].len(), pk[1].len());
        let w = base.size(wa, wb);
        let elem = |z: usize| base.join(a.size(), b.size(), map_part(base.split(wa, wb, z), |i| pk[0][i], |i| pk[1][i]));
        let map = induce(
            sm,
            w,
            p.alg.size(),
            &|t: TElem| p.alg.eval(sm, w, t, |z| p.j[elem(z)]),
            &|t: TElem| q.alg.eval(tm, w, self.phi.apply(w, t), |z| q.j[elem(z)]),
            "φ̄",
        )?;
        let target = self.restrict(&q.alg)?;
        if let Some(wit) = p.alg.hom_witness(sm, &target, &map) {
            return Err(invariant(format!("φ̄ is not a homomorphism: {wit}")));
        }
        let mut report = Report::new();
        report.push(Check::pass("homomorphism", p.alg.size() as u64));
        report.push(Check::pass("defining square", sm.t_count(w)? as u64));
        Ok(Cell { kind: CellKind::FunctorComparison, map, report })
    }

    /// Associativity and unit squares for (C^φ, φ̄, φ_E), and naturality of φ̄ along
    /// the sampled homomorphisms f: A -> A2, g: B -> B2.
    pub fn check_coherence(&self, a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Report> {
        let (s, t) = (&self.source, &self.target);
        let mut r = Report::new();
        let (ra, rb, rc) = (self.restrict(a)?, self.restrict(b)?, self.restrict(c)?);
        let ab = t.tensor(a, b)?.alg.clone();
        let bc = t.tensor(b, c)?.alg.clone();
        let sab = s.tensor(&ra, &rb)?.alg.clone();
        let sbc = s.tensor(&rb, &rc)?.alg.clone();
        let (rab, rbc) = (self.restrict(&ab)?, self.restrict(&bc)?);
        // C^φ(ᾱ)·φ̄_{A⊠B,C}·(φ̄_{A,B}⊛1) = φ̄_{A,B⊠C}·(1⊛φ̄_{B,C})·ᾱ^S.
        let f_ab = self.comparison(a, b)?.map;
        let f_bc = self.comparison(b, c)?.map;
        let lhs = compose(
            &t.associator(a, b, c)?.map,
            &compose(&self.comparison(&ab, c)?.map, &s.tensor_homs((&sab, &rab, &f_ab), (&rc, &rc, &identity(c.size())))?),
        );
        let rhs = compose(
            &self.comparison(a, &bc)?.map,
            &compose(&s.tensor_homs((&ra, &ra, &identity(a.size())), (&sbc, &rbc, &f_bc))?, &s.associator(&ra, &rb, &rc)?.map),
        );
        r.push(same_map("associativity square", &lhs, &rhs));
        // λ̄^T·φ̄_{TE,A}·(φ_E⊛1) = λ̄^S, and the right-hand analogue.
        let ne = self.phi.source.e_size();
        let (se, te) = (s.unit().clone(), t.unit().clone());
        let phi_e: Vec<usize> = (0..se.size()).map(|x| self.phi.apply(ne, x)).collect();
        let rte = self.restrict(&te)?;
        let one_a = identity(a.size());
        let left = compose(
            &t.left_unitor(a)?.0.map,
            &compose(&self.comparison(&te, a)?.map, &s.tensor_homs((&se, &rte, &phi_e), (&ra, &ra, &one_a))?),
        );
        r.push(same_map("left unit square", &left, &s.left_unitor(&ra)?.0.map));
        let right = compose(
            &t.right_unitor(a)?.0.map,
            &compose(&self.comparison(a, &te)?.map, &s.tensor_homs((&ra, &ra, &one_a), (&se, &rte, &phi_e))?),
        );
        r.push(same_map("right unit square", &right, &s.right_unitor(&ra)?.0.map));
        // Naturality along a sampled pair of homomorphisms A -> B and B -> C.
        let homs_ab = a.enumerate_homs(&self.phi.target, b)?;
        let homs_bc = b.enumerate_homs(&self.phi.target, c)?;
        if let (Some(f), Some(g)) = (homs_ab.get(homs_ab.len() / 2), homs_bc.get(homs_bc.len() / 2)) {
            let fg_s = s.tensor_homs((&ra, &rb, f), (&rb, &rc, g))?;
            let fg_t = t.tensor_homs((a, b, f), (b, c, g))?;
            r.push(same_map(
                "φ̄ natural",
                &compose(&self.comparison(b, c)?.map, &fg_s),
                &compose(&fg_t, &f_ab),
            ));
        }
        Ok(r)
    }
}

/// (C^φA, C^φB, C^φA ⊛ C^φB, φ̄_{A,B}) with the coherence report for (A, B, B).
pub fn algebraic_functor_monoidal(phi: &MonadMorphism, a: &Algebra, b: &Algebra) -> Result<(Algebra, Algebra, Algebra, Cell, Report)> {
    let data = FunctorData::new(phi)?;
    let p = data.source_tensor(a, b)?;
    let cell = data.comparison(a, b)?;
    let report = data.check_coherence(a, b, b)?;
    Ok((p.left.clone(), p.right.clone(), p.alg.clone(), cell, report))
}
