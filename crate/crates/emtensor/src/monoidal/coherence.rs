//! Pentagon, triangle, hexagon, symmetry and naturality on a grid of algebras.

use super::{compose, identity, same_map, Monoidal};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::report::Report;

/// Named algebras; every tuple drawn from them is checked.
#[derive(Clone, Debug)]
pub struct CoherenceGrid {
    pub algebras: Vec<(String, Algebra)>,
    /// Check the pentagon on all quadruples.
    pub pentagon: bool,
    /// Check the hexagon and σ̄² = 1.
    pub symmetric: bool,
}

/// A deterministic non-trivial sample from Hom(A, B): the middle of the enumeration.
fn sample_hom(mon: &Monoidal, a: &Algebra, b: &Algebra) -> Result<Option<Vec<usize>>> {
    let homs = a.enumerate_homs(mon.m, b)?;
    Ok(homs.get(homs.len() / 2).cloned())
}

pub fn check_coherence(mon: &Monoidal, grid: &CoherenceGrid) -> Result<Report> {
    let mut r = Report::new();
    let algs = &grid.algebras;
    let n = algs.len();
    let unit = mon.unit().clone();
    for (na, a) in algs {
        let (l, _) = mon.left_unitor(a)?;
        let (rr, _) = mon.right_unitor(a)?;
        r.extend(l.report.scoped(&format!("λ̄ {na}")));
        r.extend(rr.report.scoped(&format!("ρ̄ {na}")));
    }
    for (na, a) in algs {
        for (nb, b) in algs {
            let tag = format!("({na},{nb})");
            // Triangle: (1⊠λ̄)·ᾱ = ρ̄⊠1 on (A⊠TE)⊠B.
            let alpha = mon.associator(a, &unit, b)?;
            let (lam, _) = mon.left_unitor(b)?;
            let (rho, _) = mon.right_unitor(a)?;
            let ae = mon.tensor(a, &unit)?.alg.clone();
            let eb = mon.tensor(&unit, b)?.alg.clone();
            let one_lam = mon.tensor_homs((a, a, &identity(a.size())), (&eb, b, &lam.map))?;
            let rho_one = mon.tensor_homs((&ae, a, &rho.map), (b, b, &identity(b.size())))?;
            r.push(same_map(format!("triangle {tag}"), &compose(&one_lam, &alpha.map), &rho_one));
            if grid.symmetric {
                let s = mon.braiding(a, b)?;
                let s2 = mon.braiding(b, a)?;
                r.extend(s.report.clone().scoped(&format!("σ̄ {tag}")));
                r.push(same_map(format!("σ̄² = 1 {tag}"), &compose(&s2.map, &s.map), &identity(s.map.len())));
            }
        }
    }
    for (na, a) in algs {
        for (nb, b) in algs {
            for (nc, c) in algs {
                let tag = format!("({na},{nb},{nc})");
                let al = mon.associator(a, b, c)?;
                let inv = mon.associator_inv(a, b, c)?;
                r.extend(al.report.clone().scoped(&format!("ᾱ {tag}")));
                r.push(same_map(format!("ᾱ⁻¹·ᾱ = 1 {tag}"), &compose(&inv.map, &al.map), &identity(al.map.len())));
                if grid.symmetric {
                    r.push(hexagon(mon, a, b, c, &tag)?);
                }
            }
        }
    }
    if grid.pentagon {
        for (na, a) in algs {
            for (nb, b) in algs {
                for (nc, c) in algs {
                    for (nd, d) in algs {
                        r.push(pentagon(mon, a, b, c, d, &format!("({na},{nb},{nc},{nd})"))?);
                    }
                }
            }
        }
    }
    // Naturality against sampled homomorphisms between neighbouring grid objects.
    for i in 0..n {
        for s in 0..2.min(n) {
            let (na, a) = &algs[i];
            let (na2, a2) = &algs[(i + s) % n];
            let Some(f) = sample_hom(mon, a, a2)? else { continue };
            let tag = format!("{na}->{na2}");
            let (l1, _) = mon.left_unitor(a)?;
            let (l2, _) = mon.left_unitor(a2)?;
            let one_f = mon.tensor_homs((&unit, &unit, &identity(unit.size())), (a, a2, &f))?;
            r.push(same_map(format!("λ̄ natural {tag}"), &compose(&f, &l1.map), &compose(&l2.map, &one_f)));
            let (r1, _) = mon.right_unitor(a)?;
            let (r2, _) = mon.right_unitor(a2)?;
            let f_one = mon.tensor_homs((a, a2, &f), (&unit, &unit, &identity(unit.size())))?;
            r.push(same_map(format!("ρ̄ natural {tag}"), &compose(&f, &r1.map), &compose(&r2.map, &f_one)));
            for j in 0..n {
                let (nb, b) = &algs[j];
                let (nb2, b2) = &algs[(j + 1) % n];
                let Some(g) = sample_hom(mon, b, b2)? else { continue };
                let tag2 = format!("{tag}, {nb}->{nb2}");
                if grid.symmetric {
                    let fg = mon.tensor_homs((a, a2, &f), (b, b2, &g))?;
                    let gf = mon.tensor_homs((b, b2, &g), (a, a2, &f))?;
                    let s1 = mon.braiding(a, b)?;
                    let s2 = mon.braiding(a2, b2)?;
                    r.push(same_map(format!("σ̄ natural {tag2}"), &compose(&s2.map, &fg), &compose(&gf, &s1.map)));
                }
                let (nc, c) = &algs[(i + j) % n];
                let h = identity(c.size());
                let ab = mon.tensor(a, b)?.alg.clone();
                let ab2 = mon.tensor(a2, b2)?.alg.clone();
                let bc = mon.tensor(b, c)?.alg.clone();
                let bc2 = mon.tensor(b2, c)?.alg.clone();
                let fg = mon.tensor_homs((a, a2, &f), (b, b2, &g))?;
                let left = mon.tensor_homs((&ab, &ab2, &fg), (c, c, &h))?;
                let gh = mon.tensor_homs((b, b2, &g), (c, c, &h))?;
                let right = mon.tensor_homs((a, a2, &f), (&bc, &bc2, &gh))?;
                let al1 = mon.associator(a, b, c)?;
                let al2 = mon.associator(a2, b2, c)?;
                r.push(same_map(
                    format!("ᾱ natural {tag2}, {nc}"),
                    &compose(&al2.map, &left),
                    &compose(&right, &al1.map),
                ));
            }
        }
    }
    Ok(r)
}

fn pentagon(mon: &Monoidal, a: &Algebra, b: &Algebra, c: &Algebra, d: &Algebra, tag: &str) -> Result<crate::report::Check> {
    let ab = mon.tensor(a, b)?.alg.clone();
    let bc = mon.tensor(b, c)?.alg.clone();
    let cd = mon.tensor(c, d)?.alg.clone();
    let abc_l = mon.tensor(&ab, c)?.alg.clone();
    let abc_r = mon.tensor(a, &bc)?.alg.clone();
    let bcd_l = mon.tensor(&bc, d)?.alg.clone();
    let bcd_r = mon.tensor(b, &cd)?.alg.clone();
    let path1 = compose(&mon.associator(a, b, &cd)?.map, &mon.associator(&ab, c, d)?.map);
    let a1 = mon.tensor_homs((&abc_l, &abc_r, &mon.associator(a, b, c)?.map), (d, d, &identity(d.size())))?;
    let a2 = mon.associator(a, &bc, d)?.map;
    let a3 = mon.tensor_homs((a, a, &identity(a.size())), (&bcd_l, &bcd_r, &mon.associator(b, c, d)?.map))?;
    let path2 = compose(&a3, &compose(&a2, &a1));
    Ok(same_map(format!("pentagon {tag}"), &path1, &path2))
}

fn hexagon(mon: &Monoidal, a: &Algebra, b: &Algebra, c: &Algebra, tag: &str) -> Result<crate::report::Check> {
    let ab = mon.tensor(a, b)?.alg.clone();
    let ba = mon.tensor(b, a)?.alg.clone();
    let bc = mon.tensor(b, c)?.alg.clone();
    let lhs = compose(
        &mon.associator(b, c, a)?.map,
        &compose(&mon.braiding(a, &bc)?.map, &mon.associator(a, b, c)?.map),
    );
    let s_one = mon.tensor_homs((&ab, &ba, &mon.braiding(a, b)?.map), (c, c, &identity(c.size())))?;
    let ca = mon.tensor(c, a)?.alg.clone();
    let ac = mon.tensor(a, c)?.alg.clone();
    let one_s = mon.tensor_homs((b, b, &identity(b.size())), (&ac, &ca, &mon.braiding(a, c)?.map))?;
    let rhs = compose(&one_s, &compose(&mon.associator(b, a, c)?.map, &s_one));
    Ok(same_map(format!("hexagon {tag}"), &lhs, &rhs))
}
