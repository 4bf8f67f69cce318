use serde_json::{json, Value};

use super::{Command, Outcome};
use crate::actions::{self, action_census, check_action, check_monoid, check_monoid_hom, restrict_scalars, roundtrip_action, roundtrip_algebra, ActionMonad, MonoidObject};
use crate::algebra::Algebra;
use crate::bimorphism::{enumerate_bimorphisms, is_bimorphism};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::fixtures::{chain, free_on, sup_fixtures, vector_fixtures};
use crate::io::{algebra_json, labelled, load_algebra, load_monoid, load_monoid_hom, parse_algebra, read_json};
use crate::monad::{MonadKind, MonadMorphism, Monad};
use crate::monoidal::{check_coherence, identity, CoherenceGrid, Monoidal};
use crate::report::{Check, Report};
use crate::tensor::{bimorphism_of_hom, classify_bimorphism, tensor_with, Presentation};

pub(super) fn dispatch(m: &Monad, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Laws { sizes, kappa } => laws(m, sizes, kappa),
        Command::Tensor { a, b, alt } => tensor(m, a, b, *alt),
        Command::Bimorphisms { a, b, c } => bimorphisms(m, a, b, c),
        Command::Coherence { fixtures } => coherence(m, fixtures.as_deref()),
        Command::MonoidCheck { monoid } => monoid_check(m, monoid),
        Command::ActionMonad { monoid, x } => action_monad(m, monoid, *x),
        Command::Monadicity { monoid, max_algebra, x } => monadicity(m, monoid, *max_algebra, *x),
        Command::Restrict { hom, max_algebra } => restrict(m, hom, *max_algebra),
        Command::KleisliRoundtrip { max } => kleisli(m, *max),
    }
}

/// A file path, or a builtin name: `C<n>` (chain), `D4`, `F<n>` (free on n generators).
fn algebra_arg(m: &Monad, spec: &str) -> Result<Algebra> {
    if std::path::Path::new(spec).exists() {
        return load_algebra(m, spec);
    }
    let num = |s: &str| s.parse::<usize>().ok();
    match spec {
        "D4" => crate::fixtures::d4(m),
        s if s.starts_with('C') && num(&s[1..]).is_some() => chain(m, num(&s[1..]).unwrap()),
        s if s.starts_with('F') && num(&s[1..]).is_some() => free_on(m, num(&s[1..]).unwrap()),
        _ => Err(Error::Parse(format!("{spec:?} is neither a readable file nor a builtin algebra"))),
    }
}

fn checked_algebra(m: &Monad, spec: &str, role: &str, r: &mut Report) -> Result<Algebra> {
    let a = algebra_arg(m, spec)?;
    r.extend(a.check(m)?.scoped(&format!("{role} is an algebra")));
    Ok(a)
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad size {x:?} in --sizes"))))
        .collect()
}

fn laws(m: &Monad, sizes: &str, kappa: &str) -> Result<Outcome> {
    let sizes = parse_sizes(sizes)?;
    let [nx, ny, nz] = sizes[..] else {
        return Err(Error::Parse("--sizes takes three comma-separated sizes".into()));
    };
    let mut o = Outcome::default();
    let mut distinct = sizes.clone();
    distinct.sort();
    distinct.dedup();
    for n in distinct {
        o.report.extend(m.check_monad_laws(n)?.scoped(&format!("|X| = {n}")));
    }
    let monoidal = match kappa {
        "standard" => m.check_monoidal_laws((nx, ny, nz))?,
        "additive" => m.check_monoidal_laws_with((nx, ny, nz), &|a, b, p| m.kappa_additive(a, b, p))?,
        other => return Err(Error::Parse(format!("unknown --kappa {other:?}"))),
    };
    o.report.extend(monoidal.scoped(&format!("κ {kappa} at ({nx},{ny},{nz})")));
    Ok(o)
}

fn tensor(m: &Monad, a: &str, b: &str, alt: bool) -> Result<Outcome> {
    let mut o = Outcome::default();
    let a = checked_algebra(m, a, "A", &mut o.report)?;
    let b = checked_algebra(m, b, "B", &mut o.report)?;
    if !o.report.all_pass() {
        return Ok(o);
    }
    let pres = if alt { Presentation::OneSided } else { Presentation::Standard };
    let t = tensor_with(m, &a, &b, pres)?;
    let ab = m.base.tensor(&a.carrier, &b.carrier);
    let ok = is_bimorphism(m, &a, &b, &t.alg, &t.j)?;
    o.report.push(if ok { Check::pass("j is a bimorphism", t.j.len() as u64) } else { Check::fail("j is a bimorphism", t.j.len() as u64, "j fails the bimorphism squares") });
    o.carriers.insert("A".into(), json!(a.labels()));
    o.carriers.insert("B".into(), json!(b.labels()));
    o.carriers.insert("tensor".into(), json!(t.alg.labels()));
    o.tables.insert("size".into(), json!(t.alg.size()));
    o.tables.insert("mode".into(), json!(format!("{:?}", t.mode).to_lowercase()));
    let q = if m.t_size(ab.size()).is_some_and(|s| s <= m.guard) { json!(t.q_table(m)?) } else { Value::Null };
    o.tables.insert("q".into(), q);
    o.tables.insert("structure".into(), algebra_json(m, &t.alg)?);
    o.tables.insert("universal-bimorphism".into(), labelled(&ab, &t.alg.carrier, &t.j));
    Ok(o)
}

fn bimorphisms(m: &Monad, a: &str, b: &str, c: &str) -> Result<Outcome> {
    let mut o = Outcome::default();
    let a = checked_algebra(m, a, "A", &mut o.report)?;
    let b = checked_algebra(m, b, "B", &mut o.report)?;
    let c = checked_algebra(m, c, "C", &mut o.report)?;
    if !o.report.all_pass() {
        return Ok(o);
    }
    let bims = enumerate_bimorphisms(m, &a, &b, &c)?;
    let t = tensor_with(m, &a, &b, Presentation::Standard)?;
    let homs = t.alg.enumerate_homs(m, &c)?;
    o.report.push(if bims.len() == homs.len() {
        Check::pass("|Bim(A,B;C)| = |Hom(A⊠B,C)|", bims.len() as u64)
    } else {
        Check::fail("|Bim(A,B;C)| = |Hom(A⊠B,C)|", bims.len() as u64, format!("{} bimorphisms, {} homomorphisms", bims.len(), homs.len()))
    });
    o.report.elementwise("bimorphism -> hom -> bimorphism", bims.len() as u64, |i| {
        let f = &bims[i as usize];
        let g = classify_bimorphism(m, &t, &c, f).ok()?;
        (!t.alg.is_hom(m, &c, &g) || bimorphism_of_hom(m, &t, &c, &g).ok()? != *f).then(|| format!("bimorphism {i}"))
    });
    o.report.elementwise("hom -> bimorphism -> hom", homs.len() as u64, |i| {
        let g = &homs[i as usize];
        let f = bimorphism_of_hom(m, &t, &c, g).ok()?;
        (classify_bimorphism(m, &t, &c, &f).ok()? != *g).then(|| format!("homomorphism {i}"))
    });
    let ab = m.base.tensor(&a.carrier, &b.carrier);
    o.carriers.insert("A".into(), json!(a.labels()));
    o.carriers.insert("B".into(), json!(b.labels()));
    o.carriers.insert("C".into(), json!(c.labels()));
    o.tables.insert("count".into(), json!(bims.len()));
    o.tables.insert("bimorphisms".into(), Value::Array(bims.iter().map(|f| labelled(&ab, &c.carrier, f)).collect()));
    Ok(o)
}

fn default_grid(m: &Monad) -> Result<Vec<(String, Algebra)>> {
    Ok(match m.kind {
        MonadKind::Identity => (1..=2).map(|n| Ok((format!("X{n}"), free_on(m, n)?))).collect::<Result<_>>()?,
        MonadKind::Powerset => sup_fixtures(m)?.into_iter().filter(|(n, _)| n != "D4").collect(),
        MonadKind::VectorSpace { .. } => vector_fixtures(m, 1)?,
    })
}

fn coherence(m: &Monad, fixtures: Option<&str>) -> Result<Outcome> {
    let mut o = Outcome::default();
    let (algebras, pentagon) = match fixtures {
        None => (default_grid(m)?, true),
        Some(path) => {
            let v = read_json(path)?;
            let algs = v.get("algebras").and_then(Value::as_object).ok_or_else(|| Error::Parse("fixtures need an \"algebras\" object".into()))?;
            let algebras = algs.iter().map(|(k, a)| Ok((k.clone(), parse_algebra(m, a)?))).collect::<Result<Vec<_>>>()?;
            (algebras, v.get("pentagon").and_then(Value::as_bool).unwrap_or(true))
        }
    };
    for (name, a) in &algebras {
        o.report.extend(a.check(m)?.scoped(&format!("{name} is an algebra")));
        o.carriers.insert(name.clone(), json!(a.labels()));
    }
    if !o.report.all_pass() {
        return Ok(o);
    }
    let mon = Monoidal::new(m)?;
    let grid = CoherenceGrid { algebras, pentagon, symmetric: true };
    o.report.extend(check_coherence(&mon, &grid)?);
    Ok(o)
}

fn monoid_tables(mon: &Monoidal, mo: &MonoidObject, o: &mut Outcome) -> Result<()> {
    let m = mon.m;
    let a = &mo.alg;
    let mm = m.base.tensor(&a.carrier, &a.carrier);
    let t = mon.tensor(a, a)?;
    let mul: Vec<usize> = (0..mm.size()).map(|z| mo.mul[t.j[z]]).collect();
    o.carriers.insert("M".into(), json!(a.labels()));
    o.tables.insert("multiplication".into(), labelled(&mm, &a.carrier, &mul));
    if let Some(e) = mo.unit_elem(m) {
        o.tables.insert("unit".into(), json!(a.carrier.label(e)));
    }
    Ok(())
}

fn monoid_check(m: &Monad, spec: &str) -> Result<Outcome> {
    let mon = Monoidal::new(m)?;
    let mo = load_monoid(&mon, spec)?;
    let mut o = Outcome::default();
    o.report.extend(mo.alg.check(m)?.scoped("M is an algebra"));
    o.report.extend(check_monoid(&mon, &mo)?);
    monoid_tables(&mon, &mo, &mut o)?;
    Ok(o)
}

fn action_monad(m: &Monad, spec: &str, nx: usize) -> Result<Outcome> {
    let mon = Monoidal::new(m)?;
    let mo = load_monoid(&mon, spec)?;
    let mut o = Outcome::default();
    monoid_tables(&mon, &mo, &mut o)?;
    let am = ActionMonad::new(&mon, mo)?;
    let x = FinSet::range(nx);
    let fx = am.f_set(&x)?;
    o.report.extend(am.check_laws(&x)?);
    o.report.extend(am.check_tau(&x)?);
    o.carriers.insert("X".into(), json!(x.labels()));
    o.tables.insert("FX-size".into(), json!(fx.alg.size()));
    let eta = am.eta(&x)?;
    o.tables.insert("unit".into(), labelled(&x, &fx.alg.carrier, &eta));
    Ok(o)
}

fn monadicity(m: &Monad, spec: &str, max: usize, free: Option<usize>) -> Result<Outcome> {
    let mon = Monoidal::new(m)?;
    let mo = load_monoid(&mon, spec)?;
    let am = ActionMonad::new(&mon, mo.clone())?;
    let mut o = Outcome::default();
    let census = action_census(&mon, &mo, max)?;
    let mut by_size = vec![0usize; max + 1];
    for (i, action) in census.iter().enumerate() {
        by_size[action.alg.size()] += 1;
        let fa = am.comparison(action)?;
        o.report.extend(am.check_algebra(&fa)?.scoped(&format!("K(action {i})")));
        let mut c = roundtrip_action(&am, action)?;
        c.name = format!("K⁻¹K = 1 on action {i}");
        o.report.push(c);
    }
    for n in free.map_or(0..0, |x| 0..x + 1) {
        let fa = am.free_algebra(&FinSet::range(n))?;
        let mut c = roundtrip_algebra(&am, &fa)?;
        c.name = format!("KK⁻¹ = 1 on the free algebra F({n})");
        o.report.push(c);
    }
    monoid_tables(&mon, &mo, &mut o)?;
    o.tables.insert("census".into(), json!(census.len()));
    o.tables.insert("census-by-size".into(), json!(by_size));
    Ok(o)
}

fn restrict(m: &Monad, path: &str, max: usize) -> Result<Outcome> {
    let mon = Monoidal::new(m)?;
    let h = load_monoid_hom(&mon, path)?;
    let mut o = Outcome::default();
    o.report.extend(check_monoid(&mon, &h.source)?.scoped("N is a monoid"));
    o.report.extend(check_monoid(&mon, &h.target)?.scoped("M is a monoid"));
    o.report.extend(check_monoid_hom(&mon, &h.source, &h.target, &h.map)?);
    if !o.report.all_pass() {
        return Ok(o);
    }
    let census = action_census(&mon, &h.target, max)?;
    let restricted: Vec<_> = census.iter().map(|a| restrict_scalars(&mon, &h.source, &h.target, &h.map, a)).collect::<Result<_>>()?;
    for (i, r) in restricted.iter().enumerate() {
        o.report.extend(check_action(&mon, &h.source, r)?.scoped(&format!("restricted action {i}")));
        let id = restrict_scalars(&mon, &h.target, &h.target, &identity(h.target.alg.size()), &census[i])?;
        o.report.push(if id == census[i] {
            Check::pass(format!("restriction along 1 fixes action {i}"), 1)
        } else {
            Check::fail(format!("restriction along 1 fixes action {i}"), 1, "actions differ")
        });
    }
    o.report.extend(actions::restriction_preserves_equivariance(&mon, &h.target, &h.source, &census, &restricted)?);
    o.carriers.insert("N".into(), json!(h.source.alg.labels()));
    o.carriers.insert("M".into(), json!(h.target.alg.labels()));
    o.tables.insert("map".into(), labelled(&h.source.alg.carrier, &h.target.alg.carrier, &h.map));
    o.tables.insert("census".into(), json!(census.len()));
    Ok(o)
}

fn kleisli(m: &Monad, max: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    o.report.extend(m.check_kleisli_roundtrip(max)?);
    o.report.extend(MonadMorphism::unit(m).check_kleisli_functor(max)?.scoped("unit morphism"));
    Ok(o)
}
