//! Acceptance criteria 1–13. Each criterion prints one PASS/FAIL line with its wall time;
//! a criterion that exceeds its time limit fails. Runs without the libtest harness so the
//! lines are always printed.

use std::time::{Duration, Instant};

use emtensor::actions::{
    self, action_census, check_action, check_monoid_hom, corrupt_unit, quantale_power_iso, restrict_scalars,
    restriction_preserves_equivariance, roundtrip_action, roundtrip_algebra, v3, c2_monoid, Action, ActionMonad,
};
use emtensor::algebra::{coequalizer_em, enumerate_algebras, verify_coequalizer_universal, Algebra, GeneratorPairs};
use emtensor::bimorphism::{bimorphism_witness, enumerate_bimorphisms, is_bimorphism, is_bimorphism_componentwise};
use emtensor::finset::{BaseKind, FinSet, Part};
use emtensor::fixtures::{chain, free_on, sup_fixtures, vector_fixtures};
use emtensor::monad::{all_maps, Fork, Monad, MonadMorphism};
use emtensor::monoidal::{check_coherence, compose, identity, verify_induced_presentations, CoherenceGrid, Monoidal};
use emtensor::report::Report;
use emtensor::tensor::{
    bimorphism_of_hom, classify_bimorphism, free_tensor_identification, tensor_product, tensor_product_alt,
};
use emtensor::Result;

/// (passed, one-line detail)
type Verdict = Result<(bool, String)>;

fn criterion(n: u32, title: &str, limit: Duration, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = f();
    let elapsed = start.elapsed();
    let (pass, detail) = match verdict {
        Ok((_, d)) if elapsed > limit => (false, format!("{d}; over the {}s limit", limit.as_secs())),
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    println!(
        "criterion {n:>2} {} {title} [{:.1}s] {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    pass
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Folds reports into a verdict that names the first failing check.
fn verdict(reports: impl IntoIterator<Item = (String, Report)>) -> (bool, String) {
    let mut total = 0usize;
    for (what, r) in reports {
        total += r.checks.len();
        if let Some(c) = r.first_failure() {
            return (false, format!("{what}: {}: {}", c.name, c.witness.clone().unwrap_or_default()));
        }
    }
    (true, format!("{total} checks"))
}

fn law_monads() -> Vec<Monad> {
    vec![
        Monad::identity(BaseKind::Cartesian),
        Monad::powerset(BaseKind::Cartesian),
        Monad::powerset(BaseKind::Cocartesian),
        Monad::vector_space(2, BaseKind::Cartesian).unwrap(),
    ]
}

fn label(m: &Monad) -> String {
    format!("{} ({})", m.name(), m.base.name())
}

fn canonical(p: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    p.iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

fn sup_census(m: &Monad, max: usize) -> Result<Vec<Algebra>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_algebras(m, n)?);
    }
    Ok(out)
}

fn c1_laws() -> Verdict {
    let mut reports = Vec::new();
    for m in law_monads() {
        for n in 0..=3 {
            reports.push((format!("{} |X| = {n}", label(&m)), m.check_monad_laws(n)?));
        }
        for nx in 0..=3 {
            for ny in 0..=3 {
                for nz in 0..=3 {
                    reports.push((format!("{} ({nx},{ny},{nz})", label(&m)), m.check_monoidal_laws((nx, ny, nz))?));
                }
            }
        }
    }
    Ok(verdict(reports))
}

fn c2_kleisli() -> Verdict {
    let mut reports = Vec::new();
    for m in law_monads() {
        reports.push((label(&m), m.check_kleisli_roundtrip(2)?));
    }
    Ok(verdict(reports))
}

fn c3_bimorphism_forms() -> Verdict {
    let sup = Monad::powerset(BaseKind::Cartesian);
    let vs = Monad::vector_space(2, BaseKind::Cartesian)?;
    let grids = [(&sup, sup_census(&sup, 3)?), (&vs, vec![free_on(&vs, 0)?, free_on(&vs, 1)?])];
    let mut maps = 0u64;
    for (m, algs) in &grids {
        for a in algs {
            for b in algs {
                for c in algs {
                    for f in all_maps(m.base.size(a.size(), b.size()), c.size()) {
                        maps += 1;
                        if is_bimorphism(m, a, b, c, &f)? != is_bimorphism_componentwise(m, a, b, c, &f)? {
                            return Ok((false, format!("{}: forms disagree on {f:?} for {a:?}, {b:?}, {c:?}", m.name())));
                        }
                    }
                }
            }
        }
    }
    Ok((true, format!("{maps} maps compared")))
}

fn c4_presentations_agree() -> Verdict {
    let sup = Monad::powerset(BaseKind::Cartesian);
    let vs = Monad::vector_space(2, BaseKind::Cartesian)?;
    let mut pairs = 0;
    for (m, fx) in [(&sup, sup_fixtures(&sup)?), (&vs, vector_fixtures(&vs, 2)?)] {
        for (na, a) in &fx {
            for (nb, b) in &fx {
                let (s, l) = (tensor_product(m, a, b)?, tensor_product_alt(m, a, b)?);
                if canonical(&s.q_table(m)?) != canonical(&l.q_table(m)?) {
                    return Ok((false, format!("{na}⊠{nb}: partitions differ")));
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("{pairs} fixture pairs")))
}

fn c5_free_identification() -> Verdict {
    let mut reports = Vec::new();
    for m in [Monad::powerset(BaseKind::Cartesian), Monad::vector_space(2, BaseKind::Cartesian)?] {
        for nx in 0..=2 {
            for ny in 0..=2 {
                let id = free_tensor_identification(&m, &FinSet::range(nx), &FinSet::range(ny))?;
                reports.push((format!("{} T{nx}⊠T{ny}", m.name()), id.report));
            }
        }
    }
    Ok(verdict(reports))
}

fn c6_representation() -> Verdict {
    let sup = Monad::powerset(BaseKind::Cartesian);
    let vs = Monad::vector_space(2, BaseKind::Cartesian)?;
    let mut triples = 0;
    for (m, fx) in [(&sup, sup_fixtures(&sup)?), (&vs, vector_fixtures(&vs, 2)?)] {
        for (na, a) in &fx {
            for (nb, b) in &fx {
                let t = tensor_product(m, a, b)?;
                for (nc, c) in &fx {
                    let tag = format!("{}: ({na},{nb};{nc})", m.name());
                    let bims = enumerate_bimorphisms(m, a, b, c)?;
                    let homs = t.alg.enumerate_homs(m, c)?;
                    if bims.len() != homs.len() {
                        return Ok((false, format!("{tag}: {} bimorphisms, {} homomorphisms", bims.len(), homs.len())));
                    }
                    for f in &bims {
                        let g = classify_bimorphism(m, &t, c, f)?;
                        if !t.alg.is_hom(m, c, &g) || bimorphism_of_hom(m, &t, c, &g)? != *f {
                            return Ok((false, format!("{tag}: bimorphism {f:?} does not round-trip")));
                        }
                    }
                    for g in &homs {
                        if classify_bimorphism(m, &t, c, &bimorphism_of_hom(m, &t, c, g)?)? != *g {
                            return Ok((false, format!("{tag}: homomorphism {g:?} does not round-trip")));
                        }
                    }
                    triples += 1;
                }
            }
        }
    }
    Ok((true, format!("{triples} triples")))
}

fn c7_coherence() -> Verdict {
    let sup = Monad::powerset(BaseKind::Cartesian);
    let vs = Monad::vector_space(2, BaseKind::Cartesian)?;
    let chains = (1..=3).map(|n| Ok((format!("C{n}"), chain(&sup, n)?))).collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::new();
    for (m, algebras) in [(&sup, chains), (&vs, vector_fixtures(&vs, 2)?)] {
        let mon = Monoidal::new(m)?;
        let grid = CoherenceGrid { algebras, pentagon: true, symmetric: true };
        reports.push((m.name(), check_coherence(&mon, &grid)?));
    }
    Ok(verdict(reports))
}

fn c8_induced_presentations() -> Verdict {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m)?;
    let (c2, c3) = (chain(&m, 2)?, chain(&m, 3)?);
    let codomains = sup_census(&m, 3)?;
    Ok(verdict([
        ("(C3,C3,C2), (C3,C3,C2,C2)".to_string(), verify_induced_presentations(&mon, [&c3, &c3, &c2, &c2], &codomains)?),
        ("(C2,C3,C2), (C2,C3,C2,C2)".to_string(), verify_induced_presentations(&mon, [&c2, &c3, &c2, &c2], &codomains)?),
    ]))
}

fn c9_quantale_powers() -> Verdict {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m)?;
    let q = v3(&mon)?;
    let mut reports = Vec::new();
    for n in 0..=2 {
        let t = mon.tensor(&q.alg, &Algebra::free(&m, &FinSet::range(n))?)?;
        if t.alg.size() != 3usize.pow(n as u32) {
            return Ok((false, format!("|V3⊠P({n})| = {}", t.alg.size())));
        }
        let (_, r) = quantale_power_iso(&mon, &q.alg, n)?;
        reports.push((format!("|X| = {n}"), r));
    }
    Ok(verdict(reports))
}

fn c10_monadicity() -> Verdict {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m)?;
    let q = v3(&mon)?;
    let am = ActionMonad::new(&mon, q.clone())?;
    let mut reports = Vec::new();
    let census = action_census(&mon, &q, 3)?;
    for (i, action) in census.iter().enumerate() {
        let mut r = am.check_algebra(&am.comparison(action)?)?;
        r.push(roundtrip_action(&am, action)?);
        reports.push((format!("action {i}"), r));
    }
    for n in 0..=2 {
        let x = FinSet::range(n);
        let fa = am.free_algebra(&x)?;
        let mut r = am.check_algebra(&fa)?;
        r.push(roundtrip_algebra(&am, &fa)?);
        r.extend(am.check_laws(&x)?);
        r.extend(am.check_tau(&x)?);
        reports.push((format!("|X| = {n}"), r));
    }
    let (pass, detail) = verdict(reports);
    Ok((pass, format!("{} actions in the census; {detail}", census.len())))
}

fn c11_restriction() -> Verdict {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m)?;
    let (q, c2) = (v3(&mon)?, c2_monoid(&mon)?);
    let f = actions::chain_inclusion();
    let mut reports = vec![("C2 -> V3".to_string(), check_monoid_hom(&mon, &c2, &q, &f)?)];
    let census = action_census(&mon, &q, 3)?;
    let restricted: Vec<Action> = census.iter().map(|a| restrict_scalars(&mon, &c2, &q, &f, a)).collect::<Result<_>>()?;
    let one_q = identity(q.alg.size());
    let one_c2 = identity(c2.alg.size());
    for (i, (a, r)) in census.iter().zip(&restricted).enumerate() {
        reports.push((format!("restricted action {i}"), check_action(&mon, &c2, r)?));
        // Restriction along identities is the identity, and along f·1 = 1*·f*.
        if restrict_scalars(&mon, &q, &q, &one_q, a)? != *a {
            return Ok((false, format!("restriction along 1 moves action {i}")));
        }
        let via_identity = restrict_scalars(&mon, &c2, &c2, &one_c2, r)?;
        if restrict_scalars(&mon, &c2, &q, &compose(&f, &one_c2), a)? != via_identity {
            return Ok((false, format!("restriction along f·1 differs from 1*·f* on action {i}")));
        }
    }
    reports.push(("morphisms".into(), restriction_preserves_equivariance(&mon, &q, &c2, &census, &restricted)?));
    let (pass, detail) = verdict(reports);
    Ok((pass, format!("{} restricted actions; {detail}", census.len())))
}

fn c12_cocartesian_coproduct() -> Verdict {
    let m = Monad::powerset(BaseKind::Cocartesian);
    let codomains = sup_census(&m, 3)?;
    let fx = [chain(&m, 2)?, chain(&m, 3)?];
    let mut cases = 0;
    for a in &fx {
        for b in &fx {
            let t = tensor_product(&m, a, b)?;
            let inl: Vec<usize> = (0..a.size()).map(|x| t.j_part(&m, Part::Inl(x))).collect();
            let inr: Vec<usize> = (0..b.size()).map(|y| t.j_part(&m, Part::Inr(y))).collect();
            if !a.is_hom(&m, &t.alg, &inl) || !b.is_hom(&m, &t.alg, &inr) {
                return Ok((false, format!("injections of |A| = {}, |B| = {} are not homomorphisms", a.size(), b.size())));
            }
            for c in &codomains {
                let homs = t.alg.enumerate_homs(&m, c)?;
                let mut pairs: Vec<(Vec<usize>, Vec<usize>)> =
                    homs.iter().map(|g| (compose(g, &inl), compose(g, &inr))).collect();
                pairs.sort();
                pairs.dedup();
                let expected: Vec<(Vec<usize>, Vec<usize>)> = {
                    let (ha, hb) = (a.enumerate_homs(&m, c)?, b.enumerate_homs(&m, c)?);
                    let mut v: Vec<_> = ha.iter().flat_map(|h| hb.iter().map(move |k| (h.clone(), k.clone()))).collect();
                    v.sort();
                    v
                };
                if pairs.len() != homs.len() || pairs != expected {
                    return Ok((false, format!("copairing is not a bijection onto Hom(A,C)×Hom(B,C) for |C| = {}", c.size())));
                }
                cases += 1;
            }
        }
    }
    Ok((true, format!("{cases} (A, B, C) cases")))
}

/// A control passes when the checker rejects it and names a witness.
fn rejected(name: &str, r: Result<Report>) -> std::result::Result<String, String> {
    match r {
        Ok(r) => match r.first_failure() {
            Some(c) if c.witness.as_deref().is_some_and(|w| !w.is_empty()) => Ok(format!("{name}: {}", c.witness.clone().unwrap())),
            Some(_) => Err(format!("{name}: failed without a witness")),
            None => Err(format!("{name}: was accepted")),
        },
        Err(e) => Ok(format!("{name}: rejected with {e}")),
    }
}

fn exit_code(args: &[&str]) -> i32 {
    std::process::Command::new(env!("CARGO_BIN_EXE_emtensor"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .unwrap_or(-1)
}

fn c13_negative_controls() -> Verdict {
    let m = Monad::powerset(BaseKind::Cartesian);
    let vs = Monad::vector_space(2, BaseKind::Cartesian)?;
    let mon = Monoidal::new(&m)?;
    let mut results = Vec::new();

    // μ_2 sends η_{T2}({0}) to ∅ instead of {0}.
    let bad_at = m.eta(4, 1);
    results.push(rejected("corrupted μ", m.check_monad_laws_with(2, &|n, tt| if n == 2 && tt == bad_at { 0 } else { m.mu(n, tt) })));
    // φ_1(0) = ∅ instead of η(0).
    results.push(rejected("corrupted φ", MonadMorphism::unit(&m).corrupted(1, 0, 0).check(true, 2)));

    // The coequalizer of {x0}, {x0,x1}: P(1) ⇉ D4, pushed into C3 so it misses an element.
    let d4 = free_on(&m, 2)?;
    let p = free_on(&m, 1)?;
    let (f, g) = (vec![0, 1], vec![0, 3]);
    let (q_alg, q) = coequalizer_em(&m, &p, &d4, &f, &g, GeneratorPairs::Auto)?;
    let c3 = chain(&m, 3)?;
    let into_c3: Vec<usize> = (0..q_alg.size()).map(|k| if k == 0 { 0 } else { 2 }).collect();
    let widened: Vec<usize> = q.iter().map(|&k| into_c3[k]).collect();
    results.push(rejected("non-surjective q", verify_coequalizer_universal(&m, &d4, &c3, &widened, &f, &g, &[c3.clone()])));

    let c2 = chain(&m, 2)?;
    let top = vec![1; 4];
    results.push(match bimorphism_witness(&m, &c2, &c2, &c2, &top)? {
        Some(w) => Ok(format!("constant ⊤: {w}")),
        None => Err("constant ⊤: accepted as a bimorphism".into()),
    });

    let q3 = v3(&mon)?;
    let regular = Action::regular(&q3);
    results.push(match corrupt_unit(&mon, &q3, &regular)? {
        Some(bad) => rejected("unit-law violation", check_action(&mon, &q3, &bad)),
        None => Err("unit-law violation: no corrupted action found".into()),
    });

    let bad_table = Algebra::from_table(&m, c2.carrier.clone(), vec![0, 0, 1, 0])?;
    results.push(rejected("bad algebra table", bad_table.check(&m)));

    results.push(rejected(
        "additive κ",
        vs.check_monoidal_laws_with((1, 1, 1), &|a, b, part| vs.kappa_additive(a, b, part)),
    ));

    let fork = Fork { p: 1, b: 2, f: vec![0], g: vec![1] };
    results.push(rejected("non-reflexive pair", m.check_preserves_reflexive_coeq(1, &fork, true)));

    let fixture = |n: &str| format!("{}/fixtures/{n}", env!("CARGO_MANIFEST_DIR"));
    let (c2f, bad, malformed, d4f) = (fixture("c2.json"), fixture("bad-c2.json"), fixture("malformed.json"), fixture("d4.json"));
    let codes = [
        (0, exit_code(&["laws", "--sizes", "2,2,1"])),
        (1, exit_code(&["tensor", "--A", &bad, "--B", &c2f])),
        (2, exit_code(&["tensor", "--A", &malformed, "--B", &c2f])),
        (3, exit_code(&["tensor", "--A", &d4f, "--B", &d4f, "--guard", "10"])),
    ];
    results.push(match codes.iter().find(|(want, got)| want != got) {
        None => Ok("exit codes 0/1/2/3".into()),
        Some((want, got)) => Err(format!("exit code {got}, expected {want}")),
    });

    let failures: Vec<String> = results.iter().filter_map(|r| r.as_ref().err().cloned()).collect();
    if failures.is_empty() {
        Ok((true, format!("{} controls rejected", results.len())))
    } else {
        Ok((false, failures.join("; ")))
    }
}

fn main() {
    let results = [
        criterion(1, "monad laws and monoidal conditions", secs(60), c1_laws),
        criterion(2, "Kleisli roundtrips", secs(5), c2_kleisli),
        criterion(3, "bimorphism ⇔ componentwise, exhaustive", secs(120), c3_bimorphism_forms),
        criterion(4, "standard and alternative presentations agree", secs(60), c4_presentations_agree),
        criterion(5, "free tensor identification", secs(30), c5_free_identification),
        criterion(6, "representation bijection", secs(600), c6_representation),
        criterion(7, "coherence", secs(600), c7_coherence),
        criterion(8, "induced triple and quadruple presentations", secs(300), c8_induced_presentations),
        criterion(9, "|V3⊠P(X)| = 3^|X|", secs(60), c9_quantale_powers),
        criterion(10, "monadicity comparison", secs(600), c10_monadicity),
        criterion(11, "restriction of scalars", secs(60), c11_restriction),
        criterion(12, "cocartesian powerset coproduct", secs(120), c12_cocartesian_coproduct),
        criterion(13, "negative controls and exit codes", secs(120), c13_negative_controls),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &p)| !p).map(|(i, _)| i + 1).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
