use super::*;
use crate::finset::{BaseKind, FinSet};
use crate::monad::MonadMorphism;
use crate::monoidal::FunctorData;

#[test]
fn fixture_monoids_pass() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m).unwrap();
    for mo in [MonoidObject::trivial(&mon).unwrap(), v3(&mon).unwrap(), c2_monoid(&mon).unwrap()] {
        let r = check_monoid(&mon, &mo).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
    let vm = Monad::vector_space(2, BaseKind::Cartesian).unwrap();
    let vmon = Monoidal::new(&vm).unwrap();
    let r = check_monoid(&vmon, &fp_squared(&vmon).unwrap()).unwrap();
    assert!(r.all_pass(), "{:?}", r.first_failure());
}

#[test]
fn quantale_power_sizes() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m).unwrap();
    let v = v3(&mon).unwrap();
    for n in 0..=2 {
        let (map, r) = quantale_power_iso(&mon, &v.alg, n).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
        assert_eq!(map.len(), 3usize.pow(n as u32));
    }
}

#[test]
fn action_monad_laws_and_tau() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m).unwrap();
    let am = ActionMonad::new(&mon, v3(&mon).unwrap()).unwrap();
    for n in 0..=2 {
        let x = FinSet::range(n);
        let r = am.check_laws(&x).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
        let r = am.check_tau(&x).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
    // τ on P(1): {★} goes to the class of j(2, {★}).
    let tau = am.tau(&FinSet::range(1)).unwrap();
    let f1 = am.f(1).unwrap();
    assert_eq!(tau[1], f1.j_part(&m, crate::finset::Part::Pair(2, 1)));
}

#[test]
fn comparison_roundtrips_on_regular_and_free() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m).unwrap();
    let mo = v3(&mon).unwrap();
    let am = ActionMonad::new(&mon, mo.clone()).unwrap();
    let reg = Action::regular(&mo);
    assert!(check_action(&mon, &mo, &reg).unwrap().all_pass());
    let k = am.comparison(&reg).unwrap();
    assert!(am.check_algebra(&k).unwrap().all_pass());
    assert!(roundtrip_action(&am, &reg).unwrap().pass);
    let free = am.free_algebra(&FinSet::range(1)).unwrap();
    let r = am.check_algebra(&free).unwrap();
    assert!(r.all_pass(), "{:?}", r.first_failure());
    assert!(roundtrip_algebra(&am, &free).unwrap().pass);
}

#[test]
fn unit_violation_fails() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let mon = Monoidal::new(&m).unwrap();
    let mo = v3(&mon).unwrap();
    let bad = corrupt_unit(&mon, &mo, &Action::regular(&mo)).unwrap().unwrap();
    let r = check_action(&mon, &mo, &bad).unwrap();
    assert!(!r.all_pass());
}

#[test]
fn transport_along_unit_gives_underlying_monoid() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let phi = MonadMorphism::unit(&m);
    let fd = FunctorData::new(&phi).unwrap();
    let v = v3(&fd.target).unwrap();
    let (ns, r) = transport_monoid(&fd, &v).unwrap();
    assert!(r.all_pass(), "{:?}", r.first_failure());
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(ns.times(&fd.source, x, y).unwrap(), x.min(y));
        }
    }
    assert_eq!(ns.unit_elem(&phi.source), Some(2));
}

#[test]
fn inclusion_induces_monad_morphism() {
    let m = Monad::powerset(BaseKind::Cartesian);
    let phi = MonadMorphism::identity(&m);
    let fd = FunctorData::new(&phi).unwrap();
    let (c2, v) = (c2_monoid(&fd.target).unwrap(), v3(&fd.target).unwrap());
    for n in 1..=2 {
        let ind = induced_monad_morphism(&fd, &c2, &v, &chain_inclusion(), &FinSet::range(n)).unwrap();
        assert!(ind.report.all_pass(), "{:?}", ind.report.first_failure());
    }
}

#[test]
fn vector_action_monad_laws() {
    let vm = Monad::vector_space(2, BaseKind::Cartesian).unwrap();
    let mon = Monoidal::new(&vm).unwrap();
    let am = ActionMonad::new(&mon, fp_squared(&mon).unwrap()).unwrap();
    for n in 0..=2 {
        let r = am.check_laws(&FinSet::range(n)).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
}
