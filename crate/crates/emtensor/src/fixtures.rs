//! Small named algebras used across the test grid and the CLI.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::finset::FinSet;
use crate::monad::Monad;

/// The n-chain 0 < 1 < … < n-1 as a complete join-semilattice: a(S) = max(S ∪ {0}).
pub fn chain(m: &Monad, n: usize) -> Result<Algebra> {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let carrier = FinSet::atoms(&labels)?;
    let tn = m.t_count(n)?;
    let table = (0..tn).map(|s| if s == 0 { 0 } else { usize::BITS as usize - 1 - s.leading_zeros() as usize }).collect();
    Algebra::from_table(m, carrier, table)
}

/// The free algebra on `n` generators x0, x1, …
pub fn free_on(m: &Monad, n: usize) -> Result<Algebra> {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Algebra::free(m, &FinSet::atoms(&labels)?)
}

/// The four-element Boolean lattice, free on two generators.
pub fn d4(m: &Monad) -> Result<Algebra> {
    free_on(m, 2)
}

/// The sup-lattice fixtures C2, C3 and D4 with their names.
pub fn sup_fixtures(m: &Monad) -> Result<Vec<(String, Algebra)>> {
    Ok(vec![("C2".into(), chain(m, 2)?), ("C3".into(), chain(m, 3)?), ("D4".into(), d4(m)?)])
}

/// F₂ spaces (free on d generators) for d up to `max_dim`.
pub fn vector_fixtures(m: &Monad, max_dim: usize) -> Result<Vec<(String, Algebra)>> {
    (0..=max_dim).map(|d| Ok((format!("F^{d}"), free_on(m, d)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::BaseKind;

    #[test]
    fn chains_are_algebras() {
        let m = Monad::powerset(BaseKind::Cartesian);
        for n in 1..=4 {
            let c = chain(&m, n).unwrap();
            assert!(c.check(&m).unwrap().all_pass(), "C{n}");
        }
        assert_eq!(d4(&m).unwrap().size(), 4);
    }
}
