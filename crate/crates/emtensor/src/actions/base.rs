//! The monad M×(−) on finite sets for a monoid M in Set, and its algebras.

use crate::error::{precondition, Result};
use crate::monad::all_maps;
use crate::report::Report;

/// M×(−) with μ(m, (n, x)) = (mn, x) and η(x) = (e, x). Elements of M×X are
/// indexed m·|X| + x.
#[derive(Clone, Debug)]
pub struct BaseMonoidMonad {
    pub size: usize,
    /// mul[m·size + n] = mn.
    pub mul: Vec<usize>,
    pub unit: usize,
}

impl BaseMonoidMonad {
    pub fn new(size: usize, mul: Vec<usize>, unit: usize) -> Result<BaseMonoidMonad> {
        if mul.len() != size * size || mul.iter().any(|&v| v >= size) || unit >= size {
            return Err(precondition("multiplication table is not a total map M×M -> M"));
        }
        let mm = BaseMonoidMonad { size, mul, unit };
        let r = mm.check_monoid();
        if let Some(c) = r.first_failure() {
            return Err(precondition(format!("not a monoid: {}: {}", c.name, c.witness.clone().unwrap_or_default())));
        }
        Ok(mm)
    }

    /// The one-element monoid.
    pub fn trivial() -> BaseMonoidMonad {
        BaseMonoidMonad { size: 1, mul: vec![0], unit: 0 }
    }

    /// {1, s} with s² = s.
    pub fn idempotent() -> BaseMonoidMonad {
        BaseMonoidMonad { size: 2, mul: vec![0, 1, 1, 1], unit: 0 }
    }

    fn times(&self, m: usize, n: usize) -> usize {
        self.mul[m * self.size + n]
    }

    pub fn check_monoid(&self) -> Report {
        let k = self.size;
        let mut r = Report::new();
        r.elementwise("associative", (k * k * k) as u64, |i| {
            let (a, b, c) = ((i as usize) / (k * k), (i as usize) / k % k, (i as usize) % k);
            (self.times(self.times(a, b), c) != self.times(a, self.times(b, c))).then(|| format!("({a}, {b}, {c})"))
        });
        r.elementwise("unital", k as u64, |a| {
            let a = a as usize;
            (self.times(self.unit, a) != a || self.times(a, self.unit) != a).then(|| format!("{a}"))
        });
        r
    }

    pub fn eta(&self, n: usize, x: usize) -> usize {
        self.unit * n + x
    }

    /// μ on M×(M×X), indexed m·(k·n) + (m'·n + x).
    pub fn mu(&self, n: usize, z: usize) -> usize {
        let k = self.size;
        let (m, rest) = (z / (k * n), z % (k * n));
        let (m2, x) = (rest / n, rest % n);
        self.times(m, m2) * n + x
    }

    /// M×f.
    pub fn map(&self, n: usize, f: &[usize], cod: usize, z: usize) -> usize {
        (z / n) * cod + f[z % n]
    }

    /// Unit and associativity laws and naturality of η, μ on sets of size ≤ max.
    pub fn check_laws(&self, max: usize) -> Report {
        let k = self.size;
        let mut r = Report::new();
        for n in 0..=max {
            r.elementwise(format!("μ·η = 1 at {n}"), (k * n) as u64, |z| {
                let z = z as usize;
                (self.mu(n, self.eta(k * n, z)) != z).then(|| format!("{z}"))
            });
            r.elementwise(format!("μ·Mη = 1 at {n}"), (k * n) as u64, |z| {
                let z = z as usize;
                let lifted = (z / n) * (k * n) + self.eta(n, z % n);
                (self.mu(n, lifted) != z).then(|| format!("{z}"))
            });
            r.elementwise(format!("μ·μM = μ·Mμ at {n}"), (k * k * k * n) as u64, |z| {
                let z = z as usize;
                let inner = k * k * n;
                let lhs = self.mu(n, self.mu(k * n, z));
                let rhs = self.mu(n, (z / inner) * (k * n) + self.mu(n, z % inner));
                (lhs != rhs).then(|| format!("{z}"))
            });
            for c in 0..=max {
                for f in all_maps(n, c) {
                    r.elementwise(format!("η, μ natural along {f:?}"), (k * k * n) as u64, |z| {
                        let z = z as usize;
                        let x = z % n;
                        let eta_ok = self.map(n, &f, c, self.eta(n, x)) == self.eta(c, f[x]);
                        let lhs = self.map(n, &f, c, self.mu(n, z));
                        let mf: Vec<usize> = (0..k * n).map(|w| self.map(n, &f, c, w)).collect();
                        let rhs = self.mu(c, self.map(k * n, &mf, k * c, z));
                        (!eta_ok || lhs != rhs).then(|| format!("{z}"))
                    });
                }
            }
        }
        r
    }

    /// Whether a: M×A -> A satisfies the algebra laws a·η = 1 and a·μ = a·Ma.
    pub fn is_algebra(&self, n: usize, a: &[usize]) -> bool {
        let k = self.size;
        (0..n).all(|x| a[self.eta(n, x)] == x)
            && (0..k * k * n).all(|z| a[self.mu(n, z)] == a[(z / (k * n)) * n + a[z % (k * n)]])
    }

    /// Whether a satisfies the action laws a(mn, x) = a(m, a(n, x)) and a(e, x) = x.
    pub fn is_action(&self, n: usize, a: &[usize]) -> bool {
        let k = self.size;
        (0..n).all(|x| a[self.unit * n + x] == x)
            && (0..k).all(|m| (0..k).all(|m2| (0..n).all(|x| a[self.times(m, m2) * n + x] == a[m * n + a[m2 * n + x]])))
    }

    /// All algebras with carrier {0..n-1}, by brute force over maps M×n -> n.
    pub fn algebras(&self, n: usize) -> Vec<Vec<usize>> {
        all_maps(self.size * n, n).into_iter().filter(|a| self.is_algebra(n, a)).collect()
    }

    /// The algebra laws and the action laws select the same maps, for every carrier of size ≤ max.
    pub fn check_actions_agree(&self, max: usize) -> Report {
        let mut r = Report::new();
        for n in 0..=max {
            let maps = all_maps(self.size * n, n);
            r.elementwise(format!("algebra ⇔ action on {n} elements"), maps.len() as u64, |i| {
                let a = &maps[i as usize];
                (self.is_algebra(n, a) != self.is_action(n, a)).then(|| format!("{a:?}"))
            });
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_monoid_monad() {
        let mm = BaseMonoidMonad::idempotent();
        assert!(mm.check_laws(2).all_pass());
        assert!(mm.check_actions_agree(2).all_pass());
        // On 1 element: only the trivial action; on 2: identity plus s acting as an idempotent.
        assert_eq!(mm.algebras(1).len(), 1);
        assert_eq!(mm.algebras(2).len(), 3);
        let triv = BaseMonoidMonad::trivial();
        assert_eq!(triv.algebras(2).len(), 1);
    }
}
