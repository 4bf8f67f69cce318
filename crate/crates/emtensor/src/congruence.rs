//! Union-find with least-index roots and congruence closure by unary polynomials.

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Merges the classes of a and b; the smaller index becomes the root.
    /// Returns false if they were already equivalent.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo as u32;
        true
    }

    /// Class index of every element (classes numbered by least member) and the class count.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut id = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out[x] = id[r];
        }
        (out, count)
    }
}

/// Smallest equivalence on 0..n containing `pairs` and closed under every polynomial.
///
/// Each successful merge of (a, b) schedules (P(a), P(b)) for every P, which suffices:
/// any two equivalent elements are joined by a chain of merged pairs.
pub fn closure(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>, polys: &[&dyn Fn(usize) -> usize]) -> UnionFind {
    let mut uf = UnionFind::new(n);
    let mut stack: Vec<(usize, usize)> = pairs.into_iter().collect();
    stack.reverse();
    while let Some((a, b)) = stack.pop() {
        if uf.union(a, b) {
            for p in polys {
                let (pa, pb) = (p(a), p(b));
                if pa != pb {
                    stack.push((pa, pb));
                }
            }
        }
    }
    uf
}
