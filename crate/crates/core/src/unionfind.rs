//! Union-find, in a plain variant and a rewindable variant for backtracking.

/// Union by rank with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Returns true if the two elements were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo] = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        true
    }
}

/// Union by rank without path compression, so merges can be undone in LIFO
/// order. Used by the backtracking searches.
#[derive(Debug, Clone)]
pub(crate) struct RewindableUnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    trail: Vec<(u32, u32, bool)>,
}

impl RewindableUnionFind {
    pub fn new(n: usize) -> Self {
        RewindableUnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            trail: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Returns true if the two elements were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo] = hi as u32;
        let bumped = self.rank[hi] == self.rank[lo];
        if bumped {
            self.rank[hi] += 1;
        }
        self.trail.push((lo as u32, hi as u32, bumped));
        true
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rewind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (lo, hi, bumped) = self.trail.pop().expect("trail entry");
            self.parent[lo as usize] = lo;
            if bumped {
                self.rank[hi as usize] -= 1;
            }
        }
    }

    /// Snapshot of the current parent pointers, for scratch connectivity
    /// probes that must not disturb the trail.
    pub fn parents(&self) -> Vec<u32> {
        self.parent.clone()
    }
}

/// Resolves roots in a parent snapshot, with path halving local to the copy.
pub(crate) fn snapshot_find(parent: &mut [u32], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let grand = parent[parent[x] as usize];
        parent[x] = grand;
        x = grand as usize;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewind_restores_components() {
        let mut uf = RewindableUnionFind::new(4);
        let mark = uf.mark();
        assert!(uf.union(0, 1));
        assert!(uf.union(1, 2));
        assert_eq!(uf.find(0), uf.find(2));
        uf.rewind(mark);
        assert_ne!(uf.find(0), uf.find(1));
        assert_ne!(uf.find(1), uf.find(2));
    }

    #[test]
    fn union_reports_merges() {
        let mut uf = UnionFind::new(3);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        assert!(uf.union(2, 0));
    }
}
