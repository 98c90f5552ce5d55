use super::{ElementId, Matroid};

/// Disjoint-set forest with path halving and union by rank.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
            rank: vec![0; size],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Cycle matroid of a multigraph: a set of edges is independent when it is a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    /// Edges join 0-based vertices; `(u, u)` is a loop.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        if set.len() >= self.vertices.max(1) {
            return set.is_empty();
        }
        let mut uf = UnionFind::new(self.vertices);
        set.iter().all(|e| {
            let (u, w) = self.edges[e.0];
            uf.union(u, w)
        })
    }
}
