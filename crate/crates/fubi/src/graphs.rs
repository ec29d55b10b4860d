//! Bipartite fusion graphs and the forest test.

use std::collections::BTreeSet;

use crate::classes::ClassPartition;
use crate::indicator::{Aif, IndicatorTensor};
use crate::FubiError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    White(usize),
    Black(usize),
}

/// `Γ_k`: white `i` joined to black `j` iff `ind(k, j, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionGraph {
    pub k: usize,
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FusionGraph {
    pub fn of(t: &IndicatorTensor, k: usize) -> Self {
        let d = t.dim();
        let mut edges = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if t.get(k, j, i) {
                    edges.push((i, j));
                }
            }
        }
        FusionGraph { k, size: d, edges }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| match v {
            Vertex::White(w) if w == i => Some(Vertex::Black(j)),
            Vertex::Black(b) if b == j => Some(Vertex::White(i)),
            _ => None,
        })
    }

    /// Vertices reachable from `start` without crossing the edge `skip`.
    pub fn reach(&self, start: Vertex, skip: Option<(usize, usize)>) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                let e = match (v, u) {
                    (Vertex::White(i), Vertex::Black(j)) | (Vertex::Black(j), Vertex::White(i)) => {
                        (i, j)
                    }
                    _ => unreachable!(),
                };
                if Some(e) == skip {
                    continue;
                }
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }
}

pub struct FusionGraphSet {
    pub graphs: Vec<FusionGraph>,
}

impl FusionGraphSet {
    pub fn of(t: &IndicatorTensor) -> Self {
        FusionGraphSet {
            graphs: (0..t.dim()).map(|k| FusionGraph::of(t, k)).collect(),
        }
    }
}

/// Union-find with path halving and union by rank; whites `0..d`, blacks `d..2d`.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub fn new(size: usize) -> Self {
        DisjointSet {
            parent: (0..size).collect(),
            rank: vec![0; size],
        }
    }

    pub fn reset(&mut self) {
        for (x, p) in self.parent.iter_mut().enumerate() {
            *p = x;
        }
        self.rank.fill(0);
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when both ends already share a root.
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

pub fn is_forest(g: &FusionGraph) -> bool {
    let mut ds = DisjointSet::new(2 * g.size);
    g.edges.iter().all(|&(i, j)| ds.union(i, g.size + j))
}

pub fn all_forest(t: &IndicatorTensor) -> bool {
    (0..t.dim()).all(|k| is_forest(&FusionGraph::of(t, k)))
}

/// Removes the tree edge `(i, j)`: `C1` holds white `i`, `C2` holds black `j`.
pub fn split_components(
    g: &FusionGraph,
    i: usize,
    j: usize,
) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>), FubiError> {
    if !g.has_edge(i, j) {
        return Err(FubiError::EdgeAbsent { k: g.k, i, j });
    }
    let c1 = g.reach(Vertex::White(i), Some((i, j)));
    if c1.contains(&Vertex::Black(j)) {
        return Err(FubiError::NotForest(g.k));
    }
    let c2 = g.reach(Vertex::Black(j), Some((i, j)));
    Ok((c1, c2))
}

/// Number of nonzero coefficients a forest candidate must reach.
pub fn min_edges(dim: usize) -> usize {
    dim * dim
}

/// Forest-filter stage: every `Γ_k` acyclic, and at least `dim^2` edges in total.
pub fn passes_ff(t: &IndicatorTensor) -> bool {
    t.count() >= min_edges(t.dim()) && all_forest(t)
}

/// Precomputed edge lists for the enumeration hot loop.
#[derive(Clone, Debug)]
pub struct ForestFilter {
    dim: usize,
    forced: Vec<Vec<(u8, u8)>>,
    by_class: Vec<Vec<Vec<(u8, u8)>>>,
    class_size: Vec<usize>,
    forced_count: usize,
    require_edges: bool,
}

impl ForestFilter {
    pub fn new(part: &ClassPartition, require_edges: bool) -> Self {
        let d = part.signature.dim();
        let bar = &part.signature.bar;
        let mut forced = vec![Vec::new(); d];
        for a in 0..d {
            forced[0].push((a as u8, a as u8));
            if a > 0 {
                forced[a].push((a as u8, 0));
                forced[a].push((0, bar[a] as u8));
            }
        }
        let mut by_class = vec![vec![Vec::new(); part.len()]; d];
        for (c, class) in part.classes.iter().enumerate() {
            for t in class {
                by_class[t.k][c].push((t.i as u8, t.j as u8));
            }
        }
        let forced_count = forced.iter().map(Vec::len).sum();
        let class_size = part.classes.iter().map(Vec::len).collect();
        ForestFilter {
            dim: d,
            forced,
            by_class,
            class_size,
            forced_count,
            require_edges,
        }
    }

    pub fn edge_count(&self, aif: &Aif) -> usize {
        self.forced_count
            + (0..aif.len)
                .filter(|&c| aif.get(c))
                .map(|c| self.class_size[c])
                .sum::<usize>()
    }

    /// Uses `ds` (sized `2 * dim`) as scratch.
    pub fn check(&self, aif: &Aif, ds: &mut DisjointSet) -> bool {
        if self.require_edges && self.edge_count(aif) < min_edges(self.dim) {
            return false;
        }
        let d = self.dim;
        for k in 1..d {
            ds.reset();
            for &(i, j) in &self.forced[k] {
                if !ds.union(i as usize, d + j as usize) {
                    return false;
                }
            }
            let mut rest = aif.bits;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for &(i, j) in &self.by_class[k][aif.len - 1 - b] {
                    if !ds.union(i as usize, d + j as usize) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn scratch(&self) -> DisjointSet {
        DisjointSet::new(2 * self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(size: usize, edges: &[(usize, usize)]) -> FusionGraph {
        FusionGraph {
            k: 1,
            size,
            edges: edges.to_vec(),
        }
    }

    #[test]
    fn small_graphs() {
        assert!(is_forest(&graph(3, &[(0, 0), (1, 1), (2, 2)])));
        assert!(!is_forest(&graph(3, &[(1, 1), (1, 2), (2, 1), (2, 2)])));
        let survivor = graph(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]);
        assert!(is_forest(&survivor));
        let (c1, c2) = split_components(&survivor, 2, 2).unwrap();
        let w = |x| Vertex::White(x);
        let b = |x| Vertex::Black(x);
        assert_eq!(c1, BTreeSet::from([w(2), b(1), w(0)]));
        assert_eq!(c2, BTreeSet::from([b(2), w(1), b(0)]));
        assert!(split_components(&survivor, 0, 0).is_err());
    }

    #[test]
    fn isolated_and_path() {
        let g = graph(3, &[(1, 2)]);
        let (c1, c2) = split_components(&g, 1, 2).unwrap();
        assert_eq!(c1, BTreeSet::from([Vertex::White(1)]));
        assert_eq!(c2, BTreeSet::from([Vertex::Black(2)]));
        let path = graph(3, &[(0, 0), (0, 1), (1, 1)]);
        let (c1, c2) = split_components(&path, 0, 1).unwrap();
        assert_eq!(c1, BTreeSet::from([Vertex::White(0), Vertex::Black(0)]));
        assert_eq!(c2, BTreeSet::from([Vertex::Black(1), Vertex::White(1)]));
    }
}
