use crate::betti::multidegree::Multidegree;
use crate::graph::BipartiteGraph;

/// A monomial in the edge variables, stored as multiplicities indexed by the
/// graph's canonical edge order ([`BipartiteGraph::edges`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMultiset {
    pub multiplicities: Vec<u32>,
}

impl EdgeMultiset {
    /// Degree of the monomial.
    pub fn size(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Edge indices with positive multiplicity (the radical).
    pub fn support(&self) -> Vec<usize> {
        self.multiplicities.iter().enumerate().filter(|(_, &k)| k > 0).map(|(e, _)| e).collect()
    }

    pub fn degree_vector(&self, g: &BipartiteGraph) -> Multidegree {
        let m = g.num_x();
        let mut v = vec![0; g.num_vertices()];
        for ((x, y), &k) in g.edges().into_iter().zip(&self.multiplicities) {
            v[x] += k;
            v[m + y] += k;
        }
        Multidegree(v)
    }

    /// Product notation over edge labels, e.g. `e(x1,y1)e(x2,y2)^2`.
    pub fn describe(&self, g: &BipartiteGraph) -> String {
        let edges = g.edges();
        let mut s = String::new();
        for e in self.support() {
            let (x, y) = edges[e];
            s.push_str(&format!("e({},{})", g.x_labels()[x], g.y_labels()[y]));
            if self.multiplicities[e] > 1 {
                s.push_str(&format!("^{}", self.multiplicities[e]));
            }
        }
        s
    }
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    edges: &'a [(usize, usize)],
    /// `start[x]..start[x + 1]` are the edge indices at X vertex `x`
    start: &'a [usize],
    /// last X vertex adjacent to each Y vertex
    last_x: &'a [Option<usize>],
    x_demand: &'a [u32],
    out: Vec<EdgeMultiset>,
}

impl Search<'_> {
    /// Distributes what is left of X vertex `x`'s demand over edges `k..`.
    fn run(&mut self, x: usize, k: usize, x_left: u32, y_left: &mut [u32], mult: &mut [u32]) {
        let m = self.x_demand.len();
        if x == m {
            if y_left.iter().all(|&d| d == 0) {
                self.out.push(EdgeMultiset { multiplicities: mult.to_vec() });
            }
            return;
        }
        if k == self.start[x + 1] {
            if x_left != 0 {
                return;
            }
            // a Y vertex whose last neighbour was x must be satisfied by now
            let stuck = self
                .g
                .x_neighbors(x)
                .iter()
                .any(|&y| self.last_x[y] == Some(x) && y_left[y] != 0);
            if stuck {
                return;
            }
            let next = self.x_demand.get(x + 1).copied().unwrap_or(0);
            self.run(x + 1, self.start[x + 1], next, y_left, mult);
            return;
        }
        let (_, y) = self.edges[k];
        for a in 0..=x_left.min(y_left[y]) {
            mult[k] = a;
            y_left[y] -= a;
            self.run(x, k + 1, x_left - a, y_left, mult);
            y_left[y] += a;
        }
        mult[k] = 0;
    }
}

/// The fiber `C_α`: every edge multiset whose vertex-degree vector is `α`.
/// Results are in lexicographic order of multiplicity vectors.
pub fn fiber(g: &BipartiteGraph, alpha: &Multidegree) -> Vec<EdgeMultiset> {
    let (m, n) = (g.num_x(), g.num_y());
    assert_eq!(alpha.0.len(), m + n, "multidegree length must match the vertex count");
    let (sx, sy) = alpha.side_sums(m);
    if sx != sy {
        return Vec::new();
    }
    let edges = g.edges();
    let mut start = vec![0usize; m + 1];
    for x in 0..m {
        start[x + 1] = start[x] + g.x_neighbors(x).len();
    }
    let mut last_x = vec![None; n];
    for &(x, y) in &edges {
        last_x[y] = Some(x);
    }
    if (0..n).any(|y| alpha.0[m + y] > 0 && last_x[y].is_none()) {
        return Vec::new();
    }
    let mut mult = vec![0u32; edges.len()];
    if m == 0 {
        return vec![EdgeMultiset { multiplicities: mult }];
    }
    let mut search = Search {
        g,
        edges: &edges,
        start: &start,
        last_x: &last_x,
        x_demand: &alpha.0[..m],
        out: Vec::new(),
    };
    let mut y_left = alpha.0[m..].to_vec();
    search.run(0, 0, alpha.0[0], &mut y_left, &mut mult);
    search.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ones(len: usize) -> Multidegree {
        Multidegree(vec![1; len])
    }

    fn described(g: &BipartiteGraph, alpha: &Multidegree) -> Vec<String> {
        fiber(g, alpha).iter().map(|f| f.describe(g)).collect()
    }

    #[test]
    fn perfect_matchings_of_two_squares() {
        let h2 = catalog::obstruction(2);
        let expected = vec![
            "e(x1,y1)e(x2,y2)e(x3,y3)e(x4,y4)",
            "e(x1,y1)e(x2,y2)e(x3,y4)e(x4,y3)",
            "e(x1,y2)e(x2,y1)e(x3,y3)e(x4,y4)",
            "e(x1,y2)e(x2,y1)e(x3,y4)e(x4,y3)",
        ];
        let mut got = described(h2, &ones(8));
        got.sort();
        assert_eq!(got, expected);
        // H^(5)'s connecting edges cannot appear in a perfect matching
        let mut got5 = described(catalog::obstruction(5), &ones(8));
        got5.sort();
        assert_eq!(got5, expected);
    }

    #[test]
    fn odd_total_is_empty() {
        let g = BipartiteGraph::complete(2, 2);
        assert!(fiber(&g, &Multidegree(vec![1, 0, 1, 1])).is_empty());
        assert!(fiber(&g, &Multidegree(vec![2, 1, 1, 1])).is_empty());
    }

    #[test]
    fn degree_vectors_match() {
        let g = BipartiteGraph::complete(3, 3);
        let alpha = Multidegree(vec![2, 1, 0, 1, 1, 1]);
        let f = fiber(&g, &alpha);
        assert!(!f.is_empty());
        for mono in &f {
            assert_eq!(mono.degree_vector(&g), alpha);
            assert_eq!(mono.size(), 3);
        }
        let mut sorted = f.clone();
        sorted.sort();
        assert_eq!(sorted, f);
    }

    #[test]
    fn square_of_single_edge() {
        let g = BipartiteGraph::complete(1, 1);
        let f = fiber(&g, &Multidegree(vec![2, 2]));
        assert_eq!(f, vec![EdgeMultiset { multiplicities: vec![2] }]);
    }
}
