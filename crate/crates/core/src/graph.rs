//! Bipartite graphs with an explicit bipartition, plus the graph-theoretic
//! predicates the classifier is built on.
//!
//! Vertices are addressed by a dense "unified" index: the X side occupies
//! `0..num_x()` and the Y side `num_x()..num_vertices()`. Labels are opaque
//! strings and are unique across both sides.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("edge {{{0}, {1}}} does not join the X side to the Y side")]
    NotBipartite(String, String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

/// A finite simple bipartite graph `G = (X ⊔ Y, E)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    // sorted neighbour lists, in side-local indices
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(x, y)| format!("{}-{}", self.x_labels[x], self.y_labels[y]))
            .collect();
        f.debug_struct("BipartiteGraph")
            .field("x", &self.x_labels)
            .field("y", &self.y_labels)
            .field("edges", &edges)
            .finish()
    }
}

fn check_labels(x: &[String], y: &[String]) -> Result<(), GraphError> {
    let mut seen = HashSet::new();
    for l in x.iter().chain(y) {
        if !seen.insert(l.as_str()) {
            return Err(GraphError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl BipartiteGraph {
    /// Builds a graph from labels and edges given by label, each edge as
    /// `(x_label, y_label)`.
    pub fn new<S: Into<String>>(
        x_labels: Vec<S>,
        y_labels: Vec<S>,
        edges: &[(&str, &str)],
    ) -> Result<Self, GraphError> {
        let x_labels: Vec<String> = x_labels.into_iter().map(Into::into).collect();
        let y_labels: Vec<String> = y_labels.into_iter().map(Into::into).collect();
        check_labels(&x_labels, &y_labels)?;
        let xi: HashMap<&str, usize> =
            x_labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let yi: HashMap<&str, usize> =
            y_labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (x, y) = match (xi.get(a), yi.get(b)) {
                (Some(&x), Some(&y)) => (x, y),
                _ => {
                    for l in [a, b] {
                        if !xi.contains_key(l) && !yi.contains_key(l) {
                            return Err(GraphError::UnknownLabel(l.to_string()));
                        }
                    }
                    return Err(GraphError::NotBipartite(a.to_string(), b.to_string()));
                }
            };
            pairs.push((x, y));
        }
        Self::from_index_edges(x_labels, y_labels, pairs)
    }

    /// Builds a graph from labels and side-local index pairs `(x, y)`.
    pub fn from_index_edges(
        x_labels: Vec<String>,
        y_labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        check_labels(&x_labels, &y_labels)?;
        let (m, n) = (x_labels.len(), y_labels.len());
        let mut x_adj = vec![Vec::new(); m];
        let mut y_adj = vec![Vec::new(); n];
        for (x, y) in edges {
            if x >= m {
                return Err(GraphError::IndexOutOfRange(x));
            }
            if y >= n {
                return Err(GraphError::IndexOutOfRange(m + y));
            }
            if x_adj[x].contains(&y) {
                return Err(GraphError::DuplicateEdge(
                    x_labels[x].clone(),
                    y_labels[y].clone(),
                ));
            }
            x_adj[x].push(y);
            y_adj[y].push(x);
        }
        x_adj.iter_mut().for_each(|a| a.sort_unstable());
        y_adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(Self { x_labels, y_labels, x_adj, y_adj })
    }

    /// Graph with default labels `x1..xm`, `y1..yn` and the given side-local
    /// index edges.
    pub fn with_default_labels(
        m: usize,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::from_index_edges(default_labels('x', m), default_labels('y', n), edges)
    }

    /// The complete bipartite graph `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|x| (0..n).map(move |y| (x, y)));
        Self::with_default_labels(m, n, edges).expect("complete graph is well formed")
    }

    pub fn num_x(&self) -> usize {
        self.x_labels.len()
    }

    pub fn num_y(&self) -> usize {
        self.y_labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_x() + self.num_y()
    }

    pub fn num_edges(&self) -> usize {
        self.x_adj.iter().map(Vec::len).sum()
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn side(&self, v: usize) -> Side {
        if v < self.num_x() {
            Side::X
        } else {
            Side::Y
        }
    }

    pub fn label(&self, v: usize) -> &str {
        let m = self.num_x();
        if v < m {
            &self.x_labels[v]
        } else {
            &self.y_labels[v - m]
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.x_labels
            .iter()
            .position(|l| l == label)
            .or_else(|| self.y_labels.iter().position(|l| l == label).map(|j| j + self.num_x()))
    }

    /// Edges as side-local pairs `(x, y)`, sorted lexicographically. This is
    /// the canonical edge order used for edge variables `e_{xy}`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.x_adj
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.x_adj[x].binary_search(&y).is_ok()
    }

    /// Adjacency in unified indices; same-side pairs are never adjacent.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let m = self.num_x();
        match (u < m, v < m) {
            (true, false) => self.has_edge(u, v - m),
            (false, true) => self.has_edge(v, u - m),
            _ => false,
        }
    }

    pub fn x_neighbors(&self, x: usize) -> &[usize] {
        &self.x_adj[x]
    }

    pub fn y_neighbors(&self, y: usize) -> &[usize] {
        &self.y_adj[y]
    }

    /// Neighbours of a unified vertex, as unified indices in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let m = self.num_x();
        if v < m {
            self.x_adj[v].iter().map(|&y| y + m).collect()
        } else {
            self.y_adj[v - m].clone()
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        let m = self.num_x();
        if v < m {
            self.x_adj[v].len()
        } else {
            self.y_adj[v - m].len()
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.num_vertices()).map(|v| self.degree(v)).min()
    }

    /// Same graph with X and Y exchanged.
    pub fn swap_sides(&self) -> Self {
        Self {
            x_labels: self.y_labels.clone(),
            y_labels: self.x_labels.clone(),
            x_adj: self.y_adj.clone(),
            y_adj: self.x_adj.clone(),
        }
    }

    /// Reorders the vertices: new X vertex `i` is old X vertex `x_order[i]`,
    /// likewise for Y. Labels travel with their vertices.
    pub fn permuted(&self, x_order: &[usize], y_order: &[usize]) -> Self {
        assert_eq!(x_order.len(), self.num_x());
        assert_eq!(y_order.len(), self.num_y());
        let mut y_pos = vec![0; self.num_y()];
        for (new, &old) in y_order.iter().enumerate() {
            y_pos[old] = new;
        }
        let edges = x_order
            .iter()
            .enumerate()
            .flat_map(|(new_x, &old_x)| self.x_adj[old_x].iter().map(move |&y| (new_x, y)))
            .map(|(x, y)| (x, y_pos[y]))
            .collect::<Vec<_>>();
        Self::from_index_edges(
            x_order.iter().map(|&i| self.x_labels[i].clone()).collect(),
            y_order.iter().map(|&j| self.y_labels[j].clone()).collect(),
            edges,
        )
        .expect("permutation preserves simplicity")
    }

    /// Same structure with every label replaced via `f`.
    pub fn relabeled(&self, mut f: impl FnMut(&str) -> String) -> Result<Self, GraphError> {
        let x: Vec<String> = self.x_labels.iter().map(|l| f(l)).collect();
        let y: Vec<String> = self.y_labels.iter().map(|l| f(l)).collect();
        check_labels(&x, &y)?;
        Ok(Self { x_labels: x, y_labels: y, x_adj: self.x_adj.clone(), y_adj: self.y_adj.clone() })
    }

    /// Induced subgraph on a set of unified vertex indices. Vertex order and
    /// sides follow the host graph.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let n = self.num_vertices();
        let mut keep = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(GraphError::IndexOutOfRange(v));
            }
            keep[v] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// [`induced_subgraph`](Self::induced_subgraph) addressed by label.
    pub fn induced_subgraph_by_labels(&self, labels: &[&str]) -> Result<Self, GraphError> {
        let idx = labels
            .iter()
            .map(|l| self.vertex_by_label(l).ok_or_else(|| GraphError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        self.induced_subgraph(&idx)
    }

    fn induced_by_mask(&self, keep: &[bool]) -> Self {
        let m = self.num_x();
        let xs: Vec<usize> = (0..m).filter(|&x| keep[x]).collect();
        let ys: Vec<usize> = (0..self.num_y()).filter(|&y| keep[m + y]).collect();
        let mut y_new = vec![usize::MAX; self.num_y()];
        for (i, &y) in ys.iter().enumerate() {
            y_new[y] = i;
        }
        let edges = xs
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| {
                let y_new = &y_new;
                self.x_adj[x].iter().filter(|&&y| y_new[y] != usize::MAX).map(move |&y| (i, y_new[y]))
            })
            .collect::<Vec<_>>();
        Self::from_index_edges(
            xs.iter().map(|&x| self.x_labels[x].clone()).collect(),
            ys.iter().map(|&y| self.y_labels[y].clone()).collect(),
            edges,
        )
        .expect("induced subgraph of a simple graph is simple")
    }

    /// The bipartite complement: same vertex lists, edge set `(X × Y) \ E`.
    pub fn bipartite_complement(&self) -> Self {
        let edges = (0..self.num_x())
            .flat_map(|x| (0..self.num_y()).map(move |y| (x, y)))
            .filter(|&(x, y)| !self.has_edge(x, y))
            .collect::<Vec<_>>();
        Self::from_index_edges(self.x_labels.clone(), self.y_labels.clone(), edges)
            .expect("complement is simple")
    }

    /// Largest induced subgraph with minimum degree at least `k`, together
    /// with the labels of the deleted vertices in deletion order.
    pub fn degree_k_subgraph_with_removed(&self, k: usize) -> (Self, Vec<String>) {
        let n = self.num_vertices();
        let mut keep = vec![true; n];
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = Vec::new();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] < k).collect();
        let mut queued: Vec<bool> = deg.iter().map(|&d| d < k).collect();
        while let Some(v) = queue.pop_front() {
            keep[v] = false;
            removed.push(self.label(v).to_string());
            for w in self.neighbors(v) {
                if keep[w] {
                    deg[w] -= 1;
                    if deg[w] < k && !queued[w] {
                        queued[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        (self.induced_by_mask(&keep), removed)
    }

    /// `G_k`: the largest induced subgraph in which every vertex has degree
    /// at least `k`. `G_1` strips isolated vertices; `G_2` is the 2-core.
    pub fn degree_k_subgraph(&self, k: usize) -> Self {
        self.degree_k_subgraph_with_removed(k).0
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    pub fn num_components(&self) -> usize {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let dist = self.bfs_distances(s);
            for (v, d) in dist.iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
        count
    }

    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_vertices()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.num_vertices() {
            for d in self.bfs_distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_tree(&self) -> bool {
        self.num_vertices() > 0 && self.is_connected() && self.num_edges() + 1 == self.num_vertices()
    }

    /// True iff `G_1` is a tree of diameter at most 3. A graph with no edges
    /// counts as essentially such a tree (its `G_1` is empty).
    pub fn is_essentially_tree_diameter_le3(&self) -> bool {
        let g1 = self.degree_k_subgraph(1);
        if g1.num_vertices() == 0 {
            return true;
        }
        g1.is_tree() && g1.diameter().is_some_and(|d| d <= 3)
    }

    /// `Some((m, n))` when the graph with isolated vertices stripped is the
    /// complete bipartite graph `K_{m,n}`.
    pub fn is_complete_bipartite(&self) -> Option<(usize, usize)> {
        let g1 = self.degree_k_subgraph(1);
        let (m, n) = (g1.num_x(), g1.num_y());
        (g1.num_edges() > 0 && g1.num_edges() == m * n).then_some((m, n))
    }

    /// Checks chordal bipartiteness. Returns `None` if every cycle of length
    /// at least 6 has a chord; otherwise a chordless cycle of minimum length.
    pub fn chordless_cycle(&self) -> Option<CycleWitness> {
        let m = self.num_x();
        let n = self.num_vertices();
        let mut best: Option<Vec<usize>> = None;
        for (x, y) in self.edges() {
            let (u, v) = (x, y + m);
            let nu = self.neighbors(u);
            let nv = self.neighbors(v);
            let mut blocked = vec![false; n];
            blocked[u] = true;
            blocked[v] = true;
            for &w in nu.iter().chain(&nv) {
                blocked[w] = true;
            }
            for &a in nu.iter().filter(|&&a| a != v) {
                for &b in nv.iter().filter(|&&b| b != u) {
                    if self.adjacent(a, b) {
                        continue;
                    }
                    // shortest a→b path avoiding N[u] ∪ N[v] except a and b
                    let Some(path) = self.shortest_path_avoiding(a, b, &blocked) else {
                        continue;
                    };
                    let len = path.len() + 2;
                    if best.as_ref().is_none_or(|c| len < c.len()) {
                        let mut cycle = vec![u, v];
                        cycle.extend(path.iter().rev());
                        best = Some(cycle);
                    }
                }
            }
        }
        best.map(|c| CycleWitness { vertices: c.iter().map(|&v| self.label(v).to_string()).collect() })
    }

    /// `true` iff every cycle of length at least 6 has a chord.
    pub fn is_chordal_bipartite(&self) -> bool {
        self.chordless_cycle().is_none()
    }

    fn shortest_path_avoiding(&self, a: usize, b: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        let mut prev = vec![usize::MAX; n];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(v) {
                if prev[w] == usize::MAX && (!blocked[w] || w == b) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Finds an induced copy of `pattern`. The pattern's sides map to the
    /// host's sides, or to the opposite sides as a whole. The returned
    /// embedding is the lexicographically least image vector (indexed by the
    /// pattern's unified vertex order, valued in host unified indices).
    pub fn find_induced_copy(&self, pattern: &BipartiteGraph) -> Option<InducedEmbedding> {
        if let Some(image) = induced_search(self, pattern) {
            return Some(InducedEmbedding { image, sides_swapped: false });
        }
        let swapped = pattern.swap_sides();
        let image = induced_search(self, &swapped)?;
        // back to the original pattern's vertex order: swapped order is Y then X
        let (pm, pn) = (pattern.num_x(), pattern.num_y());
        let mut out = Vec::with_capacity(pm + pn);
        out.extend_from_slice(&image[pn..]);
        out.extend_from_slice(&image[..pn]);
        Some(InducedEmbedding { image: out, sides_swapped: true })
    }

    /// Label-level edge list, handy for reports.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(x, y)| (self.x_labels[x].clone(), self.y_labels[y].clone()))
            .collect()
    }
}

pub(crate) fn default_labels(prefix: char, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// Backtracking search for an induced embedding respecting sides (pattern X
/// into host X). Candidates are tried in ascending host order, so the first
/// embedding found is lexicographically least.
fn induced_search(host: &BipartiteGraph, pattern: &BipartiteGraph) -> Option<Vec<usize>> {
    let (pm, pn) = (pattern.num_x(), pattern.num_y());
    if pm > host.num_x() || pn > host.num_y() {
        return None;
    }
    let k = pm + pn;
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.num_vertices()];

    fn rec(
        host: &BipartiteGraph,
        pattern: &BipartiteGraph,
        pos: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == image.len() {
            return true;
        }
        let pm = pattern.num_x();
        let hm = host.num_x();
        let range = if pos < pm { 0..hm } else { hm..host.num_vertices() };
        let need = pattern.degree(pos);
        for h in range {
            if used[h] || host.degree(h) < need {
                continue;
            }
            let ok = (0..pos).all(|q| pattern.adjacent(pos, q) == host.adjacent(h, image[q]));
            if !ok {
                continue;
            }
            image[pos] = h;
            used[h] = true;
            if rec(host, pattern, pos + 1, image, used) {
                return true;
            }
            used[h] = false;
        }
        image[pos] = usize::MAX;
        false
    }

    rec(host, pattern, 0, &mut image, &mut used).then_some(image)
}

/// A chordless cycle `v_0, …, v_{t-1}` (closing back to `v_0`) of length at
/// least 6, by vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<String>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the witness against `g`: consecutive vertices adjacent, no
    /// repeated vertex, even length ≥ 6, and no chord.
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        let Some(idx) = self.vertices.iter().map(|l| g.vertex_by_label(l)).collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let t = idx.len();
        if t < 6 || t % 2 != 0 || idx.iter().collect::<HashSet<_>>().len() != t {
            return false;
        }
        for i in 0..t {
            for j in i + 1..t {
                let consecutive = j == i + 1 || (i == 0 && j == t - 1);
                if g.adjacent(idx[i], idx[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// An injective map from pattern vertices to host vertices preserving edges
/// and non-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedEmbedding {
    /// `image[p]` is the host unified index of pattern unified vertex `p`.
    pub image: Vec<usize>,
    /// Whether pattern X was sent to host Y.
    pub sides_swapped: bool,
}

impl InducedEmbedding {
    /// `(pattern label, host label)` pairs in pattern vertex order.
    pub fn label_pairs(&self, pattern: &BipartiteGraph, host: &BipartiteGraph) -> Vec<(String, String)> {
        self.image
            .iter()
            .enumerate()
            .map(|(p, &h)| (pattern.label(p).to_string(), host.label(h).to_string()))
            .collect()
    }

    /// Re-checks injectivity, side consistency and the induced property.
    pub fn verify(&self, pattern: &BipartiteGraph, host: &BipartiteGraph) -> bool {
        if self.image.len() != pattern.num_vertices() {
            return false;
        }
        let distinct: HashSet<_> = self.image.iter().collect();
        if distinct.len() != self.image.len() || self.image.iter().any(|&h| h >= host.num_vertices()) {
            return false;
        }
        let sides_ok = self.image.iter().enumerate().all(|(p, &h)| {
            (pattern.side(p) == host.side(h)) != self.sides_swapped
        });
        sides_ok
            && (0..self.image.len()).all(|p| {
                (0..p).all(|q| pattern.adjacent(p, q) == host.adjacent(self.image[p], self.image[q]))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(len: usize) -> BipartiteGraph {
        // x_i adjacent to y_i and y_{i+1}
        let k = len / 2;
        BipartiteGraph::with_default_labels(k, k, (0..k).flat_map(|i| [(i, i), (i, (i + 1) % k)])).unwrap()
    }

    fn h1() -> BipartiteGraph {
        BipartiteGraph::with_default_labels(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)])
            .unwrap()
    }

    #[test]
    fn rejects_same_side_edge() {
        let err = BipartiteGraph::new(vec!["a", "b"], vec!["c"], &[("a", "b")]).unwrap_err();
        assert_eq!(err, GraphError::NotBipartite("a".into(), "b".into()));
        let err = BipartiteGraph::new(vec!["a"], vec!["c"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, GraphError::UnknownLabel("z".into()));
    }

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(
            BipartiteGraph::new(vec!["a", "a"], vec!["c"], &[]),
            Err(GraphError::DuplicateLabel(_))
        ));
        assert!(matches!(
            BipartiteGraph::new(vec!["a"], vec!["c"], &[("a", "c"), ("a", "c")]),
            Err(GraphError::DuplicateEdge(..))
        ));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let c = BipartiteGraph::complete(2, 2).bipartite_complement();
        assert_eq!(c.num_vertices(), 4);
        assert_eq!(c.num_edges(), 0);
    }

    #[test]
    fn complement_of_h1() {
        let c = h1().bipartite_complement();
        assert_eq!(c.edge_labels(), vec![("x1".into(), "y3".into()), ("x3".into(), "y1".into())]);
    }

    #[test]
    fn two_core() {
        let c4 = BipartiteGraph::complete(2, 2);
        assert_eq!(c4.degree_k_subgraph(2), c4);
        // C4 plus a pendant y3 on x1
        let g = BipartiteGraph::with_default_labels(2, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)]).unwrap();
        let (core, removed) = g.degree_k_subgraph_with_removed(2);
        assert_eq!(core, c4);
        assert_eq!(removed, vec!["y3".to_string()]);
        // a path is a tree and peels away entirely
        let path = BipartiteGraph::with_default_labels(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        assert_eq!(path.degree_k_subgraph(2).num_vertices(), 0);
    }

    #[test]
    fn chordless_cycles() {
        let c6 = cycle(6);
        let w = c6.chordless_cycle().expect("C6 has no chord");
        assert_eq!(w.len(), 6);
        assert!(w.verify(&c6));
        assert!(BipartiteGraph::complete(4, 5).is_chordal_bipartite());
        let c8 = cycle(8);
        assert_eq!(c8.chordless_cycle().unwrap().len(), 8);
        // H3: two 4-cycles joined by x2-y3
        let h3 = BipartiteGraph::with_default_labels(
            4,
            4,
            [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (1, 2)],
        )
        .unwrap();
        assert!(h3.is_chordal_bipartite());
    }

    #[test]
    fn minimum_length_witness() {
        // C8 with one chord splitting it into a C4 and a C6... a chord on an
        // 8-cycle x1 y1 x2 y2 x3 y3 x4 y4: chord x1-y2 leaves cycles of
        // length 4 (x1 y1 x2 y2) and 6 (x1 y2 x3 y3 x4 y4).
        let mut edges: Vec<(usize, usize)> = (0..4).flat_map(|i| [(i, i), (i, (i + 1) % 4)]).collect();
        edges.push((0, 2));
        let g = BipartiteGraph::with_default_labels(4, 4, edges).unwrap();
        let w = g.chordless_cycle().unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.verify(&g));
    }

    #[test]
    fn tree_diameter_predicate() {
        let p5 = BipartiteGraph::with_default_labels(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        assert!(!p5.is_essentially_tree_diameter_le3());
        let star = BipartiteGraph::complete(1, 6);
        assert!(star.is_essentially_tree_diameter_le3());
        let two_edges = BipartiteGraph::with_default_labels(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert!(!two_edges.is_essentially_tree_diameter_le3());
        let empty = BipartiteGraph::with_default_labels(3, 3, []).unwrap();
        assert!(empty.is_essentially_tree_diameter_le3());
        // isolated vertices are ignored
        let p4_plus = BipartiteGraph::with_default_labels(3, 3, [(0, 0), (1, 0), (1, 1)]).unwrap();
        assert!(p4_plus.is_essentially_tree_diameter_le3());
    }

    #[test]
    fn induced_subgraphs() {
        let k33 = BipartiteGraph::complete(3, 3);
        let sub = k33.induced_subgraph_by_labels(&["x1", "x2", "y1", "y2"]).unwrap();
        assert_eq!(sub, BipartiteGraph::complete(2, 2));
        assert_eq!(h1().induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap(), h1());
        assert!(matches!(k33.induced_subgraph_by_labels(&["q"]), Err(GraphError::UnknownLabel(_))));
    }

    #[test]
    fn induced_copy_search() {
        assert!(BipartiteGraph::complete(3, 3).find_induced_copy(&h1()).is_none());
        let edge = BipartiteGraph::complete(1, 1);
        let host = cycle(6);
        let e = host.find_induced_copy(&edge).unwrap();
        assert_eq!(e.image, vec![0, 3]);
        assert!(e.verify(&edge, &host));
        // pattern that only fits after swapping sides
        let star = BipartiteGraph::complete(1, 3);
        let host = BipartiteGraph::complete(3, 1);
        let e = host.find_induced_copy(&star).unwrap();
        assert!(e.sides_swapped);
        assert!(e.verify(&star, &host));
    }

    #[test]
    fn complete_detection() {
        assert_eq!(BipartiteGraph::complete(5, 5).is_complete_bipartite(), Some((5, 5)));
        let mut edges: Vec<(usize, usize)> = (0..4).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        edges.pop();
        let g = BipartiteGraph::with_default_labels(4, 3, edges).unwrap();
        assert_eq!(g.is_complete_bipartite(), None);
        let g = BipartiteGraph::with_default_labels(3, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(g.is_complete_bipartite(), Some((2, 2)));
    }
}
