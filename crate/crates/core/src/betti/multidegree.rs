use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::BipartiteGraph;

/// A vertex-indexed exponent vector `α` (unified vertex order: X then Y).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multidegree(pub Vec<u32>);

impl Multidegree {
    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// `|α| = Σ α_v`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Sums over the X block (first `num_x` entries) and the Y block.
    pub fn side_sums(&self, num_x: usize) -> (u32, u32) {
        let (x, y) = self.0.split_at(num_x);
        (x.iter().sum(), y.iter().sum())
    }

    /// Unified indices with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(v, _)| v).collect()
    }

    /// Human-readable form listing nonzero entries by label.
    pub fn describe(&self, g: &BipartiteGraph) -> String {
        let parts: Vec<String> = self
            .support()
            .into_iter()
            .map(|v| format!("{}^{}", g.label(v), self.0[v]))
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All multidegrees `α` with `|α| = 2j` whose fiber is nonempty, in
/// lexicographic order. Nonemptiness is decided by a transportation
/// (max-flow) feasibility test on the edges of `g`.
pub fn relevant_multidegrees(g: &BipartiteGraph, j: u32) -> Vec<Multidegree> {
    let (m, n) = (g.num_x(), g.num_y());
    let x_caps: Vec<u32> = (0..m).map(|x| if g.degree(x) > 0 { j } else { 0 }).collect();
    let y_caps: Vec<u32> = (0..n).map(|y| if g.degree(m + y) > 0 { j } else { 0 }).collect();
    let xs = compositions(j, &x_caps);
    let ys = compositions(j, &y_caps);
    let mut out = Vec::new();
    for ax in &xs {
        for ay in &ys {
            if transport_feasible(g, ax, ay) {
                let mut v = ax.clone();
                v.extend_from_slice(ay);
                out.push(Multidegree(v));
            }
        }
    }
    out
}

/// Vectors `c` with `Σ c = total` and `c_i ≤ caps_i`, lexicographic order.
pub(crate) fn compositions(total: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, caps: &[u32], suffix_cap: &[u64], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining positions must be able to absorb what is left
        let hi = caps[pos].min(left);
        for a in 0..=hi {
            if (left - a) as u64 > suffix_cap[pos + 1] {
                continue;
            }
            cur.push(a);
            rec(pos + 1, left - a, caps, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let mut suffix = vec![0u64; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix[i] = suffix[i + 1] + caps[i] as u64;
    }
    let mut out = Vec::new();
    rec(0, total, caps, &suffix, &mut Vec::with_capacity(caps.len()), &mut out);
    out
}

/// Is there a nonnegative integer edge weighting of `g` with X-degrees `ax`
/// and Y-degrees `ay`?
pub(crate) fn transport_feasible(g: &BipartiteGraph, ax: &[u32], ay: &[u32]) -> bool {
    let total: u32 = ax.iter().sum();
    if total != ay.iter().sum::<u32>() {
        return false;
    }
    if total == 0 {
        return true;
    }
    let (m, n) = (g.num_x(), g.num_y());
    // nodes: 0 = source, 1..=m X, m+1..=m+n Y, m+n+1 = sink
    let size = m + n + 2;
    let sink = size - 1;
    let mut cap = vec![vec![0u64; size]; size];
    for x in 0..m {
        cap[0][1 + x] = ax[x] as u64;
        for &y in g.x_neighbors(x) {
            cap[1 + x][1 + m + y] = total as u64;
        }
    }
    for y in 0..n {
        cap[1 + m + y][sink] = ay[y] as u64;
    }
    let mut flow = 0u64;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..size {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut bottleneck = u64::MAX;
        let mut v = sink;
        while v != 0 {
            let u = prev[v];
            bottleneck = bottleneck.min(cap[u][v]);
            v = u;
        }
        let mut v = sink;
        while v != 0 {
            let u = prev[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck;
    }
    flow == total as u64
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn square_has_one_degree_two_multidegree() {
        let g = BipartiteGraph::complete(2, 2);
        assert_eq!(relevant_multidegrees(&g, 2).iter().filter(|a| a.0 == vec![1, 1, 1, 1]).count(), 1);
        // all nine (a, 2-a; b, 2-b) pairs are feasible in K_{2,2}
        assert_eq!(relevant_multidegrees(&g, 2).len(), 9);
    }

    #[test]
    fn single_edge() {
        let g = BipartiteGraph::complete(1, 1);
        assert_eq!(relevant_multidegrees(&g, 1), vec![Multidegree(vec![1, 1])]);
    }

    #[test]
    fn six_cycle_matches_edge_pair_enumeration() {
        let g = BipartiteGraph::with_default_labels(3, 3, (0..3).flat_map(|i| [(i, i), (i, (i + 1) % 3)]))
            .unwrap();
        let edges = g.edges();
        let mut brute = BTreeSet::new();
        for a in 0..edges.len() {
            for b in a..edges.len() {
                let mut v = vec![0u32; 6];
                for &(x, y) in [edges[a], edges[b]].iter() {
                    v[x] += 1;
                    v[3 + y] += 1;
                }
                brute.insert(Multidegree(v));
            }
        }
        let got: BTreeSet<_> = relevant_multidegrees(&g, 2).into_iter().collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn compositions_respect_caps() {
        let c = compositions(2, &[1, 0, 2]);
        assert_eq!(c, vec![vec![0, 0, 2], vec![1, 0, 1]]);
    }
}
