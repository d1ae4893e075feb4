use std::collections::HashSet;

use thiserror::Error;

use crate::betti::fiber::fiber;
use crate::betti::multidegree::Multidegree;
use crate::graph::BipartiteGraph;

/// Widest vertex set a complex may have: faces are stored as `u128` masks.
pub const MAX_COMPLEX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has {0} vertices; at most {MAX_COMPLEX_VERTICES} are supported")]
    TooManyVertices(usize),
}

/// A simplicial complex stored by its facets. For `Γ(α)` the vertices are
/// edge indices of the graph and the facets are the maximal supports of
/// monomials in the fiber `C_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorComplex {
    vertices: Vec<usize>,
    facets: Vec<Vec<usize>>,
    masks: Vec<u128>,
}

impl DivisorComplex {
    /// The void complex (no faces at all, not even the empty face).
    pub fn void() -> Self {
        Self { vertices: Vec::new(), facets: Vec::new(), masks: Vec::new() }
    }

    /// Complex generated by the given faces; non-maximal ones are dropped.
    /// An empty generator list gives the void complex; a list containing only
    /// the empty set gives `{∅}`.
    pub fn from_facets(generators: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let mut vertices: Vec<usize> = generators.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > MAX_COMPLEX_VERTICES {
            return Err(ComplexError::TooManyVertices(vertices.len()));
        }
        let local = |v: usize| vertices.binary_search(&v).expect("vertex present");
        let mut masks: Vec<u128> = generators
            .iter()
            .map(|f| f.iter().fold(0u128, |acc, &v| acc | (1u128 << local(v))))
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u128> = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&h| h != f && h & f == f))
            .collect();
        let mut facets: Vec<Vec<usize>> = maximal
            .iter()
            .map(|&f| (0..vertices.len()).filter(|&i| f >> i & 1 == 1).map(|i| vertices[i]).collect())
            .collect();
        facets.sort();
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0u128, |acc, &v| acc | (1u128 << local(v))))
            .collect();
        Ok(Self { vertices, facets, masks })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Facets as sorted vertex lists, in lexicographic order.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension (largest facet size minus one); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// A complex whose facets all share a vertex is a cone, hence acyclic.
    pub fn is_cone(&self) -> bool {
        !self.masks.is_empty() && self.masks.iter().fold(u128::MAX, |acc, &f| acc & f) != 0
    }

    /// Upper bound on the number of faces of dimension `0..=max_dim`,
    /// counting each facet's faces separately.
    pub fn predicted_face_count(&self, max_dim: usize) -> u128 {
        self.facets
            .iter()
            .map(|f| (1..=max_dim + 1).map(|k| binomial(f.len(), k)).sum::<u128>())
            .sum()
    }

    /// Faces of dimension `d` (size `d + 1`) as masks over the local vertex
    /// order, sorted ascending.
    pub(crate) fn face_masks(&self, d: usize) -> Vec<u128> {
        let k = d + 1;
        let mut set = HashSet::new();
        for &f in &self.masks {
            let bits: Vec<u32> = (0..128).filter(|&i| f >> i & 1 == 1).collect();
            if bits.len() < k {
                continue;
            }
            for_each_subset(&bits, k, &mut |mask| {
                set.insert(mask);
            });
        }
        let mut faces: Vec<u128> = set.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None | Some(-1) => Vec::new(),
            Some(d) => (0..=d as usize).map(|k| self.face_masks(k).len()).collect(),
        }
    }
}

/// `Γ(α)`: the simplicial complex on the edges of `g` whose faces are the
/// supports of monomials in the fiber `C_α`, and their subsets.
pub fn divisor_complex(g: &BipartiteGraph, alpha: &Multidegree) -> Result<DivisorComplex, ComplexError> {
    let supports = fiber(g, alpha).iter().map(|f| f.support()).collect();
    DivisorComplex::from_facets(supports)
}

fn for_each_subset(bits: &[u32], k: usize, f: &mut impl FnMut(u128)) {
    fn rec(bits: &[u32], k: usize, start: usize, acc: u128, f: &mut impl FnMut(u128)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..=bits.len() - k {
            rec(bits, k - 1, i + 1, acc | (1u128 << bits[i]), f);
        }
    }
    rec(bits, k, 0, 0, f);
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn two_squares_complex_facets() {
        let h2 = catalog::obstruction(2);
        let c = divisor_complex(h2, &Multidegree(vec![1; 8])).unwrap();
        let edges = h2.edges();
        let named: Vec<Vec<String>> = c
            .facets()
            .iter()
            .map(|f| {
                f.iter().map(|&e| format!("e{}{}", edges[e].0 + 1, edges[e].1 + 1)).collect()
            })
            .collect();
        let expect = |s: [&str; 4]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            named,
            vec![
                expect(["e11", "e22", "e33", "e44"]),
                expect(["e11", "e22", "e34", "e43"]),
                expect(["e12", "e21", "e33", "e44"]),
                expect(["e12", "e21", "e34", "e43"]),
            ]
        );
    }

    #[test]
    fn square_complex_is_two_disjoint_edges() {
        let g = BipartiteGraph::complete(2, 2);
        let c = divisor_complex(&g, &Multidegree(vec![1, 1, 1, 1])).unwrap();
        // edge order: e11=0, e12=1, e21=2, e22=3
        assert_eq!(c.facets(), &[vec![0, 3], vec![1, 2]]);
        assert!(!c.is_cone());
    }

    #[test]
    fn squared_edge_is_a_point() {
        let g = BipartiteGraph::complete(1, 1);
        let c = divisor_complex(&g, &Multidegree(vec![2, 2])).unwrap();
        assert_eq!(c.facets(), &[vec![0]]);
        assert!(c.is_cone());
    }

    #[test]
    fn maximality_and_f_vector() {
        let c = DivisorComplex::from_facets(vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.f_vector(), vec![3, 3]);
        assert_eq!(c.dimension(), Some(1));
        assert!(DivisorComplex::void().is_void());
    }
}
