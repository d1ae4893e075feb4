//! Isomorphism-invariant keys for `(G[supp α], α|supp α)`.
//!
//! `Γ(α)` only sees the subgraph induced on the support of `α` and the
//! exponents there, so two multidegrees with isomorphic weighted supports
//! have the same homology. Keys are built by collapsing twin vertices (same
//! side, exponent and neighbourhood), refining colours, and taking the least
//! adjacency pattern over all orderings compatible with the colour cells.
//! When that search would be too large the key falls back to the raw
//! labelled multidegree, which is always sound.

use crate::betti::multidegree::Multidegree;
use crate::graph::BipartiteGraph;

const MAX_ORDERINGS: u64 = 40_320;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    /// Class labels `(side, exponent, multiplicity)` in canonical order
    /// followed by the class adjacency bits, row by row.
    Canonical(Vec<u32>),
    Raw(Vec<u32>),
}

struct Class {
    side: u32,
    weight: u32,
    count: u32,
    /// neighbour class indices
    adj: Vec<bool>,
}

pub fn canonical_key(g: &BipartiteGraph, alpha: &Multidegree) -> Key {
    let classes = twin_classes(g, alpha);
    let plain = best_form(&classes, false);
    let swapped = best_form(&classes, true);
    match (plain, swapped) {
        (Some(a), Some(b)) => Key::Canonical(a.min(b)),
        _ => Key::Raw(alpha.0.clone()),
    }
}

fn twin_classes(g: &BipartiteGraph, alpha: &Multidegree) -> Vec<Class> {
    let m = g.num_x();
    let support = alpha.support();
    // signature: (side, weight, neighbourhood restricted to the support)
    let mut sigs: Vec<(u32, u32, Vec<usize>)> = Vec::new();
    let mut counts: Vec<u32> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    for &v in &support {
        let side = u32::from(v >= m);
        let nbrs: Vec<usize> = g.neighbors(v).into_iter().filter(|u| alpha.0[*u] > 0).collect();
        let sig = (side, alpha.0[v], nbrs);
        match sigs.iter().position(|s| *s == sig) {
            Some(c) => counts[c] += 1,
            None => {
                sigs.push(sig);
                counts.push(1);
                members.push(v);
            }
        }
    }
    let k = sigs.len();
    (0..k)
        .map(|c| Class {
            side: sigs[c].0,
            weight: sigs[c].1,
            count: counts[c],
            adj: (0..k).map(|d| g.adjacent(members[c], members[d])).collect(),
        })
        .collect()
}

/// Colour refinement; returns a colour per class where colours are ranks of
/// isomorphism-invariant signatures.
fn refine(classes: &[Class], swap: bool) -> Vec<usize> {
    let k = classes.len();
    let init: Vec<(u32, u32, u32)> =
        classes.iter().map(|c| (c.side ^ u32::from(swap), c.weight, c.count)).collect();
    let mut colour = rank_signatures(&init);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..k)
            .map(|c| {
                let mut nb: Vec<usize> = (0..k).filter(|&d| classes[c].adj[d]).map(|d| colour[d]).collect();
                nb.sort_unstable();
                (colour[c], nb)
            })
            .collect();
        let next = rank_signatures(&sigs);
        let stable = distinct(&next) == distinct(&colour);
        colour = next;
        if stable {
            return colour;
        }
    }
}

fn rank_signatures<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(s).expect("present")).collect()
}

fn distinct(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Least encoding over all class orders that list colour cells in colour
/// order. `None` if there are too many such orders.
fn best_form(classes: &[Class], swap: bool) -> Option<Vec<u32>> {
    let colour = refine(classes, swap);
    let ncol = colour.iter().max().map_or(0, |c| c + 1);
    let cells: Vec<Vec<usize>> = (0..ncol).map(|c| (0..classes.len()).filter(|&i| colour[i] == c).collect()).collect();
    let orderings: u64 = cells
        .iter()
        .try_fold(1u64, |acc, cell| acc.checked_mul((1..=cell.len() as u64).product()))?;
    if orderings > MAX_ORDERINGS {
        return None;
    }
    let mut best: Option<Vec<u32>> = None;
    let mut order = Vec::with_capacity(classes.len());
    permute_cells(&cells, 0, &mut order, &mut |order| {
        let enc = encode(classes, order, swap);
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    });
    best.or_else(|| Some(Vec::new()))
}

fn permute_cells(cells: &[Vec<usize>], at: usize, order: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at == cells.len() {
        f(order);
        return;
    }
    let mut cell = cells[at].clone();
    let len = cell.len();
    heap_permutations(&mut cell, len, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(cells, at + 1, order, f);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, f);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, f);
}

fn encode(classes: &[Class], order: &[usize], swap: bool) -> Vec<u32> {
    let mut out = Vec::with_capacity(order.len() * (3 + order.len()));
    for &c in order {
        out.extend([classes[c].side ^ u32::from(swap), classes[c].weight, classes[c].count]);
    }
    for &a in order {
        for &b in order {
            out.push(u32::from(classes[a].adj[b]));
        }
    }
    out
}
