//! Brute-force reference implementations for the test suites.
//!
//! These enumerate colorings directly on the original graph in plain index
//! order, checking the defining property as they go. They share no search
//! machinery with the solver module and no reduction with the conflict
//! graphs, so agreement between the two routes is meaningful.

use crate::graph::Graph;

/// Minimal proper coloring by plain backtracking over vertices in index
/// order.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    for k in 1..=g.order() {
        let mut colors = vec![0usize; g.order()];
        if proper_rec(g, k, &mut colors, 0, 0) {
            return k;
        }
    }
    unreachable!("rainbow coloring always works")
}

fn proper_rec(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, max_used: usize) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 1..=k.min(max_used + 1) {
        if g.neighbors(v).iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if proper_rec(g, k, colors, v + 1, max_used.max(c)) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Minimal injective vertex coloring: colorings are enumerated over the
/// graph itself, rejecting a color when an earlier vertex with the same
/// color shares a neighbor.
pub fn injective_chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    for k in 1..=g.order() {
        let mut colors = vec![0usize; g.order()];
        if injective_rec(g, k, &mut colors, 0, 0) {
            return k;
        }
    }
    unreachable!("rainbow coloring always works")
}

fn conflicts_injective(g: &Graph, colors: &[usize], v: usize, c: usize) -> bool {
    for &z in g.neighbors(v) {
        for &u in g.neighbors(z) {
            if u != v && colors[u] == c {
                return true;
            }
        }
    }
    false
}

fn injective_rec(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, max_used: usize) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 1..=k.min(max_used + 1) {
        if conflicts_injective(g, colors, v, c) {
            continue;
        }
        colors[v] = c;
        if injective_rec(g, k, colors, v + 1, max_used.max(c)) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Pairs of edges joined by a common edge, computed straight from the
/// definition: some third edge connects an endpoint of one to an endpoint of
/// the other.
fn edge_conflin_pairs(g: &Graph) -> Vec<Vec<bool>> {
    let m = g.size();
    let edges = g.edges();
    let mut conflict = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let (x, y) = edges[a];
            let (z, u) = edges[b];
            let hit = [(x, z), (x, u), (y, z), (y, u)].iter().any(|&(p, q)| {
                p != q
                    && g.adjacent(p, q)
                    && (p.min(q), p.max(q)) != edges[a]
                    && (p.min(q), p.max(q)) != edges[b]
            });
            if hit {
                conflict[a][b] = true;
                conflict[b][a] = true;
            }
        }
    }
    conflict
}

/// Minimal injective edge coloring by backtracking over edges in canonical
/// order against the directly computed conflict pairs.
pub fn injective_chromatic_index(g: &Graph) -> usize {
    let m = g.size();
    if m == 0 {
        return 0;
    }
    let conflict = edge_conflin_pairs(g);
    for k in 1..=m {
        let mut colors = vec![0usize; m];
        if index_rec(&conflict, k, &mut colors, 0, 0) {
            return k;
        }
    }
    unreachable!("rainbow coloring always works")
}

fn index_rec(
    conflict: &[Vec<bool>],
    k: usize,
    colors: &mut Vec<usize>,
    e: usize,
    max_used: usize,
) -> bool {
    if e == conflict.len() {
        return true;
    }
    for c in 1..=k.min(max_used + 1) {
        if (0..e).any(|f| conflict[e][f] && colors[f] == c) {
            continue;
        }
        colors[e] = c;
        if index_rec(conflict, k, colors, e + 1, max_used.max(c)) {
            return true;
        }
        colors[e] = 0;
    }
    false
}
