//! Five-color injective edge colorings of Sierpinski graphs over a triangle,
//! with the boundary palettes that make them composable.
//!
//! A typed coloring pins the palette at the three extreme vertices: the top
//! extreme sees colors {1,4}; the bottom-right sees {3,5} with its 5-edge
//! having no neighboring 5-edge; the bottom-left sees {1,4} for type A and
//! {3,5} (again with an isolated 5-edge) for type B. Three typed copies of
//! dimension n-1 glue into a typed coloring of dimension n with the three
//! bridge edges colored 5. Gluing is sound only when no 5-edge sits within
//! distance one of an extreme's incident edges, so the contract checks that
//! for all three extremes.

use crate::coloring::{incidence_lists, validate_edge, EdgeColoring, Validity};
use crate::error::Error;
use crate::graph::Graph;
use crate::sierpinski::{Materialized, SierpinskiGraph, Word};
use crate::solver::{k_colorable, ColorConstraints, ConstrainedOutcome, ConstrainedStatus, SolveStatus};

pub const TYPE_COLORS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3Type {
    A,
    B,
}

impl S3Type {
    pub fn tag(&self) -> &'static str {
        match self {
            S3Type::A => "A",
            S3Type::B => "B",
        }
    }
}

/// An injective edge coloring of `S_{K_3}^n` with five colors satisfying the
/// type contract.
#[derive(Clone, Debug)]
pub struct TypedS3Coloring {
    pub tag: S3Type,
    pub dim: usize,
    pub coloring: EdgeColoring,
}

/// Base-vertex roles: 0 is the top extreme, 1 bottom-left, 2 bottom-right.
const TOP: usize = 0;
const BOTTOM_LEFT: usize = 1;
const BOTTOM_RIGHT: usize = 2;

fn require_k3(base: &Graph) -> Result<(), Error> {
    if base.order() != 3 || base.size() != 3 {
        return Err(Error::InvalidInput("typed colorings require the triangle base".into()));
    }
    Ok(())
}

/// Palette required at each extreme: `(low, high)` color pair.
fn palettes(tag: S3Type) -> [(usize, (usize, usize)); 3] {
    let five = (3, 5);
    let one_four = (1, 4);
    match tag {
        S3Type::A => [(TOP, one_four), (BOTTOM_LEFT, one_four), (BOTTOM_RIGHT, five)],
        S3Type::B => [(TOP, one_four), (BOTTOM_LEFT, five), (BOTTOM_RIGHT, five)],
    }
}

/// Verifies the full type contract: validity, five colors, extreme palettes,
/// isolated 5-edges at {3,5} extremes, and no 5-edge touching a neighbor of
/// any extreme.
pub fn check_type_contract(m: &Materialized, c: &EdgeColoring, tag: S3Type) -> Result<(), Error> {
    require_k3(&m.base)?;
    if m.dim < 3 {
        return Err(Error::Precondition("typed colorings live at dimension >= 3".into()));
    }
    if c.k != TYPE_COLORS {
        return Err(Error::Precondition(format!("expected k=5, got k={}", c.k)));
    }
    match validate_edge(&m.graph, c)? {
        Validity::Valid => {}
        Validity::Invalid(v) => {
            return Err(Error::Precondition(format!(
                "coloring is not injective: {}",
                v.describe(&m.graph)
            )))
        }
    }
    let inc = incidence_lists(&m.graph);
    for (base_vertex, (lo, hi)) in palettes(tag) {
        let e = m.index(&Word::constant(base_vertex, m.dim));
        let mut colors: Vec<usize> = inc[e].iter().map(|&i| c.color(i)).collect();
        colors.sort_unstable();
        if colors != vec![lo, hi] {
            return Err(Error::Precondition(format!(
                "extreme {base_vertex} has palette {colors:?}, expected [{lo}, {hi}]"
            )));
        }
        // no further 5-edge may touch a neighbor of the extreme; for a
        // {3,5} extreme this also makes the 5-edge isolated among 5s
        for &i in &inc[e] {
            let (u, v) = m.graph.edges()[i];
            let w = if u == e { v } else { u };
            for &j in &inc[w] {
                if j != i && c.color(j) == TYPE_COLORS {
                    return Err(Error::Precondition(format!(
                        "color 5 appears next to extreme {base_vertex}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Searches for a typed coloring by constrained proper coloring of the tilde
/// graph, trying the palette orientations in a fixed order.
pub fn typed_search(
    m: &Materialized,
    k: usize,
    tag: S3Type,
    budget: u64,
) -> Result<ConstrainedOutcome, Error> {
    require_k3(&m.base)?;
    if m.dim < 3 {
        return Err(Error::InvalidInput("typed search needs dimension >= 3".into()));
    }
    if k != TYPE_COLORS {
        return Err(Error::InvalidInput(format!("typed colorings use exactly 5 colors, got {k}")));
    }
    let conflict = crate::reductions::tilde_graph(&m.graph)?;
    let inc = incidence_lists(&m.graph);

    // per-extreme data: incident edge indices (each extreme has degree 2)
    let spots: Vec<(usize, [usize; 2])> = palettes(tag)
        .iter()
        .map(|&(base_vertex, _)| {
            let e = m.index(&Word::constant(base_vertex, m.dim));
            (e, [inc[e][0], inc[e][1]])
        })
        .collect();
    let pals: Vec<(usize, usize)> = palettes(tag).iter().map(|&(_, p)| p).collect();

    // edges near extremes (incident to a neighbor but not to the
    // extreme itself) may not use color 5
    let mut near_edges: Vec<usize> = Vec::new();
    for &(e, incident) in &spots {
        for &i in &incident {
            let (u, v) = m.graph.edges()[i];
            let w = if u == e { v } else { u };
            for &j in &inc[w] {
                if !incident.contains(&j) {
                    near_edges.push(j);
                }
            }
        }
    }
    near_edges.sort_unstable();
    near_edges.dedup();

    let mut explored = 0u64;
    let mut saw_unknown = false;
    for combo in 0..8u32 {
        let mut cons = ColorConstraints::none();
        for (s, (&(_, incident), &(lo, hi))) in spots.iter().zip(pals.iter()).enumerate() {
            let flip = (combo >> s) & 1 == 1;
            let (first, second) = if flip { (hi, lo) } else { (lo, hi) };
            cons.force(incident[0], first);
            cons.force(incident[1], second);
        }
        for &j in &near_edges {
            cons.forbid(j, TYPE_COLORS);
        }
        let remaining = budget.saturating_sub(explored);
        let outcome = k_colorable(&conflict.graph, k, &cons, remaining)?;
        explored += outcome.explored;
        match outcome.status {
            SolveStatus::Sat(colors) => {
                let cert = EdgeColoring::new(&m.graph, k, colors)?;
                check_type_contract(m, &cert, tag)
                    .map_err(|e| Error::Internal(format!("typed certificate failed: {e}")))?;
                return Ok(ConstrainedOutcome { status: ConstrainedStatus::Sat(cert), explored });
            }
            SolveStatus::Unsat => continue,
            SolveStatus::Unknown => {
                saw_unknown = true;
                break;
            }
        }
    }
    let status = if saw_unknown { ConstrainedStatus::Unknown } else { ConstrainedStatus::Unsat };
    Ok(ConstrainedOutcome { status, explored })
}

/// Search-derived type A and type B colorings at dimension 3.
pub fn s3_base_colorings(budget: u64) -> Result<(TypedS3Coloring, TypedS3Coloring), Error> {
    let m3 = SierpinskiGraph::new(Graph::complete(3), 3)?.materialize()?;
    let mut out = Vec::new();
    for tag in [S3Type::A, S3Type::B] {
        match typed_search(&m3, TYPE_COLORS, tag, budget)?.status {
            ConstrainedStatus::Sat(coloring) => {
                out.push(TypedS3Coloring { tag, dim: 3, coloring })
            }
            other => {
                return Err(Error::Internal(format!(
                    "type {} base coloring not found: {other:?}",
                    tag.tag()
                )))
            }
        }
    }
    let b = out.pop().unwrap();
    let a = out.pop().unwrap();
    Ok((a, b))
}

/// Copy layout for composition: which typed coloring goes into each copy.
fn composition_plan(want: S3Type) -> [S3Type; 3] {
    match want {
        // copies indexed by their first coordinate: 0 top, 1 bottom-left,
        // 2 bottom-right
        S3Type::A => [S3Type::B, S3Type::A, S3Type::A],
        S3Type::B => [S3Type::B, S3Type::B, S3Type::A],
    }
}

/// Glues three typed colorings of dimension n-1 into one of dimension n.
/// Bridge edges between copies receive color 5; copy edges inherit.
pub fn s3_compose(
    prev_a: &TypedS3Coloring,
    prev_b: &TypedS3Coloring,
    want: S3Type,
    m_prev: &Materialized,
    m_next: &Materialized,
) -> Result<TypedS3Coloring, Error> {
    require_k3(&m_prev.base)?;
    require_k3(&m_next.base)?;
    if m_next.dim != m_prev.dim + 1 || m_prev.dim < 3 {
        return Err(Error::Precondition(format!(
            "composition expects dimensions (n-1, n) with n-1 >= 3, got ({}, {})",
            m_prev.dim, m_next.dim
        )));
    }
    if prev_a.tag != S3Type::A || prev_b.tag != S3Type::B {
        return Err(Error::Precondition("inputs must be tagged A and B".into()));
    }
    for typed in [prev_a, prev_b] {
        if typed.dim != m_prev.dim {
            return Err(Error::Precondition("input dimension mismatch".into()));
        }
        check_type_contract(m_prev, &typed.coloring, typed.tag)?;
    }

    let plan = composition_plan(want);
    let pick = |tag: S3Type| match tag {
        S3Type::A => &prev_a.coloring,
        S3Type::B => &prev_b.coloring,
    };

    let mut colors = vec![0usize; m_next.graph.size()];
    for (i, &(a, b)) in m_next.graph.edges().iter().enumerate() {
        let wa = &m_next.words[a].0;
        let wb = &m_next.words[b].0;
        if wa[0] != wb[0] {
            colors[i] = TYPE_COLORS;
            continue;
        }
        let copy = wa[0];
        let ia = crate::sierpinski::word_index(&Word(wa[1..].to_vec()), 3);
        let ib = crate::sierpinski::word_index(&Word(wb[1..].to_vec()), 3);
        let edge = m_prev
            .graph
            .edge_index(ia, ib)
            .ok_or_else(|| Error::Internal("copy edge missing in smaller dimension".into()))?;
        colors[i] = pick(plan[copy]).color(edge);
    }
    let coloring = EdgeColoring::new(&m_next.graph, TYPE_COLORS, colors)?;
    check_type_contract(m_next, &coloring, want)
        .map_err(|e| Error::Internal(format!("composed coloring failed its contract: {e}")))?;
    Ok(TypedS3Coloring { tag: want, dim: m_next.dim, coloring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sierpinski::SierpinskiGraph;

    fn mat(dim: usize) -> Materialized {
        SierpinskiGraph::new(Graph::complete(3), dim).unwrap().materialize().unwrap()
    }

    #[test]
    fn base_colorings_satisfy_contracts() {
        let (a, b) = s3_base_colorings(100_000_000).unwrap();
        let m3 = mat(3);
        check_type_contract(&m3, &a.coloring, S3Type::A).unwrap();
        check_type_contract(&m3, &b.coloring, S3Type::B).unwrap();
        assert_eq!(a.coloring.used_colors(), 5);
        assert_eq!(b.coloring.used_colors(), 5);
        // bottom-left contracts differ between the types
        let bl = m3.index(&Word::constant(1, 3));
        let inc = incidence_lists(&m3.graph);
        let mut pal_a: Vec<usize> = inc[bl].iter().map(|&i| a.coloring.color(i)).collect();
        let mut pal_b: Vec<usize> = inc[bl].iter().map(|&i| b.coloring.color(i)).collect();
        pal_a.sort_unstable();
        pal_b.sort_unstable();
        assert_eq!(pal_a, vec![1, 4]);
        assert_eq!(pal_b, vec![3, 5]);
    }

    #[test]
    fn composition_to_dimension_four_works_for_both_types() {
        let (a, b) = s3_base_colorings(100_000_000).unwrap();
        let m3 = mat(3);
        let m4 = mat(4);
        let a4 = s3_compose(&a, &b, S3Type::A, &m3, &m4).unwrap();
        let b4 = s3_compose(&a, &b, S3Type::B, &m3, &m4).unwrap();
        assert_eq!(a4.coloring.used_colors(), 5);
        assert_eq!(b4.coloring.used_colors(), 5);
    }

    #[test]
    fn composition_iterates_to_dimension_seven() {
        let (mut a, mut b) = s3_base_colorings(100_000_000).unwrap();
        let mut m_prev = mat(3);
        for dim in 4..=7 {
            let m_next = mat(dim);
            let na = s3_compose(&a, &b, S3Type::A, &m_prev, &m_next).unwrap();
            let nb = s3_compose(&a, &b, S3Type::B, &m_prev, &m_next).unwrap();
            assert_eq!(na.coloring.used_colors(), 5, "dimension {dim}");
            assert_eq!(nb.coloring.used_colors(), 5, "dimension {dim}");
            a = na;
            b = nb;
            m_prev = m_next;
        }
    }

    #[test]
    fn composition_restricts_to_inputs_on_copies() {
        let (a, b) = s3_base_colorings(100_000_000).unwrap();
        let m3 = mat(3);
        let m4 = mat(4);
        let a4 = s3_compose(&a, &b, S3Type::A, &m3, &m4).unwrap();
        let plan = [S3Type::B, S3Type::A, S3Type::A];
        for (i, &(u, v)) in m3.graph.edges().iter().enumerate() {
            for copy in 0..3usize {
                let prefix = Word(vec![copy]);
                let (cu, cv) = crate::constructions::copy_map(&prefix, (&m3.words[u], &m3.words[v]));
                let iu = m4.index(&cu);
                let iv = m4.index(&cv);
                let edge = m4.graph.edge_index(iu, iv).expect("copy edge exists");
                let expected = match plan[copy] {
                    S3Type::A => a.coloring.color(i),
                    S3Type::B => b.coloring.color(i),
                };
                assert_eq!(a4.coloring.color(edge), expected);
            }
        }
    }
}
