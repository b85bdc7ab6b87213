//! Executable coloring constructions: each builds a coloring of a larger
//! Sierpinski graph from a smaller certificate, checks its preconditions,
//! and validates its output.

use std::collections::BTreeMap;

use crate::coloring::{
    check_condition_i, check_condition_ii, check_extreme_condition, validate_bipartition,
    validate_edge, validate_vertex, EdgeColoring, Validity, VertexColoring,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::sierpinski::{Materialized, SierpinskiGraph, Word};

/// Per-edge designated endpoint, used by the edge lifts to decide which
/// extreme-incident copy edges are recolored.
#[derive(Clone, Debug)]
pub struct ChoiceFunction {
    chosen: BTreeMap<(usize, usize), usize>,
}

impl ChoiceFunction {
    /// Default choice: the smaller endpoint of every edge.
    pub fn lexicographic(g: &Graph) -> ChoiceFunction {
        let chosen = g.edges().iter().map(|&(u, v)| ((u, v), u)).collect();
        ChoiceFunction { chosen }
    }

    /// The larger endpoint of every edge.
    pub fn reversed(g: &Graph) -> ChoiceFunction {
        let chosen = g.edges().iter().map(|&(u, v)| ((u, v), v)).collect();
        ChoiceFunction { chosen }
    }

    pub fn new(g: &Graph, chosen: BTreeMap<(usize, usize), usize>) -> Result<ChoiceFunction, Error> {
        for &(u, v) in g.edges() {
            match chosen.get(&(u, v)) {
                Some(&c) if c == u || c == v => {}
                Some(&c) => {
                    return Err(Error::InvalidInput(format!(
                        "chosen vertex {c} is not an endpoint of ({u},{v})"
                    )))
                }
                None => {
                    return Err(Error::InvalidInput(format!("edge ({u},{v}) has no chosen vertex")))
                }
            }
        }
        if chosen.len() != g.size() {
            return Err(Error::InvalidInput("choice function mentions unknown edges".into()));
        }
        Ok(ChoiceFunction { chosen })
    }

    pub fn chosen(&self, u: usize, v: usize) -> usize {
        self.chosen[&(u.min(v), u.max(v))]
    }
}

/// Prepends a prefix to both endpoints of an edge of a smaller-dimension
/// graph, yielding the corresponding copy edge.
pub fn copy_map(prefix: &Word, e: (&Word, &Word)) -> (Word, Word) {
    let extend = |w: &Word| {
        let mut coords = prefix.0.clone();
        coords.extend_from_slice(&w.0);
        Word(coords)
    };
    (extend(e.0), extend(e.1))
}

fn require_same_base(a: &Materialized, b: &Materialized) -> Result<(), Error> {
    if a.base.descriptor() != b.base.descriptor() {
        return Err(Error::Precondition("graphs are over different base graphs".into()));
    }
    Ok(())
}

fn require_valid_vertex(m: &Materialized, f: &VertexColoring) -> Result<(), Error> {
    match validate_vertex(&m.graph, f)? {
        Validity::Valid => Ok(()),
        Validity::Invalid(v) => Err(Error::Precondition(format!(
            "input coloring is not injective: {}",
            v.describe(&m.graph)
        ))),
    }
}

fn require_valid_edge(m: &Materialized, c: &EdgeColoring) -> Result<(), Error> {
    match validate_edge(&m.graph, c)? {
        Validity::Valid => Ok(()),
        Validity::Invalid(v) => Err(Error::Precondition(format!(
            "input coloring is not injective: {}",
            v.describe(&m.graph)
        ))),
    }
}

fn validated_vertex_output(m: &Materialized, f: VertexColoring) -> Result<VertexColoring, Error> {
    match validate_vertex(&m.graph, &f)? {
        Validity::Valid => Ok(f),
        Validity::Invalid(v) => Err(Error::Internal(format!(
            "constructed coloring is not injective: {}",
            v.describe(&m.graph)
        ))),
    }
}

fn validated_edge_output(m: &Materialized, c: EdgeColoring) -> Result<EdgeColoring, Error> {
    match validate_edge(&m.graph, &c)? {
        Validity::Valid => Ok(c),
        Validity::Invalid(v) => Err(Error::Internal(format!(
            "constructed coloring is not injective: {}",
            v.describe(&m.graph)
        ))),
    }
}

/// Lifts an injective coloring of the dimension-2 graph to dimension n >= 3
/// by projecting onto the last two coordinates, spending one extra color on
/// the vertices whose last two coordinates agree.
pub fn lift_vertex_plus_one(
    f2: &VertexColoring,
    m2: &Materialized,
    mn: &Materialized,
) -> Result<VertexColoring, Error> {
    require_same_base(m2, mn)?;
    if m2.dim != 2 || mn.dim < 3 {
        return Err(Error::Precondition(format!(
            "lift expects dimensions (2, n>=3), got ({}, {})",
            m2.dim, mn.dim
        )));
    }
    f2.check_pairing(&m2.graph)?;
    require_valid_vertex(m2, f2)?;

    let fresh = f2.k + 1;
    let colors: Vec<usize> = mn
        .words
        .iter()
        .map(|w| {
            let tail = &w.0[mn.dim - 2..];
            if tail[0] == tail[1] {
                fresh
            } else {
                f2.color(m2.index(&Word(tail.to_vec())))
            }
        })
        .collect();
    validated_vertex_output(mn, VertexColoring::new(&mn.graph, fresh, colors)?)
}

/// Why the extreme condition fails, or `None` when it holds.
pub fn extreme_condition_report(
    m2: &Materialized,
    f2: &VertexColoring,
) -> Result<Option<String>, Error> {
    if check_extreme_condition(m2, f2)? {
        return Ok(None);
    }
    let extremes = m2.extreme_indices();
    let shared = f2.color(extremes[0]);
    for &e in &extremes {
        if f2.color(e) != shared {
            return Ok(Some(format!(
                "extreme vertices {} and {} carry different colors",
                m2.graph.label(extremes[0]),
                m2.graph.label(e)
            )));
        }
    }
    for &e in &extremes {
        if let Some(&u) = m2.graph.neighbors(e).iter().find(|&&u| f2.color(u) == shared) {
            return Ok(Some(format!(
                "extreme color {shared} reappears on {} next to extreme {}",
                m2.graph.label(u),
                m2.graph.label(e)
            )));
        }
    }
    Ok(Some("extreme condition fails".into()))
}

/// Lifts a coloring of the dimension-2 graph whose extreme vertices share a
/// color that avoids their neighborhoods: projection onto the last two
/// coordinates, no new color.
pub fn lift_vertex_projection(
    f2: &VertexColoring,
    m2: &Materialized,
    mn: &Materialized,
) -> Result<VertexColoring, Error> {
    require_same_base(m2, mn)?;
    if m2.dim != 2 || mn.dim < 2 {
        return Err(Error::Precondition(format!(
            "lift expects dimensions (2, n>=2), got ({}, {})",
            m2.dim, mn.dim
        )));
    }
    f2.check_pairing(&m2.graph)?;
    require_valid_vertex(m2, f2)?;
    if let Some(reason) = extreme_condition_report(m2, f2)? {
        return Err(Error::Precondition(reason));
    }

    let colors: Vec<usize> = mn
        .words
        .iter()
        .map(|w| {
            let tail = &w.0[mn.dim - 2..];
            f2.color(m2.index(&Word(tail.to_vec())))
        })
        .collect();
    validated_vertex_output(mn, VertexColoring::new(&mn.graph, f2.k, colors)?)
}

/// Builds a coloring of the dimension-2 graph from an injective coloring of
/// the base: non-extreme vertices project to their second coordinate,
/// extremes take a fresh shared color. The output satisfies the extreme
/// condition, so it feeds the projection lift.
pub fn extreme_plus_one_s2(
    f: &VertexColoring,
    base: &Graph,
    m2: &Materialized,
) -> Result<VertexColoring, Error> {
    if m2.dim != 2 {
        return Err(Error::Precondition("target must have dimension 2".into()));
    }
    if base.descriptor() != m2.base.descriptor() {
        return Err(Error::Precondition("coloring is not over the target's base graph".into()));
    }
    f.check_pairing(base)?;
    match validate_vertex(base, f)? {
        Validity::Valid => {}
        Validity::Invalid(v) => {
            return Err(Error::Precondition(format!(
                "input coloring is not injective: {}",
                v.describe(base)
            )))
        }
    }

    let fresh = f.k + 1;
    let colors: Vec<usize> = m2
        .words
        .iter()
        .map(|w| if w.0[0] == w.0[1] { fresh } else { f.color(w.0[1]) })
        .collect();
    let out = validated_vertex_output(m2, VertexColoring::new(&m2.graph, fresh, colors)?)?;
    if !check_extreme_condition(m2, &out)? {
        return Err(Error::Internal("output misses the extreme condition".into()));
    }
    Ok(out)
}

/// The dimension-2 coloring over a cycle that colors every extreme 3 and
/// keeps color 3 away from their neighborhoods. Within copy `i`, the vertex
/// `(i, i+off)` is colored by offset: 3 at the extreme, 2 at offsets 1 and
/// 2, 1 at offsets -1 and -2, and an alternating 1122 fill in between,
/// finished per `k mod 4` with a short tail (`3` / `3,3` / `3,3,2`).
///
/// No such coloring exists for k=3: the three copies are triangles that
/// would need the cross-edges to 2-color like a proper edge coloring of the
/// triangle. k=4 uses a rotated variant of the same pattern.
pub fn cycle_s2_coloring(k: usize) -> Result<(Materialized, VertexColoring), Error> {
    if k < 3 {
        return Err(Error::InvalidInput(format!("cycle needs k>=3, got {k}")));
    }
    if k == 3 {
        return Err(Error::Precondition(
            "no injective 3-coloring of the dimension-2 graph over C3 satisfies the extreme condition"
                .into(),
        ));
    }
    let m2 = SierpinskiGraph::new(Graph::cycle(k)?, 2)?.materialize()?;

    let offset_color = |off: usize| -> usize {
        if k == 4 {
            // rotated pattern: a_i = [2,2,1,1][i] per copy, handled below
            unreachable!()
        }
        match off {
            0 => 3,
            1 | 2 => 2,
            o if o == k - 1 || o == k - 2 => 1,
            o => {
                let fill_len = k - 5;
                let tail_len = fill_len % 4;
                let p = o - 3;
                if p < fill_len - tail_len {
                    [1, 1, 2, 2][p % 4]
                } else {
                    [3, 3, 2][p - (fill_len - tail_len)]
                }
            }
        }
    };

    let colors: Vec<usize> = m2
        .words
        .iter()
        .map(|w| {
            let (i, j) = (w.0[0], w.0[1]);
            let off = (j + k - i) % k;
            if k == 4 {
                let a = [2, 2, 1, 1];
                match off {
                    0 => 3,
                    1 => a[i],
                    2 => a[(i + 1) % 4],
                    _ => 3 - a[i],
                }
            } else {
                offset_color(off)
            }
        })
        .collect();
    let f = validated_vertex_output(&m2, VertexColoring::new(&m2.graph, 3, colors)?)?;
    if !check_extreme_condition(&m2, &f)? {
        return Err(Error::Internal("cycle coloring misses the extreme condition".into()));
    }
    Ok((m2, f))
}

/// Copy-extreme vertices that receive the recolor treatment in the general
/// edge lift: extremes of a dimension-3 copy with a neighbor in another copy
/// whose own base letter is the chosen endpoint of the crossing base edge.
fn marked_vertices(mn: &Materialized, choice: &ChoiceFunction) -> Result<Vec<bool>, Error> {
    let n = mn.dim;
    let mut marked = vec![false; mn.graph.order()];
    for &(a, b) in mn.graph.edges() {
        let (pa, sa) = mn.split_word(a, 3);
        let (pb, sb) = mn.split_word(b, 3);
        if pa == pb {
            continue;
        }
        // bridge between dimension-3 copies: suffixes are constant
        let x = sa[0];
        let y = sb[0];
        if !(sa.iter().all(|&c| c == x) && sb.iter().all(|&c| c == y)) {
            return Err(Error::Internal(format!(
                "edge between copies lacks constant suffixes at dimension {n}"
            )));
        }
        let chosen = choice.chosen(x, y);
        if chosen == x {
            marked[a] = true;
        } else {
            marked[b] = true;
        }
    }
    Ok(marked)
}

fn edge_lift(
    f3: &EdgeColoring,
    m3: &Materialized,
    mn: &Materialized,
    choice: Option<&ChoiceFunction>,
    crossing_color: usize,
    k_out: usize,
) -> Result<EdgeColoring, Error> {
    let marked = match choice {
        Some(c) => marked_vertices(mn, c)?,
        None => vec![false; mn.graph.order()],
    };
    let mut colors = vec![0usize; mn.graph.size()];
    for (i, &(a, b)) in mn.graph.edges().iter().enumerate() {
        let (pa, sa) = mn.split_word(a, 3);
        let (pb, sb) = mn.split_word(b, 3);
        if pa != pb || marked[a] || marked[b] {
            colors[i] = crossing_color;
            continue;
        }
        let ia = crate::sierpinski::word_index(&Word(sa.to_vec()), m3.base.order());
        let ib = crate::sierpinski::word_index(&Word(sb.to_vec()), m3.base.order());
        let edge = m3
            .graph
            .edge_index(ia, ib)
            .ok_or_else(|| Error::Internal("copy edge missing at dimension 3".into()))?;
        colors[i] = f3.color(edge);
    }
    validated_edge_output(mn, EdgeColoring::new(&mn.graph, k_out, colors)?)
}

fn edge_lift_preconditions(
    f3: &EdgeColoring,
    m3: &Materialized,
    mn: &Materialized,
) -> Result<(), Error> {
    require_same_base(m3, mn)?;
    if m3.dim != 3 || mn.dim < 4 {
        return Err(Error::Precondition(format!(
            "edge lift expects dimensions (3, n>=4), got ({}, {})",
            m3.dim, mn.dim
        )));
    }
    if let Some((a, b, c)) = m3.base.find_triangle() {
        return Err(Error::Triangle(a, b, c));
    }
    f3.check_pairing(&m3.graph)?;
    require_valid_edge(m3, f3)
}

/// General edge lift for triangle-free bases: crossing edges and the edges
/// at chosen copy-extremes receive a fresh color k+1, everything else
/// inherits.
pub fn edge_lift_general(
    f3: &EdgeColoring,
    m3: &Materialized,
    mn: &Materialized,
    choice: &ChoiceFunction,
) -> Result<EdgeColoring, Error> {
    edge_lift_preconditions(f3, m3, mn)?;
    edge_lift(f3, m3, mn, Some(choice), f3.k + 1, f3.k + 1)
}

/// Same recoloring as the general lift but reusing the top color k, allowed
/// when no color-k edge of the input comes within distance 2 of an extreme.
pub fn edge_lift_condition_i(
    f3: &EdgeColoring,
    m3: &Materialized,
    mn: &Materialized,
    choice: &ChoiceFunction,
) -> Result<EdgeColoring, Error> {
    edge_lift_preconditions(f3, m3, mn)?;
    if !check_condition_i(m3, f3)? {
        let near = crate::solver::ball_indices(&m3.graph, &m3.extreme_indices(), 2);
        let witness = m3
            .graph
            .edges()
            .iter()
            .enumerate()
            .find(|(i, &(u, v))| f3.color(*i) == f3.k && (near[u] || near[v]))
            .map(|(_, &(u, v))| {
                format!(
                    "color-{} edge {}|{} lies within distance 2 of an extreme vertex",
                    f3.k,
                    m3.graph.label(u),
                    m3.graph.label(v)
                )
            })
            .unwrap_or_else(|| "distance condition fails".into());
        return Err(Error::Precondition(witness));
    }
    edge_lift(f3, m3, mn, Some(choice), f3.k, f3.k)
}

/// Bipartite edge lift: copy edges inherit unchanged and crossing edges
/// receive color k; sound when edges at A-extremes already carry k and no
/// color-k edge touches the neighborhood of a B-extreme.
pub fn edge_lift_condition_ii(
    f3: &EdgeColoring,
    m3: &Materialized,
    mn: &Materialized,
    a_side: &[usize],
) -> Result<EdgeColoring, Error> {
    edge_lift_preconditions(f3, m3, mn)?;
    let (_, b) = validate_bipartition(&m3.base, a_side)?;
    if !check_condition_ii(m3, f3, a_side)? {
        let b_extremes: Vec<usize> =
            b.iter().map(|&v| m3.index(&Word::constant(v, 3))).collect();
        let near = crate::solver::ball_indices(&m3.graph, &b_extremes, 1);
        let witness = m3
            .graph
            .edges()
            .iter()
            .enumerate()
            .find(|(i, &(u, v))| f3.color(*i) == f3.k && (near[u] || near[v]))
            .map(|(_, &(u, v))| {
                format!(
                    "color-{} edge {}|{} touches the neighborhood of a B-extreme",
                    f3.k,
                    m3.graph.label(u),
                    m3.graph.label(v)
                )
            })
            .unwrap_or_else(|| "some A-extreme lacks uniformly colored incident edges".into());
        return Err(Error::Precondition(witness));
    }
    edge_lift(f3, m3, mn, None, f3.k, f3.k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{injective_chromatic_index, InjectiveStatus};

    fn mat(base: Graph, dim: usize) -> Materialized {
        SierpinskiGraph::new(base, dim).unwrap().materialize().unwrap()
    }

    #[test]
    fn cycle_coloring_matches_the_determined_case() {
        // at k=5 each copy reads 3,2,2,1,1 by offset
        let (m2, f) = cycle_s2_coloring(5).unwrap();
        for i in 0..5usize {
            let expect = [3, 2, 2, 1, 1];
            for off in 0..5usize {
                let idx = m2.index(&Word(vec![i, (i + off) % 5]));
                assert_eq!(f.color(idx), expect[off], "copy {i} offset {off}");
            }
        }
        assert_eq!(f.used_colors(), 3);
    }

    #[test]
    fn cycle_coloring_rejects_k3_and_small() {
        assert!(matches!(cycle_s2_coloring(2), Err(Error::InvalidInput(_))));
        assert!(matches!(cycle_s2_coloring(3), Err(Error::Precondition(_))));
    }

    #[test]
    fn cycle_coloring_covers_all_residues() {
        for k in 4..=50 {
            let (m2, f) = cycle_s2_coloring(k).unwrap();
            assert_eq!(f.used_colors(), 3, "k={k}");
            assert!(check_extreme_condition(&m2, &f).unwrap(), "k={k}");
            // color 3 sits on every extreme vertex and nowhere next to one
            for &e in &m2.extreme_indices() {
                assert_eq!(f.color(e), 3);
                assert!(m2.graph.neighbors(e).iter().all(|&u| f.color(u) != 3));
            }
        }
    }

    #[test]
    fn general_edge_lift_over_squares_with_constant_choices() {
        let base = Graph::cycle(4).unwrap();
        let m3 = mat(base.clone(), 3);
        let f3 = match injective_chromatic_index(&m3.graph, 200_000_000).unwrap().status {
            InjectiveStatus::Exact { certificate, .. } => certificate,
            other => panic!("expected exact index, got {other:?}"),
        };
        let m4 = mat(base.clone(), 4);
        for choice in [ChoiceFunction::lexicographic(&base), ChoiceFunction::reversed(&base)] {
            let lifted = edge_lift_general(&f3, &m3, &m4, &choice).unwrap();
            assert!(lifted.used_colors() <= f3.k + 1);
        }
    }

    #[test]
    fn projection_lift_preserves_palette() {
        for k in [5, 6, 8] {
            let (m2, f2) = cycle_s2_coloring(k).unwrap();
            for n in [3, 4] {
                let mn = mat(Graph::cycle(k).unwrap(), n);
                let lifted = lift_vertex_projection(&f2, &m2, &mn).unwrap();
                assert_eq!(lifted.k, 3);
                assert_eq!(lifted.used_colors(), 3);
            }
        }
    }

    #[test]
    fn projection_lift_rejects_bad_input() {
        let (m2, _) = cycle_s2_coloring(5).unwrap();
        // rainbow coloring is injective but extremes disagree
        let n = m2.graph.order();
        let rainbow = VertexColoring::new(&m2.graph, n, (1..=n).collect()).unwrap();
        let m3 = mat(Graph::cycle(5).unwrap(), 3);
        assert!(matches!(
            lift_vertex_projection(&rainbow, &m2, &m3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn plus_one_lift_from_cycle_certificate() {
        let (m2, f2) = cycle_s2_coloring(5).unwrap();
        let m3 = mat(Graph::cycle(5).unwrap(), 3);
        let lifted = lift_vertex_plus_one(&f2, &m2, &m3).unwrap();
        assert_eq!(lifted.k, 4);
        assert!(lifted.used_colors() <= 4);
    }

    #[test]
    fn plus_one_lift_needs_a_larger_target() {
        let (m2, f2) = cycle_s2_coloring(5).unwrap();
        assert!(matches!(
            lift_vertex_plus_one(&f2, &m2, &m2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn projection_lift_to_dimension_five() {
        let (m2, f2) = cycle_s2_coloring(4).unwrap();
        let m5 = mat(Graph::cycle(4).unwrap(), 5);
        assert_eq!(m5.graph.order(), 1024);
        let lifted = lift_vertex_projection(&f2, &m2, &m5).unwrap();
        assert_eq!(lifted.used_colors(), 3);
    }

    #[test]
    fn plus_one_lift_over_path_base() {
        // base K_2: dimension-n graph is a path on 2^n vertices
        let base = Graph::complete(2);
        let m2 = mat(base.clone(), 2);
        let f2 = VertexColoring::new(&m2.graph, 2, vec![1, 2, 2, 1]).unwrap();
        assert!(validate_vertex(&m2.graph, &f2).unwrap().is_valid());
        let m3 = mat(base, 3);
        let lifted = lift_vertex_plus_one(&f2, &m2, &m3).unwrap();
        assert!(lifted.k <= 3);
    }

    #[test]
    fn extreme_plus_one_from_base_colorings() {
        // C_8 has a paired 2-coloring; the construction yields 3 colors
        let base = Graph::cycle(8).unwrap();
        let f = VertexColoring::new(&base, 2, vec![1, 1, 2, 2, 1, 1, 2, 2]).unwrap();
        let m2 = mat(base.clone(), 2);
        let out = extreme_plus_one_s2(&f, &base, &m2).unwrap();
        assert_eq!(out.k, 3);
        assert!(check_extreme_condition(&m2, &out).unwrap());

        // rainbow K_3 gives a 4-color upper bound shape
        let k3 = Graph::complete(3);
        let f = VertexColoring::new(&k3, 3, vec![1, 2, 3]).unwrap();
        let m2 = mat(k3.clone(), 2);
        let out = extreme_plus_one_s2(&f, &k3, &m2).unwrap();
        assert_eq!(out.k, 4);

        // K_2: dimension-2 graph is a path on 4 vertices
        let k2 = Graph::complete(2);
        let f = VertexColoring::new(&k2, 2, vec![1, 2]).unwrap();
        let m2 = mat(k2.clone(), 2);
        let out = extreme_plus_one_s2(&f, &k2, &m2).unwrap();
        assert!(out.k <= 3);
    }

    #[test]
    fn general_edge_lift_over_cycles() {
        let base = Graph::cycle(5).unwrap();
        let m3 = mat(base.clone(), 3);
        let f3 = match injective_chromatic_index(&m3.graph, 200_000_000).unwrap().status {
            InjectiveStatus::Exact { certificate, .. } => certificate,
            other => panic!("expected exact index, got {other:?}"),
        };
        let m4 = mat(base.clone(), 4);
        for choice in [ChoiceFunction::lexicographic(&base), ChoiceFunction::reversed(&base)] {
            let lifted = edge_lift_general(&f3, &m3, &m4, &choice).unwrap();
            assert_eq!(lifted.k, f3.k + 1);
        }
    }

    #[test]
    fn general_edge_lift_over_random_triangle_free_bases() {
        let mut rng = crate::corpus::rng(crate::corpus::DEFAULT_SEED ^ 0x99);
        for _ in 0..8 {
            let base = crate::corpus::random_triangle_free_connected(&mut rng, 3, 7);
            let m3 = mat(base.clone(), 3);
            let f3 = match injective_chromatic_index(&m3.graph, 200_000_000).unwrap().status {
                InjectiveStatus::Exact { certificate, .. } => certificate,
                other => panic!("expected exact index, got {other:?}"),
            };
            let m4 = mat(base.clone(), 4);
            let choice = ChoiceFunction::lexicographic(&base);
            let lifted = edge_lift_general(&f3, &m3, &m4, &choice).unwrap();
            assert!(lifted.used_colors() <= f3.k + 1, "base {base:?}");
        }
    }

    #[test]
    fn general_edge_lift_rejects_triangles() {
        let base = Graph::complete(3);
        let m3 = mat(base.clone(), 3);
        let colors = vec![1; m3.graph.size()];
        let f3 = EdgeColoring::new(&m3.graph, 1, colors).unwrap();
        let m4 = mat(base.clone(), 4);
        let choice = ChoiceFunction::lexicographic(&base);
        assert!(matches!(
            edge_lift_general(&f3, &m3, &m4, &choice),
            Err(Error::Triangle(0, 1, 2))
        ));
    }

    #[test]
    fn condition_lift_rejects_untreated_certificates() {
        // an arbitrary optimal certificate need not satisfy the distance
        // condition; when it does not, the lift must refuse
        let base = Graph::cycle(5).unwrap();
        let m3 = mat(base.clone(), 3);
        let f3 = match injective_chromatic_index(&m3.graph, 200_000_000).unwrap().status {
            InjectiveStatus::Exact { certificate, .. } => certificate,
            other => panic!("expected exact index, got {other:?}"),
        };
        let m4 = mat(base.clone(), 4);
        let choice = ChoiceFunction::lexicographic(&base);
        let holds = check_condition_i(&m3, &f3).unwrap();
        let lift = edge_lift_condition_i(&f3, &m3, &m4, &choice);
        assert_eq!(holds, lift.is_ok());
    }

    #[test]
    fn bipartite_lift_rejects_odd_cycles() {
        let base = Graph::cycle(5).unwrap();
        let m3 = mat(base.clone(), 3);
        let colors = vec![1; m3.graph.size()];
        let f3 = EdgeColoring::new(&m3.graph, 1, colors).unwrap();
        let m4 = mat(base, 4);
        assert!(edge_lift_condition_ii(&f3, &m3, &m4, &[0, 2]).is_err());
    }

    #[test]
    fn copy_map_prepends() {
        let empty = Word(Vec::new());
        let a = Word(vec![1, 2]);
        let b = Word(vec![1, 3]);
        assert_eq!(copy_map(&empty, (&a, &b)), (a.clone(), b.clone()));
        let prefix = Word(vec![0]);
        let (ca, cb) = copy_map(&prefix, (&a, &b));
        assert_eq!(ca, Word(vec![0, 1, 2]));
        assert_eq!(cb, Word(vec![0, 1, 3]));
    }

    #[test]
    fn choice_function_validation() {
        let g = Graph::cycle(4).unwrap();
        let lex = ChoiceFunction::lexicographic(&g);
        assert_eq!(lex.chosen(0, 1), 0);
        assert_eq!(lex.chosen(3, 0), 0);
        let mut bad = BTreeMap::new();
        for &(u, v) in g.edges() {
            bad.insert((u, v), u);
        }
        bad.insert((0, 1), 3);
        assert!(ChoiceFunction::new(&g, bad).is_err());
    }
}
