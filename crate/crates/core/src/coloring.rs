//! Vertex and edge colorings with injectivity validation.
//!
//! A vertex coloring is injective when no two vertices with a common neighbor
//! share a color. An edge coloring is injective when no two edges joined by a
//! common edge share a color: for consecutive edges `e1=xy, e2=yz, e3=zu`
//! (with `u=x` allowed, closing a triangle), `e2` is a common edge of `e1`
//! and `e3`, and those two must differ.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::sierpinski::{Materialized, Word};

/// Total vertex coloring with colors in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    pub descriptor: String,
    pub k: usize,
    colors: Vec<usize>,
}

/// Total edge coloring, aligned with the graph's canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub descriptor: String,
    pub k: usize,
    colors: Vec<usize>,
}

/// Outcome of validation: either injective or a concrete counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Violation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// A verifiable witness against injectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two distinct neighbors of `center` share a color.
    VertexInjective { center: usize, first: usize, second: usize },
    /// Edge indices of a consecutive triple whose outer edges share a color.
    EdgeInjective { first: usize, middle: usize, last: usize },
}

impl Violation {
    /// Re-checks the witness against the graph and coloring by direct
    /// inspection.
    pub fn verify_vertex(&self, g: &Graph, f: &VertexColoring) -> bool {
        match *self {
            Violation::VertexInjective { center, first, second } => {
                first != second
                    && g.adjacent(center, first)
                    && g.adjacent(center, second)
                    && f.color(first) == f.color(second)
            }
            _ => false,
        }
    }

    pub fn verify_edge(&self, g: &Graph, c: &EdgeColoring) -> bool {
        match *self {
            Violation::EdgeInjective { first, middle, last } => {
                if first == last || first == middle || last == middle {
                    return false;
                }
                let edges = g.edges();
                if first >= edges.len() || middle >= edges.len() || last >= edges.len() {
                    return false;
                }
                let (x, y) = edges[first];
                let (a, b) = edges[middle];
                let (z, u) = edges[last];
                let touches = |(p, q): (usize, usize), v: usize| p == v || q == v;
                // middle joins an endpoint of first with an endpoint of last
                let chain = (touches((x, y), a) && touches((z, u), b))
                    || (touches((x, y), b) && touches((z, u), a));
                chain && c.colors[first] == c.colors[last]
            }
            _ => false,
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            Violation::VertexInjective { center, first, second } => format!(
                "vertices {} and {} share neighbor {} and color",
                g.label(first),
                g.label(second),
                g.label(center)
            ),
            Violation::EdgeInjective { first, middle, last } => {
                let name = |i: usize| {
                    let (u, v) = g.edges()[i];
                    format!("{}|{}", g.label(u), g.label(v))
                };
                format!(
                    "edges {} and {} share common edge {} and color",
                    name(first),
                    name(last),
                    name(middle)
                )
            }
        }
    }
}

impl VertexColoring {
    pub fn new(g: &Graph, k: usize, colors: Vec<usize>) -> Result<VertexColoring, Error> {
        if colors.len() != g.order() {
            return Err(Error::InvalidInput(format!(
                "{} colors for {} vertices",
                colors.len(),
                g.order()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidInput(format!("color {c} outside 1..={k}")));
        }
        Ok(VertexColoring { descriptor: g.descriptor(), k, colors })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn check_pairing(&self, g: &Graph) -> Result<(), Error> {
        if self.descriptor != g.descriptor() {
            return Err(Error::DescriptorMismatch {
                expected: g.descriptor(),
                got: self.descriptor.clone(),
            });
        }
        Ok(())
    }

    /// Count of colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

impl EdgeColoring {
    pub fn new(g: &Graph, k: usize, colors: Vec<usize>) -> Result<EdgeColoring, Error> {
        if colors.len() != g.size() {
            return Err(Error::InvalidInput(format!(
                "{} colors for {} edges",
                colors.len(),
                g.size()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidInput(format!("color {c} outside 1..={k}")));
        }
        Ok(EdgeColoring { descriptor: g.descriptor(), k, colors })
    }

    /// Color of the edge at the canonical index.
    pub fn color(&self, edge_index: usize) -> usize {
        self.colors[edge_index]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn check_pairing(&self, g: &Graph) -> Result<(), Error> {
        if self.descriptor != g.descriptor() {
            return Err(Error::DescriptorMismatch {
                expected: g.descriptor(),
                got: self.descriptor.clone(),
            });
        }
        Ok(())
    }

    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

/// Checks vertex injectivity. Returns the first violation by
/// `(center, first, second)` order so witnesses are stable.
pub fn validate_vertex(g: &Graph, f: &VertexColoring) -> Result<Validity, Error> {
    f.check_pairing(g)?;
    if f.colors.len() != g.order() {
        return Err(Error::InvalidInput("coloring not total".into()));
    }
    for center in 0..g.order() {
        let ns = g.neighbors(center);
        for (i, &u) in ns.iter().enumerate() {
            for &w in &ns[i + 1..] {
                if f.colors[u] == f.colors[w] {
                    return Ok(Validity::Invalid(Violation::VertexInjective {
                        center,
                        first: u,
                        second: w,
                    }));
                }
            }
        }
    }
    Ok(Validity::Valid)
}

/// Edge indices incident to each vertex.
pub fn incidence_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    inc
}

/// Checks edge injectivity. Scans middle edges in canonical order, so the
/// reported triple is the first by `(middle, first, last)`.
pub fn validate_edge(g: &Graph, c: &EdgeColoring) -> Result<Validity, Error> {
    c.check_pairing(g)?;
    if c.colors.len() != g.size() {
        return Err(Error::InvalidInput("coloring not total".into()));
    }
    let inc = incidence_lists(g);
    for (middle, &(y, z)) in g.edges().iter().enumerate() {
        for &e1 in &inc[y] {
            if e1 == middle {
                continue;
            }
            for &e3 in &inc[z] {
                if e3 == middle || e3 == e1 {
                    continue;
                }
                if c.colors[e1] == c.colors[e3] {
                    return Ok(Validity::Invalid(Violation::EdgeInjective {
                        first: e1,
                        middle,
                        last: e3,
                    }));
                }
            }
        }
    }
    Ok(Validity::Valid)
}

/// True when all extreme vertices of `S_G^2` share one color and that color
/// appears on none of their neighbors. A valid coloring is required.
pub fn check_extreme_condition(m2: &Materialized, f: &VertexColoring) -> Result<bool, Error> {
    if m2.dim != 2 {
        return Err(Error::Precondition(format!(
            "extreme condition is defined at dimension 2, got {}",
            m2.dim
        )));
    }
    match validate_vertex(&m2.graph, f)? {
        Validity::Valid => {}
        Validity::Invalid(v) => {
            return Err(Error::Precondition(format!(
                "coloring is not injective: {}",
                v.describe(&m2.graph)
            )))
        }
    }
    let extremes = m2.extreme_indices();
    let Some(&first) = extremes.first() else {
        return Ok(true);
    };
    let shared = f.color(first);
    if extremes.iter().any(|&e| f.color(e) != shared) {
        return Ok(false);
    }
    for &e in &extremes {
        if m2.graph.neighbors(e).iter().any(|&u| f.color(u) == shared) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices of `g` incident to an edge carrying color `k`.
fn color_k_vertices(g: &Graph, c: &EdgeColoring, k: usize) -> Vec<usize> {
    let mut hit = vec![false; g.order()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if c.color(i) == k {
            hit[u] = true;
            hit[v] = true;
        }
    }
    (0..g.order()).filter(|&v| hit[v]).collect()
}

/// Multi-source BFS ball of the given radius.
fn ball(g: &Graph, sources: &[usize], radius: usize) -> Vec<bool> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] == radius {
            continue;
        }
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    (0..g.order()).map(|v| dist[v] != usize::MAX).collect()
}

/// Condition for keeping the palette size when lifting an edge coloring of
/// `S_G^3`: every vertex incident to a color-`k` edge lies at distance at
/// least 3 from every extreme vertex.
pub fn check_condition_i(m3: &Materialized, c: &EdgeColoring) -> Result<bool, Error> {
    if m3.dim != 3 {
        return Err(Error::Precondition(format!(
            "condition is defined at dimension 3, got {}",
            m3.dim
        )));
    }
    match validate_edge(&m3.graph, c)? {
        Validity::Valid => {}
        Validity::Invalid(v) => {
            return Err(Error::Precondition(format!(
                "coloring is not injective: {}",
                v.describe(&m3.graph)
            )))
        }
    }
    let near = ball(&m3.graph, &m3.extreme_indices(), 2);
    Ok(color_k_vertices(&m3.graph, c, c.k).iter().all(|&v| !near[v]))
}

/// Bipartite variant: edges at every `A`-extreme carry color `k`, and every
/// vertex incident to a color-`k` edge is at distance at least 2 from every
/// `B`-extreme. `a_side` lists the `A` vertices of the base graph.
pub fn check_condition_ii(
    m3: &Materialized,
    c: &EdgeColoring,
    a_side: &[usize],
) -> Result<bool, Error> {
    if m3.dim != 3 {
        return Err(Error::Precondition(format!(
            "condition is defined at dimension 3, got {}",
            m3.dim
        )));
    }
    let (a, b) = validate_bipartition(&m3.base, a_side)?;
    match validate_edge(&m3.graph, c)? {
        Validity::Valid => {}
        Validity::Invalid(v) => {
            return Err(Error::Precondition(format!(
                "coloring is not injective: {}",
                v.describe(&m3.graph)
            )))
        }
    }
    let inc = incidence_lists(&m3.graph);
    for &u in &a {
        let e = m3.index(&Word::constant(u, 3));
        if inc[e].iter().any(|&i| c.color(i) != c.k) {
            return Ok(false);
        }
    }
    let b_extremes: Vec<usize> = b.iter().map(|&v| m3.index(&Word::constant(v, 3))).collect();
    let near = ball(&m3.graph, &b_extremes, 1);
    Ok(color_k_vertices(&m3.graph, c, c.k).iter().all(|&v| !near[v]))
}

/// Checks that `a_side` describes one side of a bipartition of `g` and
/// returns both sides sorted.
pub fn validate_bipartition(g: &Graph, a_side: &[usize]) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let mut a: Vec<usize> = a_side.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.len() != a_side.len() {
        return Err(Error::InvalidInput("bipartition side has duplicates".into()));
    }
    if a.iter().any(|&v| v >= g.order()) {
        return Err(Error::InvalidInput("bipartition vertex out of range".into()));
    }
    let in_a = {
        let mut mask = vec![false; g.order()];
        for &v in &a {
            mask[v] = true;
        }
        mask
    };
    for &(u, v) in g.edges() {
        if in_a[u] == in_a[v] {
            return Err(Error::InvalidInput(format!(
                "edge ({u},{v}) does not cross the claimed bipartition"
            )));
        }
    }
    let b = (0..g.order()).filter(|&v| !in_a[v]).collect();
    Ok((a, b))
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    kind: String,
    descriptor: String,
    k: usize,
    colors: Vec<(String, usize)>,
}

impl VertexColoring {
    pub fn to_json(&self, g: &Graph) -> String {
        let colors = (0..g.order()).map(|v| (g.label(v), self.colors[v])).collect();
        let file = ColoringFile {
            kind: "vertex".into(),
            descriptor: self.descriptor.clone(),
            k: self.k,
            colors,
        };
        serde_json::to_string_pretty(&file).expect("coloring serializes")
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<VertexColoring, Error> {
        let file: ColoringFile = serde_json::from_str(text)?;
        if file.kind != "vertex" {
            return Err(Error::InvalidInput(format!("expected vertex coloring, got {}", file.kind)));
        }
        let mut colors = vec![0usize; g.order()];
        for (name, color) in &file.colors {
            let v = g
                .vertex_by_name(name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {name:?}")))?;
            if colors[v] != 0 {
                return Err(Error::InvalidInput(format!("duplicate entry for vertex {name:?}")));
            }
            colors[v] = *color;
        }
        if colors.iter().any(|&c| c == 0) {
            return Err(Error::InvalidInput("missing color for some vertex".into()));
        }
        let mut f = VertexColoring::new(g, file.k, colors)?;
        f.descriptor = file.descriptor;
        f.check_pairing(g)?;
        Ok(f)
    }
}

impl EdgeColoring {
    pub fn to_json(&self, g: &Graph) -> String {
        let colors = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (format!("{}|{}", g.label(u), g.label(v)), self.colors[i]))
            .collect();
        let file = ColoringFile {
            kind: "edge".into(),
            descriptor: self.descriptor.clone(),
            k: self.k,
            colors,
        };
        serde_json::to_string_pretty(&file).expect("coloring serializes")
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<EdgeColoring, Error> {
        let file: ColoringFile = serde_json::from_str(text)?;
        if file.kind != "edge" {
            return Err(Error::InvalidInput(format!("expected edge coloring, got {}", file.kind)));
        }
        let mut colors = vec![0usize; g.size()];
        for (name, color) in &file.colors {
            let (a, b) = name
                .split_once('|')
                .ok_or_else(|| Error::InvalidInput(format!("bad edge name {name:?}")))?;
            let u = g
                .vertex_by_name(a)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {a:?}")))?;
            let v = g
                .vertex_by_name(b)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {b:?}")))?;
            let i = g
                .edge_index(u, v)
                .ok_or_else(|| Error::InvalidInput(format!("{name:?} is not an edge")))?;
            if colors[i] != 0 {
                return Err(Error::InvalidInput(format!("duplicate entry for edge {name:?}")));
            }
            colors[i] = *color;
        }
        if colors.iter().any(|&c| c == 0) {
            return Err(Error::InvalidInput("missing color for some edge".into()));
        }
        let mut c = EdgeColoring::new(g, file.k, colors)?;
        c.descriptor = file.descriptor;
        c.check_pairing(g)?;
        Ok(c)
    }
}
