//! Finite simple undirected graphs with indexed vertices.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A finite simple undirected graph on vertices `0..order`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted. The same
/// type serves as a base graph for Sierpinski constructions, as a
/// materialized Sierpinski graph, and as a conflict graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    order: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, Error> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            if a >= order || b >= order {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) out of range for order {order}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { order, edges: canon, adj, labels: None })
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, Error> {
        if labels.len() != self.order {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the canonical edge `(min,max)` in `edges()`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Index of the vertex carrying `name` (label, or decimal index when the
    /// graph is unlabeled).
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == name),
            None => name.parse::<usize>().ok().filter(|&v| v < self.order),
        }
    }

    /// Some triangle `u < v < w`, or `None` when the graph is triangle-free.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for &(u, v) in &self.edges {
            for &w in &self.adj[u] {
                if w > v && self.adjacent(v, w) {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.order
    }

    /// Two-colors the graph by BFS. Returns `(A, B)` with the smallest vertex
    /// of each component in `A`, or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![usize::MAX; self.order];
        for start in 0..self.order {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == usize::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.order).filter(|&v| side[v] == 0).collect();
        let b = (0..self.order).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    /// Breadth-first distances from `start`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[start] = Some(0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn complete(p: usize) -> Graph {
        let edges = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v)));
        Graph::new(p, edges).expect("complete graph is simple")
    }

    pub fn cycle(k: usize) -> Result<Graph, Error> {
        if k < 3 {
            return Err(Error::InvalidInput(format!("cycle needs k>=3, got {k}")));
        }
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// Path on `k` vertices (`k-1` edges).
    pub fn path(k: usize) -> Result<Graph, Error> {
        if k == 0 {
            return Err(Error::InvalidInput("path needs k>=1".into()));
        }
        Graph::new(k, (0..k.saturating_sub(1)).map(|i| (i, i + 1)))
    }

    /// Parses a named base-graph spec: `K<p>`, `C<k>` or `P<k>`.
    pub fn parse_spec(spec: &str) -> Result<Graph, Error> {
        let (kind, num) = spec.split_at(1);
        let n: usize = num
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad graph spec {spec:?}")))?;
        match kind {
            "K" | "k" => Ok(Graph::complete(n)),
            "C" | "c" => Graph::cycle(n),
            "P" | "p" => Graph::path(n),
            _ => Err(Error::InvalidInput(format!("bad graph spec {spec:?}"))),
        }
    }

    /// Stable content hash over order and edge set, used to pair colorings
    /// with the graph they describe.
    pub fn descriptor(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.order as u64);
        for &(u, v) in &self.edges {
            eat(u as u64);
            eat(v as u64);
        }
        format!("{h:016x}")
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            order: self.order,
            edges: self.edges.clone(),
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, Error> {
        let file: GraphFile = serde_json::from_str(text)?;
        let g = Graph::new(file.order, file.edges)?;
        match file.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.order {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", v, self.label(v)));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  n{u} -- n{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::new(4, [(0, 1), (2, 1), (3, 0)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
            }
        }
        assert!(!g.adjacent(2, 2));
    }

    #[test]
    fn named_constructors() {
        assert_eq!(Graph::complete(4).size(), 6);
        assert_eq!(Graph::cycle(5).unwrap().size(), 5);
        assert_eq!(Graph::path(4).unwrap().size(), 3);
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::parse_spec("C2").is_err());
        assert_eq!(Graph::parse_spec("K3").unwrap().order(), 3);
        assert!(Graph::parse_spec("X9").is_err());
    }

    #[test]
    fn triangle_detection() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).is_triangle_free());
        assert_eq!(Graph::complete(3).find_triangle(), Some((0, 1, 2)));
    }

    #[test]
    fn petersen_is_triangle_free() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let petersen = Graph::new(10, edges).unwrap();
        assert_eq!(petersen.size(), 15);
        assert!(petersen.is_triangle_free());
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let (a, b) = Graph::cycle(6).unwrap().bipartition().unwrap();
        assert_eq!(a, vec![0, 2, 4]);
        assert_eq!(b, vec![1, 3, 5]);
        assert!(Graph::cycle(5).unwrap().bipartition().is_none());
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let g = Graph::new(4, [(3, 0), (1, 0), (2, 1)]).unwrap();
        let text = g.to_json();
        let back = Graph::from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn dot_export_carries_labels() {
        let g = Graph::path(2).unwrap().with_labels(vec!["a".into(), "b".into()]).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("label=\"a\""));
        assert!(dot.contains("n0 -- n1;"));
    }

    #[test]
    fn descriptor_distinguishes_graphs() {
        let a = Graph::cycle(4).unwrap();
        let b = Graph::path(4).unwrap();
        assert_ne!(a.descriptor(), b.descriptor());
        assert_eq!(a.descriptor(), Graph::cycle(4).unwrap().descriptor());
    }
}
