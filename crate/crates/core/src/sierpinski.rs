//! Generalized Sierpinski graphs `S_G^n` over a base graph `G`.
//!
//! Vertices are length-`n` words over the base vertex set. Two words are
//! adjacent when there is a position `d` such that the words agree before
//! `d`, carry a base edge at `d`, and after `d` each word constantly repeats
//! the other word's coordinate at `d`. Neighbor enumeration from this rule is
//! the source of truth; materialization is a cross-checked convenience.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::graph::Graph;

/// Default cap on `order^n` for materialization.
pub const DEFAULT_VERTEX_BUDGET: usize = 1 << 20;

/// A vertex of `S_G^n`: a fixed-length sequence of base-vertex indices.
///
/// Derived `Ord` is lexicographic, which fixes the canonical edge
/// orientation and the materialized index order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn constant(value: usize, len: usize) -> Word {
        Word(vec![value; len])
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Display name using the base graph's labels, joined by `.`.
    pub fn name(&self, base: &Graph) -> String {
        self.0
            .iter()
            .map(|&c| base.label(c))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Parses a dot-joined name back into a word over `base`.
    pub fn parse(name: &str, base: &Graph) -> Result<Word, Error> {
        let coords = name
            .split('.')
            .map(|part| {
                base.vertex_by_name(part)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown vertex name {part:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word(coords))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Implicit `S_G^n`: base graph plus dimension, with neighbor enumeration on
/// demand.
#[derive(Clone, Debug)]
pub struct SierpinskiGraph {
    base: Graph,
    dim: usize,
}

impl SierpinskiGraph {
    pub fn new(base: Graph, dim: usize) -> Result<SierpinskiGraph, Error> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if base.order() == 0 {
            return Err(Error::InvalidInput("base graph must have at least one vertex".into()));
        }
        Ok(SierpinskiGraph { base, dim })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Saturates at `u128::MAX` for absurd dimensions.
    pub fn vertex_count(&self) -> u128 {
        (self.base.order() as u128)
            .checked_pow(self.dim as u32)
            .unwrap_or(u128::MAX)
    }

    /// Expected edge count from the copy recurrence
    /// `|E_n| = |V(G)|*|E_{n-1}| + |E(G)|`.
    pub fn edge_count(&self) -> u128 {
        let v = self.base.order() as u128;
        let e = self.base.size() as u128;
        let mut total = 0u128;
        for _ in 0..self.dim {
            total = v.saturating_mul(total).saturating_add(e);
        }
        total
    }

    fn check_word(&self, w: &Word) -> Result<(), Error> {
        if w.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "word length {} does not match dimension {}",
                w.len(),
                self.dim
            )));
        }
        if let Some(&c) = w.0.iter().find(|&&c| c >= self.base.order()) {
            return Err(Error::InvalidInput(format!("coordinate {c} out of range")));
        }
        Ok(())
    }

    /// All words adjacent to `w`, sorted lexicographically.
    pub fn neighbors(&self, w: &Word) -> Result<Vec<Word>, Error> {
        self.check_word(w)?;
        let n = self.dim;
        let mut out = Vec::new();
        // Last-coordinate neighbors: replace w_n by each base neighbor.
        for &x in self.base.neighbors(w.0[n - 1]) {
            let mut v = w.0.clone();
            v[n - 1] = x;
            out.push(Word(v));
        }
        // At most one neighbor across copies: with the maximal constant
        // suffix starting at position t, the word (w_1..w_{t-1}, c, w_t...w_t)
        // is adjacent when (w_t, c) is a base edge.
        let mut t = n - 1;
        while t > 0 && w.0[t - 1] == w.0[n - 1] {
            t -= 1;
        }
        if t > 0 && self.base.adjacent(w.0[t - 1], w.0[t]) {
            let mut v = w.0.clone();
            v[t - 1] = w.0[t];
            for coord in v.iter_mut().skip(t) {
                *coord = w.0[t - 1];
            }
            out.push(Word(v));
        }
        out.sort();
        debug_assert!(out.windows(2).all(|p| p[0] != p[1]));
        Ok(out)
    }

    /// The constant words `(u,...,u)`, one per base vertex.
    pub fn extreme_vertices(&self) -> Vec<Word> {
        (0..self.base.order())
            .map(|u| Word::constant(u, self.dim))
            .collect()
    }

    /// BFS distance between two words; `None` when unreachable.
    pub fn distance(&self, a: &Word, b: &Word) -> Result<Option<usize>, Error> {
        self.check_word(a)?;
        self.check_word(b)?;
        if a == b {
            return Ok(Some(0));
        }
        let mut dist: HashMap<Word, usize> = HashMap::new();
        dist.insert(a.clone(), 0);
        let mut queue = std::collections::VecDeque::from([a.clone()]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for u in self.neighbors(&w)? {
                if u == *b {
                    return Ok(Some(d + 1));
                }
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(None)
    }

    /// Explicit edge list with a lexicographic word-index table.
    pub fn materialize(&self) -> Result<Materialized, Error> {
        self.materialize_with_budget(DEFAULT_VERTEX_BUDGET)
    }

    pub fn materialize_with_budget(&self, budget: usize) -> Result<Materialized, Error> {
        let count = self.vertex_count();
        if count > budget as u128 {
            return Err(Error::VertexBudget { vertices: count, budget });
        }
        let count = count as usize;
        let order = self.base.order();
        let mut words = Vec::with_capacity(count);
        let mut current = Word(vec![0; self.dim]);
        loop {
            words.push(current.clone());
            // lexicographic successor in mixed radix
            let mut pos = self.dim;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                current.0[pos] += 1;
                if current.0[pos] < order {
                    break;
                }
                current.0[pos] = 0;
            }
            if current.0.iter().all(|&c| c == 0) {
                break;
            }
        }
        debug_assert_eq!(words.len(), count);

        let mut edges = Vec::new();
        for (i, w) in words.iter().enumerate() {
            for u in self.neighbors(w)? {
                let j = word_index(&u, order);
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        let labels: Vec<String> = words.iter().map(|w| w.name(&self.base)).collect();
        let graph = Graph::new(count, edges)?.with_labels(labels)?;
        Ok(Materialized {
            base: self.base.clone(),
            dim: self.dim,
            words,
            graph,
        })
    }
}

/// Lexicographic rank of a word over a base of the given order.
pub fn word_index(w: &Word, order: usize) -> usize {
    w.0.iter().fold(0, |acc, &c| acc * order + c)
}

/// `S_G^n` with an explicit vertex/edge list.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub base: Graph,
    pub dim: usize,
    pub words: Vec<Word>,
    pub graph: Graph,
}

impl Materialized {
    pub fn index(&self, w: &Word) -> usize {
        word_index(w, self.base.order())
    }

    pub fn word(&self, index: usize) -> &Word {
        &self.words[index]
    }

    /// Indices of the extreme vertices, per base vertex.
    pub fn extreme_indices(&self) -> Vec<usize> {
        (0..self.base.order())
            .map(|u| self.index(&Word::constant(u, self.dim)))
            .collect()
    }

    /// Length-`m` suffix copy that vertex `index` belongs to, as
    /// `(prefix, suffix)` coordinate slices.
    pub fn split_word(&self, index: usize, m: usize) -> (&[usize], &[usize]) {
        let w = &self.words[index].0;
        w.split_at(self.dim - m)
    }
}
