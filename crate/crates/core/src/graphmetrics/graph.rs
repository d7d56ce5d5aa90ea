use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Undirected simple graph over nodes `0..node_count`.
///
/// Adjacency lists are kept sorted so iteration order, and anything
/// derived from it, is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if node_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one node".into()));
        }
        let mut sets = vec![BTreeSet::new(); node_count];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a node outside 0..{node_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on node {u}")));
            }
            if !sets[u].insert(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            sets[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph::from_sets(sets, edge_count))
    }

    pub(crate) fn from_sets(sets: Vec<BTreeSet<usize>>, edge_count: usize) -> Self {
        Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            edge_count,
        }
    }

    pub fn complete(node_count: usize) -> Result<Self> {
        let edges = (0..node_count).flat_map(|u| (u + 1..node_count).map(move |v| (u, v)));
        Graph::new(node_count, edges)
    }

    pub fn path(node_count: usize) -> Result<Self> {
        Graph::new(node_count, (1..node_count).map(|v| (v - 1, v)))
    }

    pub fn cycle(node_count: usize) -> Result<Self> {
        if node_count < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least 3 nodes".into()));
        }
        Graph::new(
            node_count,
            (0..node_count).map(|v| (v, (v + 1) % node_count)),
        )
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("no edge ({u}, {v}) to remove")));
        }
        let kept = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
        Graph::new(self.node_count(), kept)
    }

    /// Subgraph induced by `nodes`, relabelled `0..nodes.len()` in the
    /// order given.
    pub fn induced(&self, nodes: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.node_count()];
        for (new, &old) in nodes.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::new(nodes.len(), edges)
    }

    /// Parses the plain-text edge-list format: one `u v` pair per line,
    /// `#` starts a comment, an optional `nodes N` line fixes the node
    /// count (otherwise it is the largest id plus one).
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_id = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("`{s}` is not a non-negative integer node id"),
                })
            };
            match fields.as_slice() {
                ["nodes", n] => {
                    if declared.is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "duplicate `nodes` header".into(),
                        });
                    }
                    declared = Some(parse_id(n)?);
                }
                [u, v] => edges.push((parse_id(u)?, parse_id(v)?)),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `u v` or `nodes N`, got `{line}`"),
                    })
                }
            }
        }
        let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let node_count = match declared {
            Some(n) if n < inferred => {
                return Err(Error::InvalidGraph(format!(
                    "header declares {n} nodes but edges reference node {}",
                    inferred - 1
                )))
            }
            Some(n) => n,
            None => inferred,
        };
        if node_count == 0 {
            return Err(Error::Parse {
                line: 0,
                message: "edge list contains no nodes".into(),
            });
        }
        Graph::new(node_count, edges)
    }

    pub fn read_edge_list(path: &Path) -> Result<Graph> {
        Graph::parse_edge_list(&std::fs::read_to_string(path)?)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("nodes {}\n", self.node_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# toy\nnodes 5\n0 1\n1 2 # trailing\n\n3 1\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(4), 0);
        let again = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn edge_list_infers_node_count() {
        let g = Graph::parse_edge_list("0 1\n1 6\n").unwrap();
        assert_eq!(g.node_count(), 7);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match Graph::parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Graph::parse_edge_list("nodes 2\n0 5\n").is_err());
        assert!(Graph::parse_edge_list("# nothing\n").is_err());
        assert!(Graph::parse_edge_list("0 1 2\n").is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::path(4).unwrap();
        let sub = g.induced(&[2, 3]).unwrap();
        assert_eq!(sub.node_count(), 2);
        assert!(sub.has_edge(0, 1));
    }
}
