//! Empirical path length and clustering on explicit graphs.
//!
//! Path length is the mean shortest-path hop count over unordered pairs of
//! distinct nodes. Clustering is the mean of the local coefficients, with
//! nodes of degree below two contributing zero.

mod graph;
mod small_world;

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use graph::Graph;
pub use small_world::{generate_small_world, ring_lattice, SmallWorldSpec};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// `None` when no path joins the two nodes.
    pub fn get(&self, from: usize, to: usize) -> Option<u32> {
        match self.dist[from * self.n + to] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn row(&self, from: usize) -> impl Iterator<Item = Option<u32>> + '_ {
        (0..self.n).map(move |to| self.get(from, to))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathMode {
    /// Every pair must be connected.
    #[default]
    Strict,
    /// Restrict to the largest connected component.
    LargestComponent,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphMetrics {
    pub n: usize,
    pub path_length: f64,
    pub clustering: f64,
}

fn bfs(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
    dist.fill(UNREACHABLE);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// Breadth-first search from every node. Rows are computed in parallel
/// and are independent, so the result does not depend on scheduling.
pub fn shortest_path_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.node_count();
    let mut dist = vec![UNREACHABLE; n * n];
    dist.par_chunks_mut(n.max(1))
        .enumerate()
        .for_each_init(VecDeque::new, |queue, (source, row)| {
            bfs(g, source, row, queue)
        });
    DistanceMatrix { n, dist }
}

/// Per-source sums over higher-numbered targets: (distance sum, reachable
/// pairs, unreachable pairs). Integer sums, so the reduction is exact.
fn pair_distance_totals(g: &Graph) -> (u64, u64, u64) {
    let n = g.node_count();
    let per_source: Vec<(u64, u64, u64)> = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![UNREACHABLE; n], VecDeque::new()),
            |(dist, queue), source| {
                bfs(g, source, dist, queue);
                dist[source + 1..]
                    .iter()
                    .fold((0, 0, 0), |(sum, reach, unreach), &d| {
                        if d == UNREACHABLE {
                            (sum, reach, unreach + 1)
                        } else {
                            (sum + u64::from(d), reach + 1, unreach)
                        }
                    })
            },
        )
        .collect();
    per_source
        .into_iter()
        .fold((0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Largest component; ties go to the one holding the smallest node id.
pub fn largest_component(g: &Graph) -> Vec<usize> {
    connected_components(g)
        .into_iter()
        .fold(
            Vec::new(),
            |best, c| if c.len() > best.len() { c } else { best },
        )
}

fn restrict(g: &Graph, mode: PathMode) -> Result<std::borrow::Cow<'_, Graph>> {
    match mode {
        PathMode::Strict => Ok(std::borrow::Cow::Borrowed(g)),
        PathMode::LargestComponent => {
            let nodes = largest_component(g);
            if nodes.len() == g.node_count() {
                Ok(std::borrow::Cow::Borrowed(g))
            } else {
                g.induced(&nodes).map(std::borrow::Cow::Owned)
            }
        }
    }
}

pub fn path_length(g: &Graph, mode: PathMode) -> Result<f64> {
    let g = restrict(g, mode)?;
    strict_path_length(&g)
}

fn strict_path_length(g: &Graph) -> Result<f64> {
    if g.node_count() < 2 {
        return Err(Error::TooSmall(g.node_count()));
    }
    let (sum, reachable, unreachable) = pair_distance_totals(g);
    if unreachable > 0 {
        return Err(Error::Disconnected { unreachable });
    }
    Ok(sum as f64 / reachable as f64)
}

fn local_clustering(g: &Graph, node: usize) -> f64 {
    let nbrs = g.neighbors(node);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    let links: usize = nbrs
        .iter()
        .enumerate()
        .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum();
    links as f64 / (k * (k - 1) / 2) as f64
}

pub fn clustering_coefficient(g: &Graph) -> f64 {
    let n = g.node_count();
    let total: f64 = (0..n).map(|v| local_clustering(g, v)).sum();
    total / n as f64
}

/// Path length and clustering measured on the same node set. In
/// largest-component mode `n` is the component size.
pub fn measure(g: &Graph, mode: PathMode) -> Result<GraphMetrics> {
    let g = restrict(g, mode)?;
    Ok(GraphMetrics {
        n: g.node_count(),
        path_length: strict_path_length(&g)?,
        clustering: clustering_coefficient(&g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent all-pairs oracle.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
        let n = g.node_count();
        let mut d = vec![vec![None; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for (u, v) in g.edges() {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    fn random_graph(n: usize, mask: u64) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges = pairs
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, e)| e);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn path_graph_distances() {
        let m = shortest_path_matrix(&Graph::path(3).unwrap());
        assert_eq!(m.get(0, 1), Some(1));
        assert_eq!(m.get(1, 2), Some(1));
        assert_eq!(m.get(0, 2), Some(2));
        assert_eq!(m.get(2, 0), Some(2));
        assert_eq!(m.get(1, 1), Some(0));
    }

    #[test]
    fn complete_graph_distances() {
        let m = shortest_path_matrix(&Graph::complete(4).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j), Some(u32::from(i != j)));
            }
        }
    }

    #[test]
    fn eight_node_graph_matches_floyd_warshall() {
        let g = random_graph(8, 0x9e37_79b9_7f4a_7c15);
        let oracle = floyd_warshall(&g);
        let m = shortest_path_matrix(&g);
        for (i, row) in oracle.iter().enumerate() {
            assert_eq!(m.row(i).collect::<Vec<_>>(), *row);
        }
    }

    #[test]
    fn unreachable_pairs_are_marked() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let m = shortest_path_matrix(&g);
        assert_eq!(m.get(0, 2), None);
        assert_eq!(m.get(2, 3), Some(1));
    }

    #[test]
    fn path_length_examples() {
        let p = path_length(&Graph::path(3).unwrap(), PathMode::Strict).unwrap();
        assert!((p - 4.0 / 3.0).abs() < 1e-15);
        let p = path_length(&Graph::cycle(5).unwrap(), PathMode::Strict).unwrap();
        assert_eq!(p, 1.5);
        for n in 2..10 {
            let p = path_length(&Graph::complete(n).unwrap(), PathMode::Strict).unwrap();
            assert_eq!(p, 1.0);
        }
    }

    #[test]
    fn disconnected_graphs() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(
            path_length(&g, PathMode::Strict),
            Err(Error::Disconnected { unreachable: 6 })
        );
        let p = path_length(&g, PathMode::LargestComponent).unwrap();
        assert!((p - 4.0 / 3.0).abs() < 1e-15);
        let isolated = Graph::new(3, []).unwrap();
        assert_eq!(
            path_length(&isolated, PathMode::LargestComponent),
            Err(Error::TooSmall(1))
        );
        assert_eq!(
            path_length(&Graph::new(1, []).unwrap(), PathMode::Strict),
            Err(Error::TooSmall(1))
        );
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(clustering_coefficient(&Graph::complete(3).unwrap()), 1.0);
        assert_eq!(clustering_coefficient(&Graph::cycle(5).unwrap()), 0.0);
        // star: centre has no linked neighbours, leaves have degree 1
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(clustering_coefficient(&star), 0.0);
        // triangle with a pendant: node 2 has 1 link among 3 neighbours
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let want = (1.0 + 1.0 + 1.0 / 3.0 + 0.0) / 4.0;
        assert!((clustering_coefficient(&g) - want).abs() < 1e-15);
    }

    #[test]
    fn measure_examples() {
        let m = measure(&Graph::complete(5).unwrap(), PathMode::Strict).unwrap();
        assert_eq!((m.n, m.path_length, m.clustering), (5, 1.0, 1.0));
        let m = measure(&Graph::path(3).unwrap(), PathMode::Strict).unwrap();
        assert_eq!(m.n, 3);
        assert!((m.path_length - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(m.clustering, 0.0);
    }

    #[test]
    fn measure_in_largest_component_mode() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let m = measure(&g, PathMode::LargestComponent).unwrap();
        assert_eq!(m.n, 3);
        assert_eq!(m.path_length, 1.0);
        assert_eq!(m.clustering, 1.0);
        assert!(measure(&g, PathMode::Strict).is_err());
    }

    #[test]
    fn components_ordering_and_ties() {
        let g = Graph::new(5, [(3, 4), (0, 1)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(largest_component(&g), vec![0, 1]);
    }
}
