#![allow(dead_code)]

use etakit::graphmetrics::Graph;

/// All-pairs distances by Floyd–Warshall, `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
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

/// Graph on `n` nodes keeping the candidate pairs whose bit is set in `mask`.
pub fn masked_graph(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs
        .enumerate()
        .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// Counts the ways to give `r` identical units to `n` receivers by
/// enumerating every assignment.
pub fn weak_compositions(n: u64, r: u64) -> u64 {
    fn go(slots: u64, left: u64) -> u64 {
        if slots == 1 {
            return 1;
        }
        (0..=left).map(|first| go(slots - 1, left - first)).sum()
    }
    go(n, r)
}
