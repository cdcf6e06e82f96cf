//! Exhaustive corpus of small graphs, one per isomorphism class.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Every simple graph on `1..=max_vertices` vertices up to isomorphism,
/// ordered by vertex count, edge count and canonical edge list.
pub fn small_graphs(max_vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for m in 1..=max_vertices {
        let pairs: Vec<(u32, u32)> = (1..=m as u32)
            .flat_map(|u| (u + 1..=m as u32).map(move |v| (u, v)))
            .collect();
        let perms = permutations(m);
        let mut classes = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            classes.insert(canonical(&edges, &perms));
        }
        let mut graphs: Vec<Graph> = classes
            .into_iter()
            .map(|edges| Graph::from_edge_list(m, &edges).expect("valid pairs"))
            .collect();
        graphs.sort_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.edges().cmp(b.edges())));
        out.extend(graphs);
    }
    out
}

pub fn connected_small_graphs(max_vertices: usize) -> Vec<Graph> {
    small_graphs(max_vertices).into_iter().filter(Graph::is_connected).collect()
}

pub fn disconnected_small_graphs(max_vertices: usize) -> Vec<Graph> {
    small_graphs(max_vertices).into_iter().filter(|g| !g.is_connected()).collect()
}

/// Lexicographically smallest relabeled edge list.
fn canonical(edges: &[(u32, u32)], perms: &[Vec<u32>]) -> Vec<(u32, u32)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(u32, u32)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u as usize - 1], p[v as usize - 1]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

fn permutations(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=m as u32).collect();
    heap_permute(m, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}
