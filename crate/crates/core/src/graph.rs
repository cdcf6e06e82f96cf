//! Finite simple graphs, total labelings and the total graph T(G).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph on the vertex set `1..=m`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn from_edge_list(m: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w as usize > m {
                    return Err(Error::VertexOutOfRange { vertex: w, m });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { m, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Number of nodes of the total graph, `m + |E(G)|`.
    pub fn total_order(&self) -> usize {
        self.m + self.edges.len()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_isolated(&self, v: u32) -> bool {
        self.degree(v) == 0
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.m + 1);
        for &(u, v) in &self.edges {
            uf.union(u as usize, v as usize);
        }
        (1..=self.m).filter(|&v| uf.find(v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

/// An element of `V(G) ∪ E(G)`; edges are indexed by canonical position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Vertex(u32),
    Edge(usize),
}

/// Bijection from the nodes of `V(G) ∪ E(G)` onto `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalLabeling {
    vertex: Vec<u32>,
    edge: Vec<u32>,
}

impl TotalLabeling {
    /// Builds a labeling from per-vertex labels (vertex `i` at index `i - 1`)
    /// and per-edge labels in canonical edge order.
    pub fn new(graph: &Graph, vertex: Vec<u32>, edge: Vec<u32>) -> Result<Self> {
        if vertex.len() != graph.vertex_count() || edge.len() != graph.edge_count() {
            return Err(Error::LabelingMismatch(format!(
                "expected {} vertex and {} edge labels, got {} and {}",
                graph.vertex_count(),
                graph.edge_count(),
                vertex.len(),
                edge.len()
            )));
        }
        let n = graph.total_order();
        let mut seen = vec![false; n + 1];
        for &l in vertex.iter().chain(&edge) {
            if l == 0 || l as usize > n {
                return Err(Error::LabelingMismatch(format!("label {l} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::LabelingMismatch(format!("label {l} used twice")));
            }
        }
        Ok(TotalLabeling { vertex, edge })
    }

    /// Vertex `i` gets `i`; the k-th edge in canonical order gets `m + k`.
    pub fn default_for(graph: &Graph) -> Self {
        let m = graph.vertex_count() as u32;
        TotalLabeling {
            vertex: (1..=m).collect(),
            edge: (1..=graph.edge_count() as u32).map(|k| m + k).collect(),
        }
    }

    pub fn total_order(&self) -> usize {
        self.vertex.len() + self.edge.len()
    }

    pub fn label(&self, node: Node) -> u32 {
        match node {
            Node::Vertex(i) => self.vertex[i as usize - 1],
            Node::Edge(k) => self.edge[k],
        }
    }

    pub fn vertex_labels(&self) -> &[u32] {
        &self.vertex
    }

    pub fn edge_labels(&self) -> &[u32] {
        &self.edge
    }

    /// Inverse map; index `l` holds the node labeled `l` (index 0 unused).
    pub fn nodes_by_label(&self) -> Vec<Option<Node>> {
        let mut out = vec![None; self.total_order() + 1];
        for (i, &l) in self.vertex.iter().enumerate() {
            out[l as usize] = Some(Node::Vertex(i as u32 + 1));
        }
        for (k, &l) in self.edge.iter().enumerate() {
            out[l as usize] = Some(Node::Edge(k));
        }
        out
    }

    fn check_against(&self, graph: &Graph) -> Result<()> {
        if self.vertex.len() != graph.vertex_count() || self.edge.len() != graph.edge_count() {
            return Err(Error::LabelingMismatch(format!(
                "labeling covers {} vertices and {} edges, graph has {} and {}",
                self.vertex.len(),
                self.edge.len(),
                graph.vertex_count(),
                graph.edge_count()
            )));
        }
        Ok(())
    }
}

/// The total graph T(G), on the labels `1..=N`.
#[derive(Debug, Clone)]
pub struct TotalGraph {
    order: usize,
    adjacency: Vec<bool>,
    graph: Graph,
}

impl TotalGraph {
    pub fn new(graph: &Graph, labeling: &TotalLabeling) -> Result<Self> {
        labeling.check_against(graph)?;
        let n = graph.total_order();
        let mut pairs = Vec::new();
        let edges = graph.edges();
        for (k, &(u, v)) in edges.iter().enumerate() {
            let e = labeling.label(Node::Edge(k));
            let lu = labeling.label(Node::Vertex(u));
            let lv = labeling.label(Node::Vertex(v));
            pairs.extend([(lu, lv), (lu, e), (lv, e)]);
            for (k2, &(a, b)) in edges.iter().enumerate().skip(k + 1) {
                if a == u || a == v || b == u || b == v {
                    pairs.push((e, labeling.label(Node::Edge(k2))));
                }
            }
        }
        let total = Graph::from_edge_list(n, &pairs)?;
        let mut adjacency = vec![false; (n + 1) * (n + 1)];
        for &(x, y) in total.edges() {
            adjacency[x as usize * (n + 1) + y as usize] = true;
            adjacency[y as usize * (n + 1) + x as usize] = true;
        }
        Ok(TotalGraph { order: n, adjacency, graph: total })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        self.adjacency[x as usize * (self.order + 1) + y as usize]
    }

    /// T(G) as a plain graph on the labels.
    pub fn as_graph(&self) -> &Graph {
        &self.graph
    }
}

/// Friendship graph with `n` triangles sharing one center.
///
/// Triangle k has outer vertices a_k = 2k-1, b_k = 2k and the center is
/// 2n+1. Labels: a_k -> 3k-2, {a_k,b_k} -> 3k-1, b_k -> 3k,
/// {a_k,c} -> 3n+2k-1, {b_k,c} -> 3n+2k, c -> 5n+1.
pub fn friendship(n: u32) -> Result<(Graph, TotalLabeling)> {
    if n < 1 {
        return Err(Error::FamilyParameter { min: 1, got: n as u64 });
    }
    let c = 2 * n + 1;
    let mut pairs = Vec::with_capacity(3 * n as usize);
    for k in 1..=n {
        pairs.extend([(2 * k - 1, 2 * k), (2 * k - 1, c), (2 * k, c)]);
    }
    let graph = Graph::from_edge_list(c as usize, &pairs)?;

    let mut vertex = vec![0; c as usize];
    for k in 1..=n {
        vertex[2 * k as usize - 2] = 3 * k - 2;
        vertex[2 * k as usize - 1] = 3 * k;
    }
    vertex[c as usize - 1] = 5 * n + 1;
    let edge = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let k = u.div_ceil(2);
            if v == c {
                if u % 2 == 1 {
                    3 * n + 2 * k - 1
                } else {
                    3 * n + 2 * k
                }
            } else {
                3 * k - 1
            }
        })
        .collect();
    let labeling = TotalLabeling::new(&graph, vertex, edge)?;
    Ok((graph, labeling))
}

/// Two 4-cycles a-b-c-d and a-b-c-e sharing the path a-b-c, labeled
/// a=1, ab=2, b=3, bc=4, c=5, cd=6, d=7, da=8, ea=9, e=10, ce=11.
pub fn c42() -> (Graph, TotalLabeling) {
    // a..e = 1..5
    let graph = Graph::from_edge_list(5, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)])
        .expect("static graph");
    let vertex = vec![1, 3, 5, 7, 10];
    let edge = graph
        .edges()
        .iter()
        .map(|e| match e {
            (1, 2) => 2,
            (1, 4) => 8,
            (1, 5) => 9,
            (2, 3) => 4,
            (3, 4) => 6,
            (3, 5) => 11,
            _ => unreachable!(),
        })
        .collect();
    let labeling = TotalLabeling::new(&graph, vertex, edge).expect("static labeling");
    (graph, labeling)
}

/// On-disk graph format: `{"m", "edges", "labels"}` with optional labels
/// keyed `v<i>` (vertex i) and `e<k>` (k-th canonical edge, 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub m: usize,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, u32>>,
}

impl GraphFile {
    pub fn from_graph(graph: &Graph, labeling: &TotalLabeling) -> Self {
        let mut labels = BTreeMap::new();
        for (i, &l) in labeling.vertex_labels().iter().enumerate() {
            labels.insert(format!("v{}", i + 1), l);
        }
        for (k, &l) in labeling.edge_labels().iter().enumerate() {
            labels.insert(format!("e{}", k + 1), l);
        }
        GraphFile {
            m: graph.vertex_count(),
            edges: graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: Some(labels),
        }
    }

    /// Note that `e<k>` refers to canonical order, so the stored edge list
    /// must already be sorted for the keys to mean what the writer intended.
    pub fn into_graph(self) -> Result<(Graph, TotalLabeling)> {
        let pairs: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let graph = Graph::from_edge_list(self.m, &pairs)?;
        let labeling = match self.labels {
            None => TotalLabeling::default_for(&graph),
            Some(map) => {
                let mut vertex = vec![0; graph.vertex_count()];
                let mut edge = vec![0; graph.edge_count()];
                for (key, l) in map {
                    let (slot, idx) = match key.split_at(1) {
                        ("v", rest) => (&mut vertex, rest),
                        ("e", rest) => (&mut edge, rest),
                        _ => return Err(Error::Parse(format!("bad label key {key:?}"))),
                    };
                    let i: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad label key {key:?}")))?;
                    if i == 0 || i > slot.len() {
                        return Err(Error::LabelingMismatch(format!("no node for key {key:?}")));
                    }
                    slot[i - 1] = l;
                }
                TotalLabeling::new(&graph, vertex, edge)?
            }
        };
        Ok((graph, labeling))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            x = std::mem::replace(&mut self.parent[x], r);
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
