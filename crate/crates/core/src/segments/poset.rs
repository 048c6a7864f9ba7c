use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use super::Multisegment;
use crate::error::{Error, Result};
use crate::growth::gk_dimension;

pub const DEFAULT_NODE_LIMIT: usize = 100_000;

/// Multisegments reachable from `nodes[top]` by elementary operations, with
/// the Hasse diagram of the induced order. Edges point from the upper node to
/// the lower one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub nodes: Vec<Multisegment>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub top: usize,
}

pub fn poset_below(a: &Multisegment) -> Result<Poset> {
    poset_below_with_limit(a, DEFAULT_NODE_LIMIT)
}

pub fn poset_below_with_limit(a: &Multisegment, limit: usize) -> Result<Poset> {
    let mut index: HashMap<Multisegment, usize> = HashMap::new();
    let mut nodes = vec![a.clone()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new()];
    index.insert(a.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for b in nodes[u].successors() {
            let v = match index.get(&b) {
                Some(&v) => v,
                None => {
                    if nodes.len() >= limit {
                        return Err(Error::SizeLimitExceeded {
                            requested: nodes.len() as u128 + 1,
                            limit: limit as u128,
                        });
                    }
                    let v = nodes.len();
                    index.insert(b.clone(), v);
                    nodes.push(b);
                    succ.push(Vec::new());
                    queue.push_back(v);
                    v
                }
            };
            succ[u].push(v);
        }
    }
    let hasse_edges = transitive_reduction(&succ);
    Ok(Poset { nodes, hasse_edges, top: 0 })
}

/// Keep `u -> v` only when `v` is not reachable from `u` through another
/// successor. The relation is acyclic since every step raises the potential.
fn transitive_reduction(succ: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let n = succ.len();
    let mut stamp = vec![usize::MAX; n];
    let mut edges = Vec::new();
    let mut stack = Vec::new();
    for u in 0..n {
        // mark everything reachable in two or more steps
        for &w in &succ[u] {
            stack.extend(succ[w].iter().copied());
        }
        while let Some(x) = stack.pop() {
            if stamp[x] == u {
                continue;
            }
            stamp[x] = u;
            stack.extend(succ[x].iter().copied());
        }
        let mut direct: Vec<usize> = succ[u].iter().copied().filter(|&v| stamp[v] != u).collect();
        direct.sort_unstable();
        direct.dedup();
        edges.extend(direct.into_iter().map(|v| (u, v)));
    }
    edges
}

impl Poset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Graphviz rendering: one node per multisegment labelled with its
    /// normalized rendering and GK dimension, one edge per Hasse edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n    node [shape=box];\n");
        for (i, m) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "    n{i} [label=\"{}\\ngk = {}\"];",
                m.display_normalized(),
                gk_dimension(m)
            );
        }
        for &(u, v) in &self.hasse_edges {
            let _ = writeln!(out, "    n{u} -> n{v};");
        }
        out.push_str("}\n");
        out
    }
}
