use std::collections::VecDeque;

use super::{Fusion, NonorientableError, Sign};

/// Polytopes as nodes, pair fusions as edges. Singles add no edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionGraph {
    nodes: usize,
    /// `(polytope, polytope, fusion index)`
    edges: Vec<(usize, usize, usize)>,
}

impl FusionGraph {
    pub fn new(nodes: usize, fusions: &[Fusion]) -> Self {
        let edges = fusions
            .iter()
            .enumerate()
            .filter_map(|(k, f)| match *f {
                Fusion::Pair(a, b) => Some((a.polytope, b.polytope, k)),
                Fusion::Single(_) => None,
            })
            .collect();
        FusionGraph { nodes, edges }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b, _)| usize::from(a == node) + usize::from(b == node))
            .sum()
    }

    /// Connected components as sorted node lists, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        let mut out = Vec::new();
        for start in 0..self.nodes {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Breadth-first two-colouring; each component root gets `Plus`. On
    /// failure returns an odd cycle as a closed walk of distinct nodes.
    pub fn two_color(&self) -> Result<Vec<Sign>, NonorientableError> {
        if let Some(&(a, _, _)) = self.edges.iter().find(|(a, b, _)| a == b) {
            return Err(NonorientableError::OddCycle { cycle: vec![a] });
        }
        let adj = self.adjacency();
        let mut sign: Vec<Option<Sign>> = vec![None; self.nodes];
        let mut parent = vec![usize::MAX; self.nodes];
        let mut depth = vec![0usize; self.nodes];
        for root in 0..self.nodes {
            if sign[root].is_some() {
                continue;
            }
            sign[root] = Some(Sign::Plus);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = sign[u].unwrap();
                for &w in &adj[u] {
                    match sign[w] {
                        None => {
                            sign[w] = Some(-su);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(NonorientableError::OddCycle {
                                cycle: tree_cycle(&parent, &depth, u, w),
                            });
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(sign.into_iter().map(Option::unwrap).collect())
    }
}

/// The cycle closed by the non-tree edge `u -- w`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
