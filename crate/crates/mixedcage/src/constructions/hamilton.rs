//! The Hoffman–Singleton graph and Hamiltonian-cycle orientation: replacing
//! the edges of a Hamiltonian cycle in an r-regular girth-g graph by forward
//! arcs yields an (r−2, 1, g)-candidate on the same vertex set, since every
//! cycle of the oriented graph maps onto a cycle of the original.

use crate::constructions::BuildError;
use crate::graph::MixedGraph;

/// The (7,5)-cage on 50 vertices: five pentagons P_h and five pentagrams
/// Q_i, with pentagon vertex (h, j) adjacent to pentagram vertex
/// (i, h·i + j mod 5).
pub fn hoffman_singleton() -> MixedGraph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    MixedGraph::new(50, &edges, &[]).expect("valid")
}

/// A Hamiltonian cycle, listed as the vertex sequence with the closing step
/// back to the first vertex implied.
pub type VertexCycle = Vec<usize>;

/// Finds a Hamiltonian cycle in the undirected part of `g` by backtracking,
/// visiting at most `budget` search nodes.
///
/// Deterministic: starts at vertex 0 and always extends to the admissible
/// neighbor with the fewest free continuations (ties to the lower vertex),
/// so repeated runs return the same cycle. Arcs are ignored.
pub fn find_hamiltonian_cycle(g: &MixedGraph, budget: u64) -> Result<VertexCycle, BuildError> {
    let n = g.order();
    if n == 0 {
        return Err(BuildError::NoHamiltonianCycle { nodes: 0 });
    }
    if n == 1 || g.edge_neighbors(0).is_empty() {
        return Err(BuildError::NoHamiltonianCycle { nodes: 0 });
    }
    let mut state = HamSearch {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    state.visited[0] = true;
    state.path.push(0);
    if state.extend() {
        Ok(state.path)
    } else {
        Err(BuildError::NoHamiltonianCycle { nodes: state.nodes })
    }
}

struct HamSearch<'a> {
    g: &'a MixedGraph,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl HamSearch<'_> {
    fn free_degree(&self, v: usize) -> usize {
        self.g
            .edge_neighbors(v)
            .iter()
            .filter(|&&w| !self.visited[w])
            .count()
    }

    /// True when every unvisited vertex still has enough usable ends: at
    /// least 2 among unvisited neighbors, the path head, and the start.
    fn ends_feasible(&self) -> bool {
        let head = *self.path.last().unwrap();
        for v in 0..self.g.order() {
            if self.visited[v] {
                continue;
            }
            let mut free = 0;
            for &w in self.g.edge_neighbors(v) {
                if !self.visited[w] || w == head || w == 0 {
                    free += 1;
                    if free >= 2 {
                        break;
                    }
                }
            }
            if free < 2 {
                return false;
            }
        }
        true
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let head = *self.path.last().unwrap();
        if self.path.len() == self.g.order() {
            return self.g.has_edge(head, 0);
        }
        if !self.ends_feasible() {
            return false;
        }
        let mut candidates: Vec<(usize, usize)> = self
            .g
            .edge_neighbors(head)
            .iter()
            .filter(|&&w| !self.visited[w])
            .map(|&w| (self.free_degree(w), w))
            .collect();
        candidates.sort_unstable();
        for (_, w) in candidates {
            self.visited[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
            if self.nodes > self.budget {
                return false;
            }
        }
        false
    }
}

/// Replaces the edges of a Hamiltonian cycle by arcs oriented along it.
/// Undirected degree drops by 2 everywhere; out- and in-degree rise by 1.
pub fn orient_cycle(g: &MixedGraph, cycle: &[usize]) -> Result<MixedGraph, BuildError> {
    let n = g.order();
    if cycle.len() != n {
        return Err(BuildError::BadCycle {
            what: format!("cycle visits {} of {} vertices", cycle.len(), n),
        });
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return Err(BuildError::BadCycle {
                what: format!("vertex {} repeated or out of range", v),
            });
        }
        seen[v] = true;
    }
    let mut cycle_edges = Vec::with_capacity(n);
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % n];
        if !g.has_edge(u, v) {
            return Err(BuildError::BadCycle {
                what: format!("{} and {} are not adjacent", u, v),
            });
        }
        cycle_edges.push(if u < v { (u, v) } else { (v, u) });
    }
    cycle_edges.sort_unstable();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| cycle_edges.binary_search(e).is_err())
        .collect();
    let mut arcs: Vec<(usize, usize)> = g.arcs().to_vec();
    for (i, &u) in cycle.iter().enumerate() {
        arcs.push((u, cycle[(i + 1) % n]));
    }
    MixedGraph::new(n, &edges, &arcs).map_err(|e| BuildError::BadCycle { what: e.to_string() })
}
