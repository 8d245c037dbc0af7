//! Cyclic lifts: blow each node of a small base multigraph up into a fiber
//! of m vertices indexed by Z_m, and turn each labeled base element into an
//! orbit of m elements shifted around the fibers.
//!
//! One node with edge step 1 and one arc step is an ordinary circulant;
//! several nodes with offset-0 edge links give the "join two directed
//! m-cycles by a matching" pattern used by the bigger catalog graphs.

use std::fmt;

use crate::graph::{GraphError, MixedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Edge,
    Arc,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementKind::Edge => write!(f, "e"),
            ElementKind::Arc => write!(f, "a"),
        }
    }
}

/// One fiber ("node") of a lift: the elements that stay inside the fiber.
/// A step `(s, Edge)` yields edges {(a,t), (a,t+s)}; `(s, Arc)` yields arcs
/// (a,t) → (a,t+s), both for every t ∈ Z_m.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LiftNode {
    pub self_steps: Vec<(usize, ElementKind)>,
}

/// An element family between two distinct nodes: `(a,t)` to `(b,t+offset)`
/// for every t ∈ Z_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftLink {
    pub a: usize,
    pub b: usize,
    pub offset: usize,
    pub kind: ElementKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LiftSpec {
    /// Fiber size; all index arithmetic is mod m.
    pub m: usize,
    pub nodes: Vec<LiftNode>,
    pub links: Vec<LiftLink>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    /// m = 0 or no nodes.
    Empty,
    /// A self step of 0, or a step ≥ m.
    BadStep { node: usize, step: usize },
    /// Link endpoint is not a declared node.
    BadLinkNode { node: usize },
    /// Links must join two distinct nodes; within-fiber elements are
    /// self steps.
    LinkLoop { node: usize },
    /// Link offset ≥ m.
    BadOffset { offset: usize },
    /// Two families generate the same element, e.g. edge steps s and m−s
    /// both listed, or an arc step repeated.
    DuplicateElement { description: String },
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::Empty => write!(f, "lift needs m >= 1 and at least one node"),
            LiftError::BadStep { node, step } => {
                write!(f, "node {}: step {} not in 1..m", node, step)
            }
            LiftError::BadLinkNode { node } => write!(f, "link references unknown node {}", node),
            LiftError::LinkLoop { node } => {
                write!(f, "link from node {} to itself; use a self step", node)
            }
            LiftError::BadOffset { offset } => write!(f, "link offset {} not below m", offset),
            LiftError::DuplicateElement { description } => {
                write!(f, "duplicate element generated: {}", description)
            }
        }
    }
}

impl std::error::Error for LiftError {}

/// Expands a lift spec into the mixed graph of order `nodes · m`.
/// Vertex `(a, t)` becomes index `a·m + t`.
pub fn lift(spec: &LiftSpec) -> Result<MixedGraph, LiftError> {
    let m = spec.m;
    if m == 0 || spec.nodes.is_empty() {
        return Err(LiftError::Empty);
    }
    let n = spec.nodes.len() * m;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();

    for (a, node) in spec.nodes.iter().enumerate() {
        for &(step, kind) in &node.self_steps {
            if step == 0 || step >= m {
                return Err(LiftError::BadStep { node: a, step });
            }
            match kind {
                ElementKind::Edge => {
                    // Steps s and m−s give the same edge orbit; normalize so
                    // each edge is generated once. A step of exactly m/2
                    // pairs t with t+m/2 twice per orbit: a perfect matching
                    // of m/2 edges.
                    let s = step.min(m - step);
                    let count = if 2 * s == m { m / 2 } else { m };
                    for t in 0..count {
                        edges.push((a * m + t, a * m + (t + s) % m));
                    }
                }
                ElementKind::Arc => {
                    for t in 0..m {
                        arcs.push((a * m + t, a * m + (t + step) % m));
                    }
                }
            }
        }
    }

    for link in &spec.links {
        if link.a >= spec.nodes.len() {
            return Err(LiftError::BadLinkNode { node: link.a });
        }
        if link.b >= spec.nodes.len() {
            return Err(LiftError::BadLinkNode { node: link.b });
        }
        if link.a == link.b {
            return Err(LiftError::LinkLoop { node: link.a });
        }
        if link.offset >= m {
            return Err(LiftError::BadOffset { offset: link.offset });
        }
        for t in 0..m {
            let u = link.a * m + t;
            let v = link.b * m + (t + link.offset) % m;
            match link.kind {
                ElementKind::Edge => edges.push((u, v)),
                ElementKind::Arc => arcs.push((u, v)),
            }
        }
    }

    MixedGraph::new(n, &edges, &arcs).map_err(|e| match e {
        GraphError::DuplicateEdge { u, v } => LiftError::DuplicateElement {
            description: format!("edge {{{}, {}}}", u, v),
        },
        GraphError::DuplicateArc { u, v } => LiftError::DuplicateElement {
            description: format!("arc ({}, {})", u, v),
        },
        other => LiftError::DuplicateElement {
            description: other.to_string(),
        },
    })
}

/// The relabeling that advances every fiber by one step: `(a, t) → (a, t+1)`.
/// Always an automorphism of the lifted graph.
pub fn fiber_rotation(spec: &LiftSpec) -> Vec<usize> {
    let m = spec.m;
    (0..spec.nodes.len() * m)
        .map(|v| (v / m) * m + (v % m + 1) % m)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(m: usize, edge_steps: &[usize], arc_steps: &[usize]) -> LiftSpec {
        let mut self_steps: Vec<(usize, ElementKind)> =
            edge_steps.iter().map(|&s| (s, ElementKind::Edge)).collect();
        self_steps.extend(arc_steps.iter().map(|&s| (s, ElementKind::Arc)));
        LiftSpec {
            m,
            nodes: vec![LiftNode { self_steps }],
            links: Vec::new(),
        }
    }

    #[test]
    fn single_fiber_circulant() {
        // Z_13, edge step 1, arc step 5: 13 edges, 13 arcs, girth 5.
        let g = lift(&circulant(13, &[1], &[5])).unwrap();
        assert_eq!(g.order(), 13);
        assert_eq!(g.edges().len(), 13);
        assert_eq!(g.arcs().len(), 13);
        assert!(g.check_regular(2, 1));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn half_step_is_a_perfect_matching() {
        let g = lift(&circulant(10, &[5], &[])).unwrap();
        assert_eq!(g.edges().len(), 5);
        assert!(g.check_regular(1, 0));
    }

    #[test]
    fn complementary_edge_steps_rejected() {
        let err = lift(&circulant(10, &[3, 7], &[])).unwrap_err();
        assert!(matches!(err, LiftError::DuplicateElement { .. }));
        // Arc steps s and m−s are different arc sets, so both are fine.
        let g = lift(&circulant(10, &[], &[3, 7])).unwrap();
        assert_eq!(g.arcs().len(), 20);
        assert!(g.check_totally_regular());
    }

    #[test]
    fn link_validation() {
        let two = |links: Vec<LiftLink>| LiftSpec {
            m: 5,
            nodes: vec![LiftNode::default(), LiftNode::default()],
            links,
        };
        let loop_link = two(vec![LiftLink { a: 1, b: 1, offset: 0, kind: ElementKind::Edge }]);
        assert_eq!(lift(&loop_link).unwrap_err(), LiftError::LinkLoop { node: 1 });
        let bad = two(vec![LiftLink { a: 0, b: 2, offset: 0, kind: ElementKind::Edge }]);
        assert_eq!(lift(&bad).unwrap_err(), LiftError::BadLinkNode { node: 2 });
        let off = two(vec![LiftLink { a: 0, b: 1, offset: 5, kind: ElementKind::Edge }]);
        assert_eq!(lift(&off).unwrap_err(), LiftError::BadOffset { offset: 5 });
    }

    #[test]
    fn matching_link_joins_fibers() {
        // Two directed 5-cycles joined by the identity matching.
        let spec = LiftSpec {
            m: 5,
            nodes: vec![
                LiftNode { self_steps: vec![(1, ElementKind::Arc)] },
                LiftNode { self_steps: vec![(1, ElementKind::Arc)] },
            ],
            links: vec![LiftLink { a: 0, b: 1, offset: 0, kind: ElementKind::Edge }],
        };
        let g = lift(&spec).unwrap();
        assert_eq!(g.order(), 10);
        assert!(g.check_regular(1, 1));
        assert!(g.has_edge(0, 5) && g.has_edge(4, 9));
    }

    #[test]
    fn parallel_links_with_distinct_offsets() {
        let spec = LiftSpec {
            m: 7,
            nodes: vec![LiftNode::default(), LiftNode::default()],
            links: vec![
                LiftLink { a: 0, b: 1, offset: 1, kind: ElementKind::Edge },
                LiftLink { a: 0, b: 1, offset: 3, kind: ElementKind::Edge },
            ],
        };
        let g = lift(&spec).unwrap();
        assert_eq!(g.edges().len(), 14);
        assert!(g.check_regular(2, 0));
    }

    #[test]
    fn fiber_rotation_is_an_automorphism() {
        let spec = LiftSpec {
            m: 6,
            nodes: vec![
                LiftNode { self_steps: vec![(1, ElementKind::Arc), (2, ElementKind::Edge)] },
                LiftNode { self_steps: vec![(1, ElementKind::Arc)] },
            ],
            links: vec![LiftLink { a: 0, b: 1, offset: 4, kind: ElementKind::Edge }],
        };
        let g = lift(&spec).unwrap();
        let rho = fiber_rotation(&spec);
        assert_eq!(g.permute(&rho), g);
    }
}
