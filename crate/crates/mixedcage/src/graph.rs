//! Mixed graphs: a vertex set together with undirected edges and directed
//! arcs, kept separately.
//!
//! Cycles follow the mixed convention: a closed walk that traverses edges in
//! either direction and arcs forward only, and repeats no edge and no arc.
//! Vertices may repeat, so an edge `{u,v}` together with an arc `(u,v)`
//! already forms a cycle of length 2. The girth is the length of a shortest
//! such cycle.

use std::collections::VecDeque;
use std::fmt;

/// A single edge or arc. Edges are stored with endpoints in increasing
/// order; arcs keep their direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Undirected edge `{u, v}`, normalized so `u < v`.
    Edge(usize, usize),
    /// Directed arc `(u, v)` from `u` to `v`.
    Arc(usize, usize),
}

impl Element {
    /// Edge constructor that sorts the endpoints.
    pub fn edge(u: usize, v: usize) -> Element {
        if u <= v {
            Element::Edge(u, v)
        } else {
            Element::Edge(v, u)
        }
    }

    pub fn arc(u: usize, v: usize) -> Element {
        Element::Arc(u, v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Edge(u, v) => write!(f, "e {} {}", u, v),
            Element::Arc(u, v) => write!(f, "a {} {}", u, v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, order: usize },
    Loop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    DuplicateArc { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {} out of range for order {}", vertex, order)
            }
            GraphError::Loop { vertex } => write!(f, "loop at vertex {}", vertex),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{}, {}}}", u, v),
            GraphError::DuplicateArc { u, v } => write!(f, "duplicate arc ({}, {})", u, v),
        }
    }
}

impl std::error::Error for GraphError {}

/// Per-vertex degree triples of a mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `(deg, odeg, ideg)` for each vertex: undirected degree, out-degree,
    /// in-degree.
    pub triples: Vec<(usize, usize, usize)>,
}

impl DegreeProfile {
    /// True when every vertex has undirected degree `r` and out-degree `z`.
    pub fn is_regular(&self, r: usize, z: usize) -> bool {
        self.triples.iter().all(|&(d, o, _)| d == r && o == z)
    }

    /// The common `(r, z)` if the graph is regular in degree and out-degree.
    pub fn regular_params(&self) -> Option<(usize, usize)> {
        let &(r, z, _) = self.triples.first()?;
        self.triples
            .iter()
            .all(|&(d, o, _)| d == r && o == z)
            .then_some((r, z))
    }

    /// True when additionally every in-degree equals the out-degree, which
    /// forces in-degree = z throughout.
    pub fn is_totally_regular(&self) -> bool {
        match self.regular_params() {
            Some((_, z)) => self.triples.iter().all(|&(_, _, i)| i == z),
            None => false,
        }
    }
}

/// An immutable mixed graph on vertices `0..n`.
///
/// Element lists and per-vertex adjacency are built once and kept sorted, so
/// traversal order, emission order, and derived quantities are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    edge_nbrs: Vec<Vec<usize>>,
    out_nbrs: Vec<Vec<usize>>,
    in_nbrs: Vec<Vec<usize>>,
}

impl MixedGraph {
    /// Builds a graph from element lists, normalizing edge endpoint order
    /// and rejecting loops, out-of-range vertices, and duplicates.
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        arcs: &[(usize, usize)],
    ) -> Result<MixedGraph, GraphError> {
        let mut es: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            es.push(if u < v { (u, v) } else { (v, u) });
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut ar: Vec<(usize, usize)> = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            ar.push((u, v));
        }
        ar.sort_unstable();
        if let Some(w) = ar.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc { u: w[0].0, v: w[0].1 });
        }

        let mut edge_nbrs = vec![Vec::new(); n];
        let mut out_nbrs = vec![Vec::new(); n];
        let mut in_nbrs = vec![Vec::new(); n];
        for &(u, v) in &es {
            edge_nbrs[u].push(v);
            edge_nbrs[v].push(u);
        }
        for &(u, v) in &ar {
            out_nbrs[u].push(v);
            in_nbrs[v].push(u);
        }
        for list in edge_nbrs
            .iter_mut()
            .chain(out_nbrs.iter_mut())
            .chain(in_nbrs.iter_mut())
        {
            list.sort_unstable();
        }

        Ok(MixedGraph {
            n,
            edges: es,
            arcs: ar,
            edge_nbrs,
            out_nbrs,
            in_nbrs,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Arcs as `(tail, head)` pairs, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn edge_neighbors(&self, v: usize) -> &[usize] {
        &self.edge_nbrs[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_nbrs[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_nbrs[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// All elements, edges first, in sorted order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.edges
            .iter()
            .map(|&(u, v)| Element::Edge(u, v))
            .chain(self.arcs.iter().map(|&(u, v)| Element::Arc(u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            triples: (0..self.n)
                .map(|v| {
                    (
                        self.edge_nbrs[v].len(),
                        self.out_nbrs[v].len(),
                        self.in_nbrs[v].len(),
                    )
                })
                .collect(),
        }
    }

    /// True when every vertex has undirected degree `r` and out-degree `z`.
    pub fn check_regular(&self, r: usize, z: usize) -> bool {
        self.degree_profile().is_regular(r, z)
    }

    /// True when the graph is regular and in-degrees are constant as well.
    pub fn check_totally_regular(&self) -> bool {
        self.degree_profile().is_totally_regular()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`; element lists are re-sorted so
    /// the result is in normal form.
    pub fn permute(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        MixedGraph::new(self.n, &edges, &arcs).expect("relabeling a valid graph stays valid")
    }

    /// Length of a shortest mixed walk from `s` to `t`: edges both ways,
    /// arcs forward. `forbidden` excludes one element from the walk.
    /// `None` when `t` is unreachable.
    pub fn mixed_distance(&self, s: usize, t: usize, forbidden: Option<Element>) -> Option<usize> {
        self.mixed_distance_capped(s, t, forbidden, usize::MAX)
    }

    /// As [`mixed_distance`](Self::mixed_distance) but gives up beyond `cap`
    /// steps. A shortest walk never repeats a vertex, so plain BFS suffices.
    pub fn mixed_distance_capped(
        &self,
        s: usize,
        t: usize,
        forbidden: Option<Element>,
        cap: usize,
    ) -> Option<usize> {
        if s == t {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let d = dist[u];
            if d >= cap {
                continue;
            }
            let step = |v: usize, el: Element, dist: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
                if Some(el) == forbidden || dist[v] != usize::MAX {
                    return false;
                }
                dist[v] = d + 1;
                queue.push_back(v);
                v == t
            };
            for &v in &self.edge_nbrs[u] {
                if step(v, Element::edge(u, v), &mut dist, &mut queue) {
                    return Some(d + 1);
                }
            }
            for &v in &self.out_nbrs[u] {
                if step(v, Element::Arc(u, v), &mut dist, &mut queue) {
                    return Some(d + 1);
                }
            }
        }
        None
    }

    /// Length of a shortest mixed cycle, or `None` for a graph with no
    /// cycle at all.
    ///
    /// A shortest cycle through an element is that element plus a shortest
    /// walk between its endpoints avoiding it, so one capped BFS per element
    /// orientation settles the girth.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for el in self.elements() {
            if let Some(len) = self.cycle_through(el, best) {
                best = Some(len);
                if len == 2 {
                    break;
                }
            }
        }
        best
    }

    /// Length of a shortest mixed cycle using element `e`, or `None` if no
    /// cycle passes through it.
    pub fn girth_through_element(&self, e: Element) -> Option<usize> {
        self.cycle_through(e, None)
    }

    /// Shortest cycle through `el` that beats `bound` (exclusive), if any.
    fn cycle_through(&self, el: Element, bound: Option<usize>) -> Option<usize> {
        let cap = match bound {
            // Only cycles strictly shorter than the bound are of interest.
            Some(b) => b.checked_sub(2)?,
            None => usize::MAX,
        };
        let f = Some(el);
        match el {
            Element::Edge(u, v) => {
                let a = self.mixed_distance_capped(v, u, f, cap);
                let b = self.mixed_distance_capped(u, v, f, cap);
                let d = match (a, b) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => return None,
                };
                Some(d + 1)
            }
            Element::Arc(u, v) => Some(self.mixed_distance_capped(v, u, f, cap)? + 1),
        }
    }

    /// Girth by exhaustive walk enumeration, for cross-checking the BFS
    /// girth on small graphs. Explores closed walks that repeat no element,
    /// pruning at the best length found; returns `None` when no cycle of
    /// length at most `cap` exists.
    pub fn brute_force_girth(&self, cap: usize) -> Option<usize> {
        // Adjacency with element ids: edges get 0..E, arcs E..E+A.
        let ne = self.edges.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            adj[u].push((v, ne + i));
        }
        let mut used = vec![false; ne + self.arcs.len()];
        let mut best = cap.checked_add(1)?;
        for start in 0..self.n {
            // A shortest closed walk returns to its basepoint only once, so
            // stopping at first return loses nothing.
            Self::walk(&adj, start, start, 0, &mut used, &mut best);
            if best == 2 {
                break;
            }
        }
        (best <= cap).then_some(best)
    }

    fn walk(
        adj: &[Vec<(usize, usize)>],
        start: usize,
        at: usize,
        len: usize,
        used: &mut [bool],
        best: &mut usize,
    ) {
        if len + 1 >= *best {
            return;
        }
        for &(v, el) in &adj[at] {
            if used[el] {
                continue;
            }
            if v == start {
                *best = len + 1;
                continue;
            }
            used[el] = true;
            Self::walk(adj, start, v, len + 1, used, best);
            used[el] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> MixedGraph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MixedGraph::new(n, &[], &arcs).unwrap()
    }

    fn undirected_cycle(n: usize) -> MixedGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MixedGraph::new(n, &edges, &[]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let g = MixedGraph::new(4, &[(2, 0), (1, 3)], &[(3, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert!(g.has_arc(3, 0) && !g.has_arc(0, 3));

        assert_eq!(
            MixedGraph::new(3, &[(0, 3)], &[]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(
            MixedGraph::new(3, &[(1, 1)], &[]),
            Err(GraphError::Loop { vertex: 1 })
        );
        assert_eq!(
            MixedGraph::new(3, &[(0, 1), (1, 0)], &[]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            MixedGraph::new(3, &[], &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc { u: 0, v: 1 })
        );
        // Opposite arcs and an edge on the same pair are all distinct.
        assert!(MixedGraph::new(3, &[(0, 1)], &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn adjacency_views_agree_with_element_lists() {
        let g = MixedGraph::new(5, &[(0, 1), (1, 2), (3, 1)], &[(0, 2), (2, 0), (4, 1)]).unwrap();
        for v in 0..5 {
            for &w in g.edge_neighbors(v) {
                assert!(g.has_edge(v, w));
            }
            for &w in g.out_neighbors(v) {
                assert!(g.has_arc(v, w));
            }
            for &w in g.in_neighbors(v) {
                assert!(g.has_arc(w, v));
            }
        }
        let from_views: usize = (0..5).map(|v| g.edge_neighbors(v).len()).sum();
        assert_eq!(from_views, 2 * g.edges().len());
        let outs: usize = (0..5).map(|v| g.out_neighbors(v).len()).sum();
        let ins: usize = (0..5).map(|v| g.in_neighbors(v).len()).sum();
        assert_eq!(outs, g.arcs().len());
        assert_eq!(ins, g.arcs().len());
    }

    #[test]
    fn degree_profile_empty_graph() {
        let g = MixedGraph::new(3, &[], &[]).unwrap();
        assert_eq!(g.degree_profile().triples, vec![(0, 0, 0); 3]);
        assert!(g.check_regular(0, 0));
        assert!(g.check_totally_regular());
    }

    #[test]
    fn two_cycle_from_edge_plus_arc() {
        let g = MixedGraph::new(2, &[(0, 1)], &[(0, 1)]).unwrap();
        assert_eq!(g.girth(), Some(2));
        assert_eq!(g.girth_through_element(Element::edge(0, 1)), Some(2));
        assert_eq!(g.girth_through_element(Element::arc(0, 1)), Some(2));
        assert_eq!(g.brute_force_girth(10), Some(2));
    }

    #[test]
    fn girth_of_plain_cycles() {
        assert_eq!(undirected_cycle(5).girth(), Some(5));
        assert_eq!(directed_cycle(7).girth(), Some(7));
        // A single arc or edge has no cycle.
        let arc = MixedGraph::new(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(arc.girth(), None);
        assert_eq!(arc.girth_through_element(Element::arc(0, 1)), None);
    }

    #[test]
    fn mixed_distance_respects_arc_direction() {
        let g = MixedGraph::new(4, &[(1, 2)], &[(0, 1), (3, 2)]).unwrap();
        assert_eq!(g.mixed_distance(0, 2, None), Some(2));
        assert_eq!(g.mixed_distance(2, 0, None), None);
        assert_eq!(g.mixed_distance(3, 1, None), Some(2));
        assert_eq!(g.mixed_distance(1, 3, None), None);
        assert_eq!(g.mixed_distance(2, 2, None), Some(0));
    }

    #[test]
    fn forbidden_element_forces_detour() {
        let g = undirected_cycle(6);
        assert_eq!(g.mixed_distance(0, 1, None), Some(1));
        assert_eq!(
            g.mixed_distance(0, 1, Some(Element::edge(0, 1))),
            Some(5)
        );
        // Forbidding an edge off the shortest path changes nothing.
        assert_eq!(
            g.mixed_distance(0, 1, Some(Element::edge(3, 4))),
            Some(1)
        );
    }

    #[test]
    fn capped_distance_gives_up_cleanly() {
        let g = undirected_cycle(10);
        assert_eq!(g.mixed_distance_capped(0, 5, None, 4), None);
        assert_eq!(g.mixed_distance_capped(0, 5, None, 5), Some(5));
    }

    #[test]
    fn girth_through_element_triangle() {
        let g = MixedGraph::new(3, &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
        for el in g.elements() {
            assert_eq!(g.girth_through_element(el), Some(3));
        }
    }

    #[test]
    fn girth_through_element_sees_only_its_own_cycles() {
        // Triangle plus a pendant path: pendant elements lie on no cycle.
        let g = MixedGraph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[(3, 4)]).unwrap();
        assert_eq!(g.girth_through_element(Element::edge(2, 3)), None);
        assert_eq!(g.girth_through_element(Element::arc(3, 4)), None);
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn brute_force_girth_respects_cap() {
        let g = undirected_cycle(5);
        assert_eq!(g.brute_force_girth(6), Some(5));
        assert_eq!(g.brute_force_girth(4), None);
        let dag = MixedGraph::new(4, &[], &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(dag.brute_force_girth(12), None);
    }

    #[test]
    fn permute_preserves_structure() {
        let g = MixedGraph::new(4, &[(0, 1), (2, 3)], &[(1, 2)]).unwrap();
        let h = g.permute(&[3, 2, 1, 0]);
        assert_eq!(h.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(h.arcs(), &[(2, 1)]);
        assert_eq!(g.girth(), h.girth());
    }
}
