//! Parametric families and individual record graphs.
//!
//! Each builder returns a graph whose parameters `(r, z, g, order)` are
//! documented on the catalog entry and re-checked by tests through the girth
//! and regularity machinery.

use crate::bounds::f21;
use crate::constructions::lift::{lift, ElementKind, LiftLink, LiftNode, LiftSpec};
use crate::constructions::BuildError;
use crate::graph::MixedGraph;

/// Smallest known r-regular digraph of girth g: vertices Z_{r(g−1)+1},
/// arcs i → i+j for 1 ≤ j ≤ r. Any walk needs at least ⌈n/r⌉ = g arcs to
/// wrap around, and g steps of size r close up exactly.
pub fn bcw(r: usize, g: usize) -> Result<MixedGraph, BuildError> {
    if r < 1 || g < 2 {
        return Err(BuildError::BadParameters {
            what: "bcw needs r >= 1, g >= 2".into(),
        });
    }
    let n = r * (g - 1) + 1;
    let mut arcs = Vec::with_capacity(n * r);
    for i in 0..n {
        for j in 1..=r {
            arcs.push((i, (i + j) % n));
        }
    }
    Ok(MixedGraph::new(n, &[], &arcs).expect("valid arc set"))
}

/// The (1,1,g)-cage: a cyclically oriented (2g−2)-cycle whose antipodal
/// pairs are joined by edges.
pub fn oriented_mobius(g: usize) -> Result<MixedGraph, BuildError> {
    if g < 4 {
        return Err(BuildError::BadParameters {
            what: "oriented_mobius needs g >= 4".into(),
        });
    }
    let n = 2 * g - 2;
    let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let edges: Vec<(usize, usize)> = (0..n / 2).map(|i| (i, i + n / 2)).collect();
    Ok(MixedGraph::new(n, &edges, &arcs).expect("valid"))
}

/// The (1,2,g)-cage: a directed g-cycle with every vertex doubled. Vertices
/// (i, j) for i ∈ Z_g, j ∈ {0,1}; the two copies of position i are joined
/// by an edge, and both copies at i send arcs to both copies at i+1.
pub fn cyclic_lex_k2(g: usize) -> Result<MixedGraph, BuildError> {
    if g < 3 {
        return Err(BuildError::BadParameters {
            what: "cyclic_lex_k2 needs g >= 3".into(),
        });
    }
    let v = |i: usize, j: usize| 2 * (i % g) + j;
    let edges: Vec<(usize, usize)> = (0..g).map(|i| (v(i, 0), v(i, 1))).collect();
    let mut arcs = Vec::with_capacity(4 * g);
    for i in 0..g {
        for j in 0..2 {
            for k in 0..2 {
                arcs.push((v(i, j), v(i + 1, k)));
            }
        }
    }
    Ok(MixedGraph::new(2 * g, &edges, &arcs).expect("valid"))
}

/// Arc steps for the (2,1,g)-cages realized as circulants on Z_{f21(g)}
/// with edge step 1: for each g, the least arc step giving girth exactly g.
/// Regenerated by an exhaustive test.
const CAGE21_STEPS: [(usize, usize); 8] = [
    (5, 5),
    (6, 5),
    (7, 7),
    (8, 7),
    (9, 9),
    (10, 9),
    (11, 11),
    (12, 11),
];

/// The (2,1,g)-cage for 5 ≤ g ≤ 12: an undirected cycle on Z_{f21(g)}
/// plus one spanning arc orbit.
pub fn cage21(g: usize) -> Result<MixedGraph, BuildError> {
    let step = CAGE21_STEPS
        .iter()
        .find(|&&(tg, _)| tg == g)
        .map(|&(_, s)| s)
        .ok_or_else(|| BuildError::BadParameters {
            what: format!("cage21 has stored arc steps only for 5 <= g <= 12, got {}", g),
        })?;
    let m = f21(g as u64) as usize;
    lift(&cage21_spec(m, step)).map_err(BuildError::from)
}

pub(crate) fn cage21_spec(m: usize, step: usize) -> LiftSpec {
    LiftSpec {
        m,
        nodes: vec![LiftNode {
            self_steps: vec![(1, ElementKind::Edge), (step, ElementKind::Arc)],
        }],
        links: Vec::new(),
    }
}

/// (2,z,g)-graph of order g²: g undirected g-cycles ("rows"), with arcs
/// from row i to row i+1 shifting position by 0..z−1.
pub fn theorem_2zg_square(z: usize, g: usize) -> Result<MixedGraph, BuildError> {
    if g < 3 || z < 1 || z > g {
        return Err(BuildError::BadParameters {
            what: "theorem_2zg_square needs g >= 3 and 1 <= z <= g".into(),
        });
    }
    let v = |i: usize, j: usize| (i % g) * g + j % g;
    let mut edges = Vec::with_capacity(g * g);
    let mut arcs = Vec::with_capacity(g * g * z);
    for i in 0..g {
        for j in 0..g {
            edges.push((v(i, j), v(i, j + 1)));
            for k in 0..z {
                arcs.push((v(i, j), v(i + 1, j + k)));
            }
        }
    }
    Ok(MixedGraph::new(g * g, &edges, &arcs).expect("valid"))
}

/// (2,z,g)-graph of order g²−g for even g: g−1 undirected g-cycles, with
/// the row positions split into two halves of size g/2. Arcs advance one
/// row and shift position by 0..z−1 inside the current half; the wrap from
/// the last row back to row 0 swaps halves, which keeps every directed
/// closed walk long.
pub fn theorem_2zg_even(z: usize, g: usize) -> Result<MixedGraph, BuildError> {
    if g < 6 || g % 2 != 0 || z < 1 || z > g / 2 {
        return Err(BuildError::BadParameters {
            what: "theorem_2zg_even needs even g >= 6 and 1 <= z <= g/2".into(),
        });
    }
    let h = g / 2;
    let rows = g - 1;
    let v = |i: usize, j: usize| (i % rows) * g + j % g;
    let mut edges = Vec::with_capacity(rows * g);
    for i in 0..rows {
        for j in 0..g {
            edges.push((v(i, j), v(i, j + 1)));
        }
    }
    let mut arcs = Vec::with_capacity(rows * g * z);
    for j in 0..h {
        for k in 0..z {
            for i in 0..g - 2 {
                arcs.push((v(i, j), v(i + 1, (j + k) % h)));
                arcs.push((v(i, h + j), v(i + 1, h + (j + k) % h)));
            }
            arcs.push((v(g - 2, j), v(0, h + (j + k) % h)));
            arcs.push((v(g - 2, h + j), v(0, (j + k) % h)));
        }
    }
    Ok(MixedGraph::new(rows * g, &edges, &arcs).expect("valid"))
}

/// (2,2,g)-graph of order ⌈g/2⌉·⌊3g/2⌋: s = ⌈g/2⌉ undirected t-cycles with
/// t = ⌊3g/2⌋; each vertex sends arcs to positions j and j+1 of the next
/// cycle, and the wrap from the last cycle to the first adds ⌊g/2⌋.
pub fn theorem_22g(g: usize) -> Result<MixedGraph, BuildError> {
    if g < 5 {
        return Err(BuildError::BadParameters {
            what: "theorem_22g needs g >= 5".into(),
        });
    }
    let s = g.div_ceil(2);
    let t = 3 * g / 2;
    let v = |i: usize, j: usize| (i % s) * t + j % t;
    let mut edges = Vec::with_capacity(s * t);
    let mut arcs = Vec::with_capacity(2 * s * t);
    for i in 0..s {
        for j in 0..t {
            edges.push((v(i, j), v(i, j + 1)));
            let shift = if i + 1 == s { g / 2 } else { 0 };
            arcs.push((v(i, j), v(i + 1, j + shift)));
            arcs.push((v(i, j), v(i + 1, j + shift + 1)));
        }
    }
    Ok(MixedGraph::new(s * t, &edges, &arcs).expect("valid"))
}

/// The unique most symmetric smallest (3,1,5)-graph, order 24. An outer
/// directed 18-cycle with undirected chords {i, i+4}, an inner directed
/// 6-cycle, and each inner vertex j joined by edges to the outer vertices
/// congruent to j mod 6.
pub fn graph315() -> MixedGraph {
    let outer = 18;
    let inner = |j: usize| outer + j % 6;
    let mut edges = Vec::with_capacity(36);
    let mut arcs = Vec::with_capacity(24);
    for i in 0..outer {
        arcs.push((i, (i + 1) % outer));
        edges.push((i, (i + 4) % outer));
        edges.push((inner(i), i));
    }
    for j in 0..6 {
        arcs.push((inner(j), inner(j + 1)));
    }
    MixedGraph::new(24, &edges, &arcs).expect("valid")
}

/// A smallest (3,1,6)-graph, order 30: three directed 10-cycles x, y, z
/// with edges x_i ~ y_{i±2}, diameters z_i ~ z_{i+5}, and color-matching
/// edges x_i ~ z_i and y_{i+5} ~ z_i.
pub fn graph316() -> MixedGraph {
    let x = |i: usize| i % 10;
    let y = |i: usize| 10 + i % 10;
    let z = |i: usize| 20 + i % 10;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for i in 0..10 {
        arcs.push((x(i), x(i + 1)));
        arcs.push((y(i), y(i + 1)));
        arcs.push((z(i), z(i + 1)));
        edges.push((x(i), y(i + 2)));
        edges.push((x(i), y(i + 8)));
        edges.push((x(i), z(i)));
        edges.push((y(i + 5), z(i)));
        if i < 5 {
            edges.push((z(i), z(i + 5)));
        }
    }
    MixedGraph::new(30, &edges, &arcs).expect("valid")
}

/// Lift description of the order-60 (3,1,7)-graph: six directed 10-cycles
/// joined by nine matchings.
pub fn lift317_spec() -> LiftSpec {
    six_cycle_lift(
        10,
        &[
            (0, 1, 0),
            (0, 2, 0),
            (0, 3, 0),
            (1, 2, 4),
            (1, 4, 6),
            (2, 5, 4),
            (3, 4, 0),
            (3, 5, 0),
            (4, 5, 6),
        ],
    )
}

/// Lift description of the order-76 (3,1,8)-graph: two directed 38-cycles
/// with chord edges of steps 7 and 11 and the identity matching between
/// them. Its automorphism group is the fiber rotation, of order 38.
pub fn lift318_spec() -> LiftSpec {
    LiftSpec {
        m: 38,
        nodes: vec![
            LiftNode {
                self_steps: vec![(1, ElementKind::Arc), (7, ElementKind::Edge)],
            },
            LiftNode {
                self_steps: vec![(1, ElementKind::Arc), (11, ElementKind::Edge)],
            },
        ],
        links: vec![LiftLink { a: 0, b: 1, offset: 0, kind: ElementKind::Edge }],
    }
}

/// Lift description of the order-34 (4,1,5)-graph: two fibers over Z_17
/// carrying undirected cycles of steps 1 and 8, arc steps 7 and 11, and
/// spoke edges at offsets ±2.
///
/// The two directed 17-cycles must run in opposite rotational senses:
/// with both arc families stepping "forward" (7 and 6) the four offsets
/// 2 + 6 + 2 + 7 = 17 close seventeen 4-cycles of the form
/// spoke, inner arc, spoke, outer arc.  Reversing the inner cycle
/// (step 11 = -6) is the minimal repair and yields girth 5; reversing
/// the outer one instead gives the mirror image of the same graph.
pub fn lift415_spec() -> LiftSpec {
    LiftSpec {
        m: 17,
        nodes: vec![
            LiftNode {
                self_steps: vec![(7, ElementKind::Arc), (1, ElementKind::Edge)],
            },
            LiftNode {
                self_steps: vec![(11, ElementKind::Arc), (8, ElementKind::Edge)],
            },
        ],
        links: vec![
            LiftLink { a: 0, b: 1, offset: 2, kind: ElementKind::Edge },
            LiftLink { a: 0, b: 1, offset: 15, kind: ElementKind::Edge },
        ],
    }
}

/// Lift description of the order-48 (4,1,6)-graph: six directed 8-cycles
/// joined by twelve matchings.
pub fn lift416_spec() -> LiftSpec {
    six_cycle_lift(
        8,
        &[
            (0, 1, 0),
            (0, 2, 0),
            (0, 3, 0),
            (0, 5, 0),
            (1, 2, 3),
            (1, 3, 5),
            (1, 4, 0),
            (2, 4, 2),
            (2, 5, 3),
            (3, 4, 6),
            (3, 5, 5),
            (4, 5, 4),
        ],
    )
}

/// Lift description of the order-72 (5,1,6)-graph: six directed 12-cycles
/// joined by fifteen matchings, three node pairs carrying two parallel
/// matchings at different offsets.
pub fn lift516_spec() -> LiftSpec {
    six_cycle_lift(
        12,
        &[
            (0, 1, 0),
            (0, 2, 0),
            (1, 2, 3),
            (3, 4, 7),
            (3, 5, 11),
            (4, 5, 1),
            (0, 4, 0),
            (1, 5, 3),
            (0, 3, 0),
            (0, 3, 8),
            (1, 4, 5),
            (1, 4, 9),
            (2, 5, 5),
            (2, 5, 9),
            (2, 3, 3),
        ],
    )
}

/// Six fibers, each a directed m-cycle, plus edge matchings at the given
/// (a, b, offset) triples.
fn six_cycle_lift(m: usize, links: &[(usize, usize, usize)]) -> LiftSpec {
    LiftSpec {
        m,
        nodes: (0..6)
            .map(|_| LiftNode {
                self_steps: vec![(1, ElementKind::Arc)],
            })
            .collect(),
        links: links
            .iter()
            .map(|&(a, b, offset)| LiftLink { a, b, offset, kind: ElementKind::Edge })
            .collect(),
    }
}

/// Lift description of the order-19 (2,2,5)-graph: a mixed orientation of
/// the cubic-residue circulant on Z_19 — edge step 1, arc steps 7 and 8
/// (the cubic residues up to sign).
pub fn circulant225_spec() -> LiftSpec {
    LiftSpec {
        m: 19,
        nodes: vec![LiftNode {
            self_steps: vec![
                (1, ElementKind::Edge),
                (7, ElementKind::Arc),
                (8, ElementKind::Arc),
            ],
        }],
        links: Vec::new(),
    }
}

/// Lift description of the totally regular order-27 (2,2,6)-graph: three
/// undirected 9-cycles with two arc orbits between consecutive cycles.
pub fn graph226_spec() -> LiftSpec {
    let e = ElementKind::Edge;
    let a = ElementKind::Arc;
    LiftSpec {
        m: 9,
        nodes: (0..3)
            .map(|_| LiftNode { self_steps: vec![(1, e)] })
            .collect(),
        links: vec![
            LiftLink { a: 0, b: 1, offset: 0, kind: a },
            LiftLink { a: 0, b: 1, offset: 8, kind: a },
            LiftLink { a: 1, b: 2, offset: 0, kind: a },
            LiftLink { a: 1, b: 2, offset: 1, kind: a },
            LiftLink { a: 2, b: 0, offset: 4, kind: a },
            LiftLink { a: 2, b: 0, offset: 5, kind: a },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bcw_is_a_regular_digraph_of_girth_g() {
        let g = bcw(3, 5).unwrap();
        assert_eq!(g.order(), 13);
        assert!(g.edges().is_empty());
        assert!(g.check_regular(0, 3));
        assert!(g.check_totally_regular());
        assert_eq!(g.girth(), Some(5));

        let c = bcw(1, 7).unwrap();
        assert_eq!(c.order(), 7);
        assert_eq!(c.girth(), Some(7));

        let two = bcw(2, 7).unwrap();
        assert_eq!(two.order(), 13);
        assert_eq!(two.girth(), Some(7));
        assert_eq!(two.brute_force_girth(13), Some(7));
    }

    #[test]
    fn mobius_family() {
        for g in [4, 5, 6, 9] {
            let m = oriented_mobius(g).unwrap();
            assert_eq!(m.order(), 2 * g - 2);
            assert!(m.check_regular(1, 1));
            assert_eq!(m.girth(), Some(g), "g = {}", g);
        }
        assert!(oriented_mobius(3).is_err());
    }

    #[test]
    fn lexicographic_doubling_family() {
        for g in [3, 7, 10] {
            let l = cyclic_lex_k2(g).unwrap();
            assert_eq!(l.order(), 2 * g);
            assert!(l.check_regular(1, 2));
            assert!(l.check_totally_regular());
            assert_eq!(l.girth(), Some(g), "g = {}", g);
        }
    }

    #[test]
    fn square_family_girth_is_exact() {
        for g in [3, 5] {
            for z in 1..=g {
                let q = theorem_2zg_square(z, g).unwrap();
                assert_eq!(q.order(), g * g);
                assert!(q.check_regular(2, z), "z = {}, g = {}", z, g);
                assert_eq!(q.girth(), Some(g), "z = {}, g = {}", z, g);
            }
        }
        assert!(theorem_2zg_square(6, 5).is_err());
    }

    #[test]
    fn even_family() {
        for (z, g) in [(1, 6), (2, 6), (3, 6), (2, 8)] {
            let q = theorem_2zg_even(z, g).unwrap();
            assert_eq!(q.order(), g * g - g);
            assert!(q.check_regular(2, z), "z = {}, g = {}", z, g);
            assert_eq!(q.girth(), Some(g), "z = {}, g = {}", z, g);
        }
        assert!(theorem_2zg_even(4, 6).is_err());
        assert!(theorem_2zg_even(2, 7).is_err());
    }

    #[test]
    fn ring_family_for_two_two() {
        for g in [5, 6, 9] {
            let q = theorem_22g(g).unwrap();
            assert_eq!(q.order(), g.div_ceil(2) * (3 * g / 2));
            assert!(q.check_regular(2, 2), "g = {}", g);
            assert!(q.check_totally_regular());
            assert_eq!(q.girth(), Some(g), "g = {}", g);
        }
        assert_eq!(theorem_22g(6).unwrap().order(), 27);
        assert_eq!(theorem_22g(5).unwrap().order(), 21);
        assert_eq!(theorem_22g(9).unwrap().order(), 65);
    }

    #[test]
    fn graph315_structure() {
        let g = graph315();
        assert_eq!(g.order(), 24);
        assert!(g.check_regular(3, 1));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.edges().len(), 36);
        assert_eq!(g.arcs().len(), 24);
    }

    #[test]
    fn graph316_structure() {
        let g = graph316();
        assert_eq!(g.order(), 30);
        assert!(g.check_regular(3, 1));
        assert_eq!(g.girth(), Some(6));
        assert_eq!(g.edges().len(), 45);
    }

    #[test]
    fn cage21_catalog_range() {
        for g in 5..=12 {
            let c = cage21(g).unwrap();
            assert_eq!(c.order(), f21(g as u64) as usize, "g = {}", g);
            assert!(c.check_regular(2, 1));
            assert_eq!(c.girth(), Some(g), "g = {}", g);
        }
        assert!(cage21(4).is_err());
        assert!(cage21(13).is_err());
    }

    #[test]
    fn cage21_steps_are_least_valid() {
        // Regenerate the stored step table: for each g, the least arc step
        // on Z_{f21(g)} with edge step 1 whose girth is exactly g.
        for &(g, stored) in CAGE21_STEPS.iter() {
            let m = f21(g as u64) as usize;
            let found = (1..m)
                .find(|&s| {
                    lift(&cage21_spec(m, s))
                        .ok()
                        .and_then(|gr| gr.girth())
                        == Some(g)
                })
                .expect("some step must work");
            assert_eq!(found, stored, "g = {}", g);
        }
    }
}
