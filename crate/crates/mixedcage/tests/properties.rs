//! Randomized structural invariants over arbitrary small mixed graphs —
//! irregular, disconnected, and degenerate shapes included, which the
//! catalog-driven tests never produce.

use proptest::prelude::*;

use mixedcage::canon::canonical_form;
use mixedcage::graph::MixedGraph;
use mixedcage::io::{emit_graph6, emit_mgf, parse_graph6, parse_mgf};

/// An arbitrary mixed graph on 1..=9 vertices: every unordered pair may
/// carry an edge, every ordered pair an arc.
fn arb_mixed_graph() -> impl Strategy<Value = MixedGraph> {
    (1usize..=9)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            let ordered = n * n.saturating_sub(1);
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(any::<bool>(), ordered),
            )
        })
        .prop_map(|(n, edge_bits, arc_bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if edge_bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        if arc_bits[k] {
                            arcs.push((u, v));
                        }
                        k += 1;
                    }
                }
            }
            MixedGraph::new(n, &edges, &arcs).expect("generated elements are valid")
        })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    /// The MGF text format is lossless.
    #[test]
    fn mgf_round_trips(g in arb_mixed_graph()) {
        let back = parse_mgf(&emit_mgf(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    /// graph6 is lossless on whatever has no arcs.
    #[test]
    fn graph6_round_trips_arc_free_graphs(g in arb_mixed_graph()) {
        if g.arcs().is_empty() {
            let line = emit_graph6(&g).unwrap();
            let back = parse_graph6(&line).unwrap();
            prop_assert_eq!(back, g);
        } else {
            prop_assert!(emit_graph6(&g).is_err());
        }
    }

    /// Relabeling never changes the fingerprint, and the relabeling
    /// reported by canonicalization maps any isomorphic copy onto the
    /// same graph.
    #[test]
    fn fingerprint_is_isomorphism_invariant(
        (g, perm) in arb_mixed_graph().prop_flat_map(|g| {
            let n = g.order();
            (Just(g), arb_permutation(n))
        })
    ) {
        let h = g.permute(&perm);
        let fg = canonical_form(&g);
        let fh = canonical_form(&h);
        prop_assert_eq!(fg.fingerprint(), fh.fingerprint());
        prop_assert_eq!(g.permute(fg.relabeling()), h.permute(fh.relabeling()));
    }

    /// The incremental girth equals the cycle-enumerating oracle.
    #[test]
    fn girth_matches_brute_force(g in arb_mixed_graph()) {
        match g.brute_force_girth(9) {
            Some(want) => prop_assert_eq!(g.girth(), Some(want)),
            None => match g.girth() {
                None => {}
                Some(got) => prop_assert!(got > 9),
            },
        }
    }

    /// Degree accounting: profile triples sum element endpoints exactly.
    #[test]
    fn degree_profile_counts_every_element_twice(g in arb_mixed_graph()) {
        let triples = g.degree_profile().triples;
        let deg: usize = triples.iter().map(|t| t.0).sum();
        let odeg: usize = triples.iter().map(|t| t.1).sum();
        let ideg: usize = triples.iter().map(|t| t.2).sum();
        prop_assert_eq!(deg, 2 * g.edges().len());
        prop_assert_eq!(odeg, g.arcs().len());
        prop_assert_eq!(ideg, g.arcs().len());
    }
}
