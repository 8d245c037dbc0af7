//! Canonical forms for mixed graphs.
//!
//! Two graphs receive the same fingerprint exactly when they are isomorphic
//! (as mixed graphs: an isomorphism maps edges to edges and arcs to arcs,
//! preserving arc direction). The algorithm is iterated color refinement on
//! degree triples with individualization on the first non-singleton cell,
//! taking the lexicographically least adjacency encoding over all leaves of
//! the resulting search tree.
//!
//! Leaves whose encodings collide reveal automorphisms; candidates lying in
//! one orbit of the discovered automorphisms that fix the current
//! individualization prefix generate identical leaf-encoding sets, so only
//! the first per orbit is descended into. The pruning changes neither the
//! minimum encoding nor which graphs share it — it only skips subtrees that
//! are images of already-explored ones.

use crate::graph::MixedGraph;

/// Result of canonicalization: an isomorphism-invariant fingerprint and one
/// relabeling that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    fingerprint: Vec<u8>,
    relabeling: Vec<usize>,
}

impl CanonicalForm {
    /// Byte string equal across isomorphic graphs and distinct otherwise:
    /// the order followed by the canonically relabeled adjacency bitmaps.
    pub fn fingerprint(&self) -> &[u8] {
        &self.fingerprint
    }

    /// Permutation with `relabeling[v]` = canonical position of vertex `v`.
    /// Applying it with [`MixedGraph::permute`] yields the canonical graph.
    pub fn relabeling(&self) -> &[usize] {
        &self.relabeling
    }

    pub fn fingerprint_hex(&self) -> String {
        self.fingerprint.iter().map(|b| format!("{:02x}", b)).collect()
    }
}

impl MixedGraph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }
}

pub fn canonical_form(g: &MixedGraph) -> CanonicalForm {
    let n = g.order();
    if g.edges().is_empty() && g.arcs().is_empty() {
        // Every labeling of an element-free graph encodes identically, and
        // the individualization search below would walk all n! of them.
        let identity: Vec<usize> = (0..n).collect();
        return CanonicalForm {
            fingerprint: encode(g, &identity),
            relabeling: identity,
        };
    }
    if n == 0 {
        return CanonicalForm {
            fingerprint: encode(g, &[]),
            relabeling: Vec::new(),
        };
    }
    let mut colors = vec![0usize; n];
    refine(g, &mut colors);
    let mut ctx = Ctx {
        g,
        best: None,
        first: None,
        gens: Vec::new(),
    };
    explore(&mut ctx, colors, &mut Vec::new());
    let (fingerprint, relabeling) = ctx.best.expect("at least one leaf");
    CanonicalForm {
        fingerprint,
        relabeling,
    }
}

/// Splits color classes by the multisets of neighbor colors along each of
/// the three relations until the partition stops changing. Cell numbering
/// follows the sort order of the splitting keys, so the refined coloring is
/// itself isomorphism-invariant.
fn refine(g: &MixedGraph, colors: &mut [usize]) {
    let n = g.order();
    let mut count = colors.iter().max().map_or(0, |m| m + 1);
    loop {
        let mut keys: Vec<(usize, Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut e: Vec<usize> = g.edge_neighbors(v).iter().map(|&w| colors[w]).collect();
            let mut o: Vec<usize> = g.out_neighbors(v).iter().map(|&w| colors[w]).collect();
            let mut i: Vec<usize> = g.in_neighbors(v).iter().map(|&w| colors[w]).collect();
            e.sort_unstable();
            o.sort_unstable();
            i.sort_unstable();
            keys.push((colors[v], e, o, i));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut next = 0;
        for (rank, &v) in order.iter().enumerate() {
            if rank > 0 && keys[order[rank - 1]] != keys[v] {
                next += 1;
            }
            colors[v] = next;
        }
        let new_count = next + 1;
        if new_count == count || new_count == n {
            return;
        }
        count = new_count;
    }
}

/// Shared state of one canonicalization: the running minimum, the first
/// leaf (collision partner for automorphism discovery), and the discovered
/// automorphism generators.
struct Ctx<'a> {
    g: &'a MixedGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
}

/// Generators kept for pruning; more only cost orbit-closure time without
/// adding reachable orbits in practice.
const MAX_GENS: usize = 256;

impl Ctx<'_> {
    /// Records the automorphism mapping the leaf stored as (encoding,
    /// colors) onto the current leaf with the same encoding: both label the
    /// graph onto the identical adjacency matrix, so position-wise
    /// composition maps the graph onto itself.
    fn harvest(&mut self, stored_colors: &[usize], lab: &[usize]) {
        if self.gens.len() >= MAX_GENS {
            return;
        }
        let gamma: Vec<usize> = stored_colors.iter().map(|&c| lab[c]).collect();
        if gamma.iter().enumerate().all(|(v, &w)| v == w) || self.gens.contains(&gamma) {
            return;
        }
        debug_assert!(is_automorphism(self.g, &gamma));
        self.gens.push(gamma);
    }

    /// True when `v` lies in the orbit of an already-descended sibling under
    /// the subgroup of discovered automorphisms fixing `path` pointwise.
    fn in_processed_orbit(&self, path: &[usize], processed: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.gens {
            if path.iter().any(|&u| gamma[u] != u) {
                continue;
            }
            for w in 0..n {
                let (a, b) = (find(&mut parent, w), find(&mut parent, gamma[w]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        processed.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

fn explore(ctx: &mut Ctx, colors: Vec<usize>, path: &mut Vec<usize>) {
    let n = ctx.g.order();
    // Find the first cell with more than one vertex.
    let mut cell_of: Option<usize> = None;
    let mut seen = vec![0usize; n];
    for &c in colors.iter() {
        seen[c] += 1;
    }
    for (c, &sz) in seen.iter().enumerate() {
        if sz > 1 {
            cell_of = Some(c);
            break;
        }
    }
    match cell_of {
        None => {
            // Discrete: colors are exactly the canonical positions.
            let mut lab = vec![0usize; n];
            for (v, &c) in colors.iter().enumerate() {
                lab[c] = v;
            }
            let enc = encode_labeled(ctx.g, &lab);
            match &ctx.first {
                None => ctx.first = Some((enc.clone(), colors.clone())),
                Some((fe, fc)) if *fe == enc => {
                    let fc = fc.clone();
                    ctx.harvest(&fc, &lab);
                }
                _ => {}
            }
            match &ctx.best {
                Some((be, bc)) if *be == enc => {
                    let bc = bc.clone();
                    ctx.harvest(&bc, &lab);
                }
                Some((be, _)) if *be < enc => {}
                _ => ctx.best = Some((enc, colors)),
            }
        }
        Some(cell) => {
            let mut processed: Vec<usize> = Vec::new();
            for v in 0..n {
                if colors[v] != cell {
                    continue;
                }
                if !processed.is_empty() && ctx.in_processed_orbit(path, &processed, v) {
                    continue;
                }
                processed.push(v);
                // Split v off as its own cell, ahead of the rest of the cell.
                let mut child: Vec<usize> = colors
                    .iter()
                    .enumerate()
                    .map(|(u, &c)| 2 * c + usize::from(c == cell && u != v))
                    .collect();
                refine(ctx.g, &mut child);
                path.push(v);
                explore(ctx, child, path);
                path.pop();
            }
        }
    }
}

#[cfg(debug_assertions)]
fn is_automorphism(g: &MixedGraph, gamma: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        (0..n).all(|v| {
            u == v
                || (g.has_edge(u, v) == g.has_edge(gamma[u], gamma[v])
                    && g.has_arc(u, v) == g.has_arc(gamma[u], gamma[v]))
        })
    })
}

#[cfg(not(debug_assertions))]
fn is_automorphism(_g: &MixedGraph, _gamma: &[usize]) -> bool {
    true
}

/// Adjacency encoding of `g` relabeled so that position `i` holds vertex
/// `lab[i]`: order, then the upper-triangle edge bitmap, then the full
/// off-diagonal arc bitmap, each padded to whole bytes.
fn encode_labeled(g: &MixedGraph, lab: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut bits = BitWriter::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            bits.push(g.has_edge(lab[i], lab[j]));
        }
    }
    bits.pad();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                bits.push(g.has_arc(lab[i], lab[j]));
            }
        }
    }
    bits.pad();
    bits.bytes
}

fn encode(g: &MixedGraph, lab: &[usize]) -> Vec<u8> {
    encode_labeled(g, lab)
}

struct BitWriter {
    bytes: Vec<u8>,
    fill: u8,
}

impl BitWriter {
    fn new(n: usize) -> BitWriter {
        let n = u32::try_from(n).expect("order fits in 32 bits");
        BitWriter {
            bytes: n.to_be_bytes().to_vec(),
            fill: 0,
        }
    }

    fn push(&mut self, bit: bool) {
        if self.fill == 0 {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.last_mut().unwrap();
            *last |= 0x80 >> self.fill;
        }
        self.fill = (self.fill + 1) % 8;
    }

    fn pad(&mut self) {
        self.fill = 0;
    }
}
