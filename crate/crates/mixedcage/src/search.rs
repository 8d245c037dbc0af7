//! Exhaustive search for regular mixed graphs of given girth.
//!
//! Three engines, all enumerating totally regular (r,z,g)-graphs on n
//! vertices up to isomorphism:
//!
//! * [`search_directed_first`] (z = 1 only): fixes the arc structure to a
//!   disjoint union of directed cycles, one per cycle-length partition of n,
//!   and backtracks over the undirected edges.
//! * [`search_undirected_first`] (z = 1 only): starts from caller-supplied
//!   r-regular undirected scaffolds and backtracks over a fixed-point-free
//!   out-arc assignment.
//! * [`search_general`]: builds both relations at once under the degree
//!   bounds, vertex by vertex.
//!
//! All engines bound in-degree by z during the search; since the finished
//! graph has n*z arcs, every completion is automatically totally regular.
//! Results are deduplicated by canonical fingerprint at emission time and
//! reported sorted by fingerprint, so the outcome is independent of worker
//! count.

use crate::canon::canonical_form;
use crate::graph::MixedGraph;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// A partition of n into directed-cycle lengths, kept sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePartition {
    parts: Vec<usize>,
}

impl CyclePartition {
    /// Builds a partition from the given parts (any order).
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CyclePartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CyclePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Which cycle partitions a directed-first search walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionFilter {
    /// Every partition of n into parts of length at least g.
    All,
    /// Only partitions whose parts are all equal.
    EqualParts,
    /// Exactly one caller-chosen partition.
    Explicit(Vec<usize>),
}

/// Enumerates partitions of `n` into parts of size at least `min_part`,
/// in descending-lexicographic order ({n} first, all-minimal last).
pub fn enumerate_partitions(n: usize, min_part: usize, filter: &PartitionFilter) -> Vec<CyclePartition> {
    if let PartitionFilter::Explicit(parts) = filter {
        return vec![CyclePartition::new(parts.clone())];
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_parts(n, n, min_part, &mut prefix, &mut out);
    if matches!(filter, PartitionFilter::EqualParts) {
        out.retain(|p| p.parts.windows(2).all(|w| w[0] == w[1]));
    }
    out
}

fn gen_parts(remaining: usize, max_part: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<CyclePartition>) {
    let hi = remaining.min(max_part);
    if hi < min_part {
        return;
    }
    for p in (min_part..=hi).rev() {
        let rest = remaining - p;
        if rest != 0 && rest < min_part {
            continue;
        }
        prefix.push(p);
        if rest == 0 {
            out.push(CyclePartition { parts: prefix.clone() });
        } else {
            gen_parts(rest, p, min_part, prefix, out);
        }
        prefix.pop();
    }
}

/// Parameters shared by all three engines.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub r: usize,
    pub z: usize,
    pub g: usize,
    pub n: usize,
    /// Partition filter; only the directed-first engine consults it.
    pub partitions: PartitionFilter,
    /// Node budget per partition (per scaffold for undirected-first).
    pub budget: u64,
    /// Worker threads.
    pub jobs: usize,
    /// Stop after the first graph found (in deterministic shard order).
    pub stop_at_first: bool,
    /// Restrict the root-level first choice to symmetry-orbit representatives.
    pub prune_symmetry: bool,
}

impl SearchConfig {
    pub fn new(r: usize, z: usize, g: usize, n: usize) -> Self {
        SearchConfig {
            r,
            z,
            g,
            n,
            partitions: PartitionFilter::All,
            budget: 100_000_000,
            jobs: 1,
            stop_at_first: false,
            prune_symmetry: true,
        }
    }

    fn validate(&self, engine: &str) -> Result<(), SearchError> {
        let fail = |what: &str| {
            Err(SearchError::BadConfig {
                what: what.to_string(),
            })
        };
        if self.n == 0 || self.n > 128 {
            return fail("order must be between 1 and 128");
        }
        if self.g < 2 {
            return fail("girth target must be at least 2");
        }
        if self.r + self.z == 0 {
            return fail("r + z must be positive");
        }
        if self.r >= self.n || self.z >= self.n {
            return fail("degrees must be below the order");
        }
        if self.budget == 0 {
            return fail("node budget must be positive");
        }
        if self.jobs == 0 {
            return fail("worker count must be positive");
        }
        if (engine == "directed-first" || engine == "undirected-first") && self.z != 1 {
            return fail("this engine requires z = 1");
        }
        if let PartitionFilter::Explicit(parts) = &self.partitions {
            if parts.iter().sum::<usize>() != self.n {
                return fail("explicit partition must sum to the order");
            }
            if parts.iter().any(|&p| p < self.g) {
                return fail("explicit partition has a part below the girth");
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("bad search config: {what}")]
    BadConfig { what: String },
}

/// Backtracking counters for one partition (or scaffold).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes entered.
    pub nodes: u64,
    /// Candidates rejected because they would close a cycle shorter than g.
    pub girth_prunes: u64,
    /// Nodes abandoned by the degree-feasibility lookahead.
    pub degree_prunes: u64,
    /// Root-level choices skipped as non-representatives of a symmetry orbit.
    pub symmetry_prunes: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.girth_prunes += other.girth_prunes;
        self.degree_prunes += other.degree_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

/// Per-partition (or per-scaffold) outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub label: String,
    pub stats: SearchStats,
    /// False when the budget ran out or a stop-at-first cut this unit short.
    pub complete: bool,
}

/// One graph found by a search, with its canonical fingerprint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundGraph {
    pub graph: MixedGraph,
    pub fingerprint: Vec<u8>,
}

/// Outcome of a search run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Pairwise non-isomorphic graphs, sorted by fingerprint.
    pub found: Vec<FoundGraph>,
    pub reports: Vec<PartitionReport>,
    /// Scaffolds rejected by the undirected-first precondition, with reasons.
    pub skipped: Vec<(usize, String)>,
    /// True iff the enumeration provably covered the whole space.
    pub exhaustive: bool,
    /// True iff some unit stopped because its node budget ran out.
    pub budget_truncated: bool,
}

impl SearchResult {
    pub fn fingerprints(&self) -> Vec<Vec<u8>> {
        self.found.iter().map(|f| f.fingerprint.clone()).collect()
    }
}

// Internal mutable state: bitset adjacency over at most 128 vertices.
struct State {
    n: usize,
    g: usize,
    edge_adj: Vec<u128>,
    out_adj: Vec<u128>,
    in_adj: Vec<u128>,
    deg: Vec<usize>,
    odeg: Vec<usize>,
    ideg: Vec<usize>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl State {
    fn empty(n: usize, g: usize) -> State {
        State {
            n,
            g,
            edge_adj: vec![0; n],
            out_adj: vec![0; n],
            in_adj: vec![0; n],
            deg: vec![0; n],
            odeg: vec![0; n],
            ideg: vec![0; n],
            edges: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, w: usize) {
        self.edge_adj[u] |= 1 << w;
        self.edge_adj[w] |= 1 << u;
        self.deg[u] += 1;
        self.deg[w] += 1;
        self.edges.push((u.min(w), u.max(w)));
    }

    fn pop_edge(&mut self) {
        let (u, w) = self.edges.pop().unwrap();
        self.edge_adj[u] &= !(1 << w);
        self.edge_adj[w] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[w] -= 1;
    }

    fn add_arc(&mut self, u: usize, v: usize) {
        self.out_adj[u] |= 1 << v;
        self.in_adj[v] |= 1 << u;
        self.odeg[u] += 1;
        self.ideg[v] += 1;
        self.arcs.push((u, v));
    }

    fn pop_arc(&mut self) {
        let (u, v) = self.arcs.pop().unwrap();
        self.out_adj[u] &= !(1 << v);
        self.in_adj[v] &= !(1 << u);
        self.odeg[u] -= 1;
        self.ideg[v] -= 1;
    }

    // Vertices reachable from u by a mixed walk of at most `cap` steps
    // (edges both ways, arcs forward), u included.
    fn forward_ball(&self, u: usize, cap: usize) -> u128 {
        let mut visited = 1u128 << u;
        let mut frontier = visited;
        for _ in 0..cap {
            let mut next = 0u128;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.edge_adj[v] | self.out_adj[v];
            }
            next &= !visited;
            if next == 0 {
                break;
            }
            visited |= next;
            frontier = next;
        }
        visited
    }

    // Vertices that reach u by a mixed walk of at most `cap` steps.
    fn backward_ball(&self, u: usize, cap: usize) -> u128 {
        let mut visited = 1u128 << u;
        let mut frontier = visited;
        for _ in 0..cap {
            let mut next = 0u128;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.edge_adj[v] | self.in_adj[v];
            }
            next &= !visited;
            if next == 0 {
                break;
            }
            visited |= next;
            frontier = next;
        }
        visited
    }

    // Partners w for which edge {u,w} would close a mixed cycle shorter
    // than g.  The only new cycles pass through the edge, so w is excluded
    // exactly when some current mixed path between u and w (either
    // direction) has at most g - 2 steps.
    fn edge_exclusion_ball(&self, u: usize) -> u128 {
        let cap = self.g - 2;
        self.forward_ball(u, cap) | self.backward_ball(u, cap)
    }

    // Targets v for which arc (u,v) would close a mixed cycle shorter
    // than g: those with a path back to u in at most g - 2 steps.
    fn arc_exclusion_ball(&self, u: usize) -> u128 {
        self.backward_ball(u, self.g - 2)
    }

    /// Vertices with no incident element at all.  Any two of them can be
    /// swapped by an automorphism of the partial graph, which is what the
    /// least-isolated-candidate rule relies on.
    fn untouched(&self) -> u128 {
        let mut mask = 0u128;
        for v in 0..self.n {
            if self.deg[v] == 0 && self.odeg[v] == 0 && self.ideg[v] == 0 {
                mask |= 1 << v;
            }
        }
        mask
    }

    fn edge_deficient(&self, r: usize) -> u128 {
        let mut mask = 0u128;
        for v in 0..self.n {
            if self.deg[v] < r {
                mask |= 1 << v;
            }
        }
        mask
    }

    // Necessary conditions for the undirected part to still be completable
    // to r-regular: the deficits must have even sum, and every deficient
    // vertex needs at least as many deficient non-neighbours as its deficit.
    // Both hold in any extendable state (degrees only grow), so failing them
    // is a loss-free prune.
    fn edges_completable(&self, r: usize, deficient: u128) -> bool {
        let mut total = 0usize;
        let mut rest = deficient;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let need = r - self.deg[v];
            total += need;
            let partners = deficient & !self.edge_adj[v] & !(1u128 << v);
            if (partners.count_ones() as usize) < need {
                return false;
            }
        }
        total % 2 == 0
    }

    // Same idea on the arc side: every vertex still owing out-arcs needs
    // enough distinct targets with spare in-capacity.
    fn arcs_completable(&self, z: usize) -> bool {
        let mut in_spare = 0u128;
        for v in 0..self.n {
            if self.ideg[v] < z {
                in_spare |= 1 << v;
            }
        }
        for u in 0..self.n {
            let need = z - self.odeg[u];
            if need == 0 {
                continue;
            }
            let targets = in_spare & !self.out_adj[u] & !(1u128 << u);
            if (targets.count_ones() as usize) < need {
                return false;
            }
        }
        true
    }

    fn to_graph(&self) -> MixedGraph {
        MixedGraph::new(self.n, &self.edges, &self.arcs).expect("search state is a valid graph")
    }
}

// One unit of parallel work: a (partition, root choice) pair, a scaffold,
// or a root choice of the general engine.
enum ShardJob<'a> {
    Directed {
        group: usize,
        partition: &'a CyclePartition,
        root_w: Option<usize>,
        budget: u64,
    },
    Undirected {
        group: usize,
        scaffold: &'a MixedGraph,
        budget: u64,
    },
    General {
        root_w: Option<usize>,
        budget: u64,
    },
}

impl ShardJob<'_> {
    fn group(&self) -> usize {
        match self {
            ShardJob::Directed { group, .. } => *group,
            ShardJob::Undirected { group, .. } => *group,
            ShardJob::General { .. } => 0,
        }
    }
}

struct ShardOutcome {
    group: usize,
    found: Vec<(Vec<u8>, MixedGraph)>,
    stats: SearchStats,
    truncated: bool,
    stopped_first: bool,
}

// Claims shards off an atomic counter.  With stop-at-first, shards past the
// lowest-index find are skipped; everything at or below it always runs, so
// the merged result does not depend on the worker count.
fn run_shards<'a>(jobs: &[ShardJob<'a>], cfg: &SearchConfig) -> Vec<Option<ShardOutcome>> {
    let next = AtomicUsize::new(0);
    let first_find = AtomicUsize::new(usize::MAX);
    let slots: Vec<Mutex<Option<ShardOutcome>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let workers = cfg.jobs.min(jobs.len()).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= jobs.len() {
                    break;
                }
                if cfg.stop_at_first && i > first_find.load(Ordering::SeqCst) {
                    continue;
                }
                let outcome = run_one_shard(&jobs[i], cfg);
                if cfg.stop_at_first && !outcome.found.is_empty() {
                    first_find.fetch_min(i, Ordering::SeqCst);
                }
                *slots[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    let mut out: Vec<Option<ShardOutcome>> = slots.into_iter().map(|m| m.into_inner().unwrap()).collect();
    if cfg.stop_at_first {
        let cut = out
            .iter()
            .position(|o| o.as_ref().is_some_and(|o| !o.found.is_empty()))
            .unwrap_or(out.len());
        for slot in out.iter_mut().skip(cut + 1) {
            *slot = None;
        }
    }
    out
}

fn run_one_shard(job: &ShardJob<'_>, cfg: &SearchConfig) -> ShardOutcome {
    match job {
        ShardJob::Directed {
            group,
            partition,
            root_w,
            budget,
        } => run_directed_shard(*group, partition, *root_w, *budget, cfg),
        ShardJob::Undirected { group, scaffold, budget } => run_undirected_shard(*group, scaffold, *budget, cfg),
        ShardJob::General { root_w, budget } => run_general_shard(*root_w, *budget, cfg),
    }
}

// Shared bookkeeping for one shard's depth-first walk.
struct Dfs {
    stats: SearchStats,
    budget_left: u64,
    truncated: bool,
    stopped_first: bool,
    stop_at_first: bool,
    found: BTreeMap<Vec<u8>, MixedGraph>,
}

impl Dfs {
    fn new(budget: u64, stop_at_first: bool) -> Dfs {
        Dfs {
            stats: SearchStats::default(),
            budget_left: budget,
            truncated: false,
            stopped_first: false,
            stop_at_first,
            found: BTreeMap::new(),
        }
    }

    // Returns false when the whole shard should unwind.
    fn enter_node(&mut self) -> bool {
        if self.budget_left == 0 {
            self.truncated = true;
            return false;
        }
        self.budget_left -= 1;
        self.stats.nodes += 1;
        true
    }

    fn emit(&mut self, st: &State, r: usize, z: usize, g: usize) -> bool {
        let graph = st.to_graph();
        let girth = graph.girth();
        debug_assert!(girth.map_or(true, |gv| gv >= g), "incremental pruning kept girth below target");
        if girth != Some(g) {
            return true;
        }
        assert!(graph.check_regular(r, z), "emitted graph is not regular");
        assert!(graph.check_totally_regular(), "emitted graph is not totally regular");
        let form = canonical_form(&graph);
        self.found.entry(form.fingerprint().to_vec()).or_insert(graph);
        !self.stop_at_first || {
            self.stopped_first = true;
            false
        }
    }

    fn into_outcome(self, group: usize) -> ShardOutcome {
        ShardOutcome {
            group,
            found: self.found.into_iter().map(|(fp, g)| (fp, g)).collect(),
            stats: self.stats,
            truncated: self.truncated,
            stopped_first: self.stopped_first,
        }
    }
}

// ---------------------------------------------------------------------------
// Directed-first engine

fn scaffold_state(partition: &CyclePartition, n: usize, g: usize) -> State {
    let mut st = State::empty(n, g);
    let mut off = 0;
    for &len in partition.parts() {
        for t in 0..len {
            let u = off + t;
            let v = off + (t + 1) % len;
            st.add_arc(u, v);
        }
        off += len;
    }
    st
}

// Orbit representatives for the first edge partner of vertex 0 under the
// scaffold's automorphisms that fix vertex 0.  Those automorphisms fix the
// first cycle pointwise (a directed cycle's rotation group is regular and
// reversal is not an automorphism), rotate the other cycles freely, and
// permute other cycles of equal length, so: every vertex of the first cycle
// is its own orbit, and all vertices on other cycles of a given length form
// one orbit, represented by the first vertex of the first such cycle.
fn directed_root_candidates(partition: &CyclePartition, n: usize, prune: bool) -> Vec<usize> {
    if !prune {
        return (1..n).collect();
    }
    let parts = partition.parts();
    let mut reps: Vec<usize> = (1..parts[0]).collect();
    let mut off = parts[0];
    let mut seen_len: Vec<usize> = Vec::new();
    for &len in &parts[1..] {
        if !seen_len.contains(&len) {
            reps.push(off);
            seen_len.push(len);
        }
        off += len;
    }
    reps
}

/// Searches for (r,1,g)-graphs on n vertices whose arcs form the directed
/// cycles of each admitted partition, backtracking over the edges.
pub fn search_directed_first(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate("directed-first")?;
    let partitions = enumerate_partitions(cfg.n, cfg.g, &cfg.partitions);
    let mut jobs = Vec::new();
    let mut group_labels = Vec::new();
    let mut group_presets = Vec::new();
    for (gi, partition) in partitions.iter().enumerate() {
        group_labels.push(partition.to_string());
        let candidates = directed_root_candidates(partition, cfg.n, cfg.prune_symmetry && cfg.r > 0);
        let mut preset = SearchStats::default();
        if cfg.r > 0 {
            preset.symmetry_prunes = (cfg.n - 1 - candidates.len()) as u64;
            let budget = (cfg.budget / candidates.len() as u64).max(1);
            for &w in &candidates {
                jobs.push(ShardJob::Directed {
                    group: gi,
                    partition,
                    root_w: Some(w),
                    budget,
                });
            }
        } else {
            jobs.push(ShardJob::Directed {
                group: gi,
                partition,
                root_w: None,
                budget: cfg.budget,
            });
        }
        group_presets.push(preset);
    }
    let outcomes = run_shards(&jobs, cfg);
    Ok(merge_outcomes(&jobs, outcomes, &group_labels, &group_presets))
}

fn run_directed_shard(group: usize, partition: &CyclePartition, root_w: Option<usize>, budget: u64, cfg: &SearchConfig) -> ShardOutcome {
    let mut st = scaffold_state(partition, cfg.n, cfg.g);
    let mut dfs = Dfs::new(budget, cfg.stop_at_first);
    match root_w {
        None => {
            extend_edges(&mut st, &mut dfs, cfg.r, cfg.z, cfg.g, 0, 0);
        }
        Some(w) => {
            if dfs.enter_node() {
                if st.edge_exclusion_ball(0) & (1u128 << w) != 0 {
                    dfs.stats.girth_prunes += 1;
                } else {
                    st.add_edge(0, w);
                    extend_edges(&mut st, &mut dfs, cfg.r, cfg.z, cfg.g, 0, w);
                    st.pop_edge();
                }
            }
        }
    }
    dfs.into_outcome(group)
}

// Orderly edge completion: always extend the least-index deficient vertex,
// and while it stays the selected vertex take its partners in ascending
// order.  Degrees only grow, so the selected vertex is non-decreasing along
// a branch and every finished edge set is generated exactly once.
fn extend_edges(st: &mut State, dfs: &mut Dfs, r: usize, z: usize, g: usize, last_u: usize, last_w: usize) -> bool {
    if !dfs.enter_node() {
        return false;
    }
    let deficient = st.edge_deficient(r);
    if deficient == 0 {
        return dfs.emit(st, r, z, g);
    }
    if !st.edges_completable(r, deficient) {
        dfs.stats.degree_prunes += 1;
        return true;
    }
    let u = deficient.trailing_zeros() as usize;
    let floor = if u == last_u { last_w + 1 } else { u + 1 };
    if floor >= st.n {
        return true;
    }
    let base = deficient & !st.edge_adj[u] & !(((1u128 << floor) - 1) | (1 << u));
    if base == 0 {
        return true;
    }
    let excl = st.edge_exclusion_ball(u);
    dfs.stats.girth_prunes += (base & excl).count_ones() as u64;
    let mut cand = base & !excl;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        st.add_edge(u, w);
        let keep_going = extend_edges(st, dfs, r, z, g, u, w);
        st.pop_edge();
        if !keep_going {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Undirected-first engine

/// Searches for (r,1,g)-graphs by assigning a fixed-point-free out-arc
/// permutation on top of each scaffold.  A scaffold must be an arc-free
/// r-regular graph of order n with undirected girth at least g; others are
/// skipped and reported.
pub fn search_undirected_first(cfg: &SearchConfig, scaffolds: &[MixedGraph]) -> Result<SearchResult, SearchError> {
    cfg.validate("undirected-first")?;
    let mut jobs = Vec::new();
    let mut group_labels = Vec::new();
    let mut group_presets = Vec::new();
    let mut skipped = Vec::new();
    for (i, scaffold) in scaffolds.iter().enumerate() {
        if let Err(reason) = check_scaffold(scaffold, cfg) {
            skipped.push((i, reason));
            continue;
        }
        group_labels.push(format!("scaffold {i}"));
        group_presets.push(SearchStats::default());
        jobs.push(ShardJob::Undirected {
            group: group_labels.len() - 1,
            scaffold,
            budget: cfg.budget,
        });
    }
    let outcomes = run_shards(&jobs, cfg);
    let mut result = merge_outcomes(&jobs, outcomes, &group_labels, &group_presets);
    result.skipped = skipped;
    Ok(result)
}

fn check_scaffold(scaffold: &MixedGraph, cfg: &SearchConfig) -> Result<(), String> {
    if scaffold.order() != cfg.n {
        return Err(format!("order {} instead of {}", scaffold.order(), cfg.n));
    }
    if !scaffold.arcs().is_empty() {
        return Err("scaffold has arcs".to_string());
    }
    if !scaffold.check_regular(cfg.r, 0) {
        return Err(format!("not {}-regular", cfg.r));
    }
    if let Some(gv) = scaffold.girth() {
        if gv < cfg.g {
            return Err(format!("undirected girth {} below {}", gv, cfg.g));
        }
    }
    Ok(())
}

fn run_undirected_shard(group: usize, scaffold: &MixedGraph, budget: u64, cfg: &SearchConfig) -> ShardOutcome {
    let mut st = State::empty(cfg.n, cfg.g);
    for &(u, v) in scaffold.edges() {
        st.add_edge(u, v);
    }
    let mut dfs = Dfs::new(budget, cfg.stop_at_first);
    assign_arcs(&mut st, &mut dfs, cfg.r, cfg.g);
    dfs.into_outcome(group)
}

// Assigns each vertex's single out-arc; the in-degree cap of one makes the
// assignment a fixed-point-free permutation, and the distance prune keeps
// every mixed cycle (directed arc cycles included) at length g or more.
//
// The vertex to extend is the one with the fewest admissible targets (ties
// to the least index).  That choice is a deterministic function of the
// current state, so every completed assignment is still generated along
// exactly one branch, and dead ends surface as early as possible.
fn assign_arcs(st: &mut State, dfs: &mut Dfs, r: usize, g: usize) -> bool {
    if !dfs.enter_node() {
        return false;
    }
    let mut in_free = 0u128;
    for v in 0..st.n {
        if st.ideg[v] == 0 {
            in_free |= 1u128 << v;
        }
    }
    // (count, vertex, admissible targets, targets lost to the girth prune)
    let mut best: Option<(u32, usize, u128, u64)> = None;
    for u in 0..st.n {
        if st.odeg[u] != 0 {
            continue;
        }
        let ball = st.arc_exclusion_ball(u);
        let adm = in_free & !ball;
        let cnt = adm.count_ones();
        let lost = (in_free & ball & !(1u128 << u)).count_ones() as u64;
        if best.as_ref().map_or(true, |b| cnt < b.0) {
            let stop = cnt == 0;
            best = Some((cnt, u, adm, lost));
            if stop {
                break;
            }
        }
    }
    let Some((cnt, u, adm, lost)) = best else {
        return dfs.emit(st, r, 1, g);
    };
    dfs.stats.girth_prunes += lost;
    if cnt == 0 {
        dfs.stats.degree_prunes += 1;
        return true;
    }
    let mut cand = adm;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        st.add_arc(u, v);
        let keep_going = assign_arcs(st, dfs, r, g);
        st.pop_arc();
        if !keep_going {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// General engine

/// Searches for totally regular (r,z,g)-graphs on n vertices, adding edges
/// and arcs together: each vertex in index order is brought to undirected
/// degree r and then to out-degree z before moving on.
pub fn search_general(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate("general")?;
    let root_candidates: Vec<usize> = if cfg.prune_symmetry {
        // The empty state has the full symmetric group, so the first
        // element from vertex 0 may go to vertex 1.
        vec![1]
    } else {
        (1..cfg.n).collect()
    };
    let budget = (cfg.budget / root_candidates.len() as u64).max(1);
    let jobs: Vec<ShardJob<'_>> = root_candidates
        .iter()
        .map(|&w| ShardJob::General { root_w: Some(w), budget })
        .collect();
    let mut preset = SearchStats::default();
    preset.symmetry_prunes = (cfg.n - 1 - root_candidates.len()) as u64;
    let outcomes = run_shards(&jobs, cfg);
    Ok(merge_outcomes(&jobs, outcomes, &["all".to_string()], &[preset]))
}

fn run_general_shard(root_w: Option<usize>, budget: u64, cfg: &SearchConfig) -> ShardOutcome {
    let mut st = State::empty(cfg.n, cfg.g);
    let mut dfs = Dfs::new(budget, cfg.stop_at_first);
    match root_w {
        Some(w) if cfg.r > 0 => {
            if dfs.enter_node() {
                if st.edge_exclusion_ball(0) & (1u128 << w) != 0 {
                    dfs.stats.girth_prunes += 1;
                } else {
                    st.add_edge(0, w);
                    extend_general(&mut st, &mut dfs, cfg, 0, true, w + 1);
                    st.pop_edge();
                }
            }
        }
        Some(w) => {
            if dfs.enter_node() {
                if st.arc_exclusion_ball(0) & (1u128 << w) != 0 {
                    dfs.stats.girth_prunes += 1;
                } else {
                    st.add_arc(0, w);
                    extend_general(&mut st, &mut dfs, cfg, 0, false, w + 1);
                    st.pop_arc();
                }
            }
        }
        None => {
            extend_general(&mut st, &mut dfs, cfg, 0, true, 0);
        }
    }
    dfs.into_outcome(0)
}

// `cursor` is the vertex being completed, `edge_phase` whether it still owes
// edges, `floor` the least partner/target admissible while the phase lasts.
// Vertices before the cursor are full in both relations, so edge partners
// beyond the cursor and ascending per-phase choices make each finished graph
// appear exactly once.
fn extend_general(st: &mut State, dfs: &mut Dfs, cfg: &SearchConfig, cursor: usize, edge_phase: bool, floor: usize) -> bool {
    if !dfs.enter_node() {
        return false;
    }
    let (r, z, g) = (cfg.r, cfg.z, cfg.g);
    let mut cursor = cursor;
    let mut edge_phase = edge_phase;
    let mut floor = floor;
    loop {
        if cursor == st.n {
            return dfs.emit(st, r, z, g);
        }
        if edge_phase && st.deg[cursor] == r {
            edge_phase = false;
            floor = 0;
            continue;
        }
        if !edge_phase && st.odeg[cursor] == z {
            cursor += 1;
            edge_phase = true;
            floor = cursor + 1;
            continue;
        }
        break;
    }
    if edge_phase {
        let deficient = st.edge_deficient(r);
        if !st.edges_completable(r, deficient) {
            dfs.stats.degree_prunes += 1;
            return true;
        }
        if floor >= st.n {
            return true;
        }
        let base = deficient & !st.edge_adj[cursor] & !((1u128 << floor) - 1);
        if base == 0 {
            return true;
        }
        let excl = st.edge_exclusion_ball(cursor);
        dfs.stats.girth_prunes += (base & excl).count_ones() as u64;
        let mut cand = base & !excl;
        if cfg.prune_symmetry {
            cand = keep_least_untouched(st, dfs, cand);
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            st.add_edge(cursor, w);
            let keep_going = extend_general(st, dfs, cfg, cursor, true, w + 1);
            st.pop_edge();
            if !keep_going {
                return false;
            }
        }
    } else {
        if !st.arcs_completable(z) {
            dfs.stats.degree_prunes += 1;
            return true;
        }
        if floor >= st.n {
            return true;
        }
        let mut in_free = 0u128;
        for v in 0..st.n {
            if st.ideg[v] < z {
                in_free |= 1u128 << v;
            }
        }
        let base = in_free
            & !st.out_adj[cursor]
            & !(((1u128 << floor) - 1) | (1u128 << cursor));
        if base == 0 {
            return true;
        }
        let excl = st.arc_exclusion_ball(cursor);
        dfs.stats.girth_prunes += (base & excl).count_ones() as u64;
        let mut cand = base & !excl;
        if cfg.prune_symmetry {
            cand = keep_least_untouched(st, dfs, cand);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            st.add_arc(cursor, v);
            let keep_going = extend_general(st, dfs, cfg, cursor, false, v + 1);
            st.pop_arc();
            if !keep_going {
                return false;
            }
        }
    }
    true
}

// Untouched vertices are pairwise interchangeable by an automorphism of the
// partial graph, so among untouched candidates only the least index needs to
// be tried.  The lexicographically least generation path of each isomorphism
// class never picks a later untouched vertex over an earlier one, so every
// class still shows up.
fn keep_least_untouched(st: &State, dfs: &mut Dfs, cand: u128) -> u128 {
    let fresh = cand & st.untouched();
    if fresh == 0 {
        return cand;
    }
    let keep = fresh & fresh.wrapping_neg();
    dfs.stats.symmetry_prunes += (fresh ^ keep).count_ones() as u64;
    (cand & !fresh) | keep
}

// ---------------------------------------------------------------------------
// Merging

fn merge_outcomes(jobs: &[ShardJob<'_>], outcomes: Vec<Option<ShardOutcome>>, labels: &[String], presets: &[SearchStats]) -> SearchResult {
    let mut group_stats: Vec<Option<SearchStats>> = vec![None; labels.len()];
    let mut group_incomplete = vec![false; labels.len()];
    let mut group_shards_seen = vec![0usize; labels.len()];
    let mut group_shards_total = vec![0usize; labels.len()];
    for job in jobs {
        group_shards_total[job.group()] += 1;
    }
    let mut dedup: BTreeMap<Vec<u8>, MixedGraph> = BTreeMap::new();
    let mut budget_truncated = false;
    let mut stopped_first = false;
    for outcome in outcomes.into_iter().flatten() {
        let slot = group_stats[outcome.group].get_or_insert_with(|| presets[outcome.group]);
        slot.absorb(&outcome.stats);
        group_shards_seen[outcome.group] += 1;
        if outcome.truncated {
            budget_truncated = true;
            group_incomplete[outcome.group] = true;
        }
        if outcome.stopped_first {
            stopped_first = true;
            group_incomplete[outcome.group] = true;
        }
        for (fp, graph) in outcome.found {
            dedup.entry(fp).or_insert(graph);
        }
    }
    let reports = labels
        .iter()
        .enumerate()
        .filter_map(|(gi, label)| {
            let stats = group_stats[gi]?;
            Some(PartitionReport {
                label: label.clone(),
                stats,
                complete: !group_incomplete[gi] && group_shards_seen[gi] == group_shards_total[gi],
            })
        })
        .collect();
    let found: Vec<FoundGraph> = dedup
        .into_iter()
        .map(|(fingerprint, graph)| FoundGraph { graph, fingerprint })
        .collect();
    let exhaustive = !budget_truncated && !stopped_first;
    SearchResult {
        found,
        reports,
        skipped: Vec::new(),
        exhaustive,
        budget_truncated,
    }
}

// ---------------------------------------------------------------------------
// Naive scaffold generation (cross-validation aid)

/// Enumerates all r-regular arc-free graphs on n vertices with undirected
/// girth at least `min_girth`, up to isomorphism.  Plain backtracking with
/// only the provably safe prunes; intended for feeding the undirected-first
/// engine in tests, not for large orders.
pub fn generate_scaffolds_naive(n: usize, r: usize, min_girth: usize) -> Vec<MixedGraph> {
    assert!(n >= 1 && n <= 128 && min_girth >= 2, "bad scaffold parameters");
    let mut st = State::empty(n, min_girth);
    let mut dedup = BTreeMap::new();
    scaffold_rec(&mut st, r, &mut dedup);
    dedup.into_values().collect()
}

fn scaffold_rec(st: &mut State, r: usize, dedup: &mut BTreeMap<Vec<u8>, MixedGraph>) {
    let deficient = st.edge_deficient(r);
    if deficient == 0 {
        let graph = st.to_graph();
        let fp = canonical_form(&graph).fingerprint().to_vec();
        dedup.entry(fp).or_insert(graph);
        return;
    }
    if !st.edges_completable(r, deficient) {
        return;
    }
    let u = deficient.trailing_zeros() as usize;
    let last = st.edges.last().copied();
    let floor = match last {
        Some((a, b)) if a == u => b + 1,
        _ => u + 1,
    };
    if floor >= st.n {
        return;
    }
    let mut cand = deficient
        & !st.edge_adj[u]
        & !st.edge_exclusion_ball(u)
        & !((1u128 << floor) - 1);
    // Isolated vertices are interchangeable, so among isolated candidates
    // only the least index needs to be tried; the duplicates-by-relabeling
    // removed here would all collapse in the dedup map anyway.
    let fresh_cand = cand & st.untouched();
    if fresh_cand != 0 {
        cand = (cand & !st.untouched()) | (fresh_cand & fresh_cand.wrapping_neg());
    }
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        st.add_edge(u, w);
        scaffold_rec(st, r, dedup);
        st.pop_edge();
    }
}
