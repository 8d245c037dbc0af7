//! Catalog of record mixed graphs: parametric families, individual record
//! holders, and cyclic lifts, each with its documented (r, z, g, order).

mod families;
mod hamilton;
pub mod lift;

use std::fmt;

pub use families::{
    bcw, cage21, circulant225_spec, cyclic_lex_k2, graph226_spec, graph315, graph316,
    lift317_spec, lift318_spec, lift415_spec, lift416_spec, lift516_spec, oriented_mobius,
    theorem_22g, theorem_2zg_even, theorem_2zg_square,
};
pub use hamilton::{find_hamiltonian_cycle, hoffman_singleton, orient_cycle, VertexCycle};
pub use lift::{lift, ElementKind, LiftError, LiftLink, LiftNode, LiftSpec};

use crate::graph::MixedGraph;

/// Node budget for the Hamiltonian-cycle search inside `hs-oriented`.
pub const DEFAULT_HAMILTONIAN_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    BadParameters { what: String },
    Lift(LiftError),
    /// The backtracking search gave up; `nodes` tells how much was explored.
    NoHamiltonianCycle { nodes: u64 },
    BadCycle { what: String },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::BadParameters { what } => write!(f, "{}", what),
            BuildError::Lift(e) => write!(f, "lift failed: {}", e),
            BuildError::NoHamiltonianCycle { nodes } => {
                write!(f, "no Hamiltonian cycle found within budget ({} nodes explored)", nodes)
            }
            BuildError::BadCycle { what } => write!(f, "not a Hamiltonian cycle: {}", what),
        }
    }
}

impl std::error::Error for BuildError {}

impl From<LiftError> for BuildError {
    fn from(e: LiftError) -> BuildError {
        BuildError::Lift(e)
    }
}

/// Expected verification outcome of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub r: usize,
    pub z: usize,
    pub g: usize,
    pub order: usize,
}

/// Identifier of one catalog graph. Parametric variants carry their
/// parameters; each id maps to exactly one builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    /// `bcw r g`: the Behzad–Chartrand–Wall digraph, (0, r, g), order r(g−1)+1.
    Bcw { r: usize, g: usize },
    /// `mobius g`: oriented Möbius ladder, (1, 1, g), order 2g−2.
    Mobius { g: usize },
    /// `lexk2 g`: doubled directed cycle, (1, 2, g), order 2g.
    LexK2 { g: usize },
    /// `cage21 g`: circulant (2, 1, g)-cage, order ⌈g²/2⌉, 5 ≤ g ≤ 12.
    Cage21 { g: usize },
    /// `square z g`: (2, z, g) of order g².
    Square { z: usize, g: usize },
    /// `even z g`: (2, z, g) of order g²−g, even g.
    Even { z: usize, g: usize },
    /// `t22g g`: (2, 2, g) of order ⌈g/2⌉·⌊3g/2⌋.
    T22g { g: usize },
    /// (3, 1, 5), order 24.
    Graph315,
    /// (3, 1, 6), order 30.
    Graph316,
    /// (2, 2, 5), order 19.
    Circulant225,
    /// (2, 2, 6), order 27, totally regular.
    Graph226,
    /// (3, 1, 7), order 60.
    Lift317,
    /// (3, 1, 8), order 76.
    Lift318,
    /// (4, 1, 5), order 34.
    Lift415,
    /// (4, 1, 6), order 48.
    Lift416,
    /// (5, 1, 6), order 72.
    Lift516,
    /// `hs`: the Hoffman–Singleton graph, (7, 0, 5), order 50.
    HoffmanSingleton,
    /// `hs-oriented`: Hoffman–Singleton with a Hamiltonian cycle oriented,
    /// (5, 1, 5), order 50.
    HsOriented,
}

impl ConstructionId {
    /// Parses a CLI id: a name plus its integer parameters.
    pub fn from_cli(name: &str, params: &[usize]) -> Result<ConstructionId, BuildError> {
        use ConstructionId::*;
        let arity = |want: usize| -> Result<(), BuildError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(BuildError::BadParameters {
                    what: format!("{} takes {} parameter(s), got {}", name, want, params.len()),
                })
            }
        };
        let id = match name {
            "bcw" => {
                arity(2)?;
                Bcw { r: params[0], g: params[1] }
            }
            "mobius" => {
                arity(1)?;
                Mobius { g: params[0] }
            }
            "lexk2" => {
                arity(1)?;
                LexK2 { g: params[0] }
            }
            "cage21" => {
                arity(1)?;
                Cage21 { g: params[0] }
            }
            "square" => {
                arity(2)?;
                Square { z: params[0], g: params[1] }
            }
            "even" => {
                arity(2)?;
                Even { z: params[0], g: params[1] }
            }
            "t22g" => {
                arity(1)?;
                T22g { g: params[0] }
            }
            "graph315" => {
                arity(0)?;
                Graph315
            }
            "graph316" => {
                arity(0)?;
                Graph316
            }
            "circulant225" => {
                arity(0)?;
                Circulant225
            }
            "graph226" => {
                arity(0)?;
                Graph226
            }
            "lift317" => {
                arity(0)?;
                Lift317
            }
            "lift318" => {
                arity(0)?;
                Lift318
            }
            "lift415" => {
                arity(0)?;
                Lift415
            }
            "lift416" => {
                arity(0)?;
                Lift416
            }
            "lift516" => {
                arity(0)?;
                Lift516
            }
            "hs" => {
                arity(0)?;
                HoffmanSingleton
            }
            "hs-oriented" => {
                arity(0)?;
                HsOriented
            }
            _ => {
                return Err(BuildError::BadParameters {
                    what: format!("unknown construction '{}'", name),
                })
            }
        };
        Ok(id)
    }

    /// Documented (r, z, g, order) this entry must verify to.
    pub fn expected(&self) -> Expected {
        use ConstructionId::*;
        let e = |r, z, g, order| Expected { r, z, g, order };
        match *self {
            Bcw { r, g } => e(0, r, g, r * (g - 1) + 1),
            Mobius { g } => e(1, 1, g, 2 * g - 2),
            LexK2 { g } => e(1, 2, g, 2 * g),
            Cage21 { g } => e(2, 1, g, (g * g + 1) / 2),
            Square { z, g } => e(2, z, g, g * g),
            Even { z, g } => e(2, z, g, g * g - g),
            T22g { g } => e(2, 2, g, g.div_ceil(2) * (3 * g / 2)),
            Graph315 => e(3, 1, 5, 24),
            Graph316 => e(3, 1, 6, 30),
            Circulant225 => e(2, 2, 5, 19),
            Graph226 => e(2, 2, 6, 27),
            Lift317 => e(3, 1, 7, 60),
            Lift318 => e(3, 1, 8, 76),
            Lift415 => e(4, 1, 5, 34),
            Lift416 => e(4, 1, 6, 48),
            Lift516 => e(5, 1, 6, 72),
            HoffmanSingleton => e(7, 0, 5, 50),
            HsOriented => e(5, 1, 5, 50),
        }
    }

    pub fn build(&self) -> Result<MixedGraph, BuildError> {
        use ConstructionId::*;
        match *self {
            Bcw { r, g } => bcw(r, g),
            Mobius { g } => oriented_mobius(g),
            LexK2 { g } => cyclic_lex_k2(g),
            Cage21 { g } => cage21(g),
            Square { z, g } => theorem_2zg_square(z, g),
            Even { z, g } => theorem_2zg_even(z, g),
            T22g { g } => theorem_22g(g),
            Graph315 => Ok(graph315()),
            Graph316 => Ok(graph316()),
            Circulant225 => Ok(lift(&circulant225_spec())?),
            Graph226 => Ok(lift(&graph226_spec())?),
            Lift317 => Ok(lift(&lift317_spec())?),
            Lift318 => Ok(lift(&lift318_spec())?),
            Lift415 => Ok(lift(&lift415_spec())?),
            Lift416 => Ok(lift(&lift416_spec())?),
            Lift516 => Ok(lift(&lift516_spec())?),
            HoffmanSingleton => Ok(hoffman_singleton()),
            HsOriented => {
                let hs = hoffman_singleton();
                let cycle = find_hamiltonian_cycle(&hs, DEFAULT_HAMILTONIAN_BUDGET)?;
                orient_cycle(&hs, &cycle)
            }
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionId::*;
        match *self {
            Bcw { r, g } => write!(f, "bcw {} {}", r, g),
            Mobius { g } => write!(f, "mobius {}", g),
            LexK2 { g } => write!(f, "lexk2 {}", g),
            Cage21 { g } => write!(f, "cage21 {}", g),
            Square { z, g } => write!(f, "square {} {}", z, g),
            Even { z, g } => write!(f, "even {} {}", z, g),
            T22g { g } => write!(f, "t22g {}", g),
            Graph315 => write!(f, "graph315"),
            Graph316 => write!(f, "graph316"),
            Circulant225 => write!(f, "circulant225"),
            Graph226 => write!(f, "graph226"),
            Lift317 => write!(f, "lift317"),
            Lift318 => write!(f, "lift318"),
            Lift415 => write!(f, "lift415"),
            Lift416 => write!(f, "lift416"),
            Lift516 => write!(f, "lift516"),
            HoffmanSingleton => write!(f, "hs"),
            HsOriented => write!(f, "hs-oriented"),
        }
    }
}

/// The stored lift descriptions, by catalog name.
pub fn builtin_lift_spec(name: &str) -> Result<LiftSpec, BuildError> {
    match name {
        "lift317" => Ok(lift317_spec()),
        "lift318" => Ok(lift318_spec()),
        "lift415" => Ok(lift415_spec()),
        "lift416" => Ok(lift416_spec()),
        "lift516" => Ok(lift516_spec()),
        "circulant225" => Ok(circulant225_spec()),
        "graph226" => Ok(graph226_spec()),
        _ => Err(BuildError::BadParameters {
            what: format!("no stored lift named '{}'", name),
        }),
    }
}

/// Every record graph with a documented (r, z, g, order), over the
/// parameter ranges the published bounds cover. The basis of the catalog
/// verification and fingerprint-invariance tests.
pub fn catalog() -> Vec<ConstructionId> {
    use ConstructionId::*;
    let mut ids = vec![
        Bcw { r: 3, g: 5 },
        Mobius { g: 5 },
        LexK2 { g: 7 },
        Cage21 { g: 5 },
        Cage21 { g: 6 },
    ];
    for g in [5, 6, 7, 8] {
        for z in 1..=g {
            ids.push(Square { z, g });
        }
        if g % 2 == 0 {
            for z in 1..=g / 2 {
                ids.push(Even { z, g });
            }
        }
        ids.push(T22g { g });
    }
    ids.extend([
        Circulant225,
        Graph226,
        Graph315,
        Graph316,
        Lift317,
        Lift318,
        Lift415,
        Lift416,
        Lift516,
        HsOriented,
    ]);
    ids
}
