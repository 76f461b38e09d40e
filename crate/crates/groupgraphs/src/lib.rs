//! Graphs defined on groups: power graph, enhanced power graph, commuting graph.
//!
//! The three graphs share a vertex set (a group `G`); distinct `x, y` are
//! adjacent when
//!
//! * **Pow**: one is a power of the other,
//! * **EPow**: `<x, y>` is cyclic,
//! * **Com**: `xy = yx`,
//!
//! which gives the edge-set chain `E(Pow) ⊆ E(EPow) ⊆ E(Com)`. This crate
//! builds those graphs, with exact arithmetic, over finite groups (cyclic,
//! dihedral, dicyclic, generalised quaternion, direct products) and over
//! finite truncations and windows of four infinite groups: the locally
//! quaternion group, the locally dihedral group, the infinite dihedral group
//! and the infinite quaternion group. On top of the graph layer it provides
//! machine checks for the equality characterizations between the three
//! graphs, clique-join structure recognition, and cross-group graph
//! isomorphisms with explicit verified bijections.
//!
//! ```
//! use groupgraphs::{build_family, build_graph, FamilySpec, GraphKind};
//!
//! let q16 = build_family(&FamilySpec::parse("genq:3").unwrap()).unwrap();
//! let pow = build_graph(&q16, GraphKind::Pow).unwrap();
//! let sig = groupgraphs::decomposition_signature(&pow).unwrap();
//! // two universal vertices over a disjoint union of cliques: K6 and four K2
//! assert_eq!(sig.universal, 2);
//! assert_eq!(sig.cliques, vec![6, 2, 2, 2, 2]);
//! ```

pub mod angle;
pub mod decomposition;
mod error;
pub mod family;
pub mod graph;
pub mod group_element;
pub mod iso;
pub mod suite;
pub mod theorems;
pub mod toral;
pub mod view;

pub use angle::{DyadicAngle, RationalAngle};
pub use decomposition::{decomposition_signature, join_of_cliques, DecompositionSignature};
pub use error::Error;
pub use family::{build_family, FamilySpec};
pub use graph::{
    adj_com, adj_epow, adj_pow, build_graph, edge_set_equal, edge_subset, induced_subgraph,
    universal_vertices, GraphKind, HierarchyGraph,
};
pub use group_element::{GroupElement, Order};
pub use iso::{graphs_isomorphic, IsoResult};
pub use theorems::{
    check_thm1, check_thm2, check_thm3, corollary_checks, find_cpp, find_cpq, qinf_strictness,
    restriction_consistency, theorem4_witness, theorem5_witness, ChainFamily, ObstructionWitness,
    TheoremVerdict,
};
pub use toral::{cyclic_two_gen_abelian, ToralParam};
pub use view::FiniteGroupView;
