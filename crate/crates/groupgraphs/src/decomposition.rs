//! Recognition of the join-of-cliques shape `(⋃ K_a) ∇ K_u`.
//!
//! The signature of such a graph is the pair (number of universal vertices,
//! multiset of clique sizes after removing them); it is canonical for the
//! shape, so signature equality decides isomorphism between recognized
//! graphs.

use std::fmt;

use serde::Serialize;

use crate::graph::{universal_vertices, GraphKind, HierarchyGraph};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DecompositionSignature {
    /// Number of universal vertices.
    pub universal: usize,
    /// Clique sizes of the remaining components, sorted descending.
    /// Isolated vertices are cliques of size 1.
    pub cliques: Vec<usize>,
}

impl fmt::Display for DecompositionSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cliques.iter().map(|c| c.to_string()).collect();
        write!(f, "({}, {{{}}})", self.universal, parts.join(","))
    }
}

impl DecompositionSignature {
    pub fn new(universal: usize, mut cliques: Vec<usize>) -> DecompositionSignature {
        cliques.sort_unstable_by(|a, b| b.cmp(a));
        DecompositionSignature { universal, cliques }
    }

    pub fn vertex_count(&self) -> usize {
        self.universal + self.cliques.iter().sum::<usize>()
    }
}

/// Recognizes the join-of-cliques shape: removes the universal vertices and
/// requires every remaining connected component to be a clique. Returns
/// `None` when the graph does not have the shape.
pub fn decomposition_signature(g: &HierarchyGraph) -> Option<DecompositionSignature> {
    let n = g.vertex_count();
    let universal = universal_vertices(g);
    let mut is_universal = vec![false; n];
    for &u in &universal {
        is_universal[u] = true;
    }
    let mut component = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if is_universal[start] || component[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut members = vec![start];
        component[start] = id;
        let mut cursor = 0;
        while cursor < members.len() {
            let v = members[cursor];
            cursor += 1;
            for w in 0..n {
                if !is_universal[w] && component[w] == usize::MAX && g.adjacent(v, w) {
                    component[w] = id;
                    members.push(w);
                }
            }
        }
        // the component must be a clique
        for (a, &v) in members.iter().enumerate() {
            for &w in &members[a + 1..] {
                if !g.adjacent(v, w) {
                    return None;
                }
            }
        }
        sizes.push(members.len());
    }
    Some(DecompositionSignature::new(universal.len(), sizes))
}

/// Builds the canonical representative of a signature: cliques laid out in
/// the signature's order, then the universal block joined to everything.
pub fn join_of_cliques(sig: &DecompositionSignature, kind: GraphKind) -> HierarchyGraph {
    let n = sig.vertex_count();
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut block = Vec::with_capacity(n);
    for (c, &size) in sig.cliques.iter().enumerate() {
        block.extend(std::iter::repeat_n(c, size));
    }
    // universal vertices get a block id past every clique
    block.extend(std::iter::repeat_n(usize::MAX, sig.universal));
    HierarchyGraph::from_pairs(kind, labels, |i, j| {
        Ok(block[i] == usize::MAX || block[j] == usize::MAX || block[i] == block[j])
    })
    .expect("predicate is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::build_graph;

    fn graph(spec: &str, kind: GraphKind) -> HierarchyGraph {
        let v = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
        build_graph(&v, kind).unwrap()
    }

    #[test]
    fn complete_graph_is_all_universal() {
        let g = graph("cyclic:5", GraphKind::EPow);
        let sig = decomposition_signature(&g).unwrap();
        assert_eq!(sig, DecompositionSignature::new(5, vec![]));
    }

    #[test]
    fn pow_of_q16_decomposes() {
        let g = graph("genq:3", GraphKind::Pow);
        let sig = decomposition_signature(&g).unwrap();
        assert_eq!(sig, DecompositionSignature::new(2, vec![6, 2, 2, 2, 2]));
        assert_eq!(sig.to_string(), "(2, {6,2,2,2,2})");
    }

    #[test]
    fn com_of_dicyclic_3_decomposes() {
        let g = graph("dicyclic:3", GraphKind::Com);
        let sig = decomposition_signature(&g).unwrap();
        assert_eq!(sig, DecompositionSignature::new(2, vec![4, 2, 2, 2]));
    }

    #[test]
    fn pow_of_dicyclic_3_is_not_recognized() {
        // the rotation component contains non-adjacent prime-order pairs
        let g = graph("dicyclic:3", GraphKind::Pow);
        assert!(decomposition_signature(&g).is_none());
    }

    #[test]
    fn reconstruction_matches_signature() {
        let sig = DecompositionSignature::new(2, vec![3, 2, 1]);
        let g = join_of_cliques(&sig, GraphKind::Com);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(decomposition_signature(&g), Some(sig));
    }

    #[test]
    fn multiset_order_does_not_matter() {
        assert_eq!(
            DecompositionSignature::new(2, vec![4, 2]),
            DecompositionSignature::new(2, vec![2, 4])
        );
    }

    /// Signature soundness: for every recognized corpus graph with at most
    /// 14 vertices, the canonical reconstruction is isomorphic to the
    /// original under the backtracking checker.
    #[test]
    fn recognized_graphs_match_their_reconstruction() {
        let mut specs: Vec<String> = (1..=14).map(|n| format!("cyclic:{n}")).collect();
        specs.extend((1..=7).map(|m| format!("dihedral:{m}")));
        specs.extend([
            "dicyclic:3".into(),
            "genq:2".into(),
            "lq:2".into(),
            "ld:2".into(),
            "prufer:3".into(),
            "prod(cyclic:2,cyclic:7)".into(),
        ]);
        let mut checked = 0;
        for s in &specs {
            let view = build_family(&FamilySpec::parse(s).unwrap()).unwrap();
            if view.len() > 14 {
                continue;
            }
            for kind in crate::graph::GraphKind::ALL {
                let g = build_graph(&view, kind).unwrap();
                if let Some(sig) = decomposition_signature(&g) {
                    let rebuilt = join_of_cliques(&sig, kind);
                    assert!(
                        crate::iso::backtracking_isomorphism(&g, &rebuilt).is_some(),
                        "{s} {kind}: reconstruction not isomorphic"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 30, "corpus too small: {checked}");
    }
}
