//! Graph isomorphism for the small graphs this crate produces.
//!
//! The fast path compares decomposition signatures, which are canonical for
//! the join-of-cliques shape; everything the group families generate is
//! covered by it. The fallback is a plain backtracking search over
//! degree-partitioned vertices, guarded by a vertex bound.

use crate::decomposition::decomposition_signature;
use crate::error::Error;
use crate::graph::HierarchyGraph;

/// Vertex bound for the backtracking fallback; a guardrail, not a limit of
/// correctness.
pub const DEFAULT_BACKTRACK_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// When isomorphic: vertex `i` of the first graph maps to
    /// `witness[i]` in the second.
    pub witness: Option<Vec<usize>>,
}

impl IsoResult {
    fn no() -> IsoResult {
        IsoResult {
            isomorphic: false,
            witness: None,
        }
    }
}

/// Decides isomorphism with the default backtracking bound.
pub fn graphs_isomorphic(g1: &HierarchyGraph, g2: &HierarchyGraph) -> Result<IsoResult, Error> {
    graphs_isomorphic_bounded(g1, g2, DEFAULT_BACKTRACK_BOUND)
}

pub fn graphs_isomorphic_bounded(
    g1: &HierarchyGraph,
    g2: &HierarchyGraph,
    bound: usize,
) -> Result<IsoResult, Error> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(IsoResult::no());
    }
    if let (Some(s1), Some(s2)) = (decomposition_signature(g1), decomposition_signature(g2)) {
        if s1 != s2 {
            return Ok(IsoResult::no());
        }
        let witness = signature_witness(g1, g2);
        debug_assert!(verify_witness(g1, g2, &witness));
        return Ok(IsoResult {
            isomorphic: true,
            witness: Some(witness),
        });
    }
    if g1.vertex_count() > bound {
        return Err(Error::TooLarge(g1.vertex_count(), bound));
    }
    match backtracking_isomorphism(g1, g2) {
        Some(witness) => Ok(IsoResult {
            isomorphic: true,
            witness: Some(witness),
        }),
        None => Ok(IsoResult::no()),
    }
}

/// Assembles a witness between two graphs with equal recognized signatures:
/// universal vertices in index order, cliques matched by size.
fn signature_witness(g1: &HierarchyGraph, g2: &HierarchyGraph) -> Vec<usize> {
    let parts1 = partition(g1);
    let parts2 = partition(g2);
    let n = g1.vertex_count();
    let mut witness = vec![usize::MAX; n];
    for (a, b) in parts1.universal.iter().zip(&parts2.universal) {
        witness[*a] = *b;
    }
    // both clique lists are sorted by (size, first index), so same-size
    // cliques pair up positionally
    for (c1, c2) in parts1.cliques.iter().zip(&parts2.cliques) {
        debug_assert_eq!(c1.len(), c2.len());
        for (a, b) in c1.iter().zip(c2) {
            witness[*a] = *b;
        }
    }
    witness
}

struct Partition {
    universal: Vec<usize>,
    cliques: Vec<Vec<usize>>,
}

fn partition(g: &HierarchyGraph) -> Partition {
    let n = g.vertex_count();
    let universal = crate::graph::universal_vertices(g);
    let mut is_universal = vec![false; n];
    for &u in &universal {
        is_universal[u] = true;
    }
    let mut seen = vec![false; n];
    let mut cliques = Vec::new();
    for start in 0..n {
        if is_universal[start] || seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut cursor = 0;
        while cursor < members.len() {
            let v = members[cursor];
            cursor += 1;
            for w in 0..n {
                if !is_universal[w] && !seen[w] && g.adjacent(v, w) {
                    seen[w] = true;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        cliques.push(members);
    }
    cliques.sort_by_key(|c| (c.len(), c[0]));
    Partition { universal, cliques }
}

pub fn verify_witness(g1: &HierarchyGraph, g2: &HierarchyGraph, witness: &[usize]) -> bool {
    let n = g1.vertex_count();
    if witness.len() != n || n != g2.vertex_count() {
        return false;
    }
    let mut used = vec![false; n];
    for &w in witness {
        if w >= n || used[w] {
            return false;
        }
        used[w] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if g1.adjacent(i, j) != g2.adjacent(witness[i], witness[j]) {
                return false;
            }
        }
    }
    true
}

/// Backtracking isomorphism over degree-partitioned vertices. Intended for
/// small graphs; callers enforce the bound.
pub fn backtracking_isomorphism(g1: &HierarchyGraph, g2: &HierarchyGraph) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() {
        return None;
    }
    let deg1: Vec<usize> = (0..n).map(|i| g1.degree(i)).collect();
    let deg2: Vec<usize> = (0..n).map(|i| g2.degree(i)).collect();
    let mut m1 = deg1.clone();
    let mut m2 = deg2.clone();
    m1.sort_unstable();
    m2.sort_unstable();
    if m1 != m2 {
        return None;
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(g1, g2, &deg1, &deg2, &mut mapping, &mut used, 0) {
        Some(mapping)
    } else {
        None
    }
}

fn assign(
    g1: &HierarchyGraph,
    g2: &HierarchyGraph,
    deg1: &[usize],
    deg2: &[usize],
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    let n = deg1.len();
    if v == n {
        return true;
    }
    'candidates: for cand in 0..n {
        if used[cand] || deg2[cand] != deg1[v] {
            continue;
        }
        for (prev, &mapped) in mapping.iter().enumerate().take(v) {
            if g1.adjacent(prev, v) != g2.adjacent(mapped, cand) {
                continue 'candidates;
            }
        }
        mapping[v] = cand;
        used[cand] = true;
        if assign(g1, g2, deg1, deg2, mapping, used, v + 1) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[cand] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{join_of_cliques, DecompositionSignature};
    use crate::family::{build_family, FamilySpec};
    use crate::graph::{build_graph, GraphKind};

    fn graph(spec: &str, kind: GraphKind) -> HierarchyGraph {
        let v = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
        build_graph(&v, kind).unwrap()
    }

    #[test]
    fn pow_q16_isomorphic_to_com_d16() {
        let pow = graph("genq:3", GraphKind::Pow);
        let com = graph("dihedral:8", GraphKind::Com);
        let result = graphs_isomorphic(&pow, &com).unwrap();
        assert!(result.isomorphic);
        assert!(verify_witness(&pow, &com, &result.witness.unwrap()));
    }

    #[test]
    fn triangle_is_not_a_path() {
        let sig = DecompositionSignature::new(3, vec![]);
        let triangle = join_of_cliques(&sig, GraphKind::Com);
        let path = HierarchyGraph::from_pairs(
            GraphKind::Com,
            vec!["a".into(), "b".into(), "c".into()],
            |i, j| Ok(j == i + 1),
        )
        .unwrap();
        let result = graphs_isomorphic(&triangle, &path).unwrap();
        assert!(!result.isomorphic);
    }

    #[test]
    fn clique_multisets_compare_as_sets() {
        let a = join_of_cliques(&DecompositionSignature::new(2, vec![4, 2]), GraphKind::Com);
        let b = join_of_cliques(&DecompositionSignature::new(2, vec![2, 4]), GraphKind::Com);
        let result = graphs_isomorphic(&a, &b).unwrap();
        assert!(result.isomorphic);
        assert!(verify_witness(&a, &b, &result.witness.unwrap()));
    }

    #[test]
    fn backtracking_agrees_with_signatures_on_small_recognized_graphs() {
        let sigs = [
            DecompositionSignature::new(1, vec![3, 2]),
            DecompositionSignature::new(2, vec![2, 2]),
            DecompositionSignature::new(0, vec![3, 3]),
            DecompositionSignature::new(1, vec![4, 1]),
        ];
        for s1 in &sigs {
            for s2 in &sigs {
                let a = join_of_cliques(s1, GraphKind::Com);
                let b = join_of_cliques(s2, GraphKind::Com);
                if a.vertex_count() != b.vertex_count() {
                    continue;
                }
                let back = backtracking_isomorphism(&a, &b).is_some();
                assert_eq!(back, s1 == s2, "{s1} vs {s2}");
            }
        }
    }

    #[test]
    fn unrecognized_large_graphs_error_out() {
        // a 17-vertex cycle is not a join of cliques and exceeds the bound
        let n = 17;
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let cycle = HierarchyGraph::from_pairs(GraphKind::Com, labels, |i, j| {
            Ok(j == i + 1 || (i == 0 && j == n - 1))
        })
        .unwrap();
        assert!(matches!(
            graphs_isomorphic(&cycle, &cycle.clone()),
            Err(Error::TooLarge(17, 16))
        ));
    }
}
