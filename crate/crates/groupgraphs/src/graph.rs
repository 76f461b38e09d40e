//! The three hierarchy graphs and their adjacency predicates.
//!
//! For distinct `x, y`: `Com` joins commuting pairs, `Pow` joins pairs where
//! one is a power of the other, `EPow` joins pairs generating a cyclic
//! subgroup. Each predicate has a family closed form (used by the graph
//! builder, valid on windows too) and a generic counterpart computed purely
//! from the view's multiplication (closed views only); the two routes are
//! checked against each other by the test suites.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::group_element::{GroupElement, Order};
use crate::toral::cyclic_two_gen_abelian;
use crate::view::FiniteGroupView;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Pow,
    EPow,
    Com,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Pow, GraphKind::EPow, GraphKind::Com];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Pow => "pow",
            GraphKind::EPow => "epow",
            GraphKind::Com => "com",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphKind, Error> {
        match s {
            "pow" => Ok(GraphKind::Pow),
            "epow" => Ok(GraphKind::EPow),
            "com" => Ok(GraphKind::Com),
            other => Err(Error::BadParam(format!("unknown graph kind `{other}`"))),
        }
    }
}

/// A finite simple graph over deterministic vertex labels; the adjacency
/// matrix is symmetric with a false diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct HierarchyGraph {
    kind: GraphKind,
    labels: Vec<String>,
    adj: Vec<bool>,
}

impl HierarchyGraph {
    pub(crate) fn from_pairs<F>(
        kind: GraphKind,
        labels: Vec<String>,
        mut pred: F,
    ) -> Result<HierarchyGraph, Error>
    where
        F: FnMut(usize, usize) -> Result<bool, Error>,
    {
        let n = labels.len();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if pred(i, j)? {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
            }
        }
        Ok(HierarchyGraph { kind, labels, adj })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.labels.len() + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        let n = self.labels.len();
        (0..n).filter(|&j| self.adj[i * n + j]).count()
    }

    /// Edges as index pairs `i < j`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.labels.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adj[i * n + j] {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Toggles one edge; test hook for negative controls.
    #[doc(hidden)]
    pub fn toggle_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j);
        let n = self.labels.len();
        self.adj[i * n + j] = !self.adj[i * n + j];
        self.adj[j * n + i] = !self.adj[j * n + i];
    }
}

impl fmt::Debug for HierarchyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({} vertices, {} edges)",
            self.kind,
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Do `x` and `y` commute?
pub fn adj_com(x: &GroupElement, y: &GroupElement) -> Result<bool, Error> {
    Ok(x.mul(y)? == y.mul(x)?)
}

/// Is `x` a power of `y`, i.e. `x ∈ <y>`?
fn in_cyclic(x: &GroupElement, y: &GroupElement) -> Result<bool, Error> {
    match y.order() {
        Order::Finite(m) => {
            let mut acc = y.clone();
            for _ in 0..m {
                if acc == *x {
                    return Ok(true);
                }
                acc = acc.mul(y)?;
            }
            // probe the product once so cross-family queries error out
            let _ = x.mul(y)?;
            Ok(false)
        }
        Order::Infinite => match (y, x) {
            (
                GroupElement::InfiniteDihedral {
                    shift: n,
                    flip: false,
                },
                GroupElement::InfiniteDihedral {
                    shift: m,
                    flip: false,
                },
            ) => Ok(*n != 0 && m % n == 0),
            (GroupElement::InfiniteDihedral { .. }, GroupElement::InfiniteDihedral { .. }) => {
                Ok(false)
            }
            (
                GroupElement::InfiniteQuaternion {
                    param: p,
                    jpart: false,
                },
                GroupElement::InfiniteQuaternion {
                    param: q,
                    jpart: false,
                },
            ) => {
                // solve k·p = q exactly on the free part, then verify all of it
                let i = p
                    .free()
                    .iter()
                    .position(|&v| v != 0)
                    .expect("infinite order implies a nonzero free part");
                if q.free()[i] % p.free()[i] != 0 {
                    return Ok(false);
                }
                let k = q.free()[i] / p.free()[i];
                Ok(p.times(k) == *q)
            }
            (GroupElement::InfiniteQuaternion { .. }, GroupElement::InfiniteQuaternion { .. }) => {
                Ok(false)
            }
            _ => Err(Error::FamilyMismatch(x.family_name(), y.family_name())),
        },
    }
}

/// Is one of `x`, `y` a power of the other?
pub fn adj_pow(x: &GroupElement, y: &GroupElement) -> Result<bool, Error> {
    Ok(in_cyclic(x, y)? || in_cyclic(y, x)?)
}

/// Do `x` and `y` generate a cyclic subgroup?
///
/// Non-commuting pairs never do. For commuting pairs the family dispatch is:
/// locally cyclic rotation groups are always cyclic; a dihedral-type flip is
/// compatible only with the identity; in the quaternionic families every
/// commuting pair involving a j-part element lies in one cyclic order-4
/// subgroup; infinite-quaternion rotation pairs reduce to the two-generator
/// decision in ℚ/ℤ ⊕ ℤᵏ; products fall back to closure saturation.
pub fn adj_epow(x: &GroupElement, y: &GroupElement) -> Result<bool, Error> {
    if !adj_com(x, y)? {
        return Ok(false);
    }
    use GroupElement::*;
    match (x, y) {
        (Cyclic { .. }, Cyclic { .. }) => Ok(true),

        (Dihedral { .. }, Dihedral { .. })
        | (LocallyDihedral { .. }, LocallyDihedral { .. })
        | (InfiniteDihedral { .. }, InfiniteDihedral { .. }) => {
            match (x.is_flipped(), y.is_flipped()) {
                (false, false) => Ok(true),
                // two commuting reflections span a Klein four-group
                (true, true) => Ok(false),
                (true, false) => Ok(y.is_identity()),
                (false, true) => Ok(x.is_identity()),
            }
        }

        (Dicyclic { .. }, Dicyclic { .. })
        | (LocallyQuaternion { .. }, LocallyQuaternion { .. }) => {
            // commuting pairs with a j part sit inside <j-element>, a C4
            Ok(true)
        }

        (
            InfiniteQuaternion {
                param: p,
                jpart: false,
            },
            InfiniteQuaternion {
                param: q,
                jpart: false,
            },
        ) => cyclic_two_gen_abelian(p, q),
        (InfiniteQuaternion { .. }, InfiniteQuaternion { .. }) => Ok(true),

        (Product(..), Product(..)) => {
            if !x.order().is_finite() || !y.order().is_finite() {
                return Err(Error::BadParam(
                    "cyclicity of infinite-order product pairs is not supported".into(),
                ));
            }
            let closure = element_closure(x, y)?;
            let size = closure.len() as u64;
            Ok(closure.iter().any(|e| e.order() == Order::Finite(size)))
        }

        _ => Err(Error::FamilyMismatch(x.family_name(), y.family_name())),
    }
}

/// Closure of `{x, y}` by worklist saturation in element space.
fn element_closure(x: &GroupElement, y: &GroupElement) -> Result<HashSet<GroupElement>, Error> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let identity = x.mul(&x.inv())?;
    let mut members: Vec<GroupElement> = vec![identity.clone()];
    seen.insert(identity);
    let mut queue = vec![x.clone(), y.clone()];
    while let Some(e) = queue.pop() {
        if seen.contains(&e) {
            continue;
        }
        seen.insert(e.clone());
        members.push(e.clone());
        for m in &members {
            for p in [e.mul(m)?, m.mul(&e)?] {
                if !seen.contains(&p) {
                    queue.push(p);
                }
            }
        }
    }
    Ok(seen)
}

/// Generic power adjacency: power enumeration through the view's
/// multiplication table. Closed views only.
pub fn adj_pow_generic(view: &FiniteGroupView, i: usize, j: usize) -> Result<bool, Error> {
    let powers = |gen: usize| -> Result<Vec<bool>, Error> {
        let mut seen = vec![false; view.len()];
        let mut acc = gen;
        loop {
            seen[acc] = true;
            if acc == view.identity_index() {
                return Ok(seen);
            }
            acc = view.mul_index(acc, gen)?;
        }
    };
    Ok(powers(i)?[j] || powers(j)?[i])
}

/// Generic enhanced-power adjacency: closure saturation plus the cyclicity
/// census. Closed views only.
pub fn adj_epow_generic(view: &FiniteGroupView, i: usize, j: usize) -> Result<bool, Error> {
    let closure = view.subgroup_closure(&[i, j])?;
    view.is_cyclic_subgroup(&closure)
}

/// Generic commuting adjacency through the multiplication table.
pub fn adj_com_generic(view: &FiniteGroupView, i: usize, j: usize) -> Result<bool, Error> {
    Ok(view.mul_index(i, j)? == view.mul_index(j, i)?)
}

/// Builds the graph of the given kind over all elements of the view.
pub fn build_graph(view: &FiniteGroupView, kind: GraphKind) -> Result<HierarchyGraph, Error> {
    let labels = view.labels().to_vec();
    match kind {
        GraphKind::Com => HierarchyGraph::from_pairs(kind, labels, |i, j| {
            adj_com(view.element(i), view.element(j))
        }),
        GraphKind::EPow => HierarchyGraph::from_pairs(kind, labels, |i, j| {
            adj_epow(view.element(i), view.element(j))
        }),
        GraphKind::Pow => {
            // precompute <x> for finite-order x; infinite generators use the
            // closed forms in `in_cyclic`
            let sets: Vec<Option<HashSet<GroupElement>>> = view
                .elements()
                .iter()
                .map(|e| match e.order() {
                    Order::Finite(m) => {
                        let mut set = HashSet::with_capacity(m as usize);
                        let mut acc = e.clone();
                        for _ in 0..m {
                            set.insert(acc.clone());
                            acc = acc.mul(e).expect("same family");
                        }
                        Some(set)
                    }
                    Order::Infinite => None,
                })
                .collect();
            HierarchyGraph::from_pairs(kind, labels, |i, j| {
                let member = |a: usize, b: usize| -> Result<bool, Error> {
                    // is element b a power of element a?
                    match &sets[a] {
                        Some(set) => Ok(set.contains(view.element(b))),
                        None => in_cyclic(view.element(b), view.element(a)),
                    }
                };
                Ok(member(i, j)? || member(j, i)?)
            })
        }
    }
}

/// Edge-set equality of two graphs over the same labelled vertex list.
pub fn edge_set_equal(g1: &HierarchyGraph, g2: &HierarchyGraph) -> Result<bool, Error> {
    if g1.labels != g2.labels {
        return Err(Error::LabelMismatch);
    }
    Ok(g1.adj == g2.adj)
}

/// Is every edge of `g1` an edge of `g2`?
pub fn edge_subset(g1: &HierarchyGraph, g2: &HierarchyGraph) -> Result<bool, Error> {
    if g1.labels != g2.labels {
        return Err(Error::LabelMismatch);
    }
    Ok(g1.adj.iter().zip(&g2.adj).all(|(&a, &b)| !a || b))
}

/// First edge of `sup` missing from `sub`, in index order.
pub fn edge_difference_witness(
    sup: &HierarchyGraph,
    sub: &HierarchyGraph,
) -> Result<Option<(usize, usize)>, Error> {
    if sup.labels != sub.labels {
        return Err(Error::LabelMismatch);
    }
    for (i, j) in sup.edges() {
        if !sub.adjacent(i, j) {
            return Ok(Some((i, j)));
        }
    }
    Ok(None)
}

/// All vertices adjacent to every other vertex.
pub fn universal_vertices(g: &HierarchyGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&i| g.degree(i) == n - 1).collect()
}

/// Restriction of the graph to a label subset; vertex order inherited from
/// `g`.
pub fn induced_subgraph(g: &HierarchyGraph, labels: &[String]) -> Result<HierarchyGraph, Error> {
    let mut keep = vec![false; g.vertex_count()];
    for label in labels {
        let idx = g
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        keep[idx] = true;
    }
    let indices: Vec<usize> = (0..g.vertex_count()).filter(|&i| keep[i]).collect();
    let labels: Vec<String> = indices.iter().map(|&i| g.labels[i].clone()).collect();
    let n = indices.len();
    let mut adj = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            adj[a * n + b] = g.adjacent(indices[a], indices[b]);
        }
    }
    Ok(HierarchyGraph {
        kind: g.kind,
        labels,
        adj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::RationalAngle;
    use crate::family::{build_family, default_qinf_window, FamilySpec};
    use crate::toral::ToralParam;

    fn view(spec: &str) -> FiniteGroupView {
        build_family(&FamilySpec::parse(spec).unwrap()).unwrap()
    }

    fn dinf(shift: i64, flip: bool) -> GroupElement {
        GroupElement::InfiniteDihedral { shift, flip }
    }

    fn qrot(param: ToralParam) -> GroupElement {
        GroupElement::InfiniteQuaternion {
            param,
            jpart: false,
        }
    }

    fn qj(param: ToralParam) -> GroupElement {
        GroupElement::InfiniteQuaternion { param, jpart: true }
    }

    #[test]
    fn translations_power_adjacency_is_divisibility() {
        assert!(adj_pow(&dinf(6, false), &dinf(2, false)).unwrap());
        // the x², x³ pattern: neither is a power of the other
        assert!(!adj_pow(&dinf(2, false), &dinf(3, false)).unwrap());
        assert!(adj_epow(&dinf(2, false), &dinf(3, false)).unwrap());
    }

    #[test]
    fn no_translation_commutes_with_a_reflection() {
        assert!(!adj_com(&dinf(2, false), &dinf(3, true)).unwrap());
        assert!(adj_com(&dinf(0, false), &dinf(3, true)).unwrap());
    }

    #[test]
    fn reflection_generates_only_itself() {
        assert!(adj_pow(&dinf(0, false), &dinf(5, true)).unwrap());
        assert!(!adj_pow(&dinf(5, true), &dinf(3, true)).unwrap());
        assert!(!adj_epow(&dinf(5, true), &dinf(3, false)).unwrap());
    }

    #[test]
    fn qinf_j_elements_commute_with_their_inverse_coset_mate() {
        let a = ToralParam::new(RationalAngle::new(1, 3), vec![1, 0]);
        let minus_a = a.mul(&ToralParam::minus_one(2)).unwrap();
        assert!(adj_com(&qj(a.clone()), &qj(minus_a.clone())).unwrap());
        assert!(adj_epow(&qj(a.clone()), &qj(minus_a.clone())).unwrap());
        assert!(adj_pow(&qj(a.clone()), &qj(minus_a)).unwrap());
        let b = ToralParam::new(RationalAngle::new(1, 5), vec![1, 0]);
        assert!(!adj_com(&qj(a), &qj(b)).unwrap());
    }

    #[test]
    fn qinf_rotation_powers_solve_exactly() {
        let g = ToralParam::new(RationalAngle::new(1, 4), vec![1, 0]);
        assert!(adj_pow(&qrot(g.times(2)), &qrot(g.clone())).unwrap());
        assert!(adj_pow(&qrot(g.clone()), &qrot(g.inv())).unwrap());
        let h = ToralParam::new(RationalAngle::ZERO, vec![0, 1]);
        assert!(!adj_pow(&qrot(g.clone()), &qrot(h.clone())).unwrap());
        // free rank 2: commuting but not cyclic
        assert!(adj_com(&qrot(g.clone()), &qrot(h.clone())).unwrap());
        assert!(!adj_epow(&qrot(g), &qrot(h)).unwrap());
    }

    #[test]
    fn epow_of_cyclic_group_is_complete() {
        let c6 = view("cyclic:6");
        let g = build_graph(&c6, GraphKind::EPow).unwrap();
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn pow_of_c6_misses_the_two_prime_order_pairs() {
        // brute-force oracle: enumerate powers by repeated multiplication
        let c6 = view("cyclic:6");
        let g = build_graph(&c6, GraphKind::Pow).unwrap();
        for i in 0..6 {
            for j in (i + 1)..6 {
                assert_eq!(
                    g.adjacent(i, j),
                    adj_pow_generic(&c6, i, j).unwrap(),
                    "pair ({i},{j})"
                );
            }
        }
        assert_eq!(g.edge_count(), 13);
    }

    #[test]
    fn pow_subset_of_epow_subset_of_com() {
        // includes 256-element truncations and windows
        for spec in [
            "cyclic:12",
            "dihedral:6",
            "dicyclic:3",
            "genq:3",
            "ld:3",
            "lq:7",
            "ld:7",
            "prod(cyclic:2,cyclic:3)",
            "dinf:0..7",
            "dinf:0..127",
        ] {
            let v = view(spec);
            let pow = build_graph(&v, GraphKind::Pow).unwrap();
            let epow = build_graph(&v, GraphKind::EPow).unwrap();
            let com = build_graph(&v, GraphKind::Com).unwrap();
            assert!(edge_subset(&pow, &epow).unwrap(), "{spec}");
            assert!(edge_subset(&epow, &com).unwrap(), "{spec}");
        }
        let q = build_family(&FamilySpec::InfiniteQuaternionWindow(default_qinf_window())).unwrap();
        let pow = build_graph(&q, GraphKind::Pow).unwrap();
        let epow = build_graph(&q, GraphKind::EPow).unwrap();
        let com = build_graph(&q, GraphKind::Com).unwrap();
        assert!(edge_subset(&pow, &epow).unwrap());
        assert!(edge_subset(&epow, &com).unwrap());
    }

    #[test]
    fn pow_strictly_below_epow_on_c6() {
        let c6 = view("cyclic:6");
        let pow = build_graph(&c6, GraphKind::Pow).unwrap();
        let epow = build_graph(&c6, GraphKind::EPow).unwrap();
        assert!(edge_subset(&pow, &epow).unwrap());
        assert!(!edge_set_equal(&pow, &epow).unwrap());
        assert!(edge_difference_witness(&epow, &pow).unwrap().is_some());
    }

    #[test]
    fn pow_equals_com_on_generalised_quaternion() {
        let q16 = view("genq:3");
        let pow = build_graph(&q16, GraphKind::Pow).unwrap();
        let com = build_graph(&q16, GraphKind::Com).unwrap();
        assert!(edge_set_equal(&pow, &com).unwrap());
    }

    #[test]
    fn universal_vertices_of_q16_pow_are_identity_and_involution() {
        let q16 = view("genq:3");
        let g = build_graph(&q16, GraphKind::Pow).unwrap();
        let univ = universal_vertices(&g);
        let labels: Vec<&str> = univ.iter().map(|&i| g.label(i)).collect();
        assert_eq!(labels, vec!["c(0/1)", "c(1/2)"]);
    }

    #[test]
    fn only_identity_is_universal_in_dinf_window_com() {
        let w = view("dinf:0..7");
        let g = build_graph(&w, GraphKind::Com).unwrap();
        let univ = universal_vertices(&g);
        assert_eq!(univ.len(), 1);
        assert_eq!(g.label(univ[0]), "r(0)");
    }

    #[test]
    fn identity_is_universal_everywhere() {
        for spec in ["cyclic:8", "dihedral:5", "dicyclic:4", "ld:3", "dinf:-2..3"] {
            let v = view(spec);
            for kind in GraphKind::ALL {
                let g = build_graph(&v, kind).unwrap();
                assert!(
                    universal_vertices(&g).contains(&v.identity_index()),
                    "{spec} {kind}"
                );
            }
        }
    }

    #[test]
    fn induced_subgraph_inherits_order() {
        let q16 = view("genq:3");
        let g = build_graph(&q16, GraphKind::Pow).unwrap();
        let all = induced_subgraph(&g, g.labels()).unwrap();
        assert!(edge_set_equal(&g, &all).unwrap());

        let keep: Vec<String> = g
            .labels()
            .iter()
            .filter(|l| *l != "c(0/1)" && *l != "c(1/2)")
            .cloned()
            .collect();
        let rest = induced_subgraph(&g, &keep).unwrap();
        assert_eq!(rest.vertex_count(), 14);
        assert!(universal_vertices(&rest).is_empty());
        // K6 plus four K2: 15 + 4 edges
        assert_eq!(rest.edge_count(), 19);

        let single = induced_subgraph(&g, &[g.label(3).to_string()]).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        assert!(matches!(
            induced_subgraph(&g, &["nope".to_string()]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn label_mismatch_is_detected() {
        let a = build_graph(&view("cyclic:4"), GraphKind::Pow).unwrap();
        let b = build_graph(&view("cyclic:5"), GraphKind::Pow).unwrap();
        assert_eq!(edge_set_equal(&a, &b), Err(Error::LabelMismatch));
        assert_eq!(edge_subset(&a, &b), Err(Error::LabelMismatch));
    }

    #[test]
    fn fast_paths_agree_with_generic_paths_on_small_truncations() {
        for spec in [
            "cyclic:12",
            "dihedral:8",
            "dicyclic:4",
            "genq:3",
            "lq:3",
            "ld:3",
            "prufer:4",
            "prod(cyclic:3,cyclic:5)",
        ] {
            let v = view(spec);
            for i in 0..v.len() {
                for j in (i + 1)..v.len() {
                    let (x, y) = (v.element(i), v.element(j));
                    assert_eq!(
                        adj_pow(x, y).unwrap(),
                        adj_pow_generic(&v, i, j).unwrap(),
                        "pow {spec} ({i},{j})"
                    );
                    assert_eq!(
                        adj_epow(x, y).unwrap(),
                        adj_epow_generic(&v, i, j).unwrap(),
                        "epow {spec} ({i},{j})"
                    );
                    assert_eq!(
                        adj_com(x, y).unwrap(),
                        adj_com_generic(&v, i, j).unwrap(),
                        "com {spec} ({i},{j})"
                    );
                }
            }
        }
    }
}
