//! Executable verdicts for the equality characterizations and the
//! cross-group isomorphisms.
//!
//! The equality checks pair a graph comparison with an independent
//! obstruction search and report whether the two agree: the power and
//! enhanced power graphs of a torsion group are equal exactly when no
//! commuting pair of distinct prime orders exists, and the enhanced power
//! and commuting graphs are equal exactly when no pair spans a `C_p × C_p`.
//! The infinite-order obstructions (ℤ, ℤ×ℤ, ℤ×C_p) cannot occur in a finite
//! view; they are exercised through the infinite dihedral and infinite
//! quaternion windows instead.

use serde::Serialize;

use crate::decomposition::decomposition_signature;
use crate::error::Error;
use crate::family::{build_family, FamilySpec};
use crate::graph::{build_graph, edge_set_equal, edge_subset, induced_subgraph, GraphKind};
use crate::group_element::GroupElement;
use crate::toral::{free_rank_pair, ToralParam};
use crate::view::FiniteGroupView;

/// A subgroup obstruction witnessing strict inclusion between two hierarchy
/// graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ObstructionWitness {
    /// Commuting pair of distinct prime orders `p`, `q`: spans a cyclic
    /// group of order `pq`, an `EPow` edge that `Pow` lacks.
    Cpq {
        x: String,
        y: String,
        p: u64,
        q: u64,
    },
    /// Commuting pair of equal prime order `p` with closure of size `p²`:
    /// spans a `C_p × C_p`, a `Com` edge that `EPow` lacks.
    Cpp { x: String, y: String, p: u64 },
    /// An infinite-order obstruction; never produced by finite views.
    ZFlag,
}

/// Outcome of one equality check: the graph comparison, the obstruction
/// search, and whether they agree (`consistent` should always be true).
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub claim: String,
    pub family: String,
    pub graphs_equal: bool,
    pub obstruction: Option<ObstructionWitness>,
    pub consistent: bool,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// In-view element orders, computed generically.
fn view_orders(view: &FiniteGroupView) -> Result<Vec<u64>, Error> {
    (0..view.len()).map(|i| view.order_in_view(i)).collect()
}

/// First commuting pair with distinct prime orders, in element order.
pub fn find_cpq(view: &FiniteGroupView) -> Result<Option<ObstructionWitness>, Error> {
    view.require_closed()?;
    let orders = view_orders(view)?;
    for i in 0..view.len() {
        if !is_prime(orders[i]) {
            continue;
        }
        for (j, &order_j) in orders.iter().enumerate().skip(i + 1) {
            if !is_prime(order_j) || orders[i] == order_j {
                continue;
            }
            if view.mul_index(i, j)? == view.mul_index(j, i)? {
                return Ok(Some(ObstructionWitness::Cpq {
                    x: view.label(i).to_string(),
                    y: view.label(j).to_string(),
                    p: orders[i],
                    q: order_j,
                }));
            }
        }
    }
    Ok(None)
}

/// First commuting pair of equal prime order `p` whose closure has exactly
/// `p²` elements, in element order.
pub fn find_cpp(view: &FiniteGroupView) -> Result<Option<ObstructionWitness>, Error> {
    view.require_closed()?;
    let orders = view_orders(view)?;
    for i in 0..view.len() {
        let p = orders[i];
        if !is_prime(p) {
            continue;
        }
        for (j, &order_j) in orders.iter().enumerate().skip(i + 1) {
            if order_j != p {
                continue;
            }
            if view.mul_index(i, j)? != view.mul_index(j, i)? {
                continue;
            }
            if view.subgroup_closure(&[i, j])?.len() as u64 == p * p {
                return Ok(Some(ObstructionWitness::Cpp {
                    x: view.label(i).to_string(),
                    y: view.label(j).to_string(),
                    p,
                }));
            }
        }
    }
    Ok(None)
}

fn verdict(
    claim: &str,
    view: &FiniteGroupView,
    graphs_equal: bool,
    obstruction: Option<ObstructionWitness>,
) -> TheoremVerdict {
    let consistent = graphs_equal == obstruction.is_none();
    TheoremVerdict {
        claim: claim.to_string(),
        family: view.spec().to_string(),
        graphs_equal,
        obstruction,
        consistent,
    }
}

/// Pow = EPow ⟺ no commuting pair of distinct prime orders.
pub fn check_thm1(view: &FiniteGroupView) -> Result<TheoremVerdict, Error> {
    let pow = build_graph(view, GraphKind::Pow)?;
    let epow = build_graph(view, GraphKind::EPow)?;
    let equal = edge_set_equal(&pow, &epow)?;
    Ok(verdict("thm1", view, equal, find_cpq(view)?))
}

/// EPow = Com ⟺ no `C_p × C_p` subgroup.
pub fn check_thm2(view: &FiniteGroupView) -> Result<TheoremVerdict, Error> {
    let epow = build_graph(view, GraphKind::EPow)?;
    let com = build_graph(view, GraphKind::Com)?;
    let equal = edge_set_equal(&epow, &com)?;
    Ok(verdict("thm2", view, equal, find_cpp(view)?))
}

/// Pow = Com ⟺ neither obstruction exists.
pub fn check_thm3(view: &FiniteGroupView) -> Result<TheoremVerdict, Error> {
    let pow = build_graph(view, GraphKind::Pow)?;
    let com = build_graph(view, GraphKind::Com)?;
    let equal = edge_set_equal(&pow, &com)?;
    let obstruction = match find_cpq(view)? {
        Some(w) => Some(w),
        None => find_cpp(view)?,
    };
    Ok(verdict("thm3", view, equal, obstruction))
}

/// The two locally finite chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainFamily {
    LocallyQuaternion,
    LocallyDihedral,
}

impl ChainFamily {
    pub fn parse(s: &str) -> Result<ChainFamily, Error> {
        match s {
            "lq" => Ok(ChainFamily::LocallyQuaternion),
            "ld" => Ok(ChainFamily::LocallyDihedral),
            other => Err(Error::BadParam(format!("unknown chain family `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ChainFamily::LocallyQuaternion => "lq",
            ChainFamily::LocallyDihedral => "ld",
        }
    }

    pub fn spec(self, level: u32) -> FamilySpec {
        match self {
            ChainFamily::LocallyQuaternion => FamilySpec::LocallyQuaternionTrunc(level),
            ChainFamily::LocallyDihedral => FamilySpec::LocallyDihedralTrunc(level),
        }
    }
}

/// Adjacency inside a chain is intrinsic to the elements: the level-`n+1`
/// graph induced on the level-`n` vertex set must equal the level-`n`
/// graph.
pub fn restriction_consistency(
    chain: ChainFamily,
    kind: GraphKind,
    level: u32,
) -> Result<bool, Error> {
    let small = build_family(&chain.spec(level))?;
    let big = build_family(&chain.spec(level + 1))?;
    let g_small = build_graph(&small, kind)?;
    let g_big = build_graph(&big, kind)?;
    let restricted = induced_subgraph(&g_big, small.labels())?;
    edge_set_equal(&restricted, &g_small)
}

/// An adjacency mismatch under a claimed bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCounterexample {
    pub x: String,
    pub y: String,
    pub fx: String,
    pub fy: String,
    pub domain_adjacent: bool,
    pub codomain_adjacent: bool,
}

/// A verified bijection between two (view, kind) pairs.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub claim: String,
    pub level: u32,
    pub domain: String,
    pub codomain: String,
    pub map: Vec<(String, String)>,
    pub pass: bool,
    pub counterexample: Option<EdgeCounterexample>,
}

/// Checks that `map` is a bijection of vertex indices carrying the domain
/// graph's edges exactly onto the codomain graph's edges; returns the first
/// mismatched pair otherwise.
pub fn verify_bijection(
    domain: &FiniteGroupView,
    domain_kind: GraphKind,
    codomain: &FiniteGroupView,
    codomain_kind: GraphKind,
    map: &[usize],
) -> Result<Option<EdgeCounterexample>, Error> {
    if map.len() != domain.len() || domain.len() != codomain.len() {
        return Err(Error::BadParam("map is not a bijection".into()));
    }
    let mut used = vec![false; codomain.len()];
    for &t in map {
        if t >= codomain.len() || used[t] {
            return Err(Error::BadParam("map is not a bijection".into()));
        }
        used[t] = true;
    }
    let g_dom = build_graph(domain, domain_kind)?;
    let g_cod = build_graph(codomain, codomain_kind)?;
    for i in 0..map.len() {
        for j in (i + 1)..map.len() {
            let a = g_dom.adjacent(i, j);
            let b = g_cod.adjacent(map[i], map[j]);
            if a != b {
                return Ok(Some(EdgeCounterexample {
                    x: domain.label(i).to_string(),
                    y: domain.label(j).to_string(),
                    fx: codomain.label(map[i]).to_string(),
                    fy: codomain.label(map[j]).to_string(),
                    domain_adjacent: a,
                    codomain_adjacent: b,
                }));
            }
        }
    }
    Ok(None)
}

fn require_level(level: u32) -> Result<(), Error> {
    if level < 2 {
        Err(Error::BadParam(format!(
            "level {level} too small, need >= 2"
        )))
    } else {
        Ok(())
    }
}

/// The coordinate bijection from the level-`n` locally quaternion
/// truncation to the level-`n` locally dihedral truncation, `(c, jpart) ↦
/// (c, flip)`, verified to carry Pow edges exactly onto Com edges.
pub fn theorem4_witness(level: u32) -> Result<BijectionReport, Error> {
    require_level(level)?;
    let lq = build_family(&ChainFamily::LocallyQuaternion.spec(level))?;
    let ld = build_family(&ChainFamily::LocallyDihedral.spec(level))?;
    let map: Vec<usize> = lq
        .elements()
        .iter()
        .map(|e| {
            let image = match e {
                GroupElement::LocallyQuaternion { angle, jpart } => GroupElement::LocallyDihedral {
                    angle: *angle,
                    flip: *jpart,
                },
                _ => unreachable!("locally quaternion truncation"),
            };
            ld.index_of(&image).expect("same dyadic coordinates")
        })
        .collect();
    let counterexample = verify_bijection(&lq, GraphKind::Pow, &ld, GraphKind::Com, &map)?;
    Ok(BijectionReport {
        claim: "thm4".into(),
        level,
        domain: format!("pow:{}", lq.spec()),
        codomain: format!("com:{}", ld.spec()),
        pass: counterexample.is_none(),
        map: map
            .iter()
            .enumerate()
            .map(|(i, &t)| (lq.label(i).to_string(), ld.label(t).to_string()))
            .collect(),
        counterexample,
    })
}

/// The sorted-order bijection from the infinite dihedral window
/// `{0..2^n-1}` to the level-`n` locally dihedral truncation: shift 0 to
/// angle 0, remaining shifts onto remaining dyadic angles in listing order,
/// reflections by the flip rule. Verified to carry Com edges exactly onto
/// Pow edges.
pub fn theorem5_witness(level: u32) -> Result<BijectionReport, Error> {
    require_level(level)?;
    if level > 30 {
        return Err(Error::BadParam(format!("level {level} too large")));
    }
    let shifts: Vec<i64> = (0..(1i64 << level)).collect();
    let window = build_family(&FamilySpec::InfiniteDihedralWindow(shifts))?;
    let ld = build_family(&ChainFamily::LocallyDihedral.spec(level))?;

    let translations: Vec<usize> = (0..window.len())
        .filter(|&i| !window.element(i).is_flipped())
        .collect();
    let reflections: Vec<usize> = (0..window.len())
        .filter(|&i| window.element(i).is_flipped())
        .collect();
    let rotations: Vec<usize> = (0..ld.len())
        .filter(|&i| !ld.element(i).is_flipped())
        .collect();
    let flips: Vec<usize> = (0..ld.len())
        .filter(|&i| ld.element(i).is_flipped())
        .collect();

    let mut map = vec![usize::MAX; window.len()];
    for (&src, &dst) in translations.iter().zip(&rotations) {
        map[src] = dst;
    }
    for (&src, &dst) in reflections.iter().zip(&flips) {
        map[src] = dst;
    }
    debug_assert_eq!(map[window.identity_index()], ld.identity_index());

    let counterexample = verify_bijection(&window, GraphKind::Com, &ld, GraphKind::Pow, &map)?;
    Ok(BijectionReport {
        claim: "thm5".into(),
        level,
        domain: format!("com:{}", window.spec()),
        codomain: format!("pow:{}", ld.spec()),
        pass: counterexample.is_none(),
        map: map
            .iter()
            .enumerate()
            .map(|(i, &t)| (window.label(i).to_string(), ld.label(t).to_string()))
            .collect(),
        counterexample,
    })
}

/// Status of one strict inclusion in a strictness report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum InclusionStatus {
    /// Strict, with the designated witness pair named.
    StrictWitnessed { x: String, y: String },
    /// The designated witness pattern is absent from the window.
    NotWitnessed,
}

/// Strictness of both hierarchy inclusions on an infinite quaternion
/// window.
#[derive(Clone, Debug, Serialize)]
pub struct StrictnessReport {
    pub window: String,
    /// Pow ⊆ EPow ⊆ Com as edge sets on the window.
    pub hierarchy_holds: bool,
    /// Witness in EPow∖Pow: the square and cube of a free generator.
    pub pow_epow: InclusionStatus,
    /// Witness in Com∖EPow: two independent free generators.
    pub epow_com: InclusionStatus,
    pub pass: bool,
}

/// Verifies Pow ⊊ EPow ⊊ Com on the window spanned by `params`, reporting
/// the designated witness pairs: `(x_{2g}, x_{3g})` for a free generator
/// `g` whose double and triple lie in the window, and `(x_g, x_h)` for two
/// independent free generators.
pub fn qinf_strictness(params: &[ToralParam]) -> Result<StrictnessReport, Error> {
    let window = build_family(&FamilySpec::InfiniteQuaternionWindow(params.to_vec()))?;
    let pow = build_graph(&window, GraphKind::Pow)?;
    let epow = build_graph(&window, GraphKind::EPow)?;
    let com = build_graph(&window, GraphKind::Com)?;
    let hierarchy_holds = edge_subset(&pow, &epow)? && edge_subset(&epow, &com)?;

    let rotation_params: Vec<(usize, &ToralParam)> = (0..window.len())
        .filter_map(|i| match window.element(i) {
            GroupElement::InfiniteQuaternion {
                param,
                jpart: false,
            } => Some((i, param)),
            _ => None,
        })
        .collect();

    // (x_{2g}, x_{3g}): EPow edge (the pair generates a subgroup of <g>)
    // that Pow lacks (neither is a power of the other)
    let mut pow_epow = InclusionStatus::NotWitnessed;
    'outer: for (_, g) in &rotation_params {
        if g.free_is_zero() || g.is_identity() {
            continue;
        }
        let double = g.times(2);
        let triple = g.times(3);
        let find = |p: &ToralParam| {
            rotation_params
                .iter()
                .find(|(_, q)| *q == p)
                .map(|(i, _)| *i)
        };
        if let (Some(i), Some(j)) = (find(&double), find(&triple)) {
            if epow.adjacent(i, j) && !pow.adjacent(i, j) {
                pow_epow = InclusionStatus::StrictWitnessed {
                    x: window.label(i).to_string(),
                    y: window.label(j).to_string(),
                };
                break 'outer;
            }
        }
    }

    // (x_g, x_h) with independent free parts: commuting, not cyclic
    let mut epow_com = InclusionStatus::NotWitnessed;
    'search: for (a, (i, g)) in rotation_params.iter().enumerate() {
        for (j, h) in rotation_params[a + 1..].iter() {
            if free_rank_pair(g.free(), h.free()) == 2 {
                debug_assert!(com.adjacent(*i, *j) && !epow.adjacent(*i, *j));
                epow_com = InclusionStatus::StrictWitnessed {
                    x: window.label(*i).to_string(),
                    y: window.label(*j).to_string(),
                };
                break 'search;
            }
        }
    }

    let pass = hierarchy_holds
        && pow_epow != InclusionStatus::NotWitnessed
        && epow_com != InclusionStatus::NotWitnessed;
    Ok(StrictnessReport {
        window: window.spec().to_string(),
        hierarchy_holds,
        pow_epow,
        epow_com,
        pass,
    })
}

/// Hierarchy comparisons at one chain level: locally quaternion truncations
/// have all three graphs equal; locally dihedral truncations have
/// Pow = EPow strictly below Com, witnessed by two commuting reflections;
/// the infinite dihedral window `{0..2^n-1}` has Pow strictly below
/// EPow = Com, witnessed by the shifts 2 and 3.
#[derive(Clone, Debug, Serialize)]
pub struct CorollaryReport {
    pub level: u32,
    pub lq_all_equal: bool,
    pub ld_pow_eq_epow: bool,
    pub ld_epow_strictly_below_com: bool,
    pub ld_missing_edge: Option<(String, String)>,
    pub dinf_pow_strictly_below_epow: bool,
    pub dinf_witness: Option<(String, String)>,
    pub dinf_epow_eq_com: bool,
    pub pass: bool,
}

pub fn corollary_checks(level: u32) -> Result<CorollaryReport, Error> {
    require_level(level)?;
    let lq = build_family(&ChainFamily::LocallyQuaternion.spec(level))?;
    let lq_pow = build_graph(&lq, GraphKind::Pow)?;
    let lq_epow = build_graph(&lq, GraphKind::EPow)?;
    let lq_com = build_graph(&lq, GraphKind::Com)?;
    let lq_all_equal = edge_set_equal(&lq_pow, &lq_epow)? && edge_set_equal(&lq_epow, &lq_com)?;

    let ld = build_family(&ChainFamily::LocallyDihedral.spec(level))?;
    let ld_pow = build_graph(&ld, GraphKind::Pow)?;
    let ld_epow = build_graph(&ld, GraphKind::EPow)?;
    let ld_com = build_graph(&ld, GraphKind::Com)?;
    let ld_pow_eq_epow = edge_set_equal(&ld_pow, &ld_epow)?;
    let ld_epow_strictly_below_com =
        edge_subset(&ld_epow, &ld_com)? && !edge_set_equal(&ld_epow, &ld_com)?;
    // named missing edge: the first commuting pair of reflections
    let mut ld_missing_edge = None;
    'ld: for i in 0..ld.len() {
        if !ld.element(i).is_flipped() {
            continue;
        }
        for j in (i + 1)..ld.len() {
            if ld.element(j).is_flipped() && ld_com.adjacent(i, j) && !ld_epow.adjacent(i, j) {
                ld_missing_edge = Some((ld.label(i).to_string(), ld.label(j).to_string()));
                break 'ld;
            }
        }
    }

    let shifts: Vec<i64> = (0..(1i64 << level)).collect();
    let window = build_family(&FamilySpec::InfiniteDihedralWindow(shifts))?;
    let w_pow = build_graph(&window, GraphKind::Pow)?;
    let w_epow = build_graph(&window, GraphKind::EPow)?;
    let w_com = build_graph(&window, GraphKind::Com)?;
    let dinf_pow_strictly_below_epow =
        edge_subset(&w_pow, &w_epow)? && !edge_set_equal(&w_pow, &w_epow)?;
    let dinf_epow_eq_com = edge_set_equal(&w_epow, &w_com)?;
    let r2 = window.index_of(&GroupElement::InfiniteDihedral {
        shift: 2,
        flip: false,
    });
    let r3 = window.index_of(&GroupElement::InfiniteDihedral {
        shift: 3,
        flip: false,
    });
    let dinf_witness = match (r2, r3) {
        (Some(i), Some(j)) if w_epow.adjacent(i, j) && !w_pow.adjacent(i, j) => {
            Some((window.label(i).to_string(), window.label(j).to_string()))
        }
        _ => None,
    };

    let pass = lq_all_equal
        && ld_pow_eq_epow
        && ld_epow_strictly_below_com
        && ld_missing_edge.is_some()
        && dinf_pow_strictly_below_epow
        && dinf_witness.is_some()
        && dinf_epow_eq_com;
    Ok(CorollaryReport {
        level,
        lq_all_equal,
        ld_pow_eq_epow,
        ld_epow_strictly_below_com,
        ld_missing_edge,
        dinf_pow_strictly_below_epow,
        dinf_witness,
        dinf_epow_eq_com,
        pass,
    })
}

/// Convenience: the decomposition signature of one family graph.
pub fn family_signature(
    spec: &FamilySpec,
    kind: GraphKind,
) -> Result<Option<crate::decomposition::DecompositionSignature>, Error> {
    let view = build_family(spec)?;
    let g = build_graph(&view, kind)?;
    Ok(decomposition_signature(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::default_qinf_window;

    fn view(spec: &str) -> FiniteGroupView {
        build_family(&FamilySpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn cpq_found_in_c6() {
        let w = find_cpq(&view("cyclic:6")).unwrap().unwrap();
        match w {
            ObstructionWitness::Cpq { p, q, .. } => {
                assert_eq!((p, q), (2, 3));
            }
            _ => panic!("expected CPQ"),
        }
    }

    #[test]
    fn cpq_absent_in_generalised_quaternion() {
        assert_eq!(find_cpq(&view("genq:4")).unwrap(), None);
    }

    #[test]
    fn cpq_found_in_dihedral_6() {
        let w = find_cpq(&view("dihedral:6")).unwrap().unwrap();
        match w {
            ObstructionWitness::Cpq { p, q, x, y } => {
                assert_eq!((p, q), (2, 3));
                // recompute witness data: the named elements commute and
                // have the stated orders
                let v = view("dihedral:6");
                let i = v.labels().iter().position(|l| *l == x).unwrap();
                let j = v.labels().iter().position(|l| *l == y).unwrap();
                assert_eq!(v.order_in_view(i).unwrap(), p);
                assert_eq!(v.order_in_view(j).unwrap(), q);
                assert_eq!(v.mul_index(i, j).unwrap(), v.mul_index(j, i).unwrap());
            }
            _ => panic!("expected CPQ"),
        }
    }

    #[test]
    fn cpp_found_in_klein_four_product() {
        let w = find_cpp(&view("prod(cyclic:2,cyclic:2)")).unwrap().unwrap();
        match w {
            ObstructionWitness::Cpp { p, x, y } => {
                assert_eq!(p, 2);
                let v = view("prod(cyclic:2,cyclic:2)");
                let i = v.labels().iter().position(|l| *l == x).unwrap();
                let j = v.labels().iter().position(|l| *l == y).unwrap();
                assert_eq!(v.subgroup_closure(&[i, j]).unwrap().len(), 4);
            }
            _ => panic!("expected CPP"),
        }
    }

    #[test]
    fn cpp_absent_in_locally_quaternion_truncations() {
        for n in 2..=6 {
            let v = view(&format!("lq:{n}"));
            assert_eq!(find_cpp(&v).unwrap(), None, "lq:{n}");
        }
    }

    #[test]
    fn cpp_found_in_dihedral_4() {
        let w = find_cpp(&view("dihedral:4")).unwrap().unwrap();
        assert!(matches!(w, ObstructionWitness::Cpp { p: 2, .. }));
    }

    #[test]
    fn windows_are_rejected_by_detectors() {
        let w = view("dinf:0..3");
        assert!(matches!(find_cpq(&w), Err(Error::WindowNotClosed(_))));
    }

    #[test]
    fn thm1_consistent_on_c6() {
        let v = check_thm1(&view("cyclic:6")).unwrap();
        assert!(!v.graphs_equal);
        assert!(matches!(
            v.obstruction,
            Some(ObstructionWitness::Cpq { .. })
        ));
        assert!(v.consistent);
    }

    #[test]
    fn thm2_consistent_on_q16_and_d16() {
        let v = check_thm2(&view("genq:3")).unwrap();
        assert!(v.graphs_equal);
        assert!(v.obstruction.is_none());
        assert!(v.consistent);

        let v = check_thm2(&view("dihedral:8")).unwrap();
        assert!(!v.graphs_equal);
        assert!(matches!(
            v.obstruction,
            Some(ObstructionWitness::Cpp { p: 2, .. })
        ));
        assert!(v.consistent);
    }

    #[test]
    fn thm3_consistent_on_samples() {
        for spec in ["cyclic:6", "cyclic:7", "genq:3", "dihedral:8", "dicyclic:3"] {
            let v = check_thm3(&view(spec)).unwrap();
            assert!(v.consistent, "{spec}: {v:?}");
        }
    }

    #[test]
    fn restriction_consistency_holds_for_chains() {
        assert!(
            restriction_consistency(ChainFamily::LocallyQuaternion, GraphKind::Pow, 3).unwrap()
        );
        assert!(restriction_consistency(ChainFamily::LocallyDihedral, GraphKind::Com, 4).unwrap());
        assert!(
            restriction_consistency(ChainFamily::LocallyQuaternion, GraphKind::EPow, 5).unwrap()
        );
    }

    #[test]
    fn theorem4_passes_and_signatures_match() {
        for n in 2..=4 {
            let report = theorem4_witness(n).unwrap();
            assert!(report.pass, "level {n}: {:?}", report.counterexample);
            assert_eq!(report.map.len(), 1 << (n + 1));
        }
        let report = theorem4_witness(3).unwrap();
        let sig = family_signature(&FamilySpec::LocallyQuaternionTrunc(3), GraphKind::Pow)
            .unwrap()
            .unwrap();
        assert_eq!(sig.universal, 2);
        assert_eq!(sig.cliques, vec![6, 2, 2, 2, 2]);
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn theorem4_map_composed_with_inverse_is_identity() {
        let report = theorem4_witness(3).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for (src, dst) in &report.map {
            // coordinate identity up to the coset suffix
            assert_eq!(src.replace("*x", "*s"), *dst);
            images.insert(dst.clone());
        }
        // bijective: distinct images covering the codomain
        assert_eq!(images.len(), report.map.len());
        assert_eq!(images.len(), 16);
    }

    #[test]
    fn tampered_theorem4_map_fails() {
        // swap two reflection images with unequal half-turn classes
        let lq = view("lq:3");
        let ld = view("ld:3");
        let mut map: Vec<usize> = (0..lq.len()).collect();
        let a = lq
            .index_of(&GroupElement::LocallyQuaternion {
                angle: crate::angle::DyadicAngle::from_parts(0, 3),
                jpart: true,
            })
            .unwrap();
        let b = lq
            .index_of(&GroupElement::LocallyQuaternion {
                angle: crate::angle::DyadicAngle::from_parts(1, 3),
                jpart: true,
            })
            .unwrap();
        map.swap(a, b);
        let counterexample =
            verify_bijection(&lq, GraphKind::Pow, &ld, GraphKind::Com, &map).unwrap();
        assert!(counterexample.is_some());
    }

    #[test]
    fn theorem5_passes_at_small_levels() {
        for n in 2..=4 {
            let report = theorem5_witness(n).unwrap();
            assert!(report.pass, "level {n}: {:?}", report.counterexample);
        }
    }

    #[test]
    fn theorem5_signature_shape() {
        // one universal vertex over a big clique and isolated reflections
        let shifts: Vec<i64> = (0..8).collect();
        let window = build_family(&FamilySpec::InfiniteDihedralWindow(shifts)).unwrap();
        let g = build_graph(&window, GraphKind::Com).unwrap();
        let sig = decomposition_signature(&g).unwrap();
        assert_eq!(sig.universal, 1);
        let mut expected = vec![7];
        expected.extend(std::iter::repeat_n(1, 8));
        assert_eq!(sig.cliques, expected);
    }

    #[test]
    fn tampered_theorem5_map_fails() {
        // send the identity somewhere else: reflections lose their unique
        // neighbor
        let shifts: Vec<i64> = (0..4).collect();
        let window = build_family(&FamilySpec::InfiniteDihedralWindow(shifts)).unwrap();
        let ld = view("ld:2");
        let base = theorem5_witness(2).unwrap();
        assert!(base.pass);
        let mut map: Vec<usize> = (0..window.len()).collect();
        let id = window.identity_index();
        let other = (0..window.len())
            .find(|&i| i != id && !window.element(i).is_flipped())
            .unwrap();
        map.swap(id, other);
        let counterexample =
            verify_bijection(&window, GraphKind::Com, &ld, GraphKind::Pow, &map).unwrap();
        assert!(counterexample.is_some());
    }

    #[test]
    fn non_bijective_map_is_rejected() {
        let lq = view("lq:2");
        let ld = view("ld:2");
        let map = vec![0; lq.len()];
        assert!(verify_bijection(&lq, GraphKind::Pow, &ld, GraphKind::Com, &map).is_err());
    }

    #[test]
    fn qinf_default_window_is_doubly_strict() {
        let report = qinf_strictness(&default_qinf_window()).unwrap();
        assert!(report.hierarchy_holds);
        assert!(matches!(
            report.pow_epow,
            InclusionStatus::StrictWitnessed { .. }
        ));
        assert!(matches!(
            report.epow_com,
            InclusionStatus::StrictWitnessed { .. }
        ));
        assert!(report.pass);
    }

    #[test]
    fn qinf_torsion_only_window_reports_not_witnessed() {
        let params = vec![
            ToralParam::identity(2),
            ToralParam::minus_one(2),
            ToralParam::torsion(crate::angle::RationalAngle::new(1, 3), 2),
        ];
        let report = qinf_strictness(&params).unwrap();
        assert_eq!(report.pow_epow, InclusionStatus::NotWitnessed);
        assert_eq!(report.epow_com, InclusionStatus::NotWitnessed);
        assert!(!report.pass);
    }

    #[test]
    fn qinf_single_free_generator_lacks_the_rank_two_witness() {
        let g = ToralParam::new(crate::angle::RationalAngle::ZERO, vec![1, 0]);
        let params = vec![ToralParam::identity(2), g.times(2), g.times(3), g];
        let report = qinf_strictness(&params).unwrap();
        assert!(matches!(
            report.pow_epow,
            InclusionStatus::StrictWitnessed { .. }
        ));
        assert_eq!(report.epow_com, InclusionStatus::NotWitnessed);
        assert!(!report.pass);
    }

    #[test]
    fn witness_reports_are_deterministic() {
        let a = serde_json::to_string(&theorem4_witness(3).unwrap()).unwrap();
        let b = serde_json::to_string(&theorem4_witness(3).unwrap()).unwrap();
        assert_eq!(a, b);
        let a = serde_json::to_string(&theorem5_witness(3).unwrap()).unwrap();
        let b = serde_json::to_string(&theorem5_witness(3).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corollary_checks_pass_at_level_3() {
        let report = corollary_checks(3).unwrap();
        assert!(report.pass, "{report:?}");
        let (x, y) = report.ld_missing_edge.unwrap();
        assert!(x.ends_with("*s") && y.ends_with("*s"));
        assert_eq!(
            report.dinf_witness,
            Some(("r(2)".to_string(), "r(3)".to_string()))
        );
    }
}
