//! The full verification matrix behind `suite` and the acceptance tests.
//!
//! Each criterion is an independent function returning a [`SuiteItem`];
//! `run_suite` assembles them, scaled by `max_level`. At `max_level = 7`
//! the matrix runs the complete stated ranges: truncation levels 2..=7,
//! dicyclic parameters 2..=8, chain and window levels 2..=6, the finite
//! corpus up to 64 elements, and the oracle-agreement corpus in full.
//!
//! `fault` names a criterion id to corrupt on purpose (an edge toggle or a
//! dropped witness parameter); it exists so the failure path of the whole
//! pipeline stays exercised.

use serde::Serialize;

use crate::decomposition::{decomposition_signature, DecompositionSignature};
use crate::error::Error;
use crate::family::{build_family, default_qinf_window, FamilySpec};
use crate::graph::{
    adj_com, adj_com_generic, adj_epow, adj_epow_generic, adj_pow, adj_pow_generic, build_graph,
    edge_set_equal, edge_subset, GraphKind, HierarchyGraph,
};
use crate::iso::{backtracking_isomorphism, graphs_isomorphic};
use crate::theorems::{
    check_thm1, check_thm2, corollary_checks, qinf_strictness, restriction_consistency,
    theorem4_witness, theorem5_witness, verify_bijection, ChainFamily,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteItem {
    pub id: &'static str,
    pub name: &'static str,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

impl SuiteItem {
    fn new(id: &'static str, name: &'static str, params: String) -> SuiteItem {
        SuiteItem {
            id,
            name,
            params,
            pass: true,
            detail: String::new(),
        }
    }

    fn fail(&mut self, detail: String) {
        if self.pass {
            self.pass = false;
            self.detail = detail;
        }
    }

    fn note(&mut self, detail: String) {
        if self.pass {
            self.detail = detail;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub max_level: u32,
    pub items: Vec<SuiteItem>,
    pub all_pass: bool,
}

fn graphs(spec: &FamilySpec) -> Result<[HierarchyGraph; 3], Error> {
    let view = build_family(spec)?;
    Ok([
        build_graph(&view, GraphKind::Pow)?,
        build_graph(&view, GraphKind::EPow)?,
        build_graph(&view, GraphKind::Com)?,
    ])
}

/// Pow = EPow = Com on locally quaternion truncations, levels 2..=L.
pub fn criterion_lq_equal(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "lq-equal",
        "hierarchy equality on locally quaternion truncations",
        format!("lq:2..{max_level}"),
    );
    for n in 2..=max_level {
        let [mut pow, epow, com] = graphs(&FamilySpec::LocallyQuaternionTrunc(n))?;
        if fault && n == 2 {
            pow.toggle_edge(0, 1);
        }
        if !edge_set_equal(&pow, &epow)? {
            item.fail(format!("lq:{n}: Pow != EPow"));
        } else if !edge_set_equal(&epow, &com)? {
            item.fail(format!("lq:{n}: EPow != Com"));
        }
    }
    item.note("Pow = EPow = Com at every level".into());
    Ok(item)
}

/// Pow = EPow and EPow strictly below Com on locally dihedral truncations,
/// with a commuting-reflection pair named as the missing edge.
pub fn criterion_ld_split(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "ld-split",
        "locally dihedral split: Pow = EPow, EPow strictly below Com",
        format!("ld:2..{max_level}"),
    );
    let mut witness = String::new();
    for n in 2..=max_level {
        let view = build_family(&FamilySpec::LocallyDihedralTrunc(n))?;
        let mut pow = build_graph(&view, GraphKind::Pow)?;
        let epow = build_graph(&view, GraphKind::EPow)?;
        let com = build_graph(&view, GraphKind::Com)?;
        if fault && n == 2 {
            pow.toggle_edge(0, 1);
        }
        if !edge_set_equal(&pow, &epow)? {
            item.fail(format!("ld:{n}: Pow != EPow"));
            continue;
        }
        if !(edge_subset(&epow, &com)? && !edge_set_equal(&epow, &com)?) {
            item.fail(format!("ld:{n}: EPow is not strictly below Com"));
            continue;
        }
        let mut found = None;
        'pairs: for i in 0..view.len() {
            if !view.element(i).is_flipped() {
                continue;
            }
            for j in (i + 1)..view.len() {
                if view.element(j).is_flipped() && com.adjacent(i, j) && !epow.adjacent(i, j) {
                    found = Some((view.label(i).to_string(), view.label(j).to_string()));
                    break 'pairs;
                }
            }
        }
        match found {
            Some((x, y)) => witness = format!("missing edge at ld:{n}: ({x}, {y})"),
            None => item.fail(format!("ld:{n}: no commuting reflection pair found")),
        }
    }
    item.note(witness);
    Ok(item)
}

fn expected_quaternionic_signature(half_order: u64) -> DecompositionSignature {
    // (K_{2m-2} ∪ m·K2) ∇ K2 where 2m is the rotation count
    let m = (half_order / 2) as usize;
    let mut cliques = vec![half_order as usize - 2];
    cliques.extend(std::iter::repeat_n(2, m));
    DecompositionSignature::new(2, cliques)
}

/// Exact decomposition signatures: Pow of generalised quaternion groups and
/// Com of dicyclic groups.
pub fn criterion_decomposition(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "decomposition",
        "join-of-cliques signatures for genq Pow and dicyclic Com",
        format!("genq:2..{max_level}, dicyclic:2..{}", max_level + 1),
    );
    for n in 2..=max_level {
        let view = build_family(&FamilySpec::GenQuaternion(n))?;
        let mut pow = build_graph(&view, GraphKind::Pow)?;
        if fault && n == 2 {
            pow.toggle_edge(0, 1);
        }
        let expected = expected_quaternionic_signature(1 << n);
        match decomposition_signature(&pow) {
            Some(sig) if sig == expected => {}
            Some(sig) => item.fail(format!("genq:{n}: got {sig}, expected {expected}")),
            None => item.fail(format!("genq:{n}: Pow not recognized")),
        }
    }
    for m in 2..=(max_level as u64 + 1) {
        let view = build_family(&FamilySpec::Dicyclic(m))?;
        let com = build_graph(&view, GraphKind::Com)?;
        let expected = expected_quaternionic_signature(2 * m);
        match decomposition_signature(&com) {
            Some(sig) if sig == expected => {}
            Some(sig) => item.fail(format!("dicyclic:{m}: got {sig}, expected {expected}")),
            None => item.fail(format!("dicyclic:{m}: Com not recognized")),
        }
    }
    item.note("all signatures exact".into());
    Ok(item)
}

/// The locally quaternion → locally dihedral coordinate bijection carries
/// Pow onto Com, and the signature fast path confirms the isomorphism.
pub fn criterion_thm4(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "thm4",
        "Pow of locally quaternion truncation isomorphic to Com of locally dihedral truncation",
        format!("levels 2..{max_level}"),
    );
    for n in 2..=max_level {
        let report = theorem4_witness(n)?;
        if !report.pass {
            item.fail(format!("level {n}: {:?}", report.counterexample));
            continue;
        }
        let lq = build_family(&ChainFamily::LocallyQuaternion.spec(n))?;
        let ld = build_family(&ChainFamily::LocallyDihedral.spec(n))?;
        let mut pow = build_graph(&lq, GraphKind::Pow)?;
        let com = build_graph(&ld, GraphKind::Com)?;
        if fault && n == 2 {
            pow.toggle_edge(0, 1);
        }
        let iso = graphs_isomorphic(&pow, &com)?;
        if !iso.isomorphic {
            item.fail(format!("level {n}: signature isomorphism rejected"));
        }
    }
    item.note("bijection verified and signatures isomorphic at every level".into());
    Ok(item)
}

/// The infinite dihedral window → locally dihedral bijection carries Com
/// onto Pow.
pub fn criterion_thm5(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "thm5",
        "Com of infinite dihedral window isomorphic to Pow of locally dihedral truncation",
        format!("levels 2..{max_level}"),
    );
    for n in 2..=max_level {
        if fault && n == 2 {
            // corrupt the map under test: send the identity elsewhere
            let window = build_family(&FamilySpec::InfiniteDihedralWindow((0..4).collect()))?;
            let ld = build_family(&ChainFamily::LocallyDihedral.spec(2))?;
            let mut map: Vec<usize> = (0..window.len()).collect();
            let id = window.identity_index();
            let other = (0..window.len())
                .find(|&i| i != id && !window.element(i).is_flipped())
                .expect("window has nonidentity translations");
            map.swap(id, other);
            let counterexample =
                verify_bijection(&window, GraphKind::Com, &ld, GraphKind::Pow, &map)?;
            if counterexample.is_some() {
                item.fail(format!("level {n}: {counterexample:?}"));
            }
            continue;
        }
        let report = theorem5_witness(n)?;
        if !report.pass {
            item.fail(format!("level {n}: {:?}", report.counterexample));
        }
    }
    item.note("bijection verified at every level".into());
    Ok(item)
}

/// The finite corpus for the equality characterizations, filtered to group
/// order ≤ `size_cap`.
pub fn corpus(size_cap: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=36u64 {
        if n as usize <= size_cap {
            specs.push(FamilySpec::Cyclic(n));
        }
    }
    for m in 1..=16u64 {
        if 2 * m as usize <= size_cap {
            specs.push(FamilySpec::Dihedral(m));
        }
    }
    for m in 1..=8u64 {
        if 4 * m as usize <= size_cap {
            specs.push(FamilySpec::Dicyclic(m));
        }
    }
    for p in [2u64, 3, 5, 7] {
        for q in [2u64, 3, 5, 7] {
            if (p * q) as usize <= size_cap {
                specs.push(FamilySpec::Product(
                    Box::new(FamilySpec::Cyclic(p)),
                    Box::new(FamilySpec::Cyclic(q)),
                ));
            }
        }
    }
    specs
}

fn size_cap(max_level: u32) -> usize {
    let scaled = 1usize << (max_level.min(20) + 1);
    scaled.min(64)
}

/// Every thm1 and thm2 verdict over the corpus is consistent.
pub fn criterion_finite_corpus(size_cap_elems: usize, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "finite-corpus",
        "thm1/thm2 verdicts consistent over the finite corpus",
        format!("corpus with order <= {size_cap_elems}"),
    );
    let specs = corpus(size_cap_elems);
    let mut checked = 0usize;
    for spec in &specs {
        let view = build_family(spec)?;
        let mut v1 = check_thm1(&view)?;
        if fault && checked == 0 {
            v1.consistent = false;
        }
        if !v1.consistent {
            item.fail(format!("{}: thm1 inconsistent", spec.canonical()));
        }
        let v2 = check_thm2(&view)?;
        if !v2.consistent {
            item.fail(format!("{}: thm2 inconsistent", spec.canonical()));
        }
        checked += 1;
    }
    item.note(format!("{checked} groups checked, all consistent"));
    Ok(item)
}

/// Chain restriction: the level-(n+1) graph induced on level-n labels
/// equals the level-n graph, for both chains and all three kinds.
pub fn criterion_chain(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let top = max_level.min(6);
    let mut item = SuiteItem::new(
        "chain",
        "restriction consistency along the locally finite chains",
        format!("lq/ld, pow/epow/com, levels 2..{top}"),
    );
    for chain in [ChainFamily::LocallyQuaternion, ChainFamily::LocallyDihedral] {
        for kind in GraphKind::ALL {
            for n in 2..=top {
                let mut ok = restriction_consistency(chain, kind, n)?;
                if fault && n == 2 && kind == GraphKind::Pow {
                    ok = false;
                }
                if !ok {
                    item.fail(format!(
                        "{}:{} level {n}: restriction mismatch",
                        chain.as_str(),
                        kind
                    ));
                }
            }
        }
    }
    item.note("all restrictions match".into());
    Ok(item)
}

/// Infinite dihedral windows: Pow strictly below EPow = Com with the
/// (r², r³) witness.
pub fn criterion_dinf(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let top = max_level.min(6);
    let mut item = SuiteItem::new(
        "dinf",
        "infinite dihedral windows: Pow strictly below EPow = Com",
        format!("windows 0..2^n-1, n = 2..{top}"),
    );
    let mut witness = String::new();
    for n in 2..=top {
        let mut report = corollary_checks(n)?;
        if fault && n == 2 {
            report.dinf_witness = None;
        }
        if !report.dinf_pow_strictly_below_epow {
            item.fail(format!("n={n}: Pow not strictly below EPow"));
        } else if !report.dinf_epow_eq_com {
            item.fail(format!("n={n}: EPow != Com"));
        } else {
            match report.dinf_witness {
                Some((x, y)) => witness = format!("witness at n={n}: ({x}, {y})"),
                None => item.fail(format!("n={n}: (r2, r3) witness missing")),
            }
        }
    }
    item.note(witness);
    Ok(item)
}

/// Strictness of both inclusions on the default infinite quaternion window.
pub fn criterion_qinf(fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "qinf-strict",
        "infinite quaternion window: both inclusions strict with named witnesses",
        "default window".into(),
    );
    let mut params = default_qinf_window();
    if fault {
        // keep only one independent free direction
        params.retain(|p| p.free()[1] == 0);
    }
    let report = qinf_strictness(&params)?;
    if !report.pass {
        item.fail(format!(
            "hierarchy={} pow_epow={:?} epow_com={:?}",
            report.hierarchy_holds, report.pow_epow, report.epow_com
        ));
    }
    item.note(format!(
        "pow/epow witness {:?}, epow/com witness {:?}",
        report.pow_epow, report.epow_com
    ));
    Ok(item)
}

/// The truncation corpus for oracle agreement, capped by element count.
fn oracle_corpus(size_cap_elems: usize) -> Vec<FamilySpec> {
    let mut specs = corpus(size_cap_elems);
    for n in 1..=6u32 {
        if 1usize << n <= size_cap_elems {
            specs.push(FamilySpec::PruferTrunc(n));
        }
        if 1usize << (n + 1) <= size_cap_elems {
            specs.push(FamilySpec::GenQuaternion(n.max(2)));
            specs.push(FamilySpec::LocallyQuaternionTrunc(n));
            specs.push(FamilySpec::LocallyDihedralTrunc(n));
        }
    }
    specs.dedup();
    specs
}

/// Family fast-path adjacency equals generic enumeration/closure adjacency
/// on every pair of every truncation within the cap, and signature-based
/// isomorphism equals backtracking isomorphism on all recognized graph
/// pairs within the vertex cap.
pub fn criterion_oracle_agreement(size_cap_elems: usize, fault: bool) -> Result<SuiteItem, Error> {
    let iso_cap = size_cap_elems.min(12);
    let mut item = SuiteItem::new(
        "oracle",
        "fast paths agree with generic oracles; signatures agree with backtracking",
        format!("truncations <= {size_cap_elems} elements, iso pairs <= {iso_cap} vertices"),
    );
    let mut pairs_checked = 0usize;
    let mut recognized: Vec<(String, HierarchyGraph)> = Vec::new();
    for spec in oracle_corpus(size_cap_elems) {
        let view = build_family(&spec)?;
        for i in 0..view.len() {
            for j in (i + 1)..view.len() {
                let (x, y) = (view.element(i), view.element(j));
                let mut fast_pow = adj_pow(x, y)?;
                if fault && pairs_checked == 0 {
                    fast_pow = !fast_pow;
                }
                if fast_pow != adj_pow_generic(&view, i, j)? {
                    item.fail(format!("{}: pow mismatch at ({i},{j})", spec.canonical()));
                }
                if adj_epow(x, y)? != adj_epow_generic(&view, i, j)? {
                    item.fail(format!("{}: epow mismatch at ({i},{j})", spec.canonical()));
                }
                if adj_com(x, y)? != adj_com_generic(&view, i, j)? {
                    item.fail(format!("{}: com mismatch at ({i},{j})", spec.canonical()));
                }
                pairs_checked += 1;
            }
        }
        if view.len() <= iso_cap {
            for kind in GraphKind::ALL {
                let g = build_graph(&view, kind)?;
                if decomposition_signature(&g).is_some() {
                    recognized.push((format!("{}:{}", kind, spec.canonical()), g));
                }
            }
        }
    }
    let mut iso_checked = 0usize;
    for (a, (name_a, ga)) in recognized.iter().enumerate() {
        for (name_b, gb) in &recognized[a + 1..] {
            if ga.vertex_count() != gb.vertex_count() {
                continue;
            }
            let by_signature =
                decomposition_signature(ga).unwrap() == decomposition_signature(gb).unwrap();
            let by_backtracking = backtracking_isomorphism(ga, gb).is_some();
            if by_signature != by_backtracking {
                item.fail(format!("iso disagreement: {name_a} vs {name_b}"));
            }
            iso_checked += 1;
        }
    }
    item.note(format!(
        "{pairs_checked} adjacency pairs, {iso_checked} recognized graph pairs"
    ));
    Ok(item)
}

/// Recomputes one criterion from scratch and compares serialized bytes; a
/// cheap in-process determinism probe (the CLI-level byte check lives in
/// the CLI tests).
pub fn criterion_determinism(max_level: u32, fault: bool) -> Result<SuiteItem, Error> {
    let mut item = SuiteItem::new(
        "determinism",
        "recomputed criterion serializes to identical bytes",
        format!("decomposition at max_level {max_level}"),
    );
    let first = criterion_decomposition(max_level, false)?;
    let mut second = criterion_decomposition(max_level, false)?;
    if fault {
        second.detail.push('!');
    }
    let a = serde_json::to_string(&first).expect("serializable");
    let b = serde_json::to_string(&second).expect("serializable");
    if a != b {
        item.fail("recomputed report differs".into());
    }
    item.note("byte-identical recomputation".into());
    Ok(item)
}

/// Runs the whole matrix. `fault` corrupts the named criterion, for
/// negative-control tests.
pub fn run_suite(max_level: u32, fault: Option<&str>) -> Result<SuiteReport, Error> {
    if max_level < 2 {
        return Err(Error::BadParam(format!(
            "max level {max_level} too small, need >= 2"
        )));
    }
    let cap = size_cap(max_level);
    let hit = |id: &str| fault == Some(id);
    let items = vec![
        criterion_lq_equal(max_level, hit("lq-equal"))?,
        criterion_ld_split(max_level, hit("ld-split"))?,
        criterion_decomposition(max_level, hit("decomposition"))?,
        criterion_thm4(max_level, hit("thm4"))?,
        criterion_thm5(max_level, hit("thm5"))?,
        criterion_finite_corpus(cap, hit("finite-corpus"))?,
        criterion_chain(max_level, hit("chain"))?,
        criterion_dinf(max_level, hit("dinf"))?,
        criterion_qinf(hit("qinf-strict"))?,
        criterion_oracle_agreement(cap, hit("oracle"))?,
        criterion_determinism(max_level.min(3), hit("determinism"))?,
    ];
    let all_pass = items.iter().all(|i| i.pass);
    Ok(SuiteReport {
        max_level,
        items,
        all_pass,
    })
}
