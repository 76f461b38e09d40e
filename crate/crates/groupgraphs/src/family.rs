//! Group family constructors and the family mini-language.
//!
//! `FamilySpec` names a finite group, a truncation of one of the locally
//! finite chains, or a finite window into an infinite group. The textual
//! form (shared with the CLI) is
//!
//! ```text
//! cyclic:12   dihedral:8   dicyclic:3   genq:4   prufer:3   lq:4   ld:4
//! dinf:0..7   qinf:default   qinf:@params.txt   prod(cyclic:2,cyclic:3)
//! ```
//!
//! Truncations are genuine subgroups; windows (`dinf`, `qinf`) are vertex
//! sets only and must contain the identity coordinate.

use crate::angle::{DyadicAngle, RationalAngle};
use crate::error::Error;
use crate::group_element::GroupElement;
use crate::toral::{ToralParam, DEFAULT_FREE_RANK};
use crate::view::FiniteGroupView;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Cyclic group of order `n`.
    Cyclic(u64),
    /// Dihedral group of order `2m`.
    Dihedral(u64),
    /// Dicyclic group of order `4m`.
    Dicyclic(u64),
    /// Generalised quaternion group of order `2^(n+1)`; the dicyclic group
    /// with `m = 2^(n-1)`.
    GenQuaternion(u32),
    /// Direct product of two finite families.
    Product(Box<FamilySpec>, Box<FamilySpec>),
    /// Level-`k` truncation of the Prüfer 2-group: the cyclic group of
    /// order `2^k` on dyadic angles.
    PruferTrunc(u32),
    /// Level-`n` truncation of the locally quaternion group, order `2^(n+1)`.
    LocallyQuaternionTrunc(u32),
    /// Level-`n` truncation of the locally dihedral group, order `2^(n+1)`.
    LocallyDihedralTrunc(u32),
    /// Window into the infinite dihedral group: the given shifts, with and
    /// without the reflection.
    InfiniteDihedralWindow(Vec<i64>),
    /// Window into the infinite quaternion group: the given parameters,
    /// with and without the j part.
    InfiniteQuaternionWindow(Vec<ToralParam>),
}

impl FamilySpec {
    /// Parses the textual mini-language. `qinf:@path` loads one parameter
    /// per line (`num/den;v1,v2,...`, `#` comments allowed) from the file.
    pub fn parse(s: &str) -> Result<FamilySpec, Error> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("prod(") {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::BadParam(format!("unbalanced parentheses in `{s}`")))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth = depth.checked_sub(1).ok_or_else(|| {
                            Error::BadParam(format!("unbalanced parentheses in `{s}`"))
                        })?
                    }
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split
                .ok_or_else(|| Error::BadParam(format!("`prod` needs two factors in `{s}`")))?;
            let left = FamilySpec::parse(&inner[..i])?;
            let right = FamilySpec::parse(&inner[i + 1..])?;
            return Ok(FamilySpec::Product(Box::new(left), Box::new(right)));
        }
        let (head, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::BadParam(format!("missing `:` in family `{s}`")))?;
        let uint = |what: &str| -> Result<u64, Error> {
            what.parse::<u64>()
                .map_err(|_| Error::BadParam(format!("`{what}` is not a positive integer")))
        };
        let level = |what: &str| -> Result<u32, Error> {
            what.parse::<u32>()
                .map_err(|_| Error::BadParam(format!("`{what}` is not a level")))
        };
        match head {
            "cyclic" => Ok(FamilySpec::Cyclic(uint(arg)?)),
            "dihedral" => Ok(FamilySpec::Dihedral(uint(arg)?)),
            "dicyclic" => Ok(FamilySpec::Dicyclic(uint(arg)?)),
            "genq" => Ok(FamilySpec::GenQuaternion(level(arg)?)),
            "prufer" => Ok(FamilySpec::PruferTrunc(level(arg)?)),
            "lq" => Ok(FamilySpec::LocallyQuaternionTrunc(level(arg)?)),
            "ld" => Ok(FamilySpec::LocallyDihedralTrunc(level(arg)?)),
            "dinf" => {
                let (a, b) = arg
                    .split_once("..")
                    .ok_or_else(|| Error::BadParam(format!("`dinf` wants a range, got `{arg}`")))?;
                let a: i64 = a
                    .parse()
                    .map_err(|_| Error::BadParam(format!("bad range start `{a}`")))?;
                let b: i64 = b
                    .parse()
                    .map_err(|_| Error::BadParam(format!("bad range end `{b}`")))?;
                if a > b {
                    return Err(Error::BadParam(format!("empty range `{arg}`")));
                }
                Ok(FamilySpec::InfiniteDihedralWindow((a..=b).collect()))
            }
            "qinf" => {
                if arg == "default" {
                    Ok(FamilySpec::InfiniteQuaternionWindow(default_qinf_window()))
                } else if let Some(path) = arg.strip_prefix('@') {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::BadParam(format!("cannot read param file `{path}`: {e}"))
                    })?;
                    Ok(FamilySpec::InfiniteQuaternionWindow(parse_qinf_params(
                        &text,
                    )?))
                } else {
                    Err(Error::BadParam(format!(
                        "`qinf` wants `default` or `@file`, got `{arg}`"
                    )))
                }
            }
            _ => Err(Error::BadParam(format!("unknown family `{head}`"))),
        }
    }

    /// Canonical textual form; parses back to the same spec for every
    /// CLI-expressible family.
    pub fn canonical(&self) -> String {
        match self {
            FamilySpec::Cyclic(n) => format!("cyclic:{n}"),
            FamilySpec::Dihedral(m) => format!("dihedral:{m}"),
            FamilySpec::Dicyclic(m) => format!("dicyclic:{m}"),
            FamilySpec::GenQuaternion(n) => format!("genq:{n}"),
            FamilySpec::Product(l, r) => format!("prod({},{})", l.canonical(), r.canonical()),
            FamilySpec::PruferTrunc(k) => format!("prufer:{k}"),
            FamilySpec::LocallyQuaternionTrunc(n) => format!("lq:{n}"),
            FamilySpec::LocallyDihedralTrunc(n) => format!("ld:{n}"),
            FamilySpec::InfiniteDihedralWindow(shifts) => {
                let contiguous = shifts.windows(2).all(|w| w[1] == w[0] + 1);
                if contiguous && !shifts.is_empty() {
                    format!("dinf:{}..{}", shifts[0], shifts[shifts.len() - 1])
                } else {
                    let parts: Vec<String> = shifts.iter().map(|s| s.to_string()).collect();
                    format!("dinf:[{}]", parts.join(","))
                }
            }
            FamilySpec::InfiniteQuaternionWindow(params) => {
                let parts: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                format!("qinf:({})", parts.join("|"))
            }
        }
    }
}

/// Parses one toral parameter per non-empty, non-`#` line.
pub fn parse_qinf_params(text: &str) -> Result<Vec<ToralParam>, Error> {
    let mut params = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        params.push(parse_toral(line)?);
    }
    if params.is_empty() {
        return Err(Error::BadParam("empty parameter list".into()));
    }
    Ok(params)
}

/// Parses `num/den;v1,v2,...`.
pub fn parse_toral(s: &str) -> Result<ToralParam, Error> {
    let (angle_part, free_part) = s
        .split_once(';')
        .ok_or_else(|| Error::BadParam(format!("missing `;` in parameter `{s}`")))?;
    let (num, den) = angle_part
        .split_once('/')
        .ok_or_else(|| Error::BadParam(format!("angle `{angle_part}` is not `num/den`")))?;
    let num: i64 = num
        .trim()
        .parse()
        .map_err(|_| Error::BadParam(format!("bad numerator in `{s}`")))?;
    let den: i64 = den
        .trim()
        .parse()
        .map_err(|_| Error::BadParam(format!("bad denominator in `{s}`")))?;
    if den == 0 {
        return Err(Error::BadParam(format!("zero denominator in `{s}`")));
    }
    let free = free_part
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| Error::BadParam(format!("bad free coordinate `{v}` in `{s}`")))
        })
        .collect::<Result<Vec<i64>, Error>>()?;
    Ok(ToralParam::new(RationalAngle::new(num, den), free))
}

/// Default window into the infinite quaternion group: the identity, the
/// involution, two torsion parameters, a free generator with its double and
/// triple, an independent second free generator, and their sum.
pub fn default_qinf_window() -> Vec<ToralParam> {
    let k = DEFAULT_FREE_RANK;
    let mut params = vec![
        ToralParam::identity(k),
        ToralParam::minus_one(k),
        ToralParam::torsion(RationalAngle::new(1, 3), k),
        ToralParam::torsion(RationalAngle::new(1, 4), k),
    ];
    let g = ToralParam::new(RationalAngle::ZERO, vec![1, 0]);
    let h = ToralParam::new(RationalAngle::ZERO, vec![0, 1]);
    params.push(g.times(2));
    params.push(g.times(3));
    params.push(g.mul(&h).unwrap());
    params.push(g);
    params.push(h);
    params
}

fn int_param(n: u64, what: &str) -> Result<i64, Error> {
    if n == 0 {
        return Err(Error::BadParam(format!("{what} must be positive")));
    }
    i64::try_from(n).map_err(|_| Error::BadParam(format!("{what} {n} too large")))
}

fn pow2(k: u32, what: &str) -> Result<i64, Error> {
    if k >= 32 {
        return Err(Error::BadParam(format!("{what} level {k} too large")));
    }
    Ok(1i64 << k)
}

/// Builds the finite view for a family spec: deterministic element order,
/// truncations marked closed, windows marked open.
pub fn build_family(spec: &FamilySpec) -> Result<FiniteGroupView, Error> {
    let label = spec.canonical();
    match spec {
        FamilySpec::Cyclic(n) => {
            let n = int_param(*n, "cyclic order")?;
            let elems = (0..n)
                .map(|i| GroupElement::Cyclic {
                    angle: RationalAngle::new(i, n),
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::Dihedral(m) => {
            let m = int_param(*m, "dihedral parameter")?;
            let elems = (0..m)
                .flat_map(|i| {
                    [false, true].map(|flip| GroupElement::Dihedral {
                        angle: RationalAngle::new(i, m),
                        flip,
                    })
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::Dicyclic(m) => {
            let m = int_param(*m, "dicyclic parameter")?;
            let two_m = m.checked_mul(2).expect("dicyclic parameter overflow");
            let elems = (0..two_m)
                .flat_map(|i| {
                    [false, true].map(|jpart| GroupElement::Dicyclic {
                        angle: RationalAngle::new(i, two_m),
                        jpart,
                    })
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::GenQuaternion(n) => {
            if *n == 0 {
                return Err(Error::BadParam("genq level must be positive".into()));
            }
            let m = pow2(n - 1, "genq")? as u64;
            let mut view = build_family(&FamilySpec::Dicyclic(m))?;
            view = FiniteGroupView::new(label, view.elements().to_vec(), true)?;
            Ok(view)
        }
        FamilySpec::PruferTrunc(k) => {
            if *k == 0 {
                return Err(Error::BadParam("prufer level must be positive".into()));
            }
            let n = pow2(*k, "prufer")?;
            let elems = (0..n)
                .map(|i| GroupElement::Cyclic {
                    angle: RationalAngle::new(i, n),
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::LocallyQuaternionTrunc(n) => {
            if *n == 0 {
                return Err(Error::BadParam("lq level must be positive".into()));
            }
            let size = pow2(*n, "lq")?;
            let elems = (0..size)
                .flat_map(|i| {
                    [false, true].map(|jpart| GroupElement::LocallyQuaternion {
                        angle: DyadicAngle::from_parts(i, *n),
                        jpart,
                    })
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::LocallyDihedralTrunc(n) => {
            if *n == 0 {
                return Err(Error::BadParam("ld level must be positive".into()));
            }
            let size = pow2(*n, "ld")?;
            let elems = (0..size)
                .flat_map(|i| {
                    [false, true].map(|flip| GroupElement::LocallyDihedral {
                        angle: DyadicAngle::from_parts(i, *n),
                        flip,
                    })
                })
                .collect();
            FiniteGroupView::new(label, elems, true)
        }
        FamilySpec::InfiniteDihedralWindow(shifts) => {
            let mut shifts = shifts.clone();
            shifts.sort_unstable();
            shifts.dedup();
            if !shifts.contains(&0) {
                return Err(Error::BadParam(
                    "window must contain the identity shift 0".into(),
                ));
            }
            let elems = shifts
                .iter()
                .flat_map(|&shift| {
                    [false, true].map(|flip| GroupElement::InfiniteDihedral { shift, flip })
                })
                .collect();
            FiniteGroupView::new(label, elems, false)
        }
        FamilySpec::InfiniteQuaternionWindow(params) => {
            let mut params = params.clone();
            params.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
            params.dedup();
            let rank = params
                .first()
                .ok_or_else(|| Error::BadParam("empty parameter list".into()))?
                .rank();
            if let Some(p) = params.iter().find(|p| p.rank() != rank) {
                return Err(Error::MismatchedRank(rank, p.rank()));
            }
            if !params.iter().any(ToralParam::is_identity) {
                return Err(Error::BadParam(
                    "window must contain the identity parameter".into(),
                ));
            }
            let elems = params
                .iter()
                .flat_map(|p| {
                    [false, true].map(|jpart| GroupElement::InfiniteQuaternion {
                        param: p.clone(),
                        jpart,
                    })
                })
                .collect();
            FiniteGroupView::new(label, elems, false)
        }
        FamilySpec::Product(l, r) => {
            let lv = build_family(l)?;
            let rv = build_family(r)?;
            if !lv.is_closed() || !rv.is_closed() {
                return Err(Error::BadParam(
                    "product factors must be closed groups, not windows".into(),
                ));
            }
            let mut elems = Vec::with_capacity(lv.len() * rv.len());
            for a in lv.elements() {
                for b in rv.elements() {
                    elems.push(GroupElement::Product(
                        Box::new(a.clone()),
                        Box::new(b.clone()),
                    ));
                }
            }
            FiniteGroupView::new(label, elems, true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_element::Order;

    #[test]
    fn parse_round_trips() {
        for s in [
            "cyclic:12",
            "dihedral:8",
            "dicyclic:3",
            "genq:4",
            "prufer:3",
            "lq:4",
            "ld:4",
            "dinf:0..7",
            "dinf:-1..2",
            "prod(cyclic:2,cyclic:3)",
            "prod(prod(cyclic:2,cyclic:2),cyclic:5)",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.canonical(), s);
            assert_eq!(FamilySpec::parse(&spec.canonical()).unwrap(), spec);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in [
            "",
            "cyclic",
            "cyclic:x",
            "dinf:5",
            "dinf:3..1",
            "prod(cyclic:2)",
            "nope:3",
        ] {
            assert!(FamilySpec::parse(s).is_err(), "`{s}` should not parse");
        }
    }

    #[test]
    fn truncation_sizes() {
        assert_eq!(build("cyclic:6").len(), 6);
        assert_eq!(build("dihedral:4").len(), 8);
        assert_eq!(build("dicyclic:3").len(), 12);
        // level-3 locally quaternion truncation is Q16
        assert_eq!(build("lq:3").len(), 16);
        assert_eq!(build("ld:4").len(), 32);
        assert_eq!(build("genq:3").len(), 16);
        assert_eq!(build("prufer:5").len(), 32);
        assert_eq!(build("prod(cyclic:2,cyclic:3)").len(), 6);
    }

    #[test]
    fn window_sizes_and_markers() {
        let w = build("dinf:-1..2");
        assert_eq!(w.len(), 8);
        assert!(!w.is_closed());
        let q = build_family(&FamilySpec::InfiniteQuaternionWindow(default_qinf_window())).unwrap();
        assert_eq!(q.len(), 2 * default_qinf_window().len());
        assert!(!q.is_closed());
    }

    #[test]
    fn windows_must_contain_identity() {
        assert!(build_family(&FamilySpec::InfiniteDihedralWindow(vec![1, 2])).is_err());
        let p = ToralParam::new(RationalAngle::new(1, 2), vec![0, 0]);
        assert!(build_family(&FamilySpec::InfiniteQuaternionWindow(vec![p])).is_err());
    }

    #[test]
    fn bad_params_are_rejected() {
        assert!(build_family(&FamilySpec::Cyclic(0)).is_err());
        assert!(build_family(&FamilySpec::GenQuaternion(0)).is_err());
        assert!(FamilySpec::parse("qinf:nope").is_err());
    }

    #[test]
    fn truncations_are_closed_under_multiplication() {
        for s in [
            "cyclic:6",
            "dihedral:4",
            "dicyclic:3",
            "genq:3",
            "lq:3",
            "ld:3",
            "prufer:4",
            "prod(cyclic:2,cyclic:3)",
        ] {
            let v = build(s);
            for i in 0..v.len() {
                for j in 0..v.len() {
                    let p = v.mul_elem(i, j);
                    assert!(v.index_of(&p).is_some(), "{s}: product escapes the view");
                }
                assert!(v.index_of(&v.element(i).inv()).is_some());
            }
        }
    }

    #[test]
    fn genq_equals_lq_truncation_table() {
        // same multiplication table under the coordinate identification
        for n in 2..=4u32 {
            let genq = build(&format!("genq:{n}"));
            let lq = build(&format!("lq:{n}"));
            assert_eq!(genq.len(), lq.len());
            let translate = |e: &GroupElement| -> GroupElement {
                match e {
                    GroupElement::Dicyclic { angle, jpart } => GroupElement::LocallyQuaternion {
                        angle: DyadicAngle::new(*angle).unwrap(),
                        jpart: *jpart,
                    },
                    _ => unreachable!(),
                }
            };
            for i in 0..genq.len() {
                assert_eq!(translate(genq.element(i)), *lq.element(i));
                for j in 0..genq.len() {
                    let p = translate(&genq.mul_elem(i, j));
                    assert_eq!(p, lq.mul_elem(i, j));
                }
            }
        }
    }

    #[test]
    fn involution_census() {
        // locally quaternion truncations have a unique involution; locally
        // dihedral truncations have 2^n + 1 of them
        for n in 1..=6u32 {
            let lq = build(&format!("lq:{n}"));
            let count = (0..lq.len())
                .filter(|&i| lq.element(i).order() == Order::Finite(2))
                .count();
            assert_eq!(count, 1, "lq:{n}");
            let ld = build(&format!("ld:{n}"));
            let count = (0..ld.len())
                .filter(|&i| ld.element(i).order() == Order::Finite(2))
                .count();
            assert_eq!(count, (1 << n) + 1, "ld:{n}");
        }
    }

    #[test]
    fn closed_form_orders_match_brute_force_on_all_small_truncations() {
        // every truncation family at sizes up to 64 elements
        let mut specs: Vec<String> = Vec::new();
        specs.extend((1..=12).map(|n| format!("cyclic:{n}")));
        specs.extend((1..=16).map(|m| format!("dihedral:{m}")));
        specs.extend((1..=8).map(|m| format!("dicyclic:{m}")));
        specs.extend((2..=5).map(|n| format!("genq:{n}")));
        specs.extend((1..=6).map(|k| format!("prufer:{k}")));
        specs.extend((1..=5).map(|n| format!("lq:{n}")));
        specs.extend((1..=5).map(|n| format!("ld:{n}")));
        specs.push("prod(cyclic:6,cyclic:10)".into());
        for s in &specs {
            let v = build(s);
            assert!(v.len() <= 64, "{s}");
            for i in 0..v.len() {
                let x = v.element(i);
                let mut acc = x.clone();
                let mut m = 1u64;
                while !acc.is_identity() {
                    acc = acc.mul(x).unwrap();
                    m += 1;
                }
                assert_eq!(x.order(), Order::Finite(m), "{s}: order of {x:?}");
            }
        }
    }

    #[test]
    fn associativity_on_sampled_triples() {
        for s in [
            "dicyclic:3",
            "lq:3",
            "ld:3",
            "dihedral:5",
            "prod(cyclic:2,cyclic:3)",
        ] {
            let v = build(s);
            let n = v.len();
            for i in (0..n).step_by(3) {
                for j in (0..n).step_by(2) {
                    for k in 0..n {
                        let left = v.mul_elem(i, j).mul(v.element(k)).unwrap();
                        let right = v.element(i).mul(&v.mul_elem(j, k)).unwrap();
                        assert_eq!(left, right, "{s} ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic_element_order_is_prefix_stable() {
        let small = build("lq:3");
        let big = build("lq:4");
        // rotations of level 3 are a prefix of level 4's rotations
        for i in 0..8 {
            assert_eq!(small.label(i), big.label(i));
        }
    }

    #[test]
    fn qinf_param_parsing() {
        let params = parse_qinf_params("# comment\n0/1;0,0\n1/2;0,0\n\n0/1;1,0\n").unwrap();
        assert_eq!(params.len(), 3);
        assert_eq!(params[0], ToralParam::identity(2));
        assert!(parse_toral("1/2").is_err());
        assert!(parse_toral("x/2;0,0").is_err());
        assert!(parse_toral("1/0;0,0").is_err());
    }

    fn build(s: &str) -> FiniteGroupView {
        build_family(&FamilySpec::parse(s).unwrap()).unwrap()
    }
}
