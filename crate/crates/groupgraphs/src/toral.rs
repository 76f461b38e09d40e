//! The parameter group ℚ/ℤ ⊕ ℤᵏ of the infinite quaternion family, and the
//! two-generator cyclicity decision for its finitely generated subgroups.
//!
//! Multiplicative parameters `a` are stored additively: the torsion part is
//! a [`RationalAngle`] (so `a` a primitive n-th root of unity has angle of
//! order n) and the free part is an integer vector recording independent
//! infinite-order factors. The scalar `-1` is `(1/2, 0)`.

use std::fmt;

use num_integer::Integer;

use crate::angle::RationalAngle;
use crate::error::Error;
use crate::group_element::Order;

/// Default free rank. Rank 2 suffices to witness every obstruction used by
/// the equality characterizations (ℤ, ℤ×ℤ and ℤ×C_p all embed).
pub const DEFAULT_FREE_RANK: usize = 2;

/// An element of ℚ/ℤ ⊕ ℤᵏ, written additively.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToralParam {
    angle: RationalAngle,
    free: Vec<i64>,
}

impl ToralParam {
    pub fn new(angle: RationalAngle, free: Vec<i64>) -> ToralParam {
        ToralParam { angle, free }
    }

    /// The identity of rank `k`.
    pub fn identity(k: usize) -> ToralParam {
        ToralParam::new(RationalAngle::ZERO, vec![0; k])
    }

    /// The parameter `-1`, i.e. `(1/2, 0)`.
    pub fn minus_one(k: usize) -> ToralParam {
        ToralParam::new(RationalAngle::HALF, vec![0; k])
    }

    /// Pure torsion parameter of the given rank.
    pub fn torsion(angle: RationalAngle, k: usize) -> ToralParam {
        ToralParam::new(angle, vec![0; k])
    }

    pub fn angle(&self) -> RationalAngle {
        self.angle
    }

    pub fn free(&self) -> &[i64] {
        &self.free
    }

    pub fn rank(&self) -> usize {
        self.free.len()
    }

    pub fn is_identity(&self) -> bool {
        self.angle.is_zero() && self.free_is_zero()
    }

    pub fn free_is_zero(&self) -> bool {
        self.free.iter().all(|&v| v == 0)
    }

    fn check_rank(&self, other: &ToralParam) -> Result<(), Error> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::MismatchedRank(self.rank(), other.rank()))
        }
    }

    /// Componentwise sum (the group operation, multiplicative in `a`).
    pub fn mul(&self, other: &ToralParam) -> Result<ToralParam, Error> {
        self.check_rank(other)?;
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(a, b)| a.checked_add(*b).expect("free part overflow"))
            .collect();
        Ok(ToralParam::new(self.angle.add(other.angle), free))
    }

    pub fn inv(&self) -> ToralParam {
        let free = self
            .free
            .iter()
            .map(|&v| v.checked_neg().expect("free part overflow"))
            .collect();
        ToralParam::new(self.angle.neg(), free)
    }

    /// `k`-fold sum.
    pub fn times(&self, k: i64) -> ToralParam {
        let free = self
            .free
            .iter()
            .map(|&v| v.checked_mul(k).expect("free part overflow"))
            .collect();
        ToralParam::new(self.angle.times(k), free)
    }

    /// Order of the cyclic group generated: the angle's order when the free
    /// part vanishes, infinite otherwise.
    pub fn order(&self) -> Order {
        if self.free_is_zero() {
            Order::Finite(self.angle.order())
        } else {
            Order::Infinite
        }
    }

    /// Deterministic listing key: angle first, then the free vector.
    pub fn sort_key(&self) -> ((u64, u64), &[i64]) {
        (self.angle.sort_key(), &self.free)
    }
}

impl fmt::Display for ToralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.angle)?;
        for (i, v) in self.free.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ToralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rank of the span of two integer vectors.
pub fn free_rank_pair(v1: &[i64], v2: &[i64]) -> u8 {
    let z1 = v1.iter().all(|&v| v == 0);
    let z2 = v2.iter().all(|&v| v == 0);
    if z1 && z2 {
        return 0;
    }
    if z1 || z2 {
        return 1;
    }
    // both nonzero: rank 1 iff all 2x2 minors vanish
    for i in 0..v1.len() {
        for j in (i + 1)..v1.len() {
            let minor = v1[i] as i128 * v2[j] as i128 - v1[j] as i128 * v2[i] as i128;
            if minor != 0 {
                return 2;
            }
        }
    }
    1
}

/// Primitive generator `(u1, u2)` of the kernel of `(m1, m2) -> m1·v1 + m2·v2`
/// when the pair has rank 1. Sign convention: first nonzero coordinate
/// positive.
fn kernel_generator(v1: &[i64], v2: &[i64]) -> (i64, i64) {
    let z1 = v1.iter().all(|&v| v == 0);
    let z2 = v2.iter().all(|&v| v == 0);
    if z1 {
        return (1, 0);
    }
    if z2 {
        return (0, 1);
    }
    // v1 = c1·w, v2 = c2·w with w primitive
    let g1 = v1
        .iter()
        .map(|v| v.unsigned_abs())
        .fold(0u64, |a, b| a.gcd(&b)) as i64;
    let lead = v1.iter().copied().find(|&v| v != 0).unwrap();
    let c1 = if lead > 0 { g1 } else { -g1 };
    let w: Vec<i64> = v1.iter().map(|&v| v / c1).collect();
    let i = w.iter().position(|&v| v != 0).unwrap();
    debug_assert_eq!(v2[i] % w[i], 0);
    let c2 = v2[i] / w[i];
    let g = c1.unsigned_abs().gcd(&c2.unsigned_abs()) as i64;
    let (u1, u2) = (c2 / g, -(c1 / g));
    if u1 > 0 || (u1 == 0 && u2 > 0) {
        (u1, u2)
    } else {
        (-u1, -u2)
    }
}

/// Decides whether the subgroup of ℚ/ℤ ⊕ ℤᵏ generated by `x` and `y` is
/// cyclic (finite cyclic or infinite cyclic).
///
/// With `r` the rank of the two free parts: `r = 2` is never cyclic,
/// `r = 0` always is (ℚ/ℤ is locally cyclic), and for `r = 1` the subgroup
/// is `ℤ ⊕ T` with torsion `T` generated by `u1·angle(x) + u2·angle(y)`
/// where `(u1, u2)` spans the kernel of the free-part map; it is cyclic
/// exactly when that torsion residue vanishes.
pub fn cyclic_two_gen_abelian(x: &ToralParam, y: &ToralParam) -> Result<bool, Error> {
    if x.rank() != y.rank() {
        return Err(Error::MismatchedRank(x.rank(), y.rank()));
    }
    match free_rank_pair(x.free(), y.free()) {
        2 => Ok(false),
        0 => Ok(true),
        _ => {
            let (u1, u2) = kernel_generator(x.free(), y.free());
            let residue = x.angle().times(u1).add(y.angle().times(u2));
            Ok(residue.is_zero())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn t(num: i64, den: i64, free: &[i64]) -> ToralParam {
        ToralParam::new(RationalAngle::new(num, den), free.to_vec())
    }

    #[test]
    fn minus_one_squares_to_identity() {
        let m = ToralParam::minus_one(2);
        assert_eq!(m.mul(&m).unwrap(), ToralParam::identity(2));
    }

    #[test]
    fn order_of_primitive_root() {
        assert_eq!(t(1, 6, &[0, 0]).order(), Order::Finite(6));
        assert_eq!(t(0, 1, &[1, 0]).order(), Order::Infinite);
        assert_eq!(ToralParam::identity(2).order(), Order::Finite(1));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = t(0, 1, &[1]);
        let b = t(0, 1, &[1, 0]);
        assert_eq!(a.mul(&b), Err(Error::MismatchedRank(1, 2)));
        assert_eq!(
            cyclic_two_gen_abelian(&a, &b),
            Err(Error::MismatchedRank(1, 2))
        );
    }

    #[test]
    fn kernel_generator_conventions() {
        assert_eq!(kernel_generator(&[0, 0], &[3, 0]), (1, 0));
        assert_eq!(kernel_generator(&[3, 0], &[0, 0]), (0, 1));
        assert_eq!(kernel_generator(&[2, 0], &[3, 0]), (3, -2));
        assert_eq!(kernel_generator(&[-2, 4], &[1, -2]), (1, 2));
        // same generator twice
        assert_eq!(kernel_generator(&[5, 1], &[5, 1]), (1, -1));
    }

    #[test]
    fn torsion_pairs_are_cyclic() {
        assert!(cyclic_two_gen_abelian(&t(1, 3, &[0, 0]), &t(1, 4, &[0, 0])).unwrap());
    }

    #[test]
    fn independent_free_generators_are_not_cyclic() {
        assert!(!cyclic_two_gen_abelian(&t(0, 1, &[1, 0]), &t(0, 1, &[0, 1])).unwrap());
    }

    #[test]
    fn torsion_next_to_free_is_not_cyclic() {
        // <(1/2, 0), (0, e1)> is Z x C2
        assert!(!cyclic_two_gen_abelian(&t(1, 2, &[0, 0]), &t(0, 1, &[1, 0])).unwrap());
    }

    #[test]
    fn multiples_of_one_generator_are_cyclic() {
        let g = t(1, 4, &[3, -1]);
        assert!(cyclic_two_gen_abelian(&g, &g).unwrap());
        assert!(cyclic_two_gen_abelian(&g.times(2), &g.times(3)).unwrap());
        assert!(cyclic_two_gen_abelian(&g, &g.inv()).unwrap());
    }

    #[test]
    fn parallel_free_parts_with_bad_torsion_are_not_cyclic() {
        // x = (1/2, e1), y = (0, 2·e1): kernel (2, -1), residue 2·(1/2) - 0 = 0 → cyclic
        assert!(cyclic_two_gen_abelian(&t(1, 2, &[1, 0]), &t(0, 1, &[2, 0])).unwrap());
        // x = (1/3, e1), y = (0, 2·e1): residue 2/3 ≠ 0 → not cyclic
        assert!(!cyclic_two_gen_abelian(&t(1, 3, &[1, 0]), &t(0, 1, &[2, 0])).unwrap());
    }

    /// Exhaustive oracle on torsion pairs: enumerate the subgroup of ℚ/ℤ
    /// generated by both angles and test cyclicity by order census.
    #[test]
    fn torsion_pairs_agree_with_enumeration_oracle() {
        for dx in 1..=12i64 {
            for nx in 0..dx {
                for dy in 1..=12i64 {
                    for ny in 0..dy {
                        let x = RationalAngle::new(nx, dx);
                        let y = RationalAngle::new(ny, dy);
                        let mut seen: BTreeSet<RationalAngle> = BTreeSet::new();
                        let mut frontier = vec![RationalAngle::ZERO];
                        while let Some(e) = frontier.pop() {
                            if seen.insert(e) {
                                frontier.push(e.add(x));
                                frontier.push(e.add(y));
                            }
                        }
                        let cyclic = seen.iter().any(|e| e.order() as usize == seen.len());
                        let got = cyclic_two_gen_abelian(
                            &ToralParam::torsion(x, 2),
                            &ToralParam::torsion(y, 2),
                        )
                        .unwrap();
                        assert_eq!(got, cyclic, "x={x} y={y}");
                    }
                }
            }
        }
    }
}
