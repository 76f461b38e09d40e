//! Exact arithmetic in the circle group ℚ/ℤ.
//!
//! Angles are fractions of a full turn kept in canonical form (`0 <= num <
//! den`, `gcd(num, den) = 1`), so structural equality is group equality and
//! the additive order of an angle is its denominator. All arithmetic is
//! checked; overflow is a hard failure, never a silent wrap.

use std::fmt;

use num_integer::Integer;

use crate::error::Error;

/// An element of ℚ/ℤ in lowest terms. Zero is `0/1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

// `add`/`neg`/`sub` are the group operations, deliberately plain methods:
// the operands are angles mod 1, not numbers.
#[allow(clippy::should_implement_trait)]
impl RationalAngle {
    pub const ZERO: RationalAngle = RationalAngle { num: 0, den: 1 };
    /// The unique element of order 2, written `z` below.
    pub const HALF: RationalAngle = RationalAngle { num: 1, den: 2 };

    /// Canonical representative of `num/den` mod 1.
    ///
    /// Panics on `den == 0`; a zero denominator is a programming error, not
    /// a data condition.
    pub fn new(num: i64, den: i64) -> RationalAngle {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den) as u64;
        let den = den as u64;
        let g = num.gcd(&den);
        RationalAngle {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// `self + other` mod 1.
    pub fn add(self, other: RationalAngle) -> RationalAngle {
        // u64 inputs cannot overflow an u128 cross product.
        let num = self.num as u128 * other.den as u128 + other.num as u128 * self.den as u128;
        let den = self.den as u128 * other.den as u128;
        Self::reduce128(num % den, den)
    }

    /// Additive inverse mod 1.
    pub fn neg(self) -> RationalAngle {
        if self.num == 0 {
            self
        } else {
            RationalAngle {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    pub fn sub(self, other: RationalAngle) -> RationalAngle {
        self.add(other.neg())
    }

    /// Integer multiple `k·self` mod 1, `k` of either sign.
    pub fn times(self, k: i64) -> RationalAngle {
        let k = k.rem_euclid(self.den as i64) as u128;
        let num = k * self.num as u128;
        let den = self.den as u128;
        Self::reduce128(num % den, den)
    }

    /// The additive order: the least `m >= 1` with `m·self = 0`.
    pub fn order(self) -> u64 {
        self.den
    }

    fn reduce128(num: u128, den: u128) -> RationalAngle {
        let g = num.gcd(&den);
        let num = num / g;
        let den = den / g;
        RationalAngle {
            num: u64::try_from(num).expect("angle numerator overflow"),
            den: u64::try_from(den).expect("angle denominator overflow"),
        }
    }

    /// Deterministic listing key; orders by denominator first, so the
    /// elements of a truncation at level `n` are a prefix of level `n+1`.
    pub fn sort_key(self) -> (u64, u64) {
        (self.den, self.num)
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// An angle whose denominator is a power of two. These are exactly the
/// elements of the Prüfer 2-group, the rotation part of the locally
/// quaternion and locally dihedral families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyadicAngle(RationalAngle);

#[allow(clippy::should_implement_trait)]
impl DyadicAngle {
    pub const ZERO: DyadicAngle = DyadicAngle(RationalAngle::ZERO);
    pub const HALF: DyadicAngle = DyadicAngle(RationalAngle::HALF);

    pub fn new(angle: RationalAngle) -> Result<DyadicAngle, Error> {
        if angle.den().is_power_of_two() {
            Ok(DyadicAngle(angle))
        } else {
            Err(Error::BadParam(format!(
                "denominator of {angle} is not a power of two"
            )))
        }
    }

    /// `num / 2^k`, canonicalized.
    pub fn from_parts(num: i64, k: u32) -> DyadicAngle {
        DyadicAngle(RationalAngle::new(num, 1i64 << k))
    }

    pub fn angle(self) -> RationalAngle {
        self.0
    }

    // Sums and inverses of dyadic angles are dyadic, so these stay closed.
    pub fn add(self, other: DyadicAngle) -> DyadicAngle {
        DyadicAngle(self.0.add(other.0))
    }

    pub fn neg(self) -> DyadicAngle {
        DyadicAngle(self.0.neg())
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn order(self) -> u64 {
        self.0.order()
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
