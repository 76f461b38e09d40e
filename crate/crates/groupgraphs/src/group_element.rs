//! Elements of the supported group families and their multiplication laws.
//!
//! Every family with a flip or j part is a (possibly twisted) extension of
//! an abelian rotation group `C` by an involution image: writing elements as
//! pairs `(c, α)` with `α ∈ {0, 1}`, multiplication is the semidirect law
//!
//! ```text
//! (c1, α1)·(c2, α2) = (c1 + (-1)^{α1}·c2, α1 ⊕ α2)
//! ```
//!
//! with one extra central summand `z` (the angle `1/2`) whenever
//! `α1 = α2 = 1` in the quaternionic families, where the odd-part generator
//! squares to `z` instead of to the identity. Dihedral-type flips therefore
//! have order 2 and quaternionic j-type elements order 4.
//!
//! A remark on the quaternionic j coset: for `p = (a, 1)` the generated
//! cyclic group is `{1, z, (a, 1), (a + 1/2, 1)}`. In multiplicative
//! parameter notation the fourth element is `x_{-a}·j`, which coincides with
//! `x_{a^{-1}}·j` only when `a² = -1`; the law implemented here is the one
//! forced by the relations `j² = z`, `j·x_a·j⁻¹ = x_{a⁻¹}`.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::angle::{DyadicAngle, RationalAngle};
use crate::error::Error;
use crate::toral::ToralParam;

/// Order of a group element: finite, or infinite for translations and free
/// toral parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn lcm(self, other: Order) -> Order {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a.lcm(&b)),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// An element of one of the supported families.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// Rotation `c` in a finite cyclic group (angle denominator divides the
    /// group order).
    Cyclic { angle: RationalAngle },
    /// `r^i·s^flip` in the dihedral group of order `2m`; angle `i/m`.
    Dihedral { angle: RationalAngle, flip: bool },
    /// `h^i·x^jpart` in the dicyclic group of order `4m`; angle `i/2m`.
    Dicyclic { angle: RationalAngle, jpart: bool },
    /// `c·s^flip` in the locally dihedral group; `c` dyadic.
    LocallyDihedral { angle: DyadicAngle, flip: bool },
    /// `c·x^jpart` in the locally quaternion group; `c` dyadic.
    LocallyQuaternion { angle: DyadicAngle, jpart: bool },
    /// `r^shift·t^flip` in the infinite dihedral group.
    InfiniteDihedral { shift: i64, flip: bool },
    /// `x_param·j^jpart` in the infinite quaternion group.
    InfiniteQuaternion { param: ToralParam, jpart: bool },
    /// Element of a direct product.
    Product(Box<GroupElement>, Box<GroupElement>),
}

use GroupElement::*;

impl GroupElement {
    pub fn family_name(&self) -> &'static str {
        match self {
            Cyclic { .. } => "cyclic",
            Dihedral { .. } => "dihedral",
            Dicyclic { .. } => "dicyclic",
            LocallyDihedral { .. } => "locally-dihedral",
            LocallyQuaternion { .. } => "locally-quaternion",
            InfiniteDihedral { .. } => "infinite-dihedral",
            InfiniteQuaternion { .. } => "infinite-quaternion",
            Product(..) => "product",
        }
    }

    /// Group multiplication under the family's presentation relations.
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement, Error> {
        match (self, other) {
            (Cyclic { angle: a }, Cyclic { angle: b }) => Ok(Cyclic { angle: a.add(*b) }),
            (Dihedral { angle: a, flip: f1 }, Dihedral { angle: b, flip: f2 }) => {
                let (angle, flip) = semidirect(*a, *f1, *b, *f2, false);
                Ok(Dihedral { angle, flip })
            }
            (
                Dicyclic {
                    angle: a,
                    jpart: j1,
                },
                Dicyclic {
                    angle: b,
                    jpart: j2,
                },
            ) => {
                let (angle, jpart) = semidirect(*a, *j1, *b, *j2, true);
                Ok(Dicyclic { angle, jpart })
            }
            (LocallyDihedral { angle: a, flip: f1 }, LocallyDihedral { angle: b, flip: f2 }) => {
                let (angle, flip) = semidirect(a.angle(), *f1, b.angle(), *f2, false);
                Ok(LocallyDihedral {
                    angle: DyadicAngle::new(angle).expect("dyadic angles are closed under the law"),
                    flip,
                })
            }
            (
                LocallyQuaternion {
                    angle: a,
                    jpart: j1,
                },
                LocallyQuaternion {
                    angle: b,
                    jpart: j2,
                },
            ) => {
                let (angle, jpart) = semidirect(a.angle(), *j1, b.angle(), *j2, true);
                Ok(LocallyQuaternion {
                    angle: DyadicAngle::new(angle).expect("dyadic angles are closed under the law"),
                    jpart,
                })
            }
            (InfiniteDihedral { shift: n, flip: f1 }, InfiniteDihedral { shift: m, flip: f2 }) => {
                let signed = if *f1 { -*m } else { *m };
                Ok(InfiniteDihedral {
                    shift: n.checked_add(signed).expect("shift overflow"),
                    flip: f1 ^ f2,
                })
            }
            (
                InfiniteQuaternion {
                    param: p,
                    jpart: j1,
                },
                InfiniteQuaternion {
                    param: q,
                    jpart: j2,
                },
            ) => {
                let twisted = if *j1 { q.inv() } else { q.clone() };
                let mut param = p.mul(&twisted)?;
                if *j1 && *j2 {
                    param = param.mul(&ToralParam::minus_one(param.rank()))?;
                }
                Ok(InfiniteQuaternion {
                    param,
                    jpart: j1 ^ j2,
                })
            }
            (Product(l1, r1), Product(l2, r2)) => {
                Ok(Product(Box::new(l1.mul(l2)?), Box::new(r1.mul(r2)?)))
            }
            _ => Err(Error::FamilyMismatch(
                self.family_name(),
                other.family_name(),
            )),
        }
    }

    /// Group inverse.
    pub fn inv(&self) -> GroupElement {
        match self {
            Cyclic { angle } => Cyclic { angle: angle.neg() },
            // dihedral-type flips are involutions
            Dihedral { angle, flip: false } => Dihedral {
                angle: angle.neg(),
                flip: false,
            },
            Dihedral { angle, flip: true } => Dihedral {
                angle: *angle,
                flip: true,
            },
            Dicyclic {
                angle,
                jpart: false,
            } => Dicyclic {
                angle: angle.neg(),
                jpart: false,
            },
            // (c, 1)·(c + 1/2, 1) = identity
            Dicyclic { angle, jpart: true } => Dicyclic {
                angle: angle.add(RationalAngle::HALF),
                jpart: true,
            },
            LocallyDihedral { angle, flip: false } => LocallyDihedral {
                angle: angle.neg(),
                flip: false,
            },
            LocallyDihedral { angle, flip: true } => LocallyDihedral {
                angle: *angle,
                flip: true,
            },
            LocallyQuaternion {
                angle,
                jpart: false,
            } => LocallyQuaternion {
                angle: angle.neg(),
                jpart: false,
            },
            LocallyQuaternion { angle, jpart: true } => LocallyQuaternion {
                angle: angle.add(DyadicAngle::HALF),
                jpart: true,
            },
            InfiniteDihedral { shift, flip: false } => InfiniteDihedral {
                shift: shift.checked_neg().expect("shift overflow"),
                flip: false,
            },
            InfiniteDihedral { shift, flip: true } => InfiniteDihedral {
                shift: *shift,
                flip: true,
            },
            InfiniteQuaternion {
                param,
                jpart: false,
            } => InfiniteQuaternion {
                param: param.inv(),
                jpart: false,
            },
            InfiniteQuaternion { param, jpart: true } => InfiniteQuaternion {
                param: param
                    .mul(&ToralParam::minus_one(param.rank()))
                    .expect("rank preserved"),
                jpart: true,
            },
            Product(l, r) => Product(Box::new(l.inv()), Box::new(r.inv())),
        }
    }

    /// Order of the cyclic group generated, by closed form: rotation-like
    /// elements inherit the angle/shift order, dihedral-type flips have
    /// order 2, quaternionic j-type elements order 4.
    pub fn order(&self) -> Order {
        match self {
            Cyclic { angle } => Order::Finite(angle.order()),
            Dihedral { angle, flip: false } => Order::Finite(angle.order()),
            Dihedral { flip: true, .. } => Order::Finite(2),
            Dicyclic {
                angle,
                jpart: false,
            } => Order::Finite(angle.order()),
            Dicyclic { jpart: true, .. } => Order::Finite(4),
            LocallyDihedral { angle, flip: false } => Order::Finite(angle.order()),
            LocallyDihedral { flip: true, .. } => Order::Finite(2),
            LocallyQuaternion {
                angle,
                jpart: false,
            } => Order::Finite(angle.order()),
            LocallyQuaternion { jpart: true, .. } => Order::Finite(4),
            InfiniteDihedral {
                shift: 0,
                flip: false,
            } => Order::Finite(1),
            InfiniteDihedral { flip: false, .. } => Order::Infinite,
            InfiniteDihedral { flip: true, .. } => Order::Finite(2),
            InfiniteQuaternion {
                param,
                jpart: false,
            } => param.order(),
            InfiniteQuaternion { jpart: true, .. } => Order::Finite(4),
            Product(l, r) => l.order().lcm(r.order()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Cyclic { angle } => angle.is_zero(),
            Dihedral { angle, flip } => !flip && angle.is_zero(),
            Dicyclic { angle, jpart } => !jpart && angle.is_zero(),
            LocallyDihedral { angle, flip } => !flip && angle.is_zero(),
            LocallyQuaternion { angle, jpart } => !jpart && angle.is_zero(),
            InfiniteDihedral { shift, flip } => !flip && *shift == 0,
            InfiniteQuaternion { param, jpart } => !jpart && param.is_identity(),
            Product(l, r) => l.is_identity() && r.is_identity(),
        }
    }

    /// True for the `flip = 1` / `jpart = 1` coset of the semidirect
    /// families; false for rotation-like elements and products.
    pub fn is_flipped(&self) -> bool {
        match self {
            Dihedral { flip, .. } | LocallyDihedral { flip, .. } => *flip,
            Dicyclic { jpart, .. } | LocallyQuaternion { jpart, .. } => *jpart,
            InfiniteDihedral { flip, .. } => *flip,
            InfiniteQuaternion { jpart, .. } => *jpart,
            _ => false,
        }
    }

    /// Deterministic vertex label: rotation-like `c(num/den)`, flipped
    /// `...*s` / `...*x` / `...*j`, infinite dihedral `r(n)` / `r(n)*t`.
    pub fn label(&self) -> String {
        match self {
            Cyclic { angle } => format!("c({angle})"),
            Dihedral { angle, flip } => format!("c({angle}){}", if *flip { "*s" } else { "" }),
            Dicyclic { angle, jpart } => format!("c({angle}){}", if *jpart { "*x" } else { "" }),
            LocallyDihedral { angle, flip } => {
                format!("c({angle}){}", if *flip { "*s" } else { "" })
            }
            LocallyQuaternion { angle, jpart } => {
                format!("c({angle}){}", if *jpart { "*x" } else { "" })
            }
            InfiniteDihedral { shift, flip } => {
                format!("r({shift}){}", if *flip { "*t" } else { "" })
            }
            InfiniteQuaternion { param, jpart } => {
                format!("c({param}){}", if *jpart { "*j" } else { "" })
            }
            Product(l, r) => format!("({},{})", l.label(), r.label()),
        }
    }

    /// Listing order within a view: rotation-like elements first, sorted by
    /// (den, num) or by shift, then the flipped coset in the same order.
    fn order_class(&self) -> u8 {
        match self {
            Cyclic { .. } => 0,
            Dihedral { .. } => 1,
            Dicyclic { .. } => 2,
            LocallyDihedral { .. } => 3,
            LocallyQuaternion { .. } => 4,
            InfiniteDihedral { .. } => 5,
            InfiniteQuaternion { .. } => 6,
            Product(..) => 7,
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cyclic { angle: a }, Cyclic { angle: b }) => a.cmp(b),
            (Dihedral { angle: a, flip: f1 }, Dihedral { angle: b, flip: f2 }) => {
                (f1, a).cmp(&(f2, b))
            }
            (
                Dicyclic {
                    angle: a,
                    jpart: j1,
                },
                Dicyclic {
                    angle: b,
                    jpart: j2,
                },
            ) => (j1, a).cmp(&(j2, b)),
            (LocallyDihedral { angle: a, flip: f1 }, LocallyDihedral { angle: b, flip: f2 }) => {
                (f1, a).cmp(&(f2, b))
            }
            (
                LocallyQuaternion {
                    angle: a,
                    jpart: j1,
                },
                LocallyQuaternion {
                    angle: b,
                    jpart: j2,
                },
            ) => (j1, a).cmp(&(j2, b)),
            (InfiniteDihedral { shift: n, flip: f1 }, InfiniteDihedral { shift: m, flip: f2 }) => {
                (f1, n).cmp(&(f2, m))
            }
            (
                InfiniteQuaternion {
                    param: p,
                    jpart: j1,
                },
                InfiniteQuaternion {
                    param: q,
                    jpart: j2,
                },
            ) => (j1, p.sort_key()).cmp(&(j2, q.sort_key())),
            (Product(l1, r1), Product(l2, r2)) => (l1, r1).cmp(&(l2, r2)),
            _ => self.order_class().cmp(&other.order_class()),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Shared semidirect law on a rotation group written additively; see the
/// module docs. `quaternionic` adds the central `z = 1/2` when both parts
/// are flipped.
fn semidirect(
    c1: RationalAngle,
    a1: bool,
    c2: RationalAngle,
    a2: bool,
    quaternionic: bool,
) -> (RationalAngle, bool) {
    let twisted = if a1 { c2.neg() } else { c2 };
    let mut angle = c1.add(twisted);
    if quaternionic && a1 && a2 {
        angle = angle.add(RationalAngle::HALF);
    }
    (angle, a1 ^ a2)
}
