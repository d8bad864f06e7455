use std::cmp::Ordering;

use serde::Serialize;

/// A matrix entry: zero, or `ζ_L^root · x^var_exp` for the enclosing matrix's root order `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UnitEntry {
    Zero,
    Unit { root: u32, var_exp: i32 },
}

impl UnitEntry {
    pub const ONE: UnitEntry = UnitEntry::Unit {
        root: 0,
        var_exp: 0,
    };

    pub fn root(root: u32) -> Self {
        UnitEntry::Unit { root, var_exp: 0 }
    }

    pub fn var(root: u32, var_exp: i32) -> Self {
        UnitEntry::Unit { root, var_exp }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, UnitEntry::Zero)
    }

    pub fn is_ground(self) -> bool {
        !matches!(self, UnitEntry::Unit { var_exp, .. } if var_exp != 0)
    }

    pub fn root_index(self) -> Option<u32> {
        match self {
            UnitEntry::Zero => None,
            UnitEntry::Unit { root, .. } => Some(root),
        }
    }

    pub fn var_exp(self) -> i32 {
        match self {
            UnitEntry::Zero => 0,
            UnitEntry::Unit { var_exp, .. } => var_exp,
        }
    }

    pub fn mul(self, other: UnitEntry, order: u32) -> UnitEntry {
        match (self, other) {
            (
                UnitEntry::Unit {
                    root: a,
                    var_exp: e,
                },
                UnitEntry::Unit {
                    root: b,
                    var_exp: f,
                },
            ) => UnitEntry::Unit {
                root: (a + b) % order,
                var_exp: e + f,
            },
            _ => UnitEntry::Zero,
        }
    }

    pub fn conj(self, order: u32) -> UnitEntry {
        match self {
            UnitEntry::Zero => UnitEntry::Zero,
            UnitEntry::Unit { root, var_exp } => UnitEntry::Unit {
                root: (order - root % order) % order,
                var_exp: -var_exp,
            },
        }
    }

    pub fn neg(self, order: u32) -> UnitEntry {
        debug_assert!(order.is_multiple_of(2), "-1 needs an even root order");
        self.mul(UnitEntry::root(order / 2), order)
    }

    /// Re-express over `ζ_M`, `L | M`.
    pub fn lift(self, from: u32, to: u32) -> UnitEntry {
        match self {
            UnitEntry::Zero => UnitEntry::Zero,
            UnitEntry::Unit { root, var_exp } => UnitEntry::Unit {
                root: root * (to / from),
                var_exp,
            },
        }
    }

    /// Position under the ordering ≺: unimodular entries by angle, then zero.
    pub fn order_key(self) -> (u32, i32) {
        match self {
            UnitEntry::Zero => (u32::MAX, 0),
            UnitEntry::Unit { root, var_exp } => (root, var_exp),
        }
    }
}

/// The ordering ≺ on `T ∪ {0}`: every unimodular entry precedes zero, and
/// unimodular entries are ordered by their angle in `[0, 2π)`.
///
/// Entries carrying the formal variable are only ordered by their exponent as a
/// tiebreak; standard forms are never computed for them.
pub fn entry_less(a: UnitEntry, b: UnitEntry) -> bool {
    entry_cmp(a, b) == Ordering::Less
}

pub fn entry_cmp(a: UnitEntry, b: UnitEntry) -> Ordering {
    a.order_key().cmp(&b.order_key())
}
