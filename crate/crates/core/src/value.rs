//! Scalar value domains: exact decimal capacities and ∞-extended numbers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Fractional digits carried by [`Capacity`].
pub const CAPACITY_SCALE_DIGITS: u32 = 9;
const SCALE: u128 = 1_000_000_000;

/// Non-negative exact decimal capacity, stored as a scaled integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Capacity(u128);

impl Capacity {
    pub const ZERO: Capacity = Capacity(0);

    pub fn from_int(v: u64) -> Self {
        Capacity(v as u128 * SCALE)
    }

    pub fn scaled(self) -> u128 {
        self.0
    }

    pub fn from_scaled(raw: u128) -> Self {
        Capacity(raw)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Integral value, if the capacity has no fractional part.
    pub fn as_integer(self) -> Option<u128> {
        self.0.is_multiple_of(SCALE).then_some(self.0 / SCALE)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCapacityError(pub String);

impl fmt::Display for ParseCapacityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseCapacityError {}

impl FromStr for Capacity {
    type Err = ParseCapacityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| ParseCapacityError(format!("{m}: {s:?}"));
        if s.starts_with('-') {
            return Err(err("negative capacity"));
        }
        let s = s.strip_prefix('+').unwrap_or(s);
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(err("empty capacity"));
        }
        if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("not a decimal literal"));
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > CAPACITY_SCALE_DIGITS as usize {
            return Err(err("too many fractional digits"));
        }
        let int_val: u128 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| err("capacity out of range"))?
        };
        let mut frac_val: u128 = if frac.is_empty() { 0 } else { frac.parse().unwrap() };
        frac_val *= 10u128.pow(CAPACITY_SCALE_DIGITS - frac.len() as u32);
        int_val
            .checked_mul(SCALE)
            .and_then(|v| v.checked_add(frac_val))
            .map(Capacity)
            .ok_or_else(|| err("capacity out of range"))
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            write!(f, "{int}")
        } else {
            let digits = format!("{frac:0width$}", width = CAPACITY_SCALE_DIGITS as usize);
            write!(f, "{int}.{}", digits.trim_end_matches('0'))
        }
    }
}

impl Serialize for Capacity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(v) if v <= u64::MAX as u128 => s.serialize_u64(v as u64),
            _ => s.serialize_f64(self.to_string().parse().unwrap()),
        }
    }
}

/// A value extended with a dedicated `Infinite` sentinel above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinite,
}

pub use Extended::{Finite, Infinite};

impl<T> Extended<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Infinite)
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }
}

impl<T: Ord> PartialOrd for Extended<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Extended<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => v.fmt(f),
            Infinite => f.write_str("inf"),
        }
    }
}

impl<T: Serialize> Serialize for Extended<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => v.serialize(s),
            Infinite => s.serialize_str("inf"),
        }
    }
}

/// Path cost; `Infinite` means no path.
pub type Distance = Extended<u64>;

/// Path capacity; `Infinite` is the flow of the empty path.
pub type Flow = Extended<Capacity>;

impl Distance {
    pub const ZERO: Distance = Finite(0);

    /// Semi-ring multiplication in the distance domain: ∞ absorbs.
    pub fn plus_cost(self, other: Distance) -> Distance {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl Flow {
    pub const ZERO: Flow = Finite(Capacity::ZERO);

    pub fn is_zero_flow(&self) -> bool {
        matches!(self, Finite(c) if c.is_zero())
    }
}
