//! Boundary slopes on the torus boundary: `Q ∪ {∞} ∪ {∅}`.
//!
//! Rational slopes are stored reduced with a positive denominator, so the
//! sign always lives on the numerator. The meridian `∞` renders as `inf`
//! and the empty (closed) slope as `closed`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Rational { num: i64, den: i64 },
    Meridian,
    Closed,
}

impl Slope {
    /// Builds a canonical rational slope. `den` may be negative; a zero
    /// denominator is only accepted for `±1/0`, which is the meridian.
    pub fn rational(num: i64, den: i64) -> Result<Slope> {
        // i64::MIN has no negation for the sign transfer
        if num == i64::MIN || den == i64::MIN {
            return Err(Error::MalformedSlope(format!("{num}/{den}")));
        }
        if den == 0 {
            return if num.abs() == 1 {
                Ok(Slope::Meridian)
            } else {
                Err(Error::ZeroDenominator(format!("{num}/{den}")))
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Slope::Rational { num, den })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Slope::Rational { .. })
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Slope::Closed)
    }

    /// `(num, den)` for rational slopes.
    pub fn as_fraction(&self) -> Option<(i64, i64)> {
        match *self {
            Slope::Rational { num, den } => Some((num, den)),
            _ => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Rational { num, den } => write!(f, "{num}/{den}"),
            Slope::Meridian => f.write_str("inf"),
            Slope::Closed => f.write_str("closed"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(text: &str) -> Result<Slope> {
        parse_slope(text)
    }
}

/// Parses `r/s`, a bare integer `n` (read as `n/1`), `inf` or `closed`.
pub fn parse_slope(text: &str) -> Result<Slope> {
    let malformed = || Error::MalformedSlope(text.to_string());
    match text {
        "inf" => return Ok(Slope::Meridian),
        "closed" => return Ok(Slope::Closed),
        _ => {}
    }
    let parse_int = |s: &str| -> Result<i64> {
        // i64::from_str accepts a leading '+', which the grammar does not
        if s.is_empty() || s.starts_with('+') {
            return Err(malformed());
        }
        s.parse::<i64>().map_err(|_| malformed())
    };
    match text.split_once('/') {
        Some((r, s)) => {
            let (r, s) = (parse_int(r)?, parse_int(s)?);
            if s == 0 && r.abs() != 1 {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            Slope::rational(r, s)
        }
        None => {
            let n = parse_int(text)?;
            Slope::rational(n, 1)
        }
    }
}

/// `|p·q·r + s|` for the rational slope `r/s`, with `(p, q)` a nontrivial
/// torus knot.
pub fn torus_knot_delta(p: i64, q: i64, slope: Slope) -> Result<u64> {
    check_torus_knot(p, q)?;
    let (r, s) = slope
        .as_fraction()
        .ok_or_else(|| Error::NonRationalSlope(slope.to_string()))?;
    let delta = i128::from(p) * i128::from(q) * i128::from(r) + i128::from(s);
    u64::try_from(delta.unsigned_abs()).map_err(|_| Error::NonRationalSlope(slope.to_string()))
}

/// Rejects pairs that are not a nontrivial torus knot.
pub fn check_torus_knot(p: i64, q: i64) -> Result<()> {
    let ok = p.unsigned_abs() >= 2 && q.unsigned_abs() >= 2 && p.gcd(&q) == 1;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidTorusKnot { p, q })
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Slope, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_slope(&text).map_err(serde::de::Error::custom)
    }
}
