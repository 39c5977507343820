//! Exact rational arithmetic for capacities and interval bounds.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Signed exact rational. Used for interval bounds and IO differences.
pub type Rational = Ratio<i128>;

/// A non-negative exact flow quantity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Capacity(Rational);

impl Capacity {
    pub const ZERO: Capacity = Capacity(Ratio::new_raw(0, 1));

    pub fn new(value: Rational) -> Result<Self, Error> {
        if value.is_negative() {
            return Err(Error::InvalidCapacity(format_rational(&value)));
        }
        Ok(Capacity(value))
    }

    pub fn from_int(v: u64) -> Self {
        Capacity(Rational::from_integer(v as i128))
    }

    pub fn from_ratio(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidCapacity(format!("{num}/0")));
        }
        Ok(Capacity(Rational::new(num as i128, den as i128)))
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(self, other: Capacity) -> Option<Capacity> {
        if other.0 > self.0 {
            None
        } else {
            Some(Capacity(self.0 - other.0))
        }
    }

    pub fn min(self, other: Capacity) -> Capacity {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for Capacity {
    type Output = Capacity;
    fn add(self, rhs: Capacity) -> Capacity {
        Capacity(self.0 + rhs.0)
    }
}

impl Neg for Capacity {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.0
    }
}

impl Sum for Capacity {
    fn sum<I: Iterator<Item = Capacity>>(iter: I) -> Capacity {
        iter.fold(Capacity::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a Capacity> for Capacity {
    fn sum<I: Iterator<Item = &'a Capacity>>(iter: I) -> Capacity {
        iter.fold(Capacity::ZERO, |a, b| a + *b)
    }
}

impl From<Capacity> for Rational {
    fn from(c: Capacity) -> Rational {
        c.0
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Debug for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Capacity({})", format_rational(&self.0))
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"2.5"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::InvalidCapacity(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n as i128, d as i128));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10i128.pow(frac.len() as u32);
        let frac_part: i128 = frac.parse().map_err(|_| bad())?;
        let mut num = (int_part.abs() as i128) * den + frac_part;
        if negative {
            num = -num;
        }
        return Ok(Rational::new(num, den));
    }
    let n: i64 = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n as i128))
}

impl FromStr for Capacity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Capacity::new(parse_rational(s)?)
    }
}

impl Serialize for Capacity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Capacity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        capacity_from_json(&v).map_err(de::Error::custom)
    }
}

/// Accepts JSON integers, `"p/q"` strings, and floats only when they are
/// exactly representable as short decimals.
pub fn capacity_from_json(v: &serde_json::Value) -> Result<Capacity, Error> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                Ok(Capacity::from_int(u))
            } else if let Some(i) = n.as_i64() {
                Err(Error::InvalidCapacity(i.to_string()))
            } else {
                let f = n.as_f64().unwrap_or(f64::NAN);
                if !f.is_finite() {
                    return Err(Error::InvalidCapacity(n.to_string()));
                }
                // Only accept floats whose shortest decimal form round-trips.
                let text = n.to_string();
                if text.contains('e') || text.contains('E') {
                    return Err(Error::InvalidCapacity(text));
                }
                let r = parse_rational(&text)?;
                if (r.to_f64().unwrap_or(f64::NAN) - f).abs() != 0.0 {
                    return Err(Error::InvalidCapacity(text));
                }
                Capacity::new(r)
            }
        }
        serde_json::Value::String(s) => s.parse(),
        other => Err(Error::InvalidCapacity(other.to_string())),
    }
}

pub(crate) fn rational_to_json(r: &Rational) -> serde_json::Value {
    serde_json::Value::String(format_rational(r))
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<Rational, Error> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i as i128))
            .ok_or_else(|| Error::InvalidCapacity(n.to_string())),
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::InvalidCapacity(other.to_string())),
    }
}
