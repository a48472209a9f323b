//! Widths: multisets of thick-surface complexities.
//!
//! A [`Width`] stores its entries in non-increasing order. Ordering is
//! lexicographic on that sequence, and a proper prefix is smaller, so
//! `{4} < {4,3} < {4,4} < {5}`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Width(Vec<u32>);

impl Width {
    pub fn new(entries: impl IntoIterator<Item = u32>) -> Width {
        let mut entries: Vec<u32> = entries.into_iter().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Width(entries)
    }

    pub fn single(entry: u32) -> Width {
        Width(vec![entry])
    }

    /// The empty multiset, only meaningful as an additive identity.
    pub fn empty() -> Width {
        Width(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.0.contains(&value)
    }

    /// 1-based position of the first occurrence of `value` in canonical order.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.0.iter().position(|&e| e == value).map(|i| i + 1)
    }

    /// Positional sum of two canonical widths of equal length.
    pub fn add_pointwise(&self, other: &Width) -> Result<Width> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Width::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b)))
    }

    /// Adds `m` to the `index`-th entry (1-based, canonical order) and
    /// re-sorts.
    pub fn add_at(&self, index: usize, m: i64) -> Result<Width> {
        if index == 0 || index > self.len() {
            return Err(Error::WidthIndex {
                index,
                len: self.len(),
            });
        }
        let entry = self.0[index - 1];
        let updated = i64::from(entry) + m;
        let updated = u32::try_from(updated).map_err(|_| Error::NegativeEntry { entry, delta: m })?;
        let mut entries = self.0.clone();
        entries[index - 1] = updated;
        Ok(Width::new(entries))
    }

    /// Entrywise exact scaling by a non-negative rational.
    pub fn scale(&self, factor: Ratio<i64>) -> Result<ScaledWidth> {
        if factor < Ratio::from_integer(0) {
            return Err(Error::NegativeScale);
        }
        Ok(ScaledWidth(
            self.0
                .iter()
                .map(|&e| factor * Ratio::from_integer(i64::from(e)))
                .collect(),
        ))
    }
}

/// A width scaled by a rational factor. Only exists on the way to
/// [`ScaledWidth::ceil`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledWidth(Vec<Ratio<i64>>);

impl ScaledWidth {
    pub fn entries(&self) -> &[Ratio<i64>] {
        &self.0
    }

    /// Entrywise least integer `>=` each value.
    pub fn ceil(&self) -> Width {
        Width::new(self.0.iter().map(|r| {
            let c = r.ceil().to_integer();
            u32::try_from(c).expect("non-negative scale of u32 entries")
        }))
    }
}

impl From<Vec<u32>> for Width {
    fn from(entries: Vec<u32>) -> Width {
        Width::new(entries)
    }
}

impl<const N: usize> From<[u32; N]> for Width {
    fn from(entries: [u32; N]) -> Width {
        Width::new(entries)
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Width {
    type Err = Error;

    /// Accepts `4,4` or `{4,4}`; whitespace around entries is ignored.
    fn from_str(text: &str) -> Result<Width> {
        let malformed = || Error::MalformedWidth(text.to_string());
        let trimmed = text.trim();
        let inner = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => trimmed,
            _ => return Err(malformed()),
        };
        if inner.trim().is_empty() {
            return Err(malformed());
        }
        inner
            .split(',')
            .map(|e| {
                let e = e.trim();
                if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                e.parse::<u32>().map_err(|_| malformed())
            })
            .collect::<Result<Vec<u32>>>()
            .map(Width::new)
    }
}

impl Serialize for Width {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Width {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Width, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn w(entries: &[u32]) -> Width {
        Width::new(entries.iter().copied())
    }

    #[test]
    fn compare_examples() {
        assert_eq!(w(&[5]).cmp(&w(&[4, 4])), Ordering::Greater);
        assert_eq!(w(&[4]).cmp(&w(&[4, 4])), Ordering::Less);
        assert_eq!(w(&[3, 3]).cmp(&w(&[3, 3])), Ordering::Equal);
        assert_eq!(w(&[4, 3]).cmp(&w(&[4, 4])), Ordering::Less);
        assert!(w(&[4]) < w(&[4, 3]));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(w(&[5]).add_pointwise(&w(&[2])).unwrap(), w(&[7]));
        assert_eq!(w(&[4, 4]).add_pointwise(&w(&[1, 0])).unwrap(), w(&[5, 4]));
        assert_eq!(w(&[3, 2]).add_pointwise(&w(&[0, 0])).unwrap(), w(&[3, 2]));
        assert!(matches!(
            w(&[3, 2]).add_pointwise(&w(&[1])),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        ));

        assert_eq!(w(&[5]).add_at(1, 2).unwrap(), w(&[7]));
        assert_eq!(w(&[4, 3]).add_at(1, 2).unwrap(), w(&[6, 3]));
        assert_eq!(w(&[4, 4]).add_at(2, 3).unwrap(), w(&[7, 4]));
        assert_eq!(w(&[4, 3]).add_at(1, -2).unwrap(), w(&[3, 2]));
        assert!(matches!(w(&[4]).add_at(0, 1), Err(Error::WidthIndex { .. })));
        assert!(matches!(w(&[4]).add_at(2, 1), Err(Error::WidthIndex { .. })));
        assert!(matches!(w(&[4]).add_at(1, -5), Err(Error::NegativeEntry { .. })));
    }

    #[test]
    fn scale_and_ceil_examples() {
        let two_thirds = Ratio::new(2, 3);
        let scaled = w(&[5]).scale(two_thirds).unwrap();
        assert_eq!(scaled.entries(), &[Ratio::new(10, 3)]);
        assert_eq!(scaled.ceil(), w(&[4]));
        assert_eq!(w(&[4]).scale(Ratio::new(3, 2)).unwrap().ceil(), w(&[6]));
        assert_eq!(w(&[4, 4]).scale(Ratio::from_integer(1)).unwrap().ceil(), w(&[4, 4]));
        assert!(matches!(w(&[4]).scale(Ratio::new(-1, 2)), Err(Error::NegativeScale)));
    }

    #[test]
    fn contains_examples() {
        assert!(w(&[4, 3]).contains(3));
        assert!(!w(&[7]).contains(3));
        assert!(w(&[3]).contains(3));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("4,4".parse::<Width>().unwrap(), w(&[4, 4]));
        assert_eq!("{3, 4}".parse::<Width>().unwrap(), w(&[4, 3]));
        assert_eq!(" 7 ".parse::<Width>().unwrap(), w(&[7]));
        assert_eq!(w(&[3, 4, 4]).to_string(), "4,4,3");
        for bad in ["", "{}", "4,,4", "{4", "4}", "-1", "a", "4;4", "+4"] {
            assert!(bad.parse::<Width>().is_err(), "{bad:?}");
        }
    }

    fn any_width() -> impl Strategy<Value = Width> {
        prop::collection::vec(0u32..20, 1..5).prop_map(Width::new)
    }

    fn is_canonical(width: &Width) -> bool {
        width.entries().windows(2).all(|p| p[0] >= p[1])
    }

    proptest! {
        #[test]
        fn add_at_first_with_positive_increases(a in any_width(), m in 1i64..10) {
            let bigger = a.add_at(1, m).unwrap();
            prop_assert!(bigger > a);
            prop_assert!(is_canonical(&bigger));
        }

        #[test]
        fn ceil_scale_one_is_identity(a in any_width()) {
            prop_assert_eq!(a.scale(Ratio::from_integer(1)).unwrap().ceil(), a);
        }

        #[test]
        fn operations_stay_canonical(
            a in prop::collection::vec(0u32..20, 3),
            b in prop::collection::vec(0u32..20, 3),
            index in 1usize..=3,
            m in 0i64..10,
            num in 0i64..12,
            den in 1i64..6,
        ) {
            let (a, b) = (Width::new(a), Width::new(b));
            prop_assert!(is_canonical(&a.add_pointwise(&b).unwrap()));
            prop_assert!(is_canonical(&a.add_at(index, m).unwrap()));
            prop_assert!(is_canonical(&a.scale(Ratio::new(num, den)).unwrap().ceil()));
            prop_assert!(is_canonical(&a.to_string().parse().unwrap()));
        }

        #[test]
        fn render_parse_roundtrip(a in any_width()) {
            prop_assert_eq!(a.to_string().parse::<Width>().unwrap(), a);
        }
    }
}
