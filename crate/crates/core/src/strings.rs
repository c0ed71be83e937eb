//! Monotypic infinite binary strings `0^u 1^v`, the four ways of specifying
//! the finite stage strings, and the opp- and LR-transformations.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A count in ℕ ∪ {ω}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u64),
    Omega,
}

impl Count {
    pub fn is_omega(self) -> bool {
        self == Count::Omega
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Omega => None,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Omega => f.write_str("ω"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(n) => s.serialize_u64(*n),
            Count::Omega => s.serialize_str("omega"),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Count::Finite(n)),
            Raw::Text(t) if matches!(t.as_str(), "omega" | "ω" | "w") => Ok(Count::Omega),
            Raw::Text(t) => Err(de::Error::custom(format!("expected a count or \"omega\", got {t:?}"))),
        }
    }
}

/// Which end of the string the bits are indexed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Indexed from the left; the string has order type ω.
    L,
    /// Indexed from the right; the string has order type ω*.
    R,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::L => Orientation::R,
            Orientation::R => Orientation::L,
        }
    }
}

/// An infinite binary string of the form `0^u 1^v` with exactly one of
/// `u`, `v` equal to ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MonotypicString {
    orientation: Orientation,
    zeros: Count,
    ones: Count,
}

#[derive(Deserialize)]
struct RawMonotypic {
    orientation: Orientation,
    zeros: Count,
    ones: Count,
}

impl<'de> Deserialize<'de> for MonotypicString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawMonotypic::deserialize(d)?;
        MonotypicString::new(raw.orientation, raw.zeros, raw.ones).map_err(de::Error::custom)
    }
}

impl MonotypicString {
    pub fn new(orientation: Orientation, zeros: Count, ones: Count) -> Result<Self> {
        use Count::*;
        let ok = matches!(
            (orientation, zeros, ones),
            (Orientation::L, Finite(_), Omega)
                | (Orientation::L, Omega, Finite(0))
                | (Orientation::R, Omega, Finite(_))
                | (Orientation::R, Finite(0), Omega)
        );
        if ok {
            Ok(MonotypicString {
                orientation,
                zeros,
                ones,
            })
        } else {
            Err(Error::InvalidString(format!(
                "({orientation:?}, zeros={zeros}, ones={ones}) is not monotypic"
            )))
        }
    }

    /// `000⋯`
    pub const fn all_zeros_left() -> Self {
        MonotypicString {
            orientation: Orientation::L,
            zeros: Count::Omega,
            ones: Count::Finite(0),
        }
    }

    /// `111⋯`
    pub const fn all_ones_left() -> Self {
        MonotypicString {
            orientation: Orientation::L,
            zeros: Count::Finite(0),
            ones: Count::Omega,
        }
    }

    /// `⋯000`
    pub const fn all_zeros_right() -> Self {
        MonotypicString {
            orientation: Orientation::R,
            zeros: Count::Omega,
            ones: Count::Finite(0),
        }
    }

    /// `⋯111`
    pub const fn all_ones_right() -> Self {
        MonotypicString {
            orientation: Orientation::R,
            zeros: Count::Finite(0),
            ones: Count::Omega,
        }
    }

    /// `0^zeros 111⋯`
    pub const fn left(zeros: u64) -> Self {
        MonotypicString {
            orientation: Orientation::L,
            zeros: Count::Finite(zeros),
            ones: Count::Omega,
        }
    }

    /// `⋯000 1^ones`
    pub const fn right(ones: u64) -> Self {
        MonotypicString {
            orientation: Orientation::R,
            zeros: Count::Omega,
            ones: Count::Finite(ones),
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn zeros(&self) -> Count {
        self.zeros
    }

    pub fn ones(&self) -> Count {
        self.ones
    }

    /// Bit `j` (1-based) counted from the string's own indexing end.
    pub fn bit(&self, j: u64) -> u8 {
        assert!(j >= 1, "bits are 1-indexed");
        match (self.orientation, self.zeros, self.ones) {
            (Orientation::L, Count::Finite(u), _) => u8::from(j > u),
            (Orientation::L, Count::Omega, _) => 0,
            (Orientation::R, _, Count::Finite(v)) => u8::from(j <= v),
            (Orientation::R, _, Count::Omega) => 1,
        }
    }

    /// Flip every bit, then reverse the order type.
    pub fn opp(&self) -> Self {
        MonotypicString {
            orientation: self.orientation.flipped(),
            zeros: self.ones,
            ones: self.zeros,
        }
    }

    /// Exponent form: `0^u 1^ω→` or `⋯0^ω 1^v`.
    pub fn exponent_form(&self) -> String {
        match self.orientation {
            Orientation::L => format!("0^{} 1^{}→", self.zeros, self.ones),
            Orientation::R => format!("⋯0^{} 1^{}", self.zeros, self.ones),
        }
    }

    /// Sample rendering with `...` in place of `⋯`.
    pub fn to_ascii(&self) -> String {
        self.to_string().replace('⋯', "...")
    }

    /// Which of the four families the string belongs to, and its index when
    /// the string determines it.
    pub fn classify(&self) -> Classification {
        match (self.orientation, self.zeros, self.ones) {
            (Orientation::L, Count::Omega, _) => Classification {
                family: SpecKind::I,
                index: None,
            },
            (Orientation::L, Count::Finite(u), _) => Classification {
                family: SpecKind::II,
                index: Some(u + 1),
            },
            (Orientation::R, _, Count::Finite(v)) => Classification {
                family: SpecKind::III,
                index: Some(v + 1),
            },
            (Orientation::R, _, Count::Omega) => Classification {
                family: SpecKind::IV,
                index: None,
            },
        }
    }
}

/// Renders samples like `0111⋯`, `000⋯`, `⋯0011`, `⋯111`, always showing at
/// least three digits.
impl fmt::Display for MonotypicString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |c: char, n: u64| c.to_string().repeat(n as usize);
        match (self.orientation, self.zeros, self.ones) {
            (Orientation::L, Count::Omega, _) => f.write_str("000⋯"),
            (Orientation::L, Count::Finite(u), _) => {
                write!(f, "{}{}⋯", digits('0', u), digits('1', 3u64.saturating_sub(u).max(1)))
            }
            (Orientation::R, _, Count::Omega) => f.write_str("⋯111"),
            (Orientation::R, _, Count::Finite(v)) => {
                write!(f, "⋯{}{}", digits('0', 3u64.saturating_sub(v).max(1)), digits('1', v))
            }
        }
    }
}

/// Parses `⋯0011`, `...0011`, `0111⋯`, `011...`, `000⋯`, `⋯111`.
///
/// A run of a single digit denotes the constant string; otherwise the
/// visible digits must read `0…01…1` and the finite count is taken from the
/// end opposite the ellipsis.
impl FromStr for MonotypicString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace(['⋯', '…'], "...");
        let (orientation, body) = if let Some(rest) = t.strip_prefix("...") {
            (Orientation::R, rest)
        } else if let Some(rest) = t.strip_suffix("...") {
            (Orientation::L, rest)
        } else {
            return Err(Error::parse(s, "expected a leading or trailing ellipsis"));
        };
        if body.is_empty() || !body.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::parse(s, "digits must be 0 or 1"));
        }
        let zeros = body.chars().take_while(|&c| c == '0').count() as u64;
        let ones = body.len() as u64 - zeros;
        if body[zeros as usize..].contains('0') {
            return Err(Error::parse(s, "not of the form 0…01…1"));
        }
        Ok(match orientation {
            Orientation::L if ones == 0 => Self::all_zeros_left(),
            Orientation::L => Self::left(zeros),
            Orientation::R if zeros == 0 => Self::all_ones_right(),
            Orientation::R => Self::right(ones),
        })
    }
}

/// An ordered pair of monotypic strings (orientations may differ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairString {
    pub left: MonotypicString,
    pub right: MonotypicString,
}

impl PairString {
    pub const fn new(left: MonotypicString, right: MonotypicString) -> Self {
        PairString { left, right }
    }

    /// `(x, y)^opp = (y^opp, x^opp)`.
    pub fn opp(&self) -> Self {
        PairString {
            left: self.right.opp(),
            right: self.left.opp(),
        }
    }

    pub fn to_ascii(&self) -> String {
        format!("({}, {})", self.left.to_ascii(), self.right.to_ascii())
    }
}

impl fmt::Display for PairString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl FromStr for PairString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "pairs are written (x, y)"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::parse(s, "missing comma"))?;
        Ok(PairString {
            left: a.parse()?,
            right: b.parse()?,
        })
    }
}

/// Free-standing form of [`MonotypicString::opp`].
pub fn opp(x: &MonotypicString) -> MonotypicString {
    x.opp()
}

/// Free-standing form of [`PairString::opp`].
pub fn opp_pair(p: &PairString) -> PairString {
    p.opp()
}

/// The four specifications of the stage strings and, in the limit, the four
/// families of infinite strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpecKind {
    I,
    II,
    III,
    IV,
}

impl SpecKind {
    pub const ALL: [SpecKind; 4] = [SpecKind::I, SpecKind::II, SpecKind::III, SpecKind::IV];

    /// Replacing `j` by `n - j` swaps I with III and II with IV.
    pub fn lr(self) -> Self {
        match self {
            SpecKind::I => SpecKind::III,
            SpecKind::II => SpecKind::IV,
            SpecKind::III => SpecKind::I,
            SpecKind::IV => SpecKind::II,
        }
    }

    /// Whether bits are counted from the left.
    pub fn indexed_from_left(self) -> bool {
        matches!(self, SpecKind::I | SpecKind::II)
    }
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecKind::I => "I",
            SpecKind::II => "II",
            SpecKind::III => "III",
            SpecKind::IV => "IV",
        })
    }
}

impl FromStr for SpecKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(SpecKind::I),
            "II" | "2" => Ok(SpecKind::II),
            "III" | "3" => Ok(SpecKind::III),
            "IV" | "4" => Ok(SpecKind::IV),
            _ => Err(Error::parse(s, "expected I, II, III or IV")),
        }
    }
}

/// A string together with the specification and index that defined it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpecifiedString {
    spec: SpecKind,
    index: u64,
}

#[derive(Deserialize)]
struct RawSpecified {
    spec: SpecKind,
    index: u64,
}

impl<'de> Deserialize<'de> for SpecifiedString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawSpecified::deserialize(d)?;
        SpecifiedString::new(raw.spec, raw.index).map_err(de::Error::custom)
    }
}

impl SpecifiedString {
    pub fn new(spec: SpecKind, index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::BadIndex("specified strings are indexed from 1".into()));
        }
        Ok(SpecifiedString { spec, index })
    }

    pub fn spec(&self) -> SpecKind {
        self.spec
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The limit string `t_i` of the specification.
    pub fn realize(&self) -> MonotypicString {
        let i = self.index;
        match self.spec {
            SpecKind::I => MonotypicString::all_zeros_left(),
            SpecKind::II => MonotypicString::left(i - 1),
            SpecKind::III => MonotypicString::right(i - 1),
            SpecKind::IV => MonotypicString::all_ones_right(),
        }
    }

    /// LR-transformation: same index, opposite indexing end.
    pub fn lr(&self) -> Self {
        SpecifiedString {
            spec: self.spec.lr(),
            index: self.index,
        }
    }
}

impl fmt::Display for SpecifiedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.spec, self.index)
    }
}

impl FromStr for SpecifiedString {
    type Err = Error;

    /// Accepts `II,3`, `(II, 3)` or `II:3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once([',', ':'])
            .ok_or_else(|| Error::parse(s, "expected SPEC,INDEX"))?;
        let index = b
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::parse(s, "index must be a positive integer"))?;
        SpecifiedString::new(a.parse()?, index)
    }
}

pub fn realize(s: &SpecifiedString) -> MonotypicString {
    s.realize()
}

pub fn lr(s: &SpecifiedString) -> SpecifiedString {
    s.lr()
}

pub fn lr_pair(p: (SpecifiedString, SpecifiedString)) -> (SpecifiedString, SpecifiedString) {
    (p.0.lr(), p.1.lr())
}

pub fn classify(x: &MonotypicString) -> Classification {
    x.classify()
}

/// Family of a monotypic string; `index` is `None` when the string does
/// not determine it (families I and IV).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub family: SpecKind,
    pub index: Option<u64>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "family {}, index {}", self.family, i),
            None => write!(f, "family {}, index indeterminate", self.family),
        }
    }
}

/// Bit `j` (1-based, counted from the specification's indexing end) of
/// `s_i^(n)`, or `None` when out of range.
fn stage_bit(spec: SpecKind, i: u64, j: u64, n: u64) -> Option<u8> {
    if i < 1 || i > n || j < 1 || j + 1 > n {
        return None;
    }
    Some(match spec {
        SpecKind::I => u8::from(j + i > n),
        SpecKind::II => u8::from(j >= i),
        SpecKind::III => u8::from(j < i),
        SpecKind::IV => u8::from(j + i <= n),
    })
}

/// The finite string `s_i^(n)` of length `n - 1`, written left to right.
pub fn finite_approx(spec: SpecKind, i: u64, n: u64) -> Result<String> {
    if n < 2 || i < 1 || i > n {
        return Err(Error::BadIndex(format!("need 1 ≤ i ≤ n and n ≥ 2, got i={i}, n={n}")));
    }
    let bits: String = (1..n)
        .map(|pos| {
            // position from the left; III and IV index from the right
            let j = if spec.indexed_from_left() { pos } else { n - pos };
            if stage_bit(spec, i, j, n).unwrap() == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    Ok(bits)
}

/// Outcome of checking that bit `j` of the stage strings settles on the bit
/// of the limit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitCheck {
    pub stable: bool,
    /// Bit `j` of the realized limit string.
    pub limit_bit: u8,
    /// First stage in `[j+i, depth]` whose bit disagrees, if any.
    pub first_mismatch: Option<u64>,
}

/// Checks that bit `j` of `s_i^(n)` equals bit `j` of the limit string for
/// every `n` in `[j + i, depth]`.
pub fn limit_check(spec: SpecKind, i: u64, j: u64, depth: u64) -> Result<LimitCheck> {
    if i < 1 || j < 1 || depth < j + i {
        return Err(Error::BadIndex(format!(
            "need i, j ≥ 1 and depth ≥ j + i, got i={i}, j={j}, depth={depth}"
        )));
    }
    let limit_bit = SpecifiedString::new(spec, i)?.realize().bit(j);
    let first_mismatch = (j + i..=depth).find(|&n| stage_bit(spec, i, j, n) != Some(limit_bit));
    Ok(LimitCheck {
        stable: first_mismatch.is_none(),
        limit_bit,
        first_mismatch,
    })
}
