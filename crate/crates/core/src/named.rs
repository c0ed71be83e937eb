//! The concrete CPOs: their order words and the correspondence between
//! symbolic elements, printed labels (`3`, `∞`, `2′`, `−1`, `m`) and, where
//! the CPO is made of strings, the monotypic strings or pairs themselves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{Elem, OrderAtom, OrderWord};
use crate::strings::{MonotypicString, Orientation, PairString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CpoName {
    Two,
    Phi,
    Theta,
    OmegaSet,
    OmegaOpp,
    OmegaPrime,
    OmegaPrimeOpp,
    Lambda,
    LambdaPrime,
    LambdaHatPrime,
    Xi,
    XiOpp,
    V,
}

impl CpoName {
    pub const ALL: [CpoName; 13] = [
        CpoName::Two,
        CpoName::Phi,
        CpoName::Theta,
        CpoName::OmegaSet,
        CpoName::OmegaOpp,
        CpoName::OmegaPrime,
        CpoName::OmegaPrimeOpp,
        CpoName::Lambda,
        CpoName::LambdaPrime,
        CpoName::LambdaHatPrime,
        CpoName::Xi,
        CpoName::XiOpp,
        CpoName::V,
    ];

    /// Identifier used on the command line and in JSON.
    pub fn ident(self) -> &'static str {
        match self {
            CpoName::Two => "two",
            CpoName::Phi => "phi",
            CpoName::Theta => "theta",
            CpoName::OmegaSet => "omega",
            CpoName::OmegaOpp => "omega_opp",
            CpoName::OmegaPrime => "omega_prime",
            CpoName::OmegaPrimeOpp => "omega_prime_opp",
            CpoName::Lambda => "lambda",
            CpoName::LambdaPrime => "lambda_prime",
            CpoName::LambdaHatPrime => "lambda_hat_prime",
            CpoName::Xi => "xi",
            CpoName::XiOpp => "xi_opp",
            CpoName::V => "v",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CpoName::Two => "2",
            CpoName::Phi => "Φ",
            CpoName::Theta => "Θ",
            CpoName::OmegaSet => "Ω",
            CpoName::OmegaOpp => "Ω^opp",
            CpoName::OmegaPrime => "Ω′",
            CpoName::OmegaPrimeOpp => "Ω′(opp)",
            CpoName::Lambda => "Λ",
            CpoName::LambdaPrime => "Λ′",
            CpoName::LambdaHatPrime => "Λ̂′",
            CpoName::Xi => "Ξ",
            CpoName::XiOpp => "Ξ^opp",
            CpoName::V => "V",
        }
    }

    fn layout(self) -> (Carrier, &'static [Role]) {
        use Role::*;
        match self {
            CpoName::Two => (Carrier::Labels, &[Bit]),
            CpoName::Phi => (Carrier::Labels, &[Nat, Inf, Primed]),
            CpoName::Theta => (Carrier::Labels, &[Nat, Inf]),
            CpoName::OmegaSet => (Carrier::Strings, &[Nat]),
            CpoName::OmegaOpp => (Carrier::Strings, &[Primed]),
            CpoName::OmegaPrime => (Carrier::Strings, &[Nat, Inf]),
            CpoName::OmegaPrimeOpp => (Carrier::Strings, &[InfPrime, Primed]),
            CpoName::Lambda => (Carrier::Strings, &[Nat, Inf, Primed]),
            CpoName::LambdaPrime => (Carrier::Strings, &[Nat, Inf, InfPrime, Primed]),
            CpoName::LambdaHatPrime => (Carrier::HatPairs, &[Nat, Boundary, Primed]),
            CpoName::Xi => (Carrier::XiPairs, &[NegInf, NonPositive]),
            CpoName::XiOpp => (Carrier::XiPairs, &[NonNegative, PosInf]),
            CpoName::V => (Carrier::XiPairs, &[NegInf, Negative, NonNegative, PosInf]),
        }
    }
}

impl fmt::Display for CpoName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for CpoName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        CpoName::ALL
            .into_iter()
            .find(|n| n.ident() == key || n.symbol() == s.trim())
            .or(match key.as_str() {
                "2" => Some(CpoName::Two),
                "omega_set" => Some(CpoName::OmegaSet),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownCpo(s.to_string()))
    }
}

/// How the elements of a CPO are realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Carrier {
    /// Abstract labels only (paths, functions).
    Labels,
    /// Single monotypic strings.
    Strings,
    /// Pairs `(000⋯, x)` and `(y, ⋯111)`.
    HatPairs,
    /// Pairs `(⋯000, y)` and `(x, 111⋯)`.
    XiPairs,
}

/// What a block of the word stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Bit,
    Nat,
    Inf,
    InfPrime,
    Primed,
    Boundary,
    NegInf,
    /// ω* block labeled 0, −1, −2, …
    NonPositive,
    /// ω* block labeled −1, −2, …
    Negative,
    /// ω block labeled 0, +1, +2, …
    NonNegative,
    PosInf,
}

impl Role {
    fn atom(self) -> OrderAtom {
        match self {
            Role::Bit => OrderAtom::Fin(2),
            Role::Nat | Role::NonNegative => OrderAtom::Omega,
            Role::Primed | Role::NonPositive | Role::Negative => OrderAtom::OmegaStar,
            Role::Inf | Role::InfPrime | Role::Boundary | Role::NegInf | Role::PosInf => OrderAtom::Fin(1),
        }
    }

    fn label(self, offset: u64) -> Label {
        match self {
            Role::Bit | Role::Nat => Label::Nat(offset),
            Role::Inf => Label::Inf,
            Role::InfPrime => Label::InfPrime,
            Role::Primed => Label::Primed(offset),
            Role::Boundary => Label::Boundary,
            Role::NegInf => Label::NegInf,
            Role::NonPositive => Label::Signed(-(offset as i64)),
            Role::Negative => Label::Signed(-(offset as i64) - 1),
            Role::NonNegative => Label::Signed(offset as i64),
            Role::PosInf => Label::PosInf,
        }
    }

    fn offset_of(self, label: Label) -> Option<u64> {
        match (self, label) {
            (Role::Bit, Label::Nat(n)) if n < 2 => Some(n),
            (Role::Nat, Label::Nat(n)) | (Role::Primed, Label::Primed(n)) => Some(n),
            (Role::Inf, Label::Inf)
            | (Role::InfPrime, Label::InfPrime)
            | (Role::Boundary, Label::Boundary)
            | (Role::NegInf, Label::NegInf)
            | (Role::PosInf, Label::PosInf) => Some(0),
            (Role::NonPositive, Label::Signed(k)) if k <= 0 => Some(k.unsigned_abs()),
            (Role::Negative, Label::Signed(k)) if k < 0 => Some(k.unsigned_abs() - 1),
            (Role::NonNegative, Label::Signed(k)) if k >= 0 => Some(k as u64),
            _ => None,
        }
    }

    fn value(self, carrier: Carrier, offset: u64) -> Option<ElementValue> {
        use MonotypicString as M;
        let mono = |m| Some(ElementValue::Mono(m));
        let pair = |a, b| Some(ElementValue::Pair(PairString::new(a, b)));
        match (carrier, self) {
            (Carrier::Labels, _) => None,
            (Carrier::Strings, Role::Nat) => mono(M::right(offset)),
            (Carrier::Strings, Role::Inf) => mono(M::all_ones_right()),
            (Carrier::Strings, Role::InfPrime) => mono(M::all_zeros_left()),
            (Carrier::Strings, Role::Primed) => mono(M::left(offset)),
            (Carrier::HatPairs, Role::Nat) => pair(M::all_zeros_left(), M::right(offset)),
            (Carrier::HatPairs, Role::Boundary) => pair(M::all_zeros_left(), M::all_ones_right()),
            (Carrier::HatPairs, Role::Primed) => pair(M::left(offset), M::all_ones_right()),
            (Carrier::XiPairs, Role::NegInf) => pair(M::all_zeros_right(), M::all_zeros_left()),
            (Carrier::XiPairs, Role::NonPositive) => pair(M::all_zeros_right(), M::left(offset)),
            (Carrier::XiPairs, Role::Negative) => pair(M::all_zeros_right(), M::left(offset + 1)),
            (Carrier::XiPairs, Role::NonNegative) => pair(M::right(offset), M::all_ones_left()),
            (Carrier::XiPairs, Role::PosInf) => pair(M::all_ones_right(), M::all_ones_left()),
            _ => unreachable!("layout pairs every role with a compatible carrier"),
        }
    }

    /// Inverse of [`Role::value`], by reading the finite count back.
    fn offset_of_value(self, carrier: Carrier, v: &ElementValue) -> Option<u64> {
        let finite = |m: &MonotypicString| match m.orientation() {
            Orientation::L => m.zeros().finite(),
            Orientation::R => m.ones().finite(),
        };
        let candidate = match v {
            ElementValue::Mono(m) => finite(m).unwrap_or(0),
            ElementValue::Pair(p) => match self {
                Role::NonPositive => finite(&p.right).unwrap_or(0),
                Role::Negative => finite(&p.right).unwrap_or(1).saturating_sub(1),
                Role::Nat => finite(&p.right).unwrap_or(0),
                Role::Primed => finite(&p.left).unwrap_or(0),
                Role::NonNegative => finite(&p.left).unwrap_or(0),
                _ => 0,
            },
        };
        (self.value(carrier, candidate).as_ref() == Some(v)).then_some(candidate)
    }
}

/// Printed name of an element. Serialized as its ASCII spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Label {
    /// `n`
    Nat(u64),
    /// `n′`
    Primed(u64),
    /// `∞`
    Inf,
    /// `∞′`
    InfPrime,
    /// `m`
    Boundary,
    /// `−∞`
    NegInf,
    /// `+∞`
    PosInf,
    /// `−k`, `m′` (the 0 of `V`), `+k`
    Signed(i64),
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.ascii()
    }
}

impl TryFrom<String> for Label {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl Label {
    /// ASCII spelling used in JSON and on the command line (`inf`, `2'`).
    pub fn ascii(&self) -> String {
        match self {
            Label::Nat(n) => n.to_string(),
            Label::Primed(n) => format!("{n}'"),
            Label::Inf => "inf".into(),
            Label::InfPrime => "inf'".into(),
            Label::Boundary => "m".into(),
            Label::NegInf => "-inf".into(),
            Label::PosInf => "+inf".into(),
            Label::Signed(0) => "m'".into(),
            Label::Signed(k) if *k > 0 => format!("+{k}"),
            Label::Signed(k) => k.to_string(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Nat(n) => write!(f, "{n}"),
            Label::Primed(n) => write!(f, "{n}′"),
            Label::Inf => f.write_str("∞"),
            Label::InfPrime => f.write_str("∞′"),
            Label::Boundary => f.write_str("m"),
            Label::NegInf => f.write_str("−∞"),
            Label::PosInf => f.write_str("+∞"),
            Label::Signed(0) => f.write_str("m′"),
            Label::Signed(k) if *k > 0 => write!(f, "+{k}"),
            Label::Signed(k) => write!(f, "−{}", k.unsigned_abs()),
        }
    }
}

/// Parses a label written either way (`2'`/`2′`, `inf`/`∞`, `-1`/`−1`).
///
/// `0` in a signed CPO such as `V` resolves to `m′`.
impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('′', "'").replace('∞', "inf").replace('−', "-");
        Ok(match t.as_str() {
            "inf" => Label::Inf,
            "inf'" => Label::InfPrime,
            "m" => Label::Boundary,
            "m'" | "+0" | "-0" => Label::Signed(0),
            "-inf" => Label::NegInf,
            "+inf" => Label::PosInf,
            _ => {
                if let Some(n) = t.strip_suffix('\'') {
                    Label::Primed(n.parse().map_err(|_| Error::parse(s, "bad primed label"))?)
                } else if let Some(k) = t.strip_prefix('+') {
                    Label::Signed(k.parse().map_err(|_| Error::parse(s, "bad signed label"))?)
                } else if t.starts_with('-') {
                    Label::Signed(t.parse().map_err(|_| Error::parse(s, "bad signed label"))?)
                } else {
                    Label::Nat(t.parse().map_err(|_| Error::parse(s, "unknown label"))?)
                }
            }
        })
    }
}

/// What an element is, when the CPO is built from strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementValue {
    Mono(MonotypicString),
    Pair(PairString),
}

impl fmt::Display for ElementValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementValue::Mono(m) => write!(f, "{m}"),
            ElementValue::Pair(p) => write!(f, "{p}"),
        }
    }
}

impl ElementValue {
    pub fn to_ascii(&self) -> String {
        match self {
            ElementValue::Mono(m) => m.to_ascii(),
            ElementValue::Pair(p) => p.to_ascii(),
        }
    }

    pub fn opp(&self) -> ElementValue {
        match self {
            ElementValue::Mono(m) => ElementValue::Mono(m.opp()),
            ElementValue::Pair(p) => ElementValue::Pair(p.opp()),
        }
    }
}

impl FromStr for ElementValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('(') {
            Ok(ElementValue::Pair(s.parse()?))
        } else {
            Ok(ElementValue::Mono(s.parse()?))
        }
    }
}

/// A CPO from the catalogue with its order word and element labeler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCpo {
    name: CpoName,
    word: OrderWord,
    carrier: Carrier,
    roles: &'static [Role],
}

pub fn named_cpo(name: CpoName) -> NamedCpo {
    NamedCpo::new(name)
}

impl NamedCpo {
    pub fn new(name: CpoName) -> Self {
        let (carrier, roles) = name.layout();
        let word = OrderWord::new(roles.iter().map(|r| r.atom()).collect()).expect("layouts are nonempty");
        NamedCpo {
            name,
            word,
            carrier,
            roles,
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn name(&self) -> CpoName {
        self.name
    }

    pub fn word(&self) -> &OrderWord {
        &self.word
    }

    /// Whether elements carry string values.
    pub fn has_values(&self) -> bool {
        self.carrier != Carrier::Labels
    }

    pub fn label(&self, x: Elem) -> Result<Label> {
        self.word.check(x)?;
        Ok(self.roles[x.block].label(x.offset))
    }

    pub fn elem_of_label(&self, label: Label) -> Result<Elem> {
        // In the signed CPOs the element labeled 0 is m′.
        let candidates: &[Label] = match label {
            Label::Nat(0) => &[Label::Nat(0), Label::Signed(0)],
            _ => std::slice::from_ref(&label),
        };
        candidates
            .iter()
            .find_map(|&l| {
                self.roles
                    .iter()
                    .enumerate()
                    .find_map(|(b, r)| r.offset_of(l).map(|o| Elem::new(b, o)))
            })
            .ok_or_else(|| Error::BadElement(format!("label {label} in {}", self.name)))
    }

    pub fn value(&self, x: Elem) -> Result<Option<ElementValue>> {
        self.word.check(x)?;
        Ok(self.roles[x.block].value(self.carrier, x.offset))
    }

    pub fn elem_of_value(&self, v: &ElementValue) -> Result<Elem> {
        self.roles
            .iter()
            .enumerate()
            .find_map(|(b, r)| r.offset_of_value(self.carrier, v).map(|o| Elem::new(b, o)))
            .ok_or_else(|| Error::BadElement(format!("{v} is not an element of {}", self.name)))
    }

    pub fn contains_value(&self, v: &ElementValue) -> bool {
        self.elem_of_value(v).is_ok()
    }

    /// Parses an element literal: a label (`3`, `2'`, `inf`, `-1`, `m`) or a
    /// string / pair literal (`...0011`, `011...`, `(...000, 111...)`).
    pub fn parse_element(&self, literal: &str) -> Result<Elem> {
        let t = literal.trim();
        if t.contains("...") || t.contains('⋯') || t.contains('…') {
            return self.elem_of_value(&t.parse()?);
        }
        self.elem_of_label(t.parse()?)
    }

    /// Display name: the string value when there is one, else the label.
    pub fn describe(&self, x: Elem) -> Result<String> {
        Ok(match self.value(x)? {
            Some(v) => format!("{} = {}", self.label(x)?, v),
            None => self.label(x)?.to_string(),
        })
    }
}
