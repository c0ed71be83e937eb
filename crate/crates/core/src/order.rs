//! Countable linear orders written as order-type words.
//!
//! A word is a finite sum of atoms drawn from `n` (a finite chain of `n`
//! elements), `ω` and `ω*`. Elements are addressed symbolically by block
//! index and offset, so nothing here ever materializes an infinite set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One summand of an order-type word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderAtom {
    /// A finite chain with the given (positive) number of elements.
    Fin(u64),
    /// The order type of the naturals.
    Omega,
    /// The reverse of `Omega`.
    OmegaStar,
}

impl OrderAtom {
    /// Offset of the least element of the block, if it has one.
    pub fn min_offset(self) -> Option<u64> {
        match self {
            OrderAtom::Fin(_) | OrderAtom::Omega => Some(0),
            OrderAtom::OmegaStar => None,
        }
    }

    /// Offset of the greatest element of the block, if it has one.
    pub fn max_offset(self) -> Option<u64> {
        match self {
            OrderAtom::Fin(k) => Some(k - 1),
            OrderAtom::OmegaStar => Some(0),
            OrderAtom::Omega => None,
        }
    }

    /// The atom read backwards.
    pub fn reversed(self) -> OrderAtom {
        match self {
            OrderAtom::Fin(k) => OrderAtom::Fin(k),
            OrderAtom::Omega => OrderAtom::OmegaStar,
            OrderAtom::OmegaStar => OrderAtom::Omega,
        }
    }

    fn contains_offset(self, offset: u64) -> bool {
        match self {
            OrderAtom::Fin(k) => offset < k,
            OrderAtom::Omega | OrderAtom::OmegaStar => true,
        }
    }

    fn ascii(self) -> String {
        match self {
            OrderAtom::Fin(k) => k.to_string(),
            OrderAtom::Omega => "w".into(),
            OrderAtom::OmegaStar => "w*".into(),
        }
    }
}

impl fmt::Display for OrderAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderAtom::Fin(k) => write!(f, "{k}"),
            OrderAtom::Omega => f.write_str("ω"),
            OrderAtom::OmegaStar => f.write_str("ω*"),
        }
    }
}

/// Symbolic address of an element: block index and offset inside the block.
///
/// For `Fin` and `Omega` blocks the offset counts up from the block's least
/// element; for `OmegaStar` blocks it counts down from the greatest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem {
    pub block: usize,
    pub offset: u64,
}

impl Elem {
    pub const fn new(block: usize, offset: u64) -> Self {
        Elem { block, offset }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.block, self.offset)
    }
}

/// Immediate predecessor and successor of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Neighbors {
    pub predecessor: Option<Elem>,
    pub successor: Option<Elem>,
}

impl Neighbors {
    pub fn is_isolated(&self) -> bool {
        self.predecessor.is_none() && self.successor.is_none()
    }
}

/// Least and greatest elements of a word, when they exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremes {
    pub bottom: Option<Elem>,
    pub top: Option<Elem>,
}

/// A maximal run of elements at finite distance from each other.
///
/// The list of components of a word is an isomorphism invariant computed
/// without the rewrite rules, which is what makes it useful as a cross-check
/// of [`OrderWord::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Finite(u64),
    Omega,
    OmegaStar,
    /// `ω* + ω`, possibly with a finite chain in the middle.
    Zeta,
}

/// A nonempty order-type word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<OrderAtom>", into = "Vec<OrderAtom>")]
pub struct OrderWord {
    atoms: Vec<OrderAtom>,
}

impl TryFrom<Vec<OrderAtom>> for OrderWord {
    type Error = Error;

    fn try_from(atoms: Vec<OrderAtom>) -> Result<Self> {
        OrderWord::new(atoms)
    }
}

impl From<OrderWord> for Vec<OrderAtom> {
    fn from(w: OrderWord) -> Self {
        w.atoms
    }
}

impl OrderWord {
    pub fn new(atoms: Vec<OrderAtom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidWord("a word needs at least one atom".into()));
        }
        if atoms.iter().any(|a| matches!(a, OrderAtom::Fin(0))) {
            return Err(Error::InvalidWord("finite atoms must have at least one element".into()));
        }
        Ok(OrderWord { atoms })
    }

    pub fn atoms(&self) -> &[OrderAtom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The word read backwards (the opposite order).
    pub fn reversed(&self) -> OrderWord {
        OrderWord {
            atoms: self.atoms.iter().rev().map(|a| a.reversed()).collect(),
        }
    }

    /// Concatenation `self + other`.
    pub fn concat(&self, other: &OrderWord) -> OrderWord {
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        OrderWord { atoms }
    }

    pub fn is_normal(&self) -> bool {
        self.atoms.windows(2).all(|w| {
            !matches!(
                (w[0], w[1]),
                (OrderAtom::Fin(_), OrderAtom::Fin(_))
                    | (OrderAtom::Fin(_), OrderAtom::Omega)
                    | (OrderAtom::OmegaStar, OrderAtom::Fin(_))
            )
        })
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.atoms.get(x.block).is_some_and(|a| a.contains_offset(x.offset))
    }

    pub fn check(&self, x: Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::BadElement(format!("{x} in {self}")))
        }
    }

    /// Total order on elements.
    pub fn compare(&self, a: Elem, b: Elem) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.compare_unchecked(a, b))
    }

    pub(crate) fn compare_unchecked(&self, a: Elem, b: Elem) -> Ordering {
        a.block.cmp(&b.block).then_with(|| match self.atoms[a.block] {
            OrderAtom::OmegaStar => b.offset.cmp(&a.offset),
            _ => a.offset.cmp(&b.offset),
        })
    }

    fn block_max(&self, block: usize) -> Option<Elem> {
        self.atoms[block].max_offset().map(|o| Elem::new(block, o))
    }

    fn block_min(&self, block: usize) -> Option<Elem> {
        self.atoms[block].min_offset().map(|o| Elem::new(block, o))
    }

    pub fn predecessor(&self, x: Elem) -> Result<Option<Elem>> {
        self.check(x)?;
        let below_in_block = match self.atoms[x.block] {
            OrderAtom::OmegaStar => Some(x.offset + 1),
            _ => x.offset.checked_sub(1),
        };
        Ok(match below_in_block {
            Some(o) => Some(Elem::new(x.block, o)),
            None if x.block == 0 => None,
            None => self.block_max(x.block - 1),
        })
    }

    pub fn successor(&self, x: Elem) -> Result<Option<Elem>> {
        self.check(x)?;
        let above_in_block = match self.atoms[x.block] {
            OrderAtom::OmegaStar => x.offset.checked_sub(1),
            OrderAtom::Omega => Some(x.offset + 1),
            OrderAtom::Fin(k) => Some(x.offset + 1).filter(|&o| o < k),
        };
        Ok(match above_in_block {
            Some(o) => Some(Elem::new(x.block, o)),
            None if x.block + 1 == self.atoms.len() => None,
            None => self.block_min(x.block + 1),
        })
    }

    pub fn neighbors(&self, x: Elem) -> Result<Neighbors> {
        Ok(Neighbors {
            predecessor: self.predecessor(x)?,
            successor: self.successor(x)?,
        })
    }

    pub fn extremes(&self) -> Extremes {
        Extremes {
            bottom: self.block_min(0),
            top: self.block_max(self.atoms.len() - 1),
        }
    }

    /// Elements whose offset is at most `window`, in ascending order.
    pub fn window(&self, window: u64) -> Vec<Elem> {
        let mut out = Vec::new();
        for (block, atom) in self.atoms.iter().enumerate() {
            match *atom {
                OrderAtom::Fin(k) => out.extend((0..k).map(|o| Elem::new(block, o))),
                OrderAtom::Omega => out.extend((0..=window).map(|o| Elem::new(block, o))),
                OrderAtom::OmegaStar => out.extend((0..=window).rev().map(|o| Elem::new(block, o))),
            }
        }
        out
    }

    /// Normal form under `n·m → (n+m)`, `n·ω → ω` and `ω*·n → ω*`.
    pub fn normalize(&self) -> OrderWord {
        self.normalization().normal
    }

    /// Normal form together with the element correspondence it induces.
    pub fn normalization(&self) -> Normalization {
        // (atom, first source block, last source block)
        let mut stack: Vec<(OrderAtom, usize, usize)> = Vec::with_capacity(self.atoms.len());
        for (i, &atom) in self.atoms.iter().enumerate() {
            match (stack.last().copied(), atom) {
                (Some((OrderAtom::Fin(a), s, _)), OrderAtom::Fin(b)) => {
                    *stack.last_mut().unwrap() = (OrderAtom::Fin(a + b), s, i);
                }
                (Some((OrderAtom::Fin(_), s, _)), OrderAtom::Omega) => {
                    *stack.last_mut().unwrap() = (OrderAtom::Omega, s, i);
                }
                (Some((OrderAtom::OmegaStar, s, _)), OrderAtom::Fin(_)) => {
                    *stack.last_mut().unwrap() = (OrderAtom::OmegaStar, s, i);
                }
                _ => stack.push((atom, i, i)),
            }
        }
        Normalization {
            source: self.clone(),
            normal: OrderWord {
                atoms: stack.iter().map(|t| t.0).collect(),
            },
            groups: stack.iter().map(|t| (t.1, t.2)).collect(),
        }
    }

    /// Isomorphism invariant: the list of finite-distance components.
    pub fn signature(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.atoms.len() {
            let starts_star = self.atoms[i] == OrderAtom::OmegaStar;
            let mut fin = 0;
            let mut ends_omega = false;
            let mut j = i;
            loop {
                match self.atoms[j] {
                    OrderAtom::Fin(k) => fin += k,
                    OrderAtom::Omega => ends_omega = true,
                    OrderAtom::OmegaStar => {}
                }
                let joined = j + 1 < self.atoms.len()
                    && self.atoms[j].max_offset().is_some()
                    && self.atoms[j + 1].min_offset().is_some();
                if !joined {
                    break;
                }
                j += 1;
            }
            out.push(match (starts_star, ends_omega) {
                (true, true) => Component::Zeta,
                (true, false) => Component::OmegaStar,
                (false, true) => Component::Omega,
                (false, false) => Component::Finite(fin),
            });
            i = j + 1;
        }
        out
    }

    /// Isomorphism decision by normal-form equality.
    pub fn iso(&self, other: &OrderWord) -> bool {
        let verdict = self.normalize() == other.normalize();
        debug_assert_eq!(
            verdict,
            self.signature() == other.signature(),
            "normal forms and signatures disagree on {self} vs {other}"
        );
        verdict
    }

    /// ASCII rendering (`w+1+w*`), accepted back by [`FromStr`].
    pub fn to_ascii(&self) -> String {
        self.atoms.iter().map(|a| a.ascii()).collect::<Vec<_>>().join("+")
    }
}

impl fmt::Display for OrderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut atoms = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let atom = match part {
                "ω" | "w" | "omega" => OrderAtom::Omega,
                "ω*" | "w*" | "omega*" | "omega_star" => OrderAtom::OmegaStar,
                _ => match part.parse::<u64>() {
                    Ok(k) if k > 0 => OrderAtom::Fin(k),
                    _ => return Err(Error::parse(s, format!("unknown atom `{part}`"))),
                },
            };
            atoms.push(atom);
        }
        OrderWord::new(atoms)
    }
}

/// The result of normalizing a word, with the induced order isomorphism
/// between source elements and normal-form elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    source: OrderWord,
    normal: OrderWord,
    /// Inclusive range of source blocks merged into each normal block.
    groups: Vec<(usize, usize)>,
}

impl Normalization {
    pub fn source(&self) -> &OrderWord {
        &self.source
    }

    pub fn normal(&self) -> &OrderWord {
        &self.normal
    }

    fn fin_size(&self, block: usize) -> u64 {
        match self.source.atoms[block] {
            OrderAtom::Fin(k) => k,
            _ => 0,
        }
    }

    /// Image of a source element in the normal form.
    pub fn to_normal(&self, x: Elem) -> Result<Elem> {
        self.source.check(x)?;
        let g = self
            .groups
            .iter()
            .position(|&(s, e)| s <= x.block && x.block <= e)
            .expect("groups cover every source block");
        let (start, end) = self.groups[g];
        let offset = match self.normal.atoms[g] {
            OrderAtom::OmegaStar => {
                let later: u64 = (x.block + 1..=end).map(|b| self.fin_size(b)).sum();
                match self.source.atoms[x.block] {
                    OrderAtom::Fin(k) => later + (k - 1 - x.offset),
                    _ => later + x.offset,
                }
            }
            _ => {
                let before: u64 = (start..x.block).map(|b| self.fin_size(b)).sum();
                before + x.offset
            }
        };
        Ok(Elem::new(g, offset))
    }

    /// Preimage of a normal-form element.
    pub fn from_normal(&self, y: Elem) -> Result<Elem> {
        self.normal.check(y)?;
        let (start, end) = self.groups[y.block];
        match self.normal.atoms[y.block] {
            OrderAtom::OmegaStar => {
                let mut rest = y.offset;
                for b in (start + 1..=end).rev() {
                    let k = self.fin_size(b);
                    if rest < k {
                        return Ok(Elem::new(b, k - 1 - rest));
                    }
                    rest -= k;
                }
                Ok(Elem::new(start, rest))
            }
            _ => {
                let mut rest = y.offset;
                for b in start..=end {
                    match self.source.atoms[b] {
                        OrderAtom::Fin(k) if rest >= k => rest -= k,
                        _ => return Ok(Elem::new(b, rest)),
                    }
                }
                unreachable!("offset checked against the normal block")
            }
        }
    }
}
