//! Scott-continuous functions into `2`, the question `D ≅ C(D, 2)` and the
//! fixed point engine built on the answer.
//!
//! A continuous `g: D → 2` is identified with the set `g⁻¹(1)`, a final
//! segment of `D` that is empty, has no least element, or whose least
//! element is the bottom or has an immediate predecessor.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::named::{Label, NamedCpo};
use crate::order::{Elem, Normalization, OrderAtom, OrderWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OpenSegment {
    Empty,
    UpFrom { x: Elem },
    BlockTail { block: usize },
}

impl OpenSegment {
    pub fn up_from(x: Elem) -> Self {
        OpenSegment::UpFrom { x }
    }

    pub fn check(&self, w: &OrderWord) -> Result<()> {
        match *self {
            OpenSegment::Empty => Ok(()),
            OpenSegment::UpFrom { x } => {
                w.check(x)?;
                if w.extremes().bottom == Some(x) || w.predecessor(x)?.is_some() {
                    Ok(())
                } else {
                    Err(Error::InvalidSegment(format!(
                        "UP_FROM{x}: {x} is neither the bottom nor has an immediate predecessor"
                    )))
                }
            }
            OpenSegment::BlockTail { block } => match w.atoms().get(block) {
                Some(OrderAtom::OmegaStar) => Ok(()),
                _ => Err(Error::InvalidSegment(format!("BLOCK_TAIL({block}) needs an ω* block"))),
            },
        }
    }

    fn contains_unchecked(&self, w: &OrderWord, x: Elem) -> bool {
        match *self {
            OpenSegment::Empty => false,
            OpenSegment::UpFrom { x: y } => w.compare_unchecked(x, y) != Ordering::Less,
            OpenSegment::BlockTail { block } => x.block >= block,
        }
    }

    /// Segment name with elements written as labels of `cpo`.
    pub fn describe(&self, cpo: &NamedCpo) -> String {
        match *self {
            OpenSegment::Empty => "EMPTY".into(),
            OpenSegment::UpFrom { x } => match cpo.label(x) {
                Ok(l) => format!("UP_FROM({l})"),
                Err(_) => self.to_string(),
            },
            OpenSegment::BlockTail { block } => format!("BLOCK_TAIL({block})"),
        }
    }
}

impl fmt::Display for OpenSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpenSegment::Empty => f.write_str("EMPTY"),
            OpenSegment::UpFrom { x } => write!(f, "UP_FROM{x}"),
            OpenSegment::BlockTail { block } => write!(f, "BLOCK_TAIL({block})"),
        }
    }
}

/// `1` iff `x ∈ s`.
pub fn eval_segment(w: &OrderWord, s: &OpenSegment, x: Elem) -> Result<u8> {
    w.check(x)?;
    s.check(w)?;
    Ok(s.contains_unchecked(w, x) as u8)
}

/// Where a block of the function-space word comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Empty,
    /// `UP_FROM(block, start..k)`, largest segment first.
    Fin {
        block: usize,
        start: u64,
        k: u64,
    },
    /// `UP_FROM(block, start..)` of an ω block, an ω* of segments.
    Omega {
        block: usize,
        start: u64,
    },
    /// `UP_FROM` of the elements of an ω* block, an ω of segments.
    OmegaStar {
        block: usize,
    },
    Tail {
        block: usize,
    },
}

/// `C(D, 2)` for a word `D`, ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncSpace {
    base: OrderWord,
    raw: OrderWord,
    sources: Vec<Source>,
    normalization: Normalization,
}

/// Enumerates the Scott-open final segments of `w`.
pub fn scott_opens(w: &OrderWord) -> FuncSpace {
    // Contributions in ascending cut position, then reversed: a later cut
    // is a smaller segment.
    let mut ascending: Vec<(OrderAtom, Source)> = Vec::new();
    for (j, &atom) in w.atoms().iter().enumerate() {
        let start = u64::from(j > 0 && w.atoms()[j - 1] == OrderAtom::Omega);
        match atom {
            OrderAtom::Fin(k) if k > start => {
                ascending.push((OrderAtom::Fin(k - start), Source::Fin { block: j, start, k }))
            }
            OrderAtom::Fin(_) => {}
            OrderAtom::Omega => ascending.push((OrderAtom::Omega, Source::Omega { block: j, start })),
            OrderAtom::OmegaStar => {
                ascending.push((OrderAtom::Fin(1), Source::Tail { block: j }));
                ascending.push((OrderAtom::OmegaStar, Source::OmegaStar { block: j }));
            }
        }
    }
    let mut atoms = vec![OrderAtom::Fin(1)];
    let mut sources = vec![Source::Empty];
    for (atom, source) in ascending.into_iter().rev() {
        atoms.push(atom.reversed());
        sources.push(source);
    }
    let raw = OrderWord::new(atoms).expect("nonempty");
    let normalization = raw.normalization();
    FuncSpace {
        base: w.clone(),
        raw,
        sources,
        normalization,
    }
}

impl FuncSpace {
    pub fn base(&self) -> &OrderWord {
        &self.base
    }

    /// Word of the segment order before normalization, one block per kind
    /// of segment.
    pub fn raw_word(&self) -> &OrderWord {
        &self.raw
    }

    pub fn word(&self) -> &OrderWord {
        self.normalization.normal()
    }

    pub fn normalization(&self) -> &Normalization {
        &self.normalization
    }

    /// Segment at a position of [`FuncSpace::raw_word`].
    pub fn segment_at(&self, e: Elem) -> Result<OpenSegment> {
        self.raw.check(e)?;
        Ok(match self.sources[e.block] {
            Source::Empty => OpenSegment::Empty,
            Source::Fin { block, k, .. } => OpenSegment::up_from(Elem::new(block, k - 1 - e.offset)),
            Source::Omega { block, start } => OpenSegment::up_from(Elem::new(block, start + e.offset)),
            Source::OmegaStar { block } => OpenSegment::up_from(Elem::new(block, e.offset)),
            Source::Tail { block } => OpenSegment::BlockTail { block },
        })
    }

    /// Position of a segment in [`FuncSpace::raw_word`].
    pub fn position(&self, s: &OpenSegment) -> Result<Elem> {
        s.check(&self.base)?;
        let found = self.sources.iter().enumerate().find_map(|(b, src)| match (*src, *s) {
            (Source::Empty, OpenSegment::Empty) => Some(Elem::new(b, 0)),
            (Source::Tail { block }, OpenSegment::BlockTail { block: j }) if block == j => Some(Elem::new(b, 0)),
            (Source::Fin { block, start, k }, OpenSegment::UpFrom { x }) if block == x.block && x.offset >= start => {
                Some(Elem::new(b, k - 1 - x.offset))
            }
            (Source::Omega { block, start }, OpenSegment::UpFrom { x }) if block == x.block && x.offset >= start => {
                Some(Elem::new(b, x.offset - start))
            }
            (Source::OmegaStar { block }, OpenSegment::UpFrom { x }) if block == x.block => {
                Some(Elem::new(b, x.offset))
            }
            _ => None,
        });
        Ok(found.expect("every valid segment is enumerated"))
    }

    /// Segment at a position of the normalized word.
    pub fn segment_at_normal(&self, y: Elem) -> Result<OpenSegment> {
        self.segment_at(self.normalization.from_normal(y)?)
    }

    pub fn normal_position(&self, s: &OpenSegment) -> Result<Elem> {
        self.normalization.to_normal(self.position(s)?)
    }

    /// Inclusion order on segments.
    pub fn compare(&self, s: &OpenSegment, t: &OpenSegment) -> Result<Ordering> {
        Ok(self.raw.compare_unchecked(self.position(s)?, self.position(t)?))
    }

    /// Segments at positions of the raw word within `window`, ascending.
    pub fn segments(&self, window: u64) -> Vec<OpenSegment> {
        self.raw
            .window(window)
            .into_iter()
            .map(|e| self.segment_at(e).expect("window positions are valid"))
            .collect()
    }
}

/// Observable shape of a word, used to say why two words differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Feature {
    Bottom,
    Top,
    TopPredecessor,
    BottomSuccessor,
}

impl Feature {
    const ALL: [Feature; 4] = [
        Feature::Bottom,
        Feature::Top,
        Feature::TopPredecessor,
        Feature::BottomSuccessor,
    ];

    fn holds(self, w: &OrderWord) -> bool {
        let ex = w.extremes();
        match self {
            Feature::Bottom => ex.bottom.is_some(),
            Feature::Top => ex.top.is_some(),
            Feature::TopPredecessor => ex.top.is_some_and(|t| w.predecessor(t).ok().flatten().is_some()),
            Feature::BottomSuccessor => ex.bottom.is_some_and(|b| w.successor(b).ok().flatten().is_some()),
        }
    }

    /// How the order and its function space differ on this feature.
    fn contrast(self, in_order: bool) -> String {
        let space = if in_order { "has none" } else { "has one" };
        match self {
            Feature::Bottom => format!(
                "the order {} least element, its function space {space}",
                if in_order { "has a" } else { "has no" }
            ),
            Feature::Top => format!(
                "the order {} greatest element, its function space {space}",
                if in_order { "has a" } else { "has no" }
            ),
            Feature::TopPredecessor => format!(
                "the top element {} immediate predecessor, the top of the function space {space}",
                if in_order { "has an" } else { "has no" }
            ),
            Feature::BottomSuccessor => format!(
                "the bottom element {} immediate successor, the bottom of the function space {space}",
                if in_order { "has an" } else { "has no" }
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfIsoVerdict {
    pub isomorphic: bool,
    pub word: String,
    pub function_space: String,
    /// First shape feature present on one side only.
    pub feature: Option<Feature>,
    pub reason: Option<String>,
}

impl fmt::Display for SelfIsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.isomorphic {
            write!(f, "isomorphic: {} ≅ C(D,2) = {}", self.word, self.function_space)
        } else {
            write!(f, "not isomorphic: {}", self.reason.as_deref().unwrap_or(""))
        }
    }
}

pub fn self_iso(w: &OrderWord) -> SelfIsoVerdict {
    let fs = scott_opens(w);
    let normal = w.normalize();
    let isomorphic = normal == *fs.word();
    let (feature, reason) = if isomorphic {
        (None, None)
    } else {
        let feature = Feature::ALL.into_iter().find(|f| f.holds(w) != f.holds(fs.word()));
        let mut reason = format!("{normal} vs {}", fs.word());
        if let Some(f) = feature {
            reason.push_str("; ");
            reason.push_str(&f.contrast(f.holds(w)));
        }
        (feature, Some(reason))
    };
    SelfIsoVerdict {
        isomorphic,
        word: normal.to_string(),
        function_space: fs.word().to_string(),
        feature,
        reason,
    }
}

/// The order isomorphism `D → C(D, 2)`, unique because these words are
/// rigid: both sides factor through the shared normal form.
#[derive(Debug, Clone)]
pub struct CanonicalIso {
    base: Normalization,
    fs: FuncSpace,
}

pub fn canonical_iso(w: &OrderWord) -> Result<CanonicalIso> {
    let verdict = self_iso(w);
    if !verdict.isomorphic {
        return Err(Error::NotIsomorphic(verdict.reason.unwrap_or_default()));
    }
    Ok(CanonicalIso {
        base: w.normalization(),
        fs: scott_opens(w),
    })
}

impl CanonicalIso {
    pub fn function_space(&self) -> &FuncSpace {
        &self.fs
    }

    pub fn apply(&self, x: Elem) -> Result<OpenSegment> {
        self.fs.segment_at_normal(self.base.to_normal(x)?)
    }

    pub fn inverse(&self, s: &OpenSegment) -> Result<Elem> {
        self.base.from_normal(self.fs.normal_position(s)?)
    }
}

/// A continuous self-map of `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mu {
    Const0,
    Const1,
    Id,
}

impl Mu {
    pub const ALL: [Mu; 3] = [Mu::Const0, Mu::Const1, Mu::Id];

    pub fn apply(self, bit: u8) -> u8 {
        match self {
            Mu::Const0 => 0,
            Mu::Const1 => 1,
            Mu::Id => bit,
        }
    }

    /// The map with the given values at 0 and 1, if it is continuous.
    pub fn from_values(at0: u8, at1: u8) -> Option<Mu> {
        match (at0, at1) {
            (0, 0) => Some(Mu::Const0),
            (1, 1) => Some(Mu::Const1),
            (0, 1) => Some(Mu::Id),
            _ => None,
        }
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mu::Const0 => "CONST0",
            Mu::Const1 => "CONST1",
            Mu::Id => "ID",
        })
    }
}

impl FromStr for Mu {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "const0" | "0" => Ok(Mu::Const0),
            "const1" | "1" => Ok(Mu::Const1),
            "id" | "identity" => Ok(Mu::Id),
            _ => Err(Error::parse(s, "expected const0, const1 or id")),
        }
    }
}

/// A map `2 → 2` given by its values is continuous iff it is monotone.
pub fn mu_continuous(at0: u8, at1: u8) -> bool {
    at0 <= 1 && at1 <= 1 && at0 <= at1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointReport {
    pub cpo: crate::named::CpoName,
    pub mu: Mu,
    pub g: OpenSegment,
    /// `ψ_x` where `x = φ⁻¹(g)`.
    pub g_name: String,
    pub preimage: Elem,
    pub preimage_label: Label,
    pub value: u8,
    pub steps: Vec<String>,
}

impl fmt::Display for FixedPointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "{}. {s}", i + 1)?;
        }
        write!(
            f,
            "fixed point: {}({}) = {}",
            self.g_name, self.preimage_label, self.value
        )
    }
}

pub fn psi_name(label: Label) -> String {
    format!("ψ_{label}")
}

pub fn psi_ident(label: Label) -> String {
    format!("psi_{}", label.ascii())
}

/// Membership of `x` in `φ(x)` is constant on each infinite block beyond
/// this offset: the normal form moves offsets by at most the finite mass
/// of the word.
fn probe_bound(w: &OrderWord) -> u64 {
    let fin: u64 = w
        .atoms()
        .iter()
        .map(|a| match a {
            OrderAtom::Fin(k) => *k,
            _ => 0,
        })
        .sum();
    fin + w.len() as u64 + 2
}

/// The diagonal `{x : x ∈ φ(x)}` as a segment, with a per-block summary.
fn diagonal(w: &OrderWord, iso: &CanonicalIso) -> Result<(OpenSegment, Vec<String>)> {
    let bound = probe_bound(w);
    let diag = |x: Elem| -> Result<bool> { Ok(iso.apply(x)?.contains_unchecked(w, x)) };
    let mut summary = Vec::new();
    let mut segment: Option<OpenSegment> = None;
    for (j, &atom) in w.atoms().iter().enumerate() {
        let offsets: Vec<u64> = match atom {
            OrderAtom::Fin(k) => (0..k).collect(),
            _ => (0..=bound + 3).collect(),
        };
        let members: Vec<u64> = offsets
            .iter()
            .copied()
            .filter_map(|o| diag(Elem::new(j, o)).map(|d| d.then_some(o)).transpose())
            .collect::<Result<_>>()?;
        if !matches!(atom, OrderAtom::Fin(_)) {
            let tail: Vec<bool> = (bound..=bound + 3).map(|o| members.contains(&o)).collect();
            if tail.iter().any(|&t| t != tail[0]) {
                return Err(Error::InvalidSegment(format!("diagonal is not settled on block {j}")));
            }
        }
        summary.push(match (members.len(), offsets.len()) {
            (0, _) => format!("block {j} ({atom}): x ∉ φ(x)"),
            (m, n) if m == n => format!("block {j} ({atom}): x ∈ φ(x)"),
            _ => format!("block {j} ({atom}): x ∈ φ(x) for offsets {members:?}"),
        });
        if segment.is_some() || members.is_empty() {
            continue;
        }
        segment = Some(match atom {
            OrderAtom::OmegaStar if members.contains(&bound) => OpenSegment::BlockTail { block: j },
            OrderAtom::OmegaStar => OpenSegment::up_from(Elem::new(j, *members.iter().max().unwrap())),
            _ => OpenSegment::up_from(Elem::new(j, members[0])),
        });
    }
    let segment = segment.unwrap_or(OpenSegment::Empty);
    segment.check(w)?;
    for x in w.window(bound) {
        if segment.contains_unchecked(w, x) != diag(x)? {
            return Err(Error::InvalidSegment(format!("diagonal is not {segment} at {x}")));
        }
    }
    Ok((segment, summary))
}

fn full_segment(w: &OrderWord) -> OpenSegment {
    match (w.extremes().bottom, w.atoms()[0]) {
        (Some(b), _) => OpenSegment::up_from(b),
        (None, _) => OpenSegment::BlockTail { block: 0 },
    }
}

/// Runs the fixed point construction: `g(x) = μ(φ(x)(x))`, then
/// `g(φ⁻¹(g))` is a fixed point of `μ`.
pub fn fpt(cpo: &NamedCpo, mu: Mu) -> Result<FixedPointReport> {
    let w = cpo.word();
    let iso = canonical_iso(w)?;
    let mut steps = vec![format!(
        "{} ≅ C({},2): both have normal form {}",
        cpo.name(),
        cpo.name(),
        iso.function_space().word()
    )];
    let (d, summary) = diagonal(w, &iso)?;
    steps.push(format!("diagonal x ↦ φ(x)(x): {}", summary.join("; ")));
    let g = match mu {
        Mu::Const0 => OpenSegment::Empty,
        Mu::Const1 => full_segment(w),
        Mu::Id => d,
    };
    let preimage = iso.inverse(&g)?;
    let label = cpo.label(preimage)?;
    let g_name = psi_name(label);
    steps.push(format!(
        "g = μ ∘ diagonal with μ = {mu}: g = {} = {g_name}",
        g.describe(cpo)
    ));
    steps.push(format!("φ⁻¹(g) = {label}"));
    let value = eval_segment(w, &g, preimage)?;
    let check = mu.apply(value);
    steps.push(format!("g(φ⁻¹(g)) = {g_name}({label}) = {value}, μ({value}) = {check}"));
    assert_eq!(value, check, "g(φ⁻¹(g)) is a fixed point of μ");
    Ok(FixedPointReport {
        cpo: cpo.name(),
        mu,
        g,
        g_name,
        preimage,
        preimage_label: label,
        value,
        steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub ident: String,
    pub segment: OpenSegment,
    pub values: Vec<u8>,
}

/// Values `ψ(x)` of continuous functions on a window of a CPO.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionTable {
    pub cpo: crate::named::CpoName,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

/// When `D ≅ C(D,2)` the rows are `ψ_x = φ(x)` for `x` in the window, in the
/// order of `D`. Otherwise rows are named `ψ″_x` for `UP_FROM(x)` and listed
/// from the full segment down, with `ψ″_∞` the empty one.
pub fn function_table(cpo: &NamedCpo, window: u64) -> Result<FunctionTable> {
    let w = cpo.word();
    let xs = w.window(window);
    let columns = xs
        .iter()
        .map(|&x| cpo.label(x).map(|l| l.to_string()))
        .collect::<Result<_>>()?;
    let row = |name: String, ident: String, segment: OpenSegment| TableRow {
        name,
        ident,
        segment,
        values: xs.iter().map(|&x| segment.contains_unchecked(w, x) as u8).collect(),
    };
    let rows = match canonical_iso(w) {
        Ok(iso) => xs
            .iter()
            .map(|&x| {
                let l = cpo.label(x)?;
                Ok(row(psi_name(l), psi_ident(l), iso.apply(x)?))
            })
            .collect::<Result<Vec<_>>>()?,
        Err(_) => {
            let fs = scott_opens(w);
            fs.segments(window)
                .into_iter()
                .rev()
                .map(|s| {
                    let (name, ident) = match s {
                        OpenSegment::Empty => ("∞".to_string(), "inf".to_string()),
                        OpenSegment::UpFrom { x } => {
                            let l = cpo.label(x)?;
                            (l.to_string(), l.ascii())
                        }
                        OpenSegment::BlockTail { block } => (format!("tail{block}"), format!("tail{block}")),
                    };
                    Ok(row(format!("ψ″_{name}"), format!("psi2_{ident}"), s))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(FunctionTable {
        cpo: cpo.name(),
        columns,
        rows,
    })
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = |s: &str| s.chars().count();
        let first = self
            .rows
            .iter()
            .map(|r| width(&r.name))
            .max()
            .unwrap_or(0)
            .max(width("ψ\\x"));
        let cols: Vec<usize> = self.columns.iter().map(|c| width(c).max(1)).collect();
        write!(f, "ψ\\x{}", " ".repeat(first - width("ψ\\x")))?;
        for (c, w) in self.columns.iter().zip(&cols) {
            write!(f, " {}{c}", " ".repeat(w - width(c)))?;
        }
        writeln!(f)?;
        for r in &self.rows {
            write!(f, "{}{}", r.name, " ".repeat(first - width(&r.name)))?;
            for (v, w) in r.values.iter().zip(&cols) {
                write!(f, " {}{v}", " ".repeat(w - 1))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::CpoName;
    use crate::stages::enumerate_monotone;
    use proptest::prelude::*;

    fn named(n: CpoName) -> NamedCpo {
        NamedCpo::new(n)
    }

    fn word(s: &str) -> OrderWord {
        s.parse().unwrap()
    }

    #[test]
    fn function_space_words() {
        assert_eq!(scott_opens(&word("ω+1+ω*")).word().to_string(), "ω+1+ω*");
        assert_eq!(scott_opens(&word("ω+1")).word().to_string(), "1+ω*");
        assert_eq!(scott_opens(&word("5")).word().to_string(), "6");
        assert_eq!(scott_opens(&word("ω+1+1+ω*")).word().to_string(), "ω+2+ω*");
        assert_eq!(scott_opens(&word("1+ω*+ω+1")).word().to_string(), "1+ω*+ω+2");
    }

    #[test]
    fn up_from_infinity_is_not_open() {
        let phi = named(CpoName::Phi);
        let inf = phi.parse_element("inf").unwrap();
        assert!(matches!(
            OpenSegment::up_from(inf).check(phi.word()),
            Err(Error::InvalidSegment(_))
        ));
        let fs = scott_opens(phi.word());
        assert!(!fs.segments(50).contains(&OpenSegment::up_from(inf)));
        assert!(OpenSegment::BlockTail { block: 0 }.check(phi.word()).is_err());
    }

    #[test]
    fn eval_examples() {
        let phi = named(CpoName::Phi);
        let w = phi.word();
        let inf = phi.parse_element("inf").unwrap();
        assert_eq!(eval_segment(w, &OpenSegment::BlockTail { block: 2 }, inf).unwrap(), 0);
        let zero = phi.parse_element("0").unwrap();
        for x in w.window(10) {
            assert_eq!(eval_segment(w, &OpenSegment::up_from(zero), x).unwrap(), 1);
            assert_eq!(eval_segment(w, &OpenSegment::Empty, x).unwrap(), 0);
        }
        assert!(matches!(
            eval_segment(w, &OpenSegment::Empty, Elem::new(1, 1)),
            Err(Error::BadElement(_))
        ));
    }

    /// Finite chains: the segments are the threshold functions found by
    /// brute force, in the same pointwise order.
    #[test]
    fn finite_chains_match_brute_force() {
        for k in 1..=8u64 {
            let w = OrderWord::new(vec![OrderAtom::Fin(k)]).unwrap();
            let fs = scott_opens(&w);
            let as_bits: Vec<String> = fs
                .segments(k)
                .iter()
                .map(|s| {
                    (0..k)
                        .map(|o| {
                            if s.contains_unchecked(&w, Elem::new(0, o)) {
                                '1'
                            } else {
                                '0'
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(as_bits, enumerate_monotone(k as usize));
        }
    }

    #[test]
    fn verdicts() {
        assert!(self_iso(&word("ω+1+ω*")).isomorphic);
        let theta = self_iso(&word("ω+1"));
        assert!(!theta.isomorphic);
        assert!(theta.reason.as_deref().unwrap().starts_with("ω+1 vs 1+ω*"));
        let v = self_iso(named(CpoName::V).word());
        assert!(!v.isomorphic);
        assert_eq!(v.feature, Some(Feature::TopPredecessor));
        assert!(v.reason.as_deref().unwrap().contains("immediate predecessor"), "{v}");
        for (n, applicable) in [
            (CpoName::Lambda, true),
            (CpoName::LambdaPrime, true),
            (CpoName::LambdaHatPrime, true),
            (CpoName::V, false),
        ] {
            assert_eq!(self_iso(named(n).word()).isomorphic, applicable, "{n}");
        }
    }

    #[test]
    fn canonical_iso_on_phi() {
        let phi = named(CpoName::Phi);
        let iso = canonical_iso(phi.word()).unwrap();
        let at = |l: &str| iso.apply(phi.parse_element(l).unwrap()).unwrap();
        let el = |l: &str| phi.parse_element(l).unwrap();
        assert_eq!(at("0"), OpenSegment::Empty);
        assert_eq!(at("1"), OpenSegment::up_from(el("0'")));
        assert_eq!(at("3"), OpenSegment::up_from(el("2'")));
        assert_eq!(at("inf"), OpenSegment::BlockTail { block: 2 });
        assert_eq!(at("4'"), OpenSegment::up_from(el("4")));
        assert_eq!(at("0'"), OpenSegment::up_from(el("0")));
        assert!(matches!(
            canonical_iso(named(CpoName::Theta).word()),
            Err(Error::NotIsomorphic(_))
        ));
    }

    #[test]
    fn canonical_iso_on_lambda_prime() {
        let lp = named(CpoName::LambdaPrime);
        let iso = canonical_iso(lp.word()).unwrap();
        let el = |l: &str| lp.parse_element(l).unwrap();
        assert_eq!(iso.apply(el("inf'")).unwrap(), OpenSegment::up_from(el("inf'")));
        assert_eq!(iso.apply(el("inf")).unwrap(), OpenSegment::BlockTail { block: 3 });
    }

    /// ψ cells for Φ from the row descriptions, written out independently
    /// of the segment machinery.
    fn psi_cell(row: Label, col: Label) -> u8 {
        let rank = |l: Label| -> (u8, i64) {
            match l {
                Label::Nat(n) => (0, n as i64),
                Label::Inf => (1, 0),
                Label::InfPrime => (2, 0),
                Label::Primed(n) => (3, -(n as i64)),
                _ => unreachable!(),
            }
        };
        match row {
            Label::Nat(0) => 0,
            // ψ_n: 1 exactly on (n-1)′ … 0′
            Label::Nat(n) => matches!(col, Label::Primed(m) if m < n) as u8,
            // ψ_∞: 1 on the primes
            Label::Inf => matches!(col, Label::Primed(_)) as u8,
            // ψ_∞′: 1 from ∞′ on
            Label::InfPrime => matches!(col, Label::InfPrime | Label::Primed(_)) as u8,
            // ψ_n′: 1 from n on
            Label::Primed(n) => (rank(col) >= rank(Label::Nat(n))) as u8,
            _ => unreachable!(),
        }
    }

    #[test]
    fn tables_three_and_seven_cell_for_cell() {
        for name in [CpoName::Phi, CpoName::Lambda, CpoName::LambdaPrime] {
            let cpo = named(name);
            let table = function_table(&cpo, 5).unwrap();
            let labels: Vec<Label> = cpo.word().window(5).iter().map(|&x| cpo.label(x).unwrap()).collect();
            assert_eq!(table.rows.len(), labels.len());
            for (row, &rl) in table.rows.iter().zip(&labels) {
                assert_eq!(row.name, psi_name(rl));
                for (&v, &cl) in row.values.iter().zip(&labels) {
                    assert_eq!(v, psi_cell(rl, cl), "{name}: {} at {cl}", row.name);
                }
            }
        }
    }

    #[test]
    fn table_four() {
        let theta = named(CpoName::Theta);
        let t = function_table(&theta, 2).unwrap();
        let names: Vec<&str> = t.rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["ψ″_0", "ψ″_1", "ψ″_2", "ψ″_∞"]);
        assert_eq!(t.rows[0].values, vec![1, 1, 1, 1]);
        assert_eq!(t.rows[1].values, vec![0, 1, 1, 1]);
        assert_eq!(t.rows[3].values, vec![0, 0, 0, 0]);
        assert_eq!(t.columns, ["0", "1", "2", "∞"]);
    }

    #[test]
    fn fixed_points() {
        let expect = [
            (CpoName::Phi, Mu::Id, "ψ_∞", "∞", 0),
            (CpoName::Phi, Mu::Const0, "ψ_0", "0", 0),
            (CpoName::Phi, Mu::Const1, "ψ_0′", "0′", 1),
            (CpoName::Lambda, Mu::Id, "ψ_∞", "∞", 0),
            (CpoName::LambdaPrime, Mu::Id, "ψ_∞′", "∞′", 1),
            (CpoName::LambdaPrime, Mu::Const0, "ψ_0", "0", 0),
            (CpoName::LambdaPrime, Mu::Const1, "ψ_0′", "0′", 1),
            (CpoName::LambdaHatPrime, Mu::Id, "ψ_m", "m", 0),
        ];
        for (name, mu, g, pre, value) in expect {
            let r = fpt(&named(name), mu).unwrap();
            assert_eq!(
                (r.g_name.as_str(), r.preimage_label.to_string().as_str(), r.value),
                (g, pre, value),
                "{name} {mu}"
            );
            assert_eq!(mu.apply(r.value), r.value);
        }
        assert!(matches!(
            fpt(&named(CpoName::Theta), Mu::Id),
            Err(Error::NotIsomorphic(_))
        ));
        assert!(matches!(fpt(&named(CpoName::V), Mu::Id), Err(Error::NotIsomorphic(_))));
    }

    #[test]
    fn mu_maps() {
        assert!(mu_continuous(0, 1));
        assert!(mu_continuous(0, 0));
        assert!(mu_continuous(1, 1));
        assert!(!mu_continuous(1, 0));
        assert_eq!(Mu::from_values(1, 0), None);
        for mu in Mu::ALL {
            assert!(mu_continuous(mu.apply(0), mu.apply(1)));
        }
    }

    fn any_word() -> impl Strategy<Value = OrderWord> {
        let atom = prop_oneof![
            (1u64..4).prop_map(OrderAtom::Fin),
            Just(OrderAtom::Omega),
            Just(OrderAtom::OmegaStar),
        ];
        prop::collection::vec(atom, 1..6).prop_map(|a| OrderWord::new(a).unwrap())
    }

    proptest! {
        #[test]
        fn segments_are_open_and_ascending(w in any_word()) {
            let fs = scott_opens(&w);
            let segs = fs.segments(6);
            for s in &segs {
                prop_assert!(s.check(&w).is_ok());
                prop_assert_eq!(fs.segment_at(fs.position(s).unwrap()).unwrap(), *s);
            }
            for pair in segs.windows(2) {
                let xs = w.window(8);
                let sub = xs.iter().all(|&x| !pair[0].contains_unchecked(&w, x) || pair[1].contains_unchecked(&w, x));
                prop_assert!(sub);
                prop_assert_eq!(fs.compare(&pair[0], &pair[1]).unwrap(), Ordering::Less);
            }
        }

        /// Every open final segment visible on a window is enumerated.
        #[test]
        fn enumeration_is_complete(w in any_word()) {
            let fs = scott_opens(&w);
            let segs = fs.segments(12);
            for x in w.window(5) {
                let s = OpenSegment::up_from(x);
                prop_assert_eq!(s.check(&w).is_ok(), segs.contains(&s));
            }
        }

        #[test]
        fn function_space_is_iterable(w in any_word()) {
            let once = scott_opens(&w).word().clone();
            let twice = scott_opens(&once).word().clone();
            prop_assert!(twice.is_normal());
        }

        #[test]
        fn fpt_values_are_fixed(w in any_word()) {
            if let Ok(iso) = canonical_iso(&w) {
                for x in w.window(6) {
                    prop_assert_eq!(iso.inverse(&iso.apply(x).unwrap()).unwrap(), x);
                }
                for y in w.window(6) {
                    for x in w.window(6) {
                        let (sx, sy) = (iso.apply(x).unwrap(), iso.apply(y).unwrap());
                        prop_assert_eq!(w.compare(x, y).unwrap(), iso.function_space().compare(&sx, &sy).unwrap());
                    }
                }
                let (d, _) = diagonal(&w, &iso).unwrap();
                prop_assert!(d.check(&w).is_ok());
            }
        }
    }
}
