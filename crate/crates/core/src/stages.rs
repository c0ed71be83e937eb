//! Finite stages `S_n`, their embedding/projection pairs and the labeled
//! paths through the inverse limit.
//!
//! An element of `S_n` is identified by its label, the number of 1's in its
//! string: label `k` is `0^(n-1-k) 1^k`.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::named::Label;
use crate::order::{OrderAtom, OrderWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub n: usize,
    pub elements: Vec<String>,
}

impl Stage {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_ascending(&self) -> bool {
        self.elements.windows(2).all(|w| string_le(&w[0], &w[1]))
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.elements.join(" "))
    }
}

/// Pointwise order on equal-length bit strings.
fn string_le(a: &str, b: &str) -> bool {
    a.len() == b.len() && a.bytes().zip(b.bytes()).all(|(x, y)| x <= y)
}

/// String for label `k` of stage `n`; `λ` is the empty string of stage 1.
pub fn element_string(n: usize, k: usize) -> String {
    if n == 1 {
        return "λ".into();
    }
    format!("{}{}", "0".repeat(n - 1 - k), "1".repeat(k))
}

/// Panics if `n == 0`.
pub fn stage(n: usize) -> Stage {
    assert!(n >= 1, "stages start at 1");
    Stage {
        n,
        elements: (0..n).map(|k| element_string(n, k)).collect(),
    }
}

/// All monotone maps from the `m`-element chain into `2`, found by brute
/// force over all `2^m` maps. Each map is written as its bit string.
pub fn enumerate_monotone(m: usize) -> Vec<String> {
    assert!((1..=20).contains(&m), "chain size out of range");
    let mut out: Vec<String> = (0u32..1 << m)
        .map(|bits| {
            (0..m)
                .map(|i| if bits >> (m - 1 - i) & 1 == 1 { '1' } else { '0' })
                .collect::<String>()
        })
        .filter(|s: &String| s.as_bytes().windows(2).all(|w| w[0] <= w[1]))
        .collect();
    out.sort_by_key(|s| s.matches('1').count());
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Scheme {
    Standard,
    Alternative,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Standard => "standard",
            Scheme::Alternative => "alternative",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "standard" | "std" => Ok(Scheme::Standard),
            "alternative" | "alt" => Ok(Scheme::Alternative),
            _ => Err(Error::parse(s, "expected `standard` or `alternative`")),
        }
    }
}

/// Diagonal boundary of the standard scheme at stage `n`.
pub fn threshold(n: usize) -> usize {
    (n - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMap {
    pub from_stage: usize,
    pub to_stage: usize,
    pub mapping: Vec<usize>,
}

impl LabelMap {
    pub fn apply(&self, k: usize) -> usize {
        self.mapping[k]
    }

    pub fn is_monotone(&self) -> bool {
        self.mapping.windows(2).all(|w| w[0] <= w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpPair {
    pub scheme: Scheme,
    pub n: usize,
    /// `S_n → S_{n+1}`
    pub e: LabelMap,
    /// `S_{n+1} → S_n`
    pub p: LabelMap,
}

fn embed(scheme: Scheme, n: usize, k: usize) -> usize {
    match scheme {
        Scheme::Standard if k <= threshold(n) => k,
        Scheme::Standard => k + 1,
        Scheme::Alternative => k,
    }
}

fn project(scheme: Scheme, n: usize, k: usize) -> usize {
    match scheme {
        Scheme::Standard if k <= threshold(n) => k,
        Scheme::Standard => k - 1,
        Scheme::Alternative => k.min(n - 1),
    }
}

pub fn ep_pair(scheme: Scheme, n: usize) -> EpPair {
    assert!(n >= 1, "stages start at 1");
    EpPair {
        scheme,
        n,
        e: LabelMap {
            from_stage: n,
            to_stage: n + 1,
            mapping: (0..n).map(|k| embed(scheme, n, k)).collect(),
        },
        p: LabelMap {
            from_stage: n + 1,
            to_stage: n,
            mapping: (0..=n).map(|k| project(scheme, n, k)).collect(),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpLaw {
    EMonotone,
    PMonotone,
    /// `p∘e = id` on `S_n`.
    Retraction,
    /// `e∘p ⊆ id` on `S_{n+1}`.
    Deflation,
}

impl fmt::Display for EpLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpLaw::EMonotone => "e monotone",
            EpLaw::PMonotone => "p monotone",
            EpLaw::Retraction => "p∘e = id",
            EpLaw::Deflation => "e∘p ⊆ id",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: EpLaw,
    pub holds: bool,
    /// First label violating the law.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpReport {
    pub scheme: Scheme,
    pub n: usize,
    pub laws: Vec<LawCheck>,
}

impl EpReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn law(&self, law: EpLaw) -> &LawCheck {
        self.laws.iter().find(|l| l.law == law).expect("every law is checked")
    }
}

impl fmt::Display for EpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} scheme, n = {}", self.scheme, self.n)?;
        for l in &self.laws {
            match l.witness {
                None => writeln!(f, "  {}: holds", l.law)?,
                Some(w) => writeln!(f, "  {}: fails at label {w}", l.law)?,
            }
        }
        Ok(())
    }
}

pub fn verify_ep(scheme: Scheme, n: usize) -> EpReport {
    check_pair(&ep_pair(scheme, n))
}

/// Checks the laws on an arbitrary pair, which need not come from [`ep_pair`].
pub fn check_pair(pair: &EpPair) -> EpReport {
    let first = |mut bad: Box<dyn Iterator<Item = usize> + '_>, law| {
        let witness = bad.next();
        LawCheck {
            law,
            holds: witness.is_none(),
            witness,
        }
    };
    let (e, p) = (&pair.e, &pair.p);
    let n = pair.n;
    let laws = vec![
        first(
            Box::new((1..n).filter(|&k| e.apply(k - 1) > e.apply(k))),
            EpLaw::EMonotone,
        ),
        first(
            Box::new((1..=n).filter(|&k| p.apply(k - 1) > p.apply(k))),
            EpLaw::PMonotone,
        ),
        first(
            Box::new((0..n).filter(|&k| p.apply(e.apply(k)) != k)),
            EpLaw::Retraction,
        ),
        first(
            Box::new((0..=n).filter(|&k| {
                let back = p.apply(k);
                back >= n || e.apply(back) > k
            })),
            EpLaw::Deflation,
        ),
    ];
    EpReport {
        scheme: pair.scheme,
        n,
        laws,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PathClass {
    FiniteLabel(u64),
    PrimedLabel(u64),
    Infinity,
}

impl PathClass {
    pub fn label(self) -> Label {
        match self {
            PathClass::FiniteLabel(n) => Label::Nat(n),
            PathClass::PrimedLabel(n) => Label::Primed(n),
            PathClass::Infinity => Label::Inf,
        }
    }

    pub fn from_label(label: Label) -> Result<Self> {
        match label {
            Label::Nat(n) => Ok(PathClass::FiniteLabel(n)),
            Label::Primed(n) => Ok(PathClass::PrimedLabel(n)),
            Label::Inf => Ok(PathClass::Infinity),
            other => Err(Error::BadElement(format!("{other} is not a path label"))),
        }
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitPath {
    /// `entries[m - 1]` is the label at stage `m`.
    pub entries: Vec<usize>,
    pub classification: PathClass,
}

impl LimitPath {
    pub fn is_consistent(&self, scheme: Scheme) -> bool {
        self.entries
            .windows(2)
            .enumerate()
            .all(|(i, w)| w[1] <= i + 1 && project(scheme, i + 1, w[1]) == w[0])
    }
}

impl fmt::Display for LimitPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.entries.iter().map(|k| k.to_string()).collect();
        write!(f, "{},… ↔ {}", entries.join(","), self.classification)
    }
}

/// Tail class of the path ending at label `k` of `S_depth`.
///
/// At a finite depth the sequence is read by where its last entry sits: below
/// the diagonal it has settled on `k`, above it it tracks the top at distance
/// `depth-1-k`, and on the diagonal it is still following `∞`.
fn classify_end(scheme: Scheme, depth: usize, k: usize) -> PathClass {
    let top = depth - 1;
    match scheme {
        Scheme::Standard => {
            let t = threshold(depth);
            match k.cmp(&t) {
                std::cmp::Ordering::Less => PathClass::FiniteLabel(k as u64),
                std::cmp::Ordering::Equal => PathClass::Infinity,
                std::cmp::Ordering::Greater => PathClass::PrimedLabel((top - k) as u64),
            }
        }
        Scheme::Alternative if k == top => PathClass::Infinity,
        Scheme::Alternative => PathClass::FiniteLabel(k as u64),
    }
}

fn path_ending_at(scheme: Scheme, depth: usize, k: usize) -> Vec<usize> {
    let mut entries = vec![0; depth];
    entries[depth - 1] = k;
    for m in (1..depth).rev() {
        entries[m - 1] = project(scheme, m, entries[m]);
    }
    entries
}

/// Every projection-consistent label sequence through stages `1..=depth`,
/// one per element of the last stage, ascending.
pub fn limit_paths(scheme: Scheme, depth: usize) -> Result<Vec<LimitPath>> {
    if depth < 2 {
        return Err(Error::BadDepth(depth));
    }
    Ok((0..depth)
        .map(|k| LimitPath {
            entries: path_ending_at(scheme, depth, k),
            classification: classify_end(scheme, depth, k),
        })
        .collect())
}

/// The path a limit element follows, truncated to `depth` stages.
pub fn path_of(scheme: Scheme, class: PathClass, depth: usize) -> Result<LimitPath> {
    if depth < 2 {
        return Err(Error::BadDepth(depth));
    }
    let entry = |m: usize| -> Result<usize> {
        let top = m - 1;
        Ok(match (scheme, class) {
            (Scheme::Standard, PathClass::FiniteLabel(n)) => threshold(m).min(n as usize),
            (Scheme::Standard, PathClass::Infinity) => threshold(m),
            (Scheme::Standard, PathClass::PrimedLabel(n)) => threshold(m).max(top.saturating_sub(n as usize)),
            (Scheme::Alternative, PathClass::FiniteLabel(n)) => top.min(n as usize),
            (Scheme::Alternative, PathClass::Infinity) => top,
            (Scheme::Alternative, PathClass::PrimedLabel(_)) => {
                return Err(Error::BadElement(format!(
                    "{class} has no path in the alternative scheme"
                )))
            }
        })
    };
    let entries = (1..=depth).map(entry).collect::<Result<Vec<_>>>()?;
    Ok(LimitPath {
        entries,
        classification: class,
    })
}

/// Order type of the inverse limit.
pub fn limit_cpo(scheme: Scheme) -> OrderWord {
    let atoms = match scheme {
        Scheme::Standard => vec![OrderAtom::Omega, OrderAtom::Fin(1), OrderAtom::OmegaStar],
        Scheme::Alternative => vec![OrderAtom::Omega, OrderAtom::Fin(1)],
    };
    OrderWord::new(atoms).expect("nonempty")
}

/// DOT rendering of the stage diagram for stages `1..=last`: nodes are the
/// strings, `↔` edges join labels that the pair keeps fixed, the remaining
/// moves are drawn as `e` and `p` edges.
pub fn stage_diagram_dot(scheme: Scheme, last: usize) -> String {
    assert!(last >= 1, "stages start at 1");
    let mut out = String::new();
    let _ = writeln!(out, "digraph stages_{scheme} {{");
    out.push_str("  rankdir=LR;\n  node [shape=plaintext];\n");
    for n in 1..=last {
        let _ = writeln!(out, "  subgraph cluster_s{n} {{ label=\"S{n}\";");
        for k in (0..n).rev() {
            let _ = writeln!(out, "    s{n}_{k} [label=\"{}\"];", element_string(n, k));
        }
        out.push_str("  }\n");
    }
    for n in 1..last {
        let pair = ep_pair(scheme, n);
        for k in 0..n {
            let image = pair.e.apply(k);
            if image == k {
                let _ = writeln!(out, "  s{n}_{k} -> s{}_{k} [label=\"↔\", dir=both];", n + 1);
            } else {
                let _ = writeln!(out, "  s{n}_{k} -> s{}_{image} [label=\"e\"];", n + 1);
            }
        }
        for k in 0..=n {
            if k < n && pair.e.apply(k) == k {
                continue;
            }
            let _ = writeln!(
                out,
                "  s{}_{k} -> s{n}_{} [label=\"p\", style=dashed];",
                n + 1,
                pair.p.apply(k)
            );
        }
    }
    out.push_str("}\n");
    out
}

/// The label grid: row `k` lists label `k` in every
/// stage that has it, `↔` marking where `e` keeps the label.
pub fn stage_label_grid(scheme: Scheme, last: usize) -> String {
    let mut rows = Vec::new();
    for k in (0..last).rev() {
        let mut cells = Vec::new();
        for n in 1..=last {
            if k >= n {
                cells.push(" ".to_string());
            } else {
                cells.push(k.to_string());
            }
            if n < last {
                let kept = k < n && ep_pair(scheme, n).e.apply(k) == k;
                cells.push(if kept { "↔".into() } else { " ".into() });
            }
        }
        rows.push(cells.join(" ").trim_end().to_string());
    }
    rows.join("\n") + "\n"
}
