//! Type decompositions, the LCR-transformation between `Λ′` and `V`, the
//! replication of the boundary `m` and the chain `Λ → Λ̂′ → Λ′ ↔ V`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::adjunction::{build_pair_cpo, check_adjunction, Pairing};
use crate::error::{Error, Result};
use crate::funcspace::self_iso;
use crate::named::{CpoName, ElementValue, Label, NamedCpo};
use crate::order::Elem;
use crate::strings::{MonotypicString, Orientation, PairString, SpecKind};

/// Window used by the pipeline's checks.
pub const PIPELINE_WINDOW: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NaturalIso {
    Phi1,
    Phi2,
    Psi1,
    Psi2,
}

impl fmt::Display for NaturalIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NaturalIso::Phi1 => "φ₁",
            NaturalIso::Phi2 => "φ₂",
            NaturalIso::Psi1 => "ψ₁",
            NaturalIso::Psi2 => "ψ₂",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IsoKind {
    Natural {
        name: NaturalIso,
    },
    /// Two rules that would each be natural claim the same element.
    NoneNatural {
        witness: Label,
        claims: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub cpo: CpoName,
    pub parts: Vec<SpecKind>,
    pub iso: IsoKind,
    /// Family of the boundary element under this pairing.
    pub boundary_family: Option<SpecKind>,
    /// The pairing preserves order on the checked window.
    pub order_preserving: bool,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}: {}", self.cpo, parts.join(" + "))?;
        match &self.iso {
            IsoKind::Natural { name } => write!(f, " via {name}")?,
            IsoKind::NoneNatural { witness, claims } => write!(
                f,
                ", no natural isomorphism: {witness} is claimed by {}",
                claims.join(" and ")
            )?,
        }
        if let Some(b) = self.boundary_family {
            write!(f, " (boundary is type {b})")?;
        }
        Ok(())
    }
}

/// The string an element of `Λ̂′` is paired with: `(000⋯, x) ↦ x`,
/// `(y, ⋯111) ↦ y`, and `m` with `boundary`.
fn hat_pairing(hat: &NamedCpo, x: Elem, boundary: MonotypicString) -> MonotypicString {
    match hat.value(x).ok().flatten() {
        Some(ElementValue::Pair(p))
            if p.left == MonotypicString::all_zeros_left() && p.right == MonotypicString::all_ones_right() =>
        {
            boundary
        }
        Some(ElementValue::Pair(p)) if p.left == MonotypicString::all_zeros_left() => p.right,
        Some(ElementValue::Pair(p)) => p.left,
        _ => unreachable!("Λ̂′ is made of pairs"),
    }
}

/// Families met along a window, with runs merged.
fn family_runs(strings: &[MonotypicString]) -> Vec<SpecKind> {
    let mut parts: Vec<SpecKind> = strings.iter().map(|s| s.classify().family).collect();
    parts.dedup();
    parts
}

/// The images sit in `Λ′`; the pairing is order preserving when it is
/// strictly increasing there.
fn increasing_in_lambda_prime(images: &[MonotypicString]) -> bool {
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let pos: Vec<Elem> = images
        .iter()
        .map(|s| {
            lp.elem_of_value(&ElementValue::Mono(*s))
                .expect("images are strings of Λ′")
        })
        .collect();
    pos.windows(2)
        .all(|w| lp.word().compare(w[0], w[1]).expect("valid") == Ordering::Less)
}

pub fn decompositions(which: CpoName) -> Result<Vec<Decomposition>> {
    match which {
        CpoName::LambdaHatPrime => {
            let hat = NamedCpo::new(which);
            let xs = hat.word().window(PIPELINE_WINDOW);
            let m = hat.parse_element("m")?;
            Ok([
                (NaturalIso::Phi1, MonotypicString::all_zeros_left()),
                (NaturalIso::Phi2, MonotypicString::all_ones_right()),
            ]
            .into_iter()
            .map(|(name, at_m)| {
                let images: Vec<MonotypicString> = xs.iter().map(|&x| hat_pairing(&hat, x, at_m)).collect();
                Decomposition {
                    cpo: which,
                    parts: family_runs(&images),
                    iso: IsoKind::Natural { name },
                    boundary_family: Some(hat_pairing(&hat, m, at_m).classify().family),
                    order_preserving: increasing_in_lambda_prime(&images),
                }
            })
            .collect())
        }
        CpoName::V => {
            let v = NamedCpo::new(which);
            let target = decomposition_target();
            let glued = NamedCpo::new(CpoName::OmegaPrimeOpp)
                .word()
                .concat(NamedCpo::new(CpoName::OmegaPrime).word());
            let (witness, claims) = natural_conflict(&v)?;
            Ok(vec![Decomposition {
                cpo: which,
                parts: family_runs(&target),
                iso: IsoKind::NoneNatural { witness, claims },
                boundary_family: None,
                order_preserving: glued.iso(v.word()),
            }])
        }
        other => Err(Error::UnknownCpo(format!("{other} has no type decomposition"))),
    }
}

/// `Ω′(opp) ∪ Ω′ = {000⋯} ∪ Ω^opp ∪ Ω ∪ {⋯111}` on the pipeline window,
/// ascending: `Ω′(opp)` placed below `Ω′`.
fn decomposition_target() -> Vec<MonotypicString> {
    let mut out = vec![MonotypicString::all_zeros_left()];
    out.extend((0..=PIPELINE_WINDOW).rev().map(MonotypicString::left));
    out.extend((0..=PIPELINE_WINDOW).map(MonotypicString::right));
    out.push(MonotypicString::all_ones_right());
    out
}

/// Applies both candidate natural rules to `V` and returns the element they
/// both claim, with what each rule pairs it with.
fn natural_conflict(v: &NamedCpo) -> Result<(Label, Vec<String>)> {
    let omega_prime = NamedCpo::new(CpoName::OmegaPrime);
    let omega_prime_opp = NamedCpo::new(CpoName::OmegaPrimeOpp);
    let mono = |c: &NamedCpo, x: Elem| match c.value(x) {
        Ok(Some(ElementValue::Mono(m))) => m,
        _ => unreachable!("string CPO"),
    };
    let rule_a: Vec<(MonotypicString, Elem)> = omega_prime
        .word()
        .window(PIPELINE_WINDOW)
        .into_iter()
        .map(|x| {
            let s = mono(&omega_prime, x);
            let p = PairString::new(s, MonotypicString::all_ones_left());
            Ok((s, v.elem_of_value(&ElementValue::Pair(p))?))
        })
        .collect::<Result<_>>()?;
    let rule_b: Vec<(MonotypicString, Elem)> = omega_prime_opp
        .word()
        .window(PIPELINE_WINDOW)
        .into_iter()
        .map(|y| {
            let s = mono(&omega_prime_opp, y);
            let p = PairString::new(MonotypicString::all_zeros_right(), s);
            Ok((s, v.elem_of_value(&ElementValue::Pair(p))?))
        })
        .collect::<Result<_>>()?;
    let (a, target) = rule_a
        .iter()
        .find(|(_, e)| rule_b.iter().any(|(_, f)| f == e))
        .expect("the rules overlap");
    let (b, _) = rule_b.iter().find(|(_, f)| f == target).expect("found above");
    Ok((
        v.label(*target)?,
        vec![
            format!("{a} ∈ Ω′ via x ↦ (x, 111⋯)"),
            format!("{b} ∈ Ω′(opp) via y ↦ (⋯000, y)"),
        ],
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcrImage {
    pub source: Label,
    pub image: Label,
    pub value: PairString,
    /// The image is also the image of another element.
    pub collision: bool,
}

impl fmt::Display for LcrImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {} = {}", self.source, self.value, self.image)?;
        if self.collision {
            write!(f, " (collision: ⋯000 and 111⋯ both map to m′)")?;
        }
        Ok(())
    }
}

fn lambda_prime_string(lp: &NamedCpo, x: Elem) -> Result<MonotypicString> {
    match lp.value(x)? {
        Some(ElementValue::Mono(m)) => Ok(m),
        _ => unreachable!("Λ′ is made of strings"),
    }
}

/// `x ∈ Ω′ ↦ (x, 111⋯)`, `y ∈ Ω′(opp) ↦ (⋯000, y)`.
pub fn lcr_forward(x: Elem) -> Result<LcrImage> {
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let v = NamedCpo::new(CpoName::V);
    let s = lambda_prime_string(&lp, x)?;
    let value = match s.orientation() {
        Orientation::R => PairString::new(s, MonotypicString::all_ones_left()),
        Orientation::L => PairString::new(MonotypicString::all_zeros_right(), s),
    };
    let image = v.elem_of_value(&ElementValue::Pair(value))?;
    let collision = s == MonotypicString::all_zeros_right() || s == MonotypicString::all_ones_left();
    Ok(LcrImage {
        source: lp.label(x)?,
        image: v.label(image)?,
        value,
        collision,
    })
}

/// Inverse of [`lcr_forward`]. At `m′` the endpoint decides: `R` gives
/// `⋯000 ∈ Ω′`, `L` gives `111⋯ ∈ Ω′(opp)`.
pub fn lcr_backward(y: Elem, endpoint: Orientation) -> Result<Elem> {
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let v = NamedCpo::new(CpoName::V);
    let Some(ElementValue::Pair(p)) = v.value(y)? else {
        unreachable!("V is made of pairs")
    };
    let s = if p == PairString::new(MonotypicString::all_zeros_right(), MonotypicString::all_ones_left()) {
        match endpoint {
            Orientation::R => p.left,
            Orientation::L => p.right,
        }
    } else if p.right == MonotypicString::all_ones_left() {
        p.left
    } else {
        p.right
    };
    lp.elem_of_value(&ElementValue::Mono(s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicationResult {
    pub source: PairString,
    pub intent: MonotypicString,
    pub extent: MonotypicString,
    pub intent_label: Label,
    pub extent_label: Label,
    pub mutual_neighbors: bool,
}

impl fmt::Display for ReplicationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "copy {} and project", self.source)?;
        writeln!(f, "  Int: {} = {} in Λ′", self.intent, self.intent_label)?;
        writeln!(f, "  Ext: {} = {} in Λ′", self.extent, self.extent_label)?;
        write!(f, "  mutual immediate neighbors in Λ′: {}", self.mutual_neighbors)
    }
}

/// Copies the boundary `m = (000⋯, ⋯111)` of `Λ̂′` and projects the copies
/// to its two components, which are the middle elements of `Λ′`.
pub fn replicate(m: &PairString) -> Result<ReplicationResult> {
    let boundary = build_pair_cpo(CpoName::LambdaHatPrime)?.boundary;
    if *m != boundary {
        return Err(Error::NotBoundary(format!("{m} is not {boundary}")));
    }
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let (intent, extent) = (m.left, m.right);
    let i = lp.elem_of_value(&ElementValue::Mono(intent))?;
    let e = lp.elem_of_value(&ElementValue::Mono(extent))?;
    let w = lp.word();
    let mutual_neighbors = w.successor(e)? == Some(i) && w.predecessor(i)? == Some(e);
    Ok(ReplicationResult {
        source: *m,
        intent,
        extent,
        intent_label: lp.label(i)?,
        extent_label: lp.label(e)?,
        mutual_neighbors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: CpoName,
    pub to: CpoName,
    pub kind: String,
    pub holds: bool,
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table8Row {
    pub cpo: CpoName,
    pub adjunction: bool,
    pub fpt_applicable: bool,
    pub boundary: Option<String>,
    pub order_type: String,
}

impl Table8Row {
    pub fn cells(&self) -> [String; 5] {
        [
            self.cpo.to_string(),
            if self.adjunction { "Yes" } else { "No" }.into(),
            if self.fpt_applicable {
                "Applicable"
            } else {
                "Not applicable"
            }
            .into(),
            self.boundary.clone().unwrap_or_else(|| "N/A".into()),
            self.order_type.clone(),
        ]
    }
}

pub fn table8() -> Vec<Table8Row> {
    [
        CpoName::Lambda,
        CpoName::LambdaPrime,
        CpoName::LambdaHatPrime,
        CpoName::V,
    ]
    .into_iter()
    .map(|name| {
        let cpo = NamedCpo::new(name);
        let pairing = Pairing::of(name).expect("each row has a pairing");
        let boundary = build_pair_cpo(name)
            .ok()
            .map(|pc| pc.cpo.label(pc.boundary_elem()).expect("valid"));
        Table8Row {
            cpo: name,
            adjunction: check_adjunction(pairing, PIPELINE_WINDOW).holds(),
            fpt_applicable: self_iso(cpo.word()).isomorphic,
            boundary: boundary.map(|l| l.to_string()),
            order_type: cpo.word().to_string(),
        }
    })
    .collect()
}

/// Display width, not counting combining marks.
fn columns(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

pub fn render_table8(rows: &[Table8Row]) -> String {
    let header = ["CPO", "Adjunction", "FPT", "Boundary", "Order type"].map(String::from);
    let body: Vec<[String; 5]> = rows.iter().map(Table8Row::cells).collect();
    let width = |i: usize| {
        std::iter::once(&header)
            .chain(&body)
            .map(|r| columns(&r[i]))
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..5).map(width).collect();
    let line = |r: &[String; 5]| {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - columns(c))))
            .collect();
        cells.join(" | ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    out.push_str(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-"));
    out.push('\n');
    for r in &body {
        out.push_str(&line(r));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub edges: Vec<Edge>,
    pub table8: Vec<Table8Row>,
}

impl PipelineReport {
    pub fn holds(&self) -> bool {
        self.edges.iter().all(|e| e.holds)
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            writeln!(
                f,
                "{} → {} ({}): {}",
                e.from,
                e.to,
                e.kind,
                if e.holds { "verified" } else { "FAILED" }
            )?;
            for d in &e.detail {
                writeln!(f, "  {d}")?;
            }
        }
        writeln!(f)?;
        f.write_str(&render_table8(&self.table8))
    }
}

fn dualization_edge() -> Result<Edge> {
    let lambda = NamedCpo::new(CpoName::Lambda);
    let hat = NamedCpo::new(CpoName::LambdaHatPrime);
    let iso = lambda.word().iso(hat.word());
    // x ∈ Ω ↦ (000⋯, x), ⋯111 ↦ m, y ∈ Ω^opp ↦ (y, ⋯111)
    let rep = |s: MonotypicString| match s.orientation() {
        Orientation::R => PairString::new(MonotypicString::all_zeros_left(), s),
        Orientation::L => PairString::new(s, MonotypicString::all_ones_right()),
    };
    let images: Vec<Elem> = lambda
        .word()
        .window(PIPELINE_WINDOW)
        .into_iter()
        .map(|x| match lambda.value(x)? {
            Some(ElementValue::Mono(s)) => hat.elem_of_value(&ElementValue::Pair(rep(s))),
            _ => unreachable!("Λ is made of strings"),
        })
        .collect::<Result<_>>()?;
    let increasing = images
        .windows(2)
        .all(|w| hat.word().compare(w[0], w[1]).expect("valid") == Ordering::Less);
    Ok(Edge {
        from: CpoName::Lambda,
        to: CpoName::LambdaHatPrime,
        kind: "dualization".into(),
        holds: iso && increasing,
        detail: vec![
            format!("{} ≅ {}: {}", lambda.word(), hat.word(), iso),
            format!("pair representation order preserving on window {PIPELINE_WINDOW}: {increasing}"),
        ],
    })
}

fn replication_edge() -> Result<Edge> {
    let hat = build_pair_cpo(CpoName::LambdaHatPrime)?;
    let r = replicate(&hat.boundary)?;
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let holds = r.mutual_neighbors && r.intent_label == Label::InfPrime && r.extent_label == Label::Inf;
    Ok(Edge {
        from: CpoName::LambdaHatPrime,
        to: CpoName::LambdaPrime,
        kind: "replication".into(),
        holds,
        detail: vec![
            format!(
                "m = {} ↦ Int {} = {}, Ext {} = {}",
                r.source, r.intent, r.intent_label, r.extent, r.extent_label
            ),
            format!("order type {} → {}", hat.cpo.word(), lp.word()),
            format!(
                "{} and {} are mutual immediate neighbors: {}",
                r.extent_label, r.intent_label, r.mutual_neighbors
            ),
        ],
    })
}

/// Round trip `Λ′ → V → Λ′` over the window and the collision at `m′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcrSummary {
    pub checked: usize,
    pub round_trip: bool,
    pub collisions: Vec<Label>,
    pub collision_image: Option<Label>,
    pub injective_elsewhere: bool,
}

pub fn lcr_summary(window: u64) -> Result<LcrSummary> {
    let lp = NamedCpo::new(CpoName::LambdaPrime);
    let v = NamedCpo::new(CpoName::V);
    let xs = lp.word().window(window);
    let mut round_trip = true;
    let mut images = Vec::new();
    for &x in &xs {
        let img = lcr_forward(x)?;
        let y = v.elem_of_label(img.image)?;
        let endpoint = lambda_prime_string(&lp, x)?.orientation();
        round_trip &= lcr_backward(y, endpoint)? == x;
        images.push((x, img));
    }
    let collisions: Vec<Label> = images
        .iter()
        .filter(|(_, i)| i.collision)
        .map(|(_, i)| i.source)
        .collect();
    let collision_image = images.iter().find(|(_, i)| i.collision).map(|(_, i)| i.image);
    let mut others: Vec<Label> = images
        .iter()
        .filter(|(_, i)| !i.collision)
        .map(|(_, i)| i.image)
        .collect();
    let n = others.len();
    others.sort();
    others.dedup();
    let injective_elsewhere = others.len() == n && collision_image.is_none_or(|c| !others.contains(&c));
    Ok(LcrSummary {
        checked: xs.len(),
        round_trip,
        collisions,
        collision_image,
        injective_elsewhere,
    })
}

fn lcr_edge() -> Result<Edge> {
    let s = lcr_summary(PIPELINE_WINDOW)?;
    let collisions: Vec<String> = s.collisions.iter().map(|l| l.to_string()).collect();
    let holds = s.round_trip && s.injective_elsewhere && s.collisions.len() == 2;
    Ok(Edge {
        from: CpoName::LambdaPrime,
        to: CpoName::V,
        kind: "LCR".into(),
        holds,
        detail: vec![
            format!("round trip on {} elements: {}", s.checked, s.round_trip),
            format!("injective away from the collision: {}", s.injective_elsewhere),
            format!(
                "collision: {} ↦ {}",
                collisions.join(", "),
                s.collision_image.map_or("none".into(), |l| l.to_string())
            ),
        ],
    })
}

pub fn pipeline() -> Result<PipelineReport> {
    Ok(PipelineReport {
        edges: vec![dualization_edge()?, replication_edge()?, lcr_edge()?],
        table8: table8(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_decompositions() {
        let ds = decompositions(CpoName::LambdaHatPrime).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].parts, [SpecKind::III, SpecKind::I, SpecKind::II]);
        assert_eq!(ds[0].boundary_family, Some(SpecKind::I));
        assert_eq!(ds[1].parts, [SpecKind::III, SpecKind::IV, SpecKind::II]);
        assert_eq!(ds[1].boundary_family, Some(SpecKind::IV));
        assert!(ds.iter().all(|d| d.order_preserving));
        // φ₁ and φ₂ differ only at m
        let hat = NamedCpo::new(CpoName::LambdaHatPrime);
        let m = hat.parse_element("m").unwrap();
        for x in hat.word().window(30) {
            let a = hat_pairing(&hat, x, MonotypicString::all_zeros_left());
            let b = hat_pairing(&hat, x, MonotypicString::all_ones_right());
            assert_eq!(a == b, x != m);
        }
    }

    #[test]
    fn v_has_no_natural_decomposition() {
        let ds = decompositions(CpoName::V).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].parts, [SpecKind::I, SpecKind::II, SpecKind::III, SpecKind::IV]);
        match &ds[0].iso {
            IsoKind::NoneNatural { witness, claims } => {
                assert_eq!(*witness, Label::Signed(0));
                assert!(claims[0].starts_with("⋯000"));
                assert!(claims[1].starts_with("111⋯"));
            }
            other => panic!("{other:?}"),
        }
        assert!(decompositions(CpoName::Phi).is_err());
    }

    #[test]
    fn lcr_examples() {
        let lp = NamedCpo::new(CpoName::LambdaPrime);
        let v = NamedCpo::new(CpoName::V);
        let fwd = |s: &str| lcr_forward(lp.parse_element(s).unwrap()).unwrap();
        let one = fwd("...001");
        assert_eq!(
            (one.value.to_string(), one.image, one.collision),
            ("(⋯001, 111⋯)".into(), Label::Signed(1), false)
        );
        assert_eq!(fwd("011...").image, Label::Signed(-1));
        let (a, b) = (fwd("...000"), fwd("111..."));
        assert!(a.collision && b.collision);
        assert_eq!((a.image, b.image), (Label::Signed(0), Label::Signed(0)));

        let back = |l: &str, e| lp.label(lcr_backward(v.parse_element(l).unwrap(), e).unwrap()).unwrap();
        assert_eq!(back("+2", Orientation::L), Label::Nat(2));
        assert_eq!(back("+2", Orientation::R), Label::Nat(2));
        assert_eq!(
            lp.value(lp.elem_of_label(Label::Nat(2)).unwrap())
                .unwrap()
                .unwrap()
                .to_string(),
            "⋯011"
        );
        assert_eq!(back("m'", Orientation::R), Label::Nat(0));
        assert_eq!(back("m'", Orientation::L), Label::Primed(0));
    }

    #[test]
    fn lcr_is_two_to_one_only_at_the_boundary() {
        let s = lcr_summary(100).unwrap();
        assert!(s.round_trip);
        assert!(s.injective_elsewhere);
        assert_eq!(s.collisions, [Label::Nat(0), Label::Primed(0)]);
        assert_eq!(s.collision_image, Some(Label::Signed(0)));
    }

    #[test]
    fn replication() {
        let m: PairString = "(000..., ...111)".parse().unwrap();
        let r = replicate(&m).unwrap();
        assert_eq!(r.intent.to_string(), "000⋯");
        assert_eq!(r.extent.to_string(), "⋯111");
        assert_eq!((r.intent_label, r.extent_label), (Label::InfPrime, Label::Inf));
        assert!(r.mutual_neighbors);
        let not_m: PairString = "(...000, 111...)".parse().unwrap();
        assert!(matches!(replicate(&not_m), Err(Error::NotBoundary(_))));
    }

    #[test]
    fn property_matrix_matches() {
        let cells: Vec<[String; 5]> = table8().iter().map(Table8Row::cells).collect();
        let expect = [
            ["Λ", "No", "Applicable", "N/A", "ω+1+ω*"],
            ["Λ′", "Yes", "Applicable", "N/A", "ω+1+1+ω*"],
            ["Λ̂′", "Yes", "Applicable", "m", "ω+1+ω*"],
            ["V", "Yes", "Not applicable", "m′", "1+ω*+ω+1"],
        ];
        for (got, want) in cells.iter().zip(expect) {
            assert_eq!(got.clone(), want.map(String::from));
        }
    }

    #[test]
    fn pipeline_edges_hold() {
        let p = pipeline().unwrap();
        assert!(p.holds(), "{p}");
        assert_eq!(
            p.edges.iter().map(|e| e.kind.as_str()).collect::<Vec<_>>(),
            ["dualization", "replication", "LCR"]
        );
    }
}
