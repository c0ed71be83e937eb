//! Pairs of halves `(A, B)` inside a CPO, the three adjunction conditions
//! between them and the boundary element shared by the two halves.

use std::cmp::Ordering;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::named::{CpoName, ElementValue, Label, NamedCpo};
use crate::order::Elem;
use crate::strings::PairString;

/// A half of a CPO: a run of blocks, plus possibly one extra element on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Half {
    pub name: &'static str,
    pub first_block: usize,
    pub last_block: usize,
    pub extra: Option<Elem>,
}

impl Half {
    const fn blocks(name: &'static str, first_block: usize, last_block: usize) -> Self {
        Half {
            name,
            first_block,
            last_block,
            extra: None,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        (self.first_block..=self.last_block).contains(&x.block) || self.extra == Some(x)
    }

    /// Elements of the half with offset at most `window`, ascending.
    pub fn window(&self, cpo: &NamedCpo, window: u64) -> Vec<Elem> {
        cpo.word()
            .window(window)
            .into_iter()
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Greatest element, read off the block structure.
    pub fn sup(&self, cpo: &NamedCpo) -> Option<Elem> {
        if self.extra.is_some() {
            return self.extra;
        }
        let atom = cpo.word().atoms()[self.last_block];
        atom.max_offset().map(|o| Elem::new(self.last_block, o))
    }

    /// Least element, read off the block structure.
    pub fn inf(&self, cpo: &NamedCpo) -> Option<Elem> {
        let atom = cpo.word().atoms()[self.first_block];
        atom.min_offset().map(|o| Elem::new(self.first_block, o))
    }
}

/// The four pairings examined: the halves and the CPO they live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// `(Ω′, Ω′(opp))` in `Λ′`.
    OmegaPrime,
    /// `(Ω′, Ω^opp)` in `Λ`.
    OmegaOpp,
    /// `(Ω̂′, Ω̂′(opp))` in `Λ̂′`.
    HatOmegaPrime,
    /// `(Ξ, Ξ^opp)` in `V`.
    Xi,
}

impl Pairing {
    pub const ALL: [Pairing; 4] = [
        Pairing::OmegaOpp,
        Pairing::OmegaPrime,
        Pairing::HatOmegaPrime,
        Pairing::Xi,
    ];

    pub fn ambient(self) -> CpoName {
        match self {
            Pairing::OmegaPrime => CpoName::LambdaPrime,
            Pairing::OmegaOpp => CpoName::Lambda,
            Pairing::HatOmegaPrime => CpoName::LambdaHatPrime,
            Pairing::Xi => CpoName::V,
        }
    }

    /// The pairing whose halves make up `cpo`.
    pub fn of(cpo: CpoName) -> Option<Pairing> {
        Pairing::ALL.into_iter().find(|p| p.ambient() == cpo)
    }

    pub fn halves(self) -> (Half, Half) {
        match self {
            Pairing::OmegaPrime => (Half::blocks("Ω′", 0, 1), Half::blocks("Ω′(opp)", 2, 3)),
            Pairing::OmegaOpp => (Half::blocks("Ω′", 0, 1), Half::blocks("Ω^opp", 2, 2)),
            Pairing::HatOmegaPrime => (Half::blocks("Ω̂′", 0, 1), Half::blocks("Ω̂′(opp)", 1, 2)),
            Pairing::Xi => (
                Half {
                    name: "Ξ",
                    first_block: 0,
                    last_block: 1,
                    extra: Some(Elem::new(2, 0)),
                },
                Half::blocks("Ξ^opp", 2, 3),
            ),
        }
    }

    pub fn ident(self) -> &'static str {
        match self {
            Pairing::OmegaPrime => "omega_prime",
            Pairing::OmegaOpp => "omega_opp",
            Pairing::HatOmegaPrime => "hat_omega_prime",
            Pairing::Xi => "xi",
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.halves();
        write!(f, "({}, {}) in {}", a.name, b.name, self.ambient())
    }
}

impl FromStr for Pairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        if let Some(p) = Pairing::ALL.into_iter().find(|p| p.ident() == key) {
            return Ok(p);
        }
        let cpo: CpoName = s.parse()?;
        Pairing::of(cpo).ok_or_else(|| Error::UnknownCpo(format!("{s} has no adjunction pairing")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: u8,
    pub statement: String,
    pub holds: bool,
    pub witness: Option<String>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub pairing: Pairing,
    pub ambient: CpoName,
    pub lower: String,
    pub upper: String,
    pub window: u64,
    pub conditions: Vec<ConditionResult>,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

impl fmt::Display for AdjunctionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "adjunction between {} and {} in {} (window {})",
            self.lower, self.upper, self.ambient, self.window
        )?;
        for c in &self.conditions {
            write!(
                f,
                "  ({}) {}: {}",
                c.condition,
                c.statement,
                if c.holds { "pass" } else { "fail" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, ", witness {w}")?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "verdict: {}",
            if self.holds() {
                "adjunction holds"
            } else {
                "adjunction fails"
            }
        )
    }
}

fn value_of(cpo: &NamedCpo, x: Elem) -> ElementValue {
    cpo.value(x).ok().flatten().expect("pairings live in string CPOs")
}

/// `x^opp` as an element of the ambient CPO, if it is one.
fn opp_in(cpo: &NamedCpo, x: Elem) -> Option<Elem> {
    cpo.elem_of_value(&value_of(cpo, x).opp()).ok()
}

/// Checks, over the elements of both halves with offset at most `window`
/// (which include the extreme strings with an ω count):
///
/// 1. `x ∈ A ⇒ x^opp ∈ B`
/// 2. `y ∈ B ⇒ y^opp ∈ A`
/// 3. `x ⊆ y^opp ⇔ x^opp ⊇ y` for `x ∈ A`, `y ∈ B`
pub fn check_adjunction(pairing: Pairing, window: u64) -> AdjunctionReport {
    let cpo = NamedCpo::new(pairing.ambient());
    let w = cpo.word();
    let (a, b) = pairing.halves();
    let xs = a.window(&cpo, window);
    let ys = b.window(&cpo, window);
    let show = |x: Elem| value_of(&cpo, x).to_string();

    let membership = |condition: u8, from: &Half, into: &Half, elems: &[Elem]| {
        let bad = elems.iter().find_map(|&x| match opp_in(&cpo, x) {
            Some(o) if into.contains(o) => None,
            Some(o) => Some((x, format!("{}^opp = {} ∉ {}", show(x), show(o), into.name))),
            None => Some((
                x,
                format!("{}^opp = {} ∉ {}", show(x), value_of(&cpo, x).opp(), cpo.name()),
            )),
        });
        ConditionResult {
            condition,
            statement: format!("∀x ∈ {}: x^opp ∈ {}", from.name, into.name),
            holds: bad.is_none(),
            witness: bad.as_ref().map(|(x, _)| show(*x)),
            detail: bad.map(|(_, d)| d),
        }
    };
    let c1 = membership(1, &a, &b, &xs);
    let c2 = membership(2, &b, &a, &ys);

    let mut c3_bad = None;
    'outer: for &x in &xs {
        for &y in &ys {
            let (Some(xo), Some(yo)) = (opp_in(&cpo, x), opp_in(&cpo, y)) else {
                c3_bad = Some((x, y, "an opposite falls outside the CPO".to_string()));
                break 'outer;
            };
            let left = w.compare(x, yo).expect("valid") != Ordering::Greater;
            let right = w.compare(xo, y).expect("valid") != Ordering::Less;
            if left != right {
                c3_bad = Some((x, y, format!("x ⊆ y^opp is {left}, x^opp ⊇ y is {right}")));
                break 'outer;
            }
        }
    }
    let c3 = ConditionResult {
        condition: 3,
        statement: "x ⊆ y^opp ⇔ x^opp ⊇ y".into(),
        holds: c3_bad.is_none(),
        witness: c3_bad
            .as_ref()
            .map(|(x, y, _)| format!("x = {}, y = {}", show(*x), show(*y))),
        detail: c3_bad.map(|(_, _, d)| d),
    };
    AdjunctionReport {
        pairing,
        ambient: pairing.ambient(),
        lower: a.name.into(),
        upper: b.name.into(),
        window,
        conditions: vec![c1, c2, c3],
    }
}

/// A CPO assembled from two halves of pairs that meet in a boundary element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCpo {
    pub cpo: NamedCpo,
    pub lower: Half,
    pub upper: Half,
    pub glue: String,
    pub boundary: PairString,
}

/// `Λ̂′` or `V`.
pub fn build_pair_cpo(which: CpoName) -> Result<PairCpo> {
    let pairing = match which {
        CpoName::LambdaHatPrime => Pairing::HatOmegaPrime,
        CpoName::V => Pairing::Xi,
        other => return Err(Error::UnknownCpo(format!("{other} is not built from pairs"))),
    };
    let cpo = NamedCpo::new(which);
    let (lower, upper) = pairing.halves();
    let (glue, boundary) = match which {
        CpoName::LambdaHatPrime => ("(a, ⋯111) ⊆ (000⋯, b) with a = 000⋯, b = ⋯111", "(000..., ...111)"),
        _ => ("(a, ⋯111) ⊆ (⋯000, b) with a = ⋯000, b = 111⋯", "(...000, 111...)"),
    };
    Ok(PairCpo {
        cpo,
        lower,
        upper,
        glue: glue.into(),
        boundary: boundary.parse()?,
    })
}

impl PairCpo {
    pub fn boundary_elem(&self) -> Elem {
        self.cpo
            .elem_of_value(&ElementValue::Pair(self.boundary))
            .expect("the boundary belongs to the CPO")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub cpo: CpoName,
    pub boundary: String,
    pub label: Label,
    pub self_opp: bool,
    pub predecessor: Option<Label>,
    pub successor: Option<Label>,
    pub in_lower: bool,
    pub in_upper: bool,
    pub sup_lower: bool,
    pub inf_upper: bool,
}

impl BoundaryReport {
    pub fn has_neighbor(&self) -> bool {
        self.predecessor.is_some() || self.successor.is_some()
    }
}

impl fmt::Display for BoundaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: Option<Label>| l.map_or("none".to_string(), |l| l.to_string());
        writeln!(f, "boundary of {}: {} (label {})", self.cpo, self.boundary, self.label)?;
        writeln!(f, "  self-opposite: {}", self.self_opp)?;
        writeln!(
            f,
            "  immediate neighbors: ({}, {})",
            show(self.predecessor),
            show(self.successor)
        )?;
        writeln!(f, "  in both halves: {}", self.in_lower && self.in_upper)?;
        write!(
            f,
            "  sup of lower half = inf of upper half: {}",
            self.sup_lower && self.inf_upper
        )
    }
}

pub fn boundary_report(which: CpoName) -> Result<BoundaryReport> {
    let pc = build_pair_cpo(which)?;
    let m = pc.boundary_elem();
    let n = pc.cpo.word().neighbors(m)?;
    let label = |x: Option<Elem>| x.map(|e| pc.cpo.label(e)).transpose();
    Ok(BoundaryReport {
        cpo: which,
        boundary: pc.boundary.to_string(),
        label: pc.cpo.label(m)?,
        self_opp: pc.boundary.opp() == pc.boundary,
        predecessor: label(n.predecessor)?,
        successor: label(n.successor)?,
        in_lower: pc.lower.contains(m),
        in_upper: pc.upper.contains(m),
        sup_lower: pc.lower.sup(&pc.cpo) == Some(m),
        inf_upper: pc.upper.inf(&pc.cpo) == Some(m),
    })
}

/// DOT chain of a CPO on a window: solid edges join immediate neighbors,
/// dotted edges stand for the infinitely many elements in between, and
/// elements with no immediate neighbor at all are boxed.
pub fn chain_dot(cpo: &NamedCpo, window: u64) -> String {
    let w = cpo.word();
    let xs = w.window(window);
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", cpo.name().ident());
    out.push_str("  rankdir=BT;\n");
    for (i, &x) in xs.iter().enumerate() {
        let label = cpo.describe(x).expect("window elements are valid");
        let isolated = w.neighbors(x).expect("valid").is_isolated();
        let shape = if isolated { "box" } else { "plaintext" };
        let _ = writeln!(out, "  n{i} [label=\"{label}\", shape={shape}];");
    }
    for (i, pair) in xs.windows(2).enumerate() {
        let adjacent = w.successor(pair[0]).expect("valid") == Some(pair[1]);
        let style = if adjacent { "solid" } else { "dotted" };
        let _ = writeln!(out, "  n{i} -> n{} [arrowhead=none, style={style}];", i + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::MonotypicString;
    use proptest::prelude::*;

    #[test]
    fn adjunction_examples() {
        assert!(check_adjunction(Pairing::OmegaPrime, 50).holds());
        assert!(check_adjunction(Pairing::Xi, 50).holds());
        assert!(check_adjunction(Pairing::HatOmegaPrime, 50).holds());

        let lambda = check_adjunction(Pairing::OmegaOpp, 50);
        assert!(!lambda.holds());
        let c1 = &lambda.conditions[0];
        assert!(!c1.holds);
        assert_eq!(c1.witness.as_deref(), Some("⋯111"));
        assert!(c1.detail.as_deref().unwrap().contains("000⋯"));
    }

    #[test]
    fn every_failure_has_a_witness() {
        for p in Pairing::ALL {
            for c in check_adjunction(p, 10).conditions {
                assert_eq!(c.holds, c.witness.is_none(), "{p} ({})", c.condition);
            }
        }
    }

    #[test]
    fn pair_cpos() {
        let hat = build_pair_cpo(CpoName::LambdaHatPrime).unwrap();
        assert_eq!(hat.boundary.to_string(), "(000⋯, ⋯111)");
        assert_eq!(hat.cpo.word().to_string(), "ω+1+ω*");
        let v = build_pair_cpo(CpoName::V).unwrap();
        assert_eq!(v.boundary.to_string(), "(⋯000, 111⋯)");
        assert_eq!(v.cpo.label(v.boundary_elem()).unwrap(), Label::Signed(0));
        assert_eq!(v.cpo.word().to_string(), "1+ω*+ω+1");
        assert!(build_pair_cpo(CpoName::Lambda).is_err());
    }

    #[test]
    fn boundaries() {
        let hat = boundary_report(CpoName::LambdaHatPrime).unwrap();
        assert!(hat.self_opp);
        assert_eq!((hat.predecessor, hat.successor), (None, None));
        assert!(hat.in_lower && hat.in_upper && hat.sup_lower && hat.inf_upper);

        let v = boundary_report(CpoName::V).unwrap();
        assert!(v.self_opp);
        assert_eq!(
            (v.predecessor, v.successor),
            (Some(Label::Signed(-1)), Some(Label::Signed(1)))
        );
        assert!(v.in_lower && v.in_upper && v.sup_lower && v.inf_upper);
    }

    /// sup(lower) = inf(upper) = boundary, checked by scanning the window.
    #[test]
    fn sup_and_inf_on_windows() {
        for which in [CpoName::LambdaHatPrime, CpoName::V] {
            let pc = build_pair_cpo(which).unwrap();
            let m = pc.boundary_elem();
            let w = pc.cpo.word();
            for n in [1, 10, 100] {
                let lower = pc.lower.window(&pc.cpo, n);
                let upper = pc.upper.window(&pc.cpo, n);
                assert!(lower.iter().all(|&x| w.compare(x, m).unwrap() != Ordering::Greater));
                assert!(upper.iter().all(|&y| w.compare(m, y).unwrap() != Ordering::Greater));
                assert_eq!(lower.last(), Some(&m));
                assert_eq!(upper.first(), Some(&m));
            }
        }
    }

    #[test]
    fn iso_matrix() {
        use CpoName::*;
        let names = [Phi, Theta, Lambda, LambdaPrime, LambdaHatPrime, V];
        let classes = |n: CpoName| match n {
            Phi | Lambda | LambdaHatPrime => 0,
            Theta => 1,
            LambdaPrime => 2,
            _ => 3,
        };
        for a in names {
            for b in names {
                let iso = NamedCpo::new(a).word().iso(NamedCpo::new(b).word());
                assert_eq!(iso, classes(a) == classes(b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn chain_boxes_isolated_elements() {
        let dot = chain_dot(&NamedCpo::new(CpoName::LambdaHatPrime), 2);
        assert!(dot.contains("label=\"m = (000⋯, ⋯111)\", shape=box"));
        assert!(dot.contains("style=dotted"));
        let v = chain_dot(&NamedCpo::new(CpoName::V), 2);
        assert!(v.contains("label=\"m′ = (⋯000, 111⋯)\", shape=plaintext"));
    }

    #[test]
    fn parse_pairings() {
        assert_eq!("v".parse::<Pairing>().unwrap(), Pairing::Xi);
        assert_eq!("lambda".parse::<Pairing>().unwrap(), Pairing::OmegaOpp);
        assert_eq!("omega_prime".parse::<Pairing>().unwrap(), Pairing::OmegaPrime);
        assert!("phi".parse::<Pairing>().is_err());
    }

    #[test]
    fn lambda_has_no_000_string() {
        let lambda = NamedCpo::new(CpoName::Lambda);
        assert!(!lambda.contains_value(&ElementValue::Mono(MonotypicString::all_zeros_left())));
    }

    proptest! {
        /// opp reverses the order across the halves.
        #[test]
        fn opp_is_an_anti_map(which in prop_oneof![Just(Pairing::HatOmegaPrime), Just(Pairing::Xi), Just(Pairing::OmegaPrime)], i in 0usize..102, j in 0usize..102) {
            let cpo = NamedCpo::new(which.ambient());
            let (a, b) = which.halves();
            let xs = a.window(&cpo, 100);
            let (x, y) = (xs[i % xs.len()], xs[j % xs.len()]);
            let (xo, yo) = (opp_in(&cpo, x).unwrap(), opp_in(&cpo, y).unwrap());
            prop_assert!(b.contains(xo) && b.contains(yo));
            prop_assert_eq!(cpo.word().compare(x, y).unwrap(), cpo.word().compare(yo, xo).unwrap());
        }
    }
}
