//! `cpo`: command-line front end for the cpo-core workbench.
//!
//! Every verb prints plain text by default; `--format json` prints one
//! compact JSON document, `--format dot` is accepted by `diagram` only.
//! Exit status is 0 for any computed verdict, 2 for usage errors and
//! malformed literals.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cpo_core::adjunction::{boundary_report, chain_dot, check_adjunction, Pairing};
use cpo_core::funcspace::{
    canonical_iso, eval_segment, fpt, function_table, mu_continuous, psi_ident, scott_opens, self_iso, Mu, OpenSegment,
};
use cpo_core::named::{named_cpo, CpoName, ElementValue, Label, NamedCpo};
use cpo_core::order::{Elem, OrderWord};
use cpo_core::replication::{decompositions, lcr_backward, lcr_forward, pipeline, render_table8, replicate, table8};
use cpo_core::stages::{
    enumerate_monotone, ep_pair, limit_cpo, limit_paths, stage, stage_diagram_dot, stage_label_grid, verify_ep, Scheme,
};
use cpo_core::strings::{
    finite_approx, limit_check, lr_pair, MonotypicString, Orientation, PairString, SpecKind, SpecifiedString,
};

const DEFAULT_WINDOW: u64 = 20;

#[derive(Parser)]
#[command(
    name = "cpo",
    version,
    about = "Countable CPOs, their function spaces and fixed points"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Elements of the finite stage S_n.
    Stage {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        n: u64,
    },
    /// Monotone maps from the n-element chain into 2, by brute force.
    Funcs {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16))]
        n: u64,
    },
    /// Embedding/projection pair between S_n and S_{n+1}.
    Ep {
        #[arg(long)]
        scheme: Scheme,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=256))]
        n: u64,
        /// Also check the pair laws.
        #[arg(long)]
        verify: bool,
    },
    /// Projection-consistent label paths up to a depth, with their limit labels.
    Paths {
        #[arg(long)]
        scheme: Scheme,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=256))]
        depth: u64,
    },
    /// Order type of the limit CPO of a scheme.
    Limit {
        #[arg(long)]
        scheme: Scheme,
    },
    /// Decide whether two CPOs (names or order words) are isomorphic.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Order-word utilities.
    Order {
        #[command(subcommand)]
        action: OrderAction,
    },
    /// The function space C(D,2) of a named CPO.
    Funcspace(FuncspaceArgs),
    /// Fixed point construction for a continuous μ : 2 → 2.
    Fpt {
        #[arg(long)]
        cpo: CpoName,
        #[arg(long)]
        mu: Mu,
    },
    /// Whether a map 2 → 2 given by its values is continuous.
    Mu {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        at0: u8,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        at1: u8,
    },
    /// Monotypic string transformations.
    String {
        #[command(subcommand)]
        action: StringAction,
    },
    /// Check the three adjunction conditions for a pairing of halves.
    Adjunction {
        #[arg(long, conflicts_with = "pairing", required_unless_present = "pairing")]
        cpo: Option<CpoName>,
        #[arg(long)]
        pairing: Option<Pairing>,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
    },
    /// Analyse the boundary element of a pair CPO.
    Boundary {
        #[arg(long)]
        cpo: CpoName,
    },
    /// Type decompositions and natural isomorphisms.
    Decompose {
        #[arg(long)]
        cpo: CpoName,
    },
    /// LCR-transformation between Λ′ and V.
    Lcr {
        #[command(subcommand)]
        direction: LcrDirection,
    },
    /// Copy-and-project replication of the boundary element.
    Replicate {
        /// Pair literal; defaults to the boundary (000⋯, ⋯111).
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Run and verify the dualization, replication and LCR edges.
    Pipeline,
    /// The property matrix of Λ, Λ′, Λ̂′ and V.
    Table8,
    /// Stage diagrams and chain diagrams.
    Diagram(DiagramArgs),
}

#[derive(Subcommand)]
enum OrderAction {
    /// Normal form of a word.
    Normalize {
        #[arg(long)]
        word: String,
    },
    /// Compare two elements, written BLOCK:OFFSET.
    Compare {
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Immediate predecessor and successor.
    Neighbors {
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Least and greatest elements.
    Extremes {
        #[arg(long)]
        word: String,
    },
    /// The first and last elements of every block.
    Elements {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FsAction {
    Word,
    Table,
    Iso,
    Eval,
}

#[derive(Args)]
struct FuncspaceArgs {
    #[arg(long)]
    cpo: CpoName,
    #[arg(long, value_enum, default_value_t = FsAction::Word)]
    action: FsAction,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: u64,
    /// For `eval`: the function, as an element label (ψ_x), `empty`,
    /// `up:LITERAL` or `tail:BLOCK`.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// For `eval`: the argument.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
}

#[derive(Subcommand)]
enum StringAction {
    /// Limit string of a specified string.
    Realize {
        #[arg(long)]
        spec: SpecKind,
        #[arg(long)]
        index: u64,
    },
    /// opp-transformation of a monotypic string.
    Opp {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// opp-transformation of a pair (x, y).
    OppPair {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// LR-transformation of a specified string.
    Lr {
        #[arg(long)]
        spec: SpecKind,
        #[arg(long)]
        index: u64,
    },
    /// LR-transformation of a pair of specified strings, each SPEC,INDEX.
    LrPair {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Family and index of a monotypic string.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The finite stage string s_i^(n).
    Approx {
        #[arg(long)]
        spec: SpecKind,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        n: u64,
    },
    /// Check that bit j of the stage strings settles on the limit.
    LimitCheck {
        #[arg(long)]
        spec: SpecKind,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        depth: u64,
    },
}

#[derive(Subcommand)]
enum LcrDirection {
    /// Λ′ → V.
    Forward {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// V → Λ′, resolving m′ by the chosen endpoint.
    Backward {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum)]
        endpoint: Endpoint,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Endpoint {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Args)]
struct DiagramArgs {
    /// 1: standard scheme, 5: alternative scheme.
    #[arg(long, value_parser = ["1", "5"], conflicts_with = "cpo", required_unless_present = "cpo")]
    table: Option<String>,
    /// Last stage drawn.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=64))]
    n: u64,
    /// Draw the chain of a named CPO instead.
    #[arg(long)]
    cpo: Option<CpoName>,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: u64,
}

/// A rejected invocation: printed to stderr, exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Out = Result<String, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Out {
    let f = cli.format;
    if f == Format::Dot && !matches!(cli.command, Command::Diagram(_)) {
        return Err(Usage("--format dot is only available for `diagram`".into()));
    }
    match cli.command {
        Command::Stage { n } => {
            let s = stage(n as usize);
            emit(f, &s, || s.to_string())
        }
        Command::Funcs { n } => funcs(f, n as usize),
        Command::Ep { scheme, n, verify } => ep(f, scheme, n as usize, verify),
        Command::Paths { scheme, depth } => {
            let paths = limit_paths(scheme, depth as usize)?;
            let text = lines(paths.iter());
            emit(f, &PathsOut { scheme, depth, paths }, || text)
        }
        Command::Limit { scheme } => {
            let word = limit_cpo(scheme);
            let out = LimitOut {
                scheme,
                word: word.to_string(),
                normal_form: word.normalize().to_string(),
            };
            emit(f, &out, || format!("{}: {}", out.scheme, out.word))
        }
        Command::Iso { a, b } => iso(f, &a, &b),
        Command::Order { action } => order(f, action),
        Command::Funcspace(args) => funcspace(f, args),
        Command::Fpt { cpo, mu } => fixed_point(f, cpo, mu),
        Command::Mu { at0, at1 } => {
            let out = MuOut {
                at0,
                at1,
                continuous: mu_continuous(at0, at1),
                mu: Mu::from_values(at0, at1),
            };
            emit(f, &out, || match out.mu {
                Some(m) => format!("μ(0) = {at0}, μ(1) = {at1}: continuous ({m})"),
                None => format!("μ(0) = {at0}, μ(1) = {at1}: not continuous"),
            })
        }
        Command::String { action } => strings(f, action),
        Command::Adjunction { cpo, pairing, window } => {
            let pairing = match (cpo, pairing) {
                (_, Some(p)) => p,
                (Some(c), None) => {
                    Pairing::of(c).ok_or_else(|| Usage(format!("{} has no adjunction pairing", c.ident())))?
                }
                (None, None) => unreachable!("clap requires one of --cpo, --pairing"),
            };
            let report = check_adjunction(pairing, window);
            emit(f, &report, || report.to_string())
        }
        Command::Boundary { cpo } => {
            let report = boundary_report(cpo)?;
            emit(f, &report, || report.to_string())
        }
        Command::Decompose { cpo } => {
            let ds = decompositions(cpo)?;
            let text = lines(ds.iter());
            emit(
                f,
                &DecomposeOut {
                    cpo,
                    decompositions: ds,
                },
                || text,
            )
        }
        Command::Lcr { direction } => lcr(f, direction),
        Command::Replicate { x } => {
            let m: PairString = match x {
                Some(s) => s.parse()?,
                None => PairString::new(MonotypicString::all_zeros_left(), MonotypicString::all_ones_right()),
            };
            let r = replicate(&m)?;
            emit(f, &r, || r.to_string())
        }
        Command::Pipeline => {
            let report = pipeline()?;
            emit(f, &report, || report.to_string())
        }
        Command::Table8 => {
            let rows = table8();
            let text = render_table8(&rows);
            emit(f, &Table8Out { rows }, || text)
        }
        Command::Diagram(args) => diagram(f, args),
    }
}

/// Renders `value` per format; text gets a trailing newline if missing.
fn emit<T: Serialize>(f: Format, value: &T, text: impl FnOnce() -> String) -> Out {
    match f {
        Format::Json => Ok(serde_json::to_string(value)? + "\n"),
        _ => {
            let mut s = text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn lines<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| format!("{x}\n")).collect()
}

#[derive(Serialize)]
struct FuncsOut {
    n: usize,
    count: usize,
    functions: Vec<String>,
    equals_next_stage: bool,
}

fn funcs(f: Format, n: usize) -> Out {
    let functions = enumerate_monotone(n);
    let next = stage(n + 1);
    let out = FuncsOut {
        n,
        count: functions.len(),
        equals_next_stage: functions == next.elements,
        functions,
    };
    emit(f, &out, || {
        format!(
            "{}\n|C(S{n},2)| = {}{}",
            out.functions.join(" "),
            out.count,
            if out.equals_next_stage {
                format!(" = |S{}|", n + 1)
            } else {
                String::new()
            }
        )
    })
}

#[derive(Serialize)]
struct EpOut {
    pair: cpo_core::stages::EpPair,
    verification: Option<cpo_core::stages::EpReport>,
}

fn ep(f: Format, scheme: Scheme, n: usize, verify: bool) -> Out {
    let pair = ep_pair(scheme, n);
    let verification = verify.then(|| verify_ep(scheme, n));
    emit(
        f,
        &EpOut {
            pair: pair.clone(),
            verification: verification.clone(),
        },
        || {
            let arrows = |m: &[usize]| {
                m.iter()
                    .enumerate()
                    .map(|(k, v)| format!("{k}↦{v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut s = format!("{scheme} scheme, n = {n}\n");
            let _ = writeln!(
                s,
                "e: S{} → S{}  {}",
                pair.e.from_stage,
                pair.e.to_stage,
                arrows(&pair.e.mapping)
            );
            let _ = writeln!(
                s,
                "p: S{} → S{}  {}",
                pair.p.from_stage,
                pair.p.to_stage,
                arrows(&pair.p.mapping)
            );
            if let Some(r) = &verification {
                for l in &r.laws {
                    match l.witness {
                        None => {
                            let _ = writeln!(s, "{}: holds", l.law);
                        }
                        Some(w) => {
                            let _ = writeln!(s, "{}: fails at label {w}", l.law);
                        }
                    }
                }
            }
            s
        },
    )
}

#[derive(Serialize)]
struct PathsOut {
    scheme: Scheme,
    depth: u64,
    paths: Vec<cpo_core::stages::LimitPath>,
}

#[derive(Serialize)]
struct LimitOut {
    scheme: Scheme,
    word: String,
    normal_form: String,
}

/// A CPO name or a raw order word.
fn parse_word(s: &str) -> Result<(String, OrderWord), Usage> {
    if let Ok(name) = s.parse::<CpoName>() {
        return Ok((name.ident().to_string(), named_cpo(name).word().clone()));
    }
    let w: OrderWord = s
        .parse()
        .map_err(|e| Usage(format!("`{s}` is neither a CPO name nor an order word: {e}")))?;
    Ok((w.to_string(), w))
}

#[derive(Serialize)]
struct IsoOut {
    a: String,
    b: String,
    word_a: String,
    word_b: String,
    normal_a: String,
    normal_b: String,
    isomorphic: bool,
}

fn iso(f: Format, a: &str, b: &str) -> Out {
    let (na, wa) = parse_word(a)?;
    let (nb, wb) = parse_word(b)?;
    let out = IsoOut {
        a: na,
        b: nb,
        word_a: wa.to_string(),
        word_b: wb.to_string(),
        normal_a: wa.normalize().to_string(),
        normal_b: wb.normalize().to_string(),
        isomorphic: wa.iso(&wb),
    };
    emit(f, &out, || {
        let verdict = if out.isomorphic { "isomorphic" } else { "not isomorphic" };
        format!("{verdict}: {} vs {}", out.word_a, out.word_b)
    })
}

/// `BLOCK:OFFSET` or `(BLOCK, OFFSET)`.
fn parse_elem(s: &str) -> Result<Elem, Usage> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (b, o) = t
        .split_once([':', ','])
        .ok_or_else(|| Usage(format!("`{s}`: elements are written BLOCK:OFFSET")))?;
    let block = b.trim().parse().map_err(|_| Usage(format!("`{s}`: bad block index")))?;
    let offset = o.trim().parse().map_err(|_| Usage(format!("`{s}`: bad offset")))?;
    Ok(Elem::new(block, offset))
}

#[derive(Serialize)]
struct NormalizeOut {
    word: String,
    normal_form: String,
    atoms: OrderWord,
}

#[derive(Serialize)]
struct CompareOut {
    x: Elem,
    y: Elem,
    ordering: &'static str,
}

#[derive(Serialize)]
struct NeighborsOut {
    x: Elem,
    predecessor: Option<Elem>,
    successor: Option<Elem>,
}

#[derive(Serialize)]
struct ElementsOut {
    word: String,
    window: u64,
    elements: Vec<Elem>,
}

fn order(f: Format, action: OrderAction) -> Out {
    let show = |e: Option<Elem>| e.map_or("none".to_string(), |e| e.to_string());
    match action {
        OrderAction::Normalize { word } => {
            let (_, w) = parse_word(&word)?;
            let out = NormalizeOut {
                word: w.to_string(),
                normal_form: w.normalize().to_string(),
                atoms: w.normalize(),
            };
            emit(f, &out, || format!("{} = {}", out.word, out.normal_form))
        }
        OrderAction::Compare { word, x, y } => {
            let (_, w) = parse_word(&word)?;
            let (x, y) = (parse_elem(&x)?, parse_elem(&y)?);
            let ordering = match w.compare(x, y)? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            let sym = match ordering {
                "less" => "<",
                "equal" => "=",
                _ => ">",
            };
            emit(f, &CompareOut { x, y, ordering }, || format!("{x} {sym} {y}"))
        }
        OrderAction::Neighbors { word, x } => {
            let (_, w) = parse_word(&word)?;
            let x = parse_elem(&x)?;
            let nb = w.neighbors(x)?;
            let out = NeighborsOut {
                x,
                predecessor: nb.predecessor,
                successor: nb.successor,
            };
            emit(f, &out, || {
                format!(
                    "predecessor: {}\nsuccessor: {}",
                    show(out.predecessor),
                    show(out.successor)
                )
            })
        }
        OrderAction::Extremes { word } => {
            let (_, w) = parse_word(&word)?;
            let ex = w.extremes();
            emit(f, &ex, || format!("bottom: {}\ntop: {}", show(ex.bottom), show(ex.top)))
        }
        OrderAction::Elements { word, window } => {
            let (_, w) = parse_word(&word)?;
            let elements = w.window(window);
            let text = elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" < ");
            emit(
                f,
                &ElementsOut {
                    word: w.to_string(),
                    window,
                    elements,
                },
                || text,
            )
        }
    }
}

#[derive(Serialize)]
struct FsWordOut {
    cpo: CpoName,
    word: String,
    raw_function_space: String,
    function_space: String,
    isomorphic: bool,
}

#[derive(Serialize)]
struct EvalOut {
    cpo: CpoName,
    g: OpenSegment,
    x: Label,
    value: u8,
}

fn funcspace(f: Format, args: FuncspaceArgs) -> Out {
    let cpo = named_cpo(args.cpo);
    let w = cpo.word();
    match args.action {
        FsAction::Word => {
            let fs = scott_opens(w);
            let out = FsWordOut {
                cpo: args.cpo,
                word: w.to_string(),
                raw_function_space: fs.raw_word().to_string(),
                function_space: fs.word().to_string(),
                isomorphic: self_iso(w).isomorphic,
            };
            emit(f, &out, || {
                let sym = args.cpo.symbol();
                format!(
                    "{sym} = {}\nC({sym},2) = {} = {}\n{}",
                    out.word,
                    out.raw_function_space,
                    out.function_space,
                    if out.isomorphic { "isomorphic" } else { "not isomorphic" }
                )
            })
        }
        FsAction::Iso => {
            let v = self_iso(w);
            emit(f, &v, || v.to_string())
        }
        FsAction::Table => {
            let t = function_table(&cpo, args.window)?;
            emit(f, &t, || t.to_string())
        }
        FsAction::Eval => {
            let g = args.g.ok_or_else(|| Usage("`eval` needs --g".into()))?;
            let x = args.x.ok_or_else(|| Usage("`eval` needs --x".into()))?;
            let g = parse_segment(&cpo, &g)?;
            let x = cpo.parse_element(&x)?;
            let value = eval_segment(w, &g, x)?;
            let label = cpo.label(x)?;
            emit(
                f,
                &EvalOut {
                    cpo: args.cpo,
                    g,
                    x: label,
                    value,
                },
                || format!("{}({label}) = {value}", g.describe(&cpo)),
            )
        }
    }
}

fn parse_segment(cpo: &NamedCpo, s: &str) -> Result<OpenSegment, Usage> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("empty") {
        return Ok(OpenSegment::Empty);
    }
    let seg = if let Some(rest) = t.strip_prefix("up:") {
        OpenSegment::up_from(cpo.parse_element(rest)?)
    } else if let Some(rest) = t.strip_prefix("tail:") {
        OpenSegment::BlockTail {
            block: rest
                .trim()
                .parse()
                .map_err(|_| Usage(format!("`{s}`: bad block index")))?,
        }
    } else {
        let x = cpo.parse_element(t)?;
        canonical_iso(cpo.word())?.apply(x)?
    };
    seg.check(cpo.word())?;
    Ok(seg)
}

#[derive(Serialize)]
struct FptOut {
    g: String,
    preimage: Label,
    value: u8,
}

#[derive(Serialize)]
struct NotApplicable {
    applicable: bool,
    reason: String,
}

fn fixed_point(f: Format, name: CpoName, mu: Mu) -> Out {
    let cpo = named_cpo(name);
    match fpt(&cpo, mu) {
        Ok(r) => {
            let out = FptOut {
                g: psi_ident(r.preimage_label),
                preimage: r.preimage_label,
                value: r.value,
            };
            emit(f, &out, || r.to_string())
        }
        Err(cpo_core::Error::NotIsomorphic(reason)) => {
            let out = NotApplicable {
                applicable: false,
                reason,
            };
            emit(f, &out, || {
                format!(
                    "not applicable: {} ≇ C({},2): {}",
                    name.symbol(),
                    name.symbol(),
                    out.reason
                )
            })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct MuOut {
    at0: u8,
    at1: u8,
    continuous: bool,
    mu: Option<Mu>,
}

#[derive(Serialize)]
struct StringOut {
    input: String,
    output: String,
    value: serde_json::Value,
}

fn strings(f: Format, action: StringAction) -> Out {
    let spec = |k: SpecKind, i: u64| SpecifiedString::new(k, i);
    let out = match action {
        StringAction::Realize { spec: k, index } => {
            let s = spec(k, index)?;
            let r = s.realize();
            StringOut {
                input: s.to_string(),
                output: r.to_string(),
                value: serde_json::to_value(r)?,
            }
        }
        StringAction::Opp { x } => {
            let m: MonotypicString = x.parse()?;
            let r = m.opp();
            StringOut {
                input: m.to_string(),
                output: r.to_string(),
                value: serde_json::to_value(r)?,
            }
        }
        StringAction::OppPair { x } => {
            let p: PairString = x.parse()?;
            let r = p.opp();
            StringOut {
                input: p.to_string(),
                output: r.to_string(),
                value: serde_json::to_value(r)?,
            }
        }
        StringAction::Lr { spec: k, index } => {
            let s = spec(k, index)?;
            let r = s.lr();
            let text = format!("{r} = {}", r.realize());
            StringOut {
                input: format!("{s} = {}", s.realize()),
                output: text,
                value: serde_json::to_value(r)?,
            }
        }
        StringAction::LrPair { a, b } => {
            let (a, b): (SpecifiedString, SpecifiedString) = (a.parse()?, b.parse()?);
            let r = lr_pair((a, b));
            StringOut {
                input: format!("({a}, {b})"),
                output: format!("({}, {})", r.0, r.1),
                value: serde_json::to_value(r)?,
            }
        }
        StringAction::Classify { x } => {
            let m: MonotypicString = x.parse()?;
            let c = m.classify();
            StringOut {
                input: m.to_string(),
                output: c.to_string(),
                value: serde_json::to_value(c)?,
            }
        }
        StringAction::Approx { spec: k, i, n } => {
            let s = finite_approx(k, i, n)?;
            StringOut {
                input: format!("s_{i}^({n}) of {k}"),
                output: s.clone(),
                value: serde_json::Value::String(s),
            }
        }
        StringAction::LimitCheck { spec: k, i, j, depth } => {
            let c = limit_check(k, i, j, depth)?;
            let output = match c.first_mismatch {
                None => format!("stable: bit {j} settles on {}", c.limit_bit),
                Some(n) => format!("unstable: bit {j} differs from {} at stage {n}", c.limit_bit),
            };
            StringOut {
                input: format!("({k}, {i}), bit {j}, depth {depth}"),
                output,
                value: serde_json::to_value(c)?,
            }
        }
    };
    emit(f, &out, || format!("{} ↦ {}", out.input, out.output))
}

#[derive(Serialize)]
struct DecomposeOut {
    cpo: CpoName,
    decompositions: Vec<cpo_core::replication::Decomposition>,
}

#[derive(Serialize)]
struct BackwardOut {
    source: Label,
    endpoint: Orientation,
    image: Label,
    value: Option<ElementValue>,
}

fn lcr(f: Format, direction: LcrDirection) -> Out {
    let lp = named_cpo(CpoName::LambdaPrime);
    let v = named_cpo(CpoName::V);
    match direction {
        LcrDirection::Forward { x } => {
            let img = lcr_forward(lp.parse_element(&x)?)?;
            emit(f, &img, || img.to_string())
        }
        LcrDirection::Backward { x, endpoint } => {
            let y = v.parse_element(&x)?;
            let endpoint = match endpoint {
                Endpoint::L => Orientation::L,
                Endpoint::R => Orientation::R,
            };
            let back = lcr_backward(y, endpoint)?;
            let out = BackwardOut {
                source: v.label(y)?,
                endpoint,
                image: lp.label(back)?,
                value: lp.value(back)?,
            };
            emit(f, &out, || {
                let value = out.value.map(|v| format!(" = {v}")).unwrap_or_default();
                format!("{} ↦ {}{value}", out.source, out.image)
            })
        }
    }
}

#[derive(Serialize)]
struct Table8Out {
    rows: Vec<cpo_core::replication::Table8Row>,
}

#[derive(Serialize)]
struct DiagramOut {
    kind: &'static str,
    scheme: Option<Scheme>,
    last: Option<u64>,
    cpo: Option<CpoName>,
    elements: Vec<String>,
    dot: String,
}

fn diagram(f: Format, args: DiagramArgs) -> Out {
    if let Some(name) = args.cpo {
        let cpo = named_cpo(name);
        let dot = chain_dot(&cpo, args.window);
        let elements: Vec<String> = cpo
            .word()
            .window(args.window)
            .into_iter()
            .map(|x| cpo.label(x).map(|l| l.to_string()))
            .collect::<cpo_core::Result<_>>()?;
        return Ok(match f {
            Format::Dot => dot,
            Format::Json => {
                let out = DiagramOut {
                    kind: "chain",
                    scheme: None,
                    last: None,
                    cpo: Some(name),
                    elements,
                    dot,
                };
                serde_json::to_string(&out)? + "\n"
            }
            Format::Text => elements.join(" < ") + "\n",
        });
    }
    let scheme = match args.table.as_deref() {
        Some("5") => Scheme::Alternative,
        _ => Scheme::Standard,
    };
    let last = args.n as usize;
    let dot = stage_diagram_dot(scheme, last);
    Ok(match f {
        Format::Dot => dot,
        Format::Text => stage_label_grid(scheme, last),
        Format::Json => {
            let elements = (1..=last).flat_map(|n| stage(n).elements).collect();
            let out = DiagramOut {
                kind: "stages",
                scheme: Some(scheme),
                last: Some(args.n),
                cpo: None,
                elements,
                dot,
            };
            serde_json::to_string(&out)? + "\n"
        }
    })
}
