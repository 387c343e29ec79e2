//! The input language: one declaration per line, `#` starts a comment.
//!
//! ```text
//! surface F genus 0 boundaries 2
//! curve C on F = cyc(+a1)
//! arc A on F = arc(s1@0 +a1 s2@0)
//! system S on F = canonical
//! system T on F = double A
//! system U on F = curves cyc(+d1@0 +a1 -d2@0)
//! fibration L on F = +C +C
//! diagram D from L sides 01
//! path P from S
//! step P twist plus C +1
//! step P slide 1 start fwd 1 end fwd
//! ```
//!
//! Indices are 1-based. In a curve of a contact cut system, `+dK@p` enters
//! the plus side across boundary segment `sK` at order index `p` and `-dK@p`
//! leaves it; the letters between them form the plus word.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use ccgraph::curves::{
    canonical_arc_system, invert_word, is_arc_system, Anchor, ArcSystemData, CurveWord, EndpointCurve, Letter, Slide,
    SlideEnd,
};
use ccgraph::cutgraph::{apply_edge, double_arc_system, validate_ccs, CCEdge, CCPath, ContactCutSystem, Side};
use ccgraph::lefschetz::{lf_to_diagram, LefschetzFibration, MultisectionDiagram};
use ccgraph::surface::{double, make_bounded_surface, DoubledSurface, PolygonPresentation};

/// A diagnostic tied to a source line (1-based; 0 when not applicable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

/// Parse failures and validation failures are reported differently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    Syntax(Diagnostic),
    Semantic(Diagnostic),
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Syntax(d) => write!(f, "syntax error at {d}"),
            DocError::Semantic(d) => write!(f, "error at {d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemDef {
    Canonical,
    Double(Vec<String>),
    Curves(Vec<EndpointCurve>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepDef {
    Twist { side: Side, curve: String, sign: i32 },
    Slides(Vec<Slide>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Surface { name: String, genus: usize, boundaries: usize },
    Curve { name: String, surface: String, word: CurveWord },
    Arc { name: String, surface: String, word: CurveWord },
    System { name: String, surface: String, def: SystemDef },
    Fibration { name: String, surface: String, factors: Vec<(i32, String)> },
    Diagram { name: String, fibration: String, sides: Vec<Side> },
    Path { name: String, start: String },
    Step { path: String, step: StepDef },
}

/// Declarations with the source line of each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub decls: Vec<(usize, Decl)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Num(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
    line: usize,
    end_col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn lex(line: usize, text: &str) -> Result<Lexer, DocError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if is_ident_start(c) {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Word(chars[s..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Num(chars[s..i].iter().collect()), col));
        } else if "=()@+-,{}".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(DocError::Syntax(Diagnostic { line, col, message: format!("unexpected character {c:?}") }));
        }
    }
    Ok(Lexer { toks, at: 0, line, end_col: chars.len() + 1 })
}

impl Lexer {
    fn col(&self) -> usize {
        self.toks.get(self.at).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, DocError> {
        Err(DocError::Syntax(Diagnostic { line: self.line, col: self.col(), message: message.into() }))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn done(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.0.clone());
        self.at += 1;
        t
    }

    fn ident(&mut self) -> Result<String, DocError> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.at += 1;
                Ok(w)
            }
            _ => self.err("expected an identifier"),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), DocError> {
        match self.peek() {
            Some(Tok::Word(w)) if w == k => {
                self.at += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{k}`")),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), DocError> {
        match self.peek() {
            Some(Tok::Sym(s)) if *s == c => {
                self.at += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{c}`")),
        }
    }

    fn is_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Sym(s)) if *s == c)
    }

    fn number(&mut self) -> Result<usize, DocError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let v = n.parse().or_else(|_| self.err("number out of range"))?;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected a number"),
        }
    }

    fn signed(&mut self) -> Result<i64, DocError> {
        let neg = if self.is_sym('-') {
            self.at += 1;
            true
        } else {
            if self.is_sym('+') {
                self.at += 1;
            }
            false
        };
        let v = self.number()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn sign(&mut self) -> Result<bool, DocError> {
        match self.next() {
            Some(Tok::Sym('+')) => Ok(true),
            Some(Tok::Sym('-')) => Ok(false),
            _ => {
                self.at -= 1;
                self.err("expected `+` or `-`")
            }
        }
    }

    fn end(&self) -> Result<(), DocError> {
        if self.done() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    /// `a3`, `s2`, `d1` and the like: a prefix letter and a 1-based index.
    fn indexed(&mut self, prefix: char) -> Result<usize, DocError> {
        let w = self.ident()?;
        let rest = w.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
        match rest {
            Some(k) if k >= 1 => Ok(k - 1),
            _ => {
                self.at -= 1;
                self.err(format!("expected {prefix}<k> with k ≥ 1"))
            }
        }
    }

    fn anchor(&mut self) -> Result<Anchor, DocError> {
        let seg = self.indexed('s')?;
        self.sym('@')?;
        Ok(Anchor::new(seg, self.signed()?))
    }

    fn letters_until_close(&mut self) -> Result<Vec<Letter>, DocError> {
        let mut out = Vec::new();
        let letter_next = |lx: &Self| matches!(lx.toks.get(lx.at + 1), Some((Tok::Word(w), _)) if w.starts_with('a'));
        while (self.is_sym('+') || self.is_sym('-')) && letter_next(self) {
            let plus = self.sign()?;
            out.push(Letter::new(self.indexed('a')?, plus));
        }
        Ok(out)
    }

    fn closed_word(&mut self) -> Result<CurveWord, DocError> {
        self.keyword("cyc")?;
        self.sym('(')?;
        let l = self.letters_until_close()?;
        self.sym(')')?;
        Ok(CurveWord::Closed(l))
    }

    fn arc_word(&mut self) -> Result<CurveWord, DocError> {
        self.keyword("arc")?;
        self.sym('(')?;
        let start = self.anchor()?;
        let l = self.letters_until_close()?;
        let end = self.anchor()?;
        self.sym(')')?;
        Ok(CurveWord::arc(start, l, end))
    }

    /// `cyc(+dJ@p <plus letters> -dK@q <minus letters>)`.
    fn sigma_curve(&mut self) -> Result<EndpointCurve, DocError> {
        self.keyword("cyc")?;
        self.sym('(')?;
        self.sym('+')?;
        let j = self.indexed('d')?;
        self.sym('@')?;
        let p = self.signed()?;
        let plus = self.letters_until_close()?;
        self.sym('-')?;
        let k = self.indexed('d')?;
        self.sym('@')?;
        let q = self.signed()?;
        let minus = self.letters_until_close()?;
        self.sym(')')?;
        Ok(EndpointCurve { start: Anchor::new(j, p), end: Anchor::new(k, q), words: vec![plus, invert_word(&minus)] })
    }

    fn side(&mut self) -> Result<Side, DocError> {
        match self.ident()?.as_str() {
            "plus" => Ok(Side::Plus),
            "minus" => Ok(Side::Minus),
            _ => {
                self.at -= 1;
                self.err("expected `plus` or `minus`")
            }
        }
    }
}

fn parse_line(line: usize, text: &str) -> Result<Option<Decl>, DocError> {
    let mut lx = lex(line, text)?;
    if lx.done() {
        return Ok(None);
    }
    let kind = lx.ident()?;
    let decl = match kind.as_str() {
        "surface" => {
            let name = lx.ident()?;
            lx.keyword("genus")?;
            let genus = lx.number()?;
            lx.keyword("boundaries")?;
            let boundaries = lx.number()?;
            Decl::Surface { name, genus, boundaries }
        }
        "curve" | "arc" | "system" | "fibration" => {
            let name = lx.ident()?;
            lx.keyword("on")?;
            let surface = lx.ident()?;
            lx.sym('=')?;
            match kind.as_str() {
                "curve" => Decl::Curve { name, surface, word: lx.closed_word()? },
                "arc" => Decl::Arc { name, surface, word: lx.arc_word()? },
                "system" => {
                    let def = match lx.ident()?.as_str() {
                        "canonical" => SystemDef::Canonical,
                        "double" => {
                            let mut v = vec![lx.ident()?];
                            while !lx.done() {
                                v.push(lx.ident()?);
                            }
                            SystemDef::Double(v)
                        }
                        "curves" => {
                            let mut v = vec![lx.sigma_curve()?];
                            while !lx.done() {
                                v.push(lx.sigma_curve()?);
                            }
                            SystemDef::Curves(v)
                        }
                        _ => {
                            lx.at -= 1;
                            return lx.err("expected `canonical`, `double` or `curves`");
                        }
                    };
                    Decl::System { name, surface, def }
                }
                _ => {
                    let mut factors = Vec::new();
                    while !lx.done() {
                        let s = if lx.sign()? { 1 } else { -1 };
                        factors.push((s, lx.ident()?));
                    }
                    Decl::Fibration { name, surface, factors }
                }
            }
        }
        "diagram" => {
            let name = lx.ident()?;
            lx.keyword("from")?;
            let fibration = lx.ident()?;
            lx.keyword("sides")?;
            let sides = if lx.done() {
                Vec::new()
            } else {
                let col = lx.col();
                match lx.next() {
                    Some(Tok::Num(bits)) => parse_sides(&bits)
                        .ok_or(DocError::Syntax(Diagnostic { line, col, message: "sides must be 0s and 1s".into() }))?,
                    _ => {
                        lx.at -= 1;
                        return lx.err("expected a bit string");
                    }
                }
            };
            Decl::Diagram { name, fibration, sides }
        }
        "path" => {
            let name = lx.ident()?;
            lx.keyword("from")?;
            Decl::Path { name, start: lx.ident()? }
        }
        "step" => {
            let path = lx.ident()?;
            let step = match lx.ident()?.as_str() {
                "twist" => {
                    let side = lx.side()?;
                    let curve = lx.ident()?;
                    let sign = lx.signed()?;
                    if sign.abs() != 1 {
                        return lx.err("twist sign must be +1 or -1");
                    }
                    StepDef::Twist { side, curve, sign: sign as i32 }
                }
                "slide" => {
                    let mut v = Vec::new();
                    while !lx.done() {
                        let k = lx.number()?;
                        if k == 0 {
                            return lx.err("curve indices start at 1");
                        }
                        let end = match lx.ident()?.as_str() {
                            "start" => SlideEnd::Start,
                            "end" => SlideEnd::End,
                            _ => {
                                lx.at -= 1;
                                return lx.err("expected `start` or `end`");
                            }
                        };
                        let forward = match lx.ident()?.as_str() {
                            "fwd" => true,
                            "back" => false,
                            _ => {
                                lx.at -= 1;
                                return lx.err("expected `fwd` or `back`");
                            }
                        };
                        v.push(Slide { slid: k - 1, end, forward });
                    }
                    if v.is_empty() {
                        return lx.err("a slide step needs at least one slide");
                    }
                    StepDef::Slides(v)
                }
                _ => {
                    lx.at -= 1;
                    return lx.err("expected `twist` or `slide`");
                }
            };
            Decl::Step { path, step }
        }
        _ => {
            lx.at = 0;
            return lx.err(format!("unknown declaration `{kind}`"));
        }
    };
    lx.end()?;
    Ok(Some(decl))
}

pub fn parse_sides(bits: &str) -> Option<Vec<Side>> {
    bits.chars()
        .map(|c| match c {
            '0' => Some(Side::Plus),
            '1' => Some(Side::Minus),
            _ => None,
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Document, DocError> {
    let mut doc = Document::default();
    for (i, line) in text.lines().enumerate() {
        if let Some(d) = parse_line(i + 1, line)? {
            doc.decls.push((i + 1, d));
        }
    }
    Ok(doc)
}

fn letters(l: &[Letter]) -> String {
    l.iter().map(|x| format!(" {x}")).collect()
}

/// A contact cut system curve in `cyc(+d.. -d..)` form.
pub fn sigma_word(c: &EndpointCurve) -> String {
    format!(
        "cyc(+d{}@{}{} -d{}@{}{})",
        c.start.seg + 1,
        c.start.pos,
        letters(&c.words[0]),
        c.end.seg + 1,
        c.end.pos,
        letters(&invert_word(&c.words[1]))
    )
}

pub fn side_name(s: Side) -> &'static str {
    match s {
        Side::Plus => "plus",
        Side::Minus => "minus",
    }
}

pub fn sides_bits(s: &[Side]) -> String {
    s.iter().map(|x| if *x == Side::Plus { '0' } else { '1' }).collect()
}

pub fn slides_text(v: &[Slide]) -> String {
    v.iter()
        .map(|s| {
            format!(
                "{} {} {}",
                s.slid + 1,
                if s.end == SlideEnd::Start { "start" } else { "end" },
                if s.forward { "fwd" } else { "back" }
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Surface { name, genus, boundaries } => write!(f, "surface {name} genus {genus} boundaries {boundaries}"),
            Decl::Curve { name, surface, word } | Decl::Arc { name, surface, word } => {
                let kind = if word.is_closed() { "curve" } else { "arc" };
                write!(f, "{kind} {name} on {surface} = {word}")
            }
            Decl::System { name, surface, def } => {
                write!(f, "system {name} on {surface} = ")?;
                match def {
                    SystemDef::Canonical => write!(f, "canonical"),
                    SystemDef::Double(v) => write!(f, "double {}", v.join(" ")),
                    SystemDef::Curves(v) => {
                        write!(f, "curves")?;
                        for c in v {
                            write!(f, " {}", sigma_word(c))?;
                        }
                        Ok(())
                    }
                }
            }
            Decl::Fibration { name, surface, factors } => {
                write!(f, "fibration {name} on {surface} =")?;
                for (s, c) in factors {
                    write!(f, " {}{c}", if *s > 0 { '+' } else { '-' })?;
                }
                Ok(())
            }
            Decl::Diagram { name, fibration, sides } => write!(f, "diagram {name} from {fibration} sides {}", sides_bits(sides)),
            Decl::Path { name, start } => write!(f, "path {name} from {start}"),
            Decl::Step { path, step } => match step {
                StepDef::Twist { side, curve, sign } => {
                    write!(f, "step {path} twist {} {curve} {}", side_name(*side), if *sign > 0 { "+1" } else { "-1" })
                }
                StepDef::Slides(v) => write!(f, "step {path} slide {}", slides_text(v)),
            },
        }
    }
}

/// Canonical text: one declaration per line, comments and blank lines dropped.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (_, d) in &doc.decls {
        let _ = writeln!(out, "{d}");
    }
    out
}

/// Every declared object, resolved and validated.
#[derive(Debug, Clone, Default)]
pub struct Model {
    pub surfaces: HashMap<String, PolygonPresentation>,
    pub curves: HashMap<String, (String, CurveWord)>,
    pub arcs: HashMap<String, (String, CurveWord)>,
    pub systems: HashMap<String, (String, ContactCutSystem)>,
    pub fibrations: HashMap<String, (String, LefschetzFibration)>,
    pub diagrams: HashMap<String, (String, MultisectionDiagram)>,
    pub paths: HashMap<String, (String, CCPath)>,
    /// Names in declaration order, with their kind.
    pub order: Vec<(String, &'static str)>,
}

fn sem<T>(line: usize, message: impl Into<String>) -> Result<T, DocError> {
    Err(DocError::Semantic(Diagnostic { line, col: 1, message: message.into() }))
}

impl Model {
    pub fn sigma(&self, surface: &str) -> DoubledSurface {
        double(&self.surfaces[surface])
    }

    fn surface(&self, line: usize, name: &str) -> Result<&PolygonPresentation, DocError> {
        match self.surfaces.get(name) {
            Some(f) => Ok(f),
            None => sem(line, format!("unknown surface `{name}`")),
        }
    }

    fn fresh(&mut self, line: usize, name: &str, kind: &'static str) -> Result<(), DocError> {
        if self.order.iter().any(|(n, _)| n == name) {
            return sem(line, format!("`{name}` is declared twice"));
        }
        self.order.push((name.to_string(), kind));
        Ok(())
    }

    fn curve_on(&self, line: usize, name: &str, surface: &str) -> Result<CurveWord, DocError> {
        match self.curves.get(name) {
            Some((s, c)) if s == surface => Ok(c.clone()),
            Some((s, _)) => sem(line, format!("curve `{name}` lives on `{s}`, not `{surface}`")),
            None => sem(line, format!("unknown curve `{name}`")),
        }
    }

    /// Resolves and validates a document in declaration order.
    pub fn build(doc: &Document) -> Result<Model, DocError> {
        let mut m = Model::default();
        for (line, d) in &doc.decls {
            let line = *line;
            match d {
                Decl::Surface { name, genus, boundaries } => {
                    m.fresh(line, name, "surface")?;
                    let f = make_bounded_surface(*genus, *boundaries).or_else(|e| sem(line, e.to_string()))?;
                    m.surfaces.insert(name.clone(), f);
                }
                Decl::Curve { name, surface, word } | Decl::Arc { name, surface, word } => {
                    let f = m.surface(line, surface)?;
                    word.check(f).or_else(|e| sem(line, e.to_string()))?;
                    let w = word.reduce(f);
                    if w.is_closed() {
                        m.fresh(line, name, "curve")?;
                        m.curves.insert(name.clone(), (surface.clone(), w));
                    } else {
                        m.fresh(line, name, "arc")?;
                        m.arcs.insert(name.clone(), (surface.clone(), word.clone()));
                    }
                }
                Decl::System { name, surface, def } => {
                    let f = m.surface(line, surface)?.clone();
                    let sys = match def {
                        SystemDef::Canonical => double_arc_system(&canonical_arc_system(&f)),
                        SystemDef::Double(names) => {
                            let mut arcs = Vec::new();
                            for n in names {
                                match m.arcs.get(n) {
                                    Some((s, a)) if s == surface => arcs.push(a.clone()),
                                    _ => return sem(line, format!("unknown arc `{n}` on `{surface}`")),
                                }
                            }
                            let (ok, why) = is_arc_system(&f, &arcs);
                            if !ok {
                                return sem(line, format!("not an arc system: {why}"));
                            }
                            double_arc_system(&ArcSystemData { arcs })
                        }
                        SystemDef::Curves(v) => {
                            for c in v {
                                for a in [c.start, c.end] {
                                    if a.seg >= f.segment_count() {
                                        return sem(line, format!("segment d{} does not exist", a.seg + 1));
                                    }
                                }
                                for l in c.words.iter().flatten() {
                                    if l.arc >= f.arc_count() {
                                        return sem(line, format!("letter a{} does not exist", l.arc + 1));
                                    }
                                }
                            }
                            ContactCutSystem { curves: v.clone() }
                        }
                    };
                    let (ok, why) = validate_ccs(&double(&f), &sys);
                    if !ok {
                        return sem(line, format!("not a contact cut system: {why}"));
                    }
                    m.fresh(line, name, "system")?;
                    m.systems.insert(name.clone(), (surface.clone(), sys));
                }
                Decl::Fibration { name, surface, factors } => {
                    let f = m.surface(line, surface)?.clone();
                    let mut cycles = Vec::new();
                    for (s, c) in factors {
                        cycles.push((m.curve_on(line, c, surface)?, *s));
                    }
                    let l = LefschetzFibration::new(f, cycles).or_else(|e| sem(line, e.to_string()))?;
                    m.fresh(line, name, "fibration")?;
                    m.fibrations.insert(name.clone(), (surface.clone(), l));
                }
                Decl::Diagram { name, fibration, sides } => {
                    let Some((surface, l)) = m.fibrations.get(fibration) else {
                        return sem(line, format!("unknown fibration `{fibration}`"));
                    };
                    let d = lf_to_diagram(l, sides).or_else(|e| sem(line, e.to_string()))?;
                    let surface = surface.clone();
                    m.fresh(line, name, "diagram")?;
                    m.diagrams.insert(name.clone(), (surface, d));
                }
                Decl::Path { name, start } => {
                    let Some((surface, v)) = m.systems.get(start) else {
                        return sem(line, format!("unknown system `{start}`"));
                    };
                    let p = (surface.clone(), CCPath::trivial(v.clone()));
                    m.fresh(line, name, "path")?;
                    m.paths.insert(name.clone(), p);
                }
                Decl::Step { path, step } => {
                    let Some((surface, _)) = m.paths.get(path) else {
                        return sem(line, format!("unknown path `{path}`"));
                    };
                    let surface = surface.clone();
                    let sigma = m.sigma(&surface);
                    let edge = match step {
                        StepDef::Twist { side, curve, sign } => {
                            CCEdge::Type1 { side: *side, twist: m.curve_on(line, curve, &surface)?, sign: *sign }
                        }
                        StepDef::Slides(v) => {
                            let mut cur = m.paths[path].1.last().clone();
                            let mut moves = Vec::new();
                            for s in v {
                                let (x, over) = ccgraph::cutgraph::apply_slide(&sigma, &cur, *s)
                                    .or_else(|e| sem(line, e.to_string()))?;
                                moves.push(ccgraph::cutgraph::SlideMove { slide: *s, over });
                                cur = x;
                            }
                            CCEdge::Type0 { slides: moves }
                        }
                    };
                    let p = &mut m.paths.get_mut(path).unwrap().1;
                    let next = apply_edge(&sigma, p.last(), &edge).or_else(|e| sem(line, e.to_string()))?;
                    p.push(edge, next);
                }
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# annulus with its core
surface F genus 0 boundaries 2
curve C on F = cyc(+a1)
arc A on F = arc(s1@0 s2@0)
system S on F = canonical
system T on F = curves cyc(+d2@0 -d1@0)
fibration L on F = +C +C
diagram D from L sides 01
path P from S
step P twist plus C +1
";

    #[test]
    fn surface_line() {
        let d = parse("surface F genus 0 boundaries 2").unwrap();
        assert_eq!(d.decls[0].1, Decl::Surface { name: "F".into(), genus: 0, boundaries: 2 });
    }

    #[test]
    fn closed_word_line() {
        let d = parse("surface F genus 0 boundaries 2\ncurve C on F = cyc(+a1 +a1)").unwrap();
        let Decl::Curve { word, .. } = &d.decls[1].1 else { panic!() };
        assert_eq!(word, &CurveWord::Closed(vec![Letter::new(0, true); 2]));
    }

    #[test]
    fn bad_letter_is_semantic() {
        let d = parse("surface F genus 0 boundaries 2\ncurve C on F = cyc(+a9)").unwrap();
        match Model::build(&d) {
            Err(DocError::Semantic(x)) => {
                assert_eq!(x.line, 2);
                assert!(x.message.contains("a9"), "{}", x.message);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_columns() {
        match parse("surface F genus x") {
            Err(DocError::Syntax(d)) => assert_eq!((d.line, d.col), (1, 17)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip_is_a_fixed_point() {
        let once = print(&parse(SAMPLE).unwrap());
        assert_eq!(print(&parse(&once).unwrap()), once);
        let m = Model::build(&parse(&once).unwrap()).unwrap();
        assert_eq!(m.paths["P"].1.edges.len(), 1);
        assert_eq!(m.systems["T"].1.curves.len(), 1);
    }

    #[test]
    fn emitted_documents_round_trip() {
        for fam in [ccgraph::invariants::family1(2).unwrap(), ccgraph::invariants::family2(3).unwrap()] {
            let text = print(&crate::commands::emit(&fam.sigma.half, Some(&fam.lf), Some(&fam.path)));
            let doc = parse(&text).unwrap();
            assert_eq!(print(&doc), text);
            let m = Model::build(&doc).unwrap();
            let p = &m.paths["P"].1;
            assert_eq!(p.last().key(&fam.sigma.half), fam.path.last().key(&fam.sigma.half));
            assert!(m.fibrations["L"].1.same_cycles(&fam.lf));
        }
    }
}
