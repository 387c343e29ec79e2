//! Lefschetz fibrations over the disk, their monodromy, Hurwitz moves, and
//! the translations between paths, fibrations and diagrams.
//!
//! Conventions: a cycle `(V, ε)` contributes `τ_V^ε`, right-handed for
//! `ε = +1`. The monodromy of `V_1, …, V_n` is `τ_{V_n} ∘ ⋯ ∘ τ_{V_1}`, so
//! `V_1` acts first. Twists on the minus side of `Σ` are written in the
//! coordinates of `F`, where a right-handed twist of `Σ` is left-handed.

use std::collections::{HashSet, VecDeque};

use crate::curves::{
    canonical_arc_system, dehn_twist, free_reduce, renumber_positions, Anchor, CurveWord, EndpointCurve, Letter,
    Realization,
};
use crate::cutgraph::{
    apply_edge, apply_twist, double_arc_system, find_single_move, replay_slides, side_intersection, twist_path,
    validate_ccs, CCEdge, CCPath, ContactCutSystem, Side,
};
use crate::error::{Error, Result};
use crate::surface::{double, DoubledSurface, Edge, PolygonPresentation};

/// Image of a curve under `τ_t^sign`, reduced.
pub fn twist_curve(f: &PolygonPresentation, t: &CurveWord, c: &CurveWord, sign: i32) -> Result<CurveWord> {
    Ok(dehn_twist(f, t, c, sign)?.reduce(f))
}

/// An ordered list of signed twists; the first factor acts first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonodromyWord {
    pub factors: Vec<(CurveWord, i32)>,
}

impl MonodromyWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn inverse(&self) -> Self {
        MonodromyWord { factors: self.factors.iter().rev().map(|(c, s)| (c.clone(), -s)).collect() }
    }

    /// Image of any curve or arc.
    pub fn apply(&self, f: &PolygonPresentation, c: &CurveWord) -> Result<CurveWord> {
        let mut x = c.clone();
        for (t, s) in &self.factors {
            x = dehn_twist(f, t, &x, *s)?;
        }
        Ok(match x {
            CurveWord::Closed(_) => x.reduce(f),
            CurveWord::Arc { start, letters, end } => CurveWord::Arc { start, letters: free_reduce(&letters), end },
        })
    }

    /// Words of the canonical reference arcs after the map; anchors stay put.
    /// Two words are the same mapping class exactly when these agree.
    pub fn action(&self, f: &PolygonPresentation) -> Result<Vec<Vec<Letter>>> {
        canonical_arc_system(f).arcs.iter().map(|a| self.apply(f, a).map(|x| x.letters().to_vec())).collect()
    }

    pub fn same_map(&self, f: &PolygonPresentation, other: &MonodromyWord) -> Result<bool> {
        Ok(self.action(f)? == other.action(f)?)
    }
}

/// Fiber with ordered vanishing cycles. `visible` records, for fibrations
/// read off a path, which cycles came from plus-side twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzFibration {
    pub fiber: PolygonPresentation,
    pub cycles: Vec<(CurveWord, i32)>,
    pub visible: Option<Vec<bool>>,
}

impl LefschetzFibration {
    /// Checks allowability: every cycle closed and homologically essential.
    pub fn new(fiber: PolygonPresentation, cycles: Vec<(CurveWord, i32)>) -> Result<Self> {
        let l = LefschetzFibration { fiber, cycles, visible: None };
        l.check()?;
        Ok(l)
    }

    pub fn check(&self) -> Result<()> {
        let m = self.fiber.arc_count();
        for (k, (c, s)) in self.cycles.iter().enumerate() {
            c.check(&self.fiber)?;
            if s.abs() != 1 {
                return Err(Error::Precondition(format!("cycle {} has sign {s}", k + 1)));
            }
            if c.algebraic_class(m)?.iter().all(|&x| x == 0) {
                return Err(Error::NotAllowable(k));
            }
        }
        if let Some(v) = &self.visible {
            if v.len() != self.cycles.len() {
                return Err(Error::Precondition("visibility flags do not match the cycles".into()));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn monodromy(&self) -> MonodromyWord {
        MonodromyWord { factors: self.cycles.clone() }
    }

    /// Same cycles up to isotopy, same signs, same order.
    pub fn same_cycles(&self, other: &LefschetzFibration) -> bool {
        self.cycles.len() == other.cycles.len()
            && self.cycles.iter().zip(&other.cycles).all(|((a, s), (b, t))| s == t && a.same_closed_curve(b))
    }
}

/// Open book on the boundary: page and monodromy word.
pub fn boundary_open_book(l: &LefschetzFibration) -> (PolygonPresentation, MonodromyWord) {
    (l.fiber.clone(), l.monodromy())
}

/// A sequence of contact cut systems, each a twist of the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisectionDiagram {
    pub sigma: DoubledSurface,
    pub systems: Vec<ContactCutSystem>,
    pub twists: Vec<(Side, CurveWord, i32)>,
}

impl MultisectionDiagram {
    /// Re-verifies every system and every twist relation.
    pub fn check(&self) -> Result<()> {
        if self.systems.len() != self.twists.len() + 1 {
            return Err(Error::Precondition("diagram needs one more system than twists".into()));
        }
        let f = &self.sigma.half;
        for (i, c) in self.systems.iter().enumerate() {
            let (ok, why) = validate_ccs(&self.sigma, c);
            if !ok {
                return Err(Error::CutSystem(format!("system {i}: {why}")));
            }
        }
        for (i, (side, t, s)) in self.twists.iter().enumerate() {
            let x = apply_twist(&self.sigma, &self.systems[i], *side, t, *s)?;
            if x.key(f) != self.systems[i + 1].key(f) {
                return Err(Error::Path { index: i, reason: "twist does not produce the next system".into() });
            }
        }
        Ok(())
    }
}

fn check_double_start(p: &CCPath) -> Result<()> {
    let v = &p.vertices[0];
    if v.curves.iter().any(|c| c.words.len() != 2 || c.words[0] != c.words[1]) {
        return Err(Error::Precondition("path must start at a doubled arc system".into()));
    }
    Ok(())
}

/// Reads the vanishing cycles off the type-1 edges of a path that starts at
/// a doubled arc system. Plus-side twists are the cycles themselves; a
/// minus-side twist `T_i` gives `V_i = τ_{V_{i-1}} ∘ ⋯ ∘ τ_{V_1}(T_i)`.
pub fn path_to_lf(sigma: &DoubledSurface, p: &CCPath) -> Result<LefschetzFibration> {
    let f = &sigma.half;
    check_edges(sigma, p)?;
    check_double_start(p)?;
    let mut psi = MonodromyWord::identity();
    let mut cycles = Vec::new();
    let mut visible = Vec::new();
    for e in &p.edges {
        if let CCEdge::Type1 { side, twist, sign } = e {
            let v = match side {
                Side::Plus => twist.reduce(f),
                Side::Minus => psi.apply(f, twist)?,
            };
            psi.factors.push((v.clone(), *sign));
            cycles.push((v, *sign));
            visible.push(*side == Side::Plus);
        }
    }
    let mut l = LefschetzFibration::new(f.clone(), cycles)?;
    l.visible = Some(visible);
    Ok(l)
}

/// Replays every edge of a path, without the loop test.
pub fn check_edges(sigma: &DoubledSurface, p: &CCPath) -> Result<()> {
    let r = crate::cutgraph::validate_path(sigma, p, 0);
    match r.failure {
        None => Ok(()),
        Some((index, reason)) => Err(Error::Path { index, reason }),
    }
}

/// Minus-side twist curve for cycle `v` after `prior`:
/// `(τ_{V_{i-1}}^{ε} ∘ ⋯ ∘ τ_{V_1}^{ε})^{-1}(v)`.
pub fn minus_side_curve(f: &PolygonPresentation, prior: &[(CurveWord, i32)], v: &CurveWord) -> Result<CurveWord> {
    MonodromyWord { factors: prior.to_vec() }.inverse().apply(f, v)
}

/// The same curve through the conjugated product: with `X_1 = V_1` and
/// `X_k` the minus-side curve of `V_k`, apply `τ_{X_1}^{-1}` first and
/// `τ_{X_{i-1}}^{-1}` last.
pub fn minus_side_curve_conjugated(f: &PolygonPresentation, prior: &[(CurveWord, i32)], v: &CurveWord) -> Result<CurveWord> {
    let mut xs: Vec<(CurveWord, i32)> = Vec::with_capacity(prior.len());
    for k in 0..prior.len() {
        let x = minus_side_curve(f, &prior[..k], &prior[k].0)?;
        xs.push((x, -prior[k].1));
    }
    MonodromyWord { factors: xs }.apply(f, v)
}

/// `τ_{V_1} ∘ ⋯ ∘ τ_{V_{i-1}} = τ_{X_{i-1}} ∘ ⋯ ∘ τ_{X_2} ∘ τ_{V_1}` with
/// `X_k = τ_{V_1} ∘ ⋯ ∘ τ_{V_{k-1}}(V_k)`, compared on the reference arcs.
pub fn conjugation_identity_holds(f: &PolygonPresentation, vs: &[(CurveWord, i32)]) -> Result<bool> {
    // the left side applies V_{i-1} first
    let lhs = MonodromyWord { factors: vs.iter().rev().cloned().collect() };
    let mut rhs = MonodromyWord::identity();
    for k in 0..vs.len() {
        let prefix = MonodromyWord { factors: vs[..k].iter().rev().cloned().collect() };
        rhs.factors.push((prefix.apply(f, &vs[k].0)?, vs[k].1));
    }
    lhs.same_map(f, &rhs)
}

/// Diagram of a fibration starting from the double of the canonical system;
/// `sides[i]` picks where the `i`-th twist happens.
pub fn lf_to_diagram(l: &LefschetzFibration, sides: &[Side]) -> Result<MultisectionDiagram> {
    if sides.len() != l.len() {
        return Err(Error::Precondition(format!("{} side choices for {} cycles", sides.len(), l.len())));
    }
    let f = &l.fiber;
    let sigma = double(f);
    let mut systems = vec![double_arc_system(&canonical_arc_system(f))];
    let mut twists = Vec::new();
    for (i, ((v, s), side)) in l.cycles.iter().zip(sides).enumerate() {
        let t = match side {
            Side::Plus => v.clone(),
            Side::Minus => minus_side_curve(f, &l.cycles[..i], v)?,
        };
        let next = apply_twist(&sigma, systems.last().unwrap(), *side, &t, *s)?;
        systems.push(next);
        twists.push((*side, t, *s));
    }
    Ok(MultisectionDiagram { sigma, systems, twists })
}

/// A path realizing a fibration: plus-side twists about each cycle, with
/// type-0 bridges wherever the current system is not dual to the next cycle.
pub fn lf_to_path(l: &LefschetzFibration, budget: usize) -> Result<(DoubledSurface, CCPath)> {
    l.check()?;
    let sigma = double(&l.fiber);
    let start = double_arc_system(&canonical_arc_system(&l.fiber));
    let p = twist_path(&sigma, &start, &l.cycles, budget)?;
    Ok((sigma, p))
}

/// Hurwitz move on the pair at `i`, `i + 1` (0-based). Forward:
/// `(V_i, V_{i+1}) ↦ (τ_{V_i}^{-ε_i}(V_{i+1}), V_i)`; backward undoes it.
pub fn hurwitz_move(l: &LefschetzFibration, i: usize, forward: bool) -> Result<LefschetzFibration> {
    if i + 1 >= l.len() {
        return Err(Error::Index(format!("no adjacent pair at {} among {} cycles", i + 1, l.len())));
    }
    let f = &l.fiber;
    let (a, ea) = l.cycles[i].clone();
    let (b, eb) = l.cycles[i + 1].clone();
    let mut out = l.clone();
    if forward {
        out.cycles[i] = (twist_curve(f, &a, &b, -ea)?, eb);
        out.cycles[i + 1] = (a, ea);
    } else {
        out.cycles[i] = (b.clone(), eb);
        out.cycles[i + 1] = (twist_curve(f, &b, &a, eb)?, ea);
    }
    if let Some(v) = out.visible.as_mut() {
        v.swap(i, i + 1);
    }
    Ok(out)
}

fn cycle_list_key(l: &LefschetzFibration) -> Vec<(Vec<Letter>, i32)> {
    l.cycles.iter().map(|(c, s)| (c.canonical_key(), *s)).collect()
}

/// Breadth-first search for Hurwitz moves taking `a` to `b` (cycles compared
/// up to isotopy). `None` means not found within `depth` moves.
pub fn hurwitz_search(a: &LefschetzFibration, b: &LefschetzFibration, depth: usize) -> Result<Option<Vec<(usize, bool)>>> {
    let target = cycle_list_key(b);
    let mut seen: HashSet<Vec<(Vec<Letter>, i32)>> = HashSet::new();
    let mut queue = VecDeque::from([(a.clone(), Vec::new())]);
    seen.insert(cycle_list_key(a));
    while let Some((l, moves)) = queue.pop_front() {
        if cycle_list_key(&l) == target {
            return Ok(Some(moves));
        }
        if moves.len() == depth {
            continue;
        }
        for i in 0..l.len().saturating_sub(1) {
            for fw in [true, false] {
                let x = hurwitz_move(&l, i, fw)?;
                if seen.insert(cycle_list_key(&x)) {
                    let mut m = moves.clone();
                    m.push((i, fw));
                    queue.push_back((x, m));
                }
            }
        }
    }
    Ok(None)
}

/// Membership in a set of curves up to isotopy.
pub fn in_set(c: &CurveWord, set: &[CurveWord]) -> bool {
    set.iter().any(|b| b.same_closed_curve(c))
}

/// Hurwitz-normalizes a fibration whose cycles satisfy
/// `V_i ∈ (τ_{V_{j_k}} ∘ ⋯ ∘ τ_{V_{j_1}})(B)` for the visible indices
/// `j_1 < ⋯ < j_k` below `i`. Invisible cycles are pulled to the front, then
/// visible ones are pulled leftward from the back. Every output cycle lies in `B`.
pub fn normalize_l0(l: &LefschetzFibration, b: &[CurveWord], visible: &[bool]) -> Result<LefschetzFibration> {
    let f = &l.fiber;
    let n = l.len();
    if visible.len() != n {
        return Err(Error::Precondition(format!("{} visibility flags for {n} cycles", visible.len())));
    }
    if l.cycles.iter().any(|(_, s)| *s != 1) {
        return Err(Error::Precondition("normalization needs right-handed cycles only".into()));
    }
    for i in 0..n {
        let prior = MonodromyWord { factors: (0..i).filter(|&j| visible[j]).map(|j| l.cycles[j].clone()).collect() };
        let back = prior.inverse().apply(f, &l.cycles[i].0)?;
        if !in_set(&back, b) {
            return Err(Error::Precondition(format!("cycle {} is not a twisted dual curve", i + 1)));
        }
    }
    let mut cur = l.clone();
    cur.visible = Some(visible.to_vec());
    let invisible: Vec<usize> = (0..n).filter(|&i| !visible[i]).collect();
    for (k, &p) in invisible.iter().enumerate() {
        for pos in (k..p).rev() {
            cur = hurwitz_move(&cur, pos, true)?;
        }
    }
    let l0 = invisible.len();
    for k in 0..n - l0 {
        for pos in (l0 + k..n - 1).rev() {
            cur = hurwitz_move(&cur, pos, true)?;
        }
    }
    for (i, (c, _)) in cur.cycles.iter().enumerate() {
        if !in_set(c, b) {
            return Err(Error::Precondition(format!("normalized cycle {} is outside the dual set", i + 1)));
        }
    }
    if !cur.monodromy().same_map(f, &l.monodromy())? {
        return Err(Error::Precondition("normalization changed the monodromy".into()));
    }
    Ok(cur)
}

/// The fiber after attaching a 1-handle at the endpoints of an arc, with
/// the bookkeeping to lift arcs of the old fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub fiber: PolygonPresentation,
    /// Index of the new reference arc (the cocore of the handle).
    pub new_arc: usize,
    /// `a ∪ core`: crosses the new reference arc once.
    pub cycle: CurveWord,
    feet: [usize; 2],
    start_first: bool,
    pieces: Vec<Vec<usize>>,
}

impl Stabilization {
    /// `a` must be an embedded arc; anchors name segments, and when both
    /// ends share a segment the position order decides which foot comes first.
    pub fn new(f: &PolygonPresentation, a: &CurveWord) -> Result<Self> {
        let CurveWord::Arc { start, letters, end } = a else {
            return Err(Error::Word("stabilization needs an arc".into()));
        };
        a.check(f)?;
        if free_reduce(letters).len() != letters.len() {
            return Err(Error::Word("stabilization arc is not reduced".into()));
        }
        if Realization::new(f, &[a]).self_crossings(0) > 0 {
            return Err(Error::Word("stabilization arc is not embedded".into()));
        }
        let start_first = start.seg != end.seg || start.pos < end.pos;
        let m = f.arc_count();
        let mut word = Vec::with_capacity(f.edge_count() + 4);
        let mut pieces = vec![Vec::new(); f.segment_count()];
        let mut next_seg = 0;
        let mut seg = |word: &mut Vec<Edge>, pieces: &mut Vec<Vec<usize>>, s: usize| {
            word.push(Edge::Seg(next_seg));
            pieces[s].push(next_seg);
            next_seg += 1;
        };
        for &e in f.word() {
            match e {
                Edge::Arc { .. } => word.push(e),
                Edge::Seg(s) => {
                    let mut copies = Vec::new();
                    if start.seg == s {
                        copies.push(true);
                    }
                    if end.seg == s {
                        copies.push(false);
                    }
                    if copies.len() == 2 && !start_first {
                        copies.reverse();
                    }
                    seg(&mut word, &mut pieces, s);
                    for plus in copies {
                        word.push(Edge::Arc { arc: m, plus });
                        seg(&mut word, &mut pieces, s);
                    }
                }
            }
        }
        let fiber = PolygonPresentation::from_word(word)?;
        let mut cl = letters.clone();
        cl.push(Letter::new(m, false));
        let cycle = CurveWord::Closed(cl);
        Ok(Stabilization { fiber, new_arc: m, cycle, feet: [start.seg, end.seg], start_first, pieces })
    }

    /// Lifts a closed curve of the old fiber.
    pub fn lift_curve(&self, c: &CurveWord) -> CurveWord {
        c.clone()
    }

    /// All foot placements among the endpoints of `v`, as gap indices.
    fn gap_choices(&self, v: &ContactCutSystem) -> Vec<[usize; 2]> {
        let count = |s: usize| v.curves.iter().flat_map(|c| [c.start, c.end]).filter(|a| a.seg == s).count();
        let (k0, k1) = (count(self.feet[0]), count(self.feet[1]));
        let mut out = Vec::new();
        for g0 in 0..=k0 {
            for g1 in 0..=k1 {
                if self.feet[0] == self.feet[1] && (g0 < g1) != self.start_first && g0 != g1 {
                    continue;
                }
                out.push([g0, g1]);
            }
        }
        out
    }

    /// Lifts a system with the feet in the given gaps and adds the doubled
    /// cocore of the handle as the last curve.
    pub fn lift_system(&self, v: &ContactCutSystem, gaps: [usize; 2]) -> ContactCutSystem {
        let mut curves = v.curves.clone();
        renumber_positions(&mut curves);
        let lift = |a: Anchor| {
            let mut piece = 0;
            let ps = &self.pieces[a.seg];
            if ps.len() == 3 {
                piece = usize::from(gaps[0] as i64 <= a.pos) + usize::from(gaps[1] as i64 <= a.pos);
            } else if ps.len() == 2 {
                let g = if self.feet[0] == a.seg { gaps[0] } else { gaps[1] };
                piece = usize::from(g as i64 <= a.pos);
            }
            Anchor::new(ps[piece], a.pos)
        };
        for c in curves.iter_mut() {
            c.start = lift(c.start);
            c.end = lift(c.end);
        }
        let g = &self.fiber;
        let (before, after) = g.segments_around(self.new_arc, true);
        let on = |s: usize| curves.iter().flat_map(|c| [c.start, c.end]).filter(move |a| a.seg == s).map(|a| a.pos);
        let sp = on(before).max().map_or(0, |x| x + 1);
        let ep = on(after).min().map_or(0, |x| x - 1);
        curves.push(EndpointCurve { start: Anchor::new(before, sp), end: Anchor::new(after, ep), words: vec![vec![], vec![]] });
        renumber_positions(&mut curves);
        ContactCutSystem { curves }
    }
}

/// Positive (`sign = 1`) or negative Lefschetz stabilization along `a`.
pub fn stabilize(l: &LefschetzFibration, a: &CurveWord, sign: i32) -> Result<(LefschetzFibration, Stabilization)> {
    let st = Stabilization::new(&l.fiber, a)?;
    let mut cycles: Vec<(CurveWord, i32)> = l.cycles.iter().map(|(c, s)| (st.lift_curve(c), *s)).collect();
    cycles.push((st.cycle.clone(), sign));
    let mut out = LefschetzFibration::new(st.fiber.clone(), cycles)?;
    out.visible = l.visible.as_ref().map(|v| {
        let mut v = v.clone();
        v.push(true);
        v
    });
    Ok((out, st))
}

/// Lifts a path to the stabilized double and appends `m` type-0 edges, each
/// removing one crossing of `a ∪ core` with the plus side, then the twist
/// about `a ∪ core`. The anchor positions of `a` are gap indices among the
/// endpoints of the final vertex.
pub fn stabilize_path(
    sigma: &DoubledSurface,
    p: &CCPath,
    a: &CurveWord,
    sign: i32,
    budget: usize,
) -> Result<(DoubledSurface, CCPath, Stabilization)> {
    check_edges(sigma, p)?;
    let CurveWord::Arc { start, end, .. } = a else {
        return Err(Error::Word("stabilization needs an arc".into()));
    };
    let st = Stabilization::new(&sigma.half, a)?;
    let sigma2 = double(&st.fiber);
    let f2 = &sigma2.half;
    let n = p.edges.len();
    let gaps = [start.pos.max(0) as usize, end.pos.max(0) as usize];
    let last = st.lift_system(p.last(), gaps);
    let (ok, why) = validate_ccs(&sigma2, &last);
    if !ok {
        return Err(Error::Precondition(format!("stabilized final system: {why}")));
    }
    // lift backwards: twists invert exactly, slides are re-found
    let mut verts = vec![last];
    let mut edges = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let next = verts.last().unwrap().clone();
        match &p.edges[i] {
            CCEdge::Type1 { side, twist, sign } => {
                verts.push(apply_twist(&sigma2, &next, *side, twist, -sign)?);
                edges.push(p.edges[i].clone());
            }
            CCEdge::Type0 { slides } => {
                let target = next.key(f2);
                let k = slides[0].slide.slid;
                let choices: Vec<ContactCutSystem> =
                    st.gap_choices(&p.vertices[i]).into_iter().map(|g| st.lift_system(&p.vertices[i], g)).collect();
                let replayed = choices
                    .iter()
                    .find(|c| replay_slides(&sigma2, c, slides).map_or(false, |x| x.key(f2) == target));
                let (v, cert) = match replayed {
                    Some(c) => (c.clone(), slides.clone()),
                    None => {
                        // the slid endpoint may have to pass a foot of the handle
                        // most lifts need one extra slide, so try every placement cheaply first
                        let hit = |x: &ContactCutSystem| x.key(f2) == target;
                        [200, 2_000, budget]
                            .into_iter()
                            .filter(|&b| b <= budget)
                            .find_map(|b| {
                                choices.iter().find_map(|c| {
                                    find_single_move(&sigma2, c, Some(&[k]), &hit, b).map(|(m, _)| (c.clone(), m))
                                })
                            })
                            .ok_or_else(|| Error::Precondition(format!("type-0 edge {} does not lift", i + 1)))?
                    }
                };
                verts.push(v);
                edges.push(CCEdge::Type0 { slides: cert });
            }
        }
    }
    verts.reverse();
    edges.reverse();
    // forward replay; a move found from an isotopic copy is searched again
    // from the exact state
    let mut path = CCPath::trivial(verts[0].clone());
    for (i, e) in edges.into_iter().enumerate() {
        let target = verts[i + 1].key(f2);
        let e = match e {
            CCEdge::Type0 { slides } => {
                let fits = replay_slides(&sigma2, path.last(), &slides).map_or(false, |x| x.key(f2) == target);
                if fits {
                    CCEdge::Type0 { slides }
                } else {
                    let hit = |x: &ContactCutSystem| x.key(f2) == target;
                    let (m, _) = find_single_move(&sigma2, path.last(), None, &hit, budget)
                        .ok_or_else(|| Error::Precondition(format!("type-0 edge {} does not lift", i + 1)))?;
                    CCEdge::Type0 { slides: m }
                }
            }
            other => other,
        };
        let x = apply_edge(&sigma2, path.last(), &e)?;
        path.push(e, x);
    }
    // one handleslide per crossing of a ∪ core with the plus side
    let c = &st.cycle;
    let m = side_intersection(f2, path.last(), Side::Plus, c).saturating_sub(1);
    for k in 0..m {
        let want = m - k;
        let hit = |x: &ContactCutSystem| side_intersection(f2, x, Side::Plus, c) == want;
        let (moves, reached) = find_single_move(&sigma2, path.last(), None, &hit, budget)
            .ok_or_else(|| Error::Precondition(format!("no handleslide removes crossing {}", k + 1)))?;
        path.push(CCEdge::Type0 { slides: moves }, reached);
    }
    let fin = apply_twist(&sigma2, path.last(), Side::Plus, c, sign)?;
    path.push(CCEdge::Type1 { side: Side::Plus, twist: c.clone(), sign }, fin);
    Ok((sigma2, path, st))
}
