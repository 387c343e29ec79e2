//! Contact cut systems on a doubled surface and the moves between them.
//!
//! A contact cut system on `Σ = F ∪ F̄` is stored as `m` two-sided arcs: each
//! curve crosses the dividing set at two anchors on `∂F` and carries one word
//! per side, both written in the coordinates of `F` (the mirror map identifies
//! `F̄` with `F`). Type-0 moves slide both sides at once along the dividing
//! set. A type-1 move twists one side; a right-handed twist on `F̄` is a
//! left-handed twist in the coordinates of `F`.

use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::curves::{
    dehn_twist, dual_curves_of, free_reduce, geometric_intersection, is_arc_system, normalize_endpoints, slide_curves,
    ArcSystemData, CurveWord, EndpointCurve, Slide, SlideEnd,
};
use crate::error::{Error, Result};
use crate::surface::{DoubledSurface, PolygonPresentation};

/// Default vertex budget for type-0 searches.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Side of the dividing set. `Plus` is `F`, `Minus` is the mirror `F̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::Plus => 0,
            Side::Minus => 1,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// A vertex of the contact cut graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContactCutSystem {
    pub curves: Vec<EndpointCurve>,
}

/// Isotopy-invariant form of a contact cut system.
pub type CcsKey = Vec<EndpointCurve>;

impl ContactCutSystem {
    /// The arc system cut out on one side.
    pub fn side(&self, side: Side) -> ArcSystemData {
        ArcSystemData { arcs: self.curves.iter().map(|c| c.to_arc(side.index())).collect() }
    }

    /// Canonical key: endpoints normalized, each curve in its smaller
    /// orientation, curves sorted.
    pub fn key(&self, f: &PolygonPresentation) -> CcsKey {
        let mut c = self.curves.clone();
        normalize_endpoints(f, &mut c);
        let mut v: Vec<EndpointCurve> = c.into_iter().map(|e| std::cmp::min(e.clone(), e.reversed())).collect();
        v.sort();
        v
    }
}

/// Doubles an arc system: the same arc on both sides.
pub fn double_arc_system(a: &ArcSystemData) -> ContactCutSystem {
    let curves = a
        .endpoint_curves()
        .into_iter()
        .map(|mut c| {
            let w = c.words[0].clone();
            c.words = vec![w.clone(), w];
            c
        })
        .collect();
    ContactCutSystem { curves }
}

/// Checks every contact cut system condition; the reason names the first failure.
pub fn validate_ccs(sigma: &DoubledSurface, c: &ContactCutSystem) -> (bool, String) {
    let f = &sigma.half;
    if c.curves.len() != f.arc_count() {
        return (false, format!("expected {} curves, found {}", f.arc_count(), c.curves.len()));
    }
    for (k, e) in c.curves.iter().enumerate() {
        if e.words.len() != 2 {
            return (false, format!("curve {} crosses the dividing set {} times", k + 1, 2 * e.words.len().saturating_sub(1)));
        }
    }
    for side in [Side::Plus, Side::Minus] {
        let (ok, reason) = is_arc_system(f, &c.side(side).arcs);
        if !ok {
            return (false, format!("{side:?} side: {reason}"));
        }
    }
    (true, "ok".into())
}

/// One contact handleslide, with the curve slid over for the record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlideMove {
    pub slide: Slide,
    pub over: usize,
}

/// An edge of the contact cut graph with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CCEdge {
    Type0 { slides: Vec<SlideMove> },
    Type1 { side: Side, twist: CurveWord, sign: i32 },
}

/// A path with the vertex after every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CCPath {
    pub vertices: Vec<ContactCutSystem>,
    pub edges: Vec<CCEdge>,
}

impl CCPath {
    pub fn trivial(v: ContactCutSystem) -> Self {
        CCPath { vertices: vec![v], edges: vec![] }
    }

    /// Number of type-0 edges.
    pub fn n0(&self) -> usize {
        self.edges.iter().filter(|e| matches!(e, CCEdge::Type0 { .. })).count()
    }

    pub fn last(&self) -> &ContactCutSystem {
        self.vertices.last().expect("a path has at least one vertex")
    }

    pub fn push(&mut self, e: CCEdge, v: ContactCutSystem) {
        self.edges.push(e);
        self.vertices.push(v);
    }

    /// Appends a path starting where this one ends.
    pub fn extend(&mut self, other: CCPath) {
        let mut v = other.vertices.into_iter();
        v.next();
        self.vertices.extend(v);
        self.edges.extend(other.edges);
    }
}

/// Applies one slide to both sides and normalizes endpoints.
pub fn apply_slide(sigma: &DoubledSurface, c: &ContactCutSystem, slide: Slide) -> Result<(ContactCutSystem, usize)> {
    let f = &sigma.half;
    let (mut curves, over) = slide_curves(f, &c.curves, slide)?;
    normalize_endpoints(f, &mut curves);
    Ok((ContactCutSystem { curves }, over))
}

/// Replays a type-0 certificate. Recorded `over` indices must match.
pub fn replay_slides(sigma: &DoubledSurface, c: &ContactCutSystem, slides: &[SlideMove]) -> Result<ContactCutSystem> {
    let mut cur = c.clone();
    for (k, s) in slides.iter().enumerate() {
        let (next, over) = apply_slide(sigma, &cur, s.slide)?;
        if over != s.over {
            return Err(Error::Slide(format!("slide {} goes over curve {} instead of {}", k + 1, over + 1, s.over + 1)));
        }
        cur = next;
    }
    Ok(cur)
}

/// Whether a slide list is one contact handleslide: one curve slid over a
/// sequence of others, its moved end continuing after the first slide.
pub fn is_single_move(slides: &[SlideMove]) -> bool {
    !slides.is_empty()
        && slides.iter().all(|s| s.slide.slid == slides[0].slide.slid)
        && slides[1..].iter().all(|s| s.slide.end == SlideEnd::End)
}

/// Splits a slide sequence into contact handleslides.
pub fn split_moves(slides: &[SlideMove]) -> Vec<Vec<SlideMove>> {
    let mut out: Vec<Vec<SlideMove>> = Vec::new();
    for s in slides {
        match out.last_mut() {
            Some(run) if run[0].slide.slid == s.slide.slid && s.slide.end == SlideEnd::End => run.push(*s),
            _ => out.push(vec![*s]),
        }
    }
    out
}

/// Appends one type-0 edge per contact handleslide in `slides`.
pub fn push_slides(sigma: &DoubledSurface, path: &mut CCPath, slides: &[SlideMove]) -> Result<()> {
    for run in split_moves(slides) {
        let next = replay_slides(sigma, path.last(), &run)?;
        path.push(CCEdge::Type0 { slides: run }, next);
    }
    Ok(())
}

/// Breadth-first search for a single contact handleslide from `start` to a
/// system accepted by `accept`. `curves` restricts which curve may slide.
pub fn find_single_move(
    sigma: &DoubledSurface,
    start: &ContactCutSystem,
    curves: Option<&[usize]>,
    accept: &dyn Fn(&ContactCutSystem) -> bool,
    budget: usize,
) -> Option<(Vec<SlideMove>, ContactCutSystem)> {
    let f = &sigma.half;
    let all: Vec<usize> = (0..start.curves.len()).collect();
    let curves = curves.unwrap_or(&all);
    let mut seen: HashMap<(usize, CcsKey, EndpointCurve), ()> = HashMap::new();
    let mut queue: VecDeque<(ContactCutSystem, usize, Vec<SlideMove>)> = VecDeque::new();
    for &k in curves {
        for end in [SlideEnd::Start, SlideEnd::End] {
            for forward in [true, false] {
                let slide = Slide { slid: k, end, forward };
                if let Ok((x, over)) = apply_slide(sigma, start, slide) {
                    let moves = vec![SlideMove { slide, over }];
                    if accept(&x) {
                        return Some((moves, x));
                    }
                    if seen.insert((k, x.key(f), x.curves[k].clone()), ()).is_none() {
                        queue.push_back((x, k, moves));
                    }
                }
            }
        }
    }
    while let Some((c, k, moves)) = queue.pop_front() {
        if seen.len() > budget {
            return None;
        }
        for forward in [true, false] {
            let slide = Slide { slid: k, end: SlideEnd::End, forward };
            if let Ok((x, over)) = apply_slide(sigma, &c, slide) {
                let mut m = moves.clone();
                m.push(SlideMove { slide, over });
                if accept(&x) {
                    return Some((m, x));
                }
                if seen.insert((k, x.key(f), x.curves[k].clone()), ()).is_none() {
                    queue.push_back((x, k, m));
                }
            }
        }
    }
    None
}

/// Twists one side of a system about `t`, right-handed in `Σ` when `sign > 0`.
pub fn apply_twist(sigma: &DoubledSurface, c: &ContactCutSystem, side: Side, t: &CurveWord, sign: i32) -> Result<ContactCutSystem> {
    let f = &sigma.half;
    let k = side.index();
    let s = if side == Side::Plus { sign } else { -sign };
    let mut out = c.clone();
    for e in out.curves.iter_mut() {
        let arc = e.to_arc(k);
        match dehn_twist(f, t, &arc, s)? {
            CurveWord::Arc { letters, .. } => e.words[k] = free_reduce(&letters),
            CurveWord::Closed(_) => unreachable!("twisting an arc yields an arc"),
        }
    }
    Ok(out)
}

/// Total crossings of a closed curve with one side of a system.
pub fn side_intersection(f: &PolygonPresentation, c: &ContactCutSystem, side: Side, t: &CurveWord) -> usize {
    c.curves.iter().map(|e| geometric_intersection(f, t, &e.to_arc(side.index()))).sum()
}

/// Checks and applies a single edge.
pub fn apply_edge(sigma: &DoubledSurface, c: &ContactCutSystem, e: &CCEdge) -> Result<ContactCutSystem> {
    match e {
        CCEdge::Type0 { slides } => {
            if !is_single_move(slides) {
                return Err(Error::Slide("a type-0 edge slides one curve, continuing from its moved end".into()));
            }
            replay_slides(sigma, c, slides)
        }
        CCEdge::Type1 { side, twist, sign } => {
            if !twist.is_closed() || twist.is_inessential() {
                return Err(Error::InessentialTwist);
            }
            if sign.abs() != 1 {
                return Err(Error::Precondition(format!("twist sign {sign} is not ±1")));
            }
            let n = side_intersection(&sigma.half, c, *side, twist);
            if n != 1 {
                return Err(Error::Precondition(format!("twist curve meets the system {n} times")));
            }
            apply_twist(sigma, c, *side, twist, *sign)
        }
    }
}

/// Finds a type-1 move from `v` to `w` among the dual curves of both sides.
pub fn detect_type1(sigma: &DoubledSurface, v: &ContactCutSystem, w: &ContactCutSystem) -> Option<(Side, CurveWord, i32)> {
    let f = &sigma.half;
    let target = w.key(f);
    for side in [Side::Plus, Side::Minus] {
        for t in dual_curves_of(f, &v.side(side).arcs) {
            for sign in [1, -1] {
                if let Ok(x) = apply_twist(sigma, v, side, &t, sign) {
                    if x.key(f) == target {
                        return Some((side, t, sign));
                    }
                }
            }
        }
    }
    None
}

/// Every slide available from a system.
pub fn all_slides(c: &ContactCutSystem) -> Vec<Slide> {
    let mut out = Vec::new();
    for slid in 0..c.curves.len() {
        for end in [SlideEnd::Start, SlideEnd::End] {
            for forward in [true, false] {
                out.push(Slide { slid, end, forward });
            }
        }
    }
    out
}

fn neighbors(sigma: &DoubledSurface, c: &ContactCutSystem) -> Vec<(SlideMove, ContactCutSystem)> {
    all_slides(c)
        .into_iter()
        .filter_map(|s| apply_slide(sigma, c, s).ok().map(|(x, over)| (SlideMove { slide: s, over }, x)))
        .collect()
}

/// Slides taking the actual system `from` to a system with key `to`, found
/// one step at a time along a chain of keys.
fn follow_keys(sigma: &DoubledSurface, from: &ContactCutSystem, keys: &[CcsKey]) -> Option<(Vec<SlideMove>, ContactCutSystem)> {
    let f = &sigma.half;
    let mut cur = from.clone();
    let mut moves = Vec::new();
    for k in keys {
        let (m, next) = neighbors(sigma, &cur).into_iter().find(|(_, x)| &x.key(f) == k)?;
        moves.push(m);
        cur = next;
    }
    Some((moves, cur))
}

/// Searches for a type-0 certificate from `v` to `w` by breadth-first search
/// from both ends. At most `budget` distinct systems are visited.
pub fn detect_type0(sigma: &DoubledSurface, v: &ContactCutSystem, w: &ContactCutSystem, budget: usize) -> Result<Vec<SlideMove>> {
    let f = &sigma.half;
    let kv = v.key(f);
    let kw = w.key(f);
    if kv == kw {
        return Ok(vec![]);
    }
    // parent links per side: key -> (parent key, representative)
    let mut seen: [HashMap<CcsKey, Option<CcsKey>>; 2] = [HashMap::new(), HashMap::new()];
    let mut reps: [HashMap<CcsKey, ContactCutSystem>; 2] = [HashMap::new(), HashMap::new()];
    let mut queues: [VecDeque<CcsKey>; 2] = [VecDeque::new(), VecDeque::new()];
    for (s, (k, c)) in [(kv.clone(), v), (kw.clone(), w)].into_iter().enumerate() {
        seen[s].insert(k.clone(), None);
        reps[s].insert(k.clone(), c.clone());
        queues[s].push_back(k);
    }
    let mut visited = 2;
    let meet = 'search: loop {
        if queues[0].is_empty() && queues[1].is_empty() {
            return Err(Error::BudgetExhausted(visited));
        }
        // expand the smaller frontier, one full layer at a time
        let s = if queues[1].is_empty() || (!queues[0].is_empty() && queues[0].len() <= queues[1].len()) { 0 } else { 1 };
        let layer: Vec<CcsKey> = queues[s].drain(..).collect();
        for k in layer {
            let c = reps[s][&k].clone();
            for (_, x) in neighbors(sigma, &c) {
                let kx = x.key(f);
                if seen[s].contains_key(&kx) {
                    continue;
                }
                seen[s].insert(kx.clone(), Some(k.clone()));
                reps[s].insert(kx.clone(), x);
                if seen[1 - s].contains_key(&kx) {
                    break 'search kx;
                }
                visited += 1;
                if visited > budget {
                    return Err(Error::BudgetExhausted(budget));
                }
                queues[s].push_back(kx);
            }
        }
    };
    let chain = |s: usize| {
        let mut out = vec![meet.clone()];
        while let Some(Some(p)) = seen[s].get(out.last().unwrap()) {
            out.push(p.clone());
        }
        out
    };
    // keys from v to the meeting point, then on to w
    let mut forward: Vec<CcsKey> = chain(0);
    forward.reverse();
    let backward: Vec<CcsKey> = chain(1);
    let keys: Vec<CcsKey> = forward.into_iter().skip(1).chain(backward.into_iter().skip(1)).collect();
    let (moves, end) = follow_keys(sigma, v, &keys).ok_or_else(|| Error::Slide("search chain could not be replayed".into()))?;
    debug_assert_eq!(end.key(f), kw);
    Ok(moves)
}

/// Best-first slide search until one side meets `t` exactly once.
pub fn bridge_to_dual(
    sigma: &DoubledSurface,
    start: &ContactCutSystem,
    side: Side,
    t: &CurveWord,
    budget: usize,
) -> Result<(Vec<SlideMove>, ContactCutSystem)> {
    if side_intersection(&sigma.half, start, side, t) == 0 {
        return Err(Error::InessentialTwist);
    }
    bridge_to_count(sigma, start, side, t, 1, budget)
}

/// Best-first slide search for a system meeting `t` exactly `target` times
/// on one side. Systems below the target are explored but never returned.
pub fn bridge_to_count(
    sigma: &DoubledSurface,
    start: &ContactCutSystem,
    side: Side,
    t: &CurveWord,
    target: usize,
    budget: usize,
) -> Result<(Vec<SlideMove>, ContactCutSystem)> {
    let f = &sigma.half;
    let cost = |c: &ContactCutSystem| side_intersection(f, c, side, t);
    let c0 = cost(start);
    if c0 == target {
        return Ok((vec![], start.clone()));
    }
    let mut nodes: Vec<(ContactCutSystem, Option<(usize, SlideMove)>)> = vec![(start.clone(), None)];
    let mut seen: HashMap<CcsKey, ()> = HashMap::new();
    seen.insert(start.key(f), ());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((c0.abs_diff(target), 0usize, 0usize)));
    while let Some(Reverse((_, depth, id))) = heap.pop() {
        let c = nodes[id].0.clone();
        for (m, x) in neighbors(sigma, &c) {
            let kx = x.key(f);
            if seen.contains_key(&kx) {
                continue;
            }
            seen.insert(kx, ());
            let cx = cost(&x);
            nodes.push((x, Some((id, m))));
            let nid = nodes.len() - 1;
            if cx == target {
                let mut moves = Vec::new();
                let mut k = nid;
                while let Some((p, m)) = nodes[k].1 {
                    moves.push(m);
                    k = p;
                }
                moves.reverse();
                return Ok((moves, nodes[nid].0.clone()));
            }
            if nodes.len() > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            heap.push(Reverse((cx.abs_diff(target), depth + 1, nid)));
        }
    }
    Err(Error::BudgetExhausted(nodes.len()))
}

/// Inverse of a slide that was just applied: the moved end is now the end
/// anchor of the slid curve, next to the curve it went over.
pub fn inverse_slide(s: Slide) -> Slide {
    Slide { slid: s.slid, end: SlideEnd::End, forward: !s.forward }
}

/// Outcome of re-verifying a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub valid: bool,
    pub n0: usize,
    pub type1: usize,
    pub is_loop: bool,
    /// First failing edge (0-based) and the reason.
    pub failure: Option<(usize, String)>,
}

/// Re-verifies every edge against the stored vertices.
pub fn validate_path(sigma: &DoubledSurface, p: &CCPath, budget: usize) -> PathReport {
    let f = &sigma.half;
    let mut report = PathReport { valid: true, n0: p.n0(), type1: p.edges.len() - p.n0(), is_loop: false, failure: None };
    let fail = |r: &mut PathReport, i: usize, why: String| {
        r.valid = false;
        r.failure = Some((i, why));
    };
    if p.vertices.len() != p.edges.len() + 1 {
        fail(&mut report, 0, format!("{} vertices for {} edges", p.vertices.len(), p.edges.len()));
        return report;
    }
    let (ok, why) = validate_ccs(sigma, &p.vertices[0]);
    if !ok {
        fail(&mut report, 0, format!("start vertex: {why}"));
        return report;
    }
    for (i, e) in p.edges.iter().enumerate() {
        match apply_edge(sigma, &p.vertices[i], e) {
            Ok(x) => {
                if x.key(f) != p.vertices[i + 1].key(f) {
                    fail(&mut report, i, "replay does not reach the next vertex".into());
                    return report;
                }
                let (ok, why) = validate_ccs(sigma, &p.vertices[i + 1]);
                if !ok {
                    fail(&mut report, i, why);
                    return report;
                }
            }
            Err(err) => {
                fail(&mut report, i, err.to_string());
                return report;
            }
        }
    }
    let first = &p.vertices[0];
    let last = p.last();
    report.is_loop = !p.edges.is_empty() && detect_type0(sigma, first, last, budget.min(10_000)).is_ok();
    report
}

/// Realizes a list of plus-side twists from `v`: before each factor a
/// type-0 bridge (if needed) makes the plus side dual to it, then one type-1
/// edge twists.
pub fn twist_path(sigma: &DoubledSurface, v: &ContactCutSystem, factors: &[(CurveWord, i32)], budget: usize) -> Result<CCPath> {
    let mut path = CCPath::trivial(v.clone());
    for (t, sign) in factors {
        if t.is_inessential() || !t.is_closed() {
            return Err(Error::InessentialTwist);
        }
        let (moves, reached) = bridge_to_dual(sigma, path.last(), Side::Plus, t, budget)?;
        push_slides(sigma, &mut path, &moves)?;
        debug_assert_eq!(path.last().key(&sigma.half), reached.key(&sigma.half));
        let next = apply_twist(sigma, path.last(), Side::Plus, t, *sign)?;
        path.push(CCEdge::Type1 { side: Side::Plus, twist: t.clone(), sign: *sign }, next);
    }
    Ok(path)
}

/// Builds a path from `v` to `w` realizing a twist factorization of the
/// monodromy between them. Factors act on the plus side, first factor first.
pub fn connect(
    sigma: &DoubledSurface,
    v: &ContactCutSystem,
    w: &ContactCutSystem,
    monodromy: &[(CurveWord, i32)],
    budget: usize,
) -> Result<CCPath> {
    let f = &sigma.half;
    let mut path = twist_path(sigma, v, monodromy, budget)?;
    let target = w.key(f);
    if path.last().key(f) == target {
        return Ok(path);
    }
    // undo the bridges; they commute with twists supported away from d
    let undo: Vec<Slide> = path
        .edges
        .iter()
        .flat_map(|e| match e {
            CCEdge::Type0 { slides } => slides.iter().map(|m| m.slide).collect(),
            CCEdge::Type1 { .. } => vec![],
        })
        .collect();
    let mut cur = path.last().clone();
    let mut replay = Vec::new();
    let mut ok = true;
    for s in undo.iter().rev() {
        match apply_slide(sigma, &cur, inverse_slide(*s)) {
            Ok((x, over)) => {
                replay.push(SlideMove { slide: inverse_slide(*s), over });
                cur = x;
            }
            Err(_) => {
                ok = false;
                break;
            }
        }
    }
    if ok && cur.key(f) == target {
        push_slides(sigma, &mut path, &replay)?;
        return Ok(path);
    }
    let slides = detect_type0(sigma, path.last(), w, budget).map_err(|e| match e {
        Error::BudgetExhausted(n) => Error::BudgetExhausted(n),
        other => Error::Precondition(format!("factorization does not reach the target: {other}")),
    })?;
    push_slides(sigma, &mut path, &slides)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{canonical_arc_system, dual_curves, Letter};
    use crate::surface::{double, make_bounded_surface};

    fn setup(p: usize, b: usize) -> (DoubledSurface, ContactCutSystem) {
        let f = make_bounded_surface(p, b).unwrap();
        let c = double_arc_system(&canonical_arc_system(&f));
        (double(&f), c)
    }

    #[test]
    fn doubled_systems_validate() {
        for (p, b) in [(0, 2), (0, 3), (1, 1), (1, 2)] {
            let (sigma, c) = setup(p, b);
            assert_eq!(validate_ccs(&sigma, &c), (true, "ok".to_string()));
        }
    }

    #[test]
    fn four_crossings_rejected() {
        let (sigma, mut c) = setup(0, 2);
        c.curves[0].words.push(vec![]);
        assert!(!validate_ccs(&sigma, &c).0);
    }

    #[test]
    fn twist_by_dual_is_detected() {
        let (sigma, v) = setup(1, 1);
        let b = dual_curves(&sigma.half);
        let w = apply_twist(&sigma, &v, Side::Plus, &b[0], 1).unwrap();
        assert!(validate_ccs(&sigma, &w).0);
        let (side, t, sign) = detect_type1(&sigma, &v, &w).unwrap();
        let again = apply_twist(&sigma, &v, side, &t, sign).unwrap();
        assert_eq!(again.key(&sigma.half), w.key(&sigma.half));
        assert!(detect_type1(&sigma, &v, &v).is_none());
    }

    #[test]
    fn annulus_double_twist_is_not_type1() {
        let (sigma, v) = setup(0, 2);
        let core = CurveWord::closed(vec![Letter::new(0, true)]);
        let once = apply_twist(&sigma, &v, Side::Plus, &core, 1).unwrap();
        let twice = apply_twist(&sigma, &once, Side::Plus, &core, 1).unwrap();
        assert!(detect_type1(&sigma, &v, &twice).is_none());
    }

    #[test]
    fn pants_slide_is_one_step() {
        let (sigma, v) = setup(0, 3);
        let s = Slide { slid: 1, end: SlideEnd::Start, forward: false };
        let (w, _) = apply_slide(&sigma, &v, s).unwrap();
        assert!(validate_ccs(&sigma, &w).0);
        let cert = detect_type0(&sigma, &v, &w, 1000).unwrap();
        assert_eq!(cert.len(), 1);
        assert_eq!(replay_slides(&sigma, &v, &cert).unwrap().key(&sigma.half), w.key(&sigma.half));
        assert!(detect_type0(&sigma, &v, &v, 10).unwrap().is_empty());
    }

    #[test]
    fn connect_single_factor() {
        let (sigma, v) = setup(1, 1);
        let b = dual_curves(&sigma.half);
        let w = apply_twist(&sigma, &v, Side::Plus, &b[0], 1).unwrap();
        let p = connect(&sigma, &v, &w, &[(b[0].clone(), 1)], 1000).unwrap();
        assert_eq!(p.edges.len(), 1);
        let r = validate_path(&sigma, &p, 1000);
        assert!(r.valid, "{r:?}");
        assert_eq!(r.n0, 0);
    }

    #[test]
    fn connect_two_factors() {
        let (sigma, v) = setup(1, 1);
        let b = dual_curves(&sigma.half);
        let fac = vec![(b[0].clone(), 1), (b[1].clone(), -1)];
        let mut w = v.clone();
        for (t, s) in &fac {
            w = apply_twist(&sigma, &w, Side::Plus, t, *s).unwrap();
        }
        let p = connect(&sigma, &v, &w, &fac, 10_000).unwrap();
        let r = validate_path(&sigma, &p, 10_000);
        assert!(r.valid, "{r:?}");
        assert!(r.type1 >= 2);
    }

    #[test]
    fn fabricated_certificate_fails() {
        let (sigma, v) = setup(0, 3);
        let s = Slide { slid: 1, end: SlideEnd::Start, forward: false };
        let (w, over) = apply_slide(&sigma, &v, s).unwrap();
        let bad = CCEdge::Type0 { slides: vec![SlideMove { slide: s, over: 1 - over }] };
        let p = CCPath { vertices: vec![v, w], edges: vec![bad] };
        let r = validate_path(&sigma, &p, 100);
        assert!(!r.valid);
        assert_eq!(r.failure.unwrap().0, 0);
    }
}
