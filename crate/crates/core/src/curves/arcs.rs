//! Arc systems: validity, complementary regions, dual curves, endpoint
//! normalization and arc slides.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{free_reduce, invert_word, Anchor, CurveWord, Letter, Realization};
use crate::error::{Error, Result};
use crate::surface::PolygonPresentation;

/// An arc carrying one word per side. Arcs on `F` have one word; curves of a
/// contact cut system carry the plus and the minus word, sharing endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EndpointCurve {
    pub start: Anchor,
    pub end: Anchor,
    pub words: Vec<Vec<Letter>>,
}

impl EndpointCurve {
    pub fn from_arc(c: &CurveWord) -> Self {
        match c {
            CurveWord::Arc { start, letters, end } => EndpointCurve { start: *start, end: *end, words: vec![letters.clone()] },
            CurveWord::Closed(_) => panic!("closed curve has no endpoints"),
        }
    }

    /// The arc read on side `k`.
    pub fn to_arc(&self, k: usize) -> CurveWord {
        CurveWord::Arc { start: self.start, letters: self.words[k].clone(), end: self.end }
    }

    pub fn reversed(&self) -> Self {
        EndpointCurve { start: self.end, end: self.start, words: self.words.iter().map(|w| invert_word(w)).collect() }
    }

    fn len(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }
}

/// Which end of the slid arc moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SlideEnd {
    Start,
    End,
}

/// An arc slide: one end of arc `slid` travels along the boundary, in the
/// positive direction if `forward`, to the next endpoint and over its arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slide {
    pub slid: usize,
    pub end: SlideEnd,
    pub forward: bool,
}

/// Reference-relative arc system on `F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcSystemData {
    pub arcs: Vec<CurveWord>,
}

/// Push-offs of the reference arcs, each beside its `a_i^+` copy.
pub fn canonical_arc_system(f: &PolygonPresentation) -> ArcSystemData {
    let arcs = (0..f.arc_count())
        .map(|i| {
            let (before, after) = f.segments_around(i, true);
            CurveWord::Arc { start: Anchor::new(before, 1), letters: vec![], end: Anchor::new(after, 0) }
        })
        .collect();
    let mut curves: Vec<EndpointCurve> = ArcSystemData { arcs }.endpoint_curves();
    renumber_positions(&mut curves);
    ArcSystemData::from_endpoint_curves(&curves)
}

impl ArcSystemData {
    pub fn endpoint_curves(&self) -> Vec<EndpointCurve> {
        self.arcs.iter().map(EndpointCurve::from_arc).collect()
    }

    pub fn from_endpoint_curves(c: &[EndpointCurve]) -> Self {
        ArcSystemData { arcs: c.iter().map(|e| e.to_arc(0)).collect() }
    }
}

/// Rewrites every segment's positions to `0..k-1`, keeping their order.
pub(crate) fn renumber_positions(curves: &mut [EndpointCurve]) {
    let mut by_seg: std::collections::BTreeMap<usize, Vec<i64>> = Default::default();
    for c in curves.iter() {
        by_seg.entry(c.start.seg).or_default().push(c.start.pos);
        by_seg.entry(c.end.seg).or_default().push(c.end.pos);
    }
    for v in by_seg.values_mut() {
        v.sort();
        v.dedup();
    }
    let rank = |a: &mut Anchor| {
        let v = &by_seg[&a.seg];
        a.pos = v.binary_search(&a.pos).unwrap() as i64;
    };
    for c in curves.iter_mut() {
        rank(&mut c.start);
        rank(&mut c.end);
    }
}

fn anchors_on(curves: &[EndpointCurve], seg: usize) -> impl Iterator<Item = i64> + '_ {
    curves.iter().flat_map(move |c| {
        let mut v = Vec::new();
        if c.start.seg == seg {
            v.push(c.start.pos);
        }
        if c.end.seg == seg {
            v.push(c.end.pos);
        }
        v
    })
}

/// Moves one endpoint across the next boundary vertex, if no other endpoint
/// sits between it and that vertex. This is an isotopy of the whole system.
pub(crate) fn move_endpoint(
    f: &PolygonPresentation,
    curves: &[EndpointCurve],
    k: usize,
    at_end: bool,
    forward: bool,
) -> Option<EndpointCurve> {
    let c = &curves[k];
    let a = if at_end { c.end } else { c.start };
    let here: Vec<i64> = anchors_on(curves, a.seg).collect();
    let extreme = if forward { here.iter().max() } else { here.iter().min() };
    if extreme != Some(&a.pos) {
        return None;
    }
    let (t, letter) = if forward {
        (f.next_segment(a.seg), f.forward_vertex_letter(a.seg))
    } else {
        (f.prev_segment(a.seg), f.backward_vertex_letter(a.seg))
    };
    let there: Vec<i64> = anchors_on(curves, t).filter(|&p| !(t == a.seg && p == a.pos)).collect();
    let pos = if forward {
        there.iter().min().map_or(0, |m| m - 1)
    } else {
        there.iter().max().map_or(0, |m| m + 1)
    };
    let mut out = c.clone();
    for w in out.words.iter_mut() {
        *w = if at_end {
            let mut v = w.clone();
            v.push(letter.inverse());
            free_reduce(&v)
        } else {
            let mut v = vec![letter];
            v.extend_from_slice(w);
            free_reduce(&v)
        };
    }
    let new_anchor = Anchor::new(t, pos);
    if at_end {
        out.end = new_anchor;
    } else {
        out.start = new_anchor;
    }
    Some(out)
}

/// Isotopes endpoints along the boundary to minimize total word length, then
/// pushes tied endpoints backwards as far as the length allows. Positions are
/// renumbered per segment at the end.
pub fn normalize_endpoints(f: &PolygonPresentation, curves: &mut Vec<EndpointCurve>) {
    let mut seen: HashSet<Vec<EndpointCurve>> = HashSet::new();
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > 100_000 {
            break;
        }
        let total: usize = curves.iter().map(EndpointCurve::len).sum();
        let mut applied = false;
        'descent: for k in 0..curves.len() {
            for at_end in [false, true] {
                for forward in [false, true] {
                    if let Some(c) = move_endpoint(f, curves, k, at_end, forward) {
                        if c.len() < curves[k].len() {
                            curves[k] = c;
                            applied = true;
                            break 'descent;
                        }
                    }
                }
            }
        }
        if applied {
            continue;
        }
        renumber_positions(curves);
        seen.insert(curves.clone());
        'plateau: for k in 0..curves.len() {
            for at_end in [false, true] {
                if let Some(c) = move_endpoint(f, curves, k, at_end, false) {
                    if c.len() == curves[k].len() {
                        let mut trial = curves.clone();
                        trial[k] = c;
                        renumber_positions(&mut trial);
                        if !seen.contains(&trial) {
                            *curves = trial;
                            applied = true;
                            break 'plateau;
                        }
                    }
                }
            }
        }
        let _ = total;
        if !applied {
            break;
        }
    }
    renumber_positions(curves);
}

/// Cyclic order of all endpoints on the boundary circle containing `seg`:
/// `(curve, at_end, anchor)` in the positive direction.
fn endpoints_on_circle(f: &PolygonPresentation, curves: &[EndpointCurve], seg: usize) -> Vec<(usize, bool, Anchor)> {
    let comp = &f.boundary_components()[f.component_of(seg)];
    let mut out = Vec::new();
    for &s in comp {
        let mut here: Vec<(i64, usize, bool)> = Vec::new();
        for (k, c) in curves.iter().enumerate() {
            if c.start.seg == s {
                here.push((c.start.pos, k, false));
            }
            if c.end.seg == s {
                here.push((c.end.pos, k, true));
            }
        }
        here.sort();
        out.extend(here.into_iter().map(|(p, k, e)| (k, e, Anchor::new(s, p))));
    }
    out
}

/// Letters picked up by a strand running just inside the boundary from `a`
/// to `b` in the given direction.
fn boundary_path(f: &PolygonPresentation, a: Anchor, b: Anchor, forward: bool) -> Vec<Letter> {
    let direct = a.seg == b.seg && if forward { b.pos > a.pos } else { b.pos < a.pos };
    let mut out = Vec::new();
    if direct {
        return out;
    }
    let mut s = a.seg;
    loop {
        if forward {
            out.push(f.forward_vertex_letter(s).inverse());
            s = f.next_segment(s);
        } else {
            out.push(f.backward_vertex_letter(s).inverse());
            s = f.prev_segment(s);
        }
        if s == b.seg {
            break;
        }
    }
    out
}

/// Applies a slide to a set of (possibly two-sided) arcs. Returns the new set
/// and the index of the arc slid over.
pub fn slide_curves(f: &PolygonPresentation, curves: &[EndpointCurve], slide: Slide) -> Result<(Vec<EndpointCurve>, usize)> {
    let i = slide.slid;
    if i >= curves.len() {
        return Err(Error::Slide(format!("no arc {}", i + 1)));
    }
    let at_end = slide.end == SlideEnd::End;
    let ci = &curves[i];
    let e = if at_end { ci.end } else { ci.start };
    let circle = endpoints_on_circle(f, curves, e.seg);
    let idx = circle.iter().position(|&(k, ae, _)| k == i && ae == at_end).unwrap();
    let len = circle.len();
    let (j, f_at_end, fa) = circle[if slide.forward { (idx + 1) % len } else { (idx + len - 1) % len }];
    if j == i {
        return Err(Error::Slide("the next endpoint along the boundary belongs to the slid arc".into()));
    }
    let cj = &curves[j];
    let gamma = boundary_path(f, e, fa, slide.forward);
    // slid arc from its far end to e, then gamma, then arc j from fa to its far end
    let oi = if at_end { ci.clone() } else { ci.reversed() };
    let oj = if f_at_end { cj.reversed() } else { cj.clone() };
    let far = oj.end;
    let mut words = Vec::with_capacity(oi.words.len());
    for k in 0..oi.words.len() {
        let mut w = oi.words[k].clone();
        w.extend_from_slice(&gamma);
        w.extend_from_slice(&oj.words[k]);
        words.push(free_reduce(&w));
    }
    let mut out: Vec<EndpointCurve> = curves
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.start.pos *= 2;
            c.end.pos *= 2;
            c
        })
        .collect();
    let new_end = Anchor::new(far.seg, 2 * far.pos + if slide.forward { 1 } else { -1 });
    out[i] = EndpointCurve { start: Anchor::new(oi.start.seg, oi.start.pos * 2), end: new_end, words };
    renumber_positions(&mut out);
    Ok((out, j))
}

/// Slides an arc of a system on `F`; the result is endpoint-normalized.
pub fn arc_slide(f: &PolygonPresentation, a: &ArcSystemData, slide: Slide) -> Result<(ArcSystemData, usize)> {
    let (mut c, j) = slide_curves(f, &a.endpoint_curves(), slide)?;
    normalize_endpoints(f, &mut c);
    Ok((ArcSystemData::from_endpoint_curves(&c), j))
}

/// Faces of the polygon cut along a realized arc system, and their gluing.
struct Regions {
    real: Realization,
    /// Face of each boundary interval; interval `k` starts at point `k`.
    face: Vec<usize>,
    faces: usize,
}

impl Regions {
    fn new(f: &PolygonPresentation, arcs: &[&CurveWord]) -> Regions {
        let real = Realization::new(f, arcs);
        let n = real.n;
        let mut other = vec![0usize; n];
        for ch in &real.chords {
            for &(p, q) in ch {
                other[p] = q;
                other[q] = p;
            }
        }
        let mut face = vec![usize::MAX; n];
        let mut faces = 0;
        for s in 0..n {
            if face[s] != usize::MAX {
                continue;
            }
            let mut k = s;
            while face[k] == usize::MAX {
                face[k] = faces;
                k = other[(k + 1) % n];
            }
            faces += 1;
        }
        Regions { real, face, faces: faces.max(1) }
    }

    /// Face containing the gap before point `r` on polygon edge `e`.
    fn face_at(&self, e: usize, r: usize) -> usize {
        if self.real.n == 0 {
            return 0;
        }
        let n = self.real.n;
        self.face[(self.real.offset[e] + r + n - 1) % n]
    }

    /// Glue data: for every piece of every reference arc, the faces on the
    /// plus and minus copies.
    fn gluing(&self, f: &PolygonPresentation) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..f.arc_count() {
            let ep = f.arc_position(i, true);
            let em = f.arc_position(i, false);
            let k = self.real.points_on_edge[ep];
            for j in 0..=k {
                out.push((i, self.face_at(ep, j), self.face_at(em, k - j)));
            }
        }
        out
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Checks that `arcs` form an arc system: `m` disjoint embedded arcs whose
/// complement is one disk. The reason names the first failure.
pub fn is_arc_system(f: &PolygonPresentation, arcs: &[CurveWord]) -> (bool, String) {
    if arcs.len() != f.arc_count() {
        return (false, format!("expected {} arcs, found {}", f.arc_count(), arcs.len()));
    }
    for (k, a) in arcs.iter().enumerate() {
        if a.is_closed() {
            return (false, format!("curve {} is closed", k + 1));
        }
        if let Err(e) = a.check(f) {
            return (false, format!("arc {}: {e}", k + 1));
        }
    }
    let mut curves: Vec<EndpointCurve> = arcs.iter().map(EndpointCurve::from_arc).collect();
    let mut anchors: Vec<Anchor> = curves.iter().flat_map(|c| [c.start, c.end]).collect();
    anchors.sort();
    if anchors.windows(2).any(|w| w[0] == w[1]) {
        return (false, "two endpoints coincide".into());
    }
    for c in curves.iter_mut() {
        c.words[0] = free_reduce(&c.words[0]);
    }
    normalize_endpoints(f, &mut curves);
    let reduced: Vec<CurveWord> = curves.iter().map(|c| c.to_arc(0)).collect();
    let refs: Vec<&CurveWord> = reduced.iter().collect();
    let regions = Regions::new(f, &refs);
    for a in 0..refs.len() {
        if regions.real.self_crossings(a) > 0 {
            return (false, format!("arc {} is not embedded", a + 1));
        }
        for b in a + 1..refs.len() {
            if regions.real.crossings_between(a, b) > 0 {
                return (false, format!("arcs {} and {} intersect", a + 1, b + 1));
            }
        }
    }
    let mut parent: Vec<usize> = (0..regions.faces).collect();
    for (_, x, y) in regions.gluing(f) {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx] = ry;
    }
    let comps = (0..regions.faces).filter(|&x| find(&mut parent, x) == x).count();
    if comps != 1 {
        return (false, format!("complement has {comps} components"));
    }
    (true, "ok".into())
}

/// Dual curves of an arc system: curve `k` crosses arc `k` once and no other
/// arc. Returned reduced.
pub fn dual_curves_of(f: &PolygonPresentation, arcs: &[CurveWord]) -> Vec<CurveWord> {
    let refs: Vec<&CurveWord> = arcs.iter().collect();
    let regions = Regions::new(f, &refs);
    let glue = regions.gluing(f);
    let mut adj: Vec<Vec<(usize, Letter)>> = vec![Vec::new(); regions.faces];
    for &(i, x, y) in &glue {
        adj[x].push((y, Letter::new(i, true)));
        adj[y].push((x, Letter::new(i, false)));
    }
    let n = regions.real.n;
    let mut out = Vec::with_capacity(arcs.len());
    for k in 0..arcs.len() {
        let (p, _) = regions.real.chords[k][0];
        let right = regions.face[p];
        let left = regions.face[(p + n - 1) % n];
        // breadth-first path from left to right through reference-arc pieces
        let mut prev: Vec<Option<(usize, Letter)>> = vec![None; regions.faces];
        let mut seen = vec![false; regions.faces];
        let mut queue = VecDeque::from([left]);
        seen[left] = true;
        while let Some(x) = queue.pop_front() {
            if x == right {
                break;
            }
            for &(y, l) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, l));
                    queue.push_back(y);
                }
            }
        }
        let mut word = Vec::new();
        let mut x = right;
        while x != left {
            let (px, l) = prev[x].expect("arc system complement is connected");
            word.push(l);
            x = px;
        }
        word.reverse();
        out.push(CurveWord::Closed(super::cyclic_reduce(&word)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{dual_curves, geometric_intersection};
    use crate::surface::make_bounded_surface;

    #[test]
    fn canonical_system_is_valid() {
        for (p, b) in [(0, 2), (0, 3), (1, 1), (1, 2), (0, 5), (2, 1)] {
            let f = make_bounded_surface(p, b).unwrap();
            let a = canonical_arc_system(&f);
            assert_eq!(is_arc_system(&f, &a.arcs), (true, "ok".to_string()), "{p} {b}");
        }
    }

    #[test]
    fn missing_arc_rejected() {
        let f = make_bounded_surface(1, 1).unwrap();
        let mut a = canonical_arc_system(&f);
        a.arcs.pop();
        assert!(!is_arc_system(&f, &a.arcs).0);
    }

    #[test]
    fn parallel_copy_rejected() {
        let f = make_bounded_surface(0, 3).unwrap();
        let a = canonical_arc_system(&f);
        // a copy of arc 2 pushed off on the other side of a2
        let (before, after) = f.segments_around(1, false);
        let copy = CurveWord::arc(Anchor::new(before, 5), vec![], Anchor::new(after, -5));
        let arcs = vec![copy, a.arcs[1].clone()];
        let (ok, reason) = is_arc_system(&f, &arcs);
        assert!(!ok, "{reason}");
    }

    #[test]
    fn canonical_duals_match_reference_duals() {
        for (p, b) in [(0, 2), (0, 3), (1, 1), (1, 2)] {
            let f = make_bounded_surface(p, b).unwrap();
            let a = canonical_arc_system(&f);
            let d = dual_curves_of(&f, &a.arcs);
            for (x, y) in d.iter().zip(dual_curves(&f)) {
                assert!(x.same_closed_curve(&y), "{x} vs {y}");
            }
            for (i, x) in d.iter().enumerate() {
                for (j, arc) in a.arcs.iter().enumerate() {
                    assert_eq!(geometric_intersection(&f, x, arc), usize::from(i == j));
                }
            }
        }
    }

    #[test]
    fn pants_slide_joins_holes() {
        let f = make_bounded_surface(0, 3).unwrap();
        let a = canonical_arc_system(&f);
        // arc 2 starts on the outer circle; slide that end back to arc 1
        let (b, j) = arc_slide(&f, &a, Slide { slid: 1, end: SlideEnd::Start, forward: false }).unwrap();
        assert_eq!(j, 0);
        assert!(is_arc_system(&f, &b.arcs).0);
        let new = &b.arcs[1];
        let CurveWord::Arc { start, end, .. } = new else { panic!() };
        let outer = f.component_of(1);
        assert_ne!(f.component_of(start.seg), outer);
        assert_ne!(f.component_of(end.seg), outer);
        assert_ne!(f.component_of(start.seg), f.component_of(end.seg));
    }

    #[test]
    fn slide_and_back() {
        let f = make_bounded_surface(1, 1).unwrap();
        let a = canonical_arc_system(&f);
        for slid in 0..2 {
            for end in [SlideEnd::Start, SlideEnd::End] {
                for forward in [false, true] {
                    let Ok((b, _)) = arc_slide(&f, &a, Slide { slid, end, forward }) else { continue };
                    assert!(is_arc_system(&f, &b.arcs).0);
                    // undo: the moved end is now the end anchor, slide it back
                    let back = (0..2).flat_map(|e| [(e, false), (e, true)]).any(|(e, fw)| {
                        let end = if e == 0 { SlideEnd::Start } else { SlideEnd::End };
                        arc_slide(&f, &b, Slide { slid, end, forward: fw })
                            .map(|(c, _)| same_system(&f, &c, &a))
                            .unwrap_or(false)
                    });
                    assert!(back);
                }
            }
        }
    }

    fn same_system(f: &PolygonPresentation, x: &ArcSystemData, y: &ArcSystemData) -> bool {
        let key = |s: &ArcSystemData| {
            let mut c = s.endpoint_curves();
            normalize_endpoints(f, &mut c);
            let mut v: Vec<EndpointCurve> = c.iter().map(|e| std::cmp::min(e.clone(), e.reversed())).collect();
            v.sort();
            v
        };
        key(x) == key(y)
    }
}
