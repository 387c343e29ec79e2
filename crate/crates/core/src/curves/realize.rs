//! Realization of several curves as chords in the cut-open polygon, and
//! geometric intersection numbers.
//!
//! Crossings along each reference arc are ordered by comparing how the strands
//! diverge when followed away from the arc, first backwards and then forwards.
//! Strands that never diverge are parallel and get a fixed tie-break. The
//! resulting drawing embeds each simple curve and draws disjoint curves
//! disjointly; it need not minimize crossings between curves that do meet, so
//! [`minimal_intersection`] counts forced crossings directly.

use std::cmp::Ordering;

use super::{Anchor, CurveWord, Letter};
use crate::surface::PolygonPresentation;

/// Where a strand leaves the polygon on the next step of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exit {
    Edge(usize),
    Anchor(Anchor),
}

/// Chords of every curve with endpoints in a global cyclic order.
#[derive(Clone, Debug)]
pub struct Realization {
    /// Total number of boundary points.
    pub n: usize,
    /// Chords per curve, in traversal order. Closed curves: chord `j` runs from
    /// the entry of letter `j` to the exit of letter `j+1`. Arcs: chord `j`
    /// precedes letter `j`, the last chord ends at the end anchor.
    pub chords: Vec<Vec<(usize, usize)>>,
    /// Points on each polygon edge.
    pub points_on_edge: Vec<usize>,
    /// Global index of the first point on each polygon edge.
    pub offset: Vec<usize>,
}

/// Whether chords `a` and `b` cross; endpoints interleave on the circle.
pub fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |p: usize, q: usize, r: usize| if p < q { p < r && r < q } else { r > p || r < q };
    let (p, q) = a;
    let (r, s) = b;
    if r == p || r == q || s == p || s == q {
        return false;
    }
    inside(p, q, r) != inside(p, q, s)
}

struct Walker<'a> {
    f: &'a PolygonPresentation,
    curves: &'a [&'a CurveWord],
}

impl Walker<'_> {
    fn exit_pos(&self, l: Letter) -> usize {
        self.f.arc_position(l.arc, l.plus)
    }

    fn entry_pos(&self, l: Letter) -> usize {
        self.f.arc_position(l.arc, !l.plus)
    }

    /// Exit on step `t >= 1` of a walk from occurrence `j` of curve `c`.
    fn step(&self, c: usize, j: usize, t: usize, forward: bool) -> Exit {
        match self.curves[c] {
            CurveWord::Closed(x) => {
                let k = x.len();
                if forward {
                    Exit::Edge(self.exit_pos(x[(j + t) % k]))
                } else {
                    Exit::Edge(self.entry_pos(x[(j + k * (t / k + 1) - t) % k]))
                }
            }
            CurveWord::Arc { start, letters, end } => {
                if forward {
                    if j + t < letters.len() {
                        Exit::Edge(self.exit_pos(letters[j + t]))
                    } else {
                        Exit::Anchor(*end)
                    }
                } else if t <= j {
                    Exit::Edge(self.entry_pos(letters[j - t]))
                } else {
                    Exit::Anchor(*start)
                }
            }
        }
    }

    fn key(&self, e: Exit, entry: usize) -> (usize, i64) {
        let n = self.f.edge_count();
        match e {
            Exit::Edge(p) => ((p + n - entry) % n, 0),
            Exit::Anchor(a) => ((self.f.segment_position(a.seg) + n - entry) % n, a.pos),
        }
    }

    /// Walks two occurrences of the same arc, both normalized to cross it in
    /// the `+` direction, until they leave through different edges. Returns
    /// whether the first strand turns right (`Less`) and the step at which the
    /// strands diverge, or `None` if they never do.
    fn compare_walk(&self, x: Occ, y: Occ, entry: usize, backward: bool) -> Option<(Ordering, usize)> {
        let limit = self.curves[x.0].letters().len() + self.curves[y.0].letters().len() + 2;
        let mut e = entry;
        for t in 1..=limit {
            // a normalized occurrence walks along the curve iff its sign agrees with the walk
            let ex = self.step(x.0, x.1, t, x.2 != backward);
            let ey = self.step(y.0, y.1, t, y.2 != backward);
            if let (Exit::Edge(p), Exit::Edge(q)) = (ex, ey) {
                if p == q {
                    e = self.f.partner(p);
                    continue;
                }
            }
            if ex == ey {
                return None;
            }
            return Some((self.key(ex, e).cmp(&self.key(ey, e)), t));
        }
        None
    }

    /// Orders along `a_i^+` as seen from the backward side, then the forward side.
    fn both_sides(&self, x: Occ, y: Occ, plus_pos: usize, minus_pos: usize) -> (Option<(Ordering, usize)>, Option<(Ordering, usize)>) {
        // backward: turning right means coming later along a_i^+
        let back = self.compare_walk(x, y, plus_pos, true).map(|(o, t)| (o.reverse(), t));
        let fwd = self.compare_walk(x, y, minus_pos, false);
        (back, fwd)
    }

    fn order(&self, x: Occ, y: Occ, plus_pos: usize, minus_pos: usize) -> Ordering {
        let ord = match self.both_sides(x, y, plus_pos, minus_pos) {
            (Some((o, _)), _) | (None, Some((o, _))) => o,
            (None, None) => Ordering::Equal,
        };
        if ord != Ordering::Equal {
            return ord;
        }
        // parallel strands
        if x.0 != y.0 {
            let (lo, first) = if x.0 < y.0 { (x, Ordering::Less) } else { (y, Ordering::Greater) };
            if lo.2 {
                first
            } else {
                first.reverse()
            }
        } else {
            x.1.cmp(&y.1)
        }
    }
}

/// Occurrence of a letter: curve, index in its word, sign.
type Occ = (usize, usize, bool);

/// Merge sort that tolerates a comparator that is not a strict total order.
fn merge_sort_by<T: Copy>(v: &mut [T], cmp: &mut impl FnMut(&T, &T) -> Ordering) {
    if v.len() <= 1 {
        return;
    }
    let mid = v.len() / 2;
    merge_sort_by(&mut v[..mid], cmp);
    merge_sort_by(&mut v[mid..], cmp);
    let mut out = Vec::with_capacity(v.len());
    let (mut i, mut j) = (0, mid);
    while i < mid && j < v.len() {
        if cmp(&v[j], &v[i]) == Ordering::Less {
            out.push(v[j]);
            j += 1;
        } else {
            out.push(v[i]);
            i += 1;
        }
    }
    out.extend_from_slice(&v[i..mid]);
    out.extend_from_slice(&v[j..]);
    v.copy_from_slice(&out);
}

/// Endpoint of a chord at the level of polygon edges: edge position plus the
/// anchor position for endpoints on a boundary segment.
type Coarse = (usize, i64);

fn coarse_chords(w: &Walker, c: usize) -> Vec<(Coarse, Coarse, bool, bool)> {
    let f = w.f;
    let arc = |l: Letter, exit: bool| (f.arc_position(l.arc, if exit { l.plus } else { !l.plus }), 0);
    let anchor = |a: Anchor| (f.segment_position(a.seg), a.pos);
    // (from, to, from is on an arc edge, to is on an arc edge)
    match w.curves[c] {
        CurveWord::Closed(x) => {
            let k = x.len();
            (0..k).map(|j| (arc(x[j], false), arc(x[(j + 1) % k], true), true, true)).collect()
        }
        CurveWord::Arc { start, letters, end } => {
            let l = letters.len();
            (0..=l)
                .map(|j| {
                    let from = if j == 0 { anchor(*start) } else { arc(letters[j - 1], false) };
                    let to = if j == l { anchor(*end) } else { arc(letters[j], true) };
                    (from, to, j > 0, j < l)
                })
                .collect()
        }
    }
}

fn coarse_cross<T: Ord + Copy>(a: (T, T), b: (T, T)) -> bool {
    let inside = |p: T, q: T, r: T| if p < q { p < r && r < q } else { r > p || r < q };
    let (p, q) = a;
    let (r, s) = b;
    if r == p || r == q || s == p || s == q {
        return false;
    }
    inside(p, q, r) != inside(p, q, s)
}

/// Geometric intersection number of two curves, counted without building a
/// minimal drawing.
///
/// Chords that share no reference-arc edge cross exactly when their edges
/// interleave. Strands running side by side across one or more arcs form a
/// common stretch; such a stretch forces one crossing when the strands leave
/// it on opposite sides at its two ends, and is counted once, at its last arc
/// along the first curve.
pub fn minimal_intersection(f: &PolygonPresentation, a: &CurveWord, b: &CurveWord) -> usize {
    if a.is_inessential() || b.is_inessential() {
        return 0;
    }
    let curves = [a, b];
    let w = Walker { f, curves: &curves };
    let ca = coarse_chords(&w, 0);
    let cb = coarse_chords(&w, 1);
    let mut count = 0;
    for &(p, q, pa, qa) in &ca {
        for &(r, s, ra, sa) in &cb {
            let shared = |u: Coarse, ua: bool| ua && ((u == r && ra) || (u == s && sa));
            if shared(p, pa) || shared(q, qa) {
                continue;
            }
            if coarse_cross((p, q), (r, s)) {
                count += 1;
            }
        }
    }
    for i in 0..f.arc_count() {
        let plus_pos = f.arc_position(i, true);
        let minus_pos = f.arc_position(i, false);
        let occ = |c: usize| -> Vec<Occ> {
            curves[c].letters().iter().enumerate().filter(|(_, l)| l.arc == i).map(|(j, l)| (c, j, l.plus)).collect()
        };
        for &x in &occ(0) {
            for &y in &occ(1) {
                let (Some((ob, tb)), Some((of, tf))) = w.both_sides(x, y, plus_pos, minus_pos) else {
                    continue;
                };
                let last = if x.2 { tf == 1 } else { tb == 1 };
                if ob != of && last {
                    count += 1;
                }
            }
        }
    }
    count
}

impl Realization {
    pub fn new(f: &PolygonPresentation, curves: &[&CurveWord]) -> Realization {
        let m = f.arc_count();
        let n_edges = f.edge_count();
        let walker = Walker { f, curves };

        // occurrences per arc: (curve, index, sign)
        let mut occ: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); m];
        for (c, cw) in curves.iter().enumerate() {
            for (j, l) in cw.letters().iter().enumerate() {
                occ[l.arc].push((c, j, l.plus));
            }
        }
        let mut rank_on_plus: Vec<Vec<usize>> = curves.iter().map(|c| vec![0; c.letters().len()]).collect();
        for (i, list) in occ.iter_mut().enumerate() {
            let plus_pos = f.arc_position(i, true);
            let minus_pos = f.arc_position(i, false);
            merge_sort_by(list, &mut |&x, &y| walker.order(x, y, plus_pos, minus_pos));
            for (r, &(c, j, _)) in list.iter().enumerate() {
                rank_on_plus[c][j] = r;
            }
        }

        // points per edge and global offsets
        let mut points_on_edge = vec![0usize; n_edges];
        for (i, list) in occ.iter().enumerate() {
            points_on_edge[f.arc_position(i, true)] = list.len();
            points_on_edge[f.arc_position(i, false)] = list.len();
        }
        let mut seg_anchors: Vec<Vec<(i64, usize, bool)>> = vec![Vec::new(); f.segment_count()];
        for (c, cw) in curves.iter().enumerate() {
            if let CurveWord::Arc { start, end, .. } = cw {
                seg_anchors[start.seg].push((start.pos, c, false));
                seg_anchors[end.seg].push((end.pos, c, true));
            }
        }
        for (s, list) in seg_anchors.iter_mut().enumerate() {
            list.sort();
            points_on_edge[f.segment_position(s)] = list.len();
        }
        let mut offset = vec![0usize; n_edges];
        let mut acc = 0;
        for e in 0..n_edges {
            offset[e] = acc;
            acc += points_on_edge[e];
        }
        let n = acc;

        let point = |l: Letter, c: usize, j: usize, exit: bool| -> usize {
            let copy_plus = if exit { l.plus } else { !l.plus };
            let r = rank_on_plus[c][j];
            let k = occ[l.arc].len();
            let pos = f.arc_position(l.arc, copy_plus);
            offset[pos] + if copy_plus { r } else { k - 1 - r }
        };
        let anchor_point = |c: usize, is_end: bool, a: Anchor| -> usize {
            let list = &seg_anchors[a.seg];
            let r = list.iter().position(|&(p, cc, e)| p == a.pos && cc == c && e == is_end).unwrap();
            offset[f.segment_position(a.seg)] + r
        };

        let mut chords = Vec::with_capacity(curves.len());
        for (c, cw) in curves.iter().enumerate() {
            let mut ch = Vec::new();
            match cw {
                CurveWord::Closed(x) => {
                    let k = x.len();
                    for j in 0..k {
                        ch.push((point(x[j], c, j, false), point(x[(j + 1) % k], c, (j + 1) % k, true)));
                    }
                }
                CurveWord::Arc { start, letters, end } => {
                    let l = letters.len();
                    for j in 0..=l {
                        let from = if j == 0 { anchor_point(c, false, *start) } else { point(letters[j - 1], c, j - 1, false) };
                        let to = if j == l { anchor_point(c, true, *end) } else { point(letters[j], c, j, true) };
                        ch.push((from, to));
                    }
                }
            }
            chords.push(ch);
        }
        Realization { n, chords, points_on_edge, offset }
    }

    /// Number of crossing chord pairs between curves `a` and `b`.
    pub fn crossings_between(&self, a: usize, b: usize) -> usize {
        let mut count = 0;
        for &x in &self.chords[a] {
            for &y in &self.chords[b] {
                if chords_cross(x, y) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of crossing pairs among a curve's own chords.
    pub fn self_crossings(&self, a: usize) -> usize {
        let ch = &self.chords[a];
        let mut count = 0;
        for i in 0..ch.len() {
            for j in i + 1..ch.len() {
                if chords_cross(ch[i], ch[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Counterclockwise distance from `p` to `q` on the boundary circle.
    pub fn ccw_distance(&self, p: usize, q: usize) -> usize {
        (q + self.n - p) % self.n
    }

    /// Whether `r` lies strictly inside the counterclockwise interval `(p, q)`.
    pub fn strictly_between(&self, p: usize, q: usize, r: usize) -> bool {
        r != p && r != q && self.ccw_distance(p, r) < self.ccw_distance(p, q)
    }
}
