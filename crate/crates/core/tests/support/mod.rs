//! Brute-force reference implementations used by the integration tests.
//! Nothing here calls the library's realization or twist code.

#![allow(dead_code)]

use ccgraph::curves::{CurveWord, Letter};
use ccgraph::surface::PolygonPresentation;

/// Chord endpoints are encoded as `edge * STRIDE + rank`.
const STRIDE: usize = 1000;

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |p: usize, q: usize, r: usize| if p < q { p < r && r < q } else { r > p || r < q };
    if [b.0, b.1].iter().any(|&x| x == a.0 || x == a.1) {
        return false;
    }
    inside(a.0, a.1, b.0) != inside(a.0, a.1, b.1)
}

fn reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &x in w {
        if out.last().map_or(false, |l| l.arc == x.arc && l.plus != x.plus) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    while out.len() >= 2 {
        let (a, b) = (out[0], out[out.len() - 1]);
        if a.arc == b.arc && a.plus != b.plus {
            out.remove(0);
            out.pop();
        } else {
            break;
        }
    }
    out
}

/// All rotations of the word and its inverse; the least one names the curve.
pub fn cyclic_name(w: &[Letter]) -> Vec<(usize, bool)> {
    let inv: Vec<Letter> = w.iter().rev().map(|l| Letter::new(l.arc, !l.plus)).collect();
    let mut best: Option<Vec<(usize, bool)>> = None;
    for v in [w.to_vec(), inv] {
        for r in 0..v.len().max(1) {
            let rot: Vec<(usize, bool)> = v[r..].iter().chain(&v[..r]).map(|l| (l.arc, l.plus)).collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Positions, per arc, of a curve's crossings in a given placement.
/// `order[i]` lists (curve, letter index) along `a_i^+` counterclockwise.
fn chords(f: &PolygonPresentation, words: &[&[Letter]], order: &[Vec<(usize, usize)>]) -> Vec<Vec<(usize, usize)>> {
    let mut rank = vec![Vec::new(); words.len()];
    for (c, w) in words.iter().enumerate() {
        rank[c] = vec![0usize; w.len()];
    }
    for list in order {
        for (r, &(c, j)) in list.iter().enumerate() {
            rank[c][j] = r;
        }
    }
    let pt = |c: usize, j: usize, exit: bool| {
        let l = words[c][j];
        let copy_plus = if exit { l.plus } else { !l.plus };
        let k = order[l.arc].len();
        let r = if copy_plus { rank[c][j] } else { k - 1 - rank[c][j] };
        f.arc_position(l.arc, copy_plus) * STRIDE + r
    };
    words
        .iter()
        .enumerate()
        .map(|(c, w)| (0..w.len()).map(|j| (pt(c, j, false), pt(c, (j + 1) % w.len(), true))).collect())
        .collect()
}

fn count_cross(a: &[(usize, usize)], b: &[(usize, usize)]) -> usize {
    a.iter().map(|&x| b.iter().filter(|&&y| crosses(x, y)).count()).sum()
}

fn self_cross(a: &[(usize, usize)]) -> usize {
    let mut n = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if crosses(a[i], a[j]) {
                n += 1;
            }
        }
    }
    n
}

fn permutations(items: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::new();
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Some embedded ordering of a single curve's crossings, if one exists.
pub fn embedded_order(f: &PolygonPresentation, w: &[Letter]) -> Option<Vec<Vec<usize>>> {
    let m = f.arc_count();
    let per_arc: Vec<Vec<(usize, usize)>> =
        (0..m).map(|i| (0..w.len()).filter(|&j| w[j].arc == i).map(|j| (0, j)).collect()).collect();
    let options: Vec<Vec<Vec<(usize, usize)>>> = per_arc.iter().map(|l| permutations(l)).collect();
    for choice in product(&options) {
        let ch = chords(f, &[w], &choice);
        if self_cross(&ch[0]) == 0 {
            return Some(choice.iter().map(|l| l.iter().map(|&(_, j)| j).collect()).collect());
        }
    }
    None
}

fn interleavings(a: &[usize], b: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if a.is_empty() {
        return vec![b.iter().map(|&j| (1, j)).collect()];
    }
    if b.is_empty() {
        return vec![a.iter().map(|&j| (0, j)).collect()];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(&a[1..], b) {
        rest.insert(0, (0, a[0]));
        out.push(rest);
    }
    for mut rest in interleavings(a, &b[1..]) {
        rest.insert(0, (1, b[0]));
        out.push(rest);
    }
    out
}

/// Minimum crossing count over all placements of two simple closed curves,
/// together with one minimizing placement.
pub fn min_intersection(f: &PolygonPresentation, x: &[Letter], y: &[Letter]) -> (usize, Vec<Vec<(usize, usize)>>) {
    let ox = embedded_order(f, x).expect("x is simple");
    let oy = embedded_order(f, y).expect("y is simple");
    let options: Vec<Vec<Vec<(usize, usize)>>> =
        (0..f.arc_count()).map(|i| interleavings(&ox[i], &oy[i])).collect();
    let mut best: Option<(usize, Vec<Vec<(usize, usize)>>)> = None;
    for choice in product(&options) {
        let ch = chords(f, &[x, y], &choice);
        let n = count_cross(&ch[0], &ch[1]);
        if best.as_ref().map_or(true, |b| n < b.0) {
            best = Some((n, choice));
        }
    }
    best.unwrap()
}

/// Positive or negative twist of `c` about `t` by surgery on a placement.
pub fn twist(f: &PolygonPresentation, t: &[Letter], c: &[Letter], sign: i32) -> Vec<Letter> {
    let (_, placement) = min_intersection(f, c, t);
    let ch = chords(f, &[c, t], &placement);
    let k = t.len();
    let mut out = Vec::new();
    for (j, &(p, q)) in ch[0].iter().enumerate() {
        out.push(c[j]);
        let between = |r: usize| if p < q { p < r && r < q } else { r > p || r < q };
        let dist = |r: usize| if r >= p { r - p } else { r + 100 * STRIDE - p };
        let mut hits: Vec<(usize, usize, bool)> = Vec::new();
        for (l, &(a, b)) in ch[1].iter().enumerate() {
            if crosses((p, q), (a, b)) {
                let rl = between(a);
                hits.push((dist(if rl { a } else { b }), l, rl));
            }
        }
        hits.sort();
        for (_, l, rl) in hits {
            if rl == (sign > 0) {
                for s in 0..k {
                    let y = t[(l + k - s) % k];
                    out.push(Letter::new(y.arc, !y.plus));
                }
            } else {
                for s in 1..=k {
                    out.push(t[(l + s) % k]);
                }
            }
        }
    }
    reduce(&out)
}

/// Cyclically reduced words up to rotation and inversion, length 1..=max.
pub fn cyclic_words(m: usize, max: usize) -> Vec<Vec<Letter>> {
    let letters: Vec<Letter> = (0..m).flat_map(|i| [Letter::new(i, true), Letter::new(i, false)]).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last().map_or(false, |x| x.arc == l.arc && x.plus != l.plus) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        for w in &next {
            if reduce(w).len() == w.len() && seen.insert(cyclic_name(w)) {
                out.push(w.clone());
            }
        }
        frontier = next;
    }
    out
}

/// The simple closed curves among `cyclic_words`.
pub fn simple_curves(f: &PolygonPresentation, max: usize) -> Vec<CurveWord> {
    cyclic_words(f.arc_count(), max)
        .into_iter()
        .filter(|w| embedded_order(f, w).is_some())
        .map(CurveWord::Closed)
        .collect()
}
