//! Dehn twists by surgery on a minimal-position realization.
//!
//! A positive twist turns right: wherever `c` meets `t`, the image follows `t`
//! once around in the direction pointing to the right of `c`.

use super::{cyclic_reduce, free_reduce, CurveWord, Letter, Realization};
use crate::error::{Error, Result};
use crate::surface::PolygonPresentation;

/// Crossings of `t` along each chord of `c` (index 0 in `r`, `t` is index 1),
/// ordered from the chord's start. Each entry is `(t chord index, t crosses
/// from the right of c to its left)`.
fn crossings_along(r: &Realization) -> Vec<Vec<(usize, bool)>> {
    let mut out = Vec::with_capacity(r.chords[0].len());
    for &(p, q) in &r.chords[0] {
        let mut hits: Vec<(usize, usize, bool)> = Vec::new();
        for (l, &(a, b)) in r.chords[1].iter().enumerate() {
            if super::chords_cross((p, q), (a, b)) {
                let right_to_left = r.strictly_between(p, q, a);
                let inner = if right_to_left { a } else { b };
                hits.push((r.ccw_distance(p, inner), l, right_to_left));
            }
        }
        hits.sort();
        out.push(hits.into_iter().map(|(_, l, d)| (l, d)).collect());
    }
    out
}

fn reduce_same_kind(c: &CurveWord) -> CurveWord {
    match c {
        CurveWord::Closed(l) => CurveWord::Closed(cyclic_reduce(l)),
        CurveWord::Arc { start, letters, end } => CurveWord::Arc { start: *start, letters: free_reduce(letters), end: *end },
    }
}

/// Image of `c` under the twist about `t`, raised to `sign` (±1).
/// Arc anchors are fixed, so arcs are only freely reduced.
pub fn dehn_twist(f: &PolygonPresentation, t: &CurveWord, c: &CurveWord, sign: i32) -> Result<CurveWord> {
    let t = reduce_same_kind(t);
    let CurveWord::Closed(y) = &t else {
        return Err(Error::Word("twist curve must be closed".into()));
    };
    if y.is_empty() {
        return Err(Error::InessentialTwist);
    }
    let c = reduce_same_kind(c);
    if c.is_inessential() {
        return Ok(c);
    }
    let r = Realization::new(f, &[&c, &t]);
    let k = y.len();
    let insert = |l: usize, right_to_left: bool, out: &mut Vec<Letter>| {
        let backward = right_to_left == (sign > 0);
        if backward {
            for s in 0..k {
                out.push(y[(l + k - s) % k].inverse());
            }
        } else {
            for s in 1..=k {
                out.push(y[(l + s) % k]);
            }
        }
    };
    let along = crossings_along(&r);
    let mut out = Vec::new();
    match &c {
        CurveWord::Closed(x) => {
            for (j, hits) in along.iter().enumerate() {
                out.push(x[j]);
                for &(l, d) in hits {
                    insert(l, d, &mut out);
                }
            }
            Ok(CurveWord::Closed(cyclic_reduce(&out)))
        }
        CurveWord::Arc { start, letters, end } => {
            for (j, hits) in along.iter().enumerate() {
                for &(l, d) in hits {
                    insert(l, d, &mut out);
                }
                if j < letters.len() {
                    out.push(letters[j]);
                }
            }
            Ok(CurveWord::Arc { start: *start, letters: free_reduce(&out), end: *end })
        }
    }
}

/// Signed count of crossings, `+1` where `t` passes from the left of `c` to
/// its right. With this pairing a positive twist adds `<c,t>` copies of `t`.
pub fn algebraic_intersection(f: &PolygonPresentation, c: &CurveWord, t: &CurveWord) -> i64 {
    if c.is_inessential() || t.is_inessential() {
        return 0;
    }
    let r = Realization::new(f, &[c, t]);
    crossings_along(&r).iter().flatten().map(|&(_, rl)| if rl { -1 } else { 1 }).sum()
}
