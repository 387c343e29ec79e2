//! Curves and arcs in cutting-sequence coordinates.
//!
//! A curve is recorded by the ordered list of reference arcs it crosses. The
//! letter `(i, +)` leaves the polygon through `a_i^+` and re-enters through
//! `a_i^-`. Arcs additionally carry two anchors on boundary segments.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::PolygonPresentation;

mod arcs;
mod realize;
mod twist;

pub use arcs::{
    arc_slide, canonical_arc_system, dual_curves_of, is_arc_system, normalize_endpoints, slide_curves, ArcSystemData,
    EndpointCurve, Slide, SlideEnd,
};
pub(crate) use arcs::renumber_positions;
pub use realize::{chords_cross, minimal_intersection, Realization};
pub use twist::{algebraic_intersection, dehn_twist};

/// One crossing with a reference arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub arc: usize,
    pub plus: bool,
}

impl Letter {
    pub fn new(arc: usize, plus: bool) -> Self {
        Letter { arc, plus }
    }

    pub fn inverse(self) -> Self {
        Letter { arc: self.arc, plus: !self.plus }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a{}", if self.plus { '+' } else { '-' }, self.arc + 1)
    }
}

/// Position of an arc endpoint: a boundary segment and an order index along it.
/// Indices increase counterclockwise along the polygon edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Anchor {
    pub seg: usize,
    pub pos: i64,
}

impl Anchor {
    pub fn new(seg: usize, pos: i64) -> Self {
        Anchor { seg, pos }
    }
}

/// A closed curve (cyclic word) or a properly embedded arc (linear word).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveWord {
    Closed(Vec<Letter>),
    Arc { start: Anchor, letters: Vec<Letter>, end: Anchor },
}

impl CurveWord {
    pub fn closed(letters: Vec<Letter>) -> Self {
        CurveWord::Closed(letters)
    }

    pub fn arc(start: Anchor, letters: Vec<Letter>, end: Anchor) -> Self {
        CurveWord::Arc { start, letters, end }
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            CurveWord::Closed(l) => l,
            CurveWord::Arc { letters, .. } => letters,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, CurveWord::Closed(_))
    }

    /// Closed curves that reduce to the empty word bound a disk.
    pub fn is_inessential(&self) -> bool {
        matches!(self, CurveWord::Closed(l) if l.is_empty())
    }

    /// Same curve traversed backwards.
    pub fn reversed(&self) -> CurveWord {
        match self {
            CurveWord::Closed(l) => CurveWord::Closed(invert_word(l)),
            CurveWord::Arc { start, letters, end } => {
                CurveWord::Arc { start: *end, letters: invert_word(letters), end: *start }
            }
        }
    }

    /// Checks letters and anchors against a presentation.
    pub fn check(&self, f: &PolygonPresentation) -> Result<()> {
        for l in self.letters() {
            if l.arc >= f.arc_count() {
                return Err(Error::Word(format!("letter a{} does not exist on a surface with {} arcs", l.arc + 1, f.arc_count())));
            }
        }
        if let CurveWord::Arc { start, end, .. } = self {
            for a in [start, end] {
                if a.seg >= f.segment_count() {
                    return Err(Error::Word(format!("segment s{} does not exist", a.seg + 1)));
                }
            }
            if start == end {
                return Err(Error::Word("arc endpoints coincide".into()));
            }
        }
        Ok(())
    }

    /// Free reduction; closed words are reduced cyclically, arcs also lose
    /// endpoint backtracks.
    pub fn reduce(&self, f: &PolygonPresentation) -> CurveWord {
        match self {
            CurveWord::Closed(l) => CurveWord::Closed(cyclic_reduce(l)),
            CurveWord::Arc { .. } => {
                let mut sys = vec![EndpointCurve::from_arc(self)];
                normalize_endpoints(f, &mut sys);
                sys.pop().unwrap().to_arc(0)
            }
        }
    }

    /// Signed count of crossings with each reference arc.
    pub fn algebraic_class(&self, m: usize) -> Result<Vec<i64>> {
        let CurveWord::Closed(l) = self else {
            return Err(Error::Word("homology class of an arc".into()));
        };
        let mut v = vec![0i64; m];
        for x in l {
            v[x.arc] += if x.plus { 1 } else { -1 };
        }
        Ok(v)
    }

    /// Orientation- and rotation-independent key for closed curves.
    pub fn canonical_key(&self) -> Vec<Letter> {
        match self {
            CurveWord::Closed(l) => canonical_cyclic(&cyclic_reduce(l)),
            CurveWord::Arc { letters, .. } => letters.clone(),
        }
    }

    /// Isotopy test for closed curves (unoriented).
    pub fn same_closed_curve(&self, other: &CurveWord) -> bool {
        self.is_closed() && other.is_closed() && self.canonical_key() == other.canonical_key()
    }

    /// Number of crossings with reference arc `arc`.
    pub fn count_letter(&self, arc: usize) -> usize {
        self.letters().iter().filter(|l| l.arc == arc).count()
    }
}

impl fmt::Display for CurveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |f: &mut fmt::Formatter<'_>, l: &[Letter]| -> fmt::Result {
            for (k, x) in l.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        match self {
            CurveWord::Closed(l) => {
                write!(f, "cyc(")?;
                body(f, l)?;
                write!(f, ")")
            }
            CurveWord::Arc { start, letters, end } => {
                write!(f, "arc(s{}@{}", start.seg + 1, start.pos)?;
                for x in letters {
                    write!(f, " {x}")?;
                }
                write!(f, " s{}@{})", end.seg + 1, end.pos)
            }
        }
    }
}

/// Inverse word: reversed order, each letter inverted.
pub fn invert_word(l: &[Letter]) -> Vec<Letter> {
    l.iter().rev().map(|x| x.inverse()).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(l: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(l.len());
    for &x in l {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free reduction followed by cancellation across the seam.
pub fn cyclic_reduce(l: &[Letter]) -> Vec<Letter> {
    let w = free_reduce(l);
    let mut a = 0;
    let mut b = w.len();
    while b - a >= 2 && w[a] == w[b - 1].inverse() {
        a += 1;
        b -= 1;
    }
    w[a..b].to_vec()
}

/// Least rotation of the word or of its inverse.
pub fn canonical_cyclic(l: &[Letter]) -> Vec<Letter> {
    let inv = invert_word(l);
    let mut best: Option<Vec<Letter>> = None;
    for w in [l, &inv[..]] {
        for r in 0..w.len().max(1) {
            let rot: Vec<Letter> = w[r..].iter().chain(&w[..r]).copied().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// The dual curves `B_i = cyc(+a_i)` of the canonical reference system.
pub fn dual_curves(f: &PolygonPresentation) -> Vec<CurveWord> {
    (0..f.arc_count()).map(|i| CurveWord::Closed(vec![Letter::new(i, true)])).collect()
}

/// Minimal intersection count of two reduced curves.
pub fn geometric_intersection(f: &PolygonPresentation, c1: &CurveWord, c2: &CurveWord) -> usize {
    minimal_intersection(f, c1, c2)
}
