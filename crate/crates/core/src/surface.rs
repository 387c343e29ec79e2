//! Bounded surfaces as glued polygons, and their doubles.
//!
//! A surface `F` of genus `p` with `b` boundary circles is cut along
//! `m = 2p + b - 1` reference arcs into a single `4m`-gon. The polygon edges,
//! read counterclockwise, alternate between arc copies `a_i^+`, `a_i^-` and
//! boundary segments. Gluing `a_i^+` to `a_i^-` reverses their counterclockwise
//! coordinates.

use serde::{Deserialize, Serialize};

use crate::curves::Letter;
use crate::error::{Error, Result};

/// One edge of the cut-open polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Edge {
    /// A copy of reference arc `arc`; `plus` picks `a^+` or `a^-`.
    Arc { arc: usize, plus: bool },
    /// A boundary segment.
    Seg(usize),
}

/// Genus and boundary count of a bounded surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: usize,
    pub boundary_count: usize,
}

impl SurfaceSpec {
    pub fn new(genus: usize, boundary_count: usize) -> Result<Self> {
        if boundary_count == 0 {
            return Err(Error::Surface("at least one boundary circle is required".into()));
        }
        if 2 * genus + boundary_count < 2 {
            return Err(Error::Surface("the disk has no arc system".into()));
        }
        Ok(SurfaceSpec { genus, boundary_count })
    }

    /// Number of arcs in an arc system.
    pub fn arc_count(&self) -> usize {
        2 * self.genus + self.boundary_count - 1
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

/// A validated polygon presentation with its derived boundary structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonPresentation {
    spec: SurfaceSpec,
    word: Vec<Edge>,
    arc_pos: Vec<[usize; 2]>,
    seg_pos: Vec<usize>,
    seg_next: Vec<usize>,
    seg_prev: Vec<usize>,
    seg_comp: Vec<usize>,
    components: Vec<Vec<usize>>,
}

/// Canonical presentation of the surface with genus `p` and `b` boundary circles.
///
/// Handles come first as `a+ s b+ s a- s b- s`, then one `c+ s c- s` block per
/// extra boundary circle.
pub fn make_bounded_surface(p: usize, b: usize) -> Result<PolygonPresentation> {
    let spec = SurfaceSpec::new(p, b)?;
    let mut word = Vec::with_capacity(4 * spec.arc_count());
    let mut seg = 0;
    let mut push_seg = |word: &mut Vec<Edge>| {
        word.push(Edge::Seg(seg));
        seg += 1;
    };
    for k in 0..p {
        let (a, b2) = (2 * k, 2 * k + 1);
        for e in [(a, true), (b2, true), (a, false), (b2, false)] {
            word.push(Edge::Arc { arc: e.0, plus: e.1 });
            push_seg(&mut word);
        }
    }
    for h in 0..b - 1 {
        let c = 2 * p + h;
        for plus in [true, false] {
            word.push(Edge::Arc { arc: c, plus });
            push_seg(&mut word);
        }
    }
    PolygonPresentation::from_word(word)
}

impl PolygonPresentation {
    /// Validates an arbitrary boundary word and derives genus and boundary count.
    pub fn from_word(word: Vec<Edge>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n % 4 != 0 {
            return Err(Error::Surface(format!("word length {n} is not a positive multiple of 4")));
        }
        let m = n / 4;
        let mut arc_pos = vec![[usize::MAX; 2]; m];
        let mut seg_pos = vec![usize::MAX; 2 * m];
        for (i, e) in word.iter().enumerate() {
            let next_is_arc = matches!(word[(i + 1) % n], Edge::Arc { .. });
            match *e {
                Edge::Arc { arc, plus } => {
                    if arc >= m {
                        return Err(Error::Surface(format!("arc a{} out of range", arc + 1)));
                    }
                    let slot = &mut arc_pos[arc][usize::from(!plus)];
                    if *slot != usize::MAX {
                        return Err(Error::Surface(format!("arc copy of a{} repeated", arc + 1)));
                    }
                    *slot = i;
                    if next_is_arc {
                        return Err(Error::Surface("arc and segment edges must alternate".into()));
                    }
                }
                Edge::Seg(s) => {
                    if s >= 2 * m {
                        return Err(Error::Surface(format!("segment s{} out of range", s + 1)));
                    }
                    if seg_pos[s] != usize::MAX {
                        return Err(Error::Surface(format!("segment s{} repeated", s + 1)));
                    }
                    seg_pos[s] = i;
                    if !next_is_arc {
                        return Err(Error::Surface("arc and segment edges must alternate".into()));
                    }
                }
            }
        }
        if arc_pos.iter().any(|p| p[0] == usize::MAX || p[1] == usize::MAX) {
            return Err(Error::Surface("every arc needs both copies".into()));
        }
        // Boundary trace: after segment s comes the edge E; continue after the partner of E.
        let mut seg_next = vec![0; 2 * m];
        for s in 0..2 * m {
            let e = (seg_pos[s] + 1) % n;
            let Edge::Arc { arc, plus } = word[e] else { unreachable!() };
            let partner = arc_pos[arc][usize::from(plus)];
            let Edge::Seg(t) = word[(partner + 1) % n] else { unreachable!() };
            seg_next[s] = t;
        }
        let mut seg_prev = vec![0; 2 * m];
        for s in 0..2 * m {
            seg_prev[seg_next[s]] = s;
        }
        let mut seg_comp = vec![usize::MAX; 2 * m];
        let mut components = Vec::new();
        for s in 0..2 * m {
            if seg_comp[s] != usize::MAX {
                continue;
            }
            let mut cyc = Vec::new();
            let mut t = s;
            while seg_comp[t] == usize::MAX {
                seg_comp[t] = components.len();
                cyc.push(t);
                t = seg_next[t];
            }
            components.push(cyc);
        }
        let b = components.len();
        if (m + 1) < b || (m + 1 - b) % 2 != 0 {
            return Err(Error::Surface("boundary trace is inconsistent with an orientable surface".into()));
        }
        let spec = SurfaceSpec { genus: (m + 1 - b) / 2, boundary_count: b };
        Ok(PolygonPresentation { spec, word, arc_pos, seg_pos, seg_next, seg_prev, seg_comp, components })
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn arc_count(&self) -> usize {
        self.arc_pos.len()
    }

    pub fn segment_count(&self) -> usize {
        self.seg_pos.len()
    }

    /// Number of polygon edges, `4m`.
    pub fn edge_count(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[Edge] {
        &self.word
    }

    pub fn edge(&self, pos: usize) -> Edge {
        self.word[pos]
    }

    pub fn arc_position(&self, arc: usize, plus: bool) -> usize {
        self.arc_pos[arc][usize::from(!plus)]
    }

    pub fn segment_position(&self, s: usize) -> usize {
        self.seg_pos[s]
    }

    /// Polygon position of the copy glued to the arc edge at `pos`.
    pub fn partner(&self, pos: usize) -> usize {
        match self.word[pos] {
            Edge::Arc { arc, plus } => self.arc_position(arc, !plus),
            Edge::Seg(_) => panic!("segments have no partner"),
        }
    }

    /// The segment following `s` along its boundary circle.
    pub fn next_segment(&self, s: usize) -> usize {
        self.seg_next[s]
    }

    pub fn prev_segment(&self, s: usize) -> usize {
        self.seg_prev[s]
    }

    pub fn component_of(&self, s: usize) -> usize {
        self.seg_comp[s]
    }

    /// Boundary circles as cyclic lists of segments in traversal order.
    pub fn boundary_components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Letter gained when an endpoint at the end of `s` moves across the
    /// vertex onto the start of the next segment.
    pub fn forward_vertex_letter(&self, s: usize) -> Letter {
        let e = (self.seg_pos[s] + 1) % self.word.len();
        let Edge::Arc { arc, plus } = self.word[e] else { unreachable!() };
        Letter::new(arc, !plus)
    }

    /// Letter gained when an endpoint at the start of `s` moves back onto
    /// the end of the previous segment.
    pub fn backward_vertex_letter(&self, s: usize) -> Letter {
        let prev = self.seg_prev[s];
        let e = (self.seg_pos[prev] + 1) % self.word.len();
        let Edge::Arc { arc, plus } = self.word[e] else { unreachable!() };
        Letter::new(arc, plus)
    }

    /// Segment preceding and following the `plus` copy of `arc` in the polygon.
    pub fn segments_around(&self, arc: usize, plus: bool) -> (usize, usize) {
        let n = self.word.len();
        let p = self.arc_position(arc, plus);
        let Edge::Seg(before) = self.word[(p + n - 1) % n] else { unreachable!() };
        let Edge::Seg(after) = self.word[(p + 1) % n] else { unreachable!() };
        (before, after)
    }
}

/// The double `F ∪ F̄` glued along the boundary, which becomes the dividing set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledSurface {
    pub half: PolygonPresentation,
}

pub fn double(f: &PolygonPresentation) -> DoubledSurface {
    DoubledSurface { half: f.clone() }
}

impl DoubledSurface {
    pub fn genus(&self) -> usize {
        self.half.arc_count()
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus() as i64
    }

    pub fn dividing_circles(&self) -> usize {
        self.half.spec().boundary_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annulus_word() {
        let f = make_bounded_surface(0, 2).unwrap();
        assert_eq!(
            f.word(),
            &[
                Edge::Arc { arc: 0, plus: true },
                Edge::Seg(0),
                Edge::Arc { arc: 0, plus: false },
                Edge::Seg(1)
            ]
        );
        assert_eq!(f.boundary_components().len(), 2);
    }

    #[test]
    fn disk_rejected() {
        assert!(make_bounded_surface(0, 1).is_err());
    }

    #[test]
    fn round_trip_small_surfaces() {
        for p in 0..=4 {
            for b in 1..=9 {
                let Ok(spec) = SurfaceSpec::new(p, b) else { continue };
                if spec.arc_count() > 8 {
                    continue;
                }
                let f = make_bounded_surface(p, b).unwrap();
                assert_eq!(f.spec(), spec);
                assert_eq!(f.edge_count(), 4 * spec.arc_count());
                assert_eq!(spec.euler(), 1 - spec.arc_count() as i64);
                let again = PolygonPresentation::from_word(f.word().to_vec()).unwrap();
                assert_eq!(again, f);
                let d = double(&f);
                assert_eq!(d.genus(), spec.arc_count());
                assert_eq!(d.dividing_circles(), b);
            }
        }
    }

    #[test]
    fn three_holed_sphere_outer_boundary() {
        let f = make_bounded_surface(0, 3).unwrap();
        // holes are s1 and s3, the outer circle is s2 s4
        assert_eq!(f.next_segment(0), 0);
        assert_eq!(f.next_segment(2), 2);
        assert_eq!(f.next_segment(1), 3);
        assert_eq!(f.next_segment(3), 1);
    }

    #[test]
    fn vertex_letters_cancel() {
        let f = make_bounded_surface(1, 2).unwrap();
        for s in 0..f.segment_count() {
            let t = f.next_segment(s);
            assert_eq!(f.forward_vertex_letter(s).inverse(), f.backward_vertex_letter(t));
        }
    }

    #[test]
    fn bad_words_rejected() {
        let w = vec![Edge::Arc { arc: 0, plus: true }, Edge::Seg(0), Edge::Seg(1), Edge::Arc { arc: 0, plus: false }];
        assert!(PolygonPresentation::from_word(w).is_err());
    }
}
