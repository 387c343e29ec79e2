//! L-invariant accounting, the two large-L example families with their lower
//! bound checkers, and homological reports on the Weinstein domain of a
//! Lefschetz fibration.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::curves::{
    canonical_arc_system, cyclic_reduce, dual_curves, dual_curves_of, geometric_intersection, Anchor, CurveWord,
    EndpointCurve, Letter, SlideEnd,
};
use crate::cutgraph::{
    all_slides, apply_edge, apply_slide, apply_twist, double_arc_system, find_single_move, push_slides, CCEdge, CCPath,
    CcsKey, ContactCutSystem, Side, SlideMove,
};
use crate::error::{Error, Result};
use crate::lefschetz::{check_edges, in_set, path_to_lf, LefschetzFibration, MonodromyWord, MultisectionDiagram};
use crate::surface::{double, make_bounded_surface, DoubledSurface, PolygonPresentation};

/// Number of type-0 edges.
pub fn count_n0(p: &CCPath) -> usize {
    p.n0()
}

/// Vanishing cycles encoded by a diagram, read as in [`path_to_lf`].
pub fn diagram_cycles(d: &MultisectionDiagram) -> Result<Vec<(CurveWord, i32)>> {
    let f = &d.sigma.half;
    let mut psi = MonodromyWord::identity();
    let mut out = Vec::with_capacity(d.twists.len());
    for (side, t, s) in &d.twists {
        let v = match side {
            Side::Plus => t.reduce(f),
            Side::Minus => psi.apply(f, t)?,
        };
        psi.factors.push((v.clone(), *s));
        out.push((v, *s));
    }
    Ok(out)
}

/// The diagram traced by a path without type-0 edges.
pub fn diagram_of_l0_path(sigma: &DoubledSurface, p: &CCPath) -> Result<MultisectionDiagram> {
    check_edges(sigma, p)?;
    let mut twists = Vec::with_capacity(p.edges.len());
    for (i, e) in p.edges.iter().enumerate() {
        match e {
            CCEdge::Type1 { side, twist, sign } => twists.push((*side, twist.clone(), *sign)),
            CCEdge::Type0 { .. } => return Err(Error::Path { index: i, reason: "type-0 edge in an L = 0 path".into() }),
        }
    }
    Ok(MultisectionDiagram { sigma: sigma.clone(), systems: p.vertices.clone(), twists })
}

/// Result of [`exhaustive_l`]: the minimum and a path attaining it.
#[derive(Clone, Debug)]
pub struct LSearch {
    pub value: usize,
    pub certificate: CCPath,
    pub explored: usize,
}

#[derive(Clone)]
enum Step {
    Slide(SlideMove),
    Twist(Side, CurveWord, i32),
}

struct Node {
    sys: ContactCutSystem,
    stage: usize,
    run: Option<usize>,
    parent: Option<(usize, Step)>,
}

type StateKey = (usize, CcsKey, Option<EndpointCurve>);

/// Exact minimum of N₀ over paths from the diagram's first system realizing
/// its vanishing cycles, by a Dijkstra search whose cost is the number of
/// contact handleslides. A slide continuing the previous slide's moved end is
/// free. More than `budget` settled states is an error.
pub fn exhaustive_l(d: &MultisectionDiagram, budget: usize) -> Result<LSearch> {
    d.check()?;
    let sigma = &d.sigma;
    let f = &sigma.half;
    let targets = diagram_cycles(d)?;
    let n = targets.len();
    let psis: Vec<MonodromyWord> = (0..=n).map(|k| MonodromyWord { factors: targets[..k].to_vec() }).collect();

    let key_of = |node: &Node| -> StateKey {
        (node.stage, node.sys.key(f), node.run.map(|k| node.sys.curves[k].clone()))
    };
    let mut nodes = vec![Node { sys: d.systems[0].clone(), stage: 0, run: None, parent: None }];
    let mut best: HashMap<StateKey, (usize, usize)> = HashMap::new();
    best.insert(key_of(&nodes[0]), (0, 0));
    let mut heap = BinaryHeap::from([Reverse((0usize, 0usize, 0usize))]);
    let mut settled = 0usize;

    while let Some(Reverse((cost, steps, id))) = heap.pop() {
        let key = key_of(&nodes[id]);
        if best.get(&key).is_some_and(|&b| b < (cost, steps)) {
            continue;
        }
        settled += 1;
        if settled > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        let stage = nodes[id].stage;
        if stage == n {
            let certificate = rebuild(sigma, &d.systems[0], &nodes, id)?;
            return Ok(LSearch { value: cost, certificate, explored: settled });
        }
        let sys = nodes[id].sys.clone();
        let run = nodes[id].run;
        let mut children: Vec<(usize, Node)> = Vec::new();
        for slide in all_slides(&sys) {
            let free = run == Some(slide.slid) && slide.end == SlideEnd::End;
            if let Ok((x, over)) = apply_slide(sigma, &sys, slide) {
                let step = Step::Slide(SlideMove { slide, over });
                children.push((usize::from(!free), Node { sys: x, stage, run: Some(slide.slid), parent: Some((id, step)) }));
            }
        }
        let (target, sign) = &targets[stage];
        for side in [Side::Plus, Side::Minus] {
            for t in dual_curves_of(f, &sys.side(side).arcs) {
                let v = match side {
                    Side::Plus => t.reduce(f),
                    Side::Minus => psis[stage].apply(f, &t)?,
                };
                if !v.same_closed_curve(target) {
                    continue;
                }
                let x = apply_twist(sigma, &sys, side, &t, *sign)?;
                let step = Step::Twist(side, t, *sign);
                children.push((0, Node { sys: x, stage: stage + 1, run: None, parent: Some((id, step)) }));
            }
        }
        for (dc, child) in children {
            let k = key_of(&child);
            let cand = (cost + dc, steps + 1);
            if best.get(&k).map_or(true, |&b| cand < b) {
                best.insert(k, cand);
                nodes.push(child);
                heap.push(Reverse((cand.0, cand.1, nodes.len() - 1)));
            }
        }
    }
    Err(Error::Precondition("the diagram's cycles cannot be realized from its first system".into()))
}

fn rebuild(sigma: &DoubledSurface, start: &ContactCutSystem, nodes: &[Node], goal: usize) -> Result<CCPath> {
    let mut steps = Vec::new();
    let mut at = goal;
    while let Some((p, step)) = &nodes[at].parent {
        steps.push(step.clone());
        at = *p;
    }
    steps.reverse();
    let mut path = CCPath::trivial(start.clone());
    let mut pending: Vec<SlideMove> = Vec::new();
    for step in steps {
        match step {
            Step::Slide(m) => pending.push(m),
            Step::Twist(side, twist, sign) => {
                push_slides(sigma, &mut path, &pending)?;
                pending.clear();
                let e = CCEdge::Type1 { side, twist, sign };
                let next = apply_edge(sigma, path.last(), &e)?;
                path.push(e, next);
            }
        }
    }
    push_slides(sigma, &mut path, &pending)?;
    Ok(path)
}

/// A fibration together with the path constructed for it.
#[derive(Clone, Debug)]
pub struct Family {
    pub n: usize,
    pub sigma: DoubledSurface,
    pub lf: LefschetzFibration,
    pub path: CCPath,
}

/// Closed curve parallel to boundary circle `comp`.
pub fn boundary_curve(f: &PolygonPresentation, comp: usize) -> CurveWord {
    let letters: Vec<Letter> = f.boundary_components()[comp].iter().map(|&s| f.forward_vertex_letter(s).inverse()).collect();
    CurveWord::Closed(cyclic_reduce(&letters))
}

/// Boundary circle around the `h`-th hole (0-based) of a planar surface.
fn hole(f: &PolygonPresentation, h: usize) -> usize {
    f.component_of(2 * h)
}

fn outer(f: &PolygonPresentation) -> usize {
    let holes: Vec<usize> = (0..f.arc_count()).map(|h| hole(f, h)).collect();
    (0..f.boundary_components().len()).find(|c| !holes.contains(c)).expect("planar surface has an outer circle")
}

fn endpoint_components(f: &PolygonPresentation, c: &EndpointCurve) -> [usize; 2] {
    let mut v = [f.component_of(c.start.seg), f.component_of(c.end.seg)];
    v.sort();
    v
}

fn plus_twist(sigma: &DoubledSurface, path: &mut CCPath, v: &CurveWord) -> Result<()> {
    let f = &sigma.half;
    let t = dual_curves_of(f, &path.last().side(Side::Plus).arcs)
        .into_iter()
        .find(|t| t.same_closed_curve(v))
        .ok_or_else(|| Error::Precondition(format!("{v} is not dual to the current system")))?;
    let e = CCEdge::Type1 { side: Side::Plus, twist: t, sign: 1 };
    let next = apply_edge(sigma, path.last(), &e)?;
    path.push(e, next);
    Ok(())
}

/// One contact handleslide of curve `k` making it join circles `want`.
fn slide_to(sigma: &DoubledSurface, path: &mut CCPath, k: usize, mut want: [usize; 2]) -> Result<()> {
    let f = &sigma.half;
    want.sort();
    let accept = |c: &ContactCutSystem| endpoint_components(f, &c.curves[k]) == want;
    let (slides, _) = find_single_move(sigma, path.last(), Some(&[k]), &accept, 10_000)
        .ok_or_else(|| Error::Precondition(format!("no handleslide of curve {} reaches circles {want:?}", k + 1)))?;
    push_slides(sigma, path, &slides)
}

/// Convex curve around holes `2i` and `2i + 1` of the family-1 fiber.
pub fn family1_enclosing(i: usize) -> CurveWord {
    CurveWord::Closed(vec![Letter::new(2 * i, true), Letter::new(2 * i + 1, true)])
}

fn family1_cycles(f: &PolygonPresentation, n: usize) -> Vec<CurveWord> {
    let b = dual_curves(f);
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        out.push(b[2 * i].clone());
        out.push(b[2 * i + 1].clone());
    }
    out.extend((0..n).map(family1_enclosing));
    out
}

/// First example family on the planar surface with `2n + 1` boundary circles:
/// cycles parallel to each hole and one curve around each consecutive pair.
/// The path twists about the hole curves, makes one handleslide per pair so
/// that an arc joins the two holes, then twists about the pair curves.
pub fn family1(n: usize) -> Result<Family> {
    if n == 0 {
        return Err(Error::Precondition("family 1 needs n ≥ 1".into()));
    }
    let f = make_bounded_surface(0, 2 * n + 1)?;
    let sigma = double(&f);
    let cycles = family1_cycles(&f, n);
    let mut path = CCPath::trivial(double_arc_system(&canonical_arc_system(&f)));
    for c in &cycles[..2 * n] {
        plus_twist(&sigma, &mut path, c)?;
    }
    for i in 0..n {
        slide_to(&sigma, &mut path, 2 * i, [hole(&f, 2 * i), hole(&f, 2 * i + 1)])?;
    }
    for c in &cycles[2 * n..] {
        plus_twist(&sigma, &mut path, c)?;
    }
    let lf = path_to_lf(&sigma, &path)?;
    Ok(Family { n, sigma, lf, path })
}

/// Second example family on the planar surface with `n + 1` boundary
/// circles: one cycle parallel to each boundary circle. The handleslides
/// chain the holes together so that a single arc reaches the outer circle.
pub fn family2(n: usize) -> Result<Family> {
    if n < 2 {
        return Err(Error::Precondition("family 2 needs n ≥ 2".into()));
    }
    let f = make_bounded_surface(0, n + 1)?;
    let sigma = double(&f);
    let mut path = CCPath::trivial(double_arc_system(&canonical_arc_system(&f)));
    for b in dual_curves(&f) {
        plus_twist(&sigma, &mut path, &b)?;
    }
    for j in (1..n).rev() {
        slide_to(&sigma, &mut path, j, [hole(&f, j), hole(&f, j - 1)])?;
    }
    plus_twist(&sigma, &mut path, &boundary_curve(&f, outer(&f)))?;
    let lf = path_to_lf(&sigma, &path)?;
    Ok(Family { n, sigma, lf, path })
}

fn same_multiset(a: &[CurveWord], b: &[CurveWord]) -> bool {
    let key = |v: &[CurveWord]| {
        let mut k: Vec<Vec<Letter>> = v.iter().map(CurveWord::canonical_key).collect();
        k.sort();
        k
    };
    key(a) == key(b)
}

fn is_doubled(c: &ContactCutSystem) -> bool {
    c.curves.iter().all(|e| e.words.len() == 2 && e.words[0] == e.words[1])
}

/// Shared hypotheses of both lower-bound arguments: a valid path from a
/// doubled system, positive cycles on the expected fiber, and every edge
/// moving at most one arc endpoint between boundary circles.
fn check_family_shape(fam: &Family, genus: usize, boundaries: usize, cycles: &[CurveWord]) -> Result<()> {
    let f = &fam.sigma.half;
    let spec = f.spec();
    if spec.genus != genus || spec.boundary_count != boundaries {
        return Err(Error::Precondition(format!("fiber has genus {} with {} boundary circles", spec.genus, spec.boundary_count)));
    }
    check_edges(&fam.sigma, &fam.path)?;
    if !is_doubled(&fam.path.vertices[0]) {
        return Err(Error::Precondition("path does not start at a doubled arc system".into()));
    }
    let got: Vec<CurveWord> = fam.lf.cycles.iter().map(|(c, _)| c.clone()).collect();
    if fam.lf.cycles.iter().any(|(_, s)| *s != 1) || !same_multiset(&got, cycles) {
        return Err(Error::Precondition("vanishing cycles are not those of the family".into()));
    }
    let derived = path_to_lf(&fam.sigma, &fam.path)?;
    if !derived.same_cycles(&fam.lf) {
        return Err(Error::Precondition("path does not realize the fibration".into()));
    }
    for (i, w) in fam.path.vertices.windows(2).enumerate() {
        let moved = w[0]
            .curves
            .iter()
            .zip(&w[1].curves)
            .map(|(a, b)| {
                let (x, mut y) = (endpoint_components(f, a), endpoint_components(f, b).to_vec());
                x.iter()
                    .filter(|c| match y.iter().position(|d| d == *c) {
                        Some(k) => {
                            y.swap_remove(k);
                            false
                        }
                        None => true,
                    })
                    .count()
            })
            .sum::<usize>();
        let limit = usize::from(matches!(fam.path.edges[i], CCEdge::Type0 { .. }));
        if moved > limit {
            return Err(Error::Path { index: i, reason: format!("{moved} endpoints change boundary circle") });
        }
    }
    Ok(())
}

/// Lower bound for the first family. Before the twist about the curve around
/// holes `2i`, `2i + 1`, some arc must join exactly those two holes. A twist
/// never moves endpoints and a handleslide moves one, creating such an arc for
/// at most one pair, so every pair unjoined at the start costs its own move.
pub fn family1_lower(fam: &Family, n: usize) -> Result<usize> {
    let f = &fam.sigma.half;
    let expected = family1_cycles(f, n);
    check_family_shape(fam, 0, 2 * n + 1, &expected)?;
    let start: Vec<[usize; 2]> = fam.path.vertices[0].curves.iter().map(|c| endpoint_components(f, c)).collect();
    let unjoined = (0..n)
        .filter(|&i| {
            let mut want = [hole(f, 2 * i), hole(f, 2 * i + 1)];
            want.sort();
            !start.contains(&want)
        })
        .count();
    Ok(unjoined)
}

/// Lower bound for the second family. Twisting about a boundary-parallel
/// curve needs exactly one arc endpoint on that circle, so every endpoint
/// beyond the first on a circle has to move once, one per handleslide.
pub fn family2_lower(fam: &Family, n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Precondition("family 2 needs n ≥ 2".into()));
    }
    let f = &fam.sigma.half;
    let expected: Vec<CurveWord> = (0..=n).map(|c| boundary_curve(f, c)).collect();
    check_family_shape(fam, 0, n + 1, &expected)?;
    let mut count = vec![0usize; n + 1];
    for c in &fam.path.vertices[0].curves {
        count[f.component_of(c.start.seg)] += 1;
        count[f.component_of(c.end.seg)] += 1;
    }
    Ok(count.iter().map(|&k| k.saturating_sub(1)).sum())
}

/// Whether a claim was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "not determined")]
    NotDetermined,
}

/// Group presentation on the duals of the reference arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<String>,
}

/// Homological data of the Weinstein domain of a fibration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub euler: i64,
    pub betti: [usize; 3],
    /// Cyclic factors of `H₁`: `0` stands for `ℤ`, `d > 1` for `ℤ/d`.
    pub h1_factors: Vec<i64>,
    pub pi1: Presentation,
    pub pi1_free: Verdict,
    /// Rank of `π₁` when it is known to be free.
    pub pi1_rank: Option<usize>,
    pub c1_zero: Verdict,
    /// Which certified family the form comes from.
    pub form_family: Option<String>,
    pub intersection_form: Option<Vec<Vec<i64>>>,
    pub even_form: Option<bool>,
}

/// Diagonal of the Smith normal form, entries made non-negative.
pub fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].abs())
            else {
                return diag;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let q = a[r][t] / p;
                for c in t..cols {
                    a[r][c] -= q * a[t][c];
                }
                clean &= a[r][t] == 0;
            }
            for c in t + 1..cols {
                let q = a[t][c] / p;
                for r in t..rows {
                    a[r][c] -= q * a[r][t];
                }
                clean &= a[t][c] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % p != 0));
            match bad {
                Some(r) => {
                    for c in t..cols {
                        a[t][c] += a[r][c];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Integer class matrix: one row per cycle, one column per reference arc.
pub fn class_matrix(l: &LefschetzFibration) -> Result<Vec<Vec<i64>>> {
    let m = l.fiber.arc_count();
    l.cycles.iter().map(|(c, _)| c.algebraic_class(m)).collect()
}

fn relator(w: &[Letter]) -> String {
    let parts: Vec<String> =
        w.iter().map(|x| if x.plus { format!("x{}", x.arc + 1) } else { format!("x{}^-1", x.arc + 1) }).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn certified_form(l: &LefschetzFibration) -> Option<(String, Vec<Vec<i64>>)> {
    let f = &l.fiber;
    let spec = f.spec();
    let n = l.len();
    if spec.genus != 0 || l.cycles.iter().any(|(_, s)| *s != 1) {
        return None;
    }
    let curves: Vec<CurveWord> = l.cycles.iter().map(|(c, _)| c.clone()).collect();
    let b = spec.boundary_count;
    if b == 2 && curves.iter().all(|c| c.same_closed_curve(&dual_curves(f)[0])) {
        let k = n.saturating_sub(1);
        let form = (0..k)
            .map(|i| (0..k).map(|j| if i == j { -2 } else if i.abs_diff(j) == 1 { 1 } else { 0 }).collect())
            .collect();
        return Some(("annulus".into(), form));
    }
    if b % 2 == 1 && b >= 3 && n == 3 * (b - 1) / 2 && same_multiset(&curves, &family1_cycles(f, (b - 1) / 2)) {
        let k = (b - 1) / 2;
        let form = (0..k).map(|i| (0..k).map(|j| if i == j { -3 } else { 0 }).collect()).collect();
        return Some(("family1".into(), form));
    }
    if b >= 3 && n == b {
        let expected: Vec<CurveWord> = (0..b).map(|c| boundary_curve(f, c)).collect();
        if same_multiset(&curves, &expected) {
            return Some(("family2".into(), vec![vec![-(b as i64)]]));
        }
    }
    None
}

/// Euler characteristic, Betti numbers, `H₁`, a `π₁` presentation and the
/// available statements about freeness, `c₁` and the intersection form.
pub fn homology_report(l: &LefschetzFibration) -> Result<HomologyReport> {
    l.check()?;
    let f = &l.fiber;
    let m = f.arc_count();
    let n = l.len();
    let diag = smith_diagonal(class_matrix(l)?);
    let rank = diag.iter().filter(|&&d| d != 0).count();
    let mut h1_factors: Vec<i64> = diag.iter().copied().filter(|&d| d > 1).collect();
    h1_factors.extend(std::iter::repeat(0).take(m - rank));
    let words: Vec<Vec<Letter>> = l.cycles.iter().map(|(c, _)| cyclic_reduce(c.letters())).collect();
    let pi1 = Presentation { generators: m, relators: words.iter().map(|w| relator(w)).collect() };
    let (pi1_free, pi1_rank) = if words.iter().all(|w| w.len() == 1) {
        let mut killed: Vec<usize> = words.iter().map(|w| w[0].arc).collect();
        killed.sort();
        killed.dedup();
        (Verdict::Holds, Some(m - killed.len()))
    } else {
        (Verdict::NotDetermined, None)
    };
    let b = dual_curves(f);
    let all_in_b = l.cycles.iter().all(|(c, _)| in_set(c, &b));
    let c1_zero = if all_in_b { Verdict::Holds } else { Verdict::NotDetermined };
    let betti = [1, m - rank, n - rank];
    let (form_family, intersection_form) = match certified_form(l) {
        Some((name, q)) if q.len() == betti[2] => (Some(name), Some(q)),
        _ => (None, None),
    };
    let even_form = match &intersection_form {
        Some(q) => Some((0..q.len()).all(|i| q[i][i] % 2 == 0)),
        None if all_in_b && l.cycles.iter().all(|(_, s)| *s == 1) => Some(true),
        None => None,
    };
    Ok(HomologyReport {
        euler: 1 - m as i64 + n as i64,
        betti,
        h1_factors,
        pi1,
        pi1_free,
        pi1_rank,
        c1_zero,
        form_family,
        intersection_form,
        even_form,
    })
}

/// Separating arcs between consecutive handle and hole blocks of the
/// canonical presentation, each running from the block's last segment to the
/// final segment. Anchor positions sit between those of a doubled system.
pub fn separating_arcs(f: &PolygonPresentation) -> Vec<CurveWord> {
    let spec = f.spec();
    let blocks = spec.genus + spec.boundary_count - 1;
    let last = f.segment_count() - 1;
    let block_end = |j: usize| if j < spec.genus { 4 * j + 3 } else { 4 * spec.genus + 2 * (j - spec.genus) + 1 };
    (0..blocks.saturating_sub(1))
        .map(|j| CurveWord::arc(Anchor::new(block_end(j), -1), vec![], Anchor::new(last, -(2 * j as i64 + 1))))
        .collect()
}

fn spread(a: &CurveWord) -> CurveWord {
    match a {
        CurveWord::Arc { start, letters, end } => CurveWord::arc(
            Anchor::new(start.seg, 2 * start.pos),
            letters.clone(),
            Anchor::new(end.seg, 2 * end.pos),
        ),
        c => c.clone(),
    }
}

/// Checks that every arc and twist curve of an L = 0 diagram misses `gamma`,
/// given that `gamma` misses the first system and its dual curves.
pub fn check_disjoint_from(d: &MultisectionDiagram, gamma: &[CurveWord]) -> Result<bool> {
    d.check()?;
    let f = &d.sigma.half;
    let start = &d.systems[0];
    if !is_doubled(start) {
        return Err(Error::Precondition("the first system is not doubled".into()));
    }
    let first = start.side(Side::Plus).arcs;
    let duals = dual_curves_of(f, &first);
    for g in gamma {
        g.check(f)?;
        let hits = first.iter().map(|a| geometric_intersection(f, g, &spread(a))).sum::<usize>()
            + duals.iter().map(|b| geometric_intersection(f, g, b)).sum::<usize>();
        if hits != 0 {
            return Err(Error::Precondition(format!("{g} meets the first system or its duals {hits} times")));
        }
    }
    for g in gamma {
        for sys in &d.systems {
            for side in [Side::Plus, Side::Minus] {
                if sys.side(side).arcs.iter().any(|a| geometric_intersection(f, g, &spread(a)) != 0) {
                    return Ok(false);
                }
            }
        }
        if d.twists.iter().any(|(_, t, _)| geometric_intersection(f, g, t) != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random path of `len` positive twists, each about a dual curve of the
/// current system on a random side.
pub fn sample_l0_path<R: Rng + ?Sized>(
    sigma: &DoubledSurface,
    start: &ContactCutSystem,
    len: usize,
    rng: &mut R,
) -> Result<CCPath> {
    let f = &sigma.half;
    let mut path = CCPath::trivial(start.clone());
    for _ in 0..len {
        let side = if rng.gen_bool(0.5) { Side::Plus } else { Side::Minus };
        let duals = dual_curves_of(f, &path.last().side(side).arcs);
        let twist = duals[rng.gen_range(0..duals.len())].clone();
        let e = CCEdge::Type1 { side, twist, sign: 1 };
        let next = apply_edge(sigma, path.last(), &e)?;
        path.push(e, next);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutgraph::validate_path;
    use crate::lefschetz::lf_to_diagram;
    use rand::SeedableRng;

    fn core_lf(n: usize) -> LefschetzFibration {
        let f = make_bounded_surface(0, 2).unwrap();
        let core = dual_curves(&f)[0].clone();
        LefschetzFibration::new(f, vec![(core, 1); n]).unwrap()
    }

    #[test]
    fn annulus_core_twists_need_no_slides() {
        let l = core_lf(2);
        let d = lf_to_diagram(&l, &[Side::Plus, Side::Minus]).unwrap();
        let r = exhaustive_l(&d, 100_000).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.certificate.n0(), 0);
        assert!(validate_path(&d.sigma, &r.certificate, 0).valid);
    }

    #[test]
    fn single_vertex_diagram() {
        let l = core_lf(0);
        let d = lf_to_diagram(&l, &[]).unwrap();
        assert_eq!(exhaustive_l(&d, 10).unwrap().value, 0);
    }

    #[test]
    fn family1_small() {
        let fam = family1(1).unwrap();
        assert_eq!(fam.lf.len(), 3);
        assert_eq!(fam.path.edges.len(), 4);
        assert_eq!(count_n0(&fam.path), 1);
        assert_eq!(family1_lower(&fam, 1).unwrap(), 1);
        let d = lf_to_diagram(&fam.lf, &[Side::Plus; 3]).unwrap();
        let r = exhaustive_l(&d, 100_000).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.certificate.n0(), 1);
    }

    #[test]
    fn family2_small() {
        for n in 2..=3 {
            let fam = family2(n).unwrap();
            assert_eq!(count_n0(&fam.path), n - 1);
            assert_eq!(family2_lower(&fam, n).unwrap(), n - 1);
            assert!(validate_path(&fam.sigma, &fam.path, 0).valid);
        }
    }

    #[test]
    fn lower_checkers_refuse_other_shapes() {
        let fam = family2(3).unwrap();
        assert!(family1_lower(&fam, 1).is_err());
        let fam = family1(2).unwrap();
        assert!(family2_lower(&fam, 4).is_err());
        // for one pair both families describe the same fibration on the pair of pants
        assert_eq!(family2_lower(&family1(1).unwrap(), 2).unwrap(), 1);
    }

    #[test]
    fn annulus_report() {
        let r = homology_report(&core_lf(4)).unwrap();
        assert_eq!(r.euler, 4);
        assert_eq!(r.betti, [1, 0, 3]);
        assert!(r.h1_factors.is_empty());
        assert_eq!(r.pi1_rank, Some(0));
        assert_eq!(r.c1_zero, Verdict::Holds);
        assert_eq!(r.intersection_form.unwrap(), vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]);
        assert_eq!(r.even_form, Some(true));
    }

    #[test]
    fn family_reports() {
        for n in 1..=3 {
            let r = homology_report(&family1(n).unwrap().lf).unwrap();
            assert_eq!((r.euler, r.betti), (n as i64 + 1, [1, 0, n]));
            assert_eq!(r.form_family.as_deref(), Some("family1"));
        }
        for n in 2..=4 {
            let r = homology_report(&family2(n).unwrap().lf).unwrap();
            assert_eq!((r.euler, r.betti), (2, [1, 0, 1]));
            assert_eq!(r.intersection_form, Some(vec![vec![-(n as i64 + 1)]]));
        }
    }

    #[test]
    fn smith_torsion() {
        assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![vec![0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn gamma_misses_l0_diagrams() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, b) in [(0, 3), (1, 2), (0, 4)] {
            let f = make_bounded_surface(p, b).unwrap();
            let gamma = separating_arcs(&f);
            assert_eq!(gamma.len(), p + b - 2);
            let sigma = double(&f);
            let start = double_arc_system(&canonical_arc_system(&f));
            for _ in 0..5 {
                let path = sample_l0_path(&sigma, &start, 4, &mut rng).unwrap();
                let d = diagram_of_l0_path(&sigma, &path).unwrap();
                assert!(check_disjoint_from(&d, &gamma).unwrap());
                assert!(check_disjoint_from(&d, &[]).unwrap());
            }
        }
    }

    #[test]
    fn gamma_meeting_duals_is_rejected() {
        let f = make_bounded_surface(0, 3).unwrap();
        let sigma = double(&f);
        let start = double_arc_system(&canonical_arc_system(&f));
        let d = diagram_of_l0_path(&sigma, &CCPath::trivial(start)).unwrap();
        let bad = CurveWord::arc(Anchor::new(1, -1), vec![Letter::new(0, true)], Anchor::new(3, -1));
        assert!(matches!(check_disjoint_from(&d, &[bad]), Err(Error::Precondition(_))));
    }
}
