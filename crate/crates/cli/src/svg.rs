//! Deterministic SVG pictures of contact cut systems.
//!
//! Each side of the double is drawn as the regular polygon of the fiber.
//! Boundary segments form the dividing set and are drawn thick; arcs of the
//! system are straight chords between the points where they cross edges.

use std::fmt::Write as _;

use ccgraph::curves::{CurveWord, Realization};
use ccgraph::cutgraph::{ContactCutSystem, Side};
use ccgraph::surface::{Edge, PolygonPresentation};

const RADIUS: f64 = 150.0;
const PANEL: f64 = 400.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22"];

type Pt = (f64, f64);

fn vertex(k: usize, n: usize, cx: f64, cy: f64) -> Pt {
    let t = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * k as f64 / n as f64;
    (cx + RADIUS * t.cos(), cy - RADIUS * t.sin())
}

fn lerp(a: Pt, b: Pt, t: f64) -> Pt {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

fn panel(out: &mut String, f: &PolygonPresentation, arcs: &[CurveWord], title: &str, cx: f64) {
    let cy = PANEL / 2.0 + 10.0;
    let n = f.edge_count();
    let _ = writeln!(out, r#"  <text x="{cx:.2}" y="24.00" text-anchor="middle">{title}</text>"#);
    for e in 0..n {
        let (a, b) = (vertex(e, n, cx, cy), vertex(e + 1, n, cx, cy));
        let (stroke, width, label) = match f.edge(e) {
            Edge::Seg(s) => ("#d62728", 4, format!("s{}", s + 1)),
            Edge::Arc { arc, plus } => ("#7f7f7f", 1, format!("a{}{}", arc + 1, if plus { '+' } else { '-' })),
        };
        let _ = writeln!(
            out,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width}"/>"#,
            a.0, a.1, b.0, b.1
        );
        let mid = lerp(a, b, 0.5);
        let lab = lerp((cx, cy), mid, 1.12);
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">{label}</text>"#,
            lab.0, lab.1
        );
    }
    let refs: Vec<&CurveWord> = arcs.iter().collect();
    let r = Realization::new(f, &refs);
    let place = |q: usize| -> Pt {
        let e = (0..n).rev().find(|&e| r.offset[e] <= q && r.points_on_edge[e] > 0).unwrap();
        let t = (q - r.offset[e] + 1) as f64 / (r.points_on_edge[e] + 1) as f64;
        lerp(vertex(e, n, cx, cy), vertex(e + 1, n, cx, cy), t)
    };
    for (c, chords) in r.chords.iter().enumerate() {
        let color = PALETTE[c % PALETTE.len()];
        for &(p, q) in chords {
            let (a, b) = (place(p), place(q));
            let _ = writeln!(
                out,
                r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
    }
}

/// One picture with the plus side on the left and the minus side on the right.
pub fn render_system(f: &PolygonPresentation, v: &ContactCutSystem, caption: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#,
        w = 2.0 * PANEL,
        h = PANEL + 40.0
    );
    let _ = writeln!(out, "  <title>{caption}</title>");
    panel(&mut out, f, &v.side(Side::Plus).arcs, "plus side", PANEL / 2.0);
    panel(&mut out, f, &v.side(Side::Minus).arcs, "minus side", 1.5 * PANEL);
    out.push_str("</svg>\n");
    out
}
