use std::fmt::Write;

use super::{CornerKind, Permutomino};

/// One text line per row, top row first; `#` for a cell, `.` for empty.
pub fn render_ascii(p: &Permutomino) -> String {
    let poly = p.as_polyomino();
    let (w, h) = (poly.width(), poly.height());
    let mut out = String::with_capacity(((w + 1) * h) as usize);
    for y in (1..=h).rev() {
        for x in 1..=w {
            out.push(if poly.contains(x, y) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

const UNIT: i64 = 20;
const MARGIN: i64 = 10;
const MARK: i64 = 6;

/// SVG 1.1 drawing: grey cells, the boundary as a closed polyline, salient
/// corners as black squares and reentrant corners as white squares.
pub fn render_svg(p: &Permutomino) -> String {
    let poly = p.as_polyomino();
    let (w, h) = (i64::from(poly.width()), i64::from(poly.height()));
    let (pw, ph) = (w * UNIT + 2 * MARGIN, h * UNIT + 2 * MARGIN);
    // lattice (x, y) -> svg coordinates, y axis flipped
    let sx = |x: i64| MARGIN + (x - 1) * UNIT;
    let sy = |y: i64| MARGIN + (h + 1 - y) * UNIT;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{pw}" height="{ph}" viewBox="0 0 {pw} {ph}">"#
    );
    let _ = writeln!(out, r##"<g fill="#d8d8d8" stroke="#b0b0b0" stroke-width="1">"##);
    for (i, c) in poly.columns().iter().enumerate() {
        let x = i as i64 + 1;
        for y in c.lo..=c.hi {
            let y = i64::from(y);
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}"/>"#,
                sx(x),
                sy(y + 1)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let word = p.boundary_word();
    let points: Vec<String> = word.points().map(|q| format!("{},{}", sx(q.x), sy(q.y))).collect();
    let _ = writeln!(
        out,
        r#"<polyline fill="none" stroke="black" stroke-width="2" points="{}"/>"#,
        points.join(" ")
    );

    let report = p.corner_report();
    for c in report.salient.iter().chain(&report.reentrant) {
        let fill = match c.kind {
            CornerKind::Salient => "black",
            CornerKind::Reentrant(_) => "white",
        };
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{MARK}" height="{MARK}" fill="{fill}" stroke="black" stroke-width="1"/>"#,
            sx(c.at.x) - MARK / 2,
            sy(c.at.y) - MARK / 2
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}
