//! SVG rendering of a record's placement.
//!
//! This is the only place exact values become decimals.

use std::fmt::Write;

use crate::exact::Rational;
use crate::quad::Quadrilateral;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 70.0;
const DIGITS: usize = 12;

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// A standalone SVG document showing O, A, B, C, all six lengths and the area.
pub fn render_svg(rec: &Quadrilateral) -> String {
    let p = &rec.placement;
    // Work in units of e so that huge records still fit in an f64.
    let unit = |v: &Rational| v.checked_div(&p.e).map(|r| r.to_f64()).unwrap_or(0.0);
    let pts = [
        (0.0, 0.0),
        (unit(&p.x1), unit(&p.y1)),
        (1.0, 0.0),
        (unit(&p.x2), unit(&p.y2)),
    ];
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let span_x = (xmax - xmin).max(1e-9);
    let span_y = (ymax - ymin).max(1e-9);
    let k = ((WIDTH - 2.0 * MARGIN) / span_x).min((HEIGHT - 2.0 * MARGIN) / span_y);
    let off_x = (WIDTH - k * span_x) / 2.0;
    let off_y = (HEIGHT - k * span_y) / 2.0;
    let screen: Vec<(f64, f64)> = pts
        .iter()
        .map(|&(x, y)| (off_x + k * (x - xmin), HEIGHT - off_y - k * (y - ymin)))
        .collect();
    let centre = screen
        .iter()
        .fold((0.0, 0.0), |acc, s| (acc.0 + s.0 / 4.0, acc.1 + s.1 / 4.0));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(
        svg,
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##
    );
    let poly: Vec<String> = screen
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect();
    let _ = writeln!(
        svg,
        r##"<polygon points="{}" fill="#e8f0fb" stroke="#1f4e8c" stroke-width="2"/>"##,
        poly.join(" ")
    );
    for (i, j) in [(0, 2), (1, 3)] {
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#8c1f1f" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
            screen[i].0, screen[i].1, screen[j].0, screen[j].1
        );
    }

    let sides = rec.sides.clone().map(Rational::from);
    let diags = rec.diagonals.clone().map(Rational::from);
    let edges = [
        (0, 1, "a", &sides[0]),
        (1, 2, "b", &sides[1]),
        (2, 3, "c", &sides[2]),
        (3, 0, "d", &sides[3]),
    ];
    for (i, j, name, len) in edges {
        let mx = (screen[i].0 + screen[j].0) / 2.0;
        let my = (screen[i].1 + screen[j].1) / 2.0;
        // Push the label away from the middle of the figure.
        let (dx, dy) = (mx - centre.0, my - centre.1);
        let n = (dx * dx + dy * dy).sqrt().max(1e-9);
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{name} = {}</text>"#,
            mx + 22.0 * dx / n,
            my + 22.0 * dy / n + 4.0,
            esc(&len.to_decimal(DIGITS))
        );
    }
    for (i, j, name, len, nudge) in [(0, 2, "e", &diags[0], 16.0), (1, 3, "f", &diags[1], -16.0)] {
        let _ = writeln!(
            svg,
            r##"<text x="{:.2}" y="{:.2}" text-anchor="middle" fill="#8c1f1f">{name} = {}</text>"##,
            (screen[i].0 + screen[j].0) / 2.0 + nudge,
            (screen[i].1 + screen[j].1) / 2.0 - 6.0,
            esc(&len.to_decimal(DIGITS))
        );
    }
    for (idx, label) in ["O", "A", "B", "C"].iter().enumerate() {
        let (x, y) = screen[idx];
        let (dx, dy) = (x - centre.0, y - centre.1);
        let n = (dx * dx + dy * dy).sqrt().max(1e-9);
        let _ = writeln!(
            svg,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#1f4e8c"/>"##
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-weight="bold">{label}</text>"#,
            x + 16.0 * dx / n,
            y + 16.0 * dy / n + 5.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="15">area = {} ({})</text>"#,
        WIDTH / 2.0,
        HEIGHT - 18.0,
        esc(&rec.area.to_decimal(DIGITS)),
        rec.family
    );
    svg.push_str("</svg>\n");
    svg
}
