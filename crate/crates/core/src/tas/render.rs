use std::fmt::Write;

use crate::path::{Direction, Point};

use super::Assembly;

/// One character per site, top row first: the tile name's initial, or `.`.
pub fn render_ascii(a: &Assembly) -> String {
    let w = a.window();
    let mut out = String::new();
    for y in (w.min().y..=w.max().y).rev() {
        for x in w.min().x..=w.max().x {
            let c = a
                .get(Point::new(x, y))
                .and_then(|t| t.name().chars().next())
                .unwrap_or('.');
            out.push(c);
        }
        out.push('\n');
    }
    out
}

/// Extra marks drawn over an SVG render.
#[derive(Debug, Clone, Default)]
pub struct SvgOverlay {
    pub shaded: Vec<Point>,
    pub marked: Vec<Point>,
}

const CELL: i64 = 24;

/// Unit squares with glue labels on each non-null side; the origin tile is
/// highlighted. Element order is deterministic.
pub fn render_svg(a: &Assembly, overlay: &SvgOverlay) -> String {
    let w = a.window();
    let (width, height) = (w.width() as i64 * CELL, w.height() as i64 * CELL);
    // screen coordinates of the top-left corner of a cell
    let corner = |p: Point| ((p.x - w.min().x) * CELL, (w.max().y - p.y) * CELL);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace">"#
    );
    let _ = writeln!(
        s,
        r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##
    );
    let mut shaded = overlay.shaded.clone();
    shaded.sort();
    shaded.dedup();
    for p in shaded.into_iter().filter(|p| w.contains(*p)) {
        let (x, y) = corner(p);
        let _ = writeln!(
            s,
            r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="#cfe3ff"/>"##
        );
    }
    for (p, t) in a.iter() {
        let (x, y) = corner(p);
        let fill = if p == Point::ORIGIN {
            "#ffd54f"
        } else {
            "#eeeeee"
        };
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" fill-opacity="0.85" stroke="#333333"/>"##,
            x + 1,
            y + 1,
            CELL - 2,
            CELL - 2
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
            x + CELL / 2,
            y + CELL / 2 + 4,
            escape(t.name())
        );
        for d in Direction::ALL {
            let g = t.glue(d);
            if g.is_null() {
                continue;
            }
            let (gx, gy) = match d {
                Direction::N => (x + CELL / 2, y + 7),
                Direction::S => (x + CELL / 2, y + CELL - 2),
                Direction::E => (x + CELL - 4, y + CELL / 2 + 2),
                Direction::W => (x + 4, y + CELL / 2 + 2),
            };
            let _ = writeln!(
                s,
                r##"<text x="{gx}" y="{gy}" font-size="6" text-anchor="middle" fill="#aa2222">{}</text>"##,
                escape(&g.to_string())
            );
        }
    }
    let mut marked = overlay.marked.clone();
    marked.sort();
    marked.dedup();
    for p in marked.into_iter().filter(|p| w.contains(*p)) {
        let (x, y) = corner(p);
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#d32f2f" stroke-width="2"/>"##,
            x + CELL / 2,
            y + CELL / 2,
            CELL / 3
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
