//! Lattice-path drawings of words: ASCII art and SVG.
//!
//! Conventions for ASCII: '/' and '\' sit on the row of their upper end,
//! '_' on its own height row. Rows print top height first; every path row
//! is exactly as wide as the word. The SVG is a single polyline on a unit
//! grid with the y axis flipped (height 0 at the bottom), written with a
//! fixed format so identical input gives identical bytes.

use std::fmt::Write as _;

use crate::word::{Step, Word};

/// Header line explaining the ASCII glyphs.
pub const ASCII_LEGEND: &str = "/ up   _ flat   \\ down";

/// ASCII drawing, rows joined by newlines. With `legend` the glyph
/// explanation is prepended as its own line.
pub fn render_ascii(w: &Word, legend: bool) -> String {
    let n = w.len();
    let mut h: usize = 0;
    // (row, col, glyph) for each step; row of a diagonal is its upper end.
    let mut marks = Vec::with_capacity(n);
    for (col, step) in w.to_path().into_iter().enumerate() {
        let (row, glyph) = match step {
            Step::Up => {
                h += 1;
                (h, '/')
            }
            Step::Down => {
                h -= 1;
                (h + 1, '\\')
            }
            Step::Flat => (h, '_'),
        };
        marks.push((row, col, glyph));
    }
    let top = marks.iter().map(|m| m.0).max().unwrap();
    let bottom = marks.iter().map(|m| m.0).min().unwrap();

    let mut grid = vec![vec![' '; n]; top - bottom + 1];
    for (row, col, glyph) in marks {
        grid[row - bottom][col] = glyph;
    }
    let mut out = String::new();
    if legend {
        out.push_str(ASCII_LEGEND);
        out.push('\n');
    }
    for row in grid.iter().rev() {
        out.extend(row.iter());
        out.push('\n');
    }
    out.pop();
    out
}

/// SVG drawing: one polyline over the unit grid, one unit of padding on
/// every side. Deterministic byte-for-byte.
pub fn render_svg(w: &Word) -> String {
    let heights = w.heights();
    let max_h = *heights.iter().max().unwrap();
    let n = w.len();

    let mut points = String::new();
    write!(points, "0,{max_h}").unwrap();
    for (i, h) in heights.iter().enumerate() {
        write!(points, " {},{}", i + 1, max_h - h).unwrap();
    }
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 {} {}\">\n",
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.1\" ",
            "stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"{}\"/>\n",
            "</svg>\n"
        ),
        n + 2,
        max_h + 2,
        points
    )
}
