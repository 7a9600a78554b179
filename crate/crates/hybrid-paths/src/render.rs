//! Text and SVG renderings of lattice paths.

use crate::path::{LatticePath, Step};

/// Output formats for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// Token string; round-trips through `LatticePath::parse`.
    Tokens,
    /// Height profile on a character grid.
    Ascii,
    /// Standalone SVG drawing.
    Svg,
}

pub fn render(path: &LatticePath, format: RenderFormat) -> String {
    match format {
        RenderFormat::Tokens => path.tokens(),
        RenderFormat::Ascii => ascii(path),
        RenderFormat::Svg => svg(path),
    }
}

/// Character-grid drawing. Rows are height bands from the top down; an
/// upstep through band h draws `/`, an ordinary downstep `\`, a special
/// downstep `%`, and a horizontal step at height h draws `__` sitting on
/// the floor of band h+1.
pub fn ascii(path: &LatticePath) -> String {
    if path.is_empty() {
        return String::new();
    }
    let width = path.unit_len();
    let bands = path.max_height().max(1) as usize;
    let mut grid = vec![vec![b' '; width]; bands];
    let heights = path.heights_before();
    let units = path.unit_positions();
    for (i, &s) in path.steps().iter().enumerate() {
        let h = heights[i];
        let col = units[i] - 1;
        match s {
            Step::Up => grid[(h + 1) as usize - 1][col] = b'/',
            Step::Down => grid[h as usize - 1][col] = b'\\',
            Step::SpecialDown => grid[h as usize - 1][col] = b'%',
            Step::Horiz => {
                grid[(h + 1) as usize - 1][col] = b'_';
                grid[(h + 1) as usize - 1][col + 1] = b'_';
            }
        }
    }
    grid.iter()
        .rev()
        .map(|row| String::from_utf8_lossy(row).trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Standalone SVG: one polyline for the whole height profile on an integer
/// grid, with special downsteps overdrawn dashed and horizontal steps
/// double-width.
pub fn svg(path: &LatticePath) -> String {
    const SCALE: i64 = 20;
    const MARGIN: i64 = 20;
    let width = path.unit_len() as i64 * SCALE + 2 * MARGIN;
    let max_h = path.max_height();
    let height = max_h * SCALE + 2 * MARGIN;
    let xy = |x: i64, h: i64| (MARGIN + x * SCALE, MARGIN + (max_h - h) * SCALE);

    let mut points = Vec::new();
    let mut specials = Vec::new();
    let mut x = 0i64;
    let mut h = 0i64;
    points.push(xy(x, h));
    for &s in path.steps() {
        let (x0, h0) = (x, h);
        x += s.unit_len() as i64;
        h += s.height_delta();
        points.push(xy(x, h));
        if s == Step::SpecialDown {
            specials.push((xy(x0, h0), xy(x, h)));
        }
    }

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#bbbbbb\"/>\n",
        MARGIN,
        MARGIN + max_h * SCALE,
        MARGIN + path.unit_len() as i64 * SCALE,
        MARGIN + max_h * SCALE
    ));
    let pts = points
        .iter()
        .map(|(a, b)| format!("{a},{b}"))
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!(
        "  <polyline points=\"{pts}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
    ));
    for ((x1, y1), (x2, y2)) in specials {
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"red\" \
             stroke-width=\"2\" stroke-dasharray=\"5 3\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
