//! SVG output. Edges are elbows: a vertical leg leaving the source, a
//! quarter-circle junction at the bend, a horizontal leg entering the
//! target behind an arrowhead. The junctions keep overlapping edges
//! readable where several elbows share a segment.

use std::fmt::Write;

use crate::graph::DirectedGraph;
use crate::layout::Layout;
use crate::{Error, Result};

/// Pixel geometry of a drawing. Grid rows grow downward: row 1 is the top
/// of the image.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Pixels per grid unit.
    pub cell: f64,
    /// Radius of the quarter-circle bend junctions.
    pub junction: f64,
    /// Radius of the vertex circles.
    pub vertex_radius: f64,
    /// Arrowhead length.
    pub arrow: f64,
    /// Stroke width of edge segments.
    pub stroke: f64,
    /// Label font size.
    pub font: f64,
    /// Draw vertex labels inside the circles.
    pub labels: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            cell: 40.0,
            junction: 10.0,
            vertex_radius: 8.0,
            arrow: 7.0,
            stroke: 2.0,
            font: 12.0,
            labels: true,
        }
    }
}

impl RenderStyle {
    /// All lengths must be positive and finite; the junction radius must
    /// stay under half a cell so adjacent bends cannot merge.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("cell", self.cell),
            ("junction", self.junction),
            ("vertex_radius", self.vertex_radius),
            ("arrow", self.arrow),
            ("stroke", self.stroke),
            ("font", self.font),
        ];
        for (name, value) in fields {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::RenderStyle(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        if self.junction >= self.cell / 2.0 {
            return Err(Error::RenderStyle(format!(
                "junction radius {} must be less than half the cell size {}",
                self.junction, self.cell
            )));
        }
        Ok(())
    }
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders the drawing to SVG text. Output is deterministic for fixed
/// inputs: edges in sorted edge order, then vertex circles and labels.
pub fn render_svg(g: &DirectedGraph, layout: &Layout, style: &RenderStyle) -> Result<String> {
    style.validate()?;
    let n = g.vertex_count();
    if layout.vertex_count() != n {
        return Err(Error::LayoutMismatch {
            got: layout.vertex_count(),
            want: n,
        });
    }
    let cell = style.cell;
    let r = style.junction;
    let max_x = (0..n).map(|v| layout.x(v)).max().unwrap_or(0);
    let max_y = (0..n).map(|v| layout.y(v)).max().unwrap_or(0);
    let width = (max_x + 1) as f64 * cell;
    let height = (max_y + 1) as f64 * cell;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );

    for &(u, v) in g.edges() {
        let ux = layout.x(u) as f64 * cell;
        let uy = layout.y(u) as f64 * cell;
        let vx = layout.x(v) as f64 * cell;
        let vy = layout.y(v) as f64 * cell;
        // Screen directions: dy of the vertical leg, dx of the horizontal.
        let dy = if vy > uy { 1.0 } else { -1.0 };
        let dx = if vx > ux { 1.0 } else { -1.0 };
        // The junction turns clockwise exactly when the two directions
        // disagree in sign.
        let sweep = if dy * dx < 0.0 { 1 } else { 0 };
        let leg_end_y = vy - dy * r;
        let arc_end_x = ux + dx * r;
        let line_end_x = vx - dx * (style.vertex_radius + style.arrow);
        let _ = writeln!(
            svg,
            r#"<path d="M {ux} {uy} V {leg_end_y} A {r} {r} 0 0 {sweep} {arc_end_x} {vy} H {line_end_x}" fill="none" stroke="black" stroke-width="{}"/>"#,
            style.stroke
        );
        let tip_x = vx - dx * style.vertex_radius;
        let base_x = tip_x - dx * style.arrow;
        let half = style.arrow / 2.0;
        let _ = writeln!(
            svg,
            r#"<path d="M {tip_x} {vy} L {base_x} {} L {base_x} {} Z" fill="black"/>"#,
            vy - half,
            vy + half
        );
    }

    for v in 0..n {
        let cx = layout.x(v) as f64 * cell;
        let cy = layout.y(v) as f64 * cell;
        let _ = writeln!(
            svg,
            r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="white" stroke="black" stroke-width="{}"/>"#,
            style.vertex_radius, style.stroke
        );
        if style.labels {
            let _ = writeln!(
                svg,
                r#"<text x="{cx}" y="{cy}" font-size="{}" text-anchor="middle" dominant-baseline="central" font-family="sans-serif">{}</text>"#,
                style.font,
                escape_xml(g.label(v))
            );
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
