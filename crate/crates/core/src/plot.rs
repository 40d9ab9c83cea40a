//! SVG rendering of the enumeration order of a packing polynomial.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::numeric::LatticePoint;
use crate::poly::IVQuadratic;
use crate::sector::{Region, Sector};
use crate::{Error, Result};

const CELL: i64 = 24;
const MARGIN: i64 = 24;

/// Draws the sector points with values `0..=count`, labeled by value, joined
/// in value order. Refuses when a value repeats or is missing.
pub fn plot_svg(p: &IVQuadratic, sector: &Sector, count: u64) -> Result<String> {
    let pts = Region::new(p.clone(), sector.clone(), count).valued_points()?;
    let mut order: Vec<Option<LatticePoint>> = vec![None; count as usize + 1];
    for (pt, v) in &pts {
        let v = v.to_usize().expect("value within [0, count]");
        if let Some(prev) = order[v] {
            return Err(Error::InvalidArgument(format!(
                "value {v} is attained at both {prev} and {pt}; refusing to draw a non-injective order"
            )));
        }
        order[v] = Some(*pt);
    }
    let path: Vec<LatticePoint> = order
        .iter()
        .enumerate()
        .map(|(v, pt)| pt.ok_or_else(|| Error::InvalidArgument(format!("no sector point has value {v}"))))
        .collect::<Result<_>>()?;

    let max_x = path.iter().map(|q| q.x).max().unwrap_or(0).max(1);
    let max_y = path.iter().map(|q| q.y).max().unwrap_or(0).max(1);
    let width = 2 * MARGIN + max_x * CELL;
    let height = 2 * MARGIN + max_y * CELL;
    let px = |q: &LatticePoint| (MARGIN + q.x * CELL, MARGIN + (max_y - q.y) * CELL);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let (ox, oy) = px(&LatticePoint::ORIGIN);
    let _ = writeln!(
        svg,
        r##"<g stroke="#999" stroke-width="1"><line x1="{ox}" y1="{oy}" x2="{}" y2="{oy}"/><line x1="{ox}" y1="{oy}" x2="{ox}" y2="{}"/></g>"##,
        width - MARGIN / 2,
        MARGIN / 2
    );
    // background lattice of the sector window
    let _ = writeln!(svg, r##"<g fill="#ccc">"##);
    for x in 0..=max_x {
        for y in 0..=max_y {
            let q = LatticePoint::new(x, y);
            if sector.contains(q) {
                let (cx, cy) = px(&q);
                let _ = writeln!(svg, r#"<circle cx="{cx}" cy="{cy}" r="2"/>"#);
            }
        }
    }
    let _ = writeln!(svg, "</g>");
    let coords: Vec<String> = path
        .iter()
        .map(|q| {
            let (x, y) = px(q);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        svg,
        r##"<polyline fill="none" stroke="#1f5fbf" stroke-width="1.5" points="{}"/>"##,
        coords.join(" ")
    );
    let _ = writeln!(
        svg,
        r##"<g font-family="sans-serif" font-size="9" text-anchor="middle" dominant-baseline="central">"##
    );
    for (v, q) in path.iter().enumerate() {
        let (cx, cy) = px(q);
        let _ = writeln!(
            svg,
            r##"<circle cx="{cx}" cy="{cy}" r="7" fill="white" stroke="#1f5fbf"/><text x="{cx}" y="{cy}">{v}</text>"##
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_labeled() {
        let f = IVQuadratic::cantor_f();
        let a = plot_svg(&f, &Sector::first_quadrant(), 27).unwrap();
        let b = plot_svg(&f, &Sector::first_quadrant(), 27).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<text").count(), 28);
        assert!(a.contains(">27</text>"));
    }

    #[test]
    fn single_dot() {
        let s = plot_svg(&IVQuadratic::cantor_g(), &Sector::first_quadrant(), 0).unwrap();
        assert_eq!(s.matches("<text").count(), 1);
    }

    #[test]
    fn refuses_collisions_and_gaps() {
        let disk = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        assert!(plot_svg(&disk, &Sector::first_quadrant(), 5).is_err());
        let f = IVQuadratic::cantor_f();
        assert!(plot_svg(&f, &Sector::new("1".parse().unwrap()), 5).is_err());
    }
}
