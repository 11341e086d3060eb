//! SVG pictures of 2D systems and slice tables for 3D ones.
//!
//! Surviving lattice points are filled dots, cut points are open circles,
//! and each marked point contributes the segment `{ mult = mᵢ − 1 }` inside
//! the polygon. Floating point is used for pixel coordinates only.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linsys::LinearSystemSpec;

const MARGIN: f64 = 24.0;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// Polygon vertices in counter-clockwise order.
    pub polygon: Vec<LatticeVector>,
    pub survivors: Vec<LatticeVector>,
    pub cut: Vec<LatticeVector>,
    /// Clipped segments of the lines `{ mult_i = m_i − 1 }`, by cone.
    pub hyperplanes: Vec<(usize, [(f64, f64); 2])>,
    pub size: u32,
}

impl RenderSpec {
    pub fn new(spec: &LinearSystemSpec, size: u32) -> Result<Self> {
        if spec.dim() != 2 {
            return Err(Error::Input(format!(
                "SVG rendering needs a 2D system, got dimension {}",
                spec.dim()
            )));
        }
        let polygon = polygon(spec.polytope().vertices());
        let mut hyperplanes = Vec::new();
        for cone in spec.marked() {
            let (w, c) = spec.order_functional(cone)?;
            let level = spec.mult(cone) - 1 - c;
            if let Some(seg) = clip_line(&polygon, &w, level) {
                hyperplanes.push((cone, seg));
            }
        }
        Ok(Self {
            polygon,
            survivors: spec.surviving_points(),
            cut: spec.cut_points(),
            hyperplanes,
            size,
        })
    }

    pub fn to_svg(&self) -> String {
        let xs = self.polygon.iter().map(|v| v.coords()[0]);
        let ys = self.polygon.iter().map(|v| v.coords()[1]);
        let (x0, x1) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
        let (y0, y1) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
        let span = (x1 - x0).max(y1 - y0).max(1) as f64;
        let size = f64::from(self.size);
        let unit = (size - 2.0 * MARGIN) / span;
        let px = |x: f64, y: f64| {
            (
                MARGIN + (x - x0 as f64) * unit,
                size - MARGIN - (y - y0 as f64) * unit,
            )
        };
        let dot = (unit / 8.0).clamp(1.5, 6.0);

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
            self.size
        );
        let points: Vec<String> = self
            .polygon
            .iter()
            .map(|v| {
                let (x, y) = px(v.coords()[0] as f64, v.coords()[1] as f64);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"  <polygon class="edge" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            points.join(" ")
        );
        for (cone, [(ax, ay), (bx, by)]) in &self.hyperplanes {
            let (ax, ay) = px(*ax, *ay);
            let (bx, by) = px(*bx, *by);
            let _ = writeln!(
                svg,
                r#"  <line class="hyperplane" data-cone="{cone}" x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="black" stroke-width="1"/>"#
            );
        }
        for p in &self.survivors {
            let (x, y) = px(p.coords()[0] as f64, p.coords()[1] as f64);
            let _ = writeln!(
                svg,
                r#"  <circle class="kept" cx="{x:.2}" cy="{y:.2}" r="{dot:.2}" fill="black"/>"#
            );
        }
        for p in &self.cut {
            let (x, y) = px(p.coords()[0] as f64, p.coords()[1] as f64);
            let _ = writeln!(
                svg,
                r#"  <circle class="cut" cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="none" stroke="black" stroke-width="1"/>"#,
                dot * 1.4
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// Distinct vertices sorted counter-clockwise around their centroid.
fn polygon(vertices: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut vs: Vec<LatticeVector> = vertices.to_vec();
    vs.sort();
    vs.dedup();
    let n = vs.len() as f64;
    let cx = vs.iter().map(|v| v.coords()[0] as f64).sum::<f64>() / n;
    let cy = vs.iter().map(|v| v.coords()[1] as f64).sum::<f64>() / n;
    let angle = |v: &LatticeVector| (v.coords()[1] as f64 - cy).atan2(v.coords()[0] as f64 - cx);
    vs.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
    vs
}

/// The part of `{ ⟨m, w⟩ = level }` inside the convex polygon.
fn clip_line(polygon: &[LatticeVector], w: &LatticeVector, level: i64) -> Option<[(f64, f64); 2]> {
    let (wx, wy) = (w.coords()[0] as f64, w.coords()[1] as f64);
    let norm2 = wx * wx + wy * wy;
    if norm2 == 0.0 {
        return None;
    }
    let base = (wx * level as f64 / norm2, wy * level as f64 / norm2);
    let dir = (-wy, wx);
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    let k = polygon.len();
    if k < 3 {
        return None;
    }
    for i in 0..k {
        let a = polygon[i].coords();
        let b = polygon[(i + 1) % k].coords();
        // Inward normal of a counter-clockwise edge.
        let (nx, ny) = (-(b[1] - a[1]) as f64, (b[0] - a[0]) as f64);
        let offset = nx * a[0] as f64 + ny * a[1] as f64;
        let num = offset - (nx * base.0 + ny * base.1);
        let den = nx * dir.0 + ny * dir.1;
        if den.abs() < 1e-12 {
            if num > 1e-9 {
                return None;
            }
        } else if den > 0.0 {
            lo = lo.max(num / den);
        } else {
            hi = hi.min(num / den);
        }
    }
    (lo <= hi).then_some({
        [
            (base.0 + lo * dir.0, base.1 + lo * dir.1),
            (base.0 + hi * dir.0, base.1 + hi * dir.1),
        ]
    })
}

/// Per-slice lattice-point counts along the first coordinate: `x total cut`.
pub fn slice_table(spec: &LinearSystemSpec) -> String {
    let cut = spec.cut_points();
    let mut out = String::from("slice\tpoints\tcut\n");
    let mut rows: std::collections::BTreeMap<i64, (usize, usize)> = Default::default();
    for p in spec.lattice_points() {
        rows.entry(p.coords()[0]).or_default().0 += 1;
    }
    for p in &cut {
        rows.entry(p.coords()[0]).or_default().1 += 1;
    }
    for (x, (total, removed)) in rows {
        let _ = writeln!(out, "{x}\t{total}\t{removed}");
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::divisor::ToricDivisor;
    use crate::fan::Fan;

    fn f3(marks: &[(usize, i64)]) -> LinearSystemSpec {
        let d = ToricDivisor::new(Arc::new(Fan::hirzebruch(3)), vec![0, 0, 2, 3]).unwrap();
        LinearSystemSpec::new(d, &marks.iter().copied().collect()).unwrap()
    }

    #[test]
    fn single_point_circles() {
        let spec = RenderSpec::new(&f3(&[(3, 5)]), 400).unwrap();
        let svg = spec.to_svg();
        assert_eq!(svg.matches(r#"class="cut""#).count(), 14);
        assert_eq!(svg.matches(r#"class="kept""#).count(), 16);
        assert_eq!(svg.matches(r#"class="hyperplane""#).count(), 1);
        assert_eq!(spec.polygon.len(), 4);
        assert_eq!(svg, RenderSpec::new(&f3(&[(3, 5)]), 400).unwrap().to_svg());
    }

    #[test]
    fn two_point_circles() {
        let spec = RenderSpec::new(&f3(&[(0, 2), (3, 3)]), 300).unwrap();
        assert_eq!(spec.to_svg().matches(r#"class="cut""#).count(), 8);
        assert_eq!(spec.hyperplanes.len(), 2);
    }

    #[test]
    fn hyperplane_is_the_cut_boundary() {
        // m₄ = 5 cuts x ≤ y + 1; the drawn line is mult = 4, that is x = y + 1.
        let spec = RenderSpec::new(&f3(&[(3, 5)]), 400).unwrap();
        let (_, [(ax, ay), (bx, by)]) = spec.hyperplanes[0];
        for (x, y) in [(ax, ay), (bx, by)] {
            assert!(((x - y) - 1.0).abs() < 1e-9, "({x}, {y})");
        }
    }

    #[test]
    fn polygon_order_is_counter_clockwise() {
        let spec = RenderSpec::new(&f3(&[]), 100).unwrap();
        let p: Vec<[i64; 2]> = spec
            .polygon
            .iter()
            .map(|v| [v.coords()[0], v.coords()[1]])
            .collect();
        let area2: i64 = (0..p.len())
            .map(|i| {
                let (a, b) = (p[i], p[(i + 1) % p.len()]);
                a[0] * b[1] - a[1] * b[0]
            })
            .sum();
        assert!(area2 > 0);
    }

    #[test]
    fn three_dimensional_slices() {
        let p1 = Fan::projective_space(1).unwrap();
        let fan = Arc::new(p1.product(&p1).product(&p1));
        let d = ToricDivisor::new(fan, vec![0, 1, 0, 1, 0, 1]).unwrap();
        let spec = LinearSystemSpec::new(d, &[(0, 2)].into_iter().collect()).unwrap();
        assert!(RenderSpec::new(&spec, 100).is_err());
        let table = slice_table(&spec);
        assert_eq!(table, "slice\tpoints\tcut\n0\t4\t3\n1\t4\t1\n");
    }
}
