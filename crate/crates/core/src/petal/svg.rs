//! Vector drawing of a petal diagram.

use std::fmt::Write;

use super::PetalPermutation;

/// Colours and sizes used by [`render_svg`].
#[derive(Debug, Clone)]
pub struct SvgStyle {
    pub size: f64,
    pub stroke_width: f64,
    /// Lower third of the heights.
    pub low: &'static str,
    /// Middle height.
    pub middle: &'static str,
    /// Everything above the middle.
    pub high: &'static str,
    pub label: &'static str,
    pub background: &'static str,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            size: 480.0,
            stroke_width: 2.5,
            low: "#c0392b",
            middle: "#2e64c8",
            high: "#1b1b1b",
            label: "#444444",
            background: "#ffffff",
        }
    }
}

/// Draws the rose `r = cos(Lθ)`: one closed petal per pass, each labelled
/// with the height of the pass that leaves the centre into it.
pub fn render_svg(p: &PetalPermutation, style: &SvgStyle) -> String {
    let l = p.len();
    let half = style.size / 2.0;
    let radius = half * 0.8;
    let mid = (l as u32).div_ceil(2);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = style.size
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="{}"/>"#, style.background);
    let _ = writeln!(out, r#"  <g id="petals" fill="none" stroke-width="{}">"#, style.stroke_width);
    let steps = 48;
    for (j, &h) in p.heights().iter().enumerate() {
        let colour = match h.cmp(&mid) {
            std::cmp::Ordering::Less => style.low,
            std::cmp::Ordering::Equal => style.middle,
            std::cmp::Ordering::Greater => style.high,
        };
        // Petal j spans θ ∈ [(2j-1)π/2L, (2j+1)π/2L], traced at doubled
        // angle spacing so consecutive petals sit next to each other.
        let centre = 2.0 * std::f64::consts::PI * j as f64 / l as f64;
        let width = std::f64::consts::PI / l as f64;
        let mut d = String::new();
        for k in 0..=steps {
            let theta = -width / 2.0 + width * k as f64 / steps as f64;
            let rho = radius * (l as f64 * theta).cos();
            let (x, y) = (half + rho * (centre + theta).cos(), half - rho * (centre + theta).sin());
            let _ = write!(d, "{}{x:.2},{y:.2} ", if k == 0 { "M" } else { "L" });
        }
        let _ = writeln!(out, r#"    <path class="petal" stroke="{colour}" d="{}"/>"#, d.trim_end());
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g id="heights" font-family="sans-serif" font-size="14" fill="{}" text-anchor="middle">"#, style.label);
    for (j, &h) in p.heights().iter().enumerate() {
        let centre = 2.0 * std::f64::consts::PI * j as f64 / l as f64;
        let (x, y) = (half + radius * 1.12 * centre.cos(), half - radius * 1.12 * centre.sin() + 5.0);
        let _ = writeln!(out, r#"    <text class="height" x="{x:.2}" y="{y:.2}">{h}</text>"#);
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_counts() {
        for heights in [vec![1, 2, 3], vec![1, 3, 5, 2, 4]] {
            let p = PetalPermutation::new(heights.clone()).unwrap();
            let svg = render_svg(&p, &SvgStyle::default());
            assert_eq!(svg.matches(r#"class="petal""#).count(), heights.len());
            assert_eq!(svg.matches(r#"class="height""#).count(), heights.len());
            assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        }
    }

    #[test]
    fn deterministic() {
        let p = PetalPermutation::new(vec![1, 3, 5, 2, 4]).unwrap();
        assert_eq!(render_svg(&p, &SvgStyle::default()), render_svg(&p, &SvgStyle::default()));
    }
}
