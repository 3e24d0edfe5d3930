//! SVG 1.1 output.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::tile::TiledDrawing;

/// Stroke colours keyed by circuit index.
pub const PALETTE: [&str; 8] = ["#1b1b1b", "#8c8c8c", "#c0392b", "#2e86c1", "#28b463", "#b7950b", "#7d3c98", "#d35400"];

fn f(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn to_svg(t: &TiledDrawing, color_circuits: bool) -> String {
    let w = t.width.to_f64().unwrap_or(1.0);
    let h = t.height.to_f64().unwrap_or(1.0);
    let (tw, th) = (w * t.kx as f64, h * t.ky as f64);
    let margin = 0.05 * w.max(h);
    let stroke = 0.006 * w.max(h);
    let pt = |i: usize| {
        let (x, y) = &t.points[i];
        (x.to_f64().unwrap() + margin, th - y.to_f64().unwrap() + margin)
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        f(tw + 2.0 * margin),
        f(th + 2.0 * margin),
        f(tw + 2.0 * margin),
        f(th + 2.0 * margin)
    );
    let _ = writeln!(
        out,
        r##"<g fill="none" stroke="#999999" stroke-width="{}" stroke-dasharray="{} {}">"##,
        f(stroke / 2.0),
        f(stroke * 3.0),
        f(stroke * 2.0)
    );
    for cy in 0..t.ky {
        for cx in 0..t.kx {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                f(margin + cx as f64 * w),
                f(margin + th - (cy + 1) as f64 * h),
                f(w),
                f(h)
            );
        }
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, r#"<g stroke-width="{}" stroke-linecap="round">"#, f(stroke));
    for &(a, b, c) in &t.segments {
        let ((x1, y1), (x2, y2)) = (pt(a), pt(b));
        let color = if color_circuits { PALETTE[c % PALETTE.len()] } else { PALETTE[0] };
        let _ =
            writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"/>"#, f(x1), f(y1), f(x2), f(y2), color);
    }
    out.push_str("</g>\n<g fill=\"#1b1b1b\">\n");
    for &v in &t.vertex_points {
        let (x, y) = pt(v);
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, f(x), f(y), f(stroke * 2.5));
    }
    out.push_str("</g>\n</svg>\n");
    out
}
