//! CSV, JSON and SVG renderings of a [`SpectrumResult`].

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::radiation::{SpectralPoint, SpectrumResult};

/// Version of the JSON layout.
pub const ARTIFACT_VERSION: u32 = 1;

pub const CSV_HEADER: [&str; 3] = ["omega", "power_density", "photon_rate_density"];

fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Header plus one row per point, every value with 17 significant digits.
pub fn write_spectrum_csv_to<W: Write>(result: &SpectrumResult, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in &result.points {
        w.write_record([full(p.omega), full(p.power_density), full(p.photon_rate_density)])?;
    }
    w.flush()
}

pub fn write_spectrum_csv(result: &SpectrumResult, path: &Path) -> io::Result<()> {
    let mut buf = Vec::new();
    write_spectrum_csv_to(result, &mut buf)?;
    fs::write(path, buf)
}

#[derive(Serialize)]
struct JsonDoc<'a, M: Serialize> {
    meta: JsonMeta<'a, M>,
    points: &'a [SpectralPoint],
}

#[derive(Serialize)]
struct JsonMeta<'a, M: Serialize> {
    artifact_version: u32,
    generator: &'static str,
    dimensionality: &'static str,
    medium: &'a str,
    particle: &'a str,
    unit_mode: &'static str,
    doubled_prefactor: bool,
    convention: &'a str,
    inputs: M,
}

/// JSON document mirroring the CSV columns, with a `meta` block describing
/// the inputs. `inputs` is embedded verbatim.
pub fn spectrum_json<M: Serialize>(result: &SpectrumResult, inputs: M) -> String {
    let doc = JsonDoc {
        meta: JsonMeta {
            artifact_version: ARTIFACT_VERSION,
            generator: concat!("cerenkov ", env!("CARGO_PKG_VERSION")),
            dimensionality: result.dimensionality.as_str(),
            medium: &result.medium_desc,
            particle: &result.particle_desc,
            unit_mode: result.unit_mode.as_str(),
            doubled_prefactor: result.doubled_prefactor,
            convention: &result.convention,
            inputs,
        },
        points: &result.points,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("spectrum serializes");
    s.push('\n');
    s
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;

/// Standalone SVG of `power_density` against `omega` on linear axes.
/// Returns `None` for fewer than two points.
pub fn render_svg(result: &SpectrumResult) -> Option<String> {
    let pts = &result.points;
    if pts.len() < 2 {
        return None;
    }
    let (x_min, x_max) = (pts[0].omega, pts[pts.len() - 1].omega);
    let mut y_min = pts.iter().map(|p| p.power_density).fold(f64::INFINITY, f64::min);
    let mut y_max = pts.iter().map(|p| p.power_density).fold(f64::NEG_INFINITY, f64::max);
    if y_max == y_min {
        // flat spectrum: centre it
        let pad = if y_max == 0.0 { 1.0 } else { 0.5 * y_max.abs() };
        y_min -= pad;
        y_max += pad;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + plot_w * (x - x_min) / (x_max - x_min);
    let sy = |y: f64| TOP + plot_h * (1.0 - (y - y_min) / (y_max - y_min));

    let mut poly = String::new();
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            poly.push(' ');
        }
        write!(poly, "{},{}", sx(p.omega), sy(p.power_density)).unwrap();
    }

    let title = format!(
        "{} spectral power: {}, {}",
        result.dimensionality.as_str(),
        escape(&result.medium_desc),
        escape(&result.particle_desc)
    );
    let bottom = TOP + plot_h;
    let right = LEFT + plot_w;
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(s, "<title>{title}</title>").unwrap();
    writeln!(s, r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##).unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="28" font-family="sans-serif" font-size="14" text-anchor="middle">{title}</text>"#,
        WIDTH / 2.0
    )
    .unwrap();
    writeln!(s, r##"<g stroke="#000000" stroke-width="1">"##).unwrap();
    writeln!(s, r#"<line x1="{LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}"/>"#).unwrap();
    writeln!(s, r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{bottom}"/>"#).unwrap();
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g font-family="sans-serif" font-size="11">"#).unwrap();
    writeln!(s, r#"<text x="{LEFT}" y="{}" text-anchor="middle">{x_min:.4e}</text>"#, bottom + 16.0).unwrap();
    writeln!(s, r#"<text x="{right}" y="{}" text-anchor="middle">{x_max:.4e}</text>"#, bottom + 16.0).unwrap();
    writeln!(s, r#"<text x="{}" y="{bottom}" text-anchor="end">{y_min:.4e}</text>"#, LEFT - 6.0).unwrap();
    writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{y_max:.4e}</text>"#, LEFT - 6.0, TOP + 4.0).unwrap();
    writeln!(s, "</g>").unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">omega (angular frequency)</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 16.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="20" y="{y}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 20 {y})">P(omega) (spectral power)</text>"#,
        y = TOP + plot_h / 2.0
    )
    .unwrap();
    writeln!(s, r##"<polyline fill="none" stroke="#1f4e9c" stroke-width="2" points="{poly}"/>"##).unwrap();
    writeln!(s, "</svg>").unwrap();
    Some(s)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
