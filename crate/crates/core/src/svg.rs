//! Schematic SVG pictures of a factorization.
//!
//! Holes sit left to right inside the outer boundary. Every cycle is drawn
//! as the round curve of its base; a cycle moved by a nontrivial word gets a
//! dashed outline and a badge spelling out that word. No attempt is made to
//! draw the moved curve itself.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use crate::format::PalfDocument;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("no factorization named `{0}`")]
    UnknownPalf(String),
}

const SPACING: f64 = 90.0;
const MARGIN: f64 = 70.0;
const HOLE_R: f64 = 12.0;
const PALETTE: &[&str] = &[
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(doc: &PalfDocument, name: &str) -> Result<String, RenderError> {
    let decl = doc
        .palf_decls()
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| RenderError::UnknownPalf(name.to_string()))?;
    let holes = doc.surface().holes();
    let n = decl.cycles.len();
    let badges: Vec<(usize, String)> = decl
        .cycles
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            let curve = doc.curve(c)?;
            (!curve.conjugator().is_empty()).then(|| (i, format!("{c} = {curve}")))
        })
        .collect();

    let disk_cx = MARGIN + SPACING * (holes as f64 + 1.0) / 2.0;
    let disk_rx = SPACING * (holes as f64 + 1.0) / 2.0 + 10.0;
    let disk_ry = 70.0 + 8.0 * n as f64;
    let disk_cy = 50.0 + disk_ry;
    let width = 2.0 * MARGIN + SPACING * (holes as f64 + 1.0);
    let height = disk_cy + disk_ry + 30.0 + 18.0 * badges.len() as f64;
    let hole_x = |i: usize| MARGIN + SPACING * i as f64;

    let mut out = String::new();
    let w = &mut out;
    writeln!(
        w,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="13">"##
    )
    .unwrap();
    let product: Vec<String> = decl.cycles.iter().rev().map(|c| format!("t({c})")).collect();
    let title = if product.is_empty() {
        "identity".to_string()
    } else {
        product.join(" ")
    };
    writeln!(
        w,
        r##"<text x="{MARGIN:.0}" y="24" font-weight="bold">{}: {}</text>"##,
        escape(name),
        escape(&title)
    )
    .unwrap();
    writeln!(
        w,
        r##"<ellipse class="boundary" data-index="0" cx="{disk_cx:.1}" cy="{disk_cy:.1}" rx="{disk_rx:.1}" ry="{disk_ry:.1}" fill="none" stroke="black" stroke-width="2"/>"##
    )
    .unwrap();
    for i in 1..=holes {
        writeln!(
            w,
            r##"<circle class="boundary" data-index="{i}" cx="{:.1}" cy="{disk_cy:.1}" r="{HOLE_R}" fill="#eeeeee" stroke="black" stroke-width="2"/>"##,
            hole_x(i)
        )
        .unwrap();
        writeln!(
            w,
            r##"<text x="{:.1}" y="{:.1}" text-anchor="middle">{i}</text>"##,
            hole_x(i),
            disk_cy + 4.0
        )
        .unwrap();
    }

    // cycles on the same base are nested so none hides another
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, cname) in decl.cycles.iter().enumerate() {
        let curve = doc.curve(cname).expect("declared");
        let (lo, hi) = curve.base();
        let layer = {
            let k = seen.entry((lo, hi)).or_insert(0);
            *k += 1;
            *k - 1
        };
        let pad = 8.0 * layer as f64 + 3.0 * i as f64;
        let cx = (hole_x(lo) + hole_x(hi)) / 2.0;
        let rx = (hole_x(hi) - hole_x(lo)) / 2.0 + HOLE_R + 16.0 + pad;
        let ry = HOLE_R + 14.0 + 6.0 * (hi - lo) as f64 + pad;
        let color = PALETTE[i % PALETTE.len()];
        let dash = if curve.conjugator().is_empty() {
            ""
        } else {
            r##" stroke-dasharray="6 3""##
        };
        writeln!(
            w,
            r##"<ellipse class="cycle" data-name="{}" data-order="{}" cx="{cx:.1}" cy="{disk_cy:.1}" rx="{rx:.1}" ry="{ry:.1}" fill="none" stroke="{color}" stroke-width="1.5"{dash}/>"##,
            escape(cname),
            i + 1
        )
        .unwrap();
        writeln!(
            w,
            r##"<text class="label" x="{cx:.1}" y="{:.1}" text-anchor="middle" fill="{color}">{}</text>"##,
            disk_cy - ry - 4.0,
            escape(cname)
        )
        .unwrap();
    }
    for (k, (i, text)) in badges.iter().enumerate() {
        writeln!(
            w,
            r##"<text class="badge" x="{MARGIN:.0}" y="{:.1}" fill="{}">{}</text>"##,
            disk_cy + disk_ry + 28.0 + 18.0 * k as f64,
            PALETTE[i % PALETTE.len()],
            escape(text)
        )
        .unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    Ok(out)
}
