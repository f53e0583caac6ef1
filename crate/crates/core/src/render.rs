//! SVG rendering of regions and the distributions on them.
//!
//! Output is a pure function of the inputs: records are drawn in sorted
//! order and every coordinate is printed with three decimals.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::classifier::Glider;
use crate::distributions::{Parity, ParityDistribution, RootDistribution};
use crate::lattice::{AxialPoint, Face, Region};
use crate::pauli::PauliLabelling;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error("epsilon must lie strictly between 0 and 0.5, got {0}")]
    Epsilon(f64),
    #[error("scale must be positive, got {0}")]
    Scale(f64),
    #[error("{layer} undefined on {at}")]
    DomainMismatch { layer: Layer, at: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Faces,
    Parity,
    Roots,
    Labels,
    Gliders,
}

impl Layer {
    pub const ALL: [Layer; 5] = [Layer::Faces, Layer::Parity, Layer::Roots, Layer::Labels, Layer::Gliders];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Faces => "faces",
            Layer::Parity => "parity",
            Layer::Roots => "roots",
            Layer::Labels => "labels",
            Layer::Gliders => "gliders",
        }
    }
}

impl std::fmt::Display for Layer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Layer::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| format!("unknown layer {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Pixels per lattice edge.
    pub scale: f64,
    /// Half-length of a root segment as a fraction of an edge.
    pub epsilon: f64,
    pub layers: BTreeSet<Layer>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { scale: 40.0, epsilon: 0.2, layers: Layer::ALL.into_iter().collect() }
    }
}

/// What to draw. Layers without data are skipped.
#[derive(Debug, Clone, Copy)]
pub struct RenderInputs<'a> {
    pub region: &'a Region,
    pub parity: Option<&'a ParityDistribution>,
    pub roots: Option<&'a RootDistribution>,
    pub labels: Option<&'a PauliLabelling>,
    pub gliders: &'a [Glider],
}

impl<'a> RenderInputs<'a> {
    pub fn new(region: &'a Region) -> Self {
        RenderInputs { region, parity: None, roots: None, labels: None, gliders: &[] }
    }
}

const SQRT3_2: f64 = 0.866_025_403_784_438_6;
const MARGIN: f64 = 0.5;

/// Cartesian position of an axial point, y pointing up, unit edge length.
pub fn to_cartesian(p: AxialPoint) -> (f64, f64) {
    (p.a as f64 + p.b as f64 / 2.0, p.b as f64 * SQRT3_2)
}

fn centroid(f: Face) -> (f64, f64) {
    let c = f.corners().map(to_cartesian);
    ((c[0].0 + c[1].0 + c[2].0) / 3.0, (c[0].1 + c[1].1 + c[2].1) / 3.0)
}

struct Canvas {
    scale: f64,
    min_x: f64,
    max_y: f64,
}

impl Canvas {
    fn xy(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x + MARGIN) * self.scale, (self.max_y - y + MARGIN) * self.scale)
    }

    fn polygon(&self, f: Face) -> String {
        let pts: Vec<String> = f
            .corners()
            .iter()
            .map(|c| {
                let (x, y) = self.xy(to_cartesian(*c));
                format!("{x:.3},{y:.3}")
            })
            .collect();
        pts.join(" ")
    }
}

fn validate(inputs: &RenderInputs<'_>, spec: &RenderSpec) -> Result<(), RenderError> {
    if !(spec.epsilon > 0.0 && spec.epsilon < 0.5) {
        return Err(RenderError::Epsilon(spec.epsilon));
    }
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(RenderError::Scale(spec.scale));
    }
    if let Some(p) = inputs.parity {
        if let Some(f) = inputs.region.faces().iter().find(|f| p.get(**f).is_none()) {
            return Err(RenderError::DomainMismatch { layer: Layer::Parity, at: f.to_string() });
        }
    }
    if let Some(d) = inputs.roots {
        if let Some(x) = inputs.region.vertex_set().into_iter().find(|x| d.get(*x).is_none()) {
            return Err(RenderError::DomainMismatch { layer: Layer::Roots, at: x.to_string() });
        }
    }
    if let Some(l) = inputs.labels {
        if let Some(f) = inputs.region.faces().iter().find(|f| l.get(**f).is_none()) {
            return Err(RenderError::DomainMismatch { layer: Layer::Labels, at: f.to_string() });
        }
    }
    Ok(())
}

/// Render the inputs as an SVG document.
///
/// Faces are outlined, odd faces carry a "1", each root `δ(x)` is the
/// segment from `x - ε·δ(x)` to `x + ε·δ(x)`, and labels sit at face centroids.
pub fn render(inputs: &RenderInputs<'_>, spec: &RenderSpec) -> Result<String, RenderError> {
    validate(inputs, spec)?;
    let vertices = inputs.region.vertex_set();
    let points: Vec<(f64, f64)> = vertices.iter().map(|p| to_cartesian(*p)).collect();
    let fold = |init: f64, pick: fn(&(f64, f64)) -> f64, op: fn(f64, f64) -> f64| {
        points.iter().map(pick).fold(init, op)
    };
    let (min_x, max_x) = if points.is_empty() {
        (0.0, 0.0)
    } else {
        (fold(f64::INFINITY, |p| p.0, f64::min), fold(f64::NEG_INFINITY, |p| p.0, f64::max))
    };
    let (min_y, max_y) = if points.is_empty() {
        (0.0, 0.0)
    } else {
        (fold(f64::INFINITY, |p| p.1, f64::min), fold(f64::NEG_INFINITY, |p| p.1, f64::max))
    };
    let canvas = Canvas { scale: spec.scale, min_x, max_y };
    let width = (max_x - min_x + 2.0 * MARGIN) * spec.scale;
    let height = (max_y - min_y + 2.0 * MARGIN) * spec.scale;
    let font = spec.scale * 0.3;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let show = |l: Layer| spec.layers.contains(&l);

    if show(Layer::Faces) {
        out.push_str(r##"<g id="faces" fill="none" stroke="#888" stroke-width="1">"##);
        out.push('\n');
        for f in inputs.region.faces() {
            let _ = writeln!(out, r#"<polygon data-face="{f}" points="{}"/>"#, canvas.polygon(*f));
        }
        out.push_str("</g>\n");
    }

    if show(Layer::Gliders) && !inputs.gliders.is_empty() {
        out.push_str(r##"<g id="gliders" fill="#f4c430" fill-opacity="0.35" stroke="none">"##);
        out.push('\n');
        for g in inputs.gliders {
            for f in g.faces() {
                let _ = writeln!(out, r#"<polygon data-glider="{:?}" points="{}"/>"#, g.kind, canvas.polygon(f));
            }
        }
        out.push_str("</g>\n");
    }

    if show(Layer::Parity) {
        if let Some(p) = inputs.parity {
            let _ = writeln!(out, r#"<g id="parity" font-size="{font:.3}" text-anchor="middle" dominant-baseline="central">"#);
            for f in inputs.region.faces() {
                if p.get(*f) == Some(Parity::Odd) {
                    let (x, y) = canvas.xy(centroid(*f));
                    let _ = writeln!(out, r#"<text x="{x:.3}" y="{y:.3}">1</text>"#);
                }
            }
            out.push_str("</g>\n");
        }
    }

    if show(Layer::Labels) {
        if let Some(l) = inputs.labels {
            let _ = writeln!(out, r#"<g id="labels" font-size="{font:.3}" text-anchor="middle" dominant-baseline="central">"#);
            for f in inputs.region.faces() {
                if let Some(label) = l.get(*f) {
                    let (x, y) = canvas.xy(centroid(*f));
                    let _ = writeln!(out, r#"<text x="{x:.3}" y="{y:.3}">{label}</text>"#);
                }
            }
            out.push_str("</g>\n");
        }
    }

    if show(Layer::Roots) {
        if let Some(d) = inputs.roots {
            out.push_str(r##"<g id="roots" stroke="#c00" stroke-width="3" stroke-linecap="round">"##);
            out.push('\n');
            for x in &vertices {
                let Some(dir) = d.get(*x) else { continue };
                let (px, py) = to_cartesian(*x);
                let (vx, vy) = to_cartesian(dir.vector());
                let e = spec.epsilon;
                let (x1, y1) = canvas.xy((px - e * vx, py - e * vy));
                let (x2, y2) = canvas.xy((px + e * vx, py + e * vy));
                let _ = writeln!(
                    out,
                    r#"<line data-vertex="{x}" data-root="{dir}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
                );
            }
            out.push_str("</g>\n");
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
