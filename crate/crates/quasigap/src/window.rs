//! Convex planar windows in internal space.
//!
//! A window is an open convex polygon or an open disc that contains the
//! origin strictly in its interior. It exposes the support data
//! `l_W(theta) = r(theta) * (-nu(theta), 1)` (the x-axis projection of the
//! window rotated by `-theta`), the polar dual, area, and linear images.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Tiling presets with their internal-space deformation `g1`, physical
/// matrix `g2`, and underlying field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TilingPreset {
    /// Ammann-Beenker: regular octagon over `Q(sqrt(2))`.
    AmmannBeenker,
    /// Gähler shield: regular dodecagon over `Q(sqrt(3))`.
    GahlerShield,
    /// Tübingen triangle: regular decagon over `Q(sqrt(5))`.
    TubingenTriangle,
}

impl TilingPreset {
    pub fn parse(name: &str) -> Result<TilingPreset> {
        match name.to_ascii_lowercase().as_str() {
            "ab" | "ammann-beenker" | "ammann_beenker" => Ok(TilingPreset::AmmannBeenker),
            "gh" | "gahler-shield" | "gahler_shield" => Ok(TilingPreset::GahlerShield),
            "tt" | "tubingen-triangle" | "tubingen_triangle" => Ok(TilingPreset::TubingenTriangle),
            other => Err(Error::Validation(format!("unknown preset '{other}'"))),
        }
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            TilingPreset::AmmannBeenker => "ab",
            TilingPreset::GahlerShield => "gh",
            TilingPreset::TubingenTriangle => "tt",
        }
    }

    /// Squarefree `d` of the field the preset lives over.
    pub fn field_d(&self) -> i64 {
        match self {
            TilingPreset::AmmannBeenker => 2,
            TilingPreset::GahlerShield => 3,
            TilingPreset::TubingenTriangle => 5,
        }
    }

    /// Number of vertices of the base regular polygon.
    pub fn ngon(&self) -> usize {
        match self {
            TilingPreset::AmmannBeenker => 8,
            TilingPreset::GahlerShield => 12,
            TilingPreset::TubingenTriangle => 10,
        }
    }

    /// Circumradius of the base polygon.
    pub fn circumradius(&self) -> f64 {
        match self {
            TilingPreset::AmmannBeenker => (1.0 + 0.5f64.sqrt()).sqrt(),
            TilingPreset::GahlerShield => (2.0 + 3f64.sqrt()).sqrt(),
            TilingPreset::TubingenTriangle => {
                let tau = (1.0 + 5f64.sqrt()) / 2.0;
                tau * ((2.0 + tau) / 5.0).sqrt()
            }
        }
    }

    /// Internal-space deformation applied after translating the base polygon.
    pub fn g1(&self) -> [[f64; 2]; 2] {
        match self {
            TilingPreset::AmmannBeenker => [[1.0, 0.0], [1.0, 2f64.sqrt()]],
            TilingPreset::GahlerShield => [[1.0, 0.0], [3f64.sqrt(), 2.0]],
            TilingPreset::TubingenTriangle => {
                let tau = (1.0 + 5f64.sqrt()) / 2.0;
                let s = ((2.0 + tau) / 5.0).sqrt();
                [[1.0, 0.0], [s * tau, 2.0 * s]]
            }
        }
    }

    /// Physical-space matrix applied to the projected points.
    pub fn g2(&self) -> [[f64; 2]; 2] {
        match self {
            TilingPreset::AmmannBeenker => {
                let c = 0.5f64.sqrt();
                [[1.0, 0.0], [c, c]]
            }
            TilingPreset::GahlerShield => [[1.0, 0.0], [3f64.sqrt() / 2.0, 0.5]],
            TilingPreset::TubingenTriangle => {
                let tau = (1.0 + 5f64.sqrt()) / 2.0;
                [[1.0, 0.0], [(tau - 1.0) / 2.0, (2.0 + tau).sqrt() / 2.0]]
            }
        }
    }

    /// Vertices of the base regular N-gon (counterclockwise).
    pub fn base_vertices(&self) -> Vec<[f64; 2]> {
        let n = self.ngon();
        let r0 = self.circumradius();
        (0..n)
            .map(|k| {
                let ang = 2.0 * std::f64::consts::PI * (1.0 / (2 * n) as f64 + k as f64 / n as f64);
                [r0 * ang.cos(), r0 * ang.sin()]
            })
            .collect()
    }
}

/// Row-vector action `v * g`.
pub fn apply_matrix(v: [f64; 2], g: &[[f64; 2]; 2]) -> [f64; 2] {
    [
        v[0] * g[0][0] + v[1] * g[1][0],
        v[0] * g[0][1] + v[1] * g[1][1],
    ]
}

pub fn det2(g: &[[f64; 2]; 2]) -> f64 {
    g[0][0] * g[1][1] - g[0][1] * g[1][0]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Shape {
    /// Strictly convex counterclockwise vertex list.
    Polygon(Vec<[f64; 2]>),
    Disc { center: [f64; 2], radius: f64 },
}

/// Support interval data: `l_W(theta) = r * (-nu, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportInterval {
    pub r: f64,
    pub nu: f64,
}

/// Open convex window containing the origin.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Window {
    shape: Shape,
    provenance: Option<(TilingPreset, [f64; 2])>,
}

impl Window {
    /// Builds a polygon window; vertices may come in either orientation and
    /// are normalized to counterclockwise. Rejects non-convex input and
    /// windows without the origin strictly inside.
    pub fn polygon(mut vertices: Vec<[f64; 2]>) -> Result<Window> {
        if vertices.len() < 3 {
            return Err(Error::Validation("polygon needs at least 3 vertices".into()));
        }
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            if cross <= 0.0 {
                return Err(Error::Validation(
                    "polygon is not strictly convex".into(),
                ));
            }
        }
        let w = Window {
            shape: Shape::Polygon(vertices),
            provenance: None,
        };
        w.require_origin_inside()?;
        Ok(w)
    }

    pub fn disc(center: [f64; 2], radius: f64) -> Result<Window> {
        if !(radius > 0.0) {
            return Err(Error::Validation("disc radius must be positive".into()));
        }
        let w = Window {
            shape: Shape::Disc { center, radius },
            provenance: None,
        };
        w.require_origin_inside()?;
        Ok(w)
    }

    /// The preset internal window `(W_base + w) * g1`.
    pub fn preset(preset: TilingPreset, w: [f64; 2]) -> Result<Window> {
        let g1 = preset.g1();
        let vertices = preset
            .base_vertices()
            .into_iter()
            .map(|v| apply_matrix([v[0] + w[0], v[1] + w[1]], &g1))
            .collect();
        let mut win = Window::polygon(vertices)?;
        win.provenance = Some((preset, w));
        Ok(win)
    }

    fn require_origin_inside(&self) -> Result<()> {
        if !self.contains([0.0, 0.0]) {
            return Err(Error::Validation(
                "window must contain the origin strictly inside".into(),
            ));
        }
        Ok(())
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn provenance(&self) -> Option<(TilingPreset, [f64; 2])> {
        self.provenance
    }

    pub fn area(&self) -> f64 {
        match &self.shape {
            Shape::Polygon(v) => signed_area(v),
            Shape::Disc { radius, .. } => std::f64::consts::PI * radius * radius,
        }
    }

    /// Strict interior membership; boundary points are outside (the window
    /// is open).
    pub fn contains(&self, p: [f64; 2]) -> bool {
        match &self.shape {
            Shape::Polygon(v) => {
                let n = v.len();
                for i in 0..n {
                    let a = v[i];
                    let b = v[(i + 1) % n];
                    let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
                    if cross <= 0.0 {
                        return false;
                    }
                }
                true
            }
            Shape::Disc { center, radius } => {
                let dx = p[0] - center[0];
                let dy = p[1] - center[1];
                dx * dx + dy * dy < radius * radius
            }
        }
    }

    /// Support data of the projection onto the x-axis after rotating by
    /// `-theta`: `r(theta) = sup_w (w_x cos(theta) - w_y sin(theta))` and
    /// `nu(theta) = r(theta + pi) / r(theta)`.
    pub fn support_interval(&self, theta: f64) -> SupportInterval {
        let r = self.support(theta);
        let nu = self.support(theta + std::f64::consts::PI) / r;
        SupportInterval { r, nu }
    }

    /// `sup_{w in W} (w_x cos(theta) - w_y sin(theta))`.
    pub fn support(&self, theta: f64) -> f64 {
        let (c, s) = (theta.cos(), theta.sin());
        match &self.shape {
            Shape::Polygon(v) => v
                .iter()
                .map(|p| p[0] * c - p[1] * s)
                .fold(f64::NEG_INFINITY, f64::max),
            Shape::Disc { center, radius } => center[0] * c - center[1] * s + radius,
        }
    }

    /// Vertical extent `[y_min, y_max]` of the window closure.
    pub fn y_extent(&self) -> (f64, f64) {
        match &self.shape {
            Shape::Polygon(v) => v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |acc, p| {
                (acc.0.min(p[1]), acc.1.max(p[1]))
            }),
            Shape::Disc { center, radius } => (center[1] - radius, center[1] + radius),
        }
    }

    /// Horizontal slice `{x : (x, y) in closure(W)}` as an interval, or
    /// `None` when the line misses the window. Used to bound enumeration;
    /// final membership is always re-checked with `contains`.
    pub fn x_slice(&self, y: f64) -> Option<(f64, f64)> {
        match &self.shape {
            Shape::Polygon(v) => {
                let n = v.len();
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for i in 0..n {
                    let a = v[i];
                    let b = v[(i + 1) % n];
                    if (a[1] - y) * (b[1] - y) <= 0.0 && a[1] != b[1] {
                        let t = (y - a[1]) / (b[1] - a[1]);
                        if (0.0..=1.0).contains(&t) {
                            let x = a[0] + t * (b[0] - a[0]);
                            lo = lo.min(x);
                            hi = hi.max(x);
                        }
                    }
                    if a[1] == y {
                        lo = lo.min(a[0]);
                        hi = hi.max(a[0]);
                    }
                }
                (lo <= hi).then_some((lo, hi))
            }
            Shape::Disc { center, radius } => {
                let dy = y - center[1];
                let h2 = radius * radius - dy * dy;
                (h2 >= 0.0).then(|| {
                    let h = h2.sqrt();
                    (center[0] - h, center[0] + h)
                })
            }
        }
    }

    /// Polar set `W* = { z : z.w <= 1 for all w in W }`. Exact for polygons
    /// (the dual polygon) and origin-centered discs; the polar of an offset
    /// disc is an ellipse and is not representable here.
    pub fn polar_set(&self) -> Result<Window> {
        match &self.shape {
            Shape::Polygon(v) => {
                let n = v.len();
                let mut dual = Vec::with_capacity(n);
                for i in 0..n {
                    let a = v[i];
                    let b = v[(i + 1) % n];
                    // z with z.a = z.b = 1: the dual vertex of edge (a, b).
                    let det = a[0] * b[1] - a[1] * b[0];
                    if det.abs() < 1e-300 {
                        return Err(Error::Validation(
                            "degenerate edge through origin in polar dual".into(),
                        ));
                    }
                    dual.push([(b[1] - a[1]) / det, (a[0] - b[0]) / det]);
                }
                Window::polygon(dual)
            }
            Shape::Disc { center, radius } => {
                if center[0].abs().max(center[1].abs()) > 1e-14 * radius {
                    return Err(Error::Inapplicable(
                        "polar set of an offset disc is an ellipse; not representable".into(),
                    ));
                }
                Window::disc([0.0, 0.0], 1.0 / radius)
            }
        }
    }

    /// Image `W * g` under a nonsingular matrix acting on row vectors.
    pub fn apply_linear(&self, g: &[[f64; 2]; 2]) -> Result<Window> {
        let det = det2(g);
        if det.abs() < 1e-300 {
            return Err(Error::Validation("singular matrix".into()));
        }
        match &self.shape {
            Shape::Polygon(v) => {
                Window::polygon(v.iter().map(|p| apply_matrix(*p, g)).collect())
            }
            Shape::Disc { center, radius } => {
                // Discs stay discs only under similarities.
                let ortho = (g[0][0] - g[1][1]).abs() < 1e-12 && (g[0][1] + g[1][0]).abs() < 1e-12;
                let anti = (g[0][0] + g[1][1]).abs() < 1e-12 && (g[0][1] - g[1][0]).abs() < 1e-12;
                if !(ortho || anti) {
                    return Err(Error::Inapplicable(
                        "linear image of a disc is an ellipse; use a polygon window".into(),
                    ));
                }
                let scale = (g[0][0] * g[0][0] + g[0][1] * g[0][1]).sqrt();
                Window::disc(apply_matrix(*center, g), radius * scale)
            }
        }
    }

    /// Parses the JSON window description used by the command line:
    /// `{"type":"preset","name":"ab","w":[0.8,0.1]}`,
    /// `{"type":"polygon","vertices":[[x,y],...]}` or
    /// `{"type":"disc","center":[x,y],"radius":r}`.
    pub fn from_json(text: &str) -> Result<Window> {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Validation(format!("bad window JSON: {e}")))?;
        let ty = v["type"].as_str().unwrap_or_default();
        match ty {
            "preset" => {
                let name = v["name"]
                    .as_str()
                    .ok_or_else(|| Error::Validation("preset needs a name".into()))?;
                let w = parse_pair(&v["w"]).unwrap_or([0.0, 0.0]);
                Window::preset(TilingPreset::parse(name)?, w)
            }
            "polygon" => {
                let verts = v["vertices"]
                    .as_array()
                    .ok_or_else(|| Error::Validation("polygon needs vertices".into()))?
                    .iter()
                    .map(parse_pair)
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Validation("bad vertex in polygon".into()))?;
                Window::polygon(verts)
            }
            "disc" => {
                let center = parse_pair(&v["center"]).unwrap_or([0.0, 0.0]);
                let radius = v["radius"]
                    .as_f64()
                    .ok_or_else(|| Error::Validation("disc needs a radius".into()))?;
                Window::disc(center, radius)
            }
            other => Err(Error::Validation(format!("unknown window type '{other}'"))),
        }
    }
}

fn parse_pair(v: &serde_json::Value) -> Option<[f64; 2]> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    Some([arr[0].as_f64()?, arr[1].as_f64()?])
}

fn signed_area(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        s += a[0] * b[1] - a[1] * b[0];
    }
    s / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Window {
        Window::polygon(vec![[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]).unwrap()
    }

    #[test]
    fn preset_areas() {
        // Octagon edge 1 has area 2(1+sqrt2); g1 scales by det = sqrt2.
        let ab = Window::preset(TilingPreset::AmmannBeenker, [0.0, 0.0]).unwrap();
        assert!((ab.area() - (4.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);

        let gh = Window::preset(TilingPreset::GahlerShield, [0.0, 0.0]).unwrap();
        assert!((gh.area() - 6.0 * (2.0 + 3f64.sqrt())).abs() < 1e-11);

        assert!(ab.contains([0.0, 0.0]));
    }

    #[test]
    fn preset_edge_lengths() {
        // The base polygons have the prescribed edge lengths before g1.
        for (preset, edge) in [
            (TilingPreset::AmmannBeenker, 1.0),
            (TilingPreset::GahlerShield, 1.0),
            (
                TilingPreset::TubingenTriangle,
                ((2.0 + (1.0 + 5f64.sqrt()) / 2.0) / 5.0).sqrt(),
            ),
        ] {
            let v = preset.base_vertices();
            for i in 0..v.len() {
                let a = v[i];
                let b = v[(i + 1) % v.len()];
                let len = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
                assert!((len - edge).abs() < 1e-12, "{preset:?} edge {len}");
            }
        }
    }

    #[test]
    fn origin_must_be_interior() {
        assert!(Window::preset(TilingPreset::AmmannBeenker, [10.0, 0.0]).is_err());
        assert!(Window::disc([2.0, 0.0], 1.0).is_err());
        assert!(Window::disc([0.5, 0.0], 1.0).is_ok());
    }

    #[test]
    fn membership_is_strict() {
        let d = Window::disc([0.0, 0.0], 1.0).unwrap();
        assert!(d.contains([0.0, 0.0]));
        assert!(!d.contains([1.0, 0.0]));

        let ab = Window::preset(TilingPreset::AmmannBeenker, [0.0, 0.0]).unwrap();
        if let Shape::Polygon(v) = ab.shape() {
            for p in v {
                assert!(!ab.contains(*p));
            }
        }
    }

    #[test]
    fn support_basics() {
        let d = Window::disc([0.0, 0.0], 1.0).unwrap();
        for k in 0..16 {
            let s = d.support_interval(k as f64 * 0.4);
            assert!((s.r - 1.0).abs() < 1e-15);
            assert!((s.nu - 1.0).abs() < 1e-15);
        }

        let sq = square();
        let s = sq.support_interval(0.0);
        assert!((s.r - 1.0).abs() < 1e-15 && (s.nu - 1.0).abs() < 1e-15);

        // Rectangle [-1,2]x[-1,1]: at theta=0 the projection is (-1,2).
        let rect =
            Window::polygon(vec![[2.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [2.0, -1.0]]).unwrap();
        let s = rect.support_interval(0.0);
        assert!((s.r - 2.0).abs() < 1e-15);
        assert!((s.nu - 0.5).abs() < 1e-15);
    }

    #[test]
    fn support_symmetry_relations() {
        let ab = Window::preset(TilingPreset::AmmannBeenker, [0.7, 0.2]).unwrap();
        for k in 0..1000 {
            let th = k as f64 * (2.0 * std::f64::consts::PI / 1000.0);
            let s = ab.support_interval(th);
            let spi = ab.support_interval(th + std::f64::consts::PI);
            assert!((spi.r - s.r * s.nu).abs() < 1e-12 * (1.0 + spi.r.abs()));
            assert!((spi.nu - 1.0 / s.nu).abs() < 1e-12 * (1.0 + spi.nu.abs()));
        }
        // Centrally symmetric window: nu = 1 identically.
        let sym = Window::preset(TilingPreset::AmmannBeenker, [0.0, 0.0]).unwrap();
        for k in 0..1000 {
            let th = k as f64 * 0.006283;
            assert!((sym.support_interval(th).nu - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn polar_duals() {
        let d = Window::disc([0.0, 0.0], 1.0).unwrap();
        let dd = d.polar_set().unwrap();
        assert!((dd.area() - std::f64::consts::PI).abs() < 1e-14);

        let sq = square();
        let dual = sq.polar_set().unwrap();
        assert!((dual.area() - 2.0).abs() < 1e-14);

        // Involution: polar of polar is the original polygon.
        let ab = Window::preset(TilingPreset::AmmannBeenker, [0.3, 0.1]).unwrap();
        let back = ab.polar_set().unwrap().polar_set().unwrap();
        let (Shape::Polygon(v1), Shape::Polygon(v2)) = (ab.shape(), back.shape()) else {
            panic!("expected polygons");
        };
        assert_eq!(v1.len(), v2.len());
        // Same vertex set up to cyclic rotation.
        let offset = v2
            .iter()
            .position(|p| (p[0] - v1[0][0]).abs() + (p[1] - v1[0][1]).abs() < 1e-9)
            .expect("matching vertex");
        for i in 0..v1.len() {
            let q = v2[(offset + i) % v2.len()];
            assert!((v1[i][0] - q[0]).abs() < 1e-12);
            assert!((v1[i][1] - q[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn polar_radial_extent_matches_support() {
        let ab = Window::preset(TilingPreset::AmmannBeenker, [0.4, -0.2]).unwrap();
        let dual = ab.polar_set().unwrap();
        // Radial extent of W* in direction theta equals 1/r(-theta).
        for k in 0..200 {
            let th = k as f64 * 0.0314159;
            let target = 1.0 / ab.support(-th);
            // Bisection on the ray.
            let dir = [th.cos(), th.sin()];
            let mut lo = 0.0;
            let mut hi = 10.0;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if dual.contains([mid * dir[0], mid * dir[1]]) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            assert!((lo - target).abs() < 1e-9, "theta={th}: {lo} vs {target}");
        }
    }

    #[test]
    fn linear_images() {
        let sq = square();
        let same = sq.apply_linear(&[[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert!((same.area() - sq.area()).abs() < 1e-14);
        let scaled = sq.apply_linear(&[[2.0, 0.0], [0.0, 2.0]]).unwrap();
        assert!((scaled.area() - 4.0 * sq.area()).abs() < 1e-12);
        assert!(sq.apply_linear(&[[1.0, 2.0], [2.0, 4.0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let w = Window::from_json(r#"{"type":"preset","name":"ab","w":[0.8,0.1]}"#).unwrap();
        assert!(w.provenance().is_some());
        let p = Window::from_json(r#"{"type":"polygon","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]}"#)
            .unwrap();
        assert!((p.area() - 4.0).abs() < 1e-14);
        let d = Window::from_json(r#"{"type":"disc","center":[0.1,0],"radius":2}"#).unwrap();
        assert!(d.contains([0.0, 0.0]));
        assert!(Window::from_json(r#"{"type":"??"}"#).is_err());
    }
}
