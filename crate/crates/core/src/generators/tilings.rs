//! Patch windows of periodic planar tilings.

use std::f64::consts::PI;

use super::{from_faces, PolygonSoup};
use crate::embedding::{Mode, Tessellation};
use crate::error::{Error, Result};

type Pt = (f64, f64);

fn add(a: Pt, b: Pt) -> Pt {
    (a.0 + b.0, a.1 + b.1)
}

fn sub(a: Pt, b: Pt) -> Pt {
    (a.0 - b.0, a.1 - b.1)
}

fn scale(a: Pt, s: f64) -> Pt {
    (a.0 * s, a.1 * s)
}

fn unit(a: Pt) -> Pt {
    scale(a, 1.0 / a.0.hypot(a.1))
}

fn dir(deg: f64) -> Pt {
    let t = deg * PI / 180.0;
    (t.cos(), t.sin())
}

fn centroid(pts: &[Pt]) -> Pt {
    let n = pts.len() as f64;
    let s = pts.iter().fold((0.0, 0.0), |acc, &p| add(acc, p));
    scale(s, 1.0 / n)
}

/// Triangular lattice with spacing `s`, indices in `-n..=n`.
struct Lattice {
    s: f64,
    n: i64,
}

impl Lattice {
    fn point(&self, i: i64, j: i64) -> Pt {
        add(scale((self.s, 0.0), i as f64), scale((self.s * 0.5, self.s * 3f64.sqrt() / 2.0), j as f64))
    }

    fn points(&self) -> impl Iterator<Item = Pt> + '_ {
        (-self.n..=self.n).flat_map(move |i| (-self.n..=self.n).map(move |j| self.point(i, j)))
    }

    /// Each lattice triangle once, as its three corners.
    fn triangles(&self) -> impl Iterator<Item = [Pt; 3]> + '_ {
        (-self.n..self.n).flat_map(move |i| {
            (-self.n..self.n).flat_map(move |j| {
                [
                    [self.point(i, j), self.point(i + 1, j), self.point(i, j + 1)],
                    [self.point(i + 1, j), self.point(i + 1, j + 1), self.point(i, j + 1)],
                ]
            })
        })
    }

    /// Each lattice edge once, with the third corners of its two triangles.
    fn edges(&self) -> impl Iterator<Item = (Pt, Pt, Pt, Pt)> + '_ {
        let steps = [(1, 0), (0, 1), (-1, 1)];
        (-self.n..=self.n).flat_map(move |i| {
            (-self.n..=self.n).flat_map(move |j| {
                steps.into_iter().map(move |(di, dj)| {
                    let p = self.point(i, j);
                    let q = self.point(i + di, j + dj);
                    let d = sub(q, p);
                    let rot = |deg: f64| {
                        let (c, s) = (dir(deg).0, dir(deg).1);
                        add(p, (d.0 * c - d.1 * s, d.0 * s + d.1 * c))
                    };
                    (p, q, rot(60.0), rot(-60.0))
                })
            })
        })
    }
}

fn check_radius(radius: usize) -> Result<()> {
    if radius == 0 {
        Err(Error::InvalidParameter("radius must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Lattice extent comfortably beyond `radius` face layers.
fn extent(radius: usize) -> i64 {
    2 * radius as i64 + 4
}

/// `width × height` unit squares; every interior vertex is `(4,4,4,4)`.
pub fn square_lattice(width: usize, height: usize) -> Result<Tessellation> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidParameter("square lattice needs at least one square".into()));
    }
    let id = |i: usize, j: usize| j * (width + 1) + i;
    let mut faces = Vec::with_capacity(width * height);
    for j in 0..height {
        for i in 0..width {
            faces.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)]);
        }
    }
    from_faces((width + 1) * (height + 1), &faces, Mode::Patch)
}

/// Kagome tiling: every vertex is `(3,3,6,6)`.
pub fn trihexagonal(radius: usize) -> Result<Tessellation> {
    check_radius(radius)?;
    let lat = Lattice { s: 2.0, n: extent(radius) };
    let mut soup = PolygonSoup::new();
    for c in lat.points() {
        let hex: Vec<Pt> = (0..6).map(|m| add(c, dir(60.0 * m as f64))).collect();
        soup.add_polygon(&hex);
    }
    for [a, b, c] in lat.triangles() {
        soup.add_polygon(&[scale(add(a, b), 0.5), scale(add(b, c), 0.5), scale(add(c, a), 0.5)]);
    }
    soup.ball((0.0, 0.0), radius)
}

/// Rhombille tiling (dual of kagome): vertices `(4,4,4,4,4,4)` and `(4,4,4)`.
/// The window is centered on a degree-6 vertex.
pub fn rhombille(radius: usize) -> Result<Tessellation> {
    check_radius(radius)?;
    let lat = Lattice { s: 1.0, n: extent(radius) };
    let mut soup = PolygonSoup::new();
    for (p, q, r1, r2) in lat.edges() {
        soup.add_polygon(&[p, centroid(&[p, q, r1]), q, centroid(&[p, q, r2])]);
    }
    soup.ball((0.0, 0.0), radius)
}

/// Rhombitrihexagonal tiling: every vertex is `(3,4,4,6)`.
pub fn rhombitrihexagonal(radius: usize) -> Result<Tessellation> {
    check_radius(radius)?;
    let lat = Lattice { s: 1.0 + 3f64.sqrt(), n: extent(radius) };
    let mut soup = PolygonSoup::new();
    for c in lat.points() {
        let hex: Vec<Pt> = (0..6).map(|m| add(c, dir(30.0 + 60.0 * m as f64))).collect();
        soup.add_polygon(&hex);
    }
    for (p, q, _, _) in lat.edges() {
        let d = sub(q, p);
        let theta = d.1.atan2(d.0) * 180.0 / PI;
        soup.add_polygon(&[
            add(p, dir(theta - 30.0)),
            add(q, dir(theta + 210.0)),
            add(q, dir(theta + 150.0)),
            add(p, dir(theta + 30.0)),
        ]);
    }
    for tri in lat.triangles() {
        let c = centroid(&tri);
        let corners: Vec<Pt> = tri.iter().map(|&p| add(p, unit(sub(c, p)))).collect();
        soup.add_polygon(&corners);
    }
    soup.ball((0.0, 0.0), radius)
}

/// Truncated hexagonal tiling: every vertex is `(3,12,12)`.
pub fn tiling_3_12_12(radius: usize) -> Result<Tessellation> {
    check_radius(radius)?;
    let half = 15f64.to_radians();
    let lat = Lattice { s: 1.0 / half.tan(), n: extent(radius) };
    let circumradius = 1.0 / (2.0 * half.sin());
    let mut soup = PolygonSoup::new();
    for c in lat.points() {
        let dodecagon: Vec<Pt> =
            (0..12).map(|m| add(c, scale(dir(15.0 + 30.0 * m as f64), circumradius))).collect();
        soup.add_polygon(&dodecagon);
    }
    for tri in lat.triangles() {
        let c = centroid(&tri);
        let corners: Vec<Pt> =
            tri.iter().map(|&p| add(c, scale(unit(sub(c, p)), 1.0 / 3f64.sqrt()))).collect();
        soup.add_polygon(&corners);
    }
    soup.ball((0.0, 0.0), radius)
}
