use std::collections::{HashMap, HashSet, VecDeque};

use super::from_faces;
use crate::embedding::{Mode, Tessellation};
use crate::error::{Error, Result};

const SNAP: f64 = 1e-6;

/// Polygons given by coordinates, with coincident corners merged.
///
/// Used to describe a large piece of a periodic tiling and then cut a
/// patch out of it with [`PolygonSoup::ball`].
#[derive(Clone, Debug, Default)]
pub struct PolygonSoup {
    points: Vec<(f64, f64)>,
    cells: HashMap<(i64, i64), Vec<usize>>,
    polygons: Vec<Vec<usize>>,
    seen: HashSet<Vec<usize>>,
}

impl PolygonSoup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn polygons(&self) -> &[Vec<usize>] {
        &self.polygons
    }

    fn point_id(&mut self, p: (f64, f64)) -> usize {
        let key = ((p.0 / SNAP).round() as i64, (p.1 / SNAP).round() as i64);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(key.0 + dx, key.1 + dy)) {
                    for &id in ids {
                        let q = self.points[id];
                        if (q.0 - p.0).abs() < SNAP && (q.1 - p.1).abs() < SNAP {
                            return id;
                        }
                    }
                }
            }
        }
        let id = self.points.len();
        self.points.push(p);
        self.cells.entry(key).or_default().push(id);
        id
    }

    /// Adds a polygon, reorienting it clockwise. Duplicate polygons (same
    /// corner set) are ignored.
    pub fn add_polygon(&mut self, corners: &[(f64, f64)]) {
        let mut ids: Vec<usize> = corners.iter().map(|&p| self.point_id(p)).collect();
        let area2: f64 = (0..ids.len())
            .map(|i| {
                let a = self.points[ids[i]];
                let b = self.points[ids[(i + 1) % ids.len()]];
                a.0 * b.1 - b.0 * a.1
            })
            .sum();
        if area2 > 0.0 {
            ids.reverse();
        }
        let mut key = ids.clone();
        key.sort_unstable();
        if !self.seen.insert(key) {
            return;
        }
        self.polygons.push(ids);
    }

    fn nearest_point(&self, p: (f64, f64)) -> Option<usize> {
        let dist = |q: (f64, f64)| (q.0 - p.0).powi(2) + (q.1 - p.1).powi(2);
        (0..self.points.len()).min_by(|&a, &b| {
            dist(self.points[a])
                .partial_cmp(&dist(self.points[b]))
                .expect("finite coordinates")
                .then(a.cmp(&b))
        })
    }

    /// Incident polygons of each point, sorted by angle around it.
    fn stars(&self) -> Vec<Vec<usize>> {
        let mut stars = vec![Vec::new(); self.points.len()];
        for (pi, poly) in self.polygons.iter().enumerate() {
            for &v in poly {
                stars[v].push(pi);
            }
        }
        let centroid = |pi: usize| {
            let poly = &self.polygons[pi];
            let n = poly.len() as f64;
            let (sx, sy) = poly
                .iter()
                .fold((0.0, 0.0), |acc, &v| (acc.0 + self.points[v].0, acc.1 + self.points[v].1));
            (sx / n, sy / n)
        };
        for (v, star) in stars.iter_mut().enumerate() {
            let o = self.points[v];
            star.sort_by(|&a, &b| {
                let (ca, cb) = (centroid(a), centroid(b));
                let ta = (ca.1 - o.1).atan2(ca.0 - o.0);
                let tb = (cb.1 - o.1).atan2(cb.0 - o.0);
                ta.partial_cmp(&tb).expect("finite angles")
            });
        }
        stars
    }

    /// Cuts out the polygons within `radius` face layers of the point
    /// nearest to `seed`: layer 1 is the star of that point, and each further
    /// layer adds every polygon sharing a corner with the previous ones.
    /// Pinches (a vertex whose selected polygons do not form one fan) are
    /// filled so the result is a disk.
    ///
    /// The soup must extend well past the selected region; polygons on the
    /// soup's own rim have incomplete stars.
    pub fn ball(&self, seed: (f64, f64), radius: usize) -> Result<Tessellation> {
        if radius == 0 {
            return Err(Error::InvalidParameter("radius must be at least 1".into()));
        }
        let start = self
            .nearest_point(seed)
            .ok_or_else(|| Error::InvalidParameter("empty polygon soup".into()))?;
        let stars = self.stars();

        let mut selected = vec![false; self.polygons.len()];
        let mut frontier: VecDeque<usize> = VecDeque::new();
        for &pi in &stars[start] {
            selected[pi] = true;
            frontier.push_back(pi);
        }
        for _ in 1..radius {
            let mut next = VecDeque::new();
            for pi in frontier {
                for &v in &self.polygons[pi] {
                    for &qi in &stars[v] {
                        if !selected[qi] {
                            selected[qi] = true;
                            next.push_back(qi);
                        }
                    }
                }
            }
            frontier = next;
        }

        // Fill pinches: at each vertex keep only the largest unselected run.
        loop {
            let mut changed = false;
            for star in &stars {
                let flags: Vec<bool> = star.iter().map(|&pi| selected[pi]).collect();
                if !flags.iter().any(|&s| s) || flags.iter().all(|&s| s) {
                    continue;
                }
                let n = flags.len();
                let first_sel = flags.iter().position(|&s| s).expect("some selected");
                let mut gaps: Vec<Vec<usize>> = Vec::new();
                let mut current: Vec<usize> = Vec::new();
                for step in 1..=n {
                    let i = (first_sel + step) % n;
                    if flags[i] {
                        if !current.is_empty() {
                            gaps.push(std::mem::take(&mut current));
                        }
                    } else {
                        current.push(star[i]);
                    }
                }
                if gaps.len() > 1 {
                    let largest = (0..gaps.len())
                        .max_by_key(|&g| (gaps[g].len(), std::cmp::Reverse(g)))
                        .expect("gaps");
                    for (g, gap) in gaps.iter().enumerate() {
                        if g != largest {
                            for &pi in gap {
                                selected[pi] = true;
                            }
                        }
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let mut remap: HashMap<usize, usize> = HashMap::new();
        let mut faces = Vec::new();
        for (pi, poly) in self.polygons.iter().enumerate() {
            if !selected[pi] {
                continue;
            }
            faces.push(
                poly.iter()
                    .map(|&v| {
                        let next = remap.len();
                        *remap.entry(v).or_insert(next)
                    })
                    .collect(),
            );
        }
        from_faces(remap.len(), &faces, Mode::Patch)
    }
}
