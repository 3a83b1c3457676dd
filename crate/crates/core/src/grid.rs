//! Brute-force shortest paths on a discretized window of the cover.
//!
//! The window `[r_min, r_max] x [zeta_min, zeta_max]` is sampled on an
//! `(n_r + 1) x (n_zeta + 1)` node lattice; edges join lattice neighbours and
//! weigh `sqrt(dr^2 + rbar^2 dzeta^2)` with `rbar` the midpoint radius. Query
//! points are attached to the surrounding 4x4 block of nodes. Plain `f64`
//! throughout: this is a cross-check for the exact code, not part of it.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use thiserror::Error;

use crate::cover::CoverPoint;
use crate::rational::{to_f64, Rational};

/// Fraction of the window each query point must keep from every side,
/// measured in grid coordinates.
pub const WINDOW_MARGIN: f64 = 0.1;

/// Headroom below the smaller radius in automatic windows, as `ln(1000)`:
/// through-origin paths dip to `r ~ min(r1, r2) / 1000` before crossing over.
const DIP_DEPTH: f64 = 6.907_755_278_982_137;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GridError {
    #[error("point ({r}, {zeta}) is outside the window or within the 10% margin")]
    OutOfWindow { r: f64, zeta: f64 },
    #[error("point is not standard and exact")]
    NotStandard,
    #[error("invalid grid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Four,
    /// The 8 king moves plus the 8 knight moves.
    EightKnight,
}

impl Connectivity {
    fn offsets(self) -> &'static [(i64, i64)] {
        const FOUR: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
        const SIXTEEN: [(i64, i64); 16] = [
            (1, 0),
            (-1, 0),
            (0, 1),
            (0, -1),
            (1, 1),
            (1, -1),
            (-1, 1),
            (-1, -1),
            (2, 1),
            (2, -1),
            (-2, 1),
            (-2, -1),
            (1, 2),
            (1, -2),
            (-1, 2),
            (-1, -2),
        ];
        match self {
            Connectivity::Four => &FOUR,
            Connectivity::EightKnight => &SIXTEEN,
        }
    }
}

/// How radii are laid out between `r_min` and `r_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spacing {
    Linear,
    /// Uniform in `ln r`. The metric is `r^2 (d(ln r)^2 + dzeta^2)`, so
    /// matching steps in `ln r` and `zeta` gives square cells.
    Geometric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub zeta_min: f64,
    pub zeta_max: f64,
    /// Number of intervals along `r`; there are `n_r + 1` rows of nodes.
    pub n_r: usize,
    pub n_zeta: usize,
    pub connectivity: Connectivity,
    pub spacing: Spacing,
}

impl GridConfig {
    pub fn validate(&self) -> Result<(), GridError> {
        let bad = |m: &str| Err(GridError::InvalidConfig(m.to_string()));
        if !(self.r_min > 0.0 && self.r_min.is_finite()) {
            return bad("r_min must be positive");
        }
        if !(self.r_max > self.r_min && self.r_max.is_finite()) {
            return bad("r_max must exceed r_min");
        }
        if !(self.zeta_max > self.zeta_min && self.zeta_min.is_finite() && self.zeta_max.is_finite()) {
            return bad("zeta_max must exceed zeta_min");
        }
        if self.n_r < 16 || self.n_zeta < 16 {
            return bad("at least 16 intervals per axis");
        }
        Ok(())
    }

    /// Square-celled geometric window around two points, with the margin and
    /// enough depth below the smaller radius for through-origin paths.
    pub fn around(a: (f64, f64), b: (f64, f64), n: usize, connectivity: Connectivity) -> Self {
        let (ua, ub) = (a.0.ln(), b.0.ln());
        let du = (ua - ub).abs();
        let dz = (a.1 - b.1).abs();
        let need = (du + DIP_DEPTH).max(dz).max(1.0);
        let width = need / (1.0 - 2.0 * WINDOW_MARGIN);
        let u_hi = ua.max(ub) + WINDOW_MARGIN * width;
        let z_mid = 0.5 * (a.1 + b.1);
        GridConfig {
            r_min: (u_hi - width).exp(),
            r_max: u_hi.exp(),
            zeta_min: z_mid - 0.5 * width,
            zeta_max: z_mid + 0.5 * width,
            n_r: n,
            n_zeta: n,
            connectivity,
            spacing: Spacing::Geometric,
        }
    }

    pub fn for_points(a: &CoverPoint, b: &CoverPoint, n: usize, connectivity: Connectivity) -> Result<Self, GridError> {
        Ok(Self::around(standard_coords(a)?, standard_coords(b)?, n, connectivity))
    }

    fn axis(&self, r: f64) -> f64 {
        match self.spacing {
            Spacing::Linear => r,
            Spacing::Geometric => r.ln(),
        }
    }

    /// Position of `(r, zeta)` in fractional node indices.
    fn locate(&self, r: f64, zeta: f64) -> (f64, f64) {
        let (lo, hi) = (self.axis(self.r_min), self.axis(self.r_max));
        let x = (self.axis(r) - lo) / (hi - lo) * self.n_r as f64;
        let y = (zeta - self.zeta_min) / (self.zeta_max - self.zeta_min) * self.n_zeta as f64;
        (x, y)
    }

    fn check_inside(&self, p: (f64, f64)) -> Result<(), GridError> {
        let out = Err(GridError::OutOfWindow { r: p.0, zeta: p.1 });
        if p.0.is_nan() || p.0 <= 0.0 {
            return out;
        }
        let (x, y) = self.locate(p.0, p.1);
        let fx = x / self.n_r as f64;
        let fy = y / self.n_zeta as f64;
        let ok = |f: f64| (WINDOW_MARGIN - 1e-12..=1.0 - WINDOW_MARGIN + 1e-12).contains(&f);
        if ok(fx) && ok(fy) {
            Ok(())
        } else {
            out
        }
    }

    fn radii(&self) -> Vec<f64> {
        let n = self.n_r as f64;
        (0..=self.n_r)
            .map(|i| {
                let s = i as f64 / n;
                match self.spacing {
                    Spacing::Linear => self.r_min + (self.r_max - self.r_min) * s,
                    Spacing::Geometric => self.r_min * (self.r_max / self.r_min).powf(s),
                }
            })
            .collect()
    }

    fn angles(&self) -> Vec<f64> {
        let h = (self.zeta_max - self.zeta_min) / self.n_zeta as f64;
        (0..=self.n_zeta).map(|j| self.zeta_min + h * j as f64).collect()
    }
}

fn standard_coords(p: &CoverPoint) -> Result<(f64, f64), GridError> {
    if !p.is_standard_exact() {
        return Err(GridError::NotStandard);
    }
    let value = |x: &crate::lcf::LeviCivita| {
        let zero = Rational::from_integer(0.into());
        x.coefficient(&zero).and_then(|c| c.as_exact().map(to_f64)).unwrap_or(0.0)
    };
    Ok((value(p.r()), value(p.zeta())))
}

/// Length element of the cover metric for a short straight step.
fn step(r1: f64, z1: f64, r2: f64, z2: f64) -> f64 {
    let dr = r2 - r1;
    let rbar = 0.5 * (r1 + r2);
    let dz = z2 - z1;
    (dr * dr + rbar * rbar * dz * dz).sqrt()
}

#[derive(Clone, Copy, PartialEq)]
struct State {
    cost: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other.cost.total_cmp(&self.cost).then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Lattice {
    radii: Vec<f64>,
    angles: Vec<f64>,
    cols: usize,
}

impl Lattice {
    fn node(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    fn coords(&self, node: usize) -> (f64, f64) {
        (self.radii[node / self.cols], self.angles[node % self.cols])
    }

    /// Nodes of the 4x4 block around a point, with the attaching edge weights.
    fn attach(&self, cfg: &GridConfig, p: (f64, f64)) -> Vec<(usize, f64)> {
        let (x, y) = cfg.locate(p.0, p.1);
        let block = |f: f64, n: usize| {
            let base = f.floor() as i64;
            (base - 1..=base + 2).filter(move |&k| k >= 0 && k <= n as i64).map(|k| k as usize)
        };
        let mut out = Vec::with_capacity(16);
        for i in block(x, cfg.n_r) {
            for j in block(y, cfg.n_zeta) {
                let (r, z) = (self.radii[i], self.angles[j]);
                out.push((self.node(i, j), step(p.0, p.1, r, z)));
            }
        }
        out
    }
}

/// Shortest-path length between two standard points of the window.
pub fn oracle_distance(cfg: &GridConfig, a: &CoverPoint, b: &CoverPoint) -> Result<f64, GridError> {
    oracle_distance_f64(cfg, standard_coords(a)?, standard_coords(b)?)
}

/// [`oracle_distance`] on raw `(r, zeta)` coordinates.
pub fn oracle_distance_f64(cfg: &GridConfig, a: (f64, f64), b: (f64, f64)) -> Result<f64, GridError> {
    cfg.validate()?;
    cfg.check_inside(a)?;
    cfg.check_inside(b)?;
    // Always search from the same end so the result is symmetric bit for bit.
    let (src, dst) = match a.partial_cmp(&b) {
        Some(Ordering::Greater) => (b, a),
        _ => (a, b),
    };
    let lattice = Lattice { radii: cfg.radii(), angles: cfg.angles(), cols: cfg.n_zeta + 1 };
    let start = lattice.attach(cfg, src);
    let finish = lattice.attach(cfg, dst);

    let mut best = f64::INFINITY;
    let start_nodes: Vec<usize> = start.iter().map(|&(n, _)| n).collect();
    if finish.iter().any(|(n, _)| start_nodes.contains(n)) {
        best = step(src.0, src.1, dst.0, dst.1);
    }
    let mut exit = vec![f64::INFINITY; lattice.radii.len() * lattice.cols];
    for &(n, w) in &finish {
        exit[n] = w;
    }

    let mut dist = vec![f64::INFINITY; exit.len()];
    let mut heap = BinaryHeap::new();
    for &(n, w) in &start {
        if w < dist[n] {
            dist[n] = w;
            heap.push(State { cost: w, node: n });
        }
    }
    let offsets = cfg.connectivity.offsets();
    let (rows, cols) = (cfg.n_r as i64 + 1, cfg.n_zeta as i64 + 1);
    while let Some(State { cost, node }) = heap.pop() {
        if cost >= best {
            break;
        }
        if cost > dist[node] {
            continue;
        }
        if exit[node].is_finite() {
            best = best.min(cost + exit[node]);
        }
        let (i, j) = ((node / lattice.cols) as i64, (node % lattice.cols) as i64);
        let (r, z) = lattice.coords(node);
        for &(di, dj) in offsets {
            let (ni, nj) = (i + di, j + dj);
            if ni < 0 || nj < 0 || ni >= rows || nj >= cols {
                continue;
            }
            let next = lattice.node(ni as usize, nj as usize);
            let (r2, z2) = lattice.coords(next);
            let c = cost + step(r, z, r2, z2);
            if c < dist[next] {
                dist[next] = c;
                heap.push(State { cost: c, node: next });
            }
        }
    }
    Ok(best)
}

/// Runs independent queries in parallel, each on its own automatic window.
pub fn oracle_batch(
    pairs: &[(CoverPoint, CoverPoint)],
    n: usize,
    connectivity: Connectivity,
) -> Vec<Result<f64, GridError>> {
    pairs
        .par_iter()
        .map(|(a, b)| {
            let cfg = GridConfig::for_points(a, b, n, connectivity)?;
            oracle_distance(&cfg, a, b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord(a: (f64, f64), b: (f64, f64)) -> f64 {
        let dz = (a.1 - b.1).abs();
        if dz < std::f64::consts::PI {
            (a.0 * a.0 + b.0 * b.0 - 2.0 * a.0 * b.0 * dz.cos()).sqrt()
        } else {
            a.0 + b.0
        }
    }

    fn auto(a: (f64, f64), b: (f64, f64), n: usize) -> f64 {
        let cfg = GridConfig::around(a, b, n, Connectivity::EightKnight);
        oracle_distance_f64(&cfg, a, b).unwrap()
    }

    #[test]
    fn radial_segment() {
        let d = auto((1.0, 0.0), (2.0, 0.0), 256);
        assert!((d - 1.0).abs() <= 0.02, "{d}");
    }

    #[test]
    fn dip_through_puncture_in_fixed_window() {
        let cfg = GridConfig {
            r_min: 0.01,
            r_max: 2.5,
            zeta_min: -1.0,
            zeta_max: 5.0,
            n_r: 256,
            n_zeta: 256,
            connectivity: Connectivity::EightKnight,
            spacing: Spacing::Linear,
        };
        let d = oracle_distance_f64(&cfg, (1.0, 0.0), (1.0, 4.0)).unwrap();
        assert!((d - 2.0).abs() <= 0.05, "{d}");
    }

    #[test]
    fn chord_at_angle_one() {
        let d = auto((1.0, 0.0), (1.0, 1.0), 256);
        let exact = 0.958_851_077_208_406;
        assert!((d - exact).abs() / exact < 0.03, "{d}");
    }

    #[test]
    fn symmetric_bit_for_bit() {
        let (a, b) = ((0.7, -1.3), (1.9, 2.2));
        let cfg = GridConfig::around(a, b, 64, Connectivity::EightKnight);
        assert_eq!(oracle_distance_f64(&cfg, a, b).unwrap(), oracle_distance_f64(&cfg, b, a).unwrap());
    }

    #[test]
    fn refinement_and_enrichment_do_not_hurt() {
        let (a, b) = ((0.8, 0.3), (1.6, 2.1));
        let exact = chord(a, b);
        let mut cfg = GridConfig::around(a, b, 128, Connectivity::EightKnight);
        let coarse = oracle_distance_f64(&cfg, a, b).unwrap();
        cfg.n_r = 512;
        cfg.n_zeta = 512;
        let fine = oracle_distance_f64(&cfg, a, b).unwrap();
        assert!((fine - exact).abs() <= (coarse - exact).abs());
        cfg.n_r = 128;
        cfg.n_zeta = 128;
        cfg.connectivity = Connectivity::Four;
        let four = oracle_distance_f64(&cfg, a, b).unwrap();
        assert!(coarse <= four);
    }

    #[test]
    fn rejects_points_near_the_edge() {
        let cfg = GridConfig::around((1.0, 0.0), (1.0, 1.0), 32, Connectivity::EightKnight);
        assert!(matches!(oracle_distance_f64(&cfg, (1.0, 0.0), (1.0, 100.0)), Err(GridError::OutOfWindow { .. })));
        let mut bad = cfg.clone();
        bad.r_min = 0.0;
        assert!(matches!(oracle_distance_f64(&bad, (1.0, 0.0), (1.0, 1.0)), Err(GridError::InvalidConfig(_))));
        bad = cfg;
        bad.n_r = 8;
        assert!(matches!(oracle_distance_f64(&bad, (1.0, 0.0), (1.0, 1.0)), Err(GridError::InvalidConfig(_))));
    }

    #[test]
    fn batch_matches_single_queries() {
        let pairs = vec![
            (CoverPoint::from_ints(1, 0), CoverPoint::from_ints(2, 0)),
            (CoverPoint::from_ints(1, 0), CoverPoint::from_ints(1, 4)),
        ];
        let got = oracle_batch(&pairs, 128, Connectivity::EightKnight);
        for ((a, b), d) in pairs.iter().zip(got) {
            let cfg = GridConfig::for_points(a, b, 128, Connectivity::EightKnight).unwrap();
            assert_eq!(d.unwrap(), oracle_distance(&cfg, a, b).unwrap());
        }
        assert!((oracle_batch(&pairs[1..], 256, Connectivity::EightKnight)[0].clone().unwrap() - 2.0).abs() < 0.05);
    }
}
