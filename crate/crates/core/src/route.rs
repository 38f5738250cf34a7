//! Seeded construction of polygonal paths that stay inside a slit domain.
//!
//! The domain's bounding box is covered by a square grid; grid points that
//! keep clearance become graph nodes and 8-neighbour links that keep clearance
//! become edges with randomly inflated lengths. Routes go through a random
//! waypoint so that different seeds explore different homotopy classes.

use petgraph::algo::astar;
use petgraph::graph::{NodeIndex, UnGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{ensure_finite, Complex};
use crate::domain::{PolyPath, SlitDomain};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RouteOptions {
    pub seed: u64,
    /// Grid spacing; defaults to 1/200 of the larger box side.
    pub step: Option<f64>,
    /// Padding added around the bounding box of the endpoints and slit samples.
    pub margin: f64,
    /// Route through a random in-domain waypoint.
    pub waypoint: bool,
}

impl Default for RouteOptions {
    fn default() -> Self {
        Self { seed: 0, step: None, margin: 1.0, waypoint: true }
    }
}

impl RouteOptions {
    pub fn seeded(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

struct Grid {
    graph: UnGraph<Complex, f64>,
    nodes: Vec<Option<NodeIndex>>,
    origin: Complex,
    step: f64,
    nx: usize,
    ny: usize,
}

impl Grid {
    fn build(domain: &SlitDomain, bounds: (Complex, Complex), step: f64, rng: &mut ChaCha8Rng) -> Self {
        let (lo, hi) = bounds;
        let nx = ((hi.re - lo.re) / step).ceil() as usize + 1;
        let ny = ((hi.im - lo.im) / step).ceil() as usize + 1;
        let at = |i: usize, j: usize| lo + Complex::new(i as f64 * step, j as f64 * step);

        let mut graph = UnGraph::new_undirected();
        let mut nodes = vec![None; nx * ny];
        let mut dist = vec![0.0; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let z = at(i, j);
                let d = domain.distance_to_excluded(z);
                dist[j * nx + i] = d;
                if d > domain.clearance {
                    nodes[j * nx + i] = Some(graph.add_node(z));
                }
            }
        }
        let diagonal = step * std::f64::consts::SQRT_2;
        for j in 0..ny {
            for i in 0..nx {
                let Some(a) = nodes[j * nx + i] else { continue };
                for (di, dj) in [(1i64, 0i64), (0, 1), (1, 1), (-1, 1)] {
                    let (ii, jj) = (i as i64 + di, j as i64 + dj);
                    if ii < 0 || ii >= nx as i64 || jj >= ny as i64 {
                        continue;
                    }
                    let k = jj as usize * nx + ii as usize;
                    let Some(b) = nodes[k] else { continue };
                    let len = if di != 0 && dj != 0 { diagonal } else { step };
                    // a point of the segment is at most `len` from either end
                    let clear = dist[j * nx + i].max(dist[k]) - len > domain.clearance
                        || domain.segment_distance_to_excluded(graph[a], graph[b]) > domain.clearance;
                    if clear {
                        graph.add_edge(a, b, len * rng.random_range(1.0..3.0));
                    }
                }
            }
        }
        Self { graph, nodes, origin: lo, step, nx, ny }
    }

    /// Nearest grid node joined to `z` by a clear segment.
    fn attach(&self, domain: &SlitDomain, z: Complex) -> Option<NodeIndex> {
        let ci = ((z.re - self.origin.re) / self.step).round() as i64;
        let cj = ((z.im - self.origin.im) / self.step).round() as i64;
        let mut candidates = Vec::new();
        for radius in 0..6i64 {
            for j in cj - radius..=cj + radius {
                for i in ci - radius..=ci + radius {
                    if i < 0 || j < 0 || i >= self.nx as i64 || j >= self.ny as i64 {
                        continue;
                    }
                    if let Some(n) = self.nodes[j as usize * self.nx + i as usize] {
                        candidates.push(n);
                    }
                }
            }
            candidates.sort_by(|a, b| (self.graph[*a] - z).norm().total_cmp(&(self.graph[*b] - z).norm()));
            candidates.dedup();
            if let Some(n) = candidates.iter().copied().find(|n| {
                let p = self.graph[*n];
                p == z || domain.segment_distance_to_excluded(z, p) > domain.clearance
            }) {
                return Some(n);
            }
            candidates.clear();
        }
        None
    }

    fn shortest(&self, from: NodeIndex, to: NodeIndex) -> Option<Vec<NodeIndex>> {
        astar(&self.graph, from, |n| n == to, |e| *e.weight(), |_| 0.0).map(|(_, path)| path)
    }
}

/// Finds a polygonal path from `from` to `to` inside `domain`.
pub fn find_route(domain: &SlitDomain, from: Complex, to: Complex, options: &RouteOptions) -> Result<PolyPath> {
    ensure_finite(from, "route start")?;
    ensure_finite(to, "route end")?;
    for z in [from, to] {
        if !domain.contains(z) {
            return Err(Error::Geometry(format!("route endpoint {z} is not in the domain")));
        }
    }
    let mut lo = Complex::new(from.re.min(to.re), from.im.min(to.im));
    let mut hi = Complex::new(from.re.max(to.re), from.im.max(to.im));
    for z in domain.finite_points() {
        lo = Complex::new(lo.re.min(z.re), lo.im.min(z.im));
        hi = Complex::new(hi.re.max(z.re), hi.im.max(z.im));
    }
    let pad = Complex::new(options.margin, options.margin);
    let (lo, hi) = (lo - pad, hi + pad);
    let step = options.step.unwrap_or_else(|| (hi.re - lo.re).max(hi.im - lo.im) / 200.0);
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::Usage("route grid step must be positive".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let grid = Grid::build(domain, (lo, hi), step, &mut rng);
    let no_route = || Error::Geometry(format!("no in-domain route from {from} to {to}"));
    let start = grid.attach(domain, from).ok_or_else(no_route)?;
    let goal = grid.attach(domain, to).ok_or_else(no_route)?;

    let mut nodes = None;
    if options.waypoint {
        for _ in 0..16 {
            let k = rng.random_range(0..grid.graph.node_count());
            let via = NodeIndex::new(k);
            if let (Some(mut first), Some(second)) = (grid.shortest(start, via), grid.shortest(via, goal)) {
                first.extend(second.into_iter().skip(1));
                nodes = Some(first);
                break;
            }
        }
    }
    let nodes = match nodes {
        Some(n) => n,
        None => grid.shortest(start, goal).ok_or_else(no_route)?,
    };

    let mut points = vec![from];
    points.extend(nodes.into_iter().map(|n| grid.graph[n]));
    points.push(to);
    points.dedup();
    let path = PolyPath::open(points)?;
    domain.check_path(&path)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{make_standard_domain, StandardDomain};

    #[test]
    fn routes_stay_inside() {
        let d = make_standard_domain(StandardDomain::SlitInterval, 10.0).unwrap();
        let from = Complex::new(0.0, 2.0);
        let to = Complex::new(0.0, -2.0);
        for seed in 0..3 {
            let p = find_route(&d, from, to, &RouteOptions::seeded(seed)).unwrap();
            assert_eq!(p.start(), from);
            assert_eq!(p.end(), to);
            d.check_path(&p).unwrap();
        }
    }

    #[test]
    fn seeds_give_different_routes() {
        let d = make_standard_domain(StandardDomain::DoubleRay, 10.0).unwrap();
        let a = find_route(&d, Complex::new(0.0, 3.0), Complex::new(0.0, -3.0), &RouteOptions::seeded(1)).unwrap();
        let b = find_route(&d, Complex::new(0.0, 3.0), Complex::new(0.0, -3.0), &RouteOptions::seeded(2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn rejects_excluded_endpoints() {
        let d = make_standard_domain(StandardDomain::SlitInterval, 10.0).unwrap();
        let err = find_route(&d, Complex::new(0.0, 0.0), Complex::new(0.0, 2.0), &RouteOptions::default());
        assert!(matches!(err, Err(Error::Geometry(_))));
    }
}
