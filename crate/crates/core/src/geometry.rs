//! Euclidean distances between points, segments and rays in the plane.

use crate::complex::Complex;

fn cross(u: Complex, v: Complex) -> f64 {
    u.re * v.im - u.im * v.re
}

fn dot(u: Complex, v: Complex) -> f64 {
    u.re * v.re + u.im * v.im
}

pub fn point_segment_distance(z: Complex, a: Complex, b: Complex) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (dot(z - a, ab) / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// Distance to the ray `{origin + s·dir : s ≥ 0}` for a unit `dir`.
pub fn point_ray_distance(z: Complex, origin: Complex, dir: Complex) -> f64 {
    let s = dot(z - origin, dir).max(0.0);
    (z - (origin + dir * s)).norm()
}

/// Whether segment `a b` meets the line through `c` along `dir` at a parameter
/// `s` in `[0, s_max]`, with the segment parameter in `[0, 1]`.
fn crosses(a: Complex, b: Complex, c: Complex, dir: Complex, s_max: f64) -> bool {
    let ab = b - a;
    let denom = cross(ab, dir);
    if denom == 0.0 {
        // parallel: any overlap is caught by the endpoint distances
        return false;
    }
    let ac = c - a;
    let u = cross(ac, dir) / denom;
    let s = cross(ac, ab) / denom;
    (0.0..=1.0).contains(&u) && (0.0..=s_max).contains(&s)
}

pub fn segment_segment_distance(a: Complex, b: Complex, c: Complex, d: Complex) -> f64 {
    if crosses(a, b, c, d - c, 1.0) {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

pub fn segment_ray_distance(a: Complex, b: Complex, origin: Complex, dir: Complex) -> f64 {
    if crosses(a, b, origin, dir, f64::INFINITY) {
        return 0.0;
    }
    point_ray_distance(a, origin, dir).min(point_ray_distance(b, origin, dir)).min(point_segment_distance(origin, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn point_distances() {
        assert_abs_diff_eq!(point_segment_distance(c(0.0, 1.0), c(-1.0, 0.0), c(1.0, 0.0)), 1.0);
        assert_abs_diff_eq!(point_segment_distance(c(3.0, 4.0), c(-1.0, 0.0), c(0.0, 0.0)), 5.0);
        assert_abs_diff_eq!(point_ray_distance(c(-3.0, 4.0), c(0.0, 0.0), c(1.0, 0.0)), 5.0);
        assert_abs_diff_eq!(point_ray_distance(c(100.0, 2.0), c(0.0, 0.0), c(1.0, 0.0)), 2.0);
    }

    #[test]
    fn crossing_segments() {
        assert_eq!(segment_segment_distance(c(-1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0), c(1.0, -1.0)), 0.0);
        assert_abs_diff_eq!(segment_segment_distance(c(0.0, 1.0), c(1.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)), 1.0);
        // collinear, overlapping
        assert_eq!(segment_segment_distance(c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)), 0.0);
    }

    #[test]
    fn segment_against_ray() {
        let up = c(0.0, 1.0);
        assert_eq!(segment_ray_distance(c(-1.0, 50.0), c(1.0, 50.0), c(0.0, 0.0), up), 0.0);
        assert_abs_diff_eq!(segment_ray_distance(c(-1.0, -2.0), c(1.0, -2.0), c(0.0, 0.0), up), 2.0);
        assert_abs_diff_eq!(segment_ray_distance(c(2.0, 0.0), c(2.0, 9.0), c(0.0, 0.0), up), 2.0);
    }
}
