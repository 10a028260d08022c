//! Hyperbolic geometry in the Poincaré disk.
//!
//! Orientation-preserving isometries are stored as `(α, β)` with
//! `|α|² − |β|² = 1`, acting by `z ↦ (αz + β) / (β̄z + ᾱ)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::criterion::TessellationType;
use crate::error::{Error, Result};
use crate::json::Fixed17;

/// Points must satisfy `|z| < 1 - DISK_GUARD`.
pub const DISK_GUARD: f64 = 1e-12;
/// Tolerance for constructions (edge images, congruence, angles).
pub const CONSTRUCTION_TOL: f64 = 1e-9;
/// Tolerance for equality of isometries as actions.
pub const ISOMETRY_EQ_TOL: f64 = 1e-8;

/// Fixed probe points used to compare isometries by their action.
pub const PROBES: [Complex64; 3] = [
    Complex64::new(0.0, 0.0),
    Complex64::new(0.5, 0.0),
    Complex64::new(0.0, 0.5),
];

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Complex64::new(0.0, 0.0));

    pub fn new(z: Complex64) -> Result<Self> {
        if z.norm().is_nan() || z.norm() >= 1.0 - DISK_GUARD {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        Ok(DiskPoint(z))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        DiskPoint::new(Complex64::from_polar(r, theta))
    }

    /// The point at hyperbolic distance `d` from the origin in direction `theta`.
    pub fn at_distance(d: f64, theta: f64) -> Result<Self> {
        DiskPoint::from_polar((d / 2.0).tanh(), theta)
    }

    pub fn z(&self) -> Complex64 {
        self.0
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    // 1 - |z|², computed without cancellation near the boundary.
    fn conformal_gap(&self) -> f64 {
        let r = self.0.norm();
        (1.0 - r) * (1.0 + r)
    }
}

impl Serialize for DiskPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [Fixed17(self.0.re), Fixed17(self.0.im)].serialize(serializer)
    }
}

/// Hyperbolic distance, via `sinh(d/2) = |a−b| / √((1−|a|²)(1−|b|²))`.
///
/// This is algebraically `arcosh(1 + 2|a−b|² / ((1−|a|²)(1−|b|²)))` but
/// keeps full relative precision for nearby points.
pub fn distance(a: DiskPoint, b: DiskPoint) -> f64 {
    let s = (a.0 - b.0).norm() / (a.conformal_gap() * b.conformal_gap()).sqrt();
    2.0 * s.asinh()
}

/// Hyperbolic midpoint of the geodesic segment `[a, b]`.
pub fn midpoint(a: DiskPoint, b: DiskPoint) -> DiskPoint {
    let to_origin = Isometry::translation_to_origin(a);
    let b0 = to_origin.apply(b);
    let mid = DiskPoint::at_distance(distance(a, b) / 2.0, b0.0.arg())
        .expect("midpoint of two disk points lies in the disk");
    to_origin.inverse().apply(mid)
}

/// An orientation-preserving isometry of the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    alpha: Complex64,
    beta: Complex64,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        alpha: Complex64::new(1.0, 0.0),
        beta: Complex64::new(0.0, 0.0),
    };

    /// Builds from raw coefficients, rescaling to `|α|² − |β|² = 1`.
    ///
    /// Returns `None` unless `|α| > |β|` (otherwise the map does not
    /// preserve the disk).
    pub fn from_coefficients(alpha: Complex64, beta: Complex64) -> Option<Self> {
        let n = alpha.norm_sqr() - beta.norm_sqr();
        if n.is_nan() || n <= 0.0 || !n.is_finite() {
            return None;
        }
        let s = n.sqrt();
        Some(Isometry {
            alpha: alpha / s,
            beta: beta / s,
        })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Rotation by `theta` about the origin.
    pub fn rotation(theta: f64) -> Self {
        Isometry {
            alpha: Complex64::from_polar(1.0, theta / 2.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// The translation along the geodesic through `a` and the origin that
    /// sends `a` to the origin: `z ↦ (z − a) / (1 − āz)`.
    pub fn translation_to_origin(a: DiskPoint) -> Self {
        let s = a.conformal_gap().sqrt();
        Isometry {
            alpha: Complex64::new(1.0 / s, 0.0),
            beta: -a.0 / s,
        }
    }

    /// Rotation by `theta` about `center`.
    pub fn rotation_about(center: DiskPoint, theta: f64) -> Self {
        let t = Isometry::translation_to_origin(center);
        t.inverse().compose(&Isometry::rotation(theta)).compose(&t)
    }

    /// The unique orientation-preserving isometry `g` with `g(p) = p2` and
    /// `g(q) = q2`.
    pub fn from_pairs(p: DiskPoint, q: DiskPoint, p2: DiskPoint, q2: DiskPoint) -> Result<Self> {
        let d1 = distance(p, q);
        let d2 = distance(p2, q2);
        if d1 <= CONSTRUCTION_TOL {
            return Err(Error::DegeneratePair(d1));
        }
        if (d1 - d2).abs() > CONSTRUCTION_TOL {
            return Err(Error::DistanceMismatch {
                left: d1,
                right: d2,
            });
        }
        let t1 = Isometry::translation_to_origin(p);
        let t2 = Isometry::translation_to_origin(p2);
        let turn = t2.apply(q2).0.arg() - t1.apply(q).0.arg();
        Ok(t2.inverse().compose(&Isometry::rotation(turn)).compose(&t1))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let alpha = self.alpha * other.alpha + self.beta * other.beta.conj();
        let beta = self.alpha * other.beta + self.beta * other.alpha.conj();
        Isometry::from_coefficients(alpha, beta).expect("product of disk isometries")
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            alpha: self.alpha.conj(),
            beta: -self.beta,
        }
    }

    pub fn apply(&self, z: DiskPoint) -> DiskPoint {
        DiskPoint(self.apply_complex(z.0))
    }

    /// The Möbius action on any complex number (not restricted to the disk).
    pub fn apply_complex(&self, z: Complex64) -> Complex64 {
        (self.alpha * z + self.beta) / (self.beta.conj() * z + self.alpha.conj())
    }

    /// `sup` over [`PROBES`] of `d(self(x), other(x))`.
    pub fn action_distance(&self, other: &Isometry) -> f64 {
        PROBES
            .iter()
            .map(|&x| {
                let x = DiskPoint(x);
                distance(self.apply(x), other.apply(x))
            })
            .fold(0.0, f64::max)
    }

    /// How far this isometry moves the probe points.
    pub fn identity_residual(&self) -> f64 {
        self.action_distance(&Isometry::IDENTITY)
    }

    pub fn approx_eq(&self, other: &Isometry) -> bool {
        self.action_distance(other) < ISOMETRY_EQ_TOL
    }

    /// The same map with the sign of `(α, β)` chosen so that `Re α > 0`,
    /// or `Im α ≥ 0` when `Re α = 0`.
    pub fn sign_normalized(&self) -> Isometry {
        let flip = self.alpha.re < 0.0 || (self.alpha.re == 0.0 && self.alpha.im < 0.0);
        if flip {
            Isometry {
                alpha: -self.alpha,
                beta: -self.beta,
            }
        } else {
            *self
        }
    }
}

impl Serialize for Isometry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let g = self.sign_normalized();
        let mut s = serializer.serialize_struct("Isometry", 2)?;
        s.serialize_field("alpha", &[Fixed17(g.alpha.re), Fixed17(g.alpha.im)])?;
        s.serialize_field("beta", &[Fixed17(g.beta.re), Fixed17(g.beta.im)])?;
        s.end()
    }
}

/// Distance from the centre to a vertex of the regular p-gon with interior
/// angle `2π/q`: `arcosh(cot(π/p) cot(π/q))`.
pub fn circumradius(p: u32, q: u32) -> Result<f64> {
    TessellationType::new(p, q)?;
    let (p, q) = (p as f64, q as f64);
    Ok((1.0 / ((PI / p).tan() * (PI / q).tan())).acosh())
}

/// Distance from the centre to an edge midpoint: `arcosh(cos(π/q) / sin(π/p))`.
pub fn inradius(p: u32, q: u32) -> Result<f64> {
    TessellationType::new(p, q)?;
    let (p, q) = (p as f64, q as f64);
    Ok(((PI / q).cos() / (PI / p).sin()).acosh())
}

/// The regular base p-gon, centred at the origin, with `v_1` on the positive
/// imaginary axis and vertices labelled clockwise.
///
/// Edge `e_1` joins `v_p` to `v_1`; edge `e_i` joins `v_{i-1}` to `v_i`.
#[derive(Debug, Clone)]
pub struct Polygon {
    p: u32,
    q: u32,
    circumradius: f64,
    inradius: f64,
    vertices: Vec<DiskPoint>,
}

impl Polygon {
    pub fn regular(p: u32, q: u32) -> Result<Self> {
        let circumradius = circumradius(p, q)?;
        let inradius = inradius(p, q)?;
        let vertices = (0..p)
            .map(|k| {
                DiskPoint::at_distance(circumradius, PI / 2.0 - 2.0 * PI * k as f64 / p as f64)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polygon {
            p,
            q,
            circumradius,
            inradius,
            vertices,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    pub fn inradius(&self) -> f64 {
        self.inradius
    }

    pub fn center(&self) -> DiskPoint {
        DiskPoint::ORIGIN
    }

    pub fn vertices(&self) -> &[DiskPoint] {
        &self.vertices
    }

    /// `v_k` for `k` in `1..=p`; `k = 0` is read as `p`.
    pub fn vertex(&self, k: usize) -> DiskPoint {
        let p = self.p as usize;
        assert!(k <= p, "vertex index {k} outside 0..={p}");
        self.vertices[(k + p - 1) % p]
    }

    /// Endpoints `(v_{i-1}, v_i)` of edge `e_i`.
    pub fn edge(&self, i: usize) -> (DiskPoint, DiskPoint) {
        assert!(
            (1..=self.p as usize).contains(&i),
            "edge index {i} outside 1..={}",
            self.p
        );
        (self.vertex(i - 1), self.vertex(i))
    }

    pub fn edge_length(&self, i: usize) -> f64 {
        let (a, b) = self.edge(i);
        distance(a, b)
    }

    pub fn edge_midpoint(&self, i: usize) -> DiskPoint {
        let (a, b) = self.edge(i);
        midpoint(a, b)
    }

    /// Interior angle at `v_k`, measured between the geodesic tangents
    /// toward the two neighbouring vertices.
    pub fn interior_angle(&self, k: usize) -> f64 {
        let p = self.p as usize;
        let v = self.vertex(k);
        let prev = self.vertex((k + p - 1) % p);
        let next = self.vertex(k % p + 1);
        let t = Isometry::translation_to_origin(v);
        let a = t.apply(prev).z();
        let b = t.apply(next).z();
        (a / b).arg().abs()
    }
}
