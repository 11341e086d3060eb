//! Invariant divisors `D = Σ αᵢ·Dᵢ`, their polytopes and edge data.
//!
//! The support function takes the value `−αᵢ` on the ray `vᵢ`, and the
//! polytope is `{ m : ⟨m, vᵢ⟩ ≥ −αᵢ for all i }`. On a smooth fan each
//! maximal cone determines an integral vertex; the divisor is ample exactly
//! when every vertex satisfies the constraints of the rays outside its cone
//! strictly.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{Fan, Wall};
use crate::lattice::{combine, dual_basis, segment_lattice_count, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricDivisor {
    fan: Arc<Fan>,
    alpha: Vec<i64>,
}

/// Divisor file contents; the fan is supplied separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorFile {
    pub alpha: Vec<i64>,
}

impl ToricDivisor {
    pub fn new(fan: Arc<Fan>, alpha: Vec<i64>) -> Result<Self> {
        if alpha.len() != fan.num_rays() {
            return Err(Error::DivisorLength {
                expected: fan.num_rays(),
                got: alpha.len(),
            });
        }
        Ok(Self { fan, alpha })
    }

    pub fn zero(fan: Arc<Fan>) -> Self {
        let alpha = vec![0; fan.num_rays()];
        Self { fan, alpha }
    }

    #[inline]
    pub fn fan(&self) -> &Arc<Fan> {
        &self.fan
    }

    #[inline]
    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    /// Adds the principal divisor of the character `u`; the polytope moves by `−u`.
    pub fn translate(&self, u: &LatticeVector) -> Self {
        let alpha = self
            .alpha
            .iter()
            .zip(self.fan.rays())
            .map(|(a, v)| a + u.dot(v))
            .collect();
        Self {
            fan: Arc::clone(&self.fan),
            alpha,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            fan: Arc::clone(&self.fan),
            alpha: self.alpha.iter().map(|a| a * k).collect(),
        }
    }

    /// Vertex of the polytope attached to maximal cone `cone`: the unique
    /// `m` with `⟨m, vᵢ⟩ = −αᵢ` for the rays of the cone.
    pub fn vertex(&self, cone: usize) -> Result<LatticeVector> {
        let rays = self.fan.cone_rays(cone)?;
        let dual = dual_basis(&rays).map_err(|e| match e {
            Error::NotUnimodular { .. } => Error::NonIntegralVertex { cone },
            other => other,
        })?;
        let rhs: Vec<i64> = self
            .fan
            .cone(cone)?
            .iter()
            .map(|&r| -self.alpha[r])
            .collect();
        Ok(combine(&dual, &rhs))
    }

    pub fn polytope(&self) -> Result<LatticePolytope> {
        let vertices = (0..self.fan.num_cones())
            .map(|c| self.vertex(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePolytope {
            dim: self.fan.dim(),
            vertices,
            normals: self.fan.rays().to_vec(),
            bounds: self.alpha.iter().map(|a| -a).collect(),
        })
    }

    fn convexity(&self, strict: bool) -> Result<bool> {
        for (c, cone) in self.fan.cones().iter().enumerate() {
            let vertex = self.vertex(c)?;
            for (j, ray) in self.fan.rays().iter().enumerate() {
                if cone.contains(&j) {
                    continue;
                }
                let value = vertex.dot(ray);
                let ok = if strict {
                    value > -self.alpha[j]
                } else {
                    value >= -self.alpha[j]
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Strict convexity of the support function.
    pub fn is_ample(&self) -> Result<bool> {
        self.convexity(true)
    }

    /// Convexity of the support function (basepoint-free).
    pub fn is_nef(&self) -> Result<bool> {
        self.convexity(false)
    }

    /// Number of lattice points on the edge dual to `wall`.
    pub fn edge_point_count(&self, wall: &Wall) -> Result<i64> {
        let a = self.vertex(wall.cone_a)?;
        let b = self.vertex(wall.cone_b)?;
        if a == b {
            return Err(Error::DegenerateEdge {
                cone_a: wall.cone_a,
                cone_b: wall.cone_b,
            });
        }
        Ok(segment_lattice_count(&a, &b))
    }

    /// Intersection number `D·C` with the invariant curve of `wall`, from
    /// the wall relation: `Σ γᵢ·α(facetᵢ) + α(vₙ) + α(vₙ₊₁)`.
    pub fn curve_degree(&self, wall: &Wall) -> i64 {
        let facet: i64 = wall
            .facet_rays
            .iter()
            .zip(&wall.gamma)
            .map(|(&r, &g)| g * self.alpha[r])
            .sum();
        facet + self.alpha[wall.extra_rays[0]] + self.alpha[wall.extra_rays[1]]
    }

    pub fn to_file(&self) -> DivisorFile {
        DivisorFile {
            alpha: self.alpha.clone(),
        }
    }
}

/// The polytope `{ m : ⟨m, vᵢ⟩ ≥ boundᵢ }` with one vertex per maximal cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
    normals: Vec<LatticeVector>,
    bounds: Vec<i64>,
}

impl LatticePolytope {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices indexed by maximal cone. Coincide for non-ample divisors.
    #[inline]
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn vertex(&self, cone: usize) -> &LatticeVector {
        &self.vertices[cone]
    }

    /// Half-spaces as `(normal, bound)` meaning `⟨m, normal⟩ ≥ bound`.
    pub fn halfspaces(&self) -> impl Iterator<Item = (&LatticeVector, i64)> {
        self.normals.iter().zip(self.bounds.iter().copied())
    }

    pub fn contains(&self, m: &LatticeVector) -> bool {
        self.halfspaces().all(|(n, b)| m.dot(n) >= b)
    }

    /// Number of constraints tight at `m`.
    pub fn tight_constraints(&self, m: &LatticeVector) -> usize {
        self.halfspaces().filter(|&(n, b)| m.dot(n) == b).count()
    }

    /// Integer bounding box of the vertices, per coordinate.
    pub fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|i| {
                let it = self.vertices.iter().map(|v| v.coords()[i]);
                (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
            })
            .collect()
    }

    /// All lattice points, in lexicographic order. Requires a nef divisor,
    /// so that the polytope is the convex hull of its vertices.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let bbox = self.bounding_box();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = bbox.iter().map(|b| b.0).collect();
        if self.dim == 0 {
            return out;
        }
        loop {
            let m = LatticeVector::new(cur.clone());
            if self.contains(&m) {
                out.push(m);
            }
            // Odometer with the last coordinate fastest.
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < bbox[k].1 {
                    cur[k] += 1;
                    break;
                }
                cur[k] = bbox[k].0;
            }
        }
    }

    pub fn lattice_point_count(&self) -> usize {
        self.lattice_points().len()
    }
}
