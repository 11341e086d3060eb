//! Nonsingular complete fans, their walls and fixed points.
//!
//! Maximal cones are stored as sorted ray-index lists; cone `i` is the
//! torus-fixed point `pᵢ₊₁` of the variety. A wall is a facet shared by two
//! maximal cones and carries the relation
//! `vₙ + vₙ₊₁ + Σ γᵢ·vᵢ = 0` between its rays.
//!
//! Completeness is certified by facet pairing plus connectivity of the facet
//! graph. In dimension 2 an exact angular-coverage check is run on top of
//! that. In higher dimension a user fan passing the pairing checks is
//! accepted as complete without a covering test.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{determinant, unimodular_solve, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
}

/// The invariant curve joining the fixed points of two adjacent maximal cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub facet_rays: Vec<usize>,
    pub cone_a: usize,
    pub cone_b: usize,
    /// Coefficients of the facet rays in the wall relation, aligned with `facet_rays`.
    pub gamma: Vec<i64>,
    /// The two rays completing the facet to `cone_a` and `cone_b`, lower index first.
    pub extra_rays: [usize; 2],
}

impl Wall {
    /// The other endpoint of the wall, if `cone` is one of them.
    pub fn opposite(&self, cone: usize) -> Option<usize> {
        if cone == self.cone_a {
            Some(self.cone_b)
        } else if cone == self.cone_b {
            Some(self.cone_a)
        } else {
            None
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C[{},{}] facet {:?} gamma {:?}",
            self.cone_a, self.cone_b, self.facet_rays, self.gamma
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Structure,
    PrimitiveRays,
    Unimodular,
    FacetPairing,
    Connected,
    FacetSeparation,
    AngularCoverage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Offense {
    Ray(usize),
    Cone(usize),
    Facet {
        facet: Vec<usize>,
        cones: Vec<usize>,
    },
    Message(String),
}

impl fmt::Display for Offense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Offense::Ray(i) => write!(f, "ray {i}"),
            Offense::Cone(i) => write!(f, "cone {i}"),
            Offense::Facet { facet, cones } => write!(f, "facet {facet:?} in cones {cones:?}"),
            Offense::Message(m) => f.write_str(m),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub invariant: Invariant,
    pub offenses: Vec<Offense>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.offenses.is_empty()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, invariant: Invariant) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.invariant == invariant)
    }

    fn push(&mut self, invariant: Invariant, offenses: Vec<Offense>) {
        self.checks.push(CheckResult {
            invariant,
            offenses,
        });
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| {
                let list: Vec<String> = c.offenses.iter().map(ToString::to_string).collect();
                format!("{:?}: {}", c.invariant, list.join("; "))
            })
            .collect();
        if failed.is_empty() {
            "all checks passed".to_owned()
        } else {
            failed.join(" | ")
        }
    }
}

impl Fan {
    /// Builds a fan and rejects it unless every invariant holds.
    pub fn new(dim: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Self> {
        let fan = Self::new_unchecked(dim, rays, cones);
        let report = fan.validate();
        if report.passed() {
            Ok(fan)
        } else {
            Err(Error::InvalidFan(report.summary()))
        }
    }

    /// Builds a fan without validation. Cone index lists are sorted.
    pub fn new_unchecked(dim: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Self {
        let cones = cones
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Self { dim, rays, cones }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    #[inline]
    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn num_cones(&self) -> usize {
        self.cones.len()
    }

    pub fn cone(&self, index: usize) -> Result<&[usize]> {
        self.cones
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::ConeIndex {
                index,
                len: self.cones.len(),
            })
    }

    pub fn cone_rays(&self, index: usize) -> Result<Vec<LatticeVector>> {
        Ok(self
            .cone(index)?
            .iter()
            .map(|&r| self.rays[r].clone())
            .collect())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let structural = self.structural_offenses();
        let structure_ok = structural.is_empty();
        report.push(Invariant::Structure, structural);
        if !structure_ok {
            return report;
        }

        let non_primitive = (0..self.rays.len())
            .filter(|&i| !self.rays[i].is_primitive())
            .map(Offense::Ray)
            .collect();
        report.push(Invariant::PrimitiveRays, non_primitive);

        let singular: Vec<Offense> = (0..self.cones.len())
            .filter(|&i| {
                let rays = self.cone_rays(i).expect("index checked");
                !matches!(determinant(&rays), Ok(d) if d.abs() == 1)
            })
            .map(Offense::Cone)
            .collect();
        let smooth = singular.is_empty();
        report.push(Invariant::Unimodular, singular);

        let facets = self.facet_map();
        let unpaired: Vec<Offense> = facets
            .iter()
            .filter(|(_, cones)| cones.len() != 2)
            .map(|(facet, cones)| Offense::Facet {
                facet: facet.clone(),
                cones: cones.clone(),
            })
            .collect();
        let paired = unpaired.is_empty();
        report.push(Invariant::FacetPairing, unpaired);

        report.push(Invariant::Connected, self.connectivity_offenses(&facets));

        if smooth && paired {
            let wrong_side = facets
                .iter()
                .filter_map(
                    |(facet, cones)| match self.wall_relation(facet, cones[0], cones[1]) {
                        Ok(_) => None,
                        Err(_) => Some(Offense::Facet {
                            facet: facet.clone(),
                            cones: cones.clone(),
                        }),
                    },
                )
                .collect();
            report.push(Invariant::FacetSeparation, wrong_side);
        }

        if self.dim == 2 {
            report.push(Invariant::AngularCoverage, self.angular_offenses());
        }
        report
    }

    fn structural_offenses(&self) -> Vec<Offense> {
        let mut out = Vec::new();
        let n = self.dim;
        if n == 0 {
            out.push(Offense::Message("dimension must be at least 1".into()));
            return out;
        }
        if self.cones.is_empty() {
            out.push(Offense::Message("no maximal cones".into()));
        }
        for (i, r) in self.rays.iter().enumerate() {
            if r.dim() != n {
                out.push(Offense::Ray(i));
            }
        }
        for i in 0..self.rays.len() {
            if self.rays[i + 1..].contains(&self.rays[i]) {
                out.push(Offense::Message(format!("ray {i} is duplicated")));
            }
        }
        let mut used = vec![false; self.rays.len()];
        for (i, c) in self.cones.iter().enumerate() {
            let distinct = c.windows(2).all(|w| w[0] != w[1]);
            let in_range = c.iter().all(|&r| r < self.rays.len());
            if c.len() != n || !distinct || !in_range {
                out.push(Offense::Cone(i));
                continue;
            }
            for &r in c {
                used[r] = true;
            }
            if self.cones[i + 1..].contains(c) {
                out.push(Offense::Message(format!("cone {i} is duplicated")));
            }
        }
        for (i, u) in used.iter().enumerate() {
            if !u {
                out.push(Offense::Message(format!("ray {i} lies in no maximal cone")));
            }
        }
        out
    }

    /// Facet (sorted ray indices) → maximal cones containing it.
    fn facet_map(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, cone) in self.cones.iter().enumerate() {
            for skip in 0..cone.len() {
                let facet: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &r)| r)
                    .collect();
                map.entry(facet).or_default().push(ci);
            }
        }
        map
    }

    fn connectivity_offenses(&self, facets: &BTreeMap<Vec<usize>, Vec<usize>>) -> Vec<Offense> {
        let k = self.cones.len();
        let mut adj = vec![Vec::new(); k];
        for cones in facets.values() {
            for &a in cones {
                for &b in cones {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        let mut seen = vec![false; k];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(c) = queue.pop_front() {
            for &d in &adj[c] {
                if !seen[d] {
                    seen[d] = true;
                    queue.push_back(d);
                }
            }
        }
        (0..k).filter(|&c| !seen[c]).map(Offense::Cone).collect()
    }

    /// Every cone must be a pair of angularly consecutive rays turning by
    /// less than π, and every consecutive pair must be a cone.
    fn angular_offenses(&self) -> Vec<Offense> {
        let mut order: Vec<usize> = (0..self.rays.len()).collect();
        order.sort_by(|&a, &b| angle_cmp(&self.rays[a], &self.rays[b]));
        let m = order.len();
        let mut out = Vec::new();
        if m < 3 {
            out.push(Offense::Message(
                "a complete 2D fan needs at least 3 rays".into(),
            ));
            return out;
        }
        let mut expected: Vec<Vec<usize>> = Vec::with_capacity(m);
        for i in 0..m {
            let (a, b) = (order[i], order[(i + 1) % m]);
            let (u, w) = (self.rays[a].coords(), self.rays[b].coords());
            if u[0] * w[1] - u[1] * w[0] <= 0 {
                out.push(Offense::Message(format!(
                    "gap of at least π between rays {a} and {b}"
                )));
            }
            let mut pair = vec![a, b];
            pair.sort_unstable();
            expected.push(pair);
        }
        for (i, c) in self.cones.iter().enumerate() {
            if !expected.contains(c) {
                out.push(Offense::Cone(i));
            }
        }
        for pair in expected {
            if !self.cones.contains(&pair) {
                out.push(Offense::Message(format!(
                    "angular sector between rays {pair:?} is not covered"
                )));
            }
        }
        out
    }

    /// Solves the wall relation for `facet` shared by cones `a` and `b`.
    fn wall_relation(&self, facet: &[usize], a: usize, b: usize) -> Result<Wall> {
        let extra = |c: usize| {
            self.cones[c]
                .iter()
                .copied()
                .find(|r| !facet.contains(r))
                .expect("cone strictly contains its facet")
        };
        let (ra, rb) = (extra(a), extra(b));
        let mut basis: Vec<LatticeVector> = facet.iter().map(|&r| self.rays[r].clone()).collect();
        basis.push(self.rays[ra].clone());
        let coeffs = unimodular_solve(&basis, &-&self.rays[rb])?;
        let lead = *coeffs.last().expect("n ≥ 1");
        if lead != 1 {
            return Err(Error::WallRelation {
                facet: facet.to_vec(),
                coefficient: lead,
            });
        }
        let (cone_a, cone_b) = (a.min(b), a.max(b));
        Ok(Wall {
            facet_rays: facet.to_vec(),
            cone_a,
            cone_b,
            gamma: coeffs[..facet.len()].to_vec(),
            extra_rays: [ra.min(rb), ra.max(rb)],
        })
    }

    /// One wall per shared facet, ordered by facet ray indices.
    pub fn walls(&self) -> Result<Vec<Wall>> {
        let mut walls = Vec::new();
        for (facet, cones) in self.facet_map() {
            if cones.len() != 2 {
                return Err(Error::InvalidFan(format!(
                    "facet {facet:?} lies in {} maximal cones",
                    cones.len()
                )));
            }
            walls.push(self.wall_relation(&facet, cones[0], cones[1])?);
        }
        Ok(walls)
    }

    /// Fan of `ℙⁿ`: rays `e₁,…,eₙ, −Σeᵢ`; cone `i` omits ray `(i + n) mod (n + 1)`.
    pub fn projective_space(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("projective space needs n ≥ 1".into()));
        }
        let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        rays.push(LatticeVector::new(vec![-1; n]));
        let cones = (0..=n)
            .map(|i| {
                let omit = (i + n) % (n + 1);
                (0..=n).filter(|&r| r != omit).collect()
            })
            .collect();
        Ok(Self::new_unchecked(n, rays, cones))
    }

    /// Fan of the Hirzebruch surface `𝔽ₐ`: rays `(1,0), (0,1), (−1,a), (0,−1)`.
    pub fn hirzebruch(a: i64) -> Self {
        let rays = vec![
            LatticeVector::from([1, 0]),
            LatticeVector::from([0, 1]),
            LatticeVector::from([-1, a]),
            LatticeVector::from([0, -1]),
        ];
        Self::new_unchecked(
            2,
            rays,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
    }

    /// Product fan. Rays of `self` come first; cones are ordered with `self`'s cone index major.
    pub fn product(&self, other: &Fan) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let m1 = self.rays.len();
        let mut rays: Vec<LatticeVector> = self
            .rays
            .iter()
            .map(|r| r.concat(&LatticeVector::zero(n2)))
            .collect();
        rays.extend(other.rays.iter().map(|r| LatticeVector::zero(n1).concat(r)));
        let cones = self
            .cones
            .iter()
            .flat_map(|c1| {
                other.cones.iter().map(move |c2| {
                    c1.iter()
                        .copied()
                        .chain(c2.iter().map(|&r| r + m1))
                        .collect()
                })
            })
            .collect();
        Self::new_unchecked(n1 + n2, rays, cones)
    }

    /// Equivariant blow-up of the fixed point of `cone`: star subdivision at
    /// the sum of its rays.
    ///
    /// The new ray gets the last index. The cone that keeps all but the
    /// cone's first ray takes over index `cone`; the other `n − 1` new cones
    /// are appended.
    pub fn blowup_fixed_point(&self, cone: usize) -> Result<Self> {
        let sigma = self.cone(cone)?.to_vec();
        let new_ray = sigma.iter().fold(LatticeVector::zero(self.dim), |acc, &r| {
            &acc + &self.rays[r]
        });
        let new_index = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(new_ray);
        let replaced = |k: usize| -> Vec<usize> {
            let mut c = sigma.clone();
            c[k] = new_index;
            c.sort_unstable();
            c
        };
        let mut cones = self.cones.clone();
        cones[cone] = replaced(0);
        cones.extend((1..sigma.len()).map(replaced));
        Ok(Self::new_unchecked(self.dim, rays, cones))
    }

    /// Applies a lattice automorphism (rows of `matrix`) to every ray.
    pub fn transform(&self, matrix: &[LatticeVector]) -> Self {
        let rays = self
            .rays
            .iter()
            .map(|r| LatticeVector::new(matrix.iter().map(|row| row.dot(r)).collect()))
            .collect();
        Self::new_unchecked(self.dim, rays, self.cones.clone())
    }
}

/// Orders 2D vectors by their angle in `[0, 2π)`, exactly.
fn angle_cmp(u: &LatticeVector, w: &LatticeVector) -> std::cmp::Ordering {
    let half = |v: &[i64]| -> u8 { u8::from(v[1] < 0 || (v[1] == 0 && v[0] < 0)) };
    let (u, w) = (u.coords(), w.coords());
    half(u)
        .cmp(&half(w))
        .then_with(|| 0.cmp(&(u[0] * w[1] - u[1] * w[0])))
}

/// Largest `steps` accepted by [`random_fan_2d`].
pub const MAX_RANDOM_STEPS: usize = 12;

/// Picks a base surface from the seed: `ℙ²` or `𝔽ₐ` with `a ≤ 4`.
pub(crate) fn random_base_2d(rng: &mut ChaCha8Rng) -> (Fan, Option<i64>) {
    match rng.gen_range(0..6) {
        0 => (Fan::projective_space(2).expect("n = 2"), None),
        k => {
            let a = k - 1;
            (Fan::hirzebruch(a), Some(a))
        }
    }
}

/// Random smooth complete 2D fan: a base surface followed by `steps`
/// blow-ups of random fixed points. Deterministic in `seed`.
pub fn random_fan_2d(seed: u64, steps: usize) -> Result<Fan> {
    if steps > MAX_RANDOM_STEPS {
        return Err(Error::Input(format!(
            "at most {MAX_RANDOM_STEPS} blow-up steps, got {steps}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut fan, _) = random_base_2d(&mut rng);
    for _ in 0..steps {
        let cone = rng.gen_range(0..fan.num_cones());
        fan = fan.blowup_fixed_point(cone)?;
    }
    Ok(fan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Fan {
        Fan::projective_space(2).unwrap()
    }

    fn p1() -> Fan {
        Fan::projective_space(1).unwrap()
    }

    #[test]
    fn p2_validates() {
        let fan = p2();
        assert_eq!(fan.num_rays(), 3);
        assert_eq!(fan.num_cones(), 3);
        let report = fan.validate();
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn f3_rays_and_cones() {
        let fan = Fan::hirzebruch(3);
        let rays: Vec<Vec<i64>> = fan.rays().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(rays, vec![vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]]);
        assert!(fan.validate().passed());
    }

    #[test]
    fn deleting_a_cone_breaks_two_facets() {
        let fan = p2();
        let broken = Fan::new_unchecked(2, fan.rays().to_vec(), fan.cones()[1..].to_vec());
        let report = broken.validate();
        assert!(!report.passed());
        let pairing = report.check(Invariant::FacetPairing).unwrap();
        assert_eq!(pairing.offenses.len(), 2);
        assert!(Fan::new(2, fan.rays().to_vec(), fan.cones()[1..].to_vec()).is_err());
    }

    #[test]
    fn singular_cone_is_reported() {
        let rays = vec![
            LatticeVector::from([1, 0]),
            LatticeVector::from([1, 2]),
            LatticeVector::from([-1, -1]),
        ];
        let fan = Fan::new_unchecked(2, rays, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let report = fan.validate();
        let uni = report.check(Invariant::Unimodular).unwrap();
        assert_eq!(uni.offenses, vec![Offense::Cone(0)]);
    }

    #[test]
    fn non_primitive_ray_is_reported() {
        let rays = vec![
            LatticeVector::from([2, 0]),
            LatticeVector::from([0, 1]),
            LatticeVector::from([-1, -1]),
        ];
        let fan = Fan::new_unchecked(2, rays, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let report = fan.validate();
        assert!(!report.check(Invariant::PrimitiveRays).unwrap().passed());
    }

    #[test]
    fn double_winding_fails_only_angular_coverage() {
        // Six unimodular sectors winding twice around the origin.
        let rays: Vec<LatticeVector> = [[1, 0], [-1, 1], [0, -1], [1, 1], [-1, 0], [1, -1]]
            .into_iter()
            .map(LatticeVector::from)
            .collect();
        let cones = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        let fan = Fan::new_unchecked(2, rays, cones);
        let report = fan.validate();
        for check in &report.checks {
            let expect_pass = check.invariant != Invariant::AngularCoverage;
            assert_eq!(check.passed(), expect_pass, "{:?}", check.invariant);
        }
    }

    #[test]
    fn malformed_structure_short_circuits() {
        let fan = Fan::new_unchecked(2, vec![LatticeVector::from([1, 0])], vec![vec![0, 5]]);
        let report = fan.validate();
        assert_eq!(report.checks.len(), 1);
        assert!(!report.passed());
    }

    #[test]
    fn p2_walls_have_gamma_one() {
        let walls = p2().walls().unwrap();
        assert_eq!(walls.len(), 3);
        for w in &walls {
            assert_eq!(w.gamma, vec![1]);
        }
    }

    #[test]
    fn f3_walls() {
        let fan = Fan::hirzebruch(3);
        let walls = fan.walls().unwrap();
        assert_eq!(walls.len(), 4);
        let by_facet: BTreeMap<usize, &Wall> = walls.iter().map(|w| (w.facet_rays[0], w)).collect();
        // Facet (0,1): completing rays (1,0) and (−1,3), so γ = −3.
        let w = by_facet[&1];
        assert_eq!(w.gamma, vec![-3]);
        assert_eq!(w.extra_rays, [0, 2]);
        assert_eq!((w.cone_a, w.cone_b), (0, 1));
        assert_eq!(by_facet[&3].gamma, vec![3]);
        assert_eq!(by_facet[&0].gamma, vec![0]);
        assert_eq!(by_facet[&2].gamma, vec![0]);
        // The fiber wall joins p1 and p4.
        assert_eq!((by_facet[&0].cone_a, by_facet[&0].cone_b), (0, 3));
    }

    #[test]
    fn f0_walls_are_flat() {
        let walls = Fan::hirzebruch(0).walls().unwrap();
        assert_eq!(walls.len(), 4);
        assert!(walls.iter().all(|w| w.gamma == vec![0]));
        let prod = p1().product(&p1());
        assert!(prod.validate().passed());
        assert!(prod.walls().unwrap().iter().all(|w| w.gamma == vec![0]));
    }

    #[test]
    fn gamma_is_independent_of_which_cone_is_the_base() {
        let fan = random_fan_2d(11, 5).unwrap();
        for w in fan.walls().unwrap() {
            let swapped = fan
                .wall_relation(&w.facet_rays, w.cone_b, w.cone_a)
                .unwrap();
            assert_eq!(swapped.gamma, w.gamma);
            assert_eq!(swapped.extra_rays, w.extra_rays);
        }
    }

    #[test]
    fn blowup_of_p2() {
        let fan = p2().blowup_fixed_point(0).unwrap();
        assert_eq!(fan.num_rays(), 4);
        assert_eq!(fan.num_cones(), 4);
        assert!(fan.rays().contains(&LatticeVector::from([1, 1])));
        assert!(fan.validate().passed());
        assert!(p2().blowup_fixed_point(3).is_err());
    }

    #[test]
    fn projective_spaces_validate() {
        for n in 1..=4 {
            let fan = Fan::projective_space(n).unwrap();
            assert_eq!(fan.num_cones(), n + 1);
            assert!(fan.validate().passed(), "P^{n}");
            assert_eq!(fan.walls().unwrap().len(), n * (n + 1) / 2);
        }
        assert!(Fan::projective_space(0).is_err());
    }

    #[test]
    fn products_and_3d_blowups_validate() {
        let fan = p1().product(&Fan::hirzebruch(2));
        assert_eq!(fan.dim(), 3);
        assert_eq!(fan.num_cones(), 8);
        assert!(fan.validate().passed());
        let blown = Fan::projective_space(3)
            .unwrap()
            .blowup_fixed_point(2)
            .unwrap();
        assert_eq!(blown.num_cones(), 4 - 1 + 3);
        assert!(blown.validate().passed());
        assert!(blown.blowup_fixed_point(5).unwrap().validate().passed());
    }

    #[test]
    fn random_fans() {
        let base = random_fan_2d(0, 0).unwrap();
        assert!(base == p2() || (0..=4).any(|a| base == Fan::hirzebruch(a)));
        let fan = random_fan_2d(1, 3).unwrap();
        assert!((6..=7).contains(&fan.num_rays()));
        assert!(fan.validate().passed());
        assert_eq!(random_fan_2d(1, 3).unwrap(), fan);
        assert!(random_fan_2d(1, 13).is_err());
    }

    #[test]
    fn random_fan_properties() {
        for seed in 0..60 {
            let fan = random_fan_2d(seed, (seed % 13) as usize).unwrap();
            let report = fan.validate();
            assert!(report.passed(), "seed {seed}: {}", report.summary());
            let walls = fan.walls().unwrap();
            assert_eq!(walls.len(), fan.num_rays());
            assert_eq!(fan.num_cones(), fan.num_rays());
            for w in &walls {
                let mut sum = &fan.rays()[w.extra_rays[0]] + &fan.rays()[w.extra_rays[1]];
                for (&r, &g) in w.facet_rays.iter().zip(&w.gamma) {
                    sum = &sum + &fan.rays()[r].scale(g);
                }
                assert!(sum.is_zero(), "seed {seed}, wall {w}");
            }
        }
    }

    #[test]
    fn dual_bases_pair_to_identity() {
        let fan = random_fan_2d(5, 4).unwrap().product(&p1());
        for i in 0..fan.num_cones() {
            let rays = fan.cone_rays(i).unwrap();
            let dual = crate::lattice::dual_basis(&rays).unwrap();
            for (a, u) in dual.iter().enumerate() {
                for (b, v) in rays.iter().enumerate() {
                    assert_eq!(u.dot(v), i64::from(a == b));
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let fan = random_fan_2d(3, 2).unwrap();
        let text = serde_json::to_string(&fan).unwrap();
        assert!(text.starts_with("{\"dim\":2,\"rays\":[["));
        let back: Fan = serde_json::from_str(&text).unwrap();
        assert_eq!(back, fan);
    }
}
