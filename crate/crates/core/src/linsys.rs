//! Linear systems `𝓛(D, m₁,…,m_r)` with base points at torus-fixed points.
//!
//! Every fixed point (maximal cone) carries a multiplicity, unmarked points
//! carrying 0. Because the base scheme is torus-invariant, the sections of
//! the system are spanned by the monomials of the polytope whose vanishing
//! order at each marked point is large enough. That count gives `h⁰` exactly,
//! and `h¹` follows from the cohomology sequence of the base scheme, since
//! an ample divisor on a toric variety has no higher cohomology.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::divisor::{LatticePolytope, ToricDivisor};
use crate::error::{Error, Result};
use crate::fan::Wall;
use crate::lattice::{dual_basis, unimodular_solve, LatticeVector};

/// Which invariant curves the witness search may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMode {
    /// Every wall, with unmarked endpoints contributing multiplicity 0.
    #[default]
    AllFixedPoints,
    /// Only walls whose two endpoints both carry a positive multiplicity.
    StrictMarked,
}

#[derive(Clone, Debug)]
pub struct LinearSystemSpec {
    divisor: ToricDivisor,
    mults: Vec<i64>,
    polytope: LatticePolytope,
    points: Vec<LatticeVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub wall: Wall,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialityReport {
    pub virtual_dim: i64,
    pub effective_dim: i64,
    pub h1: i64,
    pub special: bool,
    pub witnesses: Vec<Witness>,
}

impl fmt::Display for SpecialityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v = {}, eff = {}, h1 = {}, special = {}, witnesses = {}",
            self.virtual_dim,
            self.effective_dim,
            self.h1,
            self.special,
            self.witnesses.len()
        )
    }
}

/// `binom(m + n − 1, n)`: conditions imposed by a point of multiplicity `m`
/// in dimension `n`.
pub fn point_conditions(m: i64, n: usize) -> i64 {
    if m <= 0 {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..n as i128 {
        acc = acc * (m as i128 + i) / (i + 1);
    }
    i64::try_from(acc).expect("condition count fits in i64")
}

/// Vanishing order at the fixed point of `cone` of the section attached to
/// the lattice point `m`: the coefficient sum of `m − V` in the basis of the
/// dual cone.
pub fn multiplicity_at(divisor: &ToricDivisor, m: &LatticeVector, cone: usize) -> Result<i64> {
    let rays = divisor.fan().cone_rays(cone)?;
    let generators = dual_basis(&rays)?;
    let offset = m - &divisor.vertex(cone)?;
    let coeffs = unimodular_solve(&generators, &offset)?;
    if coeffs.iter().any(|&c| c < 0) {
        return Err(Error::OutsidePolytope {
            point: m.coords().to_vec(),
            cone,
        });
    }
    Ok(coeffs.iter().sum())
}

/// Coordinates of `m − V` in the dual basis of a cone are the pairings with
/// its rays, so the multiplicity is the single linear functional
/// `⟨m, Σ vᵢ⟩ + Σ αᵢ`.
#[derive(Clone, Debug)]
struct LocalOrder {
    direction: LatticeVector,
    offset: i64,
}

impl LocalOrder {
    fn new(divisor: &ToricDivisor, cone: usize) -> Result<Self> {
        let fan = divisor.fan();
        let mut direction = LatticeVector::zero(fan.dim());
        let mut offset = 0;
        for &r in fan.cone(cone)? {
            direction = &direction + &fan.rays()[r];
            offset += divisor.alpha()[r];
        }
        Ok(Self { direction, offset })
    }

    fn at(&self, m: &LatticeVector) -> i64 {
        m.dot(&self.direction) + self.offset
    }
}

impl LinearSystemSpec {
    /// `mults` maps cone index to multiplicity; absent cones get 0.
    pub fn new(divisor: ToricDivisor, mults: &BTreeMap<usize, i64>) -> Result<Self> {
        let k = divisor.fan().num_cones();
        let mut dense = vec![0; k];
        for (&cone, &m) in mults {
            if cone >= k {
                return Err(Error::ConeIndex {
                    index: cone,
                    len: k,
                });
            }
            if m < 0 {
                return Err(Error::NegativeMultiplicity { cone, mult: m });
            }
            dense[cone] = m;
        }
        Self::from_dense(divisor, dense)
    }

    pub fn from_dense(divisor: ToricDivisor, mults: Vec<i64>) -> Result<Self> {
        let k = divisor.fan().num_cones();
        if mults.len() != k {
            return Err(Error::Input(format!(
                "{} multiplicities given for {k} fixed points",
                mults.len()
            )));
        }
        if let Some((cone, &mult)) = mults.iter().enumerate().find(|(_, &m)| m < 0) {
            return Err(Error::NegativeMultiplicity { cone, mult });
        }
        if !divisor.is_ample()? {
            return Err(Error::NotAmple);
        }
        let polytope = divisor.polytope()?;
        let points = polytope.lattice_points();
        Ok(Self {
            divisor,
            mults,
            polytope,
            points,
        })
    }

    #[inline]
    pub fn divisor(&self) -> &ToricDivisor {
        &self.divisor
    }

    /// Multiplicity per maximal cone.
    #[inline]
    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn mult(&self, cone: usize) -> i64 {
        self.mults.get(cone).copied().unwrap_or(0)
    }

    pub fn marked(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.mults.len()).filter(|&c| self.mults[c] > 0)
    }

    pub fn marks(&self) -> BTreeMap<usize, i64> {
        self.marked().map(|c| (c, self.mults[c])).collect()
    }

    #[inline]
    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    /// Lattice points of the polytope, lexicographically sorted.
    #[inline]
    pub fn lattice_points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.divisor.fan().dim()
    }

    /// `(w, c)` with multiplicity at `cone` equal to `⟨m, w⟩ + c` on the polytope.
    pub fn order_functional(&self, cone: usize) -> Result<(LatticeVector, i64)> {
        let order = LocalOrder::new(&self.divisor, cone)?;
        Ok((order.direction, order.offset))
    }

    /// Same divisor, keeping only the multiplicities at `cones`.
    pub fn restrict(&self, cones: &[usize]) -> Self {
        let mults = (0..self.mults.len())
            .map(|c| if cones.contains(&c) { self.mults[c] } else { 0 })
            .collect();
        Self {
            divisor: self.divisor.clone(),
            mults,
            polytope: self.polytope.clone(),
            points: self.points.clone(),
        }
    }

    pub fn with_mults(&self, mults: Vec<i64>) -> Result<Self> {
        if mults.len() != self.mults.len() || mults.iter().any(|&m| m < 0) {
            return Err(Error::Input("invalid multiplicity vector".into()));
        }
        Ok(Self {
            divisor: self.divisor.clone(),
            mults,
            polytope: self.polytope.clone(),
            points: self.points.clone(),
        })
    }

    fn orders(&self) -> Vec<(usize, i64, LocalOrder)> {
        self.marked()
            .map(|c| {
                let order = LocalOrder::new(&self.divisor, c).expect("cone index in range");
                (c, self.mults[c], order)
            })
            .collect()
    }

    /// Lattice points removed by the multiplicity conditions at `cone` alone.
    pub fn cut_by(&self, cone: usize) -> Vec<LatticeVector> {
        let m = self.mult(cone);
        if m == 0 {
            return Vec::new();
        }
        let order = LocalOrder::new(&self.divisor, cone).expect("cone index in range");
        self.points
            .iter()
            .filter(|p| order.at(p) < m)
            .cloned()
            .collect()
    }

    /// Lattice points failing at least one multiplicity condition, sorted.
    pub fn cut_points(&self) -> Vec<LatticeVector> {
        let orders = self.orders();
        self.points
            .iter()
            .filter(|p| orders.iter().any(|(_, m, o)| o.at(p) < *m))
            .cloned()
            .collect()
    }

    /// Lattice points meeting every multiplicity condition: a monomial basis of `H⁰(𝓛)`.
    pub fn surviving_points(&self) -> Vec<LatticeVector> {
        let orders = self.orders();
        self.points
            .iter()
            .filter(|p| orders.iter().all(|(_, m, o)| o.at(p) >= *m))
            .cloned()
            .collect()
    }

    /// `h⁰(D) − Σ binom(mᵢ + n − 1, n) − 1`.
    pub fn virtual_dim(&self) -> i64 {
        let n = self.dim();
        let conditions: i64 = self.mults.iter().map(|&m| point_conditions(m, n)).sum();
        self.points.len() as i64 - conditions - 1
    }

    /// `h⁰(𝓛) − 1`; −1 for an empty system.
    pub fn effective_dim(&self) -> i64 {
        let orders = self.orders();
        let survivors = self
            .points
            .iter()
            .filter(|p| orders.iter().all(|(_, m, o)| o.at(p) >= *m))
            .count();
        survivors as i64 - 1
    }

    pub fn h1(&self) -> Result<i64> {
        let h1 = self.effective_dim() - self.virtual_dim();
        if h1 < 0 {
            return Err(Error::NegativeH1(h1));
        }
        Ok(h1)
    }

    /// Intersection of the system with the invariant curve of `wall`, taken
    /// on the blow-up of its two endpoints: `D·C − m_j − m_k`.
    pub fn system_curve_intersection(&self, wall: &Wall) -> i64 {
        self.divisor.curve_degree(wall) - self.mult(wall.cone_a) - self.mult(wall.cone_b)
    }

    fn eligible(&self, wall: &Wall, mode: WitnessMode) -> bool {
        match mode {
            WitnessMode::AllFixedPoints => true,
            WitnessMode::StrictMarked => self.mult(wall.cone_a) > 0 && self.mult(wall.cone_b) > 0,
        }
    }

    /// All walls whose curve meets the system in `≤ −2`, in canonical wall order.
    pub fn witnesses(&self, mode: WitnessMode) -> Result<Vec<Witness>> {
        Ok(self
            .divisor
            .fan()
            .walls()?
            .into_iter()
            .filter(|w| self.eligible(w, mode))
            .filter_map(|wall| {
                let value = self.system_curve_intersection(&wall);
                (value <= -2).then_some(Witness { wall, value })
            })
            .collect())
    }

    pub fn theorem_witness(&self, mode: WitnessMode) -> Result<Option<Witness>> {
        Ok(self.witnesses(mode)?.into_iter().next())
    }

    /// Assembles the report. If the lattice oracle and the witness search
    /// disagree the report is returned inside [`Error::TheoremViolation`].
    pub fn speciality_report(&self, mode: WitnessMode) -> Result<SpecialityReport> {
        let report = self.report_unchecked(mode)?;
        if report.special != !report.witnesses.is_empty() {
            return Err(Error::TheoremViolation {
                report: Box::new(report),
            });
        }
        Ok(report)
    }

    /// The report without the equivalence check.
    pub fn report_unchecked(&self, mode: WitnessMode) -> Result<SpecialityReport> {
        let virtual_dim = self.virtual_dim();
        let effective_dim = self.effective_dim();
        let h1 = self.h1()?;
        Ok(SpecialityReport {
            virtual_dim,
            effective_dim,
            h1,
            special: h1 > 0,
            witnesses: self.witnesses(mode)?,
        })
    }
}
