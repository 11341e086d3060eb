//! Divisor classes on blow-ups of `ℙ²` and of Hirzebruch surfaces `𝔽ₐ`.
//!
//! A class is stored by its base coefficients (`L`, or `H` and `F` with
//! `H² = a`, `H·F = 1`, `F² = 0`) and the multiplicities `mᵢ` of the
//! exceptional curves, so that the class is `base − Σ mᵢ·Eᵢ`.
//!
//! The reduction subtracts rational curves meeting the class negatively
//! until none is left. Candidate curves come from a bounded, heuristic
//! search: nothing here proves that a candidate class is irreducible.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linsys::{LinearSystemSpec, WitnessMode};

/// Largest accepted coefficient bound for [`candidate_curves`].
pub const MAX_BOUND: i64 = 10;
/// Step cap for [`reduce`].
pub const MAX_STEPS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceKind {
    P2,
    Fa(i64),
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::P2 => write!(f, "P2"),
            SurfaceKind::Fa(a) => write!(f, "F{a}"),
        }
    }
}

/// The surface `kind` blown up at `r` points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceModel {
    kind: SurfaceKind,
    r: usize,
}

impl SurfaceModel {
    pub fn new(kind: SurfaceKind, r: usize) -> Result<Self> {
        if let SurfaceKind::Fa(a) = kind {
            if a < 0 {
                return Err(Error::Input(format!(
                    "Hirzebruch index must be ≥ 0, got {a}"
                )));
            }
        }
        Ok(Self { kind, r })
    }

    pub fn p2(r: usize) -> Arc<Self> {
        Arc::new(Self {
            kind: SurfaceKind::P2,
            r,
        })
    }

    pub fn hirzebruch(a: i64, r: usize) -> Result<Arc<Self>> {
        Self::new(SurfaceKind::Fa(a), r).map(Arc::new)
    }

    #[inline]
    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn base_rank(&self) -> usize {
        match self.kind {
            SurfaceKind::P2 => 1,
            SurfaceKind::Fa(_) => 2,
        }
    }

    fn base_form(&self, x: &[i64], y: &[i64]) -> i64 {
        match self.kind {
            SurfaceKind::P2 => x[0] * y[0],
            SurfaceKind::Fa(a) => a * x[0] * y[0] + x[0] * y[1] + x[1] * y[0],
        }
    }

    fn name_of_base(&self) -> &'static [&'static str] {
        match self.kind {
            SurfaceKind::P2 => &["L"],
            SurfaceKind::Fa(_) => &["H", "F"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PicardClass {
    model: Arc<SurfaceModel>,
    base: Vec<i64>,
    mults: Vec<i64>,
}

impl PicardClass {
    pub fn new(model: Arc<SurfaceModel>, base: Vec<i64>, mults: Vec<i64>) -> Result<Self> {
        if base.len() != model.base_rank() {
            return Err(Error::DimensionMismatch {
                expected: model.base_rank(),
                got: base.len(),
            });
        }
        if mults.len() != model.r() {
            return Err(Error::DimensionMismatch {
                expected: model.r(),
                got: mults.len(),
            });
        }
        Ok(Self { model, base, mults })
    }

    pub fn zero(model: &Arc<SurfaceModel>) -> Self {
        Self {
            base: vec![0; model.base_rank()],
            mults: vec![0; model.r()],
            model: Arc::clone(model),
        }
    }

    fn with_base(model: &Arc<SurfaceModel>, base: Vec<i64>, mults: Vec<i64>) -> Self {
        debug_assert_eq!(base.len(), model.base_rank());
        Self {
            model: Arc::clone(model),
            base,
            mults,
        }
    }

    /// The exceptional curve `Eᵢ` (multiplicity −1 in this encoding).
    pub fn exceptional(model: &Arc<SurfaceModel>, i: usize) -> Self {
        let mut c = Self::zero(model);
        c.mults[i] = -1;
        c
    }

    /// Pullback of a base class with no exceptional part.
    pub fn pullback(model: &Arc<SurfaceModel>, base: Vec<i64>) -> Result<Self> {
        Self::new(Arc::clone(model), base, vec![0; model.r()])
    }

    /// Canonical class: `−3L + ΣEᵢ` or `−2H + (a − 2)F + ΣEᵢ`.
    pub fn canonical(model: &Arc<SurfaceModel>) -> Self {
        let base = match model.kind() {
            SurfaceKind::P2 => vec![-3],
            SurfaceKind::Fa(a) => vec![-2, a - 2],
        };
        Self::with_base(model, base, vec![-1; model.r()])
    }

    /// The negative section `H − aF` of `𝔽ₐ`.
    pub fn negative_section(model: &Arc<SurfaceModel>) -> Option<Self> {
        match model.kind() {
            SurfaceKind::P2 => None,
            SurfaceKind::Fa(a) => Some(Self::with_base(model, vec![1, -a], vec![0; model.r()])),
        }
    }

    /// The fiber class `F`, or the line class on `ℙ²`.
    pub fn ruling(model: &Arc<SurfaceModel>) -> Self {
        let base = match model.kind() {
            SurfaceKind::P2 => vec![1],
            SurfaceKind::Fa(_) => vec![0, 1],
        };
        Self::with_base(model, base, vec![0; model.r()])
    }

    #[inline]
    pub fn model(&self) -> &Arc<SurfaceModel> {
        &self.model
    }

    #[inline]
    pub fn base(&self) -> &[i64] {
        &self.base
    }

    /// Coefficients of `−Eᵢ`.
    #[inline]
    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn is_zero(&self) -> bool {
        self.base.iter().chain(&self.mults).all(|&c| c == 0)
    }

    /// Flat coefficient vector: base coefficients followed by multiplicities.
    pub fn coeffs(&self) -> Vec<i64> {
        self.base.iter().chain(&self.mults).copied().collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::with_base(
            &self.model,
            self.base.iter().map(|c| c * k).collect(),
            self.mults.iter().map(|c| c * k).collect(),
        )
    }

    fn check_model(&self, other: &Self) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch);
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Self) -> Result<i64> {
        self.check_model(other)?;
        Ok(self.dot(other))
    }

    fn dot(&self, other: &Self) -> i64 {
        let exceptional: i64 = self
            .mults
            .iter()
            .zip(&other.mults)
            .map(|(a, b)| a * b)
            .sum();
        self.model.base_form(&self.base, &other.base) - exceptional
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot(self)
    }

    pub fn dot_canonical(&self) -> i64 {
        self.dot(&Self::canonical(&self.model))
    }

    /// Riemann–Roch virtual dimension `(c² − c·K)/2`.
    pub fn rr_virtual_dim(&self) -> Result<i64> {
        half(self.self_intersection() - self.dot_canonical())
    }

    /// Arithmetic genus `(c² + c·K)/2 + 1`.
    pub fn genus(&self) -> Result<i64> {
        Ok(half(self.self_intersection() + self.dot_canonical())? + 1)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        Ok(self - other)
    }
}

fn half(x: i64) -> Result<i64> {
    if x % 2 != 0 {
        return Err(Error::Parity(x));
    }
    Ok(x / 2)
}

impl Add for &PicardClass {
    type Output = PicardClass;

    /// Panics on a model mismatch; see [`PicardClass::try_add`].
    fn add(self, rhs: Self) -> PicardClass {
        assert_eq!(self.model, rhs.model, "classes on different models");
        PicardClass::with_base(
            &self.model,
            self.base
                .iter()
                .zip(&rhs.base)
                .map(|(a, b)| a + b)
                .collect(),
            self.mults
                .iter()
                .zip(&rhs.mults)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &PicardClass {
    type Output = PicardClass;

    fn sub(self, rhs: Self) -> PicardClass {
        self + &(-rhs)
    }
}

impl Neg for &PicardClass {
    type Output = PicardClass;

    fn neg(self) -> PicardClass {
        self.scale(-1)
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = self
            .base
            .iter()
            .zip(self.model.name_of_base())
            .filter(|(c, _)| **c != 0)
            .map(|(&c, name)| (c, (*name).to_string()))
            .collect();
        let r = self.mults.len();
        let uniform = r >= 2 && self.mults.iter().all(|&m| m == self.mults[0]);
        if uniform && self.mults[0] != 0 {
            terms.push((-self.mults[0], format!("ΣE{r}")));
        } else {
            for (i, &m) in self.mults.iter().enumerate() {
                if m != 0 {
                    terms.push((-m, format!("E{}", i + 1)));
                }
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, name)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            match (k, c.abs()) {
                (0, 1) if *c < 0 => write!(f, "-{name}")?,
                (0, 1) => write!(f, "{name}")?,
                (0, a) => write!(f, "{}{a}{name}", if *c < 0 { "-" } else { "" })?,
                (_, 1) => write!(f, " {sign} {name}")?,
                (_, a) => write!(f, " {sign} {a}{name}")?,
            }
        }
        Ok(())
    }
}

/// Serializable snapshot of a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCoeffs {
    pub base: Vec<i64>,
    pub mults: Vec<i64>,
}

impl From<&PicardClass> for ClassCoeffs {
    fn from(c: &PicardClass) -> Self {
        Self {
            base: c.base.clone(),
            mults: c.mults.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    /// Strict transform of a torus-invariant curve through its fixed points.
    Invariant,
    Exceptional,
    NegativeSection,
    /// Fibers, or lines on `ℙ²`, through at most two of the points.
    Ruling,
    /// Passes the genus and self-intersection filters; not known to be a curve.
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub class: PicardClass,
    pub kind: CandidateKind,
}

/// Reference class pairing positively with every candidate family:
/// `(r + 1)·(H + F) − ΣEᵢ`, or `(r + 1)·L − ΣEᵢ` on `ℙ²`.
pub fn reference_class(model: &Arc<SurfaceModel>) -> PicardClass {
    let k = model.r() as i64 + 1;
    let base = match model.kind() {
        SurfaceKind::P2 => vec![k],
        SurfaceKind::Fa(_) => vec![k, k],
    };
    PicardClass::with_base(model, base, vec![1; model.r()])
}

/// Deterministic list of rational-curve candidates.
///
/// In order: the `Eᵢ`; the negative section; fibers through at most one
/// point (lines through at most two on `ℙ²`); bounded genus-0 classes with
/// non-negative virtual dimension; the remaining bounded classes; fibers
/// through two points. Within each group classes are sorted by coefficients.
pub fn candidate_curves(model: &Arc<SurfaceModel>, bound: i64) -> Result<Vec<Candidate>> {
    if bound > MAX_BOUND {
        return Err(Error::BoundTooLarge(bound));
    }
    if bound < 0 {
        return Err(Error::Input(format!("negative coefficient bound {bound}")));
    }
    let r = model.r();
    let mut tiers: Vec<Vec<Candidate>> = vec![Vec::new(); 6];
    let with_points = |base: Vec<i64>, pts: &[usize]| {
        let mut mults = vec![0; r];
        for &i in pts {
            mults[i] = 1;
        }
        PicardClass::with_base(model, base, mults)
    };

    for i in 0..r {
        tiers[0].push(Candidate {
            class: PicardClass::exceptional(model, i),
            kind: CandidateKind::Exceptional,
        });
    }
    if let Some(gamma) = PicardClass::negative_section(model) {
        tiers[1].push(Candidate {
            class: gamma,
            kind: CandidateKind::NegativeSection,
        });
    }
    let ruling = PicardClass::ruling(model).base;
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    subsets.extend((0..r).map(|i| vec![i]));
    let pairs: Vec<Vec<usize>> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| vec![i, j]))
        .collect();
    let (early, late) = match model.kind() {
        SurfaceKind::P2 => (subsets.iter().chain(&pairs).collect::<Vec<_>>(), vec![]),
        SurfaceKind::Fa(_) => (subsets.iter().collect(), pairs.iter().collect()),
    };
    for s in early {
        tiers[2].push(Candidate {
            class: with_points(ruling.clone(), s),
            kind: CandidateKind::Ruling,
        });
    }
    for s in late {
        tiers[5].push(Candidate {
            class: with_points(ruling.clone(), s),
            kind: CandidateKind::Ruling,
        });
    }

    let min_self = -match model.kind() {
        SurfaceKind::P2 => 2,
        SurfaceKind::Fa(a) => a.max(2),
    };
    let mut patterns: Vec<Vec<usize>> = vec![vec![]];
    if r > 0 {
        patterns.push((0..r).collect());
    }
    if r > 1 {
        patterns.extend((0..r).map(|i| vec![i]));
    }
    for base in base_grid(model, bound) {
        for pts in &patterns {
            let class = with_points(base.clone(), pts);
            if class.genus()? != 0 || class.self_intersection() < min_self {
                continue;
            }
            let tier = if class.rr_virtual_dim()? >= 0 { 3 } else { 4 };
            tiers[tier].push(Candidate {
                class,
                kind: CandidateKind::Heuristic,
            });
        }
    }

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mut tier in tiers {
        tier.sort_by_key(|x| x.class.coeffs());
        for cand in tier {
            if seen.insert(cand.class.coeffs()) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// Base coefficient vectors in `[−B, B]` that are non-zero and pair
/// non-negatively with the nef classes `H` and `F` (degree ≥ 1 on `ℙ²`).
fn base_grid(model: &SurfaceModel, bound: i64) -> Vec<Vec<i64>> {
    match model.kind() {
        SurfaceKind::P2 => (1..=bound).map(|d| vec![d]).collect(),
        SurfaceKind::Fa(a) => {
            let mut out = Vec::new();
            for h in 0..=bound {
                for f in -bound..=bound {
                    if (h, f) != (0, 0) && a * h + f >= 0 {
                        out.push(vec![h, f]);
                    }
                }
            }
            out
        }
    }
}

/// Invariant curves of a toric `ℙ²` or `𝔽ₐ` system, as strict transforms
/// through the fixed points they join. Every fixed point is blown up.
pub fn invariant_curve_candidates(spec: &LinearSystemSpec) -> Result<Vec<Candidate>> {
    let model = bridge_model(spec.divisor().fan())?;
    let fan = spec.divisor().fan();
    let mut out = Vec::new();
    for wall in fan.walls()? {
        let ray = wall.facet_rays[0];
        let mut alpha = vec![0; fan.num_rays()];
        alpha[ray] = 1;
        let mut class = PicardClass::pullback(&model, bridge_base(model.kind(), &alpha))?;
        class.mults[wall.cone_a] = 1;
        class.mults[wall.cone_b] = 1;
        out.push(Candidate {
            class,
            kind: CandidateKind::Invariant,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// No candidate meets the class negatively.
    Exhausted,
    /// The class pairs negatively with the reference class, so it has no sections.
    EvidentlyEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub subtracted: ClassCoeffs,
    pub label: String,
    pub kind: CandidateKind,
    pub intersection: i64,
    pub v_after: i64,
    /// Set when the subtracted class does not pair positively with the reference class.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: ClassCoeffs,
    pub steps: Vec<ReductionStep>,
    pub final_class: ClassCoeffs,
    pub v_start: i64,
    pub v_final: i64,
    pub stop: StopReason,
    pub minus_one_special: bool,
}

fn first_qualifying<'a>(
    class: &PicardClass,
    candidates: &'a [Candidate],
) -> Option<(&'a Candidate, i64)> {
    candidates.iter().find_map(|c| {
        let x = class.dot(&c.class);
        (x <= -1).then_some((c, x))
    })
}

fn check_candidates(class: &PicardClass, candidates: &[Candidate]) -> Result<()> {
    if candidates.is_empty() {
        return Err(Error::NoCandidates);
    }
    if candidates.iter().any(|c| c.class.model != class.model) {
        return Err(Error::ModelMismatch);
    }
    Ok(())
}

/// Subtracts the first candidate with `class·C ≤ −1` until none is left.
pub fn reduce(class: &PicardClass, candidates: &[Candidate]) -> Result<ReductionTrace> {
    check_candidates(class, candidates)?;
    reduce_from(class, candidates, MAX_STEPS)
}

fn reduce_from(
    class: &PicardClass,
    candidates: &[Candidate],
    cap: usize,
) -> Result<ReductionTrace> {
    let reference = reference_class(&class.model);
    let v_start = class.rr_virtual_dim()?;
    let mut current = class.clone();
    let mut steps = Vec::new();
    let stop = loop {
        if current.dot(&reference) < 0 {
            break StopReason::EvidentlyEmpty;
        }
        let Some((cand, x)) = first_qualifying(&current, candidates) else {
            break StopReason::Exhausted;
        };
        if steps.len() == cap {
            return Err(Error::NonTermination(cap));
        }
        current = &current - &cand.class;
        steps.push(ReductionStep {
            subtracted: (&cand.class).into(),
            label: cand.class.to_string(),
            kind: cand.kind,
            intersection: x,
            v_after: current.rr_virtual_dim()?,
            flagged: cand.class.dot(&reference) <= 0,
        });
    };
    let v_final = current.rr_virtual_dim()?;
    Ok(ReductionTrace {
        start: class.into(),
        steps,
        final_class: (&current).into(),
        v_start,
        v_final,
        stop,
        minus_one_special: v_final > v_start,
    })
}

/// Runs [`reduce`] and reports whether the virtual dimension went up.
pub fn is_minus_one_special(
    class: &PicardClass,
    candidates: &[Candidate],
) -> Result<(bool, ReductionTrace)> {
    let trace = reduce(class, candidates)?;
    Ok((trace.minus_one_special, trace))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Outcome {
    pub final_class: Vec<i64>,
    pub v_final: i64,
    pub minus_one_special: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderExploration {
    pub outcomes: BTreeSet<Outcome>,
    pub states: usize,
    /// Some branch was cut off by the depth or state limit and finished in canonical order.
    pub truncated: bool,
    pub order_sensitive: bool,
}

/// Tries every qualifying candidate at each of the first `depth` steps,
/// then finishes each branch in canonical order.
pub fn explore_orders(
    class: &PicardClass,
    candidates: &[Candidate],
    depth: usize,
    max_states: usize,
) -> Result<OrderExploration> {
    check_candidates(class, candidates)?;
    let reference = reference_class(&class.model);
    let v_start = class.rr_virtual_dim()?;
    let mut outcomes = BTreeSet::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::from([(class.clone(), 0usize)]);
    seen.insert(class.coeffs());
    let mut truncated = false;
    let finish = |c: &PicardClass, outcomes: &mut BTreeSet<Outcome>| -> Result<()> {
        let trace = reduce_from(c, candidates, MAX_STEPS)?;
        outcomes.insert(Outcome {
            final_class: trace
                .final_class
                .base
                .iter()
                .chain(&trace.final_class.mults)
                .copied()
                .collect(),
            v_final: trace.v_final,
            minus_one_special: trace.v_final > v_start,
        });
        Ok(())
    };
    while let Some((current, d)) = queue.pop_front() {
        let next: Vec<&Candidate> = if current.dot(&reference) < 0 {
            Vec::new()
        } else {
            candidates
                .iter()
                .filter(|c| current.dot(&c.class) <= -1)
                .collect()
        };
        if next.is_empty() {
            finish(&current, &mut outcomes)?;
            continue;
        }
        if d == depth || seen.len() >= max_states {
            truncated = true;
            finish(&current, &mut outcomes)?;
            continue;
        }
        for cand in next {
            let child = &current - &cand.class;
            if seen.insert(child.coeffs()) {
                queue.push_back((child, d + 1));
            }
        }
    }
    let verdicts: BTreeSet<bool> = outcomes.iter().map(|o| o.minus_one_special).collect();
    Ok(OrderExploration {
        states: seen.len(),
        truncated,
        order_sensitive: verdicts.len() > 1,
        outcomes,
    })
}

fn bridge_model(fan: &Fan) -> Result<Arc<SurfaceModel>> {
    let r = fan.num_cones();
    if *fan == Fan::projective_space(2)? {
        return Ok(SurfaceModel::p2(r));
    }
    if fan.dim() == 2 && fan.num_rays() == 4 {
        let a = fan.rays()[2].coords()[1];
        if a >= 0 && *fan == Fan::hirzebruch(a) {
            return SurfaceModel::hirzebruch(a, r);
        }
    }
    Err(Error::NotStandardSurface)
}

fn bridge_base(kind: SurfaceKind, alpha: &[i64]) -> Vec<i64> {
    match kind {
        SurfaceKind::P2 => vec![alpha.iter().sum()],
        // D₀ ~ D₂ ~ F, D₁ ~ H − aF, D₃ ~ H.
        SurfaceKind::Fa(a) => vec![alpha[1] + alpha[3], alpha[0] + alpha[2] - a * alpha[1]],
    }
}

/// The class `π*D − Σ mᵢEᵢ` of a toric system on the standard `ℙ²` or
/// `𝔽ₐ` fan, with one exceptional curve per fixed point (cone order).
pub fn class_of_system(spec: &LinearSystemSpec) -> Result<PicardClass> {
    let model = bridge_model(spec.divisor().fan())?;
    let base = bridge_base(model.kind(), spec.divisor().alpha());
    PicardClass::new(model, base, spec.mults().to_vec())
}

/// One row of the speciality survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyEntry {
    pub class: ClassCoeffs,
    pub h1: i64,
    pub special: bool,
    /// Verdict of the canonical-order reduction.
    pub minus_one_special: bool,
    /// Whether some order within the exploration bounds reaches a higher virtual dimension.
    pub minus_one_special_some_order: bool,
    pub agree: bool,
}

/// Compares the lattice-point verdict with the (−1)-special verdicts, using
/// the invariant curves followed by the bounded candidates.
pub fn survey_system(spec: &LinearSystemSpec, bound: i64) -> Result<SurveyEntry> {
    let class = class_of_system(spec)?;
    let mut candidates = invariant_curve_candidates(spec)?;
    candidates.extend(candidate_curves(class.model(), bound)?);
    let (minus_one_special, _) = is_minus_one_special(&class, &candidates)?;
    let explored = explore_orders(&class, &candidates, 6, 20_000)?;
    let some_order = explored.outcomes.iter().any(|o| o.minus_one_special);
    let report = spec.report_unchecked(WitnessMode::AllFixedPoints)?;
    Ok(SurveyEntry {
        class: (&class).into(),
        h1: report.h1,
        special: report.special,
        minus_one_special,
        minus_one_special_some_order: some_order,
        agree: report.special == minus_one_special,
    })
}
