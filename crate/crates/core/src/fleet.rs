//! Random fans, ample divisors and systems, and the fuzz runners built on them.
//!
//! Ample divisors on a 2D fan are built by blowing the fan down to a
//! minimal model, picking an ample divisor there, and lifting it back one
//! blow-up at a time: the pullback `k·π*D` minus the new exceptional curve,
//! with `k = 2` always ample and `k = 1` tried first to keep polytopes small.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisor::ToricDivisor;
use crate::error::{Error, Result};
use crate::fan::{random_fan_2d, Fan, Wall};
use crate::io::SystemFile;
use crate::lattice::LatticeVector;
use crate::linsys::{LinearSystemSpec, SpecialityReport, WitnessMode};
use crate::surface::{candidate_curves, survey_system, PicardClass, SurfaceModel, SurveyEntry};

/// Per-trial generator, independent of how trials are scheduled.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Rays of a complete 2D fan in cyclic order, read off the cone adjacency.
fn cyclic_order(fan: &Fan) -> Result<Vec<usize>> {
    let m = fan.num_rays();
    let mut nbrs = vec![Vec::new(); m];
    for c in fan.cones() {
        nbrs[c[0]].push(c[1]);
        nbrs[c[1]].push(c[0]);
    }
    if nbrs.iter().any(|n| n.len() != 2) {
        return Err(Error::InvalidFan("not a complete 2D fan".into()));
    }
    let mut order = vec![0, nbrs[0][0]];
    while order.len() < m {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = if nbrs[cur][0] == prev {
            nbrs[cur][1]
        } else {
            nbrs[cur][0]
        };
        if next == 0 {
            return Err(Error::InvalidFan("ray cycle closes early".into()));
        }
        order.push(next);
    }
    Ok(order)
}

fn cycle_fan(rays: &[LatticeVector], cycle: &[usize]) -> (Fan, Vec<usize>) {
    let local: Vec<LatticeVector> = cycle.iter().map(|&i| rays[i].clone()).collect();
    let k = cycle.len();
    let cones = (0..k).map(|i| {
        let mut c = vec![i, (i + 1) % k];
        c.sort_unstable();
        c
    });
    (
        Fan::new_unchecked(2, local, cones.collect()),
        cycle.to_vec(),
    )
}

fn ample_on_cycle(rays: &[LatticeVector], cycle: &[usize], alpha: &[i64]) -> Result<bool> {
    let (fan, idx) = cycle_fan(rays, cycle);
    let local = idx.iter().map(|&i| alpha[i]).collect();
    ToricDivisor::new(Arc::new(fan), local)?.is_ample()
}

/// Random ample divisor on a 2D fan via blow-down and lift.
fn random_ample_2d(fan: &Arc<Fan>, rng: &mut impl Rng) -> Result<ToricDivisor> {
    let rays = fan.rays();
    let mut cycle = cyclic_order(fan)?;
    let mut removed = Vec::new();
    while cycle.len() > 3 {
        let k = cycle.len();
        let contractible: Vec<usize> = (0..k)
            .filter(|&i| {
                let (p, q) = (cycle[(i + k - 1) % k], cycle[(i + 1) % k]);
                &rays[p] + &rays[q] == rays[cycle[i]]
            })
            .collect();
        let Some(&i) = contractible.choose(rng) else {
            break;
        };
        let k = cycle.len();
        removed.push((cycle[i], cycle[(i + k - 1) % k], cycle[(i + 1) % k]));
        cycle.remove(i);
    }

    let mut alpha = vec![0i64; rays.len()];
    let mut found = false;
    'search: for bound in 1..=4 {
        for _ in 0..200 {
            for &i in &cycle {
                alpha[i] = rng.gen_range(0..=bound);
            }
            if ample_on_cycle(rays, &cycle, &alpha)? {
                found = true;
                break 'search;
            }
        }
    }
    if !found {
        return rejection_sample(fan, rng);
    }

    while let Some((ray, p, q)) = removed.pop() {
        let pos = cycle
            .iter()
            .position(|&x| x == p)
            .expect("neighbour present");
        let k = cycle.len();
        let insert_at = if cycle[(pos + 1) % k] == q {
            pos + 1
        } else {
            pos
        };
        cycle.insert(insert_at, ray);
        let first: i64 = rng.gen_range(1..=2);
        let mut lifted = None;
        for scale in [first, 2] {
            let mut trial = alpha.clone();
            for &i in &cycle {
                trial[i] *= scale;
            }
            trial[ray] = scale * (alpha[p] + alpha[q]) - 1;
            if ample_on_cycle(rays, &cycle, &trial)? {
                lifted = Some(trial);
                break;
            }
        }
        alpha = lifted.expect("doubling keeps the lift ample");
    }

    let u = LatticeVector::from([rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
    let divisor = ToricDivisor::new(Arc::clone(fan), alpha)?.translate(&u);
    if divisor.is_ample()? {
        Ok(divisor)
    } else {
        rejection_sample(fan, rng)
    }
}

/// Uniform coefficients in growing boxes until one is ample.
fn rejection_sample(fan: &Arc<Fan>, rng: &mut impl Rng) -> Result<ToricDivisor> {
    for bound in 1..=6 {
        for _ in 0..500 {
            let alpha = (0..fan.num_rays())
                .map(|_| rng.gen_range(0..=bound))
                .collect();
            let d = ToricDivisor::new(Arc::clone(fan), alpha)?;
            if d.is_ample()? {
                return Ok(d);
            }
        }
    }
    Err(Error::Input(
        "no ample divisor found by random search".into(),
    ))
}

/// A random ample divisor on `fan`.
pub fn random_ample_divisor(fan: &Arc<Fan>, rng: &mut impl Rng) -> Result<ToricDivisor> {
    if fan.dim() == 2 {
        random_ample_2d(fan, rng)
    } else {
        rejection_sample(fan, rng)
    }
}

/// Ample divisor on a random 2D fan with at most `max_steps` blow-ups.
pub fn random_2d_case(rng: &mut impl Rng, max_steps: usize) -> Result<ToricDivisor> {
    let steps = rng.gen_range(0..=max_steps);
    let fan = Arc::new(random_fan_2d(rng.gen(), steps)?);
    random_ample_divisor(&fan, rng)
}

/// Ample divisor on a random 3D product: `ℙ¹` times a small 2D fan, in
/// either order, or `(ℙ¹)³`.
pub fn random_3d_case(rng: &mut impl Rng) -> Result<ToricDivisor> {
    let p1 = Arc::new(Fan::projective_space(1)?);
    let line = |rng: &mut dyn rand::RngCore| -> Result<ToricDivisor> {
        ToricDivisor::new(Arc::clone(&p1), vec![0, rng.gen_range(1..=2)])
    };
    let (left, right) = if rng.gen_ratio(1, 5) {
        let a = line(rng)?;
        let b = line(rng)?;
        (product_divisor(&a, &b), line(rng)?)
    } else {
        let surface = random_2d_case(rng, 2)?;
        let l = line(rng)?;
        if rng.gen() {
            (l, surface)
        } else {
            (surface, l)
        }
    };
    Ok(product_divisor(&left, &right))
}

/// `D₁ ⊠ D₂` on the product fan; ample when both factors are.
pub fn product_divisor(a: &ToricDivisor, b: &ToricDivisor) -> ToricDivisor {
    let fan = Arc::new(a.fan().product(b.fan()));
    let alpha = a.alpha().iter().chain(b.alpha()).copied().collect();
    ToricDivisor::new(fan, alpha).expect("lengths add up")
}

/// Random multiplicities: each fixed point marked with probability ½, `m ∈ 1..=max_mult`.
pub fn random_marks(divisor: &ToricDivisor, rng: &mut impl Rng, max_mult: i64) -> Vec<i64> {
    (0..divisor.fan().num_cones())
        .map(|_| {
            if rng.gen() {
                rng.gen_range(1..=max_mult)
            } else {
                0
            }
        })
        .collect()
}

/// A random system in dimension 2 (fans with at most 8 rays) or 3 (products).
pub fn random_system(rng: &mut impl Rng, dim: usize, max_mult: i64) -> Result<LinearSystemSpec> {
    let divisor = match dim {
        2 => random_2d_case(rng, 4)?,
        3 => random_3d_case(rng)?,
        _ => {
            return Err(Error::Input(format!(
                "fuzzing supports dimensions 2 and 3, got {dim}"
            )))
        }
    };
    let marks = random_marks(&divisor, rng, max_mult);
    LinearSystemSpec::from_dense(divisor, marks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDegreeFailure {
    pub fan: Fan,
    pub alpha: Vec<i64>,
    pub wall: Wall,
    pub curve_degree: i64,
    pub edge_points: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDegreeSummary {
    pub divisors: usize,
    pub walls: usize,
    pub failures: Vec<WallDegreeFailure>,
}

impl WallDegreeSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: Self) -> Self {
        self.divisors += other.divisors;
        self.walls += other.walls;
        self.failures.extend(other.failures);
        self
    }
}

/// Checks `D·C = N − 1` on every wall.
pub fn check_wall_degrees(divisor: &ToricDivisor) -> Result<WallDegreeSummary> {
    let mut summary = WallDegreeSummary {
        divisors: 1,
        ..Default::default()
    };
    for wall in divisor.fan().walls()? {
        let degree = divisor.curve_degree(&wall);
        let points = divisor.edge_point_count(&wall)?;
        summary.walls += 1;
        if degree != points - 1 {
            summary.failures.push(WallDegreeFailure {
                fan: divisor.fan().as_ref().clone(),
                alpha: divisor.alpha().to_vec(),
                wall,
                curve_degree: degree,
                edge_points: points,
            });
        }
    }
    Ok(summary)
}

fn collect_wall_degrees(results: Vec<Result<WallDegreeSummary>>) -> Result<WallDegreeSummary> {
    let mut total = WallDegreeSummary::default();
    for r in results {
        total = total.merge(r?);
    }
    total
        .failures
        .sort_by(|a, b| (&a.alpha, &a.wall.facet_rays).cmp(&(&b.alpha, &b.wall.facet_rays)));
    Ok(total)
}

/// `D·C = N − 1` on `trials` random ample divisors of a fixed fan.
pub fn wall_degrees_on_fan(fan: &Arc<Fan>, trials: usize, seed: u64) -> Result<WallDegreeSummary> {
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            check_wall_degrees(&random_ample_divisor(fan, &mut rng)?)
        })
        .collect();
    collect_wall_degrees(results)
}

/// `D·C = N − 1` on random 2D fans (at most 8 rays) and random 3D products.
pub fn wall_degree_fleet(
    trials_2d: usize,
    trials_3d: usize,
    seed: u64,
) -> Result<WallDegreeSummary> {
    let results = (0..trials_2d + trials_3d)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let d = if t < trials_2d {
                random_2d_case(&mut rng, 4)?
            } else {
                random_3d_case(&mut rng)?
            };
            check_wall_degrees(&d)
        })
        .collect();
    collect_wall_degrees(results)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproducer {
    pub trial: u64,
    pub system: SystemFile,
    pub report: SpecialityReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub special: usize,
    /// Special systems with no witness.
    pub missed: Vec<Reproducer>,
    /// Non-special systems with a witness.
    pub spurious: Vec<Reproducer>,
    /// Special systems none of whose two-point restrictions is special.
    pub pair_failures: Vec<Reproducer>,
}

impl FuzzSummary {
    pub fn violations(&self) -> usize {
        self.missed.len() + self.spurious.len()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0 && self.pair_failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub max_mult: i64,
    pub mode: WitnessMode,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            dims: vec![2, 3],
            trials: 500,
            seed: 0,
            max_mult: 6,
            mode: WitnessMode::AllFixedPoints,
        }
    }
}

/// Whether some pair of fixed points already gives a special system.
pub fn has_special_pair(spec: &LinearSystemSpec) -> Result<bool> {
    let marked: Vec<usize> = spec.marked().collect();
    if marked.len() <= 2 {
        return Ok(spec.h1()? > 0);
    }
    for (x, &j) in marked.iter().enumerate() {
        for &k in &marked[x..] {
            if spec.restrict(&[j, k]).h1()? > 0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

enum TrialOutcome {
    Special,
    Plain,
}

struct TrialResult {
    outcome: TrialOutcome,
    missed: Option<Reproducer>,
    spurious: Option<Reproducer>,
    pair_failure: Option<Reproducer>,
}

fn run_trial(config: &FuzzConfig, trial: u64) -> Result<TrialResult> {
    let mut rng = trial_rng(config.seed, trial);
    let dim = *config
        .dims
        .choose(&mut rng)
        .expect("non-empty dimension list");
    let spec = random_system(&mut rng, dim, config.max_mult)?;
    let report = spec.report_unchecked(config.mode)?;
    let witnessed = !report.witnesses.is_empty();
    let repro = || Reproducer {
        trial,
        system: SystemFile::from_spec(&spec),
        report: report.clone(),
    };
    let pair_failure = if report.special && !has_special_pair(&spec)? {
        Some(repro())
    } else {
        None
    };
    Ok(TrialResult {
        outcome: if report.special {
            TrialOutcome::Special
        } else {
            TrialOutcome::Plain
        },
        missed: (report.special && !witnessed).then(repro),
        spurious: (!report.special && witnessed).then(repro),
        pair_failure,
    })
}

/// Compares `h¹ > 0` with the existence of a witness on random systems.
pub fn fuzz_theorem(config: &FuzzConfig) -> Result<FuzzSummary> {
    if config.dims.is_empty() {
        return Err(Error::Input("no dimensions to fuzz".into()));
    }
    let results: Vec<Result<TrialResult>> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    let mut summary = FuzzSummary {
        trials: config.trials,
        ..Default::default()
    };
    for r in results {
        let r = r?;
        if matches!(r.outcome, TrialOutcome::Special) {
            summary.special += 1;
        }
        summary.missed.extend(r.missed);
        summary.spurious.extend(r.spurious);
        summary.pair_failures.extend(r.pair_failure);
    }
    Ok(summary)
}

/// A random surface model: `ℙ²` or `𝔽ₐ` with `a ≤ 8`, blown up at most 12 times.
pub fn random_model(rng: &mut impl Rng) -> Arc<SurfaceModel> {
    let r = rng.gen_range(0..=12);
    if rng.gen_ratio(1, 3) {
        SurfaceModel::p2(r)
    } else {
        SurfaceModel::hirzebruch(rng.gen_range(0..=8), r).expect("a ≥ 0")
    }
}

pub fn random_class(model: &Arc<SurfaceModel>, rng: &mut impl Rng, bound: i64) -> PicardClass {
    let base = (0..model.base_rank())
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    let mults = (0..model.r()).map(|_| rng.gen_range(-2..=bound)).collect();
    PicardClass::new(Arc::clone(model), base, mults).expect("shape matches model")
}

/// A random genus-0 class: a random candidate curve half of the time,
/// otherwise rejection sampling on small coefficients.
pub fn random_rational_class(model: &Arc<SurfaceModel>, rng: &mut impl Rng) -> Result<PicardClass> {
    if rng.gen() {
        let cands = candidate_curves(model, 4)?;
        return Ok(cands
            .choose(rng)
            .expect("exceptional or ruling classes exist")
            .class
            .clone());
    }
    for _ in 0..100_000 {
        let base = (0..model.base_rank())
            .map(|_| rng.gen_range(-3..=5))
            .collect();
        let mults = (0..model.r()).map(|_| rng.gen_range(-1..=2)).collect();
        let c = PicardClass::new(Arc::clone(model), base, mults)?;
        if c.genus()? == 0 {
            return Ok(c);
        }
    }
    let cands = candidate_curves(model, 4)?;
    Ok(cands[0].class.clone())
}

/// A random toric system on the standard `ℙ²` or `𝔽ₐ` fan with `a ≤ 4`.
pub fn random_standard_system(rng: &mut impl Rng, max_mult: i64) -> Result<LinearSystemSpec> {
    let fan = if rng.gen_ratio(1, 5) {
        Fan::projective_space(2)?
    } else {
        Fan::hirzebruch(rng.gen_range(0..=4))
    };
    let fan = Arc::new(fan);
    let divisor = random_ample_divisor(&fan, rng)?;
    let marks = random_marks(&divisor, rng, max_mult);
    LinearSystemSpec::from_dense(divisor, marks)
}

/// Speciality survey over random systems on the standard `ℙ²` and `𝔽ₐ` fans.
pub fn survey_rows(trials: usize, seed: u64, bound: i64) -> Result<Vec<SurveyEntry>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let spec = random_standard_system(&mut trial_rng(seed, t), 4)?;
            survey_system(&spec, bound)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::linsys::point_conditions;

    #[test]
    fn cyclic_order_of_hirzebruch() {
        assert_eq!(cyclic_order(&Fan::hirzebruch(3)).unwrap(), vec![0, 1, 2, 3]);
        let p2 = Fan::projective_space(2).unwrap();
        assert_eq!(cyclic_order(&p2).unwrap().len(), 3);
    }

    #[test]
    fn generated_divisors_are_ample_and_deterministic() {
        for seed in 0..40 {
            let a = random_2d_case(&mut trial_rng(seed, 0), 6).unwrap();
            let b = random_2d_case(&mut trial_rng(seed, 0), 6).unwrap();
            assert_eq!(a, b);
            assert!(a.is_ample().unwrap());
            assert!(a.fan().validate().passed());
        }
        for seed in 0..10 {
            let d = random_3d_case(&mut trial_rng(seed, 1)).unwrap();
            assert_eq!(d.fan().dim(), 3);
            assert!(d.is_ample().unwrap());
            assert!(d.fan().validate().passed());
        }
    }

    #[test]
    fn lift_handles_twelve_blowups() {
        for seed in 0..5 {
            let fan = Arc::new(random_fan_2d(seed, 12).unwrap());
            let d = random_ample_divisor(&fan, &mut trial_rng(seed, 2)).unwrap();
            assert!(d.is_ample().unwrap());
        }
    }

    #[test]
    fn wall_degrees_on_fixed_fans() {
        let f3 = Arc::new(Fan::hirzebruch(3));
        let s = wall_degrees_on_fan(&f3, 50, 1).unwrap();
        assert!(s.passed());
        assert_eq!((s.divisors, s.walls), (50, 200));
        let f0 = Arc::new(Fan::hirzebruch(0));
        assert!(wall_degrees_on_fan(&f0, 50, 2).unwrap().passed());
        let p3 = Arc::new(Fan::projective_space(3).unwrap());
        assert!(wall_degrees_on_fan(&p3, 10, 3).unwrap().passed());
    }

    #[test]
    fn wall_degree_fleet_small() {
        let s = wall_degree_fleet(30, 5, 9).unwrap();
        assert!(s.passed());
        assert_eq!(s.divisors, 35);
    }

    #[test]
    fn fuzz_is_deterministic() {
        let config = FuzzConfig {
            trials: 40,
            seed: 5,
            ..Default::default()
        };
        assert_eq!(
            fuzz_theorem(&config).unwrap(),
            fuzz_theorem(&config).unwrap()
        );
    }

    fn arb_spec(dim: usize) -> impl Strategy<Value = LinearSystemSpec> {
        any::<u64>().prop_map(move |seed| random_system(&mut trial_rng(seed, 0), dim, 6).unwrap())
    }

    fn adjacent_max(spec: &LinearSystemSpec, cone: usize) -> Vec<i64> {
        spec.divisor()
            .fan()
            .walls()
            .unwrap()
            .iter()
            .filter(|w| w.cone_a == cone || w.cone_b == cone)
            .map(|w| spec.divisor().edge_point_count(w).unwrap())
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn witness_implies_special(spec in prop_oneof![arb_spec(2), arb_spec(3)]) {
            let report = spec.report_unchecked(WitnessMode::AllFixedPoints).unwrap();
            if !report.witnesses.is_empty() {
                prop_assert!(report.special);
            }
            prop_assert_eq!(report.h1, report.effective_dim - report.virtual_dim);
        }

        #[test]
        fn special_pair_exists(spec in prop_oneof![arb_spec(2), arb_spec(3)]) {
            if spec.h1().unwrap() > 0 {
                prop_assert!(has_special_pair(&spec).unwrap());
            }
        }

        #[test]
        fn binomial_cut_count(spec in prop_oneof![arb_spec(2), arb_spec(3)], pick in any::<prop::sample::Index>(), m in 1i64..=6) {
            let n = spec.dim();
            let cone = pick.index(spec.divisor().fan().num_cones());
            prop_assume!(adjacent_max(&spec, cone).iter().all(|&len| m <= len));
            let mut mults = vec![0; spec.mults().len()];
            mults[cone] = m;
            let single = spec.with_mults(mults).unwrap();
            prop_assert_eq!(single.cut_by(cone).len() as i64, point_conditions(m, n));
        }

        #[test]
        fn two_point_criterion(spec in arb_spec(2), pick in any::<prop::sample::Index>(), mj in 1i64..=6, mk in 1i64..=6) {
            let walls = spec.divisor().fan().walls().unwrap();
            let wall = &walls[pick.index(walls.len())];
            let (j, k) = (wall.cone_a, wall.cone_b);
            // Each point on its own must fit inside every edge at it.
            prop_assume!(adjacent_max(&spec, j).iter().all(|&len| mj <= len));
            prop_assume!(adjacent_max(&spec, k).iter().all(|&len| mk <= len));
            let mut mults = vec![0; spec.mults().len()];
            mults[j] = mj;
            mults[k] = mk;
            let pair = spec.with_mults(mults).unwrap();
            let n = spec.divisor().edge_point_count(wall).unwrap();
            prop_assert_eq!(pair.h1().unwrap() > 0, mj + mk > n);
        }

        #[test]
        fn h1_is_monotone(spec in prop_oneof![arb_spec(2), arb_spec(3)], pick in any::<prop::sample::Index>()) {
            let cone = pick.index(spec.mults().len());
            let mut mults = spec.mults().to_vec();
            mults[cone] += 1;
            let bigger = spec.with_mults(mults).unwrap();
            prop_assert!(bigger.h1().unwrap() >= spec.h1().unwrap());
        }

        #[test]
        fn effective_dim_is_unimodular_invariant(spec in arb_spec(2), a in -3i64..=3, b in -3i64..=3, swap in any::<bool>()) {
            // [[1, a], [0, 1]] · [[1, 0], [b, 1]], optionally with the axes swapped.
            let mut rows = vec![
                LatticeVector::from([1 + a * b, a]),
                LatticeVector::from([b, 1]),
            ];
            if swap {
                rows.swap(0, 1);
            }
            let fan = Arc::new(spec.divisor().fan().transform(&rows));
            let divisor = ToricDivisor::new(fan, spec.divisor().alpha().to_vec()).unwrap();
            let moved = LinearSystemSpec::from_dense(divisor, spec.mults().to_vec()).unwrap();
            prop_assert_eq!(moved.effective_dim(), spec.effective_dim());
            prop_assert_eq!(moved.virtual_dim(), spec.virtual_dim());
        }

        #[test]
        fn lattice_count_monotone_in_alpha(spec in arb_spec(2), pick in any::<prop::sample::Index>()) {
            let i = pick.index(spec.divisor().alpha().len());
            let mut alpha = spec.divisor().alpha().to_vec();
            alpha[i] += 1;
            let bigger = ToricDivisor::new(spec.divisor().fan().clone(), alpha).unwrap();
            prop_assume!(bigger.is_nef().unwrap());
            prop_assert!(
                bigger.polytope().unwrap().lattice_point_count() >= spec.lattice_points().len()
            );
        }

        #[test]
        fn standard_systems_bridge(seed in any::<u64>()) {
            let spec = random_standard_system(&mut trial_rng(seed, 3), 6).unwrap();
            let class = crate::surface::class_of_system(&spec).unwrap();
            prop_assert_eq!(class.rr_virtual_dim().unwrap(), spec.virtual_dim());
        }

        #[test]
        fn rational_classes_have_genus_zero(seed in any::<u64>()) {
            let mut rng = trial_rng(seed, 4);
            let model = random_model(&mut rng);
            let c = random_rational_class(&model, &mut rng).unwrap();
            prop_assert_eq!(c.genus().unwrap(), 0);
        }
    }
}
