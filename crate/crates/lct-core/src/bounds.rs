//! Sharp colength and multiplicity bounds, with randomized verification.
//!
//! The checks here are conditional: when a weighted pair built from the
//! ideal fails to be log terminal, its colength and Samuel multiplicity
//! are forced above explicit products of the weights. Instances whose
//! pair is log terminal are skipped, never failed. The sampler tunes the
//! weight `mu` to the exact threshold of the pair, so almost every
//! sampled instance sits on the boundary where the bounds are hardest.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cones::cone_bound_report;
use crate::error::{Error, Result};
use crate::ideal::{ExpVec, MonomialIdeal};
use crate::jets::{cone_recursion_check, lct_via_jets};
use crate::newton::NewtonPolyhedron;
use crate::rat::{factorial, rat, rat_powi, rat_to_string, rat_u64, Rat};
use crate::thresholds::{lct, multiplier_ideal, Codim, Pair};

/// Claimed comparison between the two sides of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Gt,
}

/// Exact evaluation of one bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub relation: Relation,
    pub holds: bool,
    pub strictness_expected: bool,
    /// Normal of a facet witnessing that the gating pair is not log
    /// terminal.
    pub witness: Option<Vec<Rat>>,
}

/// A gated check either runs or reports that its hypothesis failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gated {
    Skipped,
    Checked(BoundReport),
}

fn report(lhs: Rat, rhs: Rat, strict: bool, witness: Vec<Rat>) -> BoundReport {
    let relation = if strict { Relation::Gt } else { Relation::Ge };
    let holds = match relation {
        Relation::Ge => lhs >= rhs,
        Relation::Gt => lhs > rhs,
    };
    BoundReport {
        lhs,
        rhs,
        relation,
        holds,
        strictness_expected: strict,
        witness: Some(witness),
    }
}

/// First facet on which the pair `a^mu * H^b`, `H` the last coordinate
/// hyperplane, fails log terminality: `mu * sum(w) + b * w_n <= 1`.
fn divisor_gate(poly: &NewtonPolyhedron, b: &Rat, mu: &Rat) -> Option<Vec<Rat>> {
    let n = poly.n();
    poly.facets()
        .iter()
        .find(|f| mu * f.weight_sum() + b * &f.normal()[n - 1] <= Rat::one())
        .map(|f| f.normal().to_vec())
}

/// First facet on which the discounted pair fails log terminality:
/// `sum((mu - b_i) w_i) <= 1`.
fn shifted_gate(poly: &NewtonPolyhedron, b: &[Rat], mu: &Rat) -> Option<Vec<Rat>> {
    poly.facets()
        .iter()
        .find(|f| {
            let total: Rat = f
                .normal()
                .iter()
                .zip(b)
                .map(|(w, bi)| (mu - bi) * w)
                .sum();
            total <= Rat::one()
        })
        .map(|f| f.normal().to_vec())
}

fn validate_divisor_args(b: &Rat, mu: &Rat) -> Result<()> {
    if b.is_negative() {
        return Err(Error::InvalidParameter(
            "divisor coefficient must be nonnegative".into(),
        ));
    }
    if !mu.is_positive() {
        return Err(Error::InvalidParameter("scale must be positive".into()));
    }
    Ok(())
}

fn uint_rat(x: BigUint) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// `n^n mu^(n-1) (mu + b)` as an exact rational.
fn divisor_rhs_core(n: usize, b: &Rat, mu: &Rat) -> Rat {
    rat_powi(&rat_u64(n as u64), n as u32) * rat_powi(mu, (n - 1) as u32) * (mu + b)
}

/// Colength bound for a zero-dimensional ideal whose pair with `b` copies
/// of the last coordinate hyperplane at scale `mu` is not log terminal:
/// `colength > n^n mu^(n-1) (mu + b) / n!`, non-strict when `n = 1`.
pub fn check_divisor_colength_bound(
    ideal: &MonomialIdeal,
    b: &Rat,
    mu: &Rat,
) -> Result<Gated> {
    validate_divisor_args(b, mu)?;
    let poly = NewtonPolyhedron::of(ideal)?;
    let Some(witness) = divisor_gate(&poly, b, mu) else {
        return Ok(Gated::Skipped);
    };
    let n = ideal.n();
    let lhs = uint_rat(ideal.colength()?);
    let rhs = divisor_rhs_core(n, b, mu) / uint_rat(factorial(n as u64));
    Ok(Gated::Checked(report(lhs, rhs, n >= 2, witness)))
}

/// Multiplicity bound under the same gate as
/// [`check_divisor_colength_bound`]: `e(a) >= n^n mu^(n-1) (mu + b)`.
pub fn check_divisor_multiplicity_bound(
    ideal: &MonomialIdeal,
    b: &Rat,
    mu: &Rat,
) -> Result<Gated> {
    validate_divisor_args(b, mu)?;
    let poly = NewtonPolyhedron::of(ideal)?;
    let Some(witness) = divisor_gate(&poly, b, mu) else {
        return Ok(Gated::Skipped);
    };
    let lhs = uint_rat(poly.samuel_multiplicity()?);
    let rhs = divisor_rhs_core(ideal.n(), b, mu);
    Ok(Gated::Checked(report(lhs, rhs, false, witness)))
}

/// Colength bound for a pair discounted by per-variable weights `b`:
/// if the pair is not log terminal at scale `mu` then
/// `colength > (n^n / n!) prod(mu - b_i)`, non-strict when `n = 1`.
pub fn check_shifted_colength_bound(
    ideal: &MonomialIdeal,
    b: &[Rat],
    mu: &Rat,
) -> Result<Gated> {
    let n = ideal.n();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let pair = Pair::new(b.to_vec(), mu.clone())?;
    let poly = NewtonPolyhedron::of(ideal)?;
    let Some(witness) = shifted_gate(&poly, pair.b(), mu) else {
        return Ok(Gated::Skipped);
    };
    let lhs = uint_rat(ideal.colength()?);
    let mut rhs = rat_powi(&rat_u64(n as u64), n as u32) / uint_rat(factorial(n as u64));
    for bi in b {
        rhs *= mu - bi;
    }
    Ok(Gated::Checked(report(lhs, rhs, n >= 2, witness)))
}

/// One sampled verification task; self-contained, so a failing instance
/// can be replayed in isolation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    ShiftedColength {
        ideal: MonomialIdeal,
        b: Vec<Rat>,
        mu: Rat,
    },
    Divisor {
        ideal: MonomialIdeal,
        b: Rat,
        mu: Rat,
    },
    OracleLct {
        ideal: MonomialIdeal,
    },
    Multiplier {
        ideal: MonomialIdeal,
        cs: Vec<Rat>,
    },
    Cone {
        ideal: MonomialIdeal,
        degree: u64,
    },
}

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Discounted-pair colength bound on threshold-tuned instances.
    ShiftedColength,
    /// Hyperplane-divisor colength and multiplicity bounds.
    DivisorBounds,
    /// Facet-formula threshold against the jet-dimension computation.
    OracleLct,
    /// Multiplier ideal triviality and monotonicity in the exponent.
    Multiplier,
    /// Cone bound, equality audit, and jet recursion on homogeneous
    /// ideals.
    Cone,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::ShiftedColength => "shifted-colength",
            Suite::DivisorBounds => "divisor-bounds",
            Suite::OracleLct => "oracle-lct",
            Suite::Multiplier => "multiplier",
            Suite::Cone => "cone",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "shifted-colength" => Some(Suite::ShiftedColength),
            "divisor-bounds" => Some(Suite::DivisorBounds),
            "oracle-lct" => Some(Suite::OracleLct),
            "multiplier" => Some(Suite::Multiplier),
            "cone" => Some(Suite::Cone),
            _ => None,
        }
    }

    pub const ALL: [Suite; 5] = [
        Suite::ShiftedColength,
        Suite::DivisorBounds,
        Suite::OracleLct,
        Suite::Multiplier,
        Suite::Cone,
    ];
}

/// Deterministic random instance source.
///
/// Every sampled ideal contains a pure power of every variable, so
/// colengths are finite. Per-trial generators are seeded from
/// `(seed, trial)`, which keeps the stream independent of execution
/// order.
#[derive(Debug, Clone)]
pub struct InstanceSampler {
    pub seed: u64,
    pub n_range: (usize, usize),
    pub exponent_range: (u64, u64),
    pub extra_generators_range: (usize, usize),
    pub b_choices: Vec<Rat>,
}

impl InstanceSampler {
    pub fn new(seed: u64) -> Self {
        InstanceSampler {
            seed,
            n_range: (2, 4),
            exponent_range: (1, 6),
            extra_generators_range: (0, 3),
            b_choices: alloc::vec![
                Rat::zero(),
                rat(1, 3),
                rat(1, 2),
                rat(1, 1),
                rat(3, 2)
            ],
        }
    }

    /// Sampler bounded by a largest dimension and exponent.
    pub fn with_limits(seed: u64, n_max: usize, deg_max: u64) -> Self {
        let mut s = InstanceSampler::new(seed);
        s.n_range = (2.min(n_max.max(1)), n_max.max(1));
        s.exponent_range = (1, deg_max.max(1));
        s
    }

    fn validate(&self) -> Result<()> {
        let ok = self.n_range.0 >= 1
            && self.n_range.0 <= self.n_range.1
            && self.exponent_range.0 >= 1
            && self.exponent_range.0 <= self.exponent_range.1
            && self.extra_generators_range.0 <= self.extra_generators_range.1
            && !self.b_choices.is_empty()
            && self.b_choices.iter().all(|b| !b.is_negative());
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter("malformed sampler ranges".into()))
        }
    }

    fn rng_for(&self, trial: u64) -> ChaCha8Rng {
        let mut seed = [0u8; 32];
        seed[..8].copy_from_slice(&self.seed.to_le_bytes());
        seed[8..16].copy_from_slice(&trial.to_le_bytes());
        ChaCha8Rng::from_seed(seed)
    }

    fn sample_ideal(&self, rng: &mut ChaCha8Rng) -> MonomialIdeal {
        let n = rng.gen_range(self.n_range.0 as u64..=self.n_range.1 as u64) as usize;
        let (elo, ehi) = self.exponent_range;
        let mut gens: Vec<ExpVec> = Vec::new();
        for i in 0..n {
            let mut g = alloc::vec![0u64; n];
            g[i] = rng.gen_range(elo..=ehi);
            gens.push(g);
        }
        let extras = rng.gen_range(
            self.extra_generators_range.0 as u64..=self.extra_generators_range.1 as u64,
        );
        for _ in 0..extras {
            let g: ExpVec = (0..n).map(|_| rng.gen_range(0..=ehi)).collect();
            if g.iter().any(|&x| x > 0) {
                gens.push(g);
            }
        }
        MonomialIdeal::new(n, gens).expect("sampled generators are proper")
    }

    fn sample_homogeneous(&self, rng: &mut ChaCha8Rng) -> (MonomialIdeal, u64) {
        let n = rng.gen_range(self.n_range.0 as u64..=self.n_range.1 as u64) as usize;
        let d = rng.gen_range(self.exponent_range.0..=self.exponent_range.1);
        let count = rng.gen_range(1..=(n + self.extra_generators_range.1) as u64);
        let mut gens: Vec<ExpVec> = Vec::new();
        for _ in 0..count {
            let mut g = alloc::vec![0u64; n];
            for _ in 0..d {
                let i = rng.gen_range(0..n as u64) as usize;
                g[i] += 1;
            }
            gens.push(g);
        }
        (
            MonomialIdeal::new(n, gens).expect("degree-d generators are proper"),
            d,
        )
    }

    fn pick_b(&self, rng: &mut ChaCha8Rng) -> Rat {
        self.b_choices[rng.gen_range(0..self.b_choices.len() as u64) as usize].clone()
    }

    /// Normal of the first facet achieving the threshold.
    fn tuning_facet(poly: &NewtonPolyhedron) -> Vec<Rat> {
        let c = lct(poly);
        poly.facets()
            .iter()
            .find(|f| f.weight_sum() == c)
            .expect("some facet achieves the minimum")
            .normal()
            .to_vec()
    }

    pub fn sample_instance(&self, suite: Suite, trial: u64) -> Instance {
        let mut rng = self.rng_for(trial);
        match suite {
            Suite::ShiftedColength => {
                let ideal = self.sample_ideal(&mut rng);
                let poly = NewtonPolyhedron::of(&ideal).expect("sampled ideal is proper");
                let w = Self::tuning_facet(&poly);
                let sum: Rat = w.iter().sum();
                let mut chosen = (alloc::vec![Rat::zero(); ideal.n()], &Rat::one() / &sum);
                for _ in 0..16 {
                    let b: Vec<Rat> = (0..ideal.n()).map(|_| self.pick_b(&mut rng)).collect();
                    let shift: Rat = b.iter().zip(&w).map(|(bi, wi)| bi * wi).sum();
                    let mu = (Rat::one() + shift) / &sum;
                    if b.iter().all(|bi| *bi <= mu) {
                        chosen = (b, mu);
                        break;
                    }
                }
                Instance::ShiftedColength {
                    ideal,
                    b: chosen.0,
                    mu: chosen.1,
                }
            }
            Suite::DivisorBounds => {
                let ideal = self.sample_ideal(&mut rng);
                let poly = NewtonPolyhedron::of(&ideal).expect("sampled ideal is proper");
                let w = Self::tuning_facet(&poly);
                let sum: Rat = w.iter().sum();
                let last = &w[ideal.n() - 1];
                let mut chosen = (Rat::zero(), &Rat::one() / &sum);
                for _ in 0..16 {
                    let b = self.pick_b(&mut rng);
                    let mu = (Rat::one() - &b * last) / &sum;
                    if mu.is_positive() {
                        chosen = (b, mu);
                        break;
                    }
                }
                Instance::Divisor {
                    ideal,
                    b: chosen.0,
                    mu: chosen.1,
                }
            }
            Suite::OracleLct => Instance::OracleLct {
                ideal: self.sample_ideal(&mut rng),
            },
            Suite::Multiplier => {
                let ideal = self.sample_ideal(&mut rng);
                let c = lct(&NewtonPolyhedron::of(&ideal).expect("sampled ideal is proper"));
                let cs = [rat(1, 3), rat(2, 3), rat(1, 1), rat(3, 2), rat(2, 1)]
                    .iter()
                    .map(|f| f * &c)
                    .collect();
                Instance::Multiplier { ideal, cs }
            }
            Suite::Cone => {
                let (ideal, degree) = self.sample_homogeneous(&mut rng);
                Instance::Cone { ideal, degree }
            }
        }
    }
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Skipped,
    Failed(String),
}

fn fail_bound(kind: &str, r: &BoundReport) -> Outcome {
    Outcome::Failed(format!(
        "{kind}: lhs {} vs rhs {}",
        rat_to_string(&r.lhs),
        rat_to_string(&r.rhs)
    ))
}

fn run_instance_inner(instance: &Instance) -> Result<Outcome> {
    Ok(match instance {
        Instance::ShiftedColength { ideal, b, mu } => {
            match check_shifted_colength_bound(ideal, b, mu)? {
                Gated::Skipped => Outcome::Skipped,
                Gated::Checked(r) if r.holds => Outcome::Passed,
                Gated::Checked(r) => fail_bound("shifted colength bound", &r),
            }
        }
        Instance::Divisor { ideal, b, mu } => {
            let length = check_divisor_colength_bound(ideal, b, mu)?;
            let mult = check_divisor_multiplicity_bound(ideal, b, mu)?;
            match (length, mult) {
                (Gated::Skipped, Gated::Skipped) => Outcome::Skipped,
                (Gated::Checked(r), _) if !r.holds => fail_bound("divisor colength bound", &r),
                (_, Gated::Checked(r)) if !r.holds => {
                    fail_bound("divisor multiplicity bound", &r)
                }
                _ => Outcome::Passed,
            }
        }
        Instance::OracleLct { ideal } => {
            let poly = NewtonPolyhedron::of(ideal)?;
            let direct = lct(&poly);
            let via_jets = lct_via_jets(ideal)?;
            if direct == via_jets {
                Outcome::Passed
            } else {
                Outcome::Failed(format!(
                    "threshold mismatch: facets {} vs jets {}",
                    rat_to_string(&direct),
                    rat_to_string(&via_jets)
                ))
            }
        }
        Instance::Multiplier { ideal, cs } => {
            let poly = NewtonPolyhedron::of(ideal)?;
            let threshold = lct(&poly);
            let mut previous: Option<MonomialIdeal> = None;
            let mut failure = None;
            for c in cs {
                let mi = multiplier_ideal(&poly, c)?;
                if mi.trivial != (*c < threshold) {
                    failure = Some(format!(
                        "triviality mismatch at c = {}",
                        rat_to_string(c)
                    ));
                    break;
                }
                if let Some(prev) = &previous {
                    let shrinks = mi
                        .ideal
                        .generators()
                        .iter()
                        .all(|g| prev.contains_monomial(g).unwrap_or(false));
                    if !shrinks {
                        failure = Some(format!(
                            "monotonicity failure at c = {}",
                            rat_to_string(c)
                        ));
                        break;
                    }
                }
                previous = Some(mi.ideal);
            }
            match failure {
                Some(msg) => Outcome::Failed(msg),
                None => Outcome::Passed,
            }
        }
        Instance::Cone { ideal, degree } => {
            let r = cone_bound_report(ideal, *degree)?;
            if r.e == Codim::Infinite {
                Outcome::Skipped
            } else if r.bound_holds != Some(true) {
                Outcome::Failed(format!(
                    "cone bound failed: c = {}, e = {:?}, d = {degree}",
                    rat_to_string(&r.c),
                    r.e
                ))
            } else if r.equality && r.restricted_ok != Some(true) {
                Outcome::Failed("cone equality audit failed".into())
            } else {
                let rec = cone_recursion_check(ideal, 10)?;
                if rec.holds {
                    Outcome::Passed
                } else {
                    Outcome::Failed("jet recursion mismatch".into())
                }
            }
        }
    })
}

/// Evaluates one instance; errors become failures so replay always
/// produces a report.
pub fn run_instance(instance: &Instance) -> Outcome {
    match run_instance_inner(instance) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::Failed(format!("error: {e}")),
    }
}

/// One sampled trial with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    pub instance: Instance,
    pub outcome: Outcome,
}

/// Samples and evaluates a single trial.
pub fn run_trial(sampler: &InstanceSampler, suite: Suite, trial: u64) -> TrialRecord {
    let instance = sampler.sample_instance(suite, trial);
    let outcome = run_instance(&instance);
    TrialRecord {
        trial,
        instance,
        outcome,
    }
}

/// Aggregated result of a suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
    /// At least 30% of the trials must clear their gate; guards against
    /// the sampler drifting into all-skipped streams.
    pub gate_rate_ok: bool,
    pub failures: Vec<TrialRecord>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.gate_rate_ok
    }
}

/// Collects per-trial records into a report.
pub fn summarize(suite: Suite, records: Vec<TrialRecord>) -> SuiteReport {
    let trials = records.len() as u64;
    let mut passed = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    for record in records {
        match &record.outcome {
            Outcome::Passed => passed += 1,
            Outcome::Skipped => skipped += 1,
            Outcome::Failed(_) => failures.push(record),
        }
    }
    let failed = failures.len() as u64;
    SuiteReport {
        suite,
        trials,
        passed,
        skipped,
        failed,
        gate_rate_ok: (trials - skipped) * 10 >= trials * 3,
        failures,
    }
}

/// Runs `trials` independent trials of a suite.
pub fn run_suite(sampler: &InstanceSampler, suite: Suite, trials: u64) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    sampler.validate()?;
    let records = (0..trials)
        .map(|t| run_trial(sampler, suite, t))
        .collect();
    Ok(summarize(suite, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn cusp() -> MonomialIdeal {
        ideal(2, &[&[2, 0], &[0, 3]])
    }

    fn checked(g: Gated) -> BoundReport {
        match g {
            Gated::Checked(r) => r,
            Gated::Skipped => panic!("expected the gate to pass"),
        }
    }

    #[test]
    fn divisor_colength_bound_on_the_cusp() {
        let r = checked(check_divisor_colength_bound(&cusp(), &rat(1, 2), &rat(9, 10)).unwrap());
        assert_eq!(r.lhs, rat_int(6));
        assert_eq!(r.rhs, rat(63, 25));
        assert_eq!(r.relation, Relation::Gt);
        assert!(r.holds && r.strictness_expected);
        assert_eq!(r.witness, Some(vec![rat(1, 2), rat(1, 3)]));
    }

    #[test]
    fn divisor_colength_bound_on_the_maximal_ideal() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let r = checked(check_divisor_colength_bound(&m, &Rat::zero(), &rat(1, 2)).unwrap());
        assert_eq!(r.lhs, rat_int(1));
        assert_eq!(r.rhs, rat(1, 2));
        assert!(r.holds);
    }

    #[test]
    fn divisor_colength_bound_in_one_variable_is_tight() {
        let i = ideal(1, &[&[1]]);
        let r = checked(check_divisor_colength_bound(&i, &Rat::zero(), &rat_int(1)).unwrap());
        assert_eq!(r.lhs, rat_int(1));
        assert_eq!(r.rhs, rat_int(1));
        assert_eq!(r.relation, Relation::Ge);
        assert!(r.holds && !r.strictness_expected);
    }

    #[test]
    fn divisor_multiplicity_bound_on_the_cusp() {
        let r =
            checked(check_divisor_multiplicity_bound(&cusp(), &Rat::zero(), &rat(6, 5)).unwrap());
        assert_eq!(r.lhs, rat_int(6));
        assert_eq!(r.rhs, rat(144, 25));
        assert_eq!(r.relation, Relation::Ge);
        assert!(r.holds);
    }

    #[test]
    fn divisor_multiplicity_bound_is_sharp_on_powers() {
        for t in 1..=6u64 {
            let i = ideal(2, &[&[1, 0], &[0, 1]]).power(t).unwrap();
            let mu = rat(t as i64, 2);
            let r = checked(check_divisor_multiplicity_bound(&i, &Rat::zero(), &mu).unwrap());
            assert_eq!(r.lhs, rat_int((t * t) as i64));
            assert_eq!(r.rhs, r.lhs, "t = {t}");
            assert!(r.holds);
        }
    }

    #[test]
    fn log_terminal_pairs_are_skipped_not_failed() {
        let i = ideal(1, &[&[1]]);
        assert_eq!(
            check_divisor_multiplicity_bound(&i, &rat_int(1), &rat_int(1)).unwrap(),
            Gated::Skipped
        );
        assert_eq!(
            check_divisor_colength_bound(&cusp(), &Rat::zero(), &rat(13, 10)).unwrap(),
            Gated::Skipped
        );
    }

    #[test]
    fn divisor_argument_validation() {
        assert!(check_divisor_colength_bound(&cusp(), &rat(-1, 2), &rat_int(1)).is_err());
        assert!(check_divisor_colength_bound(&cusp(), &Rat::zero(), &Rat::zero()).is_err());
        assert!(check_divisor_multiplicity_bound(&cusp(), &Rat::zero(), &rat(-1, 5)).is_err());
    }

    #[test]
    fn shifted_colength_bound_on_the_cusp() {
        let r = checked(
            check_shifted_colength_bound(&cusp(), &[Rat::zero(), Rat::zero()], &rat(6, 5))
                .unwrap(),
        );
        assert_eq!(r.lhs, rat_int(6));
        assert_eq!(r.rhs, rat(72, 25));
        assert!(r.holds && r.strictness_expected);
    }

    #[test]
    fn shifted_colength_bound_on_maximal_ideals() {
        for n in 2..=4usize {
            let gens: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    let mut g = vec![0u64; n];
                    g[i] = 1;
                    g
                })
                .collect();
            let m = MonomialIdeal::new(n, gens).unwrap();
            let b = vec![Rat::zero(); n];
            let mu = rat(1, n as i64);
            let r = checked(check_shifted_colength_bound(&m, &b, &mu).unwrap());
            assert_eq!(r.lhs, rat_int(1));
            assert_eq!(
                r.rhs,
                Rat::one() / uint_rat(factorial(n as u64)),
                "n = {n}"
            );
            assert!(r.holds);
        }
    }

    #[test]
    fn shifted_colength_bound_at_a_tuned_threshold() {
        let i = cusp();
        let b = [rat(1, 2), rat(1, 3)];
        let poly = NewtonPolyhedron::of(&i).unwrap();
        let mu = crate::thresholds::pair_threshold(&poly, &b).unwrap();
        assert_eq!(mu, rat(49, 30));
        let r = checked(check_shifted_colength_bound(&i, &b, &mu).unwrap());
        assert_eq!(r.rhs, rat(221, 75));
        assert!(r.holds);
    }

    #[test]
    fn shifted_gate_skips_log_terminal_pairs() {
        let r = check_shifted_colength_bound(&cusp(), &[Rat::zero(), Rat::zero()], &rat(5, 4))
            .unwrap();
        assert_eq!(r, Gated::Skipped);
    }

    #[test]
    fn shifted_argument_validation() {
        assert!(check_shifted_colength_bound(&cusp(), &[Rat::zero()], &rat_int(1)).is_err());
        assert!(
            check_shifted_colength_bound(&cusp(), &[rat_int(2), Rat::zero()], &rat_int(1))
                .is_err()
        );
    }

    #[test]
    fn sampler_streams_are_reproducible() {
        let s = InstanceSampler::new(42);
        for suite in Suite::ALL {
            for trial in 0..5 {
                assert_eq!(
                    s.sample_instance(suite, trial),
                    s.sample_instance(suite, trial)
                );
            }
        }
    }

    #[test]
    fn sampled_ideals_are_zero_dimensional() {
        let s = InstanceSampler::new(7);
        for trial in 0..50 {
            let Instance::OracleLct { ideal } = s.sample_instance(Suite::OracleLct, trial)
            else {
                panic!("wrong instance kind");
            };
            assert!(ideal.is_zero_dimensional());
            assert!(ideal.n() >= 2 && ideal.n() <= 4);
        }
    }

    #[test]
    fn tuned_instances_sit_on_the_gate_boundary() {
        let s = InstanceSampler::new(11);
        for trial in 0..25 {
            match s.sample_instance(Suite::ShiftedColength, trial) {
                Instance::ShiftedColength { ideal, b, mu } => {
                    let poly = NewtonPolyhedron::of(&ideal).unwrap();
                    assert!(shifted_gate(&poly, &b, &mu).is_some(), "trial {trial}");
                }
                _ => panic!("wrong instance kind"),
            }
            match s.sample_instance(Suite::DivisorBounds, trial) {
                Instance::Divisor { ideal, b, mu } => {
                    let poly = NewtonPolyhedron::of(&ideal).unwrap();
                    assert!(divisor_gate(&poly, &b, &mu).is_some(), "trial {trial}");
                }
                _ => panic!("wrong instance kind"),
            }
        }
    }

    #[test]
    fn small_suite_runs_pass() {
        let s = InstanceSampler::new(42);
        for suite in Suite::ALL {
            let report = run_suite(&s, suite, 20).unwrap();
            assert!(report.ok(), "suite {}: {:?}", suite.name(), report.failures);
            assert_eq!(report.trials, 20);
            assert_eq!(report.failed, 0);
        }
    }

    #[test]
    fn replay_reproduces_the_outcome() {
        let s = InstanceSampler::new(3);
        for suite in Suite::ALL {
            let record = run_trial(&s, suite, 9);
            assert_eq!(run_instance(&record.instance), record.outcome);
        }
    }

    #[test]
    fn zero_trials_are_rejected() {
        let s = InstanceSampler::new(1);
        assert!(matches!(
            run_suite(&s, Suite::OracleLct, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::parse(suite.name()), Some(suite));
        }
        assert_eq!(Suite::parse("unknown"), None);
    }
}
