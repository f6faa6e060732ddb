//! JSON schemas: ideals and pairs on the way in, reports on the way out.
//!
//! Rationals travel as `"p/q"` strings and big integers as decimal
//! strings, so nothing is ever rounded. Serialization uses fixed struct
//! field order, which keeps output byte-stable for fixed input.

use lct_core::bounds::{Instance, Outcome, SuiteReport};
use lct_core::cones::{ConeReport, ProjectionExampleRow};
use lct_core::ideal::MonomialIdeal;
use lct_core::jets::ContactProfile;
use lct_core::newton::NewtonPolyhedron;
use lct_core::rat::{parse_rat, rat_to_string, Rat};
use lct_core::rigidity::{RigidityCase, RigidityCertificate};
use lct_core::thresholds::Codim;
use serde::{Deserialize, Serialize};

pub const IDEAL_FORMAT: &str = "lct-kit/1";

fn default_format() -> String {
    IDEAL_FORMAT.to_string()
}

/// A monomial ideal on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(default = "default_format")]
    pub format: String,
    pub n: usize,
    pub generators: Vec<Vec<u64>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            format: IDEAL_FORMAT.to_string(),
            n: ideal.n(),
            generators: ideal.generators().to_vec(),
        }
    }

    fn check_format(&self) -> Result<(), String> {
        if self.format == IDEAL_FORMAT {
            Ok(())
        } else {
            Err(format!(
                "unsupported format {:?}, expected {IDEAL_FORMAT:?}",
                self.format
            ))
        }
    }

    /// Builds the ideal, minimalizing silently.
    pub fn to_ideal(&self) -> Result<MonomialIdeal, String> {
        self.check_format()?;
        MonomialIdeal::new(self.n, self.generators.clone()).map_err(|e| e.to_string())
    }

    /// Builds the ideal; the flag reports whether the input already was a
    /// minimal antichain.
    pub fn to_ideal_checked(&self) -> Result<(MonomialIdeal, bool), String> {
        let ideal = self.to_ideal()?;
        let minimal = ideal.generators().len() == self.generators.len();
        Ok((ideal, minimal))
    }

    /// Builds the ideal, rejecting non-minimal generator sets.
    pub fn to_ideal_strict(&self) -> Result<MonomialIdeal, String> {
        self.check_format()?;
        MonomialIdeal::new_strict(self.n, self.generators.clone()).map_err(|e| e.to_string())
    }
}

/// An ideal together with pair weights; `b` entries may be negative,
/// which adds coordinate hyperplanes instead of discounting them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(default = "default_format")]
    pub format: String,
    pub n: usize,
    pub generators: Vec<Vec<u64>>,
    pub b: Vec<String>,
    pub mu: String,
}

impl PairJson {
    pub fn ideal_part(&self) -> IdealJson {
        IdealJson {
            format: self.format.clone(),
            n: self.n,
            generators: self.generators.clone(),
        }
    }

    pub fn weights(&self) -> Result<(Vec<Rat>, Rat), String> {
        let b = parse_rats(&self.b)?;
        let mu = parse_rat(&self.mu).map_err(|e| e.to_string())?;
        Ok((b, mu))
    }
}

fn parse_rats(strings: &[String]) -> Result<Vec<Rat>, String> {
    strings
        .iter()
        .map(|s| parse_rat(s).map_err(|e| e.to_string()))
        .collect()
}

fn rats_to_strings(rats: &[Rat]) -> Vec<String> {
    rats.iter().map(rat_to_string).collect()
}

/// One verification instance, tagged by suite kind; replayable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceJson {
    ShiftedColength {
        ideal: IdealJson,
        b: Vec<String>,
        mu: String,
    },
    Divisor {
        ideal: IdealJson,
        b: String,
        mu: String,
    },
    OracleLct {
        ideal: IdealJson,
    },
    Multiplier {
        ideal: IdealJson,
        cs: Vec<String>,
    },
    Cone {
        ideal: IdealJson,
        degree: u64,
    },
}

impl InstanceJson {
    pub fn from_instance(instance: &Instance) -> Self {
        match instance {
            Instance::ShiftedColength { ideal, b, mu } => InstanceJson::ShiftedColength {
                ideal: IdealJson::from_ideal(ideal),
                b: rats_to_strings(b),
                mu: rat_to_string(mu),
            },
            Instance::Divisor { ideal, b, mu } => InstanceJson::Divisor {
                ideal: IdealJson::from_ideal(ideal),
                b: rat_to_string(b),
                mu: rat_to_string(mu),
            },
            Instance::OracleLct { ideal } => InstanceJson::OracleLct {
                ideal: IdealJson::from_ideal(ideal),
            },
            Instance::Multiplier { ideal, cs } => InstanceJson::Multiplier {
                ideal: IdealJson::from_ideal(ideal),
                cs: rats_to_strings(cs),
            },
            Instance::Cone { ideal, degree } => InstanceJson::Cone {
                ideal: IdealJson::from_ideal(ideal),
                degree: *degree,
            },
        }
    }

    pub fn to_instance(&self) -> Result<Instance, String> {
        Ok(match self {
            InstanceJson::ShiftedColength { ideal, b, mu } => Instance::ShiftedColength {
                ideal: ideal.to_ideal()?,
                b: parse_rats(b)?,
                mu: parse_rat(mu).map_err(|e| e.to_string())?,
            },
            InstanceJson::Divisor { ideal, b, mu } => Instance::Divisor {
                ideal: ideal.to_ideal()?,
                b: parse_rat(b).map_err(|e| e.to_string())?,
                mu: parse_rat(mu).map_err(|e| e.to_string())?,
            },
            InstanceJson::OracleLct { ideal } => Instance::OracleLct {
                ideal: ideal.to_ideal()?,
            },
            InstanceJson::Multiplier { ideal, cs } => Instance::Multiplier {
                ideal: ideal.to_ideal()?,
                cs: parse_rats(cs)?,
            },
            InstanceJson::Cone { ideal, degree } => Instance::Cone {
                ideal: ideal.to_ideal()?,
                degree: *degree,
            },
        })
    }
}

#[derive(Debug, Serialize)]
pub struct LctJson {
    pub lct: String,
}

#[derive(Debug, Serialize)]
pub struct CountJson {
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct FacetJson {
    pub normal: Vec<String>,
    pub weight_sum: String,
}

#[derive(Debug, Serialize)]
pub struct NewtonJson {
    pub lct: String,
    pub zero_dimensional: bool,
    pub facets: Vec<FacetJson>,
    pub vertices: Vec<Vec<u64>>,
    pub covolume: Option<String>,
    pub samuel_multiplicity: Option<String>,
}

impl NewtonJson {
    pub fn build(poly: &NewtonPolyhedron) -> Self {
        let facets = poly
            .facets()
            .iter()
            .map(|f| FacetJson {
                normal: rats_to_strings(f.normal()),
                weight_sum: rat_to_string(&f.weight_sum()),
            })
            .collect();
        let (covolume, samuel) = if poly.is_zero_dimensional() {
            (
                Some(rat_to_string(
                    &poly.covolume().expect("zero-dimensional"),
                )),
                Some(
                    poly.samuel_multiplicity()
                        .expect("zero-dimensional")
                        .to_string(),
                ),
            )
        } else {
            (None, None)
        };
        NewtonJson {
            lct: rat_to_string(&lct_core::thresholds::lct(poly)),
            zero_dimensional: poly.is_zero_dimensional(),
            facets,
            vertices: poly.vertices().to_vec(),
            covolume,
            samuel_multiplicity: samuel,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairLtJson {
    pub log_terminal: bool,
}

#[derive(Debug, Serialize)]
pub struct MultiplierJson {
    pub c: String,
    pub trivial: bool,
    pub ideal: IdealJson,
}

#[derive(Debug, Serialize)]
pub struct JetEntryJson {
    pub m: u64,
    pub weight: u64,
    pub witness: Vec<u64>,
    pub ratio: String,
}

#[derive(Debug, Serialize)]
pub struct JetsJson {
    pub m_max: u64,
    pub entries: Vec<JetEntryJson>,
    pub min_ratio: String,
    pub argmin: u64,
    pub lct: String,
}

impl JetsJson {
    pub fn build(profile: &ContactProfile, threshold: &Rat) -> Self {
        JetsJson {
            m_max: profile.m_max,
            entries: profile
                .entries
                .iter()
                .map(|e| JetEntryJson {
                    m: e.m,
                    weight: e.weight,
                    witness: e.witness.clone(),
                    ratio: rat_to_string(&Rat::new(e.weight.into(), e.m.into())),
                })
                .collect(),
            min_ratio: rat_to_string(&profile.min_ratio),
            argmin: profile.argmin,
            lct: rat_to_string(threshold),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConeJson {
    pub degree: u64,
    pub c: String,
    /// Codimension of the non-log-terminal locus; absent when that locus
    /// is empty.
    pub e: Option<u64>,
    pub bound_holds: Option<bool>,
    pub equality: bool,
    pub cone_variables: Option<Vec<usize>>,
    pub restricted_ok: Option<bool>,
}

impl ConeJson {
    pub fn build(report: &ConeReport) -> Self {
        ConeJson {
            degree: report.degree,
            c: rat_to_string(&report.c),
            e: match report.e {
                Codim::Finite(v) => Some(v),
                Codim::Infinite => None,
            },
            bound_holds: report.bound_holds,
            equality: report.equality,
            cone_variables: report.cone_variables.clone(),
            restricted_ok: report.restricted_ok,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExampleRowJson {
    pub k: u64,
    pub t: u64,
    pub c: String,
    pub length: String,
    pub projection_bound: String,
    pub pushforward_lct: String,
    pub ratio: String,
}

impl ExampleRowJson {
    pub fn build(row: &ProjectionExampleRow) -> Self {
        ExampleRowJson {
            k: row.k,
            t: row.t,
            c: rat_to_string(&row.c),
            length: row.length.to_string(),
            projection_bound: rat_to_string(&row.projection_bound),
            pushforward_lct: rat_to_string(&row.pushforward_lct),
            ratio: rat_to_string(&row.ratio),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RigidityRowJson {
    pub n: u64,
    pub case: String,
    pub pushforward_degree_coeff: u64,
    pub lct_lower_bound_coeff: String,
    pub margin: String,
    pub contradiction: bool,
}

impl RigidityRowJson {
    pub fn build(cert: &RigidityCertificate) -> Self {
        RigidityRowJson {
            n: cert.n,
            case: match cert.case {
                RigidityCase::Low => "low".to_string(),
                RigidityCase::High => "high".to_string(),
            },
            pushforward_degree_coeff: cert.pushforward_degree_coeff,
            lct_lower_bound_coeff: rat_to_string(&cert.lct_lower_bound_coeff),
            margin: rat_to_string(&cert.margin),
            contradiction: cert.contradiction,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FailureJson {
    pub trial: u64,
    pub detail: String,
    pub instance: InstanceJson,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
    pub gate_rate_ok: bool,
    pub ok: bool,
    pub failures: Vec<FailureJson>,
}

impl VerifyJson {
    pub fn build(report: &SuiteReport, seed: u64) -> Self {
        VerifyJson {
            suite: report.suite.name().to_string(),
            seed,
            trials: report.trials,
            passed: report.passed,
            skipped: report.skipped,
            failed: report.failed,
            gate_rate_ok: report.gate_rate_ok,
            ok: report.ok(),
            failures: report
                .failures
                .iter()
                .map(|record| FailureJson {
                    trial: record.trial,
                    detail: match &record.outcome {
                        Outcome::Failed(msg) => msg.clone(),
                        _ => String::new(),
                    },
                    instance: InstanceJson::from_instance(&record.instance),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReplayJson {
    pub outcome: String,
    pub detail: Option<String>,
}

impl ReplayJson {
    pub fn build(outcome: &Outcome) -> Self {
        match outcome {
            Outcome::Passed => ReplayJson {
                outcome: "passed".to_string(),
                detail: None,
            },
            Outcome::Skipped => ReplayJson {
                outcome: "skipped".to_string(),
                detail: None,
            },
            Outcome::Failed(msg) => ReplayJson {
                outcome: "failed".to_string(),
                detail: Some(msg.clone()),
            },
        }
    }
}
