//! Exact threshold computations on monomial ideals from the command line.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use lct_core::bounds::{run_instance, InstanceSampler, Outcome, Suite};
use lct_core::cones::{cone_bound_report, projection_example, Family};
use lct_core::ideal::MonomialIdeal;
use lct_core::jets::contact_profile;
use lct_core::newton::NewtonPolyhedron;
use lct_core::rat::{parse_rat, rat_to_string};
use lct_core::rigidity::rigidity_range;
use lct_core::thresholds::{lct, multiplier_ideal, weighted_pair_is_log_terminal};
use lct_kit::formats::{
    ConeJson, CountJson, ExampleRowJson, IdealJson, InstanceJson, JetsJson, LctJson,
    MultiplierJson, NewtonJson, PairJson, PairLtJson, ReplayJson, RigidityRowJson, VerifyJson,
};
use lct_kit::runner::{run_suite_parallel, thread_cap};

#[derive(Parser)]
#[command(
    name = "lct-kit",
    version,
    about = "Exact log canonical thresholds, multiplier ideals, and bound checks for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Reject generator sets that are not minimal antichains.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Log canonical threshold of an ideal.
    Lct { ideal: PathBuf },
    /// Newton polyhedron facets, vertices, covolume, and multiplicity.
    Newton { ideal: PathBuf },
    /// Number of standard monomials of a zero-dimensional ideal.
    Colength { ideal: PathBuf },
    /// Samuel multiplicity of a zero-dimensional ideal.
    Samuel { ideal: PathBuf },
    /// Log terminality of the weighted pair in a pair file.
    PairLt { pair: PathBuf },
    /// Multiplier ideal at exponent c.
    MultIdeal {
        ideal: PathBuf,
        /// Exponent, an exact rational such as 5/6.
        #[arg(long)]
        c: String,
    },
    /// Contact-order profile and the threshold inferred from it.
    Jets {
        ideal: PathBuf,
        /// Largest jet order to profile; defaults to the facet
        /// denominator heuristic.
        #[arg(long)]
        m_max: Option<u64>,
    },
    /// Cone bound report for an ideal generated in a single degree.
    ConeBound {
        ideal: PathBuf,
        /// Common degree of the generators; inferred when omitted.
        #[arg(long)]
        degree: Option<u64>,
    },
    /// Closed-form example family tables.
    Example {
        /// Family name: power or ci.
        #[arg(long)]
        family: String,
        /// Number of variables.
        #[arg(long)]
        k: u64,
        /// Largest exponent parameter t.
        #[arg(long)]
        t_max: u64,
    },
    /// Randomized verification suites.
    Verify {
        /// One of shifted-colength, divisor-bounds, oracle-lct,
        /// multiplier, cone.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest number of variables to sample.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Largest exponent (or generator degree) to sample.
        #[arg(long, default_value_t = 6)]
        deg_max: u64,
        /// Re-run one emitted instance JSON instead of sampling.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Superrigidity margin certificates.
    Rigidity {
        #[arg(long, default_value_t = 4)]
        n_min: u64,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
    },
}

fn die(msg: impl Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn read_file(path: &Path) -> String {
    fs::read_to_string(path).unwrap_or_else(|e| die(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| die(format!("malformed JSON: {e}")))
}

fn build_ideal(json: &IdealJson, strict: bool) -> MonomialIdeal {
    if strict {
        json.to_ideal_strict().unwrap_or_else(|e| die(e))
    } else {
        let (ideal, minimal) = json.to_ideal_checked().unwrap_or_else(|e| die(e));
        if !minimal {
            eprintln!(
                "warning: generators are not a minimal antichain; using the minimalization"
            );
        }
        ideal
    }
}

fn load_ideal(path: &Path, strict: bool) -> MonomialIdeal {
    build_ideal(&parse_json(&read_file(path)), strict)
}

fn polyhedron(ideal: &MonomialIdeal) -> NewtonPolyhedron {
    NewtonPolyhedron::of(ideal).unwrap_or_else(|e| die(e))
}

fn emit<T: Serialize>(json: bool, value: &T, table: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report serializes")
        );
    } else {
        println!("{}", table());
    }
}

fn newton_table(r: &NewtonJson) -> String {
    let mut lines = vec![
        format!("lct: {}", r.lct),
        format!("zero dimensional: {}", r.zero_dimensional),
    ];
    for f in &r.facets {
        lines.push(format!(
            "facet: {} (sum {})",
            f.normal.join(" "),
            f.weight_sum
        ));
    }
    for v in &r.vertices {
        let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        lines.push(format!("vertex: {}", coords.join(" ")));
    }
    if let Some(c) = &r.covolume {
        lines.push(format!("covolume: {c}"));
    }
    if let Some(s) = &r.samuel_multiplicity {
        lines.push(format!("samuel multiplicity: {s}"));
    }
    lines.join("\n")
}

fn jets_table(r: &JetsJson) -> String {
    let mut lines = Vec::with_capacity(r.entries.len() + 1);
    for e in &r.entries {
        let witness: Vec<String> = e.witness.iter().map(|x| x.to_string()).collect();
        lines.push(format!(
            "m {:>3}  weight {:>5}  ratio {:>8}  witness {}",
            e.m,
            e.weight,
            e.ratio,
            witness.join(" ")
        ));
    }
    lines.push(format!("lct: {}", r.lct));
    lines.join("\n")
}

fn cone_table(r: &ConeJson) -> String {
    let mut lines = vec![
        format!("degree: {}", r.degree),
        format!("c: {}", r.c),
        match r.e {
            Some(e) => format!("e: {e}"),
            None => "e: none".to_string(),
        },
        match r.bound_holds {
            Some(b) => format!("bound holds: {b}"),
            None => "bound holds: skipped".to_string(),
        },
        format!("equality: {}", r.equality),
    ];
    if let Some(vars) = &r.cone_variables {
        let names: Vec<String> = vars.iter().map(|v| format!("x{}", v + 1)).collect();
        lines.push(format!("cone variables: {}", names.join(" ")));
    }
    if let Some(ok) = r.restricted_ok {
        lines.push(format!("restricted ok: {ok}"));
    }
    lines.join("\n")
}

fn example_table(rows: &[ExampleRowJson]) -> String {
    let mut lines = vec!["k t c length bound pushforward ratio".to_string()];
    for r in rows {
        lines.push(format!(
            "{} {} {} {} {} {} {}",
            r.k, r.t, r.c, r.length, r.projection_bound, r.pushforward_lct, r.ratio
        ));
    }
    lines.join("\n")
}

fn rigidity_table(rows: &[RigidityRowJson]) -> String {
    let mut lines = vec!["N case degree-coeff bound-coeff margin contradiction".to_string()];
    for r in rows {
        lines.push(format!(
            "{} {} {} {} {} {}",
            r.n,
            r.case,
            r.pushforward_degree_coeff,
            r.lct_lower_bound_coeff,
            r.margin,
            r.contradiction
        ));
    }
    lines.join("\n")
}

fn verify_table(r: &VerifyJson) -> String {
    [
        format!("suite: {}", r.suite),
        format!("seed: {}", r.seed),
        format!("trials: {}", r.trials),
        format!("passed: {}", r.passed),
        format!("skipped: {}", r.skipped),
        format!("failed: {}", r.failed),
        format!("gate rate ok: {}", r.gate_rate_ok),
    ]
    .join("\n")
}

fn run_verify(
    json: bool,
    suite: Option<String>,
    trials: u64,
    seed: u64,
    n_max: usize,
    deg_max: u64,
    replay: Option<PathBuf>,
) {
    if let Some(path) = replay {
        let instance_json: InstanceJson = parse_json(&read_file(&path));
        let instance = instance_json.to_instance().unwrap_or_else(|e| die(e));
        let outcome = run_instance(&instance);
        emit(json, &ReplayJson::build(&outcome), || match &outcome {
            Outcome::Passed => "passed".to_string(),
            Outcome::Skipped => "skipped".to_string(),
            Outcome::Failed(msg) => format!("failed: {msg}"),
        });
        if matches!(outcome, Outcome::Failed(_)) {
            std::process::exit(1);
        }
        return;
    }
    let Some(name) = suite else {
        die("pass --suite or --replay");
    };
    let Some(suite) = Suite::parse(&name) else {
        die(format!(
            "unknown suite {name:?}; expected one of shifted-colength, divisor-bounds, \
             oracle-lct, multiplier, cone"
        ));
    };
    if trials == 0 {
        die("need at least one trial");
    }
    if n_max == 0 || deg_max == 0 {
        die("n-max and deg-max must be positive");
    }
    let sampler = InstanceSampler::with_limits(seed, n_max, deg_max);
    let report = run_suite_parallel(&sampler, suite, trials, thread_cap());
    emit(json, &VerifyJson::build(&report, seed), || {
        verify_table(&VerifyJson::build(&report, seed))
    });
    for failure in &report.failures {
        eprintln!(
            "{}",
            serde_json::to_string(&InstanceJson::from_instance(&failure.instance))
                .expect("instance serializes")
        );
    }
    if !report.ok() {
        std::process::exit(1);
    }
}

fn main() {
    let cli = Cli::parse();
    let json = cli.json;
    let strict = cli.strict;
    match cli.command {
        Command::Lct { ideal } => {
            let i = load_ideal(&ideal, strict);
            let c = rat_to_string(&lct(&polyhedron(&i)));
            emit(json, &LctJson { lct: c.clone() }, || c.clone());
        }
        Command::Newton { ideal } => {
            let i = load_ideal(&ideal, strict);
            let report = NewtonJson::build(&polyhedron(&i));
            emit(json, &report, || newton_table(&report));
        }
        Command::Colength { ideal } => {
            let i = load_ideal(&ideal, strict);
            let value = i.colength().unwrap_or_else(|e| die(e)).to_string();
            emit(json, &CountJson { value: value.clone() }, || value.clone());
        }
        Command::Samuel { ideal } => {
            let i = load_ideal(&ideal, strict);
            let value = polyhedron(&i)
                .samuel_multiplicity()
                .unwrap_or_else(|e| die(e))
                .to_string();
            emit(json, &CountJson { value: value.clone() }, || value.clone());
        }
        Command::PairLt { pair } => {
            let pj: PairJson = parse_json(&read_file(&pair));
            let i = build_ideal(&pj.ideal_part(), strict);
            let (b, mu) = pj.weights().unwrap_or_else(|e| die(e));
            let lt = weighted_pair_is_log_terminal(&polyhedron(&i), &b, &mu)
                .unwrap_or_else(|e| die(e));
            emit(json, &PairLtJson { log_terminal: lt }, || {
                if lt {
                    "log terminal".to_string()
                } else {
                    "not log terminal".to_string()
                }
            });
        }
        Command::MultIdeal { ideal, c } => {
            let i = load_ideal(&ideal, strict);
            let c = parse_rat(&c).unwrap_or_else(|e| die(e));
            let mi = multiplier_ideal(&polyhedron(&i), &c).unwrap_or_else(|e| die(e));
            let ideal_json = IdealJson::from_ideal(&mi.ideal);
            if json {
                let report = MultiplierJson {
                    c: rat_to_string(&mi.c),
                    trivial: mi.trivial,
                    ideal: ideal_json,
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                println!(
                    "{}",
                    serde_json::to_string(&ideal_json).expect("ideal serializes")
                );
            }
        }
        Command::Jets { ideal, m_max } => {
            let i = load_ideal(&ideal, strict);
            let profile = contact_profile(&i, m_max).unwrap_or_else(|e| die(e));
            let report = JetsJson::build(&profile, &profile.min_ratio);
            emit(json, &report, || jets_table(&report));
        }
        Command::ConeBound { ideal, degree } => {
            let i = load_ideal(&ideal, strict);
            let d = degree.or_else(|| i.homogeneous_degree()).unwrap_or_else(|| {
                die("generators are not all of one degree; pass --degree")
            });
            let report = cone_bound_report(&i, d).unwrap_or_else(|e| die(e));
            let cone_json = ConeJson::build(&report);
            emit(json, &cone_json, || cone_table(&cone_json));
        }
        Command::Example { family, k, t_max } => {
            let fam = match family.as_str() {
                "power" => Family::Power,
                "ci" => Family::Ci,
                other => die(format!("unknown family {other:?}; expected power or ci")),
            };
            let rows = projection_example(k, t_max, fam).unwrap_or_else(|e| die(e));
            let json_rows: Vec<ExampleRowJson> = rows.iter().map(ExampleRowJson::build).collect();
            emit(json, &json_rows, || example_table(&json_rows));
        }
        Command::Verify {
            suite,
            trials,
            seed,
            n_max,
            deg_max,
            replay,
        } => run_verify(json, suite, trials, seed, n_max, deg_max, replay),
        Command::Rigidity { n_min, n_max } => {
            let rows = rigidity_range(n_min, n_max).unwrap_or_else(|e| die(e));
            let json_rows: Vec<RigidityRowJson> =
                rows.iter().map(RigidityRowJson::build).collect();
            emit(json, &json_rows, || rigidity_table(&json_rows));
        }
    }
}
