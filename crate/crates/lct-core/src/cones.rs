//! Homogeneous-ideal cone analysis.
//!
//! For an ideal generated in a single degree `d`, the threshold obeys
//! `c >= e / d` where `e` is the codimension of the locus on which the
//! pair `(X, a^c)` fails to be log terminal. Equality forces cone
//! structure: the generators live in `e` of the variables, and the
//! restriction to those variables has the same threshold with the failure
//! locus shrunk to the origin. This module also reproduces the projection
//! example families on which the pushforward bound is sharp.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::newton::NewtonPolyhedron;
use crate::rat::{binomial, factorial, rat_powi, Rat};
use crate::thresholds::{lct, non_lt_locus_codim, Codim};

/// Outcome of the cone bound check on a homogeneous ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub degree: u64,
    pub c: Rat,
    pub e: Codim,
    /// `None` when the failure locus is empty and there is nothing to bound.
    pub bound_holds: Option<bool>,
    pub equality: bool,
    /// The smallest variable set carrying every generator; present on
    /// equality.
    pub cone_variables: Option<Vec<usize>>,
    /// Whether the restriction to `cone_variables` passes the audit:
    /// `|S| = e`, restricted threshold `e / d`, and restricted failure
    /// locus exactly the origin.
    pub restricted_ok: Option<bool>,
}

/// Checks `lct >= e / degree` and audits the equality case.
pub fn cone_bound_report(ideal: &MonomialIdeal, degree: u64) -> Result<ConeReport> {
    if degree == 0 {
        return Err(Error::InvalidParameter(
            "generator degree must be positive".into(),
        ));
    }
    for g in ideal.generators() {
        let s: u64 = g.iter().sum();
        if s != degree {
            return Err(Error::NotHomogeneous {
                expected: degree,
                got: s,
            });
        }
    }
    let poly = NewtonPolyhedron::of(ideal)?;
    let c = lct(&poly);
    let e = non_lt_locus_codim(&poly, &c)?;
    let Codim::Finite(e_val) = e else {
        return Ok(ConeReport {
            degree,
            c,
            e,
            bound_holds: None,
            equality: false,
            cone_variables: None,
            restricted_ok: None,
        });
    };
    let ratio = Rat::new(BigInt::from(e_val), BigInt::from(degree));
    let bound_holds = c >= ratio;
    let equality = c == ratio;
    let (cone_variables, restricted_ok) = if equality {
        let support = ideal.support_union();
        let size_ok = support.len() as u64 == e_val;
        let restricted = ideal.restrict(&support)?;
        let rpoly = NewtonPolyhedron::of(&restricted)?;
        let lct_ok = lct(&rpoly) == ratio;
        let codim_ok = non_lt_locus_codim(&rpoly, &ratio)?
            == Codim::Finite(support.len() as u64);
        (Some(support), Some(size_ok && lct_ok && codim_ok))
    } else {
        (None, None)
    };
    Ok(ConeReport {
        degree,
        c,
        e,
        bound_holds: Some(bound_holds),
        equality,
        cone_variables,
        restricted_ok,
    })
}

/// Which of the two example families a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Powers of the maximal ideal in `k` variables.
    Power,
    /// Complete intersections of `k` pure `t`-th powers.
    Ci,
}

/// One row of the projection example table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionExampleRow {
    pub k: u64,
    pub t: u64,
    pub c: Rat,
    pub length: BigUint,
    pub projection_bound: Rat,
    pub pushforward_lct: Rat,
    pub ratio: Rat,
}

fn rat_from_uint(x: BigUint) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// Exact rows of the projection example for `t = 1, ..., t_max`.
///
/// In both families the ambient threshold is `k / t`. The pushforward of
/// the cycle has threshold `1 / length`, which the projection bound
/// (`k! c^k / k^k` for the power family, `c^k / k^k` for the complete
/// intersection family) must dominate; the latter family attains equality
/// for every `t`. Rows with `t <= 6` are cross-checked against ideals
/// built and measured explicitly.
pub fn projection_example(k: u64, t_max: u64, family: Family) -> Result<Vec<ProjectionExampleRow>> {
    if k == 0 || t_max == 0 {
        return Err(Error::InvalidParameter(
            "family parameters must be positive".into(),
        ));
    }
    let k_to_k = rat_from_uint(BigUint::from(k).pow(k as u32));
    let mut rows = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        let c = Rat::new(BigInt::from(k), BigInt::from(t));
        let c_to_k = rat_powi(&c, k as u32);
        let (length, projection_bound) = match family {
            Family::Power => (
                binomial(k + t - 1, k),
                rat_from_uint(factorial(k)) * &c_to_k / &k_to_k,
            ),
            Family::Ci => (BigUint::from(t).pow(k as u32), &c_to_k / &k_to_k),
        };
        let pushforward_lct = Rat::new(BigInt::one(), BigInt::from(length.clone()));
        let ratio = &projection_bound / &pushforward_lct;
        assert!(projection_bound >= pushforward_lct);
        if matches!(family, Family::Power) && k >= 2 {
            assert!(projection_bound > pushforward_lct);
        }
        if t <= 6 {
            let ideal = match family {
                Family::Power => {
                    let mut gens = Vec::new();
                    for i in 0..k as usize {
                        let mut g = alloc::vec![0u64; k as usize];
                        g[i] = 1;
                        gens.push(g);
                    }
                    MonomialIdeal::new(k as usize, gens)?.power(t)?
                }
                Family::Ci => {
                    let mut gens = Vec::new();
                    for i in 0..k as usize {
                        let mut g = alloc::vec![0u64; k as usize];
                        g[i] = t;
                        gens.push(g);
                    }
                    MonomialIdeal::new(k as usize, gens)?
                }
            };
            let poly = NewtonPolyhedron::of(&ideal)?;
            assert_eq!(lct(&poly), c);
            assert_eq!(ideal.colength()?, length);
        }
        rows.push(ProjectionExampleRow {
            k,
            t,
            c,
            length,
            projection_bound,
            pushforward_lct,
            ratio,
        });
    }
    Ok(rows)
}

/// One row of the sharpness table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessRow {
    pub t: u64,
    pub ratio: Rat,
}

/// Ratios `t (t+1) ... (t+k-1) / t^k` for the power family.
///
/// The sequence is nonincreasing and tends to 1; the final row is checked
/// to lie in `[1, (1 + k/t_max)^k]`.
pub fn sharpness_limit_table(k: u64, t_max: u64) -> Result<Vec<SharpnessRow>> {
    if k == 0 || t_max == 0 {
        return Err(Error::InvalidParameter(
            "family parameters must be positive".into(),
        ));
    }
    let mut rows = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        let mut num = BigUint::one();
        for i in 0..k {
            num *= BigUint::from(t + i);
        }
        let ratio = Rat::new(BigInt::from(num), BigInt::from(BigUint::from(t).pow(k as u32)));
        if let Some(prev) = rows.last().map(|r: &SharpnessRow| r.ratio.clone()) {
            assert!(ratio <= prev);
        }
        rows.push(SharpnessRow { t, ratio });
    }
    let last = &rows.last().expect("t_max >= 1").ratio;
    let one = Rat::one();
    let cap = rat_powi(
        &(Rat::one() + Rat::new(BigInt::from(k), BigInt::from(t_max))),
        k as u32,
    );
    assert!(*last >= one && *last <= cap);
    Ok(rows)
}
