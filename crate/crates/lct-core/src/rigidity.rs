//! Certificates for the superrigidity contradiction argument.
//!
//! A birationally nontrivial structure on a smooth hypersurface of degree
//! `N` in projective `N`-space would produce a mobile linear system whose
//! pushforward cycle has degree `N r^2` for some integer `r >= 1`, while
//! its threshold is below `1 / r`. The threshold lower bounds certified
//! here contradict that for `4 <= N <= 12`: the bound coefficient `q`
//! guarantees `lct >= q / (degree coefficient)^(1/2)`-style control, and
//! the contradiction margin `4 q - 1` is nonnegative exactly when the
//! bound forces `lct > 1 / r` in the limit `c -> 1/r`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Which threshold estimate drives the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidityCase {
    /// `4 <= n <= 6`, coefficient `(n - 3) / n`.
    Low,
    /// `n >= 7`, coefficient `3 / n`.
    High,
}

/// The numeric content of the contradiction for one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub n: u64,
    pub case: RigidityCase,
    /// Degree of the pushforward cycle per `r^2`.
    pub pushforward_degree_coeff: u64,
    /// Certified coefficient `q` of the threshold lower bound; the
    /// contradiction consumes only the combination `4 q - 1`.
    pub lct_lower_bound_coeff: Rat,
    /// `4 q - 1`; nonnegative means the assumed structure is contradicted.
    pub margin: Rat,
    pub contradiction: bool,
}

/// Certificate for a degree-`n` hypersurface in projective `n`-space.
pub fn superrigidity_certificate(n: u64) -> Result<RigidityCertificate> {
    if n < 4 {
        return Err(Error::InvalidParameter(
            "the argument needs dimension at least 4".into(),
        ));
    }
    let (case, coeff) = if n <= 6 {
        (
            RigidityCase::Low,
            Rat::new(BigInt::from(n - 3), BigInt::from(n)),
        )
    } else {
        (RigidityCase::High, Rat::new(BigInt::from(3), BigInt::from(n)))
    };
    let margin = Rat::from_integer(4.into()) * &coeff - Rat::from_integer(1.into());
    let contradiction = !margin.is_negative();
    Ok(RigidityCertificate {
        n,
        case,
        pushforward_degree_coeff: n,
        lct_lower_bound_coeff: coeff,
        margin,
        contradiction,
    })
}

/// Certificates for every dimension in `[n_min, n_max]`.
pub fn rigidity_range(n_min: u64, n_max: u64) -> Result<Vec<RigidityCertificate>> {
    if n_min < 4 || n_min > n_max {
        return Err(Error::InvalidParameter(
            "need 4 <= n_min <= n_max".into(),
        ));
    }
    (n_min..=n_max).map(superrigidity_certificate).collect()
}

/// Prose outline of the argument the certificate quantifies.
pub fn narrative() -> String {
    String::from(
        "Suppose a smooth degree-N hypersurface in projective N-space carried a \
birationally nontrivial structure. Undoing it with a mobile linear system H \
gives a cycle class of degree N r^2, where r > 1 measures how far H is from \
the hyperplane class, and forces the threshold of the pair below 1/r.\n\
\n\
Two multiplicity gates control the local geometry of H^2 at a point y. Where \
the Samuel multiplicity e_y exceeds 2 r^2, the bound on threshold versus \
multiplicity confines such points to a set of dimension at most max(N - 6, 0). \
Where e_y is at most 4 r^2, the pair stays log terminal near y at thresholds \
approaching 1/r.\n\
\n\
Combining the two along a generic surface section: the certified coefficient q \
(equal to (N - 3)/N for 4 <= N <= 6 via the dimension gate, and 3/N for \
N >= 7 via degree counting) bounds the local intersection mass, and in the \
limit c -> 1/r the comparison of N r^2 against 4 r^2 q leaves the margin \
4 q - 1. A nonnegative margin contradicts the assumed structure, which \
happens exactly for 4 <= N <= 12; from N = 13 on the margin is negative and \
this argument alone certifies nothing.",
    )
}
