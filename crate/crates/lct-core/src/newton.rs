//! Newton polyhedra of monomial ideals.
//!
//! The polyhedron of an ideal is the convex hull of its exponent vectors
//! plus the nonnegative orthant. Everything downstream reads off this
//! geometry: thresholds from facet normals, colength bounds and Samuel
//! multiplicity from the covolume, multiplier ideals from interior lattice
//! points.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::{newton_facets, polytope_volume, rat_rank};
use crate::ideal::{ExpVec, MonomialIdeal};
use crate::rat::{factorial, Rat};

/// A facet `<normal, u> >= 1` of a Newton polyhedron, also carried in
/// primitive integer form `<scaled_normal, u> >= scaled_offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    normal: Vec<Rat>,
    scaled_normal: Vec<BigInt>,
    scaled_offset: BigInt,
}

impl Facet {
    /// Normalized inward normal `w`, so the facet reads `<w, u> >= 1`.
    pub fn normal(&self) -> &[Rat] {
        &self.normal
    }

    /// Primitive integer normal `W` with `gcd(W, offset) = 1`.
    pub fn scaled_normal(&self) -> &[BigInt] {
        &self.scaled_normal
    }

    /// Positive integer offset `L`, so the facet reads `<W, u> >= L`.
    pub fn scaled_offset(&self) -> &BigInt {
        &self.scaled_offset
    }

    /// Sum of the normalized normal entries.
    pub fn weight_sum(&self) -> Rat {
        self.normal.iter().sum()
    }

    fn holds_at(&self, point: &[Rat], strict: bool) -> bool {
        let value: Rat = point
            .iter()
            .zip(&self.scaled_normal)
            .map(|(x, w)| x * Rat::from_integer(w.clone()))
            .sum();
        let offset = Rat::from_integer(self.scaled_offset.clone());
        if strict {
            value > offset
        } else {
            value >= offset
        }
    }
}

/// The Newton polyhedron of a proper monomial ideal.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    n: usize,
    facets: Vec<Facet>,
    vertices: Vec<ExpVec>,
    coordinate_facet: Vec<bool>,
    zero_dimensional: bool,
}

fn dot_int(w: &[BigInt], v: &[u64]) -> BigInt {
    w.iter().zip(v).map(|(a, &b)| a * BigInt::from(b)).sum()
}

impl NewtonPolyhedron {
    /// Builds the polyhedron of `ideal`; the unit ideal has none.
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = ideal.n();
        let gens = ideal.generators();
        let facets: Vec<Facet> = newton_facets(gens, n)
            .into_iter()
            .map(|f| Facet {
                normal: f.normalized(),
                scaled_normal: f.normal,
                scaled_offset: f.offset,
            })
            .collect();
        let coordinate_facet: Vec<bool> = (0..n)
            .map(|i| gens.iter().any(|g| g[i] == 0))
            .collect();
        let vertices: Vec<ExpVec> = gens
            .iter()
            .filter(|v| {
                let mut rows: Vec<Vec<Rat>> = Vec::new();
                for f in &facets {
                    if dot_int(&f.scaled_normal, v) == f.scaled_offset {
                        rows.push(f.normal.clone());
                    }
                }
                for (i, &vi) in v.iter().enumerate() {
                    if vi == 0 {
                        let mut e = vec![Rat::zero(); n];
                        e[i] = Rat::one();
                        rows.push(e);
                    }
                }
                rat_rank(&rows) == n
            })
            .cloned()
            .collect();
        let zero_dimensional = ideal.is_zero_dimensional();
        Ok(NewtonPolyhedron {
            n,
            facets,
            vertices,
            coordinate_facet,
            zero_dimensional,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets with positive offset, sorted by normalized normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Vertices of the polyhedron, a subset of the minimal generators.
    pub fn vertices(&self) -> &[ExpVec] {
        &self.vertices
    }

    /// Whether `{u_i = 0}` supports a facet.
    pub fn has_coordinate_facet(&self, i: usize) -> bool {
        self.coordinate_facet[i]
    }

    /// Whether the complement of the polyhedron in the orthant is bounded.
    pub fn is_zero_dimensional(&self) -> bool {
        self.zero_dimensional
    }

    /// Membership of a rational point; `strict` tests the interior.
    pub fn contains(&self, point: &[Rat], strict: bool) -> Result<bool> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: point.len(),
            });
        }
        for (i, x) in point.iter().enumerate() {
            if x.is_negative() {
                return Ok(false);
            }
            if strict && self.coordinate_facet[i] && x.is_zero() {
                return Ok(false);
            }
        }
        Ok(self.facets.iter().all(|f| f.holds_at(point, strict)))
    }

    /// Volume of the orthant minus the polyhedron.
    ///
    /// Cones each facet from the origin: the facet at `<W, u> = L`
    /// contributes `L * vol(projection along j) / (n * W_j)` for any `j`
    /// with `W_j` nonzero. Finite only in the zero-dimensional case.
    pub fn covolume(&self) -> Result<Rat> {
        if !self.zero_dimensional {
            return Err(Error::NotZeroDimensional);
        }
        let mut total = Rat::zero();
        for f in &self.facets {
            let tight: Vec<&ExpVec> = self
                .vertices
                .iter()
                .filter(|v| dot_int(&f.scaled_normal, v) == f.scaled_offset)
                .collect();
            let j = f
                .scaled_normal
                .iter()
                .position(|w| !w.is_zero())
                .expect("facet normal is nonzero");
            let projected: Vec<Vec<Rat>> = tight
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(i, _)| *i != j)
                        .map(|(_, &x)| Rat::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect();
            let base = polytope_volume(&projected);
            let scale = Rat::new(
                f.scaled_offset.clone(),
                BigInt::from(self.n as u64) * &f.scaled_normal[j],
            );
            total += scale * base;
        }
        Ok(total)
    }

    /// Samuel multiplicity: `n!` times the covolume, always an integer.
    pub fn samuel_multiplicity(&self) -> Result<BigUint> {
        let covol = self.covolume()?;
        let m = covol * Rat::from_integer(BigInt::from(factorial(self.n as u64)));
        debug_assert!(m.is_integer());
        Ok(m.to_integer()
            .to_biguint()
            .expect("multiplicity is nonnegative"))
    }
}
