//! Monomial ideals as antichains of exponent vectors.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exponent vector of a monomial; one entry per ring variable.
pub type ExpVec = Vec<u64>;

/// `x^a` divides `x^b`, i.e. `a <= b` componentwise.
pub fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(ai, bi)| ai <= bi)
}

/// Indices of the variables appearing in a monomial.
pub fn support(v: &[u64]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
}

/// Sum of exponents.
pub fn total_degree(v: &[u64]) -> u64 {
    v.iter().sum()
}

/// A monomial ideal in `n` variables, stored as the unique minimal
/// generating antichain, sorted lexicographically.
///
/// The unit ideal is representable (single all-zero generator); operations
/// that need a proper ideal reject it explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExpVec>,
}

/// Reduces a generator list to the minimal antichain, sorted.
fn minimal_antichain(mut gens: Vec<ExpVec>) -> Vec<ExpVec> {
    gens.sort_by(|a, b| total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExpVec> = Vec::new();
    for v in gens {
        if !kept.iter().any(|u| divides(u, &v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(n: usize, gens: Vec<ExpVec>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVariables);
        }
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: g.len() });
            }
        }
        Ok(MonomialIdeal { n, gens: minimal_antichain(gens) })
    }

    /// Like [`MonomialIdeal::new`] but rejects input that is not already a
    /// minimal antichain (duplicates included).
    pub fn new_strict(n: usize, gens: Vec<ExpVec>) -> Result<Self> {
        let given = gens.len();
        let ideal = Self::new(n, gens)?;
        if ideal.gens.len() != given {
            return Err(Error::NotMinimal);
        }
        Ok(ideal)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExpVec] {
        &self.gens
    }

    /// The unit ideal is generated by the constant monomial.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|e| *e == 0))
    }

    /// `x^v` lies in the ideal iff some generator divides it.
    pub fn contains_monomial(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        Ok(self.gens.iter().any(|g| divides(g, v)))
    }

    /// `t`-th power by repeated convolution of generator sets, `t >= 1`.
    pub fn power(&self, t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter(alloc::string::String::from(
                "power exponent must be at least 1",
            )));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            let mut sums = Vec::with_capacity(acc.gens.len() * self.gens.len());
            for a in &acc.gens {
                for b in &self.gens {
                    sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
                }
            }
            acc = MonomialIdeal { n: self.n, gens: minimal_antichain(sums) };
        }
        Ok(acc)
    }

    /// Minimal pure-power exponent on each axis, when every axis has one.
    ///
    /// Existence for all axes is exactly zero-dimensionality of the quotient.
    pub fn axis_pure_powers(&self) -> Option<Vec<u64>> {
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let a = self
                .gens
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, e)| j == i || *e == 0))
                .map(|g| g[i])
                .min()?;
            out.push(a);
        }
        Some(out)
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.axis_pure_powers().is_some()
    }

    /// Common total degree of the generators, when they share one.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = total_degree(&self.gens[0]);
        self.gens.iter().all(|g| total_degree(g) == d).then_some(d)
    }

    /// Number of monomials outside the ideal, i.e. the length of the
    /// quotient ring. Finite exactly when the ideal is zero-dimensional.
    pub fn colength(&self) -> Result<BigUint> {
        let bounds = self.axis_pure_powers().ok_or(Error::NotZeroDimensional)?;
        let mut count = BigUint::zero();
        let all: Vec<usize> = (0..self.gens.len()).collect();
        self.count_columns(&bounds, 0, &all, &mut count);
        Ok(count)
    }

    /// Walks prefixes `(v_1, …, v_{n-1})`, narrowing to the generators the
    /// prefix already dominates; each column of the staircase then
    /// contributes its height in one step.
    fn count_columns(&self, bounds: &[u64], depth: usize, live: &[usize], count: &mut BigUint) {
        if depth == self.n - 1 {
            // A pure power on the last axis is always live, so the column
            // height is finite.
            let height = live
                .iter()
                .map(|&k| self.gens[k][depth])
                .min()
                .expect("zero-dimensional ideal has a live generator");
            *count += BigUint::from(height);
            return;
        }
        for v in 0..bounds[depth] {
            let narrowed: Vec<usize> = live
                .iter()
                .copied()
                .filter(|&k| self.gens[k][depth] <= v)
                .collect();
            self.count_columns(bounds, depth + 1, &narrowed, count);
        }
    }

    /// Restricts to the listed variables; every generator must be supported
    /// on them.
    pub fn restrict(&self, vars: &[usize]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::ZeroVariables);
        }
        for g in &self.gens {
            for (i, e) in g.iter().enumerate() {
                if *e > 0 && !vars.contains(&i) {
                    return Err(Error::InvalidParameter(alloc::string::String::from(
                        "generator supported outside the restriction variables",
                    )));
                }
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| vars.iter().map(|&i| g[i]).collect())
            .collect();
        MonomialIdeal::new(vars.len(), gens)
    }

    /// Extends the ambient ring by `extra` unused variables.
    pub fn extend_zero(&self, extra: usize) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut v = g.clone();
                v.extend(core::iter::repeat(0).take(extra));
                v
            })
            .collect();
        MonomialIdeal { n: self.n + extra, gens }
    }

    /// Union of the supports of all generators, sorted.
    pub fn support_union(&self) -> Vec<usize> {
        let mut used = alloc::vec![false; self.n];
        for g in &self.gens {
            for (i, e) in g.iter().enumerate() {
                if *e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, u)| **u).map(|(i, _)| i).collect()
    }
}
