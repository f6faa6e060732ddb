//! Jet-space invariants of monomial ideals.
//!
//! The codimension of the locus of arcs with contact order `m` along an
//! ideal is the optimum of a covering program: minimize `sum nu_i` over
//! nonnegative integer vectors with `<nu, g> >= m` for every generator.
//! Minimizing `w(m)/m` over a bounded range of `m` recovers the log
//! canonical threshold, and truncated variants give jet scheme dimensions.
//!
//! The solver is a plain branch and bound whose only pruning devices are
//! self-verifying: candidate solutions are checked against the constraints
//! before use, and dual vectors are accepted only after their feasibility
//! is confirmed by direct inspection. No facet-derived value is ever
//! trusted as a bound without such a check, so the optimum reported here
//! is independent evidence for the polyhedral threshold.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExpVec, MonomialIdeal};
use crate::newton::NewtonPolyhedron;
use crate::rat::Rat;
use crate::thresholds::lct;

const PRUNED: u64 = u64::MAX / 2;

struct Dfs<'a> {
    gens: &'a [ExpVec],
    order: Vec<usize>,
    caps: Vec<u64>,
    suffix_max: Vec<Vec<u64>>,
    lambda: Option<&'a [Rat]>,
    best: u64,
    witness: ExpVec,
    floor: u64,
    done: bool,
}

impl Dfs<'_> {
    fn lower_bound(&self, idx: usize, rem: &[i64]) -> u64 {
        let mut coverage: u64 = 0;
        for (k, r) in rem.iter().enumerate() {
            if *r <= 0 {
                continue;
            }
            let cap = self.suffix_max[idx][k];
            if cap == 0 {
                return PRUNED;
            }
            coverage = coverage.max((*r as u64).div_ceil(cap));
        }
        let mut bound = coverage;
        if let Some(lambda) = self.lambda {
            let mut s = Rat::zero();
            for (k, r) in rem.iter().enumerate() {
                if *r > 0 && !lambda[k].is_zero() {
                    s += &lambda[k] * Rat::from_integer((*r).into());
                }
            }
            if !s.is_zero() {
                let c = s.ceil().to_integer().to_u64().expect("bound fits u64");
                bound = bound.max(c);
            }
        }
        bound
    }

    fn walk(&mut self, idx: usize, fixed: u64, assign: &mut ExpVec, rem: &[i64]) {
        if self.done {
            return;
        }
        if rem.iter().all(|r| *r <= 0) {
            if fixed < self.best {
                self.best = fixed;
                self.witness = assign.clone();
                if self.best <= self.floor {
                    self.done = true;
                }
            }
            return;
        }
        if idx == self.order.len() {
            return;
        }
        let lb = self.lower_bound(idx, rem);
        if lb == PRUNED || fixed + lb >= self.best {
            return;
        }
        let var = self.order[idx];
        for x in 0..=self.caps[var] {
            let next: Vec<i64> = rem
                .iter()
                .zip(self.gens)
                .map(|(r, g)| r - (x as i64) * (g[var] as i64))
                .collect();
            assign[var] = x;
            self.walk(idx + 1, fixed + x, assign, &next);
            assign[var] = 0;
            if self.done {
                return;
            }
        }
    }
}

/// Exact minimum of `sum nu_i` subject to `<nu, g> >= target`, `nu >= lo`
/// componentwise, and optionally `nu <= structural_cap`.
///
/// `floor` must be a sound lower bound for the optimum (0 is always sound);
/// `seeds` are candidate witnesses, each verified before being adopted.
fn solve_cover(
    gens: &[ExpVec],
    n: usize,
    target: u64,
    lo: u64,
    structural_cap: Option<u64>,
    lambda: Option<&[Rat]>,
    floor: u64,
    seeds: &[ExpVec],
) -> (u64, ExpVec) {
    debug_assert!(!gens.is_empty());
    let caps: Vec<u64> = (0..n)
        .map(|i| {
            let base = gens
                .iter()
                .filter(|g| g[i] > 0)
                .map(|g| target.div_ceil(g[i]))
                .max()
                .unwrap_or(lo)
                .max(lo);
            match structural_cap {
                Some(c) => base.min(c.max(lo)),
                None => base,
            }
        })
        .collect();

    // Shift out the mandatory `lo` units so the search runs from zero.
    let shifted_target: Vec<i64> = gens
        .iter()
        .map(|g| {
            let used: u64 = g.iter().sum::<u64>() * lo;
            target as i64 - used as i64
        })
        .collect();
    let shifted_caps: Vec<u64> = caps.iter().map(|c| c - lo).collect();

    let mut order: Vec<usize> = (0..n).collect();
    let weight = |i: usize| gens.iter().map(|g| g[i]).max().unwrap_or(0);
    order.sort_by(|&a, &b| weight(b).cmp(&weight(a)).then(a.cmp(&b)));

    let suffix_max: Vec<Vec<u64>> = {
        let mut s = vec![vec![0u64; gens.len()]; n + 1];
        for idx in (0..n).rev() {
            let var = order[idx];
            for (k, g) in gens.iter().enumerate() {
                s[idx][k] = s[idx + 1][k].max(g[var]);
            }
        }
        s
    };

    let feasible = |v: &ExpVec| {
        gens.iter()
            .all(|g| g.iter().zip(v).map(|(&a, &b)| a as u128 * b as u128).sum::<u128>() >= target as u128)
    };

    let mut best = caps.iter().sum::<u64>();
    let mut witness = caps.clone();
    debug_assert!(feasible(&witness));
    for seed in seeds {
        let clamped: ExpVec = seed
            .iter()
            .zip(&caps)
            .map(|(&x, &c)| x.clamp(lo, c))
            .collect();
        let value: u64 = clamped.iter().sum();
        if value < best && feasible(&clamped) {
            best = value;
            witness = clamped;
        }
    }

    let mut floor = floor.max(lo * n as u64);
    if let Some(lambda) = lambda {
        let s: Rat = lambda.iter().map(|l| l * Rat::from_integer(target.into())).sum();
        if !s.is_zero() {
            floor = floor.max(s.ceil().to_integer().to_u64().expect("bound fits u64"));
        }
    }
    if best <= floor {
        return (best, witness);
    }

    let offset = lo * n as u64;
    let mut dfs = Dfs {
        gens,
        order,
        caps: shifted_caps,
        suffix_max,
        lambda,
        best: best - offset,
        witness: witness.iter().map(|&x| x - lo).collect(),
        floor: floor.saturating_sub(offset),
        done: false,
    };
    let mut assign = vec![0u64; n];
    dfs.walk(0, 0, &mut assign, &shifted_target);
    let value = dfs.best + offset;
    let witness: ExpVec = dfs.witness.iter().map(|&x| x + lo).collect();
    debug_assert!(feasible(&witness));
    debug_assert_eq!(witness.iter().sum::<u64>(), value);
    (value, witness)
}

/// A dual vector for the covering program, one entry per generator.
///
/// Validity is established here by direct inspection: all entries are
/// nonnegative and every coordinate column sums to at most one. Such a
/// vector certifies `sum nu_i >= sum lambda_g r_g` for any residual
/// requirements `r`.
fn certified_dual(gens: &[ExpVec], n: usize, poly: &NewtonPolyhedron, facet_idx: usize) -> Option<Vec<Rat>> {
    let facet = &poly.facets()[facet_idx];
    let tight: Vec<usize> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            let v: num_bigint::BigInt = facet
                .scaled_normal()
                .iter()
                .zip(g.iter())
                .map(|(w, &e)| w * num_bigint::BigInt::from(e))
                .sum();
            v == *facet.scaled_offset()
        })
        .map(|(k, _)| k)
        .collect();
    if tight.is_empty() {
        return None;
    }
    // Solve sum_t lambda_t g_t = (1, ..., 1) by elimination, free
    // variables set to zero.
    let cols = tight.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = tight
                .iter()
                .map(|&t| Rat::from_integer(gens[t][i].into()))
                .collect();
            row.push(Rat::from_integer(1.into()));
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut used_rows = 0usize;
    for col in 0..cols {
        let Some(r) = (used_rows..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(used_rows, r);
        let p = m[used_rows][col].clone();
        for j in 0..=cols {
            m[used_rows][j] /= &p;
        }
        for r2 in 0..n {
            if r2 != used_rows && !m[r2][col].is_zero() {
                let f = m[r2][col].clone();
                for j in 0..=cols {
                    let x = &m[used_rows][j] * &f;
                    m[r2][j] -= x;
                }
            }
        }
        pivot_of_col[col] = Some(used_rows);
        used_rows += 1;
        if used_rows == n {
            break;
        }
    }
    for r in used_rows..n {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivot_of_col[col] {
            x[col] = m[r][cols].clone();
        }
    }
    // Verification pass; reject rather than trust the algebra above.
    if x.iter().any(|l| l < &Rat::zero()) {
        return None;
    }
    for i in 0..n {
        let s: Rat = tight
            .iter()
            .zip(&x)
            .map(|(&t, l)| l * Rat::from_integer(gens[t][i].into()))
            .sum();
        if s > Rat::from_integer(1.into()) {
            return None;
        }
    }
    let mut full = vec![Rat::zero(); gens.len()];
    for (k, &t) in tight.iter().enumerate() {
        full[t] = x[k].clone();
    }
    Some(full)
}

/// Index of a threshold-achieving facet with the smallest denominator
/// lcm, together with that lcm.
fn achieving_facet(poly: &NewtonPolyhedron) -> (usize, u64) {
    let c = lct(poly);
    let mut best: Option<(BigUint, usize)> = None;
    for (k, f) in poly.facets().iter().enumerate() {
        if f.weight_sum() != c {
            continue;
        }
        let mut l = BigUint::from(1u32);
        for w in f.normal() {
            l = l.lcm(w.denom().magnitude());
        }
        if best.as_ref().is_none_or(|(bl, _)| l < *bl) {
            best = Some((l, k));
        }
    }
    let (l, k) = best.expect("the threshold is attained by some facet");
    (k, l.to_u64().expect("contact depth fits u64"))
}

/// Rounds `m` times the facet normal upward to an integer candidate.
fn rounded_seed(poly: &NewtonPolyhedron, facet_idx: usize, m: u64) -> ExpVec {
    poly.facets()[facet_idx]
        .normal()
        .iter()
        .map(|w| {
            let v = w * Rat::from_integer(m.into());
            v.ceil().to_integer().to_u64().expect("seed fits u64")
        })
        .collect()
}

/// Codimension datum of one contact order: the optimum and a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactEntry {
    pub m: u64,
    pub weight: u64,
    pub witness: ExpVec,
}

/// Contact codimensions for `m = 1, ..., m_max` with the minimizing ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactProfile {
    pub m_max: u64,
    pub entries: Vec<ContactEntry>,
    pub min_ratio: Rat,
    pub argmin: u64,
}

/// Depth sufficient for the ratio minimum: the denominator lcm of a
/// threshold-achieving facet, at which `w(m) = m * lct` exactly.
pub fn default_contact_depth(ideal: &MonomialIdeal) -> Result<u64> {
    let poly = NewtonPolyhedron::of(ideal)?;
    Ok(achieving_facet(&poly).1)
}

/// Codimension of the order-`m` contact locus, with a minimizing witness.
pub fn contact_codim(ideal: &MonomialIdeal, m: u64) -> Result<ContactEntry> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "contact order must be positive".into(),
        ));
    }
    let poly = NewtonPolyhedron::of(ideal)?;
    let (facet_idx, _) = achieving_facet(&poly);
    let lambda = certified_dual(ideal.generators(), ideal.n(), &poly, facet_idx);
    let seeds = [rounded_seed(&poly, facet_idx, m)];
    let (weight, witness) = solve_cover(
        ideal.generators(),
        ideal.n(),
        m,
        0,
        None,
        lambda.as_deref(),
        0,
        &seeds,
    );
    Ok(ContactEntry { m, weight, witness })
}

/// Contact codimensions up to `m_max` (default: the denominator depth).
pub fn contact_profile(ideal: &MonomialIdeal, m_max: Option<u64>) -> Result<ContactProfile> {
    let poly = NewtonPolyhedron::of(ideal)?;
    let (facet_idx, depth) = achieving_facet(&poly);
    let m_max = match m_max {
        Some(0) => {
            return Err(Error::InvalidParameter(
                "contact depth must be positive".into(),
            ))
        }
        Some(m) => m,
        None => depth,
    };
    let lambda = certified_dual(ideal.generators(), ideal.n(), &poly, facet_idx);
    let mut entries: Vec<ContactEntry> = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let mut seeds = vec![rounded_seed(&poly, facet_idx, m)];
        if let Some(prev) = entries.last() {
            let first = &entries[0];
            let sum: ExpVec = prev
                .witness
                .iter()
                .zip(&first.witness)
                .map(|(a, b)| a + b)
                .collect();
            seeds.push(sum);
        }
        let floor = entries.last().map(|e| e.weight).unwrap_or(0);
        let (weight, witness) = solve_cover(
            ideal.generators(),
            ideal.n(),
            m,
            0,
            None,
            lambda.as_deref(),
            floor,
            &seeds,
        );
        entries.push(ContactEntry { m, weight, witness });
    }
    let (argmin, min_ratio) = entries
        .iter()
        .map(|e| (e.m, Rat::new(e.weight.into(), e.m.into())))
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("at least one entry");
    Ok(ContactProfile {
        m_max,
        entries,
        min_ratio,
        argmin,
    })
}

/// The threshold recovered purely from contact codimensions.
pub fn lct_via_jets(ideal: &MonomialIdeal) -> Result<Rat> {
    Ok(contact_profile(ideal, None)?.min_ratio)
}

/// Dimension of the space of `m`-jets on the subscheme; `fiber` restricts
/// to jets centered at the origin.
///
/// Equals `(m + 1) n` minus the truncated covering optimum at order
/// `m + 1`, where each variable is capped at `m + 1` and fiber jets
/// additionally start at one.
pub fn jet_dim(ideal: &MonomialIdeal, m: u64, fiber: bool) -> Result<u64> {
    let poly = NewtonPolyhedron::of(ideal)?;
    let (facet_idx, _) = achieving_facet(&poly);
    let lambda = certified_dual(ideal.generators(), ideal.n(), &poly, facet_idx);
    let lo = if fiber { 1 } else { 0 };
    let seeds = [rounded_seed(&poly, facet_idx, m + 1)];
    let (weight, _) = solve_cover(
        ideal.generators(),
        ideal.n(),
        m + 1,
        lo,
        Some(m + 1),
        lambda.as_deref(),
        0,
        &seeds,
    );
    Ok((m + 1) * ideal.n() as u64 - weight)
}

/// One row of the cone recursion comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRecursionRow {
    pub m: u64,
    pub fiber_dim: u64,
    pub recursion_dim: u64,
}

/// Outcome of checking the cone recursion for jet dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRecursionCheck {
    pub degree: u64,
    pub rows: Vec<ConeRecursionRow>,
    pub holds: bool,
}

/// For an ideal generated in a single degree `d`, fiber jets of order
/// `m >= d` should satisfy
/// `jet_dim(m, fiber) = jet_dim(m - d) + n (d - 1)`.
pub fn cone_recursion_check(ideal: &MonomialIdeal, m_max: u64) -> Result<ConeRecursionCheck> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let degs: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.iter().sum::<u64>())
        .collect();
    let degree = degs[0];
    if let Some(&bad) = degs.iter().find(|&&d| d != degree) {
        return Err(Error::NotHomogeneous {
            expected: degree,
            got: bad,
        });
    }
    let mut rows = Vec::new();
    let mut holds = true;
    for m in degree..=m_max {
        let fiber_dim = jet_dim(ideal, m, true)?;
        let recursion_dim =
            jet_dim(ideal, m - degree, false)? + ideal.n() as u64 * (degree - 1);
        if fiber_dim != recursion_dim {
            holds = false;
        }
        rows.push(ConeRecursionRow {
            m,
            fiber_dim,
            recursion_dim,
        });
    }
    Ok(ConeRecursionCheck {
        degree,
        rows,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn brute_force(gens: &[&[u64]], n: usize, target: u64, lo: u64, cap: Option<u64>) -> u64 {
        let caps: Vec<u64> = (0..n)
            .map(|i| {
                let base = gens
                    .iter()
                    .filter(|g| g[i] > 0)
                    .map(|g| target.div_ceil(g[i]))
                    .max()
                    .unwrap_or(lo)
                    .max(lo);
                match cap {
                    Some(c) => base.min(c.max(lo)),
                    None => base,
                }
            })
            .collect();
        let mut v = vec![lo; n];
        let mut best = u64::MAX;
        loop {
            let ok = gens
                .iter()
                .all(|g| g.iter().zip(&v).map(|(&a, &b)| a * b).sum::<u64>() >= target);
            if ok {
                best = best.min(v.iter().sum());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                if v[i] < caps[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = lo;
                i += 1;
            }
        }
    }

    #[test]
    fn cusp_contact_codimensions() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        for m in 1..=12u64 {
            let e = contact_codim(&i, m).unwrap();
            assert_eq!(e.weight, m.div_ceil(2) + m.div_ceil(3), "m = {m}");
        }
        let w1 = contact_codim(&i, 1).unwrap();
        assert_eq!(w1.witness, vec![1, 1]);
        let w6 = contact_codim(&i, 6).unwrap();
        assert_eq!(w6.weight, 5);
        assert_eq!(w6.witness, vec![3, 2]);
    }

    #[test]
    fn solver_matches_exhaustive_search() {
        let cases: Vec<(usize, Vec<&[u64]>)> = vec![
            (2, vec![&[2, 0], &[0, 3]]),
            (2, vec![&[2, 0], &[1, 1], &[0, 3]]),
            (3, vec![&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[1, 1, 1]]),
            (3, vec![&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]),
            (2, vec![&[1, 1]]),
        ];
        for (n, gens) in &cases {
            let i = MonomialIdeal::new(*n, gens.iter().map(|g| g.to_vec()).collect()).unwrap();
            for m in 1..=7u64 {
                let got = contact_codim(&i, m).unwrap().weight;
                let want = brute_force(gens, *n, m, 0, None);
                assert_eq!(got, want, "gens {gens:?} m {m}");
            }
        }
    }

    #[test]
    fn contact_depth_is_the_facet_denominator_lcm() {
        assert_eq!(default_contact_depth(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), 6);
        assert_eq!(default_contact_depth(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), 1);
        // Two facets both achieve the threshold 1; the (1/2, 1/2) side has
        // the smaller lcm.
        assert_eq!(default_contact_depth(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])).unwrap(), 2);
    }

    #[test]
    fn profile_recovers_the_threshold() {
        for (n, gens) in [
            (2usize, vec![vec![2, 0], vec![0, 3]]),
            (2, vec![vec![1, 0], vec![0, 1]]),
            (2, vec![vec![2, 0], vec![1, 1], vec![0, 3]]),
            (2, vec![vec![1, 1]]),
            (3, vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]),
            (3, vec![vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4], vec![1, 1, 1]]),
            (2, vec![vec![5, 0], vec![0, 6]]),
        ] {
            let i = MonomialIdeal::new(n, gens).unwrap();
            let via_jets = lct_via_jets(&i).unwrap();
            let poly = NewtonPolyhedron::of(&i).unwrap();
            assert_eq!(via_jets, lct(&poly), "{:?}", i.generators());
        }
    }

    #[test]
    fn profile_of_the_augmented_fourth_powers() {
        let i = ideal(3, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[1, 1, 1]]);
        let p = contact_profile(&i, None).unwrap();
        assert_eq!(p.m_max, 4);
        let weights: Vec<u64> = p.entries.iter().map(|e| e.weight).collect();
        assert_eq!(weights, vec![3, 3, 3, 4]);
        assert_eq!(p.min_ratio, rat(1, 1));
        assert_eq!(p.argmin, 3);
    }

    #[test]
    fn weights_are_monotone_and_subadditive() {
        for (n, gens) in [
            (2usize, vec![vec![2, 0], vec![0, 3]]),
            (2, vec![vec![3, 0], vec![1, 2]]),
            (3, vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]]),
        ] {
            let i = MonomialIdeal::new(n, gens).unwrap();
            let w: Vec<u64> = (1..=10)
                .map(|m| contact_codim(&i, m).unwrap().weight)
                .collect();
            for m in 1..w.len() {
                assert!(w[m] >= w[m - 1]);
            }
            for a in 1..=5usize {
                for b in 1..=5usize {
                    assert!(w[a + b - 1] <= w[a - 1] + w[b - 1]);
                }
            }
        }
    }

    #[test]
    fn jet_dimensions_of_plane_subschemes() {
        let square = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(jet_dim(&square, 1, false).unwrap(), 2);
        let axes = ideal(2, &[&[1, 0], &[0, 1]]);
        for m in 0..=4 {
            assert_eq!(jet_dim(&axes, m, false).unwrap(), 0);
        }
        let line = ideal(2, &[&[1, 0]]);
        for m in 0..=4 {
            assert_eq!(jet_dim(&line, m, false).unwrap(), m + 1);
        }
    }

    #[test]
    fn jet_dimension_matches_exhaustive_search() {
        let cases: Vec<(usize, Vec<&[u64]>)> = vec![
            (2, vec![&[2, 0], &[0, 3]]),
            (2, vec![&[2, 0], &[1, 1], &[0, 2]]),
            (3, vec![&[1, 1, 0], &[0, 0, 2]]),
        ];
        for (n, gens) in &cases {
            let i = MonomialIdeal::new(*n, gens.iter().map(|g| g.to_vec()).collect()).unwrap();
            for m in 0..=4u64 {
                for fiber in [false, true] {
                    let lo = if fiber { 1 } else { 0 };
                    let want =
                        (m + 1) * *n as u64 - brute_force(gens, *n, m + 1, lo, Some(m + 1));
                    let got = jet_dim(&i, m, fiber).unwrap();
                    assert_eq!(got, want, "gens {gens:?} m {m} fiber {fiber}");
                }
            }
        }
    }

    #[test]
    fn cone_recursion_holds_for_homogeneous_ideals() {
        let square = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let r = cone_recursion_check(&square, 8).unwrap();
        assert_eq!(r.degree, 2);
        assert!(r.holds);
        assert_eq!(r.rows.len(), 7);

        let cubes = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let r = cone_recursion_check(&cubes, 9).unwrap();
        assert_eq!(r.degree, 3);
        assert!(r.holds);
    }

    #[test]
    fn cone_recursion_requires_homogeneity() {
        // Generators are kept in lexicographic order, so y^2 comes first.
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        assert!(matches!(
            cone_recursion_check(&i, 4),
            Err(Error::NotHomogeneous { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn contact_order_must_be_positive() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(contact_codim(&i, 0).is_err());
        assert!(contact_profile(&i, Some(0)).is_err());
    }

    #[test]
    fn ratio_never_dips_below_the_threshold() {
        let i = ideal(2, &[&[5, 0], &[0, 6]]);
        let p = contact_profile(&i, Some(35)).unwrap();
        let c = rat(1, 5) + rat(1, 6);
        for e in &p.entries {
            assert!(Rat::new(e.weight.into(), e.m.into()) >= c, "m = {}", e.m);
        }
        assert_eq!(p.min_ratio, c);
        assert_eq!(p.argmin, 30);
    }
}
