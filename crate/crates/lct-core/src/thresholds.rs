//! Log canonical thresholds, log-terminal pairs, and multiplier ideals.
//!
//! For a monomial ideal everything is combinatorial: the threshold is the
//! smallest facet weight sum of the Newton polyhedron, and the multiplier
//! ideal at `c` is spanned by the monomials whose shifted exponent `v + 1`
//! lies strictly inside `c` times the polyhedron.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExpVec, MonomialIdeal};
use crate::newton::NewtonPolyhedron;
use crate::rat::{rat_floor, Rat};

/// Smallest facet weight sum: the log canonical threshold.
pub fn lct(poly: &NewtonPolyhedron) -> Rat {
    poly.facets()
        .iter()
        .map(|f| f.weight_sum())
        .min()
        .expect("a proper ideal has at least one facet")
}

/// Convenience wrapper building the polyhedron first.
pub fn lct_of_ideal(ideal: &MonomialIdeal) -> Result<Rat> {
    Ok(lct(&NewtonPolyhedron::of(ideal)?))
}

/// Boundary data `(mu, b)` for pair checks: the divisor `mu * H` minus the
/// fixed part `sum b_i * H_i`, with `0 <= b_i <= mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    b: Vec<Rat>,
    mu: Rat,
}

impl Pair {
    pub fn new(b: Vec<Rat>, mu: Rat) -> Result<Self> {
        if !mu.is_positive() {
            return Err(Error::InvalidParameter(
                "pair multiplicity must be positive".into(),
            ));
        }
        for bi in &b {
            if bi.is_negative() {
                return Err(Error::InvalidParameter(
                    "pair coefficients must be nonnegative".into(),
                ));
            }
            if *bi > mu {
                return Err(Error::InvalidParameter(
                    "pair coefficients must not exceed the multiplicity".into(),
                ));
            }
        }
        Ok(Pair { b, mu })
    }

    pub fn b(&self) -> &[Rat] {
        &self.b
    }

    pub fn mu(&self) -> &Rat {
        &self.mu
    }
}

/// Log terminality of the pair: every facet must satisfy
/// `sum (mu - b_i) w_i > 1`.
pub fn pair_is_log_terminal(poly: &NewtonPolyhedron, pair: &Pair) -> Result<bool> {
    if pair.b.len() != poly.n() {
        return Err(Error::DimensionMismatch {
            expected: poly.n(),
            got: pair.b.len(),
        });
    }
    Ok(poly.facets().iter().all(|f| {
        let s: Rat = f
            .normal()
            .iter()
            .zip(&pair.b)
            .map(|(w, bi)| (&pair.mu - bi) * w)
            .sum();
        s > Rat::from_integer(BigInt::from(1))
    }))
}

/// Like [`pair_is_log_terminal`] but for arbitrary-sign weights, where a
/// negative `b_i` adds copies of the coordinate hyperplane instead of
/// discounting them.
pub fn weighted_pair_is_log_terminal(
    poly: &NewtonPolyhedron,
    b: &[Rat],
    mu: &Rat,
) -> Result<bool> {
    if b.len() != poly.n() {
        return Err(Error::DimensionMismatch {
            expected: poly.n(),
            got: b.len(),
        });
    }
    if !mu.is_positive() {
        return Err(Error::InvalidParameter("scale must be positive".into()));
    }
    Ok(poly.facets().iter().all(|f| {
        let s: Rat = f
            .normal()
            .iter()
            .zip(b)
            .map(|(w, bi)| (mu - bi) * w)
            .sum();
        s > Rat::from_integer(BigInt::from(1))
    }))
}

/// Largest `mu` for which the pair is not log terminal:
/// `max over facets of (1 + sum b_i w_i) / sum w_i`.
pub fn pair_threshold(poly: &NewtonPolyhedron, b: &[Rat]) -> Result<Rat> {
    if b.len() != poly.n() {
        return Err(Error::DimensionMismatch {
            expected: poly.n(),
            got: b.len(),
        });
    }
    if b.iter().any(|bi| bi.is_negative()) {
        return Err(Error::InvalidParameter(
            "pair coefficients must be nonnegative".into(),
        ));
    }
    Ok(poly
        .facets()
        .iter()
        .map(|f| {
            let shift: Rat = f.normal().iter().zip(b).map(|(w, bi)| w * bi).sum();
            (Rat::from_integer(BigInt::from(1)) + shift) / f.weight_sum()
        })
        .max()
        .expect("a proper ideal has at least one facet"))
}

/// The multiplier ideal of `a^c` together with its triviality flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierIdeal {
    pub c: Rat,
    pub ideal: MonomialIdeal,
    pub trivial: bool,
}

struct Enumerator<'a> {
    n: usize,
    scaled: Vec<(&'a [BigInt], Rat)>,
    suffix: Vec<Vec<BigInt>>,
    bounds: Vec<u64>,
    out: Vec<ExpVec>,
}

impl Enumerator<'_> {
    fn corner_holds(&self, depth: usize, partial: &[BigInt]) -> bool {
        self.scaled.iter().enumerate().all(|(k, (_, target))| {
            let total = &partial[k] + &self.suffix[k][depth];
            Rat::from_integer(total) > *target
        })
    }

    fn walk(&mut self, depth: usize, v: &mut ExpVec, partial: &[BigInt]) {
        if self.corner_holds(depth, partial) {
            let mut candidate = v.clone();
            candidate.extend(core::iter::repeat(0).take(self.n - depth));
            self.out.push(candidate);
            return;
        }
        if depth == self.n - 1 {
            let mut lo: u64 = 0;
            for (k, (w, target)) in self.scaled.iter().enumerate() {
                let wn = &w[depth];
                let remaining = target - Rat::from_integer(partial[k].clone());
                if wn.is_zero() {
                    if !remaining.is_negative() {
                        return;
                    }
                    continue;
                }
                if remaining.is_negative() {
                    continue;
                }
                let q = rat_floor(&(remaining / Rat::from_integer(wn.clone())));
                let q: u64 = q.try_into().expect("nonnegative floor");
                lo = lo.max(q);
            }
            v.push(lo);
            self.out.push(v.clone());
            v.pop();
            return;
        }
        for x in 0..=self.bounds[depth] {
            let next: Vec<BigInt> = self
                .scaled
                .iter()
                .enumerate()
                .map(|(k, (w, _))| &partial[k] + &w[depth] * BigInt::from(x + 1))
                .collect();
            v.push(x);
            self.walk(depth + 1, v, &next);
            v.pop();
        }
    }
}

/// Computes the multiplier ideal of `a^c` by Newton-polyhedron interiority:
/// `x^v` belongs iff `<W, v + 1> > c L` holds on every facet.
pub fn multiplier_ideal(poly: &NewtonPolyhedron, c: &Rat) -> Result<MultiplierIdeal> {
    if c.is_negative() {
        return Err(Error::InvalidParameter(
            "multiplier ideal exponent must be nonnegative".into(),
        ));
    }
    let n = poly.n();
    let scaled: Vec<(&[BigInt], Rat)> = poly
        .facets()
        .iter()
        .map(|f| {
            let target = c * Rat::from_integer(f.scaled_offset().clone());
            (f.scaled_normal(), target)
        })
        .collect();
    let suffix: Vec<Vec<BigInt>> = scaled
        .iter()
        .map(|(w, _)| {
            let mut s = vec![BigInt::zero(); n + 1];
            for i in (0..n).rev() {
                s[i] = &s[i + 1] + &w[i];
            }
            s
        })
        .collect();
    let bounds: Vec<u64> = (0..n)
        .map(|i| {
            scaled
                .iter()
                .filter(|(w, _)| w[i].is_positive())
                .map(|(w, target)| {
                    let q = target / Rat::from_integer(w[i].clone());
                    u64::try_from(q.ceil().to_integer()).expect("bound fits in u64")
                })
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut e = Enumerator {
        n,
        scaled,
        suffix,
        bounds,
        out: Vec::new(),
    };
    let mut v = Vec::new();
    let partial = vec![BigInt::zero(); e.scaled.len()];
    e.walk(0, &mut v, &partial);
    let ideal = MonomialIdeal::new(n, e.out)?;
    let trivial = ideal.is_unit();
    Ok(MultiplierIdeal {
        c: c.clone(),
        ideal,
        trivial,
    })
}

/// Codimension of a coordinate-subspace union; `Infinite` means empty locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codim {
    Finite(u64),
    Infinite,
}

fn min_hitting_set(supports: &[Vec<usize>], chosen: &mut Vec<usize>, best: &mut u64) {
    if chosen.len() as u64 >= *best {
        return;
    }
    let uncovered = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)));
    let Some(target) = uncovered else {
        *best = chosen.len() as u64;
        return;
    };
    for &var in target {
        chosen.push(var);
        min_hitting_set(supports, chosen, best);
        chosen.pop();
    }
}

/// Codimension of the locus where `(X, a^c)` fails to be log terminal:
/// the zero locus of the multiplier ideal.
pub fn non_lt_locus_codim(poly: &NewtonPolyhedron, c: &Rat) -> Result<Codim> {
    let mult = multiplier_ideal(poly, c)?;
    if mult.trivial {
        return Ok(Codim::Infinite);
    }
    let supports: Vec<Vec<usize>> = mult
        .ideal
        .generators()
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut best = poly.n() as u64;
    let mut chosen = Vec::new();
    min_hitting_set(&supports, &mut chosen, &mut best);
    Ok(Codim::Finite(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn poly(n: usize, gens: &[&[u64]]) -> NewtonPolyhedron {
        NewtonPolyhedron::of(&ideal(n, gens)).unwrap()
    }

    #[test]
    fn thresholds_of_standard_examples() {
        assert_eq!(lct(&poly(2, &[&[2, 0], &[0, 3]])), rat(5, 6));
        assert_eq!(lct(&poly(2, &[&[1, 0], &[0, 1]])), rat_int(2));
        assert_eq!(lct(&poly(2, &[&[1, 1]])), rat_int(1));
        assert_eq!(lct(&poly(2, &[&[4, 0], &[0, 6]])), rat(1, 4) + rat(1, 6));
        assert_eq!(lct(&poly(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])), rat_int(1));
    }

    #[test]
    fn threshold_scales_under_powers() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 4]]);
        let base = lct_of_ideal(&i).unwrap();
        for t in 2..=4u64 {
            let scaled = lct_of_ideal(&i.power(t).unwrap()).unwrap();
            assert_eq!(scaled, base.clone() / rat_int(t as i64));
        }
    }

    #[test]
    fn pair_threshold_extends_the_plain_threshold() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let zero = pair_threshold(&p, &[rat_int(0), rat_int(0)]).unwrap();
        assert_eq!(zero, rat(6, 5));
        let mixed = pair_threshold(&p, &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(mixed, rat(17, 10));
    }

    #[test]
    fn pair_log_terminality_flips_at_the_threshold() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let b = vec![rat_int(0), rat_int(0)];
        let at = Pair::new(b.clone(), rat(6, 5)).unwrap();
        let above = Pair::new(b.clone(), rat(121, 100)).unwrap();
        let below = Pair::new(b, rat_int(1)).unwrap();
        assert!(!pair_is_log_terminal(&p, &at).unwrap());
        assert!(pair_is_log_terminal(&p, &above).unwrap());
        assert!(!pair_is_log_terminal(&p, &below).unwrap());
    }

    #[test]
    fn pair_validation() {
        assert!(Pair::new(vec![rat_int(0)], rat_int(0)).is_err());
        assert!(Pair::new(vec![rat_int(-1)], rat_int(1)).is_err());
        assert!(Pair::new(vec![rat_int(2)], rat_int(1)).is_err());
        assert!(Pair::new(vec![rat(1, 2)], rat(1, 2)).is_ok());
        let p = poly(2, &[&[1, 0], &[0, 1]]);
        let pair = Pair::new(vec![rat_int(0)], rat_int(1)).unwrap();
        assert!(pair_is_log_terminal(&p, &pair).is_err());
    }

    #[test]
    fn weighted_pairs_allow_added_hyperplanes() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let b = vec![rat_int(0), rat(-1, 2)];
        assert!(!weighted_pair_is_log_terminal(&p, &b, &rat(9, 10)).unwrap());
        assert!(weighted_pair_is_log_terminal(&p, &b, &rat_int(2)).unwrap());
        let plain = vec![rat_int(0), rat_int(0)];
        let pair = Pair::new(plain.clone(), rat(6, 5)).unwrap();
        assert_eq!(
            weighted_pair_is_log_terminal(&p, &plain, &rat(6, 5)).unwrap(),
            pair_is_log_terminal(&p, &pair).unwrap()
        );
        assert!(weighted_pair_is_log_terminal(&p, &b, &rat_int(0)).is_err());
        assert!(weighted_pair_is_log_terminal(&p, &[rat_int(0)], &rat_int(1)).is_err());
    }

    #[test]
    fn multiplier_ideal_of_the_cusp() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let at_lct = multiplier_ideal(&p, &rat(5, 6)).unwrap();
        assert!(!at_lct.trivial);
        assert_eq!(at_lct.ideal.generators(), &[vec![0, 1], vec![1, 0]]);
        let below = multiplier_ideal(&p, &rat(1, 2)).unwrap();
        assert!(below.trivial);
        assert!(below.ideal.is_unit());
        let above = multiplier_ideal(&p, &rat(7, 6)).unwrap();
        assert_eq!(above.ideal.generators(), &[vec![0, 2], vec![1, 0]]);
    }

    #[test]
    fn multiplier_ideals_of_maximal_ideal_powers() {
        // In two variables the multiplier ideal of m^c is m^(floor(c) - 1).
        let p = poly(2, &[&[1, 0], &[0, 1]]);
        for (num, den, k) in [(1i64, 1i64, 0u64), (3, 2, 0), (2, 1, 1), (5, 2, 1), (3, 1, 2), (10, 3, 2), (4, 1, 3)] {
            let m = multiplier_ideal(&p, &rat(num, den)).unwrap();
            if k == 0 {
                assert!(m.trivial, "c = {num}/{den}");
            } else {
                let expected = ideal(2, &[&[1, 0], &[0, 1]]).power(k).unwrap();
                assert_eq!(m.ideal.generators(), expected.generators(), "c = {num}/{den}");
            }
        }
    }

    #[test]
    fn multiplier_ideal_shrinks_as_c_grows() {
        let p = poly(2, &[&[3, 0], &[1, 1], &[0, 2]]);
        let cs = [rat(1, 3), rat(2, 3), rat_int(1), rat(3, 2), rat_int(2)];
        for pair in cs.windows(2) {
            let big = multiplier_ideal(&p, &pair[1]).unwrap().ideal;
            let small = multiplier_ideal(&p, &pair[0]).unwrap().ideal;
            for g in big.generators() {
                assert!(small.contains_monomial(g).unwrap());
            }
        }
    }

    #[test]
    fn triviality_matches_threshold_comparison() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let c0 = lct(&p);
        for delta in [rat(-1, 12), rat_int(0), rat(1, 12)] {
            let c = &c0 + &delta;
            let m = multiplier_ideal(&p, &c).unwrap();
            assert_eq!(m.trivial, c < c0);
        }
    }

    #[test]
    fn multiplier_ideal_of_non_zero_dimensional_ideals() {
        let p = poly(2, &[&[1, 1]]);
        let m = multiplier_ideal(&p, &rat_int(1)).unwrap();
        assert_eq!(m.ideal.generators(), &[vec![1, 1]]);
        let m2 = multiplier_ideal(&p, &rat_int(2)).unwrap();
        assert_eq!(m2.ideal.generators(), &[vec![2, 2]]);
    }

    #[test]
    fn non_lt_locus_codimension() {
        // (x1, x2)^3 inside a 3-dimensional ambient space.
        let cube = ideal(2, &[&[1, 0], &[0, 1]]).power(3).unwrap().extend_zero(1);
        let p = NewtonPolyhedron::of(&cube).unwrap();
        assert_eq!(lct(&p), rat(2, 3));
        assert_eq!(non_lt_locus_codim(&p, &rat(2, 3)).unwrap(), Codim::Finite(2));
        assert_eq!(non_lt_locus_codim(&p, &rat(1, 2)).unwrap(), Codim::Infinite);

        let q = poly(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert_eq!(non_lt_locus_codim(&q, &rat_int(1)).unwrap(), Codim::Finite(3));

        let r = poly(2, &[&[1, 1]]);
        assert_eq!(non_lt_locus_codim(&r, &rat_int(1)).unwrap(), Codim::Finite(1));
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        assert!(multiplier_ideal(&p, &rat(-1, 2)).is_err());
    }
}
