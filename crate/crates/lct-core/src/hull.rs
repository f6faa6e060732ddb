//! Exact convex-hull machinery.
//!
//! A double description pass computes the extreme rays of a dual cone
//! `{a : <a, h> >= 0 for all h}`, which yields facet enumerations both for
//! Newton polyhedra (points plus axis rays) and for bounded polytopes
//! (points only, used by the volume recursion). Volumes come from the
//! divergence theorem: cone each facet from the origin and recurse on the
//! facet projected along a coordinate its normal does not annihilate.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{scale_to_integers, Rat};

/// One facet inequality `<normal, u> >= offset` with integral primitive data
/// and `offset > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScaledFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl ScaledFacet {
    /// The normalized normal `w` with `<w, u> >= 1` on the polyhedron.
    pub fn normalized(&self) -> Vec<Rat> {
        self.normal
            .iter()
            .map(|w| Rat::new(w.clone(), self.offset.clone()))
            .collect()
    }
}

type Bits = Vec<u64>;

fn bits_new(width: usize) -> Bits {
    vec![0; width.div_ceil(64)]
}

fn bits_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(sub: &Bits, sup: &Bits) -> bool {
    sub.iter().zip(sup).all(|(x, y)| x & !y == 0)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries, keeping the direction.
fn primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Gauss-Jordan inverse of a square rational matrix; `None` if singular.
fn invert(mut m: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
    let d = m.len();
    let mut inv: Vec<Vec<Rat>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..d {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..d {
                    let x = &m[col][j] * &f;
                    m[r][j] -= x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// Rank of a set of rational row vectors.
pub(crate) fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut reduced: Vec<Vec<Rat>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (red, &p) in reduced.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = &r[p] / &red[p];
                for j in 0..r.len() {
                    let x = &red[j] * &f;
                    r[j] -= x;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            pivots.push(p);
            reduced.push(r);
        }
    }
    reduced.len()
}

struct Ray {
    v: Vec<BigInt>,
    tight: Bits,
}

/// Extreme rays of `{a : <a, h> >= 0 for every h in constraints}`.
///
/// Returns `None` when the constraints do not span, i.e. the dual cone is
/// not pointed and has no finite extreme-ray description.
pub(crate) fn dual_rays(constraints: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let m = constraints.len();
    // Greedy independent subset in input order; its inverse seeds the
    // simplicial starting cone.
    let mut reduced: Vec<Vec<Rat>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    for (idx, row) in constraints.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        let mut r: Vec<Rat> = row.iter().map(|x| Rat::from_integer(x.clone())).collect();
        for (red, &p) in reduced.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = &r[p] / &red[p];
                for j in 0..dim {
                    let x = &red[j] * &f;
                    r[j] -= x;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            pivots.push(p);
            reduced.push(r);
            basis.push(idx);
        }
    }
    if basis.len() < dim {
        return None;
    }

    let basis_matrix: Vec<Vec<Rat>> = basis
        .iter()
        .map(|&i| constraints[i].iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let inv = invert(basis_matrix).expect("independent rows invert");

    let mut rays: Vec<Ray> = (0..dim)
        .map(|k| {
            let col: Vec<Rat> = (0..dim).map(|r| inv[r][k].clone()).collect();
            let (mut v, _) = scale_to_integers(&col);
            primitive(&mut v);
            let mut tight = bits_new(m);
            for (l, &ci) in basis.iter().enumerate() {
                if l != k {
                    bits_set(&mut tight, ci);
                }
            }
            Ray { v, tight }
        })
        .collect();

    let mut processed: Vec<usize> = basis.clone();
    for j in 0..m {
        if basis.contains(&j) {
            continue;
        }
        let h = &constraints[j];
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let negatives: Vec<usize> =
            (0..rays.len()).filter(|&k| signs[k].is_negative()).collect();
        if negatives.is_empty() {
            for (ray, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    bits_set(&mut ray.tight, j);
                }
            }
            processed.push(j);
            continue;
        }
        let positives: Vec<usize> =
            (0..rays.len()).filter(|&k| signs[k].is_positive()).collect();
        let mut fresh: Vec<Vec<BigInt>> = Vec::new();
        for &p in &positives {
            for &q in &negatives {
                let common = bits_and(&rays[p].tight, &rays[q].tight);
                let blocked = (0..rays.len())
                    .any(|r| r != p && r != q && bits_subset(&common, &rays[r].tight));
                if blocked {
                    continue;
                }
                let mut v: Vec<BigInt> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(vp, vq)| &signs[p] * vq - &signs[q] * vp)
                    .collect();
                primitive(&mut v);
                fresh.push(v);
            }
        }
        processed.push(j);
        let mut next: Vec<Ray> = Vec::new();
        for (k, ray) in rays.into_iter().enumerate() {
            if signs[k].is_negative() {
                continue;
            }
            let mut ray = ray;
            if signs[k].is_zero() {
                bits_set(&mut ray.tight, j);
            }
            next.push(ray);
        }
        for v in fresh {
            let mut tight = bits_new(m);
            for &q in &processed {
                if dot(&constraints[q], &v).is_zero() {
                    bits_set(&mut tight, q);
                }
            }
            next.push(Ray { v, tight });
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Some(out)
}

/// Facets of the Newton polyhedron `conv(gens) + R^n_{>=0}` that have
/// positive offset, i.e. all of them except coordinate hyperplanes.
pub(crate) fn newton_facets(gens: &[Vec<u64>], n: usize) -> Vec<ScaledFacet> {
    let mut constraints: Vec<Vec<BigInt>> = Vec::with_capacity(n + gens.len());
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n + 1];
        e[i + 1] = BigInt::one();
        constraints.push(e);
    }
    for g in gens {
        let mut h = Vec::with_capacity(n + 1);
        h.push(BigInt::one());
        h.extend(g.iter().map(|&e| BigInt::from(e)));
        constraints.push(h);
    }
    let rays = dual_rays(&constraints, n + 1).expect("axis rays plus a point span");
    let mut facets: Vec<ScaledFacet> = Vec::new();
    for a in rays {
        let offset = -a[0].clone();
        let normal: Vec<BigInt> = a[1..].to_vec();
        if normal.iter().all(|x| x.is_zero()) {
            // The recession inequality x_0 >= 0; no constraint on points.
            continue;
        }
        debug_assert!(normal.iter().all(|x| !x.is_negative()));
        if offset.is_positive() {
            facets.push(ScaledFacet { normal, offset });
        } else {
            // Zero offset is a coordinate hyperplane; positive a[0] cannot
            // carry a nonzero normal on an upward-closed polyhedron.
            debug_assert!(offset.is_zero());
        }
    }
    facets.sort_by(|a, b| a.normalized().cmp(&b.normalized()));
    facets
}

/// Inward facet data `(offset, normal)` of `conv(points)`: each facet
/// satisfies `<normal, x> >= -offset` on the hull, with equality on the
/// facet. `None` when the points are not full-dimensional.
fn polytope_facets(points: &[Vec<Rat>], d: usize) -> Option<Vec<(BigInt, Vec<BigInt>)>> {
    let constraints: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut h = Vec::with_capacity(d + 1);
            h.push(Rat::one());
            h.extend(p.iter().cloned());
            let (v, _) = scale_to_integers(&h);
            v
        })
        .collect();
    let rays = dual_rays(&constraints, d + 1)?;
    let mut out = Vec::new();
    for a in rays {
        let offset = a[0].clone();
        let normal = a[1..].to_vec();
        if normal.iter().all(|x| x.is_zero()) {
            continue;
        }
        out.push((offset, normal));
    }
    Some(out)
}

/// Exact volume of `conv(points)` in dimension `points[0].len()`.
///
/// Divergence-theorem recursion: the volume is the signed sum over facets of
/// `offset * vol(facet projected along j) / (d * |normal_j|)`, picking any
/// coordinate `j` the facet normal does not annihilate.
pub(crate) fn polytope_volume(points: &[Vec<Rat>]) -> Rat {
    let mut pts: Vec<Vec<Rat>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Rat::zero();
    }
    let d = pts[0].len();
    if d == 0 {
        return Rat::one();
    }
    if pts.len() < d + 1 {
        return Rat::zero();
    }
    if d == 1 {
        let lo = pts.iter().map(|p| &p[0]).min().unwrap();
        let hi = pts.iter().map(|p| &p[0]).max().unwrap();
        return hi - lo;
    }
    let facets = match polytope_facets(&pts, d) {
        Some(f) => f,
        None => return Rat::zero(),
    };
    let mut vol = Rat::zero();
    for (offset, normal) in facets {
        if offset.is_zero() {
            continue;
        }
        let j = normal.iter().position(|x| !x.is_zero()).expect("nonzero normal");
        let tight: Vec<Vec<Rat>> = pts
            .iter()
            .filter(|p| {
                let s: Rat = p
                    .iter()
                    .zip(&normal)
                    .map(|(x, w)| x * Rat::from_integer(w.clone()))
                    .sum();
                s + Rat::from_integer(offset.clone()) == Rat::zero()
            })
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let face_vol = polytope_volume(&tight);
        let denom = Rat::from_integer(BigInt::from(d as i64) * normal[j].abs());
        vol += Rat::from_integer(offset) * face_vol / denom;
    }
    debug_assert!(!vol.is_negative());
    vol
}
