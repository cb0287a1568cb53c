//! Quantum dimensions, the S-matrix, twists, transparent objects and the
//! modularity verdict for the semisimple quotient at a root of unity.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::fusion::FusionEngine;
use crate::weight::Weight;
use crate::weyl::orbit::for_each_orbit_element;
use crate::weyl::{half_dual_quotient, isometries, AffineGenerator, AlcoveContext};

/// Upper bound on `|W| * |alcove|^2` for computing the S-matrix.
pub const S_MATRIX_BUDGET: u128 = 200_000_000;

/// Divide a polynomial (constant term first) by `x^m - 1`, exactly.
fn div_x_m_minus_one(p: &[BigInt], m: usize) -> Option<Vec<BigInt>> {
    if p.len() <= m {
        return p.iter().all(Zero::is_zero).then(Vec::new);
    }
    let qlen = p.len() - m;
    let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
    // p = q x^m - q, so q_k = q_{k-m} - p_k
    for k in 0..qlen {
        let prev = if k >= m {
            q[k - m].clone()
        } else {
            BigInt::zero()
        };
        q.push(prev - &p[k]);
    }
    for k in qlen..p.len() {
        let ok = if k >= m {
            q[k - m] == p[k]
        } else {
            p[k].is_zero()
        };
        if !ok {
            return None;
        }
    }
    Some(q)
}

/// Multiply a polynomial by `x^m - 1`.
fn mul_x_m_minus_one(p: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + m];
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[k + m] += c;
        out[k] -= c;
    }
    out
}

/// Quantum dimension `prod_beta (q^a - q^-a) / (q^b - q^-b)` with
/// `a = <lam + rho, beta>` and `b = <rho, beta>`, for any weight `lam`.
pub fn qdim(ctx: &AlcoveContext, lam: &Weight) -> Result<CycNum> {
    let rs = ctx.root_system();
    rs.check_rank(lam)?;
    let ring = ctx.ring();
    let shifted = lam + rs.rho();
    let mut sign = 1i64;
    let mut num_abs = Vec::new();
    let mut den = Vec::new();
    for b in rs.positive_roots() {
        let a = b.pairing(&shifted);
        if a == 0 {
            return Ok(CycNum::zero(ring));
        }
        if a < 0 {
            sign = -sign;
        }
        num_abs.push(a.unsigned_abs() as usize);
        den.push(b.pairing(rs.rho()) as usize);
    }
    // q^a - q^-a = q^-a (q^2a - 1)
    let mut p = vec![BigInt::from(sign)];
    for &a in &num_abs {
        p = mul_x_m_minus_one(&p, 2 * a);
    }
    for &b in &den {
        p = div_x_m_minus_one(&p, 2 * b).ok_or_else(|| {
            Error::SelfCheck(format!(
                "quantum dimension of {lam} is not a Laurent polynomial"
            ))
        })?;
    }
    let shift = den.iter().sum::<usize>() as i64 - num_abs.iter().sum::<usize>() as i64;
    let n = ring.order() as i64;
    let big_l = rs.constants().l;
    let mut hist = vec![BigInt::zero(); n as usize];
    for (k, c) in p.iter().enumerate() {
        if !c.is_zero() {
            hist[(big_l * (k as i64 + shift)).rem_euclid(n) as usize] += c;
        }
    }
    Ok(CycNum::from_exponent_histogram(ring, &hist))
}

/// Whether some positive root has `2<lam + rho, beta> = 0 mod l`, i.e. the
/// weight lies on a wall of the half-dual affine group.
pub fn qdim_zero_by_stabilizer(ctx: &AlcoveContext, lam: &Weight) -> bool {
    let rs = ctx.root_system();
    let shifted = lam + rs.rho();
    let l = ctx.l() as i64;
    rs.positive_roots()
        .iter()
        .any(|b| (2 * b.pairing(&shifted)).rem_euclid(l) == 0)
}

/// Exact check of `qdim(g . lam) = sign(g) qdim(lam)`.
pub fn qdim_sign_law_check(ctx: &AlcoveContext, lam: &Weight, g: &AffineGenerator) -> Result<bool> {
    let (img, sign) = ctx.apply_generator(g, lam)?;
    let lhs = qdim(ctx, &img)?;
    let rhs = qdim(ctx, lam)?.scale(&BigInt::from(sign));
    Ok(lhs == rhs)
}

/// The affine generators plus the translation by `l' theta0^vee`-type
/// elements of `M` used by the sign-law checks.
pub fn sign_law_generators(ctx: &AlcoveContext) -> Vec<AffineGenerator> {
    let mut gens = ctx.reflection_generators();
    let theta0 = &ctx.theta0().weight;
    let lp = ctx.l_prime() as i64;
    let t = if ctx.d_divides() {
        theta0.scale(lp / ctx.theta0().half_norm)
    } else {
        theta0.scale(lp)
    };
    gens.push(AffineGenerator::Translation(t));
    gens.extend(
        ctx.m_generators()
            .iter()
            .cloned()
            .map(AffineGenerator::Translation),
    );
    gens
}

/// Ribbon twist `q^{<lam, lam + 2 rho>} = s^{L <lam, lam + 2 rho>}`.
pub fn twist(ctx: &AlcoveContext, lam: &Weight) -> Result<CycNum> {
    let rs = ctx.root_system();
    rs.check_rank(lam)?;
    let two_rho = rs.rho().scale(2);
    let e = rs.inner_product_l(lam, &(lam + &two_rho))?;
    Ok(CycNum::s_power(ctx.ring(), e))
}

/// Whether the S-matrix of this context fits in [`S_MATRIX_BUDGET`].
pub fn s_matrix_within_budget(ctx: &AlcoveContext, alcove_len: usize) -> bool {
    let n = alcove_len as u128;
    ctx.root_system().weyl_group_order().saturating_mul(n * n) <= S_MATRIX_BUDGET
}

/// Unnormalized `S_{lam,gam} = sum_w (-1)^w q^{2 <lam + rho, w(gam + rho)>}`,
/// rows and columns in alcove order.
pub fn s_matrix(ctx: &AlcoveContext) -> Result<Vec<Vec<CycNum>>> {
    let alcove = ctx.alcove_weights();
    if !s_matrix_within_budget(ctx, alcove.len()) {
        return Err(Error::NotApplicable(format!(
            "S-matrix of {} at l={} exceeds the work budget",
            ctx.root_system().lie_type(),
            ctx.l()
        )));
    }
    let s = s_matrix_for(ctx, &alcove);
    let n = alcove.len();
    for i in 0..n {
        for j in 0..i {
            if s[i][j] != s[j][i] {
                return Err(Error::SelfCheck(format!(
                    "S-matrix is not symmetric at ({}, {})",
                    alcove[i], alcove[j]
                )));
            }
        }
    }
    if s[0][0].is_zero() {
        return Err(Error::SelfCheck("S_00 vanishes".into()));
    }
    for (i, lam) in alcove.iter().enumerate() {
        if s[i][0] != &qdim(ctx, lam)? * &s[0][0] {
            return Err(Error::SelfCheck(format!(
                "S_(lam,0) != qdim(lam) S_00 at {lam}"
            )));
        }
    }
    Ok(s)
}

fn s_matrix_for(ctx: &AlcoveContext, alcove: &[Weight]) -> Vec<Vec<CycNum>> {
    let rs = ctx.root_system();
    let ring = ctx.ring();
    let n = ring.order() as i64;
    let shifted: Vec<Weight> = alcove.iter().map(|w| w + rs.rho()).collect();
    let rows: Vec<Vec<i64>> = shifted.iter().map(|w| rs.gram_vector(w)).collect();
    let columns: Vec<Vec<CycNum>> = shifted
        .par_iter()
        .map(|g| {
            let mut hist = vec![vec![0i64; n as usize]; alcove.len()];
            for_each_orbit_element(rs, g, |wg, sign| {
                for (h, gv) in hist.iter_mut().zip(&rows) {
                    let e = 2 * wg.dot(gv);
                    h[e.rem_euclid(n) as usize] += sign;
                }
            });
            hist.iter()
                .map(|h| CycNum::from_exponent_histogram(ring, h))
                .collect()
        })
        .collect();
    // columns[j][i] = S_{i,j}
    (0..alcove.len())
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

/// Quantum dimensions, S-matrix and twists over the alcove.
#[derive(Debug, Clone, Serialize)]
pub struct ModularData {
    pub alcove: Vec<Weight>,
    pub qdims: Vec<CycNum>,
    pub smatrix: Vec<Vec<CycNum>>,
    pub twists: Vec<CycNum>,
}

impl ModularData {
    pub fn compute(ctx: &AlcoveContext) -> Result<ModularData> {
        let alcove = ctx.alcove_weights();
        let qdims = alcove
            .iter()
            .map(|w| qdim(ctx, w))
            .collect::<Result<Vec<_>>>()?;
        let twists = alcove
            .iter()
            .map(|w| twist(ctx, w))
            .collect::<Result<Vec<_>>>()?;
        let smatrix = s_matrix(ctx)?;
        Ok(ModularData {
            alcove,
            qdims,
            smatrix,
            twists,
        })
    }
}

/// Numeric Verlinde check: each `N_lam` has the S-matrix columns as
/// eigenvectors with eigenvalues `S_{lam,gam} / S_{0,gam}`. Returns the
/// largest relative residual over all `lam` and columns.
pub fn verlinde_residual(
    engine: &FusionEngine,
    smatrix: &[Vec<CycNum>],
    residue: i64,
) -> Result<f64> {
    let n = smatrix.len();
    let mut s: Vec<Vec<Complex64>> = smatrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.embed_numeric(residue))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let scale = s.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::SelfCheck("S-matrix embeds to zero".into()));
    }
    for z in s.iter_mut().flatten() {
        *z /= scale;
    }
    let alcove = engine.alcove().to_vec();
    let residuals: Vec<f64> = alcove
        .par_iter()
        .enumerate()
        .map(|(li, lam)| -> Result<f64> {
            let nmat = engine.fusion_matrix(lam)?;
            let mut worst = 0.0f64;
            for g in 0..n {
                let eig = s[li][g] / s[0][g];
                let col: Vec<Complex64> = (0..n).map(|k| s[k][g]).collect();
                let col_norm = col.iter().map(|z| z.norm()).fold(0.0, f64::max);
                for a in 0..n {
                    let lhs: Complex64 = (0..n).map(|b| col[b] * nmat[a][b] as f64).sum();
                    let err = (lhs - eig * col[a]).norm() / (col_norm * eig.norm().max(1.0));
                    worst = worst.max(err);
                }
            }
            Ok(worst)
        })
        .collect::<Result<_>>()?;
    Ok(residuals.into_iter().fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "MODULAR")]
    Modular,
    #[serde(rename = "QUOTIENT_EXISTS")]
    QuotientExists,
    #[serde(rename = "NO_QUOTIENT")]
    NoQuotient,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Modular => "MODULAR",
            Verdict::QuotientExists => "QUOTIENT_EXISTS",
            Verdict::NoQuotient => "NO_QUOTIENT",
        })
    }
}

/// A transparent simple object with its exact data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransparentObject {
    pub weight: Weight,
    /// `+1` or `-1`.
    pub qdim_sign: i64,
    pub qdim: CycNum,
    pub twist: CycNum,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModularityReport {
    pub lie_type: String,
    pub l: u64,
    pub l_prime: u64,
    pub verdict: Verdict,
    pub transparent_objects: Vec<TransparentObject>,
    pub isometry_group_order: usize,
    /// Whether the S-matrix row-proportionality cross-check ran.
    pub s_matrix_checked: bool,
    pub notes: Vec<String>,
}

/// Alcove permutations induced by the isometries, and the orbit of every index
/// under the group they generate.
fn isometry_orbits(ctx: &AlcoveContext, alcove: &[Weight]) -> Result<Vec<Vec<usize>>> {
    let rs = ctx.root_system();
    let index: HashMap<&Weight, usize> = alcove.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut perms = Vec::new();
    for iso in isometries(ctx)? {
        let perm = alcove
            .iter()
            .map(|w| index.get(&iso.apply(rs, w)).copied())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::SelfCheck(format!(
                    "isometry at node {} leaves the alcove",
                    iso.node + 1
                ))
            })?;
        perms.push(perm);
    }
    let mut orbits = Vec::with_capacity(alcove.len());
    for start in 0..alcove.len() {
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for p in &perms {
                if !orbit.contains(&p[x]) {
                    orbit.push(p[x]);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Images of the zero weight under the isometry group, excluding zero itself.
pub fn transparent_objects(ctx: &AlcoveContext) -> Result<Vec<TransparentObject>> {
    let alcove = ctx.alcove_weights();
    let orbits = isometry_orbits(ctx, &alcove)?;
    let mut out = Vec::new();
    for &k in &orbits[0] {
        let w = &alcove[k];
        let q = qdim(ctx, w)?;
        let qdim_sign = if q.is_one() {
            1
        } else if (-&q).is_one() {
            -1
        } else {
            return Err(Error::SelfCheck(format!(
                "transparent object {w} has quantum dimension {q}, not +1 or -1"
            )));
        };
        out.push(TransparentObject {
            weight: w.clone(),
            qdim_sign,
            qdim: q,
            twist: twist(ctx, w)?,
        });
    }
    Ok(out)
}

/// Partition of row indices into classes of exactly proportional rows.
pub fn proportionality_classes(s: &[Vec<CycNum>], residue: i64) -> Result<Vec<Vec<usize>>> {
    let n = s.len();
    let num: Vec<Vec<Complex64>> = s
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.embed_numeric(residue))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[a] = id;
        let mut members = vec![a];
        let pivot = (0..n).find(|&j| !s[a][j].is_zero());
        for b in a + 1..n {
            if class_of[b] != usize::MAX {
                continue;
            }
            let Some(p) = pivot else { continue };
            // cheap numeric screen, then the exact 2x2 minors against the pivot column
            let looks = (0..n).all(|j| {
                let d = num[a][j] * num[b][p] - num[a][p] * num[b][j];
                d.norm() <= 1e-6 * (1.0 + (num[a][j] * num[b][p]).norm())
            });
            if !looks {
                continue;
            }
            let exact = (0..n).all(|j| &s[a][j] * &s[b][p] == &s[a][p] * &s[b][j]);
            if exact && !s[b][p].is_zero() {
                class_of[b] = id;
                members.push(b);
            }
        }
        classes.push(members);
    }
    Ok(classes)
}

pub fn classify(ctx: &AlcoveContext) -> Result<ModularityReport> {
    let alcove = ctx.alcove_weights();
    let quotient = half_dual_quotient(ctx)?;
    let transparent = transparent_objects(ctx)?;
    let mut notes = Vec::new();

    let verdict = if transparent.len() == 1 {
        Verdict::Modular
    } else if transparent.iter().any(|t| t.qdim_sign == -1) {
        Verdict::NoQuotient
    } else {
        Verdict::QuotientExists
    };
    if verdict == Verdict::QuotientExists {
        notes.push(
            "transparent objects all have quantum dimension +1; whether the quotient is modular or spin modular is left to their twists"
                .into(),
        );
    }

    let s_matrix_checked = s_matrix_within_budget(ctx, alcove.len());
    if s_matrix_checked {
        let s = s_matrix(ctx)?;
        let mut classes = proportionality_classes(&s, 1)?;
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        let orbits = isometry_orbits(ctx, &alcove)?;
        for (i, c) in classes.iter().enumerate() {
            for &k in c {
                if orbits[k] != *c {
                    return Err(Error::SelfCheck(format!(
                        "S-matrix row class {i} {:?} differs from the isometry orbit of {}",
                        c.iter().map(|&x| alcove[x].to_string()).collect::<Vec<_>>(),
                        alcove[k]
                    )));
                }
            }
        }
        notes.push(format!(
            "S-matrix row proportionality matches the isometry orbits ({} classes over {} weights)",
            classes.len(),
            alcove.len()
        ));
    } else {
        notes.push(format!(
            "S-matrix cross-check skipped: |W| * |alcove|^2 exceeds {S_MATRIX_BUDGET}"
        ));
    }

    Ok(ModularityReport {
        lie_type: ctx.root_system().lie_type().to_string(),
        l: ctx.l(),
        l_prime: ctx.l_prime(),
        verdict,
        transparent_objects: transparent,
        isometry_group_order: quotient.order(),
        s_matrix_checked,
        notes,
    })
}
