//! Affine Weyl group actions at a root of unity: the alcove, the folding
//! algorithm with its parity sign, and linkage classes.

mod lattice;
pub mod orbit;

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::cyclotomic::CycRing;
use crate::error::{Error, Result};
use crate::rootdata::{Root, RootSystem};
use crate::weight::Weight;

pub use lattice::{
    catalogued_symmetry_nodes, check_weyl_dagger_restriction, dagger_restriction_holds,
    half_dual_quotient, isometries, weight_translations_in_half_dual_lattice, HalfDualQuotient,
    Isometry,
};

/// Hard cap on folding steps; exceeding it means a bug, not bad input.
pub const FOLD_STEP_CAP: u64 = 1_000_000;

/// A root system together with an order `l` of the root of unity.
#[derive(Debug, Clone)]
pub struct AlcoveContext {
    rs: Arc<RootSystem>,
    l: u64,
    l_prime: u64,
    l_i: Vec<u64>,
    l_i_prime: Vec<u64>,
    d_divides: bool,
    theta0: Root,
    /// `l' / d_theta0`, the upper wall as a coroot pairing.
    upper: i64,
    m_generators: Vec<Weight>,
    ring: Arc<CycRing>,
}

/// Result of folding a weight into the alcove.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldResult {
    /// Closed-alcove representative of the dot-orbit.
    pub rep: Weight,
    /// `(-1)^reflections`, or 0 on a wall.
    pub sign: i64,
    pub reflections: u64,
}

/// Generators of the affine Weyl group in its dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineGenerator {
    /// Simple reflection, 0-based index.
    Simple(usize),
    /// Reflection in the upper wall of the alcove.
    Affine,
    /// Translation by an element of `M`.
    Translation(Weight),
}

fn halve_if_even(x: u64) -> u64 {
    if x % 2 == 0 {
        x / 2
    } else {
        x
    }
}

pub fn make_context(rs: impl Into<Arc<RootSystem>>, l: u64) -> Result<AlcoveContext> {
    let rs: Arc<RootSystem> = rs.into();
    if l == 0 {
        return Err(Error::InvalidContext {
            l,
            l_prime: 0,
            bound: "l >= 1".into(),
        });
    }
    let c = rs.constants();
    let big_d = c.d as u64;
    let l_prime = halve_if_even(l);
    let l_i: Vec<u64> = rs.d().iter().map(|&d| l / l.gcd(&(d as u64))).collect();
    let l_i_prime = l_i.iter().map(|&x| halve_if_even(x)).collect();
    let d_divides = l_prime % big_d == 0;

    if d_divides {
        if l_prime < big_d * c.hv as u64 {
            return Err(Error::InvalidContext {
                l,
                l_prime,
                bound: format!(
                    "l' >= D*hv = {} since D = {} divides l'",
                    big_d * c.hv as u64,
                    big_d
                ),
            });
        }
    } else if l_prime <= c.h as u64 {
        return Err(Error::InvalidContext {
            l,
            l_prime,
            bound: format!("l' > h = {} since D = {} does not divide l'", c.h, big_d),
        });
    }

    let theta0 = if d_divides {
        rs.theta().clone()
    } else {
        rs.phi().clone()
    };
    let upper = l_prime as i64 / theta0.half_norm;
    let lp = l_prime as i64;
    let m_generators = (0..rs.rank())
        .map(|i| {
            if d_divides {
                // l' * alpha_i^vee = (l' / d_i) alpha_i
                rs.simple_root(i).scale(lp / rs.d()[i])
            } else {
                rs.simple_root(i).scale(lp)
            }
        })
        .collect();
    let ring = CycRing::new(l * c.l as u64);
    Ok(AlcoveContext {
        rs,
        l,
        l_prime,
        l_i,
        l_i_prime,
        d_divides,
        theta0,
        upper,
        m_generators,
        ring,
    })
}

impl AlcoveContext {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn l_prime(&self) -> u64 {
        self.l_prime
    }

    pub fn l_i(&self) -> &[u64] {
        &self.l_i
    }

    pub fn l_i_prime(&self) -> &[u64] {
        &self.l_i_prime
    }

    /// Whether `D` divides `l'`.
    pub fn d_divides(&self) -> bool {
        self.d_divides
    }

    /// `theta` when `D | l'`, else the highest short root.
    pub fn theta0(&self) -> &Root {
        &self.theta0
    }

    pub fn m_generators(&self) -> &[Weight] {
        &self.m_generators
    }

    /// The cyclotomic ring of order `l L`.
    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    /// `<v, theta0>` with the actual inner product, for `v` already shifted by rho.
    pub fn upper_pairing(&self, v: &Weight) -> i64 {
        self.theta0.pairing(v)
    }

    /// True when `lam` is dominant and strictly inside the alcove.
    pub fn in_alcove(&self, lam: &Weight) -> bool {
        lam.rank() == self.rs.rank()
            && lam.is_dominant()
            && self.theta0.coroot_pairing(&(lam + self.rs.rho())) < self.upper
    }

    pub fn check_alcove(&self, lam: &Weight) -> Result<()> {
        self.rs.check_rank(lam)?;
        if !self.in_alcove(lam) {
            return Err(Error::OutsideAlcove(lam.to_string()));
        }
        Ok(())
    }

    /// All weights of the alcove, ordered by `<lam + rho, theta0>` and then
    /// lexicographically, so the zero weight comes first.
    pub fn alcove_weights(&self) -> Vec<Weight> {
        let r = self.rs.rank();
        let co = &self.theta0.coroot_coords;
        let mut out = Vec::new();
        let mut cur = vec![0i64; r];
        // sum_i co_i (lam_i + 1) < upper
        let base: i64 = co.iter().sum();
        fn rec(i: usize, budget: i64, co: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == co.len() {
                out.push(Weight::new(cur.clone()));
                return;
            }
            let mut k = 0;
            while co[i] * k < budget {
                cur[i] = k;
                rec(i + 1, budget - co[i] * k, co, cur, out);
                k += 1;
            }
            cur[i] = 0;
        }
        if base < self.upper {
            // budget counts the slack above rho
            rec(0, self.upper - base, co, &mut cur, &mut out);
        }
        let rho = self.rs.rho();
        out.sort_by_cached_key(|w| (self.upper_pairing(&(w + rho)), w.clone()));
        out
    }

    /// Whether `t` lies in the translation lattice `M`.
    pub fn in_translation_lattice(&self, t: &Weight) -> bool {
        let lp = self.l_prime as i128;
        let coords = if self.d_divides {
            self.rs.simple_coroot_coords_q(t)
        } else {
            self.rs.simple_root_coords_q(t)
        };
        coords
            .iter()
            .all(|q| q.is_integer() && q.to_integer() % lp == 0)
    }

    /// Reflection of a shifted weight in the upper wall:
    /// `v - (<v, theta0^vee> - l'/d_theta0) theta0`.
    fn affine_reflect(&self, v: &mut Weight) {
        let k = self.theta0.coroot_pairing(v) - self.upper;
        v.add_scaled(-k, &self.theta0.weight);
    }

    /// Dot action of `w(v) + t`, where `word` lists simple reflections with
    /// 1-based letters, applied rightmost first.
    pub fn dot_action(&self, word: &[usize], translation: &Weight, lam: &Weight) -> Result<Weight> {
        self.rs.check_rank(lam)?;
        self.rs.check_rank(translation)?;
        let r = self.rs.rank();
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > r) {
            return Err(Error::MalformedWord(format!(
                "letter {bad} is outside 1..={r}"
            )));
        }
        if !self.in_translation_lattice(translation) {
            return Err(Error::NotInTranslationLattice(translation.to_string()));
        }
        let rho = self.rs.rho();
        let mut v = lam + rho;
        for &i in word.iter().rev() {
            self.rs.reflect(&mut v, i - 1);
        }
        v += translation;
        v -= rho;
        Ok(v)
    }

    /// Apply one affine generator in the dot action. Returns the image and the
    /// sign of the generator.
    pub fn apply_generator(&self, g: &AffineGenerator, lam: &Weight) -> Result<(Weight, i64)> {
        self.rs.check_rank(lam)?;
        let rho = self.rs.rho();
        let mut v = lam + rho;
        let sign = match g {
            AffineGenerator::Simple(i) => {
                if *i >= self.rs.rank() {
                    return Err(Error::MalformedWord(format!("letter {}", i + 1)));
                }
                self.rs.reflect(&mut v, *i);
                -1
            }
            AffineGenerator::Affine => {
                self.affine_reflect(&mut v);
                -1
            }
            AffineGenerator::Translation(t) => {
                self.rs.check_rank(t)?;
                if !self.in_translation_lattice(t) {
                    return Err(Error::NotInTranslationLattice(t.to_string()));
                }
                v += t;
                1
            }
        };
        v -= rho;
        Ok((v, sign))
    }

    /// Simple reflections and the upper-wall reflection.
    pub fn reflection_generators(&self) -> Vec<AffineGenerator> {
        (0..self.rs.rank())
            .map(AffineGenerator::Simple)
            .chain(std::iter::once(AffineGenerator::Affine))
            .collect()
    }

    /// Fold `lam` into the closed alcove under the dot action of the affine Weyl group.
    pub fn fold(&self, lam: &Weight) -> Result<FoldResult> {
        self.rs.check_rank(lam)?;
        let mut v = lam + self.rs.rho();
        let mut count = 0u64;
        loop {
            if count > FOLD_STEP_CAP {
                return Err(Error::SelfCheck(format!(
                    "folding {lam} exceeded {FOLD_STEP_CAP} steps"
                )));
            }
            if let Some(i) = v.coords().iter().position(|&c| c < 0) {
                self.rs.reflect(&mut v, i);
            } else if self.theta0.coroot_pairing(&v) > self.upper {
                self.affine_reflect(&mut v);
            } else {
                break;
            }
            count += 1;
        }
        let on_wall =
            v.coords().iter().any(|&c| c == 0) || self.theta0.coroot_pairing(&v) == self.upper;
        let sign = if on_wall {
            0
        } else if count % 2 == 0 {
            1
        } else {
            -1
        };
        v -= self.rs.rho();
        Ok(FoldResult {
            rep: v,
            sign,
            reflections: count,
        })
    }

    /// Whether two weights lie in the same dot-orbit of the affine Weyl group.
    /// Wall weights are compared through their closed-alcove representatives.
    pub fn linked(&self, lam: &Weight, gam: &Weight) -> Result<bool> {
        Ok(self.fold(lam)?.rep == self.fold(gam)?.rep)
    }
}
