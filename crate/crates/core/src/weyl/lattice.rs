//! The lattice `(l/2) coroot lattice ∩ weight lattice` modulo `M`, and the
//! alcove isometries it induces.
//!
//! Elements of `(l/2) coroot lattice` are written as integer vectors `c` with
//! `x = (l/2) sum_j c_j alpha_j^vee`. In these coordinates `M` is the product
//! lattice `prod m_j Z`, which makes the quotient a box enumeration.

use serde::Serialize;

use super::orbit::{apply_word, to_dominant_with_word};
use super::AlcoveContext;
use crate::error::{Error, Result};
use crate::rootdata::{LieType, RootSystem, Series};
use crate::weight::Weight;

/// The finite group `X / M` with `X = (l/2) coroot lattice ∩ weight lattice`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfDualQuotient {
    /// `M` is `prod moduli_j Z` in `c` coordinates.
    pub moduli: Vec<i64>,
    /// One representative per coset, in `c` coordinates, inside the box `[0, m_j)`.
    pub elements: Vec<Vec<i64>>,
    /// 0-based nodes `i` whose translations `l' lambda_i` represent the
    /// non-trivial cosets.
    pub nodes: Vec<usize>,
}

impl HalfDualQuotient {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Whether `c` (in `c` coordinates) gives a weight.
fn in_weight_lattice(rs: &RootSystem, l: i64, c: &[i64]) -> bool {
    let a = rs.cartan();
    let big_d = rs.constants().d;
    let d = rs.d();
    (0..rs.rank()).all(|i| {
        // (l/2) sum_j c_j A_ji / d_j, times 2D
        let s: i64 = (0..rs.rank())
            .map(|j| c[j] * a[j][i] * (big_d / d[j]))
            .sum();
        (l * s) % (2 * big_d) == 0
    })
}

fn moduli(ctx: &AlcoveContext) -> Vec<i64> {
    let l = ctx.l() as i64;
    let lp = ctx.l_prime() as i64;
    let rs = ctx.root_system();
    rs.d()
        .iter()
        .map(|&dj| {
            if ctx.d_divides() {
                2 * lp / l
            } else {
                2 * lp / l * dj
            }
        })
        .collect()
}

/// `c` coordinates of `l' lambda_i`, when they are integral.
fn translation_coords(ctx: &AlcoveContext, i: usize) -> Option<Vec<i64>> {
    let rs = ctx.root_system();
    let scale = 2 * ctx.l_prime() as i128;
    let l = ctx.l() as i128;
    rs.simple_coroot_coords_q(&rs.fundamental_weight(i))
        .into_iter()
        .map(|q| {
            let x = q * scale;
            (x.is_integer() && x.to_integer() % l == 0).then(|| (x.to_integer() / l) as i64)
        })
        .collect()
}

/// Enumerate `X / M` and pick the alcove-vertex translations that represent it.
pub fn half_dual_quotient(ctx: &AlcoveContext) -> Result<HalfDualQuotient> {
    let rs = ctx.root_system();
    let r = rs.rank();
    let l = ctx.l() as i64;
    let m = moduli(ctx);

    let mut elements = Vec::new();
    let mut c = vec![0i64; r];
    loop {
        if in_weight_lattice(rs, l, &c) {
            elements.push(c.clone());
        }
        let mut k = 0;
        while k < r {
            c[k] += 1;
            if c[k] < m[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }

    let reduce =
        |v: &[i64]| -> Vec<i64> { v.iter().zip(&m).map(|(x, mj)| x.rem_euclid(*mj)).collect() };
    let mut nodes = Vec::new();
    let mut cosets: Vec<Vec<i64>> = Vec::new();
    let zero = vec![0i64; r];
    for i in 0..r {
        if ctx.theta0().pairing(&rs.fundamental_weight(i)) != 1 {
            continue;
        }
        let Some(ci) = translation_coords(ctx, i) else {
            continue;
        };
        if !in_weight_lattice(rs, l, &ci) {
            continue;
        }
        let key = reduce(&ci);
        if key == zero || cosets.contains(&key) {
            continue;
        }
        cosets.push(key);
        nodes.push(i);
    }

    // the chosen cosets must generate the whole quotient
    let mut span = vec![zero.clone()];
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in &cosets {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            let y = reduce(&y);
            if !span.contains(&y) {
                span.push(y.clone());
                frontier.push(y);
            }
        }
    }
    if span.len() != elements.len() {
        return Err(Error::SelfCheck(format!(
            "{} at l={}: alcove vertices generate {} of the {} lattice classes",
            rs.lie_type(),
            l,
            span.len(),
            elements.len()
        )));
    }
    Ok(HalfDualQuotient {
        moduli: m,
        elements,
        nodes,
    })
}

/// Generators `l' lambda_i` of `X / M`; empty when `X = M`.
pub fn weight_translations_in_half_dual_lattice(ctx: &AlcoveContext) -> Result<Vec<Weight>> {
    let q = half_dual_quotient(ctx)?;
    let lp = ctx.l_prime() as i64;
    Ok(q.nodes
        .iter()
        .map(|&i| ctx.root_system().fundamental_weight(i).scale(lp))
        .collect())
}

/// The standard catalogue of extra alcove symmetries: 0-based nodes `i` for
/// which `l' lambda_i` is listed, given the type, the order `l` and whether
/// `D` divides `l'`.
pub fn catalogued_symmetry_nodes(t: LieType, l: u64, d_divides: bool) -> Vec<usize> {
    let n = t.rank();
    let odd = l % 2 == 1;
    match (t.series(), odd) {
        (Series::A, true) if n % 2 == 1 => vec![(n + 1) / 2 - 1],
        (Series::B, true) if n % 2 == 0 => vec![n - 1],
        (Series::C, true) => vec![0],
        (Series::D, true) if n % 2 == 1 => vec![0],
        (Series::D, true) => vec![0, n - 2, n - 1],
        (Series::E, true) if n == 7 => vec![6],
        (Series::B, false) if !d_divides && n % 2 == 1 => vec![n - 1],
        (Series::C, false) if !d_divides => vec![0],
        _ => Vec::new(),
    }
}

/// An alcove symmetry `gamma -> sigma(gamma + rho) - rho + l' lambda_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isometry {
    /// 0-based node `i`.
    pub node: usize,
    pub translation: Weight,
    /// `sigma` as 0-based letters, applied rightmost first.
    pub sigma: Vec<usize>,
}

impl Isometry {
    /// Build the isometry attached to node `i`. `sigma` sends `alpha_i` to
    /// `-theta0` and permutes the other simple roots; it is found by folding
    /// the weight pairing to 1 with every extended simple coroot except `i`.
    pub fn for_node(ctx: &AlcoveContext, i: usize) -> Result<Isometry> {
        let rs = ctx.root_system();
        let r = rs.rank();
        let co = &ctx.theta0().coroot_coords;
        let rest: i64 = (0..r).filter(|&j| j != i).map(|j| co[j]).sum();
        if (-1 - rest) % co[i] != 0 {
            return Err(Error::SelfCheck(format!(
                "node {} of {} is not an alcove vertex",
                i + 1,
                rs.lie_type()
            )));
        }
        let mut x = Weight::new(vec![1; r]);
        x.coords_mut()[i] = (-1 - rest) / co[i];
        let sigma = to_dominant_with_word(rs, &mut x);

        let fail = |what: &str| {
            Err(Error::SelfCheck(format!(
                "{} node {}: {what}",
                rs.lie_type(),
                i + 1
            )))
        };
        if sigma.len() > rs.positive_roots().len() {
            return fail("Weyl word longer than the longest element");
        }
        let mut img = rs.simple_root(i).clone();
        apply_word(rs, &sigma, &mut img);
        if img != -&ctx.theta0().weight {
            return fail("sigma does not send alpha_i to -theta0");
        }
        let mut hit = vec![false; r];
        for j in (0..r).filter(|&j| j != i) {
            let mut img = rs.simple_root(j).clone();
            apply_word(rs, &sigma, &mut img);
            match rs.simple_roots().iter().position(|a| *a == img) {
                Some(k) if !hit[k] => hit[k] = true,
                _ => return fail("sigma does not permute the other simple roots"),
            }
        }
        Ok(Isometry {
            node: i,
            translation: rs.fundamental_weight(i).scale(ctx.l_prime() as i64),
            sigma,
        })
    }

    /// Image of `gamma` under the isometry.
    pub fn apply(&self, rs: &RootSystem, gamma: &Weight) -> Weight {
        let mut v = gamma + rs.rho();
        apply_word(rs, &self.sigma, &mut v);
        v += &self.translation;
        v -= rs.rho();
        v
    }
}

/// Isometries for every generator of `X / M`.
pub fn isometries(ctx: &AlcoveContext) -> Result<Vec<Isometry>> {
    half_dual_quotient(ctx)?
        .nodes
        .iter()
        .map(|&i| Isometry::for_node(ctx, i))
        .collect()
}

/// For `beta^vee` in the coroot lattice with coordinates in `[-radius, radius]`,
/// check that `(l/2) beta^vee` in the root lattice implies it lies in `M`.
pub fn check_weyl_dagger_restriction(ctx: &AlcoveContext, radius: i64) -> bool {
    dagger_restriction_holds(ctx.root_system(), ctx.l(), radius)
}

/// Same check as [`check_weyl_dagger_restriction`], from the order `l` alone.
/// The lattice statement does not need the alcove to be large enough, so
/// orders below the validity bound are accepted here.
pub fn dagger_restriction_holds(rs: &RootSystem, l: u64, radius: i64) -> bool {
    let r = rs.rank();
    let lp = if l % 2 == 0 { l / 2 } else { l } as i64;
    let d_divides = lp % rs.constants().d == 0;
    let l = l as i64;
    let d = rs.d();
    let mut c = vec![-radius; r];
    loop {
        // root coordinates of (l/2) sum c_j alpha_j^vee are l c_j / (2 d_j)
        let in_root_lattice = (0..r).all(|j| (l * c[j]) % (2 * d[j]) == 0);
        if in_root_lattice {
            let in_m = (0..r).all(|j| {
                if d_divides {
                    (l * c[j]) % (2 * lp) == 0
                } else {
                    (l * c[j]) % (2 * lp * d[j]) == 0
                }
            });
            if !in_m {
                return false;
            }
        }
        let mut k = 0;
        while k < r {
            c[k] += 1;
            if c[k] <= radius {
                break;
            }
            c[k] = -radius;
            k += 1;
        }
        if k == r {
            return true;
        }
    }
}
