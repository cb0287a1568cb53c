//! Root data for the simple Lie types `A_n` through `G_2`.
//!
//! Conventions: the invariant form is normalized so that short roots have
//! squared length 2, so long roots have squared length `2D`. Weights are
//! stored in the fundamental-weight basis, which makes the pairing with a
//! simple coroot a plain coordinate read. Nodes are labeled as in Bourbaki.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::Weight;

/// Largest rank accepted by [`build_root_system`] unless overridden.
pub const DEFAULT_MAX_RANK: usize = 12;

type Q = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple Lie type such as `A2` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            // D2 is A1 x A1, which is not simple.
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InadmissibleType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type with `rank <= max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "Lie type",
            input: s.to_string(),
        };
        let mut chars = s.trim().chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(err)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let rank = digits.parse().map_err(|_| err())?;
        LieType::new(series, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The scalar constants `L`, `D`, `h` and the dual Coxeter number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub l: i64,
    pub d: i64,
    pub h: i64,
    pub hv: i64,
}

/// Reference values of `(L, D, h, hv)`, one column per family.
pub fn tabulated_constants(t: LieType) -> Constants {
    let m = t.rank() as i64;
    let (l, d, h, hv) = match t.series() {
        Series::A => {
            let n = m;
            (n + 1, 1, n + 1, n + 1)
        }
        Series::B if m % 2 == 1 => {
            let n = (m - 1) / 2;
            (2, 2, 4 * n + 2, 4 * n + 1)
        }
        Series::B => {
            let n = m / 2;
            (1, 2, 4 * n, 4 * n - 1)
        }
        Series::C => {
            let n = m;
            (1, 2, 2 * n, n + 1)
        }
        Series::D if m % 2 == 0 => {
            let n = m / 2;
            (2, 1, 4 * n - 2, 4 * n - 2)
        }
        Series::D => {
            let n = (m - 1) / 2;
            (4, 1, 4 * n, 4 * n)
        }
        Series::E => match m {
            6 => (3, 1, 12, 12),
            7 => (2, 1, 18, 18),
            _ => (1, 1, 30, 30),
        },
        Series::F => (1, 2, 12, 9),
        Series::G => (1, 3, 6, 4),
    };
    Constants { l, d, h, hv }
}

/// A positive root with its precomputed pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub simple_coords: Vec<i64>,
    /// Coordinates in the fundamental-weight basis, i.e. `<beta, alpha_i^vee>`.
    pub weight: Weight,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot_coords: Vec<i64>,
    /// `<beta, beta> / 2`: 1 for short roots, `D` for long ones.
    pub half_norm: i64,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }

    /// `<lam, beta^vee>`.
    pub fn coroot_pairing(&self, lam: &Weight) -> i64 {
        lam.dot(&self.coroot_coords)
    }

    /// `<lam, beta>`, always an integer.
    pub fn pairing(&self, lam: &Weight) -> i64 {
        self.half_norm * self.coroot_pairing(lam)
    }

    pub fn is_long(&self) -> bool {
        self.half_norm > 1
    }
}

/// Immutable root data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`; row `i` is `alpha_i` in the
    /// fundamental-weight basis.
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    d: Vec<i64>,
    /// `L * <lambda_i, lambda_j>`.
    gram_l: Vec<Vec<i64>>,
    /// Inverse Cartan matrix, used to move weights into the root basis.
    cartan_inv: Vec<Vec<Q>>,
    constants: Constants,
    rho: Weight,
    theta: usize,
    phi: usize,
    root_index: HashMap<Weight, usize>,
}

/// Build options for [`build_root_system_with`].
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_rank: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

pub fn build_root_system(t: LieType) -> Result<RootSystem> {
    build_root_system_with(t, BuildOptions::default())
}

pub fn build_root_system_with(t: LieType, opts: BuildOptions) -> Result<RootSystem> {
    if t.rank() > opts.max_rank {
        return Err(Error::RankCeiling {
            rank: t.rank(),
            ceiling: opts.max_rank,
        });
    }
    let r = t.rank();
    let cartan = cartan_matrix(t);
    let d = symmetrizer(&cartan)?;
    let cartan_inv = invert(&cartan)?;

    // <lambda_i, lambda_j> = (A^-1)_{ji} d_i
    let gram: Vec<Vec<Q>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| cartan_inv[j][i] * Q::from_integer(d[i] as i128))
                .collect()
        })
        .collect();
    let l_scale = gram
        .iter()
        .flatten()
        .fold(1i128, |acc, q| acc.lcm(q.denom()));
    let gram_l: Vec<Vec<i64>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| (q * Q::from_integer(l_scale)).to_integer() as i64)
                .collect()
        })
        .collect();

    let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight::new(row.clone())).collect();
    let positive_roots = positive_roots_by_closure(&cartan, &d);

    let rho = Weight::new(vec![1; r]);
    let theta = positive_roots.len() - 1;
    let phi = positive_roots
        .iter()
        .rposition(|b| b.half_norm == 1)
        .ok_or_else(|| Error::SelfCheck(format!("{t}: no short root")))?;

    let big_d = *d.iter().max().unwrap();
    let theta_root = &positive_roots[theta];
    let phi_root = &positive_roots[phi];
    let hv = theta_root.coroot_pairing(&rho) + 1;
    let h = phi_root.coroot_pairing(&rho) + 1;
    let constants = Constants {
        l: l_scale as i64,
        d: big_d,
        h,
        hv,
    };

    let mut root_index = HashMap::new();
    for (i, b) in positive_roots.iter().enumerate() {
        root_index.insert(b.weight.clone(), i);
    }

    let rs = RootSystem {
        lie_type: t,
        cartan,
        simple_roots,
        positive_roots,
        d,
        gram_l,
        cartan_inv,
        constants,
        rho,
        theta,
        phi,
        root_index,
    };
    rs.self_check()?;
    Ok(rs)
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    /// Positive roots ordered by height, then by simple-root coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `d_i = <alpha_i, alpha_i> / 2`.
    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn gram_l(&self) -> &[Vec<i64>] {
        &self.gram_l
    }

    pub fn constants(&self) -> Constants {
        self.constants
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Highest root (long).
    pub fn theta(&self) -> &Root {
        &self.positive_roots[self.theta]
    }

    /// Highest short root.
    pub fn phi(&self) -> &Root {
        &self.positive_roots[self.phi]
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// `L <a, b>` as an integer.
    pub fn inner_product_l(&self, a: &Weight, b: &Weight) -> Result<i64> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        Ok(self.ip(a, b))
    }

    /// Unchecked `L <a, b>`.
    pub(crate) fn ip(&self, a: &Weight, b: &Weight) -> i64 {
        let mut acc = 0;
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.gram_l[i];
            acc += ai * b.dot(row);
        }
        acc
    }

    /// `gram_l * a`, so that `L <a, b> = b . gram_vector(a)`.
    pub(crate) fn gram_vector(&self, a: &Weight) -> Vec<i64> {
        let r = self.rank();
        (0..r)
            .map(|j| (0..r).map(|i| a[i] * self.gram_l[i][j]).sum())
            .collect()
    }

    /// Index of `alpha` among the positive roots, with a sign for negative roots.
    pub fn find_root(&self, alpha: &Weight) -> Option<(usize, i64)> {
        if let Some(&i) = self.root_index.get(alpha) {
            return Some((i, 1));
        }
        self.root_index.get(&-alpha).map(|&i| (i, -1))
    }

    /// `<lam, alpha^vee>` for a root `alpha` given in the weight basis.
    pub fn pairing_with_coroot(&self, lam: &Weight, alpha: &Weight) -> Result<i64> {
        self.check_rank(lam)?;
        self.check_rank(alpha)?;
        let (i, sign) = self
            .find_root(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        Ok(sign * self.positive_roots[i].coroot_pairing(lam))
    }

    /// Simple reflection `s_i` (linear action).
    pub fn reflect(&self, v: &mut Weight, i: usize) {
        let k = v[i];
        if k != 0 {
            v.add_scaled(-k, &self.simple_roots[i]);
        }
    }

    /// Coordinates of `w` in the simple-root basis, when it lies in the root lattice.
    pub fn simple_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        self.simple_root_coords_q(w)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer() as i64))
            .collect()
    }

    /// Rational coordinates of `w` in the simple-root basis.
    pub(crate) fn simple_root_coords_q(&self, w: &Weight) -> Vec<Q> {
        let r = self.rank();
        // alpha_i = sum_j A_ij lambda_j, so c = w A^{-1}.
        (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| Q::from_integer(w[i] as i128) * self.cartan_inv[i][j])
                    .fold(Q::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Rational coordinates of `w` in the simple-coroot basis.
    pub(crate) fn simple_coroot_coords_q(&self, w: &Weight) -> Vec<Q> {
        self.simple_root_coords_q(w)
            .into_iter()
            .zip(&self.d)
            .map(|(c, &d)| c * Q::from_integer(d as i128))
            .collect()
    }

    /// Dimension of the irreducible module of highest weight `lam`.
    pub fn weyl_dimension(&self, lam: &Weight) -> Result<BigInt> {
        self.check_rank(lam)?;
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam.to_string()));
        }
        let shifted = lam + &self.rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for b in &self.positive_roots {
            num *= b.coroot_pairing(&shifted);
            den *= b.coroot_pairing(&self.rho);
        }
        let (q, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::SelfCheck(format!(
                "Weyl dimension of {lam} is not an integer"
            )));
        }
        Ok(q)
    }

    /// Order of the Weyl group, `prod (ht(beta) + 1) / ht(beta)`.
    pub fn weyl_group_order(&self) -> u128 {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for b in &self.positive_roots {
            num *= b.height() + 1;
            den *= b.height();
        }
        (num / den).to_u128().unwrap_or(u128::MAX)
    }

    fn self_check(&self) -> Result<()> {
        let t = self.lie_type;
        let fail = |msg: String| Err(Error::SelfCheck(format!("{t}: {msg}")));
        let r = self.rank();
        let c = self.constants;

        if c != tabulated_constants(t) {
            return fail(format!(
                "computed constants {c:?} differ from the reference table {:?}",
                tabulated_constants(t)
            ));
        }
        if self.positive_roots.len() as i64 * 2 != r as i64 * c.h {
            return fail("|positive roots| != rank * h / 2".into());
        }
        for i in 0..r {
            for j in 0..r {
                if self.gram_l[i][j] != self.gram_l[j][i] {
                    return fail("Gram matrix is not symmetric".into());
                }
                // L <lambda_i, alpha_j> = L d_j delta_ij
                let v = self.ip(&self.fundamental_weight(i), &self.simple_roots[j]);
                let want = if i == j { c.l * self.d[j] } else { 0 };
                if v != want {
                    return fail(format!("<lambda_{}, alpha_{}> is wrong", i + 1, j + 1));
                }
            }
        }
        if !leading_minors_positive(&self.gram_l) {
            return fail("Gram matrix is not positive definite".into());
        }
        for b in &self.positive_roots {
            let norm = self.ip(&b.weight, &b.weight);
            if norm != 2 * b.half_norm * c.l || !(b.half_norm == 1 || b.half_norm == c.d) {
                return fail(format!("root {:?} has the wrong length", b.weight));
            }
        }
        if !self.theta().weight.is_dominant() || !self.phi().weight.is_dominant() {
            return fail("highest roots are not dominant".into());
        }
        if self.theta().half_norm != c.d {
            return fail("highest root is not long".into());
        }
        Ok(())
    }
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank();
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.series() {
        Series::A => (0..r - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 2, r - 1, -2, -1);
        }
        Series::C => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 2, r - 1, -1, -2);
        }
        Series::D => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 3, r - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..r - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -1, -3),
    }
    a
}

/// Half squared lengths `d_i`, normalized so the shortest is 1.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = a.len();
    let mut d: Vec<Option<Q>> = vec![None; r];
    d[0] = Some(Q::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].unwrap();
        for j in 0..r {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                // d_j a_ij = d_i a_ji
                d[j] = Some(di * Q::new(a[j][i] as i128, a[i][j] as i128));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::SelfCheck("Dynkin diagram is disconnected".into()))?;
    let min = d.iter().min().copied().unwrap();
    d.iter()
        .map(|q| {
            let x = q / min;
            x.is_integer()
                .then(|| x.to_integer() as i64)
                .ok_or_else(|| Error::SelfCheck("non-integral root length ratio".into()))
        })
        .collect()
}

fn invert(a: &[Vec<i64>]) -> Result<Vec<Vec<Q>>> {
    let r = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i128)).collect();
            v.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
            v
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .ok_or_else(|| Error::SelfCheck("singular Cartan matrix".into()))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for i in 0..r {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col];
                for j in 0..2 * r {
                    let t = m[col][j] * f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[r..].to_vec()).collect())
}

fn leading_minors_positive(g: &[Vec<i64>]) -> bool {
    let r = g.len();
    let mut m: Vec<Vec<Q>> = g
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    for k in 0..r {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..r {
            let f = m[i][k] / m[k][k];
            for j in k..r {
                let t = m[k][j] * f;
                m[i][j] -= t;
            }
        }
    }
    true
}

/// Positive roots by closure under adding simple roots, using root strings:
/// for `beta != alpha_i`, `beta + alpha_i` is a root iff `p - <beta, alpha_i^vee> > 0`
/// where `p` is the length of the downward `alpha_i`-string from `beta`.
fn positive_roots_by_closure(a: &[Vec<i64>], d: &[i64]) -> Vec<Root> {
    let r = a.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut c = vec![0; r];
            c[i] = 1;
            c
        })
        .collect();
    found.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..r {
                // <beta, alpha_i^vee> = sum_k c_k a_ki
                let pairing: i64 = (0..r).map(|k| beta[k] * a[k][i]).sum();
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if found.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }

    let mut roots: Vec<Root> = found
        .into_iter()
        .map(|c| {
            let weight = Weight::new(
                (0..r)
                    .map(|i| (0..r).map(|k| c[k] * a[k][i]).sum())
                    .collect(),
            );
            // <beta, beta> = sum c_i c_j d_j a_ij
            let mut norm = 0;
            for i in 0..r {
                for j in 0..r {
                    norm += c[i] * c[j] * d[j] * a[i][j];
                }
            }
            let half_norm = norm / 2;
            let coroot_coords = (0..r).map(|k| c[k] * d[k] / half_norm).collect();
            Root {
                simple_coords: c,
                weight,
                coroot_coords,
                half_norm,
            }
        })
        .collect();
    roots.sort_by(|x, y| {
        x.height()
            .cmp(&y.height())
            .then_with(|| x.simple_coords.cmp(&y.simple_coords))
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parses_types() {
        assert_eq!("a2".parse::<LieType>().unwrap().to_string(), "A2");
        assert_eq!("G2".parse::<LieType>().unwrap().rank(), 2);
        for bad in [
            "", "A", "A0", "E5", "E9", "F3", "G3", "B1", "C1", "D2", "X3", "A-1", "A 2",
        ] {
            assert!(bad.parse::<LieType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_constants() {
        let g2 = rs("G2");
        assert_eq!(
            g2.constants(),
            Constants {
                l: 1,
                d: 3,
                h: 6,
                hv: 4
            }
        );
        let a2 = rs("A2");
        assert_eq!(
            a2.constants(),
            Constants {
                l: 3,
                d: 1,
                h: 3,
                hv: 3
            }
        );
    }

    #[test]
    fn a1_data() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.positive_roots()[0].weight, Weight::from([2]));
        assert_eq!(a1.gram_l(), &[vec![1]]);
        assert_eq!(a1.constants().l, 2);
        let rho = a1.rho().clone();
        assert_eq!(a1.pairing_with_coroot(&rho, &Weight::from([2])).unwrap(), 1);
    }

    #[test]
    fn b2_roots() {
        let b2 = rs("B2");
        assert_eq!(b2.positive_roots().len(), 4);
        assert!(b2.theta().is_long());
        assert!(!b2.phi().is_long());
        // alpha_1 long, alpha_2 short
        assert_eq!(b2.theta().simple_coords, vec![1, 2]);
        assert_eq!(b2.phi().simple_coords, vec![1, 1]);
    }

    #[test]
    fn g2_theta_length_and_pairing() {
        let g2 = rs("G2");
        let theta = g2.theta().weight.clone();
        let c = g2.constants();
        assert_eq!(g2.inner_product_l(&theta, &theta).unwrap(), 2 * c.d * c.l);
        assert_eq!(g2.inner_product_l(&theta, &theta).unwrap(), 6);
        let rho = g2.rho().clone();
        assert_eq!(g2.pairing_with_coroot(&rho, &theta).unwrap(), c.hv - 1);
        assert_eq!(g2.pairing_with_coroot(&rho, &-&theta).unwrap(), 1 - c.hv);
    }

    #[test]
    fn pairing_errors() {
        let a2 = rs("A2");
        assert!(matches!(
            a2.pairing_with_coroot(&Weight::from([1, 0]), &Weight::from([1, 0])),
            Err(Error::NotARoot(_))
        ));
        assert!(matches!(
            a2.inner_product_l(&Weight::from([1]), &Weight::from([1, 0])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn fundamental_pairings() {
        for t in LieType::all_up_to_rank(8) {
            let rs = build_root_system(t).unwrap();
            let r = rs.rank();
            for i in 0..r {
                for j in 0..r {
                    let p = rs
                        .pairing_with_coroot(&rs.fundamental_weight(i), rs.simple_root(j))
                        .unwrap();
                    assert_eq!(p, (i == j) as i64, "{t}");
                }
                assert_eq!(
                    rs.pairing_with_coroot(rs.rho(), rs.simple_root(i)).unwrap(),
                    1
                );
            }
        }
    }

    #[test]
    fn rank_ceiling() {
        let t: LieType = "A13".parse().unwrap();
        assert!(matches!(
            build_root_system(t),
            Err(Error::RankCeiling { .. })
        ));
        assert!(build_root_system_with(t, BuildOptions { max_rank: 13 }).is_ok());
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = rs("A2");
        assert_eq!(
            a2.weyl_dimension(&Weight::from([1, 1])).unwrap(),
            BigInt::from(8)
        );
        let g2 = rs("G2");
        assert_eq!(
            g2.weyl_dimension(&Weight::from([1, 0])).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            g2.weyl_dimension(&Weight::from([0, 1])).unwrap(),
            BigInt::from(14)
        );
        let e8 = rs("E8");
        assert_eq!(
            e8.weyl_dimension(&Weight::fundamental(8, 7)).unwrap(),
            BigInt::from(248)
        );
        assert_eq!(e8.weyl_group_order(), 696_729_600);
    }
}
