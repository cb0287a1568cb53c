//! Truncated tensor products over the alcove by the quantum Racah fold.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::CharacterCache;
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::{half_dual_quotient, AlcoveContext, Isometry};

/// Computes fusion coefficients `M_{lam,gam}^mu` for one context.
#[derive(Debug)]
pub struct FusionEngine {
    ctx: Arc<AlcoveContext>,
    chars: CharacterCache,
    alcove: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl FusionEngine {
    pub fn new(ctx: impl Into<Arc<AlcoveContext>>) -> Self {
        let ctx: Arc<AlcoveContext> = ctx.into();
        let alcove = ctx.alcove_weights();
        let index = alcove
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let chars = CharacterCache::new(ctx.root_system_arc().clone());
        FusionEngine {
            ctx,
            chars,
            alcove,
            index,
        }
    }

    pub fn context(&self) -> &AlcoveContext {
        &self.ctx
    }

    pub fn characters(&self) -> &CharacterCache {
        &self.chars
    }

    /// The alcove in its canonical order; indexes every matrix here.
    pub fn alcove(&self) -> &[Weight] {
        &self.alcove
    }

    pub fn index_of(&self, lam: &Weight) -> Option<usize> {
        self.index.get(lam).copied()
    }

    /// `M_{lam,gam}^mu` for all `mu`, zero entries omitted.
    pub fn fusion_coeffs(&self, lam: &Weight, gam: &Weight) -> Result<BTreeMap<Weight, u64>> {
        self.ctx.check_alcove(lam)?;
        self.ctx.check_alcove(gam)?;
        let sparse = self.coeffs_by_index(lam, gam)?;
        Ok(sparse
            .into_iter()
            .map(|(k, n)| (self.alcove[k].clone(), n))
            .collect())
    }

    fn coeffs_by_index(&self, lam: &Weight, gam: &Weight) -> Result<BTreeMap<usize, u64>> {
        let ch = self.chars.character(lam)?;
        let rs = self.ctx.root_system();
        let mut acc: HashMap<usize, i64> = HashMap::new();
        let mut err = None;
        ch.for_each_weight(rs, |nu, m| {
            if err.is_some() {
                return;
            }
            match self.ctx.fold(&(gam + nu)) {
                Ok(f) if f.sign != 0 => match self.index.get(&f.rep) {
                    Some(&k) => *acc.entry(k).or_insert(0) += f.sign * m as i64,
                    None => {
                        err = Some(Error::SelfCheck(format!(
                            "fold of {} left the alcove at {}",
                            gam + nu,
                            f.rep
                        )))
                    }
                },
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let mut out = BTreeMap::new();
        for (k, n) in acc {
            if n < 0 {
                return Err(Error::SelfCheck(format!(
                    "negative fusion coefficient {n} for {lam} x {gam} at {}",
                    self.alcove[k]
                )));
            }
            if n > 0 {
                out.insert(k, n as u64);
            }
        }
        Ok(out)
    }

    /// `(N_lam)_{gam,mu} = M_{lam,gam}^mu`, rows and columns in alcove order.
    pub fn fusion_matrix(&self, lam: &Weight) -> Result<Vec<Vec<u64>>> {
        self.ctx.check_alcove(lam)?;
        let n = self.alcove.len();
        self.alcove
            .par_iter()
            .map(|gam| {
                let mut row = vec![0u64; n];
                for (k, c) in self.coeffs_by_index(lam, gam)? {
                    row[k] = c;
                }
                Ok(row)
            })
            .collect()
    }

    /// Fusion coefficients for every ordered pair of alcove weights.
    pub fn full_table(&self) -> Result<FusionTable> {
        let n = self.alcove.len();
        let rows: Vec<Vec<BTreeMap<usize, u64>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| self.coeffs_by_index(&self.alcove[i], &self.alcove[j]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(FusionTable {
            alcove: self.alcove.clone(),
            coeffs: rows,
        })
    }

    /// Check that the isometry attached to the 0-based node `i` maps the
    /// alcove onto itself and satisfies `M_{lam,gam}^mu = M_{lam,iota(gam)}^{iota(mu)}`.
    pub fn check_isometry_symmetry(&self, i: usize, table: Option<&FusionTable>) -> Result<bool> {
        let q = half_dual_quotient(&self.ctx)?;
        if !q.nodes.contains(&i) {
            return Err(Error::NotApplicable(format!(
                "{} at l={} has no extra alcove symmetry at node {}",
                self.ctx.root_system().lie_type(),
                self.ctx.l(),
                i + 1
            )));
        }
        let iso = Isometry::for_node(&self.ctx, i)?;
        let Some(perm) = self.isometry_permutation(&iso) else {
            return Ok(false);
        };
        let owned;
        let table = match table {
            Some(t) => t,
            None => {
                owned = self.full_table()?;
                &owned
            }
        };
        let n = self.alcove.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table.get(a, b, c) != table.get(a, perm[b], perm[c]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The isometry as a permutation of alcove indices, if it is one.
    pub fn isometry_permutation(&self, iso: &Isometry) -> Option<Vec<usize>> {
        let rs = self.ctx.root_system();
        let mut hit = vec![false; self.alcove.len()];
        let mut perm = Vec::with_capacity(self.alcove.len());
        for w in &self.alcove {
            let k = *self.index.get(&iso.apply(rs, w))?;
            if hit[k] {
                return None;
            }
            hit[k] = true;
            perm.push(k);
        }
        Some(perm)
    }
}

/// Sparse table of fusion coefficients over the alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    alcove: Vec<Weight>,
    /// `coeffs[i][j][k] = M_{alcove[i], alcove[j]}^{alcove[k]}`, zeros absent.
    coeffs: Vec<Vec<BTreeMap<usize, u64>>>,
}

#[derive(Serialize)]
struct Entry<'a> {
    lambda: &'a Weight,
    gamma: &'a Weight,
    mu: &'a Weight,
    n: u64,
}

impl Serialize for FusionTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut entries = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (&k, &n) in cell {
                    entries.push(Entry {
                        lambda: &self.alcove[i],
                        gamma: &self.alcove[j],
                        mu: &self.alcove[k],
                        n,
                    });
                }
            }
        }
        let mut st = s.serialize_struct("FusionTable", 2)?;
        st.serialize_field("alcove", &self.alcove)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl FusionTable {
    pub fn alcove(&self) -> &[Weight] {
        &self.alcove
    }

    pub fn len(&self) -> usize {
        self.alcove.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alcove.is_empty()
    }

    /// `M_{i,j}^k` by alcove indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.coeffs[i][j].get(&k).copied().unwrap_or(0)
    }

    /// Nonzero `(k, M_{i,j}^k)`.
    pub fn row(&self, i: usize, j: usize) -> &BTreeMap<usize, u64> {
        &self.coeffs[i][j]
    }

    /// Number of stored pairs `(lam, gam)`.
    pub fn pair_count(&self) -> usize {
        self.coeffs.iter().map(Vec::len).sum()
    }

    pub fn matrix(&self, i: usize) -> Vec<Vec<u64>> {
        let n = self.len();
        (0..n)
            .map(|j| (0..n).map(|k| self.get(i, j, k)).collect())
            .collect()
    }

    /// `M_{0,gam}^mu = delta` with index 0 the zero weight.
    pub fn has_unit(&self) -> bool {
        let n = self.len();
        self.alcove.first().is_some_and(Weight::is_zero)
            && (0..n).all(|j| (0..n).all(|k| self.get(0, j, k) == (j == k) as u64))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.coeffs[i][j] == self.coeffs[j][i]))
    }

    /// `sum_nu M_{a,b}^nu M_{nu,c}^mu = sum_nu M_{b,c}^nu M_{a,nu}^mu` for all triples.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|a| {
            for b in 0..n {
                for c in 0..n {
                    let mut left = vec![0u64; n];
                    for (&nu, &x) in &self.coeffs[a][b] {
                        for (&mu, &y) in &self.coeffs[nu][c] {
                            left[mu] += x * y;
                        }
                    }
                    let mut right = vec![0u64; n];
                    for (&nu, &x) in &self.coeffs[b][c] {
                        for (&mu, &y) in &self.coeffs[a][nu] {
                            right[mu] += x * y;
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
            true
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;
    use crate::weyl::make_context;

    fn engine(t: &str, l: u64) -> FusionEngine {
        FusionEngine::new(make_context(build_root_system(t.parse().unwrap()).unwrap(), l).unwrap())
    }

    #[test]
    fn su2_level_one() {
        let e = engine("A1", 6);
        let one = Weight::from([1]);
        let m = e.fusion_coeffs(&one, &one).unwrap();
        assert_eq!(m, [(Weight::from([0]), 1)].into());
        assert_eq!(e.fusion_matrix(&one).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            e.fusion_matrix(&Weight::from([0])).unwrap(),
            vec![vec![1, 0], vec![0, 1]]
        );
        let t = e.full_table().unwrap();
        assert_eq!(t.pair_count(), 4);
        assert!(t.has_unit() && t.is_commutative() && t.is_associative());
        assert!(matches!(
            e.fusion_coeffs(&Weight::from([2]), &one),
            Err(Error::OutsideAlcove(_))
        ));
    }

    #[test]
    fn su2_level_three_spin_three_halves() {
        let e = engine("A1", 5);
        let three = Weight::from([3]);
        let m = e.fusion_coeffs(&three, &three).unwrap();
        assert_eq!(m, [(Weight::from([0]), 1)].into());
    }

    #[test]
    fn su2_level_two() {
        let e = engine("A1", 8);
        assert_eq!(
            e.fusion_matrix(&Weight::from([1])).unwrap(),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]
        );
    }

    #[test]
    fn isometry_symmetry() {
        let e = engine("A1", 5);
        assert!(e.check_isometry_symmetry(0, None).unwrap());
        let e = engine("A1", 6);
        assert!(matches!(
            e.check_isometry_symmetry(0, None),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn g2_table_axioms() {
        let t = engine("G2", 7).full_table().unwrap();
        assert!(t.has_unit() && t.is_commutative() && t.is_associative());
    }
}
