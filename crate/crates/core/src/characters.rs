//! Weight multiplicities by Freudenthal's recursion and the classical
//! tensor-product decomposition by the Racah fold.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::weight::Weight;
use crate::weyl::orbit::{classical_fold_shifted, for_each_orbit_element};

/// Dominant part of the character of the irreducible module `W^lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominantCharacter {
    pub highest: Weight,
    /// Multiplicities of the dominant weights, keyed in lexicographic order.
    pub mults: BTreeMap<Weight, u64>,
}

impl DominantCharacter {
    /// Multiplicity of an arbitrary weight, through its dominant conjugate.
    pub fn multiplicity(&self, rs: &RootSystem, gam: &Weight) -> u64 {
        let mut g = gam.clone();
        make_dominant(rs, &mut g);
        self.mults.get(&g).copied().unwrap_or(0)
    }

    /// Visit every weight of the module with its multiplicity.
    pub fn for_each_weight<F: FnMut(&Weight, u64)>(&self, rs: &RootSystem, mut f: F) {
        for (mu, &m) in &self.mults {
            for_each_orbit_element(rs, mu, |nu, _| f(nu, m));
        }
    }

    /// All weights with multiplicity, orbit by orbit.
    pub fn full_character(&self, rs: &RootSystem) -> Vec<(Weight, u64)> {
        let mut out = Vec::new();
        self.for_each_weight(rs, |w, m| out.push((w.clone(), m)));
        out
    }

    /// Sum of the multiplicities over all weights.
    pub fn dimension(&self, rs: &RootSystem) -> BigInt {
        let mut total = BigInt::from(0);
        for (mu, &m) in &self.mults {
            let mut size = 0u64;
            for_each_orbit_element(rs, mu, |_, _| size += 1);
            total += BigInt::from(size) * m;
        }
        total
    }
}

pub(crate) fn make_dominant(rs: &RootSystem, w: &mut Weight) {
    while let Some(i) = w.coords().iter().position(|&c| c < 0) {
        rs.reflect(w, i);
    }
}

fn check_dominant(rs: &RootSystem, lam: &Weight) -> Result<()> {
    rs.check_rank(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    Ok(())
}

/// Dominant weights `mu <= lam`, found by subtracting positive roots while
/// staying dominant, sorted by the height of `lam - mu`.
fn dominant_weights_below(rs: &RootSystem, lam: &Weight) -> Vec<(Weight, i64)> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(mu) = queue.pop_front() {
        for b in rs.positive_roots() {
            let nu = &mu - &b.weight;
            if nu.is_dominant() && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(Weight, i64)> = seen
        .into_iter()
        .map(|mu| {
            let h = rs
                .simple_root_coords(&(lam - &mu))
                .map(|c| c.iter().sum())
                .unwrap_or(i64::MAX);
            (mu, h)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

fn freudenthal(rs: &RootSystem, lam: &Weight) -> Result<DominantCharacter> {
    check_dominant(rs, lam)?;
    let rho = rs.rho();
    let shifted = lam + rho;
    let top = rs.ip(&shifted, &shifted) as i128;
    let mut mults: HashMap<Weight, u64> = HashMap::new();
    for (mu, height) in dominant_weights_below(rs, lam) {
        if height == 0 {
            mults.insert(mu, 1);
            continue;
        }
        let mut num: i128 = 0;
        for b in rs.positive_roots() {
            let mut k = 1;
            loop {
                let mut w = mu.clone();
                w.add_scaled(k, &b.weight);
                let pair = rs.ip(&w, &b.weight) as i128;
                make_dominant(rs, &mut w);
                match mults.get(&w) {
                    Some(&m) => num += m as i128 * pair,
                    None => break,
                }
                k += 1;
            }
        }
        let mr = &mu + rho;
        let den = top - rs.ip(&mr, &mr) as i128;
        if den <= 0 || (2 * num) % den != 0 {
            return Err(Error::SelfCheck(format!(
                "Freudenthal recursion is not integral at {mu} in W^{lam}"
            )));
        }
        let m = 2 * num / den;
        if m <= 0 {
            return Err(Error::SelfCheck(format!(
                "dominant weight {mu} of W^{lam} got multiplicity {m}"
            )));
        }
        mults.insert(mu, m as u64);
    }
    Ok(DominantCharacter {
        highest: lam.clone(),
        mults: mults.into_iter().collect(),
    })
}

/// Dimension of the `gam` weight space of `W^lam`.
pub fn weight_multiplicity(rs: &RootSystem, lam: &Weight, gam: &Weight) -> Result<u64> {
    rs.check_rank(gam)?;
    Ok(dominant_character(rs, lam)?.multiplicity(rs, gam))
}

pub fn dominant_character(rs: &RootSystem, lam: &Weight) -> Result<DominantCharacter> {
    freudenthal(rs, lam)
}

/// Classical tensor product multiplicities `N_{lam,gam}^mu`.
pub fn classical_tensor(
    rs: &RootSystem,
    lam: &Weight,
    gam: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    check_dominant(rs, lam)?;
    check_dominant(rs, gam)?;
    racah(rs, &dominant_character(rs, lam)?, gam)
}

fn racah(rs: &RootSystem, ch: &DominantCharacter, gam: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let shifted = gam + rs.rho();
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    ch.for_each_weight(rs, |nu, m| {
        let mut v = &shifted + nu;
        let sign = classical_fold_shifted(rs, &mut v);
        if sign != 0 {
            v -= rs.rho();
            *acc.entry(v).or_insert(0) += sign * m as i64;
        }
    });
    let mut out = BTreeMap::new();
    for (mu, n) in acc {
        if n < 0 {
            return Err(Error::SelfCheck(format!(
                "negative tensor multiplicity {n} at {mu}"
            )));
        }
        if n > 0 {
            out.insert(mu, n as u64);
        }
    }
    Ok(out)
}

/// Memoized characters for one root system; safe to share between threads.
#[derive(Debug)]
pub struct CharacterCache {
    rs: Arc<RootSystem>,
    cache: Mutex<HashMap<Weight, Arc<DominantCharacter>>>,
}

impl CharacterCache {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        CharacterCache {
            rs,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn character(&self, lam: &Weight) -> Result<Arc<DominantCharacter>> {
        if let Some(c) = self
            .cache
            .lock()
            .expect("character cache poisoned")
            .get(lam)
        {
            return Ok(c.clone());
        }
        // computed outside the lock; a racing thread computes the same value
        let ch = Arc::new(freudenthal(&self.rs, lam)?);
        let mut guard = self.cache.lock().expect("character cache poisoned");
        Ok(guard.entry(lam.clone()).or_insert(ch).clone())
    }

    pub fn weight_multiplicity(&self, lam: &Weight, gam: &Weight) -> Result<u64> {
        self.rs.check_rank(gam)?;
        Ok(self.character(lam)?.multiplicity(&self.rs, gam))
    }

    pub fn classical_tensor(&self, lam: &Weight, gam: &Weight) -> Result<BTreeMap<Weight, u64>> {
        check_dominant(&self.rs, lam)?;
        check_dominant(&self.rs, gam)?;
        racah(&self.rs, &*self.character(lam)?, gam)
    }

    pub fn len(&self) -> usize {
        self.cache.lock().expect("character cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::rootdata::build_root_system;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn racah_is_symmetric_and_conserves_dimension(
            t in prop::sample::select(vec!["A2", "B2", "G2"]),
            a in prop::collection::vec(0i64..3, 2),
            b in prop::collection::vec(0i64..3, 2),
        ) {
            let rs = build_root_system(t.parse().unwrap()).unwrap();
            let (lam, gam) = (Weight::new(a), Weight::new(b));
            let n = classical_tensor(&rs, &lam, &gam).unwrap();
            prop_assert_eq!(&n, &classical_tensor(&rs, &gam, &lam).unwrap());
            let total: BigInt = n.iter().map(|(mu, k)| rs.weyl_dimension(mu).unwrap() * *k).sum();
            prop_assert_eq!(total, rs.weyl_dimension(&lam).unwrap() * rs.weyl_dimension(&gam).unwrap());
        }
    }
}
