//! Finite Weyl group orbits and the classical chamber fold.

use crate::rootdata::RootSystem;
use crate::weight::Weight;

/// Visit every element of the Weyl orbit of a dominant weight `mu`.
///
/// Each non-dominant element `nu` has a unique parent `s_k nu`, where `k` is the
/// smallest index with `nu_k < 0`, so a depth-first walk with that parent rule
/// reaches every orbit element exactly once without a visited set. The second
/// callback argument is `(-1)^depth`, which is the sign of the Weyl element
/// when `mu` is regular.
pub fn for_each_orbit_element<F>(rs: &RootSystem, mu: &Weight, mut f: F)
where
    F: FnMut(&Weight, i64),
{
    debug_assert!(mu.is_dominant());
    let r = rs.rank();
    let mut stack: Vec<(Weight, i64)> = vec![(mu.clone(), 1)];
    while let Some((nu, sign)) = stack.pop() {
        f(&nu, sign);
        for i in 0..r {
            let k = nu[i];
            if k <= 0 {
                continue;
            }
            let mut child = nu.clone();
            child.add_scaled(-k, rs.simple_root(i));
            if (0..i).all(|j| child[j] >= 0) {
                stack.push((child, -sign));
            }
        }
    }
}

/// The orbit of a dominant weight, in traversal order.
pub fn orbit(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let mut out = Vec::new();
    for_each_orbit_element(rs, mu, |w, _| out.push(w.clone()));
    out
}

/// Number of elements in the orbit of a dominant weight.
pub fn orbit_size(rs: &RootSystem, mu: &Weight) -> u128 {
    let mut n = 0u128;
    for_each_orbit_element(rs, mu, |_, _| n += 1);
    n
}

/// Move `v` into the dominant chamber by simple reflections, always using the
/// smallest index with a negative coordinate. Returns the letters in the order
/// they were applied.
pub fn to_dominant_with_word(rs: &RootSystem, v: &mut Weight) -> Vec<usize> {
    let mut word = Vec::new();
    while let Some(i) = v.coords().iter().position(|&c| c < 0) {
        rs.reflect(v, i);
        word.push(i);
    }
    word
}

/// Classical fold of a shifted weight `v = mu + rho` into the dominant chamber.
/// Returns the dominant representative and the sign, which is zero when the
/// result lies on a wall.
pub fn classical_fold_shifted(rs: &RootSystem, v: &mut Weight) -> i64 {
    let mut parity = 1;
    while let Some(i) = v.coords().iter().position(|&c| c < 0) {
        rs.reflect(v, i);
        parity = -parity;
    }
    if v.coords().iter().any(|&c| c == 0) {
        0
    } else {
        parity
    }
}

/// Apply a word of simple reflections (0-based letters) to `v`, rightmost letter first.
pub fn apply_word(rs: &RootSystem, word: &[usize], v: &mut Weight) {
    for &i in word.iter().rev() {
        rs.reflect(v, i);
    }
}
