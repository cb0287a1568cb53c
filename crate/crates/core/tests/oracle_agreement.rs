mod oracles;

use std::collections::BTreeMap;
use std::sync::Arc;

use alcove_core::characters::{classical_tensor, dominant_character};
use alcove_core::modular::{qdim, qdim_zero_by_stabilizer};
use alcove_core::weyl::make_context;
use alcove_core::{build_root_system, FusionEngine, RootSystem, Weight};
use oracles::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rs(t: &str) -> Arc<RootSystem> {
    Arc::new(build_root_system(t.parse().unwrap()).unwrap())
}

#[test]
fn fold_matches_brute_force_search() {
    for (t, l) in [("A2", 7), ("B2", 9), ("G2", 7), ("B2", 10), ("G2", 15)] {
        let rs = rs(t);
        let ctx = make_context(rs.clone(), l).unwrap();
        let radius = ctx.l_prime() as i64;
        let brute = BruteFold::for_radius(&rs, l, radius);
        for lam in weight_box(rs.rank(), radius) {
            let f = ctx.fold(&lam).unwrap();
            let (rep, sign) = brute
                .fold(&rs, &lam)
                .unwrap_or_else(|| panic!("no image {t} l={l} {lam} ours {f:?}"));
            assert_eq!((f.rep.clone(), f.sign), (rep, sign), "{t} l={l} {lam}");
        }
    }
}

#[test]
fn multiplicities_match_kostant_and_weyl_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in ["A2", "B2", "G2", "A3"] {
        let rs = rs(t);
        let weyl = weyl_group(&rs);
        for lam in weight_box(rs.rank(), 2)
            .into_iter()
            .filter(Weight::is_dominant)
        {
            let ch = kostant_character(&rs, &weyl, &lam);
            let dc = dominant_character(&rs, &lam).unwrap();
            let ours: BTreeMap<Weight, i64> = dc
                .full_character(&rs)
                .into_iter()
                .map(|(w, m)| (w, m as i64))
                .collect();
            let theirs: BTreeMap<Weight, i64> = ch.clone().into_iter().collect();
            assert_eq!(ours, theirs, "{t} {lam}");
            let x: Vec<f64> = (0..rs.rank()).map(|_| rng.gen_range(-3.0..3.0)).collect();
            assert!(weyl_quotient_residual(&weyl, &lam, &ch, &x) < 1e-9);
        }
    }
}

#[test]
fn tensor_matches_laurent_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in ["A2", "B2", "G2"] {
        let rs = rs(t);
        let weyl = weyl_group(&rs);
        for _ in 0..4 {
            let lam = Weight::new((0..2).map(|_| rng.gen_range(0..3)).collect());
            let gam = Weight::new((0..2).map(|_| rng.gen_range(0..3)).collect());
            assert_eq!(
                classical_tensor(&rs, &lam, &gam).unwrap(),
                laurent_tensor(&rs, &weyl, &lam, &gam),
                "{t} {lam} x {gam}"
            );
        }
    }
}

#[test]
fn fusion_matches_alternating_group_sum() {
    for (t, l) in [("A2", 7), ("B2", 10), ("G2", 7), ("A1", 9)] {
        let rs = rs(t);
        let engine = FusionEngine::new(make_context(rs.clone(), l).unwrap());
        let brute = BruteFold::new(&rs, l, 3);
        let weyl = weyl_group(&rs);
        let alcove = engine.alcove().to_vec();
        for lam in &alcove {
            let ch = kostant_character(&rs, &weyl, lam);
            for gam in &alcove {
                let m = engine.fusion_coeffs(lam, gam).unwrap();
                for mu in &alcove {
                    let want = brute_fusion(&brute, &ch, gam, mu);
                    assert_eq!(
                        m.get(mu).copied().unwrap_or(0) as i64,
                        want,
                        "{t} l={l} {lam} {gam} {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn su2_closed_form() {
    for l in [6u64, 8, 10, 12, 7, 9] {
        let ctx = make_context(rs("A1"), l).unwrap();
        let k = ctx.l_prime() as i64 - 2;
        let e = FusionEngine::new(ctx);
        for a in 0..=k {
            for b in 0..=k {
                let m = e
                    .fusion_coeffs(&Weight::from([a]), &Weight::from([b]))
                    .unwrap();
                for c in 0..=k {
                    assert_eq!(
                        m.get(&Weight::from([c])).copied().unwrap_or(0),
                        su2_fusion(k, a, b, c)
                    );
                }
            }
        }
    }
}

#[test]
fn qdim_zeros_are_walls() {
    for (t, l) in [("A2", 8), ("C3", 9), ("G2", 14)] {
        let ctx = make_context(rs(t), l).unwrap();
        let brute = BruteFold::for_radius(ctx.root_system(), l, ctx.l_prime() as i64);
        for lam in weight_box(ctx.root_system().rank(), ctx.l_prime() as i64) {
            let z = qdim(&ctx, &lam).unwrap().is_zero();
            assert_eq!(z, qdim_zero_by_stabilizer(&ctx, &lam), "{t} l={l} {lam}");
            if ctx.root_system().rank() <= 2 {
                assert_eq!(z, brute.fold(ctx.root_system(), &lam).unwrap().1 == 0);
            }
        }
    }
}
