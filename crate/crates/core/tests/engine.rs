use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_transversal::engine::{brute_force_first, find_it, find_it_with, FindOptions};
use matroid_transversal::generators::{gen_r, gen_random, GeneratorSpec};
use matroid_transversal::instance::{classify_positions, Cell, Instance};
use matroid_transversal::matroid::{AnyMatroid, GraphicMatroid, UniformMatroid};

fn random_graphic(n: usize, vertices: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = 2 * n - 1;
    let mut edges = Vec::with_capacity(m * n);
    for _ in 0..m {
        loop {
            let row: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let u = rng.gen_range(0..vertices);
                    let w = (u + rng.gen_range(1..vertices)) % vertices;
                    (u, w)
                })
                .collect();
            let g = GraphicMatroid::new(vertices, row.clone());
            let probe = Instance::new(1, n, (0..n).collect(), AnyMatroid::Graphic(g)).unwrap();
            if probe.validate_rows().is_empty() {
                edges.extend(row);
                break;
            }
        }
    }
    let base = AnyMatroid::Graphic(GraphicMatroid::new(vertices, edges));
    Instance::new(m, n, (0..m * n).collect(), base).unwrap()
}

fn random_uniform(n: usize, ground: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = 2 * n - 1;
    let mut pool: Vec<usize> = (0..ground).collect();
    let grid: Vec<usize> = (0..m)
        .flat_map(|_| pool.partial_shuffle(&mut rng, n).0.to_vec())
        .collect();
    let base = AnyMatroid::Uniform(UniformMatroid::new(n, ground));
    Instance::new(m, n, grid, base).unwrap()
}

fn assert_it(inst: &Instance) {
    let out = find_it(inst).unwrap();
    let recheck = classify_positions(inst, &out.certificate.positions).unwrap();
    assert!(recheck.is_it(), "{}", inst.to_text());
}

#[test]
fn graphic_instances() {
    for seed in 0..300 {
        let n = 2 + (seed % 5) as usize;
        let inst = random_graphic(n, n + 1 + (seed % 3) as usize, seed);
        assert_it(&inst);
        if n <= 5 {
            assert!(brute_force_first(&inst).unwrap().is_some());
        }
    }
}

#[test]
fn uniform_instances() {
    for seed in 0..300 {
        let n = 2 + (seed % 5) as usize;
        assert_it(&random_uniform(n, n + (seed % 4) as usize, seed));
    }
}

#[test]
fn rank_exceeding_n_is_fine() {
    for seed in 0..100 {
        let n = 2 + (seed % 4) as usize;
        let spec = GeneratorSpec::RandomLinear {
            m: 2 * n + 3,
            n,
            p: 3,
            dim: n + 2,
            seed,
        };
        assert_it(&gen_random(spec).unwrap());
    }
}

#[test]
fn r_family_up_to_eight() {
    for n in 1..=8 {
        for m in [2 * n - 1, 2 * n + 1] {
            assert_it(&gen_r(m, n).unwrap());
        }
    }
}

#[test]
fn constructive_and_exhaustive_agree_on_small_rowlatin() {
    for seed in 0..400 {
        let n = 1 + (seed % 5) as usize;
        let k = n + (seed % (n as u64 + 1)) as usize;
        let inst = gen_random(GeneratorSpec::RandomRowLatin {
            m: 2 * n - 1,
            n,
            k,
            seed,
        })
        .unwrap();
        assert_it(&inst);
        assert!(brute_force_first(&inst).unwrap().is_some());
    }
}

#[test]
fn trace_lists_steps_in_order() {
    let inst = gen_random(GeneratorSpec::RandomLinear {
        m: 9,
        n: 5,
        p: 2,
        dim: 5,
        seed: 40,
    })
    .unwrap();
    let out = find_it_with(
        &inst,
        &FindOptions {
            check_claims: true,
            trace: true,
        },
    )
    .unwrap();
    assert!(out.trace.first().unwrap().starts_with("depth 1"));
    assert!(out.trace.iter().any(|l| l.contains("single column")));
}

fn perm(len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..len).collect();
    p.shuffle(rng);
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn permuted_instances_map_back_to_its(seed in any::<u64>(), n in 1usize..6, linear in any::<bool>()) {
        let m = 2 * n - 1;
        let spec = if linear {
            GeneratorSpec::RandomLinear { m, n, p: 2, dim: n, seed }
        } else {
            GeneratorSpec::RandomRowLatin { m, n, k: n + 1, seed }
        };
        let inst = gen_random(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let (rp, cp) = (perm(m, &mut rng), perm(n, &mut rng));
        let permuted = inst.permute(&rp, &cp).unwrap();
        let out = find_it(&permuted).unwrap();
        let back: Vec<Cell> = out
            .certificate
            .positions
            .iter()
            .map(|c| Cell::new(rp[c.row - 1] + 1, cp[c.col - 1] + 1))
            .collect();
        prop_assert!(classify_positions(&inst, &back).unwrap().is_it());
    }

    #[test]
    fn every_certificate_is_an_it(seed in any::<u64>(), n in 1usize..8, extra in 0usize..3) {
        let inst = gen_random(GeneratorSpec::RandomRowLatin { m: 2 * n - 1 + extra, n, k: 2 * n, seed }).unwrap();
        let out = find_it(&inst).unwrap();
        prop_assert!(out.certificate.is_it());
        prop_assert!(out.certificate.positions.iter().all(|c| c.row < 2 * n));
    }
}
