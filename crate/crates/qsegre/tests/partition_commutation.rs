//! Diagram commutation over every binary tree shape: any bracketing of the
//! block embeddings equals the one-shot Segre embedding.

use num_complex::Complex64;
use qsegre::{compose_partition, segre_embed, SingleQubitFactor};
use qsegre_testkit::{all_tree_shapes, random_factors};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn factor_vectors(factors: &[SingleQubitFactor]) -> Vec<Vec<Complex64>> {
    factors.iter().map(|f| vec![f.a0(), f.a1()]).collect()
}

#[test]
fn every_tree_shape_commutes_up_to_five_qubits() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for m in 2..=5 {
        for _ in 0..5 {
            let factors: Vec<_> = random_factors(&mut rng, m)
                .iter()
                .map(|f| f.normalized())
                .collect();
            let direct = segre_embed(&factors).unwrap();
            for tree in all_tree_shapes(m) {
                let composed = compose_partition(&tree, &factor_vectors(&factors)).unwrap();
                for rank in 0..direct.dim() {
                    let d = (composed.amplitude_at_rank(rank) - direct.amplitude_at_rank(rank))
                        .norm();
                    assert!(d <= 1e-12, "m={m} rank={rank} deviates by {d}");
                }
            }
        }
    }
}
