//! Synthetic architectures for benchmarks.

use compdeps::generate::{random_architecture, GenParams};
use compdeps::{Architecture, ArchitectureBuilder, LevelId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const LEVEL: &str = "L0";

pub fn level() -> LevelId {
    LEVEL.into()
}

/// `n` components on one level where `c{i}` feeds `c{i+1}`; with `cyclic`
/// the last component also feeds the first.
pub fn pipeline(n: usize, cyclic: bool) -> Architecture {
    let mut b = ArchitectureBuilder::new();
    for i in 0..n {
        let r = b.component(format!("c{i}"));
        r.inputs.insert(format!("x{i}").into());
        let next = if cyclic && i + 1 == n { 0 } else { i + 1 };
        r.outputs.insert(format!("x{next}").into());
        b.level(LEVEL).insert(format!("c{i}").into());
    }
    b.build().expect("pipeline is well-formed")
}

/// `width * depth` components arranged in layers; each component reads
/// `fan_in` random outputs of the previous layer, and every tenth layer
/// feeds back to the first so the graph has large cycles.
pub fn layered(width: usize, depth: usize, fan_in: usize, seed: u64) -> Architecture {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = ArchitectureBuilder::new();
    let name = |layer: usize, k: usize| format!("c{layer}_{k}");
    for layer in 0..depth {
        for k in 0..width {
            let c = name(layer, k);
            let r = b.component(c.as_str());
            r.outputs.insert(format!("x{layer}_{k}").into());
            if layer > 0 {
                for _ in 0..fan_in {
                    let j = rng.gen_range(0..width);
                    r.inputs.insert(format!("x{}_{j}", layer - 1).into());
                }
            }
            if layer % 10 == 9 {
                let j = rng.gen_range(0..width);
                b.component(name(0, j))
                    .inputs
                    .insert(format!("x{layer}_{k}").into());
            }
            b.level(LEVEL).insert(c.into());
        }
    }
    for k in (0..width).step_by(3) {
        b.highload_channels().insert(format!("x0_{k}").into());
    }
    b.build().expect("layered architecture is well-formed")
}

/// Random architecture with exactly `components` components and `channels`
/// channels on a single level.
pub fn random(components: usize, channels: usize, seed: u64) -> Architecture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_architecture(&mut rng, &GenParams::fixed(components, channels))
}
