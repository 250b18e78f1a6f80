//! Seeded random architectures for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{Architecture, ArchitectureBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub max_components: usize,
    pub max_channels: usize,
    pub max_variables: usize,
    pub max_levels: usize,
    /// Mean number of inputs (and of outputs) per component.
    pub interface_size: usize,
    /// Use the maximum component and channel counts instead of sampling them.
    pub exact_size: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_components: 12,
            max_channels: 20,
            max_variables: 4,
            max_levels: 3,
            interface_size: 2,
            exact_size: false,
        }
    }
}

impl GenParams {
    /// Exactly `components` components and `channels` channels on one level.
    pub fn fixed(components: usize, channels: usize) -> Self {
        GenParams {
            max_components: components,
            max_channels: channels,
            max_variables: 4,
            max_levels: 1,
            interface_size: 2,
            exact_size: true,
        }
    }
}

fn pick<R: Rng + ?Sized>(rng: &mut R, names: &[String], mean: usize) -> Vec<String> {
    if names.is_empty() {
        return Vec::new();
    }
    let k = rng.gen_range(0..=(2 * mean).min(names.len()));
    names.choose_multiple(rng, k).cloned().collect()
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// A random architecture within the bounds of `p`.
///
/// Components are named `c{i}`, channels `x{i}`, variables `v{i}` and levels
/// `L{i}`. Subcomponents always have a smaller index than their parent, so
/// the hierarchy is acyclic. The dependency tables are filled at random and
/// need not satisfy any well-formedness predicate.
pub fn random_architecture<R: Rng + ?Sized>(rng: &mut R, p: &GenParams) -> Architecture {
    let exact = p.exact_size;
    let nc = if exact {
        p.max_components
    } else {
        rng.gen_range(0..=p.max_components)
    };
    let nx = if exact {
        p.max_channels
    } else {
        rng.gen_range(0..=p.max_channels)
    };
    let nv = rng.gen_range(0..=p.max_variables);
    let nl = rng.gen_range(1..=p.max_levels.max(1));
    let comps = names("c", nc);
    let chans = names("x", nx);
    let vars = names("v", nv);

    let mut b = ArchitectureBuilder::new();
    for x in &chans {
        b.declare_channel(x.as_str());
    }
    for v in &vars {
        b.declare_variable(v.as_str());
    }
    for (i, c) in comps.iter().enumerate() {
        let inputs = pick(rng, &chans, p.interface_size);
        let outputs = pick(rng, &chans, p.interface_size);
        let held = pick(rng, &vars, 1);
        let subs = if i > 0 && rng.gen_bool(0.3) {
            pick(rng, &comps[..i], 1)
        } else {
            Vec::new()
        };
        let r = b.component(c.as_str());
        r.inputs.extend(inputs.into_iter().map(Into::into));
        r.outputs.extend(outputs.into_iter().map(Into::into));
        r.vars.extend(held.into_iter().map(Into::into));
        r.subcomponents.extend(subs.into_iter().map(Into::into));
    }
    for l in 0..nl {
        let members = if nl == 1 {
            comps.clone()
        } else {
            pick(rng, &comps, comps.len() / 2 + 1)
        };
        b.level(format!("L{l}"))
            .extend(members.into_iter().map(Into::into));
    }
    for x in &chans {
        if rng.gen_bool(0.5) {
            let deps = pick(rng, &chans, 1);
            b.chan_from_ch(x.as_str())
                .extend(deps.into_iter().map(Into::into));
        }
        if rng.gen_bool(0.3) {
            let deps = pick(rng, &vars, 1);
            b.chan_from_var(x.as_str())
                .extend(deps.into_iter().map(Into::into));
        }
    }
    for v in &vars {
        let from = pick(rng, &chans, 1);
        let to = pick(rng, &chans, 1);
        b.var_from(v.as_str())
            .extend(from.into_iter().map(Into::into));
        b.var_to(v.as_str()).extend(to.into_iter().map(Into::into));
    }
    let hl = pick(rng, &chans, 2);
    b.highload_channels().extend(hl.into_iter().map(Into::into));
    let hp = pick(rng, &comps, 1);
    b.highperf_components()
        .extend(hp.into_iter().map(Into::into));

    b.build().expect("generated architectures are well-formed")
}
