//! Output correlation and elementary components.
//!
//! Two output channels are correlated when they are computed from a common
//! local variable. A component is elementary when it has a single output, or
//! when every pair of its outputs (a channel paired with itself included)
//! has intersecting correlation sets.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::model::{Architecture, ChannelId, ChannelSet, ComponentId, LevelId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrelationSet {
    pub channel: ChannelId,
    pub correlated: ChannelSet,
}

pub fn out_pair_correlated(
    a: &Architecture,
    c: &ComponentId,
    x: &ChannelId,
    y: &ChannelId,
) -> Result<bool> {
    let out = a.lookup_out(c)?;
    a.check_channel(x)?;
    a.check_channel(y)?;
    Ok(out.contains(x) && out.contains(y) && !a.chan_from_var[x].is_disjoint(&a.chan_from_var[y]))
}

fn correlated(a: &Architecture, x: &ChannelId) -> ChannelSet {
    a.chan_from_var[x]
        .iter()
        .flat_map(|v| a.var_to[v].iter().cloned())
        .collect()
}

/// Channels sharing a source variable with `x`.
pub fn out_set_correlated(a: &Architecture, x: &ChannelId) -> Result<CorrelationSet> {
    a.check_channel(x)?;
    Ok(CorrelationSet {
        channel: x.clone(),
        correlated: correlated(a, x),
    })
}

fn elementary(a: &Architecture, c: &ComponentId) -> bool {
    let out = &a.rec(c).outputs;
    if out.len() == 1 {
        return true;
    }
    let sets: Vec<ChannelSet> = out.iter().map(|x| correlated(a, x)).collect();
    sets.iter()
        .enumerate()
        .all(|(i, s)| sets[i..].iter().all(|t| !s.is_disjoint(t)))
}

pub fn is_elementary(a: &Architecture, c: &ComponentId) -> Result<bool> {
    a.check_component(c)?;
    Ok(elementary(a, c))
}

/// Elementary verdict for every component of `level`.
pub fn elementary_report(a: &Architecture, level: &LevelId) -> Result<BTreeMap<ComponentId, bool>> {
    Ok(a.lookup_level(level)?
        .iter()
        .map(|c| (c.clone(), elementary(a, c)))
        .collect())
}
