//! Direct and transitive data dependencies between components of one level,
//! and between channels.
//!
//! On a level `L`, `Z` is a *direct source* of `C` when some output channel
//! of `Z` is an input channel of `C` and both components belong to `L`.
//! A component queried on a level it does not belong to has no sources and
//! no accessors. *Sources* are the transitive closure of direct sources; a
//! component is its own source exactly when it lies on a dependency cycle.
//! *Accessors* are the dual relation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::Result;
use crate::model::{AccSet, Architecture, ChannelId, ChannelSet, ComponentId, LevelId, SourceSet};

/// Direct-source edges of one level, `producer -> consumer`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelGraph {
    pub level: LevelId,
    pub nodes: BTreeSet<ComponentId>,
    pub edges: BTreeSet<(ComponentId, ComponentId)>,
    #[serde(skip)]
    succ: BTreeMap<ComponentId, BTreeSet<ComponentId>>,
    #[serde(skip)]
    pred: BTreeMap<ComponentId, BTreeSet<ComponentId>>,
}

impl LevelGraph {
    pub fn successors(&self, c: &ComponentId) -> impl Iterator<Item = &ComponentId> + '_ {
        self.succ.get(c).into_iter().flatten()
    }

    pub fn predecessors(&self, c: &ComponentId) -> impl Iterator<Item = &ComponentId> + '_ {
        self.pred.get(c).into_iter().flatten()
    }

    pub fn direct_sources(&self, c: &ComponentId) -> SourceSet {
        self.predecessors(c).cloned().collect()
    }

    pub fn direct_accessors(&self, c: &ComponentId) -> AccSet {
        self.successors(c).cloned().collect()
    }

    /// Every node from which `c` is reachable in one or more steps.
    pub fn sources(&self, c: &ComponentId) -> SourceSet {
        closure(c, |n| self.predecessors(n))
    }

    /// Every node reachable from `c` in one or more steps.
    pub fn accessors(&self, c: &ComponentId) -> AccSet {
        closure(c, |n| self.successors(n))
    }
}

fn closure<'g, F, I>(start: &ComponentId, next: F) -> BTreeSet<ComponentId>
where
    F: Fn(&ComponentId) -> I,
    I: Iterator<Item = &'g ComponentId>,
{
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<ComponentId> = next(start).cloned().collect();
    while let Some(n) = queue.pop_front() {
        if seen.insert(n.clone()) {
            queue.extend(next(&n).filter(|m| !seen.contains(*m)).cloned());
        }
    }
    seen
}

/// Materialises the direct-source edges of `level`.
pub fn level_graph(a: &Architecture, level: &LevelId) -> Result<LevelGraph> {
    let members = a.lookup_level(level)?;
    let mut edges = BTreeSet::new();
    let mut succ: BTreeMap<ComponentId, BTreeSet<ComponentId>> = BTreeMap::new();
    let mut pred: BTreeMap<ComponentId, BTreeSet<ComponentId>> = BTreeMap::new();

    // channel -> producers on this level
    let mut producers: BTreeMap<&ChannelId, Vec<&ComponentId>> = BTreeMap::new();
    for z in members {
        for x in &a.rec(z).outputs {
            producers.entry(x).or_default().push(z);
        }
    }
    for c in members {
        for x in &a.rec(c).inputs {
            for z in producers.get(x).into_iter().flatten() {
                edges.insert(((*z).clone(), c.clone()));
                succ.entry((*z).clone()).or_default().insert(c.clone());
                pred.entry(c.clone()).or_default().insert((*z).clone());
            }
        }
    }

    Ok(LevelGraph {
        level: level.clone(),
        nodes: members.clone(),
        edges,
        succ,
        pred,
    })
}

fn check(a: &Architecture, level: &LevelId, c: &ComponentId) -> Result<bool> {
    a.check_component(c)?;
    Ok(a.lookup_level(level)?.contains(c))
}

pub fn dsources(a: &Architecture, level: &LevelId, c: &ComponentId) -> Result<SourceSet> {
    if !check(a, level, c)? {
        return Ok(SourceSet::new());
    }
    let inputs = &a.rec(c).inputs;
    Ok(a.members(level)
        .iter()
        .filter(|z| !a.rec(z).outputs.is_disjoint(inputs))
        .cloned()
        .collect())
}

pub fn dacc(a: &Architecture, level: &LevelId, c: &ComponentId) -> Result<AccSet> {
    if !check(a, level, c)? {
        return Ok(AccSet::new());
    }
    let outputs = &a.rec(c).outputs;
    Ok(a.members(level)
        .iter()
        .filter(|z| !a.rec(z).inputs.is_disjoint(outputs))
        .cloned()
        .collect())
}

pub fn sources(a: &Architecture, level: &LevelId, c: &ComponentId) -> Result<SourceSet> {
    if !check(a, level, c)? {
        return Ok(SourceSet::new());
    }
    Ok(level_graph(a, level)?.sources(c))
}

pub fn acc(a: &Architecture, level: &LevelId, c: &ComponentId) -> Result<AccSet> {
    if !check(a, level, c)? {
        return Ok(AccSet::new());
    }
    Ok(level_graph(a, level)?.accessors(c))
}

/// True when no output of `s` feeds any component of `level`.
pub fn is_not_dsource(a: &Architecture, level: &LevelId, s: &ComponentId) -> Result<bool> {
    a.check_component(s)?;
    let members = a.lookup_level(level)?;
    let outputs = &a.rec(s).outputs;
    Ok(members.iter().all(|z| a.rec(z).inputs.is_disjoint(outputs)))
}

/// True when no output of `s` feeds `c`, or `c` is not on `level`.
pub fn is_not_dsource_for(
    a: &Architecture,
    level: &LevelId,
    s: &ComponentId,
    c: &ComponentId,
) -> Result<bool> {
    a.check_component(s)?;
    a.check_component(c)?;
    let members = a.lookup_level(level)?;
    Ok(!members.contains(c) || a.rec(c).inputs.is_disjoint(&a.rec(s).outputs))
}

/// Channels `x` is computed from, directly or through the variables it reads.
pub fn chan_direct_deps(a: &Architecture, x: &ChannelId) -> Result<ChannelSet> {
    let mut deps = a.chan_from_ch(x)?.clone();
    for v in a.chan_from_var(x)? {
        deps.extend(a.var_from(v)?.iter().cloned());
    }
    Ok(deps)
}

/// Channels reachable from `x` through one or more [`chan_direct_deps`] steps.
pub fn chan_transitive_deps(a: &Architecture, x: &ChannelId) -> Result<ChannelSet> {
    let mut seen = ChannelSet::new();
    let mut queue: VecDeque<ChannelId> = chan_direct_deps(a, x)?.into_iter().collect();
    while let Some(y) = queue.pop_front() {
        if seen.insert(y.clone()) {
            queue.extend(
                chan_direct_deps(a, &y)?
                    .into_iter()
                    .filter(|z| !seen.contains(z)),
            );
        }
    }
    Ok(seen)
}

/// Channels whose value (transitively) depends on `x`; the inverse of
/// [`chan_transitive_deps`].
pub fn chan_dependents(a: &Architecture, x: &ChannelId) -> Result<ChannelSet> {
    a.check_channel(x)?;
    let mut out = ChannelSet::new();
    for y in a.channels() {
        if chan_transitive_deps(a, y)?.contains(x) {
            out.insert(y.clone());
        }
    }
    Ok(out)
}
