//! Level transformations: strongly connected components, high-load grouping,
//! high-performance marking, and checking that one level refines another.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::deps::level_graph;
use crate::error::Result;
use crate::model::{Architecture, ChannelId, ComponentId, ComponentSet, LevelId};
use crate::validate::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    pub members: ComponentSet,
    pub high_perf: bool,
}

/// A partition of one level's components. Groups are ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelPartition {
    pub source_level: LevelId,
    pub groups: Vec<Group>,
}

impl LevelPartition {
    fn new(
        a: &Architecture,
        level: &LevelId,
        sets: impl IntoIterator<Item = ComponentSet>,
    ) -> Self {
        let hp = high_perf_components(a);
        let mut groups: Vec<Group> = sets
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|members| Group {
                high_perf: members.iter().any(|c| hp.contains(c)),
                members,
            })
            .collect();
        groups.sort_by(|x, y| x.members.first().cmp(&y.members.first()));
        LevelPartition {
            source_level: level.clone(),
            groups,
        }
    }

    /// The group containing `c`, if any.
    pub fn group_of(&self, c: &ComponentId) -> Option<&Group> {
        self.groups.iter().find(|g| g.members.contains(c))
    }

    pub fn multi_member_groups(&self) -> impl Iterator<Item = &Group> + '_ {
        self.groups.iter().filter(|g| g.members.len() > 1)
    }
}

/// Strongly connected components of the level's direct-source graph.
pub fn condense_level(a: &Architecture, level: &LevelId) -> Result<LevelPartition> {
    let g = level_graph(a, level)?;
    let nodes: Vec<&ComponentId> = g.nodes.iter().collect();
    let index_of: BTreeMap<&ComponentId, usize> =
        nodes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|c| g.successors(c).map(|s| index_of[s]).collect())
        .collect();
    let sccs = tarjan(&adj);
    Ok(LevelPartition::new(
        a,
        level,
        sccs.into_iter()
            .map(|scc| scc.into_iter().map(|i| nodes[i].clone()).collect()),
    ))
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (node, position in its adjacency list)
        let mut work = vec![(root, 0usize)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = work.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut scc = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    scc.push(w);
                    if w == v {
                        break;
                    }
                }
                out.push(scc);
            }
        }
    }
    out
}

/// Groups level components connected, directly or transitively, by a shared
/// high-load channel on their interfaces (inputs included).
pub fn highload_grouping(a: &Architecture, level: &LevelId) -> Result<LevelPartition> {
    let members: Vec<&ComponentId> = a.lookup_level(level)?.iter().collect();
    let mut parent: Vec<usize> = (0..members.len()).collect();

    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }

    for x in &a.highload_channels {
        let touching: Vec<usize> = members
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let r = a.rec(c);
                r.inputs.contains(x) || r.outputs.contains(x)
            })
            .map(|(i, _)| i)
            .collect();
        if let Some((&first, rest)) = touching.split_first() {
            for &i in rest {
                let (ra, rb) = (find(&mut parent, first), find(&mut parent, i));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }

    let mut sets: BTreeMap<usize, ComponentSet> = BTreeMap::new();
    for (i, c) in members.iter().enumerate() {
        let r = find(&mut parent, i);
        sets.entry(r).or_default().insert((*c).clone());
    }
    Ok(LevelPartition::new(a, level, sets.into_values()))
}

/// All components that are marked high-performance or contain such a
/// component at any depth.
pub fn high_perf_components(a: &Architecture) -> ComponentSet {
    let mut memo: BTreeMap<&ComponentId, bool> = BTreeMap::new();
    for c in a.components() {
        // Post-order DFS; the subcomponent relation is acyclic.
        let mut stack = vec![(c, false)];
        while let Some((n, expanded)) = stack.pop() {
            if memo.contains_key(n) {
                continue;
            }
            let subs = &a.rec(n).subcomponents;
            if expanded {
                let v = a.highperf_components.contains(n) || subs.iter().any(|s| memo[s]);
                memo.insert(n, v);
            } else {
                stack.push((n, true));
                stack.extend(
                    subs.iter()
                        .filter(|s| !memo.contains_key(*s))
                        .map(|s| (s, false)),
                );
            }
        }
    }
    memo.into_iter()
        .filter(|(_, v)| *v)
        .map(|(c, _)| c.clone())
        .collect()
}

pub fn is_high_perf(a: &Architecture, c: &ComponentId) -> Result<bool> {
    a.check_component(c)?;
    let mut seen = BTreeSet::new();
    let mut stack = vec![c];
    while let Some(n) = stack.pop() {
        if a.highperf_components.contains(n) {
            return Ok(true);
        }
        if seen.insert(n) {
            stack.extend(a.rec(n).subcomponents.iter());
        }
    }
    Ok(false)
}

pub fn is_highload_channel(a: &Architecture, x: &ChannelId) -> Result<bool> {
    a.check_channel(x)?;
    Ok(a.highload_channels.contains(x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementReport {
    pub fine: LevelId,
    pub coarse: LevelId,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    /// Coarse component covering each fine component, where one exists.
    pub assignment: BTreeMap<ComponentId, ComponentId>,
}

/// Leaves of the subcomponent hierarchy below `c`, or `c` itself when it
/// has no subcomponents.
pub fn atoms(a: &Architecture, c: &ComponentId) -> Result<ComponentSet> {
    a.check_component(c)?;
    Ok(atoms_of(a, c))
}

fn atoms_of(a: &Architecture, c: &ComponentId) -> ComponentSet {
    let mut out = ComponentSet::new();
    let mut stack = vec![c];
    let mut seen = BTreeSet::new();
    while let Some(n) = stack.pop() {
        if !seen.insert(n) {
            continue;
        }
        let subs = &a.rec(n).subcomponents;
        if subs.is_empty() {
            out.insert(n.clone());
        } else {
            stack.extend(subs.iter());
        }
    }
    out
}

fn overlap_witnesses(
    level: &LevelId,
    atoms: &BTreeMap<&ComponentId, ComponentSet>,
    out: &mut Vec<Witness>,
) {
    let list: Vec<_> = atoms.iter().collect();
    for (i, (c, ca)) in list.iter().enumerate() {
        for (d, da) in &list[i + 1..] {
            if let Some(shared) = ca.intersection(da).next() {
                out.push(Witness::new(
                    [c.as_str(), d.as_str(), shared.as_str()],
                    format!("{c} and {d} on {level} both contain {shared}"),
                ));
            }
        }
    }
}

/// Checks that `coarse` regroups exactly the components of `fine`.
///
/// Both levels are compared through the leaves of the subcomponent
/// hierarchy: the leaf sets of each level must be pairwise disjoint and
/// cover the same leaves, and every fine component must lie within a single
/// coarse component.
pub fn verify_level_refinement(
    a: &Architecture,
    fine: &LevelId,
    coarse: &LevelId,
) -> Result<RefinementReport> {
    let fine_members = a.lookup_level(fine)?;
    let coarse_members = a.lookup_level(coarse)?;
    let fine_atoms: BTreeMap<&ComponentId, ComponentSet> =
        fine_members.iter().map(|c| (c, atoms_of(a, c))).collect();
    let coarse_atoms: BTreeMap<&ComponentId, ComponentSet> =
        coarse_members.iter().map(|c| (c, atoms_of(a, c))).collect();

    let mut witnesses = Vec::new();
    overlap_witnesses(fine, &fine_atoms, &mut witnesses);
    overlap_witnesses(coarse, &coarse_atoms, &mut witnesses);

    let fine_union: ComponentSet = fine_atoms.values().flatten().cloned().collect();
    let coarse_union: ComponentSet = coarse_atoms.values().flatten().cloned().collect();
    for x in fine_union.difference(&coarse_union) {
        witnesses.push(Witness::new(
            [x.as_str()],
            format!("{x} is below {fine} but not covered by {coarse}"),
        ));
    }
    for x in coarse_union.difference(&fine_union) {
        witnesses.push(Witness::new(
            [x.as_str()],
            format!("{x} is below {coarse} but not covered by {fine}"),
        ));
    }

    let mut assignment = BTreeMap::new();
    for (f, fa) in &fine_atoms {
        let covering: Vec<&&ComponentId> = coarse_atoms
            .iter()
            .filter(|(_, ca)| fa.is_subset(ca))
            .map(|(c, _)| c)
            .collect();
        match covering.as_slice() {
            [c] => {
                assignment.insert((*f).clone(), (**c).clone());
            }
            [] => witnesses.push(Witness::new(
                [f.as_str()],
                format!("no component of {coarse} contains all of {f}"),
            )),
            many => {
                let mut entities = vec![f.to_string()];
                entities.extend(many.iter().map(|c| c.to_string()));
                witnesses.push(Witness::new(
                    entities,
                    format!("{f} is contained in several components of {coarse}"),
                ));
            }
        }
    }

    witnesses.sort();
    witnesses.dedup();
    Ok(RefinementReport {
        fine: fine.clone(),
        coarse: coarse.clone(),
        holds: witnesses.is_empty(),
        witnesses,
        assignment,
    })
}
