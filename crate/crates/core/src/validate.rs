//! Well-formedness predicates for architectures.
//!
//! Each predicate has a boolean form stated for one entity (or for the whole
//! model) and a witness-producing form used by [`validate_all`], which
//! quantifies every predicate over all components or channels and collects
//! each violating tuple.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::model::{Architecture, ChannelId, ComponentId, LevelId};

/// One offending tuple of entities with a short explanation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub entities: Vec<String>,
    pub reason: String,
}

impl Witness {
    pub(crate) fn new<I, S>(entities: I, reason: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Witness {
            entities: entities.into_iter().map(|s| s.to_string()).collect(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.entities.join(", "), self.reason)
    }
}

/// Predicates reported by [`validate_all`], in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    CorrectCompositionDiffLevels,
    CorrectCompositionVar,
    CorrectDecompositionVar,
    CorrectCompositionOut,
    CorrectCompositionSubcomp,
    AllComponentsUsed,
    OutFromChCorrect,
    OutFromVarCorrect1,
    OutFromVarCorrect2,
    OutFromVarVarToConsistent,
    VarFromCorrect,
    VarToCorrect,
    VarUseful,
    ChannelClassesExclusive,
}

impl Predicate {
    pub const ALL: [Predicate; 14] = [
        Predicate::CorrectCompositionDiffLevels,
        Predicate::CorrectCompositionVar,
        Predicate::CorrectDecompositionVar,
        Predicate::CorrectCompositionOut,
        Predicate::CorrectCompositionSubcomp,
        Predicate::AllComponentsUsed,
        Predicate::OutFromChCorrect,
        Predicate::OutFromVarCorrect1,
        Predicate::OutFromVarCorrect2,
        Predicate::OutFromVarVarToConsistent,
        Predicate::VarFromCorrect,
        Predicate::VarToCorrect,
        Predicate::VarUseful,
        Predicate::ChannelClassesExclusive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::CorrectCompositionDiffLevels => "correct_composition_diff_levels",
            Predicate::CorrectCompositionVar => "correct_composition_var",
            Predicate::CorrectDecompositionVar => "correct_decomposition_var",
            Predicate::CorrectCompositionOut => "correct_composition_out",
            Predicate::CorrectCompositionSubcomp => "correct_composition_subcomp",
            Predicate::AllComponentsUsed => "all_components_used",
            Predicate::OutFromChCorrect => "outfromch_correct",
            Predicate::OutFromVarCorrect1 => "outfromv_correct1",
            Predicate::OutFromVarCorrect2 => "outfromv_correct2",
            Predicate::OutFromVarVarToConsistent => "outfromv_varto_consistent",
            Predicate::VarFromCorrect => "varfrom_correct",
            Predicate::VarToCorrect => "varto_correct",
            Predicate::VarUseful => "var_useful",
            Predicate::ChannelClassesExclusive => "channel_classes_exclusive",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Never empty.
    Violated(Vec<Witness>),
}

impl Verdict {
    fn from_witnesses(mut ws: Vec<Witness>) -> Self {
        if ws.is_empty() {
            Verdict::Holds
        } else {
            ws.sort();
            ws.dedup();
            Verdict::Violated(ws)
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witnesses(&self) -> &[Witness] {
        match self {
            Verdict::Holds => &[],
            Verdict::Violated(ws) => ws,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub verdicts: BTreeMap<Predicate, Verdict>,
}

impl ValidationReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(Verdict::holds)
    }

    pub fn verdict(&self, p: Predicate) -> &Verdict {
        &self.verdicts[&p]
    }

    pub fn violated(&self) -> impl Iterator<Item = Predicate> + '_ {
        self.verdicts
            .iter()
            .filter(|(_, v)| !v.holds())
            .map(|(p, _)| *p)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, v) in &self.verdicts {
            match v {
                Verdict::Holds => writeln!(f, "{p}: holds")?,
                Verdict::Violated(ws) => {
                    writeln!(f, "{p}: violated")?;
                    for w in ws {
                        writeln!(f, "  - {w}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            holds: bool,
            witnesses: &'a [Witness],
        }
        let mut map = serializer.serialize_map(Some(self.verdicts.len()))?;
        for (p, v) in &self.verdicts {
            map.serialize_entry(
                p.name(),
                &Entry {
                    holds: v.holds(),
                    witnesses: v.witnesses(),
                },
            )?;
        }
        map.end()
    }
}

/// How a channel is used by the components of one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelClass {
    /// Consumed on the level but produced by no level component.
    SystemIn,
    /// Produced on the level but consumed by no level component.
    SystemOut,
    /// Both produced and consumed on the level.
    Local,
    Unused,
}

impl fmt::Display for ChannelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelClass::SystemIn => "system_in",
            ChannelClass::SystemOut => "system_out",
            ChannelClass::Local => "local",
            ChannelClass::Unused => "unused",
        })
    }
}

// ---------------------------------------------------------------------------
// Component composition

fn diff_levels_witnesses(a: &Architecture, s: &ComponentId) -> Vec<Witness> {
    let mut out = Vec::new();
    for c in &a.rec(s).subcomponents {
        for (l, members) in &a.levels {
            if members.contains(s) && members.contains(c) {
                out.push(Witness::new(
                    [s.as_str(), c.as_str(), l.as_str()],
                    format!("{s} and its subcomponent {c} are both on {l}"),
                ));
            }
        }
    }
    out
}

pub fn correct_composition_diff_levels(a: &Architecture, s: &ComponentId) -> Result<bool> {
    a.check_component(s)?;
    Ok(diff_levels_witnesses(a, s).is_empty())
}

fn composition_var_witnesses(a: &Architecture, s: &ComponentId) -> Vec<Witness> {
    let vars = &a.rec(s).vars;
    let mut out = Vec::new();
    for c in &a.rec(s).subcomponents {
        for v in a.rec(c).vars.difference(vars) {
            out.push(Witness::new(
                [s.as_str(), c.as_str(), v.as_str()],
                format!("variable {v} of subcomponent {c} is missing from {s}"),
            ));
        }
    }
    out
}

pub fn correct_composition_var(a: &Architecture, s: &ComponentId) -> Result<bool> {
    a.check_component(s)?;
    Ok(composition_var_witnesses(a, s).is_empty())
}

fn decomposition_var_witnesses(a: &Architecture, s: &ComponentId) -> Vec<Witness> {
    let rec = a.rec(s);
    let mut out = Vec::new();
    for v in &rec.vars {
        let holders: Vec<&ComponentId> = rec
            .subcomponents
            .iter()
            .filter(|c| a.rec(c).vars.contains(v))
            .collect();
        if holders.len() > 1 {
            let mut entities = vec![s.to_string(), v.to_string()];
            entities.extend(holders.iter().map(|c| c.to_string()));
            out.push(Witness::new(
                entities,
                format!("variable {v} of {s} belongs to several subcomponents"),
            ));
        }
    }
    out
}

pub fn correct_decomposition_var(a: &Architecture, s: &ComponentId) -> Result<bool> {
    a.check_component(s)?;
    Ok(decomposition_var_witnesses(a, s).is_empty())
}

fn composition_out_witnesses(a: &Architecture, x: &ChannelId) -> Vec<Witness> {
    let mut out = Vec::new();
    for (l, members) in &a.levels {
        let producers: Vec<&ComponentId> = members
            .iter()
            .filter(|c| a.rec(c).outputs.contains(x))
            .collect();
        for (i, c) in producers.iter().enumerate() {
            for s in &producers[i + 1..] {
                out.push(Witness::new(
                    [x.as_str(), c.as_str(), s.as_str(), l.as_str()],
                    format!("{x} is output by both {c} and {s} on {l}"),
                ));
            }
        }
    }
    out
}

/// No two distinct components of a common level both output `x`.
pub fn correct_composition_out(a: &Architecture, x: &ChannelId) -> Result<bool> {
    a.check_channel(x)?;
    Ok(composition_out_witnesses(a, x).is_empty())
}

fn composition_subcomp_witnesses(a: &Architecture, x: &ComponentId) -> Vec<Witness> {
    let mut out = Vec::new();
    for (l, members) in &a.levels {
        let parents: Vec<&ComponentId> = members
            .iter()
            .filter(|c| a.rec(c).subcomponents.contains(x))
            .collect();
        for (i, c) in parents.iter().enumerate() {
            for s in &parents[i + 1..] {
                out.push(Witness::new(
                    [x.as_str(), c.as_str(), s.as_str(), l.as_str()],
                    format!("{x} is a subcomponent of both {c} and {s} on {l}"),
                ));
            }
        }
    }
    out
}

pub fn correct_composition_subcomp(a: &Architecture, x: &ComponentId) -> Result<bool> {
    a.check_component(x)?;
    Ok(composition_subcomp_witnesses(a, x).is_empty())
}

fn unused_component_witnesses(a: &Architecture) -> Vec<Witness> {
    a.components()
        .filter(|c| !a.levels.values().any(|m| m.contains(*c)))
        .map(|c| Witness::new([c.as_str()], format!("{c} belongs to no level")))
        .collect()
}

pub fn all_components_used(a: &Architecture) -> bool {
    unused_component_witnesses(a).is_empty()
}

// ---------------------------------------------------------------------------
// Channel and variable dependency tables

fn outfromch_witnesses(a: &Architecture, x: &ChannelId) -> Vec<Witness> {
    let deps = &a.chan_from_ch[x];
    if deps.is_empty() {
        return Vec::new();
    }
    let found = a
        .components
        .values()
        .any(|r| r.outputs.contains(x) && deps.is_subset(&r.inputs));
    if found {
        Vec::new()
    } else {
        vec![Witness::new(
            [x.as_str()],
            format!(
                "no component outputs {x} and has all of {{{}}} as inputs",
                join(deps)
            ),
        )]
    }
}

pub fn outfromch_correct(a: &Architecture, x: &ChannelId) -> Result<bool> {
    a.check_channel(x)?;
    Ok(outfromch_witnesses(a, x).is_empty())
}

fn outfromv1_witnesses(a: &Architecture, x: &ChannelId) -> Vec<Witness> {
    let vars = &a.chan_from_var[x];
    if vars.is_empty() {
        return Vec::new();
    }
    let found = a
        .components
        .values()
        .any(|r| r.outputs.contains(x) && vars.is_subset(&r.vars));
    if found {
        Vec::new()
    } else {
        vec![Witness::new(
            [x.as_str()],
            format!(
                "no component outputs {x} and holds all of {{{}}}",
                join(vars)
            ),
        )]
    }
}

pub fn outfromv_correct1(a: &Architecture, x: &ChannelId) -> Result<bool> {
    a.check_channel(x)?;
    Ok(outfromv1_witnesses(a, x).is_empty())
}

fn outfromv2_witnesses(a: &Architecture, x: &ChannelId) -> Vec<Witness> {
    if !a.chan_from_var[x].is_empty() {
        return Vec::new();
    }
    a.var_to
        .iter()
        .filter(|(_, to)| to.contains(x))
        .map(|(v, _)| {
            Witness::new(
                [x.as_str(), v.as_str()],
                format!("{x} depends on no variable but var_to({v}) contains it"),
            )
        })
        .collect()
}

pub fn outfromv_correct2(a: &Architecture, x: &ChannelId) -> Result<bool> {
    a.check_channel(x)?;
    Ok(outfromv2_witnesses(a, x).is_empty())
}

fn varto_consistency_witnesses(a: &Architecture) -> Vec<Witness> {
    let mut out = Vec::new();
    for (x, vars) in &a.chan_from_var {
        for v in vars {
            if !a.var_to[v].contains(x) {
                out.push(Witness::new(
                    [x.as_str(), v.as_str()],
                    format!("chan_from_var({x}) contains {v} but var_to({v}) lacks {x}"),
                ));
            }
        }
    }
    for (v, chans) in &a.var_to {
        for x in chans {
            if !a.chan_from_var[x].contains(v) {
                out.push(Witness::new(
                    [x.as_str(), v.as_str()],
                    format!("var_to({v}) contains {x} but chan_from_var({x}) lacks {v}"),
                ));
            }
        }
    }
    out
}

/// `chan_from_var` and `var_to` describe the same relation.
pub fn outfromv_varto_consistent(a: &Architecture) -> bool {
    varto_consistency_witnesses(a).is_empty()
}

/// The two levels checked by [`varfrom_correct`] and [`varto_correct`]: the
/// first two in canonical order, or all levels when there are fewer.
pub fn default_variable_levels(a: &Architecture) -> Vec<LevelId> {
    a.level_ids().take(2).cloned().collect()
}

fn variable_channel_witnesses(a: &Architecture, levels: &[LevelId], to: bool) -> Vec<Witness> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for l in levels {
        for z in a.members(l) {
            if !seen.insert(z) {
                continue;
            }
            let rec = a.rec(z);
            let (iface, table, side) = if to {
                (&rec.outputs, &a.var_to, "output")
            } else {
                (&rec.inputs, &a.var_from, "input")
            };
            for v in &rec.vars {
                for x in table[v].difference(iface) {
                    out.push(Witness::new(
                        [z.as_str(), v.as_str(), x.as_str()],
                        format!("{z} holds {v} but {x} is not an {side} of {z}"),
                    ));
                }
            }
        }
    }
    out
}

fn check_levels(a: &Architecture, levels: &[LevelId]) -> Result<()> {
    levels
        .iter()
        .try_for_each(|l| a.lookup_level(l).map(|_| ()))
}

/// On the given levels, every channel a held variable is computed from is an
/// input of the holder.
pub fn varfrom_correct_on(a: &Architecture, levels: &[LevelId]) -> Result<bool> {
    check_levels(a, levels)?;
    Ok(variable_channel_witnesses(a, levels, false).is_empty())
}

pub fn varfrom_correct(a: &Architecture) -> bool {
    variable_channel_witnesses(a, &default_variable_levels(a), false).is_empty()
}

/// On the given levels, every channel a held variable feeds is an output of
/// the holder.
pub fn varto_correct_on(a: &Architecture, levels: &[LevelId]) -> Result<bool> {
    check_levels(a, levels)?;
    Ok(variable_channel_witnesses(a, levels, true).is_empty())
}

pub fn varto_correct(a: &Architecture) -> bool {
    variable_channel_witnesses(a, &default_variable_levels(a), true).is_empty()
}

fn var_useful_witnesses(a: &Architecture) -> Vec<Witness> {
    a.var_to
        .iter()
        .filter(|(_, to)| to.is_empty())
        .map(|(v, _)| Witness::new([v.as_str()], format!("{v} feeds no output channel")))
        .collect()
}

pub fn var_useful(a: &Architecture) -> bool {
    var_useful_witnesses(a).is_empty()
}

// ---------------------------------------------------------------------------
// Channel classification

fn consumed(a: &Architecture, x: &ChannelId, level: &LevelId) -> bool {
    a.members(level).iter().any(|c| a.rec(c).inputs.contains(x))
}

fn produced(a: &Architecture, x: &ChannelId, level: &LevelId) -> bool {
    a.members(level)
        .iter()
        .any(|c| a.rec(c).outputs.contains(x))
}

fn check_channel_level(a: &Architecture, x: &ChannelId, level: &LevelId) -> Result<()> {
    a.check_channel(x)?;
    a.lookup_level(level).map(|_| ())
}

pub fn is_system_in(a: &Architecture, x: &ChannelId, level: &LevelId) -> Result<bool> {
    check_channel_level(a, x, level)?;
    Ok(consumed(a, x, level) && !produced(a, x, level))
}

pub fn is_system_out(a: &Architecture, x: &ChannelId, level: &LevelId) -> Result<bool> {
    check_channel_level(a, x, level)?;
    Ok(!consumed(a, x, level) && produced(a, x, level))
}

pub fn is_system_local(a: &Architecture, x: &ChannelId, level: &LevelId) -> Result<bool> {
    check_channel_level(a, x, level)?;
    Ok(consumed(a, x, level) && produced(a, x, level))
}

pub fn classify_channel(a: &Architecture, x: &ChannelId, level: &LevelId) -> Result<ChannelClass> {
    check_channel_level(a, x, level)?;
    Ok(match (consumed(a, x, level), produced(a, x, level)) {
        (true, false) => ChannelClass::SystemIn,
        (false, true) => ChannelClass::SystemOut,
        (true, true) => ChannelClass::Local,
        (false, false) => ChannelClass::Unused,
    })
}

/// Classification of every declared channel on `level`.
pub fn classify_level(
    a: &Architecture,
    level: &LevelId,
) -> Result<BTreeMap<ChannelId, ChannelClass>> {
    a.lookup_level(level)?;
    a.channels()
        .iter()
        .map(|x| classify_channel(a, x, level).map(|k| (x.clone(), k)))
        .collect()
}

fn class_exclusivity_witnesses(a: &Architecture) -> Vec<Witness> {
    let mut out = Vec::new();
    for l in a.level_ids() {
        for x in a.channels() {
            let flags = [
                is_system_in(a, x, l).unwrap_or(false),
                is_system_out(a, x, l).unwrap_or(false),
                is_system_local(a, x, l).unwrap_or(false),
            ];
            let class = classify_channel(a, x, l).ok();
            let expected = match flags {
                [true, false, false] => Some(ChannelClass::SystemIn),
                [false, true, false] => Some(ChannelClass::SystemOut),
                [false, false, true] => Some(ChannelClass::Local),
                [false, false, false] => Some(ChannelClass::Unused),
                _ => None,
            };
            if expected.is_none() || expected != class {
                out.push(Witness::new(
                    [x.as_str(), l.as_str()],
                    format!("{x} has an ambiguous classification on {l}"),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// Evaluates every predicate over the whole model.
pub fn validate_all(a: &Architecture) -> ValidationReport {
    let per_component = |f: fn(&Architecture, &ComponentId) -> Vec<Witness>| {
        a.components().flat_map(|c| f(a, c)).collect::<Vec<_>>()
    };
    let per_channel = |f: fn(&Architecture, &ChannelId) -> Vec<Witness>| {
        a.channels()
            .iter()
            .flat_map(|x| f(a, x))
            .collect::<Vec<_>>()
    };
    let var_levels = default_variable_levels(a);

    let mut verdicts = BTreeMap::new();
    for p in Predicate::ALL {
        let ws = match p {
            Predicate::CorrectCompositionDiffLevels => per_component(diff_levels_witnesses),
            Predicate::CorrectCompositionVar => per_component(composition_var_witnesses),
            Predicate::CorrectDecompositionVar => per_component(decomposition_var_witnesses),
            Predicate::CorrectCompositionOut => per_channel(composition_out_witnesses),
            Predicate::CorrectCompositionSubcomp => per_component(composition_subcomp_witnesses),
            Predicate::AllComponentsUsed => unused_component_witnesses(a),
            Predicate::OutFromChCorrect => per_channel(outfromch_witnesses),
            Predicate::OutFromVarCorrect1 => per_channel(outfromv1_witnesses),
            Predicate::OutFromVarCorrect2 => per_channel(outfromv2_witnesses),
            Predicate::OutFromVarVarToConsistent => varto_consistency_witnesses(a),
            Predicate::VarFromCorrect => variable_channel_witnesses(a, &var_levels, false),
            Predicate::VarToCorrect => variable_channel_witnesses(a, &var_levels, true),
            Predicate::VarUseful => var_useful_witnesses(a),
            Predicate::ChannelClassesExclusive => class_exclusivity_witnesses(a),
        };
        verdicts.insert(p, Verdict::from_witnesses(ws));
    }
    ValidationReport { verdicts }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::case_study_fixture;
    use crate::model::ArchitectureBuilder;

    fn fx() -> Architecture {
        case_study_fixture()
    }

    fn mutate(f: impl FnOnce(&mut ArchitectureBuilder)) -> Architecture {
        let mut b = fx().to_builder();
        f(&mut b);
        b.build().unwrap()
    }

    fn c(s: &str) -> ComponentId {
        s.into()
    }

    fn x(s: &str) -> ChannelId {
        s.into()
    }

    fn l(s: &str) -> LevelId {
        s.into()
    }

    #[test]
    fn diff_levels() {
        assert!(correct_composition_diff_levels(&fx(), &c("sA1")).unwrap());
        assert!(correct_composition_diff_levels(&fx(), &c("sA5")).unwrap());
        let a = mutate(|b| {
            b.level("level0").insert("sA11".into());
        });
        assert!(!correct_composition_diff_levels(&a, &c("sA1")).unwrap());
        assert!(correct_composition_diff_levels(&fx(), &c("nope")).is_err());
    }

    #[test]
    fn composition_var() {
        assert!(correct_composition_var(&fx(), &c("sS6")).unwrap());
        assert!(correct_composition_var(&fx(), &c("sA5")).unwrap());
        let a = mutate(|b| {
            b.component("sS6").vars.remove("stA2");
        });
        assert!(!correct_composition_var(&a, &c("sS6")).unwrap());
    }

    #[test]
    fn decomposition_var() {
        for comp in fx().components() {
            assert!(correct_decomposition_var(&fx(), comp).unwrap(), "{comp}");
        }
        let a = mutate(|b| {
            b.component("sA31").vars.insert("stA2".into());
        });
        assert!(!correct_decomposition_var(&a, &c("sS6")).unwrap());
    }

    #[test]
    fn composition_out() {
        assert!(correct_composition_out(&fx(), &x("data2")).unwrap());
        let a = mutate(|b| {
            b.declare_channel("lonely");
        });
        assert!(correct_composition_out(&a, &x("lonely")).unwrap());
        let a = mutate(|b| {
            b.component("sA3").outputs.insert("data2".into());
        });
        assert!(!correct_composition_out(&a, &x("data2")).unwrap());
    }

    #[test]
    fn composition_subcomp() {
        assert!(correct_composition_subcomp(&fx(), &c("sA22")).unwrap());
        assert!(correct_composition_subcomp(&fx(), &c("sA1")).unwrap());
        let a = mutate(|b| {
            b.component("sS4").subcomponents.insert("sA22".into());
        });
        assert!(!correct_composition_subcomp(&a, &c("sA22")).unwrap());
    }

    #[test]
    fn components_used() {
        assert!(all_components_used(&fx()));
        assert!(all_components_used(&Architecture::default()));
        let a = mutate(|b| {
            b.component("sFresh");
        });
        assert!(!all_components_used(&a));
    }

    #[test]
    fn outfromch() {
        assert!(outfromch_correct(&fx(), &x("data2")).unwrap());
        assert!(outfromch_correct(&fx(), &x("data1")).unwrap());
        let a = mutate(|b| {
            *b.chan_from_ch("data10") = [x("data5")].into();
        });
        assert!(!outfromch_correct(&a, &x("data10")).unwrap());
    }

    #[test]
    fn outfromv1() {
        assert!(outfromv_correct1(&fx(), &x("data3")).unwrap());
        assert!(outfromv_correct1(&fx(), &x("data1")).unwrap());
        let a = mutate(|b| {
            *b.chan_from_var("data9") = ["stA1".into()].into();
        });
        assert!(!outfromv_correct1(&a, &x("data9")).unwrap());
    }

    #[test]
    fn outfromv2() {
        for ch in fx().channels() {
            assert!(outfromv_correct2(&fx(), ch).unwrap());
        }
        let a = mutate(|b| {
            b.var_to("stA1").insert("data9".into());
        });
        assert!(!outfromv_correct2(&a, &x("data9")).unwrap());
        // Nonempty chan_from_var makes the predicate vacuous.
        assert!(outfromv_correct2(&a, &x("data10")).unwrap());
    }

    #[test]
    fn varto_consistency() {
        assert!(outfromv_varto_consistent(&fx()));
        assert!(outfromv_varto_consistent(&Architecture::default()));
        let a = mutate(|b| {
            b.var_to("stA2").remove("data4");
        });
        assert!(!outfromv_varto_consistent(&a));
    }

    #[test]
    fn variable_channels() {
        assert!(varfrom_correct(&fx()));
        assert!(varto_correct(&fx()));
        assert_eq!(
            default_variable_levels(&fx()),
            vec![l("level0"), l("level1")]
        );
        let a = mutate(|b| {
            b.var_from("stA1").insert("data3".into());
        });
        assert!(!varfrom_correct(&a));
        assert!(varto_correct(&a));
        // On level2 and level3 the variable holders are composed components,
        // which do not expose internal channels.
        assert!(varfrom_correct_on(&fx(), &[l("level2")]).is_ok());
        assert!(varfrom_correct_on(&fx(), &[l("nowhere")]).is_err());
    }

    #[test]
    fn useful_vars() {
        assert!(var_useful(&fx()));
        assert!(var_useful(&Architecture::default()));
        let a = mutate(|b| {
            b.declare_variable("stX");
        });
        assert!(!var_useful(&a));
    }

    #[test]
    fn classification() {
        let a = fx();
        assert_eq!(
            classify_channel(&a, &x("data1"), &l("level2")).unwrap(),
            ChannelClass::SystemIn
        );
        assert_eq!(
            classify_channel(&a, &x("data2"), &l("level0")).unwrap(),
            ChannelClass::Local
        );
        assert_eq!(
            classify_channel(&a, &x("data9"), &l("level0")).unwrap(),
            ChannelClass::SystemOut
        );
        // data4 is internal to sS4opt on level3.
        assert_eq!(
            classify_channel(&a, &x("data4"), &l("level3")).unwrap(),
            ChannelClass::Unused
        );
        assert!(classify_channel(&a, &x("data1"), &l("level7")).is_err());
        assert_eq!(classify_level(&a, &l("level0")).unwrap().len(), 24);
    }

    #[test]
    fn fixture_validates() {
        let report = validate_all(&fx());
        assert_eq!(report.verdicts.len(), Predicate::ALL.len());
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn empty_validates() {
        assert!(validate_all(&Architecture::default()).all_hold());
    }

    type Mutation = Box<dyn FnOnce(&mut ArchitectureBuilder)>;

    #[test]
    fn each_mutation_flips_only_its_predicate() {
        use Predicate::*;
        let cases: Vec<(Vec<Predicate>, Mutation)> = vec![
            (
                vec![CorrectCompositionDiffLevels],
                Box::new(|b| {
                    b.component("sA1").subcomponents.insert("sA3".into());
                }),
            ),
            (
                vec![CorrectCompositionVar],
                Box::new(|b| {
                    b.component("sS1opt").vars.clear();
                }),
            ),
            (
                vec![CorrectDecompositionVar],
                Box::new(|b| {
                    b.component("sA1").subcomponents.insert("sS1".into());
                }),
            ),
            (
                vec![CorrectCompositionOut],
                Box::new(|b| {
                    b.component("sS10").outputs.insert("data20".into());
                }),
            ),
            (
                vec![CorrectCompositionSubcomp],
                Box::new(|b| {
                    b.component("sS13").subcomponents.insert("sA91".into());
                }),
            ),
            (
                vec![AllComponentsUsed],
                Box::new(|b| {
                    b.component("sFresh");
                }),
            ),
            (
                vec![OutFromChCorrect],
                Box::new(|b| {
                    *b.chan_from_ch("data10") = ["data5".into()].into();
                }),
            ),
            (
                vec![OutFromVarCorrect1],
                Box::new(|b| {
                    b.chan_from_var("data9").insert("stX".into());
                    b.var_to("stX").insert("data9".into());
                }),
            ),
            (
                // A stray var_to entry for a channel without variable sources
                // is always also a table inconsistency.
                vec![OutFromVarCorrect2, OutFromVarVarToConsistent],
                Box::new(|b| {
                    b.var_to("stY").insert("data14".into());
                }),
            ),
            (
                vec![OutFromVarVarToConsistent],
                Box::new(|b| {
                    b.var_to("stA6").remove("data16");
                }),
            ),
            (
                vec![VarFromCorrect],
                Box::new(|b| {
                    b.var_from("stA6").insert("data13".into());
                }),
            ),
            (
                vec![VarToCorrect],
                Box::new(|b| {
                    b.component("sS9").outputs.insert("data25".into());
                    b.var_to("stA6").insert("data25".into());
                    b.chan_from_var("data25").insert("stA6".into());
                }),
            ),
            (
                vec![VarUseful],
                Box::new(|b| {
                    b.declare_variable("stX");
                }),
            ),
        ];
        for (expected, m) in cases {
            let a = mutate(m);
            let report = validate_all(&a);
            let violated: Vec<Predicate> = report.violated().collect();
            assert_eq!(violated, expected, "{report}");
            for p in expected {
                assert!(!report.verdict(p).witnesses().is_empty());
            }
        }
    }

    #[test]
    fn report_json_has_one_member_per_predicate() {
        let report = validate_all(&fx());
        let v = serde_json::to_value(&report).unwrap();
        let obj = v.as_object().unwrap();
        assert_eq!(obj.len(), Predicate::ALL.len());
        assert_eq!(obj["var_useful"]["holds"], serde_json::Value::Bool(true));
    }
}
