//! The architecture data model.
//!
//! An [`Architecture`] is an immutable snapshot of a layered component model:
//! the interface of every component (input and output channels, local
//! variables, subcomponents), the component sets of each abstraction level,
//! the channel and variable dependency tables, and the upload-cost and
//! performance markings used by the optimisation passes.
//!
//! Architectures are assembled with an [`ArchitectureBuilder`]. The builder
//! follows the same declaration rules as the document format:
//!
//! * component names are declared by creating a component entry;
//! * channel names are declared by appearing in some component's inputs or
//!   outputs, or as a key of `chan_from_ch` / `chan_from_var`;
//! * variable names are declared by appearing in some component's variables,
//!   or as a key of `var_from` / `var_to`;
//! * level names are declared by creating a level entry.
//!
//! Every other position (subcomponent lists, level members, table values, the
//! high-load and high-performance sets) only references names, and
//! [`ArchitectureBuilder::build`] rejects references to undeclared names.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{EntityKind, Error, Result};

macro_rules! identifier {
    ($(#[$meta:meta])* $name:ident, $kind:expr) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(name: impl Into<String>) -> Self {
                $name(name.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            const KIND: EntityKind = $kind;
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl AsRef<str> for $name {
            fn as_ref(&self) -> &str {
                &self.0
            }
        }
    };
}

identifier!(
    /// Name of a component.
    ComponentId,
    EntityKind::Component
);
identifier!(
    /// Name of a data channel.
    ChannelId,
    EntityKind::Channel
);
identifier!(
    /// Name of a component-local variable.
    VariableId,
    EntityKind::Variable
);
identifier!(
    /// Name of an abstraction level.
    LevelId,
    EntityKind::Level
);

pub type ComponentSet = BTreeSet<ComponentId>;
pub type ChannelSet = BTreeSet<ChannelId>;
pub type VariableSet = BTreeSet<VariableId>;

/// Components a component depends on (transitively or directly) on one level.
pub type SourceSet = ComponentSet;
/// Components depending on a component on one level.
pub type AccSet = ComponentSet;

/// Interface and decomposition of a single component.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    #[serde(rename = "in", default)]
    pub inputs: ChannelSet,
    #[serde(rename = "out", default)]
    pub outputs: ChannelSet,
    #[serde(rename = "var", default)]
    pub vars: VariableSet,
    #[serde(rename = "subcomp", default)]
    pub subcomponents: ComponentSet,
}

/// A validated, normalised architecture.
///
/// All tables are total over their universes: every declared channel has a
/// (possibly empty) `chan_from_ch` and `chan_from_var` entry, every declared
/// variable a `var_from` and `var_to` entry. The subcomponent relation is
/// acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Architecture {
    pub(crate) components: BTreeMap<ComponentId, ComponentRecord>,
    pub(crate) channels: ChannelSet,
    pub(crate) variables: VariableSet,
    pub(crate) levels: BTreeMap<LevelId, ComponentSet>,
    pub(crate) chan_from_ch: BTreeMap<ChannelId, ChannelSet>,
    pub(crate) chan_from_var: BTreeMap<ChannelId, VariableSet>,
    pub(crate) var_from: BTreeMap<VariableId, ChannelSet>,
    pub(crate) var_to: BTreeMap<VariableId, ChannelSet>,
    pub(crate) highload_channels: ChannelSet,
    pub(crate) highperf_components: ComponentSet,
}

impl Architecture {
    pub fn builder() -> ArchitectureBuilder {
        ArchitectureBuilder::default()
    }

    /// A builder pre-populated with every table of this architecture.
    pub fn to_builder(&self) -> ArchitectureBuilder {
        ArchitectureBuilder {
            components: self.components.clone(),
            levels: self.levels.clone(),
            chan_from_ch: self.chan_from_ch.clone(),
            chan_from_var: self.chan_from_var.clone(),
            var_from: self.var_from.clone(),
            var_to: self.var_to.clone(),
            highload_channels: self.highload_channels.clone(),
            highperf_components: self.highperf_components.clone(),
        }
    }

    pub fn components(&self) -> impl Iterator<Item = &ComponentId> + '_ {
        self.components.keys()
    }

    pub fn component_records(&self) -> impl Iterator<Item = (&ComponentId, &ComponentRecord)> + '_ {
        self.components.iter()
    }

    pub fn channels(&self) -> &ChannelSet {
        &self.channels
    }

    pub fn variables(&self) -> &VariableSet {
        &self.variables
    }

    /// Level identifiers in canonical (lexicographic) order.
    pub fn level_ids(&self) -> impl Iterator<Item = &LevelId> + '_ {
        self.levels.keys()
    }

    pub fn levels(&self) -> &BTreeMap<LevelId, ComponentSet> {
        &self.levels
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn has_component(&self, c: &str) -> bool {
        self.components.contains_key(c)
    }

    pub fn has_channel(&self, x: &str) -> bool {
        self.channels.contains(x)
    }

    pub fn has_level(&self, l: &str) -> bool {
        self.levels.contains_key(l)
    }

    pub fn component(&self, c: &ComponentId) -> Result<&ComponentRecord> {
        self.components
            .get(c)
            .ok_or_else(|| Error::unknown(EntityKind::Component, c.as_str()))
    }

    pub fn lookup_in(&self, c: &ComponentId) -> Result<&ChannelSet> {
        self.component(c).map(|r| &r.inputs)
    }

    pub fn lookup_out(&self, c: &ComponentId) -> Result<&ChannelSet> {
        self.component(c).map(|r| &r.outputs)
    }

    pub fn lookup_var(&self, c: &ComponentId) -> Result<&VariableSet> {
        self.component(c).map(|r| &r.vars)
    }

    pub fn lookup_subcomp(&self, c: &ComponentId) -> Result<&ComponentSet> {
        self.component(c).map(|r| &r.subcomponents)
    }

    pub fn lookup_level(&self, l: &LevelId) -> Result<&ComponentSet> {
        self.levels
            .get(l)
            .ok_or_else(|| Error::unknown(EntityKind::Level, l.as_str()))
    }

    pub fn chan_from_ch(&self, x: &ChannelId) -> Result<&ChannelSet> {
        self.chan_from_ch
            .get(x)
            .ok_or_else(|| Error::unknown(EntityKind::Channel, x.as_str()))
    }

    pub fn chan_from_var(&self, x: &ChannelId) -> Result<&VariableSet> {
        self.chan_from_var
            .get(x)
            .ok_or_else(|| Error::unknown(EntityKind::Channel, x.as_str()))
    }

    pub fn var_from(&self, v: &VariableId) -> Result<&ChannelSet> {
        self.var_from
            .get(v)
            .ok_or_else(|| Error::unknown(EntityKind::Variable, v.as_str()))
    }

    pub fn var_to(&self, v: &VariableId) -> Result<&ChannelSet> {
        self.var_to
            .get(v)
            .ok_or_else(|| Error::unknown(EntityKind::Variable, v.as_str()))
    }

    pub fn highload_channels(&self) -> &ChannelSet {
        &self.highload_channels
    }

    pub fn highperf_components(&self) -> &ComponentSet {
        &self.highperf_components
    }

    pub(crate) fn check_component(&self, c: &ComponentId) -> Result<()> {
        self.component(c).map(|_| ())
    }

    pub(crate) fn check_channel(&self, x: &ChannelId) -> Result<()> {
        if self.channels.contains(x) {
            Ok(())
        } else {
            Err(Error::unknown(EntityKind::Channel, x.as_str()))
        }
    }

    pub(crate) fn check_channels<'a>(
        &self,
        xs: impl IntoIterator<Item = &'a ChannelId>,
    ) -> Result<()> {
        xs.into_iter().try_for_each(|x| self.check_channel(x))
    }

    // Internal accessors for already-checked identifiers.

    pub(crate) fn rec(&self, c: &ComponentId) -> &ComponentRecord {
        &self.components[c]
    }

    pub(crate) fn members(&self, l: &LevelId) -> &ComponentSet {
        &self.levels[l]
    }
}

/// Mutable staging area for an [`Architecture`].
#[derive(Debug, Clone, Default)]
pub struct ArchitectureBuilder {
    components: BTreeMap<ComponentId, ComponentRecord>,
    levels: BTreeMap<LevelId, ComponentSet>,
    chan_from_ch: BTreeMap<ChannelId, ChannelSet>,
    chan_from_var: BTreeMap<ChannelId, VariableSet>,
    var_from: BTreeMap<VariableId, ChannelSet>,
    var_to: BTreeMap<VariableId, ChannelSet>,
    highload_channels: ChannelSet,
    highperf_components: ComponentSet,
}

impl ArchitectureBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// The record of `c`, declaring the component if needed.
    pub fn component(&mut self, c: impl Into<ComponentId>) -> &mut ComponentRecord {
        self.components.entry(c.into()).or_default()
    }

    /// Removes a component declaration. References to it elsewhere are left
    /// in place and will be reported by [`build`](Self::build).
    pub fn remove_component(&mut self, c: &str) -> Option<ComponentRecord> {
        self.components.remove(c)
    }

    /// The member set of level `l`, declaring the level if needed.
    pub fn level(&mut self, l: impl Into<LevelId>) -> &mut ComponentSet {
        self.levels.entry(l.into()).or_default()
    }

    pub fn chan_from_ch(&mut self, x: impl Into<ChannelId>) -> &mut ChannelSet {
        self.chan_from_ch.entry(x.into()).or_default()
    }

    pub fn chan_from_var(&mut self, x: impl Into<ChannelId>) -> &mut VariableSet {
        self.chan_from_var.entry(x.into()).or_default()
    }

    pub fn var_from(&mut self, v: impl Into<VariableId>) -> &mut ChannelSet {
        self.var_from.entry(v.into()).or_default()
    }

    pub fn var_to(&mut self, v: impl Into<VariableId>) -> &mut ChannelSet {
        self.var_to.entry(v.into()).or_default()
    }

    /// Declares a channel without attaching it to any component.
    pub fn declare_channel(&mut self, x: impl Into<ChannelId>) -> &mut Self {
        let x = x.into();
        self.chan_from_ch.entry(x.clone()).or_default();
        self.chan_from_var.entry(x).or_default();
        self
    }

    /// Declares a variable without attaching it to any component.
    pub fn declare_variable(&mut self, v: impl Into<VariableId>) -> &mut Self {
        let v = v.into();
        self.var_from.entry(v.clone()).or_default();
        self.var_to.entry(v).or_default();
        self
    }

    pub fn highload_channels(&mut self) -> &mut ChannelSet {
        &mut self.highload_channels
    }

    pub fn highperf_components(&mut self) -> &mut ComponentSet {
        &mut self.highperf_components
    }

    /// Checks every reference, normalises the tables and freezes the model.
    pub fn build(self) -> Result<Architecture> {
        let ArchitectureBuilder {
            components,
            levels,
            mut chan_from_ch,
            mut chan_from_var,
            mut var_from,
            mut var_to,
            highload_channels,
            highperf_components,
        } = self;

        let mut channels = ChannelSet::new();
        let mut variables = VariableSet::new();
        for rec in components.values() {
            channels.extend(rec.inputs.iter().cloned());
            channels.extend(rec.outputs.iter().cloned());
            variables.extend(rec.vars.iter().cloned());
        }
        channels.extend(chan_from_ch.keys().cloned());
        channels.extend(chan_from_var.keys().cloned());
        variables.extend(var_from.keys().cloned());
        variables.extend(var_to.keys().cloned());

        for c in components.keys() {
            check_token(c)?;
        }
        for x in &channels {
            check_token(x)?;
        }
        for v in &variables {
            check_token(v)?;
        }
        for l in levels.keys() {
            check_token(l)?;
        }

        let component_ref = |c: &ComponentId, ctx: &dyn Fn() -> String| -> Result<()> {
            if components.contains_key(c) {
                Ok(())
            } else {
                Err(Error::unknown_in(EntityKind::Component, c.as_str(), ctx()))
            }
        };
        let channel_ref = |x: &ChannelId, ctx: &dyn Fn() -> String| -> Result<()> {
            if channels.contains(x) {
                Ok(())
            } else {
                Err(Error::unknown_in(EntityKind::Channel, x.as_str(), ctx()))
            }
        };
        let variable_ref = |v: &VariableId, ctx: &dyn Fn() -> String| -> Result<()> {
            if variables.contains(v) {
                Ok(())
            } else {
                Err(Error::unknown_in(EntityKind::Variable, v.as_str(), ctx()))
            }
        };

        for (c, rec) in &components {
            for s in &rec.subcomponents {
                component_ref(s, &|| format!("components.{c}.subcomp"))?;
            }
        }
        for (l, members) in &levels {
            for c in members {
                component_ref(c, &|| format!("levels.{l}"))?;
            }
        }
        for (x, deps) in &chan_from_ch {
            for y in deps {
                channel_ref(y, &|| format!("chan_from_ch.{x}"))?;
            }
        }
        for (x, vars) in &chan_from_var {
            for v in vars {
                variable_ref(v, &|| format!("chan_from_var.{x}"))?;
            }
        }
        for (v, chans) in &var_from {
            for x in chans {
                channel_ref(x, &|| format!("var_from.{v}"))?;
            }
        }
        for (v, chans) in &var_to {
            for x in chans {
                channel_ref(x, &|| format!("var_to.{v}"))?;
            }
        }
        for x in &highload_channels {
            channel_ref(x, &|| "highload_channels".to_owned())?;
        }
        for c in &highperf_components {
            component_ref(c, &|| "highperf_components".to_owned())?;
        }

        check_subcomponents_acyclic(&components)?;

        for x in &channels {
            chan_from_ch.entry(x.clone()).or_default();
            chan_from_var.entry(x.clone()).or_default();
        }
        for v in &variables {
            var_from.entry(v.clone()).or_default();
            var_to.entry(v.clone()).or_default();
        }

        Ok(Architecture {
            components,
            channels,
            variables,
            levels,
            chan_from_ch,
            chan_from_var,
            var_from,
            var_to,
            highload_channels,
            highperf_components,
        })
    }
}

trait Token: AsRef<str> {
    const KIND: EntityKind;
}

macro_rules! token {
    ($($t:ty),*) => {$(
        impl Token for $t {
            const KIND: EntityKind = <$t>::KIND;
        }
    )*};
}
token!(ComponentId, ChannelId, VariableId, LevelId);

fn check_token<T: Token>(id: &T) -> Result<()> {
    let s = id.as_ref();
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(Error::InvalidIdentifier {
            kind: T::KIND,
            name: s.to_owned(),
        });
    }
    Ok(())
}

/// Iterative three-colour DFS over the subcomponent relation.
fn check_subcomponents_acyclic(components: &BTreeMap<ComponentId, ComponentRecord>) -> Result<()> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Fresh,
        Active,
        Done,
    }
    let mut marks: BTreeMap<&ComponentId, Mark> =
        components.keys().map(|c| (c, Mark::Fresh)).collect();

    for root in components.keys() {
        if marks[root] != Mark::Fresh {
            continue;
        }
        let mut stack: Vec<(
            &ComponentId,
            std::collections::btree_set::Iter<'_, ComponentId>,
        )> = vec![(root, components[root].subcomponents.iter())];
        marks.insert(root, Mark::Active);
        while let Some((node, children)) = stack.last_mut() {
            match children.next() {
                Some(child) => match marks[child] {
                    Mark::Fresh => {
                        marks.insert(child, Mark::Active);
                        stack.push((child, components[child].subcomponents.iter()));
                    }
                    Mark::Active => {
                        let start = stack.iter().position(|(n, _)| *n == child).unwrap_or(0);
                        let mut path: Vec<String> =
                            stack[start..].iter().map(|(n, _)| n.to_string()).collect();
                        path.push(child.to_string());
                        return Err(Error::SubcomponentCycle { path });
                    }
                    Mark::Done => {}
                },
                None => {
                    marks.insert(node, Mark::Done);
                    stack.pop();
                }
            }
        }
    }
    Ok(())
}
