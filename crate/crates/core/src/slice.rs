//! The part of a level needed to check a property over a set of channels.

use serde::Serialize;

use crate::deps::level_graph;
use crate::error::Result;
use crate::model::{Architecture, ChannelSet, ComponentSet, LevelId};
use crate::validate::{classify_channel, ChannelClass};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub level: LevelId,
    pub property_channels: ChannelSet,
    pub out_components: ComponentSet,
    pub min_components: ComponentSet,
    pub no_irrelevant: bool,
    pub all_needed: bool,
    pub system_inputs_in_property: ChannelSet,
}

impl SliceReport {
    pub fn holds(&self) -> bool {
        self.no_irrelevant && self.all_needed
    }
}

fn check(a: &Architecture, level: &LevelId, chset: &ChannelSet) -> Result<()> {
    a.lookup_level(level)?;
    a.check_channels(chset)
}

fn touching(a: &Architecture, level: &LevelId, chset: &ChannelSet, inputs: bool) -> ComponentSet {
    a.members(level)
        .iter()
        .filter(|c| {
            let rec = a.rec(c);
            let iface = if inputs { &rec.inputs } else { &rec.outputs };
            !iface.is_disjoint(chset)
        })
        .cloned()
        .collect()
}

/// Level components consuming at least one channel of `chset`.
pub fn in_set_of_components(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
) -> Result<ComponentSet> {
    check(a, level, chset)?;
    Ok(touching(a, level, chset, true))
}

/// Level components producing at least one channel of `chset`.
pub fn out_set_of_components(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
) -> Result<ComponentSet> {
    check(a, level, chset)?;
    Ok(touching(a, level, chset, false))
}

fn min_set(a: &Architecture, level: &LevelId, out: &ComponentSet) -> Result<ComponentSet> {
    let g = level_graph(a, level)?;
    let mut all = out.clone();
    for c in out {
        all.extend(g.sources(c));
    }
    Ok(all)
}

/// The producers of `chset` together with all their sources on the level.
pub fn min_set_of_components(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
) -> Result<ComponentSet> {
    let out = out_set_of_components(a, level, chset)?;
    min_set(a, level, &out)
}

fn is_system_in(a: &Architecture, level: &LevelId, x: &crate::model::ChannelId) -> bool {
    matches!(classify_channel(a, x, level), Ok(ChannelClass::SystemIn))
}

fn irrelevant_free(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
    min: &ComponentSet,
) -> bool {
    chset
        .iter()
        .all(|x| !is_system_in(a, level, x) || min.iter().any(|z| a.rec(z).inputs.contains(x)))
}

fn needed_present(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
    min: &ComponentSet,
) -> bool {
    min.iter().all(|z| {
        a.rec(z)
            .inputs
            .iter()
            .any(|x| !is_system_in(a, level, x) || chset.contains(x))
    })
}

/// Every system input named by the property is read by some component of
/// the minimal set.
pub fn no_irrelevant_channels(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
) -> Result<bool> {
    let min = min_set_of_components(a, level, chset)?;
    Ok(irrelevant_free(a, level, chset, &min))
}

/// Every component of the minimal set has an input that is either internal
/// to the level or named by the property.
pub fn all_needed_in_channels(
    a: &Architecture,
    level: &LevelId,
    chset: &ChannelSet,
) -> Result<bool> {
    let min = min_set_of_components(a, level, chset)?;
    Ok(needed_present(a, level, chset, &min))
}

pub fn slice_report(a: &Architecture, level: &LevelId, chset: &ChannelSet) -> Result<SliceReport> {
    let out = out_set_of_components(a, level, chset)?;
    let min = min_set(a, level, &out)?;
    Ok(SliceReport {
        level: level.clone(),
        property_channels: chset.clone(),
        no_irrelevant: irrelevant_free(a, level, chset, &min),
        all_needed: needed_present(a, level, chset, &min),
        system_inputs_in_property: chset
            .iter()
            .filter(|x| is_system_in(a, level, x))
            .cloned()
            .collect(),
        out_components: out,
        min_components: min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{EntityKind, Error};
    use crate::fixture::case_study_fixture;

    fn chs(items: &[&str]) -> ChannelSet {
        items.iter().map(|s| (*s).into()).collect()
    }

    fn comps(items: &[&str]) -> ComponentSet {
        items.iter().map(|s| (*s).into()).collect()
    }

    #[test]
    fn in_sets() {
        let a = case_study_fixture();
        let l2 = "level2".into();
        assert_eq!(
            in_set_of_components(&a, &l2, &chs(&["data1"])).unwrap(),
            comps(&["sS1", "sS2"])
        );
        assert!(in_set_of_components(&a, &l2, &chs(&[])).unwrap().is_empty());
        assert_eq!(
            in_set_of_components(&a, &"level0".into(), &chs(&["data13"])).unwrap(),
            comps(&["sA4"])
        );
    }

    #[test]
    fn out_sets() {
        let a = case_study_fixture();
        assert_eq!(
            out_set_of_components(&a, &"level2".into(), &chs(&["data10", "data13"])).unwrap(),
            comps(&["sS1"])
        );
        assert_eq!(
            out_set_of_components(&a, &"level1".into(), &chs(&["data1", "data10", "data11"]))
                .unwrap(),
            comps(&["sA12", "sA21"])
        );
    }

    #[test]
    fn min_sets() {
        let a = case_study_fixture();
        let cases: [(&str, &[&str], &[&str]); 4] = [
            ("level2", &["data10", "data13"], &["sS1"]),
            (
                "level2",
                &["data1", "data12"],
                &["sS2", "sS4", "sS5", "sS6"],
            ),
            (
                "level1",
                &["data1", "data10", "data11"],
                &["sA11", "sA12", "sA21"],
            ),
            (
                "level2",
                &["data1", "data10", "data11"],
                &["sS1", "sS2", "sS3"],
            ),
        ];
        for (l, ch, want) in cases {
            assert_eq!(
                min_set_of_components(&a, &l.into(), &chs(ch)).unwrap(),
                comps(want),
                "{l} {ch:?}"
            );
        }
    }

    #[test]
    fn verdicts() {
        let a = case_study_fixture();
        let cases: [(&str, &[&str], bool, bool); 4] = [
            ("level2", &["data10", "data13"], false, false),
            ("level2", &["data1", "data12"], true, true),
            ("level1", &["data1", "data10", "data11"], true, true),
            ("level2", &["data1", "data10", "data11"], true, true),
        ];
        for (l, ch, irr, needed) in cases {
            let l: LevelId = l.into();
            assert_eq!(
                no_irrelevant_channels(&a, &l, &chs(ch)).unwrap(),
                irr,
                "{l} {ch:?}"
            );
            assert_eq!(
                all_needed_in_channels(&a, &l, &chs(ch)).unwrap(),
                needed,
                "{l} {ch:?}"
            );
        }
    }

    #[test]
    fn report() {
        let a = case_study_fixture();
        let r = slice_report(&a, &"level2".into(), &chs(&["data1", "data12"])).unwrap();
        assert_eq!(r.min_components, comps(&["sS2", "sS4", "sS5", "sS6"]));
        assert!(r.holds());
        assert_eq!(r.system_inputs_in_property, chs(&["data1"]));

        let r = slice_report(&a, &"level2".into(), &chs(&[])).unwrap();
        assert!(r.out_components.is_empty() && r.min_components.is_empty());
        assert!(r.no_irrelevant && r.all_needed);

        let r = slice_report(&a, &"level2".into(), &chs(&["data10", "data13"])).unwrap();
        assert_eq!(r.min_components, comps(&["sS1"]));
        assert!(!r.no_irrelevant && !r.all_needed);
    }

    #[test]
    fn undeclared_channel_is_an_error() {
        let a = case_study_fixture();
        let err = slice_report(&a, &"level2".into(), &chs(&["data99"])).unwrap_err();
        assert!(matches!(
            err,
            Error::UnknownIdentifier {
                kind: EntityKind::Channel,
                ..
            }
        ));
        assert!(slice_report(&a, &"levelX".into(), &chs(&[])).is_err());
    }
}
