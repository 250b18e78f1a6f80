//! Data-dependency analysis for layered component architectures.
//!
//! An [`Architecture`] describes components with input and output channels,
//! local variables and subcomponents, grouped into abstraction levels. The
//! modules below validate such a model, compute direct and transitive
//! dependencies, slice it for a property, classify elementary components and
//! derive optimised levels.

pub mod deps;
pub mod elementary;
pub mod error;
pub mod fixture;
pub mod generate;
pub mod ingest;
pub mod model;
pub mod optimize;
pub mod slice;
pub mod validate;

pub use error::{EntityKind, Error, Result};
pub use fixture::{case_study_document, case_study_fixture};
pub use ingest::{parse, serialize};
pub use model::{
    AccSet, Architecture, ArchitectureBuilder, ChannelId, ChannelSet, ComponentId, ComponentRecord,
    ComponentSet, LevelId, SourceSet, VariableId, VariableSet,
};
