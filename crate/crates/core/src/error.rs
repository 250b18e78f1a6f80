use std::fmt;

use thiserror::Error;

/// The kind of entity an identifier names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Component,
    Channel,
    Variable,
    Level,
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntityKind::Component => "component",
            EntityKind::Channel => "channel",
            EntityKind::Variable => "variable",
            EntityKind::Level => "level",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The document is not valid JSON or does not have the expected shape.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown {kind} `{name}`{}", context_suffix(.context))]
    UnknownIdentifier {
        kind: EntityKind,
        name: String,
        context: Option<String>,
    },

    #[error("invalid {kind} identifier {name:?}: identifiers must be nonempty and contain no whitespace")]
    InvalidIdentifier { kind: EntityKind, name: String },

    /// `path` starts and ends with the same component.
    #[error("subcomponent cycle: {}", .path.join(" -> "))]
    SubcomponentCycle { path: Vec<String> },
}

fn context_suffix(context: &Option<String>) -> String {
    match context {
        Some(c) => format!(" (referenced from {c})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn unknown(kind: EntityKind, name: impl Into<String>) -> Self {
        Error::UnknownIdentifier {
            kind,
            name: name.into(),
            context: None,
        }
    }

    pub(crate) fn unknown_in(
        kind: EntityKind,
        name: impl Into<String>,
        context: impl Into<String>,
    ) -> Self {
        Error::UnknownIdentifier {
            kind,
            name: name.into(),
            context: Some(context.into()),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
