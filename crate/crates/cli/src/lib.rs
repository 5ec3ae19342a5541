//! Command-line driver: alignment runs with manifests, evaluation against
//! gold standards, and a generator for synthetic ontology pairs.

pub mod commands;
pub mod config;
pub mod generate;
pub mod manifest;
