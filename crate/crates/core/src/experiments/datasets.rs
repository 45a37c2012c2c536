//! Bundled datasets, shipped as files under `data/`.

use super::ExperimentError;
use crate::characters::{parse_characters, CharacterSet};
use crate::sandwich::SandwichInstance;

pub const DATASET_NAMES: [&str; 4] = ["example1", "sec4", "fig6", "fig7"];

const EXAMPLE1: &str = include_str!("../../../../data/example1.chars");
const SEC4: &str = include_str!("../../../../data/sec4.chars");
const FIG6: &str = include_str!("../../../../data/fig6.json");
const FIG7: &str = include_str!("../../../../data/fig7.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Characters(CharacterSet),
    Instance(SandwichInstance),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    pub name: &'static str,
    pub payload: Payload,
    pub notes: &'static str,
}

impl Dataset {
    pub fn characters(&self) -> Option<&CharacterSet> {
        match &self.payload {
            Payload::Characters(cs) => Some(cs),
            Payload::Instance(_) => None,
        }
    }

    pub fn instance(&self) -> Option<&SandwichInstance> {
        match &self.payload {
            Payload::Instance(i) => Some(i),
            Payload::Characters(_) => None,
        }
    }
}

/// Raw file contents of a bundled dataset.
pub fn dataset_source(name: &str) -> Result<&'static str, ExperimentError> {
    match name {
        "example1" => Ok(EXAMPLE1),
        "sec4" => Ok(SEC4),
        "fig6" => Ok(FIG6),
        "fig7" => Ok(FIG7),
        other => Err(ExperimentError::UnknownDataset(other.to_string())),
    }
}

pub fn dataset(name: &str) -> Result<Dataset, ExperimentError> {
    let src = dataset_source(name)?;
    let (name, payload, notes) = match name {
        "example1" => (
            "example1",
            Payload::Characters(parse_characters(src)?),
            "four characters c1..c4 over species a..j; compatible, intersection graph already chordal",
        ),
        "sec4" => (
            "sec4",
            Payload::Characters(parse_characters(src)?),
            "five 4-state full characters a..e on six species; every 4-subset compatible, the whole set not",
        ),
        "fig6" => (
            "fig6",
            Payload::Instance(SandwichInstance::parse_json(src)?),
            "5-cycle a0 b0 a1 c0 b1 on three colours; F = {a0a1, b0b1}",
        ),
        _ => (
            "fig7",
            Payload::Instance(SandwichInstance::parse_json(src)?),
            "5-cycle a0 b1 c0 a1 b0 plus path c0 b2 c1 b0; F = same-colour pairs; no proper completion",
        ),
    };
    Ok(Dataset { name, payload, notes })
}
