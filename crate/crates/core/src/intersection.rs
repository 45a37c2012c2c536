//! Partition intersection graph of a character set.
//!
//! One vertex per (character, state), coloured by the character; an edge
//! joins two states of different characters that share a species; every
//! same-colour pair is a conflict. Vertices are numbered character-major,
//! in block order.

use thiserror::Error;

use crate::characters::{CharacterSet, SpeciesId};
use crate::graph::{Pair, Vertex};
use crate::sandwich::{SandwichInstance, VertexLabel};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntersectionError {
    #[error("state vertex ({char_index}, {state_index}) out of range")]
    OutOfRange { char_index: usize, state_index: usize },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVertex {
    pub char_index: usize,
    pub state_index: usize,
}

impl StateVertex {
    pub fn new(char_index: usize, state_index: usize) -> Self {
        Self {
            char_index,
            state_index,
        }
    }

    pub fn colour(&self) -> usize {
        self.char_index
    }
}

/// All state vertices, in vertex-index order.
pub fn state_vertices(cs: &CharacterSet) -> Vec<StateVertex> {
    cs.characters()
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| (0..c.state_count()).map(move |si| StateVertex::new(ci, si)))
        .collect()
}

/// Vertex index of a state vertex in [`build_instance`]'s numbering.
pub fn vertex_index(cs: &CharacterSet, sv: StateVertex) -> Option<Vertex> {
    let c = cs.characters().get(sv.char_index)?;
    if sv.state_index >= c.state_count() {
        return None;
    }
    let offset: usize = cs.characters()[..sv.char_index].iter().map(|c| c.state_count()).sum();
    Some(offset + sv.state_index)
}

pub fn build_instance(cs: &CharacterSet) -> SandwichInstance {
    let verts = state_vertices(cs);
    let block = |sv: &StateVertex| &cs.characters()[sv.char_index].blocks()[sv.state_index];
    let labels = verts
        .iter()
        .map(|sv| VertexLabel::new(cs.characters()[sv.char_index].name(), sv.state_index))
        .collect();
    let mut edges = Vec::new();
    let mut conflicts = Vec::new();
    for (i, a) in verts.iter().enumerate() {
        for (j, b) in verts.iter().enumerate().skip(i + 1) {
            if a.char_index == b.char_index {
                conflicts.push(Pair::new(i, j));
            } else if !block(a).is_disjoint(block(b)) {
                edges.push(Pair::new(i, j));
            }
        }
    }
    // blocks of one character are disjoint, so no conflict pair can be an edge
    SandwichInstance::new(labels, edges, conflicts).expect("intersection graph has E ∩ F = ∅")
}

/// Species of the block behind a state vertex.
pub fn vertex_species(cs: &CharacterSet, sv: StateVertex) -> Result<Vec<&SpeciesId>, IntersectionError> {
    let block = cs
        .characters()
        .get(sv.char_index)
        .and_then(|c| c.blocks().get(sv.state_index))
        .ok_or(IntersectionError::OutOfRange {
            char_index: sv.char_index,
            state_index: sv.state_index,
        })?;
    Ok(cs.block_species(block))
}
