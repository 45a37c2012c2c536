//! Multi-state characters over a species universe, and their text format.
//!
//! A character file holds one character per line:
//!
//! ```text
//! # comment
//! species: x,y,z,t,u,v
//! a = xu|zt|y|v
//! b: x,y|t,v|z|u
//! ```
//!
//! Blocks are separated by `|`. Inside a block, species are comma-separated
//! tokens; when every species of the file is a single character and no block
//! uses a comma, each letter of a block is one species (`ab|cd`). A declared
//! universe containing a multi-character species name forces token mode.
//! The `species:` header is optional; without it the universe is the set of
//! species seen in the blocks, in order of first appearance.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("line {line}: expected `name = block|block|...` or `name: block|...`")]
    Syntax { line: usize },
    #[error("line {line}: invalid token {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: character {name:?} has an empty block")]
    EmptyBlock { line: usize, name: String },
    #[error("character {name:?}: species {species:?} occurs in more than one block")]
    OverlapWithinCharacter { name: String, species: String },
    #[error("duplicate character name {0:?}")]
    DuplicateCharacter(String),
    #[error("duplicate species {0:?} in universe")]
    DuplicateSpecies(String),
    #[error("character {name:?}: species {species:?} is not in the declared universe")]
    SpeciesOutsideUniverse { name: String, species: String },
    #[error("unknown character {0:?}")]
    UnknownCharacter(String),
    #[error("subset size {k} out of range 1..={n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },
}

/// A species name: a non-empty token free of delimiters and whitespace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpeciesId(String);

impl SpeciesId {
    pub fn new(name: impl Into<String>) -> Option<Self> {
        let name = name.into();
        valid_token(&name).then_some(SpeciesId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SpeciesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn valid_token(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '|' | ',' | '=' | ':' | '#'))
}

/// One character: an ordered list of disjoint, non-empty species blocks.
/// Block `i` is state `i`. Species are indices into the owning universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    name: String,
    blocks: Vec<BTreeSet<usize>>,
}

impl Character {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn state_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of a species, if the character covers it.
    pub fn state_of(&self, species: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&species))
    }

    pub fn covered(&self) -> BTreeSet<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn is_r_states(&self, r: usize) -> bool {
        self.blocks.len() <= r
    }

    /// At most one block has more than one species.
    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().filter(|b| b.len() > 1).count() <= 1
    }
}

/// A species universe together with an ordered list of characters on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    species: Vec<SpeciesId>,
    characters: Vec<Character>,
}

impl CharacterSet {
    /// Builds a validated set from named blocks of species names.
    pub fn from_blocks<S: AsRef<str>>(
        universe: Option<&[S]>,
        characters: &[(&str, Vec<Vec<S>>)],
    ) -> Result<Self, CharacterError> {
        let mut b = Builder::new(universe.map(|u| u.iter().map(|s| s.as_ref().to_string()).collect()))?;
        for (name, blocks) in characters {
            let blocks = blocks
                .iter()
                .map(|blk| blk.iter().map(|s| s.as_ref().to_string()).collect())
                .collect();
            b.push(0, name, blocks)?;
        }
        Ok(b.finish())
    }

    pub fn species(&self) -> &[SpeciesId] {
        &self.species
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s.as_str() == name)
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn character(&self, name: &str) -> Option<&Character> {
        self.characters.iter().find(|c| c.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.characters.iter().map(|c| c.name.as_str()).collect()
    }

    /// The block's species names, sorted by universe order.
    pub fn block_species(&self, block: &BTreeSet<usize>) -> Vec<&SpeciesId> {
        block.iter().map(|&s| &self.species[s]).collect()
    }

    pub fn is_full(&self, c: &Character) -> bool {
        c.covered().len() == self.species.len()
    }

    /// Same universe, only the named characters, in the order given.
    pub fn restrict<S: AsRef<str>>(&self, names: &[S]) -> Result<Self, CharacterError> {
        let characters = names
            .iter()
            .map(|n| {
                self.character(n.as_ref())
                    .cloned()
                    .ok_or_else(|| CharacterError::UnknownCharacter(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = BTreeSet::new();
        for c in &characters {
            if !seen.insert(c.name.as_str()) {
                return Err(CharacterError::DuplicateCharacter(c.name.clone()));
            }
        }
        Ok(Self {
            species: self.species.clone(),
            characters,
        })
    }

    /// All `k`-character restrictions, lexicographic by character index.
    pub fn k_subsets(&self, k: usize) -> Result<KSubsets<'_>, CharacterError> {
        let n = self.characters.len();
        if k == 0 || k > n {
            return Err(CharacterError::SubsetSizeOutOfRange { k, n });
        }
        Ok(KSubsets {
            set: self,
            next: Some((0..k).collect()),
        })
    }

    fn single_letter_species(&self) -> bool {
        self.species.iter().all(|s| s.0.chars().count() == 1)
    }
}

/// Iterator over the `k`-subsets of a character set.
pub struct KSubsets<'a> {
    set: &'a CharacterSet,
    next: Option<Vec<usize>>,
}

impl KSubsets<'_> {
    fn advance(idx: &mut [usize], n: usize) -> bool {
        let k = idx.len();
        for i in (0..k).rev() {
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for KSubsets<'_> {
    type Item = CharacterSet;

    fn next(&mut self) -> Option<CharacterSet> {
        let idx = self.next.take()?;
        let out = CharacterSet {
            species: self.set.species.clone(),
            characters: idx.iter().map(|&i| self.set.characters[i].clone()).collect(),
        };
        let mut nxt = idx;
        if Self::advance(&mut nxt, self.set.characters.len()) {
            self.next = Some(nxt);
        }
        Some(out)
    }
}

struct Builder {
    declared: bool,
    species: Vec<SpeciesId>,
    index: HashMap<String, usize>,
    characters: Vec<Character>,
}

impl Builder {
    fn new(universe: Option<Vec<String>>) -> Result<Self, CharacterError> {
        let mut b = Builder {
            declared: universe.is_some(),
            species: Vec::new(),
            index: HashMap::new(),
            characters: Vec::new(),
        };
        for s in universe.unwrap_or_default() {
            let id = SpeciesId::new(s.clone()).ok_or(CharacterError::InvalidToken {
                line: 0,
                token: s.clone(),
            })?;
            if b.index.insert(s.clone(), b.species.len()).is_some() {
                return Err(CharacterError::DuplicateSpecies(s));
            }
            b.species.push(id);
        }
        Ok(b)
    }

    fn push(&mut self, line: usize, name: &str, blocks: Vec<Vec<String>>) -> Result<(), CharacterError> {
        if !valid_token(name) {
            return Err(CharacterError::InvalidToken {
                line,
                token: name.to_string(),
            });
        }
        if self.characters.iter().any(|c| c.name == name) {
            return Err(CharacterError::DuplicateCharacter(name.to_string()));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(CharacterError::EmptyBlock {
                    line,
                    name: name.to_string(),
                });
            }
            let mut set = BTreeSet::new();
            for s in block {
                if !valid_token(&s) {
                    return Err(CharacterError::InvalidToken { line, token: s });
                }
                let idx = match self.index.get(&s) {
                    Some(&i) => i,
                    None if self.declared => {
                        return Err(CharacterError::SpeciesOutsideUniverse {
                            name: name.to_string(),
                            species: s,
                        })
                    }
                    None => {
                        let i = self.species.len();
                        self.index.insert(s.clone(), i);
                        self.species.push(SpeciesId(s.clone()));
                        i
                    }
                };
                if !seen.insert(idx) {
                    return Err(CharacterError::OverlapWithinCharacter {
                        name: name.to_string(),
                        species: s,
                    });
                }
                set.insert(idx);
            }
            out.push(set);
        }
        if out.is_empty() {
            return Err(CharacterError::EmptyBlock {
                line,
                name: name.to_string(),
            });
        }
        self.characters.push(Character {
            name: name.to_string(),
            blocks: out,
        });
        Ok(())
    }

    fn finish(self) -> CharacterSet {
        CharacterSet {
            species: self.species,
            characters: self.characters,
        }
    }
}

/// Parses the character file format described in the module docs.
pub fn parse_characters(text: &str) -> Result<CharacterSet, CharacterError> {
    let mut header: Option<(usize, Vec<String>)> = None;
    let mut rows: Vec<(usize, String, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, rest) = match (line.find('='), line.find(':')) {
            (Some(e), Some(c)) => line.split_at(e.min(c)),
            (Some(p), None) | (None, Some(p)) => line.split_at(p),
            (None, None) => return Err(CharacterError::Syntax { line: line_no }),
        };
        let name = name.trim();
        let is_header = name == "species" && rest.starts_with(':');
        let rest = rest[1..].trim();
        if is_header {
            if header.is_some() {
                return Err(CharacterError::Syntax { line: line_no });
            }
            let list = rest.split(',').map(|s| s.trim().to_string()).collect();
            header = Some((line_no, list));
        } else {
            if name.is_empty() {
                return Err(CharacterError::Syntax { line: line_no });
            }
            let blocks = rest.split('|').map(|b| b.trim().to_string()).collect();
            rows.push((line_no, name.to_string(), blocks));
        }
    }

    let token_mode = rows.iter().any(|(_, _, bs)| bs.iter().any(|b| b.contains(',')))
        || header
            .as_ref()
            .is_some_and(|(_, u)| u.iter().any(|s| s.chars().count() > 1));

    let universe = match header {
        Some((line, list)) => {
            if let Some(bad) = list.iter().find(|s| !valid_token(s)) {
                return Err(CharacterError::InvalidToken {
                    line,
                    token: bad.clone(),
                });
            }
            Some(list)
        }
        None => None,
    };
    let mut b = Builder::new(universe)?;
    for (line, name, blocks) in rows {
        let blocks = blocks
            .into_iter()
            .map(|blk| -> Vec<String> {
                if blk.is_empty() {
                    Vec::new()
                } else if token_mode {
                    blk.split(',').map(|s| s.trim().to_string()).collect()
                } else {
                    blk.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
                }
            })
            .collect();
        b.push(line, &name, blocks)?;
    }
    Ok(b.finish())
}

/// Writes the set in the file format: a `species:` header, then one
/// character per line. Reparsing the output yields an equal set.
impl fmt::Display for CharacterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.single_letter_species();
        let names: Vec<&str> = self.species.iter().map(|s| s.as_str()).collect();
        writeln!(f, "species: {}", names.join(","))?;
        for c in &self.characters {
            let blocks: Vec<String> = c
                .blocks
                .iter()
                .map(|b| {
                    let sp = b.iter().map(|&s| self.species[s].as_str());
                    if letters {
                        sp.collect::<String>()
                    } else {
                        sp.collect::<Vec<_>>().join(",")
                    }
                })
                .collect();
            writeln!(f, "{} = {}", c.name, blocks.join("|"))?;
        }
        Ok(())
    }
}
