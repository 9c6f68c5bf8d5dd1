//! Nested sets of the irreducible building set: laminar families of blocks.
//!
//! For the braid arrangement the nested condition degenerates to laminarity:
//! any two members are disjoint or comparable. `B(n-1)` is the set of laminar
//! families over `{1..n}` containing `V`; chains of such families index the
//! strata of the supermaximal model.

use std::fmt;

use crate::block::{Block, Mask, SetPartition};
use crate::error::{domain, validation, Result};

/// A laminar family of blocks over a common ambient set. May be empty and
/// need not contain `V`; membership of `V` is what `B(n-1)` adds on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedSet {
    blocks: Vec<Block>,
    ambient: u32,
}

/// Laminarity test for a family of blocks sharing an ambient set.
pub fn is_nested(blocks: &[Block]) -> Result<bool> {
    if let Some(first) = blocks.first() {
        let n = first.ambient();
        if blocks.iter().any(|b| b.ambient() != n) {
            return validation("blocks do not share a common ambient set");
        }
    }
    let masks: Vec<Mask> = blocks.iter().map(|b| b.mask()).collect();
    Ok(masks_laminar(&masks))
}

pub(crate) fn masks_laminar(masks: &[Mask]) -> bool {
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            let inter = a & b;
            if inter != 0 && inter != a && inter != b {
                return false;
            }
        }
    }
    true
}

impl NestedSet {
    pub fn new(blocks: Vec<Block>, ambient: u32) -> Result<Self> {
        if blocks.iter().any(|b| b.ambient() != ambient) {
            return validation("block ambient differs from family ambient");
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.family_key());
        blocks.dedup();
        if !is_nested(&blocks)? {
            return validation("family of blocks is not laminar");
        }
        Ok(NestedSet { blocks, ambient })
    }

    pub fn empty(ambient: u32) -> Self {
        NestedSet { blocks: Vec::new(), ambient }
    }

    /// The one-element family `{V}`, the bottom of `B(n-1)`.
    pub fn trivial(ambient: u32) -> Self {
        NestedSet { blocks: vec![Block::v(ambient)], ambient }
    }

    pub(crate) fn from_masks(mut masks: Vec<Mask>, ambient: u32) -> Self {
        masks.sort_by_key(|&m| (m.trailing_zeros(), m.count_ones()));
        let blocks = masks.iter().map(|&m| Block::from_mask(m, ambient)).collect();
        NestedSet { blocks, ambient }
    }

    pub(crate) fn masks(&self) -> Vec<Mask> {
        self.blocks.iter().map(|b| b.mask()).collect()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains_v(&self) -> bool {
        self.blocks.iter().any(|b| b.is_v())
    }

    pub fn contains(&self, b: &Block) -> bool {
        // keys are unique inside a family, but a foreign block may collide
        // on (min, size) and still differ
        self.blocks
            .binary_search_by_key(&b.family_key(), |x| x.family_key())
            .map(|i| self.blocks[i] == *b)
            .unwrap_or(false)
    }

    /// Set inclusion of families.
    pub fn is_subset_of(&self, other: &NestedSet) -> bool {
        self.ambient == other.ambient && self.blocks.iter().all(|b| other.contains(b))
    }

    pub fn union(&self, other: &NestedSet) -> Result<NestedSet> {
        if self.ambient != other.ambient {
            return domain("union of families over different ambients");
        }
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        blocks.sort_by_key(|b| b.family_key());
        blocks.dedup();
        NestedSet::new(blocks, self.ambient)
    }

    pub fn with_v(&self) -> NestedSet {
        if self.contains_v() {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        blocks.push(Block::v(self.ambient));
        blocks.sort_by_key(|b| b.family_key());
        NestedSet { blocks, ambient: self.ambient }
    }

    /// Children of `block` in the forest with leaves: the maximal members of
    /// the family strictly below it, plus one leaf per uncovered element.
    pub fn children_count(&self, block: &Block) -> usize {
        let m = block.mask();
        let mut covered: Mask = 0;
        let mut internal = 0usize;
        for b in &self.blocks {
            let bm = b.mask();
            if bm != m && bm & m == bm && bm & covered == 0 {
                // maximal proper sub-blocks only: a non-maximal one is inside
                // an earlier (by min element) larger sibling already counted
                if !self.blocks.iter().any(|c| {
                    let cm = c.mask();
                    cm != m && cm != bm && cm & m == cm && bm & cm == bm
                }) {
                    internal += 1;
                    covered |= bm;
                }
            }
        }
        internal + (m & !covered).count_ones() as usize
    }

    /// Depth of a family containing `V`: the highest level of the leafless
    /// Hasse diagram, where the minimal blocks sit at level 0.
    pub fn depth(&self) -> Result<usize> {
        if !self.contains_v() {
            return domain("depth is defined for families containing V");
        }
        Ok(self.blocks.iter().map(|b| self.level_of(b)).max().unwrap_or(0))
    }

    /// Level of a member block: longest descending path to a minimal member.
    pub fn level_of(&self, block: &Block) -> usize {
        let m = block.mask();
        self.blocks
            .iter()
            .filter(|b| {
                let bm = b.mask();
                bm != m && bm & m == bm
            })
            .map(|b| self.level_of(b) + 1)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for NestedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// A chain `T_1 ⊊ T_2 ⊊ … ⊊ T_r` of nested sets containing `V`; the empty
/// chain stands for the class of `{V}` itself. Indexes a supermaximal stratum
/// of codimension `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainNested {
    links: Vec<NestedSet>,
    ambient: u32,
}

impl ChainNested {
    pub fn new(links: Vec<NestedSet>, ambient: u32) -> Result<Self> {
        for link in &links {
            if link.ambient() != ambient {
                return validation("chain link over a different ambient set");
            }
            if !link.contains_v() {
                return validation("chain link does not contain V");
            }
        }
        for w in links.windows(2) {
            if !(w[0].is_subset_of(&w[1]) && w[0].len() < w[1].len()) {
                return validation("chain links are not strictly increasing");
            }
        }
        if let Some(first) = links.first() {
            if first.len() < 2 {
                return validation("first chain link must strictly contain {V}");
            }
        }
        Ok(ChainNested { links, ambient })
    }

    pub fn empty(ambient: u32) -> Self {
        ChainNested { links: Vec::new(), ambient }
    }

    pub fn links(&self) -> &[NestedSet] {
        &self.links
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }
}

/// A chain `V ⊋ B_1 ⊋ … ⊋ B_r` in the maximal building set, stored without
/// the implicit top `V`. Links are partitions, each strictly refining the
/// previous one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CChain {
    links: Vec<SetPartition>,
    ambient: u32,
}

impl CChain {
    pub fn new(links: Vec<SetPartition>, ambient: u32) -> Result<Self> {
        for link in &links {
            if link.ground() != ambient {
                return validation("chain link over a different ground set");
            }
            if !link.is_c_element() {
                return validation("chain link is not a C-element");
            }
            if link.is_full() {
                return validation("chain links must be strictly below V");
            }
        }
        for w in links.windows(2) {
            if !(w[1].refines(&w[0]) && w[1] != w[0]) {
                return validation("chain links are not strictly decreasing");
            }
        }
        Ok(CChain { links, ambient })
    }

    pub fn empty(ambient: u32) -> Self {
        CChain { links: Vec::new(), ambient }
    }

    pub fn links(&self) -> &[SetPartition] {
        &self.links
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }
}

/// The graded poset embedding of maximal-model strata into supermaximal-model
/// strata: the i-th link collects `V` together with the irreducible summands
/// of the i smallest subspaces of the chain.
pub fn phi_embed(chain: &CChain) -> ChainNested {
    let n = chain.ambient();
    let mut links: Vec<NestedSet> = Vec::with_capacity(chain.links().len());
    let mut acc: Vec<Block> = vec![Block::v(n)];
    for part in chain.links().iter().rev() {
        for b in part.large_parts() {
            if !acc.contains(&b) {
                acc.push(b);
            }
        }
        let link = NestedSet::new(acc.clone(), n)
            .expect("summands of a chain of subspaces form a laminar family");
        links.push(link);
    }
    ChainNested::new(links, n).expect("phi image is a strictly increasing chain")
}


#[cfg(test)]
mod contains_tests {
    use super::*;

    #[test]
    fn key_collision_is_not_membership() {
        let n = 6;
        let b123 = Block::new(vec![1, 2, 3], n).unwrap();
        let b124 = Block::new(vec![1, 2, 4], n).unwrap();
        let s = NestedSet::new(vec![Block::v(n), b123.clone()], n).unwrap();
        assert!(s.contains(&b123));
        assert!(!s.contains(&b124));
        let t = NestedSet::new(vec![Block::v(n), b124], n).unwrap();
        assert!(!s.is_subset_of(&t));
        assert!(!t.is_subset_of(&s));
    }
}
