//! Blocks and set partitions over a ground set `{1..n}`.
//!
//! A block stands for an irreducible subspace of the braid arrangement: the
//! subsets of `{1..n}` of size at least two, with the full set playing the
//! role of the ambient space `V`. A set partition with at least one block of
//! size two or more stands for an element of the maximal building set.

use std::fmt;

use crate::error::{domain, validation, Error, Result};

/// Packed representation of a subset of `{1..n}`; element `i` is bit `i - 1`.
pub(crate) type Mask = u32;

pub(crate) fn mask_of(elements: &[u32]) -> Mask {
    elements.iter().fold(0, |m, &e| m | (1 << (e - 1)))
}

pub(crate) fn mask_elements(mask: Mask) -> Vec<u32> {
    (0..Mask::BITS)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

pub(crate) fn full_mask(ambient: u32) -> Mask {
    (1u32 << ambient) - 1
}

/// A subset of `{1..n}` of size at least 2, identified with an irreducible
/// subspace; the full set `{1..n}` is the distinguished element `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    elements: Vec<u32>,
    ambient: u32,
}

impl Block {
    pub fn new(elements: Vec<u32>, ambient: u32) -> Result<Self> {
        if !(2..=31).contains(&ambient) {
            return validation(format!("ambient {ambient} out of supported range 2..=31"));
        }
        let mut elems = elements;
        elems.sort_unstable();
        if elems.len() < 2 {
            return validation(format!("block {elems:?} has size < 2"));
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return validation(format!("block {elems:?} has repeated elements"));
        }
        if elems.first().copied() < Some(1) || elems.last().copied() > Some(ambient) {
            return validation(format!("block {elems:?} not within 1..={ambient}"));
        }
        Ok(Block { elements: elems, ambient })
    }

    /// The distinguished block `V = {1..n}`.
    pub fn v(ambient: u32) -> Self {
        Block::new((1..=ambient).collect(), ambient).expect("V is a valid block")
    }

    pub(crate) fn from_mask(mask: Mask, ambient: u32) -> Self {
        debug_assert!(mask.count_ones() >= 2 && mask & !full_mask(ambient) == 0);
        Block { elements: mask_elements(mask), ambient }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_v(&self) -> bool {
        self.elements.len() as u32 == self.ambient
    }

    /// Dimension of the corresponding subspace: `|A| - 1`.
    pub fn dim(&self) -> u32 {
        self.elements.len() as u32 - 1
    }

    pub(crate) fn mask(&self) -> Mask {
        mask_of(&self.elements)
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Canonical sort key inside a family: (minimal element, size).
    pub(crate) fn family_key(&self) -> (u32, usize) {
        (self.elements[0], self.elements.len())
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A partition of `{1..m}` into disjoint nonempty parts, singletons included.
/// Parts are kept sorted by minimal element, each part sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
    ground: u32,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<u32>>, ground: u32) -> Result<Self> {
        if ground == 0 || ground > 31 {
            return validation(format!("ground {ground} out of supported range 1..=31"));
        }
        let mut parts: Vec<Vec<u32>> = Vec::with_capacity(blocks.len());
        let mut seen: u64 = 0;
        for mut b in blocks {
            b.sort_unstable();
            if b.is_empty() {
                return validation("partition has an empty part");
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return validation(format!("part {b:?} has repeated elements"));
            }
            if b[0] < 1 || *b.last().unwrap() > ground {
                return validation(format!("part {b:?} not within 1..={ground}"));
            }
            for &e in &b {
                if seen & (1 << e) != 0 {
                    return validation(format!("element {e} appears in two parts"));
                }
                seen |= 1 << e;
            }
            parts.push(b);
        }
        if seen.count_ones() != ground {
            return validation(format!("parts do not cover 1..={ground}"));
        }
        parts.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks: parts, ground })
    }

    /// The one-block partition of `{1..n}`, i.e. the ambient space `V` viewed
    /// as an element of the maximal building set.
    pub fn full(ground: u32) -> Self {
        SetPartition::new(vec![(1..=ground).collect()], ground).expect("full partition is valid")
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    /// True when at least one part has size >= 2, i.e. the partition names a
    /// nonzero subspace of the maximal building set.
    pub fn is_c_element(&self) -> bool {
        self.blocks.iter().any(|b| b.len() >= 2)
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Dimension of the named subspace: sum of `|part| - 1`.
    pub fn dim(&self) -> u32 {
        self.ground - self.blocks.len() as u32
    }

    /// True when `self` refines `other`: every part is contained in a part of
    /// `other`. Subspace inclusion runs the same way.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.ground != other.ground {
            return false;
        }
        let other_masks: Vec<Mask> = other.blocks.iter().map(|b| mask_of(b)).collect();
        self.blocks.iter().all(|b| {
            let m = mask_of(b);
            other_masks.iter().any(|&om| m & om == m)
        })
    }

    /// Join in the partition lattice: merge parts that overlap across the two
    /// partitions until the result is stable. Realizes the sum of subspaces.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.ground != other.ground {
            return domain("join of partitions over different grounds");
        }
        let mut comps: Vec<Mask> = Vec::new();
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            let mut m = mask_of(b);
            let mut merged = Vec::new();
            comps.retain(|&c| {
                if c & m != 0 {
                    merged.push(c);
                    false
                } else {
                    true
                }
            });
            for c in merged {
                m |= c;
            }
            comps.push(m);
        }
        let blocks = comps.into_iter().map(mask_elements).collect();
        SetPartition::new(blocks, self.ground)
    }

    /// The parts of size >= 2 as `Block`s over the same ground.
    pub fn large_parts(&self) -> Vec<Block> {
        self.blocks
            .iter()
            .filter(|b| b.len() >= 2)
            .map(|b| Block::new(b.clone(), self.ground).expect("partition part is a valid block"))
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{")?;
            for (i, e) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Extracts the irreducible summands of a subspace of the maximal building
/// set: the parts of size >= 2 of the partition naming it.
pub fn decompose_irreducibles(p: &SetPartition) -> Result<Vec<Block>> {
    if !p.is_c_element() {
        return domain("partition with all parts singletons names the zero subspace");
    }
    Ok(p.large_parts())
}

impl Error {
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::Validation(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_validation() {
        assert!(Block::new(vec![1, 2], 4).is_ok());
        assert!(Block::new(vec![1], 4).is_err());
        assert!(Block::new(vec![1, 5], 4).is_err());
        assert!(Block::new(vec![1, 1], 4).is_err());
        assert!(Block::new(vec![0, 1], 4).is_err());
        assert!(Block::v(4).is_v());
    }

    #[test]
    fn partition_validation() {
        assert!(SetPartition::new(vec![vec![1, 2], vec![3]], 3).is_ok());
        assert!(SetPartition::new(vec![vec![1, 2]], 3).is_err());
        assert!(SetPartition::new(vec![vec![1, 2], vec![2, 3]], 3).is_err());
    }

    #[test]
    fn decompose_paper_example() {
        // {1,4}{2}{3,5,9}{6}{7,8} -> {{1,4},{3,5,9},{7,8}}
        let p = SetPartition::new(
            vec![vec![1, 4], vec![2], vec![3, 5, 9], vec![6], vec![7, 8]],
            9,
        )
        .unwrap();
        let irr = decompose_irreducibles(&p).unwrap();
        let sets: Vec<Vec<u32>> = irr.iter().map(|b| b.elements().to_vec()).collect();
        assert_eq!(sets, vec![vec![1, 4], vec![3, 5, 9], vec![7, 8]]);
    }

    #[test]
    fn decompose_full_is_v() {
        let p = SetPartition::full(5);
        let irr = decompose_irreducibles(&p).unwrap();
        assert_eq!(irr, vec![Block::v(5)]);
    }

    #[test]
    fn decompose_single_pair() {
        let p = SetPartition::new(vec![vec![1, 2], vec![3], vec![4]], 4).unwrap();
        let irr = decompose_irreducibles(&p).unwrap();
        assert_eq!(irr, vec![Block::new(vec![1, 2], 4).unwrap()]);
    }

    #[test]
    fn decompose_rejects_zero_subspace() {
        let p = SetPartition::new(vec![vec![1], vec![2], vec![3]], 3).unwrap();
        assert!(decompose_irreducibles(&p).is_err());
    }

    #[test]
    fn refinement_and_join() {
        let fine = SetPartition::new(vec![vec![1, 2], vec![3], vec![4]], 4).unwrap();
        let coarse = SetPartition::new(vec![vec![1, 2, 3], vec![4]], 4).unwrap();
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        let a = SetPartition::new(vec![vec![1, 2], vec![3], vec![4]], 4).unwrap();
        let b = SetPartition::new(vec![vec![2, 3], vec![1], vec![4]], 4).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.blocks(), &[vec![1, 2, 3], vec![4]]);
        assert_eq!(j.dim(), 2);
    }
}
