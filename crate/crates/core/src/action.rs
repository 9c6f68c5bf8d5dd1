//! The hidden `S_{n+1}` action on blocks, nested sets and chains.
//!
//! A permutation of `{0..n}` moves the index set of a block; when the image
//! picks up 0 the block is replaced by the roots orthogonal to it, which are
//! supported on the complementary index set. `V` is fixed outright.

use std::fmt;

use crate::block::{full_mask, mask_elements, Block, Mask, SetPartition};
use crate::error::{internal, validation, Result};
use crate::nested::{ChainNested, NestedSet};

/// A bijection of `{0, 1, .., n}`, the extra point 0 standing for the affine
/// node glued onto the type-A diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtPermutation {
    images: Vec<u32>,
}

impl ExtPermutation {
    /// `images[i]` is the image of `i`, for `i` in `0..=n`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        if m < 2 {
            return validation("permutation needs at least the points 0 and 1");
        }
        let mut seen = vec![false; m];
        for &img in &images {
            if img as usize >= m || seen[img as usize] {
                return validation(format!("images {images:?} are not a bijection"));
            }
            seen[img as usize] = true;
        }
        Ok(ExtPermutation { images })
    }

    pub fn identity(n: u32) -> Self {
        ExtPermutation { images: (0..=n).collect() }
    }

    /// The adjacent transposition `(i, i+1)`, `0 <= i <= n-1`.
    pub fn adjacent(n: u32, i: u32) -> Result<Self> {
        if i >= n {
            return validation(format!("adjacent transposition index {i} out of range for n={n}"));
        }
        let mut images: Vec<u32> = (0..=n).collect();
        images.swap(i as usize, i as usize + 1);
        Ok(ExtPermutation { images })
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        if a > n || b > n {
            return validation("transposed points out of range");
        }
        let mut images: Vec<u32> = (0..=n).collect();
        images.swap(a as usize, b as usize);
        Ok(ExtPermutation { images })
    }

    /// Ambient `n`: the permutation moves `{0..n}`.
    pub fn n(&self) -> u32 {
        self.images.len() as u32 - 1
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Fixes 0, i.e. lies in the natural `S_n`.
    pub fn is_natural(&self) -> bool {
        self.images[0] == 0
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &ExtPermutation) -> Result<ExtPermutation> {
        if self.images.len() != other.images.len() {
            return validation("composing permutations of different degrees");
        }
        Ok(ExtPermutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        })
    }

    /// Parses a space-separated image list, e.g. `"1 0 2 3 4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let images: std::result::Result<Vec<u32>, _> =
            text.split_whitespace().map(str::parse).collect();
        match images {
            Ok(v) => ExtPermutation::new(v),
            Err(e) => validation(format!("bad permutation literal: {e}")),
        }
    }
}

impl fmt::Display for ExtPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.images.iter().map(u32::to_string).collect();
        write!(f, "{}", text.join(" "))
    }
}

fn act_mask(sigma: &ExtPermutation, mask: Mask, n: u32) -> Mask {
    // image of the index set inside {0..n}, bit i for point i
    let mut img: u32 = 0;
    for e in mask_elements(mask) {
        img |= 1 << sigma.image(e);
    }
    if img & 1 == 0 {
        // no 0 picked up: plain relabeling
        img >> 1
    } else {
        // complement inside {0..n}, then drop the point 0
        let all: u32 = (1 << (n + 1)) - 1;
        (all & !img) >> 1
    }
}

/// Action of `S_{n+1}` on a block: `V` is fixed; otherwise the image of the
/// index set, or its complement in `{0..n}` when the image contains 0.
pub fn act_block(sigma: &ExtPermutation, a: &Block) -> Result<Block> {
    let n = a.ambient();
    if sigma.n() != n {
        return validation(format!("permutation of {{0..{}}} cannot act on ambient {n}", sigma.n()));
    }
    if a.is_v() {
        return Ok(a.clone());
    }
    Ok(Block::from_mask(act_mask(sigma, a.mask(), n), n))
}

/// Elementwise action on a nested set containing `V`. Laminarity of the image
/// is a theorem; its failure is reported as an internal error.
pub fn act_nested(sigma: &ExtPermutation, s: &NestedSet) -> Result<NestedSet> {
    let n = s.ambient();
    if sigma.n() != n {
        return validation("permutation degree does not match the family ambient");
    }
    if !s.contains_v() {
        return validation("the extended action is defined on families containing V");
    }
    let full = full_mask(n);
    let masks: Vec<Mask> = s
        .masks()
        .into_iter()
        .map(|m| if m == full { full } else { act_mask(sigma, m, n) })
        .collect();
    if !crate::nested::masks_laminar(&masks) {
        return internal(format!("image of {s} under {sigma} is not laminar"));
    }
    let mut dedup = masks.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != masks.len() {
        return internal(format!("image of {s} under {sigma} lost a block"));
    }
    Ok(NestedSet::from_masks(masks, n))
}

/// Linkwise action on a chain of nested sets; strict inclusions survive
/// because the action is injective levelwise.
pub fn act_chain(sigma: &ExtPermutation, c: &ChainNested) -> Result<ChainNested> {
    let links: Result<Vec<NestedSet>> = c.links().iter().map(|s| act_nested(sigma, s)).collect();
    ChainNested::new(links?, c.ambient())
}

/// A bijection of `{1..m}`, used for the natural action and the combinatorial
/// actions on partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>, // images[i-1] = image of i
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &img in &images {
            if img == 0 || img as usize > m || seen[img as usize] {
                return validation(format!("images {images:?} are not a bijection of 1..={m}"));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: u32) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    /// The transposition `(a, b)` inside `S_m`.
    pub fn transposition(m: u32, a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 || a > m || b > m {
            return validation("transposed points out of range");
        }
        let mut images: Vec<u32> = (1..=m).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn fixes(&self, i: u32) -> bool {
        self.image(i) == i
    }

    pub fn apply_set(&self, set: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = set.iter().map(|&e| self.image(e)).collect();
        out.sort_unstable();
        out
    }

    pub fn apply_partition(&self, p: &SetPartition) -> Result<SetPartition> {
        if p.ground() != self.degree() {
            return validation("permutation degree does not match the partition ground");
        }
        let blocks = p.blocks().iter().map(|b| self.apply_set(b)).collect();
        SetPartition::new(blocks, p.ground())
    }

    /// Relabeling action on a laminar family; laminarity is preserved by any
    /// bijective relabeling.
    pub fn apply_nested(&self, s: &NestedSet) -> Result<NestedSet> {
        if s.ambient() != self.degree() {
            return validation("permutation degree does not match the family ambient");
        }
        let blocks: Result<Vec<Block>> = s
            .blocks()
            .iter()
            .map(|b| Block::new(self.apply_set(b.elements()), s.ambient()))
            .collect();
        NestedSet::new(blocks?, s.ambient())
    }

    /// Extends to `S_{m'}` for `m' >= m`, fixing the new points.
    pub fn extend_to(&self, m: u32) -> Result<Permutation> {
        if m < self.degree() {
            return validation("cannot extend a permutation to a smaller degree");
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=m);
        Ok(Permutation { images })
    }

    /// All permutations of `{1..m}`, for exhaustive Burnside averaging.
    pub fn all(m: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<u32> = (1..=m).collect();
        heap_permutations(&mut images, m as usize, &mut out);
        out
    }
}

fn heap_permutations(items: &mut Vec<u32>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation { images: items.clone() });
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Every permutation of `{0..n}`, through products of adjacent transpositions.
pub fn all_extended(n: u32) -> Vec<ExtPermutation> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..=n).collect();
    heap_ext(&mut images, n as usize + 1, &mut out);
    out
}

fn heap_ext(items: &mut Vec<u32>, k: usize, out: &mut Vec<ExtPermutation>) {
    if k <= 1 {
        out.push(ExtPermutation { images: items.clone() });
        return;
    }
    for i in 0..k {
        heap_ext(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(elems: &[u32], n: u32) -> Block {
        Block::new(elems.to_vec(), n).unwrap()
    }

    #[test]
    fn s_alpha0_moves_alpha1_stratum() {
        // s_{alpha_0} = (0 1) sends {1,2} to {1,3,4} for n = 4
        let sigma = ExtPermutation::transposition(4, 0, 1).unwrap();
        assert_eq!(act_block(&sigma, &b(&[1, 2], 4)).unwrap(), b(&[1, 3, 4], 4));
    }

    #[test]
    fn s_alpha0_fixes_alpha3_stratum() {
        let sigma = ExtPermutation::transposition(4, 0, 1).unwrap();
        assert_eq!(act_block(&sigma, &b(&[3, 4], 4)).unwrap(), b(&[3, 4], 4));
    }

    #[test]
    fn v_is_fixed_by_fiat() {
        for sigma in all_extended(3) {
            assert_eq!(act_block(&sigma, &Block::v(3)).unwrap(), Block::v(3));
        }
    }

    #[test]
    fn act_nested_remark_example() {
        // (1 3) fixing 0 relabels {V,{1,2},{3,4},{3,4,5}} to {V,{2,3},{1,4},{1,4,5}}
        let sigma = ExtPermutation::transposition(5, 1, 3).unwrap();
        let s = NestedSet::new(
            vec![Block::v(5), b(&[1, 2], 5), b(&[3, 4], 5), b(&[3, 4, 5], 5)],
            5,
        )
        .unwrap();
        let img = act_nested(&sigma, &s).unwrap();
        let expect = NestedSet::new(
            vec![Block::v(5), b(&[2, 3], 5), b(&[1, 4], 5), b(&[1, 4, 5], 5)],
            5,
        )
        .unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn act_nested_with_complement() {
        let sigma = ExtPermutation::transposition(4, 0, 1).unwrap();
        let s = NestedSet::new(vec![Block::v(4), b(&[1, 2], 4), b(&[3, 4], 4)], 4).unwrap();
        let img = act_nested(&sigma, &s).unwrap();
        let expect = NestedSet::new(vec![Block::v(4), b(&[1, 3, 4], 4), b(&[3, 4], 4)], 4).unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn act_chain_examples() {
        let sigma = ExtPermutation::transposition(4, 0, 1).unwrap();
        let empty = ChainNested::empty(4);
        assert_eq!(act_chain(&sigma, &empty).unwrap(), empty);
        let link = NestedSet::new(vec![Block::v(4), b(&[3, 4], 4)], 4).unwrap();
        let chain = ChainNested::new(vec![link.clone()], 4).unwrap();
        assert_eq!(act_chain(&sigma, &chain).unwrap(), chain);
    }

    #[test]
    fn natural_restriction_is_relabeling() {
        let n = 5u32;
        let blocks: Vec<Block> = crate::enumerate::enumerate_b(n)
            .unwrap()
            .iter()
            .flat_map(|s| s.blocks().to_vec())
            .collect();
        for i in 1..n {
            let ext = ExtPermutation::adjacent(n, i).unwrap();
            assert!(ext.is_natural());
            let nat = Permutation::transposition(n, i, i + 1).unwrap();
            for a in &blocks {
                let via_ext = act_block(&ext, a).unwrap();
                let via_nat = Block::new(nat.apply_set(a.elements()), n).unwrap();
                assert_eq!(via_ext, via_nat);
            }
        }
    }

    #[test]
    fn action_axioms_generatorwise() {
        for n in 2..=4u32 {
            let blocks: Vec<Block> = {
                let mut v = Vec::new();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() >= 2 {
                        v.push(Block::from_mask(mask, n));
                    }
                }
                v
            };
            let id = ExtPermutation::identity(n);
            for a in &blocks {
                assert_eq!(act_block(&id, a).unwrap(), *a);
            }
            for sigma in all_extended(n) {
                for i in 0..n {
                    let tau = ExtPermutation::adjacent(n, i).unwrap();
                    let st = sigma.compose(&tau).unwrap();
                    for a in &blocks {
                        let lhs = act_block(&st, a).unwrap();
                        let rhs = act_block(&sigma, &act_block(&tau, a).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "sigma={sigma} tau={tau} a={a}");
                    }
                }
            }
        }
    }
}
