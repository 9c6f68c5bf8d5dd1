//! Enumeration of laminar families over `{1..n}`.
//!
//! Families are generated by recursive forest construction: the smallest
//! element still to be organized either stays uncovered or becomes the
//! minimum of a fresh maximal block, whose interior is then filled
//! recursively. Every family is emitted exactly once and no dead branches
//! are explored, which keeps the cost proportional to the output.

use crate::block::{full_mask, Mask};
use crate::error::{domain, Result};
use crate::nested::NestedSet;

/// Emits every laminar family of *proper* blocks of `{1..n}` (sizes >= 2,
/// never the full set), with at most `max_blocks` members when a bound is
/// given. Adding `V` to each emitted family yields exactly `B(n-1)`. With a
/// `compatible` constraint, only families whose every block is comparable to
/// or disjoint from every constraint mask are produced.
pub(crate) fn for_each_forest<F: FnMut(&[Mask])>(n: u32, max_blocks: Option<usize>, mut emit: F) {
    for_each_forest_compatible(n, max_blocks, &[], &mut emit);
}

pub(crate) fn for_each_forest_compatible<F: FnMut(&[Mask])>(
    n: u32,
    max_blocks: Option<usize>,
    compatible: &[Mask],
    emit: &mut F,
) {
    let full = full_mask(n);
    let budget = max_blocks.unwrap_or(n as usize);
    let mut pending: Vec<(Mask, Mask)> = Vec::new();
    let mut current: Vec<Mask> = Vec::new();
    rec(full, full, budget, compatible, &mut pending, &mut current, emit);
}

fn rec<F: FnMut(&[Mask])>(
    pool: Mask,
    forbid: Mask,
    budget: usize,
    compatible: &[Mask],
    pending: &mut Vec<(Mask, Mask)>,
    current: &mut Vec<Mask>,
    emit: &mut F,
) {
    if pool == 0 {
        match pending.pop() {
            None => emit(current),
            Some((p, f)) => {
                rec(p, f, budget, compatible, pending, current, emit);
                pending.push((p, f));
            }
        }
        return;
    }
    let lo = pool & pool.wrapping_neg();
    // lowest element left uncovered at this level
    rec(pool ^ lo, forbid, budget, compatible, pending, current, emit);
    if budget == 0 {
        return;
    }
    // lowest element becomes the minimum of a new maximal block
    let rest = pool ^ lo;
    let mut sub = rest;
    while sub != 0 {
        let block = sub | lo;
        let ok = block != forbid
            && compatible.iter().all(|&s| {
                let inter = s & block;
                inter == 0 || inter == s || inter == block
            });
        if ok {
            current.push(block);
            pending.push((pool ^ block, forbid));
            rec(block, block, budget - 1, compatible, pending, current, emit);
            pending.pop();
            current.pop();
        }
        sub = (sub - 1) & rest;
    }
}

pub(crate) fn collect_forests(n: u32, max_blocks: Option<usize>) -> Vec<Vec<Mask>> {
    let mut out = Vec::new();
    for_each_forest(n, max_blocks, |fam| out.push(fam.to_vec()));
    out
}

/// All elements of `B(n-1)`: laminar families over `{1..n}` containing `V`,
/// in the canonical order.
pub fn enumerate_b(n: u32) -> Result<Vec<NestedSet>> {
    if n < 2 {
        return domain(format!("B(n-1) needs n >= 2, got {n}"));
    }
    let full = full_mask(n);
    let mut out: Vec<NestedSet> = collect_forests(n, None)
        .into_iter()
        .map(|mut fam| {
            fam.push(full);
            NestedSet::from_masks(fam, n)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The subset `F^k(B(n-1))`: members of cardinality `k + 1`. Generated with a
/// block budget so large ambients with small `k` stay cheap.
pub fn enumerate_f_k(n: u32, k: usize) -> Result<Vec<NestedSet>> {
    if n < 2 {
        return domain(format!("B(n-1) needs n >= 2, got {n}"));
    }
    let full = full_mask(n);
    let mut out = Vec::new();
    for_each_forest(n, Some(k), |fam| {
        if fam.len() == k {
            let mut fam = fam.to_vec();
            fam.push(full);
            out.push(NestedSet::from_masks(fam, n));
        }
    });
    out.sort();
    Ok(out)
}

pub fn count_f_k(n: u32, k: usize) -> Result<u64> {
    if n < 2 {
        return domain(format!("B(n-1) needs n >= 2, got {n}"));
    }
    let mut count = 0u64;
    for_each_forest(n, Some(k), |fam| {
        if fam.len() == k {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of children of `block` in the forest-with-leaves of the family
/// `masks ∪ {block}`: maximal members strictly below it plus uncovered
/// elements. Only members below `block` matter, so `masks` may be any
/// laminar family containing it or not.
pub(crate) fn children_count(masks: &[Mask], block: Mask) -> usize {
    let mut covered: Mask = 0;
    let mut internal = 0usize;
    for (i, &b) in masks.iter().enumerate() {
        if b != block && b & block == b {
            let maximal = !masks.iter().enumerate().any(|(j, &c)| {
                j != i && c != block && c & block == c && b & c == b && b != c
            });
            if maximal {
                internal += 1;
                covered |= b;
            }
        }
    }
    internal + (block & !covered).count_ones() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::mask_of;

    #[test]
    fn b_of_n2_is_trivial() {
        let all = enumerate_b(2).unwrap();
        assert_eq!(all, vec![NestedSet::trivial(2)]);
        assert!(enumerate_b(1).is_err());
    }

    #[test]
    fn f1_and_f2_counts_for_n4() {
        // F^1: one proper block, 2^4 - 4 - 1 - 1 = 10 of them.
        assert_eq!(count_f_k(4, 1).unwrap(), 10);
        // F^2: brute-force expected value, equals |P_2(6,3)| = 15.
        assert_eq!(count_f_k(4, 2).unwrap(), 15);
        assert_eq!(enumerate_f_k(4, 2).unwrap().len(), 15);
    }

    #[test]
    fn enumeration_matches_sized_slices() {
        for n in 2..=6u32 {
            let all = enumerate_b(n).unwrap();
            for k in 0..(n as usize) {
                let sized = enumerate_f_k(n, k).unwrap();
                let filtered: Vec<_> =
                    all.iter().filter(|s| s.len() == k + 1).cloned().collect();
                assert_eq!(sized, filtered, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn output_is_strictly_sorted_and_laminar() {
        let all = enumerate_b(5).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.contains_v()));
    }

    #[test]
    fn children_count_on_masks() {
        let fam = vec![mask_of(&[1, 2]), mask_of(&[3, 4]), mask_of(&[3, 4, 5])];
        let v = mask_of(&[1, 2, 3, 4, 5]);
        assert_eq!(children_count(&fam, v), 2);
        assert_eq!(children_count(&fam, mask_of(&[3, 4, 5])), 2);
        assert_eq!(children_count(&fam, mask_of(&[1, 2])), 2);
    }

    #[test]
    fn known_cardinalities() {
        // |B(n-1)| = sum_j |P_2(n+j-1, j)|
        assert_eq!(enumerate_b(3).unwrap().len(), 4);
        assert_eq!(enumerate_b(4).unwrap().len(), 26);
        assert_eq!(enumerate_b(5).unwrap().len(), 236);
        assert_eq!(enumerate_b(6).unwrap().len(), 2752);
    }
}
