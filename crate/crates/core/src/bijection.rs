//! The bijection between `F^k(B(n-1))` and partitions of `{1..n+k}` into
//! `k+1` parts of size at least two.
//!
//! Forward direction: represent the nested set as a rooted tree with `n`
//! leaves, compute levels (leaves at level 0), label internal vertices level
//! by level ordered by minimal element, and record per vertex the labels of
//! its children. The inverse rebuilds the levels from the bottom: a part is
//! placeable once all its members name already-labelled vertices.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::block::{full_mask, mask_elements, Mask, SetPartition};
use crate::error::{domain, internal, Result};
use crate::nested::NestedSet;

/// Number of partitions of `{1..m}` into `j` parts of size >= 2, by the
/// recurrence `S(m,j) = j S(m-1,j) + (m-1) S(m-2,j-1)`.
pub fn stirling2_assoc(m: usize, j: usize) -> BigUint {
    if j > m / 2 {
        return BigUint::zero();
    }
    // rows m-1 and m-2 suffice; keep the full table, m stays tiny
    let mut table = vec![vec![BigUint::zero(); j + 1]; m + 1];
    table[0][0] = BigUint::one();
    for mm in 1..=m {
        for jj in 1..=j.min(mm / 2) {
            let a = &table[mm - 1][jj] * BigUint::from(jj);
            let b = if mm >= 2 { &table[mm - 2][jj - 1] * BigUint::from(mm - 1) } else { BigUint::zero() };
            table[mm][jj] = a + b;
        }
    }
    table[m][j].clone()
}

fn leafed_levels(masks: &[Mask]) -> Vec<usize> {
    // level of a block = 1 + max level of sub-blocks, minimal blocks at 1
    let mut levels = vec![0usize; masks.len()];
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&i| masks[i].count_ones());
    for &i in &order {
        let mut lvl = 1;
        for (j, &other) in masks.iter().enumerate() {
            if other != masks[i] && other & masks[i] == other {
                lvl = lvl.max(levels[j] + 1);
            }
        }
        levels[i] = lvl;
    }
    levels
}

/// Per vertex of the labelled tree, the set of labels of its children.
/// Returned as (vertex mask, part) pairs; the parts assemble to the image
/// partition of `{1..n+k}`.
pub(crate) fn tree_parts(s: &NestedSet) -> Result<Vec<(Mask, Vec<u32>)>> {
    if !s.contains_v() {
        return domain("bijection needs a family containing V");
    }
    let n = s.ambient();
    let masks = s.masks();
    let levels = leafed_levels(&masks);
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&i| (levels[i], masks[i].trailing_zeros()));
    // labels n+1 .. n+k+1 in level order, minima first inside a level
    let mut label = vec![0u32; masks.len()];
    for (pos, &i) in order.iter().enumerate() {
        label[i] = n + pos as u32 + 1;
    }
    let mut out: Vec<(Mask, Vec<u32>)> = Vec::with_capacity(masks.len());
    for (i, &m) in masks.iter().enumerate() {
        let mut covered: Mask = 0;
        let mut part: Vec<u32> = Vec::new();
        for (j, &c) in masks.iter().enumerate() {
            if c != m && c & m == c {
                let maximal = !masks
                    .iter()
                    .any(|&d| d != m && d != c && d & m == d && c & d == c);
                if maximal {
                    part.push(label[j]);
                    covered |= c;
                }
            }
        }
        part.extend(mask_elements(m & !covered));
        part.sort_unstable();
        debug_assert!(part.len() >= 2, "vertex {i} covers fewer than two children");
        out.push((m, part));
    }
    Ok(out)
}

/// Labels of the children of each vertex, per the labelled-tree procedure.
pub fn nested_to_partition(s: &NestedSet) -> Result<SetPartition> {
    let parts: Vec<Vec<u32>> = tree_parts(s)?.into_iter().map(|(_, part)| part).collect();
    let n = s.ambient();
    let k = s.len() - 1;
    SetPartition::new(parts, n + k as u32)
}

/// Inverse of [`nested_to_partition`]. The reconstruction mirrors the forward
/// labelling level by level; any inconsistency is reported as an internal
/// error since the map is a bijection on the stated domain.
pub fn partition_to_nested(p: &SetPartition, n: u32) -> Result<NestedSet> {
    let m = p.ground();
    if n < 2 || m < n {
        return domain(format!("ground {m} incompatible with ambient {n}"));
    }
    let k = (m - n) as usize;
    if p.blocks().len() != k + 1 {
        return domain(format!(
            "expected {} parts for ground {} over ambient {}, got {}",
            k + 1,
            m,
            n,
            p.blocks().len()
        ));
    }
    if p.blocks().iter().any(|b| b.len() < 2) {
        return domain("every part must have size >= 2");
    }
    // vertex data per internal label n+1 ..= n+k+1, filled as levels grow
    let mut vertex: Vec<Option<(Mask, usize)>> = vec![None; k + 2]; // (mask, level)
    let mut placed = vec![false; k + 1];
    let mut next_label = n + 1;
    while placed.iter().any(|&d| !d) {
        // placeable parts: every member already names a vertex
        let mut ready: Vec<(usize, usize, Mask)> = Vec::new(); // (part idx, max child level, mask)
        for (i, part) in p.blocks().iter().enumerate() {
            if placed[i] {
                continue;
            }
            let mut max_child = 0usize;
            let mut mask: Mask = 0;
            let mut ok = true;
            for &e in part {
                if e <= n {
                    mask |= 1 << (e - 1);
                } else if e < next_label {
                    let (vm, vl) = vertex[(e - n) as usize].expect("labelled vertex recorded");
                    mask |= vm;
                    max_child = max_child.max(vl);
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                ready.push((i, max_child, mask));
            }
        }
        if ready.is_empty() {
            return internal("no placeable part, the labelling cannot be inverted");
        }
        let level = ready.iter().map(|&(_, l, _)| l).min().unwrap() + 1;
        let mut this_level: Vec<(usize, Mask)> = ready
            .into_iter()
            .filter(|&(_, l, _)| l + 1 == level)
            .map(|(i, _, mask)| (i, mask))
            .collect();
        this_level.sort_by_key(|&(_, mask)| mask.trailing_zeros());
        for (i, mask) in this_level {
            vertex[(next_label - n) as usize] = Some((mask, level));
            placed[i] = true;
            next_label += 1;
        }
    }
    let masks: Vec<Mask> = vertex[1..=k + 1]
        .iter()
        .map(|v| v.expect("all vertices labelled").0)
        .collect();
    if masks.iter().any(|&m| m.count_ones() < 2) {
        return internal("reconstructed vertex smaller than a block");
    }
    if !crate::nested::masks_laminar(&masks) {
        return internal("reconstructed family is not laminar");
    }
    let mut sorted = masks.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != masks.len() {
        return internal("reconstructed family has repeated blocks");
    }
    if !masks.contains(&full_mask(n)) {
        return internal("reconstructed family misses V");
    }
    let s = NestedSet::from_masks(masks, n);
    let back = nested_to_partition(&s)?;
    if &back != p {
        return internal("roundtrip through the labelled tree disagrees");
    }
    Ok(s)
}

/// `|F^k(B(n-1))|` must equal `stirling2_assoc(n+k, k+1)`; convenience used
/// by the verification suite.
pub fn f_k_matches_stirling(n: u32, k: usize) -> Result<bool> {
    let count = crate::enumerate::count_f_k(n, k)?;
    Ok(BigUint::from(count) == stirling2_assoc(n as usize + k, k + 1))
}
