//! Labelled partitions: set partitions of `{1..m}` whose parts carry the
//! exponents of a cohomology basis monomial.
//!
//! The label of a part is bounded by its size minus two, and only the part
//! containing `m` may carry the label 0 (the case where the class of the
//! ambient divisor is absent from the monomial).

use std::fmt;

use crate::action::Permutation;
use crate::block::SetPartition;
use crate::error::{domain, validation, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledPartition {
    partition: SetPartition,
    labels: Vec<u32>, // parallel to partition.blocks()
}

impl LabelledPartition {
    pub fn new(partition: SetPartition, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != partition.blocks().len() {
            return validation("one label per part required");
        }
        let m = partition.ground();
        let mut zeros = 0usize;
        for (part, &label) in partition.blocks().iter().zip(&labels) {
            if part.len() < 2 {
                return validation("labelled partitions have parts of size >= 2");
            }
            if label as usize > part.len() - 2 {
                return validation(format!(
                    "label {label} exceeds bound {} for part {part:?}",
                    part.len() - 2
                ));
            }
            if label == 0 {
                zeros += 1;
                if !part.contains(&m) {
                    return validation("only the part containing the top point may be unlabelled");
                }
            }
        }
        if zeros > 1 {
            return validation("at most one unlabelled part");
        }
        Ok(LabelledPartition { partition, labels })
    }

    /// Builds from (part, label) pairs; parts are put in canonical order with
    /// their labels kept attached.
    pub fn from_pairs(pairs: Vec<(Vec<u32>, u32)>, ground: u32) -> Result<Self> {
        let mut pairs = pairs;
        for (part, _) in pairs.iter_mut() {
            part.sort_unstable();
        }
        pairs.sort_by_key(|(part, _)| part.first().copied().unwrap_or(0));
        let (blocks, labels): (Vec<Vec<u32>>, Vec<u32>) = pairs.into_iter().unzip();
        LabelledPartition::new(SetPartition::new(blocks, ground)?, labels)
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn ground(&self) -> u32 {
        self.partition.ground()
    }

    pub fn has_zero_label(&self) -> bool {
        self.labels.contains(&0)
    }

    /// Total cohomological half-degree of the monomial this stands for.
    pub fn q_degree(&self) -> u32 {
        self.labels.iter().sum()
    }
}

impl fmt::Display for LabelledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (part, label) in self.partition.blocks().iter().zip(&self.labels) {
            write!(f, "{{")?;
            for (i, e) in part.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}^{label}")?;
        }
        Ok(())
    }
}

/// Permutation action on labelled partitions: parts move elementwise and
/// carry their labels. When an unlabelled part is present the acting group
/// is the stabilizer of the top point.
pub fn act_labelled_partition(
    pi: &Permutation,
    lp: &LabelledPartition,
) -> Result<LabelledPartition> {
    let m = lp.ground();
    if pi.degree() != m {
        return domain("permutation degree does not match the partition ground");
    }
    if lp.has_zero_label() && !pi.fixes(m) {
        return domain(format!(
            "a zero label is present, so the action group is the stabilizer of {m}"
        ));
    }
    let pairs: Vec<(Vec<u32>, u32)> = lp
        .partition
        .blocks()
        .iter()
        .zip(&lp.labels)
        .map(|(part, &label)| (pi.apply_set(part), label))
        .collect();
    LabelledPartition::from_pairs(pairs, m)
}

/// Every labelled partition of `{1..n+k}` into `k+1` parts satisfying the
/// bounds, by direct enumeration. This is the independent description of the
/// image of the minimal-model basis.
pub fn enumerate_labelled_partitions(n: u32, k: usize) -> Result<Vec<LabelledPartition>> {
    if n < 2 {
        return domain("ambient must be at least 2");
    }
    let m = n + k as u32;
    let mut out = Vec::new();
    let mut raw = Vec::new();
    gen_sized_partitions(1, m, k + 1, &mut vec![], &mut raw);
    for blocks in raw {
        let p = SetPartition::new(blocks, m)?;
        let mut ranges: Vec<Vec<u32>> = Vec::with_capacity(p.blocks().len());
        let mut feasible = true;
        for part in p.blocks() {
            let top = part.len() as u32 - 2;
            let low = if part.contains(&m) { 0 } else { 1 };
            if low > top {
                feasible = false;
                break;
            }
            ranges.push((low..=top).collect());
        }
        if !feasible {
            continue;
        }
        let mut choice = vec![0usize; ranges.len()];
        loop {
            let labels: Vec<u32> = choice.iter().zip(&ranges).map(|(&c, r)| r[c]).collect();
            out.push(LabelledPartition::new(p.clone(), labels)?);
            let mut i = 0;
            loop {
                if i == ranges.len() {
                    break;
                }
                choice[i] += 1;
                if choice[i] < ranges[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == ranges.len() {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

fn gen_sized_partitions(
    next: u32,
    m: u32,
    max_parts: usize,
    acc: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if next > m {
        if acc.len() == max_parts && acc.iter().all(|p| p.len() >= 2) {
            out.push(acc.clone());
        }
        return;
    }
    for i in 0..acc.len() {
        acc[i].push(next);
        gen_sized_partitions(next + 1, m, max_parts, acc, out);
        acc[i].pop();
    }
    if acc.len() < max_parts {
        acc.push(vec![next]);
        gen_sized_partitions(next + 1, m, max_parts, acc, out);
        acc.pop();
    }
}
