//! Orbit enumeration on `F^k(B(n-1))` under the natural `S_n` action and
//! under the `S_n` restriction of the combinatorial `S_{n+k}` action read
//! through the partition bijection.

use std::collections::BTreeSet;

use crate::action::Permutation;
use crate::bijection::{nested_to_partition, partition_to_nested};
use crate::block::SetPartition;
use crate::enumerate::enumerate_f_k;
use crate::error::{domain, Result};
use crate::nested::NestedSet;

/// Which of the two symmetric-group actions on `F^k(B(n-1))` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionMode {
    /// `S_n` relabels `{1..n}` directly on the nested sets.
    Natural,
    /// `S_n` sits inside `S_{n+k}` fixing the added labels and acts through
    /// the bijection with partitions of `{1..n+k}`.
    Extended,
}

fn natural_generators(n: u32) -> Vec<Permutation> {
    (1..n).map(|i| Permutation::transposition(n, i, i + 1).expect("valid transposition")).collect()
}

/// Orbits under the chosen action, as canonical representatives (the minimal
/// member of each orbit). BFS over adjacent-transposition generators.
pub fn orbits(k: usize, n: u32, mode: ActionMode) -> Result<Vec<NestedSet>> {
    if n < 2 || k < 1 {
        return domain("orbit enumeration needs n >= 2 and k >= 1");
    }
    let elements = enumerate_f_k(n, k)?;
    let gens = natural_generators(n);
    let mut remaining: BTreeSet<NestedSet> = elements.into_iter().collect();
    let mut reps = Vec::new();
    while let Some(start) = remaining.iter().next().cloned() {
        reps.push(start.clone());
        let mut frontier = vec![start.clone()];
        remaining.remove(&start);
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let img = match mode {
                    ActionMode::Natural => g.apply_nested(&x)?,
                    ActionMode::Extended => {
                        let p = nested_to_partition(&x)?;
                        let ext = g.extend_to(p.ground())?;
                        partition_to_nested(&ext.apply_partition(&p)?, n)?
                    }
                };
                if remaining.remove(&img) {
                    frontier.push(img);
                }
            }
        }
    }
    Ok(reps)
}

pub fn orbit_count(k: usize, n: u32, mode: ActionMode) -> Result<usize> {
    Ok(orbits(k, n, mode)?.len())
}

/// Burnside average over the whole acting group `S_n`: the orbit count is the
/// mean number of fixed points. Exact, no BFS involved.
pub fn orbit_count_burnside(k: usize, n: u32, mode: ActionMode) -> Result<usize> {
    if n < 2 || k < 1 {
        return domain("orbit counting needs n >= 2 and k >= 1");
    }
    let elements = enumerate_f_k(n, k)?;
    let partitions: Vec<SetPartition> = match mode {
        ActionMode::Extended => {
            elements.iter().map(nested_to_partition).collect::<Result<_>>()?
        }
        ActionMode::Natural => Vec::new(),
    };
    let mut total: u64 = 0;
    for g in Permutation::all(n) {
        let fixed = match mode {
            ActionMode::Natural => elements
                .iter()
                .filter(|s| g.apply_nested(s).map(|img| &img == *s).unwrap_or(false))
                .count(),
            ActionMode::Extended => {
                let ground = n + k as u32;
                let ext = g.extend_to(ground)?;
                partitions
                    .iter()
                    .filter(|p| ext.apply_partition(p).map(|img| &img == *p).unwrap_or(false))
                    .count()
            }
        };
        total += fixed as u64;
    }
    let group_order: u64 = (1..=n as u64).product();
    debug_assert_eq!(total % group_order, 0);
    Ok((total / group_order) as usize)
}

/// Canonical-form count for the extended mode: an orbit of the restricted
/// action is determined by, per part, the added labels it contains verbatim
/// and the number of original points. Independent of any BFS.
pub fn orbit_count_extended_canonical(k: usize, n: u32) -> Result<usize> {
    if n < 2 || k < 1 {
        return domain("orbit counting needs n >= 2 and k >= 1");
    }
    let mut forms = BTreeSet::new();
    for s in enumerate_f_k(n, k)? {
        let p = nested_to_partition(&s)?;
        let mut form: Vec<(usize, Vec<u32>)> = p
            .blocks()
            .iter()
            .map(|b| {
                let small = b.iter().filter(|&&e| e <= n).count();
                let big: Vec<u32> = b.iter().filter(|&&e| e > n).copied().collect();
                (small, big)
            })
            .collect();
        form.sort();
        forms.insert(form);
    }
    Ok(forms.len())
}

/// Orbit count of the full `S_{n+k}` action on the partition side: orbits are
/// exactly the multisets of part sizes.
pub fn orbit_count_full_symmetric(k: usize, n: u32) -> Result<usize> {
    if n < 2 || k < 1 {
        return domain("orbit counting needs n >= 2 and k >= 1");
    }
    let mut shapes = BTreeSet::new();
    for s in enumerate_f_k(n, k)? {
        let p = nested_to_partition(&s)?;
        let mut shape: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
        shape.sort_unstable();
        shapes.insert(shape);
    }
    Ok(shapes.len())
}
