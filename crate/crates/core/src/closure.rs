//! Closure of a family of strata under the extended action and the
//! building-set union rule.
//!
//! The fixed point certifies, by computation, that the strata reachable from
//! the maximal-model seed exhaust the whole poset `B(n-1)`: the supermaximal
//! model is the smallest one over the maximal model carrying the `S_{n+1}`
//! action.

use std::collections::BTreeSet;

use crate::action::{act_nested, ExtPermutation};
use crate::block::SetPartition;
use crate::error::{domain, Result};
use crate::exec::{flat_map_collect, Strategy};
use crate::nested::{phi_embed, CChain, NestedSet};

/// How two members may combine under the union rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnionRule {
    /// Members must share a block beyond `V` and have a laminar union. This
    /// is the reading under which the closure theorem is verified.
    #[default]
    BeyondV,
    /// Members only need a laminar union (intersection exactly `{V}` also
    /// triggers the rule). Exposed for experimentation; not the default.
    AnyWithV,
}

fn union_applies(rule: UnionRule, x: &NestedSet, y: &NestedSet) -> Option<NestedSet> {
    let shared = x.blocks().iter().filter(|b| y.contains(b)).count();
    let enough = match rule {
        UnionRule::BeyondV => shared >= 2,
        UnionRule::AnyWithV => shared >= 1,
    };
    if !enough {
        return None;
    }
    let mut masks = x.masks();
    masks.extend(y.masks());
    masks.sort_unstable();
    masks.dedup();
    if masks.len() == x.len() || masks.len() == y.len() {
        return None; // one contains the other, nothing new
    }
    if !crate::nested::masks_laminar(&masks) {
        return None;
    }
    Some(NestedSet::from_masks(masks, x.ambient()))
}

/// Least fixed point of the orbit rule (images under all adjacent
/// transpositions of `S_{n+1}`) and the union rule. The trivial family `{V}`
/// is always part of the result, matching the convention that adding it to a
/// building set changes nothing.
///
/// Frontier expansion may run data-parallel; the candidate batches are
/// merged through a sorted set, so the result is schedule-independent.
pub fn building_closure_with(
    seed: &[NestedSet],
    n: u32,
    rule: UnionRule,
    strategy: Strategy,
) -> Result<Vec<NestedSet>> {
    if n < 2 {
        return domain(format!("ambient {n} too small"));
    }
    for s in seed {
        if s.ambient() != n || !s.contains_v() {
            return domain("seed members must be elements of B(n-1)");
        }
    }
    let generators: Vec<ExtPermutation> =
        (0..n).map(|i| ExtPermutation::adjacent(n, i).expect("valid generator")).collect();
    let mut visited: BTreeSet<NestedSet> = BTreeSet::new();
    visited.insert(NestedSet::trivial(n));
    let mut frontier: Vec<NestedSet> = Vec::new();
    for s in seed {
        if visited.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    while !frontier.is_empty() {
        let candidates = flat_map_collect(&frontier, strategy, |x| {
            let mut local = Vec::new();
            for sigma in &generators {
                let img = act_nested(sigma, x).expect("the extended action stays in B(n-1)");
                if !visited.contains(&img) {
                    local.push(img);
                }
            }
            for y in visited.iter().chain(frontier.iter()) {
                if let Some(u) = union_applies(rule, x, y) {
                    if !visited.contains(&u) {
                        local.push(u);
                    }
                }
            }
            local
        });
        let fresh: BTreeSet<NestedSet> = candidates.into_iter().collect();
        frontier = fresh.into_iter().filter(|s| !visited.contains(s)).collect();
        for s in &frontier {
            visited.insert(s.clone());
        }
    }
    Ok(visited.into_iter().collect())
}

pub fn building_closure(seed: &[NestedSet], n: u32) -> Result<Vec<NestedSet>> {
    building_closure_with(seed, n, UnionRule::default(), Strategy::default())
}

/// The seed `φ(F¹(N'(C_{A_{n-1}})))`: for every proper subspace of the
/// maximal building set, the family of `V` together with its irreducible
/// summands.
pub fn maximal_seed(n: u32) -> Result<Vec<NestedSet>> {
    if n < 2 {
        return domain(format!("ambient {n} too small"));
    }
    let mut out = Vec::new();
    let mut partitions: Vec<Vec<Vec<u32>>> = Vec::new();
    gen_partitions(1, n, &mut vec![], &mut partitions);
    for blocks in partitions {
        let p = SetPartition::new(blocks, n)?;
        if !p.is_c_element() || p.is_full() {
            continue;
        }
        let chain = CChain::new(vec![p], n)?;
        let image = phi_embed(&chain);
        out.push(image.links()[0].clone());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn gen_partitions(next: u32, n: u32, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    if next > n {
        out.push(acc.clone());
        return;
    }
    for i in 0..acc.len() {
        acc[i].push(next);
        gen_partitions(next + 1, n, acc, out);
        acc[i].pop();
    }
    acc.push(vec![next]);
    gen_partitions(next + 1, n, acc, out);
    acc.pop();
}

/// All set partitions of `{1..n}`, used for the maximal building set and for
/// Burnside averages.
pub fn all_partitions(n: u32) -> Vec<SetPartition> {
    let mut raw = Vec::new();
    gen_partitions(1, n, &mut vec![], &mut raw);
    raw.into_iter()
        .map(|blocks| SetPartition::new(blocks, n).expect("generated partition is valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_b;

    #[test]
    fn closed_set_stays_put() {
        let all = enumerate_b(4).unwrap();
        let closed = building_closure(&all, 4).unwrap();
        assert_eq!(closed, all);
    }

    #[test]
    fn seed_size_n4() {
        // one seed element per proper C-element: partitions of 4 with a part
        // of size >= 2, minus the full block: (15 - 1) - 1 = 13
        assert_eq!(maximal_seed(4).unwrap().len(), 13);
    }

    #[test]
    fn closure_theorem_n4() {
        let seed = maximal_seed(4).unwrap();
        let closed = building_closure(&seed, 4).unwrap();
        assert_eq!(closed, enumerate_b(4).unwrap());
    }

    #[test]
    fn closure_theorem_n5() {
        let seed = maximal_seed(5).unwrap();
        let closed = building_closure(&seed, 5).unwrap();
        assert_eq!(closed, enumerate_b(5).unwrap());
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let seed = maximal_seed(4).unwrap();
        let once = building_closure(&seed, 4).unwrap();
        let twice = building_closure(&once, 4).unwrap();
        assert_eq!(once, twice);
        let smaller = building_closure(&seed[..3], 4).unwrap();
        assert!(smaller.iter().all(|s| once.contains(s)));
    }
}
