//! Cohomology bases of the wonderful models: admissible monomials for the
//! minimal and maximal building sets, the basis of the supermaximal model,
//! and the labelled-partition picture of the minimal-model basis.
//!
//! An exponent on a generator is admissible when it stays below
//! `d = dim B - dim(sum of the members of the support and the background
//! stratum strictly below B)`. For the braid arrangement this `d` is the
//! child count of the vertex in the forest picture minus one, which is what
//! makes the labelled-partition description exact.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::bijection::tree_parts;
use crate::block::{full_mask, Block, Mask, SetPartition};
use crate::enumerate::{children_count, for_each_forest_compatible};
use crate::error::{domain, validation, Result};
use crate::exec::{map_reduce, Strategy};
use crate::labelled::LabelledPartition;
use crate::nested::{CChain, NestedSet};
use crate::poly::{Exp, MultiPoly};

/// Which model a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Minimal,
    Maximal,
    Supermaximal,
}

impl Model {
    pub fn parse(name: &str) -> Result<Model> {
        match name {
            "minimal" => Ok(Model::Minimal),
            "maximal" => Ok(Model::Maximal),
            "supermaximal" => Ok(Model::Supermaximal),
            other => domain(format!("unknown model {other}")),
        }
    }
}

/// Dimension of the subspace spanned by a family of blocks: overlapping
/// blocks merge into connected components, each contributing size minus one.
pub fn dim_sum(blocks: &[Block]) -> Result<u32> {
    if let Some(first) = blocks.first() {
        if blocks.iter().any(|b| b.ambient() != first.ambient()) {
            return validation("blocks do not share a common ambient set");
        }
    }
    Ok(mask_dim_sum(&blocks.iter().map(|b| b.mask()).collect::<Vec<_>>()))
}

pub(crate) fn mask_dim_sum(masks: &[Mask]) -> u32 {
    let mut comps: Vec<Mask> = Vec::new();
    for &m in masks {
        let mut merged = m;
        comps.retain(|&c| {
            if c & merged != 0 {
                merged |= c;
                false
            } else {
                true
            }
        });
        comps.push(merged);
    }
    comps.iter().map(|c| c.count_ones() - 1).sum()
}

/// `d_{H,B}^S` for the irreducible building set: `dim B` minus the dimension
/// of the span of `H` together with the members of `S` strictly below `B`.
pub fn d_hbs(h: &[Block], b: &Block, s: &NestedSet) -> Result<u32> {
    let n = b.ambient();
    if s.ambient() != n || h.iter().any(|a| a.ambient() != n) {
        return validation("mixed ambient sets");
    }
    let bm = b.mask();
    for a in h {
        let am = a.mask();
        if am == bm || am & bm != am {
            return domain(format!("{a} is not strictly below {b}"));
        }
    }
    let mut masks: Vec<Mask> = h.iter().map(|a| a.mask()).collect();
    for a in s.blocks() {
        let am = a.mask();
        if am != bm && am & bm == am {
            masks.push(am);
        }
    }
    masks.sort_unstable();
    masks.dedup();
    Ok(b.dim() - mask_dim_sum(&masks))
}

/// `d_{H,B}^S` for the maximal building set: all inputs are subspaces named
/// by partitions, dimensions add up blockwise and sums are lattice joins.
pub fn d_hbs_maximal(h: &[SetPartition], b: &SetPartition, s: &[SetPartition]) -> Result<u32> {
    let n = b.ground();
    if h.iter().chain(s.iter()).any(|p| p.ground() != n) {
        return validation("mixed ground sets");
    }
    for p in h {
        if !(p.refines(b) && p != b) {
            return domain("a member of H is not strictly below B");
        }
    }
    let mut below: Vec<&SetPartition> = h.iter().collect();
    below.extend(s.iter().filter(|p| p.refines(b) && *p != b));
    let mut join: Option<SetPartition> = None;
    for p in below {
        join = Some(match join {
            None => p.clone(),
            Some(j) => j.join(p)?,
        });
    }
    let span = join.map(|j| j.dim()).unwrap_or(0);
    Ok(b.dim() - span)
}

/// A basis monomial of the minimal-model flavor: positive exponents on a
/// laminar support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissibleMonomial {
    exponents: Vec<(Block, u32)>,
}

impl AdmissibleMonomial {
    pub fn new(mut exponents: Vec<(Block, u32)>) -> Self {
        exponents.sort_by_key(|(b, _)| b.family_key());
        AdmissibleMonomial { exponents }
    }

    pub fn one() -> Self {
        AdmissibleMonomial { exponents: Vec::new() }
    }

    pub fn exponents(&self) -> &[(Block, u32)] {
        &self.exponents
    }

    pub fn q_degree(&self) -> u32 {
        self.exponents.iter().map(|(_, e)| e).sum()
    }

    pub fn support(&self) -> Vec<&Block> {
        self.exponents.iter().map(|(b, _)| b).collect()
    }
}

/// A basis monomial of the maximal-model flavor: exponents on a chain of
/// subspaces named by partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MaximalMonomial {
    exponents: Vec<(SetPartition, u32)>,
}

impl MaximalMonomial {
    pub fn one() -> Self {
        MaximalMonomial { exponents: Vec::new() }
    }

    pub fn exponents(&self) -> &[(SetPartition, u32)] {
        &self.exponents
    }

    pub fn q_degree(&self) -> u32 {
        self.exponents.iter().map(|(_, e)| e).sum()
    }
}

/// A basis element of the supermaximal model: a pulled-back minimal-model
/// monomial times exponents on a strictly increasing chain of strata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupermaxBasisElement {
    pub eta: AdmissibleMonomial,
    pub chain: Vec<NestedSet>,
    pub deltas: Vec<u32>,
}

impl SupermaxBasisElement {
    pub fn q_degree(&self) -> u32 {
        self.eta.q_degree() + self.deltas.iter().sum::<u32>()
    }
}

/// Per support block of a candidate monomial with background `s_masks`, the
/// bound `d`; `None` when some member admits no positive exponent.
fn support_degrees(support: &[Mask], s_masks: &[Mask]) -> Option<Vec<u32>> {
    let mut merged: Vec<Mask> = support.to_vec();
    merged.extend_from_slice(s_masks);
    merged.sort_unstable();
    merged.dedup();
    let mut out = Vec::with_capacity(support.len());
    for &a in support {
        let d = children_count(&merged, a) as u32 - 1;
        if d < 2 {
            return None;
        }
        out.push(d);
    }
    Some(out)
}

/// All `V`-free laminar supports compatible with the background (`T ∪ S`
/// laminar); the variant with `V` attached shares all its bounds except the
/// one on `V`, so both are derived from the same walk.
fn compatible_forests(n: u32, s_masks: &[Mask]) -> Vec<Vec<Mask>> {
    let full = full_mask(n);
    let constraint: Vec<Mask> = s_masks.iter().copied().filter(|&m| m != full).collect();
    let mut out = Vec::new();
    for_each_forest_compatible(n, None, &constraint, &mut |forest: &[Mask]| {
        out.push(forest.to_vec());
    });
    out
}

/// Contribution of one `V`-free support and of its `V`-extension: the
/// product over the support of `q + q^2 + … + q^{d-1}`, times `1` plus the
/// analogous factor for `V`.
fn support_polynomial_with_v(support: &[Mask], s_masks: &[Mask], full: Mask) -> MultiPoly {
    match support_degrees(support, s_masks) {
        None => MultiPoly::zero(),
        Some(ds) => {
            let mut p = MultiPoly::one();
            for d in ds {
                p = &p * &MultiPoly::q_shifted_analog(d - 1);
            }
            let mut merged: Vec<Mask> = support.to_vec();
            merged.extend_from_slice(s_masks);
            merged.sort_unstable();
            merged.dedup();
            let d_v = children_count(&merged, full) as u32 - 1;
            let mut v_options = MultiPoly::one();
            if d_v >= 2 {
                v_options += &MultiPoly::q_shifted_analog(d_v - 1);
            }
            &p * &v_options
        }
    }
}

/// Poincaré polynomial (half degrees) of the stratum named by `s_masks` in
/// the minimal model, by folding the admissible-monomial counts over all
/// compatible supports.
pub(crate) fn stratum_poincare(s_masks: &[Mask], n: u32, strategy: Strategy) -> MultiPoly {
    let full = full_mask(n);
    let supports = compatible_forests(n, s_masks);
    map_reduce(
        &supports,
        strategy,
        MultiPoly::zero,
        |support| support_polynomial_with_v(support, s_masks, full),
        |mut a, b| {
            a += &b;
            a
        },
    )
}

fn validate_background(s: &NestedSet, n: u32) -> Result<()> {
    if s.ambient() != n {
        return domain("background stratum over a different ambient set");
    }
    if !s.contains_v() {
        return domain("background stratum must contain V");
    }
    Ok(())
}

/// All admissible monomials for the minimal building set on the stratum `s`.
pub fn enumerate_yuz_minimal(s: &NestedSet, n: u32) -> Result<Vec<AdmissibleMonomial>> {
    validate_background(s, n)?;
    let full = full_mask(n);
    let s_masks = s.masks();
    let mut out = Vec::new();
    for forest in compatible_forests(n, &s_masks) {
        let Some(ds) = support_degrees(&forest, &s_masks) else {
            continue;
        };
        let mut merged: Vec<Mask> = forest.clone();
        merged.extend_from_slice(&s_masks);
        merged.sort_unstable();
        merged.dedup();
        let d_v = children_count(&merged, full) as u32 - 1;
        // the support is the forest, optionally extended by V
        let mut variants: Vec<(Vec<Mask>, Vec<u32>)> = vec![(forest.clone(), ds.clone())];
        if d_v >= 2 {
            let mut with_v = forest.clone();
            with_v.push(full);
            let mut ds_v = ds.clone();
            ds_v.push(d_v);
            variants.push((with_v, ds_v));
        }
        for (support, ds) in variants {
            let mut tuple: Vec<u32> = vec![1; support.len()];
            loop {
                let exponents = support
                    .iter()
                    .zip(&tuple)
                    .map(|(&m, &e)| (Block::from_mask(m, n), e))
                    .collect();
                out.push(AdmissibleMonomial::new(exponents));
                let mut i = 0;
                while i < tuple.len() {
                    tuple[i] += 1;
                    if tuple[i] < ds[i] {
                        break;
                    }
                    tuple[i] = 1;
                    i += 1;
                }
                if i == tuple.len() {
                    break;
                }
            }
        }
    }
    out.sort_by(|a, b| (a.q_degree(), &a.exponents).cmp(&(b.q_degree(), &b.exponents)));
    Ok(out)
}

/// All C-elements over `{1..n}`: partitions with at least one part of size
/// two or more, the full partition included.
pub fn c_elements(n: u32) -> Vec<SetPartition> {
    crate::closure::all_partitions(n)
        .into_iter()
        .filter(SetPartition::is_c_element)
        .collect()
}

struct MaximalWalk<'a> {
    /// C-elements sorted by dimension.
    elements: &'a [SetPartition],
    /// `coarser[i]`: indices of elements strictly coarsened by element i.
    coarser: &'a [Vec<usize>],
    background: &'a [SetPartition],
}

impl MaximalWalk<'_> {
    /// Bound for a fresh chain top: its dimension minus the largest
    /// dimension below it among stack and background.
    fn degree(&self, stack: &[usize], cand: usize) -> u32 {
        let p = &self.elements[cand];
        let mut below = 0u32;
        if let Some(&last) = stack.last() {
            below = below.max(self.elements[last].dim());
        }
        for b in self.background {
            if b.refines(p) && b != p {
                below = below.max(b.dim());
            }
        }
        p.dim() - below
    }

    fn compatible_with_background(&self, cand: usize) -> bool {
        let p = &self.elements[cand];
        self.background.iter().all(|b| b.refines(p) || p.refines(b))
    }

    fn walk<F: FnMut(&[usize], &[u32])>(
        &self,
        stack: &mut Vec<usize>,
        degrees: &mut Vec<u32>,
        start_candidates: &[usize],
        emit: &mut F,
    ) {
        emit(stack, degrees);
        for &cand in start_candidates {
            if !self.compatible_with_background(cand) {
                continue;
            }
            let d = self.degree(stack, cand);
            if d < 2 {
                continue;
            }
            stack.push(cand);
            degrees.push(d);
            let next = self.coarser[cand].clone();
            self.walk(stack, degrees, &next, emit);
            degrees.pop();
            stack.pop();
        }
    }
}

/// All admissible monomials for the maximal building set on the stratum
/// named by `chain` (the background is the chain together with `V`).
pub fn enumerate_yuz_maximal(chain: &CChain, n: u32) -> Result<Vec<MaximalMonomial>> {
    if chain.ambient() != n {
        return domain("chain over a different ground set");
    }
    let mut background: Vec<SetPartition> = vec![SetPartition::full(n)];
    background.extend(chain.links().iter().cloned());
    let mut elements = c_elements(n);
    elements.sort_by_key(|p| (p.dim(), p.blocks().to_vec()));
    let coarser: Vec<Vec<usize>> = elements
        .iter()
        .map(|p| {
            elements
                .iter()
                .enumerate()
                .filter(|(_, q)| p.refines(q) && p != *q)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let walk = MaximalWalk { elements: &elements, coarser: &coarser, background: &background };
    let mut out: Vec<MaximalMonomial> = Vec::new();
    let starts: Vec<usize> = (0..elements.len()).collect();
    walk.walk(&mut Vec::new(), &mut Vec::new(), &starts, &mut |stack, degrees| {
        if stack.is_empty() {
            out.push(MaximalMonomial::one());
            return;
        }
        let mut tuple: Vec<u32> = vec![1; stack.len()];
        loop {
            let exponents: Vec<(SetPartition, u32)> = stack
                .iter()
                .zip(&tuple)
                .map(|(&i, &e)| (elements[i].clone(), e))
                .collect();
            out.push(MaximalMonomial { exponents });
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if tuple[i] < degrees[i] {
                    break;
                }
                tuple[i] = 1;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
    });
    out.sort_by(|a, b| (a.q_degree(), &a.exponents).cmp(&(b.q_degree(), &b.exponents)));
    Ok(out)
}

/// Aggregated Poincaré polynomial of the maximal model: product of
/// `q + … + q^{d-1}` over the chain, summed over all support chains.
fn maximal_poincare(n: u32) -> Result<MultiPoly> {
    let mut elements = c_elements(n);
    elements.sort_by_key(|p| (p.dim(), p.blocks().to_vec()));
    let coarser: Vec<Vec<usize>> = elements
        .iter()
        .map(|p| {
            elements
                .iter()
                .enumerate()
                .filter(|(_, q)| p.refines(q) && p != *q)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let background = [SetPartition::full(n)];
    let walk = MaximalWalk { elements: &elements, coarser: &coarser, background: &background };
    let mut total = MultiPoly::zero();
    let starts: Vec<usize> = (0..elements.len()).collect();
    walk.walk(&mut Vec::new(), &mut Vec::new(), &starts, &mut |_stack, degrees| {
        let mut p = MultiPoly::one();
        for &d in degrees {
            p = &p * &MultiPoly::q_shifted_analog(d - 1);
        }
        total += &p;
    });
    Ok(total)
}

/// Basis of the supermaximal model: chains with cardinality gaps of at least
/// two, exponents bounded by the gaps, and a monomial pulled back from the
/// deepest stratum of the chain.
///
/// The pulled-back factor must be admissible with respect to the largest
/// chain member: the blowup recursion takes coset representatives inside the
/// proper transform of the deepest stratum, so its own basis is what
/// survives. Pinning it to the smallest member instead would overcount — at
/// `n = 6` it would put tens of thousands of classes in the top degree of a
/// fourfold whose top Betti number is one.
pub fn enumerate_supermax_basis(n: u32) -> Result<Vec<SupermaxBasisElement>> {
    if n < 2 {
        return domain("ambient must be at least 2");
    }
    let mut out: Vec<SupermaxBasisElement> = Vec::new();
    for eta in enumerate_yuz_minimal(&NestedSet::trivial(n), n)? {
        out.push(SupermaxBasisElement { eta, chain: Vec::new(), deltas: Vec::new() });
    }
    let all = crate::enumerate::enumerate_b(n)?;
    let mut eta_cache: HashMap<usize, std::rc::Rc<Vec<AdmissibleMonomial>>> = HashMap::new();
    for (i, first) in all.iter().enumerate() {
        if first.len() < 3 {
            continue;
        }
        let mut chain_indices = vec![i];
        emit_chains(&all, n, &mut eta_cache, &mut chain_indices, &mut out)?;
    }
    out.sort_by(|a, b| {
        (a.q_degree(), &a.chain, &a.deltas, a.eta.exponents()).cmp(&(
            b.q_degree(),
            &b.chain,
            &b.deltas,
            b.eta.exponents(),
        ))
    });
    Ok(out)
}

fn emit_chains(
    all: &[NestedSet],
    n: u32,
    eta_cache: &mut HashMap<usize, std::rc::Rc<Vec<AdmissibleMonomial>>>,
    chain_indices: &mut Vec<usize>,
    out: &mut Vec<SupermaxBasisElement>,
) -> Result<()> {
    let links: Vec<NestedSet> = chain_indices.iter().map(|&i| all[i].clone()).collect();
    let mut gaps: Vec<u32> = Vec::with_capacity(links.len());
    let mut prev = 1usize;
    for link in &links {
        gaps.push((link.len() - prev) as u32);
        prev = link.len();
    }
    let top = *chain_indices.last().expect("chain is nonempty");
    let etas = match eta_cache.get(&top) {
        Some(e) => e.clone(),
        None => {
            let e = std::rc::Rc::new(enumerate_yuz_minimal(&all[top], n)?);
            eta_cache.insert(top, e.clone());
            e
        }
    };
    let mut deltas: Vec<u32> = vec![1; gaps.len()];
    loop {
        for eta in etas.iter() {
            out.push(SupermaxBasisElement {
                eta: eta.clone(),
                chain: links.clone(),
                deltas: deltas.clone(),
            });
        }
        let mut i = 0;
        while i < deltas.len() {
            deltas[i] += 1;
            if deltas[i] < gaps[i] {
                break;
            }
            deltas[i] = 1;
            i += 1;
        }
        if i == deltas.len() {
            break;
        }
    }
    for (j, cand) in all.iter().enumerate() {
        if cand.len() >= all[top].len() + 2 && all[top].is_subset_of(cand) {
            chain_indices.push(j);
            emit_chains(all, n, eta_cache, chain_indices, out)?;
            chain_indices.pop();
        }
    }
    Ok(())
}

/// The labelled-partition picture of a minimal-model basis monomial over the
/// big open stratum.
pub fn monomial_to_labelled_partition(m: &AdmissibleMonomial, n: u32) -> Result<LabelledPartition> {
    let mut blocks: Vec<Block> = m.exponents.iter().map(|(b, _)| b.clone()).collect();
    if !blocks.iter().any(Block::is_v) {
        blocks.push(Block::v(n));
    }
    let s = NestedSet::new(blocks, n)?;
    let exp_of = |mask: Mask| -> u32 {
        m.exponents
            .iter()
            .find(|(b, _)| b.mask() == mask)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    };
    let pairs: Vec<(Vec<u32>, u32)> = tree_parts(&s)?
        .into_iter()
        .map(|(mask, part)| (part, exp_of(mask)))
        .collect();
    LabelledPartition::from_pairs(pairs, n + s.len() as u32 - 1)
}

/// Poincaré polynomial of the chosen model in half degrees, by basis
/// enumeration (aggregated, no monomial materialization).
pub fn poincare(model: Model, n: u32) -> Result<MultiPoly> {
    poincare_with(model, n, Strategy::default())
}

pub fn poincare_with(model: Model, n: u32, strategy: Strategy) -> Result<MultiPoly> {
    if n < 2 {
        return domain("ambient must be at least 2");
    }
    match model {
        Model::Minimal => Ok(stratum_poincare(&[full_mask(n)], n, strategy)),
        Model::Maximal => maximal_poincare(n),
        Model::Supermaximal => supermax_poincare(n, strategy),
    }
}

/// Aggregated count of the supermaximal basis by q-degree. Grouping the
/// chains by their deepest member `S` collapses the chain sum into the
/// composition polynomial `D_{|S|-1}` (jumps of size >= 2 weighted by
/// `q [jump-1]_q` and a multinomial), leaving
/// `p_n + Σ_S Poin(D_S) · D_{|S|-1}`.
pub(crate) fn supermax_poincare(n: u32, strategy: Strategy) -> Result<MultiPoly> {
    let mut total = stratum_poincare(&[full_mask(n)], n, strategy);
    let all = crate::enumerate::enumerate_b(n)?;
    let chain_polys = crate::genfun::z_substitution_table(n.max(2) - 1);
    let masks: Vec<Vec<Mask>> = all.iter().map(NestedSet::masks).collect();
    let indices: Vec<usize> = (0..all.len()).collect();
    let chain_part = map_reduce(
        &indices,
        strategy,
        MultiPoly::zero,
        |&i| {
            if all[i].len() < 3 {
                return MultiPoly::zero();
            }
            let stratum = stratum_poincare(&masks[i], n, Strategy::Sequential);
            &stratum * &chain_polys[&(all[i].len() as u32 - 1)]
        },
        |mut a, b| {
            a += &b;
            a
        },
    );
    total += &chain_part;
    Ok(total)
}

/// Stratum Poincaré polynomial for a public nested set.
pub fn stratum_poincare_public(s: &NestedSet, n: u32) -> Result<MultiPoly> {
    validate_background(s, n)?;
    Ok(stratum_poincare(&s.masks(), n, Strategy::default()))
}

/// Map every minimal-model basis monomial to its labelled partition;
/// convenience for the characterization checks.
pub fn minimal_basis_labelled(n: u32) -> Result<Vec<LabelledPartition>> {
    let mut out = Vec::new();
    for m in enumerate_yuz_minimal(&NestedSet::trivial(n), n)? {
        out.push(monomial_to_labelled_partition(&m, n)?);
    }
    out.sort();
    Ok(out)
}

/// Count the monomials per q-degree of a list; shared by tests.
pub fn degree_polynomial(degrees: impl Iterator<Item = u32>) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for d in degrees {
        p.insert_term(Exp::q(d), BigRational::one());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_terms;

    fn b(elems: &[u32], n: u32) -> Block {
        Block::new(elems.to_vec(), n).unwrap()
    }

    #[test]
    fn dim_sum_examples() {
        assert_eq!(dim_sum(&[]).unwrap(), 0);
        assert_eq!(dim_sum(&[b(&[1, 2], 5), b(&[3, 4], 5)]).unwrap(), 2);
        assert_eq!(dim_sum(&[b(&[1, 2], 5), b(&[2, 3], 5)]).unwrap(), 2);
    }

    #[test]
    fn d_hbs_examples() {
        let n7 = NestedSet::trivial(7);
        assert_eq!(d_hbs(&[], &b(&[1, 2, 3, 5], 7), &n7).unwrap(), 3);
        let n5 = NestedSet::trivial(5);
        assert_eq!(d_hbs(&[b(&[3, 4], 5)], &b(&[3, 4, 5], 5), &n5).unwrap(), 1);
        let s = NestedSet::new(vec![Block::v(4), b(&[1, 2, 3], 4)], 4).unwrap();
        assert_eq!(d_hbs(&[], &Block::v(4), &s).unwrap(), 1);
        // precondition violation
        assert!(d_hbs(&[b(&[1, 2], 4)], &b(&[3, 4], 4), &NestedSet::trivial(4)).is_err());
    }

    #[test]
    fn minimal_poincare_small() {
        assert_eq!(poincare(Model::Minimal, 2).unwrap(), MultiPoly::one());
        assert_eq!(
            poincare(Model::Minimal, 3).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)])
        );
        assert_eq!(
            poincare(Model::Minimal, 4).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (5, 1, 0, 0), (1, 2, 0, 0)])
        );
        assert_eq!(
            poincare(Model::Minimal, 5).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (16, 1, 0, 0), (16, 2, 0, 0), (1, 3, 0, 0)])
        );
    }

    #[test]
    fn minimal_enumeration_agrees_with_aggregate() {
        for n in 2..=5u32 {
            let monomials = enumerate_yuz_minimal(&NestedSet::trivial(n), n).unwrap();
            let p = degree_polynomial(monomials.iter().map(AdmissibleMonomial::q_degree));
            assert_eq!(p, poincare(Model::Minimal, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn point_stratum_is_trivial() {
        let s = NestedSet::new(vec![Block::v(4), b(&[1, 2], 4), b(&[1, 2, 3], 4)], 4).unwrap();
        assert_eq!(stratum_poincare_public(&s, 4).unwrap(), MultiPoly::one());
    }

    #[test]
    fn maximal_poincare_small() {
        assert_eq!(
            poincare(Model::Maximal, 3).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)])
        );
        // P^2 blown up in the seven points of the braid line arrangement
        assert_eq!(
            poincare(Model::Maximal, 4).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (8, 1, 0, 0), (1, 2, 0, 0)])
        );
        let monomials = enumerate_yuz_maximal(&CChain::empty(4), 4).unwrap();
        let p = degree_polynomial(monomials.iter().map(MaximalMonomial::q_degree));
        assert_eq!(p, poincare(Model::Maximal, 4).unwrap());
    }

    #[test]
    fn supermax_poincare_n4() {
        assert_eq!(
            poincare(Model::Supermaximal, 4).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (20, 1, 0, 0), (1, 2, 0, 0)])
        );
        assert_eq!(poincare(Model::Supermaximal, 2).unwrap(), MultiPoly::one());
    }

    #[test]
    fn supermax_basis_matches_aggregate() {
        for n in 2..=5u32 {
            let basis = enumerate_supermax_basis(n).unwrap();
            let p = degree_polynomial(basis.iter().map(SupermaxBasisElement::q_degree));
            assert_eq!(p, poincare(Model::Supermaximal, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn supermax_n5_value() {
        assert_eq!(
            poincare(Model::Supermaximal, 5).unwrap(),
            poly_from_terms(&[(1, 0, 0, 0), (226, 1, 0, 0), (226, 2, 0, 0), (1, 3, 0, 0)])
        );
    }

    #[test]
    fn labelled_partition_of_paper_monomials() {
        let m = AdmissibleMonomial::new(vec![(b(&[1, 2, 3, 5], 7), 2), (b(&[4, 6, 7], 7), 1)]);
        let lp = monomial_to_labelled_partition(&m, 7).unwrap();
        assert_eq!(lp.to_string(), "{1,2,3,5}^2{4,6,7}^1{8,9}^0");
        let m = AdmissibleMonomial::new(vec![(b(&[1, 2, 3, 5], 7), 2), (Block::v(7), 2)]);
        let lp = monomial_to_labelled_partition(&m, 7).unwrap();
        assert_eq!(lp.to_string(), "{1,2,3,5}^2{4,6,7,8}^2");
        let lp = monomial_to_labelled_partition(&AdmissibleMonomial::one(), 2).unwrap();
        assert_eq!(lp.to_string(), "{1,2}^0");
    }

    #[test]
    fn labelled_characterization_small() {
        for n in 2..=4u32 {
            let image = minimal_basis_labelled(n).unwrap();
            let mut expected = Vec::new();
            for k in 0..=(n as usize).saturating_sub(2) {
                expected.extend(crate::labelled::enumerate_labelled_partitions(n, k).unwrap());
            }
            expected.sort();
            assert_eq!(image, expected, "n={n}");
        }
    }
}
