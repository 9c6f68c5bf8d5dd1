//! Unlabeled rooted trees, their automorphism counts, and the tree-sum
//! identity behind the stratum series: summing one weight per tree class,
//! divided by the automorphism count, reproduces the closed derivative sum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::genfun::psi_series;
use crate::poly::{Exp, MultiPoly};
use crate::series::{factorial, EgfSeries};

/// Canonical rooted tree: children sorted, so equal trees compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new() }
    }

    pub fn new(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        RootedTree { children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(RootedTree::vertex_count).sum::<usize>()
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// `|Aut|`: the product over vertices of the factorials of the
    /// multiplicities of isomorphic child subtrees.
    pub fn automorphisms(&self) -> BigInt {
        let mut total = BigInt::one();
        let mut i = 0;
        while i < self.children.len() {
            let mut j = i;
            while j < self.children.len() && self.children[j] == self.children[i] {
                j += 1;
            }
            total *= factorial(j - i);
            total *= self.children[i].automorphisms().pow((j - i) as u32);
            i = j;
        }
        total
    }
}

/// All automorphism classes of rooted trees with exactly `m` vertices.
pub fn rooted_trees(m: usize) -> Vec<RootedTree> {
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![RootedTree::leaf()];
    }
    // all smaller trees, then canonical multisets summing to m - 1 vertices
    let pool: Vec<RootedTree> = (1..m).flat_map(rooted_trees).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<RootedTree> = Vec::new();
    multisets(&pool, 0, m - 1, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

fn multisets(
    pool: &[RootedTree],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<RootedTree>,
    out: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        out.push(RootedTree::new(chosen.clone()));
        return;
    }
    for i in from..pool.len() {
        let size = pool[i].vertex_count();
        if size <= remaining {
            chosen.push(pool[i].clone());
            multisets(pool, i, remaining - size, chosen, out);
            chosen.pop();
        }
    }
}

/// The tree weight: one factor `y^ν ψ^{(ν)}` per vertex with `ν` children.
fn tree_weight(tree: &RootedTree, psi_derivatives: &[EgfSeries]) -> EgfSeries {
    let nu = tree.children.len();
    let y_pow = MultiPoly::monomial(Exp { q: 0, y: nu as u32, z: 0 }, BigRational::one());
    let mut q = psi_derivatives[nu].scale_poly(&y_pow);
    for child in &tree.children {
        q = q.mul(&tree_weight(child, psi_derivatives));
    }
    q
}

/// Verifies through series order `trunc` that the sum over tree classes of
/// `Q(T)/Aut(T)` equals `Σ_{n≥1} y^{n-1} (ψ^n)^{(n-1)} / n!`.
pub fn tree_sum_check(trunc: usize) -> Result<bool> {
    let max_vertices = trunc; // an m-vertex tree weighs at least t^{m+1}
    // derivatives of order up to m-1 are taken before any product, so the
    // working order only needs the derivative slack
    let work = trunc + max_vertices.saturating_sub(1);
    let psi = psi_series(work)?;
    // a root of an m-vertex tree has at most m-1 children, so derivative
    // orders stay below max_vertices and every entry is exact to `trunc`
    let mut derivatives = vec![psi.truncate_to(trunc)];
    let mut running = psi.clone();
    for _ in 1..max_vertices.max(1) {
        running = running.ddt();
        derivatives.push(running.truncate_to(trunc));
    }
    let mut lhs = EgfSeries::zero(trunc);
    for m in 1..=max_vertices {
        for tree in rooted_trees(m) {
            let aut = tree.automorphisms();
            let weight = tree_weight(&tree, &derivatives)
                .scale(&BigRational::new(BigInt::one(), aut));
            lhs = lhs.add(&weight);
        }
    }
    let mut rhs = EgfSeries::zero(trunc);
    let mut power = EgfSeries::one(work);
    for n in 1..=max_vertices {
        power = power.mul(&psi); // ψ^n
        let mut term = power.clone();
        for _ in 1..n {
            term = term.ddt();
        }
        let y_pow = MultiPoly::monomial(Exp { q: 0, y: n as u32 - 1, z: 0 }, BigRational::one());
        rhs = rhs.add(&term.truncate_to(trunc).scale_poly(&y_pow).scale(&BigRational::new(
            BigInt::one(),
            factorial(n),
        )));
    }
    Ok(lhs.truncate_to(trunc) == rhs.truncate_to(trunc))
}
