//! The generating series: the Poincaré series of the minimal models, the
//! four-variable stratum series, the substitution giving the supermaximal
//! Poincaré series, the Euler-characteristic specialization, and the
//! labelled-partition series of the minimal model. Every closed formula has
//! a brute-force companion computed by enumeration.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::block::{full_mask, Mask};
use crate::cohomology::stratum_poincare;
use crate::enumerate::{children_count, for_each_forest};
use crate::error::{domain, Result};
use crate::exec::{map_reduce, Strategy};
use crate::poly::{Exp, MultiPoly};
use crate::series::{factorial, EgfSeries};

/// `R(λ) = Σ_{m≥2} q[m-1]_q λ^m / m!`, the branching factor of the nested
/// forest recursion with the division by `q - 1` removed analytically.
fn branching(lambda: &EgfSeries, trunc: usize) -> EgfSeries {
    let mut r = EgfSeries::zero(trunc);
    let mut power = lambda.clone(); // λ^1
    for m in 2..=trunc {
        power = power.mul(lambda);
        if power.valuation().is_none() {
            break;
        }
        let coeff = MultiPoly::q_shifted_analog(m as u32 - 1)
            .scale(&BigRational::new(BigInt::one(), factorial(m)));
        r = r.add(&power.scale_poly(&coeff));
    }
    r
}

/// The tree part `λ(q,t)` of the minimal-model Poincaré series: fixed point
/// of `λ' = 1 / (1 - R(λ))` with `λ = t + …`.
pub(crate) fn lambda_series(trunc: usize) -> EgfSeries {
    let mut lambda = EgfSeries::t(trunc);
    loop {
        let derivative = branching(&lambda, trunc)
            .geometric()
            .expect("R has zero constant term");
        let next = derivative.integrate().truncate_to(trunc);
        if next == lambda {
            return lambda;
        }
        lambda = next;
    }
}

/// `Φ(q,t) = e^λ - 1 = t + Σ_{n≥2} p_n(q) t^n/n!`: the Poincaré series of
/// the minimal models.
pub fn phi_series(trunc: usize) -> Result<EgfSeries> {
    if trunc < 1 {
        return domain("the series starts at t^1");
    }
    let lambda = lambda_series(trunc);
    Ok(lambda.exp()?.sub(&EgfSeries::one(trunc)))
}

/// `p_n(q)` read off the closed-form series.
pub fn minimal_poincare_from_phi(n: u32) -> Result<MultiPoly> {
    if n < 2 {
        return domain("Poincaré polynomials start at n = 2");
    }
    phi_series(n as usize)?.egf_coeff_integral(n as usize)
}

/// `w_n(z) = Σ_j |P_2(n+j-1, j)| z^{j-1}`: the census of `B(n-1)` by
/// cardinality.
pub fn w_polynomial(n: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for j in 1..n.max(2) {
        let count = crate::bijection::stirling2_assoc(n as usize + j as usize - 1, j as usize);
        p.insert_term(
            Exp { q: 0, y: 0, z: j - 1 },
            BigRational::from_integer(BigInt::from(count)),
        );
    }
    p
}

/// `W(t,z) = Σ_{n≥2} w_n(z) t^n`, ordinary coefficients.
pub fn w_series(trunc: usize) -> EgfSeries {
    let mut coeffs = vec![MultiPoly::zero(); trunc + 1];
    for (n, c) in coeffs.iter_mut().enumerate().take(trunc + 1).skip(2) {
        *c = w_polynomial(n as u32);
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `ψ(t,q,z) = Σ_{n≥2} p_n(q) w_n(z) t^n/n!`.
pub fn psi_series(trunc: usize) -> Result<EgfSeries> {
    if trunc < 2 {
        return domain("ψ starts at t^2");
    }
    let phi = phi_series(trunc)?;
    let mut coeffs = vec![MultiPoly::zero(); trunc + 1];
    for (n, c) in coeffs.iter_mut().enumerate().take(trunc + 1).skip(2) {
        let p_n = phi.egf_coeff_integral(n)?;
        let product = &p_n * &w_polynomial(n as u32);
        *c = product.scale(&BigRational::new(BigInt::one(), factorial(n)));
    }
    Ok(EgfSeries::from_coeffs(coeffs))
}

/// `Γ = Σ_{ℓ≥1} y^ℓ (ψ^ℓ)^{(ℓ-1)} / ℓ!`, computed against a pre-built `ψ`.
fn gamma_from_psi(psi: &EgfSeries, trunc: usize) -> EgfSeries {
    let mut gamma = EgfSeries::zero(psi.truncation_order());
    let mut power = EgfSeries::one(psi.truncation_order());
    for l in 1..=trunc.max(1) {
        power = power.mul(psi); // ψ^ℓ
        let mut term = power.clone();
        for _ in 1..l {
            term = term.ddt();
        }
        let y_l = MultiPoly::monomial(Exp { q: 0, y: l as u32, z: 0 }, BigRational::one());
        let scaled = term
            .scale(&BigRational::new(BigInt::one(), factorial(l)))
            .scale_poly(&y_l);
        gamma = gamma.add(&scaled);
        // ψ^ℓ has valuation 2ℓ, the derivative keeps ℓ+1 of it
        if l + 1 > trunc {
            break;
        }
    }
    gamma
}

/// `Γ(t,q,y,z)` at the requested order.
pub fn gamma_series(trunc: usize) -> Result<EgfSeries> {
    let work = 2 * trunc;
    let psi = psi_series(work)?;
    Ok(gamma_from_psi(&psi, trunc).truncate_to(trunc))
}

/// The four-variable stratum series by the closed formula:
/// `ξ = Φ + Σ_{ν≥1} ψ^{(ν)} Γ^ν / ν!`.
pub fn xi_series(trunc: usize) -> Result<EgfSeries> {
    if trunc < 2 {
        return domain("ξ starts at t^2");
    }
    let work = 2 * trunc + 1;
    let psi = psi_series(work)?;
    let gamma = gamma_from_psi(&psi, trunc);
    let mut xi = phi_series(work)?;
    let mut derivative = psi.clone();
    let mut gamma_power = EgfSeries::one(gamma.truncation_order());
    for nu in 1..=trunc {
        derivative = derivative.ddt(); // ψ^{(ν)}
        gamma_power = gamma_power.mul(&gamma); // Γ^ν
        let term = derivative
            .mul(&gamma_power)
            .scale(&BigRational::new(BigInt::one(), factorial(nu)));
        xi = xi.add(&term);
    }
    Ok(xi.truncate_to(trunc))
}

/// Record of one stratum's contribution to the brute-force series: the
/// census numbers `N_{r,S}` weighted by the stratum Poincaré polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiTermRecord {
    pub s_masks: Vec<Mask>,
    pub r: usize,
    pub poincare_ds: MultiPoly,
    pub n_rs: u64,
}

/// Brute-force evaluation of the stratum series for a single `n`: every
/// stratum `S`, every census count `N_{r,S}`, every Poincaré polynomial by
/// basis enumeration.
pub fn xi_records(n: u32, strategy: Strategy) -> Result<Vec<XiTermRecord>> {
    if n < 2 {
        return domain("strata exist from n = 2 on");
    }
    let full = full_mask(n);
    let mut census: HashMap<(Vec<Mask>, usize), u64> = HashMap::new();
    for_each_forest(n, None, |forest| {
        // subsets of the family containing V, of size >= 2
        let extra = forest.len();
        for pick in 0u32..(1 << extra) {
            if pick.count_ones() < 1 {
                continue;
            }
            let mut sub: Vec<Mask> = (0..extra)
                .filter(|i| pick & (1 << i) != 0)
                .map(|i| forest[i])
                .collect();
            sub.push(full);
            sub.sort_unstable();
            let r = extra + 1 - sub.len();
            *census.entry((sub, r)).or_insert(0) += 1;
        }
    });
    let entries: Vec<((Vec<Mask>, usize), u64)> = census.into_iter().collect();
    let keys: Vec<Vec<Mask>> = {
        let mut ks: Vec<Vec<Mask>> = entries.iter().map(|((s, _), _)| s.clone()).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    };
    let polys: Vec<(Vec<Mask>, MultiPoly)> = map_reduce(
        &keys,
        strategy,
        Vec::new,
        |s| vec![(s.clone(), stratum_poincare(s, n, Strategy::Sequential))],
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    let poincare_of: HashMap<Vec<Mask>, MultiPoly> = polys.into_iter().collect();
    let mut out: Vec<XiTermRecord> = entries
        .into_iter()
        .map(|((s, r), count)| XiTermRecord {
            poincare_ds: poincare_of[&s].clone(),
            s_masks: s,
            r,
            n_rs: count,
        })
        .collect();
    out.sort_by(|a, b| (&a.s_masks, a.r).cmp(&(&b.s_masks, b.r)));
    Ok(out)
}

/// The brute-force stratum series: `Φ` by enumeration plus the census terms
/// `Poin(D_S) · N_{r,S} · y^{|S|-1} z^r t^n/n!`.
pub fn xi_direct(n_max: u32, strategy: Strategy) -> Result<EgfSeries> {
    if n_max < 2 {
        return domain("ξ starts at t^2");
    }
    let trunc = n_max as usize;
    let mut coeffs = vec![MultiPoly::zero(); trunc + 1];
    coeffs[1] = MultiPoly::one();
    for n in 2..=n_max {
        let inv_fact = BigRational::new(BigInt::one(), factorial(n as usize));
        // Φ part: the big open stratum, admissible monomials by enumeration
        let mut c = stratum_poincare(&[full_mask(n)], n, strategy);
        for record in xi_records(n, strategy)? {
            let l = record.s_masks.len() as u32 - 1;
            let weight = MultiPoly::monomial(
                Exp { q: 0, y: l, z: record.r as u32 },
                BigRational::from_integer(BigInt::from(record.n_rs)),
            );
            c += &(&record.poincare_ds * &weight);
        }
        coeffs[n as usize] = c.scale(&inv_fact);
    }
    Ok(EgfSeries::from_coeffs(coeffs))
}

/// The single-jump images `y^ℓ ↦ (q^ℓ - q)/(q - 1) = q [ℓ-1]_q`; these are
/// the one-part terms of the composition polynomials below, kept separate so
/// the two can be diffed in tests.
pub fn y_substitution_table(max_exp: u32) -> BTreeMap<u32, MultiPoly> {
    (1..=max_exp.max(1))
        .map(|l| (l, MultiPoly::q_shifted_analog(l.saturating_sub(1))))
        .collect()
}

/// `D_r = Σ` over compositions of `r` into parts of size >= 2 of the
/// multinomial times the product of `q [part-1]_q`; parts of size 1 carry
/// the factor `q [0]_q = 0`, so they are skipped outright. `D_r` counts the
/// exponent choices over all chains with total cardinality jump `r`, and
/// `D_r(-1)` is the Euler secant number `E_r`.
pub fn z_substitution_table(max_exp: u32) -> BTreeMap<u32, MultiPoly> {
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for r in 1..=max_exp.max(1) as usize {
        let mut sum = MultiPoly::zero();
        for d in 2..=r {
            let binom = binomial(r, d);
            let factor = MultiPoly::q_shifted_analog(d as u32 - 1)
                .scale(&BigRational::from_integer(binom));
            sum += &(&factor * &table[r - d]);
        }
        table.push(sum);
    }
    (1..=max_exp.max(1)).map(|r| (r, table[r as usize].clone())).collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// The Poincaré series of the supermaximal models, obtained from the stratum
/// series: keep the `z^0` slice (one record per stratum, no superset
/// census) and substitute `y^ℓ` by the composition polynomial `D_ℓ`, which
/// sums the exponent choices over every chain below the stratum.
///
/// Substituting instead `y^ℓ ↦ q[ℓ-1]_q` together with `z^r ↦ D_r` over the
/// superset census pairs the stratum polynomial of the smallest chain member
/// with every chain above it; that reading agrees with this one up to
/// `t^5/5!` but breaks Poincaré duality from `n = 6` on, where chains of
/// length two first appear.
pub fn phi_super_series(trunc: usize) -> Result<EgfSeries> {
    let xi = xi_series(trunc)?;
    substitute_xi(&xi)
}

pub(crate) fn substitute_xi(xi: &EgfSeries) -> Result<EgfSeries> {
    substitute_xi_with(xi, &chain_table_for(xi)?)
}

pub(crate) fn chain_table_for(xi: &EgfSeries) -> Result<BTreeMap<u32, MultiPoly>> {
    let mut max_y = 1u32;
    for i in 0..=xi.truncation_order() {
        max_y = max_y.max(xi.coeff(i)?.max_y_exp());
    }
    Ok(z_substitution_table(max_y))
}

pub(crate) fn substitute_xi_with(
    xi: &EgfSeries,
    chain_polys: &BTreeMap<u32, MultiPoly>,
) -> Result<EgfSeries> {
    let mut max_z = 1u32;
    for i in 0..=xi.truncation_order() {
        max_z = max_z.max(xi.coeff(i)?.max_z_exp());
    }
    // dropping the census terms: every positive power of z maps to zero
    let sub_z: BTreeMap<u32, MultiPoly> = (1..=max_z).map(|r| (r, MultiPoly::zero())).collect();
    xi.substitute_yz(chain_polys, &sub_z)
}

/// Euler-characteristic series of the real supermaximal models: `q := -1`
/// and `y^ℓ ↦ E_ℓ` on the `z^0` slice of the stratum series. The secant
/// numbers arise as the alternating chain counts `D_ℓ(-1)`, here computed
/// independently by series inversion.
pub fn euler_real_series(trunc: usize) -> Result<EgfSeries> {
    let xi = xi_series(trunc)?;
    let mut max_y = 1usize;
    for i in 0..=trunc {
        max_y = max_y.max(xi.coeff(i)?.max_y_exp() as usize);
    }
    let secants: Vec<BigRational> = (0..=max_y)
        .map(|r| BigRational::from_integer(crate::series::euler_secant(r)))
        .collect();
    let mut coeffs = Vec::with_capacity(trunc + 1);
    for i in 0..=trunc {
        let mut value = BigRational::zero();
        for (e, c) in xi.coeff(i)?.terms() {
            if e.y == 0 && e.z > 0 {
                return domain(
                    "monomial with z but no y cannot be specialized; it never occurs in ξ",
                );
            }
            if e.z > 0 {
                continue; // census slice, not part of the basis count
            }
            let mut factor = if e.q % 2 == 0 { c.clone() } else { -c.clone() };
            if e.y > 0 {
                factor *= &secants[e.y as usize];
            }
            value += factor;
        }
        coeffs.push(MultiPoly::constant(value));
    }
    Ok(EgfSeries::from_coeffs(coeffs))
}

/// The labelled-partition series by the closed product formula:
/// `Ψ = e^t Π_{i≥3} exp(z q[i-2]_q t^i/i!)`.
pub fn bigpsi_formula(trunc: usize) -> Result<EgfSeries> {
    if trunc < 1 {
        return domain("the series starts at t^0");
    }
    let mut out = EgfSeries::t(trunc).exp()?;
    for i in 3..=trunc {
        let label_count = MultiPoly::q_shifted_analog(i as u32 - 2);
        let z = MultiPoly::var_z();
        let c = &label_count * &z;
        let factor = EgfSeries::egf_monomial(i, c, trunc).exp()?;
        out = out.mul(&factor);
    }
    Ok(out)
}

/// The labelled-partition series by support-grouped enumeration: every
/// nested set `S` of every ambient contributes its label-count polynomial
/// `P(S)` at `z^{|S|} t^{n+|S|-1}`.
pub fn bigpsi_direct(t_max: usize, strategy: Strategy) -> Result<EgfSeries> {
    if t_max < 1 {
        return domain("the series starts at t^0");
    }
    let ns: Vec<u32> = (2..=(t_max as u32 + 1)).collect();
    let coeff_lists = map_reduce(
        &ns,
        strategy,
        Vec::new,
        |&n| {
            let mut local = vec![MultiPoly::zero(); t_max + 1];
            let full = full_mask(n);
            let budget = t_max + 1 - n as usize;
            for_each_forest(n, Some(budget), |forest| {
                let mut p = MultiPoly::one();
                for &a in forest {
                    let d = children_count(forest, a) as u32 - 1;
                    if d < 2 {
                        p = MultiPoly::zero();
                        break;
                    }
                    p = &p * &MultiPoly::q_shifted_analog(d - 1);
                }
                if p.is_zero() {
                    return;
                }
                // without V
                let t_deg = n as usize + forest.len() - 1;
                if t_deg <= t_max {
                    let weight = MultiPoly::monomial(
                        Exp { q: 0, y: 0, z: forest.len() as u32 },
                        BigRational::new(BigInt::one(), factorial(t_deg)),
                    );
                    local[t_deg] += &(&p * &weight);
                }
                // with V
                let t_deg = n as usize + forest.len();
                if t_deg <= t_max {
                    let d_v = children_count(forest, full) as u32 - 1;
                    if d_v >= 2 {
                        let with_v = &p * &MultiPoly::q_shifted_analog(d_v - 1);
                        let weight = MultiPoly::monomial(
                            Exp { q: 0, y: 0, z: forest.len() as u32 + 1 },
                            BigRational::new(BigInt::one(), factorial(t_deg)),
                        );
                        local[t_deg] += &(&with_v * &weight);
                    }
                }
            });
            local
        },
        |mut a, mut b| {
            if a.is_empty() {
                return b;
            }
            if b.is_empty() {
                return a;
            }
            for (x, y) in a.iter_mut().zip(b.drain(..)) {
                *x += &y;
            }
            a
        },
    );
    let mut coeffs = if coeff_lists.is_empty() {
        vec![MultiPoly::zero(); t_max + 1]
    } else {
        coeff_lists
    };
    // the empty support of every n assembles e^t; n = 2 starts at t^1
    coeffs[0] = MultiPoly::one();
    Ok(EgfSeries::from_coeffs(coeffs))
}

/// Poincaré polynomial of the minimal model read off the labelled-partition
/// series: sum over `s` of the `z^s t^{n-1+s}` slices.
pub fn extract_poincare_from_bigpsi(bigpsi: &EgfSeries, n: u32) -> Result<MultiPoly> {
    if n < 2 {
        return domain("Poincaré polynomials start at n = 2");
    }
    let need = 2 * (n as usize - 1);
    if bigpsi.truncation_order() < need {
        return domain(format!(
            "series truncated at {} but the extraction needs {need}",
            bigpsi.truncation_order()
        ));
    }
    let mut out = MultiPoly::zero();
    for s in 0..=(n as usize - 1) {
        let coeff = bigpsi.egf_coeff(n as usize - 1 + s)?;
        for (e, c) in coeff.terms() {
            if e.z as usize == s {
                if e.y != 0 {
                    return domain("the labelled-partition series must not involve y");
                }
                out.insert_term(Exp::q(e.q), c.clone());
            }
        }
    }
    Ok(out)
}
