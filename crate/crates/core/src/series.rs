//! Truncated power series in `t` with [`MultiPoly`] coefficients.
//!
//! Coefficients are stored ordinary; the exponential-generating-function
//! reading lives in the accessors, which multiply by `n!` and can assert
//! integrality. Binary operations truncate to the smaller order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{domain, internal, Result};
use crate::poly::{poly_from_json, poly_to_json, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    trunc: usize,
    coeffs: Vec<MultiPoly>, // coeffs[i] is the ordinary coefficient of t^i
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}

impl EgfSeries {
    pub fn zero(trunc: usize) -> Self {
        EgfSeries { trunc, coeffs: vec![MultiPoly::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = EgfSeries::zero(trunc);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// The series `t`.
    pub fn t(trunc: usize) -> Self {
        let mut s = EgfSeries::zero(trunc);
        if trunc >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty());
        EgfSeries { trunc: coeffs.len() - 1, coeffs }
    }

    /// A single term `c · t^n / n!`.
    pub fn egf_monomial(n: usize, c: MultiPoly, trunc: usize) -> Self {
        let mut s = EgfSeries::zero(trunc);
        if n <= trunc {
            let inv = BigRational::new(BigInt::one(), factorial(n));
            s.coeffs[n] = c.scale(&inv);
        }
        s
    }

    pub fn truncation_order(&self) -> usize {
        self.trunc
    }

    /// Ordinary coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&MultiPoly> {
        if n > self.trunc {
            return domain(format!("coefficient {n} beyond truncation order {}", self.trunc));
        }
        Ok(&self.coeffs[n])
    }

    /// EGF coefficient `n! · c_n`.
    pub fn egf_coeff(&self, n: usize) -> Result<MultiPoly> {
        let c = self.coeff(n)?;
        Ok(c.scale(&BigRational::from_integer(factorial(n))))
    }

    /// EGF coefficient with the integrality assertion: series with counting
    /// meaning must read off to integer polynomials.
    pub fn egf_coeff_integral(&self, n: usize) -> Result<MultiPoly> {
        let c = self.egf_coeff(n)?;
        if !c.is_integral() {
            return internal(format!("EGF coefficient of t^{n} is not integral: {c}"));
        }
        Ok(c)
    }

    pub fn truncate_to(&self, trunc: usize) -> EgfSeries {
        let trunc = trunc.min(self.trunc);
        EgfSeries { trunc, coeffs: self.coeffs[..=trunc].to_vec() }
    }

    pub fn add(&self, rhs: &EgfSeries) -> EgfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        EgfSeries { trunc, coeffs }
    }

    pub fn sub(&self, rhs: &EgfSeries) -> EgfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect();
        EgfSeries { trunc, coeffs }
    }

    pub fn mul(&self, rhs: &EgfSeries) -> EgfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![MultiPoly::zero(); trunc + 1];
        for i in 0..=trunc.min(self.trunc) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i).min(rhs.trunc) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                coeffs[i + j] += &prod;
            }
        }
        EgfSeries { trunc, coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> EgfSeries {
        EgfSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> EgfSeries {
        EgfSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> EgfSeries {
        let mut out = EgfSeries::one(self.trunc);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Lowest index with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `exp` of a series with zero constant term: `Σ s^k / k!`, exact.
    pub fn exp(&self) -> Result<EgfSeries> {
        if !self.coeffs[0].is_zero() {
            return domain("exp needs a zero constant term");
        }
        let mut out = EgfSeries::one(self.trunc);
        let mut term = EgfSeries::one(self.trunc);
        for k in 1..=self.trunc {
            term = term.mul(self);
            term = term.scale(&BigRational::new(BigInt::one(), BigInt::from(k as u64)));
            if term.coeffs.iter().all(MultiPoly::is_zero) {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Termwise derivative in `t`; the truncation order drops by one.
    pub fn ddt(&self) -> EgfSeries {
        if self.trunc == 0 {
            return EgfSeries::zero(0);
        }
        let coeffs = (1..=self.trunc)
            .map(|i| self.coeffs[i].scale(&BigRational::from_integer(BigInt::from(i as u64))))
            .collect();
        EgfSeries { trunc: self.trunc - 1, coeffs }
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> EgfSeries {
        let mut coeffs = vec![MultiPoly::zero(); self.trunc + 2];
        for i in 0..=self.trunc {
            coeffs[i + 1] =
                self.coeffs[i].scale(&BigRational::new(BigInt::one(), BigInt::from(i as u64 + 1)));
        }
        EgfSeries { trunc: self.trunc + 1, coeffs }
    }

    /// `1 / (1 - s)` for `s` with zero constant term: the geometric sum.
    pub fn geometric(&self) -> Result<EgfSeries> {
        if !self.coeffs[0].is_zero() {
            return domain("geometric sum needs a zero constant term");
        }
        let mut out = EgfSeries::one(self.trunc);
        let mut power = EgfSeries::one(self.trunc);
        for _ in 1..=self.trunc {
            power = power.mul(self);
            if power.coeffs.iter().all(MultiPoly::is_zero) {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn recip(&self) -> Result<EgfSeries> {
        if self.coeffs[0] != MultiPoly::one() {
            return domain("reciprocal implemented for constant term 1");
        }
        let rest = {
            let mut r = self.clone();
            r.coeffs[0] = MultiPoly::zero();
            r
        };
        rest.scale(&-BigRational::one()).geometric()
    }

    /// Monomialwise substitution of `y` and `z` powers, coefficient by
    /// coefficient.
    pub fn substitute_yz(
        &self,
        sub_y: &std::collections::BTreeMap<u32, MultiPoly>,
        sub_z: &std::collections::BTreeMap<u32, MultiPoly>,
    ) -> Result<EgfSeries> {
        let coeffs: Result<Vec<MultiPoly>> =
            self.coeffs.iter().map(|c| c.substitute_yz(sub_y, sub_z)).collect();
        Ok(EgfSeries { trunc: self.trunc, coeffs: coeffs? })
    }
}

/// Euler secant numbers: `2 / (e^t + e^{-t}) = Σ E_n t^n / n!`; odd entries
/// vanish.
pub fn euler_secant(r: usize) -> BigInt {
    let trunc = r;
    let mut cosh = EgfSeries::zero(trunc);
    for m in 0..=trunc / 2 {
        let inv = BigRational::new(BigInt::one(), factorial(2 * m));
        cosh.coeffs[2 * m] = MultiPoly::constant(inv);
    }
    let sech = cosh.recip().expect("cosh has constant term 1");
    let e = sech.egf_coeff(r).expect("within truncation");
    let c = e.coeff(crate::poly::Exp::ONE);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// JSON schema: `{"truncation_order":T,"coeffs":[poly,…],"convention":"ordinary"}`.
pub fn series_to_json(s: &EgfSeries) -> serde_json::Value {
    let coeffs: Vec<serde_json::Value> = s.coeffs.iter().map(poly_to_json).collect();
    serde_json::json!({
        "truncation_order": s.trunc,
        "coeffs": coeffs,
        "convention": "ordinary",
    })
}

pub fn series_from_json(v: &serde_json::Value) -> Result<EgfSeries> {
    let coeffs = v
        .get("coeffs")
        .and_then(|c| c.as_array())
        .ok_or_else(|| crate::error::Error::Validation("series JSON needs coeffs".into()))?;
    let polys: Result<Vec<MultiPoly>> = coeffs.iter().map(poly_from_json).collect();
    let polys = polys?;
    if polys.is_empty() {
        return crate::error::validation("series needs at least the constant coefficient");
    }
    Ok(EgfSeries::from_coeffs(polys))
}
