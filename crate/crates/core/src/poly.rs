//! Sparse polynomials in `q`, `y`, `z` over arbitrary-precision rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, validation, Result};

/// Exponent triple; the derived order is lexicographic in (q, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub q: u32,
    pub y: u32,
    pub z: u32,
}

impl Exp {
    pub const ONE: Exp = Exp { q: 0, y: 0, z: 0 };

    pub fn q(d: u32) -> Exp {
        Exp { q: d, y: 0, z: 0 }
    }
}

/// A sparse exact polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant_int(1)
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(Exp::ONE, c);
        }
        p
    }

    pub fn constant_int(c: i64) -> Self {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(exp: Exp, c: BigRational) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn var_q() -> Self {
        MultiPoly::monomial(Exp::q(1), BigRational::one())
    }

    pub fn var_y() -> Self {
        MultiPoly::monomial(Exp { q: 0, y: 1, z: 0 }, BigRational::one())
    }

    pub fn var_z() -> Self {
        MultiPoly::monomial(Exp { q: 0, y: 0, z: 1 }, BigRational::one())
    }

    /// `[j]_q = 1 + q + … + q^{j-1}`.
    pub fn q_analog(j: u32) -> Self {
        let mut p = MultiPoly::default();
        for i in 0..j {
            p.terms.insert(Exp::q(i), BigRational::one());
        }
        p
    }

    /// `q [j]_q = q + q² + … + q^j`, the count of exponents 1..=j weighted by
    /// degree; zero when `j = 0`.
    pub fn q_shifted_analog(j: u32) -> Self {
        let mut p = MultiPoly::default();
        for i in 1..=j {
            p.terms.insert(Exp::q(i), BigRational::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: Exp) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn insert_term(&mut self, exp: Exp, c: BigRational) {
        if !c.is_zero() {
            let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(&exp);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    pub fn q_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.q).max().unwrap_or(0)
    }

    pub fn max_y_exp(&self) -> u32 {
        self.terms.keys().map(|e| e.y).max().unwrap_or(0)
    }

    pub fn max_z_exp(&self) -> u32 {
        self.terms.keys().map(|e| e.z).max().unwrap_or(0)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Substitution `q := -1`, with `y`, `z` left alone.
    pub fn eval_q_minus_one(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&e, c) in &self.terms {
            let sign = if e.q % 2 == 0 { c.clone() } else { -c.clone() };
            out.insert_term(Exp { q: 0, y: e.y, z: e.z }, sign);
        }
        out
    }

    /// Monomialwise substitution of the `y` and `z` powers by polynomials in
    /// `q`. Exponent 0 maps to 1; a missing positive exponent is an error.
    pub fn substitute_yz(
        &self,
        sub_y: &BTreeMap<u32, MultiPoly>,
        sub_z: &BTreeMap<u32, MultiPoly>,
    ) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (&e, c) in &self.terms {
            let mut factor = MultiPoly::monomial(Exp::q(e.q), c.clone());
            if e.y > 0 {
                let Some(py) = sub_y.get(&e.y) else {
                    return domain(format!("no substitution provided for y^{}", e.y));
                };
                if py.max_y_exp() > 0 || py.max_z_exp() > 0 {
                    return validation("y substitution images must be polynomials in q");
                }
                factor = &factor * py;
            }
            if e.z > 0 {
                let Some(pz) = sub_z.get(&e.z) else {
                    return domain(format!("no substitution provided for z^{}", e.z));
                };
                if pz.max_y_exp() > 0 || pz.max_z_exp() > 0 {
                    return validation("z substitution images must be polynomials in q");
                }
                factor = &factor * pz;
            }
            out += &factor;
        }
        Ok(out)
    }

    /// Palindromy of the `q`-coefficient vector up to the given degree; the
    /// polynomial must involve only `q`.
    pub fn is_palindromic_q(&self, degree: u32) -> bool {
        if self.max_y_exp() > 0 || self.max_z_exp() > 0 {
            return false;
        }
        (0..=degree).all(|i| self.coeff(Exp::q(i)) == self.coeff(Exp::q(degree - i)))
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (&e, c) in &rhs.terms {
            self.insert_term(e, c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(
                    Exp { q: ea.q + eb.q, y: ea.y + eb.y, z: ea.z + eb.z },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest q-degree first reads like the printed polynomials
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (name, pow) in [("q", e.q), ("y", e.y), ("z", e.z)] {
                if pow == 1 {
                    vars.push_str(name);
                } else if pow > 1 {
                    vars.push_str(&format!("{name}^{pow}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{abs}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// JSON schema: `{"vars":["q","y","z"],"terms":[{"exp":[a,b,c],"num":"…","den":"…"}]}`
/// with terms sorted ascending in the exponent order.
pub fn poly_to_json(p: &MultiPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|(e, c)| {
            serde_json::json!({
                "exp": [e.q, e.y, e.z],
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    serde_json::json!({ "vars": ["q", "y", "z"], "terms": terms })
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<MultiPoly> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| crate::error::Error::Validation("polynomial JSON needs terms".into()))?;
    let mut out = MultiPoly::zero();
    for t in terms {
        let exp = t
            .get("exp")
            .and_then(|e| e.as_array())
            .filter(|e| e.len() == 3)
            .ok_or_else(|| crate::error::Error::Validation("term needs exp [a,b,c]".into()))?;
        let get = |i: usize| exp[i].as_u64().unwrap_or(0) as u32;
        let num = t.get("num").and_then(|x| x.as_str()).unwrap_or("0");
        let den = t.get("den").and_then(|x| x.as_str()).unwrap_or("1");
        let num: BigInt = num
            .parse()
            .map_err(|_| crate::error::Error::Validation(format!("bad numerator {num}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| crate::error::Error::Validation(format!("bad denominator {den}")))?;
        if den.is_zero() {
            return validation("zero denominator");
        }
        out.insert_term(Exp { q: get(0), y: get(1), z: get(2) }, BigRational::new(num, den));
    }
    Ok(out)
}

/// Convenience for tests and expected values: terms as (num, q, y, z).
pub fn poly_from_terms(terms: &[(i64, u32, u32, u32)]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for &(c, q, y, z) in terms {
        p.insert_term(Exp { q, y, z }, BigRational::from_integer(BigInt::from(c)));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let q = MultiPoly::var_q();
        let one = MultiPoly::one();
        let p = &(&q + &one) * &(&q - &one); // q^2 - 1
        assert_eq!(p, poly_from_terms(&[(1, 2, 0, 0), (-1, 0, 0, 0)]));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn q_analogs() {
        assert_eq!(MultiPoly::q_analog(3), poly_from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0), (1, 2, 0, 0)]));
        assert_eq!(MultiPoly::q_shifted_analog(0), MultiPoly::zero());
        assert_eq!(MultiPoly::q_shifted_analog(2), poly_from_terms(&[(1, 1, 0, 0), (1, 2, 0, 0)]));
    }

    #[test]
    fn substitution() {
        // 15 y^2 with y^2 -> q gives 15 q
        let p = poly_from_terms(&[(15, 0, 2, 0)]);
        let mut sub_y = BTreeMap::new();
        sub_y.insert(2u32, MultiPoly::var_q());
        let out = p.substitute_yz(&sub_y, &BTreeMap::new()).unwrap();
        assert_eq!(out, poly_from_terms(&[(15, 1, 0, 0)]));
        // 10 y (1+q) with y -> 0 vanishes
        let p = poly_from_terms(&[(10, 0, 1, 0), (10, 1, 1, 0)]);
        let mut sub_y = BTreeMap::new();
        sub_y.insert(1u32, MultiPoly::zero());
        let out = p.substitute_yz(&sub_y, &BTreeMap::new()).unwrap();
        assert!(out.is_zero());
        // missing exponent errors
        let p = poly_from_terms(&[(1, 0, 3, 0)]);
        assert!(p.substitute_yz(&BTreeMap::new(), &BTreeMap::new()).is_err());
    }

    #[test]
    fn palindromy_and_eval() {
        let p = poly_from_terms(&[(1, 0, 0, 0), (20, 1, 0, 0), (1, 2, 0, 0)]);
        assert!(p.is_palindromic_q(2));
        assert_eq!(p.eval_q_minus_one(), MultiPoly::constant_int(-18));
    }

    #[test]
    fn json_roundtrip() {
        let p = poly_from_terms(&[(3, 1, 2, 0), (-7, 0, 0, 1)]);
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }
}
