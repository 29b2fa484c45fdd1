//! The subring generated by zero-dimensional varieties.
//!
//! Classes of etale algebras over GF(q) are integer combinations of the
//! basis classes x_nu = [Spec of the degree-nu field extension]. The
//! product rule is x_m x_n = gcd(m, n) x_lcm(m, n), and the point count
//! over the degree-n extension is the ring map psi_n(a) = sum over nu
//! dividing n of nu a_nu. The ring has zero divisors as soon as two
//! distinct basis classes exist, and the measure of Spec k_nu is the
//! single Witt class of 1 - t^nu in degree 0.

use crate::rational_witt::{MotivicMeasurePoly, OnePoly, WittRational};
use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// An integer combination of the basis classes x_nu, nu >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SElement {
    terms: BTreeMap<u64, Int>,
}

impl SElement {
    pub fn zero() -> Self {
        SElement::default()
    }

    /// The basis class x_nu.
    pub fn basis(nu: u64) -> Self {
        SElement::from_terms(vec![(nu, Int::one())]).expect("nu >= 1")
    }

    /// Collects terms, dropping zero coefficients; nu = 0 is refused.
    pub fn from_terms(terms: Vec<(u64, Int)>) -> Result<Self, Error> {
        let mut map: BTreeMap<u64, Int> = BTreeMap::new();
        for (nu, c) in terms {
            if nu == 0 {
                return Err(Error::Argument("basis classes are indexed by nu >= 1".into()));
            }
            *map.entry(nu).or_insert_with(Int::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SElement { terms: map })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, nu: u64) -> Int {
        self.terms.get(&nu).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Int)> {
        self.terms.iter().map(|(&nu, c)| (nu, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (&nu, c) in &other.terms {
            *out.entry(nu).or_insert_with(Int::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        SElement { terms: out }
    }

    pub fn neg(&self) -> Self {
        SElement {
            terms: self.terms.iter().map(|(&nu, c)| (nu, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: &Int) -> Self {
        if s.is_zero() {
            return SElement::zero();
        }
        SElement {
            terms: self.terms.iter().map(|(&nu, c)| (nu, c * s)).collect(),
        }
    }

    /// Bilinear extension of x_m x_n = gcd(m, n) x_lcm(m, n).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<u64, Int> = BTreeMap::new();
        for (&m, a) in &self.terms {
            for (&n, b) in &other.terms {
                let g = m.gcd(&n);
                let l = m / g * n;
                *out.entry(l).or_insert_with(Int::zero) += a * b * Int::from(g);
            }
        }
        out.retain(|_, c| !c.is_zero());
        SElement { terms: out }
    }

    /// Point count over the degree-n extension:
    /// psi_n(a) = sum over nu | n of nu a_nu. A ring map for every n.
    pub fn psi(&self, n: u64) -> Result<Int, Error> {
        if n == 0 {
            return Err(Error::Argument("psi is indexed by n >= 1".into()));
        }
        let mut s = Int::zero();
        for (&nu, c) in &self.terms {
            if n % nu == 0 {
                s += c * Int::from(nu);
            }
        }
        Ok(s)
    }

    /// The measure of the element: the combination of the classes of
    /// 1 - t^nu, concentrated in degree 0. Its ghost components recover
    /// psi_n. Since Witt addition multiplies polynomials, the coefficient
    /// c contributes (1 - t^nu)^|c| to the numerator or denominator.
    pub fn measure(&self) -> Result<MotivicMeasurePoly, Error> {
        let mut acc = WittRational::zero();
        for (&nu, c) in &self.terms {
            let e: u64 = c
                .magnitude()
                .try_into()
                .map_err(|_| Error::Budget(format!("coefficient {c} too large to expand")))?;
            if nu.saturating_mul(e) > 1_000_000 {
                return Err(Error::Budget(format!(
                    "expanding (1 - t^{nu})^{e} needs degree {}",
                    nu as u128 * e as u128
                )));
            }
            let mut pow = OnePoly::one();
            let mut base = etale_poly(nu);
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    pow = pow.mul(&base);
                }
                k >>= 1;
                if k > 0 {
                    base = base.mul(&base);
                }
            }
            let w = if c.is_negative() {
                WittRational::new(OnePoly::one(), pow)
            } else {
                WittRational::from_poly(pow)
            };
            acc = acc.add(&w);
        }
        Ok(MotivicMeasurePoly::new(vec![acc]))
    }

    /// A pair of nonzero elements with zero product:
    /// x_nu (x_nu - nu x_1) = nu x_nu - nu x_nu = 0.
    pub fn zero_divisor_witness(nu: u64) -> Result<(SElement, SElement), Error> {
        if nu < 2 {
            return Err(Error::Argument(
                "zero divisors need a basis class with nu >= 2".into(),
            ));
        }
        let a = SElement::basis(nu);
        let b = a.sub(&SElement::basis(1).scalar_mul(&Int::from(nu)));
        debug_assert!(a.mul(&b).is_zero());
        Ok((a, b))
    }
}

/// The polynomial 1 - t^nu, the Witt class of Spec k_nu.
fn etale_poly(nu: u64) -> OnePoly {
    let mut tail = vec![Rat::zero(); nu as usize];
    tail[nu as usize - 1] = -Rat::one();
    OnePoly::new(tail)
}

/// The measure of Spec of the degree-nu extension field.
pub fn measure_of_etale(nu: u64) -> Result<MotivicMeasurePoly, Error> {
    if nu == 0 {
        return Err(Error::Argument("extension degree must be >= 1".into()));
    }
    Ok(MotivicMeasurePoly::new(vec![WittRational::from_poly(
        etale_poly(nu),
    )]))
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&nu, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let m = c.magnitude();
            if !m.is_one() {
                write!(f, "{m}*")?;
            }
            write!(f, "x{nu}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SElementJson {
    terms: BTreeMap<String, CoeffJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffJson {
    Num(i64),
    Str(String),
}

impl Serialize for SElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SElementJson {
            terms: self
                .terms
                .iter()
                .map(|(&nu, c)| (nu.to_string(), CoeffJson::Str(c.to_string())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SElementJson::deserialize(d)?;
        let mut terms = Vec::new();
        for (k, v) in j.terms {
            let nu: u64 = k.parse().map_err(D::Error::custom)?;
            let c: Int = match v {
                CoeffJson::Num(n) => Int::from(n),
                CoeffJson::Str(s) => s.parse().map_err(D::Error::custom)?,
            };
            terms.push((nu, c));
        }
        SElement::from_terms(terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nu: u64) -> SElement {
        SElement::basis(nu)
    }

    #[test]
    fn product_rule() {
        assert_eq!(x(2).mul(&x(3)), x(6));
        assert_eq!(x(2).mul(&x(2)), x(2).scalar_mul(&Int::from(2)));
        assert_eq!(x(4).mul(&x(6)), x(12).scalar_mul(&Int::from(2)));
        assert_eq!(x(1).mul(&x(7)), x(7));
    }

    #[test]
    fn psi_is_a_ring_map() {
        let a = x(2).add(&x(3).scalar_mul(&Int::from(-2)));
        let b = x(4).add(&x(1));
        for n in 1..=12u64 {
            let lhs = a.mul(&b).psi(n).unwrap();
            let rhs = a.psi(n).unwrap() * b.psi(n).unwrap();
            assert_eq!(lhs, rhs, "psi_{n}");
        }
        assert_eq!(x(3).psi(6).unwrap(), Int::from(3));
        assert_eq!(x(3).psi(4).unwrap(), Int::from(0));
    }

    #[test]
    fn zero_divisors_exist_for_every_nu() {
        for nu in 2..=6u64 {
            let (a, b) = SElement::zero_divisor_witness(nu).unwrap();
            assert!(!a.is_zero() && !b.is_zero());
            assert!(a.mul(&b).is_zero());
        }
        assert!(SElement::zero_divisor_witness(1).is_err());
    }

    #[test]
    fn measure_ghosts_match_psi() {
        let a = x(2).sub(&x(1).scalar_mul(&Int::from(2))).add(&x(3));
        let mu = a.measure().unwrap();
        for n in 1..=9usize {
            let g = mu.ghost_at_one(n);
            assert_eq!(g, Rat::from(a.psi(n as u64).unwrap()), "ghost {n}");
        }
    }

    #[test]
    fn etale_measure_is_vanishing_cycle() {
        let mu = measure_of_etale(3).unwrap();
        assert_eq!(mu.ghost_at_one(3), Rat::from(Int::from(3)));
        assert_eq!(mu.ghost_at_one(4), Rat::from(Int::from(0)));
        assert_eq!(mu.ghost_at_one(6), Rat::from(Int::from(3)));
    }

    #[test]
    fn display_and_json() {
        let a = x(2).sub(&x(1).scalar_mul(&Int::from(2)));
        assert_eq!(a.to_string(), "-2*x1 + x2");
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"terms":{"1":"-2","2":"1"}}"#);
        let back: SElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        let numeric: SElement = serde_json::from_str(r#"{"terms":{"1":-2,"2":1}}"#).unwrap();
        assert_eq!(numeric, a);
        assert!(serde_json::from_str::<SElement>(r#"{"terms":{"0":"1"}}"#).is_err());
    }
}
