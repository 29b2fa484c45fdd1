//! Exact arithmetic in cyclotomic fields Q(zeta_d) = Q[x] / Phi_d(x).
//!
//! Elements are rational coefficient vectors of length < phi(d) in the
//! power basis of zeta_d, stored with no trailing zeros so equality is
//! plain vector equality. Inverses come from the extended Euclidean
//! algorithm against the (irreducible) cyclotomic modulus.

use crate::poly::{cyclotomic, qdivrem, qis_zero, qmul, qscale, qsub, qtrim};
use crate::{Error, Int, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// Element of Q(zeta_d): ascending coefficients, trimmed.
pub type CycElt = Vec<Rat>;

/// The field Q(zeta_d) with its pinned modulus Phi_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycField {
    d: u64,
    modulus: Vec<Rat>,
}

impl CycField {
    pub fn new(d: u64) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::Argument("root-of-unity order must be >= 1".into()));
        }
        let modulus: Vec<Rat> = cyclotomic(d).into_iter().map(Rat::from).collect();
        Ok(CycField { d, modulus })
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    /// Field degree phi(d) over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CycElt {
        Vec::new()
    }

    pub fn one(&self) -> CycElt {
        vec![Rat::one()]
    }

    pub fn from_rat(&self, r: &Rat) -> CycElt {
        qtrim(vec![r.clone()])
    }

    pub fn from_int(&self, n: &Int) -> CycElt {
        self.from_rat(&Rat::from(n.clone()))
    }

    /// The class of x, a primitive d-th root of unity.
    pub fn zeta(&self) -> CycElt {
        self.reduce(vec![Rat::zero(), Rat::one()])
    }

    /// zeta^k for any integer k, reduced modulo d.
    pub fn zeta_pow(&self, k: i64) -> CycElt {
        let e = k.rem_euclid(self.d as i64) as usize;
        let mut v = vec![Rat::zero(); e + 1];
        v[e] = Rat::one();
        self.reduce(v)
    }

    fn reduce(&self, v: Vec<Rat>) -> CycElt {
        if qtrim(v.clone()).len() < self.modulus.len() {
            return qtrim(v);
        }
        let (_, r) = qdivrem(&v, &self.modulus).expect("monic modulus");
        r
    }

    pub fn is_zero(&self, a: &CycElt) -> bool {
        qis_zero(a)
    }

    pub fn add(&self, a: &CycElt, b: &CycElt) -> CycElt {
        crate::poly::qadd(a, b)
    }

    pub fn sub(&self, a: &CycElt, b: &CycElt) -> CycElt {
        qsub(a, b)
    }

    pub fn neg(&self, a: &CycElt) -> CycElt {
        qscale(a, &-Rat::one())
    }

    pub fn mul(&self, a: &CycElt, b: &CycElt) -> CycElt {
        self.reduce(qmul(a, b))
    }

    pub fn scale(&self, a: &CycElt, s: &Rat) -> CycElt {
        qscale(a, s)
    }

    /// Inverse via extended Euclid: s a + t Phi_d = gcd = nonzero rational.
    pub fn inv(&self, a: &CycElt) -> Result<CycElt, Error> {
        if self.is_zero(a) {
            return Err(Error::Argument("inverse of zero".into()));
        }
        let (mut r0, mut r1) = (self.modulus.clone(), a.to_vec());
        let (mut s0, mut s1) = (self.zero(), self.one());
        while !qis_zero(&r1) {
            let (q, r) = qdivrem(&r0, &r1)?;
            let s = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant: the modulus is irreducible over Q.
        debug_assert_eq!(r0.len(), 1, "cyclotomic modulus is irreducible");
        let c = r0[0].clone();
        Ok(self.reduce(qscale(&s0, &(Rat::one() / c))))
    }

    pub fn div(&self, a: &CycElt, b: &CycElt) -> Result<CycElt, Error> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Renders an element as a polynomial in z = zeta_d.
    pub fn render(&self, a: &CycElt) -> String {
        if qis_zero(a) {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format!("{c}"),
                1 if c.is_one() => "z".into(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{k}"),
                _ => format!("{c}*z^{k}"),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn primitive_root_relations() {
        let f4 = CycField::new(4).unwrap();
        let i = f4.zeta();
        assert_eq!(f4.mul(&i, &i), vec![rat(-1, 1)]);
        assert_eq!(f4.zeta_pow(-1), f4.zeta_pow(3));
        let f3 = CycField::new(3).unwrap();
        let w = f3.zeta();
        let s = f3.add(&f3.add(&f3.mul(&w, &w), &w), &f3.one());
        assert!(f3.is_zero(&s));
        let f6 = CycField::new(6).unwrap();
        assert_eq!(f6.zeta_pow(3), vec![rat(-1, 1)]);
        assert_eq!(f6.zeta_pow(6), f6.one());
    }

    #[test]
    fn inverses_and_division() {
        let f5 = CycField::new(5).unwrap();
        let a = f5.add(&f5.one(), &f5.zeta());
        let ai = f5.inv(&a).unwrap();
        assert_eq!(f5.mul(&a, &ai), f5.one());
        let b = f5.sub(&f5.zeta_pow(2), &f5.from_rat(&rat(1, 3)));
        assert_eq!(f5.div(&f5.mul(&a, &b), &b).unwrap(), a);
        assert!(f5.inv(&f5.zero()).is_err());
    }

    #[test]
    fn degenerate_orders() {
        let f1 = CycField::new(1).unwrap();
        assert_eq!(f1.degree(), 1);
        assert_eq!(f1.zeta(), f1.one());
        let f2 = CycField::new(2).unwrap();
        assert_eq!(f2.zeta(), vec![rat(-1, 1)]);
        assert_eq!(f2.degree(), 1);
    }

    #[test]
    fn rendering() {
        let f4 = CycField::new(4).unwrap();
        let a = f4.add(&f4.from_rat(&rat(1, 2)), &f4.zeta());
        assert_eq!(f4.render(&a), "1/2 + z");
        assert_eq!(f4.render(&f4.zero()), "0");
    }
}
