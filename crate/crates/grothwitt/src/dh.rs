//! Digit sums, Stickelberger valuations, character sums, and the
//! threshold function phi(p^n - 1)/n > phi(p - 1).
//!
//! For q = p^a, the multiplicative characters of GF(q) pair with the
//! canonical additive character to produce character sums that are exact
//! integer combinations of L-th roots of unity, L = p (q - 1). The sums
//! are held as exponent-count vectors, reducible exactly in Q(zeta_L)
//! and evaluable numerically with certified error bounds. Digit sums of
//! character exponents give the valuations governing which sums share a
//! prime divisor, packaged in the 2 by 2 valuation matrix.

use crate::cyclotomic::{CycElt, CycField};
use crate::field::FieldSpec;
use crate::numeric::{cos, pi, sin, Approx};
use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sum of the base-p digits of t written with exactly a digits.
pub fn digit_sum(t: u64, p: u64, a: usize) -> Result<u64, Error> {
    if p < 2 {
        return Err(Error::Argument("digit base must be >= 2".into()));
    }
    if a == 0 {
        return Err(Error::Argument("digit count must be >= 1".into()));
    }
    let cap = (p as u128).checked_pow(a as u32);
    match cap {
        Some(c) if (t as u128) < c => {}
        _ => {
            return Err(Error::Argument(format!(
                "{t} does not fit in {a} base-{p} digits"
            )))
        }
    }
    let mut s = 0u64;
    let mut x = t;
    for _ in 0..a {
        s += x % p;
        x /= p;
    }
    Ok(s)
}

/// The Stickelberger valuation sigma(t) = digit_sum(t) / (p - 1) for a
/// nontrivial exponent 1 <= t <= p^a - 2.
pub fn stickelberger_valuation(t: u64, p: u64, a: usize) -> Result<Rat, Error> {
    let q = (p as u128).pow(a as u32);
    if t == 0 || (t as u128) > q - 2 {
        return Err(Error::Argument(format!(
            "exponent must lie in [1, {}]",
            q - 2
        )));
    }
    Ok(Rat::new(
        Int::from(digit_sum(t, p, a)?),
        Int::from(p - 1),
    ))
}

/// Deterministic Miller-Rabin, exact for n < 3.3 * 10^24.
pub fn is_prime_int(n: &Int) -> bool {
    let two = Int::from(2);
    if n < &two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = Int::from(small);
        if *n == s {
            return true;
        }
        if (n % s).is_zero() {
            return false;
        }
    }
    let n1 = n - Int::one();
    let mut d = n1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for base in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = Int::from(base).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle variant of the rho method; n must be odd, composite,
/// and > 1.
fn brent_rho(n: &Int) -> Int {
    let mut c = Int::one();
    loop {
        let mut y = Int::from(2);
        let mut r = 1u64;
        let mut q = Int::one();
        let mut g = Int::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = (&y * &y + &c) % n;
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = (&ys * &ys + &c) % n;
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1;
    }
}

/// Prime factorization by trial division then rho splitting.
pub fn factor_int(n: &Int) -> Result<BTreeMap<Int, u32>, Error> {
    if n < &Int::one() {
        return Err(Error::Argument("factorization needs n >= 1".into()));
    }
    let mut out: BTreeMap<Int, u32> = BTreeMap::new();
    let mut m = n.clone();
    for small in 2u64..1000 {
        let s = Int::from(small);
        if &s * &s > m {
            break;
        }
        while (&m % &s).is_zero() {
            *out.entry(s.clone()).or_insert(0) += 1;
            m /= &s;
        }
    }
    let mut stack = vec![m];
    while let Some(v) = stack.pop() {
        if v.is_one() {
            continue;
        }
        if is_prime_int(&v) {
            *out.entry(v).or_insert(0) += 1;
        } else {
            let d = brent_rho(&v);
            stack.push(&v / &d);
            stack.push(d);
        }
    }
    Ok(out)
}

/// Euler phi from the factorization.
pub fn euler_phi_int(n: &Int) -> Result<Int, Error> {
    let mut out = Int::one();
    for (p, e) in factor_int(n)? {
        out *= num_traits::pow(p.clone(), (e - 1) as usize) * (p - Int::one());
    }
    Ok(out)
}

/// Report on the inequality phi(p^m - 1) / m > phi(p - 1) on [1, h].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiThreshold {
    pub p: u64,
    pub horizon: u64,
    /// Least T with the inequality true on all of [T, horizon].
    pub threshold: u64,
    /// Every m in [1, horizon] where the inequality fails.
    pub failures: Vec<u64>,
}

pub fn phi_threshold(p: u64, horizon: u64) -> Result<PhiThreshold, Error> {
    if !is_prime_int(&Int::from(p)) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if horizon == 0 {
        return Err(Error::Argument("horizon must be >= 1".into()));
    }
    let target = euler_phi_int(&Int::from(p - 1).max(Int::one()))?;
    let mut failures = Vec::new();
    for m in 1..=horizon {
        let val = euler_phi_int(&(num_traits::pow(Int::from(p), m as usize) - Int::one()))?;
        // phi(p^m - 1) / m > phi(p - 1) without rationals.
        if val <= Int::from(m) * &target {
            failures.push(m);
        }
    }
    let threshold = failures.last().map_or(1, |&m| m + 1);
    if threshold > horizon {
        return Err(Error::Exhausted(format!(
            "the inequality still fails at the horizon {horizon}"
        )));
    }
    Ok(PhiThreshold {
        p,
        horizon,
        threshold,
        failures,
    })
}

/// The 2 by 2 digit-sum matrix of a valid twist exponent gamma:
/// rows (s(1), s(q - 2)) and (s(gamma), s(q - 1 - gamma)), whose
/// determinant is forced to -a n (p - 1)^2 with a = (s(gamma) - 1)/(p - 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationMatrix {
    pub p: u64,
    pub n: u64,
    pub gamma: u64,
    pub x: [[u64; 2]; 2],
    pub a: u64,
    pub det: i128,
}

pub fn valuation_matrix(p: u64, n: u64, gamma: u64) -> Result<ValuationMatrix, Error> {
    if !is_prime_int(&Int::from(p)) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if !is_prime_int(&Int::from(n)) {
        return Err(Error::Argument(format!("degree {n} is not prime")));
    }
    let report = phi_threshold(p, n.max(10))?;
    if n < report.threshold {
        return Err(Error::Validation {
            check: "phi-threshold".into(),
            detail: format!(
                "degree {n} is below the threshold {} for p = {p}",
                report.threshold
            ),
        });
    }
    let q = match (p as u128).checked_pow(n as u32) {
        Some(v) if v <= u64::MAX as u128 / 2 => v as u64,
        _ => {
            return Err(Error::Budget(format!(
                "p^n = {p}^{n} is out of the supported range"
            )))
        }
    };
    if gamma == 0 || gamma > q - 2 {
        return Err(Error::Argument(format!(
            "gamma must lie in [1, {}]",
            q - 2
        )));
    }
    if gamma.gcd(&(q - 1)) != 1 {
        return Err(Error::Argument(format!(
            "gamma = {gamma} is not invertible modulo {}",
            q - 1
        )));
    }
    let s_gamma = digit_sum(gamma, p, n as usize)?;
    if (s_gamma - 1) % (p - 1) != 0 {
        return Err(Error::Argument(format!(
            "digit sum {s_gamma} of gamma is not 1 modulo p - 1"
        )));
    }
    if s_gamma == 1 {
        return Err(Error::Argument(
            "gamma is a power of p; the twist must leave the prime orbit".into(),
        ));
    }
    let x = [
        [digit_sum(1, p, n as usize)?, digit_sum(q - 2, p, n as usize)?],
        [s_gamma, digit_sum(q - 1 - gamma, p, n as usize)?],
    ];
    let det = x[0][0] as i128 * x[1][1] as i128 - x[0][1] as i128 * x[1][0] as i128;
    let a = (s_gamma - 1) / (p - 1);
    let expected = -(a as i128) * n as i128 * ((p - 1) as i128).pow(2);
    if det != expected {
        return Err(Error::Validation {
            check: "determinant".into(),
            detail: format!("determinant {det} does not match the forced value {expected}"),
        });
    }
    Ok(ValuationMatrix {
        p,
        n,
        gamma,
        x,
        a,
        det,
    })
}

/// A character sum over GF(q), q = p^a: the multiplicative character
/// sending the canonical generator to zeta_(q-1)^t paired with the
/// additive character x -> zeta_p^(j tr x), encoded as counts of L-th
/// roots of unity, L = p (q - 1). The sum carries the sign convention
/// value = -(sum of roots), matching Frobenius eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSum {
    pub p: u64,
    pub a: usize,
    pub t: u64,
    pub j: u64,
    /// L = p (q - 1).
    pub order: u64,
    /// coeffs[k] counts field elements contributing zeta_L^k.
    pub coeffs: Vec<Int>,
}

pub fn jacobi_sum(p: u64, a: usize, t: u64, j: u64, budget: u64) -> Result<CharacterSum, Error> {
    let field = FieldSpec::new(p, a, 0)?;
    let q = field.order();
    if q < 3 {
        return Err(Error::Argument("q = p^a must be at least 3".into()));
    }
    if t == 0 || t > q - 2 {
        return Err(Error::Argument(format!(
            "character exponent t must lie in [1, {}]",
            q - 2
        )));
    }
    if j == 0 || j >= p {
        return Err(Error::Argument(format!(
            "additive twist j must lie in [1, {}]",
            p - 1
        )));
    }
    if q > budget {
        return Err(Error::Budget(format!(
            "summing over GF({q}) exceeds the budget {budget}"
        )));
    }
    let l = p as u128 * (q - 1) as u128;
    if l > u64::MAX as u128 {
        return Err(Error::Budget("root-of-unity order overflows".into()));
    }
    let l = l as u64;
    let g = field.generator();
    let mut coeffs = vec![Int::zero(); l as usize];
    let mut u = field.one();
    for s in 0..(q - 1) {
        let tr = field.trace(&u);
        let k = ((p as u128 * t as u128 % l as u128) * s as u128
            + (q - 1) as u128 * j as u128 * tr as u128)
            % l as u128;
        coeffs[k as usize] += 1;
        u = field.mul(&u, &g);
    }
    Ok(CharacterSum {
        p,
        a,
        t,
        j,
        order: l,
        coeffs,
    })
}

impl CharacterSum {
    /// The exact value -(sum c_k zeta_L^k) reduced in Q(zeta_L). Gated
    /// on the order since the reduction needs the degree-phi(L) modulus.
    pub fn exact(&self) -> Result<(CycField, CycElt), Error> {
        if self.order > 10_000 {
            return Err(Error::Budget(format!(
                "exact reduction at order {} needs the degree-phi cyclotomic modulus",
                self.order
            )));
        }
        let field = CycField::new(self.order)?;
        let mut acc = field.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = field.zeta_pow(k as i64);
            acc = field.add(&acc, &field.scale(&root, &Rat::from(c.clone())));
        }
        let value = field.neg(&acc);
        Ok((field, value))
    }

    /// |value|^2 computed exactly by multiplying with the conjugate
    /// (zeta -> zeta^-1); equals q for nontrivial characters.
    pub fn norm_exact(&self) -> Result<CycElt, Error> {
        let (field, value) = self.exact()?;
        let mut conj = field.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = field.zeta_pow(-(k as i64));
            conj = field.add(&conj, &field.scale(&root, &Rat::from(c.clone())));
        }
        Ok(field.mul(&value, &field.neg(&conj)))
    }

    /// Certified real and imaginary parts: each coefficient contributes
    /// cos and sin of 2 pi k / L, evaluated once per distinct k.
    pub fn evaluate(&self, bits: u32) -> (Approx, Approx) {
        let two_pi = pi(bits + 16).scale(&Rat::from(Int::from(2)));
        let mut re = Approx::zero();
        let mut im = Approx::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = two_pi.scale(&Rat::new(Int::from(k as u64), Int::from(self.order)));
            let scale = Rat::from(c.clone());
            re = re.add(&cos(&angle, bits + 8).scale(&scale));
            im = im.add(&sin(&angle, bits + 8).scale(&scale));
        }
        (re.neg().round(bits), im.neg().round(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::two_pow_neg;
    use crate::rat;

    #[test]
    fn digit_sums_and_complements() {
        assert_eq!(digit_sum(3, 2, 3).unwrap(), 2);
        assert_eq!(digit_sum(6, 2, 3).unwrap(), 2);
        assert_eq!(digit_sum(4, 2, 3).unwrap(), 1);
        assert!(digit_sum(8, 2, 3).is_err());
        // s(t) + s(q - 1 - t) = a (p - 1) for every t.
        for (p, a) in [(2u64, 3usize), (3, 2), (5, 2)] {
            let q = p.pow(a as u32);
            for t in 1..=(q - 2) {
                let s = digit_sum(t, p, a).unwrap() + digit_sum(q - 1 - t, p, a).unwrap();
                assert_eq!(s, a as u64 * (p - 1), "p={p} a={a} t={t}");
            }
        }
        assert_eq!(stickelberger_valuation(5, 3, 2).unwrap(), rat(3, 2));
        assert!(stickelberger_valuation(0, 2, 3).is_err());
    }

    #[test]
    fn factoring_and_phi() {
        let n = Int::from(2u64).pow(50) - Int::one();
        let f = factor_int(&n).unwrap();
        let rebuilt: Int = f
            .iter()
            .map(|(p, &e)| num_traits::pow(p.clone(), e as usize))
            .product();
        assert_eq!(rebuilt, n);
        assert!(f.keys().all(is_prime_int));
        assert_eq!(euler_phi_int(&Int::from(36)).unwrap(), Int::from(12));
        assert!(is_prime_int(&Int::from(1_000_003)));
        assert!(!is_prime_int(&(Int::from(1_000_003) * Int::from(998_244_353))));
    }

    #[test]
    fn threshold_for_two() {
        let r = phi_threshold(2, 50).unwrap();
        assert_eq!(r.threshold, 3);
        assert_eq!(r.failures, vec![1, 2]);
        assert!(phi_threshold(4, 10).is_err());
    }

    #[test]
    fn valuation_matrix_fixture() {
        let v = valuation_matrix(2, 3, 3).unwrap();
        assert_eq!(v.x, [[1, 2], [2, 1]]);
        assert_eq!(v.a, 1);
        assert_eq!(v.det, -3);
        // Exactly the exponents with digit sum > 1 are valid.
        let valid: Vec<u64> = (1..=6).filter(|&g| valuation_matrix(2, 3, g).is_ok()).collect();
        assert_eq!(valid, vec![3, 5, 6]);
        // Degree below the threshold is refused.
        assert!(matches!(
            valuation_matrix(2, 2, 1),
            Err(Error::Validation { .. }) | Err(Error::Argument(_))
        ));
    }

    #[test]
    fn quartic_field_character_sums_are_rational() {
        for t in [1u64, 2] {
            let cs = jacobi_sum(2, 2, t, 1, 1 << 20).unwrap();
            assert_eq!(cs.order, 6);
            let (field, value) = cs.exact().unwrap();
            assert_eq!(value, field.from_int(&Int::from(-2)));
            assert_eq!(cs.norm_exact().unwrap(), field.from_int(&Int::from(4)));
            let (re, im) = cs.evaluate(64);
            assert!(re.admits(&rat(-2, 1)));
            assert!(im.admits(&rat(0, 1)));
            assert!(re.err <= two_pow_neg(56));
        }
    }

    #[test]
    fn cubic_field_character_sum_is_imaginary() {
        let cs = jacobi_sum(3, 1, 1, 1, 1 << 20).unwrap();
        assert_eq!(cs.order, 6);
        let (field, _) = cs.exact().unwrap();
        assert_eq!(cs.norm_exact().unwrap(), field.from_int(&Int::from(3)));
        let (re, im) = cs.evaluate(64);
        assert!(re.admits(&rat(0, 1)));
        // im = -sqrt(3) up to the sign of the quadratic Gauss sum.
        let sq = im.mul(&im);
        assert!(sq.admits(&rat(3, 1)));
    }

    #[test]
    fn character_sum_argument_checks() {
        assert!(jacobi_sum(2, 2, 0, 1, 1 << 20).is_err());
        assert!(jacobi_sum(2, 2, 3, 1, 1 << 20).is_err());
        assert!(jacobi_sum(2, 2, 1, 2, 1 << 20).is_err());
        assert!(matches!(
            jacobi_sum(2, 5, 1, 1, 8),
            Err(Error::Budget(_))
        ));
    }
}
