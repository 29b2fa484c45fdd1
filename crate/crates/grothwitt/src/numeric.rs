//! Self-validated rational numerics.
//!
//! An `Approx` is an exact rational value together with an exact rational
//! bound on its distance from the number it approximates. All operations
//! propagate the bound, and `round` snaps the value to a dyadic grid
//! m / 2^bits while charging the rounding error to the bound, which keeps
//! numerators and denominators from growing along a computation.
//!
//! pi comes from the Machin formula with alternating-series tail bounds;
//! cos and sin are Taylor sums with explicit remainders, valid on
//! |x| <= 8, which covers full turns 2 pi k / L.

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// A rational value with a certified error radius: the target number
/// lies in [value - err, value + err].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx {
    pub value: Rat,
    pub err: Rat,
}

impl Approx {
    pub fn exact(value: Rat) -> Self {
        Approx {
            value,
            err: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        Approx::exact(Rat::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Approx {
            value: &self.value + &other.value,
            err: &self.err + &other.err,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Approx {
            value: &self.value - &other.value,
            err: &self.err + &other.err,
        }
    }

    pub fn neg(&self) -> Self {
        Approx {
            value: -self.value.clone(),
            err: self.err.clone(),
        }
    }

    /// |xy - v1 v2| <= |v1| e2 + |v2| e1 + e1 e2.
    pub fn mul(&self, other: &Self) -> Self {
        let cross = self.value.abs() * &other.err
            + other.value.abs() * &self.err
            + &self.err * &other.err;
        Approx {
            value: &self.value * &other.value,
            err: cross,
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Approx {
            value: &self.value * s,
            err: self.err.abs() * s.abs(),
        }
    }

    /// Snaps the value to the grid of multiples of 2^-bits, charging the
    /// exact displacement to the error bound.
    pub fn round(&self, bits: u32) -> Self {
        let scale = Rat::from(Int::one() << bits);
        let snapped = (&self.value * &scale).round() / scale;
        let moved = (&self.value - &snapped).abs();
        Approx {
            value: snapped,
            err: &self.err + moved,
        }
    }

    /// True when the interval certainly contains the rational r.
    pub fn admits(&self, r: &Rat) -> bool {
        (&self.value - r).abs() <= self.err
    }
}

pub fn two_pow_neg(bits: u32) -> Rat {
    Rat::new(Int::one(), Int::one() << bits)
}

/// arctan(1/x) by the alternating Leibniz series; the error is bounded
/// by the first omitted term.
fn arctan_inv(x: u64, bits: u32) -> Approx {
    let tol = two_pow_neg(bits + 8);
    let x2 = Rat::from(Int::from(x * x));
    let mut power = Rat::new(Int::one(), Int::from(x));
    let mut sum = Rat::zero();
    let mut k = 0u32;
    loop {
        let term = &power / Rat::from(Int::from(2 * k + 1));
        if term < tol {
            return Approx {
                value: sum,
                err: term,
            };
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power /= &x2;
        k += 1;
    }
}

/// pi = 16 arctan(1/5) - 4 arctan(1/239), rounded to the dyadic grid.
pub fn pi(bits: u32) -> Approx {
    let a = arctan_inv(5, bits).scale(&Rat::from(Int::from(16)));
    let b = arctan_inv(239, bits).scale(&Rat::from(Int::from(4)));
    a.sub(&b).round(bits)
}

/// Shared Taylor core: sum of x^(2k+offset) (-1)^k / (2k+offset)! with
/// offset 0 for cos, 1 for sin. Requires |x| <= 8.
fn taylor_trig(x: &Approx, offset: u32, bits: u32) -> Approx {
    assert!(
        x.value.abs() <= Rat::from(Int::from(8)),
        "trig arguments must be reduced to |x| <= 8"
    );
    let wbits = bits + 16;
    let x0 = Approx::exact(x.value.clone()).round(wbits);
    let x2 = x0.mul(&x0).round(wbits);
    let mut term = if offset == 0 {
        Approx::exact(Rat::one())
    } else {
        x0.clone()
    };
    let mut sum = term.clone();
    let tol = two_pow_neg(wbits);
    let mut k = 1u32;
    loop {
        let denom = Rat::from(Int::from((2 * k + offset - 1) as i64 * (2 * k + offset) as i64));
        term = term.mul(&x2).scale(&(-Rat::one() / denom)).round(wbits);
        sum = sum.add(&term).round(wbits);
        // Once the ratio of consecutive terms is certainly below 1/2 the
        // tail is geometrically dominated by the last term's magnitude.
        let next_ratio = (x2.value.abs() + &x2.err)
            / Rat::from(Int::from((2 * k + offset + 1) as i64 * (2 * k + offset + 2) as i64));
        if next_ratio < Rat::new(Int::one(), Int::from(2)) {
            let mag = term.value.abs() + &term.err;
            if mag.clone() * Rat::from(Int::from(2)) < tol {
                let mut out = sum;
                out.err += mag * Rat::from(Int::from(2));
                // cos and sin are 1-Lipschitz, so input uncertainty
                // passes through unchanged.
                out.err += &x.err;
                return out.round(bits);
            }
        }
        k += 1;
        assert!(k < 1000, "Taylor series failed to converge");
    }
}

/// cos(x) with a certified bound; |x| <= 8.
pub fn cos(x: &Approx, bits: u32) -> Approx {
    taylor_trig(x, 0, bits)
}

/// sin(x) with a certified bound; |x| <= 8.
pub fn sin(x: &Approx, bits: u32) -> Approx {
    taylor_trig(x, 1, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn pi_brackets() {
        let p = pi(128);
        assert!(p.err <= two_pow_neg(120));
        assert!(p.value > rat(314159265, 100000000));
        assert!(p.value < rat(314159266, 100000000));
        // Two precisions agree within their joint bounds.
        let q = pi(40);
        assert!((p.value.clone() - q.value.clone()).abs() <= p.err.clone() + q.err.clone());
    }

    #[test]
    fn trig_special_values() {
        let bits = 96;
        let p = pi(bits + 8);
        assert!(cos(&Approx::zero(), bits).admits(&Rat::one()));
        assert!(sin(&Approx::zero(), bits).admits(&Rat::zero()));
        assert!(cos(&p, bits).admits(&-Rat::one()));
        assert!(sin(&p, bits).admits(&Rat::zero()));
        let half = p.scale(&rat(1, 2));
        assert!(sin(&half, bits).admits(&Rat::one()));
        let two_pi = p.scale(&rat(2, 1));
        assert!(cos(&two_pi, bits).admits(&Rat::one()));
        // cos(pi/3) = 1/2 hits a rational target.
        let third = p.scale(&rat(1, 3));
        let c = cos(&third, bits);
        assert!(c.admits(&rat(1, 2)));
        assert!(c.err < two_pow_neg(90));
    }

    #[test]
    fn pythagorean_identity_within_bounds() {
        let bits = 80;
        let p = pi(bits + 8);
        for k in 1..=6 {
            let x = p.scale(&rat(2 * k, 7));
            let c = cos(&x, bits);
            let s = sin(&x, bits);
            let one = c.mul(&c).add(&s.mul(&s));
            assert!(one.admits(&Rat::one()), "angle 2 pi {k}/7");
        }
    }

    #[test]
    fn rounding_charges_displacement() {
        let a = Approx::exact(rat(1, 3)).round(8);
        assert_eq!(a.value, rat(85, 256));
        assert!(a.err > Rat::zero() && a.err <= two_pow_neg(9));
        assert!(a.admits(&rat(1, 3)));
    }
}
