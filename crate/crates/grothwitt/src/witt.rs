//! The big Witt ring Lambda(Q) = 1 + t Q[[t]] at a finite truncation order.
//!
//! Addition is multiplication of power series, the additive zero is the
//! constant series 1, and multiplication is the unique functorial product
//! with (1 - at)(1 - bt) = 1 - (ab)t; the multiplicative unit is 1 - t.
//! The ghost map reads off dlog: f'/f = -sum_{nu >= 1} g_nu t^(nu - 1).
//! Over Q the ghost map is a ring isomorphism onto finite ghost vectors with
//! componentwise operations, so products, Frobenius and Verschiebung are
//! computed through it. All operations keep a caller-fixed precision and
//! reject mixed-precision operands.

use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Quotient of a division known to be exact by construction.
fn exact_div(a: &Int, b: &Int) -> Int {
    debug_assert!((a % b).is_zero(), "inexact division in a scaled recurrence");
    a / b
}

/// Element of Lambda(Q) truncated at t^N: the coefficients of t^1..t^N.
/// The constant term is always 1 and is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeries {
    coeffs: Vec<Rat>,
}

impl LambdaSeries {
    /// Series 1 + c_1 t + ... + c_N t^N from the coefficients c_1..c_N.
    pub fn new(coeffs: Vec<Rat>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Precision(
                "a Lambda-series needs precision at least 1".into(),
            ));
        }
        Ok(LambdaSeries { coeffs })
    }

    /// The additive zero, the constant series 1.
    pub fn zero(precision: usize) -> Self {
        LambdaSeries {
            coeffs: vec![Rat::zero(); precision.max(1)],
        }
    }

    /// The multiplicative unit 1 - t.
    pub fn one(precision: usize) -> Self {
        Self::linear(&Rat::one(), precision)
    }

    /// The line class 1 - a t.
    pub fn linear(a: &Rat, precision: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); precision.max(1)];
        coeffs[0] = -a.clone();
        LambdaSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of t^k for 1 <= k <= N.
    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k - 1]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Narrows the precision to n <= N.
    pub fn truncate(&self, n: usize) -> Result<Self, Error> {
        if n == 0 || n > self.coeffs.len() {
            return Err(Error::Precision(format!(
                "cannot truncate precision {} to {}",
                self.coeffs.len(),
                n
            )));
        }
        Ok(LambdaSeries {
            coeffs: self.coeffs[..n].to_vec(),
        })
    }

    fn check_same_precision(&self, other: &Self) -> Result<(), Error> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::Precision(format!(
                "mixed precisions {} and {}",
                self.coeffs.len(),
                other.coeffs.len()
            )));
        }
        Ok(())
    }

    /// Witt addition: the product of the underlying power series.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_precision(other)?;
        let n = self.coeffs.len();
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = vec![Rat::zero(); n];
        for k in 1..=n {
            let mut c = a[k - 1].clone() + &b[k - 1];
            for i in 1..k {
                c += &a[i - 1] * &b[k - i - 1];
            }
            out[k - 1] = c;
        }
        Ok(LambdaSeries { coeffs: out })
    }

    /// Witt negation: the multiplicative inverse of the power series.
    pub fn neg(&self) -> Self {
        let n = self.coeffs.len();
        let a = &self.coeffs;
        let mut b = vec![Rat::zero(); n];
        for k in 1..=n {
            let mut c = -a[k - 1].clone();
            for i in 1..k {
                c -= &a[i - 1] * &b[k - i - 1];
            }
            b[k - 1] = c;
        }
        LambdaSeries { coeffs: b }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    /// Witt multiplication, computed componentwise on ghost vectors.
    /// The inverse runs over scaled integers: the product's coefficient
    /// c_k has denominator dividing U_k = k! prod_i (d_i d'_i)^floor(k/i)
    /// built from the factors' coefficient denominators, so the whole
    /// recurrence needs no rational reductions.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_precision(other)?;
        let n = self.coeffs.len();
        let (ef, pf) = self.refined_tables();
        let (eg, pg) = other.refined_tables();
        let qf = self.ghost_scaled(&pf);
        let qg = other.ghost_scaled(&pg);
        // h_nu * prod (e_i e'_i)^floor(nu/i) = qf_nu qg_nu.
        let h: Vec<Int> = (0..n).map(|k| &qf[k] * &qg[k]).collect();
        let basis: Vec<Int> = ef.iter().zip(&eg).map(|(a, b)| a * b).collect();
        // u[k] = k! prod e_i^floor(k/i); the jump from k-1 multiplies by
        // k and by e_i for each divisor i of k.
        let mut u = vec![Int::one(); n + 1];
        for k in 1..=n {
            let mut step = Int::from(k as u64);
            for i in 1..=k {
                if k % i == 0 {
                    step *= &basis[i - 1];
                }
            }
            u[k] = &u[k - 1] * step;
        }
        let mut factorial = Int::one();
        let mut v = vec![Int::zero(); n];
        let mut coeffs = Vec::with_capacity(n);
        for k in 1..=n {
            factorial *= Int::from(k as u64);
            // k v_k = -(k! h~_k + sum h~_nu v_(k-nu) u_k / (p_nu u_(k-nu)))
            // where p_nu = prod e_i^floor(nu/i) = u_nu / nu!.
            let mut s = &factorial * &h[k - 1];
            let mut nu_fact = Int::one();
            for nu in 1..k {
                nu_fact *= Int::from(nu as u64);
                // u_k / (p_nu u_(k-nu)) with p_nu = u_nu / nu!.
                let m = exact_div(&(&u[k] * &nu_fact), &(&u[nu] * &u[k - nu]));
                s += &h[nu - 1] * &v[k - nu - 1] * m;
            }
            v[k - 1] = exact_div(&-s, &Int::from(k as u64));
            coeffs.push(Rat::new(v[k - 1].clone(), u[k].clone()));
        }
        Ok(LambdaSeries { coeffs })
    }

    /// Per-index coefficient denominators d_1..d_N.
    fn denominators(&self) -> Vec<Int> {
        self.coeffs.iter().map(|c| c.denom().clone()).collect()
    }

    /// Refined denominator basis and its cumulative table: e_i carries
    /// only the factors of d_i not already supplied by the table built
    /// from e_1..e_(i-1), and p_nu = prod e_i^floor(nu/i) satisfies
    /// d_nu | p_nu. Nested denominators (as produced by Witt products)
    /// collapse to a table of roughly the true denominator size.
    fn refined_tables(&self) -> (Vec<Int>, Vec<Int>) {
        let n = self.coeffs.len();
        let dens = self.denominators();
        let mut basis = Vec::with_capacity(n);
        let mut p = vec![Int::one(); n + 1];
        for k in 1..=n {
            let mut partial = p[k - 1].clone();
            for i in 1..k {
                if k % i == 0 {
                    partial *= &basis[i - 1];
                }
            }
            let e = exact_div(&dens[k - 1], &dens[k - 1].gcd(&partial));
            p[k] = &partial * &e;
            basis.push(e);
        }
        (basis, p)
    }

    /// Scaled integer ghost vector over the given tables: returns q with
    /// ghost_nu = q_(nu-1) / p_nu. Newton's identities make every q
    /// integral, so the recurrence runs without rational reductions.
    fn ghost_scaled(&self, p: &[Int]) -> Vec<Int> {
        let n = self.coeffs.len();
        let dens = self.denominators();
        // q_k = (k+1) a_k - sum_i a_(i-1) q_(k-i), scaled by p_(k+1);
        // d_i | p_i | p_(k+1) / p_(k+1-i) keeps every division exact.
        let mut q = vec![Int::zero(); n];
        for k in 0..n {
            let mut c = Int::from(k as u64 + 1)
                * self.coeffs[k].numer()
                * exact_div(&p[k + 1], &dens[k]);
            for i in 1..=k {
                let m = exact_div(&p[k + 1], &(&p[k + 1 - i] * &dens[i - 1]));
                c -= self.coeffs[i - 1].numer() * m * &q[k - i];
            }
            q[k] = c;
        }
        q.into_iter().map(|x| -x).collect()
    }

    /// Ghost vector (g_1..g_N): f'/f = -sum g_nu t^(nu-1). Flat
    /// denominators take the scaled-integer route; when the structural
    /// table would outgrow the reduced values the plain rational
    /// recurrence is cheaper.
    pub fn ghost(&self) -> Vec<Rat> {
        let n = self.coeffs.len();
        let (_, p) = self.refined_tables();
        // Unrelated huge denominators defeat the common-table scaling;
        // fall back to the plain rational recurrence there.
        if p[n].bits() > 4096 * n as u64 {
            return self.ghost_rational();
        }
        let q = self.ghost_scaled(&p);
        q.into_iter()
            .enumerate()
            .map(|(k, num)| Rat::new(num, p[k + 1].clone()))
            .collect()
    }

    /// The ghost recurrence over reduced rationals.
    fn ghost_rational(&self) -> Vec<Rat> {
        let n = self.coeffs.len();
        let a = &self.coeffs;
        let mut q = vec![Rat::zero(); n];
        for k in 0..n {
            let mut c = Rat::from_integer((k as i64 + 1).into()) * &a[k];
            for i in 1..=k {
                c -= &a[i - 1] * &q[k - i];
            }
            q[k] = c;
        }
        q.into_iter().map(|x| -x).collect()
    }

    /// The unique series with the given ghost vector; the inverse of `ghost`.
    pub fn ghost_inverse(ghost: &[Rat]) -> Result<Self, Error> {
        if ghost.is_empty() {
            return Err(Error::Precision(
                "a ghost vector needs at least one component".into(),
            ));
        }
        let n = ghost.len();
        // c_0 = 1 and n c_n = -sum_{nu=1}^{n} g_nu c_{n-nu}; c_0 is implicit.
        let mut c = vec![Rat::zero(); n];
        for k in 1..=n {
            let mut s = ghost[k - 1].clone();
            for nu in 1..k {
                s += &ghost[nu - 1] * &c[k - nu - 1];
            }
            c[k - 1] = -s / Rat::from_integer((k as i64).into());
        }
        Ok(LambdaSeries { coeffs: c })
    }

    /// Frobenius F_m: on ghosts (g_nu) -> (g_{m nu}). The result precision is
    /// floor(N / m); an empty result is a precision error.
    pub fn frobenius(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Argument("Frobenius index must be >= 1".into()));
        }
        let out_len = self.coeffs.len() / m;
        if out_len == 0 {
            return Err(Error::Precision(format!(
                "precision {} is too small for Frobenius index {}",
                self.coeffs.len(),
                m
            )));
        }
        let g = self.ghost();
        let h: Vec<Rat> = (1..=out_len).map(|nu| g[nu * m - 1].clone()).collect();
        Self::ghost_inverse(&h)
    }

    /// Verschiebung V_m: substitutes t -> t^m, keeping the precision.
    pub fn verschiebung(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Argument("Verschiebung index must be >= 1".into()));
        }
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        for j in 1..=n {
            if j % m == 0 {
                out[j - 1] = self.coeffs[j / m - 1].clone();
            }
        }
        Ok(LambdaSeries { coeffs: out })
    }
}

impl fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated coefficient list (of t^1..t^N) into a series.
pub fn parse_series(s: &str) -> Result<LambdaSeries, Error> {
    let coeffs = s
        .split(',')
        .map(crate::parse_rat)
        .collect::<Result<Vec<_>, _>>()?;
    LambdaSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn series(v: &[(i64, i64)]) -> LambdaSeries {
        LambdaSeries::new(v.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn line_product_multiplies_scalars() {
        // (1 - at)(1 - bt) = 1 - (ab)t for a = 3/2, b = -7/3.
        let a = LambdaSeries::linear(&rat(3, 2), 6);
        let b = LambdaSeries::linear(&rat(-7, 3), 6);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, LambdaSeries::linear(&rat(-7, 2), 6));
    }

    #[test]
    fn zero_and_one_behave() {
        let f = series(&[(1, 2), (-3, 1), (0, 1), (5, 7)]);
        let zero = LambdaSeries::zero(4);
        let one = LambdaSeries::one(4);
        assert_eq!(f.add(&zero).unwrap(), f);
        assert_eq!(f.mul(&one).unwrap(), f);
        assert_eq!(f.mul(&zero).unwrap(), zero);
        assert_eq!(f.add(&f.neg()).unwrap(), zero);
    }

    #[test]
    fn ghost_of_line_is_powers() {
        let f = LambdaSeries::linear(&rat(2, 3), 5);
        let expect: Vec<Rat> = (1..=5).map(|nu| rat(2, 3).pow(nu)).collect();
        assert_eq!(f.ghost(), expect);
    }

    #[test]
    fn ghost_round_trip() {
        let f = series(&[(1, 1), (-1, 2), (7, 3), (0, 1), (-2, 5)]);
        let back = LambdaSeries::ghost_inverse(&f.ghost()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn scaled_product_matches_ghost_route() {
        // The scaled-integer product must agree with the generic
        // pointwise-ghost route on awkward denominators.
        let f = series(&[(3, 7), (-5, 12), (1, 1), (9, 10), (-4, 21), (0, 1)]);
        let g = series(&[(-2, 9), (7, 4), (-1, 30), (0, 1), (5, 8), (11, 6)]);
        let slow: Vec<Rat> = f
            .ghost()
            .into_iter()
            .zip(g.ghost())
            .map(|(x, y)| x * y)
            .collect();
        assert_eq!(f.mul(&g).unwrap(), LambdaSeries::ghost_inverse(&slow).unwrap());
    }

    #[test]
    fn fibonacci_times_line_product() {
        // (1 - t - t^2) x (1 - 2t): ghosts are Lucas numbers against powers
        // of two, so the product ghost is (2, 12, 32, 112, 352) and the
        // series itself closes up as the polynomial 1 - 2t - 4t^2.
        let f = series(&[(-1, 1), (-1, 1), (0, 1), (0, 1), (0, 1)]);
        let g = LambdaSeries::linear(&rat(2, 1), 5);
        let p = f.mul(&g).unwrap();
        let lucas = [1, 3, 4, 7, 11];
        let expect: Vec<Rat> = lucas
            .iter()
            .enumerate()
            .map(|(i, &l)| rat(l * (2i64).pow(i as u32 + 1), 1))
            .collect();
        assert_eq!(p.ghost(), expect);
        assert_eq!(p, series(&[(-2, 1), (-4, 1), (0, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn ghost_is_ring_homomorphism() {
        let f = series(&[(3, 4), (-1, 3), (2, 1), (1, 6)]);
        let g = series(&[(-5, 2), (1, 1), (0, 1), (7, 2)]);
        let sum = f.add(&g).unwrap();
        let prod = f.mul(&g).unwrap();
        let (gf, gg) = (f.ghost(), g.ghost());
        for nu in 0..4 {
            assert_eq!(sum.ghost()[nu], gf[nu].clone() + &gg[nu]);
            assert_eq!(prod.ghost()[nu], gf[nu].clone() * &gg[nu]);
        }
    }

    #[test]
    fn frobenius_on_lines_and_ghosts() {
        // F_2(1 - 3t) = 1 - 9t at half precision.
        let f = LambdaSeries::linear(&rat(3, 1), 4);
        assert_eq!(f.frobenius(2).unwrap(), LambdaSeries::linear(&rat(9, 1), 2));
        // ghost(F_m f)_nu = ghost(f)_{m nu} in general.
        let g = series(&[(1, 2), (5, 1), (-1, 3), (2, 7), (0, 1), (4, 1)]);
        let gg = g.ghost();
        for m in 1..=3usize {
            let fr = g.frobenius(m).unwrap();
            assert_eq!(fr.precision(), 6 / m);
            for (nu, val) in fr.ghost().iter().enumerate() {
                assert_eq!(*val, gg[(nu + 1) * m - 1]);
            }
        }
        assert!(matches!(
            g.frobenius(7),
            Err(Error::Precision(_))
        ));
    }

    #[test]
    fn verschiebung_spreads_ghosts() {
        let f = LambdaSeries::linear(&rat(5, 1), 3);
        let v = f.verschiebung(2).unwrap();
        // V_2(1 - 5t) = 1 - 5t^2, ghost (0, 2*5, 0).
        assert_eq!(v.coeffs(), &[rat(0, 1), rat(-5, 1), rat(0, 1)]);
        assert_eq!(v.ghost(), vec![rat(0, 1), rat(10, 1), rat(0, 1)]);
        // F_m V_m = multiplication by m on ghosts.
        let g = series(&[(1, 3), (-2, 1), (4, 5), (1, 1), (0, 1), (-3, 2)]);
        let fv = g.verschiebung(3).unwrap().frobenius(3).unwrap();
        let expect: Vec<Rat> = g.ghost()[..2]
            .iter()
            .map(|x| x * rat(3, 1))
            .collect();
        assert_eq!(fv.ghost(), expect);
    }

    #[test]
    fn mixed_precision_is_rejected() {
        let f = LambdaSeries::one(3);
        let g = LambdaSeries::one(4);
        assert!(matches!(f.add(&g), Err(Error::Precision(_))));
        assert!(matches!(f.mul(&g), Err(Error::Precision(_))));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let f = parse_series("1/2,-3,0,5/7").unwrap();
        assert_eq!(f.to_string(), "1/2,-3,0,5/7");
        assert!(parse_series("").is_err());
        assert!(parse_series("1,x").is_err());
    }
}
