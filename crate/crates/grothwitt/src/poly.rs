//! Dense univariate polynomial helpers over Q and Z.
//!
//! Coefficient vectors are ascending by degree. These routines back the
//! one-polynomial subring, cyclotomic arithmetic, the Kronecker test for
//! roots of unity, and the float root checks (Weil bounds, eigenvalue
//! multisets). Exact work stays exact; floats appear only in the
//! Durand-Kerner root finder, which is always run on an exactly computed
//! square-free factor so every root it sees is simple.

use crate::{Error, Int, Rat};
use num_traits::{One, ToPrimitive, Zero};

/// Drops trailing zero coefficients.
pub fn qtrim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Degree of a trimmed nonzero polynomial.
pub fn qdeg(v: &[Rat]) -> usize {
    v.len().saturating_sub(1)
}

pub fn qis_zero(v: &[Rat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn qadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    qtrim(out)
}

pub fn qsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qtrim(out)
}

pub fn qmul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if qis_zero(a) || qis_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

pub fn qscale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    qtrim(a.iter().map(|c| c * s).collect())
}

pub fn qderiv(a: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(c * Rat::from_integer(Int::from(i)));
    }
    qtrim(out)
}

pub fn qeval(a: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Quotient and remainder; the divisor must be nonzero.
pub fn qdivrem(a: &[Rat], b: &[Rat]) -> Result<(Vec<Rat>, Vec<Rat>), Error> {
    let b = qtrim(b.to_vec());
    if b.is_empty() {
        return Err(Error::Argument("polynomial division by zero".into()));
    }
    let mut rem = qtrim(a.to_vec());
    if rem.len() < b.len() {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        quot[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = bc * &c;
            rem[shift + i] -= v;
        }
        rem = qtrim(rem);
    }
    Ok((qtrim(quot), rem))
}

/// Exact division; errors when the remainder is nonzero.
pub fn qdiv_exact(a: &[Rat], b: &[Rat]) -> Result<Vec<Rat>, Error> {
    let (q, r) = qdivrem(a, b)?;
    if !r.is_empty() {
        return Err(Error::Argument("polynomial division is not exact".into()));
    }
    Ok(q)
}

/// Monic gcd over Q; gcd(0, 0) = 0.
pub fn qgcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = qtrim(a.to_vec());
    let mut y = qtrim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = qdivrem(&x, &y).expect("divisor is nonzero");
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        x = x.iter().map(|c| c / &lead).collect();
    }
    x
}

/// Square-free part f / gcd(f, f').
pub fn qsquarefree_part(f: &[Rat]) -> Result<Vec<Rat>, Error> {
    let g = qgcd(f, &qderiv(f));
    qdiv_exact(f, &g)
}

/// Yun decomposition of a nonconstant polynomial: pairs (factor,
/// multiplicity) with each factor square-free and pairwise coprime.
pub fn qsquarefree_decomposition(f: &[Rat]) -> Result<Vec<(Vec<Rat>, usize)>, Error> {
    let f = qtrim(f.to_vec());
    if f.len() <= 1 {
        return Ok(Vec::new());
    }
    let fp = qderiv(&f);
    let a0 = qgcd(&f, &fp);
    let mut b = qdiv_exact(&f, &a0)?;
    let c = qdiv_exact(&fp, &a0)?;
    let mut d = qsub(&c, &qderiv(&b));
    let mut out = Vec::new();
    let mut i = 1usize;
    while qdeg(&b) > 0 {
        let p = qgcd(&b, &d);
        if qdeg(&p) > 0 {
            out.push((p.clone(), i));
        }
        b = qdiv_exact(&b, &p)?;
        let cc = qdiv_exact(&d, &p)?;
        d = qsub(&cc, &qderiv(&b));
        i += 1;
    }
    Ok(out)
}

/// Reversal x^deg f(1/x) of a trimmed polynomial.
pub fn qreverse(f: &[Rat]) -> Vec<Rat> {
    let f = qtrim(f.to_vec());
    let mut r: Vec<Rat> = f.into_iter().rev().collect();
    if r.is_empty() {
        r.push(Rat::zero());
    }
    qtrim(r)
}

// Integer polynomials.

pub fn ztrim(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn zmul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

/// Division by a monic divisor, exact over Z; errors on a nonzero remainder.
pub fn zdiv_exact_monic(a: &[Int], b: &[Int]) -> Result<Vec<Int>, Error> {
    let b = ztrim(b.to_vec());
    if b.last().map_or(true, |c| !c.is_one()) {
        return Err(Error::Argument("divisor must be monic".into()));
    }
    let mut rem = ztrim(a.to_vec());
    if rem.len() < b.len() {
        if rem.is_empty() {
            return Ok(Vec::new());
        }
        return Err(Error::Argument("polynomial division is not exact".into()));
    }
    let mut quot = vec![Int::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone();
        quot[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = bc * &c;
            rem[shift + i] -= v;
        }
        rem = ztrim(rem);
    }
    if !rem.is_empty() {
        return Err(Error::Argument("polynomial division is not exact".into()));
    }
    Ok(ztrim(quot))
}

/// Euler phi for machine-sized arguments.
pub fn euler_phi_u64(mut d: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            let mut pk = 1;
            while d % p == 0 {
                d /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if d > 1 {
        phi *= d - 1;
    }
    phi
}

/// The d-th cyclotomic polynomial, by the Moebius-product recurrence
/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e with exact division.
pub fn cyclotomic(d: u64) -> Vec<Int> {
    assert!(d >= 1);
    if d == 1 {
        return vec![Int::from(-1), Int::from(1)];
    }
    let mut num = vec![Int::zero(); d as usize + 1];
    num[0] = Int::from(-1);
    num[d as usize] = Int::from(1);
    let mut acc = num;
    for e in 1..d {
        if d % e == 0 {
            acc = zdiv_exact_monic(&acc, &cyclotomic(e)).expect("cyclotomic recurrence divides");
        }
    }
    acc
}

/// Kronecker test: decides whether a monic integer polynomial is a product
/// of cyclotomic polynomials, returning the multiset of orders d when it is.
/// Only orders with phi(d) <= the residual degree can divide, so the search
/// space is finite.
pub fn cyclotomic_orders(f: &[Int]) -> Option<Vec<u64>> {
    let mut f = ztrim(f.to_vec());
    if f.last().map_or(true, |c| !c.is_one()) {
        return None;
    }
    let mut orders = Vec::new();
    while f.len() > 1 {
        let deg = (f.len() - 1) as u64;
        let max_d = 2 * deg * deg + 1;
        let mut found = false;
        for d in 1..=max_d {
            if euler_phi_u64(d) > deg {
                continue;
            }
            let phi = cyclotomic(d);
            if let Ok(q) = zdiv_exact_monic(&f, &phi) {
                orders.push(d);
                f = q;
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    orders.sort_unstable();
    Some(orders)
}

// Float root finding, used only for advisory checks and oracles.

/// Minimal complex double for the root finder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cpx {
    pub re: f64,
    pub im: f64,
}

impl Cpx {
    pub fn new(re: f64, im: f64) -> Self {
        Cpx { re, im }
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn add(self, o: Cpx) -> Cpx {
        Cpx::new(self.re + o.re, self.im + o.im)
    }
    pub fn sub(self, o: Cpx) -> Cpx {
        Cpx::new(self.re - o.re, self.im - o.im)
    }
    pub fn mul(self, o: Cpx) -> Cpx {
        Cpx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    pub fn div(self, o: Cpx) -> Cpx {
        let d = o.re * o.re + o.im * o.im;
        Cpx::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

fn eval_cpx(coeffs: &[f64], z: Cpx) -> Cpx {
    let mut acc = Cpx::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc.mul(z).add(Cpx::new(c, 0.0));
    }
    acc
}

/// Durand-Kerner iteration on a polynomial with simple roots; coefficients
/// ascending, degree >= 1, nonzero leading coefficient.
pub fn durand_kerner(coeffs: &[f64]) -> Vec<Cpx> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    // Cauchy-style radius keeps the start circle around every root.
    let radius = 1.0
        + monic[..n]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let seed = Cpx::new(0.4, 0.9);
    let mut roots: Vec<Cpx> = (0..n)
        .map(|k| {
            let mut z = Cpx::new(1.0, 0.0);
            for _ in 0..=k {
                z = z.mul(seed);
            }
            Cpx::new(z.re * radius, z.im * radius)
        })
        .collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Cpx::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom = denom.mul(roots[i].sub(roots[j]));
                }
            }
            let step = eval_cpx(&monic, roots[i]).div(denom);
            roots[i] = roots[i].sub(step);
            delta = delta.max(step.abs());
        }
        if delta < 1e-14 * radius {
            break;
        }
    }
    roots
}

/// Converts exactly held rationals to doubles for advisory float checks.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Inverse roots of f = prod (1 - alpha_i t) with multiplicity, i.e. the
/// roots of the reversal, found on exact square-free factors so repeated
/// inverse roots do not degrade float accuracy.
pub fn inverse_roots(f: &[Rat]) -> Result<Vec<Cpx>, Error> {
    let f = qtrim(f.to_vec());
    if f.len() <= 1 {
        return Ok(Vec::new());
    }
    if f[0].is_zero() {
        return Err(Error::Argument(
            "inverse roots need a nonzero constant term".into(),
        ));
    }
    let rev = qreverse(&f);
    let mut out = Vec::new();
    for (factor, mult) in qsquarefree_decomposition(&rev)? {
        let coeffs: Vec<f64> = factor.iter().map(rat_to_f64).collect();
        for root in durand_kerner(&coeffs) {
            for _ in 0..mult {
                out.push(root);
            }
        }
    }
    Ok(out)
}

/// det(1 - A t) for a square integer matrix, by Faddeev-LeVerrier; exact.
pub fn det_one_minus_at(a: &[Vec<Int>]) -> Vec<Rat> {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        return vec![Rat::one()];
    }
    let to_rat = |m: &[Vec<Int>]| -> Vec<Vec<Rat>> {
        m.iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect()
    };
    let arat = to_rat(a);
    let matmul = |x: &Vec<Vec<Rat>>, y: &Vec<Vec<Rat>>| -> Vec<Vec<Rat>> {
        let mut out = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if x[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &x[i][k] * &y[k][j];
                    out[i][j] += v;
                }
            }
        }
        out
    };
    let trace = |x: &Vec<Vec<Rat>>| -> Rat {
        let mut t = Rat::zero();
        for i in 0..n {
            t += &x[i][i];
        }
        t
    };
    let mut coeffs = vec![Rat::one()];
    let mut m = arat.clone();
    let mut c = -trace(&m);
    coeffs.push(c.clone());
    for k in 2..=n {
        let mut shifted = m;
        for i in 0..n {
            shifted[i][i] += &c;
        }
        m = matmul(&arat, &shifted);
        c = -trace(&m) / Rat::from_integer(Int::from(k));
        coeffs.push(c.clone());
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| rat(n, 1)).collect()
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = qp(&[-1, 0, 1]);
        let g = qp(&[-1, 1]);
        let (q, r) = qdivrem(&f, &g).unwrap();
        assert_eq!(q, qp(&[1, 1]));
        assert!(r.is_empty());
        let h = qgcd(&f, &qp(&[1, 1]));
        assert_eq!(h, qp(&[1, 1]));
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x - 1)^2 (x + 2)
        let f = qmul(&qmul(&qp(&[-1, 1]), &qp(&[-1, 1])), &qp(&[2, 1]));
        let decomp = qsquarefree_decomposition(&f).unwrap();
        assert_eq!(decomp.len(), 2);
        assert_eq!(decomp[0], (qp(&[2, 1]), 1));
        assert_eq!(decomp[1], (qp(&[-1, 1]), 2));
    }

    #[test]
    fn cyclotomics_are_the_classics() {
        assert_eq!(cyclotomic(1), vec![Int::from(-1), Int::from(1)]);
        assert_eq!(cyclotomic(2), vec![Int::from(1), Int::from(1)]);
        assert_eq!(
            cyclotomic(4),
            vec![Int::from(1), Int::from(0), Int::from(1)]
        );
        assert_eq!(
            cyclotomic(6),
            vec![Int::from(1), Int::from(-1), Int::from(1)]
        );
        // phi(105) has the first coefficient of absolute value 2; spot-check
        // degree only.
        assert_eq!(cyclotomic(12).len() - 1, euler_phi_u64(12) as usize);
    }

    #[test]
    fn kronecker_detects_roots_of_unity() {
        // (x^2 + 1)(x + 1) = Phi_4 Phi_2
        let f = zmul(
            &[Int::from(1), Int::from(0), Int::from(1)],
            &[Int::from(1), Int::from(1)],
        );
        assert_eq!(cyclotomic_orders(&f), Some(vec![2, 4]));
        // x^2 - x - 1 has golden-ratio roots, not roots of unity.
        let g = vec![Int::from(-1), Int::from(-1), Int::from(1)];
        assert_eq!(cyclotomic_orders(&g), None);
    }

    #[test]
    fn inverse_roots_of_squared_factor() {
        // (1 + 2t)^2: inverse roots are -2, -2; the square-free route must
        // still deliver both to full float accuracy.
        let f = qp(&[1, 4, 4]);
        let roots = inverse_roots(&f).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r.re + 2.0).abs() < 1e-12 && r.im.abs() < 1e-12);
        }
    }

    #[test]
    fn char_series_of_companion() {
        // A = [[0, -1], [1, 0]] has det(1 - At) = 1 + t^2.
        let a = vec![
            vec![Int::from(0), Int::from(-1)],
            vec![Int::from(1), Int::from(0)],
        ];
        assert_eq!(det_one_minus_at(&a), qp(&[1, 0, 1]));
    }
}
