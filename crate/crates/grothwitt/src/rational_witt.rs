//! The subring R(Q) of Lambda(Q) spanned by differences f - g of
//! polynomials with constant term 1, and T-graded tuples of such elements.
//!
//! An element is stored as a formal quotient num/den of one-polynomials
//! (the power series num * den^-1 is the Lambda-difference num - den),
//! kept in the canonical form gcd(num, den) = 1. Products factor exactly
//! through Newton power sums: for f of degree d the power sums of its
//! inverse roots satisfy p_nu = -nu c_nu - sum_{j<nu} c_j p_{nu-j}, they
//! coincide with the ghost components of f, and the Witt product of
//! polynomials of degrees d, e is the degree d*e polynomial whose first
//! d*e power sums are the componentwise products. Frobenius operators
//! factor the same way and never leave the subring.

use crate::poly::{qdiv_exact, qgcd, qtrim};
use crate::witt::LambdaSeries;
use crate::{Error, Rat};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial with constant term 1: stores the coefficients of t^1..t^d
/// with a nonzero trailing coefficient; the constant polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePoly {
    coeffs: Vec<Rat>,
}

impl OnePoly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        OnePoly {
            coeffs: qtrim(coeffs),
        }
    }

    /// The constant polynomial 1, the Witt zero.
    pub fn one() -> Self {
        OnePoly { coeffs: Vec::new() }
    }

    /// The line 1 - a t.
    pub fn linear(a: &Rat) -> Self {
        OnePoly::new(vec![-a.clone()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of t^k; k = 0 gives 1.
    pub fn coeff(&self, k: usize) -> Rat {
        if k == 0 {
            Rat::one()
        } else {
            self.coeffs.get(k - 1).cloned().unwrap_or_else(Rat::zero)
        }
    }

    /// Coefficients of t^1..t^d.
    pub fn tail_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Ascending coefficient vector including the constant 1.
    pub fn full_coeffs(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(Rat::one());
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Rebuilds from an ascending coefficient vector whose constant term
    /// must be 1.
    pub fn from_full(full: &[Rat]) -> Result<Self, Error> {
        let full = qtrim(full.to_vec());
        if full.first().map_or(true, |c| !c.is_one()) {
            return Err(Error::Argument(
                "a one-polynomial needs constant term 1".into(),
            ));
        }
        Ok(OnePoly::new(full[1..].to_vec()))
    }

    /// Ordinary polynomial product, the Witt sum of two effective classes.
    pub fn mul(&self, other: &Self) -> Self {
        let prod = crate::poly::qmul(&self.full_coeffs(), &other.full_coeffs());
        OnePoly::from_full(&prod).expect("product of one-polynomials")
    }

    /// First d power sums of the inverse roots, by the Newton recurrence;
    /// these are exactly the first d ghost components.
    pub fn power_sums(&self, d: usize) -> Vec<Rat> {
        let mut p = Vec::with_capacity(d);
        for nu in 1..=d {
            let mut s = self.coeff(nu) * Rat::from_integer((nu as i64).into());
            for j in 1..nu {
                if j <= self.coeffs.len() {
                    s += self.coeff(j) * &p[nu - j - 1];
                }
            }
            p.push(-s);
        }
        p
    }

    /// The degree-d polynomial with the given first d = p.len() power sums.
    pub fn from_power_sums(p: &[Rat]) -> Self {
        let mut c: Vec<Rat> = Vec::with_capacity(p.len());
        for nu in 1..=p.len() {
            let mut s = p[nu - 1].clone();
            for j in 1..nu {
                s += &c[j - 1] * &p[nu - j - 1];
            }
            c.push(-s / Rat::from_integer((nu as i64).into()));
        }
        OnePoly::new(c)
    }

    /// Witt product: the polynomial of degree deg(self) * deg(other) whose
    /// inverse roots are the pairwise products of the operands' roots.
    pub fn witt_mul(&self, other: &Self) -> Self {
        let d = self.degree() * other.degree();
        if d == 0 {
            return OnePoly::one();
        }
        let pa = self.power_sums(d);
        let pb = other.power_sums(d);
        let prod: Vec<Rat> = pa.into_iter().zip(pb).map(|(x, y)| x * y).collect();
        OnePoly::from_power_sums(&prod)
    }

    /// Frobenius F_m, raising every inverse root to the m-th power; exact
    /// and degree preserving.
    pub fn frobenius(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Argument("Frobenius index must be >= 1".into()));
        }
        let d = self.degree();
        if d == 0 {
            return Ok(OnePoly::one());
        }
        let p = self.power_sums(m * d);
        let sub: Vec<Rat> = (1..=d).map(|nu| p[nu * m - 1].clone()).collect();
        Ok(OnePoly::from_power_sums(&sub))
    }

    /// Verschiebung V_m, substituting t -> t^m.
    pub fn verschiebung(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Argument("Verschiebung index must be >= 1".into()));
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() * m];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[(j + 1) * m - 1] = c.clone();
        }
        Ok(OnePoly::new(out))
    }

    /// Monic-free gcd normalized to constant term 1.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = qgcd(&self.full_coeffs(), &other.full_coeffs());
        if g.is_empty() {
            return OnePoly::one();
        }
        let c0 = g[0].clone();
        let scaled: Vec<Rat> = g.iter().map(|c| c / &c0).collect();
        OnePoly::from_full(&scaled).expect("gcd of one-polynomials divides them")
    }

    pub fn div_exact(&self, other: &Self) -> Result<Self, Error> {
        let q = qdiv_exact(&self.full_coeffs(), &other.full_coeffs())?;
        OnePoly::from_full(&q)
    }

    /// The polynomial as an exact Lambda-series element at precision n.
    pub fn to_lambda(&self, n: usize) -> Result<LambdaSeries, Error> {
        let mut coeffs = vec![Rat::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if j < n {
                coeffs[j] = c.clone();
            }
        }
        LambdaSeries::new(coeffs)
    }
}

/// Element of R(Q): the Lambda-difference num - den of two
/// one-polynomials, i.e. the power series num/den. Canonical form has
/// gcd(num, den) = 1; equality is still decided by cross-multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittRational {
    num: OnePoly,
    den: OnePoly,
}

impl WittRational {
    pub fn new(num: OnePoly, den: OnePoly) -> Self {
        let g = num.gcd(&den);
        if g.is_one() {
            return WittRational { num, den };
        }
        WittRational {
            num: num.div_exact(&g).expect("gcd divides numerator"),
            den: den.div_exact(&g).expect("gcd divides denominator"),
        }
    }

    /// The zero element 1/1.
    pub fn zero() -> Self {
        WittRational {
            num: OnePoly::one(),
            den: OnePoly::one(),
        }
    }

    /// The effective class of a polynomial, f/1.
    pub fn from_poly(num: OnePoly) -> Self {
        WittRational {
            num,
            den: OnePoly::one(),
        }
    }

    pub fn num(&self) -> &OnePoly {
        &self.num
    }

    pub fn den(&self) -> &OnePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == self.den
    }

    /// Witt sum: numerators and denominators multiply.
    pub fn add(&self, other: &Self) -> Self {
        WittRational::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Witt negation swaps numerator and denominator.
    pub fn neg(&self) -> Self {
        WittRational {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Witt product, bilinear over the power-sum route.
    pub fn mul(&self, other: &Self) -> Self {
        let num = self
            .num
            .witt_mul(&other.num)
            .mul(&self.den.witt_mul(&other.den));
        let den = self
            .num
            .witt_mul(&other.den)
            .mul(&self.den.witt_mul(&other.num));
        WittRational::new(num, den)
    }

    /// Equality by cross-multiplication.
    pub fn equal(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Ghost components g_1..g_h, exact for every index.
    pub fn ghost_vector(&self, h: usize) -> Vec<Rat> {
        let pn = self.num.power_sums(h);
        let pd = self.den.power_sums(h);
        pn.into_iter().zip(pd).map(|(a, b)| a - b).collect()
    }

    pub fn ghost(&self, nu: usize) -> Rat {
        assert!(nu >= 1, "ghost components are indexed from 1");
        self.ghost_vector(nu).pop().expect("nu >= 1")
    }

    /// Frobenius F_m, factoring exactly through num and den.
    pub fn frobenius(&self, m: usize) -> Result<Self, Error> {
        Ok(WittRational::new(
            self.num.frobenius(m)?,
            self.den.frobenius(m)?,
        ))
    }

    /// Verschiebung V_m on both parts.
    pub fn verschiebung(&self, m: usize) -> Result<Self, Error> {
        Ok(WittRational::new(
            self.num.verschiebung(m)?,
            self.den.verschiebung(m)?,
        ))
    }

    /// Expansion as a truncated Lambda-series, num - den in Lambda(Q).
    pub fn to_lambda(&self, n: usize) -> Result<LambdaSeries, Error> {
        let f = self.num.to_lambda(n)?;
        let g = self.den.to_lambda(n)?;
        f.sub(&g)
    }
}

#[derive(Serialize, Deserialize)]
struct WittRationalJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for WittRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let enc = |p: &OnePoly| p.tail_coeffs().iter().map(|c| c.to_string()).collect();
        WittRationalJson {
            num: enc(&self.num),
            den: enc(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WittRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = WittRationalJson::deserialize(d)?;
        let dec = |v: Vec<String>| -> Result<OnePoly, D::Error> {
            let coeffs = v
                .iter()
                .map(|s| crate::parse_rat(s).map_err(D::Error::custom))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(OnePoly::new(coeffs))
        };
        Ok(WittRational::new(dec(raw.num)?, dec(raw.den)?))
    }
}

/// T-graded tuple of Witt rationals, the shape of a motivic measure of a
/// curve: coefficients of T^0, T^1, ... with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotivicMeasurePoly {
    coeffs: Vec<WittRational>,
}

impl MotivicMeasurePoly {
    pub fn new(coeffs: Vec<WittRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        MotivicMeasurePoly { coeffs }
    }

    pub fn zero() -> Self {
        MotivicMeasurePoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[WittRational] {
        &self.coeffs
    }

    /// Coefficient of T^i, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> WittRational {
        self.coeffs.get(i).cloned().unwrap_or_else(WittRational::zero)
    }

    pub fn t_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        MotivicMeasurePoly::new(out)
    }

    pub fn neg(&self) -> Self {
        MotivicMeasurePoly::new(self.coeffs.iter().map(WittRational::neg).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product of T-graded tuples: convolution in T over the Witt ring.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return MotivicMeasurePoly::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![WittRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        MotivicMeasurePoly::new(out)
    }

    /// nu-th ghost component: a polynomial in T with rational coefficients,
    /// ascending and trimmed.
    pub fn ghost(&self, nu: usize) -> Vec<Rat> {
        qtrim(self.coeffs.iter().map(|c| c.ghost(nu)).collect())
    }

    /// Ghost component summed at T = 1; for a curve measure this is the
    /// point count N_nu.
    pub fn ghost_at_one(&self, nu: usize) -> Rat {
        self.ghost(nu).into_iter().sum()
    }

    pub fn frobenius(&self, m: usize) -> Result<Self, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.frobenius(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MotivicMeasurePoly::new(coeffs))
    }

    pub fn verschiebung(&self, m: usize) -> Result<Self, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.verschiebung(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MotivicMeasurePoly::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct MeasureJson {
    #[serde(rename = "T")]
    t: Vec<WittRational>,
}

impl Serialize for MotivicMeasurePoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MeasureJson {
            t: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotivicMeasurePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(MotivicMeasurePoly::new(MeasureJson::deserialize(d)?.t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn op(v: &[(i64, i64)]) -> OnePoly {
        OnePoly::new(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn lines(scalars: &[i64]) -> OnePoly {
        scalars.iter().fold(OnePoly::one(), |acc, &a| {
            acc.mul(&OnePoly::linear(&rat(a, 1)))
        })
    }

    #[test]
    fn power_sums_of_fibonacci_polynomial_are_lucas() {
        let f = op(&[(-1, 1), (-1, 1)]);
        let expect: Vec<Rat> = [1, 3, 4, 7, 11].iter().map(|&l| rat(l, 1)).collect();
        assert_eq!(f.power_sums(5), expect);
        assert_eq!(OnePoly::from_power_sums(&f.power_sums(2)), f);
    }

    #[test]
    fn witt_mul_pairs_roots() {
        // ((1-t)(1-2t)) x (1-3t) = (1-3t)(1-6t) = 1 - 9t + 18t^2
        let f = lines(&[1, 2]);
        let g = lines(&[3]);
        assert_eq!(f.witt_mul(&g), op(&[(-9, 1), (18, 1)]));
        // (1 - t - t^2) x (1 - 2t) = 1 - 2t - 4t^2
        let h = op(&[(-1, 1), (-1, 1)]);
        assert_eq!(h.witt_mul(&lines(&[2])), op(&[(-2, 1), (-4, 1)]));
        // The Witt zero annihilates.
        assert_eq!(f.witt_mul(&OnePoly::one()), OnePoly::one());
    }

    #[test]
    fn frobenius_and_verschiebung_on_polynomials() {
        let f = lines(&[2]);
        assert_eq!(f.frobenius(3).unwrap(), lines(&[8]));
        let g = lines(&[1, 2]);
        assert_eq!(g.frobenius(2).unwrap(), lines(&[1, 4]));
        assert_eq!(
            g.verschiebung(2).unwrap(),
            op(&[(0, 1), (-3, 1), (0, 1), (2, 1)])
        );
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        let a = WittRational::new(lines(&[1, 2]), lines(&[1]));
        assert_eq!(a.num(), &lines(&[2]));
        assert_eq!(a.den(), &OnePoly::one());
        let b = WittRational::new(lines(&[2, 5]), lines(&[5, 7]));
        assert_eq!(b.num(), &lines(&[2]));
        assert_eq!(b.den(), &lines(&[7]));
    }

    #[test]
    fn ring_ops_and_equality() {
        let one_minus_t = WittRational::from_poly(lines(&[1]));
        let double = one_minus_t.add(&one_minus_t);
        assert_eq!(double.num(), &lines(&[1, 1]));
        assert!(one_minus_t.neg().equal(&WittRational::new(
            OnePoly::one(),
            lines(&[1])
        )));
        assert!(one_minus_t.sub(&one_minus_t).is_zero());
        let f = WittRational::from_poly(lines(&[1, 2]));
        let g = WittRational::from_poly(lines(&[3]));
        assert_eq!(f.mul(&g).num(), &lines(&[3, 6]));
        // Cross-multiplication equality sees through non-reduced builds.
        let h1 = WittRational::new(lines(&[2, 3]), lines(&[3]));
        let h2 = WittRational::from_poly(lines(&[2]));
        assert!(h1.equal(&h2));
    }

    #[test]
    fn frobenius_on_quotients() {
        let a = WittRational::new(lines(&[2]), lines(&[3]));
        let fr = a.frobenius(2).unwrap();
        assert_eq!(fr.num(), &lines(&[4]));
        assert_eq!(fr.den(), &lines(&[9]));
    }

    #[test]
    fn ghosts_separate_and_match_lambda() {
        let a = WittRational::new(lines(&[2, 3]), lines(&[5]));
        let b = WittRational::new(lines(&[7]), lines(&[1, 4]));
        let sum = a.add(&b);
        let ga = a.ghost_vector(6);
        let gb = b.ghost_vector(6);
        for nu in 1..=6 {
            assert_eq!(sum.ghost(nu), ga[nu - 1].clone() + &gb[nu - 1]);
        }
        // Expansion agrees with series arithmetic at precision 16.
        let n = 16;
        let lhs = a.mul(&b).to_lambda(n).unwrap();
        let rhs = a.to_lambda(n).unwrap().mul(&b.to_lambda(n).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // Ghost agreement up to the degree bound forces equality.
        let c = WittRational::new(lines(&[2, 3]).mul(&lines(&[7])), lines(&[7, 5]));
        let d = WittRational::new(lines(&[2, 3]), lines(&[5]));
        let bound = c.num().degree() + c.den().degree() + d.num().degree() + d.den().degree();
        assert_eq!(c.ghost_vector(bound), d.ghost_vector(bound));
        assert!(c.equal(&d));
    }

    #[test]
    fn measure_arithmetic_and_ghosts() {
        // The measure of a projective line over F_2, built by hand.
        let m = MotivicMeasurePoly::new(vec![
            WittRational::from_poly(lines(&[1])),
            WittRational::zero(),
            WittRational::from_poly(lines(&[2])),
        ]);
        assert_eq!(m.ghost(3), vec![rat(1, 1), rat(0, 1), rat(8, 1)]);
        assert_eq!(m.ghost_at_one(3), rat(9, 1));
        let sq = m.mul(&m);
        assert_eq!(sq.t_degree(), 4);
        assert_eq!(
            sq.ghost(2),
            vec![rat(1, 1), rat(0, 1), rat(8, 1), rat(0, 1), rat(16, 1)]
        );
        let fr = m.frobenius(2).unwrap();
        assert_eq!(fr.ghost(1), vec![rat(1, 1), rat(0, 1), rat(4, 1)]);
        let v = m.verschiebung(2).unwrap();
        assert_eq!(v.ghost(2), vec![rat(2, 1), rat(0, 1), rat(4, 1)]);
        assert_eq!(v.ghost(1), vec![]);
    }

    #[test]
    fn json_round_trips() {
        let a = WittRational::new(lines(&[2, 3]), lines(&[5]));
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"num":["-5","6"],"den":["-5"]}"#);
        let back: WittRational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        let m = MotivicMeasurePoly::new(vec![a.clone(), WittRational::zero(), a.clone()]);
        let mtext = serde_json::to_string(&m).unwrap();
        let mback: MotivicMeasurePoly = serde_json::from_str(&mtext).unwrap();
        assert_eq!(mback, m);
    }
}
