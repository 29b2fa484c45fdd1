//! Finite fields GF(p^n) in a polynomial basis.
//!
//! The modulus is the lexicographically first irreducible monic polynomial
//! of degree n over GF(p) counted from a seed offset, so a field spec is
//! reproducible from (p, n, offset) alone. Elements are coefficient vectors
//! of length n, enumerated in lexicographic coefficient order with the
//! constant coefficient varying fastest. Arithmetic reduces modulo the
//! modulus; inverses come from the extended Euclidean algorithm. The
//! distinguished generator is the first element in enumeration order whose
//! multiplicative order is p^n - 1.

use crate::Error;
use serde::{Deserialize, Serialize};

/// Field element: coefficients c_0..c_{n-1} with respect to the power
/// basis of the modulus root.
pub type Elt = Vec<u64>;

/// A concrete GF(p^n) with a pinned modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub n: usize,
    /// Monic modulus of degree n, ascending, length n + 1.
    pub modulus: Vec<u64>,
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p), ascending coefficients, for modulus search only.
fn gfp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn gfp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    gfp_trim(out)
}

fn gfp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = gfp_trim(b.to_vec());
    let mut rem = gfp_trim(a.to_vec());
    let lead = *b.last().expect("nonzero divisor");
    let lead_inv = invmod(lead, p);
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = mulmod(*rem.last().unwrap(), lead_inv, p);
        for (i, &bc) in b.iter().enumerate() {
            let sub = mulmod(bc, c, p);
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        rem = gfp_trim(rem);
    }
    rem
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // Extended Euclid on machine words; p is prime and a is nonzero mod p.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "inverse of a unit");
    (((s0 % p as i128) + p as i128) % p as i128) as u64
}

/// Trial division by monic polynomials of degree up to n/2.
fn gfp_is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let half = n / 2;
    for deg in 1..=half {
        // Monic divisor candidates keyed by their lower coefficients.
        let count = (p as u128).pow(deg as u32);
        let mut k = 0u128;
        while k < count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut kk = k;
            for _ in 0..deg {
                g.push((kk % p as u128) as u64);
                kk /= p as u128;
            }
            g.push(1);
            if gfp_rem(f, &g, p).is_empty() {
                return false;
            }
            k += 1;
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^n) with the lexicographically first irreducible monic
    /// modulus counted from `offset`.
    pub fn new(p: u64, n: usize, offset: u64) -> Result<Self, Error> {
        if !is_prime_u64(p) {
            return Err(Error::Argument(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Argument("extension degree must be >= 1".into()));
        }
        if (p as u128).pow(n as u32) > u64::MAX as u128 / 2 {
            return Err(Error::Argument(format!(
                "field GF({p}^{n}) is out of the supported range"
            )));
        }
        let total = (p as u128).pow(n as u32);
        let mut k = offset as u128 % total;
        for _ in 0..total {
            let mut f = Vec::with_capacity(n + 1);
            let mut kk = k;
            for _ in 0..n {
                f.push((kk % p as u128) as u64);
                kk /= p as u128;
            }
            f.push(1);
            if gfp_is_irreducible(&f, p) {
                return Ok(FieldSpec { p, n, modulus: f });
            }
            k = (k + 1) % total;
        }
        Err(Error::Argument(format!(
            "no irreducible modulus of degree {n} over GF({p})"
        )))
    }

    /// Validates a deserialized spec: prime p, monic irreducible modulus.
    pub fn validate(&self) -> Result<(), Error> {
        if !is_prime_u64(self.p) {
            return Err(Error::Argument(format!("{} is not prime", self.p)));
        }
        if self.n == 0 || self.modulus.len() != self.n + 1 {
            return Err(Error::Argument("modulus length must be n + 1".into()));
        }
        if self.modulus[self.n] != 1 {
            return Err(Error::Argument("modulus must be monic".into()));
        }
        if self.modulus.iter().any(|&c| c >= self.p) {
            return Err(Error::Argument("modulus coefficients must be < p".into()));
        }
        if !gfp_is_irreducible(&self.modulus, self.p) {
            return Err(Error::Argument("modulus is reducible".into()));
        }
        Ok(())
    }

    /// Field size p^n.
    pub fn order(&self) -> u64 {
        (self.p as u128).pow(self.n as u32) as u64
    }

    pub fn zero(&self) -> Elt {
        vec![0; self.n]
    }

    pub fn one(&self) -> Elt {
        self.from_u64(1)
    }

    /// Element with index k in enumeration order: base-p digits of k.
    pub fn from_index(&self, k: u64) -> Elt {
        let mut out = vec![0u64; self.n];
        let mut kk = k;
        for slot in out.iter_mut() {
            *slot = kk % self.p;
            kk /= self.p;
        }
        out
    }

    /// Index of an element in enumeration order.
    pub fn index_of(&self, x: &Elt) -> u64 {
        let mut k = 0u64;
        for &c in x.iter().rev() {
            k = k * self.p + c;
        }
        k
    }

    /// Constant embedding of an integer.
    pub fn from_u64(&self, c: u64) -> Elt {
        let mut out = vec![0; self.n];
        out[0] = c % self.p;
        out
    }

    /// All elements in lexicographic coefficient order.
    pub fn enumerate(&self) -> impl Iterator<Item = Elt> + '_ {
        (0..self.order()).map(move |k| self.from_index(k))
    }

    pub fn is_zero(&self, x: &Elt) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &Elt, y: &Elt) -> Elt {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect()
    }

    pub fn sub(&self, x: &Elt, y: &Elt) -> Elt {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect()
    }

    pub fn neg(&self, x: &Elt) -> Elt {
        x.iter().map(|&a| (self.p - a) % self.p).collect()
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        let prod = gfp_mul(x, y, self.p);
        let rem = gfp_rem(&prod, &self.modulus, self.p);
        let mut out = rem;
        out.resize(self.n, 0);
        out
    }

    pub fn scalar_mul(&self, c: u64, x: &Elt) -> Elt {
        x.iter().map(|&a| mulmod(a, c % self.p, self.p)).collect()
    }

    pub fn pow(&self, x: &Elt, mut e: u64) -> Elt {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: &Elt) -> Result<Elt, Error> {
        if self.is_zero(x) {
            return Err(Error::Argument("inverse of zero".into()));
        }
        // x^(q-2) = x^-1 in GF(q).
        Ok(self.pow(x, self.order() - 2))
    }

    /// Absolute trace down to GF(p), returned as an integer mod p.
    pub fn trace(&self, x: &Elt) -> u64 {
        let mut acc = self.zero();
        let mut term = x.clone();
        for _ in 0..self.n {
            acc = self.add(&acc, &term);
            term = self.pow(&term, self.p);
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0), "trace lands in GF(p)");
        acc[0]
    }

    /// The first multiplicative generator in enumeration order.
    pub fn generator(&self) -> Elt {
        let q1 = self.order() - 1;
        let primes = factor_u64(q1);
        'outer: for k in 1..self.order() {
            let g = self.from_index(k);
            for &ell in &primes {
                if self.pow(&g, q1 / ell) == self.one() {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every finite field has a generator");
    }

    /// The image of this field's modulus root inside GF(p^(n*m)), chosen as
    /// the first root in enumeration order; defines the embedding used for
    /// base change of curve coefficients.
    pub fn embedding_root(&self, big: &FieldSpec) -> Result<Elt, Error> {
        if big.p != self.p || big.n % self.n != 0 {
            return Err(Error::Argument(format!(
                "GF({}^{}) does not embed in GF({}^{})",
                self.p, self.n, big.p, big.n
            )));
        }
        if self.n == 1 {
            return Ok(big.from_u64(0));
        }
        for z in big.enumerate() {
            // Evaluate the small modulus at z inside the big field.
            let mut acc = big.zero();
            for &c in self.modulus.iter().rev() {
                acc = big.mul(&acc, &z);
                acc = big.add(&acc, &big.from_u64(c));
            }
            if big.is_zero(&acc) {
                return Ok(z);
            }
        }
        Err(Error::Argument("modulus has no root in the big field".into()))
    }

    /// Maps an element along the embedding defined by `root`.
    pub fn embed(&self, x: &Elt, big: &FieldSpec, root: &Elt) -> Elt {
        let mut acc = big.zero();
        for &c in x.iter().rev() {
            acc = big.mul(&acc, root);
            acc = big.add(&acc, &big.from_u64(c));
        }
        acc
    }
}

fn factor_u64(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= x as u128 {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_first_moduli() {
        assert_eq!(FieldSpec::new(2, 2, 0).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2, 0).unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 1, 0).unwrap().modulus, vec![0, 1]);
        assert_eq!(FieldSpec::new(2, 3, 0).unwrap().modulus, vec![1, 1, 0, 1]);
        assert!(FieldSpec::new(4, 2, 0).is_err());
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = FieldSpec::new(2, 2, 0).unwrap();
        let x = f.from_index(2);
        let x1 = f.from_index(3);
        // x * (x + 1) = x^2 + x = 1 with modulus x^2 + x + 1.
        assert_eq!(f.mul(&x, &x1), f.one());
        assert_eq!(f.mul(&x, &x), x1);
        assert_eq!(f.inv(&x).unwrap(), x1);
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn enumeration_and_traces() {
        let f = FieldSpec::new(2, 2, 0).unwrap();
        let elts: Vec<Elt> = f.enumerate().collect();
        assert_eq!(
            elts,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        let traces: Vec<u64> = elts.iter().map(|e| f.trace(e)).collect();
        assert_eq!(traces, vec![0, 0, 1, 1]);
    }

    #[test]
    fn generators_are_first_in_order() {
        let gf4 = FieldSpec::new(2, 2, 0).unwrap();
        assert_eq!(gf4.generator(), vec![0, 1]);
        let gf5 = FieldSpec::new(5, 1, 0).unwrap();
        assert_eq!(gf5.generator(), vec![2]);
        let gf9 = FieldSpec::new(3, 2, 0).unwrap();
        let g = gf9.generator();
        // Order must be exactly 8.
        assert_eq!(gf9.pow(&g, 8), gf9.one());
        assert_ne!(gf9.pow(&g, 4), gf9.one());
        assert_ne!(gf9.pow(&g, 2), gf9.one());
    }

    #[test]
    fn embedding_gf4_into_gf16() {
        let small = FieldSpec::new(2, 2, 0).unwrap();
        let big = FieldSpec::new(2, 4, 0).unwrap();
        let root = small.embedding_root(&big).unwrap();
        // The root satisfies the small modulus inside the big field.
        let sq = big.mul(&root, &root);
        let sum = big.add(&big.add(&sq, &root), &big.one());
        assert!(big.is_zero(&sum));
        // Embedding is a field homomorphism on a spot check.
        let x = small.from_index(2);
        let y = small.from_index(3);
        let lhs = small.embed(&small.mul(&x, &y), &big, &root);
        let rhs = big.mul(&small.embed(&x, &big, &root), &small.embed(&y, &big, &root));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_spec_round_trip() {
        let f = FieldSpec::new(2, 2, 0).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"p":2,"n":2,"modulus":[1,1,1]}"#);
        let back: FieldSpec = serde_json::from_str(&text).unwrap();
        back.validate().unwrap();
        assert_eq!(back, f);
    }
}
