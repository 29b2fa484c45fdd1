//! Certified algebraic independence tests for character systems.
//!
//! Each abelian variety contributes a character: the sum of its Frobenius
//! eigenvalues written as monomials zeta^t T_1^{e_1} ... T_m^{e_m}, where
//! zeta is a root of unity of fixed order M and the T_j are
//! multiplicatively independent base eigenvalues. Characters live in the
//! Laurent polynomial ring over Z[S]/(S^M - 1).
//!
//! Independence is certified by the Jacobi criterion: if the Jacobian of
//! the characters has full rank after specializing S to some zeta_d with
//! d | M and the T_j to a rational point, the characters are
//! algebraically independent, since specialization never raises rank.
//! Dependence is certified either structurally (more characters than
//! variables) or by showing every maximal minor of the symbolic Jacobian
//! vanishes identically in the group algebra.
//!
//! A second, coarser test works on multiplicative eigenvalue lattices:
//! items are given as integer exponent rows in a free basis, and the
//! dimension profile d_k of the lattice spanned by items 1..k must grow
//! strictly for geometric independence.

use crate::cyclotomic::{CycElt, CycField};
use crate::{Error, Int, Rat};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Coefficient ring Z[S]/(S^order - 1); elements are length-`order`
/// integer vectors under cyclic convolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRing {
    pub order: usize,
}

impl GroupRing {
    pub fn zero(&self) -> Vec<Int> {
        vec![Int::zero(); self.order]
    }

    pub fn monomial(&self, t: u64) -> Vec<Int> {
        let mut v = self.zero();
        v[(t % self.order as u64) as usize] = Int::one();
        v
    }

    pub fn is_zero(&self, a: &[Int]) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn neg(&self, a: &[Int]) -> Vec<Int> {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, a: &[Int], s: &Int) -> Vec<Int> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let k = (i + j) % self.order;
                out[k] += x * y;
            }
        }
        out
    }

    /// Evaluation S -> zeta_d in Q(zeta_d); d must divide the order.
    pub fn eval(&self, a: &[Int], field: &CycField) -> Result<CycElt, Error> {
        if self.order as u64 % field.order() != 0 {
            return Err(Error::Argument(format!(
                "{} does not divide the root order {}",
                field.order(),
                self.order
            )));
        }
        let mut acc = field.zero();
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Well defined since zeta_d^order = 1 when d divides order.
            let pow = field.zeta_pow((j as u64 % field.order()) as i64);
            acc = field.add(&acc, &field.scale(&pow, &Rat::from(c.clone())));
        }
        Ok(acc)
    }
}

/// Laurent polynomial in T_1..T_vars over the group ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLaurentPoly {
    vars: usize,
    ring: GroupRing,
    terms: BTreeMap<Vec<i64>, Vec<Int>>,
}

impl GroupLaurentPoly {
    pub fn zero(vars: usize, order: usize) -> Self {
        GroupLaurentPoly {
            vars,
            ring: GroupRing { order },
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: usize, order: usize, root_exponent: u64, exps: Vec<i64>) -> Self {
        let ring = GroupRing { order };
        let mut terms = BTreeMap::new();
        terms.insert(exps, ring.monomial(root_exponent));
        GroupLaurentPoly { vars, ring, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exps: Vec<i64>, coeff: Vec<Int>) {
        if self.ring.is_zero(&coeff) {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &coeff);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.vars, &self.ring), (other.vars, &other.ring));
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupLaurentPoly {
            vars: self.vars,
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.vars, &self.ring), (other.vars, &other.ring));
        let mut out = GroupLaurentPoly::zero(self.vars, self.ring.order);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, self.ring.mul(c1, c2));
            }
        }
        out
    }

    /// Partial derivative with respect to T_(j+1).
    pub fn partial(&self, j: usize) -> Self {
        let mut out = GroupLaurentPoly::zero(self.vars, self.ring.order);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[j] -= 1;
            out.insert(e2, self.ring.scale(c, &Int::from(e[j])));
        }
        out
    }

    /// Evaluates at S = zeta_d and T = point; the point must have nonzero
    /// coordinates since exponents may be negative.
    pub fn specialize(&self, field: &CycField, point: &[Rat]) -> Result<CycElt, Error> {
        if point.len() != self.vars {
            return Err(Error::Argument(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.vars
            )));
        }
        if point.iter().any(|v| v.is_zero()) {
            return Err(Error::Argument(
                "specialization point must avoid the coordinate hyperplanes".into(),
            ));
        }
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut scale = Rat::one();
            for (v, &k) in point.iter().zip(e) {
                let p = num_traits::pow(v.clone(), k.unsigned_abs() as usize);
                scale *= if k < 0 { p.recip() } else { p };
            }
            let value = self.ring.eval(c, field)?;
            acc = field.add(&acc, &field.scale(&value, &scale));
        }
        Ok(acc)
    }
}

/// One Frobenius eigenvalue zeta^root_exponent T^exps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueMonomial {
    pub root_exponent: u64,
    pub exps: Vec<i64>,
}

/// A list of characters, each the eigenvalue sum of one variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSystem {
    pub vars: usize,
    pub root_order: u64,
    pub chars: Vec<Vec<EigenvalueMonomial>>,
}

/// Certified outcome of the independence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    IndependentCertified { divisor: u64, point: Vec<Rat> },
    DependentCertified { certificate: DependenceCertificate },
    Inconclusive { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DependenceCertificate {
    /// More characters than torus variables: any n > m Laurent
    /// polynomials in m variables are algebraically dependent.
    MoreCharsThanVariables { chars: usize, vars: usize },
    /// Every maximal minor of the Jacobian is identically zero in the
    /// group algebra, hence under every specialization of S.
    VanishingJacobian,
}

impl CharSystem {
    pub fn new(
        vars: usize,
        root_order: u64,
        chars: Vec<Vec<EigenvalueMonomial>>,
    ) -> Result<Self, Error> {
        let sys = CharSystem {
            vars,
            root_order,
            chars,
        };
        sys.validate()?;
        Ok(sys)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.vars == 0 {
            return Err(Error::Argument("a character system needs variables".into()));
        }
        if self.root_order == 0 {
            return Err(Error::Argument("root order must be >= 1".into()));
        }
        if self.chars.is_empty() || self.chars.iter().any(|c| c.is_empty()) {
            return Err(Error::Argument(
                "each character needs at least one eigenvalue monomial".into(),
            ));
        }
        for ch in &self.chars {
            for m in ch {
                if m.exps.len() != self.vars {
                    return Err(Error::Argument(format!(
                        "monomial exponent vector {:?} does not have {} entries",
                        m.exps, self.vars
                    )));
                }
            }
        }
        Ok(())
    }

    /// The i-th character as a Laurent polynomial.
    pub fn char_poly(&self, i: usize) -> GroupLaurentPoly {
        let mut f = GroupLaurentPoly::zero(self.vars, self.root_order as usize);
        for m in &self.chars[i] {
            f = f.add(&GroupLaurentPoly::monomial(
                self.vars,
                self.root_order as usize,
                m.root_exponent,
                m.exps.clone(),
            ));
        }
        f
    }

    /// Jacobian matrix (d f_i / d T_j), n rows by vars columns.
    pub fn jacobian(&self) -> Vec<Vec<GroupLaurentPoly>> {
        (0..self.chars.len())
            .map(|i| {
                let f = self.char_poly(i);
                (0..self.vars).map(|j| f.partial(j)).collect()
            })
            .collect()
    }

    /// Exact Jacobian rank after S -> zeta_d, T -> point.
    pub fn jacobian_rank_at(&self, d: u64, point: &[Rat]) -> Result<usize, Error> {
        if d == 0 || self.root_order % d != 0 {
            return Err(Error::Argument(format!(
                "{d} does not divide the root order {}",
                self.root_order
            )));
        }
        let field = CycField::new(d)?;
        let jac = self.jacobian();
        let mut mat = Vec::with_capacity(jac.len());
        for row in &jac {
            let mut out = Vec::with_capacity(row.len());
            for entry in row {
                out.push(entry.specialize(&field, point)?);
            }
            mat.push(out);
        }
        Ok(cyc_rank(&field, mat))
    }

    /// Runs the certification loop: random rational points, all divisors
    /// of the root order, then the symbolic fallback for small systems.
    pub fn independence_witness(&self, trials: u32, seed: u64) -> Result<Verdict, Error> {
        self.validate()?;
        let n = self.chars.len();
        let m = self.vars;
        if n > m {
            return Ok(Verdict::DependentCertified {
                certificate: DependenceCertificate::MoreCharsThanVariables { chars: n, vars: m },
            });
        }
        let divisors: Vec<u64> = (1..=self.root_order)
            .filter(|d| self.root_order % d == 0)
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let point: Vec<Rat> = (0..m)
                .map(|_| {
                    let mut v: i64 = 0;
                    while v == 0 {
                        v = rng.gen_range(-1000..=1000);
                    }
                    Rat::from(Int::from(v))
                })
                .collect();
            for &d in &divisors {
                if self.jacobian_rank_at(d, &point)? == n {
                    return Ok(Verdict::IndependentCertified { divisor: d, point });
                }
            }
        }
        if n <= 3 {
            let jac = self.jacobian();
            let mut all_vanish = true;
            for cols in column_subsets(m, n) {
                let minor: Vec<Vec<GroupLaurentPoly>> = jac
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                if !symbolic_det(&minor).is_zero() {
                    all_vanish = false;
                    break;
                }
            }
            if all_vanish {
                return Ok(Verdict::DependentCertified {
                    certificate: DependenceCertificate::VanishingJacobian,
                });
            }
            return Ok(Verdict::Inconclusive {
                detail: format!(
                    "a maximal Jacobian minor is nonzero but no certifying point \
                     appeared in {trials} trials"
                ),
            });
        }
        Ok(Verdict::Inconclusive {
            detail: format!(
                "no certifying point in {trials} trials; systems of more than 3 \
                 characters have no symbolic fallback"
            ),
        })
    }
}

/// All size-k subsets of 0..m in lexicographic order.
fn column_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            cur.push(c);
            rec(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
fn symbolic_det(mat: &[Vec<GroupLaurentPoly>]) -> GroupLaurentPoly {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc: Option<GroupLaurentPoly> = None;
    for j in 0..n {
        let sub: Vec<Vec<GroupLaurentPoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = mat[0][j].mul(&symbolic_det(&sub));
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("n >= 1")
}

/// Row-reduction rank over Q(zeta_d).
fn cyc_rank(field: &CycField, mut mat: Vec<Vec<CycElt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !field.is_zero(&mat[r][col])) else {
            continue;
        };
        mat.swap(row, p);
        let inv = field.inv(&mat[row][col]).expect("pivot is nonzero");
        for r in (row + 1)..rows {
            if field.is_zero(&mat[r][col]) {
                continue;
            }
            let factor = field.mul(&mat[r][col], &inv);
            for c in col..cols {
                let sub = field.mul(&factor, &mat[row][c]);
                mat[r][c] = field.sub(&mat[r][c], &sub);
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Row-reduction rank over Q.
pub fn rational_rank(mut mat: Vec<Vec<Rat>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let pivot = mat[row][col].clone();
        for r in (row + 1)..rows {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone() / pivot.clone();
            for c in col..cols {
                let sub = factor.clone() * mat[row][c].clone();
                mat[r][c] -= sub;
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Multiplicative eigenvalue lattice: each item contributes integer
/// exponent rows in a free basis of the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSystem {
    pub rank: usize,
    pub reps: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeVerdict {
    GeometricallyIndependent,
    /// First index (1-based) whose rows add no new dimension.
    DependentAt { index: usize },
}

impl LatticeSystem {
    pub fn validate(&self) -> Result<(), Error> {
        if self.rank == 0 {
            return Err(Error::Argument("ambient lattice rank must be >= 1".into()));
        }
        for (i, rep) in self.reps.iter().enumerate() {
            if rep.is_empty() {
                return Err(Error::Argument(format!("item {} has no rows", i + 1)));
            }
            for row in rep {
                if row.len() != self.rank {
                    return Err(Error::Argument(format!(
                        "item {} has a row of length {}, expected {}",
                        i + 1,
                        row.len(),
                        self.rank
                    )));
                }
            }
        }
        Ok(())
    }

    /// Dimension profile d_0 = 0, d_k = rank of the rows of items 1..k.
    pub fn dims(&self) -> Result<Vec<usize>, Error> {
        self.validate()?;
        let mut out = vec![0usize];
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for rep in &self.reps {
            for row in rep {
                rows.push(row.iter().map(|&x| Rat::from(Int::from(x))).collect());
            }
            out.push(rational_rank(rows.clone()));
        }
        Ok(out)
    }

    /// Strict growth of the dimension profile certifies independence.
    pub fn verdict(&self) -> Result<(LatticeVerdict, Vec<usize>), Error> {
        let dims = self.dims()?;
        for k in 1..dims.len() {
            if dims[k] <= dims[k - 1] {
                return Ok((LatticeVerdict::DependentAt { index: k }, dims));
            }
        }
        Ok((LatticeVerdict::GeometricallyIndependent, dims))
    }
}

/// Applies a unimodular change of torus coordinates T_j -> prod_k
/// T_k^(u[k][j]) to every character; independence verdicts are invariant
/// under such reparametrizations.
pub fn reparametrize(system: &CharSystem, u: &[Vec<i64>]) -> Result<CharSystem, Error> {
    system.validate()?;
    let m = system.vars;
    if u.len() != m || u.iter().any(|row| row.len() != m) {
        return Err(Error::Argument(format!("matrix must be {m} by {m}")));
    }
    let det = int_det(u);
    if det != Rat::one() && det != -Rat::one() {
        return Err(Error::Argument(format!(
            "matrix with determinant {det} is not unimodular"
        )));
    }
    let chars = system
        .chars
        .iter()
        .map(|ch| {
            ch.iter()
                .map(|mono| {
                    let exps: Vec<i64> = (0..m)
                        .map(|k| (0..m).map(|j| u[k][j] * mono.exps[j]).sum())
                        .collect();
                    EigenvalueMonomial {
                        root_exponent: mono.root_exponent,
                        exps,
                    }
                })
                .collect()
        })
        .collect();
    CharSystem::new(m, system.root_order, chars)
}

fn int_det(u: &[Vec<i64>]) -> Rat {
    let n = u.len();
    let mut mat: Vec<Vec<Rat>> = u
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from(Int::from(x))).collect())
        .collect();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            mat.swap(col, p);
            det = -det;
        }
        let pivot = mat[col][col].clone();
        det *= pivot.clone();
        for r in (col + 1)..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone() / pivot.clone();
            for c in col..n {
                let sub = factor.clone() * mat[col][c].clone();
                mat[r][c] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn mono(t: u64, exps: Vec<i64>) -> EigenvalueMonomial {
        EigenvalueMonomial {
            root_exponent: t,
            exps,
        }
    }

    /// Two abelian surfaces whose eigenvalues differ by a sign twist on
    /// half the monomials.
    fn twisted_surfaces() -> CharSystem {
        CharSystem::new(
            3,
            2,
            vec![
                vec![
                    mono(0, vec![1, 0, 0]),
                    mono(0, vec![0, 1, 0]),
                    mono(0, vec![0, 0, 1]),
                    mono(0, vec![1, 1, -1]),
                ],
                vec![
                    mono(0, vec![1, 0, 0]),
                    mono(0, vec![0, 1, 0]),
                    mono(1, vec![0, 0, 1]),
                    mono(1, vec![1, 1, -1]),
                ],
            ],
        )
        .unwrap()
    }

    #[test]
    fn twisted_surfaces_need_the_sign_specialization() {
        let sys = twisted_surfaces();
        let point = vec![rat(-1, 1), rat(1, 1), rat(1, 1)];
        assert_eq!(sys.jacobian_rank_at(1, &point).unwrap(), 1);
        assert_eq!(sys.jacobian_rank_at(2, &point).unwrap(), 2);
        match sys.independence_witness(100, 0).unwrap() {
            Verdict::IndependentCertified { divisor, point } => {
                assert_eq!(divisor, 2);
                assert_eq!(point.len(), 3);
            }
            v => panic!("expected a certificate, got {v:?}"),
        }
    }

    #[test]
    fn more_characters_than_variables_is_structural() {
        let sys = CharSystem::new(
            1,
            1,
            vec![vec![mono(0, vec![1])], vec![mono(0, vec![2])]],
        )
        .unwrap();
        match sys.independence_witness(5, 0).unwrap() {
            Verdict::DependentCertified {
                certificate: DependenceCertificate::MoreCharsThanVariables { chars: 2, vars: 1 },
            } => {}
            v => panic!("expected structural dependence, got {v:?}"),
        }
    }

    #[test]
    fn proportional_characters_have_vanishing_jacobian() {
        let f1 = vec![mono(0, vec![1, 0]), mono(0, vec![0, 1])];
        let f2 = vec![
            mono(0, vec![1, 0]),
            mono(0, vec![1, 0]),
            mono(0, vec![0, 1]),
            mono(0, vec![0, 1]),
        ];
        let sys = CharSystem::new(2, 1, vec![f1, f2]).unwrap();
        match sys.independence_witness(3, 0).unwrap() {
            Verdict::DependentCertified {
                certificate: DependenceCertificate::VanishingJacobian,
            } => {}
            v => panic!("expected a vanishing Jacobian, got {v:?}"),
        }
    }

    #[test]
    fn large_dependent_systems_stay_inconclusive() {
        let e = |j: usize| {
            let mut v = vec![0i64; 4];
            v[j] = 1;
            v
        };
        let sys = CharSystem::new(
            4,
            1,
            vec![
                vec![mono(0, e(0))],
                vec![mono(0, e(1))],
                vec![mono(0, e(2))],
                vec![mono(0, e(0))],
            ],
        )
        .unwrap();
        match sys.independence_witness(3, 0).unwrap() {
            Verdict::Inconclusive { .. } => {}
            v => panic!("expected inconclusive, got {v:?}"),
        }
    }

    #[test]
    fn single_twisted_character_is_independent() {
        // (1 + S) T is nonconstant even though S = -1 kills it.
        let sys = CharSystem::new(1, 2, vec![vec![mono(0, vec![1]), mono(1, vec![1])]]).unwrap();
        match sys.independence_witness(10, 0).unwrap() {
            Verdict::IndependentCertified { divisor, .. } => assert_eq!(divisor, 1),
            v => panic!("expected a certificate, got {v:?}"),
        }
    }

    #[test]
    fn lattice_profile_of_disjoint_curves() {
        // Basis (q, pi_1, pi_2, pi_3); curve i contributes pi_i and
        // q / pi_i.
        let rep = |i: usize| {
            let mut a = vec![0i64; 4];
            a[i] = 1;
            let mut b = vec![0i64; 4];
            b[0] = 1;
            b[i] = -1;
            vec![a, b]
        };
        let sys = LatticeSystem {
            rank: 4,
            reps: vec![rep(1), rep(2), rep(3)],
        };
        let (verdict, dims) = sys.verdict().unwrap();
        assert_eq!(dims, vec![0, 2, 3, 4]);
        assert_eq!(verdict, LatticeVerdict::GeometricallyIndependent);
        let dup = LatticeSystem {
            rank: 4,
            reps: vec![rep(1), rep(2), rep(1)],
        };
        let (verdict, dims) = dup.verdict().unwrap();
        assert_eq!(dims, vec![0, 2, 3, 3]);
        assert_eq!(verdict, LatticeVerdict::DependentAt { index: 3 });
    }

    #[test]
    fn unimodular_reparametrization_preserves_verdicts() {
        let sys = twisted_surfaces();
        let u = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let moved = reparametrize(&sys, &u).unwrap();
        match moved.independence_witness(100, 0).unwrap() {
            Verdict::IndependentCertified { .. } => {}
            v => panic!("expected a certificate, got {v:?}"),
        }
        let bad = vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert!(reparametrize(&sys, &bad).is_err());
    }

    #[test]
    fn group_ring_evaluation_collapses_roots() {
        let ring = GroupRing { order: 4 };
        let a = ring.add(&ring.monomial(1), &ring.monomial(3));
        let f2 = CycField::new(2).unwrap();
        // S -> zeta_2 sends S and S^3 both to -1.
        assert_eq!(ring.eval(&a, &f2).unwrap(), vec![rat(-2, 1)]);
        let f4 = CycField::new(4).unwrap();
        // S -> i gives i + i^3 = 0.
        assert!(f4.is_zero(&ring.eval(&a, &f4).unwrap()));
    }
}
