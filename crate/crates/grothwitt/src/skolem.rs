//! Zero sets of ghost sequences, periodic descriptions, and the
//! two-curve dependence classifier.
//!
//! The ghost components of a measure form a sequence indexed by the
//! extension degree nu. Vanishing loci of polynomial relations among
//! such sequences are finite unions of arithmetic progressions plus a
//! finite set; `GoodSet` is such a description fitted against an
//! explicit horizon, and `localize_irreducible_relation` finds, for a
//! product relation that holds identically, a single factor that
//! vanishes on a full progression of multiples.
//!
//! `classify_two_curves` decides how the measures of two curves over the
//! same base field relate: their Jacobians become isogenous over a common
//! extension, both curves become special over a common extension, or
//! neither, which certifies algebraic independence of the two measures.

use crate::poly::{cyclotomic_orders, qis_zero, qmul, qscale, qtrim};
use crate::rational_witt::{MotivicMeasurePoly, OnePoly};
use crate::zeta::ZetaData;
use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A periodic-plus-finite description of a zero set inside [1, horizon]:
/// the union of the residue classes in `residues` modulo `modulus` and
/// the finite exceptional set `finite`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSet {
    pub finite: Vec<u64>,
    pub modulus: u64,
    pub residues: Vec<u64>,
    pub horizon: u64,
}

impl GoodSet {
    /// Membership under the inferred description, valid beyond the
    /// fitting horizon.
    pub fn contains(&self, n: u64) -> bool {
        self.finite.binary_search(&n).is_ok() || self.residues.binary_search(&(n % self.modulus)).is_ok()
    }
}

impl fmt::Display for GoodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "finite {:?} union residues {:?} mod {} (horizon {})",
            self.finite, self.residues, self.modulus, self.horizon
        )
    }
}

/// Fits the smallest-modulus admissible description of `zeros`, a sorted
/// subset of [1, horizon]. For each modulus M <= horizon/2 the residues
/// are the classes lying entirely inside the zero set; the fit is
/// admissible when the leftover finite part sits inside [1, horizon/2].
pub fn fit_good_set(zeros: &[u64], horizon: u64) -> Result<GoodSet, Error> {
    if horizon < 2 {
        return Err(Error::Argument("horizon must be at least 2".into()));
    }
    if zeros.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument("zero set must be strictly increasing".into()));
    }
    if zeros.iter().any(|&z| z < 1 || z > horizon) {
        return Err(Error::Argument(format!(
            "zero set must lie in [1, {horizon}]"
        )));
    }
    let half = horizon / 2;
    let inside = |n: u64| zeros.binary_search(&n).is_ok();
    for modulus in 1..=half {
        let mut residues = Vec::new();
        for r in 0..modulus {
            let mut all = true;
            let mut n = if r == 0 { modulus } else { r };
            while n <= horizon {
                if !inside(n) {
                    all = false;
                    break;
                }
                n += modulus;
            }
            if all {
                residues.push(r);
            }
        }
        let finite: Vec<u64> = zeros
            .iter()
            .copied()
            .filter(|&z| residues.binary_search(&(z % modulus)).is_err())
            .collect();
        if finite.iter().all(|&z| z <= half) {
            return Ok(GoodSet {
                finite,
                modulus,
                residues,
                horizon,
            });
        }
    }
    Err(Error::NoPeriodicFit {
        zeros: zeros.to_vec(),
    })
}

/// Indices nu in [1, horizon] where the measure's ghost polynomial
/// vanishes identically.
pub fn ghost_zero_set(measure: &MotivicMeasurePoly, horizon: u64) -> Vec<u64> {
    (1..=horizon)
        .filter(|&nu| qis_zero(&measure.ghost(nu as usize)))
        .collect()
}

/// Sparse multivariate integer polynomial in T_1..T_vars, used to state
/// relations among ghost sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPoly {
    vars: usize,
    terms: Vec<(Vec<u32>, Int)>,
}

impl RelationPoly {
    pub fn new(vars: usize, terms: Vec<(Vec<u32>, Int)>) -> Result<Self, Error> {
        if vars == 0 {
            return Err(Error::Argument("relation needs at least one variable".into()));
        }
        let mut combined: Vec<(Vec<u32>, Int)> = Vec::new();
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::Argument(format!(
                    "exponent vector {e:?} does not have {vars} entries"
                )));
            }
            match combined.iter_mut().find(|(f, _)| *f == e) {
                Some((_, acc)) => *acc += c,
                None => combined.push((e, c)),
            }
        }
        combined.retain(|(_, c)| !c.is_zero());
        combined.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(RelationPoly {
            vars,
            terms: combined,
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at polynomial arguments in Q[T].
    pub fn eval(&self, args: &[Vec<Rat>]) -> Result<Vec<Rat>, Error> {
        if args.len() != self.vars {
            return Err(Error::Argument(format!(
                "expected {} arguments, got {}",
                self.vars,
                args.len()
            )));
        }
        let mut acc: Vec<Rat> = Vec::new();
        for (exps, coeff) in &self.terms {
            let mut term = vec![Rat::one()];
            for (arg, &e) in args.iter().zip(exps) {
                for _ in 0..e {
                    term = qmul(&term, arg);
                }
            }
            let term = qscale(&term, &Rat::from(coeff.clone()));
            acc = crate::poly::qadd(&acc, &term);
        }
        Ok(qtrim(acc))
    }

    /// Renders the polynomial with variables T1, T2, ... in descending
    /// total degree.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut ordered: Vec<&(Vec<u32>, Int)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(&a.0))
        });
        let mut out = String::new();
        for (i, (exps, coeff)) in ordered.into_iter().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("T{}", j + 1)
                    } else {
                        format!("T{}^{e}", j + 1)
                    }
                })
                .collect();
            let mag = coeff.magnitude();
            let lead = if mono.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                mono.join("*")
            } else {
                format!("{mag}*{}", mono.join("*"))
            };
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&lead);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct RelationTermJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    vars: usize,
    terms: Vec<RelationTermJson>,
}

impl Serialize for RelationPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationJson {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| RelationTermJson {
                    exps: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RelationPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RelationJson::deserialize(d)?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.exps, t.coeff.parse().map_err(D::Error::custom)?)))
            .collect::<Result<Vec<_>, D::Error>>()?;
        RelationPoly::new(j.vars, terms).map_err(D::Error::custom)
    }
}

/// Result of localizing a product relation: the least modulus M and a
/// factor index such that the factor vanishes at every multiple of M in
/// [1, horizon], plus fitted descriptions of each factor's zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostLocalization {
    pub modulus: u64,
    pub factor: usize,
    pub zero_sets: Vec<Vec<u64>>,
    pub fitted: Vec<Option<GoodSet>>,
}

/// Verifies that prod_i H_i(ghost_nu(f_1)..ghost_nu(f_n)) = 0 for every
/// nu <= horizon and finds the least modulus M with a factor vanishing
/// on all multiples of M.
pub fn localize_irreducible_relation(
    measures: &[MotivicMeasurePoly],
    factors: &[RelationPoly],
    horizon: u64,
) -> Result<GhostLocalization, Error> {
    if measures.is_empty() || factors.is_empty() {
        return Err(Error::Argument(
            "localization needs measures and relation factors".into(),
        ));
    }
    if horizon < 2 {
        return Err(Error::Argument("horizon must be at least 2".into()));
    }
    for f in factors {
        if f.vars() != measures.len() {
            return Err(Error::Argument(format!(
                "factor in {} variables against {} measures",
                f.vars(),
                measures.len()
            )));
        }
    }
    let mut zero_sets: Vec<Vec<u64>> = vec![Vec::new(); factors.len()];
    for nu in 1..=horizon {
        let ghosts: Vec<Vec<Rat>> = measures.iter().map(|m| m.ghost(nu as usize)).collect();
        let mut product = vec![Rat::one()];
        for (i, f) in factors.iter().enumerate() {
            let v = f.eval(&ghosts)?;
            if qis_zero(&v) {
                zero_sets[i].push(nu);
            }
            product = qmul(&product, &v);
        }
        if !qis_zero(&product) {
            return Err(Error::Validation {
                check: "relation".into(),
                detail: format!("product of factors is nonzero at ghost index {nu}"),
            });
        }
    }
    for modulus in 1..=horizon / 2 {
        for (i, zs) in zero_sets.iter().enumerate() {
            let mut all = true;
            let mut n = modulus;
            while n <= horizon {
                if zs.binary_search(&n).is_err() {
                    all = false;
                    break;
                }
                n += modulus;
            }
            if all {
                let fitted = zero_sets
                    .iter()
                    .map(|zs| fit_good_set(zs, horizon).ok())
                    .collect();
                return Ok(GhostLocalization {
                    modulus,
                    factor: i,
                    zero_sets,
                    fitted,
                });
            }
        }
    }
    Err(Error::Exhausted(format!(
        "no factor vanishes on all multiples of any modulus <= {}",
        horizon / 2
    )))
}

/// How the measures of two curves over a common base field relate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoCurvesClass {
    /// F_m applied to both numerators agrees: the Jacobians are
    /// isogenous over the degree-m extension.
    IsogenousJacobians { m: u64 },
    /// Over the degree-m extension both numerators become
    /// (1 - q^(m/2) t)^2g.
    BecomesSpecialBoth { m: u64 },
    /// Neither mechanism applies: the two measures are algebraically
    /// independent.
    IndependentCertified,
}

/// Trace-sequence diagnostics attached when the degree-1 traces differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceDiagnostics {
    /// The canonical quadratic candidate relation
    /// q (T2 - T1)^2 - (a1 - b1)(a1 T2 - b1 T1) + (a1 - b1)^2.
    pub relation: RelationPoly,
    /// Whether it vanishes on all ghost indices up to the horizon.
    pub vanishes: bool,
    /// First failing index and which equation failed.
    pub counterexample: Option<(u64, String)>,
    /// Per curve: the trace meets the bound a1^2 = 4 g^2 q exactly.
    pub flat: [bool; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCurvesOutcome {
    pub class: TwoCurvesClass,
    pub diagnostics: Option<TraceDiagnostics>,
}

/// Orders of the roots of unity beta_i = alpha_i^2 / q when every
/// inverse root alpha_i of the numerator has that property; None when
/// the curve never becomes special.
pub fn special_orders(z: &ZetaData) -> Option<Vec<u64>> {
    let g = z.genus();
    if g == 0 {
        return Some(Vec::new());
    }
    let p = z.numerator().power_sums(4 * g);
    let q = Rat::from(z.q().clone());
    let s: Vec<Rat> = (1..=2 * g)
        .map(|nu| p[2 * nu - 1].clone() / num_traits::pow(q.clone(), nu))
        .collect();
    let beta_poly = OnePoly::from_power_sums(&s);
    if beta_poly.degree() > 2 * g {
        return None;
    }
    // Monic polynomial with the beta_i as roots: reverse the full
    // coefficient list to x^2g + c_1 x^(2g-1) + ... + c_2g.
    let mut full = beta_poly.full_coeffs();
    full.resize(2 * g + 1, Rat::zero());
    let mut monic: Vec<Int> = Vec::with_capacity(2 * g + 1);
    for c in full.iter().rev() {
        if !c.is_integer() {
            return None;
        }
        monic.push(c.to_integer());
    }
    cyclotomic_orders(&monic)
}

/// Whether the curve is special over the degree-m extension: q^m is a
/// perfect square s^2 and F_m of the numerator equals (1 - s t)^2g.
fn special_at(z: &ZetaData, m: u64) -> Result<bool, Error> {
    let qm = num_traits::pow(z.q().clone(), m as usize);
    let s = qm.sqrt();
    if &s * &s != qm {
        return Ok(false);
    }
    if z.genus() == 0 {
        return Ok(true);
    }
    let lhs = z.numerator().frobenius(m as usize)?;
    let line = OnePoly::linear(&Rat::from(s));
    let mut rhs = OnePoly::one();
    for _ in 0..2 * z.genus() {
        rhs = rhs.mul(&line);
    }
    Ok(lhs == rhs)
}

/// Classifies the relation between two curves' measures over a common
/// field size q. The isogeny scan runs m = 1..m_max; the special scan is
/// exact and bounded by twice the lcm of the root-of-unity orders.
pub fn classify_two_curves(
    z1: &ZetaData,
    z2: &ZetaData,
    m_max: u64,
    horizon: u64,
) -> Result<TwoCurvesOutcome, Error> {
    if z1.q() != z2.q() {
        return Err(Error::Argument(format!(
            "curves live over different field sizes {} and {}",
            z1.q(),
            z2.q()
        )));
    }
    let diagnostics = trace_diagnostics(z1, z2, horizon);
    if z1.genus() == z2.genus() {
        for m in 1..=m_max {
            if z1.numerator().frobenius(m as usize)? == z2.numerator().frobenius(m as usize)? {
                return Ok(TwoCurvesOutcome {
                    class: TwoCurvesClass::IsogenousJacobians { m },
                    diagnostics,
                });
            }
        }
    }
    if let (Some(o1), Some(o2)) = (special_orders(z1), special_orders(z2)) {
        let mut bound = 1u64;
        for d in o1.iter().chain(o2.iter()) {
            bound = bound.lcm(d);
        }
        bound *= 2;
        for m in 1..=bound {
            if special_at(z1, m)? && special_at(z2, m)? {
                return Ok(TwoCurvesOutcome {
                    class: TwoCurvesClass::BecomesSpecialBoth { m },
                    diagnostics,
                });
            }
        }
        // Orders certify that 2 lcm is a common special degree.
        unreachable!("scan bound covers a guaranteed special degree");
    }
    Ok(TwoCurvesOutcome {
        class: TwoCurvesClass::IndependentCertified,
        diagnostics,
    })
}

/// Builds the canonical quadratic relation and tests it on the trace
/// sequences a_nu, b_nu: the ghost evaluation vanishes at nu if and only
/// if q (b_nu - a_nu)^2 = q^nu (a1 - b1)^2 and b1 a_nu = a1 b_nu.
fn trace_diagnostics(z1: &ZetaData, z2: &ZetaData, horizon: u64) -> Option<TraceDiagnostics> {
    let a = z1.trace_sums(horizon.max(1) as usize);
    let b = z2.trace_sums(horizon.max(1) as usize);
    let a1 = a[0].clone();
    let b1 = b[0].clone();
    if a1 == b1 {
        return None;
    }
    let q = z1.q().clone();
    let d = &a1 - &b1;
    let relation = RelationPoly::new(
        2,
        vec![
            (vec![2, 0], q.clone()),
            (vec![1, 1], Int::from(-2) * &q),
            (vec![0, 2], q.clone()),
            (vec![1, 0], &d * &b1),
            (vec![0, 1], -(&d * &a1)),
            (vec![0, 0], &d * &d),
        ],
    )
    .expect("fixed shape");
    let mut counterexample = None;
    for nu in 1..=horizon as usize {
        let qnu = num_traits::pow(q.clone(), nu);
        let diff = &b[nu - 1] - &a[nu - 1];
        if &q * &diff * &diff != &qnu * &d * &d {
            counterexample = Some((
                nu as u64,
                format!(
                    "q (b_{nu} - a_{nu})^2 = {} but q^{nu} (a_1 - b_1)^2 = {}",
                    &q * &diff * &diff,
                    &qnu * &d * &d
                ),
            ));
            break;
        }
        if &b1 * &a[nu - 1] != &a1 * &b[nu - 1] {
            counterexample = Some((
                nu as u64,
                format!(
                    "b_1 a_{nu} = {} but a_1 b_{nu} = {}",
                    &b1 * &a[nu - 1],
                    &a1 * &b[nu - 1]
                ),
            ));
            break;
        }
    }
    let flat_bound = |z: &ZetaData, t: &Int| -> bool {
        let g = Int::from(z.genus() as u64);
        t * t == Int::from(4) * &g * &g * z.q()
    };
    Some(TraceDiagnostics {
        relation,
        vanishes: counterexample.is_none(),
        counterexample,
        flat: [flat_bound(z1, &a1), flat_bound(z2, &b1)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k0::measure_of_etale;
    use crate::rat;

    fn zeta_p1(q: u64) -> ZetaData {
        ZetaData::from_numerator(Int::from(q), 0, OnePoly::one()).unwrap()
    }

    fn zeta_e(q: u64, tail: &[i64]) -> ZetaData {
        let tail: Vec<Rat> = tail.iter().map(|&c| rat(c, 1)).collect();
        ZetaData::from_numerator(Int::from(q), 1, OnePoly::new(tail)).unwrap()
    }

    #[test]
    fn quadratic_extension_class_fits_odd_progression() {
        let mu = measure_of_etale(2).unwrap();
        let zeros = ghost_zero_set(&mu, 50);
        let gs = fit_good_set(&zeros, 50).unwrap();
        assert_eq!(gs.modulus, 2);
        assert_eq!(gs.residues, vec![1]);
        assert!(gs.finite.is_empty());
        assert!(gs.contains(101) && !gs.contains(100));
    }

    #[test]
    fn minimal_modulus_and_maximal_residues() {
        let mut zeros: Vec<u64> = (1..=20).filter(|n| n % 2 == 0).collect();
        zeros.push(3);
        zeros.sort();
        let gs = fit_good_set(&zeros, 20).unwrap();
        assert_eq!(gs.modulus, 2);
        assert_eq!(gs.residues, vec![0]);
        assert_eq!(gs.finite, vec![3]);
    }

    #[test]
    fn aperiodic_zeros_have_no_fit() {
        // A lone zero beyond horizon/2 can be neither finite nor covered
        // by a full residue class.
        let zeros = vec![32];
        match fit_good_set(&zeros, 50).unwrap_err() {
            Error::NoPeriodicFit { zeros: z } => assert_eq!(z, zeros),
            e => panic!("expected NoPeriodicFit, got {e}"),
        }
        // Powers of two do admit a description at this horizon: the class
        // 8 mod 24 covers {8, 32} and the rest is small enough to be
        // finite.
        let gs = fit_good_set(&[1, 2, 4, 8, 16, 32], 50).unwrap();
        assert_eq!((gs.modulus, gs.residues.clone()), (24, vec![8]));
        assert_eq!(gs.finite, vec![1, 2, 4, 16]);
    }

    #[test]
    fn empty_zero_set_fits_trivially() {
        let gs = fit_good_set(&[], 10).unwrap();
        assert_eq!(gs.modulus, 1);
        assert!(gs.residues.is_empty() && gs.finite.is_empty());
    }

    #[test]
    fn localize_splits_the_ghost_dichotomy() {
        let mu = measure_of_etale(2).unwrap();
        let t = RelationPoly::new(1, vec![(vec![1], Int::one())]).unwrap();
        let t_minus_2 =
            RelationPoly::new(1, vec![(vec![1], Int::one()), (vec![0], Int::from(-2))]).unwrap();
        let loc =
            localize_irreducible_relation(&[mu.clone()], &[t.clone(), t_minus_2], 50).unwrap();
        assert_eq!(loc.modulus, 2);
        assert_eq!(loc.factor, 1);
        let f0 = loc.fitted[0].as_ref().unwrap();
        assert_eq!((f0.modulus, f0.residues.clone()), (2, vec![1]));
        let f1 = loc.fitted[1].as_ref().unwrap();
        assert_eq!((f1.modulus, f1.residues.clone()), (2, vec![0]));
        // A product that fails to vanish is rejected.
        let t_minus_1 =
            RelationPoly::new(1, vec![(vec![1], Int::one()), (vec![0], Int::from(-1))]).unwrap();
        let err = localize_irreducible_relation(&[mu], &[t, t_minus_1], 50).unwrap_err();
        assert!(matches!(err, Error::Validation { ref check, .. } if check == "relation"));
    }

    #[test]
    fn supersingular_pair_becomes_special_together() {
        let p1 = zeta_p1(4);
        let e = zeta_e(4, &[4, 4]);
        let out = classify_two_curves(&p1, &e, 120, 50).unwrap();
        assert_eq!(out.class, TwoCurvesClass::BecomesSpecialBoth { m: 2 });
        let d = out.diagnostics.unwrap();
        assert!(d.vanishes);
        assert_eq!(d.flat, [true, true]);
        assert_eq!(d.relation.render(), "4*T1^2 - 8*T1*T2 + 4*T2^2 - 16*T1 + 16");
    }

    #[test]
    fn ordinary_curve_against_the_line_is_independent() {
        let p1 = zeta_p1(2);
        let e = zeta_e(2, &[-1, 2]);
        let out = classify_two_curves(&p1, &e, 120, 50).unwrap();
        assert_eq!(out.class, TwoCurvesClass::IndependentCertified);
        let d = out.diagnostics.unwrap();
        assert!(!d.vanishes);
        let (nu, _) = d.counterexample.unwrap();
        assert_eq!(nu, 2);
        assert_eq!(d.flat, [true, false]);
    }

    #[test]
    fn twists_are_isogenous_after_a_quadratic_extension() {
        let e = zeta_e(4, &[4, 4]);
        let twist = zeta_e(4, &[-4, 4]);
        let out = classify_two_curves(&e, &twist, 120, 50).unwrap();
        assert_eq!(out.class, TwoCurvesClass::IsogenousJacobians { m: 2 });
        // The canonical quadratic relation is not the isogeny relation.
        assert!(!out.diagnostics.unwrap().vanishes);
        let same = classify_two_curves(&e, &e, 120, 50).unwrap();
        assert_eq!(same.class, TwoCurvesClass::IsogenousJacobians { m: 1 });
        assert!(same.diagnostics.is_none());
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = zeta_p1(2);
        let b = zeta_p1(4);
        assert!(matches!(
            classify_two_curves(&a, &b, 10, 10),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn relation_poly_eval_and_json() {
        let r = RelationPoly::new(
            2,
            vec![
                (vec![2, 0], Int::from(4)),
                (vec![1, 1], Int::from(-8)),
                (vec![0, 2], Int::from(4)),
                (vec![1, 0], Int::from(-16)),
                (vec![0, 0], Int::from(16)),
            ],
        )
        .unwrap();
        // At T1 = T2 = 1 + t: 4(0)^2 - 16(1 + t) + 16 = -16 t.
        let arg = vec![rat(1, 1), rat(1, 1)];
        let v = r.eval(&[arg.clone(), arg]).unwrap();
        assert_eq!(v, vec![rat(0, 1), rat(-16, 1)]);
        let text = serde_json::to_string(&r).unwrap();
        let back: RelationPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
