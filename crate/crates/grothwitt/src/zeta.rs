//! Zeta functions of curves over finite fields.
//!
//! A curve is either the projective line or a homogeneous plane model
//! F(X, Y, Z) = 0 over a pinned GF(p^n). Point counts over extension
//! fields come from chart-by-chart enumeration. The zeta function
//! Z(t) = exp(sum N_nu t^nu / nu) of a smooth projective genus-g curve is
//! P(t) / ((1 - t)(1 - q t)) with P of degree 2g, and `ZetaData` carries
//! the validated numerator: integer coefficients, functional equation
//! c_{2g-i} = q^{g-i} c_i, and all inverse roots of absolute value
//! sqrt(q). The motivic measure of the curve, its base change, and
//! restriction of scalars are all read off the numerator.

use crate::field::{Elt, FieldSpec};
use crate::poly::{inverse_roots, rat_to_f64};
use crate::rational_witt::{MotivicMeasurePoly, OnePoly, WittRational};
use crate::{Error, Int, Rat};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One monomial coeff * X^e0 Y^e1 Z^e2 of a plane model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Elt,
    pub exps: [u32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    /// The projective line, counted as q + 1 without enumeration.
    Line,
    /// A homogeneous plane curve F(X, Y, Z) = 0.
    Plane(Vec<Term>),
}

/// A curve over a finite field together with its geometric genus and a
/// flag recording whether the plane model is already smooth (so that its
/// raw point counts are the counts of the smooth projective curve).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub field: FieldSpec,
    pub genus: usize,
    pub smooth_model: bool,
    pub model: Model,
}

impl Curve {
    /// The projective line over the given field.
    pub fn projective_line(field: FieldSpec) -> Self {
        Curve {
            field,
            genus: 0,
            smooth_model: true,
            model: Model::Line,
        }
    }

    /// A plane model with a stated genus. The terms are combined and
    /// reduced; the model must be homogeneous, and the genus must respect
    /// the plane bound (d - 1)(d - 2) / 2, with equality when the model
    /// is claimed smooth.
    pub fn plane(
        field: FieldSpec,
        terms: Vec<Term>,
        genus: usize,
        smooth_model: bool,
    ) -> Result<Self, Error> {
        field.validate()?;
        let mut reduced: Vec<Term> = Vec::new();
        for t in terms {
            if t.coeff.len() != field.n || t.coeff.iter().any(|&c| c >= field.p) {
                return Err(Error::Argument(
                    "term coefficient is not a reduced field element".into(),
                ));
            }
            match reduced.iter_mut().find(|r| r.exps == t.exps) {
                Some(r) => r.coeff = field.add(&r.coeff, &t.coeff),
                None => reduced.push(t),
            }
        }
        reduced.retain(|t| !field.is_zero(&t.coeff));
        if reduced.is_empty() {
            return Err(Error::Argument("plane model has no nonzero terms".into()));
        }
        let d = reduced[0].exps.iter().sum::<u32>();
        if d == 0 || reduced.iter().any(|t| t.exps.iter().sum::<u32>() != d) {
            return Err(Error::Argument(
                "plane model must be homogeneous of degree >= 1".into(),
            ));
        }
        let plane_genus = ((d as usize).saturating_sub(1) * (d as usize).saturating_sub(2)) / 2;
        if genus > plane_genus {
            return Err(Error::Argument(format!(
                "genus {genus} exceeds the plane bound {plane_genus} for degree {d}"
            )));
        }
        if genus > 0 && d < 3 {
            return Err(Error::Argument(
                "positive genus needs a model of degree >= 3".into(),
            ));
        }
        if smooth_model && genus != plane_genus {
            return Err(Error::Argument(format!(
                "a smooth plane model of degree {d} has genus {plane_genus}, not {genus}"
            )));
        }
        reduced.sort_by_key(|t| t.exps);
        Ok(Curve {
            field,
            genus,
            smooth_model,
            model: Model::Plane(reduced),
        })
    }

    /// Total degree of the defining form.
    pub fn degree(&self) -> u32 {
        match &self.model {
            Model::Line => 1,
            Model::Plane(terms) => terms[0].exps.iter().sum(),
        }
    }

    /// Number of projective points over GF(q^nu). Enumeration visits
    /// q^(2 nu) + q^nu + 1 candidate points and is refused beyond the
    /// budget.
    pub fn count_points(&self, nu: u32, budget: u64) -> Result<u64, Error> {
        if nu == 0 {
            return Err(Error::Argument("extension degree nu must be >= 1".into()));
        }
        let deg = self.field.n as u64 * nu as u64;
        if deg > u32::MAX as u64 {
            return Err(Error::Budget(format!("extension degree {deg} too large")));
        }
        let qn = (self.field.p as u128).checked_pow(deg as u32);
        let qn = match qn {
            Some(v) if v <= u64::MAX as u128 / 2 => v as u64,
            _ => {
                return Err(Error::Budget(format!(
                    "GF({}^{deg}) is out of the supported range",
                    self.field.p
                )))
            }
        };
        if let Model::Line = self.model {
            return Ok(qn + 1);
        }
        let work = (qn as u128) * (qn as u128) + qn as u128 + 1;
        if work > budget as u128 {
            return Err(Error::Budget(format!(
                "counting over GF({qn}) needs {work} evaluations, budget {budget}"
            )));
        }
        let terms = match &self.model {
            Model::Plane(t) => t,
            Model::Line => unreachable!(),
        };
        let big;
        let coeffs: Vec<Elt>;
        if nu == 1 {
            big = self.field.clone();
            coeffs = terms.iter().map(|t| t.coeff.clone()).collect();
        } else {
            big = FieldSpec::new(self.field.p, self.field.n * nu as usize, 0)?;
            let root = self.field.embedding_root(&big)?;
            coeffs = terms
                .iter()
                .map(|t| self.field.embed(&t.coeff, &big, &root))
                .collect();
        }
        let d = self.degree() as usize;
        let mut count = 0u64;
        // Affine chart Z = 1.
        let elements: Vec<Elt> = big.enumerate().collect();
        let mut xpow = vec![big.one(); d + 1];
        let mut ypow = vec![big.one(); d + 1];
        for x in &elements {
            for i in 1..=d {
                xpow[i] = big.mul(&xpow[i - 1], x);
            }
            for y in &elements {
                for j in 1..=d {
                    ypow[j] = big.mul(&ypow[j - 1], y);
                }
                let mut acc = big.zero();
                for (t, c) in terms.iter().zip(&coeffs) {
                    let m = big.mul(c, &xpow[t.exps[0] as usize]);
                    let m = big.mul(&m, &ypow[t.exps[1] as usize]);
                    acc = big.add(&acc, &m);
                }
                if big.is_zero(&acc) {
                    count += 1;
                }
            }
        }
        // Line at infinity, Y = 1: only terms with no Z survive.
        for x in &elements {
            for i in 1..=d {
                xpow[i] = big.mul(&xpow[i - 1], x);
            }
            let mut acc = big.zero();
            for (t, c) in terms.iter().zip(&coeffs) {
                if t.exps[2] == 0 {
                    acc = big.add(&acc, &big.mul(c, &xpow[t.exps[0] as usize]));
                }
            }
            if big.is_zero(&acc) {
                count += 1;
            }
        }
        // The remaining point (1 : 0 : 0).
        let mut acc = big.zero();
        for (t, c) in terms.iter().zip(&coeffs) {
            if t.exps[1] == 0 && t.exps[2] == 0 {
                acc = big.add(&acc, c);
            }
        }
        if big.is_zero(&acc) {
            count += 1;
        }
        Ok(count)
    }

    /// Point counts over GF(q^1), ..., GF(q^horizon).
    pub fn counts_to(&self, horizon: u32, budget: u64) -> Result<Vec<Int>, Error> {
        (1..=horizon)
            .map(|nu| self.count_points(nu, budget).map(Int::from))
            .collect()
    }

    /// Counts enough extensions to pin the zeta numerator and validates
    /// it. Refused for a plane model that is not known to be smooth,
    /// since its raw counts need not agree with the smooth curve.
    pub fn zeta(&self, horizon: u32, budget: u64) -> Result<ZetaData, Error> {
        if !self.smooth_model {
            return Err(Error::Argument(
                "zeta from raw counts needs a smooth model".into(),
            ));
        }
        let horizon = horizon.max(2 * self.genus as u32);
        let counts = self.counts_to(horizon, budget)?;
        ZetaData::from_counts(Int::from(self.field.order()), self.genus, &counts)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CurveJson {
    Builtin {
        builtin: String,
        field: FieldSpec,
    },
    Plane {
        field: FieldSpec,
        genus: usize,
        smooth_model: bool,
        terms: Vec<Term>,
    },
}

impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let j = match &self.model {
            Model::Line => CurveJson::Builtin {
                builtin: "p1".into(),
                field: self.field.clone(),
            },
            Model::Plane(terms) => CurveJson::Plane {
                field: self.field.clone(),
                genus: self.genus,
                smooth_model: self.smooth_model,
                terms: terms.clone(),
            },
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Curve {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = CurveJson::deserialize(d)?;
        match j {
            CurveJson::Builtin { builtin, field } => {
                if builtin != "p1" {
                    return Err(D::Error::custom(format!("unknown builtin curve {builtin}")));
                }
                field.validate().map_err(D::Error::custom)?;
                Ok(Curve::projective_line(field))
            }
            CurveJson::Plane {
                field,
                genus,
                smooth_model,
                terms,
            } => Curve::plane(field, terms, genus, smooth_model).map_err(D::Error::custom),
        }
    }
}

/// A validated zeta function of a smooth projective genus-g curve over
/// GF(q), held as the degree-2g numerator P with P(t) = prod (1 - a_i t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaData {
    q: Int,
    genus: usize,
    counts: Vec<Int>,
    numerator: OnePoly,
}

impl ZetaData {
    /// Builds the zeta function from point counts N_1..N_h with h >= 2g:
    /// the numerator is exp(sum N_nu t^nu / nu) (1 - t)(1 - q t), and all
    /// structural checks must pass exactly.
    pub fn from_counts(q: Int, genus: usize, counts: &[Int]) -> Result<Self, Error> {
        if q < Int::from(2) {
            return Err(Error::Argument("field size q must be >= 2".into()));
        }
        if counts.len() < 2 * genus {
            return Err(Error::Argument(format!(
                "genus {genus} needs at least {} counts, got {}",
                2 * genus,
                counts.len()
            )));
        }
        if let Some(bad) = counts.iter().find(|n| n.is_negative()) {
            return Err(Error::Validation {
                check: "count-positivity".into(),
                detail: format!("negative point count {bad}"),
            });
        }
        let h = counts.len();
        // z_n = coefficient of t^n in exp(sum N_k t^k / k).
        let mut z: Vec<Rat> = vec![Rat::one()];
        for n in 1..=h {
            let mut s = Rat::zero();
            for k in 1..=n {
                s += Rat::from(counts[k - 1].clone()) * &z[n - k];
            }
            z.push(s / Rat::from(Int::from(n as u64)));
        }
        // c_n = coefficient of t^n in Z(t) (1 - t)(1 - q t).
        let qr = Rat::from(q.clone());
        let mut c: Vec<Rat> = Vec::with_capacity(h);
        for n in 1..=h {
            let mut v = z[n].clone() - (qr.clone() + Rat::one()) * &z[n - 1];
            if n >= 2 {
                v += qr.clone() * &z[n - 2];
            }
            c.push(v);
        }
        for n in (2 * genus + 1)..=h {
            if !c[n - 1].is_zero() {
                return Err(Error::Validation {
                    check: "count-consistency".into(),
                    detail: format!(
                        "counts leave a t^{n} remainder {} beyond the degree-{} numerator",
                        c[n - 1],
                        2 * genus
                    ),
                });
            }
        }
        let data = ZetaData {
            q,
            genus,
            counts: counts.to_vec(),
            numerator: OnePoly::new(c[..2 * genus].to_vec()),
        };
        data.validate_tail(&c[..2 * genus])?;
        Ok(data)
    }

    /// Wraps a claimed numerator after the same structural checks, and
    /// derives the first 2g point counts.
    pub fn from_numerator(q: Int, genus: usize, numerator: OnePoly) -> Result<Self, Error> {
        if q < Int::from(2) {
            return Err(Error::Argument("field size q must be >= 2".into()));
        }
        if numerator.degree() != 2 * genus {
            return Err(Error::Argument(format!(
                "numerator degree {} does not match 2g = {}",
                numerator.degree(),
                2 * genus
            )));
        }
        let tail = numerator.tail_coeffs().to_vec();
        let mut data = ZetaData {
            q,
            genus,
            counts: Vec::new(),
            numerator,
        };
        data.validate_tail(&tail)?;
        data.counts = data.counts_to(2 * genus);
        if let Some(bad) = data.counts.iter().find(|n| n.is_negative()) {
            return Err(Error::Validation {
                check: "count-positivity".into(),
                detail: format!("numerator forces a negative point count {bad}"),
            });
        }
        Ok(data)
    }

    /// Integrality, functional equation, and the Weil bound on inverse
    /// roots; `tail` is the untrimmed t^1..t^2g coefficient list.
    fn validate_tail(&self, tail: &[Rat]) -> Result<(), Error> {
        let g = self.genus;
        for (n, v) in tail.iter().enumerate() {
            if !v.is_integer() {
                return Err(Error::Validation {
                    check: "integrality".into(),
                    detail: format!("numerator coefficient of t^{} is {v}", n + 1),
                });
            }
        }
        let coeff = |i: usize| -> Rat {
            if i == 0 {
                Rat::one()
            } else {
                tail[i - 1].clone()
            }
        };
        // c_{2g-i} q^i = c_i q^g for 0 <= i <= g.
        let qr = Rat::from(self.q.clone());
        let qg = num_traits::pow(qr.clone(), g);
        for i in 0..=g {
            let lhs = coeff(2 * g - i) * num_traits::pow(qr.clone(), i);
            let rhs = coeff(i) * qg.clone();
            if lhs != rhs {
                return Err(Error::Validation {
                    check: "functional-equation".into(),
                    detail: format!(
                        "c_{} != q^(g-{i}) c_{i} for q = {}, g = {g}",
                        2 * g - i,
                        self.q
                    ),
                });
            }
        }
        let full = self.numerator.full_coeffs();
        let roots = inverse_roots(&full)?;
        debug_assert_eq!(roots.len(), 2 * g);
        let sq = rat_to_f64(&Rat::from(self.q.clone())).sqrt();
        for r in roots {
            if (r.abs() - sq).abs() > 1e-9 {
                return Err(Error::Validation {
                    check: "weil-bounds".into(),
                    detail: format!(
                        "inverse root of absolute value {} differs from sqrt(q) = {sq}",
                        r.abs()
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The counts pinned at construction time.
    pub fn counts(&self) -> &[Int] {
        &self.counts
    }

    pub fn numerator(&self) -> &OnePoly {
        &self.numerator
    }

    /// Point counts N_1..N_h derived from the numerator:
    /// N_nu = q^nu + 1 - sum a_i^nu.
    pub fn counts_to(&self, horizon: usize) -> Vec<Int> {
        let p = self.numerator.power_sums(horizon);
        (1..=horizon)
            .map(|nu| {
                let qn = num_traits::pow(self.q.clone(), nu);
                let v = Rat::from(qn) + Rat::one() - &p[nu - 1];
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    /// The Frobenius trace sums a_nu = N_nu - q^nu - 1 = -sum a_i^nu.
    pub fn trace_sums(&self, horizon: usize) -> Vec<Int> {
        let p = self.numerator.power_sums(horizon);
        p.iter()
            .map(|v| {
                debug_assert!(v.is_integer());
                (-v).to_integer()
            })
            .collect()
    }

    /// The measure of the curve: (1 - t) in degree 0, the inverse class
    /// of the numerator in degree 1, and (1 - q t) in degree 2. Its ghost
    /// at T = 1 recovers N_nu.
    pub fn motivic_measure(&self) -> MotivicMeasurePoly {
        let h0 = WittRational::from_poly(OnePoly::linear(&Rat::one()));
        let h1 = WittRational::new(OnePoly::one(), self.numerator.clone());
        let h2 = WittRational::from_poly(OnePoly::linear(&Rat::from(self.q.clone())));
        MotivicMeasurePoly::new(vec![h0, h1, h2])
    }

    /// The zeta data of the curve base changed to GF(q^m): numerator
    /// F_m P, field size q^m, counts rederived to the original horizon.
    pub fn base_change(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Argument("base change degree must be >= 1".into()));
        }
        let numerator = self.numerator.frobenius(m)?;
        let mut out = ZetaData {
            q: num_traits::pow(self.q.clone(), m),
            genus: self.genus,
            counts: Vec::new(),
            numerator,
        };
        out.counts = out.counts_to(self.counts.len().max(2 * self.genus));
        Ok(out)
    }

    /// The measure of the curve viewed as a variety over the degree-m
    /// subfield: V_m of the measure. Its ghost at T = 1 is m N_{nu/m}
    /// when m divides nu and 0 otherwise.
    pub fn restrict_scalars(&self, m: usize) -> Result<MotivicMeasurePoly, Error> {
        self.motivic_measure().verschiebung(m)
    }
}

#[derive(Serialize, Deserialize)]
struct ZetaJson {
    q: String,
    genus: usize,
    counts: Vec<String>,
    numerator: Vec<String>,
}

impl Serialize for ZetaData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ZetaJson {
            q: self.q.to_string(),
            genus: self.genus,
            counts: self.counts.iter().map(|n| n.to_string()).collect(),
            numerator: self
                .numerator
                .tail_coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZetaData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ZetaJson::deserialize(d)?;
        let q: Int = j.q.parse().map_err(D::Error::custom)?;
        let tail: Vec<Rat> = j
            .numerator
            .iter()
            .map(|s| crate::parse_rat(s))
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)?;
        let data = ZetaData::from_numerator(q, j.genus, OnePoly::new(tail))
            .map_err(D::Error::custom)?;
        let counts: Vec<Int> = j
            .counts
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect::<Result<_, _>>()?;
        let derived = data.counts_to(counts.len());
        if counts != derived {
            return Err(D::Error::custom(format!(
                "stored counts {counts:?} disagree with the numerator's {derived:?}"
            )));
        }
        Ok(ZetaData {
            counts,
            ..data
        })
    }
}

/// The plane model of y^p - y = x^d over GF(p^a) with d = p^a - 1,
/// homogenized to degree D = max(p, d):
/// Y^p Z^(D-p) - Y Z^(D-1) - X^d Z^(D-d). Its geometric genus is
/// (p^a - 2)(p - 1) / 2. The model is smooth exactly when a = 1 or D = 3;
/// otherwise the point (0 : 1 : 0) is singular.
pub fn artin_schreier_curve(p: u64, a: usize) -> Result<Curve, Error> {
    if a == 0 {
        return Err(Error::Argument("extension exponent a must be >= 1".into()));
    }
    let field = FieldSpec::new(p, a, 0)?;
    let q = field.order();
    if q < 3 {
        return Err(Error::Argument("q = p^a must be at least 3".into()));
    }
    let d = (q - 1) as u32;
    let big = d.max(p as u32);
    let minus_one = field.from_u64(p - 1);
    let terms = vec![
        Term {
            coeff: field.one(),
            exps: [0, p as u32, big - p as u32],
        },
        Term {
            coeff: minus_one.clone(),
            exps: [0, 1, big - 1],
        },
        Term {
            coeff: minus_one,
            exps: [d, 0, big - d],
        },
    ];
    let genus = ((q - 2) * (p - 1) / 2) as usize;
    let smooth = a == 1 || big == 3;
    Curve::plane(field, terms, genus, smooth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::new(p, n, 0).unwrap()
    }

    #[test]
    fn projective_line_counts_and_zeta() {
        let c = Curve::projective_line(gf(2, 1));
        let counts = c.counts_to(4, 1_000_000).unwrap();
        assert_eq!(counts, vec![3, 5, 9, 17].into_iter().map(Int::from).collect::<Vec<_>>());
        let z = c.zeta(4, 1_000_000).unwrap();
        assert!(z.numerator().is_one());
        assert_eq!(z.genus(), 0);
    }

    #[test]
    fn cubic_over_gf4_has_supersingular_numerator() {
        let c = artin_schreier_curve(2, 2).unwrap();
        assert_eq!(c.genus, 1);
        assert!(c.smooth_model);
        assert_eq!(c.count_points(1, 1_000_000).unwrap(), 9);
        assert_eq!(c.count_points(2, 1_000_000).unwrap(), 9);
        let z = c.zeta(2, 1_000_000).unwrap();
        // (1 + 2t)^2: both inverse roots are -2.
        assert_eq!(z.numerator().tail_coeffs(), &[rat(4, 1), rat(4, 1)]);
    }

    #[test]
    fn degenerate_exponent_homogenizes_to_degree_p() {
        // y^3 - y = x^2 over GF(3) is elliptic and supersingular.
        let c = artin_schreier_curve(3, 1).unwrap();
        assert_eq!(c.degree(), 3);
        assert_eq!(c.genus, 1);
        assert!(c.smooth_model);
        let z = c.zeta(2, 1_000_000).unwrap();
        assert_eq!(z.counts(), &[Int::from(4), Int::from(16)]);
        assert_eq!(z.numerator().tail_coeffs(), &[rat(0, 1), rat(3, 1)]);
    }

    #[test]
    fn counts_that_fit_no_curve_are_refused() {
        let five = vec![Int::from(5), Int::from(5)];
        let z = ZetaData::from_counts(Int::from(2), 1, &five).unwrap();
        assert_eq!(z.numerator().tail_coeffs(), &[rat(2, 1), rat(2, 1)]);
        let bad = vec![Int::from(5), Int::from(6)];
        let err = ZetaData::from_counts(Int::from(2), 1, &bad).unwrap_err();
        assert!(matches!(err, Error::Validation { ref check, .. } if check == "integrality"));
        // A trace too large for the Weil bound.
        let fat = OnePoly::new(vec![rat(4, 1), rat(2, 1)]);
        let err = ZetaData::from_numerator(Int::from(2), 1, fat).unwrap_err();
        assert!(matches!(err, Error::Validation { ref check, .. } if check == "weil-bounds"));
    }

    #[test]
    fn supersingular_over_gf2_from_counts() {
        let counts = vec![Int::from(3), Int::from(9)];
        let z = ZetaData::from_counts(Int::from(2), 1, &counts).unwrap();
        assert_eq!(z.numerator().tail_coeffs(), &[rat(0, 1), rat(2, 1)]);
        assert_eq!(z.counts_to(4), vec![Int::from(3), Int::from(9), Int::from(9), Int::from(9)]);
    }

    #[test]
    fn measure_ghosts_recover_counts() {
        let c = artin_schreier_curve(2, 2).unwrap();
        let z = c.zeta(2, 1_000_000).unwrap();
        let mu = z.motivic_measure();
        for nu in 1..=4 {
            let n = mu.ghost_at_one(nu);
            assert_eq!(n, Rat::from(z.counts_to(nu)[nu - 1].clone()));
        }
    }

    #[test]
    fn base_change_commutes_with_frobenius_on_measures() {
        let c = artin_schreier_curve(2, 2).unwrap();
        let z = c.zeta(2, 1_000_000).unwrap();
        let z2 = z.base_change(2).unwrap();
        assert_eq!(z2.q(), &Int::from(16));
        // Counting directly over GF(16) agrees.
        assert_eq!(z2.counts()[0], Int::from(c.count_points(2, 1_000_000).unwrap()));
        let lhs = z2.motivic_measure();
        let rhs = z.motivic_measure().frobenius(2).unwrap();
        for nu in 1..=3 {
            assert_eq!(lhs.ghost(nu), rhs.ghost(nu));
        }
    }

    #[test]
    fn restriction_of_scalars_ghosts() {
        let c = Curve::projective_line(gf(2, 2));
        let z = c.zeta(1, 1_000_000).unwrap();
        let res = z.restrict_scalars(2).unwrap();
        // Over the subfield: ghost 2nu is 2 N_nu, odd ghosts vanish.
        assert_eq!(res.ghost_at_one(1), rat(0, 1));
        assert_eq!(res.ghost_at_one(2), rat(10, 1));
        assert_eq!(res.ghost_at_one(3), rat(0, 1));
        assert_eq!(res.ghost_at_one(4), rat(34, 1));
    }

    #[test]
    fn curve_json_forms() {
        let text = r#"{"builtin":"p1","field":{"p":3,"n":1,"modulus":[0,1]}}"#;
        let c: Curve = serde_json::from_str(text).unwrap();
        assert_eq!(c.count_points(1, 100).unwrap(), 4);
        let c2 = artin_schreier_curve(2, 2).unwrap();
        let text2 = serde_json::to_string(&c2).unwrap();
        let back: Curve = serde_json::from_str(&text2).unwrap();
        assert_eq!(back, c2);
    }

    #[test]
    fn zeta_json_round_trip() {
        let z = ZetaData::from_counts(Int::from(2), 1, &[Int::from(3), Int::from(9)]).unwrap();
        let text = serde_json::to_string(&z).unwrap();
        assert_eq!(
            text,
            r#"{"q":"2","genus":1,"counts":["3","9"],"numerator":["0","2"]}"#
        );
        let back: ZetaData = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z);
        // Tampered counts are rejected.
        let bad = r#"{"q":"2","genus":1,"counts":["4","9"],"numerator":["0","2"]}"#;
        assert!(serde_json::from_str::<ZetaData>(bad).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let c = artin_schreier_curve(2, 2).unwrap();
        let err = c.count_points(1, 10).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
