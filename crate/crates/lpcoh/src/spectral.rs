//! Spectral data of `-ad ξ` for solvable groups `A ⋉ N` and the exponent
//! intervals it governs.
//!
//! A [`SolvableDatum`] carries the weights of the `𝔞`-action on `𝔫`
//! (restricted roots with multiplicities in the Iwasawa case, or
//! user-supplied); a [`SpectralProfile`] is the sorted list of real
//! eigenvalue parts of `-ad ξ` together with the partial sums `w_k`/`W_k`
//! and the trace `h`; an [`ExponentReport`] turns a profile into exact
//! vanishing and non-vanishing intervals per degree.

use serde::{Deserialize, Serialize};

use crate::cartan::RealFormClass;
use crate::exact::{cone_is_trivial, strict_negative_witness, Rational, RationalMatrix, RationalVector};
use crate::roots::RootSystem;
use crate::{Error, Result};

/// One weight of the adjoint action on `𝔫`: a linear form on `𝔞` split
/// into real and imaginary parts, with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct WeightEntry {
    pub real_part: RationalVector,
    pub imag_part: RationalVector,
    pub multiplicity: usize,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawWeight {
    real: RationalVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    imag: Option<RationalVector>,
    mult: usize,
}

impl From<WeightEntry> for RawWeight {
    fn from(w: WeightEntry) -> Self {
        let imag = if w.imag_part.is_zero() { None } else { Some(w.imag_part) };
        RawWeight { real: w.real_part, imag, mult: w.multiplicity }
    }
}

impl TryFrom<RawWeight> for WeightEntry {
    type Error = Error;
    fn try_from(raw: RawWeight) -> Result<Self> {
        let imag_part = raw
            .imag
            .unwrap_or_else(|| RationalVector::zero(raw.real.dim()));
        if imag_part.dim() != raw.real.dim() {
            return Err(Error::Dimension { expected: raw.real.dim(), got: imag_part.dim() });
        }
        if raw.mult == 0 {
            return Err(Error::domain("weight multiplicity must be positive"));
        }
        Ok(WeightEntry { real_part: raw.real, imag_part, multiplicity: raw.mult })
    }
}

/// A solvable group `A ⋉ N` described by `l = dim 𝔞` and the weights of
/// `ad` on `𝔫`. Weight coordinates may live in an ambient frame larger
/// than `l`, in which case `constraints` are the linear relations cutting
/// `𝔞` out of the frame.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDatum", into = "RawDatum")]
pub struct SolvableDatum {
    l: usize,
    weights: Vec<WeightEntry>,
    constraints: Vec<RationalVector>,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawDatum {
    l: usize,
    weights: Vec<WeightEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    constraints: Vec<RationalVector>,
}

impl From<SolvableDatum> for RawDatum {
    fn from(d: SolvableDatum) -> Self {
        RawDatum { l: d.l, weights: d.weights, constraints: d.constraints }
    }
}

impl TryFrom<RawDatum> for SolvableDatum {
    type Error = Error;
    fn try_from(raw: RawDatum) -> Result<Self> {
        SolvableDatum::new(raw.l, raw.weights, raw.constraints)
    }
}

impl SolvableDatum {
    pub fn new(
        l: usize,
        weights: Vec<WeightEntry>,
        constraints: Vec<RationalVector>,
    ) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::domain("datum needs at least one weight"));
        }
        let dim = weights[0].real_part.dim();
        for w in &weights {
            if w.real_part.dim() != dim || w.imag_part.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: w.real_part.dim() });
            }
        }
        for c in &constraints {
            if c.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: c.dim() });
            }
        }
        if l + constraints.len() < dim {
            return Err(Error::domain("frame dimension exceeds l plus constraint count"));
        }
        if l == 0 {
            return Err(Error::domain("l must be positive"));
        }
        Ok(SolvableDatum { l, weights, constraints })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn weights(&self) -> &[WeightEntry] {
        &self.weights
    }

    pub fn constraints(&self) -> &[RationalVector] {
        &self.constraints
    }

    /// Ambient dimension of the weight coordinates.
    pub fn frame_dim(&self) -> usize {
        self.weights[0].real_part.dim()
    }

    /// `n = dim N`: total weight multiplicity.
    pub fn n(&self) -> usize {
        self.weights.iter().map(|w| w.multiplicity).sum()
    }

    /// `D = dim(A ⋉ N) = l + n`.
    pub fn dim_total(&self) -> usize {
        self.l + self.n()
    }
}

/// Condition (nC): a witness `ξ` with `ℜϖ_i(ξ) < 0` for every weight, or
/// `None` when no such `ξ` exists. Decided by exact strict-feasibility LP.
pub fn check_nc(datum: &SolvableDatum) -> Option<RationalVector> {
    let forms: Vec<RationalVector> = datum.weights.iter().map(|w| w.real_part.clone()).collect();
    strict_negative_witness(&forms)
}

/// Condition (nT): the real parts of the weights span `𝔞*`, i.e. their
/// rank equals `l`.
pub fn check_nt(datum: &SolvableDatum) -> bool {
    let rows: Vec<RationalVector> = datum.weights.iter().map(|w| w.real_part.clone()).collect();
    RationalMatrix::new(rows).map(|m| m.rank() == datum.l).unwrap_or(false)
}

/// Condition (1): every nonzero `X ∈ 𝔟 = {X ∈ 𝔞 : rho(X) = 0}` has
/// `ℜϖ_j(X) > 0` for some `j ∈ J`.
pub fn check_condition1(datum: &SolvableDatum, j_set: &[usize], rho: &RationalVector) -> Result<bool> {
    if rho.is_zero() {
        return Err(Error::domain("rho must be nonzero"));
    }
    if j_set.is_empty() {
        return Err(Error::domain("J must be nonempty"));
    }
    for &j in j_set {
        if j >= datum.weights.len() {
            return Err(Error::domain(format!("weight index {j} out of range")));
        }
    }
    let mut rows = datum.constraints.clone();
    rows.push(rho.clone());
    let basis = RationalMatrix::new(rows)?.kernel_basis();
    if basis.is_empty() {
        return Ok(true);
    }
    let restricted = RationalMatrix::new(
        j_set
            .iter()
            .map(|&j| {
                RationalVector::new(
                    basis.iter().map(|x| datum.weights[j].real_part.dot(x)).collect(),
                )
            })
            .collect(),
    )?;
    Ok(cone_is_trivial(&restricted))
}

/// Sorted real parts of the eigenvalues of `-ad ξ` on `Lie(A ⋉ N)`, with
/// partial sums and trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralProfile {
    /// `λ_1 ≤ … ≤ λ_D`, including the `l` zeros of the `𝔞`-block.
    pub lambdas: Vec<Rational>,
    /// `w[k] = w_k = λ_1 + … + λ_{k+1}`, for `0 ≤ k ≤ D−1`.
    pub w: Vec<Rational>,
    /// `W[k] = W_k` = sum of the `k` largest `λ`, for `0 ≤ k ≤ D−1`
    /// (`W_0 = 0`).
    #[serde(rename = "W")]
    pub big_w: Vec<Rational>,
    /// Trace `h = Σ λ_i`.
    pub h: Rational,
    pub l: usize,
    pub n: usize,
    #[serde(rename = "D")]
    pub dim_total: usize,
    pub xi: RationalVector,
}

/// Real eigenvalue parts of `-ad ξ`: `l` zeros from the abelian block,
/// then `-ℜϖ_i(ξ)` with multiplicities, sorted ascending.
pub fn spectral_profile(datum: &SolvableDatum, xi: &RationalVector) -> Result<SpectralProfile> {
    if xi.dim() != datum.frame_dim() {
        return Err(Error::Dimension { expected: datum.frame_dim(), got: xi.dim() });
    }
    let mut lambdas = vec![Rational::zero(); datum.l];
    for wgt in &datum.weights {
        let lam = -&wgt.real_part.dot(xi);
        lambdas.extend(std::iter::repeat_n(lam, wgt.multiplicity));
    }
    lambdas.sort();
    let d = lambdas.len();
    let mut w = Vec::with_capacity(d);
    let mut acc = Rational::zero();
    for lam in &lambdas {
        acc += lam;
        w.push(acc.clone());
    }
    let h = w.last().cloned().unwrap();
    let mut big_w = vec![Rational::zero()];
    let mut acc = Rational::zero();
    for lam in lambdas.iter().rev().take(d - 1) {
        acc += lam;
        big_w.push(acc.clone());
    }
    Ok(SpectralProfile {
        lambdas,
        w,
        big_w,
        h,
        l: datum.l,
        n: datum.n(),
        dim_total: d,
        xi: xi.clone(),
    })
}

/// A rational extended with `+∞`, serialized as "num/den" or "+inf".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRational {
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            ExtRational::PosInf => None,
        }
    }
}

impl std::fmt::Display for ExtRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtRational::Finite(q) => write!(f, "{q}"),
            ExtRational::PosInf => f.write_str("+inf"),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "+inf" {
            Ok(ExtRational::PosInf)
        } else {
            s.parse::<Rational>()
                .map(ExtRational::Finite)
                .map_err(serde::de::Error::custom)
        }
    }
}

/// An exponent interval with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: ExtRational,
    pub hi: ExtRational,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    fn open(lo: Rational, hi: ExtRational) -> Self {
        Interval { lo: ExtRational::Finite(lo), hi, lo_open: true, hi_open: true }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { "(" } else { "[" },
            self.lo,
            self.hi,
            if self.hi_open { ")" } else { "]" },
        )
    }
}

/// Exponent statements for one degree `k`.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    /// `L^p`-cohomology of degree `k` vanishes for `p` in `(1, h/W_k)`;
    /// absent when that interval is empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<Interval>,
    /// Non-vanishing (non-Hausdorff) window `(h/w_k, h/W_{k−1})` for
    /// degree `k ≥ 1`, when `1 ≤ h/w_k` and the window is non-empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonvanishing: Option<Interval>,
    /// Poincaré-dual degree `D − k`.
    pub dual_degree: usize,
}

/// Full per-degree exponent intervals plus the degree-`l` thresholds.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentReport {
    pub profile: SpectralProfile,
    pub degrees: Vec<DegreeReport>,
    /// Reduced degree-`l` cohomology is non-vanishing for `p > h/w_l`.
    pub degree_l_threshold: ExtRational,
    /// Hölder conjugate of the above: `h/W_{n−1}`.
    pub dual_threshold: ExtRational,
    /// Rank-one extra: vanishing in every degree `1 < p < h/W_{D−2}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_one_interval: Option<Interval>,
    /// `ξ` used is contracting: all of `λ_{l+1}, …, λ_D` are positive.
    pub nc_with_xi: bool,
}

/// `q = p / (p − 1)`.
pub fn dual_exponent(p: &Rational) -> Result<Rational> {
    if *p <= Rational::one() {
        return Err(Error::domain("dual exponent requires p > 1"));
    }
    Ok(p / &(p - &Rational::one()))
}

/// Build the vanishing and non-vanishing intervals of a profile.
/// Requires `h > 0`.
pub fn exponent_report(profile: &SpectralProfile) -> Result<ExponentReport> {
    let h = &profile.h;
    if !h.is_positive() {
        return Err(Error::domain("profile trace h must be positive"));
    }
    let d = profile.dim_total;
    let one = Rational::one();
    // h / x as an extended rational, +inf at x = 0
    let ratio = |x: &Rational| {
        if x.is_zero() {
            ExtRational::PosInf
        } else {
            ExtRational::Finite(h / x)
        }
    };
    let lt = |a: &ExtRational, b: &ExtRational| match (a, b) {
        (ExtRational::Finite(x), ExtRational::Finite(y)) => x < y,
        (ExtRational::Finite(_), ExtRational::PosInf) => true,
        (ExtRational::PosInf, _) => false,
    };

    let mut degrees = Vec::with_capacity(d);
    for k in 0..d {
        let hi = ratio(&profile.big_w[k]);
        let vanishing = match &hi {
            ExtRational::Finite(x) if *x <= one => None,
            _ => Some(Interval::open(one.clone(), hi)),
        };
        let nonvanishing = if k >= 1 && profile.w[k].is_positive() {
            let lo = h / &profile.w[k];
            let hi = ratio(&profile.big_w[k - 1]);
            if lo >= one && lt(&ExtRational::Finite(lo.clone()), &hi) {
                Some(Interval::open(lo, hi))
            } else {
                None
            }
        } else {
            None
        };
        degrees.push(DegreeReport { degree: k, vanishing, nonvanishing, dual_degree: d - k });
    }

    let degree_l_threshold = ratio(&profile.w[profile.l]);
    let dual_threshold = ratio(&profile.big_w[profile.n - 1]);
    let rank_one_interval = if profile.l == 1 && d >= 2 {
        match ratio(&profile.big_w[d - 2]) {
            ExtRational::Finite(x) if x <= one => None,
            hi => Some(Interval::open(one.clone(), hi)),
        }
    } else {
        None
    };
    let nc_with_xi = profile.lambdas[profile.l..].iter().all(Rational::is_positive)
        && profile.lambdas[..profile.l].iter().all(Rational::is_zero);

    Ok(ExponentReport {
        profile: profile.clone(),
        degrees,
        degree_l_threshold,
        dual_threshold,
        rank_one_interval,
        nc_with_xi,
    })
}

/// The weighted restricted-root datum of the Iwasawa solvable group of a
/// class: weights are the positive restricted roots with their
/// multiplicities, real parts only.
pub fn iwasawa_datum(class: &RealFormClass) -> Result<SolvableDatum> {
    let datum = class.weighted_datum()?;
    let dim = datum.system.ambient_dim();
    let weights = datum
        .system
        .positive_roots()
        .iter()
        .map(|(root, cls)| WeightEntry {
            real_part: root.clone(),
            imag_part: RationalVector::zero(dim),
            multiplicity: datum.multiplicity[cls] as usize,
        })
        .collect();
    SolvableDatum::new(
        class.l(),
        weights,
        datum.system.ambient_constraints().to_vec(),
    )
}

/// The default contraction direction: the `ξ` with `α(ξ) = −1` for every
/// simple root `α`, solved exactly inside the ambient constraints.
pub fn default_xi(sys: &RootSystem) -> Result<RationalVector> {
    let mut rows: Vec<RationalVector> = sys.simple_roots().to_vec();
    let mut rhs = vec![-Rational::one(); rows.len()];
    rows.extend(sys.ambient_constraints().iter().cloned());
    rhs.extend(std::iter::repeat_n(Rational::zero(), sys.ambient_constraints().len()));
    let xi = RationalMatrix::new(rows)?
        .solve(&rhs)
        .ok_or_else(|| Error::domain("simple-root system is inconsistent"))?;
    Ok(RationalVector::new(xi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog_instances, CartanLabel, FamilyTag, RealFormClass};
    use crate::roots::RootFamily;

    fn rv(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    fn weight(real: &[i64], mult: usize) -> WeightEntry {
        WeightEntry {
            real_part: rv(real),
            imag_part: RationalVector::zero(real.len()),
            multiplicity: mult,
        }
    }

    fn hyperbolic(d: usize) -> SolvableDatum {
        SolvableDatum::new(1, vec![weight(&[1], d - 1)], vec![]).unwrap()
    }

    #[test]
    fn hyperbolic_profiles_and_windows() {
        for d in 2..=8usize {
            let datum = hyperbolic(d);
            let profile = spectral_profile(&datum, &rv(&[-1])).unwrap();
            assert_eq!(profile.h, Rational::int(d as i64 - 1));
            for k in 0..d {
                assert_eq!(profile.w[k], Rational::int(k as i64));
                assert_eq!(profile.big_w[k], Rational::int(k as i64));
            }
            let report = exponent_report(&profile).unwrap();
            assert!(report.nc_with_xi);
            let h = Rational::int(d as i64 - 1);
            for k in 1..d {
                let win = report.degrees[k].nonvanishing.as_ref().unwrap();
                assert_eq!(*win.lo.finite().unwrap(), &h / &Rational::int(k as i64));
                if k == 1 {
                    assert_eq!(win.hi, ExtRational::PosInf);
                } else {
                    assert_eq!(
                        *win.hi.finite().unwrap(),
                        &h / &Rational::int(k as i64 - 1)
                    );
                }
                let van = report.degrees[k].vanishing.as_ref();
                if k < d - 1 {
                    assert_eq!(
                        *van.unwrap().hi.finite().unwrap(),
                        &h / &Rational::int(k as i64)
                    );
                }
            }
            // degree 0 always vanishes on (1, +inf)
            let v0 = report.degrees[0].vanishing.as_ref().unwrap();
            assert_eq!(v0.hi, ExtRational::PosInf);
            // hyperbolic D = 4: degree-2 window (3/2, 3)
            if d == 4 {
                let win = report.degrees[2].nonvanishing.as_ref().unwrap();
                assert_eq!(*win.lo.finite().unwrap(), Rational::new(3, 2));
                assert_eq!(*win.hi.finite().unwrap(), Rational::int(3));
            }
            // rank-one statement: vanishing below h/W_{D-2}
            let r1 = report.rank_one_interval.as_ref().unwrap();
            if d > 2 {
                assert_eq!(
                    *r1.hi.finite().unwrap(),
                    &h / &Rational::int(d as i64 - 2)
                );
            }
        }
    }

    #[test]
    fn nc_and_nt_basic_cases() {
        let datum = SolvableDatum::new(1, vec![weight(&[1], 1), weight(&[-1], 1)], vec![]).unwrap();
        assert!(check_nc(&datum).is_none());
        assert!(check_nt(&datum));

        let datum = SolvableDatum::new(1, vec![weight(&[0], 2)], vec![]).unwrap();
        assert!(check_nc(&datum).is_none());
        assert!(!check_nt(&datum));

        let datum = SolvableDatum::new(2, vec![weight(&[1, 0], 1)], vec![]).unwrap();
        assert!(!check_nt(&datum));
        let datum = SolvableDatum::new(
            2,
            vec![weight(&[1, 0], 1), weight(&[-1, 0], 1), weight(&[1, 1], 1)],
            vec![],
        )
        .unwrap();
        assert!(check_nt(&datum));
        assert!(check_nc(&datum).is_none());
    }

    #[test]
    fn nc_witness_on_b2_roots() {
        let sys = RootSystem::build(RootFamily::B(2)).unwrap();
        let weights: Vec<WeightEntry> = sys
            .positive_roots()
            .iter()
            .map(|(r, _)| WeightEntry {
                real_part: r.clone(),
                imag_part: RationalVector::zero(2),
                multiplicity: 1,
            })
            .collect();
        let datum = SolvableDatum::new(2, weights, vec![]).unwrap();
        let xi = check_nc(&datum).unwrap();
        for w in datum.weights() {
            assert!(w.real_part.dot(&xi).is_negative());
        }
    }

    #[test]
    fn nc_absence_matches_grid_oracle() {
        // exhaustive rational grid over ξ with coordinates p/q,
        // |p| ≤ 2q, q ≤ 3 — whenever the LP says "no witness", the grid
        // must agree
        let mut values = Vec::new();
        for q in 1..=3i64 {
            for p in -(2 * q)..=(2 * q) {
                values.push(Rational::new(p, q));
            }
        }
        values.sort();
        values.dedup();
        let cases: Vec<Vec<WeightEntry>> = vec![
            vec![weight(&[1, 0], 1), weight(&[-1, 1], 1)],
            vec![weight(&[1, 0], 1), weight(&[-1, 0], 1)],
            vec![weight(&[1, 1], 1), weight(&[-1, -1], 1)],
            vec![weight(&[2, -3], 1), weight(&[0, 1], 1), weight(&[-1, 1], 1)],
            vec![weight(&[1, 2], 1), weight(&[-2, -1], 1), weight(&[1, -1], 1)],
            vec![weight(&[0, 1], 1), weight(&[1, 0], 1), weight(&[-1, -1], 1)],
        ];
        for weights in cases {
            let datum = SolvableDatum::new(2, weights, vec![]).unwrap();
            let lp = check_nc(&datum);
            let mut grid_found = false;
            'outer: for a in &values {
                for b in &values {
                    let xi = RationalVector::new(vec![a.clone(), b.clone()]);
                    if datum.weights().iter().all(|w| w.real_part.dot(&xi).is_negative()) {
                        grid_found = true;
                        break 'outer;
                    }
                }
            }
            if lp.is_none() {
                assert!(!grid_found, "grid found a witness the LP missed");
            } else {
                assert!(grid_found, "grid should confirm an existing witness");
            }
        }
    }

    #[test]
    fn catalog_profiles_satisfy_identities() {
        for class in catalog_instances() {
            let datum = iwasawa_datum(&class).unwrap();
            let sys = RootSystem::build(class.restricted_family().unwrap()).unwrap();
            let xi = default_xi(&sys).unwrap();
            let profile = spectral_profile(&datum, &xi).unwrap();
            let d = profile.dim_total;
            assert_eq!(d, datum.dim_total(), "{class}");
            // trace is the 2ρ evaluation at −ξ
            assert_eq!(profile.h, class.two_rho().unwrap().dot(&xi.neg()), "{class}");
            // conjugacy w_k + W_{D−1−k} = h
            for k in 0..d {
                assert_eq!(&profile.w[k] + &profile.big_w[d - 1 - k], profile.h, "{class} k={k}");
            }
            // (nC) with the default ξ, and (nT)
            assert!(profile.lambdas[..profile.l].iter().all(Rational::is_zero));
            assert!(profile.lambdas[profile.l..].iter().all(Rational::is_positive), "{class}");
            assert!(check_nt(&datum), "{class}");
            let witness = check_nc(&datum).expect("nC witness must exist");
            for w in datum.weights() {
                assert!(w.real_part.dot(&witness).is_negative(), "{class}");
            }
            // monotone partial sums, bounded by h
            for k in 1..d {
                assert!(profile.w[k] >= profile.w[k - 1]);
                assert!(profile.big_w[k] >= profile.big_w[k - 1]);
            }
            assert!(profile.big_w[d - 1 - profile.l] < profile.h, "{class}");
        }
    }

    #[test]
    fn iwasawa_dimension_counts() {
        let bi = RealFormClass::new(CartanLabel::BI, 3, Some(4)).unwrap();
        let datum = iwasawa_datum(&bi).unwrap();
        assert_eq!(datum.n(), 15);
        assert_eq!(datum.dim_total(), 18);
        // default ξ for B_3 solves the simple roots to −1: (−3, −2, −1)
        let sys = RootSystem::build(RootFamily::B(3)).unwrap();
        assert_eq!(default_xi(&sys).unwrap(), rv(&[-3, -2, -1]));

        let ca = RealFormClass::new(CartanLabel::Complex(FamilyTag::A), 1, None).unwrap();
        let datum = iwasawa_datum(&ca).unwrap();
        assert_eq!(datum.weights().len(), 1);
        assert_eq!(datum.weights()[0].multiplicity, 2);
        assert_eq!(datum.dim_total(), 3);

        let ai = RealFormClass::new(CartanLabel::AI, 1, None).unwrap();
        assert_eq!(iwasawa_datum(&ai).unwrap().dim_total(), 2);
    }

    #[test]
    fn threshold_conjugacy() {
        let bi = RealFormClass::new(CartanLabel::BI, 3, Some(4)).unwrap();
        let datum = iwasawa_datum(&bi).unwrap();
        let sys = RootSystem::build(RootFamily::B(3)).unwrap();
        let profile = spectral_profile(&datum, &default_xi(&sys).unwrap()).unwrap();
        let report = exponent_report(&profile).unwrap();
        let t = report.degree_l_threshold.finite().unwrap();
        let dual = report.dual_threshold.finite().unwrap();
        assert_eq!(dual_exponent(t).unwrap(), *dual);
        // w_l + W_{n−1} = h directly
        assert_eq!(&profile.w[profile.l] + &profile.big_w[profile.n - 1], profile.h);
    }

    #[test]
    fn dual_exponent_cases() {
        assert_eq!(dual_exponent(&Rational::int(2)).unwrap(), Rational::int(2));
        assert_eq!(dual_exponent(&Rational::int(3)).unwrap(), Rational::new(3, 2));
        assert_eq!(dual_exponent(&Rational::new(7, 5)).unwrap(), Rational::new(7, 2));
        assert!(dual_exponent(&Rational::one()).is_err());
        // involution on assorted rationals in (1, 10)
        for num in 2..=50i64 {
            let p = Rational::new(num * 7 + 3, num);
            let q = dual_exponent(&p).unwrap();
            assert_eq!(dual_exponent(&q).unwrap(), p);
        }
    }

    #[test]
    fn condition1_examples() {
        let datum = SolvableDatum::new(2, vec![weight(&[1, 0], 1)], vec![]).unwrap();
        assert!(!check_condition1(&datum, &[0], &rv(&[1, 1])).unwrap());
        assert!(check_condition1(&datum, &[0], &rv(&[0, 0])).is_err());
        assert!(check_condition1(&datum, &[], &rv(&[1, 1])).is_err());

        // l = 1: 𝔟 = {0}, vacuously true
        let datum = SolvableDatum::new(1, vec![weight(&[1], 1)], vec![]).unwrap();
        assert!(check_condition1(&datum, &[0], &rv(&[1])).unwrap());

        // Iwasawa data with rho = 2ρ pass for J = all weights
        for class in [
            RealFormClass::new(CartanLabel::BI, 3, Some(5)).unwrap(),
            RealFormClass::new(CartanLabel::EI, 6, None).unwrap(),
            RealFormClass::new(CartanLabel::G, 2, None).unwrap(),
        ] {
            let datum = iwasawa_datum(&class).unwrap();
            let all: Vec<usize> = (0..datum.weights().len()).collect();
            assert!(
                check_condition1(&datum, &all, &class.two_rho().unwrap()).unwrap(),
                "{class}"
            );
        }
    }

    #[test]
    fn degenerate_trace_rejected() {
        let datum = SolvableDatum::new(1, vec![weight(&[1], 1)], vec![]).unwrap();
        let profile = spectral_profile(&datum, &rv(&[1])).unwrap();
        assert!(exponent_report(&profile).is_err());
    }

    #[test]
    fn datum_json_round_trip() {
        let datum = SolvableDatum::new(
            2,
            vec![weight(&[1, 0], 2), weight(&[1, 1], 1)],
            vec![],
        )
        .unwrap();
        let json = serde_json::to_string(&datum).unwrap();
        let back: SolvableDatum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, datum);
        // imag defaults to zero, mult must be positive
        let parsed: SolvableDatum = serde_json::from_str(
            r#"{"l":1,"weights":[{"real":["1"],"mult":2}]}"#,
        )
        .unwrap();
        assert!(parsed.weights()[0].imag_part.is_zero());
        assert!(serde_json::from_str::<SolvableDatum>(
            r#"{"l":1,"weights":[{"real":["1"],"mult":0}]}"#
        )
        .is_err());
    }
}
