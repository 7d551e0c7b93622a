//! Ψ-certificates: subsets of positive roots with strictly positive
//! coefficients summing to `2ρ_G`, spanning the restricted root space,
//! and with (almost) no pair summing to a root.
//!
//! The three entry points are [`construct_certificate`] (the known
//! type-by-type constructions), [`verify_certificate`] (independent exact
//! re-checking of every condition), and [`search_certificate`] (exhaustive
//! subset enumeration, used as an oracle against the constructions).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cartan::RealFormClass;
use crate::exact::{cone_is_trivial, solve_strict_positive, Rational, RationalMatrix, RationalVector};
use crate::roots::{NormClass, RootFamily, RootSystem};
use crate::{Error, Result};

/// Whether condition (iii) holds outright or with the single permitted
/// root-sum pair (condition (iii)′).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    Strict,
    Relaxed,
}

impl std::fmt::Display for Strictness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strictness::Strict => "strict",
            Strictness::Relaxed => "relaxed",
        })
    }
}

/// A certificate `Ψ ⊆ Φ⁺` with coefficients `m_β > 0` and
/// `Σ m_β β = 2ρ_G`. Roots are kept in canonical (lexicographic) order;
/// `offending_pair` indexes into `roots` and is present iff `strictness`
/// is relaxed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiCertificate {
    /// The class this certificate decomposes; absent for searched
    /// certificates, which only know the system and the target vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<RealFormClass>,
    pub roots: Vec<RationalVector>,
    pub coeffs: Vec<Rational>,
    pub strictness: Strictness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending_pair: Option<(usize, usize)>,
}

impl PsiCertificate {
    /// Sort roots lexicographically, carrying coefficients and the
    /// offending-pair indices along.
    pub fn canonicalize(&mut self) {
        let mut perm: Vec<usize> = (0..self.roots.len()).collect();
        perm.sort_by(|&a, &b| self.roots[a].cmp(&self.roots[b]));
        let inv: Vec<usize> = {
            let mut inv = vec![0; perm.len()];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new;
            }
            inv
        };
        self.roots = perm.iter().map(|&i| self.roots[i].clone()).collect();
        self.coeffs = perm.iter().map(|&i| self.coeffs[i].clone()).collect();
        self.offending_pair = self.offending_pair.map(|(i, j)| {
            let (a, b) = (inv[i], inv[j]);
            (a.min(b), a.max(b))
        });
    }
}

/// Outcome of condition (iii) on a root subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IiiOutcome {
    Strict,
    Relaxed,
    Fail,
}

/// Result of re-checking every condition of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// `Σ m_β β = 2ρ_G` with every `m_β > 0`.
    pub cond_i: bool,
    /// `Σ m_β β − 2ρ_G`, zero iff `cond_i` (given positive coefficients).
    pub residual: RationalVector,
    /// Ψ spans the restricted root space.
    pub cond_ii: bool,
    pub span_rank: usize,
    pub required_rank: usize,
    pub cond_iii: IiiOutcome,
    /// Every unordered pair `{β, β′} ⊆ Ψ` (including `β = β′`) whose sum
    /// is a root, as index pairs `(i, j)` with `i ≤ j`.
    pub root_sum_pairs: Vec<(usize, usize)>,
    /// The cone `{X ∈ 𝔟 : β(X) ≤ 0 ∀ β ∈ Ψ}` is trivial, where
    /// `𝔟 = ker 2ρ_G` inside the restricted root space.
    pub cond_1: bool,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_1 && self.cond_iii != IiiOutcome::Fail
    }

    /// The strictness level actually achieved, if the report passes.
    pub fn strictness(&self) -> Option<Strictness> {
        if !self.all_pass() {
            return None;
        }
        Some(match self.cond_iii {
            IiiOutcome::Strict => Strictness::Strict,
            IiiOutcome::Relaxed => Strictness::Relaxed,
            IiiOutcome::Fail => unreachable!(),
        })
    }

    /// Pass at exactly the claimed strictness, with a matching offending
    /// pair when relaxed.
    pub fn passes_as_claimed(&self, cert: &PsiCertificate) -> bool {
        self.strictness() == Some(cert.strictness)
            && match cert.strictness {
                Strictness::Strict => cert.offending_pair.is_none(),
                Strictness::Relaxed => {
                    self.root_sum_pairs.len() == 1
                        && cert.offending_pair == Some(self.root_sum_pairs[0])
                }
            }
    }
}

/// All unordered pairs (including doubled roots) whose sum is again a
/// root.
pub fn root_sum_pairs(sys: &RootSystem, roots: &[RationalVector]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..roots.len() {
        for j in i..roots.len() {
            if sys.is_root(&roots[i].add(&roots[j])) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// The linear form `v` as a row in ambient coordinates, with respect to
/// the system's pairing (identical to `v` except in `G2`, where the Gram
/// matrix intervenes).
fn pairing_row(sys: &RootSystem, v: &RationalVector) -> RationalVector {
    let d = sys.ambient_dim();
    RationalVector::new(
        (0..d)
            .map(|j| sys.pairing(v, &RationalVector::basis(d, j)))
            .collect(),
    )
}

/// Condition (1): every nonzero `X` in `𝔟 = {X ∈ 𝔞 : 2ρ_G(X) = 0}` has
/// `β(X) > 0` for some `β ∈ Ψ`, i.e. the cone `{β(X) ≤ 0 ∀β}` inside `𝔟`
/// is trivial. Vacuously true when `𝔟 = {0}`.
pub fn condition1(sys: &RootSystem, target: &RationalVector, roots: &[RationalVector]) -> bool {
    let mut rows: Vec<RationalVector> = sys.ambient_constraints().to_vec();
    rows.push(pairing_row(sys, target));
    let basis = RationalMatrix::new(rows)
        .expect("constraint rows share the ambient frame")
        .kernel_basis();
    if basis.is_empty() {
        return true;
    }
    let restricted = RationalMatrix::new(
        roots
            .iter()
            .map(|b| RationalVector::new(basis.iter().map(|x| sys.pairing(b, x)).collect()))
            .collect(),
    )
    .expect("restricted rows share the kernel frame");
    cone_is_trivial(&restricted)
}

/// Re-check all conditions of a certificate against a system and target.
pub fn verify_certificate(
    sys: &RootSystem,
    target: &RationalVector,
    cert: &PsiCertificate,
) -> Result<VerificationReport> {
    if cert.roots.len() != cert.coeffs.len() {
        return Err(Error::domain("certificate root/coefficient length mismatch"));
    }
    for (i, r) in cert.roots.iter().enumerate() {
        if !sys.is_positive_root(r) {
            return Err(Error::domain(format!("{r} is not a positive root of {}", sys.family())));
        }
        if cert.roots[..i].contains(r) {
            return Err(Error::domain(format!("duplicate root {r} in certificate")));
        }
    }

    let mut sum = RationalVector::zero(sys.ambient_dim());
    for (m, b) in cert.coeffs.iter().zip(&cert.roots) {
        sum = sum.add(&b.scale(m));
    }
    let residual = sum.sub(target);
    let cond_i = residual.is_zero() && cert.coeffs.iter().all(|m| m.is_positive());

    let span_rank = if cert.roots.is_empty() {
        0
    } else {
        RationalMatrix::new(cert.roots.clone())?.rank()
    };
    let required_rank = sys.rank();
    let cond_ii = span_rank == required_rank;

    let root_sum_pairs = root_sum_pairs(sys, &cert.roots);
    let cond_iii = match root_sum_pairs.len() {
        0 => IiiOutcome::Strict,
        1 => IiiOutcome::Relaxed,
        _ => IiiOutcome::Fail,
    };

    let cond_1 = condition1(sys, target, &cert.roots);

    Ok(VerificationReport {
        cond_i,
        residual,
        cond_ii,
        span_rank,
        required_rank,
        cond_iii,
        root_sum_pairs,
        cond_1,
    })
}

/// The strictness level the type-by-type constructions achieve: relaxed
/// exactly for the `D_l`-, `E6`- and even-`A_l`-restricted classes.
pub fn expected_strictness(class: &RealFormClass) -> Result<Strictness> {
    Ok(match class.restricted_family()? {
        RootFamily::D(_) | RootFamily::E6 => Strictness::Relaxed,
        RootFamily::A(l) if l % 2 == 0 => Strictness::Relaxed,
        _ => Strictness::Strict,
    })
}

/// Build the known certificate for a class.
pub fn construct_certificate(class: &RealFormClass) -> Result<PsiCertificate> {
    let fam = class.restricted_family()?;
    let sys = RootSystem::build(fam)?;
    let target = class.two_rho()?;
    let mult = class.multiplicities()?;
    let d = fam.ambient_dim();
    let e = |i: usize| RationalVector::basis(d, i);
    let pair = |i: usize, j: usize| e(i).add(&e(j));

    // `roots` plus either explicit coefficients or `None` to solve them
    let (roots, explicit): (Vec<RationalVector>, Option<Vec<i64>>) = match fam {
        RootFamily::A(l) => {
            // Ψ built from the differences ε_i − ε_j of span ≥ k (l odd,
            // l = 2k−1) or of span strictly between k and l together with
            // the two half-spans through ε_{k+1} (l even, l = 2k)
            let mut roots = Vec::new();
            let mut cs = Vec::new();
            if l % 2 == 1 {
                let k = (l + 1) / 2;
                for i in 0..=l {
                    for j in i + 1..=l {
                        if j - i >= k {
                            roots.push(e(i).sub(&e(j)));
                            cs.push(if j - i > k { 2 } else { 1 });
                        }
                    }
                }
            } else {
                let k = l / 2;
                for i in 0..=l {
                    for j in i + 1..=l {
                        if j - i > k && j - i < l {
                            roots.push(e(i).sub(&e(j)));
                            cs.push(2);
                        }
                    }
                }
                roots.push(e(0).sub(&e(k)));
                cs.push(2);
                roots.push(e(k).sub(&e(l)));
                cs.push(2);
            }
            let scale = mult[&NormClass::Sigma] as i64;
            (roots, Some(cs.into_iter().map(|c| c * scale).collect()))
        }
        RootFamily::B(l) => {
            let mut roots = vec![e(0)];
            roots.extend((0..l - 1).map(|j| pair(j, j + 1)));
            (roots, None)
        }
        RootFamily::C(l) | RootFamily::BC(l) => {
            ((0..l).map(|j| e(j).scale(&Rational::int(2))).collect(), None)
        }
        RootFamily::D(l) => {
            let mut roots: Vec<RationalVector> = (0..l - 1).map(|j| pair(j, j + 1)).collect();
            roots.push(e(0).add(&e(l - 1)));
            roots.push(e(0).sub(&e(l - 1)));
            (roots, None)
        }
        RootFamily::E6 => {
            // β_i = ½(v + Σ s_i ε_i) with v = ε8 − ε7 − ε6
            let v = e(7).sub(&e(6)).sub(&e(5));
            let beta = |signs: [i64; 5]| {
                let mut b = v.clone();
                for (i, s) in signs.into_iter().enumerate() {
                    b = b.add(&e(i).scale(&Rational::int(s)));
                }
                b.scale(&Rational::new(1, 2))
            };
            let roots = vec![
                beta([1, 1, 1, 1, 1]),
                beta([-1, -1, 1, 1, 1]),
                beta([-1, 1, 1, 1, -1]),
                beta([1, -1, -1, 1, 1]),
                beta([-1, -1, -1, -1, 1]),
                e(4).sub(&e(0)),
                e(0).add(&e(4)),
            ];
            let scale = mult[&NormClass::Sigma] as i64;
            (roots, Some([6, 2, 4, 2, 2, 2, 2].map(|c| c * scale).to_vec()))
        }
        RootFamily::E7 => {
            let roots = vec![
                pair(1, 2),
                pair(2, 3),
                pair(3, 4),
                pair(4, 5),
                pair(5, 0),
                e(5).sub(&e(0)),
                e(7).sub(&e(6)),
            ];
            let scale = mult[&NormClass::Sigma] as i64;
            (roots, Some([2, 2, 4, 4, 3, 3, 17].map(|c| c * scale).to_vec()))
        }
        RootFamily::E8 => {
            let roots = vec![
                pair(1, 2),
                pair(2, 3),
                pair(3, 4),
                pair(4, 5),
                pair(5, 6),
                pair(6, 7),
                e(7).sub(&e(0)),
                e(7).add(&e(0)),
            ];
            let scale = mult[&NormClass::Sigma] as i64;
            (roots, Some([2, 2, 4, 4, 6, 6, 20, 20].map(|c| c * scale).to_vec()))
        }
        RootFamily::F4 => {
            (vec![e(0), pair(0, 1), pair(1, 2), pair(2, 3)], None)
        }
        RootFamily::G2 => {
            // α1 and the long root 3α1 + 2α2
            let roots = vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[3, 2]),
            ];
            let scale = mult[&NormClass::GShort] as i64;
            (roots, Some([1, 3].map(|c| c * scale).to_vec()))
        }
    };

    let coeffs: Vec<Rational> = match explicit {
        Some(cs) => cs.into_iter().map(Rational::int).collect(),
        None => {
            let mat = RationalMatrix::new(roots.clone())?;
            solve_strict_positive(&mat, &target)?
                .ok_or_else(|| {
                    Error::domain(format!("{class}: no strictly positive decomposition over Ψ"))
                })?
                .0
        }
    };

    let pairs = root_sum_pairs(&sys, &roots);
    let (strictness, offending_pair) = match pairs.as_slice() {
        [] => (Strictness::Strict, None),
        [p] => (Strictness::Relaxed, Some(*p)),
        _ => {
            return Err(Error::domain(format!(
                "{class}: construction has {} root-sum pairs",
                pairs.len()
            )))
        }
    };

    let mut cert = PsiCertificate {
        class: Some(class.clone()),
        roots,
        coeffs,
        strictness,
        offending_pair,
    };
    cert.canonicalize();
    Ok(cert)
}

/// `S` of the σ-decomposition lemma, together with whether the parity
/// identity `σ = 2S + …` holds exactly against the enumerated σ.
pub fn lemma_s(l: usize) -> Result<(RationalVector, bool)> {
    if l < 3 {
        return Err(Error::domain("lemma requires rank at least 3"));
    }
    let e = |i: usize| RationalVector::basis(l, i - 1); // 1-based
    let mut s = RationalVector::zero(l);
    for m in 1..=(l - 2) / 2 {
        let term = e(l - 2 * m + 1)
            .add(&e(l - 2 * m).scale(&Rational::int(2)))
            .add(&e(l - 2 * m - 1));
        s = s.add(&term.scale(&Rational::int(m as i64)));
    }
    let sigma = RootSystem::build(RootFamily::B(l))?.norm_class_sum(NormClass::Sigma)?;
    let rebuilt = if l % 2 == 0 {
        s.scale(&Rational::int(2)).add(&e(1).scale(&Rational::int(l as i64)))
    } else {
        let c = Rational::int(l as i64 - 1);
        s.scale(&Rational::int(2))
            .add(&e(1).add(&e(2)).scale(&c))
            .add(&e(1).scale(&c))
    };
    Ok((s, rebuilt == sigma))
}

fn try_subset(
    sys: &RootSystem,
    target: &RationalVector,
    idxs: &[usize],
    allow_one_pair: bool,
) -> Option<PsiCertificate> {
    let roots: Vec<RationalVector> = idxs
        .iter()
        .map(|&i| sys.positive_roots()[i].0.clone())
        .collect();
    let pairs = root_sum_pairs(sys, &roots);
    if pairs.len() > usize::from(allow_one_pair) {
        return None;
    }
    let mat = RationalMatrix::new(roots.clone()).ok()?;
    if mat.rank() != sys.rank() {
        return None;
    }
    let (coeffs, _) = solve_strict_positive(&mat, target).ok()??;
    let (strictness, offending_pair) = match pairs.as_slice() {
        [] => (Strictness::Strict, None),
        [p] => (Strictness::Relaxed, Some(*p)),
        _ => unreachable!(),
    };
    Some(PsiCertificate {
        class: None,
        roots,
        coeffs,
        strictness,
        offending_pair,
    })
}

/// Exhaustive certificate search: subsets of `Φ⁺` of size `1..=max_size`,
/// enumerated by size then lexicographically; returns up to `limit`
/// certificates in enumeration order. Independent of the constructions —
/// used as an oracle against them.
pub fn search_certificate_seq(
    sys: &RootSystem,
    target: &RationalVector,
    max_size: usize,
    allow_one_pair: bool,
    limit: Option<usize>,
) -> Vec<PsiCertificate> {
    let n = sys.positive_roots().len();
    let cap = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for size in 1..=max_size.min(n) {
        for idxs in (0..n).combinations(size) {
            if out.len() >= cap {
                return out;
            }
            if let Some(cert) = try_subset(sys, target, &idxs, allow_one_pair) {
                out.push(cert);
            }
        }
    }
    out.truncate(cap);
    out
}

/// Parallel variant of [`search_certificate_seq`]; chunked so the output
/// order (and therefore the result set under a `limit`) is identical to
/// the sequential enumeration.
#[cfg(feature = "parallel")]
pub fn search_certificate(
    sys: &RootSystem,
    target: &RationalVector,
    max_size: usize,
    allow_one_pair: bool,
    limit: Option<usize>,
) -> Vec<PsiCertificate> {
    use rayon::prelude::*;

    const CHUNK: usize = 4096;
    let n = sys.positive_roots().len();
    let cap = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for size in 1..=max_size.min(n) {
        let mut combos = (0..n).combinations(size).peekable();
        while combos.peek().is_some() {
            if out.len() >= cap {
                out.truncate(cap);
                return out;
            }
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            let found: Vec<PsiCertificate> = chunk
                .par_iter()
                .filter_map(|idxs| try_subset(sys, target, idxs, allow_one_pair))
                .collect();
            out.extend(found);
        }
    }
    out.truncate(cap);
    out
}

#[cfg(not(feature = "parallel"))]
pub fn search_certificate(
    sys: &RootSystem,
    target: &RationalVector,
    max_size: usize,
    allow_one_pair: bool,
    limit: Option<usize>,
) -> Vec<PsiCertificate> {
    search_certificate_seq(sys, target, max_size, allow_one_pair, limit)
}
