//! Root systems in explicit Euclidean coordinates.
//!
//! Classical families live in the usual `ε_i` frame (`A_l` inside the
//! sum-zero hyperplane of `R^{l+1}`), the exceptional `E` systems in `R^8`
//! with their defining linear constraints, `F4` in `R^4`, and `G2` in
//! simple-root coordinates `(α1, α2)` — the latter because all the data we
//! consume for `G2` is written in that basis.

use serde::{Deserialize, Serialize};

use crate::exact::{Rational, RationalVector};
use crate::{Error, Result};

/// Family label plus rank. The rank is fixed for the exceptional types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootFamily {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    BC(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl RootFamily {
    pub fn rank(self) -> usize {
        match self {
            RootFamily::A(l)
            | RootFamily::B(l)
            | RootFamily::C(l)
            | RootFamily::D(l)
            | RootFamily::BC(l) => l,
            RootFamily::E6 => 6,
            RootFamily::E7 => 7,
            RootFamily::E8 => 8,
            RootFamily::F4 => 4,
            RootFamily::G2 => 2,
        }
    }

    /// Dimension of the coordinate frame the roots are written in. For
    /// `A_l` and `E6`/`E7` this exceeds the rank; the defining subspace is
    /// recorded by [`RootSystem::ambient_constraints`].
    pub fn ambient_dim(self) -> usize {
        match self {
            RootFamily::A(l) => l + 1,
            RootFamily::B(l) | RootFamily::C(l) | RootFamily::D(l) | RootFamily::BC(l) => l,
            RootFamily::E6 | RootFamily::E7 | RootFamily::E8 => 8,
            RootFamily::F4 => 4,
            RootFamily::G2 => 2,
        }
    }

    fn check_rank(self) -> Result<()> {
        let ok = match self {
            RootFamily::A(l) | RootFamily::BC(l) => l >= 1,
            RootFamily::B(l) | RootFamily::C(l) => l >= 2,
            RootFamily::D(l) => l >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("illegal rank for {self}")))
        }
    }
}

impl std::fmt::Display for RootFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootFamily::A(l) => write!(f, "A{l}"),
            RootFamily::B(l) => write!(f, "B{l}"),
            RootFamily::C(l) => write!(f, "C{l}"),
            RootFamily::D(l) => write!(f, "D{l}"),
            RootFamily::BC(l) => write!(f, "BC{l}"),
            RootFamily::E6 => write!(f, "E6"),
            RootFamily::E7 => write!(f, "E7"),
            RootFamily::E8 => write!(f, "E8"),
            RootFamily::F4 => write!(f, "F4"),
            RootFamily::G2 => write!(f, "G2"),
        }
    }
}

/// Weyl-invariant norm class of a root: `Tau` is the norm-1 class (τ),
/// `Sigma` the norm-√2 class (σ), `Kappa` the norm-2 class (κ).
/// Simply-laced systems use `Sigma` for their single class; `G2` has its
/// own short/long pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NormClass {
    Tau,
    Sigma,
    Kappa,
    GShort,
    GLong,
}

impl NormClass {
    pub fn symbol(self) -> &'static str {
        match self {
            NormClass::Tau => "tau",
            NormClass::Sigma => "sigma",
            NormClass::Kappa => "kappa",
            NormClass::GShort => "short",
            NormClass::GLong => "long",
        }
    }
}

impl std::fmt::Display for NormClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A positive root system with norm-class bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: RootFamily,
    /// Positive roots with their class, sorted lexicographically by
    /// coordinates so every listing and certificate is deterministic.
    positive: Vec<(RationalVector, NormClass)>,
    simple: Vec<RationalVector>,
    /// Rows `c` with `c · x = 0` cutting out the span of the roots inside
    /// the ambient frame (empty when the roots span the whole frame).
    constraints: Vec<RationalVector>,
}

fn basis(d: usize, i: usize) -> RationalVector {
    RationalVector::basis(d, i)
}

impl RootSystem {
    pub fn build(family: RootFamily) -> Result<Self> {
        family.check_rank()?;
        let d = family.ambient_dim();
        let mut positive: Vec<(RationalVector, NormClass)> = Vec::new();
        let mut simple: Vec<RationalVector> = Vec::new();
        let mut constraints: Vec<RationalVector> = Vec::new();

        let push = |v: RationalVector, c: NormClass, positive: &mut Vec<_>| {
            positive.push((v, c));
        };

        match family {
            RootFamily::A(l) => {
                for i in 0..l {
                    for j in i + 1..=l {
                        push(basis(d, i).sub(&basis(d, j)), NormClass::Sigma, &mut positive);
                    }
                }
                for i in 0..l {
                    simple.push(basis(d, i).sub(&basis(d, i + 1)));
                }
                constraints.push(RationalVector::new(vec![Rational::one(); d]));
            }
            RootFamily::B(l) | RootFamily::C(l) | RootFamily::D(l) | RootFamily::BC(l) => {
                let (short, long) = match family {
                    RootFamily::B(_) => (true, false),
                    RootFamily::C(_) => (false, true),
                    RootFamily::BC(_) => (true, true),
                    _ => (false, false),
                };
                if short {
                    for i in 0..l {
                        push(basis(d, i), NormClass::Tau, &mut positive);
                    }
                }
                if long {
                    for i in 0..l {
                        push(basis(d, i).scale(&Rational::int(2)), NormClass::Kappa, &mut positive);
                    }
                }
                for i in 0..l {
                    for j in i + 1..l {
                        push(basis(d, i).sub(&basis(d, j)), NormClass::Sigma, &mut positive);
                        push(basis(d, i).add(&basis(d, j)), NormClass::Sigma, &mut positive);
                    }
                }
                for i in 0..l - 1 {
                    simple.push(basis(d, i).sub(&basis(d, i + 1)));
                }
                match family {
                    RootFamily::B(_) | RootFamily::BC(_) => simple.push(basis(d, l - 1)),
                    RootFamily::C(_) => simple.push(basis(d, l - 1).scale(&Rational::int(2))),
                    RootFamily::D(_) => simple.push(basis(d, l - 2).add(&basis(d, l - 1))),
                    _ => unreachable!(),
                }
            }
            RootFamily::E6 | RootFamily::E7 | RootFamily::E8 => {
                let half = Rational::new(1, 2);
                let pm = |i: usize, j: usize, positive: &mut Vec<_>| {
                    positive.push((basis(d, j).add(&basis(d, i)), NormClass::Sigma));
                    positive.push((basis(d, j).sub(&basis(d, i)), NormClass::Sigma));
                };
                // half-sum roots: `mask` bit i set means a minus sign on ε_{i+1}
                let halves = |top: RationalVector,
                              k: usize,
                              odd: bool,
                              positive: &mut Vec<_>| {
                    for mask in 0u32..(1 << k) {
                        if (mask.count_ones() % 2 == 1) != odd {
                            continue;
                        }
                        let mut v = top.clone();
                        for i in 0..k {
                            if mask & (1 << i) != 0 {
                                v = v.sub(&basis(d, i));
                            } else {
                                v = v.add(&basis(d, i));
                            }
                        }
                        positive.push((v.scale(&half), NormClass::Sigma));
                    }
                };
                match family {
                    RootFamily::E8 => {
                        for i in 0..8 {
                            for j in i + 1..8 {
                                pm(i, j, &mut positive);
                            }
                        }
                        halves(basis(d, 7), 7, false, &mut positive);
                    }
                    RootFamily::E7 => {
                        for i in 0..6 {
                            for j in i + 1..6 {
                                pm(i, j, &mut positive);
                            }
                        }
                        positive.push((basis(d, 7).sub(&basis(d, 6)), NormClass::Sigma));
                        halves(basis(d, 7).sub(&basis(d, 6)), 6, true, &mut positive);
                        constraints.push(basis(d, 6).add(&basis(d, 7)));
                    }
                    RootFamily::E6 => {
                        for i in 0..5 {
                            for j in i + 1..5 {
                                pm(i, j, &mut positive);
                            }
                        }
                        halves(
                            basis(d, 7).sub(&basis(d, 6)).sub(&basis(d, 5)),
                            5,
                            false,
                            &mut positive,
                        );
                        constraints.push(basis(d, 5).sub(&basis(d, 6)));
                        constraints.push(basis(d, 6).add(&basis(d, 7)));
                    }
                    _ => unreachable!(),
                }
                // Bourbaki simple roots α1..α8 (truncated for E7/E6)
                let mut alpha = vec![{
                    let mut v = basis(d, 0).add(&basis(d, 7));
                    for i in 1..7 {
                        v = v.sub(&basis(d, i));
                    }
                    v.scale(&half)
                }];
                alpha.push(basis(d, 0).add(&basis(d, 1)));
                for i in 0..6 {
                    alpha.push(basis(d, i + 1).sub(&basis(d, i)));
                }
                simple = alpha[..family.rank()].to_vec();
            }
            RootFamily::F4 => {
                let half = Rational::new(1, 2);
                for i in 0..4 {
                    push(basis(d, i), NormClass::Tau, &mut positive);
                    for j in i + 1..4 {
                        push(basis(d, i).sub(&basis(d, j)), NormClass::Sigma, &mut positive);
                        push(basis(d, i).add(&basis(d, j)), NormClass::Sigma, &mut positive);
                    }
                }
                for mask in 0u32..8 {
                    let mut v = basis(d, 0);
                    for i in 0..3 {
                        if mask & (1 << i) != 0 {
                            v = v.sub(&basis(d, i + 1));
                        } else {
                            v = v.add(&basis(d, i + 1));
                        }
                    }
                    push(v.scale(&half), NormClass::Tau, &mut positive);
                }
                simple = vec![
                    basis(d, 1).sub(&basis(d, 2)),
                    basis(d, 2).sub(&basis(d, 3)),
                    basis(d, 3),
                    basis(d, 0)
                        .sub(&basis(d, 1))
                        .sub(&basis(d, 2))
                        .sub(&basis(d, 3))
                        .scale(&half),
                ];
            }
            RootFamily::G2 => {
                for (a, b) in [(1, 0), (1, 1), (2, 1)] {
                    push(RationalVector::from_ints(&[a, b]), NormClass::GShort, &mut positive);
                }
                for (a, b) in [(0, 1), (3, 1), (3, 2)] {
                    push(RationalVector::from_ints(&[a, b]), NormClass::GLong, &mut positive);
                }
                simple = vec![
                    RationalVector::from_ints(&[1, 0]),
                    RationalVector::from_ints(&[0, 1]),
                ];
            }
        }

        positive.sort_by(|a, b| a.0.cmp(&b.0));
        debug_assert!(positive.windows(2).all(|w| w[0].0 != w[1].0));
        Ok(RootSystem {
            family,
            positive,
            simple,
            constraints,
        })
    }

    pub fn family(&self) -> RootFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.family.ambient_dim()
    }

    /// Positive roots with their norm class, in canonical (lexicographic)
    /// order.
    pub fn positive_roots(&self) -> &[(RationalVector, NormClass)] {
        &self.positive
    }

    pub fn roots_in_class(&self, class: NormClass) -> Vec<&RationalVector> {
        self.positive
            .iter()
            .filter(|(_, c)| *c == class)
            .map(|(v, _)| v)
            .collect()
    }

    /// Norm classes present, in τ < σ < κ (< short < long) order.
    pub fn classes(&self) -> Vec<NormClass> {
        let mut cs: Vec<NormClass> = self.positive.iter().map(|(_, c)| *c).collect();
        cs.sort();
        cs.dedup();
        cs
    }

    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.simple
    }

    pub fn ambient_constraints(&self) -> &[RationalVector] {
        &self.constraints
    }

    /// True iff `v` or `-v` is a positive root.
    pub fn is_root(&self, v: &RationalVector) -> bool {
        if v.dim() != self.ambient_dim() {
            return false;
        }
        self.find(v).is_some() || self.find(&v.neg()).is_some()
    }

    /// True iff `v` itself is among the positive roots.
    pub fn is_positive_root(&self, v: &RationalVector) -> bool {
        v.dim() == self.ambient_dim() && self.find(v).is_some()
    }

    fn find(&self, v: &RationalVector) -> Option<usize> {
        self.positive.binary_search_by(|(r, _)| r.cmp(v)).ok()
    }

    /// Exact sum of all positive roots in the class.
    pub fn norm_class_sum(&self, class: NormClass) -> Result<RationalVector> {
        let roots = self.roots_in_class(class);
        if roots.is_empty() {
            return Err(Error::domain(format!(
                "norm class {class} absent from {}",
                self.family
            )));
        }
        let mut sum = RationalVector::zero(self.ambient_dim());
        for r in roots {
            sum = sum.add(r);
        }
        Ok(sum)
    }

    /// Sum of all positive roots (all classes).
    pub fn positive_sum(&self) -> RationalVector {
        let mut sum = RationalVector::zero(self.ambient_dim());
        for (r, _) in &self.positive {
            sum = sum.add(r);
        }
        sum
    }

    /// Inner product in the frame the roots are written in: the standard
    /// dot product everywhere except `G2`, whose simple-root coordinates
    /// carry the Gram matrix `[[2,-3],[-3,6]]`.
    pub fn pairing(&self, u: &RationalVector, v: &RationalVector) -> Rational {
        match self.family {
            RootFamily::G2 => {
                let g = [[2i64, -3], [-3, 6]];
                let mut s = Rational::zero();
                for i in 0..2 {
                    for j in 0..2 {
                        s += &(&(u.get(i) * &Rational::int(g[i][j])) * v.get(j));
                    }
                }
                s
            }
            _ => u.dot(v),
        }
    }
}
