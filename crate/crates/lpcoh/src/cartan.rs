//! The catalog of Cartan real-form classes: for each class, the restricted
//! root family and the multiplicity of each norm class, from which `2ρ_G`
//! and the weighted root datum of the Iwasawa solvable group follow.
//!
//! Only classes whose multiplicity formulas are explicitly known are
//! encoded; the catalog is not a reconstruction of the full classification
//! tables. Complex groups appear as `complex-<family>` with every
//! multiplicity equal to 2.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{Rational, RationalVector};
use crate::roots::{NormClass, RootFamily, RootSystem};
use crate::{Error, Result};

/// Family tag without a rank, used by the `complex-<family>` labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl FamilyTag {
    fn with_rank(self, l: usize) -> Result<RootFamily> {
        let fam = match self {
            FamilyTag::A => RootFamily::A(l),
            FamilyTag::B => RootFamily::B(l),
            FamilyTag::C => RootFamily::C(l),
            FamilyTag::D => RootFamily::D(l),
            FamilyTag::E6 => RootFamily::E6,
            FamilyTag::E7 => RootFamily::E7,
            FamilyTag::E8 => RootFamily::E8,
            FamilyTag::F4 => RootFamily::F4,
            FamilyTag::G2 => RootFamily::G2,
        };
        if fam.rank() != l {
            return Err(Error::domain(format!(
                "complex {self:?} has rank {}, not {l}",
                fam.rank()
            )));
        }
        Ok(fam)
    }

    fn slug(self) -> &'static str {
        match self {
            FamilyTag::A => "a",
            FamilyTag::B => "b",
            FamilyTag::C => "c",
            FamilyTag::D => "d",
            FamilyTag::E6 => "e6",
            FamilyTag::E7 => "e7",
            FamilyTag::E8 => "e8",
            FamilyTag::F4 => "f4",
            FamilyTag::G2 => "g2",
        }
    }
}

/// Cartan symbol of a real-form class. The F4-restricted classes are kept
/// as a family parameterized by the exponent `j` of their short-root
/// multiplicity `2^j` rather than by individual Cartan symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanLabel {
    AI,
    AII,
    AIII,
    BI,
    CI,
    CII,
    DI,
    DIII,
    EI,
    EV,
    EVII,
    EVIII,
    F4J(u8),
    G,
    Complex(FamilyTag),
}

impl std::fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CartanLabel::AI => write!(f, "A I"),
            CartanLabel::AII => write!(f, "A II"),
            CartanLabel::AIII => write!(f, "A III"),
            CartanLabel::BI => write!(f, "B I"),
            CartanLabel::CI => write!(f, "C I"),
            CartanLabel::CII => write!(f, "C II"),
            CartanLabel::DI => write!(f, "D I"),
            CartanLabel::DIII => write!(f, "D III"),
            CartanLabel::EI => write!(f, "E I"),
            CartanLabel::EV => write!(f, "E V"),
            CartanLabel::EVII => write!(f, "E VII"),
            CartanLabel::EVIII => write!(f, "E VIII"),
            CartanLabel::F4J(j) => write!(f, "F4 j{j}"),
            CartanLabel::G => write!(f, "G"),
            CartanLabel::Complex(t) => write!(f, "complex {}", t.slug()),
        }
    }
}

impl std::str::FromStr for CartanLabel {
    type Err = Error;

    /// Accepts the spaced Cartan form ("B I", "E VIII", "F4 j2",
    /// "complex a") and slug form ("b-i", "e-viii", "f4-2", "complex-e6"),
    /// case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .to_ascii_lowercase()
            .chars()
            .map(|c| if c == '-' || c == '_' { ' ' } else { c })
            .collect();
        let toks: Vec<&str> = norm.split_whitespace().collect();
        let label = match toks.as_slice() {
            ["a", "i"] => CartanLabel::AI,
            ["a", "ii"] => CartanLabel::AII,
            ["a", "iii"] => CartanLabel::AIII,
            ["b", "i"] => CartanLabel::BI,
            ["c", "i"] => CartanLabel::CI,
            ["c", "ii"] => CartanLabel::CII,
            ["d", "i"] => CartanLabel::DI,
            ["d", "iii"] => CartanLabel::DIII,
            ["e", "i"] => CartanLabel::EI,
            ["e", "v"] => CartanLabel::EV,
            ["e", "vii"] => CartanLabel::EVII,
            ["e", "viii"] => CartanLabel::EVIII,
            ["g"] | ["g2"] => CartanLabel::G,
            ["f4", j] => {
                let j = j.strip_prefix('j').unwrap_or(j);
                let j: u8 = j
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad F4 parameter in {s:?}")))?;
                if j > 3 {
                    return Err(Error::Parse(format!("F4 parameter out of range in {s:?}")));
                }
                CartanLabel::F4J(j)
            }
            ["complex", t] => {
                let tag = match *t {
                    "a" => FamilyTag::A,
                    "b" => FamilyTag::B,
                    "c" => FamilyTag::C,
                    "d" => FamilyTag::D,
                    "e6" => FamilyTag::E6,
                    "e7" => FamilyTag::E7,
                    "e8" => FamilyTag::E8,
                    "f4" => FamilyTag::F4,
                    "g2" => FamilyTag::G2,
                    _ => return Err(Error::Parse(format!("unknown complex family in {s:?}"))),
                };
                CartanLabel::Complex(tag)
            }
            _ => return Err(Error::Parse(format!("unknown class label {s:?}"))),
        };
        Ok(label)
    }
}

impl Serialize for CartanLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which sub-case of a label applies, named by the restricted family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    Plain,
    CRestricted,
    BCRestricted,
    BRestricted,
    DRestricted,
}

/// A concrete real-form class: label plus real rank `l` and, where the
/// multiplicity formulas use it, the complex rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawClass", into = "RawClass")]
pub struct RealFormClass {
    label: CartanLabel,
    l: usize,
    r: Option<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawClass {
    label: CartanLabel,
    l: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
}

impl From<RealFormClass> for RawClass {
    fn from(c: RealFormClass) -> Self {
        RawClass { label: c.label, l: c.l, r: c.r }
    }
}

impl TryFrom<RawClass> for RealFormClass {
    type Error = Error;
    fn try_from(raw: RawClass) -> Result<Self> {
        RealFormClass::new(raw.label, raw.l, raw.r)
    }
}

impl std::fmt::Display for RealFormClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} l={}", self.label, self.l)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        Ok(())
    }
}

fn need_r(label: CartanLabel) -> bool {
    matches!(
        label,
        CartanLabel::AIII | CartanLabel::BI | CartanLabel::CII | CartanLabel::DI | CartanLabel::DIII
    )
}

impl RealFormClass {
    pub fn new(label: CartanLabel, l: usize, r: Option<usize>) -> Result<Self> {
        let class = RealFormClass {
            label,
            l,
            r: if need_r(label) { r } else { None },
        };
        if need_r(label) && r.is_none() {
            return Err(Error::domain(format!("{label} requires the complex rank r")));
        }
        // force the fixed ranks of the exceptional labels
        let fixed = match label {
            CartanLabel::EI => Some(6),
            CartanLabel::EV => Some(7),
            CartanLabel::EVIII => Some(8),
            CartanLabel::EVII => Some(3),
            CartanLabel::F4J(_) => Some(4),
            CartanLabel::G => Some(2),
            _ => None,
        };
        if let Some(fl) = fixed {
            if l != fl {
                return Err(Error::domain(format!("{label} has real rank {fl}, not {l}")));
            }
        }
        class.variant()?; // validates (l, r) ranges
        class.restricted_family()?; // validates family rank
        Ok(class)
    }

    pub fn label(&self) -> CartanLabel {
        self.label
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> Option<usize> {
        self.r
    }

    /// Which restricted-family sub-case the parameters select.
    pub fn variant(&self) -> Result<Variant> {
        let (l, r) = (self.l, self.r);
        let v = match self.label {
            CartanLabel::AIII => {
                let r = r.unwrap();
                if r + 1 == 2 * l {
                    Variant::CRestricted
                } else if r >= 2 * l {
                    Variant::BCRestricted
                } else {
                    return Err(Error::domain(format!("{self}: requires r >= 2l-1")));
                }
            }
            CartanLabel::BI => {
                if r.unwrap() < l {
                    return Err(Error::domain(format!("{self}: requires r >= l")));
                }
                Variant::Plain
            }
            CartanLabel::CII => {
                let r = r.unwrap();
                if r == 2 * l {
                    Variant::CRestricted
                } else if r >= 2 * l + 1 {
                    Variant::BCRestricted
                } else {
                    return Err(Error::domain(format!("{self}: requires r >= 2l")));
                }
            }
            CartanLabel::DI => {
                let r = r.unwrap();
                if r == l {
                    Variant::DRestricted
                } else if r > l {
                    Variant::BRestricted
                } else {
                    return Err(Error::domain(format!("{self}: requires r >= l")));
                }
            }
            CartanLabel::DIII => match r.unwrap() {
                r if r == 2 * l => Variant::CRestricted,
                r if r == 2 * l + 1 => Variant::BCRestricted,
                _ => {
                    return Err(Error::domain(format!(
                        "{self}: requires r = 2l or r = 2l+1"
                    )))
                }
            },
            _ => Variant::Plain,
        };
        Ok(v)
    }

    pub fn restricted_family(&self) -> Result<RootFamily> {
        let l = self.l;
        let fam = match (self.label, self.variant()?) {
            (CartanLabel::AI | CartanLabel::AII, _) => RootFamily::A(l),
            (CartanLabel::BI, _) => RootFamily::B(l),
            (CartanLabel::CI | CartanLabel::EVII, _) => RootFamily::C(l),
            (CartanLabel::EI, _) => RootFamily::E6,
            (CartanLabel::EV, _) => RootFamily::E7,
            (CartanLabel::EVIII, _) => RootFamily::E8,
            (CartanLabel::F4J(_), _) => RootFamily::F4,
            (CartanLabel::G, _) => RootFamily::G2,
            (CartanLabel::Complex(t), _) => t.with_rank(l)?,
            (_, Variant::CRestricted) => RootFamily::C(l),
            (_, Variant::BCRestricted) => RootFamily::BC(l),
            (_, Variant::BRestricted) => RootFamily::B(l),
            (_, Variant::DRestricted) => RootFamily::D(l),
            (label, v) => unreachable!("no family for {label} variant {v:?}"),
        };
        // surface illegal ranks (e.g. C II with l = 1) as a class error
        RootSystem::build(fam)?;
        Ok(fam)
    }

    /// Multiplicity of each norm class, read off the known `2ρ` formulas.
    pub fn multiplicities(&self) -> Result<BTreeMap<NormClass, u64>> {
        use NormClass::*;
        let (l, r) = (self.l as u64, self.r.unwrap_or(0) as u64);
        let pairs: Vec<(NormClass, u64)> = match (self.label, self.variant()?) {
            (CartanLabel::AI, _) => vec![(Sigma, 1)],
            (CartanLabel::AII, _) => vec![(Sigma, 4)],
            (CartanLabel::AIII, Variant::CRestricted) => vec![(Sigma, 2), (Kappa, 1)],
            (CartanLabel::AIII, Variant::BCRestricted) => {
                vec![(Tau, 2 * (r - 2 * l + 1)), (Sigma, 2), (Kappa, 1)]
            }
            (CartanLabel::BI, _) => vec![(Tau, 2 * (r - l) + 1), (Sigma, 1)],
            (CartanLabel::CI, _) => vec![(Sigma, 1), (Kappa, 1)],
            (CartanLabel::CII, Variant::CRestricted) => vec![(Sigma, 4), (Kappa, 3)],
            (CartanLabel::CII, Variant::BCRestricted) => {
                vec![(Tau, 4 * (r - 2 * l)), (Sigma, 4), (Kappa, 3)]
            }
            (CartanLabel::DI, Variant::DRestricted) => vec![(Sigma, 1)],
            (CartanLabel::DI, Variant::BRestricted) => vec![(Tau, 2 * (r - l)), (Sigma, 1)],
            (CartanLabel::DIII, Variant::CRestricted) => vec![(Sigma, 4), (Kappa, 1)],
            (CartanLabel::DIII, Variant::BCRestricted) => vec![(Tau, 4), (Sigma, 4), (Kappa, 1)],
            (CartanLabel::EI | CartanLabel::EV | CartanLabel::EVIII, _) => vec![(Sigma, 1)],
            (CartanLabel::EVII, _) => vec![(Sigma, 8), (Kappa, 1)],
            (CartanLabel::F4J(j), _) => vec![(Tau, 1 << j), (Sigma, 1)],
            (CartanLabel::G, _) => vec![(GShort, 1), (GLong, 1)],
            (CartanLabel::Complex(_), _) => {
                let sys = RootSystem::build(self.restricted_family()?)?;
                sys.classes().into_iter().map(|c| (c, 2)).collect()
            }
            (label, v) => unreachable!("no multiplicities for {label} variant {v:?}"),
        };
        debug_assert!(pairs.iter().all(|&(_, m)| m >= 1));
        Ok(pairs.into_iter().collect())
    }

    pub fn weighted_datum(&self) -> Result<WeightedRootDatum> {
        let system = RootSystem::build(self.restricted_family()?)?;
        let multiplicity = self.multiplicities()?;
        for class in system.classes() {
            if !multiplicity.contains_key(&class) {
                return Err(Error::domain(format!(
                    "{self}: missing multiplicity for class {class}"
                )));
            }
        }
        Ok(WeightedRootDatum { system, multiplicity })
    }

    /// `2ρ_G = Σ_α mult(α) α`, computed as `Σ_class mult · class_sum`.
    pub fn two_rho(&self) -> Result<RationalVector> {
        Ok(self.weighted_datum()?.two_rho())
    }
}

/// A root system together with the norm-class multiplicities of a real
/// form; the weights of the adjoint action on the nilpotent part.
#[derive(Clone, Debug)]
pub struct WeightedRootDatum {
    pub system: RootSystem,
    pub multiplicity: BTreeMap<NormClass, u64>,
}

impl WeightedRootDatum {
    pub fn two_rho(&self) -> RationalVector {
        let mut sum = RationalVector::zero(self.system.ambient_dim());
        for (&class, &m) in &self.multiplicity {
            sum = sum.add(
                &self
                    .system
                    .norm_class_sum(class)
                    .expect("class present by construction")
                    .scale(&Rational::int(m as i64)),
            );
        }
        sum
    }

    /// Total dimension of the nilpotent part: Σ mult(α) over all roots.
    pub fn nilpotent_dim(&self) -> usize {
        self.system
            .positive_roots()
            .iter()
            .map(|(_, c)| self.multiplicity[c] as usize)
            .sum()
    }
}

/// One row of the class catalog, for documentation and `list-classes`.
pub struct CatalogEntry {
    pub label: CartanLabel,
    pub restricted: &'static str,
    pub constraints: &'static str,
    pub multiplicities: &'static str,
    pub note: Option<&'static str>,
}

/// The catalog records E VII twice on purpose: classification tables place
/// it both among the C3-restricted classes and among the F4-restricted
/// multiplicity family. The conflict is flagged rather than resolved; the
/// concrete [`CartanLabel::EVII`] class uses the C3 data, while the F4 row
/// is reachable through the j-parameter family.
pub const E_VII_NOTE: &str =
    "also listed among the F4-restricted classes; this entry uses the C3 data";

pub fn catalog_entries() -> Vec<CatalogEntry> {
    use CartanLabel::*;
    let mut v = vec![
        CatalogEntry { label: AI, restricted: "A_l", constraints: "l >= 1", multiplicities: "sigma:1", note: None },
        CatalogEntry { label: AII, restricted: "A_l", constraints: "l >= 1", multiplicities: "sigma:4", note: None },
        CatalogEntry { label: AIII, restricted: "C_l (r = 2l-1) | BC_l (r >= 2l)", constraints: "r >= 2l-1", multiplicities: "C: sigma:2 kappa:1 | BC: tau:2(r-2l+1) sigma:2 kappa:1", note: None },
        CatalogEntry { label: BI, restricted: "B_l", constraints: "r >= l", multiplicities: "tau:2(r-l)+1 sigma:1", note: None },
        CatalogEntry { label: CI, restricted: "C_l", constraints: "l >= 2", multiplicities: "sigma:1 kappa:1", note: None },
        CatalogEntry { label: CII, restricted: "C_l (r = 2l) | BC_l (r >= 2l+1)", constraints: "r >= 2l", multiplicities: "C: sigma:4 kappa:3 | BC: tau:4(r-2l) sigma:4 kappa:3", note: None },
        CatalogEntry { label: DI, restricted: "D_l (r = l) | B_l (r > l)", constraints: "r >= l", multiplicities: "D: sigma:1 | B: tau:2(r-l) sigma:1", note: None },
        CatalogEntry { label: DIII, restricted: "C_l (r = 2l) | BC_l (r = 2l+1)", constraints: "r in {2l, 2l+1}", multiplicities: "C: sigma:4 kappa:1 | BC: tau:4 sigma:4 kappa:1", note: None },
        CatalogEntry { label: EI, restricted: "E6", constraints: "l = 6", multiplicities: "sigma:1", note: None },
        CatalogEntry { label: EV, restricted: "E7", constraints: "l = 7", multiplicities: "sigma:1", note: None },
        CatalogEntry { label: EVII, restricted: "C_3", constraints: "l = 3", multiplicities: "sigma:8 kappa:1", note: Some(E_VII_NOTE) },
        CatalogEntry { label: EVIII, restricted: "E8", constraints: "l = 8", multiplicities: "sigma:1", note: None },
    ];
    for j in 0..4 {
        v.push(CatalogEntry {
            label: F4J(j),
            restricted: "F4",
            constraints: "l = 4",
            multiplicities: match j {
                0 => "tau:1 sigma:1",
                1 => "tau:2 sigma:1",
                2 => "tau:4 sigma:1",
                _ => "tau:8 sigma:1",
            },
            note: None,
        });
    }
    v.push(CatalogEntry { label: G, restricted: "G2", constraints: "l = 2", multiplicities: "short:1 long:1", note: None });
    for t in [FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::D, FamilyTag::E6, FamilyTag::E7, FamilyTag::E8, FamilyTag::F4, FamilyTag::G2] {
        v.push(CatalogEntry {
            label: Complex(t),
            restricted: "split family",
            constraints: "family rank range",
            multiplicities: "all classes: 2",
            note: None,
        });
    }
    v
}

/// Concrete class instances swept by the batch report: real rank
/// `3 <= l <= 10` for the classical labels (sampling every restricted
/// variant of each label), fixed ranks for the exceptional ones.
pub fn catalog_instances() -> Vec<RealFormClass> {
    let mut out = Vec::new();
    let mut push = |label, l, r| {
        out.push(RealFormClass::new(label, l, r).expect("catalog instance must be legal"));
    };
    for l in 3..=10usize {
        push(CartanLabel::AI, l, None);
        push(CartanLabel::AII, l, None);
        for r in [2 * l - 1, 2 * l, 2 * l + 3] {
            push(CartanLabel::AIII, l, Some(r));
        }
        for r in [l, l + 1, 2 * l, 2 * l + 3] {
            push(CartanLabel::BI, l, Some(r));
        }
        push(CartanLabel::CI, l, None);
        for r in [2 * l, 2 * l + 3] {
            push(CartanLabel::CII, l, Some(r));
        }
        for r in [l, l + 1, 2 * l, 2 * l + 3] {
            push(CartanLabel::DI, l, Some(r));
        }
        for r in [2 * l, 2 * l + 1] {
            push(CartanLabel::DIII, l, Some(r));
        }
    }
    push(CartanLabel::EI, 6, None);
    push(CartanLabel::EV, 7, None);
    push(CartanLabel::EVII, 3, None);
    push(CartanLabel::EVIII, 8, None);
    for j in 0..4 {
        push(CartanLabel::F4J(j), 4, None);
    }
    push(CartanLabel::G, 2, None);
    for l in 3..=10usize {
        for t in [FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::D] {
            push(CartanLabel::Complex(t), l, None);
        }
    }
    for (t, l) in [
        (FamilyTag::E6, 6),
        (FamilyTag::E7, 7),
        (FamilyTag::E8, 8),
        (FamilyTag::F4, 4),
        (FamilyTag::G2, 2),
    ] {
        push(CartanLabel::Complex(t), l, None);
    }
    out
}
