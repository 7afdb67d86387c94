use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// A tri-valued input: JSON `true`, `false` or `"unknown"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Flag {
    True,
    False,
    #[default]
    Unknown,
}

impl Flag {
    pub fn known(self) -> Option<bool> {
        match self {
            Flag::True => Some(true),
            Flag::False => Some(false),
            Flag::Unknown => None,
        }
    }
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::True => "true",
            Flag::False => "false",
            Flag::Unknown => "unknown",
        })
    }
}

impl Serialize for Flag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.known() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for Flag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Flag;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("true, false or \"unknown\"")
            }
            fn visit_bool<E: de::Error>(self, b: bool) -> Result<Flag, E> {
                Ok(b.into())
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Flag, E> {
                match s {
                    "unknown" => Ok(Flag::Unknown),
                    _ => Err(E::invalid_value(de::Unexpected::Str(s), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Algebraic,
    Topological,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietyKind {
    ProjectiveSpace {
        n: u32,
    },
    /// `G(r, n)`: `r`-dimensional subspaces of an `n`-dimensional space.
    Grassmannian {
        r: u32,
        n: u32,
    },
    Quadric {
        n: u32,
    },
    CompleteIntersection {
        ambient: u32,
        degrees: Vec<u32>,
    },
    /// Generic K3 surface whose ample generator has self-intersection `d`.
    K3Generic {
        d: i64,
    },
    K3TwoDisjointRationalCurves,
    AbelianSurface,
    Enriques,
    HyperellipticSurface,
    RuledSurface,
    EllipticSurfaceWithSection,
    Curve {
        genus: u32,
    },
    Product(Vec<VarietySpec>),
    Sphere {
        n: u32,
    },
    LieGroup {
        dim: u32,
        point_property: Flag,
    },
    CubicThreefold,
    FakeP2,
    AbelianVariety {
        g: u32,
    },
    /// Picard group `Z` with `omega = O(index)`.
    PicZGeneral {
        dim: u32,
        index: i64,
    },
}

impl VarietyKind {
    pub fn tag(&self) -> &'static str {
        match self {
            VarietyKind::ProjectiveSpace { .. } => "projective_space",
            VarietyKind::Grassmannian { .. } => "grassmannian",
            VarietyKind::Quadric { .. } => "quadric",
            VarietyKind::CompleteIntersection { .. } => "complete_intersection",
            VarietyKind::K3Generic { .. } => "k3_generic",
            VarietyKind::K3TwoDisjointRationalCurves => "k3_two_disjoint_rational_curves",
            VarietyKind::AbelianSurface => "abelian_surface",
            VarietyKind::Enriques => "enriques",
            VarietyKind::HyperellipticSurface => "hyperelliptic_surface",
            VarietyKind::RuledSurface => "ruled_surface",
            VarietyKind::EllipticSurfaceWithSection => "elliptic_surface_with_section",
            VarietyKind::Curve { .. } => "curve",
            VarietyKind::Product(_) => "product",
            VarietyKind::Sphere { .. } => "sphere",
            VarietyKind::LieGroup { .. } => "lie_group",
            VarietyKind::CubicThreefold => "cubic_threefold",
            VarietyKind::FakeP2 => "fake_p2",
            VarietyKind::AbelianVariety { .. } => "abelian_variety",
            VarietyKind::PicZGeneral { .. } => "pic_z_general",
        }
    }

    /// Complex dimension for varieties, real dimension for spheres and Lie groups.
    pub fn dimension(&self) -> u32 {
        match self {
            VarietyKind::ProjectiveSpace { n } | VarietyKind::Quadric { n } => *n,
            VarietyKind::Grassmannian { r, n } => r * (n - r),
            VarietyKind::CompleteIntersection { ambient, degrees } => ambient - degrees.len() as u32,
            VarietyKind::K3Generic { .. }
            | VarietyKind::K3TwoDisjointRationalCurves
            | VarietyKind::AbelianSurface
            | VarietyKind::Enriques
            | VarietyKind::HyperellipticSurface
            | VarietyKind::RuledSurface
            | VarietyKind::EllipticSurfaceWithSection
            | VarietyKind::FakeP2 => 2,
            VarietyKind::Curve { .. } => 1,
            VarietyKind::Product(fs) => fs.iter().map(|f| f.kind.dimension()).sum(),
            VarietyKind::Sphere { n } => *n,
            VarietyKind::LieGroup { dim, .. } => *dim,
            VarietyKind::CubicThreefold => 3,
            VarietyKind::AbelianVariety { g } => *g,
            VarietyKind::PicZGeneral { dim, .. } => *dim,
        }
    }
}

/// A catalog entry plus input flags. Omitted flags are `unknown`; the mode
/// defaults to topological for spheres and algebraic otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct VarietySpec {
    pub kind: VarietyKind,
    pub pic_finitely_generated: Flag,
    pub ample_generator_has_section: Flag,
    pub h1_mod2_zero: Flag,
    pub mode: Mode,
}

impl VarietySpec {
    pub fn new(kind: VarietyKind) -> Self {
        let mode = match kind {
            VarietyKind::Sphere { .. } => Mode::Topological,
            _ => Mode::Algebraic,
        };
        VarietySpec {
            kind,
            pic_finitely_generated: Flag::Unknown,
            ample_generator_has_section: Flag::Unknown,
            h1_mod2_zero: Flag::Unknown,
            mode,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_section_flag(mut self, flag: Flag) -> Self {
        self.ample_generator_has_section = flag;
        self
    }

    pub fn with_pic_flag(mut self, flag: Flag) -> Self {
        self.pic_finitely_generated = flag;
        self
    }

    pub fn with_h1_flag(mut self, flag: Flag) -> Self {
        self.h1_mod2_zero = flag;
        self
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawSpec {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    g: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point_property: Option<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<VarietySpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pic_finitely_generated: Option<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ample_generator_has_section: Option<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h1_mod2_zero: Option<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<Mode>,
}

const KINDS: &[&str] = &[
    "projective_space",
    "grassmannian",
    "quadric",
    "complete_intersection",
    "k3_generic",
    "quartic_surface_generic",
    "k3_two_disjoint_rational_curves",
    "abelian_surface",
    "enriques",
    "hyperelliptic_surface",
    "ruled_surface",
    "elliptic_surface_with_section",
    "curve",
    "product",
    "sphere",
    "lie_group",
    "cubic_threefold",
    "fake_p2",
    "abelian_variety",
    "pic_z_general",
];

impl RawSpec {
    fn present(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        macro_rules! check {
            ($($f:ident),*) => { $( if self.$f.is_some() { v.push(stringify!($f)); } )* };
        }
        check!(n, r, degrees, d, g, dim, index, genus, point_property, factors);
        v
    }
}

fn need<T: Copy>(field: Option<T>, name: &str, kind: &str) -> Result<T, String> {
    field.ok_or_else(|| format!("kind `{kind}` requires field `{name}`"))
}

fn positive(value: u32, name: &str) -> Result<u32, String> {
    if value == 0 {
        Err(format!("`{name}` must be >= 1"))
    } else {
        Ok(value)
    }
}

impl TryFrom<RawSpec> for VarietySpec {
    type Error = String;

    fn try_from(raw: RawSpec) -> Result<Self, String> {
        let k = raw.kind.as_str();
        let (kind, used): (VarietyKind, &[&str]) = match k {
            "projective_space" => (
                VarietyKind::ProjectiveSpace {
                    n: positive(need(raw.n, "n", k)?, "n")?,
                },
                &["n"],
            ),
            "grassmannian" => {
                let (r, n) = (need(raw.r, "r", k)?, need(raw.n, "n", k)?);
                if r == 0 || r >= n {
                    return Err(format!("grassmannian needs 0 < r < n, got r={r}, n={n}"));
                }
                (VarietyKind::Grassmannian { r, n }, &["r", "n"])
            }
            "quadric" => (
                VarietyKind::Quadric {
                    n: positive(need(raw.n, "n", k)?, "n")?,
                },
                &["n"],
            ),
            "complete_intersection" => {
                let ambient = need(raw.n, "n", k)?;
                let degrees = raw
                    .degrees
                    .clone()
                    .ok_or("kind `complete_intersection` requires field `degrees`")?;
                if degrees.contains(&0) {
                    return Err("multidegrees must be positive".into());
                }
                if degrees.len() as u32 >= ambient {
                    return Err(format!(
                        "{} equations in P^{ambient} leave no positive-dimensional variety",
                        degrees.len()
                    ));
                }
                (
                    VarietyKind::CompleteIntersection { ambient, degrees },
                    &["n", "degrees"],
                )
            }
            "k3_generic" | "quartic_surface_generic" => {
                let d = if k == "quartic_surface_generic" {
                    let d = raw.d.unwrap_or(4);
                    if d != 4 {
                        return Err(format!("a quartic surface has d = 4, got {d}"));
                    }
                    d
                } else {
                    need(raw.d, "d", k)?
                };
                if d <= 0 || d % 2 != 0 {
                    return Err(format!("K3 degree d = H^2 must be positive and even, got {d}"));
                }
                (VarietyKind::K3Generic { d }, &["d"])
            }
            "k3_two_disjoint_rational_curves" => (VarietyKind::K3TwoDisjointRationalCurves, &[]),
            "abelian_surface" => (VarietyKind::AbelianSurface, &[]),
            "enriques" => (VarietyKind::Enriques, &[]),
            "hyperelliptic_surface" => (VarietyKind::HyperellipticSurface, &[]),
            "ruled_surface" => (VarietyKind::RuledSurface, &[]),
            "elliptic_surface_with_section" => (VarietyKind::EllipticSurfaceWithSection, &[]),
            "curve" => (
                VarietyKind::Curve {
                    genus: need(raw.genus, "genus", k)?,
                },
                &["genus"],
            ),
            "product" => {
                let factors = raw.factors.clone().ok_or("kind `product` requires field `factors`")?;
                if factors.len() < 2 {
                    return Err("a product needs at least two factors".into());
                }
                (VarietyKind::Product(factors), &["factors"])
            }
            "sphere" => (
                VarietyKind::Sphere {
                    n: positive(need(raw.n, "n", k)?, "n")?,
                },
                &["n"],
            ),
            "lie_group" => (
                VarietyKind::LieGroup {
                    dim: positive(need(raw.dim, "dim", k)?, "dim")?,
                    point_property: raw.point_property.unwrap_or_default(),
                },
                &["dim", "point_property"],
            ),
            "cubic_threefold" => (VarietyKind::CubicThreefold, &[]),
            "fake_p2" => (VarietyKind::FakeP2, &[]),
            "abelian_variety" => (
                VarietyKind::AbelianVariety {
                    g: positive(need(raw.g, "g", k)?, "g")?,
                },
                &["g"],
            ),
            "pic_z_general" => (
                VarietyKind::PicZGeneral {
                    dim: positive(need(raw.dim, "dim", k)?, "dim")?,
                    index: need(raw.index, "index", k)?,
                },
                &["dim", "index"],
            ),
            other => {
                return Err(format!(
                    "unknown kind `{other}` (expected one of: {})",
                    KINDS.join(", ")
                ));
            }
        };
        if let Some(extra) = raw.present().into_iter().find(|f| !used.contains(f)) {
            return Err(format!("field `{extra}` is not used by kind `{k}`"));
        }
        if let Some(m) = raw.mode {
            if matches!(kind, VarietyKind::Sphere { .. }) && m == Mode::Algebraic {
                return Err("spheres only have topological diagonal properties".into());
            }
        }
        let mut spec = VarietySpec::new(kind);
        spec.pic_finitely_generated = raw.pic_finitely_generated.unwrap_or_default();
        spec.ample_generator_has_section = raw.ample_generator_has_section.unwrap_or_default();
        spec.h1_mod2_zero = raw.h1_mod2_zero.unwrap_or_default();
        if let Some(m) = raw.mode {
            spec.mode = m;
        }
        Ok(spec)
    }
}

impl From<VarietySpec> for RawSpec {
    fn from(spec: VarietySpec) -> Self {
        let flag = |f: Flag| (f != Flag::Unknown).then_some(f);
        let mut raw = RawSpec {
            kind: spec.kind.tag().to_string(),
            pic_finitely_generated: flag(spec.pic_finitely_generated),
            ample_generator_has_section: flag(spec.ample_generator_has_section),
            h1_mod2_zero: flag(spec.h1_mod2_zero),
            mode: Some(spec.mode),
            ..Default::default()
        };
        match spec.kind {
            VarietyKind::ProjectiveSpace { n } | VarietyKind::Quadric { n } | VarietyKind::Sphere { n } => {
                raw.n = Some(n)
            }
            VarietyKind::Grassmannian { r, n } => {
                raw.r = Some(r);
                raw.n = Some(n);
            }
            VarietyKind::CompleteIntersection { ambient, degrees } => {
                raw.n = Some(ambient);
                raw.degrees = Some(degrees);
            }
            VarietyKind::K3Generic { d } => raw.d = Some(d),
            VarietyKind::Curve { genus } => raw.genus = Some(genus),
            VarietyKind::Product(factors) => raw.factors = Some(factors),
            VarietyKind::LieGroup { dim, point_property } => {
                raw.dim = Some(dim);
                raw.point_property = Some(point_property);
            }
            VarietyKind::AbelianVariety { g } => raw.g = Some(g),
            VarietyKind::PicZGeneral { dim, index } => {
                raw.dim = Some(dim);
                raw.index = Some(index);
            }
            VarietyKind::K3TwoDisjointRationalCurves
            | VarietyKind::AbelianSurface
            | VarietyKind::Enriques
            | VarietyKind::HyperellipticSurface
            | VarietyKind::RuledSurface
            | VarietyKind::EllipticSurfaceWithSection
            | VarietyKind::CubicThreefold
            | VarietyKind::FakeP2 => {}
        }
        raw
    }
}
