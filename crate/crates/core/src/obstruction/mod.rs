//! Verdicts on the diagonal property and its topological variants.
//!
//! A [`VarietySpec`] names a catalog variety (or manifold) together with
//! tri-valued input flags. [`evaluate`] dispatches to the rule that applies
//! and returns one [`ObstructionReport`] per property, each with an ordered
//! trace of the rules used and the numbers they recomputed.

mod algebraic;
mod candidates;
mod spec;
mod topological;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charclass::CharClassError;
use crate::ring::RingError;
use crate::steenrod::SteenrodError;

pub use algebraic::{diagonal_verdict, point_property_q3_verdict, surface_verdict};
pub use candidates::{chi_line_bundle, coh_trivial_candidates, CandidateTable, TwistStatus};
pub use spec::{Flag, Mode, VarietyKind, VarietySpec};
pub use topological::{
    dc_odd_quadric_verdict, dim4_almost_complex_verdict, odd_dim_manifold_verdict, sphere_verdicts,
    spin_6fold_necessary, spin_ci_threefold_verdict, topological_verdicts,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("flag `{0}` must be true or false for this rule")]
    MissingFlag(String),
    #[error("contradictory input: {0}")]
    ContradictoryFlags(String),
    #[error("unsupported spec `{kind}`; nearest catalog entry: {suggestion}")]
    UnsupportedSpec { kind: String, suggestion: String },
    #[error("expected a threefold, got ambient dimension {ambient} with {equations} equations")]
    WrongDimension { ambient: u32, equations: usize },
    #[error("odd quadric index must be >= 1, got {0}")]
    BadM(u32),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    CharClass(#[from] CharClassError),
    #[error(transparent)]
    Steenrod(#[from] SteenrodError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl ObstructionError {
    /// True for failures caused by the engine rather than by its input.
    pub fn is_internal(&self) -> bool {
        matches!(self, ObstructionError::Internal(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "D")]
    D,
    #[serde(rename = "D_r")]
    Dr,
    #[serde(rename = "D_o")]
    Do,
    #[serde(rename = "D_c")]
    Dc,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::D => "D",
            Property::Dr => "D_r",
            Property::Do => "D_o",
            Property::Dc => "D_c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceEntry {
    pub rule: String,
    pub citation: String,
    pub values: BTreeMap<String, String>,
}

impl TraceEntry {
    pub fn new(rule: &str, citation: &str) -> Self {
        TraceEntry {
            rule: rule.to_string(),
            citation: citation.to_string(),
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionReport {
    pub property: Property,
    pub verdict: Verdict,
    pub trace: Vec<TraceEntry>,
}

impl ObstructionReport {
    pub fn new(property: Property, verdict: Verdict, trace: Vec<TraceEntry>) -> Self {
        ObstructionReport {
            property,
            verdict,
            trace,
        }
    }

    pub fn citations(&self) -> impl Iterator<Item = &str> {
        self.trace.iter().map(|t| t.citation.as_str())
    }
}

/// Combines factor verdicts: a product holds when every factor holds;
/// failures of a factor say nothing about the product.
pub fn product_verdict(factors: &[Verdict]) -> Verdict {
    if factors.iter().all(|v| *v == Verdict::Holds) {
        Verdict::Holds
    } else {
        Verdict::Unknown
    }
}

/// Reports for every property the spec's mode asks about: `D` in the
/// algebraic mode, `D_r`, `D_o`, `D_c` in the topological one.
pub fn evaluate(spec: &VarietySpec) -> Result<Vec<ObstructionReport>, ObstructionError> {
    match spec.mode {
        Mode::Algebraic => Ok(vec![diagonal_verdict(spec)?]),
        Mode::Topological => Ok(topological_verdicts(spec)?.to_vec()),
    }
}

/// Short descriptions of every citation label the rules emit.
pub fn citation_index() -> BTreeMap<&'static str, &'static str> {
    [
        ("Introduction, Grassmannian construction", "tautological bundles on Grassmannians realize the diagonal"),
        ("Introduction, product closure", "the diagonal property passes to products"),
        ("Introduction, curves", "every smooth projective curve has the diagonal property"),
        ("Introduction, cubic threefolds", "open case; a point-property lemma is available"),
        ("Theorem th-surf(c)", "surfaces with a cohomologically trivial line bundle: ruled, abelian, K3 with two disjoint rational curves, elliptic with a section, Enriques, hyperelliptic"),
        ("Theorem th-surf(d)", "Picard group Z with an effective ample generator forces P^2"),
        ("Theorem Tm", "reduction of the diagonal property to line bundle data"),
        ("Prop. Tz", "no cohomologically trivial line bundle on Picard-rank-one surfaces other than P^2"),
        ("Prop. Pk3", "Euler characteristics of line bundles on a generic K3"),
        ("Prop. two", "K3 surfaces with two disjoint smooth rational curves"),
        ("Prop. ruled", "birationally ruled surfaces"),
        ("Prop. bielliptic", "hyperelliptic surfaces"),
        ("Lemma ctl-curves", "curves carry cohomologically trivial line bundles"),
        ("Remark after Prop. Tz", "whether a fake projective plane has (D) is open"),
        ("Prop. fano1", "Picard group Z plus (D) forces Fano index >= 2"),
        ("Prop. fano1, complete-intersection corollary", "complete intersections with sum of degrees >= n"),
        ("Prop. fano1, index-one corollary", "Fano varieties of index one"),
        ("Cor. Lpt", "(D) implies the point property for every twist"),
        ("Prop. quadric1", "non-integral Euler characteristic on Q_3"),
        ("Prop. Pwpp", "group varieties and the weak point property"),
        ("Prop. quadricZ", "cohomology ring of odd quadrics"),
        ("Prop. cherniden2", "mod-2 congruence between Chern numbers on odd quadrics"),
        ("Lemma steenrod2", "Sq^2 on the mod-2 cohomology of odd quadrics"),
        ("Theorem oddquad", "odd quadrics of dimension >= 3 fail (D_c)"),
        ("Theorem oddquad-alg", "odd quadrics of dimension >= 3 fail (D)"),
        ("Remark after Theorem oddquad-alg", "conjecture: Q_n has (D) iff n = 1, 2, 4"),
        ("Closing note", "reported counterexamples for general abelian varieties of dimension > 2"),
        ("Theorem top(1)", "diagonal properties of spheres"),
        ("Theorem prop1", "spheres with (D_r) are those of dimension 1, 2, 4, 8"),
        ("Theorem prop3", "odd-dimensional orientable manifolds"),
        ("Remark proj3rmk", "RP^3 has (D_r) but not (D_o)"),
        ("Theorem dim4", "almost complex 4-manifolds have (D_c)"),
        ("Theorem spinprop2", "(D_c) on 6-manifolds with H^2 = Z forces w_2 = 0"),
        ("Remark spinproprmk", "the hypotheses of the spin criterion are needed"),
        ("Cor. hyperP4", "spin criterion for complete intersection threefolds"),
        ("Cor. compinter", "complete intersections and the spin criterion"),
        ("Remark almcomp", "(D) implies (D_c) implies (D_o) implies (D_r)"),
        ("Remark euler1", "slices of a diagonal bundle realize the point property"),
        ("Lemma cherneven", "parity of c_3 - c_2 (c_1(M) + c_1) on almost complex threefolds"),
        ("Example liegroup", "Lie groups: diagonal property iff point property"),
        ("Example prodexample", "products of manifolds"),
        ("Example projgras", "real and complex Grassmannians"),
        ("Example riemsurf", "compact Riemann surfaces"),
        ("Example projline2", "the spheres S^1, S^2, S^4, S^8"),
    ]
    .into_iter()
    .collect()
}
