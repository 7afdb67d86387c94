//! Search for cohomologically trivial line bundles `O(n)` on varieties with
//! Picard group `Z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::spec::{Flag, VarietyKind, VarietySpec};
use super::ObstructionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistStatus {
    /// `n >= 0` and the ample generator has a section, so `H^0(O(n)) != 0`.
    ExcludedH0,
    /// `r - n >= 0`, so `H^dim(O(n)) = H^0(O(r - n))^* != 0`.
    ExcludedSerreDual,
    ChiNonzero,
    Candidate,
    /// Neither exclusion applies and `chi(O(n))` is not available.
    Undetermined,
}

impl TwistStatus {
    pub fn label(self) -> &'static str {
        match self {
            TwistStatus::ExcludedH0 => "excluded: H^0 != 0",
            TwistStatus::ExcludedSerreDual => "excluded: top cohomology != 0 by Serre duality",
            TwistStatus::ChiNonzero => "excluded: chi != 0",
            TwistStatus::Candidate => "candidate",
            TwistStatus::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateTable {
    pub dim: u32,
    /// `omega = O(index)`.
    pub index: i64,
    pub window: (i64, i64),
    pub rows: Vec<(i64, Option<BigRational>, TwistStatus)>,
}

impl CandidateTable {
    pub fn candidates(&self) -> Vec<i64> {
        self.with_status(TwistStatus::Candidate)
    }

    pub fn undetermined(&self) -> Vec<i64> {
        self.with_status(TwistStatus::Undetermined)
    }

    fn with_status(&self, status: TwistStatus) -> Vec<i64> {
        self.rows.iter().filter(|r| r.2 == status).map(|r| r.0).collect()
    }
}

/// `a (a-1) ... (a-k+1) / k!`, the binomial coefficient as a polynomial in `a`.
fn binomial_poly(a: &BigInt, k: u32) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

/// `chi(O(n))` on a complete intersection of the given degrees in `P^ambient`,
/// from the Koszul resolution.
fn chi_complete_intersection(ambient: u32, degrees: &[u32], n: i64) -> BigRational {
    let mut total = BigRational::zero();
    for mask in 0u64..(1 << degrees.len()) {
        let shift: i64 = degrees
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| i64::from(d))
            .sum();
        let term = binomial_poly(&BigInt::from(n - shift + i64::from(ambient)), ambient);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Complete-intersection data `(ambient, degrees)` of a Picard-rank-one catalog kind.
fn as_complete_intersection(kind: &VarietyKind) -> Option<(u32, Vec<u32>)> {
    match kind {
        VarietyKind::ProjectiveSpace { n } => Some((*n, vec![])),
        VarietyKind::Quadric { n } if *n >= 3 => Some((n + 1, vec![2])),
        VarietyKind::CompleteIntersection { ambient, degrees } if ambient - degrees.len() as u32 >= 3 => {
            Some((*ambient, degrees.clone()))
        }
        VarietyKind::CubicThreefold => Some((4, vec![3])),
        _ => None,
    }
}

/// `chi(O(n))` for the ample generator of a Picard-rank-one catalog kind.
pub fn chi_line_bundle(kind: &VarietyKind, n: i64) -> Option<BigRational> {
    match kind {
        VarietyKind::K3Generic { d } => {
            Some(BigRational::new(BigInt::from(n * n * d), 2.into()) + BigRational::from_integer(2.into()))
        }
        _ => {
            let (ambient, degrees) = as_complete_intersection(kind)?;
            Some(chi_complete_intersection(ambient, &degrees, n))
        }
    }
}

/// `(dim, index)` with `omega = O(index)`, plus whether the ample generator
/// is known to have a section by construction.
fn pic_z_data(spec: &VarietySpec) -> Result<(u32, i64, bool), ObstructionError> {
    let kind = &spec.kind;
    if let VarietyKind::K3Generic { .. } = kind {
        return Ok((2, 0, true));
    }
    if let VarietyKind::PicZGeneral { dim, index } = kind {
        if spec.pic_finitely_generated == Flag::False {
            return Err(ObstructionError::ContradictoryFlags(
                "pic_finitely_generated = false contradicts Picard group Z".into(),
            ));
        }
        return Ok((*dim, *index, false));
    }
    match as_complete_intersection(kind) {
        Some((ambient, degrees)) => {
            let sum: i64 = degrees.iter().map(|&d| i64::from(d)).sum();
            Ok((ambient - degrees.len() as u32, sum - i64::from(ambient) - 1, true))
        }
        None => Err(ObstructionError::UnsupportedSpec {
            kind: kind.tag().to_string(),
            suggestion: "k3_generic, projective_space, quadric (n >= 3), complete_intersection (dim >= 3), \
                         cubic_threefold or pic_z_general"
                .into(),
        }),
    }
}

/// Classifies every twist `O(n)` in the window `|n| <= |r| + dim + 10`.
/// Outside the window one of the two exclusions always applies when the
/// generator has a section.
pub fn coh_trivial_candidates(spec: &VarietySpec, window: Option<i64>) -> Result<CandidateTable, ObstructionError> {
    let (dim, index, catalog_section) = pic_z_data(spec)?;
    let section = match (catalog_section, spec.ample_generator_has_section) {
        (true, Flag::False) => {
            return Err(ObstructionError::ContradictoryFlags(format!(
                "the hyperplane class of `{}` has sections",
                spec.kind.tag()
            )))
        }
        (true, _) => true,
        (false, Flag::Unknown) => return Err(ObstructionError::MissingFlag("ample_generator_has_section".into())),
        (false, f) => f == Flag::True,
    };
    let half = window.unwrap_or(index.abs() + i64::from(dim) + 10);
    let mut rows = Vec::new();
    for n in -half..=half {
        let chi = chi_line_bundle(&spec.kind, n);
        let status = if section && n >= 0 {
            TwistStatus::ExcludedH0
        } else if section && index - n >= 0 {
            TwistStatus::ExcludedSerreDual
        } else {
            match &chi {
                Some(c) if !c.is_zero() => TwistStatus::ChiNonzero,
                Some(_) => TwistStatus::Candidate,
                None => TwistStatus::Undetermined,
            }
        };
        rows.push((n, chi, status));
    }
    Ok(CandidateTable {
        dim,
        index,
        window: (-half, half),
        rows,
    })
}
