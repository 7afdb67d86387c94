//! Total Chern classes over a [`GradedRing`], Chern characters, Todd
//! classes and exact Euler characteristics (Hirzebruch-Riemann-Roch up to
//! dimension three, plus Riemann-Roch on curves and surfaces).
//!
//! Euler characteristics are returned as exact rationals: a non-integral
//! value proves that no honest bundle carries the given Chern data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::catalog;
use crate::ring::{GradedRing, RationalClass, RingElement, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharClassError {
    #[error("characteristic classes live over different rings ({left} and {right})")]
    RingMismatch { left: String, right: String },
    #[error("complex dimension {0} exceeds 3")]
    DimensionTooLarge(u32),
    #[error("expected complex dimension {expected}, ring has {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("D^2 - D.K = {0} is odd; not a divisor class on a smooth surface")]
    ParityViolation(BigInt),
    #[error("degree {0} does not have a one-element basis")]
    NotCyclic(u32),
    #[error("invalid total class: {0}")]
    InvalidTotalClass(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Total Chern class `1 + c_1 + c_2 + ...` of a (possibly virtual) bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharClassVector {
    ring: GradedRing,
    rank: i64,
    components: Vec<RingElement>,
    is_virtual: bool,
}

impl CharClassVector {
    /// Splits a total class into homogeneous components `c_0 .. c_dim`.
    /// Honest bundles (`is_virtual == false`) must have `c_i = 0` above
    /// their rank.
    pub fn from_total(total: &RingElement, rank: i64, is_virtual: bool) -> Result<Self, CharClassError> {
        let ring = total.ring().clone();
        let dim = ring.complex_dimension();
        let components: Vec<RingElement> = (0..=dim).map(|i| total.component(2 * i)).collect();
        let rest = (0..=ring.top_degree())
            .filter(|d| d % 2 == 1)
            .any(|d| !total.component(d).is_zero());
        if rest {
            return Err(CharClassError::InvalidTotalClass("odd-degree component".into()));
        }
        if components[0] != ring.one() {
            return Err(CharClassError::InvalidTotalClass(format!(
                "c_0 must be 1, got {}",
                components[0]
            )));
        }
        if !is_virtual {
            if rank < 0 {
                return Err(CharClassError::InvalidTotalClass(format!("negative rank {rank}")));
            }
            if let Some(i) = (0..components.len()).find(|&i| i as i64 > rank && !components[i].is_zero()) {
                return Err(CharClassError::InvalidTotalClass(format!(
                    "c_{i} is nonzero above rank {rank}"
                )));
            }
        }
        Ok(CharClassVector {
            ring,
            rank,
            components,
            is_virtual,
        })
    }

    /// Bundle with total class `1 + sum d_i b_i`, where `b_i` is the single
    /// basis monomial of degree `2i` (for `CH*(Q_3)`: the quadric surface,
    /// line and point classes).
    pub fn from_coordinates(
        ring: &GradedRing,
        rank: i64,
        coords: &[BigInt],
        is_virtual: bool,
    ) -> Result<Self, CharClassError> {
        let mut total = ring.one();
        for (i, d) in coords.iter().enumerate() {
            let degree = 2 * (i as u32 + 1);
            if degree > ring.top_degree() {
                if d.is_zero() {
                    continue;
                }
                return Err(CharClassError::InvalidTotalClass(format!(
                    "coordinate d_{} beyond the top degree",
                    i + 1
                )));
            }
            let [b] = ring.basis(degree) else {
                return Err(CharClassError::NotCyclic(degree));
            };
            total = &total + &ring.monomial(b).scale(d);
        }
        Self::from_total(&total, rank, is_virtual)
    }

    pub fn trivial(ring: &GradedRing, rank: i64) -> Self {
        Self::from_total(&ring.one(), rank, false).expect("unit class is valid")
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line_bundle(c1: &RingElement) -> Result<Self, CharClassError> {
        if !c1.is_homogeneous_of(2) {
            return Err(CharClassError::InvalidTotalClass("c_1 must have degree 2".into()));
        }
        Self::from_total(&(&c1.ring().one() + c1), 1, false)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    /// `c_i`, zero beyond the ring's dimension.
    pub fn c(&self, i: usize) -> RingElement {
        self.components.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn total(&self) -> RingElement {
        self.components.iter().fold(self.ring.zero(), |acc, c| &acc + c)
    }

    /// Coordinates `d_i` of `c_i` against the cyclic bases, `i >= 1`.
    pub fn coordinates(&self) -> Result<Vec<BigInt>, CharClassError> {
        (1..self.components.len())
            .map(|i| {
                let degree = 2 * i as u32;
                self.components[i]
                    .cyclic_coordinate(degree)
                    .ok_or(CharClassError::NotCyclic(degree))
            })
            .collect()
    }

    fn check_ring(&self, other: &GradedRing) -> Result<(), CharClassError> {
        if &self.ring == other {
            Ok(())
        } else {
            Err(CharClassError::RingMismatch {
                left: self.ring.name().to_string(),
                right: other.name().to_string(),
            })
        }
    }

    fn dimension_at_most_three(&self) -> Result<u32, CharClassError> {
        match self.ring.complex_dimension() {
            d if d <= 3 => Ok(d),
            d => Err(CharClassError::DimensionTooLarge(d)),
        }
    }
}

/// Whitney sum: ranks add, total classes multiply.
pub fn whitney_sum(a: &CharClassVector, b: &CharClassVector) -> Result<CharClassVector, CharClassError> {
    a.check_ring(&b.ring)?;
    let total = a.total().multiply(&b.total())?;
    CharClassVector::from_total(&total, a.rank + b.rank, a.is_virtual || b.is_virtual)
}

fn frac(numer: RingElement, denom: i64) -> RationalClass {
    RationalClass::new(numer, BigInt::from(denom))
}

/// `ch_0 .. ch_3` from the Newton identities.
pub fn chern_character(v: &CharClassVector) -> Result<Vec<RationalClass>, CharClassError> {
    v.dimension_at_most_three()?;
    let (c1, c2, c3) = (v.c(1), v.c(2), v.c(3));
    let k = |n: i64| BigInt::from(n);
    Ok(vec![
        RationalClass::integral(v.ring.scalar(v.rank)),
        RationalClass::integral(c1.clone()),
        frac(&(&c1 * &c1) - &c2.scale(&k(2)), 2),
        frac(
            &(&(&(&c1 * &c1) * &c1) - &(&c1 * &c2).scale(&k(3))) + &c3.scale(&k(3)),
            6,
        ),
    ])
}

/// `td_0 .. td_3` of a tangent bundle.
pub fn todd_class(tangent: &CharClassVector) -> Result<Vec<RationalClass>, CharClassError> {
    tangent.dimension_at_most_three()?;
    let (c1, c2) = (tangent.c(1), tangent.c(2));
    Ok(vec![
        RationalClass::integral(tangent.ring.one()),
        frac(c1.clone(), 2),
        frac(&(&c1 * &c1) + &c2, 12),
        frac(&c1 * &c2, 24),
    ])
}

/// `chi(X, E) = deg(ch(E) td(T_X))`, exact. Callers decide integrality.
pub fn euler_char_hrr(tangent: &CharClassVector, bundle: &CharClassVector) -> Result<BigRational, CharClassError> {
    tangent.check_ring(&bundle.ring)?;
    let dim = tangent.dimension_at_most_three()? as usize;
    let ch = chern_character(bundle)?;
    let td = todd_class(tangent)?;
    let mut sum = BigRational::zero();
    for i in 0..=dim {
        sum += ch[i].multiply(&td[dim - i])?.degree_evaluate()?;
    }
    Ok(sum)
}

/// The closed HRR formula for a bundle on the smooth quadric threefold in
/// the coordinates `c(E) = 1 + d1 [Q_2] + d2 [L] + d3 [P]`.
pub fn hrr_q3_closed_form(rank: &BigInt, d1: &BigInt, d2: &BigInt, d3: &BigInt) -> BigRational {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let int = |x: &BigInt| BigRational::from_integer(x.clone());
    let cubic = int(&(BigInt::from(2) * d1 * d1 * d1 - BigInt::from(3) * d1 * d2 + BigInt::from(3) * d3));
    let quadratic = int(&(d1 * d1 - d2));
    cubic * q(1, 6) + quadratic * q(3, 2) + int(d1) * q(13, 6) + int(rank)
}

/// Total Chern class of the tangent bundle of a smooth complete
/// intersection of the given degrees in `P^ambient`, expressed in `ring`
/// via its hyperplane class `h`: `(1+h)^(ambient+1) / prod (1 + d h)`.
pub fn complete_intersection_tangent(
    h: &RingElement,
    ambient: u32,
    degrees: &[u32],
) -> Result<CharClassVector, CharClassError> {
    let ring = h.ring();
    let one = ring.one();
    let mut total = (&one + h).pow(ambient + 1);
    for &d in degrees {
        total = &total * &inverse_unipotent(&h.scale(&BigInt::from(d)));
    }
    let dim = ambient as i64 - degrees.len() as i64;
    if dim != ring.complex_dimension() as i64 {
        return Err(CharClassError::DimensionMismatch {
            expected: ring.complex_dimension(),
            found: dim.max(0) as u32,
        });
    }
    CharClassVector::from_total(&total, dim, false)
}

/// `(1 + u)^{-1}` for `u` without constant term (nilpotent by truncation).
fn inverse_unipotent(u: &RingElement) -> RingElement {
    let ring = u.ring();
    let mut sum = ring.one();
    let mut power = ring.one();
    let minus_u = -u;
    loop {
        power = &power * &minus_u;
        if power.is_zero() {
            return sum;
        }
        sum = &sum + &power;
    }
}

/// Tangent bundle of `Q_{2m-1}`, via the power-series quotient
/// `(1+x)^{2m+1}/(1+2x)`.
pub fn odd_quadric_tangent(m: u32) -> Result<CharClassVector, CharClassError> {
    let ring = catalog::odd_quadric(m)?;
    let x = ring.generator("x").expect("quadric ring has x");
    let t = complete_intersection_tangent(&x, 2 * m, &[2])?;
    let expected = x.scale(&BigInt::from(2 * m - 1));
    if t.c(1) != expected {
        return Err(CharClassError::InvalidTotalClass(format!(
            "c_1(T_Q) = {} but (2m-1)x = {expected}",
            t.c(1)
        )));
    }
    Ok(t)
}

/// Tangent bundle of `P^n` from the Euler sequence.
pub fn projective_tangent(n: u32) -> Result<CharClassVector, CharClassError> {
    let ring = catalog::projective_space(n)?;
    let h = ring.generator("h").expect("projective ring has h");
    complete_intersection_tangent(&h, n, &[])
}

/// Riemann-Roch data of a smooth projective surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRRData {
    pub chi_structure_sheaf: BigInt,
}

impl SurfaceRRData {
    pub fn k3() -> Self {
        SurfaceRRData {
            chi_structure_sheaf: 2.into(),
        }
    }

    pub fn enriques() -> Self {
        SurfaceRRData {
            chi_structure_sheaf: 1.into(),
        }
    }

    pub fn abelian() -> Self {
        SurfaceRRData {
            chi_structure_sheaf: 0.into(),
        }
    }
}

/// `chi(O(D)) = chi(O) + (D^2 - D.K)/2`.
pub fn euler_char_surface(data: &SurfaceRRData, d_sq: &BigInt, d_dot_k: &BigInt) -> Result<BigInt, CharClassError> {
    let diff = d_sq - d_dot_k;
    if diff.is_odd() {
        return Err(CharClassError::ParityViolation(diff));
    }
    Ok(&data.chi_structure_sheaf + diff / 2)
}

/// `chi(L) = deg L + 1 - g` on a smooth curve of genus `g`.
pub fn euler_char_curve(genus: &BigInt, degree: &BigInt) -> BigInt {
    degree + BigInt::one() - genus
}

/// `deg(c_3 - c_2 (c_1(M) + c_1)) mod 2` for a bundle on an almost complex
/// threefold; `1` means the Chern data cannot come from a bundle.
pub fn cherneven_residue(c1_m: &RingElement, bundle: &CharClassVector) -> Result<u8, CharClassError> {
    bundle.check_ring(c1_m.ring())?;
    let dim = bundle.ring.complex_dimension();
    if dim != 3 {
        return Err(CharClassError::DimensionMismatch {
            expected: 3,
            found: dim,
        });
    }
    if bundle.ring.basis(6).len() != 1 {
        return Err(CharClassError::NotCyclic(6));
    }
    if !c1_m.is_homogeneous_of(2) {
        return Err(CharClassError::InvalidTotalClass("c_1(M) must have degree 2".into()));
    }
    let expr = &bundle.c(3) - &(&bundle.c(2) * &(c1_m + &bundle.c(1)));
    let value = expr.degree_evaluate()?.mod_floor(&BigInt::from(2));
    Ok(if value.is_zero() { 0 } else { 1 })
}
