//! The Steenrod square `Sq^2` on mod-2 rings concentrated in even degrees,
//! where `Sq^1` vanishes and the Cartan formula makes `Sq^2` a derivation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::catalog;
use crate::ring::{CoefficientDomain, GradedRing, Monomial, RingElement, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    #[error("ring {0} does not have Z/2 coefficients")]
    NotMod2Ring(String),
    #[error("element lives in {found}, Sq^2 data is for {expected}")]
    RingMismatch { expected: String, found: String },
    #[error("no Sq^2 image given for generator {0}")]
    MissingGeneratorImage(String),
    #[error("Sq^2({generator}) must have degree {expected}")]
    BadGeneratorImage { generator: String, expected: u32 },
    #[error("{class} must be homogeneous of degree {expected}")]
    DegreeMismatch { class: String, expected: u32 },
    #[error("the congruence needs m >= 2, got {0}")]
    BadM(u32),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `Sq^2` on a mod-2 ring, determined by its values on generators.
#[derive(Debug, Clone)]
pub struct Sq2Spec {
    ring: GradedRing,
    images: BTreeMap<usize, RingElement>,
}

impl Sq2Spec {
    pub fn new(ring: &GradedRing, images: &[(&str, RingElement)]) -> Result<Self, SteenrodError> {
        if ring.domain() != CoefficientDomain::IntegersMod2 {
            return Err(SteenrodError::NotMod2Ring(ring.name().to_string()));
        }
        let mut map = BTreeMap::new();
        for (name, image) in images {
            let idx = ring
                .generator_index(name)
                .ok_or_else(|| RingError::Parse(format!("unknown generator `{name}`")))?;
            if image.ring() != ring {
                return Err(SteenrodError::RingMismatch {
                    expected: ring.name().to_string(),
                    found: image.ring().name().to_string(),
                });
            }
            let expected = ring.generators()[idx].1 + 2;
            if !image.is_homogeneous_of(expected) {
                return Err(SteenrodError::BadGeneratorImage {
                    generator: name.to_string(),
                    expected,
                });
            }
            map.insert(idx, image.clone());
        }
        Ok(Sq2Spec {
            ring: ring.clone(),
            images: map,
        })
    }

    /// `H^*(Q_{2m-1}; Z/2)` with `Sq^2(xi) = xi^2`, `Sq^2(eta) = (m-1) xi eta`.
    pub fn odd_quadric(m: u32) -> Result<Self, SteenrodError> {
        let ring = catalog::odd_quadric(m)?
            .companion()
            .cloned()
            .expect("quadric rings carry a mod-2 companion");
        let xi = ring.generator("xi").expect("xi");
        let eta = ring.generator("eta").expect("eta");
        let sq_eta = (&xi * &eta).scale(&BigInt::from(m - 1));
        Self::new(&ring, &[("xi", xi.pow(2)), ("eta", sq_eta)])
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }
}

/// `Sq^2(a)`, expanding each monomial by the Cartan formula:
/// `Sq^2(prod g_i^{e_i}) = sum_i e_i g_i^{e_i - 1} Sq^2(g_i) prod_{j != i} g_j^{e_j}`.
pub fn sq2(spec: &Sq2Spec, a: &RingElement) -> Result<RingElement, SteenrodError> {
    if a.ring() != &spec.ring {
        return Err(SteenrodError::RingMismatch {
            expected: spec.ring.name().to_string(),
            found: a.ring().name().to_string(),
        });
    }
    let mut out = spec.ring.zero();
    for (mono, coeff) in a.terms() {
        if coeff.is_even() {
            continue;
        }
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e % 2 == 0 {
                continue;
            }
            let image = spec
                .images
                .get(&i)
                .ok_or_else(|| SteenrodError::MissingGeneratorImage(spec.ring.generators()[i].0.clone()))?;
            let mut rest = mono.exponents().to_vec();
            rest[i] -= 1;
            out = &out + &(&spec.ring.monomial(&Monomial::new(rest)) * image);
        }
    }
    Ok(out)
}

fn check_degree(class: &str, a: &RingElement, degree: u32) -> Result<(), SteenrodError> {
    if a.is_homogeneous_of(degree) {
        Ok(())
    } else {
        Err(SteenrodError::DegreeMismatch {
            class: class.to_string(),
            expected: degree,
        })
    }
}

/// Coefficient of `w_0 w_{n+2}` in the Wu formula for `Sq^2 w_n`, reduced mod 2.
pub fn wu_top_coefficient(n: u32) -> u8 {
    let n = i64::from(n);
    (((2 - n) * (1 - n) / 2).rem_euclid(2)) as u8
}

/// Checks `Sq^2 w_n = w_2 w_n + C(n) w_{n+2}` (with `w_1 = 0`) in the spec's ring.
pub fn wu_identity_check(
    w2: &RingElement,
    wn: &RingElement,
    wn2: &RingElement,
    n: u32,
    spec: &Sq2Spec,
) -> Result<bool, SteenrodError> {
    check_degree("w_2", w2, 2)?;
    check_degree(&format!("w_{n}"), wn, n)?;
    check_degree(&format!("w_{}", n + 2), wn2, n + 2)?;
    if n % 2 == 1 {
        return Err(SteenrodError::DegreeMismatch {
            class: format!("w_{n}"),
            expected: n + 1,
        });
    }
    let lhs = sq2(spec, wn)?;
    let rhs = &(w2 * wn) + &wn2.scale(&BigInt::from(wu_top_coefficient(n)));
    Ok(lhs == rhs)
}

/// `c_{2m-1} = c_{2m-2} (c_1 + 1) mod 2`.
pub fn congruence_cherniden2(m: u32, c1: &BigInt, c2m2: &BigInt, c2m1: &BigInt) -> Result<bool, SteenrodError> {
    if m < 2 {
        return Err(SteenrodError::BadM(m));
    }
    let diff: BigInt = c2m1 - c2m2 * (c1 + BigInt::from(1));
    Ok(diff.is_even())
}

/// Stiefel-Whitney classes `(w_2, w_{4m-4}, w_{4m-2})` of a complex bundle on
/// `Q_{2m-1}` whose Chern classes have coefficients `c_1`, `c_{2m-2}`,
/// `c_{2m-1}` on `x`, `x^{m-2} y`, `x^{m-1} y`.
pub fn induced_sw_classes(
    spec: &Sq2Spec,
    m: u32,
    c1: &BigInt,
    c2m2: &BigInt,
    c2m1: &BigInt,
) -> Result<[RingElement; 3], SteenrodError> {
    let r = &spec.ring;
    let xi = r.generator("xi").ok_or_else(|| RingError::Parse("missing xi".into()))?;
    let eta = r
        .generator("eta")
        .ok_or_else(|| RingError::Parse("missing eta".into()))?;
    if m < 2 {
        return Err(SteenrodError::BadM(m));
    }
    Ok([
        xi.scale(c1),
        (&xi.pow(m - 2) * &eta).scale(c2m2),
        (&xi.pow(m - 1) * &eta).scale(c2m1),
    ])
}

/// Runs the Wu identity on [`induced_sw_classes`] at `n = 4m - 4`.
pub fn wu_on_quadric_bundle(m: u32, c1: &BigInt, c2m2: &BigInt, c2m1: &BigInt) -> Result<bool, SteenrodError> {
    let spec = Sq2Spec::odd_quadric(m)?;
    let [w2, wn, wn2] = induced_sw_classes(&spec, m, c1, c2m2, c2m1)?;
    wu_identity_check(&w2, &wn, &wn2, 4 * m - 4, &spec)
}

/// `true` when every coefficient of `a` is even (the element vanishes mod 2).
pub fn vanishes_mod2(a: &RingElement) -> bool {
    a.terms().all(|(_, c)| (c % BigInt::from(2)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn generator_images() {
        for m in 2..=4 {
            let spec = Sq2Spec::odd_quadric(m).unwrap();
            let r = spec.ring().clone();
            let xi = r.generator("xi").unwrap();
            let eta = r.generator("eta").unwrap();
            assert_eq!(sq2(&spec, &xi).unwrap(), xi.pow(2));
            let expected = if m % 2 == 0 { &xi * &eta } else { r.zero() };
            assert_eq!(sq2(&spec, &eta).unwrap(), expected);
            let lhs = sq2(&spec, &(&xi.pow(m - 2) * &eta)).unwrap();
            assert_eq!(lhs, &xi.pow(m - 1) * &eta, "m={m}");
            assert!(sq2(&spec, &r.one()).unwrap().is_zero());
        }
    }

    #[test]
    fn cli_example_xi_eta_on_q5() {
        let spec = Sq2Spec::odd_quadric(3).unwrap();
        let a = spec.ring().parse_element("xi*eta").unwrap();
        assert_eq!(sq2(&spec, &a).unwrap().to_string(), "xi^2*eta");
    }

    #[test]
    fn missing_image_is_reported_lazily() {
        let ring = catalog::odd_quadric(2).unwrap().companion().unwrap().clone();
        let xi = ring.generator("xi").unwrap();
        let spec = Sq2Spec::new(&ring, &[("xi", xi.pow(2))]).unwrap();
        assert_eq!(sq2(&spec, &xi).unwrap(), xi.pow(2));
        let eta = ring.generator("eta").unwrap();
        assert!(matches!(sq2(&spec, &eta), Err(SteenrodError::MissingGeneratorImage(_))));
        assert!(Sq2Spec::new(&catalog::odd_quadric(2).unwrap(), &[]).is_err());
    }

    #[test]
    fn wu_small_cases() {
        let spec = Sq2Spec::odd_quadric(2).unwrap();
        let r = spec.ring().clone();
        assert!(wu_identity_check(&r.zero(), &r.zero(), &r.zero(), 4, &spec).unwrap());
        let xi = r.generator("xi").unwrap();
        assert!(wu_identity_check(&xi, &r.one(), &xi, 0, &spec).unwrap());
        assert!(matches!(
            wu_identity_check(&r.one(), &r.zero(), &r.zero(), 4, &spec),
            Err(SteenrodError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn congruence_examples() {
        for d2 in -3..=3 {
            assert!(!congruence_cherniden2(2, &b(1), &b(d2), &b(1)).unwrap());
        }
        assert!(congruence_cherniden2(2, &b(0), &b(1), &b(1)).unwrap());
        assert!(congruence_cherniden2(2, &b(3), &b(8), &b(4)).unwrap());
        assert!(matches!(
            congruence_cherniden2(1, &b(0), &b(0), &b(0)),
            Err(SteenrodError::BadM(1))
        ));
    }

    #[test]
    fn wu_matches_congruence_exhaustively() {
        for m in 2..=4 {
            for bits in 0..8 {
                let (c1, c2, c3) = (b(bits & 1), b((bits >> 1) & 1), b((bits >> 2) & 1));
                assert_eq!(
                    wu_on_quadric_bundle(m, &c1, &c2, &c3).unwrap(),
                    congruence_cherniden2(m, &c1, &c2, &c3).unwrap(),
                    "m={m} bits={bits}"
                );
            }
        }
    }
}
