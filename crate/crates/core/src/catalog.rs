//! Shared instances of the rings used throughout the crate.
//!
//! Rings are compared by identity, so every caller asking for `CH*(Q_5)`
//! gets the same handle.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::ring::{kunneth_square, make_ring, CoefficientDomain, GradedRing, Relation, RingError, RingPresentation};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Projective(u32),
    OddQuadric(u32),
    Square(u64),
}

fn cache() -> &'static Mutex<HashMap<Key, GradedRing>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, GradedRing>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(key: Key, build: impl FnOnce() -> Result<GradedRing, RingError>) -> Result<GradedRing, RingError> {
    if let Some(r) = cache().lock().expect("ring cache poisoned").get(&key) {
        return Ok(r.clone());
    }
    let ring = build()?;
    Ok(cache()
        .lock()
        .expect("ring cache poisoned")
        .entry(key)
        .or_insert(ring)
        .clone())
}

/// `Z[h]/(h^{n+1})`, the Chow ring of `P^n`.
pub fn projective_space(n: u32) -> Result<GradedRing, RingError> {
    if n == 0 {
        return Err(RingError::InvalidPresentation("P^0 has no hyperplane class".into()));
    }
    cached(Key::Projective(n), || {
        make_ring(&RingPresentation {
            name: format!("P{n}"),
            generators: vec![("h".into(), 2)],
            relations: vec![Relation::new(vec![n + 1], vec![])],
            top_degree: 2 * n,
            domain: CoefficientDomain::Integers,
            fundamental: vec![n],
            mod2_names: None,
        })
    })
}

/// `Z[x, y]/(x^m - 2y, y^2)` with `deg x = 2`, `deg y = 2m`: the Chow ring
/// (equivalently the integral cohomology ring) of the odd quadric
/// `Q_{2m-1}`. The mod-2 companion uses the names `xi`, `eta`.
pub fn odd_quadric(m: u32) -> Result<GradedRing, RingError> {
    if m < 2 {
        return Err(RingError::InvalidPresentation(format!(
            "odd quadric presentation needs m >= 2, got {m}"
        )));
    }
    cached(Key::OddQuadric(m), || {
        make_ring(&RingPresentation {
            name: format!("Q{}", 2 * m - 1),
            generators: vec![("x".into(), 2), ("y".into(), 2 * m)],
            relations: vec![
                Relation::new(vec![m, 0], vec![(vec![0, 1], BigInt::from(2))]),
                Relation::new(vec![0, 2], vec![]),
            ],
            top_degree: 4 * m - 2,
            domain: CoefficientDomain::Integers,
            fundamental: vec![m - 1, 1],
            mod2_names: Some(vec!["xi".into(), "eta".into()]),
        })
    })
}

/// Cached Kunneth square of a catalog ring.
pub fn square(r: &GradedRing) -> Result<GradedRing, RingError> {
    cached(Key::Square(r.id()), || kunneth_square(r))
}

/// Resolves textual ring identifiers: `p<n>`, `q<2m-1>`, an optional `^2`
/// for the Kunneth square and an optional `/2` for the mod-2 companion,
/// e.g. `q5`, `p2^2`, `q7/2`.
pub fn ring_by_id(id: &str) -> Result<GradedRing, RingError> {
    let bad = || {
        RingError::Parse(format!(
            "unknown ring id `{id}` (expected p<n> or q<odd n>, optional ^2 and /2)"
        ))
    };
    let (rest, mod2) = match id.strip_suffix("/2") {
        Some(r) => (r, true),
        None => (id, false),
    };
    let (rest, squared) = match rest.strip_suffix("^2") {
        Some(r) => (r, true),
        None => (rest, false),
    };
    let (family, number) = rest.split_at(1.min(rest.len()));
    let n: u32 = number.parse().map_err(|_| bad())?;
    let mut ring = match family {
        "p" | "P" => projective_space(n)?,
        "q" | "Q" if n >= 3 && n % 2 == 1 => odd_quadric(n.div_ceil(2))?,
        _ => return Err(bad()),
    };
    if squared {
        ring = square(&ring)?;
    }
    if mod2 {
        ring = ring
            .companion()
            .cloned()
            .ok_or_else(|| RingError::NoCompanionRing(ring.name().to_string()))?;
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadric_bases_follow_the_presentation() {
        for m in 2..=4u32 {
            let r = odd_quadric(m).unwrap();
            for k in 0..=(2 * m - 1) {
                let expected = if k < m {
                    if k == 0 {
                        "1".to_string()
                    } else if k == 1 {
                        "x".into()
                    } else {
                        format!("x^{k}")
                    }
                } else {
                    match k - m {
                        0 => "y".to_string(),
                        1 => "x*y".into(),
                        j => format!("x^{j}*y"),
                    }
                };
                let basis: Vec<String> = r.basis(2 * k).iter().map(|b| r.format_monomial(b)).collect();
                assert_eq!(basis, vec![expected], "m={m} k={k}");
            }
        }
    }

    #[test]
    fn ids_resolve_to_shared_rings() {
        assert_eq!(ring_by_id("q5").unwrap(), odd_quadric(3).unwrap());
        assert_eq!(
            ring_by_id("p2^2").unwrap(),
            square(&projective_space(2).unwrap()).unwrap()
        );
        assert_eq!(ring_by_id("q3/2").unwrap().generators()[0].0, "xi");
        assert!(ring_by_id("q4").is_err());
        assert!(ring_by_id("z3").is_err());
        assert!(ring_by_id("p0").is_err());
    }
}
