//! Riemann-Roch on surfaces, the search for cohomologically trivial line
//! bundles, and the resulting verdicts for the surface catalog.

use std::fmt::Write;

use diagonal::charclass::{self, SurfaceRRData};
use diagonal::obstruction::{coh_trivial_candidates, surface_verdict, VarietyKind, VarietySpec};
use num_bigint::BigInt;

pub fn run_example() -> String {
    let mut out = String::new();
    for d in [4i64, 6] {
        let row: Vec<String> = (-3..=3i64)
            .map(|n| {
                let chi = charclass::euler_char_surface(&SurfaceRRData::k3(), &BigInt::from(n * n * d), &0.into());
                format!("{n}:{}", chi.unwrap())
            })
            .collect();
        writeln!(out, "K3 of degree {d}, chi(O(n)): {}", row.join(" ")).unwrap();
    }
    let e = charclass::euler_char_surface(&SurfaceRRData::enriques(), &0.into(), &0.into()).unwrap();
    writeln!(out, "Enriques, chi(K_S) = {e}").unwrap();
    let c = charclass::euler_char_surface(&SurfaceRRData::k3(), &BigInt::from(-2), &0.into()).unwrap();
    writeln!(out, "K3, chi(O(-C)) for a (-2)-curve C = {c}").unwrap();

    let p2 = coh_trivial_candidates(&VarietySpec::new(VarietyKind::ProjectiveSpace { n: 2 }), None).unwrap();
    writeln!(out, "P^2 candidates: {:?}", p2.candidates()).unwrap();

    let catalog = [
        VarietyKind::K3Generic { d: 4 },
        VarietyKind::K3TwoDisjointRationalCurves,
        VarietyKind::AbelianSurface,
        VarietyKind::Enriques,
        VarietyKind::HyperellipticSurface,
        VarietyKind::RuledSurface,
        VarietyKind::EllipticSurfaceWithSection,
        VarietyKind::FakeP2,
    ];
    for kind in catalog {
        let r = surface_verdict(&VarietySpec::new(kind.clone())).unwrap();
        let mut cites: Vec<&str> = r.citations().collect();
        cites.sort_unstable();
        cites.dedup();
        writeln!(out, "{}: {} [{}]", kind.tag(), r.verdict, cites.join("; ")).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
