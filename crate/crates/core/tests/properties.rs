use diagonal::catalog;
use diagonal::charclass;
use diagonal::cli::{parse_spec_file, run_reports, NamedSpec, Options, SpecFile};
use diagonal::obstruction::{evaluate, product_verdict, Flag, Mode, Property, VarietyKind, VarietySpec, Verdict};
use diagonal::ring::RingElement;
use num_bigint::BigInt;
use proptest::prelude::*;

fn flag() -> impl Strategy<Value = Flag> {
    prop_oneof![Just(Flag::True), Just(Flag::False), Just(Flag::Unknown)]
}

fn leaf_kind() -> impl Strategy<Value = VarietyKind> {
    prop_oneof![
        (1u32..8).prop_map(|n| VarietyKind::ProjectiveSpace { n }),
        (2u32..7).prop_flat_map(|n| (1..n).prop_map(move |r| VarietyKind::Grassmannian { r, n })),
        (1u32..9).prop_map(|n| VarietyKind::Quadric { n }),
        (3u32..8).prop_flat_map(|ambient| {
            prop::collection::vec(1u32..5, 1..(ambient as usize))
                .prop_map(move |degrees| VarietyKind::CompleteIntersection { ambient, degrees })
        }),
        (1i64..6).prop_map(|h| VarietyKind::K3Generic { d: 2 * h }),
        Just(VarietyKind::K3TwoDisjointRationalCurves),
        Just(VarietyKind::AbelianSurface),
        Just(VarietyKind::Enriques),
        Just(VarietyKind::HyperellipticSurface),
        Just(VarietyKind::RuledSurface),
        Just(VarietyKind::EllipticSurfaceWithSection),
        (0u32..5).prop_map(|genus| VarietyKind::Curve { genus }),
        Just(VarietyKind::CubicThreefold),
        Just(VarietyKind::FakeP2),
        (1u32..5).prop_map(|g| VarietyKind::AbelianVariety { g }),
        (1u32..6, -6i64..3).prop_map(|(dim, index)| VarietyKind::PicZGeneral { dim, index }),
        (1u32..4, flag()).prop_map(|(dim, point_property)| VarietyKind::LieGroup { dim, point_property }),
    ]
}

fn leaf_spec() -> impl Strategy<Value = VarietySpec> {
    (leaf_kind(), flag(), flag(), flag(), any::<bool>()).prop_map(|(kind, pic, section, h1, topo)| {
        VarietySpec::new(kind)
            .with_pic_flag(pic)
            .with_section_flag(section)
            .with_h1_flag(h1)
            .with_mode(if topo { Mode::Topological } else { Mode::Algebraic })
    })
}

fn spec() -> impl Strategy<Value = VarietySpec> {
    prop_oneof![
        4 => leaf_spec(),
        1 => (1u32..12).prop_map(|n| VarietySpec::new(VarietyKind::Sphere { n })),
        1 => prop::collection::vec(leaf_spec(), 2..4).prop_map(|f| VarietySpec::new(VarietyKind::Product(f))),
    ]
}

fn spec_file() -> impl Strategy<Value = SpecFile> {
    (prop::collection::vec(spec(), 0..6), prop::option::of(0i64..20)).prop_map(|(specs, chi_window)| SpecFile {
        version: 1,
        varieties: specs
            .into_iter()
            .enumerate()
            .map(|(i, spec)| NamedSpec {
                name: format!("v{i}"),
                spec,
            })
            .collect(),
        options: Options {
            format: None,
            chi_window,
        },
    })
}

fn no_floats(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
        serde_json::Value::Array(a) => a.iter().all(no_floats),
        serde_json::Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spec_file_round_trip(file in spec_file()) {
        let text = file.to_string();
        prop_assert_eq!(parse_spec_file(&text).unwrap(), file);
    }

    #[test]
    fn reports_are_deterministic_and_round_trip(file in spec_file()) {
        let a = run_reports(&file).unwrap();
        let json = a.to_canonical_json();
        prop_assert_eq!(run_reports(&file).unwrap().to_canonical_json(), json.clone());
        let back = diagonal::cli::ReportDocument::from_json(&json).unwrap();
        prop_assert_eq!(back, a);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        prop_assert!(no_floats(&value));
    }

    #[test]
    fn topological_closure_is_consistent(s in spec()) {
        let s = s.with_mode(Mode::Topological);
        if let Ok(reports) = evaluate(&s) {
            let v: Vec<Verdict> = reports.iter().map(|r| r.verdict).collect();
            prop_assert_eq!(reports[0].property, Property::Dr);
            // D_c => D_o => D_r
            for (strong, weak) in [(2, 1), (1, 0), (2, 0)] {
                prop_assert!(!(v[strong] == Verdict::Holds && v[weak] != Verdict::Holds), "{:?}", v);
                prop_assert!(!(v[weak] == Verdict::Fails && v[strong] != Verdict::Fails), "{:?}", v);
            }
        }
    }

    #[test]
    fn every_verdict_is_cited(s in spec()) {
        if let Ok(reports) = evaluate(&s) {
            let index = diagonal::obstruction::citation_index();
            for r in &reports {
                prop_assert!(!r.trace.is_empty());
                for c in r.citations() {
                    prop_assert!(index.contains_key(c), "unindexed citation {}", c);
                }
            }
        }
    }

    #[test]
    fn product_rule(vs in prop::collection::vec(prop_oneof![Just(Verdict::Holds), Just(Verdict::Fails), Just(Verdict::Unknown)], 1..5)) {
        let expected = if vs.iter().all(|v| *v == Verdict::Holds) { Verdict::Holds } else { Verdict::Unknown };
        prop_assert_eq!(product_verdict(&vs), expected);
    }

    #[test]
    fn q3_closed_form_matches_line_bundle_oracle(n in -20i64..20) {
        // chi(Q3, O(n)) = C(n+4, 4) - C(n+2, 4) from the restriction sequence.
        let c4 = |a: i64| a * (a - 1) * (a - 2) * (a - 3) / 24;
        let want = BigInt::from(c4(n + 4) - c4(n + 2));
        let got = charclass::hrr_q3_closed_form(&1.into(), &n.into(), &0.into(), &0.into());
        prop_assert!(got.is_integer());
        prop_assert_eq!(got.to_integer(), want);
    }

    #[test]
    fn pn_ring_powers(n in 1u32..7, a in 0u32..9, b in 0u32..9) {
        let r = catalog::projective_space(n).unwrap();
        let h = r.generator("h").unwrap();
        let p: RingElement = &h.pow(a) * &h.pow(b);
        if a + b <= n {
            prop_assert_eq!(p, h.pow(a + b));
        } else {
            prop_assert!(p.is_zero());
        }
    }
}
