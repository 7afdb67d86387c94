//! Rules for the algebraic diagonal property (D).

use num_bigint::BigInt;
use num_traits::Zero;

use super::candidates::{chi_line_bundle, coh_trivial_candidates};
use super::spec::{Flag, Mode, VarietyKind, VarietySpec};
use super::{product_verdict, ObstructionError, ObstructionReport, Property, TraceEntry, Verdict};
use crate::charclass::{self, SurfaceRRData};
use crate::steenrod;

const TH_SURF_C: &str = "Theorem th-surf(c)";

fn holds(trace: Vec<TraceEntry>) -> ObstructionReport {
    ObstructionReport::new(Property::D, Verdict::Holds, trace)
}

fn fails(trace: Vec<TraceEntry>) -> ObstructionReport {
    ObstructionReport::new(Property::D, Verdict::Fails, trace)
}

fn unknown(trace: Vec<TraceEntry>) -> ObstructionReport {
    ObstructionReport::new(Property::D, Verdict::Unknown, trace)
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn list(ns: &[i64]) -> String {
    if ns.is_empty() {
        "none".to_string()
    } else {
        ns.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn grassmannian_entry(what: String) -> TraceEntry {
    TraceEntry::new("grassmannian-construction", "Introduction, Grassmannian construction").with("variety", what)
}

/// A bundle on `Q_3` with rank 3, `d_1 = 1`, `d_3 = 1` would realize the
/// `O(1)`-point property; its Euler characteristic `15/2 - 2 d_2` is never
/// an integer.
pub fn point_property_q3_verdict() -> ObstructionReport {
    let q3 = VarietySpec::new(VarietyKind::Quadric { n: 3 });
    let table = coh_trivial_candidates(&q3, None).expect("Q_3 is a catalog Picard-rank-one variety");
    let cands = table.candidates();
    let mut search = TraceEntry::new("coh-trivial-candidates", "Prop. quadric1")
        .with("omega", format!("O({})", table.index))
        .with("candidates", list(&cands));
    for &n in &cands {
        let chi = chi_line_bundle(&q3.kind, n).expect("chi on Q_3");
        search = search.with(&format!("chi(O({n}))"), chi);
    }
    let (l1, l2) = (cands[1], cands[0]);
    let pairing = TraceEntry::new("serre-dual-pairing", "Prop. quadric1")
        .with("L1", format!("O({l1})"))
        .with("L2", format!("O({l2})"))
        .with(
            "L1^-1 = L2 (x) omega^-1",
            format!("{} = {} + {}", -l1, l2, -table.index),
        )
        .with("holds", -l1 == l2 - table.index);
    let reduction = TraceEntry::new("point-property-reduction", "Cor. Lpt")
        .with("twist", format!("L1^-1 = O({})", -l1))
        .with("required bundle", "rank 3 with d1 = 1 and d3 = 1");

    let tangent = charclass::odd_quadric_tangent(2).expect("Q_3 tangent bundle");
    let ring = tangent.ring().clone();
    let mut integrality = TraceEntry::new("hrr-integrality", "Prop. quadric1")
        .with("tangent (d1, d2, d3)", coords(&tangent).join(", "))
        .with("formula", "chi = 15/2 - 2*d2");
    let mut all_half = true;
    for d2 in -5..=5 {
        let closed = charclass::hrr_q3_closed_form(&int(3), &int(1), &int(d2), &int(1));
        let bundle = charclass::CharClassVector::from_coordinates(&ring, 3, &[int(1), int(d2), int(1)], true)
            .expect("virtual class");
        let hrr = charclass::euler_char_hrr(&tangent, &bundle).expect("HRR on Q_3");
        all_half &= closed == hrr && !closed.is_integer() && closed.denom() == &int(2);
        integrality = integrality.with(&format!("chi(d2={d2})"), closed);
    }
    integrality = integrality
        .with(
            "fractional part",
            if all_half { "1/2 for every d2" } else { "MISMATCH" },
        )
        .with("integral values", "none");
    fails(vec![search, pairing, reduction, integrality])
}

fn coords(v: &charclass::CharClassVector) -> Vec<String> {
    v.coordinates()
        .expect("cyclic bases")
        .iter()
        .map(BigInt::to_string)
        .collect()
}

/// `Q_{2m-1}` with `m >= 3`: the congruence rules out the point property for
/// every odd twist, and `omega = O(-(2m-1))` is odd.
fn odd_quadric_algebraic(m: u32) -> Result<ObstructionReport, ObstructionError> {
    let n = 2 * m - 1;
    let twist = TraceEntry::new("canonical-twist", "Theorem oddquad-alg")
        .with("omega", format!("O(-{n})"))
        .with("twist parity", if n % 2 == 1 { "odd" } else { "even" });
    let mut congruence = TraceEntry::new("odd-twist-congruence", "Prop. cherniden2")
        .with("m", m)
        .with("c_1 mod 2", 1)
        .with(&format!("c_{} mod 2", 2 * m - 1), 1);
    let mut admissible = Vec::new();
    for c in 0..=1 {
        let cong = steenrod::congruence_cherniden2(m, &int(1), &int(c), &int(1))?;
        let wu = steenrod::wu_on_quadric_bundle(m, &int(1), &int(c), &int(1))?;
        if cong != wu {
            return Err(ObstructionError::Internal(format!(
                "Wu identity and congruence disagree at m={m}"
            )));
        }
        congruence = congruence.with(&format!("c_{}={c}", 2 * m - 2), cong);
        if cong {
            admissible.push(c);
        }
    }
    congruence = congruence.with("admissible", list(&admissible));
    let point = TraceEntry::new("point-property-reduction", "Cor. Lpt")
        .with("determinant", format!("omega = O(-{n})"))
        .with(
            "point property",
            if admissible.is_empty() { "fails" } else { "not excluded" },
        );
    let verdict = if admissible.is_empty() {
        Verdict::Fails
    } else {
        Verdict::Unknown
    };
    Ok(ObstructionReport::new(
        Property::D,
        verdict,
        vec![twist, congruence, point],
    ))
}

fn quadric(n: u32) -> Result<ObstructionReport, ObstructionError> {
    Ok(match n {
        1 => holds(vec![TraceEntry::new("curve", "Introduction, curves").with("Q_1", "P^1")]),
        2 => holds(vec![TraceEntry::new(
            "product-closure",
            "Introduction, product closure",
        )
        .with("Q_2", "P^1 x P^1")]),
        4 => holds(vec![grassmannian_entry("Q_4 = G(2, 4)".into())]),
        3 => point_property_q3_verdict(),
        n if n % 2 == 1 => odd_quadric_algebraic(n.div_ceil(2))?,
        n => unknown(vec![TraceEntry::new(
            "even-quadric",
            "Remark after Theorem oddquad-alg",
        )
        .with("n", n)
        .with("status", "open; conjectured to fail for even n >= 6")]),
    })
}

fn complete_intersection(ambient: u32, degrees: &[u32]) -> Result<ObstructionReport, ObstructionError> {
    let ones = degrees.iter().filter(|&&d| d == 1).count() as u32;
    let n = ambient - ones;
    let degs: Vec<u32> = degrees.iter().copied().filter(|&d| d != 1).collect();
    let dim = n - degs.len() as u32;
    let sum: i64 = degs.iter().map(|&d| i64::from(d)).sum();
    let reduced = TraceEntry::new("linear-sections", "Prop. fano1, complete-intersection corollary")
        .with("ambient", n)
        .with("degrees", format!("{degs:?}"));
    if degs.is_empty() {
        return Ok(holds(vec![
            reduced,
            grassmannian_entry(format!("P^{n} = G(1, {})", n + 1)),
        ]));
    }
    if degs == [2] {
        let mut r = quadric(n - 1)?;
        r.trace.insert(0, reduced);
        return Ok(r);
    }
    if n == 4 && degs == [3] {
        return Ok(cubic_threefold());
    }
    match dim {
        1 => Ok(holds(vec![reduced, TraceEntry::new("curve", "Introduction, curves")])),
        2 if sum <= i64::from(n) => Ok(holds(vec![
            reduced,
            TraceEntry::new("rational-surface", "Prop. ruled")
                .with("omega", format!("O({})", sum - i64::from(n) - 1))
                .with("surface", "del Pezzo, hence rational"),
        ])),
        2 => Ok(unknown(vec![
            reduced,
            TraceEntry::new("picard-rank", "Theorem th-surf(d)")
                .with("omega", format!("O({})", sum - i64::from(n) - 1))
                .with(
                    "note",
                    "Picard group Z only for very general members; use k3_generic or pic_z_general",
                ),
        ])),
        _ => {
            let spec = VarietySpec::new(VarietyKind::CompleteIntersection {
                ambient: n,
                degrees: degs.clone(),
            });
            let table = coh_trivial_candidates(&spec, None)?;
            let cands = table.candidates();
            let index_entry = TraceEntry::new("fano-index", "Prop. fano1, complete-intersection corollary")
                .with("omega", format!("O({})", table.index))
                .with("sum of degrees", sum)
                .with("index", table.index)
                .with("candidates", list(&cands));
            if sum >= i64::from(n) {
                if !cands.is_empty() {
                    return Err(ObstructionError::Internal(
                        "index >= -1 yet a candidate survived".into(),
                    ));
                }
                Ok(fails(vec![reduced, index_entry]))
            } else {
                Ok(unknown(vec![
                    reduced,
                    index_entry.with("note", "Fano of index >= 2; the criterion is only necessary"),
                    TraceEntry::new("coh-trivial-candidates", "Theorem Tm").with("candidates", list(&cands)),
                ]))
            }
        }
    }
}

fn cubic_threefold() -> ObstructionReport {
    let spec = VarietySpec::new(VarietyKind::CubicThreefold);
    let table = coh_trivial_candidates(&spec, None).expect("cubic threefold is a catalog entry");
    unknown(vec![
        TraceEntry::new("coh-trivial-candidates", "Theorem Tm")
            .with("omega", format!("O({})", table.index))
            .with("candidates", list(&table.candidates())),
        TraceEntry::new("cubic-threefold", "Introduction, cubic threefolds")
            .with("O(1)-point property", "holds")
            .with("status", "open"),
    ])
}

fn k3_chi_entry(d: i64) -> Result<(TraceEntry, BigInt), ObstructionError> {
    let data = SurfaceRRData::k3();
    let mut entry = TraceEntry::new("k3-chi-table", "Prop. Pk3")
        .with("d", d)
        .with("formula", "n^2 d / 2 + 2");
    let mut min: Option<BigInt> = None;
    for n in -3..=3i64 {
        let chi = charclass::euler_char_surface(&data, &int(n * n * d), &int(0))?;
        min = Some(min.map_or(chi.clone(), |m: BigInt| m.min(chi.clone())));
        entry = entry.with(&format!("chi(O({n}))"), &chi);
    }
    let min = min.expect("non-empty range");
    Ok((entry.with("min chi", &min), min))
}

fn surface_rr(data: &SurfaceRRData, d_sq: i64, d_dot_k: i64) -> Result<BigInt, ObstructionError> {
    Ok(charclass::euler_char_surface(data, &int(d_sq), &int(d_dot_k))?)
}

fn curve_chi_entry(rule: &str, citation: &str) -> TraceEntry {
    let mut entry = TraceEntry::new(rule, citation).with("line bundle on base curve", "general of degree g - 1");
    for g in 0..=3 {
        let chi = charclass::euler_char_curve(&int(g), &int(g - 1));
        entry = entry.with(&format!("chi(g={g})"), chi);
    }
    entry
}

/// `(D1 - D2)^2` from the intersection numbers of `D1` and `D2`.
fn difference_square(d1_sq: i64, d2_sq: i64, d1_d2: i64) -> i64 {
    d1_sq + d2_sq - 2 * d1_d2
}

/// (D) for the surface kinds.
pub fn surface_verdict(spec: &VarietySpec) -> Result<ObstructionReport, ObstructionError> {
    match &spec.kind {
        VarietyKind::K3Generic { d } => {
            let (table, min) = k3_chi_entry(*d)?;
            let cands = coh_trivial_candidates(spec, None)?.candidates();
            if min <= BigInt::zero() || !cands.is_empty() {
                return Err(ObstructionError::Internal("generic K3 produced a vanishing chi".into()));
            }
            Ok(fails(vec![
                table,
                TraceEntry::new("coh-trivial-candidates", "Prop. Tz").with("candidates", list(&cands)),
                TraceEntry::new("picard-rank-one-surface", "Theorem th-surf(d)")
                    .with("omega", "O(0)")
                    .with("isomorphic to P^2", false),
            ]))
        }
        VarietyKind::K3TwoDisjointRationalCurves => {
            // D1^2 = D2^2 = -2, D1.D2 = 0
            let d_sq = difference_square(-2, -2, 0);
            let chi = surface_rr(&SurfaceRRData::k3(), d_sq, 0)?;
            Ok(holds(vec![TraceEntry::new("k3-two-curves", "Prop. two")
                .with("D^2", d_sq)
                .with("D.K", 0)
                .with("chi(O(D1-D2))", chi)]))
        }
        VarietyKind::AbelianSurface => {
            let chi = surface_rr(&SurfaceRRData::abelian(), 0, 0)?;
            Ok(holds(vec![TraceEntry::new("abelian-pic0", TH_SURF_C)
                .with("line bundle", "nontrivial class in Pic^0")
                .with("chi", chi)]))
        }
        VarietyKind::Enriques => {
            let data = SurfaceRRData::enriques();
            let minus_e = surface_rr(&data, -2, 0)?;
            // half pencils: D1^2 = D2^2 = 0, D1.D2 = 1
            let e_sq = difference_square(0, 0, 1);
            let half_pencils = surface_rr(&data, e_sq, 0)?;
            Ok(holds(vec![
                TraceEntry::new("enriques-minus-two-curve", TH_SURF_C)
                    .with("E^2", -2)
                    .with("chi(O(-E))", minus_e),
                TraceEntry::new("enriques-half-pencils", TH_SURF_C)
                    .with("(D1-D2)^2", e_sq)
                    .with("chi(O(D1-D2))", half_pencils),
            ]))
        }
        VarietyKind::HyperellipticSurface => {
            let on_e = charclass::euler_char_curve(&int(1), &int(0));
            let on_x = surface_rr(&SurfaceRRData::abelian(), 0, 0)?;
            Ok(holds(vec![TraceEntry::new("bielliptic", "Prop. bielliptic")
                .with("chi on elliptic factor (degree 0)", on_e)
                .with("chi(M)", on_x)]))
        }
        VarietyKind::RuledSurface => Ok(holds(vec![
            curve_chi_entry("ruled", "Prop. ruled"),
            TraceEntry::new("curve-bundle", "Lemma ctl-curves").with("pullback", "cohomologically trivial"),
        ])),
        VarietyKind::EllipticSurfaceWithSection => Ok(holds(vec![curve_chi_entry("elliptic-section", TH_SURF_C)])),
        VarietyKind::FakeP2 => {
            // chi(O) = 1, K = 3H numerically, H^2 = 1
            let chi = surface_rr(&SurfaceRRData::enriques(), 1, 3)?;
            Ok(unknown(vec![TraceEntry::new("fake-p2", "Remark after Prop. Tz")
                .with("H^2", 1)
                .with("chi(H)", chi)
                .with("status", "open")]))
        }
        VarietyKind::PicZGeneral { dim: 2, index } => pic_z_surface(spec, *index),
        other => Err(ObstructionError::UnsupportedSpec {
            kind: other.tag().to_string(),
            suggestion: "a surface kind such as k3_generic or enriques".into(),
        }),
    }
}

fn pic_z_surface(spec: &VarietySpec, index: i64) -> Result<ObstructionReport, ObstructionError> {
    if spec.pic_finitely_generated == Flag::False {
        return Err(ObstructionError::ContradictoryFlags(
            "pic_finitely_generated = false contradicts Picard group Z".into(),
        ));
    }
    if index == -3 {
        return Ok(holds(vec![TraceEntry::new("projective-plane", "Theorem th-surf(d)")
            .with("omega", "O(-3)")
            .with("surface", "P^2")
            .with("cohomologically trivial", "O(-1), O(-2)")]));
    }
    if index < 0 {
        return Err(ObstructionError::ContradictoryFlags(format!(
            "omega = O({index}) would make a Fano surface with Picard group Z other than P^2"
        )));
    }
    let table = coh_trivial_candidates(spec, None)?;
    let search = TraceEntry::new("coh-trivial-candidates", "Prop. Tz")
        .with("omega", format!("O({index})"))
        .with("window", format!("[{}, {}]", table.window.0, table.window.1))
        .with("candidates", list(&table.candidates()))
        .with("undetermined", list(&table.undetermined()));
    match spec.ample_generator_has_section {
        Flag::True => Ok(fails(vec![
            search,
            TraceEntry::new("picard-rank-one-surface", "Theorem th-surf(d)").with("isomorphic to P^2", false),
        ])),
        _ => Ok(unknown(vec![
            search,
            TraceEntry::new("generator-without-sections", "Remark after Prop. Tz").with("status", "open"),
        ])),
    }
}

fn pic_z_general(spec: &VarietySpec, dim: u32, index: i64) -> Result<ObstructionReport, ObstructionError> {
    if spec.pic_finitely_generated == Flag::False {
        return Err(ObstructionError::ContradictoryFlags(
            "pic_finitely_generated = false contradicts Picard group Z".into(),
        ));
    }
    match dim {
        1 if index == -2 => Ok(holds(vec![
            TraceEntry::new("curve", "Introduction, curves").with("curve", "P^1")
        ])),
        1 => Err(ObstructionError::ContradictoryFlags(format!(
            "a curve with Picard group Z is P^1 with omega = O(-2), not O({index})"
        ))),
        2 => surface_verdict(spec),
        _ if index == -1 => Ok(fails(vec![TraceEntry::new(
            "index-one-fano",
            "Prop. fano1, index-one corollary",
        )
        .with("omega", "O(-1)")
        .with("index", -1)
        .with("needed", "<= -2")])),
        _ if index >= -1 => match spec.ample_generator_has_section {
            Flag::True => Ok(fails(vec![TraceEntry::new("fano-index", "Prop. fano1")
                .with("omega", format!("O({index})"))
                .with("index", index)
                .with("needed", "<= -2")])),
            Flag::False => Ok(unknown(vec![TraceEntry::new("fano-index", "Prop. fano1")
                .with("omega", format!("O({index})"))
                .with("hypothesis", "ample generator without sections; rule does not apply")])),
            Flag::Unknown => Err(ObstructionError::MissingFlag("ample_generator_has_section".into())),
        },
        _ => Ok(unknown(vec![TraceEntry::new("fano-index", "Prop. fano1")
            .with("omega", format!("O({index})"))
            .with("index", index)
            .with("note", "index <= -2 passes the necessary condition")])),
    }
}

/// (D) for any catalog spec, dispatching to the most specific rule.
pub fn diagonal_verdict(spec: &VarietySpec) -> Result<ObstructionReport, ObstructionError> {
    match &spec.kind {
        VarietyKind::ProjectiveSpace { n } => Ok(holds(vec![grassmannian_entry(format!("P^{n} = G(1, {})", n + 1))])),
        VarietyKind::Grassmannian { r, n } => Ok(holds(vec![grassmannian_entry(format!("G({r}, {n})"))])),
        VarietyKind::Curve { genus } => Ok(holds(vec![
            TraceEntry::new("curve", "Introduction, curves").with("genus", genus),
            TraceEntry::new("curve-line-bundle", "Lemma ctl-curves")
                .with("degree", i64::from(*genus) - 1)
                .with(
                    "chi",
                    charclass::euler_char_curve(&int(i64::from(*genus)), &int(i64::from(*genus) - 1)),
                ),
        ])),
        VarietyKind::Quadric { n } => quadric(*n),
        VarietyKind::CompleteIntersection { ambient, degrees } => complete_intersection(*ambient, degrees),
        VarietyKind::CubicThreefold => Ok(cubic_threefold()),
        VarietyKind::K3Generic { .. }
        | VarietyKind::K3TwoDisjointRationalCurves
        | VarietyKind::AbelianSurface
        | VarietyKind::Enriques
        | VarietyKind::HyperellipticSurface
        | VarietyKind::RuledSurface
        | VarietyKind::EllipticSurfaceWithSection
        | VarietyKind::FakeP2 => surface_verdict(spec),
        VarietyKind::PicZGeneral { dim, index } => pic_z_general(spec, *dim, *index),
        VarietyKind::AbelianVariety { g } => match g {
            1 => Ok(holds(vec![
                TraceEntry::new("curve", "Introduction, curves").with("genus", 1)
            ])),
            2 => surface_verdict(&VarietySpec::new(VarietyKind::AbelianSurface)),
            g => Ok(unknown(vec![TraceEntry::new("abelian-variety", "Closing note")
                .with("g", g)
                .with("status", "not proved here; depends on the abelian variety")])),
        },
        VarietyKind::LieGroup { dim, point_property } => {
            let entry = TraceEntry::new("group-variety", "Prop. Pwpp")
                .with("dim", dim)
                .with("weak point property", point_property);
            Ok(ObstructionReport::new(
                Property::D,
                match point_property {
                    Flag::True => Verdict::Holds,
                    Flag::False => Verdict::Fails,
                    Flag::Unknown => Verdict::Unknown,
                },
                vec![entry],
            ))
        }
        VarietyKind::Product(factors) => {
            let mut trace = Vec::new();
            let mut verdicts = Vec::new();
            for (i, f) in factors.iter().enumerate() {
                let r = diagonal_verdict(f)?;
                verdicts.push(r.verdict);
                for mut t in r.trace {
                    t.rule = format!("factor {}: {}", i + 1, t.rule);
                    trace.push(t);
                }
            }
            let mut closure = TraceEntry::new("product-closure", "Introduction, product closure");
            for (i, v) in verdicts.iter().enumerate() {
                closure = closure.with(&format!("factor {}", i + 1), v);
            }
            trace.push(closure);
            Ok(ObstructionReport::new(Property::D, product_verdict(&verdicts), trace))
        }
        VarietyKind::Sphere { .. } => Err(ObstructionError::UnsupportedSpec {
            kind: "sphere".into(),
            suggestion: format!("mode {:?} (spheres only carry D_r, D_o, D_c)", Mode::Topological).to_lowercase(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(kind: VarietyKind) -> Verdict {
        diagonal_verdict(&VarietySpec::new(kind)).unwrap().verdict
    }

    #[test]
    fn quadric_table() {
        assert_eq!(verdict(VarietyKind::Quadric { n: 1 }), Verdict::Holds);
        assert_eq!(verdict(VarietyKind::Quadric { n: 2 }), Verdict::Holds);
        assert_eq!(verdict(VarietyKind::Quadric { n: 3 }), Verdict::Fails);
        assert_eq!(verdict(VarietyKind::Quadric { n: 4 }), Verdict::Holds);
        assert_eq!(verdict(VarietyKind::Quadric { n: 5 }), Verdict::Fails);
        assert_eq!(verdict(VarietyKind::Quadric { n: 6 }), Verdict::Unknown);
        assert_eq!(verdict(VarietyKind::Quadric { n: 7 }), Verdict::Fails);
    }

    #[test]
    fn q3_trace() {
        let r = point_property_q3_verdict();
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.trace[0].values["candidates"], "-2, -1");
        assert_eq!(r.trace[1].values["L1^-1 = L2 (x) omega^-1"], "1 = -2 + 3");
        assert_eq!(r.trace[3].values["chi(d2=0)"], "15/2");
        assert_eq!(r.trace[3].values["chi(d2=-5)"], "35/2");
        assert_eq!(r.trace[3].values["fractional part"], "1/2 for every d2");
    }

    #[test]
    fn complete_intersections() {
        let ci = |n, d: &[u32]| {
            verdict(VarietyKind::CompleteIntersection {
                ambient: n,
                degrees: d.to_vec(),
            })
        };
        assert_eq!(ci(4, &[4]), Verdict::Fails);
        assert_eq!(ci(5, &[2, 3]), Verdict::Fails);
        assert_eq!(ci(4, &[2]), Verdict::Fails);
        assert_eq!(ci(4, &[3]), Verdict::Unknown);
        assert_eq!(ci(5, &[1, 2]), Verdict::Fails);
        assert_eq!(ci(5, &[2, 2]), Verdict::Unknown);
        assert_eq!(ci(3, &[3]), Verdict::Holds);
        assert_eq!(ci(3, &[4]), Verdict::Unknown);
        assert_eq!(ci(3, &[1]), Verdict::Holds);
    }

    #[test]
    fn surfaces() {
        assert_eq!(verdict(VarietyKind::K3Generic { d: 4 }), Verdict::Fails);
        let r = diagonal_verdict(&VarietySpec::new(VarietyKind::K3TwoDisjointRationalCurves)).unwrap();
        assert_eq!(r.trace[0].values["chi(O(D1-D2))"], "0");
        let r = diagonal_verdict(&VarietySpec::new(VarietyKind::Enriques)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.trace[0].values["chi(O(-E))"], "0");
        assert_eq!(r.trace[1].values["chi(O(D1-D2))"], "0");
        assert_eq!(verdict(VarietyKind::FakeP2), Verdict::Unknown);
        for k in [
            VarietyKind::AbelianSurface,
            VarietyKind::HyperellipticSurface,
            VarietyKind::RuledSurface,
            VarietyKind::EllipticSurfaceWithSection,
        ] {
            assert_eq!(verdict(k), Verdict::Holds);
        }
    }

    #[test]
    fn pic_z_rules() {
        let s = |dim, index, f: Flag| VarietySpec::new(VarietyKind::PicZGeneral { dim, index }).with_section_flag(f);
        assert_eq!(diagonal_verdict(&s(2, 1, Flag::True)).unwrap().verdict, Verdict::Fails);
        assert_eq!(
            diagonal_verdict(&s(2, 1, Flag::False)).unwrap().verdict,
            Verdict::Unknown
        );
        assert!(matches!(
            diagonal_verdict(&s(2, 1, Flag::Unknown)),
            Err(ObstructionError::MissingFlag(_))
        ));
        assert_eq!(
            diagonal_verdict(&s(2, -3, Flag::Unknown)).unwrap().verdict,
            Verdict::Holds
        );
        assert_eq!(
            diagonal_verdict(&s(3, -1, Flag::Unknown)).unwrap().verdict,
            Verdict::Fails
        );
        assert_eq!(diagonal_verdict(&s(3, 0, Flag::True)).unwrap().verdict, Verdict::Fails);
        assert_eq!(
            diagonal_verdict(&s(3, -2, Flag::True)).unwrap().verdict,
            Verdict::Unknown
        );
        assert!(diagonal_verdict(&s(3, 0, Flag::True).with_pic_flag(Flag::False)).is_err());
    }

    #[test]
    fn products_do_not_propagate_failure() {
        let p = |a: VarietyKind, b: VarietyKind| {
            verdict(VarietyKind::Product(vec![VarietySpec::new(a), VarietySpec::new(b)]))
        };
        assert_eq!(
            p(VarietyKind::ProjectiveSpace { n: 2 }, VarietyKind::Curve { genus: 3 }),
            Verdict::Holds
        );
        assert_eq!(
            p(VarietyKind::Quadric { n: 3 }, VarietyKind::Curve { genus: 3 }),
            Verdict::Unknown
        );
        assert_eq!(
            p(VarietyKind::CubicThreefold, VarietyKind::Curve { genus: 0 }),
            Verdict::Unknown
        );
    }
}
