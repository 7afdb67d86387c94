//! Rules for the topological variants `D_r`, `D_o`, `D_c`.

use num_bigint::BigInt;

use super::algebraic::diagonal_verdict;
use super::spec::{Flag, VarietyKind, VarietySpec};
use super::{product_verdict, ObstructionError, ObstructionReport, Property, TraceEntry, Verdict};
use crate::catalog;
use crate::charclass;
use crate::ring::restrict_to_diagonal;
use crate::steenrod;

fn report(property: Property, verdict: Verdict, entry: TraceEntry) -> ObstructionReport {
    ObstructionReport::new(property, verdict, vec![entry])
}

fn from_bool(b: bool) -> Verdict {
    if b {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// `S^n`: `D_r` iff `n` in {1, 2, 4, 8}, `D_o` iff `n` in {2, 4, 8}, `D_c` iff `n = 2`.
pub fn sphere_verdicts(n: u32) -> [ObstructionReport; 3] {
    let r = [1, 2, 4, 8].contains(&n);
    let o = [2, 4, 8].contains(&n);
    let c = n == 2;
    let dr = if r {
        let cite = if n == 1 {
            "Example liegroup"
        } else {
            "Example projline2"
        };
        TraceEntry::new("sphere-positive", cite)
    } else {
        TraceEntry::new("sphere-table", "Theorem prop1")
    }
    .with("n", n)
    .with("n in {1,2,4,8}", r);
    let d_o = if o {
        TraceEntry::new("sphere-positive", "Example projline2")
    } else if n % 2 == 1 {
        TraceEntry::new("odd-dimension", "Theorem prop3")
    } else {
        TraceEntry::new("sphere-table", "Theorem prop1")
    }
    .with("n", n)
    .with("n in {2,4,8}", o);
    let dc = if c {
        TraceEntry::new("sphere-positive", "Example projgras").with("S^2", "CP^1")
    } else if o {
        TraceEntry::new("not-almost-complex", "Example projline2")
    } else {
        TraceEntry::new("sphere-table", "Theorem top(1)")
    }
    .with("n", n)
    .with("n = 2", c);
    [
        report(Property::Dr, from_bool(r), dr),
        report(Property::Do, from_bool(o), d_o),
        report(Property::Dc, from_bool(c), dc),
    ]
}

/// `D_r` and `D_o` of a compact odd-dimensional manifold.
pub fn odd_dim_manifold_verdict(
    orientable: bool,
    h1_mod2_zero: Flag,
    lie_group_with_point_property: bool,
) -> Result<[ObstructionReport; 2], ObstructionError> {
    if h1_mod2_zero == Flag::True && lie_group_with_point_property {
        return Err(ObstructionError::ContradictoryFlags(
            "H_1(M; Z/2) = 0 excludes D_r, but a Lie group with the point property has D_r".into(),
        ));
    }
    let d_o = if orientable {
        report(
            Property::Do,
            Verdict::Fails,
            TraceEntry::new("odd-dimension", "Theorem prop3")
                .with("orientable", true)
                .with("dimension parity", "odd"),
        )
    } else {
        report(
            Property::Do,
            Verdict::Fails,
            TraceEntry::new("not-orientable", "Theorem prop3").with("orientable", false),
        )
    };
    let dr = match (h1_mod2_zero, lie_group_with_point_property) {
        (Flag::True, _) => report(
            Property::Dr,
            Verdict::Fails,
            TraceEntry::new("odd-dimension-h1", "Theorem prop3").with("H_1(M; Z/2) = 0", true),
        ),
        (_, true) => report(
            Property::Dr,
            Verdict::Holds,
            TraceEntry::new("lie-group", "Example liegroup")
                .with("point property", true)
                .with("sharpness", "Remark proj3rmk"),
        ),
        (h1, false) => report(
            Property::Dr,
            Verdict::Unknown,
            TraceEntry::new("odd-dimension-h1", "Theorem prop3").with("H_1(M; Z/2) = 0", h1),
        ),
    };
    Ok([dr, d_o])
}

/// Every compact almost complex 4-manifold has `D_c`.
pub fn dim4_almost_complex_verdict() -> ObstructionReport {
    report(
        Property::Dc,
        Verdict::Holds,
        TraceEntry::new("almost-complex-surface", "Theorem dim4").with("complex dimension", 2),
    )
}

/// The spin criterion for almost complex 6-manifolds with `H^1 = 0`, `H^2 = Z`.
pub fn spin_6fold_necessary(h1_zero: bool, h2_is_z: bool, w2_zero: bool) -> ObstructionReport {
    let entry = TraceEntry::new("spin-criterion", "Theorem spinprop2")
        .with("H^1 = 0", h1_zero)
        .with("H^2 = Z", h2_is_z)
        .with("w_2 = 0", w2_zero);
    if h1_zero && h2_is_z && !w2_zero {
        report(Property::Dc, Verdict::Fails, entry)
    } else if !(h1_zero && h2_is_z) {
        report(
            Property::Dc,
            Verdict::Unknown,
            entry.with("hypotheses", "not met; see Remark spinproprmk"),
        )
    } else {
        report(
            Property::Dc,
            Verdict::Unknown,
            entry.with("condition", "necessary only"),
        )
    }
}

/// `D_c` for a complete intersection threefold in `P^n`: spin, that is
/// `n + 1 - sum d_i` even, is necessary.
pub fn spin_ci_threefold_verdict(n: u32, degrees: &[u32]) -> Result<ObstructionReport, ObstructionError> {
    if n < degrees.len() as u32 || n - degrees.len() as u32 != 3 {
        return Err(ObstructionError::WrongDimension {
            ambient: n,
            equations: degrees.len(),
        });
    }
    let sum: i64 = degrees.iter().map(|&d| i64::from(d)).sum();
    let c1 = i64::from(n) + 1 - sum;
    let parity = c1.rem_euclid(2);
    let entry = TraceEntry::new("spin-complete-intersection", "Cor. hyperP4")
        .with("c_1(T)", format!("{c1} h"))
        .with("n + 1 - sum d_i mod 2", parity);
    Ok(if parity == 1 {
        report(Property::Dc, Verdict::Fails, entry.with("w_2", "nonzero"))
    } else {
        report(
            Property::Dc,
            Verdict::Unknown,
            entry.with("w_2", "0; criterion is only necessary"),
        )
    })
}

/// `D_c` for `Q_{2m-1}`: holds for `m = 1`, fails for `m >= 2` by the
/// parity argument on the two slices of a diagonal bundle.
pub fn dc_odd_quadric_verdict(m: u32) -> Result<ObstructionReport, ObstructionError> {
    match m {
        0 => return Err(ObstructionError::BadM(0)),
        1 => {
            return Ok(report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("riemann-sphere", "Example riemsurf").with("Q_1", "CP^1"),
            ))
        }
        _ => {}
    }
    let tangent = charclass::odd_quadric_tangent(m)?;
    let ring = tangent.ring().clone();
    let x = ring.generator("x").expect("quadric ring has x");
    let c1 = tangent.c(1);
    let c1_coeff = c1.cyclic_coordinate(2).expect("degree 2 is cyclic");
    let first = TraceEntry::new("tangent-first-chern", "Theorem oddquad")
        .with("m", m)
        .with("c_1(T)", &c1)
        .with("(2m-1)", 2 * m - 1);

    let square = catalog::square(&ring)?;
    let left = restrict_to_diagonal(&square.cross_left(&x)?)?;
    let right = restrict_to_diagonal(&square.cross_right(&x)?)?;
    if left != x || right != x {
        return Err(ObstructionError::Internal("diagonal restriction of x*1, 1*x".into()));
    }
    let sum_parity = c1_coeff.clone() % BigInt::from(2);
    let kunneth = TraceEntry::new("kunneth-restriction", "Theorem spinprop2")
        .with("c_1(E)", "a1 (x*1) + a2 (1*x)")
        .with("restricted to diagonal", "(a1 + a2) x")
        .with("a1 + a2", &c1_coeff)
        .with("a1 + a2 mod 2", &sum_parity);

    let slice = TraceEntry::new("slice-point-property", "Remark euler1")
        .with(&format!("c_{} of each slice mod 2", 2 * m - 1), 1);

    let mut congruence = TraceEntry::new("slice-congruence", "Prop. cherniden2");
    let mut forced = Vec::new();
    for a in 0..=1i64 {
        let mut ok_any = false;
        for c in 0..=1i64 {
            let a_big = BigInt::from(a);
            let c_big = BigInt::from(c);
            let one = BigInt::from(1);
            let cong = steenrod::congruence_cherniden2(m, &a_big, &c_big, &one)?;
            let wu = steenrod::wu_on_quadric_bundle(m, &a_big, &c_big, &one)?;
            if cong != wu {
                return Err(ObstructionError::Internal(format!(
                    "Wu identity and congruence disagree at m={m}"
                )));
            }
            congruence = congruence.with(&format!("a={a}, c_{}={c}", 2 * m - 2), cong);
            ok_any |= cong;
        }
        if ok_any {
            forced.push(a);
        }
    }
    let forced_text = forced.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    congruence = congruence.with("admissible a mod 2", &forced_text);
    let contradiction = forced == [0] && sum_parity == BigInt::from(1);
    let last = TraceEntry::new("parity-contradiction", "Theorem oddquad")
        .with("a1 mod 2", &forced_text)
        .with("a2 mod 2", &forced_text)
        .with("a1 + a2 mod 2 forced", 0)
        .with("a1 + a2 mod 2 required", &sum_parity)
        .with("contradiction", contradiction);
    let verdict = if contradiction {
        Verdict::Fails
    } else {
        Verdict::Unknown
    };
    Ok(ObstructionReport::new(
        Property::Dc,
        verdict,
        vec![first, kunneth, slice, congruence, last],
    ))
}

fn unknown(property: Property, note: &str) -> ObstructionReport {
    report(
        property,
        Verdict::Unknown,
        TraceEntry::new("no-rule", "Remark almcomp").with("note", note),
    )
}

fn merge(a: ObstructionReport, b: ObstructionReport) -> Result<ObstructionReport, ObstructionError> {
    match (a.verdict, b.verdict) {
        (Verdict::Unknown, _) => Ok(b),
        (_, Verdict::Unknown) => Ok(a),
        (x, y) if x == y => {
            let mut a = a;
            a.trace.extend(b.trace);
            Ok(a)
        }
        _ => Err(ObstructionError::ContradictoryFlags(format!(
            "{} both holds and fails under the given inputs",
            a.property
        ))),
    }
}

fn via_algebraic(spec: &VarietySpec) -> Result<ObstructionReport, ObstructionError> {
    let alg = diagonal_verdict(spec)?;
    Ok(match alg.verdict {
        Verdict::Holds => report(
            Property::Dc,
            Verdict::Holds,
            TraceEntry::new("algebraic-implies-complex", "Remark almcomp").with("D", Verdict::Holds),
        ),
        v => report(
            Property::Dc,
            Verdict::Unknown,
            TraceEntry::new("algebraic-implies-complex", "Remark almcomp").with("D", v),
        ),
    })
}

fn surface_dc(spec: &VarietySpec) -> ObstructionReport {
    let mut r = dim4_almost_complex_verdict();
    let contrast = match diagonal_verdict(&spec.clone().with_mode(super::Mode::Algebraic)) {
        Ok(a) => a.verdict.to_string(),
        Err(_) => "n/a".to_string(),
    };
    r.trace[0] = r.trace[0].clone().with("algebraic D", contrast);
    r
}

fn initial(spec: &VarietySpec) -> Result<[ObstructionReport; 3], ObstructionError> {
    let unk = |note: &str| [unknown(Property::Dr, note), unknown(Property::Do, note)];
    let with_dc = |dc: ObstructionReport, note: &str| {
        let [dr, d_o] = unk(note);
        [dr, d_o, dc]
    };
    Ok(match &spec.kind {
        VarietyKind::Sphere { n } => sphere_verdicts(*n),
        VarietyKind::LieGroup { dim, point_property } => {
            let pp = report(
                Property::Dr,
                match point_property {
                    Flag::True => Verdict::Holds,
                    Flag::False => Verdict::Fails,
                    Flag::Unknown => Verdict::Unknown,
                },
                TraceEntry::new("lie-group", "Example liegroup").with("point property", point_property),
            );
            if dim % 2 == 1 {
                let [dr, d_o] = odd_dim_manifold_verdict(true, spec.h1_mod2_zero, *point_property == Flag::True)?;
                let dc = report(
                    Property::Dc,
                    Verdict::Fails,
                    TraceEntry::new("odd-dimension", "Remark almcomp").with("dim", dim),
                );
                let dr = if *point_property == Flag::True {
                    dr
                } else {
                    merge(pp, dr)?
                };
                [dr, d_o, dc]
            } else {
                [
                    pp,
                    unknown(Property::Do, "even-dimensional Lie group"),
                    unknown(Property::Dc, "even-dimensional Lie group"),
                ]
            }
        }
        VarietyKind::ProjectiveSpace { n } => with_dc(
            report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("complex-grassmannian", "Example projgras").with("CP^n", format!("G(1, {})", n + 1)),
            ),
            "",
        ),
        VarietyKind::Grassmannian { r, n } => with_dc(
            report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("complex-grassmannian", "Example projgras").with("G", format!("G({r}, {n})")),
            ),
            "",
        ),
        VarietyKind::Curve { genus } => with_dc(
            report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("riemann-surface", "Example riemsurf").with("genus", genus),
            ),
            "",
        ),
        VarietyKind::Quadric { n } if n % 2 == 1 => with_dc(dc_odd_quadric_verdict(n.div_ceil(2))?, ""),
        VarietyKind::Quadric { n: 2 } => with_dc(
            report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("product", "Example prodexample").with("Q_2", "CP^1 x CP^1"),
            ),
            "",
        ),
        VarietyKind::Quadric { n: 4 } => with_dc(
            report(
                Property::Dc,
                Verdict::Holds,
                TraceEntry::new("complex-grassmannian", "Example projgras").with("Q_4", "G(2, 4)"),
            ),
            "",
        ),
        VarietyKind::Quadric { n } => with_dc(unknown(Property::Dc, &format!("even quadric Q_{n}")), ""),
        VarietyKind::CubicThreefold => with_dc(spin_ci_threefold_verdict(4, &[3])?, ""),
        VarietyKind::CompleteIntersection { ambient, degrees } => {
            let dim = ambient - degrees.len() as u32;
            match dim {
                2 => with_dc(surface_dc(spec), ""),
                3 => with_dc(
                    merge(spin_ci_threefold_verdict(*ambient, degrees)?, via_algebraic(spec)?)?,
                    "",
                ),
                _ => with_dc(via_algebraic(spec)?, ""),
            }
        }
        VarietyKind::K3Generic { .. }
        | VarietyKind::K3TwoDisjointRationalCurves
        | VarietyKind::AbelianSurface
        | VarietyKind::Enriques
        | VarietyKind::HyperellipticSurface
        | VarietyKind::RuledSurface
        | VarietyKind::EllipticSurfaceWithSection
        | VarietyKind::FakeP2
        | VarietyKind::PicZGeneral { dim: 2, .. } => with_dc(surface_dc(spec), ""),
        VarietyKind::AbelianVariety { g } => match g {
            1 => with_dc(
                report(
                    Property::Dc,
                    Verdict::Holds,
                    TraceEntry::new("riemann-surface", "Example riemsurf").with("genus", 1),
                ),
                "",
            ),
            2 => with_dc(surface_dc(spec), ""),
            g => [
                report(
                    Property::Dr,
                    Verdict::Holds,
                    TraceEntry::new("torus", "Example prodexample")
                        .with("factors", format!("{} copies of S^1", 2 * g))
                        .with("S^1", "Example liegroup"),
                ),
                unknown(Property::Do, "complex torus of dimension > 2"),
                unknown(Property::Dc, "complex torus of dimension > 2"),
            ],
        },
        VarietyKind::PicZGeneral { .. } => with_dc(via_algebraic(spec)?, ""),
        VarietyKind::Product(factors) => {
            let mut per: [Vec<Verdict>; 3] = Default::default();
            let mut traces: [Vec<TraceEntry>; 3] = Default::default();
            for (i, f) in factors.iter().enumerate() {
                let rs = topological_verdicts(f)?;
                for (k, r) in rs.into_iter().enumerate() {
                    per[k].push(r.verdict);
                    for mut t in r.trace {
                        t.rule = format!("factor {}: {}", i + 1, t.rule);
                        traces[k].push(t);
                    }
                }
            }
            let props = [Property::Dr, Property::Do, Property::Dc];
            let mut out: Vec<ObstructionReport> = Vec::new();
            for k in 0..3 {
                let mut closure = TraceEntry::new("product-closure", "Example prodexample");
                for (i, v) in per[k].iter().enumerate() {
                    closure = closure.with(&format!("factor {}", i + 1), v);
                }
                let mut trace = std::mem::take(&mut traces[k]);
                trace.push(closure);
                out.push(ObstructionReport::new(props[k], product_verdict(&per[k]), trace));
            }
            out.try_into().expect("three properties")
        }
    })
}

/// Applies `D_c => D_o => D_r` and its contrapositive to upgrade UNKNOWN verdicts.
fn close(mut reports: [ObstructionReport; 3]) -> Result<[ObstructionReport; 3], ObstructionError> {
    for (from, to) in [(2usize, 1usize), (1, 0)] {
        if reports[from].verdict == Verdict::Holds {
            match reports[to].verdict {
                Verdict::Unknown => {
                    let p = reports[from].property;
                    reports[to].verdict = Verdict::Holds;
                    reports[to]
                        .trace
                        .push(TraceEntry::new("implication", "Remark almcomp").with("from", p));
                }
                Verdict::Fails => {
                    return Err(ObstructionError::Internal(format!(
                        "{} holds but {} fails",
                        reports[from].property, reports[to].property
                    )))
                }
                Verdict::Holds => {}
            }
        }
    }
    for (from, to) in [(0usize, 1usize), (1, 2)] {
        if reports[from].verdict == Verdict::Fails && reports[to].verdict == Verdict::Unknown {
            let p = reports[from].property;
            reports[to].verdict = Verdict::Fails;
            reports[to]
                .trace
                .push(TraceEntry::new("implication", "Remark almcomp").with("from", p));
        }
    }
    Ok(reports)
}

/// `[D_r, D_o, D_c]` for a spec read as a manifold.
pub fn topological_verdicts(spec: &VarietySpec) -> Result<[ObstructionReport; 3], ObstructionError> {
    close(initial(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rs: &[ObstructionReport]) -> Vec<Verdict> {
        rs.iter().map(|r| r.verdict).collect()
    }

    #[test]
    fn sphere_table() {
        use Verdict::*;
        assert_eq!(v(&sphere_verdicts(4)), [Holds, Holds, Fails]);
        assert_eq!(v(&sphere_verdicts(6)), [Fails, Fails, Fails]);
        assert_eq!(v(&sphere_verdicts(1)), [Holds, Fails, Fails]);
        assert_eq!(v(&sphere_verdicts(2)), [Holds, Holds, Holds]);
    }

    #[test]
    fn odd_dimension() {
        use Verdict::*;
        assert_eq!(
            v(&odd_dim_manifold_verdict(true, Flag::False, true).unwrap()),
            [Holds, Fails]
        );
        assert_eq!(
            v(&odd_dim_manifold_verdict(true, Flag::True, false).unwrap()),
            [Fails, Fails]
        );
        assert_eq!(
            v(&odd_dim_manifold_verdict(true, Flag::Unknown, false).unwrap()),
            [Unknown, Fails]
        );
        assert!(matches!(
            odd_dim_manifold_verdict(true, Flag::True, true),
            Err(ObstructionError::ContradictoryFlags(_))
        ));
    }

    #[test]
    fn spin_rules() {
        assert_eq!(spin_ci_threefold_verdict(4, &[2]).unwrap().verdict, Verdict::Fails);
        assert_eq!(spin_ci_threefold_verdict(4, &[3]).unwrap().verdict, Verdict::Unknown);
        assert_eq!(spin_ci_threefold_verdict(5, &[2, 2]).unwrap().verdict, Verdict::Unknown);
        assert!(matches!(
            spin_ci_threefold_verdict(5, &[2]),
            Err(ObstructionError::WrongDimension { .. })
        ));
        assert_eq!(spin_6fold_necessary(true, true, false).verdict, Verdict::Fails);
        assert_eq!(spin_6fold_necessary(true, false, false).verdict, Verdict::Unknown);
        assert_eq!(spin_6fold_necessary(true, true, true).verdict, Verdict::Unknown);
    }

    #[test]
    fn odd_quadrics() {
        assert_eq!(dc_odd_quadric_verdict(1).unwrap().verdict, Verdict::Holds);
        for m in 2..=4 {
            let r = dc_odd_quadric_verdict(m).unwrap();
            assert_eq!(r.verdict, Verdict::Fails);
            assert_eq!(r.trace[1].values["a1 + a2 mod 2"], "1");
            assert_eq!(r.trace[3].values["admissible a mod 2"], "0");
            assert_eq!(r.trace[4].values["contradiction"], "true");
        }
        assert!(dc_odd_quadric_verdict(0).is_err());
    }

    #[test]
    fn manifold_specs() {
        use Verdict::*;
        let top = |k: VarietyKind| v(&topological_verdicts(&VarietySpec::new(k)).unwrap());
        let rp3 = VarietySpec::new(VarietyKind::LieGroup {
            dim: 3,
            point_property: Flag::True,
        })
        .with_h1_flag(Flag::False);
        assert_eq!(v(&topological_verdicts(&rp3).unwrap()), [Holds, Fails, Fails]);
        assert_eq!(top(VarietyKind::K3Generic { d: 4 }), [Holds, Holds, Holds]);
        assert_eq!(top(VarietyKind::Quadric { n: 3 }), [Unknown, Unknown, Fails]);
        let p2p1 = VarietyKind::Product(vec![
            VarietySpec::new(VarietyKind::ProjectiveSpace { n: 2 }),
            VarietySpec::new(VarietyKind::ProjectiveSpace { n: 1 }),
        ]);
        assert_eq!(top(p2p1), [Holds, Holds, Holds]);
        assert_eq!(top(VarietyKind::Sphere { n: 6 }), [Fails, Fails, Fails]);
        assert_eq!(top(VarietyKind::CubicThreefold), [Unknown, Unknown, Unknown]);
    }
}
