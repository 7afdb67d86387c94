//! Topological variants of the diagonal property: spheres, RP^3, odd
//! quadrics and complete intersection threefolds.

use std::fmt::Write;

use diagonal::obstruction::{
    dc_odd_quadric_verdict, sphere_verdicts, spin_ci_threefold_verdict, topological_verdicts, Flag, VarietyKind,
    VarietySpec,
};

pub fn run_example() -> String {
    let mut out = String::new();
    writeln!(out, "n   D_r    D_o    D_c").unwrap();
    for n in 1..=10 {
        let [r, o, c] = sphere_verdicts(n);
        writeln!(out, "S^{n:<2} {:<6} {:<6} {}", r.verdict, o.verdict, c.verdict).unwrap();
    }

    let rp3 = VarietySpec::new(VarietyKind::LieGroup {
        dim: 3,
        point_property: Flag::True,
    })
    .with_h1_flag(Flag::False);
    let v: Vec<String> = topological_verdicts(&rp3)
        .unwrap()
        .iter()
        .map(|r| format!("{} {}", r.property, r.verdict))
        .collect();
    writeln!(out, "RP^3: {}", v.join(", ")).unwrap();

    for m in 1..=4 {
        let r = dc_odd_quadric_verdict(m).unwrap();
        writeln!(out, "Q_{}: {} {}", 2 * m - 1, r.property, r.verdict).unwrap();
    }

    for (n, degrees) in [(4, vec![2]), (4, vec![3]), (5, vec![2, 2]), (6, vec![2, 2, 2])] {
        let r = spin_ci_threefold_verdict(n, &degrees).unwrap();
        writeln!(out, "CI{degrees:?} in P^{n}: {} {}", r.property, r.verdict).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
