//! Hirzebruch-Riemann-Roch on Q_3: Todd class, Chern characters and the
//! half-integral Euler characteristic that rules out the diagonal property.

use std::fmt::Write;

use diagonal::catalog;
use diagonal::charclass::{self, CharClassVector};
use diagonal::obstruction::point_property_q3_verdict;
use num_bigint::BigInt;

pub fn run_example() -> String {
    let mut out = String::new();
    let q3 = catalog::odd_quadric(2).unwrap();
    let tangent = charclass::odd_quadric_tangent(2).unwrap();
    let d: Vec<String> = tangent.coordinates().unwrap().iter().map(BigInt::to_string).collect();
    writeln!(out, "c(T_Q3) = {}  (d-coordinates {})", tangent.total(), d.join(", ")).unwrap();
    for (i, t) in charclass::todd_class(&tangent).unwrap().iter().enumerate() {
        writeln!(out, "td_{i} = ({}) / {}", t.numerator(), t.denominator()).unwrap();
    }

    let h = q3.generator("x").unwrap();
    for n in -3..=3 {
        let line = CharClassVector::line_bundle(&h.scale(&BigInt::from(n))).unwrap();
        let chi = charclass::euler_char_hrr(&tangent, &line).unwrap();
        writeln!(out, "chi(O({n})) = {chi}").unwrap();
    }

    writeln!(out, "rank 3, d = (1, d2, 1):").unwrap();
    for d2 in -2..=2 {
        let bundle = CharClassVector::from_coordinates(&q3, 3, &[1.into(), d2.into(), 1.into()], false).unwrap();
        let hrr = charclass::euler_char_hrr(&tangent, &bundle).unwrap();
        let closed = charclass::hrr_q3_closed_form(&3.into(), &1.into(), &d2.into(), &1.into());
        writeln!(out, "  d2 = {d2}: chi = {hrr} (closed form {closed})").unwrap();
    }

    let report = point_property_q3_verdict();
    writeln!(out, "Q3: {} {}", report.property, report.verdict).unwrap();
    for t in &report.trace {
        writeln!(out, "  {} [{}]", t.rule, t.citation).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
