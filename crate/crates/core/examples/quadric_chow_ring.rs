//! Chow rings of odd quadrics: bases, products, degrees, the mod-2
//! companion and the Kunneth square restricted to the diagonal.

use std::fmt::Write;

use diagonal::catalog;
use diagonal::ring::restrict_to_diagonal;

pub fn run_example() -> String {
    let mut out = String::new();
    for m in 2..=4 {
        let q = catalog::odd_quadric(m).unwrap();
        writeln!(out, "{} (complex dimension {})", q.name(), q.complex_dimension()).unwrap();
        for d in q.degrees() {
            let names: Vec<String> = q.basis(d).iter().map(|b| q.format_monomial(b)).collect();
            writeln!(out, "  CH^{}: {}", d / 2, names.join(", ")).unwrap();
        }
        let x = q.generator("x").unwrap();
        let y = q.generator("y").unwrap();
        writeln!(out, "  x^{m} = {}", x.pow(m)).unwrap();
        writeln!(
            out,
            "  deg x^{} = {}",
            2 * m - 1,
            x.pow(2 * m - 1).degree_evaluate().unwrap()
        )
        .unwrap();
        writeln!(
            out,
            "  deg x^{}*y = {}",
            m - 1,
            (&x.pow(m - 1) * &y).degree_evaluate().unwrap()
        )
        .unwrap();
        let two_y = q.parse_element("2*y").unwrap();
        writeln!(out, "  2y mod 2 = {}", two_y.reduce_mod2().unwrap()).unwrap();
    }

    let q3 = catalog::odd_quadric(2).unwrap();
    let sq = catalog::square(&q3).unwrap();
    let x = q3.generator("x").unwrap();
    let y = q3.generator("y").unwrap();
    let xy = &sq.cross_left(&x).unwrap() * &sq.cross_right(&y).unwrap();
    writeln!(
        out,
        "{}: x (x) y restricts to {}",
        sq.name(),
        restrict_to_diagonal(&xy).unwrap()
    )
    .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
