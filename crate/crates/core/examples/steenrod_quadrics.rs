//! Sq^2 on the mod-2 cohomology of odd quadrics, the Wu coefficient and the
//! Chern number congruence it forces on bundles of rank 2m-1.

use std::fmt::Write;

use diagonal::steenrod::{self, Sq2Spec};
use num_bigint::BigInt;

pub fn run_example() -> String {
    let mut out = String::new();
    for m in 2..=4u32 {
        let spec = Sq2Spec::odd_quadric(m).unwrap();
        let ring = spec.ring().clone();
        writeln!(out, "{}:", ring.name()).unwrap();
        for d in ring.degrees() {
            for b in ring.basis(d) {
                let s = steenrod::sq2(&spec, &ring.monomial(b)).unwrap();
                writeln!(out, "  Sq2({}) = {}", ring.format_monomial(b), s).unwrap();
            }
        }
        let n = 4 * m - 4;
        writeln!(out, "  Wu coefficient C({n}) = {}", steenrod::wu_top_coefficient(n)).unwrap();
        let mut admissible = Vec::new();
        for c1 in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    let (c1, a, b) = (BigInt::from(c1), BigInt::from(a), BigInt::from(b));
                    if steenrod::congruence_cherniden2(m, &c1, &a, &b).unwrap() {
                        admissible.push(format!("({c1},{a},{b})"));
                    }
                }
            }
        }
        writeln!(
            out,
            "  (c1, c_(2m-2), c_(2m-1)) mod 2 allowed: {}",
            admissible.join(" ")
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
