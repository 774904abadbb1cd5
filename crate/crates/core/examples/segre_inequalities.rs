//! Symbolic Segre inequality expressions for a codimension-1 class on
//! P(E), then evaluation against a small intersection table.
//!
//! ```text
//! cargo run --example segre_inequalities
//! ```

use gysin::ineq::{check_inequalities, required_monomials, segre_lhs_symbolic, segre_ring, IntersectionTable};
use gysin::rat;

fn main() {
    let (r, n, codim) = (2, 2, 1);
    for k in 1..=n {
        let expr = segre_lhs_symbolic(r, n, k, codim).expect("valid parameters");
        println!("k={k}: {expr}");
    }
    let ring = segre_ring(r, n, codim).expect("valid parameters");
    let mut table = IntersectionTable::new(&ring);
    let values = [("b0*c1*H", 1), ("b1*H", 0), ("b0*c1^2", 2), ("b0*c2", 1), ("b1*c1", 0)];
    for (key, v) in values {
        table.insert(key, rat(v, 1)).expect("degree-n key");
    }
    println!("required: {}", required_monomials(r, n, codim).unwrap().join(", "));
    let report = check_inequalities(r, n, codim, &table).expect("complete table");
    for v in &report.values {
        println!("k={}  {}  nonnegative={}", v.k, v.value, v.nonnegative);
    }
}
