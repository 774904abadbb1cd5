//! Degree-2 push-forward of θ^m·[Z] for a divisor Z = β0·χ + β1, showing
//! that β1 drops out and the result is a multiple of the discriminant.
//!
//! ```text
//! cargo run --example discriminant_delta
//! ```

use gysin::verify::{delta_engine_value, verify_delta};

fn main() {
    for r in 2..=5 {
        for d in 1..r {
            let value = delta_engine_value(r, d).expect("valid setup");
            assert!(!value.involves("b1"));
            let report = verify_delta(r, d).expect("valid setup");
            println!(
                "r={r} d={d}  {value}  [{}]",
                if report.passed() { "matches" } else { "MISMATCH" }
            );
        }
    }
}
