//! Tableau counts for every partition up to weight 7, by the hook formula
//! and by exhaustive enumeration.
//!
//! ```text
//! cargo run --example syt_counts
//! ```

use gysin::partition::DEFAULT_SYT_CAP;
use gysin::Partition;

fn main() {
    for w in 0..=7 {
        let shapes = Partition::all_of_weight(w, w);
        println!("weight {w}: {} shapes", shapes.len());
        for lambda in shapes {
            let formula = lambda.syt_count_formula();
            let brute = lambda
                .syt_count_bruteforce(DEFAULT_SYT_CAP)
                .expect("weight within cap");
            assert_eq!(formula, brute);
            println!("  {lambda:<16} f = {formula}");
        }
    }
}
