//! Runs the default verification sweep and prints the report table.
//!
//! ```text
//! cargo run --example verification_suite
//! ```

use gysin::verify::{run_suite, SuiteConfig};

fn main() {
    let report = run_suite(&SuiteConfig::default()).expect("default sweep is well-formed");
    print!("{}", report.render_table(true));
    if !report.all_pass {
        std::process::exit(1);
    }
}
