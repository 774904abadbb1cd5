//! Push-forwards of powers of χ from Gr_2 of a rank-4 bundle, computed by
//! repeated Pieri multiplication and by the tableau-count closed form.
//!
//! ```text
//! cargo run --example chi_pushforward
//! ```

use gysin::{ClassSeries, GeneratorTable, GrassSetup};

fn main() {
    let (n, r, d) = (4, 4, 2);
    let setup = GrassSetup::new(n, r, d).expect("valid setup");
    let ring = GeneratorTable::chern(r, n);
    let segre = ClassSeries::chern(&ring, r).expect("generic series").unsigned_segre();
    let top = setup.reldim() + n;
    let mut class = gysin::FiberedClass::unit(&ring, d);
    for power in 0..=top {
        let pieri = setup.pushforward(&class, &segre).expect("pushforward");
        let closed = setup.pushforward_chi_power_closedform(power, &segre);
        assert_eq!(pieri, closed);
        println!("chi^{power:<2} -> {pieri}");
        class = class.mul_by_chi();
    }

    let ids = setup.f_identities();
    println!("f^eps = {}", ids.f_eps);
    for (name, id) in [("box", &ids.plus_box), ("column", &ids.plus_column), ("row", &ids.plus_row)] {
        println!("{name:<6} {} = {}  {}", id.lhs, id.rhs, if id.holds() { "ok" } else { "FAIL" });
    }
}
