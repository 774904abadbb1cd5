//! Segre classes of a rank-3 bundle and the duality between Schur
//! determinants in Chern and Segre classes.
//!
//! ```text
//! cargo run --example segre_inversion
//! ```

use gysin::{schur_det, ClassSeries, GeneratorTable, Partition};

fn main() {
    let n = 4;
    let ring = GeneratorTable::chern(3, n);
    let c = ClassSeries::chern(&ring, 3).expect("generic Chern series");
    let s = c.unsigned_segre();
    for k in 1..=n as i64 {
        println!("s{k} = {}", s.component(k));
    }

    for w in 1..=n as usize {
        for lambda in Partition::all_of_weight(w, w) {
            let conj = lambda.conjugate();
            let lhs = schur_det(&conj.padded(conj.len()), &c);
            let rhs = schur_det(&lambda.padded(lambda.len()), &s);
            assert_eq!(lhs, rhs);
            println!("D_{conj}(c) = D_{lambda}(s) = {lhs}");
        }
    }
}
