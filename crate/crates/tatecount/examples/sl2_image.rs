//! Mod-ℓ image checks: enumerate the matrix group generated mod ℓ and ask
//! whether its determinant-one part is all of SL₂(F_ℓ).
//!
//! ```bash
//! cargo run -p tatecount --example sl2_image
//! ```

use tatecount::repcore::ModlRep;

fn main() {
    let cases: Vec<(&str, u64, Vec<[i64; 4]>)> = vec![
        ("elementary matrices", 5, vec![[1, 1, 0, 1], [1, 0, 1, 1]]),
        ("elementary matrices", 7, vec![[1, 1, 0, 1], [1, 0, 1, 1]]),
        ("upper-triangular (Borel)", 5, vec![[1, 1, 0, 1], [2, 0, 0, 3]]),
        ("diagonal only", 7, vec![[3, 0, 0, 1], [1, 0, 0, 3]]),
        (
            "full GL2 generators",
            7,
            vec![[1, 1, 0, 1], [1, 0, 1, 1], [3, 0, 0, 1]],
        ),
    ];
    for (label, ell, gens) in cases {
        let rep = ModlRep::new(ell, gens).unwrap();
        let order = rep.closure().unwrap().len();
        let contains = rep.sl2_image_check().unwrap();
        println!(
            "ell = {:2}, {:26} closure order {:5}, contains SL2(F_ell): {}",
            ell, label, order, contains
        );
    }
    println!("\n|SL2(F_5)| = 120, |SL2(F_7)| = 336, |GL2(F_7)| = 2016");
}
