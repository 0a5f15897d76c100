//! Exact cyclotomic arithmetic: roots of unity on the power basis, field
//! inversion by rational linear algebra, and exact rank/kernel computation.
//!
//! ```bash
//! cargo run -p tatecount --example cyclotomic_arithmetic
//! ```

use tatecount::exactnum::{cyc_root, CyclotomicNumber, ExactMatrix};

fn main() {
    let i = cyc_root(4, 1);
    println!("zeta_4        = {}", i);
    println!("zeta_4^2      = {}", i.mul(&i).unwrap());

    let z3 = cyc_root(3, 1);
    println!("zeta_3^2      = {}  (reduced by 1 + x + x^2)", z3.mul(&z3).unwrap());

    let mixed = z3.add(&i).unwrap();
    println!("zeta_3+zeta_4 = {}  (lands in conductor 12)", mixed);

    let x = CyclotomicNumber::one(4).add(&i).unwrap();
    let inv = x.inv().unwrap();
    println!("(1+zeta_4)^-1 = {}", inv);
    println!("check x * x^-1 is one: {}", x.mul(&inv).unwrap().is_one());

    // ζ₈² lives in the smaller field of conductor 4
    let reduced = cyc_root(8, 2).canonicalize();
    println!("zeta_8^2 canonicalized: {}", reduced);

    // exact linear algebra: the second row is ζ₄ times the first
    let m = ExactMatrix::from_entries(
        2,
        2,
        vec![
            CyclotomicNumber::one(4),
            cyc_root(4, 1),
            cyc_root(4, 1),
            cyc_root(4, 2),
        ],
    )
    .unwrap();
    println!("\nmatrix rows (1, i), (i, -1):");
    println!("  rank       = {}", m.rank().unwrap());
    println!("  kernel dim = {}", m.kernel_dim().unwrap());
    let (rref, _) = m.rref().unwrap();
    println!("  rref       =\n{}", rref);
}
