//! Expand tensor powers of the standard GL₂ character, decompose them into
//! irreducibles, and count one-dimensional constituents.
//!
//! ```bash
//! cargo run -p tatecount --example weight_decomposition
//! ```

use tatecount::weightalg::{decompose, one_dim_count, CharacterPoly};

fn main() {
    // R^{⊗4}: the character is (a + a⁻¹b)⁴
    let p = CharacterPoly::std().pow(4).unwrap();
    println!("weights of R^(x)4, one term per line (x y : multiplicity):");
    print!("{}", p.render());

    println!("\ndecomposition into irreducibles (k,m):multiplicity:");
    for (hw, mult) in decompose(&p).unwrap() {
        println!("  {}:{}  (dimension {})", hw, mult, hw.dimension());
    }

    println!("\none-dimensional constituent counts for R^(x)e:");
    for e in 1..=12u32 {
        let count = one_dim_count(&CharacterPoly::std().pow(e).unwrap()).unwrap();
        println!("  e = {:2}: {}", e, count);
    }

    // two independent GL₂ factors: counts multiply
    let two = CharacterPoly::std_factor(2, 0)
        .pow(2)
        .unwrap()
        .mul(&CharacterPoly::std_factor(2, 1).pow(2).unwrap())
        .unwrap();
    println!(
        "\ntwo factors, square each: one_dim = {} (product of the per-factor counts)",
        one_dim_count(&two).unwrap()
    );
}
