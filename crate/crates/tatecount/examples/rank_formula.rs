//! The closed-form rank: zero for odd stabilizer order m, otherwise
//! (C(m, m/2) − C(m, m/2−1))^{d/m}, cross-checked against the weight
//! algebra wherever the product dimension is feasible.
//!
//! ```bash
//! cargo run -p tatecount --example rank_formula
//! ```

use num_bigint::BigUint;
use tatecount::formulas::{lemma_even_count, tate_rank, TateRankInput};
use tatecount::weightalg::{one_dim_count, CharacterPoly};

fn main() {
    println!("central-binomial differences C(2n,n) - C(2n,n-1):");
    for n in 1..=8 {
        println!("  n = {}: {}", n, lemma_even_count(n));
    }

    println!("\nrank table (m = stabilizer order, d = degree, m | d):");
    println!("  m\\d |    2    4    6    8   10   12");
    for m in 1..=6u64 {
        let mut row = format!("  {:3} |", m);
        for d in [2u64, 4, 6, 8, 10, 12] {
            if d % m == 0 {
                let r = tate_rank(TateRankInput::new(m, d).unwrap());
                row.push_str(&format!(" {:4}", r.to_string()));
            } else {
                row.push_str("    .");
            }
        }
        println!("{}", row);
    }

    println!("\ncross-check against the weight algebra (d/m factors, m-th powers):");
    for (m, d) in [(2u64, 4u64), (2, 8), (4, 8), (6, 12)] {
        let r = (d / m) as usize;
        let mut p = CharacterPoly::trivial(r);
        for j in 0..r {
            p = p
                .mul(&CharacterPoly::std_factor(r, j).pow(m as u32).unwrap())
                .unwrap();
        }
        let brute = one_dim_count(&p).unwrap();
        let formula = tate_rank(TateRankInput::new(m, d).unwrap());
        println!(
            "  m = {}, d = {}: formula {} / weight algebra {} / {}",
            m,
            d,
            formula,
            brute,
            if formula == BigUint::from(brute) {
                "agree"
            } else {
                "DISAGREE"
            }
        );
    }
}
