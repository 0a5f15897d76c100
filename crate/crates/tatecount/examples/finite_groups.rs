//! Permutation groups with full Cayley closure: subgroups, cosets,
//! conjugacy classes, and the linear character enumeration.
//!
//! ```bash
//! cargo run -p tatecount --example finite_groups
//! ```

use tatecount::exactnum::rat;
use tatecount::groupcore::{inner_product, FiniteGroup, Perm};

fn main() {
    let flip = Perm::parse_cycles("(1 2)", 3).unwrap();
    let rot = Perm::parse_cycles("(1 2 3)", 3).unwrap();
    let s3 = FiniteGroup::from_perm_gens(vec![flip, rot]).unwrap();
    println!("S3: order {}", s3.order());

    let rot_idx = s3
        .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
        .unwrap();
    let a3 = s3.subgroup_closure(&[rot_idx]);
    println!(
        "A3 inside S3: order {}, normal = {}, cosets:",
        a3.order(),
        s3.is_normal(&a3)
    );
    for coset in s3.left_cosets(&a3) {
        let members: Vec<String> = coset
            .members
            .iter()
            .map(|&e| s3.element(e).to_string())
            .collect();
        println!("  rep {}: {{{}}}", s3.element(coset.rep), members.join(", "));
    }

    println!("\nconjugacy classes of S3 (by element index):");
    for class in s3.conjugacy_classes() {
        println!("  {:?}", class);
    }

    println!("\nlinear characters of S3 (values on the two generators):");
    for (k, chi) in s3.linear_characters().unwrap().iter().enumerate() {
        let g = s3.gen_indices();
        println!(
            "  chi_{}: chi(flip) = {}, chi(rot) = {}",
            k,
            chi.value(g[0]).canonicalize(),
            chi.value(g[1]).canonicalize()
        );
    }

    // semidihedral group of order 16, with its quaternion subgroup
    let x = Perm::parse_cycles("(1 3 5 7)(2 4 6 8)", 8).unwrap();
    let y = Perm::parse_cycles("(1 2 5 6)(3 8 7 4)", 8).unwrap();
    let s = Perm::parse_cycles("(2 4)(3 7)(6 8)", 8).unwrap();
    let sd16 = FiniteGroup::from_perm_gens(vec![x, y, s]).unwrap();
    let q8 = sd16.subgroup_closure(&[1, 2]);
    println!(
        "\nSD16: order {}, Q8 subgroup order {}, normal = {}, index = {}",
        sd16.order(),
        q8.order(),
        sd16.is_normal(&q8),
        sd16.order() / q8.order()
    );

    // linear characters are orthonormal under the inner product
    let chars = sd16.linear_characters().unwrap();
    println!("SD16 has {} linear characters; pairwise inner products:", chars.len());
    for a in &chars {
        let row: Vec<String> = chars
            .iter()
            .map(|b| inner_product(a, b).unwrap().to_string())
            .collect();
        println!("  [{}]", row.join(" "));
    }
    assert_eq!(inner_product(&chars[0], &chars[0]).unwrap(), rat(1));
}
