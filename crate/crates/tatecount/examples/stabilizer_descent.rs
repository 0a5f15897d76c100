//! Twist-equivalence stabilizers, the stable tensor identity, brute-force
//! counting against the closed form, and the quadratic descent step — on
//! three fixtures with different outcomes.
//!
//! ```bash
//! cargo run -p tatecount --example stabilizer_descent
//! ```

use std::path::PathBuf;

use tatecount::asai::{parse_model_fixture, DescentOutcome};

fn main() {
    for name in ["sd16_q8.model", "gl23_sl23.model", "m16_sigma.model", "swap_q8.model"] {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(name);
        let model = parse_model_fixture(&std::fs::read_to_string(path).unwrap()).unwrap();
        println!("== {} ==", name);
        println!(
            "  |G| = {}, |H| = {}, d = {}",
            model.group().order(),
            model.subgroup().order(),
            model.d()
        );

        let stab = model.stabilizer().unwrap();
        println!("  stabilizer order m = {}", stab.m());
        for &xi in stab.stab.members() {
            let w = stab.witnesses[xi].as_ref().unwrap();
            println!(
                "    coset {} witness character: {}",
                xi,
                if w.is_trivial() { "trivial" } else { "nontrivial" }
            );
        }

        let stable = model.stable_identity_report(&stab).unwrap();
        println!("  stable tensor identity holds: {}", stable.holds);

        let brute = model.brute_tate_count(None).unwrap();
        let cmp = model.compare_with_formula(&stab, &brute);
        println!(
            "  one-dim count: brute force {} vs formula {} ({})",
            cmp.brute,
            cmp.formula,
            if cmp.agree { "agree" } else { "differ" }
        );
        println!("    note: {}", cmp.note);

        if model.d() == 2 {
            match model.twist_to_descend(&stab) {
                Ok(DescentOutcome::Found {
                    mu,
                    norm_solution,
                    verified,
                }) => println!(
                    "  descent: mu found ({} character, via {}), verified = {}",
                    if mu.is_trivial() { "trivial" } else { "nontrivial" },
                    if norm_solution {
                        "norm equation"
                    } else {
                        "direct scan"
                    },
                    verified
                ),
                Ok(DescentOutcome::NoSolution { candidates_checked }) => println!(
                    "  descent: no mu exists ({} candidates exhausted)",
                    candidates_checked
                ),
                Err(e) => println!("  descent: skipped ({})", e),
            }
        }
        println!();
    }
}
