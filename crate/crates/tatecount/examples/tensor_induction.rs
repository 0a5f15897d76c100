//! Tensor induction: build the induced representation of a fixture model,
//! check the restriction identity, and emit the induced matrices.
//!
//! ```bash
//! cargo run -p tatecount --example tensor_induction
//! ```

use std::path::PathBuf;

use tatecount::asai::parse_model_fixture;
use tatecount::groupcore::ClassFunction;
use tatecount::repcore::render_rep_fixture;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/sd16_q8.model");
    let model = parse_model_fixture(&std::fs::read_to_string(path).unwrap()).unwrap();
    println!(
        "model: |G| = {}, |H| = {}, d = [G:H] = {}, rho degree = {}",
        model.group().order(),
        model.subgroup().order(),
        model.d(),
        model.rho().degree()
    );

    let induced = model.tensor_induce().unwrap();
    println!("induced representation: degree {} (homomorphism verified on all pairs)", induced.degree());

    println!(
        "restriction identity As(rho)|_H = prod of conjugates: {}",
        model.restriction_identity_holds(&induced).unwrap()
    );

    let chi = induced.character().unwrap();
    println!("\ncharacter of the induced representation by conjugacy class of G:");
    for (ci, class) in model.group().conjugacy_classes().iter().enumerate() {
        println!(
            "  class {:2} (size {:2}, rep {:2}): {}",
            ci,
            class.len(),
            class[0],
            chi.value_at(class[0]).canonicalize()
        );
    }

    println!("\ninduced matrices at the generators of G (rep fixture format):");
    print!("{}", render_rep_fixture(&induced, model.group().gen_indices()));
}
