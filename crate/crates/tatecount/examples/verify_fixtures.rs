//! Run the whole invariant suite over the shipped fixture corpus, exactly
//! as `tatecount verify fixtures/` does.
//!
//! ```bash
//! cargo run -p tatecount --example verify_fixtures
//! ```

use std::path::PathBuf;

use tatecount::cli::{run_verify, Format};

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out = run_verify(&dir, Format::Plain);
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
