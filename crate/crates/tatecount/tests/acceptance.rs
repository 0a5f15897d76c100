//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every expected value here is either verified against an independent
//! oracle computed in this file (Catalan recurrence, Pascal binomials,
//! brute-force enumeration) or is an exact structural identity.

use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tatecount::asai::{parse_model_fixture, DescentOutcome, GaloisModel};
use tatecount::cli::{run_verify, Format};
use tatecount::formulas::{tate_rank, TateRankInput};
use tatecount::repcore::{twist_equivalent, MatrixRep, ModlRep};
use tatecount::weightalg::{decompose, one_dim_count, one_dim_types, CharacterPoly};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn load_model(name: &str) -> GaloisModel {
    let text = std::fs::read_to_string(fixture_dir().join(name)).expect("fixture readable");
    parse_model_fixture(&text).expect("fixture parses")
}

/// Independent Catalan oracle: C₀ = 1, C_{k+1} = Σ Cᵢ C_{k−i}.
fn catalan(n: usize) -> BigUint {
    let mut c = vec![BigUint::one()];
    for k in 0..n {
        let mut next = BigUint::zero();
        for i in 0..=k {
            next += &c[i] * &c[k - i];
        }
        c.push(next);
    }
    c[n].clone()
}

/// Independent binomial oracle by the Pascal recurrence.
fn binom(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one()];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row[k as usize].clone()
}

#[test]
fn criterion_01_even_power_counts() {
    let frozen: [u64; 8] = [1, 2, 5, 14, 42, 132, 429, 1430];
    for n in 1..=8u32 {
        let p = CharacterPoly::std().pow(2 * n).unwrap();
        let count = one_dim_count(&p).unwrap();
        assert_eq!(count, frozen[(n - 1) as usize], "n = {}", n);
        assert_eq!(BigUint::from(count), catalan(n as usize), "catalan oracle, n = {}", n);
        assert_eq!(
            BigUint::from(count),
            binom(2 * n as u64, n as i64) - binom(2 * n as u64, n as i64 - 1),
            "binomial oracle, n = {}",
            n
        );
    }
    println!("criterion 01 (even tensor powers count 1,2,5,...,1430): pass");
}

#[test]
fn criterion_02_odd_powers_have_no_invariants() {
    for e in (1..=15u32).step_by(2) {
        let p = CharacterPoly::std().pow(e).unwrap();
        assert_eq!(one_dim_count(&p).unwrap(), 0, "e = {}", e);
    }
    println!("criterion 02 (odd tensor powers have no one-dim constituents): pass");
}

#[test]
fn criterion_03_multiplicity_pattern() {
    for n in 1..=6u64 {
        let p = CharacterPoly::std().pow(2 * n as u32).unwrap();
        let dec = decompose(&p).unwrap();
        assert_eq!(dec.len(), n as usize + 1);
        for (i, (hw, mult)) in dec.iter().enumerate() {
            let i = i as i64;
            assert_eq!(hw.pairs(), &[(2 * n as i64 - 2 * i, i)]);
            let expect = binom(2 * n, i) - binom(2 * n, i - 1);
            assert_eq!(BigUint::from(*mult as u64), expect, "n = {}, i = {}", n, i);
        }
    }
    println!("criterion 03 (binomial-difference multiplicities up to n = 6): pass");
}

#[test]
fn criterion_04_envelope_agreement_with_formula() {
    for m in [2u64, 4, 6] {
        for d in (m..=12).step_by(m as usize) {
            let r = (d / m) as usize;
            if 2f64.powi(d as i32) > (1u64 << 20) as f64 {
                continue;
            }
            let mut p = CharacterPoly::trivial(r);
            for j in 0..r {
                p = p
                    .mul(&CharacterPoly::std_factor(r, j).pow(m as u32).unwrap())
                    .unwrap();
            }
            let count = one_dim_count(&p).unwrap();
            let formula = tate_rank(TateRankInput::new(m, d).unwrap());
            assert_eq!(BigUint::from(count), formula, "m = {}, d = {}", m, d);
            for (hw, _) in one_dim_types(&p).unwrap() {
                for &(k, mm) in hw.pairs() {
                    assert_eq!((k, mm), (0, m as i64 / 2), "type at m = {}, d = {}", m, d);
                }
            }
        }
    }
    println!("criterion 04 (envelope-level counts equal the rank formula): pass");
}

#[test]
fn criterion_05_odd_stabilizer_means_zero() {
    for (m, d) in [(1u64, 4u64), (3, 6), (3, 12), (5, 10), (7, 7)] {
        assert_eq!(
            tate_rank(TateRankInput::new(m, d).unwrap()),
            BigUint::zero(),
            "m = {}, d = {}",
            m,
            d
        );
    }
    for (m, r) in [(3u32, 1usize), (3, 2), (5, 1)] {
        let mut p = CharacterPoly::trivial(r);
        for j in 0..r {
            p = p
                .mul(&CharacterPoly::std_factor(r, j).pow(m).unwrap())
                .unwrap();
        }
        assert_eq!(one_dim_count(&p).unwrap(), 0, "m = {}, r = {}", m, r);
    }
    println!("criterion 05 (odd stabilizer order gives zero): pass");
}

#[test]
fn criterion_06_tensor_induction_soundness() {
    let models = [
        "sd16_q8.model",
        "gl23_sl23.model",
        "m16_sigma.model",
        "swap_q8.model",
    ];
    for name in models {
        let model = load_model(name);
        let induced = model.tensor_induce().unwrap();
        // all-pairs homomorphism check, explicit, for |G| ≤ 64
        if model.group().order() <= 64 {
            let g = model.group();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let prod = induced.image(a).mul(induced.image(b)).unwrap();
                    assert_eq!(&prod, induced.image(g.op(a, b)), "{} pair ({},{})", name, a, b);
                }
            }
        }
        assert!(
            model.restriction_identity_holds(&induced).unwrap(),
            "restriction identity on {}",
            name
        );
    }
    println!("criterion 06 (tensor induction: homomorphism + restriction identity): pass");
}

#[test]
fn criterion_07_stable_identity() {
    for name in ["sd16_q8.model", "gl23_sl23.model", "m16_sigma.model"] {
        let model = load_model(name);
        let stab = model.stabilizer().unwrap();
        assert!(stab.m() > 1, "{} has nontrivial stabilizer", name);
        let report = model.stable_identity_report(&stab).unwrap();
        assert!(report.holds, "{} diffs: {:?}", name, report.diffs);
    }
    println!("criterion 07 (stable tensor identity on nontrivial stabilizers): pass");
}

#[test]
fn criterion_08_invariant_dimension_oracles_agree() {
    let models: Vec<GaloisModel> = [
        "sd16_q8.model",
        "gl23_sl23.model",
        "m16_sigma.model",
        "swap_q8.model",
    ]
    .iter()
    .map(|n| load_model(n))
    .collect();
    // every fixture representation
    for model in &models {
        let k = model.rho().invariant_dim_kernel().unwrap();
        let c = model.rho().invariant_dim_char().unwrap();
        assert_eq!(k, c);
        for &t in model.coset_reps() {
            let conj = model.conj_rep(t).unwrap();
            assert_eq!(
                conj.invariant_dim_kernel().unwrap(),
                conj.invariant_dim_char().unwrap()
            );
        }
    }
    // 50 random tensor/twist combinations, deterministic seed
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a7e_c0de);
    let mut done = 0usize;
    while done < 50 {
        let model = &models[done % models.len()];
        let chars = model.h().group.linear_characters().unwrap();
        let mut rep: MatrixRep = model.rho().clone();
        let steps = rng.gen_range(1..=2);
        for _ in 0..steps {
            if rng.gen_bool(0.5) && rep.degree() * model.rho().degree() <= 16 {
                let t = model.coset_reps()[rng.gen_range(0..model.d())];
                rep = rep.tensor(&model.conj_rep(t).unwrap()).unwrap();
            } else {
                let lambda = &chars[rng.gen_range(0..chars.len())];
                rep = rep.twist(lambda).unwrap();
            }
        }
        assert_eq!(
            rep.invariant_dim_kernel().unwrap(),
            rep.invariant_dim_char().unwrap(),
            "random combination {}",
            done
        );
        done += 1;
    }
    println!("criterion 08 (kernel and character invariant dimensions agree): pass");
}

#[test]
fn criterion_09_sl2_image_checks() {
    for ell in [5i64, 7] {
        let elem = ModlRep::new(ell as u64, vec![[1, 1, 0, 1], [1, 0, 1, 1]]).unwrap();
        assert!(elem.sl2_image_check().unwrap(), "elementary, ell = {}", ell);
        let borel = ModlRep::new(ell as u64, vec![[1, 1, 0, 1], [2, 0, 0, 1]]).unwrap();
        assert!(!borel.sl2_image_check().unwrap(), "borel, ell = {}", ell);
    }
    let diag = ModlRep::new(7, vec![[3, 0, 0, 1], [1, 0, 0, 3]]).unwrap();
    assert!(!diag.sl2_image_check().unwrap());
    // closure scale sanity: the full GL₂(F₇) has 2016 elements
    let full = ModlRep::new(7, vec![[1, 1, 0, 1], [1, 0, 1, 1], [3, 0, 0, 1]]).unwrap();
    assert_eq!(full.closure().unwrap().len(), 2016);
    println!("criterion 09 (mod-ell image checks): pass");
}

#[test]
fn criterion_10_descent_both_branches() {
    // positive branch: a μ is found and verifies
    let mut found = 0;
    for name in ["sd16_q8.model", "gl23_sl23.model"] {
        let model = load_model(name);
        let stab = model.stabilizer().unwrap();
        match model.twist_to_descend(&stab).unwrap() {
            DescentOutcome::Found { verified, .. } => {
                assert!(verified, "{}", name);
                found += 1;
            }
            other => panic!("{}: expected a solution, got {:?}", name, other),
        }
    }
    assert!(found >= 1);
    // negative branch: exhaustively certified no μ exists
    let model = load_model("m16_sigma.model");
    let stab = model.stabilizer().unwrap();
    match model.twist_to_descend(&stab).unwrap() {
        DescentOutcome::NoSolution { candidates_checked } => {
            assert_eq!(candidates_checked, 8);
            // double-check the exhaustive claim independently: no twist of ρ
            // is character-equal to its σ-conjugate
            let sigma = stab.quotient.rep_of[1];
            for mu in model.h().group.linear_characters().unwrap() {
                let twisted = model.rho().twist(&mu).unwrap();
                let conj = twisted.conj_by(model.h(), sigma).unwrap();
                assert!(twist_equivalent(&twisted, &conj)
                    .unwrap()
                    .map(|w| !w.is_trivial())
                    .unwrap_or(true));
            }
        }
        other => panic!("expected no solution, got {:?}", other),
    }
    println!("criterion 10 (descent: solvable and unsolvable branches): pass");
}

#[test]
fn criterion_11_verify_is_deterministic() {
    let first = run_verify(&fixture_dir(), Format::Tsv);
    let second = run_verify(&fixture_dir(), Format::Tsv);
    assert_eq!(first.code, 0, "report:\n{}", first.stdout);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stdout.ends_with("info\n"));
    println!("criterion 11 (byte-identical verification reports): pass");
}
