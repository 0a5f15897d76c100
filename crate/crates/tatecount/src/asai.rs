//! Tensor induction for finite-group models, twist-equivalence stabilizers
//! with their witness characters, the stable tensor identity, brute-force
//! one-dimensional counting, and the quadratic descent step.
//!
//! A [`GaloisModel`] packages a group G, a normal subgroup H with its own
//! group view, canonical coset representatives (t₁ = identity), and a matrix
//! representation ρ of H. Conjugates are always ρ^{g}(h) = ρ(g h g⁻¹).

use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactnum::ExactMatrix;
use crate::formulas::{tate_rank, TateRankInput};
use crate::groupcore::{
    inner_product, parse_group_section, ClassFunction, EmbeddedSubgroup, FiniteGroup,
    LinearCharacter, Quotient, Subgroup,
};
use crate::repcore::{parse_rep_section, twist_equivalent, Character, MatrixRep};

/// Default cap on the induced degree n^d.
pub const DEFAULT_DEGREE_CAP: u64 = 4096;
/// Absolute ceiling no override may exceed.
pub const HARD_DEGREE_CAP: u64 = 1 << 20;
/// Group orders up to this bound get the all-pairs check on the induced
/// representation.
pub const INDUCED_ALL_PAIRS_BOUND: usize = 64;

/// A finite Galois model: G ⊵ H with a representation of H.
#[derive(Debug)]
pub struct GaloisModel {
    group: Arc<FiniteGroup>,
    sub: Subgroup,
    h: EmbeddedSubgroup,
    rho: MatrixRep,
    coset_reps: Vec<usize>,
    coset_of: Vec<usize>,
    subfield_k: Option<Vec<usize>>,
}

impl GaloisModel {
    pub fn new(
        group: Arc<FiniteGroup>,
        sub: Subgroup,
        h: EmbeddedSubgroup,
        rho: MatrixRep,
        subfield_k: Option<Vec<usize>>,
    ) -> Result<GaloisModel> {
        if !Arc::ptr_eq(&group, sub.parent()) || !Arc::ptr_eq(&group, &h.parent) {
            return Err(Error::GroupMismatch);
        }
        if !Arc::ptr_eq(rho.group(), &h.group) {
            return Err(Error::GroupMismatch);
        }
        if !group.is_normal(&sub) {
            let bad = group
                .gen_indices()
                .iter()
                .copied()
                .find(|&g| {
                    sub.members()
                        .iter()
                        .any(|&m| !sub.contains(group.conjugate(g, m)))
                })
                .unwrap_or(0);
            return Err(Error::NotNormal(bad));
        }
        let cosets = group.left_cosets(&sub);
        let mut coset_of = vec![0usize; group.order()];
        for (ci, c) in cosets.iter().enumerate() {
            for &m in &c.members {
                coset_of[m] = ci;
            }
        }
        let coset_reps: Vec<usize> = cosets.iter().map(|c| c.rep).collect();
        debug_assert_eq!(coset_reps[0], 0);
        if let Some(ks) = &subfield_k {
            for &k in ks {
                if k >= h.order() {
                    return Err(Error::NotAMember(k));
                }
            }
        }
        Ok(GaloisModel {
            group,
            sub,
            h,
            rho,
            coset_reps,
            coset_of,
            subfield_k,
        })
    }

    /// Build a model from a group, subgroup seed elements, and generator
    /// images for the subgroup view.
    pub fn build(
        group: Arc<FiniteGroup>,
        seeds: &[usize],
        gen_images: Vec<ExactMatrix>,
        subfield_k: Option<Vec<usize>>,
    ) -> Result<GaloisModel> {
        let sub = group.subgroup_closure(seeds);
        let h = sub.to_group()?;
        let rho = MatrixRep::from_gen_images(h.group.clone(), gen_images)?;
        GaloisModel::new(group, sub, h, rho, subfield_k)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn h(&self) -> &EmbeddedSubgroup {
        &self.h
    }

    pub fn rho(&self) -> &MatrixRep {
        &self.rho
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    /// [G : H].
    pub fn d(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn subfield_k(&self) -> Option<&[usize]> {
        self.subfield_k.as_deref()
    }

    /// The conjugate representation ρ^{g₀} for g₀ in G (parent index).
    pub fn conj_rep(&self, g0: usize) -> Result<MatrixRep> {
        self.rho.conj_by(&self.h, g0)
    }

    fn induced_degree(&self, cap: u64) -> Result<usize> {
        let n = self.rho.degree() as u64;
        let bound = cap.min(HARD_DEGREE_CAP);
        let mut deg: u64 = 1;
        for _ in 0..self.d() {
            deg = deg.saturating_mul(n);
            if deg > bound {
                return Err(Error::DegreeBound(deg, bound));
            }
        }
        Ok(deg as usize)
    }

    /// The tensor-induced representation of G on the d-fold tensor power,
    /// with the canonical coset representatives.
    pub fn tensor_induce(&self) -> Result<MatrixRep> {
        self.tensor_induce_capped(DEFAULT_DEGREE_CAP)
    }

    pub fn tensor_induce_capped(&self, cap: u64) -> Result<MatrixRep> {
        let reps = self.coset_reps.clone();
        self.tensor_induce_with_reps(&reps, cap)
    }

    /// Induce with an explicit transversal (coset representatives listed in
    /// the canonical coset order). Intended for representative-independence
    /// checks; the canonical entry point passes the stored representatives.
    pub fn tensor_induce_with_reps(&self, reps: &[usize], cap: u64) -> Result<MatrixRep> {
        if reps.len() != self.d() {
            return Err(Error::ShapeMismatch(
                "one representative per coset required".to_string(),
            ));
        }
        for (i, &t) in reps.iter().enumerate() {
            if self.coset_of[t] != i {
                return Err(Error::NotAMember(t));
            }
        }
        let n = self.rho.degree();
        let d = self.d();
        let degree = self.induced_degree(cap)?;
        let g_order = self.group.order();
        let mut images = Vec::with_capacity(g_order);
        // digit j of a basis word indexes the j-th tensor slot, rightmost
        // slot fastest
        let digit = |idx: usize, j: usize| -> usize {
            let shift = d - 1 - j;
            (idx / n.pow(shift as u32)) % n
        };
        for g in 0..g_order {
            let mut sigma = vec![0usize; d];
            let mut carrier = vec![0usize; d];
            for (i, &t) in reps.iter().enumerate() {
                let gt = self.group.op(g, t);
                let target = self.coset_of[gt];
                sigma[i] = target;
                // h_{g,i} = t_{σ(i)}⁻¹ · g · t_i ∈ H
                let hp = self.group.op(self.group.inv(reps[target]), gt);
                carrier[i] = self
                    .h
                    .view_index(hp)
                    .expect("coset algebra stays inside H");
            }
            let mut sigma_inv = vec![0usize; d];
            for (i, &s) in sigma.iter().enumerate() {
                sigma_inv[s] = i;
            }
            // slot j of the output is fed from slot σ⁻¹(j) through
            // ρ(h_{g,σ⁻¹(j)})
            let blocks: Vec<&ExactMatrix> = (0..d)
                .map(|j| self.rho.image(carrier[sigma_inv[j]]))
                .collect();
            let conductor = blocks.iter().fold(1u64, |a, b| {
                use num_integer::Integer;
                a.lcm(&b.conductor())
            });
            let mut m = ExactMatrix::zero(degree, degree, conductor)?;
            for col in 0..degree {
                for row in 0..degree {
                    let mut prod = crate::exactnum::CyclotomicNumber::one(1);
                    let mut zero = false;
                    for (j, block) in blocks.iter().enumerate() {
                        let entry = block.at(digit(row, j), digit(col, sigma_inv[j]));
                        if entry.is_zero() {
                            zero = true;
                            break;
                        }
                        prod = prod.mul(entry)?;
                    }
                    if !zero {
                        m.set(row, col, prod)?;
                    }
                }
            }
            images.push(m);
        }
        let rep = MatrixRep::from_element_images(self.group.clone(), images)?;
        rep.verify_homomorphism_bounded(INDUCED_ALL_PAIRS_BOUND)?;
        Ok(rep)
    }

    /// Character of ⊗ᵢ ρ^{tᵢ} as a class function on H.
    pub fn conjugate_product_character(&self) -> Result<Character> {
        let mut acc: Option<Character> = None;
        for &t in &self.coset_reps {
            let chi = self.conj_rep(t)?.character()?;
            acc = Some(match acc {
                None => chi,
                Some(a) => a.mul(&chi)?,
            });
        }
        Ok(acc.expect("at least one coset"))
    }

    /// χ_{As(ρ)}|_H = ∏ᵢ χ_{ρ^{tᵢ}} as class functions on H.
    pub fn restriction_identity_holds(&self, induced: &MatrixRep) -> Result<bool> {
        let lhs = induced.character()?.restrict_to(&self.h)?;
        let rhs = self.conjugate_product_character()?;
        Ok(lhs == rhs)
    }

    /// The stabilizer of the twist-equivalence class of ρ inside G/H,
    /// together with one witness character per stabilizing coset.
    pub fn stabilizer(&self) -> Result<StabilizerData> {
        let quotient = self.group.quotient(&self.sub)?;
        let q = quotient.group.clone();
        let mut witnesses: Vec<Option<LinearCharacter>> = Vec::with_capacity(q.order());
        for xi in 0..q.order() {
            let g_xi = quotient.rep_of[xi];
            let conj = self.conj_rep(g_xi)?;
            witnesses.push(twist_equivalent(&self.rho, &conj)?);
        }
        let members: Vec<usize> = (0..q.order())
            .filter(|&xi| witnesses[xi].is_some())
            .collect();
        let stab = q.subgroup_closure(&members);
        if stab.order() != members.len() {
            return Err(Error::ShapeMismatch(
                "stabilizer members are not closed under the quotient law".to_string(),
            ));
        }
        if self.d() % members.len() != 0 {
            return Err(Error::ShapeMismatch(
                "stabilizer order does not divide the coset count".to_string(),
            ));
        }
        Ok(StabilizerData {
            quotient,
            stab,
            witnesses,
        })
    }

    /// Check ⊗_{ξ∈S} ρ^{g_ξ} ≅ ρ^{⊗m} ⊗ ∏_ξ χ(ξ) by exact character
    /// equality, reporting per-class differences on failure.
    pub fn stable_identity_report(&self, stab: &StabilizerData) -> Result<StableReport> {
        let mut lhs: Option<Character> = None;
        let mut twist_acc: Option<LinearCharacter> = None;
        let mut rhs: Option<Character> = None;
        let chi_rho = self.rho.character()?;
        for &xi in stab.stab.members() {
            let g_xi = stab.quotient.rep_of[xi];
            let conj_chi = self.conj_rep(g_xi)?.character()?;
            lhs = Some(match lhs {
                None => conj_chi,
                Some(a) => a.mul(&conj_chi)?,
            });
            let w = stab.witnesses[xi]
                .clone()
                .expect("stabilizer members carry witnesses");
            twist_acc = Some(match twist_acc {
                None => w,
                Some(a) => a.mul(&w)?,
            });
            rhs = Some(match rhs {
                None => chi_rho.clone(),
                Some(a) => a.mul(&chi_rho)?,
            });
        }
        let lhs = lhs.expect("stabilizer contains the trivial coset");
        let rhs = rhs
            .expect("stabilizer contains the trivial coset")
            .mul_linear(&twist_acc.expect("witness product"))?;
        let mut diffs = Vec::new();
        let classes = self.h.group.conjugacy_classes();
        for (ci, class) in classes.iter().enumerate() {
            let a = lhs.value_at(class[0]);
            let b = rhs.value_at(class[0]);
            if a != b {
                diffs.push(format!(
                    "class {} (rep {}): product side {} vs twisted power side {}",
                    ci, class[0], a, b
                ));
            }
        }
        Ok(StableReport {
            holds: diffs.is_empty(),
            diffs,
        })
    }

    /// Brute-force count of one-dimensional constituents of
    /// (⊗ᵢ ρ^{tᵢ})|_K, where K ≤ H is given by seed elements of the H view
    /// (defaults to K = H).
    pub fn brute_tate_count(&self, k_seeds: Option<&[usize]>) -> Result<BruteCount> {
        self.induced_degree(HARD_DEGREE_CAP)?;
        let chi_t = self.conjugate_product_character()?;
        let seeds: Vec<usize> = match k_seeds {
            Some(s) => s.to_vec(),
            None => self.h.group.gen_indices().to_vec(),
        };
        for &s in &seeds {
            if s >= self.h.order() {
                return Err(Error::NotAMember(s));
            }
        }
        let k = self.h.group.subgroup_closure(&seeds);
        let kemb = k.to_group()?;
        let restricted = chi_t.restrict_to(&kemb)?;
        let mut constituents = Vec::new();
        let mut count: u64 = 0;
        for lambda in kemb.group.linear_characters()? {
            let ip = inner_product(&restricted, &lambda)?;
            let mult = rational_mult(&ip)?;
            if mult > 0 {
                count += mult;
                constituents.push((lambda, mult));
            }
        }
        Ok(BruteCount {
            k_order: kemb.order(),
            count,
            constituents,
        })
    }

    /// Put the closed-form rank next to the brute-force count. The formula
    /// assumes a large algebraic envelope, which finite models generally
    /// fail, so disagreement is reported rather than asserted.
    pub fn compare_with_formula(
        &self,
        stab: &StabilizerData,
        brute: &BruteCount,
    ) -> FormulaReport {
        let m = stab.m() as u64;
        let d = self.d() as u64;
        let formula = tate_rank(TateRankInput::new(m, d).expect("m divides d"));
        let agree = formula == BigUint::from(brute.count);
        let note = if agree {
            "agreement (large-image hypothesis not checked at finite scale)"
        } else {
            "disagreement expected: the closed form assumes a large algebraic envelope, \
             which finite images need not satisfy"
        };
        FormulaReport {
            m,
            d,
            formula,
            brute: brute.count,
            agree,
            note,
        }
    }

    /// Index map of the automorphism h ↦ σhσ⁻¹ on the H view, for σ given
    /// as a parent element normalizing H.
    pub fn conj_index_map(&self, sigma: usize) -> Result<Vec<usize>> {
        (0..self.h.order())
            .map(|v| {
                let p = self.h.parent_index(v);
                let c = self.group.conjugate(sigma, p);
                self.h.view_index(c).ok_or(Error::NotNormal(sigma))
            })
            .collect()
    }

    /// The quadratic descent step. Requires [G:H] = 2 and the nontrivial
    /// coset σH in the stabilizer with witness χ(σ). Solves χ(σ) = μ·μ^{−σ};
    /// if the norm equation has no solution, the certificate falls back to
    /// exhaustively testing every μ against the character identity
    /// χ_{ρ⊗μ} = χ_{ρ⊗μ}∘σ directly.
    pub fn twist_to_descend(&self, stab: &StabilizerData) -> Result<DescentOutcome> {
        if self.d() != 2 {
            return Err(Error::ShapeMismatch(
                "descent requires a quadratic model ([G:H] = 2)".to_string(),
            ));
        }
        if !stab.stab.contains(1) {
            return Err(Error::NoWitness);
        }
        let chi = stab.witnesses[1].clone().expect("witness for σH");
        let sigma = stab.quotient.rep_of[1];
        let sigma_map = self.conj_index_map(sigma)?;
        let chi_rho = self.rho.character()?;
        let verifies = |mu: &LinearCharacter| -> Result<bool> {
            for e in 0..self.h.order() {
                let v = chi_rho.value_at(e).mul(mu.value(e))?;
                let w = chi_rho
                    .value_at(sigma_map[e])
                    .mul(mu.value(sigma_map[e]))?;
                if v != w {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        if let Some(mu) = solve_norm_equation(&self.h.group, &sigma_map, &chi)? {
            let verified = verifies(&mu)?;
            return Ok(DescentOutcome::Found {
                mu,
                norm_solution: true,
                verified,
            });
        }
        let chars = self.h.group.linear_characters()?;
        let checked = chars.len();
        for mu in chars {
            if verifies(&mu)? {
                return Ok(DescentOutcome::Found {
                    mu,
                    norm_solution: false,
                    verified: true,
                });
            }
        }
        Ok(DescentOutcome::NoSolution {
            candidates_checked: checked,
        })
    }
}

fn rational_mult(q: &crate::exactnum::Rational) -> Result<u64> {
    use num_traits::{Signed, ToPrimitive};
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotRational(format!(
            "expected a nonnegative integer multiplicity, got {}",
            q
        )));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotRational(format!("multiplicity {} out of range", q)))
}

/// Exhaustive search for μ with μ·(μ∘σ)⁻¹ = χ over the linear characters
/// of the group, in enumeration order.
pub fn solve_norm_equation(
    h_group: &Arc<FiniteGroup>,
    sigma_map: &[usize],
    chi: &LinearCharacter,
) -> Result<Option<LinearCharacter>> {
    if !Arc::ptr_eq(h_group, chi.group_ref()) {
        return Err(Error::GroupMismatch);
    }
    if sigma_map.len() != h_group.order() {
        return Err(Error::ShapeMismatch(
            "σ map must cover the group".to_string(),
        ));
    }
    for mu in h_group.linear_characters()? {
        let cand = mu.mul(&mu.precompose(sigma_map).inverse())?;
        if &cand == chi {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// Stabilizer of the twist-equivalence class of ρ in G/H, with the witness
/// characters χ(ξ) (one per stabilizing coset, not required to be
/// multiplicative in ξ).
#[derive(Debug)]
pub struct StabilizerData {
    pub quotient: Quotient,
    pub stab: Subgroup,
    pub witnesses: Vec<Option<LinearCharacter>>,
}

impl StabilizerData {
    /// m, the order of the stabilizer.
    pub fn m(&self) -> usize {
        self.stab.order()
    }
}

/// Outcome of the stable-identity character comparison.
#[derive(Debug)]
pub struct StableReport {
    pub holds: bool,
    pub diffs: Vec<String>,
}

/// Brute-force constituent count for (⊗ᵢ ρ^{tᵢ})|_K.
#[derive(Debug)]
pub struct BruteCount {
    pub k_order: usize,
    pub count: u64,
    pub constituents: Vec<(LinearCharacter, u64)>,
}

/// Formula-versus-brute-force comparison, informational by design.
#[derive(Debug)]
pub struct FormulaReport {
    pub m: u64,
    pub d: u64,
    pub formula: BigUint,
    pub brute: u64,
    pub agree: bool,
    pub note: &'static str,
}

/// Outcome of the quadratic descent step.
#[derive(Debug)]
pub enum DescentOutcome {
    Found {
        mu: LinearCharacter,
        /// whether μ came from the norm equation (as opposed to the direct
        /// character scan)
        norm_solution: bool,
        /// character equality of ρ⊗μ with its σ-conjugate
        verified: bool,
    },
    NoSolution {
        /// every linear character was tested against the direct identity
        candidates_checked: usize,
    },
}

/// Parse a model fixture: group section, required `subgroup:` line, a
/// representation section for the subgroup generators, and an optional
/// `subfieldK:` line listing H-view element indices.
pub fn parse_model_fixture(text: &str) -> Result<GaloisModel> {
    let lines: Vec<&str> = text.lines().collect();
    let sec = parse_group_section(&lines)?;
    let seeds_refs = sec
        .subgroup_gens
        .clone()
        .ok_or_else(|| Error::parse(sec.consumed, "model fixture requires a 'subgroup:' line"))?;
    let group = FiniteGroup::from_perm_gens(sec.gen_perms.clone())?;
    let seeds: Vec<usize> = seeds_refs
        .iter()
        .map(|&r| {
            group
                .index_of(&sec.gen_perms[r])
                .expect("generators are group elements")
        })
        .collect();
    let (images, mut next) = parse_rep_section(&lines, sec.consumed, seeds.len())?;
    while next < lines.len() && lines[next].trim().is_empty() {
        next += 1;
    }
    let mut subfield_k = None;
    if next < lines.len() {
        if let Some(list) = lines[next].trim().strip_prefix("subfieldK:") {
            let parsed: Result<Vec<usize>> = list
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::parse(next + 1, format!("bad element index '{}'", t)))
                })
                .collect();
            subfield_k = Some(parsed?);
        }
    }
    GaloisModel::build(group, &seeds, images, subfield_k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{cyc_root, CyclotomicNumber};
    use crate::groupcore::Perm;

    fn c(v: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(v)
    }

    fn q8_images() -> Vec<ExactMatrix> {
        let mi = ExactMatrix::from_entries(
            2,
            2,
            vec![cyc_root(4, 1), c(0), c(0), cyc_root(4, 3)],
        )
        .unwrap();
        let mj = ExactMatrix::from_entries(2, 2, vec![c(0), c(-1), c(1), c(0)]).unwrap();
        vec![mi, mj]
    }

    /// SD₁₆ ⊵ Q₈ with the 2-dimensional irreducible of Q₈.
    fn sd16_model() -> GaloisModel {
        let x = Perm::parse_cycles("(1 3 5 7)(2 4 6 8)", 8).unwrap();
        let y = Perm::parse_cycles("(1 2 5 6)(3 8 7 4)", 8).unwrap();
        let s = Perm::parse_cycles("(2 4)(3 7)(6 8)", 8).unwrap();
        let g = FiniteGroup::from_perm_gens(vec![x, y, s]).unwrap();
        assert_eq!(g.order(), 16);
        GaloisModel::build(g, &[1, 2], q8_images(), None).unwrap()
    }

    /// (Q₈×Q₈)⋊ℤ/2 swapping the factors, ρ pulled back from factor one.
    fn swap_model() -> GaloisModel {
        let a = Perm::parse_cycles("(1 3 2 4)(5 7 6 8)", 16).unwrap();
        let b = Perm::parse_cycles("(1 5 2 6)(3 8 4 7)", 16).unwrap();
        let a2 = Perm::parse_cycles("(9 11 10 12)(13 15 14 16)", 16).unwrap();
        let b2 = Perm::parse_cycles("(9 13 10 14)(11 16 12 15)", 16).unwrap();
        let s = Perm::parse_cycles("(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16)", 16)
            .unwrap();
        let g = FiniteGroup::from_perm_gens(vec![a, b, a2, b2, s]).unwrap();
        assert_eq!(g.order(), 128);
        let id = ExactMatrix::identity(2, 1).unwrap();
        let mut images = q8_images();
        images.push(id.clone());
        images.push(id);
        GaloisModel::build(g, &[1, 2, 3, 4], images, None).unwrap()
    }

    /// M₁₆ ⋊ ⟨σ⟩ with σ: a ↦ a³; the descent fixture with no solution.
    fn m16_model() -> GaloisModel {
        let a = Perm::parse_cycles("(1 2 3 4 5 6 7 8)", 8).unwrap();
        let b = Perm::parse_cycles("(2 6)(4 8)", 8).unwrap();
        let s = Perm::parse_cycles("(2 4)(3 7)(6 8)", 8).unwrap();
        let g = FiniteGroup::from_perm_gens(vec![a, b, s]).unwrap();
        assert_eq!(g.order(), 32);
        let ma = ExactMatrix::from_entries(
            2,
            2,
            vec![cyc_root(8, 1), c(0), c(0), cyc_root(8, 5)],
        )
        .unwrap();
        let mb = ExactMatrix::from_entries(2, 2, vec![c(0), c(1), c(1), c(0)]).unwrap();
        GaloisModel::build(g, &[1, 2], vec![ma, mb], None).unwrap()
    }

    #[test]
    fn trivial_induction_when_subgroup_is_everything() {
        // H = G = Q₈: d = 1, As(ρ) = ρ
        let a = Perm::parse_cycles("(1 3 2 4)(5 7 6 8)", 8).unwrap();
        let b = Perm::parse_cycles("(1 5 2 6)(3 8 4 7)", 8).unwrap();
        let g = FiniteGroup::from_perm_gens(vec![a, b]).unwrap();
        let model = GaloisModel::build(g, &[1, 2], q8_images(), None).unwrap();
        assert_eq!(model.d(), 1);
        let induced = model.tensor_induce().unwrap();
        assert_eq!(induced.degree(), 2);
        // same character through the index translation
        for v in 0..model.h().order() {
            let p = model.h().parent_index(v);
            assert_eq!(
                induced.image(p).trace().unwrap(),
                model.rho().image(v).trace().unwrap()
            );
        }
    }

    #[test]
    fn trivial_rho_induces_trivially() {
        let x = Perm::parse_cycles("(1 3 5 7)(2 4 6 8)", 8).unwrap();
        let y = Perm::parse_cycles("(1 2 5 6)(3 8 7 4)", 8).unwrap();
        let s = Perm::parse_cycles("(2 4)(3 7)(6 8)", 8).unwrap();
        let g = FiniteGroup::from_perm_gens(vec![x, y, s]).unwrap();
        let id = ExactMatrix::identity(1, 1).unwrap();
        let model = GaloisModel::build(g, &[1, 2], vec![id.clone(), id], None).unwrap();
        let induced = model.tensor_induce().unwrap();
        assert_eq!(induced.degree(), 1);
        for e in 0..model.group().order() {
            assert!(induced.image(e).is_identity());
        }
    }

    #[test]
    fn sd16_induction_restricts_to_conjugate_product() {
        let model = sd16_model();
        assert_eq!(model.d(), 2);
        let induced = model.tensor_induce().unwrap();
        assert_eq!(induced.degree(), 4);
        assert!(model.restriction_identity_holds(&induced).unwrap());
    }

    #[test]
    fn induction_is_independent_of_representatives() {
        let model = sd16_model();
        let canonical = model.tensor_induce().unwrap();
        // replace t₂ by another element of the same coset
        let t2 = model.coset_reps()[1];
        let h1 = model.h().parent_index(1);
        let alt = model.group().op(t2, h1);
        assert_ne!(alt, t2);
        let other = model
            .tensor_induce_with_reps(&[0, alt], DEFAULT_DEGREE_CAP)
            .unwrap();
        assert_eq!(canonical.character().unwrap(), other.character().unwrap());
    }

    #[test]
    fn sd16_stabilizer_is_full() {
        let model = sd16_model();
        let stab = model.stabilizer().unwrap();
        assert_eq!(stab.m(), 2);
        // conjugation fixes the character of the unique 2-dim irreducible,
        // so the first witness in enumeration order is trivial
        assert!(stab.witnesses[1].as_ref().unwrap().is_trivial());
    }

    #[test]
    fn swap_model_has_trivial_stabilizer() {
        let model = swap_model();
        assert_eq!(model.d(), 2);
        let stab = model.stabilizer().unwrap();
        assert_eq!(stab.m(), 1);
    }

    #[test]
    fn stable_identity_holds_on_sd16() {
        let model = sd16_model();
        let stab = model.stabilizer().unwrap();
        let report = model.stable_identity_report(&stab).unwrap();
        assert!(report.holds, "diffs: {:?}", report.diffs);
    }

    #[test]
    fn corrupted_witness_breaks_stable_identity() {
        // needs a fixture whose character does not vanish where witnesses
        // differ: the M₁₆ model has χ(a²) = 2ζ₈² and witness value −1 there
        let model = m16_model();
        let mut stab = model.stabilizer().unwrap();
        assert!(model.stable_identity_report(&stab).unwrap().holds);
        stab.witnesses[1] = Some(LinearCharacter::trivial(model.h().group.clone()));
        let bad = model.stable_identity_report(&stab).unwrap();
        assert!(!bad.holds);
        assert!(!bad.diffs.is_empty());
    }

    #[test]
    fn sd16_brute_count_is_four() {
        let model = sd16_model();
        let brute = model.brute_tate_count(None).unwrap();
        assert_eq!(brute.count, 4);
        assert_eq!(brute.constituents.len(), 4);
        // restriction to the center {±1} keeps all four
        let center_seed = model
            .h()
            .group
            .gen_indices()
            .iter()
            .map(|&g| model.h().group.op(g, g))
            .find(|&e| e != 0)
            .unwrap();
        let smaller = model.brute_tate_count(Some(&[center_seed])).unwrap();
        assert_eq!(smaller.k_order, 2);
        assert!(smaller.count >= brute.count);
        assert_eq!(smaller.count, 4);
    }

    #[test]
    fn sd16_formula_comparison_reports_disagreement() {
        let model = sd16_model();
        let stab = model.stabilizer().unwrap();
        let brute = model.brute_tate_count(None).unwrap();
        let report = model.compare_with_formula(&stab, &brute);
        assert_eq!(report.m, 2);
        assert_eq!(report.d, 2);
        assert_eq!(report.formula, BigUint::from(1u32));
        assert_eq!(report.brute, 4);
        assert!(!report.agree);
    }

    #[test]
    fn swap_model_formula_comparison() {
        let model = swap_model();
        let stab = model.stabilizer().unwrap();
        let brute = model.brute_tate_count(None).unwrap();
        let report = model.compare_with_formula(&stab, &brute);
        assert_eq!(report.m, 1);
        assert_eq!(report.formula, BigUint::from(0u32));
        // the outer tensor of two irreducibles has no linear constituents
        assert_eq!(report.brute, 0);
        assert!(report.agree);
    }

    #[test]
    fn norm_equation_trivial_cases() {
        let model = sd16_model();
        let hg = &model.h().group;
        let id_map: Vec<usize> = (0..hg.order()).collect();
        let triv = LinearCharacter::trivial(hg.clone());
        let mu = solve_norm_equation(hg, &id_map, &triv).unwrap().unwrap();
        assert!(mu.is_trivial());
        // σ = id: μμ⁻¹ = 1, so nontrivial χ is unsolvable
        let chars = hg.linear_characters().unwrap();
        assert!(solve_norm_equation(hg, &id_map, &chars[1])
            .unwrap()
            .is_none());
    }

    #[test]
    fn sd16_descent_succeeds() {
        let model = sd16_model();
        let stab = model.stabilizer().unwrap();
        match model.twist_to_descend(&stab).unwrap() {
            DescentOutcome::Found {
                mu,
                norm_solution,
                verified,
            } => {
                assert!(mu.is_trivial());
                assert!(norm_solution);
                assert!(verified);
            }
            other => panic!("expected a solution, got {:?}", other),
        }
    }

    #[test]
    fn m16_descent_has_no_solution() {
        let model = m16_model();
        let stab = model.stabilizer().unwrap();
        assert_eq!(stab.m(), 2);
        let w = stab.witnesses[1].as_ref().unwrap();
        assert!(!w.is_trivial());
        match model.twist_to_descend(&stab).unwrap() {
            DescentOutcome::NoSolution { candidates_checked } => {
                assert_eq!(candidates_checked, 8);
            }
            other => panic!("expected no solution, got {:?}", other),
        }
    }

    #[test]
    fn m16_stable_identity_still_holds() {
        let model = m16_model();
        let stab = model.stabilizer().unwrap();
        let report = model.stable_identity_report(&stab).unwrap();
        assert!(report.holds, "diffs: {:?}", report.diffs);
    }

    #[test]
    fn induced_determinants_have_finite_order() {
        let model = sd16_model();
        let induced = model.tensor_induce().unwrap();
        let exponent = model.group().exponent() as i64;
        for e in 0..model.group().order() {
            let det = induced.image(e).det().unwrap();
            assert!(det.pow(exponent).unwrap().is_one(), "element {}", e);
        }
    }

    #[test]
    fn model_fixture_round_trip() {
        let text = "points 8\n\
                    (1 3 5 7)(2 4 6 8)\n\
                    (1 2 5 6)(3 8 7 4)\n\
                    (2 4)(3 7)(6 8)\n\
                    \n\
                    subgroup: g1,g2\n\
                    \n\
                    conductor 4\n\
                    4:0,1,4:0,0\n\
                    4:0,0,4:0,-1\n\
                    \n\
                    4:0,0,4:-1,0\n\
                    4:1,0,4:0,0\n";
        let model = parse_model_fixture(text).unwrap();
        assert_eq!(model.group().order(), 16);
        assert_eq!(model.subgroup().order(), 8);
        assert_eq!(model.d(), 2);
        let stab = model.stabilizer().unwrap();
        assert_eq!(stab.m(), 2);
    }
}
