//! Exact matrix representations of finite groups: tensor, twist, conjugate,
//! restriction, invariant-dimension oracles, twist-equivalence search, and a
//! mod-ℓ big-image check for 2×2 matrix groups.
//!
//! Isomorphism testing is by character equality, which suffices in
//! characteristic zero by semisimplicity; no intertwiners are computed.
//! The conjugation convention is ρ^{g₀}(h) := ρ(g₀ h g₀⁻¹) everywhere.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{CyclotomicNumber, ExactMatrix, Rational};
use crate::groupcore::{
    inner_product, ClassFunction, EmbeddedSubgroup, FiniteGroup, LinearCharacter,
};

/// Group orders up to this bound get the all-pairs homomorphism check;
/// larger groups are checked on generator×element pairs.
pub const ALL_PAIRS_BOUND: usize = 128;
/// Hard cap on mod-ℓ matrix-group closures.
pub const MODL_CLOSURE_CAP: usize = 1_000_000;

/// A homomorphism from a finite group into invertible matrices with
/// cyclotomic entries, stored as one image per element.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: Arc<FiniteGroup>,
    degree: usize,
    images: Vec<ExactMatrix>,
}

impl MatrixRep {
    /// Extend generator images to the whole group along the stored BFS
    /// words, then verify the homomorphism property: on all pairs when
    /// |G| ≤ 128, on generator×element pairs otherwise.
    pub fn from_gen_images(
        group: Arc<FiniteGroup>,
        gen_images: Vec<ExactMatrix>,
    ) -> Result<MatrixRep> {
        if gen_images.len() != group.gens().len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} generator images, got {}",
                group.gens().len(),
                gen_images.len()
            )));
        }
        let degree = gen_images.first().map(|m| m.rows()).unwrap_or(1);
        for img in &gen_images {
            if img.rows() != degree || img.cols() != degree {
                return Err(Error::ShapeMismatch(
                    "generator images must be square of equal degree".to_string(),
                ));
            }
            if img.rank()? != degree {
                return Err(Error::SingularImage);
            }
        }
        let order = group.order();
        let mut images: Vec<Option<ExactMatrix>> = vec![None; order];
        images[0] = Some(ExactMatrix::identity(degree, 1)?);
        // Elements are in BFS discovery order, so walking them in index
        // order fills every image from an already-filled parent.
        for e in 0..order {
            let base = images[e].clone().expect("BFS order fills parents first");
            for (gi, gidx) in group.gen_indices().iter().enumerate() {
                let child = group.op(e, *gidx);
                if images[child].is_none() {
                    images[child] = Some(base.mul(&gen_images[gi])?);
                }
            }
        }
        let images: Vec<ExactMatrix> = images.into_iter().map(|m| m.unwrap()).collect();
        let rep = MatrixRep {
            group,
            degree,
            images,
        };
        rep.verify_homomorphism()?;
        Ok(rep)
    }

    pub(crate) fn from_element_images(
        group: Arc<FiniteGroup>,
        images: Vec<ExactMatrix>,
    ) -> Result<MatrixRep> {
        let degree = images.first().map(|m| m.rows()).unwrap_or(1);
        if images.len() != group.order() {
            return Err(Error::ShapeMismatch(
                "one image per group element required".to_string(),
            ));
        }
        Ok(MatrixRep {
            group,
            degree,
            images,
        })
    }

    /// Check image(g)·image(h) = image(gh) per the size policy.
    pub fn verify_homomorphism(&self) -> Result<()> {
        self.verify_homomorphism_bounded(ALL_PAIRS_BOUND)
    }

    /// All-pairs check up to the given group order, generator×element pairs
    /// beyond it.
    pub fn verify_homomorphism_bounded(&self, all_pairs_bound: usize) -> Result<()> {
        let order = self.group.order();
        if !self.images[0].is_identity() {
            return Err(Error::NotAHomomorphism(0, 0));
        }
        if order <= all_pairs_bound {
            for a in 0..order {
                for b in 0..order {
                    let prod = self.images[a].mul(&self.images[b])?;
                    if prod != self.images[self.group.op(a, b)] {
                        return Err(Error::NotAHomomorphism(a, b));
                    }
                }
            }
        } else {
            for &a in self.group.gen_indices() {
                for b in 0..order {
                    let prod = self.images[a].mul(&self.images[b])?;
                    if prod != self.images[self.group.op(a, b)] {
                        return Err(Error::NotAHomomorphism(a, b));
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial degree-n representation.
    pub fn trivial(group: Arc<FiniteGroup>, degree: usize) -> Result<MatrixRep> {
        let id = ExactMatrix::identity(degree, 1)?;
        let images = vec![id; group.order()];
        MatrixRep::from_element_images(group, images)
    }

    /// The regular representation by permutation matrices on the group.
    pub fn regular(group: Arc<FiniteGroup>) -> Result<MatrixRep> {
        let n = group.order();
        let mut images = Vec::with_capacity(n);
        for g in 0..n {
            let mut m = ExactMatrix::zero(n, n, 1)?;
            for h in 0..n {
                // g sends basis vector e_h to e_{gh}
                let gh = group.op(g, h);
                m.set(gh, h, CyclotomicNumber::one(1))?;
            }
            images.push(m);
        }
        MatrixRep::from_element_images(group, images)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, elem: usize) -> &ExactMatrix {
        &self.images[elem]
    }

    pub fn conductor(&self) -> u64 {
        use num_integer::Integer;
        self.images
            .iter()
            .fold(1u64, |acc, m| acc.lcm(&m.conductor()))
    }

    /// Kronecker (tensor) product of two representations of one group.
    pub fn tensor(&self, other: &MatrixRep) -> Result<MatrixRep> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let images: Result<Vec<_>> = self
            .images
            .iter()
            .zip(other.images.iter())
            .map(|(a, b)| a.kronecker(b))
            .collect();
        MatrixRep::from_element_images(self.group.clone(), images?)
    }

    /// Scalar twist by a linear character.
    pub fn twist(&self, lambda: &LinearCharacter) -> Result<MatrixRep> {
        if !Arc::ptr_eq(&self.group, lambda.group_ref()) {
            return Err(Error::GroupMismatch);
        }
        let images: Result<Vec<_>> = self
            .images
            .iter()
            .enumerate()
            .map(|(e, m)| m.scalar_mul(lambda.value(e)))
            .collect();
        MatrixRep::from_element_images(self.group.clone(), images?)
    }

    /// Restriction along an embedded subgroup of the representation's group.
    pub fn restrict(&self, emb: &EmbeddedSubgroup) -> Result<MatrixRep> {
        if !Arc::ptr_eq(&self.group, &emb.parent) {
            return Err(Error::GroupMismatch);
        }
        let images = (0..emb.order())
            .map(|v| self.images[emb.parent_index(v)].clone())
            .collect();
        MatrixRep::from_element_images(emb.group.clone(), images)
    }

    /// Conjugate representation h ↦ ρ(g₀ h g₀⁻¹) of a representation of the
    /// embedded (normal) subgroup, for g₀ in the parent group.
    pub fn conj_by(&self, emb: &EmbeddedSubgroup, g0: usize) -> Result<MatrixRep> {
        if !Arc::ptr_eq(&self.group, &emb.group) {
            return Err(Error::GroupMismatch);
        }
        let parent = &emb.parent;
        let mut images = Vec::with_capacity(emb.order());
        for v in 0..emb.order() {
            let p = emb.parent_index(v);
            let c = parent.op(parent.op(g0, p), parent.inv(g0));
            let cv = emb.view_index(c).ok_or(Error::NotNormal(g0))?;
            images.push(self.images[cv].clone());
        }
        MatrixRep::from_element_images(emb.group.clone(), images)
    }

    /// Trace character.
    pub fn character(&self) -> Result<Character> {
        let classes = self.group.conjugacy_classes();
        let class_of = self.group.class_of();
        let mut class_values = Vec::with_capacity(classes.len());
        for class in &classes {
            class_values.push(self.images[class[0]].trace()?);
        }
        Ok(Character {
            group: self.group.clone(),
            class_values,
            class_of,
        })
    }

    /// Dimension of the invariant subspace, via the simultaneous kernel of
    /// {ρ(gen) − I}.
    pub fn invariant_dim_kernel(&self) -> Result<usize> {
        let gens = self.group.gen_indices();
        if gens.is_empty() {
            return Ok(self.degree);
        }
        let id = ExactMatrix::identity(self.degree, 1)?;
        let blocks: Result<Vec<ExactMatrix>> = gens
            .iter()
            .map(|&g| self.images[g].sub(&id))
            .collect();
        ExactMatrix::stack_vertical(&blocks?)?.kernel_dim()
    }

    /// Dimension of the invariant subspace, via ⟨χ_ρ, 1⟩.
    pub fn invariant_dim_char(&self) -> Result<usize> {
        let chi = self.character()?;
        let triv = LinearCharacter::trivial(self.group.clone());
        let ip = inner_product(&chi, &triv)?;
        rational_to_count(&ip)
    }

    /// All linear characters appearing in ρ, with multiplicities.
    pub fn one_dim_constituents(&self) -> Result<Vec<(LinearCharacter, usize)>> {
        let chi = self.character()?;
        let mut out = Vec::new();
        for lambda in self.group.linear_characters()? {
            let mult = rational_to_count(&inner_product(&chi, &lambda)?)?;
            if mult > 0 {
                out.push((lambda, mult));
            }
        }
        Ok(out)
    }
}

fn rational_to_count(q: &Rational) -> Result<usize> {
    if !q.is_integer() || q < &Rational::from_integer(BigInt::from(0)) {
        return Err(Error::NotRational(format!(
            "expected a nonnegative integer multiplicity, got {}",
            q
        )));
    }
    q.to_integer()
        .to_usize()
        .ok_or_else(|| Error::NotRational(format!("multiplicity {} out of range", q)))
}

/// The first linear character λ (in enumeration order) with
/// χ_{ρ₂} = χ_{ρ₁}·λ, if any.
pub fn twist_equivalent(
    rho1: &MatrixRep,
    rho2: &MatrixRep,
) -> Result<Option<LinearCharacter>> {
    if !Arc::ptr_eq(rho1.group(), rho2.group()) {
        return Err(Error::GroupMismatch);
    }
    let chi1 = rho1.character()?;
    let chi2 = rho2.character()?;
    for lambda in rho1.group().linear_characters()? {
        if chi1.mul_linear(&lambda)? == chi2 {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// A class function arising as the trace of a representation: one value per
/// conjugacy class.
#[derive(Debug, Clone)]
pub struct Character {
    group: Arc<FiniteGroup>,
    class_values: Vec<CyclotomicNumber>,
    class_of: Vec<usize>,
}

impl Character {
    pub fn class_values(&self) -> &[CyclotomicNumber] {
        &self.class_values
    }

    pub fn degree_value(&self) -> &CyclotomicNumber {
        &self.class_values[self.class_of[0]]
    }

    /// Pointwise product (character of the tensor product).
    pub fn mul(&self, other: &Character) -> Result<Character> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let class_values: Result<Vec<_>> = self
            .class_values
            .iter()
            .zip(other.class_values.iter())
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(Character {
            group: self.group.clone(),
            class_values: class_values?,
            class_of: self.class_of.clone(),
        })
    }

    /// Pointwise product with a linear character (character of the twist).
    pub fn mul_linear(&self, lambda: &LinearCharacter) -> Result<Character> {
        if !Arc::ptr_eq(&self.group, lambda.group_ref()) {
            return Err(Error::GroupMismatch);
        }
        let classes = self.group.conjugacy_classes();
        let class_values: Result<Vec<_>> = self
            .class_values
            .iter()
            .enumerate()
            .map(|(ci, v)| v.mul(lambda.value(classes[ci][0])))
            .collect();
        Ok(Character {
            group: self.group.clone(),
            class_values: class_values?,
            class_of: self.class_of.clone(),
        })
    }

    /// Restrict to an embedded subgroup, re-bucketing by its classes.
    pub fn restrict_to(&self, emb: &EmbeddedSubgroup) -> Result<Character> {
        if !Arc::ptr_eq(&self.group, &emb.parent) {
            return Err(Error::GroupMismatch);
        }
        let classes = emb.group.conjugacy_classes();
        let class_of = emb.group.class_of();
        let class_values = classes
            .iter()
            .map(|c| self.value_at(emb.parent_index(c[0])))
            .collect();
        Ok(Character {
            group: emb.group.clone(),
            class_values,
            class_of,
        })
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.class_values == other.class_values
    }
}

impl ClassFunction for Character {
    fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    fn value_at(&self, elem: usize) -> CyclotomicNumber {
        self.class_values[self.class_of[elem]].clone()
    }
}

/// A degree-2 representation over the prime field F_ℓ, given by generator
/// images.
#[derive(Debug, Clone)]
pub struct ModlRep {
    ell: u64,
    gens: Vec<[u64; 4]>,
}

const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

impl ModlRep {
    pub fn new(ell: u64, gens: Vec<[i64; 4]>) -> Result<ModlRep> {
        if !SUPPORTED_PRIMES.contains(&ell) {
            return Err(Error::PrimeBound(ell));
        }
        let l = ell as i64;
        let reduced: Vec<[u64; 4]> = gens
            .iter()
            .map(|m| {
                [
                    m[0].rem_euclid(l) as u64,
                    m[1].rem_euclid(l) as u64,
                    m[2].rem_euclid(l) as u64,
                    m[3].rem_euclid(l) as u64,
                ]
            })
            .collect();
        for m in &reduced {
            let det = ((m[0] * m[3]) % ell + ell - (m[1] * m[2]) % ell) % ell;
            if det == 0 {
                return Err(Error::SingularImage);
            }
        }
        Ok(ModlRep {
            ell,
            gens: reduced,
        })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    fn mat_mul(&self, a: [u64; 4], b: [u64; 4]) -> [u64; 4] {
        let l = self.ell;
        [
            (a[0] * b[0] + a[1] * b[2]) % l,
            (a[0] * b[1] + a[1] * b[3]) % l,
            (a[2] * b[0] + a[3] * b[2]) % l,
            (a[2] * b[1] + a[3] * b[3]) % l,
        ]
    }

    /// Enumerate the generated matrix group.
    pub fn closure(&self) -> Result<Vec<[u64; 4]>> {
        let id = [1u64, 0, 0, 1];
        let mut elements = vec![id];
        let mut seen: HashSet<[u64; 4]> = HashSet::new();
        seen.insert(id);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head];
            for g in &self.gens {
                let next = self.mat_mul(cur, *g);
                if seen.insert(next) {
                    if elements.len() >= MODL_CLOSURE_CAP {
                        return Err(Error::OrderBound(MODL_CLOSURE_CAP));
                    }
                    elements.push(next);
                }
            }
            head += 1;
        }
        Ok(elements)
    }

    /// True iff the determinant-1 part of the generated group is all of
    /// SL₂(F_ℓ), i.e. has order ℓ(ℓ²−1).
    pub fn sl2_image_check(&self) -> Result<bool> {
        let l = self.ell;
        let closure = self.closure()?;
        let det1 = closure
            .iter()
            .filter(|m| ((m[0] * m[3]) % l + l - (m[1] * m[2]) % l) % l == 1)
            .count() as u64;
        Ok(det1 == l * (l * l - 1))
    }
}

/// Parse a mod-ℓ fixture: `ell p`, then one 2×2 integer matrix per
/// generator as two lines of two comma-separated integers, blank lines
/// between generators.
pub fn parse_modl_fixture(text: &str) -> Result<ModlRep> {
    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0;
    while i < lines.len() && lines[i].trim().is_empty() {
        i += 1;
    }
    let header = lines
        .get(i)
        .ok_or_else(|| Error::parse(i + 1, "missing 'ell p' header"))?;
    let ell: u64 = header
        .trim()
        .strip_prefix("ell")
        .ok_or_else(|| Error::parse(i + 1, "expected 'ell p'"))?
        .trim()
        .parse()
        .map_err(|_| Error::parse(i + 1, "bad prime"))?;
    i += 1;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (off, line) in lines[i..].iter().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<i64>> = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::parse(i + off + 1, format!("bad integer '{}'", t)))
            })
            .collect();
        let row = row?;
        if row.len() != 2 {
            return Err(Error::parse(i + off + 1, "expected two entries per row"));
        }
        rows.push(row);
    }
    if rows.is_empty() || rows.len() % 2 != 0 {
        return Err(Error::parse(i + 1, "expected an even number of matrix rows"));
    }
    let gens: Vec<[i64; 4]> = rows
        .chunks(2)
        .map(|c| [c[0][0], c[0][1], c[1][0], c[1][1]])
        .collect();
    ModlRep::new(ell, gens)
}

/// Parse a representation section: `conductor N`, then per generator a block
/// of n lines of n cyclotomic literals. The caller says how many generator
/// blocks to expect; parsing stops after them.
pub fn parse_rep_section(
    lines: &[&str],
    start: usize,
    gen_count: usize,
) -> Result<(Vec<ExactMatrix>, usize)> {
    let mut i = start;
    while i < lines.len() && lines[i].trim().is_empty() {
        i += 1;
    }
    let header = lines
        .get(i)
        .ok_or_else(|| Error::parse(i + 1, "missing 'conductor N' header"))?;
    let _conductor: u64 = header
        .trim()
        .strip_prefix("conductor")
        .ok_or_else(|| Error::parse(i + 1, "expected 'conductor N'"))?
        .trim()
        .parse()
        .map_err(|_| Error::parse(i + 1, "bad conductor"))?;
    i += 1;
    let mut images = Vec::with_capacity(gen_count);
    let mut degree = 0usize;
    for _ in 0..gen_count {
        while i < lines.len() && lines[i].trim().is_empty() {
            i += 1;
        }
        let first = lines
            .get(i)
            .ok_or_else(|| Error::parse(i + 1, "missing matrix block"))?;
        let first_row = crate::exactnum::parse_literal_row(first.trim())
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        if degree == 0 {
            degree = first_row.len();
        } else if first_row.len() != degree {
            return Err(Error::parse(i + 1, "inconsistent matrix degree"));
        }
        let mut entries = first_row;
        i += 1;
        for _ in 1..degree {
            let line = lines
                .get(i)
                .ok_or_else(|| Error::parse(i + 1, "truncated matrix block"))?;
            let row = crate::exactnum::parse_literal_row(line.trim())
                .map_err(|e| Error::parse(i + 1, e.to_string()))?;
            if row.len() != degree {
                return Err(Error::parse(i + 1, "ragged matrix row"));
            }
            entries.extend(row);
            i += 1;
        }
        images.push(ExactMatrix::from_entries(degree, degree, entries)?);
    }
    Ok((images, i))
}

/// Emit a representation in the fixture format (round-trippable).
pub fn render_rep_fixture(rep: &MatrixRep, gen_elements: &[usize]) -> String {
    let conductor = rep.conductor();
    let mut out = format!("conductor {}\n", conductor);
    for &g in gen_elements {
        let m = rep.image(g);
        for i in 0..m.rows() {
            let row: Vec<String> = (0..m.cols())
                .map(|j| m.at(i, j).embed(conductor).expect("uniform conductor").to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{cyc_root, rat};
    use crate::groupcore::Perm;

    fn q8() -> Arc<FiniteGroup> {
        let a = Perm::parse_cycles("(1 3 2 4)(5 7 6 8)", 8).unwrap();
        let b = Perm::parse_cycles("(1 5 2 6)(3 8 4 7)", 8).unwrap();
        FiniteGroup::from_perm_gens(vec![a, b]).unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        FiniteGroup::from_perm_gens(vec![a, b]).unwrap()
    }

    fn c(v: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(v)
    }

    /// The 2-dimensional irreducible of Q₈: i ↦ diag(ζ₄, −ζ₄),
    /// j ↦ [[0,−1],[1,0]].
    fn q8_irrep(g: &Arc<FiniteGroup>) -> MatrixRep {
        let mi = ExactMatrix::from_entries(
            2,
            2,
            vec![cyc_root(4, 1), c(0), c(0), cyc_root(4, 3)],
        )
        .unwrap();
        let mj =
            ExactMatrix::from_entries(2, 2, vec![c(0), c(-1), c(1), c(0)]).unwrap();
        MatrixRep::from_gen_images(g.clone(), vec![mi, mj]).unwrap()
    }

    #[test]
    fn q8_two_dimensional_irrep_character() {
        let g = q8();
        let rho = q8_irrep(&g);
        let chi = rho.character().unwrap();
        // classes sorted by smallest member: {1}, {-1}, rest zero
        let mut values: Vec<String> = chi
            .class_values()
            .iter()
            .map(|v| v.canonicalize().to_string())
            .collect();
        values.sort();
        let mut expect: Vec<String> = [c(2), c(-2), c(0), c(0), c(0)]
            .iter()
            .map(|v| v.canonicalize().to_string())
            .collect();
        expect.sort();
        assert_eq!(values, expect);
        // irreducibility: <chi, chi> = 1
        assert_eq!(inner_product(&chi, &chi).unwrap(), rat(1));
    }

    #[test]
    fn trivial_rep_of_any_group() {
        let g = s3();
        let rho = MatrixRep::trivial(g, 3).unwrap();
        assert_eq!(rho.invariant_dim_kernel().unwrap(), 3);
        assert_eq!(rho.invariant_dim_char().unwrap(), 3);
    }

    #[test]
    fn violated_relation_is_caught_with_witness() {
        // ℤ/4 generator sent to a matrix of order 3
        let g = FiniteGroup::from_perm_gens(vec![Perm::parse_cycles("(1 2 3 4)", 4).unwrap()])
            .unwrap();
        let m = ExactMatrix::from_entries(1, 1, vec![cyc_root(3, 1)]).unwrap();
        let err = MatrixRep::from_gen_images(g, vec![m]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism(_, _)));
    }

    #[test]
    fn singular_image_is_rejected() {
        let g = s3();
        let zero = ExactMatrix::zero(2, 2, 1).unwrap();
        let id = ExactMatrix::identity(2, 1).unwrap();
        assert_eq!(
            MatrixRep::from_gen_images(g, vec![zero, id]).unwrap_err(),
            Error::SingularImage
        );
    }

    #[test]
    fn twist_by_trivial_is_identity() {
        let g = q8();
        let rho = q8_irrep(&g);
        let triv = LinearCharacter::trivial(g.clone());
        let twisted = rho.twist(&triv).unwrap();
        assert_eq!(rho.character().unwrap(), twisted.character().unwrap());
    }

    #[test]
    fn tensor_character_is_product_of_characters() {
        let g = q8();
        let rho = q8_irrep(&g);
        let sq = rho.tensor(&rho).unwrap();
        assert_eq!(sq.degree(), 4);
        let chi = rho.character().unwrap();
        assert_eq!(sq.character().unwrap(), chi.mul(&chi).unwrap());
        assert_eq!(sq.character().unwrap().degree_value(), &c(4));
    }

    #[test]
    fn restricting_regular_rep_doubles_regular_character() {
        let g = s3();
        let reg = MatrixRep::regular(g.clone()).unwrap();
        let rot = g.index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap()).unwrap();
        let a3 = g.subgroup_closure(&[rot]).to_group().unwrap();
        let res = reg.restrict(&a3).unwrap();
        let chi = res.character().unwrap();
        // 2 × regular character of A₃: 6 at the identity, 0 elsewhere
        assert_eq!(chi.value_at(0), c(6));
        for e in 1..3 {
            assert_eq!(chi.value_at(e), c(0));
        }
    }

    #[test]
    fn conjugation_by_identity_and_members_preserves_character() {
        let g = q8();
        let full = g.subgroup_closure(&[1, 2]); // seeds: the two generators
        let emb = full.to_group().unwrap();
        let rho = q8_irrep(&emb.group);
        let chi = rho.character().unwrap();
        assert_eq!(rho.conj_by(&emb, 0).unwrap().character().unwrap(), chi);
        for h0 in 0..g.order() {
            let conj = rho.conj_by(&emb, h0).unwrap();
            assert_eq!(conj.character().unwrap(), chi);
        }
    }

    #[test]
    fn invariant_dims_agree() {
        let g = s3();
        let reg = MatrixRep::regular(g.clone()).unwrap();
        assert_eq!(reg.invariant_dim_kernel().unwrap(), 1);
        assert_eq!(reg.invariant_dim_char().unwrap(), 1);
        let q = q8();
        let rho = q8_irrep(&q);
        assert_eq!(rho.invariant_dim_kernel().unwrap(), 0);
        assert_eq!(rho.invariant_dim_char().unwrap(), 0);
    }

    #[test]
    fn one_dim_constituents_of_regular_s3() {
        let g = s3();
        let reg = MatrixRep::regular(g.clone()).unwrap();
        let cons = reg.one_dim_constituents().unwrap();
        assert_eq!(cons.len(), 2);
        assert!(cons[0].0.is_trivial());
        assert_eq!(cons[0].1, 1);
        assert_eq!(cons[1].1, 1);
        let triv = MatrixRep::trivial(g, 1).unwrap();
        let tc = triv.one_dim_constituents().unwrap();
        assert_eq!(tc.len(), 1);
        assert!(tc[0].0.is_trivial());
    }

    #[test]
    fn q8_irrep_squared_contains_all_four_linear_characters() {
        let g = q8();
        let rho = q8_irrep(&g);
        let sq = rho.tensor(&rho).unwrap();
        let cons = sq.one_dim_constituents().unwrap();
        assert_eq!(cons.len(), 4);
        for (_, m) in &cons {
            assert_eq!(*m, 1);
        }
    }

    #[test]
    fn twist_equivalence_finds_witnesses() {
        let g = q8();
        let rho = q8_irrep(&g);
        let w = twist_equivalent(&rho, &rho).unwrap().unwrap();
        assert!(w.is_trivial());
        for lambda in g.linear_characters().unwrap() {
            let tw = rho.twist(&lambda).unwrap();
            let found = twist_equivalent(&rho, &tw).unwrap().unwrap();
            // the witness must transport the character correctly
            assert_eq!(
                rho.character().unwrap().mul_linear(&found).unwrap(),
                tw.character().unwrap()
            );
        }
    }

    #[test]
    fn sl2_check_on_elementary_generators() {
        let rep = ModlRep::new(5, vec![[1, 1, 0, 1], [1, 0, 1, 1]]).unwrap();
        assert!(rep.sl2_image_check().unwrap());
        assert_eq!(rep.closure().unwrap().len(), 120);
    }

    #[test]
    fn sl2_check_rejects_borel_and_diagonal() {
        let borel = ModlRep::new(5, vec![[1, 1, 0, 1], [2, 0, 0, 3]]).unwrap();
        assert!(!borel.sl2_image_check().unwrap());
        let diag = ModlRep::new(7, vec![[3, 0, 0, 1], [1, 0, 0, 3]]).unwrap();
        assert!(!diag.sl2_image_check().unwrap());
    }

    #[test]
    fn sl2_check_on_full_gl2_f7() {
        // elementary matrices generate SL₂; a primitive-root diagonal
        // extends to all of GL₂(F₇)
        let rep = ModlRep::new(7, vec![[1, 1, 0, 1], [1, 0, 1, 1], [3, 0, 0, 1]]).unwrap();
        assert_eq!(rep.closure().unwrap().len(), 2016);
        assert!(rep.sl2_image_check().unwrap());
    }

    #[test]
    fn bad_prime_is_rejected() {
        assert_eq!(
            ModlRep::new(4, vec![[1, 0, 0, 1]]).unwrap_err(),
            Error::PrimeBound(4)
        );
        assert_eq!(
            ModlRep::new(17, vec![[1, 0, 0, 1]]).unwrap_err(),
            Error::PrimeBound(17)
        );
    }

    #[test]
    fn modl_fixture_parses() {
        let rep = parse_modl_fixture("ell 5\n1,1\n0,1\n\n1,0\n1,1\n").unwrap();
        assert_eq!(rep.ell(), 5);
        assert!(rep.sl2_image_check().unwrap());
    }

    #[test]
    fn characters_are_class_functions() {
        let g = q8();
        let rho = q8_irrep(&g);
        let chi = rho.character().unwrap();
        for e in 0..g.order() {
            assert_eq!(rho.image(e).trace().unwrap(), chi.value_at(e));
        }
    }

    #[test]
    fn twisting_permutes_one_dim_constituents() {
        let g = q8();
        let rho = q8_irrep(&g);
        let sq = rho.tensor(&rho).unwrap();
        let base = sq.one_dim_constituents().unwrap();
        for lambda in g.linear_characters().unwrap() {
            let twisted = sq.twist(&lambda).unwrap();
            let moved = twisted.one_dim_constituents().unwrap();
            assert_eq!(base.len(), moved.len());
            // the constituent list is the base list multiplied by λ
            for (mu, mult) in &base {
                let shifted = mu.mul(&lambda).unwrap();
                let found = moved.iter().find(|(nu, _)| *nu == shifted).unwrap();
                assert_eq!(found.1, *mult);
            }
        }
    }
}
