//! Weight-multiset algebra for representations of an r-fold product of GL₂
//! factors.
//!
//! A [`CharacterPoly`] is a Laurent polynomial in the 2r torus variables
//! a₁,b₁,..,a_r,b_r recording weight multiplicities. Irreducible characters
//! are products of the per-factor weight lists a^k b^m, a^{k−2} b^{m+1}, …,
//! a^{−k} b^{k+m}; decomposition peels the lexicographically maximal weight
//! and subtracts its irreducible character until nothing is left.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dimension bound for any character handled here.
pub const DIMENSION_CAP: u64 = 1 << 20;

/// A torus weight ∏ aᵢ^{xᵢ} bᵢ^{yᵢ} of an r-fold product of GL₂ factors.
///
/// Ordered lexicographically on the concatenated vector (x₁..x_r, y₁..y_r);
/// this is the dominance-respecting order the peeling loop uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    exps: Vec<(i64, i64)>,
}

impl Weight {
    pub fn new(exps: Vec<(i64, i64)>) -> Self {
        Weight { exps }
    }

    pub fn factors(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[(i64, i64)] {
        &self.exps
    }

    fn key(&self) -> (Vec<i64>, Vec<i64>) {
        (
            self.exps.iter().map(|e| e.0).collect(),
            self.exps.iter().map(|e| e.1).collect(),
        )
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{} {}", x, y)?;
        }
        Ok(())
    }
}

/// Per-factor highest-weight labels (kᵢ, mᵢ) of an irreducible of the
/// product group; kᵢ ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HighestWeightTuple {
    pairs: Vec<(i64, i64)>,
}

impl HighestWeightTuple {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self> {
        if pairs.iter().any(|&(k, _)| k < 0) {
            return Err(Error::NegativeHighestWeight);
        }
        Ok(HighestWeightTuple { pairs })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn factors(&self) -> usize {
        self.pairs.len()
    }

    /// ∏ (kᵢ + 1), the dimension of the named irreducible.
    pub fn dimension(&self) -> u64 {
        self.pairs.iter().map(|&(k, _)| (k + 1) as u64).product()
    }

    /// True when every kᵢ = 0, i.e. the irreducible is one-dimensional.
    pub fn is_one_dimensional(&self) -> bool {
        self.pairs.iter().all(|&(k, _)| k == 0)
    }
}

impl fmt::Display for HighestWeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in &self.pairs {
            write!(f, "({},{})", k, m)?;
        }
        Ok(())
    }
}

/// Laurent polynomial over the torus weights: finite map weight →
/// multiplicity, zero multiplicities never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPoly {
    factors: usize,
    terms: BTreeMap<Weight, i64>,
}

impl CharacterPoly {
    /// The empty-product character of the trivial representation.
    pub fn trivial(factors: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::new(vec![(0, 0); factors]), 1);
        CharacterPoly { factors, terms }
    }

    /// The standard two-dimensional character of factor `j`, weights aⱼ and
    /// aⱼ⁻¹bⱼ.
    pub fn std_factor(factors: usize, j: usize) -> Self {
        assert!(j < factors);
        let mut terms = BTreeMap::new();
        let mut hi = vec![(0, 0); factors];
        hi[j] = (1, 0);
        let mut lo = vec![(0, 0); factors];
        lo[j] = (-1, 1);
        terms.insert(Weight::new(hi), 1);
        terms.insert(Weight::new(lo), 1);
        CharacterPoly { factors, terms }
    }

    /// The standard character for a single GL₂ factor.
    pub fn std() -> Self {
        Self::std_factor(1, 0)
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    /// Value at all variables = 1: the dimension for a genuine character.
    pub fn eval_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    fn check_cap(&self) -> Result<()> {
        let size: u64 = self.terms.values().map(|m| m.unsigned_abs()).sum();
        if size > DIMENSION_CAP {
            return Err(Error::DegreeCap(size, DIMENSION_CAP));
        }
        Ok(())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.factors != other.factors {
            return Err(Error::FactorMismatch(self.factors, other.factors));
        }
        let mut out = self.clone();
        for (w, m) in other.terms.iter() {
            out.insert(w.clone(), *m);
        }
        out.check_cap()?;
        Ok(out)
    }

    /// Sum of `mult` copies of `other` into `self`.
    pub fn add_scaled(&self, other: &Self, mult: i64) -> Result<Self> {
        if self.factors != other.factors {
            return Err(Error::FactorMismatch(self.factors, other.factors));
        }
        let mut out = self.clone();
        for (w, m) in other.terms.iter() {
            out.insert(w.clone(), mult * m);
        }
        out.check_cap()?;
        Ok(out)
    }

    /// The zero polynomial (not a character; useful as an accumulator).
    pub fn zero(factors: usize) -> Self {
        CharacterPoly {
            factors,
            terms: BTreeMap::new(),
        }
    }

    /// Laurent-polynomial product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.factors != other.factors {
            return Err(Error::FactorMismatch(self.factors, other.factors));
        }
        let mut out = CharacterPoly {
            factors: self.factors,
            terms: BTreeMap::new(),
        };
        for (w1, m1) in self.terms.iter() {
            for (w2, m2) in other.terms.iter() {
                let exps: Vec<(i64, i64)> = w1
                    .exps
                    .iter()
                    .zip(w2.exps.iter())
                    .map(|(a, b)| (a.0 + b.0, a.1 + b.1))
                    .collect();
                out.insert(Weight::new(exps), m1 * m2);
            }
        }
        out.check_cap()?;
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = CharacterPoly::trivial(self.factors);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn sub_scaled(&mut self, other: &CharacterPoly, scale: i64) {
        for (w, m) in other.terms.iter() {
            self.insert(w.clone(), -scale * m);
        }
    }

    /// Multiply by the single weight `w` (used by the determinant-twist
    /// tests: a pure bᵢ-power weight shifts every mᵢ).
    pub fn mul_weight(&self, w: &Weight) -> Result<Self> {
        if w.factors() != self.factors {
            return Err(Error::FactorMismatch(self.factors, w.factors()));
        }
        let mut single = CharacterPoly {
            factors: self.factors,
            terms: BTreeMap::new(),
        };
        single.insert(w.clone(), 1);
        self.mul(&single)
    }

    /// Render one term per line as `x1 y1 ... xr yr : mult`, sorted
    /// lexicographically in the printed exponent sequence.
    pub fn render(&self) -> String {
        let mut rows: Vec<(Vec<i64>, i64)> = self
            .terms
            .iter()
            .map(|(w, &m)| {
                let mut flat = Vec::with_capacity(2 * self.factors);
                for (x, y) in &w.exps {
                    flat.push(*x);
                    flat.push(*y);
                }
                (flat, m)
            })
            .collect();
        rows.sort();
        let mut out = String::new();
        for (flat, m) in rows {
            let parts: Vec<String> = flat.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push_str(&format!(" : {}\n", m));
        }
        out
    }
}

/// The character of the irreducible with the given highest weights:
/// ∏ᵢ Σ_{j=0}^{kᵢ} aᵢ^{kᵢ−2j} bᵢ^{mᵢ+j}.
pub fn irr_char(hw: &HighestWeightTuple) -> Result<CharacterPoly> {
    let r = hw.factors();
    let mut acc = CharacterPoly::trivial(r);
    for (i, &(k, m)) in hw.pairs().iter().enumerate() {
        if k < 0 {
            return Err(Error::NegativeHighestWeight);
        }
        let mut factor = CharacterPoly {
            factors: r,
            terms: BTreeMap::new(),
        };
        for j in 0..=k {
            let mut exps = vec![(0, 0); r];
            exps[i] = (k - 2 * j, m + j);
            factor.insert(Weight::new(exps), 1);
        }
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Decompose a genuine character into irreducibles by peeling the
/// lexicographically maximal weight. Emits constituents in peeling order
/// (maximal highest weight first).
pub fn decompose(p: &CharacterPoly) -> Result<Vec<(HighestWeightTuple, i64)>> {
    p.check_cap()?;
    let mut rem = p.clone();
    let mut out = Vec::new();
    while let Some((w, m)) = rem.terms.iter().next_back().map(|(w, &m)| (w.clone(), m)) {
        if m < 0 || w.exps.iter().any(|&(x, _)| x < 0) {
            return Err(Error::NotACharacter(format!("{} : {}", w, m)));
        }
        let hw = HighestWeightTuple::new(w.exps.clone())?;
        let ch = irr_char(&hw)?;
        rem.sub_scaled(&ch, m);
        out.push((hw, m));
    }
    Ok(out)
}

/// Number of one-dimensional constituents: total multiplicity of
/// decomposition entries whose kᵢ all vanish.
pub fn one_dim_count(p: &CharacterPoly) -> Result<u64> {
    Ok(one_dim_types(p)?.iter().map(|&(_, m)| m as u64).sum())
}

/// The one-dimensional constituents themselves, with multiplicities.
pub fn one_dim_types(p: &CharacterPoly) -> Result<Vec<(HighestWeightTuple, i64)>> {
    Ok(decompose(p)?
        .into_iter()
        .filter(|(hw, _)| hw.is_one_dimensional())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw1(k: i64, m: i64) -> HighestWeightTuple {
        HighestWeightTuple::new(vec![(k, m)]).unwrap()
    }

    #[test]
    fn standard_character_weights() {
        // (k,m) = (1,0): a + a⁻¹b
        let ch = irr_char(&hw1(1, 0)).unwrap();
        assert_eq!(ch, CharacterPoly::std());
        assert_eq!(ch.eval_at_ones(), 2);
    }

    #[test]
    fn determinant_power_is_a_single_weight() {
        let ch = irr_char(&hw1(0, 5)).unwrap();
        assert_eq!(ch.num_terms(), 1);
        assert_eq!(ch.multiplicity(&Weight::new(vec![(0, 5)])), 1);
    }

    #[test]
    fn two_factor_product_of_standards() {
        let hw = HighestWeightTuple::new(vec![(1, 0), (1, 0)]).unwrap();
        let ch = irr_char(&hw).unwrap();
        assert_eq!(ch.num_terms(), 4);
        assert_eq!(ch.eval_at_ones(), 4);
        let direct = CharacterPoly::std_factor(2, 0)
            .mul(&CharacterPoly::std_factor(2, 1))
            .unwrap();
        assert_eq!(ch, direct);
    }

    #[test]
    fn square_of_standard_expands_binomially() {
        // (a + a⁻¹b)² = a² + 2b + a⁻²b²
        let sq = CharacterPoly::std().pow(2).unwrap();
        assert_eq!(sq.multiplicity(&Weight::new(vec![(2, 0)])), 1);
        assert_eq!(sq.multiplicity(&Weight::new(vec![(0, 1)])), 2);
        assert_eq!(sq.multiplicity(&Weight::new(vec![(-2, 2)])), 1);
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn cube_of_standard() {
        // (a + a⁻¹b)³ = a³ + 3ab + 3a⁻¹b² + a⁻³b³
        let cube = CharacterPoly::std().pow(3).unwrap();
        assert_eq!(cube.multiplicity(&Weight::new(vec![(3, 0)])), 1);
        assert_eq!(cube.multiplicity(&Weight::new(vec![(1, 1)])), 3);
        assert_eq!(cube.multiplicity(&Weight::new(vec![(-1, 2)])), 3);
        assert_eq!(cube.multiplicity(&Weight::new(vec![(-3, 3)])), 1);
    }

    #[test]
    fn mul_by_trivial_is_identity() {
        let p = CharacterPoly::std().pow(3).unwrap();
        assert_eq!(p.mul(&CharacterPoly::trivial(1)).unwrap(), p);
    }

    #[test]
    fn clebsch_gordan_square() {
        // R ⊗ R = Sym²R ⊕ det R
        let dec = decompose(&CharacterPoly::std().pow(2).unwrap()).unwrap();
        assert_eq!(dec, vec![(hw1(2, 0), 1), (hw1(0, 1), 1)]);
    }

    #[test]
    fn fourth_power_multiplicities() {
        // C(4,i) - C(4,i-1) for hw (4-2i, i): 1, 3, 2
        let dec = decompose(&CharacterPoly::std().pow(4).unwrap()).unwrap();
        assert_eq!(dec, vec![(hw1(4, 0), 1), (hw1(2, 1), 3), (hw1(0, 2), 2)]);
        let dim: i64 = dec.iter().map(|(hw, m)| hw.dimension() as i64 * m).sum();
        assert_eq!(dim, 16);
    }

    #[test]
    fn two_factor_squares_give_nine_constituents() {
        let p = CharacterPoly::std_factor(2, 0)
            .pow(2)
            .unwrap()
            .mul(&CharacterPoly::std_factor(2, 1).pow(2).unwrap())
            .unwrap();
        let dec = decompose(&p).unwrap();
        assert_eq!(dec.len(), 4); // (2,0|2,0), (2,0|0,1), (0,1|2,0), (0,1|0,1)
        let total: i64 = dec.iter().map(|(hw, m)| hw.dimension() as i64 * m).sum();
        assert_eq!(total, 16);
        let pure = HighestWeightTuple::new(vec![(0, 1), (0, 1)]).unwrap();
        let found = dec.iter().find(|(hw, _)| *hw == pure).unwrap();
        assert_eq!(found.1, 1);
    }

    #[test]
    fn one_dim_counts_match_closed_form() {
        assert_eq!(one_dim_count(&CharacterPoly::std().pow(2).unwrap()).unwrap(), 1);
        assert_eq!(one_dim_count(&CharacterPoly::std().pow(3).unwrap()).unwrap(), 0);
        let types = one_dim_types(&CharacterPoly::std().pow(4).unwrap()).unwrap();
        assert_eq!(types, vec![(hw1(0, 2), 2)]);
    }

    #[test]
    fn non_character_is_rejected() {
        let mut p = CharacterPoly::trivial(1);
        p.insert(Weight::new(vec![(1, 0)]), -1);
        assert!(matches!(decompose(&p), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn factor_mismatch_is_rejected() {
        let a = CharacterPoly::std();
        let b = CharacterPoly::trivial(2);
        assert!(matches!(a.mul(&b), Err(Error::FactorMismatch(1, 2))));
    }

    #[test]
    fn determinant_twist_shifts_types() {
        let p = CharacterPoly::std().pow(4).unwrap();
        let twisted = p.mul_weight(&Weight::new(vec![(0, 3)])).unwrap();
        assert_eq!(
            one_dim_count(&p).unwrap(),
            one_dim_count(&twisted).unwrap()
        );
        let t = one_dim_types(&twisted).unwrap();
        assert_eq!(t, vec![(hw1(0, 5), 2)]);
    }

    #[test]
    fn render_is_sorted_and_stable() {
        let p = CharacterPoly::std().pow(2).unwrap();
        assert_eq!(p.render(), "-2 2 : 1\n0 1 : 2\n2 0 : 1\n");
    }
}
