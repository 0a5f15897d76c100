//! Finite groups presented by permutation generators, with full Cayley
//! closure, subgroups, cosets, conjugacy classes, and linear characters.
//!
//! Element 0 is always the identity; elements are listed in breadth-first
//! discovery order from the generators and each element carries a word in
//! the generators, so everything downstream (representation extension,
//! coset representatives, character enumerations) is deterministic.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{cyc_root, CyclotomicNumber, Rational};

/// Largest permutation point set accepted from fixture input.
pub const MAX_POINTS: usize = 32;
/// Largest group order the closure will enumerate.
pub const MAX_ORDER: usize = 512;
/// Largest abelianization handled by the character enumeration.
pub const MAX_ABELIANIZATION: usize = 64;

/// A permutation of {0..n−1}, stored as the image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(points: usize) -> Self {
        Perm((0..points).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::ShapeMismatch("not a permutation".to_string()));
            }
            seen[img] = true;
        }
        Ok(Perm(images))
    }

    pub fn points(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// Composition: (self ∘ other)(x) = self(other(x)), i.e. `other` acts
    /// first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (x, &img) in self.0.iter().enumerate() {
            inv[img] = x;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Parse disjoint-cycle notation with 1-based points, e.g. `(1 2)(3 4)`.
    /// `()` denotes the identity.
    pub fn parse_cycles(s: &str, points: usize) -> Result<Perm> {
        let err = |msg: String| Error::parse(0, msg);
        let mut images: Vec<usize> = (0..points).collect();
        let mut moved = vec![false; points];
        let s = s.trim();
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(err(format!("cycle notation must be parenthesized: '{}'", s)));
        }
        for cycle in s[1..s.len() - 1].split(")(") {
            let pts: Result<Vec<usize>> = cycle
                .split_whitespace()
                .map(|t| {
                    let v: usize = t
                        .parse()
                        .map_err(|_| err(format!("bad point '{}'", t)))?;
                    if v == 0 || v > points {
                        return Err(err(format!("point {} outside 1..={}", v, points)));
                    }
                    Ok(v - 1)
                })
                .collect();
            let pts = pts?;
            if pts.is_empty() {
                continue; // "()" identity cycle
            }
            for &p in &pts {
                if moved[p] {
                    return Err(err(format!("point {} repeated across cycles", p + 1)));
                }
                moved[p] = true;
            }
            for i in 0..pts.len() {
                images[pts[i]] = pts[(i + 1) % pts.len()];
            }
        }
        Ok(Perm(images))
    }

    /// Canonical disjoint-cycle rendering, 1-based, fixed points omitted.
    pub fn to_cycles_string(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            loop {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
                first = false;
                x = self.0[x];
                if x == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles_string())
    }
}

/// Breadth-first closure of the generated permutation group; returns the
/// element list (identity first, discovery order) and generator words.
fn close_perms(points: usize, gens: &[Perm], cap: usize) -> Result<(Vec<Perm>, Vec<Vec<usize>>)> {
    let mut elements = vec![Perm::identity(points)];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let cur = elements[head].clone();
        for (gi, g) in gens.iter().enumerate() {
            let next = cur.compose(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::OrderBound(cap));
                }
                index.insert(next.clone(), elements.len());
                let mut w = words[head].clone();
                w.push(gi);
                elements.push(next);
                words.push(w);
            }
        }
        head += 1;
    }
    Ok((elements, words))
}

/// A finite group with full Cayley closure over permutation generators.
#[derive(Debug)]
pub struct FiniteGroup {
    points: usize,
    gens: Vec<Perm>,
    gen_indices: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    cayley: Vec<u32>,
    inverses: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl FiniteGroup {
    fn build(points: usize, gens: Vec<Perm>, cap: usize) -> Result<Arc<FiniteGroup>> {
        for g in &gens {
            if g.points() != points {
                return Err(Error::ShapeMismatch(
                    "generators act on different point sets".to_string(),
                ));
            }
        }
        let (elements, words) = close_perms(points, &gens, cap)?;
        let order = elements.len();
        let mut index = HashMap::with_capacity(order);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i);
        }
        let mut cayley = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let c = elements[a].compose(&elements[b]);
                cayley[a * order + b] = index[&c] as u32;
            }
        }
        let mut inverses = vec![0usize; order];
        for a in 0..order {
            let inv = elements[a].inverse();
            inverses[a] = index[&inv];
        }
        // identity/inverse consistency of the table
        for a in 0..order {
            debug_assert_eq!(cayley[a], a as u32);
            debug_assert_eq!(cayley[a * order], a as u32);
            assert_eq!(cayley[a * order + inverses[a]], 0);
            assert_eq!(cayley[inverses[a] * order + a], 0);
        }
        let gen_indices = gens.iter().map(|g| index[g]).collect();
        Ok(Arc::new(FiniteGroup {
            points,
            gens,
            gen_indices,
            elements,
            index,
            cayley,
            inverses,
            words,
        }))
    }

    /// Close a set of permutation generators into a group. Enforces the
    /// fixture-input bounds: at most 32 points, at most 512 elements.
    pub fn from_perm_gens(gens: Vec<Perm>) -> Result<Arc<FiniteGroup>> {
        let points = gens.first().map(|g| g.points()).unwrap_or(1);
        if points > MAX_POINTS {
            return Err(Error::PointBound(points, MAX_POINTS));
        }
        Self::build(points, gens, MAX_ORDER)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn gen_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The stored generator word for element `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.op(self.op(g, h), self.inv(g))
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut x = e;
        let mut n = 1;
        while x != 0 {
            x = self.op(x, e);
            n += 1;
        }
        n
    }

    /// Exponent: lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        let mut l: u64 = 1;
        for e in 0..self.order() {
            l = l.lcm(&(self.element_order(e) as u64));
        }
        l
    }

    /// Smallest subgroup containing the seed elements.
    pub fn subgroup_closure(self: &Arc<Self>, seeds: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            for &s in seeds {
                let nxt = self.op(cur, s);
                if !member[nxt] {
                    member[nxt] = true;
                    queue.push(nxt);
                }
            }
            head += 1;
        }
        let members: Vec<usize> = (0..self.order()).filter(|&e| member[e]).collect();
        Subgroup {
            parent: self.clone(),
            members,
            member_set: member,
            gens: seeds.to_vec(),
        }
    }

    /// gHg⁻¹ = H for every generator g of the parent.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        for &g in &self.gen_indices {
            for &m in &h.members {
                if !h.member_set[self.conjugate(g, m)] {
                    return false;
                }
            }
        }
        true
    }

    /// Left cosets of `h`, each with its smallest element as representative,
    /// listed in increasing representative order.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Coset> {
        let mut assigned = vec![false; self.order()];
        let mut cosets = Vec::new();
        for rep in 0..self.order() {
            if assigned[rep] {
                continue;
            }
            let mut members: Vec<usize> = h.members.iter().map(|&m| self.op(rep, m)).collect();
            members.sort_unstable();
            for &m in &members {
                assigned[m] = true;
            }
            cosets.push(Coset { rep, members });
        }
        cosets
    }

    /// Conjugacy classes, sorted by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head];
                for &g in &self.gen_indices {
                    let c = self.conjugate(g, cur);
                    if !seen[c] {
                        seen[c] = true;
                        orbit.push(c);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    /// Map element → index of its conjugacy class.
    pub fn class_of(&self) -> Vec<usize> {
        let classes = self.conjugacy_classes();
        let mut out = vec![0; self.order()];
        for (ci, class) in classes.iter().enumerate() {
            for &e in class {
                out[e] = ci;
            }
        }
        out
    }

    /// The commutator subgroup, generated by all commutators.
    pub fn commutator_subgroup(self: &Arc<Self>) -> Subgroup {
        let mut seeds = Vec::new();
        let mut seen = vec![false; self.order()];
        for a in 0..self.order() {
            for b in 0..self.order() {
                let c = self.op(self.op(a, b), self.op(self.inv(a), self.inv(b)));
                if !seen[c] {
                    seen[c] = true;
                    seeds.push(c);
                }
            }
        }
        self.subgroup_closure(&seeds)
    }

    /// Quotient by a normal subgroup, realized on the coset set.
    pub fn quotient(self: &Arc<Self>, h: &Subgroup) -> Result<Quotient> {
        if !Arc::ptr_eq(self, &h.parent) {
            return Err(Error::GroupMismatch);
        }
        if !self.is_normal(h) {
            let bad = self
                .gen_indices
                .iter()
                .copied()
                .find(|&g| h.members.iter().any(|&m| !h.member_set[self.conjugate(g, m)]))
                .unwrap_or(0);
            return Err(Error::NotNormal(bad));
        }
        let cosets = self.left_cosets(h);
        let n = cosets.len();
        let mut coset_of_elem = vec![0usize; self.order()];
        for (ci, c) in cosets.iter().enumerate() {
            for &m in &c.members {
                coset_of_elem[m] = ci;
            }
        }
        // Left-multiplication action of g on the coset set.
        let perm_of = |g: usize| -> Perm {
            Perm(
                cosets
                    .iter()
                    .map(|c| coset_of_elem[self.op(g, c.rep)])
                    .collect(),
            )
        };
        let qgens: Vec<Perm> = self.gen_indices.iter().map(|&g| perm_of(g)).collect();
        let group = FiniteGroup::build(n, qgens, n)?;
        let mut class_of = vec![0usize; self.order()];
        for e in 0..self.order() {
            class_of[e] = group
                .index_of(&perm_of(e))
                .expect("coset action image must be in the quotient");
        }
        let mut rep_of = vec![usize::MAX; group.order()];
        for e in 0..self.order() {
            if rep_of[class_of[e]] == usize::MAX {
                rep_of[class_of[e]] = e;
            }
        }
        Ok(Quotient {
            group,
            class_of,
            rep_of,
        })
    }

    /// All linear characters (one-dimensional representations), enumerated
    /// deterministically: trivial character first, then lexicographic in the
    /// exponent vectors over a cyclic basis of the abelianization.
    pub fn linear_characters(self: &Arc<Self>) -> Result<Vec<LinearCharacter>> {
        let comm = self.commutator_subgroup();
        let ab = self.quotient(&comm)?;
        let q = &ab.group;
        if q.order() > MAX_ABELIANIZATION {
            return Err(Error::AbelianizationBound(q.order(), MAX_ABELIANIZATION));
        }
        let basis = abelian_basis(q);
        let orders: Vec<usize> = basis.iter().map(|&(_, d)| d).collect();
        let m: u64 = orders.iter().fold(1u64, |acc, &d| acc.lcm(&(d as u64)));
        // Write every quotient element as a product of basis powers.
        let mut expo_of: Vec<Vec<usize>> = vec![Vec::new(); q.order()];
        let mut tuple = vec![0usize; basis.len()];
        loop {
            let mut e = 0usize;
            for (i, &(b, _)) in basis.iter().enumerate() {
                for _ in 0..tuple[i] {
                    e = q.op(e, b);
                }
            }
            expo_of[e] = tuple.clone();
            // odometer over the basis orders
            let mut i = basis.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < orders[i] {
                    break;
                }
                tuple[i] = 0;
                if i == 0 {
                    break;
                }
            }
            if tuple.iter().all(|&t| t == 0) {
                break;
            }
        }
        // Enumerate all value-exponent assignments.
        let mut chars = Vec::with_capacity(q.order());
        let mut assign = vec![0usize; basis.len()];
        loop {
            let mut values = Vec::with_capacity(self.order());
            for e in 0..self.order() {
                let exps = &expo_of[ab.class_of[e]];
                let mut total: u64 = 0;
                for (i, &a) in exps.iter().enumerate() {
                    total =
                        (total + (a as u64) * (assign[i] as u64) * (m / orders[i] as u64)) % m;
                }
                values.push(cyc_root(m, total as i64));
            }
            chars.push(LinearCharacter {
                group: self.clone(),
                values,
            });
            let mut i = basis.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                assign[i] += 1;
                if assign[i] < orders[i] {
                    break;
                }
                assign[i] = 0;
                if i == 0 {
                    break;
                }
            }
            if assign.iter().all(|&a| a == 0) {
                break;
            }
        }
        Ok(chars)
    }
}

/// Cyclic basis of a finite abelian group: repeatedly split off an element
/// of maximal order and recurse on the quotient, lifting the quotient basis
/// back with the usual order-preserving correction.
fn abelian_basis(a: &Arc<FiniteGroup>) -> Vec<(usize, usize)> {
    if a.order() == 1 {
        return Vec::new();
    }
    let m = (1..a.order())
        .map(|e| a.element_order(e))
        .max()
        .unwrap_or(1);
    let x = (1..a.order())
        .find(|&e| a.element_order(e) == m)
        .expect("nontrivial group has a maximal-order element");
    let cyc = a.subgroup_closure(&[x]);
    let quot = a.quotient(&cyc).expect("abelian subgroups are normal");
    let mut basis = vec![(x, m)];
    for (qb, r) in abelian_basis(&quot.group) {
        let y = quot.rep_of[qb];
        // y^r lies in ⟨x⟩, say x^t with r | t; correct by x^{-t/r}.
        let mut yr = 0usize;
        for _ in 0..r {
            yr = a.op(yr, y);
        }
        let mut t = 0usize;
        let mut acc = 0usize;
        while acc != yr {
            acc = a.op(acc, x);
            t += 1;
        }
        debug_assert_eq!(t % r, 0);
        let mut corrected = y;
        let xinv = a.inv(x);
        for _ in 0..t / r {
            corrected = a.op(corrected, xinv);
        }
        debug_assert_eq!(a.element_order(corrected), r);
        basis.push((corrected, r));
    }
    basis
}

/// A subgroup of a [`FiniteGroup`], stored as the sorted member set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    member_set: Vec<bool>,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.member_set[e]
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// Realize the subgroup as a group in its own right, keeping the
    /// translation to parent element indices.
    pub fn to_group(&self) -> Result<EmbeddedSubgroup> {
        let seed_perms: Vec<Perm> = if self.gens.is_empty() {
            Vec::new()
        } else {
            self.gens
                .iter()
                .map(|&g| self.parent.element(g).clone())
                .collect()
        };
        let group = FiniteGroup::build(self.parent.points(), seed_perms, self.parent.order())?;
        if group.order() != self.members.len() {
            return Err(Error::ShapeMismatch(
                "subgroup seeds do not generate the member set".to_string(),
            ));
        }
        let mut to_parent = Vec::with_capacity(group.order());
        let mut from_parent = vec![None; self.parent.order()];
        for i in 0..group.order() {
            let p = self
                .parent
                .index_of(group.element(i))
                .expect("subgroup element must be in the parent");
            to_parent.push(p);
            from_parent[p] = Some(i);
        }
        Ok(EmbeddedSubgroup {
            parent: self.parent.clone(),
            group,
            to_parent,
            from_parent,
        })
    }
}

/// A left coset with its canonical (smallest-index) representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// A quotient group together with the projection and a section.
#[derive(Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    /// parent element → quotient element
    pub class_of: Vec<usize>,
    /// quotient element → smallest parent element mapping onto it
    pub rep_of: Vec<usize>,
}

/// A subgroup realized as its own [`FiniteGroup`] with index translation.
#[derive(Debug, Clone)]
pub struct EmbeddedSubgroup {
    pub parent: Arc<FiniteGroup>,
    pub group: Arc<FiniteGroup>,
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl EmbeddedSubgroup {
    pub fn parent_index(&self, view: usize) -> usize {
        self.to_parent[view]
    }

    pub fn view_index(&self, parent: usize) -> Option<usize> {
        self.from_parent[parent]
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Anything with one cyclotomic value per group element.
pub trait ClassFunction {
    fn group(&self) -> &Arc<FiniteGroup>;
    fn value_at(&self, elem: usize) -> CyclotomicNumber;
}

/// A one-dimensional character: multiplicative root-of-unity values.
#[derive(Debug, Clone)]
pub struct LinearCharacter {
    group: Arc<FiniteGroup>,
    values: Vec<CyclotomicNumber>,
}

impl LinearCharacter {
    pub fn group_ref(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let values = vec![CyclotomicNumber::one(1); group.order()];
        LinearCharacter { group, values }
    }

    pub fn from_values(group: Arc<FiniteGroup>, values: Vec<CyclotomicNumber>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::ShapeMismatch(
                "one value per group element required".to_string(),
            ));
        }
        Ok(LinearCharacter { group, values })
    }

    pub fn value(&self, elem: usize) -> &CyclotomicNumber {
        &self.values[elem]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// χ(gh) = χ(g)χ(h) on all pairs.
    pub fn is_multiplicative(&self) -> Result<bool> {
        let n = self.group.order();
        for a in 0..n {
            for b in 0..n {
                let prod = self.values[a].mul(&self.values[b])?;
                if prod != self.values[self.group.op(a, b)] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let values: Result<Vec<_>> = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(LinearCharacter {
            group: self.group.clone(),
            values: values?,
        })
    }

    /// χ⁻¹, via χ⁻¹(g) = χ(g⁻¹).
    pub fn inverse(&self) -> Self {
        let values = (0..self.group.order())
            .map(|e| self.values[self.group.inv(e)].clone())
            .collect();
        LinearCharacter {
            group: self.group.clone(),
            values,
        }
    }

    /// Precompose with an index map g ↦ map[g] (e.g. a group automorphism).
    pub fn precompose(&self, map: &[usize]) -> Self {
        let values = (0..self.group.order())
            .map(|e| self.values[map[e]].clone())
            .collect();
        LinearCharacter {
            group: self.group.clone(),
            values,
        }
    }
}

impl PartialEq for LinearCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl ClassFunction for LinearCharacter {
    fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    fn value_at(&self, elem: usize) -> CyclotomicNumber {
        self.values[elem].clone()
    }
}

/// (1/|G|) Σ_g χ₁(g)·χ₂(g⁻¹). Rational for genuine characters; an error is
/// returned if the sum fails to be rational.
pub fn inner_product<A: ClassFunction, B: ClassFunction>(chi1: &A, chi2: &B) -> Result<Rational> {
    let g1 = chi1.group();
    if !Arc::ptr_eq(g1, chi2.group()) {
        return Err(Error::GroupMismatch);
    }
    let mut sum = CyclotomicNumber::zero(1);
    for e in 0..g1.order() {
        let term = chi1.value_at(e).mul(&chi2.value_at(g1.inv(e)))?;
        sum = sum.add(&term)?;
    }
    let scaled = sum.scale(&Rational::new(BigInt::from(1), BigInt::from(g1.order() as i64)));
    scaled
        .canonicalize()
        .as_rational()
        .ok_or_else(|| Error::NotRational(scaled.to_string()))
}

/// Parsed group section of a fixture file.
#[derive(Debug)]
pub struct GroupSection {
    pub points: usize,
    pub gen_perms: Vec<Perm>,
    /// 0-based indices into `gen_perms` named by the `subgroup:` line.
    pub subgroup_gens: Option<Vec<usize>>,
    /// Number of lines consumed, for follow-on sections.
    pub consumed: usize,
}

/// Parse the textual group fixture format:
///
/// ```text
/// points P
/// (1 2)(3 4)
/// (1 2 3)
///
/// subgroup: g1,g2
/// ```
pub fn parse_group_section(lines: &[&str]) -> Result<GroupSection> {
    let mut i = 0;
    while i < lines.len() && lines[i].trim().is_empty() {
        i += 1;
    }
    let header = lines
        .get(i)
        .ok_or_else(|| Error::parse(i + 1, "missing 'points P' header"))?;
    let points: usize = header
        .trim()
        .strip_prefix("points")
        .ok_or_else(|| Error::parse(i + 1, "expected 'points P'"))?
        .trim()
        .parse()
        .map_err(|_| Error::parse(i + 1, "bad point count"))?;
    if points == 0 || points > MAX_POINTS {
        return Err(Error::PointBound(points, MAX_POINTS));
    }
    i += 1;
    let mut gen_perms = Vec::new();
    while i < lines.len() {
        let line = lines[i].trim();
        if !line.starts_with('(') {
            break;
        }
        let perm = Perm::parse_cycles(line, points)
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        gen_perms.push(perm);
        i += 1;
    }
    if gen_perms.is_empty() {
        return Err(Error::parse(i + 1, "no generator lines"));
    }
    while i < lines.len() && lines[i].trim().is_empty() {
        i += 1;
    }
    let mut subgroup_gens = None;
    if i < lines.len() {
        if let Some(refs) = lines[i].trim().strip_prefix("subgroup:") {
            let parsed: Result<Vec<usize>> = refs
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    let idx: usize = t
                        .strip_prefix('g')
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| {
                            Error::parse(i + 1, format!("bad generator reference '{}'", t))
                        })?;
                    if idx == 0 || idx > gen_perms.len() {
                        return Err(Error::parse(
                            i + 1,
                            format!("generator reference g{} out of range", idx),
                        ));
                    }
                    Ok(idx - 1)
                })
                .collect();
            subgroup_gens = Some(parsed?);
            i += 1;
        }
    }
    Ok(GroupSection {
        points,
        gen_perms,
        subgroup_gens,
        consumed: i,
    })
}
