//! Extended Dynkin diagram, alcove geometry and the fundamental group.
//!
//! Nodes of the extended diagram `Δ̃` are numbered `0..=rank`: node `0` is
//! `−α₀` and node `i ≥ 1` is the simple root `α_i`. Affine coordinates of a
//! point are indexed the same way, `λ_{α_i} = n_i·⟨α_i, λ⟩` and
//! `λ_{−α₀} = 1 − ⟨α₀, λ⟩`, so they always sum to one and the closed
//! fundamental alcove is the set where all of them are nonnegative.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, dot_int, frac, int, Matrix, Rational, Vector};
use crate::rootdata::{Root, RootDatum};

/// Fold iterations allowed before giving up. Folding always terminates; the
/// cap turns a logic error into a diagnosable failure.
const FOLD_ITERATION_CAP: usize = 1_000_000;

/// Affine transformation `λ ↦ Lλ + t` of `V` in coweight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    linear: Matrix,
    translation: Vector,
}

impl AffineMap {
    pub fn new(linear: Matrix, translation: Vector) -> Self {
        assert_eq!(linear.rows(), linear.cols());
        assert_eq!(linear.rows(), translation.len());
        Self {
            linear,
            translation,
        }
    }

    pub fn linear(linear: Matrix) -> Self {
        let n = linear.rows();
        Self::new(linear, linalg::zero_vec(n))
    }

    pub fn translation(t: Vector) -> Self {
        Self::new(Matrix::identity(t.len()), t)
    }

    pub fn identity(n: usize) -> Self {
        Self::linear(Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn linear_part(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation_part(&self) -> &[Rational] {
        &self.translation
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        linalg::add(&self.linear.mul_vec(v), &self.translation)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            linear: self.linear.mul(&inner.linear),
            translation: self.apply(&inner.translation),
        }
    }

    pub fn inverse(&self) -> Option<AffineMap> {
        let inv = self.linear.inverse()?;
        let t = inv.mul_vec(&self.translation);
        Some(AffineMap {
            linear: inv,
            translation: t.into_iter().map(|x| -x).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(Zero::is_zero)
    }
}

/// A point of `V` with its affine coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffinePoint {
    coords: Vector,
    affine: Vector,
}

impl AffinePoint {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn affine_coords(&self) -> &[Rational] {
        &self.affine
    }

    pub fn in_alcove(&self) -> bool {
        self.affine.iter().all(|x| !x.is_negative())
    }

    /// Nodes whose affine coordinate vanishes.
    pub fn zero_nodes(&self) -> Vec<usize> {
        (0..self.affine.len())
            .filter(|&i| self.affine[i].is_zero())
            .collect()
    }

    /// The node `β` if this point is the alcove vertex with `λ_β = 1`.
    pub fn vertex_node(&self) -> Option<usize> {
        let mut ones = self.affine.iter().enumerate().filter(|(_, x)| !x.is_zero());
        match (ones.next(), ones.next()) {
            (Some((i, x)), None) if x.is_one() => Some(i),
            _ => None,
        }
    }
}

/// Permutation of the nodes of `Δ̃`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagramSymmetry {
    perm: Vec<usize>,
}

impl DiagramSymmetry {
    pub fn identity(nodes: usize) -> Self {
        Self {
            perm: (0..nodes).collect(),
        }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidInput(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(Self { perm })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, node: usize) -> usize {
        self.perm[node]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        Self { perm: inv }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &DiagramSymmetry) -> Self {
        Self {
            perm: inner.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.perm[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.perm[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Whether the permutation preserves the given (extended) Cartan matrix
    /// and marks.
    pub fn is_automorphism(&self, cartan: &[Vec<i64>], marks: &[i64]) -> bool {
        let n = self.perm.len();
        cartan.len() == n
            && (0..n).all(|i| {
                marks[self.perm[i]] == marks[i]
                    && (0..n).all(|j| cartan[self.perm[i]][self.perm[j]] == cartan[i][j])
            })
    }
}

/// Marks `n_α` over `Δ̃` (with `n_{−α₀} = 1`) and the highest root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marks {
    pub highest_root: Vec<i64>,
    pub by_node: Vec<i64>,
}

impl Marks {
    pub fn minuscule_nodes(&self) -> Vec<usize> {
        (0..self.by_node.len())
            .filter(|&i| self.by_node[i] == 1)
            .collect()
    }
}

/// The group `𝒜` of diagram automorphisms `z_α = w_α w₀`, indexed by
/// minuscule nodes, node `0` being the identity.
#[derive(Clone, Debug)]
pub struct FundamentalGroup {
    elements: Vec<usize>,
    linear: Vec<AffineMap>,
    perms: Vec<DiagramSymmetry>,
    /// `table[i][j]` is the node of `z_{elements[i]} z_{elements[j]}`.
    table: Vec<Vec<usize>>,
}

impl FundamentalGroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.elements.contains(&node)
    }

    fn index(&self, node: usize) -> usize {
        self.elements
            .iter()
            .position(|&e| e == node)
            .unwrap_or_else(|| panic!("node {node} is not minuscule"))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[self.index(a)][self.index(b)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        *self
            .elements
            .iter()
            .find(|&&b| self.mul(a, b) == 0)
            .expect("group element without inverse")
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut r = 0;
        for _ in 0..k % self.element_order(a) as u64 {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.perm(a).order()
    }

    pub fn perm(&self, a: usize) -> &DiagramSymmetry {
        &self.perms[self.index(a)]
    }

    pub fn linear(&self, a: usize) -> &AffineMap {
        &self.linear[self.index(a)]
    }

    /// Smallest subgroup containing `generators`, as a sorted node list.
    pub fn generated(&self, generators: &[usize]) -> Result<Vec<usize>> {
        if let Some(&bad) = generators.iter().find(|&&g| !self.contains(g)) {
            return Err(Error::InvalidInput(format!("node {bad} is not minuscule")));
        }
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        loop {
            let before = set.len();
            let current: Vec<usize> = set.iter().copied().collect();
            for &a in &current {
                for &g in generators {
                    set.insert(self.mul(a, g));
                }
            }
            if set.len() == before {
                return Ok(set.into_iter().collect());
            }
        }
    }

    /// Whether `nodes` is closed under multiplication and contains the identity.
    pub fn is_subgroup(&self, nodes: &[usize]) -> bool {
        nodes.contains(&0)
            && nodes.iter().all(|&a| self.contains(a))
            && nodes
                .iter()
                .all(|&a| nodes.iter().all(|&b| nodes.contains(&self.mul(a, b))))
    }
}

/// Sub-space of `V` fixed by some `f_α`, given as a base point and a
/// direction basis in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpace {
    pub base: Vector,
    pub directions: Vec<Vector>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let diff = linalg::sub(v, &self.base);
        if diff.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.directions.clone();
        rows.push(diff);
        linalg::rref_rows(&rows).len() == self.directions.len()
    }
}

/// A hyperplane `{⟨β, ·⟩ = k/q}` of the `W_{a,q}` arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub root: Vec<i64>,
    pub level: i64,
    pub q: u64,
}

/// Root datum together with its extended-diagram data.
#[derive(Clone, Debug)]
pub struct AffineDatum {
    datum: RootDatum,
    marks: Marks,
    ext_cartan: Vec<Vec<i64>>,
    highest_coroot: Vector,
    simple_coroots: Vec<Vector>,
    group: FundamentalGroup,
}

impl AffineDatum {
    pub fn new(datum: RootDatum) -> Result<Self> {
        let n = datum.rank();
        let marks = marks(&datum);
        let ext_cartan = datum.extended_cartan();
        let highest_coroot: Vector = datum
            .coroot_coords(datum.highest_root())
            .into_iter()
            .map(int)
            .collect();
        let simple_coroots = (1..=n)
            .map(|j| datum.simple_coroot_coords(j).into_iter().map(int).collect())
            .collect();
        let group = build_fundamental_group(&datum, &marks, &ext_cartan)?;
        Ok(Self {
            datum,
            marks,
            ext_cartan,
            highest_coroot,
            simple_coroots,
            group,
        })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(RootDatum::build(label.parse()?)?)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn marks(&self) -> &Marks {
        &self.marks
    }

    pub fn extended_cartan(&self) -> &[Vec<i64>] {
        &self.ext_cartan
    }

    pub fn fundamental_group(&self) -> &FundamentalGroup {
        &self.group
    }

    /// Coweight coordinates of `α₀^∨`.
    pub fn highest_coroot(&self) -> &[Rational] {
        &self.highest_coroot
    }

    /// `α_j^∨` in coweight coordinates, `j` 1-based.
    pub fn simple_coroot(&self, j: usize) -> &[Rational] {
        &self.simple_coroots[j - 1]
    }

    /// Root coefficients of the node `β ∈ Δ̃` (node 0 is `−α₀`).
    pub fn node_root(&self, node: usize) -> Vec<i64> {
        if node == 0 {
            self.marks.highest_root.iter().map(|c| -c).collect()
        } else {
            let mut e = vec![0; self.rank()];
            e[node - 1] = 1;
            e
        }
    }

    pub fn affine_coords(&self, coords: &[Rational]) -> Vector {
        let n = self.rank();
        let mut a = Vec::with_capacity(n + 1);
        a.push(Rational::one() - dot_int(&self.marks.highest_root, coords));
        for i in 0..n {
            a.push(&coords[i] * int(self.marks.by_node[i + 1]));
        }
        a
    }

    pub fn point(&self, coords: Vector) -> AffinePoint {
        assert_eq!(coords.len(), self.rank(), "point of the wrong dimension");
        let affine = self.affine_coords(&coords);
        AffinePoint { coords, affine }
    }

    /// Point with the given affine coordinates. Errors unless they sum to one.
    pub fn point_from_affine(&self, affine: &[Rational]) -> Result<AffinePoint> {
        let n = self.rank();
        if affine.len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} affine coordinates, got {}",
                n + 1,
                affine.len()
            )));
        }
        let total: Rational = affine.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidInput(format!(
                "affine coordinates sum to {total}, not 1"
            )));
        }
        let coords = (1..=n)
            .map(|i| &affine[i] / int(self.marks.by_node[i]))
            .collect();
        Ok(self.point(coords))
    }

    /// Vertex of the fundamental alcove opposite the wall of `node`:
    /// `ω_β^∨ / n_β`, and the origin for `−α₀`.
    pub fn vertex(&self, node: usize) -> Vector {
        let n = self.rank();
        let mut v = linalg::zero_vec(n);
        if node > 0 {
            v[node - 1] = frac(1, self.marks.by_node[node]);
        }
        v
    }

    /// `ω_β^∨` for a minuscule node (zero for `−α₀`).
    pub fn coweight(&self, node: usize) -> Vector {
        let n = self.rank();
        if node == 0 {
            linalg::zero_vec(n)
        } else {
            linalg::unit_vec(n, node - 1)
        }
    }

    pub fn is_minuscule(&self, node: usize) -> bool {
        self.group.contains(node)
    }

    fn require_minuscule(&self, node: usize) -> Result<()> {
        if self.is_minuscule(node) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "node {node} is not a minuscule node of {}",
                self.datum.label()
            )))
        }
    }

    /// `z_α = w_α w₀` and the permutation it induces on `Δ̃`.
    pub fn z_element(&self, node: usize) -> Result<(AffineMap, DiagramSymmetry)> {
        self.require_minuscule(node)?;
        Ok((
            self.group.linear(node).clone(),
            self.group.perm(node).clone(),
        ))
    }

    /// `f_α = z_α + ω_α^∨`, the element of the alcove stabilizer attached to `α`.
    pub fn f_map(&self, node: usize) -> Result<AffineMap> {
        self.require_minuscule(node)?;
        let f = AffineMap::new(
            self.group.linear(node).linear_part().clone(),
            self.coweight(node),
        );
        #[cfg(debug_assertions)]
        {
            let perm = self.group.perm(node);
            for v in 0..=self.rank() {
                let image = self.affine_coords(&f.apply(&self.vertex(v)));
                let expected = self.affine_coords(&self.vertex(perm.apply(v)));
                debug_assert_eq!(image, expected, "f_{node} does not permute alcove vertices");
            }
        }
        Ok(f)
    }

    /// Simple affine reflection of `W_{a,q}` for a node of `Δ̃`: `s_i` for
    /// `i ≥ 1` and `s_{α₀,1/q}` for node 0. `q = 1` gives the generators of `W_a`.
    pub fn affine_reflection(&self, node: usize, q: u64) -> AffineMap {
        let n = self.rank();
        if node > 0 {
            return self.datum.simple_reflection(node).expect("node in range");
        }
        let top = &self.marks.highest_root;
        let linear = Matrix::from_fn(n, n, |r, c| {
            let delta = if r == c { int(1) } else { int(0) };
            delta - &self.highest_coroot[r] * int(top[c])
        });
        let level = frac(1, q as i64);
        AffineMap::new(linear, linalg::scale(&self.highest_coroot, &level))
    }

    /// Moves `λ` into the closed fundamental alcove by repeatedly reflecting
    /// in the first wall (in node order) whose affine coordinate is negative.
    /// Returns the folded point and the nodes of the reflections applied, in
    /// order.
    pub fn fold_to_alcove(&self, lambda: &[Rational]) -> Result<(AffinePoint, Vec<usize>)> {
        // Work with d·⟨β_k, λ⟩ (and d·(1 − ⟨α₀, λ⟩) for node 0), which the
        // reflection in node k changes by −c_k·⟨β_j, β_k^∨⟩.
        let n = self.rank();
        let d = linalg::common_denominator(lambda);
        let scaled = |x: &Rational| (x * Rational::from_integer(d.clone())).to_integer();
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        c.push(scaled(
            &(Rational::one() - dot_int(&self.marks.highest_root, lambda)),
        ));
        c.extend(lambda.iter().map(scaled));
        let mut word = Vec::new();
        for _ in 0..FOLD_ITERATION_CAP {
            match c.iter().position(|x| x.is_negative()) {
                None => {
                    let coords = c[1..]
                        .iter()
                        .map(|x| Rational::new(x.clone(), d.clone()))
                        .collect();
                    return Ok((self.point(coords), word));
                }
                Some(k) => {
                    let ck = c[k].clone();
                    for (j, x) in c.iter_mut().enumerate() {
                        let e = self.ext_cartan[j][k];
                        if e != 0 {
                            *x -= &ck * BigInt::from(e);
                        }
                    }
                    word.push(k);
                }
            }
        }
        Err(Error::Invariant(format!(
            "folding did not terminate after {FOLD_ITERATION_CAP} reflections"
        )))
    }

    /// The element of `W_a` spelled by a fold word (first letter applied first).
    pub fn word_map(&self, word: &[usize]) -> AffineMap {
        word.iter()
            .fold(AffineMap::identity(self.rank()), |acc, &node| {
                self.affine_reflection(node, 1).compose(&acc)
            })
    }

    /// Number of `⟨z_α⟩`-orbits on `Δ̃`.
    pub fn orbit_count(&self, node: usize) -> Result<usize> {
        self.require_minuscule(node)?;
        Ok(self.group.perm(node).cycles().len())
    }

    /// `V_α = {v : f_α(v) = v}` by an exact kernel solve. Its dimension is
    /// checked against the number of `⟨z_α⟩`-orbits on `Δ̃` minus one.
    pub fn invariant_space(&self, node: usize) -> Result<InvariantSpace> {
        let f = self.f_map(node)?;
        let n = self.rank();
        let a = f.linear_part().sub(&Matrix::identity(n));
        let b: Vector = f.translation_part().iter().map(|x| -x).collect();
        let (base, directions) = linalg::affine_solution_space(&a, &b).ok_or_else(|| {
            Error::Invariant(format!(
                "f_{node} has no fixed point on {}",
                self.datum.label()
            ))
        })?;
        let space = InvariantSpace { base, directions };
        let expected = self.orbit_count(node)? - 1;
        if space.dim() != expected {
            return Err(Error::Invariant(format!(
                "dim V_{node} = {} but z_{node} has {} orbits on the extended diagram",
                space.dim(),
                expected + 1
            )));
        }
        Ok(space)
    }

    /// A hyperplane of the `W_{a,q}` arrangement containing `V_α`, if any.
    /// Walls of the fundamental alcove are never returned.
    pub fn hyperplane_containment(&self, node: usize, q: u64) -> Result<Option<Hyperplane>> {
        if q < 2 {
            return Err(Error::InvalidInput(format!(
                "q must be at least 2, got {q}"
            )));
        }
        let space = self.invariant_space(node)?;
        Ok(self.datum.positive_roots().iter().find_map(|root| {
            self.containing_level(root, &space, q)
                .map(|level| Hyperplane {
                    root: root.coeffs.clone(),
                    level,
                    q,
                })
        }))
    }

    fn containing_level(&self, root: &Root, space: &InvariantSpace, q: u64) -> Option<i64> {
        if space
            .directions
            .iter()
            .any(|d| !dot_int(&root.coeffs, d).is_zero())
        {
            return None;
        }
        let value = dot_int(&root.coeffs, &space.base) * int(q as i64);
        if !value.is_integer() {
            return None;
        }
        let level = i64::try_from(value.to_integer()).ok()?;
        let simple = root.height() == 1;
        let top = root.coeffs == self.marks.highest_root;
        let is_wall = (simple && level == 0) || (top && level == q as i64);
        (!is_wall).then_some(level)
    }
}

/// Marks of `Δ̃`: coefficients of the highest root, with `n_{−α₀} = 1` prepended.
pub fn marks(datum: &RootDatum) -> Marks {
    let highest_root = datum.highest_root().coeffs.clone();
    let mut by_node = vec![1];
    by_node.extend(highest_root.iter().copied());
    Marks {
        highest_root,
        by_node,
    }
}

fn build_fundamental_group(
    datum: &RootDatum,
    marks: &Marks,
    ext_cartan: &[Vec<i64>],
) -> Result<FundamentalGroup> {
    let n = datum.rank();
    let elements = marks.minuscule_nodes();
    let all: Vec<usize> = (1..=n).collect();
    let w0 = datum.longest_element(&all)?;
    let node_roots: Vec<Vec<i64>> = (0..=n)
        .map(|node| {
            if node == 0 {
                marks.highest_root.iter().map(|c| -c).collect()
            } else {
                let mut e = vec![0; n];
                e[node - 1] = 1;
                e
            }
        })
        .collect();

    let mut linear = Vec::new();
    let mut perms = Vec::new();
    for &alpha in &elements {
        let z = if alpha == 0 {
            AffineMap::identity(n)
        } else {
            let rest: Vec<usize> = all.iter().copied().filter(|&j| j != alpha).collect();
            datum.longest_element(&rest)?.compose(&w0)
        };
        let perm = node_roots
            .iter()
            .map(|root| {
                let image = datum.act_on_root(z.linear_part(), root);
                image
                    .and_then(|img| node_roots.iter().position(|r| *r == img))
                    .ok_or_else(|| {
                        Error::Invariant(format!(
                            "z_{alpha} does not permute the extended diagram of {}",
                            datum.label()
                        ))
                    })
            })
            .collect::<Result<Vec<usize>>>()?;
        let perm = DiagramSymmetry::from_perm(perm)?;
        if !perm.is_automorphism(ext_cartan, &marks.by_node) {
            return Err(Error::Invariant(format!(
                "z_{alpha} is not a diagram automorphism of {}",
                datum.label()
            )));
        }
        linear.push(z);
        perms.push(perm);
    }

    let table = linear
        .iter()
        .map(|a| {
            linear
                .iter()
                .map(|b| {
                    let ab = a.compose(b);
                    linear
                        .iter()
                        .position(|c| *c == ab)
                        .map(|k| elements[k])
                        .ok_or_else(|| Error::Invariant("fundamental group not closed".to_string()))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(FundamentalGroup {
        elements,
        linear,
        perms,
        table,
    })
}
