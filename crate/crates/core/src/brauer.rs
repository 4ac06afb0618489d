//! The Brauer complex: the `q^rank` sub-alcoves of the fundamental alcove
//! cut out by `W_{a,q}`, and the Frobenius fixed points they carry.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::affine::{AffineDatum, AffineMap, DiagramSymmetry};
use crate::error::{Error, Result};
use crate::linalg::{self, frac, int, Matrix, Rational, Vector};
use crate::rootdata::Family;

/// Default cap on the number of sub-alcoves enumerated.
pub const DEFAULT_MAX_SUBALCOVES: usize = 1_000_000;

/// `q` and the diagram symmetry `ρ` defining `F = q·F₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusConfig {
    q: u64,
    p: u64,
    rho: DiagramSymmetry,
}

/// `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut f) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

impl FrobeniusConfig {
    /// `rho` permutes `Δ̃` fixing `−α₀` and preserving the Dynkin diagram.
    pub fn new(aff: &AffineDatum, q: u64, rho: DiagramSymmetry) -> Result<Self> {
        let (p, _) = prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("q = {q} is not a prime power")))?;
        let n = aff.rank();
        if rho.as_slice().len() != n + 1
            || rho.apply(0) != 0
            || !rho.is_automorphism(aff.extended_cartan(), &aff.marks().by_node)
        {
            return Err(Error::InvalidInput(format!(
                "{:?} is not a symmetry of the {} diagram",
                rho.as_slice(),
                aff.datum().label()
            )));
        }
        Ok(Self { q, p, rho })
    }

    pub fn split(aff: &AffineDatum, q: u64) -> Result<Self> {
        Self::new(aff, q, DiagramSymmetry::identity(aff.rank() + 1))
    }

    /// The standard non-trivial symmetry: order 2 for `A_n (n ≥ 2)`, `D_n`
    /// and `E6`, or the order-3 triality of `D4`.
    pub fn twisted(aff: &AffineDatum, q: u64, triality: bool) -> Result<Self> {
        let label = aff.datum().label();
        let n = label.rank();
        let mut perm: Vec<usize> = (0..=n).collect();
        match (label.family(), n, triality) {
            (Family::D, 4, true) => {
                perm[1] = 3;
                perm[3] = 4;
                perm[4] = 1;
            }
            (_, _, true) => {
                return Err(Error::InvalidInput(format!("{label} has no triality")));
            }
            (Family::A, n, false) if n >= 2 => {
                for (i, slot) in perm.iter_mut().enumerate().skip(1) {
                    *slot = n + 1 - i;
                }
            }
            (Family::D, n, false) => perm.swap(n - 1, n),
            (Family::E, 6, false) => {
                perm.swap(1, 6);
                perm.swap(3, 5);
            }
            _ => {
                return Err(Error::InvalidInput(format!("{label} has no twisted form")));
            }
        }
        Self::new(aff, q, DiagramSymmetry::from_perm(perm)?)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rho(&self) -> &DiagramSymmetry {
        &self.rho
    }

    pub fn is_split(&self) -> bool {
        self.rho.is_identity()
    }

    /// `F₀`, sending `ω_α^∨` to `ω_{ρ⁻¹(α)}^∨`.
    pub fn f0(&self, v: &[Rational]) -> Vector {
        (1..=v.len())
            .map(|b| v[self.rho.apply(b) - 1].clone())
            .collect()
    }

    pub fn f0_inverse(&self, v: &[Rational]) -> Vector {
        let inv = self.rho.inverse();
        (1..=v.len()).map(|b| v[inv.apply(b) - 1].clone()).collect()
    }

    /// `F(λ) = q·F₀(λ)`.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        linalg::scale(&self.f0(v), &int(self.q as i64))
    }

    /// `F⁻¹ = (1/q)·F₀⁻¹` as an affine map on a space of dimension `n`.
    pub fn inverse_map(&self, n: usize) -> AffineMap {
        let inv = self.rho.inverse();
        let scale = frac(1, self.q as i64);
        let m = Matrix::from_fn(n, n, |r, c| {
            if c + 1 == inv.apply(r + 1) {
                scale.clone()
            } else {
                Rational::zero()
            }
        });
        AffineMap::linear(m)
    }
}

/// `ω(A_q)` for some `ω ∈ W_{a,q}` with `ω(A_q) ⊆` the fundamental alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubAlcove {
    map: AffineMap,
    /// `vertices[k] = ω(v_k)`, `v_k` the vertex of `A_q` opposite wall `k`.
    vertices: Vec<Vector>,
    key: Vector,
}

impl SubAlcove {
    pub fn map(&self) -> &AffineMap {
        &self.map
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    /// Barycenter, which identifies the sub-alcove.
    pub fn key(&self) -> &[Rational] {
        &self.key
    }

    pub fn sorted_vertices(&self) -> Vec<Vector> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }
}

/// The set `E_q`, sorted by key.
#[derive(Clone, Debug)]
pub struct BrauerComplex {
    q: u64,
    subalcoves: Vec<SubAlcove>,
    index: HashMap<Vector, usize>,
}

impl BrauerComplex {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.subalcoves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subalcoves.is_empty()
    }

    pub fn subalcoves(&self) -> &[SubAlcove] {
        &self.subalcoves
    }

    pub fn get(&self, i: usize) -> &SubAlcove {
        &self.subalcoves[i]
    }

    pub fn position_by_key(&self, key: &[Rational]) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// The sub-alcove with exactly this vertex set.
    pub fn position_by_vertices(&self, vertices: &[Vector]) -> Option<usize> {
        let key = barycenter(vertices);
        let i = self.position_by_key(&key)?;
        let mut want = vertices.to_vec();
        want.sort();
        (self.subalcoves[i].sorted_vertices() == want).then_some(i)
    }

    /// Index of `A_q` itself.
    pub fn base(&self) -> usize {
        self.subalcoves
            .iter()
            .position(|s| s.map.is_identity())
            .expect("A_q is always enumerated")
    }
}

fn barycenter(vertices: &[Vector]) -> Vector {
    let n = vertices[0].len();
    let sum = vertices
        .iter()
        .fold(linalg::zero_vec(n), |acc, v| linalg::add(&acc, v));
    linalg::scale(&sum, &frac(1, vertices.len() as i64))
}

/// `q^k`, or `None` on overflow.
pub fn checked_power(q: u64, k: usize) -> Option<u64> {
    q.checked_pow(u32::try_from(k).ok()?)
}

/// `ω ∘ s` for a simple affine reflection `s` of `W_{a,q}`. Each generator
/// is a rank-one update of the identity, so this costs `O(n²)`.
fn compose_with_reflection(aff: &AffineDatum, omega: &AffineMap, node: usize, q: u64) -> AffineMap {
    let n = aff.rank();
    let lin = omega.linear_part();
    // s(λ) = λ − ⟨β, λ⟩ c + t  with (β, c, t) the root, coroot and translation.
    let (beta, coroot, shift): (Vec<i64>, &[Rational], Option<Vector>) = if node == 0 {
        let c = aff.highest_coroot();
        (
            aff.marks().highest_root.clone(),
            c,
            Some(linalg::scale(c, &frac(1, q as i64))),
        )
    } else {
        let mut e = vec![0; n];
        e[node - 1] = 1;
        (e, aff.simple_coroot(node), None)
    };
    let lc = lin.mul_vec(coroot);
    let linear = Matrix::from_fn(n, n, |r, c| {
        if beta[c] == 0 {
            lin[(r, c)].clone()
        } else {
            &lin[(r, c)] - &lc[r] * int(beta[c])
        }
    });
    let translation = match shift {
        Some(t) => linalg::add(&lin.mul_vec(&t), omega.translation_part()),
        None => omega.translation_part().to_vec(),
    };
    AffineMap::new(linear, translation)
}

/// Vertices of `A_q = (1/q)·al`, indexed by the opposite wall.
fn small_alcove_vertices(aff: &AffineDatum, q: u64) -> Vec<Vector> {
    let s = frac(1, q as i64);
    (0..=aff.rank())
        .map(|k| linalg::scale(&aff.vertex(k), &s))
        .collect()
}

/// Enumerates `E_q` by breadth-first search from `A_q`, crossing each wall
/// of the current sub-alcove and keeping neighbours inside the closed
/// fundamental alcove. Exactly `q^rank` sub-alcoves must be found.
pub fn enumerate_subalcoves(
    aff: &AffineDatum,
    config: &FrobeniusConfig,
    max_subalcoves: usize,
) -> Result<BrauerComplex> {
    let q = config.q();
    let n = aff.rank();
    let expected = checked_power(q, n)
        .filter(|&e| e as usize <= max_subalcoves)
        .ok_or_else(|| {
            Error::Resource(format!(
                "{q}^{n} sub-alcoves exceeds the cap of {max_subalcoves}"
            ))
        })? as usize;

    let base_vertices = small_alcove_vertices(aff, q);
    let start = SubAlcove {
        map: AffineMap::identity(n),
        key: barycenter(&base_vertices),
        vertices: base_vertices.clone(),
    };
    let mut seen: HashSet<Vector> = HashSet::from([start.key.clone()]);
    let mut found = vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for wall in 0..=n {
            let current = &found[cur];
            let map = compose_with_reflection(aff, &current.map, wall, q);
            // The reflection fixes every vertex of A_q except the one opposite
            // the wall.
            let moved = map.apply(&base_vertices[wall]);
            if aff.affine_coords(&moved).iter().any(|x| x.is_negative()) {
                continue;
            }
            let mut vertices = current.vertices.clone();
            vertices[wall] = moved;
            let key = barycenter(&vertices);
            if seen.insert(key.clone()) {
                found.push(SubAlcove { map, vertices, key });
                queue.push_back(found.len() - 1);
                if found.len() > expected {
                    return Err(Error::Invariant(format!(
                        "more than {q}^{n} sub-alcoves in the alcove of {}",
                        aff.datum().label()
                    )));
                }
            }
        }
    }
    if found.len() != expected {
        return Err(Error::Invariant(format!(
            "found {} sub-alcoves for {} at q = {q}, expected {expected}",
            found.len(),
            aff.datum().label()
        )));
    }
    found.sort_by(|a, b| a.key.cmp(&b.key));
    let index = found
        .iter()
        .enumerate()
        .map(|(i, s)| (s.key.clone(), i))
        .collect();
    Ok(BrauerComplex {
        q,
        subalcoves: found,
        index,
    })
}

/// Unique fixed point of an affine map `g` with `‖linear(g)‖ < 1`.
fn unique_fixed_point(g: &AffineMap) -> Result<Vector> {
    let n = g.dim();
    let a = Matrix::identity(n).sub(g.linear_part());
    linalg::solve(&a, g.translation_part())
        .ok_or_else(|| Error::Invariant("contraction without a unique fixed point".to_string()))
}

/// `F⁻¹ ∘ f_α`, shared by every fixed-point computation for `α`.
fn frobenius_twist(aff: &AffineDatum, config: &FrobeniusConfig, alpha: usize) -> Result<AffineMap> {
    Ok(config.inverse_map(aff.rank()).compose(&aff.f_map(alpha)?))
}

/// `λ_{ω,α}`: the fixed point of `ω ∘ F⁻¹ ∘ f_α`.
pub fn fixed_point(
    aff: &AffineDatum,
    config: &FrobeniusConfig,
    sub: &SubAlcove,
    alpha: usize,
) -> Result<Vector> {
    let g = sub.map.compose(&frobenius_twist(aff, config, alpha)?);
    unique_fixed_point(&g)
}

/// `S_{q,α} = {λ_{ω,α} : ω ∈ E_q}`, one point per sub-alcove in complex order.
pub fn fixed_points(
    aff: &AffineDatum,
    config: &FrobeniusConfig,
    complex: &BrauerComplex,
    alpha: usize,
) -> Result<Vec<Vector>> {
    let twist = frobenius_twist(aff, config, alpha)?;
    complex
        .subalcoves
        .par_iter()
        .map(|sub| unique_fixed_point(&sub.map.compose(&twist)))
        .collect()
}

/// Whether `f` maps the sub-alcove onto itself (as a vertex set).
fn stabilizes(f: &AffineMap, sub: &SubAlcove) -> bool {
    let mut image: Vec<Vector> = sub.vertices.iter().map(|v| f.apply(v)).collect();
    image.sort();
    image == sub.sorted_vertices()
}

/// `M_{α,q}`: indices of the sub-alcoves stabilized by `f_α`. Its size must be
/// `q^{dim V_α}`, or zero when `V_α` lies in a hyperplane of `W_{a,q}`.
pub fn m_alpha(aff: &AffineDatum, complex: &BrauerComplex, alpha: usize) -> Result<Vec<usize>> {
    let f = aff.f_map(alpha)?;
    let found: Vec<usize> = complex
        .subalcoves
        .par_iter()
        .enumerate()
        .filter(|(_, s)| stabilizes(&f, s))
        .map(|(i, _)| i)
        .collect();
    let q = complex.q();
    let expected = match aff.hyperplane_containment(alpha, q)? {
        Some(_) => 0,
        None => checked_power(q, aff.invariant_space(alpha)?.dim())
            .expect("bounded by the complex size") as usize,
    };
    if found.len() != expected {
        return Err(Error::Invariant(format!(
            "|M_{{{alpha},{q}}}| = {} for {}, expected {expected}",
            found.len(),
            aff.datum().label()
        )));
    }
    Ok(found)
}

/// `f_{β,q} = z_{ρ(β)} + (1/q)·ω_{ρ(β)}^∨`.
pub fn f_map_q(aff: &AffineDatum, config: &FrobeniusConfig, beta: usize) -> Result<AffineMap> {
    let rb = config.rho().apply(beta);
    let (z, _) = aff.z_element(rb)?;
    let t = linalg::scale(&aff.coweight(rb), &frac(1, config.q() as i64));
    Ok(AffineMap::new(z.linear_part().clone(), t))
}

/// The element `r_α ∈ W_{a,q}` with `r_α(A_q) = f_α(A_q)`, as an index into the complex.
pub fn r_alpha(aff: &AffineDatum, complex: &BrauerComplex, alpha: usize) -> Result<usize> {
    let f = aff.f_map(alpha)?;
    let base = complex.get(complex.base());
    let image: Vec<Vector> = base.vertices.iter().map(|v| f.apply(v)).collect();
    complex
        .position_by_vertices(&image)
        .ok_or_else(|| Error::Invariant(format!("f_{alpha}(A_q) is not a sub-alcove")))
}

/// `m(α)`: the minuscule node with `f_{m(α),q} = r_α⁻¹ f_α`.
///
/// Also checks that `ω_α^∨` is a Frobenius fixed point `λ_{ω}` exactly when
/// `m(α) = α`.
pub fn m_of(
    aff: &AffineDatum,
    config: &FrobeniusConfig,
    complex: &BrauerComplex,
    alpha: usize,
) -> Result<usize> {
    let f = aff.f_map(alpha)?;
    let r_index = r_alpha(aff, complex, alpha)?;
    let r = complex.get(r_index);
    let g = r
        .map
        .inverse()
        .ok_or_else(|| Error::Invariant("singular affine Weyl element".to_string()))?
        .compose(&f);
    let mut image = None;
    for &beta in aff.fundamental_group().elements() {
        if f_map_q(aff, config, beta)? == g {
            image = Some(beta);
            break;
        }
    }
    let image = image
        .ok_or_else(|| Error::Invariant(format!("r_{alpha}⁻¹ f_{alpha} matches no f_(β,q)")))?;

    // r_α(A_q) is the only sub-alcove at the corner ω_α^∨, so that corner is
    // in S_q iff it is the fixed point of r_α F⁻¹.
    let corner_fixed = fixed_point(aff, config, r, 0)? == aff.coweight(alpha);
    if corner_fixed != (image == alpha) {
        return Err(Error::Invariant(format!(
            "m({alpha}) = {image} but ω^∨_{alpha} ∈ S_q is {corner_fixed}"
        )));
    }
    Ok(image)
}

/// Orbits of `Γ_G` on `Θ_q` restricted to one `V_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaStratum {
    pub node: usize,
    /// `dim V_α`.
    pub dim: usize,
    /// `|⟨z_α⟩`-orbits on `Δ̃| − 1`, equal to `dim` by construction.
    pub orbit_dim: usize,
    /// Number of `Γ_G`-orbits of `Θ_q` inside `V_α`.
    pub orbits: usize,
    /// Distinct points of `S_{q,α}`.
    pub s_size: usize,
    /// Whether `q^dim` orbits are guaranteed for this stratum.
    pub enforced: bool,
}

/// `Θ_q` with its `Γ_G`-orbit decomposition.
#[derive(Clone, Debug)]
pub struct Theta {
    /// Distinct points of `⊔_α S_{q,α}`, sorted.
    pub points: Vec<Vector>,
    /// Orbits as sorted index lists into `points`, sorted by first element.
    pub orbits: Vec<Vec<usize>>,
    pub strata: Vec<ThetaStratum>,
    /// Whether every `f_z` maps `Θ_q` into itself.
    pub closed: bool,
    /// `q ≡ 1 mod |A_G|` for split `F`, `q ≡ −1 mod |A_G|` otherwise.
    pub hypotheses: bool,
}

/// Whether `Γ_G`-orbits of `Θ_q` are guaranteed to be the `F`-stable classes.
pub fn theta_hypotheses(aff: &AffineDatum, config: &FrobeniusConfig, subgroup: &[usize]) -> bool {
    let order = subgroup.len() as u64;
    let q = config.q();
    if config.is_split() {
        q % order == 1 % order
    } else {
        let label = aff.datum().label();
        let d_even = label.family() == Family::D && label.rank().is_multiple_of(2);
        !d_even && (q + 1).is_multiple_of(order)
    }
}

/// Whether `A_G` is cyclic and the type is not `D_{2n}`.
fn cyclic_outside_d_even(aff: &AffineDatum, subgroup: &[usize]) -> bool {
    let label = aff.datum().label();
    let d_even = label.family() == Family::D && label.rank().is_multiple_of(2);
    let group = aff.fundamental_group();
    let cyclic = subgroup
        .iter()
        .any(|&z| group.element_order(z) == subgroup.len());
    cyclic && !d_even
}

/// Computes `Θ_q = ⊔_{α ∈ Δ̃_min,G} S_{q,α}` and its `Γ_G`-orbits.
///
/// The orbit count `q^rank` is enforced only under [`theta_hypotheses`], and
/// the stratum sizes `q^{dim V_α}` only when additionally `A_G` is cyclic and
/// the type is not `D_{2n}`.
pub fn theta(
    aff: &AffineDatum,
    config: &FrobeniusConfig,
    complex: &BrauerComplex,
    subgroup: &[usize],
) -> Result<Theta> {
    let group = aff.fundamental_group();
    if !group.is_subgroup(subgroup) {
        return Err(Error::InvalidInput(format!(
            "{subgroup:?} is not a subgroup"
        )));
    }
    let mut all: Vec<Vector> = Vec::new();
    let mut per_node: Vec<(usize, HashSet<Vector>)> = Vec::new();
    for &alpha in subgroup {
        let pts = fixed_points(aff, config, complex, alpha)?;
        per_node.push((alpha, pts.iter().cloned().collect()));
        all.extend(pts);
    }
    all.sort();
    all.dedup();
    let index: HashMap<&Vector, usize> = all.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let maps: Vec<AffineMap> = subgroup
        .iter()
        .map(|&z| aff.f_map(z))
        .collect::<Result<_>>()?;
    let mut closed = true;
    let mut orbit_of = vec![usize::MAX; all.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..all.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for f in &maps {
            match index.get(&f.apply(&all[i])) {
                Some(&j) => members.push(j),
                None => closed = false,
            }
        }
        members.sort_unstable();
        members.dedup();
        let id = orbits.len();
        for &j in &members {
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = id;
            }
        }
        orbits.push(members);
    }

    let hypotheses = theta_hypotheses(aff, config, subgroup);
    let q = config.q();
    let n = aff.rank();
    if hypotheses {
        let expected = checked_power(q, n).expect("bounded by the complex size") as usize;
        if !closed || orbits.len() != expected {
            return Err(Error::Invariant(format!(
                "Θ_q has {} Γ_G-orbits (closed: {closed}) for {}, expected {expected}",
                orbits.len(),
                aff.datum().label()
            )));
        }
    }

    let enforce_strata = hypotheses && cyclic_outside_d_even(aff, subgroup);
    let mut strata = Vec::new();
    for (alpha, s_points) in &per_node {
        let space = aff.invariant_space(*alpha)?;
        let fixed_orbits = orbits.iter().filter(|o| space.contains(&all[o[0]])).count();
        let dim = space.dim();
        let stratum = ThetaStratum {
            node: *alpha,
            dim,
            orbit_dim: aff.orbit_count(*alpha)? - 1,
            orbits: fixed_orbits,
            s_size: s_points.len(),
            enforced: enforce_strata,
        };
        if enforce_strata {
            let expected = checked_power(q, dim).expect("bounded") as usize;
            if fixed_orbits != expected {
                return Err(Error::Invariant(format!(
                    "|Θ_(q,{alpha})| = {fixed_orbits}, expected {q}^{dim}"
                )));
            }
        }
        strata.push(stratum);
    }

    Ok(Theta {
        points: all,
        orbits,
        strata,
        closed,
        hypotheses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(label: &str, q: u64, twisted: bool) -> (AffineDatum, FrobeniusConfig, BrauerComplex) {
        let aff = AffineDatum::from_label(label).unwrap();
        let config = if twisted {
            FrobeniusConfig::twisted(&aff, q, false).unwrap()
        } else {
            FrobeniusConfig::split(&aff, q).unwrap()
        };
        let complex = enumerate_subalcoves(&aff, &config, DEFAULT_MAX_SUBALCOVES).unwrap();
        (aff, config, complex)
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn frobenius_rejects_bad_input() {
        let aff = AffineDatum::from_label("B3").unwrap();
        assert!(FrobeniusConfig::split(&aff, 12).is_err());
        assert!(FrobeniusConfig::twisted(&aff, 3, false).is_err());
        let a1 = AffineDatum::from_label("A1").unwrap();
        assert!(FrobeniusConfig::twisted(&a1, 3, false).is_err());
        let d5 = AffineDatum::from_label("D5").unwrap();
        assert!(FrobeniusConfig::twisted(&d5, 3, true).is_err());
        let d4 = AffineDatum::from_label("D4").unwrap();
        assert_eq!(
            FrobeniusConfig::twisted(&d4, 3, true)
                .unwrap()
                .rho()
                .order(),
            3
        );
    }

    #[test]
    fn a1_q3_subalcoves_are_thirds() {
        let (_, _, complex) = setup("A1", 3, false);
        let intervals: Vec<Vec<Vector>> = complex
            .subalcoves()
            .iter()
            .map(|s| s.sorted_vertices())
            .collect();
        assert_eq!(
            intervals,
            vec![
                vec![vec![frac(0, 1)], vec![frac(1, 3)]],
                vec![vec![frac(1, 3)], vec![frac(2, 3)]],
                vec![vec![frac(2, 3)], vec![frac(1, 1)]],
            ]
        );
    }

    #[test]
    fn subalcove_counts() {
        assert_eq!(setup("A2", 2, false).2.len(), 4);
        assert_eq!(setup("G2", 3, false).2.len(), 9);
    }

    #[test]
    fn cap_is_enforced() {
        let aff = AffineDatum::from_label("E8").unwrap();
        let config = FrobeniusConfig::split(&aff, 3).unwrap();
        assert!(matches!(
            enumerate_subalcoves(&aff, &config, 1000),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn a1_q3_fixed_points() {
        let (aff, config, complex) = setup("A1", 3, false);
        let base = complex.get(complex.base());
        assert_eq!(
            fixed_point(&aff, &config, base, 0).unwrap(),
            vec![frac(0, 1)]
        );
        assert_eq!(
            fixed_point(&aff, &config, complex.get(1), 0).unwrap(),
            vec![frac(1, 2)]
        );
        assert_eq!(
            fixed_point(&aff, &config, complex.get(2), 0).unwrap(),
            vec![frac(1, 1)]
        );
        let s1 = fixed_points(&aff, &config, &complex, 1).unwrap();
        assert_eq!(
            s1,
            vec![vec![frac(1, 4)], vec![frac(1, 2)], vec![frac(3, 4)]]
        );
    }

    #[test]
    fn m_alpha_examples() {
        let (aff, _, complex) = setup("A2", 3, false);
        assert_eq!(m_alpha(&aff, &complex, 0).unwrap().len(), 9);
        assert!(m_alpha(&aff, &complex, 1).unwrap().is_empty());
        let (aff, _, complex) = setup("B3", 5, false);
        assert_eq!(m_alpha(&aff, &complex, 1).unwrap().len(), 25);
    }

    #[test]
    fn m_of_examples() {
        let (aff, config, complex) = setup("A1", 3, false);
        assert_eq!(m_of(&aff, &config, &complex, 0).unwrap(), 0);
        assert_eq!(m_of(&aff, &config, &complex, 1).unwrap(), 1);
        // q = 2 is not 1 mod 3, so the corner ω₁^∨ is not in S_q and m moves α₁.
        let (aff, config, complex) = setup("A2", 2, false);
        let m1 = m_of(&aff, &config, &complex, 1).unwrap();
        let s_q = fixed_points(&aff, &config, &complex, 0).unwrap();
        assert_eq!(s_q.contains(&aff.coweight(1)), m1 == 1);
        assert_ne!(m1, 1);
    }

    #[test]
    fn frobenius_conjugates_f_alpha_to_f_alpha_q() {
        for (label, twisted) in [("E6", true), ("A3", true), ("D5", false), ("D4", true)] {
            let aff = AffineDatum::from_label(label).unwrap();
            let config = if twisted {
                FrobeniusConfig::twisted(&aff, 5, false).unwrap()
            } else {
                FrobeniusConfig::split(&aff, 5).unwrap()
            };
            let n = aff.rank();
            let finv = config.inverse_map(n);
            let f = finv.inverse().unwrap();
            for &a in aff.fundamental_group().elements() {
                let lhs = finv.compose(&aff.f_map(a).unwrap()).compose(&f);
                assert_eq!(lhs, f_map_q(&aff, &config, a).unwrap(), "{label} node {a}");
            }
        }
    }

    #[test]
    fn theta_examples() {
        let (aff, config, complex) = setup("A1", 3, false);
        let t = theta(&aff, &config, &complex, &[0]).unwrap();
        assert_eq!(t.orbits.len(), 3);
        assert!(t.orbits.iter().all(|o| o.len() == 1));

        let t = theta(&aff, &config, &complex, &[0, 1]).unwrap();
        assert!(t.hypotheses);
        assert_eq!(t.points.len(), 5);
        assert_eq!(t.orbits.len(), 3);

        let (aff, config, complex) = setup("A2", 7, false);
        let t = theta(&aff, &config, &complex, &[0, 1, 2]).unwrap();
        assert_eq!(t.orbits.len(), 49);
    }
}
