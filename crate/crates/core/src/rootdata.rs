//! Irreducible root systems in Bourbaki's labelling.
//!
//! Points of `V` are stored in the basis of fundamental coweights, so the
//! pairing of a simple root `α_i` with a point `λ` is the coordinate `λ_i`
//! and a root `β = Σ c_j α_j` pairs to `Σ c_j λ_j`. Simple coroot `α_j^∨`
//! has coordinates given by column `j` of the Cartan matrix
//! `A_ij = ⟨α_i, α_j^∨⟩`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::AffineMap;
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Cartan type of an irreducible reduced root system, e.g. `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True when both labels name the same abstract root system, which
    /// identifies `B2 = C2` and `A3 = D3`.
    pub fn isomorphic(&self, other: &TypeLabel) -> bool {
        let canon = |t: &TypeLabel| match (t.family, t.rank) {
            (Family::C, 2) => (Family::B, 2),
            (Family::D, 3) => (Family::A, 3),
            (f, r) => (f, r),
        };
        canon(self) == canon(other)
    }
}

// Larger components first, then alphabetical; `B2×A1×A1` rather than `A1×A1×B2`.
impl Ord for TypeLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .rank
            .cmp(&self.rank)
            .then(self.family.cmp(&other.family))
    }
}

impl PartialOrd for TypeLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        TypeLabel::new(family, rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Formats a list of components as `A2×A2×A2`; the empty list is `∅`.
pub fn format_components(types: &[TypeLabel]) -> String {
    if types.is_empty() {
        return "∅".to_string();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("×")
}

/// Cartan matrix `A_ij = ⟨α_i, α_j^∨⟩` in Bourbaki numbering (0-based storage).
pub fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match label.family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    match label.family {
        // α_n short.
        Family::B => a[n - 2][n - 1] = -2,
        // α_n long.
        Family::C => a[n - 1][n - 2] = -2,
        // α_3, α_4 short.
        Family::F => a[1][2] = -2,
        // α_1 short.
        Family::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// A root with its coefficients in the simple roots and the coefficients of
/// its coroot in the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    /// Positive roots by increasing height, then their negatives in the same order.
    roots: Vec<Root>,
    n_positive: usize,
}

impl RootDatum {
    /// Builds the root system as the closure of the simple roots under the
    /// simple reflections.
    pub fn build(label: TypeLabel) -> Result<Self> {
        let cartan = cartan_matrix(label);
        let n = label.rank;

        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), e.clone());
            queue.push_back(Root {
                coeffs: e.clone(),
                coroot: e,
            });
        }
        while let Some(root) = queue.pop_front() {
            for j in 0..n {
                let image = reflect_root(&cartan, &root, j);
                if !seen.contains_key(&image.coeffs) {
                    seen.insert(image.coeffs.clone(), image.coroot.clone());
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Root> = seen
            .into_iter()
            .map(|(coeffs, coroot)| Root { coeffs, coroot })
            .filter(Root::is_positive)
            .collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then(a.coeffs.cmp(&b.coeffs)));
        let n_positive = positive.len();
        let negatives: Vec<Root> = positive
            .iter()
            .map(|r| Root {
                coeffs: r.coeffs.iter().map(|c| -c).collect(),
                coroot: r.coroot.iter().map(|c| -c).collect(),
            })
            .collect();
        let mut roots = positive;
        roots.extend(negatives);
        Ok(Self {
            label,
            cartan,
            roots,
            n_positive,
        })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    /// The highest root `α₀`: the last positive root in height order.
    pub fn highest_root(&self) -> &Root {
        &self.roots[self.n_positive - 1]
    }

    /// Coordinates of the coroot of `root` in the fundamental-coweight basis.
    pub fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.cartan[i][j] * root.coroot[j]).sum())
            .collect()
    }

    /// `α_j^∨` in coweight coordinates (column `j` of the Cartan matrix), `j` 1-based.
    pub fn simple_coroot_coords(&self, j: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[j - 1]).collect()
    }

    pub fn contains_root(&self, coeffs: &[i64]) -> bool {
        self.roots.iter().any(|r| r.coeffs == coeffs)
    }

    /// Cartan matrix of the extended diagram `Δ̃`, node 0 being `−α₀`.
    pub fn extended_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let top = self.highest_root();
        let top_coroot = self.coroot_coords(top);
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        a[0][0] = 2;
        for j in 1..=n {
            a[0][j] = -(0..n)
                .map(|k| top.coeffs[k] * self.cartan[k][j - 1])
                .sum::<i64>();
            a[j][0] = -top_coroot[j - 1];
            for i in 1..=n {
                a[i][j] = self.cartan[i - 1][j - 1];
            }
        }
        a
    }

    /// Simple reflection `s_i` (1-based) as a linear map on coweight coordinates:
    /// `λ ↦ λ − ⟨α_i, λ⟩ α_i^∨`.
    pub fn simple_reflection(&self, i: usize) -> Result<AffineMap> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::InvalidInput(format!(
                "node {i} out of range 1..={n} for {}",
                self.label
            )));
        }
        let m = Matrix::from_fn(n, n, |r, c| {
            let delta = if r == c { 1 } else { 0 };
            let hit = if c == i - 1 { self.cartan[r][i - 1] } else { 0 };
            int(delta - hit)
        });
        Ok(AffineMap::linear(m))
    }

    /// Longest element of the parabolic subgroup `W_J`, `J` a set of 1-based nodes.
    ///
    /// Starts from `Σ_{j∈J} ω_j^∨`, which is regular for `W_J`, and applies a
    /// simple reflection `s_j` (`j ∈ J`) while some `⟨α_j, ·⟩` is positive. The
    /// element reaching the antidominant chamber is `w_J`.
    pub fn longest_element(&self, subset: &[usize]) -> Result<AffineMap> {
        let n = self.rank();
        let mut nodes: Vec<usize> = subset.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        if let Some(&bad) = nodes.iter().find(|&&j| j == 0 || j > n) {
            return Err(Error::InvalidInput(format!(
                "node {bad} out of range 1..={n}"
            )));
        }
        let mut v: Vec<i64> = vec![0; n];
        for &j in &nodes {
            v[j - 1] = 1;
        }
        let mut word = Vec::new();
        while let Some(&j) = nodes.iter().find(|&&j| v[j - 1] > 0) {
            let c = v[j - 1];
            for (k, vk) in v.iter_mut().enumerate() {
                *vk -= c * self.cartan[k][j - 1];
            }
            word.push(j);
        }
        let mut w = Matrix::identity(n);
        for &j in &word {
            w = self.simple_reflection(j)?.linear_part().mul(&w);
        }
        Ok(AffineMap::linear(w))
    }

    /// Image of a root (simple-root coefficients) under a linear map of `V`.
    ///
    /// Roots are functionals, so `w(β) = β ∘ w⁻¹`. Returns `None` when the map
    /// is singular or the image is not an integral vector.
    pub fn act_on_root(&self, w: &Matrix, coeffs: &[i64]) -> Option<Vec<i64>> {
        let inv = w.inverse()?;
        let n = self.rank();
        let image: Vec<Rational> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| int(coeffs[i]) * &inv[(i, j)])
                    .fold(int(0), |a, b| a + b)
            })
            .collect();
        image
            .iter()
            .map(|x| {
                if x.is_integer() {
                    i64::try_from(x.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Type of the subdiagram of the extended diagram induced on `nodes`
    /// (node 0 is `−α₀`, node `i` is `α_i`), one label per connected component.
    ///
    /// Rank-2 double bonds and the 3-node chain are ambiguous (`B2 = C2`,
    /// `A3 = D3`); they take the ambient family's name when it has one.
    pub fn subdiagram_type(&self, nodes: &[usize]) -> Result<Vec<TypeLabel>> {
        let ext = self.extended_cartan();
        let n = self.rank();
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&v| v > n) {
            return Err(Error::InvalidInput(format!(
                "node {bad} out of range 0..={n}"
            )));
        }
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = vec![start];
            remaining.remove(&start);
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                let nbrs: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&v| ext[u][v] != 0)
                    .collect();
                for v in nbrs {
                    remaining.remove(&v);
                    comp.push(v);
                }
            }
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| ext[i][j]).collect())
                .collect();
            let label = classify_connected(&sub, self.label.family).ok_or_else(|| {
                Error::Invariant(format!(
                    "unclassifiable component {comp:?} of {} subdiagram",
                    self.label
                ))
            })?;
            out.push(label);
        }
        out.sort();
        Ok(out)
    }
}

fn reflect_root(cartan: &[Vec<i64>], root: &Root, j: usize) -> Root {
    let n = cartan.len();
    let pair: i64 = (0..n).map(|k| root.coeffs[k] * cartan[k][j]).sum();
    let copair: i64 = (0..n).map(|k| root.coroot[k] * cartan[j][k]).sum();
    let mut coeffs = root.coeffs.clone();
    let mut coroot = root.coroot.clone();
    coeffs[j] -= pair;
    coroot[j] -= copair;
    Root { coeffs, coroot }
}

/// Classifies a connected Cartan matrix of finite type.
fn classify_connected(a: &[Vec<i64>], ambient: Family) -> Option<TypeLabel> {
    let k = a.len();
    let label = |f, r| TypeLabel::new(f, r).ok();
    if k == 1 {
        return label(Family::A, 1);
    }
    let mut adj = vec![Vec::new(); k];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let m = a[i][j] * a[j][i];
            if m != 0 {
                if !(1..=3).contains(&m) {
                    return None;
                }
                adj[i].push(j);
                adj[j].push(i);
                edges.push((i, j, m));
            }
        }
    }
    if edges.len() != k - 1 {
        return None;
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let multi: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    match multi.as_slice() {
        [] => {}
        [(_, _, 3)] => return if k == 2 { label(Family::G, 2) } else { None },
        [(u, v, 2)] => {
            if degree.iter().any(|&d| d > 2) {
                return None;
            }
            let (u, v) = (*u, *v);
            if k == 2 {
                let f = if ambient == Family::C {
                    Family::C
                } else {
                    Family::B
                };
                return label(f, 2);
            }
            let (end, inner) = match (degree[u], degree[v]) {
                (1, 2) => (u, v),
                (2, 1) => (v, u),
                (2, 2) if k == 4 => return label(Family::F, 4),
                _ => return None,
            };
            // ⟨α_inner, α_end^∨⟩ = −2 exactly when α_end is the short root.
            let end_short = a[inner][end] == -2;
            return label(if end_short { Family::B } else { Family::C }, k);
        }
        _ => return None,
    }
    let branch: Vec<usize> = (0..k).filter(|&i| degree[i] >= 3).collect();
    match branch.as_slice() {
        [] => {
            if k == 3 && ambient == Family::D {
                label(Family::D, 3)
            } else {
                label(Family::A, k)
            }
        }
        [b] if degree[*b] == 3 => {
            let mut arms: Vec<usize> = adj[*b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => label(Family::D, k),
                [1, 2, 2] => label(Family::E, 6),
                [1, 2, 3] => label(Family::E, 7),
                [1, 2, 4] => label(Family::E, 8),
                _ => None,
            }
        }
        _ => None,
    }
}
