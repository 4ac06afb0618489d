//! Brute-force ground truth in small matrix groups over finite fields.
//!
//! Nothing here touches the root-datum machinery: elements are explicit
//! matrices over `𝔽_q`, classes are explicit conjugation orbits.

use std::collections::HashSet;
use std::fmt;

use crate::brauer::prime_power;
use crate::error::{Error, Result};

/// Largest group the oracle will enumerate.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

/// `𝔽_q` for `q = p^f ≤ 9`, elements encoded as `0..q` (base-`p` digits of the
/// polynomial coefficients).
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("q = {q} is not a prime power")))?;
        if q > 9 {
            return Err(Error::InvalidInput(format!(
                "q = {q} exceeds the oracle range"
            )));
        }
        let (q, p, f) = (q as usize, p as usize, f as usize);
        let digits = |x: usize| -> Vec<usize> { (0..f).map(|i| x / p.pow(i as u32) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        // Monic x^f + c(x) with no root in 𝔽_p; enough for f ≤ 3. Prime
        // fields never reduce.
        let modulus: Vec<usize> = (0..p.pow(f as u32))
            .map(&digits)
            .find(|c| {
                f == 1
                    || (0..p).all(|x| {
                        let value = (0..f).fold(x.pow(f as u32) % p, |acc, i| {
                            (acc + c[i] * x.pow(i as u32)) % p
                        });
                        value != 0
                    })
            })
            .expect("an irreducible polynomial exists");
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = (0..f).map(|i| (da[i] + db[i]) % p).collect();
                add[a * q + b] = encode(&sum) as u8;
                let mut prod = vec![0usize; 2 * f];
                for i in 0..f {
                    for j in 0..f {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for k in (f..2 * f).rev() {
                    let c = prod[k];
                    prod[k] = 0;
                    for i in 0..f {
                        prod[k - f + i] = (prod[k - f + i] + (p - c) * modulus[i]) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..f]) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a * q + b] == 0)
                    .expect("additive inverse") as u8
            })
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).expect("field") as u8
                }
            })
            .collect();
        Ok(Self {
            q,
            p,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `0` maps to `0`.
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// A generator of `𝔽_q^×`.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q as u8)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == self.q - 1
            })
            .expect("𝔽_q^× is cyclic")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    SL2,
    PGL2,
    SL3,
    PGL3,
}

impl GroupKind {
    fn dim(self) -> usize {
        match self {
            GroupKind::SL2 | GroupKind::PGL2 => 2,
            GroupKind::SL3 | GroupKind::PGL3 => 3,
        }
    }

    fn projective(self) -> bool {
        matches!(self, GroupKind::PGL2 | GroupKind::PGL3)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GroupKind::SL2 => "SL2",
            GroupKind::PGL2 => "PGL2",
            GroupKind::SL3 => "SL3",
            GroupKind::PGL3 => "PGL3",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGroupSpec {
    pub kind: GroupKind,
    pub q: u64,
}

impl SmallGroupSpec {
    pub fn new(kind: GroupKind, q: u64) -> Result<Self> {
        prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("q = {q} is not a prime power")))?;
        if q > 9 {
            return Err(Error::InvalidInput(format!(
                "q = {q} exceeds the oracle range"
            )));
        }
        let spec = Self { kind, q };
        if spec.order() > MAX_GROUP_ORDER {
            return Err(Error::Resource(format!(
                "|{kind}({q})| = {} exceeds {MAX_GROUP_ORDER}",
                spec.order()
            )));
        }
        Ok(spec)
    }

    /// `|SL_n(q)| = |PGL_n(q)| = q^{n(n−1)/2} ∏_{k=2}^n (q^k − 1)`.
    pub fn order(&self) -> u64 {
        let n = self.kind.dim() as u32;
        let q = self.q;
        (2..=n).fold(q.pow(n * (n - 1) / 2), |acc, k| acc * (q.pow(k) - 1))
    }
}

type Mat = [u8; 9];

/// Matrix arithmetic in `GL_n(𝔽_q)` or `PGL_n(𝔽_q)`, `n ≤ 3`.
struct MatrixGroup {
    field: FiniteField,
    n: usize,
    projective: bool,
}

impl MatrixGroup {
    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let mut c = [0u8; 9];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s = self
                        .field
                        .add(s, self.field.mul(a[i * n + k], b[k * n + j]));
                }
                c[i * n + j] = s;
            }
        }
        self.normalize(c)
    }

    /// Scales projective elements so the first nonzero entry is one.
    fn normalize(&self, mut m: Mat) -> Mat {
        if self.projective {
            let lead = m[..self.n * self.n]
                .iter()
                .copied()
                .find(|&x| x != 0)
                .expect("invertible");
            let s = self.field.inv(lead);
            for x in m[..self.n * self.n].iter_mut() {
                *x = self.field.mul(*x, s);
            }
        }
        m
    }

    fn det(&self, m: &Mat) -> u8 {
        let f = &self.field;
        match self.n {
            2 => f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2])),
            _ => {
                let minor = |a: usize, b: usize, c: usize, d: usize| {
                    f.sub(f.mul(m[a], m[d]), f.mul(m[b], m[c]))
                };
                let t0 = f.mul(m[0], minor(4, 5, 7, 8));
                let t1 = f.mul(m[1], minor(3, 5, 6, 8));
                let t2 = f.mul(m[2], minor(3, 4, 6, 7));
                f.add(f.sub(t0, t1), t2)
            }
        }
    }

    fn inverse(&self, m: &Mat) -> Mat {
        // m^{-1} = m^{k−1} where m^k is the identity.
        let id = self.identity();
        let mut prev = id;
        let mut x = *m;
        while x != id {
            prev = x;
            x = self.mul(&x, m);
        }
        prev
    }

    fn identity(&self) -> Mat {
        let mut m = [0u8; 9];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    fn order_of(&self, m: &Mat) -> u64 {
        let id = self.identity();
        let mut x = *m;
        let mut k = 1;
        while x != id {
            x = self.mul(&x, m);
            k += 1;
        }
        k
    }

    fn encode(&self, m: &Mat) -> u32 {
        m[..self.n * self.n]
            .iter()
            .rev()
            .fold(0u32, |acc, &x| acc * self.field.order() as u32 + x as u32)
    }
}

/// Per-class data from a full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCensus {
    pub group_order: u64,
    /// `(class size, element order)` for each class.
    pub classes: Vec<(u64, u64)>,
    pub characteristic: u64,
}

impl ClassCensus {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn semisimple_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|(_, order)| order % self.characteristic != 0)
            .count()
    }
}

/// Enumerates the group and partitions it into conjugacy classes.
pub fn conjugacy_classes(spec: &SmallGroupSpec) -> Result<ClassCensus> {
    let spec = SmallGroupSpec::new(spec.kind, spec.q)?;
    let field = FiniteField::new(spec.q)?;
    let n = spec.kind.dim();
    let g = MatrixGroup {
        field,
        n,
        projective: spec.kind.projective(),
    };
    let q = g.field.order();

    let mut elements = Vec::new();
    let total = q.pow((n * n) as u32);
    for code in 0..total {
        let mut m = [0u8; 9];
        let mut c = code;
        for x in m[..n * n].iter_mut() {
            *x = (c % q) as u8;
            c /= q;
        }
        let det = g.det(&m);
        let keep = if g.projective {
            det != 0 && g.normalize(m) == m
        } else {
            det == 1
        };
        if keep {
            elements.push(m);
        }
    }
    if elements.len() as u64 != spec.order() {
        return Err(Error::Invariant(format!(
            "enumerated {} elements of {}({}), expected {}",
            elements.len(),
            spec.kind,
            spec.q,
            spec.order()
        )));
    }

    // Transvections generate SL_n; a diagonal matrix with a primitive entry
    // adds the rest of PGL_n.
    let mut generators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for t in 1..q as u8 {
                    let mut m = g.identity();
                    m[i * n + j] = t;
                    generators.push(m);
                }
            }
        }
    }
    if g.projective {
        let mut d = g.identity();
        d[0] = g.field.primitive_element();
        generators.push(g.normalize(d));
    }
    let conjugators: Vec<(Mat, Mat)> = generators.iter().map(|x| (*x, g.inverse(x))).collect();

    let mut seen: HashSet<u32> = HashSet::with_capacity(elements.len());
    let mut classes = Vec::new();
    for x in &elements {
        if !seen.insert(g.encode(x)) {
            continue;
        }
        let mut stack = vec![*x];
        let mut size = 1u64;
        while let Some(y) = stack.pop() {
            for (a, a_inv) in &conjugators {
                let z = g.mul(&g.mul(a, &y), a_inv);
                if seen.insert(g.encode(&z)) {
                    size += 1;
                    stack.push(z);
                }
            }
        }
        classes.push((size, g.order_of(x)));
    }
    let covered: u64 = classes.iter().map(|c| c.0).sum();
    if covered != spec.order() {
        return Err(Error::Invariant(
            "class sizes do not sum to the group order".to_string(),
        ));
    }
    classes.sort_unstable();
    Ok(ClassCensus {
        group_order: spec.order(),
        classes,
        characteristic: g.field.characteristic() as u64,
    })
}

/// Number of conjugacy classes of `p′`-order elements.
pub fn semisimple_class_count(spec: &SmallGroupSpec) -> Result<usize> {
    Ok(conjugacy_classes(spec)?.semisimple_count())
}

/// Irreducible character degrees from the classical tables of `SL₂(q)` and
/// `PGL₂(q)`, with multiplicity.
pub fn character_degrees(spec: &SmallGroupSpec) -> Result<Vec<u64>> {
    let q = spec.q;
    let mut d = vec![1];
    let mut push =
        |degree: u64, count: u64| d.extend(std::iter::repeat_n(degree, count as usize));
    match (spec.kind, q % 2) {
        (GroupKind::SL2 | GroupKind::PGL2, 0) => {
            push(q, 1);
            push(q + 1, (q - 2) / 2);
            push(q - 1, q / 2);
        }
        (GroupKind::SL2, _) => {
            push(q, 1);
            push(q + 1, (q - 3) / 2);
            push(q - 1, (q - 1) / 2);
            push(q.div_ceil(2), 2);
            push((q - 1) / 2, 2);
        }
        (GroupKind::PGL2, _) => {
            push(1, 1);
            push(q, 2);
            push(q + 1, (q - 3) / 2);
            push(q - 1, (q - 1) / 2);
        }
        (kind, _) => {
            return Err(Error::InvalidInput(format!(
                "no character table for {kind}"
            )));
        }
    }
    d.sort_unstable();
    Ok(d)
}

/// Number of irreducible characters of degree prime to `p`. The table is
/// checked against the brute-force class count and `Σ d² = |G|`.
pub fn pprime_character_count(spec: &SmallGroupSpec) -> Result<usize> {
    let degrees = character_degrees(spec)?;
    let census = conjugacy_classes(spec)?;
    if degrees.len() != census.class_count() {
        return Err(Error::Invariant(format!(
            "{} degrees but {} classes in {}({})",
            degrees.len(),
            census.class_count(),
            spec.kind,
            spec.q
        )));
    }
    let sum: u64 = degrees.iter().map(|d| d * d).sum();
    if sum != census.group_order {
        return Err(Error::Invariant(format!(
            "Σ d² = {sum} ≠ |G| = {}",
            census.group_order
        )));
    }
    Ok(degrees
        .iter()
        .filter(|&&d| d % census.characteristic != 0)
        .count())
}

/// Semisimple classes of `PGL_n(q)` without enumerating the group.
///
/// Every element of `PGL_n(q)` lifts to `GL_n(q)`, semisimple classes of
/// `GL_n(q)` are determined by their characteristic polynomials, and scalars
/// act on those by `p(x) ↦ c^n p(x/c)`. This counts the orbits.
pub fn pgl_semisimple_class_count(n: usize, q: u64) -> Result<usize> {
    let field = FiniteField::new(q)?;
    let q = field.order();
    let total = q
        .checked_pow(n as u32)
        .filter(|&t| t as u64 <= MAX_GROUP_ORDER)
        .ok_or_else(|| Error::Resource(format!("{q}^{n} polynomials exceeds {MAX_GROUP_ORDER}")))?;
    let decode = |mut code: usize| -> Vec<u8> {
        (0..n)
            .map(|_| {
                let c = (code % q) as u8;
                code /= q;
                c
            })
            .collect()
    };
    let encode = |c: &[u8]| c.iter().rev().fold(0usize, |acc, &x| acc * q + x as usize);
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for code in 0..total {
        // Coefficients of x^0, …, x^{n−1}; the constant term must be nonzero.
        let coeffs = decode(code);
        if coeffs[0] == 0 || seen[code] {
            continue;
        }
        orbits += 1;
        for c in 1..q as u8 {
            let mut power = 1u8;
            let mut image = vec![0u8; n];
            for k in (0..n).rev() {
                power = field.mul(power, c);
                image[k] = field.mul(coeffs[k], power);
            }
            seen[encode(&image)] = true;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: GroupKind, q: u64) -> SmallGroupSpec {
        SmallGroupSpec::new(kind, q).unwrap()
    }

    #[test]
    fn fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            for a in 1..q as u8 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "q = {q}");
            }
            let g = f.primitive_element();
            assert_ne!(g, 0);
        }
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(11).is_err());
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(semisimple_class_count(&spec(GroupKind::SL2, 3)).unwrap(), 3);
        assert_eq!(
            semisimple_class_count(&spec(GroupKind::PGL2, 3)).unwrap(),
            4
        );
        assert_eq!(semisimple_class_count(&spec(GroupKind::SL2, 5)).unwrap(), 5);
        // PGL₂(3) ≅ S₄: five classes.
        assert_eq!(
            conjugacy_classes(&spec(GroupKind::PGL2, 3))
                .unwrap()
                .class_count(),
            5
        );
    }

    #[test]
    fn pprime_characters() {
        assert_eq!(pprime_character_count(&spec(GroupKind::SL2, 3)).unwrap(), 6);
        assert_eq!(
            pprime_character_count(&spec(GroupKind::PGL2, 3)).unwrap(),
            3
        );
        assert_eq!(pprime_character_count(&spec(GroupKind::SL2, 5)).unwrap(), 8);
        assert_eq!(pprime_character_count(&spec(GroupKind::SL2, 4)).unwrap(), 4);
        assert!(pprime_character_count(&spec(GroupKind::SL3, 2)).is_err());
    }

    #[test]
    fn pgl_by_polynomials_matches_enumeration() {
        for q in [2, 3, 4, 5, 7] {
            let brute = semisimple_class_count(&spec(GroupKind::PGL2, q)).unwrap();
            assert_eq!(pgl_semisimple_class_count(2, q).unwrap(), brute, "q = {q}");
        }
        for q in [2, 3, 4] {
            let brute = semisimple_class_count(&spec(GroupKind::PGL3, q)).unwrap();
            assert_eq!(pgl_semisimple_class_count(3, q).unwrap(), brute, "q = {q}");
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(
            SmallGroupSpec::new(GroupKind::SL3, 7),
            Err(Error::Resource(_))
        ));
    }
}
