//! Census of `F`-stable semisimple classes for an isogeny type.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::affine::{AffineDatum, AffineMap, AffinePoint};
use crate::brauer::{self, checked_power, BrauerComplex, FrobeniusConfig, Theta};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{self, Vector};
use crate::rootdata::{Family, TypeLabel};

/// Isogeny type, named by generators of `A_G ≤ 𝒜`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    /// Subgroup generated by the given minuscule nodes.
    Sub(Vec<usize>),
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isogeny::SimplyConnected => f.write_str("sc"),
            Isogeny::Adjoint => f.write_str("ad"),
            Isogeny::Sub(nodes) => {
                let names: Vec<String> = nodes.iter().map(|n| format!("alpha{n}")).collect();
                write!(f, "sub:{}", names.join(","))
            }
        }
    }
}

impl FromStr for Isogeny {
    type Err = Error;

    /// Accepts `sc`, `ad`, or `sub:` followed by comma-separated nodes written
    /// as `alpha3` or `3`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sc" => Ok(Isogeny::SimplyConnected),
            "ad" => Ok(Isogeny::Adjoint),
            other => {
                let list = other
                    .strip_prefix("sub:")
                    .ok_or_else(|| Error::InvalidInput(format!("unknown isogeny `{s}`")))?;
                let nodes = list
                    .split(',')
                    .map(|t| {
                        let t = t.trim();
                        t.strip_prefix("alpha")
                            .unwrap_or(t)
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidInput(format!("bad node `{t}` in `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Isogeny::Sub(nodes))
            }
        }
    }
}

/// A root datum together with `A_G`, `Y(T)` and the Frobenius.
#[derive(Clone, Debug)]
pub struct GroupConfig {
    aff: AffineDatum,
    isogeny: Isogeny,
    subgroup: Vec<usize>,
    lattice: Lattice,
    frob: FrobeniusConfig,
    /// `f_z` for `z` in `subgroup`, same order.
    f_maps: Vec<AffineMap>,
}

impl GroupConfig {
    pub fn new(aff: AffineDatum, isogeny: Isogeny, frob: FrobeniusConfig) -> Result<Self> {
        let group = aff.fundamental_group();
        let generators = match &isogeny {
            Isogeny::SimplyConnected => vec![],
            Isogeny::Adjoint => group.elements().to_vec(),
            Isogeny::Sub(nodes) => nodes.clone(),
        };
        let subgroup = group.generated(&generators)?;
        let rho = frob.rho();
        if subgroup.iter().any(|&z| !subgroup.contains(&rho.apply(z))) {
            return Err(Error::InvalidInput(format!(
                "A_G = {subgroup:?} is not stable under the Frobenius twist"
            )));
        }
        let n = aff.rank();
        let mut gens: Vec<Vector> = (1..=n).map(|j| aff.simple_coroot(j).to_vec()).collect();
        gens.extend(subgroup.iter().map(|&z| aff.coweight(z)));
        let lattice = Lattice::from_rational_generators(n, &gens)?;
        let coroots = Lattice::from_rational_generators(
            n,
            &(1..=n)
                .map(|j| aff.simple_coroot(j).to_vec())
                .collect::<Vec<_>>(),
        )?;
        let (Some(big), Some(small)) = (coroots.index(), lattice.index()) else {
            return Err(Error::Invariant("Y(T) is not of full rank".to_string()));
        };
        if big != small * BigInt::from(subgroup.len()) {
            return Err(Error::Invariant(format!(
                "[Y(T) : coroot lattice] differs from |A_G| = {}",
                subgroup.len()
            )));
        }
        let f_maps = subgroup
            .iter()
            .map(|&z| aff.f_map(z))
            .collect::<Result<_>>()?;
        Ok(Self {
            aff,
            isogeny,
            subgroup,
            lattice,
            frob,
            f_maps,
        })
    }

    /// Builds everything from a type label, isogeny name, `q` and twist.
    pub fn from_parts(
        label: &str,
        isogeny: &str,
        q: u64,
        twisted: bool,
        triality: bool,
    ) -> Result<Self> {
        let aff = AffineDatum::from_label(label)?;
        let frob = if twisted || triality {
            FrobeniusConfig::twisted(&aff, q, triality)?
        } else {
            FrobeniusConfig::split(&aff, q)?
        };
        Self::new(aff, isogeny.parse()?, frob)
    }

    pub fn affine(&self) -> &AffineDatum {
        &self.aff
    }

    pub fn label(&self) -> TypeLabel {
        self.aff.datum().label()
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    /// `A_G` as sorted node labels; `Δ̃_min,G` is the same set.
    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn frobenius(&self) -> &FrobeniusConfig {
        &self.frob
    }

    pub fn q(&self) -> u64 {
        self.frob.q()
    }

    fn require_alcove(&self, p: &AffinePoint) -> Result<()> {
        if p.in_alcove() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "point {:?} lies outside the fundamental alcove",
                p.coords()
                    .iter()
                    .map(linalg::fmt_rational)
                    .collect::<Vec<_>>()
            )))
        }
    }
}

/// The first `z ∈ A_G` with `f_z(λ) − μ ∈ Y(T)`, if any.
pub fn orbit_equal(
    config: &GroupConfig,
    lambda: &AffinePoint,
    mu: &AffinePoint,
) -> Result<Option<usize>> {
    config.require_alcove(lambda)?;
    config.require_alcove(mu)?;
    for (&z, f) in config.subgroup.iter().zip(&config.f_maps) {
        let image = f.apply(lambda.coords());
        if config.lattice.contains(&linalg::sub(&image, mu.coords())) {
            return Ok(Some(z));
        }
    }
    Ok(None)
}

/// Whether the class of `λ` is `F`-stable, with the witness from
/// [`orbit_equal`] between `λ` and the folded `F(λ)`.
pub fn f_stable(config: &GroupConfig, lambda: &AffinePoint) -> Result<Option<usize>> {
    let (mu, _) = config
        .aff
        .fold_to_alcove(&config.frob.apply(lambda.coords()))?;
    orbit_equal(config, lambda, &mu)
}

/// The induced Frobenius `z ↦ ρ⁻¹(z)^q` on a subgroup of `A_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAction {
    /// `(z, F(z))` for each `z` of the subgroup, in subgroup order.
    pub images: Vec<(usize, usize)>,
    pub fixed_count: usize,
    pub h1_count: usize,
}

pub fn component_f_action(config: &GroupConfig, subgroup: &[usize]) -> Result<ComponentAction> {
    let group = config.aff.fundamental_group();
    if !group.is_subgroup(subgroup) || subgroup.iter().any(|z| !config.subgroup.contains(z)) {
        return Err(Error::InvalidInput(format!(
            "{subgroup:?} is not a subgroup of A_G"
        )));
    }
    let rho_inv = config.frob.rho().inverse();
    let phi = |z: usize| group.pow(rho_inv.apply(z), config.q());
    let images: Vec<(usize, usize)> = subgroup.iter().map(|&z| (z, phi(z))).collect();
    if images.iter().any(|(_, w)| !subgroup.contains(w)) {
        return Err(Error::Invariant(format!("{subgroup:?} is not F-stable")));
    }
    let fixed_count = images.iter().filter(|(z, w)| z == w).count();
    let mut lang: Vec<usize> = images
        .iter()
        .map(|&(z, w)| group.mul(w, group.inverse(z)))
        .collect();
    lang.sort_unstable();
    lang.dedup();
    let h1_count = subgroup.len() / lang.len();
    if h1_count != fixed_count {
        return Err(Error::Invariant(format!(
            "|H¹| = {h1_count} but {fixed_count} fixed points on {subgroup:?}"
        )));
    }
    Ok(ComponentAction {
        images,
        fixed_count,
        h1_count,
    })
}

/// One `F`-stable geometric semisimple class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub rep: AffinePoint,
    /// Nodes of `Δ̃` where the affine coordinate vanishes.
    pub i_lambda: Vec<usize>,
    pub centralizer: Vec<TypeLabel>,
    pub torus_rank: usize,
    /// `A_G(λ) = {z ∈ A_G : λ_{z(α)} = λ_α for all α}`.
    pub comp_group: Vec<usize>,
    pub action: ComponentAction,
    /// Witness `z` of `F`-stability.
    pub witness: usize,
}

impl ClassRecord {
    pub fn fixed_count(&self) -> usize {
        self.action.fixed_count
    }

    pub fn h1_count(&self) -> usize {
        self.action.h1_count
    }

    pub fn is_disconnected(&self) -> bool {
        self.comp_group.len() > 1
    }
}

fn classify(config: &GroupConfig, rep: AffinePoint, witness: usize) -> Result<ClassRecord> {
    let group = config.aff.fundamental_group();
    let a = rep.affine_coords();
    let comp_group: Vec<usize> = config
        .subgroup
        .iter()
        .copied()
        .filter(|&z| {
            let perm = group.perm(z);
            (0..a.len()).all(|alpha| a[perm.apply(alpha)] == a[alpha])
        })
        .collect();
    let i_lambda = rep.zero_nodes();
    let centralizer = config.aff.datum().subdiagram_type(&i_lambda)?;
    let torus_rank = config.aff.rank() - i_lambda.len();
    let action = component_f_action(config, &comp_group)?;
    Ok(ClassRecord {
        rep,
        i_lambda,
        centralizer,
        torus_rank,
        comp_group,
        action,
        witness,
    })
}

/// Smallest affine-coordinate vector over the `Γ_G`-orbit of `λ`.
fn orbit_key(config: &GroupConfig, maps: &[AffineMap], lambda: &[linalg::Rational]) -> Vector {
    maps.iter()
        .map(|f| config.aff.affine_coords(&f.apply(lambda)))
        .min()
        .expect("A_G contains the identity")
}

/// All `F`-stable semisimple classes, sorted by representative affine
/// coordinates. Their number must be `q^rank`.
pub fn enumerate_classes(
    config: &GroupConfig,
    complex: &BrauerComplex,
) -> Result<Vec<ClassRecord>> {
    let aff = &config.aff;
    let q = config.q();
    let expected = checked_power(q, aff.rank())
        .ok_or_else(|| Error::Resource("q^rank overflows".to_string()))?
        as usize;
    if complex.q() != q {
        return Err(Error::InvalidInput(
            "complex built for another q".to_string(),
        ));
    }
    let maps = &config.f_maps;

    let mut interior: Vec<Vector> = Vec::new();
    for &alpha in &config.subgroup {
        interior.extend(brauer::fixed_points(aff, &config.frob, complex, alpha)?);
    }
    interior.sort();
    interior.dedup();
    let vertices: Vec<Vector> = aff
        .fundamental_group()
        .elements()
        .iter()
        .map(|&b| aff.coweight(b))
        .filter(|v| interior.binary_search(v).is_err())
        .collect();

    let keyed: Vec<(Vector, bool)> = interior
        .into_par_iter()
        .map(|v| (v, false))
        .chain(vertices.into_par_iter().map(|v| (v, true)))
        .map(|(v, is_vertex)| {
            let p = aff.point(v);
            let stable = f_stable(config, &p)?.is_some();
            Ok(stable.then(|| (orbit_key(config, maps, p.coords()), is_vertex)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut by_key: HashMap<Vector, bool> = HashMap::new();
    for (key, is_vertex) in keyed {
        *by_key.entry(key).or_insert(false) |= is_vertex;
    }
    let mut reps: Vec<(Vector, bool)> = by_key.into_iter().collect();
    reps.sort();

    // The orbit key can miss identifications between alcove vertices, so
    // those are compared pairwise.
    let mut kept: Vec<(AffinePoint, bool)> = Vec::with_capacity(reps.len());
    for (key, is_vertex) in reps {
        let rep = aff.point_from_affine(&key)?;
        if is_vertex {
            let mut duplicate = false;
            for (other, _) in kept.iter().filter(|o| o.1) {
                if orbit_equal(config, &rep, other)?.is_some() {
                    duplicate = true;
                    break;
                }
            }
            if duplicate {
                continue;
            }
        }
        kept.push((rep, is_vertex));
    }

    if kept.len() != expected {
        return Err(Error::Invariant(format!(
            "{} F-stable semisimple classes for {} {} at q = {q}, expected {expected}",
            kept.len(),
            config.label(),
            config.isogeny
        )));
    }
    kept.into_par_iter()
        .map(|(p, _)| {
            let witness = f_stable(config, &p)?.ok_or_else(|| {
                Error::Invariant("canonical representative is not F-stable".to_string())
            })?;
            classify(config, p, witness)
        })
        .collect()
}

/// Aggregate counts over a class list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub geometric_total: u64,
    /// Classes with connected centralizer.
    pub connected: u64,
    pub n_disconnected: u64,
    /// `Σ |A_G(λ)^F|`: the number of rational semisimple classes.
    pub rational_total: u64,
    /// `Σ |A_G(λ)^F|²`: semisimple characters of `p′` degree on the dual side.
    pub pprime_char_total: u64,
    /// Number of classes by `|A_G(λ)|`.
    pub by_component_order: BTreeMap<usize, u64>,
}

pub fn counts(records: &[ClassRecord]) -> Counts {
    let mut by_component_order = BTreeMap::new();
    for r in records {
        *by_component_order.entry(r.comp_group.len()).or_insert(0) += 1;
    }
    let n_disconnected = records.iter().filter(|r| r.is_disconnected()).count() as u64;
    Counts {
        geometric_total: records.len() as u64,
        connected: records.len() as u64 - n_disconnected,
        n_disconnected,
        rational_total: records.iter().map(|r| r.fixed_count() as u64).sum(),
        pprime_char_total: records
            .iter()
            .map(|r| (r.fixed_count() as u64).pow(2))
            .sum(),
        by_component_order,
    }
}

/// Comparison of `n_disconnected` with the closed forms for prime-order `A_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table3Report {
    /// `None` when the closed forms do not apply, with the reason.
    pub expected: Option<u64>,
    pub actual: u64,
    pub reason: Option<String>,
}

/// Expected number of disconnected classes: `1` for `A_n` with `n+1` prime,
/// `q^{n−1}` for `B_n`, `q^{⌊n/2⌋}` for `C_n`, `q²` for `E6`, `q⁴` for `E7`,
/// all adjoint with `p ∤ |A_G|`. Errors on a mismatch.
pub fn table3_check(config: &GroupConfig, counts: &Counts) -> Result<Table3Report> {
    let order = config.subgroup.len() as u64;
    let label = config.label();
    let n = label.rank() as u32;
    let q = config.q();
    let not_applicable = |reason: String| {
        Ok(Table3Report {
            expected: None,
            actual: counts.n_disconnected,
            reason: Some(reason),
        })
    };
    if order < 2
        || brauer::prime_power(order)
            .map(|(p, f)| (p, f) != (order, 1))
            .unwrap_or(true)
    {
        return not_applicable(format!("|A_G| = {order} is not prime"));
    }
    if order.is_multiple_of(config.frob.p()) {
        return not_applicable(format!("p = {} divides |A_G| = {order}", config.frob.p()));
    }
    let expected = match (label.family(), n) {
        (Family::A, _) => 1,
        (Family::B, _) => q.pow(n - 1),
        (Family::C, _) => q.pow(n / 2),
        (Family::E, 6) => q.pow(2),
        (Family::E, 7) => q.pow(4),
        _ => return not_applicable(format!("no closed form for {label}")),
    };
    if counts.n_disconnected != expected {
        return Err(Error::Invariant(format!(
            "{label}: {} classes with disconnected centralizer, expected {expected}",
            counts.n_disconnected
        )));
    }
    Ok(Table3Report {
        expected: Some(expected),
        actual: counts.n_disconnected,
        reason: None,
    })
}

/// Comparison with the closed forms `q^{2m+1} + q^{2m−1} + 2q^m` (classes)
/// and `q^{2m+1} + 3q^{2m−1} + 12q^m` (`p′`-characters of the dual group) for
/// adjoint `D_{2m+1}`, together with the stratum sizes they presuppose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DOddReport {
    pub m: u32,
    pub q_mod_4: u64,
    pub closed_form: u64,
    pub actual: u64,
    pub agrees: bool,
    pub pprime_closed_form: u64,
    pub pprime_actual: u64,
    pub pprime_agrees: bool,
    /// `|c_d|` implied by the closed forms, for `d = 1, 2, 4`.
    pub implied_by_order: BTreeMap<usize, u64>,
}

pub fn d_odd_report(config: &GroupConfig, counts: &Counts) -> Option<DOddReport> {
    let label = config.label();
    let adjoint = config.subgroup.len() == config.aff.fundamental_group().order();
    if label.family() != Family::D || label.rank().is_multiple_of(2) || !adjoint {
        return None;
    }
    let m = (label.rank() as u32 - 1) / 2;
    let q = config.q();
    let (top, mid, low) = (q.pow(2 * m + 1), q.pow(2 * m - 1), q.pow(m));
    let closed_form = top + mid + 2 * low;
    let pprime_closed_form = top + 3 * mid + 12 * low;
    Some(DOddReport {
        m,
        q_mod_4: q % 4,
        closed_form,
        actual: counts.rational_total,
        agrees: closed_form == counts.rational_total,
        pprime_closed_form,
        pprime_actual: counts.pprime_char_total,
        pprime_agrees: pprime_closed_form == counts.pprime_char_total,
        implied_by_order: BTreeMap::from([(1, top - mid), (2, mid - low), (4, low)]),
    })
}

/// Everything the census computes for one configuration.
#[derive(Clone, Debug)]
pub struct Census {
    pub classes: Vec<ClassRecord>,
    pub counts: Counts,
    pub table3: Table3Report,
    pub d_odd: Option<DOddReport>,
    pub theta: Theta,
    pub warnings: Vec<String>,
}

/// Enumerates `E_q`, classifies every `F`-stable class and runs the checks.
pub fn run(config: &GroupConfig, max_subalcoves: usize) -> Result<Census> {
    let complex = brauer::enumerate_subalcoves(&config.aff, &config.frob, max_subalcoves)?;
    let classes = enumerate_classes(config, &complex)?;
    let counts = counts(&classes);
    if counts.connected + counts.n_disconnected != counts.geometric_total {
        return Err(Error::Invariant("c₁ + c₂ ≠ q^rank".to_string()));
    }
    let table3 = table3_check(config, &counts)?;
    let d_odd = d_odd_report(config, &counts);
    let theta = brauer::theta(&config.aff, &config.frob, &complex, &config.subgroup)?;

    let mut warnings = Vec::new();
    if let Some(reason) = &table3.reason {
        if config.subgroup.len() > 1 {
            warnings.push(format!(
                "disconnected-class closed forms not checked: {reason}"
            ));
        }
    }
    if !theta.hypotheses && config.subgroup.len() > 1 {
        warnings.push(
            "q is not ±1 modulo |A_G| as the twist requires; Θ_q orbit count not enforced"
                .to_string(),
        );
    }
    if let Some(report) = &d_odd {
        if !report.agrees {
            warnings.push(format!(
                "rational total {} differs from the D_odd closed form {} (q ≡ {} mod 4)",
                report.actual, report.closed_form, report.q_mod_4
            ));
        }
    }
    Ok(Census {
        classes,
        counts,
        table3,
        d_odd,
        theta,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn config(label: &str, iso: &str, q: u64, twisted: bool) -> GroupConfig {
        GroupConfig::from_parts(label, iso, q, twisted, false).unwrap()
    }

    fn pt(cfg: &GroupConfig, x: &[(i64, i64)]) -> AffinePoint {
        cfg.affine()
            .point(x.iter().map(|&(a, b)| frac(a, b)).collect())
    }

    #[test]
    fn isogeny_parsing() {
        assert_eq!("sc".parse::<Isogeny>().unwrap(), Isogeny::SimplyConnected);
        assert_eq!(
            "sub:alpha1,5".parse::<Isogeny>().unwrap(),
            Isogeny::Sub(vec![1, 5])
        );
        assert!("bogus".parse::<Isogeny>().is_err());
        assert_eq!(Isogeny::Sub(vec![1]).to_string(), "sub:alpha1");
    }

    #[test]
    fn orbit_equal_examples() {
        let ad = config("A1", "ad", 3, false);
        let sc = config("A1", "sc", 3, false);
        let zero = pt(&ad, &[(0, 1)]);
        let one = pt(&ad, &[(1, 1)]);
        assert_eq!(orbit_equal(&ad, &zero, &zero).unwrap(), Some(0));
        // ω₁^∨ ∈ Y(T_ad), so the identity already witnesses 0 ~ ω₁^∨.
        assert_eq!(orbit_equal(&ad, &zero, &one).unwrap(), Some(0));
        let f1 = ad.affine().f_map(1).unwrap();
        assert_eq!(f1.apply(zero.coords()), one.coords().to_vec());
        assert_eq!(orbit_equal(&sc, &zero, &one).unwrap(), None);
        assert!(orbit_equal(&ad, &pt(&ad, &[(2, 1)]), &zero).is_err());
    }

    #[test]
    fn f_stable_examples() {
        let ad = config("A1", "ad", 3, false);
        let sc = config("A1", "sc", 3, false);
        assert_eq!(f_stable(&ad, &pt(&ad, &[(0, 1)])).unwrap(), Some(0));
        assert_eq!(f_stable(&ad, &pt(&ad, &[(1, 4)])).unwrap(), Some(1));
        assert_eq!(f_stable(&sc, &pt(&sc, &[(1, 4)])).unwrap(), None);
    }

    #[test]
    fn component_action_examples() {
        let split = config("E6", "ad", 2, false);
        let twisted = config("E6", "ad", 2, true);
        let all = split.subgroup().to_vec();
        assert_eq!(component_f_action(&split, &all).unwrap().fixed_count, 1);
        assert_eq!(component_f_action(&twisted, &all).unwrap().fixed_count, 3);
        let e7 = config("E7", "ad", 3, false);
        assert_eq!(component_f_action(&e7, &[0, 7]).unwrap().fixed_count, 2);
    }

    #[test]
    fn a1_censuses() {
        let sc = run(&config("A1", "sc", 3, false), 1000).unwrap();
        assert_eq!(sc.counts.geometric_total, 3);
        assert_eq!(sc.counts.n_disconnected, 0);
        assert_eq!(sc.counts.rational_total, 3);

        let ad = run(&config("A1", "ad", 3, false), 1000).unwrap();
        let reps: Vec<Vector> = ad.classes.iter().map(|c| c.rep.coords().to_vec()).collect();
        assert_eq!(
            reps,
            vec![vec![frac(1, 1)], vec![frac(3, 4)], vec![frac(1, 2)]]
        );
        assert_eq!(ad.classes[2].comp_group, vec![0, 1]);
        assert_eq!(ad.counts.rational_total, 4);
        assert_eq!(ad.counts.pprime_char_total, 6);
    }

    #[test]
    fn table3_small() {
        let c = run(&config("A2", "ad", 5, false), 1000).unwrap();
        assert_eq!(c.table3.expected, Some(1));
        let c = run(&config("B3", "ad", 5, false), 1000).unwrap();
        assert_eq!(c.counts.n_disconnected, 25);
    }

    #[test]
    fn rejects_unstable_subgroup() {
        let aff = AffineDatum::from_label("D4").unwrap();
        let frob = FrobeniusConfig::twisted(&aff, 3, false).unwrap();
        assert!(GroupConfig::new(aff, Isogeny::Sub(vec![3]), frob).is_err());
    }
}
