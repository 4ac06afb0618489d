//! Serializable reports. Rationals are always `"num/den"` strings.

use std::collections::BTreeMap;

use brauer_core::linalg::fmt_rational;
use brauer_core::rootdata::format_components;
use brauer_core::{AffineDatum, Census, ClassRecord, GroupConfig, Rational, Result};
use serde::{Deserialize, Serialize};

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDim {
    pub node: usize,
    pub dim: usize,
    pub orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    #[serde(rename = "type")]
    pub label: String,
    pub rank: usize,
    pub roots: usize,
    pub positive_roots: usize,
    /// Marks of `−α₀, α₁, …, α_n`.
    pub marks: Vec<i64>,
    pub minuscule_nodes: Vec<usize>,
    pub group_order: usize,
    /// `table[i][j]` is the node of `z_i z_j` for `i, j` in `minuscule_nodes`.
    pub group_table: Vec<Vec<usize>>,
    /// Permutation of `Δ̃` induced by each `z`.
    pub group_perms: BTreeMap<usize, Vec<usize>>,
    pub invariant_dims: Vec<InvariantDim>,
}

pub fn info(aff: &AffineDatum) -> Result<InfoReport> {
    let datum = aff.datum();
    let group = aff.fundamental_group();
    let elements = group.elements().to_vec();
    let invariant_dims = elements
        .iter()
        .map(|&z| {
            Ok(InvariantDim {
                node: z,
                dim: aff.invariant_space(z)?.dim(),
                orbits: aff.orbit_count(z)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(InfoReport {
        label: datum.label().to_string(),
        rank: datum.rank(),
        roots: datum.roots().len(),
        positive_roots: datum.positive_roots().len(),
        marks: aff.marks().by_node.clone(),
        minuscule_nodes: elements.clone(),
        group_order: group.order(),
        group_table: elements
            .iter()
            .map(|&a| elements.iter().map(|&b| group.mul(a, b)).collect())
            .collect(),
        group_perms: elements
            .iter()
            .map(|&z| (z, group.perm(z).as_slice().to_vec()))
            .collect(),
        invariant_dims,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    #[serde(rename = "type")]
    pub label: String,
    pub isogeny: String,
    /// `A_G` as minuscule node labels.
    pub subgroup: Vec<usize>,
    pub q: u64,
    pub p: u64,
    /// `split`, `twisted` or `triality`.
    pub twist: String,
    /// `ρ` on `Δ̃`.
    pub rho: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub rep: Vec<String>,
    pub affine: Vec<String>,
    pub i_lambda: Vec<usize>,
    pub centralizer: String,
    pub torus_rank: usize,
    pub comp_group: Vec<usize>,
    /// `(z, F(z))` pairs.
    pub f_action: Vec<(usize, usize)>,
    pub fixed_count: usize,
    pub h1_count: usize,
}

impl From<&ClassRecord> for ClassSummary {
    fn from(r: &ClassRecord) -> Self {
        Self {
            rep: rationals(r.rep.coords()),
            affine: rationals(r.rep.affine_coords()),
            i_lambda: r.i_lambda.clone(),
            centralizer: format_components(&r.centralizer),
            torus_rank: r.torus_rank,
            comp_group: r.comp_group.clone(),
            f_action: r.action.images.clone(),
            fixed_count: r.fixed_count(),
            h1_count: r.h1_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsBlock {
    pub geometric_total: u64,
    pub connected: u64,
    pub n_disconnected: u64,
    pub rational_total: u64,
    pub pprime_char_total: u64,
    /// Number of classes by component-group order.
    pub by_component_order: BTreeMap<usize, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumBlock {
    pub node: usize,
    pub dim: usize,
    pub orbits: usize,
    pub distinct_fixed_points: usize,
    pub enforced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaBlock {
    pub points: usize,
    pub orbits: usize,
    pub closed: bool,
    pub hypotheses: bool,
    pub strata: Vec<StratumBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectedBlock {
    pub expected: Option<u64>,
    pub actual: u64,
    pub not_applicable: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DOddBlock {
    pub q_mod_4: u64,
    pub closed_form: u64,
    pub rational_total: u64,
    pub agrees: bool,
    pub pprime_closed_form: u64,
    pub pprime_char_total: u64,
    pub pprime_agrees: bool,
    pub implied_by_component_order: BTreeMap<usize, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub config: ConfigEcho,
    pub classes: Vec<ClassSummary>,
    pub counts: CountsBlock,
    pub theta: ThetaBlock,
    pub disconnected_check: DisconnectedBlock,
    pub d_odd: Option<DOddBlock>,
    pub warnings: Vec<String>,
}

pub fn census(config: &GroupConfig, census: &Census) -> CensusReport {
    let frob = config.frobenius();
    let twist = match frob.rho().order() {
        1 => "split",
        3 => "triality",
        _ => "twisted",
    };
    let c = &census.counts;
    CensusReport {
        config: ConfigEcho {
            label: config.label().to_string(),
            isogeny: config.isogeny().to_string(),
            subgroup: config.subgroup().to_vec(),
            q: frob.q(),
            p: frob.p(),
            twist: twist.to_string(),
            rho: frob.rho().as_slice().to_vec(),
        },
        classes: census.classes.iter().map(ClassSummary::from).collect(),
        counts: CountsBlock {
            geometric_total: c.geometric_total,
            connected: c.connected,
            n_disconnected: c.n_disconnected,
            rational_total: c.rational_total,
            pprime_char_total: c.pprime_char_total,
            by_component_order: c.by_component_order.clone(),
        },
        theta: ThetaBlock {
            points: census.theta.points.len(),
            orbits: census.theta.orbits.len(),
            closed: census.theta.closed,
            hypotheses: census.theta.hypotheses,
            strata: census
                .theta
                .strata
                .iter()
                .map(|s| StratumBlock {
                    node: s.node,
                    dim: s.dim,
                    orbits: s.orbits,
                    distinct_fixed_points: s.s_size,
                    enforced: s.enforced,
                })
                .collect(),
        },
        disconnected_check: DisconnectedBlock {
            expected: census.table3.expected,
            actual: census.table3.actual,
            not_applicable: census.table3.reason.clone(),
        },
        d_odd: census.d_odd.as_ref().map(|d| DOddBlock {
            q_mod_4: d.q_mod_4,
            closed_form: d.closed_form,
            rational_total: d.actual,
            agrees: d.agrees,
            pprime_closed_form: d.pprime_closed_form,
            pprime_char_total: d.pprime_actual,
            pprime_agrees: d.pprime_agrees,
            implied_by_component_order: d.implied_by_order.clone(),
        }),
        warnings: census.warnings.clone(),
    }
}

/// Class table as TSV followed by `#`-prefixed count lines.
pub fn census_tsv(report: &CensusReport) -> String {
    let mut out = String::from(
        "rep\taffine\ti_lambda\tcentralizer\ttorus_rank\tcomp_group\tfixed_count\th1_count\n",
    );
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    for c in &report.classes {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            c.rep.join(","),
            c.affine.join(","),
            list(&c.i_lambda),
            c.centralizer,
            c.torus_rank,
            list(&c.comp_group),
            c.fixed_count,
            c.h1_count
        ));
    }
    let k = &report.counts;
    for (name, value) in [
        ("geometric_total", k.geometric_total),
        ("connected", k.connected),
        ("n_disconnected", k.n_disconnected),
        ("rational_total", k.rational_total),
        ("pprime_char_total", k.pprime_char_total),
    ] {
        out.push_str(&format!("# {name}\t{value}\n"));
    }
    for w in &report.warnings {
        out.push_str(&format!("# warning\t{w}\n"));
    }
    out
}
