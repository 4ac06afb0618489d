//! Named verification suites. Each check is reported on its own line.

use std::fmt;
use std::str::FromStr;

use brauer_core::brauer::{self, checked_power, prime_power};
use brauer_core::census::{self, GroupConfig};
use brauer_core::linalg;
use brauer_core::oracle::{self, GroupKind, SmallGroupSpec};
use brauer_core::rootdata::format_components;
use brauer_core::{AffineDatum, Error, Family, FrobeniusConfig, Result, TypeLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    Table3,
    Steinberg,
    Alovefixe,
    E6e7,
    DOdd,
    Oracle,
    Theta,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "table1",
        "table2",
        "table3",
        "steinberg",
        "alovefixe",
        "e6e7",
        "d-odd",
        "oracle",
        "theta",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "table1" => Suite::Table1,
            "table2" => Suite::Table2,
            "table3" => Suite::Table3,
            "steinberg" => Suite::Steinberg,
            "alovefixe" => Suite::Alovefixe,
            "e6e7" => Suite::E6e7,
            "d-odd" => Suite::DOdd,
            "oracle" => Suite::Oracle,
            "theta" => Suite::Theta,
            "all" => Suite::All,
            _ => {
                return Err(format!(
                    "unknown suite `{s}`; expected one of {}",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Table1,
            Suite::Table2,
            Suite::Table3,
            Suite::Steinberg,
            Suite::Alovefixe,
            Suite::E6e7,
            Suite::DOdd,
            Suite::Oracle,
            Suite::Theta,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Limits on what a suite enumerates.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest `q` tried by grid suites; each suite has its own default.
    pub max_q: Option<u64>,
    /// Restricts suites to these types when given.
    pub types: Option<Vec<TypeLabel>>,
    pub max_subalcoves: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_q: None,
            types: None,
            max_subalcoves: brauer::DEFAULT_MAX_SUBALCOVES,
        }
    }
}

impl Bounds {
    fn wants(&self, label: &str) -> bool {
        let label: TypeLabel = label.parse().expect("suite labels are valid");
        self.types.as_ref().is_none_or(|t| t.contains(&label))
    }

    fn q_ok(&self, q: u64, default: u64) -> bool {
        q <= self.max_q.unwrap_or(default)
    }
}

/// Outcome of one check. `pass == None` marks an informational line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub pass: Option<bool>,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.pass {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "INFO",
        };
        write!(
            f,
            "{status}\t{}\t{}\t{}",
            self.suite, self.name, self.detail
        )
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            pass: Some(pass),
            detail: detail.into(),
        });
    }

    fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            pass: None,
            detail: detail.into(),
        });
    }

    /// Records an error from the library as a failed check.
    fn guard<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, false, e.to_string());
                None
            }
        }
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Vec<Check> {
    if suite == Suite::All {
        return [
            Suite::Table1,
            Suite::Table2,
            Suite::Table3,
            Suite::Steinberg,
            Suite::Alovefixe,
            Suite::E6e7,
            Suite::DOdd,
            Suite::Oracle,
            Suite::Theta,
        ]
        .iter()
        .flat_map(|&s| run(s, bounds))
        .collect();
    }
    let mut r = Recorder {
        suite,
        checks: Vec::new(),
    };
    match suite {
        Suite::Table1 => table1(&mut r, bounds),
        Suite::Table2 => table2(&mut r, bounds),
        Suite::Table3 => table3(&mut r, bounds),
        Suite::Steinberg => steinberg(&mut r, bounds),
        Suite::Alovefixe => alovefixe(&mut r, bounds),
        Suite::E6e7 => e6e7(&mut r, bounds),
        Suite::DOdd => d_odd(&mut r, bounds),
        Suite::Oracle => oracle_suite(&mut r, bounds),
        Suite::Theta => theta(&mut r, bounds),
        Suite::All => unreachable!(),
    }
    r.checks
}

const TABLE1_TYPES: [&str; 24] = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4",
    "D5", "D6", "D7", "E6", "E7", "E8", "F4", "G2",
];

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `dim V_α` from the closed forms of the invariant-space table.
pub fn table1_dim(label: TypeLabel, node: usize) -> Option<usize> {
    let n = label.rank();
    if node == 0 {
        return Some(n);
    }
    Some(match (label.family(), node) {
        (Family::A, k) => gcd(k, n + 1) - 1,
        (Family::B, 1) => n - 1,
        (Family::C, k) if k == n => n / 2,
        (Family::D, 1) => n - 2,
        (Family::D, k) if k + 1 >= n && n % 2 == 1 => (n - 3) / 2,
        (Family::D, k) if k + 1 >= n => n / 2,
        (Family::E, 1 | 6) if n == 6 => 2,
        (Family::E, 7) if n == 7 => 4,
        _ => return None,
    })
}

fn table1(r: &mut Recorder, b: &Bounds) {
    for label in TABLE1_TYPES.iter().filter(|l| b.wants(l)) {
        let Some(aff) = r.guard(label, AffineDatum::from_label(label)) else {
            continue;
        };
        for &z in aff.fundamental_group().elements() {
            let name = format!("{label} z{z}");
            let Some(space) = r.guard(&name, aff.invariant_space(z)) else {
                continue;
            };
            let expected = table1_dim(aff.datum().label(), z);
            r.check(
                name,
                expected == Some(space.dim()),
                format!("dim {} expected {:?}", space.dim(), expected),
            );
        }
    }
}

/// `(type, node β, d, expected I_λ type)` for the point `ω_β^∨ / d`.
const TABLE2: [(&str, usize, i64, &str); 14] = [
    ("B2", 2, 2, "A1×A1"),
    ("B3", 2, 2, "A1×A1×A1"),
    ("B4", 2, 2, "B2×A1×A1"),
    ("B5", 2, 2, "B3×A1×A1"),
    ("C2", 1, 2, "A1×A1"),
    ("C3", 3, 2, "A2"),
    ("C4", 2, 2, "C2×C2"),
    ("C5", 5, 2, "A4"),
    ("C6", 3, 2, "C3×C3"),
    ("D4", 2, 2, "A1×A1×A1×A1"),
    ("D6", 3, 2, "D3×D3"),
    ("D8", 4, 2, "D4×D4"),
    ("E6", 4, 3, "A2×A2×A2"),
    ("E7", 2, 2, "A7"),
];

fn table2(r: &mut Recorder, b: &Bounds) {
    for &(label, node, den, expected) in TABLE2.iter().filter(|t| b.wants(t.0)) {
        let name = format!("{label} ω{node}/{den}");
        let Some(aff) = r.guard(&name, AffineDatum::from_label(label)) else {
            continue;
        };
        let point = aff.point(linalg::scale(&aff.coweight(node), &linalg::frac(1, den)));
        let fixers: Vec<usize> = aff
            .fundamental_group()
            .elements()
            .iter()
            .copied()
            .filter(|&z| {
                z != 0
                    && aff
                        .f_map(z)
                        .map(|f| f.apply(point.coords()) == point.coords())
                        .unwrap_or(false)
            })
            .collect();
        let Some(types) = r.guard(&name, aff.datum().subdiagram_type(&point.zero_nodes())) else {
            continue;
        };
        let got = format_components(&types);
        r.check(
            name,
            !fixers.is_empty() && got == expected,
            format!("I_λ {got} expected {expected}; fixed by f_z for z in {fixers:?}"),
        );
    }
}

fn census_for(
    r: &mut Recorder,
    name: &str,
    label: &str,
    iso: &str,
    q: u64,
    twisted: bool,
    b: &Bounds,
) -> Option<census::Census> {
    let cfg = r.guard(name, GroupConfig::from_parts(label, iso, q, twisted, false))?;
    r.guard(name, census::run(&cfg, b.max_subalcoves))
}

fn table3(r: &mut Recorder, b: &Bounds) {
    let rows: [(&str, u64, bool, u64); 10] = [
        ("A2", 5, false, 1),
        ("A2", 7, false, 1),
        ("A4", 2, false, 1),
        ("B2", 3, false, 3),
        ("B3", 5, false, 25),
        ("C3", 3, false, 3),
        ("C4", 3, false, 9),
        ("E6", 2, false, 4),
        ("E6", 2, true, 4),
        ("E7", 3, false, 81),
    ];
    for &(label, q, twisted, expected) in rows.iter().filter(|t| b.wants(t.0) && b.q_ok(t.1, 7)) {
        let name = format!("{label} ad q={q}{}", if twisted { " twisted" } else { "" });
        if let Some(c) = census_for(r, &name, label, "ad", q, twisted, b) {
            r.check(
                name,
                c.counts.n_disconnected == expected && c.table3.expected == Some(expected),
                format!(
                    "n_disconnected {} expected {expected}",
                    c.counts.n_disconnected
                ),
            );
        }
    }
}

/// Configurations of a grid: every type with `q^rank` within the cap, split
/// and (where it exists) twisted, simply connected and adjoint.
fn grid(
    b: &Bounds,
    types: &[&str],
    default_max_q: u64,
    cap: u64,
) -> Vec<(String, u64, bool, String)> {
    let mut out = Vec::new();
    for label in types.iter().filter(|l| b.wants(l)) {
        let aff = AffineDatum::from_label(label).expect("valid label");
        for q in (2..=b.max_q.unwrap_or(default_max_q)).filter(|&q| prime_power(q).is_some()) {
            if checked_power(q, aff.rank()).is_none_or(|n| n > cap) {
                continue;
            }
            for twisted in [false, true] {
                if twisted && FrobeniusConfig::twisted(&aff, q, false).is_err() {
                    continue;
                }
                for iso in ["sc", "ad"] {
                    out.push((label.to_string(), q, twisted, iso.to_string()));
                }
            }
        }
    }
    out
}

fn steinberg(r: &mut Recorder, b: &Bounds) {
    let types = [
        "A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5", "E6", "F4", "G2",
    ];
    for (label, q, twisted, iso) in grid(b, &types, 5, 1024) {
        let name = format!(
            "{label} {iso} q={q}{}",
            if twisted { " twisted" } else { "" }
        );
        if let Some(c) = census_for(r, &name, &label, &iso, q, twisted, b) {
            let k = &c.counts;
            let target = checked_power(q, label[1..].parse().expect("rank")).expect("bounded");
            r.check(
                name,
                k.connected + k.n_disconnected == target && k.geometric_total == target,
                format!("c1 {} + c2 {} = {}", k.connected, k.n_disconnected, target),
            );
        }
    }
}

/// The enumeration grid: `(type, largest q)`.
const ENUMERATION_GRID: [(&str, u64); 11] = [
    ("A1", 9),
    ("A2", 7),
    ("B3", 5),
    ("C3", 5),
    ("D4", 3),
    ("G2", 3),
    ("F4", 3),
    ("E6", 3),
    ("E7", 3),
    ("E8", 2),
    ("A3", 4),
];

fn alovefixe(r: &mut Recorder, b: &Bounds) {
    for &(label, top) in ENUMERATION_GRID.iter().filter(|t| b.wants(t.0)) {
        let Some(aff) = r.guard(label, AffineDatum::from_label(label)) else {
            continue;
        };
        for q in (2..=top.min(b.max_q.unwrap_or(top))).filter(|&q| prime_power(q).is_some()) {
            let name = format!("{label} q={q}");
            let Some(frob) = r.guard(&name, FrobeniusConfig::split(&aff, q)) else {
                continue;
            };
            let Some(complex) = r.guard(
                &name,
                brauer::enumerate_subalcoves(&aff, &frob, b.max_subalcoves),
            ) else {
                continue;
            };
            let size = checked_power(q, aff.rank()).expect("enumerated") as usize;
            r.check(
                format!("{name} |E_q|"),
                complex.len() == size,
                format!("{} sub-alcoves", complex.len()),
            );
            for &z in aff.fundamental_group().elements() {
                let name = format!("{name} z{z}");
                let Some(found) = r.guard(&name, brauer::m_alpha(&aff, &complex, z)) else {
                    continue;
                };
                let Some(wall) = r.guard(&name, aff.hyperplane_containment(z, q)) else {
                    continue;
                };
                let Some(space) = r.guard(&name, aff.invariant_space(z)) else {
                    continue;
                };
                let expected = if wall.is_some() {
                    0
                } else {
                    checked_power(q, space.dim()).expect("small") as usize
                };
                r.check(
                    name,
                    found.len() == expected,
                    format!(
                        "|M| {} expected {expected} (dim V {}, in hyperplane: {})",
                        found.len(),
                        space.dim(),
                        wall.is_some()
                    ),
                );
            }
        }
    }
}

fn e6e7(r: &mut Recorder, b: &Bounds) {
    for (label, q, twisted, expected) in [("E6", 2, true, 72), ("E7", 3, false, 2268)] {
        if !b.wants(label) {
            continue;
        }
        let name = format!("{label} ad q={q}{}", if twisted { " twisted" } else { "" });
        if let Some(c) = census_for(r, &name, label, "ad", q, twisted, b) {
            r.check(
                name,
                c.counts.rational_total == expected,
                format!(
                    "rational_total {} expected {expected}",
                    c.counts.rational_total
                ),
            );
        }
    }
    if b.wants("E6") {
        if let Some(c) = census_for(r, "E6 ad q=2 split", "E6", "ad", 2, false, b) {
            r.info(
                "E6 ad q=2 split",
                format!(
                    "rational_total {} (the central action is nontrivial here)",
                    c.counts.rational_total
                ),
            );
        }
    }
}

fn d_odd(r: &mut Recorder, b: &Bounds) {
    let configs: Vec<(&str, u64)> = [("D5", 5), ("D5", 3), ("D3", 3), ("D3", 5)]
        .into_iter()
        .filter(|&(l, q)| b.wants(l) && b.q_ok(q, 5))
        .collect();
    for (label, q) in configs {
        let name = format!("{label} ad q={q}");
        let Some(c) = census_for(r, &name, label, "ad", q, false, b) else {
            continue;
        };
        let rank: usize = label[1..].parse().expect("rank");
        let target = checked_power(q, rank).expect("small");
        let k = &c.counts;
        r.check(
            format!("{name} steinberg"),
            k.connected + k.n_disconnected == target,
            format!("c1 {} + c2 {} = {target}", k.connected, k.n_disconnected),
        );
        if c.theta.hypotheses {
            r.check(
                format!("{name} theta orbits"),
                c.theta.orbits.len() as u64 == target,
                format!("{} orbits", c.theta.orbits.len()),
            );
            for s in &c.theta.strata {
                let expected = checked_power(q, s.dim).expect("small") as usize;
                r.check(
                    format!("{name} stratum z{}", s.node),
                    s.orbits == expected,
                    format!("{} orbits, q^dim V = {expected}", s.orbits),
                );
            }
        } else {
            r.info(
                format!("{name} theta"),
                format!("q ≢ 1 mod 4; {} orbits, not enforced", c.theta.orbits.len()),
            );
        }
        if let Some(d) = &c.d_odd {
            r.info(
                format!("{name} closed form"),
                format!(
                    "q ≡ {} mod 4: rational_total {} vs {} ({}); p'-characters {} vs {} ({}); by |A(λ)| {:?} vs implied {:?}",
                    d.q_mod_4,
                    d.actual,
                    d.closed_form,
                    if d.agrees { "agrees" } else { "differs" },
                    d.pprime_actual,
                    d.pprime_closed_form,
                    if d.pprime_agrees { "agrees" } else { "differs" },
                    k.by_component_order,
                    d.implied_by_order
                ),
            );
        }
    }
}

fn oracle_suite(r: &mut Recorder, b: &Bounds) {
    // Semisimple classes of G^F against the census of G; p'-characters of
    // G^F against the census of the dual isogeny type.
    let pairs: [(&str, &str, GroupKind, GroupKind); 2] = [
        ("A1", "sc", GroupKind::SL2, GroupKind::PGL2),
        ("A1", "ad", GroupKind::PGL2, GroupKind::SL2),
    ];
    for (label, iso, kind, dual) in pairs {
        if !b.wants(label) {
            continue;
        }
        for q in [3, 5, 7].into_iter().filter(|&q| b.q_ok(q, 7)) {
            let name = format!("{label} {iso} q={q}");
            let Some(c) = census_for(r, &name, label, iso, q, false, b) else {
                continue;
            };
            let Some(spec) = r.guard(&name, SmallGroupSpec::new(kind, q)) else {
                continue;
            };
            if let Some(n) = r.guard(&name, oracle::semisimple_class_count(&spec)) {
                r.check(
                    format!("{name} classes"),
                    n as u64 == c.counts.rational_total,
                    format!("census {} {kind}({q}) {n}", c.counts.rational_total),
                );
            }
            let Some(dual_spec) = r.guard(&name, SmallGroupSpec::new(dual, q)) else {
                continue;
            };
            if let Some(n) = r.guard(&name, oracle::pprime_character_count(&dual_spec)) {
                r.check(
                    format!("{name} p'-characters"),
                    n as u64 == c.counts.pprime_char_total,
                    format!("census {} {dual}({q}) {n}", c.counts.pprime_char_total),
                );
            }
        }
    }
    if b.wants("A2") {
        for (iso, kind) in [("sc", GroupKind::SL3), ("ad", GroupKind::PGL3)] {
            for q in [2, 3, 4].into_iter().filter(|&q| b.q_ok(q, 7)) {
                let name = format!("A2 {iso} q={q}");
                let Some(c) = census_for(r, &name, "A2", iso, q, false, b) else {
                    continue;
                };
                let Some(spec) = r.guard(&name, SmallGroupSpec::new(kind, q)) else {
                    continue;
                };
                if let Some(n) = r.guard(&name, oracle::semisimple_class_count(&spec)) {
                    r.check(
                        format!("{name} classes"),
                        n as u64 == c.counts.rational_total,
                        format!("census {} {kind}({q}) {n}", c.counts.rational_total),
                    );
                }
            }
        }
    }
    // Adjoint type A_n against PGL_{n+1}(q) counted by characteristic polynomials.
    for label in ["A1", "A2", "A3", "A4"].into_iter().filter(|l| b.wants(l)) {
        let rank: usize = label[1..].parse().expect("rank");
        for q in (2..=b.max_q.unwrap_or(5)).filter(|&q| prime_power(q).is_some() && q <= 9) {
            if checked_power(q, rank).is_none_or(|n| n > 1024) {
                continue;
            }
            let name = format!("{label} ad q={q}");
            let Some(c) = census_for(r, &name, label, "ad", q, false, b) else {
                continue;
            };
            if let Some(n) = r.guard(&name, oracle::pgl_semisimple_class_count(rank + 1, q)) {
                r.check(
                    format!("{name} PGL{} polynomials", rank + 1),
                    n as u64 == c.counts.rational_total,
                    format!("census {} oracle {n}", c.counts.rational_total),
                );
            }
        }
    }
}

fn theta(r: &mut Recorder, b: &Bounds) {
    for (label, q, twisted) in [("A2", 7, false), ("A2", 5, true), ("E6", 2, true)] {
        if !b.wants(label) {
            continue;
        }
        let name = format!("{label} ad q={q}{}", if twisted { " twisted" } else { "" });
        let Some(cfg) = r.guard(
            &name,
            GroupConfig::from_parts(label, "ad", q, twisted, false),
        ) else {
            continue;
        };
        let aff = cfg.affine();
        let Some(complex) = r.guard(
            &name,
            brauer::enumerate_subalcoves(aff, cfg.frobenius(), b.max_subalcoves),
        ) else {
            continue;
        };
        let Some(t) = r.guard(
            &name,
            brauer::theta(aff, cfg.frobenius(), &complex, cfg.subgroup()),
        ) else {
            continue;
        };
        let target = checked_power(q, aff.rank()).expect("small") as usize;
        r.check(
            format!("{name} orbits"),
            t.hypotheses && t.orbits.len() == target,
            format!("{} orbits of {} points", t.orbits.len(), t.points.len()),
        );
        for s in &t.strata {
            let expected = checked_power(q, s.dim).expect("small") as usize;
            r.check(
                format!("{name} stratum z{}", s.node),
                s.orbits == expected,
                format!("{} orbits, q^dim V = {expected}", s.orbits),
            );
        }
    }
}

/// Parses a comma-separated type list.
pub fn parse_types(s: &str) -> Result<Vec<TypeLabel>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse())
        .collect::<std::result::Result<_, Error>>()
}
