//! One function per subcommand, each returning the command-specific part
//! of the payload and whether the answer was a negative finding.

use std::collections::BTreeMap;

use gassmann_core::arith::{
    chebotarev_consistency, compare_decompositions, decomposition_type, inert_density, sturm_signature, Decomposition,
    IntPolynomial,
};
use gassmann_core::gassmann::{
    enumerate_gassmann_triples, excluded_prime, is_gassmann_triple, is_solitary_bruteforce, theorem1_criterion,
    Exclusion,
};
use gassmann_core::structure::{block_systems, ell_cycle_closure_report, is_primitive};
use gassmann_core::{CycleType, ElemId, PermGroup, Subgroup};
use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::args::{Command, CriterionCommand, GassmannCommand, GroupCommand, NfCommand, StructureCommand};
use crate::input::{load_action, load_group, load_poly, load_subgroup, Caps};
use crate::CliError;

/// Largest accepted prime bound; the sieve holds one byte per integer.
const MAX_BOUND: u64 = 100_000_000;
const CHEBOTAREV_TOLERANCE: (u64, u64) = (1, 20);

pub struct Outcome {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub fields: Map<String, Value>,
    pub negative: bool,
}

impl Outcome {
    fn new(command: &str) -> Self {
        Outcome {
            command: command.to_string(),
            inputs: Map::new(),
            fields: Map::new(),
            negative: false,
        }
    }

    fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }
}

fn cycle_type(ct: &CycleType) -> Value {
    json!(ct.parts())
}

/// `{num, den, decimal}` without reducing the fraction.
pub fn fraction(num: u64, den: u64) -> Value {
    let decimal = if den == 0 {
        "nan".to_string()
    } else {
        format!("{:.4}", num as f64 / den as f64)
    };
    json!({ "num": num, "den": den, "decimal": decimal })
}

fn one_based(points: &[u32]) -> String {
    let inner: Vec<String> = points.iter().map(|p| (p + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A short generating set: the stored one when it is small, otherwise
/// members picked greedily in id order.
fn short_generators(g: &PermGroup, h: &Subgroup) -> Vec<ElemId> {
    let stored = h.generators();
    if stored.len() <= 3 && !stored.contains(&g.identity_id()) {
        return stored.to_vec();
    }
    let mut picked: Vec<ElemId> = Vec::new();
    let mut span = g.trivial_subgroup();
    for &x in h.members() {
        if span.order() == h.order() {
            break;
        }
        if !span.contains(x) {
            picked.push(x);
            span = g.subgroup_generated_by_ids(&picked);
        }
    }
    picked
}

fn generator_list(g: &PermGroup, h: &Subgroup) -> String {
    let gens: Vec<String> = short_generators(g, h)
        .iter()
        .map(|&x| g.element(x).to_string())
        .collect();
    if gens.is_empty() {
        "()".to_string()
    } else {
        gens.join(", ")
    }
}

fn check_bound(bound: u64) -> Result<(), CliError> {
    if !(100..=MAX_BOUND).contains(&bound) {
        return Err(CliError::Input(format!("--bound must be between 100 and {MAX_BOUND}")));
    }
    Ok(())
}

pub fn execute(command: Command, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        Command::Group(c) => group(c, caps),
        Command::Gassmann(c) => gassmann(c, caps),
        Command::Criterion(CriterionCommand::Scan { group, action }) => {
            let g = load_group(&group.group, caps)?;
            let omega = load_action(&g, action.h1.as_deref())?;
            let mut out = Outcome::new("criterion scan").input("group", group.group.as_str());
            if let Some(h1) = &action.h1 {
                out = out.input("h1", h1.as_str());
            }
            out.set("degree", omega.degree());
            match theorem1_criterion(&omega)? {
                Some(w) => out.set(
                    "witness",
                    json!({
                        "condition": w.condition.as_str(),
                        "element": w.element.to_string(),
                        "cycle_type": cycle_type(&w.cycle_type),
                        "ell": w.ell,
                    }),
                ),
                None => {
                    out.set("witness", Value::Null);
                    out.negative = true;
                }
            }
            Ok(out)
        }
        Command::ExcludedPrime { ell } => {
            let mut out = Outcome::new("excluded-prime").input("ell", ell);
            out.set("ell", ell);
            match excluded_prime(ell)? {
                Some(Exclusion::Eleven) => {
                    out.set("excluded", true);
                    out.set("reason", "eleven");
                    out.set("q", Value::Null);
                    out.set("k", Value::Null);
                }
                Some(Exclusion::ProjectiveCount { q, k }) => {
                    out.set("excluded", true);
                    out.set("reason", "(q^k - 1)/(q - 1)");
                    out.set("q", q);
                    out.set("k", k);
                }
                None => {
                    out.set("excluded", false);
                    out.set("reason", Value::Null);
                    out.set("q", Value::Null);
                    out.set("k", Value::Null);
                    out.negative = true;
                }
            }
            Ok(out)
        }
        Command::Structure(c) => structure(c, caps),
        Command::Nf(c) => nf(c, caps),
    }
}

fn group(command: GroupCommand, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        GroupCommand::Info(arg) => {
            let g = load_group(&arg.group, caps)?;
            let mut out = Outcome::new("group info").input("group", arg.group.as_str());
            out.set("name", g.name.as_str());
            out.set("degree", g.group.degree());
            out.set("order", g.group.order());
            out.set(
                "generators",
                g.group.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            );
            out.set("class_count", g.group.conjugacy_classes().len());
            let subs: Vec<Value> = g
                .subgroups
                .iter()
                .map(|(name, h)| {
                    json!({
                        "name": name,
                        "order": h.order(),
                        "index": g.group.order() / h.order(),
                        "generators": generator_list(&g.group, h),
                    })
                })
                .collect();
            out.set("subgroups", subs);
            Ok(out)
        }
        GroupCommand::Classes(arg) => {
            let g = load_group(&arg.group, caps)?;
            let mut out = Outcome::new("group classes").input("group", arg.group.as_str());
            let classes: Vec<Value> = g
                .group
                .conjugacy_classes()
                .iter()
                .map(|c| {
                    json!({
                        "order": c.element_order,
                        "size": c.size(),
                        "representative": c.representative.to_string(),
                        "cycle_type": cycle_type(&c.representative.cycle_type()),
                    })
                })
                .collect();
            out.set("classes", classes);
            Ok(out)
        }
        GroupCommand::Subgroups { group, index } => {
            let g = load_group(&group.group, caps)?;
            let mut out = Outcome::new("group subgroups").input("group", group.group.as_str());
            let order = g.group.order();
            let subgroups = match index {
                Some(i) => {
                    out = out.input("index", i);
                    if i == 0 || order % i != 0 {
                        return Err(gassmann_core::Error::NotADivisor { m: i, order }.into());
                    }
                    g.group.subgroups_of_order(order / i, caps.subgroups)?
                }
                None => g.group.subgroups_dividing(order, caps.subgroups)?,
            };
            let labels = g.group.subgroup_conjugacy_labels(&subgroups);
            let mut classes: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
            for (i, &l) in labels.iter().enumerate() {
                classes.entry(l).or_insert((i, 0)).1 += 1;
            }
            let mut rows: Vec<(usize, usize, Value)> = classes
                .values()
                .map(|&(rep, count)| {
                    let h = &subgroups[rep];
                    (
                        h.order(),
                        rep,
                        json!({
                            "order": h.order(),
                            "index": order / h.order(),
                            "conjugates": count,
                            "generators": generator_list(&g.group, h),
                        }),
                    )
                })
                .collect();
            rows.sort_by_key(|r| (r.0, r.1));
            out.set("total", subgroups.len());
            out.set("class_count", rows.len());
            out.set("subgroups", rows.into_iter().map(|r| r.2).collect::<Vec<_>>());
            Ok(out)
        }
    }
}

fn gassmann(command: GassmannCommand, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        GassmannCommand::Check { group, h1, h2 } => {
            let g = load_group(&group.group, caps)?;
            let (a, b) = (load_subgroup(&g, &h1)?, load_subgroup(&g, &h2)?);
            let mut out = Outcome::new("gassmann check")
                .input("group", group.group.as_str())
                .input("h1", h1.as_str())
                .input("h2", h2.as_str());
            let report = is_gassmann_triple(&g.group, &a, &b)?;
            out.set("gassmann", report.gassmann);
            out.set("conjugate", report.trivial);
            out.set("witness", report.conjugating_witness.map(|w| w.to_string()));
            out.set(
                "index",
                json!([g.group.order() / a.order(), g.group.order() / b.order()]),
            );
            out.set(
                "profiles",
                json!({ "h1": report.intersection_profiles[0], "h2": report.intersection_profiles[1] }),
            );
            out.negative = report.gassmann && !report.trivial;
            Ok(out)
        }
        GassmannCommand::Enumerate { group, index } => {
            let g = load_group(&group.group, caps)?;
            let mut out = Outcome::new("gassmann enumerate")
                .input("group", group.group.as_str())
                .input("index", index);
            let triples = enumerate_gassmann_triples(&g.group, index, caps.subgroups)?;
            let rows: Vec<Value> = triples
                .iter()
                .map(|t| {
                    json!({
                        "order": t.h1.order(),
                        "h1": generator_list(&g.group, &t.h1),
                        "h2": generator_list(&g.group, &t.h2),
                        "class_sizes": [t.class_sizes.0, t.class_sizes.1],
                    })
                })
                .collect();
            out.negative = !rows.is_empty();
            out.set("index", index);
            out.set("triples", rows);
            Ok(out)
        }
        GassmannCommand::Solitary { group, h1 } => {
            let g = load_group(&group.group, caps)?;
            let h = load_subgroup(&g, &h1)?;
            let mut out = Outcome::new("gassmann solitary")
                .input("group", group.group.as_str())
                .input("h1", h1.as_str());
            let solitary = is_solitary_bruteforce(&g.group, &h, caps.subgroups)?;
            out.set("index", g.group.order() / h.order());
            out.set("solitary", solitary);
            out.negative = !solitary;
            Ok(out)
        }
    }
}

fn structure(command: StructureCommand, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        StructureCommand::Blocks { group, action } => {
            let g = load_group(&group.group, caps)?;
            let omega = load_action(&g, action.h1.as_deref())?;
            let mut out = Outcome::new("structure blocks").input("group", group.group.as_str());
            if let Some(h1) = &action.h1 {
                out = out.input("h1", h1.as_str());
            }
            out.set("degree", omega.degree());
            out.set("primitive", is_primitive(&omega)?.is_none());
            let systems: Vec<Value> = block_systems(&omega)?
                .iter()
                .filter(|s| !s.is_trivial())
                .map(|s| {
                    let blocks: Vec<String> = s.blocks.iter().map(|b| one_based(b)).collect();
                    json!({ "block_size": s.block_size, "blocks": blocks.join(" ") })
                })
                .collect();
            out.set("systems", systems);
            Ok(out)
        }
        StructureCommand::ClosureReport { group, action, ell } => {
            let g = load_group(&group.group, caps)?;
            let omega = load_action(&g, action.h1.as_deref())?;
            let mut out = Outcome::new("structure closure-report")
                .input("group", group.group.as_str())
                .input("ell", ell);
            if let Some(h1) = &action.h1 {
                out = out.input("h1", h1.as_str());
            }
            let report = ell_cycle_closure_report(&omega, ell)?;
            out.set("ell", ell);
            out.set("t", report.t);
            out.set("branch", report.branch.as_str());
            out.set("closure_order", report.normal_closure.order());
            let orbits: Vec<String> = report.orbits.iter().map(|o| one_based(o)).collect();
            out.set("orbits", orbits);
            out.set(
                "factor_orders",
                report.factors.iter().map(|f| f.order()).collect::<Vec<_>>(),
            );
            Ok(out)
        }
    }
}

fn with_poly(out: Outcome, spec: &str, f: &IntPolynomial) -> Outcome {
    let mut out = out.input("poly", spec);
    out.set("polynomial", f.to_string());
    out
}

fn nf(command: NfCommand, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        NfCommand::Decomposition { poly, prime } => {
            let f = load_poly(&poly.poly)?;
            let mut out = with_poly(Outcome::new("nf decomposition"), &poly.poly, &f).input("prime", prime);
            let d = decomposition_type(&f, prime)?;
            out.set("prime", prime);
            out.set("ramified", d == Decomposition::Ramified);
            out.set("type", d.residue_degrees().map(cycle_type));
            out.set("inert", d.is_inert());
            Ok(out)
        }
        NfCommand::Density { poly, bound } => {
            check_bound(bound)?;
            let f = load_poly(&poly.poly)?;
            let mut out = with_poly(Outcome::new("nf density"), &poly.poly, &f).input("bound", bound);
            let d = inert_density(&f, bound)?;
            out.set("bound", bound);
            out.set("inert", fraction(d.inert, d.unramified));
            Ok(out)
        }
        NfCommand::Signature { poly } => {
            let f = load_poly(&poly.poly)?;
            let mut out = with_poly(Outcome::new("nf signature"), &poly.poly, &f);
            let s = sturm_signature(&f)?;
            out.set("real_places", s.real_places);
            out.set("complex_places", s.complex_places);
            Ok(out)
        }
        NfCommand::Compare { poly, bound } => {
            check_bound(bound)?;
            if poly.len() != 2 {
                return Err(CliError::Input(format!(
                    "nf compare needs exactly two --poly, got {}",
                    poly.len()
                )));
            }
            let f1 = load_poly(&poly[0])?;
            let f2 = load_poly(&poly[1])?;
            let mut out = Outcome::new("nf compare")
                .input("poly", poly.clone())
                .input("bound", bound);
            let r = compare_decompositions(&f1, &f2, bound)?;
            out.set("polynomials", vec![f1.to_string(), f2.to_string()]);
            out.set("bound", bound);
            out.set("agree", r.agree);
            out.set("compared", r.compared);
            out.set("skipped_ramified", r.skipped_ramified);
            out.set(
                "first_disagreement",
                r.first_disagreement.map(|d| {
                    json!({
                        "prime": d.prime,
                        "first": cycle_type(&d.first),
                        "second": cycle_type(&d.second),
                    })
                }),
            );
            out.negative = !r.agree;
            Ok(out)
        }
        NfCommand::Chebotarev {
            group,
            action,
            poly,
            bound,
        } => {
            check_bound(bound)?;
            let f = load_poly(&poly.poly)?;
            let g = load_group(&group.group, caps)?;
            let omega = load_action(&g, action.h1.as_deref())?;
            let mut out = with_poly(Outcome::new("nf chebotarev"), &poly.poly, &f)
                .input("group", group.group.as_str())
                .input("bound", bound);
            if let Some(h1) = &action.h1 {
                out = out.input("h1", h1.as_str());
            }
            let tolerance = Ratio::new(CHEBOTAREV_TOLERANCE.0, CHEBOTAREV_TOLERANCE.1);
            let r = chebotarev_consistency(&omega, &f, bound, tolerance)?;
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "cycle_type": cycle_type(&row.cycle_type),
                        "observed": fraction(row.observed, r.unramified),
                        "expected": fraction(row.elements, r.group_order),
                        "within_tolerance": row.within_tolerance,
                    })
                })
                .collect();
            out.set("bound", bound);
            out.set("group_order", r.group_order);
            out.set("unramified", r.unramified);
            out.set("tolerance", format!("{}/{}", tolerance.numer(), tolerance.denom()));
            out.set("types", rows);
            out.set("unexplained", r.unexplained.iter().map(cycle_type).collect::<Vec<_>>());
            out.set("consistent", r.consistent);
            out.negative = !r.consistent;
            Ok(out)
        }
    }
}
