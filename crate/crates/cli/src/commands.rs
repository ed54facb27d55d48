use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::json;

use nrt_core::affine::{cycle_index_formula, itp_count_formula, subset_orbit_count, MAX_AFFINE_PRIME, MAX_ORBIT_PRIME};
use nrt_core::group::{core, is_normal, right_cosets, CosetDecomposition};
use nrt_core::suite::{self, CheckReport, SuiteOptions, Verdict};
use nrt_core::zn_b::{criterion_left_nonsingular, families_json, loop_transversal_census, xb_families, znb_right_loop, SubsetB};
use nrt_core::{build_named_group, classify as classify_loops, enumerate_transversals, FiniteGroup, GroupDescriptor, Relation, Subgroup, Transversal};

use crate::{DihedralArgs, DihedralMode, Format, GlobalOpts, GroupArgs, PairArgs, VerifyArgs};

/// Direct classification of `T(D₂ₚ, {1,x})` runs up to this prime.
const DIRECT_PRIME_LIMIT: usize = 7;

pub struct Report {
    pub text: String,
    pub failed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, failed: false }
    }

    fn json(value: &impl serde::Serialize) -> Result<Self> {
        Ok(Report::ok(serde_json::to_string_pretty(value)? + "\n"))
    }
}

fn load_group(args: &GroupArgs) -> Result<Arc<FiniteGroup>> {
    let desc: GroupDescriptor = args.group.parse()?;
    Ok(Arc::new(build_named_group(&desc)?))
}

struct Pair {
    group: Arc<FiniteGroup>,
    subgroup: Subgroup,
    cosets: Arc<CosetDecomposition>,
}

fn load_pair(args: &PairArgs) -> Result<Pair> {
    let group = load_group(&args.group)?;
    let gens = group.parse_generators(&args.subgroup)?;
    let subgroup = Subgroup::generated(group.clone(), &gens)?;
    let cosets = Arc::new(right_cosets(&group, &subgroup)?);
    Ok(Pair { group, subgroup, cosets })
}

fn enumerate(pair: &Pair, cap: u128) -> Result<Vec<Transversal>> {
    Ok(enumerate_transversals(pair.cosets.clone(), cap)?.collect())
}

fn names(g: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&e| g.name(e).to_string()).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn unsupported(format: Format, what: &str) -> anyhow::Error {
    anyhow::anyhow!("--format {} is not available for {what}", format!("{format:?}").to_lowercase())
}

pub fn group_show(opts: &GlobalOpts, args: &GroupArgs, subgroup: Option<&str>) -> Result<Report> {
    let g = load_group(args)?;
    let h = match subgroup {
        Some(s) => {
            let gens = g.parse_generators(s)?;
            let h = Subgroup::generated(g.clone(), &gens)?;
            let cosets = right_cosets(&g, &h)?;
            Some((h, cosets))
        }
        None => None,
    };
    let element_orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    match opts.format {
        Format::Json => {
            let mut v = json!({
                "group": args.group,
                "order": g.order(),
                "names": g.names(),
                "table": g.table_rows(),
                "element_orders": element_orders,
                "abelian": g.is_abelian(),
                "nilpotent": g.is_nilpotent(),
                "solvable": g.is_solvable(),
            });
            if let Some((h, cosets)) = &h {
                v["subgroup"] = json!({
                    "members": names(&g, h.members()),
                    "order": h.order(),
                    "index": h.index(),
                    "normal": is_normal(h),
                    "core": names(&g, core(h).members()),
                    "cosets": cosets.cosets().iter().map(|c| names(&g, c)).collect::<Vec<_>>(),
                });
            }
            Report::json(&v)
        }
        Format::Csv => {
            let mut out = String::from("index,name,order\n");
            for (i, o) in element_orders.iter().enumerate() {
                let _ = writeln!(out, "{i},{},{o}", csv_field(g.name(i)));
            }
            Ok(Report::ok(out))
        }
        Format::Table => {
            let mut out = format!(
                "group {} of order {}: abelian {}, nilpotent {}, solvable {}\n",
                args.group,
                g.order(),
                g.is_abelian(),
                g.is_nilpotent(),
                g.is_solvable()
            );
            let _ = writeln!(out, "elements: {}", names(&g, &(0..g.order()).collect::<Vec<_>>()).join(" "));
            if let Some((h, cosets)) = &h {
                let _ = writeln!(
                    out,
                    "subgroup {{{}}}: order {}, index {}, normal {}, core {{{}}}",
                    names(&g, h.members()).join(", "),
                    h.order(),
                    h.index(),
                    is_normal(h),
                    names(&g, core(h).members()).join(", ")
                );
                for (i, c) in cosets.cosets().iter().enumerate() {
                    let _ = writeln!(out, "  coset {i}: {{{}}}", names(&g, c).join(", "));
                }
            }
            out.push_str("table:\n");
            out.push_str(&nrt_core::group::write_table_text(&g.table_rows(), Some(g.names())));
            Ok(Report::ok(out))
        }
    }
}

pub fn nrt_enumerate(opts: &GlobalOpts, args: &PairArgs, tables: bool) -> Result<Report> {
    let pair = load_pair(args)?;
    let ts = enumerate(&pair, opts.cap)?;
    let rows: Vec<_> = ts
        .iter()
        .map(|t| {
            let l = t.induced_right_loop();
            (t, l.structure_flags(), l.left_nonsingular_elements(), l)
        })
        .collect();
    match opts.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(id, (t, flags, lns, l))| {
                    let mut v = json!({
                        "id": id,
                        "elements": names(&pair.group, t.reps()),
                        "flags": flags,
                        "left_nonsingular": lns,
                    });
                    if tables {
                        v["table"] = json!(l.rows());
                    }
                    v
                })
                .collect();
            Report::json(&json!({ "group": args.group.group, "subgroup": args.subgroup, "count": ts.len(), "transversals": items }))
        }
        Format::Csv => {
            let mut out = String::from("id,elements,is_loop,is_group,n_left_nonsingular\n");
            for (id, (t, flags, lns, _)) in rows.iter().enumerate() {
                let _ = writeln!(out, "{id},{},{},{},{}", csv_field(&t.display_names()), flags.is_loop, flags.is_group, lns.len());
            }
            Ok(Report::ok(out))
        }
        Format::Table => {
            let mut out = format!("{} transversals of H = ⟨{}⟩ in {}\n", ts.len(), args.subgroup, args.group.group);
            for (id, (t, flags, lns, l)) in rows.iter().enumerate() {
                let kind = if flags.is_group { "group" } else if flags.is_loop { "loop" } else { "right loop" };
                let _ = writeln!(out, "S{}: {}  [{kind}, left non-singular {:?}]", id + 1, t.display_names(), lns);
                if tables {
                    for line in l.to_text().lines().skip(1) {
                        let _ = writeln!(out, "    {line}");
                    }
                }
            }
            Ok(Report::ok(out))
        }
    }
}

pub fn classify(opts: &GlobalOpts, args: &PairArgs, relation: Relation) -> Result<Report> {
    let pair = load_pair(args)?;
    let ts = enumerate(&pair, opts.cap)?;
    let loops: Vec<_> = ts.iter().map(Transversal::induced_right_loop).collect();
    let partition = classify_loops(&loops, relation);
    if !partition.verify(&loops) {
        bail!("internal error: a class witness failed re-verification");
    }
    match opts.format {
        Format::Json => {
            let mut v = serde_json::to_value(partition.to_json(&loops))?;
            v["group"] = json!(args.group.group);
            v["subgroup"] = json!(args.subgroup);
            v["transversal_count"] = json!(ts.len());
            v["class_count"] = json!(partition.len());
            v["transversals"] = json!(ts.iter().map(Transversal::display_names).collect::<Vec<_>>());
            Report::json(&v)
        }
        Format::Csv => Ok(Report::ok(partition.to_csv(&loops))),
        Format::Table => {
            let mut out = format!(
                "{} transversals of H = ⟨{}⟩ in {} (order {}, index {})\n{} {} classes\n",
                ts.len(),
                args.subgroup,
                args.group.group,
                pair.group.order(),
                pair.subgroup.index(),
                partition.len(),
                relation
            );
            for s in partition.summaries(&loops) {
                let class = &partition.classes[s.class_id];
                let _ = writeln!(
                    out,
                    "class {}: size {}, {}, {} left non-singular",
                    s.class_id,
                    s.size,
                    if s.is_loop { "loop" } else { "not a loop" },
                    s.n_left_nonsingular
                );
                for &m in &class.members {
                    let _ = writeln!(out, "    S{}: {}", m + 1, ts[m].display_names());
                }
            }
            Ok(Report::ok(out))
        }
    }
}

fn odd_prime(p: usize) -> Result<usize> {
    if p == 2 || !nrt_core::arith::is_prime(p) {
        bail!("{p} is not an odd prime");
    }
    Ok(p)
}

pub fn dihedral(opts: &GlobalOpts, args: &DihedralArgs) -> Result<Report> {
    let n = args.p.or(args.n).expect("clap requires one of --p and --n");
    if args.b.is_some() && args.mode != DihedralMode::Loop {
        bail!("--B only applies to the `loop` mode");
    }
    match args.mode {
        DihedralMode::Count => {
            let p = odd_prime(args.p.context("count needs --p")?)?;
            dihedral_count(opts, p)
        }
        DihedralMode::Families => {
            let p = odd_prime(args.p.context("families needs --p")?)?;
            let families = xb_families(p)?;
            match opts.format {
                Format::Json => Report::json(&families_json(p, &families)),
                Format::Csv => {
                    let mut out = String::from("family,size,members\n");
                    for (i, f) in families.iter().enumerate() {
                        let members: Vec<String> = f.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "{i},{},{}", f.len(), csv_field(&members.join(" ")));
                    }
                    Ok(Report::ok(out))
                }
                Format::Table => {
                    let mut out = format!("{} families for p = {p}\n", families.len());
                    for (i, f) in families.iter().enumerate() {
                        let members: Vec<String> = f.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "family {i} (size {}): {}", f.len(), members.join(", "));
                    }
                    Ok(Report::ok(out))
                }
            }
        }
        DihedralMode::Census => {
            let census = loop_transversal_census(n, opts.cap)?;
            match opts.format {
                Format::Json => Report::json(&census),
                Format::Csv => {
                    let mut out = String::from("n,witness\n");
                    for w in &census.witnesses {
                        let _ = writeln!(out, "{n},{}", csv_field(&w.to_string()));
                    }
                    Ok(Report::ok(out))
                }
                Format::Table => {
                    let mut out = format!("n = {n}: {} loop transversal(s)\n", census.count);
                    for w in &census.witnesses {
                        let _ = writeln!(out, "  {w}");
                    }
                    Ok(Report::ok(out))
                }
            }
        }
        DihedralMode::Loop => {
            let b = SubsetB::parse(n, args.b.as_deref().unwrap_or("∅"))?;
            let l = znb_right_loop(&b);
            let criterion = criterion_left_nonsingular(&b);
            let table = l.left_nonsingular_elements();
            if criterion != table {
                bail!("internal error: criterion {criterion:?} differs from table {table:?}");
            }
            match opts.format {
                Format::Json => Report::json(&json!({ "n": n, "B": b, "loop": l.to_json(), "left_nonsingular": table })),
                Format::Csv => Err(unsupported(opts.format, "dihedral loop")),
                Format::Table => {
                    let flags = l.structure_flags();
                    let mut out = format!("ℤ_{n} with B = {b}: loop {}, group {}\n", flags.is_loop, flags.is_group);
                    let _ = writeln!(out, "left non-singular: {table:?}");
                    out.push_str(&l.to_text());
                    Ok(Report::ok(out))
                }
            }
        }
    }
}

fn dihedral_count(opts: &GlobalOpts, p: usize) -> Result<Report> {
    if p > MAX_AFFINE_PRIME {
        bail!("p = {p} is above the supported limit {MAX_AFFINE_PRIME}");
    }
    let formula = itp_count_formula(p)?;
    let burnside = if p <= MAX_ORBIT_PRIME { Some(subset_orbit_count(p)? / 2) } else { None };
    let direct = if p <= DIRECT_PRIME_LIMIT {
        let pair = load_pair(&PairArgs { group: GroupArgs { group: format!("dihedral:{p}") }, subgroup: "x".into() })?;
        let loops: Vec<_> = enumerate(&pair, opts.cap)?.iter().map(Transversal::induced_right_loop).collect();
        Some(classify_loops(&loops, Relation::Isotopy).len() as u64)
    } else {
        None
    };
    let values: Vec<(&str, u64)> =
        [("formula", Some(formula)), ("burnside", burnside), ("direct", direct)].into_iter().filter_map(|(k, v)| Some((k, v?))).collect();
    let agree = values.iter().all(|&(_, v)| v == formula);
    let text = match opts.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "p": p, "formula": formula, "burnside": burnside, "direct": direct, "agree": agree,
        }))? + "\n",
        Format::Csv => {
            let mut out = String::from("p,method,value\n");
            for (k, v) in &values {
                let _ = writeln!(out, "{p},{k},{v}");
            }
            out
        }
        Format::Table => format!(
            "{}\n({})\n",
            values.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>().join(" = "),
            values.iter().map(|(k, _)| *k).collect::<Vec<_>>().join(" = ")
        ),
    };
    if !agree {
        eprintln!("counts disagree for p = {p}");
    }
    Ok(Report { text, failed: !agree })
}

pub fn cycle_index(opts: &GlobalOpts, p: usize) -> Result<Report> {
    let ci = cycle_index_formula(odd_prime(p)?)?;
    match opts.format {
        Format::Json => Report::json(&ci.to_json()),
        Format::Csv => {
            let mut out = String::from("cycle_type,num,den\n");
            for t in ci.to_json().terms {
                let ty: Vec<String> = t.cycle_type.iter().map(|(len, count)| format!("{len}^{count}")).collect();
                let _ = writeln!(out, "{},{},{}", ty.join(" "), t.num, t.den);
            }
            Ok(Report::ok(out))
        }
        Format::Table => Ok(Report::ok(ci.to_text() + "\n")),
    }
}

pub fn verify(opts: &GlobalOpts, args: &VerifyArgs) -> Result<Report> {
    if args.list {
        let mut out = String::new();
        for c in suite::CHECKS {
            let aliases = if c.aliases.is_empty() { String::new() } else { format!(" ({})", c.aliases.join(", ")) };
            let _ = writeln!(out, "{}{aliases}: {}", c.id, c.statement);
        }
        return Ok(Report::ok(out));
    }
    let mut suite_opts = SuiteOptions { cap: opts.cap, ..Default::default() };
    if !args.check.is_empty() {
        suite_opts.checks.clear();
        for name in &args.check {
            let c = suite::resolve_check(name).ok_or_else(|| suite::SuiteError::UnknownCheck(name.clone()))?;
            if !suite_opts.checks.iter().any(|k| std::ptr::eq(*k, c)) {
                suite_opts.checks.push(c);
            }
        }
    }
    if !args.p.is_empty() {
        suite_opts.primes = args.p.clone();
    }
    if !args.n.is_empty() {
        suite_opts.moduli = args.n.clone();
    }
    let catalog = match &args.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))?;
            suite::parse_catalog(&text)?
        }
        None => suite::default_catalog(),
    };
    let reports = suite::run_suite(&catalog, &suite_opts)?;
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    let text = match opts.format {
        Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
        Format::Csv => {
            let mut out = String::from("check,subject,verdict,summary\n");
            for r in &reports {
                let _ = writeln!(out, "{},{},{},{}", r.check, csv_field(&r.label), r.verdict, csv_field(&r.summary));
            }
            out
        }
        Format::Table => verify_table(&reports),
    };
    Ok(Report { text, failed })
}

fn verify_table(reports: &[CheckReport]) -> String {
    let w_check = reports.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let w_label = reports.iter().map(|r| r.label.chars().count()).max().unwrap_or(7).max(7);
    let mut out = format!("{:w_check$}  {:w_label$}  {:7}  SUMMARY\n", "CHECK", "SUBJECT", "VERDICT");
    for r in reports {
        let _ = writeln!(out, "{:w_check$}  {:w_label$}  {:7}  {}", r.check, r.label, r.verdict.to_string(), r.summary);
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        let _ = writeln!(out, "counterexample for {} on {}: {}", r.check, r.label, r.details);
    }
    let _ = writeln!(out, "{} pass, {} vacuous, {} fail", count(Verdict::Pass), count(Verdict::Vacuous), count(Verdict::Fail));
    out
}
