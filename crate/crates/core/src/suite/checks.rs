use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use serde_json::json;

use super::{CheckReport, ResolvedEntry, Verdict};
use crate::affine::{itp_count_formula, subset_orbit_count, MAX_ORBIT_PRIME};
use crate::arith::gcd;
use crate::group::{build_named_group, quotient, right_cosets, GroupDescriptor};
use crate::isotopy::{
    are_isomorphic, autotopy_group, has_transitive_automorphism_group, left_pseudo_autotopy, pseudo_automorphism_check,
    right_pseudo_autotopy, Relation, Side, MAX_AUTOTOPY_ORDER,
};
use crate::perm::Perm;
use crate::right_loop::RightLoop;
use crate::transversal::enumerate_transversals;
use crate::zn_b::{loop_transversal_census, transversal_from_subset, xb_families, SubsetB};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Runs on every catalog entry.
    Entry,
    /// Runs on each selected odd prime `p`, for `D₂ₚ` with `H = {1, x}`.
    Prime,
    /// Runs on each selected modulus `n`.
    Modulus,
}

#[derive(Debug)]
pub struct CheckInfo {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub scope: Scope,
    pub statement: &'static str,
}

pub static CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "catalog-facts",
        aliases: &[],
        scope: Scope::Entry,
        statement: "expected normality, class counts and loop-transversal counts reproduce",
    },
    CheckInfo {
        id: "torsion-pin",
        aliases: &[],
        scope: Scope::Entry,
        statement: "table torsion equals χ(⟨S⟩∩H) and the envelope equals χ(⟨S⟩)",
    },
    CheckInfo {
        id: "left-nonsingular-invariance",
        aliases: &["prop3.2"],
        scope: Scope::Entry,
        statement: "every isotopy maps left non-singular elements onto left non-singular elements",
    },
    CheckInfo {
        id: "loop-preservation",
        aliases: &["cor3.2"],
        scope: Scope::Entry,
        statement: "a right loop isotopic to a loop is a loop",
    },
    CheckInfo {
        id: "envelope-invariance",
        aliases: &[],
        scope: Scope::Entry,
        statement: "isotopic right loops have isomorphic torsion envelopes",
    },
    CheckInfo {
        id: "quotient-invariance",
        aliases: &["prop3.3"],
        scope: Scope::Entry,
        statement: "|Itp(G,H)| = |Itp(G/N,H/N)| for N the core of H",
    },
    CheckInfo {
        id: "corefree-unique-class",
        aliases: &["prop3.5"],
        scope: Scope::Entry,
        statement: "H nontrivial corefree with |Itp| = 1 ⇒ no loop transversal and ⟨S⟩ = G for all S",
    },
    CheckInfo {
        id: "nilpotent-normality",
        aliases: &["prop3.7"],
        scope: Scope::Entry,
        statement: "G nilpotent and |Itp| = 1 ⇒ H normal",
    },
    CheckInfo {
        id: "coprime-solvable-normality",
        aliases: &["prop3.8"],
        scope: Scope::Entry,
        statement: "G solvable, gcd(|H|,[G:H]) = 1 and |Itp| = 1 ⇒ H normal",
    },
    CheckInfo {
        id: "squarefree-normality",
        aliases: &["cor3.8"],
        scope: Scope::Entry,
        statement: "|G| square-free and |Itp| = 1 ⇒ H normal",
    },
    CheckInfo {
        id: "pseudo-automorphism",
        aliases: &["prop3.9"],
        scope: Scope::Entry,
        statement: "autotopies with α(0)=0 (β(0)=0) are exactly the right (left) pseudo-automorphism triples",
    },
    CheckInfo {
        id: "autotopy-indices",
        aliases: &["prop3.10", "prop3.11"],
        scope: Scope::Entry,
        statement: "transitive Aut ⇒ [A₁:Aut] ∈ {1,n}, [A₂:Aut] ∈ {1,m}, [U:A₁] ∈ {1,m}, [U:A₂] ∈ {1,n}",
    },
    CheckInfo {
        id: "transitive-isomorphic",
        aliases: &["thm3.12"],
        scope: Scope::Entry,
        statement: "isotopic right loops with transitive automorphism groups are isomorphic",
    },
    CheckInfo {
        id: "xb-families",
        aliases: &["thm4.1"],
        scope: Scope::Prime,
        statement: "the isotopy class of T_B is {T_C : C ∈ 𝒳_B}",
    },
    CheckInfo {
        id: "dihedral-count",
        aliases: &["thm4.2"],
        scope: Scope::Prime,
        statement: "|Itp(D₂ₚ,H)| = P_Aff(1,p)(2,…,2)/2",
    },
    CheckInfo {
        id: "loop-census",
        aliases: &["cor4.1", "cor4.2"],
        scope: Scope::Modulus,
        statement: "ℤₙᴮ is a loop only for B = ∅, and for even n also for B the odd residues",
    },
];

pub fn resolve_check(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == name || c.aliases.contains(&name))
}

/// Direct classification of `T(D₂ₚ, H)` is exhaustive up to this prime.
const DIRECT_PRIME_LIMIT: usize = 7;
/// `𝒳_B` families are enumerated up to this prime.
const FAMILY_PRIME_LIMIT: usize = 13;
/// Torsion closures are computed up to this loop order.
const TORSION_ORDER_LIMIT: usize = 10;
/// Envelope isomorphism is searched up to this group order.
const ENVELOPE_ISO_LIMIT: usize = 24;
/// Pseudo-automorphisms are scanned over all of `Sym(S)` up to this order.
const EXHAUSTIVE_PSEUDO_LIMIT: usize = 5;

fn report(c: &CheckInfo, label: &str, verdict: Verdict, summary: String, details: serde_json::Value) -> CheckReport {
    CheckReport { check: c.id.to_string(), label: label.to_string(), verdict, summary, details }
}

pub(super) fn run_entry_check(c: &'static CheckInfo, e: &ResolvedEntry) -> CheckReport {
    let (verdict, summary, details) = match c.id {
        "catalog-facts" => catalog_facts(e),
        "torsion-pin" => torsion_pin(e),
        "left-nonsingular-invariance" => left_nonsingular_invariance(e),
        "loop-preservation" => loop_preservation(e),
        "envelope-invariance" => envelope_invariance(e),
        "quotient-invariance" => quotient_invariance(e),
        "corefree-unique-class" => corefree_unique_class(e),
        "nilpotent-normality" => implies_normal(e, e.group.is_nilpotent(), "G nilpotent", true),
        "coprime-solvable-normality" => {
            let hyp = e.group.is_solvable() && gcd(e.subgroup.order(), e.subgroup.index()) == 1;
            implies_normal(e, hyp, "G solvable and gcd(|H|,[G:H]) = 1", false)
        }
        "squarefree-normality" => implies_normal(e, is_square_free(e.group.order()), "|G| square-free", false),
        "pseudo-automorphism" => pseudo_automorphism(e),
        "autotopy-indices" => autotopy_indices(e),
        "transitive-isomorphic" => transitive_isomorphic(e),
        other => unreachable!("{other} is not an entry check"),
    };
    report(c, e.label(), verdict, summary, details)
}

pub(super) fn run_prime_check(c: &'static CheckInfo, p: usize) -> CheckReport {
    let (verdict, summary, details) = match c.id {
        "xb-families" => xb_family_check(p),
        "dihedral-count" => dihedral_count(p),
        other => unreachable!("{other} is not a prime check"),
    };
    report(c, &format!("dihedral:{p}"), verdict, summary, details)
}

pub(super) fn run_modulus_check(c: &'static CheckInfo, n: usize) -> CheckReport {
    let (verdict, summary, details) = match c.id {
        "loop-census" => loop_census(n),
        other => unreachable!("{other} is not a modulus check"),
    };
    report(c, &format!("n={n}"), verdict, summary, details)
}

type Outcome = (Verdict, String, serde_json::Value);

fn pass(summary: impl Into<String>, details: serde_json::Value) -> Outcome {
    (Verdict::Pass, summary.into(), details)
}

fn fail(summary: impl Into<String>, counterexample: serde_json::Value) -> Outcome {
    (Verdict::Fail, summary.into(), json!({ "counterexample": counterexample }))
}

fn vacuous(summary: impl Into<String>, details: serde_json::Value) -> Outcome {
    (Verdict::Vacuous, summary.into(), details)
}

fn is_square_free(n: usize) -> bool {
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
}

fn names(e: &ResolvedEntry, i: usize) -> String {
    e.transversals[i].display_names()
}

fn catalog_facts(e: &ResolvedEntry) -> Outcome {
    let x = &e.entry.expected;
    let mut computed = serde_json::Map::new();
    let mut mismatches = Vec::new();
    let mut compare = |key: &str, expected: serde_json::Value, got: serde_json::Value| {
        if expected != got {
            mismatches.push(json!({ "fact": key, "expected": expected, "computed": got }));
        }
        computed.insert(key.to_string(), got);
    };
    if let Some(v) = x.normal {
        compare("normal", json!(v), json!(e.normal));
    }
    if let Some(v) = x.itp {
        compare("itp", json!(v), json!(e.partition(Relation::Isotopy).len()));
    }
    if let Some(v) = x.iso {
        compare("iso", json!(v), json!(e.partition(Relation::Isomorphism).len()));
    }
    if let Some(v) = x.loop_transversals {
        compare("loop_transversals", json!(v), json!(e.loop_transversal_count()));
    }
    if computed.is_empty() {
        return vacuous("no expected facts", json!({}));
    }
    if !mismatches.is_empty() {
        return fail(format!("{} fact(s) differ", mismatches.len()), json!(mismatches));
    }
    pass(format!("{} fact(s) reproduce", computed.len()), serde_json::Value::Object(computed))
}

fn torsion_pin(e: &ResolvedEntry) -> Outcome {
    let n = e.cosets.len();
    if n > TORSION_ORDER_LIMIT {
        return vacuous(format!("loop order {n} above {TORSION_ORDER_LIMIT}"), json!({ "order": n }));
    }
    let mut orders = BTreeSet::new();
    for (i, (t, l)) in e.transversals.iter().zip(&e.loops).enumerate() {
        let torsion = l.group_torsion();
        let chi = t.chi_torsion();
        if torsion.group.elements() != chi.elements() {
            return fail(
                "table torsion differs from χ(⟨S⟩∩H)",
                json!({ "transversal": names(e, i), "table_order": torsion.group.order(), "chi_order": chi.order() }),
            );
        }
        let mut span: Vec<Perm> = t.generated_subgroup().members().iter().map(|&g| t.chi_action(g)).collect();
        span.sort();
        span.dedup();
        if torsion.envelope.elements() != span.as_slice() {
            return fail(
                "envelope differs from χ(⟨S⟩)",
                json!({ "transversal": names(e, i), "envelope_order": torsion.envelope.order(), "chi_span_order": span.len() }),
            );
        }
        orders.insert(torsion.group.order());
    }
    pass(format!("{} transversals agree", e.loops.len()), json!({ "torsion_orders": orders }))
}

fn left_nonsingular_invariance(e: &ResolvedEntry) -> Outcome {
    let p = e.partition(Relation::Isotopy);
    let mut checked = 0;
    for c in &p.classes {
        let src = &e.loops[c.members[0]];
        let src_lns = src.left_nonsingular_elements();
        for (&m, w) in c.members.iter().zip(&c.witnesses) {
            let dst_lns: BTreeSet<usize> = e.loops[m].left_nonsingular_elements().into_iter().collect();
            let image: BTreeSet<usize> = src_lns.iter().map(|&a| w.alpha[a]).collect();
            if !w.verify(src, &e.loops[m]) || image != dst_lns {
                return fail(
                    "α does not carry left non-singular elements onto left non-singular elements",
                    json!({ "from": names(e, c.members[0]), "to": names(e, m), "witness": w }),
                );
            }
            checked += 1;
        }
    }
    pass(format!("{checked} witnesses across {} classes", p.len()), json!({ "witnesses": checked, "classes": p.len() }))
}

fn loop_preservation(e: &ResolvedEntry) -> Outcome {
    let p = e.partition(Relation::Isotopy);
    for c in &p.classes {
        let first = e.loops[c.members[0]].structure_flags().is_loop;
        if let Some(&m) = c.members.iter().find(|&&m| e.loops[m].structure_flags().is_loop != first) {
            return fail("isotopy class mixes loops and non-loops", json!({ "a": names(e, c.members[0]), "b": names(e, m) }));
        }
    }
    let loops = p.classes.iter().filter(|c| e.loops[c.members[0]].structure_flags().is_loop).count();
    pass(format!("{loops} of {} classes are loops", p.len()), json!({ "loop_classes": loops, "classes": p.len() }))
}

fn envelope_group(l: &RightLoop) -> RightLoop {
    RightLoop::from_group(&l.group_torsion().envelope.to_finite_group())
}

fn envelope_invariance(e: &ResolvedEntry) -> Outcome {
    let n = e.cosets.len();
    if n > TORSION_ORDER_LIMIT {
        return vacuous(format!("loop order {n} above {TORSION_ORDER_LIMIT}"), json!({ "order": n }));
    }
    let p = e.partition(Relation::Isotopy);
    let mut orders = Vec::new();
    for c in &p.classes {
        let first = envelope_group(&e.loops[c.members[0]]);
        for &m in &c.members[1..] {
            let other = envelope_group(&e.loops[m]);
            let same = first.order() == other.order()
                && (first.order() > ENVELOPE_ISO_LIMIT || are_isomorphic(&first, &other).is_some());
            if !same {
                return fail(
                    "isotopic right loops with non-isomorphic envelopes",
                    json!({ "a": names(e, c.members[0]), "b": names(e, m), "orders": [first.order(), other.order()] }),
                );
            }
        }
        orders.push(first.order());
    }
    pass(format!("envelope orders per class {orders:?}"), json!({ "envelope_orders": orders }))
}

fn quotient_invariance(e: &ResolvedEntry) -> Outcome {
    let q = match quotient(&e.core) {
        Ok(q) => q,
        Err(err) => return fail("core is not normal", json!({ "error": err.to_string() })),
    };
    let image_h = q.image(&e.subgroup);
    let cosets = match right_cosets(&q.group, &image_h) {
        Ok(c) => Arc::new(c),
        Err(err) => return fail("image of H is not a subgroup", json!({ "error": err.to_string() })),
    };
    let quotient_loops: Vec<RightLoop> = match enumerate_transversals(cosets, u128::MAX) {
        Ok(it) => it.map(|t| t.induced_right_loop()).collect(),
        Err(err) => return fail("quotient enumeration failed", json!({ "error": err.to_string() })),
    };
    let mut fibres: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (i, t) in e.transversals.iter().enumerate() {
        let proj = match t.project(&e.core, &q) {
            Ok(p) => p,
            Err(err) => return fail("projection failed", json!({ "transversal": names(e, i), "error": err.to_string() })),
        };
        if e.loops[i].relabel(&proj.position_map) != proj.transversal.induced_right_loop() {
            return fail("projected loop differs from the original", json!({ "transversal": names(e, i) }));
        }
        *fibres.entry(proj.transversal.reps().to_vec()).or_default() += 1;
    }
    let fibre_sizes: BTreeSet<usize> = fibres.values().copied().collect();
    if fibres.len() != quotient_loops.len() || fibre_sizes.len() != 1 {
        return fail(
            "projection is not onto with equal fibres",
            json!({ "image": fibres.len(), "quotient_transversals": quotient_loops.len(), "fibre_sizes": fibre_sizes }),
        );
    }
    let itp = e.partition(Relation::Isotopy).len();
    let itp_q = crate::isotopy::classify(&quotient_loops, Relation::Isotopy).len();
    let details = json!({ "core_order": e.core.order(), "itp": itp, "itp_quotient": itp_q, "fibre_size": fibre_sizes.first() });
    if itp != itp_q {
        return fail(format!("|Itp| = {itp} but |Itp| of the quotient = {itp_q}"), details);
    }
    pass(format!("core order {}, both sides {itp}", e.core.order()), details)
}

fn corefree_unique_class(e: &ResolvedEntry) -> Outcome {
    let itp = e.partition(Relation::Isotopy).len();
    if !e.core.is_trivial() || e.subgroup.is_trivial() || itp != 1 {
        return vacuous(
            "hypothesis fails",
            json!({ "core_order": e.core.order(), "h_order": e.subgroup.order(), "itp": itp }),
        );
    }
    if let Some(i) = e.loops.iter().position(|l| l.structure_flags().is_loop) {
        return fail("a loop transversal exists", json!({ "transversal": names(e, i) }));
    }
    if let Some(i) = e.transversals.iter().position(|t| t.generated_subgroup().order() != e.group.order()) {
        return fail("a transversal generates a proper subgroup", json!({ "transversal": names(e, i) }));
    }
    pass("no loop transversal and every S generates G", json!({ "itp": itp }))
}

/// `hypothesis ∧ |Itp| = 1 ⇒ H normal`. With `contrapositive` the
/// hypothesis excludes the class count, so non-normal entries with
/// `|Itp| ≥ 2` pass rather than being vacuous.
fn implies_normal(e: &ResolvedEntry, hypothesis: bool, description: &str, contrapositive: bool) -> Outcome {
    let itp = e.partition(Relation::Isotopy).len();
    let details = json!({ "hypothesis": description, "hypothesis_holds": hypothesis, "itp": itp, "normal": e.normal });
    if !hypothesis || (!contrapositive && itp != 1) {
        return vacuous("hypothesis fails", details);
    }
    if itp == 1 && !e.normal {
        return fail("|Itp| = 1 but H is not normal", details);
    }
    let summary = if e.normal { format!("H normal, |Itp| = {itp}") } else { format!("H not normal, |Itp| = {itp} ≥ 2") };
    pass(summary, details)
}

fn pseudo_automorphism(e: &ResolvedEntry) -> Outcome {
    let n = e.cosets.len();
    if n > MAX_AUTOTOPY_ORDER {
        return vacuous(format!("loop order {n} above {MAX_AUTOTOPY_ORDER}"), json!({ "order": n }));
    }
    let mut autotopies = 0;
    for (i, l) in e.loops.iter().enumerate() {
        let u = autotopy_group(l).expect("order checked");
        if !u.is_closed() {
            return fail("U(S) is not closed under composition", json!({ "transversal": names(e, i) }));
        }
        for w in &u.elements {
            let (a0, b0) = (w.alpha[0], w.beta[0]);
            let right = pseudo_automorphism_check(l, &w.alpha, b0, Side::Right).expect("valid map");
            let left = pseudo_automorphism_check(l, &w.beta, a0, Side::Left);
            let left = match left {
                Ok(v) => v,
                Err(_) => return fail("α(0) is singular for an autotopy", json!({ "transversal": names(e, i), "autotopy": w })),
            };
            let a1 = [a0 == 0, w.beta == w.gamma, right];
            let a2 = [b0 == 0, w.alpha == w.gamma, left];
            let rebuilt_right = a0 != 0 || right_pseudo_autotopy(l, &w.alpha, b0).ok().as_ref() == Some(w);
            let rebuilt_left = b0 != 0 || left_pseudo_autotopy(l, &w.beta, a0).ok().as_ref() == Some(w);
            if a1.iter().any(|&v| v != a1[0]) || a2.iter().any(|&v| v != a2[0]) || !rebuilt_right || !rebuilt_left {
                return fail(
                    "autotopy breaks the pseudo-automorphism equivalences",
                    json!({ "transversal": names(e, i), "autotopy": w, "a1_conditions": a1, "a2_conditions": a2 }),
                );
            }
        }
        if n <= EXHAUSTIVE_PSEUDO_LIMIT {
            let members: HashSet<_> = u.elements.iter().collect();
            for eta in all_permutations(n) {
                for c in 0..n {
                    let right = pseudo_automorphism_check(l, &eta, c, Side::Right).expect("valid map");
                    let triple = right_pseudo_autotopy(l, &eta, c).expect("valid map");
                    if right != members.contains(&triple) {
                        return fail("right pseudo-automorphism ⇔ autotopy fails", json!({ "transversal": names(e, i), "eta": eta, "c": c }));
                    }
                    if l.is_left_nonsingular(c) {
                        let left = pseudo_automorphism_check(l, &eta, c, Side::Left).expect("c is left non-singular");
                        let triple = left_pseudo_autotopy(l, &eta, c).expect("c is left non-singular");
                        if left != members.contains(&triple) {
                            return fail("left pseudo-automorphism ⇔ autotopy fails", json!({ "transversal": names(e, i), "eta": eta, "c": c }));
                        }
                    }
                }
            }
        }
        autotopies += u.u_size;
    }
    pass(format!("{autotopies} autotopies over {} right loops", e.loops.len()), json!({ "autotopies": autotopies }))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn autotopy_indices(e: &ResolvedEntry) -> Outcome {
    let n = e.cosets.len();
    if n > MAX_AUTOTOPY_ORDER {
        return vacuous(format!("loop order {n} above {MAX_AUTOTOPY_ORDER}"), json!({ "order": n }));
    }
    let mut rows = Vec::new();
    for c in &e.partition(Relation::Isomorphism).classes {
        let l = &e.loops[c.representative];
        if !has_transitive_automorphism_group(l) {
            continue;
        }
        let u = autotopy_group(l).expect("order checked");
        let m = l.left_nonsingular_elements().len();
        let idx = [u.a1_size / u.aut_size, u.a2_size / u.aut_size, u.u_size / u.a1_size, u.u_size / u.a2_size];
        let row = json!({ "transversal": names(e, c.representative), "n": n, "m": m, "u": u.u_size, "a1": u.a1_size, "a2": u.a2_size, "aut": u.aut_size });
        let ok = [n, m, m, n].iter().zip(idx).all(|(&allowed, i)| i == 1 || i == allowed);
        let divisible = u.a1_size.is_multiple_of(u.aut_size) && u.a2_size.is_multiple_of(u.aut_size) && u.u_size.is_multiple_of(u.a1_size) && u.u_size.is_multiple_of(u.a2_size);
        if !ok || !divisible {
            return fail("autotopy indices outside the allowed values", row);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return vacuous("no right loop with transitive automorphism group", json!({}));
    }
    pass(format!("{} isomorphism classes with transitive Aut", rows.len()), json!(rows))
}

fn transitive_isomorphic(e: &ResolvedEntry) -> Outcome {
    let iso = e.partition(Relation::Isomorphism);
    let iso_class = iso.class_of();
    let transitive: Vec<bool> = iso.classes.iter().map(|c| has_transitive_automorphism_group(&e.loops[c.representative])).collect();
    let mut tested = 0;
    for c in &e.partition(Relation::Isotopy).classes {
        let kinds: BTreeSet<usize> = c.members.iter().map(|&m| iso_class[m]).filter(|&k| transitive[k]).collect();
        if kinds.len() > 1 {
            let ks: Vec<usize> = kinds.iter().take(2).copied().collect();
            return fail(
                "isotopic transitive right loops are not isomorphic",
                json!({ "a": names(e, iso.classes[ks[0]].representative), "b": names(e, iso.classes[ks[1]].representative) }),
            );
        }
        if c.members.iter().filter(|&&m| transitive[iso_class[m]]).count() > 1 {
            tested += 1;
        }
    }
    if tested == 0 {
        return vacuous("no isotopy class with two transitive members", json!({}));
    }
    pass(format!("{tested} isotopy classes with several transitive members"), json!({ "classes": tested }))
}

fn subsets(p: usize) -> Vec<SubsetB> {
    (0..1u64 << (p - 1)).map(|k| SubsetB::from_mask(p, k << 1).expect("0 excluded")).collect()
}

/// Isotopy classes of `T(D₂ₚ, H)` as sets of subset masks, from the
/// transversals themselves.
fn direct_classes(p: usize) -> BTreeSet<BTreeSet<u64>> {
    let bs = subsets(p);
    let loops: Vec<RightLoop> =
        bs.iter().map(|b| transversal_from_subset(b).expect("valid subset").induced_right_loop()).collect();
    crate::isotopy::classify(&loops, Relation::Isotopy)
        .classes
        .iter()
        .map(|c| c.members.iter().map(|&m| bs[m].mask()).collect())
        .collect()
}

fn xb_family_check(p: usize) -> Outcome {
    if p > DIRECT_PRIME_LIMIT {
        return vacuous(format!("direct classification limited to p ≤ {DIRECT_PRIME_LIMIT}"), json!({ "p": p }));
    }
    let direct = direct_classes(p);
    let families: BTreeSet<BTreeSet<u64>> =
        xb_families(p).expect("odd prime").iter().map(|f| f.iter().map(SubsetB::mask).collect()).collect();
    let show = |s: &BTreeSet<BTreeSet<u64>>| -> Vec<Vec<String>> {
        s.iter().map(|c| c.iter().map(|&m| SubsetB::from_mask(p, m).expect("valid").to_string()).collect()).collect()
    };
    if direct != families {
        let only_direct: BTreeSet<_> = direct.difference(&families).cloned().collect();
        let only_family: BTreeSet<_> = families.difference(&direct).cloned().collect();
        return fail(
            "isotopy classes differ from the 𝒳_B families",
            json!({ "classes_not_families": show(&only_direct), "families_not_classes": show(&only_family) }),
        );
    }
    pass(format!("{} classes equal the 𝒳_B families", direct.len()), json!({ "families": show(&families) }))
}

fn dihedral_count(p: usize) -> Outcome {
    let formula = itp_count_formula(p).expect("odd prime");
    let mut values = vec![("formula", formula)];
    if p <= MAX_ORBIT_PRIME {
        values.push(("burnside", subset_orbit_count(p).expect("small prime") / 2));
    }
    if p <= FAMILY_PRIME_LIMIT {
        values.push(("families", xb_families(p).expect("odd prime").len() as u64));
    }
    if p <= DIRECT_PRIME_LIMIT {
        values.push(("direct", direct_classes(p).len() as u64));
    }
    let details: serde_json::Map<String, serde_json::Value> = values.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let summary = values.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>().join(" = ");
    if values.iter().any(|&(_, v)| v != formula) {
        return fail(format!("counts disagree: {summary}"), serde_json::Value::Object(details));
    }
    pass(summary, serde_json::Value::Object(details))
}

fn loop_census(n: usize) -> Outcome {
    let census = match loop_transversal_census(n, crate::transversal::DEFAULT_ENUMERATION_CAP) {
        Ok(c) => c,
        Err(err) => return fail("census failed", json!({ "error": err.to_string() })),
    };
    let mut expected = vec![SubsetB::empty(n).expect("valid modulus")];
    if n.is_multiple_of(2) {
        expected.push(SubsetB::new(n, (1..n).step_by(2)).expect("valid subset"));
    }
    let shown: Vec<String> = census.witnesses.iter().map(ToString::to_string).collect();
    if census.witnesses != expected {
        return fail(format!("loop transversals {shown:?}"), json!({ "witnesses": shown }));
    }
    if n.is_multiple_of(2) && n >= 4 {
        let dihedral = RightLoop::from_group(&build_named_group(&GroupDescriptor::Dihedral(n / 2)).expect("n/2 ≥ 2"));
        if are_isomorphic(&crate::zn_b::znb_right_loop(&expected[1]), &dihedral).is_none() {
            return fail("odd-residue loop is not dihedral", json!({ "witnesses": shown }));
        }
    }
    pass(format!("{} loop transversal(s): {}", census.count, shown.join(", ")), json!({ "witnesses": shown }))
}
