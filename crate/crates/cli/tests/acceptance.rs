//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the pass/fail lines always print; exits non-zero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use nrt_core::affine::{
    affine_maps, cycle_index_bruteforce, cycle_index_formula, itp_count_formula, subset_orbit_count,
    subset_orbit_count_naive,
};
use nrt_core::group::{core, is_normal, quotient, right_cosets};
use nrt_core::isotopy::{autotopy_group, brute_force_isotopy_oracle, verify_isomorphism, IsotopyWitness};
use nrt_core::suite::default_catalog;
use nrt_core::zn_b::{criterion_left_nonsingular, loop_transversal_census, xb_families, znb_right_loop, SubsetB};
use nrt_core::{
    are_isomorphic, are_isotopic, build_named_group, classify, enumerate_transversals, FiniteGroup, GroupDescriptor,
    Relation, RightLoop, Subgroup, Transversal,
};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

type Check = Result<String, String>;
/// Name, time limit, body.
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Setting {
    group: Arc<FiniteGroup>,
    subgroup: Subgroup,
    transversals: Vec<Transversal>,
    loops: Vec<RightLoop>,
}

fn setting(group: &str, subgroup: &str) -> Setting {
    let group = Arc::new(build_named_group(&group.parse::<GroupDescriptor>().unwrap()).unwrap());
    let gens = group.parse_generators(subgroup).unwrap();
    let subgroup = Subgroup::generated(group.clone(), &gens).unwrap();
    let cosets = Arc::new(right_cosets(&group, &subgroup).unwrap());
    let transversals: Vec<Transversal> = enumerate_transversals(cosets, 1 << 20).unwrap().collect();
    let loops = transversals.iter().map(Transversal::induced_right_loop).collect();
    Setting { group, subgroup, transversals, loops }
}

impl Setting {
    fn element(&self, s: &str) -> usize {
        self.group.parse_element(s).unwrap()
    }

    /// Index of the transversal with exactly these elements.
    fn find(&self, elements: &[usize]) -> usize {
        let want: BTreeSet<usize> = elements.iter().copied().collect();
        self.transversals
            .iter()
            .position(|t| t.reps().iter().copied().collect::<BTreeSet<_>>() == want)
            .unwrap_or_else(|| panic!("{elements:?} is not a transversal"))
    }

    /// Position-level map of an element-level bijection between transversals.
    fn positions(&self, from: usize, to: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
        let (s, t) = (self.transversals[from].reps(), self.transversals[to].reps());
        let mut f = vec![usize::MAX; s.len()];
        for &(a, b) in pairs {
            f[s.iter().position(|&r| r == a).unwrap()] = t.iter().position(|&r| r == b).unwrap();
        }
        f
    }
}

fn class_sets(p: &nrt_core::isotopy::ClassPartition) -> BTreeSet<BTreeSet<usize>> {
    p.member_sets().into_iter().map(|m| m.into_iter().collect()).collect()
}

fn sym3() -> Check {
    let s = setting("sym:3", "(2,3)");
    let e = |x: &str| s.element(x);
    ensure!(s.transversals.len() == 4, "{} NRTs", s.transversals.len());
    let s1 = s.find(&[e("I"), e("(1,2,3)"), e("(1,3,2)")]);
    let s2 = s.find(&[e("I"), e("(1,3)"), e("(1,3,2)")]);
    let s3 = s.find(&[e("I"), e("(1,3)"), e("(1,2)")]);
    let s4 = s.find(&[e("I"), e("(1,2,3)"), e("(1,2)")]);
    let p = classify(&s.loops, Relation::Isotopy);
    ensure!(p.verify(&s.loops), "class witnesses fail");
    let expected: BTreeSet<BTreeSet<usize>> = [BTreeSet::from([s1]), BTreeSet::from([s2, s3, s4])].into();
    ensure!(class_sets(&p) == expected, "classes {:?}", p.member_sets());
    let loops: Vec<usize> = (0..4).filter(|&i| s.loops[i].structure_flags().is_loop).collect();
    ensure!(loops == vec![s1], "loop transversals {loops:?}");
    // The explicit isotopy from S₂ to S₃ and the conjugation by (2,3) from S₂ to S₄.
    let alpha = s.positions(s2, s3, &[(e("I"), e("I")), (e("(1,3)"), e("(1,2)")), (e("(1,3,2)"), e("(1,3)"))]);
    let beta = s.positions(s2, s3, &[(e("I"), e("(1,2)")), (e("(1,3)"), e("I")), (e("(1,3,2)"), e("(1,3)"))]);
    let w = IsotopyWitness { alpha, beta: beta.clone(), gamma: beta };
    ensure!(w.verify(&s.loops[s2], &s.loops[s3]), "the stated S₂→S₃ isotopy does not verify");
    let t = e("(2,3)");
    let conj: Vec<(usize, usize)> =
        s.transversals[s2].reps().iter().map(|&r| (r, s.group.mul(s.group.mul(t, r), t))).collect();
    let f = s.positions(s2, s4, &conj);
    ensure!(verify_isomorphism(&s.loops[s2], &s.loops[s4], &f), "conjugation by (2,3) is not an isomorphism S₂→S₄");
    Ok("4 NRTs, classes {S₁} {S₂,S₃,S₄}, S₁ the only loop transversal".into())
}

fn alt4() -> Check {
    let s = setting("alt:4", "(1,2)(3,4)");
    ensure!(s.transversals.len() == 32, "{} NRTs", s.transversals.len());
    let iso = classify(&s.loops, Relation::Isomorphism);
    let itp = classify(&s.loops, Relation::Isotopy);
    ensure!(iso.verify(&s.loops) && itp.verify(&s.loops), "class witnesses fail");
    ensure!(iso.len() == 5 && itp.len() == 2, "{} iso, {} isotopy classes", iso.len(), itp.len());
    let g = &s.group;
    let (z, y) = (s.element("(1,2,3)"), s.element("(1,3)(2,4)"));
    let zi = g.inv(z);
    let s1 = s.find(&[0, z, g.mul(y, zi), zi, g.mul(y, z), y]);
    let lns: BTreeSet<usize> =
        s.loops[s1].left_nonsingular_elements().into_iter().map(|i| s.transversals[s1].reps()[i]).collect();
    ensure!(lns == BTreeSet::from([0, y, zi, g.mul(y, zi)]), "left non-singular set of S₁ is {lns:?}");
    // Same words read with left-to-right products: the opposite group.
    let opposite = {
        let rows = (0..g.order()).map(|a| (0..g.order()).map(|b| g.mul(b, a)).collect()).collect();
        Arc::new(FiniteGroup::from_rows(rows, Some(g.names().to_vec())).unwrap())
    };
    let oh = Subgroup::generated(opposite.clone(), s.subgroup.members()).unwrap();
    let ocosets = Arc::new(right_cosets(&opposite, &oh).unwrap());
    let ot = Transversal::from_elements(ocosets, &[0, z, opposite.mul(y, zi), zi, opposite.mul(y, z), y])
        .map_err(|e| format!("S₁ under left-to-right products: {e}"))?;
    let olns: BTreeSet<usize> =
        ot.induced_right_loop().left_nonsingular_elements().into_iter().map(|i| ot.reps()[i]).collect();
    ensure!(olns == BTreeSet::from([0, y, z, opposite.mul(y, z)]), "left-to-right left non-singular set {olns:?}");
    let other: Vec<usize> = itp.classes.iter().find(|c| !c.members.contains(&s1)).unwrap().members.clone();
    ensure!(
        other.iter().all(|&m| {
            let t = &s.transversals[m];
            let l: BTreeSet<usize> = s.loops[m].left_nonsingular_elements().into_iter().map(|i| t.reps()[i]).collect();
            l.len() == 2 && l.contains(&0)
        }),
        "the other class does not have exactly two left non-singular elements"
    );
    Ok("32 NRTs, 5 isomorphism classes, 2 isotopy classes; LNS(S₁) = {I, y, z⁻¹, yz⁻¹}, \
        read left to right {I, y, z, yz} ⊇ the stated {I, y, z}; the other class has 2"
        .into())
}

fn dihedral_triple() -> Check {
    let mut values = Vec::new();
    for (p, expected) in [(3, 2), (5, 3), (7, 5)] {
        let s = setting(&format!("dihedral:{p}"), "x");
        ensure!(s.transversals.len() == 1 << (p - 1), "p = {p}: {} NRTs", s.transversals.len());
        let direct = classify(&s.loops, Relation::Isotopy);
        ensure!(direct.verify(&s.loops), "p = {p}: class witnesses fail");
        let families = xb_families(p).unwrap().len();
        let formula = itp_count_formula(p).unwrap() as usize;
        ensure!(
            direct.len() == expected && families == expected && formula == expected,
            "p = {p}: direct {}, families {families}, formula {formula}",
            direct.len()
        );
        values.push(expected);
    }
    Ok(format!("direct = families = formula = {values:?}"))
}

fn odd_primes(limit: usize) -> Vec<usize> {
    (3..=limit).filter(|&p| nrt_core::arith::is_prime(p)).collect()
}

fn cycle_index_identity() -> Check {
    for p in odd_primes(31) {
        let formula = cycle_index_formula(p).unwrap();
        let perms: Vec<_> = affine_maps(p).unwrap().iter().map(|m| m.permutation()).collect();
        let brute = cycle_index_bruteforce(&perms).unwrap();
        ensure!(formula.terms == brute.terms, "p = {p}: {} vs {}", formula.to_text(), brute.to_text());
        ensure!(formula.coefficient_sum().is_one(), "p = {p}: coefficients sum to {}", formula.coefficient_sum());
        let v = formula.evaluate(&BigRational::from_integer(2.into()));
        ensure!(v.is_integer() && (v.to_integer() % 2u32).to_u32() == Some(0), "p = {p}: P(2,…,2) = {v}");
    }
    Ok("odd primes 3..31 match term by term; sums 1; P(2,…,2) even".into())
}

fn burnside() -> Check {
    for p in odd_primes(13) {
        let p2 = cycle_index_formula(p).unwrap().evaluate(&BigRational::from_integer(2.into())).to_integer();
        let orbits = subset_orbit_count(p).unwrap();
        ensure!(p2 == orbits.into(), "p = {p}: P(2,…,2) = {p2}, orbits {orbits}");
        if p <= 11 {
            let naive = subset_orbit_count_naive(p).unwrap();
            ensure!(naive == orbits, "p = {p}: naive scan {naive}, cycle method {orbits}");
        }
    }
    Ok("cycle-count and naive scans agree with P(2,…,2)".into())
}

fn census() -> Check {
    for n in [3, 5, 7, 9] {
        let c = loop_transversal_census(n, 1 << 20).unwrap();
        ensure!(c.count == 1 && c.witnesses[0].is_empty(), "n = {n}: {:?}", c.witnesses);
    }
    for n in [4, 6, 8] {
        let c = loop_transversal_census(n, 1 << 20).unwrap();
        let odd = SubsetB::new(n, (1..n).step_by(2)).unwrap();
        ensure!(c.count == 2 && c.witnesses[0].is_empty() && c.witnesses[1] == odd, "n = {n}: {:?}", c.witnesses);
    }
    let odd = SubsetB::new(6, [1, 3, 5]).unwrap();
    let d6 = RightLoop::from_group(&build_named_group(&GroupDescriptor::Dihedral(3)).unwrap());
    let f = are_isomorphic(&znb_right_loop(&odd), &d6).ok_or("ℤ₆ with the odd residues is not D₆")?;
    ensure!(verify_isomorphism(&znb_right_loop(&odd), &d6, &f), "isomorphism fails re-verification");
    Ok("counts 1 for odd n, 2 for even n; ℤ₆^{1,3,5} ≅ D₆".into())
}

fn criterion_soundness() -> Check {
    let mut subsets = 0usize;
    for n in 2..=12 {
        let bad = (0..1u64 << (n - 1)).into_par_iter().find_any(|&k| {
            let b = SubsetB::from_mask(n, k << 1).unwrap();
            criterion_left_nonsingular(&b) != znb_right_loop(&b).left_nonsingular_elements()
        });
        ensure!(bad.is_none(), "n = {n}, B mask {:#b}", bad.unwrap() << 1);
        subsets += 1 << (n - 1);
    }
    Ok(format!("{subsets} subsets for n ≤ 12"))
}

/// Disagreements between the search and the oracle over all unordered pairs.
fn oracle_disagreements(loops: &[RightLoop]) -> Result<usize, String> {
    let pairs: Vec<(usize, usize)> =
        (0..loops.len()).flat_map(|i| (i..loops.len()).map(move |j| (i, j))).filter(|&(i, j)| loops[i].order() == loops[j].order()).collect();
    let bad: Vec<(usize, usize)> = pairs
        .par_iter()
        .copied()
        .filter(|&(i, j)| {
            let found = are_isotopic(&loops[i], &loops[j]);
            let valid = found.as_ref().is_none_or(|w| w.verify(&loops[i], &loops[j]));
            !valid || found.is_some() != brute_force_isotopy_oracle(&loops[i], &loops[j]).unwrap()
        })
        .collect();
    if let Some(&(i, j)) = bad.first() {
        return Err(format!("{} disagreements, first {:?} vs {:?}", bad.len(), loops[i], loops[j]));
    }
    Ok(pairs.len())
}

fn oracle_equivalence() -> Check {
    let small: Vec<RightLoop> = default_catalog()
        .iter()
        .flat_map(|e| setting(&e.group, &e.subgroup).loops)
        .filter(|l| l.order() <= 5)
        .collect();
    let a = oracle_disagreements(&small)?;
    let b = oracle_disagreements(&setting("alt:4", "(1,2)(3,4)").loops)?;
    let c = oracle_disagreements(&setting("dihedral:7", "x").loops)?;
    Ok(format!("{a} catalog pairs of order ≤ 5, {b} Alt(4) pairs, {c} D₁₄ pairs"))
}

fn right_pseudo(l: &RightLoop, eta: &[usize], c: usize) -> bool {
    let n = l.order();
    (0..n).all(|x| (0..n).all(|y| l.op(eta[l.op(x, y)], c) == l.op(eta[x], l.op(eta[y], c))))
}

fn left_pseudo(l: &RightLoop, eta: &[usize], c: usize) -> bool {
    let n = l.order();
    (0..n).all(|x| (0..n).all(|y| l.op(c, eta[l.op(x, y)]) == l.op(l.op(c, eta[x]), eta[y])))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every autotopy of `l`, by trying all `(α, β)` with `γ = R_{β(0)} α`.
fn autotopies_by_search(l: &RightLoop, perms: &[Vec<usize>]) -> BTreeSet<IsotopyWitness> {
    let n = l.order();
    let mut out = BTreeSet::new();
    for alpha in perms {
        for beta in perms {
            let gamma: Vec<usize> = alpha.iter().map(|&a| l.op(a, beta[0])).collect();
            if gamma.iter().collect::<HashSet<_>>().len() != n {
                continue;
            }
            if (0..n).all(|x| (0..n).all(|y| l.op(alpha[x], beta[y]) == gamma[l.op(x, y)])) {
                out.insert(IsotopyWitness { alpha: alpha.clone(), beta: beta.clone(), gamma });
            }
        }
    }
    out
}

fn pseudo_automorphisms_z5() -> Result<usize, String> {
    let perms = permutations(5);
    let mut total = 0;
    for k in 0..16u64 {
        let b = SubsetB::from_mask(5, k << 1).unwrap();
        let l = znb_right_loop(&b);
        let u = autotopy_group(&l).map_err(|e| e.to_string())?;
        let searched = autotopies_by_search(&l, &perms);
        let listed: BTreeSet<IsotopyWitness> = u.elements.iter().cloned().collect();
        ensure!(listed == searched, "B = {b}: {} listed, {} by search", listed.len(), searched.len());
        for w in &u.elements {
            let (a0, b0) = (w.alpha[0], w.beta[0]);
            let a1 = [a0 == 0, w.beta == w.gamma, right_pseudo(&l, &w.alpha, b0)];
            let a2 = [b0 == 0, w.alpha == w.gamma, l.is_left_nonsingular(a0) && left_pseudo(&l, &w.beta, a0)];
            ensure!(a1.iter().all(|&v| v == a1[0]) && a2.iter().all(|&v| v == a2[0]), "B = {b}: {w:?}");
        }
        for eta in &perms {
            for c in 0..5 {
                let rc: Vec<usize> = eta.iter().map(|&v| l.op(v, c)).collect();
                let triple = IsotopyWitness { alpha: eta.clone(), beta: rc.clone(), gamma: rc };
                ensure!(right_pseudo(&l, eta, c) == listed.contains(&triple), "B = {b}: η = {eta:?}, c = {c}");
                if l.is_left_nonsingular(c) {
                    let lc: Vec<usize> = eta.iter().map(|&v| l.op(c, v)).collect();
                    let triple = IsotopyWitness { alpha: lc.clone(), beta: eta.clone(), gamma: lc };
                    ensure!(left_pseudo(&l, eta, c) == listed.contains(&triple), "B = {b}: η = {eta:?}, c = {c} (left)");
                }
            }
        }
        total += u.u_size;
    }
    Ok(total)
}

fn property_suite() -> Check {
    let mut witnesses = 0;
    for e in default_catalog() {
        let s = setting(&e.group, &e.subgroup);
        let p = classify(&s.loops, Relation::Isotopy);
        for c in &p.classes {
            let first = &s.loops[c.members[0]];
            for (&m, w) in c.members.iter().zip(&c.witnesses) {
                let other = &s.loops[m];
                ensure!(w.verify(first, other), "{}: witness fails", e.label);
                let image: BTreeSet<usize> = first.left_nonsingular_elements().iter().map(|&a| w.alpha[a]).collect();
                let lns: BTreeSet<usize> = other.left_nonsingular_elements().into_iter().collect();
                ensure!(image == lns, "{}: α does not map LNS onto LNS", e.label);
                ensure!(first.structure_flags().is_loop == other.structure_flags().is_loop, "{}: loop and non-loop isotopic", e.label);
                witnesses += 1;
            }
        }
    }

    let s = setting("dihedral:6", "y^3 x");
    let n = Subgroup::generated(s.group.clone(), &[s.element("y^3")]).unwrap();
    ensure!(s.subgroup.order() == 4 && core(&s.subgroup).members() == n.members(), "core of {{1,y³,x,xy³}} is not {{1,y³}}");
    let q = quotient(&n).map_err(|e| e.to_string())?;
    let qh = q.image(&s.subgroup);
    let qcosets = Arc::new(right_cosets(&q.group, &qh).unwrap());
    let qloops: Vec<RightLoop> =
        enumerate_transversals(qcosets, 1 << 20).unwrap().map(|t| t.induced_right_loop()).collect();
    let (lhs, rhs) = (classify(&s.loops, Relation::Isotopy).len(), classify(&qloops, Relation::Isotopy).len());
    ensure!(lhs == rhs, "|Itp(D₁₂,H)| = {lhs}, |Itp(D₁₂/N,H/N)| = {rhs}");

    let d8 = setting("dihedral:4", "x");
    let itp = classify(&d8.loops, Relation::Isotopy).len();
    ensure!(d8.group.is_nilpotent() && !is_normal(&d8.subgroup) && itp >= 2, "D₈: |Itp| = {itp}");

    let autotopies = pseudo_automorphisms_z5()?;

    let o = Command::new(env!("CARGO_BIN_EXE_nrt")).args(["verify", "--all"]).output().map_err(|e| e.to_string())?;
    ensure!(o.status.success(), "verify --all exited with {:?}", o.status.code());
    Ok(format!(
        "{witnesses} class witnesses; quotient {lhs} = {rhs}; D₈ |Itp| = {itp}; {autotopies} ℤ₅ᴮ autotopies; verify --all exits 0"
    ))
}

fn witness_integrity() -> Check {
    let mut checked = 0;
    for e in default_catalog() {
        let s = setting(&e.group, &e.subgroup);
        if s.loops[0].order() > 7 {
            continue;
        }
        for i in 0..s.loops.len() {
            for j in i..s.loops.len() {
                if let Some(w) = are_isotopic(&s.loops[i], &s.loops[j]) {
                    ensure!(w.verify(&s.loops[i], &s.loops[j]), "{}: isotopy witness fails", e.label);
                    checked += 1;
                }
                if let Some(f) = are_isomorphic(&s.loops[i], &s.loops[j]) {
                    ensure!(verify_isomorphism(&s.loops[i], &s.loops[j], &f), "{}: isomorphism fails", e.label);
                    checked += 1;
                }
            }
        }
    }

    // Mutation: corrupt one entry of a table isotopic to S₁ in Alt(4), with a
    // compensating swap in the same column so the mutant stays a right loop.
    let s = setting("alt:4", "(1,2)(3,4)");
    let p = classify(&s.loops, Relation::Isotopy);
    let class = p.classes.iter().find(|c| c.members.len() > 1).ok_or("no class with two members")?;
    let (src, dst) = (&s.loops[class.members[0]], &s.loops[class.members[1]]);
    let w = are_isotopic(src, dst).ok_or("class members are not isotopic")?;
    let n = dst.order();
    let (mut flips, mut mutants) = (0, 0);
    for x in 1..n {
        for y in 1..n {
            for new in (1..n).filter(|&v| v != y) {
                let mut rows = dst.rows();
                let old = rows[x][y];
                if new == old {
                    continue;
                }
                rows[x][y] = new;
                ensure!(RightLoop::validate(rows.clone()).is_err(), "a single corrupted entry still validates");
                let x2 = (1..n).find(|&r| r != x && rows[r][y] == new).expect("value sits in another row");
                rows[x2][y] = old;
                let mutant = RightLoop::validate(rows).map_err(|e| e.to_string())?;
                mutants += 1;
                ensure!(!w.verify(src, &mutant), "the old witness still verifies against the mutant");
                let oracle = brute_force_isotopy_oracle(src, &mutant).unwrap();
                let found = are_isotopic(src, &mutant);
                ensure!(found.is_some() == oracle, "search and oracle disagree on a mutant");
                match &found {
                    Some(w2) => ensure!(w2.verify(src, &mutant), "mutant witness fails"),
                    None => flips += 1,
                }
            }
        }
    }
    ensure!(flips > 0, "no mutation flipped the isotopy verdict");
    let mut bad = w.clone();
    bad.gamma.swap(1, 2);
    ensure!(!bad.verify(src, dst), "a corrupted witness still verifies");
    Ok(format!("{checked} returned witnesses re-verified; {flips} of {mutants} mutants flipped the isotopy verdict"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Sym(3) classification", Some(Duration::from_secs(1)), sym3),
        ("Alt(4) classification", Some(Duration::from_secs(30)), alt4),
        ("dihedral triple agreement", Some(Duration::from_secs(60)), dihedral_triple),
        ("cycle-index identity", None, cycle_index_identity),
        ("Burnside cross-check", None, burnside),
        ("loop-transversal census", None, census),
        ("criterion soundness", Some(Duration::from_secs(60)), criterion_soundness),
        ("oracle equivalence", None, oracle_equivalence),
        ("property suite", None, property_suite),
        ("witness integrity", None, witness_integrity),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        let (verdict, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {verdict} [{elapsed:.2?}] {name}: {detail}", i + 1);
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
