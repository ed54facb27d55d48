use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, GroupError, GroupKind};

const MAX_PERM_DEGREE: usize = 8;

/// `cyclic:n`, `dihedral:n`, `sym:k`, `alt:k` or `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    File(String),
}

impl FromStr for GroupDescriptor {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadDescriptor(s.to_string());
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        if kind == "file" {
            return if arg.is_empty() { Err(bad()) } else { Ok(GroupDescriptor::File(arg.to_string())) };
        }
        let n: usize = arg.trim().parse().map_err(|_| bad())?;
        let d = match kind.trim() {
            "cyclic" if n >= 1 => GroupDescriptor::Cyclic(n),
            "dihedral" if n >= 2 => GroupDescriptor::Dihedral(n),
            "sym" if (1..=MAX_PERM_DEGREE).contains(&n) => GroupDescriptor::Symmetric(n),
            "alt" if (1..=MAX_PERM_DEGREE).contains(&n) => GroupDescriptor::Alternating(n),
            _ => return Err(bad()),
        };
        Ok(d)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupDescriptor::Symmetric(k) => write!(f, "sym:{k}"),
            GroupDescriptor::Alternating(k) => write!(f, "alt:{k}"),
            GroupDescriptor::File(p) => write!(f, "file:{p}"),
        }
    }
}

pub fn build_named_group(desc: &GroupDescriptor) -> Result<FiniteGroup, GroupError> {
    Ok(match *desc {
        GroupDescriptor::Cyclic(n) => cyclic(n),
        GroupDescriptor::Dihedral(n) => dihedral(n),
        GroupDescriptor::Symmetric(k) => symmetric(k, false),
        GroupDescriptor::Alternating(k) => symmetric(k, true),
        GroupDescriptor::File(ref path) => {
            let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io { path: path.clone(), message: e.to_string() })?;
            let parsed = super::parse_table_text(&text)?;
            FiniteGroup::from_rows(parsed.rows, parsed.names)?
        }
    })
}

fn power_name(base: &str, letter: &str, k: usize) -> String {
    match k {
        0 if base.is_empty() => "1".to_string(),
        0 => base.to_string(),
        1 => format!("{base}{letter}"),
        _ => format!("{base}{letter}^{k}"),
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    let names = (0..n).map(|k| power_name("", "a", k)).collect();
    FiniteGroup::from_trusted_table(table, names, GroupKind::Cyclic(n))
}

/// Elements ordered `1, y, …, y^{n−1}, x, xy, …, xy^{n−1}`; index `s·n + i`
/// is `x^s y^i`, and `y^i x = x y^{−i}`.
fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (sa, ia) = (a / n, a % n);
        for b in 0..order {
            let (sb, jb) = (b / n, b % n);
            let i = if sb == 0 { ia } else { (n - ia) % n };
            let s = (sa + sb) % 2;
            table.push((s * n + (i + jb) % n) as u32);
        }
    }
    let names = (0..order)
        .map(|k| if k < n { power_name("", "y", k) } else { power_name("x", "y", k - n) })
        .collect();
    FiniteGroup::from_trusted_table(table, names, GroupKind::Dihedral(n))
}

fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = p[c] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle notation on points `1..=k`; the identity is `I`.
pub(crate) fn cycle_name(p: &[u8]) -> String {
    let mut out = String::new();
    let mut seen = vec![false; p.len()];
    for s in 0..p.len() {
        if seen[s] || p[s] as usize == s {
            continue;
        }
        let mut cycle = Vec::new();
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            cycle.push((c + 1).to_string());
            c = p[c] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        "I".to_string()
    } else {
        out
    }
}

/// Permutations in lexicographic order of their image arrays.
fn symmetric(k: usize, even_only: bool) -> FiniteGroup {
    let mut perms = Vec::new();
    let mut cur: Vec<u8> = (0..k as u8).collect();
    loop {
        if !even_only || is_even(&cur) {
            perms.push(cur.clone());
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let kind = if even_only { GroupKind::Alternating(k) } else { GroupKind::Symmetric(k) };
    FiniteGroup::from_permutations(perms, names, kind)
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(super) fn split_generators(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' | ';' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            c => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

pub(super) fn parse_element(g: &FiniteGroup, s: &str) -> Result<usize, GroupError> {
    let unknown = || GroupError::UnknownElement(s.to_string());
    if let Some(i) = g.lookup_name(s) {
        return Ok(i);
    }
    if matches!(s, "1" | "I" | "e" | "()" | "id") {
        return Ok(0);
    }
    if let Some(rest) = s.strip_prefix('#') {
        let i: usize = rest.parse().map_err(|_| unknown())?;
        return if i < g.order() { Ok(i) } else { Err(GroupError::OutOfRange(format!("element index {i} >= order {}", g.order()))) };
    }
    match *g.kind() {
        GroupKind::Symmetric(k) | GroupKind::Alternating(k) => {
            let images = parse_cycles(s, k).ok_or_else(unknown)?;
            g.index_of_permutation(&images).ok_or_else(unknown)
        }
        GroupKind::Dihedral(n) => {
            let x = n;
            let y = 1 % (2 * n);
            eval_word(g, s, &[('x', x), ('y', y)]).ok_or_else(unknown)
        }
        GroupKind::Cyclic(n) => eval_word(g, s, &[('a', 1 % n), ('y', 1 % n)]).ok_or_else(unknown),
        GroupKind::Table => Err(unknown()),
    }
}

/// Product of cycles such as `(1,2)(2,3)`; rightmost factor acts first.
fn parse_cycles(s: &str, k: usize) -> Option<Vec<u8>> {
    let mut result: Vec<u8> = (0..k as u8).collect();
    let mut rest = s.trim();
    if !rest.starts_with('(') {
        return None;
    }
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let inner_end = rest.find(')')?;
        let inner = rest.strip_prefix('(')?.get(..inner_end - 1)?;
        rest = rest[inner_end + 1..].trim_start();
        if inner.trim().is_empty() {
            continue;
        }
        let points: Vec<usize> = inner.split(',').map(|t| t.trim().parse::<usize>().ok()).collect::<Option<_>>()?;
        if points.iter().any(|&p| p == 0 || p > k) {
            return None;
        }
        let mut cycle: Vec<u8> = (0..k as u8).collect();
        for w in 0..points.len() {
            let from = points[w] - 1;
            let to = points[(w + 1) % points.len()] - 1;
            if cycle[from] as usize != from {
                return None;
            }
            cycle[from] = to as u8;
        }
        cycles.push(cycle);
    }
    for c in cycles.iter().rev() {
        // result := c ∘ result
        result = result.iter().map(|&i| c[i as usize]).collect();
    }
    Some(result)
}

/// Words such as `xy^2`, `y^-1x`, `x*y`.
fn eval_word(g: &FiniteGroup, s: &str, letters: &[(char, usize)]) -> Option<usize> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if chars.is_empty() {
        return None;
    }
    let mut acc = 0;
    let mut i = 0;
    while i < chars.len() {
        let &(_, base) = letters.iter().find(|(c, _)| *c == chars[i])?;
        i += 1;
        let mut exp: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            exp = chars[start..i].iter().collect::<String>().parse().ok()?;
        }
        let ord = g.element_order(base) as i64;
        let e = exp.rem_euclid(ord);
        for _ in 0..e {
            acc = g.mul(acc, base);
        }
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> FiniteGroup {
        build_named_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("dihedral:3".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::Dihedral(3));
        assert!("dihedral:1".parse::<GroupDescriptor>().is_err());
        assert!("sym:9".parse::<GroupDescriptor>().is_err());
        assert!("cyclic:0".parse::<GroupDescriptor>().is_err());
        assert!("foo:3".parse::<GroupDescriptor>().is_err());
        assert!("sym".parse::<GroupDescriptor>().is_err());
        assert_eq!("file:/tmp/x".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::File("/tmp/x".into()));
    }

    #[test]
    fn small_groups_satisfy_axioms() {
        for d in ["cyclic:1", "cyclic:6", "dihedral:2", "dihedral:3", "dihedral:7", "sym:1", "sym:3", "sym:4", "alt:4", "alt:5"] {
            build(d).validate().unwrap();
        }
    }

    #[test]
    fn orders() {
        assert_eq!(build("dihedral:3").order(), 6);
        assert_eq!(build("sym:3").order(), 6);
        assert_eq!(build("alt:4").order(), 12);
        assert_eq!(build("sym:5").order(), 120);
    }

    #[test]
    fn large_symmetric_groups_use_lazy_multiplication() {
        let g = build("sym:7");
        assert_eq!(g.order(), 5040);
        let a = g.parse_element("(1,2,3,4,5,6,7)").unwrap();
        assert_eq!(g.element_order(a), 7);
        let t = g.parse_element("(1,2)").unwrap();
        assert_eq!(g.mul(t, t), 0);
        assert_eq!(g.mul(a, g.inv(a)), 0);
    }

    #[test]
    fn dihedral_presentation_order() {
        let g = build("dihedral:5");
        assert_eq!(g.name(0), "1");
        assert_eq!(g.name(1), "y");
        assert_eq!(g.name(2), "y^2");
        assert_eq!(g.name(5), "x");
        assert_eq!(g.name(7), "xy^2");
        let x = 5;
        let y = 1;
        // xyx = y⁻¹
        assert_eq!(g.mul(g.mul(x, y), x), g.inv(y));
        assert_eq!(g.parse_element("xy^2").unwrap(), 7);
        assert_eq!(g.parse_element("y^-1").unwrap(), 4);
        assert_eq!(g.parse_element("yx").unwrap(), g.mul(y, x));
    }

    #[test]
    fn cycle_notation_uses_functional_composition() {
        let g = build("sym:3");
        let t23 = g.parse_element("(2,3)").unwrap();
        let t13 = g.parse_element("(1,3)").unwrap();
        // (2,3)(1,3): apply (1,3) first: 1→3→2, 2→2→3, 3→1→1
        assert_eq!(g.name(g.mul(t23, t13)), "(1,2,3)");
        assert_eq!(g.parse_element("(2,3)(1,3)").unwrap(), g.mul(t23, t13));
        assert_eq!(g.parse_element("(3,2)").unwrap(), t23);
    }

    #[test]
    fn alt4_contains_double_transposition() {
        let g = build("alt:4");
        let x = g.parse_element("(1,2)(3,4)").unwrap();
        assert_eq!(g.element_order(x), 2);
        assert!(g.parse_element("(1,2)").is_err());
    }

    #[test]
    fn generator_lists() {
        let g = build("alt:4");
        assert_eq!(g.parse_generators("(1,2)(3,4), (1,2,3)").unwrap().len(), 2);
        let d = build("dihedral:6");
        assert_eq!(d.parse_generators("x;y^3").unwrap(), vec![6, 3]);
        assert!(d.parse_generators("").unwrap().is_empty());
    }
}
