//! Text format shared by Cayley tables and right-loop tables:
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! names: e a b
//! ```
//!
//! Line 1 holds the order `n`; the next `n` lines hold the rows (0-based
//! indices, row `a` column `b` is `a·b`); an optional trailing `names:` line
//! labels the elements. Blank lines after the table are ignored.

use super::GroupError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableText {
    pub rows: Vec<Vec<usize>>,
    pub names: Option<Vec<String>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse { line, column, message: message.into() }
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses the layout only; semantic validation belongs to the caller.
pub fn parse_table_text(text: &str) -> Result<TableText, GroupError> {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.first().ok_or_else(|| parse_err(1, 1, "missing order line"))?;
    let toks = tokens(header);
    let n: usize = match toks.as_slice() {
        [(_, t)] => t.parse().map_err(|_| parse_err(1, 1, format!("order `{t}` is not a positive integer")))?,
        [] => return Err(parse_err(1, 1, "missing order")),
        [_, (c, _), ..] => return Err(parse_err(1, *c, "unexpected token after order")),
    };
    if n == 0 {
        return Err(parse_err(1, 1, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let lineno = r + 2;
        let line = lines.get(r + 1).ok_or_else(|| parse_err(lineno, 1, format!("expected row {r}, found end of input")))?;
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map(|t| t.0).unwrap_or(line.len() + 1);
            return Err(parse_err(lineno, col, format!("row {r} has {} entries, expected {n}", toks.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (col, t) in toks {
            let v: usize = t.parse().map_err(|_| parse_err(lineno, col, format!("`{t}` is not an index")))?;
            if v >= n {
                return Err(parse_err(lineno, col, format!("index {v} out of range for order {n}")));
            }
            row.push(v);
        }
        rows.push(row);
    }
    let mut names = None;
    for (i, line) in lines.iter().enumerate().skip(n + 1) {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        if names.is_some() {
            return Err(parse_err(lineno, 1, "unexpected content after names line"));
        }
        let rest = line
            .trim_start()
            .strip_prefix("names:")
            .ok_or_else(|| parse_err(lineno, 1, "expected `names:` line or end of input"))?;
        let ns: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if ns.len() != n {
            return Err(parse_err(lineno, 1, format!("{} names for order {n}", ns.len())));
        }
        names = Some(ns);
    }
    Ok(TableText { rows, names })
}

pub fn write_table_text(rows: &[Vec<usize>], names: Option<&[String]>) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(ns) = names {
        out.push_str("names: ");
        out.push_str(&ns.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn parses_table_with_names() {
        let t = parse_table_text("3\n0 1 2\n1 2 0\n2 0 1\nnames: e a b\n").unwrap();
        assert_eq!(t.rows[1], vec![1, 2, 0]);
        assert_eq!(t.names.unwrap()[2], "b");
    }

    #[test]
    fn diagnostics_carry_line_and_column() {
        let err = parse_table_text("3\n0 1 2\n1 x 0\n2 0 1\n").unwrap_err();
        assert_eq!(err, parse_err(3, 3, "`x` is not an index"));
        let err = parse_table_text("2\n0 1\n1 0 0\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, column: 5, .. }));
        let err = parse_table_text("2\n0 1\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, .. }));
        let err = parse_table_text("2\n0 1\n1 7\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, column: 3, .. }));
        assert!(parse_table_text("2\n0 1\n1 0\nnonsense\n").is_err());
    }

    #[test]
    fn round_trip_through_group() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let names = vec!["e".to_string(), "t".to_string()];
        let text = write_table_text(&rows, Some(&names));
        let parsed = parse_table_text(&text).unwrap();
        let g = FiniteGroup::from_rows(parsed.rows, parsed.names).unwrap();
        assert_eq!(g.table_rows(), rows);
    }
}
