//! Line-oriented text format for group definitions: `# comment`, `name`,
//! `degree`, repeated `gen` lines with cycle notation, plus ignorable
//! `family`/`parameters` metadata. Unknown keys are rejected.

use crate::group::{FiniteGroup, GroupConfig};
use crate::perm::Permutation;
use crate::{Error, Result};

fn file_err(line: usize, msg: impl Into<String>) -> Error {
    Error::GroupFile { line, msg: msg.into() }
}

pub fn parse_group_file(text: &str, cfg: &GroupConfig) -> Result<(String, FiniteGroup)> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "name" => {
                if name.is_some() {
                    return Err(file_err(line_no, "duplicate name line"));
                }
                if rest.is_empty() {
                    return Err(file_err(line_no, "name line needs a value"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(file_err(line_no, "duplicate degree line"));
                }
                let d: usize = rest
                    .parse()
                    .map_err(|_| file_err(line_no, format!("bad degree value {rest:?}")))?;
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| file_err(line_no, "gen line before degree"))?;
                let p = Permutation::parse_cycles(rest, d)
                    .map_err(|e| file_err(line_no, e.to_string()))?;
                gens.push(p);
            }
            "family" | "parameters" => {}
            other => {
                return Err(file_err(line_no, format!("unknown key {other:?}")));
            }
        }
    }
    let at_end = last_line.max(1);
    let name = name.ok_or_else(|| file_err(at_end, "missing name line"))?;
    let degree = degree.ok_or_else(|| file_err(at_end, "missing degree line"))?;
    let g = FiniteGroup::generate_with_config(degree, gens, *cfg)?;
    Ok((name, g))
}

/// Text whose parse rebuilds the same element table. Identity generators
/// are dropped; the trivial group writes no gen lines at all.
pub fn write_group_file(name: &str, g: &FiniteGroup) -> String {
    let mut out = String::new();
    out.push_str("# grouplab group file\n");
    out.push_str(&format!("name {name}\n"));
    out.push_str(&format!("degree {}\n", g.degree()));
    for gen in g.generators() {
        if gen.is_identity() {
            continue;
        }
        out.push_str(&format!("gen {}\n", gen.cycle_string()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn cfg() -> GroupConfig {
        GroupConfig::default()
    }

    #[test]
    fn parses_a_minimal_file() {
        let (name, g) = parse_group_file("name C2\ndegree 2\ngen (1 2)\n", &cfg()).unwrap();
        assert_eq!(name, "C2");
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn accepts_comments_blank_lines_and_metadata() {
        let text = "# built by hand\n\nname K4\nfamily elementary abelian\nparameters p=2 r=2\ndegree 4\ngen (1 2)\ngen (3 4)\n";
        let (name, g) = parse_group_file(text, &cfg()).unwrap();
        assert_eq!(name, "K4");
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn reports_line_numbers_for_malformed_input() {
        let repeated = parse_group_file("name X\ndegree 3\ngen (1 2)(2 3)\n", &cfg());
        assert!(
            matches!(repeated, Err(Error::GroupFile { line: 3, ref msg }) if msg.contains("repeats")),
            "{repeated:?}"
        );
        let unknown = parse_group_file("name X\nfoo bar\n", &cfg());
        assert!(matches!(unknown, Err(Error::GroupFile { line: 2, ref msg }) if msg.contains("foo")));
        let dup = parse_group_file("name X\nname Y\n", &cfg());
        assert!(matches!(dup, Err(Error::GroupFile { line: 2, .. })));
        let early_gen = parse_group_file("name X\ngen (1 2)\ndegree 2\n", &cfg());
        assert!(matches!(early_gen, Err(Error::GroupFile { line: 2, .. })));
        let bad_degree = parse_group_file("name X\ndegree two\n", &cfg());
        assert!(matches!(bad_degree, Err(Error::GroupFile { line: 2, .. })));
        let missing = parse_group_file("degree 2\ngen (1 2)\n", &cfg());
        assert!(matches!(missing, Err(Error::GroupFile { ref msg, .. }) if msg.contains("name")));
        let empty = parse_group_file("", &cfg());
        assert!(matches!(empty, Err(Error::GroupFile { line: 1, .. })));
    }

    #[test]
    fn round_trips_preserve_the_element_table() {
        for g in [
            corpus::dihedral(8).unwrap(),
            corpus::generalized_quaternion(8).unwrap(),
            corpus::cyclic(1).unwrap(),
        ] {
            let text = write_group_file("roundtrip", &g);
            let (name, back) = parse_group_file(&text, &cfg()).unwrap();
            assert_eq!(name, "roundtrip");
            assert_eq!(back, g);
        }
    }
}
