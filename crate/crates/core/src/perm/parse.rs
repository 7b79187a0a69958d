//! Cycle-notation parsing and the `.perm` group file format.
//!
//! A `.perm` file is line-based UTF-8:
//!
//! ```text
//! degree 7
//! gen (2,3)(6,7)
//! gen (4,6)(5,7)
//! order 8
//! ```
//!
//! `degree` must come first; each `gen` line holds one permutation in
//! cycle notation (parenthesized comma-separated 1-based points, fixed
//! points omitted, whitespace insignificant); an optional `order` line
//! is asserted against the stabilizer chain after loading. Lines
//! starting with `#` and blank lines are ignored.

use std::path::Path;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Parses cycle notation like `(1,2)(3,4,5)` into a permutation of the
/// given degree. `()` denotes the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut chars = text.chars().peekable();
    let mut saw_cycle = false;

    loop {
        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some('(') => {}
            Some(c) => {
                return Err(Error::input(format!(
                    "unexpected character '{c}' in cycle notation"
                )))
            }
        }
        saw_cycle = true;
        // read one cycle
        let mut cycle: Vec<u32> = Vec::new();
        let mut num = String::new();
        let push_point = |num: &mut String, cycle: &mut Vec<u32>| -> Result<()> {
            let point: u64 = num
                .parse()
                .map_err(|_| Error::input("invalid point number"))?;
            if point == 0 || point > degree as u64 {
                return Err(Error::input(format!(
                    "point {point} out of range 1..={degree}"
                )));
            }
            cycle.push((point - 1) as u32);
            num.clear();
            Ok(())
        };
        loop {
            match chars.next() {
                Some(c) if c.is_ascii_digit() => num.push(c),
                Some(c) if c.is_whitespace() => {}
                Some(',') => {
                    if num.is_empty() {
                        return Err(Error::input("empty entry in cycle"));
                    }
                    push_point(&mut num, &mut cycle)?;
                }
                Some(')') => {
                    if num.is_empty() {
                        if cycle.is_empty() {
                            break; // "()" is the identity
                        }
                        return Err(Error::input("trailing comma in cycle"));
                    }
                    push_point(&mut num, &mut cycle)?;
                    break;
                }
                Some(c) => {
                    return Err(Error::input(format!("unexpected character '{c}' in cycle")))
                }
                None => return Err(Error::input("unterminated cycle")),
            }
        }
        // apply the cycle
        if cycle.len() >= 2 {
            let mut seen = cycle.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != cycle.len() {
                return Err(Error::input("repeated point within a cycle"));
            }
            for (k, &p) in cycle.iter().enumerate() {
                let target = cycle[(k + 1) % cycle.len()];
                if images[p as usize] != p {
                    return Err(Error::input(format!(
                        "point {} appears in two cycles",
                        p + 1
                    )));
                }
                images[p as usize] = target;
            }
        }
    }
    if !saw_cycle {
        return Err(Error::input("empty cycle expression"));
    }
    Permutation::from_images(images)
}

/// A parsed `.perm` file: the group plus the asserted order, if present.
#[derive(Debug, Clone)]
pub struct GroupFile {
    pub group: PermGroup,
    pub asserted_order: Option<u64>,
}

/// Parses `.perm` content. `source` names the input in error messages.
pub fn parse_perm_source(source: &str, content: &str) -> Result<GroupFile> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut asserted_order: Option<u64> = None;

    for (lineno, raw) in content.lines().enumerate() {
        let line = raw.trim();
        let at = |msg: String| Error::data(format!("{source}:{}: {msg}", lineno + 1));
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => return Err(at(format!("malformed line '{line}'"))),
        };
        match key {
            "degree" => {
                if degree.is_some() {
                    return Err(at("duplicate degree line".into()));
                }
                let d: usize = rest
                    .parse()
                    .map_err(|_| at(format!("invalid degree '{rest}'")))?;
                if d == 0 {
                    return Err(at("degree must be positive".into()));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| at("gen before degree".into()))?;
                let p = parse_cycles(d, rest).map_err(|e| at(e.to_string()))?;
                gens.push(p);
            }
            "order" => {
                let n: u64 = rest
                    .parse()
                    .map_err(|_| at(format!("invalid order '{rest}'")))?;
                asserted_order = Some(n);
            }
            other => return Err(at(format!("unknown directive '{other}'"))),
        }
    }

    let degree = degree.ok_or_else(|| Error::data(format!("{source}: missing degree line")))?;
    if gens.is_empty() {
        return Err(Error::data(format!("{source}: no generators")));
    }
    let group = PermGroup::new(degree, gens).map_err(|e| Error::data(format!("{source}: {e}")))?;

    if let Some(n) = asserted_order {
        let actual = group.order();
        if actual != n {
            return Err(Error::data(format!(
                "{source}: order assertion failed: file says {n}, chain gives {actual}"
            )));
        }
    }
    Ok(GroupFile {
        group,
        asserted_order,
    })
}

/// Loads and validates a `.perm` file from disk.
pub fn load_perm_file(path: &Path) -> Result<GroupFile> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
    parse_perm_source(&path.display().to_string(), &content)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_product_of_cycles() {
        let p = parse_cycles(5, "(1,2)(3,4,5)").unwrap();
        assert_eq!(p.image(0), 1);
        assert_eq!(p.image(1), 0);
        assert_eq!(p.image(2), 3);
        assert_eq!(p.image(3), 4);
        assert_eq!(p.image(4), 2);
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_cycles(5, "( 1 , 2 ) ( 3 , 4 , 5 )").unwrap();
        let b = parse_cycles(5, "(1,2)(3,4,5)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn identity_is_empty_parens() {
        assert!(parse_cycles(4, "()").unwrap().is_identity());
    }

    #[test]
    fn rejects_out_of_range_and_repeats() {
        assert!(parse_cycles(3, "(1,4)").is_err());
        assert!(parse_cycles(3, "(1,1)").is_err());
        assert!(parse_cycles(4, "(1,2)(2,3)").is_err());
        assert!(parse_cycles(3, "(0,1)").is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = parse_cycles(6, "(1,3,5)(2,6)").unwrap();
        let q = parse_cycles(6, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parses_group_file_and_checks_order() {
        let content = "# symmetric group on 3 points\ndegree 3\ngen (1,2)\ngen (1,2,3)\norder 6\n";
        let gf = parse_perm_source("s3.perm", content).unwrap();
        assert_eq!(gf.group.order(), 6);
        assert_eq!(gf.asserted_order, Some(6));
    }

    #[test]
    fn order_mismatch_is_data_error_naming_source() {
        let content = "degree 3\ngen (1,2)\norder 6\n";
        let err = parse_perm_source("bad.perm", content).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.perm"), "{msg}");
        assert!(msg.contains("order assertion"), "{msg}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let content = "degree 3\ngen (1,2\n";
        let err = parse_perm_source("x.perm", content).unwrap_err();
        assert!(err.to_string().contains("x.perm:2"), "{err}");
    }
}
