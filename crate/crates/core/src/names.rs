//! Human names for type graphs, as aliases over canonical codes.
//!
//! A fixed set of small types is named by construction. Other enumerated
//! types get systematic names `k:index` (position in the sorted code list
//! for `k`). Extra names can be loaded from an alias file with lines
//! `<name> <code>`; `#` starts a comment.

use std::collections::BTreeMap;
use std::path::Path;

use crate::enumeration;
use crate::transforms::{medial_type_double, medial_type_extended};
use crate::typegraph::{extend, CanonicalCode, TypeGraph};

/// Environment variable naming an alias file.
pub const ALIAS_ENV: &str = "SYMTYPE_ALIASES";

/// Largest `k` for which systematic names are computed on demand.
pub const SYSTEMATIC_MAX_K: usize = 8;

/// The one-vertex type with three semi-edges.
pub fn type_1() -> TypeGraph {
    TypeGraph::new(vec![0], vec![0], vec![0]).expect("type 1")
}

/// The two-vertex type whose semi-edge colors at each vertex are exactly
/// those listed in `semi_edges` (digits from `0`, `1`, `2`); the remaining
/// colors join the two vertices.
pub fn type_2(semi_edges: &str) -> TypeGraph {
    let table = |c: char| {
        if semi_edges.contains(c) {
            vec![0, 1]
        } else {
            vec![1, 0]
        }
    };
    TypeGraph::new(table('0'), table('1'), table('2')).expect("two-vertex type")
}

/// The self-dual three-vertex type: a 0-2 double edge plus a color-1 edge
/// to a third vertex.
pub fn type_3_02() -> TypeGraph {
    TypeGraph::new(vec![1, 0, 2], vec![2, 1, 0], vec![1, 0, 2]).expect("type 3^02")
}

/// The medial type of `3^02` under its proper polarity.
pub fn type_3_0() -> TypeGraph {
    medial_type_extended(&extend(&type_3_02(), vec![0, 1, 2]).expect("identity polarity"))
}

pub fn type_3_2() -> TypeGraph {
    crate::transforms::dual_type(&type_3_0())
}

const TWO_VERTEX: [&str; 7] = ["", "0", "1", "2", "01", "02", "12"];

fn two_vertex_name(semi: &str) -> String {
    if semi.is_empty() {
        "2".to_string()
    } else {
        format!("2_{semi}")
    }
}

/// Named types in registry order.
pub fn pinned() -> Vec<(String, TypeGraph)> {
    let mut out = vec![("1".to_string(), type_1())];
    for semi in TWO_VERTEX {
        out.push((two_vertex_name(semi), type_2(semi)));
    }
    out.push(("3^02".to_string(), type_3_02()));
    out.push(("3^0".to_string(), type_3_0()));
    out.push(("3^2".to_string(), type_3_2()));
    for (name, source) in [
        ("4_G", type_2("")),
        ("4_H", type_2("0")),
        ("4_A", type_2("01")),
        ("4_C", type_2("1")),
        ("4_F", type_2("02")),
        ("6_D", type_3_0()),
        ("6_M", type_3_02()),
    ] {
        out.push((name.to_string(), medial_type_double(&source)));
    }
    out
}

/// Looks up a pinned type by name.
pub fn by_name(name: &str) -> Option<TypeGraph> {
    pinned().into_iter().find(|(n, _)| n == name).map(|(_, t)| t)
}

#[derive(Debug, Clone, Default)]
pub struct Registry {
    names: BTreeMap<CanonicalCode, String>,
}

impl Registry {
    /// The pinned names only.
    pub fn builtin() -> Self {
        let mut names = BTreeMap::new();
        for (name, t) in pinned() {
            names.entry(t.canonical_code()).or_insert(name);
        }
        Registry { names }
    }

    /// Pinned names plus the alias file named by [`ALIAS_ENV`], if set.
    pub fn from_env() -> std::io::Result<Self> {
        let mut reg = Self::builtin();
        if let Some(path) = std::env::var_os(ALIAS_ENV) {
            reg.load(Path::new(&path))?;
        }
        Ok(reg)
    }

    /// Adds aliases from a file. Later entries override earlier ones.
    pub fn load(&mut self, path: &Path) -> std::io::Result<()> {
        let text = std::fs::read_to_string(path)?;
        self.load_str(&text)
            .map_err(|msg| std::io::Error::new(std::io::ErrorKind::InvalidData, msg))
    }

    pub fn load_str(&mut self, text: &str) -> Result<(), String> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, code) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| format!("alias line {}: expected `<name> <code>`", lineno + 1))?;
            let code: CanonicalCode = code
                .trim()
                .parse()
                .map_err(|e| format!("alias line {}: {e}", lineno + 1))?;
            self.names.insert(code, name.to_string());
        }
        Ok(())
    }

    /// The registered name of a code, if any.
    pub fn alias(&self, code: &CanonicalCode) -> Option<&str> {
        self.names.get(code).map(String::as_str)
    }

    /// Registered name, else the systematic `k:index` name when `k` is small
    /// enough to enumerate.
    pub fn name(&self, code: &CanonicalCode) -> Option<String> {
        if let Some(n) = self.alias(code) {
            return Some(n.to_string());
        }
        systematic_name(code)
    }
}

/// `k:index` by position in the sorted enumeration of `k`-vertex types.
pub fn systematic_name(code: &CanonicalCode) -> Option<String> {
    let k = code.k();
    if code.colors() != 3 || k > SYSTEMATIC_MAX_K {
        return None;
    }
    let all = enumeration::enumerate_types(k);
    all.binary_search(code).ok().map(|i| format!("{k}:{i}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typegraph::ZeroTwoShape;

    #[test]
    fn pinned_names_are_distinct_types() {
        let reg = Registry::builtin();
        assert_eq!(reg.names.len(), pinned().len());
    }

    #[test]
    fn two_vertex_convention() {
        let t = type_2("01");
        assert_eq!(t.t(0), &[0, 1]);
        assert_eq!(t.t(1), &[0, 1]);
        assert_eq!(t.t(2), &[1, 0]);
    }

    #[test]
    fn three_zero_has_q2a_component() {
        let shapes: Vec<_> = type_3_0().zero_two_components().into_iter().map(|c| c.0).collect();
        assert!(shapes.contains(&ZeroTwoShape::Q2a));
        let shapes: Vec<_> = type_3_2().zero_two_components().into_iter().map(|c| c.0).collect();
        assert!(shapes.contains(&ZeroTwoShape::Q2b));
    }

    #[test]
    fn alias_file_and_systematic_names() {
        let mut reg = Registry::builtin();
        let one = type_1().canonical_code();
        assert_eq!(reg.alias(&one), Some("1"));
        let five = enumeration::enumerate_types(5);
        assert_eq!(reg.name(&five[3]), Some("5:3".to_string()));
        reg.load_str(&format!("# comment\n5_X {}\n", five[3])).unwrap();
        assert_eq!(reg.name(&five[3]), Some("5_X".to_string()));
        assert!(reg.load_str("bogus").is_err());
    }
}
