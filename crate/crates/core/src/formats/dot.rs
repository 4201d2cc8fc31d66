//! Graphviz export. Colors are drawn as `0` solid, `1` dashed, `2` dotted and
//! `D` bold; a fixed point (semi-edge) becomes an edge to a point-shaped stub
//! node `v<i>_s<color>`.

use std::fmt::Write as _;

use crate::flagmap::FlagGraph;
use crate::typegraph::{ExtendedTypeGraph, TypeGraph};

const STYLES: [(&str, &str); 4] = [("0", "solid"), ("1", "dashed"), ("2", "dotted"), ("D", "bold")];

pub trait ToDot {
    fn to_dot(&self) -> String;
}

impl ToDot for TypeGraph {
    fn to_dot(&self) -> String {
        render("type_graph", self.tables().iter().map(Vec::as_slice).collect())
    }
}

impl ToDot for ExtendedTypeGraph {
    fn to_dot(&self) -> String {
        let t = self.base().tables();
        render("extended_type_graph", vec![&t[0], &t[1], &t[2], self.d()])
    }
}

impl ToDot for FlagGraph {
    fn to_dot(&self) -> String {
        render("flag_graph", vec![self.s(0), self.s(1), self.s(2)])
    }
}

pub fn to_dot<T: ToDot + ?Sized>(x: &T) -> String {
    x.to_dot()
}

fn render(name: &str, tables: Vec<&[usize]>) -> String {
    let n = tables[0].len();
    let mut out = format!("graph {name} {{\n");
    for v in 0..n {
        writeln!(out, "  v{v};").unwrap();
    }
    for (c, table) in tables.iter().enumerate() {
        for (v, &w) in table.iter().enumerate() {
            if v == w {
                writeln!(out, "  v{v}_s{} [shape=point];", STYLES[c].0).unwrap();
            }
        }
    }
    for (c, table) in tables.iter().enumerate() {
        let (id, style) = STYLES[c];
        for (v, &w) in table.iter().enumerate() {
            if v == w {
                writeln!(out, "  v{v} -- v{v}_s{id} [color_id={id}, style={style}];").unwrap();
            } else if v < w {
                writeln!(out, "  v{v} -- v{w} [color_id={id}, style={style}];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_types;
    use crate::names;
    use crate::typegraph::extend;

    fn count(text: &str, pat: &str) -> usize {
        text.matches(pat).count()
    }

    #[test]
    fn type_one_has_three_stubs() {
        let dot = names::type_1().to_dot();
        assert_eq!(count(&dot, "[shape=point]"), 3);
        assert_eq!(count(&dot, "  v0;"), 1);
        assert!(dot.contains("v0 -- v0_s1 [color_id=1, style=dashed];"));
    }

    #[test]
    fn trivalent_incidences() {
        for code in enumerate_types(5) {
            let dot = code.to_type_graph().to_dot();
            let stubs = count(&dot, "[shape=point]");
            let edges = count(&dot, " -- ");
            assert_eq!(count(&dot, ";\n") - stubs - edges, 5);
            assert_eq!(2 * (edges - stubs) + stubs, 15);
        }
    }

    #[test]
    fn double_edges_and_polarity() {
        let dot = names::type_3_02().to_dot();
        assert_eq!(count(&dot, "v0 -- v1 "), 2);
        let x = extend(&names::type_2("02"), vec![0, 1]).unwrap();
        let dot = x.to_dot();
        assert!(dot.contains("v1 -- v1_sD [color_id=D, style=bold];"));
        assert_eq!(dot, to_dot(&x));
    }
}
