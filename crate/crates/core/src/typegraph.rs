//! Symmetry type graphs: connected trivalent edge-colored pregraphs given by
//! three involutions `t0, t1, t2`, where a fixed point is a semi-edge.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::flagmap::FlagGraph;
use crate::orbit::{self, Partition};

/// Shape of a connected component of the `{t0, t2}` subgraph. These are the
/// five quotients of an alternating 0-2 four-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroTwoShape {
    /// Alternating 0/2 four-cycle.
    Q4,
    /// Color-0 edge, color-2 semi-edges at both ends.
    Q2a,
    /// Color-2 edge, color-0 semi-edges at both ends.
    Q2b,
    /// Double edge of colors 0 and 2.
    Q2c,
    /// Single vertex with color-0 and color-2 semi-edges.
    Q1,
}

impl ZeroTwoShape {
    pub const ALL: [ZeroTwoShape; 5] = [
        ZeroTwoShape::Q4,
        ZeroTwoShape::Q2a,
        ZeroTwoShape::Q2b,
        ZeroTwoShape::Q2c,
        ZeroTwoShape::Q1,
    ];

    pub fn size(self) -> usize {
        match self {
            ZeroTwoShape::Q4 => 4,
            ZeroTwoShape::Q1 => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for ZeroTwoShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type graph arrays must be non-empty and of equal length, got lengths {0:?}")]
    BadShape(Vec<usize>),
    #[error("{color} sends vertex {vertex} to {image}, outside 0..{k}")]
    OutOfRange {
        color: String,
        vertex: usize,
        image: usize,
        k: usize,
    },
    #[error("{color} is not an involution at vertex {vertex}")]
    NotInvolution { color: String, vertex: usize },
    #[error("type graph is disconnected, component sizes {component_sizes:?}")]
    Disconnected { component_sizes: Vec<usize> },
    #[error("0-2 component {vertices:?} is not a quotient of an alternating 4-cycle ({reason})")]
    BadZeroTwoComponent { vertices: Vec<usize>, reason: String },
    #[error("d is not a polarity: d∘d moves vertex {vertex}")]
    NotPolarity { vertex: usize },
    #[error("d is not a duality: {relation} fails at vertex {vertex}")]
    NotDuality { relation: &'static str, vertex: usize },
}

/// A validated symmetry type graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeGraph {
    t: [Vec<usize>; 3],
}

fn check_involution(name: &str, table: &[usize]) -> Result<(), TypeError> {
    let k = table.len();
    if let Some(vertex) = table.iter().position(|&y| y >= k) {
        return Err(TypeError::OutOfRange {
            color: name.to_string(),
            vertex,
            image: table[vertex],
            k,
        });
    }
    if let Some(vertex) = orbit::is_involution(table) {
        return Err(TypeError::NotInvolution {
            color: name.to_string(),
            vertex,
        });
    }
    Ok(())
}

impl TypeGraph {
    pub fn new(t0: Vec<usize>, t1: Vec<usize>, t2: Vec<usize>) -> Result<Self, TypeError> {
        let k = t0.len();
        if k == 0 || t1.len() != k || t2.len() != k {
            return Err(TypeError::BadShape(vec![t0.len(), t1.len(), t2.len()]));
        }
        let t = [t0, t1, t2];
        for (i, table) in t.iter().enumerate() {
            check_involution(&format!("t{i}"), table)?;
        }
        let components = Partition::orbits(k, &[&t[0], &t[1], &t[2]]);
        if components.len() > 1 {
            return Err(TypeError::Disconnected {
                component_sizes: components.sizes(),
            });
        }
        let g = TypeGraph { t };
        g.check_zero_two()?;
        Ok(g)
    }

    pub(crate) fn from_tables_unchecked(t: [Vec<usize>; 3]) -> Self {
        TypeGraph { t }
    }

    fn check_zero_two(&self) -> Result<(), TypeError> {
        let comps = self.two_factor(0, 2);
        for block in comps.blocks() {
            let commute = block
                .iter()
                .all(|&v| self.t[0][self.t[2][v]] == self.t[2][self.t[0][v]]);
            if !commute {
                let reason = format!("{} vertices, t0 and t2 do not commute", block.len());
                return Err(TypeError::BadZeroTwoComponent {
                    vertices: block.clone(),
                    reason,
                });
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.t[0].len()
    }

    pub fn t(&self, i: usize) -> &[usize] {
        &self.t[i]
    }

    pub fn tables(&self) -> &[Vec<usize>; 3] {
        &self.t
    }

    pub(crate) fn gens(&self) -> [&[usize]; 3] {
        [&self.t[0], &self.t[1], &self.t[2]]
    }

    pub fn two_factor(&self, i: usize, j: usize) -> Partition {
        Partition::orbits(self.k(), &[&self.t[i], &self.t[j]])
    }

    /// Components of the 0-2 subgraph with their shapes, ordered by least
    /// vertex.
    pub fn zero_two_components(&self) -> Vec<(ZeroTwoShape, Vec<usize>)> {
        self.two_factor(0, 2)
            .blocks()
            .iter()
            .map(|b| {
                let v = b[0];
                let shape = match b.len() {
                    1 => ZeroTwoShape::Q1,
                    4 => ZeroTwoShape::Q4,
                    _ => match (self.t[0][v] == v, self.t[2][v] == v) {
                        (false, true) => ZeroTwoShape::Q2a,
                        (true, false) => ZeroTwoShape::Q2b,
                        _ => ZeroTwoShape::Q2c,
                    },
                };
                (shape, b.clone())
            })
            .collect()
    }

    /// Component counts of the three 2-factors: vertex, edge and face orbit
    /// counts of any map with this type.
    pub fn face_orbit_counts(&self) -> FaceOrbitCounts {
        FaceOrbitCounts {
            vertices: self.two_factor(1, 2).len(),
            edges: self.two_factor(0, 2).len(),
            faces: self.two_factor(0, 1).len(),
        }
    }

    pub fn is_edge_transitive(&self) -> bool {
        self.face_orbit_counts().edges == 1
    }

    /// Color-preserving automorphisms, at most `k` by rigidity.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let g = self.gens();
        (0..self.k())
            .filter_map(|y| orbit::propagate(&g, &g, &[0, 1, 2], y))
            .collect()
    }

    /// Vertex permutations `φ` with `φ t1 = t1 φ`, `φ t0 = t2 φ` and
    /// `φ t2 = t0 φ`, ordered by the image of vertex 0.
    pub fn dualities(&self) -> Vec<Vec<usize>> {
        let g = self.gens();
        (0..self.k())
            .filter_map(|y| orbit::propagate(&g, &g, &[2, 1, 0], y))
            .collect()
    }

    /// Dualities of order at most two.
    pub fn polarities(&self) -> Vec<Vec<usize>> {
        self.dualities()
            .into_iter()
            .filter(|d| is_order_two(d))
            .collect()
    }

    /// Whether some self-dual map of this type could be properly self-dual.
    pub fn admits_proper(&self) -> ProperCheck {
        if let Some((shape, vertices)) = self
            .zero_two_components()
            .into_iter()
            .find(|(s, _)| matches!(s, ZeroTwoShape::Q4 | ZeroTwoShape::Q2a | ZeroTwoShape::Q2b))
        {
            return ProperCheck::Obstructed { shape, vertices };
        }
        if self.t[0] == self.t[2] {
            ProperCheck::Admits
        } else {
            ProperCheck::NoProperPolarity
        }
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code_of(&self.gens())
    }
}

fn is_order_two(d: &[usize]) -> bool {
    d.iter().enumerate().all(|(i, &x)| d[x] == i)
}

/// Orbit counts of vertices, edges and faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceOrbitCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

/// Outcome of [`TypeGraph::admits_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperCheck {
    Admits,
    /// A 0-2 component rules out any proper self-duality.
    Obstructed {
        shape: ZeroTwoShape,
        vertices: Vec<usize>,
    },
    /// No obstruction, but the identity is not a duality.
    NoProperPolarity,
}

impl ProperCheck {
    pub fn admits(&self) -> bool {
        matches!(self, ProperCheck::Admits)
    }
}

/// The quotient of a flag graph by its automorphism orbits.
pub fn quotient(g: &FlagGraph) -> TypeGraph {
    quotient_by(g, &g.flag_orbits())
}

pub(crate) fn quotient_by(g: &FlagGraph, orbits: &Partition) -> TypeGraph {
    let k = orbits.len();
    let mut t = [vec![0; k], vec![0; k], vec![0; k]];
    for (o, block) in orbits.blocks().iter().enumerate() {
        let rep = block[0];
        for (i, table) in t.iter_mut().enumerate() {
            table[o] = orbits.block_of(g.step(i, rep));
        }
    }
    for x in 0..g.n() {
        for (i, table) in t.iter().enumerate() {
            assert_eq!(
                table[orbits.block_of(x)],
                orbits.block_of(g.step(i, x)),
                "orbit partition is not compatible with s{i}"
            );
        }
    }
    TypeGraph::new(t[0].clone(), t[1].clone(), t[2].clone())
        .expect("quotient of a flag graph is a valid type graph")
}

/// A type graph together with a polarity `d` (color D).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedTypeGraph {
    base: TypeGraph,
    d: Vec<usize>,
}

impl ExtendedTypeGraph {
    pub fn new(base: TypeGraph, d: Vec<usize>) -> Result<Self, TypeError> {
        let k = base.k();
        if d.len() != k {
            return Err(TypeError::BadShape(vec![k, k, k, d.len()]));
        }
        check_involution("d", &d).map_err(|e| match e {
            TypeError::NotInvolution { vertex, .. } => TypeError::NotPolarity { vertex },
            other => other,
        })?;
        let t = &base.t;
        if let Some(vertex) = (0..k).find(|&v| d[t[1][v]] != t[1][d[v]]) {
            return Err(TypeError::NotDuality {
                relation: "d t1 = t1 d",
                vertex,
            });
        }
        if let Some(vertex) = (0..k).find(|&v| d[t[0][d[v]]] != t[2][v]) {
            return Err(TypeError::NotDuality {
                relation: "d t0 d = t2",
                vertex,
            });
        }
        if let Some(vertex) = (0..k).find(|&v| d[t[2][d[v]]] != t[0][v]) {
            return Err(TypeError::NotDuality {
                relation: "d t2 d = t0",
                vertex,
            });
        }
        Ok(ExtendedTypeGraph { base, d })
    }

    pub fn base(&self) -> &TypeGraph {
        &self.base
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    /// A polarity is proper iff it fixes every vertex.
    pub fn is_proper(&self) -> bool {
        orbit::is_identity(&self.d)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let t = &self.base.t;
        canonical_code_of(&[&t[0], &t[1], &t[2], &self.d])
    }
}

/// Attaches a polarity to a type graph.
pub fn extend(t: &TypeGraph, d: Vec<usize>) -> Result<ExtendedTypeGraph, TypeError> {
    ExtendedTypeGraph::new(t.clone(), d)
}

/// A relabeling-invariant key for a colored pregraph.
///
/// Layout: `[k, colors, table_0 .., table_1 .., ...]` after the canonical
/// relabeling. Derived ordering is lexicographic on that sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn k(&self) -> usize {
        self.0[0] as usize
    }

    pub fn colors(&self) -> usize {
        self.0[1] as usize
    }

    /// Relabeled image table of color `i`.
    pub fn table(&self, i: usize) -> Vec<usize> {
        let k = self.k();
        self.0[2 + i * k..2 + (i + 1) * k]
            .iter()
            .map(|&x| x as usize)
            .collect()
    }

    /// Big-endian byte serialization.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_be_bytes()).collect()
    }

    /// The type graph this code describes (for three-color codes).
    pub fn to_type_graph(&self) -> TypeGraph {
        assert_eq!(self.colors(), 3, "not a type graph code");
        TypeGraph::from_tables_unchecked([self.table(0), self.table(1), self.table(2)])
    }

    /// The extended graph this code describes (for four-color codes).
    pub fn to_extended(&self) -> ExtendedTypeGraph {
        assert_eq!(self.colors(), 4, "not an extended graph code");
        ExtendedTypeGraph {
            base: TypeGraph::from_tables_unchecked([self.table(0), self.table(1), self.table(2)]),
            d: self.table(3),
        }
    }
}

/// Text form: `k:t0|t1|t2[|d]` with comma-separated images.
impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.k())?;
        for i in 0..self.colors() {
            if i > 0 {
                f.write_str("|")?;
            }
            let row: Vec<String> = self.table(i).iter().map(usize::to_string).collect();
            f.write_str(&row.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed canonical code: {0}")]
pub struct ParseCodeError(String);

impl FromStr for CanonicalCode {
    type Err = ParseCodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseCodeError(s.to_string());
        let (k, rest) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        let rows: Vec<Vec<usize>> = rest
            .split('|')
            .map(|row| row.split(',').map(|x| x.trim().parse::<usize>()).collect())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if !(rows.len() == 3 || rows.len() == 4) || rows.iter().any(|r| r.len() != k) {
            return Err(bad());
        }
        let tables: Vec<&[usize]> = rows.iter().map(Vec::as_slice).collect();
        let code = canonical_code_of(&tables);
        if code.to_string() != s.trim() {
            return Err(bad());
        }
        Ok(code)
    }
}

/// Minimum over all start vertices of the relabeled tables produced by a
/// breadth-first traversal that scans colors in order.
pub(crate) fn canonical_code_of(tables: &[&[usize]]) -> CanonicalCode {
    const UNSET: usize = usize::MAX;
    let k = tables[0].len();
    let colors = tables.len();
    let mut best: Option<Vec<u32>> = None;
    let mut label = vec![UNSET; k];
    let mut order = Vec::with_capacity(k);
    let mut candidate = Vec::with_capacity(2 + colors * k);
    for start in 0..k {
        label.iter_mut().for_each(|l| *l = UNSET);
        order.clear();
        label[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for t in tables {
                let w = t[v];
                if label[w] == UNSET {
                    label[w] = order.len();
                    order.push(w);
                }
            }
        }
        if order.len() < k {
            // Disconnected input: fall back to labeling the rest in index
            // order so the code is still a function of the structure.
            for (v, l) in label.iter_mut().enumerate() {
                if *l == UNSET {
                    *l = order.len();
                    order.push(v);
                }
            }
        }
        candidate.clear();
        candidate.push(k as u32);
        candidate.push(colors as u32);
        // Early exit as soon as the candidate is lexicographically worse.
        let mut state = std::cmp::Ordering::Equal;
        'outer: for t in tables {
            for &v in &order {
                let x = label[t[v]] as u32;
                if state == std::cmp::Ordering::Equal {
                    if let Some(b) = &best {
                        state = x.cmp(&b[candidate.len()]);
                        if state == std::cmp::Ordering::Greater {
                            break 'outer;
                        }
                    }
                }
                candidate.push(x);
            }
        }
        if state == std::cmp::Ordering::Less || best.is_none() {
            best = Some(candidate.clone());
        }
    }
    CanonicalCode(best.expect("non-empty pregraph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn relabel(t: &TypeGraph, p: &[usize]) -> TypeGraph {
        let inv = orbit::inverse(p);
        let tables: Vec<Vec<usize>> = t
            .tables()
            .iter()
            .map(|tab| (0..t.k()).map(|v| p[tab[inv[v]]]).collect())
            .collect();
        TypeGraph::new(tables[0].clone(), tables[1].clone(), tables[2].clone()).unwrap()
    }

    #[test]
    fn type_one_is_valid() {
        let t = TypeGraph::new(vec![0], vec![0], vec![0]).unwrap();
        assert_eq!(t.face_orbit_counts(), FaceOrbitCounts { vertices: 1, edges: 1, faces: 1 });
        assert!(t.is_edge_transitive());
    }

    #[test]
    fn three_vertex_self_dual_type() {
        let t = TypeGraph::new(vec![1, 0, 2], vec![2, 1, 0], vec![1, 0, 2]).unwrap();
        assert_eq!(t.face_orbit_counts().edges, 2);
        let shapes: Vec<_> = t.zero_two_components().into_iter().map(|c| c.0).collect();
        assert_eq!(shapes, vec![ZeroTwoShape::Q2c, ZeroTwoShape::Q1]);
        assert_eq!(t.canonical_code(), names::type_3_02().canonical_code());
    }

    #[test]
    fn bad_zero_two_component() {
        // t0 = (0 1), t2 = (1 2): 0-2 path on three vertices
        let err = TypeGraph::new(vec![1, 0, 2], vec![0, 1, 2], vec![0, 2, 1]).unwrap_err();
        match err {
            TypeError::BadZeroTwoComponent { vertices, .. } => assert_eq!(vertices, vec![0, 1, 2]),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn disconnected_and_non_involution() {
        assert!(matches!(
            TypeGraph::new(vec![0, 1], vec![0, 1], vec![0, 1]),
            Err(TypeError::Disconnected { .. })
        ));
        assert!(matches!(
            TypeGraph::new(vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]),
            Err(TypeError::NotInvolution { .. })
        ));
    }

    #[test]
    fn edge_transitivity_of_two_vertex_types() {
        assert!(!names::type_2("02").is_edge_transitive());
        assert!(names::type_2("1").is_edge_transitive());
        assert!(names::type_2("").is_edge_transitive());
    }

    #[test]
    fn dualities_of_small_types() {
        let one = names::type_1();
        assert_eq!(one.dualities(), vec![vec![0]]);
        let two = names::type_2("");
        assert_eq!(two.dualities(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(two.polarities().len(), 2);
        let t302 = names::type_3_02();
        assert_eq!(t302.polarities(), vec![vec![0, 1, 2]]);
        assert!(names::type_2("0").dualities().is_empty());
    }

    #[test]
    fn polarity_identities() {
        for t in [names::type_1(), names::type_2(""), names::type_2("02"), names::type_2("1"), names::type_3_02()] {
            let [t0, t1, t2] = t.tables().clone();
            for d in t.polarities() {
                let dt1 = orbit::compose(&d, &t1);
                assert!(orbit::is_identity(&orbit::compose(&dt1, &dt1)));
                let w = orbit::compose(&d, &orbit::compose(&t2, &orbit::compose(&d, &t0)));
                assert!(orbit::is_identity(&w));
            }
        }
    }

    #[test]
    fn proper_checks() {
        assert!(names::type_2("02").admits_proper().admits());
        assert!(names::type_2("").admits_proper().admits());
        match names::type_2("2").admits_proper() {
            ProperCheck::Obstructed { shape, .. } => assert_eq!(shape, ZeroTwoShape::Q2a),
            other => panic!("unexpected {other:?}"),
        }
        let q4 = TypeGraph::new(vec![1, 0, 3, 2], vec![0, 1, 2, 3], vec![3, 2, 1, 0]).unwrap();
        assert!(matches!(q4.admits_proper(), ProperCheck::Obstructed { shape: ZeroTwoShape::Q4, .. }));
    }

    #[test]
    fn extend_checks_invariants() {
        let x = extend(&names::type_1(), vec![0]).unwrap();
        assert!(x.is_proper());
        let x = extend(&names::type_2(""), vec![1, 0]).unwrap();
        assert!(!x.is_proper());
        // 2_0 has t0 = id, t2 = swap, so the identity cannot intertwine them
        assert!(matches!(
            extend(&names::type_2("0"), vec![0, 1]),
            Err(TypeError::NotDuality { .. })
        ));
        let four = TypeGraph::new(vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![1, 0, 3, 2]).unwrap();
        assert!(matches!(
            extend(&four, vec![1, 2, 3, 0]),
            Err(TypeError::NotPolarity { .. })
        ));
    }

    #[test]
    fn codes_distinguish_semi_edge_colors() {
        assert_ne!(names::type_2("01").canonical_code(), names::type_2("12").canonical_code());
    }

    #[test]
    fn code_text_round_trip() {
        let c = names::type_3_02().canonical_code();
        let s = c.to_string();
        assert_eq!(s.parse::<CanonicalCode>().unwrap(), c);
        assert!("3:0,1|2".parse::<CanonicalCode>().is_err());
        assert_eq!(c.to_bytes().len(), 4 * (2 + 9));
    }

    #[test]
    fn code_invariant_under_random_relabeling() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let base = TypeGraph::new(
            vec![1, 0, 3, 2, 4],
            vec![4, 2, 1, 3, 0],
            vec![3, 2, 1, 0, 4],
        )
        .unwrap();
        let code = base.canonical_code();
        for _ in 0..100 {
            let mut p: Vec<usize> = (0..base.k()).collect();
            p.shuffle(&mut rng);
            assert_eq!(relabel(&base, &p).canonical_code(), code);
        }
    }
}
