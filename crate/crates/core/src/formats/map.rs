use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::flagmap::{FlagError, FlagGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("face {face} is empty")]
    EmptyFace { face: usize },
    #[error("edge {{{u}, {v}}} occurs {count} times across the face walks, expected 2")]
    EdgeOccurrenceCount { u: usize, v: usize, count: usize },
    #[error("edge {{{u}, {v}}} is a loop; its sides cannot be paired by vertex")]
    AmbiguousPairing { u: usize, v: usize },
    #[error("face walks do not describe a map: {0}")]
    Invalid(#[from] FlagError),
}

/// A map given by its faces as closed vertex walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalks {
    faces: Vec<Vec<usize>>,
}

impl FaceWalks {
    pub fn new(faces: Vec<Vec<usize>>) -> Self {
        FaceWalks { faces }
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Builds the flag graph. Flag `(f, i, end)` sits on the `i`-th edge of
    /// face `f` at vertex `v_i` (end 0) or `v_{i+1}` (end 1).
    pub fn to_flag_graph(&self) -> Result<FlagGraph, MapError> {
        let mut offset = Vec::with_capacity(self.faces.len());
        let mut total = 0;
        for (f, walk) in self.faces.iter().enumerate() {
            if walk.is_empty() {
                return Err(MapError::EmptyFace { face: f });
            }
            offset.push(total);
            total += walk.len();
        }
        let n = 2 * total;
        let flag = |f: usize, i: usize, end: usize| 2 * (offset[f] + i) + end;

        let mut s0 = vec![0; n];
        let mut s1 = vec![0; n];
        let mut occurrences: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (f, walk) in self.faces.iter().enumerate() {
            let len = walk.len();
            for i in 0..len {
                let (a, b) = (flag(f, i, 0), flag(f, i, 1));
                s0[a] = b;
                s0[b] = a;
                let c = flag(f, (i + 1) % len, 0);
                s1[b] = c;
                s1[c] = b;
                let (u, v) = (walk[i], walk[(i + 1) % len]);
                if u == v {
                    return Err(MapError::AmbiguousPairing { u, v });
                }
                occurrences.entry((u.min(v), u.max(v))).or_default().push((f, i));
            }
        }

        let mut s2 = vec![0; n];
        for (&(u, v), occ) in &occurrences {
            if occ.len() != 2 {
                return Err(MapError::EdgeOccurrenceCount { u, v, count: occ.len() });
            }
            let (f, i) = occ[0];
            let (g, j) = occ[1];
            let same_direction = self.faces[f][i] == self.faces[g][j];
            for end in 0..2 {
                let other = if same_direction { end } else { 1 - end };
                let (x, y) = (flag(f, i, end), flag(g, j, other));
                s2[x] = y;
                s2[y] = x;
            }
        }
        Ok(FlagGraph::new(s0, s1, s2)?)
    }

    /// Reads the faces of `g` as walks over its vertex orbits.
    pub fn from_flag_graph(g: &FlagGraph) -> Self {
        let skel = g.elements();
        let faces = skel
            .faces
            .blocks()
            .iter()
            .map(|block| {
                let start = block[0];
                let mut walk = Vec::with_capacity(block.len() / 2);
                let mut x = start;
                loop {
                    walk.push(skel.vertices.block_of(x));
                    x = g.step(1, g.step(0, x));
                    if x == start {
                        break;
                    }
                }
                walk
            })
            .collect();
        FaceWalks { faces }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("map 1\n");
        for walk in &self.faces {
            let mut first = true;
            for v in walk {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::{builtin, parse_map};
    use crate::typegraph::quotient;

    #[test]
    fn tetrahedron_pipeline() {
        let g = FaceWalks::new(vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]])
            .to_flag_graph()
            .unwrap();
        assert_eq!(g.n(), 24);
        assert_eq!(quotient(&g).k(), 1);
    }

    #[test]
    fn cube_is_4_3() {
        let g = builtin::cube();
        assert_eq!(g.n(), 48);
        assert_eq!(g.elements().schlafli, Some((4, 3)));
    }

    #[test]
    fn single_square_has_unpaired_edges() {
        let err = FaceWalks::new(vec![vec![0, 1, 2, 3]]).to_flag_graph().unwrap_err();
        assert!(matches!(err, MapError::EdgeOccurrenceCount { count: 1, .. }));
    }

    #[test]
    fn loops_are_ambiguous() {
        let err = FaceWalks::new(vec![vec![0, 0, 1], vec![0, 1, 0]]).to_flag_graph().unwrap_err();
        assert!(matches!(err, MapError::AmbiguousPairing { u: 0, v: 0 }));
    }

    #[test]
    fn skeleton_fidelity() {
        for (name, g) in builtin::builtin_maps() {
            let text = FaceWalks::from_flag_graph(&g).serialize();
            let back = parse_map(&text).unwrap().to_flag_graph().unwrap();
            assert!(back.is_isomorphic(&g), "{name}");
        }
    }
}
