//! Maps as flag graphs: three fixed-point-free involutions `s0, s1, s2` on a
//! flag set `0..n`, with `s0 s2` a fixed-point-free involution and a
//! transitive action.

use std::fmt;

use thiserror::Error;

use crate::orbit::{self, Partition};

/// One of the permutations checked by [`FlagGraph::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S0,
    S1,
    S2,
    /// The composite `s0 s2`.
    S0S2,
}

impl Generator {
    fn color(i: usize) -> Self {
        [Generator::S0, Generator::S1, Generator::S2][i]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::S0 => "s0",
            Generator::S1 => "s1",
            Generator::S2 => "s2",
            Generator::S0S2 => "s0s2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("flag arrays must have equal length n >= 4, got lengths {0:?}")]
    BadShape([usize; 3]),
    #[error("{generator} sends flag {flag} to {image}, outside 0..{n}")]
    OutOfRange {
        generator: Generator,
        flag: usize,
        image: usize,
        n: usize,
    },
    #[error("{generator} is not an involution at flag {flag}")]
    NotInvolution { generator: Generator, flag: usize },
    #[error("{generator} fixes flag {flag}")]
    FixedPointPresent { generator: Generator, flag: usize },
    #[error("s0 and s2 do not commute at flag {flag}")]
    Zero2NotCommuting { flag: usize },
    #[error("flag graph is disconnected, component sizes {component_sizes:?}")]
    Disconnected { component_sizes: Vec<usize> },
    #[error("flag counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
}

/// A validated flag graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagGraph {
    s: [Vec<usize>; 3],
}

impl FlagGraph {
    /// Validates raw involution tables.
    pub fn new(s0: Vec<usize>, s1: Vec<usize>, s2: Vec<usize>) -> Result<Self, FlagError> {
        let n = s0.len();
        if n < 4 || s1.len() != n || s2.len() != n {
            return Err(FlagError::BadShape([s0.len(), s1.len(), s2.len()]));
        }
        let s = [s0, s1, s2];
        for (i, table) in s.iter().enumerate() {
            let generator = Generator::color(i);
            if let Some(flag) = table.iter().position(|&y| y >= n) {
                return Err(FlagError::OutOfRange {
                    generator,
                    flag,
                    image: table[flag],
                    n,
                });
            }
            if let Some(flag) = orbit::is_involution(table) {
                return Err(FlagError::NotInvolution { generator, flag });
            }
            if let Some(flag) = (0..n).find(|&x| table[x] == x) {
                return Err(FlagError::FixedPointPresent { generator, flag });
            }
        }
        if let Some(flag) = (0..n).find(|&x| s[0][s[2][x]] != s[2][s[0][x]]) {
            return Err(FlagError::Zero2NotCommuting { flag });
        }
        if let Some(flag) = (0..n).find(|&x| s[0][s[2][x]] == x) {
            return Err(FlagError::FixedPointPresent {
                generator: Generator::S0S2,
                flag,
            });
        }
        let components = Partition::orbits(n, &[&s[0], &s[1], &s[2]]);
        if components.len() > 1 {
            return Err(FlagError::Disconnected {
                component_sizes: components.sizes(),
            });
        }
        Ok(FlagGraph { s })
    }

    pub fn n(&self) -> usize {
        self.s[0].len()
    }

    /// The image table of `s_i`.
    pub fn s(&self, i: usize) -> &[usize] {
        &self.s[i]
    }

    #[inline]
    pub fn step(&self, i: usize, flag: usize) -> usize {
        self.s[i][flag]
    }

    pub fn into_tables(self) -> [Vec<usize>; 3] {
        self.s
    }

    pub(crate) fn gens(&self) -> [&[usize]; 3] {
        [&self.s[0], &self.s[1], &self.s[2]]
    }

    /// Orbit partition under `⟨s_i, s_j⟩`.
    pub fn two_factor(&self, i: usize, j: usize) -> Partition {
        Partition::orbits(self.n(), &[&self.s[i], &self.s[j]])
    }

    /// Vertices, edges and faces as orbit partitions, with the usual counts.
    pub fn elements(&self) -> MapSkeleton {
        let vertices = self.two_factor(1, 2);
        let edges = self.two_factor(0, 2);
        let faces = self.two_factor(0, 1);
        let euler = vertices.len() as i64 - edges.len() as i64 + faces.len() as i64;
        let orientable = self.is_orientable();
        let uniform = |p: &Partition| {
            let first = p.block(0).len();
            p.blocks().iter().all(|b| b.len() == first).then_some(first / 2)
        };
        let schlafli = match (uniform(&faces), uniform(&vertices)) {
            (Some(p), Some(q)) => Some((p, q)),
            _ => None,
        };
        MapSkeleton {
            vertices,
            edges,
            faces,
            euler,
            orientable,
            schlafli,
        }
    }

    /// True iff the flag graph is bipartite.
    pub fn is_orientable(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        side[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for t in &self.s {
                let y = t[x];
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
        true
    }

    /// The `k`-face containing `flag`: its orbit under the two generators
    /// other than `s_k`, sorted ascending.
    pub fn k_face_of(&self, flag: usize, k: usize) -> Vec<usize> {
        assert!(k < 3, "k must be 0, 1 or 2");
        let (i, j) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let mut seen = vec![false; self.n()];
        let mut out = vec![flag];
        seen[flag] = true;
        let mut stack = vec![flag];
        while let Some(x) = stack.pop() {
            for y in [self.s[i][x], self.s[j][x]] {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The color-preserving automorphism group, one element per image of
    /// flag 0, in increasing order of that image.
    pub fn color_automorphisms(&self) -> Vec<FlagBijection> {
        let gens = self.gens();
        (0..self.n())
            .filter_map(|y| orbit::propagate(&gens, &gens, &[0, 1, 2], y))
            .map(|image| FlagBijection {
                image,
                color_action: ColorPerm::IDENTITY,
            })
            .collect()
    }

    /// Flag orbits under the automorphism group.
    pub fn flag_orbits(&self) -> Partition {
        self.flag_orbits_from(&self.color_automorphisms())
    }

    pub(crate) fn flag_orbits_from(&self, autos: &[FlagBijection]) -> Partition {
        const UNSET: usize = usize::MAX;
        let n = self.n();
        let mut block_of = vec![UNSET; n];
        let mut count = 0;
        for x in 0..n {
            if block_of[x] != UNSET {
                continue;
            }
            for a in autos {
                block_of[a.image[x]] = count;
            }
            count += 1;
        }
        Partition::from_assignment(block_of, count)
    }

    /// All self-dualities, classified as proper or improper.
    pub fn map_dualities(&self) -> Vec<MapDuality> {
        let orbits = self.flag_orbits();
        let gens = self.gens();
        (0..self.n())
            .filter_map(|y| orbit::propagate(&gens, &gens, &ColorPerm::DUAL.0, y))
            .map(|image| {
                let proper = (0..self.n()).all(|x| orbits.block_of(image[x]) == orbits.block_of(x));
                MapDuality {
                    bijection: FlagBijection {
                        image,
                        color_action: ColorPerm::DUAL,
                    },
                    proper,
                }
            })
            .collect()
    }

    /// A bijection `self → other` sending generator `i` to generator
    /// `color_perm[i]`, if one exists. The witness with the least image of
    /// flag 0 is returned.
    pub fn isomorphic(
        &self,
        other: &FlagGraph,
        color_perm: ColorPerm,
    ) -> Result<Option<FlagBijection>, FlagError> {
        if self.n() != other.n() {
            return Err(FlagError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let src = self.gens();
        let dst = other.gens();
        Ok((0..other.n())
            .find_map(|y| orbit::propagate(&src, &dst, &color_perm.0, y))
            .map(|image| FlagBijection { image, color_action: color_perm }))
    }

    pub fn is_isomorphic(&self, other: &FlagGraph) -> bool {
        matches!(self.isomorphic(other, ColorPerm::IDENTITY), Ok(Some(_)))
    }
}

/// Vertices, edges and faces of a map as flag partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSkeleton {
    pub vertices: Partition,
    pub edges: Partition,
    pub faces: Partition,
    pub euler: i64,
    pub orientable: bool,
    /// `(p, q)` when every face has `p` sides and every vertex valency `q`.
    pub schlafli: Option<(usize, usize)>,
}

impl MapSkeleton {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }
}

/// A permutation of the colors `{0, 1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorPerm(pub [usize; 3]);

impl ColorPerm {
    pub const IDENTITY: ColorPerm = ColorPerm([0, 1, 2]);
    /// `i ↦ 2 − i`.
    pub const DUAL: ColorPerm = ColorPerm([2, 1, 0]);
}

/// A flag bijection intertwining the generators according to `color_action`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagBijection {
    pub image: Vec<usize>,
    pub color_action: ColorPerm,
}

impl FlagBijection {
    pub fn apply(&self, flag: usize) -> usize {
        self.image[flag]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FlagBijection) -> FlagBijection {
        let c = self.color_action.0;
        let d = next.color_action.0;
        FlagBijection {
            image: orbit::compose(&next.image, &self.image),
            color_action: ColorPerm([d[c[0]], d[c[1]], d[c[2]]]),
        }
    }

    /// Checks `image[s_i[x]] = t_{σ(i)}[image[x]]` for all flags and colors.
    pub fn respects(&self, source: &FlagGraph, target: &FlagGraph) -> bool {
        (0..3).all(|i| {
            let j = self.color_action.0[i];
            (0..source.n()).all(|x| self.image[source.step(i, x)] == target.step(j, self.image[x]))
        })
    }
}

/// A self-duality of a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDuality {
    pub bijection: FlagBijection,
    /// True iff the duality maps every flag orbit to itself.
    pub proper: bool,
}
