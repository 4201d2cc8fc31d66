//! Dual, Petrie dual, opposite and medial operators on flag graphs and type
//! graphs, and de-medialization.

use thiserror::Error;

use crate::flagmap::{FlagError, FlagGraph};
use crate::orbit::{self, Partition};
use crate::typegraph::{extend, quotient, quotient_by, ExtendedTypeGraph, TypeGraph};

fn flag_graph(t: [Vec<usize>; 3]) -> FlagGraph {
    let [a, b, c] = t;
    FlagGraph::new(a, b, c).expect("operator preserves the flag graph axioms")
}

fn type_graph(t: [Vec<usize>; 3]) -> TypeGraph {
    let [a, b, c] = t;
    TypeGraph::new(a, b, c).expect("operator preserves the type graph axioms")
}

/// Swaps `s0` and `s2`.
pub fn dual_flag(g: &FlagGraph) -> FlagGraph {
    flag_graph([g.s(2).to_vec(), g.s(1).to_vec(), g.s(0).to_vec()])
}

pub fn dual_type(t: &TypeGraph) -> TypeGraph {
    type_graph([t.t(2).to_vec(), t.t(1).to_vec(), t.t(0).to_vec()])
}

/// Replaces `s0` by `s0 s2`.
pub fn petrie_flag(g: &FlagGraph) -> FlagGraph {
    flag_graph([orbit::compose(g.s(0), g.s(2)), g.s(1).to_vec(), g.s(2).to_vec()])
}

pub fn petrie_type(t: &TypeGraph) -> TypeGraph {
    type_graph([orbit::compose(t.t(0), t.t(2)), t.t(1).to_vec(), t.t(2).to_vec()])
}

/// `dual(petrie(dual(g)))`.
pub fn opposite(g: &FlagGraph) -> FlagGraph {
    let out = dual_flag(&petrie_flag(&dual_flag(g)));
    debug_assert_eq!(out, petrie_flag(&dual_flag(&petrie_flag(g))));
    out
}

pub fn opposite_type(t: &TypeGraph) -> TypeGraph {
    dual_type(&petrie_type(&dual_type(t)))
}

/// The medial map. Flag `(x, 0)` is `x` and `(x, 2)` is `x + n`.
pub fn medial_flag(g: &FlagGraph) -> FlagGraph {
    let n = g.n();
    let mut s = [vec![0; 2 * n], vec![0; 2 * n], vec![0; 2 * n]];
    for x in 0..n {
        s[0][x] = g.step(1, x);
        s[0][x + n] = g.step(1, x) + n;
        s[1][x] = g.step(2, x);
        s[1][x + n] = g.step(0, x) + n;
        s[2][x] = x + n;
        s[2][x + n] = x;
    }
    flag_graph(s)
}

/// Medial type of a non-self-dual map: two copies `(v, 0) = v` and
/// `(v, 2) = v + k` of the type graph.
pub fn medial_type_double(t: &TypeGraph) -> TypeGraph {
    let k = t.k();
    let mut s = [vec![0; 2 * k], vec![0; 2 * k], vec![0; 2 * k]];
    for v in 0..k {
        s[0][v] = t.t(1)[v];
        s[0][v + k] = t.t(1)[v] + k;
        s[1][v] = t.t(2)[v];
        s[1][v + k] = t.t(0)[v] + k;
        s[2][v] = v + k;
        s[2][v + k] = v;
    }
    type_graph(s)
}

/// Medial type of a self-dual map with the given polarity: `(v, 0)` is
/// identified with `(d v, 2)`, giving colors `t1`, `t2`, `d`.
pub fn medial_type_extended(x: &ExtendedTypeGraph) -> TypeGraph {
    let t = x.base();
    let d = x.d();
    // Color 1 read on the copy-2 side is d t0 d, which must agree with t2.
    debug_assert!((0..t.k()).all(|v| d[t.t(0)[d[v]]] == t.t(2)[v]));
    type_graph([t.t(1).to_vec(), t.t(2).to_vec(), d.to_vec()])
}

/// The type graph of `g` with the polarity its self-dualities induce on flag
/// orbits, or `None` when `g` is not self-dual. Vertex `i` is the orbit
/// numbered `i` by [`FlagGraph::flag_orbits`].
pub fn induced_extension(g: &FlagGraph) -> Option<ExtendedTypeGraph> {
    let duality = g.map_dualities().into_iter().next()?;
    let orbits = g.flag_orbits();
    let d = orbits
        .blocks()
        .iter()
        .map(|b| orbits.block_of(duality.bijection.apply(b[0])))
        .collect();
    let x = extend(&quotient_by(g, &orbits), d).expect("a map duality induces a polarity on orbits");
    Some(x)
}

/// The type of `medial_flag(g)` computed from the type of `g`: the extended
/// construction when `g` is self-dual, the doubling otherwise.
pub fn medial_type_of(g: &FlagGraph) -> TypeGraph {
    match induced_extension(g) {
        Some(x) => medial_type_extended(&x),
        None => medial_type_double(&quotient(g)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotAMedial {
    #[error("(s1 s2)^4 moves flag {flag}: some vertex does not have valency 4")]
    ValencyNotFour { flag: usize },
    #[error("<s1, s0, s2 s1 s2> has orbit sizes {sizes:?}, expected two orbits of n/2")]
    OrbitSplit { sizes: Vec<usize> },
    #[error("restriction to an orbit is not a flag graph: {0}")]
    InvalidBlock(FlagError),
    #[error("medial of the recovered map is not isomorphic to the input")]
    RoundTrip,
}

/// Recovers a dual pair of maps whose medial is `g`. The map built on the
/// orbit containing flag 0 comes first.
pub fn demedialize(g: &FlagGraph) -> Result<(FlagGraph, FlagGraph), NotAMedial> {
    let n = g.n();
    let (s0, s1, s2) = (g.s(0), g.s(1), g.s(2));
    for x in 0..n {
        let mut y = x;
        for _ in 0..4 {
            y = s2[s1[y]];
        }
        if y != x {
            return Err(NotAMedial::ValencyNotFour { flag: x });
        }
    }
    let s212: Vec<usize> = (0..n).map(|x| s2[s1[s2[x]]]).collect();
    let blocks = Partition::orbits(n, &[s1, s0, &s212]);
    if blocks.len() != 2 || blocks.block(0).len() != blocks.block(1).len() {
        return Err(NotAMedial::OrbitSplit {
            sizes: blocks.sizes(),
        });
    }
    let restrict = |block: &[usize]| -> Result<FlagGraph, NotAMedial> {
        let mut index = vec![usize::MAX; n];
        for (i, &x) in block.iter().enumerate() {
            index[x] = i;
        }
        let table = |p: &[usize]| block.iter().map(|&x| index[p[x]]).collect::<Vec<_>>();
        FlagGraph::new(table(s1), table(s0), table(&s212)).map_err(NotAMedial::InvalidBlock)
    };
    let first = restrict(blocks.block(0))?;
    let second = restrict(blocks.block(1))?;
    if !medial_flag(&first).is_isomorphic(g) {
        return Err(NotAMedial::RoundTrip);
    }
    Ok((first, second))
}

/// Orbit counts of a map, its medial and its double medial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleMedialReport {
    pub orbits: usize,
    pub medial_orbits: usize,
    pub double_medial_orbits: usize,
    pub schlafli: Option<(usize, usize)>,
}

impl DoubleMedialReport {
    pub fn same_orbit_count(&self) -> bool {
        self.orbits == self.double_medial_orbits
    }

    /// Equal orbit counts for the map and its double medial force Schläfli
    /// type `{4,4}`.
    pub fn consistent(&self) -> bool {
        !self.same_orbit_count() || self.schlafli == Some((4, 4))
    }
}

pub fn schlafli_gate_for_double_medial(g: &FlagGraph) -> DoubleMedialReport {
    let me = medial_flag(g);
    let meme = medial_flag(&me);
    let report = DoubleMedialReport {
        orbits: g.flag_orbits().len(),
        medial_orbits: me.flag_orbits().len(),
        double_medial_orbits: meme.flag_orbits().len(),
        schlafli: g.elements().schlafli,
    };
    assert!(
        report.consistent(),
        "double medial keeps the orbit count but the map is not {{4,4}}"
    );
    report
}
