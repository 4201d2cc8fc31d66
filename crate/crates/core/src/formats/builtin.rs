//! Small maps used in tests and examples.

use thiserror::Error;

use super::FaceWalks;
use crate::flagmap::{FlagError, FlagGraph};
use crate::transforms::medial_flag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuiltinError {
    #[error("lattice spanned by ({a}, {b}) and ({c}, {d}) has determinant 0")]
    DegenerateLattice { a: i64, b: i64, c: i64, d: i64 },
    #[error(transparent)]
    Invalid(#[from] FlagError),
    #[error("unknown builtin map `{0}`")]
    Unknown(String),
}

pub fn tetrahedron_walks() -> FaceWalks {
    FaceWalks::new(vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]])
}

/// Vertex `v` of the cube has coordinates given by its three low bits.
pub fn cube_walks() -> FaceWalks {
    FaceWalks::new(vec![
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ])
}

/// Vertices `0,1` are `±x`, `2,3` are `±y`, `4,5` are `±z`.
pub fn octahedron_walks() -> FaceWalks {
    let mut faces = Vec::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                faces.push(vec![x, y, z]);
            }
        }
    }
    FaceWalks::new(faces)
}

pub fn tetrahedron() -> FlagGraph {
    tetrahedron_walks().to_flag_graph().expect("tetrahedron")
}

pub fn cube() -> FlagGraph {
    cube_walks().to_flag_graph().expect("cube")
}

pub fn octahedron() -> FlagGraph {
    octahedron_walks().to_flag_graph().expect("octahedron")
}

/// `Z^2` modulo the lattice spanned by `(a, b)` and `(c, d)`, with canonical
/// representatives from the Hermite normal form.
struct TorusLattice {
    h11: i64,
    h12: i64,
    h22: i64,
}

impl TorusLattice {
    fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, BuiltinError> {
        let det = a * d - b * c;
        if det == 0 {
            return Err(BuiltinError::DegenerateLattice { a, b, c, d });
        }
        let (mut r1, mut r2) = ((a, b), (c, d));
        while r2.0 != 0 {
            let q = r1.0.div_euclid(r2.0);
            r1 = (r1.0 - q * r2.0, r1.1 - q * r2.1);
            std::mem::swap(&mut r1, &mut r2);
        }
        if r1.0 < 0 {
            r1 = (-r1.0, -r1.1);
        }
        let h22 = r2.1.abs();
        Ok(TorusLattice {
            h11: r1.0,
            h12: r1.1.rem_euclid(h22),
            h22,
        })
    }

    fn size(&self) -> usize {
        (self.h11 * self.h22) as usize
    }

    fn index(&self, x: i64, y: i64) -> usize {
        let q = x.div_euclid(self.h11);
        let (x, y) = (x - q * self.h11, (y - q * self.h12).rem_euclid(self.h22));
        (x * self.h22 + y) as usize
    }

    fn point(&self, v: usize) -> (i64, i64) {
        let v = v as i64;
        (v / self.h22, v % self.h22)
    }
}

const DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

/// The `{4,4}` map on the torus `Z^2 / <(a,b), (c,d)>`. Flag `(v, dir, side)`
/// is the vertex `v`, its edge in direction `dir` (E, N, W, S) and the face
/// counterclockwise (side 0) or clockwise (side 1) of that edge.
pub fn torus44(a: i64, b: i64, c: i64, d: i64) -> Result<FlagGraph, BuiltinError> {
    let lat = TorusLattice::new(a, b, c, d)?;
    let n = 8 * lat.size();
    let flag = |v: usize, dir: usize, side: usize| (v * 4 + dir) * 2 + side;
    let mut s = [vec![0; n], vec![0; n], vec![0; n]];
    for v in 0..lat.size() {
        let (x, y) = lat.point(v);
        for (dir, &(dx, dy)) in DIRS.iter().enumerate() {
            let w = lat.index(x + dx, y + dy);
            for side in 0..2 {
                let f = flag(v, dir, side);
                s[0][f] = flag(w, (dir + 2) % 4, 1 - side);
                s[1][f] = if side == 0 {
                    flag(v, (dir + 1) % 4, 1)
                } else {
                    flag(v, (dir + 3) % 4, 0)
                };
                s[2][f] = flag(v, dir, 1 - side);
            }
        }
    }
    let [s0, s1, s2] = s;
    Ok(FlagGraph::new(s0, s1, s2)?)
}

/// Unit squares of the same torus as face walks.
pub fn torus44_walks(a: i64, b: i64, c: i64, d: i64) -> Result<FaceWalks, BuiltinError> {
    let lat = TorusLattice::new(a, b, c, d)?;
    let faces = (0..lat.size())
        .map(|v| {
            let (x, y) = lat.point(v);
            vec![
                lat.index(x, y),
                lat.index(x + 1, y),
                lat.index(x + 1, y + 1),
                lat.index(x, y + 1),
            ]
        })
        .collect();
    Ok(FaceWalks::new(faces))
}

/// Every named builtin together with its medial.
pub fn builtin_maps() -> Vec<(String, FlagGraph)> {
    let base = vec![
        ("tetrahedron".to_string(), tetrahedron()),
        ("cube".to_string(), cube()),
        ("octahedron".to_string(), octahedron()),
        ("torus44(3,0,0,3)".to_string(), torus44(3, 0, 0, 3).expect("3x3 torus")),
        ("torus44(2,1,-1,2)".to_string(), torus44(2, 1, -1, 2).expect("chiral torus")),
    ];
    let medials: Vec<_> = base
        .iter()
        .map(|(name, g)| (format!("medial({name})"), medial_flag(g)))
        .collect();
    base.into_iter().chain(medials).collect()
}

/// Resolves `tetrahedron`, `cube`, `octahedron` or `torus44(a,b,c,d)`.
pub fn by_name(name: &str) -> Result<FlagGraph, BuiltinError> {
    match name {
        "tetrahedron" => return Ok(tetrahedron()),
        "cube" => return Ok(cube()),
        "octahedron" => return Ok(octahedron()),
        _ => {}
    }
    let unknown = || BuiltinError::Unknown(name.to_string());
    let args = name
        .strip_prefix("torus44(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(unknown)?;
    let v: Vec<i64> = args
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| unknown())?;
    match v[..] {
        [a, b, c, d] => torus44(a, b, c, d),
        _ => Err(unknown()),
    }
}
