//! Isomorph-free enumeration of type graphs and the self-dual, polarity and
//! medial censuses built on it.
//!
//! Generation is skeleton-first: fix one labeled `(t0, t2)` per multiset of
//! 0-2 component shapes, sweep every involution `t1`, keep connected
//! triples and deduplicate by canonical code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::orbit::{self, Partition};
use crate::transforms::{dual_type, medial_type_double, medial_type_extended, petrie_type};
use crate::typegraph::{canonical_code_of, extend, CanonicalCode, TypeGraph, ZeroTwoShape};

/// A labeled `(t0, t2)` pair realizing a multiset of 0-2 components laid out
/// in block order `Q4, Q2a, Q2b, Q2c, Q1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroTwoSkeleton {
    pub components: Vec<ZeroTwoShape>,
    pub t0: Vec<usize>,
    pub t2: Vec<usize>,
}

impl ZeroTwoSkeleton {
    fn from_components(components: Vec<ZeroTwoShape>) -> Self {
        let k: usize = components.iter().map(|c| c.size()).sum();
        let mut t0: Vec<usize> = (0..k).collect();
        let mut t2: Vec<usize> = (0..k).collect();
        let mut v = 0;
        for c in &components {
            match c {
                ZeroTwoShape::Q4 => {
                    t0[v..v + 4].copy_from_slice(&[v + 1, v, v + 3, v + 2]);
                    t2[v..v + 4].copy_from_slice(&[v + 3, v + 2, v + 1, v]);
                }
                ZeroTwoShape::Q2a => t0[v..v + 2].copy_from_slice(&[v + 1, v]),
                ZeroTwoShape::Q2b => t2[v..v + 2].copy_from_slice(&[v + 1, v]),
                ZeroTwoShape::Q2c => {
                    t0[v..v + 2].copy_from_slice(&[v + 1, v]);
                    t2[v..v + 2].copy_from_slice(&[v + 1, v]);
                }
                ZeroTwoShape::Q1 => {}
            }
            v += c.size();
        }
        ZeroTwoSkeleton { components, t0, t2 }
    }
}

/// One skeleton per multiset of component shapes with sizes summing to `k`.
pub fn enumerate_zero_two_skeletons(k: usize) -> Vec<ZeroTwoSkeleton> {
    fn rec(i: usize, rem: usize, acc: &mut Vec<ZeroTwoShape>, out: &mut Vec<ZeroTwoSkeleton>) {
        if rem == 0 {
            out.push(ZeroTwoSkeleton::from_components(acc.clone()));
            return;
        }
        if i == ZeroTwoShape::ALL.len() {
            return;
        }
        let shape = ZeroTwoShape::ALL[i];
        let mut taken = 0;
        loop {
            rec(i + 1, rem - taken * shape.size(), acc, out);
            if (taken + 1) * shape.size() > rem {
                break;
            }
            acc.push(shape);
            taken += 1;
        }
        acc.truncate(acc.len() - taken);
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// All involutions on `0..k` (fixed points allowed), `T(k)` of them.
pub fn involutions(k: usize) -> Vec<Vec<usize>> {
    fn rec(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        let k = p.len();
        let mut i = i;
        while i < k && p[i] != usize::MAX {
            i += 1;
        }
        if i == k {
            out.push(p.clone());
            return;
        }
        p[i] = i;
        rec(p, i + 1, out);
        for j in i + 1..k {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                rec(p, i + 1, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; k], 0, &mut out);
    out
}

fn connected(tables: &[&[usize]]) -> bool {
    Partition::orbits(tables[0].len(), tables).len() == 1
}

fn sweep(skeletons: &[ZeroTwoSkeleton], t1s: &[Vec<usize>]) -> BTreeSet<CanonicalCode> {
    let mut found = BTreeSet::new();
    for s in skeletons {
        for t1 in t1s {
            let tables: [&[usize]; 3] = [&s.t0, t1, &s.t2];
            if connected(&tables) {
                found.insert(canonical_code_of(&tables));
            }
        }
    }
    found
}

/// Canonical codes of all type graphs on `k` vertices, sorted.
pub fn enumerate_types(k: usize) -> Vec<CanonicalCode> {
    enumerate_types_parallel(k, 1)
}

/// As [`enumerate_types`], splitting skeletons across `jobs` threads.
pub fn enumerate_types_parallel(k: usize, jobs: usize) -> Vec<CanonicalCode> {
    assert!(k >= 1, "k must be positive");
    let skeletons = enumerate_zero_two_skeletons(k);
    let t1s = involutions(k);
    let jobs = jobs.max(1).min(skeletons.len());
    let merged = if jobs == 1 {
        sweep(&skeletons, &t1s)
    } else {
        let chunk = skeletons.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = skeletons
                .chunks(chunk)
                .map(|part| {
                    let t1s = &t1s;
                    scope.spawn(move || sweep(part, t1s))
                })
                .collect();
            let mut all = BTreeSet::new();
            for h in handles {
                all.extend(h.join().expect("enumeration worker panicked"));
            }
            all
        })
    };
    merged.into_iter().collect()
}

/// Reference enumeration over every triple of involutions, keeping those
/// that form a valid type graph.
pub fn enumerate_types_naive(k: usize) -> Vec<CanonicalCode> {
    let invs = involutions(k);
    let mut found = BTreeSet::new();
    for t0 in &invs {
        for t2 in &invs {
            if (0..k).any(|v| t0[t2[v]] != t2[t0[v]]) {
                continue;
            }
            for t1 in &invs {
                if TypeGraph::new(t0.clone(), t1.clone(), t2.clone()).is_ok() {
                    found.insert(canonical_code_of(&[t0, t1, t2]));
                }
            }
        }
    }
    found.into_iter().collect()
}

/// How dualities and polarities of a type graph are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualityMode {
    /// Up to conjugation by the type graph's automorphism group.
    Conjugacy,
    /// Every vertex permutation counted separately.
    Raw,
}

impl DualityMode {
    /// The mode that reproduces the published duality and polarity counts.
    pub const CALIBRATED: DualityMode = DualityMode::Raw;
}

impl fmt::Display for DualityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityMode::Conjugacy => "conjugacy",
            DualityMode::Raw => "raw",
        })
    }
}

impl FromStr for DualityMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conjugacy" => Ok(DualityMode::Conjugacy),
            "raw" => Ok(DualityMode::Raw),
            other => Err(format!("unknown duality mode `{other}`")),
        }
    }
}

/// Number of classes of `perms` under conjugation by `group`.
fn conjugacy_classes(perms: &[Vec<usize>], group: &[Vec<usize>]) -> usize {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = 0;
    for p in perms {
        if seen.contains(p) {
            continue;
        }
        classes += 1;
        for a in group {
            let conj = orbit::compose(&orbit::compose(a, p), &orbit::inverse(a));
            seen.insert(conj);
        }
    }
    classes
}

/// Per-type census data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeRecord {
    pub code: CanonicalCode,
    pub self_dual: bool,
    pub self_petrie: bool,
    pub edge_transitive: bool,
    pub automorphisms: usize,
    pub dualities: Vec<Vec<usize>>,
    pub polarities: Vec<Vec<usize>>,
    pub duality_classes: usize,
    pub polarity_classes: usize,
}

impl TypeRecord {
    pub fn new(code: CanonicalCode) -> Self {
        let t = code.to_type_graph();
        let self_dual = dual_type(&t).canonical_code() == code;
        let self_petrie = petrie_type(&t).canonical_code() == code;
        let edge_transitive = t.is_edge_transitive();
        let autos = t.automorphisms();
        let dualities = if self_dual { t.dualities() } else { Vec::new() };
        let polarities: Vec<Vec<usize>> = dualities
            .iter()
            .filter(|d| orbit::is_identity(&orbit::compose(d, d)))
            .cloned()
            .collect();
        TypeRecord {
            duality_classes: conjugacy_classes(&dualities, &autos),
            polarity_classes: conjugacy_classes(&polarities, &autos),
            code,
            self_dual,
            self_petrie,
            edge_transitive,
            automorphisms: autos.len(),
            dualities,
            polarities,
        }
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    pub fn type_graph(&self) -> TypeGraph {
        self.code.to_type_graph()
    }

    pub fn is_polar(&self) -> bool {
        !self.polarities.is_empty()
    }

    /// The identity is a polarity.
    pub fn has_proper_polarity(&self) -> bool {
        self.polarities.iter().any(|d| orbit::is_identity(d))
    }

    pub fn duality_count(&self, mode: DualityMode) -> usize {
        match mode {
            DualityMode::Raw => self.dualities.len(),
            DualityMode::Conjugacy => self.duality_classes,
        }
    }

    pub fn polarity_count(&self, mode: DualityMode) -> usize {
        match mode {
            DualityMode::Raw => self.polarities.len(),
            DualityMode::Conjugacy => self.polarity_classes,
        }
    }

    /// Medial types of this type under each of its polarities, in polarity
    /// order.
    pub fn extended_medials(&self) -> Vec<(Vec<usize>, CanonicalCode)> {
        let t = self.type_graph();
        self.polarities
            .iter()
            .map(|d| {
                let x = extend(&t, d.clone()).expect("polarity of a type graph");
                (d.clone(), medial_type_extended(&x).canonical_code())
            })
            .collect()
    }
}

/// All types on `k` vertices with their census data.
#[derive(Debug, Clone)]
pub struct Census {
    pub k: usize,
    pub records: Vec<TypeRecord>,
}

impl Census {
    pub fn compute(k: usize) -> Self {
        Self::compute_parallel(k, 1)
    }

    pub fn compute_parallel(k: usize, jobs: usize) -> Self {
        let records = enumerate_types_parallel(k, jobs)
            .into_iter()
            .map(TypeRecord::new)
            .collect();
        Census { k, records }
    }

    pub fn types(&self) -> usize {
        self.records.len()
    }

    pub fn self_dual(&self) -> usize {
        self.records.iter().filter(|r| r.self_dual).count()
    }

    pub fn self_polar(&self) -> usize {
        self.records.iter().filter(|r| r.is_polar()).count()
    }

    pub fn self_petrie(&self) -> usize {
        self.records.iter().filter(|r| r.self_petrie).count()
    }

    pub fn dualities(&self, mode: DualityMode) -> usize {
        self.records.iter().map(|r| r.duality_count(mode)).sum()
    }

    pub fn polarities(&self, mode: DualityMode) -> usize {
        self.records.iter().map(|r| r.polarity_count(mode)).sum()
    }

    /// Extended graphs whose polarity is proper.
    pub fn proper_extended(&self) -> usize {
        self.records.iter().filter(|r| r.has_proper_polarity()).count()
    }

    /// Self-dual types without any polarity.
    pub fn self_dual_without_polarity(&self) -> Vec<&TypeRecord> {
        self.records
            .iter()
            .filter(|r| r.self_dual && !r.is_polar())
            .collect()
    }

    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.records.iter().map(|r| r.code.clone()).collect()
    }

    /// Medial types of the `k`-vertex extended graphs.
    pub fn extended_medial_codes(&self) -> BTreeSet<CanonicalCode> {
        self.records
            .iter()
            .flat_map(|r| r.extended_medials().into_iter().map(|(_, c)| c))
            .collect()
    }

    /// Doublings of these types, which live on `2k` vertices.
    pub fn doubling_codes(&self) -> BTreeSet<CanonicalCode> {
        self.records
            .iter()
            .map(|r| medial_type_double(&r.type_graph()).canonical_code())
            .collect()
    }
}

/// One column of the census table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub k: usize,
    /// Types.
    pub a: usize,
    /// Self-dual types.
    pub b: usize,
    /// Self-dual types with a polarity.
    pub c: usize,
    /// Dualities, counted per `mode`.
    pub d: usize,
    /// Polarities (extended type graphs), counted per `mode`.
    pub e: usize,
    /// Medial types arising from `k`-vertex extended graphs.
    pub f: usize,
    /// All medial types on `k` vertices.
    pub g: usize,
    pub mode: DualityMode,
}

/// Medial types on `m` vertices.
#[derive(Debug, Clone)]
pub struct MedialCensus {
    pub m: usize,
    pub from_extended: BTreeSet<CanonicalCode>,
    /// Doublings of `m/2`-vertex types (empty for odd `m`).
    pub from_doubling: BTreeSet<CanonicalCode>,
    /// `(a + b) / 2` of the `m/2` census, for even `m`.
    pub half_ab: Option<usize>,
}

impl MedialCensus {
    pub fn from_censuses(current: &Census, half: Option<&Census>) -> Self {
        let from_doubling = half.map(Census::doubling_codes).unwrap_or_default();
        MedialCensus {
            m: current.k,
            from_extended: current.extended_medial_codes(),
            from_doubling,
            half_ab: half.map(|h| (h.types() + h.self_dual()) / 2),
        }
    }

    pub fn f(&self) -> usize {
        self.from_extended.len()
    }

    pub fn g(&self) -> usize {
        self.from_extended.union(&self.from_doubling).count()
    }

    /// Medial type codes, sorted.
    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.from_extended
            .union(&self.from_doubling)
            .cloned()
            .collect()
    }

    /// Codes produced both ways.
    pub fn overlap(&self) -> Vec<CanonicalCode> {
        self.from_extended
            .intersection(&self.from_doubling)
            .cloned()
            .collect()
    }

    /// `g = f + (a + b) / 2` for even `m`, `g = f` for odd `m`.
    pub fn formula_holds(&self) -> bool {
        self.g() == self.f() + self.half_ab.unwrap_or(0)
    }
}

pub fn medial_census(m: usize) -> MedialCensus {
    let current = Census::compute(m);
    let half = m.is_multiple_of(2).then(|| Census::compute(m / 2));
    MedialCensus::from_censuses(&current, half.as_ref())
}

/// Full census row for `k`.
pub fn census(k: usize, mode: DualityMode) -> CensusRow {
    let current = Census::compute(k);
    let half = k.is_multiple_of(2).then(|| Census::compute(k / 2));
    row_from(&current, half.as_ref(), mode)
}

pub fn row_from(current: &Census, half: Option<&Census>, mode: DualityMode) -> CensusRow {
    let medial = MedialCensus::from_censuses(current, half);
    CensusRow {
        k: current.k,
        a: current.types(),
        b: current.self_dual(),
        c: current.self_polar(),
        d: current.dualities(mode),
        e: current.polarities(mode),
        f: medial.f(),
        g: medial.g(),
        mode,
    }
}

/// Duality and polarity counts for `k <= max_k` in both modes.
#[derive(Debug, Clone)]
pub struct Calibration {
    pub raw: Vec<(usize, usize)>,
    pub conjugacy: Vec<(usize, usize)>,
}

impl Calibration {
    pub fn compute(max_k: usize) -> Self {
        let mut raw = Vec::new();
        let mut conjugacy = Vec::new();
        for k in 1..=max_k {
            let c = Census::compute(k);
            raw.push((c.dualities(DualityMode::Raw), c.polarities(DualityMode::Raw)));
            conjugacy.push((
                c.dualities(DualityMode::Conjugacy),
                c.polarities(DualityMode::Conjugacy),
            ));
        }
        Calibration { raw, conjugacy }
    }

    /// The mode whose counts equal `expected`, preferring raw on a tie.
    pub fn matching_mode(&self, expected: &[(usize, usize)]) -> Option<DualityMode> {
        let n = self.raw.len();
        if expected.len() < n {
            return None;
        }
        if self.raw[..] == expected[..n] {
            Some(DualityMode::Raw)
        } else if self.conjugacy[..] == expected[..n] {
            Some(DualityMode::Conjugacy)
        } else {
            None
        }
    }
}

/// How a medial type arises.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum MedialSource {
    /// Extended graph with the identity polarity.
    Proper,
    /// Extended graph with the given non-identity polarity.
    Improper(Vec<usize>),
    /// Doubling of a non-self-dual map's type.
    None,
}

impl fmt::Display for MedialSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MedialSource::Proper => f.write_str("proper"),
            MedialSource::Improper(d) => {
                let d: Vec<String> = d.iter().map(usize::to_string).collect();
                write!(f, "improper[{}]", d.join(","))
            }
            MedialSource::None => f.write_str("none"),
        }
    }
}

/// Every `(source type, how)` pair producing each medial type on `m`
/// vertices.
pub fn medial_provenance(
    current: &Census,
    half: Option<&Census>,
) -> BTreeMap<CanonicalCode, Vec<(CanonicalCode, MedialSource)>> {
    let mut out: BTreeMap<CanonicalCode, Vec<(CanonicalCode, MedialSource)>> = BTreeMap::new();
    for r in &current.records {
        for (d, target) in r.extended_medials() {
            let how = if orbit::is_identity(&d) {
                MedialSource::Proper
            } else {
                MedialSource::Improper(d)
            };
            out.entry(target).or_default().push((r.code.clone(), how));
        }
    }
    if let Some(h) = half {
        for r in &h.records {
            let target = medial_type_double(&r.type_graph()).canonical_code();
            out.entry(target)
                .or_default()
                .push((r.code.clone(), MedialSource::None));
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// Edge-transitive types and how each arises as a medial type.
#[derive(Debug, Clone)]
pub struct EdgeTransitiveReport {
    pub types: Vec<(CanonicalCode, Vec<(CanonicalCode, MedialSource)>)>,
}

impl EdgeTransitiveReport {
    pub fn count_by_k(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (c, _) in &self.types {
            *m.entry(c.k()).or_insert(0) += 1;
        }
        m
    }

    pub fn all_medial(&self) -> bool {
        self.types.iter().all(|(_, p)| !p.is_empty())
    }
}

pub fn edge_transitive_medial_check() -> EdgeTransitiveReport {
    let c1 = Census::compute(1);
    let c2 = Census::compute(2);
    let c4 = Census::compute(4);
    let mut provenance = medial_provenance(&c1, None);
    provenance.extend(medial_provenance(&c2, Some(&c1)));
    provenance.extend(medial_provenance(&c4, Some(&c2)));
    let types = [&c1, &c2, &c4]
        .iter()
        .flat_map(|c| c.records.iter())
        .filter(|r| r.edge_transitive)
        .map(|r| {
            let sources = provenance.get(&r.code).cloned().unwrap_or_default();
            (r.code.clone(), sources)
        })
        .collect();
    EdgeTransitiveReport { types }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skeleton_counts() {
        assert_eq!(enumerate_zero_two_skeletons(1).len(), 1);
        assert_eq!(enumerate_zero_two_skeletons(2).len(), 4);
        // Brute force: multisets over {Q4:4, Q2a:2, Q2b:2, Q2c:2, Q1:1}.
        for k in 1..=8 {
            let mut brute = 0;
            for q4 in 0..=k / 4 {
                for a in 0..=k / 2 {
                    for b in 0..=k / 2 {
                        for c in 0..=k / 2 {
                            let used = 4 * q4 + 2 * (a + b + c);
                            if used <= k {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(enumerate_zero_two_skeletons(k).len(), brute, "k={k}");
        }
        assert_eq!(enumerate_zero_two_skeletons(4).len(), 11);
    }

    #[test]
    fn skeletons_are_commuting_involutions() {
        for s in enumerate_zero_two_skeletons(6) {
            assert!(orbit::is_involution(&s.t0).is_none());
            assert!(orbit::is_involution(&s.t2).is_none());
            assert!((0..6).all(|v| s.t0[s.t2[v]] == s.t2[s.t0[v]]));
        }
    }

    #[test]
    fn telephone_numbers() {
        let counts: Vec<usize> = (1..=10).map(|k| involutions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]);
    }

    #[test]
    fn small_type_counts() {
        let counts: Vec<usize> = (1..=5).map(|k| enumerate_types(k).len()).collect();
        assert_eq!(counts, vec![1, 7, 3, 22, 13]);
    }

    #[test]
    fn optimized_matches_naive() {
        for k in 1..=5 {
            assert_eq!(enumerate_types(k), enumerate_types_naive(k), "k={k}");
        }
    }

    #[test]
    fn parallel_matches_serial() {
        assert_eq!(enumerate_types_parallel(6, 4), enumerate_types(6));
    }

    #[test]
    fn census_small_rows() {
        let r = census(2, DualityMode::Raw);
        assert_eq!((r.a, r.b, r.c, r.d, r.e, r.f, r.g), (7, 3, 3, 6, 6, 6, 7));
        let r = census(4, DualityMode::Raw);
        assert_eq!((r.b, r.c, r.d, r.e, r.f, r.g), (8, 8, 21, 17, 15, 20));
        let r = census(3, DualityMode::Raw);
        assert_eq!((r.f, r.g), (1, 1));
    }

    #[test]
    fn conjugacy_mode_counts() {
        let r = census(4, DualityMode::Conjugacy);
        assert_eq!((r.d, r.e), (17, 15));
    }

    #[test]
    fn closure_under_dual_and_petrie() {
        for k in 1..=6 {
            let codes: BTreeSet<CanonicalCode> = enumerate_types(k).into_iter().collect();
            for c in &codes {
                let t = c.to_type_graph();
                assert!(TypeGraph::new(t.t(0).to_vec(), t.t(1).to_vec(), t.t(2).to_vec()).is_ok());
                assert!(codes.contains(&dual_type(&t).canonical_code()));
                assert!(codes.contains(&petrie_type(&t).canonical_code()));
                assert_eq!(dual_type(&dual_type(&t)).canonical_code(), *c);
            }
            let c = Census::compute(k);
            assert_eq!((c.types() + c.self_dual()) % 2, 0);
        }
    }

    #[test]
    fn doubling_identifies_exactly_dual_pairs() {
        for k in 1..=5 {
            let codes = enumerate_types(k);
            for a in &codes {
                for b in &codes {
                    let ta = a.to_type_graph();
                    let tb = b.to_type_graph();
                    let same = medial_type_double(&ta).canonical_code()
                        == medial_type_double(&tb).canonical_code();
                    let related = a == b || dual_type(&ta).canonical_code() == *b;
                    assert_eq!(same, related);
                }
            }
        }
    }

    #[test]
    fn k4_polarity_class_multiset() {
        let c = Census::compute(4);
        let mut classes: Vec<usize> = c
            .records
            .iter()
            .filter(|r| r.self_dual)
            .map(|r| r.polarity_classes)
            .collect();
        classes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(classes, vec![4, 2, 2, 2, 2, 1, 1, 1]);
        let fixed: usize = c
            .records
            .iter()
            .map(|r| r.extended_medials().iter().filter(|(_, m)| *m == r.code).count())
            .sum();
        assert_eq!(fixed, 1);
    }

    #[test]
    fn deterministic_codes() {
        assert_eq!(enumerate_types(6), enumerate_types(6));
    }

    #[test]
    fn duality_mode_parses() {
        assert_eq!("raw".parse::<DualityMode>(), Ok(DualityMode::Raw));
        assert!("other".parse::<DualityMode>().is_err());
    }
}
