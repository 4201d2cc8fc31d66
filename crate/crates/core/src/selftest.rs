//! Reference checks run by `symtype selftest` and the acceptance test target.
//! Each check returns a pass/fail outcome with a one-line detail.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::enumeration::{
    enumerate_types, enumerate_types_naive, medial_provenance, Calibration, Census, DualityMode,
    MedialCensus, MedialSource,
};
use crate::formats::builtin;
use crate::names;
use crate::transforms::{
    demedialize, dual_flag, dual_type, medial_flag, medial_type_double, medial_type_extended,
    medial_type_of, petrie_flag, petrie_type, schlafli_gate_for_double_medial,
};
use crate::typegraph::{extend, quotient, CanonicalCode, TypeGraph};

/// Reference census values for `k = 1..=10`.
pub mod expected {
    pub const TYPES: [usize; 10] = [1, 7, 3, 22, 13, 70, 67, 315, 393, 1577];
    pub const SELF_DUAL: [usize; 10] = [1, 3, 1, 8, 3, 12, 7, 45, 25, 91];
    pub const SELF_POLAR: [usize; 10] = [1, 3, 1, 8, 3, 12, 7, 44, 25, 91];
    pub const DUALITIES: [usize; 10] = [1, 6, 1, 21, 3, 23, 7, 101, 25, 128];
    pub const POLARITIES: [usize; 10] = [1, 6, 1, 17, 3, 21, 7, 83, 25, 124];
    pub const EXTENDED_MEDIALS: [usize; 10] = [1, 6, 1, 15, 3, 19, 7, 73, 25, 120];
    pub const MEDIALS: [usize; 10] = [1, 7, 1, 20, 3, 21, 7, 88, 25, 128];
}

pub const CRITERIA: usize = 12;

const ENUMERATION_BUDGET: Duration = Duration::from_secs(300);
const NAIVE_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {}: {}", self.id, self.title, self.detail)
    }
}

fn title(id: usize) -> &'static str {
    match id {
        1 => "type counts",
        2 => "self-dual and self-polar counts",
        3 => "duality and polarity counts",
        4 => "medial type counts",
        5 => "proper extended graphs",
        6 => "edge-transitive types are medial",
        7 => "pinned medial constructions",
        8 => "flag/type operator commutation",
        9 => "de-medialization round trip",
        10 => "medial numerology",
        11 => "naive enumeration agrees",
        12 => "double medial orbit counts",
        _ => "unknown",
    }
}

/// Censuses for `k = 1..=max_k`, computed once and shared by the checks.
pub struct Selftest {
    max_k: usize,
    censuses: Vec<Census>,
    census_time: Duration,
}

impl Selftest {
    pub fn new(max_k: usize, jobs: usize) -> Self {
        let max_k = max_k.clamp(1, expected::TYPES.len());
        let start = Instant::now();
        let censuses = (1..=max_k).map(|k| Census::compute_parallel(k, jobs)).collect();
        Selftest {
            max_k,
            censuses,
            census_time: start.elapsed(),
        }
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    fn census(&self, k: usize) -> &Census {
        &self.censuses[k - 1]
    }

    fn half(&self, k: usize) -> Option<&Census> {
        k.is_multiple_of(2).then(|| self.census(k / 2))
    }

    pub fn run_all(&self) -> Vec<Outcome> {
        (1..=CRITERIA).map(|id| self.run(id)).collect()
    }

    pub fn run(&self, id: usize) -> Outcome {
        let (passed, detail) = match id {
            1 => self.type_counts(),
            2 => self.self_dual_counts(),
            3 => self.duality_counts(),
            4 => self.medial_counts(),
            5 => self.proper_extended(),
            6 => edge_transitive(),
            7 => pinned_constructions(),
            8 => commutation(),
            9 => demedialization(),
            10 => numerology(),
            11 => naive_agrees(),
            12 => double_medial(),
            _ => (false, format!("no criterion {id}")),
        };
        Outcome {
            id,
            title: title(id),
            passed,
            detail,
        }
    }

    fn column(&self, f: impl Fn(&Census) -> usize) -> Vec<usize> {
        (1..=self.max_k).map(|k| f(self.census(k))).collect()
    }

    fn compare(&self, label: &str, got: &[usize], want: &[usize]) -> (bool, String) {
        let want = &want[..self.max_k];
        if got == want {
            (true, format!("{label} {got:?}"))
        } else {
            (false, format!("{label} {got:?}, expected {want:?}"))
        }
    }

    fn type_counts(&self) -> (bool, String) {
        let got = self.column(|c| c.types());
        let (ok, detail) = self.compare("a", &got, &expected::TYPES);
        let fast = self.census_time <= ENUMERATION_BUDGET;
        (
            ok && fast,
            format!("{detail}; census time {:.1}s", self.census_time.as_secs_f64()),
        )
    }

    fn self_dual_counts(&self) -> (bool, String) {
        let b = self.column(|c| c.self_dual());
        let c = self.column(|c| c.self_polar());
        let (ok_b, db) = self.compare("b", &b, &expected::SELF_DUAL);
        let (ok_c, dc) = self.compare("c", &c, &expected::SELF_POLAR);
        let mut ok = ok_b && ok_c;
        let mut detail = format!("{db}; {dc}");
        if self.max_k >= 8 {
            let witnesses: Vec<String> = self
                .census(8)
                .self_dual_without_polarity()
                .iter()
                .map(|r| r.code.to_string())
                .collect();
            ok &= witnesses.len() == 1;
            detail.push_str(&format!("; self-dual without polarity at k=8: {witnesses:?}"));
        }
        (ok, detail)
    }

    fn duality_counts(&self) -> (bool, String) {
        let calib_k = self.max_k.min(4);
        let counts = |mode| {
            (1..=calib_k)
                .map(|k| (self.census(k).dualities(mode), self.census(k).polarities(mode)))
                .collect()
        };
        let calibration = Calibration {
            raw: counts(DualityMode::Raw),
            conjugacy: counts(DualityMode::Conjugacy),
        };
        let reference: Vec<(usize, usize)> = (0..calib_k)
            .map(|i| (expected::DUALITIES[i], expected::POLARITIES[i]))
            .collect();
        let matched = calibration.matching_mode(&reference);
        let mode = DualityMode::CALIBRATED;
        let d = self.column(|c| c.dualities(mode));
        let e = self.column(|c| c.polarities(mode));
        let (ok_d, dd) = self.compare("d", &d, &expected::DUALITIES);
        let (ok_e, de) = self.compare("e", &e, &expected::POLARITIES);
        let calibrated = matched == Some(mode);
        let outcome = match matched {
            Some(m) => format!("calibration for k<={calib_k} selects {m}"),
            None => format!("calibration for k<={calib_k} matches neither mode"),
        };
        (ok_d && ok_e && calibrated, format!("{outcome}; mode {mode}: {dd}; {de}"))
    }

    fn medial_counts(&self) -> (bool, String) {
        let medials: Vec<MedialCensus> = (1..=self.max_k)
            .map(|k| MedialCensus::from_censuses(self.census(k), self.half(k)))
            .collect();
        let f: Vec<usize> = medials.iter().map(MedialCensus::f).collect();
        let g: Vec<usize> = medials.iter().map(MedialCensus::g).collect();
        let (ok_f, df) = self.compare("f", &f, &expected::EXTENDED_MEDIALS);
        let (ok_g, dg) = self.compare("g", &g, &expected::MEDIALS);
        let bad: Vec<usize> = medials.iter().filter(|m| !m.formula_holds()).map(|m| m.m).collect();
        let formula = if bad.is_empty() {
            "g = f + (a+b)/2 of k/2 for even k, g = f for odd k: holds".to_string()
        } else {
            format!("formula fails at k={bad:?}")
        };
        (ok_f && ok_g && bad.is_empty(), format!("{df}; {dg}; {formula}"))
    }

    fn proper_extended(&self) -> (bool, String) {
        let got = self.column(|c| c.proper_extended());
        let want: Vec<usize> = (1..=self.max_k).map(|k| if k % 2 == 0 { 3 } else { 1 }).collect();
        (got == want, format!("per k {got:?}, expected {want:?}"))
    }
}

fn code(t: &TypeGraph) -> CanonicalCode {
    t.canonical_code()
}

fn pin(name: &str) -> CanonicalCode {
    code(&names::by_name(name).unwrap_or_else(|| panic!("pinned name {name}")))
}

fn edge_transitive() -> (bool, String) {
    let report = crate::enumeration::edge_transitive_medial_check();
    let counts = report.count_by_k();
    let want: BTreeMap<usize, usize> = [(1, 1), (2, 6), (4, 7)].into_iter().collect();
    let mut ok = report.types.len() == 14 && counts == want && report.all_medial();
    let mut detail = format!(
        "{} edge-transitive types, by k {:?}, all medial: {}",
        report.types.len(),
        counts,
        report.all_medial()
    );

    let c1 = Census::compute(1);
    let c2 = Census::compute(2);
    let mut provenance = medial_provenance(&c1, None);
    provenance.extend(medial_provenance(&c2, Some(&c1)));
    provenance.extend(medial_provenance(&Census::compute(4), Some(&c2)));
    let edge_transitive: Vec<&CanonicalCode> = report.types.iter().map(|(c, _)| c).collect();

    enum How {
        Proper,
        Improper,
        Doubling,
    }
    let rows = [
        ("1", How::Doubling, "2_01"),
        ("2_02", How::Proper, "2_12"),
        ("2_02", How::Improper, "2_1"),
        ("2_02", How::Doubling, "4_F"),
        ("2", How::Proper, "2_2"),
        ("2", How::Improper, "2"),
        ("2", How::Doubling, "4_G"),
        ("2_0", How::Doubling, "4_H"),
        ("2_2", How::Doubling, "4_H"),
    ];
    let mut missing = Vec::new();
    for (source, how, target) in rows {
        let (s, t) = (pin(source), pin(target));
        let found = edge_transitive.contains(&&t)
            && provenance.get(&t).is_some_and(|list| {
                list.iter().any(|(c, m)| {
                    *c == s
                        && match how {
                            How::Proper => *m == MedialSource::Proper,
                            How::Improper => matches!(m, MedialSource::Improper(_)),
                            How::Doubling => *m == MedialSource::None,
                        }
                })
            });
        if !found {
            missing.push(format!("{source}->{target}"));
        }
    }
    ok &= missing.is_empty();
    if missing.is_empty() {
        detail.push_str("; provenance rows for 1, 2_02, 2, 2_0, 2_2 match");
    } else {
        detail.push_str(&format!("; provenance rows missing: {missing:?}"));
    }
    (ok, detail)
}

fn pinned_constructions() -> (bool, String) {
    let ext = |name: &str, d: Vec<usize>| {
        let t = names::by_name(name).expect("pinned");
        code(&medial_type_extended(&extend(&t, d).expect("polarity")))
    };
    let dbl = |name: &str| code(&medial_type_double(&names::by_name(name).expect("pinned")));
    let checks: Vec<(&str, CanonicalCode, CanonicalCode)> = vec![
        ("(1, proper) -> 1", ext("1", vec![0]), pin("1")),
        ("(1, none) -> 2_01", dbl("1"), pin("2_01")),
        ("(2_02, proper) -> 2_12", ext("2_02", vec![0, 1]), pin("2_12")),
        ("(2_02, improper) -> 2_1", ext("2_02", vec![1, 0]), pin("2_1")),
        ("(2_1, improper) -> 2_0", ext("2_1", vec![1, 0]), pin("2_0")),
        ("(2, proper) -> 2_2", ext("2", vec![0, 1]), pin("2_2")),
        ("(2, improper) -> 2", ext("2", vec![1, 0]), pin("2")),
        ("(3^02, proper) -> 3^0", ext("3^02", vec![0, 1, 2]), pin("3^0")),
        ("(3^0, none) -> 6_D", dbl("3^0"), pin("6_D")),
        ("(3^2, none) -> 6_D", dbl("3^2"), pin("6_D")),
        ("(3^02, none) -> 6_M", dbl("3^02"), pin("6_M")),
        ("dbl(2_0) -> 4_H", dbl("2_0"), pin("4_H")),
        ("dbl(2_2) -> 4_H", dbl("2_2"), pin("4_H")),
        ("dbl(2_01) -> 4_A", dbl("2_01"), pin("4_A")),
        ("dbl(2_12) -> 4_A", dbl("2_12"), pin("4_A")),
        ("dbl(2_1) -> 4_C", dbl("2_1"), pin("4_C")),
        ("dbl(2_02) -> 4_F", dbl("2_02"), pin("4_F")),
        ("dbl(2) -> 4_G", dbl("2"), pin("4_G")),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, a, b)| a != b).map(|(n, _, _)| *n).collect();
    if failed.is_empty() {
        (true, format!("{} constructions match", checks.len()))
    } else {
        (false, format!("mismatches: {failed:?}"))
    }
}

fn commutation() -> (bool, String) {
    let mut failures = Vec::new();
    let maps = builtin::builtin_maps();
    for (name, g) in &maps {
        let t = quotient(g);
        if code(&quotient(&medial_flag(g))) != code(&medial_type_of(g)) {
            failures.push(format!("medial({name})"));
        }
        if code(&quotient(&dual_flag(g))) != code(&dual_type(&t)) {
            failures.push(format!("dual({name})"));
        }
        if code(&quotient(&petrie_flag(g))) != code(&petrie_type(&t)) {
            failures.push(format!("petrie({name})"));
        }
    }
    if failures.is_empty() {
        (true, format!("medial, dual and petrie commute with the quotient on {} maps", maps.len()))
    } else {
        (false, format!("failures: {failures:?}"))
    }
}

fn demedialization() -> (bool, String) {
    let mut failures = Vec::new();
    let maps = builtin::builtin_maps();
    for (name, g) in &maps {
        let me = medial_flag(g);
        match demedialize(&me) {
            Ok((a, b)) => {
                if !medial_flag(&a).is_isomorphic(&me) || !dual_flag(&a).is_isomorphic(&b) {
                    failures.push(name.clone());
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let rejects = demedialize(&builtin::tetrahedron()).is_err();
    if !rejects {
        failures.push("tetrahedron accepted".into());
    }
    if failures.is_empty() {
        (true, format!("{} maps round trip with dual outputs; tetrahedron rejected", maps.len()))
    } else {
        (false, format!("failures: {failures:?}"))
    }
}

fn numerology() -> (bool, String) {
    let mut failures = Vec::new();
    let maps = builtin::builtin_maps();
    for (name, g) in &maps {
        let me = medial_flag(g);
        let (m, e) = (g.elements(), me.elements());
        let ok = e.num_vertices() == m.num_edges()
            && e.num_edges() == 2 * m.num_edges()
            && e.num_faces() == m.num_vertices() + m.num_faces()
            && e.euler == m.euler
            && me.n() == 2 * g.n();
        if !ok {
            failures.push(name.clone());
        }
    }
    if failures.is_empty() {
        (true, format!("V, E, F, euler characteristic and flag counts agree on {} maps", maps.len()))
    } else {
        (false, format!("failures: {failures:?}"))
    }
}

fn naive_agrees() -> (bool, String) {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 1..=4 {
        if enumerate_types_naive(k) != enumerate_types(k) {
            bad.push(k);
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed <= NAIVE_BUDGET;
    let detail = if bad.is_empty() {
        format!("k=1..4 identical code lists in {:.1}s", elapsed.as_secs_f64())
    } else {
        format!("code lists differ at k={bad:?}")
    };
    (ok, detail)
}

fn double_medial() -> (bool, String) {
    let torus = schlafli_gate_for_double_medial(&builtin::torus44(3, 0, 0, 3).expect("3x3 torus"));
    let cube = schlafli_gate_for_double_medial(&builtin::cube());
    let ok = torus.same_orbit_count() && cube.double_medial_orbits == 4 && cube.orbits == 1;
    (
        ok,
        format!(
            "torus44(3,0,0,3) orbits {} -> {}; cube orbits {} -> {}",
            torus.orbits, torus.double_medial_orbits, cube.orbits, cube.double_medial_orbits
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_selftest_passes() {
        let s = Selftest::new(4, 2);
        for o in s.run_all() {
            assert!(o.passed, "{o}");
        }
    }

    #[test]
    fn outcome_display() {
        let o = Outcome {
            id: 3,
            title: title(3),
            passed: false,
            detail: "x".into(),
        };
        assert_eq!(o.to_string(), "[FAIL]  3 duality and polarity counts: x");
    }
}
