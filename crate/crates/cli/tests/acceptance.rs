//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use skewplane::dilation::{check_all_dilations, check_isomorphism, enumerate_dilations, DilationKind};
use skewplane::incidence::{
    check_affine_axioms, check_desargues, check_pappus, pappus_conclusion, validate_pappus, Elem, Intersection, LineOf,
    PointOf,
};
use skewplane::line_algebra::{cayley_table, check_aux_independence, check_field_tables, verify_skewfield, Op};
use skewplane::witness::{hunt_witnesses, WitnessSearch};
use skewplane::{
    AuxPolicy, DivisionRing, GaloisField, GfElem, Incidence, LineAlgebra, Mode, Plane, Point, Quaternions, Report,
    Sampling,
};

const ORDERS: [(u64, u32); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gf(p: u64, k: u32) -> Plane<GaloisField> {
    Plane::new(GaloisField::new(p, k).unwrap())
}

fn q_of(p: u64, k: u32) -> u64 {
    p.pow(k)
}

fn require(report: &Report, what: &str) -> Result<(), String> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {}/{}: {}", c.suite, c.case_id, c.witness)),
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

/// Affine axioms exhaustively for q in {2,3,4,5,7,8,9} in under 10 s.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    for (p, k) in ORDERS.iter() {
        let report = check_affine_axioms(&gf(*p, *k), Mode::Exhaustive);
        require(&report, &format!("q={}", q_of(*p, *k)))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10), "axioms")?;
    Ok(format!("q in 2,3,4,5,7,8,9 in {:.2}s", elapsed.as_secs_f64()))
}

/// Seeded batches of a sampled suite until at least `want` valid
/// configurations have been checked.
fn valid_configurations(suite: &str, seed: u64, want: u64, check: impl Fn(Sampling) -> Report) -> Result<u64, String> {
    let mut checked = 0;
    let mut batch = 0;
    while checked < want {
        let report = check(Sampling::new(seed + batch, want));
        require(&report, suite)?;
        checked += report.case(suite).map_or(0, |c| c.checked);
        batch += 1;
        if batch > 20 {
            return Err(format!("only {checked} valid configurations after {batch} batches"));
        }
    }
    Ok(checked)
}

/// 10⁴ valid Desargues configurations for q in {3,5,7} and the quaternion plane.
fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for p in [3, 5, 7] {
        let plane = gf(p, 1);
        let n = valid_configurations("desargues", 200 + p, 10_000, |s| check_desargues(&plane, Mode::Sampled(s)))?;
        notes.push(format!("q={p}: {n}"));
    }
    let start = Instant::now();
    let plane = Plane::new(Quaternions);
    let n = valid_configurations("desargues", 200, 10_000, |s| check_desargues(&plane, Mode::Sampled(s)))?;
    notes.push(format!("quaternion: {n} in {:.1}s", start.elapsed().as_secs_f64()));
    Ok(notes.join(", "))
}

/// Index tables built straight from the field operations on first coordinates.
fn coordinate_table(points: &[Point<GfElem>], f: impl Fn(&GfElem, &GfElem) -> GfElem) -> Vec<Vec<usize>> {
    let index: HashMap<&GfElem, usize> = points.iter().enumerate().map(|(i, p)| (&p.x, i)).collect();
    points.iter().map(|a| points.iter().map(|c| index[&f(&a.x, &c.x)]).collect()).collect()
}

/// Geometric Cayley tables equal the field tables; axioms and aux
/// independence hold exhaustively, for q in {2,…,9}.
fn criterion_3() -> Outcome {
    for (p, k) in ORDERS.iter() {
        let plane = gf(*p, *k);
        let q = q_of(*p, *k);
        let ring = plane.ring();
        let alg = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).map_err(|e| e.to_string())?;
        let points = alg.points().map_err(|e| e.to_string())?;
        if points.iter().any(|pt| pt.y != ring.zero()) {
            return Err(format!("q={q}: frame line is not y=0"));
        }
        for (op, oracle) in [
            (Op::Add, coordinate_table(&points, |a, b| ring.add(a, b))),
            (Op::Mul, coordinate_table(&points, |a, b| ring.mul(a, b))),
        ] {
            let table = cayley_table(&alg, op).map_err(|e| e.to_string())?;
            if table.entries != oracle {
                return Err(format!("q={q}: geometric {} table differs from the field", op.symbol()));
            }
        }
        require(&verify_skewfield(&alg, Mode::Exhaustive), &format!("q={q}"))?;
        require(&check_aux_independence(&alg, Mode::Exhaustive), &format!("q={q}"))?;
    }
    Ok("q in 2,3,4,5,7,8,9: tables match, skew-field axioms and all-B independence hold".into())
}

/// Every dilation is an isomorphism K₁ → K₂ for q in {2,3,4,5}; q=5 in under 60 s.
fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let plane = gf(p, k);
        let alg = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let report = check_all_dilations(&alg, Mode::Exhaustive);
        let elapsed = start.elapsed();
        require(&report, &format!("q={}", q_of(p, k)))?;
        for case in ["restriction_bijective", "add_homomorphism", "mul_homomorphism"] {
            if report.case(case).map_or(0, |c| c.checked) == 0 {
                return Err(format!("q={}: {case} checked nothing", q_of(p, k)));
            }
        }
        if p == 5 {
            within(elapsed, Duration::from_secs(60), "q=5 dilations")?;
        }
        let count = enumerate_dilations(&plane).map_err(|e| e.to_string())?.len();
        notes.push(format!("q={}: {count} dilations in {:.2}s", q_of(p, k), elapsed.as_secs_f64()));
    }
    Ok(notes.join(", "))
}

/// Translations whose direction crosses ℓ₁, exhaustively for q ≤ 5.
fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let plane = gf(p, k);
        let q = q_of(p, k);
        let alg = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).map_err(|e| e.to_string())?;
        let maps = enumerate_dilations(&plane).map_err(|e| e.to_string())?;
        let crossing: Vec<_> = maps
            .iter()
            .filter(|d| d.kind() == DilationKind::Translation)
            .filter(|d| !plane.is_parallel(&d.translation_direction().unwrap(), alg.line()))
            .collect();
        if crossing.len() as u64 != q * q - q {
            return Err(format!("q={q}: {} crossing translations, expected {}", crossing.len(), q * q - q));
        }
        for d in &crossing {
            let report = check_isomorphism(d, &alg, Mode::Exhaustive);
            require(&report, &format!("q={q}"))?;
            let target = d.apply_line(alg.line()).map_err(|e| e.to_string())?;
            if target == *alg.line() {
                return Err(format!("q={q}: {} fixes the line", d.describe()));
            }
        }
        notes.push(format!("q={q}: {}", crossing.len()));
    }
    Ok(format!("crossing translations {}", notes.join(", ")))
}

/// Pappus: exhaustive for q in {2,3,4}, 10⁴ seeded valid configurations for q in {5,7,8,9}.
fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let report = check_pappus(&gf(p, k), Mode::Exhaustive);
        require(&report, &format!("q={}", q_of(p, k)))?;
        notes.push(format!("q={}: {} configs", q_of(p, k), report.case("pappus").unwrap().checked));
    }
    for (p, k) in [(5, 1), (7, 1), (2, 3), (3, 2)] {
        let plane = gf(p, k);
        let n = valid_configurations("pappus", 600 + q_of(p, k), 10_000, |s| check_pappus(&plane, Mode::Sampled(s)))
            .map_err(|e| format!("q={}: {e}", q_of(p, k)))?;
        notes.push(format!("q={}: {n} sampled", q_of(p, k)));
    }
    Ok(notes.join(", "))
}

/// Quaternion witnesses within 10⁵ samples at bound 8, through the CLI and
/// re-checked against the ring.
fn criterion_7() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let status = Command::new(env!("CARGO_BIN_EXE_skewplane"))
        .args(["witness", "--quaternion", "--seed", "7", "--samples", "100000", "--rational-bound", "8", "--out"])
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    if status.status.code() != Some(0) {
        return Err(format!("witness exited {:?}", status.status.code()));
    }
    let text = std::fs::read_to_string(dir.path().join("witness.txt")).map_err(|e| e.to_string())?;
    if text.matches("re-verified: true").count() != 2 {
        return Err("witness file lacks two re-verified witnesses".into());
    }

    let plane = Plane::new(Quaternions);
    let alg = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).map_err(|e| e.to_string())?;
    let w = match hunt_witnesses(&alg, Sampling::new(7, 100_000).with_bound(8)) {
        WitnessSearch::Found(w) => w,
        WitnessSearch::Exhausted { missing, samples } => return Err(format!("no {missing} in {samples} samples")),
    };
    let c = &w.commutator;
    let (a, b) = (&c.a.x, &c.c.x);
    if a.mul(b) == b.mul(a) || c.ac.x != a.mul(b) || c.ca.x != b.mul(a) {
        return Err("commutator disagrees with quaternion multiplication".into());
    }
    if validate_pappus(&plane, &w.pappus).is_err() || pappus_conclusion(&plane, &w.pappus) != Ok(false) {
        return Err("Pappus witness fails re-verification".into());
    }
    Ok(format!(
        "commutator after {} samples, Pappus violation after {} samples",
        w.commutator_samples, w.pappus_samples
    ))
}

/// A plane whose `parallel_through` is wrong for one point and one line.
struct Tampered {
    inner: Plane<GaloisField>,
    point: PointOf<Plane<GaloisField>>,
    line: LineOf<Plane<GaloisField>>,
    answer: LineOf<Plane<GaloisField>>,
}

impl Incidence for Tampered {
    type Ring = GaloisField;

    fn ring(&self) -> &GaloisField {
        self.inner.ring()
    }

    fn line_through(&self, p: &PointOf<Self>, q: &PointOf<Self>) -> skewplane::Result<LineOf<Self>> {
        self.inner.line_through(p, q)
    }

    fn parallel_through(&self, p: &PointOf<Self>, l: &LineOf<Self>) -> LineOf<Self> {
        if *p == self.point && *l == self.line {
            self.answer.clone()
        } else {
            self.inner.parallel_through(p, l)
        }
    }

    fn intersect(&self, l1: &LineOf<Self>, l2: &LineOf<Self>) -> Intersection<Elem<Self>> {
        self.inner.intersect(l1, l2)
    }

    fn contains(&self, l: &LineOf<Self>, p: &PointOf<Self>) -> bool {
        self.inner.contains(l, p)
    }
}

/// One corrupted table entry or parallel fails its suite with a witness.
fn criterion_8() -> Outcome {
    let plane = gf(5, 1);
    let alg = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).map_err(|e| e.to_string())?;
    let add = cayley_table(&alg, Op::Add).map_err(|e| e.to_string())?;
    let mut mul = cayley_table(&alg, Op::Mul).map_err(|e| e.to_string())?;
    mul.entries[2][4] = (mul.entries[2][4] + 1) % 5;
    let report = check_field_tables(&add, &mul, 0, 1);
    let table_witness = match report.first_failure() {
        Some(c) if !c.witness.is_empty() => format!("{}: {}", c.case_id, c.witness),
        _ => return Err("corrupted product table passed".into()),
    };

    let inner = gf(3, 1);
    let pt = |x, y| Point::new(GfElem(x), GfElem(y));
    let line = inner.x_axis();
    let answer = inner.line_through(&pt(0, 2), &pt(1, 2)).unwrap();
    let tampered = Tampered { inner, point: pt(1, 1), line, answer };
    let report = check_affine_axioms(&tampered, Mode::Exhaustive);
    let parallel_witness = match report.first_failure() {
        Some(c) if !c.witness.is_empty() => format!("{}: {}", c.case_id, c.witness),
        _ => return Err("corrupted parallel_through passed".into()),
    };
    Ok(format!("table -> {table_witness}; parallel -> {parallel_witness}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("affine axioms", criterion_1),
        ("Desargues sampled", criterion_2),
        ("line skew field", criterion_3),
        ("dilation isomorphisms", criterion_4),
        ("crossing translations", criterion_5),
        ("Pappus on finite planes", criterion_6),
        ("quaternion witnesses", criterion_7),
        ("mutation sanity", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("acceptance {} [pass] {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {} [fail] {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
