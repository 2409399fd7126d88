//! The skew field carried by the points of a line.
//!
//! Given a line `ℓ` with a zero `O` and a one `I`, sums and products of
//! points of `ℓ` are built from joins, parallels and intersections alone,
//! using an auxiliary point `B` off `ℓ`:
//!
//! ```text
//! A + C:  D = (B ∥ ℓ) ∩ (A ∥ OB),   A + C = (D ∥ CB) ∩ ℓ
//! A ∗ C:  D = (A ∥ IB) ∩ OB,        A ∗ C = (D ∥ BC) ∩ ℓ
//! ```
//!
//! where `(P ∥ m)` is the line through `P` parallel to `m`. On the x-axis of
//! AG(2, D) with `O = (0, 0)`, `I = (1, 0)` these agree with the ring
//! operations on first coordinates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::DivisionRing;
use crate::incidence::{Elem, Incidence, LineOf, Point, PointOf};
use crate::report::{Report, Status};
use crate::sampling::{stream_rng, Mode, Sampling, DEFAULT_RATIONAL_BOUND};

const SUITE: &str = "skewfield";

/// Seeded auxiliary points tried by [`AuxPolicy::AllAndCompare`] on infinite planes.
pub const AUX_SAMPLES: u64 = 100;
const AUX_SEED: u64 = 0xB0FF;

/// How the auxiliary point `B ∉ ℓ` is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxPolicy<P> {
    /// First point off `ℓ` in enumeration order, or `O` shifted across `ℓ`
    /// on infinite planes.
    DeterministicFirst,
    Explicit(P),
    /// Run every construction with every valid `B` (finite) or with
    /// [`AUX_SAMPLES`] seeded ones (infinite), failing on any disagreement.
    AllAndCompare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Add => "+",
            Op::Mul => "*",
        }
    }
}

/// `K = (ℓ, +, ∗)` with zero `O` and one `I`.
#[derive(Debug, Clone)]
pub struct LineAlgebra<'g, G: Incidence> {
    geom: &'g G,
    line: LineOf<G>,
    zero: PointOf<G>,
    one: PointOf<G>,
    policy: AuxPolicy<PointOf<G>>,
    aux: Vec<PointOf<G>>,
}

impl<'g, G: Incidence> LineAlgebra<'g, G> {
    pub fn new(
        geom: &'g G,
        line: LineOf<G>,
        zero: PointOf<G>,
        one: PointOf<G>,
        policy: AuxPolicy<PointOf<G>>,
    ) -> Result<Self> {
        if zero == one {
            return Err(Error::Degenerate("zero and one coincide"));
        }
        for p in [&zero, &one] {
            if !geom.contains(&line, p) {
                return Err(Error::OffLine(geom.format_point(p)));
            }
        }
        let aux = match &policy {
            AuxPolicy::DeterministicFirst => vec![geom.off_line_point(&line, &zero)],
            AuxPolicy::Explicit(b) => {
                if geom.contains(&line, b) {
                    return Err(Error::Degenerate("auxiliary point lies on the line"));
                }
                vec![b.clone()]
            }
            AuxPolicy::AllAndCompare => match geom.points() {
                Ok(points) => points.into_iter().filter(|p| !geom.contains(&line, p)).collect(),
                Err(_) => (0..AUX_SAMPLES)
                    .map(|i| {
                        let mut rng = stream_rng(AUX_SEED, i);
                        loop {
                            let p = geom.random_point(&mut rng, DEFAULT_RATIONAL_BOUND);
                            if !geom.contains(&line, &p) {
                                break p;
                            }
                        }
                    })
                    .collect(),
            },
        };
        Ok(LineAlgebra { geom, line, zero, one, policy, aux })
    }

    /// The x-axis with `O = (0, 0)` and `I = (1, 0)`.
    pub fn x_axis(geom: &'g G, policy: AuxPolicy<PointOf<G>>) -> Result<Self> {
        let r = geom.ring();
        let zero = Point::new(r.zero(), r.zero());
        let one = Point::new(r.one(), r.zero());
        let line = geom.line_through(&zero, &one)?;
        Self::new(geom, line, zero, one, policy)
    }

    pub fn with_policy(&self, policy: AuxPolicy<PointOf<G>>) -> Result<Self> {
        Self::new(self.geom, self.line.clone(), self.zero.clone(), self.one.clone(), policy)
    }

    pub fn geometry(&self) -> &'g G {
        self.geom
    }

    pub fn line(&self) -> &LineOf<G> {
        &self.line
    }

    pub fn zero(&self) -> &PointOf<G> {
        &self.zero
    }

    pub fn one(&self) -> &PointOf<G> {
        &self.one
    }

    pub fn policy(&self) -> &AuxPolicy<PointOf<G>> {
        &self.policy
    }

    pub fn aux_points(&self) -> &[PointOf<G>] {
        &self.aux
    }

    pub fn contains(&self, p: &PointOf<G>) -> bool {
        self.geom.contains(&self.line, p)
    }

    /// Points of `ℓ` in parameter order (finite planes).
    pub fn points(&self) -> Result<Vec<PointOf<G>>> {
        self.geom.line_points(&self.line)
    }

    /// Text label of a point of `ℓ`: its x-coordinate on lines `y = c`,
    /// otherwise its y-coordinate.
    pub fn label(&self, p: &PointOf<G>) -> String {
        let r = self.geom.ring();
        let (a, _, _) = self.line.coefficients();
        if r.is_zero(a) {
            r.format_element(&p.x)
        } else {
            r.format_element(&p.y)
        }
    }

    fn require_on_line(&self, p: &PointOf<G>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffLine(self.geom.format_point(p)))
        }
    }

    fn require_off_line(&self, b: &PointOf<G>) -> Result<()> {
        if self.contains(b) {
            Err(Error::Degenerate("auxiliary point lies on the line"))
        } else {
            Ok(())
        }
    }

    /// Runs `construct` for every auxiliary point of the policy and insists
    /// the answers agree and land on `ℓ`.
    fn resolve(&self, what: &str, construct: impl Fn(&PointOf<G>) -> Result<PointOf<G>>) -> Result<PointOf<G>> {
        let mut aux = self.aux.iter();
        let first_b = aux.next().expect("at least one auxiliary point");
        let first = construct(first_b)?;
        for b in aux {
            let other = construct(b)?;
            if other != first {
                let f = |p| self.geom.format_point(p);
                return Err(Error::AuxDependence(format!(
                    "{what}: B={} gives {}, B={} gives {}",
                    f(first_b),
                    f(&first),
                    f(b),
                    f(&other)
                )));
            }
        }
        if !self.contains(&first) {
            return Err(Error::ConstructionInvariant(format!(
                "{what} = {} is off the line",
                self.geom.format_point(&first)
            )));
        }
        Ok(first)
    }

    /// `A + C` with an explicit auxiliary point `B ∉ ℓ`.
    pub fn add_with(&self, a: &PointOf<G>, c: &PointOf<G>, b: &PointOf<G>) -> Result<PointOf<G>> {
        self.require_on_line(a)?;
        self.require_on_line(c)?;
        self.require_off_line(b)?;
        let g = self.geom;
        let ob = g.line_through(&self.zero, b)?;
        let d = g.meet(&g.parallel_through(b, &self.line), &g.parallel_through(a, &ob), "sum step 2")?;
        let cb = g.line_through(c, b)?;
        g.meet(&g.parallel_through(&d, &cb), &self.line, "sum step 3")
    }

    /// `A ∗ C` with an explicit auxiliary point `B ∉ ℓ`.
    pub fn mul_with(&self, a: &PointOf<G>, c: &PointOf<G>, b: &PointOf<G>) -> Result<PointOf<G>> {
        self.require_on_line(a)?;
        self.require_on_line(c)?;
        self.require_off_line(b)?;
        let g = self.geom;
        let ib = g.line_through(&self.one, b)?;
        let ob = g.line_through(&self.zero, b)?;
        let d = g.meet(&g.parallel_through(a, &ib), &ob, "product step 2")?;
        let bc = g.line_through(b, c)?;
        g.meet(&g.parallel_through(&d, &bc), &self.line, "product step 3")
    }

    pub fn add(&self, a: &PointOf<G>, c: &PointOf<G>) -> Result<PointOf<G>> {
        self.resolve("A + C", |b| self.add_with(a, c, b))
    }

    pub fn mul(&self, a: &PointOf<G>, c: &PointOf<G>) -> Result<PointOf<G>> {
        self.resolve("A * C", |b| self.mul_with(a, c, b))
    }

    /// `−A`: with `D` as in the sum, the parallel through `B` to `DO` meets `ℓ` at `−A`.
    pub fn neg(&self, a: &PointOf<G>) -> Result<PointOf<G>> {
        self.require_on_line(a)?;
        let g = self.geom;
        let geometric = self.resolve("-A", |b| {
            let ob = g.line_through(&self.zero, b)?;
            let d = g.meet(&g.parallel_through(b, &self.line), &g.parallel_through(a, &ob), "negation step 2")?;
            let d_o = g.line_through(&d, &self.zero)?;
            g.meet(&g.parallel_through(b, &d_o), &self.line, "negation step 3")
        })?;
        let found = match self.points() {
            Ok(points) => {
                let mut hits = Vec::new();
                for x in points {
                    if self.add(a, &x)? == self.zero {
                        hits.push(x);
                    }
                }
                hits
            }
            Err(_) => {
                let sum = self.add(a, &geometric)?;
                if sum == self.zero {
                    vec![geometric.clone()]
                } else {
                    vec![]
                }
            }
        };
        if found != [geometric.clone()] {
            return Err(Error::InverseMismatch(format!(
                "-{} constructed as {}, search found {} candidates",
                g.format_point(a),
                g.format_point(&geometric),
                found.len()
            )));
        }
        Ok(geometric)
    }

    /// `A⁻¹`: with `D` as in the product, the parallel through `B` to `DI`
    /// meets `ℓ` at `A⁻¹`.
    pub fn inv(&self, a: &PointOf<G>) -> Result<PointOf<G>> {
        self.require_on_line(a)?;
        if *a == self.zero {
            return Err(Error::ZeroInverse);
        }
        let g = self.geom;
        let geometric = self.resolve("A^-1", |b| {
            let ib = g.line_through(&self.one, b)?;
            let ob = g.line_through(&self.zero, b)?;
            let d = g.meet(&g.parallel_through(a, &ib), &ob, "inverse step 2")?;
            let di = g.line_through(&d, &self.one)?;
            g.meet(&g.parallel_through(b, &di), &self.line, "inverse step 3")
        })?;
        let two_sided =
            |x: &PointOf<G>| -> Result<bool> { Ok(self.mul(a, x)? == self.one && self.mul(x, a)? == self.one) };
        let found = match self.points() {
            Ok(points) => {
                let mut hits = Vec::new();
                for x in points {
                    if two_sided(&x)? {
                        hits.push(x);
                    }
                }
                hits
            }
            Err(_) => {
                if two_sided(&geometric)? {
                    vec![geometric.clone()]
                } else {
                    vec![]
                }
            }
        };
        if found != [geometric.clone()] {
            return Err(Error::InverseMismatch(format!(
                "{}^-1 constructed as {}, search found {} candidates",
                g.format_point(a),
                g.format_point(&geometric),
                found.len()
            )));
        }
        Ok(geometric)
    }

    fn random_point_on_line(&self, s: &Sampling, index: u64) -> PointOf<G> {
        let mut rng = s.rng(index);
        let t = self.geom.ring().random_element(&mut rng, s.rational_bound);
        self.geom.point_on(&self.line, &t)
    }

    /// Draws `count` points of `ℓ` for sample `i`.
    fn sample_points(&self, s: &Sampling, i: u64, count: u64) -> Vec<PointOf<G>> {
        (0..count).map(|j| self.random_point_on_line(s, i * count + j)).collect()
    }
}

/// An operation table over the points of a finite line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    pub op: Op,
    pub labels: Vec<String>,
    /// `entries[i][j]` is the index of `points[i] op points[j]`.
    pub entries: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    /// Header row `op,label…`, then one row per left operand.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec![self.op.symbol().to_owned()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header)?;
        for (i, row) in self.entries.iter().enumerate() {
            let mut rec = vec![self.labels[i].clone()];
            rec.extend(row.iter().map(|&k| self.labels[k].clone()));
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// The geometric `+` or `∗` table on a finite line, rows and columns in
/// parameter order.
pub fn cayley_table<G: Incidence>(k: &LineAlgebra<'_, G>, op: Op) -> Result<CayleyTable> {
    let points = k.points()?;
    let index = |p: &PointOf<G>| points.iter().position(|x| x == p);
    let entries = points
        .par_iter()
        .map(|a| {
            points
                .iter()
                .map(|c| {
                    let r = match op {
                        Op::Add => k.add(a, c)?,
                        Op::Mul => k.mul(a, c)?,
                    };
                    index(&r).ok_or_else(|| Error::ConstructionInvariant("result off the line".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CayleyTable { op, labels: points.iter().map(|p| k.label(p)).collect(), entries })
}

/// Division-ring axioms on a pair of operation tables with the given zero
/// and one indices. Commutativity of the product is informational.
pub fn check_field_tables(add: &CayleyTable, mul: &CayleyTable, zero: usize, one: usize) -> Report {
    let n = add.size();
    let l = &add.labels;
    let mut report = Report::new();
    let pair = |i: usize, j: usize| format!("A={} C={}", l[i], l[j]);
    let triple = |i: usize, j: usize, k: usize| format!("A={} B={} C={}", l[i], l[j], l[k]);
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let triples = || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
    let (a, m) = (|i: usize, j: usize| add.get(i, j), |i: usize, j: usize| mul.get(i, j));
    let n2 = (n * n) as u64;
    let n3 = n2 * n as u64;

    report.record(
        SUITE,
        "add_identity",
        n as u64,
        (0..n).find(|&i| a(i, zero) != i || a(zero, i) != i).map(|i| format!("A={}", l[i])),
    );
    report.record(
        SUITE,
        "add_inverse",
        n as u64,
        (0..n).find(|&i| !(0..n).any(|j| a(i, j) == zero && a(j, i) == zero)).map(|i| format!("A={}", l[i])),
    );
    report.record(
        SUITE,
        "add_associative",
        n3,
        triples().find(|&(i, j, k)| a(a(i, j), k) != a(i, a(j, k))).map(|(i, j, k)| triple(i, j, k)),
    );
    report.record(SUITE, "add_commutative", n2, pairs().find(|&(i, j)| a(i, j) != a(j, i)).map(|(i, j)| pair(i, j)));
    report.record(
        SUITE,
        "mul_identity",
        n as u64,
        (0..n).find(|&i| m(i, one) != i || m(one, i) != i).map(|i| format!("A={}", l[i])),
    );
    report.record(
        SUITE,
        "mul_zero",
        n as u64,
        (0..n).find(|&i| m(i, zero) != zero || m(zero, i) != zero).map(|i| format!("A={}", l[i])),
    );
    report.record(
        SUITE,
        "mul_no_zero_divisors",
        n2,
        pairs().find(|&(i, j)| i != zero && j != zero && m(i, j) == zero).map(|(i, j)| pair(i, j)),
    );
    report.record(
        SUITE,
        "mul_inverse",
        n as u64,
        (0..n)
            .filter(|&i| i != zero)
            .find(|&i| (0..n).filter(|&j| m(i, j) == one && m(j, i) == one).count() != 1)
            .map(|i| format!("A={}", l[i])),
    );
    report.record(
        SUITE,
        "mul_associative",
        n3,
        triples().find(|&(i, j, k)| m(m(i, j), k) != m(i, m(j, k))).map(|(i, j, k)| triple(i, j, k)),
    );
    report.record(
        SUITE,
        "left_distributive",
        n3,
        triples().find(|&(i, j, k)| m(i, a(j, k)) != a(m(i, j), m(i, k))).map(|(i, j, k)| triple(i, j, k)),
    );
    report.record(
        SUITE,
        "right_distributive",
        n3,
        triples().find(|&(i, j, k)| m(a(j, k), i) != a(m(j, i), m(k, i))).map(|(i, j, k)| triple(i, j, k)),
    );
    let noncommuting = pairs().find(|&(i, j)| m(i, j) != m(j, i));
    report.push(
        SUITE,
        "mul_commutative",
        Status::Info,
        match noncommuting {
            Some((i, j)) => format!("non-commutative: {}", pair(i, j)),
            None => "commutative".to_owned(),
        },
        n2,
    );
    report
}

/// Checks the skew-field axioms for the geometric operations on `ℓ`.
pub fn verify_skewfield<G: Incidence>(k: &LineAlgebra<'_, G>, mode: Mode) -> Report {
    match mode {
        Mode::Exhaustive => {
            let tables = cayley_table(k, Op::Add).and_then(|add| Ok((add, cayley_table(k, Op::Mul)?)));
            let points = k.points();
            match (tables, points) {
                (Ok((add, mul)), Ok(points)) => {
                    let zero = points.iter().position(|p| p == k.zero()).expect("O on the line");
                    let one = points.iter().position(|p| p == k.one()).expect("I on the line");
                    check_field_tables(&add, &mul, zero, one)
                }
                (Err(e), _) | (_, Err(e)) => {
                    let mut r = Report::new();
                    r.record(SUITE, "construction", 0, Some(e.to_string()));
                    r
                }
            }
        }
        Mode::Sampled(s) => sampled_axioms(k, s),
    }
}

type SampleFailures = Vec<(&'static str, String)>;

fn sampled_axioms<G: Incidence>(k: &LineAlgebra<'_, G>, s: Sampling) -> Report {
    let f = |p: &PointOf<G>| k.geometry().format_point(p);
    let (o, one) = (k.zero(), k.one());
    let outcomes: Vec<(SampleFailures, Option<String>)> = (0..s.samples)
        .into_par_iter()
        .map(|i| {
            let pts = k.sample_points(&s, i, 3);
            let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
            let mut fails: SampleFailures = Vec::new();
            let mut run = |name: &'static str, check: &dyn Fn() -> Result<bool>| match check() {
                Ok(true) => {}
                Ok(false) => fails.push((name, format!("A={} B={} C={}", f(a), f(b), f(c)))),
                Err(e) => fails.push((name, e.to_string())),
            };
            run("add_identity", &|| Ok(k.add(a, o)? == *a && k.add(o, a)? == *a));
            run("add_inverse", &|| {
                let n = k.neg(a)?;
                Ok(k.add(a, &n)? == *o && k.add(&n, a)? == *o)
            });
            run("add_associative", &|| Ok(k.add(&k.add(a, b)?, c)? == k.add(a, &k.add(b, c)?)?));
            run("add_commutative", &|| Ok(k.add(a, b)? == k.add(b, a)?));
            run("mul_identity", &|| Ok(k.mul(a, one)? == *a && k.mul(one, a)? == *a));
            run("mul_zero", &|| Ok(k.mul(a, o)? == *o && k.mul(o, a)? == *o));
            run("mul_no_zero_divisors", &|| Ok(*a == *o || *b == *o || k.mul(a, b)? != *o));
            run("mul_inverse", &|| {
                if a == o {
                    return Ok(true);
                }
                let inv = k.inv(a)?;
                Ok(k.mul(a, &inv)? == *one && k.mul(&inv, a)? == *one)
            });
            run("mul_associative", &|| Ok(k.mul(&k.mul(a, b)?, c)? == k.mul(a, &k.mul(b, c)?)?));
            run("left_distributive", &|| Ok(k.mul(a, &k.add(b, c)?)? == k.add(&k.mul(a, b)?, &k.mul(a, c)?)?));
            run("right_distributive", &|| Ok(k.mul(&k.add(b, c)?, a)? == k.add(&k.mul(b, a)?, &k.mul(c, a)?)?));
            let noncommuting = match (k.mul(a, b), k.mul(b, a)) {
                (Ok(x), Ok(y)) if x != y => Some(format!("non-commutative: A={} C={}", f(a), f(b))),
                _ => None,
            };
            (fails, noncommuting)
        })
        .collect();

    let mut report = Report::new();
    for name in [
        "add_identity",
        "add_inverse",
        "add_associative",
        "add_commutative",
        "mul_identity",
        "mul_zero",
        "mul_no_zero_divisors",
        "mul_inverse",
        "mul_associative",
        "left_distributive",
        "right_distributive",
    ] {
        let failure =
            outcomes.iter().find_map(|(fails, _)| fails.iter().find(|(n, _)| *n == name).map(|(_, w)| w.clone()));
        report.record(SUITE, name, s.samples, failure);
    }
    let witness = outcomes.iter().find_map(|(_, w)| w.clone()).unwrap_or_else(|| "commutative on all samples".into());
    report.push(SUITE, "mul_commutative", Status::Info, witness, s.samples);
    report
}

fn pairs_for<G: Incidence>(k: &LineAlgebra<'_, G>, mode: Mode) -> Result<Vec<(PointOf<G>, PointOf<G>)>> {
    Ok(match mode {
        Mode::Exhaustive => {
            let pts = k.points()?;
            pts.iter().flat_map(|a| pts.iter().map(move |c| (a.clone(), c.clone()))).collect()
        }
        Mode::Sampled(s) => (0..s.samples)
            .map(|i| {
                let p = k.sample_points(&s, i, 2);
                (p[0].clone(), p[1].clone())
            })
            .collect(),
    })
}

/// Sums and products agree for every auxiliary point: every `B ∉ ℓ` on a
/// finite plane, [`AUX_SAMPLES`] seeded ones otherwise.
pub fn check_aux_independence<G: Incidence>(k: &LineAlgebra<'_, G>, mode: Mode) -> Report {
    let mut report = Report::new();
    let all = match k.with_policy(AuxPolicy::AllAndCompare) {
        Ok(all) => all,
        Err(e) => {
            report.record(SUITE, "aux_independence", 0, Some(e.to_string()));
            return report;
        }
    };
    let pairs = match pairs_for(k, mode) {
        Ok(p) => p,
        Err(e) => {
            report.record(SUITE, "aux_independence", 0, Some(e.to_string()));
            return report;
        }
    };
    let failure = pairs.par_iter().find_map_first(|(a, c)| {
        let f = |p| k.geometry().format_point(p);
        for (op, result) in [("+", all.add(a, c)), ("*", all.mul(a, c))] {
            if let Err(e) = result {
                return Some(format!("A={} C={} op {op}: {e}", f(a), f(c)));
            }
        }
        None
    });
    report.record(SUITE, "aux_independence", pairs.len() as u64 * all.aux_points().len() as u64, failure);
    report
}

/// On the x-axis frame the geometric operations must equal the ring
/// operations on first coordinates.
pub fn check_coordinate_oracle<G: Incidence>(k: &LineAlgebra<'_, G>, mode: Mode) -> Report {
    let mut report = Report::new();
    let g = k.geometry();
    let r = g.ring();
    let canonical = k.zero() == &Point::new(r.zero(), r.zero()) && k.one() == &Point::new(r.one(), r.zero());
    if !canonical {
        report.record(SUITE, "coordinate_oracle", 0, Some("frame is not O=(0,0), I=(1,0)".into()));
        return report;
    }
    let pairs = match pairs_for(k, mode) {
        Ok(p) => p,
        Err(e) => {
            report.record(SUITE, "coordinate_oracle", 0, Some(e.to_string()));
            return report;
        }
    };
    let on_axis = |x: Elem<G>| Point::new(x, r.zero());
    let failure = pairs.par_iter().find_map_first(|(a, c)| {
        let f = |p| g.format_point(p);
        let sum = k.add(a, c);
        let prod = k.mul(a, c);
        let expect_sum = on_axis(r.add(&a.x, &c.x));
        let expect_prod = on_axis(r.mul(&a.x, &c.x));
        match (sum, prod) {
            (Ok(s), Ok(p)) if s == expect_sum && p == expect_prod => None,
            (Ok(s), Ok(p)) => Some(format!("A={} C={}: A+C={} A*C={}", f(a), f(c), f(&s), f(&p))),
            (Err(e), _) | (_, Err(e)) => Some(format!("A={} C={}: {e}", f(a), f(c))),
        }
    });
    report.record(SUITE, "coordinate_oracle", pairs.len() as u64, failure);
    report
}
