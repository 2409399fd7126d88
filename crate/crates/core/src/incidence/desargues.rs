//! Desargues' axiom in its parallel form: two triangles whose corresponding
//! vertices lie on three distinct parallel lines, with two pairs of
//! corresponding sides parallel, have their third sides parallel too.

use std::fmt;

use rayon::prelude::*;

use super::{Incidence, LineOf, PointOf};
use crate::error::{Error, Result};
use crate::field::DivisionRing;
use crate::report::{Report, Status};
use crate::sampling::{Mode, Sampling};

const SUITE: &str = "desargues";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesarguesConfig<P, L> {
    /// The carrier lines `ℓ_k`, `ℓ_l`, `ℓ_m`.
    pub carriers: [L; 3],
    /// `A`, `B`, `C`, one on each carrier.
    pub first: [P; 3],
    /// `A′`, `B′`, `C′`.
    pub second: [P; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesarguesClause {
    CarriersNotParallel,
    CarriersNotDistinct,
    /// A vertex of the first (`primed = false`) or second triangle is off its carrier.
    VertexOffCarrier {
        vertex: char,
        primed: bool,
    },
    AbNotParallel,
    BcNotParallel,
    ACoincidesWithC,
    APrimeCoincidesWithCPrime,
}

impl fmt::Display for DesarguesClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesarguesClause::CarriersNotParallel => f.write_str("carrier lines are not parallel"),
            DesarguesClause::CarriersNotDistinct => f.write_str("carrier lines are not pairwise distinct"),
            DesarguesClause::VertexOffCarrier { vertex, primed } => {
                write!(f, "{vertex}{} is not on its carrier line", if *primed { "'" } else { "" })
            }
            DesarguesClause::AbNotParallel => f.write_str("AB is not parallel to A'B'"),
            DesarguesClause::BcNotParallel => f.write_str("BC is not parallel to B'C'"),
            DesarguesClause::ACoincidesWithC => f.write_str("A = C"),
            DesarguesClause::APrimeCoincidesWithCPrime => f.write_str("A' = C'"),
        }
    }
}

pub type Config<G> = DesarguesConfig<PointOf<G>, LineOf<G>>;

/// Checks every hypothesis clause, naming the first that fails.
pub fn validate_desargues<G: Incidence>(geom: &G, cfg: &Config<G>) -> Result<(), DesarguesClause> {
    let [lk, ll, lm] = &cfg.carriers;
    if !(geom.is_parallel(lk, ll) && geom.is_parallel(ll, lm)) {
        return Err(DesarguesClause::CarriersNotParallel);
    }
    if lk == ll || ll == lm || lk == lm {
        return Err(DesarguesClause::CarriersNotDistinct);
    }
    for (i, vertex) in ['A', 'B', 'C'].into_iter().enumerate() {
        if !geom.contains(&cfg.carriers[i], &cfg.first[i]) {
            return Err(DesarguesClause::VertexOffCarrier { vertex, primed: false });
        }
        if !geom.contains(&cfg.carriers[i], &cfg.second[i]) {
            return Err(DesarguesClause::VertexOffCarrier { vertex, primed: true });
        }
    }
    let [a, b, c] = &cfg.first;
    let [a2, b2, c2] = &cfg.second;
    if a == c {
        return Err(DesarguesClause::ACoincidesWithC);
    }
    if a2 == c2 {
        return Err(DesarguesClause::APrimeCoincidesWithCPrime);
    }
    // vertices on distinct parallel carriers are distinct
    let side = |p: &PointOf<G>, q: &PointOf<G>| geom.line_through(p, q).expect("distinct carriers");
    if !geom.is_parallel(&side(a, b), &side(a2, b2)) {
        return Err(DesarguesClause::AbNotParallel);
    }
    if !geom.is_parallel(&side(b, c), &side(b2, c2)) {
        return Err(DesarguesClause::BcNotParallel);
    }
    Ok(())
}

/// Whether `AC ∥ A′C′` for a configuration satisfying the hypotheses.
pub fn desargues_conclusion<G: Incidence>(geom: &G, cfg: &Config<G>) -> Result<bool> {
    validate_desargues(geom, cfg).map_err(Error::DesarguesHypothesis)?;
    let ac = geom.line_through(&cfg.first[0], &cfg.first[2])?;
    let ac2 = geom.line_through(&cfg.second[0], &cfg.second[2])?;
    Ok(geom.is_parallel(&ac, &ac2))
}

pub fn check_desargues_config<G: Incidence>(geom: &G, cfg: &Config<G>) -> Result<Report> {
    let holds = desargues_conclusion(geom, cfg)?;
    let mut report = Report::new();
    report.record(SUITE, "configuration", 1, (!holds).then(|| describe(geom, cfg)));
    Ok(report)
}

fn describe<G: Incidence>(geom: &G, cfg: &Config<G>) -> String {
    let f = |p| geom.format_point(p);
    format!(
        "A={} B={} C={} A'={} B'={} C'={}",
        f(&cfg.first[0]),
        f(&cfg.first[1]),
        f(&cfg.first[2]),
        f(&cfg.second[0]),
        f(&cfg.second[1]),
        f(&cfg.second[2])
    )
}

/// Given the carriers, the first triangle and `A′`, the unique `B′`, `C′`
/// making two pairs of sides parallel.
fn complete<G: Incidence>(
    geom: &G,
    carriers: [LineOf<G>; 3],
    first: [PointOf<G>; 3],
    a2: PointOf<G>,
) -> Result<Config<G>> {
    let [a, b, c] = &first;
    let ab = geom.line_through(a, b)?;
    let b2 = geom.meet(&geom.parallel_through(&a2, &ab), &carriers[1], "B'")?;
    let bc = geom.line_through(b, c)?;
    let c2 = geom.meet(&geom.parallel_through(&b2, &bc), &carriers[2], "C'")?;
    Ok(DesarguesConfig { carriers, first, second: [a2, b2, c2] })
}

/// Exhaustive on finite planes; otherwise seeded valid configurations.
/// Rejected samples are counted in an informational row.
pub fn check_desargues<G: Incidence>(geom: &G, mode: Mode) -> Report {
    match mode {
        Mode::Exhaustive => exhaustive(geom),
        Mode::Sampled(s) => sampled(geom, s),
    }
}

fn exhaustive<G: Incidence>(geom: &G) -> Report {
    let mut report = Report::new();
    let lines = match geom.lines() {
        Ok(l) => l,
        Err(e) => {
            report.record(SUITE, "desargues", 0, Some(e.to_string()));
            return report;
        }
    };
    // parallel classes, each a set of distinct lines
    let mut classes: Vec<Vec<LineOf<G>>> = Vec::new();
    for l in lines {
        match classes.iter_mut().find(|c| geom.is_parallel(&c[0], &l)) {
            Some(c) => c.push(l),
            None => classes.push(vec![l]),
        }
    }
    let mut triples = Vec::new();
    for class in &classes {
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                for k in j + 1..class.len() {
                    triples.push([class[i].clone(), class[j].clone(), class[k].clone()]);
                }
            }
        }
    }
    let outcomes: Vec<(u64, Option<String>)> = triples
        .par_iter()
        .map(|carriers| {
            let pts: Vec<Vec<PointOf<G>>> = carriers.iter().map(|l| geom.line_points(l).unwrap_or_default()).collect();
            let mut checked = 0;
            for a in &pts[0] {
                for b in &pts[1] {
                    for c in &pts[2] {
                        for a2 in pts[0].iter().filter(|p| *p != a) {
                            checked += 1;
                            let first = [a.clone(), b.clone(), c.clone()];
                            let verdict = complete(geom, carriers.clone(), first, a2.clone())
                                .and_then(|cfg| desargues_conclusion(geom, &cfg).map(|ok| (ok, cfg)));
                            match verdict {
                                Ok((true, _)) => {}
                                Ok((false, cfg)) => return (checked, Some(describe(geom, &cfg))),
                                Err(e) => return (checked, Some(format!("construction failed: {e}"))),
                            }
                        }
                    }
                }
            }
            (checked, None)
        })
        .collect();
    let checked = outcomes.iter().map(|o| o.0).sum();
    let failure = outcomes.into_iter().find_map(|o| o.1);
    report.record(SUITE, "desargues", checked, failure);
    report
}

enum Sample {
    Rejected,
    Held,
    Failed(String),
}

fn sampled<G: Incidence>(geom: &G, s: Sampling) -> Report {
    let bound = s.rational_bound;
    let r = geom.ring();
    let outcomes: Vec<Sample> = (0..s.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = s.rng(i);
            let lk = geom.random_line(&mut rng, bound);
            let ll = geom.parallel_through(&geom.random_point(&mut rng, bound), &lk);
            let lm = geom.parallel_through(&geom.random_point(&mut rng, bound), &lk);
            let mut on = |l: &LineOf<G>| geom.point_on(l, &r.random_element(&mut rng, bound));
            let (a, b, c, a2) = (on(&lk), on(&ll), on(&lm), on(&lk));
            if lk == ll || ll == lm || lk == lm || a == a2 {
                return Sample::Rejected;
            }
            let cfg = match complete(geom, [lk, ll, lm], [a, b, c], a2) {
                Ok(cfg) => cfg,
                Err(e) => return Sample::Failed(format!("construction failed: {e}")),
            };
            if let Err(clause) = validate_desargues(geom, &cfg) {
                return Sample::Failed(format!("completed configuration violates hypothesis: {clause}"));
            }
            match desargues_conclusion(geom, &cfg) {
                Ok(true) => Sample::Held,
                Ok(false) => Sample::Failed(describe(geom, &cfg)),
                Err(e) => Sample::Failed(e.to_string()),
            }
        })
        .collect();
    let rejected = outcomes.iter().filter(|o| matches!(o, Sample::Rejected)).count() as u64;
    let failure = outcomes.into_iter().find_map(|o| match o {
        Sample::Failed(w) => Some(w),
        _ => None,
    });
    let mut report = Report::new();
    report.record(SUITE, "desargues", s.samples - rejected, failure);
    report.push(SUITE, "rejected_samples", Status::Info, rejected.to_string(), s.samples);
    report
}
