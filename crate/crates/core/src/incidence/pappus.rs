//! The affine Pappus statement.
//!
//! `P1, P3, P5` lie on a line `ℓ`, `P2, P4, P6` on a line `ℓ′ ≠ ℓ`, all six
//! distinct and none on `ℓ ∩ ℓ′`. If `P1P2 ∥ P4P5` and `P2P3 ∥ P5P6` then
//! `P3P4 ∥ P6P1`. In a coordinate plane this holds exactly when the ring
//! is commutative.

use std::fmt;

use rayon::prelude::*;

use super::{Incidence, Intersection, LineOf, PointOf};
use crate::error::{Error, Result};
use crate::field::DivisionRing;
use crate::report::{Report, Status};
use crate::sampling::{Mode, Sampling};

const SUITE: &str = "pappus";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PappusConfig<P> {
    /// `P1 … P6`.
    pub points: [P; 6],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PappusClause {
    PointsNotDistinct,
    OddPointsNotCollinear,
    EvenPointsNotCollinear,
    SameCarrier,
    PointAtCarrierIntersection,
    FirstPairNotParallel,
    SecondPairNotParallel,
}

impl fmt::Display for PappusClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PappusClause::PointsNotDistinct => "the six points are not distinct",
            PappusClause::OddPointsNotCollinear => "P1, P3, P5 are not collinear",
            PappusClause::EvenPointsNotCollinear => "P2, P4, P6 are not collinear",
            PappusClause::SameCarrier => "both triples lie on one line",
            PappusClause::PointAtCarrierIntersection => "a point lies on both carrier lines",
            PappusClause::FirstPairNotParallel => "P1P2 is not parallel to P4P5",
            PappusClause::SecondPairNotParallel => "P2P3 is not parallel to P5P6",
        })
    }
}

pub type Config<G> = PappusConfig<PointOf<G>>;

pub fn validate_pappus<G: Incidence>(geom: &G, cfg: &Config<G>) -> Result<(), PappusClause> {
    let p = &cfg.points;
    for i in 0..6 {
        for j in i + 1..6 {
            if p[i] == p[j] {
                return Err(PappusClause::PointsNotDistinct);
            }
        }
    }
    let l = geom.line_through(&p[0], &p[2]).expect("distinct");
    if !geom.contains(&l, &p[4]) {
        return Err(PappusClause::OddPointsNotCollinear);
    }
    let l2 = geom.line_through(&p[1], &p[3]).expect("distinct");
    if !geom.contains(&l2, &p[5]) {
        return Err(PappusClause::EvenPointsNotCollinear);
    }
    if l == l2 {
        return Err(PappusClause::SameCarrier);
    }
    if let Intersection::Point(x) = geom.intersect(&l, &l2) {
        if p.contains(&x) {
            return Err(PappusClause::PointAtCarrierIntersection);
        }
    }
    let join = |i: usize, j: usize| geom.line_through(&p[i], &p[j]).expect("distinct");
    if !geom.is_parallel(&join(0, 1), &join(3, 4)) {
        return Err(PappusClause::FirstPairNotParallel);
    }
    if !geom.is_parallel(&join(1, 2), &join(4, 5)) {
        return Err(PappusClause::SecondPairNotParallel);
    }
    Ok(())
}

/// Whether `P3P4 ∥ P6P1` for a configuration satisfying the hypotheses.
pub fn pappus_conclusion<G: Incidence>(geom: &G, cfg: &Config<G>) -> Result<bool> {
    validate_pappus(geom, cfg).map_err(Error::PappusHypothesis)?;
    let p = &cfg.points;
    let l34 = geom.line_through(&p[2], &p[3])?;
    let l61 = geom.line_through(&p[5], &p[0])?;
    Ok(geom.is_parallel(&l34, &l61))
}

pub fn describe<G: Incidence>(geom: &G, cfg: &Config<G>) -> String {
    cfg.points
        .iter()
        .enumerate()
        .map(|(i, p)| format!("P{}={}", i + 1, geom.format_point(p)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Completes `P1, P3, P5 ∈ ℓ` and `P2 ∈ ℓ′` with the `P4, P6 ∈ ℓ′` forced
/// by the two parallel hypotheses.
fn complete<G: Incidence>(geom: &G, carrier2: &LineOf<G>, odd: [&PointOf<G>; 3], p2: &PointOf<G>) -> Option<Config<G>> {
    let [p1, p3, p5] = odd;
    let l12 = geom.line_through(p1, p2).ok()?;
    let l23 = geom.line_through(p2, p3).ok()?;
    let p4 = geom.meet(&geom.parallel_through(p5, &l12), carrier2, "P4").ok()?;
    let p6 = geom.meet(&geom.parallel_through(p5, &l23), carrier2, "P6").ok()?;
    Some(PappusConfig { points: [p1.clone(), p2.clone(), p3.clone(), p4, p5.clone(), p6] })
}

enum Outcome<P> {
    Rejected,
    Held,
    Violated(PappusConfig<P>),
}

fn sample<G: Incidence>(geom: &G, s: &Sampling, i: u64) -> Outcome<PointOf<G>> {
    let mut rng = s.rng(i);
    let bound = s.rational_bound;
    let r = geom.ring();
    let l = geom.random_line(&mut rng, bound);
    let l2 = geom.random_line(&mut rng, bound);
    let mut on = |line: &LineOf<G>| geom.point_on(line, &r.random_element(&mut rng, bound));
    let (p1, p3, p5, p2) = (on(&l), on(&l), on(&l), on(&l2));
    if l == l2 {
        return Outcome::Rejected;
    }
    let Some(cfg) = complete(geom, &l2, [&p1, &p3, &p5], &p2) else {
        return Outcome::Rejected;
    };
    if validate_pappus(geom, &cfg).is_err() {
        return Outcome::Rejected;
    }
    match pappus_conclusion(geom, &cfg) {
        Ok(true) => Outcome::Held,
        _ => Outcome::Violated(cfg),
    }
}

/// Asserts the Pappus statement: exhaustively over every valid
/// configuration of a finite plane, or over seeded random configurations.
pub fn check_pappus<G: Incidence>(geom: &G, mode: Mode) -> Report {
    let mut report = Report::new();
    match mode {
        Mode::Exhaustive => {
            let lines = match geom.lines() {
                Ok(l) => l,
                Err(e) => {
                    report.record(SUITE, "pappus", 0, Some(e.to_string()));
                    return report;
                }
            };
            let pairs: Vec<(usize, usize)> =
                (0..lines.len()).flat_map(|i| (0..lines.len()).filter(move |&j| j != i).map(move |j| (i, j))).collect();
            let outcomes: Vec<(u64, Option<String>)> =
                pairs.par_iter().map(|&(i, j)| exhaust_pair(geom, &lines[i], &lines[j])).collect();
            let checked = outcomes.iter().map(|o| o.0).sum();
            report.record(SUITE, "pappus", checked, outcomes.into_iter().find_map(|o| o.1));
        }
        Mode::Sampled(s) => {
            let outcomes: Vec<Outcome<PointOf<G>>> =
                (0..s.samples).into_par_iter().map(|i| sample(geom, &s, i)).collect();
            let rejected = outcomes.iter().filter(|o| matches!(o, Outcome::Rejected)).count() as u64;
            let failure = outcomes.iter().find_map(|o| match o {
                Outcome::Violated(cfg) => Some(describe(geom, cfg)),
                _ => None,
            });
            report.record(SUITE, "pappus", s.samples - rejected, failure);
            report.push(SUITE, "rejected_samples", Status::Info, rejected.to_string(), s.samples);
        }
    }
    report
}

fn exhaust_pair<G: Incidence>(geom: &G, l: &LineOf<G>, l2: &LineOf<G>) -> (u64, Option<String>) {
    let crossing = match geom.intersect(l, l2) {
        Intersection::Point(x) => Some(x),
        _ => None,
    };
    let off = |line: &LineOf<G>| -> Vec<PointOf<G>> {
        geom.line_points(line).unwrap_or_default().into_iter().filter(|p| Some(p) != crossing.as_ref()).collect()
    };
    let (odd, even) = (off(l), off(l2));
    let mut checked = 0;
    for p1 in &odd {
        for p3 in odd.iter().filter(|p| *p != p1) {
            for p5 in odd.iter().filter(|p| *p != p1 && *p != p3) {
                for p2 in &even {
                    let Some(cfg) = complete(geom, l2, [p1, p3, p5], p2) else { continue };
                    if validate_pappus(geom, &cfg).is_err() {
                        continue;
                    }
                    checked += 1;
                    if !pappus_conclusion(geom, &cfg).unwrap_or(false) {
                        return (checked, Some(describe(geom, &cfg)));
                    }
                }
            }
        }
    }
    (checked, None)
}

/// Result of a countermodel hunt.
#[derive(Debug, Clone)]
pub struct PappusSearch<P> {
    pub witness: Option<PappusConfig<P>>,
    /// Samples drawn before the witness (inclusive), or the whole budget.
    pub samples_used: u64,
}

/// Seeded search for a configuration violating Pappus, re-verified by the
/// exact predicates before it is returned. `s.samples` is the budget.
pub fn find_pappus_violation<G: Incidence>(geom: &G, s: Sampling) -> PappusSearch<PointOf<G>> {
    let found = (0..s.samples).into_par_iter().find_map_first(|i| match sample(geom, &s, i) {
        Outcome::Violated(cfg) => Some((i, cfg)),
        _ => None,
    });
    match found {
        Some((i, cfg)) => {
            let verified = validate_pappus(geom, &cfg).is_ok() && pappus_conclusion(geom, &cfg) == Ok(false);
            assert!(verified, "countermodel failed re-verification");
            PappusSearch { witness: Some(cfg), samples_used: i + 1 }
        }
        None => PappusSearch { witness: None, samples_used: s.samples },
    }
}

/// Passes when a Pappus violation is found: the plane is shown non-Pappian.
pub fn check_pappus_countermodel<G: Incidence>(geom: &G, s: Sampling) -> Report {
    let search = find_pappus_violation(geom, s);
    let mut report = Report::new();
    match search.witness {
        Some(cfg) => report.push(SUITE, "countermodel", Status::Pass, describe(geom, &cfg), search.samples_used),
        None => report.push(
            SUITE,
            "countermodel",
            Status::Fail,
            format!("no violation in {} samples", search.samples_used),
            search.samples_used,
        ),
    }
    report
}
