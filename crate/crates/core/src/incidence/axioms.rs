use std::collections::HashMap;

use rayon::prelude::*;

use super::{Incidence, Intersection, LineOf, Point, PointOf};
use crate::error::Result;
use crate::field::DivisionRing;
use crate::report::{Report, Status};
use crate::sampling::{Mode, Sampling};

const SUITE: &str = "axioms";

/// Enumerated points and lines of a finite plane with a point-membership
/// bitset per line, built from the geometry's own `contains`.
pub struct PlaneIndex<G: Incidence> {
    pub points: Vec<PointOf<G>>,
    pub lines: Vec<LineOf<G>>,
    lookup: HashMap<PointOf<G>, usize>,
    members: Vec<Vec<u64>>,
}

impl<G: Incidence> PlaneIndex<G> {
    pub fn build(geom: &G) -> Result<Self> {
        let points = geom.points()?;
        let lines = geom.lines()?;
        let words = points.len().div_ceil(64);
        let members = lines
            .par_iter()
            .map(|l| {
                let mut bits = vec![0u64; words];
                for (i, p) in points.iter().enumerate() {
                    if geom.contains(l, p) {
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
                bits
            })
            .collect();
        let lookup = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(PlaneIndex { points, lines, lookup, members })
    }

    pub fn point_index(&self, p: &PointOf<G>) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn on_line(&self, line: usize, point: usize) -> bool {
        self.members[line][point / 64] >> (point % 64) & 1 == 1
    }

    pub fn disjoint(&self, l1: usize, l2: usize) -> bool {
        self.members[l1].iter().zip(&self.members[l2]).all(|(a, b)| a & b == 0)
    }

    pub fn line_size(&self, line: usize) -> u32 {
        self.members[line].iter().map(|w| w.count_ones()).sum()
    }
}

/// Checks the three affine-plane axioms: a unique line through two points,
/// Playfair's parallel axiom, and the existence of three non-collinear points.
pub fn check_affine_axioms<G: Incidence>(geom: &G, mode: Mode) -> Report {
    match mode {
        Mode::Exhaustive => match PlaneIndex::build(geom) {
            Ok(index) => exhaustive(geom, &index),
            Err(e) => {
                let mut r = Report::new();
                r.record(SUITE, "enumeration", 0, Some(e.to_string()));
                r
            }
        },
        Mode::Sampled(s) => sampled(geom, s),
    }
}

fn exhaustive<G: Incidence>(geom: &G, index: &PlaneIndex<G>) -> Report {
    let mut report = Report::new();
    let q = geom.ring().order().unwrap_or(0) as usize;
    let n = index.points.len();
    let fmt = |p: &PointOf<G>| geom.format_point(p);

    let bad_size = (0..index.lines.len()).find(|&l| index.line_size(l) as usize != q);
    let count_ok = n == q * q && index.lines.len() == q * q + q;
    report.record(
        SUITE,
        "enumeration",
        index.lines.len() as u64,
        match (count_ok, bad_size) {
            (false, _) => Some(format!("{n} points, {} lines", index.lines.len())),
            (true, Some(l)) => Some(format!("{} has {} points", geom.format_line(&index.lines[l]), index.line_size(l))),
            (true, None) => None,
        },
    );

    // 1°: every pair of distinct points lies on exactly one line, and
    // line_through names that line
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        (i + 1..n).find_map(|j| {
            let on_both: Vec<usize> =
                (0..index.lines.len()).filter(|&l| index.on_line(l, i) && index.on_line(l, j)).collect();
            let (p, q) = (&index.points[i], &index.points[j]);
            if on_both.len() != 1 {
                return Some(format!("{} {} lie on {} lines", fmt(p), fmt(q), on_both.len()));
            }
            match geom.line_through(p, q) {
                Ok(l) if l == index.lines[on_both[0]] => None,
                Ok(l) => Some(format!("line_through({}, {}) = {}", fmt(p), fmt(q), geom.format_line(&l))),
                Err(e) => Some(format!("line_through({}, {}): {e}", fmt(p), fmt(q))),
            }
        })
    });
    report.record(SUITE, "unique_line", (n * n.saturating_sub(1) / 2) as u64, failure);

    // 2°: through P off ℓ exactly one line misses ℓ; parallel_through
    // returns it (or ℓ itself when P ∈ ℓ)
    let lines = index.lines.len();
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        let p = &index.points[i];
        (0..lines).find_map(|l| {
            let par = geom.parallel_through(p, &index.lines[l]);
            if index.on_line(l, i) {
                return (par != index.lines[l]).then(|| {
                    format!(
                        "parallel_through({}, {}) = {}",
                        fmt(p),
                        geom.format_line(&index.lines[l]),
                        geom.format_line(&par)
                    )
                });
            }
            let missing: Vec<usize> = (0..lines).filter(|&m| index.on_line(m, i) && index.disjoint(m, l)).collect();
            if missing.len() != 1 {
                return Some(format!(
                    "{} has {} lines missing {}",
                    fmt(p),
                    missing.len(),
                    geom.format_line(&index.lines[l])
                ));
            }
            (par != index.lines[missing[0]]).then(|| {
                format!(
                    "parallel_through({}, {}) = {}",
                    fmt(p),
                    geom.format_line(&index.lines[l]),
                    geom.format_line(&par)
                )
            })
        })
    });
    report.record(SUITE, "playfair", (n * lines) as u64, failure);

    // 3°: some triple is not contained in any line
    let triple = (0..n).find_map(|i| {
        (i + 1..n).find_map(|j| {
            (j + 1..n)
                .find(|&k| !(0..lines).any(|l| index.on_line(l, i) && index.on_line(l, j) && index.on_line(l, k)))
                .map(|k| (i, j, k))
        })
    });
    match triple {
        Some((i, j, k)) => report.push(
            SUITE,
            "three_noncollinear",
            Status::Pass,
            format!("{} {} {}", fmt(&index.points[i]), fmt(&index.points[j]), fmt(&index.points[k])),
            1,
        ),
        None => report.record(SUITE, "three_noncollinear", 0, Some("every triple is collinear".into())),
    }
    report
}

fn sampled<G: Incidence>(geom: &G, s: Sampling) -> Report {
    let mut report = Report::new();
    let fmt = |p: &PointOf<G>| geom.format_point(p);
    let bound = s.rational_bound;

    let failure = (0..s.samples).into_par_iter().find_map_first(|i| {
        let mut rng = s.rng(i);
        let p = geom.random_point(&mut rng, bound);
        let q = geom.random_point(&mut rng, bound);
        if p == q {
            return None;
        }
        let l = match geom.line_through(&p, &q) {
            Ok(l) => l,
            Err(e) => return Some(format!("line_through({}, {}): {e}", fmt(&p), fmt(&q))),
        };
        if !geom.contains(&l, &p) || !geom.contains(&l, &q) {
            return Some(format!("{} misses {} or {}", geom.format_line(&l), fmt(&p), fmt(&q)));
        }
        if geom.line_through(&q, &p).ok() != Some(l.clone()) {
            return Some(format!("line through {} {} depends on order", fmt(&p), fmt(&q)));
        }
        // any other line through P that also holds Q must be the same line
        let r = geom.random_point(&mut rng, bound);
        if r != p {
            if let Ok(m) = geom.line_through(&p, &r) {
                if geom.contains(&m, &q) && m != l {
                    return Some(format!("two lines through {} {}", fmt(&p), fmt(&q)));
                }
            }
        }
        let t = geom.ring().random_element(&mut rng, bound);
        let on = geom.point_on(&l, &t);
        (!geom.contains(&l, &on)).then(|| format!("{} missing its own point {}", geom.format_line(&l), fmt(&on)))
    });
    report.record(SUITE, "unique_line", s.samples, failure);

    let failure = (0..s.samples).into_par_iter().find_map_first(|i| {
        let mut rng = s.rng(i);
        let l = geom.random_line(&mut rng, bound);
        // half of the samples put P on ℓ
        let p = if i % 2 == 0 {
            geom.random_point(&mut rng, bound)
        } else {
            let t = geom.ring().random_element(&mut rng, bound);
            geom.point_on(&l, &t)
        };
        let par = geom.parallel_through(&p, &l);
        let describe =
            || format!("parallel_through({}, {}) = {}", fmt(&p), geom.format_line(&l), geom.format_line(&par));
        if !geom.contains(&par, &p) {
            return Some(describe());
        }
        if geom.contains(&l, &p) {
            return (par != l).then(describe);
        }
        if geom.intersect(&l, &par) != Intersection::Parallel {
            return Some(describe());
        }
        let r = geom.random_point(&mut rng, bound);
        if r == p {
            return None;
        }
        let m = geom.line_through(&p, &r).ok()?;
        (m != par && geom.is_parallel(&m, &l)).then(|| {
            format!("{} and {} both miss {}", geom.format_line(&m), geom.format_line(&par), geom.format_line(&l))
        })
    });
    report.record(SUITE, "playfair", s.samples, failure);

    let r = geom.ring();
    let (o, e1, e2) = (Point::new(r.zero(), r.zero()), Point::new(r.one(), r.zero()), Point::new(r.zero(), r.one()));
    let failure = match geom.line_through(&o, &e1) {
        Ok(l) if !geom.contains(&l, &e2) => None,
        _ => Some(format!("{} {} {} collinear", fmt(&o), fmt(&e1), fmt(&e2))),
    };
    match failure {
        None => {
            report.push(SUITE, "three_noncollinear", Status::Pass, format!("{} {} {}", fmt(&o), fmt(&e1), fmt(&e2)), 1)
        }
        Some(w) => report.record(SUITE, "three_noncollinear", 1, Some(w)),
    }
    report
}
