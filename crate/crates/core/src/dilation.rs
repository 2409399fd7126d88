//! Dilations of the plane and the skew-field isomorphisms they induce.
//!
//! A dilation maps every line to a parallel line. It is fixed by a
//! reference pair `P ↦ P′` together with a fixed point `V` (homothety) or
//! no fixed point (translation), and every other image is traced from the
//! pair with joins and parallels. Restricted to a line `ℓ₁` it is a
//! bijection onto `ℓ₂ = δ(ℓ₁)` that carries the line algebra framed at
//! `(O, I)` onto the one framed at `(δ(O), δ(I))`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::DivisionRing;
use crate::incidence::{Incidence, LineOf, PointOf};
use crate::line_algebra::{AuxPolicy, LineAlgebra};
use crate::report::Report;
use crate::sampling::{Mode, Sampling};

const SUITE: &str = "dilation-iso";
/// Separates the operand streams from the dilation streams of a sampled run.
const PAIR_SEED_MASK: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DilationKind {
    Homothety,
    Translation,
    Identity,
}

impl fmt::Display for DilationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DilationKind::Homothety => "homothety",
            DilationKind::Translation => "translation",
            DilationKind::Identity => "identity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Generators<P> {
    Identity,
    Homothety { center: P, from: P, to: P },
    Translation { from: P, to: P },
}

/// An immutable dilation given by its generators.
#[derive(Debug, Clone)]
pub struct DilationMap<'g, G: Incidence> {
    geom: &'g G,
    gens: Generators<PointOf<G>>,
    /// `(R, δ(R))` for a point `R` off the reference line, used to trace
    /// points on that line.
    pivot: Option<(PointOf<G>, PointOf<G>)>,
}

impl<'g, G: Incidence> DilationMap<'g, G> {
    pub fn identity(geom: &'g G) -> Self {
        DilationMap { geom, gens: Generators::Identity, pivot: None }
    }

    /// The homothety with fixed point `V` sending `P` to `P′`.
    pub fn homothety(geom: &'g G, v: PointOf<G>, p: PointOf<G>, p2: PointOf<G>) -> Result<Self> {
        if p == v || p2 == v {
            return Err(Error::Degenerate("homothety reference point coincides with its fixed point"));
        }
        if p == p2 {
            return Err(Error::Degenerate("homothety with P' = P is the identity"));
        }
        let vp = geom.line_through(&v, &p)?;
        if !geom.contains(&vp, &p2) {
            return Err(Error::Degenerate("homothety points V, P, P' are not collinear"));
        }
        let r = geom.off_line_point(&vp, &v);
        let r_image = geom.meet(
            &geom.line_through(&v, &r)?,
            &geom.parallel_through(&p2, &geom.line_through(&p, &r)?),
            "homothety pivot",
        )?;
        Ok(DilationMap { geom, gens: Generators::Homothety { center: v, from: p, to: p2 }, pivot: Some((r, r_image)) })
    }

    /// The translation sending `P` to `P′`.
    pub fn translation(geom: &'g G, p: PointOf<G>, p2: PointOf<G>) -> Result<Self> {
        if p == p2 {
            return Err(Error::Degenerate("translation with P' = P is the identity"));
        }
        let pp = geom.line_through(&p, &p2)?;
        let r = geom.off_line_point(&pp, &p);
        let r_image = geom.meet(
            &geom.parallel_through(&r, &pp),
            &geom.parallel_through(&p2, &geom.line_through(&p, &r)?),
            "translation pivot",
        )?;
        Ok(DilationMap { geom, gens: Generators::Translation { from: p, to: p2 }, pivot: Some((r, r_image)) })
    }

    pub fn kind(&self) -> DilationKind {
        match self.gens {
            Generators::Identity => DilationKind::Identity,
            Generators::Homothety { .. } => DilationKind::Homothety,
            Generators::Translation { .. } => DilationKind::Translation,
        }
    }

    pub fn geometry(&self) -> &'g G {
        self.geom
    }

    pub fn center(&self) -> Option<&PointOf<G>> {
        match &self.gens {
            Generators::Homothety { center, .. } => Some(center),
            _ => None,
        }
    }

    /// `(P, P′)`, absent for the identity.
    pub fn reference_pair(&self) -> Option<(&PointOf<G>, &PointOf<G>)> {
        match &self.gens {
            Generators::Identity => None,
            Generators::Homothety { from, to, .. } | Generators::Translation { from, to } => Some((from, to)),
        }
    }

    /// The line `PP′` of a translation, whose parallel class is its direction.
    pub fn translation_direction(&self) -> Option<LineOf<G>> {
        match &self.gens {
            Generators::Translation { from, to } => self.geom.line_through(from, to).ok(),
            _ => None,
        }
    }

    /// The dilation undoing this one: the reference pair swapped.
    pub fn inverse(&self) -> Result<Self> {
        match &self.gens {
            Generators::Identity => Ok(Self::identity(self.geom)),
            Generators::Homothety { center, from, to } => {
                Self::homothety(self.geom, center.clone(), to.clone(), from.clone())
            }
            Generators::Translation { from, to } => Self::translation(self.geom, to.clone(), from.clone()),
        }
    }

    pub fn apply(&self, q: &PointOf<G>) -> Result<PointOf<G>> {
        let g = self.geom;
        match &self.gens {
            Generators::Identity => Ok(q.clone()),
            Generators::Homothety { center, from, to } => {
                if q == center {
                    return Ok(q.clone());
                }
                let vq = g.line_through(center, q)?;
                let (src, dst) = if g.contains(&vq, from) {
                    let (r, r_image) = self.pivot.as_ref().expect("homothety pivot");
                    (r, r_image)
                } else {
                    (from, to)
                };
                g.meet(&vq, &g.parallel_through(dst, &g.line_through(src, q)?), "homothety trace")
            }
            Generators::Translation { from, to } => {
                if q == from {
                    return Ok(to.clone());
                }
                let pp = g.line_through(from, to)?;
                let (src, dst) = if g.contains(&pp, q) {
                    let (r, r_image) = self.pivot.as_ref().expect("translation pivot");
                    (r, r_image)
                } else {
                    (from, to)
                };
                g.meet(
                    &g.parallel_through(q, &pp),
                    &g.parallel_through(dst, &g.line_through(src, q)?),
                    "translation trace",
                )
            }
        }
    }

    /// The image line, spanned by the images of two of its points.
    pub fn apply_line(&self, l: &LineOf<G>) -> Result<LineOf<G>> {
        let r = self.geom.ring();
        let a = self.apply(&self.geom.point_on(l, &r.zero()))?;
        let b = self.apply(&self.geom.point_on(l, &r.one()))?;
        self.geom.line_through(&a, &b)
    }

    /// Restriction to `ℓ₁`, tabulated on finite planes.
    pub fn restrict(&self, l1: &LineOf<G>) -> Result<Restriction<G>> {
        let target = self.apply_line(l1)?;
        let images = match self.geom.line_points(l1) {
            Ok(points) => {
                let mut pairs = Vec::with_capacity(points.len());
                for p in points {
                    let image = self.apply(&p)?;
                    if !self.geom.contains(&target, &image) {
                        return Err(Error::ConstructionInvariant(format!(
                            "image {} of {} leaves {}",
                            self.geom.format_point(&image),
                            self.geom.format_point(&p),
                            self.geom.format_line(&target)
                        )));
                    }
                    pairs.push((p, image));
                }
                Some(pairs)
            }
            Err(_) => None,
        };
        Ok(Restriction { source: l1.clone(), target, images })
    }

    pub fn describe(&self) -> String {
        let f = |p| self.geom.format_point(p);
        match &self.gens {
            Generators::Identity => "identity".into(),
            Generators::Homothety { center, from, to } => {
                format!("homothety V={} P={} P'={}", f(center), f(from), f(to))
            }
            Generators::Translation { from, to } => format!("translation P={} P'={}", f(from), f(to)),
        }
    }
}

/// A dilation restricted to a line.
#[derive(Debug, Clone)]
pub struct Restriction<G: Incidence> {
    pub source: LineOf<G>,
    pub target: LineOf<G>,
    /// `(A, δ(A))` for every `A ∈ ℓ₁` on finite planes.
    pub images: Option<Vec<(PointOf<G>, PointOf<G>)>>,
}

impl<G: Incidence> Restriction<G> {
    /// Whether the images are pairwise distinct, hence (equal sizes) onto
    /// `ℓ₂`. `None` on infinite planes.
    pub fn is_bijective(&self) -> Option<bool> {
        let images = self.images.as_ref()?;
        let distinct: HashSet<&PointOf<G>> = images.iter().map(|(_, b)| b).collect();
        Some(distinct.len() == images.len())
    }
}

/// Checks that `δ` restricted to `K₁`'s line is a bijection satisfying
/// `δ(A + C) = δ(A) + δ(C)` and `δ(A ∗ C) = δ(A) ∗ δ(C)`, where the right-hand
/// sides live in `K₂` framed at `(δ(O), δ(I))`. `K₂` is built twice: with the
/// transported auxiliary point `δ(B)` and with the deterministic choice.
pub fn check_isomorphism<G: Incidence>(delta: &DilationMap<'_, G>, k1: &LineAlgebra<'_, G>, mode: Mode) -> Report {
    let mut report = Report::new();
    let name = delta.describe();
    let fail_all = |report: &mut Report, e: Error| {
        for case in ["restriction_bijective", "add_homomorphism", "mul_homomorphism"] {
            report.record(SUITE, case, 0, Some(format!("{name}: {e}")));
        }
    };
    let built = (|| {
        let restriction = delta.restrict(k1.line())?;
        let o2 = delta.apply(k1.zero())?;
        let i2 = delta.apply(k1.one())?;
        let b2 = delta.apply(&k1.aux_points()[0])?;
        let g = k1.geometry();
        let transported =
            LineAlgebra::new(g, restriction.target.clone(), o2.clone(), i2.clone(), AuxPolicy::Explicit(b2))?;
        let deterministic = LineAlgebra::new(g, restriction.target.clone(), o2, i2, AuxPolicy::DeterministicFirst)?;
        Ok((restriction, transported, deterministic))
    })();
    let (restriction, k2s, k2d) = match built {
        Ok(b) => b,
        Err(e) => {
            fail_all(&mut report, e);
            return report;
        }
    };

    let pairs: Vec<(PointOf<G>, PointOf<G>)> = match (&restriction.images, mode) {
        (Some(images), Mode::Exhaustive) => {
            images.iter().flat_map(|a| images.iter().map(move |c| (a.0.clone(), c.0.clone()))).collect()
        }
        (_, Mode::Sampled(s)) => sample_pairs(k1, &s),
        (None, Mode::Exhaustive) => {
            fail_all(&mut report, Error::Unsupported("exhaustive check on an infinite line"));
            return report;
        }
    };

    match restriction.is_bijective() {
        Some(ok) => report.record(
            SUITE,
            "restriction_bijective",
            restriction.images.as_ref().map_or(0, |v| v.len() as u64),
            (!ok).then(|| format!("{name}: images on {} collide", delta.geometry().format_line(&restriction.target))),
        ),
        None => {
            let failure = sampled_bijectivity(delta, &restriction, &pairs);
            report.record(SUITE, "restriction_bijective", pairs.len() as u64, failure.map(|w| format!("{name}: {w}")));
        }
    }

    let g = k1.geometry();
    let f = |p: &PointOf<G>| g.format_point(p);
    let homomorphism = |op: &str| -> Option<String> {
        pairs.par_iter().find_map_first(|(a, c)| {
            let run = || -> Result<Option<String>> {
                let (lhs, da, dc) = match op {
                    "+" => (delta.apply(&k1.add(a, c)?)?, delta.apply(a)?, delta.apply(c)?),
                    _ => (delta.apply(&k1.mul(a, c)?)?, delta.apply(a)?, delta.apply(c)?),
                };
                for (label, k2) in [("transported B", &k2s), ("deterministic B", &k2d)] {
                    let rhs = if op == "+" { k2.add(&da, &dc)? } else { k2.mul(&da, &dc)? };
                    if rhs != lhs {
                        return Ok(Some(format!(
                            "{name}: A={} C={} gives d(A{op}C)={} but d(A){op}d(C)={} ({label})",
                            f(a),
                            f(c),
                            f(&lhs),
                            f(&rhs)
                        )));
                    }
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("{name}: A={} C={}: {e}", f(a), f(c))))
        })
    };
    report.record(SUITE, "add_homomorphism", pairs.len() as u64, homomorphism("+"));
    report.record(SUITE, "mul_homomorphism", pairs.len() as u64, homomorphism("*"));
    report
}

fn sample_pairs<G: Incidence>(k1: &LineAlgebra<'_, G>, s: &Sampling) -> Vec<(PointOf<G>, PointOf<G>)> {
    let g = k1.geometry();
    (0..s.samples)
        .map(|i| {
            let mut rng = s.rng(i);
            let mut on = || g.point_on(k1.line(), &g.ring().random_element(&mut rng, s.rational_bound));
            (on(), on())
        })
        .collect()
}

/// Injectivity on the sampled pairs and surjectivity through the inverse
/// dilation.
fn sampled_bijectivity<G: Incidence>(
    delta: &DilationMap<'_, G>,
    restriction: &Restriction<G>,
    pairs: &[(PointOf<G>, PointOf<G>)],
) -> Option<String> {
    let g = delta.geometry();
    let inverse = match delta.inverse() {
        Ok(inv) => inv,
        Err(e) => return Some(e.to_string()),
    };
    pairs.par_iter().find_map_first(|(a, c)| {
        let run = || -> Result<Option<String>> {
            let (da, dc) = (delta.apply(a)?, delta.apply(c)?);
            if !g.contains(&restriction.target, &da) {
                return Ok(Some(format!("image of {} leaves the target line", g.format_point(a))));
            }
            if a != c && da == dc {
                return Ok(Some(format!("{} and {} share an image", g.format_point(a), g.format_point(c))));
            }
            if inverse.apply(&da)? != *a {
                return Ok(Some(format!("{} is not recovered by the inverse", g.format_point(a))));
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    })
}

/// Every distinct dilation of a finite plane: identity, translations, then
/// homotheties, each once. Two generator sets are merged when their point
/// images agree everywhere.
pub fn enumerate_dilations<G: Incidence>(geom: &G) -> Result<Vec<DilationMap<'_, G>>> {
    let points = geom.points()?;
    let index: HashMap<&PointOf<G>, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut candidates = Vec::new();
    for p in &points {
        for p2 in points.iter().filter(|x| *x != p) {
            candidates.push((None, p.clone(), p2.clone()));
        }
    }
    for v in &points {
        for p in points.iter().filter(|x| *x != v) {
            for p2 in geom.line_points(&geom.line_through(v, p)?)? {
                if p2 != *v && p2 != *p {
                    candidates.push((Some(v.clone()), p.clone(), p2));
                }
            }
        }
    }

    let built: Vec<(DilationMap<'_, G>, Vec<usize>)> = candidates
        .into_par_iter()
        .map(|(v, p, p2)| {
            let map = match v {
                None => DilationMap::translation(geom, p, p2)?,
                Some(v) => DilationMap::homothety(geom, v, p, p2)?,
            };
            let table = points
                .iter()
                .map(|q| {
                    let image = map.apply(q)?;
                    index
                        .get(&image)
                        .copied()
                        .ok_or_else(|| Error::ConstructionInvariant("image outside the plane".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((map, table))
        })
        .collect::<Result<_>>()?;

    let identity_table: Vec<usize> = (0..points.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity_table]);
    let mut out = vec![DilationMap::identity(geom)];
    for (map, table) in built {
        if seen.insert(table) {
            out.push(map);
        }
    }
    Ok(out)
}

/// [`check_isomorphism`] over every dilation of a finite plane, or over
/// seeded random dilations otherwise, merged into one row per property.
pub fn check_all_dilations<G: Incidence>(k1: &LineAlgebra<'_, G>, mode: Mode) -> Report {
    let geom = k1.geometry();
    match mode {
        Mode::Exhaustive => match enumerate_dilations(geom) {
            Ok(maps) => {
                let reports: Vec<Report> =
                    maps.par_iter().map(|d| check_isomorphism(d, k1, Mode::Exhaustive)).collect();
                Report::merge(reports)
            }
            Err(e) => {
                let mut r = Report::new();
                r.record(SUITE, "enumeration", 0, Some(e.to_string()));
                r
            }
        },
        Mode::Sampled(s) => {
            let reports: Vec<Report> = (0..s.samples)
                .into_par_iter()
                .filter_map(|i| {
                    let delta = random_dilation(geom, &s, i)?;
                    let pair = Sampling { seed: (s.seed ^ PAIR_SEED_MASK).wrapping_add(i), samples: 1, ..s };
                    Some(check_isomorphism(&delta, k1, Mode::Sampled(pair)))
                })
                .collect();
            Report::merge(reports)
        }
    }
}

/// Homothety for even `i`, translation for odd `i`; `None` when the draw
/// is degenerate.
pub fn random_dilation<'g, G: Incidence>(geom: &'g G, s: &Sampling, i: u64) -> Option<DilationMap<'g, G>> {
    let mut rng = s.rng(i);
    let bound = s.rational_bound;
    let p = geom.random_point(&mut rng, bound);
    let q = geom.random_point(&mut rng, bound);
    if i % 2 == 1 {
        return DilationMap::translation(geom, p, q).ok();
    }
    let vp = geom.line_through(&p, &q).ok()?;
    let p2 = geom.point_on(&vp, &geom.ring().random_element(&mut rng, bound));
    DilationMap::homothety(geom, p, q, p2).ok()
}
